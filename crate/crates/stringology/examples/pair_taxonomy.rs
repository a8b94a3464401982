//! Classifying maximal pairs relative to LZ77 factor boundaries.
//!
//! Run with: `cargo run --example pair_taxonomy`

use stringology::lce::LceIndex;
use stringology::lz77::lz77_from;
use stringology::periodicity::q_free_witness;
use stringology::repeats::{enumerate_maximal_pairs, ENUMERATION_CAP};
use stringology::taxonomy::{classify, crossing_extensions, pairs_from_extension_pair};
use stringology::text::{render_human, Text};

fn main() {
    let t = Text::new(b"baaaacdaaaae".to_vec()).unwrap();
    let index = LceIndex::new(&t);
    let parse = lz77_from(&t, &index);
    let (q, _) = q_free_witness(&t, 1024).unwrap();
    println!("text: {}  (z={}, q={})", render_human(t.bytes()), parse.z, q);

    // Every pair is classified relative to a choice of one index inside
    // each occurrence interval; LZ77 factor starts are the canonical
    // choice. The labels drive the per-start-pair counting bounds.
    let starts = parse.factor_starts().to_vec();
    for pair in enumerate_maximal_pairs(&t, ENUMERATION_CAP).unwrap() {
        let i = starts.iter().copied().find(|&i| pair.n <= i && i <= pair.n + pair.l);
        let j = starts.iter().copied().find(|&j| pair.m <= j && j <= pair.m + pair.l);
        let (Some(i), Some(j)) = (i, j) else { continue };
        let c = classify(&t, pair, i, j, q, &parse).unwrap();
        println!(
            "  ({:>2},{:>2},{}) body={:<6} split={} labels={:?}",
            pair.n,
            pair.m,
            pair.l,
            render_human(t.slice(pair.n, pair.n + pair.l - 1)),
            c.split_index,
            c.labels
        );
    }

    // Fourth-power machinery: the periodic extensions crossing an index,
    // and the (at most four) maximal pairs a compatible extension pair can
    // produce.
    let exts = crossing_extensions(&t, 3).unwrap();
    println!("extensions crossing index 3: {}", exts.len());
    for e in &exts {
        println!("  period={} padded=[{},{}]", e.delta, e.padded.0, e.padded.1);
    }
    if exts.len() >= 1 {
        let produced = pairs_from_extension_pair(&t, &index, &exts[0], &exts[0]).unwrap();
        println!("pairs produced by the pair (e, e): {produced:?}");
    }
}
