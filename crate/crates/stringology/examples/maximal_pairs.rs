//! Maximal pairs, their copy classes, maximal repeats and CDAWG counts.
//!
//! Run with: `cargo run --example maximal_pairs`

use stringology::lce::LceIndex;
use stringology::repeats::{
    cdawg_stats, enumerate_maximal_pairs, enumerate_maximal_repeats, ClassTable, ENUMERATION_CAP,
};
use stringology::text::{render_human, Text};

fn main() {
    let t = Text::new(b"abracadabra".to_vec()).unwrap();
    println!("text: {}", render_human(t.bytes()));

    // A maximal pair is two occurrences of the same substring that cannot
    // be extended together on either side (positions 0 and |S|+1 hold a
    // virtual sentinel, so occurrences touching the ends qualify too).
    let pairs = enumerate_maximal_pairs(&t, ENUMERATION_CAP).unwrap();
    let index = LceIndex::new(&t);
    let mut classes = ClassTable::new(&t, &index);
    println!("maximal pairs:");
    for p in &pairs {
        println!(
            "  n={:>2} m={:>2} l={} body={} class={}",
            p.n,
            p.m,
            p.l,
            render_human(t.slice(p.n, p.n + p.l - 1)),
            classes.class_of(*p)
        );
    }
    println!("substantially different classes: {}", classes.class_count());

    // Maximal repeats are the substrings occurring in maximal pairs; their
    // right extensions determine the arc count of the compacted DAWG.
    let repeats = enumerate_maximal_repeats(&t, ENUMERATION_CAP).unwrap();
    println!("maximal repeats:");
    for r in &repeats {
        println!(
            "  {} x{} (left {:?}, right {:?})",
            render_human(&r.content),
            r.occurrence_count,
            render_human(&r.left_extensions),
            render_human(&r.right_extensions),
        );
    }
    let stats = cdawg_stats(&t, ENUMERATION_CAP).unwrap();
    println!(
        "CDAWG: {} internal nodes, {} arcs total",
        stats.maximal_repeat_count, stats.arc_total
    );
}
