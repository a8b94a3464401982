//! The injective map from BWT run boundaries to maximal pairs.
//!
//! Run with: `cargo run --example run_boundary_map`

use stringology::bwt;
use stringology::bwt_map::{check_injectivity, period_certificates, run_boundary_pairs};
use stringology::corpus;
use stringology::lce::LceIndex;
use stringology::text::{render_human, Text};

fn main() {
    let t = Text::new(corpus::fibonacci(9)).unwrap();
    let index = LceIndex::new(&t);
    println!("text: {}", render_human(t.bytes()));
    println!("r   : {}", bwt::bwt(&t).r);

    // Each boundary between two BWT runs corresponds to two adjacent rows
    // whose last symbols differ; when the rows share a prefix of length
    // L >= 1 the two suffix starts form a maximal pair.
    let boundaries = run_boundary_pairs(&t, &index);
    for b in &boundaries {
        match b.pair {
            Some(p) => println!(
                "  boundary at row {:>2}: pair n={:<3} m={:<3} l={}",
                b.boundary_index, p.n, p.m, p.l
            ),
            None => println!("  boundary at row {:>2}: rows share no prefix", b.boundary_index),
        }
    }

    // The map is injective, and the L=0 case happens at most |alphabet|
    // times, which is what ties r to the number of maximal pairs.
    let report = check_injectivity(&t, &boundaries);
    println!(
        "injective={} zero-lcp={}/{} (cap {})",
        report.injective, report.zero_lcp_count, report.boundary_count, report.zero_lcp_cap
    );

    // For every period of an induced pair's body, at least one occurrence
    // extends by at most one period length.
    for b in &boundaries {
        let Some(p) = b.pair else { continue };
        for c in period_certificates(&t, p) {
            println!(
                "  pair ({},{},{}) period {}: added {}/{} ok={}",
                p.n, p.m, p.l, c.period, c.added_n, c.added_m, c.ok
            );
        }
    }
}
