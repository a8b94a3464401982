//! Evaluating every bound row on a text and on a small corpus.
//!
//! Run with: `cargo run --example verify_bounds`

use stringology::bounds;
use stringology::corpus;
use stringology::text::Text;

fn main() {
    // A single text: each row reports the measured quantity, the exact
    // bound (decided with interval arithmetic, never floating point), and
    // the verdict.
    let t = Text::new(corpus::paper_example()).unwrap();
    let report = bounds::verify(&t, "worked-example", None).unwrap();
    println!(
        "n={} z={} r={} q={}",
        report.length, report.z, report.r, report.q_effective
    );
    for b in &report.bounds {
        println!(
            "  {:<4} measured={:>6} bound={:>14.3} holds={:?}",
            b.name,
            b.measured,
            b.bound.unwrap_or(f64::NAN),
            b.holds
        );
    }
    assert!(report.all_hold());

    // A corpus: rows are verified per text and the tightest ratio per
    // bound is tracked across the whole collection.
    let texts: Vec<(String, Text)> = vec![
        ("fib-10".into(), Text::new(corpus::fibonacci(10)).unwrap()),
        ("tm-128".into(), Text::new(corpus::thue_morse(128)).unwrap()),
        ("unary-32".into(), Text::new(corpus::unary_power(32)).unwrap()),
    ];
    let corpus_report = bounds::verify_corpus(&texts, None);
    println!();
    println!("corpus all_hold={}", corpus_report.all_hold());
    for row in &corpus_report.tightness {
        println!("  {:<4} max ratio {:.4} on {}", row.name, row.max_ratio, row.text_id);
    }
}
