//! Minimal periods, fractional exponents and maximal periodic extensions.
//!
//! Run with: `cargo run --example periodic_extensions`

use stringology::periodicity::{
    exponent, fourth_power_runs, max_exponent, maximal_periodic_extension, min_period,
    MAX_EXPONENT_CAP,
};
use stringology::text::{render_human, Text};

fn main() {
    // Exponents are exact rationals: |w| divided by the minimal period.
    for w in [&b"abaababaab"[..], b"aaaa", b"abcabcab"] {
        println!(
            "{:<12} min_period={} exponent={}",
            render_human(w),
            min_period(w),
            exponent(w)
        );
    }

    // The highest-exponent substring of a text, with a witness.
    let t = Text::new(b"xabababay".to_vec()).unwrap();
    let (exp, witness) = max_exponent(&t, MAX_EXPONENT_CAP).unwrap();
    println!();
    println!("text: {}", render_human(t.bytes()));
    println!(
        "max exponent {} at start={} length={} period={}",
        exp, witness.start, witness.length, witness.period
    );

    // The maximal 2-periodic extension of the occurrence [2,5] of "abab"
    // grows it to the full "abababa" region; the padded form adds one
    // symbol of context on each side.
    let ext = maximal_periodic_extension(&t, 2, 5, Some(2)).unwrap();
    println!(
        "2-periodic extension of [2,5]: core=[{},{}] padded=[{},{}]",
        ext.core.0, ext.core.1, ext.padded.0, ext.padded.1
    );

    // All maximal runs of exponent >= 4, as padded extensions.
    let u = Text::new(b"baaaabababababc".to_vec()).unwrap();
    println!();
    println!("fourth-power runs of {}:", render_human(u.bytes()));
    for e in fourth_power_runs(&u) {
        println!(
            "  period={} core=[{},{}] padded=[{},{}]",
            e.delta, e.core.0, e.core.1, e.padded.0, e.padded.1
        );
    }
}
