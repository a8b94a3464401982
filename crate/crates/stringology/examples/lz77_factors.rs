//! Self-referential LZ77 factorization.
//!
//! Run with: `cargo run --example lz77_factors`

use stringology::corpus;
use stringology::lz77::{lz77, FactorKind};
use stringology::text::{render_human, Text};

fn main() {
    let t = Text::new(corpus::paper_example()).unwrap();
    let parse = lz77(&t).unwrap();
    println!("text : {}", render_human(t.bytes()));
    println!("z    : {}", parse.z);
    for f in &parse.factors {
        let kind = match f.kind {
            FactorKind::FreshSymbol => "fresh",
            FactorKind::RepeatedPrefix => "copy ",
        };
        println!(
            "  [{kind}] start={:>2} len={:>2} {}",
            f.start,
            f.length,
            render_human(t.slice(f.start, f.start + f.length - 1))
        );
    }

    // Self-reference in action: the copied region of a factor may overlap
    // the factor itself, so a^k compresses to two factors.
    let unary = Text::new(corpus::unary_power(16)).unwrap();
    let parse = lz77(&unary).unwrap();
    println!();
    println!("a^16 factors into {} pieces:", parse.z);
    for f in &parse.factors {
        println!("  start={} len={}", f.start, f.length);
    }
}
