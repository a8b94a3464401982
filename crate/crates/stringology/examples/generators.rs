//! The deterministic string generators backing the test corpus.
//!
//! Run with: `cargo run --example generators`

use stringology::bwt;
use stringology::corpus::{self, Family, GeneratorSpec};
use stringology::text::{render_human, Text};

fn main() {
    // Fibonacci words under the convention F_1 = "b", F_2 = "a": the
    // cyclic BWT of F_n is exactly b^{f_{n-2}} a^{f_{n-1}}.
    for n in 5..=9 {
        let t = Text::new(corpus::fibonacci(n)).unwrap();
        let cyclic = bwt::cyclic_bwt(&t);
        println!(
            "F_{n}: |F|={:>2} cyclic BWT = {}",
            t.len(),
            render_human(&cyclic.bwt)
        );
    }

    println!();
    println!("thue-morse 32 : {}", render_human(&corpus::thue_morse(32)));
    println!("unary power 8 : {}", render_human(&corpus::unary_power(8)));
    println!("worked example: {}", render_human(&corpus::paper_example()));

    // The spec form is what the CLI uses; the same spec always yields the
    // same bytes.
    let spec = GeneratorSpec { family: Family::Random, parameter: 24, seed: 42, alphabet: 3 };
    let r1 = corpus::generate(&spec).unwrap();
    let r2 = corpus::generate(&spec).unwrap();
    assert_eq!(r1.bytes(), r2.bytes());
    println!("random(24,3,42): {}", render_human(r1.bytes()));
}
