//! Burrows-Wheeler transform of `S$` and its run decomposition.
//!
//! Run with: `cargo run --example bwt_runs`

use stringology::bwt;
use stringology::corpus;
use stringology::text::{render_human, Text};

fn main() {
    // The sentinel-free cyclic variant on a Fibonacci word groups the
    // alphabet into exactly two runs.
    let fib = Text::new(corpus::fibonacci(10)).unwrap();
    let cyclic = bwt::cyclic_bwt(&fib);
    println!("fibonacci word F_10       : {}", render_human(fib.bytes()));
    println!("cyclic BWT                : {}", render_human(&cyclic.bwt));
    println!("cyclic runs               : {}", cyclic.r);

    // The standard transform of S$ sorts the rotations of the
    // sentinel-terminated string; `r` counts its maximal equal-symbol runs.
    let t = Text::new(b"banana".to_vec()).unwrap();
    let profile = bwt::bwt(&t);
    println!();
    println!("text                      : {}", render_human(t.bytes()));
    println!("BWT of S$                 : {}", render_human(&profile.bwt));
    println!("r                         : {}", profile.r);
    for run in &profile.runs {
        println!(
            "  run {} x{} starting at row {}",
            render_human(&[run.symbol]),
            run.length,
            run.start
        );
    }

    // The transform is invertible.
    let back = bwt::invert_bwt(&profile.bwt);
    assert_eq!(back, t.bytes());
    println!("inverted back             : {}", render_human(&back));
}
