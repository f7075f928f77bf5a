//! Try to shrink the assembled counterexample by single vertex deletions
//! and edge contractions that keep it planar, free of 4- and 5-cycles and
//! not 3-colorable.
//!
//!     cargo run --release --example shrink [-- BUDGET]

use std::path::Path;

use steinberg::gadget::{build_counterexample, build_g2};
use steinberg::search::{find_frozen, shrink_counterexample, DATA_DIR};

fn main() {
    let budget = std::env::args().nth(1).map_or(1000, |s| s.parse().expect("budget is a number"));
    let (_, g1) = find_frozen(Path::new(DATA_DIR), "g1").unwrap().expect("frozen g1");
    let g = build_counterexample(&build_g2(&g1).unwrap()).unwrap();
    let out = shrink_counterexample(&g, budget).expect("input is a counterexample");
    println!(
        "{} -> {} vertices, {} steps, {} evaluations, fixed point: {}",
        g.n(),
        out.graph.n(),
        out.steps.len(),
        out.evaluations,
        out.fixed_point
    );
    for s in out.steps {
        println!("  {s}");
    }
}
