//! Assemble the final graph from the frozen first gadget and check it.
//!
//!     cargo run --release --example build_counterexample

use std::path::Path;
use std::time::Instant;

use steinberg::gadget::{build_counterexample, build_g2};
use steinberg::search::{find_frozen, DATA_DIR};
use steinberg::verify::{composition_outcome, verify_steinberg, VerifyOptions};

fn main() {
    let (path, g1) = find_frozen(Path::new(DATA_DIR), "g1")
        .expect("frozen gadget readable")
        .expect("a frozen g1 in the data directory");
    println!("g1 from {}: n={} m={}", path.display(), g1.graph().n(), g1.graph().m());

    let g2 = build_g2(&g1).expect("g1 meets its interface");
    println!("g2: n={} m={}", g2.graph().n(), g2.graph().m());
    let g = build_counterexample(&g2).expect("g2 meets its interface");
    println!("g:  n={} m={}", g.n(), g.m());

    let start = Instant::now();
    let report = verify_steinberg(&g, VerifyOptions::default()).expect("no oracle requested");
    print!("{report}");
    println!("verified in {:.2?}", start.elapsed());

    let comp = composition_outcome(&g1);
    println!("composition: {}", comp.detail);
}
