//! Check both gadget interfaces on the shipped first gadget, including the
//! exhaustive enumeration and the composition case tree.
//!
//!     cargo run --release --example lemma_checks

use std::path::Path;

use steinberg::coloring::terminal_behavior;
use steinberg::gadget::{build_g2, compositional_check};
use steinberg::search::{find_frozen, frozen_digest, DATA_DIR};
use steinberg::verify::verify_lemmas;

fn main() {
    let (_, g1) = find_frozen(Path::new(DATA_DIR), "g1").unwrap().expect("frozen g1");
    let report = verify_lemmas(&g1, Some(&frozen_digest(&g1)));
    print!("{report}");

    let b1 = terminal_behavior(&g1).unwrap();
    let b2 = terminal_behavior(&build_g2(&g1).unwrap()).unwrap();
    for (name, b) in [("g1", &b1), ("g2", &b2)] {
        let feasible: Vec<String> = b.feasible_patterns().map(|p| p.to_string()).collect();
        println!("{name} realizes: {}", feasible.join(" "));
    }

    // The composition argument only sees terminal behavior.
    let proof = compositional_check(&b1).expect("closes");
    println!("case tree: {} leaves, depth {}", proof.tree.leaves(), proof.tree.depth());
    for child in proof.tree.children.iter().take(3) {
        println!("  {}={} {}", child.vertex, child.color, child.closed_by.as_deref().unwrap_or("(split further)"));
    }
}
