//! The 3-coloring solver next to the enumeration oracle, with fixed colors
//! and terminal pattern summaries.
//!
//!     cargo run --example coloring_solver

use steinberg::coloring::{
    brute_force_3coloring, solve_with_stats, symmetry_split, terminal_behavior, ColorAssignment,
};
use steinberg::gadget::TerminalGadget;
use steinberg::Graph;

fn main() {
    // The wheel on 6 vertices: an odd rim forces a fourth color.
    let mut edges: Vec<_> = (1..6).map(|i| (i, i % 5 + 1)).collect();
    edges.extend((1..6).map(|i| (0, i)));
    let w5 = Graph::new(6, &edges).unwrap();
    for (name, g) in [("C5", Graph::cycle(5)), ("W5", w5)] {
        let free = ColorAssignment::empty(g.n());
        let (verdict, stats) = solve_with_stats(&g, &free).unwrap();
        let oracle = brute_force_3coloring(&g, &free).unwrap();
        println!("{name}: solver {:?} ({stats:?}), oracle {:?}", verdict.coloring(), oracle.coloring());
        let split = symmetry_split(&g, &free, 0).unwrap();
        println!("  split on vertex 0: {:?}", split.iter().map(|v| v.is_sat()).collect::<Vec<_>>());
    }

    // Fixing both ends of a 4-vertex path to the same color is fine,
    // fixing two adjacent vertices the same is an error, not UNSAT.
    let p = Graph::path(4);
    let ends = ColorAssignment::with_fixed(4, &[(0, 1), (3, 1)]);
    println!("P4 ends equal: {:?}", solve_with_stats(&p, &ends).unwrap().0);
    let clash = ColorAssignment::with_fixed(4, &[(0, 1), (1, 1)]);
    println!("P4 neighbors equal: {:?}", solve_with_stats(&p, &clash).unwrap_err());

    let tri = TerminalGadget::new(Graph::cycle(3), vec![0, 1, 2]).unwrap();
    let b = terminal_behavior(&tri).unwrap();
    let shown: Vec<_> = b.feasible.iter().map(|(p, ok)| format!("{p}:{ok}")).collect();
    println!("triangle terminal patterns: {}", shown.join(" "));
}
