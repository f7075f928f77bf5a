//! Greedy shrinking of a counterexample: delete vertices, then contract
//! edges, keeping any step after which the graph is still planar, free of 4-
//! and 5-cycles, and not 3-colorable. Stops at a fixed point or when the
//! evaluation budget runs out.

use thiserror::Error;

use crate::coloring::{solve_3coloring, ColorAssignment};
use crate::graph::Graph;
use crate::structure::{cycles_of_length, is_planar};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ShrinkError {
    #[error("input is not a counterexample: {0}")]
    NotCounterexample(String),
}

#[derive(Debug, Clone)]
pub struct ShrinkOutcome {
    pub graph: Graph,
    /// Accepted steps in order, e.g. `delete v17`.
    pub steps: Vec<String>,
    pub evaluations: usize,
    /// True when no single deletion or contraction is accepted any more.
    pub fixed_point: bool,
}

/// `Err` names the first property that fails.
pub fn verify_counterexample(g: &Graph) -> Result<(), String> {
    if !is_planar(g).is_planar() {
        return Err("not planar".into());
    }
    for k in [4, 5] {
        if let Some(c) = cycles_of_length(g, k).expect("valid length").into_iter().next() {
            return Err(format!("has a {k}-cycle {:?}", c.0));
        }
    }
    let verdict = solve_3coloring(g, &ColorAssignment::empty(g.n())).expect("no fixed colors");
    if verdict.is_sat() {
        return Err("3-colorable".into());
    }
    Ok(())
}

pub fn shrink_counterexample(g: &Graph, budget: usize) -> Result<ShrinkOutcome, ShrinkError> {
    verify_counterexample(g).map_err(ShrinkError::NotCounterexample)?;
    let mut cur = g.clone();
    let mut steps = Vec::new();
    let mut evaluations = 0;
    'outer: loop {
        // Low degree vertices first: they are the likeliest to be redundant.
        let mut order: Vec<_> = (0..cur.n()).collect();
        order.sort_by_key(|&v| (cur.degree(v), v));
        for v in order {
            if evaluations >= budget {
                break 'outer;
            }
            evaluations += 1;
            let next = cur.without_vertex(v);
            if verify_counterexample(&next).is_ok() {
                steps.push(format!("delete {}", cur.display_name(v)));
                cur = next;
                continue 'outer;
            }
        }
        for &(u, v) in cur.edges() {
            if evaluations >= budget {
                break 'outer;
            }
            evaluations += 1;
            let next = cur.contract_edge(u, v);
            if verify_counterexample(&next).is_ok() {
                steps.push(format!("contract {}-{}", cur.display_name(u), cur.display_name(v)));
                cur = next;
                continue 'outer;
            }
        }
        return Ok(ShrinkOutcome {
            graph: cur,
            steps,
            evaluations,
            fixed_point: true,
        });
    }
    Ok(ShrinkOutcome {
        graph: cur,
        steps,
        evaluations,
        fixed_point: false,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_non_counterexamples() {
        assert_eq!(verify_counterexample(&Graph::cycle(4)), Err("has a 4-cycle [0, 1, 2, 3]".into()));
        assert!(verify_counterexample(&Graph::cycle(7)).unwrap_err().contains("3-colorable"));
        assert!(shrink_counterexample(&Graph::complete(5), 10).is_err());
    }
}
