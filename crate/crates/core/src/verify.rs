//! The verification batteries: a counterexample check that recomputes
//! everything from a bare graph, and a lemma report over the first gadget,
//! the second gadget built from it, and the composition argument.

use thiserror::Error;

use crate::coloring::{
    brute_force_3coloring, count_proper_extensions, solve_3coloring, solve_with_stats, symmetry_split,
    terminal_behavior, ColorAssignment, ColoringError, Pattern, Verdict,
};
use crate::gadget::{build_g2, compositional_check, verify_against, InterfaceContract, TerminalGadget};
use crate::graph::{Graph, Vertex};
use crate::report::{CheckOutcome, Target, VerificationReport, Witness};
use crate::search::frozen_digest;
use crate::structure::{cycles_of_length, triangle_edge_conflicts, triangles_sharing_edge};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyOptions {
    /// Cross-check the coloring verdict with the enumeration oracle.
    pub oracle: bool,
    pub jobs: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { oracle: false, jobs: 1 }
    }
}

#[derive(Debug, Error)]
pub enum VerifyError {
    #[error("oracle cross-check refused: {0}")]
    Oracle(ColoringError),
}

/// Highest degree vertex, lowest index on ties.
pub fn split_root(g: &Graph, skip: &[Vertex]) -> Option<Vertex> {
    (0..g.n())
        .filter(|v| !skip.contains(v))
        .max_by_key(|&v| (g.degree(v), std::cmp::Reverse(v)))
}

fn split(g: &Graph, fixed: &ColorAssignment, root: Vertex, jobs: usize) -> [Verdict; 3] {
    if jobs <= 1 {
        return symmetry_split(g, fixed, root).expect("root in range");
    }
    std::thread::scope(|s| {
        let handles: Vec<_> = (0..3u8)
            .map(|c| {
                s.spawn(move || {
                    let mut f = fixed.clone();
                    f.set(root, Some(c));
                    match solve_3coloring(g, &f) {
                        Ok(v) => v,
                        Err(ColoringError::ImproperFixed(..)) => Verdict::Unsat,
                        Err(e) => panic!("{e}"),
                    }
                })
            })
            .collect();
        let v: Vec<Verdict> = handles.into_iter().map(|h| h.join().expect("solver thread")).collect();
        [v[0].clone(), v[1].clone(), v[2].clone()]
    })
}

/// Refute 3-colorability under `fixed`: one full solve plus a re-solve for
/// each color of the split root.
fn unsat_outcome(g: &Graph, fixed: &ColorAssignment, skip: &[Vertex], jobs: usize) -> CheckOutcome {
    let (verdict, stats) = match solve_with_stats(g, fixed) {
        Ok(r) => r,
        Err(ColoringError::ImproperFixed(u, v)) => {
            return CheckOutcome::pass(format!("fixed colors already clash on {u}-{v}"));
        }
        Err(e) => return CheckOutcome::fail(e.to_string(), None),
    };
    if let Verdict::Sat(colors) = verdict {
        return CheckOutcome::fail("proper 3-coloring found", Some(Witness::Coloring { colors }));
    }
    let Some(root) = split_root(g, skip) else {
        return CheckOutcome::pass("solver: UNSAT");
    };
    let parts = split(g, fixed, root, jobs);
    let split_unsat = [!parts[0].is_sat(), !parts[1].is_sat(), !parts[2].is_sat()];
    let transcript = Witness::UnsatTranscript {
        stats,
        split_root: root,
        split_unsat,
    };
    if split_unsat.iter().all(|&u| u) {
        CheckOutcome::pass(format!(
            "solver: UNSAT after {} decisions; split on {} UNSAT for all 3 colors",
            stats.decisions,
            g.display_name(root)
        ))
        .with_witness(transcript)
    } else {
        CheckOutcome::fail("symmetry split disagrees with the solver", Some(transcript))
    }
}

fn no_cycles(g: &Graph, k: usize) -> CheckOutcome {
    match cycles_of_length(g, k).expect("supported length").into_iter().next() {
        None => CheckOutcome::pass("none found"),
        Some(cycle) => CheckOutcome::fail(format!("found a {k}-cycle"), Some(Witness::Cycle { cycle })),
    }
}

/// Check that `g` is planar, has no 4- or 5-cycles and is not 3-colorable,
/// and that it meets the two triangle hypotheses. Nothing is taken on trust
/// from how the graph was produced.
pub fn verify_steinberg(g: &Graph, opts: VerifyOptions) -> Result<VerificationReport, VerifyError> {
    let empty = ColorAssignment::empty(g.n());
    // Refuse up front rather than half way through the report.
    if opts.oracle && g.n() > crate::coloring::BRUTE_FORCE_MAX_FREE {
        return Err(VerifyError::Oracle(ColoringError::SizeGuard {
            free: g.n(),
            limit: crate::coloring::BRUTE_FORCE_MAX_FREE,
        }));
    }
    let mut r = VerificationReport::new(Target::of(g));
    r.run("planar", || crate::gadget::planarity_outcome(g));
    r.run("no 4-cycles", || no_cycles(g, 4));
    r.run("no 5-cycles", || no_cycles(g, 5));
    r.run("not 3-colorable", || unsat_outcome(g, &empty, &[], opts.jobs));
    if opts.oracle {
        r.run("oracle agrees", || {
            let oracle = brute_force_3coloring(g, &empty).expect("size checked above");
            let solver = solve_3coloring(g, &empty).expect("no fixed colors");
            if oracle.is_sat() == solver.is_sat() {
                CheckOutcome::pass(format!("both {}", if oracle.is_sat() { "SAT" } else { "UNSAT" }))
            } else {
                CheckOutcome::fail(
                    format!("solver {:?}, oracle {:?}", solver.is_sat(), oracle.is_sat()),
                    oracle.coloring().map(|c| Witness::Coloring { colors: c.to_vec() }),
                )
            }
        });
    }
    r.run("no two triangles share an edge", || match triangles_sharing_edge(g).into_iter().next() {
        None => CheckOutcome::pass("none found"),
        Some(conflict) => CheckOutcome::fail("adjacent triangles", Some(Witness::TriangleConflict { conflict })),
    });
    r.run("no triangle shares an edge with a 3- or 5-cycle", || {
        match triangle_edge_conflicts(g, &[3, 5]).into_iter().next() {
            None => CheckOutcome::pass("none found"),
            Some(conflict) => {
                let k = conflict.other.len();
                CheckOutcome::fail(
                    format!("triangle shares an edge with a {k}-cycle"),
                    Some(Witness::TriangleConflict { conflict }),
                )
            }
        }
    });
    Ok(r)
}

/// Derive the final graph's non-colorability from the first gadget's
/// terminal behavior alone.
pub fn composition_outcome(g1: &TerminalGadget) -> CheckOutcome {
    let behavior = match terminal_behavior(g1) {
        Ok(b) => b,
        Err(e) => return CheckOutcome::fail(e.to_string(), None),
    };
    match compositional_check(&behavior) {
        Ok(proof) if proof.tree.all_closed() => CheckOutcome::pass(format!(
            "{} leaves, every branch closed",
            proof.tree.leaves()
        ))
        .with_witness(Witness::CaseTree {
            leaves: proof.tree.leaves(),
            depth: proof.tree.depth(),
        }),
        Ok(_) => CheckOutcome::fail("case tree has an open leaf", None),
        Err(w) => {
            let shown: Vec<String> = w.colors.iter().map(|(n, c)| format!("{n}={c}")).collect();
            CheckOutcome::fail(
                "contact coloring survives every constraint",
                Some(Witness::Message { text: shown.join(" ") }),
            )
        }
    }
}

/// Every clause of both gadget interfaces, the enumeration oracle on the
/// first gadget, and the composition case tree. `stored_digest` is the
/// digest recorded in the gadget file, if any.
pub fn verify_lemmas(g1: &TerminalGadget, stored_digest: Option<&str>) -> VerificationReport {
    let mut r = VerificationReport::new(Target::of(g1.graph()));
    if let Some(stored) = stored_digest {
        r.run("g1: digest matches", || {
            let actual = frozen_digest(g1);
            if actual == stored {
                CheckOutcome::pass(&actual[..12])
            } else {
                CheckOutcome::fail(format!("stored {}, recomputed {}", &stored[..12.min(stored.len())], &actual[..12]), None)
            }
        });
    }
    r.extend(verify_against(g1, &InterfaceContract::first_gadget()), "g1: ");
    r.run("g1: oracle: pattern aaa infeasible", || {
        let n = g1.graph().n();
        let fixed: Vec<_> = g1.terminals().iter().map(|&t| (t, 0)).collect();
        match count_proper_extensions(g1.graph(), &ColorAssignment::with_fixed(n, &fixed)) {
            Ok((total, 0)) => CheckOutcome::pass(format!("0 of {total} extensions proper")),
            Ok((total, proper)) => CheckOutcome::fail(format!("{proper} of {total} extensions proper"), None),
            Err(ColoringError::ImproperFixed(u, v)) => {
                CheckOutcome::pass(format!("terminals {u} and {v} adjacent"))
            }
            Err(e) => CheckOutcome::fail(e.to_string(), None),
        }
    });

    match build_g2(g1) {
        Err(e) => {
            r.run("g2: build", || CheckOutcome::fail(e.to_string(), None));
        }
        Ok(g2) => {
            let (n1, m1) = (g1.graph().n(), g1.graph().m());
            let (n2, m2) = (g2.graph().n(), g2.graph().m());
            r.run(format!("g2: {} vertices", 3 * n1 - 3), || {
                let d = format!("{n2} vertices");
                if n2 == 3 * n1 - 3 { CheckOutcome::pass(d) } else { CheckOutcome::fail(d, None) }
            });
            r.run(format!("g2: {} edges", 3 * m1 + 3), || {
                let d = format!("{m2} edges");
                if m2 == 3 * m1 + 3 { CheckOutcome::pass(d) } else { CheckOutcome::fail(d, None) }
            });
            r.extend(verify_against(&g2, &InterfaceContract::second_gadget()), "g2: ");
            r.run("g2: pattern aaa infeasible (symmetry split)", || {
                let fixed: Vec<_> = g2.terminals().iter().map(|&t| (t, 0)).collect();
                let fixed = ColorAssignment::with_fixed(g2.graph().n(), &fixed);
                unsat_outcome(g2.graph(), &fixed, g2.terminals(), 1)
            });
        }
    }
    r.run("composition: case tree closes", || composition_outcome(g1));
    r
}

/// Patterns the gadget realizes, for display.
pub fn feasible_patterns(g: &TerminalGadget) -> Result<Vec<Pattern>, ColoringError> {
    Ok(terminal_behavior(g)?.feasible_patterns().cloned().collect())
}
