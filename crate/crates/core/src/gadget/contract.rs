use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::TerminalGadget;
use crate::coloring::{solve_3coloring, ColorAssignment, ColoringError, Pattern};
use crate::report::{CheckOutcome, Target, VerificationReport, Witness};
use crate::structure::{
    check_embedding, check_obstruction, cycles_of_length, distance_matrix, is_planar, shortest_path,
    terminals_cofacial, PlanarityCertificate,
};

/// What a gadget promises at its terminals.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InterfaceContract {
    pub forbidden_cycle_lengths: BTreeSet<usize>,
    /// Lower bounds on terminal-pair distances; diagonal ignored.
    pub min_terminal_distances: Vec<Vec<usize>>,
    #[serde(default)]
    pub exact_terminal_distances: Option<Vec<Vec<usize>>>,
    pub forbidden_patterns: BTreeSet<Pattern>,
    pub require_planar: bool,
    /// Terminals must lie on one common face of some planar embedding.
    #[serde(default)]
    pub require_cofacial_terminals: bool,
    #[serde(default)]
    pub verified: bool,
}

impl InterfaceContract {
    pub fn unconstrained(terminals: usize) -> Self {
        InterfaceContract {
            forbidden_cycle_lengths: BTreeSet::new(),
            min_terminal_distances: vec![vec![0; terminals]; terminals],
            exact_terminal_distances: None,
            forbidden_patterns: BTreeSet::new(),
            require_planar: false,
            require_cofacial_terminals: false,
            verified: false,
        }
    }

    /// Only the all-equal pattern is forbidden.
    pub fn forcing_unequal(terminals: usize) -> Self {
        InterfaceContract {
            forbidden_patterns: [Pattern::all_equal(terminals)].into(),
            ..InterfaceContract::unconstrained(terminals)
        }
    }

    /// First gadget, terminals `(a, b, c)`: no 4- or 5-cycles; distances
    /// 3, 3, 4 for `ab`, `ac`, `bc`; `a = b = c` impossible; planar with the
    /// terminals on one face.
    pub fn first_gadget() -> Self {
        let d = vec![vec![0, 3, 3], vec![3, 0, 4], vec![3, 4, 0]];
        InterfaceContract {
            forbidden_cycle_lengths: [4, 5].into(),
            min_terminal_distances: d.clone(),
            exact_terminal_distances: Some(d),
            forbidden_patterns: [Pattern::all_equal(3)].into(),
            require_planar: true,
            require_cofacial_terminals: true,
            verified: false,
        }
    }

    /// Second gadget: as the first, but every terminal pair at distance 4.
    pub fn second_gadget() -> Self {
        let d = vec![vec![0, 4, 4], vec![4, 0, 4], vec![4, 4, 0]];
        InterfaceContract {
            min_terminal_distances: d.clone(),
            exact_terminal_distances: Some(d),
            ..InterfaceContract::first_gadget()
        }
    }

    /// Same clauses, ignoring the `verified` flag.
    pub fn same_clauses(&self, other: &InterfaceContract) -> bool {
        InterfaceContract {
            verified: false,
            ..self.clone()
        } == InterfaceContract {
            verified: false,
            ..other.clone()
        }
    }

    /// Contract seen after reordering terminals: new terminal `i` is old
    /// terminal `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> InterfaceContract {
        let remap = |m: &Vec<Vec<usize>>| -> Vec<Vec<usize>> {
            perm.iter()
                .map(|&pi| perm.iter().map(|&pj| m[pi][pj]).collect())
                .collect()
        };
        InterfaceContract {
            min_terminal_distances: remap(&self.min_terminal_distances),
            exact_terminal_distances: self.exact_terminal_distances.as_ref().map(remap),
            forbidden_patterns: self
                .forbidden_patterns
                .iter()
                .map(|p| {
                    let colors: Vec<u8> = perm.iter().map(|&pi| p.colors()[pi]).collect();
                    Pattern::of_colors(&colors)
                })
                .collect(),
            ..self.clone()
        }
    }

    /// Structural sanity: square matrices of the right size, exact distances
    /// dominating the lower bounds, patterns of the right arity.
    pub fn validate(&self, terminals: usize) -> Result<(), String> {
        let square = |m: &Vec<Vec<usize>>| m.len() == terminals && m.iter().all(|r| r.len() == terminals);
        if !square(&self.min_terminal_distances) {
            return Err(format!("min_terminal_distances must be {terminals}x{terminals}"));
        }
        if let Some(exact) = &self.exact_terminal_distances {
            if !square(exact) {
                return Err(format!("exact_terminal_distances must be {terminals}x{terminals}"));
            }
            for i in 0..terminals {
                for j in 0..terminals {
                    if i != j && exact[i][j] < self.min_terminal_distances[i][j] {
                        return Err(format!("exact distance ({i},{j}) is below its lower bound"));
                    }
                }
            }
        }
        if let Some(p) = self.forbidden_patterns.iter().find(|p| p.len() != terminals) {
            return Err(format!("pattern {p} does not have {terminals} entries"));
        }
        if let Some(k) = self.forbidden_cycle_lengths.iter().find(|k| !(3..=6).contains(*k)) {
            return Err(format!("cycle length {k} outside 3..=6"));
        }
        Ok(())
    }
}

/// Check every clause of the gadget's own contract.
pub fn verify_contract(g: &TerminalGadget) -> VerificationReport {
    verify_against(g, g.contract())
}

/// Check every clause of `contract` on the gadget, one report line each.
pub fn verify_against(g: &TerminalGadget, contract: &InterfaceContract) -> VerificationReport {
    let graph = g.graph();
    let terms = g.terminals();
    let t = terms.len();
    let name = |i: usize| graph.display_name(terms[i]);
    let mut report = VerificationReport::new(Target::of(graph));

    if let Err(e) = contract.validate(t) {
        report.run("contract well-formed", || CheckOutcome::fail(e, None));
        return report;
    }

    for &k in &contract.forbidden_cycle_lengths {
        report.run(format!("no {k}-cycles"), || {
            match cycles_of_length(graph, k).expect("validated length").into_iter().next() {
                None => CheckOutcome::pass("none found"),
                Some(c) => CheckOutcome::fail(format!("found a {k}-cycle"), Some(Witness::Cycle { cycle: c })),
            }
        });
    }

    let dist = distance_matrix(graph, terms);
    for i in 0..t {
        for j in i + 1..t {
            let d = dist[i][j];
            let path_witness = || {
                shortest_path(graph, terms[i], terms[j])
                    .expect("terminals in range")
                    .map(|path| Witness::Path { path })
            };
            let shown = d.map_or("unreachable".to_owned(), |d| d.to_string());
            let min = contract.min_terminal_distances[i][j];
            report.run(format!("distance({},{}) >= {min}", name(i), name(j)), || {
                if d.map_or(true, |d| d >= min) {
                    CheckOutcome::pass(format!("distance {shown}"))
                } else {
                    CheckOutcome::fail(format!("distance {shown}"), path_witness())
                }
            });
            if let Some(exact) = &contract.exact_terminal_distances {
                let want = exact[i][j];
                report.run(format!("distance({},{}) = {want}", name(i), name(j)), || {
                    if d == Some(want) {
                        CheckOutcome::pass(format!("distance {shown}"))
                    } else {
                        CheckOutcome::fail(format!("distance {shown}"), path_witness())
                    }
                });
            }
        }
    }

    for p in &contract.forbidden_patterns {
        report.run(format!("pattern {p} infeasible"), || {
            let fixed: Vec<_> = terms.iter().copied().zip(p.colors().iter().copied()).collect();
            match solve_3coloring(graph, &ColorAssignment::with_fixed(graph.n(), &fixed)) {
                Ok(v) => match v.coloring() {
                    None => CheckOutcome::pass("solver: UNSAT"),
                    Some(colors) => CheckOutcome::fail(
                        "solver found a coloring",
                        Some(Witness::Pattern {
                            pattern: p.clone(),
                            colors: colors.to_vec(),
                        }),
                    ),
                },
                Err(ColoringError::ImproperFixed(..)) => CheckOutcome::pass("terminals adjacent"),
                Err(e) => CheckOutcome::fail(e.to_string(), None),
            }
        });
    }

    if contract.require_planar {
        report.run("planar", || planarity_outcome(graph));
    }
    if contract.require_cofacial_terminals {
        report.run("terminals share a face", || {
            if terminals_cofacial(graph, terms) {
                CheckOutcome::pass("graph plus apex on terminals is planar")
            } else {
                CheckOutcome::fail("no embedding puts all terminals on one face", None)
            }
        });
    }
    report
}

/// Run the planarity test and validate its certificate independently.
pub fn planarity_outcome(graph: &crate::graph::Graph) -> CheckOutcome {
    match is_planar(graph) {
        PlanarityCertificate::Planar { rotation } => match check_embedding(graph, &rotation) {
            Ok(()) => CheckOutcome::pass("rotation system passes the Euler check"),
            Err(e) => CheckOutcome::fail(format!("embedding certificate invalid: {e}"), None),
        },
        PlanarityCertificate::Nonplanar { obstruction } => {
            let detail = match check_obstruction(graph, &obstruction) {
                Ok(()) => format!("{:?} subdivision found", obstruction.kind),
                Err(e) => format!("nonplanar, but obstruction invalid: {e}"),
            };
            CheckOutcome::fail(detail, Some(Witness::Obstruction { obstruction }))
        }
    }
}
