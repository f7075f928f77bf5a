//! Solver-free refutation of the final graph from the first gadget's
//! terminal behavior alone.
//!
//! Copies meet only at contact vertices and the extra edges join contact
//! vertices only, so a coloring of a composed graph exists iff the contact
//! vertices can be colored with every copy showing a feasible terminal
//! pattern and every extra edge bichromatic. The second gadget's behavior is
//! derived that way from the first's; then the final graph's contact vertices
//! are explored as a case tree with every branch closed by a named
//! constraint. Vertex `a` is fixed to color 0: behaviors are invariant under
//! color permutation, so this loses nothing.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::build::{CounterexampleSlots, G2Slots};
use crate::coloring::{Color, Pattern, TerminalBehavior, COLORS};

/// One decision in the case tree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseNode {
    pub vertex: String,
    pub color: Color,
    /// Constraint violated at this node, if it closes the branch.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub closed_by: Option<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub children: Vec<CaseNode>,
}

impl CaseNode {
    pub fn leaves(&self) -> usize {
        if self.children.is_empty() {
            1
        } else {
            self.children.iter().map(CaseNode::leaves).sum()
        }
    }

    pub fn depth(&self) -> usize {
        1 + self.children.iter().map(CaseNode::depth).max().unwrap_or(0)
    }

    /// Every leaf carries a closing constraint.
    pub fn all_closed(&self) -> bool {
        if self.children.is_empty() {
            self.closed_by.is_some()
        } else {
            self.children.iter().all(CaseNode::all_closed)
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CompositionProof {
    /// Derived behavior of the second gadget.
    pub g2_behavior: TerminalBehavior,
    pub tree: CaseNode,
}

/// A contact coloring of the final graph that no constraint rules out.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CounterWitness {
    pub g2_behavior: TerminalBehavior,
    pub colors: Vec<(String, Color)>,
}

enum Constraint {
    Edge(usize, usize),
    Copy { name: &'static str, slots: [usize; 3] },
}

impl Constraint {
    fn slots(&self) -> Vec<usize> {
        match self {
            Constraint::Edge(u, v) => vec![*u, *v],
            Constraint::Copy { slots, .. } => slots.to_vec(),
        }
    }

    fn holds(&self, colors: &[Color], behavior: &TerminalBehavior) -> bool {
        match *self {
            Constraint::Edge(u, v) => colors[u] != colors[v],
            Constraint::Copy { slots, .. } => behavior.allows(&slots.map(|s| colors[s])),
        }
    }

    fn describe(&self, names: &[&str], colors: &[Color]) -> String {
        match self {
            Constraint::Edge(u, v) => format!("edge {}-{} monochromatic", names[*u], names[*v]),
            Constraint::Copy { name, slots } => {
                let p = Pattern::of_colors(&slots.map(|s| colors[s]));
                let on: Vec<_> = slots.iter().map(|&s| names[s]).collect();
                format!("copy {name} on ({}) would need pattern {p}", on.join(","))
            }
        }
    }
}

/// Terminal behavior of the second gadget implied by the first gadget's.
pub fn derive_g2_behavior(g1: &TerminalBehavior) -> TerminalBehavior {
    let mut feasible = BTreeMap::new();
    for p in Pattern::all(3) {
        let mut colors = [0 as Color; 6];
        colors[..3].copy_from_slice(p.colors());
        let mut ok = false;
        'outer: for d in 0..COLORS {
            for e in 0..COLORS {
                for f in 0..COLORS {
                    colors[3] = d;
                    colors[4] = e;
                    colors[5] = f;
                    let edges_ok = G2Slots::EXTRA_EDGES.iter().all(|&(u, v)| colors[u] != colors[v]);
                    let copies_ok = G2Slots::COPIES
                        .iter()
                        .all(|slots| g1.allows(&slots.map(|s| colors[s])));
                    if edges_ok && copies_ok {
                        ok = true;
                        break 'outer;
                    }
                }
            }
        }
        feasible.insert(p, ok);
    }
    TerminalBehavior { feasible }
}

pub fn compositional_check(g1_behavior: &TerminalBehavior) -> Result<CompositionProof, Box<CounterWitness>> {
    type S = CounterexampleSlots;
    let g2_behavior = derive_g2_behavior(g1_behavior);
    let mut constraints: Vec<Constraint> =
        S::EXTRA_EDGES.iter().map(|&(u, v)| Constraint::Edge(u, v)).collect();
    constraints.extend(
        S::COPIES
            .iter()
            .zip(S::COPY_NAMES)
            .map(|(&slots, name)| Constraint::Copy { name, slots }),
    );
    let order = [S::A, S::B, S::C, S::C2, S::E, S::D, S::F, S::E2, S::D2, S::F2];
    let mut rank = [0usize; 10];
    for (i, &s) in order.iter().enumerate() {
        rank[s] = i;
    }
    // Constraints become checkable once their last slot (in `order`) is set.
    let mut due: Vec<Vec<usize>> = vec![Vec::new(); order.len()];
    for (ci, c) in constraints.iter().enumerate() {
        let last = c.slots().into_iter().map(|s| rank[s]).max().unwrap();
        due[last].push(ci);
    }

    struct Ctx<'a> {
        order: [usize; 10],
        due: Vec<Vec<usize>>,
        constraints: Vec<Constraint>,
        behavior: &'a TerminalBehavior,
    }

    fn expand(ctx: &Ctx, depth: usize, colors: &mut [Color; 10]) -> Result<CaseNode, Vec<(String, Color)>> {
        let slot = ctx.order[depth];
        let mut node = CaseNode {
            vertex: S::NAMES[slot].to_owned(),
            color: colors[slot],
            closed_by: None,
            children: Vec::new(),
        };
        if let Some(&ci) = ctx.due[depth]
            .iter()
            .find(|&&ci| !ctx.constraints[ci].holds(colors, ctx.behavior))
        {
            node.closed_by = Some(ctx.constraints[ci].describe(&S::NAMES, colors));
            return Ok(node);
        }
        if depth + 1 == ctx.order.len() {
            return Err(S::NAMES
                .iter()
                .zip(colors.iter())
                .map(|(n, &c)| (n.to_string(), c))
                .collect());
        }
        let next = ctx.order[depth + 1];
        for c in 0..COLORS {
            colors[next] = c;
            node.children.push(expand(ctx, depth + 1, colors)?);
        }
        Ok(node)
    }

    let ctx = Ctx {
        order,
        due,
        constraints,
        behavior: &g2_behavior,
    };
    let mut colors = [0 as Color; 10];
    match expand(&ctx, 0, &mut colors) {
        Ok(tree) => Ok(CompositionProof { g2_behavior, tree }),
        Err(colors) => Err(Box::new(CounterWitness { g2_behavior, colors })),
    }
}
