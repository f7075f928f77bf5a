//! The two concrete recipes.
//!
//! Second gadget: copies X, Y, Z of the first gadget. Each copy sends its
//! distance-4 terminal pair onto one pair of the new terminals `a, b, c`
//! (X onto `a, b`, Y onto `b, c`, Z onto `c, a`) and its remaining terminal
//! onto `d`, `e`, `f`; the triangle `d e f` is added.
//!
//! Final graph: copies P, Q, R, S of the second gadget on terminal triples
//! `(a, c, d)`, `(a, c, f)`, `(a, c', d')`, `(a, c', f')`, fresh vertices
//! `b, e, e'`, triangles `b c c'`, `d e f`, `d' e' f'` and edges `a b`,
//! `a e`, `a e'`.

use super::contract::{verify_against, InterfaceContract};
use super::paste::{paste, PastePart, PasteRecipe, Pasted};
use super::{GadgetError, TerminalGadget};
use crate::graph::Graph;

fn require(g: &TerminalGadget, contract: &InterfaceContract) -> Result<(), GadgetError> {
    let report = verify_against(g, contract);
    let failure = report.failed().next().map(|c| GadgetError::Contract {
        clause: c.name.clone(),
        detail: c.detail.clone(),
    });
    failure.map_or(Ok(()), Err)
}

fn names(list: &[&str]) -> Vec<String> {
    list.iter().map(|s| s.to_string()).collect()
}

/// Slot layout of the second gadget: `a b c d e f`.
pub struct G2Slots;

impl G2Slots {
    pub const NAMES: [&'static str; 6] = ["a", "b", "c", "d", "e", "f"];
    /// Copies X, Y, Z. First-gadget terminal order is `(a, b, c)` with
    /// `(b, c)` the distance-4 pair.
    pub const COPIES: [[usize; 3]; 3] = [[3, 0, 1], [4, 1, 2], [5, 2, 0]];
    pub const COPY_NAMES: [&'static str; 3] = ["X", "Y", "Z"];
    pub const EXTRA_EDGES: [(usize, usize); 3] = [(3, 4), (4, 5), (3, 5)];
}

pub fn g2_recipe(g1: &TerminalGadget) -> PasteRecipe {
    PasteRecipe {
        slot_names: names(&G2Slots::NAMES),
        parts: G2Slots::COPIES
            .iter()
            .zip(G2Slots::COPY_NAMES)
            .map(|(slots, name)| PastePart {
                gadget: g1.clone(),
                slots: slots.to_vec(),
                name: name.into(),
            })
            .collect(),
        extra_edges: G2Slots::EXTRA_EDGES.to_vec(),
    }
}

pub fn build_g2(g1: &TerminalGadget) -> Result<TerminalGadget, GadgetError> {
    require(g1, &InterfaceContract::first_gadget())?;
    let pasted = paste(&g2_recipe(g1))?;
    Ok(TerminalGadget::new(pasted.graph, vec![0, 1, 2])?.with_contract(InterfaceContract::second_gadget()))
}

/// Slot indices of the final assembly, in vertex order.
pub struct CounterexampleSlots;

impl CounterexampleSlots {
    pub const A: usize = 0;
    pub const B: usize = 1;
    pub const C: usize = 2;
    pub const C2: usize = 3;
    pub const D: usize = 4;
    pub const E: usize = 5;
    pub const F: usize = 6;
    pub const D2: usize = 7;
    pub const E2: usize = 8;
    pub const F2: usize = 9;
    pub const NAMES: [&'static str; 10] = ["a", "b", "c", "c'", "d", "e", "f", "d'", "e'", "f'"];
    /// Terminal triples of copies P, Q, R, S.
    pub const COPIES: [[usize; 3]; 4] = [
        [Self::A, Self::C, Self::D],
        [Self::A, Self::C, Self::F],
        [Self::A, Self::C2, Self::D2],
        [Self::A, Self::C2, Self::F2],
    ];
    pub const COPY_NAMES: [&'static str; 4] = ["P", "Q", "R", "S"];
    pub const EXTRA_EDGES: [(usize, usize); 12] = [
        (Self::B, Self::C),
        (Self::C, Self::C2),
        (Self::B, Self::C2),
        (Self::D, Self::E),
        (Self::E, Self::F),
        (Self::D, Self::F),
        (Self::D2, Self::E2),
        (Self::E2, Self::F2),
        (Self::D2, Self::F2),
        (Self::A, Self::B),
        (Self::A, Self::E),
        (Self::A, Self::E2),
    ];
    /// The three cycles made of extra edges only.
    pub const TRIANGLES: [[usize; 3]; 3] = [
        [Self::B, Self::C, Self::C2],
        [Self::D, Self::E, Self::F],
        [Self::D2, Self::E2, Self::F2],
    ];
}

pub fn counterexample_recipe(g2: &TerminalGadget) -> PasteRecipe {
    type S = CounterexampleSlots;
    PasteRecipe {
        slot_names: names(&S::NAMES),
        parts: S::COPIES
            .iter()
            .zip(S::COPY_NAMES)
            .map(|(slots, name)| PastePart {
                gadget: g2.clone(),
                slots: slots.to_vec(),
                name: name.into(),
            })
            .collect(),
        extra_edges: S::EXTRA_EDGES.to_vec(),
    }
}

/// Assemble the final graph, keeping the paste bookkeeping.
pub fn build_counterexample_pasted(g2: &TerminalGadget) -> Result<Pasted, GadgetError> {
    require(g2, &InterfaceContract::second_gadget())?;
    paste(&counterexample_recipe(g2))
}

pub fn build_counterexample(g2: &TerminalGadget) -> Result<Graph, GadgetError> {
    Ok(build_counterexample_pasted(g2)?.graph)
}
