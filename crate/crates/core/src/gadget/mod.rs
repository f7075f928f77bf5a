//! Terminal gadgets and the pasting calculus that assembles the
//! counterexample: three copies of the first gadget make the second, four
//! copies of the second plus three fresh vertices make the final graph.

mod build;
mod compose;
mod contract;
mod paste;

pub use build::{
    build_counterexample, build_counterexample_pasted, build_g2, counterexample_recipe, g2_recipe,
    CounterexampleSlots, G2Slots,
};
pub use compose::{compositional_check, CaseNode, CompositionProof, CounterWitness};
pub use contract::{planarity_outcome, verify_against, verify_contract, InterfaceContract};
pub use paste::{paste, PastePart, PasteRecipe, Pasted};

use std::path::Path;

use thiserror::Error;

use crate::formats::json::GadgetFile;
use crate::formats::ParseError;
use crate::graph::{Graph, Vertex};

#[derive(Debug, Error)]
pub enum GadgetError {
    #[error("terminal {0} is outside the graph")]
    TerminalOutOfRange(Vertex),
    #[error("terminal {0} is listed twice")]
    DuplicateTerminal(Vertex),
    #[error("part {part} maps two terminals to slot {slot}")]
    SelfIdentification { part: usize, slot: usize },
    #[error("part {part} has {terminals} terminals but {slots} slots were given")]
    SlotArity { part: usize, terminals: usize, slots: usize },
    #[error("slot {0} is out of range or referenced by nothing")]
    DanglingSlot(usize),
    #[error("extra edge {0}-{1} duplicates an existing edge")]
    ParallelEdge(usize, usize),
    #[error("extra edge {0}-{0} is a loop")]
    LoopEdge(usize),
    #[error("precondition failed: clause `{clause}`: {detail}")]
    Contract { clause: String, detail: String },
    #[error("gadget file has no terminals")]
    MissingTerminals,
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
}

/// A graph with ordered contact vertices and the interface it promises.
#[derive(Debug, Clone, PartialEq)]
pub struct TerminalGadget {
    graph: Graph,
    terminals: Vec<Vertex>,
    contract: InterfaceContract,
}

impl TerminalGadget {
    pub fn new(graph: Graph, terminals: Vec<Vertex>) -> Result<Self, GadgetError> {
        for (i, &t) in terminals.iter().enumerate() {
            if t >= graph.n() {
                return Err(GadgetError::TerminalOutOfRange(t));
            }
            if terminals[..i].contains(&t) {
                return Err(GadgetError::DuplicateTerminal(t));
            }
        }
        let contract = InterfaceContract::unconstrained(terminals.len());
        Ok(TerminalGadget {
            graph,
            terminals,
            contract,
        })
    }

    pub fn with_contract(mut self, contract: InterfaceContract) -> Self {
        self.contract = contract;
        self
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn terminals(&self) -> &[Vertex] {
        &self.terminals
    }

    pub fn contract(&self) -> &InterfaceContract {
        &self.contract
    }

    pub fn contract_mut(&mut self) -> &mut InterfaceContract {
        &mut self.contract
    }

    pub fn into_graph(self) -> Graph {
        self.graph
    }

    pub fn to_file(&self) -> GadgetFile {
        let mut f = GadgetFile::from_graph(&self.graph);
        f.terminals = Some(self.terminals.clone());
        f.contract = Some(self.contract.clone());
        f
    }

    pub fn from_file(file: &GadgetFile) -> Result<Self, GadgetError> {
        let graph = file.graph()?;
        let terminals = file.terminals.clone().ok_or(GadgetError::MissingTerminals)?;
        let mut g = TerminalGadget::new(graph, terminals)?;
        if let Some(c) = &file.contract {
            g.contract = c.clone();
        }
        Ok(g)
    }

    pub fn load(path: &Path) -> Result<Self, GadgetError> {
        let bytes = std::fs::read(path)?;
        TerminalGadget::from_file(&GadgetFile::from_json(&bytes)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn terminal_validation() {
        assert!(matches!(
            TerminalGadget::new(Graph::cycle(3), vec![0, 3]),
            Err(GadgetError::TerminalOutOfRange(3))
        ));
        assert!(matches!(
            TerminalGadget::new(Graph::cycle(3), vec![1, 1]),
            Err(GadgetError::DuplicateTerminal(1))
        ));
    }

    #[test]
    fn file_round_trip() {
        let g = TerminalGadget::new(Graph::cycle(3).with_labels([(0, "a")]).unwrap(), vec![0, 1, 2])
            .unwrap()
            .with_contract(InterfaceContract::forcing_unequal(3));
        let f = g.to_file();
        let back = TerminalGadget::from_file(&GadgetFile::from_json(f.to_json().as_bytes()).unwrap()).unwrap();
        assert_eq!(back, g);
    }
}
