use std::collections::BTreeSet;

use super::{GadgetError, TerminalGadget};
use crate::graph::{Graph, Vertex};

/// One gadget copy and where its terminals land.
#[derive(Debug, Clone)]
pub struct PastePart {
    pub gadget: TerminalGadget,
    /// `slots[i]` receives terminal `i`.
    pub slots: Vec<usize>,
    /// Label prefix for the copy's interior vertices.
    pub name: String,
}

/// Disjoint gadget copies glued at shared slots, plus fresh slot vertices
/// and edges between slots.
///
/// Every slot becomes one vertex of the result. Slots that no part uses are
/// the fresh extra vertices.
#[derive(Debug, Clone)]
pub struct PasteRecipe {
    pub slot_names: Vec<String>,
    pub parts: Vec<PastePart>,
    pub extra_edges: Vec<(usize, usize)>,
}

/// Result of a paste, with bookkeeping for downstream checks.
#[derive(Debug, Clone)]
pub struct Pasted {
    pub graph: Graph,
    /// Slot `s` is vertex `s` of the result.
    pub slot_count: usize,
    /// `part_maps[p][v]` is the result vertex of vertex `v` of part `p`.
    pub part_maps: Vec<Vec<Vertex>>,
    /// Each part's edges in result coordinates, normalized `(min, max)`.
    pub part_edges: Vec<BTreeSet<(Vertex, Vertex)>>,
    /// Identifications performed (terminal placements beyond the first per slot).
    pub identifications: usize,
}

impl Pasted {
    /// Index of the part owning an edge, or `None` for an extra edge.
    pub fn owner_of_edge(&self, u: Vertex, v: Vertex) -> Option<usize> {
        let key = (u.min(v), u.max(v));
        self.part_edges.iter().position(|edges| edges.contains(&key))
    }

    /// Parts containing vertex `v` (several for a shared slot).
    pub fn parts_of_vertex(&self, v: Vertex) -> Vec<usize> {
        (0..self.part_maps.len())
            .filter(|&p| self.part_maps[p].contains(&v))
            .collect()
    }
}

pub fn paste(recipe: &PasteRecipe) -> Result<Pasted, GadgetError> {
    let slot_count = recipe.slot_names.len();
    let mut referenced = vec![false; slot_count];
    let mut part_maps = Vec::with_capacity(recipe.parts.len());
    let mut part_edges = Vec::with_capacity(recipe.parts.len());
    let mut edges: Vec<(Vertex, Vertex)> = Vec::new();
    let mut labels: Vec<(Vertex, String)> = recipe
        .slot_names
        .iter()
        .enumerate()
        .map(|(s, name)| (s, name.clone()))
        .collect();
    let mut next = slot_count;
    let mut placements = 0;
    let mut used_slots = BTreeSet::new();

    for (pi, part) in recipe.parts.iter().enumerate() {
        let g = part.gadget.graph();
        let terms = part.gadget.terminals();
        if terms.len() != part.slots.len() {
            return Err(GadgetError::SlotArity {
                part: pi,
                terminals: terms.len(),
                slots: part.slots.len(),
            });
        }
        let mut map = vec![usize::MAX; g.n()];
        for (&t, &s) in terms.iter().zip(&part.slots) {
            if s >= slot_count {
                return Err(GadgetError::DanglingSlot(s));
            }
            if map.contains(&s) {
                return Err(GadgetError::SelfIdentification { part: pi, slot: s });
            }
            map[t] = s;
            referenced[s] = true;
            placements += 1;
            used_slots.insert(s);
        }
        for (v, slot) in map.iter_mut().enumerate() {
            if *slot == usize::MAX {
                *slot = next;
                let inner = g.display_name(v);
                labels.push((next, format!("{}.{}", part.name, inner)));
                next += 1;
            }
        }
        let mapped: BTreeSet<_> = g
            .edges()
            .iter()
            .map(|&(u, v)| (map[u].min(map[v]), map[u].max(map[v])))
            .collect();
        edges.extend(mapped.iter().copied());
        part_edges.push(mapped);
        part_maps.push(map);
    }

    for &(u, v) in &recipe.extra_edges {
        if u >= slot_count {
            return Err(GadgetError::DanglingSlot(u));
        }
        if v >= slot_count {
            return Err(GadgetError::DanglingSlot(v));
        }
        if u == v {
            return Err(GadgetError::LoopEdge(u));
        }
        referenced[u] = true;
        referenced[v] = true;
        edges.push((u, v));
    }
    if let Some(s) = referenced.iter().position(|&r| !r) {
        return Err(GadgetError::DanglingSlot(s));
    }

    let graph = match Graph::new(next, &edges) {
        Ok(g) => g,
        Err(crate::graph::GraphError::DuplicateEdge(u, v)) => return Err(GadgetError::ParallelEdge(u, v)),
        Err(e) => unreachable!("paste only produces in-range, loop-free edges: {e}"),
    };
    let graph = graph.with_labels(labels).expect("labels are in range");
    Ok(Pasted {
        graph,
        slot_count,
        part_maps,
        part_edges,
        identifications: placements - used_slots.len(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triangle() -> TerminalGadget {
        TerminalGadget::new(Graph::cycle(3), vec![0, 1, 2]).unwrap()
    }

    fn part(slots: Vec<usize>, name: &str) -> PastePart {
        PastePart {
            gadget: triangle(),
            slots,
            name: name.into(),
        }
    }

    #[test]
    fn two_triangles_sharing_a_slot() {
        let recipe = PasteRecipe {
            slot_names: ["x", "p", "q", "r", "s"].map(String::from).to_vec(),
            parts: vec![part(vec![0, 1, 2], "A"), part(vec![0, 3, 4], "B")],
            extra_edges: vec![],
        };
        let out = paste(&recipe).unwrap();
        assert_eq!((out.graph.n(), out.graph.m()), (5, 6));
        assert_eq!(out.identifications, 1);
    }

    #[test]
    fn interior_vertices_get_prefixed_labels() {
        let g = TerminalGadget::new(Graph::path(3).with_labels([(1, "m")]).unwrap(), vec![0, 2]).unwrap();
        let recipe = PasteRecipe {
            slot_names: vec!["u".into(), "v".into()],
            parts: vec![PastePart { gadget: g, slots: vec![0, 1], name: "X".into() }],
            extra_edges: vec![],
        };
        let out = paste(&recipe).unwrap();
        assert_eq!(out.graph.label(2), Some("X.m"));
        assert_eq!(out.owner_of_edge(0, 2), Some(0));
    }

    #[test]
    fn recipe_errors() {
        let same_slot = PasteRecipe {
            slot_names: vec!["a".into(), "b".into()],
            parts: vec![part(vec![0, 0, 1], "A")],
            extra_edges: vec![],
        };
        assert!(matches!(paste(&same_slot), Err(GadgetError::SelfIdentification { .. })));

        let parallel = PasteRecipe {
            slot_names: ["a", "b", "c"].map(String::from).to_vec(),
            parts: vec![part(vec![0, 1, 2], "A")],
            extra_edges: vec![(1, 0)],
        };
        assert!(matches!(paste(&parallel), Err(GadgetError::ParallelEdge(0, 1))));

        let dangling = PasteRecipe {
            slot_names: ["a", "b", "c", "lonely"].map(String::from).to_vec(),
            parts: vec![part(vec![0, 1, 2], "A")],
            extra_edges: vec![],
        };
        assert!(matches!(paste(&dangling), Err(GadgetError::DanglingSlot(3))));

        let out_of_range = PasteRecipe {
            slot_names: ["a", "b", "c"].map(String::from).to_vec(),
            parts: vec![part(vec![0, 1, 2], "A")],
            extra_edges: vec![(0, 7)],
        };
        assert!(matches!(paste(&out_of_range), Err(GadgetError::DanglingSlot(7))));
    }
}
