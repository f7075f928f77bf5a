use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, Vertex};

/// A simple cycle `v0 v1 … v(k-1)`, reported with its smallest vertex first
/// and `v1 < v(k-1)`, so each cycle has exactly one representation.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct CycleWitness(pub Vec<Vertex>);

impl CycleWitness {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.0
    }

    /// Edges in traversal order, including the closing edge.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        let k = self.0.len();
        (0..k).map(move |i| (self.0[i], self.0[(i + 1) % k]))
    }

    pub fn contains_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.edges().any(|(a, b)| (a == u && b == v) || (a == v && b == u))
    }

    /// Whether this is a genuine cycle of `g`.
    pub fn is_valid_in(&self, g: &Graph) -> bool {
        let mut seen = self.0.clone();
        seen.sort_unstable();
        seen.dedup();
        self.0.len() >= 3
            && seen.len() == self.0.len()
            && self.0.iter().all(|&v| v < g.n())
            && self.edges().all(|(a, b)| g.has_edge(a, b))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("cycle length {0} outside the supported range 3..=6")]
pub struct CycleError(pub usize);

/// All cycles of length exactly `k`, sorted, each reported once.
pub fn cycles_of_length(g: &Graph, k: usize) -> Result<Vec<CycleWitness>, CycleError> {
    if !(3..=6).contains(&k) {
        return Err(CycleError(k));
    }
    let mut out = Vec::new();
    let mut path = Vec::with_capacity(k);
    let mut on_path = vec![false; g.n()];
    for start in 0..g.n() {
        path.push(start);
        on_path[start] = true;
        extend(g, k, start, &mut path, &mut on_path, &mut out, false);
        on_path[start] = false;
        path.pop();
    }
    out.sort();
    Ok(out)
}

fn extend(
    g: &Graph,
    k: usize,
    start: Vertex,
    path: &mut Vec<Vertex>,
    on_path: &mut [bool],
    out: &mut Vec<CycleWitness>,
    stop_at_first: bool,
) -> bool {
    let last = *path.last().unwrap();
    if path.len() == k {
        if g.has_edge(last, start) && path[1] < last {
            out.push(CycleWitness(path.clone()));
            return stop_at_first;
        }
        return false;
    }
    for &w in g.neighbors(last) {
        if w <= start || on_path[w] {
            continue;
        }
        path.push(w);
        on_path[w] = true;
        let done = extend(g, k, start, path, on_path, out, stop_at_first);
        on_path[w] = false;
        path.pop();
        if done {
            return true;
        }
    }
    false
}

/// `Ok(None)` if `g` has no cycle of any listed length, else the first
/// witness found (shortest listed length first).
pub fn forbidden_cycle_check(
    g: &Graph,
    lengths: &[usize],
) -> Result<Option<CycleWitness>, CycleError> {
    let mut lengths = lengths.to_vec();
    lengths.sort_unstable();
    for k in lengths {
        if !(3..=6).contains(&k) {
            return Err(CycleError(k));
        }
        let mut out = Vec::new();
        let mut path = Vec::with_capacity(k);
        let mut on_path = vec![false; g.n()];
        for start in 0..g.n() {
            path.push(start);
            on_path[start] = true;
            let found = extend(g, k, start, &mut path, &mut on_path, &mut out, true);
            on_path[start] = false;
            path.pop();
            if found {
                return Ok(out.pop());
            }
        }
    }
    Ok(None)
}
