//! Immutable simple undirected graphs on dense vertex indices `0..n`.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

pub type Vertex = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("edge ({0}, {1}) has an endpoint outside 0..{2}")]
    OutOfRange(Vertex, Vertex, usize),
    #[error("edge ({0}, {0}) is a self-loop")]
    SelfLoop(Vertex),
    #[error("edge ({0}, {1}) appears more than once")]
    DuplicateEdge(Vertex, Vertex),
    #[error("vertex {0} is outside 0..{1}")]
    VertexOutOfRange(Vertex, usize),
}

/// An undirected simple graph.
///
/// Edges are stored normalized (`u < v`) and sorted, so two graphs built from
/// the same edge set in any order compare equal. Labels are display metadata.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(Vertex, Vertex)>,
    adj: Vec<Vec<Vertex>>,
    labels: BTreeMap<Vertex, String>,
}

impl Graph {
    pub fn new(n: usize, edge_list: &[(Vertex, Vertex)]) -> Result<Self, GraphError> {
        let mut edges = Vec::with_capacity(edge_list.len());
        for &(u, v) in edge_list {
            if u >= n || v >= n {
                return Err(GraphError::OutOfRange(u, v, n));
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            edges.push((u.min(v), u.max(v)));
        }
        edges.sort_unstable();
        if let Some(w) = edges.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::DuplicateEdge(w[0].0, w[0].1));
        }
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph {
            n,
            edges,
            adj,
            labels: BTreeMap::new(),
        })
    }

    pub fn empty(n: usize) -> Self {
        Graph::new(n, &[]).expect("edgeless graph is always valid")
    }

    pub fn complete(n: usize) -> Self {
        let edges: Vec<_> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        Graph::new(n, &edges).expect("complete graph is always valid")
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycle needs at least 3 vertices");
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::new(n, &edges).expect("cycle is always valid")
    }

    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::new(n, &edges).expect("path is always valid")
    }

    /// Attach display labels. Labels for out-of-range vertices are rejected.
    pub fn with_labels<I, S>(mut self, labels: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (Vertex, S)>,
        S: Into<String>,
    {
        for (v, name) in labels {
            if v >= self.n {
                return Err(GraphError::VertexOutOfRange(v, self.n));
            }
            self.labels.insert(v, name.into());
        }
        Ok(self)
    }

    pub fn without_labels(mut self) -> Self {
        self.labels.clear();
        self
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    /// Edges as sorted `(u, v)` pairs with `u < v`.
    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.n && v < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    pub fn labels(&self) -> &BTreeMap<Vertex, String> {
        &self.labels
    }

    pub fn label(&self, v: Vertex) -> Option<&str> {
        self.labels.get(&v).map(String::as_str)
    }

    /// Vertex carrying the given label, if any.
    pub fn vertex_by_label(&self, name: &str) -> Option<Vertex> {
        self.labels
            .iter()
            .find(|(_, l)| l.as_str() == name)
            .map(|(&v, _)| v)
    }

    /// Label if present, otherwise the index.
    pub fn display_name(&self, v: Vertex) -> String {
        self.label(v).map_or_else(|| v.to_string(), str::to_owned)
    }

    pub fn check_vertex(&self, v: Vertex) -> Result<(), GraphError> {
        if v < self.n {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange(v, self.n))
        }
    }

    /// Same vertex count and edge set; labels ignored.
    pub fn same_structure(&self, other: &Graph) -> bool {
        self.n == other.n && self.edges == other.edges
    }

    /// New graph with one more edge.
    pub fn with_edge(&self, u: Vertex, v: Vertex) -> Result<Graph, GraphError> {
        let mut edges = self.edges.clone();
        edges.push((u, v));
        let g = Graph::new(self.n, &edges)?;
        Ok(Graph {
            labels: self.labels.clone(),
            ..g
        })
    }

    /// New graph with the edge `{u, v}` removed (no-op if absent).
    pub fn without_edge(&self, u: Vertex, v: Vertex) -> Graph {
        let key = (u.min(v), u.max(v));
        let edges: Vec<_> = self.edges.iter().copied().filter(|&e| e != key).collect();
        let g = Graph::new(self.n, &edges).expect("subset of a valid edge set");
        Graph {
            labels: self.labels.clone(),
            ..g
        }
    }

    /// Keep only the listed edges (a spanning subgraph on the same vertex set).
    pub fn spanning_subgraph(&self, keep: &[(Vertex, Vertex)]) -> Graph {
        Graph::new(self.n, keep).expect("subset of a valid edge set")
    }

    /// Delete vertex `v`; vertices above `v` shift down by one. Labels follow.
    pub fn without_vertex(&self, v: Vertex) -> Graph {
        let shift = |x: Vertex| if x > v { x - 1 } else { x };
        let edges: Vec<_> = self
            .edges
            .iter()
            .filter(|&&(a, b)| a != v && b != v)
            .map(|&(a, b)| (shift(a), shift(b)))
            .collect();
        let mut g = Graph::new(self.n - 1, &edges).expect("induced subgraph is valid");
        g.labels = self
            .labels
            .iter()
            .filter(|(&x, _)| x != v)
            .map(|(&x, l)| (shift(x), l.clone()))
            .collect();
        g
    }

    /// Contract edge `{u, v}` into `min(u, v)`; parallel edges collapse.
    pub fn contract_edge(&self, u: Vertex, v: Vertex) -> Graph {
        let (keep, gone) = (u.min(v), u.max(v));
        let shift = |x: Vertex| {
            let x = if x == gone { keep } else { x };
            if x > gone {
                x - 1
            } else {
                x
            }
        };
        let mut edges: Vec<_> = self
            .edges
            .iter()
            .map(|&(a, b)| (shift(a), shift(b)))
            .filter(|&(a, b)| a != b)
            .map(|(a, b)| (a.min(b), a.max(b)))
            .collect();
        edges.sort_unstable();
        edges.dedup();
        let mut g = Graph::new(self.n - 1, &edges).expect("contraction is simple");
        g.labels = self
            .labels
            .iter()
            .filter(|(&x, _)| x != gone)
            .map(|(&x, l)| (shift(x), l.clone()))
            .collect();
        g
    }

    /// Relabel vertices: vertex `v` becomes `perm[v]`.
    pub fn permuted(&self, perm: &[Vertex]) -> Graph {
        assert_eq!(perm.len(), self.n, "permutation length must equal n");
        let edges: Vec<_> = self
            .edges
            .iter()
            .map(|&(u, v)| (perm[u], perm[v]))
            .collect();
        let mut g = Graph::new(self.n, &edges).expect("permutation preserves simplicity");
        g.labels = self
            .labels
            .iter()
            .map(|(&v, l)| (perm[v], l.clone()))
            .collect();
        g
    }

    /// Disjoint union; `other`'s vertices are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let off = self.n;
        let mut edges = self.edges.clone();
        edges.extend(other.edges.iter().map(|&(u, v)| (u + off, v + off)));
        Graph::new(self.n + other.n, &edges).expect("disjoint union is simple")
    }

    /// Connected component index per vertex, and the component count.
    pub fn components(&self) -> (Vec<usize>, usize) {
        let mut comp = vec![usize::MAX; self.n];
        let mut count = 0;
        let mut stack = Vec::new();
        for s in 0..self.n {
            if comp[s] != usize::MAX {
                continue;
            }
            comp[s] = count;
            stack.push(s);
            while let Some(u) = stack.pop() {
                for &w in &self.adj[u] {
                    if comp[w] == usize::MAX {
                        comp[w] = count;
                        stack.push(w);
                    }
                }
            }
            count += 1;
        }
        (comp, count)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_and_single_vertex() {
        let t = Graph::new(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(t.m(), 3);
        assert!(t.has_edge(2, 0));
        let one = Graph::new(1, &[]).unwrap();
        assert_eq!((one.n(), one.m()), (1, 0));
    }

    #[test]
    fn construction_errors_name_the_pair() {
        assert_eq!(
            Graph::new(3, &[(0, 3)]),
            Err(GraphError::OutOfRange(0, 3, 3))
        );
        assert_eq!(Graph::new(3, &[(1, 1)]), Err(GraphError::SelfLoop(1)));
        assert_eq!(
            Graph::new(3, &[(0, 1), (1, 0)]),
            Err(GraphError::DuplicateEdge(0, 1))
        );
    }

    #[test]
    fn adjacency_matches_edges() {
        let g = Graph::new(5, &[(4, 0), (1, 3), (2, 4)]).unwrap();
        for u in 0..5 {
            for v in 0..5 {
                let in_edges = g.edges().contains(&(u.min(v), u.max(v)));
                assert_eq!(g.has_edge(u, v), in_edges);
            }
        }
    }

    #[test]
    fn vertex_deletion_and_contraction() {
        let c4 = Graph::cycle(4);
        let p3 = c4.without_vertex(0);
        assert!(p3.same_structure(&Graph::path(3)));
        let c3 = c4.contract_edge(0, 1);
        assert!(c3.same_structure(&Graph::cycle(3)));
        let t = Graph::cycle(3).contract_edge(1, 2);
        assert_eq!((t.n(), t.m()), (2, 1));
    }

    #[test]
    fn labels_follow_permutation() {
        let g = Graph::path(3).with_labels([(0, "a"), (2, "c")]).unwrap();
        let p = g.permuted(&[2, 0, 1]);
        assert_eq!(p.label(2), Some("a"));
        assert_eq!(p.label(1), Some("c"));
        assert_eq!(p.vertex_by_label("a"), Some(2));
    }
}
