//! Structural predicates: distances, short cycles, planarity, and the
//! triangle-adjacency hypotheses.

mod cycles;
mod planarity;
mod triangles;

pub use cycles::{cycles_of_length, forbidden_cycle_check, CycleError, CycleWitness};
pub use planarity::{
    check_embedding, check_obstruction, embed, is_planar, terminals_cofacial, Kuratowski,
    KuratowskiSubdivision, PlanarityCertificate,
};
pub use triangles::{triangle_edge_conflicts, triangles, triangles_sharing_edge, TriangleConflict};

use std::collections::VecDeque;

use crate::graph::{Graph, GraphError, Vertex};

/// Breadth-first distances from `source`; `None` marks unreachable vertices.
pub fn distances_from(g: &Graph, source: Vertex) -> Vec<Option<usize>> {
    let mut dist = vec![None; g.n()];
    dist[source] = Some(0);
    let mut queue = VecDeque::from([source]);
    while let Some(u) = queue.pop_front() {
        let d = dist[u].expect("queued vertices are reached");
        for &w in g.neighbors(u) {
            if dist[w].is_none() {
                dist[w] = Some(d + 1);
                queue.push_back(w);
            }
        }
    }
    dist
}

/// Length of a shortest `u`–`v` path, or `None` when they are disconnected.
pub fn distance(g: &Graph, u: Vertex, v: Vertex) -> Result<Option<usize>, GraphError> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    Ok(distances_from(g, u)[v])
}

/// A shortest path from `u` to `v` as a vertex sequence, if one exists.
pub fn shortest_path(g: &Graph, u: Vertex, v: Vertex) -> Result<Option<Vec<Vertex>>, GraphError> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    let mut parent = vec![usize::MAX; g.n()];
    parent[u] = u;
    let mut queue = VecDeque::from([u]);
    while let Some(x) = queue.pop_front() {
        if x == v {
            break;
        }
        for &w in g.neighbors(x) {
            if parent[w] == usize::MAX {
                parent[w] = x;
                queue.push_back(w);
            }
        }
    }
    if parent[v] == usize::MAX {
        return Ok(None);
    }
    let mut path = vec![v];
    while *path.last().unwrap() != u {
        path.push(parent[*path.last().unwrap()]);
    }
    path.reverse();
    Ok(Some(path))
}

/// Pairwise distances between the listed vertices.
pub fn distance_matrix(g: &Graph, vertices: &[Vertex]) -> Vec<Vec<Option<usize>>> {
    vertices
        .iter()
        .map(|&s| {
            let d = distances_from(g, s);
            vertices.iter().map(|&t| d[t]).collect()
        })
        .collect()
}
