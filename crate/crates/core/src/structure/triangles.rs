use serde::{Deserialize, Serialize};

use super::cycles::{cycles_of_length, CycleWitness};
use crate::graph::{Graph, Vertex};

/// A triangle and another short cycle sharing `edge`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TriangleConflict {
    pub edge: (Vertex, Vertex),
    pub triangle: CycleWitness,
    pub other: CycleWitness,
}

pub fn triangles(g: &Graph) -> Vec<CycleWitness> {
    cycles_of_length(g, 3).expect("3 is a supported length")
}

/// Every unordered pair of distinct triangles that share an edge, once per
/// shared edge.
pub fn triangles_sharing_edge(g: &Graph) -> Vec<TriangleConflict> {
    triangle_edge_conflicts(g, &[3])
}

/// Pairs (triangle, k-cycle) with `k` in `ks ⊆ {3, 5}` that share an edge.
/// Triangle–triangle pairs are reported once.
pub fn triangle_edge_conflicts(g: &Graph, ks: &[usize]) -> Vec<TriangleConflict> {
    let tris = triangles(g);
    let mut out = Vec::new();
    for &k in ks {
        assert!(k == 3 || k == 5, "only triangles and pentagons are paired with triangles");
        let others = cycles_of_length(g, k).expect("supported length");
        for (ti, t) in tris.iter().enumerate() {
            for (oi, o) in others.iter().enumerate() {
                if k == 3 && oi <= ti {
                    continue;
                }
                for (u, v) in t.edges() {
                    if o.contains_edge(u, v) {
                        out.push(TriangleConflict {
                            edge: (u.min(v), u.max(v)),
                            triangle: t.clone(),
                            other: o.clone(),
                        });
                    }
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k4_every_edge_shared() {
        let c = triangles_sharing_edge(&Graph::complete(4));
        // 6 pairs of triangles, each pair shares exactly one edge.
        assert_eq!(c.len(), 6);
    }

    #[test]
    fn glued_triangles_one_conflict() {
        let g = Graph::new(4, &[(0, 1), (1, 2), (0, 2), (1, 3), (2, 3)]).unwrap();
        let c = triangle_edge_conflicts(&g, &[3]);
        assert_eq!(c.len(), 1);
        assert_eq!(c[0].edge, (1, 2));
    }

    #[test]
    fn lone_cycles_are_clean() {
        assert!(triangles_sharing_edge(&Graph::cycle(3)).is_empty());
        assert!(triangle_edge_conflicts(&Graph::cycle(5), &[5]).is_empty());
    }

    #[test]
    fn triangle_with_pentagon() {
        // triangle 0-1-2 and pentagon 0-1-3-4-5 share edge 0-1
        let g = Graph::new(6, &[(0, 1), (1, 2), (0, 2), (1, 3), (3, 4), (4, 5), (5, 0)]).unwrap();
        let c = triangle_edge_conflicts(&g, &[3, 5]);
        assert_eq!(c.len(), 1);
        assert_eq!(c[0].other.len(), 5);
    }
}
