//! Exact canonical labeling by partition refinement and individualization.
//!
//! Every leaf of the search tree is a discrete ordered partition, i.e. a
//! relabeling; the canonical form is the lexicographically largest graph6
//! string over all leaves. Automorphisms found along the way (two leaves with
//! the same string) prune children lying in an already-explored orbit.

use std::fmt;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::formats::graph6;
use crate::graph::{Graph, Vertex};

/// Canonical string: equal for two graphs iff they are isomorphic.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct CanonicalForm(String);

impl CanonicalForm {
    pub fn as_str(&self) -> &str {
        &self.0
    }

    /// Hex SHA-256 of the canonical string.
    pub fn digest(&self) -> String {
        hex::encode(Sha256::digest(self.0.as_bytes()))
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    canonical_labeling(g).0
}

/// Canonical form of a vertex-colored graph: isomorphisms must map each
/// color class onto the same class. The class sizes are part of the form.
pub fn canonical_form_colored(g: &Graph, colors: &[usize]) -> CanonicalForm {
    assert_eq!(colors.len(), g.n(), "one color per vertex");
    let mut classes: std::collections::BTreeMap<usize, Vec<Vertex>> = Default::default();
    for (v, &c) in colors.iter().enumerate() {
        classes.entry(c).or_default().push(v);
    }
    let sizes: Vec<String> = classes
        .iter()
        .map(|(c, vs)| format!("{c}x{}", vs.len()))
        .collect();
    let form = labeling_from(g, classes.into_values().collect()).0;
    CanonicalForm(format!("{}|{}", form.0, sizes.join(",")))
}

/// Canonical form together with a labeling `perm` (vertex `v` becomes
/// `perm[v]`) such that `g.permuted(&perm)` encodes to the form.
pub fn canonical_labeling(g: &Graph) -> (CanonicalForm, Vec<Vertex>) {
    labeling_from(g, vec![(0..g.n()).collect()])
}

fn labeling_from(g: &Graph, initial: Partition) -> (CanonicalForm, Vec<Vertex>) {
    let n = g.n();
    if n == 0 {
        return (CanonicalForm(graph6::encode(g)), Vec::new());
    }
    let mut search = Search {
        g,
        best: None,
        automorphisms: Vec::new(),
    };
    let root = refine(g, initial);
    search.descend(root, &mut Vec::new());
    let (form, order, _) = search.best.expect("at least one leaf is visited");
    let mut perm = vec![0; n];
    for (pos, &v) in order.iter().enumerate() {
        perm[v] = pos;
    }
    (CanonicalForm(form), perm)
}

type Partition = Vec<Vec<Vertex>>;

struct Search<'a> {
    g: &'a Graph,
    best: Option<(String, Vec<Vertex>, Vec<Vertex>)>,
    automorphisms: Vec<Vec<Vertex>>,
}

impl Search<'_> {
    /// Returns `Some(d)` when the current path was found to be the image of
    /// an explored one under an automorphism fixing the first `d`
    /// individualized vertices; everything below depth `d` is then redundant.
    fn descend(&mut self, partition: Partition, prefix: &mut Vec<Vertex>) -> Option<usize> {
        let Some(target) = partition
            .iter()
            .enumerate()
            .filter(|(_, c)| c.len() > 1)
            .min_by_key(|(i, c)| (c.len(), *i))
            .map(|(i, _)| i)
        else {
            return self.leaf(partition.into_iter().map(|c| c[0]).collect(), prefix);
        };
        let depth = prefix.len();
        let mut tried: Vec<Vertex> = Vec::new();
        for &v in &partition[target] {
            if !tried.is_empty() && self.same_orbit_as_tried(prefix, &tried, v) {
                continue;
            }
            tried.push(v);
            let mut child = partition.clone();
            let mut rest = child[target].clone();
            rest.retain(|&x| x != v);
            child.splice(target..=target, [vec![v], rest]);
            prefix.push(v);
            let abort = self.descend(refine(self.g, child), prefix);
            prefix.pop();
            if let Some(d) = abort {
                if d < depth {
                    return Some(d);
                }
            }
        }
        None
    }

    /// Whether `v` is the image of some tried vertex under the group generated
    /// by known automorphisms fixing `prefix` pointwise.
    fn same_orbit_as_tried(&self, prefix: &[Vertex], tried: &[Vertex], v: Vertex) -> bool {
        let n = self.g.n();
        let mut parent: Vec<Vertex> = (0..n).collect();
        fn find(parent: &mut [Vertex], mut x: Vertex) -> Vertex {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        let mut any = false;
        for aut in &self.automorphisms {
            if prefix.iter().all(|&p| aut[p] == p) {
                any = true;
                for x in 0..n {
                    let (a, b) = (find(&mut parent, x), find(&mut parent, aut[x]));
                    parent[a] = b;
                }
            }
        }
        if !any {
            return false;
        }
        let root = find(&mut parent, v);
        tried.iter().any(|&t| find(&mut parent, t) == root)
    }

    fn leaf(&mut self, order: Vec<Vertex>, prefix: &[Vertex]) -> Option<usize> {
        let n = self.g.n();
        let mut perm = vec![0; n];
        for (pos, &v) in order.iter().enumerate() {
            perm[v] = pos;
        }
        let form = graph6::encode(&self.g.permuted(&perm));
        match &self.best {
            Some((best, best_order, best_prefix)) if *best == form => {
                // order[i] and best_order[i] play the same role.
                let mut aut = vec![0; n];
                for (&a, &b) in best_order.iter().zip(&order) {
                    aut[a] = b;
                }
                self.automorphisms.push(aut);
                let common = best_prefix
                    .iter()
                    .zip(prefix)
                    .take_while(|(a, b)| a == b)
                    .count();
                Some(common)
            }
            Some((best, ..)) if *best > form => None,
            _ => {
                self.best = Some((form, order, prefix.to_vec()));
                None
            }
        }
    }
}

/// Equitable refinement: split cells by the count of neighbors in every cell
/// until stable. Sub-cells are ordered by their signature, so the result is
/// invariant under relabeling.
fn refine(g: &Graph, mut partition: Partition) -> Partition {
    let n = g.n();
    let mut cell_of = vec![0; n];
    loop {
        for (i, cell) in partition.iter().enumerate() {
            for &v in cell {
                cell_of[v] = i;
            }
        }
        let mut next: Partition = Vec::with_capacity(partition.len());
        for cell in &partition {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<(usize, usize)>, Vertex)> = cell
                .iter()
                .map(|&v| {
                    let mut counts: Vec<usize> = g.neighbors(v).iter().map(|&w| cell_of[w]).collect();
                    counts.sort_unstable();
                    let mut sig: Vec<(usize, usize)> = Vec::new();
                    for c in counts {
                        match sig.last_mut() {
                            Some((cc, k)) if *cc == c => *k += 1,
                            _ => sig.push((c, 1)),
                        }
                    }
                    (sig, v)
                })
                .collect();
            keyed.sort();
            let mut start = 0;
            for i in 1..=keyed.len() {
                if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                    next.push(keyed[start..i].iter().map(|(_, v)| *v).collect());
                    start = i;
                }
            }
        }
        if next.len() == partition.len() {
            return next;
        }
        partition = next;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn c4_relabelings_agree() {
        let a = Graph::new(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let b = Graph::new(4, &[(0, 2), (2, 1), (1, 3), (3, 0)]).unwrap();
        assert_eq!(canonical_form(&a), canonical_form(&b));
        assert_ne!(canonical_form(&a), canonical_form(&Graph::path(4)));
    }

    #[test]
    fn labeling_reproduces_form() {
        let g = Graph::new(6, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5)]).unwrap();
        let (form, perm) = canonical_labeling(&g);
        assert_eq!(graph6::encode(&g.permuted(&perm)), form.as_str());
    }

    #[test]
    fn eleven_graphs_on_four_vertices() {
        let pairs: Vec<_> = (0..4).flat_map(|u| (u + 1..4).map(move |v| (u, v))).collect();
        let mut forms = std::collections::BTreeSet::new();
        for mask in 0u32..64 {
            let edges: Vec<_> = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            forms.insert(canonical_form(&Graph::new(4, &edges).unwrap()));
        }
        assert_eq!(forms.len(), 11);
    }

    #[test]
    fn colors_distinguish_roles() {
        let p = Graph::path(3);
        // endpoint marked vs. middle marked
        let a = canonical_form_colored(&p, &[1, 0, 0]);
        let b = canonical_form_colored(&p, &[0, 1, 0]);
        let c = canonical_form_colored(&p, &[0, 0, 1]);
        assert_ne!(a, b);
        assert_eq!(a, c);
    }

    #[test]
    fn symmetric_graphs_terminate() {
        // Large automorphism groups: orbit pruning keeps these fast.
        assert_eq!(canonical_form(&Graph::complete(9)), canonical_form(&Graph::complete(9)));
        let g = Graph::cycle(40);
        let h = g.permuted(&(0..40).rev().collect::<Vec<_>>());
        assert_eq!(canonical_form(&g), canonical_form(&h));
        let e = Graph::empty(12);
        assert_eq!(canonical_form(&e).as_str(), graph6::encode(&e));
    }
}
