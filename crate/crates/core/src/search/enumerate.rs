//! Depth-first enumeration over template decisions. Each added edge is
//! rejected immediately if it closes a forbidden cycle, and each decision is
//! rejected if a terminal pair falls below its distance lower bound (adding
//! edges never increases distances). Surviving leaves are verified against
//! the full contract, possibly in parallel, then ordered by vertex count,
//! edge count and canonical key.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{SearchError, SearchSpec};
use crate::canon::{canonical_form_colored, CanonicalForm};
use crate::gadget::{verify_against, InterfaceContract, TerminalGadget};
use crate::graph::{Graph, Vertex};

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchStats {
    pub nodes: u64,
    pub pruned: u64,
    pub candidates: u64,
    pub verified: u64,
    pub duplicates: u64,
}

#[derive(Debug, Clone)]
pub struct SearchOutcome {
    pub gadgets: Vec<TerminalGadget>,
    pub stats: SearchStats,
}

enum Decision {
    Optional(Vertex, Vertex),
    Attach {
        vertex: Vertex,
        options: Vec<Vec<Vertex>>,
        /// Previous decision whose option index bounds this one from below.
        after: Option<usize>,
    },
}

struct Plan {
    n: usize,
    labels: Vec<String>,
    fixed: Vec<(Vertex, Vertex)>,
    decisions: Vec<Decision>,
}

fn subsets(pool: &[Vertex], min: usize, max: usize) -> Vec<Vec<Vertex>> {
    let mut out = Vec::new();
    for size in min..=max.min(pool.len()) {
        let mut idx: Vec<usize> = (0..size).collect();
        loop {
            out.push(idx.iter().map(|&i| pool[i]).collect());
            let mut i = size;
            loop {
                if i == 0 {
                    break;
                }
                i -= 1;
                if idx[i] < pool.len() - size + i {
                    idx[i] += 1;
                    for j in i + 1..size {
                        idx[j] = idx[j - 1] + 1;
                    }
                    break;
                }
                if i == 0 {
                    idx.clear();
                }
            }
            if idx.is_empty() || size == 0 {
                break;
            }
        }
    }
    out
}

fn plans(spec: &SearchSpec) -> Result<Vec<Plan>, SearchError> {
    let Some(t) = &spec.template else {
        return Ok((spec.terminals.max(1)..=spec.max_vertices)
            .map(|n| Plan {
                n,
                labels: (0..n).map(|v| ((b'a' + v as u8) as char).to_string()).collect(),
                fixed: Vec::new(),
                decisions: (0..n)
                    .flat_map(|u| (u + 1..n).map(move |v| Decision::Optional(u, v)))
                    .collect(),
            })
            .collect());
    };
    let mut fixed = Vec::new();
    for [u, v] in &t.fixed_edges {
        fixed.push((t.vertex(u)?, t.vertex(v)?));
    }
    let mut decisions = Vec::new();
    for [u, v] in &t.optional_edges {
        decisions.push(Decision::Optional(t.vertex(u)?, t.vertex(v)?));
    }
    for r in &t.rules {
        let pool: Vec<Vertex> = t.layer(&r.to)?.collect();
        let options = subsets(&pool, r.min, r.max);
        let mut prev: Option<usize> = None;
        for vertex in t.layer(&r.from)? {
            decisions.push(Decision::Attach {
                vertex,
                options: options.clone(),
                after: if r.interchangeable { prev } else { None },
            });
            prev = Some(decisions.len() - 1);
        }
    }
    Ok(vec![Plan {
        n: t.vertex_count(),
        labels: t.labels(),
        fixed,
        decisions,
    }])
}

struct Walker<'a> {
    plan: &'a Plan,
    spec: &'a SearchSpec,
    forbidden: Vec<usize>,
    adj: Vec<u64>,
    edges: Vec<(Vertex, Vertex)>,
    chosen: Vec<usize>,
    stats: SearchStats,
    leaves: Vec<Vec<(Vertex, Vertex)>>,
}

impl Walker<'_> {
    fn path_of_length(&self, u: Vertex, v: Vertex, len: usize, visited: u64) -> bool {
        if len == 1 {
            return self.adj[u] >> v & 1 == 1;
        }
        let mut cand = self.adj[u] & !visited & !(1 << v);
        while cand != 0 {
            let w = cand.trailing_zeros() as usize;
            cand &= cand - 1;
            if self.path_of_length(w, v, len - 1, visited | 1 << w) {
                return true;
            }
        }
        false
    }

    /// Add `u-v` unless it is already present or closes a forbidden cycle.
    fn try_add(&mut self, u: Vertex, v: Vertex) -> bool {
        if u == v || self.adj[u] >> v & 1 == 1 {
            return false;
        }
        let visited = 1u64 << u;
        if self
            .forbidden
            .iter()
            .any(|&k| self.path_of_length(u, v, k - 1, visited))
        {
            return false;
        }
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
        self.edges.push((u, v));
        true
    }

    fn pop_edges(&mut self, to: usize) {
        while self.edges.len() > to {
            let (u, v) = self.edges.pop().unwrap();
            self.adj[u] &= !(1 << v);
            self.adj[v] &= !(1 << u);
        }
    }

    fn terminal_distances(&self) -> Vec<Vec<Option<usize>>> {
        let t = self.spec.terminals;
        (0..t)
            .map(|s| {
                let mut dist = vec![None; t];
                let mut seen = 1u64 << s;
                let mut frontier = 1u64 << s;
                let mut d = 0;
                while frontier != 0 {
                    for (j, slot) in dist.iter_mut().enumerate() {
                        if frontier >> j & 1 == 1 {
                            *slot = Some(d);
                        }
                    }
                    let mut next = 0u64;
                    let mut f = frontier;
                    while f != 0 {
                        let x = f.trailing_zeros() as usize;
                        f &= f - 1;
                        next |= self.adj[x];
                    }
                    frontier = next & !seen;
                    seen |= next;
                    d += 1;
                }
                dist
            })
            .collect()
    }

    fn distances_ok(&self, exact: bool) -> bool {
        let c = &self.spec.contract;
        let dist = self.terminal_distances();
        let t = self.spec.terminals;
        for i in 0..t {
            for j in i + 1..t {
                if let Some(d) = dist[i][j] {
                    if d < c.min_terminal_distances[i][j] {
                        return false;
                    }
                }
                if exact {
                    if let Some(e) = &c.exact_terminal_distances {
                        if dist[i][j] != Some(e[i][j]) {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    fn walk(&mut self, depth: usize) {
        self.stats.nodes += 1;
        if depth == self.plan.decisions.len() {
            if self.distances_ok(true) {
                self.stats.candidates += 1;
                self.leaves.push(self.edges.clone());
            }
            return;
        }
        let mark = self.edges.len();
        match &self.plan.decisions[depth] {
            &Decision::Optional(u, v) => {
                self.chosen[depth] = 0;
                self.walk(depth + 1);
                if self.try_add(u, v) {
                    self.chosen[depth] = 1;
                    if self.distances_ok(false) {
                        self.walk(depth + 1);
                    } else {
                        self.stats.pruned += 1;
                    }
                    self.pop_edges(mark);
                } else {
                    self.stats.pruned += 1;
                }
            }
            Decision::Attach { vertex, options, after } => {
                let (vertex, after) = (*vertex, *after);
                let start = after.map_or(0, |a| self.chosen[a]);
                for oi in start..options.len() {
                    let ok = match &self.plan.decisions[depth] {
                        Decision::Attach { options, .. } => {
                            let targets = options[oi].clone();
                            targets.into_iter().all(|w| self.try_add(vertex, w))
                        }
                        Decision::Optional(..) => unreachable!(),
                    };
                    if ok && self.distances_ok(false) {
                        self.chosen[depth] = oi;
                        self.walk(depth + 1);
                    } else {
                        self.stats.pruned += 1;
                    }
                    self.pop_edges(mark);
                }
            }
        }
    }
}

/// Isomorphism key of a gadget, taking the minimum over the terminal
/// reorderings under which the contract is unchanged.
pub fn gadget_key(g: &TerminalGadget, contract: &InterfaceContract) -> CanonicalForm {
    let t = g.terminals().len();
    let mut best: Option<CanonicalForm> = None;
    for perm in permutations(t) {
        if contract.permuted(&perm) != *contract {
            continue;
        }
        let mut colors = vec![0; g.graph().n()];
        for (i, &p) in perm.iter().enumerate() {
            colors[g.terminals()[p]] = i + 1;
        }
        let form = canonical_form_colored(g.graph(), &colors);
        if best.as_ref().map_or(true, |b| form < *b) {
            best = Some(form);
        }
    }
    best.expect("the identity always preserves the contract")
}

fn permutations(t: usize) -> Vec<Vec<usize>> {
    if t == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(t - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, t - 1);
            out.push(q);
        }
    }
    out
}

/// Run the search to completion and return up to `limit` gadgets in search
/// order. `jobs` bounds the worker threads used to verify candidates;
/// `on_event` receives progress lines.
pub fn search_gadget(
    spec: &SearchSpec,
    limit: usize,
    jobs: usize,
    on_event: &mut dyn FnMut(&str),
) -> Result<SearchOutcome, SearchError> {
    spec.validate()?;
    let mut stats = SearchStats::default();
    let mut found: Vec<(usize, usize, CanonicalForm, TerminalGadget)> = Vec::new();
    if spec.max_vertices < spec.terminals {
        return Ok(SearchOutcome {
            gadgets: Vec::new(),
            stats,
        });
    }
    let contract = InterfaceContract {
        verified: false,
        ..spec.contract.clone()
    };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| SearchError::InvalidSpec(format!("thread pool: {e}")))?;
    for plan in plans(spec)? {
        let mut walker = Walker {
            plan: &plan,
            spec,
            forbidden: contract.forbidden_cycle_lengths.iter().copied().collect(),
            adj: vec![0; plan.n],
            edges: Vec::new(),
            chosen: vec![0; plan.decisions.len()],
            stats: SearchStats::default(),
            leaves: Vec::new(),
        };
        let fixed = plan.fixed.clone();
        if fixed.iter().all(|&(u, v)| walker.try_add(u, v)) && walker.distances_ok(false) {
            walker.walk(0);
        }
        let leaves = std::mem::take(&mut walker.leaves);
        stats.nodes += walker.stats.nodes;
        stats.pruned += walker.stats.pruned;
        stats.candidates += walker.stats.candidates;
        on_event(&format!(
            "n={}: {} nodes, {} pruned, {} candidates",
            plan.n, walker.stats.nodes, walker.stats.pruned, walker.stats.candidates
        ));
        let verified: Vec<Option<TerminalGadget>> = pool.install(|| {
            leaves
                .par_iter()
                .map(|edges| {
                    let graph = Graph::new(plan.n, edges)
                        .expect("walker keeps edges simple")
                        .with_labels(plan.labels.iter().cloned().enumerate())
                        .expect("labels in range");
                    let g = TerminalGadget::new(graph, (0..spec.terminals).collect())
                        .expect("terminals are the first vertices")
                        .with_contract(contract.clone());
                    verify_against(&g, &contract).overall.then_some(g)
                })
                .collect()
        });
        for g in verified.into_iter().flatten() {
            stats.verified += 1;
            let key = gadget_key(&g, &contract);
            on_event(&format!("verified candidate with {} edges", g.graph().m()));
            found.push((g.graph().n(), g.graph().m(), key, g));
        }
    }
    found.sort_by(|a, b| (a.0, a.1, &a.2).cmp(&(b.0, b.1, &b.2)));
    if spec.dedup {
        let before = found.len();
        found.dedup_by(|a, b| a.2 == b.2);
        stats.duplicates = (before - found.len()) as u64;
    }
    Ok(SearchOutcome {
        gadgets: found.into_iter().take(limit).map(|f| f.3).collect(),
        stats,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::Pattern;

    #[test]
    fn subset_enumeration() {
        assert_eq!(subsets(&[1, 2, 3], 2, 2), vec![vec![1, 2], vec![1, 3], vec![2, 3]]);
        assert_eq!(subsets(&[1, 2], 1, 2).len(), 3);
        assert_eq!(subsets(&[1, 2], 0, 0), vec![Vec::<usize>::new()]);
    }

    #[test]
    fn too_few_vertices_is_empty() {
        let spec = SearchSpec {
            max_vertices: 2,
            terminals: 3,
            template: None,
            contract: InterfaceContract::forcing_unequal(3),
            dedup: true,
        };
        assert!(search_gadget(&spec, 10, 1, &mut |_| {}).unwrap().gadgets.is_empty());
    }

    #[test]
    fn triangle_contract_on_three_vertices() {
        let spec = SearchSpec {
            max_vertices: 3,
            terminals: 3,
            template: None,
            contract: InterfaceContract::forcing_unequal(3),
            dedup: true,
        };
        let out = search_gadget(&spec, 10, 1, &mut |_| {}).unwrap();
        // Up to terminal symmetry: one edge, a path, the triangle.
        let sizes: Vec<_> = out.gadgets.iter().map(|g| g.graph().m()).collect();
        assert_eq!(sizes, vec![1, 2, 3]);
        let tri = &out.gadgets[2];
        assert!(tri.graph().same_structure(&Graph::cycle(3)));
        assert!(verify_against(tri, &InterfaceContract::forcing_unequal(3)).overall);
    }

    #[test]
    fn key_respects_contract_symmetry() {
        // Path 0-1-2 with the middle vertex as second vs third terminal.
        let p = Graph::path(3);
        let g1 = TerminalGadget::new(p.clone(), vec![0, 1, 2]).unwrap();
        let g2 = TerminalGadget::new(p, vec![0, 2, 1]).unwrap();
        let sym = InterfaceContract::forcing_unequal(3);
        assert_eq!(gadget_key(&g1, &sym), gadget_key(&g2, &sym));
        let mut asym = sym.clone();
        asym.forbidden_patterns.insert(Pattern::of_colors(&[0, 0, 1]));
        assert_ne!(gadget_key(&g1, &asym), gadget_key(&g2, &asym));
    }
}
