//! Backtracking over per-vertex candidate sets. Singleton domains propagate
//! to neighbors; branching picks the smallest domain, ties by highest degree
//! and then lowest index, values in order 0, 1, 2. Colors not yet used
//! anywhere are interchangeable, so only the first of them is tried at each
//! branch. When the decided vertices cut the undecided ones into several
//! components, those are solved one after another without backtracking
//! across them.

use serde::{Deserialize, Serialize};

use super::{Color, ColorAssignment, ColoringError, Verdict, COLORS};
use crate::graph::{Graph, Vertex};

const FULL: u8 = 0b111;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchStats {
    /// Branching decisions made.
    pub decisions: u64,
    /// Dead ends reached (empty domain after propagation).
    pub conflicts: u64,
}

#[derive(Clone)]
struct State {
    domains: Vec<u8>,
    propagated: Vec<bool>,
    used: u8,
}

struct Solver<'a> {
    g: &'a Graph,
    stats: SearchStats,
}

pub fn solve_3coloring(g: &Graph, fixed: &ColorAssignment) -> Result<Verdict, ColoringError> {
    solve_with_stats(g, fixed).map(|(v, _)| v)
}

pub fn solve_with_stats(
    g: &Graph,
    fixed: &ColorAssignment,
) -> Result<(Verdict, SearchStats), ColoringError> {
    fixed.validate_fixed(g)?;
    let mut solver = Solver {
        g,
        stats: SearchStats::default(),
    };
    let verdict = match solver.initial_state(fixed) {
        Some(state) => solver.search(state),
        None => None,
    };
    let verdict = match verdict {
        Some(colors) => Verdict::Sat(colors),
        None => Verdict::Unsat,
    };
    Ok((verdict, solver.stats))
}

/// Re-decide by fixing `root` to each color in turn. Returns one verdict per
/// color; the graph is 3-colorable iff some branch is SAT.
pub fn symmetry_split(
    g: &Graph,
    fixed: &ColorAssignment,
    root: Vertex,
) -> Result<[Verdict; 3], ColoringError> {
    g.check_vertex(root)
        .map_err(|_| ColoringError::VertexOutOfRange(root))?;
    let mut out: [Verdict; 3] = [Verdict::Unsat, Verdict::Unsat, Verdict::Unsat];
    for c in 0..COLORS {
        let mut f = fixed.clone();
        match f.get(root) {
            Some(existing) if existing != c => continue,
            _ => f.set(root, Some(c)),
        }
        match f.validate_fixed(g) {
            Ok(()) => out[c as usize] = solve_3coloring(g, &f)?,
            Err(ColoringError::ImproperFixed(..)) => {}
            Err(e) => return Err(e),
        }
    }
    Ok(out)
}

/// Split the first branching vertex's candidate colors across threads. Same
/// SAT/UNSAT verdict as the sequential solver; the witness may differ.
pub fn solve_3coloring_parallel(g: &Graph, fixed: &ColorAssignment) -> Result<Verdict, ColoringError> {
    fixed.validate_fixed(g)?;
    let mut root_solver = Solver {
        g,
        stats: SearchStats::default(),
    };
    let Some(state) = root_solver.initial_state(fixed) else {
        return Ok(Verdict::Unsat);
    };
    let all: Vec<Vertex> = (0..g.n()).collect();
    let Some(v) = root_solver.pick(&state, &all) else {
        return Ok(Verdict::Sat(state.domains.iter().map(|&d| single(d)).collect()));
    };
    let branches: Vec<State> = root_solver
        .values(&state, v)
        .into_iter()
        .filter_map(|c| root_solver.assign(&state, v, c))
        .collect();
    let results: Vec<Option<Vec<Color>>> = std::thread::scope(|s| {
        let handles: Vec<_> = branches
            .into_iter()
            .map(|b| {
                s.spawn(move || {
                    let mut w = Solver {
                        g,
                        stats: SearchStats::default(),
                    };
                    w.search(b)
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("worker panicked")).collect()
    });
    Ok(results
        .into_iter()
        .flatten()
        .next()
        .map_or(Verdict::Unsat, Verdict::Sat))
}

fn single(d: u8) -> Color {
    debug_assert_eq!(d.count_ones(), 1);
    d.trailing_zeros() as Color
}

impl Solver<'_> {
    fn initial_state(&mut self, fixed: &ColorAssignment) -> Option<State> {
        let n = self.g.n();
        let mut state = State {
            domains: vec![FULL; n],
            propagated: vec![false; n],
            used: 0,
        };
        let mut queue = Vec::new();
        for v in 0..n {
            if let Some(c) = fixed.get(v) {
                state.domains[v] = 1 << c;
                queue.push(v);
            }
        }
        if self.propagate(&mut state, queue) {
            Some(state)
        } else {
            self.stats.conflicts += 1;
            None
        }
    }

    /// Push singleton domains outward. Returns false on an empty domain.
    fn propagate(&self, state: &mut State, mut queue: Vec<Vertex>) -> bool {
        while let Some(v) = queue.pop() {
            if state.propagated[v] {
                continue;
            }
            state.propagated[v] = true;
            let bit = state.domains[v];
            state.used |= bit;
            for &w in self.g.neighbors(v) {
                let d = state.domains[w];
                if d & bit == 0 {
                    continue;
                }
                let nd = d & !bit;
                if nd == 0 {
                    return false;
                }
                state.domains[w] = nd;
                if nd.count_ones() == 1 {
                    queue.push(w);
                }
            }
        }
        true
    }

    /// Smallest domain first, then highest degree, then lowest index.
    fn pick(&self, state: &State, scope: &[Vertex]) -> Option<Vertex> {
        let mut best: Option<(u32, std::cmp::Reverse<usize>, Vertex)> = None;
        for &v in scope {
            let size = state.domains[v].count_ones();
            if size < 2 {
                continue;
            }
            let key = (size, std::cmp::Reverse(self.g.degree(v)), v);
            if best.map_or(true, |b| key < b) {
                best = Some(key);
            }
        }
        best.map(|(_, _, v)| v)
    }

    /// Undecided vertices of `scope` grouped into components of the graph
    /// they induce, each sorted, ordered by smallest vertex.
    fn components(&self, state: &State, scope: &[Vertex]) -> Vec<Vec<Vertex>> {
        let open = |v: Vertex| state.domains[v].count_ones() > 1;
        let mut seen = vec![false; self.g.n()];
        let mut out = Vec::new();
        for &s in scope {
            if seen[s] || !open(s) {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut i = 0;
            while i < comp.len() {
                for &w in self.g.neighbors(comp[i]) {
                    if !seen[w] && open(w) {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
                i += 1;
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out.sort_by_key(|c| c[0]);
        out
    }

    fn values(&self, state: &State, v: Vertex) -> Vec<Color> {
        let mut out = Vec::with_capacity(3);
        let mut fresh_taken = false;
        for c in 0..COLORS {
            let bit = 1 << c;
            if state.domains[v] & bit == 0 {
                continue;
            }
            if state.used & bit == 0 {
                if fresh_taken {
                    continue;
                }
                fresh_taken = true;
            }
            out.push(c);
        }
        out
    }

    fn assign(&mut self, state: &State, v: Vertex, c: Color) -> Option<State> {
        let mut next = state.clone();
        next.domains[v] = 1 << c;
        if self.propagate(&mut next, vec![v]) {
            Some(next)
        } else {
            self.stats.conflicts += 1;
            None
        }
    }

    fn search(&mut self, state: State) -> Option<Vec<Color>> {
        let all: Vec<Vertex> = (0..self.g.n()).collect();
        let solved = self.search_scope(state, &all)?;
        Some(solved.domains.iter().map(|&d| single(d)).collect())
    }

    /// Decide every vertex of `scope`. Once decided vertices separate the
    /// rest into pieces, each piece is solved on its own: a later piece
    /// failing never reopens an earlier one.
    fn search_scope(&mut self, mut state: State, scope: &[Vertex]) -> Option<State> {
        let comps = self.components(&state, scope);
        match comps.len() {
            0 => return Some(state),
            1 => {}
            _ => {
                for comp in comps {
                    state = self.search_scope(state, &comp)?;
                }
                return Some(state);
            }
        }
        let scope = &comps[0];
        let v = self.pick(&state, scope)?;
        for c in self.values(&state, v) {
            self.stats.decisions += 1;
            if let Some(next) = self.assign(&state, v, c) {
                if let Some(sol) = self.search_scope(next, scope) {
                    return Some(sol);
                }
            }
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::is_proper_colors;

    #[test]
    fn k4_unsat_c5_sat() {
        let k4 = Graph::complete(4);
        assert_eq!(solve_3coloring(&k4, &ColorAssignment::empty(4)).unwrap(), Verdict::Unsat);
        let c5 = Graph::cycle(5);
        let v = solve_3coloring(&c5, &ColorAssignment::empty(5)).unwrap();
        assert!(is_proper_colors(&c5, v.coloring().unwrap()));
    }

    #[test]
    fn empty_graph_is_sat() {
        let g = Graph::empty(0);
        assert_eq!(solve_3coloring(&g, &ColorAssignment::empty(0)).unwrap(), Verdict::Sat(vec![]));
    }

    #[test]
    fn respects_fixed_and_rejects_conflicts() {
        let p = Graph::path(3);
        let fixed = ColorAssignment::with_fixed(3, &[(0, 2), (2, 2)]);
        let v = solve_3coloring(&p, &fixed).unwrap();
        let c = v.coloring().unwrap();
        assert_eq!((c[0], c[2]), (2, 2));
        assert_ne!(c[1], 2);
        let bad = ColorAssignment::with_fixed(3, &[(0, 1), (1, 1)]);
        assert_eq!(solve_3coloring(&p, &bad), Err(ColoringError::ImproperFixed(0, 1)));
    }

    #[test]
    fn fixed_colors_break_symmetry_correctly() {
        // Triangle with two vertices fixed to different colors forces the third.
        let t = Graph::cycle(3);
        let v = solve_3coloring(&t, &ColorAssignment::with_fixed(3, &[(0, 2), (1, 0)])).unwrap();
        assert_eq!(v, Verdict::Sat(vec![2, 0, 1]));
    }

    #[test]
    fn parallel_agrees() {
        for g in [Graph::complete(4), Graph::cycle(7), Graph::complete(3)] {
            let f = ColorAssignment::empty(g.n());
            assert_eq!(
                solve_3coloring(&g, &f).unwrap().is_sat(),
                solve_3coloring_parallel(&g, &f).unwrap().is_sat()
            );
        }
    }

    #[test]
    fn split_covers_each_color() {
        let c5 = Graph::cycle(5);
        let split = symmetry_split(&c5, &ColorAssignment::empty(5), 0).unwrap();
        assert!(split.iter().all(Verdict::is_sat));
        let k4 = Graph::complete(4);
        let split = symmetry_split(&k4, &ColorAssignment::empty(4), 3).unwrap();
        assert!(split.iter().all(|v| !v.is_sat()));
    }
}
