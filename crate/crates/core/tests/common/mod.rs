//! Independent reference implementations shared by the integration tests.
//! None of these call into the library beyond `Graph` accessors.

#![allow(dead_code)]

use std::collections::BTreeSet;
use std::path::Path;

use rand::rngs::StdRng;
use rand::Rng;
use steinberg::coloring::{Color, ColorAssignment};
use steinberg::gadget::TerminalGadget;
use steinberg::search::{find_frozen, DATA_DIR};
use steinberg::Graph;

pub fn frozen_g1() -> TerminalGadget {
    find_frozen(Path::new(DATA_DIR), "g1")
        .expect("frozen g1 readable")
        .expect("frozen g1 present")
        .1
}

/// All graphs on `n` vertices, by edge bitmask over pairs in (i<j) order.
pub fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let count = 1u64 << pairs.len();
    (0..count).map(move |mask| {
        let edges: Vec<_> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        Graph::new(n, &edges).unwrap()
    })
}

pub fn random_graph(rng: &mut StdRng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, &edges).unwrap()
}

/// Fix a random subset of vertices to random colors, dropping any choice
/// that would clash with an already fixed neighbor.
pub fn random_fixing(rng: &mut StdRng, g: &Graph) -> ColorAssignment {
    let mut fixed = ColorAssignment::empty(g.n());
    for v in 0..g.n() {
        if rng.gen_bool(0.3) {
            let c: Color = rng.gen_range(0..3);
            if g.neighbors(v).iter().all(|&w| fixed.get(w) != Some(c)) {
                fixed.set(v, Some(c));
            }
        }
    }
    fixed
}

/// graph6 written straight from the format description: N(n) then the upper
/// triangle column by column (x(0,1), x(0,2), x(1,2), ...) in 6-bit groups
/// offset by 63.
pub fn graph6_reference(g: &Graph) -> String {
    let n = g.n();
    let mut out = String::new();
    if n <= 62 {
        out.push((n as u8 + 63) as char);
    } else {
        out.push('~');
        for shift in [12, 6, 0] {
            out.push((((n >> shift) & 63) as u8 + 63) as char);
        }
    }
    let mut bits = Vec::new();
    for j in 1..n {
        for i in 0..j {
            bits.push(g.has_edge(i, j));
        }
    }
    for chunk in bits.chunks(6) {
        let mut x = 0u8;
        for k in 0..6 {
            x = x << 1 | chunk.get(k).copied().unwrap_or(false) as u8;
        }
        out.push((x + 63) as char);
    }
    out
}

/// Every k-cycle as a sorted edge set, found by trying each k-subset and
/// each cyclic order of it.
pub fn cycles_by_subsets(g: &Graph, k: usize) -> BTreeSet<Vec<(usize, usize)>> {
    let n = g.n();
    let mut out = BTreeSet::new();
    for mask in 0u32..(1 << n) {
        if mask.count_ones() as usize != k {
            continue;
        }
        let vs: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        let mut rest: Vec<usize> = vs[1..].to_vec();
        permute(&mut rest, 0, &mut |order| {
            let mut cyc = vec![vs[0]];
            cyc.extend_from_slice(order);
            let ok = (0..k).all(|i| g.has_edge(cyc[i], cyc[(i + 1) % k]));
            if ok {
                let mut e: Vec<_> = (0..k)
                    .map(|i| {
                        let (a, b) = (cyc[i], cyc[(i + 1) % k]);
                        (a.min(b), a.max(b))
                    })
                    .collect();
                e.sort_unstable();
                out.insert(e);
            }
        });
    }
    out
}

fn permute(xs: &mut Vec<usize>, i: usize, f: &mut dyn FnMut(&[usize])) {
    if i == xs.len() {
        f(xs);
        return;
    }
    for j in i..xs.len() {
        xs.swap(i, j);
        permute(xs, i + 1, f);
        xs.swap(i, j);
    }
}

/// All-pairs distances by Floyd-Warshall.
pub fn floyd(g: &Graph) -> Vec<Vec<Option<usize>>> {
    let n = g.n();
    let mut d = vec![vec![None; n]; n];
    for v in 0..n {
        d[v][v] = Some(0);
    }
    for &(u, v) in g.edges() {
        d[u][v] = Some(1);
        d[v][u] = Some(1);
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if let (Some(a), Some(b)) = (d[i][k], d[k][j]) {
                    if d[i][j].map_or(true, |c| a + b < c) {
                        d[i][j] = Some(a + b);
                    }
                }
            }
        }
    }
    d
}

/// Terminal color patterns realized by some proper coloring, by walking
/// all 3^n colorings. Patterns are returned as restricted growth strings.
pub fn realized_patterns(g: &Graph, terminals: &[usize]) -> BTreeSet<Vec<u8>> {
    let n = g.n();
    let mut colors = vec![0u8; n];
    let mut out = BTreeSet::new();
    loop {
        if g.edges().iter().all(|&(u, v)| colors[u] != colors[v]) {
            let mut map = [u8::MAX; 3];
            let mut next = 0;
            let p: Vec<u8> = terminals
                .iter()
                .map(|&t| {
                    let c = colors[t] as usize;
                    if map[c] == u8::MAX {
                        map[c] = next;
                        next += 1;
                    }
                    map[c]
                })
                .collect();
            out.insert(p);
        }
        let mut i = 0;
        loop {
            if i == n {
                return out;
            }
            colors[i] += 1;
            if colors[i] < 3 {
                break;
            }
            colors[i] = 0;
            i += 1;
        }
    }
}
