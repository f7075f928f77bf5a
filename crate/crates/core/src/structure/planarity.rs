//! Certified planarity testing.
//!
//! Each biconnected block is embedded by path addition (Demoucron, Malgrange
//! and Pertuiset): start from a cycle, then repeatedly route a path of some
//! unembedded fragment through a face that contains all of the fragment's
//! attachment vertices, preferring fragments with a single admissible face.
//! Block rotations are merged at cut vertices. A nonplanar graph is reduced
//! to an edge-minimal nonplanar subgraph, which is a Kuratowski subdivision,
//! and its branch paths are traced.

use std::collections::{BTreeMap, VecDeque};

use serde::{Deserialize, Serialize};

use crate::graph::{Graph, Vertex};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Kuratowski {
    K5,
    K33,
}

/// Subdivision of K5 or K3,3 inside the host graph. For K3,3 the first three
/// branch vertices form one side. `paths` holds one vertex path per branch
/// pair, endpoints included.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KuratowskiSubdivision {
    pub kind: Kuratowski,
    pub branch: Vec<Vertex>,
    pub paths: Vec<Vec<Vertex>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum PlanarityCertificate {
    /// Cyclic neighbor order around every vertex.
    Planar { rotation: Vec<Vec<Vertex>> },
    Nonplanar { obstruction: KuratowskiSubdivision },
}

impl PlanarityCertificate {
    pub fn is_planar(&self) -> bool {
        matches!(self, PlanarityCertificate::Planar { .. })
    }
}

pub fn is_planar(g: &Graph) -> PlanarityCertificate {
    match embed(g) {
        Some(rotation) => PlanarityCertificate::Planar { rotation },
        None => PlanarityCertificate::Nonplanar {
            obstruction: kuratowski_subdivision(g),
        },
    }
}

/// Whether `terminals` can all lie on one face: `g` plus an apex adjacent to
/// every terminal is planar.
pub fn terminals_cofacial(g: &Graph, terminals: &[Vertex]) -> bool {
    let apex = g.n();
    let mut edges = g.edges().to_vec();
    edges.extend(terminals.iter().map(|&t| (t, apex)));
    let h = Graph::new(g.n() + 1, &edges).expect("apex edges are fresh");
    embed(&h).is_some()
}

/// A planar rotation system, or `None` if `g` is not planar.
pub fn embed(g: &Graph) -> Option<Vec<Vec<Vertex>>> {
    let n = g.n();
    if n >= 3 && g.m() > 3 * n - 6 {
        return None;
    }
    // Per vertex, the neighbor cycles contributed by each block.
    let mut pieces: Vec<Vec<Vec<Vertex>>> = vec![Vec::new(); n];
    for block in biconnected_blocks(g) {
        let succ = embed_block(g, &block)?;
        for (v, map) in succ {
            let start = *map.keys().next().expect("nonempty");
            let mut cyc = vec![start];
            let mut cur = map[&start];
            while cur != start {
                cyc.push(cur);
                cur = map[&cur];
            }
            if cyc.len() != map.len() {
                return None;
            }
            pieces[v].push(cyc);
        }
    }
    Some(pieces.into_iter().map(|p| p.concat()).collect())
}

/// Edge sets of the biconnected blocks (bridges are single-edge blocks).
fn biconnected_blocks(g: &Graph) -> Vec<Vec<(Vertex, Vertex)>> {
    let n = g.n();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut time = 0;
    let mut blocks = Vec::new();
    let mut edge_stack: Vec<(Vertex, Vertex)> = Vec::new();
    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        // (vertex, parent, next neighbor index)
        let mut stack: Vec<(Vertex, Vertex, usize)> = vec![(root, usize::MAX, 0)];
        while let Some(&mut (u, parent, ref mut idx)) = stack.last_mut() {
            if *idx < g.degree(u) {
                let w = g.neighbors(u)[*idx];
                *idx += 1;
                if disc[w] == usize::MAX {
                    edge_stack.push((u, w));
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    stack.push((w, u, 0));
                } else if w != parent && disc[w] < disc[u] {
                    edge_stack.push((u, w));
                    low[u] = low[u].min(disc[w]);
                }
            } else {
                stack.pop();
                if let Some(&(p, _, _)) = stack.last() {
                    low[p] = low[p].min(low[u]);
                    if low[u] >= disc[p] {
                        let mut block = Vec::new();
                        while let Some(e) = edge_stack.pop() {
                            block.push(e);
                            if e == (p, u) {
                                break;
                            }
                        }
                        blocks.push(block);
                    }
                }
            }
        }
    }
    blocks
}

/// Embed one block; returns, per vertex, the successor map of its rotation
/// restricted to the block.
fn embed_block(
    g: &Graph,
    block: &[(Vertex, Vertex)],
) -> Option<BTreeMap<Vertex, BTreeMap<Vertex, Vertex>>> {
    let mut faces: Vec<Vec<Vertex>> = if block.len() == 1 {
        let (u, v) = block[0];
        vec![vec![u, v]]
    } else {
        let mut local: BTreeMap<Vertex, Vec<Vertex>> = BTreeMap::new();
        for &(u, v) in block {
            local.entry(u).or_default().push(v);
            local.entry(v).or_default().push(u);
        }
        for list in local.values_mut() {
            list.sort_unstable();
        }
        embed_biconnected(g.n(), &local)?
    };
    let mut succ: BTreeMap<Vertex, BTreeMap<Vertex, Vertex>> = BTreeMap::new();
    for face in faces.drain(..) {
        let k = face.len();
        for i in 0..k {
            let (u, v, w) = (face[i], face[(i + 1) % k], face[(i + 2) % k]);
            succ.entry(v).or_default().insert(u, w);
        }
    }
    Some(succ)
}

/// Path-addition embedding of a 2-connected graph given as local adjacency.
/// Returns oriented faces: every edge appears once in each direction.
fn embed_biconnected(n: usize, adj: &BTreeMap<Vertex, Vec<Vertex>>) -> Option<Vec<Vec<Vertex>>> {
    let cycle = find_cycle(adj)?;
    let mut embedded = vec![false; n];
    let mut edge_done: std::collections::HashSet<(Vertex, Vertex)> = Default::default();
    for (i, &v) in cycle.iter().enumerate() {
        embedded[v] = true;
        let w = cycle[(i + 1) % cycle.len()];
        edge_done.insert((v.min(w), v.max(w)));
    }
    let mut rev = cycle.clone();
    rev.reverse();
    let mut faces = vec![cycle, rev];
    let total_edges: usize = adj.values().map(Vec::len).sum::<usize>() / 2;

    while edge_done.len() < total_edges {
        let fragments = fragments(adj, &embedded, &edge_done);
        let mut membership: Vec<Vec<bool>> = Vec::with_capacity(faces.len());
        for f in &faces {
            let mut m = vec![false; n];
            for &v in f {
                m[v] = true;
            }
            membership.push(m);
        }
        let mut choice: Option<(usize, usize)> = None;
        for (fi, frag) in fragments.iter().enumerate() {
            let admissible: Vec<usize> = (0..faces.len())
                .filter(|&f| frag.attachments.iter().all(|&a| membership[f][a]))
                .collect();
            match admissible.len() {
                0 => return None,
                1 => {
                    choice = Some((fi, admissible[0]));
                    break;
                }
                _ => {
                    if choice.is_none() {
                        choice = Some((fi, admissible[0]));
                    }
                }
            }
        }
        let (fi, face_idx) = choice.expect("at least one fragment remains");
        let path = fragment_path(adj, &embedded, &fragments[fi]);
        for w in path.windows(2) {
            edge_done.insert((w[0].min(w[1]), w[0].max(w[1])));
        }
        for &v in &path {
            embedded[v] = true;
        }
        let face = faces.swap_remove(face_idx);
        let (x, y) = (path[0], *path.last().unwrap());
        let k = face.len();
        let i = face.iter().position(|&v| v == x).expect("attachment on face");
        let j = face.iter().position(|&v| v == y).expect("attachment on face");
        let walk = |from: usize, to: usize| -> Vec<Vertex> {
            let mut out = vec![face[from]];
            let mut p = from;
            while p != to {
                p = (p + 1) % k;
                out.push(face[p]);
            }
            out
        };
        let interior = &path[1..path.len() - 1];
        let mut first = walk(i, j);
        first.extend(interior.iter().rev());
        let mut second = walk(j, i);
        second.extend(interior.iter());
        faces.push(first);
        faces.push(second);
    }
    Some(faces)
}

/// Any cycle of a 2-connected block: an edge plus a path avoiding it.
fn find_cycle(adj: &BTreeMap<Vertex, Vec<Vertex>>) -> Option<Vec<Vertex>> {
    let (&u, list) = adj.iter().next()?;
    let v = *list.first()?;
    let mut parent: BTreeMap<Vertex, Vertex> = BTreeMap::new();
    parent.insert(u, u);
    let mut queue = VecDeque::from([u]);
    while let Some(x) = queue.pop_front() {
        for &w in &adj[&x] {
            if x == u && w == v {
                continue;
            }
            if parent.contains_key(&w) {
                continue;
            }
            parent.insert(w, x);
            if w == v {
                let mut cyc = vec![v];
                let mut cur = v;
                while cur != u {
                    cur = parent[&cur];
                    cyc.push(cur);
                }
                return Some(cyc);
            }
            queue.push_back(w);
        }
    }
    None
}

struct Fragment {
    attachments: Vec<Vertex>,
    /// Unembedded vertices, empty for a single chord edge.
    inner: Vec<Vertex>,
    chord: Option<(Vertex, Vertex)>,
}

fn fragments(
    adj: &BTreeMap<Vertex, Vec<Vertex>>,
    embedded: &[bool],
    edge_done: &std::collections::HashSet<(Vertex, Vertex)>,
) -> Vec<Fragment> {
    let mut out = Vec::new();
    for (&u, list) in adj {
        if !embedded[u] {
            continue;
        }
        for &v in list {
            if u < v && embedded[v] && !edge_done.contains(&(u, v)) {
                out.push(Fragment {
                    attachments: vec![u, v],
                    inner: Vec::new(),
                    chord: Some((u, v)),
                });
            }
        }
    }
    let mut seen: BTreeMap<Vertex, bool> = BTreeMap::new();
    for &s in adj.keys() {
        if embedded[s] || seen.contains_key(&s) {
            continue;
        }
        let mut inner = vec![s];
        let mut attachments = Vec::new();
        seen.insert(s, true);
        let mut i = 0;
        while i < inner.len() {
            let u = inner[i];
            i += 1;
            for &w in &adj[&u] {
                if embedded[w] {
                    attachments.push(w);
                } else if !seen.contains_key(&w) {
                    seen.insert(w, true);
                    inner.push(w);
                }
            }
        }
        attachments.sort_unstable();
        attachments.dedup();
        out.push(Fragment {
            attachments,
            inner,
            chord: None,
        });
    }
    out
}

/// A path through the fragment joining two distinct attachment vertices.
fn fragment_path(
    adj: &BTreeMap<Vertex, Vec<Vertex>>,
    embedded: &[bool],
    frag: &Fragment,
) -> Vec<Vertex> {
    if let Some((u, v)) = frag.chord {
        return vec![u, v];
    }
    let x = frag.attachments[0];
    let mut parent: BTreeMap<Vertex, Vertex> = BTreeMap::new();
    let mut queue = VecDeque::new();
    for &c in &frag.inner {
        if adj[&c].contains(&x) {
            parent.insert(c, x);
            queue.push_back(c);
        }
    }
    while let Some(u) = queue.pop_front() {
        for &w in &adj[&u] {
            if embedded[w] {
                if w != x {
                    let mut path = vec![w, u];
                    let mut cur = u;
                    while parent[&cur] != x {
                        cur = parent[&cur];
                        path.push(cur);
                    }
                    path.push(x);
                    path.reverse();
                    return path;
                }
            } else if !parent.contains_key(&w) {
                parent.insert(w, u);
                queue.push_back(w);
            }
        }
    }
    unreachable!("a fragment of a 2-connected graph has two attachments")
}

/// Reduce to an edge-minimal nonplanar spanning subgraph and read off the
/// Kuratowski subdivision. Panics if `g` is planar.
fn kuratowski_subdivision(g: &Graph) -> KuratowskiSubdivision {
    let mut keep: Vec<(Vertex, Vertex)> = g.edges().to_vec();
    let mut i = 0;
    while i < keep.len() {
        let mut trial = keep.clone();
        trial.remove(i);
        if embed(&g.spanning_subgraph(&trial)).is_none() {
            keep = trial;
        } else {
            i += 1;
        }
    }
    let h = g.spanning_subgraph(&keep);
    let branch: Vec<Vertex> = (0..h.n()).filter(|&v| h.degree(v) >= 3).collect();
    let mut paths = Vec::new();
    for &b in &branch {
        for &first in h.neighbors(b) {
            let mut path = vec![b, first];
            let mut prev = b;
            let mut cur = first;
            while h.degree(cur) == 2 {
                let next = h.neighbors(cur).iter().copied().find(|&w| w != prev).unwrap();
                prev = cur;
                cur = next;
                path.push(cur);
            }
            if b < cur {
                paths.push(path);
            }
        }
    }
    let kind = if branch.len() == 5 {
        Kuratowski::K5
    } else {
        Kuratowski::K33
    };
    let branch = match kind {
        Kuratowski::K5 => branch,
        Kuratowski::K33 => {
            let first = branch[0];
            let mut side_a = vec![first];
            let mut side_b = Vec::new();
            for &v in &branch[1..] {
                let joined = paths.iter().any(|p| {
                    let (s, t) = (p[0], *p.last().unwrap());
                    (s == first && t == v) || (s == v && t == first)
                });
                if joined {
                    side_b.push(v);
                } else {
                    side_a.push(v);
                }
            }
            side_a.extend(side_b);
            side_a
        }
    };
    KuratowskiSubdivision { kind, branch, paths }
}

/// Independent check of a rotation system: each rotation is a permutation of
/// the neighbors, and face tracing satisfies Euler's formula on every
/// connected component.
pub fn check_embedding(g: &Graph, rotation: &[Vec<Vertex>]) -> Result<(), String> {
    if rotation.len() != g.n() {
        return Err(format!("rotation has {} entries for {} vertices", rotation.len(), g.n()));
    }
    let mut pos: Vec<BTreeMap<Vertex, usize>> = Vec::with_capacity(g.n());
    for (v, rot) in rotation.iter().enumerate() {
        let mut sorted = rot.clone();
        sorted.sort_unstable();
        if sorted != g.neighbors(v) {
            return Err(format!("rotation at {v} is not a permutation of its neighbors"));
        }
        pos.push(rot.iter().enumerate().map(|(i, &w)| (w, i)).collect());
    }
    let (comp, count) = g.components();
    let mut faces = vec![0usize; count];
    let mut used: std::collections::HashSet<(Vertex, Vertex)> = Default::default();
    for &(a, b) in g.edges() {
        for (s, t) in [(a, b), (b, a)] {
            if used.contains(&(s, t)) {
                continue;
            }
            faces[comp[s]] += 1;
            let (mut u, mut v) = (s, t);
            loop {
                used.insert((u, v));
                let rot = &rotation[v];
                let w = rot[(pos[v][&u] + 1) % rot.len()];
                u = v;
                v = w;
                if (u, v) == (s, t) {
                    break;
                }
            }
        }
    }
    let mut verts = vec![0i64; count];
    let mut edges = vec![0i64; count];
    for v in 0..g.n() {
        verts[comp[v]] += 1;
    }
    for &(a, _) in g.edges() {
        edges[comp[a]] += 1;
    }
    for c in 0..count {
        let f = if edges[c] == 0 { 1 } else { faces[c] as i64 };
        if verts[c] - edges[c] + f != 2 {
            return Err(format!(
                "component {c}: V - E + F = {} - {} + {} != 2",
                verts[c], edges[c], f
            ));
        }
    }
    Ok(())
}

/// Independent check that `obs` is a subdivision of K5 or K3,3 inside `g`.
pub fn check_obstruction(g: &Graph, obs: &KuratowskiSubdivision) -> Result<(), String> {
    let pairs: Vec<(Vertex, Vertex)> = match obs.kind {
        Kuratowski::K5 => {
            if obs.branch.len() != 5 {
                return Err("K5 needs 5 branch vertices".into());
            }
            (0..5).flat_map(|i| (i + 1..5).map(move |j| (i, j))).collect()
        }
        Kuratowski::K33 => {
            if obs.branch.len() != 6 {
                return Err("K3,3 needs 6 branch vertices".into());
            }
            (0..3).flat_map(|i| (3..6).map(move |j| (i, j))).collect()
        }
    };
    let mut branch_sorted = obs.branch.clone();
    branch_sorted.sort_unstable();
    branch_sorted.dedup();
    if branch_sorted.len() != obs.branch.len() || obs.branch.iter().any(|&v| v >= g.n()) {
        return Err("branch vertices must be distinct vertices of the graph".into());
    }
    if obs.paths.len() != pairs.len() {
        return Err(format!("expected {} paths, got {}", pairs.len(), obs.paths.len()));
    }
    let mut remaining = pairs.clone();
    let mut interior_used = std::collections::HashSet::new();
    for p in &obs.paths {
        if p.len() < 2 {
            return Err("path too short".into());
        }
        let (s, t) = (p[0], *p.last().unwrap());
        let si = obs.branch.iter().position(|&b| b == s);
        let ti = obs.branch.iter().position(|&b| b == t);
        let (Some(si), Some(ti)) = (si, ti) else {
            return Err(format!("path {p:?} does not join branch vertices"));
        };
        let key = (si.min(ti), si.max(ti));
        let Some(idx) = remaining.iter().position(|&q| q == key) else {
            return Err(format!("path {p:?} joins a pair that is not a required edge or is repeated"));
        };
        remaining.swap_remove(idx);
        for w in p.windows(2) {
            if !g.has_edge(w[0], w[1]) {
                return Err(format!("edge {}-{} of path is missing", w[0], w[1]));
            }
        }
        for &x in &p[1..p.len() - 1] {
            if obs.branch.contains(&x) || !interior_used.insert(x) {
                return Err(format!("interior vertex {x} is shared or a branch vertex"));
            }
        }
    }
    Ok(())
}
