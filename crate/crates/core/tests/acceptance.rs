//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
//! criterion fails.

mod common;

use std::process::ExitCode;
use std::time::Instant;

use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rayon::prelude::*;

use steinberg::coloring::{
    brute_force_3coloring, count_proper_extensions, is_proper_colors, solve_3coloring, symmetry_split,
    ColorAssignment,
};
use steinberg::formats::{decode, encode, graph6, Format};
use steinberg::gadget::{
    build_counterexample_pasted, build_g2, verify_against, CounterexampleSlots, InterfaceContract,
};
use steinberg::report::Witness;
use steinberg::structure::{
    check_embedding, check_obstruction, cycles_of_length, is_planar, PlanarityCertificate,
};
use steinberg::verify::{composition_outcome, split_root, verify_steinberg, VerifyOptions};
use steinberg::{canonical_form, Graph};

use common::*;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn report_failures(r: &steinberg::report::VerificationReport) -> String {
    r.failed().map(|c| format!("{}: {}", c.name, c.detail)).collect::<Vec<_>>().join("; ")
}

fn first_gadget() -> Outcome {
    let g1 = frozen_g1();
    let g = g1.graph();
    let r = verify_against(&g1, &InterfaceContract::first_gadget());
    ensure(r.overall, || report_failures(&r))?;
    let t = g1.terminals();
    let d = floyd(g);
    let dists = (d[t[0]][t[1]], d[t[0]][t[2]], d[t[1]][t[2]]);
    ensure(dists == (Some(3), Some(3), Some(4)), || format!("independent distances {dists:?}"))?;
    let fixed = ColorAssignment::with_fixed(g.n(), &[(t[0], 0), (t[1], 0), (t[2], 0)]);
    ensure(!solve_3coloring(g, &fixed).unwrap().is_sat(), || "solver found aaa".into())?;
    let (total, proper) = count_proper_extensions(g, &fixed).unwrap();
    let expect = 3u64.pow((g.n() - 3) as u32);
    ensure(total == expect && proper == 0, || format!("oracle: {proper} of {total}"))?;
    Ok(format!(
        "n={} m={}, distances 3/3/4, aaa refuted by solver and by {total} enumerated extensions",
        g.n(),
        g.m()
    ))
}

fn second_gadget() -> Outcome {
    let g1 = frozen_g1();
    let g2 = build_g2(&g1).map_err(|e| e.to_string())?;
    let (n1, m1) = (g1.graph().n(), g1.graph().m());
    let g = g2.graph();
    ensure(g.n() == 3 * n1 - 3 && g.m() == 3 * m1 + 3, || format!("size {} / {}", g.n(), g.m()))?;
    let r = verify_against(&g2, &InterfaceContract::second_gadget());
    ensure(r.overall, || report_failures(&r))?;
    let t = g2.terminals();
    let d = floyd(g);
    for (i, j) in [(0, 1), (0, 2), (1, 2)] {
        ensure(d[t[i]][t[j]] == Some(4), || format!("distance {i}-{j} = {:?}", d[t[i]][t[j]]))?;
    }
    let fixed = ColorAssignment::with_fixed(g.n(), &[(t[0], 0), (t[1], 0), (t[2], 0)]);
    let root = split_root(g, t).unwrap();
    let split = symmetry_split(g, &fixed, root).unwrap();
    ensure(split.iter().all(|v| !v.is_sat()), || "a split branch is SAT".into())?;
    Ok(format!("n={} m={}, distances 4/4/4, aaa UNSAT on all 3 split branches", g.n(), g.m()))
}

fn theorem() -> Outcome {
    let g1 = frozen_g1();
    let g2 = build_g2(&g1).map_err(|e| e.to_string())?;
    let g = build_counterexample_pasted(&g2).map_err(|e| e.to_string())?.graph;
    let expect_n = 4 * g2.graph().n() - 5 + 3;
    ensure(g.n() == expect_n, || format!("{} vertices, expected {expect_n}", g.n()))?;
    let r = verify_steinberg(&g, VerifyOptions::default()).unwrap();
    for name in ["planar", "no 4-cycles", "no 5-cycles", "not 3-colorable"] {
        let c = r.check(name).ok_or(format!("missing check {name}"))?;
        ensure(c.passed, || format!("{name}: {}", c.detail))?;
    }
    match &r.check("not 3-colorable").unwrap().witness {
        Some(Witness::UnsatTranscript { split_unsat, .. }) if split_unsat.iter().all(|&u| u) => {}
        w => return Err(format!("unexpected transcript {w:?}")),
    }
    match is_planar(&g) {
        PlanarityCertificate::Planar { rotation } => check_embedding(&g, &rotation)?,
        PlanarityCertificate::Nonplanar { .. } => return Err("nonplanar".into()),
    }
    let comp = composition_outcome(&g1);
    ensure(comp.passed, || comp.detail.clone())?;
    Ok(format!("n={} m={}, UNSAT with split, case tree {}", g.n(), g.m(), comp.detail))
}

fn conjectures() -> Outcome {
    let g2 = build_g2(&frozen_g1()).map_err(|e| e.to_string())?;
    let g = build_counterexample_pasted(&g2).map_err(|e| e.to_string())?.graph;
    let r = verify_steinberg(&g, VerifyOptions::default()).unwrap();
    for name in [
        "no two triangles share an edge",
        "no triangle shares an edge with a 3- or 5-cycle",
        "no 5-cycles",
        "not 3-colorable",
    ] {
        let c = r.check(name).ok_or(format!("missing check {name}"))?;
        ensure(c.passed, || format!("{name}: {}", c.detail))?;
    }
    // Independently: two triangles share edge uv iff u and v have two
    // common neighbors.
    for &(u, v) in g.edges() {
        let common = g.neighbors(u).iter().filter(|w| g.has_edge(v, **w)).count();
        ensure(common <= 1, || format!("edge {u}-{v} lies in {common} triangles"))?;
    }
    let tris = cycles_of_length(&g, 3).unwrap().len();
    Ok(format!("{tris} triangles, none adjacent, no 5-cycles, not 3-colorable"))
}

fn agree(g: &Graph, fixed: &ColorAssignment) -> Result<(), String> {
    let s = solve_3coloring(g, fixed).unwrap();
    let b = brute_force_3coloring(g, fixed).unwrap();
    ensure(s.is_sat() == b.is_sat(), || format!("disagreement on {g:?} with {fixed:?}"))?;
    if let Some(c) = s.coloring() {
        ensure(is_proper_colors(g, c), || format!("improper solver coloring on {g:?}"))?;
        for v in 0..g.n() {
            if let Some(f) = fixed.get(v) {
                ensure(c[v] == f, || format!("fixed color ignored on {g:?}"))?;
            }
        }
    }
    Ok(())
}

fn oracle_equivalence() -> Outcome {
    let mut exhaustive = 0usize;
    for n in 0..=7usize {
        let pairs = n * n.saturating_sub(1) / 2;
        let count: usize = (0..1u64 << pairs)
            .into_par_iter()
            .map(|mask| {
                let mut rng = StdRng::seed_from_u64(mask ^ (n as u64) << 32);
                let g = all_graphs_mask(n, mask);
                agree(&g, &ColorAssignment::empty(n))?;
                agree(&g, &random_fixing(&mut rng, &g))?;
                Ok::<usize, String>(1)
            })
            .try_reduce(|| 0, |a, b| Ok(a + b))?;
        exhaustive += count;
    }
    let mut rng = StdRng::seed_from_u64(7);
    for _ in 0..500 {
        let n = rng.gen_range(8..=14);
        let p = rng.gen_range(0.15..0.5);
        let g = random_graph(&mut rng, n, p);
        agree(&g, &ColorAssignment::empty(n))?;
        let f = random_fixing(&mut rng, &g);
        agree(&g, &f)?;
    }
    Ok(format!("{exhaustive} graphs on <= 7 vertices and 500 random graphs, 0 disagreements"))
}

fn all_graphs_mask(n: usize, mask: u64) -> Graph {
    let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
    let edges: Vec<_> = pairs.enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, e)| e).collect();
    Graph::new(n, &edges).unwrap()
}

fn structural_oracles() -> Outcome {
    let mut rng = StdRng::seed_from_u64(6);
    let mut pool: Vec<Graph> = (0..=5).flat_map(all_graphs).collect();
    for _ in 0..300 {
        let n = rng.gen_range(6..=10);
        let p = rng.gen_range(0.2..0.7);
        pool.push(random_graph(&mut rng, n, p));
    }
    pool.par_iter().try_for_each(|g| -> Result<(), String> {
        for k in 3..=6.min(g.n().max(3)) {
            let ours: std::collections::BTreeSet<Vec<(usize, usize)>> = cycles_of_length(g, k)
                .unwrap()
                .iter()
                .map(|c| {
                    let mut e: Vec<_> = c.edges().map(|(a, b)| (a.min(b), a.max(b))).collect();
                    e.sort_unstable();
                    e
                })
                .collect();
            ensure(ours == cycles_by_subsets(g, k), || format!("{k}-cycles differ on {g:?}"))?;
        }
        match is_planar(g) {
            PlanarityCertificate::Planar { rotation } => {
                ensure(g.n() < 3 || g.m() <= 3 * g.n() - 6, || format!("planar verdict above Euler bound: {g:?}"))?;
                check_embedding(g, &rotation).map_err(|e| format!("{g:?}: {e}"))?;
            }
            PlanarityCertificate::Nonplanar { obstruction } => {
                check_obstruction(g, &obstruction).map_err(|e| format!("{g:?}: {e}"))?;
            }
        }
        Ok(())
    })?;
    let g1 = frozen_g1();
    let bases = [g1.graph().clone(), build_g2(&g1).unwrap().into_graph(), Graph::cycle(12)];
    let mut relabelings = 0;
    for (i, base) in bases.iter().enumerate() {
        let want = canonical_form(base);
        let rounds = if i == 0 { 600 } else { 200 };
        for _ in 0..rounds {
            let mut perm: Vec<usize> = (0..base.n()).collect();
            perm.shuffle(&mut rng);
            ensure(canonical_form(&base.permuted(&perm)) == want, || "canonical form changed".into())?;
            relabelings += 1;
        }
    }
    Ok(format!("{} pool graphs; {relabelings} relabelings", pool.len()))
}

fn perturbation() -> Outcome {
    type S = CounterexampleSlots;
    let g2 = build_g2(&frozen_g1()).map_err(|e| e.to_string())?;
    let g = build_counterexample_pasted(&g2).map_err(|e| e.to_string())?.graph;
    let mut tried = 0;
    for tri in S::TRIANGLES {
        for (u, v) in [(tri[0], tri[1]), (tri[1], tri[2]), (tri[0], tri[2])] {
            ensure(g.has_edge(u, v), || format!("missing edge {}-{}", S::NAMES[u], S::NAMES[v]))?;
            let h = g.without_edge(u, v);
            let verdict = solve_3coloring(&h, &ColorAssignment::empty(h.n())).unwrap();
            let c = verdict
                .coloring()
                .ok_or_else(|| format!("still UNSAT without {}-{}", S::NAMES[u], S::NAMES[v]))?;
            ensure(is_proper_colors(&h, c), || "improper witness".into())?;
            tried += 1;
        }
    }
    Ok(format!("all {tried} single triangle-edge deletions are 3-colorable"))
}

fn format_fidelity() -> Outcome {
    let tri = Graph::cycle(3);
    let g6 = graph6::encode(&tri);
    ensure(g6 == "Bw" && g6 == graph6_reference(&tri), || format!("triangle encodes to {g6}"))?;
    let g1 = frozen_g1();
    let g2 = build_g2(&g1).unwrap();
    let g = build_counterexample_pasted(&g2).unwrap().graph;
    for (name, graph) in [("g1", g1.graph()), ("g2", g2.graph()), ("g", &g)] {
        ensure(graph6::encode(graph) == graph6_reference(graph), || format!("{name}: graph6 differs from reference"))?;
        for f in [Format::Graph6, Format::Dimacs, Format::Json] {
            let bytes = encode(graph, f);
            let back = decode(&bytes, f).map_err(|e| format!("{name} {f}: {e}"))?;
            ensure(back.same_structure(graph), || format!("{name} {f}: structure changed"))?;
            ensure(encode(&back, f) == bytes, || format!("{name} {f}: bytes changed"))?;
        }
    }
    Ok("graph6, DIMACS and JSON byte-stable on g1, g2, g; triangle = Bw".into())
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 8] = [
        ("first gadget", first_gadget),
        ("second gadget", second_gadget),
        ("theorem", theorem),
        ("conjecture hypotheses", conjectures),
        ("oracle equivalence", oracle_equivalence),
        ("structural oracles", structural_oracles),
        ("perturbation sensitivity", perturbation),
        ("format fidelity", format_fidelity),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = std::panic::catch_unwind(f).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match result {
            Ok(detail) => println!("criterion {} ({name}): PASS  {detail} [{secs:.1}s]", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {} ({name}): FAIL  {detail} [{secs:.1}s]", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
