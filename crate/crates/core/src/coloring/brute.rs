//! Exhaustive enumeration oracle, deliberately unrelated to the solver: no
//! domains, no propagation, no branching heuristic. Free vertices are the
//! digits of a base-3 odometer in ascending vertex order (first free vertex
//! most significant), so the first proper assignment found is the
//! lexicographically smallest.

use super::{Color, ColorAssignment, ColoringError, Verdict};
use crate::graph::{Graph, Vertex};

/// Largest number of free vertices the oracle accepts (3^25 assignments).
pub const BRUTE_FORCE_MAX_FREE: usize = 25;

struct Odometer {
    free: Vec<Vertex>,
    /// Edges grouped by the odometer position of their later free endpoint.
    checks: Vec<Vec<(Vertex, Vertex)>>,
}

impl Odometer {
    fn new(g: &Graph, fixed: &ColorAssignment) -> Result<Self, ColoringError> {
        fixed.validate_fixed(g)?;
        let free: Vec<Vertex> = (0..g.n()).filter(|&v| fixed.get(v).is_none()).collect();
        if free.len() > BRUTE_FORCE_MAX_FREE {
            return Err(ColoringError::SizeGuard {
                free: free.len(),
                limit: BRUTE_FORCE_MAX_FREE,
            });
        }
        let mut position = vec![None; g.n()];
        for (i, &v) in free.iter().enumerate() {
            position[v] = Some(i);
        }
        let mut checks = vec![Vec::new(); free.len()];
        for &(u, v) in g.edges() {
            match (position[u], position[v]) {
                (None, None) => {}
                (Some(p), None) | (None, Some(p)) => checks[p].push((u, v)),
                (Some(p), Some(q)) => checks[p.max(q)].push((u, v)),
            }
        }
        Ok(Odometer { free, checks })
    }
}

/// Same contract as the solver. Blocks of assignments sharing a conflicting
/// prefix are skipped together, but every one of the 3^k extensions is
/// accounted for.
pub fn brute_force_3coloring(g: &Graph, fixed: &ColorAssignment) -> Result<Verdict, ColoringError> {
    let odo = Odometer::new(g, fixed)?;
    let k = odo.free.len();
    let mut colors: Vec<Color> = (0..g.n()).map(|v| fixed.get(v).unwrap_or(0)).collect();
    let mut digits = vec![0u8; k];
    loop {
        for (i, &v) in odo.free.iter().enumerate() {
            colors[v] = digits[i];
        }
        let conflict = (0..k).find(|&p| odo.checks[p].iter().any(|&(u, v)| colors[u] == colors[v]));
        let Some(p) = conflict else {
            return Ok(Verdict::Sat(colors));
        };
        // Advance position p; everything after it restarts at 0.
        for d in digits.iter_mut().skip(p + 1) {
            *d = 0;
        }
        let mut pos = p;
        loop {
            digits[pos] += 1;
            if digits[pos] < 3 {
                break;
            }
            digits[pos] = 0;
            if pos == 0 {
                return Ok(Verdict::Unsat);
            }
            pos -= 1;
        }
    }
}

/// Visit every one of the 3^k extensions individually, with no skipping.
/// Returns `(assignments enumerated, proper ones among them)`.
pub fn count_proper_extensions(g: &Graph, fixed: &ColorAssignment) -> Result<(u64, u64), ColoringError> {
    let odo = Odometer::new(g, fixed)?;
    let mut colors: Vec<Color> = (0..g.n()).map(|v| fixed.get(v).unwrap_or(0)).collect();
    let edges = g.edges();
    let total = 3u64.pow(odo.free.len() as u32);
    let mut proper = 0;
    for mut code in 0..total {
        for &v in odo.free.iter().rev() {
            colors[v] = (code % 3) as Color;
            code /= 3;
        }
        if edges.iter().all(|&(u, v)| colors[u] != colors[v]) {
            proper += 1;
        }
    }
    Ok((total, proper))
}
