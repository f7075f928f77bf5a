//! Exact 3-coloring: a propagating backtracking solver, a brute-force oracle,
//! and terminal color-pattern summaries for gadgets.

mod behavior;
mod brute;
mod solver;

pub use behavior::{forced_unequal, terminal_behavior, Pattern, TerminalBehavior};
pub use brute::{brute_force_3coloring, count_proper_extensions, BRUTE_FORCE_MAX_FREE};
pub use solver::{
    solve_3coloring, solve_3coloring_parallel, solve_with_stats, symmetry_split, SearchStats,
};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, Vertex};

pub type Color = u8;

pub const COLORS: Color = 3;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ColoringError {
    #[error("assignment has length {got}, graph has {expected} vertices")]
    WrongLength { expected: usize, got: usize },
    #[error("color {color} at vertex {vertex} is not in 0..3")]
    InvalidColor { vertex: Vertex, color: Color },
    #[error("assignment is partial (vertex {0} uncolored)")]
    Partial(Vertex),
    #[error("fixed colors already conflict on edge ({0}, {1})")]
    ImproperFixed(Vertex, Vertex),
    #[error("{free} free vertices exceed the brute-force guard of {limit}")]
    SizeGuard { free: usize, limit: usize },
    #[error("vertex {0} is out of range")]
    VertexOutOfRange(Vertex),
    #[error("gadget needs {expected} terminals, has {got}")]
    TerminalCount { expected: &'static str, got: usize },
}

/// Total or partial map from vertices to colors `0..3`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ColorAssignment(Vec<Option<Color>>);

impl ColorAssignment {
    pub fn empty(n: usize) -> Self {
        ColorAssignment(vec![None; n])
    }

    pub fn total(colors: Vec<Color>) -> Self {
        ColorAssignment(colors.into_iter().map(Some).collect())
    }

    pub fn with_fixed(n: usize, fixed: &[(Vertex, Color)]) -> Self {
        let mut a = ColorAssignment::empty(n);
        for &(v, c) in fixed {
            a.0[v] = Some(c);
        }
        a
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, v: Vertex) -> Option<Color> {
        self.0[v]
    }

    pub fn set(&mut self, v: Vertex, c: Option<Color>) {
        self.0[v] = c;
    }

    pub fn fixed_count(&self) -> usize {
        self.0.iter().filter(|c| c.is_some()).count()
    }

    pub fn as_slice(&self) -> &[Option<Color>] {
        &self.0
    }

    /// Colors of a total assignment.
    pub fn to_total(&self) -> Result<Vec<Color>, ColoringError> {
        self.0
            .iter()
            .enumerate()
            .map(|(v, c)| c.ok_or(ColoringError::Partial(v)))
            .collect()
    }

    /// Apply a permutation of the three colors.
    pub fn recolored(&self, perm: [Color; 3]) -> Self {
        ColorAssignment(self.0.iter().map(|c| c.map(|c| perm[c as usize])).collect())
    }

    /// Shape and color-range check, then no monochromatic edge among fixed vertices.
    pub(crate) fn validate_fixed(&self, g: &Graph) -> Result<(), ColoringError> {
        if self.0.len() != g.n() {
            return Err(ColoringError::WrongLength {
                expected: g.n(),
                got: self.0.len(),
            });
        }
        for (v, c) in self.0.iter().enumerate() {
            if let Some(c) = *c {
                if c >= COLORS {
                    return Err(ColoringError::InvalidColor { vertex: v, color: c });
                }
            }
        }
        for &(u, v) in g.edges() {
            if let (Some(a), Some(b)) = (self.0[u], self.0[v]) {
                if a == b {
                    return Err(ColoringError::ImproperFixed(u, v));
                }
            }
        }
        Ok(())
    }
}

/// Outcome of a 3-coloring decision.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    Sat(Vec<Color>),
    Unsat,
}

impl Verdict {
    pub fn is_sat(&self) -> bool {
        matches!(self, Verdict::Sat(_))
    }

    pub fn coloring(&self) -> Option<&[Color]> {
        match self {
            Verdict::Sat(c) => Some(c),
            Verdict::Unsat => None,
        }
    }
}

/// Whether a total assignment leaves every edge bichromatic.
pub fn is_proper(g: &Graph, c: &ColorAssignment) -> Result<bool, ColoringError> {
    let colors = c.to_total()?;
    Ok(is_proper_colors(g, &colors))
}

pub fn is_proper_colors(g: &Graph, colors: &[Color]) -> bool {
    colors.len() == g.n()
        && colors.iter().all(|&c| c < COLORS)
        && g.edges().iter().all(|&(u, v)| colors[u] != colors[v])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn proper_on_triangle() {
        let t = Graph::cycle(3);
        assert!(is_proper(&t, &ColorAssignment::total(vec![0, 1, 2])).unwrap());
        assert!(!is_proper(&t, &ColorAssignment::total(vec![0, 0, 1])).unwrap());
        assert_eq!(
            is_proper(&t, &ColorAssignment::with_fixed(3, &[(0, 1)])),
            Err(ColoringError::Partial(1))
        );
    }

    #[test]
    fn recoloring_permutes() {
        let a = ColorAssignment::with_fixed(3, &[(0, 0), (2, 2)]);
        let b = a.recolored([2, 0, 1]);
        assert_eq!(b.get(0), Some(2));
        assert_eq!(b.get(1), None);
        assert_eq!(b.get(2), Some(1));
    }
}
