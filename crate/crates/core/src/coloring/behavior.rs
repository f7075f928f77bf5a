use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::{solve_3coloring, Color, ColorAssignment, ColoringError, COLORS};
use crate::gadget::TerminalGadget;

/// A terminal color pattern up to color permutation, stored as a restricted
/// growth string: the first terminal gets 0 and each later terminal either
/// repeats an earlier value or takes the next unused one.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u8>", into = "Vec<u8>")]
pub struct Pattern(Vec<u8>);

impl Pattern {
    /// Canonical pattern of concrete terminal colors.
    pub fn of_colors(colors: &[Color]) -> Pattern {
        let mut map = [u8::MAX; 3];
        let mut next = 0;
        Pattern(
            colors
                .iter()
                .map(|&c| {
                    if map[c as usize] == u8::MAX {
                        map[c as usize] = next;
                        next += 1;
                    }
                    map[c as usize]
                })
                .collect(),
        )
    }

    pub fn all_equal(terminals: usize) -> Pattern {
        Pattern(vec![0; terminals])
    }

    /// All patterns on `terminals` terminals using at most three colors.
    pub fn all(terminals: usize) -> Vec<Pattern> {
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(terminals);
        fn rec(len: usize, cur: &mut Vec<u8>, out: &mut Vec<Pattern>) {
            if cur.len() == len {
                out.push(Pattern(cur.clone()));
                return;
            }
            let next = cur.iter().max().map_or(0, |&m| m + 1);
            for v in 0..=next.min(COLORS - 1) {
                cur.push(v);
                rec(len, cur, out);
                cur.pop();
            }
        }
        if terminals > 0 {
            rec(terminals, &mut cur, &mut out);
        }
        out
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The representative coloring: pattern values used directly as colors.
    pub fn colors(&self) -> &[u8] {
        &self.0
    }

    pub fn matches(&self, colors: &[Color]) -> bool {
        Pattern::of_colors(colors) == *self
    }
}

impl TryFrom<Vec<u8>> for Pattern {
    type Error = String;

    fn try_from(v: Vec<u8>) -> Result<Self, Self::Error> {
        if Pattern::of_colors(&v) != Pattern(v.clone()) || v.iter().any(|&c| c >= COLORS) {
            return Err(format!("{v:?} is not a canonical 3-color pattern"));
        }
        Ok(Pattern(v))
    }
}

impl From<Pattern> for Vec<u8> {
    fn from(p: Pattern) -> Self {
        p.0
    }
}

impl fmt::Display for Pattern {
    /// Letters per terminal, e.g. `aab` for "first two equal, third differs".
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &c in &self.0 {
            write!(f, "{}", (b'a' + c) as char)?;
        }
        Ok(())
    }
}

/// Which terminal patterns extend to a proper 3-coloring of the gadget.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TerminalBehavior {
    pub feasible: BTreeMap<Pattern, bool>,
}

impl TerminalBehavior {
    pub fn is_feasible(&self, p: &Pattern) -> bool {
        self.feasible.get(p).copied().unwrap_or(false)
    }

    /// Whether concrete terminal colors are realizable.
    pub fn allows(&self, colors: &[Color]) -> bool {
        self.is_feasible(&Pattern::of_colors(colors))
    }

    pub fn feasible_patterns(&self) -> impl Iterator<Item = &Pattern> {
        self.feasible.iter().filter(|(_, &ok)| ok).map(|(p, _)| p)
    }
}

/// Decide every pattern by fixing its representative coloring on the
/// terminals and running the solver.
pub fn terminal_behavior(g: &TerminalGadget) -> Result<TerminalBehavior, ColoringError> {
    let t = g.terminals().len();
    if !(2..=4).contains(&t) {
        return Err(ColoringError::TerminalCount {
            expected: "2..=4",
            got: t,
        });
    }
    let n = g.graph().n();
    let mut feasible = BTreeMap::new();
    for p in Pattern::all(t) {
        let fixed: Vec<_> = g.terminals().iter().copied().zip(p.colors().iter().copied()).collect();
        let ok = match solve_3coloring(g.graph(), &ColorAssignment::with_fixed(n, &fixed)) {
            Ok(v) => v.is_sat(),
            Err(ColoringError::ImproperFixed(..)) => false,
            Err(e) => return Err(e),
        };
        feasible.insert(p, ok);
    }
    Ok(TerminalBehavior { feasible })
}

/// True iff no proper 3-coloring gives all three terminals the same color.
pub fn forced_unequal(g: &TerminalGadget) -> Result<bool, ColoringError> {
    let t = g.terminals().len();
    if t != 3 {
        return Err(ColoringError::TerminalCount { expected: "3", got: t });
    }
    Ok(!terminal_behavior(g)?.is_feasible(&Pattern::all_equal(3)))
}
