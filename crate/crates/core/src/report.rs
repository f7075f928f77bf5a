//! Verification reports: one line per checked property, with witnesses.

use std::fmt;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::canon::canonical_form;
use crate::coloring::{Color, Pattern, SearchStats};
use crate::graph::{Graph, Vertex};
use crate::structure::{CycleWitness, KuratowskiSubdivision, TriangleConflict};

pub const TOOL_VERSION: &str = concat!(env!("CARGO_PKG_NAME"), " ", env!("CARGO_PKG_VERSION"));

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Target {
    /// SHA-256 of the canonical form.
    pub digest: String,
    pub n: usize,
    pub m: usize,
}

impl Target {
    pub fn of(g: &Graph) -> Self {
        Target {
            digest: canonical_form(g).digest(),
            n: g.n(),
            m: g.m(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    Cycle { cycle: CycleWitness },
    Path { path: Vec<Vertex> },
    Coloring { colors: Vec<Color> },
    Obstruction { obstruction: KuratowskiSubdivision },
    TriangleConflict { conflict: TriangleConflict },
    Pattern { pattern: Pattern, colors: Vec<Color> },
    /// Summary of a refutation: solver effort and the per-color split results.
    UnsatTranscript {
        stats: SearchStats,
        split_root: Vertex,
        split_unsat: [bool; 3],
    },
    CaseTree { leaves: usize, depth: usize },
    Message { text: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    pub duration_us: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub target: Target,
    pub checks: Vec<Check>,
    pub overall: bool,
    pub tool_version: String,
}

impl VerificationReport {
    pub fn new(target: Target) -> Self {
        VerificationReport {
            target,
            checks: Vec::new(),
            overall: true,
            tool_version: TOOL_VERSION.to_owned(),
        }
    }

    /// Time `f`, record its outcome as a check.
    pub fn run<F>(&mut self, name: impl Into<String>, f: F) -> bool
    where
        F: FnOnce() -> CheckOutcome,
    {
        let start = Instant::now();
        let outcome = f();
        let duration_us = start.elapsed().as_micros() as u64;
        self.push(Check {
            name: name.into(),
            passed: outcome.passed,
            detail: outcome.detail,
            witness: outcome.witness,
            duration_us,
        })
    }

    pub fn push(&mut self, check: Check) -> bool {
        let passed = check.passed;
        self.overall &= passed;
        self.checks.push(check);
        passed
    }

    pub fn extend(&mut self, other: VerificationReport, prefix: &str) {
        for mut c in other.checks {
            c.name = format!("{prefix}{}", c.name);
            self.push(c);
        }
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn failed(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn to_json(&self) -> String {
        crate::formats::json::to_pretty_json(self)
    }

    pub fn from_json(s: &str) -> serde_json::Result<Self> {
        serde_json::from_str(s)
    }

    /// Copy with all durations zeroed, for run-to-run comparison.
    pub fn without_timings(&self) -> Self {
        let mut r = self.clone();
        for c in &mut r.checks {
            c.duration_us = 0;
        }
        r
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "target: n={} m={} digest={}",
            self.target.n,
            self.target.m,
            &self.target.digest[..16.min(self.target.digest.len())]
        )?;
        for c in &self.checks {
            let mark = if c.passed { "PASS" } else { "FAIL" };
            writeln!(f, "  [{mark}] {:<48} {} ({:.1} ms)", c.name, c.detail, c.duration_us as f64 / 1000.0)?;
            if !c.passed {
                if let Some(w) = &c.witness {
                    writeln!(f, "         witness: {}", serde_json::to_string(w).unwrap_or_default())?;
                }
            }
        }
        writeln!(f, "overall: {}", if self.overall { "PASS" } else { "FAIL" })
    }
}

/// Result of one check before timing is attached.
pub struct CheckOutcome {
    pub passed: bool,
    pub detail: String,
    pub witness: Option<Witness>,
}

impl CheckOutcome {
    pub fn pass(detail: impl Into<String>) -> Self {
        CheckOutcome {
            passed: true,
            detail: detail.into(),
            witness: None,
        }
    }

    pub fn fail(detail: impl Into<String>, witness: Option<Witness>) -> Self {
        CheckOutcome {
            passed: false,
            detail: detail.into(),
            witness,
        }
    }

    pub fn with_witness(mut self, w: Witness) -> Self {
        self.witness = Some(w);
        self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn overall_tracks_failures() {
        let mut r = VerificationReport::new(Target::of(&Graph::cycle(3)));
        r.run("a", || CheckOutcome::pass("ok"));
        assert!(r.overall);
        r.run("b", || CheckOutcome::fail("bad", Some(Witness::Path { path: vec![0, 1] })));
        assert!(!r.overall);
        assert_eq!(r.failed().count(), 1);
    }

    #[test]
    fn json_round_trip_is_stable() {
        let mut r = VerificationReport::new(Target::of(&Graph::cycle(5)));
        r.run("cycles", || {
            CheckOutcome::fail(
                "found C5",
                Some(Witness::Cycle {
                    cycle: CycleWitness(vec![0, 1, 2, 3, 4]),
                }),
            )
        });
        r.run("unsat", || {
            CheckOutcome::pass("refuted").with_witness(Witness::UnsatTranscript {
                stats: SearchStats { decisions: 3, conflicts: 4 },
                split_root: 0,
                split_unsat: [true; 3],
            })
        });
        let s = r.to_json();
        let back = VerificationReport::from_json(&s).unwrap();
        assert_eq!(back, r);
        assert_eq!(back.to_json(), s);
    }
}
