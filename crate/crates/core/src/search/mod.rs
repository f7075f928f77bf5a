//! Constrained search for terminal gadgets, freezing of certified results,
//! and best-effort shrinking of counterexamples.

mod enumerate;
mod freeze;
mod shrink;

pub use enumerate::{gadget_key, search_gadget, SearchOutcome, SearchStats};
pub use freeze::{certify_and_freeze, find_frozen, frozen_digest, locate_frozen, FreezeError};
pub use shrink::{shrink_counterexample, verify_counterexample, ShrinkError, ShrinkOutcome};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::gadget::InterfaceContract;

/// Directory holding the frozen gadgets shipped with the crate.
pub const DATA_DIR: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/data");

#[derive(Debug, Error)]
pub enum SearchError {
    #[error("invalid search spec: {0}")]
    InvalidSpec(String),
}

/// What to look for: gadgets with `terminals` contact vertices (vertices
/// `0..terminals`) on at most `max_vertices` vertices satisfying `contract`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SearchSpec {
    pub max_vertices: usize,
    pub terminals: usize,
    #[serde(default)]
    pub template: Option<Template>,
    pub contract: InterfaceContract,
    #[serde(default)]
    pub dedup: bool,
}

/// A layered skeleton. Layers are laid out in order, so they partition the
/// vertex range; the first layer's leading vertices are the terminals.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Template {
    pub layers: Vec<Layer>,
    #[serde(default)]
    pub fixed_edges: Vec<[String; 2]>,
    /// Edges tried both present and absent.
    #[serde(default)]
    pub optional_edges: Vec<[String; 2]>,
    /// Applied in order after the optional edges.
    #[serde(default)]
    pub rules: Vec<AttachRule>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Layer {
    pub name: String,
    /// One label per vertex of the layer.
    pub vertices: Vec<String>,
}

/// Every vertex of layer `from` gets between `min` and `max` neighbors in
/// layer `to`. With `interchangeable`, the `from` vertices are treated as
/// symmetric and their choices are enumerated in nondecreasing order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AttachRule {
    pub from: String,
    pub to: String,
    pub min: usize,
    pub max: usize,
    #[serde(default)]
    pub interchangeable: bool,
}

impl Template {
    pub fn vertex_count(&self) -> usize {
        self.layers.iter().map(|l| l.vertices.len()).sum()
    }

    pub fn labels(&self) -> Vec<String> {
        self.layers.iter().flat_map(|l| l.vertices.iter().cloned()).collect()
    }

    pub(crate) fn vertex(&self, label: &str) -> Result<usize, SearchError> {
        self.labels()
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| SearchError::InvalidSpec(format!("unknown vertex label `{label}`")))
    }

    pub(crate) fn layer(&self, name: &str) -> Result<std::ops::Range<usize>, SearchError> {
        let mut start = 0;
        for l in &self.layers {
            if l.name == name {
                return Ok(start..start + l.vertices.len());
            }
            start += l.vertices.len();
        }
        Err(SearchError::InvalidSpec(format!("unknown layer `{name}`")))
    }
}

impl SearchSpec {
    pub fn validate(&self) -> Result<(), SearchError> {
        let bad = |m: String| Err(SearchError::InvalidSpec(m));
        if self.max_vertices < self.terminals {
            // Valid but hopeless; the search simply finds nothing.
            return Ok(());
        }
        if self.max_vertices > 64 {
            return bad("max_vertices above 64 is not supported".into());
        }
        if let Err(e) = self.contract.validate(self.terminals) {
            return bad(e);
        }
        match &self.template {
            None if self.max_vertices > 7 => bad("untemplated search is limited to 7 vertices".into()),
            None => Ok(()),
            Some(t) => {
                let labels = t.labels();
                let mut sorted = labels.clone();
                sorted.sort();
                sorted.dedup();
                if sorted.len() != labels.len() {
                    return bad("vertex labels must be unique".into());
                }
                if t.vertex_count() > self.max_vertices {
                    return bad(format!(
                        "template has {} vertices, above max_vertices {}",
                        t.vertex_count(),
                        self.max_vertices
                    ));
                }
                if t.vertex_count() < self.terminals {
                    return bad("template has fewer vertices than terminals".into());
                }
                for [u, v] in t.fixed_edges.iter().chain(&t.optional_edges) {
                    if t.vertex(u)? == t.vertex(v)? {
                        return bad(format!("edge {u}-{v} is a loop"));
                    }
                }
                for r in &t.rules {
                    t.layer(&r.from)?;
                    let to = t.layer(&r.to)?;
                    if r.min > r.max || r.max > to.len() {
                        return bad(format!("rule {}->{}: bad bounds {}..={}", r.from, r.to, r.min, r.max));
                    }
                }
                Ok(())
            }
        }
    }

    /// The layered skeleton for the 15-vertex first gadget: terminals
    /// `a b c`; ring path `d e f g h i` (optionally closed) whose vertices
    /// each touch a terminal; middle vertices `j k l` each on two ring
    /// vertices; inner triangle `m n o` each on one middle vertex.
    pub fn first_gadget() -> SearchSpec {
        let s = |x: &str| x.to_string();
        let layer = |name: &str, vs: &[&str]| Layer {
            name: s(name),
            vertices: vs.iter().map(|v| s(v)).collect(),
        };
        let e = |u: &str, v: &str| [s(u), s(v)];
        SearchSpec {
            max_vertices: 15,
            terminals: 3,
            template: Some(Template {
                layers: vec![
                    layer("terminals", &["a", "b", "c"]),
                    layer("ring", &["d", "e", "f", "g", "h", "i"]),
                    layer("middle", &["j", "k", "l"]),
                    layer("inner", &["m", "n", "o"]),
                ],
                fixed_edges: vec![
                    e("d", "e"),
                    e("e", "f"),
                    e("f", "g"),
                    e("g", "h"),
                    e("h", "i"),
                    e("m", "n"),
                    e("n", "o"),
                    e("m", "o"),
                ],
                optional_edges: vec![e("i", "d")],
                rules: vec![
                    AttachRule {
                        from: s("ring"),
                        to: s("terminals"),
                        min: 1,
                        max: 3,
                        interchangeable: false,
                    },
                    AttachRule {
                        from: s("middle"),
                        to: s("ring"),
                        min: 2,
                        max: 2,
                        interchangeable: true,
                    },
                    AttachRule {
                        from: s("inner"),
                        to: s("middle"),
                        min: 1,
                        max: 1,
                        interchangeable: true,
                    },
                ],
            }),
            contract: InterfaceContract::first_gadget(),
            dedup: true,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_spec_is_valid_and_serializes() {
        let spec = SearchSpec::first_gadget();
        spec.validate().unwrap();
        assert_eq!(spec.template.as_ref().unwrap().vertex_count(), 15);
        let json = serde_json::to_string(&spec).unwrap();
        assert_eq!(serde_json::from_str::<SearchSpec>(&json).unwrap(), spec);
    }

    #[test]
    fn invalid_specs_are_named() {
        let mut spec = SearchSpec::first_gadget();
        spec.template.as_mut().unwrap().fixed_edges.push(["a".into(), "zz".into()]);
        assert!(spec.validate().unwrap_err().to_string().contains("zz"));
        let mut raw = SearchSpec::first_gadget();
        raw.template = None;
        assert!(raw.validate().is_err());
    }
}
