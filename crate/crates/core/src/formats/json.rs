//! JSON gadget format: `{ n, edges, labels?, terminals?, contract?, digest? }`.
//! Plain graphs use the same object without the gadget fields.

use std::collections::BTreeMap;

use std::io;

use serde::{Deserialize, Serialize};
use serde_json::ser::{Formatter, PrettyFormatter};

use super::ParseError;
use crate::gadget::InterfaceContract;
use crate::graph::{Graph, Vertex};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GadgetFile {
    pub n: usize,
    pub edges: Vec<[Vertex; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<BTreeMap<Vertex, String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub terminals: Option<Vec<Vertex>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub contract: Option<InterfaceContract>,
    /// Hex SHA-256 over the canonical form and contract, set when frozen.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub digest: Option<String>,
}

impl GadgetFile {
    pub fn from_graph(g: &Graph) -> Self {
        GadgetFile {
            n: g.n(),
            edges: g.edges().iter().map(|&(u, v)| [u, v]).collect(),
            labels: (!g.labels().is_empty()).then(|| g.labels().clone()),
            terminals: None,
            contract: None,
            digest: None,
        }
    }

    pub fn graph(&self) -> Result<Graph, ParseError> {
        let edges: Vec<_> = self.edges.iter().map(|&[u, v]| (u, v)).collect();
        let g = Graph::new(self.n, &edges)?;
        Ok(match &self.labels {
            Some(l) => g.with_labels(l.iter().map(|(&v, s)| (v, s.clone())))?,
            None => g,
        })
    }

    pub fn to_json(&self) -> String {
        to_pretty_json(self)
    }

    pub fn from_json(bytes: &[u8]) -> Result<Self, ParseError> {
        Ok(serde_json::from_slice(bytes)?)
    }
}

/// Pretty JSON with a trailing newline, except that arrays nested inside
/// arrays (edges, distance rows) stay on one line.
pub fn to_pretty_json<T: Serialize>(value: &T) -> String {
    let mut out = Vec::new();
    let mut ser = serde_json::Serializer::with_formatter(&mut out, InnerCompact::default());
    value.serialize(&mut ser).expect("value serializes");
    out.push(b'\n');
    String::from_utf8(out).expect("serde_json writes UTF-8")
}

#[derive(Default)]
struct InnerCompact {
    pretty: PrettyFormatter<'static>,
    /// Open arrays, innermost last; true when written compactly.
    arrays: Vec<bool>,
}

impl InnerCompact {
    fn compact(&self) -> bool {
        self.arrays.last().copied().unwrap_or(false)
    }
}

impl Formatter for InnerCompact {
    fn begin_array<W: ?Sized + io::Write>(&mut self, w: &mut W) -> io::Result<()> {
        let compact = !self.arrays.is_empty();
        self.arrays.push(compact);
        if compact {
            w.write_all(b"[")
        } else {
            self.pretty.begin_array(w)
        }
    }

    fn end_array<W: ?Sized + io::Write>(&mut self, w: &mut W) -> io::Result<()> {
        if self.arrays.pop().unwrap_or(false) {
            w.write_all(b"]")
        } else {
            self.pretty.end_array(w)
        }
    }

    fn begin_array_value<W: ?Sized + io::Write>(&mut self, w: &mut W, first: bool) -> io::Result<()> {
        if self.compact() {
            if first {
                Ok(())
            } else {
                w.write_all(b", ")
            }
        } else {
            self.pretty.begin_array_value(w, first)
        }
    }

    fn end_array_value<W: ?Sized + io::Write>(&mut self, w: &mut W) -> io::Result<()> {
        if self.compact() {
            Ok(())
        } else {
            self.pretty.end_array_value(w)
        }
    }

    fn begin_object<W: ?Sized + io::Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.pretty.begin_object(w)
    }

    fn end_object<W: ?Sized + io::Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.pretty.end_object(w)
    }

    fn begin_object_key<W: ?Sized + io::Write>(&mut self, w: &mut W, first: bool) -> io::Result<()> {
        self.pretty.begin_object_key(w, first)
    }

    fn end_object_key<W: ?Sized + io::Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.pretty.end_object_key(w)
    }

    fn begin_object_value<W: ?Sized + io::Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.pretty.begin_object_value(w)
    }

    fn end_object_value<W: ?Sized + io::Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.pretty.end_object_value(w)
    }
}

pub fn encode_graph(g: &Graph) -> String {
    GadgetFile::from_graph(g).to_json()
}

pub fn decode_graph(bytes: &[u8]) -> Result<Graph, ParseError> {
    GadgetFile::from_json(bytes)?.graph()
}
