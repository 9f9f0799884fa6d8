// SPDX-License-Identifier: Apache-2.0

//! Readers for the network file formats the datasets ship in.
//!
//! Only topology is read. Weights, coordinates and every other attribute
//! are ignored, directed inputs are symmetrized, and the result is always a
//! normalized [`Graph`].

mod edgelist;
mod gml;
mod pajek;

use std::collections::HashMap;
use std::fmt;
use std::io::{self, Write};
use std::path::Path;
use std::str::FromStr;

use crate::{Error, Graph, Result};

pub use edgelist::parse_edgelist;
pub use gml::parse_gml;
pub use pajek::parse_pajek;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Format {
    /// Whitespace separated node pairs, one per line; `#` and `%` start comments.
    EdgeList,
    /// `*Vertices` / `*Edges` / `*Arcs` sections (plus the `*Edgeslist` /
    /// `*Arcslist` adjacency forms).
    Pajek,
    /// `graph [ node [ id .. ] edge [ source .. target .. ] ]`.
    Gml,
}

impl Format {
    /// Guesses the format from a file extension, defaulting to edge list.
    pub fn from_path(path: &Path) -> Format {
        let ext = path
            .extension()
            .and_then(|e| e.to_str())
            .map(str::to_ascii_lowercase);
        match ext.as_deref() {
            Some("gml") => Format::Gml,
            Some("net") | Some("paj") | Some("pajek") => Format::Pajek,
            _ => Format::EdgeList,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Format::EdgeList => "edgelist",
            Format::Pajek => "pajek",
            Format::Gml => "gml",
        }
    }
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "edgelist" | "edges" | "txt" => Ok(Format::EdgeList),
            "pajek" | "net" => Ok(Format::Pajek),
            "gml" => Ok(Format::Gml),
            _ => Err(Error::UnknownFormat(s.to_string())),
        }
    }
}

/// Parses raw file content in the given format.
pub fn parse_network(bytes: &[u8], format: Format) -> Result<Graph> {
    let text = decode(bytes)?;
    match format {
        Format::EdgeList => parse_edgelist(text),
        Format::Pajek => parse_pajek(text),
        Format::Gml => parse_gml(text),
    }
}

/// Writes one `u v` line per edge using node labels.
pub fn write_edgelist<W: Write>(graph: &Graph, mut out: W) -> io::Result<()> {
    for (u, v) in graph.edges() {
        writeln!(out, "{} {}", graph.label(u), graph.label(v))?;
    }
    Ok(())
}

fn decode(bytes: &[u8]) -> Result<&str> {
    let bytes = bytes.strip_prefix(b"\xEF\xBB\xBF").unwrap_or(bytes);
    std::str::from_utf8(bytes).map_err(|e| {
        let line = 1 + bytes[..e.valid_up_to()]
            .iter()
            .filter(|&&b| b == b'\n')
            .count();
        Error::parse(line, "invalid UTF-8")
    })
}

/// Assigns contiguous ids to labels in order of first appearance.
#[derive(Default)]
struct Interner {
    ids: HashMap<String, usize>,
    labels: Vec<String>,
}

impl Interner {
    fn intern(&mut self, label: &str) -> usize {
        if let Some(&id) = self.ids.get(label) {
            return id;
        }
        let id = self.labels.len();
        self.ids.insert(label.to_string(), id);
        self.labels.push(label.to_string());
        id
    }

    fn into_graph(self, edges: Vec<(usize, usize)>) -> Result<Graph> {
        if self.labels.is_empty() {
            return Err(Error::EmptyGraph);
        }
        Ok(Graph::from_edges(self.labels, edges))
    }
}
