// SPDX-License-Identifier: Apache-2.0

use super::Interner;
use crate::{Error, Graph, Result};

/// Parses a whitespace separated edge list.
///
/// Each non-blank line holds two node labels; any further columns (weights,
/// timestamps) are ignored. Text after `#` or `%` is a comment. Labels are
/// arbitrary tokens and get ids in order of first appearance.
pub fn parse_edgelist(text: &str) -> Result<Graph> {
    let mut nodes = Interner::default();
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = match raw.find(['#', '%']) {
            Some(pos) => &raw[..pos],
            None => raw,
        };
        let mut tokens = line.split_whitespace();
        let Some(first) = tokens.next() else {
            continue;
        };
        let second = tokens
            .next()
            .ok_or_else(|| Error::parse(idx + 1, format!("expected two node ids, found `{}`", line.trim())))?;
        let u = nodes.intern(first);
        let v = nodes.intern(second);
        edges.push((u, v));
    }
    nodes.into_graph(edges)
}
