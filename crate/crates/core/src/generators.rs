// SPDX-License-Identifier: Apache-2.0

//! Deterministic graph families with closed-form sizes and diameters.

use std::fmt;
use std::str::FromStr;

use crate::{Error, Graph, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphKind {
    /// `path n`: P_n, nodes in a line.
    Path,
    /// `cycle n`: C_n, `n >= 3`.
    Cycle,
    /// `complete n`: K_n.
    Complete,
    /// `star k`: a center (node 0) joined to `k` leaves.
    Star,
    /// `grid rows cols`: 4-neighbor lattice, node `r * cols + c`.
    Grid,
}

impl GraphKind {
    pub fn as_str(self) -> &'static str {
        match self {
            GraphKind::Path => "path",
            GraphKind::Cycle => "cycle",
            GraphKind::Complete => "complete",
            GraphKind::Star => "star",
            GraphKind::Grid => "grid",
        }
    }

    /// Number of size parameters the family takes.
    pub fn arity(self) -> usize {
        match self {
            GraphKind::Grid => 2,
            _ => 1,
        }
    }
}

impl fmt::Display for GraphKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for GraphKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "path" => Ok(GraphKind::Path),
            "cycle" => Ok(GraphKind::Cycle),
            "complete" => Ok(GraphKind::Complete),
            "star" => Ok(GraphKind::Star),
            "grid" => Ok(GraphKind::Grid),
            _ => Err(Error::InvalidArgument(format!(
                "unknown graph kind `{s}` (expected path, cycle, complete, star or grid)"
            ))),
        }
    }
}

/// Builds a member of `kind` from its size parameters.
pub fn generate(kind: GraphKind, params: &[usize]) -> Result<Graph> {
    if params.len() != kind.arity() {
        return Err(Error::InvalidArgument(format!(
            "{kind} takes {} size parameter(s), got {}",
            kind.arity(),
            params.len()
        )));
    }
    let min = match kind {
        GraphKind::Cycle => 3,
        GraphKind::Grid => 2,
        _ => 1,
    };
    if let Some(&bad) = params.iter().find(|&&p| p < min) {
        return Err(Error::InvalidArgument(format!("{kind} size {bad} is below {min}")));
    }
    let graph = match kind {
        GraphKind::Path => {
            let n = params[0];
            Graph::with_node_count(n, (1..n).map(|i| (i - 1, i)))
        }
        GraphKind::Cycle => {
            let n = params[0];
            Graph::with_node_count(n, (0..n).map(|i| (i, (i + 1) % n)))
        }
        GraphKind::Complete => {
            let n = params[0];
            Graph::with_node_count(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
        }
        GraphKind::Star => {
            let leaves = params[0];
            Graph::with_node_count(leaves + 1, (1..=leaves).map(|v| (0, v)))
        }
        GraphKind::Grid => {
            let (rows, cols) = (params[0], params[1]);
            let id = |r: usize, c: usize| r * cols + c;
            let mut edges = Vec::with_capacity(2 * rows * cols);
            for r in 0..rows {
                for c in 0..cols {
                    if c + 1 < cols {
                        edges.push((id(r, c), id(r, c + 1)));
                    }
                    if r + 1 < rows {
                        edges.push((id(r, c), id(r + 1, c)));
                    }
                }
            }
            Graph::with_node_count(rows * cols, edges)
        }
    };
    Ok(graph)
}
