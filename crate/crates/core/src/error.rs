// SPDX-License-Identifier: Apache-2.0

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("graph has no nodes")]
    EmptyGraph,

    #[error("unknown network format `{0}` (expected edgelist, pajek or gml)")]
    UnknownFormat(String),

    #[error("graph is disconnected; reduce it to its largest connected component first")]
    Disconnected,

    #[error("graph too large: {0}")]
    TooLarge(String),

    #[error("box size must be at least 1, got {0}")]
    InvalidBoxSize(u32),

    #[error("ordering is not a permutation of 0..{0}")]
    InvalidPermutation(usize),

    #[error("degenerate scaling series: {0}")]
    Degenerate(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }
}
