// SPDX-License-Identifier: Apache-2.0

//! Fractal dimensions of complex networks from randomized greedy box covering.
//!
//! The pipeline is:
//!
//! 1. [`parse_network`] reads an edge list, Pajek or GML file into a
//!    normalized undirected simple [`Graph`];
//! 2. [`Graph::largest_connected_component`] keeps the part of the network
//!    where every hop distance is finite;
//! 3. [`all_pairs_distances`] builds the dense [`DistanceMatrix`];
//! 4. [`greedy_cover`] partitions the nodes into boxes of diameter below `l`
//!    by greedily coloring the "far apart" graph, once per random ordering;
//! 5. [`compute_series`] averages the box count `N_b(l)` and the box
//!    occupancy entropy `I(l) = -sum (n_i/n) ln(n_i/n)` over many orderings,
//!    and [`fit_loglog`] turns each series into a dimension and an SSE.
//!
//! [`estimate_dimensions`] runs steps 4 and 5 end to end.

pub mod covering;
pub mod dimension;
pub mod distance;
mod error;
pub mod generators;
pub mod graph;
pub mod parse;

pub use covering::{
    cover_series, default_box_sizes, exact_min_cover, greedy_cover, random_permutation, BoxCover,
    PermutationMode, EXACT_COVER_MAX_NODES,
};
pub use dimension::{
    compute_series, estimate_dimensions, fit_loglog, fit_semilog, information_entropy,
    DimensionEstimate, EntropyScaling, EstimateConfig, FitResult, PerRunSummary, ScalingSeries,
};
pub use distance::{all_pairs_distances, DistanceMatrix};
pub use error::{Error, Result};
pub use generators::{generate, GraphKind};
pub use graph::Graph;
pub use parse::{parse_network, write_edgelist, Format};
