// SPDX-License-Identifier: Apache-2.0

//! JSON documents written by the CLI.

use std::path::Path;

use netfrac::{
    BoxCover, DimensionEstimate, EntropyScaling, EstimateConfig, FitResult, Format, Graph,
    PerRunSummary, PermutationMode,
};
use serde::Serialize;

/// Bumped whenever a field is renamed or removed.
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Serialize)]
pub struct FitReport<'a> {
    #[serde(flatten)]
    pub fit: &'a FitResult,
    pub runs: usize,
    pub seed: u64,
}

#[derive(Serialize)]
pub struct Summary<'a> {
    pub schema_version: u32,
    pub input: String,
    pub format: &'static str,
    pub original_n: usize,
    pub original_m: usize,
    pub n: usize,
    pub m: usize,
    pub diameter: u32,
    pub runs: usize,
    pub seed: u64,
    pub lmin: u32,
    pub lmax: u32,
    pub fit_lmin: Option<u32>,
    pub fit_lmax: Option<u32>,
    pub entropy_scaling: EntropyScaling,
    pub permutation_mode: PermutationMode,
    pub d_i: f64,
    #[serde(rename = "Q_i")]
    pub q_i: f64,
    pub d_b: f64,
    #[serde(rename = "Q_b")]
    pub q_b: f64,
    pub information_fit: FitReport<'a>,
    pub box_fit: FitReport<'a>,
    pub per_run: &'a PerRunSummary,
}

impl<'a> Summary<'a> {
    pub fn new(
        input: &Path,
        format: Format,
        original: &Graph,
        graph: &Graph,
        diameter: u32,
        config: &EstimateConfig,
        estimate: &'a DimensionEstimate,
    ) -> Self {
        let sizes = &estimate.series.box_sizes;
        let fit_report = |fit| FitReport {
            fit,
            runs: config.runs,
            seed: config.seed,
        };
        Summary {
            schema_version: SCHEMA_VERSION,
            input: input.display().to_string(),
            format: format.as_str(),
            original_n: original.node_count(),
            original_m: original.edge_count(),
            n: graph.node_count(),
            m: graph.edge_count(),
            diameter,
            runs: config.runs,
            seed: config.seed,
            lmin: sizes.first().copied().unwrap_or(1),
            lmax: sizes.last().copied().unwrap_or(1),
            fit_lmin: config.fit_min,
            fit_lmax: config.fit_max,
            entropy_scaling: config.entropy_scaling,
            permutation_mode: config.permutation_mode,
            d_i: estimate.information_fit.dimension,
            q_i: estimate.information_fit.sse,
            d_b: estimate.box_fit.dimension,
            q_b: estimate.box_fit.sse,
            information_fit: fit_report(&estimate.information_fit),
            box_fit: fit_report(&estimate.box_fit),
            per_run: &estimate.per_run,
        }
    }
}

/// `{"l": .., "boxes": [[..]], "seed": .., "labels": [..]}`. Box members are
/// node ids of the analyzed component; `labels[id]` is the input label.
#[derive(Serialize)]
pub struct CoverReport<'a> {
    #[serde(flatten)]
    pub cover: &'a BoxCover,
    pub labels: &'a [String],
}

impl<'a> CoverReport<'a> {
    pub fn new(cover: &'a BoxCover, graph: &'a Graph) -> Self {
        CoverReport {
            cover,
            labels: graph.labels(),
        }
    }
}
