// SPDX-License-Identifier: Apache-2.0

//! Box-count and box-entropy scaling series and their dimension fits.
//!
//! For each box size `l` a cover yields the box count `N_b(l)` and the
//! occupancy entropy
//!
//! ```text
//! I(l) = -sum_i (n_i / n) ln(n_i / n)
//! ```
//!
//! where `n_i` is the number of nodes in box `i`. Both are averaged over
//! randomized covers, and the box-counting dimension `d_b` and information
//! dimension `d_i` are minus the least-squares slopes of `ln N_b` and
//! `ln I` against `ln l`. Entropies are in nats.

use std::io::{self, Write};

use rayon::prelude::*;
use serde::Serialize;

use crate::covering::{cover_series, default_box_sizes, BoxCover, PermutationMode};
use crate::{DistanceMatrix, Error, Result};

/// Occupancy entropy of a cover of `n` nodes, in nats.
pub fn information_entropy(cover: &BoxCover, n: usize) -> f64 {
    entropy_of_box_sizes(cover.boxes.iter().map(Vec::len), n)
}

/// Occupancy entropy from box cardinalities that sum to `n`.
///
/// Evaluated as `ln n - sum (n_i/n) ln n_i`, which is exactly `ln n` for
/// singleton boxes and exactly 0 for a single box. Empty boxes contribute
/// nothing.
pub fn entropy_of_box_sizes<I: IntoIterator<Item = usize>>(sizes: I, n: usize) -> f64 {
    if n == 0 {
        return 0.0;
    }
    let total = n as f64;
    let weighted: f64 = sizes
        .into_iter()
        .filter(|&s| s > 0)
        .map(|s| {
            let s = s as f64;
            (s / total) * s.ln()
        })
        .sum();
    (total.ln() - weighted).max(0.0)
}

/// Per-box-size statistics of `N_b(l)` and `I(l)` over randomized runs.
///
/// Standard deviations are population deviations (divided by `runs`).
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ScalingSeries {
    #[serde(rename = "l")]
    pub box_sizes: Vec<u32>,
    pub runs: usize,
    #[serde(rename = "mean_Nb")]
    pub mean_box_count: Vec<f64>,
    #[serde(rename = "std_Nb")]
    pub std_box_count: Vec<f64>,
    #[serde(rename = "mean_I")]
    pub mean_information: Vec<f64>,
    #[serde(rename = "std_I")]
    pub std_information: Vec<f64>,
    /// Raw box counts, indexed `[run][box size]`.
    #[serde(skip)]
    pub box_counts: Vec<Vec<usize>>,
    /// Raw entropies, indexed `[run][box size]`.
    #[serde(skip)]
    pub information: Vec<Vec<f64>>,
}

impl ScalingSeries {
    /// Writes `l,mean_Nb,std_Nb,mean_I,std_I` rows.
    pub fn write_csv<W: Write>(&self, mut out: W) -> io::Result<()> {
        writeln!(out, "l,mean_Nb,std_Nb,mean_I,std_I")?;
        for k in 0..self.box_sizes.len() {
            writeln!(
                out,
                "{},{},{},{},{}",
                self.box_sizes[k],
                self.mean_box_count[k],
                self.std_box_count[k],
                self.mean_information[k],
                self.std_information[k]
            )?;
        }
        Ok(())
    }

    pub fn to_csv(&self) -> String {
        let mut out = Vec::new();
        self.write_csv(&mut out).expect("writing to a Vec cannot fail");
        String::from_utf8(out).expect("CSV output is ASCII")
    }
}

/// Mean and population standard deviation. The mean is accumulated as an
/// offset from the first sample so that identical samples reproduce their
/// value exactly.
fn mean_std(values: impl Iterator<Item = f64> + Clone) -> (f64, f64) {
    let mut iter = values.clone();
    let Some(first) = iter.next() else {
        return (f64::NAN, f64::NAN);
    };
    let count = 1 + iter.clone().count();
    let offset: f64 = iter.map(|x| x - first).sum();
    let mean = first + offset / count as f64;
    let var = values.map(|x| (x - mean) * (x - mean)).sum::<f64>() / count as f64;
    (mean, var.sqrt())
}

/// Runs `runs` randomized cover series and aggregates them per box size.
///
/// Run `r` draws its orderings from seed `base_seed + r` (wrapping). Runs
/// execute in parallel on the current rayon pool; raw values are gathered
/// in run order before reduction, so the output is bit-identical for any
/// number of worker threads.
pub fn compute_series(
    dist: &DistanceMatrix,
    runs: usize,
    base_seed: u64,
    box_sizes: &[u32],
    mode: PermutationMode,
) -> Result<ScalingSeries> {
    if runs == 0 {
        return Err(Error::InvalidArgument("at least one run is required".into()));
    }
    let n = dist.node_count();
    let per_run = (0..runs)
        .into_par_iter()
        .map(|r| {
            let covers = cover_series(dist, box_sizes, base_seed.wrapping_add(r as u64), mode)?;
            let counts: Vec<usize> = covers.iter().map(BoxCover::box_count).collect();
            let info: Vec<f64> = covers.iter().map(|c| information_entropy(c, n)).collect();
            Ok((counts, info))
        })
        .collect::<Result<Vec<_>>>()?;
    let (box_counts, information): (Vec<_>, Vec<_>) = per_run.into_iter().unzip();

    let len = box_sizes.len();
    let mut series = ScalingSeries {
        box_sizes: box_sizes.to_vec(),
        runs,
        mean_box_count: Vec::with_capacity(len),
        std_box_count: Vec::with_capacity(len),
        mean_information: Vec::with_capacity(len),
        std_information: Vec::with_capacity(len),
        box_counts,
        information,
    };
    for k in 0..len {
        let (m, s) = mean_std(series.box_counts.iter().map(|run| run[k] as f64));
        series.mean_box_count.push(m);
        series.std_box_count.push(s);
        let (m, s) = mean_std(series.information.iter().map(|run| run[k]));
        series.mean_information.push(m);
        series.std_information.push(s);
    }
    Ok(series)
}

/// A least-squares line through transformed scaling points.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FitResult {
    /// Minus the fitted slope.
    pub dimension: f64,
    pub intercept: f64,
    /// Sum of squared residuals of the transformed points.
    #[serde(rename = "sse_Q")]
    pub sse: f64,
    /// Transformed `(x, y)` points the line was fitted to.
    pub points_used: Vec<(f64, f64)>,
    /// Original `x` values dropped because their `y` was zero.
    pub excluded: Vec<f64>,
}

/// Fits `ln y = intercept - dimension * ln x`.
///
/// Points with `y == 0` cannot be log-transformed and are skipped (and
/// listed in [`FitResult::excluded`]). Needs at least two usable points
/// with distinct `x`.
pub fn fit_loglog(xs: &[f64], ys: &[f64]) -> Result<FitResult> {
    check_points(xs, ys)?;
    let mut points = Vec::with_capacity(xs.len());
    let mut excluded = Vec::new();
    for (&x, &y) in xs.iter().zip(ys) {
        if y == 0.0 {
            excluded.push(x);
        } else {
            points.push((x.ln(), y.ln()));
        }
    }
    least_squares(points, excluded)
}

/// Fits `y = intercept - dimension * ln x`, the reading in which the
/// entropy itself (not its logarithm) is linear in `ln l`. Zero values
/// are kept.
pub fn fit_semilog(xs: &[f64], ys: &[f64]) -> Result<FitResult> {
    check_points(xs, ys)?;
    let points = xs.iter().zip(ys).map(|(&x, &y)| (x.ln(), y)).collect();
    least_squares(points, Vec::new())
}

fn check_points(xs: &[f64], ys: &[f64]) -> Result<()> {
    if xs.len() != ys.len() {
        return Err(Error::InvalidArgument(format!(
            "{} x values but {} y values",
            xs.len(),
            ys.len()
        )));
    }
    if let Some(x) = xs.iter().find(|x| !(x.is_finite() && **x > 0.0)) {
        return Err(Error::InvalidArgument(format!("x value {x} is not positive")));
    }
    if let Some(y) = ys.iter().find(|y| !(y.is_finite() && **y >= 0.0)) {
        return Err(Error::InvalidArgument(format!("y value {y} is not non-negative")));
    }
    Ok(())
}

fn least_squares(points: Vec<(f64, f64)>, excluded: Vec<f64>) -> Result<FitResult> {
    if points.len() < 2 {
        return Err(Error::Degenerate(format!(
            "{} usable point(s), at least 2 are needed",
            points.len()
        )));
    }
    let count = points.len() as f64;
    let mean_x = points.iter().map(|p| p.0).sum::<f64>() / count;
    let mean_y = points.iter().map(|p| p.1).sum::<f64>() / count;
    let (sxx, sxy) = points.iter().fold((0.0, 0.0), |(sxx, sxy), &(x, y)| {
        let dx = x - mean_x;
        (sxx + dx * dx, sxy + dx * (y - mean_y))
    });
    if sxx == 0.0 {
        return Err(Error::Degenerate("all x values are identical".into()));
    }
    let slope = sxy / sxx;
    let intercept = mean_y - slope * mean_x;
    let sse = points
        .iter()
        .map(|&(x, y)| {
            let r = y - (intercept + slope * x);
            r * r
        })
        .sum();
    Ok(FitResult {
        dimension: -slope,
        intercept,
        sse,
        points_used: points,
        excluded,
    })
}

/// How the entropy series is turned into a dimension.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum EntropyScaling {
    /// Power law `I(l) ~ l^-d`: fit `ln I` against `ln l`.
    #[default]
    LogLog,
    /// `I(l) ~ -d ln l`: fit `I` against `ln l`.
    SemiLog,
}

#[derive(Debug, Clone, PartialEq)]
pub struct EstimateConfig {
    pub runs: usize,
    pub seed: u64,
    /// Box sizes to cover with; `None` means `1..=diameter + 1`.
    pub box_sizes: Option<Vec<u32>>,
    /// Smallest box size used in the fits; `None` means the smallest computed.
    pub fit_min: Option<u32>,
    /// Largest box size used in the fits; `None` means the largest whose
    /// mean value is positive, chosen separately for each series.
    pub fit_max: Option<u32>,
    pub entropy_scaling: EntropyScaling,
    pub permutation_mode: PermutationMode,
}

impl Default for EstimateConfig {
    fn default() -> Self {
        EstimateConfig {
            runs: 1000,
            seed: 42,
            box_sizes: None,
            fit_min: None,
            fit_max: None,
            entropy_scaling: EntropyScaling::LogLog,
            permutation_mode: PermutationMode::Independent,
        }
    }
}

/// Mean and spread of dimensions fitted to each run's own series.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PerRunSummary {
    pub box_dimension_mean: f64,
    pub box_dimension_std: f64,
    pub box_fits: usize,
    pub information_dimension_mean: f64,
    pub information_dimension_std: f64,
    pub information_fits: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct DimensionEstimate {
    pub series: ScalingSeries,
    /// Fit of the mean box counts: `d_b` and `Q_b`.
    pub box_fit: FitResult,
    /// Fit of the mean entropies: `d_i` and `Q_i`.
    pub information_fit: FitResult,
    pub per_run: PerRunSummary,
}

/// Computes the scaling series and fits both dimensions to the run means.
///
/// Fails with [`Error::Degenerate`] when either series leaves fewer than
/// two usable points in the fit window.
pub fn estimate_dimensions(dist: &DistanceMatrix, config: &EstimateConfig) -> Result<DimensionEstimate> {
    let box_sizes = match &config.box_sizes {
        Some(sizes) => sizes.clone(),
        None => default_box_sizes(dist),
    };
    let series = compute_series(dist, config.runs, config.seed, &box_sizes, config.permutation_mode)?;

    let box_window = fit_window(&series.box_sizes, &series.mean_box_count, config);
    let info_window = fit_window(&series.box_sizes, &series.mean_information, config);
    let info_fitter = match config.entropy_scaling {
        EntropyScaling::LogLog => fit_loglog,
        EntropyScaling::SemiLog => fit_semilog,
    };

    let box_fit = fit_window_with(&series.box_sizes, &series.mean_box_count, &box_window, fit_loglog)
        .map_err(|e| label_degenerate(e, "box-count"))?;
    let information_fit =
        fit_window_with(&series.box_sizes, &series.mean_information, &info_window, info_fitter)
            .map_err(|e| label_degenerate(e, "information"))?;

    let box_dims: Vec<f64> = series
        .box_counts
        .iter()
        .filter_map(|run| {
            let ys: Vec<f64> = run.iter().map(|&c| c as f64).collect();
            fit_window_with(&series.box_sizes, &ys, &box_window, fit_loglog).ok()
        })
        .map(|f| f.dimension)
        .collect();
    let info_dims: Vec<f64> = series
        .information
        .iter()
        .filter_map(|run| fit_window_with(&series.box_sizes, run, &info_window, info_fitter).ok())
        .map(|f| f.dimension)
        .collect();
    let (box_mean, box_std) = mean_std(box_dims.iter().copied());
    let (info_mean, info_std) = mean_std(info_dims.iter().copied());

    Ok(DimensionEstimate {
        per_run: PerRunSummary {
            box_dimension_mean: box_mean,
            box_dimension_std: box_std,
            box_fits: box_dims.len(),
            information_dimension_mean: info_mean,
            information_dimension_std: info_std,
            information_fits: info_dims.len(),
        },
        series,
        box_fit,
        information_fit,
    })
}

fn label_degenerate(err: Error, which: &str) -> Error {
    match err {
        Error::Degenerate(msg) => Error::Degenerate(format!("{which} series: {msg}")),
        other => other,
    }
}

/// Indices of the box sizes inside the configured fit range.
fn fit_window(box_sizes: &[u32], means: &[f64], config: &EstimateConfig) -> Vec<usize> {
    let lo = config.fit_min.unwrap_or(0);
    let hi = config.fit_max.unwrap_or_else(|| {
        box_sizes
            .iter()
            .zip(means)
            .filter(|(_, &m)| m > 0.0)
            .map(|(&l, _)| l)
            .max()
            .unwrap_or(0)
    });
    (0..box_sizes.len())
        .filter(|&k| (lo..=hi).contains(&box_sizes[k]))
        .collect()
}

fn fit_window_with(
    box_sizes: &[u32],
    ys: &[f64],
    window: &[usize],
    fitter: fn(&[f64], &[f64]) -> Result<FitResult>,
) -> Result<FitResult> {
    let xs: Vec<f64> = window.iter().map(|&k| f64::from(box_sizes[k])).collect();
    let ys: Vec<f64> = window.iter().map(|&k| ys[k]).collect();
    fitter(&xs, &ys)
}
