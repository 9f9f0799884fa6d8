// SPDX-License-Identifier: Apache-2.0

//! Greedy-coloring box covering.
//!
//! For a box size `l`, two nodes may share a box only when their hop
//! distance is below `l`. Joining every pair at distance `>= l` gives an
//! auxiliary "conflict" graph whose proper colorings are exactly the valid
//! box covers, so the minimum number of boxes is its chromatic number.
//! [`greedy_cover`] colors it greedily in a given node order;
//! [`exact_min_cover`] finds the true minimum for small graphs.
//!
//! The conflict graph is never built: conflicts are read straight off the
//! [`DistanceMatrix`].

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::{DistanceMatrix, Error, Result};

/// Largest node count accepted by [`exact_min_cover`].
pub const EXACT_COVER_MAX_NODES: usize = 16;

/// A partition of the nodes into boxes for one box size.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoxCover {
    /// Box size `l`: every pair inside a box is fewer than `l` hops apart.
    #[serde(rename = "l")]
    pub box_size: u32,
    /// Boxes in color order, each sorted ascending.
    pub boxes: Vec<Vec<usize>>,
    /// Seed of the generator that drew the node ordering, when there was one.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

impl BoxCover {
    /// `N_b(l)`.
    pub fn box_count(&self) -> usize {
        self.boxes.len()
    }

    /// Number of nodes in each box.
    pub fn box_sizes(&self) -> Vec<usize> {
        self.boxes.iter().map(Vec::len).collect()
    }

    /// Checks that the boxes partition `0..n` and that every intra-box
    /// distance is below the box size.
    pub fn is_valid_for(&self, dist: &DistanceMatrix) -> bool {
        let n = dist.node_count();
        let mut seen = vec![false; n];
        for b in &self.boxes {
            if b.is_empty() {
                return false;
            }
            for &i in b {
                if i >= n || std::mem::replace(&mut seen[i], true) {
                    return false;
                }
            }
            for (k, &i) in b.iter().enumerate() {
                if b[k + 1..].iter().any(|&j| dist.get(i, j) >= self.box_size) {
                    return false;
                }
            }
        }
        seen.into_iter().all(|s| s)
    }
}

/// How node orderings are drawn across box sizes within one run.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum PermutationMode {
    /// A fresh random ordering for every box size.
    #[default]
    Independent,
    /// One random ordering reused for every box size.
    Shared,
}

/// Box sizes `1..=diameter + 1`; the last one always yields a single box.
pub fn default_box_sizes(dist: &DistanceMatrix) -> Vec<u32> {
    (1..=dist.diameter() + 1).collect()
}

/// Uniform random permutation of `0..n`.
pub fn random_permutation<R: rand::Rng + ?Sized>(rng: &mut R, n: usize) -> Vec<usize> {
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    order
}

/// Greedily colors the conflict graph for box size `box_size`, visiting
/// nodes in `order`. Each node takes the smallest color none of its
/// already-colored conflicting nodes uses; color classes become boxes.
pub fn greedy_cover(dist: &DistanceMatrix, box_size: u32, order: &[usize]) -> Result<BoxCover> {
    if box_size < 1 {
        return Err(Error::InvalidBoxSize(box_size));
    }
    check_permutation(order, dist.node_count())?;
    Ok(greedy_cover_unchecked(dist, box_size, order))
}

fn check_permutation(order: &[usize], n: usize) -> Result<()> {
    if order.len() != n {
        return Err(Error::InvalidPermutation(n));
    }
    let mut seen = vec![false; n];
    for &i in order {
        if i >= n || std::mem::replace(&mut seen[i], true) {
            return Err(Error::InvalidPermutation(n));
        }
    }
    Ok(())
}

pub(crate) fn greedy_cover_unchecked(dist: &DistanceMatrix, box_size: u32, order: &[usize]) -> BoxCover {
    let mut boxes: Vec<Vec<usize>> = Vec::new();
    for &node in order {
        let row = dist.row(node);
        // A color is free iff no member of its class conflicts with `node`.
        let free = boxes
            .iter()
            .position(|members| members.iter().all(|&m| u32::from(row[m]) < box_size));
        match free {
            Some(color) => boxes[color].push(node),
            None => boxes.push(vec![node]),
        }
    }
    for b in &mut boxes {
        b.sort_unstable();
    }
    BoxCover {
        box_size,
        boxes,
        seed: None,
    }
}

/// Minimum number of boxes of size `box_size` covering the graph, i.e. the
/// chromatic number of the conflict graph, by exhaustive subset search.
///
/// Limited to [`EXACT_COVER_MAX_NODES`] nodes.
pub fn exact_min_cover(dist: &DistanceMatrix, box_size: u32) -> Result<usize> {
    if box_size < 1 {
        return Err(Error::InvalidBoxSize(box_size));
    }
    let n = dist.node_count();
    if n > EXACT_COVER_MAX_NODES {
        return Err(Error::TooLarge(format!(
            "exact cover needs at most {EXACT_COVER_MAX_NODES} nodes, got {n}"
        )));
    }
    if n == 0 {
        return Ok(0);
    }
    // compatible[i]: nodes that may share a box with i (including i).
    let compatible: Vec<u32> = (0..n)
        .map(|i| {
            (0..n)
                .filter(|&j| dist.get(i, j) < box_size)
                .fold(0u32, |acc, j| acc | (1 << j))
        })
        .collect();

    let full = (1usize << n) - 1;
    let mut is_box = vec![false; full + 1];
    is_box[0] = true;
    for mask in 1..=full {
        let low = mask.trailing_zeros() as usize;
        let rest = mask & (mask - 1);
        is_box[mask] = is_box[rest] && (rest as u32 & !compatible[low]) == 0;
    }

    // min_boxes[mask]: fewest boxes covering exactly `mask`. The box holding
    // the lowest node of `mask` is enumerated among subsets of `mask`.
    let mut min_boxes = vec![u8::MAX; full + 1];
    min_boxes[0] = 0;
    for mask in 1..=full {
        if is_box[mask] {
            min_boxes[mask] = 1;
            continue;
        }
        let low = mask & mask.wrapping_neg();
        let rest = mask ^ low;
        let mut best = u8::MAX;
        let mut sub = rest;
        loop {
            let candidate = sub | low;
            if is_box[candidate] {
                best = best.min(min_boxes[mask ^ candidate].saturating_add(1));
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & rest;
        }
        min_boxes[mask] = best;
    }
    Ok(usize::from(min_boxes[full]))
}

/// One greedy cover per box size, with orderings drawn from a ChaCha8
/// generator seeded with `seed`.
///
/// With [`PermutationMode::Independent`] the k-th box size uses the k-th
/// permutation drawn from the generator; with [`PermutationMode::Shared`]
/// the first permutation is used for all of them.
pub fn cover_series(
    dist: &DistanceMatrix,
    box_sizes: &[u32],
    seed: u64,
    mode: PermutationMode,
) -> Result<Vec<BoxCover>> {
    if box_sizes.is_empty() {
        return Err(Error::InvalidArgument("no box sizes given".into()));
    }
    if let Some(&bad) = box_sizes.iter().find(|&&l| l < 1) {
        return Err(Error::InvalidBoxSize(bad));
    }
    let n = dist.node_count();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let shared = match mode {
        PermutationMode::Shared => Some(random_permutation(&mut rng, n)),
        PermutationMode::Independent => None,
    };
    Ok(box_sizes
        .iter()
        .map(|&l| {
            let mut cover = match &shared {
                Some(order) => greedy_cover_unchecked(dist, l, order),
                None => greedy_cover_unchecked(dist, l, &random_permutation(&mut rng, n)),
            };
            cover.seed = Some(seed);
            cover
        })
        .collect())
}
