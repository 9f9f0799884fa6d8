// SPDX-License-Identifier: Apache-2.0

//! Dense all-pairs hop distances.

use std::collections::VecDeque;

use rayon::prelude::*;

use crate::{Error, Graph, Result};

const UNREACHED: u16 = u16::MAX;

/// Row-major `n x n` matrix of shortest-path hop counts of a connected graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    dist: Vec<u16>,
    diameter: u32,
}

impl DistanceMatrix {
    pub fn node_count(&self) -> usize {
        self.n
    }

    /// Largest finite distance.
    pub fn diameter(&self) -> u32 {
        self.diameter
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u32 {
        u32::from(self.dist[i * self.n + j])
    }

    /// Distances from `i` to every node.
    #[inline]
    pub fn row(&self, i: usize) -> &[u16] {
        &self.dist[i * self.n..(i + 1) * self.n]
    }

    /// Builds a matrix from explicit rows, checking that it is square,
    /// symmetric, zero on the diagonal and positive elsewhere.
    pub fn from_rows(rows: &[Vec<u32>]) -> Result<Self> {
        let n = rows.len();
        if let Some((i, row)) = rows.iter().enumerate().find(|(_, r)| r.len() != n) {
            return Err(Error::InvalidArgument(format!(
                "row {i} has {} entries, expected {n}",
                row.len()
            )));
        }
        let mut dist = Vec::with_capacity(n * n);
        for (i, row) in rows.iter().enumerate() {
            for (j, &d) in row.iter().enumerate() {
                let ok = d < u32::from(UNREACHED) && (d == 0) == (i == j) && rows[j][i] == d;
                if !ok {
                    return Err(Error::InvalidArgument(format!("invalid distance {d} at ({i}, {j})")));
                }
                dist.push(d as u16);
            }
        }
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        let diameter = dist.iter().copied().max().map_or(0, u32::from);
        Ok(DistanceMatrix { n, dist, diameter })
    }
}

/// Exact BFS hop distances between all node pairs.
///
/// Each source is an independent BFS, so rows are filled in parallel; the
/// result does not depend on scheduling. Fails with [`Error::Disconnected`]
/// when some pair is unreachable.
pub fn all_pairs_distances(graph: &Graph) -> Result<DistanceMatrix> {
    let n = graph.node_count();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    if n >= usize::from(UNREACHED) {
        return Err(Error::TooLarge(format!(
            "{n} nodes; the dense distance matrix supports fewer than {UNREACHED}"
        )));
    }
    let mut dist = vec![UNREACHED; n * n];
    dist.par_chunks_mut(n)
        .enumerate()
        .for_each_init(VecDeque::new, |queue, (source, row)| bfs(graph, source, row, queue));

    if dist.contains(&UNREACHED) {
        return Err(Error::Disconnected);
    }
    let diameter = dist.iter().copied().max().map_or(0, u32::from);
    Ok(DistanceMatrix { n, dist, diameter })
}

fn bfs(graph: &Graph, source: usize, row: &mut [u16], queue: &mut VecDeque<usize>) {
    queue.clear();
    row[source] = 0;
    queue.push_back(source);
    while let Some(u) = queue.pop_front() {
        let next = row[u] + 1;
        for &v in graph.neighbors(u) {
            if row[v] == UNREACHED {
                row[v] = next;
                queue.push_back(v);
            }
        }
    }
}
