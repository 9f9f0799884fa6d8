// SPDX-License-Identifier: Apache-2.0

//! Immutable undirected simple graphs.

use std::collections::VecDeque;

/// An undirected simple graph on nodes `0..n`.
///
/// Construction normalizes its input: self-loops and repeated edges (in
/// either direction) are dropped and every adjacency list is sorted. The
/// original node identifiers from the input file are kept as labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adjacency: Vec<Vec<usize>>,
    labels: Vec<String>,
    edge_count: usize,
}

impl Graph {
    /// Builds a graph on `labels.len()` nodes from an edge iterator.
    ///
    /// Panics if an endpoint is out of range.
    pub fn from_edges<I>(labels: Vec<String>, edges: I) -> Self
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let n = labels.len();
        let mut adjacency = vec![Vec::new(); n];
        for (u, v) in edges {
            assert!(u < n && v < n, "edge ({u}, {v}) out of range for {n} nodes");
            if u != v {
                adjacency[u].push(v);
                adjacency[v].push(u);
            }
        }
        let mut twice_m = 0;
        for list in &mut adjacency {
            list.sort_unstable();
            list.dedup();
            twice_m += list.len();
        }
        Graph {
            adjacency,
            labels,
            edge_count: twice_m / 2,
        }
    }

    /// Builds a graph whose labels are the decimal node ids.
    pub fn with_node_count<I>(n: usize, edges: I) -> Self
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        Self::from_edges((0..n).map(|i| i.to_string()).collect(), edges)
    }

    pub fn node_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    /// Sorted neighbor ids of `node`.
    pub fn neighbors(&self, node: usize) -> &[usize] {
        &self.adjacency[node]
    }

    pub fn degree(&self, node: usize) -> usize {
        self.adjacency[node].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adjacency[u].binary_search(&v).is_ok()
    }

    pub fn label(&self, node: usize) -> &str {
        &self.labels[node]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Edges as `(u, v)` pairs with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency.iter().enumerate().flat_map(|(u, list)| {
            list.iter()
                .copied()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    /// Connected components, each sorted, listed in order of their
    /// smallest node id.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.node_count();
        let mut seen = vec![false; n];
        let mut components = Vec::new();
        let mut queue = VecDeque::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            queue.push_back(start);
            let mut members = Vec::new();
            while let Some(u) = queue.pop_front() {
                members.push(u);
                for &v in &self.adjacency[u] {
                    if !seen[v] {
                        seen[v] = true;
                        queue.push_back(v);
                    }
                }
            }
            members.sort_unstable();
            components.push(members);
        }
        components
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Induced subgraph on the largest connected component, renumbered
    /// contiguously in the original node order. Ties go to the component
    /// holding the smallest node id.
    pub fn largest_connected_component(&self) -> Graph {
        let components = self.components();
        let mut best: Option<&Vec<usize>> = None;
        for c in &components {
            if best.map_or(true, |b| c.len() > b.len()) {
                best = Some(c);
            }
        }
        match best {
            Some(members) if members.len() < self.node_count() => self.induced_subgraph(members),
            _ => self.clone(),
        }
    }

    /// Induced subgraph on the sorted node list `members`.
    pub fn induced_subgraph(&self, members: &[usize]) -> Graph {
        let mut index = vec![usize::MAX; self.node_count()];
        for (new, &old) in members.iter().enumerate() {
            index[old] = new;
        }
        let labels = members.iter().map(|&i| self.labels[i].clone()).collect();
        let edges = self
            .edges()
            .filter(|&(u, v)| index[u] != usize::MAX && index[v] != usize::MAX)
            .map(|(u, v)| (index[u], index[v]))
            .collect::<Vec<_>>();
        Graph::from_edges(labels, edges)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        Graph::with_node_count(n, (1..n).map(|i| (i - 1, i)))
    }

    #[test]
    fn normalizes_loops_and_duplicates() {
        let g = Graph::with_node_count(3, [(0, 1), (1, 0), (0, 1), (2, 2), (1, 2)]);
        assert_eq!(g.edge_count(), 2);
        assert_eq!(g.neighbors(1), &[0, 2]);
        assert!(g.neighbors(2).iter().all(|&v| v != 2));
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn lcc_drops_isolated_node() {
        let g = Graph::with_node_count(4, [(0, 1), (1, 2), (2, 0)]);
        let lcc = g.largest_connected_component();
        assert_eq!(lcc.node_count(), 3);
        assert_eq!(lcc.edge_count(), 3);
    }

    #[test]
    fn lcc_tie_goes_to_smallest_id() {
        let labels = vec!["a".into(), "b".into(), "c".into(), "d".into()];
        let g = Graph::from_edges(labels, [(2, 3), (0, 1)]);
        let lcc = g.largest_connected_component();
        assert_eq!(lcc.node_count(), 2);
        assert_eq!(lcc.labels(), &["a".to_string(), "b".to_string()]);
    }

    #[test]
    fn lcc_of_connected_graph_is_identity() {
        let g = path(5);
        assert_eq!(g.largest_connected_component(), g);
    }

    #[test]
    fn lcc_renumbers_contiguously() {
        let g = Graph::with_node_count(6, [(0, 5), (1, 3), (3, 4), (4, 1)]);
        let lcc = g.largest_connected_component();
        assert_eq!(lcc.node_count(), 3);
        assert_eq!(lcc.labels(), &["1", "3", "4"]);
        assert_eq!(lcc.edges().collect::<Vec<_>>(), vec![(0, 1), (0, 2), (1, 2)]);
    }
}
