// Licensed under the Apache License, Version 2.0 (the "License"); you may
// not use this file except in compliance with the License. You may obtain
// a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
// License for the specific language governing permissions and limitations
// under the License.

//! Immutable simple undirected graphs.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};

/// A simple undirected graph on the vertex ids `0..n`.
///
/// Neighbor lists are sorted and duplicate-free; the relation is symmetric
/// and irreflexive. Graphs are never mutated after construction.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adjacency: Vec<Vec<usize>>,
    edge_count: usize,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges (in either
    /// orientation) are merged; self-loops and out-of-range ids are rejected.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut adjacency = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n {
                return Err(Error::VertexOutOfRange { vertex: u, n });
            }
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            if u == v {
                return Err(Error::Input(alloc::format!("self-loop at vertex {u}")));
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        let mut degree_sum = 0;
        for nbrs in &mut adjacency {
            nbrs.sort_unstable();
            nbrs.dedup();
            degree_sum += nbrs.len();
        }
        Ok(Graph {
            adjacency,
            edge_count: degree_sum / 2,
        })
    }

    /// The graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Self {
        Graph {
            adjacency: vec![Vec::new(); n],
            edge_count: 0,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    fn check(&self, v: usize) -> Result<()> {
        if v < self.vertex_count() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.vertex_count(),
            })
        }
    }

    pub fn degree(&self, v: usize) -> Result<usize> {
        self.check(v)?;
        Ok(self.adjacency[v].len())
    }

    /// Maximum degree, Δ.
    pub fn max_degree(&self) -> Result<usize> {
        self.adjacency
            .iter()
            .map(Vec::len)
            .max()
            .ok_or(Error::EmptyGraph)
    }

    pub fn neighborhood(&self, v: usize) -> Result<VertexSet> {
        self.check(v)?;
        Ok(VertexSet(self.adjacency[v].clone()))
    }

    /// Sorted neighbor slice. Panics when `v` is out of range.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.vertex_count() && self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency.iter().enumerate().flat_map(|(u, nbrs)| {
            nbrs.iter()
                .copied()
                .filter(move |&v| u < v)
                .map(move |v| (u, v))
        })
    }

    pub fn degrees(&self) -> impl Iterator<Item = usize> + '_ {
        self.adjacency.iter().map(Vec::len)
    }

    /// True iff a single sweep from vertex 0 reaches every vertex.
    pub fn is_connected(&self) -> bool {
        let n = self.vertex_count();
        if n == 0 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut reached = 1;
        while let Some(u) = stack.pop() {
            for &v in &self.adjacency[u] {
                if !seen[v] {
                    seen[v] = true;
                    reached += 1;
                    stack.push(v);
                }
            }
        }
        reached == n
    }

    /// True iff every pair of distinct members of `set` is adjacent.
    pub fn is_clique(&self, set: &[usize]) -> bool {
        set.iter()
            .enumerate()
            .all(|(i, &u)| set[i + 1..].iter().all(|&v| self.has_edge(u, v)))
    }

    /// Adjacency rows as bitsets, for the search routines.
    pub(crate) fn bit_rows(&self) -> Vec<BitSet> {
        let n = self.vertex_count();
        self.adjacency
            .iter()
            .map(|nbrs| {
                let mut row = BitSet::new(n);
                for &v in nbrs {
                    row.insert(v);
                }
                row
            })
            .collect()
    }
}

/// A sorted, duplicate-free set of vertex ids.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(transparent))]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    pub fn new(mut members: Vec<usize>) -> Self {
        members.sort_unstable();
        members.dedup();
        VertexSet(members)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    /// Fails when a member is not a vertex of a graph on `n` vertices.
    pub fn check_within(&self, n: usize) -> Result<()> {
        match self.0.last() {
            Some(&v) if v >= n => Err(Error::VertexOutOfRange { vertex: v, n }),
            _ => Ok(()),
        }
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        VertexSet::new(iter.into_iter().collect())
    }
}

/// Fixed-width bitset over `0..len`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct BitSet {
    words: Vec<u64>,
}

impl BitSet {
    pub(crate) fn new(len: usize) -> Self {
        BitSet {
            words: vec![0; len.div_ceil(64)],
        }
    }

    pub(crate) fn insert(&mut self, i: usize) {
        self.words[i / 64] |= 1 << (i % 64);
    }

    pub(crate) fn remove(&mut self, i: usize) {
        self.words[i / 64] &= !(1 << (i % 64));
    }

    pub(crate) fn contains(&self, i: usize) -> bool {
        self.words[i / 64] & (1 << (i % 64)) != 0
    }

    pub(crate) fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub(crate) fn first(&self) -> Option<usize> {
        self.words
            .iter()
            .position(|&w| w != 0)
            .map(|wi| wi * 64 + self.words[wi].trailing_zeros() as usize)
    }

    pub(crate) fn difference_with(&mut self, other: &BitSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
    }

    pub(crate) fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub(crate) fn intersect_with(&mut self, other: &BitSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    /// True iff `self ∩ a ∩ b` is non-empty.
    pub(crate) fn meets_both(&self, a: &BitSet, b: &BitSet) -> bool {
        self.words
            .iter()
            .zip(&a.words)
            .zip(&b.words)
            .any(|((x, y), z)| x & y & z != 0)
    }
}
