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

//! Lower bounds on `χ_r`: clique number, `min(r, Δ) + 1`, and the largest
//! Vset-d2r certificate.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::{BitSet, Graph, VertexSet};

/// Node budget used when the caller does not pick one.
pub const DEFAULT_BOUND_BUDGET: u64 = 2_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum BoundKind {
    #[cfg_attr(feature = "serde", serde(rename = "clique"))]
    Clique,
    #[cfg_attr(feature = "serde", serde(rename = "vset-d2r"))]
    VsetD2r,
    #[cfg_attr(feature = "serde", serde(rename = "basic-r-delta"))]
    BasicRDelta,
}

/// A lower bound on `χ_r` with the certificate that justifies it.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct BoundReport {
    pub value: usize,
    pub kind: BoundKind,
    /// Clique or Vset-d2r members; empty for the degree bound.
    pub certificate: VertexSet,
    /// False when a search ran out of budget (the value is still a valid
    /// lower bound, just possibly not the largest of its kind).
    pub exact: bool,
}

/// Color classes used by a greedy coloring of `set`; bounds any clique inside it.
fn greedy_color_bound(rows: &[BitSet], set: &BitSet) -> usize {
    let mut uncolored = set.clone();
    let mut classes = 0;
    while !uncolored.is_empty() {
        classes += 1;
        let mut open = uncolored.clone();
        while let Some(v) = open.first() {
            uncolored.remove(v);
            open.remove(v);
            open.difference_with(&rows[v]);
        }
    }
    classes
}

struct CliqueSearch<'a> {
    rows: &'a [BitSet],
    best: Vec<usize>,
    current: Vec<usize>,
    nodes: u64,
    budget: u64,
    exhausted: bool,
}

impl CliqueSearch<'_> {
    // Branches in ascending vertex order and only replaces the incumbent on a
    // strictly larger clique, so the first maximum found is the
    // lexicographically smallest one.
    fn expand(&mut self, candidates: BitSet) {
        let mut rest = candidates;
        while let Some(v) = rest.first() {
            self.nodes += 1;
            if self.nodes > self.budget {
                self.exhausted = true;
                return;
            }
            if self.current.len() + rest.count() <= self.best.len()
                || self.current.len() + greedy_color_bound(self.rows, &rest) <= self.best.len()
            {
                return;
            }
            rest.remove(v);
            let mut next = rest.clone();
            next.intersect_with(&self.rows[v]);
            self.current.push(v);
            if self.current.len() > self.best.len() {
                self.best = self.current.clone();
            }
            self.expand(next);
            self.current.pop();
            if self.exhausted {
                return;
            }
        }
    }
}

/// Clique number `ω(g)` with a witness clique, by branch and bound.
pub fn clique_number(g: &Graph, budget: u64) -> BoundReport {
    let rows = g.bit_rows();
    let mut all = BitSet::new(g.vertex_count());
    for v in 0..g.vertex_count() {
        all.insert(v);
    }
    let mut search = CliqueSearch {
        rows: &rows,
        best: Vec::new(),
        current: Vec::new(),
        nodes: 0,
        budget,
        exhausted: false,
    };
    search.expand(all);
    BoundReport {
        value: search.best.len(),
        kind: BoundKind::Clique,
        certificate: VertexSet::new(search.best),
        exact: !search.exhausted,
    }
}

/// `min(r, Δ) + 1`: a vertex of maximum degree sees `min(r, Δ)` colors
/// among its neighbors, none equal to its own.
pub fn basic_lower_bound(g: &Graph, r: usize) -> Result<BoundReport> {
    if g.edge_count() == 0 {
        return Err(Error::Parameter(
            "degree bound needs at least one edge".into(),
        ));
    }
    let delta = g.max_degree()?;
    Ok(BoundReport {
        value: r.min(delta) + 1,
        kind: BoundKind::BasicRDelta,
        certificate: VertexSet::default(),
        exact: true,
    })
}

struct VsetSearch<'a> {
    rows: &'a [BitSet],
    candidates: Vec<usize>,
    best: Vec<usize>,
    included: Vec<usize>,
    nodes: u64,
    budget: u64,
    exhausted: bool,
}

impl VsetSearch<'_> {
    fn pair_ok(&self, a: usize, b: usize, pool: &BitSet) -> bool {
        self.rows[a].contains(b) || pool.meets_both(&self.rows[a], &self.rows[b])
    }

    fn all_pairs_ok(&self, pool: &BitSet) -> bool {
        let inc = &self.included;
        inc.iter()
            .enumerate()
            .all(|(i, &a)| inc[i + 1..].iter().all(|&b| self.pair_ok(a, b, pool)))
    }

    /// `included` is the chosen prefix, `allowed` holds included plus every
    /// still-undecided candidate; `from` indexes the next undecided candidate.
    fn search(&mut self, from: usize, allowed: &mut BitSet, included_bits: &mut BitSet) {
        self.nodes += 1;
        if self.nodes > self.budget {
            self.exhausted = true;
            return;
        }
        let mut dropped = Vec::new();
        let mut open = Vec::new();
        for &x in &self.candidates[from..] {
            if !allowed.contains(x) {
                continue;
            }
            if self.included.iter().all(|&y| self.pair_ok(x, y, allowed)) {
                open.push(x);
            } else {
                dropped.push(x);
            }
        }
        for &x in &dropped {
            allowed.remove(x);
        }
        let viable = self.all_pairs_ok(allowed);
        if viable && self.included.len() + open.len() > self.best.len() {
            if let Some(&x) = open.first() {
                let next = self
                    .candidates
                    .iter()
                    .position(|&c| c == x)
                    .expect("candidate")
                    + 1;

                self.included.push(x);
                included_bits.insert(x);
                if self.included.len() > self.best.len() && self.all_pairs_ok(included_bits) {
                    self.best = self.included.clone();
                }
                self.search(next, allowed, included_bits);
                included_bits.remove(x);
                self.included.pop();

                if !self.exhausted {
                    allowed.remove(x);
                    self.search(next, allowed, included_bits);
                    allowed.insert(x);
                }
            }
        }
        for &x in &dropped {
            allowed.insert(x);
        }
    }
}

/// Largest Vset-d2r at level `r` found within `budget` search nodes.
/// Ties resolve to the lexicographically smallest set.
pub fn max_vset_d2r(g: &Graph, r: usize, budget: u64) -> BoundReport {
    let rows = g.bit_rows();
    let candidates: Vec<usize> = (0..g.vertex_count())
        .filter(|&v| g.neighbors(v).len() <= r)
        .collect();
    let mut allowed = BitSet::new(g.vertex_count());
    for &v in &candidates {
        allowed.insert(v);
    }
    let mut search = VsetSearch {
        rows: &rows,
        candidates,
        best: Vec::new(),
        included: Vec::new(),
        nodes: 0,
        budget,
        exhausted: false,
    };
    let mut included_bits = BitSet::new(g.vertex_count());
    search.search(0, &mut allowed, &mut included_bits);
    BoundReport {
        value: search.best.len(),
        kind: BoundKind::VsetD2r,
        certificate: VertexSet::new(search.best),
        exact: !search.exhausted,
    }
}

/// The largest of the three bounds. Ties prefer clique, then Vset-d2r.
pub fn best_lower_bound(g: &Graph, r: usize, budget: u64) -> Result<BoundReport> {
    if g.vertex_count() == 0 {
        return Err(Error::EmptyGraph);
    }
    let clique = clique_number(g, budget);
    let vset = max_vset_d2r(g, r, budget);
    let exact = clique.exact && vset.exact;
    let mut best = clique;
    if vset.value > best.value {
        best = vset;
    }
    if g.edge_count() > 0 {
        let basic = basic_lower_bound(g, r)?;
        if basic.value > best.value {
            best = basic;
        }
    }
    best.exact = exact;
    Ok(best)
}
