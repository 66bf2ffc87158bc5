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

//! Exact `χ_r` by backtracking over colorings in saturation order.
//!
//! For a fixed palette size `k`, vertices are colored one at a time, always
//! picking the uncolored vertex that already sees the most distinct colors.
//! Each vertex keeps counters of the colors on its neighbors, so both
//! conditions are checked incrementally:
//!
//! * a color already on a neighbor is skipped (C1);
//! * a vertex is dead once the colors it sees plus the colors its uncolored
//!   neighbors could still add fall short of `min(d(v), r)` (C2).
//!
//! A new color is only ever opened as `max_used + 1`, which removes palette
//! permutations from the search. `χ_r` is then the first feasible `k` when
//! counting up from the best lower bound.

use alloc::vec;
use alloc::vec::Vec;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::bounds::{best_lower_bound, BoundReport, DEFAULT_BOUND_BUDGET};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::verify::Coloring;

/// Node budget used when the caller does not pick one.
pub const DEFAULT_SOLVER_BUDGET: u64 = 50_000_000;

/// Options for the fixed-`k` search.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct SearchConfig {
    /// When false only C2 is enforced; used to sample C2-only assignments.
    pub skip_proper: bool,
    /// Shuffles color order and vertex tie-breaks; `None` is the
    /// deterministic ascending order.
    pub seed: Option<u64>,
}

/// Outcome of the fixed-`k` decision procedure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Decision {
    Found(Coloring),
    /// The search space was exhausted: no such coloring exists.
    Infeasible,
    /// The node budget ran out first.
    Unknown,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decided {
    pub decision: Decision,
    pub nodes: u64,
}

/// `χ_r` together with the evidence for it.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct SolveResult {
    /// Exact when `proven`; otherwise the best upper bound found.
    pub chi_r: usize,
    /// A conditional `(chi_r, r)`-coloring using every color once renumbered.
    pub witness: Coloring,
    pub nodes_expanded: u64,
    pub lower_bound_used: BoundReport,
    pub proven: bool,
    /// `[lower, upper]`; collapses to `[chi_r, chi_r]` when proven.
    pub bracket: [usize; 2],
}

struct Search<'a> {
    g: &'a Graph,
    k: usize,
    required: Vec<usize>,
    proper: bool,
    colors: Vec<usize>,
    // seen[v * (k + 1) + c]: neighbors of v colored c
    seen: Vec<u32>,
    distinct: Vec<usize>,
    open_nbrs: Vec<usize>,
    priority: Vec<usize>,
    rng: Option<ChaCha8Rng>,
    nodes: u64,
    budget: u64,
    exhausted: bool,
}

impl<'a> Search<'a> {
    fn new(g: &'a Graph, k: usize, r: usize, budget: u64, config: &SearchConfig) -> Self {
        let n = g.vertex_count();
        let mut rng = config.seed.map(ChaCha8Rng::seed_from_u64);
        let mut priority: Vec<usize> = (0..n).collect();
        if let Some(rng) = rng.as_mut() {
            priority.shuffle(rng);
        }
        Search {
            g,
            k,
            required: g.degrees().map(|d| d.min(r)).collect(),
            proper: !config.skip_proper,
            colors: vec![0; n],
            seen: vec![0; n * (k + 1)],
            distinct: vec![0; n],
            open_nbrs: g.degrees().collect(),
            priority,
            rng,
            nodes: 0,
            budget,
            exhausted: false,
        }
    }

    fn seen(&self, v: usize, c: usize) -> u32 {
        self.seen[v * (self.k + 1) + c]
    }

    /// Whether `v` can still reach its C2 requirement.
    fn can_satisfy(&self, v: usize) -> bool {
        let mut fresh = self.k.saturating_sub(self.distinct[v]);
        if self.proper && self.colors[v] != 0 {
            fresh = fresh.saturating_sub(1);
        }
        self.distinct[v] + self.open_nbrs[v].min(fresh) >= self.required[v]
    }

    fn assign(&mut self, u: usize, c: usize) {
        self.colors[u] = c;
        let stride = self.k + 1;
        for &w in self.g.neighbors(u) {
            let slot = &mut self.seen[w * stride + c];
            *slot += 1;
            if *slot == 1 {
                self.distinct[w] += 1;
            }
            self.open_nbrs[w] -= 1;
        }
    }

    fn unassign(&mut self, u: usize) {
        let c = self.colors[u];
        self.colors[u] = 0;
        let stride = self.k + 1;
        for &w in self.g.neighbors(u) {
            let slot = &mut self.seen[w * stride + c];
            *slot -= 1;
            if *slot == 0 {
                self.distinct[w] -= 1;
            }
            self.open_nbrs[w] += 1;
        }
    }

    fn consistent_around(&self, u: usize) -> bool {
        if !self.can_satisfy(u) {
            return false;
        }
        self.g.neighbors(u).iter().all(|&w| {
            self.can_satisfy(w)
                && !(self.proper && self.colors[w] == 0 && self.distinct[w] >= self.k)
        })
    }

    fn pick_vertex(&self) -> Option<usize> {
        (0..self.colors.len())
            .filter(|&v| self.colors[v] == 0)
            .max_by_key(|&v| {
                (
                    self.distinct[v],
                    self.g.neighbors(v).len(),
                    usize::MAX - self.priority[v],
                )
            })
    }

    fn run(&mut self, max_used: usize) -> bool {
        let Some(u) = self.pick_vertex() else {
            return true;
        };
        let mut options: Vec<usize> = (1..=self.k.min(max_used + 1))
            .filter(|&c| !(self.proper && self.seen(u, c) > 0))
            .collect();
        if let Some(rng) = self.rng.as_mut() {
            options.shuffle(rng);
        }
        for c in options {
            self.nodes += 1;
            if self.nodes > self.budget {
                self.exhausted = true;
                return false;
            }
            self.assign(u, c);
            if self.consistent_around(u) && self.run(max_used.max(c)) {
                return true;
            }
            self.unassign(u);
            if self.exhausted {
                return false;
            }
        }
        false
    }
}

/// Searches for a coloring with at most `k` colors satisfying C2 at level
/// `r` (and C1 unless `config.skip_proper`).
pub fn find_coloring(
    g: &Graph,
    k: usize,
    r: usize,
    budget: u64,
    config: &SearchConfig,
) -> Result<Decided> {
    if k < 1 || r < 1 {
        return Err(Error::Parameter("k and r must be at least 1".into()));
    }
    let n = g.vertex_count();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    let mut search = Search::new(g, k, r, budget, config);
    let palette_short = (0..n).any(|v| {
        let cap = if search.proper { k - 1 } else { k };
        search.required[v] > cap
    });
    let found = !palette_short && search.run(0);
    let decision = if found {
        Decision::Found(Coloring::new(k, search.colors.clone())?.renumbered())
    } else if search.exhausted {
        Decision::Unknown
    } else {
        Decision::Infeasible
    };
    Ok(Decided {
        decision,
        nodes: search.nodes,
    })
}

/// Decision form: a conditional coloring with at most `k` colors, if any.
pub fn exists_conditional_coloring(g: &Graph, k: usize, r: usize, budget: u64) -> Result<Decided> {
    find_coloring(g, k, r, budget, &SearchConfig::default())
}

/// Exact `χ_r(g)` within `budget` search nodes.
pub fn chi_r_exact(g: &Graph, r: usize, budget: u64) -> Result<SolveResult> {
    if r < 1 {
        return Err(Error::Parameter("r must be at least 1".into()));
    }
    let n = g.vertex_count();
    let delta = g.max_degree()?;
    let level = r.min(delta.max(1));
    let bound = best_lower_bound(g, level, budget.min(DEFAULT_BOUND_BUDGET))?;

    let mut nodes = 0;
    let mut proven = true;
    let mut low = bound.value;
    for k in bound.value..n {
        let decided = exists_conditional_coloring(g, k, level, budget.saturating_sub(nodes))?;
        nodes += decided.nodes;
        match decided.decision {
            Decision::Found(witness) => {
                return Ok(SolveResult {
                    chi_r: witness.k,
                    witness,
                    nodes_expanded: nodes,
                    lower_bound_used: bound,
                    proven,
                    bracket: [if proven { k } else { low }, k],
                });
            }
            Decision::Infeasible => {
                if proven {
                    low = k + 1;
                }
            }
            Decision::Unknown => {
                proven = false;
                break;
            }
        }
    }
    // All-distinct colors always work: every vertex sees d(v) colors.
    let witness = Coloring::new(n, (1..=n).collect())?;
    Ok(SolveResult {
        chi_r: n,
        witness,
        nodes_expanded: nodes,
        lower_bound_used: bound,
        proven,
        bracket: [if proven { n } else { low }, n],
    })
}
