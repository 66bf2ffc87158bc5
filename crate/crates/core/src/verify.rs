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

//! Checkers for proper colorings (C1), neighborhood diversity (C2), the
//! structural condition C3, and Vset-d2r certificates.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// A total vertex coloring with colors in `1..=k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Coloring {
    /// Declared palette size.
    pub k: usize,
    /// `colors[v]` is the color of internal vertex `v`.
    pub colors: Vec<usize>,
}

impl Coloring {
    pub fn new(k: usize, colors: Vec<usize>) -> Result<Self> {
        let c = Coloring { k, colors };
        c.validate()?;
        Ok(c)
    }

    /// Palette sized to the largest color present.
    pub fn from_colors(colors: Vec<usize>) -> Result<Self> {
        let k = colors.iter().copied().max().unwrap_or(0);
        Coloring::new(k, colors)
    }

    /// Fails on colors outside `1..=k`.
    pub fn validate(&self) -> Result<()> {
        match self.colors.iter().position(|&c| c == 0 || c > self.k) {
            Some(v) => Err(Error::Input(format!(
                "vertex {v} has color {} outside 1..={}",
                self.colors[v], self.k
            ))),
            None => Ok(()),
        }
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn color(&self, v: usize) -> usize {
        self.colors[v]
    }

    pub fn colors_used(&self) -> usize {
        self.colors.iter().collect::<BTreeSet<_>>().len()
    }

    /// Maps the used colors onto `1..=colors_used`, preserving their order,
    /// and shrinks the palette to match.
    pub fn renumbered(&self) -> Coloring {
        let used: Vec<usize> = self
            .colors
            .iter()
            .copied()
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        let colors = self
            .colors
            .iter()
            .map(|c| used.binary_search(c).expect("present") + 1)
            .collect();
        Coloring {
            k: used.len(),
            colors,
        }
    }

    /// Distinct colors on `set`, i.e. `|c(S)|`.
    pub fn distinct_on(&self, set: impl IntoIterator<Item = usize>) -> usize {
        set.into_iter()
            .map(|v| self.colors[v])
            .collect::<BTreeSet<_>>()
            .len()
    }
}

/// One vertex failing the neighborhood-diversity condition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct C2Violation {
    pub vertex: usize,
    /// `|c(N(v))|`
    pub seen: usize,
    /// `min(d(v), r)`
    pub required: usize,
}

/// Every violation of C1 and C2 found in a coloring, sorted by id.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct ConditionalReport {
    /// Level the C2 part was checked at; `None` for a C1-only report.
    pub r: Option<usize>,
    pub c1_violations: Vec<(usize, usize)>,
    pub c2_violations: Vec<C2Violation>,
    /// True iff every color of `1..=k` is used.
    pub surjective: bool,
    pub colors_used: usize,
}

impl ConditionalReport {
    /// True iff the coloring is a conditional `(colors_used, r)`-coloring
    /// (after renumbering if it is not surjective).
    pub fn is_valid(&self) -> bool {
        self.c1_violations.is_empty() && self.c2_violations.is_empty()
    }
}

fn check_total(g: &Graph, c: &Coloring) -> Result<()> {
    if c.len() != g.vertex_count() {
        return Err(Error::Input(format!(
            "coloring has {} entries, graph has {} vertices",
            c.len(),
            g.vertex_count()
        )));
    }
    c.validate()
}

fn c1_violations(g: &Graph, c: &Coloring) -> Vec<(usize, usize)> {
    g.edges()
        .filter(|&(u, v)| c.color(u) == c.color(v))
        .collect()
}

fn base_report(g: &Graph, c: &Coloring, r: Option<usize>) -> ConditionalReport {
    let colors_used = c.colors_used();
    ConditionalReport {
        r,
        c1_violations: c1_violations(g, c),
        c2_violations: Vec::new(),
        surjective: colors_used == c.k,
        colors_used,
    }
}

/// Lists the monochromatic edges (C1).
pub fn check_proper(g: &Graph, c: &Coloring) -> Result<ConditionalReport> {
    check_total(g, c)?;
    Ok(base_report(g, c, None))
}

/// Full C1 + C2 report at level `r`.
pub fn check_conditional(g: &Graph, c: &Coloring, r: usize) -> Result<ConditionalReport> {
    if r < 1 {
        return Err(Error::Parameter("r must be at least 1".into()));
    }
    check_total(g, c)?;
    let mut report = base_report(g, c, Some(r));
    let mut seen_colors = vec![false; c.k + 1];
    for v in 0..g.vertex_count() {
        let nbrs = g.neighbors(v);
        let mut seen = 0;
        for &u in nbrs {
            let col = c.color(u);
            if !seen_colors[col] {
                seen_colors[col] = true;
                seen += 1;
            }
        }
        for &u in nbrs {
            seen_colors[c.color(u)] = false;
        }
        let required = nbrs.len().min(r);
        if seen < required {
            report.c2_violations.push(C2Violation {
                vertex: v,
                seen,
                required,
            });
        }
    }
    Ok(report)
}

/// Result of checking C3: every edge `uv` has a common neighbor `w` with
/// `d(w) <= r`.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct C3Check {
    /// `((u, v), w)` for each edge that has a witness (smallest `w`).
    pub witnesses: Vec<((usize, usize), usize)>,
    /// Edges with no witness.
    pub missing: Vec<(usize, usize)>,
}

impl C3Check {
    pub fn holds(&self) -> bool {
        self.missing.is_empty()
    }
}

pub fn check_c3(g: &Graph, r: usize) -> C3Check {
    let mut check = C3Check {
        witnesses: Vec::new(),
        missing: Vec::new(),
    };
    for (u, v) in g.edges() {
        let (a, b) = (g.neighbors(u), g.neighbors(v));
        let witness = a
            .iter()
            .copied()
            .filter(|w| b.binary_search(w).is_ok())
            .find(|&w| g.neighbors(w).len() <= r);
        match witness {
            Some(w) => check.witnesses.push(((u, v), w)),
            None => check.missing.push((u, v)),
        }
    }
    check
}

/// True iff `s` is a Vset-d2r at level `r`: every member has degree at most
/// `r`, and every pair of members is adjacent or has a common neighbor that
/// is itself a member.
pub fn check_vset_d2r(g: &Graph, s: &VertexSet, r: usize) -> Result<bool> {
    s.check_within(g.vertex_count())?;
    if s.iter().any(|u| g.neighbors(u).len() > r) {
        return Ok(false);
    }
    let members = s.as_slice();
    for (i, &u1) in members.iter().enumerate() {
        for &u2 in &members[i + 1..] {
            if g.has_edge(u1, u2) {
                continue;
            }
            let covered = members
                .iter()
                .any(|&u3| g.has_edge(u3, u1) && g.has_edge(u3, u2));
            if !covered {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Given C3 at level `r` and a coloring satisfying C2 at level `r`, the
/// coloring is proper. Returns whether C1 indeed holds.
pub fn lemma2_conclusion(g: &Graph, c: &Coloring, r: usize) -> Result<bool> {
    let c3 = check_c3(g, r);
    if !c3.holds() {
        let (u, v) = c3.missing[0];
        return Err(Error::Precondition(format!(
            "C3 fails at level {r}: edge ({u}, {v}) has no common neighbor of degree <= {r}"
        )));
    }
    let report = check_conditional(g, c, r)?;
    if let Some(bad) = report.c2_violations.first() {
        return Err(Error::Precondition(format!(
            "coloring violates C2 at vertex {} ({} < {})",
            bad.vertex, bad.seen, bad.required
        )));
    }
    Ok(report.c1_violations.is_empty())
}
