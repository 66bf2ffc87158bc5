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

//! Closed-form values of `χ_r` and the explicit colorings behind them.
//!
//! Each constructor evaluates its coloring formula exactly as stated over
//! the `v_i` numbering of [`role_indexing`]; nothing is adjusted when a
//! formula misbehaves for some parameter. Run the output through
//! [`check_conditional`] (or [`Construction::verify`]) to certify it.
//!
//! | proposition | target            | cases                                   |
//! |-------------|-------------------|-----------------------------------------|
//! | 1           | `Wd(k,n)`         | `2 <= r <= k-1`; `r >= k`               |
//! | 2           | `L(Wd(k,n))`      | `r = Δ`                                 |
//! | 3           | `L(F_n)`          | `r < Δ`; `r = Δ`                        |
//! | 4           | `M(K_{n1..nk})`   | `r = Δ`                                 |
//! | 5           | `M(C_n)`, `n >= 4`| `r = 2` (by parity of `n`); `r = 3`     |
//! | 6           | `M(F_n)`          | `r <= 2n`; `r = 2n+1`; `r = Δ = 2n+2`   |
//! | 7           | `M(K_{n1,n2})`    | `r <= n2`; `r = n2+1`                   |

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::families::{role_indexing, windmill, Convention, Family, Instance};
use crate::verify::{check_conditional, Coloring, ConditionalReport};

/// The `r` values a closed-form claim covers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RSet {
    Exactly(usize),
    Between(usize, usize),
    AtMost(usize),
    AtLeast(usize),
}

impl RSet {
    pub fn contains(&self, r: usize) -> bool {
        match *self {
            RSet::Exactly(x) => r == x,
            RSet::Between(lo, hi) => lo <= r && r <= hi,
            RSet::AtMost(hi) => r >= 1 && r <= hi,
            RSet::AtLeast(lo) => r >= lo,
        }
    }

    /// Largest finite member.
    pub fn top(&self) -> usize {
        match *self {
            RSet::Exactly(x) | RSet::Between(_, x) | RSet::AtMost(x) | RSet::AtLeast(x) => x,
        }
    }
}

impl fmt::Display for RSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            RSet::Exactly(x) => write!(f, "r={x}"),
            RSet::Between(lo, hi) => write!(f, "{lo}<=r<={hi}"),
            RSet::AtMost(hi) => write!(f, "r<={hi}"),
            RSet::AtLeast(lo) => write!(f, "r>={lo}"),
        }
    }
}

/// A coloring together with the value it is claimed to achieve.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClaimedColoring {
    pub coloring: Coloring,
    pub claimed_k: usize,
    pub r_set: RSet,
    pub proposition: u8,
    pub case: &'static str,
}

/// A claimed coloring together with the graph (and numbering) it colors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Construction {
    pub instance: Instance,
    pub claim: ClaimedColoring,
}

impl Construction {
    /// Full C1/C2 report at level `r`.
    pub fn verify(&self, r: usize) -> Result<ConditionalReport> {
        check_conditional(&self.instance.graph, &self.claim.coloring, r)
    }

    /// True iff the coloring is valid at every level its claim covers
    /// (levels above Δ collapse to Δ) and uses exactly `claimed_k` colors.
    pub fn certified(&self) -> Result<bool> {
        let delta = self.instance.graph.max_degree()?.max(1);
        let r_set = self.claim.r_set;
        for r in 1..=delta {
            let covered = r_set.contains(r) || (r == delta && r_set.top() >= delta);
            if covered && !self.verify(r)?.is_valid() {
                return Ok(false);
            }
        }
        Ok(self.claim.coloring.colors_used() == self.claim.claimed_k)
    }

    /// Color of `v_i`.
    pub fn color_of(&self, i: usize) -> usize {
        self.claim
            .coloring
            .color(self.instance.provenance.vertex(i))
    }
}

fn build(
    instance: Instance,
    claimed_k: usize,
    r_set: RSet,
    proposition: u8,
    case: &'static str,
    formula: impl Fn(usize) -> usize,
) -> Result<Construction> {
    let n = instance.graph.vertex_count();
    let mut colors = alloc::vec![0; n];
    for i in 1..=n {
        colors[instance.provenance.vertex(i)] = formula(i);
    }
    // keep out-of-palette formula values visible instead of rejecting them
    let k = colors.iter().copied().max().unwrap_or(0).max(claimed_k);
    let coloring = Coloring::new(k, colors)?;
    Ok(Construction {
        instance,
        claim: ClaimedColoring {
            coloring,
            claimed_k,
            r_set,
            proposition,
            case,
        },
    })
}

fn binom2(x: usize) -> usize {
    x * x.saturating_sub(1) / 2
}

/// Windmill value: `k` for `2 <= r <= k-1`, `min(r, Δ) + 1` for `r >= k`,
/// with a concrete witness coloring.
pub fn chi_windmill(k: usize, n: usize, r: usize) -> Result<Construction> {
    if k < 3 || n < 1 {
        return Err(Error::Parameter(format!(
            "windmill value needs k >= 3, n >= 1 (got k={k}, n={n})"
        )));
    }
    if r < 2 {
        return Err(Error::Parameter(
            "the windmill cases start at r = 2; use the solver for r = 1".into(),
        ));
    }
    let instance = windmill(k, n)?;
    let blade = k - 1;
    let delta = n * blade;
    if r < k {
        // every blade reuses colors 2..=k around center color 1
        return build(instance, k, RSet::Between(2, k - 1), 1, "2<=r<=k-1", |i| {
            if i == 1 {
                1
            } else {
                2 + (i - 2) % blade
            }
        });
    }
    let value = r.min(delta) + 1;
    let r_set = if r >= delta {
        RSet::AtLeast(delta)
    } else {
        RSet::Exactly(r)
    };
    // non-center vertices cycle through 2..=value so the center sees them all
    build(instance, value, r_set, 1, "r>=k", move |i| {
        if i == 1 {
            1
        } else {
            2 + (i - 2) % (value - 1)
        }
    })
}

/// Line graph of `Wd(k, n)` at `r = Δ` with `z = n(k-1) + C(k-1, 2)` colors.
pub fn color_line_windmill_delta(k: usize, n: usize) -> Result<Construction> {
    if k < 3 || n < 1 {
        return Err(Error::Parameter(format!(
            "line windmill coloring needs k >= 3, n >= 1 (got k={k}, n={n})"
        )));
    }
    let instance = role_indexing(&Convention::LineWindmill { k, n })?;
    let delta = instance.graph.max_degree()?;
    let inner = binom2(k - 1);
    let z = n * (k - 1) + inner;
    build(instance, z, RSet::AtLeast(delta), 2, "r=Δ", move |i| {
        if i <= z {
            i
        } else {
            i % inner + n * (k - 1) + 1
        }
    })
}

/// Line graph of `F_n`: `2n` colors for `r < Δ`, `2n + 1` at `r = Δ`.
pub fn color_line_friendship(n: usize, r: usize) -> Result<Construction> {
    if n < 1 || r < 1 {
        return Err(Error::Parameter(format!(
            "need n >= 1 and r >= 1 (got n={n}, r={r})"
        )));
    }
    let delta = 2 * n;
    if r >= delta {
        let mut c = color_line_windmill_delta(3, n)?;
        c.claim.proposition = 3;
        c.claim.case = "r=Δ";
        return Ok(c);
    }
    if n < 2 {
        return Err(Error::Parameter(
            "the r < Δ coloring of L(F_n) needs n >= 2 (L(F_1) is a triangle)".into(),
        ));
    }
    let instance = role_indexing(&Convention::LineFriendship { n })?;
    build(
        instance,
        2 * n,
        RSet::AtMost(delta - 1),
        3,
        "r<Δ",
        move |i| {
            if i <= 2 * n {
                i
            } else if i < 3 * n {
                2 * n
            } else {
                1
            }
        },
    )
}

/// Middle graph of `K_{n_1..n_k}` at `r = Δ` with `k + l` colors.
pub fn color_middle_multipartite_delta(sizes: &[usize]) -> Result<Construction> {
    if sizes.len() < 2 {
        return Err(Error::Parameter("need at least two parts".into()));
    }
    let instance = role_indexing(&Convention::MiddleMultipartite(sizes.to_vec()))?;
    let mut parts = sizes.to_vec();
    parts.sort_unstable();
    let total: usize = parts.iter().sum();
    let l: usize = parts.iter().map(|&p| p * (total - p)).sum::<usize>() / 2;
    let delta = instance.graph.max_degree()?;
    let prefix: Vec<usize> = parts
        .iter()
        .scan(0, |acc, &p| {
            *acc += p;
            Some(*acc)
        })
        .collect();
    build(
        instance,
        parts.len() + l,
        RSet::AtLeast(delta),
        4,
        "r=Δ",
        move |i| {
            if i <= l {
                i
            } else {
                // p with 1 + Σ_{j<p} n_j <= i - l <= Σ_{j<=p} n_j
                let p = prefix
                    .iter()
                    .position(|&end| i - l <= end)
                    .expect("index within parts")
                    + 1;
                l + p
            }
        },
    )
}

/// Middle graph of `C_n`, `n >= 4`: 3 colors at `r = 2`, 4 at `r = 3`.
pub fn color_middle_cycle(n: usize, r: usize) -> Result<Construction> {
    if n < 4 {
        return Err(Error::Parameter(format!(
            "cycle colorings need n >= 4 (got {n}); use the solver for smaller cycles"
        )));
    }
    let instance = role_indexing(&Convention::MiddleCycle { n })?;
    match r {
        2 if n.is_multiple_of(2) => {
            build(instance, 3, RSet::Exactly(2), 5, "r=2, n even", move |i| {
                if i <= n {
                    1
                } else if i % 2 == 1 {
                    2
                } else {
                    3
                }
            })
        }
        2 => build(instance, 3, RSet::Exactly(2), 5, "r=2, n odd", move |i| {
            if i == 1 || (i > n && i % 2 == 1) {
                1
            } else if i == 2 * n || (2..=n - 1).contains(&i) {
                2
            } else {
                3
            }
        }),
        3 => build(instance, 4, RSet::Exactly(3), 5, "r=3", move |i| {
            if i > n && (i - n).is_multiple_of(2) {
                1
            } else if i <= n && i % 2 == 1 {
                2
            } else if i == n + 1 || ((4..=n).contains(&i) && i % 2 == 0) {
                3
            } else {
                4
            }
        }),
        _ => Err(Error::Unsupported(format!(
            "middle cycle colorings cover r = 2 and r = 3 only (got r = {r})"
        ))),
    }
}

fn middle_friendship_low(n: usize, i: usize) -> usize {
    if i <= 2 * n + 1 {
        i
    } else if i == 2 * n + 2 {
        3
    } else if i == 2 * n + 3 {
        4
    } else if i <= 4 * n + 1 {
        if (i - 2 * n).is_multiple_of(2) {
            1
        } else {
            2
        }
    } else {
        2 * n + 1
    }
}

/// Middle graph of `F_n`: `2n+1` colors for `r <= 2n`, `2n+2` at
/// `r = 2n+1`, `2n+4` at `r = Δ = 2n+2`.
pub fn color_middle_friendship(n: usize, r: usize) -> Result<Construction> {
    if n < 1 || r < 1 {
        return Err(Error::Parameter(format!(
            "need n >= 1 and r >= 1 (got n={n}, r={r})"
        )));
    }
    let instance = role_indexing(&Convention::MiddleFriendship { n })?;
    if r <= 2 * n {
        build(
            instance,
            2 * n + 1,
            RSet::AtMost(2 * n),
            6,
            "r<=2n",
            move |i| middle_friendship_low(n, i),
        )
    } else if r == 2 * n + 1 {
        build(
            instance,
            2 * n + 2,
            RSet::Exactly(2 * n + 1),
            6,
            "r=2n+1",
            move |i| {
                if i <= 4 * n + 1 {
                    middle_friendship_low(n, i)
                } else {
                    2 * n + 2
                }
            },
        )
    } else {
        build(
            instance,
            2 * n + 4,
            RSet::AtLeast(2 * n + 2),
            6,
            "r=Δ",
            move |i| {
                if i <= 2 * n + 3 {
                    i
                } else if i <= 4 * n + 1 && (i - 2 * n).is_multiple_of(2) {
                    2 * n + 3
                } else if i <= 4 * n + 2 {
                    // odd (i - 2n) inside the range, or i = 4n+2
                    2 * n + 4
                } else {
                    2 * n + 2
                }
            },
        )
    }
}

/// Middle graph of `K_{n1,n2}` (swapped so `n1 <= n2`): `n2+1` colors for
/// `r <= n2`, `n2+2` at `r = n2+1`.
pub fn color_middle_bipartite(n1: usize, n2: usize, r: usize) -> Result<Construction> {
    let (n1, n2) = (n1.min(n2), n1.max(n2));
    if n1 < 1 || r < 1 {
        return Err(Error::Parameter(format!(
            "need n1, n2, r >= 1 (got {n1}, {n2}, {r})"
        )));
    }
    if r > n2 + 1 {
        return Err(Error::Unsupported(format!(
            "bipartite middle colorings cover r <= n2 + 1 = {} (got r = {r}); use the solver",
            n2 + 1
        )));
    }
    let instance = role_indexing(&Convention::MiddleBipartite { n1, n2 })?;
    let n = n1 + n2;
    let low = move |i: usize| {
        if i <= n {
            n2 + 1
        } else {
            1 + ((i - 1 - n) / n2 + (i - n)) % n2
        }
    };
    if r <= n2 {
        build(instance, n2 + 1, RSet::AtMost(n2), 7, "r<=n2", low)
    } else {
        build(
            instance,
            n2 + 2,
            RSet::Exactly(n2 + 1),
            7,
            "r=n2+1",
            move |i| {
                if i <= n1 {
                    n2 + 2
                } else {
                    low(i)
                }
            },
        )
    }
}

/// A closed-form value for one `(family, r)` pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Prediction {
    pub value: usize,
    pub proposition: u8,
    pub case: &'static str,
}

/// Every closed form that covers `(family, r)`; empty when none does.
pub fn predictions(family: &Family, r: usize) -> Result<Vec<Prediction>> {
    let mut out = Vec::new();
    if r < 1 {
        return Ok(out);
    }
    let mut push = |value, proposition, case| {
        out.push(Prediction {
            value,
            proposition,
            case,
        })
    };
    match family {
        Family::Windmill { .. } | Family::Friendship { .. } => {
            let (k, n) = family.as_windmill().expect("windmill family");
            if k >= 3 && n >= 1 && r >= 2 {
                if r < k {
                    push(k, 1, "2<=r<=k-1");
                } else {
                    push(r.min(n * (k - 1)) + 1, 1, "r>=k");
                }
            }
        }
        Family::Line(inner) => {
            if let Some((k, n)) = inner.as_windmill() {
                if k >= 3 && n >= 1 {
                    let delta = n * (k - 1) + k - 3;
                    if r >= delta {
                        push(n * (k - 1) + binom2(k - 1), 2, "r=Δ");
                    }
                    if k == 3 {
                        if r >= delta {
                            push(2 * n + 1, 3, "r=Δ");
                        } else if n >= 2 {
                            push(2 * n, 3, "r<Δ");
                        }
                    }
                }
            }
        }
        Family::Middle(inner) => match &**inner {
            Family::Multipartite(sizes) if sizes.len() >= 2 && sizes.iter().all(|&s| s >= 1) => {
                let total: usize = sizes.iter().sum();
                let l: usize = sizes.iter().map(|&p| p * (total - p)).sum::<usize>() / 2;
                let delta = crate::families::complete_multipartite(sizes)
                    .and_then(|b| crate::families::middle_graph(&b.graph))?
                    .graph
                    .max_degree()?;
                if r >= delta {
                    push(sizes.len() + l, 4, "r=Δ");
                }
                if sizes.len() == 2 {
                    let n2 = sizes[0].max(sizes[1]);
                    if r <= n2 {
                        push(n2 + 1, 7, "r<=n2");
                    } else if r == n2 + 1 {
                        push(n2 + 2, 7, "r=n2+1");
                    }
                }
            }
            Family::Cycle { n } if *n >= 4 => match r {
                2 => push(3, 5, "r=2"),
                3 => push(4, 5, "r=3"),
                _ => {}
            },
            other => {
                if let Some((3, n)) = other.as_windmill() {
                    if n >= 1 {
                        if r <= 2 * n {
                            push(2 * n + 1, 6, "r<=2n");
                        } else if r == 2 * n + 1 {
                            push(2 * n + 2, 6, "r=2n+1");
                        } else {
                            push(2 * n + 4, 6, "r=Δ");
                        }
                    }
                }
            }
        },
        _ => {}
    }
    Ok(out)
}

/// The closed-form `χ_r` for `(family, r)`, or `None` outside every case.
pub fn predicted_chi_r(family: &Family, r: usize) -> Result<Option<usize>> {
    Ok(predictions(family, r)?.first().map(|p| p.value))
}

/// Explicit coloring for `(family, r)` from whichever construction covers it.
pub fn construct(family: &Family, r: usize) -> Result<Construction> {
    let unsupported =
        |hint: String| Err(Error::Unsupported(format!("{family} at r = {r}: {hint}")));
    match family {
        Family::Windmill { .. } | Family::Friendship { .. } => {
            let (k, n) = family.as_windmill().expect("windmill family");
            chi_windmill(k, n, r)
        }
        Family::Line(inner) => match inner.as_windmill() {
            Some((3, n)) => color_line_friendship(n, r),
            Some((k, n)) => {
                let delta = n * (k - 1) + k - 3;
                if r >= delta {
                    color_line_windmill_delta(k, n)
                } else {
                    unsupported(format!("proposition 2 covers only r = Δ = {delta}"))
                }
            }
            None => unsupported(String::from(
                "line graphs are covered for windmills only (propositions 2 and 3)",
            )),
        },
        Family::Middle(inner) => match &**inner {
            Family::Multipartite(sizes) if sizes.len() == 2 && r <= sizes[0].max(sizes[1]) + 1 => {
                color_middle_bipartite(sizes[0], sizes[1], r)
            }
            Family::Multipartite(sizes) => {
                let c = color_middle_multipartite_delta(sizes)?;
                let delta = c.instance.graph.max_degree()?;
                if r >= delta {
                    Ok(c)
                } else {
                    unsupported(format!("proposition 4 covers only r = Δ = {delta}"))
                }
            }
            Family::Cycle { n } => match r {
                2 | 3 => color_middle_cycle(*n, r),
                _ => unsupported(String::from("proposition 5 covers only r = 2 and r = 3")),
            },
            other => match other.as_windmill() {
                Some((3, n)) => color_middle_friendship(n, r),
                _ => unsupported(String::from(
                    "middle graphs are covered for K_{n1..nk}, C_n and F_n (propositions 4-7)",
                )),
            },
        },
        _ => unsupported(String::from(
            "no closed form; the nearest is proposition 1 (windmills)",
        )),
    }
}
