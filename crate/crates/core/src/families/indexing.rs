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

//! The `v_i` numbering conventions used by the closed-form colorings.

use alloc::format;
use alloc::vec::Vec;

use super::{
    complete_multipartite, cycle, friendship, line_graph, middle_graph, windmill, Family, Instance,
    Origin,
};
use crate::error::{Error, Result};

/// A numbering convention attached to one target family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Convention {
    /// `L(Wd(k,n))`: `v_{(i-1)(k-1)+1} ..= v_{i(k-1)}` are the center edges
    /// of copy `i`, followed by the non-center edges copy by copy
    /// (lexicographic inside a copy).
    LineWindmill { k: usize, n: usize },
    /// `L(F_n)`: `v_{2i-1}, v_{2i}` center edges of copy `i`, `v_{2n+i}` its
    /// outer edge. Same order as `LineWindmill { k: 3, n }`.
    LineFriendship { n: usize },
    /// `M(K_{n_1..n_k})`: `v_1 ..= v_l` the edges, then the vertices part by part.
    MiddleMultipartite(Vec<usize>),
    /// `M(C_n)`: `v_1 ..= v_n` the cycle vertices, `v_{n+i}` the edge joining
    /// `v_i` and `v_{i mod n + 1}`.
    MiddleCycle { n: usize },
    /// `M(F_n)`: `v_{2i-1}, v_{2i}` center edges of copy `i`, `v_{2n+1}` the
    /// center, `v_{2(n+i)}, v_{2(n+i)+1}` the outer vertices of copy `i`,
    /// `v_{4n+i+1}` its outer edge.
    MiddleFriendship { n: usize },
    /// `M(K_{n_1,n_2})`, `n_1 <= n_2`: the first part, the second part, then
    /// `v_{n+(i-1)n_2+j}` the edge joining `v_i` and `v_{n_1+j}`.
    MiddleBipartite { n1: usize, n2: usize },
}

impl Convention {
    /// The convention of the given proposition (1-based) for a parsed family.
    pub fn for_family(family: &Family, proposition: u8) -> Result<Self> {
        let unsupported = || {
            Error::Parameter(format!(
                "no numbering convention for {family} under proposition {proposition}"
            ))
        };
        match (proposition, family) {
            (2, Family::Line(inner)) => inner
                .as_windmill()
                .map(|(k, n)| Convention::LineWindmill { k, n })
                .ok_or_else(unsupported),
            (3, Family::Line(inner)) => match inner.as_windmill() {
                Some((3, n)) => Ok(Convention::LineFriendship { n }),
                _ => Err(unsupported()),
            },
            (4, Family::Middle(inner)) => match &**inner {
                Family::Multipartite(sizes) => Ok(Convention::MiddleMultipartite(sizes.clone())),
                _ => Err(unsupported()),
            },
            (5, Family::Middle(inner)) => match **inner {
                Family::Cycle { n } => Ok(Convention::MiddleCycle { n }),
                _ => Err(unsupported()),
            },
            (6, Family::Middle(inner)) => match inner.as_windmill() {
                Some((3, n)) => Ok(Convention::MiddleFriendship { n }),
                _ => Err(unsupported()),
            },
            (7, Family::Middle(inner)) => match &**inner {
                Family::Multipartite(sizes) if sizes.len() == 2 => {
                    let (n1, n2) = (sizes[0].min(sizes[1]), sizes[0].max(sizes[1]));
                    Ok(Convention::MiddleBipartite { n1, n2 })
                }
                _ => Err(unsupported()),
            },
            _ => Err(unsupported()),
        }
    }
}

fn order_from_origins(inst: &Instance, order: &[Origin]) -> Result<Vec<usize>> {
    let table = inst.provenance.lookup_table();
    order
        .iter()
        .map(|o| {
            table.get(o).copied().ok_or_else(|| {
                Error::Input(format!("{o:?} is not a vertex of the transformed graph"))
            })
        })
        .collect()
}

fn edge(u: usize, v: usize) -> Origin {
    Origin::Edge(u.min(v), u.max(v))
}

/// Builds the target graph of a convention with its `v_i` numbering attached.
pub fn role_indexing(convention: &Convention) -> Result<Instance> {
    let (mut inst, order) = match *convention {
        Convention::LineWindmill { k, n } => {
            let base = windmill(k, n)?;
            let inst = line_graph(&base.graph)?;
            (inst, line_windmill_order(k, n))
        }
        Convention::LineFriendship { n } => {
            let base = friendship(n)?;
            let inst = line_graph(&base.graph)?;
            (inst, line_windmill_order(3, n))
        }
        Convention::MiddleMultipartite(ref sizes) => {
            let base = complete_multipartite(sizes)?;
            let inst = middle_graph(&base.graph)?;
            let mut order: Vec<Origin> = base.graph.edges().map(|(u, v)| edge(u, v)).collect();
            order.extend((0..base.graph.vertex_count()).map(Origin::Vertex));
            (inst, order)
        }
        Convention::MiddleCycle { n } => {
            let base = cycle(n)?;
            let inst = middle_graph(&base.graph)?;
            let mut order: Vec<Origin> = (0..n).map(Origin::Vertex).collect();
            order.extend((1..=n).map(|i| edge(i - 1, i % n)));
            (inst, order)
        }
        Convention::MiddleFriendship { n } => {
            let base = friendship(n)?;
            let inst = middle_graph(&base.graph)?;
            let mut order = Vec::with_capacity(5 * n + 1);
            for i in 1..=n {
                order.push(edge(0, 2 * i - 1));
                order.push(edge(0, 2 * i));
            }
            order.push(Origin::Vertex(0));
            for i in 1..=n {
                order.push(Origin::Vertex(2 * i - 1));
                order.push(Origin::Vertex(2 * i));
            }
            order.extend((1..=n).map(|i| edge(2 * i - 1, 2 * i)));
            (inst, order)
        }
        Convention::MiddleBipartite { n1, n2 } => {
            if n1 > n2 {
                return Err(Error::Parameter(format!(
                    "bipartite numbering needs n1 <= n2, got {n1} > {n2}"
                )));
            }
            let base = complete_multipartite(&[n1, n2])?;
            let inst = middle_graph(&base.graph)?;
            let mut order: Vec<Origin> = (0..n1 + n2).map(Origin::Vertex).collect();
            for a in 0..n1 {
                order.extend((0..n2).map(|j| edge(a, n1 + j)));
            }
            (inst, order)
        }
    };
    let ids = order_from_origins(&inst, &order)?;
    inst.provenance = inst.provenance.with_role_order(ids)?;
    Ok(inst)
}

fn line_windmill_order(k: usize, n: usize) -> Vec<Origin> {
    let blade = k - 1;
    let members = |i: usize| (1 + (i - 1) * blade)..=(i * blade);
    let mut order = Vec::new();
    for i in 1..=n {
        order.extend(members(i).map(|v| edge(0, v)));
    }
    for i in 1..=n {
        let vs: Vec<usize> = members(i).collect();
        for (a, &u) in vs.iter().enumerate() {
            order.extend(vs[a + 1..].iter().map(|&v| edge(u, v)));
        }
    }
    order
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn line_friendship_roles() {
        let inst = role_indexing(&Convention::LineFriendship { n: 2 }).unwrap();
        let p = &inst.provenance;
        for i in 1..=4 {
            assert!(matches!(p.origin(p.vertex(i)), Origin::Edge(0, _)));
        }
        assert_eq!(p.origin(p.vertex(5)), Origin::Edge(1, 2));
        assert_eq!(p.origin(p.vertex(6)), Origin::Edge(3, 4));
        assert!(inst.graph.is_clique(&[1, 2, 3, 4].map(|i| p.vertex(i))));
    }

    #[test]
    fn line_windmill_matches_friendship_at_k3() {
        let a = role_indexing(&Convention::LineWindmill { k: 3, n: 3 }).unwrap();
        let b = role_indexing(&Convention::LineFriendship { n: 3 }).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn line_windmill_copy_ranges() {
        let (k, n) = (4, 2);
        let inst = role_indexing(&Convention::LineWindmill { k, n }).unwrap();
        let p = &inst.provenance;
        // non-center edges of copy 2 occupy v_{n(k-1)+3+1} ..= v_{n(k-1)+6}
        for i in 10..=12 {
            let Origin::Edge(u, v) = p.origin(p.vertex(i)) else {
                panic!()
            };
            assert!(u >= 4 && v <= 6);
        }
    }

    #[test]
    fn middle_cycle_incidence() {
        for n in 4..=7 {
            let inst = role_indexing(&Convention::MiddleCycle { n }).unwrap();
            let p = &inst.provenance;
            for i in 1..=n {
                let e = p.vertex(n + i);
                assert!(inst.graph.has_edge(e, p.vertex(i)));
                assert!(inst.graph.has_edge(e, p.vertex(i % n + 1)));
                assert_eq!(p.origin(p.vertex(i)), Origin::Vertex(i - 1));
            }
        }
    }

    #[test]
    fn middle_friendship_roles() {
        let inst = role_indexing(&Convention::MiddleFriendship { n: 1 }).unwrap();
        let p = &inst.provenance;
        assert_eq!(p.origin(p.vertex(1)), Origin::Edge(0, 1));
        assert_eq!(p.origin(p.vertex(2)), Origin::Edge(0, 2));
        assert_eq!(p.origin(p.vertex(3)), Origin::Vertex(0));
        assert_eq!(p.origin(p.vertex(4)), Origin::Vertex(1));
        assert_eq!(p.origin(p.vertex(5)), Origin::Vertex(2));
        assert_eq!(p.origin(p.vertex(6)), Origin::Edge(1, 2));

        let inst = role_indexing(&Convention::MiddleFriendship { n: 3 }).unwrap();
        let p = &inst.provenance;
        let clique: Vec<usize> = (1..=7).map(|i| p.vertex(i)).collect();
        assert!(inst.graph.is_clique(&clique));
        assert_eq!(inst.graph.vertex_count(), 16);
    }

    #[test]
    fn middle_multipartite_edges_first() {
        let inst = role_indexing(&Convention::MiddleMultipartite(alloc::vec![1, 1, 2])).unwrap();
        let p = &inst.provenance;
        for i in 1..=5 {
            assert!(matches!(p.origin(p.vertex(i)), Origin::Edge(..)));
        }
        for i in 6..=9 {
            assert_eq!(p.origin(p.vertex(i)), Origin::Vertex(i - 6));
        }
    }

    #[test]
    fn middle_bipartite_edge_layout() {
        let (n1, n2) = (2, 3);
        let inst = role_indexing(&Convention::MiddleBipartite { n1, n2 }).unwrap();
        let p = &inst.provenance;
        let n = n1 + n2;
        for i in 1..=n1 {
            for j in 1..=n2 {
                let e = p.vertex(n + (i - 1) * n2 + j);
                assert_eq!(p.origin(e), Origin::Edge(i - 1, n1 + j - 1));
            }
        }
        assert!(role_indexing(&Convention::MiddleBipartite { n1: 3, n2: 2 }).is_err());
    }

    #[test]
    fn convention_lookup() {
        let f: Family = "M(kpart:3,1)".parse().unwrap();
        assert_eq!(
            Convention::for_family(&f, 7).unwrap(),
            Convention::MiddleBipartite { n1: 1, n2: 3 }
        );
        assert!(Convention::for_family(&f, 5).is_err());
        let f: Family = "L(wd:4,2)".parse().unwrap();
        assert!(Convention::for_family(&f, 3).is_err());
        assert_eq!(
            Convention::for_family(&f, 2).unwrap(),
            Convention::LineWindmill { k: 4, n: 2 }
        );
    }
}
