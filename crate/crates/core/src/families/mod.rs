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

//! Generators for the windmill, friendship, cycle and complete multipartite
//! families, plus the line-graph and middle-graph transforms.
//!
//! Every generator returns an [`Instance`]: the graph together with a
//! [`Provenance`] describing where each vertex came from and which `v_i`
//! role it plays under a fixed 1-based numbering.

mod indexing;
mod spec;

pub use indexing::{role_indexing, Convention};
pub use spec::Family;

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Where a vertex of a generated or transformed graph comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "snake_case"))]
pub enum Origin {
    /// A vertex of the source graph (for generators, the vertex itself).
    Vertex(usize),
    /// An edge `(u, v)`, `u < v`, of the source graph.
    Edge(usize, usize),
}

/// Shape of a generated graph, enough to recover blades, parts and sources.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "snake_case"))]
pub enum Layout {
    /// Center is vertex 0; blade `i` (1-based) holds `1+(i-1)(k-1) ..= i(k-1)`.
    Windmill {
        k: usize,
        n: usize,
    },
    Cycle {
        n: usize,
    },
    /// Part sizes in ascending order, parts on consecutive ids.
    /// `reordered` records that the caller's order was not ascending.
    Multipartite {
        parts: Vec<usize>,
        reordered: bool,
    },
    Line {
        source_vertices: usize,
        source_edges: usize,
    },
    Middle {
        source_vertices: usize,
        source_edges: usize,
    },
}

/// Vertex origins plus the 1-based `v_i` numbering of a graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Provenance {
    layout: Layout,
    origins: Vec<Origin>,
    // internal id -> 1-based index
    role_index: Vec<usize>,
    // (index - 1) -> internal id
    by_role: Vec<usize>,
}

impl Provenance {
    fn new(layout: Layout, origins: Vec<Origin>) -> Self {
        let n = origins.len();
        Provenance {
            layout,
            origins,
            role_index: (1..=n).collect(),
            by_role: (0..n).collect(),
        }
    }

    /// Re-numbers the `v_i` roles: `order[i - 1]` is the internal id of `v_i`.
    pub fn with_role_order(mut self, order: Vec<usize>) -> Result<Self> {
        let n = self.origins.len();
        if order.len() != n {
            return Err(Error::Input(format!(
                "numbering lists {} vertices, graph has {n}",
                order.len()
            )));
        }
        let mut index = alloc::vec![0; n];
        for (pos, &id) in order.iter().enumerate() {
            if id >= n || index[id] != 0 {
                return Err(Error::Input(format!(
                    "numbering is not a bijection (vertex {id})"
                )));
            }
            index[id] = pos + 1;
        }
        self.role_index = index;
        self.by_role = order;
        Ok(self)
    }

    pub fn layout(&self) -> &Layout {
        &self.layout
    }

    pub fn len(&self) -> usize {
        self.origins.len()
    }

    pub fn is_empty(&self) -> bool {
        self.origins.is_empty()
    }

    pub fn origin(&self, v: usize) -> Origin {
        self.origins[v]
    }

    pub fn origins(&self) -> &[Origin] {
        &self.origins
    }

    /// 1-based index of internal vertex `v`.
    pub fn role_index(&self, v: usize) -> usize {
        self.role_index[v]
    }

    /// Internal id of `v_i`, `1 <= i <= n`. Panics outside that range.
    pub fn vertex(&self, i: usize) -> usize {
        self.by_role[i - 1]
    }

    /// Internal ids ordered by 1-based index.
    pub fn role_order(&self) -> &[usize] {
        &self.by_role
    }

    /// Internal id of the vertex with the given origin.
    pub fn find(&self, origin: Origin) -> Option<usize> {
        self.origins.iter().position(|&o| o == origin)
    }

    fn lookup_table(&self) -> BTreeMap<Origin, usize> {
        self.origins
            .iter()
            .enumerate()
            .map(|(id, &o)| (o, id))
            .collect()
    }

    /// Blade (1-based) of a windmill vertex; `None` for the center or other layouts.
    pub fn blade_of(&self, v: usize) -> Option<usize> {
        match self.layout {
            Layout::Windmill { k, .. } if v > 0 && v < self.len() => Some((v - 1) / (k - 1) + 1),
            _ => None,
        }
    }

    /// Part (1-based) of a multipartite vertex.
    pub fn part_of(&self, v: usize) -> Option<usize> {
        let Layout::Multipartite { parts, .. } = &self.layout else {
            return None;
        };
        let mut end = 0;
        for (i, &size) in parts.iter().enumerate() {
            end += size;
            if v < end {
                return Some(i + 1);
            }
        }
        None
    }
}

/// A generated graph and its provenance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    pub graph: Graph,
    pub provenance: Provenance,
}

fn identity_origins(n: usize) -> Vec<Origin> {
    (0..n).map(Origin::Vertex).collect()
}

/// `n` copies of `K_k` sharing the center vertex 0.
pub fn windmill(k: usize, n: usize) -> Result<Instance> {
    if k < 2 || n < 1 {
        return Err(Error::Parameter(format!(
            "windmill needs k >= 2 and n >= 1, got k={k}, n={n}"
        )));
    }
    let blade = k - 1;
    let order = n * blade + 1;
    let mut edges = Vec::with_capacity(n * k * blade / 2);
    for i in 0..n {
        let first = 1 + i * blade;
        let members: Vec<usize> = (first..first + blade).collect();
        for (a, &u) in members.iter().enumerate() {
            edges.push((0, u));
            for &v in &members[a + 1..] {
                edges.push((u, v));
            }
        }
    }
    Ok(Instance {
        graph: Graph::from_edges(order, &edges)?,
        provenance: Provenance::new(Layout::Windmill { k, n }, identity_origins(order)),
    })
}

/// The friendship graph `F_n = Wd(3, n)`.
pub fn friendship(n: usize) -> Result<Instance> {
    if n < 1 {
        return Err(Error::Parameter(format!(
            "friendship needs n >= 1, got {n}"
        )));
    }
    windmill(3, n)
}

pub fn cycle(n: usize) -> Result<Instance> {
    if n < 3 {
        return Err(Error::Parameter(format!("cycle needs n >= 3, got {n}")));
    }
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Ok(Instance {
        graph: Graph::from_edges(n, &edges)?,
        provenance: Provenance::new(Layout::Cycle { n }, identity_origins(n)),
    })
}

/// Complete multipartite graph. Part sizes are sorted ascending and laid
/// out on consecutive ids.
pub fn complete_multipartite(sizes: &[usize]) -> Result<Instance> {
    if sizes.len() < 2 {
        return Err(Error::Parameter(format!(
            "complete multipartite graph needs at least two parts, got {}",
            sizes.len()
        )));
    }
    if let Some(pos) = sizes.iter().position(|&s| s == 0) {
        return Err(Error::Parameter(format!("part {} is empty", pos + 1)));
    }
    let mut parts = sizes.to_vec();
    parts.sort_unstable();
    let reordered = parts != sizes;
    let n: usize = parts.iter().sum();
    let mut part_of = Vec::with_capacity(n);
    for (p, &size) in parts.iter().enumerate() {
        part_of.extend(core::iter::repeat_n(p, size));
    }
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if part_of[u] != part_of[v] {
                edges.push((u, v));
            }
        }
    }
    Ok(Instance {
        graph: Graph::from_edges(n, &edges)?,
        provenance: Provenance::new(
            Layout::Multipartite { parts, reordered },
            identity_origins(n),
        ),
    })
}

fn require_edges(g: &Graph, what: &str) -> Result<Vec<(usize, usize)>> {
    if g.edge_count() == 0 {
        return Err(Error::Parameter(format!("{what} of an edgeless graph")));
    }
    Ok(g.edges().collect())
}

/// Pairs of edge indices (into the lexicographic edge list) sharing an endpoint.
fn edge_adjacencies(g: &Graph, edges: &[(usize, usize)]) -> Vec<(usize, usize)> {
    let index = |u: usize, v: usize| {
        let key = if u < v { (u, v) } else { (v, u) };
        edges.binary_search(&key).expect("edge list is sorted")
    };
    let mut pairs = Vec::new();
    for x in 0..g.vertex_count() {
        let incident: Vec<usize> = g.neighbors(x).iter().map(|&y| index(x, y)).collect();
        for (a, &e) in incident.iter().enumerate() {
            for &f in &incident[a + 1..] {
                pairs.push((e, f));
            }
        }
    }
    pairs
}

/// Line graph; vertex `i` is the `i`-th edge of `g` in lexicographic order.
pub fn line_graph(g: &Graph) -> Result<Instance> {
    let edges = require_edges(g, "line graph")?;
    let graph = Graph::from_edges(edges.len(), &edge_adjacencies(g, &edges))?;
    let origins = edges.iter().map(|&(u, v)| Origin::Edge(u, v)).collect();
    Ok(Instance {
        graph,
        provenance: Provenance::new(
            Layout::Line {
                source_vertices: g.vertex_count(),
                source_edges: edges.len(),
            },
            origins,
        ),
    })
}

/// Middle graph; ids `0..n` are the source vertices and `n + i` is the
/// `i`-th source edge in lexicographic order.
pub fn middle_graph(g: &Graph) -> Result<Instance> {
    let edges = require_edges(g, "middle graph")?;
    let n = g.vertex_count();
    let mut adj: Vec<(usize, usize)> = edge_adjacencies(g, &edges)
        .into_iter()
        .map(|(e, f)| (n + e, n + f))
        .collect();
    for (i, &(u, v)) in edges.iter().enumerate() {
        adj.push((u, n + i));
        adj.push((v, n + i));
    }
    let mut origins = identity_origins(n);
    origins.extend(edges.iter().map(|&(u, v)| Origin::Edge(u, v)));
    Ok(Instance {
        graph: Graph::from_edges(n + edges.len(), &adj)?,
        provenance: Provenance::new(
            Layout::Middle {
                source_vertices: n,
                source_edges: edges.len(),
            },
            origins,
        ),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn degree_multiset(g: &Graph) -> Vec<usize> {
        let mut d: Vec<_> = g.degrees().collect();
        d.sort_unstable();
        d
    }

    #[test]
    fn windmill_shapes() {
        let k3 = windmill(3, 1).unwrap().graph;
        assert_eq!((k3.vertex_count(), k3.edge_count()), (3, 3));
        assert!(k3.is_clique(&[0, 1, 2]));

        let w = windmill(3, 2).unwrap();
        assert_eq!((w.graph.vertex_count(), w.graph.edge_count()), (5, 6));
        assert_eq!(w.graph.degree(0).unwrap(), 4);
        assert_eq!(w.graph.max_degree().unwrap(), 4);
        assert_eq!(w.provenance.blade_of(3), Some(2));
        assert_eq!(w.provenance.blade_of(0), None);

        let w43 = windmill(4, 3).unwrap().graph;
        assert_eq!((w43.vertex_count(), w43.edge_count()), (10, 18));
        assert!(windmill(1, 3).is_err());
        assert!(windmill(3, 0).is_err());
    }

    #[test]
    fn friendship_is_windmill_3() {
        assert_eq!(friendship(2).unwrap(), windmill(3, 2).unwrap());
        assert_eq!(friendship(3).unwrap().graph.max_degree().unwrap(), 6);
        assert!(friendship(0).is_err());
    }

    #[test]
    fn cycles() {
        let c3 = cycle(3).unwrap().graph;
        assert!(c3.is_clique(&[0, 1, 2]));
        for n in [4, 7] {
            let c = cycle(n).unwrap().graph;
            assert_eq!(c.edge_count(), n);
            assert!(c.degrees().all(|d| d == 2));
            assert!(c.is_connected());
        }
        assert!(cycle(2).is_err());
    }

    #[test]
    fn multipartite() {
        let k3 = complete_multipartite(&[1, 1, 1]).unwrap().graph;
        assert_eq!(k3.edge_count(), 3);
        assert_eq!(
            complete_multipartite(&[2, 3]).unwrap().graph.edge_count(),
            6
        );
        let k222 = complete_multipartite(&[2, 2, 2]).unwrap();
        assert_eq!(k222.graph.vertex_count(), 6);
        assert_eq!(k222.graph.edge_count(), 12);
        assert_eq!(k222.provenance.part_of(3), Some(2));

        let swapped = complete_multipartite(&[3, 1]).unwrap();
        assert_eq!(
            swapped.provenance.layout(),
            &Layout::Multipartite {
                parts: alloc::vec![1, 3],
                reordered: true
            }
        );
        assert_eq!(
            complete_multipartite(&[1]).unwrap_err(),
            Error::Parameter("complete multipartite graph needs at least two parts, got 1".into())
        );
        assert!(complete_multipartite(&[2, 0]).is_err());
    }

    #[test]
    fn line_graph_examples() {
        let c5 = cycle(5).unwrap().graph;
        let l = line_graph(&c5).unwrap().graph;
        assert_eq!(l.vertex_count(), 5);
        assert!(l.degrees().all(|d| d == 2) && l.is_connected());

        let lw = line_graph(&windmill(3, 2).unwrap().graph).unwrap();
        assert_eq!(lw.graph.vertex_count(), 6);
        // edge (0,1) is center-incident: d(0) + d(1) - 2 = 4
        let id = lw.provenance.find(Origin::Edge(0, 1)).unwrap();
        assert_eq!(lw.graph.neighborhood(id).unwrap().len(), 4);

        let star = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let ls = line_graph(&star).unwrap().graph;
        assert!(ls.vertex_count() == 3 && ls.is_clique(&[0, 1, 2]));

        assert!(line_graph(&Graph::empty(3)).is_err());
    }

    #[test]
    fn middle_graph_examples() {
        let edge = Graph::from_edges(2, &[(0, 1)]).unwrap();
        let p3 = middle_graph(&edge).unwrap().graph;
        assert_eq!(degree_multiset(&p3), alloc::vec![1, 1, 2]);
        assert!(p3.has_edge(0, 2) && p3.has_edge(1, 2) && !p3.has_edge(0, 1));

        let mc4 = middle_graph(&cycle(4).unwrap().graph).unwrap();
        assert_eq!(mc4.graph.vertex_count(), 8);
        assert_eq!(mc4.graph.max_degree().unwrap(), 4);
        let e = mc4.provenance.find(Origin::Edge(0, 1)).unwrap();
        assert_eq!(mc4.graph.degree(e).unwrap(), 4);

        let mf1 = middle_graph(&friendship(1).unwrap().graph).unwrap().graph;
        assert_eq!(mf1.vertex_count(), 6);
        assert_eq!(mf1.max_degree().unwrap(), 4);

        let mf2 = middle_graph(&friendship(2).unwrap().graph).unwrap().graph;
        assert!(mf2.is_connected());
        assert_eq!(mf2.vertex_count(), 11);
        assert_eq!(mf2.max_degree().unwrap(), 6);

        assert!(middle_graph(&Graph::empty(2)).is_err());
    }

    #[test]
    fn role_order_must_be_bijection() {
        let inst = cycle(3).unwrap();
        assert!(inst
            .provenance
            .clone()
            .with_role_order(alloc::vec![0, 0, 1])
            .is_err());
        assert!(inst
            .provenance
            .clone()
            .with_role_order(alloc::vec![0, 1])
            .is_err());
        let p = inst
            .provenance
            .with_role_order(alloc::vec![2, 0, 1])
            .unwrap();
        assert_eq!(p.vertex(1), 2);
        assert_eq!(p.role_index(0), 2);
    }
}
