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

//! Exact solver against exhaustive enumeration of set partitions.

use condchrom_core::bounds::{best_lower_bound, clique_number, max_vset_d2r};
use condchrom_core::families::{
    complete_multipartite, cycle, friendship, line_graph, middle_graph, windmill,
};
use condchrom_core::solver::{chi_r_exact, DEFAULT_SOLVER_BUDGET};
use condchrom_core::verify::check_conditional;
use condchrom_core::Graph;
use proptest::prelude::*;

/// Smallest number of blocks over all partitions of V into independent
/// sets such that every vertex sees `min(d(v), r)` blocks.
fn brute_chi_r(g: &Graph, r: usize) -> usize {
    let n = g.vertex_count();
    let adj: Vec<Vec<bool>> = (0..n)
        .map(|u| (0..n).map(|v| g.has_edge(u, v)).collect())
        .collect();
    let mut rgs = vec![0usize; n];
    let mut best = n;
    fn valid(adj: &[Vec<bool>], rgs: &[usize], r: usize) -> bool {
        let n = rgs.len();
        for u in 0..n {
            let mut seen = Vec::new();
            let mut deg = 0;
            for v in 0..n {
                if adj[u][v] {
                    deg += 1;
                    if rgs[u] == rgs[v] {
                        return false;
                    }
                    if !seen.contains(&rgs[v]) {
                        seen.push(rgs[v]);
                    }
                }
            }
            if seen.len() < deg.min(r) {
                return false;
            }
        }
        true
    }
    fn walk(
        i: usize,
        blocks: usize,
        rgs: &mut Vec<usize>,
        adj: &[Vec<bool>],
        r: usize,
        best: &mut usize,
    ) {
        if i == rgs.len() {
            if blocks < *best && valid(adj, rgs, r) {
                *best = blocks;
            }
            return;
        }
        for b in 0..=blocks {
            rgs[i] = b;
            let next = if b == blocks { blocks + 1 } else { blocks };
            walk(i + 1, next, rgs, adj, r, best);
        }
    }
    if n == 0 {
        return 0;
    }
    walk(0, 0, &mut rgs, &adj, r, &mut best);
    best
}

fn exact(g: &Graph, r: usize) -> usize {
    let res = chi_r_exact(g, r, DEFAULT_SOLVER_BUDGET).unwrap();
    assert!(res.proven);
    let report = check_conditional(g, &res.witness, r).unwrap();
    assert!(report.is_valid(), "{report:?}");
    assert_eq!(res.witness.colors_used(), res.chi_r);
    assert!(res.bracket == [res.chi_r, res.chi_r]);
    res.chi_r
}

fn small_corpus() -> Vec<(String, Graph)> {
    let mut out = Vec::new();
    for n in 3..=8 {
        out.push((format!("C{n}"), cycle(n).unwrap().graph));
    }
    for (k, n) in [(3, 1), (3, 2), (3, 3), (4, 1), (4, 2)] {
        out.push((format!("Wd({k},{n})"), windmill(k, n).unwrap().graph));
    }
    for parts in [
        vec![1, 1],
        vec![1, 2],
        vec![2, 2],
        vec![1, 3],
        vec![2, 3],
        vec![1, 1, 1],
        vec![1, 1, 2],
        vec![1, 1, 1, 1],
    ] {
        out.push((
            format!("K{parts:?}"),
            complete_multipartite(&parts).unwrap().graph,
        ));
    }
    out.push((
        "L(F2)".into(),
        line_graph(&friendship(2).unwrap().graph).unwrap().graph,
    ));
    out.push((
        "L(C5)".into(),
        line_graph(&cycle(5).unwrap().graph).unwrap().graph,
    ));
    out.push((
        "M(C3)".into(),
        middle_graph(&cycle(3).unwrap().graph).unwrap().graph,
    ));
    out.push((
        "M(C4)".into(),
        middle_graph(&cycle(4).unwrap().graph).unwrap().graph,
    ));
    out.push((
        "M(K12)".into(),
        middle_graph(&complete_multipartite(&[1, 2]).unwrap().graph)
            .unwrap()
            .graph,
    ));
    out.push((
        "M(K13)".into(),
        middle_graph(&complete_multipartite(&[1, 3]).unwrap().graph)
            .unwrap()
            .graph,
    ));
    out
}

#[test]
fn families_match_enumeration() {
    for (name, g) in small_corpus() {
        let delta = g.max_degree().unwrap();
        for r in 1..=delta + 1 {
            assert_eq!(exact(&g, r), brute_chi_r(&g, r), "{name} at r={r}");
        }
    }
}

#[test]
fn derived_examples() {
    let c4 = cycle(4).unwrap().graph;
    assert_eq!(brute_chi_r(&c4, 2), 4);
    assert_eq!(exact(&c4, 2), 4);
    let c5 = cycle(5).unwrap().graph;
    assert_eq!(brute_chi_r(&c5, 2), 5);
    let c6 = cycle(6).unwrap().graph;
    assert_eq!(brute_chi_r(&c6, 2), 3);
    assert_eq!(exact(&c6, 2), 3);
}

#[test]
fn bounds_below_enumeration() {
    for (name, g) in small_corpus() {
        let omega = clique_number(&g, 1 << 20);
        assert!(omega.exact);
        for r in 1..=g.max_degree().unwrap() {
            let chi = brute_chi_r(&g, r);
            assert!(omega.value <= chi, "{name}");
            let vset = max_vset_d2r(&g, r, 1 << 20);
            assert!(vset.value <= chi, "{name} r={r}");
            assert!(
                best_lower_bound(&g, r, 1 << 20).unwrap().value <= chi,
                "{name} r={r}"
            );
        }
    }
}

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut i = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[i] {
                        edges.push((u, v));
                    }
                    i += 1;
                }
            }
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn random_graphs_match_enumeration(g in arb_graph(8), r in 1usize..5) {
        prop_assert_eq!(exact(&g, r), brute_chi_r(&g, r));
    }
}
