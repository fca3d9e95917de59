#![allow(dead_code)]

use std::collections::BTreeSet;

use proptest::prelude::*;
use vava_core::clutter::Clutter;
use vava_core::graph::Graph;
use vava_core::{Monomial, MonomialIdeal};

/// A monomial of degree `1..=max_deg` in `n` variables.
pub fn monomial(n: usize, max_deg: usize) -> impl Strategy<Value = Monomial> {
    prop::collection::vec(0..n, 1..=max_deg).prop_map(move |vars| {
        let mut e = vec![0u32; n];
        for v in vars {
            e[v] += 1;
        }
        Monomial::new(e).unwrap()
    })
}

/// A nonzero ideal with at most `max_gens` generators of degree at most `max_deg`.
pub fn ideal(n: usize, max_gens: usize, max_deg: usize) -> impl Strategy<Value = MonomialIdeal> {
    prop::collection::vec(monomial(n, max_deg), 1..=max_gens)
        .prop_map(move |g| MonomialIdeal::minimize(n, g).unwrap())
}

/// A pair `J ⊆ I` in `1..=max_n` variables: `J` is generated by multiples of generators of `I`.
pub fn pair(max_n: usize, max_gens: usize, max_deg: usize) -> impl Strategy<Value = (MonomialIdeal, MonomialIdeal)> {
    (1..=max_n).prop_flat_map(move |n| {
        ideal(n, max_gens, max_deg).prop_flat_map(move |i| {
            let k = i.len();
            let pick = (0..k, prop::collection::vec(0..=n, 0..=1));
            prop::collection::vec(pick, 1..=max_gens).prop_map(move |choices| {
                let gens = choices.into_iter().map(|(g, extra)| {
                    let mut e = i.gens()[g].exps().to_vec();
                    for v in extra {
                        if v < n && e.iter().sum::<u32>() < max_deg as u32 {
                            e[v] += 1;
                        }
                    }
                    Monomial::new(e).unwrap()
                });
                (MonomialIdeal::minimize(n, gens).unwrap(), i.clone())
            })
        })
    })
}

/// All vertex pairs of `[n]`.
pub fn all_pairs(n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for a in 1..=n {
        for b in a + 1..=n {
            out.push((a, b));
        }
    }
    out
}

/// A graph on `n` vertices from an edge mask.
pub fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let edges = all_pairs(n)
        .into_iter()
        .enumerate()
        .filter(|(k, _)| mask >> k & 1 == 1)
        .map(|(_, e)| e);
    Graph::new(n, edges).unwrap()
}

/// A random graph on `n` vertices together with a subgraph.
pub fn graph_pair(min_n: usize, max_n: usize) -> impl Strategy<Value = (Graph, Graph)> {
    (min_n..=max_n).prop_flat_map(|n| {
        let p = n * (n - 1) / 2;
        (Just(n), prop::collection::vec(any::<bool>(), p), prop::collection::vec(any::<bool>(), p))
    })
    .prop_map(|(n, big, keep)| {
        let pairs = all_pairs(n);
        let g_edges: Vec<_> = pairs.iter().zip(&big).filter(|(_, b)| **b).map(|(e, _)| *e).collect();
        let s_edges: Vec<_> = pairs
            .iter()
            .zip(big.iter().zip(&keep))
            .filter(|(_, (b, k))| **b && **k)
            .map(|(e, _)| *e)
            .collect();
        (Graph::new(n, s_edges).unwrap(), Graph::new(n, g_edges).unwrap())
    })
}

/// A nonempty `d`-uniform clutter on `n` vertices.
pub fn clutter(n: usize, d: usize, max_circuits: usize) -> impl Strategy<Value = Clutter> {
    let all = vava_core::combinat::subsets(n, d);
    let k = all.len();
    prop::collection::btree_set(0..k, 1..=max_circuits.min(k)).prop_map(move |idx| {
        let circuits = idx.into_iter().map(|i| all[i].iter().map(|v| v + 1).collect());
        Clutter::new(n, d, circuits).unwrap()
    })
}

pub fn set(v: &[usize]) -> BTreeSet<usize> {
    v.iter().copied().collect()
}
