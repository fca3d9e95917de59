mod common;

use std::collections::{BTreeSet, VecDeque};

use common::{graph_pair, ideal, pair};
use proptest::prelude::*;
use vava_core::clutter::{complete_d_partite, facet_ideal, Partition};
use vava_core::graph::{edge_ideal, is_bipartite, Graph};
use vava_core::ideal::power_maximal;
use vava_core::rees::{
    barshay_relations, degree_one_lifts, dpartite_relations, even_cycle_binomials, even_walk_binomials,
    generation_check, kernel_member, symmetric_relations, taylor_relations, Binomial, Generator, MixedMonomial,
    MonomialMap, DEFAULT_FIBER_BUDGET,
};
use vava_core::Monomial;

fn all_in_kernel(phi: &MonomialMap, bins: &[Binomial]) -> bool {
    bins.iter()
        .all(|b| kernel_member(phi, &Generator::from(b.clone()), None).unwrap())
}

/// Every T-exponent vector of total degree `t` in `m` variables.
fn compositions(m: usize, t: u32) -> Vec<Vec<u32>> {
    if m == 1 {
        return vec![vec![t]];
    }
    let mut out = Vec::new();
    for first in 0..=t {
        for mut rest in compositions(m - 1, t - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

fn divide(w: &Monomial, f: &Monomial) -> Option<Monomial> {
    let e: Option<Vec<u32>> = w.exps().iter().zip(f.exps()).map(|(a, b)| a.checked_sub(*b)).collect();
    e.map(|e| Monomial::new(e).unwrap())
}

/// Number of connected components of the fiber of `w` in T-degree `t` under the binomial moves.
fn brute_components(phi: &MonomialMap, moves: &[Binomial], w: &Monomial, t: u32) -> usize {
    let mut members = Vec::new();
    for b in compositions(phi.len(), t) {
        let probe = MixedMonomial::new(Monomial::one(phi.nvars()), b.clone());
        if let Some(x) = divide(w, &phi.image(&probe).unwrap()) {
            members.push(MixedMonomial::new(x, b));
        }
    }
    let mut seen = BTreeSet::new();
    let mut components = 0;
    for start in &members {
        if !seen.insert(start.clone()) {
            continue;
        }
        components += 1;
        let mut queue = VecDeque::from([start.clone()]);
        while let Some(u) = queue.pop_front() {
            for b in moves {
                for (from, to) in [(&b.lead, &b.trail), (&b.trail, &b.lead)] {
                    let Some(x) = divide(&u.x, &from.x) else { continue };
                    let t: Option<Vec<u32>> = u.t.iter().zip(&from.t).map(|(a, c)| a.checked_sub(*c)).collect();
                    let Some(t) = t else { continue };
                    let v = MixedMonomial::new(x, t).mul(to).unwrap();
                    if seen.insert(v.clone()) {
                        queue.push_back(v);
                    }
                }
            }
        }
    }
    components
}

/// Whether every fiber at `lcm(f^α, f^β)` with `|α| = |β| ≤ d` is connected.
fn brute_generates(phi: &MonomialMap, moves: &[Binomial], d: u32) -> bool {
    for t in 1..=d {
        let comps = compositions(phi.len(), t);
        for (k, a) in comps.iter().enumerate() {
            for b in &comps[k + 1..] {
                let one = Monomial::one(phi.nvars());
                let fa = phi.image(&MixedMonomial::new(one.clone(), a.clone())).unwrap();
                let fb = phi.image(&MixedMonomial::new(one, b.clone())).unwrap();
                if brute_components(phi, moves, &fa.lcm(&fb).unwrap(), t) > 1 {
                    return false;
                }
            }
        }
    }
    true
}

fn as_generators(bins: &[Binomial]) -> Vec<Generator> {
    bins.iter().cloned().map(Generator::from).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(60))]

    #[test]
    fn syzygy_and_taylor_relations_are_kernel_elements(i in ideal(4, 4, 3)) {
        let phi = MonomialMap::from_ideal(&i).unwrap();
        prop_assert!(all_in_kernel(&phi, &symmetric_relations(&phi).unwrap()));
        prop_assert!(all_in_kernel(&phi, &taylor_relations(&phi, 2).unwrap()));
        prop_assert!(all_in_kernel(&phi, &taylor_relations(&phi, 3).unwrap()));
    }

    #[test]
    fn walk_binomials_are_kernel_elements((_, g) in graph_pair(3, 6)) {
        prop_assume!(g.edge_count() > 0);
        let phi = MonomialMap::from_ideal(&edge_ideal(&g)).unwrap();
        prop_assert!(all_in_kernel(&phi, &even_walk_binomials(&phi, &g, 6).unwrap()));
        prop_assert!(all_in_kernel(&phi, &even_cycle_binomials(&phi, &g).unwrap()));
    }

    #[test]
    fn swap_relations_are_kernel_elements(sizes in prop::collection::vec(1usize..=3, 2..=3)) {
        let mut next = 1;
        let classes = sizes.iter().map(|&s| { let c: Vec<usize> = (next..next + s).collect(); next += s; c }).collect();
        let c = complete_d_partite(&Partition { classes }).unwrap();
        let phi = MonomialMap::from_ideal(&facet_ideal(&c)).unwrap();
        prop_assert!(all_in_kernel(&phi, &dpartite_relations(&phi, &c).unwrap()));
    }

    #[test]
    fn lifts_are_kernel_elements_mod_j((j, i) in pair(4, 4, 3)) {
        let phi = MonomialMap::from_ideal(&i).unwrap();
        for u in degree_one_lifts(&phi, &j) {
            prop_assert!(kernel_member(&phi, &Generator::from(u), Some(&j)).unwrap());
        }
    }

    #[test]
    fn generation_check_matches_brute_force(i in ideal(3, 4, 3), taylor in any::<bool>()) {
        let phi = MonomialMap::from_ideal(&i).unwrap();
        let mut bins = symmetric_relations(&phi).unwrap();
        if taylor {
            bins.extend(taylor_relations(&phi, 2).unwrap());
        }
        let rep = generation_check(&phi, &as_generators(&bins), 3, None, DEFAULT_FIBER_BUDGET).unwrap();
        prop_assert_eq!(rep.generates(), brute_generates(&phi, &bins, 3));
    }

    #[test]
    fn taylor_family_is_complete(i in ideal(3, 4, 3)) {
        let phi = MonomialMap::from_ideal(&i).unwrap();
        let mut bins = symmetric_relations(&phi).unwrap();
        bins.extend(taylor_relations(&phi, 2).unwrap());
        bins.extend(taylor_relations(&phi, 3).unwrap());
        let rep = generation_check(&phi, &as_generators(&bins), 3, None, DEFAULT_FIBER_BUDGET).unwrap();
        prop_assert!(rep.generates());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn bipartite_cycles_suffice(a in 1usize..=4, b in 1usize..=3, keep in prop::collection::vec(any::<bool>(), 12)) {
        let host = Graph::complete_bipartite(a, b);
        let edges: Vec<_> = host.edges().zip(&keep).filter(|(_, k)| **k).map(|(e, _)| e).collect();
        prop_assume!(!edges.is_empty());
        let g = Graph::new(host.n(), edges).unwrap();
        prop_assert!(is_bipartite(&g).is_some());
        let phi = MonomialMap::from_ideal(&edge_ideal(&g)).unwrap();
        let mut bins = symmetric_relations(&phi).unwrap();
        bins.extend(even_cycle_binomials(&phi, &g).unwrap());
        let rep = generation_check(&phi, &as_generators(&bins), 4, None, DEFAULT_FIBER_BUDGET).unwrap();
        prop_assert!(rep.generates(), "{:?}", rep.verdict);
    }
}

#[test]
fn maximal_power_minors_are_kernel_elements() {
    for (n, d) in [(1, 1), (2, 2), (2, 3), (3, 2), (3, 3)] {
        let phi = MonomialMap::from_ideal(&power_maximal(n, d).unwrap()).unwrap();
        assert!(all_in_kernel(&phi, &barshay_relations(n, d).unwrap()));
    }
}

#[test]
fn maximal_power_minors_generate() {
    for (n, d) in [(2, 2), (2, 3), (3, 2)] {
        let i = power_maximal(n, d).unwrap();
        let phi = MonomialMap::from_ideal(&i).unwrap();
        let gens = as_generators(&barshay_relations(n, d).unwrap());
        let rep = generation_check(&phi, &gens, 3, None, DEFAULT_FIBER_BUDGET).unwrap();
        assert!(rep.generates(), "n = {n}, d = {d}: {:?}", rep.verdict);
    }
}
