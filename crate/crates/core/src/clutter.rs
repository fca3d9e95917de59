//! Uniform clutters, facet ideals, complete d-partite clutters, and the
//! submaximal-circuit machinery behind torsion witnesses of `VV_J`.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::combinat::{subsets, subsets_of};
use crate::error::{Error, Result};
use crate::graph::{Graph, Verdict};
use crate::ideal::MonomialIdeal;
use crate::jacobian::jacobian_ideal_at;
use crate::monomial::Monomial;
use crate::vv::vv_vanishes;

/// A `d`-uniform clutter on `1..=n`; circuits are stored as sorted vertex lists.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Clutter {
    n: usize,
    d: usize,
    circuits: BTreeSet<Vec<usize>>,
}

impl Clutter {
    pub fn new(n: usize, d: usize, circuits: impl IntoIterator<Item = Vec<usize>>) -> Result<Self> {
        if d == 0 {
            return Err(Error::OutOfRange("uniformity d must be at least 1".into()));
        }
        let mut set = BTreeSet::new();
        for mut c in circuits {
            c.sort_unstable();
            c.dedup();
            if c.len() != d {
                return Err(Error::Invalid(format!("circuit {c:?} does not have {d} distinct vertices")));
            }
            if c[0] == 0 || c[d - 1] > n {
                return Err(Error::Invalid(format!("circuit {c:?} outside 1..={n}")));
            }
            if !set.insert(c.clone()) {
                return Err(Error::Invalid(format!("duplicate circuit {c:?}")));
            }
        }
        Ok(Self { n, d, circuits: set })
    }

    pub fn from_graph(g: &Graph) -> Self {
        Self {
            n: g.n(),
            d: 2,
            circuits: g.edges().map(|(a, b)| vec![a, b]).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn circuits(&self) -> impl Iterator<Item = &Vec<usize>> {
        self.circuits.iter()
    }

    pub fn len(&self) -> usize {
        self.circuits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.circuits.is_empty()
    }

    pub fn contains_circuit(&self, c: &[usize]) -> bool {
        let mut c = c.to_vec();
        c.sort_unstable();
        self.circuits.contains(&c)
    }

    /// Vertices lying on at least one circuit.
    pub fn vertices(&self) -> BTreeSet<usize> {
        self.circuits.iter().flatten().copied().collect()
    }

    pub fn is_subclutter_of(&self, other: &Clutter) -> bool {
        self.n == other.n && self.d == other.d && self.circuits.is_subset(&other.circuits)
    }
}

/// Disjoint nonempty vertex classes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Partition {
    pub classes: Vec<Vec<usize>>,
}

pub fn facet_ideal(c: &Clutter) -> MonomialIdeal {
    let gens = c
        .circuits
        .iter()
        .map(|f| Monomial::squarefree(c.n, f).expect("validated"));
    MonomialIdeal::minimize(c.n, gens).expect("one context")
}

/// All transversals of the partition; the vertex set is `1..=max vertex`.
pub fn complete_d_partite(p: &Partition) -> Result<Clutter> {
    let mut seen = BTreeSet::new();
    for class in &p.classes {
        if class.is_empty() {
            return Err(Error::Invalid("empty class in partition".into()));
        }
        for &v in class {
            if v == 0 {
                return Err(Error::Invalid("vertices are numbered from 1".into()));
            }
            if !seen.insert(v) {
                return Err(Error::Invalid(format!("vertex {v} lies in two classes")));
            }
        }
    }
    let n = seen.last().copied().unwrap_or(0);
    let mut circuits = vec![Vec::new()];
    for class in &p.classes {
        circuits = circuits
            .into_iter()
            .flat_map(|c: Vec<usize>| {
                class.iter().map(move |&v| {
                    let mut c = c.clone();
                    c.push(v);
                    c
                })
            })
            .collect();
    }
    Clutter::new(n, p.classes.len(), circuits)
}

/// Recovers the partition of a complete d-partite clutter: two vertices share
/// a class iff no circuit contains both. `None` if the clutter is not of that form.
pub fn detect_partition(c: &Clutter) -> Option<Partition> {
    if c.is_empty() {
        return None;
    }
    let verts: Vec<usize> = c.vertices().into_iter().collect();
    let mut together = BTreeSet::new();
    for f in c.circuits() {
        for (a, &u) in f.iter().enumerate() {
            for &v in &f[a + 1..] {
                together.insert((u, v));
            }
        }
    }
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for &v in &verts {
        match classes.iter_mut().find(|cl| !together.contains(&(cl[0].min(v), cl[0].max(v)))) {
            Some(cl) => cl.push(v),
            None => classes.push(vec![v]),
        }
    }
    if classes.len() != c.d {
        return None;
    }
    let p = Partition { classes };
    let full = complete_d_partite(&p).ok()?;
    (full.circuits == c.circuits).then_some(p)
}

/// Vanishing of `VV` for a subclutter of a complete d-partite clutter, which the
/// theory guarantees; a negative outcome is reported as an error.
pub fn dpartite_vanishing_check(c: &Clutter, sub: &Clutter) -> Result<bool> {
    if detect_partition(c).is_none() {
        return Err(Error::Invalid("clutter is not complete d-partite".into()));
    }
    if sub.is_empty() {
        return Err(Error::Invalid("subclutter must have at least one circuit".into()));
    }
    if !sub.is_subclutter_of(c) {
        return Err(Error::Invalid("subclutter is not contained in the clutter".into()));
    }
    let report = vv_vanishes(&facet_ideal(sub), &facet_ideal(c))?;
    if !report.vanishes {
        let (t, w) = report.witnesses.iter().next().expect("nonvanishing has a witness");
        return Err(Error::TheoremViolation(format!(
            "VV of a complete d-partite pair is nonzero in degree {t}: {}",
            w[0]
        )));
    }
    Ok(true)
}

/// A squarefree generator (as a vertex list) and a `(d-1)`-set `G` for which
/// no `x_{G ∪ {i_r}}` lies in `J`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PairViolation {
    pub generator: Vec<usize>,
    pub g: Vec<usize>,
}

fn squarefree_vertices(j: &MonomialIdeal, d: usize) -> Result<Vec<Vec<usize>>> {
    j.gens()
        .iter()
        .map(|m| {
            if !m.is_squarefree() || m.degree() as usize != d {
                return Err(Error::Invalid(format!(
                    "generator {m} is not squarefree of degree {d}"
                )));
            }
            Ok(m.support().into_iter().map(|i| i + 1).collect())
        })
        .collect()
}

pub fn squarefree_pair_condition(j: &MonomialIdeal, d: usize) -> Result<Verdict<PairViolation>> {
    if d == 0 {
        return Err(Error::OutOfRange("degree must be positive".into()));
    }
    let n = j.nvars();
    let gens = squarefree_vertices(j, d)?;
    let gsets: Vec<Vec<usize>> = subsets(n, d - 1)
        .into_iter()
        .map(|s| s.into_iter().map(|i| i + 1).collect())
        .collect();
    for f in &gens {
        for g in &gsets {
            let hit = f.iter().any(|&i| {
                if g.contains(&i) {
                    return false;
                }
                let mut s = g.clone();
                s.push(i);
                let m = Monomial::squarefree(n, &s).expect("in range");
                j.contains_unchecked(&m)
            });
            if !hit {
                return Ok(Verdict::Violated(PairViolation {
                    generator: f.clone(),
                    g: g.clone(),
                }));
            }
        }
    }
    Ok(Verdict::Holds)
}

/// For squarefree `J` generated in degree 3, the predicted vanishing of `VV_{J ⊆ 𝔪^[3]}`.
pub fn squarefree_pair_vanishing_d3(j: &MonomialIdeal) -> Result<Verdict<PairViolation>> {
    squarefree_pair_condition(j, 3)
}

/// All `(d-1)`-subsets of circuits.
pub fn submaximal_circuits(c: &Clutter) -> BTreeSet<Vec<usize>> {
    let mut out = BTreeSet::new();
    for f in c.circuits() {
        for skip in 0..f.len() {
            let e: Vec<usize> = f.iter().enumerate().filter(|&(k, _)| k != skip).map(|(_, &v)| v).collect();
            out.insert(e);
        }
    }
    out
}

fn check_sc_size(c: &Clutter, e: &[usize]) -> Result<()> {
    let distinct: BTreeSet<_> = e.iter().collect();
    if distinct.len() != c.d - 1 || e.len() != c.d - 1 {
        return Err(Error::Invalid(format!("{e:?} does not have {} distinct vertices", c.d - 1)));
    }
    Ok(())
}

/// `N(e) = {v : e ∪ {v} is a circuit}`.
pub fn neighborhood(c: &Clutter, e: &[usize]) -> Result<BTreeSet<usize>> {
    check_sc_size(c, e)?;
    let mut out = BTreeSet::new();
    for v in 1..=c.n {
        if e.contains(&v) {
            continue;
        }
        let mut f = e.to_vec();
        f.push(v);
        if c.contains_circuit(&f) {
            out.insert(v);
        }
    }
    Ok(out)
}

pub fn neighborhood_union(c: &Clutter, es: &[Vec<usize>]) -> Result<BTreeSet<usize>> {
    let mut out = BTreeSet::new();
    for e in es {
        out.extend(neighborhood(c, e)?);
    }
    Ok(out)
}

/// `α(A)`: size of the union of `N(e)` over all submaximal circuits `e ⊆ A`.
/// The union over every such `e` is the largest union over any family.
pub fn alpha(c: &Clutter, a: &BTreeSet<usize>) -> usize {
    alpha_neighbors(c, a).len()
}

fn alpha_neighbors(c: &Clutter, a: &BTreeSet<usize>) -> BTreeSet<usize> {
    let mut out = BTreeSet::new();
    for f in c.circuits() {
        for &v in f {
            if f.iter().all(|u| *u == v || a.contains(u)) {
                out.insert(v);
            }
        }
    }
    out
}

pub fn is_independent(c: &Clutter, a: &BTreeSet<usize>) -> bool {
    !c.circuits().any(|f| f.iter().all(|v| a.contains(v)))
}

/// Vertices `y_1..y_m` whose first `d` form the circuit `f`, together with the
/// submaximal circuits `e_k` inside `{y_{t+1}..y_m}` and the monomial they
/// assemble into, an element of `J ∩ I^t` outside `J I^{t-1}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TtorsionWitness {
    pub t: usize,
    pub r: usize,
    pub y: Vec<usize>,
    pub f: Vec<usize>,
    pub circuits: Vec<Vec<usize>>,
    pub monomial: Monomial,
}

/// Searches for `y_1..y_m` (`d ≤ m ≤ m_max`) with `{y_1..y_d}` a circuit,
/// `B ∪ {y_{t+1}..y_m}` independent for every `(t-1)`-subset `B` of
/// `{y_1..y_t}`, and `α({y_{t+1}..y_m}) = r - 1`. A candidate is reported only
/// after its monomial is confirmed against `(J, I_r(Θ))`.
pub fn ttorsion_search(c: &Clutter, t: usize, r: usize, m_max: usize) -> Result<Option<TtorsionWitness>> {
    let Some(w) = ttorsion_candidate(c, t, r, m_max)? else {
        return Ok(None);
    };
    if !confirm_ttorsion(c, &w)? {
        return Err(Error::TheoremViolation(format!(
            "torsion witness y = {:?} is not confirmed algebraically",
            w.y
        )));
    }
    Ok(Some(w))
}

/// The combinatorial search alone, without algebraic confirmation.
pub fn ttorsion_candidate(c: &Clutter, t: usize, r: usize, m_max: usize) -> Result<Option<TtorsionWitness>> {
    let d = c.d;
    if t < 2 || t > d {
        return Err(Error::OutOfRange(format!("need 1 < t <= d = {d}, got t = {t}")));
    }
    if r == 0 {
        return Err(Error::OutOfRange("r must be at least 1".into()));
    }
    if m_max < d {
        return Err(Error::OutOfRange(format!("m_max = {m_max} is below d = {d}")));
    }
    for m in d..=m_max.min(c.n) {
        for f in c.circuits() {
            let outside: Vec<usize> = (1..=c.n).filter(|v| !f.contains(v)).collect();
            for y in subsets_of(f, t) {
                let rest: Vec<usize> = f.iter().copied().filter(|v| !y.contains(v)).collect();
                for x in subsets_of(&outside, m - d) {
                    let a: BTreeSet<usize> = rest.iter().chain(&x).copied().collect();
                    let independent = subsets_of(&y, t - 1).into_iter().all(|b| {
                        let mut s = a.clone();
                        s.extend(b);
                        is_independent(c, &s)
                    });
                    if !independent || alpha(c, &a) != r - 1 {
                        continue;
                    }
                    let ys: Vec<usize> = y.iter().chain(&rest).chain(&x).copied().collect();
                    return Ok(Some(assemble_witness(c, t, r, ys, f.clone(), &a)));
                }
            }
        }
    }
    Ok(None)
}

fn assemble_witness(c: &Clutter, t: usize, r: usize, y: Vec<usize>, f: Vec<usize>, a: &BTreeSet<usize>) -> TtorsionWitness {
    let n = c.n;
    let mut covered = BTreeSet::new();
    let mut chosen = Vec::new();
    let mut exps = vec![0u32; n];
    for e in submaximal_circuits(c) {
        if !e.iter().all(|v| a.contains(v)) {
            continue;
        }
        let nb = neighborhood(c, &e).expect("size d-1");
        let fresh = nb.difference(&covered).count() as u32;
        if fresh == 0 {
            continue;
        }
        covered.extend(nb);
        for &v in &e {
            exps[v - 1] += fresh * t as u32;
        }
        chosen.push(e);
    }
    for &yi in &y[..t] {
        for &v in &f {
            if v != yi {
                exps[v - 1] += 1;
            }
        }
    }
    TtorsionWitness {
        t,
        r,
        y,
        f,
        circuits: chosen,
        monomial: Monomial::new(exps).expect("small exponents"),
    }
}

/// Checks `g ∈ J ∩ I^t` and `g ∉ J I^{t-1}` for `I = (J, I_r(Θ))`.
pub fn confirm_ttorsion(c: &Clutter, w: &TtorsionWitness) -> Result<bool> {
    let j = facet_ideal(c);
    let i = jacobian_ideal_at(&j, w.r)?;
    let t = w.t as u32;
    let g = &w.monomial;
    Ok(j.contains(g)? && i.power(t)?.contains(g)? && !j.product(&i.power(t - 1)?)?.contains(g)?)
}

/// Adjacent `x1 < x2` and a nonempty vertex set `s` with `{x1} ∪ s` and
/// `{x2} ∪ s` independent and `|N(s)| = ht(I(G)) - 1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GraphTorsionWitness {
    pub x1: usize,
    pub x2: usize,
    pub s: Vec<usize>,
    pub height: usize,
}

const AR_GRAPH_CANDIDATE_LIMIT: usize = 24;

pub fn ar_theorem_graph(g: &Graph) -> Result<Option<GraphTorsionWitness>> {
    let height = crate::graph::edge_ideal(g).height()?;
    if height <= 1 {
        return Err(Error::OutOfRange(format!("height of the edge ideal is {height}, need > 1")));
    }
    let c = Clutter::from_graph(g);
    for (x1, x2) in g.edges() {
        let cand: Vec<usize> = (1..=g.n())
            .filter(|&v| v != x1 && v != x2 && !g.has_edge(v, x1) && !g.has_edge(v, x2))
            .collect();
        if cand.len() > AR_GRAPH_CANDIDATE_LIMIT {
            return Err(Error::ResourceExceeded {
                what: "ar_theorem_graph",
                size: cand.len(),
                budget: AR_GRAPH_CANDIDATE_LIMIT,
            });
        }
        for k in 1..=cand.len() {
            for s in subsets_of(&cand, k) {
                let set: BTreeSet<usize> = s.iter().copied().collect();
                if !is_independent(&c, &set) {
                    continue;
                }
                let nb: BTreeSet<usize> = s.iter().flat_map(|&v| g.neighbors(v)).collect();
                if nb.len() == height - 1 {
                    return Ok(Some(GraphTorsionWitness { x1, x2, s, height }));
                }
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::squarefree_power;

    fn set(v: &[usize]) -> BTreeSet<usize> {
        v.iter().copied().collect()
    }

    fn two_edges() -> Clutter {
        Clutter::new(4, 2, [vec![1, 2], vec![3, 4]]).unwrap()
    }

    fn triangle() -> Clutter {
        Clutter::from_graph(&Graph::complete(3))
    }

    #[test]
    fn facet_ideals() {
        let c = Clutter::new(3, 3, [vec![1, 2, 3]]).unwrap();
        assert_eq!(facet_ideal(&c).gens(), &[Monomial::new(vec![1, 1, 1]).unwrap()]);
        assert!(facet_ideal(&Clutter::new(3, 2, []).unwrap()).is_zero());
        assert_eq!(facet_ideal(&triangle()), squarefree_power(3, 2).unwrap());
    }

    #[test]
    fn validation() {
        assert!(Clutter::new(3, 2, [vec![1, 2, 3]]).is_err());
        assert!(Clutter::new(3, 2, [vec![1, 4]]).is_err());
        assert!(Clutter::new(3, 0, []).is_err());
        assert!(Clutter::new(3, 2, [vec![1, 2], vec![2, 1]]).is_err());
    }

    #[test]
    fn complete_partite_construction() {
        let p = Partition { classes: vec![vec![1, 2], vec![3, 4], vec![5]] };
        let c = complete_d_partite(&p).unwrap();
        let got: Vec<_> = c.circuits().cloned().collect();
        assert_eq!(got, vec![vec![1, 3, 5], vec![1, 4, 5], vec![2, 3, 5], vec![2, 4, 5]]);
        let c = complete_d_partite(&Partition { classes: vec![vec![1], vec![2]] }).unwrap();
        assert_eq!(c.len(), 1);
        let c = complete_d_partite(&Partition { classes: vec![vec![1, 2, 3], vec![4, 5]] }).unwrap();
        assert_eq!(c.len(), 6);
        assert!(complete_d_partite(&Partition { classes: vec![vec![1, 2], vec![2]] }).is_err());
        assert_eq!(detect_partition(&c).unwrap().classes, vec![vec![1, 2, 3], vec![4, 5]]);
        assert!(detect_partition(&triangle()).is_none());
    }

    #[test]
    fn dpartite_check() {
        let c = complete_d_partite(&Partition { classes: vec![vec![1, 2], vec![3, 4], vec![5]] }).unwrap();
        let sub = Clutter::new(5, 3, [vec![1, 3, 5], vec![2, 4, 5]]).unwrap();
        assert!(dpartite_vanishing_check(&c, &sub).unwrap());
        assert!(dpartite_vanishing_check(&c, &c).unwrap());
        let bad = Clutter::new(5, 3, [vec![1, 2, 5]]).unwrap();
        assert!(dpartite_vanishing_check(&c, &bad).is_err());
    }

    #[test]
    fn squarefree_pairs() {
        let m3 = squarefree_power(5, 3).unwrap();
        assert!(squarefree_pair_condition(&m3, 3).unwrap().holds());
        let single = MonomialIdeal::from_exponents(4, &[vec![1, 1, 1, 0]]).unwrap();
        let v = squarefree_pair_condition(&single, 3).unwrap();
        assert!(!v.holds());
        assert!(squarefree_pair_condition(&single, 3).unwrap().violation().is_some());
        let p = Partition { classes: vec![vec![1, 2], vec![3, 4], vec![5, 6]] };
        let j = facet_ideal(&complete_d_partite(&p).unwrap());
        let v = squarefree_pair_vanishing_d3(&j).unwrap();
        assert!(!v.holds());
        assert!(!vv_vanishes(&j, &squarefree_power(6, 3).unwrap()).unwrap().vanishes);
        let mixed = MonomialIdeal::from_exponents(5, &[vec![1, 1, 0, 0, 0], vec![0, 0, 1, 1, 1]]).unwrap();
        assert!(squarefree_pair_condition(&mixed, 2).is_err());
    }

    #[test]
    fn neighborhoods() {
        let c = two_edges();
        let sc: Vec<_> = submaximal_circuits(&c).into_iter().collect();
        assert_eq!(sc, vec![vec![1], vec![2], vec![3], vec![4]]);
        assert_eq!(neighborhood(&c, &[3]).unwrap(), set(&[4]));
        assert_eq!(neighborhood(&triangle(), &[1]).unwrap(), set(&[2, 3]));
        assert_eq!(neighborhood_union(&c, &[vec![1], vec![3]]).unwrap(), set(&[2, 4]));
        assert!(neighborhood(&c, &[1, 2]).is_err());
    }

    #[test]
    fn alpha_and_independence() {
        assert_eq!(alpha(&two_edges(), &set(&[3])), 1);
        assert_eq!(alpha(&Clutter::new(4, 3, [vec![1, 2, 3]]).unwrap(), &set(&[4])), 0);
        assert_eq!(alpha(&triangle(), &set(&[1, 2])), 3);
        assert!(!is_independent(&triangle(), &set(&[1, 2])));
        assert!(is_independent(&two_edges(), &set(&[1, 3])));
        assert!(is_independent(&two_edges(), &set(&[])));
    }

    #[test]
    fn ttorsion_examples() {
        let w = ttorsion_search(&two_edges(), 2, 2, 3).unwrap().unwrap();
        assert_eq!(w.y, vec![1, 2, 3]);
        assert_eq!(w.monomial, Monomial::new(vec![1, 1, 2, 0]).unwrap());
        assert!(ttorsion_search(&triangle(), 2, 2, 3).unwrap().is_none());
        assert!(ttorsion_search(&triangle(), 1, 2, 3).is_err());
        assert!(ttorsion_search(&triangle(), 2, 2, 1).is_err());
    }

    #[test]
    fn ar_graph_examples() {
        let g = Graph::new(4, [(1, 2), (3, 4)]).unwrap();
        let w = ar_theorem_graph(&g).unwrap().unwrap();
        assert_eq!((w.x1, w.x2, w.s.clone()), (1, 2, vec![3]));
        assert!(ar_theorem_graph(&Graph::complete(4)).unwrap().is_none());
        assert!(ar_theorem_graph(&Graph::new(3, [(1, 2)]).unwrap()).is_err());
    }
}
