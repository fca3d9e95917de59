//! Degree-bounded generation certificates via fiber graphs.
//!
//! The kernel of `x^a T^b ↦ x^a f^b t^{|b|}` modulo `J` is multigraded by the
//! image `w` and the T-degree. In degree `(w, t)` it is spanned by all fiber
//! members when `w ∈ J`, and by their pairwise differences otherwise. A set of
//! monomials and equal-image binomials therefore generates it in that degree
//! iff the fiber graph of binomial moves is connected (`w ∉ J`), or every
//! component reaches a multiple of a monomial generator (`w ∈ J`).
//!
//! Only finitely many fibers need inspection per degree: those at
//! `lcm(f^α, f^β)` for disjoint `α`, `β` of size `t` (the Taylor binomials
//! generate the kernel and common factors reduce to lower degree), and those
//! at the images of the minimal monomials `u` with image in `J`.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use serde::Serialize;

use crate::combinat::multisets;
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;

use super::{kernel_member, Binomial, Generator, MixedMonomial, MonomialMap};

/// Default cap on fiber sizes and on pair enumeration work.
pub const DEFAULT_FIBER_BUDGET: usize = 50_000_000;

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct DegreeStats {
    pub degree: u32,
    pub fibers: usize,
    pub members: usize,
    pub max_fiber: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum PresentationVerdict {
    GeneratesUpTo {
        degree: u32,
    },
    /// A fiber in which the proposed generators fall short, together with a
    /// kernel element they do not reach.
    FailsAt {
        degree: u32,
        image: Monomial,
        fiber: Vec<MixedMonomial>,
        components: usize,
        unreachable: Generator,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PresentationReport {
    pub generators: Vec<Generator>,
    pub max_degree: u32,
    pub per_degree: Vec<DegreeStats>,
    pub verdict: PresentationVerdict,
}

impl PresentationReport {
    pub fn generates(&self) -> bool {
        matches!(self.verdict, PresentationVerdict::GeneratesUpTo { .. })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RelationTypeReport {
    /// T-degrees `t` whose kernel component is not generated by lower degrees.
    pub degrees_needed: Vec<u32>,
    /// `max(degrees_needed)`, a lower bound for the relation type.
    pub rt_lower: u32,
    pub certified_up_to: u32,
    /// For each needed degree, a kernel element outside the ideal of lower degrees.
    pub witnesses: BTreeMap<u32, Generator>,
    pub per_degree: Vec<DegreeStats>,
}

struct Setup<'a> {
    phi: &'a MonomialMap,
    j: Option<&'a MonomialIdeal>,
    budget: usize,
}

impl Setup<'_> {
    fn in_j(&self, w: &Monomial) -> bool {
        self.j.is_some_and(|j| j.contains_unchecked(w))
    }

    /// Images whose fibers decide T-degree `t`, in canonical order.
    fn candidates(&self, t: u32, j_images: &BTreeMap<u32, BTreeSet<Monomial>>) -> Result<Vec<Monomial>> {
        let m = self.phi.len();
        let mut out: BTreeSet<Monomial> = j_images.get(&t).cloned().unwrap_or_default();
        if t >= 1 {
            let seqs = multisets(m, t as usize);
            let work = seqs.len().saturating_mul(seqs.len()) / 2;
            if work > self.budget {
                return Err(Error::ResourceExceeded {
                    what: "fiber candidate pairs",
                    size: work,
                    budget: self.budget,
                });
            }
            let supports: Vec<u64> = seqs
                .iter()
                .map(|s| s.iter().fold(0u64, |acc, &i| acc | (1u64 << (i % 64))))
                .collect();
            let prods = seqs
                .iter()
                .map(|s| self.phi.power_product(&counts(m, s)))
                .collect::<Result<Vec<_>>>()?;
            for a in 0..seqs.len() {
                for b in a + 1..seqs.len() {
                    if m <= 64 && supports[a] & supports[b] != 0 {
                        continue;
                    }
                    if m > 64 && seqs[a].iter().any(|i| seqs[b].contains(i)) {
                        continue;
                    }
                    let w = prods[a].lcm(&prods[b])?;
                    if !self.in_j(&w) {
                        out.insert(w);
                    }
                }
            }
        }
        Ok(out.into_iter().collect())
    }

    /// Images of the minimal monomials `x^a T^b` (`|b| ≤ max_t`) mapping into `J`, by T-degree.
    fn j_images(&self, max_t: u32) -> Result<BTreeMap<u32, BTreeSet<Monomial>>> {
        let Some(j) = self.j else {
            return Ok(BTreeMap::new());
        };
        let n = self.phi.nvars();
        let m = self.phi.len();
        let mut flat = Vec::new();
        for t in 0..=max_t {
            for s in multisets(m, t as usize) {
                let b = counts(m, &s);
                let fb = self.phi.power_product(&b)?;
                for g in j.gens() {
                    let a = g.div(&g.gcd(&fb)?)?.expect("gcd divides");
                    flat.push(MixedMonomial::new(a, b.clone()).flat());
                }
            }
        }
        let minimal = MonomialIdeal::minimize(n + m, flat)?;
        let mut out: BTreeMap<u32, BTreeSet<Monomial>> = BTreeMap::new();
        for u in minimal.gens() {
            let u = MixedMonomial::from_flat(n, u);
            out.entry(u.t_degree()).or_default().insert(self.phi.image(&u)?);
        }
        Ok(out)
    }

    /// All `b` with `|b| = t` and `f^b | w`, in lexicographic order of index sequences.
    fn fiber(&self, w: &Monomial, t: u32) -> Result<Vec<MixedMonomial>> {
        let m = self.phi.len();
        let mut out = Vec::new();
        let mut b = vec![0u32; m];
        self.fiber_rec(0, t, w, &mut b, &mut out)?;
        Ok(out)
    }

    fn fiber_rec(
        &self,
        start: usize,
        left: u32,
        rest: &Monomial,
        b: &mut Vec<u32>,
        out: &mut Vec<MixedMonomial>,
    ) -> Result<()> {
        if left == 0 {
            out.push(MixedMonomial::new(rest.clone(), b.clone()));
            if out.len() > self.budget {
                return Err(Error::ResourceExceeded {
                    what: "fiber",
                    size: out.len(),
                    budget: self.budget,
                });
            }
            return Ok(());
        }
        for i in start..self.phi.len() {
            if let Some(next) = rest.div(&self.phi.images()[i])? {
                b[i] += 1;
                self.fiber_rec(i, left - 1, &next, b, out)?;
                b[i] -= 1;
            }
        }
        Ok(())
    }
}

fn counts(m: usize, seq: &[usize]) -> Vec<u32> {
    let mut t = vec![0u32; m];
    for &i in seq {
        t[i] += 1;
    }
    t
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        Self { parent: (0..n).collect() }
    }

    fn find(&mut self, mut a: usize) -> usize {
        while self.parent[a] != a {
            self.parent[a] = self.parent[self.parent[a]];
            a = self.parent[a];
        }
        a
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }
}

struct FiberFailure {
    components: usize,
    unreachable: Generator,
}

/// Decides a fiber from its union-find structure and absorbed members.
fn judge(members: &[MixedMonomial], uf: &mut UnionFind, absorbed: &[bool], in_j: bool) -> Option<FiberFailure> {
    let roots: Vec<usize> = (0..members.len()).map(|k| uf.find(k)).collect();
    let components = roots.iter().collect::<BTreeSet<_>>().len();
    if !in_j {
        let other = roots.iter().position(|&r| r != roots[0])?;
        let b = Binomial::new(members[0].clone(), members[other].clone()).expect("distinct members");
        return Some(FiberFailure {
            components,
            unreachable: b.into(),
        });
    }
    let mut good = vec![false; members.len()];
    for (k, &r) in roots.iter().enumerate() {
        if absorbed[k] {
            good[r] = true;
        }
    }
    let k = roots.iter().position(|&r| !good[r])?;
    Some(FiberFailure {
        components,
        unreachable: members[k].clone().into(),
    })
}

struct Moves {
    binomials: Vec<(MixedMonomial, MixedMonomial)>,
    monomials: Vec<MixedMonomial>,
}

fn check_with_moves(
    s: &Setup<'_>,
    moves: &Moves,
    w: &Monomial,
    t: u32,
) -> Result<(usize, Option<FiberFailure>)> {
    let members = s.fiber(w, t)?;
    let index: HashMap<&[u32], usize> = members.iter().enumerate().map(|(k, u)| (u.t.as_slice(), k)).collect();
    let mut uf = UnionFind::new(members.len());
    for (k, u) in members.iter().enumerate() {
        for (l, r) in &moves.binomials {
            for (from, to) in [(l, r), (r, l)] {
                if from.t_degree() > t || !from.divides(u) {
                    continue;
                }
                let v = u.div_unchecked(from).mul(to)?;
                debug_assert_eq!(s.phi.image(&v)?, *w, "move changed the image");
                let dest = index[v.t.as_slice()];
                uf.union(k, dest);
            }
        }
    }
    let in_j = s.in_j(w);
    let absorbed: Vec<bool> = members
        .iter()
        .map(|u| in_j && moves.monomials.iter().any(|g| g.divides(u)))
        .collect();
    let failure = judge(&members, &mut uf, &absorbed, in_j);
    Ok((members.len(), failure))
}

fn check_lower(s: &Setup<'_>, w: &Monomial, t: u32) -> Result<(usize, Option<FiberFailure>)> {
    let members = s.fiber(w, t)?;
    let m = s.phi.len();
    let mut uf = UnionFind::new(members.len());
    let mut first_with: Vec<Option<usize>> = vec![None; m];
    for (k, u) in members.iter().enumerate() {
        for (i, slot) in first_with.iter_mut().enumerate() {
            if u.t[i] == 0 {
                continue;
            }
            match *slot {
                None => *slot = Some(k),
                Some(f) => uf.union(f, k),
            }
        }
    }
    let in_j = s.in_j(w);
    let absorbed: Vec<bool> = members
        .iter()
        .map(|u| {
            in_j && (s.in_j(&u.x)
                || (0..m).any(|i| {
                    u.t[i] > 0 && s.in_j(&w.div(&s.phi.images()[i]).expect("same context").expect("f_i divides"))
                }))
        })
        .collect();
    let failure = judge(&members, &mut uf, &absorbed, in_j);
    Ok((members.len(), failure))
}

type FiberResult = Result<(usize, Option<FiberFailure>)>;

fn run_fibers<F>(cands: &[Monomial], f: F) -> Vec<FiberResult>
where
    F: Fn(&Monomial) -> FiberResult + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        cands.par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        cands.iter().map(f).collect()
    }
}

fn validate(phi: &MonomialMap, gens: &[Generator], j: Option<&MonomialIdeal>) -> Result<Moves> {
    if let Some(j) = j {
        if j.nvars() != phi.nvars() {
            return Err(Error::ContextMismatch {
                left: phi.nvars(),
                right: j.nvars(),
            });
        }
    }
    let mut moves = Moves {
        binomials: Vec::new(),
        monomials: Vec::new(),
    };
    for g in gens {
        if !kernel_member(phi, g, j)? {
            return Err(Error::NotInKernel(g.to_string()));
        }
        match g {
            Generator::Monomial { term } => moves.monomials.push(term.clone()),
            Generator::Binomial { binomial } => {
                if phi.image(&binomial.lead)? != phi.image(&binomial.trail)? {
                    return Err(Error::Invalid(format!(
                        "binomial {binomial} lies in the kernel only because both terms map into J; \
                         list its terms as monomial generators instead"
                    )));
                }
                moves.binomials.push((binomial.lead.clone(), binomial.trail.clone()));
            }
        }
    }
    Ok(moves)
}

/// Whether `gens` generate the kernel (modulo `J` if given) in every T-degree `≤ max_degree`.
pub fn generation_check(
    phi: &MonomialMap,
    gens: &[Generator],
    max_degree: u32,
    mod_j: Option<&MonomialIdeal>,
    budget: usize,
) -> Result<PresentationReport> {
    if max_degree == 0 {
        return Err(Error::OutOfRange("degree bound must be at least 1".into()));
    }
    let moves = validate(phi, gens, mod_j)?;
    let s = Setup { phi, j: mod_j, budget };
    let j_images = s.j_images(max_degree)?;
    let mut per_degree = Vec::new();
    for t in 0..=max_degree {
        let cands = s.candidates(t, &j_images)?;
        let results = run_fibers(&cands, |w| check_with_moves(&s, &moves, w, t));
        let mut stats = DegreeStats {
            degree: t,
            ..Default::default()
        };
        for (w, res) in cands.iter().zip(results) {
            let (size, failure) = res?;
            stats.fibers += 1;
            stats.members += size;
            stats.max_fiber = stats.max_fiber.max(size);
            if let Some(f) = failure {
                per_degree.push(stats);
                let fiber = s.fiber(w, t)?;
                return Ok(PresentationReport {
                    generators: gens.to_vec(),
                    max_degree,
                    per_degree,
                    verdict: PresentationVerdict::FailsAt {
                        degree: t,
                        image: w.clone(),
                        fiber,
                        components: f.components,
                        unreachable: f.unreachable,
                    },
                });
            }
        }
        per_degree.push(stats);
    }
    Ok(PresentationReport {
        generators: gens.to_vec(),
        max_degree,
        per_degree,
        verdict: PresentationVerdict::GeneratesUpTo { degree: max_degree },
    })
}

/// For each `1 ≤ t ≤ max_degree`, whether the T-degree-`t` part of the kernel
/// (modulo `J` if given) needs generators beyond those of lower degree.
pub fn relation_type_bounded(
    phi: &MonomialMap,
    max_degree: u32,
    mod_j: Option<&MonomialIdeal>,
    budget: usize,
) -> Result<RelationTypeReport> {
    if max_degree == 0 {
        return Err(Error::OutOfRange("degree bound must be at least 1".into()));
    }
    if let Some(j) = mod_j {
        if j.nvars() != phi.nvars() {
            return Err(Error::ContextMismatch {
                left: phi.nvars(),
                right: j.nvars(),
            });
        }
    }
    let s = Setup { phi, j: mod_j, budget };
    let j_images = s.j_images(max_degree)?;
    let mut needed = Vec::new();
    let mut witnesses = BTreeMap::new();
    let mut per_degree = Vec::new();
    for t in 1..=max_degree {
        let cands = s.candidates(t, &j_images)?;
        let results = run_fibers(&cands, |w| check_lower(&s, w, t));
        let mut stats = DegreeStats {
            degree: t,
            ..Default::default()
        };
        for res in results {
            let (size, failure) = res?;
            stats.fibers += 1;
            stats.members += size;
            stats.max_fiber = stats.max_fiber.max(size);
            if let Some(f) = failure {
                if let std::collections::btree_map::Entry::Vacant(e) = witnesses.entry(t) {
                    needed.push(t);
                    e.insert(f.unreachable);
                }
            }
        }
        per_degree.push(stats);
    }
    Ok(RelationTypeReport {
        rt_lower: needed.iter().copied().max().unwrap_or(0),
        degrees_needed: needed,
        certified_up_to: max_degree,
        witnesses,
        per_degree,
    })
}
