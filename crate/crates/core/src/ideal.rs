//! Monomial ideals in canonical form and their arithmetic.

use std::fmt;

use crate::error::{Error, Result};
use crate::monomial::{Monomial, RingContext};

/// A monomial ideal, stored as its minimal generating set in canonical order.
///
/// The generators form a divisibility antichain sorted by [`Monomial`]'s
/// graded-lex order, so two ideals are equal iff their generator lists are.
/// The zero ideal has no generators and the unit ideal is generated by `1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    nvars: usize,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    pub fn zero(nvars: usize) -> Self {
        Self {
            nvars,
            gens: Vec::new(),
        }
    }

    pub fn unit(nvars: usize) -> Self {
        Self {
            nvars,
            gens: vec![Monomial::one(nvars)],
        }
    }

    /// Minimal generators of the ideal generated by `gens`.
    pub fn minimize(nvars: usize, gens: impl IntoIterator<Item = Monomial>) -> Result<Self> {
        let mut all: Vec<Monomial> = Vec::new();
        for g in gens {
            if g.nvars() != nvars {
                return Err(Error::ContextMismatch {
                    left: nvars,
                    right: g.nvars(),
                });
            }
            all.push(g);
        }
        Ok(Self {
            nvars,
            gens: minimal_antichain(all),
        })
    }

    pub fn from_exponents(nvars: usize, rows: &[Vec<u32>]) -> Result<Self> {
        let gens = rows
            .iter()
            .map(|r| Monomial::new(r.clone()))
            .collect::<Result<Vec<_>>>()?;
        Self::minimize(nvars, gens)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_one()
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::ContextMismatch {
                left: self.nvars,
                right: other.nvars,
            });
        }
        Ok(())
    }

    pub fn contains(&self, m: &Monomial) -> Result<bool> {
        if m.nvars() != self.nvars {
            return Err(Error::ContextMismatch {
                left: self.nvars,
                right: m.nvars(),
            });
        }
        Ok(self.contains_unchecked(m))
    }

    pub(crate) fn contains_unchecked(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides_unchecked(m))
    }

    pub fn sum(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Self::minimize(
            self.nvars,
            self.gens.iter().chain(other.gens.iter()).cloned(),
        )
    }

    pub fn product(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut prods = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                prods.push(a.mul(b)?);
            }
        }
        Self::minimize(self.nvars, prods)
    }

    /// `self^t`, interreducing after every multiplication. `t = 0` gives the unit ideal.
    pub fn power(&self, t: u32) -> Result<Self> {
        let mut acc = Self::unit(self.nvars);
        for _ in 0..t {
            acc = acc.product(self)?;
        }
        Ok(acc)
    }

    pub fn intersect(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut lcms = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                lcms.push(a.lcm(b)?);
            }
        }
        Self::minimize(self.nvars, lcms)
    }

    /// `self ⊆ other`.
    pub fn is_subset(&self, other: &Self) -> Result<bool> {
        self.check(other)?;
        Ok(self.gens.iter().all(|g| other.contains_unchecked(g)))
    }

    /// Largest degree of a minimal generator.
    pub fn t0(&self) -> Result<u32> {
        self.gens
            .iter()
            .map(Monomial::degree)
            .max()
            .ok_or(Error::ZeroIdeal)
    }

    /// Smallest degree of a minimal generator.
    pub fn indeg(&self) -> Result<u32> {
        self.gens
            .iter()
            .map(Monomial::degree)
            .min()
            .ok_or(Error::ZeroIdeal)
    }

    /// Height of the radical: the minimum number of variables meeting the
    /// support of every generator.
    pub fn height(&self) -> Result<usize> {
        if self.is_zero() {
            return Err(Error::ZeroIdeal);
        }
        if self.is_unit() {
            return Err(Error::UnitIdeal);
        }
        let supports: Vec<Vec<usize>> = self.gens.iter().map(Monomial::support).collect();
        Ok(min_hitting_set(self.nvars, &supports).len())
    }

    pub fn render(&self, ctx: &RingContext) -> String {
        let parts: Vec<String> = self.gens.iter().map(|g| ctx.render(g)).collect();
        format!("({})", parts.join(", "))
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("(0)");
        }
        let parts: Vec<String> = self.gens.iter().map(|g| g.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// All monomials of degree `d` in `n` variables: the ideal `m^d`.
pub fn power_maximal(n: usize, d: u32) -> Result<MonomialIdeal> {
    if n == 0 {
        return Err(Error::OutOfRange("need at least one variable".into()));
    }
    let mut out = Vec::new();
    let mut cur = vec![0u32; n];
    compositions(n, d, 0, &mut cur, &mut out);
    MonomialIdeal::minimize(n, out.into_iter().map(|e| Monomial::new(e).unwrap()))
}

fn compositions(n: usize, left: u32, i: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    if i == n - 1 {
        cur[i] = left;
        out.push(cur.clone());
        return;
    }
    for e in (0..=left).rev() {
        cur[i] = e;
        compositions(n, left - e, i + 1, cur, out);
    }
    cur[i] = 0;
}

/// All squarefree monomials of degree `d` in `n` variables: `m^[d]`.
pub fn squarefree_power(n: usize, d: usize) -> Result<MonomialIdeal> {
    if d == 0 || d > n {
        return Err(Error::OutOfRange(format!(
            "squarefree power needs 1 <= d <= n, got d={d}, n={n}"
        )));
    }
    let gens = crate::combinat::subsets(n, d)
        .into_iter()
        .map(|s| {
            let verts: Vec<usize> = s.iter().map(|&i| i + 1).collect();
            Monomial::squarefree(n, &verts)
        })
        .collect::<Result<Vec<_>>>()?;
    MonomialIdeal::minimize(n, gens)
}

/// Sort ascending in graded-lex, drop duplicates and anything divisible by
/// an earlier survivor.
pub(crate) fn minimal_antichain(mut all: Vec<Monomial>) -> Vec<Monomial> {
    all.sort_unstable();
    all.dedup();
    let mut kept: Vec<Monomial> = Vec::with_capacity(all.len());
    for m in all {
        // A divisor has degree <= m's, so it is already in `kept`.
        if !kept.iter().any(|k| k.divides_unchecked(&m)) {
            kept.push(m);
        }
    }
    kept
}

/// Exhaustive minimum hitting set with branch and bound. Returns zero-based indices.
pub(crate) fn min_hitting_set(n: usize, sets: &[Vec<usize>]) -> Vec<usize> {
    let mut masks: Vec<Vec<bool>> = sets
        .iter()
        .map(|s| {
            let mut m = vec![false; n];
            for &v in s {
                m[v] = true;
            }
            m
        })
        .collect();
    masks.sort_by_key(|m| m.iter().filter(|&&b| b).count());
    masks.dedup();

    // Greedy upper bound.
    let mut best: Vec<usize> = {
        let mut chosen = vec![false; n];
        let mut out = Vec::new();
        loop {
            let uncovered: Vec<&Vec<bool>> = masks
                .iter()
                .filter(|m| !(0..n).any(|v| m[v] && chosen[v]))
                .collect();
            if uncovered.is_empty() {
                break;
            }
            let v = (0..n)
                .filter(|&v| !chosen[v])
                .max_by_key(|&v| (uncovered.iter().filter(|m| m[v]).count(), std::cmp::Reverse(v)))
                .unwrap();
            chosen[v] = true;
            out.push(v);
        }
        out.sort_unstable();
        out
    };

    fn search(
        masks: &[Vec<bool>],
        chosen: &mut Vec<bool>,
        picked: &mut Vec<usize>,
        best: &mut Vec<usize>,
    ) {
        if picked.len() >= best.len() {
            return;
        }
        let n = chosen.len();
        let uncovered = masks
            .iter()
            .filter(|m| !(0..n).any(|v| m[v] && chosen[v]))
            .min_by_key(|m| m.iter().filter(|&&b| b).count());
        let Some(edge) = uncovered else {
            let mut sol = picked.clone();
            sol.sort_unstable();
            *best = sol;
            return;
        };
        if picked.len() + 1 >= best.len() {
            return;
        }
        let edge = edge.clone();
        for v in 0..n {
            if edge[v] {
                chosen[v] = true;
                picked.push(v);
                search(masks, chosen, picked, best);
                picked.pop();
                chosen[v] = false;
            }
        }
    }

    let mut chosen = vec![false; n];
    let mut picked = Vec::new();
    search(&masks, &mut chosen, &mut picked, &mut best);
    best
}

impl serde::Serialize for MonomialIdeal {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let rows: Vec<&[u32]> = self.gens.iter().map(Monomial::exps).collect();
        rows.serialize(s)
    }
}

/// Strategy for the three operations whose cost dominates VV computations.
///
/// [`Interreduced`] is the production path; [`crate::oracle::Naive`] minimizes
/// only at the very end and serves as an independent cross-check.
pub trait IdealArithmetic: Sync {
    fn product(&self, a: &MonomialIdeal, b: &MonomialIdeal) -> Result<MonomialIdeal>;
    fn power(&self, a: &MonomialIdeal, t: u32) -> Result<MonomialIdeal>;
    fn intersect(&self, a: &MonomialIdeal, b: &MonomialIdeal) -> Result<MonomialIdeal>;
}

#[derive(Debug, Clone, Copy, Default)]
pub struct Interreduced;

impl IdealArithmetic for Interreduced {
    fn product(&self, a: &MonomialIdeal, b: &MonomialIdeal) -> Result<MonomialIdeal> {
        a.product(b)
    }

    fn power(&self, a: &MonomialIdeal, t: u32) -> Result<MonomialIdeal> {
        a.power(t)
    }

    fn intersect(&self, a: &MonomialIdeal, b: &MonomialIdeal) -> Result<MonomialIdeal> {
        a.intersect(b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec()).unwrap()
    }

    fn ideal(n: usize, rows: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::minimize(n, rows.iter().map(|r| m(r))).unwrap()
    }

    #[test]
    fn minimize_examples() {
        let i = ideal(3, &[&[1, 1, 0], &[1, 1, 1], &[0, 2, 0]]);
        assert_eq!(i.gens(), &[m(&[1, 1, 0]), m(&[0, 2, 0])]);
        assert!(ideal(3, &[]).is_zero());
        let u = ideal(2, &[&[0, 0], &[1, 0]]);
        assert!(u.is_unit());
        assert_eq!(u, MonomialIdeal::unit(2));
    }

    #[test]
    fn minimize_rejects_mixed_contexts() {
        assert!(MonomialIdeal::minimize(2, vec![m(&[1, 0]), m(&[1])]).is_err());
    }

    #[test]
    fn contains_examples() {
        let i = ideal(3, &[&[1, 1, 0], &[0, 2, 0]]);
        assert!(i.contains(&m(&[1, 1, 1])).unwrap());
        let j = ideal(3, &[&[1, 1, 0]]);
        assert!(!j.contains(&m(&[1, 0, 1])).unwrap());
        let z = MonomialIdeal::zero(3);
        assert!(!z.contains(&m(&[0, 0, 0])).unwrap());
        assert!(!z.contains(&m(&[5, 5, 5])).unwrap());
    }

    #[test]
    fn products_and_powers() {
        let mx = ideal(2, &[&[1, 0], &[0, 1]]);
        assert_eq!(
            mx.product(&mx).unwrap(),
            ideal(2, &[&[2, 0], &[1, 1], &[0, 2]])
        );
        let a = ideal(4, &[&[1, 1, 0, 0], &[0, 0, 1, 1]]);
        assert_eq!(
            a.power(2).unwrap(),
            ideal(4, &[&[2, 2, 0, 0], &[1, 1, 1, 1], &[0, 0, 2, 2]])
        );
        assert_eq!(a.power(1).unwrap(), a);
        assert!(a.power(0).unwrap().is_unit());
        assert!(MonomialIdeal::zero(2).power(3).unwrap().is_zero());
    }

    #[test]
    fn intersections() {
        let x1 = ideal(3, &[&[1, 0, 0]]);
        let x2 = ideal(3, &[&[0, 1, 0]]);
        assert_eq!(x1.intersect(&x2).unwrap(), ideal(3, &[&[1, 1, 0]]));
        let a = ideal(3, &[&[1, 1, 0]]);
        let b = ideal(3, &[&[1, 0, 1], &[0, 1, 1]]);
        assert_eq!(a.intersect(&b).unwrap(), ideal(3, &[&[1, 1, 1]]));
        assert_eq!(b.intersect(&b).unwrap(), b);
        assert!(a.intersect(&MonomialIdeal::zero(3)).unwrap().is_zero());
        assert_eq!(a.intersect(&MonomialIdeal::unit(3)).unwrap(), a);
    }

    #[test]
    fn equality_and_subset() {
        let a = ideal(2, &[&[1, 1], &[0, 2]]);
        let b = ideal(2, &[&[0, 2], &[1, 1], &[1, 2]]);
        assert_eq!(a, b);
        let x1sq = ideal(1, &[&[2]]);
        let x1 = ideal(1, &[&[1]]);
        assert!(x1sq.is_subset(&x1).unwrap());
        assert!(!x1.is_subset(&x1sq).unwrap());
    }

    #[test]
    fn degrees() {
        let tri = ideal(3, &[&[1, 1, 0], &[1, 0, 1], &[0, 1, 1]]);
        assert_eq!(tri.t0().unwrap(), 2);
        let mixed = ideal(5, &[&[1, 1, 0, 0, 0], &[0, 0, 1, 1, 1]]);
        assert_eq!(mixed.t0().unwrap(), 3);
        assert_eq!(mixed.indeg().unwrap(), 2);
        assert_eq!(squarefree_power(5, 3).unwrap().t0().unwrap(), 3);
        assert_eq!(MonomialIdeal::zero(2).t0().unwrap_err(), Error::ZeroIdeal);
    }

    #[test]
    fn maximal_powers() {
        assert_eq!(
            squarefree_power(3, 2).unwrap(),
            ideal(3, &[&[1, 1, 0], &[1, 0, 1], &[0, 1, 1]])
        );
        assert_eq!(
            power_maximal(2, 2).unwrap().gens(),
            &[m(&[2, 0]), m(&[1, 1]), m(&[0, 2])]
        );
        assert_eq!(squarefree_power(3, 3).unwrap(), ideal(3, &[&[1, 1, 1]]));
        assert!(squarefree_power(3, 4).is_err());
        assert!(squarefree_power(3, 0).is_err());
        assert_eq!(power_maximal(3, 4).unwrap().len(), 15);
    }

    #[test]
    fn heights() {
        let tri = ideal(3, &[&[1, 1, 0], &[1, 0, 1], &[0, 1, 1]]);
        assert_eq!(tri.height().unwrap(), 2);
        let two = ideal(4, &[&[1, 1, 0, 0], &[0, 0, 1, 1]]);
        assert_eq!(two.height().unwrap(), 2);
        assert_eq!(ideal(1, &[&[5]]).height().unwrap(), 1);
        assert_eq!(MonomialIdeal::zero(2).height().unwrap_err(), Error::ZeroIdeal);
        assert_eq!(MonomialIdeal::unit(2).height().unwrap_err(), Error::UnitIdeal);
    }

    #[test]
    fn hitting_set_matches_enumeration() {
        // C5: minimum vertex cover has size 3.
        let c5: Vec<Vec<usize>> = (0..5).map(|i| vec![i, (i + 1) % 5]).collect();
        assert_eq!(min_hitting_set(5, &c5).len(), 3);
        // K4: 3.
        let k4: Vec<Vec<usize>> = crate::combinat::subsets(4, 2);
        assert_eq!(min_hitting_set(4, &k4).len(), 3);
    }
}
