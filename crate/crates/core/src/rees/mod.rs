//! Rees-algebra presentations of monomial ideals and of their quotients `I/J`.
//!
//! A [`MonomialMap`] sends `T_i` to the `i`-th generator `f_i` of `I` (tagged
//! with degree 1 in `t`). Its kernel, and the kernel of the induced map onto
//! the Rees algebra of `I/J`, are spanned degree by degree by monomials and
//! binomials; [`generation_check`] and [`relation_type_bounded`] decide, up to
//! a degree bound, whether a proposed generating set suffices by testing
//! connectivity of fiber graphs.

mod families;
mod fiber;
mod present;

use std::cmp::Ordering;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;

pub use families::{
    barshay_relations, dpartite_relations, even_cycle_binomials, even_walk_binomials, symmetric_relations,
    taylor_relations,
};
pub use fiber::{
    generation_check, relation_type_bounded, DegreeStats, PresentationReport, PresentationVerdict,
    RelationTypeReport, DEFAULT_FIBER_BUDGET,
};
pub use present::{assemble_quotient_presentation, degree_one_lifts, Family};

/// A monomial `x^a T^b` of `R[T_1..T_m]`; its T-degree is `|b|`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct MixedMonomial {
    pub x: Monomial,
    pub t: Vec<u32>,
}

impl MixedMonomial {
    pub fn new(x: Monomial, t: Vec<u32>) -> Self {
        Self { x, t }
    }

    /// `T_i` (zero-based).
    pub fn t_var(n: usize, m: usize, i: usize) -> Self {
        let mut t = vec![0; m];
        t[i] = 1;
        Self { x: Monomial::one(n), t }
    }

    pub fn t_degree(&self) -> u32 {
        self.t.iter().sum()
    }

    pub fn divides(&self, other: &Self) -> bool {
        self.x.divides_unchecked(&other.x) && self.t.iter().zip(&other.t).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        let x = self.x.mul(&other.x)?;
        let t = self
            .t
            .iter()
            .zip(&other.t)
            .map(|(a, b)| a.checked_add(*b).ok_or(Error::ExponentOverflow))
            .collect::<Result<_>>()?;
        Ok(Self { x, t })
    }

    /// `self / other`, assuming `other | self`.
    fn div_unchecked(&self, other: &Self) -> Self {
        let x = self.x.div(&other.x).expect("same context").expect("divides");
        let t = self.t.iter().zip(&other.t).map(|(a, b)| a - b).collect();
        Self { x, t }
    }

    /// Single exponent vector `(x, T)` used for ordering and minimization.
    fn flat(&self) -> Monomial {
        let exps = self.x.exps().iter().chain(&self.t).copied().collect();
        Monomial::new(exps).expect("degrees fit")
    }

    fn from_flat(n: usize, m: &Monomial) -> Self {
        let e = m.exps();
        Self {
            x: Monomial::new(e[..n].to_vec()).expect("prefix"),
            t: e[n..].to_vec(),
        }
    }
}

/// Graded lexicographic with `x1 > ... > xn > T1 > ... > Tm`.
impl Ord for MixedMonomial {
    fn cmp(&self, other: &Self) -> Ordering {
        let deg = |u: &Self| u.x.degree() + u.t_degree();
        deg(self)
            .cmp(&deg(other))
            .then_with(|| self.x.exps().cmp(other.x.exps()))
            .then_with(|| self.t.cmp(&other.t))
    }
}

impl PartialOrd for MixedMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for MixedMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if !self.x.is_one() {
            parts.push(self.x.to_string());
        }
        for (i, &e) in self.t.iter().enumerate() {
            match e {
                0 => {}
                1 => parts.push(format!("T{}", i + 1)),
                _ => parts.push(format!("T{}^{}", i + 1, e)),
            }
        }
        if parts.is_empty() {
            return f.write_str("1");
        }
        f.write_str(&parts.join("*"))
    }
}

/// `lead - trail` with `lead > trail` in the graded-lex order on `(x, T)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Binomial {
    pub lead: MixedMonomial,
    pub trail: MixedMonomial,
}

impl Binomial {
    /// `u - v` up to sign, or `None` when `u = v`.
    pub fn new(u: MixedMonomial, v: MixedMonomial) -> Option<Self> {
        match u.cmp(&v) {
            Ordering::Equal => None,
            Ordering::Greater => Some(Self { lead: u, trail: v }),
            Ordering::Less => Some(Self { lead: v, trail: u }),
        }
    }
}

impl fmt::Display for Binomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} - {}", self.lead, self.trail)
    }
}

/// A proposed element of a defining ideal.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Generator {
    Monomial { term: MixedMonomial },
    Binomial { binomial: Binomial },
}

impl Generator {
    pub fn t_degree(&self) -> u32 {
        match self {
            Generator::Monomial { term } => term.t_degree(),
            Generator::Binomial { binomial } => binomial.lead.t_degree(),
        }
    }
}

impl From<Binomial> for Generator {
    fn from(binomial: Binomial) -> Self {
        Generator::Binomial { binomial }
    }
}

impl From<MixedMonomial> for Generator {
    fn from(term: MixedMonomial) -> Self {
        Generator::Monomial { term }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::Monomial { term } => write!(f, "{term}"),
            Generator::Binomial { binomial } => write!(f, "{binomial}"),
        }
    }
}

/// `T_i ↦ f_i t`, the substitution defining the Rees algebra of `(f_1..f_m)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MonomialMap {
    nvars: usize,
    images: Vec<Monomial>,
}

impl MonomialMap {
    pub fn new(nvars: usize, images: Vec<Monomial>) -> Result<Self> {
        if images.is_empty() {
            return Err(Error::ZeroIdeal);
        }
        for (k, f) in images.iter().enumerate() {
            if f.nvars() != nvars {
                return Err(Error::ContextMismatch {
                    left: nvars,
                    right: f.nvars(),
                });
            }
            if images[..k].contains(f) {
                return Err(Error::Invalid(format!("image {f} listed twice")));
            }
        }
        Ok(Self { nvars, images })
    }

    /// `T_i ↦ f_i` for the minimal generators in canonical order.
    pub fn from_ideal(i: &MonomialIdeal) -> Result<Self> {
        Self::new(i.nvars(), i.gens().to_vec())
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn images(&self) -> &[Monomial] {
        &self.images
    }

    /// Zero-based index of the variable mapped to `f`.
    pub fn index_of(&self, f: &Monomial) -> Option<usize> {
        self.images.iter().position(|g| g == f)
    }

    pub fn t_var(&self, i: usize) -> MixedMonomial {
        MixedMonomial::t_var(self.nvars, self.images.len(), i)
    }

    /// `x^a T^b ↦ x^a f^b`.
    pub fn image(&self, u: &MixedMonomial) -> Result<Monomial> {
        if u.x.nvars() != self.nvars || u.t.len() != self.images.len() {
            return Err(Error::Invalid(format!("{u} does not live in this map's ring")));
        }
        let mut acc = u.x.clone();
        for (f, &e) in self.images.iter().zip(&u.t) {
            if e > 0 {
                acc = acc.mul(&f.pow(e)?)?;
            }
        }
        Ok(acc)
    }

    /// `f^b` for a T-exponent vector.
    pub(crate) fn power_product(&self, b: &[u32]) -> Result<Monomial> {
        self.image(&MixedMonomial::new(Monomial::one(self.nvars), b.to_vec()))
    }
}

/// Whether `g` lies in the kernel of `x^a T^b ↦ x^a f^b t^{|b|}`, taken
/// modulo `J` when given. Binomials must be homogeneous in `T`.
pub fn kernel_member(phi: &MonomialMap, g: &Generator, mod_j: Option<&MonomialIdeal>) -> Result<bool> {
    let in_j = |m: &Monomial| mod_j.is_some_and(|j| j.contains_unchecked(m));
    match g {
        Generator::Monomial { term } => Ok(in_j(&phi.image(term)?)),
        Generator::Binomial { binomial } => {
            if binomial.lead.t_degree() != binomial.trail.t_degree() {
                return Err(Error::Inhomogeneous(binomial.to_string()));
            }
            let a = phi.image(&binomial.lead)?;
            let b = phi.image(&binomial.trail)?;
            Ok(a == b || (in_j(&a) && in_j(&b)))
        }
    }
}
