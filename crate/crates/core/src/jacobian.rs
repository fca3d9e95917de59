//! Jacobian matrices of monomial ideals, their exact minors over the rationals,
//! and the Jacobian ideal `(J, I_r(Θ))` with `r = ht(J)`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use crate::clutter::{alpha, Clutter};
use crate::combinat::subsets;
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;
use crate::vv::{vv_vanishes, VvReport};

/// Default cap on the number of square submatrices enumerated by [`minors_ideal`].
pub const DEFAULT_MINOR_BUDGET: usize = 2_000_000;

/// A scalar multiple of a monomial. The zero term has coefficient 0 and monomial 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Term {
    pub coeff: BigRational,
    pub mono: Monomial,
}

impl Term {
    pub fn zero(n: usize) -> Self {
        Self {
            coeff: BigRational::zero(),
            mono: Monomial::one(n),
        }
    }

    pub fn new(coeff: BigRational, mono: Monomial) -> Self {
        if coeff.is_zero() {
            return Self::zero(mono.nvars());
        }
        Self { coeff, mono }
    }

    pub fn is_zero(&self) -> bool {
        self.coeff.is_zero()
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        if self.coeff.is_one() {
            write!(f, "{}", self.mono)
        } else if self.mono.is_one() {
            write!(f, "{}", self.coeff)
        } else {
            write!(f, "{}*{}", self.coeff, self.mono)
        }
    }
}

/// A dense matrix of terms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TermMatrix {
    rows: usize,
    cols: usize,
    nvars: usize,
    entries: Vec<Term>,
}

impl TermMatrix {
    pub fn new(nvars: usize, grid: Vec<Vec<Term>>) -> Result<Self> {
        let rows = grid.len();
        let cols = grid.first().map_or(0, Vec::len);
        let mut entries = Vec::with_capacity(rows * cols);
        for row in grid {
            if row.len() != cols {
                return Err(Error::Invalid("ragged term matrix".into()));
            }
            for t in row {
                if t.mono.nvars() != nvars {
                    return Err(Error::ContextMismatch {
                        left: nvars,
                        right: t.mono.nvars(),
                    });
                }
                entries.push(t);
            }
        }
        Ok(Self {
            rows,
            cols,
            nvars,
            entries,
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn get(&self, i: usize, j: usize) -> &Term {
        &self.entries[i * self.cols + j]
    }
}

impl fmt::Display for TermMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// A sparse polynomial with rational coefficients; zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, BigRational>,
}

impl Polynomial {
    pub fn one(n: usize) -> Self {
        Self {
            terms: BTreeMap::from([(Monomial::one(n), BigRational::one())]),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in descending graded lexicographic order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        let mut out: Vec<_> = self.terms.iter().collect();
        out.sort_by(|a, b| b.0.degree().cmp(&a.0.degree()).then_with(|| b.0.exps().cmp(a.0.exps())));
        out.into_iter()
    }

    pub fn add_term(&mut self, mono: Monomial, coeff: BigRational) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(mono) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&mut self, other: &Polynomial) {
        for (m, c) in &other.terms {
            self.add_term(m.clone(), c.clone());
        }
    }

    /// `self += sign * p * term`.
    fn add_scaled(&mut self, p: &Polynomial, term: &Term, negate: bool) -> Result<()> {
        for (m, c) in &p.terms {
            let mut coeff = c * &term.coeff;
            if negate {
                coeff = -coeff;
            }
            self.add_term(m.mul(&term.mono)?, coeff);
        }
        Ok(())
    }

    pub fn single_term(&self) -> Option<Term> {
        if self.terms.len() != 1 {
            return None;
        }
        let (m, c) = self.terms.iter().next().unwrap();
        Some(Term::new(c.clone(), m.clone()))
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms()
            .map(|(m, c)| Term::new(c.clone(), m.clone()).to_string())
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

impl Serialize for Polynomial {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let list: Vec<(String, &Monomial)> = self.terms().map(|(m, c)| (c.to_string(), m)).collect();
        list.serialize(s)
    }
}

/// `Θ = [∂f_i/∂x_j]` over the minimal generators of `J` in canonical order.
pub fn jacobian_matrix(j: &MonomialIdeal) -> Result<TermMatrix> {
    if j.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    let n = j.nvars();
    let grid = j
        .gens()
        .iter()
        .map(|f| {
            (0..n)
                .map(|v| {
                    let e = f.exp(v);
                    if e == 0 {
                        return Term::zero(n);
                    }
                    let mono = f.div(&Monomial::var(n, v)).expect("same context").expect("divides");
                    Term::new(BigRational::from_integer(BigInt::from(e)), mono)
                })
                .collect()
        })
        .collect();
    TermMatrix::new(n, grid)
}

/// Whether the nonzero pattern of the submatrix admits a perfect matching.
pub fn has_transversal(m: &TermMatrix, rows: &[usize], cols: &[usize]) -> bool {
    let r = rows.len();
    let mut match_col: Vec<Option<usize>> = vec![None; r];
    fn augment(
        m: &TermMatrix,
        rows: &[usize],
        cols: &[usize],
        i: usize,
        seen: &mut [bool],
        match_col: &mut [Option<usize>],
    ) -> bool {
        for c in 0..cols.len() {
            if seen[c] || m.get(rows[i], cols[c]).is_zero() {
                continue;
            }
            seen[c] = true;
            if match_col[c].is_none_or(|k| augment(m, rows, cols, k, seen, match_col)) {
                match_col[c] = Some(i);
                return true;
            }
        }
        false
    }
    (0..r).all(|i| augment(m, rows, cols, i, &mut vec![false; r], &mut match_col))
}

/// Determinant by dynamic programming over column subsets, merging equal
/// monomials as they appear.
pub fn determinant(m: &TermMatrix, rows: &[usize], cols: &[usize]) -> Result<Polynomial> {
    let r = rows.len();
    if r != cols.len() {
        return Err(Error::Invalid("determinant of a non-square submatrix".into()));
    }
    let full = 1usize << r;
    let mut dp: Vec<Polynomial> = vec![Polynomial::default(); full];
    dp[0] = Polynomial::one(m.nvars);
    for mask in 0..full {
        let k = mask.count_ones() as usize;
        if k >= r || dp[mask].is_zero() {
            continue;
        }
        let cur = std::mem::take(&mut dp[mask]);
        for c in 0..r {
            if mask & (1 << c) != 0 {
                continue;
            }
            let entry = m.get(rows[k], cols[c]);
            if entry.is_zero() {
                continue;
            }
            let negate = (mask >> (c + 1)).count_ones() % 2 == 1;
            let mut next = std::mem::take(&mut dp[mask | (1 << c)]);
            next.add_scaled(&cur, entry, negate)?;
            dp[mask | (1 << c)] = next;
        }
        dp[mask] = cur;
    }
    Ok(std::mem::take(&mut dp[full - 1]))
}

/// A minor with more than one term after cancellation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MixedMinorEntry {
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
    pub poly: Polynomial,
}

/// The `r`-minors of a term matrix. Row and column indices are zero-based.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MinorsReport {
    pub r: usize,
    /// Ideal generated by the single-term minors.
    pub term_minors: MonomialIdeal,
    /// Coefficient of the first single-term minor found for each minimal generator.
    #[serde(serialize_with = "ser_coefficients")]
    pub coefficients: BTreeMap<Monomial, BigRational>,
    pub mixed_minors: Vec<MixedMinorEntry>,
    pub evaluated: usize,
    pub pruned: usize,
    pub zero: usize,
}

fn ser_coefficients<S: Serializer>(
    map: &BTreeMap<Monomial, BigRational>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    let list: Vec<(&Monomial, String)> = map.iter().map(|(m, c)| (m, c.to_string())).collect();
    list.serialize(s)
}

enum MinorOutcome {
    Pruned,
    Zero,
    Term(Term),
    Mixed(Polynomial),
}

fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

pub fn minors_ideal(m: &TermMatrix, r: usize, budget: usize) -> Result<MinorsReport> {
    if r == 0 || r > m.rows.min(m.cols) {
        return Err(Error::OutOfRange(format!(
            "minor size {r} outside 1..={}",
            m.rows.min(m.cols)
        )));
    }
    let count = binomial(m.rows, r).saturating_mul(binomial(m.cols, r));
    if count > budget as u128 {
        return Err(Error::ResourceExceeded {
            what: "minors_ideal",
            size: usize::try_from(count).unwrap_or(usize::MAX),
            budget,
        });
    }
    let row_sets = subsets(m.rows, r);
    let col_sets = subsets(m.cols, r);
    let pairs: Vec<(&Vec<usize>, &Vec<usize>)> = row_sets
        .iter()
        .flat_map(|rs| col_sets.iter().map(move |cs| (rs, cs)))
        .collect();
    let eval = |&(rs, cs): &(&Vec<usize>, &Vec<usize>)| -> Result<MinorOutcome> {
        if !has_transversal(m, rs, cs) {
            return Ok(MinorOutcome::Pruned);
        }
        let det = determinant(m, rs, cs)?;
        Ok(match det.len() {
            0 => MinorOutcome::Zero,
            1 => MinorOutcome::Term(det.single_term().unwrap()),
            _ => MinorOutcome::Mixed(det),
        })
    };
    #[cfg(feature = "parallel")]
    let outcomes: Vec<Result<MinorOutcome>> = {
        use rayon::prelude::*;
        pairs.par_iter().map(eval).collect()
    };
    #[cfg(not(feature = "parallel"))]
    let outcomes: Vec<Result<MinorOutcome>> = pairs.iter().map(eval).collect();

    let mut terms = Vec::new();
    let mut first_coeff: BTreeMap<Monomial, BigRational> = BTreeMap::new();
    let mut mixed = Vec::new();
    let (mut evaluated, mut pruned, mut zero) = (0, 0, 0);
    for ((rs, cs), out) in pairs.iter().zip(outcomes) {
        match out? {
            MinorOutcome::Pruned => pruned += 1,
            MinorOutcome::Zero => {
                evaluated += 1;
                zero += 1;
            }
            MinorOutcome::Term(t) => {
                evaluated += 1;
                first_coeff.entry(t.mono.clone()).or_insert(t.coeff);
                terms.push(t.mono);
            }
            MinorOutcome::Mixed(p) => {
                evaluated += 1;
                mixed.push(MixedMinorEntry {
                    rows: rs.to_vec(),
                    cols: cs.to_vec(),
                    poly: p,
                });
            }
        }
    }
    let term_minors = MonomialIdeal::minimize(m.nvars, terms)?;
    let coefficients = term_minors
        .gens()
        .iter()
        .map(|g| (g.clone(), first_coeff[g].clone()))
        .collect();
    Ok(MinorsReport {
        r,
        term_minors,
        coefficients,
        mixed_minors: mixed,
        evaluated,
        pruned,
        zero,
    })
}

/// Three-valued answer to "is `I_r(M)` equal to the target monomial ideal".
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Certification {
    Equal,
    NotEqual,
    /// Every term lies in the target, but the target is generated only with
    /// the help of multi-term minors, which this check cannot decide.
    Indeterminate,
}

pub fn minors_equal_monomial_ideal(
    m: &TermMatrix,
    r: usize,
    target: &MonomialIdeal,
    budget: usize,
) -> Result<Certification> {
    let rep = minors_ideal(m, r, budget)?;
    certify(&rep, target)
}

pub fn certify(rep: &MinorsReport, target: &MonomialIdeal) -> Result<Certification> {
    let terms_inside = rep.term_minors.is_subset(target)?
        && rep
            .mixed_minors
            .iter()
            .all(|mm| mm.poly.terms().all(|(mono, _)| target.contains_unchecked(mono)));
    if !terms_inside {
        return Ok(Certification::NotEqual);
    }
    if target.is_subset(&rep.term_minors)? {
        return Ok(Certification::Equal);
    }
    if rep.mixed_minors.is_empty() {
        Ok(Certification::NotEqual)
    } else {
        Ok(Certification::Indeterminate)
    }
}

/// `(J, I_r(Θ))` for `r = ht(J)`.
pub fn jacobian_ideal(j: &MonomialIdeal) -> Result<MonomialIdeal> {
    let r = j.height()?;
    jacobian_ideal_at(j, r)
}

/// `(J, I_r(Θ))` for an explicit minor size; fails if some `r`-minor is not a single term.
pub fn jacobian_ideal_at(j: &MonomialIdeal, r: usize) -> Result<MonomialIdeal> {
    let theta = jacobian_matrix(j)?;
    let rep = minors_ideal(&theta, r, DEFAULT_MINOR_BUDGET)?;
    if let Some(mm) = rep.mixed_minors.first() {
        return Err(Error::MixedMinor {
            rows: mm.rows.clone(),
            cols: mm.cols.clone(),
            poly: mm.poly.to_string(),
        });
    }
    j.sum(&rep.term_minors)
}

/// `VV_J`, the module of the pair `J ⊆ (J, I_r(Θ))`.
pub fn vv_single(j: &MonomialIdeal) -> Result<VvReport> {
    let i = jacobian_ideal(j)?;
    vv_vanishes(j, &i)
}

/// Necessary condition for `m ∈ I_r(Θ)` of a facet ideal: `α(supp m) ≥ r`.
pub fn alpha_necessary_check(c: &Clutter, m: &Monomial, r: usize) -> bool {
    if r == 0 {
        return true;
    }
    let support = m.support().into_iter().map(|i| i + 1).collect();
    alpha(c, &support) >= r
}
