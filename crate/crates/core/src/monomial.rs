//! Monomials as exponent vectors over a fixed number of variables.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// Variable labels of a polynomial ring `K[x1, ..., xn]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingContext {
    names: Vec<String>,
}

impl RingContext {
    /// Labels `x1, ..., xn`.
    pub fn standard(n: usize) -> Result<Self> {
        Self::new((1..=n).map(|i| format!("x{i}")).collect())
    }

    pub fn new(names: Vec<String>) -> Result<Self> {
        if names.is_empty() {
            return Err(Error::Invalid("a ring needs at least one variable".into()));
        }
        let mut seen = std::collections::BTreeSet::new();
        for name in &names {
            if !seen.insert(name.as_str()) {
                return Err(Error::Invalid(format!("duplicate variable name {name:?}")));
            }
        }
        Ok(Self { names })
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn render(&self, m: &Monomial) -> String {
        render_with(m, |i| self.names[i].clone())
    }
}

/// A monomial `x^a`, stored as its exponent vector.
///
/// Ordering is graded first (total degree ascending), then lexicographic with
/// `x1 > x2 > ... > xn`, so that `x1^2 < x1*x2 < x2^2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Box<[u32]>,
    deg: u32,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Result<Self> {
        let mut deg: u32 = 0;
        for &e in &exps {
            deg = deg.checked_add(e).ok_or(Error::ExponentOverflow)?;
        }
        Ok(Self {
            exps: exps.into_boxed_slice(),
            deg,
        })
    }

    pub fn one(n: usize) -> Self {
        Self {
            exps: vec![0; n].into_boxed_slice(),
            deg: 0,
        }
    }

    /// The variable `x_i` (zero-based index).
    pub fn var(n: usize, i: usize) -> Self {
        let mut exps = vec![0; n];
        exps[i] = 1;
        Self {
            exps: exps.into_boxed_slice(),
            deg: 1,
        }
    }

    /// Squarefree monomial `x_F` for a set of one-based vertex labels.
    pub fn squarefree(n: usize, vertices: &[usize]) -> Result<Self> {
        let mut exps = vec![0u32; n];
        for &v in vertices {
            if v == 0 || v > n {
                return Err(Error::OutOfRange(format!("vertex {v} outside 1..={n}")));
            }
            exps[v - 1] = 1;
        }
        Self::new(exps)
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn exp(&self, i: usize) -> u32 {
        self.exps[i]
    }

    pub fn degree(&self) -> u32 {
        self.deg
    }

    pub fn is_one(&self) -> bool {
        self.deg == 0
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&e| e <= 1)
    }

    /// Zero-based indices of the variables with positive exponent.
    pub fn support(&self) -> Vec<usize> {
        (0..self.exps.len()).filter(|&i| self.exps[i] > 0).collect()
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.exps.len() != other.exps.len() {
            return Err(Error::ContextMismatch {
                left: self.exps.len(),
                right: other.exps.len(),
            });
        }
        Ok(())
    }

    pub fn lcm(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.zip_unchecked(other, u32::max))
    }

    pub fn gcd(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.zip_unchecked(other, u32::min))
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let exps = self
            .exps
            .iter()
            .zip(other.exps.iter())
            .map(|(&a, &b)| a.checked_add(b).ok_or(Error::ExponentOverflow))
            .collect::<Result<Vec<_>>>()?;
        Self::new(exps)
    }

    pub fn pow(&self, k: u32) -> Result<Self> {
        let exps = self
            .exps
            .iter()
            .map(|&a| a.checked_mul(k).ok_or(Error::ExponentOverflow))
            .collect::<Result<Vec<_>>>()?;
        Self::new(exps)
    }

    /// `self / other`, or `None` when `other` does not divide `self`.
    pub fn div(&self, other: &Self) -> Result<Option<Self>> {
        self.check(other)?;
        if !other.divides_unchecked(self) {
            return Ok(None);
        }
        Ok(Some(self.zip_unchecked(other, |a, b| a - b)))
    }

    /// `self | other`.
    pub fn divides(&self, other: &Self) -> Result<bool> {
        self.check(other)?;
        Ok(self.divides_unchecked(other))
    }

    pub(crate) fn divides_unchecked(&self, other: &Self) -> bool {
        self.deg <= other.deg && self.exps.iter().zip(other.exps.iter()).all(|(a, b)| a <= b)
    }

    fn zip_unchecked(&self, other: &Self, f: impl Fn(u32, u32) -> u32) -> Self {
        let exps: Vec<u32> = self
            .exps
            .iter()
            .zip(other.exps.iter())
            .map(|(&a, &b)| f(a, b))
            .collect();
        let deg = exps.iter().sum();
        Self {
            exps: exps.into_boxed_slice(),
            deg,
        }
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.deg
            .cmp(&other.deg)
            .then_with(|| other.exps.cmp(&self.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

pub(crate) fn render_with(m: &Monomial, name: impl Fn(usize) -> String) -> String {
    if m.is_one() {
        return "1".to_string();
    }
    let mut parts = Vec::new();
    for (i, &e) in m.exps.iter().enumerate() {
        match e {
            0 => {}
            1 => parts.push(name(i)),
            _ => parts.push(format!("{}^{}", name(i), e)),
        }
    }
    parts.join("*")
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_with(self, |i| format!("x{}", i + 1)))
    }
}

impl serde::Serialize for Monomial {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.exps.serialize(s)
    }
}
