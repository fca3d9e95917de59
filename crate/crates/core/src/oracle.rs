//! Deliberately naive ideal arithmetic used to cross-check the fast path.
//!
//! Nothing here interreduces until the final answer. Intersection does not use
//! the pairwise-lcm formula at all: it enumerates every monomial dividing the
//! lcm of all generators and keeps those lying in both ideals.

use crate::error::{Error, Result};
use crate::ideal::{minimal_antichain, IdealArithmetic, MonomialIdeal};
use crate::monomial::Monomial;

#[derive(Debug, Clone, Copy)]
pub struct Naive {
    /// Upper bound on the number of intermediate monomials.
    pub budget: usize,
}

impl Default for Naive {
    fn default() -> Self {
        Self { budget: 2_000_000 }
    }
}

fn check(a: &MonomialIdeal, b: &MonomialIdeal) -> Result<()> {
    if a.nvars() != b.nvars() {
        return Err(Error::ContextMismatch {
            left: a.nvars(),
            right: b.nvars(),
        });
    }
    Ok(())
}

impl Naive {
    fn raw_product(&self, a: &[Monomial], b: &[Monomial]) -> Result<Vec<Monomial>> {
        if a.len().saturating_mul(b.len()) > self.budget {
            return Err(Error::ResourceExceeded {
                what: "naive product",
                size: a.len() * b.len(),
                budget: self.budget,
            });
        }
        let mut out = Vec::with_capacity(a.len() * b.len());
        for x in a {
            for y in b {
                out.push(x.mul(y)?);
            }
        }
        Ok(out)
    }

    fn finish(n: usize, raw: Vec<Monomial>) -> MonomialIdeal {
        MonomialIdeal::minimize(n, minimal_antichain(raw)).expect("context checked")
    }

    /// Brute-force membership: scan every generator.
    pub fn contains(&self, a: &MonomialIdeal, m: &Monomial) -> bool {
        a.gens()
            .iter()
            .any(|g| g.exps().iter().zip(m.exps()).all(|(x, y)| x <= y))
    }
}

impl IdealArithmetic for Naive {
    fn product(&self, a: &MonomialIdeal, b: &MonomialIdeal) -> Result<MonomialIdeal> {
        check(a, b)?;
        let raw = self.raw_product(a.gens(), b.gens())?;
        Ok(Self::finish(a.nvars(), raw))
    }

    fn power(&self, a: &MonomialIdeal, t: u32) -> Result<MonomialIdeal> {
        let n = a.nvars();
        let mut raw = vec![Monomial::one(n)];
        for _ in 0..t {
            raw = self.raw_product(&raw, a.gens())?;
        }
        Ok(Self::finish(n, raw))
    }

    fn intersect(&self, a: &MonomialIdeal, b: &MonomialIdeal) -> Result<MonomialIdeal> {
        check(a, b)?;
        let n = a.nvars();
        if a.is_zero() || b.is_zero() {
            return Ok(MonomialIdeal::zero(n));
        }
        let mut bound = vec![0u32; n];
        for g in a.gens().iter().chain(b.gens()) {
            for (k, &e) in g.exps().iter().enumerate() {
                bound[k] = bound[k].max(e);
            }
        }
        let count = bound
            .iter()
            .try_fold(1usize, |acc, &e| acc.checked_mul(e as usize + 1));
        match count {
            Some(c) if c <= self.budget => {}
            _ => {
                return Err(Error::ResourceExceeded {
                    what: "naive intersection box",
                    size: count.unwrap_or(usize::MAX),
                    budget: self.budget,
                })
            }
        }
        let mut found = Vec::new();
        let mut cur = vec![0u32; n];
        loop {
            let m = Monomial::new(cur.clone())?;
            if self.contains(a, &m) && self.contains(b, &m) {
                found.push(m);
            }
            // Odometer step over the box [0, bound].
            let mut k = 0;
            loop {
                if k == n {
                    return Ok(Self::finish(n, found));
                }
                if cur[k] < bound[k] {
                    cur[k] += 1;
                    break;
                }
                cur[k] = 0;
                k += 1;
            }
        }
    }
}
