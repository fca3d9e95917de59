//! Graded components of the Valabrega-Valla module `⊕_t (J ∩ I^t) / (J I^{t-1})`
//! of a pair of monomial ideals `J ⊆ I`.
//!
//! For monomial ideals the module vanishes iff its components vanish in
//! degrees `1..=t0(J)`, so [`vv_vanishes`] is a complete decision procedure.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ideal::{power_maximal, IdealArithmetic, Interreduced, MonomialIdeal};
use crate::monomial::Monomial;

/// Which bound decided the search window.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum BoundUsed {
    T0,
    UserSupplied,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VvReport {
    pub vanishes: bool,
    pub indeg: Option<u32>,
    /// Nonempty components only: degree -> minimal generators of `J ∩ I^t`
    /// lying outside `J I^{t-1}`.
    pub witnesses: BTreeMap<u32, Vec<Monomial>>,
    /// Inclusive range `[1, last]` of degrees examined.
    pub degrees_checked: (u32, u32),
    pub t0: u32,
    pub bound_used: BoundUsed,
}

#[derive(Debug, Clone, Copy, Default)]
pub struct VvOptions {
    /// Extend the search window past `t0(J)`. Values below `t0(J)` are ignored.
    pub max_degree: Option<u32>,
}

pub(crate) fn ensure_subset(j: &MonomialIdeal, i: &MonomialIdeal) -> Result<()> {
    if j.nvars() != i.nvars() {
        return Err(Error::ContextMismatch {
            left: j.nvars(),
            right: i.nvars(),
        });
    }
    if let Some(g) = j.gens().iter().find(|g| !i.contains_unchecked(g)) {
        return Err(Error::NotContained(g.to_string()));
    }
    Ok(())
}

fn component_from(
    arith: &dyn IdealArithmetic,
    j: &MonomialIdeal,
    i_prev: &MonomialIdeal,
    i_t: &MonomialIdeal,
) -> Result<Vec<Monomial>> {
    let inter = arith.intersect(j, i_t)?;
    let prod = arith.product(j, i_prev)?;
    Ok(inter
        .gens()
        .iter()
        .filter(|g| !prod.contains_unchecked(g))
        .cloned()
        .collect())
}

/// Minimal generators of `J ∩ I^t` not in `J I^{t-1}`; empty iff `(VV)_t = 0`.
pub fn vv_component(j: &MonomialIdeal, i: &MonomialIdeal, t: u32) -> Result<Vec<Monomial>> {
    vv_component_with(&Interreduced, j, i, t)
}

pub fn vv_component_with(
    arith: &dyn IdealArithmetic,
    j: &MonomialIdeal,
    i: &MonomialIdeal,
    t: u32,
) -> Result<Vec<Monomial>> {
    if t == 0 {
        return Err(Error::OutOfRange("component degree must be >= 1".into()));
    }
    ensure_subset(j, i)?;
    let prev = arith.power(i, t - 1)?;
    let cur = arith.power(i, t)?;
    component_from(arith, j, &prev, &cur)
}

pub fn vv_vanishes(j: &MonomialIdeal, i: &MonomialIdeal) -> Result<VvReport> {
    vv_vanishes_with(&Interreduced, j, i, VvOptions::default())
}

pub fn vv_vanishes_with(
    arith: &dyn IdealArithmetic,
    j: &MonomialIdeal,
    i: &MonomialIdeal,
    opts: VvOptions,
) -> Result<VvReport> {
    ensure_subset(j, i)?;
    let t0 = j.t0()?;
    let (last, bound_used) = match opts.max_degree {
        Some(user) if user > t0 => (user, BoundUsed::UserSupplied),
        _ => (t0, BoundUsed::T0),
    };

    let mut powers = Vec::with_capacity(last as usize + 1);
    powers.push(MonomialIdeal::unit(i.nvars()));
    for t in 1..=last {
        let next = arith.power(i, t)?;
        powers.push(next);
    }

    let degrees: Vec<u32> = (1..=last).collect();
    let compute = |&t: &u32| -> Result<(u32, Vec<Monomial>)> {
        let c = component_from(arith, j, &powers[t as usize - 1], &powers[t as usize])?;
        Ok((t, c))
    };
    #[cfg(feature = "parallel")]
    let comps: Vec<Result<(u32, Vec<Monomial>)>> = {
        use rayon::prelude::*;
        degrees.par_iter().map(compute).collect()
    };
    #[cfg(not(feature = "parallel"))]
    let comps: Vec<Result<(u32, Vec<Monomial>)>> = degrees.iter().map(compute).collect();

    let mut witnesses = BTreeMap::new();
    for c in comps {
        let (t, w) = c?;
        if !w.is_empty() {
            witnesses.insert(t, w);
        }
    }
    let indeg = witnesses.keys().next().copied();
    Ok(VvReport {
        vanishes: witnesses.is_empty(),
        indeg,
        witnesses,
        degrees_checked: (1, last),
        t0,
        bound_used,
    })
}

/// Least `t <= t0(J)` with a nonzero component, or `None` if the module vanishes.
pub fn vv_indeg(j: &MonomialIdeal, i: &MonomialIdeal) -> Result<Option<u32>> {
    Ok(vv_vanishes(j, i)?.indeg)
}

/// Checks `J ∩ I^t = (J ∩ I^k) I^{t-k}` for every `k <= t <= k + horizon`.
///
/// This is a bounded check; it does not certify the Artin-Rees number.
pub fn artin_rees_verify(j: &MonomialIdeal, i: &MonomialIdeal, k: u32, horizon: u32) -> Result<bool> {
    Ok(artin_rees_first_failure(j, i, k, horizon)?.is_none())
}

/// First `t` in the window where the Artin-Rees equality fails.
pub fn artin_rees_first_failure(
    j: &MonomialIdeal,
    i: &MonomialIdeal,
    k: u32,
    horizon: u32,
) -> Result<Option<u32>> {
    let base = j.intersect(&i.power(k)?)?;
    let mut i_pow = i.power(k)?;
    let mut i_rel = MonomialIdeal::unit(i.nvars());
    for t in k..=k + horizon {
        if t > k {
            i_pow = i_pow.product(i)?;
            i_rel = i_rel.product(i)?;
        }
        let lhs = j.intersect(&i_pow)?;
        let rhs = base.product(&i_rel)?;
        if lhs != rhs {
            return Ok(Some(t));
        }
    }
    Ok(None)
}

/// Least `t <= horizon` with `J I^n = I^{n+1}` for all `t <= n <= horizon`.
pub fn reduction_number_bounded(
    j: &MonomialIdeal,
    i: &MonomialIdeal,
    horizon: u32,
) -> Result<Option<u32>> {
    let mut eq = Vec::with_capacity(horizon as usize + 1);
    let mut i_n = MonomialIdeal::unit(i.nvars());
    for _ in 0..=horizon {
        let next = i_n.product(i)?;
        eq.push(j.product(&i_n)? == next);
        i_n = next;
    }
    let mut answer = None;
    for n in (0..=horizon).rev() {
        if !eq[n as usize] {
            break;
        }
        answer = Some(n);
    }
    Ok(answer)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DpowerCheck {
    pub vanishes: bool,
    pub indeg_j: u32,
    pub generated_in_degree_r: bool,
    /// `vanishes => indeg(J) = r`, and `J` generated in degree `r` => vanishes.
    pub consistent: bool,
}

/// VV of the pair `J ⊆ m^r`, checked against the two implications that
/// relate vanishing to the initial degree of `J`.
pub fn dpower_check(j: &MonomialIdeal, r: u32) -> Result<DpowerCheck> {
    if r == 0 {
        return Err(Error::OutOfRange("r must be >= 1".into()));
    }
    let mr = power_maximal(j.nvars(), r)?;
    let report = vv_vanishes(j, &mr)?;
    let indeg_j = j.indeg()?;
    let generated_in_degree_r = j.gens().iter().all(|g| g.degree() == r);
    let consistent = (!report.vanishes || indeg_j == r) && (!generated_in_degree_r || report.vanishes);
    Ok(DpowerCheck {
        vanishes: report.vanishes,
        indeg_j,
        generated_in_degree_r,
        consistent,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::squarefree_power;

    fn ideal(n: usize, rows: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::from_exponents(n, &rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>())
            .unwrap()
    }

    fn triangle() -> MonomialIdeal {
        squarefree_power(3, 2).unwrap()
    }

    #[test]
    fn triangle_witness() {
        let j = ideal(3, &[&[1, 1, 0]]);
        let w = vv_component(&j, &triangle(), 2).unwrap();
        assert_eq!(w, vec![Monomial::new(vec![1, 1, 2]).unwrap()]);
        let rep = vv_vanishes(&j, &triangle()).unwrap();
        assert!(!rep.vanishes);
        assert_eq!(rep.indeg, Some(2));
        assert_eq!(rep.degrees_checked, (1, 2));
    }

    #[test]
    fn equal_pair_has_empty_components() {
        let i = triangle();
        for t in 1..5 {
            assert!(vv_component(&i, &i, t).unwrap().is_empty());
        }
        assert_eq!(vv_indeg(&i, &i).unwrap(), None);
    }

    #[test]
    fn two_disjoint_edges_in_jacobian() {
        let j = ideal(4, &[&[1, 1, 0, 0], &[0, 0, 1, 1]]);
        let i = ideal(
            4,
            &[
                &[1, 1, 0, 0],
                &[0, 0, 1, 1],
                &[1, 0, 1, 0],
                &[1, 0, 0, 1],
                &[0, 1, 1, 0],
                &[0, 1, 0, 1],
            ],
        );
        let w = vv_component(&j, &i, 2).unwrap();
        assert!(w.contains(&Monomial::new(vec![1, 1, 2, 0]).unwrap()));
        assert_eq!(vv_indeg(&j, &i).unwrap(), Some(2));
    }

    #[test]
    fn coordinate_points_vanish() {
        let j = triangle();
        let i = power_maximal(3, 2).unwrap();
        assert!(vv_vanishes(&j, &i).unwrap().vanishes);
        assert!(artin_rees_verify(&j, &i, 1, 4).unwrap());
    }

    #[test]
    fn forms_of_degree_r_vanish() {
        let j = ideal(2, &[&[2, 0], &[0, 2]]);
        assert!(vv_vanishes(&j, &power_maximal(2, 2).unwrap()).unwrap().vanishes);
    }

    #[test]
    fn containment_is_required() {
        let j = ideal(2, &[&[1, 0]]);
        let i = ideal(2, &[&[2, 0]]);
        assert!(matches!(vv_vanishes(&j, &i), Err(Error::NotContained(_))));
        assert!(matches!(
            vv_vanishes(&MonomialIdeal::zero(2), &i),
            Err(Error::ZeroIdeal)
        ));
        assert!(vv_component(&j, &j, 0).is_err());
    }

    #[test]
    fn user_window_extends_search() {
        let j = ideal(3, &[&[1, 1, 0]]);
        let rep = vv_vanishes_with(&Interreduced, &j, &triangle(), VvOptions { max_degree: Some(4) })
            .unwrap();
        assert_eq!(rep.degrees_checked, (1, 4));
        assert_eq!(rep.bound_used, BoundUsed::UserSupplied);
        assert_eq!(rep.indeg, Some(2));
    }

    #[test]
    fn artin_rees_examples() {
        let j = ideal(3, &[&[1, 1, 0]]);
        assert!(!artin_rees_verify(&j, &triangle(), 1, 2).unwrap());
        assert_eq!(artin_rees_first_failure(&j, &triangle(), 1, 2).unwrap(), Some(2));
        let i = triangle();
        assert!(artin_rees_verify(&i, &i, 1, 3).unwrap());
        assert!(!artin_rees_verify(&i, &i, 0, 3).unwrap());
    }

    #[test]
    fn reduction_numbers() {
        let i = triangle();
        assert_eq!(reduction_number_bounded(&i, &i, 3).unwrap(), Some(0));
        let j = ideal(2, &[&[2, 0], &[0, 2]]);
        let m2 = power_maximal(2, 2).unwrap();
        assert_eq!(reduction_number_bounded(&j, &m2, 4).unwrap(), Some(1));
        let j = ideal(3, &[&[1, 1, 0]]);
        let i = ideal(3, &[&[1, 1, 0], &[1, 0, 1]]);
        assert_eq!(reduction_number_bounded(&j, &i, 4).unwrap(), None);
    }

    #[test]
    fn dpower_examples() {
        let j = ideal(3, &[&[3, 0, 0]]);
        let c = dpower_check(&j, 2).unwrap();
        assert!(!c.vanishes);
        assert!(c.consistent);
        let j = ideal(3, &[&[2, 0, 0], &[1, 1, 0]]);
        let c = dpower_check(&j, 2).unwrap();
        assert!(c.vanishes && c.consistent);
        let c = dpower_check(&power_maximal(3, 3).unwrap(), 3).unwrap();
        assert!(c.vanishes);
        assert!(dpower_check(&ideal(2, &[&[1, 0]]), 2).is_err());
    }
}
