mod common;

use common::{ideal, monomial, pair};
use proptest::prelude::*;
use vava_core::oracle::Naive;
use vava_core::{IdealArithmetic, Interreduced, Monomial, MonomialIdeal};

fn is_antichain(a: &MonomialIdeal) -> bool {
    let g = a.gens();
    g.iter()
        .enumerate()
        .all(|(x, p)| g.iter().enumerate().all(|(y, q)| x == y || !p.divides(q).unwrap()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn lcm_times_gcd_is_product(a in monomial(5, 4), b in monomial(5, 4)) {
        let lhs = a.lcm(&b).unwrap().mul(&a.gcd(&b).unwrap()).unwrap();
        prop_assert_eq!(lhs, a.mul(&b).unwrap());
    }

    #[test]
    fn canonical_form(a in ideal(4, 6, 4)) {
        prop_assert!(is_antichain(&a));
        let again = MonomialIdeal::minimize(a.nvars(), a.gens().to_vec()).unwrap();
        prop_assert_eq!(&again, &a);
        let mut sorted = a.gens().to_vec();
        sorted.sort();
        prop_assert_eq!(sorted.as_slice(), a.gens());
    }

    #[test]
    fn product_inside_intersection(a in ideal(4, 4, 3), b in ideal(4, 4, 3)) {
        let p = a.product(&b).unwrap();
        let i = a.intersect(&b).unwrap();
        prop_assert!(p.is_subset(&i).unwrap());
        prop_assert!(i.is_subset(&a).unwrap() && i.is_subset(&b).unwrap());
    }

    #[test]
    fn powers_add(a in ideal(3, 3, 3), s in 1u32..=3, t in 1u32..=3) {
        let lhs = a.power(s).unwrap().product(&a.power(t).unwrap()).unwrap();
        prop_assert_eq!(lhs, a.power(s + t).unwrap());
    }

    #[test]
    fn vv_containment((j, i) in pair(5, 5, 4), t in 1u32..=3) {
        let prod = j.product(&i.power(t - 1).unwrap()).unwrap();
        let inter = j.intersect(&i.power(t).unwrap()).unwrap();
        prop_assert!(prod.is_subset(&inter).unwrap());
    }

    #[test]
    fn membership_matches_scan(a in ideal(4, 5, 4), m in monomial(4, 6)) {
        let scan = a.gens().iter().any(|g| g.exps().iter().zip(m.exps()).all(|(x, y)| x <= y));
        prop_assert_eq!(a.contains(&m).unwrap(), scan);
        prop_assert_eq!(Naive::default().contains(&a, &m), scan);
    }

    #[test]
    fn oracle_equivalence(a in ideal(5, 5, 4), b in ideal(5, 5, 4), t in 1u32..=4) {
        let naive = Naive::default();
        prop_assert_eq!(Interreduced.product(&a, &b).unwrap(), naive.product(&a, &b).unwrap());
        prop_assert_eq!(Interreduced.intersect(&a, &b).unwrap(), naive.intersect(&a, &b).unwrap());
        if a.len() <= 3 {
            prop_assert_eq!(Interreduced.power(&a, t).unwrap(), naive.power(&a, t).unwrap());
        }
    }
}

#[test]
fn zero_and_unit_behave() {
    let n = 3;
    let a = MonomialIdeal::from_exponents(n, &[vec![1, 1, 0], vec![0, 0, 2]]).unwrap();
    let zero = MonomialIdeal::zero(n);
    let unit = MonomialIdeal::unit(n);
    assert_eq!(a.product(&zero).unwrap(), zero);
    assert_eq!(a.product(&unit).unwrap(), a);
    assert_eq!(a.intersect(&zero).unwrap(), zero);
    assert_eq!(a.intersect(&unit).unwrap(), a);
    assert_eq!(a.sum(&zero).unwrap(), a);
    assert_eq!(a.power(0).unwrap(), unit);
    assert!(unit.contains(&Monomial::one(n)).unwrap());
    assert!(!zero.contains(&Monomial::one(n)).unwrap());
}
