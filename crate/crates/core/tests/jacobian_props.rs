mod common;

use common::clutter;
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use vava_core::clutter::{facet_ideal, Clutter};
use vava_core::combinat::subsets;
use vava_core::jacobian::{
    alpha_necessary_check, determinant, has_transversal, jacobian_matrix, minors_ideal, Polynomial, Term, TermMatrix,
    DEFAULT_MINOR_BUDGET,
};
use vava_core::Monomial;

fn term_strategy(n: usize) -> impl Strategy<Value = Term> {
    (-2i64..=2, prop::collection::vec(0u32..=2, n))
        .prop_map(|(c, e)| Term::new(BigRational::from_integer(BigInt::from(c)), Monomial::new(e).unwrap()))
}

fn matrix_strategy() -> impl Strategy<Value = TermMatrix> {
    (1usize..=4).prop_flat_map(|r| {
        prop::collection::vec(prop::collection::vec(term_strategy(3), r), r)
            .prop_map(|grid| TermMatrix::new(3, grid).unwrap())
    })
}

fn permutations(k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(k - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, k - 1);
            out.push(q);
        }
    }
    out
}

fn sign(p: &[usize]) -> bool {
    let mut inversions = 0;
    for a in 0..p.len() {
        for b in a + 1..p.len() {
            if p[a] > p[b] {
                inversions += 1;
            }
        }
    }
    inversions % 2 == 1
}

/// Leibniz expansion, one permutation at a time.
fn leibniz(m: &TermMatrix, rows: &[usize], cols: &[usize]) -> Polynomial {
    let mut out = Polynomial::default();
    for p in permutations(rows.len()) {
        let mut coeff = BigRational::from_integer(BigInt::from(1));
        let mut mono = Monomial::one(m.nvars());
        for (k, &c) in p.iter().enumerate() {
            let t = m.get(rows[k], cols[c]);
            coeff *= &t.coeff;
            mono = mono.mul(&t.mono).unwrap();
        }
        if sign(&p) {
            coeff = -coeff;
        }
        out.add_term(mono, coeff);
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn determinant_matches_leibniz(m in matrix_strategy()) {
        let all: Vec<usize> = (0..m.rows()).collect();
        for r in 1..=m.rows() {
            for rows in subsets(m.rows(), r) {
                for cols in subsets(m.cols(), r) {
                    prop_assert_eq!(determinant(&m, &rows, &cols).unwrap(), leibniz(&m, &rows, &cols));
                }
            }
        }
        prop_assert_eq!(determinant(&m, &all, &all).unwrap(), leibniz(&m, &all, &all));
    }

    #[test]
    fn pruned_minors_vanish(m in matrix_strategy()) {
        for r in 1..=m.rows() {
            for rows in subsets(m.rows(), r) {
                for cols in subsets(m.cols(), r) {
                    if !has_transversal(&m, &rows, &cols) {
                        prop_assert!(determinant(&m, &rows, &cols).unwrap().is_zero());
                    }
                }
            }
        }
    }

    #[test]
    fn facet_minors_pass_alpha_check(c in prop_oneof![clutter(6, 3, 5), clutter(6, 2, 6)], r in 1usize..=3) {
        check_alpha(&c, r)?;
    }
}

fn check_alpha(c: &Clutter, r: usize) -> Result<(), TestCaseError> {
    let m = jacobian_matrix(&facet_ideal(c)).unwrap();
    prop_assume!(r <= m.rows().min(m.cols()));
    let rep = minors_ideal(&m, r, DEFAULT_MINOR_BUDGET).unwrap();
    for g in rep.term_minors.gens() {
        prop_assert!(alpha_necessary_check(c, g, r), "minor {} fails the alpha bound", g);
    }
    Ok(())
}
