//! Exact linear algebra checked against naive cofactor and minor oracles.

use num_traits::{Signed, Zero};
use proptest::prelude::*;
use trinion::exactmath::{hnf, QMatrix, Rational, Solution};

fn cofactor_det(m: &[Vec<Rational>]) -> Rational {
    let n = m.len();
    if n == 0 {
        return Rational::from_integer(1.into());
    }
    (0..n)
        .map(|j| {
            let minor: Vec<Vec<Rational>> = m[1..]
                .iter()
                .map(|r| {
                    r.iter()
                        .enumerate()
                        .filter(|&(c, _)| c != j)
                        .map(|(_, x)| x.clone())
                        .collect()
                })
                .collect();
            let term = &m[0][j] * cofactor_det(&minor);
            if j % 2 == 0 {
                term
            } else {
                -term
            }
        })
        .sum()
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    use itertools::Itertools;
    (0..n).combinations(k).collect()
}

/// Largest k with a nonzero k×k minor.
fn minor_rank(m: &[Vec<Rational>]) -> usize {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    for k in (1..=rows.min(cols)).rev() {
        for rs in subsets(rows, k) {
            for cs in subsets(cols, k) {
                let sub: Vec<Vec<Rational>> = rs
                    .iter()
                    .map(|&r| cs.iter().map(|&c| m[r][c].clone()).collect())
                    .collect();
                if !cofactor_det(&sub).is_zero() {
                    return k;
                }
            }
        }
    }
    0
}

fn to_rational(rows: &[Vec<i64>]) -> Vec<Vec<Rational>> {
    rows.iter()
        .map(|r| {
            r.iter()
                .map(|&x| Rational::from_integer(x.into()))
                .collect()
        })
        .collect()
}

fn matrix(rows: usize, cols: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    prop::collection::vec(prop::collection::vec(-5i64..=5, cols), rows)
}

fn shaped() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1usize..=5, 1usize..=5).prop_flat_map(|(r, c)| matrix(r, c))
}

fn square() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1usize..=5).prop_flat_map(|n| matrix(n, n))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(120))]

    #[test]
    fn det_matches_cofactor_expansion(rows in square()) {
        let q = to_rational(&rows);
        prop_assert_eq!(QMatrix::from_rows(q.clone()).unwrap().det().unwrap(), cofactor_det(&q));
    }

    #[test]
    fn rank_matches_minor_rank(rows in shaped()) {
        let q = to_rational(&rows);
        prop_assert_eq!(QMatrix::from_rows(q.clone()).unwrap().rank(), minor_rank(&q));
    }

    #[test]
    fn solve_classification_matches_ranks(rows in shaped(), seed in prop::collection::vec(-5i64..=5, 5)) {
        let q = to_rational(&rows);
        let b: Vec<Rational> = seed.iter().take(q.len()).map(|&x| Rational::from_integer(x.into())).collect();
        prop_assume!(b.len() == q.len());
        let m = QMatrix::from_rows(q.clone()).unwrap();
        let rank_a = minor_rank(&q);
        let aug: Vec<Vec<Rational>> = q.iter().zip(&b).map(|(r, x)| { let mut r = r.clone(); r.push(x.clone()); r }).collect();
        let rank_ab = minor_rank(&aug);
        match m.solve(&b).unwrap() {
            Solution::NoSolution => prop_assert!(rank_ab > rank_a),
            Solution::NonUnique => prop_assert!(rank_ab == rank_a && rank_a < m.cols()),
            Solution::Unique(x) => {
                prop_assert!(rank_ab == rank_a && rank_a == m.cols());
                prop_assert_eq!(m.mul_vec(&x).unwrap(), b);
            }
        }
    }

    #[test]
    fn cramer_agrees_on_nonsingular_systems(rows in square(), rhs in prop::collection::vec(-5i64..=5, 5)) {
        let q = to_rational(&rows);
        let det = cofactor_det(&q);
        prop_assume!(!det.is_zero());
        let b: Vec<Rational> = rhs.iter().take(q.len()).map(|&x| Rational::from_integer(x.into())).collect();
        let cramer: Vec<Rational> = (0..q.len()).map(|j| {
            let replaced: Vec<Vec<Rational>> = q.iter().zip(&b).map(|(r, x)| { let mut r = r.clone(); r[j] = x.clone(); r }).collect();
            cofactor_det(&replaced) / &det
        }).collect();
        prop_assert_eq!(QMatrix::from_rows(q).unwrap().solve(&b).unwrap(), Solution::Unique(cramer));
    }

    #[test]
    fn hnf_identities(rows in shaped()) {
        let m = QMatrix::from_int_rows(&rows).unwrap();
        let r = hnf(&m).unwrap();
        // U m = H, U unimodular
        prop_assert_eq!(r.u.mul(&m).unwrap(), r.h.clone());
        prop_assert_eq!(r.u.det().unwrap().abs(), Rational::from_integer(1.into()));
        // same rational row space: rank of m, H and [m; H] coincide
        prop_assert_eq!(r.rank, m.rank());
        let mut stacked = m.to_rows();
        stacked.extend(r.h.to_rows());
        prop_assert_eq!(QMatrix::from_rows(stacked).unwrap().rank(), r.rank);
        // echelon shape with positive pivots and reduced entries above them
        let mut last_pivot: Option<usize> = None;
        for i in 0..r.h.rows() {
            let row = r.h.row(i);
            match row.iter().position(|x| !x.is_zero()) {
                None => prop_assert!(i >= r.rank),
                Some(p) => {
                    prop_assert!(i < r.rank);
                    prop_assert!(last_pivot.is_none_or(|l| p > l));
                    prop_assert!(row[p].is_positive());
                    for k in 0..i {
                        let above = r.h.get(k, p);
                        prop_assert!(!above.is_negative() && above < &row[p]);
                    }
                    last_pivot = Some(p);
                }
            }
        }
    }

    #[test]
    fn hnf_det_relation_on_square(rows in square()) {
        let m = QMatrix::from_int_rows(&rows).unwrap();
        let r = hnf(&m).unwrap();
        prop_assert_eq!(r.u.det().unwrap() * m.det().unwrap(), r.h.det().unwrap());
    }
}

#[test]
fn hnf_is_deterministic() {
    let m = QMatrix::from_int_rows(&[[4, 6, 2], [2, 3, 5], [-1, 7, 0], [3, 3, 3]]).unwrap();
    assert_eq!(hnf(&m).unwrap(), hnf(&m).unwrap());
}
