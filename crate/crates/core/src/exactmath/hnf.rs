use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::QMatrix;
use crate::{Error, Result};

/// Row-style Hermite normal form `h = u · m` of an integer matrix.
///
/// `h` has the same shape as `m`: its nonzero rows come first, are in echelon
/// form with positive pivots, and every entry above a pivot lies in
/// `[0, pivot)`. `u` is square and unimodular.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hnf {
    pub h: QMatrix,
    pub u: QMatrix,
    pub rank: usize,
}

impl Hnf {
    /// The nonzero rows of `h`, i.e. a basis of the row lattice.
    pub fn basis(&self) -> Vec<Vec<BigInt>> {
        (0..self.rank)
            .map(|i| self.h.row(i).iter().map(|x| x.to_integer()).collect())
            .collect()
    }
}

pub fn hnf(m: &QMatrix) -> Result<Hnf> {
    if !m.is_integer() {
        return Err(Error::NonInteger);
    }
    let rows = m.rows();
    let cols = m.cols();
    let mut h: Vec<Vec<BigInt>> = (0..rows)
        .map(|i| m.row(i).iter().map(|x| x.to_integer()).collect())
        .collect();
    let mut u: Vec<Vec<BigInt>> = (0..rows)
        .map(|i| {
            (0..rows)
                .map(|j| {
                    if i == j {
                        BigInt::one()
                    } else {
                        BigInt::zero()
                    }
                })
                .collect()
        })
        .collect();

    let mut row = 0;
    for col in 0..cols {
        if row == rows {
            break;
        }
        // Euclid on column `col` below `row` until a single nonzero entry remains.
        loop {
            let pivot = (row..rows)
                .filter(|&r| !h[r][col].is_zero())
                .min_by(|&a, &b| h[a][col].abs().cmp(&h[b][col].abs()).then(a.cmp(&b)));
            let Some(p) = pivot else { break };
            h.swap(row, p);
            u.swap(row, p);
            let mut done = true;
            for r in row + 1..rows {
                if h[r][col].is_zero() {
                    continue;
                }
                let q = h[r][col].div_floor(&h[row][col]);
                sub_multiple(&mut h, r, row, &q);
                sub_multiple(&mut u, r, row, &q);
                if !h[r][col].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if h[row][col].is_zero() {
            continue;
        }
        if h[row][col].is_negative() {
            negate(&mut h[row]);
            negate(&mut u[row]);
        }
        for r in 0..row {
            let q = h[r][col].div_floor(&h[row][col]);
            if !q.is_zero() {
                sub_multiple(&mut h, r, row, &q);
                sub_multiple(&mut u, r, row, &q);
            }
        }
        row += 1;
    }

    Ok(Hnf {
        h: QMatrix::from_bigint_rows(&h)?,
        u: QMatrix::from_bigint_rows(&u)?,
        rank: row,
    })
}

/// `m[target] -= q * m[source]`
fn sub_multiple(m: &mut [Vec<BigInt>], target: usize, source: usize, q: &BigInt) {
    let src = m[source].clone();
    for (x, s) in m[target].iter_mut().zip(src) {
        *x -= q * s;
    }
}

fn negate(row: &mut [BigInt]) {
    for x in row {
        *x = -std::mem::take(x);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::{int_vec, rat};

    #[test]
    fn identity_is_fixed() {
        let id = QMatrix::identity(4);
        let r = hnf(&id).unwrap();
        assert_eq!(r.h, id);
        assert_eq!(r.u, id);
        assert_eq!(r.rank, 4);
    }

    #[test]
    fn index_two_sublattice() {
        let m = QMatrix::from_int_rows(&[[2, 0], [0, 2], [1, 1]]).unwrap();
        let r = hnf(&m).unwrap();
        assert_eq!(r.basis(), vec![int_vec(&[1, 1]), int_vec(&[0, 2])]);
        assert_eq!(r.u.mul(&m).unwrap(), r.h);
        assert_eq!(r.u.det().unwrap().abs(), rat(1));
    }

    #[test]
    fn doubled_theta2_generators() {
        let m = QMatrix::from_int_rows(&[[2, 0, 0], [0, 2, 0], [0, 0, 2], [1, 1, 1]]).unwrap();
        let r = hnf(&m).unwrap();
        assert_eq!(r.rank, 3);
        let basis = QMatrix::from_bigint_rows(&r.basis()).unwrap();
        assert_eq!(basis.det().unwrap(), rat(4));
        assert_eq!(r.u.mul(&m).unwrap(), r.h);
    }

    #[test]
    fn rejects_fractions() {
        let m = QMatrix::from_rows(vec![vec![crate::exactmath::ratio(1, 2)]]).unwrap();
        assert_eq!(hnf(&m), Err(Error::NonInteger));
    }
}
