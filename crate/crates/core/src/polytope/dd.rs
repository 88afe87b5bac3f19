//! Double description vertex enumeration.
//!
//! `{x : A x <= b}` is homogenized to the cone `{(t, x) : b t - A x >= 0,
//! t >= 0}`. Starting from a simplicial cone on `n + 1` independent rows, the
//! remaining rows are inserted in index order; new extreme rays come from
//! pairs of adjacent rays on opposite sides of the inserted hyperplane
//! (combinatorial adjacency test). Rays are kept as primitive integer
//! vectors, so all arithmetic stays in ℤ.

use num_bigint::{BigInt, Sign};
use num_traits::{Signed, Zero};

use super::rowset::RowSet;
use super::{HPolytope, VPolytope};
use crate::exactmath::{primitive, primitive_rational, QMatrix, Rational};
use crate::{par, Error, Result};

struct Ray {
    v: Vec<BigInt>,
    zero: RowSet,
}

pub fn enumerate_vertices(h: &HPolytope) -> Result<VPolytope> {
    let n = h.dim();
    // homogenized rows; the last one is t >= 0
    let mut cone: Vec<Vec<BigInt>> = h
        .rows()
        .iter()
        .map(|r| {
            std::iter::once(BigInt::from(r.b))
                .chain(r.a.iter().map(|&x| BigInt::from(-x)))
                .collect()
        })
        .collect();
    let mut t_row = vec![BigInt::zero(); n + 1];
    t_row[0] = BigInt::from(1);
    cone.push(t_row);

    let Some(basis) = initial_basis(&cone, n + 1) else {
        return lineality_case(h);
    };
    let mut rays = initial_rays(&cone, &basis)?;

    let mut inserted = vec![false; cone.len()];
    basis.iter().for_each(|&i| inserted[i] = true);
    let d = n + 1;

    for i in 0..cone.len() {
        if inserted[i] {
            continue;
        }
        let row = &cone[i];
        let values: Vec<BigInt> = rays.iter().map(|r| dot(row, &r.v)).collect();
        let pos: Vec<usize> = (0..rays.len())
            .filter(|&k| values[k].is_positive())
            .collect();
        let neg: Vec<usize> = (0..rays.len())
            .filter(|&k| values[k].is_negative())
            .collect();

        let created = par::flat_map_range(pos.len(), |pi| {
            let p = pos[pi];
            let mut out = Vec::new();
            for &q in &neg {
                let common = rays[p].zero.intersection(&rays[q].zero);
                if common.len() + 2 < d {
                    continue;
                }
                let blocked = rays
                    .iter()
                    .enumerate()
                    .any(|(k, r)| k != p && k != q && common.is_subset(&r.zero));
                if blocked {
                    continue;
                }
                let v: Vec<BigInt> = rays[q]
                    .v
                    .iter()
                    .zip(&rays[p].v)
                    .map(|(qv, pv)| &values[p] * qv - &values[q] * pv)
                    .collect();
                let v = primitive(&v).expect("adjacent rays are independent");
                let mut zero = common;
                zero.insert(i);
                out.push(Ray { v, zero });
            }
            out
        });

        let mut next = Vec::with_capacity(rays.len() + created.len());
        for (k, mut r) in rays.into_iter().enumerate() {
            match values[k].sign() {
                Sign::Minus => {}
                Sign::NoSign => {
                    r.zero.insert(i);
                    next.push(r);
                }
                Sign::Plus => next.push(r),
            }
        }
        next.extend(created);
        rays = next;
        inserted[i] = true;
    }

    let mut vertices = Vec::new();
    let mut recession = false;
    for r in &rays {
        if r.v[0].is_zero() {
            recession = true;
        } else {
            let t = Rational::from_integer(r.v[0].clone());
            vertices.push(
                r.v[1..]
                    .iter()
                    .map(|x| Rational::from_integer(x.clone()) / &t)
                    .collect(),
            );
        }
    }
    if recession && !vertices.is_empty() {
        return Err(Error::Unbounded);
    }
    Ok(VPolytope::from_vertices(h, vertices))
}

fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Greedily picks `d` linearly independent rows, trying `t >= 0` (the last
/// row) first and the rest in index order.
fn initial_basis(cone: &[Vec<BigInt>], d: usize) -> Option<Vec<usize>> {
    let order = std::iter::once(cone.len() - 1).chain(0..cone.len() - 1);
    let mut chosen: Vec<usize> = Vec::with_capacity(d);
    for i in order {
        let mut trial: Vec<Vec<BigInt>> = chosen.iter().map(|&c| cone[c].clone()).collect();
        trial.push(cone[i].clone());
        let m = QMatrix::from_bigint_rows(&trial).ok()?;
        if m.rank() == trial.len() {
            chosen.push(i);
            if chosen.len() == d {
                return Some(chosen);
            }
        }
    }
    None
}

/// Rays of the simplicial cone `{y : B y >= 0}`: the columns of `B^{-1}`.
fn initial_rays(cone: &[Vec<BigInt>], basis: &[usize]) -> Result<Vec<Ray>> {
    let rows: Vec<Vec<BigInt>> = basis.iter().map(|&i| cone[i].clone()).collect();
    let inv = QMatrix::from_bigint_rows(&rows)?.inverse()?;
    let d = basis.len();
    (0..d)
        .map(|k| {
            let col: Vec<Rational> = (0..d).map(|r| inv.get(r, k).clone()).collect();
            let v = primitive_rational(&col)?;
            let mut zero = RowSet::new(cone.len());
            basis
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != k)
                .for_each(|(_, &i)| zero.insert(i));
            Ok(Ray { v, zero })
        })
        .collect()
}

/// `A` lacks full column rank, so a nonempty polyhedron contains a line.
/// Feasibility is decided on the coordinates of a maximal independent column
/// set, which have the same image under `A`.
fn lineality_case(h: &HPolytope) -> Result<VPolytope> {
    let n = h.dim();
    let mut cols: Vec<usize> = Vec::new();
    for j in 0..n {
        let mut trial = cols.clone();
        trial.push(j);
        let m: Vec<Vec<BigInt>> = h
            .rows()
            .iter()
            .map(|r| trial.iter().map(|&c| BigInt::from(r.a[c])).collect())
            .collect();
        if !m.is_empty() && QMatrix::from_bigint_rows(&m)?.rank() == trial.len() {
            cols = trial;
        }
    }
    let feasible = if cols.is_empty() {
        h.rows().iter().all(|r| r.b >= 0)
    } else {
        let reduced = HPolytope::new(
            cols.len(),
            h.rows()
                .iter()
                .map(|r| (cols.iter().map(|&c| r.a[c]).collect(), r.b)),
        )?;
        !enumerate_vertices(&reduced)?.is_empty()
    };
    if feasible {
        Err(Error::Unbounded)
    } else {
        Ok(VPolytope::from_vertices(h, Vec::new()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::{rat, rat_vec, ratio};
    use crate::graph::multi_theta;
    use crate::polytope::build_hrep;

    #[test]
    fn tetrahedron_vertices() {
        let v = enumerate_vertices(&build_hrep(&multi_theta(2).unwrap())).unwrap();
        let expected: Vec<Vec<Rational>> = [[0, 0, 0], [0, 1, 1], [1, 0, 1], [1, 1, 0]]
            .iter()
            .map(|p| rat_vec(p))
            .collect();
        assert_eq!(v.vertices(), expected.as_slice());
    }

    #[test]
    fn unit_cube_vertices() {
        let v = enumerate_vertices(&HPolytope::unit_cube(3)).unwrap();
        assert_eq!(v.len(), 8);
        assert!(v
            .vertices()
            .iter()
            .all(|p| p.iter().all(|x| *x == rat(0) || *x == rat(1))));
    }

    #[test]
    fn fractional_vertex() {
        // triangle x >= 0, y >= 0, 2x + 2y <= 1
        let h = HPolytope::new(2, [(vec![-1, 0], 0), (vec![0, -1], 0), (vec![2, 2], 1)]).unwrap();
        let v = enumerate_vertices(&h).unwrap();
        assert_eq!(
            v.vertices(),
            &[
                vec![rat(0), rat(0)],
                vec![rat(0), ratio(1, 2)],
                vec![ratio(1, 2), rat(0)]
            ]
        );
    }

    #[test]
    fn unbounded_is_reported() {
        let orthant = HPolytope::new(2, [(vec![-1, 0], 0), (vec![0, -1], 0)]).unwrap();
        assert_eq!(enumerate_vertices(&orthant), Err(Error::Unbounded));
        let slab = HPolytope::new(2, [(vec![1, 0], 1), (vec![-1, 0], 0)]).unwrap();
        assert_eq!(enumerate_vertices(&slab), Err(Error::Unbounded));
    }

    #[test]
    fn empty_is_reported() {
        let h = HPolytope::new(1, [(vec![1], 0), (vec![-1], -1)]).unwrap();
        let v = enumerate_vertices(&h).unwrap();
        assert!(v.is_empty());
        assert_eq!(v.dimension(), -1);
        let infeasible_line = HPolytope::new(2, [(vec![1, 0], 0), (vec![-1, 0], -1)]).unwrap();
        assert!(enumerate_vertices(&infeasible_line).unwrap().is_empty());
    }
}
