//! Normal fans: one inward primitive ray per facet, one maximal cone per
//! vertex.

use crate::exactmath::{primitive, QMatrix, Rational};
use crate::polytope::{facet_defining_rows, HPolytope, VPolytope};
use crate::{Error, Result};
use num_bigint::BigInt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fan {
    pub dim: usize,
    pub rays: Vec<Vec<BigInt>>,
    /// Ray indices of each maximal cone, ascending.
    pub cones: Vec<Vec<usize>>,
}

impl Fan {
    /// Rank of the linear span of each maximal cone.
    pub fn cone_span_ranks(&self) -> Vec<usize> {
        self.cones
            .iter()
            .map(|c| {
                if c.is_empty() {
                    return 0;
                }
                let rows: Vec<Vec<BigInt>> = c.iter().map(|&i| self.rays[i].clone()).collect();
                QMatrix::from_bigint_rows(&rows).map_or(0, |m| m.rank())
            })
            .collect()
    }
}

pub fn normal_fan(h: &HPolytope, v: &VPolytope) -> Result<Fan> {
    let facets = facet_defining_rows(h, v)?;
    let rays = facets
        .iter()
        .map(|&r| {
            let inward: Vec<BigInt> = h.rows()[r].a.iter().map(|&x| BigInt::from(-x)).collect();
            primitive(&inward)
        })
        .collect::<Result<Vec<_>>>()?;
    let cones = (0..v.len())
        .map(|i| {
            v.incidence(i)
                .iter()
                .filter_map(|r| facets.binary_search(r).ok())
                .collect()
        })
        .collect();
    Ok(Fan {
        dim: h.dim(),
        rays,
        cones,
    })
}

/// Pushes a fan forward along an invertible integer matrix.
pub fn map_fan(fan: &Fan, m: &QMatrix) -> Result<Fan> {
    if m.rows() != fan.dim || m.cols() != fan.dim {
        return Err(Error::DimensionMismatch {
            expected: fan.dim,
            found: m.rows(),
        });
    }
    if !m.is_integer() {
        return Err(Error::NonInteger);
    }
    if m.det()? == Rational::from_integer(0.into()) {
        return Err(Error::Singular);
    }
    let rays = fan
        .rays
        .iter()
        .map(|r| {
            let image: Vec<BigInt> = (0..m.rows())
                .map(|i| {
                    m.row(i)
                        .iter()
                        .zip(r)
                        .map(|(a, x)| a.to_integer() * x)
                        .sum()
                })
                .collect();
            primitive(&image)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Fan {
        dim: fan.dim,
        rays,
        cones: fan.cones.clone(),
    })
}
