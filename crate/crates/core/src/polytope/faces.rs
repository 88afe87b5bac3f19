use super::{HPolytope, VPolytope};
use crate::exactmath::{QMatrix, Rational};
use crate::{par, Error, Result};

/// Affine dimension of a point set; `-1` for the empty set.
pub fn affine_dimension(points: &[Vec<Rational>]) -> i64 {
    let Some((first, rest)) = points.split_first() else {
        return -1;
    };
    if rest.is_empty() || first.is_empty() {
        return 0;
    }
    let diffs: Vec<Vec<Rational>> = rest
        .iter()
        .map(|p| p.iter().zip(first).map(|(a, b)| a - b).collect())
        .collect();
    QMatrix::from_rows(diffs).map_or(0, |m| m.rank() as i64)
}

pub fn dimension(v: &VPolytope) -> i64 {
    v.dimension()
}

fn require_full(v: &VPolytope) -> Result<()> {
    if v.dimension() != v.ambient_dim() as i64 {
        return Err(Error::NotFullDimensional {
            dimension: v.dimension(),
            ambient: v.ambient_dim(),
        });
    }
    Ok(())
}

/// Rows whose tight vertices span an affine space of dimension `n - 1`.
pub fn facet_defining_rows(h: &HPolytope, v: &VPolytope) -> Result<Vec<usize>> {
    require_full(v)?;
    let n = h.dim() as i64;
    let mut tight: Vec<Vec<usize>> = vec![Vec::new(); h.rows().len()];
    for i in 0..v.len() {
        for &r in v.incidence(i) {
            tight[r].push(i);
        }
    }
    let is_facet = par::map(&tight, |verts| {
        let pts: Vec<Vec<Rational>> = verts.iter().map(|&i| v.vertices()[i].clone()).collect();
        affine_dimension(&pts) == n - 1
    });
    Ok((0..h.rows().len()).filter(|&r| is_facet[r]).collect())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Simplicity {
    Simple,
    /// The first vertex (in lexicographic order) that does not lie on
    /// exactly `n` facets.
    NonSimple {
        witness: Vec<Rational>,
        facet_count: usize,
    },
}

impl Simplicity {
    pub fn is_simple(&self) -> bool {
        matches!(self, Simplicity::Simple)
    }
}

pub fn is_simple(h: &HPolytope, v: &VPolytope) -> Result<Simplicity> {
    let facets = facet_defining_rows(h, v)?;
    simplicity(v, &facets)
}

/// Simplicity given precomputed facet-defining rows.
pub fn simplicity(v: &VPolytope, facets: &[usize]) -> Result<Simplicity> {
    require_full(v)?;
    let n = v.ambient_dim();
    for i in 0..v.len() {
        let count = v
            .incidence(i)
            .iter()
            .filter(|r| facets.binary_search(r).is_ok())
            .count();
        if count != n {
            return Ok(Simplicity::NonSimple {
                witness: v.vertices()[i].clone(),
                facet_count: count,
            });
        }
    }
    Ok(Simplicity::Simple)
}
