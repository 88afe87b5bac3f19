//! Smoothness of the toric variety, decided on the polytope: simplicity
//! first, then at every vertex the primitive edge directions must form a
//! basis of the character lattice, the dual of the torus lattice.
//!
//! [`fan_is_smooth`] is the same condition read off the normal fan in the
//! torus lattice itself.

use num_traits::Signed;
use serde::{Deserialize, Serialize};

use crate::exactmath::{primitive_rational, QMatrix, Rational};
use crate::fan::Fan;
use crate::lattice::{lattice_polytope_offender, Lattice};
use crate::polytope::{facet_defining_rows, simplicity, HPolytope, Simplicity, VPolytope};
use crate::{par, Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Overall {
    Smooth,
    Singular,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DelzantVerdict {
    pub simplicity: Simplicity,
    /// First vertex that is not a lattice point, if any.
    pub lattice_offender: Option<Vec<Rational>>,
    pub smooth: bool,
    /// Vertex where smoothness fails. For a non-simple polytope this is the
    /// simplicity witness.
    pub singular_vertex: Option<Vec<Rational>>,
    /// Determinant of the primitive edge matrix at `singular_vertex`, when
    /// the polytope is simple.
    pub edge_determinant: Option<Rational>,
    pub overall: Overall,
}

impl DelzantVerdict {
    pub fn is_lattice_polytope(&self) -> bool {
        self.lattice_offender.is_none()
    }
}

pub fn delzant_check(h: &HPolytope, v: &VPolytope, lattice: &Lattice) -> Result<DelzantVerdict> {
    let facets = facet_defining_rows(h, v)?;
    delzant_check_with_facets(v, lattice, &facets)
}

/// [`delzant_check`] with precomputed facet-defining rows.
pub fn delzant_check_with_facets(
    v: &VPolytope,
    lattice: &Lattice,
    facets: &[usize],
) -> Result<DelzantVerdict> {
    let simplicity = simplicity(v, facets)?;
    let lattice_offender = lattice_polytope_offender(v, lattice)?;
    if let Simplicity::NonSimple { witness, .. } = &simplicity {
        let singular_vertex = Some(witness.clone());
        return Ok(DelzantVerdict {
            simplicity,
            lattice_offender,
            smooth: false,
            singular_vertex,
            edge_determinant: None,
            overall: Overall::Singular,
        });
    }

    let tight: Vec<Vec<usize>> = (0..v.len())
        .map(|i| {
            v.incidence(i)
                .iter()
                .copied()
                .filter(|r| facets.binary_search(r).is_ok())
                .collect()
        })
        .collect();
    let characters = lattice.dual();
    let indices: Vec<usize> = (0..v.len()).collect();
    let dets = par::map(&indices, |&i| edge_determinant(v, &characters, &tight, i));
    for (i, det) in dets.into_iter().enumerate() {
        let det = det?;
        if det.abs() != Rational::from_integer(1.into()) {
            return Ok(DelzantVerdict {
                simplicity,
                lattice_offender,
                smooth: false,
                singular_vertex: Some(v.vertices()[i].clone()),
                edge_determinant: Some(det),
                overall: Overall::Singular,
            });
        }
    }
    Ok(DelzantVerdict {
        simplicity,
        lattice_offender,
        smooth: true,
        singular_vertex: None,
        edge_determinant: None,
        overall: Overall::Smooth,
    })
}

/// Determinant of the matrix whose rows are the primitive vectors of
/// `lattice` along the edges at simple vertex `i`. Two vertices are adjacent
/// iff they share `n - 1` facets.
fn edge_determinant(
    v: &VPolytope,
    lattice: &Lattice,
    tight: &[Vec<usize>],
    i: usize,
) -> Result<Rational> {
    let n = v.ambient_dim();
    let here = &v.vertices()[i];
    let mut rows = Vec::with_capacity(n);
    for (j, other) in tight.iter().enumerate() {
        if j == i || shared(&tight[i], other) != n - 1 {
            continue;
        }
        let diff: Vec<Rational> = v.vertices()[j]
            .iter()
            .zip(here)
            .map(|(a, b)| a - b)
            .collect();
        let coords = lattice.coordinates(&diff)?;
        let edge = primitive_rational(&coords)?;
        rows.push(edge.into_iter().map(Rational::from_integer).collect());
    }
    if rows.len() != n {
        return Err(Error::Contradiction(format!(
            "simple vertex {i} has {} neighbours in dimension {n}",
            rows.len()
        )));
    }
    QMatrix::from_rows(rows)?.det()
}

/// True iff every maximal cone is simplicial and its primitive rays, taken
/// in lattice coordinates, form a basis of `lattice`.
pub fn fan_is_smooth(fan: &Fan, lattice: &Lattice) -> Result<bool> {
    let n = fan.dim;
    let primitive_rays = fan
        .rays
        .iter()
        .map(|r| {
            let r: Vec<Rational> = r.iter().cloned().map(Rational::from_integer).collect();
            let coords = primitive_rational(&lattice.coordinates(&r)?)?;
            Ok(coords.into_iter().map(Rational::from_integer).collect())
        })
        .collect::<Result<Vec<Vec<Rational>>>>()?;
    for cone in &fan.cones {
        if cone.len() != n {
            return Ok(false);
        }
        let m = QMatrix::from_rows(cone.iter().map(|&i| primitive_rays[i].clone()).collect())?;
        if m.det()?.abs() != Rational::from_integer(1.into()) {
            return Ok(false);
        }
    }
    Ok(true)
}

fn shared(a: &[usize], b: &[usize]) -> usize {
    let (mut i, mut j, mut count) = (0, 0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                count += 1;
                i += 1;
                j += 1;
            }
        }
    }
    count
}
