//! The lattice generated by the standard basis together with the half-sums
//! `½(e_i + e_j + e_k)` over the trinions of a graph.

use crate::exactmath::{denominator_lcm, hnf, is_integral, QMatrix, Rational, Solution};
use crate::graph::TrivalentGraph;
use crate::polytope::VPolytope;
use crate::{Error, Result};
use num_bigint::BigInt;
use num_traits::Signed;

/// A full-rank lattice in ℚ^n.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lattice {
    dim: usize,
    generators: Vec<Vec<Rational>>,
    basis: Vec<Vec<Rational>>,
    covolume: Rational,
}

impl Lattice {
    /// Reduces `generators` to a basis: clear denominators, take the Hermite
    /// normal form, scale back.
    pub fn from_generators(dim: usize, generators: Vec<Vec<Rational>>) -> Result<Self> {
        if let Some(g) = generators.iter().find(|g| g.len() != dim) {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: g.len(),
            });
        }
        let scale = denominator_lcm(generators.iter().flatten());
        let scaled: Vec<Vec<Rational>> = generators
            .iter()
            .map(|g| g.iter().map(|x| x * &scale).collect())
            .collect();
        let reduced = hnf(&QMatrix::from_rows(scaled)?)?;
        if reduced.rank != dim {
            return Err(Error::Singular);
        }
        let scale = Rational::from_integer(scale);
        let basis: Vec<Vec<Rational>> = reduced
            .basis()
            .into_iter()
            .map(|row| {
                row.into_iter()
                    .map(|x| Rational::from_integer(x) / &scale)
                    .collect()
            })
            .collect();
        let covolume = QMatrix::from_rows(basis.clone())?.det()?.abs();
        Ok(Lattice {
            dim,
            generators,
            basis,
            covolume,
        })
    }

    pub fn standard(dim: usize) -> Self {
        let id = QMatrix::identity(dim);
        Self::from_generators(dim, id.to_rows()).expect("identity has full rank")
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn generators(&self) -> &[Vec<Rational>] {
        &self.generators
    }

    /// Rows of the Hermite-reduced basis.
    pub fn basis(&self) -> &[Vec<Rational>] {
        &self.basis
    }

    pub fn covolume(&self) -> &Rational {
        &self.covolume
    }

    /// Coefficients `c` with `x = Σ c_i basis_i`.
    pub fn coordinates(&self, x: &[Rational]) -> Result<Vec<Rational>> {
        if x.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: x.len(),
            });
        }
        let bt = QMatrix::from_rows(self.basis.clone())?.transpose();
        match bt.solve(x)? {
            Solution::Unique(c) => Ok(c),
            _ => Err(Error::Singular),
        }
    }

    pub fn contains(&self, x: &[Rational]) -> Result<bool> {
        Ok(is_integral(&self.coordinates(x)?))
    }

    /// `{x : x · y ∈ ℤ for all y in self}`. Its basis is the rows of the
    /// inverse transpose of this basis.
    pub fn dual(&self) -> Lattice {
        let b = QMatrix::from_rows(self.basis.clone()).expect("basis is nonempty");
        let dual = b.inverse().expect("basis is nonsingular").transpose();
        Lattice::from_generators(self.dim, dual.to_rows()).expect("dual basis has full rank")
    }
}

pub fn build_lattice(graph: &TrivalentGraph) -> Lattice {
    let n = graph.edge_count();
    let half = Rational::new(BigInt::from(1), BigInt::from(2));
    let mut generators = QMatrix::identity(n).to_rows();
    for t in graph.trinion_triples() {
        let mut g = vec![Rational::from_integer(0.into()); n];
        for e in t.edges {
            g[e] += &half;
        }
        generators.push(g);
    }
    Lattice::from_generators(n, generators).expect("standard basis is among the generators")
}

pub fn is_lattice_point(x: &[Rational], lattice: &Lattice) -> Result<bool> {
    lattice.contains(x)
}

/// `None` if every vertex is a lattice point, otherwise the first vertex
/// that is not.
pub fn lattice_polytope_offender(
    v: &VPolytope,
    lattice: &Lattice,
) -> Result<Option<Vec<Rational>>> {
    for p in v.vertices() {
        if !lattice.contains(p)? {
            return Ok(Some(p.clone()));
        }
    }
    Ok(None)
}

pub fn is_lattice_polytope(v: &VPolytope, lattice: &Lattice) -> Result<bool> {
    Ok(lattice_polytope_offender(v, lattice)?.is_none())
}
