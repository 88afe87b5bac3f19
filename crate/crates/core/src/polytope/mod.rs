//! H- and V-representations of the moment polytope and the queries the
//! smoothness analysis needs.

mod brute;
mod cdd;
mod dd;
mod faces;
mod labelling;
mod rowset;

pub use brute::brute_force_vertices;
pub use cdd::{parse_hrep, write_hrep, write_vrep};
pub use dd::enumerate_vertices;
pub use faces::{
    affine_dimension, dimension, facet_defining_rows, is_simple, simplicity, Simplicity,
};
pub use labelling::{cube_vertex_labellings, EdgeLabelling};

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::exactmath::{dot, rat_vec, Rational};
use crate::graph::TrivalentGraph;
use crate::{Error, Result};

/// Which of the four trinion inequalities produced a row.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum RowKind {
    /// `x1 + x2 + x3 <= 2`
    Sum,
    /// The triangle inequality with a minus sign on the given position of
    /// the trinion triple, e.g. `Triangle(2)` is `x1 + x2 - x3 >= 0`.
    Triangle(u8),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct RowSource {
    pub trinion: usize,
    pub kind: RowKind,
}

/// One inequality `a · x <= b`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct HRow {
    pub a: Vec<i64>,
    pub b: i64,
    pub sources: Vec<RowSource>,
}

impl HRow {
    pub fn slack(&self, x: &[Rational]) -> Rational {
        Rational::from_integer(self.b.into()) - dot(&rat_vec(&self.a), x)
    }
}

/// An exact inequality system `A x <= b` in ℝ^n. Rows are gcd-reduced and
/// pairwise distinct.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HPolytope {
    dim: usize,
    rows: Vec<HRow>,
}

impl HPolytope {
    /// Builds a system from raw rows `(a, b)` meaning `a · x <= b`,
    /// normalizing and dropping exact duplicates.
    pub fn new(dim: usize, rows: impl IntoIterator<Item = (Vec<i64>, i64)>) -> Result<Self> {
        let mut h = HPolytope {
            dim,
            rows: Vec::new(),
        };
        for (a, b) in rows {
            h.push(a, b, None)?;
        }
        Ok(h)
    }

    /// The unit cube `[0,1]^n` as `2n` rows.
    pub fn unit_cube(dim: usize) -> Self {
        let rows = (0..dim).flat_map(|i| {
            let mut up = vec![0; dim];
            up[i] = 1;
            let mut down = vec![0; dim];
            down[i] = -1;
            [(up, 1), (down, 0)]
        });
        Self::new(dim, rows).expect("rows have the right length")
    }

    fn push(&mut self, a: Vec<i64>, b: i64, source: Option<RowSource>) -> Result<()> {
        if a.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: a.len(),
            });
        }
        let (a, b) = normalize(a, b);
        if let Some(row) = self.rows.iter_mut().find(|r| r.a == a && r.b == b) {
            row.sources.extend(source);
        } else {
            self.rows.push(HRow {
                a,
                b,
                sources: source.into_iter().collect(),
            });
        }
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rows(&self) -> &[HRow] {
        &self.rows
    }

    /// True iff `x` satisfies every row.
    pub fn contains(&self, x: &[Rational]) -> Result<bool> {
        if x.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: x.len(),
            });
        }
        Ok(self
            .rows
            .iter()
            .all(|r| r.slack(x) >= Rational::from_integer(0.into())))
    }

    /// Indices of the rows satisfied with equality at `x`.
    pub fn tight_rows(&self, x: &[Rational]) -> Vec<usize> {
        let zero = Rational::from_integer(0.into());
        self.rows
            .iter()
            .enumerate()
            .filter(|(_, r)| r.slack(x) == zero)
            .map(|(i, _)| i)
            .collect()
    }
}

fn normalize(mut a: Vec<i64>, mut b: i64) -> (Vec<i64>, i64) {
    let g = a.iter().fold(b, |acc, &x| acc.gcd(&x));
    if g > 1 {
        a.iter_mut().for_each(|x| *x /= g);
        b /= g;
    }
    (a, b)
}

/// The polytope cut out by the four trinion inequalities of every graph
/// vertex, in ℝ^{|E|}. A loop's coordinate appears twice in its triple, so
/// its coefficients add up.
pub fn build_hrep(graph: &TrivalentGraph) -> HPolytope {
    let n = graph.edge_count();
    let mut h = HPolytope {
        dim: n,
        rows: Vec::with_capacity(4 * graph.vertex_count()),
    };
    for triple in graph.trinion_triples() {
        let kinds = [
            RowKind::Sum,
            RowKind::Triangle(2),
            RowKind::Triangle(1),
            RowKind::Triangle(0),
        ];
        for kind in kinds {
            let mut a = vec![0i64; n];
            let b = match kind {
                RowKind::Sum => {
                    for &e in &triple.edges {
                        a[e] += 1;
                    }
                    2
                }
                // sum of the other two minus the negated one is >= 0; flip to <=
                RowKind::Triangle(neg) => {
                    for (pos, &e) in triple.edges.iter().enumerate() {
                        a[e] += if pos == neg as usize { 1 } else { -1 };
                    }
                    0
                }
            };
            h.push(
                a,
                b,
                Some(RowSource {
                    trinion: triple.vertex,
                    kind,
                }),
            )
            .expect("row length matches edge count");
        }
    }
    h
}

/// Vertex set of a polytope with its vertex–row incidence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VPolytope {
    ambient: usize,
    vertices: Vec<Vec<Rational>>,
    incidence: Vec<Vec<usize>>,
    dimension: i64,
}

impl VPolytope {
    /// Sorts and deduplicates `points` and records which rows of `h` each
    /// one makes tight.
    pub fn from_vertices(h: &HPolytope, mut points: Vec<Vec<Rational>>) -> Self {
        points.sort();
        points.dedup();
        let incidence = crate::par::map(&points, |p| h.tight_rows(p));
        let dimension = affine_dimension(&points);
        VPolytope {
            ambient: h.dim(),
            vertices: points,
            incidence,
            dimension,
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn vertices(&self) -> &[Vec<Rational>] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Rows of the H-representation tight at vertex `i`, ascending.
    pub fn incidence(&self, i: usize) -> &[usize] {
        &self.incidence[i]
    }

    /// Affine dimension of the vertex set, `-1` when empty.
    pub fn dimension(&self) -> i64 {
        self.dimension
    }

    pub fn position(&self, x: &[Rational]) -> Option<usize> {
        self.vertices.binary_search_by(|v| v.as_slice().cmp(x)).ok()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::{rat, ratio};
    use crate::graph::multi_theta;

    fn rows_of(h: &HPolytope) -> Vec<(Vec<i64>, i64)> {
        h.rows().iter().map(|r| (r.a.clone(), r.b)).collect()
    }

    #[test]
    fn theta2_collapses_to_four_rows() {
        let h = build_hrep(&multi_theta(2).unwrap());
        assert_eq!(
            rows_of(&h),
            vec![
                (vec![1, 1, 1], 2),
                (vec![-1, -1, 1], 0),
                (vec![-1, 1, -1], 0),
                (vec![1, -1, -1], 0),
            ]
        );
        assert!(h.rows().iter().all(|r| r.sources.len() == 2));
    }

    #[test]
    fn dumbbell_loop_rows_fold() {
        let g = TrivalentGraph::from_edges(&[(0, 0), (0, 1), (1, 1)]).unwrap();
        let h = build_hrep(&g);
        let rows = rows_of(&h);
        // trinion (0,0,1): 2x0 + x1 <= 2, 2x0 - x1 >= 0, x1 >= 0
        assert_eq!(rows[0], (vec![2, 1, 0], 2));
        assert_eq!(rows[1], (vec![-2, 1, 0], 0));
        assert_eq!(rows[2], (vec![0, -1, 0], 0));
        // trinion (1,2,2) contributes its own three rows; x1 >= 0 is shared
        assert_eq!(rows.len(), 5);
        assert_eq!(h.rows()[2].sources.len(), 4);
    }

    #[test]
    fn theta3_has_sixteen_rows() {
        let h = build_hrep(&multi_theta(3).unwrap());
        assert_eq!(h.rows().len(), 16);
        for r in h.rows() {
            assert!(r.b == 0 || r.b == 2);
            assert!(r.a.iter().all(|x| (-2..=2).contains(x)));
        }
    }

    #[test]
    fn normalization_reduces_and_dedups() {
        let h = HPolytope::new(2, [(vec![2, 4], 6), (vec![1, 2], 3), (vec![0, 0], 0)]).unwrap();
        assert_eq!(rows_of(&h), vec![(vec![1, 2], 3), (vec![0, 0], 0)]);
        assert!(HPolytope::new(2, [(vec![1], 0)]).is_err());
    }

    #[test]
    fn contains_examples() {
        for g in 2..=6 {
            let h = build_hrep(&multi_theta(g).unwrap());
            let n = h.dim();
            assert!(!h.contains(&vec![rat(1); n]).unwrap());
            assert!(h.contains(&vec![rat(0); n]).unwrap());
        }
        let h3 = build_hrep(&multi_theta(3).unwrap());
        assert!(h3.contains(&vec![ratio(1, 2); 6]).unwrap());
        assert!(h3.contains(&[rat(0)]).is_err());
    }
}
