//! Trivalent graphs with loops and multi-edges.
//!
//! Each graph vertex stands for a trinion and each edge for a marking curve.
//! A loop at `v` contributes 2 to the degree of `v`.

use std::collections::VecDeque;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TrivalentGraph {
    vertex_count: usize,
    /// Endpoints stored as `(min, max)`.
    edges: Vec<(usize, usize)>,
    genus: usize,
}

/// Edge indices of the three boundary circles of one trinion, sorted
/// ascending, a loop's index listed twice.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TrinionTriple {
    pub vertex: usize,
    pub edges: [usize; 3],
}

impl TrivalentGraph {
    /// Validates raw edge data. Vertex ids are inferred from the endpoints
    /// and must be exactly `0..|V|`.
    pub fn from_edges(edges: &[(usize, usize)]) -> Result<Self> {
        let vertex_count = edges.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0);
        Self::validate(vertex_count, edges)
    }

    pub fn validate(vertex_count: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if edges.is_empty() {
            return Err(Error::GenusTooSmall {
                genus: 1 - vertex_count as i64,
            });
        }
        let mut degree = vec![0usize; vertex_count];
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= vertex_count {
                    return Err(Error::VertexGap {
                        expected: vertex_count,
                        missing: vertex_count,
                    });
                }
                degree[w] += 1;
            }
        }
        if let Some(missing) = degree.iter().position(|&d| d == 0) {
            return Err(Error::VertexGap {
                expected: vertex_count,
                missing,
            });
        }
        if let Some((vertex, &degree)) = degree.iter().enumerate().find(|(_, &d)| d != 3) {
            return Err(Error::DegreeViolation { vertex, degree });
        }
        let edges: Vec<(usize, usize)> = edges.iter().map(|&(u, v)| (u.min(v), u.max(v))).collect();
        if !is_connected(vertex_count, &edges) {
            return Err(Error::Disconnected);
        }
        let genus = edges.len() as i64 - vertex_count as i64 + 1;
        if genus < 2 {
            return Err(Error::GenusTooSmall { genus });
        }
        Ok(Self {
            vertex_count,
            edges,
            genus: genus as usize,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// `|E| - |V| + 1`, cached at validation.
    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn is_loop_free(&self) -> bool {
        self.edges.iter().all(|&(u, v)| u != v)
    }

    pub fn trinion_triples(&self) -> Vec<TrinionTriple> {
        let mut incident: Vec<Vec<usize>> = vec![Vec::with_capacity(3); self.vertex_count];
        for (i, &(u, v)) in self.edges.iter().enumerate() {
            incident[u].push(i);
            incident[v].push(i);
        }
        incident
            .into_iter()
            .enumerate()
            .map(|(vertex, mut e)| {
                e.sort_unstable();
                TrinionTriple {
                    vertex,
                    edges: [e[0], e[1], e[2]],
                }
            })
            .collect()
    }

    /// Applies an edge relabelling: edge `i` of `self` becomes edge
    /// `perm[i]` of the result.
    pub fn relabel_edges(&self, perm: &[usize]) -> Result<Self> {
        if perm.len() != self.edges.len() {
            return Err(Error::DimensionMismatch {
                expected: self.edges.len(),
                found: perm.len(),
            });
        }
        let mut edges = vec![(0, 0); self.edges.len()];
        let mut seen = vec![false; self.edges.len()];
        for (i, &p) in perm.iter().enumerate() {
            if p >= edges.len() || seen[p] {
                return Err(Error::DimensionMismatch {
                    expected: self.edges.len(),
                    found: p,
                });
            }
            seen[p] = true;
            edges[p] = self.edges[i];
        }
        Self::validate(self.vertex_count, &edges)
    }
}

fn is_connected(vertex_count: usize, edges: &[(usize, usize)]) -> bool {
    if vertex_count == 0 {
        return false;
    }
    let mut adj = vec![Vec::new(); vertex_count];
    for &(u, v) in edges {
        adj[u].push(v);
        adj[v].push(u);
    }
    let mut seen = vec![false; vertex_count];
    let mut queue = VecDeque::from([0]);
    seen[0] = true;
    while let Some(u) = queue.pop_front() {
        for &w in &adj[u] {
            if !seen[w] {
                seen[w] = true;
                queue.push_back(w);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

/// The multi-theta graph of genus `g`: an oval through `2g - 2` vertices
/// crossed by `g - 1` horizontal chords.
///
/// Vertices `0..g-1` are the left column top-down, `g-1..2g-2` the right
/// column top-down. The oval edges come first (down the left column, across
/// the bottom, up the right column, across the top), then the horizontal
/// chords top-down.
pub fn multi_theta(g: usize) -> Result<TrivalentGraph> {
    if g < 2 {
        return Err(Error::GenusTooSmall { genus: g as i64 });
    }
    let k = g - 1;
    let left = |i: usize| i;
    let right = |i: usize| k + i;
    let mut edges = Vec::with_capacity(3 * g - 3);
    for i in 0..k - 1 {
        edges.push((left(i), left(i + 1)));
    }
    edges.push((left(k - 1), right(k - 1)));
    for i in (1..k).rev() {
        edges.push((right(i), right(i - 1)));
    }
    edges.push((right(0), left(0)));
    for i in 0..k {
        edges.push((left(i), right(i)));
    }
    TrivalentGraph::validate(2 * k, &edges)
}

pub fn parse_graph(text: &str) -> Result<TrivalentGraph> {
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let syntax = |message: String| Error::Syntax {
            line: idx + 1,
            message,
        };
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() != 2 {
            return Err(syntax(format!(
                "expected two endpoints, found {} fields",
                fields.len()
            )));
        }
        let parse = |s: &str| {
            s.parse::<usize>()
                .map_err(|_| syntax(format!("invalid vertex id `{s}`")))
        };
        edges.push((parse(fields[0])?, parse(fields[1])?));
    }
    TrivalentGraph::from_edges(&edges)
}

pub fn serialize_graph(graph: &TrivalentGraph) -> String {
    let mut out = String::new();
    for &(u, v) in graph.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn dumbbell() -> TrivalentGraph {
        TrivalentGraph::from_edges(&[(0, 0), (0, 1), (1, 1)]).unwrap()
    }

    fn k4() -> TrivalentGraph {
        TrivalentGraph::from_edges(&[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()
    }

    #[test]
    fn validate_examples() {
        let theta = TrivalentGraph::from_edges(&[(0, 1), (0, 1), (0, 1)]).unwrap();
        assert_eq!(theta.genus(), 2);
        assert_eq!(dumbbell().genus(), 2);
        assert_eq!(
            TrivalentGraph::from_edges(&[(0, 1), (0, 1)]),
            Err(Error::DegreeViolation {
                vertex: 0,
                degree: 2
            })
        );
    }

    #[test]
    fn validate_rejects_disconnected_and_small() {
        let two_thetas = [(0, 1), (0, 1), (0, 1), (2, 3), (2, 3), (2, 3)];
        assert_eq!(
            TrivalentGraph::from_edges(&two_thetas),
            Err(Error::Disconnected)
        );
        assert!(matches!(
            TrivalentGraph::from_edges(&[]),
            Err(Error::GenusTooSmall { .. })
        ));
        // vertex 1 never used
        assert!(matches!(
            TrivalentGraph::from_edges(&[(0, 0), (0, 2), (2, 2)]),
            Err(Error::VertexGap { missing: 1, .. })
        ));
    }

    #[test]
    fn genus_examples() {
        assert_eq!(multi_theta(2).unwrap().genus(), 2);
        assert_eq!(k4().genus(), 3);
        assert_eq!(dumbbell().genus(), 2);
    }

    #[test]
    fn multi_theta_shapes() {
        let t2 = multi_theta(2).unwrap();
        assert_eq!(t2.edges(), &[(0, 1), (0, 1), (0, 1)]);

        let t3 = multi_theta(3).unwrap();
        assert_eq!((t3.vertex_count(), t3.edge_count()), (4, 6));
        assert!(t3.is_loop_free());
        let count = |e: (usize, usize)| t3.edges().iter().filter(|&&x| x == e).count();
        // top pair L1=0,R1=2 and bottom pair L2=1,R2=3 carry double edges
        assert_eq!(count((0, 2)), 2);
        assert_eq!(count((1, 3)), 2);

        let t4 = multi_theta(4).unwrap();
        assert_eq!((t4.vertex_count(), t4.edge_count(), t4.genus()), (6, 9, 4));
        assert!(t4.is_loop_free());

        assert!(matches!(
            multi_theta(1),
            Err(Error::GenusTooSmall { genus: 1 })
        ));
    }

    #[test]
    fn trinion_triple_examples() {
        let t2 = multi_theta(2).unwrap();
        assert!(t2.trinion_triples().iter().all(|t| t.edges == [0, 1, 2]));

        let d = dumbbell().trinion_triples();
        assert_eq!(d[0].edges, [0, 0, 1]);
        assert_eq!(d[1].edges, [1, 2, 2]);

        let t3 = multi_theta(3).unwrap().trinion_triples();
        assert_eq!(t3.len(), 4);
        let mut counts = [0; 6];
        t3.iter().flat_map(|t| t.edges).for_each(|e| counts[e] += 1);
        assert_eq!(counts, [2; 6]);
    }

    #[test]
    fn loop_free_examples() {
        assert!(multi_theta(5).unwrap().is_loop_free());
        assert!(!dumbbell().is_loop_free());
        assert!(k4().is_loop_free());
    }

    #[test]
    fn parse_examples() {
        assert_eq!(
            parse_graph("0 1\n0 1\n0 1\n").unwrap(),
            multi_theta(2).unwrap()
        );
        assert_eq!(parse_graph("0 0\n0 1\n1 1\n").unwrap(), dumbbell());
        assert!(matches!(
            parse_graph("0 1\nx y\n"),
            Err(Error::Syntax { line: 2, .. })
        ));
        assert!(matches!(
            parse_graph("0 1 2\n"),
            Err(Error::Syntax { line: 1, .. })
        ));
    }

    #[test]
    fn parse_skips_comments_and_blanks() {
        let text = "# dumbbell\n\n0 0  # loop\n0 1\n\n1 1\n";
        assert_eq!(parse_graph(text).unwrap(), dumbbell());
    }

    #[test]
    fn serialize_is_inverse_of_parse() {
        for g in [k4(), dumbbell(), multi_theta(6).unwrap()] {
            let text = serialize_graph(&g);
            assert_eq!(parse_graph(&text).unwrap(), g);
            assert_eq!(serialize_graph(&parse_graph(&text).unwrap()), text);
        }
    }

    #[test]
    fn relabel_permutes_edges() {
        let g = dumbbell();
        let r = g.relabel_edges(&[2, 1, 0]).unwrap();
        assert_eq!(r.edges(), &[(1, 1), (0, 1), (0, 0)]);
        assert!(g.relabel_edges(&[0, 0, 1]).is_err());
    }
}
