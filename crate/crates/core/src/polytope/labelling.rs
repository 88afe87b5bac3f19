use serde::{Deserialize, Serialize};

use crate::exactmath::Rational;
use crate::graph::TrivalentGraph;
use crate::par;

/// A 0/1 label per edge such that at every trinion the triple of labels (a
/// loop's label counted twice) is a vertex of the tetrahedron: all 0, or
/// exactly one 0.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct EdgeLabelling(pub Vec<u8>);

impl EdgeLabelling {
    pub fn to_point(&self) -> Vec<Rational> {
        self.0
            .iter()
            .map(|&b| Rational::from_integer(b.into()))
            .collect()
    }

    /// Reads a 0/1 point back as a labelling.
    pub fn from_point(x: &[Rational]) -> Option<Self> {
        x.iter()
            .map(|v| {
                if *v == Rational::from_integer(0.into()) {
                    Some(0)
                } else if *v == Rational::from_integer(1.into()) {
                    Some(1)
                } else {
                    None
                }
            })
            .collect::<Option<Vec<u8>>>()
            .map(EdgeLabelling)
    }
}

fn admissible(labels: [u8; 3]) -> bool {
    let zeros = labels.iter().filter(|&&l| l == 0).count();
    zeros == 3 || zeros == 1
}

struct Search {
    /// Trinion triples indexed by the largest edge index they contain.
    closing: Vec<Vec<[usize; 3]>>,
    edges: usize,
}

impl Search {
    fn new(graph: &TrivalentGraph) -> Self {
        let mut closing = vec![Vec::new(); graph.edge_count()];
        for t in graph.trinion_triples() {
            closing[t.edges[2]].push(t.edges);
        }
        Search {
            closing,
            edges: graph.edge_count(),
        }
    }

    /// Checks the trinions completed by assigning edge `e`.
    fn consistent(&self, labels: &[u8], e: usize) -> bool {
        self.closing[e]
            .iter()
            .all(|t| admissible(t.map(|i| labels[i])))
    }

    fn extend(&self, labels: &mut Vec<u8>, out: &mut Vec<EdgeLabelling>) {
        let e = labels.len();
        if e == self.edges {
            out.push(EdgeLabelling(labels.clone()));
            return;
        }
        for bit in [0, 1] {
            labels.push(bit);
            if self.consistent(labels, e) {
                self.extend(labels, out);
            }
            labels.pop();
        }
    }
}

/// All admissible 0/1 edge labellings, in lexicographic order. The points
/// they define are exactly the vertices of the polytope that are also
/// vertices of the unit cube.
pub fn cube_vertex_labellings(graph: &TrivalentGraph) -> Vec<EdgeLabelling> {
    let search = Search::new(graph);
    // split the first few edges across workers
    let depth = search.edges.min(6);
    let prefixes: Vec<Vec<u8>> = (0..1u32 << depth)
        .map(|bits| {
            (0..depth)
                .map(|i| ((bits >> (depth - 1 - i)) & 1) as u8)
                .collect()
        })
        .filter(|p: &Vec<u8>| (0..depth).all(|e| search.consistent(p, e)))
        .collect();
    par::map(&prefixes, |p| {
        let mut labels = p.clone();
        let mut out = Vec::new();
        search.extend(&mut labels, &mut out);
        out
    })
    .into_iter()
    .flatten()
    .collect()
}
