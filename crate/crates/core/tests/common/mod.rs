#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use trinion::polytope::HPolytope;
use trinion::TrivalentGraph;

pub fn k4() -> TrivalentGraph {
    TrivalentGraph::from_edges(&[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()
}

pub fn dumbbell() -> TrivalentGraph {
    TrivalentGraph::from_edges(&[(0, 0), (0, 1), (1, 1)]).unwrap()
}

/// Random connected trivalent multigraph of the given genus (loops and
/// multi-edges allowed), by pairing up half-edges uniformly.
pub fn random_trivalent(genus: usize, seed: u64) -> TrivalentGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let vertices = 2 * genus - 2;
    loop {
        let mut stubs: Vec<usize> = (0..vertices).flat_map(|v| [v, v, v]).collect();
        stubs.shuffle(&mut rng);
        let edges: Vec<(usize, usize)> = stubs.chunks(2).map(|p| (p[0], p[1])).collect();
        if let Ok(g) = TrivalentGraph::validate(vertices, &edges) {
            return g;
        }
    }
}

/// Random rows with coefficients in -2..=2 intersected with the unit cube.
pub fn random_cube_system(n: usize, extra_rows: usize, seed: u64) -> HPolytope {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut rows: Vec<(Vec<i64>, i64)> = HPolytope::unit_cube(n)
        .rows()
        .iter()
        .map(|r| (r.a.clone(), r.b))
        .collect();
    for _ in 0..extra_rows {
        let a: Vec<i64> = (0..n).map(|_| rng.gen_range(-2..=2)).collect();
        let b = rng.gen_range(-2..=2);
        rows.push((a, b));
    }
    HPolytope::new(n, rows).unwrap()
}

pub fn random_permutation(len: usize, seed: u64) -> Vec<usize> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut p: Vec<usize> = (0..len).collect();
    p.shuffle(&mut rng);
    p
}
