use super::{HPolytope, VPolytope};
use crate::exactmath::{QMatrix, Rational, Solution};
use crate::{par, Result};

/// Vertex enumeration by exhaustion: every `n`-subset of rows whose tight
/// system has a unique solution contributes that solution if it is feasible.
/// Exponential in the row count; meant as an oracle for small instances.
pub fn brute_force_vertices(h: &HPolytope) -> Result<VPolytope> {
    let n = h.dim();
    let m = h.rows().len();
    if n == 0 || m < n {
        return Ok(VPolytope::from_vertices(h, Vec::new()));
    }
    let points = par::flat_map_range(m, |first| {
        let mut out = Vec::new();
        let mut combo: Vec<usize> = std::iter::once(first).chain(first + 1..first + n).collect();
        if combo[n - 1] >= m {
            return out;
        }
        loop {
            if let Some(x) = tight_point(h, &combo) {
                out.push(x);
            }
            if !advance(&mut combo[1..], m) {
                break;
            }
        }
        out
    });
    Ok(VPolytope::from_vertices(h, points))
}

fn tight_point(h: &HPolytope, rows: &[usize]) -> Option<Vec<Rational>> {
    let a: Vec<&[i64]> = rows.iter().map(|&i| h.rows()[i].a.as_slice()).collect();
    let b: Vec<Rational> = rows
        .iter()
        .map(|&i| Rational::from_integer(h.rows()[i].b.into()))
        .collect();
    let m = QMatrix::from_int_rows(&a).ok()?;
    match m.solve(&b).ok()? {
        Solution::Unique(x) if h.contains(&x).unwrap_or(false) => Some(x),
        _ => None,
    }
}

/// Next strictly increasing combination of values below `limit`, keeping the
/// element before `combo` fixed. Returns false when exhausted.
fn advance(combo: &mut [usize], limit: usize) -> bool {
    let k = combo.len();
    for i in (0..k).rev() {
        if combo[i] < limit - (k - i) {
            combo[i] += 1;
            for j in i + 1..k {
                combo[j] = combo[j - 1] + 1;
            }
            return true;
        }
    }
    false
}
