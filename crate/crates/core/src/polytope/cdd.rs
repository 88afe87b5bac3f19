//! cdd-style exact text export of H- and V-representations.

use std::fmt::Write as _;

use super::{HPolytope, VPolytope};
use crate::{Error, Result};

/// Each row `a · x <= b` is written as `b -a1 ... -an`, i.e. `b - a·x >= 0`.
pub fn write_hrep(h: &HPolytope) -> String {
    let mut out = String::from("H-representation\nbegin\n");
    let _ = writeln!(out, "{} {} rational", h.rows().len(), h.dim() + 1);
    for r in h.rows() {
        let cells: Vec<String> = std::iter::once(r.b.to_string())
            .chain(r.a.iter().map(|x| (-x).to_string()))
            .collect();
        let _ = writeln!(out, "{}", cells.join(" "));
    }
    out.push_str("end\n");
    out
}

pub fn write_vrep(v: &VPolytope) -> String {
    let mut out = String::from("V-representation\nbegin\n");
    let _ = writeln!(out, "{} {} rational", v.len(), v.ambient_dim() + 1);
    for p in v.vertices() {
        let cells: Vec<String> = std::iter::once("1".to_string())
            .chain(p.iter().map(ToString::to_string))
            .collect();
        let _ = writeln!(out, "{}", cells.join(" "));
    }
    out.push_str("end\n");
    out
}

/// Reads an integer H-representation in the format written by
/// [`write_hrep`]. Lines outside `begin`/`end` other than the header are
/// ignored.
pub fn parse_hrep(text: &str) -> Result<HPolytope> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l.trim()));
    let syntax = |line: usize, message: &str| Error::Syntax {
        line,
        message: message.to_string(),
    };
    lines
        .by_ref()
        .find(|(_, l)| *l == "begin")
        .ok_or_else(|| syntax(0, "missing `begin`"))?;
    let (line, header) = lines.next().ok_or_else(|| syntax(0, "missing size line"))?;
    let sizes: Vec<&str> = header.split_whitespace().collect();
    let (rows, cols) = match sizes.as_slice() {
        [r, c, _] => (
            r.parse::<usize>()
                .map_err(|_| syntax(line, "bad row count"))?,
            c.parse::<usize>()
                .map_err(|_| syntax(line, "bad column count"))?,
        ),
        _ => return Err(syntax(line, "expected `<rows> <cols> <type>`")),
    };
    if cols == 0 {
        return Err(syntax(line, "need at least one column"));
    }
    let mut parsed = Vec::with_capacity(rows);
    for _ in 0..rows {
        let (line, l) = lines
            .next()
            .ok_or_else(|| syntax(0, "unexpected end of input"))?;
        let vals: Vec<i64> = l
            .split_whitespace()
            .map(|s| {
                s.parse::<i64>()
                    .map_err(|_| syntax(line, "expected an integer"))
            })
            .collect::<Result<_>>()?;
        if vals.len() != cols {
            return Err(syntax(line, "wrong number of columns"));
        }
        parsed.push((vals[1..].iter().map(|x| -x).collect(), vals[0]));
    }
    match lines.next() {
        Some((_, "end")) => HPolytope::new(cols - 1, parsed),
        Some((line, _)) => Err(syntax(line, "expected `end`")),
        None => Err(syntax(0, "missing `end`")),
    }
}
