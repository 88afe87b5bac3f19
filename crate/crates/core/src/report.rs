//! End-to-end analysis of a graph and the report it produces.

use std::fmt;
use std::ops::RangeInclusive;
use std::str::FromStr;
use std::time::Instant;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::delzant::{delzant_check_with_facets, DelzantVerdict, Overall};
use crate::exactmath::{denominator_lcm, Rational};
use crate::graph::{multi_theta, TrivalentGraph};
use crate::lattice::{build_lattice, Lattice};
use crate::polytope::{
    build_hrep, cube_vertex_labellings, enumerate_vertices, facet_defining_rows, HPolytope,
    RowSource, Simplicity, VPolytope,
};
use crate::{Error, Result};

/// An exact rational serialized as `"p/q"`, or `"p"` when integral.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Fraction(pub Rational);

impl fmt::Display for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl Serialize for Fraction {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(&self.0)
    }
}

impl<'de> Deserialize<'de> for Fraction {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        Rational::from_str(&s)
            .map(Fraction)
            .map_err(serde::de::Error::custom)
    }
}

fn fractions(v: &[Rational]) -> Vec<Fraction> {
    v.iter().cloned().map(Fraction).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphSummary {
    pub genus: usize,
    pub vertices: usize,
    pub edges: usize,
    pub loop_free: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolytopeSummary {
    pub ambient_dim: usize,
    pub hrep_rows: usize,
    pub cube_vertex_count: usize,
    /// The remaining fields need vertex enumeration and are `None` when it
    /// was skipped.
    pub affine_dim: Option<i64>,
    pub facet_count: Option<usize>,
    pub vertex_count: Option<usize>,
    pub max_vertex_denominator: Option<Fraction>,
    /// Facet-defining rows through the origin.
    pub origin_facet_count: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeSummary {
    pub covolume: Fraction,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictSummary {
    pub simple: bool,
    pub simplicity_witness: Option<Vec<Fraction>>,
    pub witness_facet_count: Option<usize>,
    pub lattice_polytope: bool,
    pub lattice_offender: Option<Vec<Fraction>>,
    pub smooth: bool,
    pub singular_vertex: Option<Vec<Fraction>>,
    pub edge_determinant: Option<Fraction>,
    pub overall: Overall,
}

impl From<&DelzantVerdict> for VerdictSummary {
    fn from(v: &DelzantVerdict) -> Self {
        let (witness, count) = match &v.simplicity {
            Simplicity::Simple => (None, None),
            Simplicity::NonSimple {
                witness,
                facet_count,
            } => (Some(fractions(witness)), Some(*facet_count)),
        };
        VerdictSummary {
            simple: v.simplicity.is_simple(),
            simplicity_witness: witness,
            witness_facet_count: count,
            lattice_polytope: v.is_lattice_polytope(),
            lattice_offender: v.lattice_offender.as_deref().map(fractions),
            smooth: v.smooth,
            singular_vertex: v.singular_vertex.as_deref().map(fractions),
            edge_determinant: v.edge_determinant.clone().map(Fraction),
            overall: v.overall,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub graph: GraphSummary,
    pub polytope: PolytopeSummary,
    pub lattice: LatticeSummary,
    pub verdict: Option<VerdictSummary>,
    /// Whether the loop-free, genus >= 3 singularity guard applied.
    pub singularity_guard: bool,
    pub timing_ms: u64,
}

#[derive(Clone, Copy, Debug, Default)]
pub struct AnalyzeOptions {
    pub skip_vertex_enum: bool,
}

/// Everything computed for one graph.
#[derive(Clone, Debug)]
pub struct Analysis {
    pub graph: TrivalentGraph,
    pub hrep: HPolytope,
    pub lattice: Lattice,
    pub vrep: Option<VPolytope>,
    pub facets: Option<Vec<usize>>,
    pub verdict: Option<DelzantVerdict>,
    pub report: AnalysisReport,
}

pub fn analyze(graph: &TrivalentGraph, options: AnalyzeOptions) -> Result<Analysis> {
    let start = Instant::now();
    let hrep = build_hrep(graph);
    let lattice = build_lattice(graph);
    let cube_vertex_count = cube_vertex_labellings(graph).len();
    let n = hrep.dim();

    let mut polytope = PolytopeSummary {
        ambient_dim: n,
        hrep_rows: hrep.rows().len(),
        cube_vertex_count,
        affine_dim: None,
        facet_count: None,
        vertex_count: None,
        max_vertex_denominator: None,
        origin_facet_count: None,
    };
    let guard = graph.is_loop_free() && graph.genus() >= 3;
    let (mut vrep, mut facets, mut verdict) = (None, None, None);

    if !options.skip_vertex_enum {
        let v = enumerate_vertices(&hrep)?;
        let f = facet_defining_rows(&hrep, &v)?;
        let d = delzant_check_with_facets(&v, &lattice, &f)?;
        if guard && d.overall == Overall::Smooth {
            return Err(Error::Contradiction(format!(
                "loop-free genus {} graph reported smooth",
                graph.genus()
            )));
        }
        let origin = vec![Rational::from_integer(0.into()); n];
        polytope.affine_dim = Some(v.dimension());
        polytope.facet_count = Some(f.len());
        polytope.vertex_count = Some(v.len());
        polytope.max_vertex_denominator = Some(Fraction(Rational::from_integer(
            v.vertices()
                .iter()
                .map(denominator_lcm)
                .max()
                .unwrap_or_else(|| 1.into()),
        )));
        polytope.origin_facet_count = v.position(&origin).map(|i| {
            v.incidence(i)
                .iter()
                .filter(|r| f.binary_search(r).is_ok())
                .count()
        });
        vrep = Some(v);
        facets = Some(f);
        verdict = Some(d);
    }

    let report = AnalysisReport {
        graph: GraphSummary {
            genus: graph.genus(),
            vertices: graph.vertex_count(),
            edges: graph.edge_count(),
            loop_free: graph.is_loop_free(),
        },
        polytope,
        lattice: LatticeSummary {
            covolume: Fraction(lattice.covolume().clone()),
        },
        verdict: verdict.as_ref().map(VerdictSummary::from),
        singularity_guard: guard,
        timing_ms: start.elapsed().as_millis() as u64,
    };
    Ok(Analysis {
        graph: graph.clone(),
        hrep,
        lattice,
        vrep,
        facets,
        verdict,
        report,
    })
}

/// The smoothness verdict together with the trinion inequalities responsible
/// for the singular vertex.
#[derive(Clone, Debug)]
pub struct SingularityReport {
    pub verdict: DelzantVerdict,
    pub guard_applied: bool,
    /// Sources of the facet-defining rows through the singular vertex.
    pub witness_sources: Vec<RowSource>,
}

/// Full pipeline with the loop-free guard: a smooth verdict for a loop-free
/// graph of genus >= 3 is an [`Error::Contradiction`].
pub fn singularity_report(graph: &TrivalentGraph) -> Result<SingularityReport> {
    let a = analyze(graph, AnalyzeOptions::default())?;
    let (v, f, verdict) = (a.vrep.unwrap(), a.facets.unwrap(), a.verdict.unwrap());
    let mut witness_sources = Vec::new();
    if let Some(i) = verdict
        .singular_vertex
        .as_deref()
        .and_then(|w| v.position(w))
    {
        for r in v.incidence(i).iter().filter(|r| f.binary_search(r).is_ok()) {
            witness_sources.extend(a.hrep.rows()[*r].sources.iter().copied());
        }
    }
    witness_sources.sort();
    Ok(SingularityReport {
        verdict,
        guard_applied: a.report.singularity_guard,
        witness_sources,
    })
}

/// Analyzes the multi-theta graphs for every genus in `genera`, calling
/// `emit` in ascending genus order as soon as each result (and all earlier
/// ones) is available. With the `parallel` feature the genera run
/// concurrently.
pub fn analyze_theta_batch<F>(genera: RangeInclusive<usize>, options: AnalyzeOptions, mut emit: F)
where
    F: FnMut(usize, Result<AnalysisReport>),
{
    let run = move |g: usize| {
        multi_theta(g)
            .and_then(|graph| analyze(&graph, options))
            .map(|a| a.report)
    };

    #[cfg(feature = "parallel")]
    std::thread::scope(|scope| {
        let (tx, rx) = std::sync::mpsc::channel();
        for g in genera.clone() {
            let tx = tx.clone();
            scope.spawn(move || {
                let _ = tx.send((g, run(g)));
            });
        }
        drop(tx);
        let mut pending = std::collections::BTreeMap::new();
        let mut next = *genera.start();
        for (g, r) in rx {
            pending.insert(g, r);
            while let Some(r) = pending.remove(&next) {
                emit(next, r);
                next += 1;
            }
        }
    });

    #[cfg(not(feature = "parallel"))]
    for g in genera {
        emit(g, run(g));
    }
}

fn point(p: &[Fraction]) -> String {
    let cells: Vec<String> = p.iter().map(ToString::to_string).collect();
    format!("({})", cells.join(", "))
}

fn opt<T: fmt::Display>(v: &Option<T>) -> String {
    v.as_ref()
        .map_or_else(|| "-".to_string(), ToString::to_string)
}

impl fmt::Display for AnalysisReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let g = &self.graph;
        let p = &self.polytope;
        writeln!(
            f,
            "graph:    genus {}, {} vertices, {} edges, loop-free: {}",
            g.genus, g.vertices, g.edges, g.loop_free
        )?;
        writeln!(
            f,
            "polytope: ambient dim {}, {} inequality rows",
            p.ambient_dim, p.hrep_rows
        )?;
        writeln!(
            f,
            "          affine dim {}, {} facets, {} vertices",
            opt(&p.affine_dim),
            opt(&p.facet_count),
            opt(&p.vertex_count)
        )?;
        writeln!(
            f,
            "          cube vertices {}, max vertex denominator {}",
            p.cube_vertex_count,
            opt(&p.max_vertex_denominator)
        )?;
        writeln!(
            f,
            "          facets through origin {}",
            opt(&p.origin_facet_count)
        )?;
        writeln!(f, "lattice:  covolume {}", self.lattice.covolume)?;
        match &self.verdict {
            None => writeln!(f, "verdict:  not computed (vertex enumeration skipped)")?,
            Some(v) => {
                match (&v.simplicity_witness, v.witness_facet_count) {
                    (Some(w), Some(c)) => {
                        writeln!(f, "simple:   no, vertex {} lies on {} facets", point(w), c)?
                    }
                    _ => writeln!(f, "simple:   yes")?,
                }
                match &v.lattice_offender {
                    Some(w) => writeln!(f, "lattice polytope: no, vertex {}", point(w))?,
                    None => writeln!(f, "lattice polytope: yes")?,
                }
                match (&v.singular_vertex, &v.edge_determinant) {
                    (Some(w), Some(d)) => {
                        writeln!(f, "smooth:   no, edge determinant {} at {}", d, point(w))?
                    }
                    (Some(w), None) => writeln!(f, "smooth:   no, non-simple at {}", point(w))?,
                    _ => writeln!(f, "smooth:   yes")?,
                }
                let overall = match v.overall {
                    Overall::Smooth => "SMOOTH",
                    Overall::Singular => "SINGULAR",
                };
                writeln!(f, "verdict:  {overall}")?;
            }
        }
        write!(f, "time:     {} ms", self.timing_ms)
    }
}
