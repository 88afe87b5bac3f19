use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::Context;
use clap::{Args, Parser, Subcommand};
use trinion::graph::{multi_theta, parse_graph, serialize_graph, TrivalentGraph};
use trinion::polytope::{
    brute_force_vertices, build_hrep, enumerate_vertices, write_hrep, write_vrep,
};
use trinion::report::{analyze, analyze_theta_batch, AnalysisReport, AnalyzeOptions};
use trinion::Error;

/// Largest ambient dimension the brute-force oracle is run on.
const ORACLE_LIMIT: usize = 9;

#[derive(Parser)]
#[command(
    name = "trinion",
    version,
    about = "Moment polytopes and smoothness of toric varieties from trivalent graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write the multi-theta graph of genus g
    Theta {
        g: usize,
        /// Output file (stdout if omitted)
        /// Write to a file instead of stdout
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Analyze a graph: polytope, lattice and smoothness verdict
    Analyze {
        #[command(flatten)]
        input: Input,
        /// Print the report as JSON
        #[arg(long)]
        json: bool,
        /// Write the H-representation in cdd format
        #[arg(long, value_name = "PATH")]
        export_hrep: Option<PathBuf>,
        /// Write the vertex list in cdd format
        #[arg(long, value_name = "PATH")]
        export_vrep: Option<PathBuf>,
        /// Only compute facts that do not need vertex enumeration
        #[arg(long)]
        skip_vertex_enum: bool,
    },
    /// Compare double description against brute-force vertex enumeration
    Oracle {
        #[command(flatten)]
        input: Input,
    },
    /// Analyze the multi-theta graphs for g_min..=g_max
    Batch {
        g_min: usize,
        g_max: usize,
        /// One JSON report per line
        #[arg(long)]
        json: bool,
        #[arg(long)]
        skip_vertex_enum: bool,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct Input {
    /// Graph file: one edge per line, two vertex ids
    graph: Option<PathBuf>,
    /// Use the multi-theta graph of genus g instead of a file
    #[arg(long, value_name = "G")]
    theta: Option<usize>,
}

enum Failure {
    Usage(String),
    Input(anyhow::Error),
    Contradiction(String),
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        match e.downcast_ref::<Error>() {
            Some(Error::Contradiction(msg)) => Failure::Contradiction(msg.clone()),
            _ => Failure::Input(e),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::from(anyhow::Error::from(e))
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(1);
        }
    };
    match run(cli.command) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            eprintln!("usage error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Input(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
        Err(Failure::Contradiction(msg)) => {
            eprintln!("internal contradiction: {msg}");
            ExitCode::from(3)
        }
    }
}

fn run(command: Command) -> Result<ExitCode, Failure> {
    match command {
        Command::Theta { g, output } => {
            let graph = theta(g)?;
            let text = serialize_graph(&graph);
            match output {
                Some(path) => write(&path, &text)?,
                None => print!("{text}"),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Analyze {
            input,
            json,
            export_hrep,
            export_vrep,
            skip_vertex_enum,
        } => {
            let graph = load(&input)?;
            if skip_vertex_enum && export_vrep.is_some() {
                return Err(Failure::Usage(
                    "--export-vrep needs vertex enumeration".into(),
                ));
            }
            let analysis = analyze(&graph, AnalyzeOptions { skip_vertex_enum })?;
            if let Some(path) = export_hrep {
                write(&path, &write_hrep(&analysis.hrep))?;
            }
            if let (Some(path), Some(v)) = (export_vrep, &analysis.vrep) {
                write(&path, &write_vrep(v))?;
            }
            print_report(&analysis.report, json)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Oracle { input } => {
            let graph = load(&input)?;
            let n = graph.edge_count();
            if n > ORACLE_LIMIT {
                return Err(Error::OracleTooLarge {
                    dimension: n,
                    limit: ORACLE_LIMIT,
                }
                .into());
            }
            let h = build_hrep(&graph);
            let dd = enumerate_vertices(&h)?;
            let brute = brute_force_vertices(&h)?;
            if dd.vertices() == brute.vertices() {
                println!("pass: {} vertices from both algorithms", dd.len());
                Ok(ExitCode::SUCCESS)
            } else {
                println!(
                    "FAIL: double description {} vertices, brute force {}",
                    dd.len(),
                    brute.len()
                );
                Ok(ExitCode::from(3))
            }
        }
        Command::Batch {
            g_min,
            g_max,
            json,
            skip_vertex_enum,
        } => {
            if g_min < 2 || g_min > g_max {
                return Err(Failure::Usage(format!(
                    "need 2 <= g_min <= g_max, got {g_min}..{g_max}"
                )));
            }
            if !json {
                println!(
                    "{:>3} {:>4} {:>6} {:>8} {:>6} {:>5} {:>6} {:>7} {:>6} {:>9} {:>9}",
                    "g",
                    "dim",
                    "facets",
                    "vertices",
                    "cube",
                    "2^g",
                    "origin",
                    "6g-6",
                    "covol",
                    "verdict",
                    "ms"
                );
            }
            let mut failures = 0;
            analyze_theta_batch(
                g_min..=g_max,
                AnalyzeOptions { skip_vertex_enum },
                |g, r| match r {
                    Ok(report) if json => match serde_json::to_string(&report) {
                        Ok(line) => println!("{line}"),
                        Err(e) => {
                            failures += 1;
                            eprintln!("g={g}: {e}");
                        }
                    },
                    Ok(report) => println!("{}", batch_row(g, &report)),
                    Err(e) => {
                        failures += 1;
                        eprintln!("g={g}: {e}");
                    }
                },
            );
            Ok(if failures == 0 {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(2)
            })
        }
    }
}

fn batch_row(g: usize, r: &AnalysisReport) -> String {
    let opt = |v: Option<usize>| v.map_or_else(|| "-".to_string(), |x| x.to_string());
    let cube_ok = r.polytope.cube_vertex_count == 1 << g;
    let origin_ok = match r.polytope.origin_facet_count {
        Some(c) => (c == 6 * g - 6).to_string(),
        None => "-".to_string(),
    };
    let verdict = r.verdict.as_ref().map_or("-".to_string(), |v| {
        format!("{:?}", v.overall).to_uppercase()
    });
    format!(
        "{:>3} {:>4} {:>6} {:>8} {:>6} {:>5} {:>6} {:>7} {:>6} {:>9} {:>9}",
        g,
        r.polytope.ambient_dim,
        opt(r.polytope.facet_count),
        opt(r.polytope.vertex_count),
        r.polytope.cube_vertex_count,
        cube_ok,
        opt(r.polytope.origin_facet_count),
        origin_ok,
        r.lattice.covolume.to_string(),
        verdict,
        r.timing_ms
    )
}

fn print_report(report: &AnalysisReport, json: bool) -> Result<(), Failure> {
    if json {
        let text = serde_json::to_string_pretty(report).context("serializing report")?;
        println!("{text}");
    } else {
        println!("{report}");
    }
    Ok(())
}

fn theta(g: usize) -> Result<TrivalentGraph, Failure> {
    if g < 2 {
        return Err(Failure::Usage(format!("genus must be at least 2, got {g}")));
    }
    Ok(multi_theta(g)?)
}

fn load(input: &Input) -> Result<TrivalentGraph, Failure> {
    match (&input.graph, input.theta) {
        (_, Some(g)) => theta(g),
        (Some(path), None) => {
            let text =
                fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
            let graph =
                parse_graph(&text).with_context(|| format!("parsing {}", path.display()))?;
            Ok(graph)
        }
        (None, None) => Err(Failure::Usage("give a graph file or --theta".into())),
    }
}

fn write(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, text).with_context(|| format!("writing {}", path.display()))?;
    Ok(())
}
