//! Command-line front end for the `tgeom` kernel.
//!
//! Every subcommand prints exactly one line of compact JSON to stdout — an
//! envelope with a schema version, the command name, the geometry name, and
//! a command-specific payload — so runs can be diffed byte-for-byte and
//! piped into `jq`. Diagnostics go to stderr only. Exit code 2 means the
//! request itself was malformed (bad flags, bad point syntax, unreadable
//! config); exit code 1 means the request was well-formed but the geometry
//! rejected it (point outside the region, degenerate vector, and so on).

use std::fmt;
use std::fmt::Write as _;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde::Serialize;
use serde_json::json;

use tgeom::{
    cosine_angle, find_intransitivity, gram_report, load_geometry, magnitude, parse_geometry,
    sample_tube, scalar_product, scalar_product_general, Domain, GeometryError, GridSpec, Point,
    PointTuple, PredicateRegistry, SearchSpec, VectorPQ, WorldFunction,
};

const SCHEMA_VERSION: &str = "1";

#[derive(Parser)]
#[command(
    name = "tgeom",
    version,
    about = "Explore geometries defined by a world function",
    arg_required_else_help = true
)]
struct Cli {
    /// Path to a JSON geometry config.
    #[arg(long, global = true, value_name = "FILE")]
    geometry: Option<PathBuf>,

    /// Inline JSON geometry config (alternative to --geometry).
    #[arg(long, global = true, value_name = "JSON", conflicts_with = "geometry")]
    geometry_json: Option<String>,

    /// Seed for all randomized sampling; equal seeds give identical output.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Residual tolerance for membership and parallelism decisions.
    #[arg(long, global = true, default_value_t = 1e-9)]
    tol: f64,

    /// Write bulk data (tube sample CSV) to this file.
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a single quantity on a tuple of points.
    Eval {
        /// One of: sigma, magnitude, scalar, cosine, predicate:<name>.
        #[arg(long)]
        quantity: String,

        /// Points: "x,y[,z...]" for coordinate geometries, integer ids for
        /// tabulated ones.
        #[arg(required = true, value_name = "POINT", allow_hyphen_values = true)]
        points: Vec<String>,
    },

    /// Scan the straight-line tube around a segment and report its width.
    Tube {
        /// First segment endpoint.
        #[arg(long, value_name = "POINT", allow_hyphen_values = true)]
        p0: String,

        /// Second segment endpoint.
        #[arg(long, value_name = "POINT", allow_hyphen_values = true)]
        p1: String,

        /// How far the scan box reaches beyond the segment on every side.
        #[arg(long, default_value_t = 1.0)]
        extent: f64,

        /// Lattice spacing of the scan grid.
        #[arg(long, default_value_t = 0.01)]
        spacing: f64,
    },

    /// Test whether distances from a base point embed into Euclidean space.
    Embed {
        /// Base point the probe vectors are anchored at.
        #[arg(long, value_name = "POINT", allow_hyphen_values = true)]
        base: String,

        /// Eigenvalues above -tol-embed count as nonnegative
        /// (default: 1e-8 times the largest magnitude).
        #[arg(long, value_name = "TOL")]
        tol_embed: Option<f64>,

        /// Probe points (at least one).
        #[arg(required = true, value_name = "POINT", allow_hyphen_values = true)]
        probes: Vec<String>,
    },

    /// Search for a triple u,v,w with u||v and v||w but not u||w.
    Parallel {
        /// Number of random proposals to try.
        #[arg(long, default_value_t = 10_000)]
        trials: usize,

        /// Half-width of the box proposals are drawn from.
        #[arg(long = "box", default_value_t = 3.0)]
        box_half: f64,
    },

    /// List geometry kinds, config examples, and built-in predicates.
    ListGeometries,
}

enum CliError {
    Geometry(GeometryError),
    Usage(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Geometry(err) => match err {
                GeometryError::OutsideRegion { .. }
                | GeometryError::NegativeSigma { .. }
                | GeometryError::ZeroVector { .. }
                | GeometryError::DegenerateVector { .. }
                | GeometryError::BaseAmongProbes { .. }
                | GeometryError::CoordinateGeometryRequired { .. } => 1,
                _ => 2,
            },
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Geometry(err) => err.fmt(f),
            CliError::Usage(msg) => f.write_str(msg),
        }
    }
}

impl From<GeometryError> for CliError {
    fn from(err: GeometryError) -> Self {
        CliError::Geometry(err)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(err.code())
        }
    }
}

fn run(cli: &Cli) -> Result<(), CliError> {
    match &cli.command {
        Command::Eval { quantity, points } => {
            let wf = load_world(cli)?;
            run_eval(&wf, cli.tol, quantity, points)
        }
        Command::Tube {
            p0,
            p1,
            extent,
            spacing,
        } => {
            let wf = load_world(cli)?;
            run_tube(&wf, cli, p0, p1, *extent, *spacing)
        }
        Command::Embed {
            base,
            tol_embed,
            probes,
        } => {
            let wf = load_world(cli)?;
            run_embed(&wf, base, *tol_embed, probes)
        }
        Command::Parallel { trials, box_half } => {
            let wf = load_world(cli)?;
            run_parallel(&wf, cli, *trials, *box_half)
        }
        Command::ListGeometries => run_list(),
    }
}

fn load_world(cli: &Cli) -> Result<WorldFunction, CliError> {
    match (&cli.geometry, &cli.geometry_json) {
        (Some(path), None) => Ok(load_geometry(path)?),
        (None, Some(text)) => Ok(parse_geometry(text)?),
        (None, None) => Err(CliError::Usage(
            "a geometry is required: pass --geometry <file> or --geometry-json <json>".into(),
        )),
        (Some(_), Some(_)) => unreachable!("clap rejects combining the geometry flags"),
    }
}

/// Parse a point argument in the form the geometry's domain expects:
/// comma-separated coordinates, or a bare integer id for tabulated tables.
fn parse_point(wf: &WorldFunction, index: usize, text: &str) -> Result<Point, CliError> {
    match wf.domain() {
        Domain::Discrete { .. } => {
            let id = text.trim().parse::<usize>().map_err(|_| {
                CliError::Usage(format!(
                    "point {index}: a tabulated geometry takes integer point ids, got {text:?}"
                ))
            })?;
            Ok(Point::discrete(id))
        }
        Domain::Coordinate { .. } => {
            let coords = text
                .split(',')
                .map(|part| part.trim().parse::<f64>())
                .collect::<Result<Vec<f64>, _>>()
                .map_err(|_| {
                    CliError::Usage(format!(
                        "point {index}: expected comma-separated coordinates like \"1.5,0.5\", got {text:?}"
                    ))
                })?;
            Ok(Point::coordinate(coords))
        }
    }
}

fn parse_points(wf: &WorldFunction, texts: &[String]) -> Result<Vec<Point>, CliError> {
    texts
        .iter()
        .enumerate()
        .map(|(i, text)| parse_point(wf, i, text))
        .collect()
}

/// Print the single-line JSON envelope every command answers with.
fn emit<T: Serialize>(command: &str, geometry: &str, payload: &T) -> Result<(), CliError> {
    #[derive(Serialize)]
    struct Emission<'a, T: Serialize> {
        schema_version: &'static str,
        command: &'a str,
        geometry: &'a str,
        payload: &'a T,
    }
    let line = serde_json::to_string(&Emission {
        schema_version: SCHEMA_VERSION,
        command,
        geometry,
        payload,
    })
    .expect("reports always serialize");
    println!("{line}");
    Ok(())
}

fn run_eval(
    wf: &WorldFunction,
    tol: f64,
    quantity: &str,
    point_args: &[String],
) -> Result<(), CliError> {
    let points = parse_points(wf, point_args)?;
    let need = |n: usize| -> Result<(), CliError> {
        if points.len() == n {
            Ok(())
        } else {
            Err(CliError::Usage(format!(
                "{quantity} takes exactly {n} points, got {}",
                points.len()
            )))
        }
    };
    let payload = match quantity {
        "sigma" => {
            need(2)?;
            json!({ "sigma": wf.sigma(&points[0], &points[1])? })
        }
        "magnitude" => {
            need(2)?;
            json!({ "magnitude": magnitude(wf, &points[0], &points[1])? })
        }
        "scalar" => match points.len() {
            3 => json!({ "scalar": scalar_product(wf, &points[0], &points[1], &points[2])? }),
            4 => {
                let v = VectorPQ::new(points[0].clone(), points[1].clone());
                let w = VectorPQ::new(points[2].clone(), points[3].clone());
                json!({ "scalar": scalar_product_general(wf, &v, &w)? })
            }
            n => {
                return Err(CliError::Usage(format!(
                    "scalar takes 3 points (shared tail) or 4 points (two vectors), got {n}"
                )))
            }
        },
        "cosine" => {
            need(3)?;
            let angle = cosine_angle(wf, &points[0], &points[1], &points[2])?;
            serde_json::to_value(&angle).expect("reports always serialize")
        }
        other => match other.strip_prefix("predicate:") {
            Some(name) => {
                let registry = PredicateRegistry::new();
                let tuple = PointTuple::new(points.clone())?;
                let residual = registry.evaluate(name, wf, &tuple)?;
                json!({
                    "predicate": name,
                    "residual": residual,
                    "within_tol": residual.abs() <= tol,
                })
            }
            None => {
                return Err(CliError::Usage(format!(
                    "unknown quantity {other:?}; use sigma, magnitude, scalar, cosine, or predicate:<name>"
                )))
            }
        },
    };
    emit("eval", wf.name(), &payload)
}

fn run_tube(
    wf: &WorldFunction,
    cli: &Cli,
    p0: &str,
    p1: &str,
    extent: f64,
    spacing: f64,
) -> Result<(), CliError> {
    let p0 = parse_point(wf, 0, p0)?;
    let p1 = parse_point(wf, 1, p1)?;
    let grid = GridSpec::new(extent, spacing)?;
    let report = sample_tube(wf, &p0, &p1, &grid, cli.tol, cli.seed)?;
    if let Some(path) = &cli.out {
        let mut text = String::from("axial,radial,residual,member\n");
        for sample in &report.samples {
            writeln!(
                text,
                "{:?},{:?},{:?},{}",
                sample.axial,
                sample.radial,
                sample.residual,
                u8::from(sample.member)
            )
            .expect("writing to a string cannot fail");
        }
        fs::write(path, text).map_err(GeometryError::from)?;
    }
    emit("tube", wf.name(), &report)
}

fn run_embed(
    wf: &WorldFunction,
    base: &str,
    tol_embed: Option<f64>,
    probes: &[String],
) -> Result<(), CliError> {
    let base = parse_point(wf, 0, base)?;
    let probes = probes
        .iter()
        .enumerate()
        .map(|(i, text)| parse_point(wf, i + 1, text))
        .collect::<Result<Vec<_>, _>>()?;
    let report = gram_report(wf, &base, &probes, tol_embed)?;
    emit("embed", wf.name(), &report)
}

fn run_parallel(
    wf: &WorldFunction,
    cli: &Cli,
    trials: usize,
    box_half: f64,
) -> Result<(), CliError> {
    let spec = SearchSpec::new(trials, box_half)?;
    let report = find_intransitivity(wf, &spec, cli.tol, cli.seed)?;
    emit("parallel", wf.name(), &report)
}

fn run_list() -> Result<(), CliError> {
    let registry = PredicateRegistry::new();
    let payload = json!({
        "kinds": [
            {
                "kind": "euclidean",
                "config": { "kind": "euclidean", "dimension": 2 },
            },
            {
                "kind": "distorted",
                "config": {
                    "kind": "distorted",
                    "d": 0.1,
                    "base": { "kind": "euclidean", "dimension": 2 },
                },
            },
            {
                "kind": "sphere",
                "config": { "kind": "sphere", "radius": 1.0 },
            },
            {
                "kind": "region",
                "config": {
                    "kind": "region",
                    "vertices": [[0.0, 0.0], [3.0, 0.0], [3.0, 3.0], [0.0, 3.0]],
                },
            },
            {
                "kind": "tabulated",
                "config": { "kind": "tabulated", "path": "table.csv" },
            },
        ],
        "predicates": registry.names(),
    });
    emit("list-geometries", "none", &payload)
}
