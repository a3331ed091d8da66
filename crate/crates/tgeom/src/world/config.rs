//! Geometry configuration files.
//!
//! A geometry is described by a small JSON document and built with
//! [`load_geometry`] (from a file) or [`parse_geometry`] (from a string):
//!
//! ```json
//! {"kind": "euclidean", "dimension": 2}
//! {"kind": "distorted", "d": 0.1, "base": {"kind": "euclidean", "dimension": 2}}
//! {"kind": "sphere", "radius": 1.0}
//! {"kind": "region", "vertices": [[0,0], [3,0], [3,3], [0,3]]}
//! {"kind": "tabulated", "path": "sigma.csv"}
//! ```
//!
//! A tabulated path is resolved relative to the configuration file's
//! directory, so a config and its table can be moved around together.

use std::fs;
use std::path::{Path, PathBuf};

use serde::Deserialize;

use crate::error::{GeometryError, Result};
use crate::matrix::SigmaMatrix;

use super::{
    distorted_sigma, euclidean_sigma, polygon_region_sigma, sphere_sigma, tabulated_sigma,
    DistortionParams, RegionSpec, WorldFunction,
};

#[derive(Debug, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
enum GeometryConfig {
    Euclidean {
        dimension: usize,
    },
    Distorted {
        base: Box<GeometryConfig>,
        d: f64,
    },
    Region {
        vertices: Vec<[f64; 2]>,
    },
    Sphere {
        radius: f64,
    },
    Tabulated {
        path: PathBuf,
    },
}

fn build(config: GeometryConfig, base_dir: Option<&Path>) -> Result<WorldFunction> {
    match config {
        GeometryConfig::Euclidean { dimension } => euclidean_sigma(dimension),
        GeometryConfig::Distorted { base, d } => {
            distorted_sigma(build(*base, base_dir)?, DistortionParams::new(d)?)
        }
        GeometryConfig::Region { vertices } => {
            Ok(polygon_region_sigma(RegionSpec::new(vertices)?))
        }
        GeometryConfig::Sphere { radius } => sphere_sigma(radius),
        GeometryConfig::Tabulated { path } => {
            let resolved = match (path.is_relative(), base_dir) {
                (true, Some(dir)) => dir.join(&path),
                _ => path.clone(),
            };
            let text = fs::read_to_string(&resolved).map_err(|e| GeometryError::Config {
                detail: format!("cannot read sigma table {}: {e}", resolved.display()),
            })?;
            Ok(tabulated_sigma(SigmaMatrix::from_csv(&text)?))
        }
    }
}

/// Builds a geometry from a JSON document in a string. Relative tabulated
/// paths are resolved against the current directory.
pub fn parse_geometry(json: &str) -> Result<WorldFunction> {
    let config: GeometryConfig =
        serde_json::from_str(json).map_err(|e| GeometryError::Config {
            detail: format!("invalid geometry config: {e}"),
        })?;
    build(config, None)
}

/// Builds a geometry from a JSON configuration file.
pub fn load_geometry(path: &Path) -> Result<WorldFunction> {
    let text = fs::read_to_string(path).map_err(|e| GeometryError::Config {
        detail: format!("cannot read geometry config {}: {e}", path.display()),
    })?;
    let config: GeometryConfig =
        serde_json::from_str(&text).map_err(|e| GeometryError::Config {
            detail: format!("{}: {e}", path.display()),
        })?;
    build(config, path.parent())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::point::Point;
    use std::io::Write as _;

    #[test]
    fn parses_each_kind() {
        let wf = parse_geometry(r#"{"kind": "euclidean", "dimension": 3}"#).unwrap();
        assert_eq!(wf.name(), "euclidean-3");

        let wf = parse_geometry(
            r#"{"kind": "distorted", "d": 0.1,
                "base": {"kind": "euclidean", "dimension": 2}}"#,
        )
        .unwrap();
        assert_eq!(wf.name(), "distorted-d0.1-euclidean-2");

        let wf = parse_geometry(r#"{"kind": "sphere", "radius": 2.0}"#).unwrap();
        assert_eq!(wf.name(), "sphere-r2");

        let wf = parse_geometry(
            r#"{"kind": "region", "vertices": [[0,0], [3,0], [3,3], [0,3]]}"#,
        )
        .unwrap();
        assert_eq!(wf.name(), "region-4v");
    }

    #[test]
    fn rejects_malformed_documents() {
        // unknown kind
        assert!(parse_geometry(r#"{"kind": "hyperbolic", "dimension": 2}"#).is_err());
        // unknown field
        assert!(parse_geometry(r#"{"kind": "euclidean", "dimension": 2, "extra": 1}"#).is_err());
        // invalid parameter surfaces through construction
        assert!(parse_geometry(r#"{"kind": "sphere", "radius": -1.0}"#).is_err());
        assert!(parse_geometry(
            r#"{"kind": "distorted", "d": -0.5,
                "base": {"kind": "euclidean", "dimension": 2}}"#
        )
        .is_err());
        // syntax errors carry the parser's line/column diagnostics
        let err = parse_geometry("{\"kind\": \"euclidean\",\n  dimension: 2}").unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("line 2"), "{msg}");
    }

    #[test]
    fn tabulated_path_resolves_next_to_the_config() {
        let dir = tempfile::tempdir().unwrap();
        let table_path = dir.path().join("sigma.csv");
        let mut table = std::fs::File::create(&table_path).unwrap();
        writeln!(table, "n=2").unwrap();
        writeln!(table, "0.0,1.5").unwrap();
        writeln!(table, "1.5,0.0").unwrap();
        let config_path = dir.path().join("geometry.json");
        std::fs::write(
            &config_path,
            r#"{"kind": "tabulated", "path": "sigma.csv"}"#,
        )
        .unwrap();

        let wf = load_geometry(&config_path).unwrap();
        assert_eq!(wf.name(), "tabulated-2");
        assert!(wf.symmetric());
        let s = wf.sigma(&Point::discrete(0), &Point::discrete(1)).unwrap();
        assert_eq!(s, 1.5);

        let missing = load_geometry(&dir.path().join("nope.json")).unwrap_err();
        assert!(missing.to_string().contains("nope.json"));
    }
}
