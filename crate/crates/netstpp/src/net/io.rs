//! Network file ingestion: segment CSV and GeoJSON LineString collections.
//! Coordinates must already be in a projected metric CRS.

use std::fs::File;
use std::io::BufReader;
use std::path::Path;

use super::{build_network, LinearNetwork, Point};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NetworkFormat {
    Csv,
    GeoJson,
}

impl NetworkFormat {
    pub fn from_path(path: &Path) -> Result<Self> {
        match path.extension().and_then(|e| e.to_str()) {
            Some("csv") => Ok(NetworkFormat::Csv),
            Some("geojson") | Some("json") => Ok(NetworkFormat::GeoJson),
            other => Err(Error::InvalidArg(format!(
                "cannot infer network format from extension {other:?} (use .csv or .geojson)"
            ))),
        }
    }
}

/// Read raw endpoint pairs from a CSV with header `x1,y1,x2,y2`.
pub fn read_segments_csv(path: &Path) -> Result<Vec<(Point, Point)>> {
    let mut reader = csv::Reader::from_path(path).map_err(csv_err)?;
    let headers = reader.headers().map_err(csv_err)?.clone();
    let col = |name: &str| -> Result<usize> {
        headers
            .iter()
            .position(|h| h.trim().eq_ignore_ascii_case(name))
            .ok_or_else(|| Error::Parse {
                line: 1,
                msg: format!("missing column `{name}`"),
            })
    };
    let (c_x1, c_y1, c_x2, c_y2) = (col("x1")?, col("y1")?, col("x2")?, col("y2")?);

    let mut out = Vec::new();
    for (i, record) in reader.records().enumerate() {
        let line = i + 2;
        let record = record.map_err(csv_err)?;
        let num = |c: usize| -> Result<f64> {
            record
                .get(c)
                .and_then(|s| s.trim().parse::<f64>().ok())
                .ok_or_else(|| Error::Parse {
                    line,
                    msg: format!("bad numeric field `{}`", record.get(c).unwrap_or("")),
                })
        };
        out.push((
            Point::new(num(c_x1)?, num(c_y1)?),
            Point::new(num(c_x2)?, num(c_y2)?),
        ));
    }
    Ok(out)
}

/// Read raw endpoint pairs from a GeoJSON FeatureCollection of LineStrings.
/// Each consecutive coordinate pair becomes one segment.
pub fn read_segments_geojson(path: &Path) -> Result<Vec<(Point, Point)>> {
    let file = File::open(path)?;
    let doc: serde_json::Value = serde_json::from_reader(BufReader::new(file))?;
    let features = doc
        .get("features")
        .and_then(|f| f.as_array())
        .ok_or_else(|| Error::Parse {
            line: 0,
            msg: "not a GeoJSON FeatureCollection (missing `features`)".into(),
        })?;

    let mut out = Vec::new();
    for (fi, feature) in features.iter().enumerate() {
        let geom = feature.get("geometry").ok_or_else(|| Error::Parse {
            line: fi,
            msg: "feature without geometry".into(),
        })?;
        let gtype = geom.get("type").and_then(|t| t.as_str()).unwrap_or("");
        if gtype != "LineString" {
            return Err(Error::Parse {
                line: fi,
                msg: format!("unsupported geometry type `{gtype}` (expected LineString)"),
            });
        }
        let coords = geom
            .get("coordinates")
            .and_then(|c| c.as_array())
            .ok_or_else(|| Error::Parse {
                line: fi,
                msg: "LineString without coordinates".into(),
            })?;
        let mut prev: Option<Point> = None;
        for c in coords {
            let pair = c.as_array().ok_or_else(|| Error::Parse {
                line: fi,
                msg: "coordinate is not an array".into(),
            })?;
            if pair.len() < 2 {
                return Err(Error::Parse {
                    line: fi,
                    msg: "coordinate with fewer than 2 values".into(),
                });
            }
            let x = pair[0].as_f64().ok_or_else(|| Error::Parse {
                line: fi,
                msg: "non-numeric coordinate".into(),
            })?;
            let y = pair[1].as_f64().ok_or_else(|| Error::Parse {
                line: fi,
                msg: "non-numeric coordinate".into(),
            })?;
            let p = Point::new(x, y);
            if let Some(q) = prev {
                out.push((q, p));
            }
            prev = Some(p);
        }
    }
    Ok(out)
}

/// Load and build a network from a file, inferring the format when `format`
/// is `None`.
pub fn load_network(
    path: &Path,
    format: Option<NetworkFormat>,
    snap_tolerance: f64,
) -> Result<LinearNetwork> {
    let format = match format {
        Some(f) => f,
        None => NetworkFormat::from_path(path)?,
    };
    let raw = match format {
        NetworkFormat::Csv => read_segments_csv(path)?,
        NetworkFormat::GeoJson => read_segments_geojson(path)?,
    };
    build_network(&raw, snap_tolerance)
}

fn csv_err(e: csv::Error) -> Error {
    Error::Parse {
        line: e
            .position()
            .map(|p| p.line() as usize)
            .unwrap_or(0),
        msg: e.to_string(),
    }
}
