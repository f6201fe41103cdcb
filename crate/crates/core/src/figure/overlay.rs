//! Overlay layers supplied as JSON.
//!
//! ```json
//! {"frame": "intrinsic" | {"scale": 1.63} | {"fundamental_weights": [[x1, y1], [x2, y2]]},
//!  "polygons": [[[x, y], ...], ...],
//!  "points": [[x, y], ...]}
//! ```
//!
//! Coordinates are numbers or rational strings. `{"scale": c}` means the
//! file's coordinates are `c` times intrinsic ones. The `fundamental_weights`
//! frame gives the file's coordinates of `varpi_1` and `varpi_2`, which fixes
//! an arbitrary linear change of frame (scale, rotation, mirror).

use std::path::Path;

use serde::Deserialize;
use serde_json::Value;

use super::{Layer, PlaneEmbedding, Point, Shape, Style};
use crate::error::{Error, Result};
use crate::rational::{parse_rational, to_f64};
use crate::rootdata::RootDatum;

#[derive(Deserialize)]
#[serde(untagged)]
enum Coord {
    Number(f64),
    Text(String),
}

impl Coord {
    fn value(&self) -> Result<f64> {
        match self {
            Coord::Number(x) => Ok(*x),
            Coord::Text(s) => Ok(to_f64(&parse_rational(s)?)),
        }
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct OverlayDocument {
    frame: Value,
    #[serde(default)]
    polygons: Vec<Vec<[Coord; 2]>>,
    #[serde(default)]
    points: Vec<[Coord; 2]>,
}

fn point(c: &[Coord; 2]) -> Result<Point> {
    Ok([c[0].value()?, c[1].value()?])
}

/// Linear map from file coordinates to intrinsic coordinates.
fn frame_map(frame: &Value, datum: &RootDatum) -> Result<[[f64; 2]; 2]> {
    let unknown = || Error::Parse(format!("unknown frame tag `{frame}`"));
    match frame {
        Value::String(s) if s == "intrinsic" => Ok([[1.0, 0.0], [0.0, 1.0]]),
        Value::Object(map) if map.len() == 1 && map.contains_key("scale") => {
            let c = map["scale"].as_f64().ok_or_else(unknown)?;
            if !(c.is_finite() && c > 0.0) {
                return Err(Error::Parse(format!("frame scale must be positive, got {c}")));
            }
            Ok([[1.0 / c, 0.0], [0.0, 1.0 / c]])
        }
        Value::Object(map) if map.len() == 1 && map.contains_key("fundamental_weights") => {
            let given: [[Coord; 2]; 2] = serde_json::from_value(map["fundamental_weights"].clone())
                .map_err(|e| Error::Parse(format!("fundamental_weights: {e}")))?;
            let (f1, f2) = (point(&given[0])?, point(&given[1])?);
            let emb = PlaneEmbedding::new(datum)?;
            let p1 = emb.embed(datum, &datum.fundamental_weight(0)?);
            let p2 = emb.embed(datum, &datum.fundamental_weight(1)?);
            // M F = P with F = [f1 f2], P = [p1 p2] as columns
            let det = f1[0] * f2[1] - f2[0] * f1[1];
            if det.abs() < 1e-12 {
                return Err(Error::Parse("fundamental_weights are degenerate".into()));
            }
            let inv = [[f2[1] / det, -f2[0] / det], [-f1[1] / det, f1[0] / det]];
            let p = [[p1[0], p2[0]], [p1[1], p2[1]]];
            let mut m = [[0.0; 2]; 2];
            for i in 0..2 {
                for j in 0..2 {
                    m[i][j] = p[i][0] * inv[0][j] + p[i][1] * inv[1][j];
                }
            }
            Ok(m)
        }
        _ => Err(unknown()),
    }
}

/// Parses an overlay document into a green layer in intrinsic coordinates.
pub fn parse_overlay(text: &str, datum: &RootDatum) -> Result<Layer> {
    let doc: OverlayDocument =
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("overlay: {e}")))?;
    let m = frame_map(&doc.frame, datum)?;
    let apply = |c: &[Coord; 2]| -> Result<Point> {
        let p = point(c)?;
        Ok([m[0][0] * p[0] + m[0][1] * p[1], m[1][0] * p[0] + m[1][1] * p[1]])
    };
    let mut layer = Layer::new("overlay", Style::Green);
    for poly in &doc.polygons {
        layer.shapes.push(Shape::Polygon(poly.iter().map(apply).collect::<Result<_>>()?));
    }
    for p in &doc.points {
        layer.shapes.push(Shape::Point(apply(p)?));
    }
    Ok(layer)
}

pub fn load_overlay(path: impl AsRef<Path>, datum: &RootDatum) -> Result<Layer> {
    let text = std::fs::read_to_string(path)?;
    parse_overlay(&text, datum)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g2() -> RootDatum {
        RootDatum::build("G2").unwrap()
    }

    #[test]
    fn empty_overlay() {
        let layer = parse_overlay(r#"{"frame": "intrinsic", "polygons": [], "points": []}"#, &g2()).unwrap();
        assert!(layer.shapes.is_empty());
        assert_eq!(layer.style, Style::Green);
    }

    #[test]
    fn scale_frame_divides() {
        let doc = r#"{"frame": {"scale": 2.0}, "points": [[1, "3/2"]], "polygons": [[[2,0],[0,2],[0,0]]]}"#;
        let layer = parse_overlay(doc, &g2()).unwrap();
        assert_eq!(layer.shapes[0], Shape::Polygon(vec![[1.0, 0.0], [0.0, 1.0], [0.0, 0.0]]));
        assert_eq!(layer.shapes[1], Shape::Point([0.5, 0.75]));
    }

    #[test]
    fn weight_frame_maps_weights() {
        let d = g2();
        let emb = PlaneEmbedding::new(&d).unwrap();
        let doc = r#"{"frame": {"fundamental_weights": [[0, 1], [1, 1]]}, "points": [[0,1],[1,2]]}"#;
        let layer = parse_overlay(doc, &d).unwrap();
        let expected = [emb.embed(&d, &d.fundamental_weight(0).unwrap()), emb.embed(&d, &d.rho())];
        for (shape, want) in layer.shapes.iter().zip(expected) {
            let Shape::Point(p) = shape else { panic!("point expected") };
            assert!((p[0] - want[0]).abs() < 1e-12 && (p[1] - want[1]).abs() < 1e-12);
        }
    }

    #[test]
    fn errors() {
        let d = g2();
        let err = parse_overlay("{\n \"frame\": \"intrinsic\",\n \"points\": [1,\n", &d).unwrap_err();
        let Error::Parse(msg) = err else { panic!("parse error expected") };
        assert!(msg.contains("line"), "{msg}");
        assert!(parse_overlay(r#"{"frame": "figure"}"#, &d).is_err());
        assert!(parse_overlay(r#"{"frame": {"scale": -1}}"#, &d).is_err());
        assert!(parse_overlay(r#"{"frame": {"zoom": 2}}"#, &d).is_err());
        assert!(parse_overlay(r#"{"frame": "intrinsic", "points": [["x", 1]]}"#, &d).is_err());
        assert!(parse_overlay(r#"{"frame": {"fundamental_weights": [[1,1],[2,2]]}}"#, &d).is_err());
        assert!(load_overlay("/nonexistent/overlay.json", &d).is_err());
    }
}
