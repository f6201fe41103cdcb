use std::path::PathBuf;

use fpp_core::figure::{
    emit_svg, fpp_translates, load_overlay, parse_overlay, Frame, PlaneEmbedding, Point, Scene,
    SceneOptions, Shape,
};
use fpp_core::infchar::{weyl_orbit, DEFAULT_ORBIT_CAP};
use fpp_core::rational::to_f64;
use fpp_core::RootDatum;

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name)
}

fn polygon_area(p: &[Point]) -> f64 {
    let n = p.len();
    (0..n)
        .map(|i| {
            let (a, b) = (p[i], p[(i + 1) % n]);
            a[0] * b[1] - b[0] * a[1]
        })
        .sum::<f64>()
        / 2.0
}

fn ccw(p: &[Point]) -> Vec<Point> {
    let mut v = p.to_vec();
    if polygon_area(&v) < 0.0 {
        v.reverse();
    }
    v
}

/// Sutherland-Hodgman clip of convex `subject` by convex `clip`.
fn intersection_area(subject: &[Point], clip: &[Point]) -> f64 {
    let clip = ccw(clip);
    let mut out = ccw(subject);
    let side = |a: Point, b: Point, p: Point| (b[0] - a[0]) * (p[1] - a[1]) - (b[1] - a[1]) * (p[0] - a[0]);
    for i in 0..clip.len() {
        let (a, b) = (clip[i], clip[(i + 1) % clip.len()]);
        let input = std::mem::take(&mut out);
        for j in 0..input.len() {
            let (p, q) = (input[j], input[(j + 1) % input.len()]);
            let (sp, sq) = (side(a, b, p), side(a, b, q));
            if sp >= 0.0 {
                out.push(p);
            }
            if (sp >= 0.0) != (sq >= 0.0) {
                let t = sp / (sp - sq);
                out.push([p[0] + t * (q[0] - p[0]), p[1] + t * (q[1] - p[1])]);
            }
        }
        if out.is_empty() {
            return 0.0;
        }
    }
    polygon_area(&out).abs()
}

fn inside_convex(poly: &[Point], p: Point, tol: f64) -> bool {
    let poly = ccw(poly);
    (0..poly.len()).all(|i| {
        let (a, b) = (poly[i], poly[(i + 1) % poly.len()]);
        (b[0] - a[0]) * (p[1] - a[1]) - (b[1] - a[1]) * (p[0] - a[0]) >= -tol
    })
}

fn embedded_translates(d: &RootDatum) -> Vec<Vec<Point>> {
    let emb = PlaneEmbedding::new(d).unwrap();
    fpp_translates(d, DEFAULT_ORBIT_CAP)
        .unwrap()
        .iter()
        .map(|q| q.iter().map(|v| emb.embed(d, v)).collect())
        .collect()
}

#[test]
fn embedded_distances_match_exact_form() {
    for label in ["A2", "B2", "G2", "A1xA1"] {
        let d = RootDatum::build(label).unwrap();
        let emb = PlaneEmbedding::new(&d).unwrap();
        let pts = [
            d.zero_weight(),
            d.fundamental_weight(0).unwrap(),
            d.fundamental_weight(1).unwrap(),
            d.rho(),
        ];
        for a in &pts {
            for b in &pts {
                let exact = to_f64(&d.norm_squared(&(a - b)));
                let (pa, pb) = (emb.embed(&d, a), emb.embed(&d, b));
                let plane = (pa[0] - pb[0]).powi(2) + (pa[1] - pb[1]).powi(2);
                assert!((plane - exact).abs() <= 1e-9 * exact.max(1.0), "{label}");
            }
        }
    }
}

#[test]
fn translates_tile_a_neighbourhood_of_the_origin() {
    for label in ["A2", "B2", "G2", "A1xA1"] {
        let d = RootDatum::build(label).unwrap();
        let quads = embedded_translates(&d);
        for (i, p) in quads.iter().enumerate() {
            assert!(polygon_area(p).abs() > 1e-6);
            for q in &quads[i + 1..] {
                assert!(intersection_area(p, q) < 1e-9, "{label}: interiors overlap");
            }
        }
        for k in 0..720 {
            let t = k as f64 * std::f64::consts::PI / 360.0;
            let p = [1e-3 * t.cos(), 1e-3 * t.sin()];
            assert!(quads.iter().any(|q| inside_convex(q, p, 1e-12)), "{label}: gap at {p:?}");
        }
    }
}

#[test]
fn overlay_scale_only_moves_overlay() {
    let d = RootDatum::build("G2").unwrap();
    let doc = |c: f64| {
        format!(r#"{{"frame": {{"scale": {c}}}, "polygons": [[[1,2],[3,-1],[0,0.5]]], "points": [[2,2]]}}"#)
    };
    let a = parse_overlay(&doc(1.5), &d).unwrap();
    let b = parse_overlay(&doc(3.0), &d).unwrap();
    let coords = |l: &fpp_core::figure::Layer| -> Vec<Point> {
        l.shapes
            .iter()
            .flat_map(|s| match s {
                Shape::Polygon(v) => v.clone(),
                Shape::Point(p) => vec![*p],
                _ => vec![],
            })
            .collect()
    };
    for (pa, pb) in coords(&a).iter().zip(coords(&b)) {
        assert!((pa[0] - 2.0 * pb[0]).abs() < 1e-12 && (pa[1] - 2.0 * pb[1]).abs() < 1e-12);
    }
    let with = |overlay| {
        Scene::build(&d, &SceneOptions { overlay: Some(overlay), ..SceneOptions::default() }).unwrap()
    };
    let (sa, sb) = (with(a), with(b));
    assert_eq!(sa.layers[..3], sb.layers[..3]);
    assert_ne!(sa.layers[3], sb.layers[3]);
}

#[test]
fn figure_overlay_fixture_coincides_with_bounds() {
    let d = RootDatum::build("G2").unwrap();
    let emb = PlaneEmbedding::new(&d).unwrap();
    let layer = load_overlay(data("fig1_green.json"), &d).unwrap();
    assert_eq!(layer.count(|s| matches!(s, Shape::Polygon(_))), 7);
    assert_eq!(layer.count(|s| matches!(s, Shape::Point(_))), 12);

    let orbit: Vec<Point> = weyl_orbit(&d, &d.rho(), DEFAULT_ORBIT_CAP)
        .unwrap()
        .iter()
        .map(|v| emb.embed(&d, v))
        .collect();
    let radius = to_f64(&d.norm_squared(&d.rho())).sqrt();
    let quads = embedded_translates(&d);
    for shape in &layer.shapes {
        match shape {
            Shape::Point(p) => {
                // isolated unitary points sit exactly on W rho
                assert!(orbit.iter().any(|o| (o[0] - p[0]).hypot(o[1] - p[1]) < 1e-6 * radius));
            }
            Shape::Polygon(v) => {
                for p in v {
                    assert!(p[0].hypot(p[1]) <= radius * (1.0 + 1e-9));
                    assert!(quads.iter().any(|q| inside_convex(q, *p, 1e-9)));
                }
            }
            _ => unreachable!(),
        }
    }
}

#[test]
fn g2_svg_matches_golden_file() {
    let d = RootDatum::build("G2").unwrap();
    let layer = load_overlay(data("fig1_green.json"), &d).unwrap();
    let opts = SceneOptions {
        levels: 2,
        frame: Some(Frame::square(4.5)),
        overlay: Some(layer),
        ..SceneOptions::default()
    };
    let svg = emit_svg(&Scene::build(&d, &opts).unwrap());
    let path = data("g2_levels2.svg");
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::write(&path, &svg).unwrap();
    }
    let golden = std::fs::read_to_string(&path).expect("golden file; rerun with UPDATE_GOLDEN=1");
    assert_eq!(svg, golden);
}
