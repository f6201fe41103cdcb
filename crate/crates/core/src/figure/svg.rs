//! Deterministic SVG 1.1 output. Element order follows the scene; numbers are
//! rounded to 9 significant digits and printed in plain decimal.

use std::fmt::Write as _;
use std::path::Path;

use super::{Point, Scene, Shape};
use crate::error::Result;

const STYLE: &str = ".frame{fill:none;stroke:#000000;stroke-opacity:0.3}\
.red{fill:#ff0000;fill-opacity:0.3;stroke:none}\
.dashed{fill:none;stroke:#000000;stroke-opacity:0.2}\
.blue{fill:#00b7eb;fill-opacity:0.1;stroke:#00b7eb}\
.green{fill:#2e8b57;stroke:#2e8b57}";

/// Formats `x` with 9 significant digits, without exponent for moderate
/// magnitudes and with `-0` printed as `0`.
pub fn format_coord(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return "0".to_string();
    }
    let sci = format!("{:.8e}", x);
    let (mantissa, exp) = sci.split_once('e').expect("exponent form");
    let exp: i32 = exp.parse().expect("integer exponent");
    if !(-6..=15).contains(&exp) {
        return sci;
    }
    let negative = mantissa.starts_with('-');
    let digits: String = mantissa.chars().filter(char::is_ascii_digit).collect();
    let point = exp + 1;
    let mut out = String::new();
    if negative {
        out.push('-');
    }
    if point <= 0 {
        out.push_str("0.");
        out.extend(std::iter::repeat_n('0', (-point) as usize));
        out.push_str(&digits);
    } else if point as usize >= digits.len() {
        out.push_str(&digits);
        out.extend(std::iter::repeat_n('0', point as usize - digits.len()));
    } else {
        out.push_str(&digits[..point as usize]);
        out.push('.');
        out.push_str(&digits[point as usize..]);
    }
    if out.contains('.') {
        while out.ends_with('0') {
            out.pop();
        }
        if out.ends_with('.') {
            out.pop();
        }
    }
    if out == "-0" {
        out = "0".to_string();
    }
    out
}

fn pt(p: &Point) -> String {
    // SVG's y axis points down
    format!("{},{}", format_coord(p[0]), format_coord(-p[1]))
}

pub fn emit_svg(scene: &Scene) -> String {
    let f = &scene.frame;
    let (w, h) = (f.width().max(0.0), f.height().max(0.0));
    let stroke = format_coord(w.max(h) * 0.002);
    let dot = format_coord(w.max(h) * 0.006);
    let mut s = String::new();
    s.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    let _ = writeln!(
        s,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"600\" height=\"600\" viewBox=\"{} {} {} {}\">",
        format_coord(f.min[0]),
        format_coord(-f.max[1]),
        format_coord(w),
        format_coord(h)
    );
    let _ = writeln!(s, "<style>{STYLE}</style>");
    let _ = writeln!(
        s,
        "<rect class=\"frame\" x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" stroke-width=\"{stroke}\"/>",
        format_coord(f.min[0]),
        format_coord(-f.max[1]),
        format_coord(w),
        format_coord(h)
    );
    for layer in &scene.layers {
        let _ = writeln!(
            s,
            "<g id=\"{}\" class=\"{}\" stroke-width=\"{stroke}\">",
            layer.name,
            layer.style.class()
        );
        for shape in &layer.shapes {
            match shape {
                Shape::Polygon(v) => {
                    let pts: Vec<String> = v.iter().map(pt).collect();
                    let _ = writeln!(s, "<polygon points=\"{}\"/>", pts.join(" "));
                }
                Shape::Segment(a, b) => {
                    let _ = writeln!(
                        s,
                        "<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke-dasharray=\"{} {}\"/>",
                        format_coord(a[0]),
                        format_coord(-a[1]),
                        format_coord(b[0]),
                        format_coord(-b[1]),
                        format_coord(w.max(h) * 0.01),
                        format_coord(w.max(h) * 0.01),
                    );
                }
                Shape::Circle(c) => {
                    let _ = writeln!(
                        s,
                        "<circle cx=\"{}\" cy=\"{}\" r=\"{}\"/>",
                        format_coord(c.center[0]),
                        format_coord(-c.center[1]),
                        format_coord(c.radius)
                    );
                }
                Shape::Point(p) => {
                    let _ = writeln!(
                        s,
                        "<circle class=\"point\" cx=\"{}\" cy=\"{}\" r=\"{dot}\"/>",
                        format_coord(p[0]),
                        format_coord(-p[1])
                    );
                }
            }
        }
        s.push_str("</g>\n");
    }
    s.push_str("</svg>\n");
    s
}

pub fn write_svg(scene: &Scene, path: impl AsRef<Path>) -> Result<()> {
    std::fs::write(path, emit_svg(scene))?;
    Ok(())
}
