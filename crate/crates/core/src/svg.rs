//! Deterministic SVG rendering of polygons and representatives, following
//! the usual figure conventions: filled polygon, dashed vertical cut
//! segments, and an x glyph at each marked point.

use crate::doc::Document;
use crate::error::{Error, Result};
use crate::geometry::ConvexRationalPolygon;
use crate::rat::{rat_to_f64, Rat};
use crate::semitoric::{CutDirection, SemitoricRepresentative};

/// Rendering options; the defaults reproduce the paper-style figures.
#[derive(Clone, Debug)]
pub struct RenderOptions {
    pub fill: String,
    pub stroke: String,
}

impl Default for RenderOptions {
    fn default() -> Self {
        RenderOptions {
            fill: "#cccccc".into(),
            stroke: "#000000".into(),
        }
    }
}

struct Frame {
    x0: f64,
    y1: f64,
    margin: f64,
    width: f64,
    height: f64,
}

impl Frame {
    fn of(polygon: &ConvexRationalPolygon) -> Frame {
        let (lo, hi) = polygon.bounding_box();
        let x0 = rat_to_f64(&lo.x);
        let y0 = rat_to_f64(&lo.y);
        let x1 = rat_to_f64(&hi.x);
        let y1 = rat_to_f64(&hi.y);
        let span = (x1 - x0).max(y1 - y0).max(1e-9);
        let margin = span * 0.05;
        Frame {
            x0,
            y1,
            margin,
            width: (x1 - x0) + 2.0 * margin,
            height: (y1 - y0) + 2.0 * margin,
        }
    }

    fn x(&self, x: &Rat) -> f64 {
        rat_to_f64(x) - self.x0 + self.margin
    }

    fn y(&self, y: &Rat) -> f64 {
        self.y1 + self.margin - rat_to_f64(y)
    }

    fn glyph(&self) -> f64 {
        self.width.max(self.height) * 0.02
    }

    fn stroke_width(&self) -> f64 {
        self.width.max(self.height) * 0.006
    }
}

/// Renders a document to SVG text. Byte-identical output for equal inputs.
pub fn render_svg(doc: &Document, options: &RenderOptions) -> Result<String> {
    match doc {
        Document::Polygon(p) => {
            let rep = SemitoricRepresentative::new(p.clone(), vec![]);
            Ok(render_representative(&rep, options))
        }
        Document::Representative(r) => Ok(render_representative(r, options)),
        Document::Labeled(l) => Ok(render_representative(l.representative(), options)),
        Document::Halfspaces(_) => Err(Error::Document(
            "half-space systems have no 2D rendering".into(),
        )),
    }
}

fn render_representative(rep: &SemitoricRepresentative, options: &RenderOptions) -> String {
    let polygon = rep.polygon();
    let frame = Frame::of(polygon);
    let mut out = String::new();
    out.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 {} {}\">\n",
        frame.width, frame.height
    ));
    let points: Vec<String> = polygon
        .vertices()
        .iter()
        .map(|v| format!("{},{}", frame.x(&v.x), frame.y(&v.y)))
        .collect();
    out.push_str(&format!(
        "  <polygon class=\"polygon\" points=\"{}\" fill=\"{}\" stroke=\"{}\" stroke-width=\"{}\"/>\n",
        points.join(" "),
        options.fill,
        options.stroke,
        frame.stroke_width()
    ));
    for (k, mark) in rep.marks().iter().enumerate() {
        if let Some((lo, hi)) = polygon.vertical_slice(&mark.point.x) {
            let end = match mark.cut {
                CutDirection::Up => hi,
                CutDirection::Down => lo,
            };
            out.push_str(&format!(
                "  <line class=\"cut\" data-mark=\"{k}\" x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"{}\" stroke-width=\"{}\" stroke-dasharray=\"{} {}\"/>\n",
                frame.x(&mark.point.x),
                frame.y(&mark.point.y),
                frame.x(&mark.point.x),
                frame.y(&end),
                options.stroke,
                frame.stroke_width(),
                frame.glyph() * 0.8,
                frame.glyph() * 0.6,
            ));
        }
    }
    for (k, mark) in rep.marks().iter().enumerate() {
        let cx = frame.x(&mark.point.x);
        let cy = frame.y(&mark.point.y);
        let r = frame.glyph();
        out.push_str(&format!(
            "  <path class=\"mark\" data-mark=\"{k}\" d=\"M {} {} L {} {} M {} {} L {} {}\" stroke=\"{}\" stroke-width=\"{}\" fill=\"none\"/>\n",
            cx - r,
            cy - r,
            cx + r,
            cy + r,
            cx - r,
            cy + r,
            cx + r,
            cy - r,
            options.stroke,
            frame.stroke_width()
        ));
    }
    out.push_str("</svg>\n");
    out
}
