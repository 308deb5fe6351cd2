//! The interchange document format: a small JSON dialect in which every
//! rational is a string (`"p/q"` or a decimal integer string) so that floats
//! can never leak in. A document holds exactly one of: a bare polygon, a
//! marked representative, a labeled polygon, or a half-space system.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::delzant::HalfspaceSystem;
use crate::error::{Error, Result};
use crate::geometry::{ConvexRationalPolygon, Point};
use crate::labels::{extend_tuple, LabeledPolygon, Labels, PinchTuple, SimpleLabel};
use crate::rat::{format_rat, parse_rat, Rat};
use crate::semitoric::{CutDirection, MarkedPoint, SemitoricRepresentative};
use crate::series::{TruncatedSeries, DEFAULT_ORDER};

/// Schema version accepted and emitted.
pub const SCHEMA_VERSION: u32 = 1;

/// Everything a document can describe.
#[derive(Clone, Debug)]
pub enum Document {
    Polygon(ConvexRationalPolygon),
    Representative(SemitoricRepresentative),
    Labeled(LabeledPolygon),
    Halfspaces(HalfspaceSystem),
}

impl Document {
    /// The polygon behind the document, when there is one.
    pub fn polygon(&self) -> Option<&ConvexRationalPolygon> {
        match self {
            Document::Polygon(p) => Some(p),
            Document::Representative(r) => Some(r.polygon()),
            Document::Labeled(l) => Some(l.representative().polygon()),
            Document::Halfspaces(_) => None,
        }
    }

    /// The representative view: a bare polygon reads as a representative
    /// with no marks.
    pub fn representative(&self) -> Option<SemitoricRepresentative> {
        match self {
            Document::Polygon(p) => Some(SemitoricRepresentative::new(p.clone(), vec![])),
            Document::Representative(r) => Some(r.clone()),
            Document::Labeled(l) => Some(l.representative().clone()),
            Document::Halfspaces(_) => None,
        }
    }
}

/// Knobs for [`parse_document`].
#[derive(Clone, Copy, Debug)]
pub struct ParseOptions {
    /// Reject vertex lists that are not already in canonical CCW order.
    pub strict: bool,
    /// Truncation order used when a labels block does not name one.
    pub default_order: usize,
}

impl Default for ParseOptions {
    fn default() -> Self {
        ParseOptions {
            strict: false,
            default_order: DEFAULT_ORDER,
        }
    }
}

/// A parsed document plus any normalization warnings.
#[derive(Clone, Debug)]
pub struct Parsed {
    pub document: Document,
    pub warnings: Vec<String>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDoc {
    schema: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    vertices: Option<Vec<(String, String)>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    marks: Option<Vec<RawMark>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    labels: Option<RawLabels>,
    #[serde(skip_serializing_if = "Option::is_none")]
    halfspaces: Option<RawHalfspaces>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawMark {
    x: String,
    y: String,
    cut: String,
}

type RawSeries = Vec<(usize, usize, String)>;

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawLabels {
    #[serde(skip_serializing_if = "Option::is_none")]
    order: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    simple: Option<Vec<RawSimple>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pinch: Option<Vec<RawPinch>>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSimple {
    series: RawSeries,
    kappa: i64,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawPinch {
    #[serde(skip_serializing_if = "Option::is_none")]
    s: Option<Vec<RawSeries>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    g: Option<Vec<Vec<RawSeries>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    s0: Option<RawSeries>,
    #[serde(skip_serializing_if = "Option::is_none")]
    chain: Option<Vec<RawSeries>>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawHalfspaces {
    dimension: usize,
    facets: Vec<RawFacet>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawFacet {
    normal: Vec<i64>,
    offset: String,
}

fn ctx(err: Error, what: &str) -> Error {
    Error::Document(format!("{what}: {err}"))
}

fn parse_point(x: &str, y: &str, what: &str) -> Result<Point> {
    Ok(Point::new(
        parse_rat(x).map_err(|e| ctx(e, what))?,
        parse_rat(y).map_err(|e| ctx(e, what))?,
    ))
}

fn parse_series(order: usize, raw: &RawSeries, what: &str) -> Result<TruncatedSeries> {
    let mut terms = Vec::with_capacity(raw.len());
    for (i, j, c) in raw {
        if i + j > order {
            return Err(Error::Document(format!(
                "{what}: term X^{i} Y^{j} exceeds truncation order {order}"
            )));
        }
        terms.push((*i, *j, parse_rat(c).map_err(|e| ctx(e, what))?));
    }
    Ok(TruncatedSeries::from_terms(order, terms))
}

fn series_to_raw(s: &TruncatedSeries) -> RawSeries {
    s.terms()
        .map(|(i, j, c)| (i, j, format_rat(c)))
        .collect()
}

/// Parses the UTF-8 text of a document.
pub fn parse_document(text: &str, options: &ParseOptions) -> Result<Parsed> {
    let raw: RawDoc =
        serde_json::from_str(text).map_err(|e| Error::Document(e.to_string()))?;
    if raw.schema != SCHEMA_VERSION {
        return Err(Error::Document(format!(
            "unsupported schema version {} (expected {SCHEMA_VERSION})",
            raw.schema
        )));
    }
    let mut warnings = Vec::new();

    if let Some(h) = &raw.halfspaces {
        if raw.vertices.is_some() || raw.marks.is_some() || raw.labels.is_some() {
            return Err(Error::Document(
                "a half-space document cannot also carry vertices, marks, or labels".into(),
            ));
        }
        let facets: Vec<(Vec<BigInt>, Rat)> = h
            .facets
            .iter()
            .enumerate()
            .map(|(i, f)| {
                Ok((
                    f.normal.iter().map(|&x| BigInt::from(x)).collect(),
                    parse_rat(&f.offset).map_err(|e| ctx(e, &format!("facets[{i}].offset")))?,
                ))
            })
            .collect::<Result<_>>()?;
        let system = HalfspaceSystem::new(h.dimension, facets)?;
        return Ok(Parsed {
            document: Document::Halfspaces(system),
            warnings,
        });
    }

    let Some(raw_vertices) = &raw.vertices else {
        return Err(Error::Document(
            "document needs either vertices or a halfspaces block".into(),
        ));
    };
    let points: Vec<Point> = raw_vertices
        .iter()
        .enumerate()
        .map(|(i, (x, y))| parse_point(x, y, &format!("vertices[{i}]")))
        .collect::<Result<_>>()?;
    let polygon = ConvexRationalPolygon::from_vertices(points.clone())?;
    if polygon.vertices() != points.as_slice() {
        if options.strict {
            return Err(Error::Document(
                "vertex list is not in canonical counterclockwise order (strict mode)".into(),
            ));
        }
        warnings.push("vertex list normalized to canonical counterclockwise order".into());
    }

    let Some(raw_marks) = &raw.marks else {
        if raw.labels.is_some() {
            return Err(Error::Document("labels require a marks block".into()));
        }
        return Ok(Parsed {
            document: Document::Polygon(polygon),
            warnings,
        });
    };
    let marks: Vec<MarkedPoint> = raw_marks
        .iter()
        .enumerate()
        .map(|(i, m)| {
            let point = parse_point(&m.x, &m.y, &format!("marks[{i}]"))?;
            let cut = match m.cut.as_str() {
                "up" => CutDirection::Up,
                "down" => CutDirection::Down,
                other => {
                    return Err(Error::Document(format!(
                        "marks[{i}].cut must be \"up\" or \"down\", got {other:?}"
                    )))
                }
            };
            Ok(MarkedPoint { point, cut })
        })
        .collect::<Result<_>>()?;
    let rep = SemitoricRepresentative::new(polygon, marks);

    let Some(raw_labels) = &raw.labels else {
        return Ok(Parsed {
            document: Document::Representative(rep),
            warnings,
        });
    };
    let order = raw_labels.order.unwrap_or(options.default_order);
    let labels = match (&raw_labels.simple, &raw_labels.pinch) {
        (Some(simple), None) => {
            let labels: Vec<SimpleLabel> = simple
                .iter()
                .enumerate()
                .map(|(i, l)| {
                    let series = parse_series(order, &l.series, &format!("labels.simple[{i}]"))?;
                    SimpleLabel::new(series, l.kappa)
                })
                .collect::<Result<_>>()?;
            Labels::Simple(labels)
        }
        (None, Some(pinch)) => {
            let tuples: Vec<PinchTuple> = pinch
                .iter()
                .enumerate()
                .map(|(i, p)| parse_pinch(order, p, i))
                .collect::<Result<_>>()?;
            Labels::Pinch(tuples)
        }
        _ => {
            return Err(Error::Document(
                "labels block needs exactly one of `simple` or `pinch`".into(),
            ))
        }
    };
    let labeled = LabeledPolygon::new(rep, labels)?;
    Ok(Parsed {
        document: Document::Labeled(labeled),
        warnings,
    })
}

fn parse_pinch(order: usize, raw: &RawPinch, index: usize) -> Result<PinchTuple> {
    let what = format!("labels.pinch[{index}]");
    match (&raw.s, &raw.g, &raw.s0, &raw.chain) {
        (Some(s), Some(g), None, None) => {
            let series: Vec<TruncatedSeries> = s
                .iter()
                .map(|r| parse_series(order, r, &what))
                .collect::<Result<_>>()?;
            let matrix: Vec<Vec<TruncatedSeries>> = g
                .iter()
                .map(|row| {
                    row.iter()
                        .map(|r| parse_series(order, r, &what))
                        .collect::<Result<_>>()
                })
                .collect::<Result<_>>()?;
            PinchTuple::new(series, matrix)
        }
        (None, None, Some(s0), chain) => {
            let s0 = parse_series(order, s0, &what)?;
            let chain: Vec<TruncatedSeries> = chain
                .as_deref()
                .unwrap_or(&[])
                .iter()
                .map(|r| parse_series(order, r, &what))
                .collect::<Result<_>>()?;
            extend_tuple(s0, &chain)
        }
        _ => Err(Error::Document(format!(
            "{what}: give either `s` and `g`, or `s0` with an optional `chain`"
        ))),
    }
}

/// Serializes a document to its canonical text: fixed key order, two-space
/// indentation, trailing newline. Parsing the output returns the same value.
pub fn write_document(doc: &Document) -> String {
    let raw = match doc {
        Document::Polygon(p) => RawDoc {
            schema: SCHEMA_VERSION,
            vertices: Some(vertices_to_raw(p)),
            marks: None,
            labels: None,
            halfspaces: None,
        },
        Document::Representative(r) => RawDoc {
            schema: SCHEMA_VERSION,
            vertices: Some(vertices_to_raw(r.polygon())),
            marks: Some(marks_to_raw(r)),
            labels: None,
            halfspaces: None,
        },
        Document::Labeled(l) => {
            let rep = l.representative();
            let labels = match l.labels() {
                Labels::Simple(labels) => RawLabels {
                    order: Some(
                        labels
                            .first()
                            .map(|s| s.order())
                            .unwrap_or(DEFAULT_ORDER),
                    ),
                    simple: Some(
                        labels
                            .iter()
                            .map(|s| RawSimple {
                                series: series_to_raw(s.series_class()),
                                kappa: s.kappa(),
                            })
                            .collect(),
                    ),
                    pinch: None,
                },
                Labels::Pinch(tuples) => RawLabels {
                    order: Some(
                        tuples
                            .first()
                            .map(|t| t.order())
                            .unwrap_or(DEFAULT_ORDER),
                    ),
                    simple: None,
                    pinch: Some(
                        tuples
                            .iter()
                            .map(|t| RawPinch {
                                s: Some(t.series().iter().map(series_to_raw).collect()),
                                g: Some(
                                    (0..t.pinch_count())
                                        .map(|mu| {
                                            (0..t.pinch_count())
                                                .map(|nu| series_to_raw(t.g(mu, nu)))
                                                .collect()
                                        })
                                        .collect(),
                                ),
                                s0: None,
                                chain: None,
                            })
                            .collect(),
                    ),
                },
            };
            RawDoc {
                schema: SCHEMA_VERSION,
                vertices: Some(vertices_to_raw(rep.polygon())),
                marks: Some(marks_to_raw(rep)),
                labels: Some(labels),
                halfspaces: None,
            }
        }
        Document::Halfspaces(h) => RawDoc {
            schema: SCHEMA_VERSION,
            vertices: None,
            marks: None,
            labels: None,
            halfspaces: Some(RawHalfspaces {
                dimension: h.dimension(),
                facets: h
                    .facets()
                    .iter()
                    .map(|f| RawFacet {
                        normal: f
                            .normal
                            .iter()
                            .map(|x| i64::try_from(x).expect("desk-scale normal"))
                            .collect(),
                        offset: format_rat(&f.offset),
                    })
                    .collect(),
            }),
        },
    };
    let mut text = serde_json::to_string_pretty(&raw).expect("serializable document");
    text.push('\n');
    text
}

fn vertices_to_raw(p: &ConvexRationalPolygon) -> Vec<(String, String)> {
    p.vertices()
        .iter()
        .map(|v| (format_rat(&v.x), format_rat(&v.y)))
        .collect()
}

fn marks_to_raw(r: &SemitoricRepresentative) -> Vec<RawMark> {
    r.marks()
        .iter()
        .map(|m| RawMark {
            x: format_rat(&m.point.x),
            y: format_rat(&m.point.y),
            cut: m.cut.to_string(),
        })
        .collect()
}
