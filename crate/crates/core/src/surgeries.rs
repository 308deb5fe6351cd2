//! Polygon surgeries: the corner chop and its reverse, classification against
//! the five strictly-minimal families, and cut removal across a transition
//! family with obstruction detection.
//!
//! A chop at a Delzant corner removes the triangle `{p, p+s v1, p+s v2}`.
//! When the triangle collides with a mark or a cut in the given
//! representative, the flip orbit is searched for a representative where it
//! is clean; the chop is performed there and mapped back.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::geometry::{
    collinear, line_intersection, primitive_and_scale, ConvexRationalPolygon, Point,
};
use crate::rat::{format_rat, rat_int, rat_is_integer, Rat};
use crate::semitoric::{
    CutDirection, GroupElement, SemitoricRepresentative, UnmarkedRepresentative, ValidationReport,
    VertexKind,
};

/// Which corner to chop and how much of each incident edge to take
/// (in lattice units of the primitive edge directions).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ChopSpec {
    pub vertex: usize,
    pub size: Rat,
}

/// A successful chop: the new representative and the index of the freshly
/// created edge (in the output's canonical edge order).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ChopOutcome {
    pub result: SemitoricRepresentative,
    pub new_edge: usize,
}

/// All flip vectors over `m` cuts, fewest flips first.
fn flip_subsets(m: usize) -> Vec<Vec<i8>> {
    let mut subsets: Vec<Vec<usize>> = (0..1usize << m)
        .map(|bits| (0..m).filter(|i| bits >> i & 1 == 1).collect())
        .collect();
    subsets.sort_by_key(|s| (s.len(), s.clone()));
    subsets
        .into_iter()
        .map(|s| {
            let mut flips = vec![1i8; m];
            for i in s {
                flips[i] = -1;
            }
            flips
        })
        .collect()
}

/// Closed-triangle membership test.
fn triangle_contains(tri: &[Point; 3], p: &Point) -> bool {
    let sign = |a: &Point, b: &Point, c: &Point| -> Rat {
        (&b.x - &a.x) * (&c.y - &a.y) - (&b.y - &a.y) * (&c.x - &a.x)
    };
    let d1 = sign(&tri[0], &tri[1], p);
    let d2 = sign(&tri[1], &tri[2], p);
    let d3 = sign(&tri[2], &tri[0], p);
    let has_neg = d1 < Rat::zero() || d2 < Rat::zero() || d3 < Rat::zero();
    let has_pos = d1 > Rat::zero() || d2 > Rat::zero() || d3 > Rat::zero();
    !(has_neg && has_pos)
}

/// Does the vertical ray from `start` in direction `dir` meet the closed
/// triangle?
fn ray_meets_triangle(tri: &[Point; 3], start: &Point, dir: CutDirection) -> bool {
    // The ray is {x = start.x, eps*y >= eps*start.y}; intersect with the
    // triangle's y-range on that vertical line.
    let mut lo: Option<Rat> = None;
    let mut hi: Option<Rat> = None;
    for i in 0..3 {
        let a = &tri[i];
        let b = &tri[(i + 1) % 3];
        if a.x == b.x {
            if a.x == start.x {
                for y in [a.y.clone(), b.y.clone()] {
                    if lo.as_ref().map_or(true, |l| &y < l) {
                        lo = Some(y.clone());
                    }
                    if hi.as_ref().map_or(true, |h| &y > h) {
                        hi = Some(y);
                    }
                }
            }
            continue;
        }
        let (xa, xb) = if a.x < b.x { (&a.x, &b.x) } else { (&b.x, &a.x) };
        if &start.x < xa || &start.x > xb {
            continue;
        }
        let t = (&start.x - &a.x) / (&b.x - &a.x);
        let y = &a.y + t * (&b.y - &a.y);
        if lo.as_ref().map_or(true, |l| &y < l) {
            lo = Some(y.clone());
        }
        if hi.as_ref().map_or(true, |h| &y > h) {
            hi = Some(y);
        }
    }
    let (Some(lo), Some(hi)) = (lo, hi) else {
        return false;
    };
    match dir {
        CutDirection::Up => hi >= start.y,
        CutDirection::Down => lo <= start.y,
    }
}

/// Attempts the chop at vertex index `i` of `rep` directly, with no orbit
/// search. Returns the new representative and the new edge's endpoints.
fn chop_here(
    rep: &SemitoricRepresentative,
    i: usize,
    size: &Rat,
) -> Result<(SemitoricRepresentative, Point, Point)> {
    let polygon = rep.polygon();
    let p = polygon.vertex(i)?.clone();
    let class = rep.classify_vertex(i)?;
    if class.kind != VertexKind::Delzant {
        return Err(Error::ChopDoesNotFit(format!(
            "vertex {i} classifies as {class}, not delzant"
        )));
    }
    let (v1, v2) = polygon.edge_directions_at_vertex(i)?;
    let m = polygon.len();
    let next = polygon.vertex((i + 1) % m)?.clone();
    let prev = polygon.vertex((i + m - 1) % m)?.clone();
    let (_, room_next) = primitive_and_scale(&p, &next)?;
    let (_, room_prev) = primitive_and_scale(&p, &prev)?;
    if size <= &Rat::zero() {
        return Err(Error::ChopDoesNotFit("size must be positive".into()));
    }
    if size >= &room_next || size >= &room_prev {
        return Err(Error::ChopDoesNotFit(format!(
            "size {} does not fit in edges of lattice lengths {} and {}",
            format_rat(size),
            format_rat(&room_next),
            format_rat(&room_prev)
        )));
    }
    let a = Point::new(
        &p.x + size * Rat::from_integer(v1.dx.clone()),
        &p.y + size * Rat::from_integer(v1.dy.clone()),
    );
    let b = Point::new(
        &p.x + size * Rat::from_integer(v2.dx.clone()),
        &p.y + size * Rat::from_integer(v2.dy.clone()),
    );
    let tri = [p.clone(), a.clone(), b.clone()];
    for (k, mark) in rep.marks().iter().enumerate() {
        if triangle_contains(&tri, &mark.point) {
            return Err(Error::ChopDoesNotFit(format!(
                "chop triangle contains mark {k}"
            )));
        }
        if ray_meets_triangle(&tri, &mark.point, mark.cut) {
            return Err(Error::ChopDoesNotFit(format!(
                "chop triangle meets the cut of mark {k}"
            )));
        }
    }
    let mut vertices: Vec<Point> = Vec::with_capacity(m + 1);
    for (j, v) in polygon.vertices().iter().enumerate() {
        if j == i {
            vertices.push(a.clone());
            vertices.push(b.clone());
        } else {
            vertices.push(v.clone());
        }
    }
    let new_polygon = ConvexRationalPolygon::from_vertices(vertices)
        .map_err(|e| Error::ChopDoesNotFit(e.to_string()))?;
    if new_polygon.len() != m + 1 {
        return Err(Error::ChopDoesNotFit(
            "chop did not add exactly one vertex".into(),
        ));
    }
    let out = SemitoricRepresentative::new(new_polygon, rep.marks().to_vec());
    let report = out.validate();
    if let Some(v) = report.violations.first() {
        return Err(Error::ChopDoesNotFit(v.to_string()));
    }
    Ok((out, a, b))
}

/// Index of the edge of `rep` whose closed segment contains `p`, preferring
/// edges on which `p` is interior.
fn edge_containing(rep: &SemitoricRepresentative, p: &Point) -> Option<usize> {
    let polygon = rep.polygon();
    let m = polygon.len();
    for i in 0..m {
        let a = polygon.vertex(i).unwrap();
        let b = polygon.vertex((i + 1) % m).unwrap();
        if !collinear(a, b, p) {
            continue;
        }
        let in_x = (&a.x <= &p.x && &p.x <= &b.x) || (&b.x <= &p.x && &p.x <= &a.x);
        let in_y = (&a.y <= &p.y && &p.y <= &b.y) || (&b.y <= &p.y && &p.y <= &a.y);
        if in_x && in_y && p != a && p != b {
            return Some(i);
        }
    }
    None
}

/// Corner chop with flip-orbit search: the triangle must avoid every mark and
/// cut in the representative where the chop is performed, and the result is
/// mapped back to the input's cut directions.
pub fn corner_chop(rep: &SemitoricRepresentative, spec: &ChopSpec) -> Result<ChopOutcome> {
    let report = rep.validate();
    if let Some(v) = report.violations.first() {
        return Err(Error::InvalidRepresentative(v.to_string()));
    }
    let p = rep.polygon().vertex(spec.vertex)?.clone();
    let class = rep.classify_vertex(spec.vertex)?;
    if class.kind != VertexKind::Delzant {
        return Err(Error::ChopDoesNotFit(format!(
            "vertex {} classifies as {class}, not delzant",
            spec.vertex
        )));
    }
    let m = rep.mark_count();
    let mut first_failure: Option<Error> = None;
    for flips in flip_subsets(m) {
        let g = GroupElement::with_flips(flips.clone());
        let moved = rep.apply_group(&g)?;
        // The chop vertex keeps its x and maps with the polygon.
        let image = transform_one(rep, &g, &p)?;
        let Some(i) = moved.polygon().vertex_index(&image) else {
            continue;
        };
        match chop_here(&moved, i, &spec.size) {
            Ok((chopped, a, b)) => {
                let back = chopped.apply_group(&g)?;
                if back.polygon().len() != rep.polygon().len() + 1 {
                    continue;
                }
                let mid = Point::new(
                    (&a.x + &b.x) / rat_int(2),
                    (&a.y + &b.y) / rat_int(2),
                );
                let mid_back = transform_one(&chopped, &g, &mid)?;
                let Some(new_edge) = edge_containing(&back, &mid_back) else {
                    continue;
                };
                return Ok(ChopOutcome {
                    result: back,
                    new_edge,
                });
            }
            Err(e) => {
                if first_failure.is_none() {
                    first_failure = Some(e);
                }
            }
        }
    }
    match first_failure {
        Some(e) if m == 0 => Err(e),
        Some(Error::ChopDoesNotFit(msg)) if msg.starts_with("size") => {
            Err(Error::ChopDoesNotFit(msg))
        }
        _ => Err(Error::ChopBlockedByCuts),
    }
}

/// Image of a single point under the piecewise map of `g` acting on `rep`.
fn transform_one(rep: &SemitoricRepresentative, g: &GroupElement, p: &Point) -> Result<Point> {
    let mut y = &p.y + rat_int(g.shear) * &p.x + &g.translate;
    for (mark, &f) in rep.marks().iter().zip(&g.flips) {
        let u = i64::from(mark.cut.sign()) * i64::from(1 - f) / 2;
        if u != 0 && p.x >= mark.point.x {
            y += rat_int(u) * (&p.x - &mark.point.x);
        }
    }
    Ok(Point::new(p.x.clone(), y))
}

/// Tries to reverse a corner chop across edge `edge`: delete it, extend the
/// neighboring edges to their intersection, and accept only if the forward
/// chop of the result reproduces `rep` exactly.
pub fn reverse_chop(rep: &SemitoricRepresentative, edge: usize) -> Result<SemitoricRepresentative> {
    let report = rep.validate();
    if let Some(v) = report.violations.first() {
        return Err(Error::InvalidRepresentative(v.to_string()));
    }
    let m = rep.polygon().len();
    if edge >= m {
        return Err(Error::EdgeIndexOutOfRange {
            index: edge,
            len: m,
        });
    }
    let probes = edge_probes(rep, edge);
    let mut reason = String::from("no flip representative admits the reversal");
    for flips in flip_subsets(rep.mark_count()) {
        let g = GroupElement::with_flips(flips);
        let moved = rep.apply_group(&g)?;
        for probe in &probes {
            let image = transform_one(rep, &g, probe)?;
            let Some(e) = edge_containing(&moved, &image) else {
                continue;
            };
            match reverse_here(&moved, e) {
                Ok((merged, q, size)) => {
                    let back = merged.apply_group(&g)?;
                    let q_back = transform_one(&merged, &g, &q)?;
                    let Some(qi) = back.polygon().vertex_index(&q_back) else {
                        continue;
                    };
                    // The reversal counts only if chopping it again restores
                    // the input bit for bit.
                    match corner_chop(&back, &ChopSpec { vertex: qi, size }) {
                        Ok(outcome) if outcome.result == *rep => return Ok(back),
                        Ok(_) => reason = "re-chop does not reproduce the input".into(),
                        Err(e) => reason = e.to_string(),
                    }
                }
                Err(e) => {
                    reason = e.to_string();
                }
            }
        }
    }
    Err(Error::NotReverseChoppable(edge, reason))
}

/// Probe points along edge `edge`: midpoints of the pieces obtained by
/// splitting at every cut line crossing the edge's interior, so every image
/// edge in a flipped representative contains at least one probe image.
fn edge_probes(rep: &SemitoricRepresentative, edge: usize) -> Vec<Point> {
    let polygon = rep.polygon();
    let a = polygon.vertex(edge).unwrap().clone();
    let b = polygon.vertex((edge + 1) % polygon.len()).unwrap().clone();
    let mut xs: Vec<Rat> = vec![];
    let (lo_x, hi_x) = if a.x <= b.x {
        (a.x.clone(), b.x.clone())
    } else {
        (b.x.clone(), a.x.clone())
    };
    for mark in rep.marks() {
        if mark.point.x > lo_x && mark.point.x < hi_x && !xs.contains(&mark.point.x) {
            xs.push(mark.point.x.clone());
        }
    }
    if a.x == b.x {
        return vec![Point::new(
            a.x.clone(),
            (&a.y + &b.y) / rat_int(2),
        )];
    }
    let mut stations: Vec<Point> = vec![a.clone()];
    xs.sort();
    if a.x > b.x {
        xs.reverse();
    }
    for x in xs {
        let t = (&x - &a.x) / (&b.x - &a.x);
        stations.push(Point::new(x, &a.y + t * (&b.y - &a.y)));
    }
    stations.push(b.clone());
    stations
        .windows(2)
        .map(|w| {
            Point::new(
                (&w[0].x + &w[1].x) / rat_int(2),
                (&w[0].y + &w[1].y) / rat_int(2),
            )
        })
        .collect()
}

/// Direct reversal in the given representative: returns the merged
/// representative, the reinstated corner, and the chop size it implies.
fn reverse_here(
    rep: &SemitoricRepresentative,
    edge: usize,
) -> Result<(SemitoricRepresentative, Point, Rat)> {
    let polygon = rep.polygon();
    let m = polygon.len();
    if m < 4 {
        return Err(Error::NotReverseChoppable(
            edge,
            "triangle has no reversible edge".into(),
        ));
    }
    let vi = polygon.vertex(edge)?.clone();
    let vj = polygon.vertex((edge + 1) % m)?.clone();
    let prev = polygon.vertex((edge + m - 1) % m)?.clone();
    let next = polygon.vertex((edge + 2) % m)?.clone();
    let (dir_prev, _) = primitive_and_scale(&prev, &vi)?;
    let (dir_next, _) = primitive_and_scale(&next, &vj)?;
    let Some(q) = line_intersection(&vi, &dir_prev, &vj, &dir_next) else {
        return Err(Error::NotReverseChoppable(
            edge,
            "neighboring edges are parallel".into(),
        ));
    };
    if q == vi || q == vj {
        return Err(Error::NotReverseChoppable(edge, "degenerate extension".into()));
    }
    // q must extend both edges outward, strictly past the deleted edge.
    let along1 = primitive_and_scale(&vi, &q)?.0 == dir_prev;
    let along2 = primitive_and_scale(&vj, &q)?.0 == dir_next;
    if !along1 || !along2 {
        return Err(Error::NotReverseChoppable(
            edge,
            "extension does not point outward".into(),
        ));
    }
    // Symmetric lattice distances make it an honest chop image.
    let (_, s1) = primitive_and_scale(&q, &vi)?;
    let (_, s2) = primitive_and_scale(&q, &vj)?;
    if s1 != s2 {
        return Err(Error::NotReverseChoppable(
            edge,
            "lattice distances to the corner differ".into(),
        ));
    }
    let mut vertices: Vec<Point> = Vec::with_capacity(m - 1);
    for (k, v) in polygon.vertices().iter().enumerate() {
        if k == edge {
            vertices.push(q.clone());
        } else if k == (edge + 1) % m {
            continue;
        } else {
            vertices.push(v.clone());
        }
    }
    let merged_polygon = ConvexRationalPolygon::from_vertices(vertices)
        .map_err(|e| Error::NotReverseChoppable(edge, e.to_string()))?;
    if merged_polygon.len() != m - 1 {
        return Err(Error::NotReverseChoppable(
            edge,
            "merge did not drop exactly one vertex".into(),
        ));
    }
    let out = SemitoricRepresentative::new(merged_polygon, rep.marks().to_vec());
    let report = out.validate();
    if let Some(v) = report.violations.first() {
        return Err(Error::NotReverseChoppable(edge, v.to_string()));
    }
    Ok((out, q, s1))
}

/// Every edge whose reversal undoes a corner chop. Empty means corner-chop
/// minimal.
pub fn reversible_edges(rep: &SemitoricRepresentative) -> Result<Vec<usize>> {
    let report = rep.validate();
    if let Some(v) = report.violations.first() {
        return Err(Error::InvalidRepresentative(v.to_string()));
    }
    let mut out = Vec::new();
    for e in 0..rep.polygon().len() {
        if reverse_chop(rep, e).is_ok() {
            out.push(e);
        }
    }
    Ok(out)
}

/// Verdict of the strictly-minimal classification.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum MinimalClassification {
    Type1 { a: Rat },
    Type2 { a: Rat, b: Rat },
    Type3A { a: Rat, b: Rat, n: i64 },
    Type3B { a: Rat, n: i64 },
    Type3C { a: Rat, b: Rat, n: i64 },
    NotMinimal { edge: usize },
    NoMarks,
    Unmatched,
}

impl std::fmt::Display for MinimalClassification {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            MinimalClassification::Type1 { a } => write!(f, "type1 a={}", format_rat(a)),
            MinimalClassification::Type2 { a, b } => {
                write!(f, "type2 a={} b={}", format_rat(a), format_rat(b))
            }
            MinimalClassification::Type3A { a, b, n } => {
                write!(f, "type3a a={} b={} n={n}", format_rat(a), format_rat(b))
            }
            MinimalClassification::Type3B { a, n } => {
                write!(f, "type3b a={} n={n}", format_rat(a))
            }
            MinimalClassification::Type3C { a, b, n } => {
                write!(f, "type3c a={} b={} n={n}", format_rat(a), format_rat(b))
            }
            MinimalClassification::NotMinimal { edge } => write!(f, "not-minimal edge={edge}"),
            MinimalClassification::NoMarks => write!(f, "no-marks"),
            MinimalClassification::Unmatched => write!(f, "unmatched"),
        }
    }
}

/// Classifies a representative against the five strictly-minimal families.
///
/// A reverse-choppable edge wins first (`NotMinimal`); unmarked polygons
/// report `NoMarks`; otherwise the canonical unmarked form is matched,
/// up to a horizontal anchor shift, against the parameterized families.
/// `Unmatched` is a legal outcome.
pub fn strictly_minimal_type(rep: &SemitoricRepresentative) -> Result<MinimalClassification> {
    let edges = reversible_edges(rep)?;
    if let Some(&edge) = edges.first() {
        return Ok(MinimalClassification::NotMinimal { edge });
    }
    if rep.mark_count() == 0 {
        return Ok(MinimalClassification::NoMarks);
    }
    let canon = rep.forget_heights().canonicalize()?;
    Ok(match_minimal_family(&canon))
}

fn match_minimal_family(u: &UnmarkedRepresentative) -> MinimalClassification {
    let verts = u.polygon().vertices();
    let x0 = verts[0].x.clone();
    let shifted: Vec<Point> = verts
        .iter()
        .map(|v| Point::new(&v.x - &x0, v.y.clone()))
        .collect();
    let cuts: Vec<Rat> = u.cuts().iter().map(|c| &c.x - &x0).collect();
    if u.cuts().iter().any(|c| c.cut != CutDirection::Up) {
        return MinimalClassification::Unmatched;
    }

    let two = rat_int(2);
    match (shifted.len(), cuts.len()) {
        (3, 1) => {
            // Type 1: (0,0), (2a,0), (a,a/2) with the cut at x=a.
            let top = &shifted[2];
            let a = top.x.clone();
            if a > Rat::zero()
                && top.y == &a / &two
                && shifted[1] == Point::new(&a * &two, Rat::zero())
                && shifted[0] == Point::new(Rat::zero(), Rat::zero())
                && cuts[0] == a
            {
                return MinimalClassification::Type1 { a };
            }
            // Type 3b, triangle form: (0,0), (na,0), (a,a).
            let a = top.x.clone();
            if a > Rat::zero() && top.y == a && shifted[0] == Point::new(Rat::zero(), Rat::zero())
            {
                let n_rat = &shifted[1].x / &a;
                if shifted[1].y.is_zero() && rat_is_integer(&n_rat) && cuts[0] == a {
                    if let Ok(n) = i64::try_from(&n_rat.to_integer()) {
                        if n >= 2 {
                            return MinimalClassification::Type3B { a, n };
                        }
                    }
                }
            }
            MinimalClassification::Unmatched
        }
        (3, 2) => {
            // Type 2 with b = 0: (0,0), (2a,0), (a,a), both cuts at x=a.
            let top = &shifted[2];
            let a = top.x.clone();
            if a > Rat::zero()
                && top.y == a
                && shifted[1] == Point::new(&a * &two, Rat::zero())
                && shifted[0] == Point::new(Rat::zero(), Rat::zero())
                && cuts[0] == a
                && cuts[1] == a
            {
                return MinimalClassification::Type2 { a, b: Rat::zero() };
            }
            MinimalClassification::Unmatched
        }
        (4, 2) => {
            // Type 2: (0,0), (2a+b,0), (a+b,a), (a,a), cuts at x=a and a+b.
            let a = shifted[3].y.clone();
            if a > Rat::zero() && shifted[3].x == a && shifted[2].y == a {
                let b = &shifted[2].x - &a;
                if b > Rat::zero()
                    && shifted[1] == Point::new(&a * &two + &b, Rat::zero())
                    && shifted[0] == Point::new(Rat::zero(), Rat::zero())
                    && cuts[0] == a
                    && cuts[1] == &a + &b
                {
                    return MinimalClassification::Type2 { a, b };
                }
            }
            MinimalClassification::Unmatched
        }
        (4, 1) => {
            // Type 3a: (0,0), (na+b,0), (a+b,a), (a,a) with b > 0.
            let a = shifted[3].y.clone();
            if a > Rat::zero() && shifted[3].x == a && shifted[2].y == a && cuts[0] == a {
                let b = &shifted[2].x - &a;
                if b > Rat::zero() && shifted[1].y.is_zero() {
                    let n_rat = (&shifted[1].x - &b) / &a;
                    if rat_is_integer(&n_rat) {
                        if let Ok(n) = i64::try_from(&n_rat.to_integer()) {
                            if n >= 1 {
                                return MinimalClassification::Type3A { a, b, n };
                            }
                        }
                    }
                }
            }
            // Type 3c: (0,0), (na+b,0), (a, a+b/(n-1)), (a+b,a+b) with
            // -a < b < 0; the x-order puts (a+b, a+b) before (a, ...).
            let apb = shifted[3].x.clone();
            if shifted[3].y == apb && shifted[2].y > Rat::zero() {
                let a = shifted[2].x.clone();
                let b = &apb - &a;
                if a > Rat::zero() && b < Rat::zero() && b > -a.clone() && cuts[0] == a {
                    let h = shifted[2].y.clone();
                    let denom = &h - &a;
                    if !denom.is_zero() {
                        let n_rat = rat_int(1) + &b / &denom;
                        if rat_is_integer(&n_rat) {
                            if let Ok(n) = i64::try_from(&n_rat.to_integer()) {
                                if n >= 2
                                    && shifted[1]
                                        == Point::new(rat_int(n) * &a + &b, Rat::zero())
                                    && shifted[0] == Point::new(Rat::zero(), Rat::zero())
                                {
                                    return MinimalClassification::Type3C { a, b, n };
                                }
                            }
                        }
                    }
                }
            }
            MinimalClassification::Unmatched
        }
        _ => MinimalClassification::Unmatched,
    }
}

/// Result of removing one cut across a transition-family boundary.
#[derive(Clone, Debug)]
pub struct TransitionResult {
    pub after: UnmarkedRepresentative,
    pub report: ValidationReport,
}

impl TransitionResult {
    pub fn valid(&self) -> bool {
        self.report.is_valid()
    }
}

/// Moves to the flip-orbit representative in which mark `k` points in
/// `direction`, deletes that mark (the polygon is unchanged), and validates
/// what remains. An invalid result is the transition-family obstruction.
pub fn transition_cut_removal(
    rep: &SemitoricRepresentative,
    k: usize,
    direction: CutDirection,
) -> Result<TransitionResult> {
    let report = rep.validate();
    if let Some(v) = report.violations.first() {
        return Err(Error::InvalidRepresentative(v.to_string()));
    }
    if k >= rep.mark_count() {
        return Err(Error::MarkIndexOutOfRange {
            index: k,
            len: rep.mark_count(),
        });
    }
    let oriented = if rep.marks()[k].cut == direction {
        rep.clone()
    } else {
        rep.apply_group(&GroupElement::single_flip(rep.mark_count(), k))?
    };
    let mut marks = oriented.marks().to_vec();
    marks.remove(k);
    let after = SemitoricRepresentative::new(oriented.polygon().clone(), marks).forget_heights();
    let report = after.validate();
    Ok(TransitionResult { after, report })
}
