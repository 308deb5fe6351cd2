//! Marked semitoric polygon representatives: the corner conditions at cut
//! vertices, validation, the group of vertical shears, vertical translations
//! and cut flips acting on representatives, canonical orbit representatives,
//! and orbit equivalence.
//!
//! A flip of the cut at x = j composes the piecewise shear `t_j^u` into the
//! acting map. That map bends the plane along the whole line x = j, so the
//! image polygon is rebuilt from the images of the old vertices together with
//! the boundary points on every bent line; fake corners disappear and new
//! corners appear exactly where the classification says they should.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::geometry::{det2, ConvexRationalPolygon, Point};
use crate::rat::{rat_floor, Rat};

/// Direction of a cut ray: straight up or straight down from its mark.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum CutDirection {
    Up,
    Down,
}

impl CutDirection {
    pub fn sign(self) -> i8 {
        match self {
            CutDirection::Up => 1,
            CutDirection::Down => -1,
        }
    }

    pub fn from_sign(s: i8) -> CutDirection {
        if s >= 0 {
            CutDirection::Up
        } else {
            CutDirection::Down
        }
    }

    pub fn flipped(self) -> CutDirection {
        match self {
            CutDirection::Up => CutDirection::Down,
            CutDirection::Down => CutDirection::Up,
        }
    }
}

impl std::fmt::Display for CutDirection {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CutDirection::Up => write!(f, "up"),
            CutDirection::Down => write!(f, "down"),
        }
    }
}

/// An interior marked point together with its cut direction.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MarkedPoint {
    pub point: Point,
    pub cut: CutDirection,
}

/// How a single vertex classifies against the corner conditions.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum VertexKind {
    Delzant,
    Fake,
    Hidden,
    Unclassifiable,
}

impl std::fmt::Display for VertexKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            VertexKind::Delzant => write!(f, "delzant"),
            VertexKind::Fake => write!(f, "fake"),
            VertexKind::Hidden => write!(f, "hidden"),
            VertexKind::Unclassifiable => write!(f, "unclassifiable"),
        }
    }
}

/// Classification of one vertex: its kind, the number `k` of cuts whose ray
/// meets the boundary there, and the witness determinant `det(v1, T^k v2)`
/// (or `det(v1, v2)` when `k = 0`).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct VertexClass {
    pub kind: VertexKind,
    pub cut_multiplicity: usize,
    pub witness: BigInt,
}

/// One reason a candidate representative fails validation.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Violation {
    MarkNotInterior { mark: usize, point: Point },
    CutHitsNonVertex { mark: usize, point: Point },
    BadVertex { vertex: usize, class: VertexClass, point: Point },
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Violation::MarkNotInterior { mark, point } => {
                write!(f, "mark {mark} at {point} is not interior to the polygon")
            }
            Violation::CutHitsNonVertex { mark, point } => {
                write!(f, "cut of mark {mark} meets the boundary at {point}, which is not a vertex")
            }
            Violation::BadVertex { vertex, class, point } => {
                if class.cut_multiplicity == 0 {
                    write!(
                        f,
                        "vertex {vertex} at {point} is not Delzant (determinant {})",
                        class.witness
                    )
                } else {
                    write!(
                        f,
                        "vertex {vertex} at {point} on {} cut(s) is neither fake nor hidden (determinant {})",
                        class.cut_multiplicity, class.witness
                    )
                }
            }
        }
    }
}

/// Full validation result: per-vertex classes, the simple flag, and every
/// violated condition.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
    pub vertex_classes: Vec<VertexClass>,
    pub simple: bool,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Element of the acting group `T x (Z_2)^m`: a vertical shear power, a
/// vertical translation, and one flip sign per mark.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GroupElement {
    pub shear: i64,
    pub translate: Rat,
    pub flips: Vec<i8>,
}

impl GroupElement {
    pub fn identity(marks: usize) -> Self {
        GroupElement {
            shear: 0,
            translate: Rat::zero(),
            flips: vec![1; marks],
        }
    }

    pub fn with_shear(marks: usize, shear: i64) -> Self {
        GroupElement {
            shear,
            ..Self::identity(marks)
        }
    }

    pub fn with_translate(marks: usize, translate: Rat) -> Self {
        GroupElement {
            translate,
            ..Self::identity(marks)
        }
    }

    pub fn with_flips(flips: Vec<i8>) -> Self {
        GroupElement {
            shear: 0,
            translate: Rat::zero(),
            flips,
        }
    }

    /// Flip only the cut of mark `k`.
    pub fn single_flip(marks: usize, k: usize) -> Self {
        let mut flips = vec![1; marks];
        flips[k] = -1;
        GroupElement {
            shear: 0,
            translate: Rat::zero(),
            flips,
        }
    }

    fn check_flips(&self) -> Result<()> {
        if self.flips.iter().any(|&f| f != 1 && f != -1) {
            return Err(Error::InvalidRepresentative(
                "flip entries must be +1 or -1".into(),
            ));
        }
        Ok(())
    }

    /// `self` followed by `then`; the group is abelian in the shear and
    /// translation parts and the flips multiply.
    pub fn and_then(&self, then: &GroupElement) -> GroupElement {
        GroupElement {
            shear: self.shear + then.shear,
            translate: &self.translate + &then.translate,
            flips: self
                .flips
                .iter()
                .zip(&then.flips)
                .map(|(a, b)| a * b)
                .collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.shear == 0 && self.translate.is_zero() && self.flips.iter().all(|&f| f == 1)
    }
}

/// The piecewise map determined by a group element against fixed cut data:
/// `(x, y) -> (x, y + shear*x + translate + sum_k u_k * max(0, x - x_k))`.
struct PiecewiseShear {
    shear: i64,
    translate: Rat,
    /// Break lines with their combined shear exponents, nonzero only.
    breaks: Vec<(Rat, i64)>,
}

impl PiecewiseShear {
    fn build(shear: i64, translate: Rat, cut_x: &[Rat], eps: &[i8], flips: &[i8]) -> Self {
        let mut breaks: Vec<(Rat, i64)> = Vec::new();
        for ((x, &e), &f) in cut_x.iter().zip(eps).zip(flips) {
            let u = i64::from(e) * i64::from(1 - f) / 2;
            if u == 0 {
                continue;
            }
            match breaks.iter_mut().find(|(bx, _)| bx == x) {
                Some((_, acc)) => *acc += u,
                None => breaks.push((x.clone(), u)),
            }
        }
        breaks.retain(|(_, u)| *u != 0);
        PiecewiseShear {
            shear,
            translate,
            breaks,
        }
    }

    fn apply(&self, p: &Point) -> Point {
        let mut y = &p.y + Rat::from_integer(BigInt::from(self.shear)) * &p.x + &self.translate;
        for (bx, u) in &self.breaks {
            if &p.x >= bx {
                y += Rat::from_integer(BigInt::from(*u)) * (&p.x - bx);
            }
        }
        Point::new(p.x.clone(), y)
    }
}

/// Shared core: where the cut at `x` pointing in `dir` meets the boundary.
fn cut_boundary_point(polygon: &ConvexRationalPolygon, x: &Rat, dir: CutDirection) -> Option<Point> {
    let (lo, hi) = polygon.vertical_slice(x)?;
    Some(match dir {
        CutDirection::Up => Point::new(x.clone(), hi),
        CutDirection::Down => Point::new(x.clone(), lo),
    })
}

/// Classification of vertex `i` given the number of cuts hitting each vertex.
fn classify(polygon: &ConvexRationalPolygon, i: usize, multiplicity: usize) -> VertexClass {
    let (v1, v2) = polygon
        .edge_directions_at_vertex(i)
        .expect("vertex index in range");
    if multiplicity == 0 {
        let w = det2(&v1, &v2);
        let kind = if w == BigInt::from(1) {
            VertexKind::Delzant
        } else {
            VertexKind::Unclassifiable
        };
        return VertexClass {
            kind,
            cut_multiplicity: 0,
            witness: w,
        };
    }
    let k = i64::try_from(multiplicity).expect("small multiplicity");
    let w = det2(&v1, &v2.sheared(k));
    let kind = if w.is_zero() {
        VertexKind::Fake
    } else if w == BigInt::from(1) {
        VertexKind::Hidden
    } else {
        VertexKind::Unclassifiable
    };
    VertexClass {
        kind,
        cut_multiplicity: multiplicity,
        witness: w,
    }
}

fn validate_core(
    polygon: &ConvexRationalPolygon,
    cut_x: &[Rat],
    dirs: &[CutDirection],
    mut extra: Vec<Violation>,
) -> ValidationReport {
    // Count, per vertex, the cuts whose boundary point lands there.
    let mut mult = vec![0usize; polygon.len()];
    for (k, (x, &dir)) in cut_x.iter().zip(dirs).enumerate() {
        let Some(hit) = cut_boundary_point(polygon, x, dir) else {
            continue;
        };
        match polygon.vertex_index(&hit) {
            Some(i) => mult[i] += 1,
            None => extra.push(Violation::CutHitsNonVertex {
                mark: k,
                point: hit,
            }),
        }
    }
    let mut classes = Vec::with_capacity(polygon.len());
    for i in 0..polygon.len() {
        let class = classify(polygon, i, mult[i]);
        if class.kind == VertexKind::Unclassifiable {
            extra.push(Violation::BadVertex {
                vertex: i,
                class: class.clone(),
                point: polygon.vertex(i).unwrap().clone(),
            });
        }
        classes.push(class);
    }
    let mut xs: Vec<&Rat> = cut_x.iter().collect();
    xs.sort();
    let simple = xs.windows(2).all(|w| w[0] != w[1]);
    ValidationReport {
        violations: extra,
        vertex_classes: classes,
        simple,
    }
}

/// A candidate marked semitoric polygon representative. Construction only
/// sorts the marks into lexicographic order; use [`validate`] to test the
/// corner conditions.
///
/// [`validate`]: SemitoricRepresentative::validate
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SemitoricRepresentative {
    polygon: ConvexRationalPolygon,
    marks: Vec<MarkedPoint>,
}

impl SemitoricRepresentative {
    pub fn new(polygon: ConvexRationalPolygon, mut marks: Vec<MarkedPoint>) -> Self {
        marks.sort_by(|a, b| a.point.cmp(&b.point));
        SemitoricRepresentative { polygon, marks }
    }

    pub fn polygon(&self) -> &ConvexRationalPolygon {
        &self.polygon
    }

    pub fn marks(&self) -> &[MarkedPoint] {
        &self.marks
    }

    pub fn mark_count(&self) -> usize {
        self.marks.len()
    }

    fn cut_xs(&self) -> Vec<Rat> {
        self.marks.iter().map(|m| m.point.x.clone()).collect()
    }

    fn dirs(&self) -> Vec<CutDirection> {
        self.marks.iter().map(|m| m.cut).collect()
    }

    fn eps(&self) -> Vec<i8> {
        self.marks.iter().map(|m| m.cut.sign()).collect()
    }

    /// Boundary point met by the cut of mark `k`.
    pub fn cut_hit(&self, k: usize) -> Result<Point> {
        let m = self.marks.get(k).ok_or(Error::MarkIndexOutOfRange {
            index: k,
            len: self.marks.len(),
        })?;
        cut_boundary_point(&self.polygon, &m.point.x, m.cut)
            .ok_or_else(|| Error::InvalidRepresentative("cut line misses the polygon".into()))
    }

    /// Classifies vertex `i` against the Delzant / fake / hidden conditions,
    /// with `k` taken to be the number of cuts meeting the boundary there.
    pub fn classify_vertex(&self, i: usize) -> Result<VertexClass> {
        self.polygon.vertex(i)?;
        let mut mult = 0;
        for m in &self.marks {
            if let Some(hit) = cut_boundary_point(&self.polygon, &m.point.x, m.cut) {
                if Some(i) == self.polygon.vertex_index(&hit) {
                    mult += 1;
                }
            }
        }
        Ok(classify(&self.polygon, i, mult))
    }

    /// Tests every condition of the definition of a representative and
    /// reports the simple flag (at most one mark per vertical line).
    pub fn validate(&self) -> ValidationReport {
        let mut extra = Vec::new();
        for (k, m) in self.marks.iter().enumerate() {
            if !self.polygon.contains_strictly(&m.point) {
                extra.push(Violation::MarkNotInterior {
                    mark: k,
                    point: m.point.clone(),
                });
            }
        }
        validate_core(&self.polygon, &self.cut_xs(), &self.dirs(), extra)
    }

    fn require_valid(&self) -> Result<()> {
        let report = self.validate();
        match report.violations.first() {
            None => Ok(()),
            Some(v) => Err(Error::InvalidRepresentative(v.to_string())),
        }
    }

    /// Applies a group element. The output is revalidated; the group action
    /// is closed on valid representatives, so a failure there reports a bug
    /// rather than bad input.
    pub fn apply_group(&self, g: &GroupElement) -> Result<SemitoricRepresentative> {
        self.require_valid()?;
        g.check_flips()?;
        if g.flips.len() != self.marks.len() {
            return Err(Error::FlipLengthMismatch {
                got: g.flips.len(),
                want: self.marks.len(),
            });
        }
        let map = PiecewiseShear::build(
            g.shear,
            g.translate.clone(),
            &self.cut_xs(),
            &self.eps(),
            &g.flips,
        );
        let polygon = transform_polygon(&self.polygon, &map)?;
        let marks: Vec<MarkedPoint> = self
            .marks
            .iter()
            .zip(&g.flips)
            .map(|(m, &f)| MarkedPoint {
                point: map.apply(&m.point),
                cut: if f == -1 { m.cut.flipped() } else { m.cut },
            })
            .collect();
        let out = SemitoricRepresentative::new(polygon, marks);
        let report = out.validate();
        if let Some(v) = report.violations.first() {
            return Err(Error::ActionClosureFailure(v.to_string()));
        }
        Ok(out)
    }

    /// Canonical orbit representative: all cuts up, the lower edge leaving
    /// the lexicographically smallest vertex sheared to slope in [0, 1), and
    /// that vertex translated to height 0. Returns the group element that
    /// maps `self` there.
    pub fn canonicalize_with_element(&self) -> Result<(SemitoricRepresentative, GroupElement)> {
        let flips = GroupElement::with_flips(self.eps());
        let upward = self.apply_group(&flips)?;
        let n = canonical_shear(&upward.polygon);
        let sheared = upward.apply_group(&GroupElement::with_shear(self.marks.len(), n))?;
        let b = -sheared.polygon.vertices()[0].y.clone();
        let done = sheared.apply_group(&GroupElement::with_translate(self.marks.len(), b.clone()))?;
        let element = flips
            .and_then(&GroupElement::with_shear(self.marks.len(), n))
            .and_then(&GroupElement::with_translate(self.marks.len(), b));
        Ok((done, element))
    }

    pub fn canonicalize(&self) -> Result<SemitoricRepresentative> {
        Ok(self.canonicalize_with_element()?.0)
    }

    /// Orbit equivalence: equality of canonical representatives.
    pub fn equivalent(&self, other: &SemitoricRepresentative) -> Result<bool> {
        Ok(self.canonicalize()? == other.canonicalize()?)
    }

    /// Drops the mark heights, keeping the cut lines and directions.
    pub fn forget_heights(&self) -> UnmarkedRepresentative {
        UnmarkedRepresentative {
            polygon: self.polygon.clone(),
            cuts: self
                .marks
                .iter()
                .map(|m| UnmarkedCut {
                    x: m.point.x.clone(),
                    cut: m.cut,
                })
                .collect(),
        }
    }
}

/// Shear power putting the slope of the first CCW edge at the base vertex
/// into [0, 1).
fn canonical_shear(polygon: &ConvexRationalPolygon) -> i64 {
    let v0 = &polygon.vertices()[0];
    let v1 = &polygon.vertices()[1];
    let slope = (&v1.y - &v0.y) / (&v1.x - &v0.x);
    let neg_floor = -rat_floor(&slope);
    i64::try_from(&neg_floor).expect("desk-scale slope")
}

fn transform_polygon(
    polygon: &ConvexRationalPolygon,
    map: &PiecewiseShear,
) -> Result<ConvexRationalPolygon> {
    let mut points: Vec<Point> = polygon.vertices().to_vec();
    for (bx, _) in &map.breaks {
        if let Some((lo, hi)) = polygon.vertical_slice(bx) {
            points.push(Point::new(bx.clone(), lo));
            points.push(Point::new(bx.clone(), hi));
        }
    }
    let images: Vec<Point> = points.iter().map(|p| map.apply(p)).collect();
    ConvexRationalPolygon::from_points_dedup(images)
        .map_err(|e| Error::ActionClosureFailure(e.to_string()))
}

/// A cut with its vertical line but no mark height; what transition families
/// and surgeries track.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct UnmarkedCut {
    pub x: Rat,
    pub cut: CutDirection,
}

/// A representative with mark heights forgotten.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct UnmarkedRepresentative {
    polygon: ConvexRationalPolygon,
    cuts: Vec<UnmarkedCut>,
}

impl UnmarkedRepresentative {
    pub fn new(polygon: ConvexRationalPolygon, mut cuts: Vec<UnmarkedCut>) -> Self {
        cuts.sort_by(|a, b| a.x.cmp(&b.x));
        UnmarkedRepresentative { polygon, cuts }
    }

    pub fn polygon(&self) -> &ConvexRationalPolygon {
        &self.polygon
    }

    pub fn cuts(&self) -> &[UnmarkedCut] {
        &self.cuts
    }

    pub fn validate(&self) -> ValidationReport {
        let mut extra = Vec::new();
        let (xmin, xmax) = self.polygon.x_range();
        for (k, c) in self.cuts.iter().enumerate() {
            if c.x <= xmin || c.x >= xmax {
                extra.push(Violation::MarkNotInterior {
                    mark: k,
                    // No height to report; use the cut line's boundary point.
                    point: Point::new(c.x.clone(), Rat::zero()),
                });
            }
        }
        let xs: Vec<Rat> = self.cuts.iter().map(|c| c.x.clone()).collect();
        let dirs: Vec<CutDirection> = self.cuts.iter().map(|c| c.cut).collect();
        validate_core(&self.polygon, &xs, &dirs, extra)
    }

    fn require_valid(&self) -> Result<()> {
        let report = self.validate();
        match report.violations.first() {
            None => Ok(()),
            Some(v) => Err(Error::InvalidRepresentative(v.to_string())),
        }
    }

    pub fn apply_group(&self, g: &GroupElement) -> Result<UnmarkedRepresentative> {
        self.require_valid()?;
        g.check_flips()?;
        if g.flips.len() != self.cuts.len() {
            return Err(Error::FlipLengthMismatch {
                got: g.flips.len(),
                want: self.cuts.len(),
            });
        }
        let xs: Vec<Rat> = self.cuts.iter().map(|c| c.x.clone()).collect();
        let eps: Vec<i8> = self.cuts.iter().map(|c| c.cut.sign()).collect();
        let map = PiecewiseShear::build(g.shear, g.translate.clone(), &xs, &eps, &g.flips);
        let polygon = transform_polygon(&self.polygon, &map)?;
        let cuts: Vec<UnmarkedCut> = self
            .cuts
            .iter()
            .zip(&g.flips)
            .map(|(c, &f)| UnmarkedCut {
                x: c.x.clone(),
                cut: if f == -1 { c.cut.flipped() } else { c.cut },
            })
            .collect();
        let out = UnmarkedRepresentative::new(polygon, cuts);
        let report = out.validate();
        if let Some(v) = report.violations.first() {
            return Err(Error::ActionClosureFailure(v.to_string()));
        }
        Ok(out)
    }

    pub fn canonicalize_with_element(&self) -> Result<(UnmarkedRepresentative, GroupElement)> {
        let flips = GroupElement::with_flips(self.cuts.iter().map(|c| c.cut.sign()).collect());
        let upward = self.apply_group(&flips)?;
        let n = canonical_shear(&upward.polygon);
        let m = self.cuts.len();
        let sheared = upward.apply_group(&GroupElement::with_shear(m, n))?;
        let b = -sheared.polygon.vertices()[0].y.clone();
        let done = sheared.apply_group(&GroupElement::with_translate(m, b.clone()))?;
        let element = flips
            .and_then(&GroupElement::with_shear(m, n))
            .and_then(&GroupElement::with_translate(m, b));
        Ok((done, element))
    }

    pub fn canonicalize(&self) -> Result<UnmarkedRepresentative> {
        Ok(self.canonicalize_with_element()?.0)
    }

    pub fn equivalent(&self, other: &UnmarkedRepresentative) -> Result<bool> {
        Ok(self.canonicalize()? == other.canonicalize()?)
    }
}

/// Formats a vertex class for diagnostics.
impl std::fmt::Display for VertexClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self.kind {
            VertexKind::Delzant => write!(f, "delzant"),
            VertexKind::Fake => write!(f, "fake({})", self.cut_multiplicity),
            VertexKind::Hidden => write!(f, "hidden({})", self.cut_multiplicity),
            VertexKind::Unclassifiable => write!(
                f,
                "unclassifiable(k={}, det={})",
                self.cut_multiplicity, self.witness
            ),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat, rat_int};

    fn pt(x: i64, y: i64) -> Point {
        Point::new(rat_int(x), rat_int(y))
    }

    fn ptq(xn: i64, xd: i64, yn: i64, yd: i64) -> Point {
        Point::new(rat(xn, xd), rat(yn, yd))
    }

    fn poly(pts: &[(i64, i64)]) -> ConvexRationalPolygon {
        ConvexRationalPolygon::from_vertices(pts.iter().map(|&(x, y)| pt(x, y)).collect()).unwrap()
    }

    fn mark(x: i64, yn: i64, yd: i64, cut: CutDirection) -> MarkedPoint {
        MarkedPoint {
            point: ptq(x, 1, yn, yd),
            cut,
        }
    }

    fn triangle_a() -> SemitoricRepresentative {
        SemitoricRepresentative::new(
            poly(&[(0, 0), (2, 1), (4, 0)]),
            vec![mark(2, 1, 2, CutDirection::Up)],
        )
    }

    fn triangle_b() -> SemitoricRepresentative {
        SemitoricRepresentative::new(
            poly(&[(0, 0), (2, 0), (4, 2)]),
            vec![mark(2, 1, 2, CutDirection::Down)],
        )
    }

    #[test]
    fn fake_corner_on_triangle() {
        let r = triangle_a();
        let i = r.polygon().vertex_index(&pt(2, 1)).unwrap();
        let c = r.classify_vertex(i).unwrap();
        assert_eq!(c.kind, VertexKind::Fake);
        assert_eq!(c.cut_multiplicity, 1);
        assert!(c.witness.is_zero());
    }

    #[test]
    fn hidden_corner() {
        let r = SemitoricRepresentative::new(
            poly(&[(0, 0), (1, 1), (3, 0)]),
            vec![mark(1, 1, 2, CutDirection::Up)],
        );
        let i = r.polygon().vertex_index(&pt(1, 1)).unwrap();
        let c = r.classify_vertex(i).unwrap();
        assert_eq!(c.kind, VertexKind::Hidden);
        assert_eq!(c.witness, BigInt::from(1));
        assert!(r.validate().is_valid());
    }

    #[test]
    fn square_corner_is_delzant() {
        let r = SemitoricRepresentative::new(poly(&[(0, 0), (1, 0), (1, 1), (0, 1)]), vec![]);
        let c = r.classify_vertex(0).unwrap();
        assert_eq!(c.kind, VertexKind::Delzant);
        assert_eq!(c.cut_multiplicity, 0);
    }

    #[test]
    fn validate_triangle_and_its_unmarked_failure() {
        let report = triangle_a().validate();
        assert!(report.is_valid());
        assert!(report.simple);

        let bare = SemitoricRepresentative::new(poly(&[(0, 0), (2, 1), (4, 0)]), vec![]);
        let report = bare.validate();
        assert!(!report.is_valid());
        let Violation::BadVertex { class, point, .. } = &report.violations[0] else {
            panic!("expected a vertex violation");
        };
        assert_eq!(point, &pt(2, 1));
        assert_eq!(class.witness.to_string(), "4");
    }

    #[test]
    fn non_simple_double_fake() {
        let r = SemitoricRepresentative::new(
            poly(&[(0, 0), (1, 1), (2, 0)]),
            vec![mark(1, 2, 5, CutDirection::Up), mark(1, 3, 4, CutDirection::Up)],
        );
        let report = r.validate();
        assert!(report.is_valid());
        assert!(!report.simple);
        let i = r.polygon().vertex_index(&pt(1, 1)).unwrap();
        let c = &report.vertex_classes[i];
        assert_eq!(c.kind, VertexKind::Fake);
        assert_eq!(c.cut_multiplicity, 2);
    }

    #[test]
    fn flip_matches_figure() {
        let got = triangle_a()
            .apply_group(&GroupElement::single_flip(1, 0))
            .unwrap();
        assert_eq!(got, triangle_b());
        // Flipping twice returns exactly.
        let back = got.apply_group(&GroupElement::single_flip(1, 0)).unwrap();
        assert_eq!(back, triangle_a());
    }

    #[test]
    fn identity_action() {
        let r = triangle_a();
        assert_eq!(r.apply_group(&GroupElement::identity(1)).unwrap(), r);
    }

    #[test]
    fn shear_square_to_parallelogram() {
        let r = SemitoricRepresentative::new(poly(&[(0, 0), (1, 0), (1, 1), (0, 1)]), vec![]);
        let sheared = r.apply_group(&GroupElement::with_shear(0, 1)).unwrap();
        assert_eq!(
            sheared.polygon().vertices(),
            &[pt(0, 0), pt(1, 1), pt(1, 2), pt(0, 1)]
        );
    }

    #[test]
    fn canonical_form_identifies_orbit() {
        let ca = triangle_a().canonicalize().unwrap();
        let cb = triangle_b().canonicalize().unwrap();
        assert_eq!(ca, cb);
        assert!(triangle_a().equivalent(&triangle_b()).unwrap());
        // Idempotence.
        assert_eq!(ca.canonicalize().unwrap(), ca);
    }

    #[test]
    fn inequivalent_scaled_triangles() {
        let small = SemitoricRepresentative::new(
            poly(&[(0, 0), (2, 1), (4, 0)]),
            vec![mark(2, 1, 2, CutDirection::Up)],
        );
        let shifted = SemitoricRepresentative::new(
            poly(&[(1, 0), (3, 1), (5, 0)]),
            vec![mark(3, 1, 2, CutDirection::Up)],
        );
        assert!(!small.equivalent(&shifted).unwrap());
    }

    #[test]
    fn forget_heights_projects() {
        let u = triangle_a().forget_heights();
        assert_eq!(u.cuts().len(), 1);
        assert_eq!(u.cuts()[0].x, rat_int(2));
        assert_eq!(u.cuts()[0].cut, CutDirection::Up);
        let other = SemitoricRepresentative::new(
            poly(&[(0, 0), (2, 1), (4, 0)]),
            vec![mark(2, 3, 4, CutDirection::Up)],
        );
        assert_eq!(u, other.forget_heights());
        assert!(u.validate().is_valid());
    }

    #[test]
    fn mark_order_stable_under_action() {
        let r = SemitoricRepresentative::new(
            poly(&[(0, 0), (1, 1), (2, 0)]),
            vec![mark(1, 2, 5, CutDirection::Up), mark(1, 3, 4, CutDirection::Up)],
        );
        let g = GroupElement {
            shear: 2,
            translate: rat(1, 3),
            flips: vec![-1, 1],
        };
        let out = r.apply_group(&g).unwrap();
        assert!(out.marks()[0].point <= out.marks()[1].point);
        assert_eq!(out.marks()[0].cut, CutDirection::Down);
        assert_eq!(out.marks()[1].cut, CutDirection::Up);
    }

    #[test]
    fn flip_length_checked() {
        let err = triangle_a()
            .apply_group(&GroupElement::identity(2))
            .unwrap_err();
        assert!(matches!(err, Error::FlipLengthMismatch { .. }));
    }
}
