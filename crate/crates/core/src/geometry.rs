//! Exact planar geometry: rational points, primitive lattice directions, and
//! compact convex rational polygons in canonical counterclockwise form.
//!
//! Everything here is immutable and pure. A polygon is stored CCW starting at
//! its lexicographically smallest vertex with no three consecutive collinear
//! vertices, so structural equality is geometric equality.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::rat::{format_rat, Rat};

/// A point of the plane with exact rational coordinates.
///
/// `Ord` is lexicographic (x first, then y), matching the order required of
/// marked points.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Point {
    pub x: Rat,
    pub y: Rat,
}

impl Point {
    pub fn new(x: Rat, y: Rat) -> Self {
        Point { x, y }
    }
}

impl std::fmt::Debug for Point {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, {})", format_rat(&self.x), format_rat(&self.y))
    }
}

impl std::fmt::Display for Point {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, {})", format_rat(&self.x), format_rat(&self.y))
    }
}

/// An integer direction vector. Primitive values have coprime entries.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LatticeVector {
    pub dx: BigInt,
    pub dy: BigInt,
}

impl LatticeVector {
    pub fn new(dx: impl Into<BigInt>, dy: impl Into<BigInt>) -> Self {
        LatticeVector {
            dx: dx.into(),
            dy: dy.into(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.dx.is_zero() && self.dy.is_zero()
    }

    /// Image under the k-th power of the shear `T = [[1,0],[1,1]]`,
    /// i.e. `(dx, dy) -> (dx, dy + k dx)`.
    pub fn sheared(&self, k: i64) -> LatticeVector {
        LatticeVector {
            dx: self.dx.clone(),
            dy: &self.dy + BigInt::from(k) * &self.dx,
        }
    }

    pub fn neg(&self) -> LatticeVector {
        LatticeVector {
            dx: -&self.dx,
            dy: -&self.dy,
        }
    }
}

impl std::fmt::Debug for LatticeVector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, {})", self.dx, self.dy)
    }
}

/// Divides an integer vector by the gcd of its entries, keeping orientation.
pub fn primitive_direction(dx: BigInt, dy: BigInt) -> Result<LatticeVector> {
    if dx.is_zero() && dy.is_zero() {
        return Err(Error::ZeroDirection);
    }
    let g = dx.abs().gcd(&dy.abs());
    Ok(LatticeVector {
        dx: dx / &g,
        dy: dy / &g,
    })
}

/// Determinant `dx1*dy2 - dy1*dx2` of the 2x2 matrix with columns `v1, v2`.
pub fn det2(v1: &LatticeVector, v2: &LatticeVector) -> BigInt {
    &v1.dx * &v2.dy - &v1.dy * &v2.dx
}

/// 2D cross product of rational displacement vectors.
fn cross(ax: &Rat, ay: &Rat, bx: &Rat, by: &Rat) -> Rat {
    ax * by - ay * bx
}

/// Primitive lattice direction of the segment `a -> b` together with the
/// rational scale `s > 0` such that `b - a = s * direction`.
pub fn primitive_and_scale(a: &Point, b: &Point) -> Result<(LatticeVector, Rat)> {
    let dx = &b.x - &a.x;
    let dy = &b.y - &a.y;
    // Clear denominators so the direction is an honest integer vector.
    let l = dx.denom().lcm(dy.denom());
    let idx = (&dx * Rat::from_integer(l.clone())).to_integer();
    let idy = (&dy * Rat::from_integer(l.clone())).to_integer();
    let dir = primitive_direction(idx, idy)?;
    let scale = if !dir.dx.is_zero() {
        dx / Rat::from_integer(dir.dx.clone())
    } else {
        dy / Rat::from_integer(dir.dy.clone())
    };
    Ok((dir, scale))
}

/// Compact convex polygon with rational vertices in canonical CCW order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ConvexRationalPolygon {
    vertices: Vec<Point>,
}

impl std::fmt::Debug for ConvexRationalPolygon {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_list().entries(self.vertices.iter()).finish()
    }
}

impl ConvexRationalPolygon {
    /// Builds the canonical polygon from a list of points.
    ///
    /// The points are reordered CCW starting at the lexicographically smallest
    /// vertex, and points lying on the boundary between two others are
    /// dropped. Inputs with a point strictly inside the hull of the rest are
    /// rejected as non-convex, as are duplicates and degenerate hulls.
    pub fn from_vertices(points: Vec<Point>) -> Result<Self> {
        if points.len() < 3 {
            return Err(Error::TooFewVertices(points.len()));
        }
        let mut sorted = points.clone();
        sorted.sort();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::DuplicateVertices);
        }
        let hull = convex_hull(&sorted)?;
        // Any input point strictly inside the hull makes the input non-convex.
        for p in &points {
            if point_in_hull(&hull, p) == Position::Inside {
                return Err(Error::NonConvex(format_rat(&p.x), format_rat(&p.y)));
            }
        }
        Ok(ConvexRationalPolygon { vertices: hull })
    }

    /// Like `from_vertices` but tolerates exact duplicates, for internal use
    /// by transformations that may map several points together.
    pub(crate) fn from_points_dedup(points: Vec<Point>) -> Result<Self> {
        let mut sorted = points;
        sorted.sort();
        sorted.dedup();
        Self::from_vertices(sorted)
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn vertex(&self, i: usize) -> Result<&Point> {
        self.vertices.get(i).ok_or(Error::VertexIndexOutOfRange {
            index: i,
            len: self.vertices.len(),
        })
    }

    fn prev_index(&self, i: usize) -> usize {
        (i + self.vertices.len() - 1) % self.vertices.len()
    }

    fn next_index(&self, i: usize) -> usize {
        (i + 1) % self.vertices.len()
    }

    /// Primitive directions of the two edges emanating from vertex `i`,
    /// as (toward next CCW vertex, toward previous CCW vertex). For a strictly
    /// convex CCW polygon this ordering always has `det2(v1, v2) > 0`.
    pub fn edge_directions_at_vertex(&self, i: usize) -> Result<(LatticeVector, LatticeVector)> {
        let v = self.vertex(i)?;
        let n = &self.vertices[self.next_index(i)];
        let p = &self.vertices[self.prev_index(i)];
        let (to_next, _) = primitive_and_scale(v, n)?;
        let (to_prev, _) = primitive_and_scale(v, p)?;
        debug_assert!(det2(&to_next, &to_prev) > BigInt::zero());
        Ok((to_next, to_prev))
    }

    /// One `(inward normal, offset)` pair per edge, edge `i` running from
    /// vertex `i` to vertex `i+1`. The polygon is the intersection of the
    /// half-planes `x . u >= lambda`.
    pub fn inward_normals(&self) -> Vec<(LatticeVector, Rat)> {
        let m = self.vertices.len();
        let mut out = Vec::with_capacity(m);
        for i in 0..m {
            let a = &self.vertices[i];
            let b = &self.vertices[self.next_index(i)];
            let (dir, _) = primitive_and_scale(a, b).expect("distinct vertices");
            // Interior lies to the left of each CCW edge.
            let u = LatticeVector {
                dx: -dir.dy.clone(),
                dy: dir.dx.clone(),
            };
            let lambda = Rat::from_integer(u.dx.clone()) * &a.x
                + Rat::from_integer(u.dy.clone()) * &a.y;
            out.push((u, lambda));
        }
        out
    }

    /// Position of a point relative to the polygon.
    pub fn locate(&self, p: &Point) -> Position {
        point_in_hull(&self.vertices, p)
    }

    pub fn contains_strictly(&self, p: &Point) -> bool {
        self.locate(p) == Position::Inside
    }

    /// Index of `p` in the vertex list, if it is a vertex.
    pub fn vertex_index(&self, p: &Point) -> Option<usize> {
        self.vertices.iter().position(|v| v == p)
    }

    /// The y-range `[lo, hi]` cut out of the polygon by the vertical line at
    /// `x`, or `None` when the line misses the polygon.
    pub fn vertical_slice(&self, x: &Rat) -> Option<(Rat, Rat)> {
        let mut lo: Option<Rat> = None;
        let mut hi: Option<Rat> = None;
        let mut seen = false;
        let m = self.vertices.len();
        for i in 0..m {
            let a = &self.vertices[i];
            let b = &self.vertices[self.next_index(i)];
            let (xa, xb) = (&a.x, &b.x);
            let ys: Vec<Rat> = if xa == xb {
                if xa == x {
                    vec![a.y.clone(), b.y.clone()]
                } else {
                    vec![]
                }
            } else {
                let (lo_x, hi_x) = if xa < xb { (xa, xb) } else { (xb, xa) };
                if x < lo_x || x > hi_x {
                    vec![]
                } else {
                    let t = (x - xa) / (xb - xa);
                    vec![&a.y + t * (&b.y - &a.y)]
                }
            };
            for y in ys {
                seen = true;
                if lo.as_ref().map_or(true, |l| &y < l) {
                    lo = Some(y.clone());
                }
                if hi.as_ref().map_or(true, |h| &y > h) {
                    hi = Some(y);
                }
            }
        }
        if seen {
            Some((lo.unwrap(), hi.unwrap()))
        } else {
            None
        }
    }

    /// Minimum and maximum x over the vertices.
    pub fn x_range(&self) -> (Rat, Rat) {
        let mut lo = self.vertices[0].x.clone();
        let mut hi = lo.clone();
        for v in &self.vertices[1..] {
            if v.x < lo {
                lo = v.x.clone();
            }
            if v.x > hi {
                hi = v.x.clone();
            }
        }
        (lo, hi)
    }

    /// Bounding box `((xmin, ymin), (xmax, ymax))`.
    pub fn bounding_box(&self) -> (Point, Point) {
        let mut xmin = self.vertices[0].x.clone();
        let mut xmax = xmin.clone();
        let mut ymin = self.vertices[0].y.clone();
        let mut ymax = ymin.clone();
        for v in &self.vertices[1..] {
            if v.x < xmin {
                xmin = v.x.clone();
            }
            if v.x > xmax {
                xmax = v.x.clone();
            }
            if v.y < ymin {
                ymin = v.y.clone();
            }
            if v.y > ymax {
                ymax = v.y.clone();
            }
        }
        (Point::new(xmin, ymin), Point::new(xmax, ymax))
    }
}

/// Where a point sits relative to a convex polygon.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Position {
    Inside,
    Boundary,
    Outside,
}

/// Andrew's monotone chain on pre-sorted distinct points; strict turns only,
/// so collinear intermediate points are dropped. Returns CCW starting at the
/// lexicographically smallest point.
fn convex_hull(sorted: &[Point]) -> Result<Vec<Point>> {
    let n = sorted.len();
    let mut lower: Vec<&Point> = Vec::new();
    for p in sorted {
        while lower.len() >= 2 {
            let a = lower[lower.len() - 2];
            let b = lower[lower.len() - 1];
            let c = cross(&(&b.x - &a.x), &(&b.y - &a.y), &(&p.x - &a.x), &(&p.y - &a.y));
            if c <= Rat::zero() {
                lower.pop();
            } else {
                break;
            }
        }
        lower.push(p);
    }
    let mut upper: Vec<&Point> = Vec::new();
    for p in sorted.iter().rev() {
        while upper.len() >= 2 {
            let a = upper[upper.len() - 2];
            let b = upper[upper.len() - 1];
            let c = cross(&(&b.x - &a.x), &(&b.y - &a.y), &(&p.x - &a.x), &(&p.y - &a.y));
            if c <= Rat::zero() {
                upper.pop();
            } else {
                break;
            }
        }
        upper.push(p);
    }
    lower.pop();
    upper.pop();
    let mut hull: Vec<Point> = lower.into_iter().cloned().collect();
    hull.extend(upper.into_iter().cloned());
    if hull.len() < 3 {
        return Err(Error::DegeneratePolygon);
    }
    let _ = n;
    Ok(hull)
}

/// Exact point-vs-convex-CCW-polygon test.
fn point_in_hull(hull: &[Point], p: &Point) -> Position {
    let m = hull.len();
    let mut on_boundary = false;
    for i in 0..m {
        let a = &hull[i];
        let b = &hull[(i + 1) % m];
        let c = cross(&(&b.x - &a.x), &(&b.y - &a.y), &(&p.x - &a.x), &(&p.y - &a.y));
        if c < Rat::zero() {
            return Position::Outside;
        }
        if c.is_zero() {
            // On the edge line; confirm it is within the segment's box.
            let in_x = (&a.x <= &p.x && &p.x <= &b.x) || (&b.x <= &p.x && &p.x <= &a.x);
            let in_y = (&a.y <= &p.y && &p.y <= &b.y) || (&b.y <= &p.y && &p.y <= &a.y);
            if in_x && in_y {
                on_boundary = true;
            } else {
                return Position::Outside;
            }
        }
    }
    if on_boundary {
        Position::Boundary
    } else {
        Position::Inside
    }
}

/// Intersection point of the lines through `a` with direction `da` and
/// through `b` with direction `db`, if the directions are independent.
pub fn line_intersection(
    a: &Point,
    da: &LatticeVector,
    b: &Point,
    db: &LatticeVector,
) -> Option<Point> {
    let d = det2(da, db);
    if d.is_zero() {
        return None;
    }
    // Solve a + t*da = b + s*db for t.
    let rx = &b.x - &a.x;
    let ry = &b.y - &a.y;
    let t = (rx * Rat::from_integer(db.dy.clone()) - ry * Rat::from_integer(db.dx.clone()))
        / Rat::from_integer(d);
    Some(Point::new(
        &a.x + &t * Rat::from_integer(da.dx.clone()),
        &a.y + t * Rat::from_integer(da.dy.clone()),
    ))
}

/// True when `p`, `q`, `r` lie on one line.
pub fn collinear(p: &Point, q: &Point, r: &Point) -> bool {
    cross(&(&q.x - &p.x), &(&q.y - &p.y), &(&r.x - &p.x), &(&r.y - &p.y)).is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat, rat_int};

    fn pt(x: i64, y: i64) -> Point {
        Point::new(rat_int(x), rat_int(y))
    }

    #[test]
    fn primitive_direction_examples() {
        let v = primitive_direction(BigInt::from(2), BigInt::from(4)).unwrap();
        assert_eq!((v.dx, v.dy), (BigInt::from(1), BigInt::from(2)));
        let v = primitive_direction(BigInt::from(0), BigInt::from(-3)).unwrap();
        assert_eq!((v.dx, v.dy), (BigInt::from(0), BigInt::from(-1)));
        let v = primitive_direction(BigInt::from(-2), BigInt::from(-1)).unwrap();
        assert_eq!((v.dx, v.dy), (BigInt::from(-2), BigInt::from(-1)));
        assert!(matches!(
            primitive_direction(BigInt::zero(), BigInt::zero()),
            Err(Error::ZeroDirection)
        ));
    }

    #[test]
    fn det2_examples() {
        let e1 = LatticeVector::new(1, 0);
        let e2 = LatticeVector::new(0, 1);
        assert_eq!(det2(&e1, &e2), BigInt::from(1));
        let a = LatticeVector::new(1, -2);
        let b = LatticeVector::new(-1, -2);
        assert_eq!(det2(&a, &b), BigInt::from(-4));
        let c = LatticeVector::new(-2, -1);
        let d = LatticeVector::new(2, 1);
        assert_eq!(det2(&c, &d), BigInt::from(0));
        assert_eq!(det2(&a, &b), -det2(&b, &a));
    }

    #[test]
    fn square_canonical_form() {
        let p = ConvexRationalPolygon::from_vertices(vec![pt(1, 1), pt(0, 0), pt(1, 0), pt(0, 1)])
            .unwrap();
        assert_eq!(p.vertices(), &[pt(0, 0), pt(1, 0), pt(1, 1), pt(0, 1)]);
    }

    #[test]
    fn collinear_point_dropped() {
        let p = ConvexRationalPolygon::from_vertices(vec![pt(0, 0), pt(1, 0), pt(2, 0), pt(2, 2)])
            .unwrap();
        assert_eq!(p.vertices(), &[pt(0, 0), pt(2, 0), pt(2, 2)]);
    }

    #[test]
    fn non_delzant_triangle_builds() {
        let p = ConvexRationalPolygon::from_vertices(vec![pt(0, 0), pt(2, 1), pt(4, 0)]).unwrap();
        assert_eq!(p.len(), 3);
        assert_eq!(p.vertices()[0], pt(0, 0));
    }

    #[test]
    fn interior_point_rejected() {
        let err = ConvexRationalPolygon::from_vertices(vec![
            pt(0, 0),
            pt(4, 0),
            pt(2, 4),
            pt(2, 1),
        ])
        .unwrap_err();
        assert!(matches!(err, Error::NonConvex(_, _)));
    }

    #[test]
    fn duplicates_rejected() {
        let err =
            ConvexRationalPolygon::from_vertices(vec![pt(0, 0), pt(1, 0), pt(1, 1), pt(0, 0)])
                .unwrap_err();
        assert!(matches!(err, Error::DuplicateVertices));
    }

    #[test]
    fn segment_rejected() {
        let err = ConvexRationalPolygon::from_vertices(vec![pt(0, 0), pt(1, 1), pt(2, 2)])
            .unwrap_err();
        assert!(matches!(err, Error::DegeneratePolygon));
    }

    #[test]
    fn from_vertices_idempotent() {
        let p = ConvexRationalPolygon::from_vertices(vec![pt(0, 0), pt(2, 1), pt(4, 0)]).unwrap();
        let q = ConvexRationalPolygon::from_vertices(p.vertices().to_vec()).unwrap();
        assert_eq!(p, q);
    }

    #[test]
    fn unit_square_normals() {
        let p = ConvexRationalPolygon::from_vertices(vec![pt(0, 0), pt(1, 0), pt(1, 1), pt(0, 1)])
            .unwrap();
        let normals = p.inward_normals();
        let got: Vec<(i64, i64, String)> = normals
            .iter()
            .map(|(u, l)| {
                (
                    i64::try_from(&u.dx).unwrap(),
                    i64::try_from(&u.dy).unwrap(),
                    format_rat(l),
                )
            })
            .collect();
        assert_eq!(
            got,
            vec![
                (0, 1, "0".to_string()),
                (-1, 0, "-1".to_string()),
                (0, -1, "-1".to_string()),
                (1, 0, "0".to_string()),
            ]
        );
        // Each vertex satisfies x.u = lambda on both incident edges.
        let m = p.len();
        for i in 0..m {
            let v = p.vertex(i).unwrap();
            for e in [i, (i + m - 1) % m] {
                let (u, l) = &normals[e];
                let dot = Rat::from_integer(u.dx.clone()) * &v.x
                    + Rat::from_integer(u.dy.clone()) * &v.y;
                assert_eq!(&dot, l);
            }
        }
    }

    #[test]
    fn delzant_triangle_normals() {
        let p = ConvexRationalPolygon::from_vertices(vec![pt(0, 0), pt(1, 0), pt(0, 1)]).unwrap();
        let normals = p.inward_normals();
        let got: Vec<(i64, i64, String)> = normals
            .iter()
            .map(|(u, l)| {
                (
                    i64::try_from(&u.dx).unwrap(),
                    i64::try_from(&u.dy).unwrap(),
                    format_rat(l),
                )
            })
            .collect();
        assert_eq!(
            got,
            vec![
                (0, 1, "0".to_string()),
                (-1, -1, "-1".to_string()),
                (1, 0, "0".to_string()),
            ]
        );
    }

    #[test]
    fn upper_edge_normals_of_fig_counterexample() {
        let p = ConvexRationalPolygon::from_vertices(vec![pt(0, 0), pt(2, 1), pt(4, 0)]).unwrap();
        let pairs: Vec<(i64, i64)> = p
            .inward_normals()
            .iter()
            .map(|(u, _)| (i64::try_from(&u.dx).unwrap(), i64::try_from(&u.dy).unwrap()))
            .collect();
        assert!(pairs.contains(&(1, -2)));
        assert!(pairs.contains(&(-1, -2)));
    }

    #[test]
    fn edge_directions_examples() {
        let sq = ConvexRationalPolygon::from_vertices(vec![pt(0, 0), pt(1, 0), pt(1, 1), pt(0, 1)])
            .unwrap();
        let (v1, v2) = sq.edge_directions_at_vertex(0).unwrap();
        assert_eq!((v1.dx, v1.dy), (BigInt::from(1), BigInt::from(0)));
        assert_eq!((v2.dx, v2.dy), (BigInt::from(0), BigInt::from(1)));

        let tri = ConvexRationalPolygon::from_vertices(vec![pt(0, 0), pt(2, 1), pt(4, 0)]).unwrap();
        let i = tri.vertex_index(&pt(2, 1)).unwrap();
        let (v1, v2) = tri.edge_directions_at_vertex(i).unwrap();
        assert!(det2(&v1, &v2) > BigInt::zero());
        assert_eq!((v1.dx, v1.dy), (BigInt::from(-2), BigInt::from(-1)));
        assert_eq!((v2.dx, v2.dy), (BigInt::from(2), BigInt::from(-1)));

        let tri2 =
            ConvexRationalPolygon::from_vertices(vec![pt(0, 0), pt(1, 1), pt(3, 0)]).unwrap();
        let i = tri2.vertex_index(&pt(1, 1)).unwrap();
        let (v1, v2) = tri2.edge_directions_at_vertex(i).unwrap();
        assert_eq!(det2(&v1, &v2), BigInt::from(3));
        assert_eq!((v1.dx, v1.dy), (BigInt::from(-1), BigInt::from(-1)));
        assert_eq!((v2.dx, v2.dy), (BigInt::from(2), BigInt::from(-1)));
    }

    #[test]
    fn vertical_slice_and_location() {
        let tri = ConvexRationalPolygon::from_vertices(vec![pt(0, 0), pt(2, 1), pt(4, 0)]).unwrap();
        let (lo, hi) = tri.vertical_slice(&rat_int(2)).unwrap();
        assert_eq!(lo, rat_int(0));
        assert_eq!(hi, rat_int(1));
        assert!(tri.contains_strictly(&Point::new(rat_int(2), rat(1, 2))));
        assert_eq!(tri.locate(&pt(2, 1)), Position::Boundary);
        assert_eq!(tri.locate(&pt(2, 2)), Position::Outside);
        assert!(tri.vertical_slice(&rat_int(5)).is_none());
    }
}
