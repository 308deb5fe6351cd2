//! Delzant validation in 2D (from vertices) and in general dimension (from
//! half-spaces), plus the combinatorial output of the Delzant construction:
//! the facet-normal projection rho, a saturated integer basis of its kernel,
//! and the pairing of that basis with the offsets.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::geometry::{det2, ConvexRationalPolygon};
use crate::intmat::{
    elementary_divisors, int_rank, integer_kernel_basis, rational_rank, row_hermite_normal_form,
    solve_rational, IntMat,
};
use crate::rat::{format_rat, Rat};

/// One half-space `x . normal >= offset` with a primitive integer normal.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Facet {
    pub normal: Vec<BigInt>,
    pub offset: Rat,
}

/// A bounded full-dimensional intersection of half-spaces in R^n.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HalfspaceSystem {
    dimension: usize,
    facets: Vec<Facet>,
}

impl HalfspaceSystem {
    /// Builds a system, normalizing each normal to its primitive
    /// representative and rescaling the offset to match. Boundedness and
    /// dimension are verified.
    pub fn new(dimension: usize, facets: Vec<(Vec<BigInt>, Rat)>) -> Result<Self> {
        if dimension == 0 {
            return Err(Error::EmptyOrFlatPolytope);
        }
        let mut normed = Vec::with_capacity(facets.len());
        for (normal, offset) in facets {
            if normal.len() != dimension {
                return Err(Error::FacetDimensionMismatch {
                    expected: dimension,
                    got: normal.len(),
                });
            }
            let g = normal
                .iter()
                .fold(BigInt::zero(), |acc, x| acc.gcd(&x.abs()));
            if g.is_zero() {
                return Err(Error::ZeroDirection);
            }
            let normal: Vec<BigInt> = normal.into_iter().map(|x| x / &g).collect();
            let offset = offset / Rat::from_integer(g);
            normed.push(Facet { normal, offset });
        }
        for i in 0..normed.len() {
            for j in i + 1..normed.len() {
                if normed[i] == normed[j] {
                    return Err(Error::RepeatedFacet);
                }
            }
        }
        let sys = HalfspaceSystem {
            dimension,
            facets: normed,
        };
        if sys.facets.len() < dimension + 1 {
            return Err(Error::EmptyOrFlatPolytope);
        }
        sys.check_bounded()?;
        let verts = sys.enumerate_vertices();
        if verts.is_empty() {
            return Err(Error::EmptyOrFlatPolytope);
        }
        if sys.affine_rank(&verts) != dimension {
            return Err(Error::EmptyOrFlatPolytope);
        }
        Ok(sys)
    }

    /// Half-space form of a 2D polygon, edge order preserved.
    pub fn from_polygon(p: &ConvexRationalPolygon) -> Self {
        let facets = p
            .inward_normals()
            .into_iter()
            .map(|(u, l)| Facet {
                normal: vec![u.dx, u.dy],
                offset: l,
            })
            .collect();
        // A valid polygon is already bounded and full-dimensional.
        HalfspaceSystem {
            dimension: 2,
            facets,
        }
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn facets(&self) -> &[Facet] {
        &self.facets
    }

    /// The recession cone `{x : x . u_i >= 0}` must be trivial; a nonzero ray
    /// would lie on n-1 independent facet hyperplanes, so scan those.
    fn check_bounded(&self) -> Result<()> {
        let n = self.dimension;
        let normals_rat: Vec<Vec<Rat>> = self
            .facets
            .iter()
            .map(|f| f.normal.iter().cloned().map(Rat::from_integer).collect())
            .collect();
        if rational_rank(&normals_rat) < n {
            // The common nullspace of all normals is a recession line.
            return Err(Error::UnboundedPolytope);
        }
        if n == 1 {
            let pos = self.facets.iter().any(|f| f.normal[0].is_positive());
            let neg = self.facets.iter().any(|f| f.normal[0].is_negative());
            if pos && neg {
                return Ok(());
            }
            return Err(Error::UnboundedPolytope);
        }
        for subset in combinations(self.facets.len(), n - 1) {
            let m = IntMat::from_rows(
                subset
                    .iter()
                    .map(|&i| self.facets[i].normal.clone())
                    .collect(),
            );
            if int_rank(&m) != n - 1 {
                continue;
            }
            let kernel = integer_kernel_basis(&m);
            if kernel.len() != 1 {
                continue;
            }
            let ray = &kernel[0];
            for candidate in [ray.clone(), ray.iter().map(|x| -x).collect::<Vec<_>>()] {
                let feasible = self.facets.iter().all(|f| {
                    f.normal
                        .iter()
                        .zip(&candidate)
                        .map(|(a, b)| a * b)
                        .sum::<BigInt>()
                        >= BigInt::zero()
                });
                if feasible {
                    return Err(Error::UnboundedPolytope);
                }
            }
        }
        Ok(())
    }

    /// All vertices by brute force over n-subsets of facets, each with the
    /// full list of active facet indices.
    pub fn enumerate_vertices(&self) -> Vec<(Vec<Rat>, Vec<usize>)> {
        let n = self.dimension;
        let mut found: Vec<(Vec<Rat>, Vec<usize>)> = Vec::new();
        for subset in combinations(self.facets.len(), n) {
            let a: Vec<Vec<Rat>> = subset
                .iter()
                .map(|&i| {
                    self.facets[i]
                        .normal
                        .iter()
                        .cloned()
                        .map(Rat::from_integer)
                        .collect()
                })
                .collect();
            let b: Vec<Rat> = subset.iter().map(|&i| self.facets[i].offset.clone()).collect();
            let Some(x) = solve_rational(&a, &b) else {
                continue;
            };
            if !self.contains(&x) {
                continue;
            }
            if found.iter().any(|(v, _)| v == &x) {
                continue;
            }
            let active: Vec<usize> = self
                .facets
                .iter()
                .enumerate()
                .filter(|(_, f)| Self::dot(&f.normal, &x) == f.offset)
                .map(|(i, _)| i)
                .collect();
            found.push((x, active));
        }
        found.sort_by(|a, b| a.0.cmp(&b.0));
        found
    }

    fn dot(normal: &[BigInt], x: &[Rat]) -> Rat {
        normal
            .iter()
            .zip(x)
            .map(|(a, b)| Rat::from_integer(a.clone()) * b)
            .fold(Rat::zero(), |acc, t| acc + t)
    }

    fn contains(&self, x: &[Rat]) -> bool {
        self.facets
            .iter()
            .all(|f| Self::dot(&f.normal, x) >= f.offset)
    }

    fn affine_rank(&self, verts: &[(Vec<Rat>, Vec<usize>)]) -> usize {
        if verts.len() < 2 {
            return 0;
        }
        let base = &verts[0].0;
        let diffs: Vec<Vec<Rat>> = verts[1..]
            .iter()
            .map(|(v, _)| v.iter().zip(base).map(|(a, b)| a - b).collect())
            .collect();
        rational_rank(&diffs)
    }
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.clone());
        // Advance the last index that still has room.
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if idx[i] != i + n - k {
                break;
            }
            if i == 0 {
                return out;
            }
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Why a vertex fails the Delzant condition.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum FailureReason {
    NotSimple { active_facets: usize },
    NotSmooth,
    NotRational,
}

impl std::fmt::Display for FailureReason {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            FailureReason::NotSimple { active_facets } => {
                write!(f, "not simple ({active_facets} active facets)")
            }
            FailureReason::NotSmooth => write!(f, "not smooth"),
            FailureReason::NotRational => write!(f, "not rational"),
        }
    }
}

/// One offending vertex with the witness determinant when applicable.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct VertexFailure {
    pub vertex: Vec<Rat>,
    pub reason: FailureReason,
    pub witness: Option<BigInt>,
}

impl std::fmt::Display for VertexFailure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let coords: Vec<String> = self.vertex.iter().map(format_rat).collect();
        write!(f, "vertex ({}) {}", coords.join(", "), self.reason)?;
        if let Some(w) = &self.witness {
            write!(f, ", determinant {w}")?;
        }
        Ok(())
    }
}

/// Verdict of a Delzant check; `is_delzant` iff `failures` is empty.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DelzantVerdict {
    pub failures: Vec<VertexFailure>,
    pub vertex_count: usize,
}

impl DelzantVerdict {
    pub fn is_delzant(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks every polygon vertex for the 2D Delzant (smoothness) condition:
/// the positively ordered primitive edge directions must have determinant 1.
pub fn is_delzant_2d(p: &ConvexRationalPolygon) -> DelzantVerdict {
    let mut failures = Vec::new();
    for i in 0..p.len() {
        let (v1, v2) = p
            .edge_directions_at_vertex(i)
            .expect("index in range for valid polygon");
        let d = det2(&v1, &v2);
        if d != BigInt::from(1) {
            let v = p.vertex(i).unwrap();
            failures.push(VertexFailure {
                vertex: vec![v.x.clone(), v.y.clone()],
                reason: FailureReason::NotSmooth,
                witness: Some(d),
            });
        }
    }
    DelzantVerdict {
        failures,
        vertex_count: p.len(),
    }
}

/// Checks the general-dimension Delzant condition on a half-space system:
/// exactly n facets active at each vertex, with unimodular normals.
pub fn is_delzant_nd(h: &HalfspaceSystem) -> DelzantVerdict {
    let n = h.dimension();
    let mut failures = Vec::new();
    let verts = h.enumerate_vertices();
    for (vertex, active) in &verts {
        if active.len() != n {
            failures.push(VertexFailure {
                vertex: vertex.clone(),
                reason: FailureReason::NotSimple {
                    active_facets: active.len(),
                },
                witness: None,
            });
            continue;
        }
        let m = IntMat::from_rows(
            active
                .iter()
                .map(|&i| h.facets()[i].normal.clone())
                .collect(),
        );
        let d = int_det(&m);
        if d.abs() != BigInt::from(1) {
            failures.push(VertexFailure {
                vertex: vertex.clone(),
                reason: FailureReason::NotSmooth,
                witness: Some(d),
            });
        }
    }
    DelzantVerdict {
        failures,
        vertex_count: verts.len(),
    }
}

/// Determinant by fraction-free rational elimination.
fn int_det(m: &IntMat) -> BigInt {
    let n = m.rows;
    assert_eq!(n, m.cols);
    let mut a: Vec<Vec<Rat>> = (0..n)
        .map(|i| m.row(i).iter().cloned().map(Rat::from_integer).collect())
        .collect();
    let mut det = Rat::from_integer(BigInt::from(1));
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&i| !a[i][col].is_zero()) else {
            return BigInt::zero();
        };
        if pivot != col {
            a.swap(col, pivot);
            det = -det;
        }
        det *= a[col][col].clone();
        let p = a[col][col].clone();
        for i in col + 1..n {
            if a[i][col].is_zero() {
                continue;
            }
            let f = &a[i][col] / &p;
            for j in col..n {
                let sub = &f * &a[col][j];
                a[i][j] = &a[i][j] - sub;
            }
        }
    }
    debug_assert!(det.is_integer());
    det.to_integer()
}

/// Output of the Delzant construction on a half-space presentation.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DelzantConstructionData {
    /// Facet count.
    pub d: usize,
    /// Ambient (torus) dimension.
    pub n: usize,
    /// n x d integer matrix whose columns are the facet normals.
    pub rho: IntMat,
    /// Saturated basis of ker(rho), one vector of length d per entry,
    /// in Hermite-canonical form.
    pub kernel_basis: Vec<Vec<BigInt>>,
    /// Pairing of each kernel basis vector with the offsets.
    pub level: Vec<Rat>,
    /// The offsets as given.
    pub lambda: Vec<Rat>,
}

/// Runs the combinatorial half of the Delzant construction. The input must be
/// Delzant with a minimal facet list; a redundant facet is reported rather
/// than dropped because the facet count enters the construction.
pub fn delzant_construct(h: &HalfspaceSystem) -> Result<DelzantConstructionData> {
    let n = h.dimension();
    let d = h.facets().len();
    let verts = h.enumerate_vertices();

    // Facet i must support a genuine facet: its active vertices span an
    // affine (n-1)-plane.
    for (i, _f) in h.facets().iter().enumerate() {
        let on_facet: Vec<&Vec<Rat>> = verts
            .iter()
            .filter(|(_, active)| active.contains(&i))
            .map(|(v, _)| v)
            .collect();
        let enough = if n == 1 {
            !on_facet.is_empty()
        } else if on_facet.len() < 2 {
            false
        } else {
            let base = on_facet[0];
            let diffs: Vec<Vec<Rat>> = on_facet[1..]
                .iter()
                .map(|v| v.iter().zip(base).map(|(a, b)| a - b).collect())
                .collect();
            rational_rank(&diffs) == n - 1
        };
        if !enough {
            return Err(Error::RedundantFacet(i));
        }
    }

    let verdict = is_delzant_nd(h);
    if !verdict.is_delzant() {
        let msg = verdict
            .failures
            .iter()
            .map(|f| f.to_string())
            .collect::<Vec<_>>()
            .join("; ");
        return Err(Error::NotDelzant(msg));
    }

    let mut rho = IntMat::zero(n, d);
    for (j, f) in h.facets().iter().enumerate() {
        for i in 0..n {
            rho[(i, j)] = f.normal[i].clone();
        }
    }
    let raw = integer_kernel_basis(&rho);
    let hnf = row_hermite_normal_form(&IntMat::from_rows(raw));
    let kernel_basis: Vec<Vec<BigInt>> = (0..hnf.rows).map(|i| hnf.row(i).to_vec()).collect();

    debug_assert!({
        let b = IntMat::from_rows(kernel_basis.clone()).transpose();
        rho.mul(&b).is_zero()
    });
    debug_assert!(elementary_divisors(&IntMat::from_rows(kernel_basis.clone()))
        .iter()
        .all(|x| x == &BigInt::from(1)));

    let lambda: Vec<Rat> = h.facets().iter().map(|f| f.offset.clone()).collect();
    let level: Vec<Rat> = kernel_basis
        .iter()
        .map(|row| {
            row.iter()
                .zip(&lambda)
                .map(|(a, l)| Rat::from_integer(a.clone()) * l)
                .fold(Rat::zero(), |acc, t| acc + t)
        })
        .collect();

    Ok(DelzantConstructionData {
        d,
        n,
        rho,
        kernel_basis,
        level,
        lambda,
    })
}
