//! Truncated bivariate formal power series over the rationals.
//!
//! A series carries its truncation order K and only coefficients with
//! `i + j <= K`; all identities in the label algebra are equalities
//! "at order K". Coefficients are stored sparsely and zeros are never kept,
//! so structural equality is coefficient-wise equality.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::rat::{format_rat, rat_int, Rat};

/// Default truncation order when a document or caller does not choose one.
pub const DEFAULT_ORDER: usize = 6;

/// Polynomial truncation of an element of R[[X, Y]].
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TruncatedSeries {
    order: usize,
    coeffs: BTreeMap<(usize, usize), Rat>,
}

impl TruncatedSeries {
    pub fn zero(order: usize) -> Self {
        TruncatedSeries {
            order,
            coeffs: BTreeMap::new(),
        }
    }

    /// The series `Y`.
    pub fn y(order: usize) -> Self {
        Self::zero(order).with_coeff(0, 1, rat_int(1))
    }

    /// The series `X`.
    pub fn x(order: usize) -> Self {
        Self::zero(order).with_coeff(1, 0, rat_int(1))
    }

    pub fn constant(order: usize, c: Rat) -> Self {
        Self::zero(order).with_coeff(0, 0, c)
    }

    /// Builds from `(i, j, coefficient)` triples; terms beyond the truncation
    /// order are dropped.
    pub fn from_terms(
        order: usize,
        terms: impl IntoIterator<Item = (usize, usize, Rat)>,
    ) -> Self {
        let mut s = Self::zero(order);
        for (i, j, c) in terms {
            let cur = s.coeff(i, j) + c;
            s.set_coeff(i, j, cur);
        }
        s
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeff(&self, i: usize, j: usize) -> Rat {
        self.coeffs.get(&(i, j)).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn set_coeff(&mut self, i: usize, j: usize, c: Rat) {
        if i + j > self.order || c.is_zero() {
            self.coeffs.remove(&(i, j));
        } else {
            self.coeffs.insert((i, j), c);
        }
    }

    pub fn with_coeff(mut self, i: usize, j: usize, c: Rat) -> Self {
        self.set_coeff(i, j, c);
        self
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, usize, &Rat)> {
        self.coeffs.iter().map(|(&(i, j), c)| (i, j, c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn constant_term(&self) -> Rat {
        self.coeff(0, 0)
    }

    pub fn has_zero_constant(&self) -> bool {
        self.constant_term().is_zero()
    }

    /// Membership in R_+[[X,Y]]: zero constant term, positive coefficient
    /// of the linear Y term.
    pub fn is_positive_kind(&self) -> bool {
        self.has_zero_constant() && self.coeff(0, 1) > Rat::zero()
    }

    pub fn add(&self, other: &TruncatedSeries) -> Result<TruncatedSeries> {
        self.check_order(other)?;
        let mut out = self.clone();
        for (i, j, c) in other.terms() {
            let cur = out.coeff(i, j) + c;
            out.set_coeff(i, j, cur);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &TruncatedSeries) -> Result<TruncatedSeries> {
        self.check_order(other)?;
        let mut out = self.clone();
        for (i, j, c) in other.terms() {
            let cur = out.coeff(i, j) - c;
            out.set_coeff(i, j, cur);
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rat) -> TruncatedSeries {
        let mut out = TruncatedSeries::zero(self.order);
        for (i, j, v) in self.terms() {
            out.set_coeff(i, j, v * c);
        }
        out
    }

    /// Truncated product.
    pub fn mul(&self, other: &TruncatedSeries) -> Result<TruncatedSeries> {
        self.check_order(other)?;
        let mut out = TruncatedSeries::zero(self.order);
        for (i1, j1, c1) in self.terms() {
            for (i2, j2, c2) in other.terms() {
                let (i, j) = (i1 + i2, j1 + j2);
                if i + j > self.order {
                    continue;
                }
                let cur = out.coeff(i, j) + c1 * c2;
                out.set_coeff(i, j, cur);
            }
        }
        Ok(out)
    }

    /// Adds `c*X + d` in place of building scratch series.
    pub fn add_linear_x(&self, c: &Rat, d: &Rat) -> TruncatedSeries {
        let mut out = self.clone();
        out.set_coeff(1, 0, out.coeff(1, 0) + c);
        out.set_coeff(0, 0, out.coeff(0, 0) + d);
        out
    }

    fn check_order(&self, other: &TruncatedSeries) -> Result<()> {
        if self.order != other.order {
            return Err(Error::OrderMismatch(self.order, other.order));
        }
        Ok(())
    }

    /// Lowest total degree of a nonzero term, or `None` for the zero series.
    fn valuation(&self) -> Option<usize> {
        self.terms().map(|(i, j, _)| i + j).min()
    }
}

impl std::fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, j, c) in self.terms() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{}", format_rat(c))?;
            if i > 0 {
                write!(f, "*X^{i}")?;
            }
            if j > 0 {
                write!(f, "*Y^{j}")?;
            }
        }
        Ok(())
    }
}

/// Substitution `f(X, g(X, Y))` truncated at the common order. The inner
/// series must have zero constant term so the substitution is well defined
/// on truncations.
pub fn compose_series(f: &TruncatedSeries, g: &TruncatedSeries) -> Result<TruncatedSeries> {
    if f.order() != g.order() {
        return Err(Error::OrderMismatch(f.order(), g.order()));
    }
    if !g.has_zero_constant() {
        return Err(Error::NonzeroConstantTerm);
    }
    let k = f.order();
    // Powers of g up to Y-degree K; g has valuation >= 1 so g^j has
    // valuation >= j and the list is finite.
    let mut g_pows: Vec<TruncatedSeries> = Vec::with_capacity(k + 1);
    g_pows.push(TruncatedSeries::constant(k, rat_int(1)));
    for j in 1..=k {
        let next = g_pows[j - 1].mul(g)?;
        g_pows.push(next);
    }
    let mut out = TruncatedSeries::zero(k);
    for (i, j, c) in f.terms() {
        // Term c * X^i * g^j.
        for (pi, pj, pc) in g_pows[j].terms() {
            let (ti, tj) = (i + pi, pj);
            if ti + tj > k {
                continue;
            }
            let cur = out.coeff(ti, tj) + c * pc;
            out.set_coeff(ti, tj, cur);
        }
    }
    Ok(out)
}

/// Compositional inverse in the Y slot: the unique `h` in R_+[[X,Y]] with
/// `g(X, h(X, Y)) = Y = h(X, g(X, Y))` at order K. Computed by fixed-point
/// iteration `h <- (Y - (g - cY)(X, h)) / c`, which gains one degree of
/// accuracy per round.
pub fn invert_in_y(g: &TruncatedSeries) -> Result<TruncatedSeries> {
    if !g.has_zero_constant() {
        return Err(Error::NonzeroConstantTerm);
    }
    let c = g.coeff(0, 1);
    if c <= Rat::zero() {
        return Err(Error::NonpositiveLinearCoefficient);
    }
    let k = g.order();
    let y = TruncatedSeries::y(k);
    // m = g - c*Y: every term has (i, j) != (0, 1).
    let m = g.sub(&y.scale(&c))?;
    let c_inv = rat_int(1) / &c;
    let mut h = y.scale(&c_inv);
    for _ in 0..=k {
        let my = compose_series(&m, &h)?;
        h = y.sub(&my)?.scale(&c_inv);
    }
    debug_assert!(compose_series(g, &h)?.sub(&y)?.valuation().map_or(true, |v| v > k));
    let gh = compose_series(g, &h)?;
    let hg = compose_series(&h, g)?;
    if gh != y || hg != y {
        return Err(Error::InvalidTuple(
            "inversion failed to verify; non-invertible input".into(),
        ));
    }
    Ok(h)
}
