//! Taylor-series and twisting-index labels.
//!
//! In the simple case each mark carries a series class (zero constant term,
//! linear X coefficient pinned to [0, 1)) plus an integer twisting index; the
//! two combine into a single series. Coincident marks are labeled jointly by
//! a pinch tuple `(s_mu, g_{mu,nu})` closed under composition relations.
//!
//! Unit convention: every coefficient, and the mark heights they are matched
//! against, is stored in units of 2*pi. The quotient by 2*pi*X*Z then acts by
//! integer shifts of the (1,0) coefficient and no transcendental constant
//! ever appears.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::geometry::Point;
use crate::rat::{rat_floor, rat_int, Rat};
use crate::semitoric::{GroupElement, SemitoricRepresentative};
use crate::series::{compose_series, invert_in_y, TruncatedSeries};

/// Per-mark label in the simple case: a Taylor class and a twisting index.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SimpleLabel {
    series_class: TruncatedSeries,
    kappa: i64,
}

impl SimpleLabel {
    /// Requires zero constant term and linear X coefficient in [0, 1).
    pub fn new(series_class: TruncatedSeries, kappa: i64) -> Result<Self> {
        if !series_class.has_zero_constant() {
            return Err(Error::InvalidLabels(
                "Taylor class must have zero constant term".into(),
            ));
        }
        let c10 = series_class.coeff(1, 0);
        if c10 < Rat::zero() || c10 >= rat_int(1) {
            return Err(Error::InvalidLabels(
                "class representative needs X coefficient in [0, 1)".into(),
            ));
        }
        Ok(SimpleLabel {
            series_class,
            kappa,
        })
    }

    pub fn series_class(&self) -> &TruncatedSeries {
        &self.series_class
    }

    pub fn kappa(&self) -> i64 {
        self.kappa
    }

    pub fn order(&self) -> usize {
        self.series_class.order()
    }

    /// Packages class and index into one series: class + kappa * X.
    pub fn combined(&self) -> TruncatedSeries {
        self.series_class
            .add_linear_x(&rat_int(self.kappa), &Rat::zero())
    }

    /// Splits a combined series back into (class, kappa); inverse of
    /// [`combined`](Self::combined).
    pub fn from_combined(series: TruncatedSeries) -> Result<Self> {
        if !series.has_zero_constant() {
            return Err(Error::InvalidLabels(
                "combined label must have zero constant term".into(),
            ));
        }
        let c10 = series.coeff(1, 0);
        let kappa_big = rat_floor(&c10);
        let kappa = i64::try_from(&kappa_big)
            .map_err(|_| Error::InvalidLabels("twisting index out of range".into()))?;
        let class = series.add_linear_x(&-Rat::from_integer(kappa_big), &Rat::zero());
        SimpleLabel::new(class, kappa)
    }
}

/// Partial sums `n + sum_{i<=k} u_i` with `u_i = eps_i (1 - eps'_i) / 2`.
fn twist_shift(shear: i64, eps: &[i8], flips: &[i8], k: usize) -> i64 {
    let mut total = shear;
    for i in 0..=k {
        total += i64::from(eps[i]) * i64::from(1 - flips[i]) / 2;
    }
    total
}

/// Action of a group element on the twisting indices:
/// `kappa_k -> kappa_k + n + sum_{i<=k} u_i`.
pub fn act_on_twisting(
    shear: i64,
    eps: &[i8],
    flips: &[i8],
    kappas: &[i64],
) -> Result<Vec<i64>> {
    if eps.len() != flips.len() || eps.len() != kappas.len() {
        return Err(Error::FlipLengthMismatch {
            got: flips.len(),
            want: kappas.len(),
        });
    }
    Ok(kappas
        .iter()
        .enumerate()
        .map(|(k, kappa)| kappa + twist_shift(shear, eps, flips, k))
        .collect())
}

/// Action on a combined series label: the same shift lands on the (1,0)
/// coefficient.
pub fn act_on_series_label(
    shear: i64,
    eps: &[i8],
    flips: &[i8],
    k: usize,
    series: &TruncatedSeries,
) -> Result<TruncatedSeries> {
    if eps.len() != flips.len() || k >= eps.len() {
        return Err(Error::FlipLengthMismatch {
            got: flips.len(),
            want: eps.len(),
        });
    }
    let shift = twist_shift(shear, eps, flips, k);
    Ok(series.add_linear_x(&rat_int(shift), &Rat::zero()))
}

/// The joint label of a multiply-pinched fiber: series `s_mu` and transition
/// series `g_{mu,nu}` for `mu, nu` in `Z_n`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PinchTuple {
    s: Vec<TruncatedSeries>,
    g: Vec<Vec<TruncatedSeries>>,
}

/// One broken relation found by [`verify_tuple`].
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum TupleViolation {
    /// `g_{mu,nu}` is not in R_+[[X,Y]].
    NotPositive { mu: usize, nu: usize },
    /// `g_{mu,mu} != Y`.
    DiagonalNotY { mu: usize },
    /// `s_mu != s_nu(X, g_{mu,nu})`.
    SeriesRelation { mu: usize, nu: usize },
    /// `g_{mu,sigma} != g_{nu,sigma}(X, g_{mu,nu})`.
    Cocycle { mu: usize, nu: usize, sigma: usize },
}

impl std::fmt::Display for TupleViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            TupleViolation::NotPositive { mu, nu } => {
                write!(f, "g[{mu},{nu}] is not in R_+[[X,Y]]")
            }
            TupleViolation::DiagonalNotY { mu } => write!(f, "g[{mu},{mu}] != Y"),
            TupleViolation::SeriesRelation { mu, nu } => {
                write!(f, "s[{mu}] != s[{nu}](X, g[{mu},{nu}])")
            }
            TupleViolation::Cocycle { mu, nu, sigma } => {
                write!(f, "g[{mu},{sigma}] != g[{nu},{sigma}](X, g[{mu},{nu}])")
            }
        }
    }
}

impl PinchTuple {
    /// Builds from explicit components; relations are checked.
    pub fn new(s: Vec<TruncatedSeries>, g: Vec<Vec<TruncatedSeries>>) -> Result<Self> {
        let n = s.len();
        if n == 0 {
            return Err(Error::InvalidTuple("empty tuple".into()));
        }
        if g.len() != n || g.iter().any(|row| row.len() != n) {
            return Err(Error::InvalidTuple("transition matrix is not n x n".into()));
        }
        let order = s[0].order();
        if s.iter().any(|t| t.order() != order)
            || g.iter().flatten().any(|t| t.order() != order)
        {
            return Err(Error::OrderMismatch(order, 0));
        }
        let tuple = PinchTuple { s, g };
        let violations = verify_tuple(&tuple);
        if let Some(v) = violations.first() {
            return Err(Error::InvalidTuple(v.to_string()));
        }
        Ok(tuple)
    }

    /// Constructs without verification, for data that is about to be checked.
    pub fn new_unchecked(s: Vec<TruncatedSeries>, g: Vec<Vec<TruncatedSeries>>) -> Self {
        PinchTuple { s, g }
    }

    pub fn pinch_count(&self) -> usize {
        self.s.len()
    }

    pub fn order(&self) -> usize {
        self.s[0].order()
    }

    pub fn s(&self, mu: usize) -> &TruncatedSeries {
        &self.s[mu]
    }

    pub fn series(&self) -> &[TruncatedSeries] {
        &self.s
    }

    pub fn g(&self, mu: usize, nu: usize) -> &TruncatedSeries {
        &self.g[mu][nu]
    }

    /// Cyclic index shift by `r`: entry `mu` of the result is entry `mu + r`
    /// of the original.
    pub fn rotated(&self, r: usize) -> PinchTuple {
        let n = self.pinch_count();
        let s = (0..n).map(|mu| self.s[(mu + r) % n].clone()).collect();
        let g = (0..n)
            .map(|mu| {
                (0..n)
                    .map(|nu| self.g[(mu + r) % n][(nu + r) % n].clone())
                    .collect()
            })
            .collect();
        PinchTuple { s, g }
    }

    /// Equality up to cyclic permutation of the pinch indices.
    pub fn cyclic_eq(&self, other: &PinchTuple) -> bool {
        if self.pinch_count() != other.pinch_count() {
            return false;
        }
        (0..self.pinch_count()).any(|r| &self.rotated(r) == other)
    }
}

/// Fills in the whole tuple from `s_0` and the consecutive transitions
/// `g_{mu,mu+1}`; by the composition relations this extension is unique.
pub fn extend_tuple(s0: TruncatedSeries, chain: &[TruncatedSeries]) -> Result<PinchTuple> {
    let n = chain.len() + 1;
    let order = s0.order();
    for (i, c) in chain.iter().enumerate() {
        if c.order() != order {
            return Err(Error::OrderMismatch(order, c.order()));
        }
        if !c.is_positive_kind() {
            return Err(Error::InvalidTuple(format!(
                "chain entry {i} is not in R_+[[X,Y]]"
            )));
        }
    }
    // g0[mu] = g_{0,mu}: compose down the chain, g_{0,mu} = g_{1,mu} o (X, g_{0,1}).
    let y = TruncatedSeries::y(order);
    let mut from_zero: Vec<TruncatedSeries> = vec![y.clone()];
    for mu in 1..n {
        // g_{0,mu} = g_{mu-1,mu} after substituting g_{0,mu-1}:
        // walking the relation g_{0,mu} = g_{mu-1,mu}(X, ... ) unwinds to a
        // right-to-left composition; build it incrementally instead.
        let prev = &from_zero[mu - 1];
        let step = &chain[mu - 1];
        // g_{0,mu}(X,Y) = step(X, prev(X,Y)) by the cocycle with (0, mu-1, mu).
        from_zero.push(compose_series(step, prev)?);
    }
    let to_zero: Vec<TruncatedSeries> = from_zero
        .iter()
        .map(invert_in_y)
        .collect::<Result<_>>()?;
    let mut g: Vec<Vec<TruncatedSeries>> = vec![vec![y.clone(); n]; n];
    for mu in 0..n {
        for nu in 0..n {
            // g_{mu,nu} = g_{0,nu} o (X, g_{mu,0}).
            g[mu][nu] = compose_series(&from_zero[nu], &to_zero[mu])?;
        }
    }
    let mut s = Vec::with_capacity(n);
    s.push(s0.clone());
    for mu in 1..n {
        // s_mu = s_0 o (X, g_{mu,0}).
        s.push(compose_series(&s0, &to_zero[mu])?);
    }
    let tuple = PinchTuple { s, g };
    let violations = verify_tuple(&tuple);
    if let Some(v) = violations.first() {
        return Err(Error::InvalidTuple(format!(
            "extension failed self-check: {v}"
        )));
    }
    Ok(tuple)
}

/// Checks every defining relation of a pinch tuple coefficient-wise at its
/// truncation order.
pub fn verify_tuple(t: &PinchTuple) -> Vec<TupleViolation> {
    let n = t.pinch_count();
    let mut out = Vec::new();
    let y = TruncatedSeries::y(t.order());
    for mu in 0..n {
        for nu in 0..n {
            if !t.g[mu][nu].is_positive_kind() {
                out.push(TupleViolation::NotPositive { mu, nu });
            }
        }
    }
    for mu in 0..n {
        if t.g[mu][mu] != y {
            out.push(TupleViolation::DiagonalNotY { mu });
        }
    }
    for mu in 0..n {
        for nu in 0..n {
            let ok = compose_series(&t.s[nu], &t.g[mu][nu])
                .map(|c| c == t.s[mu])
                .unwrap_or(false);
            if !ok {
                out.push(TupleViolation::SeriesRelation { mu, nu });
            }
        }
    }
    for mu in 0..n {
        for nu in 0..n {
            for sigma in 0..n {
                let ok = compose_series(&t.g[nu][sigma], &t.g[mu][nu])
                    .map(|c| c == t.g[mu][sigma])
                    .unwrap_or(false);
                if !ok {
                    out.push(TupleViolation::Cocycle { mu, nu, sigma });
                }
            }
        }
    }
    out
}

/// Action of `(T^n + (0,b), flips)` on the tuple at the distinct value `j0`:
/// every `s_mu` is shifted by `(X + a_j0) n + b + sum_{j in S} (X + a_j - a_j0)`
/// where `S = {j : flip_j = -1 and a_j <= a_j0}`; the transition series are
/// untouched. Flips here are indexed per distinct marked value.
pub fn act_on_tuple(
    shear: i64,
    translate: &Rat,
    values_x: &[Rat],
    j0: usize,
    tuple: &PinchTuple,
    flips: &[i8],
) -> Result<PinchTuple> {
    if flips.len() != values_x.len() {
        return Err(Error::FlipLengthMismatch {
            got: flips.len(),
            want: values_x.len(),
        });
    }
    if j0 >= values_x.len() {
        return Err(Error::MarkIndexOutOfRange {
            index: j0,
            len: values_x.len(),
        });
    }
    let a0 = &values_x[j0];
    let n_rat = rat_int(shear);
    let mut x_shift = n_rat.clone();
    let mut const_shift = &n_rat * a0 + translate;
    for (j, aj) in values_x.iter().enumerate() {
        if flips[j] == -1 && aj <= a0 {
            x_shift += rat_int(1);
            const_shift += aj - a0;
        }
    }
    let s = tuple
        .s
        .iter()
        .map(|t| t.add_linear_x(&x_shift, &const_shift))
        .collect();
    Ok(PinchTuple {
        s,
        g: tuple.g.clone(),
    })
}

/// Labels attached to a representative: one simple label per mark when the
/// marks are pairwise distinct, otherwise one pinch tuple per distinct
/// marked value.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Labels {
    Simple(Vec<SimpleLabel>),
    Pinch(Vec<PinchTuple>),
}

/// A representative together with its labels.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LabeledPolygon {
    representative: SemitoricRepresentative,
    labels: Labels,
}

/// Distinct marked values of a representative in lexicographic order, each
/// with its multiplicity.
pub fn distinct_values(rep: &SemitoricRepresentative) -> Vec<(Point, usize)> {
    let mut out: Vec<(Point, usize)> = Vec::new();
    for m in rep.marks() {
        match out.last_mut() {
            Some((p, count)) if p == &m.point => *count += 1,
            _ => out.push((m.point.clone(), 1)),
        }
    }
    out
}

impl LabeledPolygon {
    pub fn new(representative: SemitoricRepresentative, labels: Labels) -> Result<Self> {
        let lp = LabeledPolygon {
            representative,
            labels,
        };
        lp.validate()?;
        Ok(lp)
    }

    pub fn representative(&self) -> &SemitoricRepresentative {
        &self.representative
    }

    pub fn labels(&self) -> &Labels {
        &self.labels
    }

    /// Structural validity: the representative passes validation, the label
    /// shape matches the marks, and for pinch labels the constant term of
    /// every series equals the height of its marked value.
    pub fn validate(&self) -> Result<()> {
        let report = self.representative.validate();
        if let Some(v) = report.violations.first() {
            return Err(Error::InvalidRepresentative(v.to_string()));
        }
        match &self.labels {
            Labels::Simple(labels) => {
                let marks = self.representative.marks();
                if labels.len() != marks.len() {
                    return Err(Error::InvalidLabels(format!(
                        "{} labels for {} marks",
                        labels.len(),
                        marks.len()
                    )));
                }
                for w in marks.windows(2) {
                    if w[0].point == w[1].point {
                        return Err(Error::InvalidLabels(
                            "simple labels require pairwise distinct marks".into(),
                        ));
                    }
                }
                if let Some(first) = labels.first() {
                    if labels.iter().any(|l| l.order() != first.order()) {
                        return Err(Error::OrderMismatch(first.order(), 0));
                    }
                }
            }
            Labels::Pinch(tuples) => {
                let values = distinct_values(&self.representative);
                if tuples.len() != values.len() {
                    return Err(Error::InvalidLabels(format!(
                        "{} tuples for {} distinct marked values",
                        tuples.len(),
                        values.len()
                    )));
                }
                for (t, (p, mult)) in tuples.iter().zip(&values) {
                    if t.pinch_count() != *mult {
                        return Err(Error::InvalidLabels(format!(
                            "tuple at {p} has {} series for multiplicity {mult}",
                            t.pinch_count()
                        )));
                    }
                    let violations = verify_tuple(t);
                    if let Some(v) = violations.first() {
                        return Err(Error::InvalidTuple(v.to_string()));
                    }
                    for mu in 0..t.pinch_count() {
                        if t.s(mu).constant_term() != p.y {
                            return Err(Error::InvalidLabels(format!(
                                "constant term of s[{mu}] at {p} must equal the mark height"
                            )));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// Applies a group element to the representative and transports the
    /// labels along.
    pub fn apply_group(&self, g: &GroupElement) -> Result<LabeledPolygon> {
        let rep = self.representative.apply_group(g)?;
        let eps: Vec<i8> = self
            .representative
            .marks()
            .iter()
            .map(|m| m.cut.sign())
            .collect();
        let labels = match &self.labels {
            Labels::Simple(labels) => {
                let mut out = Vec::with_capacity(labels.len());
                for (k, l) in labels.iter().enumerate() {
                    let moved =
                        act_on_series_label(g.shear, &eps, &g.flips, k, &l.combined())?;
                    out.push(SimpleLabel::from_combined(moved)?);
                }
                Labels::Simple(out)
            }
            Labels::Pinch(tuples) => {
                let (values_x, value_flips) = per_value_flips(&self.representative, &g.flips);
                let mut out = Vec::with_capacity(tuples.len());
                for (j0, t) in tuples.iter().enumerate() {
                    out.push(act_on_tuple(
                        g.shear,
                        &g.translate,
                        &values_x,
                        j0,
                        t,
                        &value_flips,
                    )?);
                }
                Labels::Pinch(out)
            }
        };
        Ok(LabeledPolygon {
            representative: rep,
            labels,
        })
    }

    /// Orbit equivalence of labeled polygons. The canonical representative
    /// pins the connecting group element; simple labels must then agree
    /// exactly, pinch tuples up to cyclic index permutation.
    pub fn equivalent(&self, other: &LabeledPolygon) -> Result<bool> {
        self.validate()?;
        other.validate()?;
        let (c1, g1) = self.representative.canonicalize_with_element()?;
        let (c2, g2) = other.representative.canonicalize_with_element()?;
        if c1 != c2 {
            return Ok(false);
        }
        let l1 = self.apply_group(&g1)?;
        let l2 = other.apply_group(&g2)?;
        match (&l1.labels, &l2.labels) {
            (Labels::Simple(a), Labels::Simple(b)) => Ok(a == b),
            _ => {
                let p1 = l1.to_pinch_labels()?;
                let p2 = l2.to_pinch_labels()?;
                Ok(p1.len() == p2.len()
                    && p1.iter().zip(&p2).all(|(a, b)| a.cyclic_eq(b)))
            }
        }
    }

    /// The pinch form of the labels: simple labels become 1-pinch tuples
    /// whose constant term is the mark height.
    pub fn to_pinch_labels(&self) -> Result<Vec<PinchTuple>> {
        match &self.labels {
            Labels::Pinch(tuples) => Ok(tuples.clone()),
            Labels::Simple(labels) => {
                let marks = self.representative.marks();
                let order = labels
                    .first()
                    .map(|l| l.order())
                    .unwrap_or(crate::series::DEFAULT_ORDER);
                let y = TruncatedSeries::y(order);
                labels
                    .iter()
                    .zip(marks)
                    .map(|(l, m)| {
                        let s0 = l
                            .combined()
                            .add_linear_x(&Rat::zero(), &m.point.y);
                        PinchTuple::new(vec![s0], vec![vec![y.clone()]])
                    })
                    .collect()
            }
        }
    }
}

/// Reduces per-mark flips to per-distinct-value flips by multiplying the
/// signs of the coincident marks, and reports the distinct x-coordinates.
fn per_value_flips(rep: &SemitoricRepresentative, flips: &[i8]) -> (Vec<Rat>, Vec<i8>) {
    let values = distinct_values(rep);
    let mut xs = Vec::with_capacity(values.len());
    let mut value_flips = Vec::with_capacity(values.len());
    let mut idx = 0;
    for (p, mult) in values {
        let mut f = 1i8;
        for _ in 0..mult {
            f *= flips.get(idx).copied().unwrap_or(1);
            idx += 1;
        }
        xs.push(p.x);
        value_flips.push(f);
    }
    (xs, value_flips)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::ConvexRationalPolygon;
    use crate::rat::rat;
    use crate::semitoric::{CutDirection, MarkedPoint};

    const K: usize = 6;

    fn y() -> TruncatedSeries {
        TruncatedSeries::y(K)
    }

    #[test]
    fn split_combine_roundtrip() {
        let class = TruncatedSeries::zero(K)
            .with_coeff(1, 0, rat(1, 3))
            .with_coeff(0, 1, rat(5, 7))
            .with_coeff(2, 1, rat(-2, 9));
        let label = SimpleLabel::new(class.clone(), -4).unwrap();
        let combined = label.combined();
        assert_eq!(combined.coeff(1, 0), rat(1, 3) + rat_int(-4));
        let back = SimpleLabel::from_combined(combined).unwrap();
        assert_eq!(back, label);
    }

    #[test]
    fn twisting_action_examples() {
        // Identity leaves kappas alone.
        assert_eq!(
            act_on_twisting(0, &[1, -1], &[1, 1], &[3, -2]).unwrap(),
            vec![3, -2]
        );
        // Pure shear adds n everywhere.
        assert_eq!(
            act_on_twisting(1, &[1, -1], &[1, 1], &[0, 0]).unwrap(),
            vec![1, 1]
        );
        // u_1 = 1 for an up cut flipped down; partial sums accumulate.
        assert_eq!(
            act_on_twisting(0, &[1, 1], &[-1, 1], &[0, 0]).unwrap(),
            vec![1, 1]
        );
    }

    #[test]
    fn series_label_action() {
        let s = TruncatedSeries::zero(K).with_coeff(0, 2, rat_int(3));
        let moved = act_on_series_label(2, &[1], &[1], 0, &s).unwrap();
        assert_eq!(moved.coeff(1, 0), rat_int(2));
        assert_eq!(moved.coeff(0, 2), rat_int(3));
    }

    #[test]
    fn extend_single() {
        let s0 = y().with_coeff(2, 0, rat(7, 3));
        let t = extend_tuple(s0.clone(), &[]).unwrap();
        assert_eq!(t.pinch_count(), 1);
        assert_eq!(t.s(0), &s0);
        assert_eq!(t.g(0, 0), &y());
    }

    #[test]
    fn extend_matches_hand_computation() {
        let k3 = 3;
        let s0 = TruncatedSeries::y(k3);
        let chain = vec![TruncatedSeries::y(k3).with_coeff(2, 0, rat_int(1))];
        let t = extend_tuple(s0, &chain).unwrap();
        let y3 = TruncatedSeries::y(k3);
        assert_eq!(t.g(0, 1), &y3.clone().with_coeff(2, 0, rat_int(1)));
        assert_eq!(t.g(1, 0), &y3.clone().with_coeff(2, 0, rat_int(-1)));
        assert_eq!(t.s(1), &y3.with_coeff(2, 0, rat_int(-1)));
        assert!(verify_tuple(&t).is_empty());
    }

    #[test]
    fn extend_trivial_chain() {
        let s0 = y().with_coeff(1, 1, rat(1, 2));
        let t = extend_tuple(s0.clone(), &[y(), y()]).unwrap();
        for mu in 0..3 {
            assert_eq!(t.s(mu), &s0);
            for nu in 0..3 {
                assert_eq!(t.g(mu, nu), &y());
            }
        }
    }

    #[test]
    fn verify_flags_bad_diagonal() {
        let mut g = vec![vec![y()]];
        g[0][0] = y().with_coeff(1, 0, rat_int(1));
        let t = PinchTuple::new_unchecked(vec![y()], g);
        let violations = verify_tuple(&t);
        assert!(violations
            .iter()
            .any(|v| matches!(v, TupleViolation::DiagonalNotY { mu: 0 })));
    }

    #[test]
    fn verify_flags_perturbed_series() {
        let s0 = y();
        let chain = vec![y().with_coeff(2, 0, rat_int(1))];
        let t = extend_tuple(s0, &chain).unwrap();
        let mut s = t.series().to_vec();
        s[1] = s[1].clone().with_coeff(0, 1, rat_int(5));
        let bad = PinchTuple::new_unchecked(s, (0..2).map(|mu| (0..2).map(|nu| t.g(mu, nu).clone()).collect()).collect());
        let violations = verify_tuple(&bad);
        assert!(violations
            .iter()
            .any(|v| matches!(v, TupleViolation::SeriesRelation { mu: 0, nu: 1 })));
    }

    #[test]
    fn tuple_action_shifts_only_low_coefficients() {
        let s0 = y().with_coeff(2, 1, rat(4, 5));
        let t = extend_tuple(s0, &[y().with_coeff(0, 2, rat(1, 2))]).unwrap();
        let a = vec![rat_int(2)];
        let moved = act_on_tuple(1, &Rat::zero(), &a, 0, &t, &[1]).unwrap();
        for mu in 0..2 {
            assert_eq!(
                moved.s(mu).coeff(0, 0),
                t.s(mu).coeff(0, 0) + rat_int(2)
            );
            assert_eq!(
                moved.s(mu).coeff(1, 0),
                t.s(mu).coeff(1, 0) + rat_int(1)
            );
            assert_eq!(moved.s(mu).coeff(2, 1), t.s(mu).coeff(2, 1));
            assert_eq!(moved.g(mu, 0), t.g(mu, 0));
        }
        // A flip at the same x moves X but not the constant.
        let flipped = act_on_tuple(0, &Rat::zero(), &a, 0, &t, &[-1]).unwrap();
        assert_eq!(flipped.s(0).coeff(1, 0), t.s(0).coeff(1, 0) + rat_int(1));
        assert_eq!(flipped.s(0).coeff(0, 0), t.s(0).coeff(0, 0));
    }

    #[test]
    fn cyclic_equality() {
        let s0 = y().with_coeff(2, 0, rat(1, 3));
        let chain = vec![y().with_coeff(0, 2, rat(1, 4))];
        let t = extend_tuple(s0, &chain).unwrap();
        let r = t.rotated(1);
        assert!(t.cyclic_eq(&r));
        assert!(t.cyclic_eq(&t));
    }

    fn labeled_triangle(kappa: i64) -> LabeledPolygon {
        let poly = ConvexRationalPolygon::from_vertices(vec![
            Point::new(rat_int(0), rat_int(0)),
            Point::new(rat_int(2), rat_int(1)),
            Point::new(rat_int(4), rat_int(0)),
        ])
        .unwrap();
        let rep = SemitoricRepresentative::new(
            poly,
            vec![MarkedPoint {
                point: Point::new(rat_int(2), rat(1, 2)),
                cut: CutDirection::Up,
            }],
        );
        let class = TruncatedSeries::zero(K).with_coeff(0, 1, rat(3, 7));
        LabeledPolygon::new(
            rep,
            Labels::Simple(vec![SimpleLabel::new(class, kappa).unwrap()]),
        )
        .unwrap()
    }

    #[test]
    fn labeled_equivalence_orbit_and_kappa() {
        let l = labeled_triangle(0);
        let g = GroupElement {
            shear: 1,
            translate: rat(1, 2),
            flips: vec![-1],
        };
        let moved = l.apply_group(&g).unwrap();
        assert!(l.equivalent(&moved).unwrap());
        assert!(moved.equivalent(&l).unwrap());

        let different = labeled_triangle(1);
        assert!(!l.equivalent(&different).unwrap());
    }

    #[test]
    fn one_pinch_matches_simple() {
        let l = labeled_triangle(2);
        let rep = l.representative().clone();
        let pinch = LabeledPolygon::new(rep, Labels::Pinch(l.to_pinch_labels().unwrap())).unwrap();
        assert!(l.equivalent(&pinch).unwrap());
        let other = labeled_triangle(3);
        assert!(!other.equivalent(&pinch).unwrap());
    }
}
