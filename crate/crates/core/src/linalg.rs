//! Complex 2×2 matrices of unit determinant, Möbius classification and the
//! Jørgensen functional.

use std::f64::consts::PI;
use std::fmt;
use std::ops::{Mul, Neg};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::tolerance::tolerances;

pub type Cx = Complex64;

pub const ZERO: Cx = Cx::new(0.0, 0.0);
pub const ONE: Cx = Cx::new(1.0, 0.0);
pub const I: Cx = Cx::new(0.0, 1.0);

#[inline]
pub fn cx(re: f64, im: f64) -> Cx {
    Cx::new(re, im)
}

/// `e^{iθ}`.
#[inline]
pub fn cis(theta: f64) -> Cx {
    Cx::from_polar(1.0, theta)
}

#[inline]
pub fn approx_eq(a: Cx, b: Cx, eps: f64) -> bool {
    (a - b).norm() <= eps
}

#[inline]
pub fn is_finite(z: Cx) -> bool {
    z.re.is_finite() && z.im.is_finite()
}

/// An element of SL₂(ℂ), read projectively wherever group semantics matter.
#[derive(Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawMat2", into = "RawMat2")]
pub struct Mat2 {
    a: Cx,
    b: Cx,
    c: Cx,
    d: Cx,
}

#[derive(Serialize, Deserialize)]
struct RawMat2 {
    a: Cx,
    b: Cx,
    c: Cx,
    d: Cx,
}

impl TryFrom<RawMat2> for Mat2 {
    type Error = Error;
    fn try_from(r: RawMat2) -> Result<Self> {
        Mat2::new(r.a, r.b, r.c, r.d)
    }
}

impl From<Mat2> for RawMat2 {
    fn from(m: Mat2) -> Self {
        RawMat2 { a: m.a, b: m.b, c: m.c, d: m.d }
    }
}

impl fmt::Debug for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{}, {}], [{}, {}]]", self.a, self.b, self.c, self.d)
    }
}

impl fmt::Display for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = f.precision().unwrap_or(6);
        let e = |z: Cx| fmt_cx(z, p);
        write!(f, "[[{}, {}], [{}, {}]]", e(self.a), e(self.b), e(self.c), e(self.d))
    }
}

/// Formats a complex number compactly, dropping a vanishing part.
pub fn fmt_cx(z: Cx, precision: usize) -> String {
    let tiny = 0.5 * 10f64.powi(-(precision as i32));
    let re = if z.re.abs() < tiny { 0.0 } else { z.re };
    let im = if z.im.abs() < tiny { 0.0 } else { z.im };
    match (re == 0.0, im == 0.0) {
        (_, true) => format!("{re:.precision$}"),
        (true, false) => format!("{im:.precision$}i"),
        _ if im < 0.0 => format!("{re:.precision$}-{:.precision$}i", -im),
        _ => format!("{re:.precision$}+{im:.precision$}i"),
    }
}

impl Mat2 {
    pub const IDENTITY: Mat2 = Mat2 { a: ONE, b: ZERO, c: ZERO, d: ONE };

    /// Builds a matrix, rejecting non-finite entries and |det − 1| > ε_det.
    pub fn new(a: Cx, b: Cx, c: Cx, d: Cx) -> Result<Self> {
        let m = Mat2 { a, b, c, d };
        m.check_finite()?;
        let det = m.det();
        if (det - ONE).norm() > tolerances().det {
            return Err(Error::Determinant { det });
        }
        Ok(m)
    }

    /// Builds a matrix and rescales it by `1/√det`.
    pub fn normalized(a: Cx, b: Cx, c: Cx, d: Cx) -> Result<Self> {
        let m = Mat2 { a, b, c, d };
        m.check_finite()?;
        let det = m.det();
        if det.norm() <= tolerances().det {
            return Err(Error::DegenerateInput("singular matrix".into()));
        }
        let s = det.sqrt().inv();
        Ok(Mat2 { a: a * s, b: b * s, c: c * s, d: d * s })
    }

    /// Real-entry convenience constructor.
    pub fn real(a: f64, b: f64, c: f64, d: f64) -> Result<Self> {
        Self::new(cx(a, 0.0), cx(b, 0.0), cx(c, 0.0), cx(d, 0.0))
    }

    /// `[[1, b], [0, 1]]`.
    pub fn translation(b: Cx) -> Self {
        Mat2 { a: ONE, b, c: ZERO, d: ONE }
    }

    /// `[[1, 0], [c, 1]]`.
    pub fn lower(c: Cx) -> Self {
        Mat2 { a: ONE, b: ZERO, c, d: ONE }
    }

    /// `[[λ, 0], [0, 1/λ]]`.
    pub fn diagonal(lambda: Cx) -> Result<Self> {
        if lambda.norm() <= tolerances().cx {
            return Err(Error::Division);
        }
        Self::new(lambda, ZERO, ZERO, lambda.inv())
    }

    /// For products of exact unit-determinant factors.
    pub(crate) fn from_entries_unchecked(a: Cx, b: Cx, c: Cx, d: Cx) -> Self {
        Mat2 { a, b, c, d }
    }

    fn check_finite(&self) -> Result<()> {
        if self.entries().iter().all(|z| is_finite(*z)) {
            Ok(())
        } else {
            Err(Error::NumericRange("non-finite matrix entry".into()))
        }
    }

    #[inline]
    pub fn a(&self) -> Cx {
        self.a
    }
    #[inline]
    pub fn b(&self) -> Cx {
        self.b
    }
    #[inline]
    pub fn c(&self) -> Cx {
        self.c
    }
    #[inline]
    pub fn d(&self) -> Cx {
        self.d
    }

    pub fn entries(&self) -> [Cx; 4] {
        [self.a, self.b, self.c, self.d]
    }

    #[inline]
    pub fn det(&self) -> Cx {
        self.a * self.d - self.b * self.c
    }

    #[inline]
    pub fn trace(&self) -> Cx {
        self.a + self.d
    }

    /// Inverse of an SL₂ lift: `[[d, −b], [−c, a]]`.
    #[inline]
    pub fn inverse(&self) -> Self {
        Mat2 { a: self.d, b: -self.b, c: -self.c, d: self.a }
    }

    /// `self^n` for any integer `n`.
    pub fn pow(&self, n: i64) -> Self {
        let mut base = if n < 0 { self.inverse() } else { *self };
        let mut e = n.unsigned_abs();
        let mut acc = Mat2::IDENTITY;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }

    /// Max-entry norm.
    pub fn norm_inf(&self) -> f64 {
        self.entries().iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// Induced ∞-norm (max row sum), which is submultiplicative.
    pub fn row_norm(&self) -> f64 {
        (self.a.norm() + self.b.norm()).max(self.c.norm() + self.d.norm())
    }

    /// Max-entry distance between `self` and `other`.
    pub fn dist(&self, other: &Mat2) -> f64 {
        let [a, b, c, d] = self.entries();
        let [p, q, r, s] = other.entries();
        [(a - p), (b - q), (c - r), (d - s)].iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// Distance in PSL₂: `min(‖M − N‖∞, ‖M + N‖∞)`.
    pub fn proj_dist(&self, other: &Mat2) -> f64 {
        self.dist(other).min(self.dist(&-*other))
    }

    /// Projective equality within `eps`.
    pub fn proj_eq_within(&self, other: &Mat2, eps: f64) -> bool {
        self.proj_dist(other) <= eps
    }

    /// Projective equality within ε_mat.
    pub fn proj_eq(&self, other: &Mat2) -> bool {
        self.proj_eq_within(other, tolerances().mat)
    }

    /// `self ≡ ±I`.
    pub fn is_identity(&self) -> bool {
        self.proj_eq(&Mat2::IDENTITY)
    }

    /// `g · self · g⁻¹`.
    pub fn conjugate_by(&self, g: &Mat2) -> Mat2 {
        *g * *self * g.inverse()
    }

    /// Complex conjugate of every entry.
    pub fn conj(&self) -> Mat2 {
        Mat2 { a: self.a.conj(), b: self.b.conj(), c: self.c.conj(), d: self.d.conj() }
    }
}

impl Mul for Mat2 {
    type Output = Mat2;
    #[inline]
    fn mul(self, r: Mat2) -> Mat2 {
        Mat2 {
            a: self.a * r.a + self.b * r.c,
            b: self.a * r.b + self.b * r.d,
            c: self.c * r.a + self.d * r.c,
            d: self.c * r.b + self.d * r.d,
        }
    }
}

impl Neg for Mat2 {
    type Output = Mat2;
    fn neg(self) -> Mat2 {
        Mat2 { a: -self.a, b: -self.b, c: -self.c, d: -self.d }
    }
}

/// Checked product: fails on overflow, and renormalizes when rounding has
/// pushed the determinant beyond ε_det.
pub fn mat_mul(x: &Mat2, y: &Mat2) -> Result<Mat2> {
    let m = *x * *y;
    m.check_finite()?;
    let det = m.det();
    if (det - ONE).norm() > tolerances().det {
        return Mat2::normalized(m.a, m.b, m.c, m.d);
    }
    Ok(m)
}

/// `x y x⁻¹ y⁻¹`.
#[inline]
pub fn commutator(x: &Mat2, y: &Mat2) -> Mat2 {
    *x * *y * x.inverse() * y.inverse()
}

/// Trace of `[x, y]` via the Fricke identity, avoiding two products.
#[inline]
pub fn commutator_trace(x: &Mat2, y: &Mat2) -> Cx {
    let (tx, ty, txy) = (x.trace(), y.trace(), (*x * *y).trace());
    tx * tx + ty * ty + txy * txy - tx * ty * txy - 2.0
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MobiusKind {
    Identity,
    Parabolic,
    Elliptic,
    Hyperbolic,
    Loxodromic,
}

impl MobiusKind {
    /// Loxodromic in the broad sense (hyperbolic included).
    pub fn is_loxodromic_or_hyperbolic(self) -> bool {
        matches!(self, MobiusKind::Loxodromic | MobiusKind::Hyperbolic)
    }
}

impl fmt::Display for MobiusKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            MobiusKind::Identity => "identity",
            MobiusKind::Parabolic => "parabolic",
            MobiusKind::Elliptic => "elliptic",
            MobiusKind::Hyperbolic => "hyperbolic",
            MobiusKind::Loxodromic => "loxodromic",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MobiusClass {
    pub kind: MobiusKind,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub rotation_order: Option<u32>,
    pub trace: Cx,
}

/// Classifies by trace, with ε_cx for the trace comparisons.
pub fn classify(m: &Mat2) -> MobiusClass {
    classify_within(m, tolerances().cx)
}

/// Classifies with an explicit trace tolerance. Useful when `m` is a long
/// product whose rounding error exceeds ε_cx.
pub fn classify_within(m: &Mat2, eps: f64) -> MobiusClass {
    let trace = m.trace();
    let near_two = (trace - 2.0).norm() <= eps || (trace + 2.0).norm() <= eps;
    let kind = if near_two {
        if m.is_identity() {
            MobiusKind::Identity
        } else {
            MobiusKind::Parabolic
        }
    } else if trace.im.abs() <= eps {
        if trace.re.abs() < 2.0 {
            MobiusKind::Elliptic
        } else {
            MobiusKind::Hyperbolic
        }
    } else {
        MobiusKind::Loxodromic
    };
    let rotation_order = match kind {
        MobiusKind::Elliptic => rotation_order(trace.re, tolerances().order_cap, eps),
        _ => None,
    };
    MobiusClass { kind, rotation_order, trace }
}

/// The order `m ≤ cap` of a rotation with real trace `t`, i.e. the least `m`
/// with `t = ±2cos(πk/m)` for some `k`.
pub fn rotation_order(t: f64, cap: u32, eps: f64) -> Option<u32> {
    if t.is_nan() || t.abs() >= 2.0 {
        return None;
    }
    // Rotation angle φ ∈ (0, π] in PSL₂: t = ±2cos(φ/2).
    let half = (t.abs() / 2.0).acos();
    let phi = 2.0 * half;
    for m in 2..=cap {
        let k = (phi * m as f64 / (2.0 * PI)).round();
        if k < 1.0 {
            continue;
        }
        let t_m = 2.0 * (PI * k / m as f64).cos();
        if (t_m - t.abs()).abs() <= eps.max(1e-12) {
            return Some(m);
        }
    }
    None
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct JReport {
    pub value: f64,
    pub pair: (Mat2, Mat2),
    pub kinds: (MobiusClass, MobiusClass),
    pub commutator_trace: Cx,
}

impl JReport {
    /// Recomputes the functional from the stored pair.
    pub fn recompute(&self) -> f64 {
        jorgensen_value(&self.pair.0, &self.pair.1)
    }
}

/// `|tr²x − 4| + |tr[x,y] − 2|` without classification.
#[inline]
pub fn jorgensen_value(x: &Mat2, y: &Mat2) -> f64 {
    let t = x.trace();
    let ct = commutator(x, y).trace();
    (t * t - 4.0).norm() + (ct - 2.0).norm()
}

pub fn jorgensen_pair(x: &Mat2, y: &Mat2) -> JReport {
    let ct = commutator(x, y).trace();
    let t = x.trace();
    JReport {
        value: (t * t - 4.0).norm() + (ct - 2.0).norm(),
        pair: (*x, *y),
        kinds: (classify(x), classify(y)),
        commutator_trace: ct,
    }
}

/// A point of the Riemann sphere.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Point {
    Finite(Cx),
    Infinity,
}

impl Point {
    pub fn distance(&self, other: &Point) -> f64 {
        match (self, other) {
            (Point::Finite(p), Point::Finite(q)) => (p - q).norm(),
            (Point::Infinity, Point::Infinity) => 0.0,
            _ => f64::INFINITY,
        }
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Point::Finite(z) => f.write_str(&fmt_cx(*z, f.precision().unwrap_or(6))),
            Point::Infinity => f.write_str("∞"),
        }
    }
}

/// Fixed points of `m` on ℂ ∪ {∞}: one for parabolics, two otherwise.
pub fn fixed_points(m: &Mat2) -> Result<Vec<Point>> {
    let tol = tolerances();
    if m.is_identity() {
        return Err(Error::DegenerateInput("±I fixes every point".into()));
    }
    let (a, b, c, d) = (m.a, m.b, m.c, m.d);
    if c.norm() <= tol.cx {
        // ∞ is fixed; the second point is b/(d − a) unless the map is parabolic.
        let mut pts = vec![Point::Infinity];
        if (d - a).norm() > tol.cx {
            pts.push(Point::Finite(b / (d - a)));
        }
        return Ok(pts);
    }
    let t = m.trace();
    let s = (t * t - 4.0).sqrt();
    let w1 = (a - d + s) / (2.0 * c);
    let w2 = (a - d - s) / (2.0 * c);
    if (w1 - w2).norm() <= tol.fix {
        Ok(vec![Point::Finite((w1 + w2) / 2.0)])
    } else {
        Ok(vec![Point::Finite(w1), Point::Finite(w2)])
    }
}

fn fixed_sets_meet(p: &[Point], q: &[Point], eps: f64) -> bool {
    p.iter().any(|u| q.iter().any(|v| u.distance(v) <= eps))
}

fn is_involution(m: &Mat2) -> bool {
    m.trace().norm() <= tolerances().cx
}

/// Heuristic non-elementarity test.
///
/// A pair is declared elementary when either element is ±I, the fixed point
/// sets meet, `tr[x,y] ≡ 2`, or the pair generates a dihedral group: both are
/// involutions, or one is an involution inverting the other by conjugation.
/// Finite subgroups other than dihedral ones are not detected.
pub fn is_nonelementary(x: &Mat2, y: &Mat2) -> bool {
    let tol = tolerances();
    let (fx, fy) = match (fixed_points(x), fixed_points(y)) {
        (Ok(fx), Ok(fy)) => (fx, fy),
        _ => return false,
    };
    if (commutator_trace(x, y) - 2.0).norm() <= tol.cx {
        return false;
    }
    if fixed_sets_meet(&fx, &fy, tol.fix) {
        return false;
    }
    let (ix, iy) = (is_involution(x), is_involution(y));
    if ix && iy {
        return false;
    }
    if ix && y.conjugate_by(x).proj_eq(&y.inverse()) {
        return false;
    }
    if iy && x.conjugate_by(y).proj_eq(&x.inverse()) {
        return false;
    }
    true
}

/// `J(x, y) ≥ 1 − ε_j`, evaluated regardless of elementarity.
pub fn jorgensen_inequality_holds(x: &Mat2, y: &Mat2) -> bool {
    jorgensen_value(x, y) >= 1.0 - tolerances().j
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn a() -> Mat2 {
        Mat2::translation(ONE)
    }
    fn s() -> Mat2 {
        Mat2::real(0.0, -1.0, 1.0, 0.0).unwrap()
    }
    fn fig8_b() -> Mat2 {
        Mat2::lower(cis(PI / 3.0))
    }

    #[test]
    fn products() {
        let t = Mat2::translation(I);
        let st = mat_mul(&s(), &t).unwrap();
        assert!(st.dist(&Mat2::new(ZERO, -ONE, ONE, I).unwrap()) < 1e-15);
        assert!(mat_mul(&a(), &a()).unwrap().dist(&Mat2::translation(cx(2.0, 0.0))) < 1e-15);
        assert_eq!(Mat2::IDENTITY * Mat2::IDENTITY, Mat2::IDENTITY);
    }

    #[test]
    fn constructor_rejects_bad_determinant() {
        assert!(matches!(Mat2::real(1.0, 1.0, 1.0, 1.0), Err(Error::Determinant { .. })));
        let m = Mat2::normalized(cx(2.0, 0.0), ZERO, ZERO, cx(2.0, 0.0)).unwrap();
        assert!(m.is_identity());
        assert!(Mat2::real(f64::NAN, 0.0, 0.0, 1.0).is_err());
    }

    #[test]
    fn overflow_is_range_error() {
        let big = Mat2::diagonal(cx(1e150, 0.0)).unwrap();
        assert!(matches!(mat_mul(&(big * big), &big), Err(Error::NumericRange(_))));
    }

    #[test]
    fn classification_examples() {
        assert_eq!(classify(&a()).kind, MobiusKind::Parabolic);
        let c = classify(&s());
        assert_eq!((c.kind, c.rotation_order), (MobiusKind::Elliptic, Some(2)));
        let d = Mat2::new(ZERO, -cis(PI / 6.0), cis(-PI / 6.0), cx(3f64.sqrt(), 0.0)).unwrap();
        let c = classify(&d);
        assert_eq!((c.kind, c.rotation_order), (MobiusKind::Elliptic, Some(6)));
        assert_eq!(classify(&Mat2::diagonal(cx(2.0, 0.0)).unwrap()).kind, MobiusKind::Hyperbolic);
        assert_eq!(classify(&Mat2::diagonal(cx(1.0, 1.0)).unwrap()).kind, MobiusKind::Loxodromic);
        assert_eq!(classify(&-Mat2::IDENTITY).kind, MobiusKind::Identity);
    }

    #[test]
    fn rotation_orders_with_nontrivial_numerator() {
        // 2cos(2π/5) belongs to an order 5 rotation.
        let t = 2.0 * (2.0 * PI / 5.0).cos();
        assert_eq!(rotation_order(t, 256, 1e-9), Some(5));
        assert_eq!(rotation_order(1.0, 256, 1e-9), Some(3));
        assert_eq!(rotation_order(-1.0, 256, 1e-9), Some(3));
        assert_eq!(rotation_order(2.0 * (PI / 7.0).cos(), 256, 1e-9), Some(7));
        assert_eq!(rotation_order(2.0 * (PI / 300.0).cos(), 256, 1e-12), None);
    }

    #[test]
    fn jorgensen_examples() {
        assert!((jorgensen_pair(&a(), &fig8_b()).value - 1.0).abs() < 1e-12);
        assert_eq!(jorgensen_pair(&a(), &a()).value, 0.0);
        let wb = Mat2::lower(cx(-1.0, -1.0));
        assert!((jorgensen_pair(&a(), &wb).value - 2.0).abs() < 1e-12);
        assert!((jorgensen_pair(&a(), &s()).value - 1.0).abs() < 1e-12);
        assert!(jorgensen_inequality_holds(&a(), &fig8_b()));
        assert!(jorgensen_inequality_holds(&a(), &wb));
        assert!(jorgensen_inequality_holds(&a(), &s()));
    }

    #[test]
    fn fixed_point_examples() {
        assert_eq!(fixed_points(&a()).unwrap(), vec![Point::Infinity]);
        let f = fixed_points(&s()).unwrap();
        assert_eq!(f.len(), 2);
        assert!(f.iter().any(|p| p.distance(&Point::Finite(I)) < 1e-12));
        assert!(f.iter().any(|p| p.distance(&Point::Finite(-I)) < 1e-12));
        let f = fixed_points(&Mat2::diagonal(cx(2.0, 0.0)).unwrap()).unwrap();
        assert!(f.contains(&Point::Infinity));
        assert!(f.iter().any(|p| p.distance(&Point::Finite(ZERO)) < 1e-12));
        assert!(fixed_points(&Mat2::IDENTITY).is_err());
    }

    #[test]
    fn elementarity_examples() {
        assert!(is_nonelementary(&a(), &fig8_b()));
        assert!(!is_nonelementary(&a(), &a().pow(2)));
        let y = Mat2::real(0.0, -2.0, 0.5, 0.0).unwrap();
        assert!(!is_nonelementary(&s(), &y));
        assert!(!is_nonelementary(&a(), &Mat2::IDENTITY));
    }

    #[test]
    fn commutator_trace_matches_product() {
        let x = Mat2::normalized(cx(1.0, 2.0), cx(0.5, 0.0), cx(-1.0, 1.0), cx(0.3, 0.0)).unwrap();
        let y = Mat2::normalized(cx(0.2, 0.0), cx(1.0, -1.0), cx(2.0, 0.5), cx(1.0, 1.0)).unwrap();
        assert!(approx_eq(commutator_trace(&x, &y), commutator(&x, &y).trace(), 1e-12));
    }

    fn arb_cx(r: f64) -> impl Strategy<Value = Cx> {
        (-r..r, -r..r).prop_map(|(a, b)| cx(a, b))
    }

    fn arb_mat() -> impl Strategy<Value = Mat2> {
        (arb_cx(3.0), arb_cx(3.0), arb_cx(3.0), arb_cx(3.0)).prop_filter_map("singular", |(a, b, c, d)| {
            if (a * d - b * c).norm() < 0.1 {
                None
            } else {
                Mat2::normalized(a, b, c, d).ok()
            }
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]

        #[test]
        fn projective_sign_flip(x in arb_mat(), y in arb_mat()) {
            let j = jorgensen_pair(&x, &y).value;
            prop_assert_eq!(j, jorgensen_pair(&-x, &y).value);
            prop_assert_eq!(j, jorgensen_pair(&x, &-y).value);
            prop_assert_eq!(classify(&x).kind, classify(&-x).kind);
            prop_assert_eq!(classify(&x).rotation_order, classify(&-x).rotation_order);
        }

        #[test]
        fn conjugation_invariance(x in arb_mat(), y in arb_mat(), g in arb_mat()) {
            let j = jorgensen_pair(&x, &y).value;
            let jg = jorgensen_pair(&x.conjugate_by(&g), &y.conjugate_by(&g)).value;
            prop_assert!((j - jg).abs() <= 1e-6);
        }

        #[test]
        fn commutator_with_translation_is_c_squared(
            a in arb_cx(10.0), b in arb_cx(10.0), c in arb_cx(10.0)
        ) {
            prop_assume!(a.norm() > 0.1);
            // Fix d so that det = 1 exactly in exact arithmetic.
            let d = (ONE + b * c) / a;
            prop_assume!(d.norm() <= 10.0);
            let t = Mat2::from_entries_unchecked(a, b, c, d);
            let lhs = commutator(&Mat2::translation(ONE), &t).trace() - 2.0;
            prop_assert!((lhs - c * c).norm() <= 1e-10);
        }

        #[test]
        fn report_is_recomputable(x in arb_mat(), y in arb_mat()) {
            let r = jorgensen_pair(&x, &y);
            prop_assert!((r.value - r.recompute()).abs() <= 1e-12);
        }
    }
}
