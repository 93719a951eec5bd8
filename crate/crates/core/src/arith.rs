//! Trace fields, quadratic imaginary recognition, units, and the elliptic-type
//! conditions for arithmetic two-generator groups.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{cis, commutator_trace, Cx, Mat2, ONE};
use crate::poly::IntPoly;
use crate::riley::gcd;
use crate::tolerance::tolerances;

/// Orders `n` for which the (2,3,n) triangle group is arithmetic.
pub const ELLIPTIC_ORDERS: [u32; 11] = [7, 8, 9, 10, 11, 12, 14, 16, 18, 24, 30];

pub const DEFAULT_COEFF_BOUND: i64 = 1_000_000;

/// ℚ(√−d) with its ring of integers `O_d`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawField", into = "RawField")]
pub struct QuadImagField {
    d: u64,
}

#[derive(Serialize, Deserialize)]
struct RawField {
    d: u64,
    #[serde(default, skip_deserializing)]
    ring_label: String,
    #[serde(default, skip_deserializing)]
    half_integral: bool,
}

impl TryFrom<RawField> for QuadImagField {
    type Error = Error;
    fn try_from(r: RawField) -> Result<Self> {
        QuadImagField::new(r.d)
    }
}

impl From<QuadImagField> for RawField {
    fn from(f: QuadImagField) -> RawField {
        RawField { d: f.d, ring_label: f.ring_label(), half_integral: f.half_integral() }
    }
}

impl QuadImagField {
    pub fn new(d: u64) -> Result<Self> {
        if d == 0 || squarefree_part(d) != d {
            return Err(Error::Usage(format!("d = {d} is not a positive squarefree integer")));
        }
        Ok(QuadImagField { d })
    }

    pub fn d(&self) -> u64 {
        self.d
    }

    pub fn ring_label(&self) -> String {
        format!("O_{}", self.d)
    }

    /// True iff `O_d` has the half-integral basis element (1+√−d)/2.
    pub fn half_integral(&self) -> bool {
        self.d % 4 == 3
    }

    /// `√−d` or `(1+√−d)/2`.
    pub fn omega(&self) -> Cx {
        let s = Cx::new(0.0, (self.d as f64).sqrt());
        if self.half_integral() {
            (ONE + s) / 2.0
        } else {
            s
        }
    }

    pub fn units(&self) -> Vec<Cx> {
        let count = match self.d {
            1 => 4,
            3 => 6,
            _ => 2,
        };
        (0..count).map(|k| cis(2.0 * PI * k as f64 / count as f64)).collect()
    }
}

/// Largest squarefree divisor `s` with `n = s·m²`.
pub fn squarefree_part(n: u64) -> u64 {
    let mut n = n;
    let mut out = 1;
    let mut p = 2;
    while p * p <= n {
        let mut e = 0;
        while n.is_multiple_of(p) {
            n /= p;
            e += 1;
        }
        if e % 2 == 1 {
            out *= p;
        }
        p += 1;
    }
    out * n
}

pub fn trace_field_generators(x: &Mat2, y: &Mat2) -> Vec<Cx> {
    vec![x.trace(), y.trace(), (*x * *y).trace()]
}

/// Generators of the invariant trace field. When `tr y` vanishes the list is
/// `[tr²x, tr[x,y]]`; a vanishing `tr x` swaps the roles of `x` and `y`.
pub fn invariant_trace_field_generators(x: &Mat2, y: &Mat2) -> Result<Vec<Cx>> {
    let eps = tolerances().cx;
    let (tx, ty) = (x.trace(), y.trace());
    match (tx.norm() <= eps, ty.norm() <= eps) {
        (true, true) => Err(Error::UnsupportedBranch("both generators have trace 0")),
        (true, false) => invariant_trace_field_generators(y, x),
        (false, true) => Ok(vec![tx * tx, commutator_trace(x, y)]),
        (false, false) => Ok(vec![tx * tx, ty * ty, tx * ty * (*x * *y).trace()]),
    }
}

/// If `x` is a non-real algebraic integer of degree 2, the squarefree `d`
/// with ℚ(x) = ℚ(√−d).
pub fn recognize_quad_imaginary(x: Cx, coeff_bound: i64) -> Option<u64> {
    let eps = tolerances().cx;
    if x.im.abs() <= eps * (1.0 + x.norm()) || !x.re.is_finite() || !x.im.is_finite() {
        return None;
    }
    let b = -2.0 * x.re;
    let c = x.norm_sqr();
    let tol = eps * (1.0 + c.abs() + b.abs());
    let (bi, ci) = (b.round(), c.round());
    if (b - bi).abs() > tol || (c - ci).abs() > tol {
        return None;
    }
    if bi.abs() > coeff_bound as f64 || ci.abs() > coeff_bound as f64 {
        return None;
    }
    let disc = (bi as i64) * (bi as i64) - 4 * (ci as i64);
    if disc >= 0 {
        return None;
    }
    Some(squarefree_part(disc.unsigned_abs()))
}

/// Common quadratic imaginary field of a generator list. Real generators
/// must be rational integers; every non-real one must give the same `d`.
pub fn recognize_field(gens: &[Cx], coeff_bound: i64) -> Option<QuadImagField> {
    let eps = tolerances().cx;
    let mut d = None;
    for &g in gens {
        if g.im.abs() <= eps * (1.0 + g.norm()) {
            if (g.re - g.re.round()).abs() > eps * (1.0 + g.re.abs()) {
                return None;
            }
            continue;
        }
        let e = recognize_quad_imaginary(g, coeff_bound)?;
        if d.is_some_and(|d| d != e) {
            return None;
        }
        d = Some(e);
    }
    QuadImagField::new(d?).ok()
}

/// Leading and constant coefficients both ±1.
pub fn is_algebraic_unit(p: &IntPoly) -> bool {
    !p.is_zero() && p.leading().abs() == 1 && p.coeff(0).abs() == 1
}

/// Whether `u/v` is a unit of the field's ring of integers.
pub fn unit_multiple_check(u: Cx, v: Cx, field: &QuadImagField) -> Result<bool> {
    let eps = tolerances().cx;
    if v.norm() <= eps {
        return Err(Error::Division);
    }
    let r = u / v;
    Ok(field.units().iter().any(|w| (r - w).norm() <= eps))
}

pub fn delta_discriminant(x: &Mat2, y: &Mat2) -> Cx {
    let (tx, ty) = (x.trace(), y.trace());
    delta_from_traces(tx * tx, ty * ty, commutator_trace(x, y))
}

/// `tr²A·tr²B·[(tr²A − 4)(tr²B − 4) + 4(tr[A,B] − 2)]`.
pub fn delta_from_traces(tr2a: Cx, tr2b: Cx, tr_comm: Cx) -> Cx {
    tr2a * tr2b * ((tr2a - 4.0) * (tr2b - 4.0) + 4.0 * (tr_comm - 2.0))
}

/// Real-place ramification of the quaternion algebra (a, b): every real
/// embedding sends both slots to negative numbers.
pub fn hilbert_real_ramified(a_embeds: &[f64], b_embeds: &[f64]) -> Result<bool> {
    if a_embeds.len() != b_embeds.len() {
        return Err(Error::Usage("embedding lists differ in length".into()));
    }
    Ok(a_embeds.iter().zip(b_embeds).all(|(&a, &b)| a < 0.0 && b < 0.0))
}

/// `k` with `1 < k ≤ n/2`, `gcd(k, n) = 1`: the non-identity real embeddings
/// `cos(2π/n) ↦ cos(2πk/n)`.
pub fn conjugate_indices(n: u32) -> Vec<u32> {
    (2..=n / 2).filter(|&k| gcd(k as u64, n as u64) == 1).collect()
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EllipticCandidate {
    pub n: u32,
    #[serde(rename = "tr2B")]
    pub tr2b: f64,
    /// Images of tr²B under the real embeddings of kΓ, ordered by
    /// [`conjugate_indices`]. Either one value per index or two (the two
    /// real places over it, adjacent).
    #[serde(rename = "tr2B_conjugates", default)]
    pub tr2b_conjugates: Vec<f64>,
    /// Supplied commutator trace; absent means it was built from `n`.
    #[serde(default)]
    pub tr_commutator: Option<Cx>,
    #[serde(rename = "trAB_integral")]
    pub tr_ab_integral: bool,
    #[serde(rename = "trB_integral")]
    pub tr_b_integral: bool,
}

impl EllipticCandidate {
    pub fn new(n: u32, tr2b: f64) -> Self {
        EllipticCandidate {
            n,
            tr2b,
            tr2b_conjugates: Vec::new(),
            tr_commutator: None,
            tr_ab_integral: true,
            tr_b_integral: true,
        }
    }

    pub fn with_conjugates(mut self, c: &[f64]) -> Self {
        self.tr2b_conjugates = c.to_vec();
        self
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ConditionStatus {
    Pass,
    Fail,
    Unchecked,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Condition {
    pub number: u8,
    pub status: ConditionStatus,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConditionReport {
    pub conditions: Vec<Condition>,
    pub overall: bool,
}

impl ConditionReport {
    fn new(conditions: Vec<Condition>) -> Self {
        let overall = conditions.iter().all(|c| c.status == ConditionStatus::Pass);
        ConditionReport { conditions, overall }
    }

    pub fn status(&self, number: u8) -> ConditionStatus {
        self.conditions[number as usize - 1].status
    }
}

fn cond(number: u8, ok: bool, detail: String) -> Condition {
    let status = if ok { ConditionStatus::Pass } else { ConditionStatus::Fail };
    Condition { number, status, detail }
}

/// Evaluates the six conditions characterizing arithmetic Jørgensen groups of
/// elliptic type. Condition (5) is checked at real places only.
pub fn elliptic_type_check(cand: &EllipticCandidate) -> Result<ConditionReport> {
    let n = cand.n;
    if n < 3 {
        return Err(Error::Usage(format!("order n = {n} must be at least 3")));
    }
    let c1 = (2.0 * PI / n as f64).cos();
    let bound = 2.0 / (1.0 - c1);
    let mut out = Vec::with_capacity(6);

    out.push(cond(1, ELLIPTIC_ORDERS.contains(&n), format!("n = {n}")));

    out.push(cond(
        2,
        cand.tr2b > bound && bound > 4.0,
        format!("tr²B = {} vs 2/(1 − cos 2π/n) = {bound:.10}", cand.tr2b),
    ));

    let want = Cx::new(2.0 * c1 + 1.0, 0.0);
    out.push(match cand.tr_commutator {
        None => Condition {
            number: 3,
            status: ConditionStatus::Pass,
            detail: "tr[A,B] = 2cos(2π/n) + 1 by construction".into(),
        },
        Some(t) => cond(3, (t - want).norm() <= tolerances().cx, format!("tr[A,B] = {t}, expected {}", want.re)),
    });

    let ks = conjugate_indices(n);
    let per_k = match cand.tr2b_conjugates.len() {
        0 => None,
        l if l == ks.len() => Some(1),
        l if l == 2 * ks.len() => Some(2),
        _ => None,
    };
    let pairs: Vec<(u32, f64, f64)> = match per_k {
        Some(m) => cand
            .tr2b_conjugates
            .iter()
            .enumerate()
            .map(|(i, &t)| {
                let k = ks[i / m];
                (k, (2.0 * PI * k as f64 / n as f64).cos(), t)
            })
            .collect(),
        None => Vec::new(),
    };

    out.push(match per_k {
        None if ks.is_empty() => cond(4, true, "no non-identity real embeddings".into()),
        None => Condition {
            number: 4,
            status: ConditionStatus::Unchecked,
            detail: format!(
                "need {} or {} conjugates of tr²B, got {}",
                ks.len(),
                2 * ks.len(),
                cand.tr2b_conjugates.len()
            ),
        },
        Some(_) => {
            let bad: Vec<String> = pairs
                .iter()
                .filter(|&&(_, c, t)| !(-1.0 < c && c < 0.5 && 0.0 < t && t < 2.0 / (1.0 - c) && 2.0 / (1.0 - c) < 4.0))
                .map(|&(k, c, t)| format!("k={k}: τ(tr²B) = {t}, bound {:.10}", 2.0 / (1.0 - c)))
                .collect();
            cond(4, bad.is_empty(), if bad.is_empty() { "all real embeddings in range".into() } else { bad.join("; ") })
        }
    });

    let first_b: Vec<f64> = ks.iter().map(|&k| 2.0 * (2.0 * PI * k as f64 / n as f64).cos() - 1.0).collect();
    let first = hilbert_real_ramified(&vec![-1.0; first_b.len()], &first_b)?;
    out.push(match per_k {
        None if !ks.is_empty() => Condition {
            number: 5,
            status: if first { ConditionStatus::Unchecked } else { ConditionStatus::Fail },
            detail: format!("signs only; first symbol ramified: {first}; second needs conjugates of tr²B"),
        },
        _ => {
            let second_b: Vec<f64> =
                pairs.iter().map(|&(k, c, t)| 2.0 * ((4.0 * PI * k as f64 / n as f64).cos() + c) * t).collect();
            let second = hilbert_real_ramified(&vec![-1.0; second_b.len()], &second_b)?;
            cond(5, first && second, format!("signs only; first symbol ramified: {first}; second: {second}"))
        }
    });

    out.push(cond(
        6,
        cand.tr_b_integral && cand.tr_ab_integral,
        format!("tr B integral: {}; tr AB integral: {}", cand.tr_b_integral, cand.tr_ab_integral),
    ));
    Ok(ConditionReport::new(out))
}

/// `|2cos(2π/n) − 2| + |2cos(2π/n) − 1|`: the Jørgensen number of an
/// elliptic-type pair with `tr[A,B] = 2cos(2π/n) + 1`.
pub fn elliptic_j_value(n: u32) -> f64 {
    let c = 2.0 * (2.0 * PI / n as f64).cos();
    (c - 2.0).abs() + (c - 1.0).abs()
}

/// Images of a generating pair under elementary Nielsen moves:
/// `Y ↦ YX^m` for `0 < |m| ≤ 3`, `Y ↦ Y⁻¹`, and `(X, Y) ↦ (X, XY)`.
pub fn nielsen_moves(x: &Mat2, y: &Mat2) -> Vec<(String, Mat2, Mat2)> {
    let mut out = Vec::new();
    for m in (-3..=3).filter(|&m| m != 0) {
        out.push((format!("Y -> YX^{m}"), *x, *y * x.pow(m)));
    }
    out.push(("Y -> Y^-1".into(), *x, y.inverse()));
    out.push(("(X, Y) -> (X, XY)".into(), *x, *x * *y));
    out
}
