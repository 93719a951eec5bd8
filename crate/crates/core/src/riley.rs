//! Two-bridge knots and links: ε-sequences, the Riley polynomials whose roots
//! parametrize parabolic representations, and the Jørgensen numbers of the
//! resulting groups.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{jorgensen_pair, Cx, JReport, Mat2, ONE};
use crate::poly::{IntPoly, PolyMat2};
use crate::roots::RootSet;
use crate::tolerance::tolerances;
use crate::words::{find_jorgensen_violation, GeneratorSet, PairWitness};

/// Largest `p` accepted by the exhaustive oracle.
pub const ORACLE_MAX_P: u64 = 13;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BridgeKind {
    Knot,
    Link,
}

impl fmt::Display for BridgeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BridgeKind::Knot => "knot",
            BridgeKind::Link => "link",
        })
    }
}

/// A normalized two-bridge pair `(p/q)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwoBridge {
    p: u64,
    q: u64,
    input_q: u64,
    kind: BridgeKind,
    eps: Vec<i8>,
}

/// Validates `(p, q)` and computes `e_i = (−1)^⌊iq/p⌋`.
///
/// For odd `p` and even `q` the pair is replaced by its mirror `(p, p − q)`,
/// which has odd `q` and an isomorphic group.
pub fn normalize(p: u64, q: u64) -> Result<TwoBridge> {
    if p < 2 || q == 0 || q >= p {
        return Err(Error::Usage(format!("need p ≥ 2 and 1 ≤ q < p, got ({p},{q})")));
    }
    if gcd(p, q) != 1 {
        return Err(Error::InvalidPair { p, q });
    }
    let input_q = q;
    let q = if p % 2 == 1 && q.is_multiple_of(2) { p - q } else { q };
    let kind = if p % 2 == 1 { BridgeKind::Knot } else { BridgeKind::Link };
    let eps = (1..p).map(|i| if (i * q / p).is_multiple_of(2) { 1 } else { -1 }).collect();
    Ok(TwoBridge { p, q, input_q, kind, eps })
}

pub(crate) fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

impl TwoBridge {
    pub fn p(&self) -> u64 {
        self.p
    }

    /// The `q` actually used (after mirroring, if any).
    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn input_q(&self) -> u64 {
        self.input_q
    }

    pub fn kind(&self) -> BridgeKind {
        self.kind
    }

    /// `e_1, …, e_{p−1}`.
    pub fn eps(&self) -> &[i8] {
        &self.eps
    }

    /// `e_i` for `1 ≤ i ≤ p − 1`.
    pub fn e(&self, i: usize) -> i8 {
        self.eps[i - 1]
    }

    pub fn is_palindrome(&self) -> bool {
        self.eps.iter().eq(self.eps.iter().rev())
    }

    /// Parses `P/Q`.
    pub fn parse(s: &str) -> Result<TwoBridge> {
        let (p, q) = s.trim().split_once('/').ok_or_else(|| Error::Usage(format!("expected P/Q, got {s:?}")))?;
        let p: u64 = p.trim().parse().map_err(|_| Error::Usage(format!("bad p in {s:?}")))?;
        let q: u64 = q.trim().parse().map_err(|_| Error::Usage(format!("bad q in {s:?}")))?;
        normalize(p, q)
    }
}

impl fmt::Display for TwoBridge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}/{})", self.p, self.q)
    }
}

/// `f[t]` = signed count of increasing index tuples of length `t` whose j-th
/// entry has the parity of `j`, weighted by the product of their `e_i`.
fn alternating_sums(eps: &[i8]) -> Result<Vec<i64>> {
    let mut f = vec![0i64; eps.len() + 1];
    f[0] = 1;
    for (idx, &e) in eps.iter().enumerate() {
        let i = idx + 1;
        for t in (1..=i).rev() {
            if i % 2 == t % 2 {
                let add = f[t - 1].checked_mul(e as i64).ok_or(Error::Overflow)?;
                f[t] = f[t].checked_add(add).ok_or(Error::Overflow)?;
            }
        }
    }
    Ok(f)
}

fn raw_from_sums(kind: BridgeKind, f: &[i64]) -> IntPoly {
    let n = f.len() - 1;
    let coeffs = match kind {
        BridgeKind::Knot => (0..=n / 2).map(|k| f[2 * k]).collect(),
        BridgeKind::Link => (0..=n.div_ceil(2)).map(|k| if k == 0 { 0 } else { f[2 * k - 1] }).collect(),
    };
    IntPoly::new(coeffs)
}

/// The knot polynomial `d_n`: the z^k coefficient sums `Π e_{i_j}` over
/// `i_1 < … < i_{2k}` with alternating parity starting odd.
pub fn knot_poly(tb: &TwoBridge) -> Result<IntPoly> {
    if tb.kind != BridgeKind::Knot {
        return Err(Error::Usage(format!("{tb} is a link, not a knot")));
    }
    Ok(raw_from_sums(BridgeKind::Knot, &alternating_sums(&tb.eps)?))
}

/// The link polynomial `c_n` as written, and normalized (valuation stripped,
/// positive leading coefficient).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinkPoly {
    pub raw: IntPoly,
    pub normalized: IntPoly,
}

pub fn link_poly(tb: &TwoBridge) -> Result<LinkPoly> {
    if tb.kind != BridgeKind::Link {
        return Err(Error::Usage(format!("{tb} is a knot, not a link")));
    }
    let raw = raw_from_sums(BridgeKind::Link, &alternating_sums(&tb.eps)?);
    if raw.is_zero() {
        return Err(Error::DegenerateLink { p: tb.p, q: tb.q });
    }
    let normalized = raw.strip_valuation().with_positive_leading();
    Ok(LinkPoly { raw, normalized })
}

/// `d_n` for knots, raw `c_n` for links.
pub fn raw_poly(tb: &TwoBridge) -> Result<IntPoly> {
    match tb.kind {
        BridgeKind::Knot => knot_poly(tb),
        BridgeKind::Link => link_poly(tb).map(|l| l.raw),
    }
}

/// Same polynomial as [`raw_poly`], by enumerating all `2^{p−1}` index sets.
pub fn subset_oracle_poly(tb: &TwoBridge) -> Result<IntPoly> {
    if tb.p > ORACLE_MAX_P {
        return Err(Error::SizeLimit(format!("oracle needs p ≤ {ORACLE_MAX_P}")));
    }
    let m = tb.eps.len();
    let mut by_size = vec![0i64; m + 1];
    for mask in 0u32..(1 << m) {
        let mut size = 0usize;
        let mut sign = 1i64;
        let mut ok = true;
        for bit in 0..m {
            if mask & (1 << bit) != 0 {
                size += 1;
                let i = bit + 1;
                if i % 2 != size % 2 {
                    ok = false;
                    break;
                }
                sign *= tb.eps[bit] as i64;
            }
        }
        if ok {
            by_size[size] += sign;
        }
    }
    let wanted = |t: usize| by_size.get(t).copied().unwrap_or(0);
    let coeffs: Vec<i64> = match tb.kind {
        BridgeKind::Knot => (0..=m / 2).map(|k| wanted(2 * k)).collect(),
        BridgeKind::Link => (0..=m.div_ceil(2)).map(|k| if k == 0 { 0 } else { wanted(2 * k - 1) }).collect(),
    };
    Ok(IntPoly::new(coeffs))
}

/// `W = B^{e_1} A^{e_2} B^{e_3} ⋯` over ℤ[z], with `A = [[1,1],[0,1]]` and
/// `B = [[1,0],[z,1]]`.
///
/// With this sign the relation `AW = WB` (`AW = WA` for links) holds exactly
/// at the roots of `d_n` (`c_n`). Writing `B = [[1,0],[−z,1]]` instead would
/// need the roots of `d_n(−z)`.
pub fn word_matrix(tb: &TwoBridge) -> Result<PolyMat2> {
    let mut w = PolyMat2::identity();
    for (idx, &e) in tb.eps.iter().enumerate() {
        let g = if idx % 2 == 0 { PolyMat2::b_power(e as i64) } else { PolyMat2::a_power(e as i64) };
        w = w.checked_mul(&g)?;
    }
    Ok(w)
}

/// `{A, B(z)}` with `B(z) = [[1,0],[z,1]]`.
pub fn riley_generators(z: Cx) -> GeneratorSet {
    GeneratorSet::from_pairs(&[("A", Mat2::translation(ONE)), ("B", Mat2::lower(z))]).expect("two generators")
}

/// `‖AW − WB‖∞` for knots, `‖AW − WA‖∞` for links, at `z`.
pub fn relation_residual(tb: &TwoBridge, w: &PolyMat2, z: Cx) -> f64 {
    let a = Mat2::translation(ONE);
    let wz = w.eval(z);
    let rhs = match tb.kind {
        BridgeKind::Knot => wz * Mat2::lower(z),
        BridgeKind::Link => wz * a,
    };
    (a * wz).dist(&rhs)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SelectionOptions {
    /// Word length for the Jørgensen sampling filter.
    pub sample_len: usize,
    /// Manual choice, an index into the root list.
    pub root_index: Option<usize>,
}

impl Default for SelectionOptions {
    fn default() -> Self {
        SelectionOptions { sample_len: 6, root_index: None }
    }
}

/// Why a root was kept or dropped.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RootVerdict {
    pub index: usize,
    pub z: Cx,
    pub abs_z: f64,
    pub accepted: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub reason: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<PairWitness>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Selection {
    pub z: Cx,
    pub index: usize,
    pub verdicts: Vec<RootVerdict>,
    /// More than one conjugate class survived the filter.
    pub ambiguous: bool,
    /// The root was chosen with `root_index`.
    pub manual: bool,
}

/// Slack under 1 that the sampling filter tolerates.
pub const SAMPLING_SLACK: f64 = 1e-6;

/// Conjugate classes beyond which [`minimal_factor`] gives up.
pub const MAX_FACTOR_CLASSES: usize = 16;

/// The integer factor of `poly` of least degree vanishing at `z`, with
/// positive leading coefficient. Candidates are products over conjugation
/// closed root subsets containing `z`, rounded and confirmed by exact
/// division. `None` when `z` is not among the roots or there are more than
/// [`MAX_FACTOR_CLASSES`] conjugate classes besides that of `z`.
pub fn minimal_factor(poly: &IntPoly, roots: &RootSet, z: Cx) -> Result<Option<IntPoly>> {
    let vals = roots.values();
    let Some(home) = (0..vals.len()).min_by(|&i, &j| (vals[i] - z).norm().total_cmp(&(vals[j] - z).norm())) else {
        return Ok(None);
    };
    if (vals[home] - z).norm() > SAMPLING_SLACK * (1.0 + z.norm()) {
        return Ok(None);
    }
    let classes = conjugate_classes(&vals);
    let home_class = classes.iter().position(|c| c.contains(&home)).expect("every root is classed");
    let others: Vec<&Vec<usize>> =
        classes.iter().enumerate().filter(|&(i, _)| i != home_class).map(|(_, c)| c).collect();
    if others.len() > MAX_FACTOR_CLASSES {
        return Ok(None);
    }
    let lead = poly.leading().unsigned_abs();
    let scales: Vec<i64> = (1..=lead).filter(|d| lead.is_multiple_of(*d)).map(|d| d as i64).collect();
    let mut masks: Vec<u32> = (0..1u32 << others.len()).collect();
    masks.sort_by_key(|m| {
        (others.iter().enumerate().filter(|(i, _)| m >> i & 1 == 1).map(|(_, c)| c.len()).sum::<usize>(), *m)
    });
    for m in masks {
        let mut picked: Vec<Cx> = classes[home_class].iter().map(|&i| vals[i]).collect();
        for (i, c) in others.iter().enumerate() {
            if m >> i & 1 == 1 {
                picked.extend(c.iter().map(|&k| vals[k]));
            }
        }
        let monic = monic_from_roots(&picked);
        for &s in &scales {
            if let Some(cand) = round_to_int_poly(&monic, s as f64) {
                if poly.div_exact(&cand)?.is_some() {
                    return Ok(Some(cand.with_positive_leading()));
                }
            }
        }
    }
    Ok(None)
}

fn conjugate_classes(vals: &[Cx]) -> Vec<Vec<usize>> {
    let eps = SAMPLING_SLACK;
    let mut used = vec![false; vals.len()];
    let mut out = Vec::new();
    for i in 0..vals.len() {
        if used[i] {
            continue;
        }
        used[i] = true;
        let mut class = vec![i];
        if vals[i].im.abs() > eps * (1.0 + vals[i].norm()) {
            let partner = (0..vals.len())
                .filter(|&j| !used[j])
                .min_by(|&a, &b| (vals[a] - vals[i].conj()).norm().total_cmp(&(vals[b] - vals[i].conj()).norm()));
            if let Some(j) = partner {
                used[j] = true;
                class.push(j);
            }
        }
        out.push(class);
    }
    out
}

fn monic_from_roots(rs: &[Cx]) -> Vec<Cx> {
    let mut c = vec![ONE];
    for &r in rs {
        let mut next = vec![Cx::new(0.0, 0.0); c.len() + 1];
        for (k, &a) in c.iter().enumerate() {
            next[k + 1] += a;
            next[k] -= a * r;
        }
        c = next;
    }
    c
}

fn round_to_int_poly(coeffs: &[Cx], scale: f64) -> Option<IntPoly> {
    let mut out = Vec::with_capacity(coeffs.len());
    for &c in coeffs {
        let v = c * scale;
        let r = v.re.round();
        if (v - Cx::new(r, 0.0)).norm() > 1e-6 * (1.0 + r.abs()) || r.abs() > i64::MAX as f64 / 2.0 {
            return None;
        }
        out.push(r as i64);
    }
    Some(IntPoly::new(out))
}

fn judge(index: usize, z: Cx, sample_len: usize) -> Result<RootVerdict> {
    let tol = tolerances();
    let mut v = RootVerdict { index, z, abs_z: z.norm(), accepted: false, reason: None, witness: None };
    if z.norm() <= tol.cx {
        v.reason = Some("zero root gives an abelian representation".into());
    } else if z.im.abs() <= tol.cx {
        v.reason = Some("real root gives a Fuchsian representation, not a finite-volume hyperbolic one".into());
    } else if let Some(w) = find_jorgensen_violation(&riley_generators(z), sample_len, 1.0 - SAMPLING_SLACK)? {
        v.reason = Some(format!("non-elementary pair with J = {:.9} < 1", w.report.value));
        v.witness = Some(w);
    } else {
        v.accepted = true;
    }
    Ok(v)
}

/// Picks the root giving the discrete faithful representation.
///
/// Roots at 0 and real roots are rejected outright; any other root is rejected
/// when some non-elementary pair of words up to `sample_len` violates the
/// Jørgensen inequality. Conjugate roots are judged once. Of the surviving
/// classes the one with least |z| wins and `ambiguous` is set when there were
/// several.
pub fn select_geometric_root(rs: &RootSet, opts: &SelectionOptions) -> Result<Selection> {
    if rs.roots.is_empty() {
        return Err(Error::Usage("empty root set".into()));
    }
    let mut verdicts: Vec<RootVerdict> = Vec::with_capacity(rs.roots.len());
    for (index, root) in rs.roots.iter().enumerate() {
        let z = root.z;
        let twin = verdicts.iter().find(|v| (v.z - z.conj()).norm() <= 1e-9 && v.z.im != 0.0);
        let v = match twin {
            Some(t) => RootVerdict { index, z, abs_z: z.norm(), ..t.clone() },
            None => judge(index, z, opts.sample_len)?,
        };
        verdicts.push(v);
    }
    if let Some(i) = opts.root_index {
        let v = verdicts
            .get(i)
            .ok_or_else(|| Error::Usage(format!("root index {i} out of range 0..{}", verdicts.len())))?;
        return Ok(Selection { z: v.z, index: i, ambiguous: false, manual: true, verdicts });
    }
    let classes: Vec<&RootVerdict> = verdicts.iter().filter(|v| v.accepted && v.z.im >= 0.0).collect();
    let best = classes.iter().min_by(|a, b| a.abs_z.total_cmp(&b.abs_z)).ok_or_else(|| {
        let reasons: Vec<String> = verdicts
            .iter()
            .map(|v| format!("z = {}: {}", crate::linalg::fmt_cx(v.z, 6), v.reason.clone().unwrap_or_default()))
            .collect();
        Error::NoGeometricRoot(reasons.join("; "))
    })?;
    Ok(Selection {
        z: best.z,
        index: best.index,
        ambiguous: classes.len() > 1,
        manual: false,
        verdicts: verdicts.clone(),
    })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct KnotReport {
    pub two_bridge: TwoBridge,
    pub poly: IntPoly,
    pub roots: RootSet,
    pub selection: Selection,
    pub z: Cx,
    /// Minimal polynomial of `z`, a factor of `poly`.
    pub min_poly: Option<IntPoly>,
    /// `J(A, W(z))`, which equals `|z|`.
    pub jreport: JReport,
    pub abs_z: f64,
    /// `√|z|`, an upper bound for the waist size.
    pub waist_bound: f64,
    pub z_bound_holds: bool,
    pub relation_residual: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LinkReport {
    pub two_bridge: TwoBridge,
    pub raw_poly: IntPoly,
    pub poly: IntPoly,
    pub roots: RootSet,
    pub selection: Selection,
    pub z: Cx,
    /// Minimal polynomial of `z`, a factor of `poly`.
    pub min_poly: Option<IntPoly>,
    /// `J(A, B(z))`, which equals `|z|²`.
    pub jreport: JReport,
    pub abs_z_sq: f64,
    /// `|z|`, an upper bound for the waist size.
    pub waist_bound: f64,
    pub z_bound_holds: bool,
    pub relation_residual: f64,
}

pub fn knot_jreport(tb: &TwoBridge, opts: &SelectionOptions) -> Result<KnotReport> {
    let poly = knot_poly(tb)?;
    let roots = crate::roots::solve_roots(&poly)?;
    let selection = select_geometric_root(&roots, opts)?;
    let z = selection.z;
    let w = word_matrix(tb)?;
    let wz = w.eval(z);
    let jreport = jorgensen_pair(&Mat2::translation(ONE), &wz);
    Ok(KnotReport {
        two_bridge: tb.clone(),
        relation_residual: relation_residual(tb, &w, z),
        min_poly: minimal_factor(&poly, &roots, z)?,
        poly,
        roots,
        selection,
        z,
        jreport,
        abs_z: z.norm(),
        waist_bound: z.norm().sqrt(),
        z_bound_holds: z.norm() < 4.0,
    })
}

pub fn link_jreport(tb: &TwoBridge, opts: &SelectionOptions) -> Result<LinkReport> {
    let LinkPoly { raw, normalized } = link_poly(tb)?;
    let roots = crate::roots::solve_roots(&normalized)?;
    let selection = select_geometric_root(&roots, opts)?;
    let z = selection.z;
    let w = word_matrix(tb)?;
    let jreport = jorgensen_pair(&Mat2::translation(ONE), &Mat2::lower(z));
    Ok(LinkReport {
        two_bridge: tb.clone(),
        relation_residual: relation_residual(tb, &w, z),
        raw_poly: raw,
        min_poly: minimal_factor(&normalized, &roots, z)?,
        poly: normalized,
        roots,
        selection,
        z,
        jreport,
        abs_z_sq: z.norm_sqr(),
        waist_bound: z.norm(),
        z_bound_holds: z.norm() < 4.0,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::cx;
    use crate::roots::solve_roots;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::new(c.to_vec())
    }

    #[test]
    fn eps_sequences() {
        assert_eq!(normalize(5, 3).unwrap().eps(), &[1, -1, -1, 1]);
        assert_eq!(normalize(7, 3).unwrap().eps(), &[1, 1, -1, -1, 1, 1]);
        let l = normalize(8, 3).unwrap();
        assert_eq!(l.eps(), &[1, 1, -1, -1, -1, 1, 1]);
        assert_eq!(l.kind(), BridgeKind::Link);
        assert_eq!(normalize(5, 3).unwrap().kind(), BridgeKind::Knot);
    }

    #[test]
    fn normalization_errors() {
        assert_eq!(normalize(6, 3), Err(Error::InvalidPair { p: 6, q: 3 }));
        assert!(matches!(normalize(5, 5), Err(Error::Usage(_))));
        assert!(matches!(normalize(1, 0), Err(Error::Usage(_))));
        let m = normalize(7, 4).unwrap();
        assert_eq!((m.q(), m.input_q()), (3, 4));
    }

    #[test]
    fn knot_polynomials() {
        assert_eq!(knot_poly(&normalize(5, 3).unwrap()).unwrap(), p(&[1, -1, 1]));
        assert_eq!(knot_poly(&normalize(7, 3).unwrap()).unwrap(), p(&[1, 2, 1, 1]));
        assert_eq!(knot_poly(&normalize(9, 5).unwrap()).unwrap(), p(&[1, -2, 3, -1, 1]));
        assert!(matches!(knot_poly(&normalize(8, 3).unwrap()), Err(Error::Usage(_))));
    }

    #[test]
    fn link_polynomials() {
        let l = link_poly(&normalize(8, 3).unwrap()).unwrap();
        assert_eq!(l.raw, p(&[0, 0, -2, -2, -1]));
        assert_eq!(l.normalized, p(&[2, 2, 1]));
        let l = link_poly(&normalize(4, 1).unwrap()).unwrap();
        assert_eq!(l.raw, p(&[0, 2, 1]));
        assert_eq!(l.normalized, p(&[2, 1]));
        assert!(matches!(link_poly(&normalize(7, 3).unwrap()), Err(Error::Usage(_))));
    }

    #[test]
    fn oracle_examples() {
        assert_eq!(subset_oracle_poly(&normalize(5, 3).unwrap()).unwrap(), p(&[1, -1, 1]));
        assert_eq!(subset_oracle_poly(&normalize(7, 3).unwrap()).unwrap(), p(&[1, 2, 1, 1]));
        assert_eq!(subset_oracle_poly(&normalize(8, 3).unwrap()).unwrap(), p(&[0, 0, -2, -2, -1]));
        assert!(matches!(subset_oracle_poly(&normalize(15, 11).unwrap()), Err(Error::SizeLimit(_))));
    }

    #[test]
    fn word_matrix_relations() {
        let tb = normalize(5, 3).unwrap();
        let z = cx(0.5, 3f64.sqrt() / 2.0);
        assert!(relation_residual(&tb, &word_matrix(&tb).unwrap(), z) <= 1e-9);
        let tb = normalize(8, 3).unwrap();
        assert!(relation_residual(&tb, &word_matrix(&tb).unwrap(), cx(-1.0, -1.0)) <= 1e-9);
        let tb = normalize(4, 1).unwrap();
        assert!(relation_residual(&tb, &word_matrix(&tb).unwrap(), cx(-2.0, 0.0)) <= 1e-9);
    }

    #[test]
    fn geometric_roots() {
        let opts = SelectionOptions::default();
        let r = knot_jreport(&normalize(5, 3).unwrap(), &opts).unwrap();
        assert!((r.z - cx(0.5, 3f64.sqrt() / 2.0)).norm() < 1e-12);
        assert!((r.jreport.value - 1.0).abs() < 1e-9);
        let r = knot_jreport(&normalize(7, 3).unwrap(), &opts).unwrap();
        assert!((r.abs_z - 1.32471796).abs() < 1e-8);
        let r = link_jreport(&normalize(8, 3).unwrap(), &opts).unwrap();
        assert!((r.jreport.value - 2.0).abs() < 1e-9);
        assert!((r.waist_bound - 2f64.sqrt()).abs() < 1e-12);
        assert!(matches!(link_jreport(&normalize(4, 1).unwrap(), &opts), Err(Error::NoGeometricRoot(_))));
    }

    #[test]
    fn manual_root_choice() {
        let tb = normalize(7, 3).unwrap();
        let rs = solve_roots(&knot_poly(&tb).unwrap()).unwrap();
        let s = select_geometric_root(&rs, &SelectionOptions { root_index: Some(0), ..Default::default() }).unwrap();
        assert!(s.manual && s.z.im == 0.0);
        assert!(select_geometric_root(&rs, &SelectionOptions { root_index: Some(9), ..Default::default() }).is_err());
    }

    #[test]
    fn minimal_factor_of_reducible_polynomials() {
        let opts = SelectionOptions::default();
        for (p_, q, want) in [(15, 11, vec![1, 4, -4, 1]), (21, 13, vec![1, -1, 3, -2, 1]), (7, 3, vec![1, 2, 1, 1])] {
            let r = knot_jreport(&normalize(p_, q).unwrap(), &opts).unwrap();
            assert_eq!(r.min_poly, Some(IntPoly::new(want)), "({p_},{q})");
        }
        let r = link_jreport(&normalize(8, 3).unwrap(), &opts).unwrap();
        assert_eq!(r.min_poly, Some(IntPoly::new(vec![2, 2, 1])));
        let p = IntPoly::new(vec![-2, 0, 1]).checked_mul(&IntPoly::new(vec![3, 0, 2])).unwrap();
        let rs = solve_roots(&p).unwrap();
        let z = Cx::new(0.0, 1.5f64.sqrt());
        assert_eq!(minimal_factor(&p, &rs, z).unwrap(), Some(IntPoly::new(vec![3, 0, 2])));
        assert_eq!(minimal_factor(&p, &rs, Cx::new(5.0, 0.0)).unwrap(), None);
    }

    fn coprime_pairs(max_p: u64) -> Vec<(u64, u64)> {
        (2..=max_p).flat_map(|p| (1..p).filter(move |&q| gcd(p, q) == 1).map(move |q| (p, q))).collect()
    }

    #[test]
    fn dp_matches_oracle_up_to_eleven() {
        for (p_, q) in coprime_pairs(11) {
            let tb = normalize(p_, q).unwrap();
            match raw_poly(&tb) {
                Ok(dp) => assert_eq!(dp, subset_oracle_poly(&tb).unwrap(), "({p_},{q})"),
                Err(Error::DegenerateLink { .. }) => assert!(subset_oracle_poly(&tb).unwrap().is_zero()),
                Err(e) => panic!("{e}"),
            }
        }
    }

    #[test]
    fn knot_poly_structure() {
        for (p_, q) in coprime_pairs(25).into_iter().filter(|(p, _)| p % 2 == 1) {
            let tb = normalize(p_, q).unwrap();
            let d = knot_poly(&tb).unwrap();
            assert!(tb.is_palindrome(), "({p_},{q})");
            assert_eq!(d.coeff(0), 1);
            let prod: i64 = tb.eps().iter().map(|&e| e as i64).product();
            assert_eq!(d.leading(), prod);
            assert_eq!(d.degree(), Some(((p_ - 1) / 2) as usize));
            // The word matrix agrees with the polynomial at every root.
            let w = word_matrix(&tb).unwrap();
            for r in solve_roots(&d).unwrap().roots {
                let wz = w.eval(r.z);
                assert!(relation_residual(&tb, &w, r.z) <= 1e-6, "({p_},{q}) at {}", r.z);
                assert!(wz.d().norm() <= 1e-6);
                assert!((wz.c().norm_sqr() - r.z.norm()).abs() <= 1e-6);
            }
        }
    }

    #[test]
    fn link_relation_at_roots() {
        for (p_, q) in coprime_pairs(16).into_iter().filter(|(p, _)| p % 2 == 0) {
            let tb = normalize(p_, q).unwrap();
            let Ok(l) = link_poly(&tb) else { continue };
            let w = word_matrix(&tb).unwrap();
            if l.normalized.degree().unwrap_or(0) == 0 {
                continue;
            }
            for r in solve_roots(&l.normalized).unwrap().roots {
                assert!(relation_residual(&tb, &w, r.z) <= 1e-6, "({p_},{q}) at {}", r.z);
            }
        }
    }

    proptest! {
        #[test]
        fn eps_palindrome_for_odd_q(p_ in 3u64..200, q in 1u64..200) {
            prop_assume!(q < p_ && gcd(p_, q) == 1 && q % 2 == 1);
            let tb = normalize(p_, q).unwrap();
            let e = tb.eps();
            for i in 1..p_ as usize {
                prop_assert_eq!(e[i - 1], e[p_ as usize - i - 1]);
            }
        }
    }
}
