//! Built-in generator sets and the embedded reference tables.
//!
//! Tables live as JSON under `fixtures/` and are compiled in. Nothing here
//! recomputes a table value; the suites in [`crate::verify`] do that and
//! report the difference.

use std::f64::consts::PI;
use std::sync::OnceLock;

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::arith::QuadImagField;
use crate::error::{Error, Result};
use crate::linalg::{cis, cx, Cx, Mat2, I, ONE, ZERO};
use crate::poly::IntPoly;
use crate::riley::{gcd, riley_generators};
use crate::tolerance::tolerances;
use crate::words::{GeneratorSet, Word};

pub const ARITHCOMP_JSON: &str = include_str!("../fixtures/arithcomp.json");
pub const KNOT_TABLE_JSON: &str = include_str!("../fixtures/knot_table.json");
pub const GTK_FAMILIES_JSON: &str = include_str!("../fixtures/gtk_families.json");
pub const BIANCHI_JSON: &str = include_str!("../fixtures/bianchi.json");

pub const BIANCHI_DS: [u64; 5] = [1, 2, 3, 7, 11];

/// `[[1, 1], [0, 1]]`.
pub fn a_matrix() -> Mat2 {
    Mat2::translation(ONE)
}

/// `[[0, −1], [1, 0]]`.
pub fn s_matrix() -> Mat2 {
    Mat2::from_entries_unchecked(ZERO, -ONE, ONE, ZERO)
}

/// A named generator set with the values a reference table claims for it.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CatalogEntry {
    pub label: String,
    pub generators: GeneratorSet,
    pub expected_j: Option<f64>,
    pub expected_field_d: Option<u64>,
    pub provenance: String,
    /// The table's defining parameter (c entry, Riley z, σ) when it has one.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub parameter: Option<Cx>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub parameter_text: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub min_poly: Option<IntPoly>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alpha: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub two_bridge: Option<(u64, u64)>,
}

impl CatalogEntry {
    fn new(label: impl Into<String>, generators: GeneratorSet, provenance: impl Into<String>) -> Self {
        CatalogEntry {
            label: label.into(),
            generators,
            expected_j: None,
            expected_field_d: None,
            provenance: provenance.into(),
            parameter: None,
            parameter_text: None,
            min_poly: None,
            alpha: None,
            two_bridge: None,
        }
    }

    fn with_j(mut self, j: f64) -> Self {
        self.expected_j = Some(j);
        self
    }

    fn with_d(mut self, d: Option<u64>) -> Self {
        self.expected_field_d = d;
        self
    }

    /// The first two generators.
    pub fn pair(&self) -> (Mat2, Mat2) {
        (self.generators.mats()[0], self.generators.mats()[1])
    }
}

fn parse_fixture<T: DeserializeOwned>(name: &str, text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Fixture(format!("{name}: {e}")))
}

fn embedded<T: DeserializeOwned>(cell: &'static OnceLock<T>, name: &str, text: &str) -> &'static T {
    cell.get_or_init(|| parse_fixture(name, text).unwrap_or_else(|e| panic!("embedded fixture is malformed: {e}")))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Table<T> {
    pub table: String,
    pub description: String,
    pub entries: Vec<T>,
}

// ---------------------------------------------------------------------------
// Arithmetic groups with a parabolic generator

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ArithcompRow {
    pub label: String,
    pub c_text: String,
    pub c: Cx,
    /// `parabolic` or `elliptic order N`.
    pub b_type: String,
    #[serde(rename = "expected_J")]
    pub expected_j: f64,
    pub field_d: u64,
    pub provenance: String,
}

impl ArithcompRow {
    /// Order of the elliptic generator, `None` when parabolic.
    pub fn elliptic_order(&self) -> Result<Option<u32>> {
        if self.b_type == "parabolic" {
            return Ok(None);
        }
        self.b_type
            .strip_prefix("elliptic order ")
            .and_then(|s| s.parse().ok())
            .map(Some)
            .ok_or_else(|| Error::Fixture(format!("bad b_type {:?}", self.b_type)))
    }

    /// `B` with lower-left entry `c`: `[[1,0],[c,1]]` when parabolic,
    /// `[[0, −1/c], [c, 2cos(π/m)]]` when elliptic of order `m`.
    pub fn b_matrix(&self) -> Result<Mat2> {
        match self.elliptic_order()? {
            None => Ok(Mat2::lower(self.c)),
            Some(m) => Mat2::new(ZERO, -self.c.inv(), self.c, cx(2.0 * (PI / m as f64).cos(), 0.0)),
        }
    }
}

pub fn arithcomp_rows() -> &'static [ArithcompRow] {
    static CELL: OnceLock<Table<ArithcompRow>> = OnceLock::new();
    &embedded(&CELL, "arithcomp.json", ARITHCOMP_JSON).entries
}

/// The sixteen arithmetic groups `⟨A, B⟩` with `B` parabolic or elliptic.
pub fn arithcomp_table() -> Vec<CatalogEntry> {
    arithcomp_rows()
        .iter()
        .map(|r| {
            let b = r.b_matrix().expect("fixture rows are validated by tests");
            let gens = GeneratorSet::from_pairs(&[("A", a_matrix()), ("B", b)]).expect("two generators");
            let mut e = CatalogEntry::new(r.label.clone(), gens, r.provenance.clone())
                .with_j(r.expected_j)
                .with_d(Some(r.field_d));
            e.parameter = Some(r.c);
            e.parameter_text = Some(r.c_text.clone());
            e
        })
        .collect()
}

// ---------------------------------------------------------------------------
// Two-bridge knot table

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct KnotRow {
    pub label: String,
    pub p: u64,
    pub q: u64,
    pub min_poly: IntPoly,
    pub z: Cx,
    #[serde(rename = "J")]
    pub j: f64,
    pub alpha: f64,
    pub provenance: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GeodesicBound {
    pub constant: f64,
    pub text: String,
    pub provenance: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct KnotTable {
    pub table: String,
    pub description: String,
    pub geodesic_bound: GeodesicBound,
    pub entries: Vec<KnotRow>,
}

pub fn knot_table_doc() -> &'static KnotTable {
    static CELL: OnceLock<KnotTable> = OnceLock::new();
    embedded(&CELL, "knot_table.json", KNOT_TABLE_JSON)
}

/// The four two-bridge knots with tabulated `z`, `J(K)` and α. Generators
/// are the Riley pair at the tabulated `z`.
pub fn knot_table() -> Vec<CatalogEntry> {
    knot_table_doc()
        .entries
        .iter()
        .map(|r| {
            let mut e = CatalogEntry::new(r.label.clone(), riley_generators(r.z), r.provenance.clone()).with_j(r.j);
            e.parameter = Some(r.z);
            e.min_poly = Some(r.min_poly.clone());
            e.alpha = Some(r.alpha);
            e.two_bridge = Some((r.p, r.q));
            e
        })
        .collect()
}

// ---------------------------------------------------------------------------
// Parabolic-type groups G_{θ,k}

/// `θ = π·theta_num/theta_den` with `0 ≤ θ ≤ 2π`, and real `k`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GtkParams {
    pub theta_num: i64,
    pub theta_den: u64,
    pub k: f64,
}

impl GtkParams {
    pub fn new(theta_num: i64, theta_den: u64, k: f64) -> Result<Self> {
        if theta_den == 0 {
            return Err(Error::Usage("θ denominator must be at least 1".into()));
        }
        if theta_num < 0 || theta_num as u64 > 2 * theta_den {
            return Err(Error::Usage(format!("θ = π·{theta_num}/{theta_den} is outside [0, 2π]")));
        }
        if !k.is_finite() {
            return Err(Error::Usage("k must be finite".into()));
        }
        Ok(GtkParams { theta_num, theta_den, k })
    }

    /// Parses `NUM/DEN` (multiples of π) and a decimal `k`.
    pub fn parse(theta: &str, k: &str) -> Result<Self> {
        let (n, d) = theta.split_once('/').unwrap_or((theta, "1"));
        let num = n.trim().parse().map_err(|_| Error::Usage(format!("bad θ numerator {n:?}")))?;
        let den = d.trim().parse().map_err(|_| Error::Usage(format!("bad θ denominator {d:?}")))?;
        let k = k.trim().parse().map_err(|_| Error::Usage(format!("bad k {k:?}")))?;
        GtkParams::new(num, den, k)
    }

    pub fn theta(&self) -> f64 {
        PI * self.theta_num as f64 / self.theta_den as f64
    }

    /// `θ + π`, wrapped into `[0, 2π]`.
    pub fn shifted_by_pi(&self) -> GtkParams {
        let den = self.theta_den as i64;
        let mut num = self.theta_num + den;
        if num > 2 * den {
            num -= 2 * den;
        }
        GtkParams { theta_num: num, ..*self }
    }
}

/// `B_{θ,k} = [[0, −ie^{−iθ}], [−ie^{iθ}, 2ke^{iθ}]]`.
pub fn gtk_b(p: &GtkParams) -> Mat2 {
    let e = cis(p.theta());
    Mat2::from_entries_unchecked(ZERO, -I * e.conj(), -I * e, 2.0 * p.k * e)
}

/// `{A, B_{θ,k}}`.
pub fn gtk_generators(p: &GtkParams) -> GeneratorSet {
    GeneratorSet::from_pairs(&[("A", a_matrix()), ("B", gtk_b(p))]).expect("two generators")
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GtkFamily {
    pub label: String,
    pub theta_num: i64,
    pub theta_den: u64,
    pub k_text: String,
    /// Fixed `k`, or `None` for the integer families `k = k_step·n`.
    #[serde(default)]
    pub k: Option<f64>,
    #[serde(default)]
    pub k_step: Option<f64>,
    pub arithmetic: bool,
    pub field_d: Option<u64>,
    pub identification: String,
    #[serde(default)]
    pub identification_odd: Option<String>,
    #[serde(default)]
    pub identification_even: Option<String>,
    pub notes: Vec<String>,
    pub provenance: String,
}

impl GtkFamily {
    /// Parameters of the member with index `n` (ignored for fixed `k`).
    pub fn params(&self, n: i64) -> GtkParams {
        let k = self.k.unwrap_or_else(|| self.k_step.unwrap_or(0.0) * n as f64);
        GtkParams { theta_num: self.theta_num, theta_den: self.theta_den, k }
    }

    /// Members exercised by the suites: `n ∈ {−2, …, 3}` for integer
    /// families, the single member otherwise.
    pub fn samples(&self) -> Vec<(Option<i64>, GtkParams)> {
        if self.k.is_some() {
            vec![(None, self.params(0))]
        } else {
            (-2..=3).map(|n| (Some(n), self.params(n))).collect()
        }
    }

    pub fn identification_for(&self, n: Option<i64>) -> &str {
        match n {
            Some(n) if n % 2 != 0 => self.identification_odd.as_deref().unwrap_or(&self.identification),
            Some(_) => self.identification_even.as_deref().unwrap_or(&self.identification),
            None => &self.identification,
        }
    }
}

pub fn gtk_families() -> &'static [GtkFamily] {
    static CELL: OnceLock<Table<GtkFamily>> = OnceLock::new();
    &embedded(&CELL, "gtk_families.json", GTK_FAMILIES_JSON).entries
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GtkMatch {
    pub family: GtkFamily,
    pub n: Option<i64>,
    /// True when θ matched only after the `θ ↦ θ + π` identification.
    pub shifted: bool,
    pub identification: String,
}

/// Finds the listed family containing `p`, using `G_{θ+π,k} = G_{θ,k}`.
pub fn identify_gtk(p: &GtkParams) -> Option<GtkMatch> {
    let eps = tolerances().cx;
    for fam in gtk_families() {
        let (a, b) = (p.theta_num as i128 * fam.theta_den as i128, fam.theta_num as i128 * p.theta_den as i128);
        let modulus = p.theta_den as i128 * fam.theta_den as i128;
        let diff = a - b;
        if diff.rem_euclid(modulus) != 0 {
            continue;
        }
        let shifted = diff != 0;
        let n = match (fam.k, fam.k_step) {
            (Some(k), _) if (p.k - k).abs() <= eps => None,
            (None, Some(step)) => {
                let n = (p.k / step).round();
                if (p.k - n * step).abs() > eps {
                    continue;
                }
                Some(n as i64)
            }
            _ => continue,
        };
        return Some(GtkMatch {
            identification: fam.identification_for(n).to_string(),
            family: fam.clone(),
            n,
            shifted,
        });
    }
    None
}

// ---------------------------------------------------------------------------
// Normal form B = [[0, −1/σ], [σ, λ]]

/// `{A, [[0, −1/σ], [σ, λ]]}`; `J(A, B) = |σ²|`.
pub fn sigma_lambda_generators(sigma: Cx, lambda: Cx) -> Result<GeneratorSet> {
    if sigma.norm() <= tolerances().cx {
        return Err(Error::Usage("σ must be nonzero".into()));
    }
    let b = Mat2::new(ZERO, -sigma.inv(), sigma, lambda)?;
    GeneratorSet::from_pairs(&[("A", a_matrix()), ("B", b)])
}

/// σ with `Re σ > 0`, or `Re σ = 0` and `Im σ > 0`, whose square is a unit
/// of `O_d`.
pub fn sigma_candidates(d: u64) -> Vec<Cx> {
    match d {
        1 => vec![ONE, I, cis(PI / 4.0), cis(-PI / 4.0)],
        3 => vec![ONE, I, cis(PI / 6.0), cis(-PI / 6.0), cis(PI / 3.0), cis(-PI / 3.0)],
        _ => vec![ONE, I],
    }
}

/// The J = 1 groups that are not of the form `G_{θ,k}`.
pub fn sigma_lambda_groups() -> Vec<CatalogEntry> {
    let prov = "parabolic-type classification, normal form B = [[0,-1/σ],[σ,λ]]";
    let mut out = Vec::new();
    for d in [3u64, 7, 11] {
        let lambda = QuadImagField::new(d).expect("squarefree").omega();
        let gens = sigma_lambda_generators(ONE, lambda).expect("σ = 1");
        let mut e = CatalogEntry::new(format!("PSL2(O_{d})"), gens, prov).with_j(1.0).with_d(Some(d));
        e.parameter = Some(ONE);
        e.parameter_text = Some(format!("σ = 1, λ = (1+√-{d})/2"));
        out.push(e);
    }
    let sigma = cis(-PI / 6.0);
    let gens = sigma_lambda_generators(sigma, I).expect("σ ≠ 0");
    let mut e = CatalogEntry::new("PGL2(O_3)", gens, prov).with_j(1.0).with_d(Some(3));
    e.parameter = Some(sigma);
    e.parameter_text = Some("σ = e^{-iπ/6}, λ = i".into());
    out.push(e);
    out
}

// ---------------------------------------------------------------------------
// Bianchi groups

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BianchiRow {
    pub d: u64,
    pub group: String,
    pub relators: Vec<String>,
    pub provenance: String,
}

pub fn bianchi_rows() -> &'static [BianchiRow] {
    static CELL: OnceLock<Table<BianchiRow>> = OnceLock::new();
    &embedded(&CELL, "bianchi.json", BIANCHI_JSON).entries
}

fn bianchi_row(d: u64) -> Result<&'static BianchiRow> {
    bianchi_rows()
        .iter()
        .find(|r| r.d == d)
        .ok_or_else(|| Error::Usage(format!("d = {d} is not one of 1, 2, 3, 7, 11")))
}

/// `{A, S, T}` generating `PSL₂(O_d)`.
pub fn bianchi_generators(d: u64) -> Result<GeneratorSet> {
    bianchi_row(d)?;
    let omega = QuadImagField::new(d)?.omega();
    GeneratorSet::from_pairs(&[("A", a_matrix()), ("S", s_matrix()), ("T", Mat2::translation(omega))])
}

pub fn bianchi_relator_texts(d: u64) -> Result<&'static [String]> {
    Ok(&bianchi_row(d)?.relators)
}

pub fn bianchi_relations(d: u64) -> Result<Vec<Word>> {
    let gens = bianchi_generators(d)?;
    bianchi_relator_texts(d)?.iter().map(|r| gens.parse_word(r)).collect()
}

// ---------------------------------------------------------------------------
// Further J = 1 pairs

/// Figure-eight knot group generators `A`, `[[1,0],[e^{iπ/3},1]]`.
pub fn fig8_generators() -> GeneratorSet {
    GeneratorSet::from_pairs(&[("A", a_matrix()), ("B", Mat2::lower(cis(PI / 3.0)))]).expect("two generators")
}

/// An elliptic pair with `J = 1`: `X` a rotation of order `n` (trace
/// `2cos(π/n)`) and `Y = diag(t, 1/t)` chosen so `tr[X,Y] = tr²X − 1`.
pub fn elliptic_pair(n: u32) -> Result<GeneratorSet> {
    if n < 7 {
        return Err(Error::Usage(format!("order {n} < 7 admits no elliptic J = 1 pair")));
    }
    let phi = PI / n as f64;
    let (s, c) = phi.sin_cos();
    let x = Mat2::real(c, -s, s, c)?;
    let gap = ((4.0 * c * c - 3.0) / (s * s)).sqrt();
    let t = (gap + (gap * gap + 4.0).sqrt()) / 2.0;
    let y = Mat2::diagonal(cx(t, 0.0))?;
    GeneratorSet::from_pairs(&[("X", x), ("Y", y)])
}

fn gtk_entries(arithmetic_only: bool) -> Vec<CatalogEntry> {
    let mut out = Vec::new();
    for fam in gtk_families().iter().filter(|f| f.arithmetic || !arithmetic_only) {
        for (n, p) in fam.samples() {
            let label = match n {
                Some(n) => format!("G{} n={n}", fam.label),
                None => format!("G{}", fam.label),
            };
            let mut e =
                CatalogEntry::new(label, gtk_generators(&p), fam.provenance.clone()).with_j(1.0).with_d(fam.field_d);
            e.parameter_text = Some(fam.identification_for(n).to_string());
            out.push(e);
        }
    }
    out
}

fn fig8_entry() -> CatalogEntry {
    let mut e = CatalogEntry::new("figure-eight knot group", fig8_generators(), "figure-eight knot holonomy")
        .with_j(1.0)
        .with_d(Some(3));
    e.parameter = Some(cis(PI / 3.0));
    e
}

/// Every cataloged pair with `J(X, Y) = 1`.
pub fn jorgensen_one_pairs() -> Vec<CatalogEntry> {
    let mut out = vec![fig8_entry()];
    out.extend(gtk_entries(false));
    out.extend(sigma_lambda_groups());
    out.extend(arithcomp_table().into_iter().filter(|e| e.expected_j == Some(1.0)));
    for n in [7u32, 8, 30] {
        let e = CatalogEntry::new(
            format!("elliptic pair, order {n}"),
            elliptic_pair(n).expect("n ≥ 7"),
            "elliptic-type J = 1 construction with tr[X,Y] = 2cos(2π/n) + 1",
        )
        .with_j(1.0);
        out.push(e);
    }
    out
}

/// Every cataloged generating pair of an arithmetic group.
pub fn arithmetic_pairs() -> Vec<CatalogEntry> {
    let mut out = vec![fig8_entry()];
    out.extend(arithcomp_table());
    out.extend(gtk_entries(true));
    out.extend(sigma_lambda_groups());
    out
}

/// Generator sets swept for Jørgensen-inequality violations.
pub fn sweep_sets() -> Vec<(String, GeneratorSet)> {
    let mut out = vec![("figure-eight".to_string(), fig8_generators())];
    for d in BIANCHI_DS {
        out.push((format!("PSL2(O_{d})"), bianchi_generators(d).expect("supported d")));
    }
    out
}

/// `k` values coprime to `n` in `[1, n/2]`, the real embeddings of ℚ(cos 2π/n).
pub fn real_embedding_indices(n: u32) -> Vec<u32> {
    (1..=n / 2).filter(|&k| gcd(k as u64, n as u64) == 1).collect()
}
