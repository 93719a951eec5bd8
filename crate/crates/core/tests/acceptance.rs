//! Acceptance run: one line per criterion, non-zero exit if any fails.
//!
//! Expected values below are typed in from the published tables, not read
//! from the crate's fixtures, so a fixture typo cannot mask a mismatch.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use jnum::arith::{
    elliptic_j_value, elliptic_type_check, invariant_trace_field_generators, recognize_field, ConditionStatus,
    EllipticCandidate, DEFAULT_COEFF_BOUND,
};
use jnum::catalog::{a_matrix, arithcomp_rows, gtk_generators, GtkParams, BIANCHI_DS};
use jnum::linalg::{cx, jorgensen_value, Cx};
use jnum::poly::IntPoly;
use jnum::riley::{
    knot_jreport, link_jreport, normalize, raw_poly, riley_generators, subset_oracle_poly, BridgeKind, SelectionOptions,
};
use jnum::verify::{
    inequality_sweep_suite, j_one_suite, losid_identity_suite, nielsen_suite, verify_relations, SuiteReport,
};
use jnum::words::{min_loxodromic_defect, shortest_geodesic};

struct Outcome {
    pass: bool,
    detail: String,
}

impl Outcome {
    fn new(pass: bool, detail: impl Into<String>) -> Self {
        Outcome { pass, detail: detail.into() }
    }
}

fn within_budget(elapsed: Duration, budget: Duration) -> Outcome {
    Outcome::new(elapsed < budget, format!("{:.3}s of {:.0}s budget", elapsed.as_secs_f64(), budget.as_secs_f64()))
}

fn suite_outcome(r: &SuiteReport) -> Outcome {
    let counted: Vec<_> = r.checks.iter().filter(|c| !c.informational).collect();
    let ok = counted.iter().filter(|c| c.pass).count();
    let mut detail = format!("{ok}/{} checks", counted.len());
    if let Some(d) = r.max_deviation() {
        detail.push_str(&format!(", max deviation {d:.2e}"));
    }
    for c in r.failures() {
        detail.push_str(&format!("\n      failed: {} (deviation {:?})", c.label, c.deviation));
    }
    Outcome::new(r.pass, detail)
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn poly(text: &str) -> IntPoly {
    text.parse().expect("polynomial literal")
}

// --------------------------------------------------------------------------

fn riley_oracle() -> Outcome {
    let start = Instant::now();
    let mut compared = 0;
    let mut mismatches = Vec::new();
    for p in 2..=9u64 {
        for q in 1..p {
            if gcd(p, q) != 1 {
                continue;
            }
            let tb = normalize(p, q).expect("coprime pair");
            let dp = raw_poly(&tb);
            let oracle = subset_oracle_poly(&tb).expect("oracle in range");
            compared += 1;
            match dp {
                Ok(dp) if dp == oracle => {}
                // c_n can vanish identically; the oracle then gives the zero polynomial too
                Err(jnum::Error::DegenerateLink { .. }) if oracle.is_zero() => {}
                other => mismatches.push(format!("{p}/{q}: dp {other:?} oracle {oracle}")),
            }
        }
    }
    let t = within_budget(start.elapsed(), Duration::from_secs(1));
    let pass = mismatches.is_empty() && t.pass;
    Outcome::new(
        pass,
        format!("{compared} pairs, {} mismatches, {}; {}", mismatches.len(), t.detail, mismatches.join("; ")),
    )
}

struct KnotRef {
    name: &'static str,
    p: u64,
    q: u64,
    min_poly: &'static str,
    z: Cx,
    j: f64,
    alpha: f64,
}

fn knot_refs() -> [KnotRef; 4] {
    [
        KnotRef {
            name: "5_2",
            p: 7,
            q: 3,
            min_poly: "1,2,1,1",
            z: cx(-0.21507985, 1.307141279),
            j: 1.32471796,
            alpha: 4.219276205,
        },
        KnotRef {
            name: "6_1",
            p: 9,
            q: 5,
            min_poly: "1,-2,3,-1,1",
            z: cx(0.104876618, -1.552491820),
            j: 1.55603019,
            alpha: 3.955211258,
        },
        KnotRef {
            name: "7_4",
            p: 15,
            q: 11,
            min_poly: "1,4,-4,1",
            z: cx(2.10278472, 0.665456952),
            j: 2.20556943,
            alpha: 4.434378815,
        },
        KnotRef {
            name: "7_7",
            p: 21,
            q: 13,
            min_poly: "1,-1,3,-2,1",
            z: cx(0.95668457, -1.227185638),
            j: 1.55603019,
            alpha: 5.105997169,
        },
    ]
}

/// The table lists the minimal polynomial of `z`. For 7_4 and 7_7 the
/// polynomial `d_n` has a further factor, so the comparison is made against
/// the irreducible factor of `d_n` that vanishes at the selected root, and
/// the listed polynomial must divide `d_n` exactly.
fn knot_table() -> Outcome {
    let start = Instant::now();
    let mut pass = true;
    let mut lines = Vec::new();
    for k in knot_refs() {
        let tb = normalize(k.p, k.q).expect("knot");
        let r = match knot_jreport(&tb, &SelectionOptions::default()) {
            Ok(r) => r,
            Err(e) => {
                pass = false;
                lines.push(format!("{}: {e}", k.name));
                continue;
            }
        };
        let listed = poly(k.min_poly);
        let factor_ok = r.min_poly.as_ref().is_some_and(|m| *m == listed || *m == listed.neg());
        let divides = matches!(r.poly.div_exact(&listed), Ok(Some(_)));
        let dz = (r.z - k.z).norm().min((r.z - k.z.conj()).norm());
        let dj = (r.jreport.value - k.j).abs();
        let ok = factor_ok && divides && dz <= 1e-6 && dj <= 1e-6;
        pass &= ok;
        let literal = r.poly == listed || r.poly == listed.neg();
        lines.push(format!(
            "{} {}/{}: d_n = {}{}, |dz| {dz:.1e}, |dJ| {dj:.1e}{}",
            k.name,
            k.p,
            k.q,
            r.poly,
            if literal { "" } else { " (listed polynomial is a proper factor)" },
            if ok { "" } else { " MISMATCH" }
        ));
    }
    let t = within_budget(start.elapsed(), Duration::from_secs(1));
    Outcome::new(pass && t.pass, format!("{}\n      {}", t.detail, lines.join("\n      ")))
}

fn figure_eight() -> Outcome {
    let r = match knot_jreport(&normalize(5, 3).unwrap(), &SelectionOptions::default()) {
        Ok(r) => r,
        Err(e) => return Outcome::new(false, e.to_string()),
    };
    let target = cx(0.5, 3f64.sqrt() / 2.0);
    let dz = (r.z - target).norm().min((r.z - target.conj()).norm());
    let dj = (r.jreport.value - 1.0).abs();
    Outcome::new(dj <= 1e-9 && dz <= 1e-9, format!("J = {:.12}, z = {:.12}", r.jreport.value, r.z))
}

fn whitehead() -> Outcome {
    let tb = normalize(8, 3).unwrap();
    assert_eq!(tb.kind(), BridgeKind::Link);
    match link_jreport(&tb, &SelectionOptions::default()) {
        Ok(r) => {
            Outcome::new((r.jreport.value - 2.0).abs() <= 1e-9, format!("J = {:.12}, z = {:.12}", r.jreport.value, r.z))
        }
        Err(e) => Outcome::new(false, e.to_string()),
    }
}

fn bianchi_relations() -> Outcome {
    let mut pass = true;
    let mut parts = Vec::new();
    for d in BIANCHI_DS {
        match verify_relations(d) {
            Ok(r) => {
                pass &= r.pass;
                parts.push(format!("d={d}: {}/{}", r.checks.iter().filter(|c| c.pass).count(), r.checks.len()));
            }
            Err(e) => {
                pass = false;
                parts.push(format!("d={d}: {e}"));
            }
        }
    }
    Outcome::new(pass, parts.join(", "))
}

fn word_identities() -> Outcome {
    suite_outcome(&losid_identity_suite())
}

/// J from the published list, in table order.
fn corollary_table() -> Outcome {
    let (r2, r3) = (2f64.sqrt(), 3f64.sqrt());
    let published = [1.0, 2.0, 3.0, 2.0, 1.0, r2, r3, r2, 2.0, 1.0, 2.0, 1.0, 3.0, 2.0, 1.0, 2.0];
    let rows = arithcomp_rows();
    if rows.len() != published.len() {
        return Outcome::new(false, format!("{} rows, expected {}", rows.len(), published.len()));
    }
    let mut worst: f64 = 0.0;
    let mut bad = Vec::new();
    for (row, &j) in rows.iter().zip(&published) {
        let b = match row.b_matrix() {
            Ok(b) => b,
            Err(e) => return Outcome::new(false, format!("{}: {e}", row.label)),
        };
        let computed = jorgensen_value(&a_matrix(), &b);
        let dev = (computed - j).abs().max((row.c.norm_sqr() - j).abs());
        worst = worst.max(dev);
        if dev > 1e-6 {
            bad.push(row.label.clone());
        }
    }
    Outcome::new(
        bad.is_empty(),
        format!(
            "16 entries, max deviation {worst:.2e}{}",
            if bad.is_empty() { String::new() } else { format!("; off: {}", bad.join(", ")) }
        ),
    )
}

fn inequality_sweep() -> Outcome {
    suite_outcome(&inequality_sweep_suite(5))
}

fn j_one_property() -> Outcome {
    suite_outcome(&j_one_suite())
}

/// Minimum trace defect over loxodromics at length 12, then 14 if needed.
/// The per-knot value of `|tr^2 X - 4|` at the shortest geodesic is shown
/// alongside as a diagnostic.
fn alpha_values() -> Outcome {
    let start = Instant::now();
    let mut pass = true;
    let mut lines = Vec::new();
    for k in knot_refs() {
        let r = match knot_jreport(&normalize(k.p, k.q).unwrap(), &SelectionOptions::default()) {
            Ok(r) => r,
            Err(e) => {
                pass = false;
                lines.push(format!("{}: {e}", k.name));
                continue;
            }
        };
        let gens = riley_generators(r.z);
        let mut len = 12;
        let mut found = min_loxodromic_defect(&gens, len).expect("search");
        if (found.value - k.alpha).abs() > 1e-6 {
            len = 14;
            found = min_loxodromic_defect(&gens, len).expect("search");
        }
        let gap = found.value - k.alpha;
        let ok = gap.abs() <= 1e-6;
        pass &= ok;
        let geo = shortest_geodesic(&gens, 10).expect("search");
        lines.push(format!(
            "{}: {} at length {len} ({}), gap {gap:+.9}; shortest geodesic {} gives {:.9}",
            k.name,
            if ok { "matched" } else { "min" },
            gens.render(&found.word),
            gens.render(&geo.word),
            geo.defect
        ));
    }
    let t = within_budget(start.elapsed(), Duration::from_secs(60));
    Outcome::new(pass && t.pass, format!("{}\n      {}", t.detail, lines.join("\n      ")))
}

fn elliptic_type() -> Outcome {
    let orders = [7u32, 8, 9, 10, 11, 12, 14, 16, 18, 24, 30];
    let worst = orders.iter().map(|&n| (elliptic_j_value(n) - 1.0).abs()).fold(0.0, f64::max);
    let status = |c: EllipticCandidate, k: u8| elliptic_type_check(&c).map(|r| r.status(k)).ok();
    let six = status(EllipticCandidate::new(6, 5.0), 1);
    let seven = || EllipticCandidate::new(7, 5.0).with_conjugates(&[5.0, 5.0]);
    let (c2, c4) = (status(seven(), 2), status(seven(), 4));
    let fail = Some(ConditionStatus::Fail);
    let pass = worst <= 1e-12 && six == fail && c2 == fail && c4 == fail;
    Outcome::new(
        pass,
        format!("max |J-1| {worst:.1e} over 11 orders; n=6 (1): {six:?}; n=7 tr^2B=5 (2): {c2:?}, (4): {c4:?}"),
    )
}

fn field_recognition() -> Outcome {
    let (r2, r3) = (2f64.sqrt(), 3f64.sqrt());
    let arithmetic: [(i64, u64, f64, u64); 10] = [
        (1, 6, r3 / 2.0, 3),
        (1, 6, r3, 3),
        (1, 4, 0.5, 1),
        (1, 4, 1.0, 1),
        (1, 4, 1.5, 1),
        (1, 3, r3 / 2.0, 3),
        (1, 3, r3, 3),
        (1, 2, 0.5, 1),
        (1, 2, r2 / 2.0, 2),
        (1, 2, r3 / 2.0, 3),
    ];
    let recognize = |num: i64, den: u64, k: f64| -> Option<u64> {
        let p = GtkParams::new(num, den, k).ok()?;
        let g = gtk_generators(&p);
        let gens = invariant_trace_field_generators(&g.mats()[0], &g.mats()[1]).ok()?;
        recognize_field(&gens, DEFAULT_COEFF_BOUND).map(|f| f.d())
    };
    let mut bad = Vec::new();
    for (num, den, k, d) in arithmetic {
        let got = recognize(num, den, k);
        if got != Some(d) {
            bad.push(format!("(π·{num}/{den}, {k:.6}) gave {got:?}, expected {d}"));
        }
    }
    let non = recognize(1, 4, 1.0 + r2 / 2.0);
    if non.is_some() {
        bad.push(format!("(π/4, 1+√2/2) gave {non:?}, expected absent"));
    }
    Outcome::new(
        bad.is_empty(),
        format!(
            "8 families (10 members) and one non-arithmetic pair; {}",
            if bad.is_empty() { "all as listed".into() } else { bad.join("; ") }
        ),
    )
}

fn nielsen_modulus() -> Outcome {
    suite_outcome(&nielsen_suite())
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() -> ExitCode {
    let criteria: [Criterion; 13] = [
        ("riley oracle equivalence", riley_oracle),
        ("knot table", knot_table),
        ("figure-eight", figure_eight),
        ("whitehead link", whitehead),
        ("bianchi relations", bianchi_relations),
        ("word identities", word_identities),
        ("corollary J table", corollary_table),
        ("inequality sweep", inequality_sweep),
        ("J = 1 property", j_one_property),
        ("alpha reproduction", alpha_values),
        ("elliptic type", elliptic_type),
        ("field recognition", field_recognition),
        ("nielsen modulus", nielsen_modulus),
    ];
    let mut passed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let out = run();
        passed += out.pass as usize;
        println!("criterion {:>2} {:<26} {}  {}", i + 1, name, if out.pass { "PASS" } else { "FAIL" }, out.detail);
    }
    println!("\n{passed}/{} criteria pass", criteria.len());
    if passed == criteria.len() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
