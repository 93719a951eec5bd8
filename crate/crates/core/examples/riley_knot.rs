//! Riley polynomial, geometric root and J(K) = |z| for a two-bridge knot.
//!
//! `cargo run --example riley_knot -- 15/11`

use jnum::riley::{knot_jreport, SelectionOptions, TwoBridge};

fn main() -> jnum::Result<()> {
    let arg = std::env::args().nth(1).unwrap_or_else(|| "7/3".into());
    let tb = TwoBridge::parse(&arg)?;
    let r = knot_jreport(&tb, &SelectionOptions::default())?;
    println!("knot {tb}, exponents {:?}", tb.eps());
    println!("d_n = {}  ({})", r.poly, r.poly.to_text());
    if let Some(m) = &r.min_poly {
        if *m != r.poly {
            println!("minimal polynomial of z = {m}");
        }
    }
    for v in &r.selection.verdicts {
        let why = v.reason.as_deref().unwrap_or("");
        println!("  root {}: {:.9}  {}  {why}", v.index, v.z, if v.accepted { "kept" } else { "dropped" });
    }
    println!("z = {:.9}, J(K) = {:.9}", r.z, r.jreport.value);
    println!("waist size <= {:.9}, |z| < 4: {}", r.waist_bound, r.z_bound_holds);
    println!("relation residual {:.1e}", r.relation_residual);
    Ok(())
}
