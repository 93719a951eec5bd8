//! The groups G(θ, k): J(A, B), invariant trace field and identification.
//!
//! `cargo run --example gtk_families -- 1/2 0.7071067811865476`

use jnum::arith::{invariant_trace_field_generators, recognize_field, DEFAULT_COEFF_BOUND};
use jnum::catalog::{gtk_families, gtk_generators, identify_gtk, GtkParams};
use jnum::linalg::jorgensen_value;

fn describe(p: &GtkParams) -> jnum::Result<()> {
    let g = gtk_generators(p);
    let (a, b) = (g.mats()[0], g.mats()[1]);
    let field = recognize_field(&invariant_trace_field_generators(&a, &b)?, DEFAULT_COEFF_BOUND);
    let ident = identify_gtk(p).map(|m| m.identification).unwrap_or_else(|| "not a listed family".into());
    println!(
        "θ = π·{}/{}, k = {:.6}: J = {:.9}, field {}, {ident}",
        p.theta_num,
        p.theta_den,
        p.k,
        jorgensen_value(&a, &b),
        field.map_or("not quadratic imaginary".into(), |f| format!("Q(√-{})", f.d())),
    );
    Ok(())
}

fn main() -> jnum::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    if let [theta, k] = args.as_slice() {
        return describe(&GtkParams::parse(theta, k)?);
    }
    for fam in gtk_families() {
        let (_, p) = fam.samples()[0];
        describe(&p)?;
    }
    Ok(())
}
