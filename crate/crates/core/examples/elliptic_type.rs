//! Arithmeticity conditions for groups with an elliptic generator of order n.

use jnum::arith::{elliptic_j_value, elliptic_type_check, EllipticCandidate, ELLIPTIC_ORDERS};

fn main() -> jnum::Result<()> {
    for n in ELLIPTIC_ORDERS {
        println!("n = {n:>2}: J = {:.12}", elliptic_j_value(n));
    }
    let candidates = [
        ("n = 6", EllipticCandidate::new(6, 5.0)),
        ("n = 7, tr^2 B = 5", EllipticCandidate::new(7, 5.0).with_conjugates(&[5.0, 5.0])),
    ];
    for (name, c) in candidates {
        let r = elliptic_type_check(&c)?;
        println!("{name}: overall {}", r.overall);
        for cond in &r.conditions {
            println!("  ({}) {:?}: {}", cond.number, cond.status, cond.detail);
        }
    }
    Ok(())
}
