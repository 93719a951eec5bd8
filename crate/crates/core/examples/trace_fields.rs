//! Quadratic imaginary field recognition, unit multiples and the discriminant
//! of the quaternion algebra for a few arithmetic pairs.

use jnum::arith::{
    delta_discriminant, invariant_trace_field_generators, recognize_field, recognize_quad_imaginary,
    unit_multiple_check, DEFAULT_COEFF_BOUND,
};
use jnum::catalog::arithmetic_pairs;
use jnum::linalg::{commutator_trace, cx};

fn main() -> jnum::Result<()> {
    for z in [cx(0.5, 3f64.sqrt() / 2.0), cx(1.0, 2f64.sqrt()), cx(0.5, 7f64.sqrt() / 2.0), cx(0.3, 0.1)] {
        println!("{z:.6} -> d = {:?}", recognize_quad_imaginary(z, DEFAULT_COEFF_BOUND));
    }
    for e in arithmetic_pairs() {
        let (x, y) = e.pair();
        let Some(field) = recognize_field(&invariant_trace_field_generators(&x, &y)?, DEFAULT_COEFF_BOUND) else {
            println!("{}: field not recognized", e.label);
            continue;
        };
        let t = commutator_trace(&x, &y) - 2.0;
        let t2 = commutator_trace(&y, &(x * y)) - 2.0;
        println!(
            "{}: {}, tr[X,Y]-2 = {t:.6}, unit multiple under a Nielsen move: {}, delta = {:.6}",
            e.label,
            field.ring_label(),
            unit_multiple_check(t, t2, &field)?,
            delta_discriminant(&x, &y)
        );
    }
    Ok(())
}
