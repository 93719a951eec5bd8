//! Jørgensen values, Möbius classification and fixed points for a few pairs.

use jnum::linalg::{classify, cx, fixed_points, is_nonelementary, jorgensen_pair, Mat2};

fn main() -> jnum::Result<()> {
    let a = Mat2::translation(cx(1.0, 0.0));
    let pairs = [
        ("figure-eight", Mat2::lower(cx(0.5, 3f64.sqrt() / 2.0))),
        ("Whitehead link", Mat2::lower(cx(1.0, 1.0))),
        ("order-4 elliptic", Mat2::new(cx(0.0, 0.0), cx(-1.0, 0.0), cx(1.0, 0.0), cx(2f64.sqrt(), 0.0))?),
    ];
    for (name, b) in pairs {
        let r = jorgensen_pair(&a, &b);
        let k = classify(&b);
        println!("{name}");
        println!("  B = {b}");
        println!("  B is {} (rotation order {:?})", k.kind, k.rotation_order);
        println!("  tr[A,B] = {:.6}, J = {:.6}", r.commutator_trace, r.value);
        println!("  non-elementary: {}", is_nonelementary(&a, &b));
        for p in fixed_points(&b)? {
            println!("  fixed point {p:?}");
        }
    }
    Ok(())
}
