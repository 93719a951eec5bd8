//! Integer polynomials: parsing, exact division and all complex roots.

use jnum::poly::IntPoly;
use jnum::roots::solve_roots;

fn main() -> jnum::Result<()> {
    let p: IntPoly = "1,4,-2,6,-19,18,-7,1".parse()?;
    let f: IntPoly = "1,4,-4,1".parse()?;
    println!("p = {p}");
    match p.div_exact(&f)? {
        Some(q) => println!("p = ({f}) * ({q})"),
        None => println!("{f} does not divide p"),
    }
    let rs = solve_roots(&p)?;
    for r in &rs.roots {
        println!("  {:+.12}  (error bound {:.1e})", r.z, r.error_bound);
    }
    println!("max residual bound {:.1e}", rs.residual_bound());
    Ok(())
}
