//! Generators of PSL2(O_d) and their defining relators.

use jnum::catalog::{bianchi_generators, bianchi_relator_texts, BIANCHI_DS};

fn main() -> jnum::Result<()> {
    for d in BIANCHI_DS {
        let g = bianchi_generators(d)?;
        println!("PSL2(O_{d}) generated by {}", g.names().join(", "));
        for text in bianchi_relator_texts(d)? {
            let m = g.eval_str(text)?;
            let dev = m.dist(&jnum::linalg::Mat2::IDENTITY).min(m.dist(&-jnum::linalg::Mat2::IDENTITY));
            println!("  {text:<16} distance from ±I {dev:.1e}");
        }
    }
    Ok(())
}
