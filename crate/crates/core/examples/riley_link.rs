//! Two-bridge links: c_n, its normalized form, and J = |z|^2.
//!
//! `cargo run --example riley_link -- 10/3`

use jnum::riley::{link_jreport, SelectionOptions, TwoBridge};

fn main() -> jnum::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let inputs = if args.is_empty() { vec!["8/3".to_string(), "4/1".into(), "12/5".into()] } else { args };
    for s in inputs {
        let tb = TwoBridge::parse(&s)?;
        match link_jreport(&tb, &SelectionOptions::default()) {
            Ok(r) => println!(
                "{tb}: c_n = {}, normalized {}, z = {:.9}, J = {:.9}",
                r.raw_poly, r.poly, r.z, r.jreport.value
            ),
            Err(e) => println!("{tb}: {e}"),
        }
    }
    Ok(())
}
