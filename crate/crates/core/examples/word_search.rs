//! Word enumeration over the figure-eight generators: element counts, the
//! smallest trace defect, the shortest geodesic and the inequality sweep.

use jnum::catalog::fig8_generators;
use jnum::words::{distinct_elements, inequality_sweep, min_loxodromic_defect, reduced_word_count, shortest_geodesic};

fn main() -> jnum::Result<()> {
    let g = fig8_generators();
    for len in 1..=6 {
        let distinct = distinct_elements(&g, len)?.len();
        println!("length <= {len}: {} reduced words, {distinct} distinct elements", reduced_word_count(2, len));
    }
    let m = min_loxodromic_defect(&g, 8)?;
    println!("min |tr^2 X - 4| over loxodromics to length 8: {:.9} at {}", m.value, g.render(&m.word));
    let s = shortest_geodesic(&g, 8)?;
    println!("shortest geodesic {} with length {:.9}", g.render(&s.word), s.translation_length);
    let sweep = inequality_sweep(&g, 4)?;
    if let Some(w) = &sweep.minimum {
        println!(
            "{} pairs checked; least J = {:.9} at ({}, {})",
            sweep.pairs,
            w.report.value,
            g.render(&w.words.0),
            g.render(&w.words.1)
        );
    }
    Ok(())
}
