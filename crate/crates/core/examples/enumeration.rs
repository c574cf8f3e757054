//! Counts effect algebras by carrier size, labelled and up to isomorphism.
//!
//! `cargo run --release --example enumeration -- 6`

use std::time::Instant;

use effect_logic::enumerate::{automorphism_count, enumerate_effect_algebras};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let max: usize = std::env::args().nth(1).map_or(Ok(5), |s| s.parse())?;
    println!(
        "{:>2} {:>9} {:>6} {:>9} {:>10}",
        "n", "labelled", "iso", "lattices", "time"
    );
    for n in 2..=max {
        let t = Instant::now();
        let r = enumerate_effect_algebras(n, true)?;
        let lattices = r.algebras.iter().filter(|e| e.is_lattice()).count();
        println!(
            "{n:>2} {:>9} {:>6} {:>9} {:>9.2?}",
            r.labeled_count,
            r.iso_count,
            lattices,
            t.elapsed()
        );
        // every class contributes (n-2)!/|Aut| labelled tables
        let fact: usize = (1..=n.saturating_sub(2)).product();
        let orbits: usize = r
            .algebras
            .iter()
            .map(|e| fact / automorphism_count(e))
            .sum();
        assert_eq!(orbits, r.labeled_count);
    }
    Ok(())
}
