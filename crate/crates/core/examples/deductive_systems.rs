//! Deductive systems: enumeration, atoms, generation and the lattice they form.
//!
//! `cargo run --example deductive_systems`

use effect_logic::deduction::{atoms, ded_lattice, enumerate_ded, generate};
use effect_logic::fixtures;

fn main() {
    for name in ["E6", "E9"] {
        let e = fixtures::load(name).expect("bundled");
        let all = enumerate_ded(&e).expect("enumerates");
        println!("{name}: {} deductive systems", all.len());
        if all.len() <= 12 {
            for d in &all {
                println!("  {}", e.render(*d));
            }
        }
        let atoms = atoms(&e).expect("atoms");
        let shown: Vec<String> = atoms.iter().map(|a| e.render(*a)).collect();
        println!("  atoms: {}", shown.join(" "));

        let lat = ded_lattice(&e).expect("lattice");
        let c = lat.verify_completeness();
        println!(
            "  complete lattice: {} ({:?}, {} families)",
            c.complete, c.method, c.families_checked
        );
    }

    let e = fixtures::load("E9").expect("bundled");
    for m in [&["a", "d"][..], &["a", "g"], &["0"], &[]] {
        let s = e.subset(m).expect("labels");
        println!(
            "generated by {} = {}",
            e.render(s),
            e.render(generate(&e, s))
        );
    }
}
