//! The unsharp contraposition law: where it fails, where it must hold,
//! and how it lines up with the lattice identity on Boolean algebras.
//!
//! `cargo run --example contraposition`

use effect_logic::fixtures;
use effect_logic::laws::{
    boolean_to_ea, check_prop1, check_prop2_equivalence, contraposition_pair,
    counterexample_search, identity_equ1,
};

fn main() {
    let e = fixtures::load("E9").expect("bundled");
    let r = counterexample_search(&e);
    println!(
        "E9: law holds globally: {}, {} failing pairs",
        r.holds_globally,
        r.failing_pairs.len()
    );
    let (a, d) = (e.index_of("a").unwrap(), e.index_of("d").unwrap());
    let p = contraposition_pair(&e, a, d);
    println!(
        "  U(a -> d) = {}   U(d' -> a') = {}",
        e.render(p.lhs),
        e.render(p.rhs)
    );
    print!("{}", check_prop1(&e));

    let e6 = fixtures::load("E6").expect("bundled");
    let id = identity_equ1(&e6).expect("E6 is a lattice");
    println!("\nE6: lattice identity holds: {}", id.holds_globally);
    for f in id.failing_pairs.iter().take(3) {
        println!(
            "  ({},{}): {} vs {}",
            e6.label(f.x),
            e6.label(f.y),
            e6.render(f.lhs),
            e6.render(f.rhs)
        );
    }

    println!();
    for k in 1..=4 {
        let b = boolean_to_ea(k).expect("k <= 6");
        let o = check_prop2_equivalence(&b).expect("Boolean algebras are lattices");
        println!(
            "{}: law {} identity {} agree {}",
            b.name(),
            o.contraposition_holds,
            o.identity_holds,
            o.agree()
        );
        assert!(o.agree());
    }
}
