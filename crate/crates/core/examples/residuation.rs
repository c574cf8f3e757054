//! Effect algebra to strict unsharp residuated poset and back.
//!
//! `cargo run --example residuation`

use effect_logic::fixtures;
use effect_logic::residuation::{
    from_effect_algebra, roundtrip_check, surp_report, to_effect_algebra,
};

fn main() {
    for name in ["E9", "E6", "BOOL-3", "CHAIN-4"] {
        let e = fixtures::load(name).expect("bundled");
        let c = from_effect_algebra(&e).expect("every effect algebra converts");
        let back = to_effect_algebra(&c).expect("and converts back");
        let rt = roundtrip_check(&e);
        println!(
            "{name}: divisible={} roundtrip identical={} ({} sums)",
            c.is_divisible(),
            rt.identical,
            back.sum_table().defined_count()
        );
        assert!(rt.identical);
    }

    let e = fixtures::load("E9").expect("bundled");
    let c = from_effect_algebra(&e).expect("converts");
    let ix = |l: &str| e.index_of(l).expect("label");
    // x ⊙ y is defined exactly when x' <= y
    for (x, y) in [("g", "a"), ("e", "f"), ("a", "b")] {
        let v = c
            .odot(ix(x), ix(y))
            .map_or("undefined".to_string(), |z| e.label(z).to_string());
        println!("{x} ⊙ {y} = {v}");
    }
    print!("\n{}", surp_report(&e));
}
