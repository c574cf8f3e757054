//! Monotonicity of set addition and the adjointness it is tied to.
//!
//! `cargo run --release --example monotonicity`

use effect_logic::algebra::is_monotonous;
use effect_logic::fixtures;
use effect_logic::laws::check_intro_adjointness;

fn main() {
    for name in ["E9", "E6", "BOOL-3", "CHAIN-6"] {
        let e = fixtures::load(name).expect("bundled");
        let m = is_monotonous(&e);
        let adj = check_intro_adjointness(&e);
        print!(
            "{name}: monotonous={} ({} cases) adjointness={} ({} triples)",
            m.holds, m.cases, adj.holds_globally, adj.triples_checked
        );
        if let Some((x, a, b)) = m.witness {
            print!(
                "  witness x={} A={} B={}",
                e.label(x),
                e.render(a),
                e.render(b)
            );
        }
        if let Some((x, y, z)) = adj.witness {
            print!(
                "  adjointness breaks at ({},{},{})",
                e.label(x),
                e.label(y),
                e.label(z)
            );
        }
        println!();
    }
}
