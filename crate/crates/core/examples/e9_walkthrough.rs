//! Tour of the bundled nine-element algebra: order, a few implications,
//! the full table and the implication property suites.
//!
//! `cargo run --example e9_walkthrough`

use effect_logic::fixtures;
use effect_logic::implication::{implication_table, theorem2_suite, theorem4_suite};
use effect_logic::render::{emit_table, implication_grid, order_grid, TableFormat};

fn main() {
    let e = fixtures::load("E9").expect("bundled");
    println!(
        "{} has {} elements, lattice: {}",
        e.name(),
        e.len(),
        e.is_lattice()
    );

    println!("\ncomplements:");
    for x in 0..e.len() {
        print!(" {}'={}", e.label(x), e.label(e.comp(x)));
    }
    println!(
        "\n\norder:\n{}",
        emit_table(&order_grid(e.order()), TableFormat::Aligned)
    );

    let ix = |l: &str| e.index_of(l).expect("label");
    for (x, y) in [("a", "b"), ("e", "a"), ("a", "d"), ("1", "f")] {
        println!("{x} -> {y} = {}", e.render(e.implies(ix(x), ix(y))));
    }

    let t = implication_table(&e);
    println!(
        "\n{}",
        emit_table(&implication_grid(&t), TableFormat::Aligned)
    );

    for report in [theorem2_suite(&e), theorem4_suite(&e)] {
        print!("{report}");
        assert!(report.all_pass());
    }
}
