//! Writing an algebra in the text format, reading it back, and exporting
//! its order as a Graphviz digraph.
//!
//! `cargo run --example dsl_and_dot`

use effect_logic::dsl::{emit_algebra, parse_algebra, parse_specs};
use effect_logic::render::{emit_algebra_dot, emit_table, sum_grid, TableFormat};

const DIAMOND: &str = "\
algebra diamond
elements 0 p q 1
zero 0
one 1
# p and q are each other's complement
sum p q = 1
";

fn main() {
    let e = parse_algebra(DIAMOND).expect("valid");
    println!("{}", emit_table(&sum_grid(&e), TableFormat::Aligned));
    println!("{}", emit_table(&sum_grid(&e), TableFormat::Csv));

    let canonical = emit_algebra(&e);
    print!("canonical text:\n{canonical}");
    let again = parse_algebra(&canonical).expect("roundtrips");
    assert_eq!(emit_algebra(&again), canonical);

    println!("\n{}", emit_algebra_dot(&e));

    // errors carry a line and column
    let broken = DIAMOND.replace("sum p q = 1", "sum p r = 1");
    match parse_specs(&broken) {
        Ok(_) => unreachable!("r is not declared"),
        Err(err) => println!("error: {err}"),
    }
    let invalid = DIAMOND.replace("sum p q = 1", "sum p p = 1");
    match parse_algebra(&invalid) {
        Ok(_) => unreachable!("q is left without a complement"),
        Err(err) => println!("error: {err}"),
    }
}
