//! Bundled algebras, addressable by name.
//!
//! `E9` is a 9-element effect algebra whose order is not a lattice; `E6` is
//! the 6-element lattice made of two 4-element horizontal sums. `BOOL-k` is
//! the Boolean algebra on `k` atoms and `CHAIN-n` the `n`-element chain with
//! truncated addition.

use crate::algebra::EffectAlgebra;
use crate::dsl::{emit_algebra, parse_algebra};
use crate::error::Error;
use crate::laws::{boolean_to_ea, MAX_ATOMS};
use crate::subset::MAX_CARRIER;

pub const E9: &str = "\
algebra E9
elements 0 a b c d e f g 1
zero 0
one 1
sum a b = e
sum a c = f
sum a g = 1
sum b b = d
sum b c = g
sum b d = f
sum b f = 1
sum c e = 1
sum d d = 1
complement 0 = 1
complement a = g
complement b = f
complement c = e
complement d = d
complement e = c
complement f = b
complement g = a
complement 1 = 0
";

pub const E6: &str = "\
algebra E6
elements 0 a a' b b' 1
zero 0
one 1
sum a a' = 1
sum b b' = 1
complement 0 = 1
complement a = a'
complement a' = a
complement b = b'
complement b' = b
complement 1 = 0
";

/// Names listed by [`names`]; `BOOL-k` and `CHAIN-n` accept other sizes too.
pub fn names() -> Vec<String> {
    let mut v = vec!["E9".to_string(), "E6".to_string()];
    v.extend((1..=3).map(|k| format!("BOOL-{k}")));
    v.extend((2..=5).map(|n| format!("CHAIN-{n}")));
    v
}

fn size_suffix(name: &str, prefix: &str) -> Option<usize> {
    name.strip_prefix(prefix)?.parse().ok()
}

fn chain_text(n: usize) -> String {
    let label = |i: usize| match i {
        0 => "0".to_string(),
        _ if i == n - 1 => "1".to_string(),
        _ => format!("x{i}"),
    };
    let mut out = format!("algebra CHAIN-{n}\nelements");
    for i in 0..n {
        out.push(' ');
        out.push_str(&label(i));
    }
    out.push_str(&format!("\nzero 0\none {}\n", label(n - 1)));
    for i in 1..n {
        for j in i..n {
            if i + j < n {
                out.push_str(&format!(
                    "sum {} {} = {}\n",
                    label(i),
                    label(j),
                    label(i + j)
                ));
            }
        }
    }
    out
}

/// The fixture in the text format.
pub fn text(name: &str) -> Result<String, Error> {
    let unknown = || Error::UnknownFixture(name.to_string());
    match name {
        "E9" => Ok(E9.to_string()),
        "E6" => Ok(E6.to_string()),
        _ => {
            if let Some(k) = size_suffix(name, "BOOL-") {
                if !(1..=MAX_ATOMS).contains(&k) {
                    return Err(unknown());
                }
                Ok(emit_algebra(&boolean_to_ea(k)?))
            } else if let Some(n) = size_suffix(name, "CHAIN-") {
                if !(2..=MAX_CARRIER).contains(&n) {
                    return Err(unknown());
                }
                Ok(chain_text(n))
            } else {
                Err(unknown())
            }
        }
    }
}

pub fn load(name: &str) -> Result<EffectAlgebra, Error> {
    parse_algebra(&text(name)?)
}
