//! Named property suites, as selected by `effalg check --suite`.

use crate::algebra::{check_lemma1, check_lemma2, EffectAlgebra};
use crate::deduction::{ded_lattice, generation_report, theorem3_report};
use crate::error::Error;
use crate::implication::{theorem2_suite, theorem4_suite};
use crate::laws::check_prop1;
use crate::report::{verdict, witness, PropertyReport};
use crate::residuation::{
    check_dual_adjointness, equivalence_c3_xi, from_effect_algebra, roundtrip_check, surp_report,
};

/// Every suite name, in the order `all` runs them.
pub const SUITES: &[&str] = &[
    "lemma1",
    "lemma2",
    "th2",
    "th4",
    "c1-c5",
    "c3-dual",
    "c3-xi",
    "th3",
    "ded-gen",
    "ded-lattice",
    "roundtrip",
    "prop1",
];

/// Expands a comma-separated list; `all` stands for every suite.
pub fn parse_suite_list(list: &str) -> Result<Vec<&'static str>, String> {
    let mut out = Vec::new();
    for name in list.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        if name == "all" {
            out.extend_from_slice(SUITES);
        } else if let Some(s) = SUITES.iter().find(|s| **s == name) {
            out.push(*s);
        } else {
            return Err(format!(
                "unknown suite `{name}` (known: all, {})",
                SUITES.join(", ")
            ));
        }
    }
    if out.is_empty() {
        return Err("empty suite list".into());
    }
    out.dedup();
    Ok(out)
}

pub fn run_suite(e: &EffectAlgebra, name: &str) -> Result<PropertyReport, Error> {
    Ok(match name {
        "lemma1" => check_lemma1(e),
        "lemma2" => check_lemma2(e),
        "th2" => theorem2_suite(e),
        "th4" => theorem4_suite(e),
        "c1-c5" => surp_report(e),
        "c3-dual" => match from_effect_algebra(e) {
            Ok(c) => check_dual_adjointness(&c),
            Err(report) => {
                let mut r = PropertyReport::new(format!("dual adjointness on {}", e.name()));
                r.push(verdict(
                    "build",
                    "the residuated poset can be built",
                    1,
                    Some(witness::<String>(&[], &[], report.to_string())),
                ));
                r
            }
        },
        "c3-xi" => equivalence_c3_xi(e),
        "th3" => theorem3_report(e)?,
        "ded-gen" => generation_report(e)?,
        "ded-lattice" => {
            let lattice = ded_lattice(e)?;
            let c = lattice.verify_completeness();
            let mut r =
                PropertyReport::new(format!("lattice of deductive systems on {}", e.name()));
            let failure = c.failure.map(|fam| {
                let shown: Vec<String> = fam.iter().map(|s| e.render(*s)).collect();
                witness::<String>(&[], &[], format!("family {}", shown.join(" ")))
            });
            r.push(verdict(
                "complete",
                "every family has an infimum and a supremum",
                c.families_checked as usize,
                failure,
            ));
            r
        }
        "roundtrip" => {
            let rt = roundtrip_check(e);
            let mut r = PropertyReport::new(format!("effect algebra roundtrip on {}", e.name()));
            let failure = (!rt.identical).then(|| {
                let detail = rt
                    .error
                    .clone()
                    .unwrap_or_else(|| format!("{} sum entries differ", rt.diffs.len()));
                match rt.diffs.first() {
                    Some(&(x, y, _, _)) => witness(e.labels(), &[x, y], detail),
                    None => witness::<String>(&[], &[], detail),
                }
            });
            r.push(verdict("identity", "E(C(E)) = E", 1, failure));
            r
        }
        "prop1" => check_prop1(e),
        other => return Err(Error::UnknownSuite(other.to_string())),
    })
}
