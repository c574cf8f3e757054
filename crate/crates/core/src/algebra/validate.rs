use std::collections::HashSet;
use std::fmt;

use super::{EffectAlgebra, RawAlgebra};
use crate::poset::{Poset, PosetError};
use crate::subset::MAX_CARRIER;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Axiom {
    /// Table shape, label and index sanity.
    Structure,
    E1,
    E2,
    E3,
    E4,
    /// The induced relation is not a bounded order with bottom 0 and top 1.
    Order,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Axiom::Structure => "structure",
            Axiom::E1 => "E1",
            Axiom::E2 => "E2",
            Axiom::E3 => "E3",
            Axiom::E4 => "E4",
            Axiom::Order => "order",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    Malformed(String),
    /// `x + y` and `y + x` disagree in definedness or value.
    Commutativity {
        x: usize,
        y: usize,
    },
    /// `1 + x` is defined for some `x != 0`.
    TopAbsorbs {
        x: usize,
    },
    MissingComplement {
        x: usize,
    },
    AmbiguousComplement {
        x: usize,
        first: usize,
        second: usize,
    },
    DeclaredComplement {
        x: usize,
        declared: usize,
        derived: usize,
    },
    Order(PosetError),
    ZeroNotBottom {
        x: usize,
    },
    OneNotTop {
        x: usize,
    },
    /// `(x + y) + z` and `x + (y + z)` disagree.
    Associativity {
        x: usize,
        y: usize,
        z: usize,
    },
}

impl Violation {
    pub fn axiom(&self) -> Axiom {
        match self {
            Violation::Malformed(_) => Axiom::Structure,
            Violation::Commutativity { .. } => Axiom::E1,
            Violation::TopAbsorbs { .. } => Axiom::E4,
            Violation::MissingComplement { .. }
            | Violation::AmbiguousComplement { .. }
            | Violation::DeclaredComplement { .. } => Axiom::E3,
            Violation::Order(_) | Violation::ZeroNotBottom { .. } | Violation::OneNotTop { .. } => {
                Axiom::Order
            }
            Violation::Associativity { .. } => Axiom::E2,
        }
    }

    /// Element indices of the witness.
    pub fn witness(&self) -> Vec<usize> {
        match *self {
            Violation::Malformed(_) => vec![],
            Violation::Commutativity { x, y } => vec![x, y],
            Violation::TopAbsorbs { x } | Violation::MissingComplement { x } => vec![x],
            Violation::AmbiguousComplement { x, first, second } => vec![x, first, second],
            Violation::DeclaredComplement {
                x,
                declared,
                derived,
            } => vec![x, declared, derived],
            Violation::Order(ref e) => match *e {
                PosetError::NotReflexive(x) => vec![x],
                PosetError::NotAntisymmetric(x, y) => vec![x, y],
                PosetError::NotTransitive(x, y, z) => vec![x, y, z],
                _ => vec![],
            },
            Violation::ZeroNotBottom { x } | Violation::OneNotTop { x } => vec![x],
            Violation::Associativity { x, y, z } => vec![x, y, z],
        }
    }
}

/// Why a table failed to be an effect algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidationReport {
    pub labels: Vec<String>,
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn has(&self, axiom: Axiom) -> bool {
        self.violations.iter().any(|v| v.axiom() == axiom)
    }

    pub fn first(&self, axiom: Axiom) -> Option<&Violation> {
        self.violations.iter().find(|v| v.axiom() == axiom)
    }

    /// Witness of the first violation of `axiom`, as labels.
    pub fn witness_labels(&self, axiom: Axiom) -> Option<Vec<&str>> {
        self.first(axiom).map(|v| {
            v.witness()
                .into_iter()
                .map(|i| self.labels.get(i).map_or("?", String::as_str))
                .collect()
        })
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "not an effect algebra:")?;
        for v in &self.violations {
            let w = v
                .witness()
                .iter()
                .map(|&i| self.labels.get(i).map_or("?", String::as_str))
                .collect::<Vec<_>>()
                .join(",");
            match v {
                Violation::Malformed(msg) => write!(f, " [{}] {msg};", v.axiom())?,
                Violation::Order(e) => write!(f, " [{}] {e} (witness {w});", v.axiom())?,
                _ => write!(f, " [{}] witness ({w});", v.axiom())?,
            }
        }
        Ok(())
    }
}

impl std::error::Error for ValidationReport {}

/// Checks the effect-algebra axioms and derives complements and the induced order.
///
/// Stages run in the order E1, E4, E3, induced order, E2. The first failing
/// stage stops validation and is reported with its lexicographically first
/// witness; later stages assume the earlier ones.
pub fn validate(raw: &RawAlgebra) -> Result<EffectAlgebra, ValidationReport> {
    let fail = |v: Violation| ValidationReport {
        labels: raw.labels.clone(),
        violations: vec![v],
    };
    let n = raw.labels.len();
    check_structure(raw).map_err(|m| fail(Violation::Malformed(m)))?;
    let sum = &raw.sum;
    let (zero, one) = (raw.zero, raw.one);

    // E1
    for x in 0..n {
        for y in x + 1..n {
            if sum.get(x, y) != sum.get(y, x) {
                return Err(fail(Violation::Commutativity { x, y }));
            }
        }
    }

    // E4
    if let Some(x) = (0..n).find(|&x| x != zero && sum.is_defined(one, x)) {
        return Err(fail(Violation::TopAbsorbs { x }));
    }

    // E3
    let mut comp = Vec::with_capacity(n);
    for x in 0..n {
        let mut candidates = (0..n).filter(|&u| sum.get(x, u) == Some(one));
        match (candidates.next(), candidates.next()) {
            (None, _) => return Err(fail(Violation::MissingComplement { x })),
            (Some(first), Some(second)) => {
                return Err(fail(Violation::AmbiguousComplement { x, first, second }))
            }
            (Some(u), None) => comp.push(u),
        }
    }
    let mut declared = raw.declared_complements.clone();
    declared.sort_unstable();
    for (x, d) in declared {
        if comp[x] != d {
            return Err(fail(Violation::DeclaredComplement {
                x,
                declared: d,
                derived: comp[x],
            }));
        }
    }

    // induced order
    let order = Poset::from_relation(raw.labels.clone(), |x, y| {
        (0..n).any(|z| sum.get(x, z) == Some(y))
    })
    .map_err(|e| fail(Violation::Order(e)))?;
    if let Some(x) = (0..n).find(|&x| !order.leq(zero, x)) {
        return Err(fail(Violation::ZeroNotBottom { x }));
    }
    if let Some(x) = (0..n).find(|&x| !order.leq(x, one)) {
        return Err(fail(Violation::OneNotTop { x }));
    }

    // E2
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let left = sum.get(x, y).and_then(|s| sum.get(s, z));
                let right = sum.get(y, z).and_then(|t| sum.get(x, t));
                if left != right {
                    return Err(fail(Violation::Associativity { x, y, z }));
                }
            }
        }
    }

    Ok(EffectAlgebra {
        name: raw.name.clone(),
        sum: raw.sum.clone(),
        comp,
        zero,
        one,
        order,
    })
}

fn check_structure(raw: &RawAlgebra) -> Result<(), String> {
    let n = raw.labels.len();
    if n == 0 || n > MAX_CARRIER {
        return Err(format!("carrier size {n} outside 1..=64"));
    }
    if raw.sum.len() != n {
        return Err(format!(
            "sum table is {0}x{0} for {n} elements",
            raw.sum.len()
        ));
    }
    let mut seen = HashSet::new();
    if let Some(dup) = raw.labels.iter().find(|l| !seen.insert(l.as_str())) {
        return Err(format!("duplicate label `{dup}`"));
    }
    if raw.zero >= n || raw.one >= n {
        return Err("zero or one outside the carrier".into());
    }
    for x in 0..n {
        for y in 0..n {
            if raw.sum.get(x, y).is_some_and(|v| v >= n) {
                return Err(format!("sum entry ({x},{y}) outside the carrier"));
            }
        }
    }
    if raw
        .declared_complements
        .iter()
        .any(|&(x, y)| x >= n || y >= n)
    {
        return Err("declared complement outside the carrier".into());
    }
    Ok(())
}
