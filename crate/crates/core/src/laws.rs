//! The unsharp contraposition law `U(x → y) = U(y' → x')` and related identities.
//!
//! Law truth is always decided on upper cones. The raw implication sets are
//! kept alongside as a diagnostic, since they can differ where the law holds.

use crate::algebra::{EffectAlgebra, PartialTable, RawAlgebra};
use crate::error::Error;
use crate::report::{check_tuples, skipped, PropertyReport};
use crate::subset::Subset;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ContrapositionPair {
    pub holds: bool,
    /// `U(a → b)`
    pub lhs: Subset,
    /// `U(b' → a')`
    pub rhs: Subset,
    pub raw_lhs: Subset,
    pub raw_rhs: Subset,
}

pub fn contraposition_pair(e: &EffectAlgebra, a: usize, b: usize) -> ContrapositionPair {
    let p = e.order();
    let raw_lhs = e.implies(a, b);
    let raw_rhs = e.implies(e.comp(b), e.comp(a));
    let lhs = p.upper(raw_lhs);
    let rhs = p.upper(raw_rhs);
    ContrapositionPair {
        holds: lhs == rhs,
        lhs,
        rhs,
        raw_lhs,
        raw_rhs,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FailingPair {
    pub x: usize,
    pub y: usize,
    pub lhs: Subset,
    pub rhs: Subset,
    pub comparable: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LawReport {
    pub law: &'static str,
    pub holds_globally: bool,
    pub failing_pairs: Vec<FailingPair>,
    /// True when no comparable pair fails.
    pub comparable_pairs_hold: bool,
}

impl LawReport {
    fn from_failures(law: &'static str, failing_pairs: Vec<FailingPair>) -> Self {
        LawReport {
            law,
            holds_globally: failing_pairs.is_empty(),
            comparable_pairs_hold: !failing_pairs.iter().any(|f| f.comparable),
            failing_pairs,
        }
    }

    pub fn fails_at(&self, x: usize, y: usize) -> Option<&FailingPair> {
        self.failing_pairs.iter().find(|f| f.x == x && f.y == y)
    }
}

/// Every pair violating the unsharp contraposition law.
pub fn counterexample_search(e: &EffectAlgebra) -> LawReport {
    let n = e.len();
    let mut failing = Vec::new();
    for x in 0..n {
        for y in 0..n {
            let c = contraposition_pair(e, x, y);
            if !c.holds {
                failing.push(FailingPair {
                    x,
                    y,
                    lhs: c.lhs,
                    rhs: c.rhs,
                    comparable: e.order().comparable(x, y),
                });
            }
        }
    }
    LawReport::from_failures("unsharp contraposition", failing)
}

/// The law on comparable pairs, plus the lattice variant
/// `U(x → y) = U((x ∧ y)' → x')` when the order is a lattice.
pub fn check_prop1(e: &EffectAlgebra) -> PropertyReport {
    let l = e.labels();
    let p = e.order();
    let mut r = PropertyReport::new(format!(
        "contraposition on comparable pairs of {}",
        e.name()
    ));
    r.push(check_tuples(
        "comparable",
        "x, y comparable implies U(x → y) = U(y' → x')",
        l,
        2,
        |t| {
            let (x, y) = (t[0], t[1]);
            if !p.comparable(x, y) {
                return Ok(());
            }
            let c = contraposition_pair(e, x, y);
            if c.holds {
                Ok(())
            } else {
                Err(format!("{} != {}", e.render(c.lhs), e.render(c.rhs)))
            }
        },
    ));
    let variant = "U(x → y) = U((x ∧ y)' → x')";
    if e.is_lattice() {
        r.push(check_tuples("lattice", variant, l, 2, |t| {
            let (x, y) = (t[0], t[1]);
            let m = e.meet(x, y).ok_or("meet missing")?;
            let lhs = p.upper(e.implies(x, y));
            let rhs = p.upper(e.implies(e.comp(m), e.comp(x)));
            if lhs == rhs {
                Ok(())
            } else {
                Err(format!("{} != {}", e.render(lhs), e.render(rhs)))
            }
        }));
    } else {
        r.push(skipped("lattice", variant, "order is not a lattice"));
    }
    r
}

/// `x' + (x ∧ y) = y + (x' ∧ y')` on every pair of a lattice effect algebra.
pub fn identity_equ1(e: &EffectAlgebra) -> Result<LawReport, Error> {
    if !e.is_lattice() {
        return Err(Error::NotALattice);
    }
    let n = e.len();
    let mut failing = Vec::new();
    for x in 0..n {
        for y in 0..n {
            let (nx, ny) = (e.comp(x), e.comp(y));
            let lhs = e.meet(x, y).and_then(|m| e.sum(nx, m));
            let rhs = e.meet(nx, ny).and_then(|m| e.sum(y, m));
            let (lhs, rhs) = match (lhs, rhs) {
                (Some(l), Some(r)) => (l, r),
                // both sums are defined in any lattice effect algebra
                _ => unreachable!("meet below x and x' + meet undefined"),
            };
            if lhs != rhs {
                failing.push(FailingPair {
                    x,
                    y,
                    lhs: Subset::singleton(n, lhs),
                    rhs: Subset::singleton(n, rhs),
                    comparable: e.order().comparable(x, y),
                });
            }
        }
    }
    Ok(LawReport::from_failures(
        "x' + (x ∧ y) = y + (x' ∧ y')",
        failing,
    ))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Prop2Outcome {
    pub contraposition_holds: bool,
    pub identity_holds: bool,
}

impl Prop2Outcome {
    pub fn agree(self) -> bool {
        self.contraposition_holds == self.identity_holds
    }
}

/// Decides the law and the identity independently on a lattice effect algebra.
pub fn check_prop2_equivalence(e: &EffectAlgebra) -> Result<Prop2Outcome, Error> {
    let identity = identity_equ1(e)?;
    let n = e.len();
    let contraposition_holds = (0..n).all(|x| (0..n).all(|y| contraposition_pair(e, x, y).holds));
    Ok(Prop2Outcome {
        contraposition_holds,
        identity_holds: identity.holds_globally,
    })
}

/// Largest atom count for [`boolean_to_ea`].
pub const MAX_ATOMS: usize = 6;

/// The Boolean algebra on `k` atoms with `x + y = x ∨ y` exactly when `x ∧ y = 0`.
///
/// Elements are indexed by their atom bitmask; labels spell the atoms
/// (`a`, `b`, ...), with `0` and `1` for the bounds.
pub fn boolean_to_ea(k: usize) -> Result<EffectAlgebra, Error> {
    if !(1..=MAX_ATOMS).contains(&k) {
        return Err(Error::SizeCap {
            what: "atom count",
            limit: MAX_ATOMS,
            got: k,
        });
    }
    let n = 1usize << k;
    let full = n - 1;
    let labels = (0..n)
        .map(|m| match m {
            0 => "0".to_string(),
            _ if m == full => "1".to_string(),
            _ => (0..k)
                .filter(|i| m >> i & 1 == 1)
                .map(|i| (b'a' + i as u8) as char)
                .collect(),
        })
        .collect();
    let mut sum = PartialTable::undefined(n);
    for x in 0..n {
        for y in 0..n {
            if x & y == 0 {
                sum.set(x, y, Some(x | y));
            }
        }
    }
    let raw = RawAlgebra {
        name: format!("BOOL-{k}"),
        labels,
        zero: 0,
        one: full,
        sum,
        declared_complements: vec![],
    };
    Ok(EffectAlgebra::new(&raw)?)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntroAdjointness {
    pub holds_globally: bool,
    pub triples_checked: usize,
    /// First `(x, y, z)` where the two sides disagree.
    pub witness: Option<(usize, usize, usize)>,
    pub monotonous: crate::algebra::Monotonicity,
}

/// `L(U(x,y') ⊙ y) <= UL(y,z)  iff  LU(x,y') <= U(y → z)` on every triple,
/// reported next to the monotonicity status.
pub fn check_intro_adjointness(e: &EffectAlgebra) -> IntroAdjointness {
    let p = e.order();
    let n = e.len();
    let mut witness = None;
    let mut checked = 0;
    'scan: for x in 0..n {
        for y in 0..n {
            let cone = p.upper_of(&[x, e.comp(y)]);
            let prod = e.odot_set(y, cone).expect("y' lies below U(x, y')");
            for z in 0..n {
                checked += 1;
                let left = p.set_leq_unchecked(p.lower(prod), p.upper(p.lower_of(&[y, z])));
                let right = p.set_leq_unchecked(p.lower(cone), p.upper(e.implies(y, z)));
                if left != right {
                    witness = Some((x, y, z));
                    break 'scan;
                }
            }
        }
    }
    IntroAdjointness {
        holds_globally: witness.is_none(),
        triples_checked: checked,
        witness,
        monotonous: crate::algebra::is_monotonous(e),
    }
}
