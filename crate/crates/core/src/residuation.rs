//! Strict unsharp residuated posets and their correspondence with effect algebras.
//!
//! [`from_effect_algebra`] turns an effect algebra into a divisible strict
//! unsharp residuated poset, [`to_effect_algebra`] goes back via
//! `x + y = (x' ⊙ y')'` when `x <= y'`. [`validate_surp`] checks arbitrary
//! candidate tables, so the conversion can be tested against mutated inputs.

use std::fmt;

use crate::algebra::{EffectAlgebra, PartialTable, RawAlgebra};
use crate::error::Error;
use crate::implication::th2_xi_sides;
use crate::poset::{validate_involution, Involution, Poset};
use crate::report::{check_tuples, verdict, witness, PropertyReport};
use crate::subset::Subset;

/// Tables that may or may not form a strict unsharp residuated poset.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurpCandidate {
    pub poset: Poset,
    pub involution: Involution,
    pub odot: PartialTable,
    /// `imp[x * n + y]` is `x → y`.
    pub imp: Vec<Subset>,
}

/// A validated strict unsharp residuated poset.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnsharpResiduatedPoset {
    poset: Poset,
    involution: Involution,
    odot: PartialTable,
    imp: Vec<Subset>,
    divisible: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Condition {
    /// Bounded poset with an antitone involution.
    C1,
    /// Strict partial commutative monoid with monotonicity and recovery.
    C2,
    /// Unsharp adjointness.
    C3,
    /// `x → 0 = {x'}`
    C4,
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurpViolation {
    pub condition: Condition,
    pub witness: Vec<usize>,
    pub detail: String,
}

/// First witness of every violated condition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurpReport {
    pub labels: Vec<String>,
    pub violations: Vec<SurpViolation>,
}

impl SurpReport {
    pub fn first(&self, c: Condition) -> Option<&SurpViolation> {
        self.violations.iter().find(|v| v.condition == c)
    }

    pub fn witness_labels(&self, c: Condition) -> Option<Vec<&str>> {
        self.first(c)
            .map(|v| v.witness.iter().map(|&i| self.labels[i].as_str()).collect())
    }
}

impl fmt::Display for SurpReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "not a strict unsharp residuated poset:")?;
        for v in &self.violations {
            let w: Vec<&str> = v.witness.iter().map(|&i| self.labels[i].as_str()).collect();
            write!(f, " [{}] ({}) {};", v.condition, w.join(","), v.detail)?;
        }
        Ok(())
    }
}

impl std::error::Error for SurpReport {}

/// Read access shared by candidates and validated structures.
struct View<'a> {
    poset: &'a Poset,
    inv: &'a Involution,
    odot: &'a PartialTable,
    imp: &'a [Subset],
}

impl View<'_> {
    fn n(&self) -> usize {
        self.poset.len()
    }

    fn imp(&self, x: usize, y: usize) -> Subset {
        self.imp[x * self.n() + y]
    }

    /// `S ⊙ y`, elementwise.
    fn odot_image(&self, s: Subset, y: usize) -> Option<Subset> {
        s.iter().try_fold(Subset::empty(self.n()), |acc, w| {
            self.odot.get(w, y).map(|v| acc.with(v))
        })
    }

    /// `U(x, y') ⊙ y ⊆ UL(y, z)` and `U(x, y') ⊆ U(y → z)`.
    fn adjointness(&self, x: usize, y: usize, z: usize) -> Option<(bool, bool)> {
        let p = self.poset;
        let cone = p.upper_of(&[x, self.inv.apply(y)]);
        let left = self
            .odot_image(cone, y)?
            .is_subset_of(p.upper(p.lower_of(&[y, z])));
        let right = cone.is_subset_of(p.upper(self.imp(y, z)));
        Some((left, right))
    }

    /// `U(x, y') ⊙ y >= L(y, z)` and `U(x, y') >= y → z`.
    fn dual_adjointness(&self, x: usize, y: usize, z: usize) -> Option<(bool, bool)> {
        let p = self.poset;
        let cone = p.upper_of(&[x, self.inv.apply(y)]);
        let left = p.set_leq_unchecked(p.lower_of(&[y, z]), self.odot_image(cone, y)?);
        let right = p.set_leq_unchecked(self.imp(y, z), cone);
        Some((left, right))
    }

    fn is_divisible(&self) -> bool {
        let n = self.n();
        (0..n).all(|x| {
            (0..n).all(|y| {
                self.imp(x, y).iter().try_fold(Subset::empty(n), |acc, w| {
                    self.odot.get(x, w).map(|v| acc.with(v))
                }) == Some(self.poset.lower_of(&[x, y]))
            })
        })
    }
}

/// Checks conditions C1 to C4 on every element tuple, and C5 for divisibility.
pub fn validate_surp(c: SurpCandidate) -> Result<UnsharpResiduatedPoset, SurpReport> {
    let n = c.poset.len();
    let labels = c.poset.labels().to_vec();
    let mut violations = Vec::new();
    let mk = |condition, witness: Vec<usize>, detail: String| SurpViolation {
        condition,
        witness,
        detail,
    };

    if c.odot.len() != n || c.imp.len() != n * n || c.imp.iter().any(|s| s.carrier_len() != n) {
        violations.push(mk(
            Condition::C1,
            vec![],
            "tables do not match the carrier".into(),
        ));
        return Err(SurpReport { labels, violations });
    }

    // C1
    let inv_report = validate_involution(&c.poset, &c.involution);
    if let Some(v) = inv_report.violations.first() {
        violations.push(mk(Condition::C1, vec![], format!("{v:?}")));
        return Err(SurpReport { labels, violations });
    }

    let view = View {
        poset: &c.poset,
        inv: &c.involution,
        odot: &c.odot,
        imp: &c.imp,
    };
    if let Some((w, d)) = first_c2_failure(&view) {
        violations.push(mk(Condition::C2, w, d));
    }

    // C3, only meaningful once products of U(x,y') with y are defined
    if violations.is_empty() {
        'c3: for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    match view.adjointness(x, y, z) {
                        Some((l, r)) if l == r => {}
                        Some((l, r)) => {
                            violations.push(mk(
                                Condition::C3,
                                vec![x, y, z],
                                format!(
                                    "inclusion of products is {l}, inclusion in the cone is {r}"
                                ),
                            ));
                            break 'c3;
                        }
                        None => {
                            violations.push(mk(
                                Condition::C3,
                                vec![x, y, z],
                                "U(x,y') ⊙ y undefined".into(),
                            ));
                            break 'c3;
                        }
                    }
                }
            }
        }
    }

    // C4
    let bottom = c.poset.bottom();
    if let Some(x) =
        (0..n).find(|&x| view.imp(x, bottom) != Subset::singleton(n, c.involution.apply(x)))
    {
        violations.push(mk(
            Condition::C4,
            vec![x],
            format!("x → 0 = {}", view.imp(x, bottom).render(&labels)),
        ));
    }

    if !violations.is_empty() {
        return Err(SurpReport { labels, violations });
    }
    let divisible = view.is_divisible();
    Ok(UnsharpResiduatedPoset {
        poset: c.poset,
        involution: c.involution,
        odot: c.odot,
        imp: c.imp,
        divisible,
    })
}

fn first_c2_failure(v: &View<'_>) -> Option<(Vec<usize>, String)> {
    let (n, p, inv, odot) = (v.n(), v.poset, v.inv, v.odot);
    let top = p.top();
    for x in 0..n {
        for y in 0..n {
            if odot.is_defined(x, y) != p.leq(inv.apply(x), y) {
                return Some((vec![x, y], "definedness differs from x' <= y".into()));
            }
            if odot.get(x, y) != odot.get(y, x) {
                return Some((vec![x, y], "not commutative".into()));
            }
        }
        if odot.get(x, top) != Some(x) || odot.get(top, x) != Some(x) {
            return Some((vec![x], "1 is not a unit".into()));
        }
    }
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let left = odot.get(x, y).and_then(|s| odot.get(s, z));
                let right = odot.get(y, z).and_then(|t| odot.get(x, t));
                if left != right {
                    return Some((vec![x, y, z], "not associative".into()));
                }
            }
        }
    }
    for x in 0..n {
        for y in p.up_set(x) {
            // z' <= x <= y implies x ⊙ z <= y ⊙ z
            for z in 0..n {
                if !p.leq(inv.apply(z), x) {
                    continue;
                }
                match (odot.get(x, z), odot.get(y, z)) {
                    (Some(a), Some(b)) if p.leq(a, b) => {}
                    _ => return Some((vec![x, y, z], "not monotone".into())),
                }
            }
            // x <= y implies x = y ⊙ (y ⊙ x')'
            let back = odot
                .get(y, inv.apply(x))
                .and_then(|t| odot.get(y, inv.apply(t)));
            if back != Some(x) {
                return Some((vec![x, y], "x != y ⊙ (y ⊙ x')'".into()));
            }
        }
    }
    None
}

impl UnsharpResiduatedPoset {
    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    pub fn involution(&self) -> &Involution {
        &self.involution
    }

    pub fn odot(&self, x: usize, y: usize) -> Option<usize> {
        self.odot.get(x, y)
    }

    pub fn odot_table(&self) -> &PartialTable {
        &self.odot
    }

    pub fn imp(&self, x: usize, y: usize) -> Subset {
        self.imp[x * self.poset.len() + y]
    }

    /// Whether `x ⊙ (x → y) = L(x, y)` for every pair.
    pub fn is_divisible(&self) -> bool {
        self.divisible
    }

    pub fn len(&self) -> usize {
        self.poset.len()
    }

    pub fn is_empty(&self) -> bool {
        self.poset.is_empty()
    }

    fn view(&self) -> View<'_> {
        View {
            poset: &self.poset,
            inv: &self.involution,
            odot: &self.odot,
            imp: &self.imp,
        }
    }

    /// Back to raw tables, e.g. for mutation.
    pub fn to_candidate(&self) -> SurpCandidate {
        SurpCandidate {
            poset: self.poset.clone(),
            involution: self.involution.clone(),
            odot: self.odot.clone(),
            imp: self.imp.clone(),
        }
    }
}

/// The tables of `C(E)`, unvalidated.
pub fn candidate_from_effect_algebra(e: &EffectAlgebra) -> SurpCandidate {
    let n = e.len();
    let mut odot = PartialTable::undefined(n);
    let mut imp = Vec::with_capacity(n * n);
    for x in 0..n {
        for y in 0..n {
            odot.set(x, y, e.odot(x, y));
            imp.push(e.implies(x, y));
        }
    }
    SurpCandidate {
        poset: e.order().clone(),
        involution: Involution::new(e.complements().to_vec()),
        odot,
        imp,
    }
}

/// `C(E)`: the effect algebra's order, complement, `⊙` and `→`, validated.
pub fn from_effect_algebra(e: &EffectAlgebra) -> Result<UnsharpResiduatedPoset, SurpReport> {
    validate_surp(candidate_from_effect_algebra(e))
}

/// `E(C)`: `x + y = (x' ⊙ y')'` exactly when `x <= y'`.
///
/// The result is validated as an effect algebra and its induced order is
/// compared with the order of `c`.
pub fn to_effect_algebra(c: &UnsharpResiduatedPoset) -> Result<EffectAlgebra, Error> {
    let n = c.len();
    let p = &c.poset;
    let inv = &c.involution;
    let mut sum = PartialTable::undefined(n);
    for x in 0..n {
        for y in 0..n {
            if p.leq(x, inv.apply(y)) {
                let v = c.odot(inv.apply(x), inv.apply(y)).map(|s| inv.apply(s));
                sum.set(x, y, v);
            }
        }
    }
    let raw = RawAlgebra {
        name: String::new(),
        labels: p.labels().to_vec(),
        zero: p.bottom(),
        one: p.top(),
        sum,
        declared_complements: vec![],
    };
    let e = EffectAlgebra::new(&raw)?;
    for x in 0..n {
        for y in 0..n {
            if e.leq(x, y) != p.leq(x, y) {
                return Err(Error::OrderMismatch {
                    x: p.label(x).to_string(),
                    y: p.label(y).to_string(),
                });
            }
        }
    }
    Ok(e)
}

/// One differing sum entry: `(x, y, original, reconstructed)`.
pub type SumDiff = (usize, usize, Option<usize>, Option<usize>);

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Roundtrip {
    pub identical: bool,
    pub diffs: Vec<SumDiff>,
    /// Set when a conversion step itself failed.
    pub error: Option<String>,
}

/// Whether `E(C(E))` has literally the same sum table as `E`.
pub fn roundtrip_check(e: &EffectAlgebra) -> Roundtrip {
    let back = from_effect_algebra(e)
        .map_err(|r| r.to_string())
        .and_then(|c| to_effect_algebra(&c).map_err(|err| err.to_string()));
    let back = match back {
        Ok(b) => b,
        Err(msg) => {
            return Roundtrip {
                identical: false,
                diffs: vec![],
                error: Some(msg),
            }
        }
    };
    let n = e.len();
    let diffs: Vec<SumDiff> = (0..n)
        .flat_map(|x| (0..n).map(move |y| (x, y)))
        .filter(|&(x, y)| e.sum(x, y) != back.sum(x, y))
        .map(|(x, y)| (x, y, e.sum(x, y), back.sum(x, y)))
        .collect();
    Roundtrip {
        identical: diffs.is_empty() && back.labels() == e.labels(),
        diffs,
        error: None,
    }
}

/// Compares unsharp adjointness with its order-dual form on every triple.
pub fn check_dual_adjointness(c: &UnsharpResiduatedPoset) -> PropertyReport {
    let v = c.view();
    let l = c.poset.labels();
    let mut r = PropertyReport::new("dual unsharp adjointness");
    r.push(check_tuples(
        "C3'",
        "U(x,y') ⊙ y >= L(y,z) iff U(x,y') >= y → z",
        l,
        3,
        |t| match v.dual_adjointness(t[0], t[1], t[2]) {
            Some((a, b)) if a == b => Ok(()),
            Some((a, b)) => Err(format!("sides disagree: {a} vs {b}")),
            None => Err("product undefined".into()),
        },
    ));
    r.push(check_tuples(
        "C3=C3'",
        "inclusion form and order form agree side by side",
        l,
        3,
        |t| {
            let inc = v.adjointness(t[0], t[1], t[2]).ok_or("product undefined")?;
            let ord = v
                .dual_adjointness(t[0], t[1], t[2])
                .ok_or("product undefined")?;
            if inc == ord {
                Ok(())
            } else {
                Err(format!("inclusion form {inc:?} vs order form {ord:?}"))
            }
        },
    ));
    r
}

/// For every triple, the truth value of the adjointness biconditional at
/// `(a, b, c)` equals that of `a → b <= U(a',c') iff a → c <= U(a',b')`.
pub fn equivalence_c3_xi(e: &EffectAlgebra) -> PropertyReport {
    let cand = candidate_from_effect_algebra(e);
    let v = View {
        poset: &cand.poset,
        inv: &cand.involution,
        odot: &cand.odot,
        imp: &cand.imp,
    };
    let mut r = PropertyReport::new(format!(
        "adjointness versus implication symmetry on {}",
        e.name()
    ));
    r.push(check_tuples(
        "C3<=>xi",
        "adjointness and implication symmetry agree",
        e.labels(),
        3,
        |t| {
            let (a, b, c) = (t[0], t[1], t[2]);
            let (l3, r3) = v.adjointness(a, b, c).ok_or("product undefined")?;
            let (lx, rx) = th2_xi_sides(e, a, b, c);
            if (l3 == r3) == (lx == rx) {
                Ok(())
            } else {
                Err(format!(
                    "adjointness {} but symmetry {}",
                    l3 == r3,
                    lx == rx
                ))
            }
        },
    ));
    r
}

/// C1 through C5 on `C(E)`, as a property report.
pub fn surp_report(e: &EffectAlgebra) -> PropertyReport {
    let mut r = PropertyReport::new(format!("residuated poset conditions on {}", e.name()));
    let labels = e.labels();
    let triples = e.len().pow(3);
    let result = from_effect_algebra(e);
    for cond in [Condition::C1, Condition::C2, Condition::C3, Condition::C4] {
        let failure = result
            .as_ref()
            .err()
            .and_then(|rep| rep.first(cond))
            .map(|v| witness(labels, &v.witness, v.detail.clone()));
        r.push(verdict(
            &cond.to_string(),
            condition_statement(cond),
            triples,
            failure,
        ));
    }
    let failure = match &result {
        Ok(c) if c.is_divisible() => None,
        Ok(_) => Some(witness(
            labels,
            &[],
            "x ⊙ (x → y) differs from L(x, y)".into(),
        )),
        Err(_) => Some(witness(labels, &[], "conditions C1 to C4 fail".into())),
    };
    r.push(verdict(
        "C5",
        "x ⊙ (x → y) = L(x, y)",
        e.len().pow(2),
        failure,
    ));
    r
}

fn condition_statement(c: Condition) -> &'static str {
    match c {
        Condition::C1 => "bounded poset with antitone involution",
        Condition::C2 => "strict partial commutative monoid, monotone, with recovery",
        Condition::C3 => "U(x,y') ⊙ y ⊆ UL(y,z) iff U(x,y') ⊆ U(y → z)",
        Condition::C4 => "x → 0 = {x'}",
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn two_element_products() {
        let e = fixtures::load("BOOL-1").unwrap();
        let c = from_effect_algebra(&e).unwrap();
        assert!(c.is_divisible());
        assert_eq!(c.odot(1, 1), Some(1));
        assert_eq!(c.odot(0, 1), Some(0));
        assert_eq!(c.odot(1, 0), Some(0));
        assert_eq!(c.odot(0, 0), None);
    }

    #[test]
    fn fixtures_are_divisible_and_roundtrip() {
        for name in ["E9", "E6", "BOOL-2", "CHAIN-5"] {
            let e = fixtures::load(name).unwrap();
            let c = from_effect_algebra(&e).unwrap_or_else(|r| panic!("{name}: {r}"));
            assert!(c.is_divisible(), "{name}");
            let rt = roundtrip_check(&e);
            assert!(rt.identical, "{name}: {rt:?}");
        }
    }

    #[test]
    fn c4_mutation_is_caught() {
        let e = fixtures::load("E9").unwrap();
        let mut cand = candidate_from_effect_algebra(&e);
        let (a, g, one) = (e.index_of("a").unwrap(), e.index_of("g").unwrap(), e.one());
        cand.imp[a * 9 + e.zero()] = Subset::from_elems(9, [g, one]);
        let rep = validate_surp(cand).unwrap_err();
        assert_eq!(rep.witness_labels(Condition::C4), Some(vec!["a"]));
    }

    #[test]
    fn broken_involution_is_c1() {
        let e = fixtures::load("E6").unwrap();
        let mut cand = candidate_from_effect_algebra(&e);
        cand.involution = Involution::new((0..6).collect());
        let rep = validate_surp(cand).unwrap_err();
        assert!(rep.first(Condition::C1).is_some());
    }

    #[test]
    fn wrong_product_is_c2() {
        let e = fixtures::load("E6").unwrap();
        let mut cand = candidate_from_effect_algebra(&e);
        // make ⊙ total: violates strictness
        cand.odot.set(0, 0, Some(0));
        let rep = validate_surp(cand).unwrap_err();
        assert_eq!(rep.witness_labels(Condition::C2), Some(vec!["0", "0"]));
    }

    #[test]
    fn dual_adjointness_on_small_fixtures() {
        for name in ["E9", "E6", "BOOL-1"] {
            let c = from_effect_algebra(&fixtures::load(name).unwrap()).unwrap();
            let r = check_dual_adjointness(&c);
            assert!(r.all_pass(), "{r}");
        }
    }

    #[test]
    fn adjointness_equivalence_on_e9() {
        let r = equivalence_c3_xi(&fixtures::load("E9").unwrap());
        assert!(r.all_pass(), "{r}");
        assert_eq!(
            r.clauses[0].outcome,
            crate::report::Outcome::Pass { checked: 729 }
        );
    }
}
