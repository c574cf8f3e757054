//! Deductive systems: subsets containing 1 and closed under unsharp Modus Ponens.

use crate::algebra::EffectAlgebra;
use crate::error::Error;
use crate::implication::{implication_table, ImplicationTable};
use crate::report::{check_tuples, verdict, witness, PropertyReport};
use crate::subset::Subset;

/// Largest carrier scanned subset by subset.
pub const BRUTE_FORCE_MAX: usize = 20;
/// Most systems the structured enumeration will materialize.
pub const MAX_SYSTEMS: usize = 1 << 22;
/// Largest family of systems whose every subfamily is checked for bounds.
pub const COMPLETENESS_EXHAUSTIVE_MAX: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DedWitness {
    /// The top element is missing.
    MissingTop,
    /// `x ∈ D` and `x → y ⊆ D` but `y ∉ D`.
    ModusPonens { x: usize, y: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DedCheck {
    Deductive,
    NotDeductive(DedWitness),
}

impl DedCheck {
    pub fn holds(self) -> bool {
        self == DedCheck::Deductive
    }
}

/// Checks both defining conditions directly.
pub fn is_deductive_system(e: &EffectAlgebra, d: Subset) -> DedCheck {
    check_with(&implication_table(e), e.one(), d)
}

fn check_with(imp: &ImplicationTable, one: usize, d: Subset) -> DedCheck {
    if !d.contains(one) {
        return DedCheck::NotDeductive(DedWitness::MissingTop);
    }
    for x in d {
        for y in 0..imp.len() {
            if !d.contains(y) && imp.get(x, y).is_subset_of(d) {
                return DedCheck::NotDeductive(DedWitness::ModusPonens { x, y });
            }
        }
    }
    DedCheck::Deductive
}

/// For a proper subset containing 1: deductive exactly when `D ∩ D' = ∅`.
pub fn characterize(e: &EffectAlgebra, d: Subset) -> Result<bool, Error> {
    d.check_carrier(e.len())?;
    if d.is_full() {
        return Err(Error::NotProper);
    }
    if !d.contains(e.one()) {
        return Err(Error::MissingTop);
    }
    Ok(d.is_disjoint(e.set_complement(d)))
}

fn canonical_sort(systems: &mut [Subset]) {
    systems.sort_by_key(|s| (s.len(), s.bits()));
}

/// Every deductive system, ordered by size and then bit pattern.
///
/// Up to [`BRUTE_FORCE_MAX`] elements every subset is tested against the
/// definition; above that the systems are built from complementary pairs.
pub fn enumerate_ded(e: &EffectAlgebra) -> Result<Vec<Subset>, Error> {
    if e.len() <= BRUTE_FORCE_MAX {
        Ok(enumerate_ded_brute_force(e))
    } else {
        enumerate_ded_structured(e)
    }
}

/// Tests all `2^n` subsets containing 1 against the definition.
pub fn enumerate_ded_brute_force(e: &EffectAlgebra) -> Vec<Subset> {
    assert!(
        e.len() <= BRUTE_FORCE_MAX,
        "brute force limited to {BRUTE_FORCE_MAX} elements"
    );
    let imp = implication_table(e);
    let n = e.len();
    let one = e.one();
    let mut out: Vec<Subset> = (0..1u64 << n)
        .filter(|bits| bits >> one & 1 == 1)
        .map(|bits| Subset::from_bits(n, bits).unwrap())
        .filter(|&d| check_with(&imp, one, d).holds())
        .collect();
    canonical_sort(&mut out);
    out
}

/// `{1}` plus at most one element from each complementary pair `{x, x'}` with
/// `x ∉ {0, 1}` and `x != x'`, together with the whole carrier.
pub fn enumerate_ded_structured(e: &EffectAlgebra) -> Result<Vec<Subset>, Error> {
    let n = e.len();
    let pairs: Vec<(usize, usize)> = (0..n)
        .filter(|&x| x != e.zero() && x != e.one() && x < e.comp(x))
        .map(|x| (x, e.comp(x)))
        .collect();
    let count = 3usize
        .checked_pow(pairs.len() as u32)
        .filter(|&c| c < MAX_SYSTEMS)
        .ok_or(Error::SizeCap {
            what: "deductive systems",
            limit: MAX_SYSTEMS,
            got: usize::MAX,
        })?;
    let mut out = Vec::with_capacity(count + 1);
    let base = Subset::singleton(n, e.one());
    for mut code in 0..count {
        let mut d = base;
        for &(x, y) in &pairs {
            match code % 3 {
                1 => d = d.with(x),
                2 => d = d.with(y),
                _ => {}
            }
            code /= 3;
        }
        if !d.is_full() {
            out.push(d);
        }
    }
    out.push(e.carrier());
    canonical_sort(&mut out);
    out.dedup();
    Ok(out)
}

/// `{1, x}` for each `x ∉ {0, 1}` with `x' != x`.
pub fn atoms(e: &EffectAlgebra) -> Result<Vec<Subset>, Error> {
    let n = e.len();
    let out: Vec<Subset> = (0..n)
        .filter(|&x| x != e.zero() && x != e.one() && e.comp(x) != x)
        .map(|x| Subset::from_elems(n, [e.one(), x]))
        .collect();
    if out.is_empty() {
        Err(Error::NoAtoms)
    } else {
        Ok(out)
    }
}

/// The least deductive system containing `m`: `M ∪ {1}` when `M ∩ M' = ∅`
/// and `0 ∉ M`, otherwise the whole carrier.
pub fn generate(e: &EffectAlgebra, m: Subset) -> Subset {
    if m.is_disjoint(e.set_complement(m)) && !m.contains(e.zero()) {
        m.with(e.one())
    } else {
        e.carrier()
    }
}

/// `(Ded(E), ⊆)` with its bounds and binary operations.
#[derive(Clone, Debug)]
pub struct DedLattice {
    systems: Vec<Subset>,
}

impl DedLattice {
    pub fn systems(&self) -> &[Subset] {
        &self.systems
    }

    pub fn bottom(&self) -> Subset {
        self.systems[0]
    }

    pub fn top(&self) -> Subset {
        *self.systems.last().unwrap()
    }

    /// Greatest system below both, when one exists.
    pub fn meet(&self, a: Subset, b: Subset) -> Option<Subset> {
        self.infimum(&[a, b])
    }

    /// Least system above both, when one exists.
    pub fn join(&self, a: Subset, b: Subset) -> Option<Subset> {
        self.supremum(&[a, b])
    }

    /// Greatest lower bound of a family, computed from the inclusion order alone.
    pub fn infimum(&self, family: &[Subset]) -> Option<Subset> {
        let lower: Vec<Subset> = self
            .systems
            .iter()
            .copied()
            .filter(|s| family.iter().all(|f| s.is_subset_of(*f)))
            .collect();
        lower
            .iter()
            .copied()
            .find(|&g| lower.iter().all(|s| s.is_subset_of(g)))
    }

    pub fn supremum(&self, family: &[Subset]) -> Option<Subset> {
        let upper: Vec<Subset> = self
            .systems
            .iter()
            .copied()
            .filter(|s| family.iter().all(|f| f.is_subset_of(*s)))
            .collect();
        upper
            .iter()
            .copied()
            .find(|&g| upper.iter().all(|s| g.is_subset_of(*s)))
    }

    /// Systems covering `s`: strictly above it with nothing in between.
    pub fn covers_of(&self, s: Subset) -> Vec<Subset> {
        let above: Vec<Subset> = self
            .systems
            .iter()
            .copied()
            .filter(|&t| t != s && s.is_subset_of(t))
            .collect();
        above
            .iter()
            .copied()
            .filter(|&t| !above.iter().any(|&u| u != t && u.is_subset_of(t)))
            .collect()
    }

    /// Checks that every subfamily has an infimum and a supremum.
    ///
    /// With at most [`COMPLETENESS_EXHAUSTIVE_MAX`] systems every subfamily
    /// is visited. Larger lattices are checked on the empty family and all
    /// pairs, which suffices: in a finite poset, bounds for pairs plus a
    /// least and greatest element give bounds for every family by induction.
    pub fn verify_completeness(&self) -> Completeness {
        self.verify_completeness_with(if self.systems.len() <= COMPLETENESS_EXHAUSTIVE_MAX {
            CompletenessMethod::AllFamilies
        } else {
            CompletenessMethod::PairwiseBounds
        })
    }

    /// Panics on [`CompletenessMethod::AllFamilies`] with 64 or more systems.
    pub fn verify_completeness_with(&self, method: CompletenessMethod) -> Completeness {
        let k = self.systems.len();
        assert!(
            method == CompletenessMethod::PairwiseBounds || k < 64,
            "too many families"
        );
        let mut checked = 0u64;
        let mut check = |family: &[Subset]| {
            checked += 1;
            self.infimum(family).is_some() && self.supremum(family).is_some()
        };
        let failure = match method {
            CompletenessMethod::AllFamilies => (0u64..1 << k)
                .map(|mask| {
                    (0..k)
                        .filter(|i| mask >> i & 1 == 1)
                        .map(|i| self.systems[i])
                        .collect::<Vec<_>>()
                })
                .find(|f| !check(f)),
            CompletenessMethod::PairwiseBounds => std::iter::once(vec![])
                .chain(
                    (0..k)
                        .flat_map(|i| (i + 1..k).map(move |j| (i, j)))
                        .map(|(i, j)| vec![self.systems[i], self.systems[j]]),
                )
                .find(|f| !check(f)),
        };
        Completeness {
            complete: failure.is_none(),
            method,
            families_checked: checked,
            failure,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CompletenessMethod {
    /// Every subfamily was checked directly.
    AllFamilies,
    /// The empty family and every pair were checked.
    PairwiseBounds,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Completeness {
    pub complete: bool,
    pub method: CompletenessMethod,
    pub families_checked: u64,
    pub failure: Option<Vec<Subset>>,
}

pub fn ded_lattice(e: &EffectAlgebra) -> Result<DedLattice, Error> {
    Ok(DedLattice {
        systems: enumerate_ded(e)?,
    })
}

/// Brute-force closure checks against the `D ∩ D' = ∅` characterization, over
/// every subset containing 1.
pub fn theorem3_report(e: &EffectAlgebra) -> Result<PropertyReport, Error> {
    let n = e.len();
    if n > BRUTE_FORCE_MAX {
        return Err(Error::SizeCap {
            what: "carrier for the subset scan",
            limit: BRUTE_FORCE_MAX,
            got: n,
        });
    }
    let imp = implication_table(e);
    let one = e.one();
    let labels = e.labels();
    let mut r = PropertyReport::new(format!("deductive systems on {}", e.name()));

    r.push(verdict(
        "whole",
        "the carrier is deductive",
        1,
        (!check_with(&imp, one, e.carrier()).holds())
            .then(|| witness(labels, &[], "carrier not closed".into())),
    ));

    let mut checked = 0;
    let mut agree_fail = None;
    let mut inner_fail = None;
    for bits in 0..1u64 << n {
        let d = Subset::from_bits(n, bits).unwrap();
        if !d.contains(one) || d.is_full() {
            continue;
        }
        checked += 1;
        let brute = check_with(&imp, one, d).holds();
        let shortcut = characterize(e, d)?;
        if brute != shortcut && agree_fail.is_none() {
            agree_fail = Some(witness(
                labels,
                &d.iter().collect::<Vec<_>>(),
                format!("definition says {brute}, disjointness says {shortcut}"),
            ));
        }
        // a proper deductive system has no a ∈ D, b with a → b ⊆ D
        if brute && inner_fail.is_none() {
            let hit = d
                .iter()
                .flat_map(|a| (0..n).map(move |b| (a, b)))
                .find(|&(a, b)| imp.get(a, b).is_subset_of(d));
            if let Some((a, b)) = hit {
                inner_fail = Some(witness(labels, &[a, b], format!("inside {}", e.render(d))));
            }
        }
    }
    r.push(verdict(
        "disjoint",
        "proper D ∋ 1 is deductive iff D ∩ D' = ∅",
        checked,
        agree_fail,
    ));
    r.push(verdict(
        "no-inner",
        "proper deductive D admits no a ∈ D, b with a → b ⊆ D",
        checked,
        inner_fail,
    ));
    Ok(r)
}

/// Ded(E) is closed under intersection and matches the generation rule, checked
/// for every subset `M` of the carrier.
pub fn generation_report(e: &EffectAlgebra) -> Result<PropertyReport, Error> {
    let systems = enumerate_ded(e)?;
    let labels = e.labels();
    let mut r = PropertyReport::new(format!("generated deductive systems on {}", e.name()));
    r.push(check_tuples(
        "meet",
        "intersection of two systems is a system",
        labels,
        0,
        |_| {
            for &a in &systems {
                for &b in &systems {
                    let m = a.intersection(b);
                    if systems
                        .binary_search_by_key(&(m.len(), m.bits()), |s| (s.len(), s.bits()))
                        .is_err()
                    {
                        return Err(format!("{} ∩ {}", e.render(a), e.render(b)));
                    }
                }
            }
            Ok(())
        },
    ));
    if e.len() <= BRUTE_FORCE_MAX {
        r.push(check_tuples(
            "gen",
            "generate(M) is the least system containing M",
            labels,
            0,
            |_| {
                for bits in 0..1u64 << e.len() {
                    let m = Subset::from_bits(e.len(), bits).unwrap();
                    let least = systems
                        .iter()
                        .copied()
                        .filter(|s| m.is_subset_of(*s))
                        .fold(e.carrier(), Subset::intersection);
                    if generate(e, m) != least {
                        return Err(format!("M = {}", e.render(m)));
                    }
                }
                Ok(())
            },
        ));
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn e9_membership_examples() {
        let e = fixtures::load("E9").unwrap();
        assert!(is_deductive_system(&e, e.subset(&["1"]).unwrap()).holds());
        let d = e.subset(&["1", "d"]).unwrap();
        assert_eq!(
            is_deductive_system(&e, d),
            DedCheck::NotDeductive(DedWitness::ModusPonens {
                x: e.index_of("d").unwrap(),
                y: e.zero()
            })
        );
        assert!(is_deductive_system(&e, e.subset(&["1", "a", "b"]).unwrap()).holds());
        assert_eq!(
            is_deductive_system(&e, e.subset(&["a"]).unwrap()),
            DedCheck::NotDeductive(DedWitness::MissingTop)
        );
    }

    #[test]
    fn characterization_preconditions() {
        let e = fixtures::load("E9").unwrap();
        assert!(characterize(&e, e.subset(&["1", "a", "b"]).unwrap()).unwrap());
        assert!(!characterize(&e, e.subset(&["1", "d"]).unwrap()).unwrap());
        assert!(matches!(
            characterize(&e, e.carrier()),
            Err(Error::NotProper)
        ));
        assert!(matches!(
            characterize(&e, e.subset(&["a"]).unwrap()),
            Err(Error::MissingTop)
        ));
        let e6 = fixtures::load("E6").unwrap();
        assert!(!characterize(&e6, e6.subset(&["1", "a", "a'"]).unwrap()).unwrap());
    }

    #[test]
    fn two_element_systems() {
        let e = fixtures::load("BOOL-1").unwrap();
        let all = enumerate_ded(&e).unwrap();
        assert_eq!(all, vec![Subset::singleton(2, 1), Subset::full(2)]);
        assert!(matches!(atoms(&e), Err(Error::NoAtoms)));
    }

    #[test]
    fn structured_matches_brute_force() {
        for name in ["E9", "E6", "BOOL-3", "CHAIN-5", "BOOL-1"] {
            let e = fixtures::load(name).unwrap();
            assert_eq!(
                enumerate_ded_brute_force(&e),
                enumerate_ded_structured(&e).unwrap(),
                "{name}"
            );
        }
    }

    #[test]
    fn generate_examples() {
        let e = fixtures::load("E9").unwrap();
        assert_eq!(
            generate(&e, e.subset(&["a", "b"]).unwrap()),
            e.subset(&["1", "a", "b"]).unwrap()
        );
        assert_eq!(generate(&e, e.subset(&["a", "g"]).unwrap()), e.carrier());
        assert_eq!(generate(&e, e.subset(&["0"]).unwrap()), e.carrier());
    }

    #[test]
    fn lattice_operations() {
        let e = fixtures::load("E9").unwrap();
        let lat = ded_lattice(&e).unwrap();
        let s = |ls: &[&str]| e.subset(ls).unwrap();
        assert_eq!(lat.bottom(), s(&["1"]));
        assert_eq!(lat.top(), e.carrier());
        assert_eq!(lat.meet(s(&["1", "a"]), s(&["1", "b"])), Some(s(&["1"])));
        assert_eq!(lat.join(s(&["1", "a"]), s(&["1", "g"])), Some(e.carrier()));
        assert_eq!(
            lat.join(s(&["1", "a"]), s(&["1", "b"])),
            Some(s(&["1", "a", "b"]))
        );
    }

    #[test]
    fn completeness_methods_agree() {
        let e6 = ded_lattice(&fixtures::load("E6").unwrap()).unwrap();
        let all = e6.verify_completeness();
        assert_eq!(all.method, CompletenessMethod::AllFamilies);
        assert_eq!(all.families_checked, 1 << e6.systems().len());
        let pairs = e6.verify_completeness_with(CompletenessMethod::PairwiseBounds);
        assert!(all.complete && pairs.complete);

        let e9 = ded_lattice(&fixtures::load("E9").unwrap()).unwrap();
        let c = e9.verify_completeness();
        assert_eq!(c.method, CompletenessMethod::PairwiseBounds);
        assert!(c.complete);
    }

    #[test]
    fn missing_join_is_found() {
        let n = 4;
        let s = |xs: &[usize]| Subset::from_elems(n, xs.iter().copied());
        // {3} below two incomparable maximal sets, no top
        let broken = DedLattice {
            systems: vec![s(&[3]), s(&[1, 3]), s(&[2, 3])],
        };
        for m in [
            CompletenessMethod::AllFamilies,
            CompletenessMethod::PairwiseBounds,
        ] {
            let c = broken.verify_completeness_with(m);
            assert!(!c.complete);
            assert!(c.failure.is_some());
        }
    }

    #[test]
    fn reports_pass_on_fixtures() {
        for name in ["E9", "E6", "BOOL-2"] {
            let e = fixtures::load(name).unwrap();
            let r = theorem3_report(&e).unwrap();
            assert!(r.all_pass(), "{r}");
            let g = generation_report(&e).unwrap();
            assert!(g.all_pass(), "{g}");
        }
    }
}
