use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use super::EffectAlgebra;
use crate::report::{check_tuples, PropertyReport};
use crate::subset::{subsets_of, Subset};

/// The seven basic identities of an effect algebra, checked on every tuple.
pub fn check_lemma1(e: &EffectAlgebra) -> PropertyReport {
    let l = e.labels();
    let mut r = PropertyReport::new(format!("basic identities on {}", e.name()));
    r.push(check_tuples("i", "a'' = a", l, 1, |t| {
        let a = t[0];
        (e.comp(e.comp(a)) == a)
            .then_some(())
            .ok_or_else(|| "a'' != a".into())
    }));
    r.push(check_tuples("ii", "a <= b implies b' <= a'", l, 2, |t| {
        let (a, b) = (t[0], t[1]);
        if e.leq(a, b) && !e.leq(e.comp(b), e.comp(a)) {
            return Err("b' not below a'".into());
        }
        Ok(())
    }));
    r.push(check_tuples(
        "iii",
        "a + b defined iff a <= b'",
        l,
        2,
        |t| {
            let (a, b) = (t[0], t[1]);
            if e.sum(a, b).is_some() != e.leq(a, e.comp(b)) {
                return Err("definedness disagrees with a <= b'".into());
            }
            Ok(())
        },
    ));
    r.push(check_tuples(
        "iv",
        "a <= b, b + c defined imply a + c defined and a + c <= b + c",
        l,
        3,
        |t| {
            let (a, b, c) = (t[0], t[1], t[2]);
            if !e.leq(a, b) {
                return Ok(());
            }
            let Some(bc) = e.sum(b, c) else { return Ok(()) };
            match e.sum(a, c) {
                None => Err("a + c undefined".into()),
                Some(ac) if !e.leq(ac, bc) => Err("a + c not below b + c".into()),
                Some(_) => Ok(()),
            }
        },
    ));
    r.push(check_tuples(
        "v",
        "a <= b implies a + (a + b')' = b and (b' + (b' + a)')' = a",
        l,
        2,
        |t| {
            let (a, b) = (t[0], t[1]);
            if !e.leq(a, b) {
                return Ok(());
            }
            let first = e.sum(a, e.comp(b)).and_then(|s| e.sum(a, e.comp(s)));
            if first != Some(b) {
                return Err("a + (a + b')' != b".into());
            }
            let nb = e.comp(b);
            let second = e
                .sum(nb, a)
                .and_then(|s| e.sum(nb, e.comp(s)))
                .map(|v| e.comp(v));
            if second != Some(a) {
                return Err("(b' + (b' + a)')' != a".into());
            }
            Ok(())
        },
    ));
    r.push(check_tuples("vi", "a + 0 = 0 + a = a", l, 1, |t| {
        let a = t[0];
        if e.sum(a, e.zero()) == Some(a) && e.sum(e.zero(), a) == Some(a) {
            Ok(())
        } else {
            Err("zero is not neutral".into())
        }
    }));
    r.push(check_tuples("vii", "0' = 1 and 1' = 0", l, 0, |_| {
        if e.comp(e.zero()) == e.one() && e.comp(e.one()) == e.zero() {
            Ok(())
        } else {
            Err("constants are not complementary".into())
        }
    }));
    r
}

/// The two cone identities `L(a,b) = (a' + (a' + L(a,b))')'` and
/// `U(a,b) = a + (a + U(a,b)')'`, for every pair.
pub fn check_lemma2(e: &EffectAlgebra) -> PropertyReport {
    let l = e.labels();
    let p = e.order();
    let mut r = PropertyReport::new(format!("cone identities on {}", e.name()));
    r.push(check_tuples(
        "lower",
        "L(a,b) = (a' + (a' + L(a,b))')'",
        l,
        2,
        |t| {
            let (a, b) = (t[0], t[1]);
            let lab = p.lower_of(&[a, b]);
            let na = e.comp(a);
            let rhs = e
                .add_elem_set(na, lab)
                .and_then(|s| e.add_elem_set(na, e.set_complement(s)))
                .map(|s| e.set_complement(s))
                .map_err(|err| err.to_string())?;
            if rhs == lab {
                Ok(())
            } else {
                Err(format!("{} != {}", e.render(lab), e.render(rhs)))
            }
        },
    ));
    r.push(check_tuples(
        "upper",
        "U(a,b) = a + (a + U(a,b)')'",
        l,
        2,
        |t| {
            let (a, b) = (t[0], t[1]);
            let uab = p.upper_of(&[a, b]);
            let rhs = e
                .add_elem_set(a, e.set_complement(uab))
                .and_then(|s| e.add_elem_set(a, e.set_complement(s)))
                .map_err(|err| err.to_string())?;
            if rhs == uab {
                Ok(())
            } else {
                Err(format!("{} != {}", e.render(uab), e.render(rhs)))
            }
        },
    ));
    r
}

/// Outcome of the monotonicity scan.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Monotonicity {
    pub holds: bool,
    /// False when subset pairs were sampled rather than exhausted.
    pub exhaustive: bool,
    pub cases: u64,
    /// `(x, A, B)` with `A, B <= x'`, `L(A) <= U(B)` but not `L(x+A) <= U(x+B)`.
    pub witness: Option<(usize, Subset, Subset)>,
}

/// Largest carrier for which all subset pairs are enumerated.
pub const MONOTONE_EXHAUSTIVE_MAX: usize = 9;
const MONOTONE_SAMPLES_PER_ELEMENT: usize = 50_000;

/// Whether `A, B <= x'` and `L(A) <= U(B)` imply `L(x + A) <= U(x + B)`,
/// over nonempty `A` and `B`.
///
/// With `B` empty the condition fails in every algebra with more than one
/// element (`x + B` is empty, so its upper cone is everything), so only
/// nonempty subsets are quantified over.
pub fn is_monotonous(e: &EffectAlgebra) -> Monotonicity {
    let exhaustive = e.len() <= MONOTONE_EXHAUSTIVE_MAX;
    let p = e.order();
    let mut cases = 0u64;
    let mut rng = StdRng::seed_from_u64(0x5eed_0fe4);
    for x in 0..e.len() {
        let room = p.down_set(e.comp(x));
        // per admissible A: U(L(A)), U(A), U(L(x+A)), U(x+A)
        let profile = |a: Subset| {
            let xa = e.add_elem_set(x, a).expect("A <= x' makes x + A defined");
            (
                p.upper(p.lower(a)),
                p.upper(a),
                p.upper(p.lower(xa)),
                p.upper(xa),
            )
        };
        // L(A) <= U(B)  iff  U(B) ⊆ U(L(A))
        let violates = |pa: &(Subset, Subset, Subset, Subset),
                        pb: &(Subset, Subset, Subset, Subset)| {
            pb.1.is_subset_of(pa.0) && !pb.3.is_subset_of(pa.2)
        };
        if exhaustive {
            let subs: Vec<Subset> = subsets_of(room).filter(|s| !s.is_empty()).collect();
            let profiles: Vec<_> = subs.iter().map(|&a| profile(a)).collect();
            for (i, pa) in profiles.iter().enumerate() {
                for (j, pb) in profiles.iter().enumerate() {
                    cases += 1;
                    if violates(pa, pb) {
                        return Monotonicity {
                            holds: false,
                            exhaustive,
                            cases,
                            witness: Some((x, subs[i], subs[j])),
                        };
                    }
                }
            }
        } else {
            let bits = room.bits();
            for _ in 0..MONOTONE_SAMPLES_PER_ELEMENT {
                let a = Subset::from_bits(e.len(), rng.gen::<u64>() & bits).unwrap();
                let b = Subset::from_bits(e.len(), rng.gen::<u64>() & bits).unwrap();
                if a.is_empty() || b.is_empty() {
                    continue;
                }
                cases += 1;
                if violates(&profile(a), &profile(b)) {
                    return Monotonicity {
                        holds: false,
                        exhaustive,
                        cases,
                        witness: Some((x, a, b)),
                    };
                }
            }
        }
    }
    Monotonicity {
        holds: true,
        exhaustive,
        cases,
        witness: None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn set_arithmetic_suites_hold_on_fixtures() {
        for name in ["E9", "E6", "BOOL-1", "BOOL-2", "CHAIN-4"] {
            let e = fixtures::load(name).unwrap();
            let r1 = check_lemma1(&e);
            assert!(r1.all_pass(), "{r1}");
            assert_eq!(r1.clauses.len(), 7);
            let r2 = check_lemma2(&e);
            assert!(r2.all_pass(), "{r2}");
        }
    }

    #[test]
    fn cone_suite_counts_all_pairs() {
        let e = fixtures::load("E6").unwrap();
        let r = check_lemma2(&e);
        for c in &r.clauses {
            assert_eq!(c.outcome, crate::report::Outcome::Pass { checked: 36 });
        }
    }

    #[test]
    fn two_element_is_monotonous() {
        let m = is_monotonous(&fixtures::load("BOOL-1").unwrap());
        assert!(m.holds && m.exhaustive);
    }
}
