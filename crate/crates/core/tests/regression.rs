//! Pinned values for the bundled algebras, each paired with a naive
//! recomputation that does not go through the library's cone helpers.

use effect_logic::algebra::is_monotonous;
use effect_logic::deduction::{ded_lattice, enumerate_ded};
use effect_logic::laws::check_intro_adjointness;
use effect_logic::{fixtures, EffectAlgebra};

fn members(bits: u64, n: usize) -> Vec<usize> {
    (0..n).filter(|i| bits >> i & 1 == 1).collect()
}

fn lower(e: &EffectAlgebra, s: &[usize]) -> Vec<usize> {
    (0..e.len())
        .filter(|&z| s.iter().all(|&a| e.leq(z, a)))
        .collect()
}

fn upper(e: &EffectAlgebra, s: &[usize]) -> Vec<usize> {
    (0..e.len())
        .filter(|&z| s.iter().all(|&a| e.leq(a, z)))
        .collect()
}

/// `A <= B` for subsets: every element of `A` is below every element of `B`.
fn set_leq(e: &EffectAlgebra, a: &[usize], b: &[usize]) -> bool {
    a.iter().all(|&x| b.iter().all(|&y| e.leq(x, y)))
}

fn naive_monotonous(e: &EffectAlgebra) -> bool {
    let n = e.len();
    for x in 0..n {
        let room: Vec<usize> = (0..n).filter(|&z| e.leq(z, e.comp(x))).collect();
        let k = room.len();
        let pick = |m: u64| -> Vec<usize> { members(m, k).into_iter().map(|i| room[i]).collect() };
        for ma in 1..1u64 << k {
            let a = pick(ma);
            let xa: Vec<usize> = a.iter().map(|&z| e.sum(x, z).unwrap()).collect();
            for mb in 1..1u64 << k {
                let b = pick(mb);
                if !set_leq(e, &lower(e, &a), &upper(e, &b)) {
                    continue;
                }
                let xb: Vec<usize> = b.iter().map(|&z| e.sum(x, z).unwrap()).collect();
                if !set_leq(e, &lower(e, &xa), &upper(e, &xb)) {
                    return false;
                }
            }
        }
    }
    true
}

#[test]
fn monotonicity_of_fixtures() {
    for (name, want) in [
        ("E9", false),
        ("E6", true),
        ("BOOL-2", true),
        ("BOOL-3", true),
        ("CHAIN-5", true),
    ] {
        let e = fixtures::load(name).unwrap();
        let m = is_monotonous(&e);
        assert!(m.exhaustive);
        assert_eq!(m.holds, want, "{name}");
        assert_eq!(naive_monotonous(&e), want, "{name} oracle");
    }
}

#[test]
fn e9_monotonicity_witness_is_genuine() {
    let e = fixtures::load("E9").unwrap();
    let (x, a, b) = is_monotonous(&e).witness.expect("witness");
    assert_eq!(e.label(x), "a");
    assert_eq!(e.render(a), "{b,c}");
    assert_eq!(e.render(b), "{0}");
    let (a, b) = (members(a.bits(), 9), members(b.bits(), 9));
    assert!(set_leq(&e, &lower(&e, &a), &upper(&e, &b)));
    let xa: Vec<usize> = a.iter().map(|&z| e.sum(x, z).unwrap()).collect();
    let xb: Vec<usize> = b.iter().map(|&z| e.sum(x, z).unwrap()).collect();
    assert!(!set_leq(&e, &lower(&e, &xa), &upper(&e, &xb)));
}

#[test]
fn intro_adjointness_of_fixtures() {
    let e9 = fixtures::load("E9").unwrap();
    let r = check_intro_adjointness(&e9);
    assert!(!r.holds_globally);
    let (x, y, z) = r.witness.unwrap();
    assert_eq!((e9.label(x), e9.label(y), e9.label(z)), ("a", "f", "0"));
    for name in ["E6", "BOOL-2", "BOOL-3", "CHAIN-5"] {
        let e = fixtures::load(name).unwrap();
        let r = check_intro_adjointness(&e);
        assert!(r.holds_globally, "{name}");
        assert_eq!(r.triples_checked, e.len().pow(3));
    }
}

#[test]
fn deductive_system_counts() {
    for (name, systems) in [("E9", 28), ("E6", 10), ("BOOL-2", 4), ("CHAIN-5", 4)] {
        let e = fixtures::load(name).unwrap();
        assert_eq!(enumerate_ded(&e).unwrap().len(), systems, "{name}");
        assert!(
            ded_lattice(&e).unwrap().verify_completeness().complete,
            "{name}"
        );
    }
}
