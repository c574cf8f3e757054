use std::collections::{BTreeMap, BTreeSet};

use effect_logic::algebra::{validate, RawAlgebra};
use effect_logic::dsl::{emit_algebra, parse_algebra, parse_specs};
use effect_logic::enumerate::{
    automorphism_count, canonical_form, enumerate_compatible, enumerate_effect_algebras,
    is_isomorphic, standard_labels,
};
use effect_logic::suites::{run_suite, SUITES};
use effect_logic::{fixtures, EffectAlgebra, PartialTable};

fn table_key(e: &EffectAlgebra) -> Vec<Option<usize>> {
    let n = e.len();
    (0..n * n).map(|i| e.sum(i / n, i % n)).collect()
}

/// Fixes only what every effect algebra forces (`0 + x = x`, `1 + x`
/// undefined for `x != 0`) and tries every symmetric assignment of the
/// remaining cells, values drawn from the whole carrier.
fn filter_oracle(n: usize) -> Vec<EffectAlgebra> {
    let labels = standard_labels(n);
    let middle: Vec<usize> = (1..n - 1).collect();
    let cells: Vec<(usize, usize)> = middle
        .iter()
        .flat_map(|&i| {
            middle
                .iter()
                .filter(move |&&j| j >= i)
                .map(move |&j| (i, j))
        })
        .collect();
    let choices = n + 1;
    let mut out = Vec::new();
    for code in 0..choices.pow(cells.len() as u32) {
        let mut sum = PartialTable::undefined(n);
        for x in 0..n {
            sum.set(0, x, Some(x));
            sum.set(x, 0, Some(x));
        }
        let mut c = code;
        for &(i, j) in &cells {
            let v = (c % choices).checked_sub(1);
            c /= choices;
            sum.set(i, j, v);
            sum.set(j, i, v);
        }
        let raw = RawAlgebra {
            name: "oracle".into(),
            labels: labels.clone(),
            zero: 0,
            one: n - 1,
            sum,
            declared_complements: vec![],
        };
        out.extend(validate(&raw).ok());
    }
    out
}

#[test]
fn search_matches_filter_oracle_up_to_five() {
    for n in 2..=5 {
        let search: BTreeSet<_> = enumerate_effect_algebras(n, false)
            .unwrap()
            .algebras
            .iter()
            .map(table_key)
            .collect();
        let oracle: BTreeSet<_> = filter_oracle(n).iter().map(table_key).collect();
        assert_eq!(search, oracle, "n={n}");
    }
}

#[test]
fn pinned_counts() {
    let want = [
        (2, 1, 1),
        (3, 1, 1),
        (4, 4, 3),
        (5, 16, 4),
        (6, 142, 10),
        (7, 1006, 14),
    ];
    for (n, labeled, iso) in want {
        let r = enumerate_effect_algebras(n, true).unwrap();
        assert_eq!((r.labeled_count, r.iso_count), (labeled, iso), "n={n}");
    }
}

#[test]
fn canonical_classes_match_pairwise_isomorphism() {
    for n in 2..=6 {
        let r = enumerate_effect_algebras(n, false).unwrap();
        let mut by_form: BTreeMap<_, Vec<&EffectAlgebra>> = BTreeMap::new();
        for e in &r.algebras {
            by_form
                .entry(canonical_form(e).unwrap())
                .or_default()
                .push(e);
        }
        assert_eq!(by_form.len(), r.iso_count);
        let reps: Vec<&EffectAlgebra> = by_form.values().map(|v| v[0]).collect();
        for (i, a) in reps.iter().enumerate() {
            for b in &reps[i + 1..] {
                assert!(
                    is_isomorphic(a, b).is_none(),
                    "n={n}: distinct forms but isomorphic"
                );
            }
        }
        for members in by_form.values() {
            for m in members {
                assert!(
                    is_isomorphic(members[0], m).is_some(),
                    "n={n}: same form, not isomorphic"
                );
            }
        }
    }
}

#[test]
fn orbit_identity_up_to_six() {
    for n in 2..=6 {
        let r = enumerate_effect_algebras(n, true).unwrap();
        let relabelings: usize = (1..=n - 2).product();
        let total: usize = r
            .algebras
            .iter()
            .map(|e| relabelings / automorphism_count(e))
            .sum();
        assert_eq!(total, r.labeled_count, "n={n}");
    }
}

#[test]
fn up_to_iso_representatives_are_pairwise_distinct() {
    let r = enumerate_effect_algebras(6, true).unwrap();
    for (i, a) in r.algebras.iter().enumerate() {
        for b in &r.algebras[i + 1..] {
            assert!(is_isomorphic(a, b).is_none());
        }
    }
}

#[test]
fn e6_class_is_found_at_six() {
    let e6 = fixtures::load("E6").unwrap();
    let r = enumerate_effect_algebras(6, true).unwrap();
    let hits = r
        .algebras
        .iter()
        .filter(|e| is_isomorphic(&e6, e).is_some())
        .count();
    assert_eq!(hits, 1);
    // exactly one class at six elements is not a lattice
    assert_eq!(r.algebras.iter().filter(|e| !e.is_lattice()).count(), 1);
}

#[test]
fn search_over_e9_order_finds_e9() {
    let e9 = fixtures::load("E9").unwrap();
    let found = enumerate_compatible(e9.order());
    assert!(
        found.iter().any(|e| table_key(e) == table_key(&e9)),
        "{} found",
        found.len()
    );
    for e in &found {
        assert!((0..9).all(|x| (0..9).all(|y| e.leq(x, y) == e9.leq(x, y))));
    }
}

#[test]
fn every_small_algebra_passes_every_suite() {
    for n in 2..=5 {
        for e in enumerate_effect_algebras(n, false).unwrap().algebras {
            for s in SUITES {
                let r = run_suite(&e, s).unwrap();
                assert!(r.all_pass(), "{}: {r}", e.name());
            }
        }
    }
}

#[test]
fn emitted_documents_roundtrip() {
    for n in 2..=5 {
        let r = enumerate_effect_algebras(n, false).unwrap();
        let stream: String = r.algebras.iter().map(emit_algebra).collect();
        let specs = parse_specs(&stream).unwrap();
        assert_eq!(specs.len(), r.algebras.len());
        for (spec, e) in specs.iter().zip(&r.algebras) {
            let back = spec.build().unwrap();
            assert_eq!(table_key(&back), table_key(e));
            assert_eq!(back.name(), e.name());
            assert_eq!(emit_algebra(&back), emit_algebra(e));
        }
    }
    for name in fixtures::names() {
        let e = fixtures::load(&name).unwrap();
        let back = parse_algebra(&emit_algebra(&e)).unwrap();
        assert_eq!(table_key(&back), table_key(&e), "{name}");
    }
}
