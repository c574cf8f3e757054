//! The unsharp implication `x → y = x' + L(x, y)` and its set-argument forms.

use crate::algebra::EffectAlgebra;
use crate::report::{check_tuples, skipped, PropertyReport};
use crate::subset::Subset;

impl EffectAlgebra {
    /// `x → y = x' + L(x, y)`. Always defined, since `L(x, y) <= x`.
    pub fn implies(&self, x: usize, y: usize) -> Subset {
        let cone = self.order().lower_of(&[x, y]);
        self.add_elem_set(self.comp(x), cone)
            .expect("L(x,y) <= x = x'' so x' + L(x,y) is defined")
    }

    /// `A → B = A' + L(A, B)`, where `L(A, B)` is the lower cone of `A ∪ B`.
    ///
    /// Elements are passed as singletons. Every `w ∈ L(A, B)` lies below each
    /// `x ∈ A`, so `x' + w` is always defined.
    pub fn implies_sets(&self, a: Subset, b: Subset) -> Subset {
        let cone = self.order().lower(a.union(b));
        self.add_sets(self.set_complement(a), cone)
            .expect("L(A,B) <= A so A' + L(A,B) is defined")
    }

    /// `x → B`
    pub fn implies_elem_set(&self, x: usize, b: Subset) -> Subset {
        self.implies_sets(Subset::singleton(self.len(), x), b)
    }

    /// `A → y`
    pub fn implies_set_elem(&self, a: Subset, y: usize) -> Subset {
        self.implies_sets(a, Subset::singleton(self.len(), y))
    }
}

/// Every value of `→` on an algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ImplicationTable {
    labels: Vec<String>,
    cells: Vec<Subset>,
}

impl ImplicationTable {
    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    #[inline]
    pub fn get(&self, x: usize, y: usize) -> Subset {
        self.cells[x * self.len() + y]
    }

    pub fn cells(&self) -> &[Subset] {
        &self.cells
    }

    /// The cell rendered as `{x,y,...}`.
    pub fn cell_text(&self, x: usize, y: usize) -> String {
        self.get(x, y).render(&self.labels)
    }
}

pub fn implication_table(e: &EffectAlgebra) -> ImplicationTable {
    let n = e.len();
    let cells = (0..n)
        .flat_map(|x| (0..n).map(move |y| (x, y)))
        .map(|(x, y)| e.implies(x, y))
        .collect();
    ImplicationTable {
        labels: e.labels().to_vec(),
        cells,
    }
}

fn expect_eq(e: &EffectAlgebra, left: Subset, right: Subset) -> Result<(), String> {
    if left == right {
        Ok(())
    } else {
        Err(format!("{} != {}", e.render(left), e.render(right)))
    }
}

/// The twelve element-level properties of `→`.
///
/// The lattice clause (`a → (a ∧ b) = a → b`) is skipped when the induced
/// order is not a lattice.
pub fn theorem2_suite(e: &EffectAlgebra) -> PropertyReport {
    let l = e.labels();
    let p = e.order();
    let n = e.len();
    let imp = implication_table(e);
    let single = |x| Subset::singleton(n, x);
    let mut r = PropertyReport::new(format!("implication properties on {}", e.name()));

    r.push(check_tuples("i", "a → b ⊆ U(a')", l, 2, |t| {
        let (a, b) = (t[0], t[1]);
        let ua = p.up_set(e.comp(a));
        if imp.get(a, b).is_subset_of(ua) {
            Ok(())
        } else {
            Err(format!(
                "{} not inside {}",
                e.render(imp.get(a, b)),
                e.render(ua)
            ))
        }
    }));
    r.push(check_tuples(
        "ii",
        "a <= b implies a → b = U(a')",
        l,
        2,
        |t| {
            let (a, b) = (t[0], t[1]);
            if !e.leq(a, b) {
                return Ok(());
            }
            expect_eq(e, imp.get(a, b), p.up_set(e.comp(a)))
        },
    ));
    r.push(check_tuples(
        "iii",
        "b <= a implies a → b = [a', a' + b]",
        l,
        2,
        |t| {
            let (a, b) = (t[0], t[1]);
            if !e.leq(b, a) {
                return Ok(());
            }
            let na = e.comp(a);
            let top = e.sum(na, b).ok_or("a' + b undefined")?;
            expect_eq(e, imp.get(a, b), p.interval(na, top))
        },
    ));
    r.push(check_tuples("iv", "0 → b = {1}", l, 1, |t| {
        expect_eq(e, imp.get(e.zero(), t[0]), single(e.one()))
    }));
    r.push(check_tuples("v", "a → 0 = {a'}", l, 1, |t| {
        expect_eq(e, imp.get(t[0], e.zero()), single(e.comp(t[0])))
    }));
    r.push(check_tuples("vi", "1 → b = L(b)", l, 1, |t| {
        expect_eq(e, imp.get(e.one(), t[0]), p.down_set(t[0]))
    }));
    r.push(check_tuples("vii", "L(a → b) = L(a')", l, 2, |t| {
        let (a, b) = (t[0], t[1]);
        expect_eq(e, p.lower(imp.get(a, b)), p.down_set(e.comp(a)))
    }));
    r.push(check_tuples(
        "viii",
        "a · (a → b) = L(a, b)",
        l,
        2,
        |t| {
            let (a, b) = (t[0], t[1]);
            let prod = e
                .odot_set(a, imp.get(a, b))
                .ok_or("a · (a → b) undefined")?;
            expect_eq(e, prod, p.lower_of(&[a, b]))
        },
    ));
    r.push(check_tuples(
        "ix",
        "b <= c implies a → b ⊆ a → c",
        l,
        3,
        |t| {
            let (a, b, c) = (t[0], t[1], t[2]);
            if !e.leq(b, c) || imp.get(a, b).is_subset_of(imp.get(a, c)) {
                Ok(())
            } else {
                Err(format!(
                    "{} not inside {}",
                    e.render(imp.get(a, b)),
                    e.render(imp.get(a, c))
                ))
            }
        },
    ));
    r.push(check_tuples(
        "x",
        "a → b = (a · L(a,b)')' = (a · U(a',b'))'",
        l,
        2,
        |t| {
            let (a, b) = (t[0], t[1]);
            let lab = p.lower_of(&[a, b]);
            let first = e
                .odot_set(a, e.set_complement(lab))
                .map(|s| e.set_complement(s))
                .ok_or("a · L(a,b)' undefined")?;
            expect_eq(e, imp.get(a, b), first)?;
            let second = e
                .odot_set(a, p.upper_of(&[e.comp(a), e.comp(b)]))
                .map(|s| e.set_complement(s))
                .ok_or("a · U(a',b') undefined")?;
            expect_eq(e, imp.get(a, b), second)
        },
    ));
    r.push(check_tuples(
        "xi",
        "a → b <= U(a',c') iff a → c <= U(a',b')",
        l,
        3,
        |t| {
            let (a, b, c) = (t[0], t[1], t[2]);
            let (left, right) = th2_xi_sides(e, a, b, c);
            if left == right {
                Ok(())
            } else {
                Err(format!("sides disagree: {left} vs {right}"))
            }
        },
    ));
    if e.is_lattice() {
        r.push(check_tuples(
            "xii",
            "a → (a ∧ b) = a → b",
            l,
            2,
            |t| {
                let (a, b) = (t[0], t[1]);
                let m = e.meet(a, b).ok_or("meet missing")?;
                expect_eq(e, imp.get(a, m), imp.get(a, b))
            },
        ));
    } else {
        r.push(skipped(
            "xii",
            "a → (a ∧ b) = a → b",
            "order is not a lattice",
        ));
    }
    r
}

/// The two sides of `a → b <= U(a',c')  iff  a → c <= U(a',b')`.
pub(crate) fn th2_xi_sides(e: &EffectAlgebra, a: usize, b: usize, c: usize) -> (bool, bool) {
    let p = e.order();
    let na = e.comp(a);
    let left = p.set_leq_unchecked(e.implies(a, b), p.upper_of(&[na, e.comp(c)]));
    let right = p.set_leq_unchecked(e.implies(a, c), p.upper_of(&[na, e.comp(b)]));
    (left, right)
}

/// The seven set-argument identities of `→`.
pub fn theorem4_suite(e: &EffectAlgebra) -> PropertyReport {
    let l = e.labels();
    let p = e.order();
    let n = e.len();
    let single = |x| Subset::singleton(n, x);
    let mut r = PropertyReport::new(format!(
        "set-argument implication identities on {}",
        e.name()
    ));

    r.push(check_tuples("i", "(a → 0) → 0 = {a}", l, 1, |t| {
        let a = t[0];
        let inner = e.implies(a, e.zero());
        expect_eq(e, e.implies_set_elem(inner, e.zero()), single(a))
    }));
    r.push(check_tuples(
        "ii",
        "a → (b → c) = a → b'",
        l,
        3,
        |t| {
            let (a, b, c) = (t[0], t[1], t[2]);
            expect_eq(
                e,
                e.implies_elem_set(a, e.implies(b, c)),
                e.implies(a, e.comp(b)),
            )
        },
    ));
    r.push(check_tuples("iii", "a → U(b) = a → b", l, 2, |t| {
        let (a, b) = (t[0], t[1]);
        expect_eq(e, e.implies_elem_set(a, p.up_set(b)), e.implies(a, b))
    }));
    r.push(check_tuples(
        "iv",
        "U(a) → b = U(a) → U(b) = U(a',b') → a' = L(a') + L(a,b)",
        l,
        2,
        |t| {
            let (a, b) = (t[0], t[1]);
            let na = e.comp(a);
            let forms = [
                e.implies_set_elem(p.up_set(a), b),
                e.implies_sets(p.up_set(a), p.up_set(b)),
                e.implies_set_elem(p.upper_of(&[na, e.comp(b)]), na),
                e.add_sets(p.down_set(na), p.lower_of(&[a, b]))
                    .map_err(|err| err.to_string())?,
            ];
            for i in 0..forms.len() {
                for j in i + 1..forms.len() {
                    if forms[i] != forms[j] {
                        return Err(format!(
                            "form {} = {} but form {} = {}",
                            i + 1,
                            e.render(forms[i]),
                            j + 1,
                            e.render(forms[j])
                        ));
                    }
                }
            }
            Ok(())
        },
    ));
    r.push(check_tuples("v", "a → L(a,b) = {a'}", l, 2, |t| {
        let (a, b) = (t[0], t[1]);
        expect_eq(
            e,
            e.implies_elem_set(a, p.lower_of(&[a, b])),
            single(e.comp(a)),
        )
    }));
    r.push(check_tuples("vi", "a → U(a,b) = a' + L(a)", l, 2, |t| {
        let (a, b) = (t[0], t[1]);
        let rhs = e
            .add_elem_set(e.comp(a), p.down_set(a))
            .map_err(|err| err.to_string())?;
        expect_eq(e, e.implies_elem_set(a, p.upper_of(&[a, b])), rhs)
    }));
    r.push(check_tuples("vii", "U(a → U(a,b)) = {1}", l, 2, |t| {
        let (a, b) = (t[0], t[1]);
        let v = e.implies_elem_set(a, p.upper_of(&[a, b]));
        expect_eq(e, p.upper(v), single(e.one()))
    }));
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn e9_spot_values() {
        let e = fixtures::load("E9").unwrap();
        let ix = |l| e.index_of(l).unwrap();
        assert_eq!(e.render(e.implies(ix("a"), ix("d"))), "{g}");
        assert_eq!(e.render(e.implies(ix("f"), ix("e"))), "{b,d,e}");
        for b in 0..e.len() {
            assert_eq!(e.render(e.implies(e.zero(), b)), "{1}");
        }
    }

    #[test]
    fn set_argument_examples() {
        let e = fixtures::load("E9").unwrap();
        let ix = |l| e.index_of(l).unwrap();
        let p = e.order();
        let (a, b) = (ix("a"), ix("b"));
        // U(a) → b = L(a') + L(a,b) = L(g) + {0}
        let v = e.implies_set_elem(p.up_set(a), b);
        assert_eq!(e.render(v), "{0,b,c,g}");
        // a → L(a,b) = {a'}
        assert_eq!(e.render(e.implies_elem_set(a, p.lower_of(&[a, b]))), "{g}");
        // {1} → b = L(b)
        for y in 0..e.len() {
            assert_eq!(
                e.implies_set_elem(Subset::singleton(9, e.one()), y),
                p.down_set(y)
            );
        }
    }

    #[test]
    fn two_element_table() {
        let e = fixtures::load("BOOL-1").unwrap();
        let t = implication_table(&e);
        assert_eq!(t.cell_text(0, 0), "{1}");
        assert_eq!(t.cell_text(0, 1), "{1}");
        assert_eq!(t.cell_text(1, 0), "{0}");
        assert_eq!(t.cell_text(1, 1), "{0,1}");
    }

    #[test]
    fn e6_incomparable_atoms() {
        let e = fixtures::load("E6").unwrap();
        let t = implication_table(&e);
        let (a, b) = (e.index_of("a").unwrap(), e.index_of("b").unwrap());
        assert_eq!(t.cell_text(a, b), "{a'}");
    }

    #[test]
    fn suites_on_e9_skip_lattice_clause() {
        let e = fixtures::load("E9").unwrap();
        let r = theorem2_suite(&e);
        assert!(r.all_pass(), "{r}");
        assert!(r.clause("xii").unwrap().skipped());
        assert_eq!(r.clauses.iter().filter(|c| c.passed()).count(), 11);
        let r4 = theorem4_suite(&e);
        assert!(r4.all_pass(), "{r4}");
    }

    #[test]
    fn suites_on_e6_run_every_clause() {
        let e = fixtures::load("E6").unwrap();
        let r = theorem2_suite(&e);
        assert!(r.clauses.iter().all(|c| c.passed()), "{r}");
        assert_eq!(r.clauses.len(), 12);
    }

    #[test]
    fn every_entry_has_the_complement_as_minimum() {
        let e = fixtures::load("E9").unwrap();
        let t = implication_table(&e);
        for x in 0..e.len() {
            for y in 0..e.len() {
                let cell = t.get(x, y);
                assert!(cell.contains(e.comp(x)));
                assert!(cell.iter().all(|w| e.leq(e.comp(x), w)));
            }
        }
    }
}
