//! Exhaustive generation of small effect algebras, isomorphism testing and
//! canonical forms.
//!
//! The search fixes `0` and `1`, fills the zero row, and then decides the
//! sums between the remaining ("middle") elements one unordered pair at a
//! time in row-major order. Branches are cut by
//!
//! * cancellation: `x + y = x + z` forces `y = z`, so a row never repeats a value
//!   and `x + y` is never `x`;
//! * the orthosupplement: each row holds at most one `1`, and exactly one once complete;
//! * associativity on every triple whose sums are all decided.
//!
//! Every leaf still goes through full validation.

use std::collections::BTreeMap;

use itertools::Itertools;
use rayon::prelude::*;

use crate::algebra::{validate, EffectAlgebra, PartialTable, RawAlgebra};
use crate::error::Error;
use crate::poset::Poset;

/// Largest carrier [`enumerate_effect_algebras`] accepts.
pub const MAX_ENUMERATION: usize = 7;
/// Largest carrier [`canonical_form`] accepts.
pub const MAX_CANONICAL: usize = 9;

#[derive(Clone, Debug)]
pub struct EnumerationResult {
    pub n: usize,
    pub up_to_iso: bool,
    /// Every labelled algebra, or one canonical representative per class.
    pub algebras: Vec<EffectAlgebra>,
    pub labeled_count: usize,
    pub iso_count: usize,
}

/// `0`, then `a`, `b`, ... for the middle elements, then `1`.
pub fn standard_labels(n: usize) -> Vec<String> {
    (0..n)
        .map(|i| match i {
            0 => "0".to_string(),
            _ if i == n - 1 => "1".to_string(),
            _ if i <= 26 => ((b'a' + (i - 1) as u8) as char).to_string(),
            _ => format!("m{i}"),
        })
        .collect()
}

#[derive(Clone)]
struct State {
    table: PartialTable,
    decided: Vec<bool>,
    /// Values already used in each row, as bitmasks.
    used: Vec<u64>,
    ones: Vec<u8>,
    open: Vec<u8>,
}

struct Search<'a> {
    n: usize,
    zero: usize,
    one: usize,
    labels: &'a [String],
    cells: Vec<(usize, usize)>,
    options: Vec<Vec<Option<usize>>>,
}

impl<'a> Search<'a> {
    fn new<F>(labels: &'a [String], zero: usize, one: usize, options: F) -> Self
    where
        F: Fn(usize, usize) -> Vec<Option<usize>>,
    {
        let n = labels.len();
        let middle: Vec<usize> = (0..n).filter(|&x| x != zero && x != one).collect();
        let cells: Vec<(usize, usize)> = middle
            .iter()
            .enumerate()
            .flat_map(|(a, &i)| middle[a..].iter().map(move |&j| (i, j)))
            .collect();
        let options = cells.iter().map(|&(i, j)| options(i, j)).collect();
        Search {
            n,
            zero,
            one,
            labels,
            cells,
            options,
        }
    }

    fn initial(&self) -> State {
        let n = self.n;
        let mut table = PartialTable::undefined(n);
        let mut decided = vec![true; n * n];
        let mut used = vec![0u64; n];
        let mut open = vec![0u8; n];
        for x in 0..n {
            table.set(self.zero, x, Some(x));
            table.set(x, self.zero, Some(x));
            used[x] |= 1 << x;
            used[self.zero] |= 1 << x;
        }
        for &(i, j) in &self.cells {
            decided[i * n + j] = false;
            decided[j * n + i] = false;
            open[i] += 1;
            if i != j {
                open[j] += 1;
            }
        }
        State {
            table,
            decided,
            used,
            ones: vec![0; n],
            open,
        }
    }

    /// Applies `i + j = v`; false when a pruning rule rejects it.
    fn assign(&self, s: &mut State, i: usize, j: usize, v: Option<usize>) -> bool {
        let n = self.n;
        s.table.set(i, j, v);
        s.table.set(j, i, v);
        s.decided[i * n + j] = true;
        s.decided[j * n + i] = true;
        let rows: &[usize] = if i == j { &[i] } else { &[i, j] };
        for &r in rows {
            s.open[r] -= 1;
            if let Some(v) = v {
                if s.used[r] >> v & 1 == 1 {
                    return false;
                }
                s.used[r] |= 1 << v;
                if v == self.one {
                    s.ones[r] += 1;
                }
            }
            if s.ones[r] > 1 || (s.open[r] == 0 && s.ones[r] != 1) {
                return false;
            }
        }
        self.associative_near(s, i, j)
    }

    /// Associativity on every triple whose evaluation reads cell `(i, j)`.
    fn associative_near(&self, s: &State, i: usize, j: usize) -> bool {
        let n = self.n;
        let get = |x: usize, y: usize| -> Option<Option<usize>> {
            s.decided[x * n + y].then(|| s.table.get(x, y))
        };
        let left = |x, y, z| match get(x, y)? {
            None => Some(None),
            Some(w) => get(w, z),
        };
        let right = |x, y, z| match get(y, z)? {
            None => Some(None),
            Some(t) => get(x, t),
        };
        let ok = |x, y, z| match (left(x, y, z), right(x, y, z)) {
            (Some(l), Some(r)) => l == r,
            _ => true,
        };
        for (p, q) in [(i, j), (j, i)] {
            for w in 0..n {
                if !ok(p, q, w) || !ok(w, p, q) {
                    return false;
                }
            }
            for x in 0..n {
                for y in 0..n {
                    if s.decided[x * n + y] && s.table.get(x, y) == Some(p) {
                        // (x + y) + q reads (p, q); q + (x + y) reads (q, p)
                        if !ok(x, y, q) || !ok(q, x, y) {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    fn leaf(&self, s: &State) -> Option<EffectAlgebra> {
        let raw = RawAlgebra {
            name: String::new(),
            labels: self.labels.to_vec(),
            zero: self.zero,
            one: self.one,
            sum: s.table.clone(),
            declared_complements: vec![],
        };
        validate(&raw).ok()
    }

    fn dfs(&self, s: &State, depth: usize, out: &mut Vec<EffectAlgebra>) {
        if depth == self.cells.len() {
            out.extend(self.leaf(s));
            return;
        }
        let (i, j) = self.cells[depth];
        for &v in &self.options[depth] {
            let mut next = s.clone();
            if self.assign(&mut next, i, j, v) {
                self.dfs(&next, depth + 1, out);
            }
        }
    }

    /// All leaves, in deterministic order, with the first cell split across threads.
    fn run(&self) -> Vec<EffectAlgebra> {
        let init = self.initial();
        if self.cells.is_empty() {
            return self.leaf(&init).into_iter().collect();
        }
        let (i, j) = self.cells[0];
        let branches: Vec<State> = self.options[0]
            .iter()
            .filter_map(|&v| {
                let mut s = init.clone();
                self.assign(&mut s, i, j, v).then_some(s)
            })
            .collect();
        branches
            .par_iter()
            .map(|s| {
                let mut out = Vec::new();
                self.dfs(s, 1, &mut out);
                out
            })
            .collect::<Vec<_>>()
            .concat()
    }
}

/// Every effect algebra on `n` elements with `0` first and `1` last.
///
/// In labelled mode `algebras` holds every table; with `up_to_iso` it holds
/// one canonical representative per isomorphism class. Both counts are
/// always filled in.
pub fn enumerate_effect_algebras(n: usize, up_to_iso: bool) -> Result<EnumerationResult, Error> {
    if !(2..=MAX_ENUMERATION).contains(&n) {
        return Err(Error::SizeCap {
            what: "enumeration carrier",
            limit: MAX_ENUMERATION,
            got: n,
        });
    }
    let labels = standard_labels(n);
    let one = n - 1;
    let search = Search::new(&labels, 0, one, |i, j| {
        std::iter::once(None)
            .chain((1..n).filter(|&v| v != i && v != j).map(Some))
            .collect()
    });
    let labeled = search.run();
    let forms: Vec<CanonicalForm> = labeled
        .par_iter()
        .map(|e| canonical_form(e).expect("within the canonical bound"))
        .collect();
    let mut classes: BTreeMap<&CanonicalForm, usize> = BTreeMap::new();
    for (k, f) in forms.iter().enumerate() {
        classes.entry(f).or_insert(k);
    }
    let labeled_count = labeled.len();
    let iso_count = classes.len();
    let algebras = if up_to_iso {
        classes
            .values()
            .enumerate()
            .map(|(k, &idx)| {
                canonical_representative(&labeled[idx])
                    .expect("within the canonical bound")
                    .with_name(format!("EA{n}-iso{k}"))
            })
            .collect()
    } else {
        labeled
            .into_iter()
            .enumerate()
            .map(|(k, e)| e.with_name(format!("EA{n}-{k}")))
            .collect()
    };
    Ok(EnumerationResult {
        n,
        up_to_iso,
        algebras,
        labeled_count,
        iso_count,
    })
}

/// Every effect algebra on the carrier of `order` whose induced order is
/// exactly `order`.
pub fn enumerate_compatible(order: &Poset) -> Vec<EffectAlgebra> {
    let labels = order.labels().to_vec();
    let search = Search::new(&labels, order.bottom(), order.top(), |i, j| {
        std::iter::once(None)
            .chain(
                (0..order.len())
                    .filter(|&v| order.lt(i, v) && order.lt(j, v))
                    .map(Some),
            )
            .collect()
    });
    let n = order.len();
    search
        .run()
        .into_iter()
        .filter(|e| (0..n).all(|x| (0..n).all(|y| e.leq(x, y) == order.leq(x, y))))
        .collect()
}

/// Per-element data preserved by every isomorphism.
fn invariants(e: &EffectAlgebra) -> Vec<[u8; 5]> {
    let n = e.len();
    let mut results = vec![0u8; n];
    for x in 0..n {
        for y in 0..n {
            if let Some(z) = e.sum(x, y) {
                results[z] += 1;
            }
        }
    }
    (0..n)
        .map(|x| {
            let role = if x == e.zero() {
                0
            } else if x == e.one() {
                2
            } else {
                1
            };
            [
                role,
                (0..n).filter(|&y| e.sum(x, y).is_some()).count() as u8,
                results[x],
                u8::from(e.sum(x, x).is_some()),
                u8::from(e.comp(x) == x),
            ]
        })
        .collect()
}

/// Minimal table encoding over all relabelings fixing `0` and `1`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm {
    pub n: usize,
    pub code: Vec<u8>,
}

/// The table read in the order `order` (position to element).
fn encode(e: &EffectAlgebra, order: &[usize]) -> Vec<u8> {
    let n = e.len();
    let mut pos = vec![0usize; n];
    for (p, &x) in order.iter().enumerate() {
        pos[x] = p;
    }
    let mut code = Vec::with_capacity(n * n);
    for &x in order {
        for &y in order {
            code.push(e.sum(x, y).map_or(0, |z| pos[z] as u8 + 1));
        }
    }
    code
}

/// The canonical form and the ordering (position to element) realizing it.
///
/// Candidate orderings list elements by ascending invariant and permute only
/// within equal-invariant classes, so isomorphic inputs search matching sets.
pub fn canonical_labeling(e: &EffectAlgebra) -> Result<(CanonicalForm, Vec<usize>), Error> {
    let n = e.len();
    if n > MAX_CANONICAL {
        return Err(Error::SizeCap {
            what: "canonical form carrier",
            limit: MAX_CANONICAL,
            got: n,
        });
    }
    let inv = invariants(e);
    let mut sorted: Vec<usize> = (0..n).collect();
    sorted.sort_by_key(|&x| inv[x]);
    let classes: Vec<Vec<usize>> = sorted
        .into_iter()
        .chunk_by(|&x| inv[x])
        .into_iter()
        .map(|(_, g)| g.collect())
        .collect();
    let mut best: Option<(Vec<u8>, Vec<usize>)> = None;
    for choice in classes
        .iter()
        .map(|c| c.iter().copied().permutations(c.len()))
        .multi_cartesian_product()
    {
        let order: Vec<usize> = choice.concat();
        let code = encode(e, &order);
        if best.as_ref().is_none_or(|(b, _)| code < *b) {
            best = Some((code, order));
        }
    }
    // multi_cartesian_product of zero iterators yields nothing; n >= 1 keeps one class
    let (code, order) = best.expect("at least one ordering");
    Ok((CanonicalForm { n, code }, order))
}

pub fn canonical_form(e: &EffectAlgebra) -> Result<CanonicalForm, Error> {
    Ok(canonical_labeling(e)?.0)
}

/// The algebra re-indexed into canonical order. Labels are assigned by
/// position: zero's label first, the middle labels in their original
/// order, one's label last.
pub fn canonical_representative(e: &EffectAlgebra) -> Result<EffectAlgebra, Error> {
    let (_, order) = canonical_labeling(e)?;
    let labels: Vec<String> = std::iter::once(e.zero())
        .chain((0..e.len()).filter(|&x| x != e.zero() && x != e.one()))
        .chain(std::iter::once(e.one()))
        .map(|x| e.label(x).to_string())
        .collect();
    let mut perm = vec![0; e.len()];
    for (p, &x) in order.iter().enumerate() {
        perm[x] = p;
    }
    relabel_with(e, &perm, labels)
}

/// The same algebra with element `x` moved to index `perm[x]`, keeping its label.
pub fn relabel(e: &EffectAlgebra, perm: &[usize]) -> Result<EffectAlgebra, Error> {
    let mut labels = vec![String::new(); e.len()];
    for (x, &p) in perm.iter().enumerate() {
        labels[p] = e.label(x).to_string();
    }
    relabel_with(e, perm, labels)
}

fn relabel_with(
    e: &EffectAlgebra,
    perm: &[usize],
    labels: Vec<String>,
) -> Result<EffectAlgebra, Error> {
    let n = e.len();
    let mut sum = PartialTable::undefined(n);
    for x in 0..n {
        for y in 0..n {
            sum.set(perm[x], perm[y], e.sum(x, y).map(|z| perm[z]));
        }
    }
    let raw = RawAlgebra {
        name: e.name().to_string(),
        labels,
        zero: perm[e.zero()],
        one: perm[e.one()],
        sum,
        declared_complements: vec![],
    };
    Ok(EffectAlgebra::new(&raw)?)
}

/// Backtracking over bijections `a -> b` that respect invariants and every
/// sum among already-mapped elements. `visit` returns false to stop.
fn isomorphisms<F>(a: &EffectAlgebra, b: &EffectAlgebra, mut visit: F)
where
    F: FnMut(&[usize]) -> bool,
{
    let n = a.len();
    if n != b.len() {
        return;
    }
    let (ia, ib) = (invariants(a), invariants(b));
    let mut order: Vec<usize> = vec![a.zero(), a.one()];
    order.extend((0..n).filter(|&x| x != a.zero() && x != a.one()));
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];

    fn consistent(a: &EffectAlgebra, b: &EffectAlgebra, map: &[usize], x: usize) -> bool {
        let n = a.len();
        for u in (0..n).filter(|&u| map[u] != usize::MAX) {
            let (da, db) = (a.sum(x, u), b.sum(map[x], map[u]));
            match (da, db) {
                (None, None) => {}
                (Some(w), Some(v)) => {
                    if map[w] != usize::MAX && map[w] != v {
                        return false;
                    }
                }
                _ => return false,
            }
        }
        true
    }

    struct Ctx<'a> {
        a: &'a EffectAlgebra,
        b: &'a EffectAlgebra,
        ia: &'a [[u8; 5]],
        ib: &'a [[u8; 5]],
        order: &'a [usize],
    }

    fn go<F: FnMut(&[usize]) -> bool>(
        k: usize,
        ctx: &Ctx,
        map: &mut Vec<usize>,
        used: &mut Vec<bool>,
        visit: &mut F,
    ) -> bool {
        let Ctx {
            a,
            b,
            ia,
            ib,
            order,
        } = *ctx;
        let n = a.len();
        if k == n {
            let full = (0..n)
                .all(|x| (0..n).all(|y| a.sum(x, y).map(|z| map[z]) == b.sum(map[x], map[y])));
            return !full || visit(map);
        }
        let x = order[k];
        for y in 0..n {
            if used[y] || ia[x] != ib[y] {
                continue;
            }
            map[x] = y;
            used[y] = true;
            let carry_on = !consistent(a, b, map, x) || go(k + 1, ctx, map, used, visit);
            map[x] = usize::MAX;
            used[y] = false;
            if !carry_on {
                return false;
            }
        }
        true
    }

    if ia[a.zero()] != ib[b.zero()] || ia[a.one()] != ib[b.one()] {
        return;
    }
    let ctx = Ctx {
        a,
        b,
        ia: &ia,
        ib: &ib,
        order: &order,
    };
    go(0, &ctx, &mut map, &mut used, &mut visit);
}

/// An isomorphism `a -> b` as `witness[x] = image of x`, if one exists.
/// Carriers of different sizes are never isomorphic.
pub fn is_isomorphic(a: &EffectAlgebra, b: &EffectAlgebra) -> Option<Vec<usize>> {
    let mut found = None;
    isomorphisms(a, b, |m| {
        found = Some(m.to_vec());
        false
    });
    found
}

pub fn automorphism_count(e: &EffectAlgebra) -> usize {
    let mut count = 0;
    isomorphisms(e, e, |_| {
        count += 1;
        true
    });
    count
}
