//! Finite bounded posets, antitone involutions and the cone operators.
//!
//! Elements are indices into the declared label list. The order is stored
//! twice, as up-sets and down-sets, each one machine word per element, so
//! that the lower and upper cones of any subset are plain intersections.

use std::collections::HashSet;
use std::fmt;

use thiserror::Error;

use crate::error::Error;
use crate::subset::{Subset, MAX_CARRIER};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum PosetError {
    #[error("a poset needs between 1 and 64 elements, got {0}")]
    BadSize(usize),
    #[error("duplicate label `{0}`")]
    DuplicateLabel(String),
    #[error("relation is not reflexive at {0}")]
    NotReflexive(usize),
    #[error("relation is not antisymmetric: {0} <= {1} <= {0}")]
    NotAntisymmetric(usize, usize),
    #[error("relation is not transitive: {0} <= {1} <= {2} but not {0} <= {2}")]
    NotTransitive(usize, usize, usize),
    #[error("no least element")]
    NoBottom,
    #[error("no greatest element")]
    NoTop,
}

/// A finite bounded partial order.
#[derive(Clone, PartialEq, Eq)]
pub struct Poset {
    labels: Vec<String>,
    // up[x] = { y | x <= y }, down[x] = { y | y <= x }
    up: Vec<Subset>,
    down: Vec<Subset>,
    bottom: usize,
    top: usize,
}

impl Poset {
    /// Builds a poset from a relation predicate, checking every order axiom
    /// and that the order is bounded.
    #[allow(clippy::needless_range_loop)]
    pub fn from_relation<F>(labels: Vec<String>, leq: F) -> Result<Self, PosetError>
    where
        F: Fn(usize, usize) -> bool,
    {
        let n = labels.len();
        if n == 0 || n > MAX_CARRIER {
            return Err(PosetError::BadSize(n));
        }
        let mut seen = HashSet::with_capacity(n);
        for l in &labels {
            if !seen.insert(l.as_str()) {
                return Err(PosetError::DuplicateLabel(l.clone()));
            }
        }
        let mut up = vec![Subset::empty(n); n];
        let mut down = vec![Subset::empty(n); n];
        for x in 0..n {
            for y in 0..n {
                if leq(x, y) {
                    up[x] = up[x].with(y);
                    down[y] = down[y].with(x);
                }
            }
        }
        for x in 0..n {
            if !up[x].contains(x) {
                return Err(PosetError::NotReflexive(x));
            }
        }
        for x in 0..n {
            for y in up[x].without(x) {
                if up[y].contains(x) {
                    return Err(PosetError::NotAntisymmetric(x, y));
                }
            }
        }
        for x in 0..n {
            for y in up[x] {
                if !up[y].is_subset_of(up[x]) {
                    let z = up[y].difference(up[x]).first().unwrap();
                    return Err(PosetError::NotTransitive(x, y, z));
                }
            }
        }
        let bottom = (0..n)
            .find(|&x| up[x].is_full())
            .ok_or(PosetError::NoBottom)?;
        let top = (0..n)
            .find(|&x| down[x].is_full())
            .ok_or(PosetError::NoTop)?;
        Ok(Poset {
            labels,
            up,
            down,
            bottom,
            top,
        })
    }

    /// Builds a poset from an `n x n` boolean matrix, `matrix[x][y]` meaning `x <= y`.
    pub fn from_matrix(labels: Vec<String>, matrix: &[Vec<bool>]) -> Result<Self, PosetError> {
        if matrix.len() != labels.len() || matrix.iter().any(|r| r.len() != labels.len()) {
            return Err(PosetError::BadSize(matrix.len()));
        }
        Poset::from_relation(labels, |x, y| matrix[x][y])
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, x: usize) -> &str {
        &self.labels[x]
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    #[inline]
    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.up[x].contains(y)
    }

    #[inline]
    pub fn lt(&self, x: usize, y: usize) -> bool {
        x != y && self.leq(x, y)
    }

    pub fn comparable(&self, x: usize, y: usize) -> bool {
        self.leq(x, y) || self.leq(y, x)
    }

    /// `{ y | x <= y }`
    #[inline]
    pub fn up_set(&self, x: usize) -> Subset {
        self.up[x]
    }

    /// `{ y | y <= x }`
    #[inline]
    pub fn down_set(&self, x: usize) -> Subset {
        self.down[x]
    }

    pub fn full(&self) -> Subset {
        Subset::full(self.len())
    }

    /// `L(A)`: the elements below every member of `a`. `L(∅)` is the whole carrier.
    pub fn lower_cone(&self, a: Subset) -> Result<Subset, Error> {
        a.check_carrier(self.len())?;
        Ok(self.lower(a))
    }

    /// `U(A)`: the elements above every member of `a`. `U(∅)` is the whole carrier.
    pub fn upper_cone(&self, a: Subset) -> Result<Subset, Error> {
        a.check_carrier(self.len())?;
        Ok(self.upper(a))
    }

    #[inline]
    pub(crate) fn lower(&self, a: Subset) -> Subset {
        a.iter()
            .fold(self.full(), |acc, y| acc.intersection(self.down[y]))
    }

    #[inline]
    pub(crate) fn upper(&self, a: Subset) -> Subset {
        a.iter()
            .fold(self.full(), |acc, y| acc.intersection(self.up[y]))
    }

    /// `L(x, y, ...)` for a handful of elements.
    pub fn lower_of(&self, elems: &[usize]) -> Subset {
        elems
            .iter()
            .fold(self.full(), |acc, &y| acc.intersection(self.down[y]))
    }

    /// `U(x, y, ...)` for a handful of elements.
    pub fn upper_of(&self, elems: &[usize]) -> Subset {
        elems
            .iter()
            .fold(self.full(), |acc, &y| acc.intersection(self.up[y]))
    }

    /// The closed interval `[a, b] = U(a) ∩ L(b)`.
    pub fn interval(&self, a: usize, b: usize) -> Subset {
        self.up[a].intersection(self.down[b])
    }

    /// `A <= B`: every member of `a` lies below every member of `b`.
    pub fn set_leq(&self, a: Subset, b: Subset) -> Result<bool, Error> {
        a.check_carrier(self.len())?;
        b.check_carrier(self.len())?;
        Ok(self.set_leq_unchecked(a, b))
    }

    #[inline]
    pub(crate) fn set_leq_unchecked(&self, a: Subset, b: Subset) -> bool {
        // A <= B  iff  B ⊆ U(A)
        b.is_subset_of(self.upper(a))
    }

    /// Covering pairs `(x, y)`: `x < y` with nothing strictly between.
    pub fn hasse_edges(&self) -> Vec<(usize, usize)> {
        let mut edges = Vec::new();
        for x in 0..self.len() {
            let above = self.up[x].without(x);
            for y in above {
                let between = above.intersection(self.down[y]).without(y);
                if between.is_empty() {
                    edges.push((x, y));
                }
            }
        }
        edges
    }

    /// Greatest lower bound, if it exists.
    pub fn meet(&self, x: usize, y: usize) -> Option<usize> {
        let lower = self.down[x].intersection(self.down[y]);
        lower.iter().find(|&m| lower.is_subset_of(self.down[m]))
    }

    /// Least upper bound, if it exists.
    pub fn join(&self, x: usize, y: usize) -> Option<usize> {
        let upper = self.up[x].intersection(self.up[y]);
        upper.iter().find(|&j| upper.is_subset_of(self.up[j]))
    }

    pub fn is_lattice(&self) -> bool {
        (0..self.len()).all(|x| {
            (x + 1..self.len()).all(|y| self.meet(x, y).is_some() && self.join(x, y).is_some())
        })
    }

    pub fn matrix(&self) -> Vec<Vec<bool>> {
        (0..self.len())
            .map(|x| (0..self.len()).map(|y| self.leq(x, y)).collect())
            .collect()
    }
}

impl fmt::Debug for Poset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Poset")
            .field("labels", &self.labels)
            .field("hasse", &self.hasse_edges())
            .finish()
    }
}

/// A candidate orthocomplementation: a map on element indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Involution(Vec<usize>);

impl Involution {
    pub fn new(map: Vec<usize>) -> Self {
        Involution(map)
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.0[x]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn image(&self, a: Subset) -> Subset {
        a.iter()
            .fold(Subset::empty(a.carrier_len()), |acc, x| acc.with(self.0[x]))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InvolutionViolation {
    /// The map is not defined on exactly the carrier, or leaves it.
    WrongShape {
        len: usize,
        carrier: usize,
    },
    NotInvolutive {
        x: usize,
    },
    NotAntitone {
        x: usize,
        y: usize,
    },
    BottomNotToTop {
        image: usize,
    },
    TopNotToBottom {
        image: usize,
    },
}

/// Every violated involution invariant, each with its first witness.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct InvolutionReport {
    pub violations: Vec<InvolutionViolation>,
}

impl InvolutionReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

pub fn validate_involution(p: &Poset, inv: &Involution) -> InvolutionReport {
    let n = p.len();
    let mut report = InvolutionReport::default();
    if inv.0.len() != n || inv.0.iter().any(|&y| y >= n) {
        report.violations.push(InvolutionViolation::WrongShape {
            len: inv.0.len(),
            carrier: n,
        });
        return report;
    }
    if let Some(x) = (0..n).find(|&x| inv.apply(inv.apply(x)) != x) {
        report
            .violations
            .push(InvolutionViolation::NotInvolutive { x });
    }
    let antitone = (0..n)
        .flat_map(|x| p.up_set(x).iter().map(move |y| (x, y)))
        .find(|&(x, y)| !p.leq(inv.apply(y), inv.apply(x)));
    if let Some((x, y)) = antitone {
        report
            .violations
            .push(InvolutionViolation::NotAntitone { x, y });
    }
    if inv.apply(p.bottom()) != p.top() {
        report.violations.push(InvolutionViolation::BottomNotToTop {
            image: inv.apply(p.bottom()),
        });
    }
    if inv.apply(p.top()) != p.bottom() {
        report.violations.push(InvolutionViolation::TopNotToBottom {
            image: inv.apply(p.top()),
        });
    }
    report
}
