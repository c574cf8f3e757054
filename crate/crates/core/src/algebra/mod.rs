//! Effect algebras: the partial sum, orthosupplement and induced order, plus
//! the element and set arithmetic built on them.

mod lemmas;
mod validate;

use std::fmt;

pub use lemmas::{check_lemma1, check_lemma2, is_monotonous, Monotonicity};
pub use validate::{validate, Axiom, ValidationReport, Violation};

use crate::error::Error;
use crate::poset::Poset;
use crate::subset::Subset;

/// A square table of partially defined binary results.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PartialTable {
    n: usize,
    cells: Vec<Option<u8>>,
}

impl PartialTable {
    /// A table with every entry undefined.
    pub fn undefined(n: usize) -> Self {
        PartialTable {
            n,
            cells: vec![None; n * n],
        }
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    #[inline]
    pub fn get(&self, x: usize, y: usize) -> Option<usize> {
        self.cells[x * self.n + y].map(usize::from)
    }

    #[inline]
    pub fn set(&mut self, x: usize, y: usize, v: Option<usize>) {
        self.cells[x * self.n + y] = v.map(|v| v as u8);
    }

    #[inline]
    pub fn is_defined(&self, x: usize, y: usize) -> bool {
        self.cells[x * self.n + y].is_some()
    }

    /// Number of defined entries.
    pub fn defined_count(&self) -> usize {
        self.cells.iter().filter(|c| c.is_some()).count()
    }
}

impl fmt::Debug for PartialTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for x in 0..self.n {
            for y in 0..self.n {
                match self.get(x, y) {
                    Some(v) => write!(f, "{v:>3}")?,
                    None => write!(f, "  -")?,
                }
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Unvalidated effect-algebra data: a labelled carrier, the designated
/// constants, the sum table and any explicitly declared complements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RawAlgebra {
    pub name: String,
    pub labels: Vec<String>,
    pub zero: usize,
    pub one: usize,
    pub sum: PartialTable,
    /// `(x, x')` pairs to cross-check against the complements derived from `sum`.
    pub declared_complements: Vec<(usize, usize)>,
}

/// A validated finite effect algebra.
#[derive(Clone, PartialEq, Eq)]
pub struct EffectAlgebra {
    name: String,
    sum: PartialTable,
    comp: Vec<usize>,
    zero: usize,
    one: usize,
    order: Poset,
}

impl EffectAlgebra {
    /// Validates raw tables; see [`validate`].
    pub fn new(raw: &RawAlgebra) -> Result<Self, ValidationReport> {
        validate(raw)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.comp.len()
    }

    pub fn is_empty(&self) -> bool {
        self.comp.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        self.order.labels()
    }

    pub fn label(&self, x: usize) -> &str {
        self.order.label(x)
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels().iter().position(|l| l == label)
    }

    /// Looks up several labels at once.
    pub fn elems(&self, labels: &[&str]) -> Result<Vec<usize>, Error> {
        labels
            .iter()
            .map(|l| {
                self.index_of(l)
                    .ok_or_else(|| Error::UnknownLabel(l.to_string()))
            })
            .collect()
    }

    /// Builds a subset from labels.
    pub fn subset(&self, labels: &[&str]) -> Result<Subset, Error> {
        Ok(Subset::from_elems(self.len(), self.elems(labels)?))
    }

    pub fn render(&self, a: Subset) -> String {
        a.render(self.labels())
    }

    #[inline]
    pub fn zero(&self) -> usize {
        self.zero
    }

    #[inline]
    pub fn one(&self) -> usize {
        self.one
    }

    pub fn carrier(&self) -> Subset {
        Subset::full(self.len())
    }

    #[inline]
    pub fn sum(&self, x: usize, y: usize) -> Option<usize> {
        self.sum.get(x, y)
    }

    pub fn sum_table(&self) -> &PartialTable {
        &self.sum
    }

    /// The orthosupplement `x'`.
    #[inline]
    pub fn comp(&self, x: usize) -> usize {
        self.comp[x]
    }

    pub fn complements(&self) -> &[usize] {
        &self.comp
    }

    /// The induced order `x <= y iff x + z = y for some z`.
    pub fn order(&self) -> &Poset {
        &self.order
    }

    #[inline]
    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.order.leq(x, y)
    }

    pub fn is_lattice(&self) -> bool {
        self.order.is_lattice()
    }

    pub fn meet(&self, x: usize, y: usize) -> Option<usize> {
        self.order.meet(x, y)
    }

    /// `x ⊙ y = (x' + y')'`, defined exactly when `x' <= y`.
    pub fn odot(&self, x: usize, y: usize) -> Option<usize> {
        if !self.leq(self.comp(x), y) {
            return None;
        }
        self.sum(self.comp(x), self.comp(y)).map(|s| self.comp(s))
    }

    /// `x ⊙ A = { x ⊙ w | w ∈ A }`; `None` when some product is undefined.
    pub fn odot_set(&self, x: usize, a: Subset) -> Option<Subset> {
        a.iter().try_fold(Subset::empty(self.len()), |acc, w| {
            self.odot(x, w).map(|v| acc.with(v))
        })
    }

    /// `A' = { x' | x ∈ A }`
    pub fn set_complement(&self, a: Subset) -> Subset {
        a.iter()
            .fold(Subset::empty(self.len()), |acc, x| acc.with(self.comp(x)))
    }

    /// `x + A = { x + y | y ∈ A }`, requiring `A <= x'`.
    pub fn add_elem_set(&self, x: usize, a: Subset) -> Result<Subset, Error> {
        a.check_carrier(self.len())?;
        let mut out = Subset::empty(self.len());
        for y in a {
            match self.sum(x, y) {
                Some(s) => out = out.with(s),
                None => return Err(self.undefined_sum(x, y)),
            }
        }
        Ok(out)
    }

    /// `A + B = { x + y | x ∈ A, y ∈ B }`, requiring `A <= B'`.
    pub fn add_sets(&self, a: Subset, b: Subset) -> Result<Subset, Error> {
        a.check_carrier(self.len())?;
        b.check_carrier(self.len())?;
        let mut out = Subset::empty(self.len());
        for x in a {
            for y in b {
                match self.sum(x, y) {
                    Some(s) => out = out.with(s),
                    None => return Err(self.undefined_sum(x, y)),
                }
            }
        }
        Ok(out)
    }

    fn undefined_sum(&self, x: usize, y: usize) -> Error {
        Error::SumUndefined {
            left: self.label(x).to_string(),
            right: self.label(y).to_string(),
        }
    }

    /// The data this algebra was validated from, with every sum explicit.
    pub fn to_raw(&self) -> RawAlgebra {
        RawAlgebra {
            name: self.name.clone(),
            labels: self.labels().to_vec(),
            zero: self.zero,
            one: self.one,
            sum: self.sum.clone(),
            declared_complements: (0..self.len()).map(|x| (x, self.comp(x))).collect(),
        }
    }
}

impl fmt::Debug for EffectAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("EffectAlgebra")
            .field("name", &self.name)
            .field("labels", &self.labels())
            .field("comp", &self.comp)
            .finish_non_exhaustive()
    }
}
