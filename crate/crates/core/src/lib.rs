//! Finite effect algebras and the subset-valued implication they carry.
//!
//! Elements are indices into a labelled carrier of at most 64 elements and
//! subsets are bitmasks ([`Subset`]). Start from [`fixtures::load`] or
//! [`dsl::parse_algebra`] to get an [`EffectAlgebra`], then:
//!
//! * [`implication`] computes `x → y = x' + L(x, y)` and its property suites;
//! * [`residuation`] converts to and from strict unsharp residuated posets;
//! * [`deduction`] finds deductive systems and their lattice;
//! * [`laws`] checks the unsharp contraposition law;
//! * [`enumerate`] lists every small effect algebra.

pub mod algebra;
pub mod deduction;
pub mod dsl;
pub mod enumerate;
pub mod error;
pub mod fixtures;
pub mod implication;
pub mod laws;
pub mod poset;
pub mod render;
pub mod report;
pub mod residuation;
pub mod subset;
pub mod suites;

pub use algebra::{EffectAlgebra, PartialTable, RawAlgebra};
pub use error::{Error, Result};
pub use poset::{Involution, Poset};
pub use report::{Outcome, PropertyReport};
pub use subset::Subset;
