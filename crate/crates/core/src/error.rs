use thiserror::Error;

use crate::algebra::ValidationReport;
use crate::dsl::ParseError;
use crate::poset::PosetError;

#[derive(Debug, Error)]
pub enum Error {
    #[error("carrier of {0} elements exceeds the supported maximum of 64")]
    CarrierTooLarge(usize),

    #[error("subset over {found} elements used with a carrier of {expected}")]
    CarrierMismatch { expected: usize, found: usize },

    #[error("bits {bits:#x} reach outside a carrier of {n} elements")]
    BitsOutOfRange { n: usize, bits: u64 },

    #[error("element index {index} out of range for a carrier of {n}")]
    ElementOutOfRange { index: usize, n: usize },

    /// `left + right` is undefined, so a set sum's precondition fails.
    #[error("set sum undefined: {left} + {right} is not defined")]
    SumUndefined { left: String, right: String },

    #[error("the induced order is not a lattice")]
    NotALattice,

    #[error("{what}: {got} exceeds the limit of {limit}")]
    SizeCap {
        what: &'static str,
        limit: usize,
        got: usize,
    },

    #[error("subset is the whole carrier; the characterization only covers proper subsets")]
    NotProper,

    #[error("subset does not contain the top element")]
    MissingTop,

    #[error("no element outside {{0,1}} differs from its orthosupplement, so there are no atoms")]
    NoAtoms,

    #[error("unknown fixture `{0}`")]
    UnknownFixture(String),

    #[error("unknown suite `{0}`")]
    UnknownSuite(String),

    #[error("unknown element label `{0}`")]
    UnknownLabel(String),

    #[error(transparent)]
    Parse(#[from] ParseError),

    #[error(transparent)]
    Invalid(#[from] ValidationReport),

    #[error(transparent)]
    Poset(#[from] PosetError),

    #[error("conversion produced an order that differs from the source order at ({x}, {y})")]
    OrderMismatch { x: String, y: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
