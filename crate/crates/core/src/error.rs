use thiserror::Error;

use crate::count::CountValue;

/// Input-contract and budget errors.
///
/// A preference tuple that fails to park is not an error; it is reported
/// through [`ParkResult`](crate::park::ParkResult).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cannot parse {input:?}: {reason}")]
    Parse { input: String, reason: String },

    #[error("at least one car is required")]
    NoCars,

    #[error("car {car} has size 0; sizes must be positive")]
    ZeroSize { car: usize },

    #[error("total lot size overflows")]
    SizeOverflow,

    #[error("expected {expected} preferences, got {found}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("preference {pref} of car {car} is outside [1, {max}]")]
    PrefOutOfRange { car: usize, pref: usize, max: usize },

    #[error("expected a {expected} preference sequence")]
    WrongFlavor { expected: crate::park::Flavor },

    #[error("car index {car} is outside [1, {n}]")]
    CarOutOfRange { car: usize, n: usize },

    #[error("invalid option for car {car}: {reason}")]
    InvalidOption { car: usize, reason: String },

    #[error("expected {expected} options (cars 2..n), got {found}")]
    OptionCountMismatch { expected: usize, found: usize },

    #[error("invalid layout: {0}")]
    InvalidLayout(String),

    #[error("layout does not leave exactly one empty spot")]
    IncompleteLayout,

    #[error("no empty spot found after a full turn of the circle")]
    ScanExhausted,

    #[error("sizes {sizes}: {required} tuples exceed the budget of {budget}")]
    BudgetExceeded {
        sizes: String,
        required: CountValue,
        budget: u64,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
