use core::fmt;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A computation would exceed its configured size bound.
    BudgetExceeded { needed: u128, budget: u128 },
    EmptyCurve,
    InvalidTraversal(&'static str),
    InvalidAlignment,
    /// Gadget inputs on one side do not share a single type.
    TypeMismatch,
    /// Substitution cost outside `(0, 2]`.
    InvalidCsubst,
    NotTrivial,
    NotHard,
    NonBinaryAlphabet,
    InvalidShift { delta: usize, max: usize },
    InvalidInput(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::BudgetExceeded { needed, budget } => {
                write!(f, "budget exceeded: need {needed}, budget is {budget}")
            }
            Error::EmptyCurve => f.write_str("DTW is undefined on an empty curve"),
            Error::InvalidTraversal(why) => write!(f, "invalid traversal: {why}"),
            Error::InvalidAlignment => f.write_str("invalid partial alignment"),
            Error::TypeMismatch => f.write_str("gadget inputs are not type-uniform"),
            Error::InvalidCsubst => f.write_str("substitution cost must lie in (0, 2]"),
            Error::NotTrivial => f.write_str("cost scheme is not a trivial case"),
            Error::NotHard => f.write_str("cost scheme is a trivial case"),
            Error::NonBinaryAlphabet => f.write_str("input is not a binary string"),
            Error::InvalidShift { delta, max } => {
                write!(f, "shift {delta} is outside 0..={max}")
            }
            Error::InvalidInput(why) => write!(f, "invalid input: {why}"),
        }
    }
}

impl core::error::Error for Error {}
