use thiserror::Error;

/// Everything that can go wrong between parsing a group and decomposing a
/// stable set.
#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid input: {0}")]
    Input(String),

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("{what} has size {actual}, exceeding the limit of {limit}")]
    Size {
        what: &'static str,
        actual: usize,
        limit: usize,
    },

    #[error("integer overflow while computing {0}")]
    Overflow(&'static str),

    #[error("mark vector is not in the image of the mark homomorphism (fails at class {class})")]
    NotInImage { class: String },

    #[error("element is not F-stable: marks differ between {first} ({first_mark}) and {second} ({second_mark})")]
    NotStable {
        first: String,
        first_mark: i64,
        second: String,
        second_mark: i64,
    },

    #[error("congruence violation at class {class}: {numerator} is not divisible by {modulus}")]
    CongruenceViolation {
        class: String,
        numerator: i64,
        modulus: i64,
    },

    #[error("fixed-point lemma violation at class {class}: lambda = {lambda}")]
    FixedPointLemmaViolation { class: String, lambda: i64 },

    #[error("saturation witness missing: no conjugating element maps {source_class} onto {target} with normalizers compatible")]
    SaturationWitnessMissing {
        source_class: String,
        target: String,
    },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("internal invariant violated: {0}")]
    Invariant(String),

    #[error("unknown catalog entry {name:?}; available: {available}")]
    UnknownCatalog { name: String, available: String },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn checked_add(a: i64, b: i64, what: &'static str) -> Result<i64> {
    a.checked_add(b).ok_or(Error::Overflow(what))
}

pub(crate) fn checked_mul(a: i64, b: i64, what: &'static str) -> Result<i64> {
    a.checked_mul(b).ok_or(Error::Overflow(what))
}
