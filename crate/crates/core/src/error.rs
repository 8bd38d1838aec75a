use thiserror::Error;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("{what} = {value} is outside the valid range [{lo}, {hi}]")]
    OutOfRange {
        what: &'static str,
        value: i64,
        lo: i64,
        hi: i64,
    },

    #[error(
        "q = {q} is outside the joint validity range: the wedge model covers 3 <= q <= {q_max}, \
         rational Hurewicz covers q <= {hurewicz_limit}"
    )]
    ComparisonRange { q: u64, q_max: u64, hurewicz_limit: u64 },

    #[error("the ideal has {0} generator(s); at least two are needed for a relation among relations")]
    NoRelations(usize),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("summands have different total dimensions ({0} and {1})")]
    DimensionMismatch(usize, usize),

    #[error("arithmetic overflow while computing {0}")]
    Overflow(&'static str),

    #[error("arithmetic invariant violated: {0}")]
    Arithmetic(String),

    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::InvalidInput(msg.into()))
}
