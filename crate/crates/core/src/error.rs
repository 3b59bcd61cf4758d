use thiserror::Error;

use crate::group::Element;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("bad parameter: {0}")]
    BadParameter(String),

    #[error("{what} = {value} is not a unit modulo {modulus}")]
    NotAUnit { what: &'static str, value: u64, modulus: u64 },

    #[error("the order of {what} does not divide m = {m}")]
    OrderMismatch { what: &'static str, m: u64 },

    #[error("element {element:?} does not belong to a group with coordinate ranges {ranges:?}")]
    CoordinateOutOfRange { element: Vec<u64>, ranges: Vec<u64> },

    #[error("index {index} is out of range for a group of order {order}")]
    IndexOutOfRange { index: u64, order: u64 },

    #[error("generator set is empty")]
    EmptySet,

    #[error("generator set contains the identity")]
    ContainsIdentity,

    #[error("group order {order} exceeds the vertex budget of {budget}; raise the budget explicitly")]
    MemoryBudgetExceeded { order: u64, budget: u64 },

    #[error("group order {order} is too large for the all-pairs oracle (limit {limit})")]
    TooLarge { order: u64, limit: u64 },

    #[error("BFS distance exceeds the byte-array limit of {limit}")]
    DistanceOverflow { limit: u32 },

    #[error("Moore bound for degree {delta}, diameter {diameter} overflows 64 bits")]
    MooreOverflow { delta: u64, diameter: u32 },

    #[error("group order {order} exceeds the Moore bound {bound} for degree {delta}, diameter {diameter}")]
    MooreInfeasible { order: u64, bound: u64, delta: u64, diameter: u32 },

    #[error("infeasible degree: {0}")]
    InfeasibleDegree(String),

    #[error("gave up sampling a degree-{delta} generator set after {draws} draws")]
    RetryBudgetExhausted { delta: usize, draws: u64 },

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },

    #[error("record {record}: {source}")]
    SpecInvalid {
        record: String,
        #[source]
        source: Box<Error>,
    },

    #[error("record {record}: {reason}")]
    InvalidRecord { record: String, reason: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn out_of_range(element: &Element, ranges: &[u64]) -> Self {
        Error::CoordinateOutOfRange { element: element.coords().to_vec(), ranges: ranges.to_vec() }
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse { line: e.line(), column: e.column(), message: e.to_string() }
    }
}
