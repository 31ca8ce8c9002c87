use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("operation is undefined on the empty partition")]
    EmptyPartition,

    #[error("parts must be nonincreasing: {0:?}")]
    NotSorted(Vec<u32>),

    #[error("a zero part may only appear once, as the last part: {0:?}")]
    MisplacedZero(Vec<u32>),

    #[error("{op} would produce a negative part from {input}")]
    NegativePart { op: &'static str, input: String },

    #[error("{op} requires at least {needed} parts, got {got}")]
    TooShort {
        op: &'static str,
        needed: usize,
        got: usize,
    },

    #[error("{op} requires an odd part, none in {input}")]
    NoOddPart { op: &'static str, input: String },

    #[error("{op} is undefined on partitions with a zero part: {input}")]
    ZeroPart { op: &'static str, input: String },

    #[error("{input} is not in {set}: {reason}")]
    NotInSet {
        set: &'static str,
        input: String,
        reason: &'static str,
    },

    #[error("infinite product (a;q^{step})_inf needs q-exponent of a >= 1, got {q_exp}")]
    NonConvergent { q_exp: i32, step: u32 },

    #[error("series is not invertible: {0}")]
    NotInvertible(&'static str),

    #[error("series sum did not reach q-degree {order} within {cap} terms")]
    Divergence { order: i32, cap: u32 },

    #[error("term {n} has q-degree {actual} below its certified bound {bound}")]
    BoundViolated { n: u32, bound: i64, actual: i32 },

    #[error("coefficient at q^{requested} requested from a series known only to q^{order}")]
    OutOfOrder { requested: i32, order: i32 },

    #[error("{0}")]
    Unsupported(&'static str),

    #[error("cannot parse {input:?}: {reason}")]
    Parse { input: String, reason: String },

    #[error("unknown identity {0:?}")]
    UnknownIdentity(String),
}
