use alloc::string::String;

use crate::partitions::Partition;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("{what} requires a positive argument, got {value}")]
    NonPositive { what: &'static str, value: i64 },
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("series must have constant term 1")]
    NonUnitConstantTerm,
    #[error("weights differ: {left} vs {right}")]
    WeightMismatch { left: usize, right: usize },
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("unknown basis `{0}`")]
    UnknownBasis(String),
    #[error("fractional exponent for {partition}: v^({v_exp}) s^({s_exp})")]
    FractionalExponent {
        partition: Partition,
        v_exp: String,
        s_exp: String,
    },
    #[error("m = {m} and n = {n} are not coprime")]
    NotCoprime { m: u32, n: i64 },
    #[error("denominator vanishes under v = s^-{n}")]
    Specialization { n: u32 },
    #[error("unknown verification suite `{0}`")]
    UnknownSuite(String),
}
