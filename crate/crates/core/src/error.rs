use crate::symcomb::Partition;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("size mismatch: {0}")]
    SizeMismatch(String),
    #[error("out of range: {0}")]
    OutOfRange(String),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("certificate claim mismatch: {0}")]
    ClaimMismatch(String),
    #[error("integer overflow in {0}")]
    Overflow(&'static str),
    #[error("shape {0} has no direct construction here; obtain it via conjugate_transfer from {1}")]
    UseConjugateTransfer(Partition, Partition),
    #[error("infeasible at full scale: {0}")]
    Infeasible(String),
}

pub type Result<T> = std::result::Result<T, Error>;
