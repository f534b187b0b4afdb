use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dataset is empty")]
    EmptyDataset,
    #[error("non-finite coordinate in row {index}")]
    InvalidData { index: usize },
    #[error("need at least 2 points to fit a line, got {n}")]
    InsufficientData { n: usize },
    #[error("invalid argument: {0}")]
    InvalidArgument(&'static str),
    #[error("slope 0 is outside the domain of the raw objective; use sse_p_profile")]
    ZeroSlope,
    #[error(
        "cross-product sum is zero within tolerance; the slope is not given by the quadratic roots"
    )]
    DegenerateCrossProduct,
    #[error("all x values are identical; ordinary least squares is undefined for vertical data")]
    VerticalData,
    #[error("inconsistent statistics: {0}")]
    InconsistentStats(&'static str),
}
