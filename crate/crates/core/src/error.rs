use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("polynomial is identically zero")]
    ZeroPolynomial,
    #[error("polynomial is constant; it has no roots to isolate")]
    ConstantPolynomial,
    #[error("interval is empty: lower endpoint {lower} is not below upper endpoint {upper}")]
    EmptyInterval { lower: String, upper: String },
    #[error("interval endpoint {0} is a root of the polynomial")]
    EndpointIsRoot(String),
    #[error("invalid family parameters: {0}")]
    InvalidFamily(String),
}

pub type Result<T> = std::result::Result<T, Error>;
