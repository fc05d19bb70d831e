use thiserror::Error;

use crate::numfield::NfElem;
use crate::poly::Poly;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ExactError {
    #[error("{0} is not an odd prime")]
    InvalidPrime(i64),
    #[error("defining polynomial is reducible; found factor of degree {}", .factor.degree().unwrap_or(0))]
    ReduciblePolynomial { factor: Poly<NfElem> },
    #[error("polynomial must be monic (normalize it first)")]
    NotMonic,
    #[error("polynomial must have positive degree")]
    ConstantPolynomial,
    #[error("field is not part of the tower of the element's field")]
    TowerMismatch,
    #[error("element must be nonzero")]
    ZeroElement,
    #[error("polynomial must be nonzero")]
    ZeroPolynomial,
    #[error("automorphism set is not closed under composition")]
    NotAGroup,
    #[error("element does not lie in the requested subfield")]
    NotInSubfield,
    #[error("map does not define a field automorphism")]
    NotAnAutomorphism,
    #[error("malformed serialized value: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, ExactError>;
