//! Elliptic curves over cyclotomic fields, their mod-`l` Galois images and
//! explicit generators of `_lBr(E)/_lBr(K)` as tensors of symbol algebras.

pub mod brauer;
pub mod curve;
pub mod error;
pub mod funcfield;
pub mod galois;
pub mod modl;
pub mod products;

pub use error::{CoreError, Result};
