//! Exact arithmetic over towers of number fields.

pub mod error;
pub mod factor;
pub mod field;
pub mod galois;
pub mod linalg;
pub mod modp;
pub mod numfield;
pub mod poly;
pub mod power;
pub mod serial;
pub mod split;
pub mod zfactor;

pub use error::{ExactError, Result};
pub use field::{Field, Rationals};
pub use numfield::{cyclotomic_field, NfElem, NumberField};
pub use poly::{Poly, PolyRing};
