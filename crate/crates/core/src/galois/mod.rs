//! Exact arithmetic in prime fields, their extensions, and polynomial rings over them.

mod field;
mod poly;

pub use field::{Elem, ElemDisplay, Field, MAX_CHARACTERISTIC, MAX_ORDER};
pub use poly::{get_irreducible_polynomial, monic_polys, Poly};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("{}", not_prime_message(*.p, *.factor))]
    NotPrime { p: u64, factor: Option<u64> },
    #[error("field order {order} exceeds the supported maximum {max}")]
    TooLarge { order: u64, max: u64 },
    #[error("extensions of the non-prime field {0} are not supported")]
    TowerUnsupported(String),
    #[error("modulus must have degree >= 2, got {0}")]
    DegreeTooSmall(usize),
    #[error("modulus {0} is not monic")]
    NotMonic(String),
    #[error("modulus {modulus} is reducible: it has the factor {factor}")]
    Reducible { modulus: String, factor: String },
    #[error("operands belong to different fields")]
    FieldMismatch,
    #[error("zero has no multiplicative order")]
    ZeroHasNoOrder,
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("element index {index} out of range for a field of order {order}")]
    IndexOutOfRange { index: u32, order: u32 },
    #[error("{got} coordinates given for an extension of degree {m}")]
    TooManyCoordinates { got: usize, m: u32 },
    #[error("cannot parse {token:?} as an element of {field}")]
    Parse { token: String, field: String },
}

fn not_prime_message(p: u64, factor: Option<u64>) -> String {
    match factor {
        Some(f) => format!("{p} = {f}·{} not prime", p / f),
        None => format!("{p} is not prime"),
    }
}

/// `Z_p`, rejecting composites.
pub fn prime_field(p: u64) -> Result<Field, FieldError> {
    Field::prime(p)
}

/// `K[X]/(f)` together with the class of `X`.
pub fn extension(base: &Field, modulus: &Poly, label: &str) -> Result<(Field, Elem), FieldError> {
    Field::extension(base, modulus, label)
}
