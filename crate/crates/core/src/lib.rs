//! Alternant codes over finite fields and their decoding with the improved
//! Peterson-Gorenstein-Zierler algorithm.
//!
//! The crate covers exact arithmetic in `Z_p` and `F_{p^m}` ([`galois`]),
//! dense linear algebra over those fields ([`linalg`]), constructors for
//! RS, GRS, BCH and classical Goppa codes as alternant codes ([`codes`]),
//! the PGZ and PGZm decoders ([`pgz`]) and brute-force reference
//! computations for small codes ([`oracle`]).
//!
//! ```
//! use alternant::{galois::prime_field, codes::AlternantCode, linalg::Vector, pgz};
//!
//! let k = prime_field(13).unwrap();
//! let code = AlternantCode::prs(&k, 8).unwrap();
//! let y = Vector::from_ints(&k, &[0, 0, 0, 0, 3, 0, 0, 0, 0, 7, 0, 0]);
//! let report = pgz::pgz(&y, &code).unwrap();
//! assert_eq!(report.summary_line(), "PGZ: Error positions [4, 9], error values [3, 7]");
//! ```

pub mod codes;
pub mod codespec;
pub mod demo;
pub mod galois;
pub mod linalg;
pub mod oracle;
pub mod pgz;

pub use codes::{AlternantCode, CodeError, CodeKind};
pub use galois::{Elem, Field, FieldError, Poly};
pub use linalg::{Matrix, Vector};
pub use pgz::{Algorithm, DecodeReport, DecodeStatus, FailureReason};
