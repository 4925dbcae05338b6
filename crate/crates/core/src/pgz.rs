//! Peterson-Gorenstein-Zierler decoding of alternant codes.
//!
//! Both decoders share the location phase: the syndrome Hankel matrix is
//! reduced by Gauss-Jordan, whose rank is the number of errors `l` and whose
//! column `l` holds the negated locator coefficients. The error-locator
//! polynomial is then searched for roots among the `alpha_j`.
//!
//! [`pgz`] obtains the error values from Forney's formula applied to the
//! error evaluator `E(z) = L̃(z) σ(z) mod z^r`; [`pgzm`] solves the
//! `l x l` system `sum_k h_{m_k} e_{m_k} η_k^j = s_j`, `j < l`, directly.

use std::fmt;

use rand::seq::index;
use rand::Rng;
use thiserror::Error;

use crate::codes::{AlternantCode, CodeError};
use crate::galois::{Elem, Field, Poly};
use crate::linalg::{gj_locator, hankel, solve_square, Matrix, Vector};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Algorithm {
    Pgz,
    Pgzm,
}

impl Algorithm {
    pub fn prefix(self) -> &'static str {
        match self {
            Algorithm::Pgz => "PGZ",
            Algorithm::Pgzm => "PGZm",
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.prefix())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FailureReason {
    /// The locator polynomial has fewer than `l` roots among the `alpha_j`.
    DefectiveErrorLocation,
    /// Some error value lies outside the base field.
    ValueNotInBaseField,
    /// The syndrome is not that of an error of weight at most `t`.
    MalformedSyndromeStructure,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DecodeStatus {
    NoError,
    Corrected,
    Failure(FailureReason),
}

/// Malformed input vectors, rejected before decoding starts.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DecodeError {
    #[error("{0}: Vector argument has wrong length (expected {1}, got {2})")]
    WrongLength(Algorithm, usize, usize),
    #[error("{0}: entry {1} of the received vector is not in the base field")]
    NotInBaseField(Algorithm, usize),
    #[error("{0}: vector is over the wrong field")]
    FieldMismatch(Algorithm),
}

/// Outcome of one decoding attempt together with its intermediate data.
#[derive(Clone, Debug)]
pub struct DecodeReport {
    pub algorithm: Algorithm,
    pub status: DecodeStatus,
    pub syndrome: Vector,
    /// The `t x (t+1)` syndrome Hankel matrix, absent when the syndrome is zero.
    pub hankel: Option<Matrix>,
    /// Number of errors `l` read from the Gauss-Jordan rank.
    pub errors: usize,
    pub positions: Vec<usize>,
    /// `alpha` values at the error positions.
    pub locators: Vec<Elem>,
    /// Error values, over the base field.
    pub values: Vec<Elem>,
    pub locator: Option<Poly>,
    /// Error evaluator; only the PGZ decoder computes it.
    pub evaluator: Option<Poly>,
    /// `y - e` over the base field.
    pub corrected: Option<Vector>,
    base: Field,
}

impl DecodeReport {
    pub fn is_success(&self) -> bool {
        !matches!(self.status, DecodeStatus::Failure(_))
    }

    pub fn failure(&self) -> Option<FailureReason> {
        match self.status {
            DecodeStatus::Failure(r) => Some(r),
            _ => None,
        }
    }

    /// The error vector `e` over the base field (zero on `NoError`).
    pub fn error_vector(&self, n: usize) -> Vector {
        let mut e = Vector::zeros(&self.base, n);
        for (&m, &v) in self.positions.iter().zip(&self.values) {
            e.set(m, v);
        }
        e
    }

    /// The status line, e.g. `PGZ: Error positions [4, 9], error values [3, 7]`.
    pub fn summary_line(&self) -> String {
        let p = self.algorithm.prefix();
        match self.status {
            DecodeStatus::NoError => format!("{p}: Input is a code vector"),
            DecodeStatus::Corrected => {
                let pos: Vec<String> = self.positions.iter().map(usize::to_string).collect();
                let vals: Vec<String> = self.values.iter().map(|&v| self.base.show(v).to_string()).collect();
                format!("{p}: Error positions [{}], error values [{}]", pos.join(", "), vals.join(", "))
            }
            // the value check reuses the PGZ prefix in both decoders
            DecodeStatus::Failure(FailureReason::ValueNotInBaseField) => "PGZ: error value not in base field".into(),
            DecodeStatus::Failure(FailureReason::DefectiveErrorLocation) => format!("{p}: Defective error location"),
            DecodeStatus::Failure(FailureReason::MalformedSyndromeStructure) => {
                format!("{p}: Malformed syndrome structure")
            }
        }
    }

    /// Status line followed by the corrected vector, when there is one.
    pub fn render(&self) -> String {
        match &self.corrected {
            Some(x) => format!("{}\n{}", self.summary_line(), x),
            None => self.summary_line(),
        }
    }
}

/// Improved PGZ decoder with Forney error evaluation.
pub fn pgz(y: &Vector, code: &AlternantCode) -> Result<DecodeReport, DecodeError> {
    decode(Algorithm::Pgz, y, code)
}

/// PGZm: same error location, error values from a linear system.
pub fn pgzm(y: &Vector, code: &AlternantCode) -> Result<DecodeReport, DecodeError> {
    decode(Algorithm::Pgzm, y, code)
}

pub fn decode(alg: Algorithm, y: &Vector, code: &AlternantCode) -> Result<DecodeReport, DecodeError> {
    let y = code.to_base(y).map_err(|e| match e {
        CodeError::NotInBaseField { index, .. } => DecodeError::NotInBaseField(alg, index),
        _ => DecodeError::FieldMismatch(alg),
    })?;
    if y.len() != code.n() {
        return Err(DecodeError::WrongLength(alg, code.n(), y.len()));
    }
    let base = code.base_field().clone();
    let ext = code.ext_field().clone();
    let s = code.syndrome(&y).expect("length checked");
    let mut report = DecodeReport {
        algorithm: alg,
        status: DecodeStatus::NoError,
        syndrome: s.clone(),
        hankel: None,
        errors: 0,
        positions: Vec::new(),
        locators: Vec::new(),
        values: Vec::new(),
        locator: None,
        evaluator: None,
        corrected: None,
        base: base.clone(),
    };
    if s.is_zero() {
        report.corrected = Some(y);
        return Ok(report);
    }
    let fail = |mut report: DecodeReport, reason| {
        report.status = DecodeStatus::Failure(reason);
        Ok(report)
    };

    let t = code.t();
    if t == 0 {
        return fail(report, FailureReason::MalformedSyndromeStructure);
    }
    let s_mat = hankel(&s, t).expect("2t <= r");
    report.hankel = Some(s_mat.clone());
    let Ok(l_poly) = locator_from_hankel(&s_mat) else {
        return fail(report, FailureReason::MalformedSyndromeStructure);
    };
    let l = l_poly.degree().unwrap_or(0);
    report.errors = l;
    report.locator = Some(l_poly.clone());

    let (positions, locators) = locate(&l_poly, code.alpha());
    report.positions = positions.clone();
    report.locators = locators.clone();
    if positions.len() < l {
        return fail(report, FailureReason::DefectiveErrorLocation);
    }

    let raw_values: Vec<Elem> = match alg {
        Algorithm::Pgz => {
            let ltilde = l_poly.reciprocal();
            let e_poly = error_evaluator(&syndrome_polynomial(&s), &ltilde, code.r());
            report.evaluator = Some(e_poly.clone());
            let vals: Option<Vec<Elem>> = positions.iter().map(|&m| forney(code, m, &e_poly, &ltilde)).collect();
            match vals {
                Some(v) => v,
                None => return fail(report, FailureReason::DefectiveErrorLocation),
            }
        }
        Algorithm::Pgzm => {
            let h = code.h();
            let mut a = Matrix::zeros(&ext, l, l);
            for (k, (&m, &eta)) in positions.iter().zip(&locators).enumerate() {
                let mut p = h[m];
                for i in 0..l {
                    a.set(i, k, p);
                    p = ext.mul(p, eta);
                }
            }
            let rhs = Vector::new(&ext, s.as_slice()[..l].to_vec());
            match solve_square(&a, &rhs) {
                Ok(v) => v.into_vec(),
                Err(_) => return fail(report, FailureReason::DefectiveErrorLocation),
            }
        }
    };

    let Some(values) = raw_values.iter().map(|&v| ext.pull(v, &base)).collect::<Option<Vec<_>>>() else {
        return fail(report, FailureReason::ValueNotInBaseField);
    };
    report.values = values;
    let mut x = y;
    for (&m, &v) in positions.iter().zip(&report.values) {
        x.set(m, base.sub(x[m], v));
    }
    // beyond capacity the located pattern may explain only part of the syndrome
    let residual_free = code.syndrome(&x).is_ok_and(|r| r.is_zero());
    if !residual_free || report.values.iter().any(|v| v.is_zero()) {
        return fail(report, FailureReason::MalformedSyndromeStructure);
    }
    report.corrected = Some(x);
    report.status = DecodeStatus::Corrected;
    Ok(report)
}

/// `L(z) = z^l + a_1 z^{l-1} + .. + a_l` read off the reduced Hankel matrix.
pub fn locator_from_hankel(s_mat: &Matrix) -> Result<Poly, crate::linalg::LinalgError> {
    let f = s_mat.field();
    let column = gj_locator(s_mat)?;
    let mut coeffs: Vec<Elem> = column.iter().map(|&c| f.neg(c)).collect();
    coeffs.push(Elem::ONE);
    Ok(Poly::new(f, coeffs))
}

/// `σ(z) = s_0 + s_1 z + .. + s_{r-1} z^{r-1}`.
pub fn syndrome_polynomial(s: &Vector) -> Poly {
    Poly::new(s.field(), s.as_slice().to_vec())
}

/// `E(z) = L̃(z) σ(z) mod z^r`.
pub fn error_evaluator(sigma: &Poly, ltilde: &Poly, r: usize) -> Poly {
    ltilde.mul(sigma).truncate(r)
}

/// `E*(z) = L(z) σ̃(z) mod z^r` with `σ̃(z) = s_0 z^{r-1} + .. + s_{r-1}`.
pub fn alt_error_evaluator(s: &Vector, locator: &Poly, r: usize) -> Poly {
    let mut rev: Vec<Elem> = s.as_slice()[..r].to_vec();
    rev.reverse();
    locator.mul(&Poly::new(s.field(), rev)).truncate(r)
}

/// Forney's formula `e_m = -alpha_m E(1/alpha_m) / (h_m L̃'(1/alpha_m))`.
///
/// Returns `None` when the denominator vanishes.
pub fn forney(code: &AlternantCode, m: usize, evaluator: &Poly, ltilde: &Poly) -> Option<Elem> {
    let f = code.ext_field();
    let a = code.alpha()[m];
    let inv_a = f.checked_inv(a)?;
    let num = f.mul(a, evaluator.eval(inv_a));
    let den = f.mul(code.h()[m], ltilde.derivative().eval(inv_a));
    Some(f.neg(f.mul(num, f.checked_inv(den)?)))
}

/// Alternative form `e_m = -E*(alpha_m) / (h_m alpha_m^r L'(alpha_m))`.
pub fn forney_alt(code: &AlternantCode, m: usize, alt_evaluator: &Poly, locator: &Poly) -> Option<Elem> {
    let f = code.ext_field();
    let a = code.alpha()[m];
    let den = f.mul(f.mul(code.h()[m], f.pow(a, code.r() as u64)), locator.derivative().eval(a));
    Some(f.neg(f.mul(alt_evaluator.eval(a), f.checked_inv(den)?)))
}

/// Indices `j` with `L(alpha_j) = 0`, ascending, and the matching `alpha_j`.
pub fn locate(locator: &Poly, alpha: &Vector) -> (Vec<usize>, Vec<Elem>) {
    alpha.iter().enumerate().filter(|(_, &a)| locator.eval(a).is_zero()).map(|(j, &a)| (j, a)).unzip()
}

/// Random error pattern over `field` with exactly `weight` nonzero entries
/// at distinct uniformly chosen positions.
///
/// # Panics
/// If `weight > n`.
pub fn rd_error_vector<R: Rng + ?Sized>(field: &Field, n: usize, weight: usize, rng: &mut R) -> Vector {
    assert!(weight <= n, "weight {weight} exceeds length {n}");
    let mut e = Vector::zeros(field, n);
    let mut positions = index::sample(rng, n, weight).into_vec();
    positions.sort_unstable();
    for m in positions {
        let v = field.element(rng.random_range(1..field.order())).expect("in range");
        e.set(m, v);
    }
    e
}
