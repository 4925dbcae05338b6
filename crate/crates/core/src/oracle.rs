//! Brute-force reference computations for small codes.
//!
//! These enumerate error patterns and codewords directly and share nothing
//! with the decoders beyond the syndrome map, so they can be used to check
//! the decoders and to produce ground truth.

use std::time::{Duration, Instant};

use thiserror::Error;

use crate::codes::AlternantCode;
use crate::galois::Elem;
use crate::linalg::{vandermonde, Matrix, Vector};
use crate::pgz::DecodeReport;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("enumeration of {predicted} candidates exceeds the budget of {max}")]
    BudgetExceeded { predicted: u128, max: u64 },
    #[error("enumeration exceeded the time limit of {0:?}")]
    Timeout(Duration),
    #[error("vector has length {got}, expected {expected}")]
    WrongLength { expected: usize, got: usize },
}

/// Limits checked before (and during) enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleBudget {
    pub max_count: u64,
    pub max_duration: Option<Duration>,
}

impl Default for OracleBudget {
    fn default() -> Self {
        OracleBudget { max_count: 10_000_000, max_duration: None }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BruteForce {
    /// The unique minimal-weight error explaining the syndrome.
    Found(Vector),
    NotFound,
    /// Two distinct errors of the same minimal weight.
    Ambiguous(Vector, Vector),
}

fn binomial(n: u128, k: u128) -> u128 {
    (0..k).fold(1u128, |acc, i| acc * (n - i) / (i + 1))
}

/// Enumerates errors by increasing weight (positions lexicographic, values in
/// canonical order) and returns the minimal-weight `e` with `y - e` in the code.
pub fn brute_force_decode(
    code: &AlternantCode,
    y: &Vector,
    t_max: usize,
    budget: OracleBudget,
) -> Result<BruteForce, OracleError> {
    let n = code.n();
    if y.len() != n {
        return Err(OracleError::WrongLength { expected: n, got: y.len() });
    }
    let base = code.base_field();
    let ext = code.ext_field();
    let q1 = (base.order() - 1) as u128;
    let predicted: u128 = (0..=t_max.min(n)).map(|w| binomial(n as u128, w as u128) * q1.pow(w as u32)).sum();
    if predicted > budget.max_count as u128 {
        return Err(OracleError::BudgetExceeded { predicted, max: budget.max_count });
    }
    let start = Instant::now();
    let target = code.syndrome(y).expect("length checked");
    let control = code.control_matrix();
    let r = code.r();
    // column syndromes of unit errors: v * h_j alpha_j^i = v * H[i][j]
    let columns: Vec<Vec<Elem>> = (0..n).map(|j| (0..r).map(|i| control.get(i, j)).collect()).collect();
    let values: Vec<Elem> = base.elements().skip(1).collect();

    for w in 0..=t_max.min(n) {
        let mut found: Vec<Vector> = Vec::new();
        let mut positions: Vec<usize> = (0..w).collect();
        loop {
            let mut digits = vec![0usize; w];
            loop {
                if let Some(limit) = budget.max_duration {
                    if start.elapsed() > limit {
                        return Err(OracleError::Timeout(limit));
                    }
                }
                let mut acc = vec![Elem::ZERO; r];
                for (&pos, &d) in positions.iter().zip(&digits) {
                    let v = values[d];
                    for (a, &c) in acc.iter_mut().zip(&columns[pos]) {
                        *a = ext.add(*a, ext.mul(v, c));
                    }
                }
                if acc.as_slice() == target.as_slice() {
                    let mut e = Vector::zeros(base, n);
                    for (&pos, &d) in positions.iter().zip(&digits) {
                        e.set(pos, values[d]);
                    }
                    found.push(e);
                    if found.len() == 2 {
                        let b = found.pop().unwrap();
                        let a = found.pop().unwrap();
                        return Ok(BruteForce::Ambiguous(a, b));
                    }
                }
                if !next_digits(&mut digits, values.len()) {
                    break;
                }
            }
            if !next_combination(&mut positions, n) {
                break;
            }
        }
        if let Some(e) = found.pop() {
            return Ok(BruteForce::Found(e));
        }
    }
    Ok(BruteForce::NotFound)
}

fn next_digits(digits: &mut [usize], base: usize) -> bool {
    for d in digits.iter_mut().rev() {
        *d += 1;
        if *d < base {
            return true;
        }
        *d = 0;
    }
    false
}

fn next_combination(c: &mut [usize], n: usize) -> bool {
    let k = c.len();
    for i in (0..k).rev() {
        if c[i] < n - k + i {
            c[i] += 1;
            for j in i + 1..k {
                c[j] = c[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Minimum weight over all nonzero codewords, by enumerating `K^k`.
pub fn min_distance(code: &AlternantCode, budget: OracleBudget) -> Result<usize, OracleError> {
    let g = code.generator_matrix();
    let k = g.rows();
    let base = code.base_field();
    let q = base.order() as u128;
    let predicted = q.checked_pow(k as u32).unwrap_or(u128::MAX);
    if predicted > budget.max_count as u128 {
        return Err(OracleError::BudgetExceeded { predicted, max: budget.max_count });
    }
    let start = Instant::now();
    let mut best = usize::MAX;
    let mut digits = vec![0usize; k];
    let mut word = vec![Elem::ZERO; code.n()];
    while next_digits(&mut digits, q as usize) {
        if let Some(limit) = budget.max_duration {
            if start.elapsed() > limit {
                return Err(OracleError::Timeout(limit));
            }
        }
        word.iter_mut().for_each(|x| *x = Elem::ZERO);
        for (i, &d) in digits.iter().enumerate() {
            if d == 0 {
                continue;
            }
            let c = Elem(d as u32);
            for (x, &gx) in word.iter_mut().zip(g.row(i)) {
                *x = base.add(*x, base.mul(c, gx));
            }
        }
        let wt = word.iter().filter(|x| !x.is_zero()).count();
        best = best.min(wt);
    }
    Ok(best)
}

/// Checks `S = V_t D V_{t+1}^T` for the error locators and values of a
/// successful report, with `D = diag(h_{m_k} e_{m_k})`.
pub fn verify_structure(s_mat: &Matrix, report: &DecodeReport, code: &AlternantCode) -> bool {
    let ext = code.ext_field();
    let t = code.t();
    let l = report.positions.len();
    if l == 0 || report.values.len() != l || report.locators.len() != l {
        return false;
    }
    let eta = &report.locators;
    let (Ok(vt), Ok(vt1)) = (vandermonde(ext, t, eta), vandermonde(ext, t + 1, eta)) else {
        return false;
    };
    let mut d = Matrix::zeros(ext, l, l);
    for (k, (&m, &v)) in report.positions.iter().zip(&report.values).enumerate() {
        d.set(k, k, ext.mul(code.h()[m], v));
    }
    let Ok(prod) = vt.mul(&d).and_then(|vd| vd.mul(&vt1.transpose())) else {
        return false;
    };
    s_mat.field() == ext && prod == *s_mat
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::galois::prime_field;
    use crate::linalg::hankel;
    use crate::pgz::pgz;

    fn prs13() -> AlternantCode {
        AlternantCode::prs(&prime_field(13).unwrap(), 8).unwrap()
    }

    #[test]
    fn codeword_gives_zero_error() {
        let c = prs13();
        let x = c.generator_matrix().row_vector(1);
        let res = brute_force_decode(&c, &x, 2, OracleBudget::default()).unwrap();
        assert_eq!(res, BruteForce::Found(Vector::zeros(c.base_field(), 12)));
    }

    #[test]
    fn two_error_case_is_unique() {
        let c = prs13();
        let f = c.base_field().clone();
        let mut e = Vector::zeros(&f, 12);
        e.set(4, Elem(3));
        e.set(9, Elem(7));
        assert_eq!(brute_force_decode(&c, &e, 2, OracleBudget::default()).unwrap(), BruteForce::Found(e));
    }

    #[test]
    fn budget_refused_up_front() {
        let c = prs13();
        let y = Vector::zeros(c.base_field(), 12);
        let tiny = OracleBudget { max_count: 100, max_duration: None };
        assert!(matches!(brute_force_decode(&c, &y, 2, tiny), Err(OracleError::BudgetExceeded { .. })));
        assert!(matches!(min_distance(&c, tiny), Err(OracleError::BudgetExceeded { .. })));
    }

    #[test]
    fn prs7_is_mds() {
        let c = AlternantCode::prs(&prime_field(7).unwrap(), 3).unwrap();
        assert_eq!(min_distance(&c, OracleBudget::default()).unwrap(), 4);
    }

    #[test]
    fn structure_identity_on_examples() {
        let c = prs13();
        let f = c.base_field().clone();
        let mut e = Vector::zeros(&f, 12);
        e.set(4, Elem(3));
        let rep = pgz(&e, &c).unwrap();
        let s = hankel(&rep.syndrome, c.t()).unwrap();
        assert!(verify_structure(&s, &rep, &c));
        e.set(9, Elem(7));
        let mut rep = pgz(&e, &c).unwrap();
        let s = hankel(&rep.syndrome, c.t()).unwrap();
        assert!(verify_structure(&s, &rep, &c));
        rep.values[1] = Elem(8);
        assert!(!verify_structure(&s, &rep, &c));
    }

    #[test]
    fn combinations_enumerate_lexicographically() {
        let mut c = vec![0, 1];
        let mut all = vec![c.clone()];
        while next_combination(&mut c, 4) {
            all.push(c.clone());
        }
        assert_eq!(all, vec![vec![0, 1], vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3], vec![2, 3]]);
    }
}
