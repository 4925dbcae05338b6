//! Dense univariate polynomials over a [`Field`].

use std::fmt;

use super::{Elem, Field, FieldError};

/// Polynomial with ascending coefficients and no trailing zeros.
#[derive(Clone, PartialEq, Eq)]
pub struct Poly {
    field: Field,
    coeffs: Vec<Elem>,
}

impl Poly {
    pub fn new(field: &Field, mut coeffs: Vec<Elem>) -> Poly {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { field: field.clone(), coeffs }
    }

    pub fn zero(field: &Field) -> Poly {
        Poly::new(field, Vec::new())
    }

    pub fn one(field: &Field) -> Poly {
        Poly::new(field, vec![Elem::ONE])
    }

    /// `c * z^deg`.
    pub fn monomial(field: &Field, c: Elem, deg: usize) -> Poly {
        let mut coeffs = vec![Elem::ZERO; deg + 1];
        coeffs[deg] = c;
        Poly::new(field, coeffs)
    }

    /// Ascending integer coefficients, reduced into the prime subfield.
    pub fn from_ints(field: &Field, coeffs: &[i64]) -> Poly {
        Poly::new(field, coeffs.iter().map(|&c| field.from_int(c)).collect())
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn coeffs(&self) -> &[Elem] {
        &self.coeffs
    }

    /// Coefficient of `z^i`, zero beyond the degree.
    pub fn coeff(&self, i: usize) -> Elem {
        self.coeffs.get(i).copied().unwrap_or(Elem::ZERO)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Option<Elem> {
        self.coeffs.last().copied()
    }

    pub fn is_monic(&self) -> bool {
        self.leading() == Some(Elem::ONE)
    }

    fn check_same(&self, other: &Poly) {
        assert!(self.field == other.field, "polynomials over {} and {}", self.field, other.field);
    }

    pub fn add(&self, other: &Poly) -> Poly {
        self.check_same(other);
        let f = &self.field;
        let len = self.coeffs.len().max(other.coeffs.len());
        Poly::new(f, (0..len).map(|i| f.add(self.coeff(i), other.coeff(i))).collect())
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.check_same(other);
        let f = &self.field;
        let len = self.coeffs.len().max(other.coeffs.len());
        Poly::new(f, (0..len).map(|i| f.sub(self.coeff(i), other.coeff(i))).collect())
    }

    pub fn neg(&self) -> Poly {
        let f = &self.field;
        Poly::new(f, self.coeffs.iter().map(|&c| f.neg(c)).collect())
    }

    pub fn scale(&self, c: Elem) -> Poly {
        let f = &self.field;
        Poly::new(f, self.coeffs.iter().map(|&a| f.mul(a, c)).collect())
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        self.check_same(other);
        let f = &self.field;
        if self.is_zero() || other.is_zero() {
            return Poly::zero(f);
        }
        let mut out = vec![Elem::ZERO; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = f.add(out[i + j], f.mul(a, b));
            }
        }
        Poly::new(f, out)
    }

    /// Euclidean division: `self = quot * divisor + rem` with `deg rem < deg divisor`.
    pub fn divmod(&self, divisor: &Poly) -> Result<(Poly, Poly), FieldError> {
        self.check_same(divisor);
        let f = &self.field;
        let dd = divisor.degree().ok_or(FieldError::DivisionByZero)?;
        let lead_inv = f.inv(divisor.coeffs[dd]);
        let mut rem = self.coeffs.clone();
        let Some(nd) = self.degree().filter(|&d| d >= dd) else {
            return Ok((Poly::zero(f), self.clone()));
        };
        let mut quot = vec![Elem::ZERO; nd - dd + 1];
        for top in (dd..=nd).rev() {
            let c = f.mul(rem[top], lead_inv);
            if c.is_zero() {
                continue;
            }
            quot[top - dd] = c;
            for (k, &d) in divisor.coeffs.iter().enumerate() {
                let idx = top - dd + k;
                rem[idx] = f.sub(rem[idx], f.mul(c, d));
            }
        }
        rem.truncate(dd);
        Ok((Poly::new(f, quot), Poly::new(f, rem)))
    }

    pub fn rem(&self, divisor: &Poly) -> Result<Poly, FieldError> {
        self.divmod(divisor).map(|(_, r)| r)
    }

    /// Formal derivative.
    pub fn derivative(&self) -> Poly {
        let f = &self.field;
        let coeffs = self.coeffs.iter().enumerate().skip(1).map(|(i, &c)| f.mul(f.from_int(i as i64), c)).collect();
        Poly::new(f, coeffs)
    }

    /// Drops every term of degree `>= r`, i.e. reduces mod `z^r`.
    pub fn truncate(&self, r: usize) -> Poly {
        Poly::new(&self.field, self.coeffs.iter().take(r).copied().collect())
    }

    /// `z^d * self(1/z)` with `d = deg self`; maps `z^l + a_1 z^{l-1} + .. + a_l`
    /// to `1 + a_1 z + .. + a_l z^l`.
    pub fn reciprocal(&self) -> Poly {
        Poly::new(&self.field, self.coeffs.iter().rev().copied().collect())
    }

    /// Horner evaluation at an element of the same field.
    pub fn eval(&self, x: Elem) -> Elem {
        let f = &self.field;
        self.coeffs.iter().rev().fold(Elem::ZERO, |acc, &c| f.add(f.mul(acc, x), c))
    }

    /// Evaluation at an element of `ext`, which must equal or extend the
    /// field of the polynomial.
    pub fn eval_in(&self, ext: &Field, x: Elem) -> Result<Elem, FieldError> {
        if !ext.contains_field(&self.field) {
            return Err(FieldError::FieldMismatch);
        }
        Ok(self.coeffs.iter().rev().fold(Elem::ZERO, |acc, &c| ext.add(ext.mul(acc, x), c)))
    }

    /// Monic gcd (zero if both are zero).
    pub fn gcd(&self, other: &Poly) -> Poly {
        self.check_same(other);
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Divides by the leading coefficient.
    pub fn monic(&self) -> Poly {
        match self.leading() {
            Some(c) => self.scale(self.field.inv(c)),
            None => self.clone(),
        }
    }

    /// No repeated factors, i.e. `gcd(f, f') = 1`.
    pub fn is_squarefree(&self) -> bool {
        self.degree().is_some_and(|_| self.gcd(&self.derivative()).degree() == Some(0))
    }

    /// A monic factor of degree `1..=deg/2`, found by trial division in
    /// canonical order, or `None` when the polynomial is irreducible.
    pub fn find_factor(&self) -> Option<Poly> {
        let deg = self.degree()?;
        let f = &self.field;
        (1..=deg / 2).flat_map(|d| monic_polys(f, d)).find(|cand| self.rem(cand).is_ok_and(|r| r.is_zero()))
    }

    pub fn is_irreducible(&self) -> bool {
        self.degree().is_some_and(|d| d >= 1) && self.find_factor().is_none()
    }

    /// Renders with the given variable name, highest degree first.
    pub fn to_string_in(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let f = &self.field;
        let mut terms = Vec::new();
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let coeff = f.show(c).to_string();
            let mono = match i {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{i}"),
            };
            terms.push(match (i, c == Elem::ONE) {
                (0, _) => coeff,
                (_, true) => mono,
                _ => format!("{coeff}*{mono}"),
            });
        }
        terms.join(" + ")
    }

    /// Ascending coefficients in element syntax, e.g. `[2, 5, 1]`.
    pub fn coeff_list(&self) -> String {
        let items: Vec<String> = self.coeffs.iter().map(|&c| self.field.show(c).to_string()).collect();
        format!("[{}]", items.join(", "))
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_string_in("z"))
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly[{}]({})", self.field, self.coeff_list())
    }
}

/// Monic polynomials of degree `d` over a prime field in canonical order:
/// lower coefficients read as a base-`p` integer, constant term least significant.
pub fn monic_polys(field: &Field, d: usize) -> impl Iterator<Item = Poly> + '_ {
    let p = field.order() as u64;
    let count = p.pow(d as u32);
    (0..count).map(move |mut idx| {
        let mut coeffs = Vec::with_capacity(d + 1);
        for _ in 0..d {
            coeffs.push(Elem((idx % p) as u32));
            idx /= p;
        }
        coeffs.push(Elem::ONE);
        Poly::new(field, coeffs)
    })
}

/// First monic irreducible polynomial of degree `m` over the prime field
/// `field` in canonical order.
pub fn get_irreducible_polynomial(field: &Field, m: usize) -> Result<Poly, FieldError> {
    if !field.is_prime() {
        return Err(FieldError::TowerUnsupported(field.name()));
    }
    if m < 2 {
        return Err(FieldError::DegreeTooSmall(m));
    }
    Ok(monic_polys(field, m)
        .find(|f| f.find_factor().is_none())
        .expect("irreducible polynomials exist in every degree"))
}
