//! Prime fields `Z_p` and single extensions `F_{p^m} = Z_p[X]/(f)`.
//!
//! Elements are plain indices into the canonical enumeration of the field:
//! the coordinate tuple `(c_0, .., c_{m-1})` over `Z_p` (ascending powers of
//! the generator) read as a base-`p` integer with `c_0` least significant.
//! Consequently the prime subfield occupies indices `0..p` and embeds into
//! the extension with the same index, and the generator `X` has index `p`.

use std::fmt;
use std::sync::Arc;

use super::FieldError;

/// Largest accepted characteristic.
pub const MAX_CHARACTERISTIC: u64 = 1 << 16;
/// Largest accepted field order.
pub const MAX_ORDER: u64 = 1 << 20;

/// An element of some [`Field`], identified by its canonical index.
///
/// Elements do not carry their field; arithmetic goes through the owning
/// [`Field`] handle.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Elem(pub(crate) u32);

impl Elem {
    pub const ZERO: Elem = Elem(0);
    pub const ONE: Elem = Elem(1);

    /// Position of the element in the canonical enumeration.
    #[inline]
    pub fn index(self) -> u32 {
        self.0
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

/// Cheaply clonable handle to an immutable finite field.
#[derive(Clone)]
pub struct Field(Arc<FieldInner>);

struct FieldInner {
    p: u32,
    m: u32,
    q: u32,
    /// Ascending coefficients of the monic modulus; empty for prime fields.
    modulus: Vec<u32>,
    label: String,
    subfield: Option<Field>,
    /// `exp[i] = g^i` for the first primitive element `g`.
    exp: Vec<u32>,
    /// Discrete log base `g`; `log[0]` is unused.
    log: Vec<u32>,
    /// Whether the generator (`X`, or `g` for prime fields) is primitive.
    generator_primitive: bool,
}

impl Field {
    /// The prime field `Z_p`.
    pub fn prime(p: u64) -> Result<Field, FieldError> {
        if p < 2 {
            return Err(FieldError::NotPrime { p, factor: None });
        }
        if p > MAX_CHARACTERISTIC {
            return Err(FieldError::TooLarge { order: p, max: MAX_CHARACTERISTIC });
        }
        if let Some(f) = smallest_factor(p) {
            return Err(FieldError::NotPrime { p, factor: Some(f) });
        }
        Ok(Field::build(p as u32, 1, Vec::new(), String::new(), None))
    }

    /// The extension `K[X]/(f)` of the prime field `K`, together with the
    /// class of `X`, which is labelled `label` when displayed.
    pub fn extension(base: &Field, modulus: &super::Poly, label: &str) -> Result<(Field, Elem), FieldError> {
        if !base.is_prime() {
            return Err(FieldError::TowerUnsupported(base.name()));
        }
        if modulus.field() != base {
            return Err(FieldError::FieldMismatch);
        }
        let m = match modulus.degree() {
            Some(d) if d >= 2 => d as u32,
            d => return Err(FieldError::DegreeTooSmall(d.unwrap_or(0))),
        };
        if !modulus.is_monic() {
            return Err(FieldError::NotMonic(modulus.to_string_in("X")));
        }
        let order = (base.p() as u64)
            .checked_pow(m)
            .filter(|&q| q <= MAX_ORDER)
            .ok_or(FieldError::TooLarge { order: (base.p() as u64).saturating_pow(m), max: MAX_ORDER })?;
        debug_assert!(order <= MAX_ORDER);
        if let Some(factor) = modulus.find_factor() {
            return Err(FieldError::Reducible { modulus: modulus.to_string_in("X"), factor: factor.to_string_in("X") });
        }
        let coeffs = modulus.coeffs().iter().map(|c| c.0).collect();
        let label = if label.is_empty() { "a" } else { label };
        let field = Field::build(base.p(), m, coeffs, label.to_string(), Some(base.clone()));
        let gen = Elem(field.p());
        Ok((field, gen))
    }

    fn build(p: u32, m: u32, modulus: Vec<u32>, label: String, subfield: Option<Field>) -> Field {
        let q = p.pow(m);
        let slow = SlowArith { p, m, modulus: &modulus };
        let order = (q - 1) as u64;
        let factors = prime_factors(order);
        let is_primitive = |x: u32| factors.iter().all(|&f| slow.pow(x, order / f) != 1);
        let primitive = (1..q).find(|&x| is_primitive(x)).expect("multiplicative group is cyclic");
        let mut exp = Vec::with_capacity(q as usize - 1);
        let mut log = vec![0u32; q as usize];
        let mut acc = 1u32;
        for i in 0..q - 1 {
            exp.push(acc);
            log[acc as usize] = i;
            acc = slow.mul(acc, primitive);
        }
        let generator_primitive = m == 1 || primitive == p;
        Field(Arc::new(FieldInner { p, m, q, modulus, label, subfield, exp, log, generator_primitive }))
    }

    #[inline]
    pub fn p(&self) -> u32 {
        self.0.p
    }

    /// Extension degree over the prime subfield.
    #[inline]
    pub fn degree(&self) -> u32 {
        self.0.m
    }

    /// Number of elements.
    #[inline]
    pub fn order(&self) -> u32 {
        self.0.q
    }

    #[inline]
    pub fn is_prime(&self) -> bool {
        self.0.m == 1
    }

    /// Ascending coefficients of the modulus, `None` for prime fields.
    pub fn modulus(&self) -> Option<Vec<Elem>> {
        if self.is_prime() {
            None
        } else {
            Some(self.0.modulus.iter().map(|&c| Elem(c)).collect())
        }
    }

    pub fn label(&self) -> &str {
        &self.0.label
    }

    /// Short name such as `Z13` or `F25`.
    pub fn name(&self) -> String {
        if self.is_prime() {
            format!("Z{}", self.p())
        } else {
            format!("F{}", self.order())
        }
    }

    /// Human-readable description including the modulus.
    pub fn describe(&self) -> String {
        match self.subfield() {
            None => self.name(),
            Some(k) => {
                let f = super::Poly::new(k, self.modulus().unwrap_or_default());
                format!("{} = {}[X]/({}), generator {}", self.name(), k.name(), f.to_string_in("X"), self.label())
            }
        }
    }

    /// The prime subfield, itself for prime fields.
    pub fn prime_subfield(&self) -> Field {
        self.0.subfield.clone().unwrap_or_else(|| self.clone())
    }

    fn subfield(&self) -> Option<&Field> {
        self.0.subfield.as_ref()
    }

    /// Whether `sub` is this field or its prime subfield.
    pub fn contains_field(&self, sub: &Field) -> bool {
        self == sub || (sub.is_prime() && sub.p() == self.p())
    }

    #[inline]
    pub fn zero(&self) -> Elem {
        Elem::ZERO
    }

    #[inline]
    pub fn one(&self) -> Elem {
        Elem::ONE
    }

    /// The class of `X` for extensions; the first primitive element for prime fields.
    pub fn generator(&self) -> Elem {
        if self.is_prime() {
            self.primitive_element()
        } else {
            Elem(self.p())
        }
    }

    pub fn generator_is_primitive(&self) -> bool {
        self.0.generator_primitive
    }

    /// First primitive element in canonical order.
    pub fn primitive_element(&self) -> Elem {
        Elem(self.0.exp.get(1).copied().unwrap_or(1))
    }

    /// Element with the given canonical index.
    pub fn element(&self, index: u32) -> Result<Elem, FieldError> {
        if index < self.order() {
            Ok(Elem(index))
        } else {
            Err(FieldError::IndexOutOfRange { index, order: self.order() })
        }
    }

    /// All elements in canonical order.
    pub fn elements(&self) -> impl Iterator<Item = Elem> + '_ {
        (0..self.order()).map(Elem)
    }

    /// The image of an integer in the prime subfield.
    pub fn from_int(&self, c: i64) -> Elem {
        Elem(c.rem_euclid(self.p() as i64) as u32)
    }

    /// Coordinates over the prime subfield, ascending powers of the generator.
    pub fn coords(&self, x: Elem) -> Vec<u32> {
        let p = self.p();
        let mut v = x.0;
        (0..self.degree())
            .map(|_| {
                let c = v % p;
                v /= p;
                c
            })
            .collect()
    }

    /// Builds an element from coordinates, reducing each mod `p`.
    pub fn from_coords(&self, coords: &[i64]) -> Result<Elem, FieldError> {
        if coords.len() > self.degree() as usize {
            return Err(FieldError::TooManyCoordinates { got: coords.len(), m: self.degree() });
        }
        let p = self.p() as i64;
        let idx = coords.iter().rev().fold(0i64, |acc, &c| acc * p + c.rem_euclid(p));
        Ok(Elem(idx as u32))
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        let p = self.0.p;
        if self.0.m == 1 {
            let s = a.0 + b.0;
            return Elem(if s >= p { s - p } else { s });
        }
        if p == 2 {
            return Elem(a.0 ^ b.0);
        }
        let (mut x, mut y, mut out, mut place) = (a.0, b.0, 0u32, 1u32);
        while x != 0 || y != 0 {
            let d = (x % p + y % p) % p;
            out += d * place;
            place *= p;
            x /= p;
            y /= p;
        }
        Elem(out)
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        let p = self.0.p;
        if self.0.m == 1 {
            return Elem(if a.0 == 0 { 0 } else { p - a.0 });
        }
        if p == 2 {
            return a;
        }
        let (mut x, mut out, mut place) = (a.0, 0u32, 1u32);
        while x != 0 {
            out += ((p - x % p) % p) * place;
            place *= p;
            x /= p;
        }
        Elem(out)
    }

    #[inline]
    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        if a.0 == 0 || b.0 == 0 {
            return Elem::ZERO;
        }
        if self.0.m == 1 {
            return Elem(((a.0 as u64 * b.0 as u64) % self.0.p as u64) as u32);
        }
        let n = self.0.q - 1;
        let mut e = self.0.log[a.0 as usize] + self.0.log[b.0 as usize];
        if e >= n {
            e -= n;
        }
        Elem(self.0.exp[e as usize])
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn checked_inv(&self, a: Elem) -> Option<Elem> {
        if a.0 == 0 {
            return None;
        }
        let n = self.0.q - 1;
        let l = self.0.log[a.0 as usize];
        Some(Elem(self.0.exp[((n - l) % n) as usize]))
    }

    /// Multiplicative inverse.
    ///
    /// # Panics
    /// If `a` is zero.
    pub fn inv(&self, a: Elem) -> Elem {
        self.checked_inv(a).unwrap_or_else(|| panic!("division by zero in {}", self.name()))
    }

    /// `a / b`, panicking when `b` is zero.
    pub fn div(&self, a: Elem, b: Elem) -> Elem {
        self.mul(a, self.inv(b))
    }

    pub fn pow(&self, a: Elem, e: u64) -> Elem {
        if e == 0 {
            return Elem::ONE;
        }
        if a.0 == 0 {
            return Elem::ZERO;
        }
        let n = (self.0.q - 1) as u64;
        let l = self.0.log[a.0 as usize] as u64;
        Elem(self.0.exp[((l * (e % n)) % n) as usize])
    }

    /// Discrete logarithm with respect to [`Field::primitive_element`].
    pub fn log(&self, a: Elem) -> Option<u32> {
        (!a.is_zero()).then(|| self.0.log[a.0 as usize])
    }

    /// Least `n >= 1` with `x^n = 1`.
    pub fn element_order(&self, x: Elem) -> Result<u64, FieldError> {
        let l = self.log(x).ok_or(FieldError::ZeroHasNoOrder)? as u64;
        let n = (self.order() - 1) as u64;
        Ok(n / gcd(l, n))
    }

    pub fn is_primitive(&self, x: Elem) -> bool {
        self.element_order(x).is_ok_and(|o| o == (self.order() - 1) as u64)
    }

    /// Projects `x` into `sub` (this field or its prime subfield), or `None`
    /// when `x` does not lie there.
    pub fn pull(&self, x: Elem, sub: &Field) -> Option<Elem> {
        if sub == self {
            Some(x)
        } else if sub.is_prime() && sub.p() == self.p() {
            (x.0 < self.p()).then_some(x)
        } else {
            None
        }
    }

    pub fn belongs(&self, x: Elem, sub: &Field) -> bool {
        self.pull(x, sub).is_some()
    }

    /// Displays an element: integers for prime fields, powers of the
    /// generator when it is primitive, coordinate lists otherwise.
    pub fn show(&self, x: Elem) -> ElemDisplay<'_> {
        ElemDisplay { field: self, x }
    }

    /// Parses the textual element syntax: a decimal integer (prime subfield),
    /// `label`, `label^k` / `label**k`, or `[c0,c1,..]`.
    pub fn parse_elem(&self, s: &str) -> Result<Elem, FieldError> {
        let s = s.trim();
        let bad = || FieldError::Parse { token: s.to_string(), field: self.name() };
        if let Some(inner) = s.strip_prefix('[').and_then(|r| r.strip_suffix(']')) {
            let coords = inner
                .split(',')
                .map(str::trim)
                .filter(|c| !c.is_empty())
                .map(|c| c.parse::<i64>().map_err(|_| bad()))
                .collect::<Result<Vec<_>, _>>()?;
            return self.from_coords(&coords);
        }
        if let Ok(c) = s.parse::<i64>() {
            return Ok(self.from_int(c));
        }
        let label = self.label();
        if !self.is_prime() {
            if let Some(rest) = s.strip_prefix(label) {
                let rest = rest.trim();
                if rest.is_empty() {
                    return Ok(self.generator());
                }
                let exp = rest.strip_prefix("**").or_else(|| rest.strip_prefix('^')).ok_or_else(bad)?.trim();
                let k: i64 = exp.parse().map_err(|_| bad())?;
                let g = self.generator();
                let n = (self.order() - 1) as i64;
                return Ok(self.pow(g, k.rem_euclid(n) as u64));
            }
        }
        Err(bad())
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.p == other.0.p && self.0.m == other.0.m && self.0.modulus == other.0.modulus)
    }
}

impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

pub struct ElemDisplay<'a> {
    field: &'a Field,
    x: Elem,
}

impl fmt::Display for ElemDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let field = self.field;
        let x = self.x;
        if field.is_prime() || x.0 <= 1 {
            return write!(f, "{}", x.0);
        }
        if field.generator_is_primitive() {
            // log base the generator, since the generator is the first primitive
            let k = field.0.log[x.0 as usize];
            return match k {
                1 => write!(f, "{}", field.label()),
                _ => write!(f, "{}^{}", field.label(), k),
            };
        }
        let coords = field.coords(x);
        write!(f, "[")?;
        for (i, c) in coords.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

/// Schoolbook arithmetic on coordinate indices, used to bootstrap the tables.
struct SlowArith<'a> {
    p: u32,
    m: u32,
    modulus: &'a [u32],
}

impl SlowArith<'_> {
    fn digits(&self, mut x: u32) -> Vec<u64> {
        (0..self.m)
            .map(|_| {
                let d = x % self.p;
                x /= self.p;
                d as u64
            })
            .collect()
    }

    fn mul(&self, a: u32, b: u32) -> u32 {
        let p = self.p as u64;
        if self.m == 1 {
            return ((a as u64 * b as u64) % p) as u32;
        }
        let (da, db) = (self.digits(a), self.digits(b));
        let m = self.m as usize;
        let mut prod = vec![0u64; 2 * m - 1];
        for (i, &x) in da.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in db.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % p;
            }
        }
        // reduce by the monic modulus from the top down
        for top in (m..prod.len()).rev() {
            let c = prod[top];
            if c == 0 {
                continue;
            }
            prod[top] = 0;
            for (k, &f) in self.modulus[..m].iter().enumerate() {
                let idx = top - m + k;
                prod[idx] = (prod[idx] + (p - c) * f as u64) % p;
            }
        }
        prod[..m].iter().rev().fold(0u64, |acc, &d| acc * p + d) as u32
    }

    fn pow(&self, mut base: u32, mut e: u64) -> u32 {
        let mut acc = 1u32;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }
}

pub(crate) fn smallest_factor(n: u64) -> Option<u64> {
    if n < 4 {
        return None;
    }
    (2..).take_while(|d| d * d <= n).find(|d| n.is_multiple_of(*d))
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}
