//! Alternant codes `A_K(h, alpha, r)` and their RS, GRS, BCH and classical
//! Goppa specializations.
//!
//! A code is the set of `x` in `K^n` with `x * H^T = 0`, where
//! `H[i][j] = h_j * alpha_j^i` has entries in an extension `K̄` of `K`.
//! Here `K` is either `K̄` itself or its prime subfield.

use std::fmt;
use std::sync::OnceLock;

use thiserror::Error;

use crate::galois::{Elem, Field, FieldError, Poly};
use crate::linalg::{blow, prune, vandermonde, LinalgError, Matrix, Vector};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CodeError {
    #[error("h and alpha have different lengths ({h} and {alpha})")]
    LengthMismatch { h: usize, alpha: usize },
    #[error("{which}[{index}] is zero")]
    ZeroEntry { which: &'static str, index: usize },
    #[error("alpha[{first}] and alpha[{second}] coincide")]
    RepeatedAlpha { first: usize, second: usize },
    #[error("order r = {r} out of range for length n = {n} (need 1 <= r < n)")]
    OrderOutOfRange { r: usize, n: usize },
    #[error("dimension k = {k} out of range for length n = {n} (need 1 <= k < n)")]
    DimensionOutOfRange { k: usize, n: usize },
    #[error("{base} is neither {ext} nor its prime subfield")]
    BaseFieldMismatch { base: String, ext: String },
    #[error("h, alpha and g must share one field")]
    FieldMismatch,
    #[error("Goppa polynomial vanishes at alpha[{index}]")]
    GoppaRoot { index: usize },
    #[error("Goppa polynomial must have positive degree")]
    GoppaDegree,
    #[error("designed distance must be at least 2, got {0}")]
    DesignedDistance(usize),
    #[error("vector has length {got}, expected {expected}")]
    WrongLength { expected: usize, got: usize },
    #[error("entry {index} does not lie in {field}")]
    NotInBaseField { index: usize, field: String },
    #[error("vector is not a codeword")]
    NotACodeword,
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// Which constructor produced a code, with its parameters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CodeKind {
    Alternant,
    ReedSolomon { k: usize },
    GeneralizedReedSolomon { k: usize },
    PrimitiveReedSolomon { k: usize },
    Bch { alpha: Elem, d: usize, offset: u64 },
    Goppa { g: Poly },
}

impl CodeKind {
    /// RS-type codes are MDS, so their distance bound is exact.
    pub fn is_mds(&self) -> bool {
        matches!(
            self,
            CodeKind::ReedSolomon { .. }
                | CodeKind::GeneralizedReedSolomon { .. }
                | CodeKind::PrimitiveReedSolomon { .. }
        )
    }
}

#[derive(Clone, Debug)]
struct DimensionData {
    pruned_rank: usize,
    generator: Matrix,
    /// Columns where the generator rows form an identity matrix.
    info_set: Vec<usize>,
}

/// An alternant code together with its derived control matrix.
#[derive(Clone)]
pub struct AlternantCode {
    base: Field,
    ext: Field,
    h: Vector,
    alpha: Vector,
    r: usize,
    kind: CodeKind,
    d_bound: usize,
    control: Matrix,
    dimension: OnceLock<DimensionData>,
}

impl AlternantCode {
    /// `A_K(h, alpha, r)`; `base` must be the field of `h` and `alpha` or its prime subfield.
    pub fn ac(h: &Vector, alpha: &Vector, r: usize, base: &Field) -> Result<AlternantCode, CodeError> {
        Self::build(h, alpha, r, base, CodeKind::Alternant, r + 1)
    }

    fn build(
        h: &Vector,
        alpha: &Vector,
        r: usize,
        base: &Field,
        kind: CodeKind,
        d_bound: usize,
    ) -> Result<AlternantCode, CodeError> {
        let ext = alpha.field().clone();
        if h.field() != &ext {
            return Err(CodeError::FieldMismatch);
        }
        if !(base == &ext || (base.is_prime() && ext.contains_field(base))) {
            return Err(CodeError::BaseFieldMismatch { base: base.name(), ext: ext.name() });
        }
        let n = alpha.len();
        if h.len() != n {
            return Err(CodeError::LengthMismatch { h: h.len(), alpha: n });
        }
        if let Some(index) = h.iter().position(|x| x.is_zero()) {
            return Err(CodeError::ZeroEntry { which: "h", index });
        }
        if let Some(index) = alpha.iter().position(|x| x.is_zero()) {
            return Err(CodeError::ZeroEntry { which: "alpha", index });
        }
        let mut seen = vec![usize::MAX; ext.order() as usize];
        for (i, a) in alpha.iter().enumerate() {
            let slot = &mut seen[a.index() as usize];
            if *slot != usize::MAX {
                return Err(CodeError::RepeatedAlpha { first: *slot, second: i });
            }
            *slot = i;
        }
        if r == 0 || r >= n {
            return Err(CodeError::OrderOutOfRange { r, n });
        }
        let mut control = vandermonde(&ext, r, alpha.as_slice())?;
        for j in 0..n {
            for i in 0..r {
                let x = control.get(i, j);
                control.set(i, j, ext.mul(x, h[j]));
            }
        }
        Ok(AlternantCode {
            base: base.clone(),
            ext,
            h: h.clone(),
            alpha: alpha.clone(),
            r,
            kind,
            d_bound,
            control,
            dimension: OnceLock::new(),
        })
    }

    /// `RS(alpha, k)` with `h_i = 1 / prod_{j != i} (alpha_j - alpha_i)`.
    pub fn rs(alpha: &Vector, k: usize) -> Result<AlternantCode, CodeError> {
        let h = rs_multipliers(alpha)?;
        let n = alpha.len();
        check_k(k, n)?;
        Self::build(&h, alpha, n - k, alpha.field(), CodeKind::ReedSolomon { k }, n - k + 1)
    }

    /// `GRS(h, alpha, k)` over the field of `alpha`.
    pub fn grs(h: &Vector, alpha: &Vector, k: usize) -> Result<AlternantCode, CodeError> {
        let n = alpha.len();
        check_k(k, n)?;
        Self::build(h, alpha, n - k, alpha.field(), CodeKind::GeneralizedReedSolomon { k }, n - k + 1)
    }

    /// Primitive RS code of `field`: alpha runs over `1, g, .., g^{q-2}` for
    /// the first primitive element `g`.
    pub fn prs(field: &Field, k: usize) -> Result<AlternantCode, CodeError> {
        let n = (field.order() - 1) as usize;
        check_k(k, n)?;
        let g = field.primitive_element();
        let alpha = Vector::new(field, (0..n as u64).map(|i| field.pow(g, i)).collect());
        let h = rs_multipliers(&alpha)?;
        Self::build(&h, &alpha, n - k, field, CodeKind::PrimitiveReedSolomon { k }, n - k + 1)
    }

    /// `BCH(alpha, d, offset)` over the prime subfield; `n` is the order of `alpha`.
    pub fn bch(field: &Field, alpha: Elem, d: usize, offset: u64) -> Result<AlternantCode, CodeError> {
        if d < 2 {
            return Err(CodeError::DesignedDistance(d));
        }
        let n = field.element_order(alpha)? as usize;
        let powers: Vec<Elem> = (0..n as u64).map(|i| field.pow(alpha, i)).collect();
        let h = Vector::new(field, powers.iter().map(|&x| field.pow(x, offset)).collect());
        let a = Vector::new(field, powers);
        let kind = CodeKind::Bch { alpha, d, offset };
        Self::build(&h, &a, d - 1, &field.prime_subfield(), kind, d)
    }

    /// Classical Goppa code `Γ(g, alpha)` over the prime subfield, with
    /// `h_i = 1 / g(alpha_i)`.
    pub fn goppa(g: &Poly, alpha: &Vector) -> Result<AlternantCode, CodeError> {
        let ext = alpha.field();
        if g.field() != ext {
            return Err(CodeError::FieldMismatch);
        }
        let r = match g.degree() {
            Some(d) if d > 0 => d,
            _ => return Err(CodeError::GoppaDegree),
        };
        let mut h = Vec::with_capacity(alpha.len());
        for (index, &a) in alpha.iter().enumerate() {
            let v = ext.checked_inv(g.eval(a)).ok_or(CodeError::GoppaRoot { index })?;
            h.push(v);
        }
        let base = ext.prime_subfield();
        let d_bound = if base.order() == 2 && g.is_squarefree() { 2 * r + 1 } else { r + 1 };
        Self::build(&Vector::new(ext, h), alpha, r, &base, CodeKind::Goppa { g: g.clone() }, d_bound)
    }

    pub fn n(&self) -> usize {
        self.alpha.len()
    }

    /// Number of rows of the control matrix.
    pub fn r(&self) -> usize {
        self.r
    }

    /// Error-correction capacity `floor(r / 2)`.
    pub fn t(&self) -> usize {
        self.r / 2
    }

    /// Degree of `K̄` over `K`.
    pub fn m(&self) -> usize {
        (self.ext.degree() / self.base.degree()) as usize
    }

    pub fn base_field(&self) -> &Field {
        &self.base
    }

    pub fn ext_field(&self) -> &Field {
        &self.ext
    }

    pub fn h(&self) -> &Vector {
        &self.h
    }

    pub fn alpha(&self) -> &Vector {
        &self.alpha
    }

    pub fn kind(&self) -> &CodeKind {
        &self.kind
    }

    pub fn control_matrix(&self) -> &Matrix {
        &self.control
    }

    /// Lower bound on the minimum distance: `r + 1`, or `2r + 1` for binary
    /// Goppa codes with squarefree `g`.
    pub fn distance_bound(&self) -> usize {
        self.d_bound
    }

    fn dimension_data(&self) -> &DimensionData {
        self.dimension.get_or_init(|| {
            let base_control = prune(&blow(&self.control, &self.base).expect("base is a subfield of ext"));
            let pivots = base_control.gauss_jordan().pivots;
            let info_set = (0..self.n()).filter(|c| !pivots.contains(c)).collect();
            DimensionData { pruned_rank: base_control.rows(), generator: base_control.null_space(), info_set }
        })
    }

    /// `n - rank(blow(H, K))`, computed once.
    pub fn dimension(&self) -> usize {
        self.n() - self.dimension_data().pruned_rank
    }

    /// Rank of the control matrix expanded over `K`.
    pub fn base_rank(&self) -> usize {
        self.dimension_data().pruned_rank
    }

    /// `k x n` matrix over `K` whose rows form a basis of the code.
    pub fn generator_matrix(&self) -> &Matrix {
        &self.dimension_data().generator
    }

    /// `message * G`.
    pub fn encode(&self, message: &Vector) -> Result<Vector, CodeError> {
        let g = self.generator_matrix();
        let msg = self.to_base(message)?;
        if msg.len() != g.rows() {
            return Err(CodeError::WrongLength { expected: g.rows(), got: msg.len() });
        }
        Ok(msg.mul_mat(g)?)
    }

    /// Inverse of [`encode`](Self::encode) on codewords.
    pub fn message(&self, x: &Vector) -> Result<Vector, CodeError> {
        if !self.contains(x) {
            return Err(CodeError::NotACodeword);
        }
        let x = self.to_base(x)?;
        let info = &self.dimension_data().info_set;
        Ok(Vector::new(&self.base, info.iter().map(|&j| x[j]).collect()))
    }

    /// `y * H^T` for `y` over `K` or `K̄`.
    pub fn syndrome(&self, y: &Vector) -> Result<Vector, CodeError> {
        if y.len() != self.n() {
            return Err(CodeError::WrongLength { expected: self.n(), got: y.len() });
        }
        Ok(y.embed(&self.ext)?.mul_transpose(&self.control)?)
    }

    /// Membership: entries in `K` and zero syndrome.
    pub fn contains(&self, x: &Vector) -> bool {
        self.to_base(x).is_ok() && self.syndrome(x).is_ok_and(|s| s.is_zero())
    }

    /// Reinterprets a vector over `K` or `K̄` as a vector over `K`.
    pub fn to_base(&self, v: &Vector) -> Result<Vector, CodeError> {
        if v.field() == &self.base {
            return Ok(v.clone());
        }
        if v.field() != &self.ext {
            return Err(CodeError::FieldMismatch);
        }
        v.pull(&self.base).ok_or_else(|| {
            let index = v.iter().position(|&x| !self.ext.belongs(x, &self.base)).unwrap_or(0);
            CodeError::NotInBaseField { index, field: self.base.name() }
        })
    }

    /// `[n,k,d]` for MDS codes, `[n,k,>=d]` when only a bound is known.
    pub fn parameters(&self) -> String {
        let (n, k, d) = (self.n(), self.dimension(), self.d_bound);
        if self.kind.is_mds() {
            format!("[{n},{k},{d}]")
        } else {
            format!("[{n},{k},>={d}]")
        }
    }

    /// Short constructor description, e.g. `PRS(Z13, 8)`.
    pub fn label(&self) -> String {
        match &self.kind {
            CodeKind::Alternant => format!("AC(h, a, {}, {})", self.r, self.base),
            CodeKind::ReedSolomon { k } => format!("RS(a, {k}) over {}", self.ext),
            CodeKind::GeneralizedReedSolomon { k } => format!("GRS(h, a, {k}) over {}", self.ext),
            CodeKind::PrimitiveReedSolomon { k } => format!("PRS({}, {k})", self.ext),
            CodeKind::Bch { alpha, d, offset } => {
                format!("BCH({}, {d}, {offset}) over {}", self.ext.show(*alpha), self.base)
            }
            CodeKind::Goppa { g } => format!("Goppa({}, a) over {}", g.to_string_in("T"), self.base),
        }
    }
}

impl fmt::Debug for AlternantCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} [n={}, r={}, K={}, K̄={}]", self.label(), self.n(), self.r, self.base, self.ext)
    }
}

fn check_k(k: usize, n: usize) -> Result<(), CodeError> {
    if k == 0 || k >= n {
        Err(CodeError::DimensionOutOfRange { k, n })
    } else {
        Ok(())
    }
}

/// `h_i = 1 / prod_{j != i} (alpha_j - alpha_i)`.
pub fn rs_multipliers(alpha: &Vector) -> Result<Vector, CodeError> {
    let f = alpha.field();
    let a = alpha.as_slice();
    let mut h = Vec::with_capacity(a.len());
    for i in 0..a.len() {
        let prod = (0..a.len()).filter(|&j| j != i).fold(Elem::ONE, |acc, j| f.mul(acc, f.sub(a[j], a[i])));
        let inv = f.checked_inv(prod).ok_or_else(|| {
            let second = (0..a.len()).find(|&j| j != i && a[j] == a[i]).unwrap_or(i);
            CodeError::RepeatedAlpha { first: i.min(second), second: i.max(second) }
        })?;
        h.push(inv);
    }
    Ok(Vector::new(f, h))
}

/// Nonzero elements of the field of `g` at which `g` does not vanish, in canonical order.
pub fn goppa_support(g: &Poly) -> Vector {
    let f = g.field();
    Vector::new(f, f.elements().skip(1).filter(|&x| !g.eval(x).is_zero()).collect())
}
