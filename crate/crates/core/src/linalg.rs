//! Dense exact linear algebra over a [`Field`].
//!
//! Vectors are rows: syndromes are computed as `y * H^T`. Gauss-Jordan
//! pivoting takes the first nonzero entry scanning down the current column,
//! processing columns left to right, so every reduction is deterministic.

use std::fmt;
use std::ops::Index;

use thiserror::Error;

use crate::galois::{Elem, Field, FieldError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("matrix data has {got} entries, expected {rows}x{cols}")]
    Shape { rows: usize, cols: usize, got: usize },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("operands belong to different fields ({0} and {1})")]
    FieldMismatch(String, String),
    #[error("Vandermonde matrix needs at least one row and one point")]
    EmptyVandermonde,
    #[error("syndrome of length {len} is too short for a Hankel matrix with t = {t}")]
    SyndromeTooShort { len: usize, t: usize },
    #[error("reduced Hankel matrix does not have the locator shape")]
    MalformedSyndromeStructure,
    #[error("singular system")]
    SingularSystem,
    #[error("{sub} is not a subfield of {field}")]
    NotSubfield { sub: String, field: String },
    #[error(transparent)]
    Field(#[from] FieldError),
}

fn same_field(a: &Field, b: &Field) -> Result<(), LinalgError> {
    if a == b {
        Ok(())
    } else {
        Err(LinalgError::FieldMismatch(a.name(), b.name()))
    }
}

/// A row vector over a field.
#[derive(Clone, PartialEq, Eq)]
pub struct Vector {
    field: Field,
    data: Vec<Elem>,
}

impl Vector {
    pub fn new(field: &Field, data: Vec<Elem>) -> Vector {
        debug_assert!(data.iter().all(|x| x.index() < field.order()));
        Vector { field: field.clone(), data }
    }

    pub fn zeros(field: &Field, n: usize) -> Vector {
        Vector::new(field, vec![Elem::ZERO; n])
    }

    pub fn from_ints(field: &Field, data: &[i64]) -> Vector {
        Vector::new(field, data.iter().map(|&c| field.from_int(c)).collect())
    }

    /// Parses `[x0, x1, ..]` with entries in the element syntax of `field`.
    pub fn parse(field: &Field, text: &str) -> Result<Vector, FieldError> {
        let bad = || FieldError::Parse { token: text.trim().to_string(), field: field.name() };
        let inner = text.trim().strip_prefix('[').and_then(|r| r.strip_suffix(']')).ok_or_else(bad)?;
        let data = split_top_level(inner)
            .into_iter()
            .filter(|tok| !tok.trim().is_empty())
            .map(|tok| field.parse_elem(tok))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Vector::new(field, data))
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn len(&self) -> usize {
        self.data.len()
    }

    pub fn is_empty(&self) -> bool {
        self.data.is_empty()
    }

    pub fn as_slice(&self) -> &[Elem] {
        &self.data
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Elem> {
        self.data.iter()
    }

    pub fn into_vec(self) -> Vec<Elem> {
        self.data
    }

    pub fn set(&mut self, i: usize, x: Elem) {
        self.data[i] = x;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    /// Number of nonzero entries.
    pub fn weight(&self) -> usize {
        self.data.iter().filter(|x| !x.is_zero()).count()
    }

    /// Positions of nonzero entries, ascending.
    pub fn support(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| !self.data[i].is_zero()).collect()
    }

    pub fn add(&self, other: &Vector) -> Result<Vector, LinalgError> {
        self.zip_with(other, |f, a, b| f.add(a, b))
    }

    pub fn sub(&self, other: &Vector) -> Result<Vector, LinalgError> {
        self.zip_with(other, |f, a, b| f.sub(a, b))
    }

    fn zip_with(&self, other: &Vector, op: impl Fn(&Field, Elem, Elem) -> Elem) -> Result<Vector, LinalgError> {
        same_field(&self.field, &other.field)?;
        if self.len() != other.len() {
            return Err(LinalgError::DimensionMismatch(format!("vector lengths {} and {}", self.len(), other.len())));
        }
        let f = &self.field;
        Ok(Vector::new(f, self.data.iter().zip(&other.data).map(|(&a, &b)| op(f, a, b)).collect()))
    }

    /// Reinterprets the entries as elements of `ext`, which must contain this field.
    pub fn embed(&self, ext: &Field) -> Result<Vector, LinalgError> {
        if !ext.contains_field(&self.field) {
            return Err(LinalgError::NotSubfield { sub: self.field.name(), field: ext.name() });
        }
        Ok(Vector::new(ext, self.data.clone()))
    }

    /// Projects every entry into `sub`; `None` if some entry lies outside it.
    pub fn pull(&self, sub: &Field) -> Option<Vector> {
        let data = self.data.iter().map(|&x| self.field.pull(x, sub)).collect::<Option<Vec<_>>>()?;
        Some(Vector::new(sub, data))
    }

    /// `self * m`.
    pub fn mul_mat(&self, m: &Matrix) -> Result<Vector, LinalgError> {
        same_field(&self.field, &m.field)?;
        if self.len() != m.rows {
            return Err(LinalgError::DimensionMismatch(format!("{}-vector times {}x{}", self.len(), m.rows, m.cols)));
        }
        let f = &self.field;
        let mut out = vec![Elem::ZERO; m.cols];
        for (i, &c) in self.data.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (o, &x) in out.iter_mut().zip(m.row(i)) {
                *o = f.add(*o, f.mul(c, x));
            }
        }
        Ok(Vector::new(f, out))
    }

    /// `self * m^T`.
    pub fn mul_transpose(&self, m: &Matrix) -> Result<Vector, LinalgError> {
        same_field(&self.field, &m.field)?;
        if self.len() != m.cols {
            return Err(LinalgError::DimensionMismatch(format!(
                "{}-vector times ({}x{})^T",
                self.len(),
                m.rows,
                m.cols
            )));
        }
        let f = &self.field;
        let out = (0..m.rows)
            .map(|i| m.row(i).iter().zip(&self.data).fold(Elem::ZERO, |acc, (&a, &b)| f.add(acc, f.mul(a, b))))
            .collect();
        Ok(Vector::new(f, out))
    }
}

impl Index<usize> for Vector {
    type Output = Elem;

    fn index(&self, i: usize) -> &Elem {
        &self.data[i]
    }
}

impl<'a> IntoIterator for &'a Vector {
    type Item = &'a Elem;
    type IntoIter = std::slice::Iter<'a, Elem>;

    fn into_iter(self) -> Self::IntoIter {
        self.data.iter()
    }
}

impl fmt::Display for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, &x) in self.data.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", self.field.show(x))?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} :: Vector[{}]", self.field)
    }
}

fn split_top_level(s: &str) -> Vec<&str> {
    let mut parts = Vec::new();
    let (mut depth, mut start) = (0usize, 0usize);
    for (i, ch) in s.char_indices() {
        match ch {
            '[' => depth += 1,
            ']' => depth = depth.saturating_sub(1),
            ',' if depth == 0 => {
                parts.push(&s[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    parts.push(&s[start..]);
    parts
}

/// Row-major dense matrix over a field.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Elem>,
}

/// Result of a Gauss-Jordan reduction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Echelon {
    pub rank: usize,
    pub rref: Matrix,
    pub pivots: Vec<usize>,
}

impl Matrix {
    pub fn new(field: &Field, rows: usize, cols: usize, data: Vec<Elem>) -> Result<Matrix, LinalgError> {
        if data.len() != rows * cols {
            return Err(LinalgError::Shape { rows, cols, got: data.len() });
        }
        Ok(Matrix { field: field.clone(), rows, cols, data })
    }

    pub fn zeros(field: &Field, rows: usize, cols: usize) -> Matrix {
        Matrix { field: field.clone(), rows, cols, data: vec![Elem::ZERO; rows * cols] }
    }

    pub fn identity(field: &Field, n: usize) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, Elem::ONE);
        }
        m
    }

    /// Builds from rows of equal length.
    pub fn from_rows(field: &Field, rows: Vec<Vec<Elem>>) -> Result<Matrix, LinalgError> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(LinalgError::DimensionMismatch("ragged rows".into()));
        }
        let n = rows.len();
        Matrix::new(field, n, cols, rows.into_iter().flatten().collect())
    }

    pub fn from_int_rows(field: &Field, rows: &[&[i64]]) -> Result<Matrix, LinalgError> {
        Matrix::from_rows(field, rows.iter().map(|r| r.iter().map(|&c| field.from_int(c)).collect()).collect())
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Elem {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, x: Elem) {
        self.data[i * self.cols + j] = x;
    }

    pub fn row(&self, i: usize) -> &[Elem] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vector(&self, i: usize) -> Vector {
        Vector::new(&self.field, self.row(i).to_vec())
    }

    pub fn column(&self, j: usize) -> Vector {
        Vector::new(&self.field, (0..self.rows).map(|i| self.get(i, j)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(&self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix, LinalgError> {
        same_field(&self.field, &other.field)?;
        if self.cols != other.rows {
            return Err(LinalgError::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let f = &self.field;
        let mut out = Matrix::zeros(f, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let cur = out.get(i, j);
                    out.set(i, j, f.add(cur, f.mul(a, other.get(k, j))));
                }
            }
        }
        Ok(out)
    }

    /// `[self | col]`.
    pub fn augment(&self, col: &Vector) -> Result<Matrix, LinalgError> {
        same_field(&self.field, col.field())?;
        if col.len() != self.rows {
            return Err(LinalgError::DimensionMismatch(format!("{} rows, column of {}", self.rows, col.len())));
        }
        let rows = (0..self.rows)
            .map(|i| {
                let mut r = self.row(i).to_vec();
                r.push(col[i]);
                r
            })
            .collect();
        Matrix::from_rows(&self.field, rows)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    /// Reduced row echelon form, rank, and pivot columns.
    pub fn gauss_jordan(&self) -> Echelon {
        let f = self.field.clone();
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(piv) = (row..m.rows).find(|&i| !m.get(i, col).is_zero()) else {
                continue;
            };
            m.swap_rows(row, piv);
            let inv = f.inv(m.get(row, col));
            for j in col..m.cols {
                let x = m.get(row, j);
                m.set(row, j, f.mul(x, inv));
            }
            for i in 0..m.rows {
                if i == row {
                    continue;
                }
                let c = m.get(i, col);
                if c.is_zero() {
                    continue;
                }
                for j in col..m.cols {
                    let v = f.sub(m.get(i, j), f.mul(c, m.get(row, j)));
                    m.set(i, j, v);
                }
            }
            pivots.push(col);
            row += 1;
        }
        Echelon { rank: pivots.len(), rref: m, pivots }
    }

    pub fn rank(&self) -> usize {
        self.gauss_jordan().rank
    }

    /// Basis of `{x : x * self^T = 0}` as the rows of a matrix, obtained by
    /// back-substitution over the free columns of the reduced form.
    pub fn null_space(&self) -> Matrix {
        let f = &self.field;
        let ech = self.gauss_jordan();
        let free: Vec<usize> = (0..self.cols).filter(|c| !ech.pivots.contains(c)).collect();
        let mut basis = Matrix::zeros(f, free.len(), self.cols);
        for (b, &fc) in free.iter().enumerate() {
            basis.set(b, fc, Elem::ONE);
            for (i, &pc) in ech.pivots.iter().enumerate() {
                basis.set(b, pc, f.neg(ech.rref.get(i, fc)));
            }
        }
        basis
    }

    /// Compact one-line rendering: `[[9, 1, 3], [1, 3, 9]]`.
    pub fn to_compact(&self) -> String {
        let rows: Vec<String> = (0..self.rows).map(|i| self.row_vector(i).to_string()).collect();
        format!("[{}]", rows.join(", "))
    }
}

impl fmt::Display for Matrix {
    /// One bracketed row per line with right-aligned entries.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.data.iter().map(|&x| self.field.show(x).to_string()).collect();
        let width = cells.iter().map(String::len).max().unwrap_or(1);
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "\n ")?;
            }
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{:>width$}", cells[i * self.cols + j])?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} :: Matrix[{}]", self.to_compact(), self.field)
    }
}

/// `r x n` matrix whose row `i` is `(a_1^i, .., a_n^i)`.
pub fn vandermonde(field: &Field, r: usize, alphas: &[Elem]) -> Result<Matrix, LinalgError> {
    if r == 0 || alphas.is_empty() {
        return Err(LinalgError::EmptyVandermonde);
    }
    let n = alphas.len();
    let mut m = Matrix::zeros(field, r, n);
    for (j, &a) in alphas.iter().enumerate() {
        let mut p = Elem::ONE;
        for i in 0..r {
            m.set(i, j, p);
            p = field.mul(p, a);
        }
    }
    Ok(m)
}

/// The `t x (t+1)` Hankel matrix `S[i][j] = s_{i+j}`.
pub fn hankel(s: &Vector, t: usize) -> Result<Matrix, LinalgError> {
    if t == 0 || s.len() < 2 * t {
        return Err(LinalgError::SyndromeTooShort { len: s.len(), t });
    }
    let mut m = Matrix::zeros(s.field(), t, t + 1);
    for i in 0..t {
        for j in 0..=t {
            m.set(i, j, s[i + j]);
        }
    }
    Ok(m)
}

/// Gauss-Jordan on a syndrome Hankel matrix, returning the column
/// `(-a_l, .., -a_1)` sitting right of the `l x l` identity block, where
/// `l` is the rank.
pub fn gj_locator(s: &Matrix) -> Result<Vector, LinalgError> {
    let ech = s.gauss_jordan();
    let l = ech.rank;
    if l == 0 || l >= s.cols() || ech.pivots.iter().enumerate().any(|(i, &c)| i != c) {
        return Err(LinalgError::MalformedSyndromeStructure);
    }
    Ok(Vector::new(s.field(), (0..l).map(|i| ech.rref.get(i, l)).collect()))
}

/// Expands each entry into its coordinates over `sub`; row `i` of `h`
/// becomes rows `i*m .. i*m + m` of the result.
pub fn blow(h: &Matrix, sub: &Field) -> Result<Matrix, LinalgError> {
    let field = h.field();
    if sub == field {
        return Ok(h.clone());
    }
    if !(sub.is_prime() && field.contains_field(sub)) {
        return Err(LinalgError::NotSubfield { sub: sub.name(), field: field.name() });
    }
    let m = field.degree() as usize;
    let mut out = Matrix::zeros(sub, h.rows() * m, h.cols());
    for i in 0..h.rows() {
        for j in 0..h.cols() {
            for (d, c) in field.coords(h.get(i, j)).into_iter().enumerate() {
                out.set(i * m + d, j, Elem(c));
            }
        }
    }
    Ok(out)
}

/// Keeps the rows that increase the rank when scanned top-down.
pub fn prune(m: &Matrix) -> Matrix {
    let f = m.field();
    // reduced basis rows paired with their pivot column
    let mut basis: Vec<(usize, Vec<Elem>)> = Vec::new();
    let mut kept = Vec::new();
    for i in 0..m.rows() {
        let mut v = m.row(i).to_vec();
        for (pc, b) in &basis {
            let c = v[*pc];
            if !c.is_zero() {
                for (x, &y) in v.iter_mut().zip(b) {
                    *x = f.sub(*x, f.mul(c, y));
                }
            }
        }
        if let Some(pc) = v.iter().position(|x| !x.is_zero()) {
            let inv = f.inv(v[pc]);
            for x in v.iter_mut() {
                *x = f.mul(*x, inv);
            }
            basis.push((pc, v));
            kept.push(m.row(i).to_vec());
        }
    }
    let cols = m.cols();
    let rows = kept.len();
    Matrix::new(f, rows, cols, kept.into_iter().flatten().collect()).expect("consistent shape")
}

/// Unique solution of the square system `a * x = b` (column convention).
pub fn solve_square(a: &Matrix, b: &Vector) -> Result<Vector, LinalgError> {
    let n = a.rows();
    if a.cols() != n {
        return Err(LinalgError::DimensionMismatch(format!("{}x{} is not square", n, a.cols())));
    }
    let ech = a.augment(b)?.gauss_jordan();
    if ech.pivots.len() < n || ech.pivots[n - 1] != n - 1 {
        return Err(LinalgError::SingularSystem);
    }
    Ok(ech.rref.column(n))
}
