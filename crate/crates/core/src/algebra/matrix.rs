//! Square matrices over a [`Field`].

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};

use super::field::{Code, Field, FieldElement};
use super::AlgebraError;

/// Largest supported dimension.
pub const MAX_DIM: usize = 8;

#[derive(Clone)]
pub struct Matrix {
    field: Field,
    n: usize,
    entries: Vec<Code>,
}

impl PartialEq for Matrix {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.entries == other.entries && self.field == other.field
    }
}
impl Eq for Matrix {}

impl Hash for Matrix {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.n.hash(state);
        self.entries.hash(state);
    }
}

/// Canonical order: dimension, then row-major entries compared by their
/// coefficient sequences.
impl Ord for Matrix {
    fn cmp(&self, other: &Self) -> Ordering {
        self.n.cmp(&other.n).then_with(|| self.entries.cmp(&other.entries))
    }
}
impl PartialOrd for Matrix {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text())
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.n {
            let row: Vec<String> = (0..self.n)
                .map(|j| self.field.format(self.entries[i * self.n + j]))
                .collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl Matrix {
    pub fn from_codes(field: &Field, n: usize, entries: Vec<Code>) -> Result<Matrix, AlgebraError> {
        if n == 0 || n > MAX_DIM {
            return Err(AlgebraError::InvalidDimension(n));
        }
        if entries.len() != n * n {
            return Err(AlgebraError::Shape { expected: n * n, got: entries.len() });
        }
        if entries.iter().any(|&c| c as u32 >= field.order()) {
            return Err(AlgebraError::InvalidElement("entry out of range".into()));
        }
        Ok(Matrix { field: field.clone(), n, entries })
    }

    /// Builds a matrix from integer literals mapped into the prime subfield,
    /// so `-1` is `p - 1`.
    pub fn from_ints(field: &Field, rows: &[&[i64]]) -> Result<Matrix, AlgebraError> {
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * n);
        for row in rows {
            if row.len() != n {
                return Err(AlgebraError::Shape { expected: n, got: row.len() });
            }
            entries.extend(row.iter().map(|&v| field.from_int(v)));
        }
        Matrix::from_codes(field, n, entries)
    }

    pub fn identity(field: &Field, n: usize) -> Matrix {
        Matrix::scalar(field, n, field.one())
    }

    pub fn scalar(field: &Field, n: usize, lambda: Code) -> Matrix {
        let mut entries = vec![0; n * n];
        for i in 0..n {
            entries[i * n + i] = lambda;
        }
        Matrix { field: field.clone(), n, entries }
    }

    pub fn diagonal(field: &Field, diag: &[Code]) -> Matrix {
        let n = diag.len();
        let mut entries = vec![0; n * n];
        for (i, &d) in diag.iter().enumerate() {
            entries[i * n + i] = d;
        }
        Matrix { field: field.clone(), n, entries }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }
    pub fn dim(&self) -> usize {
        self.n
    }
    pub fn codes(&self) -> &[Code] {
        &self.entries
    }

    #[inline]
    pub fn at(&self, i: usize, j: usize) -> Code {
        self.entries[i * self.n + j]
    }

    pub fn get(&self, i: usize, j: usize) -> FieldElement {
        self.field.element(self.at(i, j))
    }

    pub fn with_entry(mut self, i: usize, j: usize, v: Code) -> Matrix {
        self.entries[i * self.n + j] = v;
        self
    }

    pub fn is_identity(&self) -> bool {
        let one = self.field.one();
        (0..self.n).all(|i| {
            (0..self.n).all(|j| self.at(i, j) == if i == j { one } else { 0 })
        })
    }

    /// `Some(lambda)` when the matrix is `lambda * I`.
    pub fn as_scalar(&self) -> Option<Code> {
        let lambda = self.at(0, 0);
        let ok = (0..self.n).all(|i| {
            (0..self.n).all(|j| self.at(i, j) == if i == j { lambda } else { 0 })
        });
        ok.then_some(lambda)
    }

    fn check_compatible(&self, other: &Matrix) -> Result<(), AlgebraError> {
        if self.field != other.field {
            return Err(AlgebraError::FieldMismatch);
        }
        if self.n != other.n {
            return Err(AlgebraError::Shape { expected: self.n, got: other.n });
        }
        Ok(())
    }

    pub fn try_mul(&self, other: &Matrix) -> Result<Matrix, AlgebraError> {
        self.check_compatible(other)?;
        Ok(self.mul(other))
    }

    /// Product; both operands must share field and dimension.
    pub fn mul(&self, other: &Matrix) -> Matrix {
        debug_assert!(self.n == other.n);
        let n = self.n;
        let f = &self.field;
        let mut entries = vec![0 as Code; n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.entries[i * n + k];
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    let b = other.entries[k * n + j];
                    if b != 0 {
                        let e = &mut entries[i * n + j];
                        *e = f.add(*e, f.mul(a, b));
                    }
                }
            }
        }
        Matrix { field: f.clone(), n, entries }
    }

    pub fn scale(&self, lambda: Code) -> Matrix {
        let f = &self.field;
        Matrix {
            field: f.clone(),
            n: self.n,
            entries: self.entries.iter().map(|&e| f.mul(lambda, e)).collect(),
        }
    }

    pub fn transpose(&self) -> Matrix {
        let n = self.n;
        let mut entries = vec![0; n * n];
        for i in 0..n {
            for j in 0..n {
                entries[j * n + i] = self.entries[i * n + j];
            }
        }
        Matrix { field: self.field.clone(), n, entries }
    }

    /// Determinant by Gaussian elimination.
    pub fn det(&self) -> FieldElement {
        let f = &self.field;
        let n = self.n;
        let mut m = self.entries.clone();
        let mut det = f.one();
        for col in 0..n {
            let Some(pivot) = (col..n).find(|&r| m[r * n + col] != 0) else {
                return f.element(0);
            };
            if pivot != col {
                for j in 0..n {
                    m.swap(pivot * n + j, col * n + j);
                }
                det = f.neg(det);
            }
            let pv = m[col * n + col];
            det = f.mul(det, pv);
            let pinv = f.inv(pv).expect("nonzero pivot");
            for r in col + 1..n {
                let factor = f.mul(m[r * n + col], pinv);
                if factor == 0 {
                    continue;
                }
                for j in col..n {
                    let v = f.mul(factor, m[col * n + j]);
                    m[r * n + j] = f.sub(m[r * n + j], v);
                }
            }
        }
        f.element(det)
    }

    /// Inverse by Gauss-Jordan elimination.
    pub fn inverse(&self) -> Result<Matrix, AlgebraError> {
        let f = &self.field;
        let n = self.n;
        let mut a = self.entries.clone();
        let mut inv = Matrix::identity(f, n).entries;
        for col in 0..n {
            let pivot = (col..n)
                .find(|&r| a[r * n + col] != 0)
                .ok_or(AlgebraError::Singular)?;
            if pivot != col {
                for j in 0..n {
                    a.swap(pivot * n + j, col * n + j);
                    inv.swap(pivot * n + j, col * n + j);
                }
            }
            let pinv = f.inv(a[col * n + col])?;
            for j in 0..n {
                a[col * n + j] = f.mul(a[col * n + j], pinv);
                inv[col * n + j] = f.mul(inv[col * n + j], pinv);
            }
            for r in 0..n {
                if r == col {
                    continue;
                }
                let factor = a[r * n + col];
                if factor == 0 {
                    continue;
                }
                for j in 0..n {
                    a[r * n + j] = f.sub(a[r * n + j], f.mul(factor, a[col * n + j]));
                    inv[r * n + j] = f.sub(inv[r * n + j], f.mul(factor, inv[col * n + j]));
                }
            }
        }
        Ok(Matrix { field: f.clone(), n, entries: inv })
    }

    /// Transpose-inverse `y -> (y^-1)^T`.
    pub fn iota_sl(&self) -> Result<Matrix, AlgebraError> {
        Ok(self.inverse()?.transpose())
    }

    /// Form-twisted transpose-inverse `y -> A (y^-1)^T A`.
    pub fn iota_su(&self, form: &Matrix) -> Result<Matrix, AlgebraError> {
        self.check_compatible(form)?;
        Ok(form.mul(&self.iota_sl()?).mul(form))
    }

    /// Raises every entry to the power `q`.
    pub fn entrywise_power(&self, q: u64) -> Matrix {
        let f = &self.field;
        Matrix {
            field: f.clone(),
            n: self.n,
            entries: self.entries.iter().map(|&e| f.pow(e, q)).collect(),
        }
    }

    /// Canonical text form `n;q;e11,e12,..,enn`, each entry `c0:c1:..`.
    pub fn to_text(&self) -> String {
        let entries: Vec<String> = self.entries.iter().map(|&e| self.field.format(e)).collect();
        format!("{};{};{}", self.n, self.field.order(), entries.join(","))
    }

    pub fn parse_text(s: &str) -> Result<Matrix, AlgebraError> {
        let bad = || AlgebraError::Parse(format!("malformed matrix text {s:?}"));
        let mut parts = s.splitn(3, ';');
        let n: usize = parts.next().and_then(|t| t.parse().ok()).ok_or_else(bad)?;
        let q: u64 = parts.next().and_then(|t| t.parse().ok()).ok_or_else(bad)?;
        let body = parts.next().ok_or_else(bad)?;
        let field = Field::of_order(q)?;
        let entries = body
            .split(',')
            .map(|e| field.parse(e))
            .collect::<Result<Vec<_>, _>>()?;
        let m = Matrix::from_codes(&field, n, entries)?;
        if m.to_text() != s {
            return Err(bad());
        }
        Ok(m)
    }
}
