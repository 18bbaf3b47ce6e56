//! Dense matrices over the rationals: exact solve, PSD test with witness,
//! and rank by Gaussian elimination.

use super::Rat;
use num::{One, Signed, Zero};
use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LinAlgError {
    Singular,
    NotSymmetric,
    DimensionMismatch,
}

impl fmt::Display for LinAlgError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LinAlgError::Singular => write!(f, "matrix is singular"),
            LinAlgError::NotSymmetric => write!(f, "matrix is not symmetric"),
            LinAlgError::DimensionMismatch => write!(f, "dimension mismatch"),
        }
    }
}

impl std::error::Error for LinAlgError {}

/// Outcome of the exact PSD test. `NotPsd` carries a rational witness `x`
/// with `x^T M x < 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PsdVerdict {
    Psd,
    NotPsd(Vec<Rat>),
}

impl PsdVerdict {
    pub fn is_psd(&self) -> bool {
        matches!(self, PsdVerdict::Psd)
    }
}

impl RatMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RatMatrix {
            rows,
            cols,
            data: vec![Rat::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rat::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c));
        RatMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rat) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        RatMatrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rat {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rat) {
        self.data[i * self.cols + j] = v;
    }

    pub fn is_symmetric(&self) -> bool {
        if self.rows != self.cols {
            return false;
        }
        for i in 0..self.rows {
            for j in (i + 1)..self.cols {
                if self.get(i, j) != self.get(j, i) {
                    return false;
                }
            }
        }
        true
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn matmul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows);
        Self::from_fn(self.rows, other.cols, |i, j| {
            let mut acc = Rat::zero();
            for k in 0..self.cols {
                acc += self.get(i, k) * other.get(k, j);
            }
            acc
        })
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Self::from_fn(self.rows, self.cols, |i, j| self.get(i, j) + other.get(i, j))
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Self::from_fn(self.rows, self.cols, |i, j| self.get(i, j) - other.get(i, j))
    }

    pub fn scale(&self, c: &Rat) -> Self {
        Self::from_fn(self.rows, self.cols, |i, j| self.get(i, j) * c)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|v| v.is_zero())
    }

    /// Outer product `v v^T`.
    pub fn outer(v: &[Rat]) -> Self {
        Self::from_fn(v.len(), v.len(), |i, j| &v[i] * &v[j])
    }

    pub fn mul_vec(&self, x: &[Rat]) -> Vec<Rat> {
        assert_eq!(self.cols, x.len());
        (0..self.rows)
            .map(|i| {
                let mut acc = Rat::zero();
                for j in 0..self.cols {
                    acc += self.get(i, j) * &x[j];
                }
                acc
            })
            .collect()
    }

    /// Quadratic form `x^T M x`.
    pub fn quad_form(&self, x: &[Rat]) -> Rat {
        let mx = self.mul_vec(x);
        x.iter().zip(mx.iter()).map(|(a, b)| a * b).sum()
    }

    /// Exact solution of `A x = b` by Gaussian elimination.
    pub fn solve_linear(&self, b: &[Rat]) -> Result<Vec<Rat>, LinAlgError> {
        if self.rows != self.cols {
            return Err(LinAlgError::DimensionMismatch);
        }
        let n = self.rows;
        if b.len() != n {
            return Err(LinAlgError::DimensionMismatch);
        }
        let mut a = self.data.clone();
        let mut rhs = b.to_vec();
        let idx = |i: usize, j: usize| i * n + j;
        for col in 0..n {
            let pivot_row = (col..n)
                .find(|&r| !a[idx(r, col)].is_zero())
                .ok_or(LinAlgError::Singular)?;
            if pivot_row != col {
                for j in 0..n {
                    a.swap(idx(col, j), idx(pivot_row, j));
                }
                rhs.swap(col, pivot_row);
            }
            let p = a[idx(col, col)].clone();
            for r in (col + 1)..n {
                if a[idx(r, col)].is_zero() {
                    continue;
                }
                let factor = &a[idx(r, col)] / &p;
                for j in col..n {
                    let v = &factor * &a[idx(col, j)];
                    a[idx(r, j)] -= v;
                }
                let v = &factor * &rhs[col];
                rhs[r] -= v;
            }
        }
        // back substitution
        let mut x = vec![Rat::zero(); n];
        for i in (0..n).rev() {
            let mut acc = rhs[i].clone();
            for j in (i + 1)..n {
                acc -= &a[idx(i, j)] * &x[j];
            }
            x[i] = acc / &a[idx(i, i)];
        }
        Ok(x)
    }

    /// Exact rank over the rationals.
    pub fn rank(&self) -> usize {
        let mut a = self.data.clone();
        let (rows, cols) = (self.rows, self.cols);
        let idx = |i: usize, j: usize| i * cols + j;
        let mut rank = 0;
        let mut row = 0;
        for col in 0..cols {
            if row == rows {
                break;
            }
            let Some(pr) = (row..rows).find(|&r| !a[idx(r, col)].is_zero()) else {
                continue;
            };
            if pr != row {
                for j in 0..cols {
                    a.swap(idx(row, j), idx(pr, j));
                }
            }
            let p = a[idx(row, col)].clone();
            for r in (row + 1)..rows {
                if a[idx(r, col)].is_zero() {
                    continue;
                }
                let factor = &a[idx(r, col)] / &p;
                for j in col..cols {
                    let v = &factor * &a[idx(row, j)];
                    a[idx(r, j)] -= v;
                }
            }
            rank += 1;
            row += 1;
        }
        rank
    }

    /// Nullity `n - rank` for a square matrix.
    pub fn nullity(&self) -> usize {
        assert_eq!(self.rows, self.cols);
        self.rows - self.rank()
    }

    /// Exact PSD test by symmetric rational elimination.
    ///
    /// At each step a zero pivot requires its whole remaining row/column to
    /// vanish; otherwise, or on a negative pivot, a witness vector with a
    /// strictly negative quadratic form is produced.
    pub fn psd_check(&self) -> Result<PsdVerdict, LinAlgError> {
        if !self.is_symmetric() {
            return Err(LinAlgError::NotSymmetric);
        }
        let n = self.rows;
        let mut a = self.data.clone();
        let idx = |i: usize, j: usize| i * n + j;
        // elimination steps recorded as (pivot column k, multipliers for rows > k)
        let mut steps: Vec<(usize, Vec<(usize, Rat)>)> = Vec::new();

        let finish = |steps: &[(usize, Vec<(usize, Rat)>)], mut x: Vec<Rat>| -> Vec<Rat> {
            // Witness for reduced matrix E A E^T is mapped back as E^T x.
            for (k, mults) in steps.iter().rev() {
                let mut acc = x[*k].clone();
                for (i, m) in mults {
                    acc += m * &x[*i];
                }
                x[*k] = acc;
            }
            x
        };

        for k in 0..n {
            let pivot = a[idx(k, k)].clone();
            if pivot.is_zero() {
                // pivot zero: row must be entirely zero, else indefinite
                if let Some(j) = ((k + 1)..n).find(|&j| !a[idx(k, j)].is_zero()) {
                    let c = a[idx(k, j)].clone();
                    let mut x = vec![Rat::zero(); n];
                    // 2x2 block [[0, c],[c, a_jj]] is indefinite:
                    // x_j = 1, x_k = -(a_jj + 1)/(2c) gives value -1
                    x[j] = Rat::one();
                    x[k] = -(a[idx(j, j)].clone() + Rat::one()) / (Rat::from_integer(2.into()) * c);
                    let x = finish(&steps, x);
                    debug_assert!(self.quad_form(&x).is_negative());
                    return Ok(PsdVerdict::NotPsd(x));
                }
                continue;
            }
            if pivot.is_negative() {
                let mut x = vec![Rat::zero(); n];
                x[k] = Rat::one();
                let x = finish(&steps, x);
                debug_assert!(self.quad_form(&x).is_negative());
                return Ok(PsdVerdict::NotPsd(x));
            }
            let mut mults = Vec::new();
            for i in (k + 1)..n {
                if a[idx(i, k)].is_zero() {
                    continue;
                }
                let factor = &a[idx(i, k)] / &pivot;
                // one-sided row elimination; the trailing block stays
                // symmetric because a[k][j] = a[j][k]
                for j in k..n {
                    let v = &factor * &a[idx(k, j)];
                    a[idx(i, j)] -= v;
                }
                mults.push((i, -factor));
            }
            steps.push((k, mults));
        }
        Ok(PsdVerdict::Psd)
    }

    /// Positive definiteness via leading principal minors.
    pub fn is_positive_definite(&self) -> bool {
        if !self.is_symmetric() {
            return false;
        }
        // run the same elimination; PD iff every pivot is positive
        let n = self.rows;
        let mut a = self.data.clone();
        let idx = |i: usize, j: usize| i * n + j;
        for k in 0..n {
            let pivot = a[idx(k, k)].clone();
            if !pivot.is_positive() {
                return false;
            }
            for i in (k + 1)..n {
                if a[idx(i, k)].is_zero() {
                    continue;
                }
                let factor = &a[idx(i, k)] / &pivot;
                for j in k..n {
                    let v = &factor * &a[idx(k, j)];
                    a[idx(i, j)] -= v;
                }
            }
        }
        true
    }

    /// Frobenius inner product `tr(A^T B)`.
    pub fn frobenius(&self, other: &Self) -> Rat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        self.data
            .iter()
            .zip(other.data.iter())
            .map(|(a, b)| a * b)
            .sum()
    }
}

impl fmt::Display for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}
