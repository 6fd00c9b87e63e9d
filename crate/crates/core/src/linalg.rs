//! Dense vectors and matrices over exact rationals.
//!
//! Elimination uses a fixed leftmost-pivot order (first column with a nonzero
//! entry, first such row), so solutions, ranks, and kernel witnesses are
//! deterministic across runs.

use std::fmt;

use crate::error::Error;
use crate::scalar::Scalar;

/// A fixed-length coordinate vector.
#[derive(Clone, PartialEq, Eq)]
pub struct Vector {
    entries: Vec<Scalar>,
}

impl Vector {
    pub fn zero(len: usize) -> Self {
        Vector {
            entries: vec![Scalar::zero(); len],
        }
    }

    /// The `i`-th standard basis vector of an `len`-dimensional space.
    pub fn basis(len: usize, i: usize) -> Self {
        assert!(i < len, "basis index out of range");
        let mut v = Vector::zero(len);
        v.entries[i] = Scalar::one();
        v
    }

    pub fn from_entries(entries: Vec<Scalar>) -> Self {
        Vector { entries }
    }

    pub fn from_ints(entries: &[i64]) -> Self {
        Vector {
            entries: entries.iter().map(|&n| Scalar::from_int(n)).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, i: usize) -> &Scalar {
        &self.entries[i]
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.entries
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Scalar> {
        self.entries.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Scalar::is_zero)
    }

    pub fn add(&self, other: &Vector) -> Vector {
        assert_eq!(self.len(), other.len(), "vector length mismatch");
        Vector {
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Vector) -> Vector {
        assert_eq!(self.len(), other.len(), "vector length mismatch");
        Vector {
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn neg(&self) -> Vector {
        Vector {
            entries: self.entries.iter().map(|a| -a).collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> Vector {
        Vector {
            entries: self.entries.iter().map(|a| a * c).collect(),
        }
    }

    /// `self += c * other`, skipping the work when `c` is zero.
    pub fn add_scaled_assign(&mut self, c: &Scalar, other: &Vector) {
        assert_eq!(self.len(), other.len(), "vector length mismatch");
        if c.is_zero() {
            return;
        }
        for (a, b) in self.entries.iter_mut().zip(&other.entries) {
            *a += &(b * c);
        }
    }

    /// The standard pairing `sum_i self_i other_i`. This is how dual-space
    /// coordinates pair with vector coordinates throughout the crate.
    pub fn dot(&self, other: &Vector) -> Scalar {
        assert_eq!(self.len(), other.len(), "vector length mismatch");
        let mut acc = Scalar::zero();
        for (a, b) in self.entries.iter().zip(&other.entries) {
            if !a.is_zero() && !b.is_zero() {
                acc += &(a * b);
            }
        }
        acc
    }
}

impl fmt::Debug for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

/// A dense rectangular matrix, row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Scalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zero(n, n);
        for i in 0..n {
            m.set(i, i, Scalar::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Result<Self, Error> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        for row in &rows {
            if row.len() != c {
                return Err(Error::DimensionMismatch {
                    expected: c,
                    found: row.len(),
                });
            }
        }
        Ok(Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&n| Scalar::from_int(n)).collect())
                .collect(),
        )
        .expect("integer rows are rectangular")
    }

    /// Builds a matrix whose `k`-th column is `cols[k]`.
    pub fn from_cols(rows: usize, cols: &[Vector]) -> Result<Self, Error> {
        let mut m = Matrix::zero(rows, cols.len());
        for (j, col) in cols.iter().enumerate() {
            if col.len() != rows {
                return Err(Error::DimensionMismatch {
                    expected: rows,
                    found: col.len(),
                });
            }
            for i in 0..rows {
                m.set(i, j, col.get(i).clone());
            }
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: Scalar) {
        self.data[r * self.cols + c] = value;
    }

    pub fn col(&self, j: usize) -> Vector {
        Vector::from_entries((0..self.rows).map(|i| self.get(i, j).clone()).collect())
    }

    pub fn row(&self, i: usize) -> Vector {
        Vector::from_entries((0..self.cols).map(|j| self.get(i, j).clone()).collect())
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!(
            (self.rows, self.cols),
            (other.rows, other.cols),
            "matrix shape mismatch"
        );
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!(
            (self.rows, self.cols),
            (other.rows, other.cols),
            "matrix shape mismatch"
        );
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn neg(&self) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| -a).collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a * c).collect(),
        }
    }

    /// `self += c * other`, skipping the work when `c` is zero.
    pub fn add_scaled_assign(&mut self, c: &Scalar, other: &Matrix) {
        assert_eq!(
            (self.rows, self.cols),
            (other.rows, other.cols),
            "matrix shape mismatch"
        );
        if c.is_zero() {
            return;
        }
        for (a, b) in self.data.iter_mut().zip(&other.data) {
            *a += &(b * c);
        }
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matrix product shape mismatch");
        let mut out = Matrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let cur = out.get(i, j) + &(a * b);
                    out.set(i, j, cur);
                }
            }
        }
        out
    }

    /// `self * other - other * self`.
    pub fn commutator(&self, other: &Matrix) -> Matrix {
        self.mul(other).sub(&other.mul(self))
    }

    pub fn apply(&self, v: &Vector) -> Vector {
        assert_eq!(self.cols, v.len(), "matrix-vector shape mismatch");
        let mut out = Vector::zero(self.rows);
        for (j, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            out.add_scaled_assign(c, &self.col(j));
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn is_antisymmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| (0..=i).all(|j| *self.get(i, j) == -self.get(j, i)))
    }

    /// Exact rank over the rationals.
    pub fn rank(&self) -> usize {
        let mut work = self.to_nested();
        echelonize(&mut work, self.cols).len()
    }

    /// Solves `self * x = b` exactly.
    ///
    /// Returns `Ok(None)` when the system is inconsistent. When the solution
    /// space has positive dimension, the free variables (non-pivot columns in
    /// leftmost order) are set to zero, so the answer is deterministic.
    pub fn solve(&self, b: &Vector) -> Result<Option<Vector>, Error> {
        if b.len() != self.rows {
            return Err(Error::DimensionMismatch {
                expected: self.rows,
                found: b.len(),
            });
        }
        let mut work = self.to_nested();
        for (row, rhs) in work.iter_mut().zip(b.iter()) {
            row.push(rhs.clone());
        }
        let pivots = echelonize(&mut work, self.cols);
        // A pivot in the appended column marks an inconsistent row.
        for row in &work {
            if row[..self.cols].iter().all(Scalar::is_zero) && !row[self.cols].is_zero() {
                return Ok(None);
            }
        }
        let mut x = Vector::zero(self.cols);
        for (r, &pc) in pivots.iter().enumerate() {
            x.entries[pc] = work[r][self.cols].clone();
        }
        Ok(Some(x))
    }

    /// The exact inverse. Fails with [`Error::Singular`] when the determinant
    /// vanishes.
    pub fn invert(&self) -> Result<Matrix, Error> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        let mut work = self.to_nested();
        for (i, row) in work.iter_mut().enumerate() {
            for j in 0..n {
                row.push(if i == j {
                    Scalar::one()
                } else {
                    Scalar::zero()
                });
            }
        }
        let pivots = echelonize(&mut work, n);
        if pivots.len() < n {
            return Err(Error::Singular);
        }
        let mut inv = Matrix::zero(n, n);
        for (r, &pc) in pivots.iter().enumerate() {
            for j in 0..n {
                inv.set(pc, j, work[r][n + j].clone());
            }
        }
        Ok(inv)
    }

    /// A nonzero vector in the kernel of `self`, or `None` when the columns
    /// are independent. The first free column (leftmost order) is set to one.
    pub fn kernel_vector(&self) -> Option<Vector> {
        let mut work = self.to_nested();
        let pivots = echelonize(&mut work, self.cols);
        if pivots.len() == self.cols {
            return None;
        }
        let free = (0..self.cols).find(|c| !pivots.contains(c))?;
        let mut v = Vector::zero(self.cols);
        v.entries[free] = Scalar::one();
        for (r, &pc) in pivots.iter().enumerate() {
            v.entries[pc] = -work[r][free].clone();
        }
        Some(v)
    }

    fn to_nested(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j).clone()).collect())
            .collect()
    }
}

/// Reduced row echelon form on the first `cols` columns of `work` (extra
/// columns ride along as right-hand sides). Pivoting is leftmost-column,
/// first-nonzero-row. Returns the pivot columns; row `r` of the result holds
/// the pivot of `pivots[r]`.
fn echelonize(work: &mut [Vec<Scalar>], cols: usize) -> Vec<usize> {
    let rows = work.len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(pivot_row) = (r..rows).find(|&i| !work[i][c].is_zero()) else {
            continue;
        };
        work.swap(r, pivot_row);
        let inv = work[r][c].recip().expect("pivot is nonzero");
        for e in work[r].iter_mut() {
            *e *= &inv;
        }
        let pivot = work[r].clone();
        for (i, row) in work.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let factor = row[c].clone();
            for (t, s) in row.iter_mut().zip(pivot.iter()) {
                *t -= &(s * &factor);
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    pivots
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[")?;
        for i in 0..self.rows {
            write!(f, "  [")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            writeln!(f, "]")?;
        }
        write!(f, "]")
    }
}
