//! Dense exact linear algebra over a [`FieldDesc`].
//!
//! Matrices are immutable row-major values; every routine takes the field
//! explicitly and returns fresh matrices. Elimination pivots on the first
//! nonzero entry of each column.

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::fields::{Element, FieldDesc};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("matrix is {rows}x{cols}, not square")]
    NotSquare { rows: usize, cols: usize },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    entries: Vec<Element>,
}

impl Matrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Element>) -> Result<Self, LinalgError> {
        if entries.len() != rows * cols {
            return Err(LinalgError::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        Ok(Matrix { rows, cols, entries })
    }

    /// Builds from rows; `cols` is needed so that a matrix with no rows keeps its width.
    pub fn from_rows(cols: usize, rows: Vec<Vec<Element>>) -> Result<Self, LinalgError> {
        if let Some(bad) = rows.iter().find(|r| r.len() != cols) {
            return Err(LinalgError::DimensionMismatch(format!(
                "row of length {} in a matrix with {cols} columns",
                bad.len()
            )));
        }
        let n = rows.len();
        Ok(Matrix { rows: n, cols, entries: rows.into_iter().flatten().collect() })
    }

    pub fn zeros(field: &FieldDesc, rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, entries: vec![field.zero(); rows * cols] }
    }

    pub fn identity(field: &FieldDesc, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.entries[i * n + i] = field.one();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[Element] {
        &self.entries
    }

    pub fn get(&self, row: usize, col: usize) -> &Element {
        &self.entries[row * self.cols + col]
    }

    pub fn row(&self, row: usize) -> &[Element] {
        &self.entries[row * self.cols..(row + 1) * self.cols]
    }

    pub fn column(&self, col: usize) -> Vec<Element> {
        (0..self.rows).map(|r| self.get(r, col).clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<Element>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    /// Returns a copy with the entry at `(row, col)` replaced.
    pub fn with_entry(&self, row: usize, col: usize, value: Element) -> Self {
        let mut out = self.clone();
        out.entries[row * self.cols + col] = value;
        out
    }

    pub fn select_columns(&self, cols: &[usize]) -> Self {
        let entries = (0..self.rows)
            .flat_map(|r| cols.iter().map(move |&c| self.get(r, c).clone()))
            .collect();
        Matrix { rows: self.rows, cols: cols.len(), entries }
    }

    /// Horizontal concatenation `[self | other]`.
    pub fn hconcat(&self, other: &Matrix) -> Result<Self, LinalgError> {
        if self.rows != other.rows {
            return Err(LinalgError::DimensionMismatch("row counts differ".into()));
        }
        let rows = (0..self.rows)
            .map(|r| self.row(r).iter().chain(other.row(r)).cloned().collect())
            .collect();
        Self::from_rows(self.cols + other.cols, rows)
    }

    pub fn transpose(&self) -> Self {
        let entries = (0..self.cols)
            .flat_map(|c| (0..self.rows).map(move |r| self.get(r, c).clone()))
            .collect();
        Matrix { rows: self.cols, cols: self.rows, entries }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Element::is_zero)
    }
}

impl Serialize for Matrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.to_rows().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Matrix {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let rows = Vec::<Vec<Element>>::deserialize(deserializer)?;
        let cols = rows.first().map_or(0, Vec::len);
        Matrix::from_rows(cols, rows).map_err(serde::de::Error::custom)
    }
}

pub fn mul(field: &FieldDesc, a: &Matrix, b: &Matrix) -> Result<Matrix, LinalgError> {
    if a.cols != b.rows {
        return Err(LinalgError::DimensionMismatch(format!(
            "cannot multiply {}x{} by {}x{}",
            a.rows, a.cols, b.rows, b.cols
        )));
    }
    let mut entries = Vec::with_capacity(a.rows * b.cols);
    for i in 0..a.rows {
        for j in 0..b.cols {
            let mut acc = field.zero();
            for t in 0..a.cols {
                acc = field.add(&acc, &field.mul(a.get(i, t), b.get(t, j)));
            }
            entries.push(acc);
        }
    }
    Ok(Matrix { rows: a.rows, cols: b.cols, entries })
}

pub fn determinant(field: &FieldDesc, m: &Matrix) -> Result<Element, LinalgError> {
    if m.rows != m.cols {
        return Err(LinalgError::NotSquare { rows: m.rows, cols: m.cols });
    }
    let n = m.rows;
    let mut a = m.to_rows();
    let mut det = field.one();
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| !a[r][col].is_zero()) else {
            return Ok(field.zero());
        };
        if pivot != col {
            a.swap(pivot, col);
            det = field.neg(&det);
        }
        det = field.mul(&det, &a[col][col]);
        let inv = field.inv(&a[col][col]).expect("pivot is nonzero");
        for r in col + 1..n {
            if a[r][col].is_zero() {
                continue;
            }
            let factor = field.mul(&a[r][col], &inv);
            for c in col..n {
                let t = field.mul(&factor, &a[col][c]);
                a[r][c] = field.sub(&a[r][c], &t);
            }
        }
    }
    Ok(det)
}

/// Reduced row echelon form and the pivot column of each nonzero row.
fn rref(field: &FieldDesc, m: &Matrix) -> (Vec<Vec<Element>>, Vec<usize>) {
    let mut a = m.to_rows();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..m.cols {
        if row == m.rows {
            break;
        }
        let Some(pivot) = (row..m.rows).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(pivot, row);
        let inv = field.inv(&a[row][col]).expect("pivot is nonzero");
        for c in col..m.cols {
            a[row][c] = field.mul(&a[row][c], &inv);
        }
        for r in 0..m.rows {
            if r == row || a[r][col].is_zero() {
                continue;
            }
            let factor = a[r][col].clone();
            for c in col..m.cols {
                let t = field.mul(&factor, &a[row][c]);
                a[r][c] = field.sub(&a[r][c], &t);
            }
        }
        pivots.push(col);
        row += 1;
    }
    a.truncate(pivots.len());
    (a, pivots)
}

pub fn rank(field: &FieldDesc, m: &Matrix) -> usize {
    rref(field, m).1.len()
}

/// A `(cols - rank) × cols` matrix whose rows form a basis of `{v : M v^T = 0}`.
pub fn kernel_basis(field: &FieldDesc, m: &Matrix) -> Matrix {
    let (reduced, pivots) = rref(field, m);
    let free: Vec<usize> = (0..m.cols).filter(|c| !pivots.contains(c)).collect();
    let rows = free
        .iter()
        .map(|&f| {
            let mut v = vec![field.zero(); m.cols];
            v[f] = field.one();
            for (i, &pc) in pivots.iter().enumerate() {
                v[pc] = field.neg(&reduced[i][f]);
            }
            v
        })
        .collect();
    Matrix::from_rows(m.cols, rows).expect("kernel rows have the right width")
}

/// One solution `x` of `A x = b`, or `None` if the system is inconsistent.
pub fn solve(field: &FieldDesc, a: &Matrix, b: &[Element]) -> Result<Option<Vec<Element>>, LinalgError> {
    if b.len() != a.rows {
        return Err(LinalgError::DimensionMismatch("right-hand side length".into()));
    }
    let rhs = Matrix::from_rows(1, b.iter().map(|e| vec![e.clone()]).collect())?;
    let augmented = a.hconcat(&rhs)?;
    let (reduced, pivots) = rref(field, &augmented);
    if pivots.last() == Some(&a.cols) {
        return Ok(None);
    }
    let mut x = vec![field.zero(); a.cols];
    for (i, &pc) in pivots.iter().enumerate() {
        x[pc] = reduced[i][a.cols].clone();
    }
    Ok(Some(x))
}
