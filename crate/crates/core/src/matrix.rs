//! Dense matrices of polynomials. Columns are the images of basis vectors.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::groebner::vector::{from_polys, to_polys, TermOrder, Vector};
use crate::ring::{Polynomial, Ring};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    ring: Arc<Ring>,
    rows: usize,
    cols: usize,
    data: Vec<Polynomial>,
}

impl Matrix {
    pub fn zeros(ring: &Arc<Ring>, rows: usize, cols: usize) -> Self {
        Matrix { ring: ring.clone(), rows, cols, data: vec![Polynomial::zero(ring); rows * cols] }
    }

    pub fn identity(ring: &Arc<Ring>, n: usize) -> Self {
        let mut m = Self::zeros(ring, n, n);
        for i in 0..n {
            m.set(i, i, Polynomial::one(ring));
        }
        m
    }

    /// Builds a matrix from rows; every row must have `cols` entries.
    pub fn from_rows(ring: &Arc<Ring>, cols: usize, rows: Vec<Vec<Polynomial>>) -> Result<Self> {
        let nrows = rows.len();
        let mut data = Vec::with_capacity(nrows * cols);
        for row in rows {
            if row.len() != cols {
                return Err(Error::domain("matrix", format!("row of length {} where {cols} expected", row.len())));
            }
            for p in &row {
                if p.ring() != ring {
                    return Err(Error::Context(format!("matrix entry from {}", p.ring())));
                }
            }
            data.extend(row);
        }
        Ok(Matrix { ring: ring.clone(), rows: nrows, cols, data })
    }

    pub fn from_columns(ring: &Arc<Ring>, rows: usize, columns: Vec<Vec<Polynomial>>) -> Result<Self> {
        let cols = columns.len();
        let mut m = Self::zeros(ring, rows, cols);
        for (j, col) in columns.into_iter().enumerate() {
            if col.len() != rows {
                return Err(Error::domain("matrix", format!("column of length {} where {rows} expected", col.len())));
            }
            for (i, p) in col.into_iter().enumerate() {
                m.set(i, j, p);
            }
        }
        Ok(m)
    }

    pub(crate) fn from_vectors(ring: &Arc<Ring>, rows: usize, columns: &[Vector]) -> Self {
        let cols = columns.iter().map(|v| to_polys(ring, rows, v)).collect();
        Self::from_columns(ring, rows, cols).expect("vector ranks match")
    }

    pub(crate) fn column_vectors(&self, ord: &TermOrder) -> Vec<Vector> {
        (0..self.cols).map(|j| from_polys(ord, (0..self.rows).map(|i| self.get(i, j)))).collect()
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Polynomial {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, p: Polynomial) {
        self.data[i * self.cols + j] = p;
    }

    pub fn column(&self, j: usize) -> Vec<Polynomial> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn row(&self, i: usize) -> Vec<Polynomial> {
        self.data[i * self.cols..(i + 1) * self.cols].to_vec()
    }

    pub fn entries(&self) -> impl Iterator<Item = &Polynomial> {
        self.data.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Polynomial::is_zero)
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::domain(
                "matrix",
                format!("cannot multiply {}x{} by {}x{}", self.rows, self.cols, other.rows, other.cols),
            ));
        }
        if self.ring != other.ring {
            return Err(Error::Context(format!("{} vs {}", self.ring, other.ring)));
        }
        let mut out = Matrix::zeros(&self.ring, self.rows, other.cols);
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
                    let s = out.get(i, j) + &(a * b);
                    out.set(i, j, s);
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::domain("matrix", "shape mismatch in sum"));
        }
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a.checked_add(b)).collect::<Result<_>>()?;
        Ok(Matrix { data, ..self.clone() })
    }

    pub fn scale(&self, p: &Polynomial) -> Matrix {
        Matrix { data: self.data.iter().map(|a| a * p).collect(), ..self.clone() }
    }

    pub fn neg(&self) -> Matrix {
        Matrix { data: self.data.iter().map(|a| -a).collect(), ..self.clone() }
    }

    pub fn transpose(&self) -> Matrix {
        let mut out = Matrix::zeros(&self.ring, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j).clone());
            }
        }
        out
    }

    /// `self ⊗ I_n`, with index `(a, b) ↦ a·n + b`.
    pub fn kron_identity(&self, n: usize) -> Matrix {
        let mut out = Matrix::zeros(&self.ring, self.rows * n, self.cols * n);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let e = self.get(i, j);
                if e.is_zero() {
                    continue;
                }
                for b in 0..n {
                    out.set(i * n + b, j * n + b, e.clone());
                }
            }
        }
        out
    }

    /// Block-diagonal copies `diag(self, …, self)`.
    pub fn repeat_diagonal(&self, copies: usize) -> Matrix {
        let blocks = vec![self.clone(); copies];
        Matrix::block_diag(&self.ring, &blocks)
    }

    pub fn block_diag(ring: &Arc<Ring>, blocks: &[Matrix]) -> Matrix {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = Matrix::zeros(ring, rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            out.paste(r0, c0, b);
            r0 += b.rows;
            c0 += b.cols;
        }
        out
    }

    /// Overwrites the block starting at `(r0, c0)`.
    pub fn paste(&mut self, r0: usize, c0: usize, b: &Matrix) {
        for i in 0..b.rows {
            for j in 0..b.cols {
                self.set(r0 + i, c0 + j, b.get(i, j).clone());
            }
        }
    }

    /// `[self | other]`.
    pub fn hstack(&self, other: &Matrix) -> Result<Matrix> {
        if self.rows != other.rows {
            return Err(Error::domain("matrix", "row counts differ in horizontal concatenation"));
        }
        let mut out = Matrix::zeros(&self.ring, self.rows, self.cols + other.cols);
        out.paste(0, 0, self);
        out.paste(0, self.cols, other);
        Ok(out)
    }

    pub fn select_columns(&self, keep: &[usize]) -> Matrix {
        let mut out = Matrix::zeros(&self.ring, self.rows, keep.len());
        for (jj, &j) in keep.iter().enumerate() {
            for i in 0..self.rows {
                out.set(i, jj, self.get(i, j).clone());
            }
        }
        out
    }

    pub fn select_rows(&self, keep: &[usize]) -> Matrix {
        let mut out = Matrix::zeros(&self.ring, keep.len(), self.cols);
        for (ii, &i) in keep.iter().enumerate() {
            for j in 0..self.cols {
                out.set(ii, j, self.get(i, j).clone());
            }
        }
        out
    }

    pub fn remove_row(&self, r: usize) -> Matrix {
        let keep: Vec<usize> = (0..self.rows).filter(|&i| i != r).collect();
        self.select_rows(&keep)
    }

    pub fn remove_column(&self, c: usize) -> Matrix {
        let keep: Vec<usize> = (0..self.cols).filter(|&j| j != c).collect();
        self.select_columns(&keep)
    }

    /// `row[target] -= a · row[source]`
    pub(crate) fn row_axpy(&mut self, target: usize, a: &Polynomial, source: usize) {
        for j in 0..self.cols {
            let s = self.get(source, j);
            if s.is_zero() {
                continue;
            }
            let v = self.get(target, j) - &(a * s);
            self.set(target, j, v);
        }
    }

    /// `col[target] -= a · col[source]`
    pub(crate) fn col_axpy(&mut self, target: usize, a: &Polynomial, source: usize) {
        for i in 0..self.rows {
            let s = self.get(i, source);
            if s.is_zero() {
                continue;
            }
            let v = self.get(i, target) - &(a * s);
            self.set(i, target, v);
        }
    }

    /// Position of an entry that is a nonzero constant.
    pub(crate) fn find_unit(&self) -> Option<(usize, usize)> {
        (0..self.rows)
            .flat_map(|i| (0..self.cols).map(move |j| (i, j)))
            .find(|&(i, j)| {
                let e = self.get(i, j);
                !e.is_zero() && e.is_constant()
            })
    }

    pub fn is_homogeneous(&self) -> bool {
        self.data.iter().all(Polynomial::is_homogeneous)
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn product_and_transpose() {
        let r = Ring::default_prime(&["x", "y"]);
        let p = |s: &str| r.parse_poly(s).unwrap();
        let a = Matrix::from_rows(&r, 2, vec![vec![p("x"), p("y")]]).unwrap();
        let b = Matrix::from_rows(&r, 1, vec![vec![p("-y")], vec![p("x")]]).unwrap();
        assert!(a.mul(&b).unwrap().is_zero());
        assert_eq!(a.transpose().rows(), 2);
        assert!(b.mul(&a).is_ok());
        assert!(a.mul(&a).is_err());
    }

    #[test]
    fn kronecker_with_identity() {
        let r = Ring::default_prime(&["x"]);
        let a = Matrix::from_rows(&r, 1, vec![vec![r.parse_poly("x").unwrap()]]).unwrap();
        let k = a.kron_identity(3);
        assert_eq!(k, Matrix::identity(&r, 3).scale(&r.parse_poly("x").unwrap()));
    }
}
