use std::fmt;

use super::{Gf4, Gf4Vector};
use crate::error::{Error, Result};

/// Row-major matrix over GF(4); each row is a packed [`Gf4Vector`].
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Gf4Matrix {
    cols: usize,
    rows: Vec<Gf4Vector>,
}

impl Gf4Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Gf4Matrix {
            cols,
            rows: vec![Gf4Vector::zeros(cols); rows],
        }
    }

    pub fn identity(n: usize) -> Self {
        Gf4Matrix {
            cols: n,
            rows: (0..n).map(|i| Gf4Vector::unit(n, i)).collect(),
        }
    }

    pub fn from_rows(rows: Vec<Gf4Vector>) -> Result<Self> {
        let cols = rows.first().map_or(0, Gf4Vector::len);
        Gf4Matrix::from_rows_with_cols(rows, cols)
    }

    /// Like [`from_rows`](Self::from_rows) but well-defined for zero rows.
    pub fn from_rows_with_cols(rows: Vec<Gf4Vector>, cols: usize) -> Result<Self> {
        if let Some(r) = rows.iter().find(|r| r.len() != cols) {
            return Err(Error::LengthMismatch {
                left: cols,
                right: r.len(),
            });
        }
        Ok(Gf4Matrix { cols, rows })
    }

    /// Parses rows of symbol strings.
    pub fn parse_rows<S: AsRef<str>>(rows: &[S]) -> Result<Self> {
        let rows = rows
            .iter()
            .map(|r| Gf4Vector::parse(r.as_ref()))
            .collect::<Result<Vec<_>>>()?;
        Gf4Matrix::from_rows(rows)
    }

    #[inline]
    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    #[inline]
    pub fn ncols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Gf4 {
        self.rows[i].get(j)
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, x: Gf4) {
        self.rows[i].set(j, x);
    }

    pub fn row(&self, i: usize) -> &Gf4Vector {
        &self.rows[i]
    }

    pub fn rows(&self) -> &[Gf4Vector] {
        &self.rows
    }

    pub fn into_rows(self) -> Vec<Gf4Vector> {
        self.rows
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(Gf4Vector::is_zero)
    }

    pub fn transpose(&self) -> Gf4Matrix {
        let mut t = Gf4Matrix::zeros(self.cols, self.nrows());
        for (i, r) in self.rows.iter().enumerate() {
            for j in 0..self.cols {
                let x = r.get(j);
                if !x.is_zero() {
                    t.set(j, i, x);
                }
            }
        }
        t
    }

    /// Entry-wise conjugate of the transpose, `conj(A)^T`.
    pub fn conj_transpose(&self) -> Gf4Matrix {
        let mut t = self.transpose();
        for r in &mut t.rows {
            *r = r.conj();
        }
        t
    }

    /// Row vector times matrix.
    pub fn left_mul(&self, x: &Gf4Vector) -> Result<Gf4Vector> {
        if x.len() != self.nrows() {
            return Err(Error::LengthMismatch {
                left: x.len(),
                right: self.nrows(),
            });
        }
        let mut out = Gf4Vector::zeros(self.cols);
        for (i, r) in self.rows.iter().enumerate() {
            out.add_scaled(x.get(i), r);
        }
        Ok(out)
    }

    pub fn mul(&self, other: &Gf4Matrix) -> Result<Gf4Matrix> {
        if self.cols != other.nrows() {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.nrows(),
                self.cols,
                other.nrows(),
                other.cols
            )));
        }
        let rows = self
            .rows
            .iter()
            .map(|r| other.left_mul(r))
            .collect::<Result<Vec<_>>>()?;
        Gf4Matrix::from_rows_with_cols(rows, other.cols)
    }

    pub fn add(&self, other: &Gf4Matrix) -> Result<Gf4Matrix> {
        if self.nrows() != other.nrows() || self.cols != other.cols {
            return Err(Error::DimensionMismatch("matrix sum".to_string()));
        }
        let rows = self
            .rows
            .iter()
            .zip(&other.rows)
            .map(|(a, b)| a.try_add(b))
            .collect::<Result<Vec<_>>>()?;
        Gf4Matrix::from_rows_with_cols(rows, self.cols)
    }

    pub fn scaled(&self, c: Gf4) -> Gf4Matrix {
        Gf4Matrix {
            cols: self.cols,
            rows: self.rows.iter().map(|r| r.scaled(c)).collect(),
        }
    }

    /// `(self | other)`.
    pub fn hstack(&self, other: &Gf4Matrix) -> Result<Gf4Matrix> {
        if self.nrows() != other.nrows() {
            return Err(Error::DimensionMismatch("hstack row counts".to_string()));
        }
        let rows = self
            .rows
            .iter()
            .zip(&other.rows)
            .map(|(a, b)| a.concat(b))
            .collect();
        Gf4Matrix::from_rows_with_cols(rows, self.cols + other.cols)
    }

    /// `self` above `other`.
    pub fn vstack(&self, other: &Gf4Matrix) -> Result<Gf4Matrix> {
        if self.cols != other.cols {
            return Err(Error::DimensionMismatch("vstack column counts".to_string()));
        }
        let mut rows = self.rows.clone();
        rows.extend(other.rows.iter().cloned());
        Gf4Matrix::from_rows_with_cols(rows, self.cols)
    }

    /// Rank by Gaussian elimination.
    pub fn rank(&self) -> usize {
        let mut rows: Vec<Gf4Vector> = self.rows.clone();
        let mut rank = 0;
        for col in 0..self.cols {
            let Some(p) = (rank..rows.len()).find(|&i| !rows[i].get(col).is_zero()) else {
                continue;
            };
            rows.swap(rank, p);
            let inv = rows[rank].get(col).inv().expect("pivot");
            let pivot = rows[rank].scaled(inv);
            for (i, r) in rows.iter_mut().enumerate() {
                if i != rank {
                    let c = r.get(col);
                    r.add_scaled(c, &pivot);
                }
            }
            rows[rank] = pivot;
            rank += 1;
        }
        rank
    }
}

impl fmt::Display for Gf4Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.rows {
            writeln!(f, "{r}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Gf4Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Gf4Matrix{}x{}[", self.nrows(), self.cols)?;
        for (i, r) in self.rows.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{r}")?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn matrix(rows: usize, cols: usize) -> impl Strategy<Value = Gf4Matrix> {
        proptest::collection::vec(proptest::collection::vec(0u8..4, cols), rows).prop_map(
            move |m| {
                let rows = m
                    .iter()
                    .map(|r| {
                        Gf4Vector::from_symbols(
                            &r.iter().map(|&b| Gf4::from_bits(b)).collect::<Vec<_>>(),
                        )
                    })
                    .collect();
                Gf4Matrix::from_rows_with_cols(rows, cols).unwrap()
            },
        )
    }

    #[test]
    fn identity_is_neutral() {
        let a = Gf4Matrix::parse_rows(&["1w0", "v01"]).unwrap();
        assert_eq!(Gf4Matrix::identity(2).mul(&a).unwrap(), a);
        assert_eq!(a.mul(&Gf4Matrix::identity(3)).unwrap(), a);
    }

    #[test]
    fn dimension_mismatch() {
        let a = Gf4Matrix::identity(2);
        let b = Gf4Matrix::identity(3);
        assert!(matches!(a.mul(&b), Err(Error::DimensionMismatch(_))));
    }

    #[test]
    fn conj_transpose_example() {
        let a = Gf4Matrix::parse_rows(&["1w", "0v"]).unwrap();
        let expect = Gf4Matrix::parse_rows(&["10", "vw"]).unwrap();
        assert_eq!(a.conj_transpose(), expect);
    }

    #[test]
    fn rank_examples() {
        assert_eq!(Gf4Matrix::identity(4).rank(), 4);
        let a = Gf4Matrix::parse_rows(&["1w0", "wv0", "001"]).unwrap();
        assert_eq!(a.rank(), 2);
    }

    proptest! {
        #[test]
        fn conj_transpose_is_involution(a in matrix(5, 7)) {
            prop_assert_eq!(a.conj_transpose().conj_transpose(), a);
        }

        #[test]
        fn conj_transpose_reverses_products(a in matrix(4, 6), b in matrix(6, 3)) {
            let lhs = a.mul(&b).unwrap().conj_transpose();
            let rhs = b.conj_transpose().mul(&a.conj_transpose()).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }
}
