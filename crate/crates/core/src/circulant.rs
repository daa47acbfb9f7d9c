//! μ-circulant matrices, represented by their first row.
//!
//! Row `i + 1` of a μ-circulant is row `i` shifted right by one position with
//! the wrapped symbol multiplied by μ. Equivalently the matrix is
//! `sum r_i E^i` for the twisted shift `E = E_n(μ)`, so all μ-circulants of a
//! given size commute and products can be computed on first rows alone.

use std::fmt;

use crate::error::{Error, Result};
use crate::gf4::{Gf4, Gf4Matrix, Gf4Vector};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CirculantSpec {
    mu: Gf4,
    row: Gf4Vector,
}

impl CirculantSpec {
    pub fn new(mu: Gf4, row: Gf4Vector) -> Result<Self> {
        if mu.is_zero() {
            return Err(Error::InvalidMu('0'));
        }
        if row.is_empty() {
            return Err(Error::InvalidArgument("empty first row".to_string()));
        }
        Ok(CirculantSpec { mu, row })
    }

    pub fn parse(mu: Gf4, row: &str) -> Result<Self> {
        CirculantSpec::new(mu, Gf4Vector::parse(row)?)
    }

    /// The identity, first row `(1, 0, ..., 0)`.
    pub fn identity(mu: Gf4, n: usize) -> Result<Self> {
        CirculantSpec::new(mu, Gf4Vector::unit(n, 0))
    }

    pub fn zero(mu: Gf4, n: usize) -> Result<Self> {
        CirculantSpec::new(mu, Gf4Vector::zeros(n))
    }

    #[inline]
    pub fn mu(&self) -> Gf4 {
        self.mu
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.row.len()
    }

    pub fn first_row(&self) -> &Gf4Vector {
        &self.row
    }

    pub fn is_zero(&self) -> bool {
        self.row.is_zero()
    }

    /// `x E_n(μ)`: shift right by one, wrapped symbol times μ.
    fn shift(&self, x: &Gf4Vector) -> Gf4Vector {
        let n = x.len();
        let mut out = Gf4Vector::zeros(n);
        out.set(0, self.mu * x.get(n - 1));
        for j in 1..n {
            out.set(j, x.get(j - 1));
        }
        out
    }

    pub fn materialize(&self) -> Gf4Matrix {
        let mut rows = Vec::with_capacity(self.n());
        let mut cur = self.row.clone();
        for _ in 0..self.n() {
            let next = self.shift(&cur);
            rows.push(cur);
            cur = next;
        }
        Gf4Matrix::from_rows(rows).expect("square")
    }

    fn check_compatible(&self, other: &CirculantSpec) -> Result<()> {
        if self.n() != other.n() {
            return Err(Error::LengthMismatch {
                left: self.n(),
                right: other.n(),
            });
        }
        if self.mu != other.mu {
            return Err(Error::InvalidArgument(format!(
                "twist mismatch: {} vs {}",
                self.mu, other.mu
            )));
        }
        Ok(())
    }

    /// First row of the product, as a twisted convolution: the first row of
    /// `AB` is `sum_i a_i (row i of B)`.
    pub fn mul(&self, other: &CirculantSpec) -> Result<CirculantSpec> {
        self.check_compatible(other)?;
        let mut acc = Gf4Vector::zeros(self.n());
        let mut shifted = other.row.clone();
        for i in 0..self.n() {
            acc.add_scaled(self.row.get(i), &shifted);
            shifted = self.shift(&shifted);
        }
        CirculantSpec::new(self.mu, acc)
    }

    pub fn add(&self, other: &CirculantSpec) -> Result<CirculantSpec> {
        self.check_compatible(other)?;
        CirculantSpec::new(self.mu, self.row.try_add(&other.row)?)
    }

    pub fn scaled(&self, c: Gf4) -> CirculantSpec {
        CirculantSpec {
            mu: self.mu,
            row: self.row.scaled(c),
        }
    }

    /// `conj(A)^T`, again μ-circulant with first row
    /// `(r_0^2, (μ r_{n-1})^2, ..., (μ r_1)^2)`.
    pub fn conj_transpose(&self) -> CirculantSpec {
        let n = self.n();
        let mut row = Gf4Vector::zeros(n);
        row.set(0, self.row.get(0).conj());
        for j in 1..n {
            row.set(j, (self.mu * self.row.get(n - j)).conj());
        }
        CirculantSpec { mu: self.mu, row }
    }

    /// `A conj(A)^T`.
    pub fn hermitian_square(&self) -> CirculantSpec {
        self.mul(&self.conj_transpose()).expect("same shape")
    }
}

impl fmt::Display for CirculantSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "mu={} row={}", self.mu, self.row)
    }
}

impl fmt::Debug for CirculantSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CirculantSpec({self})")
    }
}

/// The twisted shift matrix `E_n(μ)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ShiftMatrix {
    pub n: usize,
    pub mu: Gf4,
}

impl ShiftMatrix {
    pub fn new(n: usize, mu: Gf4) -> Result<Self> {
        if mu.is_zero() {
            return Err(Error::InvalidMu('0'));
        }
        Ok(ShiftMatrix { n, mu })
    }

    pub fn materialize(&self) -> Gf4Matrix {
        let mut m = Gf4Matrix::zeros(self.n, self.n);
        for i in 0..self.n - 1 {
            m.set(i, i + 1, Gf4::ONE);
        }
        m.set(self.n - 1, 0, self.mu);
        m
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn spec(mu: Gf4, s: &str) -> CirculantSpec {
        CirculantSpec::parse(mu, s).unwrap()
    }

    /// `sum r_i E^i`, built from matrix powers only.
    fn power_sum_oracle(c: &CirculantSpec) -> Gf4Matrix {
        let e = ShiftMatrix::new(c.n(), c.mu()).unwrap().materialize();
        let mut pow = Gf4Matrix::identity(c.n());
        let mut acc = Gf4Matrix::zeros(c.n(), c.n());
        for i in 0..c.n() {
            acc = acc.add(&pow.scaled(c.first_row().get(i))).unwrap();
            pow = pow.mul(&e).unwrap();
        }
        acc
    }

    fn arb_spec(max_n: usize) -> impl Strategy<Value = (CirculantSpec, CirculantSpec)> {
        (1..=max_n, 1u8..4).prop_flat_map(|(n, mu)| {
            let row = proptest::collection::vec(0u8..4, n);
            (row.clone(), row).prop_map(move |(a, b)| {
                let mu = Gf4::from_bits(mu);
                let to = |r: &Vec<u8>| {
                    Gf4Vector::from_symbols(&r.iter().map(|&x| Gf4::from_bits(x)).collect::<Vec<_>>())
                };
                (
                    CirculantSpec::new(mu, to(&a)).unwrap(),
                    CirculantSpec::new(mu, to(&b)).unwrap(),
                )
            })
        })
    }

    #[test]
    fn rejects_zero_mu() {
        assert_eq!(
            CirculantSpec::parse(Gf4::ZERO, "10").unwrap_err(),
            Error::InvalidMu('0')
        );
    }

    #[test]
    fn plain_circulant_shift() {
        let m = spec(Gf4::ONE, "101011").materialize();
        assert_eq!(m.row(1).to_string(), "110101");
    }

    #[test]
    fn twisted_rows() {
        let m = spec(Gf4::W, "10").materialize();
        assert_eq!(m.row(1).to_string(), "01");
        let m = spec(Gf4::W, "01").materialize();
        assert_eq!(m.row(1).to_string(), "w0");
        assert_eq!(m, power_sum_oracle(&spec(Gf4::W, "01")));
    }

    #[test]
    fn product_examples() {
        let a = spec(Gf4::W, "01");
        assert_eq!(a.mul(&a).unwrap().first_row().to_string(), "w0");
        let b = spec(Gf4::V, "1w0v1");
        let id = CirculantSpec::identity(Gf4::V, 5).unwrap();
        assert_eq!(b.mul(&id).unwrap(), b);
        assert!(a.mul(&b).is_err());
    }

    #[test]
    fn conj_transpose_examples() {
        let a = spec(Gf4::ONE, "101011");
        assert_eq!(a.conj_transpose().first_row().to_string(), "111010");
        assert_eq!(
            a.conj_transpose().materialize(),
            a.materialize().conj_transpose()
        );
        let z = spec(Gf4::W, "000");
        assert!(z.conj_transpose().is_zero());
        let w = spec(Gf4::W, "w000");
        assert_eq!(w.conj_transpose().first_row().to_string(), "v000");
    }

    #[test]
    fn shift_power_is_scalar() {
        for mu in Gf4::NONZERO {
            for n in 1..=32 {
                let e = ShiftMatrix::new(n, mu).unwrap().materialize();
                let mut p = Gf4Matrix::identity(n);
                for _ in 0..n {
                    p = p.mul(&e).unwrap();
                }
                assert_eq!(p, Gf4Matrix::identity(n).scaled(mu), "n={n} mu={mu}");
            }
        }
    }

    proptest! {
        #[test]
        fn materialize_matches_power_sum((a, _) in arb_spec(16)) {
            prop_assert_eq!(a.materialize(), power_sum_oracle(&a));
        }

        #[test]
        fn product_matches_matrix_product((a, b) in arb_spec(16)) {
            let lhs = a.mul(&b).unwrap().materialize();
            let rhs = a.materialize().mul(&b.materialize()).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn products_commute((a, b) in arb_spec(16)) {
            prop_assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
        }

        #[test]
        fn products_associate((a, b) in arb_spec(12)) {
            let c = a.add(&b).unwrap().conj_transpose();
            let lhs = a.mul(&b).unwrap().mul(&c).unwrap();
            let rhs = a.mul(&b.mul(&c).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn conj_transpose_matches_matrix((a, _) in arb_spec(16)) {
            prop_assert_eq!(a.conj_transpose().materialize(), a.materialize().conj_transpose());
        }
    }
}
