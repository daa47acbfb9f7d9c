//! Dense univariate polynomials over a generic coefficient ring.

use std::fmt;
use std::ops::{Add, Mul, Sub};

use crate::scalar::{Field, Ring};

/// Coefficients stored low degree first, with no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly<T> {
    coeffs: Vec<T>,
}

impl<T: Ring> Poly<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(T::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::new(vec![T::one()])
    }

    /// `c x^k`.
    pub fn monomial(c: T, k: usize) -> Self {
        let mut coeffs = vec![T::zero(); k + 1];
        coeffs[k] = c;
        Poly::new(coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    /// Coefficient of `x^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> T {
        self.coeffs.get(i).cloned().unwrap_or_else(T::zero)
    }

    pub fn leading(&self) -> Option<&T> {
        self.coeffs.last()
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Poly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn eval(&self, x: &T) -> T {
        self.coeffs
            .iter()
            .rev()
            .fold(T::zero(), |acc, c| acc * x.clone() + c.clone())
    }
}

impl<T: Field> Poly<T> {
    /// Euclidean division: `self = q * d + r` with `deg r < deg d`.
    ///
    /// Panics if `d` is zero.
    pub fn div_rem(&self, d: &Poly<T>) -> (Poly<T>, Poly<T>) {
        let dd = d.degree().expect("division by zero polynomial");
        let lead_inv = d.leading().and_then(Field::inverse).expect("nonzero lead");
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Poly::zero(), self.clone());
        }
        let mut quot = vec![T::zero(); rem.len() - dd];
        for i in (dd..rem.len()).rev() {
            let c = rem[i].clone() * lead_inv.clone();
            if c.is_zero() {
                continue;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                let k = i - dd + j;
                rem[k] = rem[k].clone() - c.clone() * dc.clone();
            }
            quot[i - dd] = c;
        }
        rem.truncate(dd);
        (Poly::new(quot), Poly::new(rem))
    }

    pub fn gcd(&self, other: &Poly<T>) -> Poly<T> {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Scales so the leading coefficient is one.
    pub fn monic(&self) -> Poly<T> {
        match self.leading().and_then(Field::inverse) {
            Some(inv) => Poly::new(self.coeffs.iter().map(|c| c.clone() * inv.clone()).collect()),
            None => self.clone(),
        }
    }
}

impl<T: Ring> Add for &Poly<T> {
    type Output = Poly<T>;
    fn add(self, rhs: &Poly<T>) -> Poly<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl<T: Ring> Sub for &Poly<T> {
    type Output = Poly<T>;
    fn sub(self, rhs: &Poly<T>) -> Poly<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl<T: Ring> Mul for &Poly<T> {
    type Output = Poly<T>;
    fn mul(self, rhs: &Poly<T>) -> Poly<T> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Poly::new(out)
    }
}

impl<T: Ring + fmt::Display> fmt::Display for Poly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}*x")?,
                _ => write!(f, "{c}*x^{i}")?,
            }
        }
        Ok(())
    }
}

impl<T: Ring + fmt::Display> fmt::Debug for Poly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Gf4;
    use num_bigint::BigInt;

    #[test]
    fn integer_binomial() {
        // (1 + 3y)^2 = 1 + 6y + 9y^2
        let p = Poly::new(vec![BigInt::from(1), BigInt::from(3)]).pow(2);
        assert_eq!(
            p.coeffs(),
            &[BigInt::from(1), BigInt::from(6), BigInt::from(9)]
        );
    }

    #[test]
    fn gf4_division() {
        // x^3 - 1 = (x - 1)(x^2 + x + 1) over GF(4)
        let x3 = Poly::new(vec![Gf4::ONE, Gf4::ZERO, Gf4::ZERO, Gf4::ONE]);
        let xm1 = Poly::new(vec![Gf4::ONE, Gf4::ONE]);
        let (q, r) = x3.div_rem(&xm1);
        assert!(r.is_zero());
        assert_eq!(q.coeffs(), &[Gf4::ONE, Gf4::ONE, Gf4::ONE]);
        // x^2 + x + 1 = (x + w)(x + v)
        let (q2, r2) = q.div_rem(&Poly::new(vec![Gf4::W, Gf4::ONE]));
        assert!(r2.is_zero());
        assert_eq!(q2.coeffs(), &[Gf4::V, Gf4::ONE]);
    }

    #[test]
    fn gcd_of_coprime_is_one() {
        let a = Poly::new(vec![Gf4::W, Gf4::ONE]);
        let b = Poly::new(vec![Gf4::V, Gf4::ONE]);
        assert_eq!(a.gcd(&b), Poly::one());
    }
}
