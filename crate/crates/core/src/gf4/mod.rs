//! Arithmetic over the field with four elements `{0, 1, w, v}` where
//! `v = w^2 = w + 1`.
//!
//! Symbols use a two-bit encoding `0 -> 00`, `1 -> 01`, `w -> 10`,
//! `v -> 11`: bit 0 is the coefficient of `1` and bit 1 the coefficient of
//! `w` in the polynomial basis. Addition is XOR of the encodings.
//! Vectors store the two bits in separate word-packed planes.

mod matrix;
mod vector;

pub use matrix::Gf4Matrix;
pub use vector::Gf4Vector;

use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::Field;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
#[repr(transparent)]
pub struct Gf4(u8);

impl Gf4 {
    pub const ZERO: Gf4 = Gf4(0);
    pub const ONE: Gf4 = Gf4(1);
    /// The primitive element `w`.
    pub const W: Gf4 = Gf4(2);
    /// `v = w^2 = w + 1`.
    pub const V: Gf4 = Gf4(3);

    /// All field elements in encoding order.
    pub const ALL: [Gf4; 4] = [Gf4::ZERO, Gf4::ONE, Gf4::W, Gf4::V];
    /// The multiplicative group.
    pub const NONZERO: [Gf4; 3] = [Gf4::ONE, Gf4::W, Gf4::V];

    /// Builds an element from its two-bit encoding (higher bits ignored).
    #[inline]
    pub const fn from_bits(bits: u8) -> Gf4 {
        Gf4(bits & 3)
    }

    #[inline]
    pub const fn bits(self) -> u8 {
        self.0
    }

    #[inline]
    pub const fn lo(self) -> bool {
        self.0 & 1 != 0
    }

    #[inline]
    pub const fn hi(self) -> bool {
        self.0 & 2 != 0
    }

    #[inline]
    pub const fn is_zero(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub const fn add(self, rhs: Gf4) -> Gf4 {
        Gf4(self.0 ^ rhs.0)
    }

    /// Branch-free product on the bit planes:
    /// `(a0 + a1 w)(b0 + b1 w) = (a0 b0 + a1 b1) + (a0 b1 + a1 b0 + a1 b1) w`.
    #[inline]
    pub const fn mul(self, rhs: Gf4) -> Gf4 {
        let (a0, a1) = (self.0 & 1, self.0 >> 1);
        let (b0, b1) = (rhs.0 & 1, rhs.0 >> 1);
        let lo = (a0 & b0) ^ (a1 & b1);
        let hi = (a0 & b1) ^ (a1 & b0) ^ (a1 & b1);
        Gf4(lo | (hi << 1))
    }

    /// Frobenius conjugation `x -> x^2`; swaps `w` and `v`.
    #[inline]
    pub const fn conj(self) -> Gf4 {
        let (a0, a1) = (self.0 & 1, self.0 >> 1);
        Gf4((a0 ^ a1) | (a1 << 1))
    }

    /// Multiplicative inverse, `None` for zero. Equal to the conjugate on
    /// nonzero elements since `x^3 = 1`.
    #[inline]
    pub const fn inv(self) -> Option<Gf4> {
        if self.0 == 0 {
            None
        } else {
            Some(self.conj())
        }
    }

    /// Absolute trace `x + x^2`, valued in `{0, 1}`.
    #[inline]
    pub const fn trace(self) -> Gf4 {
        self.add(self.conj())
    }

    pub fn to_char(self) -> char {
        ['0', '1', 'w', 'v'][self.0 as usize]
    }

    pub fn from_char(c: char) -> Result<Gf4> {
        match c {
            '0' => Ok(Gf4::ZERO),
            '1' => Ok(Gf4::ONE),
            'w' | 'W' => Ok(Gf4::W),
            'v' | 'V' => Ok(Gf4::V),
            other => Err(Error::InvalidSymbol(other)),
        }
    }

    /// Parses a twist constant, rejecting zero.
    pub fn parse_mu(s: &str) -> Result<Gf4> {
        let mut chars = s.chars();
        let c = chars
            .next()
            .ok_or_else(|| Error::Parse("empty mu".to_string()))?;
        if chars.next().is_some() {
            return Err(Error::Parse(format!("mu must be one symbol, got {s:?}")));
        }
        let x = Gf4::from_char(c)?;
        if x.is_zero() {
            return Err(Error::InvalidMu(c));
        }
        Ok(x)
    }
}

impl fmt::Debug for Gf4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_char())
    }
}

impl fmt::Display for Gf4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_char())
    }
}

impl Add for Gf4 {
    type Output = Gf4;
    #[inline]
    fn add(self, rhs: Gf4) -> Gf4 {
        Gf4::add(self, rhs)
    }
}

impl AddAssign for Gf4 {
    #[inline]
    fn add_assign(&mut self, rhs: Gf4) {
        *self = Gf4::add(*self, rhs);
    }
}

// Characteristic 2: subtraction and negation coincide with addition / identity.
impl Sub for Gf4 {
    type Output = Gf4;
    #[inline]
    fn sub(self, rhs: Gf4) -> Gf4 {
        Gf4::add(self, rhs)
    }
}

impl Neg for Gf4 {
    type Output = Gf4;
    #[inline]
    fn neg(self) -> Gf4 {
        self
    }
}

impl Mul for Gf4 {
    type Output = Gf4;
    #[inline]
    fn mul(self, rhs: Gf4) -> Gf4 {
        Gf4::mul(self, rhs)
    }
}

impl MulAssign for Gf4 {
    #[inline]
    fn mul_assign(&mut self, rhs: Gf4) {
        *self = Gf4::mul(*self, rhs);
    }
}

impl Zero for Gf4 {
    fn zero() -> Gf4 {
        Gf4::ZERO
    }
    fn is_zero(&self) -> bool {
        Gf4::is_zero(*self)
    }
}

impl One for Gf4 {
    fn one() -> Gf4 {
        Gf4::ONE
    }
}

impl Field for Gf4 {
    fn inverse(&self) -> Option<Gf4> {
        self.inv()
    }
}

/// Parses a symbol string such as `"1w0v"`; commas and whitespace are ignored.
pub fn parse_symbols(s: &str) -> Result<Vec<Gf4>> {
    s.chars()
        .filter(|c| !c.is_whitespace() && *c != ',')
        .map(Gf4::from_char)
        .collect()
}

pub fn format_symbols(xs: &[Gf4]) -> String {
    xs.iter().map(|x| x.to_char()).collect()
}
