use std::cmp::Ordering;
use std::fmt;

use super::{format_symbols, parse_symbols, Gf4};
use crate::error::{Error, Result};

/// A vector over GF(4) stored as two word-packed bit planes.
///
/// Symbol `i` lives at bit `i % 64` of word `i / 64`; bits beyond `len` are
/// always zero.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Gf4Vector {
    len: usize,
    lo: Vec<u64>,
    hi: Vec<u64>,
}

#[inline]
fn words_for(len: usize) -> usize {
    len.div_ceil(64)
}

impl Gf4Vector {
    pub fn zeros(len: usize) -> Self {
        let w = words_for(len);
        Gf4Vector {
            len,
            lo: vec![0; w],
            hi: vec![0; w],
        }
    }

    pub fn from_symbols(xs: &[Gf4]) -> Self {
        let mut v = Gf4Vector::zeros(xs.len());
        for (i, &x) in xs.iter().enumerate() {
            v.set(i, x);
        }
        v
    }

    /// Builds a vector from raw planes; tail bits beyond `len` are cleared.
    pub fn from_planes(len: usize, mut lo: Vec<u64>, mut hi: Vec<u64>) -> Self {
        let w = words_for(len);
        lo.resize(w, 0);
        hi.resize(w, 0);
        let mut v = Gf4Vector { len, lo, hi };
        v.mask_tail();
        v
    }

    pub fn parse(s: &str) -> Result<Self> {
        Ok(Gf4Vector::from_symbols(&parse_symbols(s)?))
    }

    /// Unit vector `e_i`.
    pub fn unit(len: usize, i: usize) -> Self {
        let mut v = Gf4Vector::zeros(len);
        v.set(i, Gf4::ONE);
        v
    }

    fn mask_tail(&mut self) {
        let r = self.len % 64;
        if r != 0 {
            let m = (1u64 << r) - 1;
            if let Some(last) = self.lo.last_mut() {
                *last &= m;
            }
            if let Some(last) = self.hi.last_mut() {
                *last &= m;
            }
        }
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn lo_words(&self) -> &[u64] {
        &self.lo
    }

    #[inline]
    pub fn hi_words(&self) -> &[u64] {
        &self.hi
    }

    #[inline]
    pub fn get(&self, i: usize) -> Gf4 {
        debug_assert!(i < self.len);
        let (w, b) = (i / 64, i % 64);
        let lo = (self.lo[w] >> b) & 1;
        let hi = (self.hi[w] >> b) & 1;
        Gf4::from_bits((lo | (hi << 1)) as u8)
    }

    #[inline]
    pub fn set(&mut self, i: usize, x: Gf4) {
        assert!(i < self.len, "index {i} out of range for length {}", self.len);
        let (w, b) = (i / 64, i % 64);
        let m = 1u64 << b;
        self.lo[w] = (self.lo[w] & !m) | (u64::from(x.lo()) << b);
        self.hi[w] = (self.hi[w] & !m) | (u64::from(x.hi()) << b);
    }

    pub fn to_symbols(&self) -> Vec<Gf4> {
        (0..self.len).map(|i| self.get(i)).collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = Gf4> + '_ {
        (0..self.len).map(move |i| self.get(i))
    }

    /// Number of nonzero symbols: popcount of the OR of both planes.
    pub fn weight(&self) -> usize {
        self.lo
            .iter()
            .zip(&self.hi)
            .map(|(l, h)| (l | h).count_ones() as usize)
            .sum()
    }

    /// Weight restricted to the positions set in `mask` (one bit per symbol).
    pub fn weight_on(&self, mask: &[u64]) -> usize {
        self.lo
            .iter()
            .zip(&self.hi)
            .zip(mask)
            .map(|((l, h), m)| ((l | h) & m).count_ones() as usize)
            .sum()
    }

    /// Bitmask of nonzero positions.
    pub fn support_mask(&self) -> Vec<u64> {
        self.lo.iter().zip(&self.hi).map(|(l, h)| l | h).collect()
    }

    pub fn support(&self) -> Vec<usize> {
        (0..self.len).filter(|&i| !self.get(i).is_zero()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.lo.iter().all(|&w| w == 0) && self.hi.iter().all(|&w| w == 0)
    }

    pub fn first_nonzero(&self) -> Option<(usize, Gf4)> {
        for (w, (l, h)) in self.lo.iter().zip(&self.hi).enumerate() {
            let any = l | h;
            if any != 0 {
                let i = w * 64 + any.trailing_zeros() as usize;
                return Some((i, self.get(i)));
            }
        }
        None
    }

    fn check_len(&self, other: &Gf4Vector) -> Result<()> {
        if self.len != other.len {
            return Err(Error::LengthMismatch {
                left: self.len,
                right: other.len,
            });
        }
        Ok(())
    }

    /// `self += other`, assuming equal lengths.
    #[inline]
    pub fn add_assign(&mut self, other: &Gf4Vector) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.lo.iter_mut().zip(&other.lo) {
            *a ^= b;
        }
        for (a, b) in self.hi.iter_mut().zip(&other.hi) {
            *a ^= b;
        }
    }

    pub fn try_add(&self, other: &Gf4Vector) -> Result<Gf4Vector> {
        self.check_len(other)?;
        let mut out = self.clone();
        out.add_assign(other);
        Ok(out)
    }

    /// `self += c * other`.
    pub fn add_scaled(&mut self, c: Gf4, other: &Gf4Vector) {
        debug_assert_eq!(self.len, other.len);
        if c.is_zero() {
            return;
        }
        for w in 0..self.lo.len() {
            let (lo, hi) = scale_planes(c, other.lo[w], other.hi[w]);
            self.lo[w] ^= lo;
            self.hi[w] ^= hi;
        }
    }

    /// Every symbol multiplied by `c`.
    pub fn scaled(&self, c: Gf4) -> Gf4Vector {
        let mut out = self.clone();
        for w in 0..out.lo.len() {
            let (lo, hi) = scale_planes(c, self.lo[w], self.hi[w]);
            out.lo[w] = lo;
            out.hi[w] = hi;
        }
        out
    }

    /// Symbol-wise conjugate `x_i^2`.
    pub fn conj(&self) -> Gf4Vector {
        let mut out = self.clone();
        for w in 0..out.lo.len() {
            out.lo[w] = self.lo[w] ^ self.hi[w];
        }
        out
    }

    /// Symbol-wise product.
    pub fn hadamard(&self, other: &Gf4Vector) -> Result<Gf4Vector> {
        self.check_len(other)?;
        let mut out = Gf4Vector::zeros(self.len);
        for w in 0..self.lo.len() {
            let (lo, hi) = mul_planes(self.lo[w], self.hi[w], other.lo[w], other.hi[w]);
            out.lo[w] = lo;
            out.hi[w] = hi;
        }
        Ok(out)
    }

    /// Euclidean inner product `sum x_i y_i`.
    pub fn dot(&self, other: &Gf4Vector) -> Result<Gf4> {
        self.check_len(other)?;
        let (mut plo, mut phi) = (0u32, 0u32);
        for w in 0..self.lo.len() {
            let (lo, hi) = mul_planes(self.lo[w], self.hi[w], other.lo[w], other.hi[w]);
            plo ^= lo.count_ones() & 1;
            phi ^= hi.count_ones() & 1;
        }
        Ok(Gf4::from_bits((plo | (phi << 1)) as u8))
    }

    /// Hermitian inner product `sum x_i y_i^2`.
    pub fn hermitian_inner(&self, other: &Gf4Vector) -> Result<Gf4> {
        self.check_len(other)?;
        let (mut plo, mut phi) = (0u32, 0u32);
        for w in 0..self.lo.len() {
            // conj(y) planes: lo ^ hi, hi
            let (lo, hi) = mul_planes(
                self.lo[w],
                self.hi[w],
                other.lo[w] ^ other.hi[w],
                other.hi[w],
            );
            plo ^= lo.count_ones() & 1;
            phi ^= hi.count_ones() & 1;
        }
        Ok(Gf4::from_bits((plo | (phi << 1)) as u8))
    }

    /// Trace inner product `sum (x_i y_i^2 + x_i^2 y_i)`, valued in `{0, 1}`.
    pub fn trace_inner(&self, other: &Gf4Vector) -> Result<Gf4> {
        Ok(self.hermitian_inner(other)?.trace())
    }

    /// Concatenation `(self | other)`.
    pub fn concat(&self, other: &Gf4Vector) -> Gf4Vector {
        let mut out = Gf4Vector::zeros(self.len + other.len);
        for i in 0..self.len {
            out.set(i, self.get(i));
        }
        for i in 0..other.len {
            out.set(self.len + i, other.get(i));
        }
        out
    }

    /// Symbols at positions `range`.
    pub fn slice(&self, start: usize, end: usize) -> Gf4Vector {
        let mut out = Gf4Vector::zeros(end - start);
        for i in start..end {
            out.set(i - start, self.get(i));
        }
        out
    }

    /// Scales so the first nonzero symbol is 1; returns the applied factor.
    pub fn normalize(&mut self) -> Gf4 {
        match self.first_nonzero() {
            Some((_, x)) if x != Gf4::ONE => {
                let c = x.inv().expect("nonzero");
                *self = self.scaled(c);
                c
            }
            _ => Gf4::ONE,
        }
    }
}

/// Multiplies packed planes by a scalar: `w (a + b w) = b + (a + b) w`.
#[inline]
pub(crate) fn scale_planes(c: Gf4, lo: u64, hi: u64) -> (u64, u64) {
    match c.bits() {
        0 => (0, 0),
        1 => (lo, hi),
        2 => (hi, lo ^ hi),
        _ => (lo ^ hi, lo),
    }
}

#[inline]
pub(crate) fn mul_planes(a0: u64, a1: u64, b0: u64, b1: u64) -> (u64, u64) {
    let t = a1 & b1;
    ((a0 & b0) ^ t, (a0 & b1) ^ (a1 & b0) ^ t)
}

impl Ord for Gf4Vector {
    /// Lexicographic by symbol with `0 < 1 < w < v`, shorter vectors first.
    fn cmp(&self, other: &Self) -> Ordering {
        self.len.cmp(&other.len).then_with(|| {
            for i in 0..self.len {
                match self.get(i).cmp(&other.get(i)) {
                    Ordering::Equal => continue,
                    o => return o,
                }
            }
            Ordering::Equal
        })
    }
}

impl PartialOrd for Gf4Vector {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Gf4Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", format_symbols(&self.to_symbols()))
    }
}

impl fmt::Debug for Gf4Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Gf4Vector({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn naive_weight(xs: &[Gf4]) -> usize {
        xs.iter().filter(|x| !x.is_zero()).count()
    }

    fn sym() -> impl Strategy<Value = Gf4> {
        (0u8..4).prop_map(Gf4::from_bits)
    }

    fn pair(max: usize) -> impl Strategy<Value = (Vec<Gf4>, Vec<Gf4>)> {
        (1..=max).prop_flat_map(|n| {
            (
                proptest::collection::vec(sym(), n),
                proptest::collection::vec(sym(), n),
            )
        })
    }

    #[test]
    fn weight_examples() {
        let x = Gf4Vector::parse("0w0v1").unwrap();
        assert_eq!(x.weight(), 3);
        assert_eq!(x.to_string(), "0w0v1");
        assert_eq!(x.first_nonzero(), Some((1, Gf4::W)));
    }

    #[test]
    fn hermitian_examples() {
        let one = Gf4Vector::parse("11").unwrap();
        assert_eq!(one.hermitian_inner(&one).unwrap(), Gf4::ZERO);
        let w = Gf4Vector::parse("w").unwrap();
        assert_eq!(w.hermitian_inner(&w).unwrap(), Gf4::ONE);
        let x = Gf4Vector::parse("1wv0v").unwrap();
        assert_eq!(
            x.hermitian_inner(&Gf4Vector::zeros(5)).unwrap(),
            Gf4::ZERO
        );
        assert!(matches!(
            x.hermitian_inner(&one),
            Err(Error::LengthMismatch { .. })
        ));
    }

    #[test]
    fn trace_examples() {
        let a = Gf4Vector::parse("1").unwrap();
        let b = Gf4Vector::parse("w").unwrap();
        assert_eq!(a.trace_inner(&b).unwrap(), Gf4::ONE);
    }

    #[test]
    fn tail_is_masked() {
        let v = Gf4Vector::from_planes(3, vec![u64::MAX], vec![0]);
        assert_eq!(v.weight(), 3);
        assert_eq!(v.to_string(), "111");
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(10_000))]

        #[test]
        fn packed_ops_match_naive((xs, ys) in pair(256), c in sym()) {
            let x = Gf4Vector::from_symbols(&xs);
            let y = Gf4Vector::from_symbols(&ys);
            prop_assert_eq!(x.weight(), naive_weight(&xs));
            let sum: Vec<Gf4> = xs.iter().zip(&ys).map(|(a, b)| *a + *b).collect();
            prop_assert_eq!(x.try_add(&y).unwrap().to_symbols(), sum);
            let sc: Vec<Gf4> = xs.iter().map(|a| c * *a).collect();
            prop_assert_eq!(x.scaled(c).to_symbols(), sc);
            let herm = xs.iter().zip(&ys).fold(Gf4::ZERO, |acc, (a, b)| acc + *a * b.conj());
            prop_assert_eq!(x.hermitian_inner(&y).unwrap(), herm);
            let dot = xs.iter().zip(&ys).fold(Gf4::ZERO, |acc, (a, b)| acc + *a * *b);
            prop_assert_eq!(x.dot(&y).unwrap(), dot);
            let conj: Vec<Gf4> = xs.iter().map(|a| a.conj()).collect();
            prop_assert_eq!(x.conj().to_symbols(), conj);
        }
    }

    proptest! {
        #[test]
        fn hermitian_is_conjugate_symmetric((xs, ys) in pair(64)) {
            let x = Gf4Vector::from_symbols(&xs);
            let y = Gf4Vector::from_symbols(&ys);
            prop_assert_eq!(x.hermitian_inner(&y).unwrap(), y.hermitian_inner(&x).unwrap().conj());
        }

        #[test]
        fn self_sum_is_zero((xs, _) in pair(64)) {
            let x = Gf4Vector::from_symbols(&xs);
            prop_assert!(x.try_add(&x).unwrap().is_zero());
        }

        #[test]
        fn weight_is_scale_invariant((xs, _) in pair(128), c in 1u8..4) {
            let x = Gf4Vector::from_symbols(&xs);
            prop_assert_eq!(x.scaled(Gf4::from_bits(c)).weight(), x.weight());
        }

        #[test]
        fn trace_form_is_alternating((xs, ys) in pair(64)) {
            let x = Gf4Vector::from_symbols(&xs);
            let y = Gf4Vector::from_symbols(&ys);
            prop_assert_eq!(x.trace_inner(&x).unwrap(), Gf4::ZERO);
            prop_assert_eq!(x.trace_inner(&y).unwrap(), y.trace_inner(&x).unwrap());
        }
    }
}
