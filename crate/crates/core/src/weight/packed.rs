//! Fixed-width packed codewords for the enumeration kernels.

use crate::gf4::Gf4Vector;

/// A vector of length at most `64 W` as two arrays of bit planes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct Packed<const W: usize> {
    pub lo: [u64; W],
    pub hi: [u64; W],
}

impl<const W: usize> Packed<W> {
    pub const ZERO: Self = Packed {
        lo: [0; W],
        hi: [0; W],
    };

    pub fn from_vector(v: &Gf4Vector) -> Self {
        let mut p = Self::ZERO;
        p.lo[..v.lo_words().len()].copy_from_slice(v.lo_words());
        p.hi[..v.hi_words().len()].copy_from_slice(v.hi_words());
        p
    }

    pub fn to_vector(self, len: usize) -> Gf4Vector {
        Gf4Vector::from_planes(len, self.lo.to_vec(), self.hi.to_vec())
    }

    /// A mask with bit `i` set for each `i` in `cols`.
    pub fn mask(cols: &[usize]) -> [u64; W] {
        let mut m = [0u64; W];
        for &c in cols {
            m[c / 64] |= 1 << (c % 64);
        }
        m
    }

    #[inline(always)]
    pub fn xor(&self, other: &Self) -> Self {
        let mut out = *self;
        for i in 0..W {
            out.lo[i] ^= other.lo[i];
            out.hi[i] ^= other.hi[i];
        }
        out
    }

    #[inline(always)]
    pub fn weight(&self) -> u32 {
        let mut w = 0;
        for i in 0..W {
            w += (self.lo[i] | self.hi[i]).count_ones();
        }
        w
    }

    #[inline(always)]
    pub fn weight_on(&self, mask: &[u64; W]) -> u32 {
        let mut w = 0;
        for i in 0..W {
            w += ((self.lo[i] | self.hi[i]) & mask[i]).count_ones();
        }
        w
    }

    /// Multiplication by `w`.
    #[inline(always)]
    pub fn times_w(&self) -> Self {
        let mut out = *self;
        for i in 0..W {
            out.lo[i] = self.hi[i];
            out.hi[i] = self.lo[i] ^ self.hi[i];
        }
        out
    }

    /// The three nonzero multiples `(x, w x, v x)`.
    pub fn multiples(&self) -> [Self; 3] {
        let w = self.times_w();
        [*self, w, w.times_w()]
    }
}

/// Calls `$body` with the const `$w` bound to the word count needed for
/// length `$n`, or evaluates `$fallback` when the length is too large.
macro_rules! with_width {
    ($n:expr, $w:ident => $body:expr, _ => $fallback:expr) => {
        match ($n).div_ceil(64) {
            0 | 1 => {
                const $w: usize = 1;
                $body
            }
            2 => {
                const $w: usize = 2;
                $body
            }
            3 => {
                const $w: usize = 3;
                $body
            }
            4 => {
                const $w: usize = 4;
                $body
            }
            5..=8 => {
                const $w: usize = 8;
                $body
            }
            _ => $fallback,
        }
    };
}

pub(crate) use with_width;

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Gf4;

    #[test]
    fn round_trip_and_multiples() {
        let v = Gf4Vector::parse(&"1wv0".repeat(30)).unwrap();
        let p = Packed::<2>::from_vector(&v);
        assert_eq!(p.to_vector(120), v);
        assert_eq!(p.weight() as usize, v.weight());
        let [a, b, c] = p.multiples();
        assert_eq!(a.to_vector(120), v);
        assert_eq!(b.to_vector(120), v.scaled(Gf4::W));
        assert_eq!(c.to_vector(120), v.scaled(Gf4::V));
        let m = Packed::<2>::mask(&[0, 1, 3, 64, 65]);
        assert_eq!(p.weight_on(&m), 4);
    }
}
