//! Linear codes over GF(4) held in reduced row-echelon form.

use std::fmt;

use crate::error::{Error, Result};
use crate::gf4::{Gf4, Gf4Matrix, Gf4Vector};

/// A linear `[n, k]` code. The generator is always in reduced row-echelon
/// form with unit pivots, so two codes are equal iff their generators are.
/// The zero code (`k = 0`) is representable so that duals are total.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LinearCode {
    n: usize,
    generator: Gf4Matrix,
    pivots: Vec<usize>,
}

/// Reduced row-echelon form; returns the nonzero rows and their pivot columns.
pub(crate) fn rref(rows: Vec<Gf4Vector>, n: usize) -> (Vec<Gf4Vector>, Vec<usize>) {
    let mut rows = rows;
    let mut pivots = Vec::new();
    let mut rank = 0;
    for col in 0..n {
        if rank == rows.len() {
            break;
        }
        let Some(p) = (rank..rows.len()).find(|&i| !rows[i].get(col).is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let inv = rows[rank].get(col).inv().expect("pivot is nonzero");
        let pivot = rows[rank].scaled(inv);
        for (i, r) in rows.iter_mut().enumerate() {
            if i != rank {
                let c = r.get(col);
                if !c.is_zero() {
                    r.add_scaled(c, &pivot);
                }
            }
        }
        rows[rank] = pivot;
        pivots.push(col);
        rank += 1;
    }
    rows.truncate(rank);
    (rows, pivots)
}

impl LinearCode {
    /// Code spanned by the rows of `rows`. Dependent rows are dropped.
    pub fn from_generator(rows: &Gf4Matrix) -> Result<Self> {
        if rows.nrows() == 0 || rows.is_zero() {
            return Err(Error::ZeroMatrix);
        }
        Ok(LinearCode::span(rows.rows().to_vec(), rows.ncols()))
    }

    /// Span of arbitrary vectors of length `n`; may be the zero code.
    pub fn span(rows: Vec<Gf4Vector>, n: usize) -> Self {
        let (rows, pivots) = rref(rows, n);
        LinearCode {
            n,
            generator: Gf4Matrix::from_rows_with_cols(rows, n).expect("uniform lengths"),
            pivots,
        }
    }

    pub fn zero_code(n: usize) -> Self {
        LinearCode::span(Vec::new(), n)
    }

    pub fn full_space(n: usize) -> Self {
        LinearCode::span(Gf4Matrix::identity(n).into_rows(), n)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn k(&self) -> usize {
        self.generator.nrows()
    }

    pub fn generator(&self) -> &Gf4Matrix {
        &self.generator
    }

    /// Pivot columns of the reduced generator; an information set.
    pub fn info_set(&self) -> &[usize] {
        &self.pivots
    }

    pub fn is_zero_code(&self) -> bool {
        self.k() == 0
    }

    /// Codeword `m G` for a message of length `k`.
    pub fn encode(&self, message: &[Gf4]) -> Result<Gf4Vector> {
        if message.len() != self.k() {
            return Err(Error::LengthMismatch {
                left: message.len(),
                right: self.k(),
            });
        }
        let mut out = Gf4Vector::zeros(self.n);
        for (c, r) in message.iter().zip(self.generator.rows()) {
            out.add_scaled(*c, r);
        }
        Ok(out)
    }

    /// Membership by reduction against the reduced generator.
    pub fn contains(&self, x: &Gf4Vector) -> Result<bool> {
        if x.len() != self.n {
            return Err(Error::LengthMismatch {
                left: x.len(),
                right: self.n,
            });
        }
        let mut r = x.clone();
        for (row, &p) in self.generator.rows().iter().zip(&self.pivots) {
            let c = r.get(p);
            if !c.is_zero() {
                r.add_scaled(c, row);
            }
        }
        Ok(r.is_zero())
    }

    /// Whether every codeword of `self` lies in `other`.
    pub fn is_subcode_of(&self, other: &LinearCode) -> Result<bool> {
        for r in self.generator.rows() {
            if !other.contains(r)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Euclidean dual: for each non-pivot column `f`, the vector with a 1 at
    /// `f` and `-G[i][f] = G[i][f]` at pivot `p_i`.
    pub fn euclidean_dual(&self) -> LinearCode {
        let mut is_pivot = vec![false; self.n];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        let rows = (0..self.n)
            .filter(|&f| !is_pivot[f])
            .map(|f| {
                let mut h = Gf4Vector::zeros(self.n);
                h.set(f, Gf4::ONE);
                for (row, &p) in self.generator.rows().iter().zip(&self.pivots) {
                    h.set(p, row.get(f));
                }
                h
            })
            .collect();
        LinearCode::span(rows, self.n)
    }

    /// `C^{⊥H} = conj(C^{⊥E})` since `<x, y>_H = x . conj(y)`.
    pub fn hermitian_dual(&self) -> LinearCode {
        let e = self.euclidean_dual();
        let rows = e.generator.rows().iter().map(Gf4Vector::conj).collect();
        LinearCode::span(rows, self.n)
    }

    /// All generator rows pairwise Hermitian-orthogonal (including each with itself).
    pub fn is_hermitian_self_orthogonal(&self) -> bool {
        let rows = self.generator.rows();
        rows.iter().enumerate().all(|(i, a)| {
            rows[i..]
                .iter()
                .all(|b| a.hermitian_inner(b).expect("same length").is_zero())
        })
    }

    /// `C = C^{⊥H}`. When the generator has the form `(I | M)` this is
    /// `M conj(M)^T = I` together with `2k = n`; otherwise the dual is compared.
    pub fn is_hermitian_self_dual(&self) -> bool {
        if 2 * self.k() != self.n || self.k() == 0 {
            return false;
        }
        if self.pivots.iter().enumerate().all(|(i, &p)| i == p) {
            let k = self.k();
            let m = self.redundancy_block(k);
            let prod = m.mul(&m.conj_transpose()).expect("square");
            return prod == Gf4Matrix::identity(k);
        }
        self.is_hermitian_self_dual_by_definition()
    }

    pub fn is_hermitian_self_dual_by_definition(&self) -> bool {
        *self == self.hermitian_dual()
    }

    /// Columns `k..n` of the generator.
    fn redundancy_block(&self, k: usize) -> Gf4Matrix {
        let rows = self
            .generator
            .rows()
            .iter()
            .map(|r| r.slice(k, self.n))
            .collect();
        Gf4Matrix::from_rows_with_cols(rows, self.n - k).expect("uniform")
    }

    /// Text record: `n=<n> k=<k>` followed by one generator row per line.
    pub fn to_record(&self) -> String {
        let mut s = format!("n={} k={}\n", self.n, self.k());
        for r in self.generator.rows() {
            s.push_str(&r.to_string());
            s.push('\n');
        }
        s
    }

    /// Parses one or more code records. Blank lines and `#` comments are skipped.
    pub fn parse_records(text: &str) -> Result<Vec<LinearCode>> {
        let mut lines = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'));
        let mut out = Vec::new();
        while let Some(header) = lines.next() {
            let (n, k) = parse_header(header)?;
            let mut rows = Vec::with_capacity(k);
            for _ in 0..k {
                let line = lines
                    .next()
                    .ok_or_else(|| Error::Parse(format!("expected {k} rows after {header:?}")))?;
                let row = Gf4Vector::parse(line)?;
                if row.len() != n {
                    return Err(Error::LengthMismatch {
                        left: n,
                        right: row.len(),
                    });
                }
                rows.push(row);
            }
            let code = LinearCode::span(rows, n);
            if code.k() != k {
                return Err(Error::Parse(format!(
                    "rows have rank {} but header says k={k}",
                    code.k()
                )));
            }
            out.push(code);
        }
        Ok(out)
    }
}

fn parse_header(line: &str) -> Result<(usize, usize)> {
    let mut n = None;
    let mut k = None;
    for tok in line.split_whitespace() {
        match tok.split_once('=') {
            Some(("n", v)) => n = v.parse().ok(),
            Some(("k", v)) => k = v.parse().ok(),
            _ => return Err(Error::Parse(format!("bad header token {tok:?}"))),
        }
    }
    match (n, k) {
        (Some(n), Some(k)) if k <= n => Ok((n, k)),
        _ => Err(Error::Parse(format!("bad header {line:?}"))),
    }
}

impl Ord for LinearCode {
    /// By length, then dimension, then the reduced generator rows in order.
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.n, self.k())
            .cmp(&(other.n, other.k()))
            .then_with(|| self.generator.rows().cmp(other.generator.rows()))
    }
}

impl PartialOrd for LinearCode {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for LinearCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LinearCode[{}, {}]", self.n, self.k())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn code(rows: &[&str]) -> LinearCode {
        LinearCode::from_generator(&Gf4Matrix::parse_rows(rows).unwrap()).unwrap()
    }

    #[test]
    fn dimensions() {
        let c = LinearCode::from_generator(&Gf4Matrix::identity(3)).unwrap();
        assert_eq!((c.n(), c.k()), (3, 3));
        let c = code(&["1w0v", "1w0v"]);
        assert_eq!(c.k(), 1);
        assert_eq!(
            LinearCode::from_generator(&Gf4Matrix::zeros(2, 3)),
            Err(Error::ZeroMatrix)
        );
    }

    #[test]
    fn dual_examples() {
        let c = code(&["11"]);
        assert_eq!(c.hermitian_dual(), c);
        assert!(c.is_hermitian_self_dual());
        let d = LinearCode::full_space(4).hermitian_dual();
        assert!(d.is_zero_code());
        assert_eq!(d.n(), 4);
        assert_eq!(LinearCode::zero_code(4).hermitian_dual(), LinearCode::full_space(4));
        assert!(!code(&["10"]).is_hermitian_self_dual());
    }

    #[test]
    fn membership() {
        let c = code(&["1w00", "001v"]);
        assert!(c.contains(&Gf4Vector::zeros(4)).unwrap());
        for r in c.generator().rows() {
            assert!(c.contains(r).unwrap());
        }
        assert!(c.contains(&Gf4Vector::parse("wv1v").unwrap()).unwrap());
        assert!(!c.contains(&Gf4Vector::parse("1000").unwrap()).unwrap());
        assert!(c.contains(&Gf4Vector::zeros(3)).is_err());
    }

    #[test]
    fn record_round_trip() {
        let c = code(&["1w0v1", "01vv0"]);
        let text = c.to_record();
        assert_eq!(text, "n=5 k=2\n100w1\n01vv0\n".replace("100w1", &c.generator().row(0).to_string()));
        let back = LinearCode::parse_records(&text).unwrap();
        assert_eq!(back, vec![c.clone()]);
        assert_eq!(back[0].to_record(), text);
        assert!(LinearCode::parse_records("n=5 k=2\n1w0v1\n").is_err());
        assert!(LinearCode::parse_records("n=5 k=2\n1w0v1\n1w0v1\n").is_err());
    }

    fn arb_code(max_n: usize) -> impl Strategy<Value = LinearCode> {
        (1..=max_n).prop_flat_map(|n| {
            proptest::collection::vec(proptest::collection::vec(0u8..4, n), 1..=n).prop_map(
                move |rows| {
                    let rows = rows
                        .iter()
                        .map(|r| {
                            Gf4Vector::from_symbols(
                                &r.iter().map(|&b| Gf4::from_bits(b)).collect::<Vec<_>>(),
                            )
                        })
                        .collect();
                    LinearCode::span(rows, n)
                },
            )
        })
    }

    proptest! {
        #[test]
        fn dual_is_involution(c in arb_code(24)) {
            let d = c.hermitian_dual();
            prop_assert_eq!(d.k(), c.n() - c.k());
            for a in c.generator().rows() {
                for b in d.generator().rows() {
                    prop_assert!(a.hermitian_inner(b).unwrap().is_zero());
                }
            }
            prop_assert_eq!(d.hermitian_dual(), c);
        }

        #[test]
        fn fast_path_agrees_with_definition(c in arb_code(10)) {
            prop_assert_eq!(c.is_hermitian_self_dual(), c.is_hermitian_self_dual_by_definition());
        }
    }
}
