//! Additive codes under the trace inner product and the quantum code
//! parameters they determine.
//!
//! A linear code over GF(4) is viewed as a GF(2)-space spanned by its rows
//! and their `w`-multiples. An additive code `C` with `|C| = 2^(n-k)` that is
//! trace self-orthogonal gives a quantum `[[n, k, d]]` code; for `k = 0`
//! (self-dual `C`) the distance is the minimum weight of `C`.

use serde::Serialize;

use crate::code::LinearCode;
use crate::error::{Error, Result};
use crate::gf4::{Gf4, Gf4Vector};
use crate::weight::WeightReport;

/// Trace inner product `sum (x_i y_i^2 + x_i^2 y_i)`, as 0 or 1.
pub fn trace_inner(x: &Gf4Vector, y: &Gf4Vector) -> Result<u8> {
    Ok(x.trace_inner(y)?.bits())
}

/// Largest `dim C*` for which [`AdditiveCode::quantum_params`] enumerates.
pub const MAX_ENUMERATED_DUAL_DIM: usize = 30;

/// Bits `2i` and `2i + 1` hold the two planes of symbol `i`.
fn to_bits(v: &Gf4Vector) -> Vec<u64> {
    let mut out = vec![0u64; (2 * v.len()).div_ceil(64)];
    for (i, x) in v.iter().enumerate() {
        let b = u64::from(x.bits());
        out[(2 * i) / 64] |= (b & 1) << ((2 * i) % 64);
        out[(2 * i + 1) / 64] |= (b >> 1) << ((2 * i + 1) % 64);
    }
    out
}

fn from_bits(bits: &[u64], n: usize) -> Gf4Vector {
    let bit = |j: usize| ((bits[j / 64] >> (j % 64)) & 1) as u8;
    let syms: Vec<Gf4> = (0..n)
        .map(|i| Gf4::from_bits(bit(2 * i) | (bit(2 * i + 1) << 1)))
        .collect();
    Gf4Vector::from_symbols(&syms)
}

fn lowest_bit(bits: &[u64]) -> Option<usize> {
    bits.iter()
        .enumerate()
        .find(|(_, w)| **w != 0)
        .map(|(i, w)| 64 * i + w.trailing_zeros() as usize)
}

fn xor_into(a: &mut [u64], b: &[u64]) {
    for (x, y) in a.iter_mut().zip(b) {
        *x ^= y;
    }
}

/// A GF(2)-subspace of `GF(4)^n`, kept as a reduced echelon basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdditiveCode {
    n: usize,
    rows: Vec<Vec<u64>>,
    pivots: Vec<usize>,
}

impl AdditiveCode {
    /// Span of `generators` over GF(2).
    pub fn span(generators: &[Gf4Vector], n: usize) -> Result<Self> {
        let mut c = AdditiveCode {
            n,
            rows: Vec::new(),
            pivots: Vec::new(),
        };
        for g in generators {
            if g.len() != n {
                return Err(Error::LengthMismatch { left: n, right: g.len() });
            }
            c.insert(to_bits(g));
        }
        Ok(c)
    }

    /// The additive view of a linear code: rows and their `w`-multiples.
    pub fn from_linear(code: &LinearCode) -> Self {
        let gens: Vec<Gf4Vector> = code
            .generator()
            .rows()
            .iter()
            .flat_map(|r| [r.clone(), r.scaled(Gf4::W)])
            .collect();
        AdditiveCode::span(&gens, code.n()).expect("rows have the code length")
    }

    fn reduce(&self, mut v: Vec<u64>) -> Vec<u64> {
        for (r, &p) in self.rows.iter().zip(&self.pivots) {
            if (v[p / 64] >> (p % 64)) & 1 == 1 {
                xor_into(&mut v, r);
            }
        }
        v
    }

    fn insert(&mut self, v: Vec<u64>) -> bool {
        let v = self.reduce(v);
        let Some(p) = lowest_bit(&v) else {
            return false;
        };
        for r in &mut self.rows {
            if (r[p / 64] >> (p % 64)) & 1 == 1 {
                xor_into(r, &v);
            }
        }
        self.rows.push(v);
        self.pivots.push(p);
        true
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// GF(2)-dimension, so the code has `2^dim` elements.
    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn basis(&self) -> Vec<Gf4Vector> {
        self.rows.iter().map(|r| from_bits(r, self.n)).collect()
    }

    pub fn contains(&self, v: &Gf4Vector) -> bool {
        v.len() == self.n && lowest_bit(&self.reduce(to_bits(v))).is_none()
    }

    pub fn is_trace_self_orthogonal(&self) -> bool {
        let b = self.basis();
        b.iter()
            .enumerate()
            .all(|(i, x)| b[i + 1..].iter().all(|y| x.trace_inner(y).expect("same length").is_zero()))
    }

    /// `C* = { y : trace_inner(x, y) = 0 for all x in C }`.
    pub fn trace_dual(&self) -> AdditiveCode {
        // Each basis vector gives one linear condition on the 2n bits of y.
        let units: Vec<Gf4Vector> = (0..2 * self.n)
            .map(|j| {
                let mut u = Gf4Vector::zeros(self.n);
                u.set(j / 2, if j % 2 == 0 { Gf4::ONE } else { Gf4::W });
                u
            })
            .collect();
        let basis = self.basis();
        let conditions: Vec<Vec<bool>> = basis
            .iter()
            .map(|x| {
                units
                    .iter()
                    .map(|u| !x.trace_inner(u).expect("same length").is_zero())
                    .collect()
            })
            .collect();
        // Null space over GF(2) by Gauss-Jordan on the condition matrix.
        let m = 2 * self.n;
        let mut rows = conditions;
        let mut pivot_cols = Vec::new();
        let mut r = 0;
        for c in 0..m {
            let Some(p) = (r..rows.len()).find(|&i| rows[i][c]) else {
                continue;
            };
            rows.swap(r, p);
            for i in 0..rows.len() {
                if i != r && rows[i][c] {
                    let src = rows[r].clone();
                    for (a, b) in rows[i].iter_mut().zip(src) {
                        *a ^= b;
                    }
                }
            }
            pivot_cols.push(c);
            r += 1;
        }
        let free: Vec<usize> = (0..m).filter(|c| !pivot_cols.contains(c)).collect();
        let gens: Vec<Gf4Vector> = free
            .iter()
            .map(|&f| {
                let mut bits = vec![0u64; m.div_ceil(64)];
                bits[f / 64] |= 1 << (f % 64);
                for (i, &pc) in pivot_cols.iter().enumerate() {
                    if rows[i][f] {
                        bits[pc / 64] |= 1 << (pc % 64);
                    }
                }
                from_bits(&bits, self.n)
            })
            .collect();
        AdditiveCode::span(&gens, self.n).expect("same length")
    }

    pub fn is_trace_self_dual(&self) -> bool {
        self.dim() == self.n && self.is_trace_self_orthogonal()
    }

    /// Quantum parameters by direct enumeration: `k = n - dim C`, and `d` is
    /// the least weight in `C* \ C` (or in `C \ {0}` when `k = 0`).
    pub fn quantum_params(&self, source: &str) -> Result<QuantumParams> {
        if !self.is_trace_self_orthogonal() {
            return Err(Error::InvalidArgument(
                "additive code is not trace self-orthogonal".to_string(),
            ));
        }
        let k = self.n - self.dim();
        let (space, exclude) = if k == 0 { (self.clone(), None) } else { (self.trace_dual(), Some(self)) };
        if space.dim() > MAX_ENUMERATED_DUAL_DIM {
            return Err(Error::SpaceTooLarge(format!(
                "{} basis vectors to enumerate",
                space.dim()
            )));
        }
        let basis = space.basis();
        let mut cur = Gf4Vector::zeros(self.n);
        let mut best: Option<usize> = None;
        for step in 1u64..(1u64 << basis.len()) {
            cur.add_assign(&basis[step.trailing_zeros() as usize]);
            let w = cur.weight();
            if best.map_or(true, |b| w < b) && exclude.map_or(true, |c| !c.contains(&cur)) {
                best = Some(w);
            }
        }
        let d = best.ok_or_else(|| Error::InvalidArgument("no vector to measure".to_string()))?;
        Ok(QuantumParams {
            n: self.n,
            k,
            d,
            source: Provenance {
                code: source.to_string(),
                rule: if k == 0 {
                    "additive self-dual code; d is its minimum weight".to_string()
                } else {
                    "trace self-orthogonal code; d is the least weight outside it in its trace dual"
                        .to_string()
                },
            },
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Provenance {
    pub code: String,
    pub rule: String,
}

/// Parameters `[[n, k, d]]` of a quantum code with their origin.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuantumParams {
    pub n: usize,
    pub k: usize,
    pub d: usize,
    pub source: Provenance,
}

impl QuantumParams {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("params serialize")
    }
}

impl std::fmt::Display for QuantumParams {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[[{}, {}, {}]]", self.n, self.k, self.d)
    }
}

/// Whether the additive view of `code` equals its trace dual.
pub fn is_trace_self_dual(code: &LinearCode) -> bool {
    AdditiveCode::from_linear(code).is_trace_self_dual()
}

/// `[[n, 0, d]]` from a Hermitian self-dual code and a certified weight report.
pub fn quantum_from_self_dual(code: &LinearCode, report: &WeightReport, source: &str) -> Result<QuantumParams> {
    if !code.is_hermitian_self_dual() {
        return Err(Error::NotSelfDual);
    }
    if report.n != code.n() || report.k != code.k() {
        return Err(Error::InvalidArgument(format!(
            "weight report is for [{}, {}], code is [{}, {}]",
            report.n,
            report.k,
            code.n(),
            code.k()
        )));
    }
    let d = report.certified_d()?;
    Ok(QuantumParams {
        n: code.n(),
        k: 0,
        d,
        source: Provenance {
            code: source.to_string(),
            rule: "Hermitian self-dual linear code, hence additive self-dual; d is its certified minimum weight"
                .to_string(),
        },
    })
}
