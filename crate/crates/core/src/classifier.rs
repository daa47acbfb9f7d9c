//! Exhaustive and random searches for self-dual modified four μ-circulant
//! codes.
//!
//! A pair `(A, B)` gives a self-dual code exactly when
//! `A conj(A)^T = I + B conj(B)^T`, so the search buckets candidate first rows
//! by these two products and joins the buckets instead of testing every pair.
//! First rows of length at most 32 are handled as packed `u32` bit planes.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::constructions::ModifiedFourCirculantCode;
use crate::equivalence::{dedup_by_equivalence, EquivalenceBudget, EquivalenceKind};
use crate::error::{Error, Result};
use crate::gf4::{Gf4, Gf4Vector};
use crate::weight::{min_weight_at_least, min_weight_info_set, EnumerationBudget};

/// Largest block size for packed rows.
pub const MAX_PACKED_N: usize = 32;
/// Largest block size accepted by the exhaustive join.
pub const MAX_EXHAUSTIVE_N: usize = 11;

/// A first row of length `n <= 32` as two bit planes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct PackedRow {
    hi: u32,
    lo: u32,
}

impl PackedRow {
    pub const ZERO: PackedRow = PackedRow { hi: 0, lo: 0 };

    /// The row with index `x`: symbol `i` is bits `2i, 2i+1` of `x`.
    pub fn from_index(x: u64, n: usize) -> PackedRow {
        let mut r = PackedRow::ZERO;
        for i in 0..n {
            r.set(i, Gf4::from_bits((x >> (2 * i)) as u8 & 3));
        }
        r
    }

    pub fn from_vector(v: &Gf4Vector) -> PackedRow {
        let mut r = PackedRow::ZERO;
        for (i, x) in v.iter().enumerate() {
            r.set(i, x);
        }
        r
    }

    pub fn to_vector(self, n: usize) -> Gf4Vector {
        Gf4Vector::from_symbols(&(0..n).map(|i| self.get(i)).collect::<Vec<_>>())
    }

    #[inline]
    pub fn get(self, i: usize) -> Gf4 {
        Gf4::from_bits(((self.lo >> i) & 1) as u8 | (((self.hi >> i) & 1) as u8) << 1)
    }

    #[inline]
    fn set(&mut self, i: usize, x: Gf4) {
        let m = 1u32 << i;
        self.lo = (self.lo & !m) | (u32::from(x.lo()) << i);
        self.hi = (self.hi & !m) | (u32::from(x.hi()) << i);
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.lo | self.hi == 0
    }

    #[inline]
    fn xor(self, o: PackedRow) -> PackedRow {
        PackedRow {
            lo: self.lo ^ o.lo,
            hi: self.hi ^ o.hi,
        }
    }

    #[inline]
    fn scaled(self, c: Gf4) -> PackedRow {
        let (lo, hi) = match c.bits() {
            0 => (0, 0),
            1 => (self.lo, self.hi),
            2 => (self.hi, self.lo ^ self.hi),
            _ => (self.lo ^ self.hi, self.lo),
        };
        PackedRow { lo, hi }
    }

    #[inline]
    fn conj(self) -> PackedRow {
        PackedRow {
            lo: self.lo ^ self.hi,
            hi: self.hi,
        }
    }

    pub fn first_nonzero(self) -> Option<Gf4> {
        let m = self.lo | self.hi;
        (m != 0).then(|| self.get(m.trailing_zeros() as usize))
    }
}

/// μ-circulant arithmetic on packed first rows of a fixed size.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PackedCirculant {
    pub n: usize,
    pub mu: Gf4,
    mask: u32,
}

impl PackedCirculant {
    pub fn new(n: usize, mu: Gf4) -> Result<Self> {
        if n == 0 || n > MAX_PACKED_N {
            return Err(Error::InvalidArgument(format!(
                "block size must be in 1..={MAX_PACKED_N}, got {n}"
            )));
        }
        if mu.is_zero() {
            return Err(Error::InvalidMu('0'));
        }
        Ok(PackedCirculant {
            n,
            mu,
            mask: if n == 32 { u32::MAX } else { (1 << n) - 1 },
        })
    }

    /// `x E_n(μ)`.
    #[inline]
    pub fn shift(&self, x: PackedRow) -> PackedRow {
        let top = x.get(self.n - 1);
        let mut y = PackedRow {
            lo: (x.lo << 1) & self.mask,
            hi: (x.hi << 1) & self.mask,
        };
        let w = self.mu * top;
        y.lo |= u32::from(w.lo());
        y.hi |= u32::from(w.hi());
        y
    }

    /// First row of the product of the circulants with first rows `a`, `b`.
    pub fn mul(&self, a: PackedRow, b: PackedRow) -> PackedRow {
        let mut acc = PackedRow::ZERO;
        let mut row = b;
        for i in 0..self.n {
            let c = a.get(i);
            if !c.is_zero() {
                acc = acc.xor(row.scaled(c));
            }
            row = self.shift(row);
        }
        acc
    }

    /// First row of `conj(A)^T`: `(r_0^2, (μ r_{n-1})^2, ..., (μ r_1)^2)`.
    pub fn conj_transpose(&self, a: PackedRow) -> PackedRow {
        let mut out = PackedRow::ZERO;
        out.set(0, a.get(0));
        for j in 1..self.n {
            out.set(j, self.mu * a.get(self.n - j));
        }
        out.conj()
    }

    pub fn hermitian_square(&self, a: PackedRow) -> PackedRow {
        self.mul(a, self.conj_transpose(a))
    }

    /// Key of the `A` side of the join.
    #[inline]
    pub fn key_a(&self, a: PackedRow) -> PackedRow {
        self.hermitian_square(a)
    }

    /// Key of the `B` side of the join: `I + B conj(B)^T`.
    #[inline]
    pub fn key_b(&self, b: PackedRow) -> PackedRow {
        let mut k = self.hermitian_square(b);
        k.lo ^= 1;
        k
    }

    pub fn is_self_dual_pair(&self, a: PackedRow, b: PackedRow) -> bool {
        self.key_a(a) == self.key_b(b)
    }

    /// Least image of `x` under `x -> c x E^s`. Replacing `A` or `B` by such
    /// an image gives an equivalent code, so one row per orbit suffices.
    pub fn orbit_canonical(&self, x: PackedRow) -> PackedRow {
        let mut best = x;
        let mut y = x;
        for _ in 0..self.n {
            for c in Gf4::NONZERO {
                best = best.min(y.scaled(c));
            }
            y = self.shift(y);
        }
        best
    }

    /// `x` scaled so its first nonzero symbol is 1.
    pub fn leading_one(&self, x: PackedRow) -> PackedRow {
        match x.first_nonzero() {
            Some(c) => x.scaled(c.inv().expect("nonzero")),
            None => x,
        }
    }

    pub fn space_size(&self) -> u64 {
        1u64 << (2 * self.n)
    }

    /// Pairs of orbit representatives reached from `(a, b)` by swapping,
    /// conjugate-transposing both, or conjugate-transposing `B`; the least
    /// one names the class of the pair.
    pub fn pair_canonical(&self, a: PackedRow, b: PackedRow) -> (PackedRow, PackedRow) {
        let ca = self.conj_transpose(a);
        let cb = self.conj_transpose(b);
        let pairs = [
            (a, b),
            (b, a),
            (ca, cb),
            (cb, ca),
            (a, cb),
            (cb, a),
            (ca, b),
            (b, ca),
        ];
        pairs
            .iter()
            .map(|&(x, y)| (self.orbit_canonical(x), self.orbit_canonical(y)))
            .min()
            .expect("nonempty")
    }

    pub fn build(&self, a: PackedRow, b: PackedRow) -> ModifiedFourCirculantCode {
        ModifiedFourCirculantCode::new(self.mu, a.to_vector(self.n), b.to_vector(self.n))
            .expect("valid shape")
    }
}

/// How the row space is cut down before joining.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub enum Reduction {
    /// `A` rows with leading symbol 1 against all `B` rows, plus `A = 0`
    /// against `B` rows with leading symbol 1.
    LeadingOne,
    /// One row per orbit of `x -> c x E^s` on each side; survivors are then
    /// merged under the swap and conjugate-transpose symmetries.
    Orbits,
}

/// All pairs `(a, b)` satisfying the self-duality condition under the
/// chosen reduction, sorted.
pub fn meet_in_middle_join(pc: &PackedCirculant, reduction: Reduction) -> Result<Vec<(PackedRow, PackedRow)>> {
    if pc.n > MAX_EXHAUSTIVE_N {
        return Err(Error::SpaceTooLarge(format!(
            "block size {} exceeds {MAX_EXHAUSTIVE_N}",
            pc.n
        )));
    }
    let all: Vec<PackedRow> = (0..pc.space_size())
        .map(|x| PackedRow::from_index(x, pc.n))
        .collect();
    let (a_side, b_side): (Vec<PackedRow>, Vec<PackedRow>) = match reduction {
        Reduction::LeadingOne => (
            all.iter().copied().filter(|x| x.first_nonzero() == Some(Gf4::ONE)).collect(),
            all.clone(),
        ),
        Reduction::Orbits => {
            let reps: Vec<PackedRow> = all
                .par_iter()
                .copied()
                .filter(|&x| pc.orbit_canonical(x) == x)
                .collect();
            (reps.clone(), reps)
        }
    };
    let mut buckets: HashMap<PackedRow, Vec<PackedRow>> = HashMap::new();
    let keyed: Vec<(PackedRow, PackedRow)> = b_side.par_iter().map(|&b| (pc.key_b(b), b)).collect();
    for (k, b) in keyed {
        buckets.entry(k).or_default().push(b);
    }
    let mut out: Vec<(PackedRow, PackedRow)> = a_side
        .par_iter()
        .flat_map_iter(|&a| {
            buckets
                .get(&pc.key_a(a))
                .into_iter()
                .flatten()
                .map(move |&b| (a, b))
        })
        .collect();
    if reduction == Reduction::LeadingOne {
        // A = 0 needs B conj(B)^T = I; scale B instead of A.
        let zero_key = pc.key_a(PackedRow::ZERO);
        out.extend(
            buckets
                .get(&zero_key)
                .into_iter()
                .flatten()
                .filter(|b| b.first_nonzero() == Some(Gf4::ONE))
                .map(|&b| (PackedRow::ZERO, b)),
        );
    }
    out.sort_unstable();
    Ok(out)
}

/// Every self-dual pair by testing all `4^(2n)` combinations.
pub fn brute_force_pairs(pc: &PackedCirculant, reduction: Reduction) -> Vec<(PackedRow, PackedRow)> {
    let all: Vec<PackedRow> = (0..pc.space_size())
        .map(|x| PackedRow::from_index(x, pc.n))
        .collect();
    let mut out = Vec::new();
    for &a in &all {
        for &b in &all {
            let keep = match reduction {
                Reduction::LeadingOne => match a.first_nonzero() {
                    Some(c) => c == Gf4::ONE,
                    None => b.first_nonzero() == Some(Gf4::ONE),
                },
                Reduction::Orbits => pc.orbit_canonical(a) == a && pc.orbit_canonical(b) == b,
            };
            if keep && pc.is_self_dual_pair(a, b) {
                out.push((a, b));
            }
        }
    }
    out.sort_unstable();
    out
}

/// Options for the classification pipeline.
#[derive(Clone, Copy, Debug)]
pub struct ClassifyOptions {
    pub reduction: Reduction,
    pub kind: EquivalenceKind,
    pub enumeration: EnumerationBudget,
    pub equivalence: EquivalenceBudget,
}

impl Default for ClassifyOptions {
    fn default() -> Self {
        ClassifyOptions {
            reduction: Reduction::Orbits,
            kind: EquivalenceKind::Monomial,
            enumeration: EnumerationBudget::default(),
            equivalence: EquivalenceBudget::default(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase", tag = "kind")]
pub enum SearchMode {
    Exhaustive { reduction: Reduction },
    Random { seed: u64, trials: u64 },
}

/// Result of a search, serializable as a report.
#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct SearchOutcome {
    pub n: usize,
    pub length: usize,
    pub mu: String,
    pub d_target: usize,
    pub mode: SearchMode,
    /// Construction records of the pairs that are self-dual with `d >= d_target`.
    pub survivors: Vec<String>,
    pub class_count: usize,
    pub representatives: Vec<String>,
    /// Largest certified minimum weight among the survivors.
    pub max_weight_found: Option<usize>,
    pub undecided_pairs: usize,
    /// Counts after each stage, in order.
    pub log: Vec<(String, u64)>,
    pub elapsed_seconds: f64,
}

impl SearchOutcome {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("outcome serializes")
    }

    fn empty(pc: &PackedCirculant, d_target: usize, mode: SearchMode) -> Self {
        SearchOutcome {
            n: pc.n,
            length: 4 * pc.n,
            mu: pc.mu.to_string(),
            d_target,
            mode,
            survivors: Vec::new(),
            class_count: 0,
            representatives: Vec::new(),
            max_weight_found: None,
            undecided_pairs: 0,
            log: Vec::new(),
            elapsed_seconds: 0.0,
        }
    }
}

/// Weight filter, exact weights and equivalence classes for candidate pairs.
fn finish(
    pc: &PackedCirculant,
    pairs: Vec<(PackedRow, PackedRow)>,
    d_target: usize,
    opts: &ClassifyOptions,
    out: &mut SearchOutcome,
) -> Result<()> {
    let checked: Vec<Option<(ModifiedFourCirculantCode, usize)>> = pairs
        .par_iter()
        .map(|&(a, b)| {
            let m = pc.build(a, b);
            let code = m.code();
            match min_weight_at_least(&code, d_target, &opts.enumeration)? {
                Some(true) => {
                    let d = min_weight_info_set(&code, &opts.enumeration)?.certified_d()?;
                    Ok(Some((m, d)))
                }
                Some(false) => Ok(None),
                None => Err(Error::BudgetExceeded(format!(
                    "weight filter on {}",
                    m.to_record()
                ))),
            }
        })
        .collect::<Result<_>>()?;
    let survivors: Vec<(ModifiedFourCirculantCode, usize)> = checked.into_iter().flatten().collect();
    out.log.push((format!("minimum weight >= {d_target}"), survivors.len() as u64));
    out.max_weight_found = survivors.iter().map(|s| s.1).max();
    let codes: Vec<_> = survivors.iter().map(|(m, _)| m.code()).collect();
    let report = dedup_by_equivalence(&codes, opts.kind, &opts.equivalence)?;
    out.class_count = report.representatives.len();
    out.undecided_pairs = report.undecided.len();
    let mut reps: Vec<Option<String>> = vec![None; out.class_count];
    for (i, &c) in report.class_of.iter().enumerate() {
        if reps[c].as_ref().map_or(true, |r| survivors[i].0.canonical().to_record() < *r) {
            reps[c] = Some(survivors[i].0.canonical().to_record());
        }
    }
    out.representatives = reps.into_iter().flatten().collect();
    out.survivors = survivors.iter().map(|(m, _)| m.to_record()).collect();
    out.log.push(("equivalence classes".to_string(), out.class_count as u64));
    Ok(())
}

/// Classifies the self-dual codes `C_μ(A, B)` of length `4n` with minimum
/// weight at least `d_target`, up to equivalence.
pub fn exhaustive_classify(
    n: usize,
    mu: Gf4,
    d_target: usize,
    opts: &ClassifyOptions,
) -> Result<SearchOutcome> {
    let t = Instant::now();
    let pc = PackedCirculant::new(n, mu)?;
    let mut out = SearchOutcome::empty(
        &pc,
        d_target,
        SearchMode::Exhaustive {
            reduction: opts.reduction,
        },
    );
    let joined = meet_in_middle_join(&pc, opts.reduction)?;
    out.log.push(("self-dual pairs".to_string(), joined.len() as u64));
    let merged: BTreeSet<_> = joined
        .par_iter()
        .map(|&(a, b)| pc.pair_canonical(a, b))
        .collect::<Vec<_>>()
        .into_iter()
        .collect();
    out.log.push(("after symmetry merge".to_string(), merged.len() as u64));
    let pairs: Vec<(PackedRow, PackedRow)> = merged.into_iter().collect();
    finish(&pc, pairs, d_target, opts, &mut out)?;
    out.elapsed_seconds = t.elapsed().as_secs_f64();
    Ok(out)
}

/// Random search: draws `trials` rows for each side (the `A` side scaled to
/// lead with 1), joins them on the self-duality keys and keeps the pairs
/// with minimum weight at least `d_target`. Reproducible from `seed`.
pub fn random_search(
    n: usize,
    mu: Gf4,
    d_target: usize,
    seed: u64,
    trials: u64,
    opts: &ClassifyOptions,
) -> Result<SearchOutcome> {
    let t = Instant::now();
    let pc = PackedCirculant::new(n, mu)?;
    let mut out = SearchOutcome::empty(&pc, d_target, SearchMode::Random { seed, trials });
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let draw = |rng: &mut ChaCha8Rng| {
        let mut r = PackedRow::ZERO;
        for i in 0..n {
            r.set(i, Gf4::from_bits(rng.gen_range(0..4)));
        }
        r
    };
    let a_rows: Vec<PackedRow> = (0..trials).map(|_| pc.leading_one(draw(&mut rng))).collect();
    let b_rows: Vec<PackedRow> = (0..trials).map(|_| draw(&mut rng)).collect();
    let mut buckets: HashMap<PackedRow, BTreeSet<PackedRow>> = HashMap::new();
    for &b in &b_rows {
        buckets.entry(pc.key_b(b)).or_default().insert(b);
    }
    let mut pairs = BTreeSet::new();
    for &a in &a_rows {
        if let Some(bs) = buckets.get(&pc.key_a(a)) {
            pairs.extend(bs.iter().map(|&b| (a, b)));
        }
    }
    out.log.push(("sampled rows per side".to_string(), trials));
    out.log.push(("self-dual pairs".to_string(), pairs.len() as u64));
    finish(&pc, pairs.into_iter().collect(), d_target, opts, &mut out)?;
    out.elapsed_seconds = t.elapsed().as_secs_f64();
    Ok(out)
}

/// Checks given constructions directly: every self-dual one with
/// `d >= d_target` survives.
pub fn verify_constructions(
    codes: &[ModifiedFourCirculantCode],
    d_target: usize,
    opts: &ClassifyOptions,
) -> Result<BTreeMap<String, Option<usize>>> {
    codes
        .par_iter()
        .map(|m| {
            let verdict = if m.is_self_dual_condition() {
                let d = min_weight_info_set(&m.code(), &opts.enumeration)?.certified_d()?;
                (d >= d_target).then_some(d)
            } else {
                None
            };
            Ok((m.to_record(), verdict))
        })
        .collect()
}
