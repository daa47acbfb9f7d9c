//! Monomial equivalence of codes: invariant signatures for quick
//! inequivalence proofs and an exact backtracking search that returns a
//! verified coordinate map.
//!
//! The search picks a basis of `C1` made of light codewords and tries to map
//! it, word by word, onto codewords of `C2` of the same weights. A monomial
//! map exists exactly when the columns of the two resulting generator
//! matrices agree as a multiset of projective points, so after each
//! assignment the multisets of projective *partial* columns are compared
//! and mismatching branches are cut.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::code::LinearCode;
use crate::error::{Error, Result};
use crate::gf4::{Gf4, Gf4Vector};
use crate::weight::{collect_words, count_words, min_weight, EnumerationBudget};

/// The map `x -> y` with `y[perm[j]] = scalars[j] * x[j]`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MonomialMap {
    perm: Vec<usize>,
    scalars: Vec<Gf4>,
}

impl MonomialMap {
    pub fn new(perm: Vec<usize>, scalars: Vec<Gf4>) -> Result<Self> {
        let n = perm.len();
        if scalars.len() != n {
            return Err(Error::LengthMismatch {
                left: n,
                right: scalars.len(),
            });
        }
        let mut seen = vec![false; n];
        for &p in &perm {
            if p >= n || seen[p] {
                return Err(Error::InvalidArgument("not a permutation".to_string()));
            }
            seen[p] = true;
        }
        if scalars.iter().any(|s| s.is_zero()) {
            return Err(Error::InvalidArgument("zero scalar in monomial map".to_string()));
        }
        Ok(MonomialMap { perm, scalars })
    }

    pub fn identity(n: usize) -> Self {
        MonomialMap {
            perm: (0..n).collect(),
            scalars: vec![Gf4::ONE; n],
        }
    }

    pub fn len(&self) -> usize {
        self.perm.len()
    }

    pub fn is_empty(&self) -> bool {
        self.perm.is_empty()
    }

    pub fn permutation(&self) -> &[usize] {
        &self.perm
    }

    pub fn scalars(&self) -> &[Gf4] {
        &self.scalars
    }

    pub fn apply(&self, x: &Gf4Vector) -> Result<Gf4Vector> {
        if x.len() != self.len() {
            return Err(Error::LengthMismatch {
                left: x.len(),
                right: self.len(),
            });
        }
        let mut y = Gf4Vector::zeros(x.len());
        for j in 0..x.len() {
            y.set(self.perm[j], self.scalars[j] * x.get(j));
        }
        Ok(y)
    }

    pub fn apply_code(&self, c: &LinearCode) -> Result<LinearCode> {
        let rows = c
            .generator()
            .rows()
            .iter()
            .map(|r| self.apply(r))
            .collect::<Result<Vec<_>>>()?;
        Ok(LinearCode::span(rows, c.n()))
    }

    /// `self` followed by `other`.
    pub fn then(&self, other: &MonomialMap) -> Result<MonomialMap> {
        if self.len() != other.len() {
            return Err(Error::LengthMismatch {
                left: self.len(),
                right: other.len(),
            });
        }
        let perm = self.perm.iter().map(|&p| other.perm[p]).collect();
        let scalars = (0..self.len())
            .map(|j| self.scalars[j] * other.scalars[self.perm[j]])
            .collect();
        Ok(MonomialMap { perm, scalars })
    }

    pub fn inverse(&self) -> MonomialMap {
        let n = self.len();
        let mut perm = vec![0; n];
        let mut scalars = vec![Gf4::ONE; n];
        for j in 0..n {
            perm[self.perm[j]] = j;
            scalars[self.perm[j]] = self.scalars[j].inv().expect("nonzero");
        }
        MonomialMap { perm, scalars }
    }
}

impl fmt::Display for MonomialMap {
    /// One-line notation of the permutation (1-based images), then the scalars.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let images: Vec<String> = self.perm.iter().map(|p| (p + 1).to_string()).collect();
        write!(f, "[{}] {}", images.join(" "), crate::gf4::format_symbols(&self.scalars))
    }
}

impl fmt::Debug for MonomialMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MonomialMap({self})")
    }
}

/// Monomial invariants of a code.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct InvariantSignature {
    pub n: usize,
    pub k: usize,
    pub d: usize,
    pub a_d: u64,
    pub a_d_plus_2: u64,
    /// Per coordinate, the number of projective minimum weight words whose
    /// support contains it; sorted.
    pub min_word_coord_profile: Vec<u32>,
    /// Number of unordered pairs of projective minimum weight words by the
    /// size of their support intersection.
    pub pair_intersection_histogram: Vec<u64>,
}

fn support_masks(words: &[Gf4Vector]) -> Vec<Vec<u64>> {
    words.iter().map(Gf4Vector::support_mask).collect()
}

fn intersection(a: &[u64], b: &[u64]) -> usize {
    a.iter().zip(b).map(|(x, y)| (x & y).count_ones() as usize).sum()
}

/// Minimum weight words of `c`, one per scalar class, with `d`.
fn min_words(c: &LinearCode, budget: &EnumerationBudget) -> Result<(usize, Vec<Gf4Vector>)> {
    let report = min_weight(c, budget)?;
    let d = report.certified_d().map_err(|_| {
        Error::BudgetExceeded("minimum weight not certified within budget".to_string())
    })?;
    Ok((d, collect_words(c, &[d], budget)?))
}

pub fn signature(c: &LinearCode, budget: &EnumerationBudget) -> Result<InvariantSignature> {
    let (d, words) = min_words(c, budget)?;
    signature_from_words(c, d, &words, budget)
}

fn signature_from_words(
    c: &LinearCode,
    d: usize,
    words: &[Gf4Vector],
    budget: &EnumerationBudget,
) -> Result<InvariantSignature> {
    let n = c.n();
    let a_d_plus_2 = count_words(c, &[d + 2], budget)?[&(d + 2)];
    let mut profile = vec![0u32; n];
    for w in words {
        for j in w.support() {
            profile[j] += 1;
        }
    }
    profile.sort_unstable();
    let masks = support_masks(words);
    let hist = (0..masks.len())
        .into_par_iter()
        .map(|i| {
            let mut h = vec![0u64; n + 1];
            for j in i + 1..masks.len() {
                h[intersection(&masks[i], &masks[j])] += 1;
            }
            h
        })
        .reduce(
            || vec![0u64; n + 1],
            |mut a, b| {
                for (x, y) in a.iter_mut().zip(b) {
                    *x += y;
                }
                a
            },
        );
    Ok(InvariantSignature {
        n,
        k: c.k(),
        d,
        a_d: 3 * words.len() as u64,
        a_d_plus_2,
        min_word_coord_profile: profile,
        pair_intersection_histogram: hist,
    })
}

/// Which maps count as equivalences.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub enum EquivalenceKind {
    /// Coordinate permutations with nonzero column scalings.
    #[default]
    Monomial,
    /// Monomial maps optionally composed with conjugation.
    Semilinear,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Equivalence {
    /// `map.apply_code(c1) == c2`; `conjugate` means `c1` is conjugated first.
    Equivalent { map: MonomialMap, conjugate: bool },
    Inequivalent,
    Undecided,
}

impl Equivalence {
    pub fn is_equivalent(&self) -> bool {
        matches!(self, Equivalence::Equivalent { .. })
    }
}

/// Limits on one equivalence test.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EquivalenceBudget {
    pub enumeration: EnumerationBudget,
    pub max_nodes: u64,
    pub max_seconds: f64,
}

impl Default for EquivalenceBudget {
    fn default() -> Self {
        EquivalenceBudget {
            enumeration: EnumerationBudget::default(),
            max_nodes: 50_000_000,
            max_seconds: 600.0,
        }
    }
}

fn conjugate_code(c: &LinearCode) -> LinearCode {
    LinearCode::span(c.generator().rows().iter().map(Gf4Vector::conj).collect(), c.n())
}

/// Decides whether `c1` and `c2` are equivalent.
pub fn are_equivalent(c1: &LinearCode, c2: &LinearCode, budget: &EquivalenceBudget) -> Equivalence {
    are_equivalent_with(c1, c2, EquivalenceKind::Monomial, budget)
}

pub fn are_equivalent_with(
    c1: &LinearCode,
    c2: &LinearCode,
    kind: EquivalenceKind,
    budget: &EquivalenceBudget,
) -> Equivalence {
    let first = monomial_search(c1, c2, budget, false);
    if kind == EquivalenceKind::Monomial || first.is_equivalent() {
        return first;
    }
    match monomial_search(&conjugate_code(c1), c2, budget, true) {
        Equivalence::Inequivalent if first == Equivalence::Undecided => Equivalence::Undecided,
        other => other,
    }
}

/// Per-word invariant: how many minimum weight words meet it in each
/// possible intersection size.
fn word_profile(word: &[u64], min_masks: &[Vec<u64>], n: usize) -> Vec<u32> {
    let mut h = vec![0u32; n + 1];
    for m in min_masks {
        h[intersection(word, m)] += 1;
    }
    h
}

/// Light words of each weight from `d` upwards until they span the code.
fn spanning_pool(
    c: &LinearCode,
    d: usize,
    min: Vec<Gf4Vector>,
    budget: &EnumerationBudget,
) -> Result<BTreeMap<usize, Vec<Gf4Vector>>> {
    let mut pool = BTreeMap::new();
    let mut all = min.clone();
    pool.insert(d, min);
    let mut w = d;
    while LinearCode::span(all.clone(), c.n()).k() < c.k() {
        w += 1;
        if w > c.n() {
            break;
        }
        let words = collect_words(c, &[w], budget)?;
        all.extend(words.iter().cloned());
        pool.insert(w, words);
    }
    Ok(pool)
}

struct Candidate {
    word: Gf4Vector,
    profile: Vec<u32>,
}

struct Interner {
    ids: HashMap<(u32, u8), u32>,
}

/// Column state: class id of the projective partial column and the inverse
/// of its first nonzero entry.
#[derive(Clone, Copy)]
struct ColState {
    class: u32,
    norm: Gf4,
}

const ZERO_CLASS: u32 = 0;

fn extend_cols(
    prev: &[ColState],
    row: &Gf4Vector,
    scale: Gf4,
    interner: &mut Option<&mut Interner>,
    frozen: Option<&Interner>,
) -> Option<Vec<ColState>> {
    let mut out = Vec::with_capacity(prev.len());
    for (j, st) in prev.iter().enumerate() {
        let x = scale * row.get(j);
        let (sym, norm) = if st.norm.is_zero() {
            if x.is_zero() {
                (0u8, Gf4::ZERO)
            } else {
                (1u8, x.inv().expect("nonzero"))
            }
        } else {
            ((x * st.norm).bits(), st.norm)
        };
        let key = (st.class, sym);
        let class = match (interner.as_deref_mut(), frozen) {
            (Some(i), _) => {
                let next = i.ids.len() as u32 + 1;
                *i.ids.entry(key).or_insert(next)
            }
            (None, Some(f)) => *f.ids.get(&key)?,
            _ => unreachable!("one interner is provided"),
        };
        out.push(ColState { class, norm });
    }
    Some(out)
}

fn sorted_classes(cols: &[ColState]) -> Vec<u32> {
    let mut v: Vec<u32> = cols.iter().map(|c| c.class).collect();
    v.sort_unstable();
    v
}

struct Search<'a> {
    interner: &'a Interner,
    target: &'a [Vec<u32>],
    candidates: &'a [Vec<&'a Candidate>],
    nodes: u64,
    max_nodes: u64,
    deadline: Instant,
    aborted: bool,
}

impl Search<'_> {
    fn dfs(&mut self, level: usize, cols: &[ColState], chosen: &mut Vec<Gf4Vector>) -> bool {
        if level == self.target.len() {
            return true;
        }
        let scales: &[Gf4] = if level == 0 { &[Gf4::ONE] } else { &Gf4::NONZERO };
        for cand in &self.candidates[level] {
            for &s in scales {
                self.nodes += 1;
                if self.nodes % 4096 == 0 && Instant::now() > self.deadline
                    || self.nodes > self.max_nodes
                {
                    self.aborted = true;
                    return false;
                }
                let Some(next) = extend_cols(cols, &cand.word, s, &mut None, Some(self.interner)) else {
                    continue;
                };
                if sorted_classes(&next) != self.target[level] {
                    continue;
                }
                chosen.push(cand.word.scaled(s));
                if self.dfs(level + 1, &next, chosen) {
                    return true;
                }
                chosen.pop();
                if self.aborted {
                    return false;
                }
            }
        }
        false
    }
}

/// Builds the map sending the columns of `g1` onto those of `g2`, which
/// must agree as projective multisets.
fn map_from_columns(g1: &[Gf4Vector], g2: &[Gf4Vector], n: usize) -> Option<MonomialMap> {
    let column = |g: &[Gf4Vector], j: usize| -> (Vec<Gf4>, Gf4) {
        let mut col: Vec<Gf4> = g.iter().map(|r| r.get(j)).collect();
        let lead = col.iter().copied().find(|x| !x.is_zero()).unwrap_or(Gf4::ONE);
        let inv = lead.inv().expect("nonzero");
        for x in &mut col {
            *x = *x * inv;
        }
        (col, lead)
    };
    let mut free: HashMap<Vec<Gf4>, Vec<(usize, Gf4)>> = HashMap::new();
    for j in (0..n).rev() {
        let (c, lead) = column(g2, j);
        free.entry(c).or_default().push((j, lead));
    }
    let mut perm = vec![0; n];
    let mut scalars = vec![Gf4::ONE; n];
    for j in 0..n {
        let (c, lead1) = column(g1, j);
        let (target, lead2) = free.get_mut(&c)?.pop()?;
        perm[j] = target;
        scalars[j] = lead2 * lead1.inv().expect("nonzero");
    }
    MonomialMap::new(perm, scalars).ok()
}

fn monomial_search(
    c1: &LinearCode,
    c2: &LinearCode,
    budget: &EquivalenceBudget,
    conjugate: bool,
) -> Equivalence {
    match try_monomial_search(c1, c2, budget) {
        Ok(Some(map)) => Equivalence::Equivalent { map, conjugate },
        Ok(None) => Equivalence::Inequivalent,
        Err(_) => Equivalence::Undecided,
    }
}

/// `Ok(None)` is a proof of inequivalence; `Err` means the budget ran out.
fn try_monomial_search(
    c1: &LinearCode,
    c2: &LinearCode,
    budget: &EquivalenceBudget,
) -> Result<Option<MonomialMap>> {
    if c1.n() != c2.n() || c1.k() != c2.k() {
        return Ok(None);
    }
    if c1 == c2 {
        return Ok(Some(MonomialMap::identity(c1.n())));
    }
    let n = c1.n();
    if c1.is_zero_code() {
        return Ok(Some(MonomialMap::identity(n)));
    }
    let eb = &budget.enumeration;
    let (d1, m1) = min_words(c1, eb)?;
    let (d2, m2) = min_words(c2, eb)?;
    if d1 != d2 || m1.len() != m2.len() {
        return Ok(None);
    }
    let s1 = signature_from_words(c1, d1, &m1, eb)?;
    let s2 = signature_from_words(c2, d2, &m2, eb)?;
    if s1 != s2 {
        return Ok(None);
    }
    let masks1 = support_masks(&m1);
    let masks2 = support_masks(&m2);
    let pool1 = spanning_pool(c1, d1, m1, eb)?;
    let pool2 = spanning_pool(c2, d2, m2, eb)?;

    let profile_pool = |pool: &BTreeMap<usize, Vec<Gf4Vector>>, masks: &[Vec<u64>]| {
        pool.iter()
            .map(|(&w, words)| {
                let cands: Vec<Candidate> = words
                    .par_iter()
                    .map(|x| Candidate {
                        word: x.clone(),
                        profile: word_profile(&x.support_mask(), masks, n),
                    })
                    .collect();
                (w, cands)
            })
            .collect::<BTreeMap<usize, Vec<Candidate>>>()
    };
    let cand1 = profile_pool(&pool1, &masks1);
    let cand2 = profile_pool(&pool2, &masks2);

    let mut class_size: HashMap<(usize, &[u32]), usize> = HashMap::new();
    for (&w, cs) in &cand2 {
        for c in cs {
            *class_size.entry((w, c.profile.as_slice())).or_default() += 1;
        }
    }
    let size_of = |w: usize, c: &Candidate| class_size.get(&(w, c.profile.as_slice())).copied().unwrap_or(0);

    // Basis of C1: rarest invariant class first, then words overlapping the
    // support already covered.
    let mut basis: Vec<(usize, &Candidate)> = Vec::new();
    let mut span = LinearCode::zero_code(n);
    let mut covered = vec![0u64; n.div_ceil(64)];
    while span.k() < c1.k() {
        let mut best: Option<((usize, usize, usize), usize, &Candidate)> = None;
        for (&w, cs) in &cand1 {
            for c in cs {
                let overlap = intersection(&c.word.support_mask(), &covered);
                let key = if basis.is_empty() {
                    (size_of(w, c), 0, w)
                } else {
                    (w, n - overlap, size_of(w, c))
                };
                if best.as_ref().is_some_and(|(b, _, _)| *b <= key) {
                    continue;
                }
                if span.contains(&c.word).expect("same length") {
                    continue;
                }
                best = Some((key, w, c));
            }
        }
        let Some((_, w, c)) = best else {
            return Err(Error::BudgetExceeded("no spanning light words".to_string()));
        };
        if size_of(w, c) == 0 {
            return Ok(None);
        }
        for (x, m) in covered.iter_mut().zip(c.word.support_mask()) {
            *x |= m;
        }
        let mut rows = span.generator().rows().to_vec();
        rows.push(c.word.clone());
        span = LinearCode::span(rows, n);
        basis.push((w, c));
    }

    let mut interner = Interner { ids: HashMap::new() };
    let start = vec![
        ColState {
            class: ZERO_CLASS,
            norm: Gf4::ZERO,
        };
        n
    ];
    let mut cols = start.clone();
    let mut target = Vec::new();
    for (_, c) in &basis {
        cols = extend_cols(&cols, &c.word, Gf4::ONE, &mut Some(&mut interner), None)
            .expect("interner accepts new classes");
        target.push(sorted_classes(&cols));
    }
    let candidates: Vec<Vec<&Candidate>> = basis
        .iter()
        .map(|(w, b)| {
            cand2
                .get(w)
                .map(|cs| cs.iter().filter(|c| c.profile == b.profile).collect())
                .unwrap_or_default()
        })
        .collect();

    let mut search = Search {
        interner: &interner,
        target: &target,
        candidates: &candidates,
        nodes: 0,
        max_nodes: budget.max_nodes,
        deadline: Instant::now() + Duration::from_secs_f64(budget.max_seconds.min(1e9)),
        aborted: false,
    };
    let mut chosen = Vec::new();
    if !search.dfs(0, &start, &mut chosen) {
        if search.aborted {
            return Err(Error::BudgetExceeded(format!("{} search nodes", search.nodes)));
        }
        return Ok(None);
    }
    let g1: Vec<Gf4Vector> = basis.iter().map(|(_, c)| c.word.clone()).collect();
    let map = map_from_columns(&g1, &chosen, n).expect("column multisets agree");
    assert_eq!(
        &map.apply_code(c1).expect("same length"),
        c2,
        "equivalence search produced a map that does not verify"
    );
    Ok(Some(map))
}

/// Outcome of grouping codes into equivalence classes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DedupReport {
    /// Lexicographically least member of each class, sorted.
    pub representatives: Vec<LinearCode>,
    /// For each input, the index of its class in `representatives`.
    pub class_of: Vec<usize>,
    /// Input index pairs the search could not decide; such codes are kept
    /// in separate classes.
    pub undecided: Vec<(usize, usize)>,
}

/// Groups `codes` into equivalence classes: bucket by signature, then test
/// pairs within a bucket.
pub fn dedup_by_equivalence(
    codes: &[LinearCode],
    kind: EquivalenceKind,
    budget: &EquivalenceBudget,
) -> Result<DedupReport> {
    let sigs = codes
        .par_iter()
        .map(|c| {
            let sig = signature(c, &budget.enumeration)?;
            if kind == EquivalenceKind::Semilinear {
                let conj = signature(&conjugate_code(c), &budget.enumeration)?;
                return Ok(sig.min_by_key_hash(conj));
            }
            Ok(sig)
        })
        .collect::<Result<Vec<_>>>()?;
    let mut buckets: BTreeMap<Vec<u8>, Vec<usize>> = BTreeMap::new();
    for (i, s) in sigs.iter().enumerate() {
        buckets
            .entry(serde_json::to_vec(s).expect("signature serializes"))
            .or_default()
            .push(i);
    }
    let mut undecided = Vec::new();
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for members in buckets.values() {
        let mut local: Vec<Vec<usize>> = Vec::new();
        for &i in members {
            let verdicts: Vec<Equivalence> = local
                .par_iter()
                .map(|class| are_equivalent_with(&codes[class[0]], &codes[i], kind, budget))
                .collect();
            match verdicts.iter().position(Equivalence::is_equivalent) {
                Some(c) => local[c].push(i),
                None => {
                    for (class, v) in local.iter().zip(&verdicts) {
                        if *v == Equivalence::Undecided {
                            undecided.push((class[0], i));
                        }
                    }
                    local.push(vec![i]);
                }
            }
        }
        classes.extend(local);
    }
    let mut reps: Vec<(LinearCode, Vec<usize>)> = classes
        .into_iter()
        .map(|members| {
            let rep = members
                .iter()
                .map(|&i| &codes[i])
                .min()
                .expect("nonempty class")
                .clone();
            (rep, members)
        })
        .collect();
    reps.sort_by(|a, b| a.0.cmp(&b.0));
    let mut class_of = vec![0; codes.len()];
    for (ci, (_, members)) in reps.iter().enumerate() {
        for &i in members {
            class_of[i] = ci;
        }
    }
    Ok(DedupReport {
        representatives: reps.into_iter().map(|(r, _)| r).collect(),
        class_of,
        undecided,
    })
}

impl InvariantSignature {
    /// The smaller of two signatures under a fixed total order, so a code
    /// and its conjugate share one bucket key.
    fn min_by_key_hash(self, other: InvariantSignature) -> InvariantSignature {
        let a = serde_json::to_vec(&self).expect("serializes");
        let b = serde_json::to_vec(&other).expect("serializes");
        if a <= b {
            self
        } else {
            other
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::ModifiedFourCirculantCode;
    use rand::seq::SliceRandom;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_map(rng: &mut ChaCha8Rng, n: usize) -> MonomialMap {
        let mut perm: Vec<usize> = (0..n).collect();
        perm.shuffle(rng);
        let scalars = (0..n).map(|_| Gf4::NONZERO[rng.gen_range(0..3)]).collect();
        MonomialMap::new(perm, scalars).unwrap()
    }

    fn c24(ra: &str, rb: &str) -> LinearCode {
        ModifiedFourCirculantCode::parse("1", ra, rb).unwrap().code()
    }

    #[test]
    fn map_algebra() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let x = Gf4Vector::parse("1w0v1100wv").unwrap();
        let a = random_map(&mut rng, 10);
        let b = random_map(&mut rng, 10);
        let ab = a.then(&b).unwrap();
        assert_eq!(ab.apply(&x).unwrap(), b.apply(&a.apply(&x).unwrap()).unwrap());
        assert_eq!(a.inverse().apply(&a.apply(&x).unwrap()).unwrap(), x);
        assert_eq!(a.apply(&x).unwrap().weight(), x.weight());
        assert!(MonomialMap::new(vec![0, 0], vec![Gf4::ONE; 2]).is_err());
        assert!(MonomialMap::new(vec![1, 0], vec![Gf4::ONE, Gf4::ZERO]).is_err());
        assert_eq!(MonomialMap::identity(3).to_string(), "[1 2 3] 111");
    }

    #[test]
    fn random_images_are_equivalent() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let c = c24("101011", "wvw101");
        let budget = EquivalenceBudget::default();
        let s = signature(&c, &budget.enumeration).unwrap();
        assert_eq!(s.a_d, 513);
        for _ in 0..3 {
            let m = random_map(&mut rng, 24);
            let image = m.apply_code(&c).unwrap();
            assert_eq!(signature(&image, &budget.enumeration).unwrap(), s);
            match are_equivalent(&c, &image, &budget) {
                Equivalence::Equivalent { map, conjugate } => {
                    assert!(!conjugate);
                    assert_eq!(map.apply_code(&c).unwrap(), image);
                }
                other => panic!("expected equivalent, got {other:?}"),
            }
        }
    }

    #[test]
    fn distinct_table_codes_are_inequivalent() {
        let budget = EquivalenceBudget::default();
        let a = c24("101011", "wvw101");
        let b = c24("1w11w1", "w1w101");
        assert_eq!(are_equivalent(&a, &b, &budget), Equivalence::Inequivalent);
    }

    #[test]
    fn dedup_copies() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let c = c24("101011", "wvw101");
        let mut codes: Vec<LinearCode> = (0..4).map(|_| random_map(&mut rng, 24).apply_code(&c).unwrap()).collect();
        codes.push(c);
        let r = dedup_by_equivalence(&codes, EquivalenceKind::Monomial, &EquivalenceBudget::default()).unwrap();
        assert_eq!(r.representatives.len(), 1);
        assert!(r.undecided.is_empty());
        assert_eq!(r.class_of, vec![0; 5]);
    }
}
