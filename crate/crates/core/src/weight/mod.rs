//! Minimum weight certification and exact codeword counting.
//!
//! Two engines are provided. Small codes are walked completely in Gray-code
//! order. Larger codes use disjoint information windows: after every
//! codeword whose message on window `j` has weight at most `p_j` has been
//! seen, any unseen codeword has weight at least `sum_j (p_j + 1 - defect_j)`,
//! which certifies the minimum weight once it meets the best word found.
//! Counting at a weight `w` uses the same windows, attributing each word to
//! the first window on which it is light so that no word is counted twice.

mod exhaustive;
mod packed;
mod windows;

use std::collections::BTreeMap;
use std::time::Instant;

use serde::Serialize;

use crate::code::LinearCode;
use crate::error::{Error, Result};
use crate::gf4::Gf4Vector;
use packed::{with_width, Packed};
use windows::{for_each_projective, info_windows, Deadline, InfoWindow};

/// Largest dimension accepted by the exhaustive enumerator.
pub const MAX_EXHAUSTIVE_K: usize = 20;

/// Limits on an enumeration.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct EnumerationBudget {
    pub max_seconds: f64,
    /// Largest message weight enumerated on any information window.
    pub max_info_window_weight: usize,
}

impl EnumerationBudget {
    pub fn new(max_seconds: f64, max_info_window_weight: usize) -> Result<Self> {
        if !(max_seconds > 0.0) || max_info_window_weight == 0 {
            return Err(Error::InvalidArgument(
                "budget values must be positive".to_string(),
            ));
        }
        Ok(EnumerationBudget {
            max_seconds,
            max_info_window_weight,
        })
    }

    pub fn unlimited() -> Self {
        EnumerationBudget {
            max_seconds: f64::INFINITY,
            max_info_window_weight: usize::MAX,
        }
    }

    pub fn seconds(max_seconds: f64) -> Self {
        EnumerationBudget {
            max_seconds,
            max_info_window_weight: usize::MAX,
        }
    }
}

impl Default for EnumerationBudget {
    fn default() -> Self {
        EnumerationBudget::seconds(3600.0)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub enum Method {
    Exhaustive,
    InfoSetEnumeration,
}

/// Outcome of a minimum weight computation.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct WeightReport {
    pub n: usize,
    pub k: usize,
    /// Smallest nonzero weight seen; the minimum weight when `certified`.
    pub d: Option<usize>,
    /// Proven lower bound on the minimum weight.
    pub lower_bound: usize,
    pub certified: bool,
    pub method: Method,
    /// Exact `A_i` for the weights that were requested or enumerated.
    pub counts: BTreeMap<usize, u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub distribution: Option<Vec<u64>>,
    #[serde(skip)]
    pub witness: Option<Gf4Vector>,
    pub elapsed_seconds: f64,
}

impl WeightReport {
    /// The certified minimum weight.
    pub fn certified_d(&self) -> Result<usize> {
        match (self.certified, self.d) {
            (true, Some(d)) => Ok(d),
            _ => Err(Error::Uncertified),
        }
    }

    /// Adds exact counts at `weights` to the report.
    pub fn with_counts(
        mut self,
        code: &LinearCode,
        weights: &[usize],
        budget: &EnumerationBudget,
    ) -> Result<Self> {
        let t = Instant::now();
        self.counts.extend(count_words(code, weights, budget)?);
        self.elapsed_seconds += t.elapsed().as_secs_f64();
        Ok(self)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// The bound `d <= 2 floor(n/6) + 2` for Hermitian self-dual codes of length `n`.
pub fn extremal_bound(n: usize) -> Result<usize> {
    if n < 2 || n % 2 == 1 {
        return Err(Error::InvalidArgument(format!(
            "length must be even and at least 2, got {n}"
        )));
    }
    Ok(2 * (n / 6) + 2)
}

fn too_long(n: usize) -> Error {
    Error::InvalidArgument(format!("length {n} exceeds the packed kernels"))
}

fn packed_rows<const W: usize>(rows: &[Gf4Vector]) -> Vec<Packed<W>> {
    rows.iter().map(Packed::from_vector).collect()
}

/// Full weight distribution `A_0, ..., A_n` by enumerating all `4^k` words.
pub fn weight_distribution(code: &LinearCode, budget: &EnumerationBudget) -> Result<Vec<u64>> {
    let (n, k) = (code.n(), code.k());
    if k > MAX_EXHAUSTIVE_K {
        return Err(Error::BudgetExceeded(format!(
            "exhaustive enumeration of 4^{k} words"
        )));
    }
    let deadline = Deadline::new(budget.max_seconds);
    let hist = with_width!(n, W => {
        exhaustive::projective_histogram::<W>(&packed_rows(code.generator().rows()), n, &deadline)
    }, _ => return Err(too_long(n)))
    .ok_or_else(|| Error::BudgetExceeded(format!("{} s elapsed", budget.max_seconds)))?;
    let mut dist: Vec<u64> = hist.into_iter().map(|h| 3 * h).collect();
    dist[0] = 1;
    Ok(dist)
}

/// Minimum weight and full distribution by exhaustive enumeration.
pub fn min_weight_exhaustive(code: &LinearCode, budget: &EnumerationBudget) -> Result<WeightReport> {
    if code.is_zero_code() {
        return Err(Error::ZeroCode);
    }
    let t = Instant::now();
    let dist = weight_distribution(code, budget)?;
    let d = (1..dist.len()).find(|&i| dist[i] > 0).expect("nonzero code");
    let witness = find_word_of_weight(code, d);
    let counts = dist
        .iter()
        .enumerate()
        .filter(|&(_, &a)| a > 0)
        .map(|(i, &a)| (i, a))
        .collect();
    Ok(WeightReport {
        n: code.n(),
        k: code.k(),
        d: Some(d),
        lower_bound: d,
        certified: true,
        method: Method::Exhaustive,
        counts,
        distribution: Some(dist),
        witness,
        elapsed_seconds: t.elapsed().as_secs_f64(),
    })
}

fn find_word_of_weight(code: &LinearCode, w: usize) -> Option<Gf4Vector> {
    collect_words(code, &[w], &EnumerationBudget::unlimited())
        .ok()?
        .into_iter()
        .next()
}

#[derive(Clone, Copy)]
struct Best<const W: usize> {
    weight: u32,
    word: Packed<W>,
}

impl<const W: usize> Best<W> {
    fn none() -> Self {
        Best {
            weight: u32::MAX,
            word: Packed::ZERO,
        }
    }

    fn min(self, other: Self) -> Self {
        if other.weight < self.weight {
            other
        } else {
            self
        }
    }
}

/// Minimum weight by information-window enumeration.
///
/// On budget exhaustion the report is returned with `certified = false`,
/// the best weight seen and the lower bound reached.
pub fn min_weight_info_set(code: &LinearCode, budget: &EnumerationBudget) -> Result<WeightReport> {
    if code.is_zero_code() {
        return Err(Error::ZeroCode);
    }
    let n = code.n();
    with_width!(n, W => min_weight_windows::<W>(code, budget, None), _ => Err(too_long(n)))
}

/// Decides `d >= t` without necessarily finding `d`: stops as soon as a
/// lighter word appears or the lower bound reaches `t`. `None` when the
/// budget ran out first.
pub fn min_weight_at_least(
    code: &LinearCode,
    t: usize,
    budget: &EnumerationBudget,
) -> Result<Option<bool>> {
    if code.is_zero_code() {
        return Err(Error::ZeroCode);
    }
    let n = code.n();
    let r = with_width!(n, W => min_weight_windows::<W>(code, budget, Some(t)), _ => Err(too_long(n)))?;
    let d = r.d.expect("nonzero code");
    Ok(if d < t {
        Some(false)
    } else if r.lower_bound >= t {
        Some(true)
    } else {
        None
    })
}

fn min_weight_windows<const W: usize>(
    code: &LinearCode,
    budget: &EnumerationBudget,
    stop: Option<usize>,
) -> Result<WeightReport> {
    let t = Instant::now();
    let (n, k) = (code.n(), code.k());
    let even = code.is_hermitian_self_orthogonal();
    let windows = info_windows(code);
    let rows: Vec<Vec<[Packed<W>; 3]>> = windows
        .iter()
        .map(|w| w.rows.iter().map(|r| Packed::from_vector(r).multiples()).collect())
        .collect();
    let deadline = Deadline::new(budget.max_seconds);

    let mut best = Best::<W>::none();
    for r in &rows {
        for m in r {
            best = best.min(Best {
                weight: m[0].weight(),
                word: m[0],
            });
        }
    }
    let mut done = vec![0usize; windows.len()];
    let bound = |done: &[usize]| -> usize {
        let lb: usize = windows
            .iter()
            .zip(done)
            .map(|(w, &p)| w.contribution(p))
            .sum();
        if even {
            lb + lb % 2
        } else {
            lb
        }
    };
    let mut lower = bound(&done);
    let mut certified = lower >= best.weight as usize;
    let early = stop.is_some_and(|t| (best.weight as usize) < t || lower >= t);
    let cap = budget.max_info_window_weight.min(k);

    'levels: for p in 1..=cap {
        if certified || early {
            break;
        }
        for (j, win) in windows.iter().enumerate() {
            if p < win.defect() {
                continue;
            }
            for level in done[j] + 1..=p {
                let found = for_each_projective(
                    &rows[j],
                    level,
                    &deadline,
                    Best::none,
                    |b: &mut Best<W>, x| {
                        let w = x.weight();
                        if w < b.weight {
                            b.weight = w;
                            b.word = *x;
                        }
                    },
                    Best::min,
                );
                match found {
                    Some(f) => best = best.min(f),
                    None => break 'levels,
                }
                done[j] = level;
            }
            lower = bound(&done);
            // All messages of window 0 seen means every codeword was seen.
            if lower >= best.weight as usize || done[0] == k {
                certified = true;
                break 'levels;
            }
            if stop.is_some_and(|t| (best.weight as usize) < t || lower >= t) {
                break 'levels;
            }
        }
    }
    let d = best.weight as usize;
    let mut counts = BTreeMap::new();
    if certified {
        lower = d;
    } else {
        lower = lower.min(d);
    }
    counts.insert(0, 1);
    Ok(WeightReport {
        n,
        k,
        d: Some(d),
        lower_bound: lower,
        certified,
        method: Method::InfoSetEnumeration,
        counts,
        distribution: None,
        witness: Some(best.word.to_vector(n)),
        elapsed_seconds: t.elapsed().as_secs_f64(),
    })
}

/// Exhaustive when `k` is small, information windows otherwise.
pub fn min_weight(code: &LinearCode, budget: &EnumerationBudget) -> Result<WeightReport> {
    if code.k() <= 14 {
        min_weight_exhaustive(code, budget)
    } else {
        min_weight_info_set(code, budget)
    }
}

/// The windows used for counting and their enumeration depths: only full
/// rank windows, with `sum_j (p_j + 1) > max weight` so that every word of
/// a target weight is light on at least one of them.
fn counting_plan(
    windows: Vec<InfoWindow>,
    k: usize,
    max_weight: usize,
    budget: &EnumerationBudget,
) -> Result<Vec<(InfoWindow, usize)>> {
    let full: Vec<InfoWindow> = windows.into_iter().filter(|w| w.defect() == 0).collect();
    let f = full.len();
    let total = (max_weight + 1).saturating_sub(f);
    let plan: Vec<(InfoWindow, usize)> = full
        .into_iter()
        .enumerate()
        .map(|(j, w)| {
            let p = (total / f + usize::from(j < total % f)).min(k);
            (w, p)
        })
        .collect();
    if let Some((_, p)) = plan.iter().find(|(_, p)| *p > budget.max_info_window_weight) {
        return Err(Error::BudgetExceeded(format!(
            "counting needs window weight {p}, cap is {}",
            budget.max_info_window_weight
        )));
    }
    Ok(plan)
}

/// Visits every projective codeword whose weight is in `targets`, exactly
/// once, accumulating with `leaf`.
fn visit_targets<const W: usize, A, I, F, M>(
    code: &LinearCode,
    targets: &[usize],
    budget: &EnumerationBudget,
    init: I,
    leaf: F,
    merge: M,
) -> Result<A>
where
    A: Send,
    I: Fn() -> A + Sync + Send,
    F: Fn(&mut A, &Packed<W>) + Sync + Send,
    M: Fn(A, A) -> A + Sync + Send,
{
    let n = code.n();
    let max = targets.iter().copied().max().unwrap_or(0);
    let mut is_target = vec![false; n + 1];
    for &t in targets {
        if (1..=n).contains(&t) {
            is_target[t] = true;
        }
    }
    let mut acc = init();
    if max == 0 || code.is_zero_code() {
        return Ok(acc);
    }
    let plan = counting_plan(info_windows(code), code.k(), max.min(n), budget)?;
    let deadline = Deadline::new(budget.max_seconds);
    let masks: Vec<([u64; W], u32)> = plan
        .iter()
        .map(|(w, p)| (Packed::<W>::mask(&w.pivots), *p as u32))
        .collect();
    for (j, (win, p)) in plan.iter().enumerate() {
        let rows: Vec<[Packed<W>; 3]> = win
            .rows
            .iter()
            .map(|r| Packed::from_vector(r).multiples())
            .collect();
        let earlier = &masks[..j];
        for level in 1..=*p {
            let part = for_each_projective(
                &rows,
                level,
                &deadline,
                &init,
                |a: &mut A, x: &Packed<W>| {
                    if is_target[x.weight() as usize]
                        && earlier.iter().all(|(m, q)| x.weight_on(m) > *q)
                    {
                        leaf(a, x);
                    }
                },
                &merge,
            )
            .ok_or_else(|| Error::BudgetExceeded(format!("{} s elapsed", budget.max_seconds)))?;
            acc = merge(acc, part);
        }
    }
    Ok(acc)
}

/// Exact numbers of codewords `A_w` for each requested weight.
pub fn count_words(
    code: &LinearCode,
    weights: &[usize],
    budget: &EnumerationBudget,
) -> Result<BTreeMap<usize, u64>> {
    let n = code.n();
    let hist = with_width!(n, W => visit_targets::<W, _, _, _, _>(
        code,
        weights,
        budget,
        || vec![0u64; n + 1],
        |h: &mut Vec<u64>, x| h[x.weight() as usize] += 1,
        |mut a, b| {
            for (x, y) in a.iter_mut().zip(b) {
                *x += y;
            }
            a
        },
    ), _ => return Err(too_long(n)))?;
    Ok(weights
        .iter()
        .map(|&w| {
            let a = match w {
                0 => 1,
                w if w <= n => 3 * hist[w],
                _ => 0,
            };
            (w, a)
        })
        .collect())
}

/// All codewords of the requested weights, one per scalar class, scaled so
/// the first nonzero symbol is 1 and sorted.
pub fn collect_words(
    code: &LinearCode,
    weights: &[usize],
    budget: &EnumerationBudget,
) -> Result<Vec<Gf4Vector>> {
    let n = code.n();
    let mut words = with_width!(n, W => {
        let packed = visit_targets::<W, _, _, _, _>(
            code,
            weights,
            budget,
            Vec::new,
            |v: &mut Vec<Packed<W>>, x| v.push(*x),
            |mut a, mut b| {
                a.append(&mut b);
                a
            },
        )?;
        packed
            .into_iter()
            .map(|p| {
                let mut v = p.to_vector(n);
                v.normalize();
                v
            })
            .collect::<Vec<_>>()
    }, _ => return Err(too_long(n)));
    words.sort();
    Ok(words)
}
