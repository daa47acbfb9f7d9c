//! Disjoint information windows and the projective combination enumerator.

use std::sync::atomic::{AtomicBool, Ordering};
use std::time::{Duration, Instant};

use rayon::prelude::*;

use super::packed::Packed;
use crate::code::LinearCode;
use crate::gf4::Gf4Vector;

/// A generator of the code that is systematic on `pivots`. Rows
/// `0..pivots.len()` carry the pivots in order; any remaining rows vanish on
/// every column that was still unused when the window was formed.
#[derive(Clone, Debug)]
pub(crate) struct InfoWindow {
    pub rows: Vec<Gf4Vector>,
    pub pivots: Vec<usize>,
}

impl InfoWindow {
    pub fn defect(&self) -> usize {
        self.rows.len() - self.pivots.len()
    }

    /// Guaranteed weight on this window of any codeword whose message has
    /// weight above `p`.
    pub fn contribution(&self, p: usize) -> usize {
        (p + 1).saturating_sub(self.defect())
    }
}

/// Splits the coordinates into disjoint windows by repeated elimination on
/// the columns not yet used as pivots. The first window is always full rank.
pub(crate) fn info_windows(code: &LinearCode) -> Vec<InfoWindow> {
    let n = code.n();
    let k = code.k();
    let mut rows = code.generator().rows().to_vec();
    let mut used = vec![false; n];
    let mut out = Vec::new();
    loop {
        let mut pivots = Vec::new();
        for col in 0..n {
            if used[col] || pivots.len() == k {
                continue;
            }
            let rank = pivots.len();
            let Some(p) = (rank..k).find(|&i| !rows[i].get(col).is_zero()) else {
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
        }
        if pivots.is_empty() {
            break;
        }
        for &c in &pivots {
            used[c] = true;
        }
        out.push(InfoWindow {
            rows: rows.clone(),
            pivots,
        });
    }
    out
}

/// Wall-clock limit shared by the tasks of one enumeration.
pub(crate) struct Deadline {
    end: Option<Instant>,
    hit: AtomicBool,
}

impl Deadline {
    pub fn new(seconds: f64) -> Self {
        let end = (seconds.is_finite() && seconds >= 0.0)
            .then(|| Instant::now() + Duration::from_secs_f64(seconds));
        Deadline {
            end,
            hit: AtomicBool::new(false),
        }
    }

    pub fn expired(&self) -> bool {
        if self.hit.load(Ordering::Relaxed) {
            return true;
        }
        if self.end.is_some_and(|e| Instant::now() >= e) {
            self.hit.store(true, Ordering::Relaxed);
            return true;
        }
        false
    }

    /// Whether some task observed the deadline.
    pub fn was_hit(&self) -> bool {
        self.hit.load(Ordering::Relaxed)
    }
}

#[derive(Clone, Copy)]
struct Prefix<const W: usize> {
    acc: Packed<W>,
    next: usize,
}

fn descend<const W: usize, A, F>(
    rows: &[[Packed<W>; 3]],
    start: usize,
    depth: usize,
    acc: Packed<W>,
    a: &mut A,
    leaf: &F,
) where
    F: Fn(&mut A, &Packed<W>),
{
    if depth == 1 {
        for r in &rows[start..] {
            for m in r {
                leaf(a, &acc.xor(m));
            }
        }
        return;
    }
    for r in start..=rows.len() - depth {
        for m in &rows[r] {
            descend(rows, r + 1, depth - 1, acc.xor(m), a, leaf);
        }
    }
}

/// Visits `sum_i m_i rows_i` for every message `m` of Hamming weight exactly
/// `p` whose first nonzero entry is 1. Work is split over the first two
/// chosen rows and merged with `merge`; returns `None` if the deadline
/// passed before every task ran.
pub(crate) fn for_each_projective<const W: usize, A, I, F, M>(
    rows: &[[Packed<W>; 3]],
    p: usize,
    deadline: &Deadline,
    init: I,
    leaf: F,
    merge: M,
) -> Option<A>
where
    A: Send,
    I: Fn() -> A + Sync + Send,
    F: Fn(&mut A, &Packed<W>) + Sync + Send,
    M: Fn(A, A) -> A + Sync + Send,
{
    let k = rows.len();
    if p == 0 || p > k {
        return Some(init());
    }
    let mut tasks = Vec::new();
    for i0 in 0..=k - p {
        let base = rows[i0][0];
        if p == 1 {
            tasks.push((Prefix { acc: base, next: i0 + 1 }, 0));
            continue;
        }
        for i1 in i0 + 1..=k - p + 1 {
            for m in &rows[i1] {
                tasks.push((
                    Prefix {
                        acc: base.xor(m),
                        next: i1 + 1,
                    },
                    p - 2,
                ));
            }
        }
    }
    let out = tasks
        .par_iter()
        .map(|(prefix, depth)| {
            let mut a = init();
            if deadline.expired() {
                return a;
            }
            if *depth == 0 {
                leaf(&mut a, &prefix.acc);
            } else {
                descend(rows, prefix.next, *depth, prefix.acc, &mut a, &leaf);
            }
            a
        })
        .reduce(&init, &merge);
    (!deadline.was_hit()).then_some(out)
}
