//! Full enumeration of a code in Gray-code order.

use rayon::prelude::*;

use super::packed::Packed;
use super::windows::Deadline;

/// Bits of the Gray walk handled inside one task.
const TASK_BITS: usize = 22;

/// Histogram by weight of all nonzero codewords whose first nonzero message
/// symbol is 1. Each generator row `g` contributes the GF(2) basis vectors
/// `g` and `w g`, so consecutive words differ by a single basis vector.
pub(crate) fn projective_histogram<const W: usize>(
    rows: &[Packed<W>],
    n: usize,
    deadline: &Deadline,
) -> Option<Vec<u64>> {
    let k = rows.len();
    let mut tasks = Vec::new();
    for lead in 0..k {
        let basis: Vec<Packed<W>> = rows[lead + 1..]
            .iter()
            .flat_map(|r| [*r, r.times_w()])
            .collect();
        let inner = basis.len().min(TASK_BITS);
        let outer = basis.len() - inner;
        for x in 0u64..1 << outer {
            let mut start = rows[lead];
            for bit in 0..outer {
                if x >> bit & 1 == 1 {
                    start = start.xor(&basis[inner + bit]);
                }
            }
            tasks.push((start, lead, inner));
        }
    }
    let basis_of = |lead: usize| -> Vec<Packed<W>> {
        rows[lead + 1..]
            .iter()
            .flat_map(|r| [*r, r.times_w()])
            .collect()
    };
    let hist = tasks
        .par_iter()
        .map(|&(start, lead, inner)| {
            let mut h = vec![0u64; n + 1];
            if deadline.expired() {
                return h;
            }
            let basis = basis_of(lead);
            let mut acc = start;
            h[acc.weight() as usize] += 1;
            for step in 1u64..1 << inner {
                acc = acc.xor(&basis[step.trailing_zeros() as usize]);
                h[acc.weight() as usize] += 1;
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
    (!deadline.was_hit()).then_some(hist)
}
