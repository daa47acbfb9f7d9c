//! Acceptance run: one PASS/FAIL line per criterion.
//!
//! `cargo test --release --test acceptance -- 1 5 9` runs a subset.

use std::collections::{BTreeMap, BTreeSet};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Instant;

use herm4::classifier::{
    exhaustive_classify, meet_in_middle_join, ClassifyOptions, PackedCirculant, PackedRow, Reduction,
};
use herm4::constructions::ModifiedFourCirculantCode;
use herm4::equivalence::{are_equivalent, Equivalence, EquivalenceBudget, MonomialMap};
use herm4::gleason::{check_bound, solve_possible_enumerator, BoundCheck};
use herm4::quantum::trace_inner;
use herm4::reproduce::{reproduce, ClaimStatus, ReproduceOptions, RunReport};
use herm4::tables::{self, enumerator_56_16, TextClaims};
use herm4::weight::{extremal_bound, min_weight_exhaustive, min_weight_info_set, weight_distribution, Method};
use herm4::{CirculantSpec, EnumerationBudget, Gf4, Gf4Vector, LinearCode};
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

// ---------------------------------------------------------------------------
// Independent oracles. Field elements are a + b*w with w^2 = w + 1, held as
// (a, b) bit pairs, matrices as Vec<Vec<u8>> of symbol codes 0..4.

fn f_add(x: u8, y: u8) -> u8 {
    x ^ y
}

fn f_mul(x: u8, y: u8) -> u8 {
    let (a, b) = (x & 1, x >> 1);
    let (c, d) = (y & 1, y >> 1);
    // (a + bw)(c + dw) = ac + (ad + bc)w + bd(w + 1)
    let lo = (a & c) ^ (b & d);
    let hi = (a & d) ^ (b & c) ^ (b & d);
    lo | (hi << 1)
}

fn f_conj(x: u8) -> u8 {
    f_mul(x, x)
}

fn sym(x: u8) -> Gf4 {
    Gf4::from_bits(x)
}

fn m_mul(a: &[Vec<u8>], b: &[Vec<u8>]) -> Vec<Vec<u8>> {
    let (r, m, c) = (a.len(), b.len(), b[0].len());
    (0..r)
        .map(|i| {
            (0..c)
                .map(|j| (0..m).fold(0, |acc, k| f_add(acc, f_mul(a[i][k], b[k][j]))))
                .collect()
        })
        .collect()
}

fn m_conj_t(a: &[Vec<u8>]) -> Vec<Vec<u8>> {
    (0..a[0].len())
        .map(|j| (0..a.len()).map(|i| f_conj(a[i][j])).collect())
        .collect()
}

fn m_add(a: &[Vec<u8>], b: &[Vec<u8>]) -> Vec<Vec<u8>> {
    a.iter()
        .zip(b)
        .map(|(x, y)| x.iter().zip(y).map(|(p, q)| p ^ q).collect())
        .collect()
}

fn identity(n: usize) -> Vec<Vec<u8>> {
    (0..n).map(|i| (0..n).map(|j| u8::from(i == j)).collect()).collect()
}

/// `E_n(mu)`: ones on the superdiagonal, `mu` in the bottom-left corner.
fn shift_matrix(n: usize, mu: u8) -> Vec<Vec<u8>> {
    let mut e = vec![vec![0u8; n]; n];
    for i in 0..n - 1 {
        e[i][i + 1] = 1;
    }
    e[n - 1][0] = mu;
    e
}

/// `sum_i r_i E^i`.
fn circulant(row: &[u8], mu: u8) -> Vec<Vec<u8>> {
    let n = row.len();
    let e = shift_matrix(n, mu);
    let mut pow = identity(n);
    let mut acc = vec![vec![0u8; n]; n];
    for &r in row {
        let term: Vec<Vec<u8>> = pow.iter().map(|x| x.iter().map(|&v| f_mul(r, v)).collect()).collect();
        acc = m_add(&acc, &term);
        pow = m_mul(&pow, &e);
    }
    acc
}

fn symbols(v: &Gf4Vector) -> Vec<u8> {
    v.iter().map(Gf4::bits).collect()
}

/// Generator `(I_2n | A B ; conj(B)^T conj(A)^T)` built from the definition.
fn naive_generator(mu: u8, ra: &[u8], rb: &[u8]) -> Vec<Vec<u8>> {
    let n = ra.len();
    let a = circulant(ra, mu);
    let b = circulant(rb, mu);
    let (ca, cb) = (m_conj_t(&a), m_conj_t(&b));
    let id = identity(2 * n);
    (0..2 * n)
        .map(|i| {
            let mut row = id[i].clone();
            if i < n {
                row.extend(&a[i]);
                row.extend(&b[i]);
            } else {
                row.extend(&cb[i - n]);
                row.extend(&ca[i - n]);
            }
            row
        })
        .collect()
}

/// Self-orthogonality of a full-rank `[2m, m]` generator, hence self-duality.
fn naive_self_dual(g: &[Vec<u8>]) -> bool {
    m_mul(g, &m_conj_t(g)).iter().all(|r| r.iter().all(|&x| x == 0))
}

/// Weight distribution by walking all GF(2) combinations of `g` and `w*g`.
fn naive_distribution(g: &[Vec<u8>]) -> Vec<u64> {
    let n = g[0].len();
    let mut basis: Vec<Vec<u8>> = Vec::new();
    for r in g {
        basis.push(r.clone());
        basis.push(r.iter().map(|&x| f_mul(2, x)).collect());
    }
    let mut cur = vec![0u8; n];
    let mut dist = vec![0u64; n + 1];
    dist[0] = 1;
    for step in 1u64..(1u64 << basis.len()) {
        let b = &basis[step.trailing_zeros() as usize];
        for (c, x) in cur.iter_mut().zip(b) {
            *c ^= x;
        }
        dist[cur.iter().filter(|&&x| x != 0).count()] += 1;
    }
    dist
}

fn random_row(rng: &mut ChaCha8Rng, n: usize) -> Vec<u8> {
    (0..n).map(|_| rng.gen_range(0..4)).collect()
}

fn to_vector(xs: &[u8]) -> Gf4Vector {
    Gf4Vector::from_symbols(&xs.iter().map(|&x| sym(x)).collect::<Vec<_>>())
}

fn report_ok(r: &RunReport, expect_claims: usize) -> Result<(), String> {
    let bad: Vec<String> = r
        .claims
        .iter()
        .filter(|c| c.status != ClaimStatus::Pass)
        .map(|c| format!("{} {} -> {}", c.locus, c.claim, c.observed))
        .collect();
    ensure(bad.is_empty(), format!("claims not passing: {bad:?}"))?;
    ensure(
        r.claims.len() == expect_claims,
        format!("expected {expect_claims} claims, got {}", r.claims.len()),
    )
}

fn opts() -> ReproduceOptions {
    ReproduceOptions::default()
}

// ---------------------------------------------------------------------------

fn table2() -> Outcome {
    let rows = tables::table("T2").map_err(|e| e.to_string())?;
    ensure(rows.len() == 25, format!("{} rows", rows.len()))?;
    let r = reproduce("T2", &opts()).map_err(|e| e.to_string())?;
    report_ok(&r, 3 * 25)?;
    let a8: BTreeSet<u64> = rows.iter().map(|e| e.counts[&8]).collect();
    ensure(a8 == BTreeSet::from([513, 594, 837]), format!("A8 values {a8:?}"))?;
    // Brute-force oracle on one code per mu.
    for name in ["C24_1_1", "C24_w_1", "C24_v_1"] {
        let e = tables::entry(name).ok_or("missing row")?;
        let m = &e.construction;
        let g = naive_generator(m.mu().bits(), &symbols(m.ra()), &symbols(m.rb()));
        ensure(naive_self_dual(&g), format!("{name} not self-dual by definition"))?;
        let naive = naive_distribution(&g);
        let lib = weight_distribution(&m.code(), &EnumerationBudget::default()).map_err(|e| e.to_string())?;
        ensure(naive == lib, format!("{name}: distributions differ"))?;
        ensure(naive[8] == e.counts[&8], format!("{name}: brute force A8={}", naive[8]))?;
    }
    Ok(format!("25 rows, d=8, A8 in {a8:?}; brute force agrees on 3 codes"))
}

fn table3() -> Outcome {
    let r = reproduce("T3", &opts()).map_err(|e| e.to_string())?;
    report_ok(&r, 2 * 9)?;
    ensure(extremal_bound(28) == Ok(10), "bound at 28")?;
    ensure(
        check_bound(28, 10) == Ok(BoundCheck::WithinBound { extremal: true }),
        "28,10 not flagged extremal",
    )?;
    Ok("9 extremal [28,14,10] codes".to_string())
}

fn table4() -> Outcome {
    let r = reproduce("T4", &opts()).map_err(|e| e.to_string())?;
    report_ok(&r, 3 * 3)?;
    for e in tables::table("T4").map_err(|e| e.to_string())? {
        let rep = min_weight_info_set(&e.construction.code(), &EnumerationBudget::default())
            .map_err(|e| e.to_string())?;
        ensure(rep.method == Method::InfoSetEnumeration && rep.certified_d() == Ok(12), "info-set certificate")?;
    }
    Ok("three [36,18,12] codes, A12 = 20844, 19548, 19548".to_string())
}

fn appendix() -> Outcome {
    let mut n = 0;
    for id in ["T32-1", "T32-2", "T32-3"] {
        let r = reproduce(id, &opts()).map_err(|e| e.to_string())?;
        report_ok(&r, 3 * 59)?;
        n += 59;
    }
    ensure(n == 177, "177 codes")?;
    Ok("177 [32,16,10] codes with matching A10".to_string())
}

fn classification() -> Outcome {
    let r = reproduce("classes", &opts()).map_err(|e| e.to_string())?;
    let claims = TextClaims::embedded();
    report_ok(&r, claims.classes.len() + 3 * claims.none.len())?;
    // Same survivors and classes with one worker and with four.
    let run = |threads: usize| {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .unwrap()
            .install(|| exhaustive_classify(6, Gf4::W, 8, &ClassifyOptions::default()).unwrap())
    };
    let (a, b) = (run(1), run(4));
    ensure(
        a.survivors == b.survivors && a.representatives == b.representatives && a.class_count == b.class_count,
        "results depend on the worker count",
    )?;
    Ok(format!(
        "7/9/9, 3/3/3, 59/59/59, 1/1/1 classes, none above, 0 undecided ({:.0} s)",
        r.elapsed_seconds
    ))
}

fn remark() -> Outcome {
    let r = reproduce("equiv", &opts()).map_err(|e| e.to_string())?;
    report_ok(&r, 10)?;
    Ok("C24_w_i ~ C24_v_i (i = 1..9), C36_w_1 ~ C36_v_1, maps verified".to_string())
}

fn table5() -> Outcome {
    let r = reproduce("T5", &opts()).map_err(|e| e.to_string())?;
    report_ok(&r, 3 * 6)?;
    Ok("six [40/44] codes with d=12 and printed A12".to_string())
}

fn headline() -> Outcome {
    let r = reproduce("counts", &opts()).map_err(|e| e.to_string())?;
    report_ok(&r, 3 * 2)?;
    let v = tables::entry("C56_v").ok_or("missing C56_v")?;
    let d = min_weight_info_set(&v.construction.code(), &EnumerationBudget::default())
        .and_then(|r| r.certified_d())
        .map_err(|e| e.to_string())?;
    ensure(d == 14 && v.d == 14, format!("C56_v d={d}"))?;
    let c = &TextClaims::embedded().counts;
    Ok(format!(
        "C56_1 {:?}, C56_w {:?}, C56_v d=14 ({:.0} s)",
        c["C56_1"], c["C56_w"], r.elapsed_seconds
    ))
}

/// `2^n W(x, y) = W(x + 3y, x - y)` evaluated at `x = 1`, `y = t`.
fn macwilliams_holds(n: usize, a: &BTreeMap<usize, BigInt>, t: i64) -> bool {
    let t = BigInt::from(t);
    let one = BigInt::from(1);
    let lhs: BigInt = a.iter().map(|(&i, c)| c * t.pow(i as u32)).sum::<BigInt>() << n;
    let x = &one + BigInt::from(3) * &t;
    let y = &one - &t;
    let rhs: BigInt = a
        .iter()
        .map(|(&i, c)| c * x.pow((n - i) as u32) * y.pow(i as u32))
        .sum();
    lhs == rhs
}

fn gleason() -> Outcome {
    let t = Instant::now();
    let r = reproduce("gleason", &opts()).map_err(|e| e.to_string())?;
    report_ok(&r, 2)?;
    let (params, rows) = enumerator_56_16().map_err(|e| e.to_string())?;
    ensure(rows.len() == 22, "22 printed rows")?;
    // The printed table, read directly: every parameter component satisfies
    // the MacWilliams identity of a Hermitian self-dual code.
    for comp in 0..=params.len() {
        let a: BTreeMap<usize, BigInt> = rows
            .iter()
            .map(|r| (r.weight, if comp == 0 { r.constant.clone() } else { r.coefficients[comp - 1].clone() }))
            .collect();
        for t in [2, 3, -5] {
            ensure(macwilliams_holds(56, &a, t), format!("identity fails for component {comp}"))?;
        }
    }
    // Measured counts give a nonnegative enumerator summing to 4^28.
    let sol = solve_possible_enumerator(56, 16, &params).map_err(|e| e.to_string())?;
    let c = &TextClaims::embedded().counts;
    for name in ["C56_1", "C56_w"] {
        let vals = [BigInt::from(c[name][&16]), BigInt::from(c[name][&18])];
        let a = sol.substitute(&vals).map_err(|e| e.to_string())?;
        ensure(a.values().all(|x| *x >= BigInt::from(0)), format!("{name}: negative entry"))?;
        ensure(a.values().sum::<BigInt>() == BigInt::from(4).pow(28), "sum")?;
    }
    let secs = t.elapsed().as_secs_f64();
    ensure(secs < 1.0, format!("took {secs:.2} s"))?;
    Ok(format!("22 rows exact, sum 4^28, MacWilliams identity holds ({secs:.3} s)"))
}

fn quantum() -> Outcome {
    let r = reproduce("quantum", &opts()).map_err(|e| e.to_string())?;
    report_ok(&r, 3)?;
    Ok("C56_1 gives [[56, 0, 16]], within 16 <= d_max(56,0) <= 20".to_string())
}

fn constructions() -> Outcome {
    let r = reproduce("constructions", &opts()).map_err(|e| e.to_string())?;
    report_ok(&r, 7)?;
    // Definition check of self-duality on the materialized generators.
    for (name, want) in [("G100", 100)] {
        let code = tables::long_construction(name)
            .and_then(|c| c.build())
            .map_err(|e| e.to_string())?;
        let g: Vec<Vec<u8>> = code.generator().rows().iter().map(symbols).collect();
        ensure(code.n() == want && naive_self_dual(&g), format!("{name} fails the definition"))?;
    }
    Ok("G91_1 [91,45] < G91_2 [91,46], X gives self-dual [92,46], G100 self-dual [100,50]; d not certified".to_string())
}

fn properties() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(20240601);
    let mut done = Vec::new();

    // Field tables against the polynomial-basis oracle.
    for x in 0..4u8 {
        for y in 0..4u8 {
            ensure((sym(x) * sym(y)).bits() == f_mul(x, y), "multiplication table")?;
            ensure((sym(x) + sym(y)).bits() == f_add(x, y), "addition table")?;
        }
        ensure(sym(x).conj().bits() == f_conj(x), "conjugation")?;
    }
    done.push("field");

    // Commutation and conjugate transpose of mu-circulants.
    for _ in 0..300 {
        let n = rng.gen_range(1..=16);
        let mu = rng.gen_range(1..4u8);
        let (ra, rb) = (random_row(&mut rng, n), random_row(&mut rng, n));
        let (a, b) = (circulant(&ra, mu), circulant(&rb, mu));
        ensure(m_mul(&a, &b) == m_mul(&b, &a), "AB != BA")?;
        let sa = CirculantSpec::new(sym(mu), to_vector(&ra)).map_err(|e| e.to_string())?;
        let ct = symbols(sa.conj_transpose().first_row());
        ensure(circulant(&ct, mu) == m_conj_t(&a), "conjugate transpose row")?;
        let mut want = vec![f_conj(ra[0])];
        want.extend((1..n).map(|j| f_conj(f_mul(mu, ra[n - j]))));
        ensure(ct == want, "printed conjugate transpose formula")?;
    }
    done.push("circulant algebra");

    // Self-duality condition against the definition.
    let mut hits = 0;
    for _ in 0..10_000 {
        let n = rng.gen_range(1..=8);
        let mu = rng.gen_range(1..4u8);
        let (ra, rb) = (random_row(&mut rng, n), random_row(&mut rng, n));
        let m = ModifiedFourCirculantCode::new(sym(mu), to_vector(&ra), to_vector(&rb)).map_err(|e| e.to_string())?;
        let def = naive_self_dual(&naive_generator(mu, &ra, &rb));
        ensure(m.is_self_dual_condition() == def, "condition disagrees with definition")?;
        hits += usize::from(def);
    }
    ensure(hits > 0, "no self-dual instance sampled")?;
    done.push("self-duality condition");

    // Symmetry variants for every 24-length table row.
    let budget = EquivalenceBudget::default();
    for e in tables::table("T2").map_err(|e| e.to_string())? {
        let c = e.construction.code();
        for v in e.construction.equivalence_variants() {
            match are_equivalent(&c, &v.code(), &budget) {
                Equivalence::Equivalent { map, .. } => {
                    ensure(map.apply_code(&c).ok() == Some(v.code()), "map does not verify")?
                }
                other => return Err(format!("{}: variant {other:?}", e.code_name)),
            }
        }
    }
    done.push("symmetry variants");

    // Leading-one canonicalization at block size 6.
    for mu in Gf4::NONZERO {
        let pc = PackedCirculant::new(6, mu).map_err(|e| e.to_string())?;
        let pairs = meet_in_middle_join(&pc, Reduction::LeadingOne).map_err(|e| e.to_string())?;
        for _ in 0..20 {
            let (a, b) = pairs[rng.gen_range(0..pairs.len())];
            let (va, vb) = (a.to_vector(6), b.to_vector(6));
            for c in [Gf4::W, Gf4::V] {
                let scaled = ModifiedFourCirculantCode::new(mu, va.scaled(c), vb.scaled(c)).map_err(|e| e.to_string())?;
                ensure(scaled.is_self_dual_condition(), "scaled pair not self-dual")?;
                let canonical = pc.build(a, b).code();
                let target = scaled.code();
                // A map scaling each block of length 6 by a constant is an
                // explicit certificate.
                let certified = (0..81usize).any(|m| {
                    let scalars: Vec<Gf4> = (0..24)
                        .map(|j| Gf4::NONZERO[(m / 3usize.pow((j / 6) as u32)) % 3])
                        .collect();
                    let map = MonomialMap::new((0..24).collect(), scalars).expect("valid map");
                    map.apply_code(&canonical).expect("same length") == target
                });
                ensure(certified, "no block-diagonal map sends the canonical pair to the scaled pair")?;
                let verdict = are_equivalent(&target, &canonical, &budget);
                ensure(verdict != Equivalence::Inequivalent, "tester refuted a certified equivalence")?;
                if min_weight_exhaustive(&canonical, &EnumerationBudget::unlimited()).and_then(|r| r.certified_d()).map_err(|e| e.to_string())? >= 6 {
                    ensure(verdict.is_equivalent(), "scaled pair not equivalent to its canonical form")?;
                }
            }
        }
    }
    done.push("leading-one soundness");

    // Join against the double loop over all pairs, tested by definition.
    for n in 1..=4 {
        for mu in 1..4u8 {
            let pc = PackedCirculant::new(n, sym(mu)).map_err(|e| e.to_string())?;
            let joined: BTreeSet<(PackedRow, PackedRow)> = meet_in_middle_join(&pc, Reduction::LeadingOne)
                .map_err(|e| e.to_string())?
                .into_iter()
                .collect();
            let mut brute = BTreeSet::new();
            let rows: Vec<Vec<u8>> = (0..1u32 << (2 * n))
                .map(|x| (0..n).map(|i| ((x >> (2 * i)) & 3) as u8).collect())
                .collect();
            let lead = |r: &[u8]| r.iter().copied().find(|&x| x != 0);
            let circ: Vec<(Vec<Vec<u8>>, Vec<Vec<u8>>)> = rows
                .iter()
                .map(|r| {
                    let c = circulant(r, mu);
                    let h = m_mul(&c, &m_conj_t(&c));
                    (c, h)
                })
                .collect();
            for (i, ra) in rows.iter().enumerate() {
                for (j, rb) in rows.iter().enumerate() {
                    let keep = match lead(ra) {
                        Some(x) => x == 1,
                        None => lead(rb) == Some(1),
                    };
                    if keep && m_add(&circ[i].1, &circ[j].1) == identity(n) {
                        brute.insert((
                            PackedRow::from_vector(&to_vector(ra)),
                            PackedRow::from_vector(&to_vector(rb)),
                        ));
                    }
                }
            }
            ensure(joined == brute, format!("join differs at n={n}"))?;
        }
    }
    done.push("join completeness");

    // Exhaustive and information-set minimum weights, k <= 12.
    let eb = EnumerationBudget::default();
    let mut codes: Vec<LinearCode> = tables::table("T2")
        .map_err(|e| e.to_string())?
        .iter()
        .map(|e| e.construction.code())
        .collect();
    for _ in 0..60 {
        let n = rng.gen_range(4..=30);
        let k = rng.gen_range(1..=12.min(n));
        let rows: Vec<Gf4Vector> = (0..k).map(|_| to_vector(&random_row(&mut rng, n))).collect();
        let c = LinearCode::span(rows, n);
        if !c.is_zero_code() {
            codes.push(c);
        }
    }
    for c in &codes {
        let a = min_weight_exhaustive(c, &eb).and_then(|r| r.certified_d()).map_err(|e| e.to_string())?;
        let b = min_weight_info_set(c, &eb).and_then(|r| r.certified_d()).map_err(|e| e.to_string())?;
        ensure(a == b, format!("exhaustive {a} vs windows {b}"))?;
    }
    done.push("minimum weight methods");

    // Even weights in self-dual codes.
    for id in ["T2", "T3"] {
        for e in tables::table(id).map_err(|e| e.to_string())? {
            let dist = weight_distribution(&e.construction.code(), &eb).map_err(|e| e.to_string())?;
            ensure(dist.iter().skip(1).step_by(2).all(|&x| x == 0), format!("{} has odd weights", e.code_name))?;
        }
    }
    done.push("even weights");

    // Trace form is alternating.
    for _ in 0..2000 {
        let n = rng.gen_range(1..40);
        let (x, y) = (to_vector(&random_row(&mut rng, n)), to_vector(&random_row(&mut rng, n)));
        ensure(trace_inner(&x, &y) == trace_inner(&y, &x), "trace form not symmetric")?;
        ensure(trace_inner(&x, &x) == Ok(0), "trace form not alternating")?;
    }
    done.push("trace form");

    Ok(done.join(", "))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 12] = [
        ("T2 [24,12,8] codes", table2),
        ("T3 [28,14,10] codes", table3),
        ("T4 [36,18,12] codes", table4),
        ("[32,16,10] appendix lists", appendix),
        ("classification counts", classification),
        ("w/v equivalences", remark),
        ("T5 [40/44] codes", table5),
        ("[56,28,16] codes and counts", headline),
        ("possible weight enumerator", gleason),
        ("quantum [[56,0,16]]", quantum),
        ("length 91/92/100 constructions", constructions),
        ("property suites", properties),
    ];
    let selected: Vec<usize> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let mut failed = 0;
    let total = Instant::now();
    for (i, (name, f)) in criteria.iter().enumerate() {
        let id = i + 1;
        if !selected.is_empty() && !selected.contains(&id) {
            continue;
        }
        let t = Instant::now();
        let result = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|p| {
            Err(p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panic".to_string()))
        });
        let secs = t.elapsed().as_secs_f64();
        match result {
            Ok(detail) => println!("PASS {id:>2} {name}: {detail} [{secs:.1} s]"),
            Err(why) => {
                failed += 1;
                println!("FAIL {id:>2} {name}: {why} [{secs:.1} s]");
            }
        }
    }
    println!("acceptance: {failed} failed, total {:.1} s", total.elapsed().as_secs_f64());
    if failed > 0 {
        std::process::exit(1);
    }
}
