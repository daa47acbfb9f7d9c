//! Rechecks the embedded reference data and reports each claim.

use std::collections::BTreeMap;
use std::time::Instant;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;

use crate::classifier::{exhaustive_classify, ClassifyOptions, SearchOutcome};
use crate::code::LinearCode;
use crate::constructions::construction_x;
use crate::equivalence::{are_equivalent, Equivalence, EquivalenceBudget};
use crate::error::{Error, Result};
use crate::gf4::{Gf4, Gf4Vector};
use crate::gleason::solve_possible_enumerator;
use crate::quantum::{is_trace_self_dual, quantum_from_self_dual};
use crate::tables::{self, enumerator_56_16, KnownBounds, TableEntry, TextClaims, TABLE_IDS};
use crate::weight::{count_words, min_weight, weight_distribution, EnumerationBudget};

/// Lengths from which minimum weights are only certified on request.
pub const LONG_RUNNING_LENGTH: usize = 60;

/// Targets accepted by [`reproduce`] besides the table ids.
pub const CLAIM_IDS: [&str; 6] = ["classes", "equiv", "counts", "gleason", "quantum", "constructions"];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub enum ClaimStatus {
    Pass,
    Fail,
    /// Not attempted without the long-running flag.
    LongRunning,
    BudgetExceeded,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ClaimResult {
    /// Where the claim comes from, e.g. `T2 C24_1_1`.
    pub locus: String,
    pub claim: String,
    pub observed: String,
    pub status: ClaimStatus,
    pub seconds: f64,
}

impl ClaimResult {
    fn check(locus: &str, claim: String, observed: String, ok: bool, t: Instant) -> Self {
        ClaimResult {
            locus: locus.to_string(),
            claim,
            observed,
            status: if ok { ClaimStatus::Pass } else { ClaimStatus::Fail },
            seconds: t.elapsed().as_secs_f64(),
        }
    }

    fn from_error(locus: &str, claim: String, e: Error, t: Instant) -> Self {
        ClaimResult {
            locus: locus.to_string(),
            claim,
            status: if matches!(e, Error::BudgetExceeded(_)) {
                ClaimStatus::BudgetExceeded
            } else {
                ClaimStatus::Fail
            },
            observed: e.to_string(),
            seconds: t.elapsed().as_secs_f64(),
        }
    }

    fn skipped(locus: &str, claim: String) -> Self {
        ClaimResult {
            locus: locus.to_string(),
            claim,
            observed: "not attempted".to_string(),
            status: ClaimStatus::LongRunning,
            seconds: 0.0,
        }
    }
}

/// Outcome of a reproduction or verification run.
#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct RunReport {
    pub command: String,
    pub version: String,
    pub seeds: Vec<u64>,
    pub claims: Vec<ClaimResult>,
    pub elapsed_seconds: f64,
}

impl RunReport {
    pub fn new(command: impl Into<String>) -> Self {
        RunReport {
            command: command.into(),
            version: env!("CARGO_PKG_VERSION").to_string(),
            seeds: Vec::new(),
            claims: Vec::new(),
            elapsed_seconds: 0.0,
        }
    }

    /// No claim failed. Budget and long-running skips do not count as failures.
    pub fn passed(&self) -> bool {
        self.claims.iter().all(|c| c.status != ClaimStatus::Fail)
    }

    pub fn count(&self, status: ClaimStatus) -> usize {
        self.claims.iter().filter(|c| c.status == status).count()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// One line per claim.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for c in &self.claims {
            let tag = match c.status {
                ClaimStatus::Pass => "PASS",
                ClaimStatus::Fail => "FAIL",
                ClaimStatus::LongRunning => "LONG",
                ClaimStatus::BudgetExceeded => "BUDGET",
            };
            s.push_str(&format!(
                "{tag:6} {:18} {:30} observed {} ({:.2} s)\n",
                c.locus, c.claim, c.observed, c.seconds
            ));
        }
        s.push_str(&format!(
            "{} pass, {} fail, {} long-running, {} over budget in {:.1} s\n",
            self.count(ClaimStatus::Pass),
            self.count(ClaimStatus::Fail),
            self.count(ClaimStatus::LongRunning),
            self.count(ClaimStatus::BudgetExceeded),
            self.elapsed_seconds
        ));
        s
    }
}

/// Options shared by the reproduction targets.
#[derive(Clone, Copy, Debug)]
pub struct ReproduceOptions {
    pub budget: EnumerationBudget,
    pub equivalence: EquivalenceBudget,
    /// Also run the jobs that take hours.
    pub long: bool,
}

impl Default for ReproduceOptions {
    fn default() -> Self {
        ReproduceOptions {
            budget: EnumerationBudget::default(),
            equivalence: EquivalenceBudget::default(),
            long: false,
        }
    }
}

/// Checks one named code against printed or derived claims: self-duality,
/// minimum weight and codeword counts.
pub fn verify_code(
    locus: &str,
    code: &LinearCode,
    d: Option<usize>,
    counts: &BTreeMap<usize, u64>,
    opts: &ReproduceOptions,
) -> Vec<ClaimResult> {
    let mut out = Vec::new();
    let t = Instant::now();
    out.push(ClaimResult::check(
        locus,
        format!("[{}, {}] self-dual", code.n(), code.k()),
        format!("[{}, {}] self-dual={}", code.n(), code.k(), code.is_hermitian_self_dual()),
        code.is_hermitian_self_dual(),
        t,
    ));
    let long = code.n() >= LONG_RUNNING_LENGTH && !opts.long;
    if let Some(d) = d {
        let claim = format!("d={d}");
        if long {
            out.push(ClaimResult::skipped(locus, claim));
        } else {
            let t = Instant::now();
            out.push(match min_weight(code, &opts.budget).and_then(|r| r.certified_d()) {
                Ok(got) => ClaimResult::check(locus, claim, format!("d={got}"), got == d, t),
                Err(e) => ClaimResult::from_error(locus, claim, e, t),
            });
        }
    }
    if counts.is_empty() {
        return out;
    }
    let claim = counts
        .iter()
        .map(|(w, a)| format!("A{w}={a}"))
        .collect::<Vec<_>>()
        .join(" ");
    if long {
        out.push(ClaimResult::skipped(locus, claim));
        return out;
    }
    let t = Instant::now();
    let weights: Vec<usize> = counts.keys().copied().collect();
    let got = if code.k() <= 14 {
        weight_distribution(code, &opts.budget)
            .map(|dist| weights.iter().map(|&w| (w, dist.get(w).copied().unwrap_or(0))).collect())
    } else {
        count_words(code, &weights, &opts.budget)
    };
    out.push(match got {
        Ok(got) => {
            let observed = got
                .iter()
                .map(|(w, a)| format!("A{w}={a}"))
                .collect::<Vec<_>>()
                .join(" ");
            ClaimResult::check(locus, claim, observed, got == *counts, t)
        }
        Err(e) => ClaimResult::from_error(locus, claim, e, t),
    });
    out
}

fn table_claims(entries: &[&TableEntry], opts: &ReproduceOptions) -> Vec<ClaimResult> {
    entries
        .par_iter()
        .map(|e| {
            let locus = format!("{} {}", e.table_id, e.code_name);
            verify_code(&locus, &e.construction.code(), Some(e.d), &e.counts, opts)
        })
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect()
}

fn classification_claims(opts: &ReproduceOptions) -> Vec<ClaimResult> {
    let claims = TextClaims::embedded();
    let copts = ClassifyOptions {
        enumeration: opts.budget,
        equivalence: opts.equivalence,
        ..ClassifyOptions::default()
    };
    let mut out = Vec::new();
    let mut outcomes: BTreeMap<(usize, Gf4), SearchOutcome> = BTreeMap::new();
    for (&(n, mu, d), &count) in &claims.classes {
        let locus = format!("classes n={n} mu={mu}");
        let claim = format!("{count} classes with d>={d}");
        let t = Instant::now();
        match exhaustive_classify(n, mu, d, &copts) {
            Ok(o) => {
                out.push(ClaimResult::check(
                    &locus,
                    claim,
                    format!("{} classes, {} undecided", o.class_count, o.undecided_pairs),
                    o.class_count == count && o.undecided_pairs == 0,
                    t,
                ));
                outcomes.insert((n, mu), o);
            }
            Err(e) => out.push(ClaimResult::from_error(&locus, claim, e, t)),
        }
    }
    for &(n, d) in &claims.none {
        for mu in Gf4::NONZERO {
            let locus = format!("none n={n} mu={mu}");
            let claim = format!("no code with d>={d}");
            let t = Instant::now();
            let max = match outcomes.get(&(n, mu)) {
                Some(o) if o.d_target <= d => Ok(o.max_weight_found),
                _ => exhaustive_classify(n, mu, d, &copts).map(|o| o.max_weight_found),
            };
            out.push(match max {
                Ok(m) => ClaimResult::check(
                    &locus,
                    claim,
                    format!("largest d {}", m.map_or("none".to_string(), |x| x.to_string())),
                    m.map_or(true, |x| x < d),
                    t,
                ),
                Err(e) => ClaimResult::from_error(&locus, claim, e, t),
            });
        }
    }
    out
}

fn named_code(name: &str) -> Result<LinearCode> {
    tables::entry(name)
        .map(|e| e.construction.code())
        .ok_or_else(|| Error::InvalidArgument(format!("unknown code {name:?}")))
}

fn equivalence_claims(opts: &ReproduceOptions) -> Vec<ClaimResult> {
    TextClaims::embedded()
        .equivalent
        .par_iter()
        .map(|(a, b)| {
            let locus = format!("equiv {a}");
            let claim = format!("{a} ~ {b}");
            let t = Instant::now();
            let (c1, c2) = match (named_code(a), named_code(b)) {
                (Ok(x), Ok(y)) => (x, y),
                (Err(e), _) | (_, Err(e)) => return ClaimResult::from_error(&locus, claim, e, t),
            };
            match are_equivalent(&c1, &c2, &opts.equivalence) {
                Equivalence::Equivalent { map, .. } => {
                    let ok = map.apply_code(&c1).map_or(false, |img| img == c2);
                    ClaimResult::check(&locus, claim, format!("map {map}"), ok, t)
                }
                other => ClaimResult::check(&locus, claim, format!("{other:?}"), false, t),
            }
        })
        .collect()
}

fn count_claims(opts: &ReproduceOptions) -> Vec<ClaimResult> {
    let claims = TextClaims::embedded();
    let mut out = Vec::new();
    for (name, counts) in &claims.counts {
        let t = Instant::now();
        match named_code(name) {
            Ok(code) => {
                let d = tables::entry(name).map(|e| e.d);
                out.extend(verify_code(&format!("counts {name}"), &code, d, counts, opts));
            }
            Err(e) => out.push(ClaimResult::from_error(name, "known code".to_string(), e, t)),
        }
    }
    out
}

fn gleason_claims() -> Vec<ClaimResult> {
    let t = Instant::now();
    let locus = "gleason n=56 d=16";
    let (params, rows) = match enumerator_56_16() {
        Ok(x) => x,
        Err(e) => return vec![ClaimResult::from_error(locus, "printed table".to_string(), e, t)],
    };
    let sol = match solve_possible_enumerator(56, 16, &params) {
        Ok(s) => s,
        Err(e) => return vec![ClaimResult::from_error(locus, "solvable".to_string(), e, t)],
    };
    let mut out = Vec::new();
    let solved: BTreeMap<usize, _> = sol.nonzero_rows().collect();
    let mismatched: Vec<usize> = rows
        .iter()
        .filter(|r| {
            solved.get(&r.weight).map_or(true, |p| p.constant != r.constant || p.coefficients != r.coefficients)
        })
        .map(|r| r.weight)
        .collect();
    let ok = mismatched.is_empty() && solved.len() == rows.len();
    out.push(ClaimResult::check(
        locus,
        format!("{} printed rows", rows.len()),
        format!("{} nonzero rows, mismatched weights {mismatched:?}", solved.len()),
        ok,
        t,
    ));
    let total = sol.total();
    let want = BigInt::from(4).pow(28);
    out.push(ClaimResult::check(
        locus,
        "sum A_i = 4^28".to_string(),
        format!("{}", total.display(&sol.params)),
        total.constant == want && total.is_constant(),
        t,
    ));
    out
}

fn quantum_claims(opts: &ReproduceOptions) -> Vec<ClaimResult> {
    let bounds = KnownBounds::embedded();
    let mut out = Vec::new();
    for (name, &(n, k, d)) in &TextClaims::embedded().quantum {
        let locus = format!("quantum {name}");
        let claim = format!("[[{n}, {k}, {d}]]");
        let t = Instant::now();
        let code = match named_code(name) {
            Ok(c) => c,
            Err(e) => {
                out.push(ClaimResult::from_error(&locus, claim, e, t));
                continue;
            }
        };
        out.push(ClaimResult::check(
            &locus,
            "additive self-dual".to_string(),
            is_trace_self_dual(&code).to_string(),
            is_trace_self_dual(&code),
            t,
        ));
        let got = min_weight(&code, &opts.budget).and_then(|r| quantum_from_self_dual(&code, &r, name));
        match got {
            Ok(q) => {
                let ok = (q.n, q.k, q.d) == (n, k, d);
                out.push(ClaimResult::check(&locus, claim, q.to_string(), ok, t));
                if let Some((range, _)) = bounds.dmax_range.get(&(n, k)) {
                    out.push(ClaimResult::check(
                        &locus,
                        format!("{} <= d_max <= {}", range.lo, range.hi),
                        format!("d={}", q.d),
                        range.contains(q.d),
                        t,
                    ));
                }
            }
            Err(e) => out.push(ClaimResult::from_error(&locus, claim, e, t)),
        }
    }
    out
}

fn dims_claim(locus: &str, code: &LinearCode, t: Instant) -> ClaimResult {
    let claims = &TextClaims::embedded().dims;
    let want = claims.get(locus).copied();
    ClaimResult::check(
        locus,
        want.map_or("known".to_string(), |(n, k)| format!("[{n}, {k}]")),
        format!("[{}, {}]", code.n(), code.k()),
        want == Some((code.n(), code.k())),
        t,
    )
}

fn construction_claims(opts: &ReproduceOptions) -> Vec<ClaimResult> {
    let mut out = Vec::new();
    let t = Instant::now();
    let built = |name: &str| tables::long_construction(name).and_then(|c| c.build());
    let (g1, g2, g100) = match (built("G91_1"), built("G91_2"), built("G100")) {
        (Ok(a), Ok(b), Ok(c)) => (a, b, c),
        (Err(e), _, _) | (_, Err(e), _) | (_, _, Err(e)) => {
            return vec![ClaimResult::from_error("constructions", "buildable".to_string(), e, t)]
        }
    };
    out.push(dims_claim("G91_1", &g1, t));
    out.push(dims_claim("G91_2", &g2, t));
    let sub = g1.is_subcode_of(&g2).unwrap_or(false);
    out.push(ClaimResult::check("G91_1", "subcode of G91_2".to_string(), sub.to_string(), sub, t));
    let aux = LinearCode::span(vec![Gf4Vector::from_symbols(&[Gf4::ONE])], 1);
    match construction_x(&g1, &g2, &aux) {
        Ok(g92) => {
            out.push(dims_claim("G92", &g92, t));
            out.extend(verify_code("G92", &g92, None, &BTreeMap::new(), opts));
            if opts.long {
                out.push(long_weight("G92", &g92, opts));
            }
        }
        Err(e) => out.push(ClaimResult::from_error("G92", "construction X".to_string(), e, t)),
    }
    out.push(dims_claim("G100", &g100, t));
    out.extend(verify_code("G100", &g100, None, &BTreeMap::new(), opts));
    if opts.long {
        out.push(long_weight("G100", &g100, opts));
    }
    out
}

/// Minimum weight of a long construction, reported without a printed value.
fn long_weight(locus: &str, code: &LinearCode, opts: &ReproduceOptions) -> ClaimResult {
    let t = Instant::now();
    match min_weight(code, &opts.budget) {
        Ok(r) => {
            let observed = match r.d {
                Some(d) if r.certified => format!("d={d}"),
                _ => format!("{} <= d <= {:?}", r.lower_bound, r.d),
            };
            ClaimResult::check(locus, "minimum weight".to_string(), observed, r.certified, t)
        }
        Err(e) => ClaimResult::from_error(locus, "minimum weight".to_string(), e, t),
    }
}

/// Runs the checks for a table id or one of [`CLAIM_IDS`].
pub fn reproduce(id: &str, opts: &ReproduceOptions) -> Result<RunReport> {
    let t = Instant::now();
    let mut report = RunReport::new(format!("reproduce {id}{}", if opts.long { " --long" } else { "" }));
    report.claims = match id {
        "classes" => classification_claims(opts),
        "equiv" => equivalence_claims(opts),
        "counts" => count_claims(opts),
        "gleason" => gleason_claims(),
        "quantum" => quantum_claims(opts),
        "constructions" => construction_claims(opts),
        _ if TABLE_IDS.contains(&id) => table_claims(&tables::table(id)?, opts),
        _ => {
            return Err(Error::InvalidArgument(format!(
                "unknown target {id:?}; expected one of {}, {}",
                TABLE_IDS.join(", "),
                CLAIM_IDS.join(", ")
            )))
        }
    };
    report.elapsed_seconds = t.elapsed().as_secs_f64();
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_targets() {
        let o = ReproduceOptions::default();
        assert!(reproduce("", &o).is_err());
        assert!(reproduce("T1", &o).is_err());
    }

    #[test]
    fn small_targets() {
        let o = ReproduceOptions::default();
        let r = reproduce("gleason", &o).unwrap();
        assert!(r.passed() && r.count(ClaimStatus::Pass) == 2, "{}", r.to_text());
        let r = reproduce("T3", &o).unwrap();
        assert_eq!(r.count(ClaimStatus::Pass), 2 * 9, "{}", r.to_text());
    }

    #[test]
    fn long_entries_are_skipped() {
        let e = tables::entry("C60_1").unwrap();
        let claims = verify_code("T9 C60_1", &e.construction.code(), Some(e.d), &e.counts, &ReproduceOptions::default());
        assert_eq!(claims[0].status, ClaimStatus::Pass);
        assert_eq!(claims[1].status, ClaimStatus::LongRunning);
    }
}
