//! Embedded reference datasets: published code tables, the length 91/100
//! constructions, minimum-weight bounds and the length 56 enumerator table.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use num_bigint::BigInt;
use serde::Serialize;

use crate::constructions::{fields, Construction, ModifiedFourCirculantCode};
use crate::error::{Error, Result};
use crate::gf4::Gf4;

pub const CODES_DATA: &str = include_str!("../data/table_codes.txt");
pub const LONG_CODES_DATA: &str = include_str!("../data/grassl_codes.txt");
pub const BOUNDS_DATA: &str = include_str!("../data/bounds.txt");
pub const ENUMERATOR_56_16_DATA: &str = include_str!("../data/w56_16.csv");
pub const CLAIMS_DATA: &str = include_str!("../data/claims.txt");

/// Table identifiers in dataset order.
pub const TABLE_IDS: [&str; 8] = ["T2", "T3", "T4", "T5", "T32-1", "T32-2", "T32-3", "T9"];

fn data_lines(text: &str) -> impl Iterator<Item = &str> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
}

fn parse_num<T: std::str::FromStr>(s: &str, line: &str) -> Result<T> {
    s.parse()
        .map_err(|_| Error::Parse(format!("bad number {s:?} in {line:?}")))
}

/// One row of a published table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct TableEntry {
    pub table_id: String,
    pub code_name: String,
    #[serde(serialize_with = "serialize_m4c")]
    pub construction: ModifiedFourCirculantCode,
    /// Printed minimum weight.
    pub d: usize,
    /// Printed codeword counts, keyed by weight.
    pub counts: BTreeMap<usize, u64>,
}

fn serialize_m4c<S: serde::Serializer>(c: &ModifiedFourCirculantCode, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&c.to_record())
}

impl TableEntry {
    pub fn parse(line: &str) -> Result<Self> {
        let mut it = line.split_whitespace();
        let (Some(table_id), Some(code_name)) = (it.next(), it.next()) else {
            return Err(Error::Parse(format!("short table line {line:?}")));
        };
        let rest: Vec<&str> = it.collect();
        let (claims, record): (Vec<&str>, Vec<&str>) = rest
            .iter()
            .partition(|t| t.starts_with("d=") || t.starts_with('A'));
        let Construction::ModifiedFourCirculant(construction) = record.join(" ").parse()? else {
            return Err(Error::Parse(format!("table rows must be m4c records: {line:?}")));
        };
        let mut d = None;
        let mut counts = BTreeMap::new();
        for (k, v) in fields(&claims.join(" "))? {
            if k == "d" {
                d = Some(parse_num(v, line)?);
            } else {
                counts.insert(parse_num(&k[1..], line)?, parse_num(v, line)?);
            }
        }
        Ok(TableEntry {
            table_id: table_id.to_string(),
            code_name: code_name.to_string(),
            construction,
            d: d.ok_or_else(|| Error::Parse(format!("missing d= in {line:?}")))?,
            counts,
        })
    }

    pub fn to_line(&self) -> String {
        let mut s = format!(
            "{} {} {} d={}",
            self.table_id,
            self.code_name,
            self.construction.to_record(),
            self.d
        );
        for (w, a) in &self.counts {
            s.push_str(&format!(" A{w}={a}"));
        }
        s
    }

    pub fn length(&self) -> usize {
        self.construction.length()
    }
}

/// All published table rows.
pub fn table_entries() -> &'static [TableEntry] {
    static ENTRIES: OnceLock<Vec<TableEntry>> = OnceLock::new();
    ENTRIES.get_or_init(|| {
        data_lines(CODES_DATA)
            .map(|l| TableEntry::parse(l).expect("embedded table data parses"))
            .collect()
    })
}

/// Rows of one table; unknown ids are an error.
pub fn table(id: &str) -> Result<Vec<&'static TableEntry>> {
    if !TABLE_IDS.contains(&id) {
        return Err(Error::InvalidArgument(format!(
            "unknown table {id:?}; expected one of {}",
            TABLE_IDS.join(", ")
        )));
    }
    Ok(table_entries().iter().filter(|e| e.table_id == id).collect())
}

/// Looks up a row by code name, e.g. `C56_1` or `C24_w_3`.
pub fn entry(name: &str) -> Option<&'static TableEntry> {
    table_entries().iter().find(|e| e.code_name == name)
}

/// Named long-length constructions: `G91_1`, `G91_2`, `G100`.
pub fn long_construction(name: &str) -> Result<Construction> {
    for line in data_lines(LONG_CODES_DATA) {
        if let Some((head, record)) = line.split_once(' ') {
            if head == name {
                return record.parse();
            }
        }
    }
    Err(Error::InvalidArgument(format!("unknown construction {name:?}")))
}

/// Closed interval of values.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Range {
    pub lo: usize,
    pub hi: usize,
}

impl Range {
    pub fn contains(&self, x: usize) -> bool {
        self.lo <= x && x <= self.hi
    }
}

/// Reference values for minimum weights.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct KnownBounds {
    /// Largest minimum weight of previously known codes, by length.
    pub d_known: BTreeMap<usize, usize>,
    /// Range for the largest minimum weight of self-dual codes, by length.
    pub d_range: BTreeMap<usize, Range>,
    /// Range for modified four μ-circulant codes, by length and μ.
    pub d_mu_range: BTreeMap<(usize, Gf4), Range>,
    /// Range for linear `[n, k]` codes, with the earlier lower bound.
    pub d4_range: BTreeMap<(usize, usize), (Range, usize)>,
    /// Range for quantum `[[n, k, d]]` codes, with the earlier lower bound.
    pub dmax_range: BTreeMap<(usize, usize), (Range, usize)>,
}

impl KnownBounds {
    pub fn parse(text: &str) -> Result<Self> {
        let mut b = KnownBounds::default();
        for line in data_lines(text) {
            let (kind, rest) = line
                .split_once(' ')
                .ok_or_else(|| Error::Parse(format!("bad bounds line {line:?}")))?;
            let f: BTreeMap<&str, &str> = fields(rest)?.into_iter().collect();
            let num = |key: &str| -> Result<usize> {
                let v = f
                    .get(key)
                    .ok_or_else(|| Error::Parse(format!("missing {key} in {line:?}")))?;
                parse_num(v, line)
            };
            let range = || -> Result<Range> {
                let r = Range {
                    lo: num("lo")?,
                    hi: num("hi")?,
                };
                if r.lo > r.hi {
                    return Err(Error::Parse(format!("empty range in {line:?}")));
                }
                Ok(r)
            };
            match kind {
                "dK" => {
                    b.d_known.insert(num("n")?, num("d")?);
                }
                "dn" => {
                    b.d_range.insert(num("n")?, range()?);
                }
                "dmu" => {
                    let mu = Gf4::parse_mu(f.get("mu").copied().unwrap_or("?"))?;
                    b.d_mu_range.insert((num("n")?, mu), range()?);
                }
                "d4" => {
                    b.d4_range.insert((num("n")?, num("k")?), (range()?, num("prior_lo")?));
                }
                "dmax" => {
                    b.dmax_range.insert((num("n")?, num("k")?), (range()?, num("prior_lo")?));
                }
                other => return Err(Error::Parse(format!("unknown bounds kind {other:?}"))),
            }
        }
        Ok(b)
    }

    pub fn embedded() -> &'static KnownBounds {
        static B: OnceLock<KnownBounds> = OnceLock::new();
        B.get_or_init(|| KnownBounds::parse(BOUNDS_DATA).expect("embedded bounds parse"))
    }
}

/// One printed row of a possible weight enumerator: `A_i` as a constant
/// plus integer multiples of the free parameters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnumeratorRow {
    pub weight: usize,
    pub constant: BigInt,
    pub coefficients: Vec<BigInt>,
}

/// The printed two-parameter enumerator for length 56, minimum weight 16.
pub fn enumerator_56_16() -> Result<(Vec<String>, Vec<EnumeratorRow>)> {
    parse_enumerator_csv(ENUMERATOR_56_16_DATA)
}

/// Reads `weight,constant,<param>...` CSV text.
pub fn parse_enumerator_csv(text: &str) -> Result<(Vec<String>, Vec<EnumeratorRow>)> {
    let mut lines = data_lines(text);
    let header: Vec<&str> = lines
        .next()
        .ok_or_else(|| Error::Parse("empty enumerator table".to_string()))?
        .split(',')
        .collect();
    if header.len() < 2 || header[0] != "weight" || header[1] != "constant" {
        return Err(Error::Parse(format!("bad enumerator header {header:?}")));
    }
    let params = header[2..].iter().map(|s| s.to_string()).collect();
    let rows = lines
        .map(|line| {
            let cells: Vec<&str> = line.split(',').collect();
            if cells.len() != header.len() {
                return Err(Error::Parse(format!("wrong column count in {line:?}")));
            }
            Ok(EnumeratorRow {
                weight: parse_num(cells[0], line)?,
                constant: parse_num(cells[1], line)?,
                coefficients: cells[2..]
                    .iter()
                    .map(|c| parse_num(c, line))
                    .collect::<Result<_>>()?,
            })
        })
        .collect::<Result<_>>()?;
    Ok((params, rows))
}

/// Claims stated outside the code tables.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TextClaims {
    /// Code name to codeword counts by weight.
    pub counts: BTreeMap<String, BTreeMap<usize, u64>>,
    /// `(n, mu, d)` to the number of equivalence classes.
    pub classes: BTreeMap<(usize, Gf4, usize), usize>,
    /// `(n, d)`: no code with block size `n` reaches minimum weight `d`.
    pub none: Vec<(usize, usize)>,
    pub equivalent: Vec<(String, String)>,
    /// Code name to quantum `(n, k, d)`.
    pub quantum: BTreeMap<String, (usize, usize, usize)>,
    /// Construction name to `(n, k)`.
    pub dims: BTreeMap<String, (usize, usize)>,
}

impl TextClaims {
    pub fn parse(text: &str) -> Result<Self> {
        let mut c = TextClaims::default();
        for line in data_lines(text) {
            let mut it = line.split_whitespace();
            let kind = it.next().unwrap_or_default();
            let rest: Vec<&str> = it.collect();
            let named = |rest: &[&str]| -> Result<(String, BTreeMap<String, String>)> {
                let (name, kv) = rest
                    .split_first()
                    .ok_or_else(|| Error::Parse(format!("missing name in {line:?}")))?;
                let f = fields(&kv.join(" "))?
                    .into_iter()
                    .map(|(k, v)| (k.to_string(), v.to_string()))
                    .collect();
                Ok((name.to_string(), f))
            };
            let get = |f: &BTreeMap<String, String>, k: &str| -> Result<usize> {
                parse_num(
                    f.get(k).ok_or_else(|| Error::Parse(format!("missing {k} in {line:?}")))?,
                    line,
                )
            };
            match kind {
                "count" => {
                    let (name, f) = named(&rest)?;
                    let counts = f
                        .iter()
                        .map(|(k, v)| {
                            let w = k
                                .strip_prefix('A')
                                .ok_or_else(|| Error::Parse(format!("bad count key in {line:?}")))?;
                            Ok((parse_num(w, line)?, parse_num(v, line)?))
                        })
                        .collect::<Result<_>>()?;
                    c.counts.insert(name, counts);
                }
                "classes" | "none" => {
                    let f: BTreeMap<String, String> = fields(&rest.join(" "))?
                        .into_iter()
                        .map(|(k, v)| (k.to_string(), v.to_string()))
                        .collect();
                    if kind == "none" {
                        c.none.push((get(&f, "n")?, get(&f, "d")?));
                    } else {
                        let mu = Gf4::parse_mu(f.get("mu").map_or("?", String::as_str))?;
                        c.classes.insert((get(&f, "n")?, mu, get(&f, "d")?), get(&f, "count")?);
                    }
                }
                "equiv" => match rest[..] {
                    [a, b] => c.equivalent.push((a.to_string(), b.to_string())),
                    _ => return Err(Error::Parse(format!("equiv needs two names: {line:?}"))),
                },
                "quantum" => {
                    let (name, f) = named(&rest)?;
                    c.quantum.insert(name, (get(&f, "n")?, get(&f, "k")?, get(&f, "d")?));
                }
                "dims" => {
                    let (name, f) = named(&rest)?;
                    c.dims.insert(name, (get(&f, "n")?, get(&f, "k")?));
                }
                other => return Err(Error::Parse(format!("unknown claim kind {other:?}"))),
            }
        }
        Ok(c)
    }

    pub fn embedded() -> &'static TextClaims {
        static C: OnceLock<TextClaims> = OnceLock::new();
        C.get_or_init(|| TextClaims::parse(CLAIMS_DATA).expect("embedded claims parse"))
    }
}
