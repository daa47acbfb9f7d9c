//! Code constructions: modified four μ-circulant codes, cyclic codes,
//! Construction X and double circulant codes.

use std::fmt;
use std::str::FromStr;

use crate::circulant::CirculantSpec;
use crate::code::LinearCode;
use crate::error::{Error, Result};
use crate::gf4::{Gf4, Gf4Matrix, Gf4Vector};
use crate::poly::Poly;

/// The `[4n, 2n]` code with generator
///
/// ```text
/// ( I_2n | A          B        )
/// (      | conj(B)^T  conj(A)^T )
/// ```
///
/// where `A` and `B` are μ-circulant with first rows `rA` and `rB`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ModifiedFourCirculantCode {
    a: CirculantSpec,
    b: CirculantSpec,
}

impl ModifiedFourCirculantCode {
    pub fn new(mu: Gf4, ra: Gf4Vector, rb: Gf4Vector) -> Result<Self> {
        if ra.len() != rb.len() {
            return Err(Error::LengthMismatch {
                left: ra.len(),
                right: rb.len(),
            });
        }
        Ok(ModifiedFourCirculantCode {
            a: CirculantSpec::new(mu, ra)?,
            b: CirculantSpec::new(mu, rb)?,
        })
    }

    pub fn parse(mu: &str, ra: &str, rb: &str) -> Result<Self> {
        ModifiedFourCirculantCode::new(Gf4::parse_mu(mu)?, Gf4Vector::parse(ra)?, Gf4Vector::parse(rb)?)
    }

    fn from_specs(a: CirculantSpec, b: CirculantSpec) -> Self {
        ModifiedFourCirculantCode { a, b }
    }

    pub fn mu(&self) -> Gf4 {
        self.a.mu()
    }

    /// Circulant size; the code has length `4n`.
    pub fn block_size(&self) -> usize {
        self.a.n()
    }

    pub fn length(&self) -> usize {
        4 * self.block_size()
    }

    pub fn a(&self) -> &CirculantSpec {
        &self.a
    }

    pub fn b(&self) -> &CirculantSpec {
        &self.b
    }

    pub fn ra(&self) -> &Gf4Vector {
        self.a.first_row()
    }

    pub fn rb(&self) -> &Gf4Vector {
        self.b.first_row()
    }

    /// The `2n x 2n` block to the right of the identity.
    pub fn right_block(&self) -> Gf4Matrix {
        let top = self.a.materialize().hstack(&self.b.materialize()).expect("square blocks");
        let bottom = self
            .b
            .conj_transpose()
            .materialize()
            .hstack(&self.a.conj_transpose().materialize())
            .expect("square blocks");
        top.vstack(&bottom).expect("equal widths")
    }

    pub fn generator(&self) -> Gf4Matrix {
        Gf4Matrix::identity(2 * self.block_size())
            .hstack(&self.right_block())
            .expect("equal heights")
    }

    pub fn code(&self) -> LinearCode {
        LinearCode::from_generator(&self.generator()).expect("contains an identity block")
    }

    /// `A conj(A)^T + B conj(B)^T = I`, evaluated on first rows.
    pub fn is_self_dual_condition(&self) -> bool {
        let sum = self
            .a
            .hermitian_square()
            .add(&self.b.hermitian_square())
            .expect("same shape");
        sum.first_row() == &Gf4Vector::unit(self.block_size(), 0)
    }

    /// The transforms `(wA, wB)`, `(vA, vB)`, `(B, A)`, `(conj(A)^T, conj(B)^T)`
    /// and `(A, conj(B)^T)`, each of which gives an equivalent code when
    /// the input is self-dual.
    pub fn equivalence_variants(&self) -> Vec<ModifiedFourCirculantCode> {
        let (a, b) = (&self.a, &self.b);
        vec![
            Self::from_specs(a.scaled(Gf4::W), b.scaled(Gf4::W)),
            Self::from_specs(a.scaled(Gf4::V), b.scaled(Gf4::V)),
            Self::from_specs(b.clone(), a.clone()),
            Self::from_specs(a.conj_transpose(), b.conj_transpose()),
            Self::from_specs(a.clone(), b.conj_transpose()),
        ]
    }

    /// The same construction with `rA` scaled to lead with 1.
    pub fn canonical(&self) -> Self {
        let (ra, rb) = canonicalize_leading_one(self.ra(), self.rb());
        ModifiedFourCirculantCode::new(self.mu(), ra, rb).expect("same shape")
    }

    pub fn to_record(&self) -> String {
        format!("type=m4c mu={} rA={} rB={}", self.mu(), self.ra(), self.rb())
    }
}

impl fmt::Debug for ModifiedFourCirculantCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "C({})", self.to_record())
    }
}

/// Free-function form of [`ModifiedFourCirculantCode::is_self_dual_condition`].
pub fn is_self_dual_condition(mu: Gf4, ra: &Gf4Vector, rb: &Gf4Vector) -> Result<bool> {
    Ok(ModifiedFourCirculantCode::new(mu, ra.clone(), rb.clone())?.is_self_dual_condition())
}

/// Scales both rows so the first nonzero symbol of `ra` is 1; rows are
/// returned unchanged when `ra` is zero.
pub fn canonicalize_leading_one(ra: &Gf4Vector, rb: &Gf4Vector) -> (Gf4Vector, Gf4Vector) {
    match ra.first_nonzero() {
        Some((_, x)) if x != Gf4::ONE => {
            let c = x.inv().expect("nonzero");
            (ra.scaled(c), rb.scaled(c))
        }
        _ => (ra.clone(), rb.clone()),
    }
}

/// A cyclic code of length `n` with generator polynomial `g`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclicCodeSpec {
    pub n: usize,
    /// Coefficients, lowest degree first.
    pub generator_poly: Poly<Gf4>,
}

impl CyclicCodeSpec {
    pub fn new(n: usize, coeffs: &[Gf4]) -> Self {
        CyclicCodeSpec {
            n,
            generator_poly: Poly::new(coeffs.to_vec()),
        }
    }

    /// Whether `g` divides `x^n - 1`.
    pub fn divides(&self) -> bool {
        if self.generator_poly.is_zero() || self.n == 0 {
            return false;
        }
        let xn1 = &Poly::monomial(Gf4::ONE, self.n) - &Poly::one();
        xn1.div_rem(&self.generator_poly).1.is_zero()
    }
}

/// The `[n, n - deg g]` code spanned by the shifts `x^i g(x)`.
pub fn build_cyclic(spec: &CyclicCodeSpec) -> Result<LinearCode> {
    if !spec.divides() {
        return Err(Error::NotDivisor(spec.n));
    }
    let deg = spec.generator_poly.degree().expect("nonzero");
    let coeffs = spec.generator_poly.coeffs();
    let rows = (0..spec.n - deg)
        .map(|shift| {
            let mut r = Gf4Vector::zeros(spec.n);
            for (i, &c) in coeffs.iter().enumerate() {
                r.set(shift + i, c);
            }
            r
        })
        .collect();
    Ok(LinearCode::span(rows, spec.n))
}

/// Construction X: the words of `c1` padded with zeros, together with coset
/// representatives of `c2 / c1` each extended by one generator of `aux`.
pub fn construction_x(c1: &LinearCode, c2: &LinearCode, aux: &LinearCode) -> Result<LinearCode> {
    if c1.n() != c2.n() {
        return Err(Error::LengthMismatch {
            left: c1.n(),
            right: c2.n(),
        });
    }
    if !c1.is_subcode_of(c2)? {
        return Err(Error::NotSubcode);
    }
    if aux.k() != c2.k() - c1.k() {
        return Err(Error::DimensionMismatch(format!(
            "auxiliary code has dimension {}, need {}",
            aux.k(),
            c2.k() - c1.k()
        )));
    }
    let pad = Gf4Vector::zeros(aux.n());
    let mut rows: Vec<Gf4Vector> = c1.generator().rows().iter().map(|r| r.concat(&pad)).collect();
    let mut basis = c1.clone();
    let mut reps = Vec::new();
    for r in c2.generator().rows() {
        if !basis.contains(r)? {
            reps.push(r.clone());
            let mut b = basis.generator().rows().to_vec();
            b.push(r.clone());
            basis = LinearCode::span(b, c2.n());
        }
    }
    for (c, a) in reps.iter().zip(aux.generator().rows()) {
        rows.push(c.concat(a));
    }
    Ok(LinearCode::span(rows, c1.n() + aux.n()))
}

/// A `[2n, n]` code with generator `(I_n | R)`, `R` circulant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DoubleCirculantSpec {
    pub first_row: Gf4Vector,
}

pub fn build_double_circulant(spec: &DoubleCirculantSpec) -> Result<LinearCode> {
    let n = spec.first_row.len();
    let r = CirculantSpec::new(Gf4::ONE, spec.first_row.clone())?.materialize();
    LinearCode::from_generator(&Gf4Matrix::identity(n).hstack(&r)?)
}

/// A parsed construction record.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Construction {
    ModifiedFourCirculant(ModifiedFourCirculantCode),
    Cyclic(CyclicCodeSpec),
    DoubleCirculant(DoubleCirculantSpec),
}

impl Construction {
    pub fn build(&self) -> Result<LinearCode> {
        match self {
            Construction::ModifiedFourCirculant(c) => Ok(c.code()),
            Construction::Cyclic(s) => build_cyclic(s),
            Construction::DoubleCirculant(s) => build_double_circulant(s),
        }
    }

    pub fn to_record(&self) -> String {
        match self {
            Construction::ModifiedFourCirculant(c) => c.to_record(),
            Construction::Cyclic(s) => {
                let g = Gf4Vector::from_symbols(s.generator_poly.coeffs());
                format!("type=cyclic n={} g={g}", s.n)
            }
            Construction::DoubleCirculant(s) => format!("type=dcirc row={}", s.first_row),
        }
    }
}

/// Splits `key=value` tokens, rejecting anything else.
pub(crate) fn fields(s: &str) -> Result<Vec<(&str, &str)>> {
    s.split_whitespace()
        .map(|t| {
            t.split_once('=')
                .ok_or_else(|| Error::Parse(format!("expected key=value, got {t:?}")))
        })
        .collect()
}

impl FromStr for Construction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let f = fields(s)?;
        let get = |key: &str| -> Result<&str> {
            f.iter()
                .find(|(k, _)| *k == key)
                .map(|(_, v)| *v)
                .ok_or_else(|| Error::Parse(format!("missing {key}= in {s:?}")))
        };
        match get("type")? {
            "m4c" => Ok(Construction::ModifiedFourCirculant(
                ModifiedFourCirculantCode::parse(get("mu")?, get("rA")?, get("rB")?)?,
            )),
            "cyclic" => {
                let n = get("n")?
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad length in {s:?}")))?;
                let g = crate::gf4::parse_symbols(get("g")?)?;
                Ok(Construction::Cyclic(CyclicCodeSpec::new(n, &g)))
            }
            "dcirc" => Ok(Construction::DoubleCirculant(DoubleCirculantSpec {
                first_row: Gf4Vector::parse(get("row")?)?,
            })),
            other => Err(Error::Parse(format!("unknown construction type {other:?}"))),
        }
    }
}

/// A code read from a file, with its construction when one was given.
#[derive(Clone, Debug)]
pub struct NamedCode {
    pub name: String,
    pub construction: Option<Construction>,
    pub code: LinearCode,
}

/// Reads a code file. A file holding construction records has one
/// `[name] type=...` line per code; otherwise it holds generator-matrix
/// records (`n=<n> k=<k>` followed by the rows). Unnamed codes are called
/// `code1`, `code2`, ...
pub fn load_codes(text: &str) -> Result<Vec<NamedCode>> {
    let lines: Vec<&str> = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .collect();
    if lines.iter().any(|l| l.contains("type=")) {
        lines
            .iter()
            .enumerate()
            .map(|(i, line)| {
                let (name, record) = match line.split_once(' ') {
                    Some((head, rest)) if !head.contains('=') => (head.to_string(), rest),
                    _ => (format!("code{}", i + 1), *line),
                };
                let c: Construction = record.parse()?;
                Ok(NamedCode {
                    name,
                    code: c.build()?,
                    construction: Some(c),
                })
            })
            .collect()
    } else {
        Ok(LinearCode::parse_records(text)?
            .into_iter()
            .enumerate()
            .map(|(i, code)| NamedCode {
                name: format!("code{}", i + 1),
                construction: None,
                code,
            })
            .collect())
    }
}
