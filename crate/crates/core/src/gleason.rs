//! Possible weight enumerators of Hermitian self-dual codes over GF(4).
//!
//! The weight enumerator of a Hermitian self-dual code of even length `n`
//! is a combination `sum_j a_j (1 + 3y^2)^(n/2 - 3j) (y^2 (1 - y^2)^2)^j`
//! for `0 <= j <= floor(n/6)`. Fixing `A_0 = 1` and `A_i = 0` below an
//! assumed minimum weight leaves the remaining `a_j` to be expressed through
//! free parameters, which are the counts `A_d, A_{d+2}, ...`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::scalar::{Field, FromInteger, Ring};
use crate::weight::extremal_bound;
use crate::IntPoly;

/// `constant + sum_k coefficients[k] * p_k` over named parameters `p_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParamPoly<T> {
    pub constant: T,
    pub coefficients: Vec<T>,
}

impl<T: Ring> ParamPoly<T> {
    pub fn constant(c: T, params: usize) -> Self {
        ParamPoly {
            constant: c,
            coefficients: vec![T::zero(); params],
        }
    }

    /// The polynomial equal to parameter `k`.
    pub fn parameter(k: usize, params: usize) -> Self {
        let mut p = ParamPoly::constant(T::zero(), params);
        p.coefficients[k] = T::one();
        p
    }

    pub fn is_zero(&self) -> bool {
        self.constant.is_zero() && self.coefficients.iter().all(T::is_zero)
    }

    pub fn is_constant(&self) -> bool {
        self.coefficients.iter().all(T::is_zero)
    }

    pub fn eval(&self, values: &[T]) -> Result<T> {
        if values.len() != self.coefficients.len() {
            return Err(Error::InvalidArgument(format!(
                "expected {} parameter values, got {}",
                self.coefficients.len(),
                values.len()
            )));
        }
        Ok(self
            .coefficients
            .iter()
            .zip(values)
            .fold(self.constant.clone(), |acc, (c, v)| acc + c.clone() * v.clone()))
    }

    fn add(&self, other: &Self) -> Self {
        ParamPoly {
            constant: self.constant.clone() + other.constant.clone(),
            coefficients: self
                .coefficients
                .iter()
                .zip(&other.coefficients)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        }
    }

    fn scale(&self, c: &T) -> Self {
        ParamPoly {
            constant: self.constant.clone() * c.clone(),
            coefficients: self.coefficients.iter().map(|x| x.clone() * c.clone()).collect(),
        }
    }

    /// Displays with the given parameter names, e.g. `113963850 - 78 alpha - 15 beta`.
    pub fn display<'a>(&'a self, names: &'a [String]) -> impl fmt::Display + 'a
    where
        T: fmt::Display + Signed,
    {
        DisplayParamPoly { poly: self, names }
    }
}

struct DisplayParamPoly<'a, T> {
    poly: &'a ParamPoly<T>,
    names: &'a [String],
}

impl<T: Ring + Signed + fmt::Display> fmt::Display for DisplayParamPoly<'_, T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        if !self.poly.constant.is_zero() || self.poly.is_constant() {
            write!(f, "{}", self.poly.constant)?;
            wrote = true;
        }
        for (c, name) in self.poly.coefficients.iter().zip(self.names) {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            let sign = if c.is_negative() { "-" } else { "+" };
            match (wrote, c.is_negative()) {
                (false, false) => {}
                (false, true) => write!(f, "-")?,
                (true, _) => write!(f, " {sign} ")?,
            }
            if mag.is_one() {
                write!(f, "{name}")?;
            } else {
                write!(f, "{mag} {name}")?;
            }
            wrote = true;
        }
        Ok(())
    }
}

/// Solves `matrix * x = rhs` exactly, where each right-hand side entry is a
/// vector of columns solved simultaneously. The system must determine every
/// unknown; extra equations must be consistent.
pub fn solve_linear<T: Field>(mut matrix: Vec<Vec<T>>, mut rhs: Vec<Vec<T>>) -> Result<Vec<Vec<T>>> {
    let rows = matrix.len();
    let cols = matrix.first().map_or(0, Vec::len);
    if rhs.len() != rows {
        return Err(Error::DimensionMismatch(format!(
            "{rows} equations but {} right-hand sides",
            rhs.len()
        )));
    }
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !matrix[i][c].is_zero()) else {
            return Err(Error::Inconsistent(format!("unknown {c} is not determined")));
        };
        matrix.swap(r, p);
        rhs.swap(r, p);
        let inv = matrix[r][c].inverse().expect("nonzero pivot");
        for x in matrix[r].iter_mut().chain(rhs[r].iter_mut()) {
            *x = x.clone() * inv.clone();
        }
        for i in 0..rows {
            if i != r && !matrix[i][c].is_zero() {
                let f = matrix[i][c].clone();
                for k in 0..cols {
                    let v = matrix[r][k].clone() * f.clone();
                    matrix[i][k] = matrix[i][k].clone() - v;
                }
                for k in 0..rhs[i].len() {
                    let v = rhs[r][k].clone() * f.clone();
                    rhs[i][k] = rhs[i][k].clone() - v;
                }
            }
        }
        r += 1;
    }
    if let Some(i) = (r..rows).find(|&i| rhs[i].iter().any(|x| !x.is_zero())) {
        return Err(Error::Inconsistent(format!("equation {i} contradicts the others")));
    }
    rhs.truncate(cols);
    Ok(rhs)
}

/// `(1 + 3y^2)^(n/2 - 3j) (y^2 (1 - y^2)^2)^j` as an integer polynomial in `y`.
pub fn expand_basis(n: usize, j: usize) -> Result<IntPoly> {
    if n % 2 == 1 {
        return Err(Error::InvalidArgument(format!("length must be even, got {n}")));
    }
    if j > n / 6 {
        return Err(Error::InvalidArgument(format!(
            "basis index {j} exceeds floor({n}/6) = {}",
            n / 6
        )));
    }
    let int = |v: i64| BigInt::from(v);
    let a = Poly::new(vec![int(1), int(0), int(3)]);
    let b = Poly::new(vec![int(0), int(0), int(1), int(0), int(-2), int(0), int(1)]);
    Ok(&a.pow((n / 2 - 3 * j) as u32) * &b.pow(j as u32))
}

/// Number of free parameters for length `n` and minimum weight `d`;
/// negative when the system is overdetermined.
pub fn free_parameter_count(n: usize, d: usize) -> i64 {
    (n / 6 + 1) as i64 - (d / 2) as i64
}

/// Possible weight enumerator for an assumed minimum weight.
#[derive(Clone, Debug, PartialEq)]
pub struct GleasonSolution {
    pub n: usize,
    pub d: usize,
    pub params: Vec<String>,
    /// Coefficients `a_j` of the basis expansion.
    pub a_coeffs: Vec<ParamPoly<BigRational>>,
    /// `A_i` for every even `i` in `0..=n`; odd weights are absent.
    pub weight_coeffs: BTreeMap<usize, ParamPoly<BigInt>>,
}

impl GleasonSolution {
    /// Rows with a nonzero entry, in weight order.
    pub fn nonzero_rows(&self) -> impl Iterator<Item = (usize, &ParamPoly<BigInt>)> {
        self.weight_coeffs
            .iter()
            .filter(|(_, p)| !p.is_zero())
            .map(|(&w, p)| (w, p))
    }

    /// `sum_i A_i`, which is `4^(n/2)` for every parameter choice.
    pub fn total(&self) -> ParamPoly<BigInt> {
        self.weight_coeffs
            .values()
            .fold(ParamPoly::constant(BigInt::zero(), self.params.len()), |acc, p| acc.add(p))
    }

    /// All `A_i` for given parameter values.
    pub fn substitute(&self, values: &[BigInt]) -> Result<BTreeMap<usize, BigInt>> {
        self.weight_coeffs
            .iter()
            .map(|(&w, p)| Ok((w, p.eval(values)?)))
            .collect()
    }

    /// `weight,constant,<param>...` CSV of the nonzero rows.
    pub fn to_csv(&self) -> String {
        let mut s = String::from("weight,constant");
        for p in &self.params {
            s.push(',');
            s.push_str(p);
        }
        s.push('\n');
        for (w, p) in self.nonzero_rows() {
            s.push_str(&format!("{w},{}", p.constant));
            for c in &p.coefficients {
                s.push_str(&format!(",{c}"));
            }
            s.push('\n');
        }
        s
    }
}

/// Solves for the possible weight enumerator of a Hermitian self-dual code
/// of length `n` and minimum weight `d`, with free parameters
/// `params[k] = A_{d + 2k}`.
pub fn solve_possible_enumerator(n: usize, d: usize, params: &[String]) -> Result<GleasonSolution> {
    if n == 0 || n % 2 == 1 || d == 0 || d % 2 == 1 || d > n {
        return Err(Error::InvalidArgument(format!(
            "length and minimum weight must be even with 0 < d <= n, got n={n}, d={d}"
        )));
    }
    let free = free_parameter_count(n, d);
    if free.max(0) as usize != params.len() {
        return Err(Error::InvalidArgument(format!(
            "length {n} with d={d} has {} free parameters, got {} names",
            free.max(0),
            params.len()
        )));
    }
    let m = n / 6;
    let np = params.len();
    let basis: Vec<IntPoly> = (0..=m).map(|j| expand_basis(n, j)).collect::<Result<_>>()?;
    let rat = |x: BigInt| BigRational::from_integer(x);

    // Equation rows: A_0 = 1, A_2 = ... = A_{d-2} = 0, A_{d+2k} = p_k.
    let mut matrix = Vec::new();
    let mut rhs = Vec::new();
    let fixed = d / 2;
    for i in 0..fixed + np {
        matrix.push(basis.iter().map(|b| rat(b.coeff(2 * i))).collect::<Vec<_>>());
        let target: ParamPoly<BigRational> = if i == 0 {
            ParamPoly::constant(BigRational::one(), np)
        } else if i < fixed {
            ParamPoly::constant(BigRational::zero(), np)
        } else {
            ParamPoly::parameter(i - fixed, np)
        };
        let mut cols = vec![target.constant];
        cols.extend(target.coefficients);
        rhs.push(cols);
    }
    let solved = solve_linear(matrix, rhs).map_err(|e| match e {
        Error::Inconsistent(_) => Error::Inconsistent(format!(
            "no enumerator of length {n} has minimum weight {d}"
        )),
        other => other,
    })?;
    let a_coeffs: Vec<ParamPoly<BigRational>> = solved
        .into_iter()
        .map(|cols| ParamPoly {
            constant: cols[0].clone(),
            coefficients: cols[1..].to_vec(),
        })
        .collect();

    let mut weight_coeffs = BTreeMap::new();
    for i in 0..=n {
        let mut acc = ParamPoly::constant(BigRational::zero(), np);
        for (a, b) in a_coeffs.iter().zip(&basis) {
            let c = b.coeff(i);
            if !c.is_zero() {
                acc = acc.add(&a.scale(&rat(c)));
            }
        }
        if i % 2 == 1 {
            assert!(acc.is_zero(), "odd weight {i} has a nonzero coefficient");
            continue;
        }
        let to_int = |x: &BigRational| -> Result<BigInt> {
            if x.is_integer() {
                Ok(x.to_integer())
            } else {
                Err(Error::Inconsistent(format!("A_{i} has non-integral coefficient {x}")))
            }
        };
        weight_coeffs.insert(
            i,
            ParamPoly {
                constant: to_int(&acc.constant)?,
                coefficients: acc.coefficients.iter().map(to_int).collect::<Result<_>>()?,
            },
        );
    }
    Ok(GleasonSolution {
        n,
        d,
        params: params.to_vec(),
        a_coeffs,
        weight_coeffs,
    })
}

/// Position of a minimum weight relative to the bound `2 floor(n/6) + 2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase", tag = "status")]
pub enum BoundCheck {
    WithinBound { extremal: bool },
    ViolatesBound { bound: usize },
}

pub fn check_bound(n: usize, d: usize) -> Result<BoundCheck> {
    let bound = extremal_bound(n)?;
    Ok(if d > bound {
        BoundCheck::ViolatesBound { bound }
    } else {
        BoundCheck::WithinBound { extremal: d == bound }
    })
}

impl<T: Ring + FromInteger> ParamPoly<T> {
    pub fn from_i64(c: i64, coefficients: &[i64]) -> Self {
        ParamPoly {
            constant: T::from_i64(c),
            coefficients: coefficients.iter().map(|&x| T::from_i64(x)).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names(xs: &[&str]) -> Vec<String> {
        xs.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn small_bases() {
        let b = expand_basis(2, 0).unwrap();
        assert_eq!(b.coeffs(), &[BigInt::from(1), BigInt::from(0), BigInt::from(3)]);
        let b = expand_basis(6, 1).unwrap();
        let want: Vec<BigInt> = [0, 0, 1, 0, -2, 0, 1].iter().map(|&x| BigInt::from(x)).collect();
        assert_eq!(b.coeffs(), &want[..]);
        assert!(expand_basis(6, 2).is_err());
        assert!(expand_basis(5, 0).is_err());
        assert_eq!(expand_basis(56, 0).unwrap().leading().unwrap(), &BigInt::from(3).pow(28));
    }

    #[test]
    fn trivial_length_two() {
        let s = solve_possible_enumerator(2, 2, &[]).unwrap();
        assert_eq!(s.weight_coeffs[&0], ParamPoly::from_i64(1, &[]));
        assert_eq!(s.weight_coeffs[&2], ParamPoly::from_i64(3, &[]));
    }

    #[test]
    fn hexacode_enumerator() {
        let s = solve_possible_enumerator(6, 4, &[]).unwrap();
        assert_eq!(s.weight_coeffs[&4], ParamPoly::from_i64(45, &[]));
        assert_eq!(s.weight_coeffs[&6], ParamPoly::from_i64(18, &[]));
    }

    #[test]
    fn printed_rows() {
        let s = solve_possible_enumerator(56, 16, &names(&["alpha", "beta"])).unwrap();
        assert_eq!(s.weight_coeffs[&20], ParamPoly::from_i64(113963850, &[-78, -15]));
        assert_eq!(s.weight_coeffs[&56], ParamPoly::from_i64(14512944519, &[93, 3]));
        assert_eq!(s.total(), ParamPoly::constant(BigInt::from(4).pow(28), 2));
        assert_eq!(
            s.weight_coeffs[&20].display(&s.params).to_string(),
            "113963850 - 78 alpha - 15 beta"
        );
    }

    #[test]
    fn overdetermined_is_inconsistent() {
        assert!(matches!(solve_possible_enumerator(24, 12, &[]), Err(Error::Inconsistent(_))));
        assert!(matches!(solve_possible_enumerator(28, 12, &[]), Err(Error::Inconsistent(_))));
        assert!(solve_possible_enumerator(56, 16, &names(&["a"])).is_err());
    }

    #[test]
    fn bounds() {
        assert_eq!(check_bound(28, 10).unwrap(), BoundCheck::WithinBound { extremal: true });
        assert_eq!(check_bound(56, 22).unwrap(), BoundCheck::ViolatesBound { bound: 20 });
        assert_eq!(check_bound(6, 4).unwrap(), BoundCheck::WithinBound { extremal: true });
        assert_eq!(check_bound(56, 16).unwrap(), BoundCheck::WithinBound { extremal: false });
    }
}
