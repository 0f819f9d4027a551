//! Exact scalars, the degree lattice `ℤⁿ`, quantum matrices and the twist
//! cocycle of a quantum torus.

use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Exact rational scalar. Always stored in lowest terms with a positive
/// denominator.
pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Parses `"p/q"` or `"p"`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let trimmed = s.trim();
    let value =
        Rational::from_str(trimmed).map_err(|_| Error::InvalidInput(format!("not a rational number: {s:?}")))?;
    Ok(value)
}

pub fn format_rational(r: &Rational) -> String {
    r.to_string()
}

/// `base^exp` for a signed exponent. `base` must be nonzero when `exp < 0`.
pub fn rational_pow(base: &Rational, exp: i64) -> Rational {
    if exp == 0 || base.is_one() {
        return Rational::one();
    }
    if *base == -Rational::one() {
        return if exp % 2 == 0 { Rational::one() } else { -Rational::one() };
    }
    let magnitude = u32::try_from(exp.unsigned_abs()).expect("exponent exceeds u32 range");
    let numer = base.numer().pow(magnitude);
    let denom = base.denom().pow(magnitude);
    if exp > 0 {
        Rational::new(numer, denom)
    } else {
        Rational::new(denom, numer)
    }
}

pub fn is_plus_minus_one(r: &Rational) -> bool {
    r.is_integer() && r.numer().abs().is_one()
}

/// A point of the lattice `ℤⁿ`; the grading label of tori and Lie tori.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Degree(Vec<i64>);

impl Degree {
    pub fn new(coords: Vec<i64>) -> Self {
        Degree(coords)
    }

    pub fn zero(rank: usize) -> Self {
        Degree(vec![0; rank])
    }

    /// The basis vector `ε_i` (0-based `i`).
    pub fn unit(rank: usize, i: usize) -> Self {
        let mut coords = vec![0; rank];
        coords[i] = 1;
        Degree(coords)
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn scale(&self, k: i64) -> Self {
        Degree(self.0.iter().map(|c| c * k).collect())
    }

    pub fn max_abs(&self) -> i64 {
        self.0.iter().map(|c| c.abs()).max().unwrap_or(0)
    }

    pub(crate) fn check_rank(&self, rank: usize) -> Result<()> {
        if self.rank() == rank {
            Ok(())
        } else {
            Err(Error::RankMismatch { expected: rank, found: self.rank() })
        }
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, c) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl<'a> Add<&'a Degree> for &'a Degree {
    type Output = Degree;
    fn add(self, rhs: &Degree) -> Degree {
        debug_assert_eq!(self.rank(), rhs.rank());
        Degree(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl<'a> Sub<&'a Degree> for &'a Degree {
    type Output = Degree;
    fn sub(self, rhs: &Degree) -> Degree {
        debug_assert_eq!(self.rank(), rhs.rank());
        Degree(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &Degree {
    type Output = Degree;
    fn neg(self) -> Degree {
        Degree(self.0.iter().map(|c| -c).collect())
    }
}

/// All degrees with every coordinate in `[-window, window]`, in
/// lexicographic order.
pub fn degree_window(rank: usize, window: i64) -> Vec<Degree> {
    let side = (2 * window + 1) as usize;
    let total = side.pow(rank as u32);
    let mut out = Vec::with_capacity(total);
    for mut code in 0..total {
        let mut coords = vec![0; rank];
        for slot in coords.iter_mut().rev() {
            *slot = (code % side) as i64 - window;
            code /= side;
        }
        out.push(Degree(coords));
    }
    out
}

/// An `n × n` matrix `q` with `q_ii = 1` and `q_ij q_ji = 1`; the
/// commutation data of the quantum torus `K_q`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QuantumMatrix {
    n: usize,
    entries: Vec<Vec<Rational>>,
}

impl QuantumMatrix {
    pub fn new(entries: Vec<Vec<Rational>>) -> Result<Self> {
        let n = entries.len();
        if n == 0 {
            return Err(Error::ConstraintViolation("quantum matrix must be at least 1x1".into()));
        }
        for (i, row) in entries.iter().enumerate() {
            if row.len() != n {
                return Err(Error::ConstraintViolation(format!(
                    "row {} has length {}, expected {n}",
                    i + 1,
                    row.len()
                )));
            }
        }
        for i in 0..n {
            for j in 0..n {
                let value = &entries[i][j];
                if value.is_zero() {
                    return Err(Error::ConstraintViolation(format!("q_{}{} is zero", i + 1, j + 1)));
                }
                if i == j && !value.is_one() {
                    return Err(Error::ConstraintViolation(format!(
                        "q_{}{} = {value}, diagonal entries must be 1",
                        i + 1,
                        i + 1
                    )));
                }
                if i < j && !(value * &entries[j][i]).is_one() {
                    return Err(Error::ConstraintViolation(format!(
                        "q_{a}{b} * q_{b}{a} = {} * {} != 1",
                        value,
                        entries[j][i],
                        a = i + 1,
                        b = j + 1
                    )));
                }
            }
        }
        Ok(QuantumMatrix { n, entries })
    }

    pub fn identity(n: usize) -> Self {
        let entries = (0..n).map(|_| vec![Rational::one(); n]).collect();
        QuantumMatrix { n, entries }
    }

    /// The matrix that is the identity except for `q_ij = value` and
    /// `q_ji = value⁻¹` (0-based indices).
    pub fn with_pair(n: usize, i: usize, j: usize, value: Rational) -> Result<Self> {
        if value.is_zero() {
            return Err(Error::ConstraintViolation("entries must be nonzero".into()));
        }
        let mut entries: Vec<Vec<Rational>> = (0..n).map(|_| vec![Rational::one(); n]).collect();
        entries[i][j] = value.clone();
        entries[j][i] = value.recip();
        QuantumMatrix::new(entries)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn entry(&self, i: usize, j: usize) -> &Rational {
        &self.entries[i][j]
    }

    pub fn entries(&self) -> &[Vec<Rational>] {
        &self.entries
    }

    pub fn is_elementary(&self) -> bool {
        self.first_non_elementary().is_none()
    }

    /// First off-diagonal entry (0-based, row-major) that is not `±1`.
    pub fn first_non_elementary(&self) -> Option<(usize, usize)> {
        (0..self.n)
            .flat_map(|i| (0..self.n).map(move |j| (i, j)))
            .find(|&(i, j)| !is_plus_minus_one(&self.entries[i][j]))
    }

    /// The scalar `t(λ, μ)` with `x^λ x^μ = t(λ, μ) x^{λ+μ}`, where
    /// `x^λ = x_1^{λ_1} ⋯ x_n^{λ_n}`. Equal to `∏_{i>j} q_ij^{λ_i μ_j}`.
    pub fn twist(&self, lhs: &Degree, rhs: &Degree) -> Result<Rational> {
        lhs.check_rank(self.n)?;
        rhs.check_rank(self.n)?;
        Ok(self.twist_unchecked(lhs.coords(), rhs.coords()))
    }

    pub(crate) fn twist_unchecked(&self, lhs: &[i64], rhs: &[i64]) -> Rational {
        let mut negate = false;
        let mut acc = Rational::one();
        for i in 0..self.n {
            if lhs[i] == 0 {
                continue;
            }
            for j in 0..i {
                let exp = lhs[i] * rhs[j];
                if exp == 0 {
                    continue;
                }
                let q = &self.entries[i][j];
                if q.is_one() {
                    continue;
                }
                if is_plus_minus_one(q) {
                    negate ^= exp % 2 != 0;
                } else {
                    acc *= rational_pow(q, exp);
                }
            }
        }
        if negate {
            -acc
        } else {
            acc
        }
    }

    /// `t(λ, μ) / t(μ, λ)`, the commutation factor `x^λ x^μ = c · x^μ x^λ`.
    pub fn commutation_factor(&self, lhs: &Degree, rhs: &Degree) -> Result<Rational> {
        Ok(self.twist(lhs, rhs)? / self.twist(rhs, lhs)?)
    }

    /// The transpose `q'_ij = q_ji`, presenting the opposite algebra.
    pub fn opposite(&self) -> QuantumMatrix {
        let entries = (0..self.n).map(|i| (0..self.n).map(|j| self.entries[j][i].clone()).collect()).collect();
        QuantumMatrix { n: self.n, entries }
    }
}

/// JSON form `{"n": 2, "q": [["1","-1"],["-1","1"]]}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct QuantumMatrixJson {
    pub n: usize,
    pub q: Vec<Vec<String>>,
}

impl From<&QuantumMatrix> for QuantumMatrixJson {
    fn from(q: &QuantumMatrix) -> Self {
        QuantumMatrixJson { n: q.n, q: q.entries.iter().map(|row| row.iter().map(format_rational).collect()).collect() }
    }
}

impl QuantumMatrixJson {
    pub fn parse_entries(&self) -> Result<Vec<Vec<Rational>>> {
        if self.q.len() != self.n {
            return Err(Error::InvalidInput(format!("\"n\" is {} but \"q\" has {} rows", self.n, self.q.len())));
        }
        self.q.iter().map(|row| row.iter().map(|s| parse_rational(s)).collect()).collect()
    }

    pub fn to_matrix(&self) -> Result<QuantumMatrix> {
        QuantumMatrix::new(self.parse_entries()?)
    }
}

impl Serialize for QuantumMatrix {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        QuantumMatrixJson::from(self).serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for QuantumMatrix {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = QuantumMatrixJson::deserialize(deserializer)?;
        raw.to_matrix().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q12(value: Rational) -> QuantumMatrix {
        QuantumMatrix::with_pair(2, 0, 1, value).unwrap()
    }

    #[test]
    fn identity_and_elementary_are_valid() {
        let id = QuantumMatrix::new(vec![vec![rat(1), rat(1)], vec![rat(1), rat(1)]]).unwrap();
        assert!(id.is_elementary());
        let elem = QuantumMatrix::new(vec![vec![rat(1), rat(-1)], vec![rat(-1), rat(1)]]).unwrap();
        assert!(elem.is_elementary());
    }

    #[test]
    fn reciprocity_is_enforced() {
        let err = QuantumMatrix::new(vec![vec![rat(1), rat(2)], vec![rat(3), rat(1)]]).unwrap_err();
        assert!(matches!(err, Error::ConstraintViolation(_)));
        let err = QuantumMatrix::new(vec![vec![rat(2), rat(1)], vec![rat(1), rat(1)]]).unwrap_err();
        assert!(matches!(err, Error::ConstraintViolation(_)));
        let err = QuantumMatrix::new(vec![vec![rat(1), rat(0)], vec![rat(0), rat(1)]]).unwrap_err();
        assert!(matches!(err, Error::ConstraintViolation(_)));
    }

    #[test]
    fn elementarity() {
        assert!(!q12(rat(2)).is_elementary());
        assert_eq!(q12(rat(2)).first_non_elementary(), Some((0, 1)));
        assert!(q12(rat(-1)).is_elementary());
    }

    #[test]
    fn twist_examples() {
        let q = q12(rat(2));
        let e1 = Degree::unit(2, 0);
        let e2 = Degree::unit(2, 1);
        assert_eq!(q.twist(&e1, &e2).unwrap(), rat(1));
        assert_eq!(q.twist(&e2, &e1).unwrap(), ratio(1, 2));
        let lambda = Degree::new(vec![3, -2]);
        assert_eq!(q.twist(&Degree::zero(2), &lambda).unwrap(), rat(1));
        assert_eq!(q.twist(&lambda, &Degree::zero(2)).unwrap(), rat(1));
        assert!(matches!(q.twist(&Degree::zero(3), &lambda), Err(Error::RankMismatch { expected: 2, found: 3 })));
    }

    #[test]
    fn negative_powers() {
        assert_eq!(rational_pow(&ratio(2, 3), -2), ratio(9, 4));
        assert_eq!(rational_pow(&rat(-1), -3), rat(-1));
        assert_eq!(rational_pow(&rat(5), 0), rat(1));
    }

    #[test]
    fn opposite_is_transpose() {
        let q = q12(rat(2));
        assert_eq!(q.opposite().entry(0, 1), &ratio(1, 2));
        let e = q12(rat(-1));
        assert_eq!(e.opposite(), e);
    }

    #[test]
    fn json_round_trip() {
        let q = q12(ratio(-1, 3));
        let text = serde_json::to_string(&q).unwrap();
        assert_eq!(text, r#"{"n":2,"q":[["1","-1/3"],["-3","1"]]}"#);
        let back: QuantumMatrix = serde_json::from_str(&text).unwrap();
        assert_eq!(back, q);
        assert!(serde_json::from_str::<QuantumMatrix>(r#"{"n":2,"q":[["1","2"],["3","1"]]}"#).is_err());
    }

    #[test]
    fn window_enumeration() {
        let w = degree_window(2, 1);
        assert_eq!(w.len(), 9);
        assert_eq!(w[0], Degree::new(vec![-1, -1]));
        assert_eq!(w[8], Degree::new(vec![1, 1]));
    }
}
