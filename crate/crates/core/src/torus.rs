//! Sparse `ℤⁿ`-graded elements and the [`GradedTorus`] abstraction shared by
//! the quantum tori and the octonion torus.
//!
//! Every torus handled here has one-dimensional graded components spanned by
//! a fixed monomial `x^λ`, so its multiplication is determined by a scalar
//! structure constant `c(λ, μ)` with `x^λ · x^μ = c(λ, μ) x^{λ+μ}`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalars::{format_rational, parse_rational, Degree, Rational};

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TorusKind {
    Quantum,
    Octonion,
}

/// Finite linear combination of monomials `x^λ`. Zero coefficients are
/// never stored.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct TorusElement {
    rank: usize,
    terms: BTreeMap<Degree, Rational>,
}

impl TorusElement {
    pub fn zero(rank: usize) -> Self {
        TorusElement { rank, terms: BTreeMap::new() }
    }

    pub fn one(rank: usize) -> Self {
        Self::monomial(Degree::zero(rank), Rational::one())
    }

    pub fn scalar(rank: usize, c: Rational) -> Self {
        Self::monomial(Degree::zero(rank), c)
    }

    pub fn monomial(degree: Degree, coef: Rational) -> Self {
        let rank = degree.rank();
        let mut terms = BTreeMap::new();
        if !coef.is_zero() {
            terms.insert(degree, coef);
        }
        TorusElement { rank, terms }
    }

    /// The monomial `x^λ` with coefficient 1.
    pub fn x(degree: Degree) -> Self {
        Self::monomial(degree, Rational::one())
    }

    /// The generator `x_i` (0-based `i`).
    pub fn generator(rank: usize, i: usize) -> Self {
        Self::x(Degree::unit(rank, i))
    }

    pub fn from_terms<I>(rank: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Degree, Rational)>,
    {
        let mut out = TorusElement::zero(rank);
        for (degree, coef) in terms {
            degree.check_rank(rank)?;
            out.add_term(degree, coef);
        }
        Ok(out)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Degree, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, degree: &Degree) -> Rational {
        self.terms.get(degree).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn support(&self) -> impl Iterator<Item = &Degree> {
        self.terms.keys()
    }

    /// The single term of a monomial, if this is one.
    pub fn as_monomial(&self) -> Option<(&Degree, &Rational)> {
        if self.terms.len() == 1 {
            self.terms.iter().next()
        } else {
            None
        }
    }

    /// Projection onto `A^λ`.
    pub fn component(&self, degree: &Degree) -> TorusElement {
        match self.terms.get(degree) {
            Some(c) => TorusElement::monomial(degree.clone(), c.clone()),
            None => TorusElement::zero(self.rank),
        }
    }

    pub fn add_term(&mut self, degree: Degree, coef: Rational) {
        if coef.is_zero() {
            return;
        }
        debug_assert_eq!(degree.rank(), self.rank);
        use std::collections::btree_map::Entry;
        match self.terms.entry(degree) {
            Entry::Vacant(v) => {
                v.insert(coef);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += coef;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &Rational) -> TorusElement {
        if c.is_zero() {
            return TorusElement::zero(self.rank);
        }
        TorusElement { rank: self.rank, terms: self.terms.iter().map(|(d, a)| (d.clone(), a * c)).collect() }
    }

    /// Replace every `x^λ` by `f(λ)`, summing the results.
    pub fn map_terms<F>(&self, mut f: F) -> TorusElement
    where
        F: FnMut(&Degree, &Rational) -> (Degree, Rational),
    {
        let mut out = TorusElement::zero(self.rank);
        for (d, c) in &self.terms {
            let (d2, c2) = f(d, c);
            out.add_term(d2, c2);
        }
        out
    }

    pub(crate) fn check_rank(&self, rank: usize) -> Result<()> {
        if self.rank == rank {
            Ok(())
        } else {
            Err(Error::RankMismatch { expected: rank, found: self.rank })
        }
    }
}

impl fmt::Display for TorusElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (d, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            if d.is_zero() {
                write!(f, "{c}")?;
            } else {
                write!(f, "{c}·x^{d}")?;
            }
        }
        Ok(())
    }
}

impl Add for &TorusElement {
    type Output = TorusElement;
    fn add(self, rhs: &TorusElement) -> TorusElement {
        let mut out = self.clone();
        for (d, c) in &rhs.terms {
            out.add_term(d.clone(), c.clone());
        }
        out
    }
}

impl Sub for &TorusElement {
    type Output = TorusElement;
    fn sub(self, rhs: &TorusElement) -> TorusElement {
        let mut out = self.clone();
        for (d, c) in &rhs.terms {
            out.add_term(d.clone(), -c.clone());
        }
        out
    }
}

impl Neg for &TorusElement {
    type Output = TorusElement;
    fn neg(self) -> TorusElement {
        TorusElement { rank: self.rank, terms: self.terms.iter().map(|(d, c)| (d.clone(), -c.clone())).collect() }
    }
}

/// A `ℤⁿ`-graded algebra with one-dimensional components `K x^λ`.
pub trait GradedTorus: Send + Sync {
    fn kind(&self) -> TorusKind;

    fn rank(&self) -> usize;

    /// `c(λ, μ)` with `x^λ · x^μ = c(λ, μ) x^{λ+μ}`. Ranks are assumed to
    /// match.
    fn structure_constant(&self, lhs: &Degree, rhs: &Degree) -> Rational;

    /// Whether `A^λ ≠ 0`. The tori built here are supported everywhere.
    fn is_supported(&self, _degree: &Degree) -> bool {
        true
    }

    fn mul(&self, a: &TorusElement, b: &TorusElement) -> Result<TorusElement> {
        a.check_rank(self.rank())?;
        b.check_rank(self.rank())?;
        let mut out = TorusElement::zero(self.rank());
        for (da, ca) in a.terms() {
            for (db, cb) in b.terms() {
                let c = self.structure_constant(da, db);
                if c.is_zero() {
                    continue;
                }
                out.add_term(da + db, c * ca * cb);
            }
        }
        Ok(out)
    }

    /// The two-sided inverse `c(λ, −λ)⁻¹ x^{−λ}` of `x^λ`.
    fn invert_monomial(&self, degree: &Degree) -> Result<TorusElement> {
        degree.check_rank(self.rank())?;
        let neg = -degree;
        let c = self.structure_constant(degree, &neg);
        if c.is_zero() {
            return Err(Error::ConstraintViolation(format!("x^{degree} is not invertible")));
        }
        Ok(TorusElement::monomial(neg, c.recip()))
    }

    /// Inverse of a nonzero homogeneous element.
    fn invert(&self, a: &TorusElement) -> Result<TorusElement> {
        let (degree, coef) = a.as_monomial().ok_or(Error::NotMonomial)?;
        Ok(self.invert_monomial(degree)?.scale(&coef.recip()))
    }

    fn commutator(&self, a: &TorusElement, b: &TorusElement) -> Result<TorusElement> {
        Ok(&self.mul(a, b)? - &self.mul(b, a)?)
    }

    /// `(a, b, c) = (ab)c − a(bc)`.
    fn associator(&self, a: &TorusElement, b: &TorusElement, c: &TorusElement) -> Result<TorusElement> {
        let left = self.mul(&self.mul(a, b)?, c)?;
        let right = self.mul(a, &self.mul(b, c)?)?;
        Ok(&left - &right)
    }
}

/// One term of the element JSON schema.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TermJson {
    pub deg: Vec<i64>,
    pub coef: String,
}

/// `{"rank": n, "terms": [{"deg": [...], "coef": "p/q"}, ...]}`, with an
/// optional `"kind": "octonion"` for octonion-torus elements.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TorusElementJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub kind: Option<TorusKind>,
    pub rank: usize,
    pub terms: Vec<TermJson>,
}

impl TorusElementJson {
    pub fn from_element(a: &TorusElement, kind: Option<TorusKind>) -> Self {
        TorusElementJson {
            kind,
            rank: a.rank,
            terms: a
                .terms
                .iter()
                .map(|(d, c)| TermJson { deg: d.coords().to_vec(), coef: format_rational(c) })
                .collect(),
        }
    }

    pub fn to_element(&self) -> Result<TorusElement> {
        let terms = self
            .terms
            .iter()
            .map(|t| Ok((Degree::new(t.deg.clone()), parse_rational(&t.coef)?)))
            .collect::<Result<Vec<_>>>()?;
        TorusElement::from_terms(self.rank, terms)
    }
}

impl Serialize for TorusElement {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        TorusElementJson::from_element(self, None).serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for TorusElement {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        TorusElementJson::deserialize(deserializer)?.to_element().map_err(serde::de::Error::custom)
    }
}
