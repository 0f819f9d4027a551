//! The Lie torus `sl_{ℓ+1}(K_q)` with its `(root, degree)` grading, the
//! `exp ad` automorphisms, the Weyl representatives `Ad η_α(1)`, the
//! normalized transport maps `θ_{β,α}` and the recovery of the coordinate
//! multiplication from brackets.

use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::quantum_torus::QuantumTorus;
use crate::root_system::{cartan_integer, is_a2_pair, RatMatrix, Root, RootSystemA};
use crate::scalars::{degree_window, rat, Degree, QuantumMatrix, Rational};
use crate::torus::{GradedTorus, TorusElement, TorusElementJson};

/// An `(ℓ+1) × (ℓ+1)` matrix with entries in a quantum torus.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct LieElement {
    size: usize,
    rank: usize,
    entries: Vec<TorusElement>,
}

impl LieElement {
    pub fn zero(size: usize, rank: usize) -> Self {
        LieElement { size, rank, entries: vec![TorusElement::zero(rank); size * size] }
    }

    pub fn from_entries(entries: Vec<Vec<TorusElement>>) -> Result<Self> {
        let size = entries.len();
        let rank = entries.first().and_then(|r| r.first()).map(|a| a.rank()).unwrap_or(0);
        let mut flat = Vec::with_capacity(size * size);
        for row in entries {
            if row.len() != size {
                return Err(Error::ShapeMismatch(format!("row of length {} in a {size}x{size} matrix", row.len())));
            }
            for a in row {
                a.check_rank(rank)?;
                flat.push(a);
            }
        }
        Ok(LieElement { size, rank, entries: flat })
    }

    /// `E_ij · a`.
    pub fn unit(size: usize, i: usize, j: usize, a: TorusElement) -> Self {
        let mut x = LieElement::zero(size, a.rank());
        x.entries[i * size + j] = a;
        x
    }

    /// `g ⊗ 1`: a rational matrix with scalar entries.
    pub fn embed(m: &RatMatrix, rank: usize) -> Self {
        let size = m.size();
        let entries = (0..size * size).map(|k| TorusElement::scalar(rank, m.get(k / size, k % size).clone())).collect();
        LieElement { size, rank, entries }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn entry(&self, i: usize, j: usize) -> &TorusElement {
        &self.entries[i * self.size + j]
    }

    pub fn set(&mut self, i: usize, j: usize, a: TorusElement) {
        self.entries[i * self.size + j] = a;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(TorusElement::is_zero)
    }

    pub fn trace(&self) -> TorusElement {
        (0..self.size).fold(TorusElement::zero(self.rank), |acc, i| &acc + self.entry(i, i))
    }

    pub fn transpose(&self) -> LieElement {
        let n = self.size;
        let entries = (0..n * n).map(|k| self.entry(k % n, k / n).clone()).collect();
        LieElement { size: n, rank: self.rank, entries }
    }

    pub fn map_entries<F>(&self, mut f: F) -> Result<LieElement>
    where
        F: FnMut(&TorusElement) -> Result<TorusElement>,
    {
        let entries = self.entries.iter().map(&mut f).collect::<Result<Vec<_>>>()?;
        Ok(LieElement { size: self.size, rank: self.rank, entries })
    }

    pub fn scale(&self, c: &Rational) -> LieElement {
        LieElement { size: self.size, rank: self.rank, entries: self.entries.iter().map(|a| a.scale(c)).collect() }
    }

    pub fn add(&self, other: &LieElement) -> LieElement {
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| a + b).collect();
        LieElement { size: self.size, rank: self.rank, entries }
    }

    pub fn sub(&self, other: &LieElement) -> LieElement {
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| a - b).collect();
        LieElement { size: self.size, rank: self.rank, entries }
    }

    pub fn neg(&self) -> LieElement {
        self.scale(&-Rational::one())
    }

    /// Nonzero entries as `(i, j, a)`.
    pub fn nonzero_entries(&self) -> impl Iterator<Item = (usize, usize, &TorusElement)> {
        let n = self.size;
        self.entries.iter().enumerate().filter(|(_, a)| !a.is_zero()).map(move |(k, a)| (k / n, k % n, a))
    }

    /// All `(root, degree)` keys with a nonzero component.
    pub fn support(&self) -> Vec<GradedComponentKey> {
        let mut keys: Vec<GradedComponentKey> = Vec::new();
        for (i, j, a) in self.nonzero_entries() {
            let root = if i == j { Root::Zero } else { Root::Pair(i, j) };
            for d in a.support() {
                keys.push(GradedComponentKey { root, degree: d.clone() });
            }
        }
        keys.sort();
        keys.dedup();
        keys
    }

    /// Entries of degree 0 with the torus coordinates dropped, if every
    /// entry is a scalar.
    pub fn as_scalar_matrix(&self) -> Option<RatMatrix> {
        let zero = Degree::zero(self.rank);
        let mut m = RatMatrix::zero(self.size);
        for (i, j, a) in self.nonzero_entries() {
            if a.len() != 1 || a.coefficient(&zero).is_zero() {
                return None;
            }
            m.set(i, j, a.coefficient(&zero));
        }
        Some(m)
    }

    fn check_shape(&self, other: &LieElement) -> Result<()> {
        if self.size != other.size || self.rank != other.rank {
            return Err(Error::ShapeMismatch(format!(
                "{}x{} over rank {} vs {}x{} over rank {}",
                self.size, self.size, self.rank, other.size, other.size, other.rank
            )));
        }
        Ok(())
    }
}

impl fmt::Display for LieElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, j, a) in self.nonzero_entries() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "E{}{}·({a})", i + 1, j + 1)?;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// `L_α^λ = L^λ ∩ L_α`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
pub struct GradedComponentKey {
    pub root: Root,
    pub degree: Degree,
}

impl fmt::Display for GradedComponentKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.root, self.degree)
    }
}

/// `{"ell": ℓ, "q": {...}, "entries": [[element, ...], ...]}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct LieElementJson {
    pub ell: usize,
    pub q: QuantumMatrix,
    pub entries: Vec<Vec<TorusElementJson>>,
}

/// `sl_{ℓ+1}(K_q)`.
#[derive(Clone, Debug)]
pub struct LieTorus {
    system: RootSystemA,
    torus: QuantumTorus,
}

impl LieTorus {
    pub fn new(ell: usize, q: QuantumMatrix) -> Result<Self> {
        Ok(LieTorus { system: RootSystemA::new(ell)?, torus: QuantumTorus::new(q) })
    }

    pub fn ell(&self) -> usize {
        self.system.ell()
    }

    pub fn size(&self) -> usize {
        self.system.size()
    }

    pub fn rank(&self) -> usize {
        self.torus.rank()
    }

    pub fn system(&self) -> &RootSystemA {
        &self.system
    }

    pub fn torus(&self) -> &QuantumTorus {
        &self.torus
    }

    pub fn q(&self) -> &QuantumMatrix {
        self.torus.q()
    }

    pub fn zero(&self) -> LieElement {
        LieElement::zero(self.size(), self.rank())
    }

    /// `E_ij · x^λ`.
    pub fn unit(&self, i: usize, j: usize, degree: Degree) -> LieElement {
        LieElement::unit(self.size(), i, j, TorusElement::x(degree))
    }

    /// The Chevalley generator `e_α ⊗ 1`.
    pub fn e(&self, root: &Root) -> Result<LieElement> {
        let m = self.system.chevalley_basis().e(root)?;
        Ok(LieElement::embed(&m, self.rank()))
    }

    /// `h_k ⊗ x^λ`.
    pub fn h(&self, k: usize, degree: Degree) -> LieElement {
        let mut x = self.zero();
        x.set(k, k, TorusElement::x(degree.clone()));
        x.set(k + 1, k + 1, -&TorusElement::x(degree));
        x
    }

    pub fn to_json(&self, x: &LieElement) -> LieElementJson {
        let n = x.size();
        LieElementJson {
            ell: self.ell(),
            q: self.q().clone(),
            entries: (0..n)
                .map(|i| (0..n).map(|j| TorusElementJson::from_element(x.entry(i, j), None)).collect())
                .collect(),
        }
    }

    pub fn from_json(json: &LieElementJson) -> Result<(LieTorus, LieElement)> {
        let lie = LieTorus::new(json.ell, json.q.clone())?;
        let entries = json
            .entries
            .iter()
            .map(|row| row.iter().map(|a| a.to_element()).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        let x = LieElement::from_entries(entries)?;
        lie.check(&x)?;
        Ok((lie, x))
    }

    fn check(&self, x: &LieElement) -> Result<()> {
        if x.size() != self.size() {
            return Err(Error::ShapeMismatch(format!("expected {0}x{0}, got {1}x{1}", self.size(), x.size())));
        }
        if x.rank() != self.rank() {
            return Err(Error::RankMismatch { expected: self.rank(), found: x.rank() });
        }
        Ok(())
    }

    /// Matrix product with entry products in `K_q`.
    pub fn matmul(&self, x: &LieElement, y: &LieElement) -> Result<LieElement> {
        self.check(x)?;
        x.check_shape(y)?;
        let n = x.size();
        let mut out = self.zero();
        for (i, k, a) in x.nonzero_entries() {
            for j in 0..n {
                let b = y.entry(k, j);
                if b.is_zero() {
                    continue;
                }
                let p = self.torus.mul(a, b)?;
                let slot = &mut out.entries[i * n + j];
                *slot = &*slot + &p;
            }
        }
        Ok(out)
    }

    /// `[X, Y] = XY − YX`.
    pub fn bracket(&self, x: &LieElement, y: &LieElement) -> Result<LieElement> {
        Ok(self.matmul(x, y)?.sub(&self.matmul(y, x)?))
    }

    /// Projection onto `L_α^λ`.
    pub fn component(&self, x: &LieElement, key: &GradedComponentKey) -> Result<LieElement> {
        self.check(x)?;
        self.system.check(&key.root)?;
        key.degree.check_rank(self.rank())?;
        let mut out = self.zero();
        match key.root {
            Root::Pair(i, j) => out.set(i, j, x.entry(i, j).component(&key.degree)),
            Root::Zero => {
                for i in 0..self.size() {
                    out.set(i, i, x.entry(i, i).component(&key.degree));
                }
            }
        }
        Ok(out)
    }

    /// Every nonzero component of `x`, keyed.
    pub fn components(&self, x: &LieElement) -> Result<Vec<(GradedComponentKey, LieElement)>> {
        x.support().into_iter().map(|key| Ok((key.clone(), self.component(x, &key)?))).collect()
    }

    /// `x ∈ L_α^λ`.
    pub fn is_homogeneous(&self, x: &LieElement, key: &GradedComponentKey) -> Result<bool> {
        Ok(self.component(x, key)? == *x)
    }

    /// `tr X ∈ [A, A]`, with commutator witnesses searched in the window.
    pub fn is_sl_member(&self, x: &LieElement, window: i64) -> Result<bool> {
        self.check(x)?;
        for (degree, _) in x.trace().terms() {
            if !self.torus.commutator_component_full(degree, window)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `E_ij · 1` and `E_ij · x_k^{±1}` for `i ≠ j`; these generate the
    /// Lie torus.
    pub fn default_generators(&self) -> Vec<LieElement> {
        let n = self.size();
        let rank = self.rank();
        let mut degrees = vec![Degree::zero(rank)];
        for k in 0..rank {
            degrees.push(Degree::unit(rank, k));
            degrees.push(Degree::unit(rank, k).scale(-1));
        }
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    out.extend(degrees.iter().map(|d| self.unit(i, j, d.clone())));
                }
            }
        }
        out
    }

    /// `[X, g] = 0` for every `g` in `generators` (the default generating
    /// set when `None`).
    pub fn is_central(&self, x: &LieElement, generators: Option<&[LieElement]>) -> Result<bool> {
        let defaults;
        let gens = match generators {
            Some(g) => g,
            None => {
                defaults = self.default_generators();
                &defaults
            }
        };
        for g in gens {
            if !self.bracket(x, g)?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `exp(ad e)(X) = X + [e, X] + ½[e, [e, X]]` for `e` with `e² = 0`.
    pub fn ad_exp(&self, e: &LieElement, x: &LieElement) -> Result<LieElement> {
        if !self.matmul(e, e)?.is_zero() {
            return Err(Error::NotAdNilpotent);
        }
        let first = self.bracket(e, x)?;
        let second = self.bracket(e, &first)?;
        Ok(x.add(&first).add(&second.scale(&Rational::new(1.into(), 2.into()))))
    }

    /// `Ad η_α(1) = exp ad e_α ∘ exp ad(−e_{−α}) ∘ exp ad e_α`.
    pub fn ad_eta(&self, alpha: &Root, x: &LieElement) -> Result<LieElement> {
        self.system.check(alpha)?;
        let e = self.e(alpha)?;
        let f = self.e(&alpha.neg())?.neg();
        let step = self.ad_exp(&e, x)?;
        let step = self.ad_exp(&f, &step)?;
        self.ad_exp(&e, &step)
    }

    /// `Ad η_{α_k1}(1) ∘ ⋯ ∘ Ad η_{α_km}(1)` for the word `[k1, …, km]`.
    pub fn weyl_action(&self, word: &[usize], x: &LieElement) -> Result<LieElement> {
        let mut out = x.clone();
        for &k in word.iter().rev() {
            out = self.ad_eta(&Root::Pair(k, k + 1), &out)?;
        }
        Ok(out)
    }

    /// `θ_{β,α} = ε⁻¹ Ad(η)|_{L_α}`, where `η` realizes a Weyl element
    /// with `w(α) = β` and `Ad(η) e_α = ε e_β`.
    pub fn theta(&self, beta: &Root, alpha: &Root, x: &LieElement) -> Result<LieElement> {
        let (Root::Pair(i, j), Root::Pair(k, l)) = (*alpha, *beta) else {
            return Err(Error::ZeroCoroot);
        };
        self.check(x)?;
        if x.nonzero_entries().any(|(r, c, _)| (r, c) != (i, j)) {
            return Err(Error::NotHomogeneous(*alpha));
        }
        let w = self.system.weyl_word(alpha, beta)?;
        let image_of_e = self.weyl_action(&w.word, &self.e(alpha)?)?;
        let epsilon = image_of_e.entry(k, l).coefficient(&Degree::zero(self.rank()));
        debug_assert!(!epsilon.is_zero());
        Ok(self.weyl_action(&w.word, x)?.scale(&epsilon.recip()))
    }

    /// `e_δ(a) = θ_{δ,α}(E_12 · a)`, the copy of `a` in `L_δ` relative to the
    /// base root `α = ε_1 − ε_2`.
    pub fn root_vector(&self, delta: &Root, a: &TorusElement) -> Result<LieElement> {
        a.check_rank(self.rank())?;
        let base = base_root();
        self.theta(delta, &base, &LieElement::unit(self.size(), 0, 1, a.clone()))
    }

    /// Reads the coordinate of an element of `L_δ` through
    /// `θ_{α,δ}` and the `(1,2)` entry.
    pub fn coordinate(&self, delta: &Root, x: &LieElement) -> Result<TorusElement> {
        let moved = self.theta(&base_root(), delta, x)?;
        Ok(moved.entry(0, 1).clone())
    }

    /// `m_{(β,γ)}(a, b)` defined by `[e_β(a), e_γ(b)] = [e_β, e_γ](m(a, b))`.
    pub fn extract_coordinate_mul(
        &self,
        beta: &Root,
        gamma: &Root,
        a: &TorusElement,
        b: &TorusElement,
    ) -> Result<TorusElement> {
        self.system.check(beta)?;
        self.system.check(gamma)?;
        if !is_a2_pair(beta, gamma) {
            return Err(Error::NotA2Pair(*beta, *gamma));
        }
        let delta = beta.checked_add(gamma).expect("A2-pair sums to a root");
        let one = TorusElement::one(self.rank());
        let unit_bracket = self.bracket(&self.root_vector(beta, &one)?, &self.root_vector(gamma, &one)?)?;
        let structure = self.coordinate(&delta, &unit_bracket)?.coefficient(&Degree::zero(self.rank()));
        let bracket = self.bracket(&self.root_vector(beta, a)?, &self.root_vector(gamma, b)?)?;
        Ok(self.coordinate(&delta, &bracket)?.scale(&structure.recip()))
    }

    /// Homogeneous test elements: `E_ij x^μ` for every nonzero root and
    /// `h_k x^μ` for every simple root, `μ` in the window.
    pub fn homogeneous_window(&self, window: i64) -> Vec<LieElement> {
        let degrees = degree_window(self.rank(), window);
        let mut out = Vec::new();
        for root in self.system.roots() {
            let Root::Pair(i, j) = root else { unreachable!() };
            out.extend(degrees.iter().map(|d| self.unit(i, j, d.clone())));
        }
        for k in 0..self.ell() {
            out.extend(degrees.iter().map(|d| self.h(k, d.clone())));
        }
        out
    }

    /// For `e = E_ij x^λ ∈ L_α^λ`, the `f ∈ L_{−α}^{−λ}` with
    /// `[[e, f], x_β] = ⟨β, α^∨⟩ x_β` for every homogeneous `x_β` in the
    /// window. `f` is found as `c · E_ji x^{−λ}` by solving for `c`.
    pub fn division_witness(&self, key: &GradedComponentKey, window: i64) -> Result<(LieElement, LieElement)> {
        self.system.check(&key.root)?;
        key.degree.check_rank(self.rank())?;
        let Root::Pair(i, j) = key.root else {
            return Err(Error::ZeroCoroot);
        };
        let no_witness = || Error::NoWitness { root: key.root, degree: key.degree.clone() };
        let e = self.unit(i, j, key.degree.clone());
        let f0 = self.unit(j, i, -&key.degree);
        let h = self.bracket(&e, &f0)?;
        let tests = self.homogeneous_window(window);

        let mut scalar: Option<Rational> = None;
        for x in &tests {
            let beta = x.support()[0].root;
            let target = x.scale(&rat(cartan_integer(&beta, &key.root)?));
            let image = self.bracket(&h, x)?;
            match &scalar {
                None => {
                    if target.is_zero() {
                        if !image.is_zero() {
                            return Err(no_witness());
                        }
                        continue;
                    }
                    // Solve c · image = target on one coordinate.
                    let (r, s, t) = target.nonzero_entries().next().expect("nonzero target");
                    let (deg, coef) = t.terms().next().expect("nonzero entry");
                    let lhs = image.entry(r, s).coefficient(deg);
                    if lhs.is_zero() {
                        return Err(no_witness());
                    }
                    let c = coef / lhs;
                    if image.scale(&c) != target {
                        return Err(no_witness());
                    }
                    scalar = Some(c);
                }
                Some(c) => {
                    if image.scale(c) != target {
                        return Err(no_witness());
                    }
                }
            }
        }
        let c = scalar.ok_or_else(no_witness)?;
        Ok((e, f0.scale(&c)))
    }
}

/// `ε_1 − ε_2`, the root whose space is identified with the coordinate
/// algebra.
pub fn base_root() -> Root {
    Root::Pair(0, 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::ratio;

    fn lie(ell: usize, q12: i64) -> LieTorus {
        LieTorus::new(ell, QuantumMatrix::with_pair(2, 0, 1, rat(q12)).unwrap()).unwrap()
    }

    fn d(c: &[i64]) -> Degree {
        Degree::new(c.to_vec())
    }

    #[test]
    fn bracket_examples() {
        let l = LieTorus::new(2, QuantumMatrix::with_pair(2, 0, 1, ratio(3, 2)).unwrap()).unwrap();
        let e12 = l.unit(0, 1, d(&[0, 0]));
        let e21 = l.unit(1, 0, d(&[0, 0]));
        assert_eq!(l.bracket(&e12, &e21).unwrap(), l.h(0, d(&[0, 0])));
        let a = l.unit(0, 1, d(&[1, 0]));
        let b = l.unit(1, 0, d(&[0, 1]));
        let mut expected = l.zero();
        expected.set(0, 0, TorusElement::x(d(&[1, 1])));
        expected.set(1, 1, TorusElement::monomial(d(&[1, 1]), -l.q().entry(1, 0).clone()));
        assert_eq!(l.bracket(&a, &b).unwrap(), expected);
        assert!(l.bracket(&a, &a).unwrap().is_zero());
    }

    #[test]
    fn components() {
        let l = lie(2, -1);
        let x12 = LieElement::unit(3, 0, 1, &TorusElement::x(d(&[1, 0])) + &TorusElement::x(d(&[0, 1])));
        let key = GradedComponentKey { root: Root::Pair(0, 1), degree: d(&[1, 0]) };
        assert_eq!(l.component(&x12, &key).unwrap(), l.unit(0, 1, d(&[1, 0])));
        let h = l.h(0, d(&[0, 0]));
        let zero_key = GradedComponentKey { root: Root::Zero, degree: d(&[0, 0]) };
        assert_eq!(l.component(&h, &zero_key).unwrap(), h);
        let x13 = l.unit(0, 2, d(&[1, 1]));
        let wrong = GradedComponentKey { root: Root::Pair(0, 1), degree: d(&[1, 1]) };
        assert!(l.component(&x13, &wrong).unwrap().is_zero());
        let sum = l.components(&x12.add(&h)).unwrap().into_iter().fold(l.zero(), |acc, (_, c)| acc.add(&c));
        assert_eq!(sum, x12.add(&h));
    }

    #[test]
    fn sl_membership() {
        let l = lie(2, -1);
        assert!(l.is_sl_member(&l.unit(0, 2, d(&[2, 1])), 1).unwrap());
        assert!(l.is_sl_member(&l.h(1, d(&[1, 1])), 1).unwrap());
        let mut scalar = l.zero();
        for i in 0..3 {
            scalar.set(i, i, TorusElement::x(d(&[1, 1])));
        }
        assert_eq!(scalar.trace(), TorusElement::monomial(d(&[1, 1]), rat(3)));
        assert!(l.is_sl_member(&scalar, 1).unwrap());
        let laurent = lie(2, 1);
        let mut id_x1 = laurent.zero();
        for i in 0..3 {
            id_x1.set(i, i, TorusElement::x(d(&[1, 0])));
        }
        assert!(!laurent.is_sl_member(&id_x1, 2).unwrap());
        assert!(laurent.is_central(&id_x1, None).unwrap());
    }

    #[test]
    fn centrality() {
        let l = lie(2, -1);
        assert!(l.is_central(&l.zero(), None).unwrap());
        assert!(!l.is_central(&l.h(0, d(&[0, 0])), None).unwrap());
    }

    #[test]
    fn ad_exp_examples() {
        let l = lie(2, -1);
        let e = l.unit(0, 1, d(&[0, 0]));
        let h = l.h(0, d(&[0, 0]));
        assert_eq!(l.ad_exp(&e, &h).unwrap(), h.sub(&e.scale(&rat(2))));
        assert_eq!(l.ad_exp(&e, &e).unwrap(), e);
        let f = l.unit(1, 0, d(&[0, 0]));
        assert_eq!(l.ad_exp(&e, &f).unwrap(), f.add(&h).sub(&e));
        let not_nilpotent = e.add(&f);
        assert!(matches!(l.ad_exp(&not_nilpotent, &h), Err(Error::NotAdNilpotent)));
    }

    #[test]
    fn ad_eta_examples() {
        let l = lie(3, -1);
        for alpha in l.system().roots() {
            let e = l.e(&alpha).unwrap();
            let f = l.e(&alpha.neg()).unwrap();
            assert_eq!(l.ad_eta(&alpha, &e.neg()).unwrap(), f);
            let h = LieElement::embed(&l.system().chevalley_basis().coroot(&alpha).unwrap(), 2);
            assert_eq!(l.ad_eta(&alpha, &h).unwrap(), h.neg());
        }
    }

    #[test]
    fn theta_examples() {
        let l = lie(3, -1);
        let a12 = Root::Pair(0, 1);
        let x = l.unit(0, 1, d(&[1, -1]));
        assert_eq!(l.theta(&a12, &a12, &x).unwrap(), x);
        let moved = l.theta(&Root::Pair(2, 3), &a12, &x).unwrap();
        assert_eq!(moved, l.unit(2, 3, d(&[1, -1])));
        assert!(matches!(l.theta(&a12, &Root::Pair(0, 2), &x), Err(Error::NotHomogeneous(_))));
    }

    #[test]
    fn coordinate_recovery_examples() {
        let l = lie(2, -1);
        let x1 = TorusElement::generator(2, 0);
        let x2 = TorusElement::generator(2, 1);
        let b = Root::Pair(0, 1);
        let g = Root::Pair(1, 2);
        assert_eq!(l.extract_coordinate_mul(&b, &g, &x1, &x2).unwrap(), l.torus().mul(&x1, &x2).unwrap());
        assert_eq!(l.extract_coordinate_mul(&g, &b, &x1, &x2).unwrap(), l.torus().mul(&x2, &x1).unwrap());
        let one = TorusElement::one(2);
        assert_eq!(l.extract_coordinate_mul(&b, &g, &one, &one).unwrap(), one);
        assert!(matches!(l.extract_coordinate_mul(&b, &Root::Pair(0, 2), &one, &one), Err(Error::NotA2Pair(_, _))));
    }

    #[test]
    fn division_witness_examples() {
        let l = lie(2, -1);
        let key = |deg: &[i64]| GradedComponentKey { root: Root::Pair(0, 1), degree: d(deg) };
        let (_, f) = l.division_witness(&key(&[0, 0]), 1).unwrap();
        assert_eq!(f, l.unit(1, 0, d(&[0, 0])));
        let (_, f) = l.division_witness(&key(&[1, 0]), 1).unwrap();
        assert_eq!(f, l.unit(1, 0, d(&[-1, 0])));
        // x^{(1,1)} has inverse t((1,1),(-1,-1))⁻¹ x^{(-1,-1)} = −x^{(-1,-1)}.
        let (_, f) = l.division_witness(&key(&[1, 1]), 1).unwrap();
        assert_eq!(f, LieElement::unit(3, 1, 0, TorusElement::monomial(d(&[-1, -1]), rat(-1))));
        let inverse = l.torus().invert_monomial(&d(&[1, 1])).unwrap();
        assert_eq!(f, LieElement::unit(3, 1, 0, inverse));
    }
}
