//! The root system of type `A_ℓ`, its Weyl group `Sym(ℓ+1)` and the
//! Chevalley basis of `sl_{ℓ+1}(ℚ)`.
//!
//! Roots are modelled in the ε-basis: `Root::Pair(i, j)` is `ε_i − ε_j`.
//! All indices are 0-based; `Display` prints them 1-based.

use std::collections::{HashSet, VecDeque};
use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalars::{rat, Rational};

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
pub enum Root {
    Zero,
    /// `ε_i − ε_j`, `i ≠ j`.
    Pair(usize, usize),
}

impl Root {
    pub fn pair(i: usize, j: usize) -> Self {
        assert_ne!(i, j, "ε_i − ε_i is not a root");
        Root::Pair(i, j)
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Root::Zero)
    }

    pub fn neg(&self) -> Root {
        match *self {
            Root::Zero => Root::Zero,
            Root::Pair(i, j) => Root::Pair(j, i),
        }
    }

    /// Coordinates in `ℤ^{ℓ+1}`.
    pub fn epsilon_vector(&self, size: usize) -> Vec<i64> {
        let mut v = vec![0; size];
        if let Root::Pair(i, j) = *self {
            v[i] += 1;
            v[j] -= 1;
        }
        v
    }

    /// `self + other` when the sum is a root (including zero).
    pub fn checked_add(&self, other: &Root) -> Option<Root> {
        match (*self, *other) {
            (Root::Zero, r) | (r, Root::Zero) => Some(r),
            (Root::Pair(i, j), Root::Pair(k, l)) => {
                if i == l && j == k {
                    Some(Root::Zero)
                } else if j == k {
                    Some(Root::Pair(i, l))
                } else if i == l {
                    Some(Root::Pair(k, j))
                } else {
                    None
                }
            }
        }
    }

    fn max_index(&self) -> Option<usize> {
        match *self {
            Root::Zero => None,
            Root::Pair(i, j) => Some(i.max(j)),
        }
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Root::Zero => write!(f, "0"),
            Root::Pair(i, j) => write!(f, "ε{}−ε{}", i + 1, j + 1),
        }
    }
}

fn inner_product(a: &Root, b: &Root) -> i64 {
    match (*a, *b) {
        (Root::Zero, _) | (_, Root::Zero) => 0,
        (Root::Pair(i, j), Root::Pair(k, l)) => {
            let delta = |x: usize, y: usize| i64::from(x == y);
            delta(i, k) - delta(i, l) - delta(j, k) + delta(j, l)
        }
    }
}

/// `⟨β, α^∨⟩ = 2(β, α)/(α, α)`. Every nonzero root has squared length 2.
pub fn cartan_integer(beta: &Root, alpha: &Root) -> Result<i64> {
    if alpha.is_zero() {
        return Err(Error::ZeroCoroot);
    }
    Ok(inner_product(beta, alpha))
}

/// `(β, γ)` is an A₂-pair with `⟨β, γ^∨⟩ = −1`, i.e. `β + γ` is a root.
///
/// In type A two independent roots with inner product −1 share exactly
/// one index, so their integral span is an `A_2` subsystem.
pub fn is_a2_pair(beta: &Root, gamma: &Root) -> bool {
    if beta.is_zero() || gamma.is_zero() || beta == gamma || *beta == gamma.neg() {
        return false;
    }
    inner_product(beta, gamma) == -1
}

/// A Weyl group element as a permutation of `{0,…,ℓ}` together with a
/// word in the simple reflections `s_k` (0-based `k`, swapping `k` and
/// `k+1`) realizing it. The word `[k1, …, km]` stands for the composite
/// `s_k1 ∘ ⋯ ∘ s_km`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WeylElement {
    pub perm: Vec<usize>,
    pub word: Vec<usize>,
}

impl WeylElement {
    pub fn identity(size: usize) -> Self {
        WeylElement { perm: (0..size).collect(), word: Vec::new() }
    }

    pub fn from_word(size: usize, word: &[usize]) -> Self {
        let mut perm: Vec<usize> = (0..size).collect();
        // s_k1 ∘ ⋯ ∘ s_km: apply s_km first.
        for i in 0..size {
            let mut x = i;
            for &k in word.iter().rev() {
                x = simple_reflection(k, x);
            }
            perm[i] = x;
        }
        WeylElement { perm, word: word.to_vec() }
    }

    pub fn apply(&self, root: &Root) -> Root {
        match *root {
            Root::Zero => Root::Zero,
            Root::Pair(i, j) => Root::Pair(self.perm[i], self.perm[j]),
        }
    }

    pub fn compose(&self, inner: &WeylElement) -> WeylElement {
        let perm = inner.perm.iter().map(|&x| self.perm[x]).collect();
        let word = self.word.iter().chain(&inner.word).copied().collect();
        WeylElement { perm, word }
    }

    /// The word reproduces the stored permutation.
    pub fn is_consistent(&self) -> bool {
        WeylElement::from_word(self.perm.len(), &self.word).perm == self.perm
    }
}

fn simple_reflection(k: usize, x: usize) -> usize {
    if x == k {
        k + 1
    } else if x == k + 1 {
        k
    } else {
        x
    }
}

/// The root system `A_ℓ`, `ℓ ≥ 2`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct RootSystemA {
    ell: usize,
}

impl RootSystemA {
    pub fn new(ell: usize) -> Result<Self> {
        if ell < 2 {
            return Err(Error::RankTooSmall(ell));
        }
        Ok(RootSystemA { ell })
    }

    pub fn ell(&self) -> usize {
        self.ell
    }

    /// Matrix size `ℓ + 1`.
    pub fn size(&self) -> usize {
        self.ell + 1
    }

    /// All `ℓ(ℓ+1)` nonzero roots.
    pub fn roots(&self) -> Vec<Root> {
        let n = self.size();
        (0..n).flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| Root::Pair(i, j))).collect()
    }

    pub fn simple_roots(&self) -> Vec<Root> {
        (0..self.ell).map(|k| Root::Pair(k, k + 1)).collect()
    }

    pub fn contains(&self, root: &Root) -> bool {
        match *root {
            Root::Zero => true,
            Root::Pair(i, j) => i != j && root.max_index().unwrap() < self.size(),
        }
    }

    pub(crate) fn check(&self, root: &Root) -> Result<()> {
        if self.contains(root) {
            Ok(())
        } else {
            Err(Error::InvalidRoot(format!("{root:?} is not a root of A_{}", self.ell)))
        }
    }

    /// A shortest word `w` with `w(α) = β`, found by breadth-first search
    /// over `Sym(ℓ+1)`.
    pub fn weyl_word(&self, alpha: &Root, beta: &Root) -> Result<WeylElement> {
        self.check(alpha)?;
        self.check(beta)?;
        let (Root::Pair(i, j), Root::Pair(k, l)) = (*alpha, *beta) else {
            return Err(Error::ZeroCoroot);
        };
        let size = self.size();
        let start = WeylElement::identity(size);
        let mut seen: HashSet<Vec<usize>> = HashSet::new();
        seen.insert(start.perm.clone());
        let mut queue = VecDeque::from([start]);
        while let Some(w) = queue.pop_front() {
            if w.perm[i] == k && w.perm[j] == l {
                return Ok(w);
            }
            for s in 0..self.ell {
                // s ∘ w
                let perm: Vec<usize> = w.perm.iter().map(|&x| simple_reflection(s, x)).collect();
                if seen.insert(perm.clone()) {
                    let mut word = Vec::with_capacity(w.word.len() + 1);
                    word.push(s);
                    word.extend_from_slice(&w.word);
                    queue.push_back(WeylElement { perm, word });
                }
            }
        }
        unreachable!("Sym(ℓ+1) acts transitively on the roots of A_ℓ")
    }

    pub fn chevalley_basis(&self) -> ChevalleyBasis {
        ChevalleyBasis { size: self.size() }
    }
}

/// Dense square matrix over `ℚ`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RatMatrix {
    size: usize,
    data: Vec<Rational>,
}

impl RatMatrix {
    pub fn zero(size: usize) -> Self {
        RatMatrix { size, data: vec![Rational::zero(); size * size] }
    }

    pub fn unit(size: usize, i: usize, j: usize) -> Self {
        let mut m = RatMatrix::zero(size);
        m.data[i * size + j] = Rational::one();
        m
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.size + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: Rational) {
        self.data[i * self.size + j] = value;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn trace(&self) -> Rational {
        (0..self.size).map(|i| self.get(i, i).clone()).sum()
    }

    pub fn mul(&self, rhs: &RatMatrix) -> RatMatrix {
        let n = self.size;
        let mut out = RatMatrix::zero(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        out.data[i * n + j] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn sub(&self, rhs: &RatMatrix) -> RatMatrix {
        let data = self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect();
        RatMatrix { size: self.size, data }
    }

    pub fn scale(&self, c: &Rational) -> RatMatrix {
        RatMatrix { size: self.size, data: self.data.iter().map(|a| a * c).collect() }
    }

    pub fn bracket(&self, rhs: &RatMatrix) -> RatMatrix {
        self.mul(rhs).sub(&rhs.mul(self))
    }
}

/// `e_{ε_i−ε_j} = E_ij`, `h_k = E_kk − E_{k+1,k+1}`.
#[derive(Clone, Copy, Debug)]
pub struct ChevalleyBasis {
    size: usize,
}

impl ChevalleyBasis {
    pub fn size(&self) -> usize {
        self.size
    }

    pub fn e(&self, root: &Root) -> Result<RatMatrix> {
        match *root {
            Root::Zero => Err(Error::ZeroCoroot),
            Root::Pair(i, j) => Ok(RatMatrix::unit(self.size, i, j)),
        }
    }

    /// `h_k` for the simple root `α_k = ε_k − ε_{k+1}` (0-based `k`).
    pub fn h(&self, k: usize) -> RatMatrix {
        let mut m = RatMatrix::zero(self.size);
        m.set(k, k, rat(1));
        m.set(k + 1, k + 1, rat(-1));
        m
    }

    /// The coroot `h_α = [e_α, e_{−α}]`.
    pub fn coroot(&self, root: &Root) -> Result<RatMatrix> {
        let e = self.e(root)?;
        let f = self.e(&root.neg())?;
        Ok(e.bracket(&f))
    }

    /// `N` with `[e_β, e_γ] = N e_{β+γ}` when `β + γ` is a nonzero root.
    pub fn structure_constant(&self, beta: &Root, gamma: &Root) -> Result<Option<Rational>> {
        let sum = match beta.checked_add(gamma) {
            Some(Root::Pair(i, j)) => (i, j),
            _ => return Ok(None),
        };
        let b = self.e(beta)?.bracket(&self.e(gamma)?);
        Ok(Some(b.get(sum.0, sum.1).clone()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a(ell: usize) -> RootSystemA {
        RootSystemA::new(ell).unwrap()
    }

    #[test]
    fn rank_one_rejected() {
        assert!(matches!(RootSystemA::new(1), Err(Error::RankTooSmall(1))));
    }

    #[test]
    fn cartan_integers() {
        let a12 = Root::pair(0, 1);
        let a23 = Root::pair(1, 2);
        let a34 = Root::pair(2, 3);
        assert_eq!(cartan_integer(&a12, &a12).unwrap(), 2);
        assert_eq!(cartan_integer(&a12, &a23).unwrap(), -1);
        assert_eq!(cartan_integer(&a12, &a34).unwrap(), 0);
        assert_eq!(cartan_integer(&a12, &a12.neg()).unwrap(), -2);
        assert_eq!(cartan_integer(&Root::Zero, &a12).unwrap(), 0);
        assert!(matches!(cartan_integer(&a12, &Root::Zero), Err(Error::ZeroCoroot)));
    }

    #[test]
    fn a2_pairs() {
        let a12 = Root::pair(0, 1);
        assert!(is_a2_pair(&a12, &Root::pair(1, 2)));
        assert!(is_a2_pair(&Root::pair(1, 2), &a12));
        assert!(!is_a2_pair(&a12, &a12.neg()));
        assert!(!is_a2_pair(&a12, &Root::pair(2, 3)));
        assert!(!is_a2_pair(&a12, &Root::pair(0, 2)));
    }

    #[test]
    fn root_count() {
        for ell in 2..6 {
            assert_eq!(a(ell).roots().len(), ell * (ell + 1));
        }
    }

    #[test]
    fn weyl_words() {
        let sys = a(2);
        let a12 = Root::pair(0, 1);
        assert_eq!(sys.weyl_word(&a12, &a12).unwrap().word, Vec::<usize>::new());
        assert_eq!(sys.weyl_word(&a12, &a12.neg()).unwrap().word, vec![0]);
        let w = sys.weyl_word(&a12, &Root::pair(1, 2)).unwrap();
        assert!(w.word.len() <= 3);
        assert_eq!(w.perm[0], 1);
        assert_eq!(w.perm[1], 2);
        assert!(w.is_consistent());
    }

    #[test]
    fn weyl_words_compose() {
        let sys = a(3);
        let roots = sys.roots();
        for alpha in &roots {
            for beta in &roots {
                let w1 = sys.weyl_word(alpha, beta).unwrap();
                assert!(w1.is_consistent());
                assert_eq!(w1.apply(alpha), *beta);
                for gamma in roots.iter().step_by(5) {
                    let w2 = sys.weyl_word(beta, gamma).unwrap();
                    let composed = w2.compose(&w1);
                    assert!(composed.is_consistent());
                    assert_eq!(composed.apply(alpha), *gamma);
                }
            }
        }
    }

    #[test]
    fn chevalley_relations() {
        let basis = a(2).chevalley_basis();
        let a12 = Root::pair(0, 1);
        let e = basis.e(&a12).unwrap();
        let f = basis.e(&a12.neg()).unwrap();
        assert_eq!(e.bracket(&f), basis.h(0));
        assert_eq!(basis.h(0).bracket(&e), e.scale(&rat(2)));
        assert_eq!(
            basis.e(&a12).unwrap().bracket(&basis.e(&Root::pair(1, 2)).unwrap()),
            basis.e(&Root::pair(0, 2)).unwrap()
        );
        assert_eq!(basis.structure_constant(&a12, &Root::pair(1, 2)).unwrap(), Some(rat(1)));
        assert_eq!(basis.structure_constant(&Root::pair(1, 2), &a12).unwrap(), Some(rat(-1)));
        assert_eq!(basis.structure_constant(&a12, &a12).unwrap(), None);
    }

    #[test]
    fn cartan_matches_coroot_action() {
        let sys = a(3);
        let basis = sys.chevalley_basis();
        for alpha in sys.roots() {
            let h = basis.coroot(&alpha).unwrap();
            for beta in sys.roots() {
                let e = basis.e(&beta).unwrap();
                let c = cartan_integer(&beta, &alpha).unwrap();
                assert_eq!(h.bracket(&e), e.scale(&rat(c)));
            }
        }
    }
}
