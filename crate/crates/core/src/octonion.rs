//! The octonion `n`-torus `𝕆 = C ⊗ K[x_4^{±1}, …, x_n^{±1}]`, `n ≥ 3`.
//!
//! `C` is realized by three Cayley–Dickson doublings over the commutative
//! Laurent ring `K[u_1^{±1}, u_2^{±1}, u_3^{±1}]` with parameters
//! `γ_i = u_i`, using
//!
//! ```text
//! (a, b)(c, d) = (ac + γ·d̄b, da + bc̄),     conj(a, b) = (ā, −b).
//! ```
//!
//! The new unit of the i-th doubling is `v_i = (0, 1)` and plays the role of
//! `x_i`, so `v_i² = u_i`. For a degree `λ` write `λ_i = 2k_i + s_i` with
//! `s_i ∈ {0, 1}` (`i ≤ 3`); the canonical monomial spanning `𝕆^λ` is
//!
//! ```text
//! x^λ = u_1^{k_1} u_2^{k_2} u_3^{k_3} · x_4^{λ_4} ⋯ x_n^{λ_n} · e_S
//! ```
//!
//! where `S = {i ≤ 3 : s_i = 1}` and `e_S` is the left-nested product of
//! the `v_i`, `i ∈ S`, in increasing order. Products of canonical
//! monomials are `±` canonical monomials; the sign depends on `S` only.

use crate::error::{Error, Result};
use crate::scalars::{Degree, Rational};
use crate::torus::{GradedTorus, TorusElement, TorusKind};
use num_traits::One;

pub type OctElement = TorusElement;

/// A Cayley–Dickson basis unit `e_S` times a sign and a monomial
/// `u^exps` of the base ring.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
struct ScaledUnit {
    sign: i8,
    u_exps: [i64; 3],
    mask: u8,
}

impl ScaledUnit {
    fn unit(mask: u8) -> Self {
        ScaledUnit { sign: 1, u_exps: [0; 3], mask }
    }

    fn times(self, other: ScaledUnit) -> ScaledUnit {
        let mut u_exps = self.u_exps;
        for (e, o) in u_exps.iter_mut().zip(other.u_exps) {
            *e += o;
        }
        ScaledUnit { sign: self.sign * other.sign, u_exps, mask: self.mask | other.mask }
    }

    fn negate(self) -> ScaledUnit {
        ScaledUnit { sign: -self.sign, ..self }
    }
}

/// Conjugation on a unit of the level-`level` algebra: `ē_∅ = e_∅`,
/// `ē_S = −e_S` otherwise.
fn conj_unit(mask: u8) -> ScaledUnit {
    if mask == 0 {
        ScaledUnit::unit(0)
    } else {
        ScaledUnit::unit(mask).negate()
    }
}

/// `e_S · e_T` in the algebra obtained after `level` doublings.
/// The sign of each `γ_i` is `+1`; see the module docs.
fn unit_mul(level: u8, s: u8, t: u8) -> ScaledUnit {
    if level == 0 {
        return ScaledUnit::unit(0);
    }
    let top = 1u8 << (level - 1);
    let (a, b_top) = (s & !top, s & top != 0);
    let (c, d_top) = (t & !top, t & top != 0);
    let lower = |x: u8, y: u8| unit_mul(level - 1, x, y);
    let mul_scaled = |x: ScaledUnit, y: ScaledUnit| {
        let p = lower(x.mask, y.mask);
        ScaledUnit {
            sign: x.sign * y.sign * p.sign,
            u_exps: [
                x.u_exps[0] + y.u_exps[0] + p.u_exps[0],
                x.u_exps[1] + y.u_exps[1] + p.u_exps[1],
                x.u_exps[2] + y.u_exps[2] + p.u_exps[2],
            ],
            mask: p.mask,
        }
    };
    match (b_top, d_top) {
        // (a, 0)(c, 0) = (ac, 0)
        (false, false) => lower(a, c),
        // (a, 0)(0, d) = (0, da)
        (false, true) => {
            let p = lower(c, a);
            ScaledUnit { mask: p.mask | top, ..p }
        }
        // (0, b)(c, 0) = (0, b c̄)
        (true, false) => {
            let p = mul_scaled(ScaledUnit::unit(a), conj_unit(c));
            ScaledUnit { mask: p.mask | top, ..p }
        }
        // (0, b)(0, d) = (γ d̄ b, 0)
        (true, true) => {
            let p = mul_scaled(conj_unit(c), ScaledUnit::unit(a));
            let mut gamma = [0i64; 3];
            gamma[usize::from(level - 1)] = 1;
            p.times(ScaledUnit { sign: 1, u_exps: gamma, mask: 0 })
        }
    }
}

fn parity_mask(degree: &Degree) -> u8 {
    degree.coords()[..3].iter().enumerate().fold(0u8, |m, (i, c)| if c.rem_euclid(2) == 1 { m | (1 << i) } else { m })
}

fn base_exponents(degree: &Degree) -> [i64; 3] {
    let c = degree.coords();
    [c[0].div_euclid(2), c[1].div_euclid(2), c[2].div_euclid(2)]
}

/// The octonion torus of rank `n ≥ 3`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct OctonionTorus {
    rank: usize,
}

impl OctonionTorus {
    pub fn new(rank: usize) -> Result<Self> {
        if rank < 3 {
            return Err(Error::OctonionRankBelow3(rank));
        }
        Ok(OctonionTorus { rank })
    }

    /// `f(λ, μ) ∈ {±1}` with `x^λ x^μ = f(λ, μ) x^{λ+μ}`.
    pub fn sign(&self, lhs: &Degree, rhs: &Degree) -> i8 {
        let (s, t) = (parity_mask(lhs), parity_mask(rhs));
        let product = unit_mul(3, s, t);
        debug_assert_eq!(product.mask, s ^ t);
        // u^{k(λ)} u^{k(μ)} u^{γ} must be u^{k(λ+μ)}: the product lands on
        // the canonical monomial and all bookkeeping is in the sign.
        debug_assert!({
            let (kl, km, ks) = (base_exponents(lhs), base_exponents(rhs), base_exponents(&(lhs + rhs)));
            (0..3).all(|i| kl[i] + km[i] + product.u_exps[i] == ks[i])
        });
        product.sign
    }

    /// CD conjugation `σ`: `x_i ↦ −x_i` for `i ≤ 3`, `x_j ↦ x_j` for
    /// `j ≥ 4`, extended as an anti-automorphism.
    pub fn conjugation(&self, a: &OctElement) -> Result<OctElement> {
        a.check_rank(self.rank)?;
        Ok(a.map_terms(|d, c| {
            let sign = conj_unit(parity_mask(d)).sign;
            (d.clone(), if sign > 0 { c.clone() } else { -c.clone() })
        }))
    }

    /// The automorphism `τ` with `τ(x_i) = x_i^{-1}`. On the model,
    /// `τ(u_i) = u_i^{-1}`, `τ(v_i) = u_i^{-1} v_i`, and `τ` fixes each `e_S`
    /// up to the factor `u_S^{-1}`.
    pub fn degree_inversion(&self, a: &OctElement) -> Result<OctElement> {
        a.check_rank(self.rank)?;
        Ok(a.map_terms(|d, c| {
            let mask = parity_mask(d);
            let k = base_exponents(d);
            // τ(u^k · x_{≥4}^λ · e_S) = u^{-k} · u_S^{-1} · x_{≥4}^{-λ} · e_S
            let mut coords: Vec<i64> = d.coords().iter().map(|v| -v).collect();
            let mut image_k = [0i64; 3];
            for i in 0..3 {
                image_k[i] = -k[i] - i64::from((mask >> i) & 1);
                coords[i] = 2 * image_k[i] + i64::from((mask >> i) & 1);
            }
            let image = Degree::new(coords);
            debug_assert_eq!(base_exponents(&image), image_k);
            (image, c.clone())
        }))
    }

    /// The pre-Chevalley anti-involution `σ ∘ τ`.
    pub fn pre_chevalley(&self, a: &OctElement) -> Result<OctElement> {
        self.conjugation(&self.degree_inversion(a)?)
    }

    /// `(a, a, b) = 0` and `(b, a, a) = 0`.
    pub fn check_alternative(&self, a: &OctElement, b: &OctElement) -> Result<bool> {
        Ok(self.associator(a, a, b)?.is_zero() && self.associator(b, a, a)?.is_zero())
    }
}

impl GradedTorus for OctonionTorus {
    fn kind(&self) -> TorusKind {
        TorusKind::Octonion
    }

    fn rank(&self) -> usize {
        self.rank
    }

    fn structure_constant(&self, lhs: &Degree, rhs: &Degree) -> Rational {
        if self.sign(lhs, rhs) > 0 {
            Rational::one()
        } else {
            -Rational::one()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{degree_window, rat};

    fn x(n: usize, coords: &[i64]) -> OctElement {
        let mut c = coords.to_vec();
        c.resize(n, 0);
        TorusElement::x(Degree::new(c))
    }

    #[test]
    fn rank_below_three_rejected() {
        assert!(matches!(OctonionTorus::new(2), Err(Error::OctonionRankBelow3(2))));
    }

    #[test]
    fn presentation_relations() {
        let o = OctonionTorus::new(4).unwrap();
        let gens: Vec<OctElement> = (0..4).map(|i| TorusElement::generator(4, i)).collect();
        for i in 0..3 {
            for j in 0..3 {
                if i != j {
                    let lhs = o.mul(&gens[i], &gens[j]).unwrap();
                    let rhs = o.mul(&gens[j], &gens[i]).unwrap();
                    assert!((&lhs + &rhs).is_zero(), "x{} x{} should anticommute", i + 1, j + 1);
                }
            }
        }
        let left = o.mul(&o.mul(&gens[0], &gens[1]).unwrap(), &gens[2]).unwrap();
        let right = o.mul(&gens[0], &o.mul(&gens[1], &gens[2]).unwrap()).unwrap();
        assert!(!left.is_zero());
        assert_eq!(left, -&right);
        assert_eq!(o.mul(&gens[3], &gens[0]).unwrap(), o.mul(&gens[0], &gens[3]).unwrap());
        assert_eq!(o.mul(&gens[0], &gens[0]).unwrap(), x(4, &[2]));
        for i in 0..4 {
            let inv = o.invert(&gens[i]).unwrap();
            assert_eq!(o.mul(&gens[i], &inv).unwrap(), TorusElement::one(4));
            assert_eq!(o.mul(&inv, &gens[i]).unwrap(), TorusElement::one(4));
        }
    }

    #[test]
    fn signs_are_units_and_unital() {
        let o = OctonionTorus::new(3).unwrap();
        let zero = Degree::zero(3);
        for a in degree_window(3, 2) {
            assert_eq!(o.sign(&a, &zero), 1);
            assert_eq!(o.sign(&zero, &a), 1);
        }
    }

    #[test]
    fn conjugation_values() {
        let o = OctonionTorus::new(4).unwrap();
        let x1 = TorusElement::generator(4, 0);
        let x2 = TorusElement::generator(4, 1);
        let x4 = TorusElement::generator(4, 3);
        assert_eq!(o.conjugation(&x1).unwrap(), -&x1);
        assert_eq!(o.conjugation(&x4).unwrap(), x4);
        let x1x2 = o.mul(&x1, &x2).unwrap();
        let expected = o.mul(&o.conjugation(&x2).unwrap(), &o.conjugation(&x1).unwrap()).unwrap();
        assert_eq!(o.conjugation(&x1x2).unwrap(), expected);
        assert_eq!(o.conjugation(&x1x2).unwrap(), -&x1x2);
    }

    #[test]
    fn degree_inversion_values() {
        let o = OctonionTorus::new(3).unwrap();
        let x1 = TorusElement::generator(3, 0);
        let x2 = TorusElement::generator(3, 1);
        let t1 = o.degree_inversion(&x1).unwrap();
        assert_eq!(t1, o.invert(&x1).unwrap());
        assert_eq!(t1, x(3, &[-1]));
        let lhs = o.degree_inversion(&o.mul(&x1, &x2).unwrap()).unwrap();
        let rhs = o.mul(&t1, &o.degree_inversion(&x2).unwrap()).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn pre_chevalley_values() {
        let o = OctonionTorus::new(3).unwrap();
        let x1 = TorusElement::generator(3, 0);
        assert_eq!(o.pre_chevalley(&x1).unwrap(), x(3, &[-1]).scale(&rat(-1)));
        let one = TorusElement::one(3);
        assert_eq!(o.pre_chevalley(&one).unwrap(), one);
    }

    #[test]
    fn alternativity_examples() {
        let o = OctonionTorus::new(3).unwrap();
        let x1 = TorusElement::generator(3, 0);
        let x2 = TorusElement::generator(3, 1);
        let x3 = TorusElement::generator(3, 2);
        assert!(o.check_alternative(&x1, &x2).unwrap());
        assert!(o.check_alternative(&(&x1 + &x2), &x3).unwrap());
        assert!(!o.associator(&x1, &x2, &x3).unwrap().is_zero());
    }
}
