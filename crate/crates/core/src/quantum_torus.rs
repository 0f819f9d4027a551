//! The associative quantum torus `K_q = K_q[x_1^{±1}, …, x_n^{±1}]`.

use crate::error::Result;
use crate::scalars::{degree_window, Degree, QuantumMatrix, Rational};
use crate::torus::{GradedTorus, TorusElement, TorusKind};

pub type QTElement = TorusElement;

/// `K_q` with the normal-ordered basis `x^λ = x_1^{λ_1} ⋯ x_n^{λ_n}`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QuantumTorus {
    q: QuantumMatrix,
}

impl QuantumTorus {
    pub fn new(q: QuantumMatrix) -> Self {
        QuantumTorus { q }
    }

    pub fn q(&self) -> &QuantumMatrix {
        &self.q
    }

    pub fn is_elementary(&self) -> bool {
        self.q.is_elementary()
    }

    /// `K_{q'}` with `q' = qᵀ`, isomorphic to `K_q^op` by `x_i ↦ x_i`.
    pub fn opposite(&self) -> QuantumTorus {
        QuantumTorus::new(self.q.opposite())
    }

    /// The scalar `s(λ)` with `x_n^{λ_n} ⋯ x_1^{λ_1} = s(λ) x^λ`. The
    /// isomorphism `K_{qᵀ} → K_q^op`, `x_i ↦ x_i`, sends `x^λ` to
    /// `s(λ) x^λ`.
    pub fn reversal_scalar(&self, degree: &Degree) -> Result<Rational> {
        degree.check_rank(self.q.n())?;
        let n = self.q.n();
        let mut acc = TorusElement::one(n);
        for i in (0..n).rev() {
            let mut coords = vec![0; n];
            coords[i] = degree.coords()[i];
            acc = self.mul(&acc, &TorusElement::x(Degree::new(coords)))?;
        }
        Ok(acc.coefficient(degree))
    }

    /// A degree `μ` in `[-window, window]ⁿ` with `t(μ, λ−μ) ≠ t(λ−μ, μ)`,
    /// i.e. `x^μ x^{λ−μ} − x^{λ−μ} x^μ` is a nonzero multiple of `x^λ`.
    pub fn commutator_witness(&self, degree: &Degree, window: i64) -> Result<Option<Degree>> {
        degree.check_rank(self.q.n())?;
        for mu in degree_window(self.q.n(), window) {
            let nu = degree - &mu;
            if self.q.twist_unchecked(mu.coords(), nu.coords()) != self.q.twist_unchecked(nu.coords(), mu.coords()) {
                return Ok(Some(mu));
            }
        }
        Ok(None)
    }

    /// Whether `[A, A]^λ = A^λ` is witnessed inside the window. `false`
    /// means "not witnessed", which for a window large enough is the same
    /// as `[A, A]^λ = 0`.
    pub fn commutator_component_full(&self, degree: &Degree, window: i64) -> Result<bool> {
        Ok(self.commutator_witness(degree, window)?.is_some())
    }
}

impl GradedTorus for QuantumTorus {
    fn kind(&self) -> TorusKind {
        TorusKind::Quantum
    }

    fn rank(&self) -> usize {
        self.q.n()
    }

    fn structure_constant(&self, lhs: &Degree, rhs: &Degree) -> Rational {
        self.q.twist_unchecked(lhs.coords(), rhs.coords())
    }
}
