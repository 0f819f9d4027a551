//! Exact computations with `ℤⁿ`-graded coordinate tori and the Lie tori of
//! type `A_ℓ` they coordinatize.
//!
//! * [`scalars`]: exact rationals, the degree lattice, quantum matrices and
//!   the twist cocycle.
//! * [`root_system`]: roots of `A_ℓ`, Weyl words and the Chevalley basis.
//! * [`quantum_torus`] and [`octonion`]: the two families of coordinate tori.
//! * [`lie`]: the Lie torus `sl_{ℓ+1}(K_q)` and its Weyl-group machinery.
//! * [`involutions`]: Chevalley involutions, their coordinate
//!   anti-involutions and the existence decision.
//! * [`verify`]: axiom suites producing machine-readable reports.

pub mod error;
pub mod involutions;
pub mod lie;
pub mod octonion;
pub mod quantum_torus;
pub mod report;
pub mod root_system;
pub mod scalars;
pub mod torus;
pub mod verify;

pub use error::{Error, Result};
pub use lie::{GradedComponentKey, LieElement, LieTorus};
pub use octonion::{OctElement, OctonionTorus};
pub use quantum_torus::{QTElement, QuantumTorus};
pub use report::{Check, CheckReport};
pub use root_system::{cartan_integer, is_a2_pair, Root, RootSystemA, WeylElement};
pub use scalars::{Degree, QuantumMatrix, Rational};
pub use torus::{GradedTorus, TorusElement, TorusKind};
