//! Exact-arithmetic toolkit for finite-dimensional Lie-Yamaguti algebras.
//!
//! Everything is computed over arbitrary-precision rationals, so every check
//! is an exact yes/no answer with explicit counterexample witnesses. The crate
//! covers:
//!
//! - [`ly`]: Lie-Yamaguti algebras as structure-constant tensors, bracket
//!   evaluation, axiom verification, the construction from Lie algebras,
//!   homomorphism and subspace-closure checks.
//! - [`rep`]: representations, the derived operator family `D`, adjoint and
//!   dual (coadjoint) representations, semidirect products.
//! - [`quadratic`]: invariant symmetric bilinear forms and the induced
//!   isomorphism between the adjoint and coadjoint representations.
//! - [`pre_ly`]: pre-Lie-Yamaguti algebras, the derived triple product, the
//!   subadjacent Lie-Yamaguti algebra and its canonical representation.
//! - [`rbo`]: relative Rota-Baxter operators, the pre-Lie-Yamaguti algebra
//!   they induce, and the compatible structure from an invertible operator.
//! - [`symplectic`]: symplectic structures, the equivalence with
//!   skew-symmetric relative Rota-Baxter operators for the coadjoint
//!   representation, and the compatible pre-Lie-Yamaguti algebra.
//! - [`phase`]: phase spaces, perfectness, quadratic pre-Lie-Yamaguti
//!   algebras, Manin triples, and the round-trip correspondence.
//!
//! All values are immutable after construction and all operations are pure
//! functions, so they can be freely shared and evaluated across threads.

// Basis indices name positions in witness tuples, so the check loops index
// tensors directly.
#![allow(clippy::needless_range_loop)]

pub mod error;
pub mod linalg;
pub mod ly;
pub mod phase;
pub mod pre_ly;
pub mod quadratic;
pub mod rbo;
pub mod rep;
pub mod report;
pub mod samples;
pub mod scalar;
pub mod symplectic;

pub use error::Error;
pub use linalg::{Matrix, Vector};
pub use ly::{LieAlgebra, LyAlgebra};
pub use phase::{ManinInput, PhaseSpace, StagedReport};
pub use pre_ly::PreLyAlgebra;
pub use quadratic::BilinearForm;
pub use rep::{DerivedD, Representation};
pub use report::{CheckReport, Witness};
pub use scalar::Scalar;
pub use symplectic::{RbsymEquivalence, SymplecticForm};
