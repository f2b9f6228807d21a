//! Numerical engine for complex spinorial forms.
//!
//! The crate is organised in layers:
//!
//! * [`algebra`] - dense multivector arithmetic for the Kähler-Atiyah algebra
//!   `(∧V*_ℂ, ⋄)` in arbitrary signature `(p,q)` with `p+q ≤ 8`, plus the
//!   odd-dimensional truncated algebra `(∧^<V*_ℂ, ∨)`.
//! * [`spinor`] - concrete irreducible Clifford modules: gamma matrices,
//!   quantization/dequantization, admissible pairings, and the Hermitian and
//!   complex-bilinear spinor squaring maps.
//! * [`verifier`] - executable forms of the algebraic characterization
//!   theorems for spinor squares and the low-dimensional normal forms.
//! * [`geometry`] - coordinate-chart pseudo-Riemannian calculus: Christoffel
//!   symbols, curvature, Hodge duals of fields, covariant derivatives, and the
//!   first-order parallel-square residuals.
//! * [`solutions`] - constructors for the closed-form background families
//!   (Freedman waves, the six-dimensional black brane, Killing-spinor warped
//!   products, the radial ODE system) together with their residual checks.
//! * [`report`] - batch check runners emitting machine-readable reports; the
//!   `spinform` binary is a thin front end over this module.
//!
//! Most capabilities have a runnable demo under `examples/`.

pub mod algebra;
pub mod error;
pub mod geometry;
pub mod report;
pub mod solutions;
pub mod spinor;
pub mod tol;
pub mod verifier;

pub use algebra::{Multivector, Signature, TruncatedMultivector};
pub use error::{Error, Result};
pub use spinor::{Pairing, PairingKind, SpinorRep};
