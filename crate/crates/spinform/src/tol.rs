//! Central tolerance constants.
//!
//! All structure constants of the algebra layer are in `{0, ±1}`, so algebraic
//! identities hold to a few ulps and get the tightest bounds. Chart-level
//! residuals are limited by fourth-order finite differencing and get looser
//! bounds.

/// Exact algebraic identities (blade arithmetic, representation theory).
pub const ALGEBRA: f64 = 1e-12;

/// Absolute floor added to relative comparisons.
pub const ABS_FLOOR: f64 = 1e-13;

/// Squaring-theorem axiom residuals, relative to `‖α‖²·2^{d/2}`.
pub const SQUARE_AXIOMS: f64 = 1e-10;

/// Round-trip spinor reconstruction.
pub const RECONSTRUCT: f64 = 1e-9;

/// Curvature closed forms and field-equation residuals (FD-limited).
pub const CURVATURE: f64 = 1e-6;

/// First-order parallel-square systems on analytic charts.
pub const PARALLEL_SQUARE: f64 = 1e-8;

/// Hamiltonian-constraint drift of the radial integrator.
pub const CONSTRAINT_DRIFT: f64 = 1e-8;

/// Closed-form reproduction of the radial family (relative).
pub const RADIAL_CLOSED_FORM: f64 = 1e-6;

/// Scale-aware comparison: `|a - b| ≤ tol·scale + ABS_FLOOR`.
pub fn close(a: f64, b: f64, tol: f64, scale: f64) -> bool {
    (a - b).abs() <= tol * scale.max(1.0) + ABS_FLOOR
}
