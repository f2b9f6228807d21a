//! Radial profile system for warped wave-front metrics `𝔥 = e^K(dr² + h_X)`
//! over an Einstein three-manifold with constant `λ`:
//!
//! ```text
//! ℱ″ + K′ℱ′ = 𝔢² e^{2(ℱ−K)},   K″ + (K′)² = 2λ,
//! C := 3(K′)² − 2(ℱ′)² + 2𝔢² e^{2(ℱ−K)} − 6λ,   C′ = −2K′C.
//! ```
//!
//! Integration is fixed-step classical fourth-order Runge-Kutta; the
//! trajectory also carries `ρ` with `dρ = e^{−K}dr`, so the harmonic profile
//! is `H̄ = m₁ρ + m₂`. For `λ < 0` the system has closed forms:
//! `e^K = c·cos(kr)` with `k = √(2|λ|)`, and the dilaton sits on the
//! hyperbolic branch of the Liouville equation with energy `E = 3c²|λ|`.

use crate::error::{Error, Result};
use serde::Serialize;

#[derive(Debug, Clone, Copy)]
pub struct RadialParams {
    pub lambda: f64,
    pub e: f64,
    pub c: f64,
}

#[derive(Debug, Clone, Copy, Serialize)]
pub struct RadialState {
    pub r: f64,
    pub k: f64,
    pub kp: f64,
    pub f: f64,
    pub fp: f64,
}

impl RadialState {
    /// Hamiltonian constraint value.
    pub fn constraint(&self, p: &RadialParams) -> f64 {
        3.0 * self.kp * self.kp - 2.0 * self.fp * self.fp
            + 2.0 * p.e * p.e * (2.0 * (self.f - self.k)).exp()
            - 6.0 * p.lambda
    }
}

/// Right-hand side `(K′, K″, ℱ′, ℱ″)`.
pub fn radial_rhs(state: &RadialState, p: &RadialParams) -> Result<(f64, f64, f64, f64)> {
    if state.k < -30.0 {
        return Err(Error::ConstraintUnsolvable(
            "warp factor collapsed (e^K → 0)".into(),
        ));
    }
    let kpp = 2.0 * p.lambda - state.kp * state.kp;
    let fpp = p.e * p.e * (2.0 * (state.f - state.k)).exp() - state.kp * state.fp;
    Ok((state.kp, kpp, state.fp, fpp))
}

/// Solve the constraint `C = 0` for `ℱ′` given the other initial data;
/// `fp_sign` selects the root.
pub fn complete_initial_data(
    k: f64,
    kp: f64,
    f: f64,
    p: &RadialParams,
    fp_sign: i8,
) -> Result<f64> {
    let disc =
        (3.0 * kp * kp + 2.0 * p.e * p.e * (2.0 * (f - k)).exp() - 6.0 * p.lambda) / 2.0;
    if disc < 0.0 {
        return Err(Error::ConstraintUnsolvable(format!(
            "negative discriminant {disc:.3e} for ℱ′"
        )));
    }
    Ok(fp_sign as f64 * disc.sqrt())
}

#[derive(Debug, Clone)]
pub struct RadialTrajectory {
    pub states: Vec<RadialState>,
    /// `ρ(r)` with `ρ(r₀) = ρ₀` supplied by the caller.
    pub rho: Vec<f64>,
    pub constraint: Vec<f64>,
    /// Integration stopped before `r₁` because the warp factor collapsed.
    pub truncated: bool,
}

impl RadialTrajectory {
    pub fn max_constraint_drift(&self) -> f64 {
        self.constraint.iter().map(|c| c.abs()).fold(0.0, f64::max)
    }
}

/// Fixed-step classical Runge-Kutta on `(K, K′, ℱ, ℱ′, ρ)`.
pub fn radial_integrate(
    init: &RadialState,
    p: &RadialParams,
    r1: f64,
    step: f64,
    rho0: f64,
) -> Result<RadialTrajectory> {
    if step <= 0.0 || r1 <= init.r {
        return Err(Error::InvalidParameter("need r₁ > r₀ and step > 0".into()));
    }
    if init.constraint(p).abs() > 1e-10 {
        return Err(Error::ConstraintUnsolvable(format!(
            "initial constraint violated: C = {:.3e}",
            init.constraint(p)
        )));
    }
    let rhs = |y: &[f64; 5]| -> Result<[f64; 5]> {
        let st = RadialState { r: 0.0, k: y[0], kp: y[1], f: y[2], fp: y[3] };
        let (kp, kpp, fp, fpp) = radial_rhs(&st, p)?;
        Ok([kp, kpp, fp, fpp, (-y[0]).exp()])
    };
    let mut y = [init.k, init.kp, init.f, init.fp, rho0];
    let mut r = init.r;
    let mut states = vec![*init];
    let mut rho = vec![rho0];
    let mut constraint = vec![init.constraint(p)];
    let mut truncated = false;
    let n_steps = ((r1 - init.r) / step).round() as usize;
    'outer: for _ in 0..n_steps {
        let mut stage = [[0.0f64; 5]; 4];
        let offsets = [0.0, 0.5, 0.5, 1.0];
        for s in 0..4 {
            let mut ys = y;
            if s > 0 {
                for i in 0..5 {
                    ys[i] = y[i] + offsets[s] * step * stage[s - 1][i];
                }
            }
            match rhs(&ys) {
                Ok(v) => stage[s] = v,
                Err(_) => {
                    truncated = true;
                    break 'outer;
                }
            }
        }
        for i in 0..5 {
            y[i] += step / 6.0
                * (stage[0][i] + 2.0 * stage[1][i] + 2.0 * stage[2][i] + stage[3][i]);
        }
        r += step;
        if y[0] < -25.0 {
            truncated = true;
            break;
        }
        let st = RadialState { r, k: y[0], kp: y[1], f: y[2], fp: y[3] };
        constraint.push(st.constraint(p));
        states.push(st);
        rho.push(y[4]);
    }
    Ok(RadialTrajectory { states, rho, constraint, truncated })
}

/// Closed forms for `λ < 0`: the warp `e^K = c·cos(kr)` on
/// `r ∈ (−π/2k, π/2k)` and the hyperbolic Liouville dilaton.
pub struct RadialClosedForm {
    pub params: RadialParams,
    /// Characteristic frequency `k = √(2|λ|)`.
    pub freq: f64,
    /// Liouville energy `E = 3c²|λ|`.
    pub energy: f64,
    pub rho_star: f64,
}

pub fn radial_closed_form(p: &RadialParams, rho_star: f64) -> Result<RadialClosedForm> {
    if p.lambda >= 0.0 {
        return Err(Error::InvalidParameter("closed form requires λ < 0".into()));
    }
    if p.c <= 0.0 {
        return Err(Error::InvalidParameter("warp amplitude c must be positive".into()));
    }
    if p.e <= 0.0 {
        return Err(Error::InvalidParameter("charge 𝔢 must be positive".into()));
    }
    let energy = 3.0 * p.c * p.c * p.lambda.abs();
    Ok(RadialClosedForm {
        params: *p,
        freq: (2.0 * p.lambda.abs()).sqrt(),
        energy,
        rho_star,
    })
}

impl RadialClosedForm {
    pub fn k(&self, r: f64) -> f64 {
        (self.params.c * (self.freq * r).cos()).ln()
    }

    pub fn kp(&self, r: f64) -> f64 {
        -self.freq * (self.freq * r).tan()
    }

    /// `ρ(r) = ln|sec(kr) + tan(kr)| / (ck)`.
    pub fn rho(&self, r: f64) -> f64 {
        let kr = self.freq * r;
        ((1.0 / kr.cos()) + kr.tan()).abs().ln() / (self.params.c * self.freq)
    }

    /// `e^{−ℱ(ρ)} = (𝔢/√E)·sinh(√E(ρ−ρ*))`.
    pub fn f_of_rho(&self, rho: f64) -> f64 {
        let se = self.energy.sqrt();
        -((self.params.e / se) * (se * (rho - self.rho_star)).sinh()).ln()
    }

    pub fn f(&self, r: f64) -> f64 {
        self.f_of_rho(self.rho(r))
    }

    /// `ℱ′ = e^{−K}∂_ρℱ = −e^{−K}√E·coth(√E(ρ−ρ*))`.
    pub fn fp(&self, r: f64) -> f64 {
        let se = self.energy.sqrt();
        let rho = self.rho(r);
        -(-self.k(r)).exp() * se / (se * (rho - self.rho_star)).tanh()
    }

    /// `H̄(ρ) = m₁ρ + m₂`.
    pub fn hbar(&self, r: f64, m1: f64, m2: f64) -> f64 {
        m1 * self.rho(r) + m2
    }

    pub fn state(&self, r: f64) -> RadialState {
        RadialState { r, k: self.k(r), kp: self.kp(r), f: self.f(r), fp: self.fp(r) }
    }
}
