//! The stationary gyratonic wave family on `ℝ² × S²`.
//!
//! Chart coordinates are `(𝔲, 𝔳, θ, φ)` with
//! `g = ℋ d𝔲⊗d𝔲 + d𝔲⊙(d𝔳 + 𝒜) + h`, where `h` is the round metric of radius
//! `R = |𝔢λ_I|⁻¹`, `ψ` is a first Laplace eigenfunction (`Δ_h ψ = 2R⁻²ψ`),
//! `λ_I²ℋ = −(R⁻²ψ² + 𝔠)`, `𝒜 = μλ_I⁻¹ ∗_h dψ`, and the gauge curvature is
//! `F_A = −d𝔲∧dψ + μλ_I ν_h`. The cosmological constant is pinned by
//! `2Λ = −𝔢²λ_I²`.

use crate::algebra::{C64, Signature};
use crate::error::{Error, Result};
use crate::geometry::{CoordForm, FormField, MetricChart, RMat, ScalarField};

fn cx(re: f64) -> C64 {
    C64::new(re, 0.0)
}

#[derive(Debug, Clone)]
pub struct FreedmanParams {
    pub lambda_i: f64,
    pub e: f64,
    pub mu: i8,
    /// First-harmonic coefficients of `ψ`.
    pub c1: f64,
    pub c2: f64,
    pub c3: f64,
    /// Additive constant in the wave profile.
    pub cc: f64,
}

impl FreedmanParams {
    pub fn radius(&self) -> f64 {
        1.0 / (self.e * self.lambda_i).abs()
    }

    /// `2Λ = −𝔢²λ_I²`.
    pub fn cosmological_constant(&self) -> f64 {
        -0.5 * self.e * self.e * self.lambda_i * self.lambda_i
    }

    fn validate(&self) -> Result<()> {
        if self.e == 0.0 || self.lambda_i == 0.0 {
            return Err(Error::InvalidParameter("𝔢 and λ_I must be non-zero".into()));
        }
        if self.mu != 1 && self.mu != -1 {
            return Err(Error::InvalidParameter("μ must be ±1".into()));
        }
        Ok(())
    }
}

fn psi(p: &FreedmanParams, th: f64, ph: f64) -> f64 {
    p.c1 * th.sin() * ph.cos() + p.c2 * th.sin() * ph.sin() + p.c3 * th.cos()
}

fn psi_grad(p: &FreedmanParams, th: f64, ph: f64) -> (f64, f64) {
    let d_th = p.c1 * th.cos() * ph.cos() + p.c2 * th.cos() * ph.sin() - p.c3 * th.sin();
    let d_ph = -p.c1 * th.sin() * ph.sin() + p.c2 * th.sin() * ph.cos();
    (d_th, d_ph)
}

pub struct FreedmanSolution {
    pub params: FreedmanParams,
    pub chart: MetricChart,
    /// Gauge curvature as a two-form field on the 4d chart.
    pub f_a: FormField,
    /// Round transverse sphere of radius `R`, coordinates `(θ, φ)`.
    pub transverse: MetricChart,
    pub psi: ScalarField,
    /// Sphere part `F_a = μλ_I ν_h` of the gauge curvature.
    pub f_small: FormField,
    /// Wave profile on the sphere.
    pub hcal: ScalarField,
    /// Twist one-form on the sphere.
    pub acal: FormField,
    pub lambda: f64,
}

/// `∗_h dψ` on the round sphere: `∗dθ = sinθ·dφ`, `∗dφ = −dθ/sinθ`.
fn star_dpsi(p: &FreedmanParams, th: f64, ph: f64) -> (f64, f64) {
    let (d_th, d_ph) = psi_grad(p, th, ph);
    // returns (dθ-component, dφ-component)
    (-d_ph / th.sin(), d_th * th.sin())
}

pub fn freedman_chart(params: &FreedmanParams) -> Result<FreedmanSolution> {
    params.validate()?;
    let p = params.clone();
    let r = params.radius();
    let r2 = r * r;
    let margin = 0.45;
    let transverse = MetricChart::new(
        "freedman-sphere",
        Signature::new(2, 0)?,
        vec![(margin, std::f64::consts::PI - margin), (0.3, std::f64::consts::TAU - 0.3)],
        vec![],
        move |x| {
            let mut g = RMat::zeros(2, 2);
            g[(0, 0)] = r2;
            g[(1, 1)] = r2 * x[0].sin().powi(2);
            g
        },
    )?;

    let pc = p.clone();
    let hcal = ScalarField::new(move |x| {
        let ps = psi(&pc, x[0], x[1]);
        -(ps * ps / r2 + pc.cc) / (pc.lambda_i * pc.lambda_i)
    });
    let pc = p.clone();
    let acal = FormField::new(2, move |x| {
        let (a_th, a_ph) = star_dpsi(&pc, x[0], x[1]);
        let scale = pc.mu as f64 / pc.lambda_i;
        CoordForm::one_form(&[scale * a_th, scale * a_ph])
    });
    let pc = p.clone();
    let psi_field = ScalarField::new(move |x| psi(&pc, x[0], x[1]));
    let pc = p.clone();
    let f_small = FormField::new(2, move |x| {
        let mut f = CoordForm::zero(2);
        // μλ_I ν_h with ν_h = R² sinθ dθ∧dφ
        f.set_coeff(0b11, cx(pc.mu as f64 * pc.lambda_i * r2 * x[0].sin()));
        f
    });

    let chart = kundt_like_chart(&transverse, &hcal, &acal)?;

    let pc = p.clone();
    let f_a = FormField::new(4, move |x| {
        let (th, ph) = (x[2], x[3]);
        let (d_th, d_ph) = psi_grad(&pc, th, ph);
        let mut f = CoordForm::zero(4);
        // −d𝔲∧dψ
        f.set_coeff(0b0101, cx(-d_th)); // d𝔲∧dθ
        f.set_coeff(0b1001, cx(-d_ph)); // d𝔲∧dφ
        // μλ_I ν_h
        f.set_coeff(0b1100, cx(pc.mu as f64 * pc.lambda_i * r2 * th.sin()));
        f
    });

    Ok(FreedmanSolution {
        params: p.clone(),
        chart,
        f_a,
        transverse,
        psi: psi_field,
        f_small,
        hcal,
        acal,
        lambda: p.cosmological_constant(),
    })
}

/// Brinkmann-form chart `ℋ d𝔲² + d𝔲⊙(d𝔳+𝒜) + h` on `(𝔲,𝔳,θ,φ)`.
fn kundt_like_chart(
    transverse: &MetricChart,
    hcal: &ScalarField,
    acal: &FormField,
) -> Result<MetricChart> {
    let zero_f = ScalarField::constant(0.0);
    super::kundt::kundt_chart("freedman", transverse, hcal, &zero_f, Some(acal))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{einstein_maxwell_residual, laplacian_scalar};

    fn params() -> FreedmanParams {
        FreedmanParams { lambda_i: 0.8, e: 1.25, mu: 1, c1: 0.3, c2: -0.2, c3: 0.5, cc: 0.1 }
    }

    #[test]
    fn psi_is_first_eigenfunction() {
        let sol = freedman_chart(&params()).unwrap();
        let r = sol.params.radius();
        for x in sol.transverse.sample_points(20, 51) {
            let lap = laplacian_scalar(&sol.psi, &sol.transverse, &x);
            let expect = 2.0 / (r * r) * sol.psi.eval(&x);
            assert!((lap - expect).abs() < 1e-7, "Δψ = {lap} vs {expect}");
        }
    }

    #[test]
    fn einstein_maxwell_satisfied() {
        let sol = freedman_chart(&params()).unwrap();
        for x in sol.chart.sample_points(10, 53) {
            let res =
                einstein_maxwell_residual(&sol.chart, &sol.f_a, sol.lambda, sol.params.e, &x)
                    .unwrap();
            assert!(res.max() < 1e-6, "EM residual {:?} at {:?}", res, x);
        }
    }

    #[test]
    fn gaugino_identities() {
        // λ_R = 0 branch: F_A(u♯) = 0 and F_A∧u + μλ_I ∗_g u = 0
        let sol = freedmann_for_gaugino();
        for x in sol.chart.sample_points(10, 57) {
            let f = sol.f_a.eval(&x);
            // u♯ = ∂_𝔳
            let contracted = f.interior_vec(&[0.0, 1.0, 0.0, 0.0]);
            assert!(contracted.norm_inf() < 1e-12);
            let u = CoordForm::one_form(&[1.0, 0.0, 0.0, 0.0]);
            let star_u = sol.chart.hodge_at(&x, &u).unwrap();
            let resid = f
                .wedge(&u)
                .add(&star_u.scale(cx(sol.params.mu as f64 * sol.params.lambda_i)));
            assert!(resid.norm_inf() < 1e-10, "gaugino two-form identity: {:e}", resid.norm_inf());
        }
    }

    fn freedmann_for_gaugino() -> FreedmanSolution {
        freedman_chart(&params()).unwrap()
    }

    #[test]
    fn perturbed_profile_breaks_the_equations() {
        let p = params();
        let sol = freedman_chart(&p).unwrap();
        // scale ℋ multiplicatively by 1.1 and rebuild the chart
        let hcal = sol.hcal.clone();
        let perturbed_h = ScalarField::new(move |x| 1.1 * hcal.eval(&x));
        let chart = kundt_like_chart(&sol.transverse, &perturbed_h, &sol.acal).unwrap();
        let mut worst: f64 = 0.0;
        for x in chart.sample_points(10, 59) {
            let res = einstein_maxwell_residual(&chart, &sol.f_a, sol.lambda, p.e, &x).unwrap();
            worst = worst.max(res.einstein);
        }
        assert!(worst > 1e-3, "perturbation went undetected: {worst:e}");
    }

    #[test]
    fn degenerate_params_rejected() {
        let mut p = params();
        p.e = 0.0;
        assert!(freedman_chart(&p).is_err());
    }

    #[test]
    fn quasi_susy_system_through_parallel_square_residual() {
        // the adapted square α̂ = u + iμ∗u with u = d𝔲 satisfies the full
        // first-order system with zero symbol (the current u is parallel)
        // together with the constraint (F^μ_A − iλ_I)⋄α̂ = 0
        use crate::geometry::{ParallelSquareArgs, SymbolField, parallel_square_residual};
        let p = params();
        let sol = freedman_chart(&p).unwrap();
        let chart = sol.chart.clone();
        let mu = p.mu;
        let alpha = FormField::new(4, move |x| {
            let u = CoordForm::one_form(&[1.0, 0.0, 0.0, 0.0]);
            let star_u = chart.hodge_at(x, &u).unwrap();
            u.add(&star_u.scale(C64::new(0.0, mu as f64)))
        });
        let chart = sol.chart.clone();
        let f_a = sol.f_a.clone();
        let gaugino = FormField::new(4, move |x| {
            // F^μ_A − λ with F^μ_A = ½(F_A + iμ∗F_A) and λ = iλ_I
            let f = f_a.eval(x);
            let star_f = chart.hodge_at(x, &f).unwrap();
            f.add(&star_f.scale(C64::new(0.0, mu as f64)))
                .scale(cx(0.5))
                .sub(&CoordForm::scalar(4, C64::new(0.0, p.lambda_i)))
        });
        let symbol = SymbolField::zero(4);
        let constraints = vec![gaugino];
        for x in sol.chart.sample_points(10, 67) {
            let rep = parallel_square_residual(
                &sol.chart,
                &x,
                &ParallelSquareArgs {
                    alpha: &alpha,
                    symbol: &symbol,
                    constraints: &constraints,
                    s: 1,
                    conjugate: true,
                    ell: None,
                    modulo: None,
                },
            )
            .unwrap();
            assert!(
                rep.max_direction() < 1e-9,
                "gravitino residual {:e} at {x:?}",
                rep.max_direction()
            );
            assert!(
                rep.max_constraint() < 1e-9,
                "gaugino constraint residual {:e} at {x:?}",
                rep.max_constraint()
            );
        }
    }

    #[test]
    fn flux_quantization_by_quadrature() {
        // ∫_{S²} F_a = μλ_I·Area(S²_R), and with the 2π normalization the
        // resulting topological charge satisfies λ_I𝔢²·(∫F_a/2π) = 2μ
        let p = params();
        let sol = freedman_chart(&p).unwrap();
        let r = p.radius();
        let (n_th, n_ph) = (400usize, 400usize);
        let (h_th, h_ph) =
            (std::f64::consts::PI / n_th as f64, std::f64::consts::TAU / n_ph as f64);
        let mut integral = 0.0;
        for i in 0..n_th {
            for j in 0..n_ph {
                let x = [(i as f64 + 0.5) * h_th, (j as f64 + 0.5) * h_ph];
                integral += sol.f_small.eval(&x).coeff(0b11).re * h_th * h_ph;
            }
        }
        let area = 4.0 * std::f64::consts::PI * r * r;
        let expect = p.mu as f64 * p.lambda_i * area;
        assert!(
            (integral - expect).abs() < 1e-4 * expect.abs(),
            "flux {integral} vs μλ_I·Area = {expect}"
        );
        let chern = integral / std::f64::consts::TAU;
        let quantized = p.lambda_i * p.e * p.e * chern;
        assert!((quantized - 2.0 * p.mu as f64).abs() < 1e-4);
    }
}
