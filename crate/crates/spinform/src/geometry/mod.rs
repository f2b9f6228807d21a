//! Coordinate-chart pseudo-Riemannian calculus.
//!
//! A [`MetricChart`] carries the metric components as a closure, an optional
//! analytic first-derivative closure, the coordinate domain, and the
//! declared time coordinates. First derivatives fall back to fourth-order
//! central differences with step `fd_step`; outer derivatives of Christoffel
//! symbols (and second derivatives of scalar fields) use the larger step
//! `fd_step_curv`, which balances truncation against roundoff for second
//! derivatives.
//!
//! Metric operations on exterior forms (`⋄`, `∗`, `⟨,⟩`, `∨`) are evaluated
//! pointwise through an orthonormal coframe obtained by a deterministic
//! signature-aware eigenframe, with the timelike directions mapped to the
//! trailing slots of the algebra layer.

mod form;
pub mod residuals;

pub use form::{CoordForm, FormField, ScalarField};
pub use residuals::{
    EinsteinMaxwellResidual, ParallelSquareArgs, ParallelSquareReport, PointResidual,
    Sugra6dResidual,
    SymbolField, circ_product, covariant_derivative, covariant_derivative_vec,
    einstein_maxwell_residual, exterior_derivative, hessian_scalar, laplacian_scalar,
    nabla_star_one_form, nabla_star_two_form, parallel_square_residual, partial_form,
    sugra6d_residual,
};

use crate::algebra::{Multivector, Signature};
use crate::error::{Error, Result};
use nalgebra::DMatrix;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::rc::Rc;

pub type RMat = DMatrix<f64>;
pub type MetricFn = Rc<dyn Fn(&[f64]) -> RMat>;
pub type DMetricFn = Rc<dyn Fn(&[f64]) -> Vec<RMat>>;

/// Pointwise orthonormal coframe: `Θ^a = Θ[a][μ] dx^μ` with
/// `g = Θᵀ·diag(ε)·Θ` and `det Θ > 0`.
pub struct Frame {
    pub theta: RMat,
    pub theta_inv: RMat,
}

#[derive(Clone)]
pub struct MetricChart {
    pub name: String,
    dim: usize,
    sig: Signature,
    g: MetricFn,
    dg: Option<DMetricFn>,
    pub domain: Vec<(f64, f64)>,
    pub time_coords: Vec<usize>,
    pub fd_step: f64,
    pub fd_step_curv: f64,
}

/// Fourth-order central difference of a scalar function of one offset.
pub fn central_diff4(f: impl Fn(f64) -> f64, h: f64) -> f64 {
    (-f(2.0 * h) + 8.0 * f(h) - 8.0 * f(-h) + f(-2.0 * h)) / (12.0 * h)
}

/// Fourth-order central second derivative.
pub fn central_diff4_second(f: impl Fn(f64) -> f64, h: f64) -> f64 {
    (-f(2.0 * h) + 16.0 * f(h) - 30.0 * f(0.0) + 16.0 * f(-h) - f(-2.0 * h)) / (12.0 * h * h)
}

impl MetricChart {
    pub fn new(
        name: impl Into<String>,
        sig: Signature,
        domain: Vec<(f64, f64)>,
        time_coords: Vec<usize>,
        g: impl Fn(&[f64]) -> RMat + 'static,
    ) -> Result<Self> {
        let dim = sig.dim();
        if domain.len() != dim {
            return Err(Error::InvalidParameter("domain arity mismatch".into()));
        }
        let scale = domain
            .iter()
            .map(|(a, b)| (b - a).abs())
            .fold(f64::INFINITY, f64::min)
            .min(1.0);
        let chart = MetricChart {
            name: name.into(),
            dim,
            sig,
            g: Rc::new(g),
            dg: None,
            domain,
            time_coords,
            fd_step: 1e-4 * scale,
            fd_step_curv: 1.5e-3 * scale,
        };
        chart.validate_signature()?;
        Ok(chart)
    }

    pub fn with_analytic_derivatives(
        mut self,
        dg: impl Fn(&[f64]) -> Vec<RMat> + 'static,
    ) -> Self {
        self.dg = Some(Rc::new(dg));
        self
    }

    fn validate_signature(&self) -> Result<()> {
        let x: Vec<f64> = self.domain.iter().map(|(a, b)| 0.5 * (a + b)).collect();
        let g = self.metric(&x);
        let eig = g.symmetric_eigenvalues();
        let pos = eig.iter().filter(|v| **v > 0.0).count();
        let neg = eig.iter().filter(|v| **v < 0.0).count();
        if pos != self.sig.p as usize || neg != self.sig.q as usize {
            return Err(Error::SingularMetric);
        }
        // declared timelike coordinates must have negative diagonal entries
        for &t in &self.time_coords {
            if g[(t, t)] >= 0.0 {
                return Err(Error::SingularMetric);
            }
        }
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn sig(&self) -> Signature {
        self.sig
    }

    pub fn metric(&self, x: &[f64]) -> RMat {
        (self.g)(x)
    }

    pub fn metric_inv(&self, x: &[f64]) -> RMat {
        self.metric(x)
            .try_inverse()
            .expect("metric invertible on chart domain")
    }

    pub fn has_analytic_derivatives(&self) -> bool {
        self.dg.is_some()
    }

    /// `∂_μ g`, analytic when supplied, otherwise fourth-order FD.
    pub fn dmetric(&self, x: &[f64]) -> Vec<RMat> {
        match &self.dg {
            Some(dg) => dg(x),
            None => self.dmetric_fd(x),
        }
    }

    /// `∂_μ g` by finite differences regardless of analytic data.
    pub fn dmetric_fd(&self, x: &[f64]) -> Vec<RMat> {
        let h = self.fd_step;
        let mut out = Vec::with_capacity(self.dim);
        for mu in 0..self.dim {
            let eval = |dh: f64| {
                let mut y = x.to_vec();
                y[mu] += dh;
                self.metric(&y)
            };
            let mat = (eval(2.0 * h) * (-1.0) + eval(h) * 8.0 - eval(-h) * 8.0
                + eval(-2.0 * h))
                / (12.0 * h);
            out.push(mat);
        }
        out
    }

    /// Christoffel symbols `Γ^ρ_{μν}`, returned as `out[ρ][(μ,ν)]`.
    pub fn christoffel(&self, x: &[f64]) -> Vec<RMat> {
        let ginv = self.metric_inv(x);
        let dg = self.dmetric(x);
        let d = self.dim;
        let mut out = vec![RMat::zeros(d, d); d];
        for rho in 0..d {
            for mu in 0..d {
                for nu in mu..d {
                    let mut acc = 0.0;
                    for s in 0..d {
                        acc += ginv[(rho, s)]
                            * (dg[mu][(s, nu)] + dg[nu][(s, mu)] - dg[s][(mu, nu)]);
                    }
                    out[rho][(mu, nu)] = 0.5 * acc;
                    out[rho][(nu, mu)] = 0.5 * acc;
                }
            }
        }
        out
    }

    /// Second derivatives `∂_σ∂_μ g`, indexed `out[σ][μ]`. With analytic
    /// first derivatives this is one FD level; otherwise direct
    /// second-derivative stencils on the metric avoid the roundoff
    /// amplification of nested first differences.
    pub fn d2metric(&self, x: &[f64]) -> Vec<Vec<RMat>> {
        let d = self.dim;
        let h = self.fd_step_curv;
        let mut out = vec![vec![RMat::zeros(d, d); d]; d];
        match &self.dg {
            Some(dg) => {
                for sigma in 0..d {
                    let eval = |dh: f64| {
                        let mut y = x.to_vec();
                        y[sigma] += dh;
                        dg(&y)
                    };
                    let p2 = eval(2.0 * h);
                    let p1 = eval(h);
                    let m1 = eval(-h);
                    let m2 = eval(-2.0 * h);
                    for mu in 0..d {
                        out[sigma][mu] = (&p2[mu] * (-1.0) + &p1[mu] * 8.0 - &m1[mu] * 8.0
                            + &m2[mu])
                            / (12.0 * h);
                    }
                }
            }
            None => {
                for sigma in 0..d {
                    for mu in sigma..d {
                        let mat = if sigma == mu {
                            let eval = |dh: f64| {
                                let mut y = x.to_vec();
                                y[sigma] += dh;
                                self.metric(&y)
                            };
                            (eval(2.0 * h) * (-1.0) + eval(h) * 16.0 - self.metric(x) * 30.0
                                + eval(-h) * 16.0
                                - eval(-2.0 * h))
                                / (12.0 * h * h)
                        } else {
                            let eval = |du: f64, dv: f64| {
                                let mut y = x.to_vec();
                                y[sigma] += du;
                                y[mu] += dv;
                                self.metric(&y)
                            };
                            let row = |du: f64| {
                                (eval(du, 2.0 * h) * (-1.0) + eval(du, h) * 8.0
                                    - eval(du, -h) * 8.0
                                    + eval(du, -2.0 * h))
                                    / (12.0 * h)
                            };
                            (row(2.0 * h) * (-1.0) + row(h) * 8.0 - row(-h) * 8.0
                                + row(-2.0 * h))
                                / (12.0 * h)
                        };
                        out[sigma][mu] = mat.clone();
                        if sigma != mu {
                            out[mu][sigma] = mat;
                        }
                    }
                }
            }
        }
        out
    }

    /// `∂_σ Γ^ρ_{μν}` assembled algebraically from `∂g` and `∂²g`
    /// (`∂g⁻¹ = −g⁻¹(∂g)g⁻¹`), avoiding finite differences of Γ.
    pub fn dchristoffel(&self, x: &[f64]) -> Vec<Vec<RMat>> {
        let d = self.dim;
        let ginv = self.metric_inv(x);
        let dg = self.dmetric(x);
        let d2g = self.d2metric(x);
        let dginv: Vec<RMat> = (0..d).map(|s| -(&ginv * &dg[s] * &ginv)).collect();
        let mut out = vec![vec![RMat::zeros(d, d); d]; d];
        for sigma in 0..d {
            for rho in 0..d {
                for mu in 0..d {
                    for nu in 0..d {
                        let mut v = 0.0;
                        for t in 0..d {
                            v += dginv[sigma][(rho, t)]
                                * (dg[mu][(t, nu)] + dg[nu][(t, mu)] - dg[t][(mu, nu)]);
                            v += ginv[(rho, t)]
                                * (d2g[sigma][mu][(t, nu)] + d2g[sigma][nu][(t, mu)]
                                    - d2g[sigma][t][(mu, nu)]);
                        }
                        out[sigma][rho][(mu, nu)] = 0.5 * v;
                    }
                }
            }
        }
        out
    }

    /// Riemann tensor `R^ρ_{σμν}`, returned as `out[ρ][σ][(μ,ν)]`.
    pub fn riemann(&self, x: &[f64]) -> Vec<Vec<RMat>> {
        let d = self.dim;
        let gamma = self.christoffel(x);
        let dgamma = self.dchristoffel(x);
        let mut out = vec![vec![RMat::zeros(d, d); d]; d];
        for rho in 0..d {
            for s in 0..d {
                for mu in 0..d {
                    for nu in 0..d {
                        let mut v =
                            dgamma[mu][rho][(nu, s)] - dgamma[nu][rho][(mu, s)];
                        for lam in 0..d {
                            v += gamma[rho][(mu, lam)] * gamma[lam][(nu, s)]
                                - gamma[rho][(nu, lam)] * gamma[lam][(mu, s)];
                        }
                        out[rho][s][(mu, nu)] = v;
                    }
                }
            }
        }
        out
    }

    /// Ricci tensor `Ric_{σν} = R^μ_{σμν}`.
    pub fn ricci(&self, x: &[f64]) -> RMat {
        let d = self.dim;
        let r = self.riemann(x);
        let mut out = RMat::zeros(d, d);
        for s in 0..d {
            for nu in 0..d {
                let mut v = 0.0;
                for mu in 0..d {
                    v += r[mu][s][(mu, nu)];
                }
                out[(s, nu)] = v;
            }
        }
        out
    }

    pub fn scalar_curvature(&self, x: &[f64]) -> f64 {
        let ric = self.ricci(x);
        let ginv = self.metric_inv(x);
        (ginv * ric).trace()
    }

    /// `√|det g|` at `x`.
    pub fn volume_density(&self, x: &[f64]) -> f64 {
        self.metric(x).determinant().abs().sqrt()
    }

    /// Deterministic signature-aware orthonormal coframe with positive
    /// determinant; eigenvalues sorted descending map timelike directions to
    /// the trailing algebra slots.
    pub fn coframe(&self, x: &[f64]) -> Result<Frame> {
        let d = self.dim;
        let g = self.metric(x);
        let se = g.symmetric_eigen();
        let mut order: Vec<usize> = (0..d).collect();
        order.sort_by(|&a, &b| {
            se.eigenvalues[b]
                .partial_cmp(&se.eigenvalues[a])
                .unwrap()
        });
        let pos = se.eigenvalues.iter().filter(|v| **v > 0.0).count();
        let neg = se.eigenvalues.iter().filter(|v| **v < 0.0).count();
        if pos != self.sig.p as usize || neg != self.sig.q as usize {
            return Err(Error::SingularMetric);
        }
        let mut theta = RMat::zeros(d, d);
        for (a, &k) in order.iter().enumerate() {
            let scale = se.eigenvalues[k].abs().sqrt();
            for mu in 0..d {
                theta[(a, mu)] = scale * se.eigenvectors[(mu, k)];
            }
        }
        if theta.determinant() < 0.0 {
            for mu in 0..d {
                theta[(0, mu)] = -theta[(0, mu)];
            }
        }
        let theta_inv = theta
            .clone()
            .try_inverse()
            .ok_or(Error::SingularMetric)?;
        Ok(Frame { theta, theta_inv })
    }

    /// Push a coordinate-component form to orthonormal-frame components.
    pub fn to_ortho(&self, x: &[f64], a: &CoordForm) -> Result<Multivector> {
        let frame = self.coframe(x)?;
        // dx^μ = Σ_a Θ⁻¹[μ][a] Θ^a
        let coeffs = form::blade_transform(&frame.theta_inv, a.coeffs(), self.dim);
        Multivector::from_coeffs(self.sig, coeffs)
    }

    /// Pull orthonormal-frame components back to coordinate components.
    pub fn from_ortho(&self, x: &[f64], a: &Multivector) -> Result<CoordForm> {
        let frame = self.coframe(x)?;
        let coeffs = form::blade_transform(&frame.theta, a.coeffs(), self.dim);
        Ok(CoordForm::from_coeffs(self.dim, coeffs))
    }

    /// Chart-level geometric product `⋄` at a point.
    pub fn diamond_at(&self, x: &[f64], a: &CoordForm, b: &CoordForm) -> Result<CoordForm> {
        let ao = self.to_ortho(x, a)?;
        let bo = self.to_ortho(x, b)?;
        self.from_ortho(x, &ao.geometric_product(&bo)?)
    }

    /// Chart-level truncated product `∨` at a point (odd `d`).
    pub fn vee_at(&self, x: &[f64], a: &CoordForm, b: &CoordForm, ell: i8) -> Result<CoordForm> {
        use crate::algebra::TruncatedMultivector;
        let ao = TruncatedMultivector::new(self.to_ortho(x, a)?, ell)?;
        let bo = TruncatedMultivector::new(self.to_ortho(x, b)?, ell)?;
        self.from_ortho(x, ao.vee(&bo)?.as_multivector())
    }

    /// Chart-metric Hodge star at a point, oriented by
    /// `ν_g = √|det g| dx^1∧…∧dx^d`. Computed from inverse-metric minors,
    /// which stays smooth across eigenvalue crossings of `g`.
    pub fn hodge_at(&self, x: &[f64], a: &CoordForm) -> Result<CoordForm> {
        let ginv = self.metric_inv(x);
        Ok(form::hodge_direct(&ginv, self.volume_density(x), a))
    }

    /// Chart-metric pairing `⟨a,b⟩_g` at a point.
    pub fn pairing_at(
        &self,
        x: &[f64],
        a: &CoordForm,
        b: &CoordForm,
    ) -> Result<num_complex::Complex64> {
        Ok(form::pairing_direct(&self.metric_inv(x), a, b))
    }

    /// Metric interior product `ι_{θ♯_g}` of a one-form against a form.
    pub fn interior_sharp_at(&self, x: &[f64], theta: &CoordForm, b: &CoordForm) -> Result<CoordForm> {
        let ginv = self.metric_inv(x);
        let mut out = CoordForm::zero(self.dim);
        for mu in 0..self.dim {
            let mut comp = num_complex::Complex64::new(0.0, 0.0);
            for nu in 0..self.dim {
                comp += theta.coeff(1 << nu) * ginv[(mu, nu)];
            }
            if comp.norm_sqr() > 0.0 {
                out = out.add(&b.interior_basis(mu).scale(comp));
            }
        }
        Ok(out)
    }

    /// Coordinate components of the metric volume form.
    pub fn volume_at(&self, x: &[f64]) -> CoordForm {
        let mut out = CoordForm::zero(self.dim);
        out.set_coeff(
            (1 << self.dim) - 1,
            num_complex::Complex64::new(self.volume_density(x), 0.0),
        );
        out
    }

    /// Seeded interior sample points, excluding a boundary margin of five
    /// curvature FD steps.
    pub fn sample_points(&self, n: usize, seed: u64) -> Vec<Vec<f64>> {
        let margin = 5.0 * self.fd_step_curv;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        (0..n)
            .map(|_| {
                self.domain
                    .iter()
                    .map(|(a, b)| rng.gen_range((a + margin)..(b - margin)))
                    .collect()
            })
            .collect()
    }
}

/// Flat chart in signature `(p,q)` with the mostly-plus layout: the declared
/// time coordinates carry `−1`.
pub fn flat_chart(sig: Signature, time_coords: Vec<usize>, extent: f64) -> Result<MetricChart> {
    let d = sig.dim();
    let tc = time_coords.clone();
    let chart = MetricChart::new(
        format!("flat({},{})", sig.p, sig.q),
        sig,
        vec![(-extent, extent); d],
        time_coords,
        move |_x| {
            let mut g = RMat::identity(d, d);
            for &t in &tc {
                g[(t, t)] = -1.0;
            }
            g
        },
    )?;
    Ok(chart.with_analytic_derivatives(move |_x| vec![RMat::zeros(d, d); d]))
}

/// Round two-sphere of radius `r` in polar coordinates `(θ, φ)`.
pub fn sphere_chart(radius: f64) -> Result<MetricChart> {
    let r2 = radius * radius;
    let chart = MetricChart::new(
        "sphere2",
        Signature::new(2, 0)?,
        vec![(0.4, std::f64::consts::PI - 0.4), (0.3, std::f64::consts::TAU - 0.3)],
        vec![],
        move |x| {
            let mut g = RMat::zeros(2, 2);
            g[(0, 0)] = r2;
            g[(1, 1)] = r2 * x[0].sin().powi(2);
            g
        },
    )?;
    Ok(chart.with_analytic_derivatives(move |x| {
        let mut d0 = RMat::zeros(2, 2);
        d0[(1, 1)] = r2 * 2.0 * x[0].sin() * x[0].cos();
        vec![d0, RMat::zeros(2, 2)]
    }))
}
