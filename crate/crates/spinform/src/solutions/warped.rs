//! Warped-product charts carrying Killing-spinor square data.
//!
//! Each case returns the metric together with the square components pinned by
//! the corresponding first-order system. For the cases where the system
//! determines every component in closed form, the full square field is
//! assembled and `first_order_complete` is set; the remaining cases carry the
//! determined scalar/one-form profiles for the Hessian and sub-system checks.
//!
//! Conventions: `λ` is the Killing number (`λ_R` real cases, `iλ_I` imaginary
//! cases); the warp profiles are `e^{−2λ_I t}`, `sin(2λ_R t)`, `sinh(2λ_I t)`.

use crate::algebra::{C64, Signature};
use crate::error::{Error, Result};
use crate::geometry::{CoordForm, FormField, MetricChart, RMat, ScalarField};

fn cx(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WarpedCase {
    /// Round two-sphere of radius `1/(2λ_R)`.
    Real2d,
    /// `dt² + e^{−4λ_I t}·(flat 1d)`.
    Imag2d,
    /// `dt² + e^{−4λ_I t}·(flat 2d)`, truncated-algebra square.
    Imag3d,
    /// `dt² + sin²(2λ_R t)·g_N` (round four-sphere for `g_N = g_{S³}/4λ²`).
    Real4d,
    /// `dt² + e^{−4λ_I t}·(flat 3d)`, vanishing top charge `q_η = 0`.
    Imag4dQ0,
    /// `dt² + sinh²(2λ_I t)·g_{S³}/4λ²` (hyperbolic four-space).
    Imag4dQPos,
}

pub struct WarpedSolution {
    pub case: WarpedCase,
    pub chart: MetricChart,
    /// Killing number as a complex scalar.
    pub lambda: C64,
    pub ell: Option<i8>,
    /// Full Hermitian-square field when the case determines it.
    pub alpha: Option<FormField>,
    pub first_order_complete: bool,
    pub r: ScalarField,
    pub f: ScalarField,
    pub theta: FormField,
    pub vartheta: Option<FormField>,
    pub omega: Option<FormField>,
}

/// Round unit three-sphere in polar angles `(χ, θ, φ)`.
fn s3_metric(x: &[f64]) -> RMat {
    let (chi, th) = (x[0], x[1]);
    let mut g = RMat::zeros(3, 3);
    g[(0, 0)] = 1.0;
    g[(1, 1)] = chi.sin().powi(2);
    g[(2, 2)] = chi.sin().powi(2) * th.sin().powi(2);
    g
}

fn s3_domain() -> Vec<(f64, f64)> {
    vec![
        (0.5, std::f64::consts::PI - 0.5),
        (0.5, std::f64::consts::PI - 0.5),
        (0.3, std::f64::consts::TAU - 0.3),
    ]
}

pub fn killing_warped_chart(case: WarpedCase, lambda: f64, ell: i8) -> Result<WarpedSolution> {
    if lambda == 0.0 {
        return Err(Error::InvalidParameter("Killing number must be non-zero".into()));
    }
    let l = lambda;
    match case {
        WarpedCase::Real2d => {
            // sphere radius a = 1/(2λ): g = dt² + a²sin²(t/a)dφ²,
            // r = 1, f = cos(t/a), θ = −a sin²(t/a)dφ
            let a = 1.0 / (2.0 * l);
            if a <= 0.0 {
                return Err(Error::InvalidParameter("Real2d needs λ_R > 0".into()));
            }
            let chart = MetricChart::new(
                "killing-real2d",
                Signature::new(2, 0)?,
                vec![(0.4 * a, (std::f64::consts::PI - 0.4) * a), (0.3, 5.0)],
                vec![],
                move |x| {
                    let mut g = RMat::zeros(2, 2);
                    g[(0, 0)] = 1.0;
                    g[(1, 1)] = (a * (x[0] / a).sin()).powi(2);
                    g
                },
            )?;
            let r = ScalarField::constant(1.0);
            let f = ScalarField::new(move |x| (x[0] / a).cos());
            let theta = FormField::new(2, move |x| {
                CoordForm::one_form(&[0.0, -a * (x[0] / a).sin().powi(2)])
            });
            let chart_c = chart.clone();
            let (fc, tc) = (f.clone(), theta.clone());
            let alpha = FormField::new(2, move |x| {
                let nu = chart_c.volume_at(x);
                CoordForm::scalar(2, cx(1.0, 0.0))
                    .add(&tc.eval(x))
                    .add(&nu.scale(cx(0.0, fc.eval(x))))
            });
            Ok(WarpedSolution {
                case,
                chart,
                lambda: cx(l, 0.0),
                ell: None,
                alpha: Some(alpha),
                first_order_complete: true,
                r,
                f,
                theta,
                vartheta: None,
                omega: None,
            })
        }
        WarpedCase::Imag2d | WarpedCase::Imag3d | WarpedCase::Imag4dQ0 => {
            let (d, name) = match case {
                WarpedCase::Imag2d => (2usize, "killing-imag2d"),
                WarpedCase::Imag3d => (3, "killing-imag3d"),
                _ => (4, "killing-imag4d-q0"),
            };
            let mut domain = vec![(-0.6, 0.6)];
            domain.extend(vec![(-1.0, 1.0); d - 1]);
            let chart = MetricChart::new(
                name,
                Signature::new(d as u8, 0)?,
                domain,
                vec![],
                move |x| {
                    let w = (-4.0 * l * x[0]).exp();
                    let mut g = RMat::identity(d, d);
                    for i in 1..d {
                        g[(i, i)] = w;
                    }
                    g
                },
            )?;
            let r = ScalarField::new(move |x| (-2.0 * l * x[0]).exp());
            let f = ScalarField::constant(0.0);
            let rc = r.clone();
            let theta = FormField::new(d, move |x| {
                let mut comps = vec![0.0; d];
                comps[0] = rc.eval(x);
                CoordForm::one_form(&comps)
            });
            let (alpha, vartheta, omega, complete, ell_out) = match case {
                WarpedCase::Imag2d => {
                    // α̂ = r + θ (+ i·0·ν)
                    let (rc, tc) = (r.clone(), theta.clone());
                    let alpha = FormField::new(2, move |x| {
                        CoordForm::scalar(2, cx(rc.eval(x), 0.0)).add(&tc.eval(x))
                    });
                    (Some(alpha), None, None, true, None)
                }
                WarpedCase::Imag3d => {
                    let (rc, tc) = (r.clone(), theta.clone());
                    let alpha = FormField::new(3, move |x| {
                        CoordForm::scalar(3, cx(rc.eval(x), 0.0)).add(&tc.eval(x))
                    });
                    (Some(alpha), None, None, true, Some(ell))
                }
                _ => {
                    // ϑ = e^{−4λt}dx, ω = −e^{−6λt}dy∧dz,
                    // α̂ = r + θ + iω + i∗ϑ with f = 0
                    let vartheta = FormField::new(4, move |x| {
                        CoordForm::one_form(&[0.0, (-4.0 * l * x[0]).exp(), 0.0, 0.0])
                    });
                    let omega = FormField::new(4, move |x| {
                        let mut w = CoordForm::zero(4);
                        w.set_coeff(0b1100, cx(-(-6.0 * l * x[0]).exp(), 0.0));
                        w
                    });
                    let chart_c = chart.clone();
                    let (rc, tc) = (r.clone(), theta.clone());
                    let (vc, oc) = (vartheta.clone(), omega.clone());
                    let alpha = FormField::new(4, move |x| {
                        let star_vt = chart_c.hodge_at(x, &vc.eval(x)).unwrap();
                        CoordForm::scalar(4, cx(rc.eval(x), 0.0))
                            .add(&tc.eval(x))
                            .add(&oc.eval(x).scale(cx(0.0, 1.0)))
                            .add(&star_vt.scale(cx(0.0, 1.0)))
                    });
                    (Some(alpha), Some(vartheta), Some(omega), true, None)
                }
            };
            Ok(WarpedSolution {
                case,
                chart,
                lambda: cx(0.0, l),
                ell: ell_out,
                alpha,
                first_order_complete: complete,
                r,
                f,
                theta,
                vartheta,
                omega,
            })
        }
        WarpedCase::Real4d => {
            // g = dt² + sin²(2λt)·g_{S³}/(4λ²): the round four-sphere;
            // f = cos(2λt) and ϑ = sin(2λt)dt are pinned, r ≡ 1
            let warp_bound = std::f64::consts::PI / (2.0 * l.abs());
            let mut domain = vec![(0.15 * warp_bound, 0.85 * warp_bound)];
            domain.extend(s3_domain());
            let chart = MetricChart::new(
                "killing-real4d",
                Signature::new(4, 0)?,
                domain,
                vec![],
                move |x| {
                    let w = (2.0 * l * x[0]).sin().powi(2) / (4.0 * l * l);
                    let s3 = s3_metric(&x[1..]);
                    let mut g = RMat::identity(4, 4);
                    for i in 0..3 {
                        for j in 0..3 {
                            g[(1 + i, 1 + j)] = w * s3[(i, j)];
                        }
                    }
                    g
                },
            )?;
            let r = ScalarField::constant(1.0);
            let f = ScalarField::new(move |x| (2.0 * l * x[0]).cos());
            let vartheta = FormField::new(4, move |x| {
                CoordForm::one_form(&[(2.0 * l * x[0]).sin(), 0.0, 0.0, 0.0])
            });
            // θ is gauge data not pinned by the warp profile alone
            let theta = FormField::new(4, |_| CoordForm::zero(4));
            Ok(WarpedSolution {
                case,
                chart,
                lambda: cx(l, 0.0),
                ell: None,
                alpha: None,
                first_order_complete: false,
                r,
                f,
                theta,
                vartheta: Some(vartheta),
                omega: None,
            })
        }
        WarpedCase::Imag4dQPos => {
            // g = dt² + sinh²(2λt)·g_{S³}/(4λ²): hyperbolic four-space;
            // r = cosh(2λt) and θ = −sinh(2λt)dt are pinned, f ≡ 1
            let mut domain = vec![(0.2, 1.0)];
            domain.extend(s3_domain());
            let chart = MetricChart::new(
                "killing-imag4d-qpos",
                Signature::new(4, 0)?,
                domain,
                vec![],
                move |x| {
                    let w = (2.0 * l * x[0]).sinh().powi(2) / (4.0 * l * l);
                    let s3 = s3_metric(&x[1..]);
                    let mut g = RMat::identity(4, 4);
                    for i in 0..3 {
                        for j in 0..3 {
                            g[(1 + i, 1 + j)] = w * s3[(i, j)];
                        }
                    }
                    g
                },
            )?;
            let r = ScalarField::new(move |x| (2.0 * l * x[0]).cosh());
            let f = ScalarField::constant(1.0);
            let theta = FormField::new(4, move |x| {
                CoordForm::one_form(&[-(2.0 * l * x[0]).sinh(), 0.0, 0.0, 0.0])
            });
            Ok(WarpedSolution {
                case,
                chart,
                lambda: cx(0.0, l),
                ell: None,
                alpha: None,
                first_order_complete: false,
                r,
                f,
                theta,
                vartheta: None,
                omega: None,
            })
        }
    }
}
