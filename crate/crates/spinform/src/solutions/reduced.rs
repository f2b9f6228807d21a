//! Wave-front reduction of the six-dimensional system: the string-frame and
//! Einstein-frame residual evaluators, the conformal transfer between them,
//! the fully decoupled reduced system, and the component-level self-duality
//! conditions for reducible curvings.

use crate::algebra::C64;
use crate::error::Result;
use crate::geometry::{
    CoordForm, FormField, MetricChart, ScalarField, central_diff4, exterior_derivative,
    hessian_scalar, laplacian_scalar,
};
use crate::geometry::residuals::circ_product;
use std::rc::Rc;

fn cx(re: f64) -> C64 {
    C64::new(re, 0.0)
}

fn gradient(field: &ScalarField, chart: &MetricChart, x: &[f64]) -> Vec<f64> {
    (0..chart.dim())
        .map(|mu| {
            central_diff4(
                |dh| {
                    let mut y = x.to_vec();
                    y[mu] += dh;
                    field.eval(&y)
                },
                chart.fd_step,
            )
        })
        .collect()
}

fn pair_vec(hinv: &crate::geometry::RMat, a: &[f64], b: &[f64]) -> f64 {
    let mut acc = 0.0;
    for i in 0..a.len() {
        for j in 0..b.len() {
            acc += hinv[(i, j)] * a[i] * b[j];
        }
    }
    acc
}

/// String-frame wave-front data `(h, ℋ, ℱ, H_b)` on the four-manifold `N`.
#[derive(Clone)]
pub struct TransverseData {
    pub h: MetricChart,
    pub hcal: ScalarField,
    pub fcal: ScalarField,
    pub hb: FormField,
}

/// Einstein-frame data `(𝔥 = e^ℱh, H̄ = ℋe^{−ℱ}, ℱ, H_b)`.
#[derive(Clone)]
pub struct EinsteinFrameData {
    pub frak: MetricChart,
    pub hbar: ScalarField,
    pub fcal: ScalarField,
    pub hb: FormField,
}

impl TransverseData {
    /// Conformal transfer to the Einstein frame.
    pub fn to_einstein_frame(&self) -> Result<EinsteinFrameData> {
        let h = self.h.clone();
        let f = self.fcal.clone();
        let frak = MetricChart::new(
            format!("{}-einstein", h.name),
            h.sig(),
            h.domain.clone(),
            h.time_coords.clone(),
            move |x| h.metric(x) * f.eval(x).exp(),
        )?;
        let (hc, fc) = (self.hcal.clone(), self.fcal.clone());
        let hbar = ScalarField::new(move |x| hc.eval(x) * (-fc.eval(x)).exp());
        Ok(EinsteinFrameData {
            frak,
            hbar,
            fcal: self.fcal.clone(),
            hb: self.hb.clone(),
        })
    }
}

impl EinsteinFrameData {
    /// Conformal transfer back to the string frame.
    pub fn to_string_frame(&self) -> Result<TransverseData> {
        let frak = self.frak.clone();
        let f = self.fcal.clone();
        let h = MetricChart::new(
            format!("{}-string", frak.name),
            frak.sig(),
            frak.domain.clone(),
            frak.time_coords.clone(),
            move |x| frak.metric(x) * (-f.eval(x)).exp(),
        )?;
        let (hb, fc) = (self.hbar.clone(), self.fcal.clone());
        let hcal = ScalarField::new(move |x| hb.eval(x) * fc.eval(x).exp());
        Ok(TransverseData { h, hcal, fcal: self.fcal.clone(), hb: self.hb.clone() })
    }
}

/// Residuals of the string-frame wave-front system (vanishing derived
/// two-forms):
/// `∇^{h∗}dℋ + ⟨dℋ,dℱ⟩ − ℋ|dℱ|² + ℋ|H_b|² = 0`,
/// `∇^{h∗}dℱ − |dℱ|² + |H_b|² = 0`,
/// `Ric^h − ∇^hdℱ − ½dℱ⊗dℱ = ½(2H_b∘H_b − h|H_b|²)`,
/// `d(e^ℱ ∗_h H_b) = 0`.
#[derive(Debug, Clone)]
pub struct WavefrontResidual {
    pub profile: f64,
    pub dilaton: f64,
    pub einstein: f64,
    pub maxwell: f64,
}

impl WavefrontResidual {
    pub fn max(&self) -> f64 {
        self.profile.max(self.dilaton).max(self.einstein).max(self.maxwell)
    }

    pub fn pass(&self, tol: f64) -> bool {
        self.max() <= tol
    }
}

pub fn wavefront_residual_string(data: &TransverseData, x: &[f64]) -> Result<WavefrontResidual> {
    let chart = &data.h;
    let hinv = chart.metric_inv(x);
    let df = gradient(&data.fcal, chart, x);
    let dh = gradient(&data.hcal, chart, x);
    let df2 = pair_vec(&hinv, &df, &df);
    let hb = data.hb.eval(x);
    let hb2 = chart.pairing_at(x, &hb, &hb)?.re;
    let hval = data.hcal.eval(x);
    let profile = laplacian_scalar(&data.hcal, chart, x) + pair_vec(&hinv, &dh, &df)
        - hval * df2
        + hval * hb2;
    let dilaton = laplacian_scalar(&data.fcal, chart, x) - df2 + hb2;
    let ric = chart.ricci(x);
    let hess_f = hessian_scalar(&data.fcal, chart, x);
    let hh = circ_product(chart, x, &hb, &hb)?;
    let h_mat = chart.metric(x);
    let d = chart.dim();
    let mut einstein: f64 = 0.0;
    for i in 0..d {
        for j in 0..d {
            let lhs = ric[(i, j)] - hess_f[(i, j)] - 0.5 * df[i] * df[j];
            let rhs = 0.5 * (2.0 * hh[(i, j)] - h_mat[(i, j)] * hb2);
            einstein = einstein.max((lhs - rhs).abs());
        }
    }
    let chart_c = chart.clone();
    let (hbf, fc) = (data.hb.clone(), data.fcal.clone());
    let flux = FormField::new(d, move |y| {
        chart_c
            .hodge_at(y, &hbf.eval(y))
            .unwrap()
            .scale(cx(fc.eval(y).exp()))
    });
    let maxwell = exterior_derivative(&flux, chart, x).norm_inf();
    Ok(WavefrontResidual { profile, dilaton, einstein, maxwell })
}

/// Residuals of the Einstein-frame system:
/// `∇^{𝔥∗}dℋ + 2⟨dℋ,dℱ⟩ − ℋ|dℱ|² + ℋe^{2ℱ}|H_b|² = 0` (with `ℋ = H̄e^ℱ`),
/// `∇^{𝔥∗}dℱ + e^{2ℱ}|H_b|² = 0`,
/// `Ric^𝔥 = dℱ⊗dℱ + e^{2ℱ}(H_b∘H_b − |H_b|²𝔥)`,
/// `d(e^{2ℱ} ∗_𝔥 H_b) = 0`.
pub fn wavefront_residual_einstein(
    data: &EinsteinFrameData,
    x: &[f64],
) -> Result<WavefrontResidual> {
    let chart = &data.frak;
    let hinv = chart.metric_inv(x);
    let df = gradient(&data.fcal, chart, x);
    let df2 = pair_vec(&hinv, &df, &df);
    let hb = data.hb.eval(x);
    let hb2 = chart.pairing_at(x, &hb, &hb)?.re;
    let e2f = (2.0 * data.fcal.eval(x)).exp();
    // ℋ = H̄ e^ℱ in this frame
    let (hbar_f, fcal_f) = (data.hbar.clone(), data.fcal.clone());
    let hcal = ScalarField::new(move |y| hbar_f.eval(y) * fcal_f.eval(y).exp());
    let dh = gradient(&hcal, chart, x);
    let hval = hcal.eval(x);
    let profile = laplacian_scalar(&hcal, chart, x) + 2.0 * pair_vec(&hinv, &dh, &df)
        - hval * df2
        + hval * e2f * hb2;
    let dilaton = laplacian_scalar(&data.fcal, chart, x) + e2f * hb2;
    let ric = chart.ricci(x);
    let hh = circ_product(chart, x, &hb, &hb)?;
    let frak_mat = chart.metric(x);
    let d = chart.dim();
    let mut einstein: f64 = 0.0;
    for i in 0..d {
        for j in 0..d {
            let rhs = df[i] * df[j] + e2f * (hh[(i, j)] - frak_mat[(i, j)] * hb2);
            einstein = einstein.max((ric[(i, j)] - rhs).abs());
        }
    }
    let chart_c = chart.clone();
    let (hbf, fc) = (data.hb.clone(), data.fcal.clone());
    let flux = FormField::new(d, move |y| {
        chart_c
            .hodge_at(y, &hbf.eval(y))
            .unwrap()
            .scale(cx((2.0 * fc.eval(y)).exp()))
    });
    let maxwell = exterior_derivative(&flux, chart, x).norm_inf();
    Ok(WavefrontResidual { profile, dilaton, einstein, maxwell })
}

/// Residuals of the fully decoupled reduced system plus the derived scalar
/// identity on the string frame and the quasi-supersymmetry duality.
#[derive(Debug, Clone)]
pub struct ReducedResidual {
    /// `Ric^𝔥 − dℱ⊗dℱ − e^{2ℱ}(H_b∘H_b − |H_b|²𝔥)`.
    pub einstein: f64,
    /// `∇^{𝔥∗}dℱ + e^{2ℱ}|H_b|²`.
    pub dilaton: f64,
    /// `d(e^{2ℱ}∗_𝔥H_b)`.
    pub maxwell: f64,
    /// `∇^{𝔥∗}dH̄`.
    pub harmonic: f64,
    /// `s_h − 2|H_b|²_h + ½|dℱ|²_h` on the string frame.
    pub scalar_identity: f64,
    /// `∗_𝔥H_b + μe^{−ℱ}dℱ` (vanishes exactly for adapted
    /// quasi-supersymmetric data).
    pub duality: f64,
}

impl ReducedResidual {
    pub fn max_system(&self) -> f64 {
        self.einstein
            .max(self.dilaton)
            .max(self.maxwell)
            .max(self.harmonic)
            .max(self.scalar_identity)
    }
}

pub fn reduced_system_residual(
    data: &EinsteinFrameData,
    x: &[f64],
    mu: i8,
) -> Result<ReducedResidual> {
    let base = wavefront_residual_einstein(data, x)?;
    let chart = &data.frak;
    let harmonic = laplacian_scalar(&data.hbar, chart, x).abs();
    // string-frame scalar identity
    let string = data.to_string_frame()?;
    let s_h = string.h.scalar_curvature(x);
    let hb = data.hb.eval(x);
    let hb2_h = string.h.pairing_at(x, &hb, &hb)?.re;
    let df = gradient(&data.fcal, &string.h, x);
    let hinv = string.h.metric_inv(x);
    let scalar_identity = (s_h - 2.0 * hb2_h + 0.5 * pair_vec(&hinv, &df, &df)).abs();
    // duality residual on the Einstein frame
    let star_hb = chart.hodge_at(x, &hb)?;
    let emf = (-data.fcal.eval(x)).exp();
    let df_e = gradient(&data.fcal, chart, x);
    let mut dual = star_hb;
    for i in 0..chart.dim() {
        let old = dual.coeff(1 << i);
        dual.set_coeff(1 << i, old + cx(mu as f64 * emf * df_e[i]));
    }
    Ok(ReducedResidual {
        einstein: base.einstein,
        dilaton: base.dilaton,
        maxwell: base.maxwell,
        harmonic,
        scalar_identity,
        duality: dual.norm_inf(),
    })
}

/// The `λ < 0` warped family assembled into Einstein-frame wave-front data
/// and the full six-dimensional background
/// `g = H̄e^ℱ d𝔲⊗d𝔲 + e^ℱ d𝔲⊙d𝔳 + e^{−ℱ}𝔥` with
/// `𝔥 = e^{K(r)}(dr² + h_X)` over hyperbolic three-space of curvature `λ`.
pub struct RadialFamily {
    pub einstein: EinsteinFrameData,
    pub chart6: MetricChart,
    pub h6: FormField,
    pub mu: i8,
    pub m1: f64,
    pub m2: f64,
}

pub fn radial_family_data(
    p: &super::radial::RadialParams,
    rho_star: f64,
    m1: f64,
    m2: f64,
) -> Result<RadialFamily> {
    use crate::algebra::Signature;
    use crate::geometry::RMat;
    let cf = super::radial::radial_closed_form(p, rho_star)?;
    let abs_l = p.lambda.abs();
    // Einstein three-space with Ric = λ·h_X, i.e. sectional curvature λ/2:
    // upper half-space model scaled accordingly
    let hx = move |z: f64| 2.0 / (abs_l * z * z);
    let r_max = 0.75 * std::f64::consts::FRAC_PI_2 / cf.freq;
    let domain4 = vec![(0.1, r_max), (-1.0, 1.0), (-1.0, 1.0), (0.6, 1.8)];
    let (c, freq) = (p.c, cf.freq);
    let frak = MetricChart::new(
        "radial-einstein4",
        Signature::new(4, 0)?,
        domain4.clone(),
        vec![],
        move |x| {
            let ek = c * (freq * x[0]).cos();
            let w = hx(x[3]);
            let mut g = RMat::zeros(4, 4);
            g[(0, 0)] = ek;
            g[(1, 1)] = ek * w;
            g[(2, 2)] = ek * w;
            g[(3, 3)] = ek * w;
            g
        },
    )?;
    let e_cf = cf.energy;
    let (e_chg, rstar) = (p.e, rho_star);
    let rho_fn = move |r: f64| {
        let kr = freq * r;
        ((1.0 / kr.cos()) + kr.tan()).abs().ln() / (c * freq)
    };
    let fcal = ScalarField::new(move |x| {
        let se = e_cf.sqrt();
        -((e_chg / se) * (se * (rho_fn(x[0]) - rstar)).sinh()).ln()
    });
    let hbar = ScalarField::new(move |x| m1 * rho_fn(x[0]) + m2);
    // H_b = 𝔢 ν_{h_X} with ν_{h_X} = (2/|λ|)^{3/2} z^{−3} dx∧dy∧dz
    let vol_scale = (2.0 / abs_l).powf(1.5);
    let hb = FormField::new(4, move |x| {
        let mut f = CoordForm::zero(4);
        f.set_coeff(0b1110, cx(e_chg * vol_scale / x[3].powi(3)));
        f
    });
    let einstein = EinsteinFrameData { frak: frak.clone(), hbar, fcal, hb };

    // duality sign from the transverse orientation: ∗_𝔥H_b = ∓𝔢e^{−K}dr
    let probe = [0.5 * r_max, 0.0, 0.0, 1.0];
    let star_hb = frak.hodge_at(&probe, &einstein.hb.eval(&probe))?;
    let expect = e_chg * (-cf.k(probe[0])).exp();
    let mu: i8 = if (star_hb.coeff(0b0001).re - expect).abs() < 1e-8 {
        1
    } else {
        -1
    };

    // six-dimensional background
    let (fc, hc) = (einstein.fcal.clone(), einstein.hbar.clone());
    let frak_c = frak.clone();
    let mut domain6 = vec![(-1.0, 1.0), (-1.0, 1.0)];
    domain6.extend(domain4);
    let chart6 = MetricChart::new(
        "radial-6d",
        Signature::new(5, 1)?,
        domain6,
        vec![],
        move |x| {
            let xn = &x[2..];
            let ef = fc.eval(xn).exp();
            let mut g = RMat::zeros(6, 6);
            g[(0, 0)] = hc.eval(xn) * ef;
            g[(0, 1)] = ef;
            g[(1, 0)] = ef;
            let frak_m = frak_c.metric(xn);
            for i in 0..4 {
                for j in 0..4 {
                    g[(2 + i, 2 + j)] = frak_m[(i, j)] / ef;
                }
            }
            g
        },
    )?;
    let (hbf, fc2) = (einstein.hb.clone(), einstein.fcal.clone());
    let frak_c2 = frak.clone();
    let h6 = FormField::new(6, move |x| {
        let xn = &x[2..];
        let mut out = CoordForm::zero(6);
        let hb_x = hbf.eval(xn);
        for mask in 0..16usize {
            let cc = hb_x.coeff(mask);
            if cc.norm_sqr() > 0.0 {
                out.set_coeff(mask << 2, cc);
            }
        }
        // μ e^{2ℱ} d𝔲∧d𝔳∧∗_𝔥H_b
        let star = frak_c2.hodge_at(xn, &hb_x).unwrap();
        let e2f = (2.0 * fc2.eval(xn)).exp();
        for i in 0..4 {
            let cc = star.coeff(1 << i);
            if cc.norm_sqr() > 0.0 {
                out.set_coeff(0b11 | (1 << (i + 2)), cc * cx(mu as f64 * e2f));
            }
        }
        out
    });

    Ok(RadialFamily { einstein, chart6, h6, mu, m1, m2 })
}

/// Component data of a curving on a reducible gerbe over a standard Kundt
/// chart: wave-front metric, profiles, twist, and the derived families.
/// `alpha_u` is the `𝔲`-family of derived one-forms.
pub struct GerbeComponents {
    pub transverse: MetricChart,
    pub hcal: ScalarField,
    pub fcal: ScalarField,
    /// Twist one-form `𝒜` (non-twisting when zero).
    pub acal: FormField,
    /// Derived family of functions `f_𝔲` (stationary here).
    pub f_u: ScalarField,
    /// Derived family of one-forms `α_𝔲`.
    pub alpha_u: Rc<dyn Fn(f64, &[f64]) -> CoordForm>,
    /// Derived family of two-forms `Θ_𝔲`.
    pub theta_u: FormField,
    /// Curving curvature `H_{b_𝔲}` on the wave front (stationary).
    pub hb: FormField,
}

/// Residuals of the component-level self-duality conditions and of the direct
/// six-dimensional check on the assembled field.
#[derive(Debug, Clone)]
pub struct GerbeCheck {
    /// `∗_h(e^ℱH_b + 𝒜∧dα) − μ(∂_𝔲α + df)`.
    pub selfdual_flux: f64,
    /// `∗_h dα − μ dα`.
    pub selfdual_twist: f64,
    /// anti-self-duality of the `Θ` block.
    pub selfdual_theta: f64,
    /// `dH_b` and `∂_𝔲H_b − dΘ`.
    pub closure: f64,
    /// `‖∗_g H − μH‖` for the assembled six-dimensional field.
    pub direct_6d: f64,
}

impl GerbeCheck {
    pub fn max_components(&self) -> f64 {
        self.selfdual_flux
            .max(self.selfdual_twist)
            .max(self.selfdual_theta)
            .max(self.closure)
    }
}

pub fn selfdual_gerbe_check(
    comp: &GerbeComponents,
    u: f64,
    x: &[f64],
    mu: i8,
) -> Result<GerbeCheck> {
    let n = &comp.transverse;
    let k = n.dim();
    let mf = mu as f64;
    let fval = comp.fcal.eval(x);
    let du_alpha = {
        // ∂_𝔲 α_𝔲 by fourth-order differencing in the family parameter
        let h = 1e-4;
        let a = |du: f64| (comp.alpha_u)(u + du, x);
        a(2.0 * h)
            .scale(cx(-1.0 / (12.0 * h)))
            .add(&a(h).scale(cx(8.0 / (12.0 * h))))
            .add(&a(-h).scale(cx(-8.0 / (12.0 * h))))
            .add(&a(-2.0 * h).scale(cx(1.0 / (12.0 * h))))
    };
    let df = CoordForm::one_form(&gradient(&comp.f_u, n, x));
    let du_alpha_df = du_alpha.add(&df);
    let au = comp.alpha_u.clone();
    let alpha_field = FormField::new(k, move |y| au(u, y));
    let d_alpha = exterior_derivative(&alpha_field, n, x);
    let acal = comp.acal.eval(x);
    let hb = comp.hb.eval(x);
    let theta = comp.theta_u.eval(x);

    // ∗_h(e^ℱ H_b + 𝒜∧dα) = μ(∂_𝔲α + df)
    let lhs1 = n.hodge_at(x, &hb.scale(cx(fval.exp())).add(&acal.wedge(&d_alpha)))?;
    let selfdual_flux = lhs1.sub(&du_alpha_df.scale(cx(mf))).norm_inf();

    // ∗_h dα = μ dα
    let selfdual_twist = n
        .hodge_at(x, &d_alpha)?
        .sub(&d_alpha.scale(cx(mf)))
        .norm_inf();

    // Θ + e^{−ℱ}(∂α+df)∧𝒜 + ℋe^{−ℱ}dα = −μ∗_h(Θ + e^{−ℱ}(∂α+df)∧𝒜)
    let emf = (-fval).exp();
    let block = theta.add(&du_alpha_df.wedge(&acal).scale(cx(emf)));
    let lhs3 = block.add(&d_alpha.scale(cx(comp.hcal.eval(x) * emf)));
    let rhs3 = n.hodge_at(x, &block)?.scale(cx(-mf));
    let selfdual_theta = lhs3.sub(&rhs3).norm_inf();

    // closure: dH_b = 0 and ∂_𝔲H_b = dΘ (stationary H_b here)
    let d_hb = exterior_derivative(&comp.hb, n, x).norm_inf();
    let d_theta = exterior_derivative(&comp.theta_u, n, x).norm_inf();
    let closure = d_hb.max(d_theta);

    // direct six-dimensional self-duality of the assembled field on the Kundt
    // chart g = ℋ d𝔲² + d𝔲⊙(e^ℱd𝔳 + 𝒜) + h
    let chart6 = super::kundt::kundt_chart(
        "gerbe-6d",
        n,
        &comp.hcal,
        &comp.fcal,
        Some(&comp.acal),
    )?;
    let mut x6 = vec![u, 0.0];
    x6.extend_from_slice(x);
    // H = H_b + (∂α+df)∧d𝔲∧d𝔳 + d𝔲∧Θ − d𝔳∧dα
    let mut h6 = CoordForm::zero(k + 2);
    let push2 = |mask: usize| -> usize { mask << 2 };
    for mask in 0..(1usize << k) {
        let c_hb = hb.coeff(mask);
        if c_hb.norm_sqr() > 0.0 {
            h6.set_coeff(push2(mask), c_hb);
        }
    }
    let mut du_dv = CoordForm::zero(k + 2);
    du_dv.set_coeff(0b11, cx(1.0));
    let mut du6 = CoordForm::zero(k + 2);
    du6.set_coeff(0b01, cx(1.0));
    let mut dv6 = CoordForm::zero(k + 2);
    dv6.set_coeff(0b10, cx(1.0));
    let lift = |f: &CoordForm| -> CoordForm {
        let mut out = CoordForm::zero(k + 2);
        for mask in 0..(1usize << k) {
            let c = f.coeff(mask);
            if c.norm_sqr() > 0.0 {
                out.set_coeff(push2(mask), c);
            }
        }
        out
    };
    let h6 = h6
        .add(&lift(&du_alpha_df).wedge(&du_dv))
        .add(&du6.wedge(&lift(&theta)))
        .sub(&dv6.wedge(&lift(&d_alpha)));
    let star_h6 = chart6.hodge_at(&x6, &h6)?;
    let direct_6d = star_h6.sub(&h6.scale(cx(mf))).norm_inf();

    Ok(GerbeCheck { selfdual_flux, selfdual_twist, selfdual_theta, closure, direct_6d })
}
