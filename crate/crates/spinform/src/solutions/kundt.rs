//! Standard Kundt and Brinkmann charts over a transverse wave-front chart,
//! and the closed-form curvature components they must reproduce.
//!
//! Chart coordinates are `(𝔲, 𝔳, x¹, …, x^k)` with
//! `g = ℋ d𝔲⊗d𝔲 + d𝔲 ⊙ (e^ℱ d𝔳 + 𝒜) + h`; the Brinkmann case is `ℱ = 0`.
//! All constructors are stationary (no `𝔲`-dependence).

use crate::algebra::Signature;
use crate::error::Result;
use crate::geometry::{
    FormField, MetricChart, RMat, ScalarField, hessian_scalar, laplacian_scalar,
    nabla_star_two_form,
};

/// Assemble the Kundt chart from transverse data. `acal` supplies the twist
/// one-form components on the wave front (`None` means non-twisting).
pub fn kundt_chart(
    name: impl Into<String>,
    transverse: &MetricChart,
    hcal: &ScalarField,
    fcal: &ScalarField,
    acal: Option<&FormField>,
) -> Result<MetricChart> {
    let k = transverse.dim();
    let d = k + 2;
    let sig = Signature::new((k + 1) as u8, 1)?;
    let mut domain = vec![(-1.0, 1.0), (-1.0, 1.0)];
    domain.extend(transverse.domain.iter().cloned());
    let tr = transverse.clone();
    let hc = hcal.clone();
    let fc = fcal.clone();
    let ac = acal.cloned();
    MetricChart::new(name, sig, domain, vec![], move |x| {
        let xn = &x[2..];
        let h = tr.metric(xn);
        let mut g = RMat::zeros(d, d);
        g[(0, 0)] = hc.eval(xn);
        let euv = fc.eval(xn).exp();
        g[(0, 1)] = euv;
        g[(1, 0)] = euv;
        if let Some(a) = &ac {
            let af = a.eval(xn);
            for i in 0..k {
                let v = af.coeff(1 << i).re;
                g[(0, 2 + i)] = v;
                g[(2 + i, 0)] = v;
            }
        }
        for i in 0..k {
            for j in 0..k {
                g[(2 + i, 2 + j)] = h[(i, j)];
            }
        }
        g
    })
}

/// Closed-form Ricci components of a stationary non-twisting Kundt metric:
/// `Ric(∂𝔲,∂𝔲) = ½∇^{h∗}dℋ + ½⟨dℋ,dℱ⟩_h − ½ℋ|dℱ|²_h`,
/// `Ric(∂𝔲,∂𝔳) = ½e^ℱ(∇^{h∗}dℱ − |dℱ|²_h)`,
/// `Ric|_{TN} = Ric^h − ∇^h dℱ − ½dℱ⊗dℱ`,
/// `s_g = s_h + 2∇^{h∗}dℱ − (3/2)|dℱ|²_h`.
pub struct KundtClosedForm {
    pub ric_uu: f64,
    pub ric_uv: f64,
    pub ric_transverse: RMat,
    pub scalar: f64,
}

fn gradient(field: &ScalarField, chart: &MetricChart, x: &[f64]) -> Vec<f64> {
    (0..chart.dim())
        .map(|mu| {
            crate::geometry::central_diff4(
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

pub fn kundt_closed_form(
    transverse: &MetricChart,
    hcal: &ScalarField,
    fcal: &ScalarField,
    xn: &[f64],
) -> Result<KundtClosedForm> {
    let hinv = transverse.metric_inv(xn);
    let df = gradient(fcal, transverse, xn);
    let dh = gradient(hcal, transverse, xn);
    let pair = |a: &[f64], b: &[f64]| -> f64 {
        let mut acc = 0.0;
        for i in 0..a.len() {
            for j in 0..b.len() {
                acc += hinv[(i, j)] * a[i] * b[j];
            }
        }
        acc
    };
    let lap_h = laplacian_scalar(hcal, transverse, xn);
    let lap_f = laplacian_scalar(fcal, transverse, xn);
    let hval = hcal.eval(xn);
    let fval = fcal.eval(xn);
    let ric_uu = 0.5 * lap_h + 0.5 * pair(&dh, &df) - 0.5 * hval * pair(&df, &df);
    let ric_uv = 0.5 * fval.exp() * (lap_f - pair(&df, &df));
    let hess_f = hessian_scalar(fcal, transverse, xn);
    let k = transverse.dim();
    let mut ric_transverse = transverse.ricci(xn) - hess_f;
    for i in 0..k {
        for j in 0..k {
            ric_transverse[(i, j)] -= 0.5 * df[i] * df[j];
        }
    }
    let scalar = transverse.scalar_curvature(xn) + 2.0 * lap_f - 1.5 * pair(&df, &df);
    Ok(KundtClosedForm { ric_uu, ric_uv, ric_transverse, scalar })
}

/// Closed-form Ricci of a stationary Brinkmann metric (`ℱ = 0`, twist `𝒜`):
/// `Ric = Ric^h + ½(∇^{h∗}F_𝒜)⊙d𝔲 + ½(|F_𝒜|²_h + ∇^{h∗}dℋ)d𝔲⊗d𝔲`, `s_g = s_h`.
pub struct BrinkmannClosedForm {
    pub ric_uu: f64,
    /// `Ric(∂𝔲, ∂_i)` components on the wave front.
    pub ric_ui: Vec<f64>,
    pub ric_transverse: RMat,
    pub scalar: f64,
}

pub fn brinkmann_closed_form(
    transverse: &MetricChart,
    hcal: &ScalarField,
    acal: &FormField,
    xn: &[f64],
) -> Result<BrinkmannClosedForm> {
    let k = transverse.dim();
    // F_𝒜 = d𝒜 on the wave front
    let f_a = crate::geometry::exterior_derivative(acal, transverse, xn);
    let fnorm2 = transverse.pairing_at(xn, &f_a, &f_a)?.re;
    let lap_h = laplacian_scalar(hcal, transverse, xn);
    let ric_uu = 0.5 * (fnorm2 + lap_h);
    let tr = transverse.clone();
    let ac = acal.clone();
    let f_a_field = FormField::new(k, move |y| crate::geometry::exterior_derivative(&ac, &tr, y));
    let div_f = nabla_star_two_form(&f_a_field, transverse, xn);
    // ½(∇^{h∗}F_𝒜)⊙d𝔲 contributes Ric(∂𝔲,∂_i) = ½(∇^{h∗}F_𝒜)_i
    let ric_ui = (0..k).map(|i| 0.5 * div_f.coeff(1 << i).re).collect();
    Ok(BrinkmannClosedForm {
        ric_uu,
        ric_ui,
        ric_transverse: transverse.ricci(xn),
        scalar: transverse.scalar_curvature(xn),
    })
}
