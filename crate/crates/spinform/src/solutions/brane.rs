//! The six-dimensional black brane
//! `g = (1+𝔪/r²)⁻¹ d𝔲⊙d𝔳 + (1+𝔪/r²)(dr² + r²h_{S³})` with curving curvature
//! `H_b = 2𝔪 ν_{S³}`, charge `𝔢 = 2𝔪`, and the full six-dimensional field
//! assembled as `H = H_b + μ e^{2ℱ} d𝔲∧d𝔳∧∗_𝔥H_b`.
//!
//! Transverse data: the wave-front metric is `h = e^U(dr² + r²h_{S³})` with
//! `e^U = 1 + 𝔪/r²` and `ℱ = −U`; the conformally rescaled metric
//! `𝔥 = e^ℱh` is flat `ℝ⁴∖{0}`. Coordinates are `(𝔲,𝔳,r,χ,θ,φ)` with the
//! three-sphere in polar angles on a polar-cap-excluded domain.

use crate::algebra::{C64, Signature};
use crate::error::{Error, Result};
use crate::geometry::{CoordForm, FormField, MetricChart, RMat, ScalarField};

fn cx(re: f64) -> C64 {
    C64::new(re, 0.0)
}

pub struct BlackBraneSolution {
    pub m: f64,
    /// Charge constraint `𝔢 = 2𝔪`.
    pub e: f64,
    /// Duality sign fixed by the coordinate orientation.
    pub mu: i8,
    pub chart: MetricChart,
    /// Full six-dimensional three-form.
    pub h_field: FormField,
    /// Flat transverse chart `𝔥` on `(r,χ,θ,φ)`.
    pub transverse_einstein: MetricChart,
    /// String-frame transverse chart `h = e^U·𝔥`.
    pub transverse_string: MetricChart,
    /// `ℱ = −U` on the transverse chart.
    pub fcal: ScalarField,
    /// `ℋ = e^ℱ` (the profile before the coordinate shift that removes it).
    pub hcal: ScalarField,
    /// `H_b = 2𝔪 ν_{S³}` on the transverse chart.
    pub hb: FormField,
    /// Harmonic profile of the reduced description (constant here).
    pub hbar: ScalarField,
}

fn s3_volume_factor(x: &[f64]) -> f64 {
    // ν_{S³} = sin²χ sinθ dχ∧dθ∧dφ for transverse coordinates (r,χ,θ,φ)
    x[1].sin().powi(2) * x[2].sin()
}

fn transverse_domain() -> Vec<(f64, f64)> {
    vec![
        (0.8, 2.5),
        (0.5, std::f64::consts::PI - 0.5),
        (0.5, std::f64::consts::PI - 0.5),
        (0.3, std::f64::consts::TAU - 0.3),
    ]
}

pub fn black_brane_chart(m: f64) -> Result<BlackBraneSolution> {
    if m <= 0.0 {
        return Err(Error::InvalidParameter("brane charge 𝔪 must be positive".into()));
    }
    let e_u = move |r: f64| 1.0 + m / (r * r);

    let transverse_einstein = MetricChart::new(
        "brane-flat4",
        Signature::new(4, 0)?,
        transverse_domain(),
        vec![],
        move |x| {
            let (r, chi, th) = (x[0], x[1], x[2]);
            let mut g = RMat::zeros(4, 4);
            g[(0, 0)] = 1.0;
            g[(1, 1)] = r * r;
            g[(2, 2)] = r * r * chi.sin().powi(2);
            g[(3, 3)] = r * r * chi.sin().powi(2) * th.sin().powi(2);
            g
        },
    )?;
    let transverse_string = MetricChart::new(
        "brane-string4",
        Signature::new(4, 0)?,
        transverse_domain(),
        vec![],
        move |x| {
            let (r, chi, th) = (x[0], x[1], x[2]);
            let w = e_u(r);
            let mut g = RMat::zeros(4, 4);
            g[(0, 0)] = w;
            g[(1, 1)] = w * r * r;
            g[(2, 2)] = w * r * r * chi.sin().powi(2);
            g[(3, 3)] = w * r * r * chi.sin().powi(2) * th.sin().powi(2);
            g
        },
    )?;

    let fcal = ScalarField::new(move |x| -e_u(x[0]).ln());
    let hcal = {
        let f = fcal.clone();
        ScalarField::new(move |x| f.eval(x).exp())
    };
    let hb = FormField::new(4, move |x| {
        let mut f = CoordForm::zero(4);
        // blades over (r,χ,θ,φ): dχ∧dθ∧dφ = bits {1,2,3}
        f.set_coeff(0b1110, cx(2.0 * m * s3_volume_factor(x)));
        f
    });

    // duality sign: ∗_𝔥H_b = −(2𝔪/r³)dr with this coordinate orientation, and
    // e^{−ℱ}dℱ = (2𝔪/r³)dr, so ∗_𝔥H_b = −μ e^{−ℱ}dℱ holds with μ = +1
    let x_probe = [1.3, 1.2, 1.4, 2.0];
    let star_hb = transverse_einstein.hodge_at(&x_probe, &hb.eval(&x_probe))?;
    let expected_mag = 2.0 * m / x_probe[0].powi(3);
    let mu: i8 = if (star_hb.coeff(0b0001).re + expected_mag).abs() < 1e-8 {
        1
    } else if (star_hb.coeff(0b0001).re - expected_mag).abs() < 1e-8 {
        -1
    } else {
        return Err(Error::InvalidParameter(format!(
            "unexpected transverse dual {:?}",
            star_hb.coeff(0b0001)
        )));
    };

    // 6d chart (𝔲,𝔳,r,χ,θ,φ): g = e^ℱ d𝔲⊙d𝔳 + e^U(dr² + r²h_{S³})
    let mut domain = vec![(-1.0, 1.0), (-1.0, 1.0)];
    domain.extend(transverse_domain());
    let chart = MetricChart::new(
        "black-brane",
        Signature::new(5, 1)?,
        domain,
        vec![],
        move |x| {
            let (r, chi, th) = (x[2], x[3], x[4]);
            let w = e_u(r);
            let mut g = RMat::zeros(6, 6);
            g[(0, 1)] = 1.0 / w;
            g[(1, 0)] = 1.0 / w;
            g[(2, 2)] = w;
            g[(3, 3)] = w * r * r;
            g[(4, 4)] = w * r * r * chi.sin().powi(2);
            g[(5, 5)] = w * r * r * chi.sin().powi(2) * th.sin().powi(2);
            g
        },
    )?;

    // H = H_b + μ e^{2ℱ} d𝔲∧d𝔳∧∗_𝔥H_b = H_b − μ·2𝔪 e^{2ℱ}/r³ d𝔲∧d𝔳∧dr
    let h_field = FormField::new(6, move |x| {
        let r = x[2];
        let mut f = CoordForm::zero(6);
        let transverse = [x[2], x[3], x[4], x[5]];
        f.set_coeff(0b111000, cx(2.0 * m * s3_volume_factor(&transverse)));
        let e2f = e_u(r).powi(-2);
        f.set_coeff(0b000111, cx(-(mu as f64) * 2.0 * m * e2f / (r * r * r)));
        f
    });

    Ok(BlackBraneSolution {
        m,
        e: 2.0 * m,
        mu,
        chart,
        h_field,
        transverse_einstein,
        transverse_string,
        fcal,
        hcal,
        hb,
        hbar: ScalarField::constant(1.0),
    })
}

impl BlackBraneSolution {
    /// The adapted Hermitian-square data on the six-dimensional chart:
    /// `α̂ = u + iu∧ω − μ∗u` with `u = e^ℱd𝔲` and `ω` the transverse
    /// anti-self-dual two-form of norm `⟨ω,ω⟩ = 2` aligned with `μ`.
    /// Returns `(α̂, u, ω)` as form fields.
    pub fn adapted_square_fields(&self) -> (FormField, FormField, FormField) {
        let m = self.m;
        let u_field = FormField::new(6, move |x: &[f64]| {
            let ef = 1.0 / (1.0 + m / (x[2] * x[2]));
            CoordForm::one_form(&[ef, 0.0, 0.0, 0.0, 0.0, 0.0])
        });
        // ω = e^U(dx¹∧dx² − dx³∧dx⁴) in the flat Cartesian coordinates of the
        // transverse space, pulled back to the polar chart
        let omega_field = FormField::new(6, move |x: &[f64]| {
            let (r, chi, th, ph) = (x[2], x[3], x[4], x[5]);
            let eu = 1.0 + m / (r * r);
            let (sc, cc) = (chi.sin(), chi.cos());
            let (st, ct) = (th.sin(), th.cos());
            let (sp, cp) = (ph.sin(), ph.cos());
            // rows are the differentials of x¹…x⁴ over (dr, dχ, dθ, dφ)
            let dx = [
                [cc, -r * sc, 0.0, 0.0],
                [sc * ct, r * cc * ct, -r * sc * st, 0.0],
                [sc * st * cp, r * cc * st * cp, r * sc * ct * cp, -r * sc * st * sp],
                [sc * st * sp, r * cc * st * sp, r * sc * ct * sp, r * sc * st * cp],
            ];
            let mut w = CoordForm::zero(6);
            for a in 0..4 {
                for b in (a + 1)..4 {
                    let c12 = dx[0][a] * dx[1][b] - dx[0][b] * dx[1][a];
                    let c34 = dx[2][a] * dx[3][b] - dx[2][b] * dx[3][a];
                    let mask = (1 << (a + 2)) | (1 << (b + 2));
                    w.set_coeff(mask, cx(eu * (c12 - c34)));
                }
            }
            w
        });
        let (uf, of) = (u_field.clone(), omega_field.clone());
        let chart = self.chart.clone();
        let mu = self.mu;
        let alpha = FormField::new(6, move |x: &[f64]| {
            let u = uf.eval(x);
            let w = of.eval(x);
            let star_u = chart.hodge_at(x, &u).unwrap();
            u.add(&u.wedge(&w).scale(C64::new(0.0, 1.0)))
                .sub(&star_u.scale(cx(mu as f64)))
        });
        (alpha, u_field, omega_field)
    }
}
