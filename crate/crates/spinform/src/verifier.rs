//! Executable forms of the algebraic characterization of spinor squares and
//! the low-dimensional normal forms.
//!
//! A candidate form passes when the Fierz-type quadratic and cubic identities,
//! the reality/symmetry condition of its pairing, and (for chiral spinors) the
//! self-duality condition all hold within tolerance. Residuals of the
//! quadratic identities are measured relative to `‖α‖²·2^{d/2}`.

use crate::algebra::truncated::{i_pow, project_lt};
use crate::algebra::{C64, Multivector, Signature, TruncatedMultivector};
use crate::error::{Error, Result};
use crate::spinor::{self, Pairing, PairingKind, SpinorRep, SquareForm};
use nalgebra::DVector;
use num_complex::Complex64;
use rand::Rng;
use serde::Serialize;

fn cx(re: f64, im: f64) -> C64 {
    Complex64::new(re, im)
}

/// Which square a candidate claims to be.
#[derive(Debug, Clone, Copy)]
pub enum SquareKind {
    Hermitian { kappa: C64 },
    Bilinear { sigma: i8 },
}

/// Residuals of the square-characterization axioms for one candidate.
#[derive(Debug, Clone, Serialize)]
pub struct AxiomReport {
    /// `‖α‖∞`; a vanishing candidate fails outright.
    pub norm: f64,
    /// `‖α⋄α − 2^m α^{(0)}α‖ / (2^m‖α‖²)`.
    pub idempotency: f64,
    /// `‖α⋄β⋄α − 2^m (α⋄β)^{(0)}α‖ / (2^m‖α‖²‖β‖)` for the found witness.
    pub fierz: f64,
    /// Reality (Hermitian) or symmetry (bilinear) residual, relative to `‖α‖`.
    pub reality: f64,
    /// Chirality residual when a chirality was requested.
    pub chirality: Option<f64>,
    /// The witness `β` that realized `(α⋄β)^{(0)} ≠ 0`.
    pub witness: Option<crate::algebra::MultivectorJson>,
    /// Witness search failed to find `(α⋄β)^{(0)} ≠ 0`.
    pub degenerate: bool,
    pub tolerance: f64,
    pub verdict: bool,
}

impl AxiomReport {
    pub fn max_residual(&self) -> f64 {
        let mut m = self.idempotency.max(self.fierz).max(self.reality);
        if let Some(c) = self.chirality {
            m = m.max(c);
        }
        m
    }
}

fn half_power(sig: Signature) -> f64 {
    let m = if sig.is_odd() { (sig.dim() - 1) / 2 } else { sig.dim() / 2 };
    (1u64 << m) as f64
}

fn product(a: &SquareForm, b: &SquareForm) -> Result<SquareForm> {
    match (a, b) {
        (SquareForm::Even(x), SquareForm::Even(y)) => {
            Ok(SquareForm::Even(x.geometric_product(y)?))
        }
        (SquareForm::Odd(x), SquareForm::Odd(y)) => Ok(SquareForm::Odd(x.vee(y)?)),
        _ => Err(Error::InvalidParameter("mixed even/odd product".into())),
    }
}

fn scale(a: &SquareForm, c: C64) -> SquareForm {
    match a {
        SquareForm::Even(x) => SquareForm::Even(x.scale(c)),
        SquareForm::Odd(x) => SquareForm::Odd(x.scale(c)),
    }
}

fn random_like(a: &SquareForm, rng: &mut impl Rng) -> SquareForm {
    match a {
        SquareForm::Even(x) => SquareForm::Even(Multivector::random(x.sig(), rng)),
        SquareForm::Odd(x) => SquareForm::Odd(
            TruncatedMultivector::truncate(&Multivector::random(x.sig(), rng), x.ell()).unwrap(),
        ),
    }
}

/// Number of witness candidates drawn before declaring degeneracy.
pub const WITNESS_ATTEMPTS: usize = 64;

/// Check the square-characterization axioms for `α`.
///
/// When `beta` is absent, random witnesses are drawn until
/// `(α⋄β)^{(0)} ≠ 0`; failure after [`WITNESS_ATTEMPTS`] tries yields a
/// degenerate verdict.
pub fn check_square_axioms(
    alpha: &SquareForm,
    kind: SquareKind,
    s: i8,
    mu: Option<i8>,
    beta: Option<&SquareForm>,
    rng: &mut impl Rng,
    tol: f64,
) -> Result<AxiomReport> {
    let sig = alpha.as_full().sig();
    let two_m = half_power(sig);
    let norm = alpha.norm_inf();
    let scale2 = two_m * norm * norm;

    if norm < 1e-14 {
        return Ok(AxiomReport {
            norm,
            idempotency: f64::INFINITY,
            fierz: f64::INFINITY,
            reality: f64::INFINITY,
            chirality: None,
            witness: None,
            degenerate: false,
            tolerance: tol,
            verdict: false,
        });
    }

    // α⋄α = 2^m α^{(0)} α
    let sq = product(alpha, alpha)?;
    let rhs = scale(alpha, alpha.scalar_part() * cx(two_m, 0.0));
    let idempotency = sq.sub_norm(&rhs) / scale2;

    // α⋄β⋄α = 2^m (α⋄β)^{(0)} α for a witness with nonzero scalar part
    let mut fierz = f64::INFINITY;
    let mut degenerate = true;
    let mut witness = None;
    let mut tries = 0;
    loop {
        let b = match beta {
            Some(b) if tries == 0 => b.clone(),
            _ => random_like(alpha, rng),
        };
        tries += 1;
        let ab = product(alpha, &b)?;
        let s0 = ab.scalar_part();
        if s0.norm() > 1e-6 * norm * b.norm_inf().max(1e-30) {
            let lhs = product(&ab, alpha)?;
            let rhs = scale(alpha, s0 * cx(two_m, 0.0));
            fierz = lhs.sub_norm(&rhs) / (scale2 * b.norm_inf().max(1e-30));
            degenerate = false;
            witness = Some(match &b {
                SquareForm::Even(x) => crate::algebra::MultivectorJson::from(x),
                SquareForm::Odd(x) => crate::algebra::MultivectorJson::from(x),
            });
            break;
        }
        if tries >= WITNESS_ATTEMPTS {
            break;
        }
    }

    // reality / symmetry of the pairing type
    let full = alpha.as_full();
    let twisted = full.adjoint_twist(s);
    let reality = match kind {
        SquareKind::Hermitian { kappa } => {
            // (π^{(1−s)/2}∘τ)(κ̄α) = κᾱ
            (twisted.scale(kappa.conj()) - full.conj().scale(kappa)).norm_inf() / norm
        }
        SquareKind::Bilinear { sigma } => {
            (twisted - full.scale(cx(sigma as f64, 0.0))).norm_inf() / norm
        }
    };

    // chirality: i^{q+d/2} ∗(π∘τ)(α) = μα (even d only)
    let chirality = match mu {
        None => None,
        Some(m) => {
            if sig.is_odd() {
                return Err(Error::RequiresEvenDimension(sig.dim()));
            }
            let lhs = full
                .parity_reversion()
                .hodge_star()
                .scale(i_pow(sig.q as i64 + sig.dim() as i64 / 2));
            Some((lhs - full.scale(cx(m as f64, 0.0))).norm_inf() / norm)
        }
    };

    let mut verdict = !degenerate && idempotency <= tol && fierz <= tol && reality <= tol;
    if let Some(c) = chirality {
        verdict = verdict && c <= tol;
    }

    Ok(AxiomReport {
        norm,
        idempotency,
        fierz,
        reality,
        chirality,
        witness,
        degenerate,
        tolerance: tol,
        verdict,
    })
}

/// Truth of the constraint equation `𝔮⋄α = 0` (or `𝔮∨α = 0` for odd `d`),
/// cross-validated against `quantize(𝔮)·η = 0` when the spinor is supplied.
pub fn check_constrained(
    q: &Multivector,
    alpha: &SquareForm,
    rep: &SpinorRep,
    eta: Option<&DVector<C64>>,
    tol: f64,
) -> Result<bool> {
    let resid = match alpha {
        SquareForm::Even(a) => q.geometric_product(a)?.norm_inf(),
        SquareForm::Odd(a) => {
            let qt = TruncatedMultivector::new(project_lt(q), a.ell())?;
            qt.vee(a)?.norm_inf()
        }
    };
    let scale = q.norm_inf().max(1e-30) * alpha.norm_inf().max(1e-30);
    let form_says = resid <= tol * scale;
    if let Some(eta) = eta {
        let qm = match alpha {
            SquareForm::Even(_) => rep.quantize(q),
            SquareForm::Odd(a) => {
                rep.quantize_truncated(&TruncatedMultivector::new(project_lt(q), a.ell())?)?
            }
        };
        let matrix_resid = (qm * eta).norm();
        let matrix_says = matrix_resid <= tol * q.norm_inf().max(1e-30) * eta.norm();
        if matrix_says != form_says {
            return Err(Error::ConstraintUnsolvable(format!(
                "matrix kernel and form annihilation disagree: {matrix_resid:.2e} vs {resid:.2e}"
            )));
        }
    }
    Ok(form_says)
}

/// Named components of a square in one of the supported low dimensions,
/// together with the residuals of its defining constraints.
#[derive(Debug, Clone)]
pub enum NormalForm {
    /// `α̂ = r + θ + ifν` with `r² = f² + ⟨θ,θ⟩`.
    Riemann2 { r: f64, f: f64, theta: Multivector, residuals: Vec<(String, f64)> },
    /// `α̂ = r + θ` with `r² = ⟨θ,θ⟩`.
    Riemann3 { r: f64, theta: Multivector, residuals: Vec<(String, f64)> },
    /// `α̂ = r + θ + iω + i∗ϑ + fν` with the five quadratic constraints and
    /// the derived scalar identities.
    Riemann4 {
        r: f64,
        f: f64,
        theta: Multivector,
        vartheta: Multivector,
        omega: Multivector,
        residuals: Vec<(String, f64)>,
    },
    /// `α̂ = u + iμ∗u` with `u` real isotropic.
    Lorentz4 { u: Multivector, residuals: Vec<(String, f64)> },
    /// `α̂ = u + iu∧ω − μ∗u`, with the gauge-fixed `ω_{uv}` when a conjugate
    /// `v` is supplied.
    Lorentz6 {
        u: Multivector,
        omega: Option<Multivector>,
        residuals: Vec<(String, f64)>,
    },
}

impl NormalForm {
    pub fn residuals(&self) -> &[(String, f64)] {
        match self {
            NormalForm::Riemann2 { residuals, .. }
            | NormalForm::Riemann3 { residuals, .. }
            | NormalForm::Riemann4 { residuals, .. }
            | NormalForm::Lorentz4 { residuals, .. }
            | NormalForm::Lorentz6 { residuals, .. } => residuals,
        }
    }

    pub fn max_residual(&self) -> f64 {
        self.residuals().iter().map(|(_, v)| *v).fold(0.0, f64::max)
    }

    pub fn check(&self, tol: f64) -> Result<()> {
        for (name, v) in self.residuals() {
            if !v.is_finite() || *v > tol {
                return Err(Error::NotASquare(format!("constraint `{name}` violated: {v:.3e}")));
            }
        }
        Ok(())
    }
}

fn real_part_checked(a: &Multivector, label: &str, residuals: &mut Vec<(String, f64)>) {
    let resid = (a.clone() - a.conj()).norm_inf() / 2.0;
    residuals.push((format!("{label} real"), resid / a.norm_inf().max(1.0)));
}

/// Decompose a Hermitian square into its named components for the supported
/// signatures and verify every dimension-specific constraint.
pub fn normal_form(
    alpha: &SquareForm,
    mu: Option<i8>,
    v_conjugate: Option<&Multivector>,
) -> Result<NormalForm> {
    let full = alpha.as_full();
    let sig = full.sig();
    let norm = full.norm_inf().max(1e-30);
    match (sig.p, sig.q) {
        (2, 0) => {
            let mut residuals = Vec::new();
            let r_c = full.scalar_part();
            let theta = full.grade_part(1);
            let omega = full.grade_part(2);
            residuals.push(("r real".into(), r_c.im.abs() / norm));
            real_part_checked(&theta, "θ", &mut residuals);
            // grade-2 part is i·f·ν
            let nu = Multivector::volume_form(sig);
            let f_c = omega.coeff(0b11) / nu.coeff(0b11) * cx(0.0, -1.0);
            residuals.push(("f real".into(), f_c.im.abs() / norm));
            let (r, f) = (r_c.re, f_c.re);
            let tt = theta.metric_pairing(&theta).unwrap().re;
            residuals.push((
                "r² = f² + ⟨θ,θ⟩".into(),
                (r * r - f * f - tt).abs() / (norm * norm),
            ));
            if let Some(m) = mu {
                residuals.push(("θ = 0 (chiral)".into(), theta.norm_inf() / norm));
                residuals.push(("f = μr (chiral)".into(), (f - m as f64 * r).abs() / norm));
            }
            Ok(NormalForm::Riemann2 { r, f, theta, residuals })
        }
        (3, 0) => {
            let mut residuals = Vec::new();
            let r_c = full.scalar_part();
            let theta = full.grade_part(1);
            residuals.push(("r real".into(), r_c.im.abs() / norm));
            real_part_checked(&theta, "θ", &mut residuals);
            let r = r_c.re;
            let tt = theta.metric_pairing(&theta).unwrap().re;
            residuals.push(("r² = ⟨θ,θ⟩".into(), (r * r - tt).abs() / (norm * norm)));
            Ok(NormalForm::Riemann3 { r, theta, residuals })
        }
        (4, 0) => {
            let mut residuals = Vec::new();
            let r_c = full.scalar_part();
            let theta = full.grade_part(1);
            let omega = full.grade_part(2).scale(cx(0.0, -1.0));
            let star_vartheta = full.grade_part(3).scale(cx(0.0, -1.0));
            // ∗∗ = −Id on odd forms in d = 4 Riemannian signature
            let vartheta = star_vartheta.hodge_star().scale(cx(-1.0, 0.0));
            let nu = Multivector::volume_form(sig);
            let f_c = full.grade_part(4).coeff(0b1111) / nu.coeff(0b1111);
            residuals.push(("r real".into(), r_c.im.abs() / norm));
            residuals.push(("f real".into(), f_c.im.abs() / norm));
            real_part_checked(&theta, "θ", &mut residuals);
            real_part_checked(&omega, "ω", &mut residuals);
            real_part_checked(&vartheta, "ϑ", &mut residuals);
            let (r, f) = (r_c.re, f_c.re);
            let n2 = norm * norm;
            let pair = |a: &Multivector, b: &Multivector| a.metric_pairing(b).unwrap().re;
            let tt = pair(&theta, &theta);
            let vv = pair(&vartheta, &vartheta);
            let ww = pair(&omega, &omega);
            residuals.push((
                "⟨θ,θ⟩+⟨ω,ω⟩+⟨ϑ,ϑ⟩+f² = 3r²".into(),
                (tt + ww + vv + f * f - 3.0 * r * r).abs() / n2,
            ));
            let wedge = |a: &Multivector, b: &Multivector| a.wedge(b).unwrap();
            residuals.push((
                "∗(ω∧ϑ) = rθ".into(),
                (wedge(&omega, &vartheta).hodge_star() - theta.scale(cx(r, 0.0))).norm_inf() / n2,
            ));
            residuals.push((
                "∗(θ∧ϑ)+f∗ω = −rω".into(),
                (wedge(&theta, &vartheta).hodge_star()
                    + omega.hodge_star().scale(cx(f, 0.0))
                    + omega.scale(cx(r, 0.0)))
                .norm_inf()
                    / n2,
            ));
            residuals.push((
                "θ∧ω = r∗ϑ".into(),
                (wedge(&theta, &omega) - vartheta.hodge_star().scale(cx(r, 0.0))).norm_inf() / n2,
            ));
            residuals.push((
                "ω∧ω = −2rfν".into(),
                (wedge(&omega, &omega) + nu.scale(cx(2.0 * r * f, 0.0))).norm_inf() / n2,
            ));
            residuals.push(("⟨ϑ,θ⟩ = 0".into(), pair(&vartheta, &theta).abs() / n2));
            residuals.push(("⟨ϑ,ϑ⟩ = r²−f²".into(), (vv - (r * r - f * f)).abs() / n2));
            residuals.push(("⟨θ,θ⟩ = r²−f²".into(), (tt - (r * r - f * f)).abs() / n2));
            residuals.push(("⟨ω,ω⟩ = r²+f²".into(), (ww - (r * r + f * f)).abs() / n2));
            if let Some(m) = mu {
                let mf = m as f64;
                residuals.push(("θ = 0 (chiral)".into(), theta.norm_inf() / norm));
                residuals.push(("ϑ = 0 (chiral)".into(), vartheta.norm_inf() / norm));
                residuals.push(("f = −μr (chiral)".into(), (f + mf * r).abs() / norm));
                residuals.push((
                    "∗ω = μω (chiral)".into(),
                    (omega.hodge_star() - omega.scale(cx(mf, 0.0))).norm_inf() / norm,
                ));
                residuals.push((
                    "⟨ω,ω⟩ = 2r² (chiral)".into(),
                    (ww - 2.0 * r * r).abs() / n2,
                ));
            }
            Ok(NormalForm::Riemann4 { r, f, theta, vartheta, omega, residuals })
        }
        (3, 1) => {
            let m = mu.ok_or_else(|| {
                Error::InvalidParameter("Lorentzian normal forms need a chirality μ".into())
            })?;
            let mut residuals = Vec::new();
            let u = full.grade_part(1);
            real_part_checked(&u, "u", &mut residuals);
            residuals.push((
                "α̂ = u + iμ∗u".into(),
                (full.clone() - u.clone() - u.hodge_star().scale(cx(0.0, m as f64))).norm_inf()
                    / norm,
            ));
            residuals.push((
                "⟨u,u⟩ = 0".into(),
                u.metric_pairing(&u).unwrap().norm() / (norm * norm),
            ));
            Ok(NormalForm::Lorentz4 { u, residuals })
        }
        (5, 1) => {
            let m = mu.ok_or_else(|| {
                Error::InvalidParameter("Lorentzian normal forms need a chirality μ".into())
            })?;
            let mf = m as f64;
            let mut residuals = Vec::new();
            let u = full.grade_part(1);
            real_part_checked(&u, "u", &mut residuals);
            residuals.push((
                "⟨u,u⟩ = 0".into(),
                u.metric_pairing(&u).unwrap().norm() / (norm * norm),
            ));
            let uw = full.grade_part(3).scale(cx(0.0, -1.0)); // u∧ω
            residuals.push((
                "grade-5 = −μ∗u".into(),
                (full.grade_part(5) + u.hodge_star().scale(cx(mf, 0.0))).norm_inf() / norm,
            ));
            residuals.push((
                "∗(u∧ω) = μ u∧ω".into(),
                (uw.hodge_star() - uw.scale(cx(mf, 0.0))).norm_inf() / norm,
            ));
            residuals.push(("u∧(u∧ω) = 0".into(), u.wedge(&uw)?.norm_inf() / norm));
            let mut omega = None;
            if let Some(v) = v_conjugate {
                let uv = u.metric_pairing(v)?;
                if (uv - cx(1.0, 0.0)).norm() > 1e-8 {
                    return Err(Error::InvalidParameter(
                        "v is not conjugate to u: ⟨u,v⟩ ≠ 1".into(),
                    ));
                }
                let w = uw.interior_sharp(v)?; // ω_{uv} = ι_{v♯}(u∧ω)
                real_part_checked(&w, "ω", &mut residuals);
                residuals.push(("ω(u♯) = 0".into(), w.interior_sharp(&u)?.norm_inf() / norm));
                residuals.push(("ω(v♯) = 0".into(), w.interior_sharp(v)?.norm_inf() / norm));
                residuals.push((
                    "⟨ω,ω⟩ = 2".into(),
                    (w.metric_pairing(&w)? - cx(2.0, 0.0)).norm(),
                ));
                residuals.push((
                    "u∧ω reproduces grade-3".into(),
                    (u.wedge(&w)? - uw.clone()).norm_inf() / norm,
                ));
                let uww = u.wedge(&w)?.wedge(&w)?;
                residuals.push((
                    "2μ∗u = u∧ω∧ω".into(),
                    (u.hodge_star().scale(cx(2.0 * mf, 0.0)) - uww).norm_inf() / norm,
                ));
                let vw = v.wedge(&w)?;
                let vww = vw.wedge(&w)?;
                residuals.push((
                    "∗v = −(μ/2) v∧ω∧ω".into(),
                    (v.hodge_star() + vww.scale(cx(mf / 2.0, 0.0))).norm_inf(),
                ));
                let uvw = u.wedge(v)?;
                residuals.push((
                    "∗(u∧v) = (μ/2) ω∧ω".into(),
                    (uvw.hodge_star() - w.wedge(&w)?.scale(cx(mf / 2.0, 0.0))).norm_inf(),
                ));
                residuals.push((
                    "∗ω = −μ u∧v∧ω".into(),
                    (w.hodge_star() + uvw.wedge(&w)?.scale(cx(mf, 0.0))).norm_inf(),
                ));
                residuals.push((
                    "∗(v∧ω) = −μ v∧ω".into(),
                    (vw.hodge_star() + vw.scale(cx(mf, 0.0))).norm_inf(),
                ));
                omega = Some(w);
            }
            Ok(NormalForm::Lorentz6 { u, omega, residuals })
        }
        _ => Err(Error::InvalidParameter(format!(
            "no normal form implemented for signature ({},{})",
            sig.p, sig.q
        ))),
    }
}

/// Compatibility record for a Hermitian/bilinear square pair in `(5,1)`.
#[derive(Debug, Clone)]
pub struct CompatibilityReport {
    pub residuals: Vec<(String, f64)>,
    pub pass: bool,
}

/// Checks that a Hermitian square and a bilinear square `α` come from the
/// same spinor in signature `(5,1)`: `u = (μ/4)∗(α(v♯)∧ᾱ)`,
/// `ω = −(i/4)α(v♯)△₁ᾱ(v♯)`, the factorization `α = u∧Ω` with `Ω = α(v♯)`,
/// and `Ω∧Ω̄ = 2ω∧ω`.
pub fn hermitian_bilinear_compatibility(
    alpha_h: &SquareForm,
    alpha_b: &SquareForm,
    v: &Multivector,
    mu: i8,
    tol: f64,
) -> Result<CompatibilityReport> {
    let sig = alpha_h.as_full().sig();
    if (sig.p, sig.q) != (5, 1) {
        return Err(Error::InvalidParameter("compatibility check is specific to (5,1)".into()));
    }
    let nf = normal_form(alpha_h, Some(mu), Some(v))?;
    let (u, omega) = match &nf {
        NormalForm::Lorentz6 { u, omega, .. } => (u.clone(), omega.clone().unwrap()),
        _ => unreachable!(),
    };
    let a = alpha_b.as_full();
    let norm = a.norm_inf().max(1e-30);
    let mf = mu as f64;
    let mut residuals = Vec::new();

    let a_v = a.interior_sharp(v)?; // Ω = α(v♯)
    let abar = a.conj();
    let u_rec = a_v.wedge(&abar)?.hodge_star().scale(cx(mf / 4.0, 0.0));
    residuals.push((
        "u = (μ/4)∗(α(v♯)∧ᾱ)".into(),
        (u_rec - u.clone()).norm_inf() / (norm * norm),
    ));

    let abar_v = abar.interior_sharp(v)?;
    let w_rec = a_v.generalized_product(&abar_v, 1)?.scale(cx(0.0, -0.25));
    residuals.push((
        "ω = −(i/4)α(v♯)△₁ᾱ(v♯)".into(),
        (w_rec - omega.clone()).norm_inf() / (norm * norm),
    ));

    residuals.push(("α = u∧Ω".into(), (a.clone() - u.wedge(&a_v)?).norm_inf() / norm));

    let lhs = a_v.wedge(&abar_v)?;
    let rhs = omega.wedge(&omega)?.scale(cx(2.0, 0.0));
    residuals.push(("Ω∧Ω̄ = 2ω∧ω".into(), (lhs - rhs).norm_inf() / (norm * norm)));

    let pass = residuals.iter().all(|(_, r)| *r <= tol);
    Ok(CompatibilityReport { residuals, pass })
}

/// Best-fit phase `e^{iφ}` with `b ≈ e^{iφ}·a`, exhibiting the `e^{2iφ}`
/// ambiguity of bilinear squares under spinor phase rotations.
pub fn relative_phase(a: &Multivector, b: &Multivector) -> Option<C64> {
    let mut num = cx(0.0, 0.0);
    let mut den = 0.0;
    for (ca, cb) in a.coeffs().iter().zip(b.coeffs()) {
        num += cb * ca.conj();
        den += ca.norm_sqr();
    }
    if den < 1e-28 || num.norm() < 1e-14 {
        return None;
    }
    Some(num / cx(num.norm(), 0.0))
}

/// Representation plus both standard pairings for a signature, preferring
/// positive adjoint type.
pub struct SquareContext {
    pub rep: SpinorRep,
    pub hermitian: Pairing,
    pub bilinear: Pairing,
}

impl SquareContext {
    pub fn new(sig: Signature, ell: Option<i8>) -> Result<Self> {
        let rep = SpinorRep::build(sig, ell)?;
        let hermitian = spinor::solve_admissible(&rep, 1, PairingKind::Hermitian)
            .or_else(|_| spinor::solve_admissible(&rep, -1, PairingKind::Hermitian))?;
        let bilinear = spinor::solve_admissible(&rep, 1, PairingKind::Bilinear)
            .or_else(|_| spinor::solve_admissible(&rep, -1, PairingKind::Bilinear))?;
        Ok(SquareContext { rep, hermitian, bilinear })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spinor::{bilinear_square, hermitian_square, reconstruct_spinor};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn sig(p: u8, q: u8) -> Signature {
        Signature::new(p, q).unwrap()
    }

    #[test]
    fn genuine_squares_pass_axioms() {
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        for (p, q, ell) in [
            (2u8, 0u8, None),
            (3, 0, Some(1i8)),
            (4, 0, None),
            (3, 1, None),
            (4, 1, Some(-1)),
            (5, 1, None),
        ] {
            let ctx = SquareContext::new(sig(p, q), ell).unwrap();
            for _ in 0..10 {
                let eta = ctx.rep.random_spinor(&mut rng);
                let ah = hermitian_square(&ctx.rep, &eta, cx(1.0, 0.0), &ctx.hermitian).unwrap();
                let rep_h = check_square_axioms(
                    &ah,
                    SquareKind::Hermitian { kappa: cx(1.0, 0.0) },
                    ctx.hermitian.s,
                    None,
                    None,
                    &mut rng,
                    1e-10,
                )
                .unwrap();
                assert!(rep_h.verdict, "hermitian square fails axioms ({p},{q}): {rep_h:?}");
                let ab = bilinear_square(&ctx.rep, &eta, &ctx.bilinear).unwrap();
                let rep_b = check_square_axioms(
                    &ab,
                    SquareKind::Bilinear { sigma: ctx.bilinear.sigma.unwrap() },
                    ctx.bilinear.s,
                    None,
                    None,
                    &mut rng,
                    1e-10,
                )
                .unwrap();
                assert!(rep_b.verdict, "bilinear square fails axioms ({p},{q}): {rep_b:?}");
            }
        }
    }

    #[test]
    fn non_square_fails_axioms() {
        let mut rng = ChaCha8Rng::seed_from_u64(22);
        let s = sig(4, 0);
        // 1 + ν violates the Fierz quadratic: (1+ν)⋄(1+ν) = 2 + 2ν while
        // 2^{d/2}α^{(0)}α = 4(1+ν)
        let cand = Multivector::one(s) + Multivector::volume_form(s);
        let rep = check_square_axioms(
            &SquareForm::Even(cand),
            SquareKind::Hermitian { kappa: cx(1.0, 0.0) },
            1,
            None,
            None,
            &mut rng,
            1e-10,
        )
        .unwrap();
        assert!(!rep.verdict);
        assert!(rep.idempotency > 1e-3);
        let zero = check_square_axioms(
            &SquareForm::Even(Multivector::zero(s)),
            SquareKind::Hermitian { kappa: cx(1.0, 0.0) },
            1,
            None,
            None,
            &mut rng,
            1e-10,
        )
        .unwrap();
        assert!(!zero.verdict && zero.norm < 1e-14);
    }

    #[test]
    fn witness_equivalence_many_betas() {
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        let ctx = SquareContext::new(sig(3, 1), None).unwrap();
        let eta = ctx.rep.random_spinor(&mut rng);
        let ah = hermitian_square(&ctx.rep, &eta, cx(1.0, 0.0), &ctx.hermitian).unwrap();
        for _ in 0..50 {
            let beta = SquareForm::Even(Multivector::random(sig(3, 1), &mut rng));
            let rep = check_square_axioms(
                &ah,
                SquareKind::Hermitian { kappa: cx(1.0, 0.0) },
                1,
                None,
                Some(&beta),
                &mut rng,
                1e-10,
            )
            .unwrap();
            assert!(rep.verdict);
        }
    }

    #[test]
    fn constrained_annihilators_detected() {
        let mut rng = ChaCha8Rng::seed_from_u64(24);
        for (p, q, ell) in [(3u8, 1u8, None), (3, 0, Some(1i8))] {
            let ctx = SquareContext::new(sig(p, q), ell).unwrap();
            let n = ctx.rep.module_dim();
            for _ in 0..20 {
                let eta = ctx.rep.random_spinor(&mut rng);
                let ah = hermitian_square(&ctx.rep, &eta, cx(1.0, 0.0), &ctx.hermitian).unwrap();
                // rank-deficient annihilator R·(Id − η w†/(w†η))
                let w = ctx.rep.random_spinor(&mut rng);
                let wh_eta: C64 = w.dotc(&eta);
                let mut proj = crate::spinor::CMat::identity(n, n);
                for a in 0..n {
                    for b in 0..n {
                        proj[(a, b)] -= eta[a] * w[b].conj() / wh_eta;
                    }
                }
                let r = crate::spinor::CMat::from_fn(n, n, |_, _| {
                    cx(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
                });
                let ann = r * proj;
                let q_form = ctx.rep.dequantize(&ann).unwrap();
                assert!(
                    check_constrained(&q_form, &ah, &ctx.rep, Some(&eta), 1e-10).unwrap(),
                    "annihilator not detected for ({p},{q})"
                );
                let unit = Multivector::one(sig(p, q));
                assert!(!check_constrained(&unit, &ah, &ctx.rep, Some(&eta), 1e-10).unwrap());
                let zero = Multivector::zero(sig(p, q));
                assert!(check_constrained(&zero, &ah, &ctx.rep, Some(&eta), 1e-10).unwrap());
            }
        }
    }

    #[test]
    fn transpose_law_for_hermitian_squares() {
        // 𝔮⋄α = 0 ⇔ α⋄(π^{(1−s)/2}∘τ)(𝔮̄) = 0 when α is a Hermitian square
        let mut rng = ChaCha8Rng::seed_from_u64(25);
        let ctx = SquareContext::new(sig(3, 1), None).unwrap();
        let s = ctx.hermitian.s;
        let n = ctx.rep.module_dim();
        for _ in 0..20 {
            let eta = ctx.rep.random_spinor(&mut rng);
            let ah = hermitian_square(&ctx.rep, &eta, cx(1.0, 0.0), &ctx.hermitian).unwrap();
            let alpha = ah.as_full();
            let w = ctx.rep.random_spinor(&mut rng);
            let wh_eta: C64 = w.dotc(&eta);
            let mut proj = crate::spinor::CMat::identity(n, n);
            for a in 0..n {
                for b in 0..n {
                    proj[(a, b)] -= eta[a] * w[b].conj() / wh_eta;
                }
            }
            let q_form = ctx.rep.dequantize(&proj).unwrap();
            let scale = q_form.norm_inf() * alpha.norm_inf();
            let left = q_form.geometric_product(alpha).unwrap().norm_inf();
            let right = alpha
                .geometric_product(&q_form.conj().adjoint_twist(s))
                .unwrap()
                .norm_inf();
            assert!(left < 1e-10 * scale);
            assert!(right < 1e-10 * scale, "transpose law fails: {right:.2e}");
            let q_rand = Multivector::random(sig(3, 1), &mut rng);
            let l2 = q_rand.geometric_product(alpha).unwrap().norm_inf();
            let r2 = alpha
                .geometric_product(&q_rand.conj().adjoint_twist(s))
                .unwrap()
                .norm_inf();
            assert!(l2 > 1e-6 && r2 > 1e-6);
        }
    }

    #[test]
    fn normal_forms_riemannian() {
        let mut rng = ChaCha8Rng::seed_from_u64(26);
        let ctx2 = SquareContext::new(sig(2, 0), None).unwrap();
        for _ in 0..20 {
            let eta = ctx2.rep.random_spinor(&mut rng);
            let ah = hermitian_square(&ctx2.rep, &eta, cx(1.0, 0.0), &ctx2.hermitian).unwrap();
            normal_form(&ah, None, None).unwrap().check(1e-10).unwrap();
            for m in [1i8, -1] {
                let chi = ctx2.rep.random_chiral_spinor(m, &mut rng).unwrap();
                let ahc = hermitian_square(&ctx2.rep, &chi, cx(1.0, 0.0), &ctx2.hermitian).unwrap();
                normal_form(&ahc, Some(m), None).unwrap().check(1e-10).unwrap();
            }
        }
        let ctx3 = SquareContext::new(sig(3, 0), Some(1)).unwrap();
        for _ in 0..20 {
            let eta = ctx3.rep.random_spinor(&mut rng);
            let ah = hermitian_square(&ctx3.rep, &eta, cx(1.0, 0.0), &ctx3.hermitian).unwrap();
            normal_form(&ah, None, None).unwrap().check(1e-10).unwrap();
        }
        let ctx4 = SquareContext::new(sig(4, 0), None).unwrap();
        for _ in 0..20 {
            let eta = ctx4.rep.random_spinor(&mut rng);
            let ah = hermitian_square(&ctx4.rep, &eta, cx(1.0, 0.0), &ctx4.hermitian).unwrap();
            normal_form(&ah, None, None).unwrap().check(1e-10).unwrap();
        }
    }

    fn conjugate_one_form(u: &Multivector) -> Multivector {
        // for a real isotropic u in (p,1): flip the timelike component, scale
        let s = u.sig();
        let d = s.dim();
        let mut v = Multivector::zero(s);
        let mut spat = 0.0;
        for i in 0..d {
            let c = u.coeff(1 << i);
            if i < s.p as usize {
                spat += c.re * c.re;
                v.set_coeff(1 << i, c);
            } else {
                v.set_coeff(1 << i, -c);
            }
        }
        v.scale(cx(1.0 / (2.0 * spat), 0.0))
    }

    #[test]
    fn normal_forms_lorentzian() {
        let mut rng = ChaCha8Rng::seed_from_u64(27);
        // (3,1) chiral: Hermitian square is u + iμ∗u, bilinear square is a
        // decomposable μ-self-dual two-form
        let ctx31 = SquareContext::new(sig(3, 1), None).unwrap();
        for m in [1i8, -1] {
            for _ in 0..10 {
                let eta = ctx31.rep.random_chiral_spinor(m, &mut rng).unwrap();
                let ah = hermitian_square(&ctx31.rep, &eta, cx(1.0, 0.0), &ctx31.hermitian).unwrap();
                normal_form(&ah, Some(m), None).unwrap().check(1e-9).unwrap();
                let ab = bilinear_square(&ctx31.rep, &eta, &ctx31.bilinear).unwrap();
                let a = ab.as_full();
                let norm = a.norm_inf();
                for g in [0usize, 1, 3, 4] {
                    assert!(a.grade_part(g).norm_inf() < 1e-12 * norm);
                }
                let sq = a.geometric_product(a).unwrap();
                assert!(sq.norm_inf() < 1e-10 * norm * norm, "α⋄α ≠ 0");
                let sd =
                    (a.hodge_star().scale(cx(0.0, 1.0)) - a.scale(cx(m as f64, 0.0))).norm_inf();
                assert!(sd < 1e-10 * norm, "i∗α = μα fails");
            }
        }
        // (5,1) chiral squares, gauge-fixed ω, and two-square compatibility
        let ctx51 = SquareContext::new(sig(5, 1), None).unwrap();
        for m in [1i8, -1] {
            for _ in 0..5 {
                let eta = ctx51.rep.random_chiral_spinor(m, &mut rng).unwrap();
                let ah = hermitian_square(&ctx51.rep, &eta, cx(1.0, 0.0), &ctx51.hermitian).unwrap();
                let nf0 = normal_form(&ah, Some(m), None).unwrap();
                nf0.check(1e-9).unwrap();
                let u = match &nf0 {
                    NormalForm::Lorentz6 { u, .. } => u.clone(),
                    _ => unreachable!(),
                };
                let v = conjugate_one_form(&u);
                let nf = normal_form(&ah, Some(m), Some(&v)).unwrap();
                nf.check(1e-9).unwrap();
                let ab = bilinear_square(&ctx51.rep, &eta, &ctx51.bilinear).unwrap();
                let a = ab.as_full();
                let norm = a.norm_inf();
                for g in [0usize, 1, 2, 4, 5, 6] {
                    assert!(a.grade_part(g).norm_inf() < 1e-10 * norm);
                }
                let sd = (a.hodge_star() - a.scale(cx(m as f64, 0.0))).norm_inf();
                assert!(sd < 1e-9 * norm, "∗α = μα fails");
                for k in 0..6 {
                    let contracted = a.interior_basis(k).wedge(a).unwrap();
                    assert!(
                        contracted.norm_inf() < 1e-9 * norm * norm,
                        "bilinear square not decomposable"
                    );
                }
                let comp = hermitian_bilinear_compatibility(&ah, &ab, &v, m, 1e-8).unwrap();
                assert!(comp.pass, "compatibility fails: {:?}", comp.residuals);
                let eta2 = ctx51.rep.random_chiral_spinor(m, &mut rng).unwrap();
                let ab2 = bilinear_square(&ctx51.rep, &eta2, &ctx51.bilinear).unwrap();
                let comp2 = hermitian_bilinear_compatibility(&ah, &ab2, &v, m, 1e-8).unwrap();
                assert!(!comp2.pass, "independent squares should not be compatible");
                // phase rotation: α̂ invariant, α picks up e^{2iφ}
                let phi = 0.7f64;
                let eta_rot = eta.map(|x| x * C64::from_polar(1.0, phi));
                let ab_rot = bilinear_square(&ctx51.rep, &eta_rot, &ctx51.bilinear).unwrap();
                let ph = relative_phase(ab.as_full(), ab_rot.as_full()).unwrap();
                assert!((ph - C64::from_polar(1.0, 2.0 * phi)).norm() < 1e-9);
                let comp3 = hermitian_bilinear_compatibility(&ah, &ab_rot, &v, m, 1e-8).unwrap();
                assert!(comp3.pass, "same-ray square should stay compatible");
            }
        }
    }

    #[test]
    fn desk_scale_completeness_dim2_and_dim3() {
        // the full candidate families pass the axioms exactly on the
        // constraint surface, cross-validated with reconstruction
        let mut rng = ChaCha8Rng::seed_from_u64(28);
        let ctx2 = SquareContext::new(sig(2, 0), None).unwrap();
        let s2 = sig(2, 0);
        let grid = [-1.5f64, -0.7, 0.0, 0.4, 1.1];
        for &r in &grid {
            for &t1 in &grid {
                for &t2 in &grid {
                    for &f in &grid {
                        let mut cand = Multivector::scalar(s2, cx(r, 0.0));
                        cand.set_coeff(0b01, cx(t1, 0.0));
                        cand.set_coeff(0b10, cx(t2, 0.0));
                        cand.set_coeff(0b11, cx(0.0, f));
                        if cand.norm_inf() < 1e-12 {
                            continue;
                        }
                        let onsurf = (r * r - f * f - t1 * t1 - t2 * t2).abs() < 1e-12;
                        let rep = check_square_axioms(
                            &SquareForm::Even(cand.clone()),
                            SquareKind::Hermitian { kappa: cx(1.0, 0.0) },
                            1,
                            None,
                            None,
                            &mut rng,
                            1e-10,
                        )
                        .unwrap();
                        assert_eq!(rep.verdict, onsurf, "axioms vs surface at r={r} f={f}");
                        let rec =
                            reconstruct_spinor(&ctx2.rep, &SquareForm::Even(cand), &ctx2.hermitian);
                        assert_eq!(rec.is_ok(), onsurf);
                    }
                }
            }
        }
        let ctx3 = SquareContext::new(sig(3, 0), Some(1)).unwrap();
        let s3 = sig(3, 0);
        for &r in &grid {
            for &t1 in &grid {
                for &t2 in &grid {
                    for &t3 in &grid {
                        let mut cand = Multivector::scalar(s3, cx(r, 0.0));
                        cand.set_coeff(0b001, cx(t1, 0.0));
                        cand.set_coeff(0b010, cx(t2, 0.0));
                        cand.set_coeff(0b100, cx(t3, 0.0));
                        if cand.norm_inf() < 1e-12 {
                            continue;
                        }
                        let onsurf = (r * r - t1 * t1 - t2 * t2 - t3 * t3).abs() < 1e-12;
                        let tr = TruncatedMultivector::new(cand, 1).unwrap();
                        let rep = check_square_axioms(
                            &SquareForm::Odd(tr.clone()),
                            SquareKind::Hermitian { kappa: cx(1.0, 0.0) },
                            1,
                            None,
                            None,
                            &mut rng,
                            1e-10,
                        )
                        .unwrap();
                        assert_eq!(rep.verdict, onsurf, "3d axioms vs surface at r={r}");
                        let rec =
                            reconstruct_spinor(&ctx3.rep, &SquareForm::Odd(tr), &ctx3.hermitian);
                        assert_eq!(rec.is_ok(), onsurf);
                    }
                }
            }
        }
    }

    #[test]
    fn spin_orbit_equivariance() {
        // conjugating η by an even product of unit vectors transforms the
        // bilinear square by the twisted adjoint action g⋄α⋄twist(g)
        let mut rng = ChaCha8Rng::seed_from_u64(29);
        let s = sig(4, 0);
        let ctx = SquareContext::new(s, None).unwrap();
        for _ in 0..10 {
            let mut g = Multivector::one(s);
            for _ in 0..2 {
                let raw = Multivector::random_grade(s, 1, &mut rng);
                let mut v = Multivector::from_coeffs(
                    s,
                    raw.coeffs().iter().map(|c| cx(c.re, 0.0)).collect(),
                )
                .unwrap();
                let n2 = v.metric_pairing(&v).unwrap().re;
                v = v.scale(cx(1.0 / n2.abs().sqrt(), 0.0));
                g = g.geometric_product(&v).unwrap();
            }
            let eta = ctx.rep.random_spinor(&mut rng);
            let g_eta = ctx.rep.quantize(&g) * &eta;
            let a = bilinear_square(&ctx.rep, &eta, &ctx.bilinear).unwrap();
            let a_rot = bilinear_square(&ctx.rep, &g_eta, &ctx.bilinear).unwrap();
            let twisted = g.adjoint_twist(ctx.bilinear.s);
            let expect = g
                .geometric_product(a.as_full())
                .unwrap()
                .geometric_product(&twisted)
                .unwrap();
            assert!(
                (a_rot.as_full().clone() - expect).norm_inf() < 1e-10,
                "equivariance fails"
            );
        }
        // explicit quarter rotation in the (1,2)-plane maps components
        let angle = std::f64::consts::FRAC_PI_2;
        let rot = Multivector::scalar(s, cx((angle / 2.0).cos(), 0.0))
            + Multivector::blade(s, 0b11, cx((angle / 2.0).sin(), 0.0));
        let eta = ctx.rep.random_spinor(&mut rng);
        let a = bilinear_square(&ctx.rep, &eta, &ctx.bilinear).unwrap();
        let g_eta = ctx.rep.quantize(&rot) * &eta;
        let a_rot = bilinear_square(&ctx.rep, &g_eta, &ctx.bilinear).unwrap();
        let g1 = a.as_full().grade_part(1);
        let g1_rot = a_rot.as_full().grade_part(1);
        assert!((g1_rot.coeff(0b0010) - g1.coeff(0b0001)).norm() < 1e-10);
        assert!((g1_rot.coeff(0b0001) + g1.coeff(0b0010)).norm() < 1e-10);
        assert!((g1_rot.coeff(0b0100) - g1.coeff(0b0100)).norm() < 1e-10);
    }

    #[test]
    fn killing_symbol_components_depend_on_branch() {
        // pointwise content of the d = 3 Killing system for a full complex
        // Killing number λ = λ_R + iλ_I: with 𝔞_w = iλw♭ and α̂ = r + θ,
        //   𝔞_w∨α̂ + α̂∨τ(𝔞̄_w)
        //     = −2λ_I θ(w)  −2λ_I r w♭ + 2ℓλ_R ∗(w♭∧θ),
        // so the grade-1 part carries the branch label ℓ explicitly
        let mut rng = ChaCha8Rng::seed_from_u64(31);
        let s = sig(3, 0);
        let (lr, li) = (0.7, -0.4);
        let lam = cx(lr, li);
        for ell in [1i8, -1] {
            for _ in 0..20 {
                let r: f64 = rng.gen_range(0.2..2.0);
                let real_one_form = |rng: &mut ChaCha8Rng| {
                    let raw = Multivector::random_grade(s, 1, rng);
                    Multivector::from_coeffs(
                        s,
                        raw.coeffs().iter().map(|c| cx(c.re, 0.0)).collect(),
                    )
                    .unwrap()
                };
                let theta = real_one_form(&mut rng);
                let w = real_one_form(&mut rng);
                let alpha =
                    TruncatedMultivector::new(Multivector::scalar(s, cx(r, 0.0)) + theta.clone(), ell)
                        .unwrap();
                let a_w = TruncatedMultivector::new(w.scale(cx(0.0, 1.0) * lam), ell).unwrap();
                let rhs = a_w
                    .vee(&alpha)
                    .unwrap()
                    .add(&alpha.vee(&a_w.conj().adjoint_twist(1)).unwrap())
                    .unwrap();
                // grade 0: −2λ_I θ(w)
                let theta_w = theta.metric_pairing(&w).unwrap();
                let g0 = rhs.as_multivector().scalar_part();
                assert!((g0 - theta_w * cx(-2.0 * li, 0.0)).norm() < 1e-12);
                // grade 1: −2λ_I r w♭ + 2ℓλ_R ∗(w♭∧θ)
                let g1 = rhs.as_multivector().grade_part(1);
                let expect = w.scale(cx(-2.0 * li * r, 0.0))
                    + w.wedge(&theta).unwrap().hodge_star().scale(cx(
                        2.0 * ell as f64 * lr,
                        0.0,
                    ));
                assert!(
                    (g1 - expect).norm_inf() < 1e-12,
                    "grade-1 Killing component fails for ℓ={ell}"
                );
            }
        }
        // even-dimensional analog in d = 2 with α̂ = r + θ + ifν:
        //   grade 0: −2λ_I θ(w);  grade 1: −2λ_I r w♭ − 2λ_R f ∗w♭;
        //   grade 2: 2λ_R (w♭∧θ)
        let s2 = sig(2, 0);
        for _ in 0..20 {
            let r: f64 = rng.gen_range(0.2..2.0);
            let f: f64 = rng.gen_range(-1.0..1.0);
            let raw = Multivector::random_grade(s2, 1, &mut rng);
            let theta = Multivector::from_coeffs(
                s2,
                raw.coeffs().iter().map(|c| cx(c.re, 0.0)).collect(),
            )
            .unwrap();
            let raw = Multivector::random_grade(s2, 1, &mut rng);
            let w = Multivector::from_coeffs(
                s2,
                raw.coeffs().iter().map(|c| cx(c.re, 0.0)).collect(),
            )
            .unwrap();
            let nu = Multivector::volume_form(s2);
            let alpha = Multivector::scalar(s2, cx(r, 0.0))
                + theta.clone()
                + nu.scale(cx(0.0, f));
            let a_w = w.scale(cx(0.0, 1.0) * lam);
            let rhs = a_w.geometric_product(&alpha).unwrap()
                + alpha
                    .geometric_product(&a_w.conj().adjoint_twist(1))
                    .unwrap();
            let g0 = rhs.scalar_part();
            let theta_w = theta.metric_pairing(&w).unwrap();
            assert!((g0 - theta_w * cx(-2.0 * li, 0.0)).norm() < 1e-12);
            let g1 = rhs.grade_part(1);
            let expect1 = w.scale(cx(-2.0 * li * r, 0.0))
                + w.hodge_star().scale(cx(-2.0 * lr * f, 0.0));
            assert!((g1 - expect1).norm_inf() < 1e-12);
            // the grade-2 slot of the square is i·f·ν, so the component
            // equation i(∇_wf)ν = 2iλ_R(w♭∧θ) appears with the factor i
            let g2 = rhs.grade_part(2);
            let expect2 = w.wedge(&theta).unwrap().scale(cx(0.0, 2.0 * lr));
            assert!((g2 - expect2).norm_inf() < 1e-12);
        }
    }

    #[test]
    fn kappa_family_accepted() {
        let mut rng = ChaCha8Rng::seed_from_u64(30);
        let ctx = SquareContext::new(sig(3, 1), None).unwrap();
        let eta = ctx.rep.random_spinor(&mut rng);
        for _ in 0..8 {
            let phi: f64 = rng.gen_range(0.0..std::f64::consts::TAU);
            let kappa = C64::from_polar(1.0, phi);
            let ah = hermitian_square(&ctx.rep, &eta, kappa, &ctx.hermitian).unwrap();
            let rep = check_square_axioms(
                &ah,
                SquareKind::Hermitian { kappa },
                ctx.hermitian.s,
                None,
                None,
                &mut rng,
                1e-10,
            )
            .unwrap();
            assert!(rep.verdict);
            let wrong = check_square_axioms(
                &ah,
                SquareKind::Hermitian { kappa: kappa * cx(0.0, 1.0) },
                ctx.hermitian.s,
                None,
                None,
                &mut rng,
                1e-10,
            )
            .unwrap();
            assert!(!wrong.verdict);
        }
    }
}
