//! Derivatives of fields and residuals of the first-order parallel-square
//! systems and second-order field equations.

use super::form::{CoordForm, FormField, ScalarField};
use super::{MetricChart, RMat, central_diff4, central_diff4_second};
use crate::algebra::C64;
use crate::error::Result;
use std::rc::Rc;

fn cx(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

/// Fourth-order partial derivative `∂_μ` of a form field's components.
pub fn partial_form(field: &FormField, x: &[f64], mu: usize, h: f64) -> CoordForm {
    let eval = |dh: f64| {
        let mut y = x.to_vec();
        y[mu] += dh;
        field.eval(&y)
    };
    let p2 = eval(2.0 * h);
    let p1 = eval(h);
    let m1 = eval(-h);
    let m2 = eval(-2.0 * h);
    p2.scale(cx(-1.0 / (12.0 * h), 0.0))
        .add(&p1.scale(cx(8.0 / (12.0 * h), 0.0)))
        .add(&m1.scale(cx(-8.0 / (12.0 * h), 0.0)))
        .add(&m2.scale(cx(1.0 / (12.0 * h), 0.0)))
}

/// Exterior derivative `dα = Σ_μ dx^μ ∧ ∂_μ α` of a form field.
pub fn exterior_derivative(field: &FormField, chart: &MetricChart, x: &[f64]) -> CoordForm {
    let d = chart.dim();
    let mut out = CoordForm::zero(d);
    for mu in 0..d {
        let mut dxmu = CoordForm::zero(d);
        dxmu.set_coeff(1 << mu, cx(1.0, 0.0));
        out = out.add(&dxmu.wedge(&partial_form(field, x, mu, chart.fd_step)));
    }
    out
}

/// Replace basis index `r` by `lam` inside the blade `mask`, returning the
/// resorted mask and permutation sign, or `None` if `lam` already occurs.
fn replace_index(mask: usize, r: usize, lam: usize) -> Option<(usize, f64)> {
    if lam == r {
        return Some((mask, 1.0));
    }
    if mask & (1 << lam) != 0 {
        return None;
    }
    let new_mask = (mask & !(1 << r)) | (1 << lam);
    let (lo, hi) = if r < lam { (r, lam) } else { (lam, r) };
    let between = mask & !(1 << r) & (((1usize << hi) - 1) & !((1usize << (lo + 1)) - 1));
    let sign = if (between as u32).count_ones() % 2 == 0 { 1.0 } else { -1.0 };
    Some((new_mask, sign))
}

/// Levi-Civita covariant derivative `∇_{∂μ} α` of a form field at `x`, in
/// coordinate components.
pub fn covariant_derivative(
    field: &FormField,
    chart: &MetricChart,
    x: &[f64],
    mu: usize,
) -> CoordForm {
    let d = chart.dim();
    let gamma = chart.christoffel(x);
    let a = field.eval(x);
    let mut out = partial_form(field, x, mu, chart.fd_step);
    for mask in 0..(1usize << d) {
        for r in 0..d {
            if mask & (1 << r) == 0 {
                continue;
            }
            for lam in 0..d {
                let g = gamma[lam][(mu, r)];
                if g == 0.0 {
                    continue;
                }
                if let Some((src_mask, sign)) = replace_index(mask, r, lam) {
                    let c = a.coeff(src_mask);
                    if c.norm_sqr() > 0.0 {
                        let old = out.coeff(mask);
                        out.set_coeff(mask, old - c * cx(g * sign, 0.0));
                    }
                }
            }
        }
    }
    out
}

/// Covariant derivative along a coordinate vector `w`.
pub fn covariant_derivative_vec(
    field: &FormField,
    chart: &MetricChart,
    x: &[f64],
    w: &[f64],
) -> CoordForm {
    let mut out = CoordForm::zero(chart.dim());
    for (mu, wmu) in w.iter().enumerate() {
        if *wmu != 0.0 {
            out = out.add(&covariant_derivative(field, chart, x, mu).scale(cx(*wmu, 0.0)));
        }
    }
    out
}

/// Hessian `∇df` of a scalar field: `∂²f − Γ^λ ∂_λ f`.
pub fn hessian_scalar(field: &ScalarField, chart: &MetricChart, x: &[f64]) -> RMat {
    let d = chart.dim();
    let h = chart.fd_step_curv;
    let gamma = chart.christoffel(x);
    let grad: Vec<f64> = (0..d)
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
        .collect();
    let mut out = RMat::zeros(d, d);
    for mu in 0..d {
        for nu in mu..d {
            let second = if mu == nu {
                central_diff4_second(
                    |dh| {
                        let mut y = x.to_vec();
                        y[mu] += dh;
                        field.eval(&y)
                    },
                    h,
                )
            } else {
                central_diff4(
                    |du| {
                        central_diff4(
                            |dv| {
                                let mut y = x.to_vec();
                                y[mu] += du;
                                y[nu] += dv;
                                field.eval(&y)
                            },
                            h,
                        )
                    },
                    h,
                )
            };
            let mut v = second;
            for lam in 0..d {
                v -= gamma[lam][(mu, nu)] * grad[lam];
            }
            out[(mu, nu)] = v;
            out[(nu, mu)] = v;
        }
    }
    out
}

/// Positive Laplacian `Δf = ∇^{g∗}df = −Tr_g(∇df)`.
pub fn laplacian_scalar(field: &ScalarField, chart: &MetricChart, x: &[f64]) -> f64 {
    let hess = hessian_scalar(field, chart, x);
    let ginv = chart.metric_inv(x);
    -(ginv * hess).trace()
}

/// `∇^{g∗}β = −g^{μν}(∇_μ β)_ν` for a one-form field.
pub fn nabla_star_one_form(field: &FormField, chart: &MetricChart, x: &[f64]) -> C64 {
    let d = chart.dim();
    let ginv = chart.metric_inv(x);
    let mut acc = cx(0.0, 0.0);
    for mu in 0..d {
        let nab = covariant_derivative(field, chart, x, mu);
        for nu in 0..d {
            acc -= nab.coeff(1 << nu) * ginv[(mu, nu)];
        }
    }
    acc
}

/// `(∇^{g∗}F)_k = −g^{μν}(∇_μ F)_{νk}` for a two-form field.
pub fn nabla_star_two_form(field: &FormField, chart: &MetricChart, x: &[f64]) -> CoordForm {
    let d = chart.dim();
    let ginv = chart.metric_inv(x);
    let mut out = CoordForm::zero(d);
    for mu in 0..d {
        let nab = covariant_derivative(field, chart, x, mu);
        for nu in 0..d {
            if ginv[(mu, nu)] == 0.0 {
                continue;
            }
            // (∇_μF)(∂_ν, ·) as a one-form
            let contracted = nab.interior_basis(nu);
            out = out.add(&contracted.scale(cx(-ginv[(mu, nu)], 0.0)));
        }
    }
    out
}

/// Symmetric product `(α∘_g β)(∂_μ,∂_ν) = ⟨ι_{∂μ}α, ι_{∂ν}β⟩_g` of two equal-
/// grade forms, as a matrix of coordinate components.
pub fn circ_product(
    chart: &MetricChart,
    x: &[f64],
    a: &CoordForm,
    b: &CoordForm,
) -> Result<RMat> {
    let d = chart.dim();
    let mut out = RMat::zeros(d, d);
    let a_contr: Vec<CoordForm> = (0..d).map(|m| a.interior_basis(m)).collect();
    let b_contr: Vec<CoordForm> = (0..d).map(|m| b.interior_basis(m)).collect();
    for mu in 0..d {
        for nu in 0..d {
            out[(mu, nu)] = chart.pairing_at(x, &a_contr[mu], &b_contr[nu])?.re;
        }
    }
    Ok(out)
}

/// Serializable per-point residual record:
/// `{chart, point, residuals{…}, tol, pass}`.
#[derive(Debug, Clone, serde::Serialize)]
pub struct PointResidual {
    pub chart: String,
    pub point: Vec<f64>,
    pub residuals: std::collections::BTreeMap<String, f64>,
    pub tol: f64,
    pub pass: bool,
}

impl PointResidual {
    pub fn new(
        chart: &MetricChart,
        point: &[f64],
        residuals: std::collections::BTreeMap<String, f64>,
        tol: f64,
    ) -> Self {
        let pass = residuals.values().all(|v| v.is_finite() && *v <= tol);
        PointResidual { chart: chart.name.clone(), point: point.to_vec(), residuals, tol, pass }
    }
}

/// Residuals of the Einstein-Maxwell system with cosmological constant.
#[derive(Debug, Clone)]
pub struct EinsteinMaxwellResidual {
    /// Max-norm of `Ric − ½s·g − Λg − 𝔢²F∘F + (𝔢²/2)|F|²g`.
    pub einstein: f64,
    /// Max-norm of `d∗_gF`.
    pub maxwell: f64,
    /// Max-norm of `dF` (closure precondition).
    pub closure: f64,
}

impl EinsteinMaxwellResidual {
    pub fn max(&self) -> f64 {
        self.einstein.max(self.maxwell).max(self.closure)
    }
}

pub fn einstein_maxwell_residual(
    chart: &MetricChart,
    f_a: &FormField,
    lambda: f64,
    e: f64,
    x: &[f64],
) -> Result<EinsteinMaxwellResidual> {
    let g = chart.metric(x);
    let ric = chart.ricci(x);
    let s = (chart.metric_inv(x) * &ric).trace();
    let f = f_a.eval(x);
    let ff = circ_product(chart, x, &f, &f)?;
    let fnorm2 = chart.pairing_at(x, &f, &f)?.re;
    let resid = &ric - &g * (0.5 * s) - &g * lambda - &ff * (e * e)
        + &g * (0.5 * e * e * fnorm2);
    let einstein = resid.amax();

    let chart_c = chart.clone();
    let f_c = f_a.clone();
    let star_f = FormField::new(chart.dim(), move |y| {
        chart_c.hodge_at(y, &f_c.eval(y)).expect("hodge on chart domain")
    });
    let maxwell = exterior_derivative(&star_f, chart, x).norm_inf();
    let closure = exterior_derivative(f_a, chart, x).norm_inf();
    Ok(EinsteinMaxwellResidual { einstein, maxwell, closure })
}

/// Residuals of the six-dimensional system `Ric = ½H∘H`, `∗H = μH`.
#[derive(Debug, Clone)]
pub struct Sugra6dResidual {
    pub einstein: f64,
    pub selfdual: f64,
    /// Max-norm of `dH`.
    pub closure: f64,
}

impl Sugra6dResidual {
    pub fn max(&self) -> f64 {
        self.einstein.max(self.selfdual).max(self.closure)
    }
}

pub fn sugra6d_residual(
    chart: &MetricChart,
    h_field: &FormField,
    mu: i8,
    x: &[f64],
) -> Result<Sugra6dResidual> {
    let ric = chart.ricci(x);
    let h = h_field.eval(x);
    let hh = circ_product(chart, x, &h, &h)?;
    let einstein = (&ric - &hh * 0.5).amax();
    let star_h = chart.hodge_at(x, &h)?;
    let selfdual = star_h.sub(&h.scale(cx(mu as f64, 0.0))).norm_inf();
    let closure = exterior_derivative(h_field, chart, x).norm_inf();
    Ok(Sugra6dResidual { einstein, selfdual, closure })
}

/// One-form-valued symbol `𝔞`: direction `μ` at `x` gives an exterior form.
#[derive(Clone)]
pub struct SymbolField {
    dim: usize,
    f: Rc<dyn Fn(&[f64], usize) -> CoordForm>,
}

impl SymbolField {
    pub fn new(dim: usize, f: impl Fn(&[f64], usize) -> CoordForm + 'static) -> Self {
        SymbolField { dim, f: Rc::new(f) }
    }

    /// The zero symbol (plain parallelism).
    pub fn zero(dim: usize) -> Self {
        SymbolField::new(dim, move |_, _| CoordForm::zero(dim))
    }

    /// Killing symbol `𝔞_w = iλ w^♭` for a complex Killing number `λ`.
    pub fn killing(chart: &MetricChart, lambda: C64) -> Self {
        let chart = chart.clone();
        SymbolField::new(chart.dim(), move |x, mu| {
            let g = chart.metric(x);
            let d = chart.dim();
            let comps: Vec<C64> = (0..d).map(|nu| cx(0.0, 1.0) * lambda * g[(mu, nu)]).collect();
            CoordForm::one_form_complex(&comps)
        })
    }

    /// Skew-torsion symbol `4𝔞_w = −H(w)`.
    pub fn skew_torsion(h_field: &FormField) -> Self {
        let h = h_field.clone();
        SymbolField::new(h.dim(), move |x, mu| {
            h.eval(x).interior_basis(mu).scale(cx(-0.25, 0.0))
        })
    }

    pub fn eval(&self, x: &[f64], mu: usize) -> CoordForm {
        (self.f)(x, mu)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }
}

/// Residuals of the first-order parallel-square system
/// `∇_{∂μ}α = 𝔞_μ⋄α + α⋄(π^{(1−s)/2}∘τ)(𝔞̄_μ)` (the symbol is conjugated for
/// Hermitian squares, unconjugated for bilinear ones; `∨` replaces `⋄` on odd
/// charts) plus the constraints `𝔮⋄α = 0`.
pub struct ParallelSquareArgs<'a> {
    pub alpha: &'a FormField,
    pub symbol: &'a SymbolField,
    pub constraints: &'a [FormField],
    /// Adjoint type of the pairing behind the square.
    pub s: i8,
    /// Conjugate the symbol on the right (Hermitian squares).
    pub conjugate: bool,
    /// Branch label for odd-dimensional charts.
    pub ell: Option<i8>,
    /// Also report residuals wedged with this one-form (quotients the
    /// `(·)∧u` ambiguity of gauge-dependent components).
    pub modulo: Option<&'a FormField>,
}

#[derive(Debug, Clone)]
pub struct ParallelSquareReport {
    /// `‖∇_μα − rhs‖∞` per coordinate direction.
    pub directions: Vec<f64>,
    /// Per-direction, per-grade residual norms.
    pub per_grade: Vec<Vec<f64>>,
    /// `‖(∇_μα − rhs)∧u‖∞` when a quotient one-form was supplied.
    pub directions_mod: Option<Vec<f64>>,
    /// `‖𝔮_i⋄α‖∞` per supplied constraint.
    pub constraints: Vec<f64>,
}

impl ParallelSquareReport {
    pub fn max_direction(&self) -> f64 {
        self.directions.iter().cloned().fold(0.0, f64::max)
    }

    pub fn max_constraint(&self) -> f64 {
        self.constraints.iter().cloned().fold(0.0, f64::max)
    }

    pub fn max(&self) -> f64 {
        self.max_direction().max(self.max_constraint())
    }
}

pub fn parallel_square_residual(
    chart: &MetricChart,
    x: &[f64],
    args: &ParallelSquareArgs,
) -> Result<ParallelSquareReport> {
    let d = chart.dim();
    let alpha_x = args.alpha.eval(x);
    let prod = |a: &CoordForm, b: &CoordForm| -> Result<CoordForm> {
        match args.ell {
            None => chart.diamond_at(x, a, b),
            Some(l) => chart.vee_at(x, a, b, l),
        }
    };
    let mut directions = Vec::with_capacity(d);
    let mut per_grade = Vec::with_capacity(d);
    let mut directions_mod = args.modulo.map(|_| Vec::with_capacity(d));
    for mu in 0..d {
        let lhs = covariant_derivative(args.alpha, chart, x, mu);
        let a_mu = args.symbol.eval(x, mu);
        let right_arg = if args.conjugate {
            a_mu.conj().adjoint_twist(args.s)
        } else {
            a_mu.adjoint_twist(args.s)
        };
        let rhs = prod(&a_mu, &alpha_x)?.add(&prod(&alpha_x, &right_arg)?);
        let resid = lhs.sub(&rhs);
        directions.push(resid.norm_inf());
        per_grade.push((0..=d).map(|k| resid.grade_part(k).norm_inf()).collect());
        if let Some(list) = directions_mod.as_mut() {
            let u = args.modulo.unwrap().eval(x);
            list.push(resid.wedge(&u).norm_inf());
        }
    }
    let mut constraints = Vec::new();
    for q in args.constraints {
        constraints.push(prod(&q.eval(x), &alpha_x)?.norm_inf());
    }
    Ok(ParallelSquareReport { directions, per_grade, directions_mod, constraints })
}
