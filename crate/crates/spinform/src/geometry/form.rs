//! Coordinate-component exterior forms and fields.
//!
//! A [`CoordForm`] stores the `2^d` blade coefficients of an exterior form in
//! the coordinate coframe `dx^I`. Only metric-free operations live here
//! (wedge, plain contraction, grade bookkeeping); every metric operation goes
//! through the chart's orthonormal frame.

use crate::algebra::C64;
use nalgebra::DMatrix;
use std::rc::Rc;

fn reorder_sign(a: usize, b: usize) -> f64 {
    let mut a = a >> 1;
    let mut swaps = 0u32;
    while a != 0 {
        swaps += (a & b).count_ones();
        a >>= 1;
    }
    if swaps % 2 == 0 { 1.0 } else { -1.0 }
}

/// Exterior form in coordinate components.
#[derive(Debug, Clone, PartialEq)]
pub struct CoordForm {
    dim: usize,
    coeffs: Vec<C64>,
}

impl CoordForm {
    pub fn zero(dim: usize) -> Self {
        CoordForm { dim, coeffs: vec![C64::new(0.0, 0.0); 1 << dim] }
    }

    pub fn scalar(dim: usize, c: C64) -> Self {
        let mut f = Self::zero(dim);
        f.coeffs[0] = c;
        f
    }

    pub fn from_coeffs(dim: usize, coeffs: Vec<C64>) -> Self {
        assert_eq!(coeffs.len(), 1 << dim);
        CoordForm { dim, coeffs }
    }

    /// Real one-form from covector components.
    pub fn one_form(components: &[f64]) -> Self {
        let mut f = Self::zero(components.len());
        for (i, c) in components.iter().enumerate() {
            f.coeffs[1 << i] = C64::new(*c, 0.0);
        }
        f
    }

    pub fn one_form_complex(components: &[C64]) -> Self {
        let mut f = Self::zero(components.len());
        for (i, c) in components.iter().enumerate() {
            f.coeffs[1 << i] = *c;
        }
        f
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn coeffs(&self) -> &[C64] {
        &self.coeffs
    }

    pub fn coeff(&self, mask: usize) -> C64 {
        self.coeffs[mask]
    }

    pub fn set_coeff(&mut self, mask: usize, c: C64) {
        self.coeffs[mask] = c;
    }

    pub fn scalar_part(&self) -> C64 {
        self.coeffs[0]
    }

    pub fn norm_inf(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max)
    }

    pub fn add(&self, other: &CoordForm) -> CoordForm {
        assert_eq!(self.dim, other.dim);
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        CoordForm { dim: self.dim, coeffs }
    }

    pub fn sub(&self, other: &CoordForm) -> CoordForm {
        self.add(&other.scale(C64::new(-1.0, 0.0)))
    }

    pub fn scale(&self, c: C64) -> CoordForm {
        CoordForm {
            dim: self.dim,
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    pub fn conj(&self) -> CoordForm {
        CoordForm {
            dim: self.dim,
            coeffs: self.coeffs.iter().map(|x| x.conj()).collect(),
        }
    }

    pub fn grade_part(&self, k: usize) -> CoordForm {
        let mut out = Self::zero(self.dim);
        for (mask, c) in self.coeffs.iter().enumerate() {
            if (mask as u32).count_ones() as usize == k {
                out.coeffs[mask] = *c;
            }
        }
        out
    }

    fn grade_map(&self, sign: impl Fn(usize) -> f64) -> CoordForm {
        let mut out = self.clone();
        for (mask, c) in out.coeffs.iter_mut().enumerate() {
            *c *= sign((mask as u32).count_ones() as usize);
        }
        out
    }

    pub fn parity(&self) -> CoordForm {
        self.grade_map(|k| if k % 2 == 0 { 1.0 } else { -1.0 })
    }

    pub fn reversion(&self) -> CoordForm {
        self.grade_map(|k| if (k * k.wrapping_sub(1) / 2) % 2 == 0 { 1.0 } else { -1.0 })
    }

    pub fn parity_reversion(&self) -> CoordForm {
        self.grade_map(|k| if (k * (k + 1) / 2) % 2 == 0 { 1.0 } else { -1.0 })
    }

    /// `(π^{(1−s)/2} ∘ τ)`; basis independent, so valid on coordinate
    /// components.
    pub fn adjoint_twist(&self, s: i8) -> CoordForm {
        if s == 1 { self.reversion() } else { self.parity_reversion() }
    }

    pub fn wedge(&self, other: &CoordForm) -> CoordForm {
        assert_eq!(self.dim, other.dim);
        let mut out = Self::zero(self.dim);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.norm_sqr() == 0.0 {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.norm_sqr() == 0.0 || (i & j) != 0 {
                    continue;
                }
                out.coeffs[i | j] += a * b * reorder_sign(i, j);
            }
        }
        out
    }

    /// Plain contraction `ι_{∂_i}` with a coordinate basis vector.
    pub fn interior_basis(&self, i: usize) -> CoordForm {
        let bit = 1usize << i;
        let mut out = Self::zero(self.dim);
        for (mask, c) in self.coeffs.iter().enumerate() {
            if c.norm_sqr() == 0.0 || mask & bit == 0 {
                continue;
            }
            let below = (mask & (bit - 1)) as u32;
            let sign = if below.count_ones() % 2 == 0 { 1.0 } else { -1.0 };
            out.coeffs[mask & !bit] += c * sign;
        }
        out
    }

    /// Plain contraction with a coordinate vector `w = w^μ ∂_μ`.
    pub fn interior_vec(&self, w: &[f64]) -> CoordForm {
        let mut out = Self::zero(self.dim);
        for (i, wi) in w.iter().enumerate() {
            if *wi != 0.0 {
                out = out.add(&self.interior_basis(i).scale(C64::new(*wi, 0.0)));
            }
        }
        out
    }
}

/// Determinant of the submatrix `s[rows, cols]` by Gaussian elimination.
fn minor_det(s: &DMatrix<f64>, rows: &[usize], cols: &[usize]) -> f64 {
    let k = rows.len();
    match k {
        0 => 1.0,
        1 => s[(rows[0], cols[0])],
        2 => {
            s[(rows[0], cols[0])] * s[(rows[1], cols[1])]
                - s[(rows[0], cols[1])] * s[(rows[1], cols[0])]
        }
        _ => {
            let mut m = vec![0.0f64; k * k];
            for (i, &r) in rows.iter().enumerate() {
                for (j, &c) in cols.iter().enumerate() {
                    m[i * k + j] = s[(r, c)];
                }
            }
            let mut det = 1.0;
            for col in 0..k {
                let mut piv = col;
                for r in col + 1..k {
                    if m[r * k + col].abs() > m[piv * k + col].abs() {
                        piv = r;
                    }
                }
                if m[piv * k + col] == 0.0 {
                    return 0.0;
                }
                if piv != col {
                    for j in 0..k {
                        m.swap(col * k + j, piv * k + j);
                    }
                    det = -det;
                }
                det *= m[col * k + col];
                for r in col + 1..k {
                    let f = m[r * k + col] / m[col * k + col];
                    for j in col..k {
                        m[r * k + j] -= f * m[col * k + j];
                    }
                }
            }
            det
        }
    }
}

fn bits_of(mask: usize, dim: usize) -> Vec<usize> {
    (0..dim).filter(|i| mask & (1 << i) != 0).collect()
}

/// Grade-wise metric pairing from inverse-metric minors:
/// `⟨dx^A, dx^B⟩_g = det(g⁻¹[A,B])`.
pub fn pairing_direct(ginv: &DMatrix<f64>, a: &CoordForm, b: &CoordForm) -> C64 {
    let dim = a.dim();
    let mut acc = C64::new(0.0, 0.0);
    for (mask_a, ca) in a.coeffs.iter().enumerate() {
        if ca.norm_sqr() == 0.0 {
            continue;
        }
        let rows = bits_of(mask_a, dim);
        for (mask_b, cb) in b.coeffs.iter().enumerate() {
            if cb.norm_sqr() == 0.0
                || (mask_a as u32).count_ones() != (mask_b as u32).count_ones()
            {
                continue;
            }
            let cols = bits_of(mask_b, dim);
            let det = minor_det(ginv, &rows, &cols);
            if det != 0.0 {
                acc += ca * cb * det;
            }
        }
    }
    acc
}

/// Hodge star from inverse-metric minors, smooth in the base point:
/// `∗dx^L = √|g| Σ_K det(g⁻¹[L,K]) · sign(K, K^c) dx^{K^c}`.
pub fn hodge_direct(ginv: &DMatrix<f64>, vol: f64, a: &CoordForm) -> CoordForm {
    let dim = a.dim();
    let full = (1usize << dim) - 1;
    let mut out = CoordForm::zero(dim);
    for (mask_l, cl) in a.coeffs.iter().enumerate() {
        if cl.norm_sqr() == 0.0 {
            continue;
        }
        let rows = bits_of(mask_l, dim);
        let k = rows.len();
        for mask_k in 0..=full {
            if (mask_k as u32).count_ones() as usize != k {
                continue;
            }
            let cols = bits_of(mask_k, dim);
            let det = minor_det(ginv, &rows, &cols);
            if det == 0.0 {
                continue;
            }
            let comp = full & !mask_k;
            out.coeffs[comp] += cl * (vol * det * reorder_sign(mask_k, comp));
        }
    }
    out
}

/// Transform blade coefficients under the basis change `e^μ = Σ_a S[μ][a] f^a`:
/// `new[A] = Σ_I old[I]·det(S[I,A])`.
pub fn blade_transform(s: &DMatrix<f64>, coeffs: &[C64], dim: usize) -> Vec<C64> {
    let n = 1usize << dim;
    let mut out = vec![C64::new(0.0, 0.0); n];
    for (mask_i, c) in coeffs.iter().enumerate() {
        if c.norm_sqr() == 0.0 {
            continue;
        }
        let rows = bits_of(mask_i, dim);
        let k = rows.len();
        for mask_a in 0..n {
            if (mask_a as u32).count_ones() as usize != k {
                continue;
            }
            let cols = bits_of(mask_a, dim);
            let det = minor_det(s, &rows, &cols);
            if det != 0.0 {
                out[mask_a] += c * det;
            }
        }
    }
    out
}

/// Exterior-form field: a map from chart points to coordinate-component forms.
#[derive(Clone)]
pub struct FormField {
    dim: usize,
    f: Rc<dyn Fn(&[f64]) -> CoordForm>,
}

impl FormField {
    pub fn new(dim: usize, f: impl Fn(&[f64]) -> CoordForm + 'static) -> Self {
        FormField { dim, f: Rc::new(f) }
    }

    pub fn constant(form: CoordForm) -> Self {
        let dim = form.dim();
        FormField::new(dim, move |_| form.clone())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn eval(&self, x: &[f64]) -> CoordForm {
        (self.f)(x)
    }
}

/// Scalar field on a chart.
#[derive(Clone)]
pub struct ScalarField {
    f: Rc<dyn Fn(&[f64]) -> f64>,
}

impl ScalarField {
    pub fn new(f: impl Fn(&[f64]) -> f64 + 'static) -> Self {
        ScalarField { f: Rc::new(f) }
    }

    pub fn constant(v: f64) -> Self {
        ScalarField::new(move |_| v)
    }

    pub fn eval(&self, x: &[f64]) -> f64 {
        (self.f)(x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cx(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    #[test]
    fn blade_transform_identity_and_scaling() {
        let d = 3;
        let id = DMatrix::<f64>::identity(3, 3);
        let mut f = CoordForm::zero(d);
        f.set_coeff(0b011, cx(2.0, 1.0));
        f.set_coeff(0b100, cx(-1.0, 0.0));
        let out = blade_transform(&id, f.coeffs(), d);
        assert_eq!(out, f.coeffs().to_vec());
        // e^0 = 2f^0, e^1 = 3f^1: e^0∧e^1 = 6 f^0∧f^1
        let mut s = DMatrix::<f64>::identity(3, 3);
        s[(0, 0)] = 2.0;
        s[(1, 1)] = 3.0;
        let mut g = CoordForm::zero(d);
        g.set_coeff(0b011, cx(1.0, 0.0));
        let out = blade_transform(&s, g.coeffs(), d);
        assert!((out[0b011] - cx(6.0, 0.0)).norm() < 1e-14);
    }

    #[test]
    fn blade_transform_antisymmetry() {
        // swap two basis vectors: e^0 = f^1, e^1 = f^0 flips the sign of e^01
        let mut s = DMatrix::<f64>::zeros(2, 2);
        s[(0, 1)] = 1.0;
        s[(1, 0)] = 1.0;
        let mut g = CoordForm::zero(2);
        g.set_coeff(0b11, cx(1.0, 0.0));
        let out = blade_transform(&s, g.coeffs(), 2);
        assert!((out[0b11] + cx(1.0, 0.0)).norm() < 1e-14);
    }

    #[test]
    fn interior_is_antiderivation() {
        let mut a = CoordForm::zero(3);
        a.set_coeff(0b011, cx(1.0, 0.0)); // dx0∧dx1
        let i0 = a.interior_basis(0);
        assert!((i0.coeff(0b010) - cx(1.0, 0.0)).norm() < 1e-15);
        let i1 = a.interior_basis(1);
        assert!((i1.coeff(0b001) + cx(1.0, 0.0)).norm() < 1e-15);
    }
}
