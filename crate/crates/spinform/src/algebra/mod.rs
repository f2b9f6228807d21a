//! Dense multivector arithmetic for the complexified Kähler-Atiyah algebra
//! `(∧V*_ℂ, ⋄)` of a quadratic space of signature `(p,q)`, `d = p+q ≤ 8`.
//!
//! Coefficients are indexed by blade bitmask: bit `i` set means the basis
//! one-form `e^{i+1}` is present. The basis is orthonormal with
//! `e^i ⋄ e^i = ε_i`, where `ε_i = +1` for `i ≤ p` and `−1` for `i > p`.
//! The geometric product on one-forms is `θ⋄α = θ∧α + ι_{θ♯}α`, with the
//! musical isomorphism weighted by the basis squares
//! (`ι_{(e^i)♯} = ε_i ι_{e_i}`), so that `θ⋄θ = h*(θ,θ)` in every signature.

pub mod truncated;

pub use truncated::TruncatedMultivector;

use crate::error::{Error, Result};
use num_complex::Complex64;
use rand::Rng;
use serde::{Deserialize, Serialize};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

pub type C64 = Complex64;

/// Metric signature `(p,q)` with an orientation choice for the volume form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Signature {
    pub p: u8,
    pub q: u8,
    /// ±1, the sign of `ν` relative to `e^1∧…∧e^d`.
    pub orientation: i8,
}

impl Signature {
    pub fn new(p: u8, q: u8) -> Result<Self> {
        Self::with_orientation(p, q, 1)
    }

    pub fn with_orientation(p: u8, q: u8, orientation: i8) -> Result<Self> {
        let d = p as usize + q as usize;
        if d == 0 || d > 8 {
            return Err(Error::InvalidSignature { p, q });
        }
        if orientation != 1 && orientation != -1 {
            return Err(Error::InvalidParameter("orientation must be ±1".into()));
        }
        Ok(Signature { p, q, orientation })
    }

    pub fn dim(&self) -> usize {
        self.p as usize + self.q as usize
    }

    /// Square of the `i`-th basis one-form (0-based index).
    pub fn eps(&self, i: usize) -> f64 {
        debug_assert!(i < self.dim());
        if i < self.p as usize {
            1.0
        } else {
            -1.0
        }
    }

    /// Product of basis squares over a blade mask.
    pub fn eps_mask(&self, mask: usize) -> f64 {
        let timelike = mask >> self.p as usize;
        if (timelike as u32).count_ones() % 2 == 0 {
            1.0
        } else {
            -1.0
        }
    }

    pub fn is_odd(&self) -> bool {
        self.dim() % 2 == 1
    }

    pub fn basis_count(&self) -> usize {
        1 << self.dim()
    }

    fn check_match(&self, other: &Signature) -> Result<()> {
        if self.p != other.p || self.q != other.q {
            return Err(Error::SignatureMismatch(self.p, self.q, other.p, other.q));
        }
        Ok(())
    }
}

/// Reordering sign of the Clifford basis product `e_I · e_J` (ascending bases).
fn reorder_sign(a: usize, b: usize) -> f64 {
    let mut a = a >> 1;
    let mut swaps = 0u32;
    while a != 0 {
        swaps += (a & b).count_ones();
        a >>= 1;
    }
    if swaps % 2 == 0 {
        1.0
    } else {
        -1.0
    }
}

/// Dense complex multivector over the `2^d` blade basis.
#[derive(Clone, PartialEq)]
pub struct Multivector {
    sig: Signature,
    coeffs: Vec<C64>,
}

impl fmt::Debug for Multivector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Multivector(p={},q={};", self.sig.p, self.sig.q)?;
        let mut first = true;
        for (mask, c) in self.coeffs.iter().enumerate() {
            if c.norm() > 1e-14 {
                if !first {
                    write!(f, " +")?;
                }
                first = false;
                write!(f, " ({:.4}{:+.4}i)*", c.re, c.im)?;
                if mask == 0 {
                    write!(f, "1")?;
                } else {
                    for i in 0..self.sig.dim() {
                        if mask & (1 << i) != 0 {
                            write!(f, "e{}", i + 1)?;
                        }
                    }
                }
            }
        }
        if first {
            write!(f, " 0")?;
        }
        write!(f, ")")
    }
}

impl Multivector {
    pub fn zero(sig: Signature) -> Self {
        Multivector {
            sig,
            coeffs: vec![C64::new(0.0, 0.0); sig.basis_count()],
        }
    }

    pub fn scalar(sig: Signature, value: C64) -> Self {
        let mut mv = Self::zero(sig);
        mv.coeffs[0] = value;
        mv
    }

    pub fn one(sig: Signature) -> Self {
        Self::scalar(sig, C64::new(1.0, 0.0))
    }

    /// Single blade `c · e^{i1}∧…∧e^{ik}` given by its bitmask.
    pub fn blade(sig: Signature, mask: usize, c: C64) -> Self {
        assert!(mask < sig.basis_count(), "blade mask out of range");
        let mut mv = Self::zero(sig);
        mv.coeffs[mask] = c;
        mv
    }

    /// Basis one-form `e^{i+1}` (0-based `i`).
    pub fn basis_one_form(sig: Signature, i: usize) -> Self {
        Self::blade(sig, 1 << i, C64::new(1.0, 0.0))
    }

    pub fn from_coeffs(sig: Signature, coeffs: Vec<C64>) -> Result<Self> {
        if coeffs.len() != sig.basis_count() {
            return Err(Error::InvalidParameter(format!(
                "expected {} coefficients, got {}",
                sig.basis_count(),
                coeffs.len()
            )));
        }
        Ok(Multivector { sig, coeffs })
    }

    /// Oriented volume form `ν`.
    pub fn volume_form(sig: Signature) -> Self {
        let full = sig.basis_count() - 1;
        Self::blade(sig, full, C64::new(sig.orientation as f64, 0.0))
    }

    pub fn sig(&self) -> Signature {
        self.sig
    }

    pub fn dim(&self) -> usize {
        self.sig.dim()
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

    /// Degree-zero component `α^{(0)}`.
    pub fn scalar_part(&self) -> C64 {
        self.coeffs[0]
    }

    pub fn grade_part(&self, k: usize) -> Self {
        let mut out = Self::zero(self.sig);
        for (mask, c) in self.coeffs.iter().enumerate() {
            if (mask as u32).count_ones() as usize == k {
                out.coeffs[mask] = *c;
            }
        }
        out
    }

    /// Largest grade with a coefficient above `tol` in magnitude, if any.
    pub fn top_grade(&self, tol: f64) -> Option<usize> {
        let mut top = None;
        for (mask, c) in self.coeffs.iter().enumerate() {
            if c.norm() > tol {
                let g = (mask as u32).count_ones() as usize;
                top = Some(top.map_or(g, |t: usize| t.max(g)));
            }
        }
        top
    }

    pub fn conj(&self) -> Self {
        let coeffs = self.coeffs.iter().map(|c| c.conj()).collect();
        Multivector { sig: self.sig, coeffs }
    }

    pub fn norm_inf(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max)
    }

    pub fn norm_l2(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn scale(&self, c: C64) -> Self {
        let coeffs = self.coeffs.iter().map(|x| x * c).collect();
        Multivector { sig: self.sig, coeffs }
    }

    /// Grade-k part scaled by `(−1)^k` (parity automorphism `π`).
    pub fn parity(&self) -> Self {
        self.grade_map(|k| if k % 2 == 0 { 1.0 } else { -1.0 })
    }

    /// Grade-k part scaled by `(−1)^{k(k−1)/2}` (reversion `τ`).
    pub fn reversion(&self) -> Self {
        self.grade_map(|k| if (k * (k.wrapping_sub(1)) / 2) % 2 == 0 { 1.0 } else { -1.0 })
    }

    /// `π∘τ`: grade-k part scaled by `(−1)^{k(k+1)/2}`.
    pub fn parity_reversion(&self) -> Self {
        self.grade_map(|k| if (k * (k + 1) / 2) % 2 == 0 { 1.0 } else { -1.0 })
    }

    /// `(π^{(1−s)/2} ∘ τ)`: the pairing transpose twist of adjoint type `s`.
    pub fn adjoint_twist(&self, s: i8) -> Self {
        if s == 1 {
            self.reversion()
        } else {
            self.parity_reversion()
        }
    }

    fn grade_map(&self, sign: impl Fn(usize) -> f64) -> Self {
        let mut out = self.clone();
        for (mask, c) in out.coeffs.iter_mut().enumerate() {
            let k = (mask as u32).count_ones() as usize;
            *c *= sign(k);
        }
        out
    }

    /// Exterior product.
    pub fn wedge(&self, other: &Multivector) -> Result<Multivector> {
        self.sig.check_match(&other.sig)?;
        let mut out = Self::zero(self.sig);
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
        Ok(out)
    }

    /// Unweighted interior product `ι_{e_i}` with the `i`-th basis vector.
    pub fn interior_basis(&self, i: usize) -> Multivector {
        let bit = 1usize << i;
        let mut out = Self::zero(self.sig);
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

    /// Metric interior product `ι_{θ♯}` with a one-form `θ` (ε-weighted).
    pub fn interior_sharp(&self, theta: &Multivector) -> Result<Multivector> {
        self.sig.check_match(&theta.sig)?;
        let mut out = Self::zero(self.sig);
        for i in 0..self.dim() {
            let t = theta.coeffs[1 << i];
            if t.norm_sqr() == 0.0 {
                continue;
            }
            out = out + self.interior_basis(i).scale(t * self.sig.eps(i));
        }
        Ok(out)
    }

    /// Geometric product `⋄`.
    pub fn geometric_product(&self, other: &Multivector) -> Result<Multivector> {
        self.sig.check_match(&other.sig)?;
        let mut out = Self::zero(self.sig);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.norm_sqr() == 0.0 {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.norm_sqr() == 0.0 {
                    continue;
                }
                let eps = self.sig.eps_mask(i & j);
                out.coeffs[i ^ j] += a * b * (reorder_sign(i, j) * eps);
            }
        }
        Ok(out)
    }

    /// Generalized product `△ₖ`, the grade-`(a+b−2k)` contraction of the
    /// graded expansion of `⋄`.
    pub fn generalized_product(&self, other: &Multivector, k: usize) -> Result<Multivector> {
        self.sig.check_match(&other.sig)?;
        let d = self.dim();
        if k > d {
            return Err(Error::GradeOutOfRange(k, d));
        }
        if k == 0 {
            return self.wedge(other);
        }
        let mut out = Self::zero(self.sig);
        let mut indices: Vec<usize> = (0..k).collect();
        loop {
            let mut eps = 1.0;
            let mut a = self.clone();
            let mut b = other.clone();
            for &i in indices.iter().rev() {
                eps *= self.sig.eps(i);
                a = a.interior_basis(i);
                b = b.interior_basis(i);
            }
            if a.norm_inf() > 0.0 && b.norm_inf() > 0.0 {
                out = out + a.wedge(&b)?.scale(C64::new(eps, 0.0));
            }
            // next k-combination of {0..d}
            let mut pos = k;
            loop {
                if pos == 0 {
                    return Ok(out);
                }
                pos -= 1;
                if indices[pos] != pos + d - k {
                    indices[pos] += 1;
                    for t in pos + 1..k {
                        indices[t] = indices[t - 1] + 1;
                    }
                    break;
                }
            }
        }
    }

    /// Sum of the signed generalized products; equals `⋄` and serves as an
    /// independent oracle for it.
    pub fn graded_expansion_product(&self, other: &Multivector) -> Result<Multivector> {
        self.sig.check_match(&other.sig)?;
        let d = self.dim();
        let mut out = Self::zero(self.sig);
        for j in 0..=d {
            let aj = self.grade_part(j);
            if aj.norm_inf() == 0.0 {
                continue;
            }
            for k in 0..=d {
                let sign = if ((k + 1) * k / 2 + j * k) % 2 == 0 { 1.0 } else { -1.0 };
                let term = aj.generalized_product(other, k)?;
                out = out + term.scale(C64::new(sign, 0.0));
            }
        }
        Ok(out)
    }

    /// Bilinear grade-wise metric pairing `⟨α,β⟩` extending `h*`.
    pub fn metric_pairing(&self, other: &Multivector) -> Result<C64> {
        self.sig.check_match(&other.sig)?;
        let mut acc = C64::new(0.0, 0.0);
        for (mask, a) in self.coeffs.iter().enumerate() {
            let b = other.coeffs[mask];
            if a.norm_sqr() == 0.0 || b.norm_sqr() == 0.0 {
                continue;
            }
            acc += a * b * self.sig.eps_mask(mask);
        }
        Ok(acc)
    }

    /// Hodge star defined by `α∧(∗β) = ⟨α,β⟩ν`.
    pub fn hodge_star(&self) -> Multivector {
        let full = self.sig.basis_count() - 1;
        let orient = self.sig.orientation as f64;
        let mut out = Self::zero(self.sig);
        for (mask, c) in self.coeffs.iter().enumerate() {
            if c.norm_sqr() == 0.0 {
                continue;
            }
            let comp = full & !mask;
            let sign = self.sig.eps_mask(mask) * reorder_sign(mask, comp) * orient;
            out.coeffs[comp] += c * sign;
        }
        out
    }

    /// Uniform random multivector with coefficients in the unit square.
    pub fn random(sig: Signature, rng: &mut impl Rng) -> Self {
        let coeffs = (0..sig.basis_count())
            .map(|_| C64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
            .collect();
        Multivector { sig, coeffs }
    }

    /// Random homogeneous element of grade `k`.
    pub fn random_grade(sig: Signature, k: usize, rng: &mut impl Rng) -> Self {
        let mut mv = Self::zero(sig);
        for mask in 0..sig.basis_count() {
            if (mask as u32).count_ones() as usize == k {
                mv.coeffs[mask] = C64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
            }
        }
        mv
    }
}

impl Add for Multivector {
    type Output = Multivector;
    fn add(mut self, rhs: Multivector) -> Multivector {
        assert_eq!(self.sig, rhs.sig, "signature mismatch in +");
        for (a, b) in self.coeffs.iter_mut().zip(rhs.coeffs) {
            *a += b;
        }
        self
    }
}

impl Sub for Multivector {
    type Output = Multivector;
    fn sub(mut self, rhs: Multivector) -> Multivector {
        assert_eq!(self.sig, rhs.sig, "signature mismatch in -");
        for (a, b) in self.coeffs.iter_mut().zip(rhs.coeffs) {
            *a -= b;
        }
        self
    }
}

impl Neg for Multivector {
    type Output = Multivector;
    fn neg(self) -> Multivector {
        self.scale(C64::new(-1.0, 0.0))
    }
}

impl Mul<f64> for Multivector {
    type Output = Multivector;
    fn mul(self, rhs: f64) -> Multivector {
        self.scale(C64::new(rhs, 0.0))
    }
}

/// Serialization shape `{dim, p, q, coeffs: [[re, im], …]}` in bitmask order.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MultivectorJson {
    pub dim: usize,
    pub p: u8,
    pub q: u8,
    pub coeffs: Vec<[f64; 2]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ell: Option<i8>,
}

impl From<&Multivector> for MultivectorJson {
    fn from(mv: &Multivector) -> Self {
        MultivectorJson {
            dim: mv.dim(),
            p: mv.sig.p,
            q: mv.sig.q,
            coeffs: mv.coeffs.iter().map(|c| [c.re, c.im]).collect(),
            ell: None,
        }
    }
}

impl From<&truncated::TruncatedMultivector> for MultivectorJson {
    fn from(tv: &truncated::TruncatedMultivector) -> Self {
        let mut json = MultivectorJson::from(tv.as_multivector());
        json.ell = Some(tv.ell());
        json
    }
}
