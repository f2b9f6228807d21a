//! Odd-dimensional truncated Kähler-Atiyah algebra `(∧^<V*_ℂ, ∨)`.
//!
//! For odd `d` the complex volume element `ν_ℂ = i^{q+(d−1)/2}ν` is a central
//! square root of unity, so the full algebra splits into two ideals labeled by
//! `ℓ = ±1`. Projecting the geometric product onto the ideal and truncating to
//! grades `≤ (d−1)/2` yields a unital associative product `∨` on the truncated
//! forms, carrying the branch label on values.

use super::{C64, Multivector, Signature};
use crate::error::{Error, Result};

/// `i^n` for integer `n` (handles negatives).
pub fn i_pow(n: i64) -> C64 {
    match n.rem_euclid(4) {
        0 => C64::new(1.0, 0.0),
        1 => C64::new(0.0, 1.0),
        2 => C64::new(-1.0, 0.0),
        _ => C64::new(0.0, -1.0),
    }
}

/// Complex volume element `ν_ℂ = i^{q+(d−1)/2} ν` (odd `d` only).
pub fn complex_volume(sig: Signature) -> Result<Multivector> {
    if !sig.is_odd() {
        return Err(Error::RequiresOddDimension(sig.dim()));
    }
    let exp = sig.q as i64 + ((sig.dim() as i64 - 1) / 2);
    Ok(Multivector::volume_form(sig).scale(i_pow(exp)))
}

/// Projection `P_ℓ(α) = ½(1 + ℓν_ℂ)⋄α` onto the `ℓ`-eigenbranch of `ν_ℂ`.
pub fn project_ell(a: &Multivector, ell: i8) -> Result<Multivector> {
    let nu_c = complex_volume(a.sig())?;
    let half = C64::new(0.5, 0.0);
    let shifted = nu_c.geometric_product(a)?.scale(C64::new(ell as f64, 0.0));
    Ok((a.clone() + shifted).scale(half))
}

/// Truncation `P_<`: zero out all grades above `(d−1)/2`.
pub fn project_lt(a: &Multivector) -> Multivector {
    let cut = (a.dim() - 1) / 2;
    let mut out = Multivector::zero(a.sig());
    for mask in 0..a.sig().basis_count() {
        if (mask as u32).count_ones() as usize <= cut {
            out.set_coeff(mask, a.coeff(mask));
        }
    }
    out
}

/// Element of `∧^<V*_ℂ` tagged with the branch label `ℓ`.
#[derive(Debug, Clone, PartialEq)]
pub struct TruncatedMultivector {
    mv: Multivector,
    ell: i8,
}

impl TruncatedMultivector {
    pub fn new(mv: Multivector, ell: i8) -> Result<Self> {
        if !mv.sig().is_odd() {
            return Err(Error::RequiresOddDimension(mv.dim()));
        }
        if ell != 1 && ell != -1 {
            return Err(Error::InvalidParameter("ℓ must be ±1".into()));
        }
        let cut = (mv.dim() - 1) / 2;
        if let Some(top) = mv.top_grade(0.0) {
            if top > cut {
                return Err(Error::GradeOverflow);
            }
        }
        Ok(TruncatedMultivector { mv, ell })
    }

    /// Truncate a full multivector (drops high grades without projection).
    pub fn truncate(mv: &Multivector, ell: i8) -> Result<Self> {
        Self::new(project_lt(mv), ell)
    }

    pub fn zero(sig: Signature, ell: i8) -> Result<Self> {
        Self::new(Multivector::zero(sig), ell)
    }

    pub fn one(sig: Signature, ell: i8) -> Result<Self> {
        Self::new(Multivector::one(sig), ell)
    }

    pub fn as_multivector(&self) -> &Multivector {
        &self.mv
    }

    pub fn into_multivector(self) -> Multivector {
        self.mv
    }

    pub fn ell(&self) -> i8 {
        self.ell
    }

    pub fn sig(&self) -> Signature {
        self.mv.sig()
    }

    pub fn scalar_part(&self) -> C64 {
        self.mv.scalar_part()
    }

    pub fn norm_inf(&self) -> f64 {
        self.mv.norm_inf()
    }

    pub fn conj(&self) -> Self {
        TruncatedMultivector { mv: self.mv.conj(), ell: self.ell }
    }

    pub fn scale(&self, c: C64) -> Self {
        TruncatedMultivector { mv: self.mv.scale(c), ell: self.ell }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.ell != other.ell {
            return Err(Error::BranchMismatch(self.ell, other.ell));
        }
        Ok(TruncatedMultivector { mv: self.mv.clone() + other.mv.clone(), ell: self.ell })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(C64::new(-1.0, 0.0)))
    }

    pub fn adjoint_twist(&self, s: i8) -> Self {
        TruncatedMultivector { mv: self.mv.adjoint_twist(s), ell: self.ell }
    }

    /// Truncated geometric product `α∨β = 2P_<(P_ℓ(α⋄β))`.
    pub fn vee(&self, other: &Self) -> Result<Self> {
        if self.ell != other.ell {
            return Err(Error::BranchMismatch(self.ell, other.ell));
        }
        let full = self.mv.geometric_product(&other.mv)?;
        let proj = project_ell(&full, self.ell)?;
        Ok(TruncatedMultivector {
            mv: project_lt(&proj).scale(C64::new(2.0, 0.0)),
            ell: self.ell,
        })
    }

    /// Alternative presentation `α∨β = P_<(α⋄β + i^{q+(d−1)/2} ℓ ∗τ(α⋄β))`.
    pub fn vee_via_star(&self, other: &Self) -> Result<Self> {
        if self.ell != other.ell {
            return Err(Error::BranchMismatch(self.ell, other.ell));
        }
        let sig = self.sig();
        let full = self.mv.geometric_product(&other.mv)?;
        let exp = sig.q as i64 + ((sig.dim() as i64 - 1) / 2);
        let twist = full
            .reversion()
            .hodge_star()
            .scale(i_pow(exp) * C64::new(self.ell as f64, 0.0));
        Ok(TruncatedMultivector { mv: project_lt(&(full + twist)), ell: self.ell })
    }
}
