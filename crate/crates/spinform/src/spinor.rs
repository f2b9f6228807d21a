//! Concrete irreducible Clifford modules.
//!
//! Gamma matrices are built by the iterated 2×2 tensor recursion
//! (Jordan-Wigner ladder), with timelike generators obtained by multiplying a
//! Euclidean generator by `i`. For odd `d` the last generator is proportional
//! to the product of the first `d−1`, with the constant fixed by
//! `γ(ν_ℂ) = ℓ·Id`.
//!
//! Quantization sends the blade `e^{i1}∧…∧e^{ik}` (ascending indices of an
//! orthonormal basis) to `γ_{i1}⋯γ_{ik}`; for odd `d` the truncated algebra
//! quantizes through the same map restricted to grades `≤ (d−1)/2`, which is
//! an algebra isomorphism from `(∧^<, ∨)`. Dequantization inverts the linear
//! map once per representation.

use crate::algebra::truncated::{complex_volume, i_pow};
use crate::algebra::{C64, Multivector, Signature, TruncatedMultivector};
use crate::error::{Error, Result};
use nalgebra::{DMatrix, DVector};
use rand::Rng;

pub type CMat = DMatrix<C64>;
pub type CVec = DVector<C64>;

fn cx(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

fn pauli() -> (CMat, CMat, CMat) {
    let s1 = CMat::from_row_slice(2, 2, &[cx(0., 0.), cx(1., 0.), cx(1., 0.), cx(0., 0.)]);
    let s2 = CMat::from_row_slice(2, 2, &[cx(0., 0.), cx(0., -1.), cx(0., 1.), cx(0., 0.)]);
    let s3 = CMat::from_row_slice(2, 2, &[cx(1., 0.), cx(0., 0.), cx(0., 0.), cx(-1., 0.)]);
    (s1, s2, s3)
}

/// Euclidean generators for even dimension `d = 2m`, all squaring to `+1`.
fn euclidean_gammas(d: usize) -> Vec<CMat> {
    debug_assert!(d % 2 == 0);
    let m = d / 2;
    let (s1, s2, s3) = pauli();
    let id = CMat::identity(2, 2);
    let mut gammas = Vec::with_capacity(d);
    for k in 0..m {
        for sig_mat in [&s1, &s2] {
            let mut g = CMat::identity(1, 1);
            for j in 0..m {
                let factor = if j < k {
                    &s3
                } else if j == k {
                    sig_mat
                } else {
                    &id
                };
                g = g.kronecker(factor);
            }
            gammas.push(g);
        }
    }
    gammas
}

/// Irreducible complex Clifford module for signature `(p,q)`.
pub struct SpinorRep {
    sig: Signature,
    ell: Option<i8>,
    n: usize,
    gammas: Vec<CMat>,
    chirality: Option<CMat>,
    /// Blade masks indexing the quantization basis (all blades for even `d`,
    /// truncated blades for odd `d`).
    blades: Vec<usize>,
    blade_mats: Vec<CMat>,
    blade_mat_invs: Vec<CMat>,
    /// Inverse of the column-stacked quantization operator.
    dequant: CMat,
}

impl SpinorRep {
    /// Build the representation; `ell` must be given exactly when `d` is odd.
    pub fn build(sig: Signature, ell: Option<i8>) -> Result<Self> {
        let d = sig.dim();
        let p = sig.p as usize;
        let even = d % 2 == 0;
        if even && ell.is_some() {
            return Err(Error::InvalidParameter("branch label ℓ only applies to odd d".into()));
        }
        if !even && ell.map_or(true, |l| l != 1 && l != -1) {
            return Err(Error::InvalidParameter("odd d requires ℓ = ±1".into()));
        }

        let mut gammas = if even {
            euclidean_gammas(d)
        } else {
            euclidean_gammas(d - 1)
        };
        // timelike slots square to −1
        for (i, g) in gammas.iter_mut().enumerate() {
            if i >= p {
                *g *= cx(0., 1.);
            }
        }
        if !even {
            let ell = ell.unwrap();
            let m = (d - 1) / 2;
            let n = 1usize << m;
            let mut prod = CMat::identity(n, n);
            for g in &gammas {
                prod = &prod * g;
            }
            let prod_sq = &prod * &prod;
            let scal = prod_sq[(0, 0)];
            // γ_d = c·γ₁⋯γ_{d−1} with i^{q+m}·c·(γ₁⋯γ_{d−1})² = ℓ
            let c = cx(ell as f64, 0.) / (i_pow(sig.q as i64 + m as i64) * scal);
            gammas.push(prod.map(|x| x * c));
        }

        let n = gammas[0].nrows();

        // validate Clifford relations
        for i in 0..d {
            for j in i..d {
                let anti = &gammas[i] * &gammas[j] + &gammas[j] * &gammas[i];
                let expect = if i == j {
                    CMat::identity(n, n).map(|x| x * cx(2.0 * sig.eps(i), 0.))
                } else {
                    CMat::zeros(n, n)
                };
                let resid = (anti - expect).map(|x| x.norm()).max();
                if resid > 1e-12 {
                    return Err(Error::DequantizeSingular(format!(
                        "Clifford relation residual {resid:.2e} at ({i},{j})"
                    )));
                }
            }
        }

        // blade products
        let full = sig.basis_count();
        let cut = if even { d } else { (d - 1) / 2 };
        let mut blades = Vec::new();
        let mut blade_mats = Vec::new();
        for mask in 0..full {
            if (mask as u32).count_ones() as usize > cut {
                continue;
            }
            let mut m = CMat::identity(n, n);
            for i in 0..d {
                if mask & (1 << i) != 0 {
                    m = &m * &gammas[i];
                }
            }
            blades.push(mask);
            blade_mats.push(m);
        }

        let blade_mat_invs: Vec<CMat> = blade_mats
            .iter()
            .map(|m| {
                m.clone()
                    .try_inverse()
                    .ok_or_else(|| Error::DequantizeSingular("blade matrix not invertible".into()))
            })
            .collect::<Result<_>>()?;

        // quantization operator: columns are vec(γ_I)
        let nb = blades.len();
        if nb != n * n {
            return Err(Error::DequantizeSingular(format!(
                "blade count {nb} ≠ n² = {}",
                n * n
            )));
        }
        let mut quant = CMat::zeros(n * n, nb);
        for (col, m) in blade_mats.iter().enumerate() {
            for (row, v) in m.as_slice().iter().enumerate() {
                quant[(row, col)] = *v;
            }
        }
        let dequant = quant
            .try_inverse()
            .ok_or_else(|| Error::DequantizeSingular("quantization operator singular".into()))?;

        let chirality = if even {
            // i^{q + d/2} γ(ν), the even-dimensional analog of γ(ν_ℂ)
            let full_mask = full - 1;
            let idx = blades.iter().position(|&b| b == full_mask).unwrap();
            let phase = i_pow(sig.q as i64 + (d as i64) / 2) * cx(sig.orientation as f64, 0.);
            Some(blade_mats[idx].map(|x| x * phase))
        } else {
            None
        };

        let rep = SpinorRep {
            sig,
            ell,
            n,
            gammas,
            chirality,
            blades,
            blade_mats,
            blade_mat_invs,
            dequant,
        };

        if !even {
            // branch consistency: γ(ν_ℂ) = ℓ·Id
            let nu_c = complex_volume(sig)?;
            let g_nu = rep.quantize(&nu_c);
            let expect = CMat::identity(n, n).map(|x| x * cx(ell.unwrap() as f64, 0.));
            let resid = (g_nu - expect).map(|x| x.norm()).max();
            if resid > 1e-12 {
                return Err(Error::DequantizeSingular(format!(
                    "γ(ν_ℂ) ≠ ℓ·Id, residual {resid:.2e}"
                )));
            }
        }

        Ok(rep)
    }

    pub fn sig(&self) -> Signature {
        self.sig
    }

    pub fn ell(&self) -> Option<i8> {
        self.ell
    }

    /// Module dimension `2^⌊d/2⌋`.
    pub fn module_dim(&self) -> usize {
        self.n
    }

    pub fn gamma(&self, i: usize) -> &CMat {
        &self.gammas[i]
    }

    pub fn gammas(&self) -> &[CMat] {
        &self.gammas
    }

    pub fn chirality_op(&self) -> Option<&CMat> {
        self.chirality.as_ref()
    }

    pub fn blades(&self) -> &[usize] {
        &self.blades
    }

    pub fn blade_matrix(&self, idx: usize) -> &CMat {
        &self.blade_mats[idx]
    }

    /// Quantize a full multivector through `γ` (for odd `d` this is `Ψ_ℓ`,
    /// an algebra morphism that is no longer injective).
    pub fn quantize(&self, a: &Multivector) -> CMat {
        let mut out = CMat::zeros(self.n, self.n);
        let d = self.sig.dim();
        for mask in 0..self.sig.basis_count() {
            let c = a.coeff(mask);
            if c.norm_sqr() == 0.0 {
                continue;
            }
            let mut m = CMat::identity(self.n, self.n);
            for i in 0..d {
                if mask & (1 << i) != 0 {
                    m = &m * &self.gammas[i];
                }
            }
            out += m.map(|x| x * c);
        }
        out
    }

    /// Quantize a truncated element through `Ψ^<_ℓ`.
    pub fn quantize_truncated(&self, a: &TruncatedMultivector) -> Result<CMat> {
        match self.ell {
            Some(l) if l == a.ell() => Ok(self.quantize(a.as_multivector())),
            Some(l) => Err(Error::BranchMismatch(l, a.ell())),
            None => Err(Error::RequiresOddDimension(self.sig.dim())),
        }
    }

    /// Dequantize an endomorphism into the (possibly truncated) algebra.
    pub fn dequantize(&self, m: &CMat) -> Result<Multivector> {
        let v = CVec::from_column_slice(m.as_slice());
        let coeffs = &self.dequant * v;
        let mut out = Multivector::zero(self.sig);
        for (idx, &mask) in self.blades.iter().enumerate() {
            out.set_coeff(mask, coeffs[idx]);
        }
        Ok(out)
    }

    pub fn dequantize_truncated(&self, m: &CMat) -> Result<TruncatedMultivector> {
        let ell = self
            .ell
            .ok_or_else(|| Error::RequiresOddDimension(self.sig.dim()))?;
        TruncatedMultivector::new(self.dequantize(m)?, ell)
    }

    /// JSON dump of the representation for external cross-checking:
    /// generator matrices (row-major `[re, im]` pairs) and any supplied
    /// pairing matrices with their discovered types.
    pub fn json_dump(&self, pairings: &[&Pairing]) -> serde_json::Value {
        let mat_json = |m: &CMat| -> serde_json::Value {
            let rows: Vec<Vec<[f64; 2]>> = (0..m.nrows())
                .map(|r| (0..m.ncols()).map(|c| [m[(r, c)].re, m[(r, c)].im]).collect())
                .collect();
            serde_json::json!(rows)
        };
        serde_json::json!({
            "p": self.sig.p,
            "q": self.sig.q,
            "ell": self.ell,
            "module_dim": self.n,
            "gammas": self.gammas.iter().map(&mat_json).collect::<Vec<_>>(),
            "chirality": self.chirality.as_ref().map(&mat_json),
            "pairings": pairings
                .iter()
                .map(|p| {
                    serde_json::json!({
                        "kind": match p.kind {
                            PairingKind::Hermitian => "hermitian",
                            PairingKind::Bilinear => "bilinear",
                        },
                        "s": p.s,
                        "sigma": p.sigma,
                        "residual": p.residual,
                        "matrix": mat_json(&p.matrix),
                    })
                })
                .collect::<Vec<_>>(),
        })
    }

    /// Random spinor with components in the unit square.
    pub fn random_spinor(&self, rng: &mut impl Rng) -> CVec {
        CVec::from_iterator(
            self.n,
            (0..self.n).map(|_| cx(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))),
        )
    }

    /// Random chiral spinor of chirality `μ` (even `d` only).
    pub fn random_chiral_spinor(&self, mu: i8, rng: &mut impl Rng) -> Result<CVec> {
        let chi = self
            .chirality
            .as_ref()
            .ok_or_else(|| Error::RequiresEvenDimension(self.sig.dim()))?;
        loop {
            let eta = self.random_spinor(rng);
            let proj =
                (&eta + (chi * &eta).map(|x| x * cx(mu as f64, 0.))).map(|x| x * cx(0.5, 0.));
            if proj.norm() > 0.3 {
                return Ok(proj);
            }
        }
    }
}

/// Which bilinear structure a pairing realizes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PairingKind {
    /// Sesquilinear, anti-linear in the second slot.
    Hermitian,
    /// Complex-bilinear, symmetric or skew.
    Bilinear,
}

/// Admissible pairing: a nondegenerate matrix intertwining Clifford
/// multiplication with the grade-involution twist of adjoint type `s`.
#[derive(Debug, Clone)]
pub struct Pairing {
    pub kind: PairingKind,
    /// Adjoint type `s = ±1`.
    pub s: i8,
    /// Symmetry type `σ` of a bilinear pairing.
    pub sigma: Option<i8>,
    pub matrix: CMat,
    /// Worst admissibility residual over the generators.
    pub residual: f64,
    inverse: CMat,
}

impl Pairing {
    /// Pairing value; Hermitian pairings are anti-linear in the second slot:
    /// `ℋ(η₁,η₂) = conj(η₂)ᵀ·H·η₁`, bilinear ones are `ℬ(η₁,η₂) = η₂ᵀ·B·η₁`.
    pub fn eval(&self, eta1: &CVec, eta2: &CVec) -> C64 {
        let left = match self.kind {
            PairingKind::Hermitian => eta2.map(|x| x.conj()).transpose(),
            PairingKind::Bilinear => eta2.transpose(),
        };
        (left * &self.matrix * eta1)[(0, 0)]
    }

    pub fn inverse(&self) -> &CMat {
        &self.inverse
    }
}

/// Solve the admissibility constraints for the requested adjoint type.
///
/// The constraint per generator is `X γ_i = s γ_i^† X` (Hermitian) or
/// `X γ_i = s γ_iᵀ X` (bilinear); by multiplicativity the generators suffice.
/// An empty solution space is a legitimate outcome, reported as
/// `PairingNotRealized`.
pub fn solve_admissible(rep: &SpinorRep, s: i8, kind: PairingKind) -> Result<Pairing> {
    if s != 1 && s != -1 {
        return Err(Error::InvalidParameter("adjoint type must be ±1".into()));
    }
    let n = rep.module_dim();
    let d = rep.sig().dim();
    let id = CMat::identity(n, n);
    let mut stack = CMat::zeros(d * n * n, n * n);
    for (i, g) in rep.gammas().iter().enumerate() {
        let g_adj = match kind {
            PairingKind::Hermitian => g.adjoint(),
            PairingKind::Bilinear => g.transpose(),
        };
        // vec(XA) = (Aᵀ ⊗ I)vec(X); vec(BX) = (I ⊗ B)vec(X)
        let op = g.transpose().kronecker(&id)
            - (id.clone().kronecker(&g_adj)).map(|x| x * cx(s as f64, 0.));
        for r in 0..n * n {
            for c in 0..n * n {
                stack[(i * n * n + r, c)] = op[(r, c)];
            }
        }
    }
    let svd = stack.svd(false, true);
    let sv = &svd.singular_values;
    let smax = sv.iter().cloned().fold(0.0, f64::max);
    let (kmin, smin) = sv
        .iter()
        .enumerate()
        .min_by(|a, b| a.1.partial_cmp(b.1).unwrap())
        .map(|(k, v)| (k, *v))
        .unwrap();
    if smin > 1e-8 * smax {
        return Err(Error::PairingNotRealized(smin / smax));
    }
    let v_t = svd.v_t.as_ref().unwrap();
    let mut x = CMat::zeros(n, n);
    for c in 0..n * n {
        // right singular vector = conjugated row of Vᴴ; vec is column-major
        x[(c % n, c / n)] = v_t[(kmin, c)].conj();
    }

    let mut sigma = None;
    match kind {
        PairingKind::Hermitian => {
            // the solution space is closed under †; keep the Hermitian part
            let h1 = (&x + &x.adjoint()).map(|v| v * cx(0.5, 0.));
            let h2 = (&x - &x.adjoint()).map(|v| v * cx(0.0, -0.5));
            x = if h1.map(|v| v.norm()).max() >= h2.map(|v| v.norm()).max() {
                h1
            } else {
                h2
            };
        }
        PairingKind::Bilinear => {
            let asym = (&x - &x.transpose()).map(|v| v.norm()).max();
            let ssym = (&x + &x.transpose()).map(|v| v.norm()).max();
            sigma = Some(if asym <= ssym { 1 } else { -1 });
        }
    }

    // normalize: largest-magnitude entry gets modulus 1, phase chosen to make
    // the largest diagonal entry real positive when one exists
    let mut best = 0.0f64;
    for r in 0..n {
        for c in 0..n {
            best = best.max(x[(r, c)].norm());
        }
    }
    if best == 0.0 {
        return Err(Error::PairingNotRealized(0.0));
    }
    x = x.map(|v| v / cx(best, 0.));
    let mut diag_best = (0usize, 0.0f64);
    for r in 0..n {
        let v = x[(r, r)].norm();
        if v > diag_best.1 {
            diag_best = (r, v);
        }
    }
    if diag_best.1 > 1e-8 {
        let ph = x[(diag_best.0, diag_best.0)] / cx(diag_best.1, 0.);
        x = x.map(|v| v / ph);
    }

    let mut residual = 0.0f64;
    for g in rep.gammas() {
        let g_adj = match kind {
            PairingKind::Hermitian => g.adjoint(),
            PairingKind::Bilinear => g.transpose(),
        };
        let r = (&x * g - (g_adj * &x).map(|v| v * cx(s as f64, 0.)))
            .map(|v| v.norm())
            .max();
        residual = residual.max(r);
    }

    let inverse = x
        .clone()
        .try_inverse()
        .ok_or_else(|| Error::PairingNotRealized(0.0))?;

    Ok(Pairing { kind, s, sigma, matrix: x, residual, inverse })
}

/// Result of a squaring map: a full or truncated exterior form.
#[derive(Debug, Clone)]
pub enum SquareForm {
    Even(Multivector),
    Odd(TruncatedMultivector),
}

impl SquareForm {
    pub fn norm_inf(&self) -> f64 {
        self.as_full().norm_inf()
    }

    pub fn as_full(&self) -> &Multivector {
        match self {
            SquareForm::Even(a) => a,
            SquareForm::Odd(a) => a.as_multivector(),
        }
    }

    pub fn scalar_part(&self) -> C64 {
        self.as_full().scalar_part()
    }

    pub fn sub_norm(&self, other: &SquareForm) -> f64 {
        (self.as_full().clone() - other.as_full().clone()).norm_inf()
    }
}

fn square_endomorphism(eta: &CVec, pairing: &Pairing, kappa: C64) -> CMat {
    // E(χ) = κ·pairing(χ, η)·η, an outer product
    let row = match pairing.kind {
        PairingKind::Hermitian => eta.map(|x| x.conj()).transpose() * &pairing.matrix,
        PairingKind::Bilinear => eta.transpose() * &pairing.matrix,
    };
    let n = eta.len();
    let mut out = CMat::zeros(n, n);
    for a in 0..n {
        for b in 0..n {
            out[(a, b)] = kappa * eta[a] * row[(0, b)];
        }
    }
    out
}

fn explicit_expansion(rep: &SpinorRep, eta: &CVec, pairing: &Pairing, kappa: C64) -> Multivector {
    // κ/2^m Σ_I pairing((γ_I)^{−1}η, η) e^I with literal blade inverses
    let m_half = match rep.ell() {
        None => rep.sig().dim() / 2,
        Some(_) => (rep.sig().dim() - 1) / 2,
    };
    let norm = kappa / cx((1u64 << m_half) as f64, 0.);
    let mut out = Multivector::zero(rep.sig());
    for (idx, &mask) in rep.blades().iter().enumerate() {
        let ginv_eta = &rep.blade_mat_invs[idx] * eta;
        let coeff = match pairing.kind {
            PairingKind::Hermitian => {
                (eta.map(|x| x.conj()).transpose() * &pairing.matrix * &ginv_eta)[(0, 0)]
            }
            PairingKind::Bilinear => (eta.transpose() * &pairing.matrix * &ginv_eta)[(0, 0)],
        };
        out.set_coeff(mask, norm * coeff);
    }
    out
}

fn square_impl(rep: &SpinorRep, eta: &CVec, pairing: &Pairing, kappa: C64) -> Result<SquareForm> {
    let e = square_endomorphism(eta, pairing, kappa);
    let via_dequant = rep.dequantize(&e)?;
    let via_expansion = explicit_expansion(rep, eta, pairing, kappa);
    let resid = (via_dequant.clone() - via_expansion).norm_inf();
    let scale = via_dequant.norm_inf().max(1.0);
    if resid > 1e-10 * scale {
        return Err(Error::DequantizeSingular(format!(
            "squaring routes disagree: {resid:.2e}"
        )));
    }
    match rep.ell() {
        None => Ok(SquareForm::Even(via_dequant)),
        Some(l) => Ok(SquareForm::Odd(TruncatedMultivector::new(via_dequant, l)?)),
    }
}

/// Hermitian square `κ·dequantize(η ⊗ ℋ(−,η))`. The explicit basis expansion
/// is recomputed on every call as a self-check of the dequantization route.
pub fn hermitian_square(
    rep: &SpinorRep,
    eta: &CVec,
    kappa: C64,
    pairing: &Pairing,
) -> Result<SquareForm> {
    if pairing.kind != PairingKind::Hermitian {
        return Err(Error::InvalidParameter("hermitian_square needs a Hermitian pairing".into()));
    }
    if (kappa.norm() - 1.0).abs() > 1e-12 {
        return Err(Error::InvalidParameter("κ must be unit complex".into()));
    }
    square_impl(rep, eta, pairing, kappa)
}

/// Complex-bilinear square `dequantize(η ⊗ ℬ(−,η))`.
pub fn bilinear_square(rep: &SpinorRep, eta: &CVec, pairing: &Pairing) -> Result<SquareForm> {
    if pairing.kind != PairingKind::Bilinear {
        return Err(Error::InvalidParameter("bilinear_square needs a bilinear pairing".into()));
    }
    square_impl(rep, eta, pairing, cx(1.0, 0.0))
}

/// Outcome of a spinor reconstruction.
pub struct Reconstruction {
    pub eta: CVec,
    /// Detected phase for Hermitian squares.
    pub kappa: C64,
    /// Round-trip error `‖square(η) − α‖∞ / ‖α‖∞`.
    pub roundtrip: f64,
}

/// Recover a spinor from its square: up to sign for bilinear squares, up to
/// phase for Hermitian ones. Fails with `NotASquare` when the candidate does
/// not round-trip.
pub fn reconstruct_spinor(
    rep: &SpinorRep,
    alpha: &SquareForm,
    pairing: &Pairing,
) -> Result<Reconstruction> {
    let norm = alpha.norm_inf();
    if norm < 1e-12 {
        return Err(Error::NotASquare("vanishing form".into()));
    }
    let m = match alpha {
        SquareForm::Even(a) => rep.quantize(a),
        SquareForm::Odd(a) => rep.quantize_truncated(a)?,
    };
    let n = rep.module_dim();
    let g = &m * pairing.inverse();
    // Hermitian: G = κ·η η†; bilinear: G = η ηᵀ (up to the pairing gauge)
    let (kappa, g) = match pairing.kind {
        PairingKind::Hermitian => {
            let tr: C64 = (0..n).map(|i| g[(i, i)]).sum();
            if tr.norm() < 1e-10 * norm {
                return Err(Error::NotASquare("trace of rank-one factor vanishes".into()));
            }
            let kappa = tr / cx(tr.norm(), 0.0);
            (kappa, g.map(|x| x / kappa))
        }
        PairingKind::Bilinear => (cx(1.0, 0.0), g),
    };
    let mut jbest = (0usize, 0.0f64);
    for j in 0..n {
        let v = g[(j, j)].norm();
        if v > jbest.1 {
            jbest = (j, v);
        }
    }
    if jbest.1 < 1e-12 * norm {
        return Err(Error::NotASquare("rank-one factor has vanishing diagonal".into()));
    }
    let pivot = g[(jbest.0, jbest.0)];
    let root = pivot.sqrt();
    let eta = CVec::from_iterator(n, (0..n).map(|i| g.column(jbest.0)[i] / root));
    let recomputed = match pairing.kind {
        PairingKind::Hermitian => hermitian_square(rep, &eta, kappa, pairing)?,
        PairingKind::Bilinear => bilinear_square(rep, &eta, pairing)?,
    };
    let roundtrip = recomputed.sub_norm(alpha) / norm;
    if roundtrip > 1e-8 {
        return Err(Error::NotASquare(format!("round-trip residual {roundtrip:.2e}")));
    }
    Ok(Reconstruction { eta, kappa, roundtrip })
}
