//! Batch check runners and the machine-readable report format.
//!
//! Every entry records a check id, a parameter echo, the measured residual,
//! its tolerance, and a pass flag. Reports are deterministic for a fixed seed:
//! per-check generators are seeded from `(seed, check-id)` and entries are
//! sorted by check id before emission, so scheduling cannot reorder output.
//! Wall times are reported but excluded from the determinism contract.

use crate::algebra::{C64, Multivector, Signature, TruncatedMultivector};
use crate::error::{Error, Result};
use crate::geometry::{
    FormField, ParallelSquareArgs, ScalarField, SymbolField, einstein_maxwell_residual,
    hessian_scalar, laplacian_scalar, parallel_square_residual, sugra6d_residual,
};
use crate::solutions::{
    self, RadialParams, WarpedCase, radial_closed_form, radial_integrate,
    reduced_system_residual, wavefront_residual_einstein, wavefront_residual_string,
};
use crate::spinor::{
    self, PairingKind, SpinorRep, bilinear_square, hermitian_square, reconstruct_spinor,
};
use crate::verifier::{self, SquareContext, SquareKind, check_square_axioms};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use std::collections::BTreeMap;
use std::collections::hash_map::DefaultHasher;
use std::hash::{Hash, Hasher};
use std::time::Instant;

fn cx(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

#[derive(Debug, Clone, Serialize)]
pub struct ReportEntry {
    pub check_id: String,
    pub params: BTreeMap<String, String>,
    pub max_residual: f64,
    pub tolerance: f64,
    pub pass: bool,
    pub wall_ms: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct ReportSummary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub seed: u64,
}

#[derive(Debug, Clone)]
pub struct Report {
    pub entries: Vec<ReportEntry>,
    pub seed: u64,
}

impl Report {
    pub fn new(mut entries: Vec<ReportEntry>, seed: u64) -> Self {
        entries.sort_by(|a, b| a.check_id.cmp(&b.check_id));
        Report { entries, seed }
    }

    pub fn summary(&self) -> ReportSummary {
        let passed = self.entries.iter().filter(|e| e.pass).count();
        ReportSummary {
            total: self.entries.len(),
            passed,
            failed: self.entries.len() - passed,
            seed: self.seed,
        }
    }

    pub fn all_pass(&self) -> bool {
        self.entries.iter().all(|e| e.pass)
    }

    /// Line-delimited JSON: one entry per line, then the summary object.
    pub fn to_ndjson(&self) -> String {
        let mut out = String::new();
        for e in &self.entries {
            out.push_str(&serde_json::to_string(e).unwrap());
            out.push('\n');
        }
        out.push_str(&serde_json::to_string(&self.summary()).unwrap());
        out.push('\n');
        out
    }
}

/// Seed a generator deterministically from the run seed and a check id.
pub fn check_rng(seed: u64, check_id: &str) -> ChaCha8Rng {
    let mut h = DefaultHasher::new();
    check_id.hash(&mut h);
    ChaCha8Rng::seed_from_u64(seed ^ h.finish())
}

fn entry(
    check_id: &str,
    params: &BTreeMap<String, String>,
    max_residual: f64,
    tol: f64,
    started: Instant,
) -> ReportEntry {
    ReportEntry {
        check_id: check_id.to_string(),
        params: params.clone(),
        max_residual,
        tolerance: tol,
        pass: max_residual.is_finite() && max_residual <= tol,
        wall_ms: started.elapsed().as_secs_f64() * 1e3,
    }
}

/// Thread cap from `SPINFORM_THREADS` (defaults to available parallelism).
pub fn thread_cap() -> usize {
    std::env::var("SPINFORM_THREADS")
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
        .filter(|v| *v >= 1)
        .unwrap_or_else(|| std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1))
}

type Check = Box<dyn FnOnce() -> ReportEntry + Send>;

/// Run independent checks on a worker pool capped by `SPINFORM_THREADS`;
/// determinism comes from per-check seeding and the final sort, not from
/// scheduling.
fn run_pool(checks: Vec<Check>) -> Vec<ReportEntry> {
    let workers = thread_cap().min(checks.len().max(1));
    if workers <= 1 {
        return checks.into_iter().map(|c| c()).collect();
    }
    let jobs = std::sync::Mutex::new(checks.into_iter().enumerate().collect::<Vec<_>>());
    let results = std::sync::Mutex::new(Vec::new());
    std::thread::scope(|scope| {
        for _ in 0..workers {
            scope.spawn(|| loop {
                let job = jobs.lock().unwrap().pop();
                match job {
                    Some((idx, check)) => {
                        let out = check();
                        results.lock().unwrap().push((idx, out));
                    }
                    None => break,
                }
            });
        }
    });
    let mut results = results.into_inner().unwrap();
    results.sort_by_key(|(i, _)| *i);
    results.into_iter().map(|(_, e)| e).collect()
}

// ---------------------------------------------------------------------------
// algebra suite
// ---------------------------------------------------------------------------

pub fn run_algebra_suite(p: u8, q: u8, samples: usize, seed: u64, tol: f64) -> Result<Report> {
    let sig = Signature::new(p, q)?;
    let d = sig.dim();
    let mut params = BTreeMap::new();
    params.insert("p".into(), p.to_string());
    params.insert("q".into(), q.to_string());
    params.insert("samples".into(), samples.to_string());

    let mut checks: Vec<Check> = Vec::new();
    let mk = |id: String,
              body: Box<dyn Fn(&mut ChaCha8Rng) -> f64 + Send>,
              params: BTreeMap<String, String>,
              tol: f64|
     -> Check {
        Box::new(move || {
            let started = Instant::now();
            let mut rng = check_rng(seed, &id);
            let resid = body(&mut rng);
            entry(&id, &params, resid, tol, started)
        })
    };

    checks.push(mk(
        format!("algebra/{p}{q}/associativity"),
        Box::new(move |rng| {
            let mut worst: f64 = 0.0;
            for _ in 0..samples {
                let a = Multivector::random(sig, rng);
                let b = Multivector::random(sig, rng);
                let c = Multivector::random(sig, rng);
                let l = a.geometric_product(&b).unwrap().geometric_product(&c).unwrap();
                let r = a.geometric_product(&b.geometric_product(&c).unwrap()).unwrap();
                let scale = (a.norm_inf() * b.norm_inf() * c.norm_inf()).max(1e-30);
                worst = worst.max((l - r).norm_inf() / scale);
            }
            worst
        }),
        params.clone(),
        tol,
    ));

    checks.push(mk(
        format!("algebra/{p}{q}/graded-expansion"),
        Box::new(move |rng| {
            let mut worst: f64 = 0.0;
            for _ in 0..samples.min(200) {
                let a = Multivector::random(sig, rng);
                let b = Multivector::random(sig, rng);
                let direct = a.geometric_product(&b).unwrap();
                let exp = a.graded_expansion_product(&b).unwrap();
                let scale = (a.norm_inf() * b.norm_inf()).max(1e-30);
                worst = worst.max((direct - exp).norm_inf() / scale);
            }
            worst
        }),
        params.clone(),
        tol,
    ));

    checks.push(mk(
        format!("algebra/{p}{q}/triangle-symmetry"),
        Box::new(move |rng| {
            let mut worst: f64 = 0.0;
            for _ in 0..(samples / 10).max(10) {
                for a_gr in 0..=d {
                    for b_gr in 0..=d {
                        let a = Multivector::random_grade(sig, a_gr, rng);
                        let b = Multivector::random_grade(sig, b_gr, rng);
                        for k in 0..=d {
                            let ab = a.generalized_product(&b, k).unwrap();
                            if k > a_gr || k > b_gr {
                                worst = worst.max(ab.norm_inf());
                                continue;
                            }
                            let ba = b.generalized_product(&a, k).unwrap();
                            let sign =
                                if ((a_gr - k) * (b_gr - k)) % 2 == 0 { 1.0 } else { -1.0 };
                            worst = worst.max((ab - ba.scale(cx(sign, 0.0))).norm_inf());
                        }
                    }
                }
            }
            worst
        }),
        params.clone(),
        tol,
    ));

    checks.push(mk(
        format!("algebra/{p}{q}/triangle-star"),
        Box::new(move |rng| {
            let mut worst: f64 = 0.0;
            for _ in 0..(samples / 10).max(10) {
                for a_gr in 0..=d {
                    for b_gr in 0..=(d - a_gr) {
                        let a = Multivector::random_grade(sig, a_gr, rng);
                        let b = Multivector::random_grade(sig, b_gr, rng);
                        let lhs = a.generalized_product(&b.hodge_star(), a_gr).unwrap();
                        let rhs = b.wedge(&a).unwrap().hodge_star();
                        worst = worst.max((lhs - rhs).norm_inf());
                    }
                }
            }
            worst
        }),
        params.clone(),
        tol,
    ));

    checks.push(mk(
        format!("algebra/{p}{q}/wedge-is-triangle0"),
        Box::new(move |rng| {
            let mut worst: f64 = 0.0;
            for _ in 0..samples.min(200) {
                let a = Multivector::random(sig, rng);
                let b = Multivector::random(sig, rng);
                let lhs = a.generalized_product(&b, 0).unwrap();
                worst = worst.max((lhs - a.wedge(&b).unwrap()).norm_inf());
            }
            worst
        }),
        params.clone(),
        tol,
    ));

    checks.push(mk(
        format!("algebra/{p}{q}/volume-identities"),
        Box::new(move |rng| {
            let nu = Multivector::volume_form(sig);
            let expect = if d % 2 == 0 {
                if ((p as i64 - q as i64) / 2).rem_euclid(2) == 0 { 1.0 } else { -1.0 }
            } else if ((p as i64 - q as i64 - 1) / 2).rem_euclid(2) == 0 {
                1.0
            } else {
                -1.0
            };
            let sq = nu.geometric_product(&nu).unwrap();
            let mut worst = (sq - Multivector::scalar(sig, cx(expect, 0.0))).norm_inf();
            for _ in 0..samples.min(200) {
                let a = Multivector::random(sig, rng);
                let lhs1 = a.geometric_product(&nu).unwrap();
                worst = worst.max((lhs1 - a.reversion().hodge_star()).norm_inf());
                let lhs2 = nu.geometric_product(&a).unwrap();
                let twist =
                    if (d - 1) % 2 == 1 { a.parity().reversion() } else { a.reversion() };
                worst = worst.max((lhs2.clone() - twist.hodge_star()).norm_inf());
                let comm = if (d - 1) % 2 == 1 { a.parity() } else { a.clone() };
                worst = worst.max((lhs2 - comm.geometric_product(&nu).unwrap()).norm_inf());
            }
            worst
        }),
        params.clone(),
        tol,
    ));

    checks.push(mk(
        format!("algebra/{p}{q}/hodge-defining-relation"),
        Box::new(move |rng| {
            let nu = Multivector::volume_form(sig);
            let mut worst: f64 = 0.0;
            for _ in 0..(samples / 10).max(10) {
                for k in 0..=d {
                    let a = Multivector::random_grade(sig, k, rng);
                    let b = Multivector::random_grade(sig, k, rng);
                    let lhs = a.wedge(&b.hodge_star()).unwrap();
                    let rhs = nu.scale(a.metric_pairing(&b).unwrap());
                    worst = worst.max((lhs - rhs).norm_inf());
                }
            }
            worst
        }),
        params.clone(),
        tol,
    ));

    if sig.is_odd() {
        checks.push(mk(
            format!("algebra/{p}{q}/vee-associativity"),
            Box::new(move |rng| {
                let mut worst: f64 = 0.0;
                for ell in [1i8, -1] {
                    for _ in 0..samples.min(300) {
                        let a = TruncatedMultivector::truncate(
                            &Multivector::random(sig, rng),
                            ell,
                        )
                        .unwrap();
                        let b = TruncatedMultivector::truncate(
                            &Multivector::random(sig, rng),
                            ell,
                        )
                        .unwrap();
                        let c = TruncatedMultivector::truncate(
                            &Multivector::random(sig, rng),
                            ell,
                        )
                        .unwrap();
                        let l = a.vee(&b).unwrap().vee(&c).unwrap();
                        let r = a.vee(&b.vee(&c).unwrap()).unwrap();
                        worst = worst.max(l.sub(&r).unwrap().norm_inf());
                    }
                }
                worst
            }),
            params.clone(),
            tol,
        ));
        checks.push(mk(
            format!("algebra/{p}{q}/vee-presentations-agree"),
            Box::new(move |rng| {
                let mut worst: f64 = 0.0;
                for ell in [1i8, -1] {
                    for _ in 0..samples.min(300) {
                        let a = TruncatedMultivector::truncate(
                            &Multivector::random(sig, rng),
                            ell,
                        )
                        .unwrap();
                        let b = TruncatedMultivector::truncate(
                            &Multivector::random(sig, rng),
                            ell,
                        )
                        .unwrap();
                        let v1 = a.vee(&b).unwrap();
                        let v2 = a.vee_via_star(&b).unwrap();
                        worst = worst.max(v1.sub(&v2).unwrap().norm_inf());
                    }
                }
                worst
            }),
            params.clone(),
            tol,
        ));
        checks.push(mk(
            format!("algebra/{p}{q}/complex-volume"),
            Box::new(move |rng| {
                use crate::algebra::truncated::{complex_volume, i_pow, project_ell, project_lt};
                let nu_c = complex_volume(sig).unwrap();
                let sq = nu_c.geometric_product(&nu_c).unwrap();
                let mut worst = (sq - Multivector::one(sig)).norm_inf();
                for _ in 0..samples.min(200) {
                    let a = Multivector::random(sig, rng);
                    let lhs = nu_c.geometric_product(&a).unwrap();
                    let rhs = a.geometric_product(&nu_c).unwrap();
                    worst = worst.max((lhs.clone() - rhs).norm_inf());
                    let exp = i_pow(sig.q as i64 + (d as i64 - 1) / 2);
                    worst =
                        worst.max((lhs - a.reversion().hodge_star().scale(exp)).norm_inf());
                    let pp = project_ell(&a, 1).unwrap();
                    let pm = project_ell(&a, -1).unwrap();
                    worst = worst.max((pp.clone() + pm - a.clone()).norm_inf());
                    worst = worst.max(project_ell(&pp, -1).unwrap().norm_inf());
                    let t = project_lt(&a);
                    worst = worst.max((project_lt(&t.clone()) - t).norm_inf());
                }
                worst
            }),
            params.clone(),
            tol,
        ));
    }

    Ok(Report::new(run_pool(checks), seed))
}

// ---------------------------------------------------------------------------
// squares suite
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SquaresKindArg {
    Hermitian,
    Bilinear,
    Both,
}

pub fn run_squares_suite(
    p: u8,
    q: u8,
    ell: Option<i8>,
    s: i8,
    kind: SquaresKindArg,
    samples: usize,
    seed: u64,
) -> Result<Report> {
    let sig = Signature::new(p, q)?;
    let d = sig.dim();
    let ell = if sig.is_odd() { Some(ell.unwrap_or(1)) } else { None };
    let mut params = BTreeMap::new();
    params.insert("p".into(), p.to_string());
    params.insert("q".into(), q.to_string());
    params.insert("s".into(), s.to_string());
    if let Some(l) = ell {
        params.insert("ell".into(), l.to_string());
    }
    params.insert("samples".into(), samples.to_string());

    let rep = SpinorRep::build(sig, ell)?;
    let mut entries = Vec::new();

    {
        let started = Instant::now();
        let id = format!("squares/{p}{q}/clifford-relations");
        let n = rep.module_dim();
        let mut worst: f64 = 0.0;
        for i in 0..d {
            for j in 0..d {
                let anti = rep.gamma(i) * rep.gamma(j) + rep.gamma(j) * rep.gamma(i);
                let expect = if i == j {
                    spinor::CMat::identity(n, n).map(|x| x * cx(2.0 * sig.eps(i), 0.0))
                } else {
                    spinor::CMat::zeros(n, n)
                };
                worst = worst.max((anti - expect).map(|x| x.norm()).max());
            }
        }
        entries.push(entry(&id, &params, worst, 1e-12, started));
    }
    {
        let started = Instant::now();
        let id = format!("squares/{p}{q}/quantization-homomorphism");
        let mut rng = check_rng(seed, &id);
        let mut worst: f64 = 0.0;
        for _ in 0..samples.min(100) {
            match ell {
                None => {
                    let a = Multivector::random(sig, &mut rng);
                    let b = Multivector::random(sig, &mut rng);
                    let lhs = rep.quantize(&a.geometric_product(&b).unwrap());
                    let rhs = rep.quantize(&a) * rep.quantize(&b);
                    worst = worst.max((lhs - rhs).map(|x| x.norm()).max());
                }
                Some(l) => {
                    let a =
                        TruncatedMultivector::truncate(&Multivector::random(sig, &mut rng), l)
                            .unwrap();
                    let b =
                        TruncatedMultivector::truncate(&Multivector::random(sig, &mut rng), l)
                            .unwrap();
                    let lhs = rep.quantize_truncated(&a.vee(&b).unwrap()).unwrap();
                    let rhs = rep.quantize_truncated(&a).unwrap()
                        * rep.quantize_truncated(&b).unwrap();
                    worst = worst.max((lhs - rhs).map(|x| x.norm()).max());
                }
            }
        }
        entries.push(entry(&id, &params, worst, 1e-12, started));
    }
    if let Some(l) = ell {
        let started = Instant::now();
        let id = format!("squares/{p}{q}/volume-branch");
        let nu_c = crate::algebra::truncated::complex_volume(sig)?;
        let n = rep.module_dim();
        let resid = (rep.quantize(&nu_c)
            - spinor::CMat::identity(n, n).map(|x| x * cx(l as f64, 0.0)))
        .map(|x| x.norm())
        .max();
        entries.push(entry(&id, &params, resid, 1e-12, started));
    }

    let pairing_entry = |entries: &mut Vec<ReportEntry>,
                             kind: PairingKind,
                             label: &str|
     -> Result<Option<spinor::Pairing>> {
        let started = Instant::now();
        let id = format!("squares/{p}{q}/admissible-{label}");
        match spinor::solve_admissible(&rep, s, kind) {
            Ok(pairing) => {
                let mut pp = params.clone();
                if let Some(sg) = pairing.sigma {
                    pp.insert("sigma".into(), sg.to_string());
                }
                entries.push(entry(&id, &pp, pairing.residual, 1e-12, started));
                Ok(Some(pairing))
            }
            Err(Error::PairingNotRealized(_)) => {
                let mut pp = params.clone();
                pp.insert("outcome".into(), "not-realized".into());
                // a legitimate outcome, reported with zero residual
                entries.push(entry(&id, &pp, 0.0, 1e-12, started));
                Ok(None)
            }
            Err(e) => Err(e),
        }
    };

    let herm = if kind != SquaresKindArg::Bilinear {
        pairing_entry(&mut entries, PairingKind::Hermitian, "hermitian")?
    } else {
        None
    };
    let bil = if kind != SquaresKindArg::Hermitian {
        pairing_entry(&mut entries, PairingKind::Bilinear, "bilinear")?
    } else {
        None
    };

    let chiral = !sig.is_odd();
    let normal_forms = matches!((p, q), (2, 0) | (3, 0) | (4, 0) | (3, 1) | (5, 1));

    if let Some(h) = &herm {
        let started = Instant::now();
        let id = format!("squares/{p}{q}/hermitian-axioms");
        let mut rng = check_rng(seed, &id);
        let mut worst: f64 = 0.0;
        let kappas: Vec<C64> = std::iter::once(cx(1.0, 0.0))
            .chain((0..8).map(|_| C64::from_polar(1.0, rng.gen_range(0.0..std::f64::consts::TAU))))
            .collect();
        for i in 0..samples {
            let (eta, mu) = if chiral && i % 2 == 0 {
                let m: i8 = if rng.gen_bool(0.5) { 1 } else { -1 };
                (rep.random_chiral_spinor(m, &mut rng)?, Some(m))
            } else {
                (rep.random_spinor(&mut rng), None)
            };
            let kappa = kappas[i % kappas.len()];
            let alpha = hermitian_square(&rep, &eta, kappa, h)?;
            let report = check_square_axioms(
                &alpha,
                SquareKind::Hermitian { kappa },
                h.s,
                mu,
                None,
                &mut rng,
                1e-10,
            )?;
            worst = worst.max(report.max_residual());
            if !report.verdict {
                worst = worst.max(1.0);
            }
            if normal_forms && (mu.is_some() || q == 0) && (kappa - cx(1.0, 0.0)).norm() < 1e-12
            {
                let nf = verifier::normal_form(&alpha, mu, None)?;
                worst = worst.max(nf.max_residual());
            }
        }
        entries.push(entry(&id, &params, worst, 1e-9, started));

        let started = Instant::now();
        let id = format!("squares/{p}{q}/hermitian-roundtrip");
        let mut rng = check_rng(seed, &id);
        let mut worst: f64 = 0.0;
        for _ in 0..samples.min(200) {
            let eta = rep.random_spinor(&mut rng);
            let alpha = hermitian_square(&rep, &eta, cx(1.0, 0.0), h)?;
            let rec = reconstruct_spinor(&rep, &alpha, h)?;
            worst = worst.max(rec.roundtrip);
        }
        entries.push(entry(&id, &params, worst, 1e-9, started));
    }

    if let Some(b) = &bil {
        let started = Instant::now();
        let id = format!("squares/{p}{q}/bilinear-axioms");
        let mut rng = check_rng(seed, &id);
        let mut worst: f64 = 0.0;
        for i in 0..samples {
            let (eta, mu) = if chiral && i % 2 == 0 {
                let m: i8 = if rng.gen_bool(0.5) { 1 } else { -1 };
                (rep.random_chiral_spinor(m, &mut rng)?, Some(m))
            } else {
                (rep.random_spinor(&mut rng), None)
            };
            let alpha = bilinear_square(&rep, &eta, b)?;
            let report = check_square_axioms(
                &alpha,
                SquareKind::Bilinear { sigma: b.sigma.unwrap() },
                b.s,
                mu,
                None,
                &mut rng,
                1e-10,
            )?;
            worst = worst.max(report.max_residual());
            if !report.verdict {
                worst = worst.max(1.0);
            }
        }
        entries.push(entry(&id, &params, worst, 1e-9, started));

        let started = Instant::now();
        let id = format!("squares/{p}{q}/bilinear-roundtrip-sign");
        let mut rng = check_rng(seed, &id);
        let mut worst: f64 = 0.0;
        for _ in 0..samples.min(200) {
            let eta = rep.random_spinor(&mut rng);
            let alpha = bilinear_square(&rep, &eta, b)?;
            let rec = reconstruct_spinor(&rep, &alpha, b)?;
            let dplus = (&rec.eta - &eta).norm();
            let dminus = (&rec.eta + &eta).norm();
            worst = worst.max(dplus.min(dminus) / eta.norm());
        }
        entries.push(entry(&id, &params, worst, 1e-9, started));
    }

    if let Some(h) = &herm {
        let started = Instant::now();
        let id = format!("squares/{p}{q}/annihilator-equivalence");
        let mut rng = check_rng(seed, &id);
        let n = rep.module_dim();
        let mut agreements = true;
        for _ in 0..samples.min(1000) {
            let eta = rep.random_spinor(&mut rng);
            let alpha = hermitian_square(&rep, &eta, cx(1.0, 0.0), h)?;
            let w = rep.random_spinor(&mut rng);
            let wh_eta: C64 = w.dotc(&eta);
            if wh_eta.norm() < 1e-3 {
                continue;
            }
            let mut proj = spinor::CMat::identity(n, n);
            for a in 0..n {
                for bidx in 0..n {
                    proj[(a, bidx)] -= eta[a] * w[bidx].conj() / wh_eta;
                }
            }
            let q_form = rep.dequantize(&proj)?;
            agreements &= verifier::check_constrained(&q_form, &alpha, &rep, Some(&eta), 1e-10)?;
            let one = Multivector::one(sig);
            agreements &= !verifier::check_constrained(&one, &alpha, &rep, Some(&eta), 1e-10)?;
        }
        entries.push(entry(&id, &params, if agreements { 0.0 } else { 1.0 }, 0.5, started));
    }

    Ok(Report::new(entries, seed))
}

// ---------------------------------------------------------------------------
// verify (named solution families)
// ---------------------------------------------------------------------------

fn getf(map: &BTreeMap<String, String>, key: &str, default: f64) -> Result<f64> {
    match map.get(key) {
        None => Ok(default),
        Some(v) => v
            .parse::<f64>()
            .map_err(|_| Error::InvalidParameter(format!("bad value for `{key}`: {v}"))),
    }
}

pub fn run_verify_family(
    family: &str,
    fam_params: &BTreeMap<String, String>,
    points: usize,
    tol: f64,
    seed: u64,
    perturb: Option<(String, f64)>,
) -> Result<Report> {
    let mut params: BTreeMap<String, String> = fam_params.clone();
    params.insert("family".into(), family.into());
    params.insert("points".into(), points.to_string());
    if let Some((k, v)) = &perturb {
        params.insert("perturb".into(), format!("{k}={v}"));
    }
    let mut entries = Vec::new();
    match family {
        "freedman" => {
            let e = getf(fam_params, "e", 1.25)?;
            // the radius determines λ_I through R = |𝔢λ_I|⁻¹ when given
            let lambda_i = match fam_params.get("R") {
                Some(_) => {
                    let r = getf(fam_params, "R", 1.0)?;
                    if r <= 0.0 {
                        return Err(Error::InvalidParameter("R must be positive".into()));
                    }
                    1.0 / (e * r)
                }
                None => getf(fam_params, "lambda_i", 0.8)?,
            };
            let p = solutions::FreedmanParams {
                lambda_i,
                e,
                mu: getf(fam_params, "mu", 1.0)? as i8,
                c1: getf(fam_params, "c1", 0.0)?,
                c2: getf(fam_params, "c2", 0.0)?,
                c3: getf(fam_params, "c3", 1.0)?,
                cc: getf(fam_params, "c", 0.0)?,
            };
            let sol = solutions::freedman_chart(&p)?;
            let perturb_h = match &perturb {
                Some((key, eps)) if key == "H" => Some(*eps),
                Some((key, _)) => {
                    return Err(Error::InvalidParameter(format!(
                        "unknown perturbation target `{key}`"
                    )));
                }
                None => None,
            };
            let chart = match perturb_h {
                None => sol.chart.clone(),
                Some(eps) => {
                    let h = sol.hcal.clone();
                    let ph = ScalarField::new(move |x| (1.0 + eps) * h.eval(x));
                    let zero_f = ScalarField::constant(0.0);
                    solutions::kundt_chart(
                        "freedman-perturbed",
                        &sol.transverse,
                        &ph,
                        &zero_f,
                        Some(&sol.acal),
                    )?
                }
            };
            let started = Instant::now();
            let mut worst_eig: f64 = 0.0;
            let r = sol.params.radius();
            for x in sol.transverse.sample_points(points, seed ^ 1) {
                let lap = laplacian_scalar(&sol.psi, &sol.transverse, &x);
                worst_eig = worst_eig.max((lap - 2.0 / (r * r) * sol.psi.eval(&x)).abs());
            }
            entries.push(entry("verify/freedman/eigenfunction", &params, worst_eig, tol, started));
            let started = Instant::now();
            let mut worst_ein: f64 = 0.0;
            let mut worst_max: f64 = 0.0;
            for x in chart.sample_points(points, seed ^ 2) {
                let res = einstein_maxwell_residual(&chart, &sol.f_a, sol.lambda, p.e, &x)?;
                worst_ein = worst_ein.max(res.einstein);
                worst_max = worst_max.max(res.maxwell.max(res.closure));
            }
            entries.push(entry("verify/freedman/einstein", &params, worst_ein, tol, started));
            let started = Instant::now();
            entries.push(entry("verify/freedman/maxwell", &params, worst_max, tol, started));
            let started = Instant::now();
            let mut worst_g: f64 = 0.0;
            for x in chart.sample_points(points.min(25), seed ^ 3) {
                let f = sol.f_a.eval(&x);
                worst_g = worst_g.max(f.interior_vec(&[0.0, 1.0, 0.0, 0.0]).norm_inf());
                let u = crate::geometry::CoordForm::one_form(&[1.0, 0.0, 0.0, 0.0]);
                let star_u = chart.hodge_at(&x, &u)?;
                let resid =
                    f.wedge(&u).add(&star_u.scale(cx(p.mu as f64 * p.lambda_i, 0.0)));
                worst_g = worst_g.max(resid.norm_inf());
            }
            entries.push(entry("verify/freedman/gaugino", &params, worst_g, tol, started));
        }
        "black_brane" => {
            let m = getf(fam_params, "m", 1.0)?;
            let sol = solutions::black_brane_chart(m)?;
            let started = Instant::now();
            let mut worst: f64 = 0.0;
            for x in sol.chart.sample_points(points, seed ^ 1) {
                let res = sugra6d_residual(&sol.chart, &sol.h_field, sol.mu, &x)?;
                worst = worst.max(res.max());
            }
            entries.push(entry("verify/black_brane/sixdim", &params, worst, tol, started));
            let started = Instant::now();
            let data = solutions::EinsteinFrameData {
                frak: sol.transverse_einstein.clone(),
                hbar: sol.hbar.clone(),
                fcal: sol.fcal.clone(),
                hb: sol.hb.clone(),
            };
            let mut worst_red: f64 = 0.0;
            let mut worst_dual: f64 = 0.0;
            for x in data.frak.sample_points(points, seed ^ 2) {
                let res = reduced_system_residual(&data, &x, sol.mu)?;
                worst_red = worst_red.max(res.max_system());
                worst_dual = worst_dual.max(res.duality);
            }
            entries.push(entry("verify/black_brane/reduced", &params, worst_red, tol, started));
            let started = Instant::now();
            entries.push(entry(
                "verify/black_brane/duality",
                &params,
                worst_dual,
                1e-8,
                started,
            ));
            let started = Instant::now();
            let string = data.to_string_frame()?;
            let mut worst_wf: f64 = 0.0;
            for x in string.h.sample_points(points.min(25), seed ^ 3) {
                worst_wf = worst_wf.max(wavefront_residual_string(&string, &x)?.max());
                worst_wf = worst_wf.max(wavefront_residual_einstein(&data, &x)?.max());
            }
            entries.push(entry("verify/black_brane/wavefront", &params, worst_wf, tol, started));
        }
        "radial" => {
            let p = RadialParams {
                lambda: getf(fam_params, "lambda", -0.5)?,
                e: getf(fam_params, "e", 1.0)?,
                c: getf(fam_params, "c", 1.0)?,
            };
            let fam = solutions::radial_family_data(
                &p,
                getf(fam_params, "rho_star", -1.0)?,
                getf(fam_params, "m1", 0.7)?,
                getf(fam_params, "m2", 0.3)?,
            )?;
            let started = Instant::now();
            let mut worst: f64 = 0.0;
            for x in fam.einstein.frak.sample_points(points, seed ^ 1) {
                worst = worst
                    .max(reduced_system_residual(&fam.einstein, &x, fam.mu)?.max_system());
            }
            entries.push(entry("verify/radial/reduced", &params, worst, tol, started));
            let started = Instant::now();
            let mut worst6: f64 = 0.0;
            for x in fam.chart6.sample_points(points.min(25), seed ^ 2) {
                worst6 = worst6.max(sugra6d_residual(&fam.chart6, &fam.h6, fam.mu, &x)?.max());
            }
            entries.push(entry("verify/radial/sixdim", &params, worst6, tol, started));
        }
        "killing_warped" => {
            let lambda = getf(fam_params, "lambda", 0.4)?;
            let ell = getf(fam_params, "ell", 1.0)? as i8;
            let case = match fam_params.get("case").map(|s| s.as_str()) {
                Some("real2d") => WarpedCase::Real2d,
                Some("imag2d") => WarpedCase::Imag2d,
                None | Some("imag3d") => WarpedCase::Imag3d,
                Some("real4d") => WarpedCase::Real4d,
                Some("imag4d_q0") => WarpedCase::Imag4dQ0,
                Some("imag4d_qpos") => WarpedCase::Imag4dQPos,
                Some(other) => {
                    return Err(Error::InvalidParameter(format!("unknown case `{other}`")));
                }
            };
            let sol = solutions::killing_warped_chart(case, lambda, ell)?;
            let started = Instant::now();
            let mut worst_h: f64 = 0.0;
            let (field, factor, scale_field) = match case {
                WarpedCase::Real2d | WarpedCase::Real4d => (&sol.f, -4.0 * lambda * lambda, &sol.f),
                _ => (&sol.r, 4.0 * lambda * lambda, &sol.r),
            };
            for x in sol.chart.sample_points(points, seed ^ 1) {
                let hess = hessian_scalar(field, &sol.chart, &x);
                let expect = sol.chart.metric(&x) * (factor * scale_field.eval(&x));
                worst_h = worst_h.max((hess - expect).amax());
            }
            entries.push(entry("verify/killing_warped/hessian", &params, worst_h, tol, started));
            if let Some(alpha) = &sol.alpha {
                let started = Instant::now();
                let symbol = SymbolField::killing(&sol.chart, sol.lambda);
                let constraints: Vec<FormField> = vec![];
                let mut worst_ps: f64 = 0.0;
                for x in sol.chart.sample_points(points.min(50), seed ^ 2) {
                    let rep = parallel_square_residual(
                        &sol.chart,
                        &x,
                        &ParallelSquareArgs {
                            alpha,
                            symbol: &symbol,
                            constraints: &constraints,
                            s: 1,
                            conjugate: true,
                            ell: sol.ell,
                            modulo: None,
                        },
                    )?;
                    worst_ps = worst_ps.max(rep.max());
                }
                entries.push(entry(
                    "verify/killing_warped/first-order",
                    &params,
                    worst_ps,
                    tol.max(crate::tol::PARALLEL_SQUARE),
                    started,
                ));
            }
        }
        other => {
            return Err(Error::InvalidParameter(format!("unknown family `{other}`")));
        }
    }
    Ok(Report::new(entries, seed))
}

// ---------------------------------------------------------------------------
// radial ODE command
// ---------------------------------------------------------------------------

#[derive(Serialize)]
pub struct OdeOutput {
    pub params: BTreeMap<String, String>,
    pub trajectory: Vec<solutions::RadialState>,
    pub rho: Vec<f64>,
    pub constraint: Vec<f64>,
    pub truncated: bool,
}

pub fn run_ode(
    lambda: f64,
    e: f64,
    c: f64,
    r0: f64,
    r1: f64,
    step: f64,
    fp_sign: i8,
) -> Result<(Report, OdeOutput)> {
    let p = RadialParams { lambda, e, c };
    let mut params = BTreeMap::new();
    params.insert("lambda".into(), lambda.to_string());
    params.insert("e".into(), e.to_string());
    params.insert("c".into(), c.to_string());
    params.insert("step".into(), step.to_string());

    // initial data from the closed form when available, otherwise complete
    // ℱ′ from the constraint
    let closed = if lambda < 0.0 { Some(radial_closed_form(&p, -1.0)?) } else { None };
    let init = match &closed {
        Some(cf) => cf.state(r0),
        None => {
            let k0 = if c > 0.0 { c.ln() } else { 0.0 };
            let f0 = 0.0;
            let fp = solutions::complete_initial_data(k0, 0.0, f0, &p, fp_sign)?;
            solutions::RadialState { r: r0, k: k0, kp: 0.0, f: f0, fp }
        }
    };
    let rho0 = closed.as_ref().map(|cf| cf.rho(r0)).unwrap_or(0.0);
    let traj = radial_integrate(&init, &p, r1, step, rho0)?;

    let mut entries = Vec::new();
    let started = Instant::now();
    entries.push(entry(
        "ode/constraint-drift",
        &params,
        traj.max_constraint_drift(),
        crate::tol::CONSTRAINT_DRIFT,
        started,
    ));
    if let Some(cf) = &closed {
        let started = Instant::now();
        let mut worst: f64 = 0.0;
        for st in &traj.states {
            let denom = cf.k(st.r).abs().max(cf.f(st.r).abs()).max(1.0);
            worst = worst
                .max((st.k - cf.k(st.r)).abs() / denom)
                .max((st.f - cf.f(st.r)).abs() / denom);
        }
        entries.push(entry(
            "ode/closed-form-error",
            &params,
            worst,
            crate::tol::RADIAL_CLOSED_FORM,
            started,
        ));
        let started = Instant::now();
        let err = |h: f64| -> Result<f64> {
            let t = radial_integrate(&init, &p, r1, h, rho0)?;
            let last = t.states.last().unwrap();
            Ok((last.k - cf.k(last.r)).abs() + (last.f - cf.f(last.r)).abs())
        };
        let e1 = err(step * 4.0)?;
        let e2 = err(step * 2.0)?;
        let order = (e1 / e2).log2();
        entries.push(entry("ode/convergence-order", &params, (order - 4.0).abs(), 0.2, started));
    }

    let out = OdeOutput {
        params: params.clone(),
        trajectory: traj.states.clone(),
        rho: traj.rho.clone(),
        constraint: traj.constraint.clone(),
        truncated: traj.truncated,
    };
    Ok((Report::new(entries, 0), out))
}

/// Pairing structure summary for a signature, used by the examples.
pub fn describe_pairings(p: u8, q: u8, ell: Option<i8>) -> Result<String> {
    let sig = Signature::new(p, q)?;
    let ctx = SquareContext::new(sig, ell)?;
    Ok(format!(
        "({p},{q}): module dim {}, hermitian s = {}, bilinear s = {}, σ = {:?}",
        ctx.rep.module_dim(),
        ctx.hermitian.s,
        ctx.bilinear.s,
        ctx.bilinear.sigma
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn algebra_report_deterministic_and_passing() {
        let r1 = run_algebra_suite(3, 1, 100, 7, 1e-12).unwrap();
        let r2 = run_algebra_suite(3, 1, 100, 7, 1e-12).unwrap();
        assert!(r1.all_pass(), "{}", r1.to_ndjson());
        let strip = |s: &str| {
            s.lines()
                .map(|l| {
                    let mut v: serde_json::Value = serde_json::from_str(l).unwrap();
                    if let Some(obj) = v.as_object_mut() {
                        obj.remove("wall_ms");
                    }
                    v.to_string()
                })
                .collect::<Vec<_>>()
                .join("\n")
        };
        assert_eq!(strip(&r1.to_ndjson()), strip(&r2.to_ndjson()));
    }

    #[test]
    fn squares_report_passes_for_lorentz4() {
        let r = run_squares_suite(3, 1, None, 1, SquaresKindArg::Both, 30, 11).unwrap();
        assert!(r.all_pass(), "{}", r.to_ndjson());
        let has_sigma = r.entries.iter().any(|e| {
            e.check_id.contains("admissible-bilinear")
                && e.params.get("sigma").map(|s| s.as_str()) == Some("-1")
        });
        assert!(has_sigma, "σ = −1 should be reported for (3,1)");
    }

    #[test]
    fn ode_report_passes() {
        let (r, out) = run_ode(-0.5, 1.0, 1.0, 0.0, 1.0, 1e-3, -1).unwrap();
        assert!(r.all_pass(), "{}", r.to_ndjson());
        assert!(!out.trajectory.is_empty());
    }

    #[test]
    fn verify_families_pass_at_small_point_counts() {
        for (family, extra) in [
            ("freedman", vec![("c3", "1.0")]),
            ("black_brane", vec![("m", "1.0")]),
            ("radial", vec![]),
            ("killing_warped", vec![("case", "imag3d")]),
        ] {
            let mut map = BTreeMap::new();
            for (k, v) in extra {
                map.insert(k.to_string(), v.to_string());
            }
            let r = run_verify_family(family, &map, 5, 1e-6, 3, None).unwrap();
            assert!(r.all_pass(), "{family}: {}", r.to_ndjson());
        }
    }

    #[test]
    fn perturbed_freedman_fails() {
        let map = BTreeMap::new();
        let r = run_verify_family("freedman", &map, 5, 1e-6, 3, Some(("H".into(), 0.1))).unwrap();
        let einstein =
            r.entries.iter().find(|e| e.check_id == "verify/freedman/einstein").unwrap();
        assert!(!einstein.pass && einstein.max_residual > 1e-3);
    }

    #[test]
    fn unknown_family_rejected() {
        let map = BTreeMap::new();
        assert!(matches!(
            run_verify_family("nope", &map, 5, 1e-6, 3, None),
            Err(Error::InvalidParameter(_))
        ));
    }
}
