//! Spinor squaring maps end to end: gamma construction, admissible pairings,
//! Hermitian and complex-bilinear squares, the characterization axioms, the
//! Lorentzian normal forms, and round-trip reconstruction.
//!
//! Run with: `cargo run --example spinor_squares`

use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use spinform::algebra::Signature;
use spinform::report::describe_pairings;
use spinform::spinor::{bilinear_square, hermitian_square, reconstruct_spinor};
use spinform::verifier::{
    NormalForm, SquareContext, SquareKind, check_square_axioms, hermitian_bilinear_compatibility,
    normal_form,
};

fn cx(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn main() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);

    // discovered pairing structure per signature
    for (p, q, ell) in [(2u8, 0u8, None), (3, 0, Some(1i8)), (3, 1, None), (5, 1, None)] {
        println!("{}", describe_pairings(p, q, ell).unwrap());
    }

    // (3,1): the Hermitian square of a chiral spinor is u + iμ∗u with u a
    // real isotropic one-form
    let ctx31 = SquareContext::new(Signature::new(3, 1).unwrap(), None).unwrap();
    let mu = 1i8;
    let eta = ctx31.rep.random_chiral_spinor(mu, &mut rng).unwrap();
    let ah = hermitian_square(&ctx31.rep, &eta, cx(1.0, 0.0), &ctx31.hermitian).unwrap();
    let axioms = check_square_axioms(
        &ah,
        SquareKind::Hermitian { kappa: cx(1.0, 0.0) },
        ctx31.hermitian.s,
        Some(mu),
        None,
        &mut rng,
        1e-10,
    )
    .unwrap();
    println!("\n(3,1) chiral Hermitian square passes axioms: {}", axioms.verdict);
    match normal_form(&ah, Some(mu), None).unwrap() {
        NormalForm::Lorentz4 { u, residuals } => {
            println!("  Dirac current ⟨u,u⟩ = {:?}", u.metric_pairing(&u).unwrap());
            let worst = residuals.iter().map(|(_, v)| *v).fold(0.0, f64::max);
            println!("  normal-form residuals ≤ {worst:.2e}");
        }
        _ => unreachable!(),
    }

    // the bilinear square determines η up to sign
    let ab = bilinear_square(&ctx31.rep, &eta, &ctx31.bilinear).unwrap();
    let rec = reconstruct_spinor(&ctx31.rep, &ab, &ctx31.bilinear).unwrap();
    let dplus = (&rec.eta - &eta).norm();
    let dminus = (&rec.eta + &eta).norm();
    println!("  bilinear round trip: min(‖η̂−η‖, ‖η̂+η‖)/‖η‖ = {:.2e}", dplus.min(dminus) / eta.norm());

    // (5,1): isotropic one-form u, gauge-fixed ω with ⟨ω,ω⟩ = 2, and the
    // compatibility of both squares of the same spinor
    let ctx51 = SquareContext::new(Signature::new(5, 1).unwrap(), None).unwrap();
    let eta6 = ctx51.rep.random_chiral_spinor(mu, &mut rng).unwrap();
    let ah6 = hermitian_square(&ctx51.rep, &eta6, cx(1.0, 0.0), &ctx51.hermitian).unwrap();
    let nf0 = normal_form(&ah6, Some(mu), None).unwrap();
    let u = match &nf0 {
        NormalForm::Lorentz6 { u, .. } => u.clone(),
        _ => unreachable!(),
    };
    // conjugate one-form: flip the timelike slot of u and normalize
    let mut v = spinform::algebra::Multivector::zero(u.sig());
    let mut spat = 0.0;
    for i in 0..6 {
        let c = u.coeff(1 << i);
        if i < 5 {
            spat += c.re * c.re;
            v.set_coeff(1 << i, c);
        } else {
            v.set_coeff(1 << i, -c);
        }
    }
    let v = v.scale(cx(1.0 / (2.0 * spat), 0.0));
    match normal_form(&ah6, Some(mu), Some(&v)).unwrap() {
        NormalForm::Lorentz6 { omega: Some(w), residuals, .. } => {
            println!("\n(5,1) gauge-fixed ⟨ω,ω⟩ = {:?}", w.metric_pairing(&w).unwrap());
            let worst = residuals.iter().map(|(_, r)| *r).fold(0.0, f64::max);
            println!("  normal-form + Hodge-relation residuals ≤ {worst:.2e}");
        }
        _ => unreachable!(),
    }
    let ab6 = bilinear_square(&ctx51.rep, &eta6, &ctx51.bilinear).unwrap();
    let comp = hermitian_bilinear_compatibility(&ah6, &ab6, &v, mu, 1e-8).unwrap();
    println!("  same-spinor compatibility of both squares: {}", comp.pass);
    for (name, r) in &comp.residuals {
        println!("    {name}: {r:.2e}");
    }
}
