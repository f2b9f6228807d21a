//! Tour of the multivector layer: geometric products in mixed signature,
//! generalized products, involutions, Hodge duals, and the odd-dimensional
//! truncated algebra.
//!
//! Run with: `cargo run --example algebra_tour`

use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use spinform::algebra::truncated::complex_volume;
use spinform::algebra::{Multivector, Signature, TruncatedMultivector};

fn c(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

fn main() {
    // one-forms square to their metric norm: e¹⋄e¹ = +1 in (2,0)
    let s20 = Signature::new(2, 0).unwrap();
    let e1 = Multivector::basis_one_form(s20, 0);
    let e2 = Multivector::basis_one_form(s20, 1);
    println!("(2,0)  e¹⋄e¹            = {:?}", e1.geometric_product(&e1).unwrap());
    println!("(2,0)  e¹⋄e²            = {:?}", e1.geometric_product(&e2).unwrap());

    // an isotropic vector in (1,1) squares to zero
    let s11 = Signature::new(1, 1).unwrap();
    let u = Multivector::basis_one_form(s11, 0) + Multivector::basis_one_form(s11, 1);
    println!("(1,1)  (e¹+e²)⋄(e¹+e²)  = {:?}", u.geometric_product(&u).unwrap());

    // the graded expansion through generalized products reproduces ⋄
    let s31 = Signature::new(3, 1).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let a = Multivector::random(s31, &mut rng);
    let b = Multivector::random(s31, &mut rng);
    let drift = (a.geometric_product(&b).unwrap() - a.graded_expansion_product(&b).unwrap())
        .norm_inf();
    println!("(3,1)  ‖a⋄b − Σₖ ±a△ₖb‖  = {drift:.2e}");

    // involutions: τ flips two-forms, π∘τ fixes three-forms
    let e12 = Multivector::blade(s31, 0b0011, c(1.0));
    println!("(3,1)  τ(e¹∧e²)          = {:?}", e12.reversion());

    // Hodge star and the volume identity α⋄ν = ∗τ(α)
    let nu = Multivector::volume_form(s31);
    let lhs = a.geometric_product(&nu).unwrap();
    let rhs = a.reversion().hodge_star();
    println!("(3,1)  ‖a⋄ν − ∗τ(a)‖     = {:.2e}", (lhs - rhs).norm_inf());
    println!(
        "(3,1)  ν⋄ν               = {:?} (sign table gives −1)",
        nu.geometric_product(&nu).unwrap().scalar_part()
    );

    // odd dimensions: the central complex volume element and the truncated
    // product ∨ on grades ≤ (d−1)/2
    let s30 = Signature::new(3, 0).unwrap();
    let nu_c = complex_volume(s30).unwrap();
    println!("(3,0)  ν_ℂ               = {nu_c:?}");
    for ell in [1i8, -1] {
        let f1 = TruncatedMultivector::new(Multivector::basis_one_form(s30, 0), ell).unwrap();
        let f2 = TruncatedMultivector::new(Multivector::basis_one_form(s30, 1), ell).unwrap();
        println!(
            "(3,0)  e¹∨e² (ℓ={ell:+})     = {:?}",
            f1.vee(&f2).unwrap().as_multivector()
        );
    }

    // associativity of ∨ at randomized inputs
    let s41 = Signature::new(4, 1).unwrap();
    let mut worst: f64 = 0.0;
    for _ in 0..200 {
        let mk = |rng: &mut ChaCha8Rng| {
            TruncatedMultivector::truncate(&Multivector::random(s41, rng), 1).unwrap()
        };
        let (x, y, z) = (mk(&mut rng), mk(&mut rng), mk(&mut rng));
        let l = x.vee(&y).unwrap().vee(&z).unwrap();
        let r = x.vee(&y.vee(&z).unwrap()).unwrap();
        worst = worst.max(l.sub(&r).unwrap().norm_inf());
    }
    println!("(4,1)  ∨-associativity residual over 200 triples = {worst:.2e}");
}
