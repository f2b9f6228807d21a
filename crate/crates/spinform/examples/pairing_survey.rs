//! Empirical survey of admissible pairing types: for every signature with
//! `d ≤ 7`, solve the admissibility constraints for both kinds and both
//! adjoint types, and print which combinations are realized together with the
//! discovered symmetry type of the bilinear pairings.
//!
//! Run with: `cargo run --example pairing_survey`

use spinform::algebra::Signature;
use spinform::spinor::{PairingKind, SpinorRep, solve_admissible};

fn main() {
    println!(
        "{:>6} {:>4} | {:>10} {:>10} | {:>14} {:>14}",
        "(p,q)", "ℓ", "ℋ s=+1", "ℋ s=−1", "ℬ s=+1", "ℬ s=−1"
    );
    for d in 1..=7usize {
        for p in 0..=d {
            let sig = Signature::new(p as u8, (d - p) as u8).unwrap();
            let branches: Vec<Option<i8>> =
                if sig.is_odd() { vec![Some(1), Some(-1)] } else { vec![None] };
            for ell in branches {
                let rep = SpinorRep::build(sig, ell).unwrap();
                let cell = |kind: PairingKind, s: i8| -> String {
                    match solve_admissible(&rep, s, kind) {
                        Ok(pairing) => match pairing.sigma {
                            Some(sg) => format!("yes (σ={sg:+})"),
                            None => "yes".to_string(),
                        },
                        Err(_) => "—".to_string(),
                    }
                };
                println!(
                    "{:>6} {:>4} | {:>10} {:>10} | {:>14} {:>14}",
                    format!("({},{})", sig.p, sig.q),
                    ell.map(|l| format!("{l:+}")).unwrap_or_else(|| "·".into()),
                    cell(PairingKind::Hermitian, 1),
                    cell(PairingKind::Hermitian, -1),
                    cell(PairingKind::Bilinear, 1),
                    cell(PairingKind::Bilinear, -1),
                );
            }
        }
    }
}
