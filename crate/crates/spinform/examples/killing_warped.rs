//! Killing-spinor warped products in dimensions two to four: warp profiles
//! sin/sinh/exp, the Hessian identities, and the first-order square systems
//! checked through the chart-level parallel-square residual.
//!
//! Run with: `cargo run --example killing_warped`

use spinform::geometry::{
    FormField, ParallelSquareArgs, SymbolField, hessian_scalar, parallel_square_residual,
};
use spinform::solutions::{WarpedCase, killing_warped_chart};

fn main() {
    let lambda = 0.4;
    for case in [
        WarpedCase::Real2d,
        WarpedCase::Imag2d,
        WarpedCase::Imag3d,
        WarpedCase::Real4d,
        WarpedCase::Imag4dQ0,
        WarpedCase::Imag4dQPos,
    ] {
        let sol = killing_warped_chart(case, lambda, 1).unwrap();
        let (field, factor, scale_field, label) = match case {
            WarpedCase::Real2d | WarpedCase::Real4d => {
                (&sol.f, -4.0 * lambda * lambda, &sol.f, "Hess(f) + 4λ²f·g")
            }
            _ => (&sol.r, 4.0 * lambda * lambda, &sol.r, "Hess(r) − 4λ²r·g"),
        };
        let mut worst_h: f64 = 0.0;
        for x in sol.chart.sample_points(25, 1) {
            let hess = hessian_scalar(field, &sol.chart, &x);
            let expect = sol.chart.metric(&x) * (factor * scale_field.eval(&x));
            worst_h = worst_h.max((hess - expect).amax());
        }
        print!("{case:?} ({}d): {label} = {worst_h:.2e}", sol.chart.dim());
        match &sol.alpha {
            Some(alpha) => {
                let symbol = SymbolField::killing(&sol.chart, sol.lambda);
                let constraints: Vec<FormField> = vec![];
                let mut worst: f64 = 0.0;
                for x in sol.chart.sample_points(25, 2) {
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
                    )
                    .unwrap();
                    worst = worst.max(rep.max());
                }
                println!(",  full ∇α̂ = 𝔞⋄α̂ + α̂⋄τ(𝔞̄) residual = {worst:.2e}");
            }
            None => println!(",  (pinned sub-system checked in the acceptance suite)"),
        }
    }
}
