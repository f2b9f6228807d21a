//! Closed-form background families and their residual checks.

pub mod brane;
pub mod freedman;
pub mod kundt;
pub mod radial;
pub mod reduced;
pub mod warped;

pub use brane::{BlackBraneSolution, black_brane_chart};
pub use freedman::{FreedmanParams, FreedmanSolution, freedman_chart};
pub use kundt::{
    BrinkmannClosedForm, KundtClosedForm, brinkmann_closed_form, kundt_chart,
    kundt_closed_form,
};
pub use radial::{
    RadialClosedForm, RadialParams, RadialState, RadialTrajectory, complete_initial_data,
    radial_closed_form, radial_integrate, radial_rhs,
};
pub use reduced::{
    EinsteinFrameData, GerbeCheck, GerbeComponents, RadialFamily, ReducedResidual,
    TransverseData, WavefrontResidual, radial_family_data, reduced_system_residual,
    selfdual_gerbe_check, wavefront_residual_einstein, wavefront_residual_string,
};
pub use warped::{WarpedCase, WarpedSolution, killing_warped_chart};
