//! Surfaces of revolution whose principal curvature radii satisfy
//! `rho1 + m rho2 = c`.
//!
//! The crate builds such profiles in closed form or from their support
//! function, classifies them by algebraic degree, offsets them, constructs
//! asymptotic and constant-angle parametrizations, and checks all of it
//! with independent finite-difference geometry.
//!
//! The geometry is generic over [`Scalar`] (`f32`, `f64`); degree
//! certificates use exact rationals; I/O works in `f64`.

// `!(x > 0)` style guards are kept so that NaN is rejected too.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod algebraic;
pub mod asymptotic;
pub mod classify;
pub mod closed_form;
pub mod error;
pub mod export;
pub mod numerics;
pub mod scalar;
pub mod support;
pub mod types;
pub mod verify;

pub use algebraic::{
    evolute_implicit, evolute_implicit_residual, implicit_residual, line_intersection_poly,
    line_root_points, parse_rational, profile_implicit, profile_implicit_full, ExactFamily,
    LineCoeffs, Rational, RationalBiPoly, RationalUniPoly,
};
pub use asymptotic::{
    asymptotic_parametrization, asymptotic_point, asymptotic_profile, asymptotic_reparam,
    constant_angle_curve, frame_curves, tau_from_m, ConstantAngleCurve, FrameSample, TauAngle,
};
pub use classify::{classify_family, Algebraicity, Basis, FamilyClass, FamilyKind};
pub use closed_form::{
    curvature_radii_closed, evolute_point, offset_params, parameter_window, profile_normal,
    profile_point, sample_evolute, sample_profile, secant_power_integral, support_function,
    PowerIntegralBranch, PowerIntegralResult,
};
pub use error::{Error, Result};
pub use export::{
    asymptotic_net, asymptotic_net_obj, load_config, read_profile_csv, revolve, revolve_to_obj,
    validate_obj, write_profile_csv, PartialConfig, RunConfig, SurfaceMesh,
};
pub use scalar::Scalar;
pub use support::{
    envelope_point, radii_from_support, reconstruct_profile, solve_rho2_ode, SupportFunction,
};
pub use types::{FamilyParams, PlaneCurveSamples, PlanePoint, RadiiPair, SpacePoint};
pub use verify::{
    evolute_tangent_axis_length, fd_curvature_radii, normal_curvature, parallel_angle,
    weingarten_residual, ResidualReport,
};

pub type FamilyParams64 = FamilyParams<f64>;
pub type FamilyParams32 = FamilyParams<f32>;
pub type PlanePoint64 = PlanePoint<f64>;
pub type SpacePoint64 = SpacePoint<f64>;
pub type RadiiPair64 = RadiiPair<f64>;
pub type PlaneCurveSamples64 = PlaneCurveSamples<f64>;
pub type ResidualReport64 = ResidualReport<f64>;
pub type TauAngle64 = TauAngle<f64>;
