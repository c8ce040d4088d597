//! Finite-difference geometry used to check the constructions
//! independently of their closed forms.

use std::ops::Range;

use crate::closed_form::curvature_radii_closed;
use crate::error::{Error, Result};
use crate::numerics::{is_uniform, sampled_derivatives};
use crate::scalar::{lit, Scalar};
use crate::types::{FamilyParams, PlaneCurveSamples, PlanePoint, RadiiPair, SpacePoint};

/// Denominators below this magnitude mark a sample as singular.
pub const SINGULAR_DENOMINATOR: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ResidualReport<T> {
    pub max_abs: T,
    pub argmax_param: T,
    pub n_samples: usize,
    pub normalization: T,
    /// Samples dropped because a denominator vanished.
    pub skipped: usize,
}

impl<T: Scalar> ResidualReport<T> {
    pub fn relative(&self) -> T {
        self.max_abs / self.normalization
    }

    pub fn passes(&self, tol: T) -> bool {
        self.max_abs <= tol * self.normalization
    }
}

/// Indices with a full central stencil: two neighbours per side on uniform
/// grids, one otherwise.
pub fn interior_range<T: Scalar>(curve: &PlaneCurveSamples<T>) -> Range<usize> {
    let n = curve.len();
    let w = if n >= 5 && is_uniform(curve.params()) {
        2
    } else {
        1
    };
    if n < 2 * w + 1 {
        0..0
    } else {
        w..n - w
    }
}

fn coordinate_derivatives<T: Scalar>(
    curve: &PlaneCurveSamples<T>,
    i: usize,
) -> Result<(PlanePoint<T>, PlanePoint<T>)> {
    let r: Vec<T> = curve.points().iter().map(|q| q.r).collect();
    let h: Vec<T> = curve.points().iter().map(|q| q.h).collect();
    let (dr, ddr) = sampled_derivatives(curve.params(), &r, i)?;
    let (dh, ddh) = sampled_derivatives(curve.params(), &h, i)?;
    Ok((PlanePoint::new(dr, dh), PlanePoint::new(ddr, ddh)))
}

/// Oriented radii at sample `index` of a profile parametrized by its
/// tangent angle: `rho1 = |P'|^3 / (r' h'' - r'' h')`, `rho2 = r |P'| / h'`,
/// both multiplied by `sgn(h' cos theta)`. Where `|cos theta| < |sin theta|`
/// the equivalent factor `sgn(-r' sin theta)` is used, which stays defined
/// where `h'` vanishes.
pub fn fd_curvature_radii<T: Scalar>(
    curve: &PlaneCurveSamples<T>,
    index: usize,
) -> Result<RadiiPair<T>> {
    if !interior_range(curve).contains(&index) {
        return Err(Error::SingularSample {
            index,
            reason: "boundary sample has no central stencil",
        });
    }
    let (d1, d2) = coordinate_derivatives(curve, index)?;
    let theta = curve.params()[index];
    let (s, c) = theta.sin_cos();
    let tiny = lit::<T>(SINGULAR_DENOMINATOR);
    let cross = d1.r * d2.h - d2.r * d1.h;
    if d1.h.abs() < tiny {
        return Err(Error::SingularSample {
            index,
            reason: "h' vanishes",
        });
    }
    if cross.abs() < tiny {
        return Err(Error::SingularSample {
            index,
            reason: "profile curvature vanishes",
        });
    }
    let speed = d1.norm();
    let orient = if c.abs() >= s.abs() {
        d1.h * c
    } else {
        -d1.r * s
    };
    let sign = if orient < T::zero() {
        -T::one()
    } else {
        T::one()
    };
    let q = curve.points()[index];
    Ok(RadiiPair {
        rho1: sign * speed * speed * speed / cross,
        rho2: sign * q.r * speed / d1.h,
    })
}

/// `max |rho1 + m rho2 - c|` over interior samples, with normalization
/// `1 + |c| + max |rho2|`.
pub fn weingarten_residual<T: Scalar>(
    m: T,
    c: T,
    curve: &PlaneCurveSamples<T>,
) -> Result<ResidualReport<T>> {
    if curve.len() < 5 {
        return Err(Error::InvalidInput(
            "residual needs at least 5 samples".into(),
        ));
    }
    let mut report = ResidualReport {
        max_abs: T::zero(),
        argmax_param: curve.params()[0],
        n_samples: 0,
        normalization: T::one() + c.abs(),
        skipped: 0,
    };
    let mut max_rho2 = T::zero();
    for i in interior_range(curve) {
        match fd_curvature_radii(curve, i) {
            Ok(rad) => {
                let res = (rad.rho1 + m * rad.rho2 - c).abs();
                report.n_samples += 1;
                max_rho2 = max_rho2.max(rad.rho2.abs());
                if res > report.max_abs || res.is_nan() {
                    report.max_abs = res;
                    report.argmax_param = curve.params()[i];
                }
            }
            Err(Error::SingularSample { .. }) => report.skipped += 1,
            Err(e) => return Err(e),
        }
    }
    if report.n_samples == 0 {
        return Err(Error::Degenerate("every sample was singular".into()));
    }
    report.normalization = report.normalization + max_rho2;
    Ok(report)
}

/// Signed length `L` from each evolute point along its tangent to the
/// axis, solving `e1 + L e1' / |e'| = 0`.
pub fn evolute_tangent_axis_length<T: Scalar>(evolute: &PlaneCurveSamples<T>) -> Result<Vec<T>> {
    let r: Vec<T> = evolute.points().iter().map(|q| q.r).collect();
    let h: Vec<T> = evolute.points().iter().map(|q| q.h).collect();
    let tiny = lit::<T>(SINGULAR_DENOMINATOR);
    (0..evolute.len())
        .map(|i| {
            let (dr, _) = sampled_derivatives(evolute.params(), &r, i)?;
            let (dh, _) = sampled_derivatives(evolute.params(), &h, i)?;
            if dr.abs() < tiny {
                return Err(Error::SingularSample {
                    index: i,
                    reason: "evolute tangent is parallel to the axis",
                });
            }
            Ok(-r[i] * dr.hypot(dh) / dr)
        })
        .collect()
}

/// Angle in `[0, pi/2]` between two directions, ignoring orientation.
pub fn unoriented_angle<T: Scalar>(a: SpacePoint<T>, b: SpacePoint<T>) -> T {
    a.cross(b).norm().atan2(a.dot(b).abs())
}

/// Index-based derivative of a sampled space curve.
fn space_tangent<T: Scalar>(curve: &[SpacePoint<T>], i: usize) -> Result<SpacePoint<T>> {
    let idx: Vec<T> = (0..curve.len()).map(|k| lit::<T>(k as f64)).collect();
    let comp = |f: fn(&SpacePoint<T>) -> T| -> Result<T> {
        let v: Vec<T> = curve.iter().map(f).collect();
        Ok(sampled_derivatives(&idx, &v, i)?.0)
    };
    Ok(SpacePoint::new(
        comp(|p| p.x)?,
        comp(|p| p.y)?,
        comp(|p| p.z)?,
    ))
}

/// Tolerance for a space curve to count as lying on the revolved profile.
pub const ON_SURFACE_TOL: f64 = 1e-6;

/// Angle between the tangent of `space_curve` and the parallel circle at
/// each sample. `profile[i]` must be the profile point revolved into
/// `space_curve[i]`, and the samples must be uniform in some parameter.
pub fn parallel_angle<T: Scalar>(
    profile: &PlaneCurveSamples<T>,
    space_curve: &[SpacePoint<T>],
) -> Result<Vec<T>> {
    if profile.len() != space_curve.len() {
        return Err(Error::InvalidInput(
            "profile and space curve lengths differ".into(),
        ));
    }
    let tol = lit::<T>(ON_SURFACE_TOL);
    for (i, (q, x)) in profile.points().iter().zip(space_curve).enumerate() {
        let off = (x.x.hypot(x.y) - q.r.abs()).abs().max((x.z - q.h).abs());
        if !(off <= tol * (T::one() + q.norm())) {
            return Err(Error::SingularSample {
                index: i,
                reason: "space curve sample is off the surface",
            });
        }
    }
    (0..space_curve.len())
        .map(|i| {
            let x = space_curve[i];
            let phi = x.y.atan2(x.x);
            let parallel = SpacePoint::new(-phi.sin(), phi.cos(), T::zero());
            Ok(unoriented_angle(space_tangent(space_curve, i)?, parallel))
        })
        .collect()
}

/// Normal curvature `cos^2 b / rho2 + sin^2 b / rho1` of the member `p` at
/// `theta`, in the tangent direction at angle `b` from the parallel.
pub fn normal_curvature<T: Scalar>(p: &FamilyParams<T>, theta: T, dir_angle: T) -> Result<T> {
    let rad = curvature_radii_closed(p, theta)?;
    let tiny = lit::<T>(SINGULAR_DENOMINATOR);
    if rad.rho1.abs() < tiny || rad.rho2.abs() < tiny {
        return Err(Error::SingularParameter {
            context: "normal_curvature (vanishing curvature radius)",
            param: crate::scalar::to_f64(theta),
        });
    }
    let (s, c) = dir_angle.sin_cos();
    Ok(c * c / rad.rho2 + s * s / rad.rho1)
}

/// Angle between the velocity of a unit-sphere curve and the meridian
/// through its point (great circle through the `z` poles), using a
/// five-point central difference of step `h`.
pub fn sphere_meridian_angle<T, F>(f: F, t: T, h: T) -> T
where
    T: Scalar,
    F: Fn(T) -> SpacePoint<T>,
{
    let two = lit::<T>(2.0);
    let d = (f(t - two * h) - f(t + two * h) + (f(t + h) - f(t - h)) * lit::<T>(8.0))
        * (T::one() / (lit::<T>(12.0) * h));
    let p = f(t);
    let pole = SpacePoint::new(T::zero(), T::zero(), T::one());
    let meridian = pole - p * p.z;
    unoriented_angle(d, meridian)
}

/// Five-point central derivative of a space curve.
pub fn space_derivative<T, F>(f: F, t: T, h: T) -> SpacePoint<T>
where
    T: Scalar,
    F: Fn(T) -> SpacePoint<T>,
{
    let two = lit::<T>(2.0);
    (f(t - two * h) - f(t + two * h) + (f(t + h) - f(t - h)) * lit::<T>(8.0))
        * (T::one() / (lit::<T>(12.0) * h))
}
