//! Asymptotic and constant-angle curves on surfaces of revolution.
//!
//! For `m = tan^2 tau > 0` the curves through the neck meeting every
//! parallel at angle `tau` are asymptotic. Their unit tangent `e1` traces a
//! spherical tractrix and the surface normal `e3` a loxodrome; both are
//! evaluated here in closed form, together with the asymptotic curve and the
//! asymptotic `(t, s)` net. For other slopes, curves of any constant angle
//! are integrated numerically on the revolved profile.

use crate::closed_form::{curvature_radii_closed, parameter_window, profile_point};
use crate::error::{Error, Result};
use crate::numerics::{adaptive_simpson, rk4_step};
use crate::scalar::{lit, real_pow, to_f64, Scalar};
use crate::types::{FamilyParams, SpacePoint};

/// Angle `tau` in `(0, pi/2)` with `tan^2 tau = m`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TauAngle<T> {
    tau: T,
}

impl<T: Scalar> TauAngle<T> {
    pub fn new(tau: T) -> Result<Self> {
        if tau > T::zero() && tau < T::FRAC_PI_2() {
            Ok(TauAngle { tau })
        } else {
            Err(Error::Domain {
                context: "tau must lie in (0, pi/2)",
                param: to_f64(tau),
            })
        }
    }

    pub fn tau(self) -> T {
        self.tau
    }

    /// The slope `m = tan^2 tau`.
    pub fn slope(self) -> T {
        let t = self.tau.tan();
        t * t
    }
}

/// `tau = atan(sqrt m)`; only positive slopes have real asymptotic angles.
pub fn tau_from_m<T: Scalar>(m: T) -> Result<TauAngle<T>> {
    if !(m > T::zero()) || !m.is_finite() {
        return Err(Error::Domain {
            context: "tau_from_m needs m > 0 (no real asymptotic directions)",
            param: to_f64(m),
        });
    }
    TauAngle::new(m.sqrt().atan())
}

/// Spherical images along the asymptotic curve.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FrameSample<T> {
    /// Unit tangent.
    pub e1: SpacePoint<T>,
    /// `e3 x e1`.
    pub e2: SpacePoint<T>,
    /// Continuous surface normal.
    pub e3: SpacePoint<T>,
    /// Unit tangent of the parallel circle.
    pub f1: SpacePoint<T>,
}

pub fn frame_curves<T: Scalar>(tau: TauAngle<T>, t: T) -> FrameSample<T> {
    let (st, ct) = tau.tau.sin_cos();
    let u = t * ct / st;
    let (s, c) = t.sin_cos();
    let th = u.tanh();
    let ch = u.cosh();
    let e1 = SpacePoint::new(-c * st * th + s * ct, -s * st * th - c * ct, st / ch);
    let e3 = SpacePoint::new(c / ch, s / ch, u.sinh() / ch);
    let e2 = e3.cross(e1);
    let f1 = e1 * ct + e2 * st;
    FrameSample { e1, e2, e3, f1 }
}

/// Profile `(r(t), h(t))` of the asymptotic curve, `h(0) = 0`.
pub fn asymptotic_profile<T: Scalar>(j: T, tau: TauAngle<T>, t: T) -> (T, T) {
    let m = tau.slope();
    let cot = T::one() / tau.tau.tan();
    let r = j * real_pow((t * cot).cosh(), m);
    let tan = tau.tau.tan();
    let h = if (m - T::one()).abs() < lit(1e-12) {
        -j * tan * t
    } else {
        let f = |s: T| real_pow((s * cot).cosh(), m - T::one());
        let scale = T::one().max(f(t).abs() * t.abs());
        -j * tan * adaptive_simpson(f, T::zero(), t, lit::<T>(1e-14) * scale)
    };
    (r, h)
}

/// Point `(r cos t, r sin t, h)` of the asymptotic curve through the neck.
pub fn asymptotic_point<T: Scalar>(j: T, tau: TauAngle<T>, t: T) -> SpacePoint<T> {
    let (r, h) = asymptotic_profile(j, tau, t);
    let (s, c) = t.sin_cos();
    SpacePoint::new(r * c, r * s, h)
}

/// The asymptotic net `(r(t-s) cos(t+s), r(t-s) sin(t+s), h(t-s))`.
pub fn asymptotic_parametrization<T: Scalar>(j: T, tau: TauAngle<T>, t: T, s: T) -> SpacePoint<T> {
    let (r, h) = asymptotic_profile(j, tau, t - s);
    let (sn, cs) = (t + s).sin_cos();
    SpacePoint::new(r * cs, r * sn, h)
}

/// Curve parameter `t = sgn(theta) tan(tau) arccosh(sec theta)` of the point
/// with profile tangent angle `theta`.
pub fn asymptotic_reparam<T: Scalar>(tau: TauAngle<T>, theta: T) -> Result<T> {
    if !(theta.abs() < T::FRAC_PI_2()) {
        return Err(Error::Domain {
            context: "asymptotic_reparam needs |theta| < pi/2",
            param: to_f64(theta),
        });
    }
    let t = tau.tau.tan() * (T::one() / theta.cos()).acosh();
    Ok(if theta < T::zero() { -t } else { t })
}

/// Inverse of [`asymptotic_reparam`]: `theta = atan(sinh(t cot tau))`.
pub fn asymptotic_theta<T: Scalar>(tau: TauAngle<T>, t: T) -> T {
    (t / tau.tau.tan()).sinh().atan()
}

/// Integrated curve of constant angle with the parallels.
#[derive(Debug, Clone, PartialEq)]
pub struct ConstantAngleCurve<T> {
    pub points: Vec<SpacePoint<T>>,
    pub theta: Vec<T>,
    pub phi: Vec<T>,
    pub arc: Vec<T>,
    /// The integration stopped before the requested arc length.
    pub truncated: bool,
}

/// RK4 steps between consecutive output samples.
pub const SUBSTEPS_PER_SAMPLE: usize = 8;

/// Integrates, in arc length, the surface curve of the member `p` whose
/// unit tangent is `cos(angle)` along the parallel plus `sin(angle)` along
/// the meridian, starting at `(theta0, phi0)`. Returns `n` samples spaced
/// `arc / (n - 1)` apart, fewer if the curve reaches the edge of the
/// parameter window, a cusp, or the axis.
pub fn constant_angle_curve<T: Scalar>(
    p: &FamilyParams<T>,
    angle: T,
    theta0: T,
    phi0: T,
    arc: T,
    n: usize,
) -> Result<ConstantAngleCurve<T>> {
    p.validate()?;
    if !(angle > T::zero() && angle <= T::FRAC_PI_2()) {
        return Err(Error::Domain {
            context: "constant_angle_curve needs angle in (0, pi/2]",
            param: to_f64(angle),
        });
    }
    if n < 2 || !(arc > T::zero()) {
        return Err(Error::InvalidInput("need n >= 2 and arc > 0".into()));
    }
    let (lo, hi) = parameter_window(p.m);
    let margin = lit::<T>(1e-3);
    let (lo, hi) = (lo + margin, hi - margin);
    if !(theta0 >= lo && theta0 <= hi) {
        return Err(Error::Domain {
            context: "constant_angle_curve start outside the parameter window",
            param: to_f64(theta0),
        });
    }

    let (sa, ca) = angle.sin_cos();
    let p = *p;
    let tiny = lit::<T>(1e-12);
    let rhs = |_: T, y: &[T; 2]| {
        let fail = [T::nan(), T::nan()];
        let (Ok(q), Ok(rad)) = (profile_point(&p, y[0]), curvature_radii_closed(&p, y[0])) else {
            return fail;
        };
        if q.r.abs() < tiny || rad.rho1.abs() < tiny {
            return fail;
        }
        [sa / rad.rho1.abs(), ca / q.r.abs()]
    };

    let mut out = ConstantAngleCurve {
        points: Vec::with_capacity(n),
        theta: Vec::with_capacity(n),
        phi: Vec::with_capacity(n),
        arc: Vec::with_capacity(n),
        truncated: false,
    };
    let push = |out: &mut ConstantAngleCurve<T>, y: [T; 2], s: T| -> Result<()> {
        let q = profile_point(&p, y[0])?;
        out.points.push(SpacePoint::revolve(q, y[1]));
        out.theta.push(y[0]);
        out.phi.push(y[1]);
        out.arc.push(s);
        Ok(())
    };

    let steps = SUBSTEPS_PER_SAMPLE * (n - 1);
    let h = arc / lit::<T>(steps as f64);
    let mut y = [theta0, phi0];
    push(&mut out, y, T::zero())?;
    for k in 0..steps {
        let s = h * lit::<T>(k as f64);
        let next = rk4_step(&rhs, s, y, h);
        if !(next[0].is_finite() && next[1].is_finite()) || next[0] < lo || next[0] > hi {
            out.truncated = true;
            break;
        }
        y = next;
        if (k + 1) % SUBSTEPS_PER_SAMPLE == 0 {
            push(&mut out, y, h * lit::<T>((k + 1) as f64))?;
        }
    }
    Ok(out)
}
