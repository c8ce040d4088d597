//! Profile curves described as envelopes of their tangent lines.
//!
//! The tangent line at angle `theta` meets the axis at height `v(theta)`.
//! The envelope point, the oriented curvature radii and the reconstruction
//! of a profile from its parallel-circle radius `rho2` all follow from `v`
//! and its first two derivatives.

use crate::error::{Error, Result};
use crate::numerics::{adaptive_simpson, central_derivatives, rk4_step};
use crate::scalar::{lit, to_f64, Scalar};
use crate::types::{PlaneCurveSamples, PlanePoint, RadiiPair};

type ScalarFn<'a, T> = Box<dyn Fn(T) -> T + Send + Sync + 'a>;

/// Default RK4 step for [`solve_rho2_ode`].
pub const DEFAULT_ODE_STEP: f64 = 1e-3;
/// Absolute tolerance of the height quadrature in [`reconstruct_profile`].
pub const HEIGHT_QUADRATURE_TOL: f64 = 1e-10;

/// Axis-intercept height `v(theta)` of the support lines, optionally with
/// analytic derivatives.
pub struct SupportFunction<'a, T> {
    v: ScalarFn<'a, T>,
    derivs: Option<(ScalarFn<'a, T>, ScalarFn<'a, T>)>,
}

impl<'a, T: Scalar> SupportFunction<'a, T> {
    pub fn new(v: impl Fn(T) -> T + Send + Sync + 'a) -> Self {
        SupportFunction {
            v: Box::new(v),
            derivs: None,
        }
    }

    pub fn with_derivatives(
        mut self,
        d1: impl Fn(T) -> T + Send + Sync + 'a,
        d2: impl Fn(T) -> T + Send + Sync + 'a,
    ) -> Self {
        self.derivs = Some((Box::new(d1), Box::new(d2)));
        self
    }

    pub fn has_analytic_derivatives(&self) -> bool {
        self.derivs.is_some()
    }

    pub fn value(&self, theta: T) -> T {
        (self.v)(theta)
    }

    /// `(v, v', v'')` at `theta`. Without analytic derivatives the first
    /// derivative uses a central step of `1e-5 max(1, |theta|)` and the
    /// second a step of `1e-4 max(1, |theta|)`.
    pub fn jet(&self, theta: T) -> Result<(T, T, T)> {
        let v = (self.v)(theta);
        let (d1, d2) = match &self.derivs {
            Some((d1, d2)) => (d1(theta), d2(theta)),
            None => {
                let scale = T::one().max(theta.abs());
                central_derivatives(
                    &*self.v,
                    theta,
                    lit::<T>(1e-5) * scale,
                    lit::<T>(1e-4) * scale,
                )
            }
        };
        if v.is_finite() && d1.is_finite() && d2.is_finite() {
            Ok((v, d1, d2))
        } else {
            Err(Error::Domain {
                context: "support function derivatives",
                param: to_f64(theta),
            })
        }
    }
}

/// Point of contact of the support line at `theta`:
/// `(-v' sin^2, v + v' cos sin)`.
pub fn envelope_point<T: Scalar>(
    support: &SupportFunction<'_, T>,
    theta: T,
) -> Result<PlanePoint<T>> {
    let (v, d1, _) = support.jet(theta)?;
    let (s, c) = theta.sin_cos();
    Ok(PlanePoint::new(-d1 * s * s, v + d1 * c * s))
}

/// Oriented radii `rho1 = v'' sin + 2 v' cos`, `rho2 = -v' sin^2 / cos`.
pub fn radii_from_support<T: Scalar>(
    support: &SupportFunction<'_, T>,
    theta: T,
) -> Result<RadiiPair<T>> {
    let (s, c) = theta.sin_cos();
    if c.abs() < lit(1e-12) {
        return Err(Error::SingularParameter {
            context: "radii_from_support (cos theta = 0)",
            param: to_f64(theta),
        });
    }
    let (_, d1, d2) = support.jet(theta)?;
    Ok(RadiiPair {
        rho1: d2 * s + lit::<T>(2.0) * d1 * c,
        rho2: -d1 * s * s / c,
    })
}

fn tan_branch<T: Scalar>(theta: T) -> T {
    ((theta + T::FRAC_PI_2()) / T::PI()).floor()
}

/// Integrates `rho2' = ((m + 1) rho2 - c) tan theta` over `grid` with
/// classical RK4, starting from `rho2_0` at `theta0 = grid[0]`.
pub fn solve_rho2_ode<T: Scalar>(m: T, c: T, theta0: T, rho2_0: T, grid: &[T]) -> Result<Vec<T>> {
    solve_rho2_ode_with_step(m, c, theta0, rho2_0, grid, lit(DEFAULT_ODE_STEP))
}

/// As [`solve_rho2_ode`], subdividing grid intervals longer than `max_step`.
pub fn solve_rho2_ode_with_step<T: Scalar>(
    m: T,
    c: T,
    theta0: T,
    rho2_0: T,
    grid: &[T],
    max_step: T,
) -> Result<Vec<T>> {
    if m == T::zero() {
        return Err(Error::SingularSlope);
    }
    if !(max_step > T::zero()) {
        return Err(Error::InvalidInput("ODE step must be positive".into()));
    }
    let Some(&first) = grid.first() else {
        return Ok(Vec::new());
    };
    if (first - theta0).abs() > lit::<T>(1e-12) * T::one().max(theta0.abs()) {
        return Err(Error::InvalidInput(format!(
            "grid starts at {} but theta0 is {}",
            to_f64(first),
            to_f64(theta0)
        )));
    }
    let increasing = grid.len() < 2 || grid[1] > grid[0];
    if grid.windows(2).any(|w| {
        if increasing {
            !(w[1] > w[0])
        } else {
            !(w[1] < w[0])
        }
    }) {
        return Err(Error::InvalidInput(
            "ODE grid must be strictly monotone".into(),
        ));
    }
    let branch = tan_branch(first);
    for &t in grid {
        if tan_branch(t) != branch || t.cos().abs() < lit(1e-12) {
            return Err(Error::Domain {
                context: "solve_rho2_ode (grid crosses a pole of tan)",
                param: to_f64(t),
            });
        }
    }

    let m1 = m + T::one();
    let rhs = |t: T, y: &[T; 1]| [(m1 * y[0] - c) * t.tan()];
    let mut out = Vec::with_capacity(grid.len());
    let mut y = [rho2_0];
    out.push(rho2_0);
    for w in grid.windows(2) {
        let span = w[1] - w[0];
        let steps = (span.abs() / max_step).ceil().max(T::one());
        let n = steps.to_usize().unwrap_or(1);
        let h = span / steps;
        for k in 0..n {
            let t = w[0] + h * lit::<T>(k as f64);
            y = rk4_step(&rhs, t, y, h);
        }
        out.push(y[0]);
    }
    Ok(out)
}

/// Rebuilds the profile from its parallel-circle radius:
/// `r = rho2 cos`, `h = -int rho2 cos / sin^2 - rho2 cos^2 / sin + K` with
/// the integral anchored at `grid[0]`.
pub fn reconstruct_profile<T, F>(rho2: F, grid: &[T], k: T) -> Result<PlaneCurveSamples<T>>
where
    T: Scalar,
    F: Fn(T) -> T,
{
    let Some(&first) = grid.first() else {
        return Ok(PlaneCurveSamples::empty());
    };
    let branch = (first / T::PI()).floor();
    for &t in grid {
        if (t / T::PI()).floor() != branch || t.sin().abs() < lit(1e-12) {
            return Err(Error::Domain {
                context: "reconstruct_profile (grid touches sin theta = 0)",
                param: to_f64(t),
            });
        }
    }
    let integrand = |t: T| {
        let (s, c) = t.sin_cos();
        rho2(t) * c / (s * s)
    };
    let tol = lit::<T>(HEIGHT_QUADRATURE_TOL);
    let mut acc = T::zero();
    let mut points = Vec::with_capacity(grid.len());
    for (i, &t) in grid.iter().enumerate() {
        if i > 0 {
            acc = acc + adaptive_simpson(integrand, grid[i - 1], t, tol);
        }
        let (s, c) = t.sin_cos();
        let rt = rho2(t);
        if !rt.is_finite() {
            return Err(Error::Domain {
                context: "reconstruct_profile (rho2 not finite)",
                param: to_f64(t),
            });
        }
        points.push(PlanePoint::new(rt * c, -acc - rt * c * c / s + k));
    }
    PlaneCurveSamples::new(grid.to_vec(), points)
}
