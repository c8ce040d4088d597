//! Closed-form profile curves, curvature radii, evolutes and offsets.
//!
//! Every member of a family is parametrized by the tangent angle `theta`
//! of its profile, with profile normal `n(theta) = (-cos theta, -sin theta)`.
//! For `m = -1` the radii are logarithmic in `cos theta`; for every other
//! slope they are built from the antiderivative of `sec^m`, which is
//! evaluated in closed form for integer `m` and by quadrature otherwise.
//! All antiderivatives vanish at `theta = 0`; `K` is added afterwards.

use crate::error::{Error, Result};
use crate::numerics::{adaptive_simpson, linspace};
use crate::scalar::{as_integer, lit, real_pow, to_f64, Scalar};
use crate::support::SupportFunction;
use crate::types::{FamilyParams, PlaneCurveSamples, PlanePoint, RadiiPair};

/// Which expansion produced a secant-power antiderivative.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PowerIntegralBranch {
    /// Polynomial in `tan theta`.
    EvenPositive,
    /// Double-factorial reduction ending in `log|sec + tan|`.
    OddPositiveWithLog,
    /// Polynomial in `sin theta`.
    OddNegative,
    /// Multiple-angle sines plus a term linear in `theta`.
    EvenNegativeWithTheta,
    /// Adaptive quadrature for non-integer exponents.
    Numeric,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PowerIntegralResult<T> {
    pub value: T,
    pub branch: PowerIntegralBranch,
}

/// Open parameter interval on which the closed forms of slope `m` are
/// evaluated: `(-pi, pi)` for integer `m < -1` (and `m = 0`), otherwise
/// `(-pi/2, pi/2)`.
pub fn parameter_window<T: Scalar>(m: T) -> (T, T) {
    let entire = matches!(as_integer(m), Some(k) if k < -1 || k == 0);
    if entire {
        (-T::PI(), T::PI())
    } else {
        (-T::FRAC_PI_2(), T::FRAC_PI_2())
    }
}

fn check_window<T: Scalar>(m: T, theta: T, context: &'static str) -> Result<()> {
    let (lo, hi) = parameter_window(m);
    if theta.is_finite() && theta > lo && theta < hi {
        Ok(())
    } else {
        Err(Error::Domain {
            context,
            param: to_f64(theta),
        })
    }
}

fn binomial<T: Scalar>(n: i64, k: i64) -> T {
    (0..k).fold(T::one(), |acc, i| {
        acc * lit::<T>((n - i) as f64) / lit::<T>((i + 1) as f64)
    })
}

/// `n!!` with `(-1)!! = 0!! = 1`.
pub fn double_factorial(n: i64) -> f64 {
    assert!(n >= -1, "double factorial of {n}");
    let mut acc = 1.0;
    let mut k = n;
    while k > 1 {
        acc *= k as f64;
        k -= 2;
    }
    acc
}

/// The antiderivative of `sec^m` vanishing at `theta = 0`.
pub fn secant_power_integral<T: Scalar>(m: T, theta: T) -> Result<PowerIntegralResult<T>> {
    check_window(m, theta, "secant_power_integral")?;
    let Some(mi) = as_integer(m) else {
        return Ok(PowerIntegralResult {
            value: secant_power_quadrature(m, theta),
            branch: PowerIntegralBranch::Numeric,
        });
    };
    let (value, branch) = if mi > 0 && mi % 2 == 0 {
        let k = (mi - 2) / 2;
        let u = theta.tan();
        let value = (0..=k).fold(T::zero(), |acc, j| {
            let p = 2 * j + 1;
            acc + binomial::<T>(k, j) * u.powi(p as i32) / lit((p) as f64)
        });
        (value, PowerIntegralBranch::EvenPositive)
    } else if mi > 0 {
        let (sec, tan) = (T::one() / theta.cos(), theta.tan());
        let df = |n: i64| lit::<T>(double_factorial(n));
        let series = (1..=(mi - 1) / 2).fold(T::zero(), |acc, j| {
            let coeff = df(mi - 2) / df(mi - 2 * j) * df(mi - 2 * j + 1) / df(mi - 1);
            acc + coeff * sec.powi((mi - 2 * j) as i32) * tan / lit((mi - 2 * j + 1) as f64)
        });
        let log_coeff = df(mi - 2) / df(mi - 1);
        (
            series + log_coeff * tan.asinh(),
            PowerIntegralBranch::OddPositiveWithLog,
        )
    } else if mi % 2 != 0 {
        let k = (-mi - 1) / 2;
        let s = theta.sin();
        let value = (0..=k).fold(T::zero(), |acc, j| {
            let p = 2 * j + 1;
            let sign = if j % 2 == 0 { T::one() } else { -T::one() };
            acc + sign * binomial::<T>(k, j) * s.powi(p as i32) / lit(p as f64)
        });
        (value, PowerIntegralBranch::OddNegative)
    } else {
        let mh = -mi;
        let two = lit::<T>(2.0);
        let linear = theta * binomial::<T>(mh, mh / 2) / two.powi(mh as i32);
        let waves = (0..mh / 2).fold(T::zero(), |acc, j| {
            let f = mh - 2 * j;
            acc + binomial::<T>(mh, j) * (lit::<T>(f as f64) * theta).sin() / lit(f as f64)
        });
        (
            linear + waves / two.powi((mh - 1) as i32),
            PowerIntegralBranch::EvenNegativeWithTheta,
        )
    };
    Ok(PowerIntegralResult { value, branch })
}

/// Quadrature route for `int_0^theta sec^m`, valid for any real `m` on
/// `|theta| < pi/2`.
pub fn secant_power_quadrature<T: Scalar>(m: T, theta: T) -> T {
    let f = |x: T| real_pow(x.cos(), -m);
    let scale = T::one().max(f(theta).abs() * theta.abs());
    adaptive_simpson(f, T::zero(), theta, lit::<T>(1e-14) * scale)
}

/// Oriented curvature radii of the member `p` at tangent angle `theta`.
pub fn curvature_radii_closed<T: Scalar>(p: &FamilyParams<T>, theta: T) -> Result<RadiiPair<T>> {
    p.validate()?;
    check_window(p.m, theta, "curvature_radii_closed")?;
    let rho2 = if p.is_log_branch() {
        p.c * theta.cos().ln() + p.j
    } else {
        let m1 = p.m + T::one();
        p.j * real_pow(theta.cos(), -m1) + p.c / m1
    };
    Ok(RadiiPair {
        rho1: p.c - p.m * rho2,
        rho2,
    })
}

/// Profile point `(r, h)` at tangent angle `theta`.
pub fn profile_point<T: Scalar>(p: &FamilyParams<T>, theta: T) -> Result<PlanePoint<T>> {
    p.validate()?;
    check_window(p.m, theta, "profile_point")?;
    let (s, c) = theta.sin_cos();
    if p.is_log_branch() {
        let lc = c.ln();
        return Ok(PlanePoint::new(
            p.c * c * lc + p.j * c,
            p.c * (s * lc + theta.tan().asinh()) + p.j * s + p.k,
        ));
    }
    let m1 = p.m + T::one();
    let integral = secant_power_integral(p.m, theta)?.value;
    Ok(PlanePoint::new(
        p.j * real_pow(c, -p.m) + p.c / m1 * c,
        -p.m * p.j * integral + p.c / m1 * s + p.k,
    ))
}

/// Centre of curvature of the profile at `theta`.
pub fn evolute_point<T: Scalar>(p: &FamilyParams<T>, theta: T) -> Result<PlanePoint<T>> {
    p.validate()?;
    check_window(p.m, theta, "evolute_point")?;
    let (s, c) = theta.sin_cos();
    if p.is_log_branch() {
        return Ok(PlanePoint::new(
            -p.c * c,
            -p.c * s + p.c * theta.tan().asinh() + p.k,
        ));
    }
    let sec_m = real_pow(c, -p.m);
    let integral = secant_power_integral(p.m, theta)?.value;
    Ok(PlanePoint::new(
        (p.m + T::one()) * p.j * sec_m,
        p.m * p.j * (sec_m * theta.tan() - integral) + p.k,
    ))
}

/// Parameters of the uniform normal offset of `p` by signed distance `d`
/// (positive `d` moves along `(cos theta, sin theta)`).
pub fn offset_params<T: Scalar>(p: &FamilyParams<T>, d: T) -> Result<FamilyParams<T>> {
    p.validate()?;
    let mut q = *p;
    if p.is_log_branch() {
        q.j = p.j + d;
    } else {
        q.c = p.c + (p.m + T::one()) * d;
    }
    Ok(q)
}

/// The profile normal `(-cos theta, -sin theta)`.
pub fn profile_normal<T: Scalar>(theta: T) -> PlanePoint<T> {
    let (s, c) = theta.sin_cos();
    PlanePoint::new(-c, -s)
}

/// `n` samples of the profile on `[lo, hi]`, with first derivatives
/// `rho1 (-sin theta, cos theta)` attached.
pub fn sample_profile<T: Scalar>(
    p: &FamilyParams<T>,
    lo: T,
    hi: T,
    n: usize,
) -> Result<PlaneCurveSamples<T>> {
    let grid = linspace(lo, hi, n);
    let mut points = Vec::with_capacity(n);
    let mut d1 = Vec::with_capacity(n);
    for &t in &grid {
        points.push(profile_point(p, t)?);
        let rho1 = curvature_radii_closed(p, t)?.rho1;
        let (s, c) = t.sin_cos();
        d1.push(PlanePoint::new(-rho1 * s, rho1 * c));
    }
    PlaneCurveSamples::new(grid, points)?.with_derivatives(d1, None)
}

pub fn sample_evolute<T: Scalar>(
    p: &FamilyParams<T>,
    lo: T,
    hi: T,
    n: usize,
) -> Result<PlaneCurveSamples<T>> {
    let grid = linspace(lo, hi, n);
    let points = grid
        .iter()
        .map(|&t| evolute_point(p, t))
        .collect::<Result<Vec<_>>>()?;
    PlaneCurveSamples::new(grid, points)
}

/// Support function `v(theta) = h + r cot theta` of the profile of `p`;
/// derivatives are left to finite differences.
pub fn support_function<T: Scalar>(p: FamilyParams<T>) -> SupportFunction<'static, T> {
    SupportFunction::new(move |t: T| {
        let q = profile_point(&p, t).map(|q| q.h + q.r / t.tan());
        q.unwrap_or_else(|_| T::nan())
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_PI_2, FRAC_PI_3, FRAC_PI_4, FRAC_PI_6};

    fn fam(m: f64, c: f64, j: f64, k: f64) -> FamilyParams<f64> {
        FamilyParams::new(m, c, j, k).unwrap()
    }

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol
    }

    #[test]
    fn power_integral_examples() {
        let r = secant_power_integral(2.0, FRAC_PI_4).unwrap();
        assert!(close(r.value, 1.0, 1e-15));
        assert_eq!(r.branch, PowerIntegralBranch::EvenPositive);
        let r = secant_power_integral(-3.0, FRAC_PI_2).unwrap();
        assert!(close(r.value, 2.0 / 3.0, 1e-15));
        assert_eq!(r.branch, PowerIntegralBranch::OddNegative);
        let r = secant_power_integral(-2.0, FRAC_PI_2).unwrap();
        assert!(close(r.value, FRAC_PI_4, 1e-15));
        assert_eq!(r.branch, PowerIntegralBranch::EvenNegativeWithTheta);
        // log(1 + sqrt 2), frozen from an independent quadrature
        let r = secant_power_integral(1.0, FRAC_PI_4).unwrap();
        assert!(close(r.value, 0.881_373_587_019_543, 1e-14));
        assert_eq!(r.branch, PowerIntegralBranch::OddPositiveWithLog);
        // frozen with mpmath.quad(sec**2.5, [0, 0.8]) at 30 digits
        let r = secant_power_integral(2.5, 0.8).unwrap();
        assert_eq!(r.branch, PowerIntegralBranch::Numeric);
        assert!(
            close(r.value, 1.105_147_426_815_265_7, 1e-12),
            "{}",
            r.value
        );
    }

    #[test]
    fn power_integral_rejects_poles() {
        assert!(matches!(
            secant_power_integral(2.0, FRAC_PI_2),
            Err(Error::Domain { .. })
        ));
        assert!(secant_power_integral(-2.0, 3.2).is_err());
        assert!(secant_power_integral(-2.5, 2.0).is_err());
    }

    #[test]
    fn higher_odd_reduction_uses_double_factorial_log_coefficient() {
        // int sec^5 = sec^3 tan / 4 + 3/8 sec tan + 3/8 log|sec + tan|
        let t: f64 = 0.9;
        let (sec, tan) = (1.0 / t.cos(), t.tan());
        let expect = sec.powi(3) * tan / 4.0 + 3.0 / 8.0 * sec * tan + 3.0 / 8.0 * tan.asinh();
        let got = secant_power_integral(5.0, t).unwrap().value;
        assert!(close(got, expect, 1e-13), "{got} vs {expect}");
    }

    #[test]
    fn double_factorials() {
        assert_eq!(double_factorial(-1), 1.0);
        assert_eq!(double_factorial(0), 1.0);
        assert_eq!(double_factorial(5), 15.0);
        assert_eq!(double_factorial(6), 48.0);
    }

    #[test]
    fn radii_examples() {
        let r = curvature_radii_closed(&fam(2.0, 0.0, 1.0, 0.0), 0.0).unwrap();
        assert_eq!((r.rho1, r.rho2), (-2.0, 1.0));
        let r = curvature_radii_closed(&fam(-1.0, -5.0, 2.0, 0.0), 0.0).unwrap();
        assert_eq!((r.rho1, r.rho2), (-3.0, 2.0));
        for t in [-1.0, 0.3, 1.4] {
            let r = curvature_radii_closed(&fam(3.0, 4.0, 0.0, 0.0), t).unwrap();
            assert!(close(r.rho1, 1.0, 1e-15) && close(r.rho2, 1.0, 1e-15));
        }
    }

    #[test]
    fn profile_examples() {
        let q = profile_point(&fam(2.0, 0.0, 1.0, 0.0), FRAC_PI_4).unwrap();
        assert!(close(q.r, 2.0, 1e-14) && close(q.h, -2.0, 1e-14));
        let q = profile_point(&fam(1.0, 4.0, 0.0, 0.0), FRAC_PI_3).unwrap();
        assert!(close(q.r, 1.0, 1e-14) && close(q.h, 3f64.sqrt(), 1e-14));
        let q = profile_point(&fam(-1.0, 0.0, 3.0, 1.0), FRAC_PI_6).unwrap();
        assert!(close(q.r, 1.5 * 3f64.sqrt(), 1e-14) && close(q.h, 2.5, 1e-14));
        let q = profile_point(&fam(-2.0, 0.0, 1.0, 0.0), FRAC_PI_2).unwrap();
        assert!(close(q.r, 0.0, 1e-15) && close(q.h, FRAC_PI_2, 1e-14));
        let q = profile_point(&fam(3.0, 0.0, 1.0, 0.0), FRAC_PI_4).unwrap();
        let expect = -1.5 * (2f64.sqrt() + (1.0 + 2f64.sqrt()).ln());
        assert!(close(q.h, expect, 1e-13));
        assert!(close(q.h, -3.443_380_724_088_957, 1e-12));
    }

    #[test]
    fn evolute_examples() {
        let e = evolute_point(&fam(2.0, 0.0, 1.0, 0.0), FRAC_PI_4).unwrap();
        assert!(close(e.r, 6.0, 1e-13) && close(e.h, 2.0, 1e-13));
        let e = evolute_point(&fam(-3.0, 0.0, 1.0, 0.0), FRAC_PI_3).unwrap();
        assert!(close(e.r, -0.25, 1e-14) && close(e.h, 0.75 * 3f64.sqrt(), 1e-14));
        let e = evolute_point(&fam(-1.0, -5.0, 2.0, 0.0), 0.0).unwrap();
        assert!(close(e.r, 5.0, 1e-15) && close(e.h, 0.0, 1e-15));
    }

    #[test]
    fn evolute_is_independent_of_offset_constant() {
        for t in [-1.0, 0.2, 1.1] {
            let a = evolute_point(&fam(2.0, 0.0, 1.0, 0.0), t).unwrap();
            let b = evolute_point(&fam(2.0, 7.0, 1.0, 0.0), t).unwrap();
            assert_eq!(a, b);
        }
    }

    #[test]
    fn offsets() {
        let q = offset_params(&fam(2.0, 0.0, 1.0, 0.0), 1.0).unwrap();
        assert_eq!(q.c, 3.0);
        let q = offset_params(&fam(-1.0, -5.0, 2.0, 0.0), 0.5).unwrap();
        assert_eq!((q.j, q.c), (2.5, -5.0));
        let p = fam(-3.0, 2.0, 1.5, 0.25);
        assert_eq!(offset_params(&p, 0.0).unwrap(), p);
    }

    #[test]
    fn curve_with_slope_minus_two_is_a_cycloid_of_half_radius() {
        // r = J cos^2, h = J (theta + cos sin); with phi = 2 theta the curve is
        // (a (1 + cos phi), a (phi + sin phi)) with rolling radius a = J / 2.
        let j = 1.6;
        let p = fam(-2.0, 0.0, j, 0.0);
        // fit a from the cusp-to-cusp height (pi * 2a between successive cusps)
        let top = profile_point(&p, FRAC_PI_2 - 1e-12).unwrap();
        let bottom = profile_point(&p, -FRAC_PI_2 + 1e-12).unwrap();
        let a = (top.h - bottom.h) / (2.0 * std::f64::consts::PI);
        assert!(close(a, j / 2.0, 1e-10));
        for t in [-1.3, -0.4, 0.0, 0.9, 2.5] {
            let q = profile_point(&p, t).unwrap();
            let phi = 2.0 * t;
            assert!(close(q.r, a * (1.0 + phi.cos()), 1e-13));
            assert!(close(q.h, a * (phi + phi.sin()), 1e-13));
        }
    }

    #[test]
    fn generic_over_f32() {
        let p = FamilyParams::new(2.0f32, 0.0, 1.0, 0.0).unwrap();
        let q = profile_point(&p, std::f32::consts::FRAC_PI_4).unwrap();
        assert!((q.r - 2.0).abs() < 1e-5 && (q.h + 2.0).abs() < 1e-5);
    }
}
