//! Small numeric kernels: grids, adaptive Simpson quadrature, classical
//! Runge-Kutta steps and finite-difference stencils.

use crate::error::{Error, Result};
use crate::scalar::{lit, Scalar};

const SIMPSON_MAX_DEPTH: u32 = 48;

/// `n` equally spaced values from `a` to `b` inclusive.
pub fn linspace<T: Scalar>(a: T, b: T, n: usize) -> Vec<T> {
    match n {
        0 => Vec::new(),
        1 => vec![a],
        _ => {
            let step = (b - a) / lit::<T>((n - 1) as f64);
            (0..n)
                .map(|i| {
                    if i == n - 1 {
                        b
                    } else {
                        a + step * lit((i) as f64)
                    }
                })
                .collect()
        }
    }
}

/// Adaptive Simpson quadrature of `f` over `[a, b]` with absolute
/// tolerance `tol`. Reversed bounds give the negated integral.
pub fn adaptive_simpson<T, F>(f: F, a: T, b: T, tol: T) -> T
where
    T: Scalar,
    F: Fn(T) -> T,
{
    if a == b {
        return T::zero();
    }
    let half = lit::<T>(0.5);
    let m = (a + b) * half;
    let (fa, fm, fb) = (f(a), f(m), f(b));
    let whole = simpson(a, b, fa, fm, fb);
    refine(&f, a, b, fa, fm, fb, whole, tol, SIMPSON_MAX_DEPTH)
}

fn simpson<T: Scalar>(a: T, b: T, fa: T, fm: T, fb: T) -> T {
    (b - a) / lit(6.0) * (fa + lit::<T>(4.0) * fm + fb)
}

#[allow(clippy::too_many_arguments)]
fn refine<T, F>(f: &F, a: T, b: T, fa: T, fm: T, fb: T, whole: T, tol: T, depth: u32) -> T
where
    T: Scalar,
    F: Fn(T) -> T,
{
    let half = lit::<T>(0.5);
    let m = (a + b) * half;
    let lm = (a + m) * half;
    let rm = (m + b) * half;
    let flm = f(lm);
    let frm = f(rm);
    let left = simpson(a, m, fa, flm, fm);
    let right = simpson(m, b, fm, frm, fb);
    let delta = left + right - whole;
    if depth == 0 || delta.abs() <= lit::<T>(15.0) * tol || m == a || m == b {
        return left + right + delta / lit(15.0);
    }
    refine(f, a, m, fa, flm, fm, left, tol * half, depth - 1)
        + refine(f, m, b, fm, frm, fb, right, tol * half, depth - 1)
}

/// One classical fourth-order Runge-Kutta step for `y' = f(t, y)`.
pub fn rk4_step<T, F, const N: usize>(f: &F, t: T, y: [T; N], h: T) -> [T; N]
where
    T: Scalar,
    F: Fn(T, &[T; N]) -> [T; N],
{
    let half = lit::<T>(0.5);
    let axpy = |y: &[T; N], k: &[T; N], s: T| -> [T; N] {
        let mut out = *y;
        for (o, ki) in out.iter_mut().zip(k) {
            *o = *o + s * *ki;
        }
        out
    };
    let k1 = f(t, &y);
    let k2 = f(t + h * half, &axpy(&y, &k1, h * half));
    let k3 = f(t + h * half, &axpy(&y, &k2, h * half));
    let k4 = f(t + h, &axpy(&y, &k3, h));
    let mut out = y;
    let sixth = h / lit(6.0);
    for i in 0..N {
        out[i] = out[i] + sixth * (k1[i] + lit::<T>(2.0) * (k2[i] + k3[i]) + k4[i]);
    }
    out
}

/// Five-point central first and second derivatives of a scalar function
/// at `x`, with step `h1` for the first and `h2` for the second.
pub fn central_derivatives<T, F>(f: &F, x: T, h1: T, h2: T) -> (T, T)
where
    T: Scalar,
    F: Fn(T) -> T + ?Sized,
{
    let two = lit::<T>(2.0);
    let eight = lit::<T>(8.0);
    let twelve = lit::<T>(12.0);
    let d1 = (f(x - two * h1) - f(x + two * h1) + eight * (f(x + h1) - f(x - h1))) / (twelve * h1);
    let d2 = (lit::<T>(16.0) * (f(x + h2) + f(x - h2))
        - f(x + two * h2)
        - f(x - two * h2)
        - lit::<T>(30.0) * f(x))
        / (twelve * h2 * h2);
    (d1, d2)
}

/// Derivatives of sampled data at one index.
///
/// Uses the five-point fourth-order stencil when the index has two
/// neighbours on each side of a uniform grid, one-sided fourth-order
/// stencils at the two outermost samples of a uniform grid with at
/// least five samples, and the three-point nonuniform formulas otherwise.
pub fn sampled_derivatives<T: Scalar>(params: &[T], values: &[T], i: usize) -> Result<(T, T)> {
    let n = params.len();
    if n < 3 || i >= n {
        return Err(Error::SingularSample {
            index: i,
            reason: "not enough neighbours for a derivative stencil",
        });
    }
    let uniform = is_uniform(params);
    let h = if n > 1 {
        params[1] - params[0]
    } else {
        T::one()
    };
    let c = |k: f64| lit::<T>(k);
    let f = |k: usize| values[k];
    if uniform && n >= 5 {
        let twelve_h = c(12.0) * h;
        let twelve_h2 = c(12.0) * h * h;
        if i >= 2 && i + 2 < n {
            let d1 = (-f(i + 2) + c(8.0) * f(i + 1) - c(8.0) * f(i - 1) + f(i - 2)) / twelve_h;
            let d2 = (-f(i + 2) + c(16.0) * f(i + 1) - c(30.0) * f(i) + c(16.0) * f(i - 1)
                - f(i - 2))
                / twelve_h2;
            return Ok((d1, d2));
        }
        if i < 2 || i + 2 >= n {
            // one-sided; mirror for the right end
            let (s, idx): (T, Box<dyn Fn(usize) -> usize>) = if i < 2 {
                (T::one(), Box::new(move |k| i + k))
            } else {
                (-T::one(), Box::new(move |k| i - k))
            };
            let g = |k: usize| values[idx(k)];
            let off = if i < 2 { i } else { n - 1 - i };
            let (d1, d2) = if off == 0 {
                (
                    (c(-25.0) * g(0) + c(48.0) * g(1) - c(36.0) * g(2) + c(16.0) * g(3)
                        - c(3.0) * g(4))
                        / twelve_h,
                    (c(35.0) * g(0) - c(104.0) * g(1) + c(114.0) * g(2) - c(56.0) * g(3)
                        + c(11.0) * g(4))
                        / twelve_h2,
                )
            } else {
                // offset 1: stencil spans one sample behind and three ahead
                let back = values[if i < 2 { i - 1 } else { i + 1 }];
                (
                    (c(-3.0) * back - c(10.0) * g(0) + c(18.0) * g(1) - c(6.0) * g(2) + g(3))
                        / twelve_h,
                    (c(11.0) * back - c(20.0) * g(0) + c(6.0) * g(1) + c(4.0) * g(2) - g(3))
                        / twelve_h2,
                )
            };
            return Ok((s * d1, d2));
        }
    }
    three_point(params, values, i)
}

fn three_point<T: Scalar>(params: &[T], values: &[T], i: usize) -> Result<(T, T)> {
    let n = params.len();
    let (a, b, cidx) = if i == 0 {
        (0, 1, 2)
    } else if i == n - 1 {
        (n - 3, n - 2, n - 1)
    } else {
        (i - 1, i, i + 1)
    };
    let (x0, x1, x2) = (params[a], params[b], params[cidx]);
    let (y0, y1, y2) = (values[a], values[b], values[cidx]);
    let x = params[i];
    let two = lit::<T>(2.0);
    // derivatives of the interpolating parabola
    let l0 = (x0 - x1) * (x0 - x2);
    let l1 = (x1 - x0) * (x1 - x2);
    let l2 = (x2 - x0) * (x2 - x1);
    let d1 = y0 * (two * x - x1 - x2) / l0
        + y1 * (two * x - x0 - x2) / l1
        + y2 * (two * x - x0 - x1) / l2;
    let d2 = two * (y0 / l0 + y1 / l1 + y2 / l2);
    Ok((d1, d2))
}

/// True if the spacing of `params` is constant to a relative `1e-6`.
pub fn is_uniform<T: Scalar>(params: &[T]) -> bool {
    if params.len() < 3 {
        return true;
    }
    let h = params[1] - params[0];
    params
        .windows(2)
        .all(|w| ((w[1] - w[0]) - h).abs() <= lit::<T>(1e-6) * h.abs())
}
