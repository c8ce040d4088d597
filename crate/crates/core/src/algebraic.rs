//! Exact-rational polynomials certifying the algebraic degree of profile
//! curves, and the implicit relations of the `m = 2` and `m = -3` members.
//!
//! Intersecting a profile with a line `A r + B h = C` and substituting
//! `t = tan theta` (even `m > 0`) or `t = sin theta` (odd `m < 0`) gives a
//! polynomial in `t` whose degree is the degree of the curve. The square
//! root hidden in `cos theta` is removed by squaring, so the polynomial also
//! vanishes on the mirrored branch: `theta + pi` for even `m` and
//! `pi - theta` for odd `m`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::closed_form::{parameter_window, profile_point};
use crate::error::{Error, Result};
use crate::types::{FamilyParams, PlaneCurveSamples, PlanePoint};

pub type Rational = BigRational;

fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

fn to_f64_exact(q: &Rational) -> f64 {
    q.to_f64().unwrap_or(f64::NAN)
}

fn binomial(n: i64, k: i64) -> Rational {
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    Rational::from_integer(acc)
}

/// Parses a decimal (`-1.25`, `3e-2`), integer or fraction (`7/3`) exactly.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let bad = || Error::InvalidInput(format!("not an exact rational: {s:?}"));
    let s = s.trim();
    if s.contains('/') {
        return Rational::from_str(s).map_err(|_| bad());
    }
    let (mantissa, exp) = match s.find(['e', 'E']) {
        Some(i) => (&s[..i], s[i + 1..].parse::<i32>().map_err(|_| bad())?),
        None => (s, 0),
    };
    let (neg, digits) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (whole, frac) = digits.split_once('.').unwrap_or((digits, ""));
    if whole.is_empty() && frac.is_empty()
        || !whole
            .chars()
            .chain(frac.chars())
            .all(|ch| ch.is_ascii_digit())
    {
        return Err(bad());
    }
    let numer = BigInt::from_str(&format!("0{whole}{frac}")).map_err(|_| bad())?;
    let scale = exp - frac.len() as i32;
    let ten = BigInt::from(10);
    let mut q = if scale >= 0 {
        Rational::from_integer(numer * num_traits::pow(ten, scale as usize))
    } else {
        Rational::new(numer, num_traits::pow(ten, (-scale) as usize))
    };
    if neg {
        q = -q;
    }
    Ok(q)
}

/// Univariate polynomial with exact rational coefficients; `coeffs[i]`
/// multiplies `t^i` and the top coefficient is never zero.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct RationalUniPoly {
    coeffs: Vec<Rational>,
}

impl RationalUniPoly {
    pub fn zero() -> Self {
        RationalUniPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `c t^k`.
    pub fn monomial(c: Rational, k: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = c;
        Self::from_coeffs(coeffs)
    }

    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        RationalUniPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn scale(&self, k: &Rational) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|c| c * k).collect())
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::constant(Rational::one()), |acc, _| &acc * self)
    }

    pub fn eval(&self, t: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * t + c)
    }

    pub fn eval_f64(&self, t: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * t + to_f64_exact(c))
    }

    /// Simple real roots of `p(t)` for `t = g(x)`, `x` in `[lo, hi]`: sign
    /// changes of `p(g(x)) w(x)` on a grid of `n` cells, refined by
    /// bisection. `w` must be positive on the open interval.
    pub fn real_roots_on<G, W>(&self, g: G, w: W, lo: f64, hi: f64, n: usize) -> Vec<f64>
    where
        G: Fn(f64) -> f64,
        W: Fn(f64) -> f64,
    {
        let f = |x: f64| self.eval_f64(g(x)) * w(x);
        let mut roots = Vec::new();
        let step = (hi - lo) / n as f64;
        let mut a = lo;
        let mut fa = f(a);
        for i in 1..=n {
            let b = if i == n { hi } else { lo + step * i as f64 };
            let fb = f(b);
            if fa == 0.0 {
                roots.push(a);
            } else if fa.signum() != fb.signum() && fb != 0.0 {
                let (mut x0, mut x1, mut f0) = (a, b, fa);
                for _ in 0..200 {
                    let mid = 0.5 * (x0 + x1);
                    if mid <= x0 || mid >= x1 {
                        break;
                    }
                    let fm = f(mid);
                    if fm == 0.0 {
                        x0 = mid;
                        x1 = mid;
                        break;
                    }
                    if fm.signum() == f0.signum() {
                        x0 = mid;
                        f0 = fm;
                    } else {
                        x1 = mid;
                    }
                }
                roots.push(0.5 * (x0 + x1));
            }
            a = b;
            fa = fb;
        }
        if fa == 0.0 {
            roots.push(hi);
        }
        roots
    }
}

impl fmt::Display for RationalUniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
            } else if c.is_negative() {
                write!(f, "-")?;
            }
            first = false;
            let a = c.abs();
            match k {
                0 => write!(f, "{a}")?,
                1 => write!(f, "{a}*t")?,
                _ => write!(f, "{a}*t^{k}")?,
            }
        }
        Ok(())
    }
}

impl Add for &RationalUniPoly {
    type Output = RationalUniPoly;
    fn add(self, o: Self) -> RationalUniPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        let z = Rational::zero();
        RationalUniPoly::from_coeffs(
            (0..n)
                .map(|i| self.coeffs.get(i).unwrap_or(&z) + o.coeffs.get(i).unwrap_or(&z))
                .collect(),
        )
    }
}

impl Neg for &RationalUniPoly {
    type Output = RationalUniPoly;
    fn neg(self) -> RationalUniPoly {
        RationalUniPoly::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Sub for &RationalUniPoly {
    type Output = RationalUniPoly;
    fn sub(self, o: Self) -> RationalUniPoly {
        self + &-o
    }
}

impl Mul for &RationalUniPoly {
    type Output = RationalUniPoly;
    fn mul(self, o: Self) -> RationalUniPoly {
        if self.is_zero() || o.is_zero() {
            return RationalUniPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        RationalUniPoly::from_coeffs(out)
    }
}

/// Polynomial in `(r, h)` with exact coefficients; zero terms are dropped.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct RationalBiPoly {
    terms: BTreeMap<(u32, u32), Rational>,
}

impl RationalBiPoly {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds `coeff r^i h^j`.
    pub fn add_term(&mut self, i: u32, j: u32, coeff: Rational) {
        let e = self.terms.entry((i, j)).or_insert_with(Rational::zero);
        *e += coeff;
        if e.is_zero() {
            self.terms.remove(&(i, j));
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, u32, &Rational)> {
        self.terms.iter().map(|(&(i, j), c)| (i, j, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|&(i, j)| i + j).max()
    }

    pub fn coeff(&self, i: u32, j: u32) -> Rational {
        self.terms
            .get(&(i, j))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn eval(&self, r: &Rational, h: &Rational) -> Rational {
        self.terms
            .iter()
            .map(|(&(i, j), c)| {
                c * num_traits::pow(r.clone(), i as usize) * num_traits::pow(h.clone(), j as usize)
            })
            .fold(Rational::zero(), |a, b| a + b)
    }

    /// `(value, sum of |monomial values|)` at a floating point.
    pub fn eval_with_magnitude(&self, r: f64, h: f64) -> (f64, f64) {
        self.terms.iter().fold((0.0, 0.0), |(v, m), (&(i, j), c)| {
            let term = to_f64_exact(c) * r.powi(i as i32) * h.powi(j as i32);
            (v + term, m + term.abs())
        })
    }
}

/// Line `A r + B h = C` with exact coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LineCoeffs {
    pub a: Rational,
    pub b: Rational,
    pub c: Rational,
}

impl LineCoeffs {
    pub fn new(a: Rational, b: Rational, c: Rational) -> Result<Self> {
        if a.is_zero() && b.is_zero() {
            return Err(Error::InvalidInput("line needs (A, B) != (0, 0)".into()));
        }
        Ok(LineCoeffs { a, b, c })
    }

    pub fn from_ints(a: i64, b: i64, c: i64) -> Result<Self> {
        Self::new(int(a), int(b), int(c))
    }

    /// Euclidean distance of a point from the line.
    pub fn distance(&self, q: PlanePoint<f64>) -> f64 {
        let (a, b, c) = (
            to_f64_exact(&self.a),
            to_f64_exact(&self.b),
            to_f64_exact(&self.c),
        );
        (a * q.r + b * q.h - c).abs() / a.hypot(b)
    }
}

/// Family member with integer slope and exact parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactFamily {
    pub m: i64,
    pub c: Rational,
    pub j: Rational,
    pub k: Rational,
}

impl ExactFamily {
    pub fn new(m: i64, c: Rational, j: Rational, k: Rational) -> Result<Self> {
        if m == 0 {
            return Err(Error::SingularSlope);
        }
        Ok(ExactFamily { m, c, j, k })
    }

    pub fn from_ints(m: i64, c: i64, j: i64, k: i64) -> Result<Self> {
        Self::new(m, int(c), int(j), int(k))
    }

    /// Parses decimal or fractional strings exactly.
    pub fn parse(m: i64, c: &str, j: &str, k: &str) -> Result<Self> {
        Self::new(
            m,
            parse_rational(c)?,
            parse_rational(j)?,
            parse_rational(k)?,
        )
    }

    /// Binary-exact conversion of floating parameters (`m` must be integral).
    pub fn from_params(p: &FamilyParams<f64>) -> Result<Self> {
        let m = crate::scalar::as_integer(p.m)
            .ok_or_else(|| Error::Unsupported(format!("m = {} is not an integer", p.m)))?;
        let q = |x: f64, name: &str| {
            Rational::from_float(x).ok_or_else(|| Error::InvalidInput(format!("{name} not finite")))
        };
        Self::new(m, q(p.c, "c")?, q(p.j, "J")?, q(p.k, "K")?)
    }

    pub fn to_params(&self) -> Result<FamilyParams<f64>> {
        FamilyParams::new(
            self.m as f64,
            to_f64_exact(&self.c),
            to_f64_exact(&self.j),
            to_f64_exact(&self.k),
        )
    }
}

/// Substitution used by [`line_intersection_poly`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Substitution {
    TanTheta,
    SinTheta,
}

impl ExactFamily {
    pub fn substitution(&self) -> Result<Substitution> {
        match self.m {
            m if m > 0 && m % 2 == 0 => Ok(Substitution::TanTheta),
            -1 if !self.c.is_zero() => Err(Error::Unsupported(
                "m = -1 with c != 0 has no intersection polynomial".into(),
            )),
            m if m < 0 && m % 2 != 0 => Ok(Substitution::SinTheta),
            m => Err(Error::Unsupported(format!(
                "m = {m} is not a proven algebraic case (need even m > 0 or odd m < 0)"
            ))),
        }
    }
}

fn t() -> RationalUniPoly {
    RationalUniPoly::monomial(Rational::one(), 1)
}

fn c(q: Rational) -> RationalUniPoly {
    RationalUniPoly::constant(q)
}

/// `sum_j s^j C(k, j) t^(2j+1) / (2j+1)`, the antiderivative of
/// `(1 + s t^2)^k` vanishing at 0.
fn power_antiderivative(k: i64, sign: i64) -> RationalUniPoly {
    let mut out = RationalUniPoly::zero();
    for j in 0..=k {
        let coeff = binomial(k, j) * int(sign.pow(j as u32)) / int(2 * j + 1);
        out = &out + &RationalUniPoly::monomial(coeff, (2 * j + 1) as usize);
    }
    out
}

/// Polynomial in `t` whose roots are the intersections of the profile of
/// `fam` with `line`.
pub fn line_intersection_poly(fam: &ExactFamily, line: &LineCoeffs) -> Result<RationalUniPoly> {
    let (a, b, cc) = (c(line.a.clone()), c(line.b.clone()), c(line.c.clone()));
    let jj = c(fam.j.clone());
    let kk = c(fam.k.clone());
    match fam.substitution()? {
        Substitution::TanTheta => {
            // r = J (1+t^2)^(m/2) + c/(m+1) cos, h = -mJ P(t) + c/(m+1) sin + K
            let m = fam.m;
            let one_plus_t2 = &c(Rational::one()) + &t().pow(2);
            let p = power_antiderivative((m - 2) / 2, 1);
            let h_poly = &p.scale(&(-int(m) * &fam.j)) + &kk;
            let q = &(&(&(&a * &jj) * &one_plus_t2.pow((m / 2) as u32)) + &(&b * &h_poly)) - &cc;
            if fam.c.is_zero() {
                return Ok(q);
            }
            let w = &fam.c / int(m + 1);
            let lin = &a + &(&b * &t());
            Ok(&(&one_plus_t2 * &q.pow(2)) - &lin.pow(2).scale(&(&w * &w)))
        }
        Substitution::SinTheta => {
            // r = cos (J (1-t^2)^k + c/(1-mh)), h = mh J P(t) + c/(1-mh) t + K
            let mh = -fam.m;
            let k = (mh - 1) / 2;
            let one_minus_t2 = &c(Rational::one()) - &t().pow(2);
            let p = power_antiderivative(k, -1);
            let w = if fam.c.is_zero() {
                Rational::zero()
            } else {
                &fam.c / int(1 - mh)
            };
            let h_poly = &(&p.scale(&(int(mh) * &fam.j)) + &t().scale(&w)) + &kk;
            let lhs = &(&b * &h_poly) - &cc;
            let rad = &(&jj * &one_minus_t2.pow(k as u32)) + &c(w);
            Ok(&lhs.pow(2) - &(&(&a.pow(2) * &rad.pow(2)) * &one_minus_t2))
        }
    }
}

/// One real intersection recovered from a root of the polynomial.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RootPoint {
    pub t: f64,
    pub theta: f64,
    pub point: PlanePoint<f64>,
    pub distance: f64,
}

/// A root `t` and its two candidate `(theta, member)` preimages.
type RootCandidates = (f64, [(f64, FamilyParams<f64>); 2]);

/// Real roots of [`line_intersection_poly`] mapped back to profile points.
///
/// Each root `t` has two candidate angles (`atan t` and `atan t + pi`, or
/// `asin t` and `pi - asin t`); the candidate closer to the line is kept.
/// The `theta + pi` point of an even-`m` member is evaluated as the `c -> -c`
/// member at `theta`, which traces the same set.
pub fn line_root_points(fam: &ExactFamily, line: &LineCoeffs) -> Result<Vec<RootPoint>> {
    let poly = line_intersection_poly(fam, line)?;
    let params = fam.to_params()?;
    let deg = poly.degree().unwrap_or(0) as i32;
    let eps = 1e-9;
    let candidates: Vec<RootCandidates> = match fam.substitution()? {
        Substitution::TanTheta => {
            let lo = -std::f64::consts::FRAC_PI_2 + eps;
            let roots = poly.real_roots_on(f64::tan, |x| x.cos().powi(deg), lo, -lo, 20_000);
            let mut flipped = params;
            flipped.c = -flipped.c;
            roots
                .into_iter()
                .map(|x| (x.tan(), [(x, params), (x, flipped)]))
                .collect()
        }
        Substitution::SinTheta => {
            let roots = poly.real_roots_on(|x| x, |_| 1.0, -1.0, 1.0, 20_000);
            roots
                .into_iter()
                .map(|t| {
                    let th = t.asin();
                    let alt = if th >= 0.0 {
                        std::f64::consts::PI - th
                    } else {
                        -std::f64::consts::PI - th
                    };
                    (t, [(th, params), (alt, params)])
                })
                .collect()
        }
    };
    let (wlo, whi) = parameter_window(params.m);
    let point_at = |p: &FamilyParams<f64>, th: f64| {
        if th > wlo && th < whi {
            profile_point(p, th).ok()
        } else {
            // Only reached for the sphere, whose window stops at pi/2:
            // r(pi - theta) = -r(theta), h(pi - theta) = h(theta).
            let mirror = std::f64::consts::PI.copysign(th) - th;
            profile_point(p, mirror)
                .ok()
                .map(|q| PlanePoint::new(-q.r, q.h))
        }
    };
    let mut out = Vec::new();
    for (t, cands) in candidates {
        let best = cands
            .iter()
            .filter_map(|(th, p)| {
                let q = point_at(p, *th)?;
                Some(RootPoint {
                    t,
                    theta: *th,
                    point: q,
                    distance: line.distance(q),
                })
            })
            .min_by(|x, y| x.distance.total_cmp(&y.distance));
        if let Some(b) = best {
            out.push(b);
        }
    }
    Ok(out)
}

/// `(coefficient, power of c, power of J, power of r, power of h)`.
type Term = (i64, u32, u32, u32, u32);

const PROFILE_M2: [Term; 26] = [
    (1, 6, 0, 0, 0),
    (135, 4, 2, 0, 0),
    (-54, 4, 1, 1, 0),
    (-9, 4, 0, 2, 0),
    (-27, 4, 0, 0, 2),
    (3888, 2, 4, 0, 0),
    (-1944, 2, 3, 1, 0),
    (-1296, 2, 2, 2, 0),
    (1944, 2, 2, 0, 2),
    (648, 2, 1, 3, 0),
    (-486, 2, 1, 1, 2),
    (162, 2, 0, 2, 2),
    (243, 2, 0, 0, 4),
    (-46656, 0, 6, 0, 0),
    (139968, 0, 5, 1, 0),
    (-151632, 0, 4, 2, 0),
    (-34992, 0, 4, 0, 2),
    (69984, 0, 3, 3, 0),
    (69984, 0, 3, 1, 2),
    (-11664, 0, 2, 4, 0),
    (-40824, 0, 2, 2, 2),
    (-8748, 0, 2, 0, 4),
    (5832, 0, 1, 3, 2),
    (8748, 0, 1, 1, 4),
    (-729, 0, 0, 2, 4),
    (-729, 0, 0, 0, 6),
];

const PROFILE_M3: [Term; 26] = [
    (4, 4, 2, 0, 0),
    (-48, 3, 3, 0, 0),
    (-4, 3, 1, 2, 0),
    (4, 3, 1, 0, 2),
    (208, 2, 4, 0, 0),
    (16, 2, 2, 2, 0),
    (-56, 2, 2, 0, 2),
    (1, 2, 0, 4, 0),
    (2, 2, 0, 2, 2),
    (1, 2, 0, 0, 4),
    (-384, 1, 5, 0, 0),
    (48, 1, 3, 2, 0),
    (192, 1, 3, 0, 2),
    (12, 1, 1, 4, 0),
    (-12, 1, 1, 2, 2),
    (-24, 1, 1, 0, 4),
    (256, 0, 6, 0, 0),
    (-192, 0, 4, 2, 0),
    (-192, 0, 4, 0, 2),
    (-60, 0, 2, 4, 0),
    (96, 0, 2, 2, 2),
    (48, 0, 2, 0, 4),
    (-4, 0, 0, 6, 0),
    (-12, 0, 0, 4, 2),
    (-12, 0, 0, 2, 4),
    (-4, 0, 0, 0, 6),
];

const PARABOLA_M2: [Term; 3] = [(4, 0, 1, 1, 0), (-1, 0, 0, 0, 2), (-4, 0, 2, 0, 0)];

const REDUCED_M3: [Term; 10] = [
    (1, 0, 0, 0, 6),
    (-12, 0, 2, 0, 4),
    (48, 0, 4, 0, 2),
    (-64, 0, 6, 0, 0),
    (3, 0, 0, 2, 4),
    (-24, 0, 2, 2, 2),
    (48, 0, 4, 2, 0),
    (3, 0, 0, 4, 2),
    (15, 0, 2, 4, 0),
    (1, 0, 0, 6, 0),
];

const EVOLUTE_M2: [Term; 5] = [
    (27, 0, 1, 0, 2),
    (108, 0, 3, 0, 0),
    (-108, 0, 2, 1, 0),
    (36, 0, 1, 2, 0),
    (-4, 0, 0, 3, 0),
];

const EVOLUTE_M3: [Term; 10] = [
    (1, 0, 0, 0, 6),
    (-12, 0, 2, 0, 4),
    (48, 0, 4, 0, 2),
    (-64, 0, 6, 0, 0),
    (3, 0, 0, 2, 4),
    (84, 0, 2, 2, 2),
    (48, 0, 4, 2, 0),
    (3, 0, 0, 4, 2),
    (-12, 0, 2, 4, 0),
    (1, 0, 0, 6, 0),
];

fn substitute(table: &[Term], c: &Rational, j: &Rational) -> RationalBiPoly {
    let mut out = RationalBiPoly::new();
    for &(k, pc, pj, pr, ph) in table {
        let coeff = int(k)
            * num_traits::pow(c.clone(), pc as usize)
            * num_traits::pow(j.clone(), pj as usize);
        out.add_term(pr, ph, coeff);
    }
    out
}

fn require_k_zero(fam: &ExactFamily) -> Result<()> {
    if fam.k.is_zero() {
        Ok(())
    } else {
        Err(Error::Unsupported(
            "implicit relations are stated for K = 0".into(),
        ))
    }
}

/// Implicit relation of the profile of `fam` (`m` in `{2, -3}`, `K = 0`).
///
/// For `c = 0` this is the reduced form: the parabola `4Jr - h^2 - 4J^2`
/// for `m = 2` and the reduced sextic for `m = -3`.
pub fn profile_implicit(fam: &ExactFamily) -> Result<RationalBiPoly> {
    require_k_zero(fam)?;
    match (fam.m, fam.c.is_zero()) {
        (2, true) => Ok(substitute(&PARABOLA_M2, &fam.c, &fam.j)),
        (-3, true) => Ok(substitute(&REDUCED_M3, &fam.c, &fam.j)),
        _ => profile_implicit_full(fam),
    }
}

/// The full sextic relation for `m` in `{2, -3}` with `c` kept symbolic,
/// then substituted; for `c = 0` it is a multiple of the reduced form.
pub fn profile_implicit_full(fam: &ExactFamily) -> Result<RationalBiPoly> {
    require_k_zero(fam)?;
    match fam.m {
        2 => Ok(substitute(&PROFILE_M2, &fam.c, &fam.j)),
        -3 => Ok(substitute(&PROFILE_M3, &fam.c, &fam.j)),
        m => Err(Error::Unsupported(format!(
            "no implicit relation for m = {m}"
        ))),
    }
}

/// Implicit relation of the common evolute for `m` in `{2, -3}`, `K = 0`.
pub fn evolute_implicit(m: i64, j: &Rational) -> Result<RationalBiPoly> {
    let zero = Rational::zero();
    match m {
        2 => Ok(substitute(&EVOLUTE_M2, &zero, j)),
        -3 => Ok(substitute(&EVOLUTE_M3, &zero, j)),
        m => Err(Error::Unsupported(format!(
            "no evolute relation for m = {m}"
        ))),
    }
}

/// `max |P(r, h)| / (1 + sum |monomials|)` over the samples.
pub fn implicit_residual(poly: &RationalBiPoly, curve: &PlaneCurveSamples<f64>) -> f64 {
    curve
        .points()
        .iter()
        .map(|q| {
            let (v, mag) = poly.eval_with_magnitude(q.r, q.h);
            v.abs() / (1.0 + mag)
        })
        .fold(0.0, f64::max)
}

pub fn evolute_implicit_residual(
    m: i64,
    j: &Rational,
    curve: &PlaneCurveSamples<f64>,
) -> Result<f64> {
    Ok(implicit_residual(&evolute_implicit(m, j)?, curve))
}
