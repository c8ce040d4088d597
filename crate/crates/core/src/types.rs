//! Plain geometric values shared across the crate.

use std::ops::{Add, Mul, Sub};

use crate::error::{Error, Result};
use crate::scalar::{to_f64, Scalar};

/// One member of the family of surfaces whose curvature radii satisfy
/// `rho1 + m * rho2 = c`.
///
/// `j` is the integration constant of the radius equation (a scale for
/// `m != -1`, the offset distance for `m == -1`) and `k` translates the
/// profile along the axis.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FamilyParams<T> {
    pub m: T,
    pub c: T,
    pub j: T,
    pub k: T,
}

impl<T: Scalar> FamilyParams<T> {
    pub fn new(m: T, c: T, j: T, k: T) -> Result<Self> {
        let p = FamilyParams { m, c, j, k };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        for (name, v) in [("m", self.m), ("c", self.c), ("J", self.j), ("K", self.k)] {
            if !v.is_finite() {
                return Err(Error::InvalidInput(format!("{name} must be finite")));
            }
        }
        if self.m == T::zero() {
            return Err(Error::SingularSlope);
        }
        Ok(())
    }

    /// True when `m` is (numerically) -1, the logarithmic branch.
    pub fn is_log_branch(&self) -> bool {
        (self.m + T::one()).abs() < crate::scalar::lit(1e-12)
    }
}

/// A point of the meridian half-plane: distance from the axis and height.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct PlanePoint<T> {
    pub r: T,
    pub h: T,
}

impl<T: Scalar> PlanePoint<T> {
    pub fn new(r: T, h: T) -> Self {
        PlanePoint { r, h }
    }

    pub fn dot(self, other: Self) -> T {
        self.r * other.r + self.h * other.h
    }

    pub fn norm(self) -> T {
        self.r.hypot(self.h)
    }

    pub fn is_finite(self) -> bool {
        self.r.is_finite() && self.h.is_finite()
    }
}

impl<T: Scalar> Add for PlanePoint<T> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        PlanePoint::new(self.r + o.r, self.h + o.h)
    }
}

impl<T: Scalar> Sub for PlanePoint<T> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        PlanePoint::new(self.r - o.r, self.h - o.h)
    }
}

impl<T: Scalar> Mul<T> for PlanePoint<T> {
    type Output = Self;
    fn mul(self, s: T) -> Self {
        PlanePoint::new(self.r * s, self.h * s)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct SpacePoint<T> {
    pub x: T,
    pub y: T,
    pub z: T,
}

impl<T: Scalar> SpacePoint<T> {
    pub fn new(x: T, y: T, z: T) -> Self {
        SpacePoint { x, y, z }
    }

    /// The point `(r cos phi, r sin phi, h)` of the surface swept by `p`.
    pub fn revolve(p: PlanePoint<T>, phi: T) -> Self {
        let (s, c) = phi.sin_cos();
        SpacePoint::new(p.r * c, p.r * s, p.h)
    }

    pub fn dot(self, o: Self) -> T {
        self.x * o.x + self.y * o.y + self.z * o.z
    }

    pub fn cross(self, o: Self) -> Self {
        SpacePoint::new(
            self.y * o.z - self.z * o.y,
            self.z * o.x - self.x * o.z,
            self.x * o.y - self.y * o.x,
        )
    }

    pub fn norm(self) -> T {
        self.dot(self).sqrt()
    }

    pub fn normalized(self) -> Self {
        self * (T::one() / self.norm())
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite() && self.z.is_finite()
    }
}

impl<T: Scalar> Add for SpacePoint<T> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        SpacePoint::new(self.x + o.x, self.y + o.y, self.z + o.z)
    }
}

impl<T: Scalar> Sub for SpacePoint<T> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        SpacePoint::new(self.x - o.x, self.y - o.y, self.z - o.z)
    }
}

impl<T: Scalar> Mul<T> for SpacePoint<T> {
    type Output = Self;
    fn mul(self, s: T) -> Self {
        SpacePoint::new(self.x * s, self.y * s, self.z * s)
    }
}

/// Oriented principal curvature radii: `rho1` of the meridian, `rho2` of
/// the normal section through the parallel circle.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RadiiPair<T> {
    pub rho1: T,
    pub rho2: T,
}

/// A sampled plane curve with its parameter grid.
#[derive(Debug, Clone, PartialEq)]
pub struct PlaneCurveSamples<T> {
    params: Vec<T>,
    points: Vec<PlanePoint<T>>,
    d1: Option<Vec<PlanePoint<T>>>,
    d2: Option<Vec<PlanePoint<T>>>,
}

impl<T: Scalar> PlaneCurveSamples<T> {
    /// Builds a sample set; `params` must be strictly increasing and match
    /// `points` in length.
    pub fn new(params: Vec<T>, points: Vec<PlanePoint<T>>) -> Result<Self> {
        if params.len() != points.len() {
            return Err(Error::InvalidInput(format!(
                "{} parameters for {} points",
                params.len(),
                points.len()
            )));
        }
        if let Some(i) = params.windows(2).position(|w| !(w[1] > w[0])) {
            return Err(Error::InvalidInput(format!(
                "parameters not strictly increasing at index {} ({} then {})",
                i + 1,
                to_f64(params[i]),
                to_f64(params[i + 1])
            )));
        }
        Ok(PlaneCurveSamples {
            params,
            points,
            d1: None,
            d2: None,
        })
    }

    pub fn empty() -> Self {
        PlaneCurveSamples {
            params: Vec::new(),
            points: Vec::new(),
            d1: None,
            d2: None,
        }
    }

    /// Attaches first (and optionally second) derivatives with respect to
    /// the parameter.
    pub fn with_derivatives(
        mut self,
        d1: Vec<PlanePoint<T>>,
        d2: Option<Vec<PlanePoint<T>>>,
    ) -> Result<Self> {
        let n = self.len();
        if d1.len() != n || d2.as_ref().is_some_and(|d| d.len() != n) {
            return Err(Error::InvalidInput(
                "derivative lists must match the sample count".into(),
            ));
        }
        self.d1 = Some(d1);
        self.d2 = d2;
        Ok(self)
    }

    pub fn len(&self) -> usize {
        self.params.len()
    }

    pub fn is_empty(&self) -> bool {
        self.params.is_empty()
    }

    pub fn params(&self) -> &[T] {
        &self.params
    }

    pub fn points(&self) -> &[PlanePoint<T>] {
        &self.points
    }

    pub fn d1(&self) -> Option<&[PlanePoint<T>]> {
        self.d1.as_deref()
    }

    pub fn d2(&self) -> Option<&[PlanePoint<T>]> {
        self.d2.as_deref()
    }

    pub fn iter(&self) -> impl Iterator<Item = (T, PlanePoint<T>)> + '_ {
        self.params.iter().copied().zip(self.points.iter().copied())
    }
}
