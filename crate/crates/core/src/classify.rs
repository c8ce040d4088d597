//! Algebraicity verdicts for the profile curves of each family member.

use crate::error::{Error, Result};
use crate::scalar::{as_integer, lit, Scalar};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FamilyKind {
    /// `J = 0` with `m != -1`: a circle of radius `c / (m + 1)`.
    Circle,
    /// `m = -1, c = 0`.
    Sphere,
    /// `m = -1, c != 0`: the logarithmic family.
    LogFamily,
    /// `m != -1`: the secant-power family.
    SecantFamily,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Algebraicity {
    Algebraic { degree: u32 },
    Transcendental,
    Unclassified,
}

/// Which known result decides the verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Basis {
    /// Even positive `m`.
    EvenPositive,
    /// `m = -1` with `c = 0`, or odd `m < -1`.
    OddNegative,
    /// Odd positive `m`.
    OddPositive,
    /// Even negative `m`.
    EvenNegative,
    /// `J = 0` collapses the profile to a circle.
    CircleDegeneration,
    /// No result applies.
    None,
}

impl Basis {
    /// Short tag used in machine-readable summaries.
    pub fn tag(self) -> &'static str {
        match self {
            Basis::EvenPositive => "Prop4.1",
            Basis::OddNegative => "Prop4.2",
            Basis::OddPositive => "Prop4.3",
            Basis::EvenNegative => "Prop4.4",
            Basis::CircleDegeneration => "circle",
            Basis::None => "none",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FamilyClass {
    pub kind: FamilyKind,
    pub algebraicity: Algebraicity,
    pub basis: Basis,
}

impl Algebraicity {
    pub fn degree(self) -> Option<u32> {
        match self {
            Algebraicity::Algebraic { degree } => Some(degree),
            _ => None,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Algebraicity::Algebraic { .. } => "algebraic",
            Algebraicity::Transcendental => "transcendental",
            Algebraicity::Unclassified => "unclassified",
        }
    }
}

impl FamilyKind {
    pub fn label(self) -> &'static str {
        match self {
            FamilyKind::Circle => "circle",
            FamilyKind::Sphere => "sphere",
            FamilyKind::LogFamily => "log",
            FamilyKind::SecantFamily => "secant",
        }
    }
}

/// Classifies the profile curve of the `(m, c)` member with constant `j`.
///
/// `m = 0` is rejected, as is the point-profile `j = c = 0`.
pub fn classify_family<T: Scalar>(m: T, c: T, j: T) -> Result<FamilyClass> {
    if !(m.is_finite() && c.is_finite() && j.is_finite()) {
        return Err(Error::InvalidInput(
            "classification inputs must be finite".into(),
        ));
    }
    if m == T::zero() {
        return Err(Error::SingularSlope);
    }
    let eps = lit::<T>(1e-12);
    let c_zero = c.abs() < eps;
    let j_zero = j.abs() < eps;
    let class = |kind, algebraicity, basis| FamilyClass {
        kind,
        algebraicity,
        basis,
    };

    if (m + T::one()).abs() < eps {
        return Ok(if c_zero {
            if j_zero {
                return Err(Error::Degenerate(
                    "J = c = 0 collapses the profile to a point".into(),
                ));
            }
            class(
                FamilyKind::Sphere,
                Algebraicity::Algebraic { degree: 2 },
                Basis::OddNegative,
            )
        } else {
            class(
                FamilyKind::LogFamily,
                Algebraicity::Unclassified,
                Basis::None,
            )
        });
    }

    if j_zero {
        if c_zero {
            return Err(Error::Degenerate(
                "J = c = 0 collapses the profile to a point".into(),
            ));
        }
        return Ok(class(
            FamilyKind::Circle,
            Algebraicity::Algebraic { degree: 2 },
            Basis::CircleDegeneration,
        ));
    }

    let Some(mi) = as_integer(m) else {
        return Ok(class(
            FamilyKind::SecantFamily,
            Algebraicity::Unclassified,
            Basis::None,
        ));
    };
    let (algebraicity, basis) = match (mi > 0, mi % 2 == 0) {
        (true, true) => {
            let degree = if c_zero { mi } else { 2 * (mi + 1) };
            (
                Algebraicity::Algebraic {
                    degree: degree as u32,
                },
                Basis::EvenPositive,
            )
        }
        (false, false) => (
            Algebraicity::Algebraic {
                degree: (-2 * mi) as u32,
            },
            Basis::OddNegative,
        ),
        (true, false) => (Algebraicity::Transcendental, Basis::OddPositive),
        (false, true) => (Algebraicity::Transcendental, Basis::EvenNegative),
    };
    Ok(class(FamilyKind::SecantFamily, algebraicity, basis))
}
