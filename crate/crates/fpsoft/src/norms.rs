//! The twelve classical non-parametrized t-norms and t-conorms.
//!
//! Every t-norm here is paired with a dual t-conorm through the standard
//! negation, `s(a,b) = 1 - t(1-a, 1-b)`. The kinds are addressable by
//! stable snake_case names (`"einstein_product"`, ...) for CLI and file
//! use.

use std::fmt;
use std::str::FromStr;

use crate::{Error, Result};

/// Absolute tolerance used for structural membership comparisons.
pub const MEMBERSHIP_TOLERANCE: f64 = 1e-9;

/// A membership grade in [0,1].
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct MembershipValue(f64);

impl MembershipValue {
    pub const ZERO: MembershipValue = MembershipValue(0.0);
    pub const ONE: MembershipValue = MembershipValue(1.0);

    pub fn new(value: f64) -> Result<Self> {
        if value.is_finite() && (0.0..=1.0).contains(&value) {
            Ok(MembershipValue(value))
        } else {
            Err(Error::MembershipOutOfRange(value))
        }
    }

    /// Absorbs floating-point overshoot from norm arithmetic.
    pub(crate) fn clamped(value: f64) -> Self {
        MembershipValue(value.clamp(0.0, 1.0))
    }

    pub fn value(self) -> f64 {
        self.0
    }

    pub fn is_positive(self) -> bool {
        self.0 > 0.0
    }

    pub fn complement(self) -> Self {
        MembershipValue(1.0 - self.0)
    }

    pub fn approx_eq(self, other: Self) -> bool {
        (self.0 - other.0).abs() <= MEMBERSHIP_TOLERANCE
    }

    pub fn min(self, other: Self) -> Self {
        MembershipValue(self.0.min(other.0))
    }

    pub fn max(self, other: Self) -> Self {
        MembershipValue(self.0.max(other.0))
    }
}

impl fmt::Display for MembershipValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Selector for one of the twelve named norm formulas.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NormKind {
    DrasticProduct,
    DrasticSum,
    BoundedProduct,
    BoundedSum,
    EinsteinProduct,
    EinsteinSum,
    AlgebraicProduct,
    AlgebraicSum,
    HamacherProduct,
    HamacherSum,
    Minimum,
    Maximum,
}

impl NormKind {
    pub const ALL: [NormKind; 12] = [
        NormKind::DrasticProduct,
        NormKind::DrasticSum,
        NormKind::BoundedProduct,
        NormKind::BoundedSum,
        NormKind::EinsteinProduct,
        NormKind::EinsteinSum,
        NormKind::AlgebraicProduct,
        NormKind::AlgebraicSum,
        NormKind::HamacherProduct,
        NormKind::HamacherSum,
        NormKind::Minimum,
        NormKind::Maximum,
    ];

    pub const T_NORMS: [NormKind; 6] = [
        NormKind::DrasticProduct,
        NormKind::BoundedProduct,
        NormKind::EinsteinProduct,
        NormKind::AlgebraicProduct,
        NormKind::HamacherProduct,
        NormKind::Minimum,
    ];

    pub const T_CONORMS: [NormKind; 6] = [
        NormKind::DrasticSum,
        NormKind::BoundedSum,
        NormKind::EinsteinSum,
        NormKind::AlgebraicSum,
        NormKind::HamacherSum,
        NormKind::Maximum,
    ];

    pub fn is_t_norm(self) -> bool {
        matches!(
            self,
            NormKind::DrasticProduct
                | NormKind::BoundedProduct
                | NormKind::EinsteinProduct
                | NormKind::AlgebraicProduct
                | NormKind::HamacherProduct
                | NormKind::Minimum
        )
    }

    pub fn is_t_conorm(self) -> bool {
        !self.is_t_norm()
    }

    /// The paired norm under the standard negation.
    pub fn dual(self) -> NormKind {
        match self {
            NormKind::DrasticProduct => NormKind::DrasticSum,
            NormKind::DrasticSum => NormKind::DrasticProduct,
            NormKind::BoundedProduct => NormKind::BoundedSum,
            NormKind::BoundedSum => NormKind::BoundedProduct,
            NormKind::EinsteinProduct => NormKind::EinsteinSum,
            NormKind::EinsteinSum => NormKind::EinsteinProduct,
            NormKind::AlgebraicProduct => NormKind::AlgebraicSum,
            NormKind::AlgebraicSum => NormKind::AlgebraicProduct,
            NormKind::HamacherProduct => NormKind::HamacherSum,
            NormKind::HamacherSum => NormKind::HamacherProduct,
            NormKind::Minimum => NormKind::Maximum,
            NormKind::Maximum => NormKind::Minimum,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            NormKind::DrasticProduct => "drastic_product",
            NormKind::DrasticSum => "drastic_sum",
            NormKind::BoundedProduct => "bounded_product",
            NormKind::BoundedSum => "bounded_sum",
            NormKind::EinsteinProduct => "einstein_product",
            NormKind::EinsteinSum => "einstein_sum",
            NormKind::AlgebraicProduct => "algebraic_product",
            NormKind::AlgebraicSum => "algebraic_sum",
            NormKind::HamacherProduct => "hamacher_product",
            NormKind::HamacherSum => "hamacher_sum",
            NormKind::Minimum => "minimum",
            NormKind::Maximum => "maximum",
        }
    }
}

impl fmt::Display for NormKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for NormKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        NormKind::ALL
            .iter()
            .copied()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::UnknownNorm(s.to_string()))
    }
}

/// Conjunction of two grades under the named t-norm.
pub fn t_norm(kind: NormKind, a: MembershipValue, b: MembershipValue) -> Result<MembershipValue> {
    if !kind.is_t_norm() {
        return Err(Error::NotATNorm(kind));
    }
    let (a, b) = (a.value(), b.value());
    let v = match kind {
        NormKind::DrasticProduct => {
            if a == 1.0 {
                b
            } else if b == 1.0 {
                a
            } else {
                0.0
            }
        }
        NormKind::BoundedProduct => (a + b - 1.0).max(0.0),
        NormKind::EinsteinProduct => a * b / (2.0 - (a + b - a * b)),
        NormKind::AlgebraicProduct => a * b,
        // The closed form is 0/0 at (0,0); the limit (and the boundary
        // axiom) give 0 there.
        NormKind::HamacherProduct => {
            if a == 0.0 && b == 0.0 {
                0.0
            } else {
                a * b / (a + b - a * b)
            }
        }
        NormKind::Minimum => a.min(b),
        _ => unreachable!(),
    };
    Ok(MembershipValue::clamped(v))
}

/// Disjunction of two grades under the named t-conorm.
pub fn s_norm(kind: NormKind, a: MembershipValue, b: MembershipValue) -> Result<MembershipValue> {
    if !kind.is_t_conorm() {
        return Err(Error::NotATConorm(kind));
    }
    let (a, b) = (a.value(), b.value());
    let v = match kind {
        NormKind::DrasticSum => {
            if a == 0.0 {
                b
            } else if b == 0.0 {
                a
            } else {
                1.0
            }
        }
        NormKind::BoundedSum => (a + b).min(1.0),
        NormKind::EinsteinSum => (a + b) / (1.0 + a * b),
        NormKind::AlgebraicSum => a + b - a * b,
        // 0/0 at (1,1); the limit (and the boundary axiom) give 1.
        NormKind::HamacherSum => {
            if a == 1.0 && b == 1.0 {
                1.0
            } else {
                (a + b - 2.0 * a * b) / (1.0 - a * b)
            }
        }
        NormKind::Maximum => a.max(b),
        _ => unreachable!(),
    };
    Ok(MembershipValue::clamped(v))
}

/// The dual of a norm kind; an involution over the catalog.
pub fn dual_of(kind: NormKind) -> NormKind {
    kind.dual()
}
