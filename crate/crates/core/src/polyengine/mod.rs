//! Exact rational and polynomial arithmetic.
//!
//! Everything in this module is exact over the rationals: dense univariate
//! polynomials ([`UniPoly`]), sparse bivariate polynomials ([`BiPoly`]),
//! Sturm-based real root counting and isolation, certified root refinement,
//! and bivariate elimination through Sylvester resultants. Floating point
//! appears only in the optional Newton polish of [`refine_root`] and in the
//! `value` field of [`RefinedRoot`]; every certificate is a pair of exact
//! rational bounds.

mod bipoly;
mod resultant;
mod roots;
mod textfmt;
mod unipoly;

pub use bipoly::BiPoly;
pub use resultant::resultant;
pub use roots::{isolate_roots, refine_root, sturm_count, RefinedRoot, RootInterval};
pub use textfmt::{parse_bipoly, parse_unipoly};
pub use unipoly::UniPoly;

pub use num_rational::BigRational;

use num_traits::Zero;
use std::fmt;

/// Symbolic variable tags carried by polynomials.
///
/// `X2`, `X3`, `X12` are the metric parameters; `K` and `L` appear in the
/// parametric coefficient data, where each coefficient of an eliminant is
/// itself a polynomial in the two block sizes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    X2,
    X3,
    X12,
    K,
    L,
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Var::X2 => "x2",
            Var::X3 => "x3",
            Var::X12 => "x12",
            Var::K => "k",
            Var::L => "l",
        };
        f.write_str(s)
    }
}

/// Sign of a rational quantity.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Sign {
    pub fn of(r: &BigRational) -> Self {
        if r.is_zero() {
            Sign::Zero
        } else if r.numer().sign() == num_bigint::Sign::Minus {
            Sign::Negative
        } else {
            Sign::Positive
        }
    }

    pub fn flip(self) -> Self {
        match self {
            Sign::Negative => Sign::Positive,
            Sign::Zero => Sign::Zero,
            Sign::Positive => Sign::Negative,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Sign::Negative => "-",
            Sign::Zero => "0",
            Sign::Positive => "+",
        };
        f.write_str(s)
    }
}

/// Errors raised by the polynomial engine.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PolyError {
    #[error("zero divisor")]
    ZeroDivisor,
    #[error("not squarefree")]
    NotSquarefree,
    #[error("nothing to eliminate")]
    NothingToEliminate,
    #[error("polynomial parse error: {0}")]
    Parse(String),
}

/// Signs of the coefficients of `p` by ascending degree, including interior
/// zeros. The zero polynomial yields an empty sequence.
pub fn descartes_signs(p: &UniPoly) -> Vec<Sign> {
    p.coeffs().iter().map(Sign::of).collect()
}

pub(crate) fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

pub(crate) fn rat_int(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}
