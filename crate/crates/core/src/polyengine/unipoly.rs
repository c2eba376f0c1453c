use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{BigRational, PolyError, Var};

/// Dense univariate polynomial over the rationals.
///
/// Coefficients are stored by ascending degree with the trailing (highest)
/// coefficient nonzero; the zero polynomial is the empty vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniPoly {
    var: Var,
    coeffs: Vec<BigRational>,
}

impl UniPoly {
    /// Builds a polynomial from ascending coefficients, stripping trailing zeros.
    pub fn new(var: Var, mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UniPoly { var, coeffs }
    }

    pub fn zero(var: Var) -> Self {
        UniPoly { var, coeffs: Vec::new() }
    }

    pub fn constant(var: Var, c: BigRational) -> Self {
        Self::new(var, vec![c])
    }

    /// The monomial `c * x^deg`.
    pub fn monomial(var: Var, deg: usize, c: BigRational) -> Self {
        let mut coeffs = vec![BigRational::zero(); deg + 1];
        coeffs[deg] = c;
        Self::new(var, coeffs)
    }

    pub fn var(&self) -> Var {
        self.var
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, deg: usize) -> BigRational {
        self.coeffs.get(deg).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn leading_coeff(&self) -> BigRational {
        self.coeffs.last().cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn neg(&self) -> Self {
        UniPoly {
            var: self.var,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.var, other.var, "variable mismatch");
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) + other.coeff(i));
        }
        Self::new(self.var, out)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.var, other.var, "variable mismatch");
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.var);
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(self.var, out)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero(self.var);
        }
        UniPoly {
            var: self.var,
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Euclidean division: returns `(q, r)` with `self = q*div + r` and
    /// `deg r < deg div`.
    pub fn div_rem(&self, div: &Self) -> Result<(Self, Self), PolyError> {
        assert_eq!(self.var, div.var, "variable mismatch");
        if div.is_zero() {
            return Err(PolyError::ZeroDivisor);
        }
        let dlead = div.leading_coeff();
        let ddeg = div.degree().unwrap();
        let mut rem = self.clone();
        let mut quot = Self::zero(self.var);
        while let Some(rdeg) = rem.degree() {
            if rdeg < ddeg {
                break;
            }
            let factor = rem.leading_coeff() / &dlead;
            let shift = rdeg - ddeg;
            let term = Self::monomial(self.var, shift, factor);
            rem = rem.sub(&term.mul(div));
            quot = quot.add(&term);
        }
        Ok((quot, rem))
    }

    /// Exact division; errors if the remainder is nonzero.
    pub fn div_exact(&self, div: &Self) -> Result<Self, PolyError> {
        let (q, r) = self.div_rem(div)?;
        if !r.is_zero() {
            return Err(PolyError::ZeroDivisor);
        }
        Ok(q)
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Self::zero(self.var);
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * BigRational::from_integer(BigInt::from(i)))
            .collect();
        Self::new(self.var, coeffs)
    }

    /// Horner evaluation at an exact rational point.
    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        let mut acc = 0.0;
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c.to_f64().unwrap_or(f64::NAN);
        }
        acc
    }

    /// Positive rational content: gcd of numerators over lcm of denominators.
    /// Zero for the zero polynomial.
    pub fn content(&self) -> BigRational {
        if self.is_zero() {
            return BigRational::zero();
        }
        let mut num_gcd = BigInt::zero();
        let mut den_lcm = BigInt::one();
        for c in &self.coeffs {
            num_gcd = num_gcd.gcd(c.numer());
            den_lcm = den_lcm.lcm(c.denom());
        }
        BigRational::new(num_gcd, den_lcm)
    }

    /// `self / content(self)`: integer coefficients with gcd 1, sign of the
    /// leading coefficient preserved.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let c = self.content();
        self.scale(&c.recip())
    }

    /// Primitive part normalized to a positive leading coefficient.
    pub fn primitive_positive(&self) -> Self {
        let p = self.primitive_part();
        if p.leading_coeff().is_negative() {
            p.neg()
        } else {
            p
        }
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(&self.leading_coeff().recip())
    }

    /// Monic gcd via a primitive-part remainder sequence.
    pub fn gcd(&self, other: &Self) -> Result<Self, PolyError> {
        if self.is_zero() && other.is_zero() {
            return Err(PolyError::ZeroDivisor);
        }
        let mut a = self.primitive_positive();
        let mut b = other.primitive_positive();
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b)?;
            a = b;
            b = r.primitive_positive();
        }
        Ok(a.monic())
    }

    /// `self / gcd(self, self')`: same roots, all simple.
    pub fn squarefree_part(&self) -> Result<Self, PolyError> {
        if self.is_zero() {
            return Err(PolyError::ZeroDivisor);
        }
        if self.degree() == Some(0) {
            return Ok(self.clone());
        }
        let g = self.gcd(&self.derivative())?;
        self.div_exact(&g)
    }

    pub fn is_squarefree(&self) -> Result<bool, PolyError> {
        if self.is_zero() {
            return Ok(false);
        }
        if self.degree() == Some(0) {
            return Ok(true);
        }
        Ok(self.gcd(&self.derivative())?.degree() == Some(0))
    }

    /// Cauchy bound on the absolute value of real roots:
    /// `1 + max_i |c_i / c_deg|` over the non-leading coefficients.
    pub fn cauchy_bound(&self) -> BigRational {
        let one = BigRational::one();
        let Some(deg) = self.degree() else {
            return one;
        };
        if deg == 0 {
            return one;
        }
        let lead = self.leading_coeff();
        let mut m = BigRational::zero();
        for c in &self.coeffs[..deg] {
            let q = (c / &lead).abs();
            if q > m {
                m = q;
            }
        }
        one + m
    }

    /// Largest absolute coefficient value, as f64. Zero for the zero polynomial.
    pub fn max_abs_coeff_f64(&self) -> f64 {
        self.coeffs
            .iter()
            .map(|c| c.abs().to_f64().unwrap_or(f64::INFINITY))
            .fold(0.0, f64::max)
    }

    /// Relabels the variable tag without touching coefficients.
    pub fn with_var(&self, var: Var) -> Self {
        UniPoly { var, coeffs: self.coeffs.clone() }
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (deg, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " {} ", if c.is_negative() { "-" } else { "+" })?;
            } else if c.is_negative() {
                write!(f, "-")?;
            }
            first = false;
            let a = c.abs();
            if deg == 0 || !a.is_one() {
                write!(f, "{}", a)?;
                if deg > 0 {
                    write!(f, "*")?;
                }
            }
            if deg == 1 {
                write!(f, "{}", self.var)?;
            } else if deg > 1 {
                write!(f, "{}^{}", self.var, deg)?;
            }
        }
        Ok(())
    }
}
