use std::collections::BTreeMap;
use std::fmt;

use num_traits::{Signed, ToPrimitive, Zero};

use super::{BigRational, UniPoly, Var};

/// Sparse bivariate polynomial over the rationals.
///
/// Terms map exponent pairs `(a, b)` — powers of `vars.0` and `vars.1`
/// respectively — to nonzero coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BiPoly {
    vars: (Var, Var),
    terms: BTreeMap<(u32, u32), BigRational>,
}

impl BiPoly {
    pub fn zero(vars: (Var, Var)) -> Self {
        BiPoly { vars, terms: BTreeMap::new() }
    }

    pub fn from_terms<I>(vars: (Var, Var), terms: I) -> Self
    where
        I: IntoIterator<Item = ((u32, u32), BigRational)>,
    {
        let mut p = Self::zero(vars);
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    /// Lifts a univariate polynomial into the first or second slot.
    pub fn from_unipoly(vars: (Var, Var), p: &UniPoly, slot: usize) -> Self {
        assert!(slot < 2);
        let mut out = Self::zero(vars);
        for (deg, c) in p.coeffs().iter().enumerate() {
            let e = if slot == 0 { (deg as u32, 0) } else { (0, deg as u32) };
            out.add_term(e, c.clone());
        }
        out
    }

    pub fn constant(vars: (Var, Var), c: BigRational) -> Self {
        let mut p = Self::zero(vars);
        p.add_term((0, 0), c);
        p
    }

    pub fn vars(&self) -> (Var, Var) {
        self.vars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &BigRational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, e: (u32, u32)) -> BigRational {
        self.terms.get(&e).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Adds `c * v0^e.0 * v1^e.1`, dropping the term if it cancels to zero.
    pub fn add_term(&mut self, e: (u32, u32), c: BigRational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(e).or_insert_with(BigRational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn neg(&self) -> Self {
        BiPoly {
            vars: self.vars,
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.vars, other.vars, "variable mismatch");
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(*e, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.vars, other.vars, "variable mismatch");
        let mut out = Self::zero(self.vars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                out.add_term((ea.0 + eb.0, ea.1 + eb.1), ca * cb);
            }
        }
        out
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero(self.vars);
        }
        BiPoly {
            vars: self.vars,
            terms: self.terms.iter().map(|(e, a)| (*e, a * c)).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut out = Self::constant(self.vars, BigRational::from_integer(1.into()));
        for _ in 0..n {
            out = out.mul(self);
        }
        out
    }

    /// Degree in the first (`slot == 0`) or second variable; `None` if zero.
    pub fn degree_in(&self, slot: usize) -> Option<u32> {
        assert!(slot < 2);
        self.terms
            .keys()
            .map(|e| if slot == 0 { e.0 } else { e.1 })
            .max()
    }

    pub fn eval(&self, v0: &BigRational, v1: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for (e, c) in &self.terms {
            acc += c * v0.pow(e.0 as i32) * v1.pow(e.1 as i32);
        }
        acc
    }

    pub fn eval_f64(&self, v0: f64, v1: f64) -> f64 {
        let mut acc = 0.0;
        for (e, c) in &self.terms {
            acc += c.to_f64().unwrap_or(f64::NAN) * v0.powi(e.0 as i32) * v1.powi(e.1 as i32);
        }
        acc
    }

    /// Substitutes an exact value for the variable in `slot`, producing a
    /// univariate polynomial in the remaining variable.
    pub fn eval_partial(&self, slot: usize, value: &BigRational) -> UniPoly {
        assert!(slot < 2);
        let (keep_var, keep_of) = if slot == 0 {
            (self.vars.1, |e: &(u32, u32)| e.1)
        } else {
            (self.vars.0, |e: &(u32, u32)| e.0)
        };
        let deg = self
            .terms
            .keys()
            .map(keep_of)
            .max()
            .unwrap_or(0) as usize;
        let mut coeffs = vec![BigRational::zero(); deg + 1];
        for (e, c) in &self.terms {
            let sub = if slot == 0 { e.0 } else { e.1 };
            coeffs[keep_of(e) as usize] += c * value.pow(sub as i32);
        }
        UniPoly::new(keep_var, coeffs)
    }

    /// Views the polynomial as univariate in the variable at `slot`, with
    /// coefficients that are univariate polynomials in the other variable.
    /// Index `j` of the result is the coefficient of `v_slot^j`.
    pub fn as_univariate_in(&self, slot: usize) -> Vec<UniPoly> {
        assert!(slot < 2);
        let main_deg = self.degree_in(slot).unwrap_or(0) as usize;
        let other_var = if slot == 0 { self.vars.1 } else { self.vars.0 };
        let other_deg = self.degree_in(1 - slot).unwrap_or(0) as usize;
        let mut coeffs =
            vec![vec![BigRational::zero(); other_deg + 1]; main_deg + 1];
        for (e, c) in &self.terms {
            let (m, o) = if slot == 0 { (e.0, e.1) } else { (e.1, e.0) };
            coeffs[m as usize][o as usize] = c.clone();
        }
        coeffs
            .into_iter()
            .map(|cs| UniPoly::new(other_var, cs))
            .collect()
    }

    /// Divides out the largest common monomial `v0^a * v1^b`.
    pub fn strip_monomial_content(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let a = self.terms.keys().map(|e| e.0).min().unwrap();
        let b = self.terms.keys().map(|e| e.1).min().unwrap();
        if a == 0 && b == 0 {
            return self.clone();
        }
        BiPoly {
            vars: self.vars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| ((e.0 - a, e.1 - b), c.clone()))
                .collect(),
        }
    }

    /// If `other = c * self` for a nonzero rational `c`, returns `c`.
    /// Decided exactly by cross-multiplication of corresponding coefficients.
    pub fn proportionality(&self, other: &Self) -> Option<BigRational> {
        if self.is_zero() || other.is_zero() {
            return None;
        }
        if self.terms.len() != other.terms.len() {
            return None;
        }
        let (e0, a0) = self.terms.iter().next().unwrap();
        let b0 = other.terms.get(e0)?;
        let ratio = b0 / a0;
        for (e, a) in &self.terms {
            let b = other.terms.get(e)?;
            // cross-multiplied equality: b * a0 == a * b0
            if b * a0 != a * b0 {
                return None;
            }
        }
        Some(ratio)
    }
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            if !first {
                write!(f, " {} ", if c.is_negative() { "-" } else { "+" })?;
            } else if c.is_negative() {
                write!(f, "-")?;
            }
            first = false;
            write!(f, "{}", c.abs())?;
            if e.0 > 0 {
                write!(f, "*{}^{}", self.vars.0, e.0)?;
            }
            if e.1 > 0 {
                write!(f, "*{}^{}", self.vars.1, e.1)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyengine::rat_int;

    const VARS: (Var, Var) = (Var::X3, Var::X12);

    fn term(a: u32, b: u32, c: i64) -> ((u32, u32), BigRational) {
        ((a, b), rat_int(c))
    }

    #[test]
    fn mul_and_eval_agree() {
        // (x3 + x12) * (x3 - x12) = x3^2 - x12^2
        let p = BiPoly::from_terms(VARS, [term(1, 0, 1), term(0, 1, 1)]);
        let q = BiPoly::from_terms(VARS, [term(1, 0, 1), term(0, 1, -1)]);
        let prod = p.mul(&q);
        let expect = BiPoly::from_terms(VARS, [term(2, 0, 1), term(0, 2, -1)]);
        assert_eq!(prod, expect);
        let (a, b) = (rat_int(5), rat_int(3));
        assert_eq!(prod.eval(&a, &b), p.eval(&a, &b) * q.eval(&a, &b));
    }

    #[test]
    fn as_univariate_round_trip() {
        let p = BiPoly::from_terms(VARS, [term(2, 1, 4), term(0, 3, -2), term(1, 0, 7)]);
        let coeffs = p.as_univariate_in(0);
        assert_eq!(coeffs.len(), 3);
        // reassemble
        let mut back = BiPoly::zero(VARS);
        for (j, c) in coeffs.iter().enumerate() {
            let lifted = BiPoly::from_unipoly(VARS, c, 1);
            let xj = BiPoly::from_terms(VARS, [term(j as u32, 0, 1)]);
            back = back.add(&lifted.mul(&xj));
        }
        assert_eq!(back, p);
    }

    #[test]
    fn proportionality_detects_constant_multiple() {
        let p = BiPoly::from_terms(VARS, [term(1, 2, 3), term(0, 0, -6)]);
        let q = p.scale(&crate::polyengine::rat(-7, 2));
        assert_eq!(p.proportionality(&q), Some(crate::polyengine::rat(-7, 2)));
        let r = BiPoly::from_terms(VARS, [term(1, 2, 3), term(0, 0, -5)]);
        assert_eq!(p.proportionality(&r), None);
    }

    #[test]
    fn strip_monomial_content_divides_out_min_exponents() {
        let p = BiPoly::from_terms(VARS, [term(2, 3, 1), term(1, 2, -4)]);
        let s = p.strip_monomial_content();
        let expect = BiPoly::from_terms(VARS, [term(1, 1, 1), term(0, 0, -4)]);
        assert_eq!(s, expect);
    }
}
