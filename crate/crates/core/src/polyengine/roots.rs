use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{BigRational, PolyError, Sign, UniPoly};

/// An interval certified to isolate exactly one root of a squarefree
/// polynomial. `parity` records the sign of the polynomial at `lo`; the sign
/// at `hi` is opposite (or `hi` is itself an exact root).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootInterval {
    pub lo: BigRational,
    pub hi: BigRational,
    pub parity: Sign,
}

/// A root refined to a requested relative width, with exact certified bounds
/// around the floating approximation.
#[derive(Debug, Clone)]
pub struct RefinedRoot {
    pub value: f64,
    pub certified_lo: BigRational,
    pub certified_hi: BigRational,
    pub relative_width: f64,
}

impl RefinedRoot {
    fn exact(root: BigRational) -> Self {
        RefinedRoot {
            value: root.to_f64().unwrap_or(f64::NAN),
            certified_lo: root.clone(),
            certified_hi: root,
            relative_width: 0.0,
        }
    }

    /// Midpoint of the certified interval, as an exact rational.
    pub fn midpoint(&self) -> BigRational {
        (&self.certified_lo + &self.certified_hi) / BigRational::from_integer(2.into())
    }
}

fn rel_width(lo: &BigRational, hi: &BigRational) -> BigRational {
    let width = hi - lo;
    let scale = lo.abs().max(hi.abs());
    if scale.is_zero() {
        width
    } else {
        width / scale
    }
}

/// Signed remainder sequence for Sturm's theorem. Each element is scaled to
/// integer-primitive form; positive scaling preserves the sign structure.
fn sturm_chain(p: &UniPoly) -> Vec<UniPoly> {
    let mut chain = vec![p.primitive_part(), p.derivative().primitive_part()];
    loop {
        let n = chain.len();
        if chain[n - 1].is_zero() {
            chain.pop();
            break;
        }
        let (_, r) = chain[n - 2]
            .div_rem(&chain[n - 1])
            .expect("nonzero divisor in Sturm chain");
        if r.is_zero() {
            break;
        }
        let next = r.neg().primitive_part();
        chain.push(next);
        if chain.last().unwrap().degree() == Some(0) {
            break;
        }
    }
    chain
}

fn sign_variations(chain: &[UniPoly], x: &BigRational) -> usize {
    let mut count = 0;
    let mut prev = Sign::Zero;
    for q in chain {
        let s = Sign::of(&q.eval(x));
        if s == Sign::Zero {
            continue;
        }
        if prev != Sign::Zero && s != prev {
            count += 1;
        }
        prev = s;
    }
    count
}

/// Moves an endpoint off a root of `p` by `(hi-lo)/2^40` steps toward the
/// interior, so the count stays a count over the open interval.
fn nudge_endpoint(
    p: &UniPoly,
    x: &BigRational,
    step: &BigRational,
    inward: bool,
) -> BigRational {
    let mut x = x.clone();
    let delta = if inward { step.clone() } else { -step.clone() };
    // a squarefree polynomial has finitely many roots, so this terminates
    while p.eval(&x).is_zero() {
        x += &delta;
    }
    x
}

fn count_open(chain: &[UniPoly], p: &UniPoly, lo: &BigRational, hi: &BigRational) -> usize {
    let step = (hi - lo) / BigRational::from_integer(num_bigint::BigInt::from(1u64 << 40));
    let lo = nudge_endpoint(p, lo, &step, true);
    let hi = nudge_endpoint(p, hi, &step, false);
    if lo >= hi {
        return 0;
    }
    sign_variations(chain, &lo) - sign_variations(chain, &hi)
}

/// Exact number of distinct real roots of a squarefree `p` in the open
/// interval `(lo, hi)`. Endpoints that are themselves roots are shifted
/// inward by an exact rational nudge before counting.
pub fn sturm_count(p: &UniPoly, lo: &BigRational, hi: &BigRational) -> Result<usize, PolyError> {
    if !p.is_squarefree()? {
        return Err(PolyError::NotSquarefree);
    }
    assert!(lo < hi, "empty interval");
    let chain = sturm_chain(p);
    Ok(count_open(&chain, p, lo, hi))
}

/// Isolates every root of a squarefree `p` in `(lo, hi)` into pairwise
/// disjoint intervals, each bracketing a sign change around exactly one root.
pub fn isolate_roots(
    p: &UniPoly,
    lo: &BigRational,
    hi: &BigRational,
) -> Result<Vec<RootInterval>, PolyError> {
    if !p.is_squarefree()? {
        return Err(PolyError::NotSquarefree);
    }
    assert!(lo < hi, "empty interval");
    let chain = sturm_chain(p);
    let step = (hi - lo) / BigRational::from_integer(num_bigint::BigInt::from(1u64 << 40));
    let lo = nudge_endpoint(p, lo, &step, true);
    let hi = nudge_endpoint(p, hi, &step, false);
    let mut out = Vec::new();
    if lo < hi {
        subdivide(&chain, p, lo, hi, &mut out);
    }
    out.sort_by(|a, b| a.lo.cmp(&b.lo));
    Ok(out)
}

/// Recursive bisection on Sturm counts. Both endpoints are non-roots on entry.
fn subdivide(
    chain: &[UniPoly],
    p: &UniPoly,
    lo: BigRational,
    hi: BigRational,
    out: &mut Vec<RootInterval>,
) {
    let n = sign_variations(chain, &lo) - sign_variations(chain, &hi);
    if n == 0 {
        return;
    }
    if n == 1 {
        out.push(RootInterval {
            parity: Sign::of(&p.eval(&lo)),
            lo,
            hi,
        });
        return;
    }
    let two = BigRational::from_integer(2.into());
    let mut mid = (&lo + &hi) / two;
    if p.eval(&mid).is_zero() {
        // split point landed on a root: shift it deterministically
        let step =
            (&hi - &lo) / BigRational::from_integer(num_bigint::BigInt::from(1u64 << 40));
        mid = nudge_endpoint(p, &mid, &step, true);
    }
    subdivide(chain, p, lo, mid.clone(), out);
    subdivide(chain, p, mid, hi, out);
}

const NEWTON_STEPS: usize = 4;

/// Refines an isolating interval by exact bisection until the relative width
/// reaches `rel_tol`, then polishes the floating value with a few Newton
/// steps validated against the certified bounds.
pub fn refine_root(p: &UniPoly, iv: &RootInterval, rel_tol: f64) -> Result<RefinedRoot, PolyError> {
    if p.is_zero() {
        return Err(PolyError::ZeroDivisor);
    }
    // linear polynomials have an exact rational root
    if p.degree() == Some(1) {
        let root = -(p.coeff(0) / p.coeff(1));
        return Ok(RefinedRoot::exact(root));
    }
    let tol = BigRational::from_float(rel_tol).ok_or(PolyError::ZeroDivisor)?;
    let two = BigRational::from_integer(2.into());

    let mut lo = iv.lo.clone();
    let mut hi = iv.hi.clone();
    let sign_lo = Sign::of(&p.eval(&lo));
    if sign_lo == Sign::Zero {
        return Ok(RefinedRoot::exact(lo));
    }
    if Sign::of(&p.eval(&hi)) == Sign::Zero {
        return Ok(RefinedRoot::exact(hi));
    }
    while rel_width(&lo, &hi) > tol {
        let mid = (&lo + &hi) / &two;
        match Sign::of(&p.eval(&mid)) {
            Sign::Zero => return Ok(RefinedRoot::exact(mid)),
            s if s == sign_lo => lo = mid,
            _ => hi = mid,
        }
    }

    // Newton polish in f64; fall back to the bisection midpoint whenever a
    // step leaves the certified interval
    let flo = lo.to_f64().unwrap_or(f64::NEG_INFINITY);
    let fhi = hi.to_f64().unwrap_or(f64::INFINITY);
    let mut value = ((&lo + &hi) / &two).to_f64().unwrap_or(f64::NAN);
    let deriv = p.derivative();
    for _ in 0..NEWTON_STEPS {
        let fx = p.eval_f64(value);
        let dx = deriv.eval_f64(value);
        if dx == 0.0 || !dx.is_finite() || !fx.is_finite() {
            break;
        }
        let next = value - fx / dx;
        if !(flo..=fhi).contains(&next) {
            value = ((&lo + &hi) / &two).to_f64().unwrap_or(value);
            break;
        }
        value = next;
    }

    Ok(RefinedRoot {
        value,
        relative_width: rel_width(&lo, &hi).to_f64().unwrap_or(f64::NAN),
        certified_lo: lo,
        certified_hi: hi,
    })
}

/// Root search upper bound used for positive-root sweeps:
/// `1 + max(1, cauchy_bound(p))`.
pub(crate) fn positive_root_bound(p: &UniPoly) -> BigRational {
    let one = BigRational::one();
    &one + one.clone().max(p.cauchy_bound())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyengine::{rat, rat_int, Var};

    fn poly(cs: &[i64]) -> UniPoly {
        UniPoly::new(Var::X12, cs.iter().map(|&c| rat_int(c)).collect())
    }

    #[test]
    fn sqrt2_in_unit_interval() {
        let p = poly(&[-2, 0, 1]);
        assert_eq!(sturm_count(&p, &rat_int(1), &rat_int(2)).unwrap(), 1);
    }

    #[test]
    fn no_real_roots() {
        let p = poly(&[1, 0, 1]);
        assert_eq!(sturm_count(&p, &rat_int(-10), &rat_int(10)).unwrap(), 0);
        assert!(isolate_roots(&p, &rat_int(-10), &rat_int(10)).unwrap().is_empty());
    }

    #[test]
    fn non_squarefree_rejected() {
        let p = poly(&[1, -2, 1]); // (x-1)^2
        assert_eq!(
            sturm_count(&p, &rat_int(0), &rat_int(2)),
            Err(PolyError::NotSquarefree)
        );
    }

    #[test]
    fn isolates_both_sqrt2_roots() {
        let p = poly(&[-2, 0, 1]);
        let ivs = isolate_roots(&p, &rat_int(-2), &rat_int(2)).unwrap();
        assert_eq!(ivs.len(), 2);
        assert!(ivs[0].hi <= rat_int(0) || ivs[0].lo < rat_int(0));
        assert!(ivs[0].hi < ivs[1].lo || ivs[0].hi == ivs[1].lo);
        // one root in each half
        assert!(ivs[0].lo < rat_int(0));
        assert!(ivs[1].hi > rat_int(0));
    }

    #[test]
    fn endpoint_root_excluded_by_nudge() {
        // roots at 0 and 1; open interval (0, 1) contains neither
        let p = poly(&[0, -1, 1]);
        assert_eq!(sturm_count(&p, &rat_int(0), &rat_int(1)).unwrap(), 0);
        // but (−1/2, 1/2) contains the root 0
        assert_eq!(sturm_count(&p, &rat(-1, 2), &rat(1, 2)).unwrap(), 1);
    }

    #[test]
    fn refine_sqrt2() {
        let p = poly(&[-2, 0, 1]);
        let iv = RootInterval {
            lo: rat_int(1),
            hi: rat_int(2),
            parity: Sign::Negative,
        };
        let r = refine_root(&p, &iv, 1e-12).unwrap();
        assert!((r.value - std::f64::consts::SQRT_2).abs() < 1e-12);
        assert!(r.relative_width <= 1e-12);
        assert!(r.certified_lo <= r.certified_hi);
        // certified interval brackets the sign change
        assert!(p.eval(&r.certified_lo).is_negative() != p.eval(&r.certified_hi).is_negative());
    }

    #[test]
    fn refine_exact_rational_root() {
        // x - 3/7 has an exact root with a zero-width certificate
        let p = UniPoly::new(Var::X12, vec![rat(-3, 7), rat_int(1)]);
        let iv = RootInterval {
            lo: rat_int(0),
            hi: rat_int(1),
            parity: Sign::Negative,
        };
        let r = refine_root(&p, &iv, 1e-12).unwrap();
        assert_eq!(r.certified_lo, rat(3, 7));
        assert_eq!(r.certified_hi, rat(3, 7));
        assert_eq!(r.relative_width, 0.0);
    }

    #[test]
    fn refine_dyadic_root_found_exactly_by_bisection() {
        // (x - 1/2)(x - 5) has a root hit exactly by a bisection midpoint
        let p = UniPoly::new(
            Var::X12,
            vec![rat(5, 2), rat(-11, 2), rat_int(1)],
        );
        let iv = RootInterval {
            lo: rat_int(0),
            hi: rat_int(1),
            parity: Sign::Positive,
        };
        let r = refine_root(&p, &iv, 1e-12).unwrap();
        assert_eq!(r.certified_lo, rat(1, 2));
        assert_eq!(r.relative_width, 0.0);
    }

    #[test]
    fn positive_root_bound_covers_cauchy() {
        let p = poly(&[-2, 0, 1]);
        assert_eq!(positive_root_bound(&p), rat_int(4));
    }
}
