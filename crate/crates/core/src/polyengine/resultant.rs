use super::{BiPoly, PolyError, UniPoly, Var};

/// Resultant of `f` and `g` with respect to `eliminate`: the determinant of
/// their Sylvester matrix, taken over the polynomial ring in the surviving
/// variable. Vanishes at every surviving coordinate of a common zero.
pub fn resultant(f: &BiPoly, g: &BiPoly, eliminate: Var) -> Result<UniPoly, PolyError> {
    assert_eq!(f.vars(), g.vars(), "variable mismatch");
    let slot = if f.vars().0 == eliminate {
        0
    } else if f.vars().1 == eliminate {
        1
    } else {
        panic!("eliminated variable {eliminate} not present in {:?}", f.vars());
    };
    let survive = if slot == 0 { f.vars().1 } else { f.vars().0 };

    let fc = f.as_univariate_in(slot);
    let gc = g.as_univariate_in(slot);
    let m = fc.len().saturating_sub(1);
    let n = gc.len().saturating_sub(1);
    if m == 0 || n == 0 || fc.is_empty() || gc.is_empty() {
        return Err(PolyError::NothingToEliminate);
    }

    // Sylvester matrix: n shifted rows of f's coefficients, then m of g's,
    // highest degree first.
    let size = m + n;
    let zero = UniPoly::zero(survive);
    let mut mat = vec![vec![zero.clone(); size]; size];
    for row in 0..n {
        for (i, c) in fc.iter().rev().enumerate() {
            mat[row][row + i] = c.clone();
        }
    }
    for row in 0..m {
        for (i, c) in gc.iter().rev().enumerate() {
            mat[n + row][row + i] = c.clone();
        }
    }
    Ok(bareiss_determinant(mat, survive))
}

/// Fraction-free Bareiss elimination over the polynomial ring. All interior
/// divisions are exact; row swaps flip the sign of the result.
fn bareiss_determinant(mut m: Vec<Vec<UniPoly>>, var: Var) -> UniPoly {
    let n = m.len();
    if n == 0 {
        return UniPoly::constant(var, num_traits::One::one());
    }
    let mut sign = 1i64;
    let mut prev_pivot = UniPoly::constant(var, num_traits::One::one());
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&r| !m[r][k].is_zero()) else {
                return UniPoly::zero(var);
            };
            m.swap(k, swap);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = m[k][k].mul(&m[i][j]).sub(&m[i][k].mul(&m[k][j]));
                m[i][j] = num
                    .div_exact(&prev_pivot)
                    .expect("Bareiss division is exact over an integral domain");
            }
            m[i][k] = UniPoly::zero(var);
        }
        prev_pivot = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if sign < 0 {
        det.neg()
    } else {
        det
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyengine::{rat_int, BigRational};

    const VARS: (Var, Var) = (Var::X3, Var::X12);

    fn bp(terms: &[(u32, u32, i64)]) -> BiPoly {
        BiPoly::from_terms(
            VARS,
            terms.iter().map(|&(a, b, c)| ((a, b), rat_int(c))),
        )
    }

    #[test]
    fn linear_case_is_difference() {
        // Res_y(y - a(x), y - b(x)) = b(x) - a(x) up to sign, with a = x, b = x^2
        let f = bp(&[(1, 0, 1), (0, 1, -1)]);
        let g = bp(&[(1, 0, 1), (0, 2, -1)]);
        let r = resultant(&f, &g, Var::X3).unwrap();
        let expect = UniPoly::new(
            Var::X12,
            vec![rat_int(0), rat_int(-1), rat_int(1)],
        );
        assert!(r == expect || r == expect.neg());
    }

    #[test]
    fn quadratic_against_linear() {
        // Res_y(y^2 - x, y - 1) = 1 - x up to sign
        let f = bp(&[(2, 0, 1), (0, 1, -1)]);
        let g = bp(&[(1, 0, 1), (0, 0, -1)]);
        let r = resultant(&f, &g, Var::X3).unwrap();
        let expect = UniPoly::new(Var::X12, vec![rat_int(1), rat_int(-1)]);
        assert!(r == expect || r == expect.neg());
    }

    #[test]
    fn vanishes_at_common_root() {
        // f = (y - 2)(y - x), g = (y - 2)(y + 7): common root y = 2 for all x,
        // so the resultant is identically zero
        let f = bp(&[(2, 0, 1), (1, 1, -1), (1, 0, -2), (0, 1, 2)]);
        let g = bp(&[(2, 0, 1), (1, 0, 5), (0, 0, -14)]);
        let r = resultant(&f, &g, Var::X3).unwrap();
        assert!(r.is_zero());
    }

    #[test]
    fn constructed_common_point_kills_resultant() {
        // f = y^2 - x, g = y - 3 share the zero (x, y) = (9, 3)
        let f = bp(&[(2, 0, 1), (0, 1, -1)]);
        let g = bp(&[(1, 0, 1), (0, 0, -3)]);
        let r = resultant(&f, &g, Var::X3).unwrap();
        assert!(r.eval(&rat_int(9)).eq(&BigRational::from_integer(0.into())));
    }

    #[test]
    fn constant_in_eliminated_variable_rejected() {
        let f = bp(&[(0, 2, 1), (0, 0, -1)]); // no x3 at all
        let g = bp(&[(1, 0, 1)]);
        assert_eq!(resultant(&f, &g, Var::X3), Err(PolyError::NothingToEliminate));
    }
}
