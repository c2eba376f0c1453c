//! Plain-text polynomial serialization.
//!
//! One term per line: `<deg> <num>/<den>` for univariate polynomials,
//! `<deg_a> <deg_b> <num>/<den>` for bivariate ones. Lines starting with `#`
//! are comments and carry provenance notes in the data files.

use std::fmt::Write as _;
use std::str::FromStr;

use super::{BigRational, BiPoly, PolyError, UniPoly, Var};

pub fn render_unipoly(p: &UniPoly, provenance: &str) -> String {
    let mut out = String::new();
    for line in provenance.lines() {
        let _ = writeln!(out, "# {line}");
    }
    let _ = writeln!(out, "# variable: {}", p.var());
    for (deg, c) in p.coeffs().iter().enumerate() {
        if !num_traits::Zero::is_zero(c) {
            let _ = writeln!(out, "{} {}/{}", deg, c.numer(), c.denom());
        }
    }
    out
}

pub fn render_bipoly(p: &BiPoly, provenance: &str) -> String {
    let mut out = String::new();
    for line in provenance.lines() {
        let _ = writeln!(out, "# {line}");
    }
    let _ = writeln!(out, "# variables: {} {}", p.vars().0, p.vars().1);
    for (e, c) in p.terms() {
        let _ = writeln!(out, "{} {} {}/{}", e.0, e.1, c.numer(), c.denom());
    }
    out
}

fn parse_coeff(s: &str, line_no: usize) -> Result<BigRational, PolyError> {
    BigRational::from_str(s)
        .map_err(|e| PolyError::Parse(format!("line {}: bad coefficient {s:?}: {e}", line_no + 1)))
}

fn parse_exp(s: &str, line_no: usize) -> Result<u32, PolyError> {
    s.parse::<u32>()
        .map_err(|_| PolyError::Parse(format!("line {}: bad exponent {s:?}", line_no + 1)))
}

pub fn parse_unipoly(text: &str, var: Var) -> Result<UniPoly, PolyError> {
    let mut terms: Vec<(usize, BigRational)> = Vec::new();
    for (no, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut it = line.split_whitespace();
        let (Some(d), Some(c), None) = (it.next(), it.next(), it.next()) else {
            return Err(PolyError::Parse(format!(
                "line {}: expected `<deg> <num>/<den>`",
                no + 1
            )));
        };
        terms.push((parse_exp(d, no)? as usize, parse_coeff(c, no)?));
    }
    let deg = terms.iter().map(|(d, _)| *d).max().unwrap_or(0);
    let mut coeffs = vec![BigRational::from_integer(0.into()); deg + 1];
    for (d, c) in terms {
        coeffs[d] += c;
    }
    Ok(UniPoly::new(var, coeffs))
}

pub fn parse_bipoly(text: &str, vars: (Var, Var)) -> Result<BiPoly, PolyError> {
    let mut p = BiPoly::zero(vars);
    for (no, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut it = line.split_whitespace();
        let (Some(a), Some(b), Some(c), None) = (it.next(), it.next(), it.next(), it.next())
        else {
            return Err(PolyError::Parse(format!(
                "line {}: expected `<deg_a> <deg_b> <num>/<den>`",
                no + 1
            )));
        };
        p.add_term((parse_exp(a, no)?, parse_exp(b, no)?), parse_coeff(c, no)?);
    }
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyengine::rat;

    #[test]
    fn unipoly_round_trip() {
        let p = UniPoly::new(Var::X12, vec![rat(-3, 7), rat(0, 1), rat(5, 1)]);
        let text = render_unipoly(&p, "test dump");
        let q = parse_unipoly(&text, Var::X12).unwrap();
        assert_eq!(p, q);
    }

    #[test]
    fn bipoly_round_trip() {
        let p = BiPoly::from_terms(
            (Var::K, Var::L),
            [((2, 0), rat(4, 1)), ((1, 3), rat(-7, 2))],
        );
        let text = render_bipoly(&p, "test dump");
        let q = parse_bipoly(&text, (Var::K, Var::L)).unwrap();
        assert_eq!(p, q);
    }

    #[test]
    fn comments_and_blank_lines_ignored() {
        let text = "# provenance: somewhere\n\n0 1/2\n2 -3/1\n";
        let p = parse_unipoly(text, Var::X3).unwrap();
        assert_eq!(p.coeff(0), rat(1, 2));
        assert_eq!(p.coeff(2), rat(-3, 1));
    }

    #[test]
    fn malformed_line_reports_position() {
        let err = parse_unipoly("0 1/2\nnonsense\n", Var::X3).unwrap_err();
        match err {
            PolyError::Parse(msg) => assert!(msg.contains("line 2")),
            other => panic!("unexpected error {other:?}"),
        }
    }
}
