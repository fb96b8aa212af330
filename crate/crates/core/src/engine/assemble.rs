//! Assembly of the full piecewise-linear `Υ` and the jump diagnostics.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::complex::{BifilteredComplex, LatticePoint};
use crate::error::{Error, Result};
use crate::pl::PLFunction;
use crate::rational::Rational;

use super::{weight, Admissible, NuCertificate};

/// Parameters in `(0, 2)` where two grading-`d` lattice points at distinct
/// coordinates tie under `f_t`. Between consecutive candidates the `f_t`-order
/// of the slice is constant, so `ν_t` is linear there.
fn candidate_breakpoints(adm: &Admissible<'_>) -> Vec<Rational> {
    let coords: BTreeSet<(i64, i64)> = adm.points().iter().map(|p| (p.i, p.j)).collect();
    let coords: Vec<(i64, i64)> = coords.into_iter().collect();
    let mut ts = BTreeSet::from([Rational::ZERO, Rational::TWO]);
    for (a, &(i1, j1)) in coords.iter().enumerate() {
        for &(i2, j2) in &coords[a + 1..] {
            let (di, dj) = (i1 - i2, j1 - j2);
            // (1 - t/2)·di + (t/2)·dj = 0  <=>  t = 2·di / (di - dj)
            if di != dj {
                let t = Rational::new(2 * di, di - dj);
                if t > Rational::ZERO && t < Rational::TWO {
                    ts.insert(t);
                }
            }
        }
    }
    ts.into_iter().collect()
}

/// The realizing point of a certificate taken at a parameter where no two
/// distinct slice coordinates tie; all realizing points share coordinates.
fn generic_realizer(cert: &NuCertificate) -> Result<&LatticePoint> {
    let first = cert
        .realizing_points
        .first()
        .ok_or_else(|| Error::Inconsistent(format!("empty realizing set at t = {}", cert.t)))?;
    if cert.realizing_points.iter().any(|p| (p.i, p.j) != (first.i, first.j)) {
        return Err(Error::Inconsistent(format!("realizing points at generic t = {} disagree", cert.t)));
    }
    Ok(first)
}

/// `Υ(t) = -2ν_t` as an exact PL function on `[0, 2]`.
///
/// `ν` is evaluated at every candidate breakpoint and at the midpoint of each
/// gap. The midpoint's realizing point `[x, i, j]` predicts the slope `i - j`;
/// the endpoint values must lie on that line, otherwise an error is returned.
pub fn upsilon(complex: &BifilteredComplex) -> Result<PLFunction> {
    let adm = Admissible::new(complex)?;
    let ts = candidate_breakpoints(&adm);
    let ups: Vec<Rational> = ts.iter().map(|&t| adm.nu(t).map(|c| -(c.nu * 2))).collect::<Result<_>>()?;

    for k in 0..ts.len() - 1 {
        let (a, b) = (ts[k], ts[k + 1]);
        let mid = adm.nu(Rational::midpoint(a, b))?;
        let p = generic_realizer(&mid)?;
        let slope = Rational::from_int(p.i - p.j);
        let mid_value = -(mid.nu * 2);
        if ups[k + 1] - ups[k] != slope * (b - a) || mid_value * 2 != ups[k] + ups[k + 1] {
            return Err(Error::Inconsistent(format!(
                "Υ is not linear with slope {slope} on [{a}, {b}]: values {}, {}, {} (midpoint)",
                ups[k],
                ups[k + 1],
                mid_value
            )));
        }
    }
    PLFunction::from_points(ts, ups)
}

/// `f(t) = f(2 - t)` as an exact identity.
pub fn check_symmetry(f: &PLFunction) -> bool {
    f.reflect() == *f
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct JumpCheck {
    pub t: Rational,
    /// Realizes `Υ` just left of `t`.
    pub left_point: LatticePoint,
    /// Realizes `Υ` just right of `t`.
    pub right_point: LatticePoint,
    pub observed_jump: i64,
    /// `(2/t)·(i' - i)`.
    pub predicted_jump: Rational,
    /// Both points attain `ν_t` on the line of slope `1 - 2/t`.
    pub same_line: bool,
    /// Segment slopes of the PL function equal `i - j` for the adjacent realizers.
    pub slopes_match: bool,
    /// Three or more distinct lattice coordinates realize `Υ` at `t`.
    pub degenerate: bool,
    pub passed: bool,
}

/// Checks the slope-jump identity at every interior breakpoint of `f`,
/// which should be `upsilon(complex)`.
pub fn jump_report(complex: &BifilteredComplex, f: &PLFunction) -> Result<Vec<JumpCheck>> {
    let adm = Admissible::new(complex)?;
    let bp = f.breakpoints();
    let slopes = f.slopes();
    let mut out = Vec::new();
    for k in 1..bp.len() - 1 {
        let t0 = bp[k];
        let left = adm.nu(Rational::midpoint(bp[k - 1], t0))?;
        let right = adm.nu(Rational::midpoint(t0, bp[k + 1]))?;
        let at = adm.nu(t0)?;
        let p = generic_realizer(&left)?.clone();
        let q = generic_realizer(&right)?.clone();

        let observed_jump = slopes[k] - slopes[k - 1];
        let predicted_jump = Rational::from_int(q.i - p.i) * 2 / t0;
        let nu_t0 = -f.eval(t0)? / 2;
        let same_line = weight(t0, p.i, p.j) == nu_t0 && weight(t0, q.i, q.j) == nu_t0 && at.nu == nu_t0;
        let slopes_match = slopes[k - 1] == p.i - p.j && slopes[k] == q.i - q.j;

        let mut coords: BTreeSet<(i64, i64)> = at.realizing_points.iter().map(|r| (r.i, r.j)).collect();
        coords.insert((p.i, p.j));
        coords.insert((q.i, q.j));
        let degenerate = coords.len() >= 3;

        let passed = Rational::from_int(observed_jump) == predicted_jump && same_line && slopes_match;
        out.push(JumpCheck {
            t: t0,
            left_point: p,
            right_point: q,
            observed_jump,
            predicted_jump,
            same_line,
            slopes_match,
            degenerate,
            passed,
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{dual, DiffEntry, Generator};
    use crate::r;

    fn trefoil() -> BifilteredComplex {
        BifilteredComplex::new(
            None,
            0,
            vec![Generator::new("a", 1, 0), Generator::new("b", 0, -1), Generator::new("c", -1, -2)],
            &[DiffEntry::new("b", "a", 1), DiffEntry::new("b", "c", 0)],
        )
        .unwrap()
    }

    #[test]
    fn trefoil_upsilon() {
        let u = upsilon(&trefoil()).unwrap();
        assert_eq!(u.breakpoints(), &[r!(0), r!(1), r!(2)]);
        assert_eq!(u.values(), &[r!(0), r!(-1), r!(0)]);
        assert_eq!(u.slopes(), &[-1, 1]);
        assert!(check_symmetry(&u));
        let left = upsilon(&dual(&trefoil()).unwrap()).unwrap();
        assert_eq!(left, u.neg());
    }

    #[test]
    fn unknot_upsilon_is_zero() {
        let unknot = BifilteredComplex::new(None, 0, vec![Generator::new("x", 0, 0)], &[]).unwrap();
        let u = upsilon(&unknot).unwrap();
        assert_eq!(u, PLFunction::zero());
        assert!(jump_report(&unknot, &u).unwrap().is_empty());
    }

    #[test]
    fn symmetry_detects_asymmetry() {
        let f = PLFunction::from_points(vec![r!(0), r!(2)], vec![r!(0), r!(-2)]).unwrap();
        assert!(!check_symmetry(&f));
        assert!(check_symmetry(&PLFunction::zero()));
    }

    #[test]
    fn trefoil_jump_at_one() {
        let c = trefoil();
        let u = upsilon(&c).unwrap();
        let report = jump_report(&c, &u).unwrap();
        assert_eq!(report.len(), 1);
        let j = &report[0];
        assert_eq!(j.t, r!(1));
        assert_eq!((j.left_point.i, j.left_point.j), (0, 1));
        assert_eq!((j.right_point.i, j.right_point.j), (1, 0));
        assert_eq!(j.observed_jump, 2);
        assert_eq!(j.predicted_jump, r!(2));
        assert!(j.passed && !j.degenerate);
    }

    #[test]
    fn jump_report_flags_a_wrong_function() {
        let c = trefoil();
        let wrong = PLFunction::from_points(vec![r!(0), r!(1, 2), r!(2)], vec![r!(0), r!(-1, 2), r!(1)]).unwrap();
        let report = jump_report(&c, &wrong).unwrap();
        assert!(report.iter().any(|j| !j.passed));
    }
}
