//! Exact computation of `ν_t`, `Υ(t) = -2ν_t` and `τ`.
//!
//! Every computation happens on the finite grading-`d` slice (`d = ambient_d`),
//! where each generator contributes exactly one lattice point. The cycles and
//! boundaries of that slice do not depend on `t`; only the order in which
//! `f_t` sorts the points does.

mod assemble;
mod halfplane;
mod oracle;
mod tau;

use serde::Serialize;

pub use assemble::{check_symmetry, jump_report, upsilon, JumpCheck};
pub use halfplane::nu_at_halfplane;
pub use oracle::{brute_force_nu, BRUTE_FORCE_LIMIT};
pub use tau::tau;

use crate::complex::{BifilteredComplex, LatticePoint};
use crate::error::{Error, Result};
use crate::f2::{self, F2Vec, PivotBasis};
use crate::rational::Rational;
use crate::validate::{validate, GradedSlices, SlicePoint};

pub(crate) fn check_t(t: Rational) -> Result<()> {
    if t < Rational::ZERO || t > Rational::TWO {
        Err(Error::ParameterOutOfRange(t))
    } else {
        Ok(())
    }
}

fn weight(t: Rational, i: i64, j: i64) -> Rational {
    let half = t / 2;
    (Rational::ONE - half) * i + half * j
}

/// `f_t([x, i, j]) = (1 - t/2)·i + (t/2)·j`.
pub fn f_t(t: Rational, p: &LatticePoint) -> Result<Rational> {
    check_t(t)?;
    Ok(weight(t, p.i, p.j))
}

/// `F_t` of a chain: the largest `f_t` over its summands, `None` for the zero chain.
pub fn chain_filtration(t: Rational, chain: &[LatticePoint]) -> Result<Option<Rational>> {
    check_t(t)?;
    Ok(chain.iter().map(|p| weight(t, p.i, p.j)).max())
}

/// A minimizing cycle for `ν_t` together with the points attaining the minimum.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NuCertificate {
    pub t: Rational,
    pub nu: Rational,
    pub realizing_points: Vec<LatticePoint>,
    pub cycle: Vec<LatticePoint>,
}

/// A validated, admissible complex with its grading slices precomputed.
#[derive(Clone, Debug)]
pub struct Admissible<'a> {
    complex: &'a BifilteredComplex,
    slices: GradedSlices,
    boundaries: PivotBasis,
}

impl<'a> Admissible<'a> {
    pub fn new(complex: &'a BifilteredComplex) -> Result<Self> {
        let report = validate(complex);
        if !report.pass {
            return Err(Error::NonAdmissible(report.summary()));
        }
        let slices = GradedSlices::new(complex, complex.ambient_d());
        let boundaries = slices.boundary_basis();
        Ok(Admissible { complex, slices, boundaries })
    }

    pub fn complex(&self) -> &BifilteredComplex {
        self.complex
    }

    /// Number of lattice points in the grading-`d` slice.
    pub fn slice_len(&self) -> usize {
        self.slices.points.len()
    }

    pub(crate) fn points(&self) -> &[SlicePoint] {
        &self.slices.points
    }

    pub(crate) fn down(&self) -> &[F2Vec] {
        &self.slices.down
    }

    pub(crate) fn boundaries(&self) -> &PivotBasis {
        &self.boundaries
    }

    pub(crate) fn weight(&self, t: Rational, k: usize) -> Rational {
        let p = &self.slices.points[k];
        weight(t, p.i, p.j)
    }

    pub(crate) fn lattice_point(&self, k: usize) -> LatticePoint {
        let p = &self.slices.points[k];
        LatticePoint { generator: self.complex.generators()[p.generator].name.clone(), i: p.i, j: p.j }
    }

    /// Minimal filtration level of a cycle representing the nonzero class.
    ///
    /// Points are sorted by `f_t` and the boundary columns reduced in that
    /// order, so the kernel basis has strictly increasing lows. The first
    /// kernel vector that is not a boundary has the smallest possible low,
    /// and its low point fixes `ν_t`.
    pub fn nu(&self, t: Rational) -> Result<NuCertificate> {
        check_t(t)?;
        let n = self.slice_len();
        let weights: Vec<Rational> = (0..n).map(|k| self.weight(t, k)).collect();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&k| (weights[k], k));

        let columns: Vec<F2Vec> = order.iter().map(|&k| self.slices.down[k].clone()).collect();
        let witness = f2::kernel(&columns)
            .into_iter()
            .map(|z| F2Vec::from_indices(n, z.ones().map(|pos| order[pos])))
            .find(|z| !self.boundaries.contains(z))
            .ok_or_else(|| Error::Inconsistent("no cycle represents the nonzero class".into()))?;

        let nu = witness.ones().map(|k| weights[k]).max().expect("witness is nonzero");
        let mut cycle: Vec<usize> = witness.ones().collect();
        cycle.sort_by_key(|&k| (weights[k], k));
        let realizing_points = cycle.iter().filter(|&&k| weights[k] == nu).map(|&k| self.lattice_point(k)).collect();
        let cycle = cycle.iter().map(|&k| self.lattice_point(k)).collect();
        Ok(NuCertificate { t, nu, realizing_points, cycle })
    }
}

/// `ν_t` with a witness cycle.
pub fn nu_at(complex: &BifilteredComplex, t: Rational) -> Result<NuCertificate> {
    check_t(t)?;
    Admissible::new(complex)?.nu(t)
}
