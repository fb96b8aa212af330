use crate::complex::BifilteredComplex;
use crate::error::{Error, Result};
use crate::f2::{self, F2Vec};
use crate::rational::Rational;

use super::{check_t, Admissible};

/// `ν_t` as the least shift `s` for which the sub-complex of lattice points in
/// the half-plane `f_t ≤ s` surjects onto homology in grading `d`.
///
/// Each candidate level is tested from scratch: the cycles of the sub-complex
/// are recomputed, and surjectivity onto the rank-one homology means some such
/// cycle raises the rank of the boundary space.
pub fn nu_at_halfplane(complex: &BifilteredComplex, t: Rational) -> Result<Rational> {
    check_t(t)?;
    let adm = Admissible::new(complex)?;
    let n = adm.slice_len();
    let weights: Vec<Rational> = (0..n).map(|k| adm.weight(t, k)).collect();
    let mut levels = weights.clone();
    levels.sort();
    levels.dedup();

    for s in levels {
        let members: Vec<usize> = (0..n).filter(|&k| weights[k] <= s).collect();
        let columns: Vec<F2Vec> = members.iter().map(|&k| adm.down()[k].clone()).collect();
        let mut image = adm.boundaries().clone();
        let before = image.rank();
        for z in f2::kernel(&columns) {
            image.insert(F2Vec::from_indices(n, z.ones().map(|pos| members[pos])));
        }
        if image.rank() > before {
            return Ok(s);
        }
    }
    Err(Error::Inconsistent("no sub-level set surjects onto homology".into()))
}
