use crate::complex::BifilteredComplex;
use crate::error::{Error, Result};
use crate::f2::F2Vec;
use crate::rational::Rational;

use super::{check_t, Admissible};

pub const BRUTE_FORCE_LIMIT: usize = 20;

/// `ν_t` by exhaustive enumeration of every chain in the grading-`d` slice.
///
/// Walks all `2^n` chains in Gray-code order, keeping the running boundary, and
/// takes the minimum of `F_t` over chains that are cycles but not boundaries.
pub fn brute_force_nu(complex: &BifilteredComplex, t: Rational) -> Result<Rational> {
    check_t(t)?;
    let adm = Admissible::new(complex)?;
    let n = adm.slice_len();
    if n > BRUTE_FORCE_LIMIT {
        return Err(Error::SliceTooLarge { size: n, limit: BRUTE_FORCE_LIMIT });
    }
    let weights: Vec<Rational> = (0..n).map(|k| adm.weight(t, k)).collect();
    let below = adm.down().first().map_or(0, F2Vec::len);

    let mut chain = F2Vec::zeros(n);
    let mut image = F2Vec::zeros(below);
    let mut best: Option<Rational> = None;
    for step in 1u64..(1u64 << n) {
        let k = step.trailing_zeros() as usize;
        chain.flip(k);
        image.xor_assign(&adm.down()[k]);
        if !image.is_zero() || adm.boundaries().contains(&chain) {
            continue;
        }
        let level = chain.ones().map(|k| weights[k]).max().expect("nonzero chain");
        if best.is_none_or(|b| level < b) {
            best = Some(level);
        }
    }
    best.ok_or_else(|| Error::Inconsistent("enumeration found no homologically essential cycle".into()))
}
