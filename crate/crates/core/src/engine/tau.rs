use crate::complex::{vertical_complex, BifilteredComplex};
use crate::error::{Error, Result};
use crate::f2::{self, F2Vec, PivotBasis};
use crate::validate::validate;

/// `τ`: the least Alexander level `j` such that `F_j` of the vertical complex
/// carries a cycle representing the generator of its grading-0 homology.
pub fn tau(complex: &BifilteredComplex) -> Result<i64> {
    if complex.ambient_d() != 0 {
        return Err(Error::AmbientNotZero(complex.ambient_d()));
    }
    let report = validate(complex);
    if !report.pass {
        return Err(Error::NonAdmissible(report.summary()));
    }

    let v = vertical_complex(complex);
    let gens = v.generators();
    let in_grading = |m: i64| -> (Vec<usize>, Vec<Option<usize>>) {
        let mut members = Vec::new();
        let mut pos = vec![None; gens.len()];
        for (k, g) in gens.iter().enumerate() {
            if g.maslov == m {
                pos[k] = Some(members.len());
                members.push(k);
            }
        }
        (members, pos)
    };
    let (mut zero, pos0) = in_grading(0);
    let (below, pos_below) = in_grading(-1);
    let (above, _) = in_grading(1);

    let image = |k: usize, pos: &[Option<usize>], dim: usize| {
        F2Vec::from_indices(dim, v.arrows().iter().filter(|a| a.source == k).filter_map(|a| pos[a.target]))
    };
    let mut boundaries = PivotBasis::new(zero.len());
    let mut rank_b = 0;
    for &k in &above {
        rank_b += boundaries.insert(image(k, &pos0, zero.len())) as usize;
    }

    // reduce in increasing Alexander order so kernel lows track the filtration
    zero.sort_by_key(|&k| (gens[k].alexander, k));
    let columns: Vec<F2Vec> = zero.iter().map(|&k| image(k, &pos_below, below.len())).collect();
    let kernel = f2::kernel(&columns);
    if kernel.len() != rank_b + 1 {
        return Err(Error::NonAdmissible(format!(
            "vertical homology in grading 0 has dimension {}, expected 1",
            kernel.len() - rank_b
        )));
    }
    for z in kernel {
        let original = F2Vec::from_indices(zero.len(), z.ones().map(|p| pos0[zero[p]].expect("grading-0 member")));
        if !boundaries.contains(&original) {
            let low = z.highest().expect("kernel vectors are nonzero");
            return Ok(gens[zero[low]].alexander);
        }
    }
    Err(Error::Inconsistent("vertical homology has no essential cycle".into()))
}
