mod common;

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use upsilon_core::certificates::{certify_right_veering, obstruct_concordance, ObstructionReason, RVVerdict};
use upsilon_core::complex::{dual, grading_slice, tensor};
use upsilon_core::engine::{chain_filtration, check_symmetry, tau, upsilon};
use upsilon_core::knots::KnotRecord;
use upsilon_core::{r, BifilteredComplex, LatticePoint, Rational};

use common::{corpus, random_complex, random_summand};

/// Boundary of a chain of lattice points, computed directly from the arrows.
fn boundary(c: &BifilteredComplex, chain: &[LatticePoint]) -> Vec<LatticePoint> {
    let mut out: BTreeMap<(String, i64, i64), usize> = BTreeMap::new();
    for p in chain {
        let k = c.index_of(&p.generator).unwrap();
        for a in c.arrows().iter().filter(|a| a.source == k) {
            let y = &c.generators()[a.target];
            *out.entry((y.name.clone(), p.i - a.upower, p.j - a.upower)).or_default() += 1;
        }
    }
    out.into_iter().filter(|(_, n)| n % 2 == 1).map(|((generator, i, j), _)| LatticePoint { generator, i, j }).collect()
}

#[test]
fn additivity_on_random_pairs() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..20 {
        let a = random_summand(&mut rng);
        let b = random_summand(&mut rng);
        let sum = upsilon(&a).unwrap().add(&upsilon(&b).unwrap());
        assert_eq!(upsilon(&tensor(&a, &b).unwrap()).unwrap(), sum);
    }
}

#[test]
fn dual_antisymmetry_and_symmetry_on_corpus() {
    for (name, c) in corpus() {
        let u = upsilon(&c).unwrap();
        assert_eq!(upsilon(&dual(&c).unwrap()).unwrap(), u.neg(), "{name}");
        assert!(check_symmetry(&u), "{name}");
    }
}

#[test]
fn tau_matches_initial_slope() {
    for (name, c) in corpus() {
        assert_eq!(tau(&c).unwrap(), -upsilon(&c).unwrap().initial_slope(), "{name}");
    }
}

#[test]
fn boundary_does_not_raise_filtration() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let ts = [r!(0), r!(1, 3), r!(1), r!(3, 2), r!(2)];
    for _ in 0..30 {
        let c = random_complex(&mut rng);
        for d in [1, 2] {
            let slice = grading_slice(&c, d);
            for _ in 0..10 {
                let chain: Vec<LatticePoint> = slice.iter().filter(|_| rng.gen_bool(0.5)).cloned().collect();
                let db = boundary(&c, &chain);
                for &t in &ts {
                    let before = chain_filtration(t, &chain).unwrap();
                    let after = chain_filtration(t, &db).unwrap();
                    if let Some(after) = after {
                        assert!(after <= before.unwrap(), "F_t rose under the differential at t = {t}");
                    }
                }
            }
        }
    }
}

#[test]
fn slice_cardinality_matches_parity() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for _ in 0..30 {
        let c = random_complex(&mut rng);
        for d in -3..=3 {
            let slice = grading_slice(&c, d);
            let expected = c.generators().iter().filter(|g| (d - g.maslov).rem_euclid(2) == 0).count();
            assert_eq!(slice.len(), expected);
            for p in &slice {
                let g = &c.generators()[c.index_of(&p.generator).unwrap()];
                assert_eq!(g.maslov + 2 * p.i, d);
                assert_eq!(p.j - p.i, g.alexander);
            }
        }
    }
}

#[test]
fn upsilon_starts_at_zero_and_slopes_are_bounded() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..25 {
        let c = random_complex(&mut rng);
        let u = upsilon(&c).unwrap();
        assert_eq!(u.eval(Rational::ZERO).unwrap(), Rational::ZERO);
        assert!(u.max_abs_slope() <= c.max_abs_alexander());
    }
}

#[test]
fn right_veering_never_exceeds_slope_bound() {
    for (name, c) in corpus() {
        let u = upsilon(&c).unwrap();
        let bound = u.max_abs_slope();
        for g in bound + 1..bound + 4 {
            assert_eq!(certify_right_veering(&u, g).unwrap().verdict, RVVerdict::Inconclusive, "{name}");
        }
    }
}

#[test]
fn trefoil_certifies_on_unit_interval() {
    let u = upsilon(&common::trefoil()).unwrap();
    let cert = certify_right_veering(&u, 1).unwrap();
    let (a, b) = cert.witness_interval.unwrap();
    assert!(a <= r!(0) && b >= r!(1));
}

#[test]
fn upsilon_mismatch_is_symmetric() {
    let records: Vec<KnotRecord> = corpus().into_iter().take(10).map(|(n, c)| KnotRecord::from_complex(n, c)).collect();
    for a in &records {
        for b in &records {
            let ab = obstruct_concordance(a, b).unwrap().reason == Some(ObstructionReason::UpsilonMismatch);
            let ba = obstruct_concordance(b, a).unwrap().reason == Some(ObstructionReason::UpsilonMismatch);
            assert_eq!(ab, ba, "{} vs {}", a.name, b.name);
        }
    }
}
