#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::Rng;
use upsilon_core::complex::{dual, tensor, BifilteredComplex, DiffEntry, Generator};
use upsilon_core::knots::{figure_eight_complex, staircase, torus_knot_complex, unknot};

pub fn trefoil() -> BifilteredComplex {
    torus_knot_complex(2, 3).unwrap()
}

/// Named complexes exercised by the property checks.
pub fn corpus() -> Vec<(String, BifilteredComplex)> {
    let t23 = trefoil();
    let f8 = figure_eight_complex();
    let mut out: Vec<(String, BifilteredComplex)> = vec![
        ("unknot".into(), unknot()),
        ("T(2,3)".into(), t23.clone()),
        ("figure8".into(), f8.clone()),
        ("T(2,5)".into(), torus_knot_complex(2, 5).unwrap()),
        ("T(2,7)".into(), torus_knot_complex(2, 7).unwrap()),
        ("T(3,4)".into(), torus_knot_complex(3, 4).unwrap()),
        ("T(3,5)".into(), torus_knot_complex(3, 5).unwrap()),
        ("T(3,7)".into(), torus_knot_complex(3, 7).unwrap()),
        ("T(4,5)".into(), torus_knot_complex(4, 5).unwrap()),
        ("staircase:2,1,1,2".into(), staircase(&[2, 1, 1, 2]).unwrap()),
        ("staircase:1,3,3,1".into(), staircase(&[1, 3, 3, 1]).unwrap()),
        ("T(2,3)#T(2,3)".into(), tensor(&t23, &t23).unwrap()),
        ("T(2,3)#figure8".into(), tensor(&t23, &f8).unwrap()),
        ("T(2,5)#-T(2,3)".into(), tensor(&torus_knot_complex(2, 5).unwrap(), &dual(&t23).unwrap()).unwrap()),
        (
            "T(3,4)#-T(2,5)".into(),
            tensor(&torus_knot_complex(3, 4).unwrap(), &dual(&torus_knot_complex(2, 5).unwrap()).unwrap()).unwrap(),
        ),
        ("figure8#figure8".into(), tensor(&f8, &f8).unwrap()),
        ("T(2,3)#T(2,3)#-figure8".into(), tensor(&tensor(&t23, &t23).unwrap(), &dual(&f8).unwrap()).unwrap()),
    ];
    let mirrors: Vec<(String, BifilteredComplex)> =
        out.iter().map(|(n, c)| (format!("-({n})"), dual(c).unwrap())).collect();
    out.extend(mirrors);
    out
}

/// Symmetric staircase with at most four steps, each of length 1..=3.
pub fn random_staircase(rng: &mut impl Rng) -> BifilteredComplex {
    let a = rng.gen_range(1..=3);
    let steps = if rng.gen_bool(0.5) {
        vec![a, a]
    } else {
        let b = rng.gen_range(1..=3);
        vec![a, b, b, a]
    };
    staircase(&steps).unwrap()
}

/// A staircase or the figure-eight, possibly dualized.
pub fn random_summand(rng: &mut impl Rng) -> BifilteredComplex {
    let base = if rng.gen_bool(0.25) { figure_eight_complex() } else { random_staircase(rng) };
    if rng.gen_bool(0.5) {
        dual(&base).unwrap()
    } else {
        base
    }
}

/// An acyclic square `a → U^n b, a → c, b → d, c → U^n d`, shifted in both gradings.
pub fn square_box(n: i64, a_shift: i64, m_shift: i64) -> BifilteredComplex {
    let g = |name: &str, a: i64, m: i64| Generator::new(name, a + a_shift, m + m_shift);
    BifilteredComplex::new(
        None,
        0,
        vec![g("a", 0, 0), g("b", n, 2 * n - 1), g("c", -n, -1), g("d", 0, 2 * n - 2)],
        &[
            DiffEntry::new("a", "b", n),
            DiffEntry::new("a", "c", 0),
            DiffEntry::new("b", "d", 0),
            DiffEntry::new("c", "d", n),
        ],
    )
    .unwrap()
}

/// Disjoint union of two complexes, prefixing generator names to keep them distinct.
pub fn direct_sum(c1: &BifilteredComplex, c2: &BifilteredComplex, prefix: &str) -> BifilteredComplex {
    let rename = |n: &str| format!("{prefix}{n}");
    let mut generators = c1.generators().to_vec();
    generators.extend(c2.generators().iter().map(|g| Generator::new(rename(&g.name), g.alexander, g.maslov)));
    let mut entries = c1.entries();
    entries.extend(c2.entries().into_iter().map(|e| DiffEntry::new(rename(&e.source), rename(&e.target), e.upower)));
    BifilteredComplex::new(None, c1.ambient_d(), generators, &entries).unwrap()
}

/// Tensor of one or two random summands plus up to two shifted boxes.
pub fn random_complex(rng: &mut impl Rng) -> BifilteredComplex {
    let mut c = random_summand(rng);
    if rng.gen_bool(0.5) {
        c = tensor(&c, &random_summand(rng)).unwrap();
    }
    let boxes = [0usize, 1, 2].choose(rng).copied().unwrap();
    for k in 0..boxes {
        let b = square_box(rng.gen_range(1..=2), rng.gen_range(-2..=2), rng.gen_range(-2..=2));
        c = direct_sum(&c, &b, &format!("box{k}."));
    }
    c
}
