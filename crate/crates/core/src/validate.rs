//! Structural validation and the homology check in the ambient grading.

use std::collections::{BTreeMap, HashSet};
use std::fmt;

use serde::Serialize;

use crate::complex::BifilteredComplex;
use crate::error::{Error, Result};
use crate::f2::{self, F2Vec, PivotBasis};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ViolationKind {
    DuplicateName,
    NegativeUpower,
    MaslovConstraint,
    AlexanderConstraint,
    DifferentialSquare,
    HomologyRank,
}

impl fmt::Display for ViolationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            ViolationKind::DuplicateName => "duplicate name",
            ViolationKind::NegativeUpower => "negative U-power",
            ViolationKind::MaslovConstraint => "Maslov constraint",
            ViolationKind::AlexanderConstraint => "Alexander constraint",
            ViolationKind::DifferentialSquare => "differential squares to nonzero",
            ViolationKind::HomologyRank => "homology rank",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub kind: ViolationKind,
    pub message: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub pass: bool,
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn has(&self, kind: ViolationKind) -> bool {
        self.violations.iter().any(|v| v.kind == kind)
    }

    pub fn summary(&self) -> String {
        if self.pass {
            return "pass".into();
        }
        self.violations.iter().map(|v| format!("{}: {}", v.kind, v.message)).collect::<Vec<_>>().join("; ")
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomologyReport {
    pub grading: i64,
    pub cycles: usize,
    pub boundaries: usize,
    pub dimension: usize,
    pub admissible: bool,
}

impl HomologyReport {
    pub fn ensure_admissible(self) -> Result<Self> {
        if self.admissible {
            Ok(self)
        } else {
            Err(Error::NonAdmissible(format!(
                "homology in grading {} has dimension {}, expected 1",
                self.grading, self.dimension
            )))
        }
    }
}

pub fn validate(c: &BifilteredComplex) -> ValidationReport {
    let mut violations = Vec::new();
    let gens = c.generators();

    let mut seen = HashSet::new();
    for g in gens {
        if !seen.insert(g.name.as_str()) {
            violations.push(Violation {
                kind: ViolationKind::DuplicateName,
                message: format!("`{}` appears more than once", g.name),
            });
        }
    }

    for a in c.arrows() {
        let (s, t) = (&gens[a.source], &gens[a.target]);
        let label = format!("{} -> U^{} {}", s.name, a.upower, t.name);
        if a.upower < 0 {
            violations.push(Violation { kind: ViolationKind::NegativeUpower, message: label.clone() });
        }
        if t.maslov != s.maslov - 1 + 2 * a.upower {
            violations.push(Violation {
                kind: ViolationKind::MaslovConstraint,
                message: format!(
                    "{label}: M(target) = {} but M(source) - 1 + 2k = {}",
                    t.maslov,
                    s.maslov - 1 + 2 * a.upower
                ),
            });
        }
        if s.alexander - t.alexander + a.upower < 0 {
            violations.push(Violation {
                kind: ViolationKind::AlexanderConstraint,
                message: format!("{label}: arrow points up in the Alexander filtration"),
            });
        }
    }

    violations.extend(square_violations(c));

    if violations.is_empty() {
        let h = verify_homology(c);
        if !h.admissible {
            violations.push(Violation {
                kind: ViolationKind::HomologyRank,
                message: format!("dim H_{} = {}, expected 1", h.grading, h.dimension),
            });
        }
    }

    ValidationReport { pass: violations.is_empty(), violations }
}

/// `∂² = 0` over F₂[U]: two-step paths are counted per `(source, target, total U-power)`.
fn square_violations(c: &BifilteredComplex) -> Vec<Violation> {
    let n = c.len();
    let mut out_arrows: Vec<Vec<(usize, i64)>> = vec![Vec::new(); n];
    for a in c.arrows() {
        out_arrows[a.source].push((a.target, a.upower));
    }
    let gens = c.generators();
    let mut violations = Vec::new();
    for x in 0..n {
        let mut counts: BTreeMap<(usize, i64), usize> = BTreeMap::new();
        for &(y, k1) in &out_arrows[x] {
            for &(z, k2) in &out_arrows[y] {
                *counts.entry((z, k1 + k2)).or_default() += 1;
            }
        }
        for ((z, k), count) in counts {
            if count % 2 == 1 {
                violations.push(Violation {
                    kind: ViolationKind::DifferentialSquare,
                    message: format!("coefficient of U^{k} {} in ∂²({}) is {count}", gens[z].name, gens[x].name),
                });
            }
        }
    }
    violations
}

/// Dimension of homology in grading `ambient_d`. Assumes the structural checks pass.
pub fn verify_homology(c: &BifilteredComplex) -> HomologyReport {
    let d = c.ambient_d();
    let slices = GradedSlices::new(c, d);
    let cycles = f2::kernel(&slices.down).len();
    let boundaries = f2::column_rank(&slices.up);
    let dimension = cycles - boundaries;
    HomologyReport { grading: d, cycles, boundaries, dimension, admissible: dimension == 1 }
}

/// A lattice point inside one grading slice, by generator index.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct SlicePoint {
    pub generator: usize,
    pub i: i64,
    pub j: i64,
}

/// The grading-`d` slice together with its boundary data: `down[k]` is `∂` of
/// point `k` expressed in the grading-`(d-1)` slice, and `up` holds `∂` of each
/// grading-`(d+1)` point expressed in the grading-`d` slice.
#[derive(Clone, Debug)]
pub(crate) struct GradedSlices {
    pub points: Vec<SlicePoint>,
    pub down: Vec<F2Vec>,
    pub up: Vec<F2Vec>,
}

impl GradedSlices {
    pub fn new(c: &BifilteredComplex, d: i64) -> Self {
        let (points, pos) = slice(c, d);
        let (below, below_pos) = slice(c, d - 1);
        let (above, _) = slice(c, d + 1);
        let down = points.iter().map(|p| boundary(c, p, &below_pos, below.len())).collect();
        let up = above.iter().map(|p| boundary(c, p, &pos, points.len())).collect();
        GradedSlices { points, down, up }
    }

    pub fn boundary_basis(&self) -> PivotBasis {
        let mut b = PivotBasis::new(self.points.len());
        for v in &self.up {
            b.insert(v.clone());
        }
        b
    }
}

fn slice(c: &BifilteredComplex, d: i64) -> (Vec<SlicePoint>, Vec<Option<usize>>) {
    let mut points = Vec::new();
    let mut pos = vec![None; c.len()];
    for (k, g) in c.generators().iter().enumerate() {
        let diff = d - g.maslov;
        if diff.rem_euclid(2) == 0 {
            let m = diff / 2;
            pos[k] = Some(points.len());
            points.push(SlicePoint { generator: k, i: m, j: g.alexander + m });
        }
    }
    (points, pos)
}

fn boundary(c: &BifilteredComplex, p: &SlicePoint, target_pos: &[Option<usize>], target_len: usize) -> F2Vec {
    let mut v = F2Vec::zeros(target_len);
    for a in c.arrows().iter().filter(|a| a.source == p.generator) {
        // U^k z inside ∂(U^{-m} y) is U^{-(m-k)} z; the Maslov constraint puts it in the target slice.
        if let Some(q) = target_pos[a.target] {
            v.flip(q);
        }
    }
    v
}
