//! Finitely generated bifiltered complexes over `F₂[U, U⁻¹]`.
//!
//! A complex is stored as a finite `F₂[U]`-basis: each generator carries an
//! Alexander grading `A` and a Maslov grading `M`, and an arrow
//! `(source, target, k)` records the term `U^k · target` in `∂ source`.
//! The full complex is recovered by formally inverting `U`: the element
//! `U^{-m} x` is the lattice point `[x, m, A(x) + m]`, with Maslov grading
//! `M(x) + 2m`.

use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::validate::validate;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Generator {
    pub name: String,
    pub alexander: i64,
    pub maslov: i64,
}

impl Generator {
    pub fn new(name: impl Into<String>, alexander: i64, maslov: i64) -> Self {
        Generator { name: name.into(), alexander, maslov }
    }
}

/// A differential term named by generator names, as it appears in files.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DiffEntry {
    #[serde(rename = "from")]
    pub source: String,
    #[serde(rename = "to")]
    pub target: String,
    pub upower: i64,
}

impl DiffEntry {
    pub fn new(source: impl Into<String>, target: impl Into<String>, upower: i64) -> Self {
        DiffEntry { source: source.into(), target: target.into(), upower }
    }
}

/// A differential term by generator index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Arrow {
    pub source: usize,
    pub target: usize,
    pub upower: i64,
}

/// The element `U^{-i} x`, drawn at `(i, j)` with `j - i = A(x)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LatticePoint {
    pub generator: String,
    pub i: i64,
    pub j: i64,
}

impl LatticePoint {
    /// The exponent `m` with this point equal to `U^{-m} x`.
    pub fn upow(&self) -> i64 {
        self.i
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "ComplexFile", into = "ComplexFile")]
pub struct BifilteredComplex {
    label: Option<String>,
    ambient_d: i64,
    generators: Vec<Generator>,
    arrows: Vec<Arrow>,
}

impl BifilteredComplex {
    /// Builds a complex from named entries. Only name resolution is checked
    /// here; grading constraints, `∂² = 0` and homology are reported by
    /// [`validate`]. Duplicate names resolve to their first occurrence.
    pub fn new(
        label: Option<String>,
        ambient_d: i64,
        generators: Vec<Generator>,
        entries: &[DiffEntry],
    ) -> Result<Self> {
        let mut index: HashMap<&str, usize> = HashMap::new();
        for (k, g) in generators.iter().enumerate() {
            index.entry(g.name.as_str()).or_insert(k);
        }
        let lookup = |name: &str| index.get(name).copied().ok_or_else(|| Error::UnknownGenerator(name.to_string()));
        let arrows = entries
            .iter()
            .map(|e| Ok(Arrow { source: lookup(&e.source)?, target: lookup(&e.target)?, upower: e.upower }))
            .collect::<Result<Vec<_>>>()?;
        Ok(BifilteredComplex { label, ambient_d, generators, arrows })
    }

    pub fn from_arrows(
        label: Option<String>,
        ambient_d: i64,
        generators: Vec<Generator>,
        arrows: Vec<Arrow>,
    ) -> Result<Self> {
        let n = generators.len();
        if let Some(a) = arrows.iter().find(|a| a.source >= n || a.target >= n) {
            return Err(Error::InvalidParameter(format!("arrow {a:?} indexes past {n} generators")));
        }
        Ok(BifilteredComplex { label, ambient_d, generators, arrows })
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("complex serialization is infallible")
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }

    pub fn ambient_d(&self) -> i64 {
        self.ambient_d
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn entries(&self) -> Vec<DiffEntry> {
        self.arrows
            .iter()
            .map(|a| DiffEntry::new(&self.generators[a.source].name, &self.generators[a.target].name, a.upower))
            .collect()
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.generators.iter().position(|g| g.name == name)
    }

    pub fn max_alexander(&self) -> Option<i64> {
        self.generators.iter().map(|g| g.alexander).max()
    }

    pub fn max_abs_alexander(&self) -> i64 {
        self.generators.iter().map(|g| g.alexander.abs()).max().unwrap_or(0)
    }

    /// Lattice point of generator `k` in homological grading `d`, if the parity allows one.
    pub fn point_in_grading(&self, k: usize, d: i64) -> Option<LatticePoint> {
        let g = &self.generators[k];
        let diff = d - g.maslov;
        (diff.rem_euclid(2) == 0).then(|| {
            let m = diff / 2;
            LatticePoint { generator: g.name.clone(), i: m, j: g.alexander + m }
        })
    }

    /// Arrows with mod-2 multiplicities collapsed and a deterministic order.
    pub(crate) fn normalized_arrows(mut arrows: Vec<Arrow>) -> Vec<Arrow> {
        let mut counts: BTreeMap<Arrow, usize> = BTreeMap::new();
        for a in arrows.drain(..) {
            *counts.entry(a).or_default() += 1;
        }
        counts.into_iter().filter(|(_, c)| c % 2 == 1).map(|(a, _)| a).collect()
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ComplexFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    label: Option<String>,
    ambient_d: i64,
    generators: Vec<Generator>,
    differential: Vec<DiffEntry>,
}

impl TryFrom<ComplexFile> for BifilteredComplex {
    type Error = Error;

    fn try_from(f: ComplexFile) -> Result<Self> {
        BifilteredComplex::new(f.label, f.ambient_d, f.generators, &f.differential)
    }
}

impl From<BifilteredComplex> for ComplexFile {
    fn from(c: BifilteredComplex) -> Self {
        let differential = c.entries();
        ComplexFile { label: c.label, ambient_d: c.ambient_d, generators: c.generators, differential }
    }
}

/// One lattice point per generator whose Maslov grading has the parity of `d`.
pub fn grading_slice(complex: &BifilteredComplex, d: i64) -> Vec<LatticePoint> {
    (0..complex.len()).filter_map(|k| complex.point_in_grading(k, d)).collect()
}

fn require_valid(c: &BifilteredComplex, what: &str) -> Result<()> {
    let report = validate(c);
    if report.pass {
        Ok(())
    } else {
        Err(Error::NonAdmissible(format!("{what}: {}", report.summary())))
    }
}

/// Tensor product with the Leibniz differential. Generator `(x, y)` is named
/// `x*y` and generators are ordered lexicographically by `(index1, index2)`.
pub fn tensor(c1: &BifilteredComplex, c2: &BifilteredComplex) -> Result<BifilteredComplex> {
    require_valid(c1, "left tensor factor")?;
    require_valid(c2, "right tensor factor")?;
    let n2 = c2.len();
    let idx = |a: usize, b: usize| a * n2 + b;

    let mut generators = Vec::with_capacity(c1.len() * n2);
    for g1 in c1.generators() {
        for g2 in c2.generators() {
            generators.push(Generator::new(
                format!("{}*{}", g1.name, g2.name),
                g1.alexander + g2.alexander,
                g1.maslov + g2.maslov,
            ));
        }
    }
    let mut seen = std::collections::HashSet::new();
    if let Some(g) = generators.iter().find(|g| !seen.insert(g.name.as_str())) {
        return Err(Error::InvalidParameter(format!("tensor generator name `{}` is ambiguous", g.name)));
    }

    let mut arrows = Vec::new();
    for a in c1.arrows() {
        for b in 0..n2 {
            arrows.push(Arrow { source: idx(a.source, b), target: idx(a.target, b), upower: a.upower });
        }
    }
    for a in 0..c1.len() {
        for b in c2.arrows() {
            arrows.push(Arrow { source: idx(a, b.source), target: idx(a, b.target), upower: b.upower });
        }
    }
    let label = match (c1.label(), c2.label()) {
        (Some(a), Some(b)) => Some(format!("{a} # {b}")),
        _ => None,
    };
    BifilteredComplex::from_arrows(
        label,
        c1.ambient_d + c2.ambient_d,
        generators,
        BifilteredComplex::normalized_arrows(arrows),
    )
}

/// The dual complex: gradings negate and every arrow reverses, keeping its U-power.
pub fn dual(c: &BifilteredComplex) -> Result<BifilteredComplex> {
    require_valid(c, "dual input")?;
    let generators = c.generators().iter().map(|g| Generator::new(g.name.clone(), -g.alexander, -g.maslov)).collect();
    let arrows = c.arrows().iter().map(|a| Arrow { source: a.target, target: a.source, upower: a.upower }).collect();
    let label = c.label().map(|l| match l.strip_prefix("mirror of ") {
        Some(orig) => orig.to_string(),
        None => format!("mirror of {l}"),
    });
    BifilteredComplex::from_arrows(label, -c.ambient_d, generators, arrows)
}

/// The `i = 0` column: the U-power-zero part of the differential, filtered by Alexander grading.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerticalComplex {
    generators: Vec<Generator>,
    arrows: Vec<Arrow>,
}

impl VerticalComplex {
    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    /// Generators spanning `F_j`, the subspace of Alexander grading at most `j`.
    pub fn filtration_level(&self, j: i64) -> Vec<usize> {
        (0..self.generators.len()).filter(|&k| self.generators[k].alexander <= j).collect()
    }
}

pub fn vertical_complex(c: &BifilteredComplex) -> VerticalComplex {
    VerticalComplex {
        generators: c.generators().to_vec(),
        arrows: c.arrows().iter().copied().filter(|a| a.upower == 0).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn trefoil() -> BifilteredComplex {
        BifilteredComplex::new(
            Some("trefoil".into()),
            0,
            vec![Generator::new("a", 1, 0), Generator::new("b", 0, -1), Generator::new("c", -1, -2)],
            &[DiffEntry::new("b", "a", 1), DiffEntry::new("b", "c", 0)],
        )
        .unwrap()
    }

    fn unknot() -> BifilteredComplex {
        BifilteredComplex::new(Some("unknot".into()), 0, vec![Generator::new("x", 0, 0)], &[]).unwrap()
    }

    #[test]
    fn json_round_trip_and_key_names() {
        let c = trefoil();
        let text = c.to_json();
        assert!(text.contains("\"from\": \"b\""));
        assert!(text.contains("\"ambient_d\": 0"));
        assert_eq!(BifilteredComplex::from_json(&text).unwrap(), c);
    }

    #[test]
    fn parser_rejects_unknown_keys_and_names() {
        let extra = r#"{"ambient_d":0,"generators":[],"differential":[],"colour":"red"}"#;
        assert!(matches!(BifilteredComplex::from_json(extra), Err(Error::Parse(_))));
        let bad_gen = r#"{"ambient_d":0,"generators":[{"name":"x","alexander":0,"maslov":0,"w":1}],"differential":[]}"#;
        assert!(BifilteredComplex::from_json(bad_gen).is_err());
        let dangling = r#"{"ambient_d":0,"generators":[{"name":"x","alexander":0,"maslov":0}],"differential":[{"from":"x","to":"y","upower":0}]}"#;
        let err = BifilteredComplex::from_json(dangling).unwrap_err();
        assert!(err.to_string().contains("unknown generator"), "{err}");
    }

    #[test]
    fn trefoil_grading_zero_slice() {
        let slice = grading_slice(&trefoil(), 0);
        assert_eq!(
            slice,
            vec![
                LatticePoint { generator: "a".into(), i: 0, j: 1 },
                LatticePoint { generator: "c".into(), i: 1, j: 0 },
            ]
        );
    }

    #[test]
    fn unknot_slices_by_parity() {
        assert_eq!(grading_slice(&unknot(), 0), vec![LatticePoint { generator: "x".into(), i: 0, j: 0 }]);
        assert!(grading_slice(&unknot(), 1).is_empty());
        assert_eq!(grading_slice(&unknot(), -4)[0].upow(), -2);
    }

    #[test]
    fn tensor_with_unknot_is_identity_up_to_names() {
        let k = trefoil();
        let t = tensor(&unknot(), &k).unwrap();
        assert_eq!(t.len(), k.len());
        for (a, b) in t.generators().iter().zip(k.generators()) {
            assert_eq!((a.alexander, a.maslov), (b.alexander, b.maslov));
            assert_eq!(a.name, format!("x*{}", b.name));
        }
        let mut lhs = t.arrows().to_vec();
        let mut rhs = k.arrows().to_vec();
        lhs.sort();
        rhs.sort();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn trefoil_squared_has_nine_generators() {
        let t = tensor(&trefoil(), &trefoil()).unwrap();
        assert_eq!(t.len(), 9);
        assert_eq!(t.max_alexander(), Some(2));
        assert!(validate(&t).pass);
        assert_eq!(t.generators()[1].name, "a*b");
    }

    #[test]
    fn dual_of_trefoil() {
        let d = dual(&trefoil()).unwrap();
        let grades: Vec<(i64, i64)> = d.generators().iter().map(|g| (g.alexander, g.maslov)).collect();
        assert_eq!(grades, vec![(-1, 0), (0, 1), (1, 2)]);
        assert_eq!(d.entries(), vec![DiffEntry::new("a", "b", 1), DiffEntry::new("c", "b", 0)]);
        assert!(validate(&d).pass);
        assert_eq!(dual(&d).unwrap(), trefoil());
        assert_eq!(dual(&unknot()).unwrap().generators(), unknot().generators());
    }

    #[test]
    fn vertical_part_of_trefoil() {
        let v = vertical_complex(&trefoil());
        assert_eq!(v.arrows(), &[Arrow { source: 1, target: 2, upower: 0 }]);
        assert_eq!(v.filtration_level(0), vec![1, 2]);
        assert_eq!(vertical_complex(&unknot()).generators(), unknot().generators());
    }

    #[test]
    fn tensor_rejects_invalid_input() {
        let bad = BifilteredComplex::new(
            None,
            0,
            vec![Generator::new("a", 0, 0), Generator::new("b", 0, 0)],
            &[DiffEntry::new("b", "a", 1)],
        )
        .unwrap();
        assert!(matches!(tensor(&bad, &unknot()), Err(Error::NonAdmissible(_))));
        assert!(matches!(dual(&bad), Err(Error::NonAdmissible(_))));
    }
}
