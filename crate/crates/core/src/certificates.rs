//! Predicates over `Υ` and knot records.
//!
//! Monodromy data is never computed here; it is read from [`KnotRecord`] as supplied.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::knots::{KnotRecord, RightVeering};
use crate::pl::PLFunction;
use crate::rational::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RVVerdict {
    RightVeeringCertified,
    Inconclusive,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RVCertificate {
    pub verdict: RVVerdict,
    /// Open interval inside `[0, 1)` on which the slope is exactly `-genus_used`.
    pub witness_interval: Option<(Rational, Rational)>,
    pub genus_used: i64,
}

/// Open interval `(a, min(b, limit))` of the first segment starting before
/// `limit` whose slope is `slope`.
fn slope_witness(f: &PLFunction, slope: i64, limit: Rational) -> Option<(Rational, Rational)> {
    f.segments().filter(|s| s.start < limit && s.slope == slope).map(|s| (s.start, s.end.min(limit))).next()
}

/// Certifies right-veering monodromy when `Υ` has slope exactly `-genus` on
/// some open segment meeting `[0, 1)`. Breakpoints never count, and a failed
/// search is reported as inconclusive rather than negative.
pub fn certify_right_veering(upsilon: &PLFunction, genus: i64) -> Result<RVCertificate> {
    if genus < 0 {
        return Err(Error::InvalidParameter(format!("genus must be non-negative, got {genus}")));
    }
    let witness_interval = slope_witness(upsilon, -genus, Rational::ONE);
    let verdict = if witness_interval.is_some() { RVVerdict::RightVeeringCertified } else { RVVerdict::Inconclusive };
    Ok(RVCertificate { verdict, witness_interval, genus_used: genus })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Tightness {
    Tight,
    Overtwisted,
}

/// For a fibered knot in `S³`: tight exactly when `τ` equals the genus.
pub fn classify_tightness(tau: i64, genus: i64) -> Tightness {
    if tau == genus {
        Tightness::Tight
    } else {
        Tightness::Overtwisted
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ObstructionVerdict {
    Obstructed,
    NoObstructionFound,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ObstructionReason {
    #[serde(rename = "upsilon_mismatch")]
    UpsilonMismatch,
    #[serde(rename = "genus_mismatch_lemma72")]
    GenusMismatch,
    #[serde(rename = "rv_mismatch_prop14")]
    RightVeeringMismatch,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ObstructionWitness {
    UpsilonDiffers {
        t: Rational,
        k0_value: Rational,
        k1_value: Rational,
    },
    GenusDiffers {
        k0_genus: i64,
        k1_genus: i64,
        k0_interval: (Rational, Rational),
        k1_interval: (Rational, Rational),
    },
    RightVeeringConflict {
        /// The record whose `Υ` certifies right-veering.
        certified: String,
        /// The fibered record of equal genus asserted not right-veering.
        non_right_veering: String,
        genus: i64,
        interval: (Rational, Rational),
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConcordanceVerdict {
    pub verdict: ObstructionVerdict,
    pub reason: Option<ObstructionReason>,
    /// Names of the implications that fired.
    pub implications: Vec<String>,
    pub witness: Option<ObstructionWitness>,
}

impl ConcordanceVerdict {
    fn none() -> Self {
        ConcordanceVerdict {
            verdict: ObstructionVerdict::NoObstructionFound,
            reason: None,
            implications: Vec::new(),
            witness: None,
        }
    }

    fn obstructed(reason: ObstructionReason, implication: &str, witness: ObstructionWitness) -> Self {
        ConcordanceVerdict {
            verdict: ObstructionVerdict::Obstructed,
            reason: Some(reason),
            implications: vec![implication.to_string()],
            witness: Some(witness),
        }
    }

    pub fn is_obstructed(&self) -> bool {
        self.verdict == ObstructionVerdict::Obstructed
    }
}

/// Declared genus, falling back to the top Alexander grading of the complex.
pub fn record_genus(k: &KnotRecord) -> Option<i64> {
    k.genus.map(i64::from).or_else(|| k.complex.as_ref().and_then(|c| c.max_alexander()))
}

/// Tries, in order, `Υ` invariance, genus equality for fibered knots whose
/// `Υ` reaches slope `-g` on `[0, 1)`, and the right-veering obstruction
/// against a fibered knot of equal genus asserted not right-veering.
pub fn obstruct_concordance(k0: &KnotRecord, k1: &KnotRecord) -> Result<ConcordanceVerdict> {
    let u0 = k0.upsilon()?;
    let u1 = k1.upsilon()?;
    if let Some(t) = u0.first_difference(&u1) {
        return Ok(ConcordanceVerdict::obstructed(
            ObstructionReason::UpsilonMismatch,
            "upsilon_concordance_invariance",
            ObstructionWitness::UpsilonDiffers { t, k0_value: u0.eval(t)?, k1_value: u1.eval(t)? },
        ));
    }

    let g0 = record_genus(k0);
    let g1 = record_genus(k1);
    let rv_witness = |u: &PLFunction, g: Option<i64>| g.and_then(|g| slope_witness(u, -g, Rational::ONE));
    let w0 = rv_witness(&u0, g0);
    let w1 = rv_witness(&u1, g1);

    if let (true, true, Some(a), Some(b), Some(i0), Some(i1)) = (k0.is_fibered(), k1.is_fibered(), g0, g1, w0, w1) {
        if a != b {
            return Ok(ConcordanceVerdict::obstructed(
                ObstructionReason::GenusMismatch,
                "concordant_fibered_knots_share_genus",
                ObstructionWitness::GenusDiffers { k0_genus: a, k1_genus: b, k0_interval: i0, k1_interval: i1 },
            ));
        }
    }

    let conflict = |cert: &KnotRecord,
                    g: Option<i64>,
                    w: Option<(Rational, Rational)>,
                    other: &KnotRecord,
                    g_other: Option<i64>| {
        let (g, interval) = (g?, w?);
        (other.is_fibered() && g_other == Some(g) && other.monodromy_right_veering == RightVeering::No).then(|| {
            ObstructionWitness::RightVeeringConflict {
                certified: cert.name.clone(),
                non_right_veering: other.name.clone(),
                genus: g,
                interval,
            }
        })
    };
    if let Some(w) = conflict(k0, g0, w0, k1, g1).or_else(|| conflict(k1, g1, w1, k0, g0)) {
        return Ok(ConcordanceVerdict::obstructed(
            ObstructionReason::RightVeeringMismatch,
            "slope_certified_knot_not_concordant_to_non_right_veering_fibered_knot",
            w,
        ));
    }
    Ok(ConcordanceVerdict::none())
}

/// A slope hypothesis `Υ' = -g` checked on a named parameter interval.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SlopeHypothesis {
    pub interval: String,
    pub holds: bool,
    pub witness_interval: Option<(Rational, Rational)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RibbonReport {
    pub knot: String,
    pub genus: i64,
    pub fibered: bool,
    /// `Υ' = -g` somewhere on `[0, 2]`; drives both minimality statements.
    pub minimality_hypothesis: SlopeHypothesis,
    /// `Υ' = -g` somewhere on `[0, 1]`; the form used for ribbon uniqueness.
    pub uniqueness_hypothesis: SlopeHypothesis,
    /// Minimal for homotopy ribbon concordance among fibered knots.
    pub knot_minimal: bool,
    pub mirror_minimal: bool,
    /// `K # -K'` ribbon forces `K = K'` for any partner `K'` meeting the same hypothesis.
    pub ribbon_uniqueness_applies: bool,
    pub implications: Vec<String>,
}

pub fn ribbon_minimality_report(k: &KnotRecord) -> Result<RibbonReport> {
    let u = k.upsilon()?;
    let genus = record_genus(k).ok_or_else(|| Error::MissingData(format!("record `{}` has no genus", k.name)))?;
    let fibered = k.is_fibered();

    let hypothesis = |interval: &str, limit: Rational| {
        let witness_interval = slope_witness(&u, -genus, limit);
        SlopeHypothesis { interval: interval.into(), holds: witness_interval.is_some(), witness_interval }
    };
    let minimality = hypothesis("[0,2]", Rational::TWO);
    let uniqueness = hypothesis("[0,1]", Rational::ONE);

    let minimal = fibered && minimality.holds;
    let unique = fibered && uniqueness.holds;
    let mut implications = Vec::new();
    if minimal {
        implications.push("homotopy_ribbon_minimal_among_fibered".to_string());
        implications.push("mirror_homotopy_ribbon_minimal_among_fibered".to_string());
    }
    if unique {
        implications.push("ribbon_cancellation_forces_equality".to_string());
    }
    Ok(RibbonReport {
        knot: k.name.clone(),
        genus,
        fibered,
        minimality_hypothesis: minimality,
        uniqueness_hypothesis: uniqueness,
        knot_minimal: minimal,
        mirror_minimal: minimal,
        ribbon_uniqueness_applies: unique,
        implications,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::knots::{builtin, chen_cable_upsilon, eight_twenty_cable};
    use crate::r;

    fn record(name: &str) -> KnotRecord {
        builtin(name).unwrap().unwrap()
    }

    #[test]
    fn chen_cable_certifies() {
        let c = certify_right_veering(&chen_cable_upsilon(8).unwrap(), 10).unwrap();
        assert_eq!(c.verdict, RVVerdict::RightVeeringCertified);
        assert_eq!(c.witness_interval, Some((r!(2, 3), r!(1))));
        assert_eq!(c.genus_used, 10);
    }

    #[test]
    fn inconclusive_cases() {
        let c = certify_right_veering(&PLFunction::zero(), 1).unwrap();
        assert_eq!(c.verdict, RVVerdict::Inconclusive);
        assert!(c.witness_interval.is_none());
        let left = record("trefoil-left").upsilon().unwrap();
        assert_eq!(certify_right_veering(&left, 1).unwrap().verdict, RVVerdict::Inconclusive);
        assert!(certify_right_veering(&PLFunction::zero(), -1).is_err());
    }

    #[test]
    fn slope_only_on_right_half_is_not_used() {
        // slope -1 only on (1, 2)
        let f = PLFunction::from_points(vec![r!(0), r!(1), r!(2)], vec![r!(0), r!(1), r!(0)]).unwrap();
        assert_eq!(certify_right_veering(&f, 1).unwrap().verdict, RVVerdict::Inconclusive);
    }

    #[test]
    fn trefoil_certificates() {
        let t = record("trefoil");
        let c = certify_right_veering(&t.upsilon().unwrap(), 1).unwrap();
        assert_eq!(c.witness_interval, Some((r!(0), r!(1))));
        assert_eq!(classify_tightness(1, 1), Tightness::Tight);
        assert_eq!(classify_tightness(0, 0), Tightness::Tight);
        assert_eq!(classify_tightness(7, 10), Tightness::Overtwisted);
    }

    #[test]
    fn concordance_examples() {
        let v = obstruct_concordance(&record("trefoil"), &record("unknot")).unwrap();
        assert_eq!(v.reason, Some(ObstructionReason::UpsilonMismatch));
        let t = record("trefoil");
        assert_eq!(obstruct_concordance(&t, &t).unwrap(), ConcordanceVerdict::none());

        let chen = record("chen-cable:8");
        let partner = KnotRecord::from_upsilon("partner", chen_cable_upsilon(8).unwrap())
            .with_genus(10)
            .with_fibered(true)
            .with_right_veering(RightVeering::No);
        let v = obstruct_concordance(&chen, &partner).unwrap();
        assert_eq!(v.reason, Some(ObstructionReason::RightVeeringMismatch));
        let v = obstruct_concordance(&partner, &chen).unwrap();
        assert_eq!(v.reason, Some(ObstructionReason::RightVeeringMismatch));
        let json = serde_json::to_value(&v).unwrap();
        assert_eq!(json["reason"], "rv_mismatch_prop14");
        assert_eq!(json["verdict"], "obstructed");
    }

    #[test]
    fn genus_mismatch_branch() {
        let u = chen_cable_upsilon(8).unwrap();
        let a = KnotRecord::from_upsilon("a", u.clone()).with_genus(10).with_fibered(true);
        let b = KnotRecord::from_upsilon("b", u).with_genus(7).with_fibered(true);
        let v = obstruct_concordance(&a, &b).unwrap();
        assert_eq!(v.reason, Some(ObstructionReason::GenusMismatch));
        match v.witness {
            Some(ObstructionWitness::GenusDiffers { k0_interval, k1_interval, .. }) => {
                assert_eq!(k0_interval, (r!(2, 3), r!(1)));
                assert_eq!(k1_interval, (r!(0), r!(2, 3)));
            }
            other => panic!("unexpected witness {other:?}"),
        }
    }

    #[test]
    fn slice_cable_is_not_obstructed_from_unknot() {
        let v = obstruct_concordance(&eight_twenty_cable(2).unwrap(), &record("unknot")).unwrap();
        assert!(!v.is_obstructed());
    }

    #[test]
    fn missing_upsilon_is_an_error() {
        let bare = KnotRecord { complex: None, upsilon_override: None, ..record("unknot") };
        assert!(matches!(obstruct_concordance(&bare, &record("unknot")), Err(Error::MissingData(_))));
    }

    #[test]
    fn ribbon_reports() {
        let t = ribbon_minimality_report(&record("trefoil")).unwrap();
        assert!(t.knot_minimal && t.mirror_minimal && t.ribbon_uniqueness_applies);
        let left = ribbon_minimality_report(&record("trefoil-left")).unwrap();
        // slope -1 appears on [1, 2] only
        assert!(left.knot_minimal && !left.ribbon_uniqueness_applies);
        assert_eq!(left.minimality_hypothesis.witness_interval, Some((r!(1), r!(2))));
        let f8 = ribbon_minimality_report(&record("figure8")).unwrap();
        assert!(!f8.minimality_hypothesis.holds && !f8.knot_minimal);
        let chen = ribbon_minimality_report(&record("chen-cable:8")).unwrap();
        assert_eq!(chen.minimality_hypothesis.witness_interval, Some((r!(2, 3), r!(1))));
    }
}
