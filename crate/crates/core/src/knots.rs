//! Knot models and Alexander polynomial utilities. Also defines the
//! [`KnotRecord`] bundle consumed by the certificates.

use num_integer::gcd;
use serde::{Deserialize, Serialize};

use crate::complex::{dual, Arrow, BifilteredComplex, Generator};
use crate::engine::upsilon;
use crate::error::{Error, Result};
use crate::laurent::LaurentPolyZ;
use crate::pl::PLFunction;
use crate::rational::Rational;

pub fn unknot() -> BifilteredComplex {
    BifilteredComplex::from_arrows(Some("unknot".into()), 0, vec![Generator::new("x", 0, 0)], Vec::new())
        .expect("static model")
}

/// Staircase complex with alternating horizontal and vertical steps, starting
/// with a horizontal step from the top generator `x0` at `(0, g)`.
///
/// Generator `y_k` has `∂y_k = U^{h_k} x_{k-1} + x_k`; every `x_k` sits in
/// Maslov grading 0 at its lattice position and every `y_k` in grading 1. The
/// step list must be a palindrome of even length, which makes the model
/// symmetric and puts the top generator at `A = g = Σ h_k`.
pub fn staircase(steps: &[i64]) -> Result<BifilteredComplex> {
    if steps.is_empty() || !steps.len().is_multiple_of(2) {
        return Err(Error::InvalidParameter(format!(
            "staircase needs a nonempty even number of steps, got {}",
            steps.len()
        )));
    }
    if let Some(s) = steps.iter().find(|&&s| s <= 0) {
        return Err(Error::InvalidParameter(format!("staircase steps must be positive, got {s}")));
    }
    if steps.iter().ne(steps.iter().rev()) {
        return Err(Error::InvalidParameter(format!("staircase steps {steps:?} are not symmetric")));
    }
    let genus: i64 = steps.iter().step_by(2).sum();

    // lattice positions (i, j) of x_0, y_1, x_1, …; a point at (i, j) in grading μ
    // is stored as a generator with A = j - i and M = μ - 2i
    let mut generators = vec![Generator::new("x0", genus, 0)];
    let mut arrows = Vec::new();
    let (mut i, mut j) = (0i64, genus);
    for (k, pair) in steps.chunks(2).enumerate() {
        let (h, v) = (pair[0], pair[1]);
        i += h;
        let y = generators.len();
        generators.push(Generator::new(format!("y{}", k + 1), j - i, 1 - 2 * i));
        j -= v;
        let x = generators.len();
        generators.push(Generator::new(format!("x{}", k + 1), j - i, -2 * i));
        arrows.push(Arrow { source: y, target: y - 1, upower: h });
        arrows.push(Arrow { source: y, target: x, upower: 0 });
    }
    let label = format!("staircase:{}", steps.iter().map(i64::to_string).collect::<Vec<_>>().join(","));
    BifilteredComplex::from_arrows(Some(label), 0, generators, arrows)
}

fn check_coprime(p: i64, q: i64) -> Result<()> {
    if p == 0 || q == 0 || gcd(p, q) != 1 {
        return Err(Error::InvalidParameter(format!("torus knot parameters ({p}, {q}) are not coprime")));
    }
    Ok(())
}

/// Symmetrized `(t^{pq} - 1)(t - 1) / ((t^p - 1)(t^q - 1))`; signs of `p`, `q` are ignored.
pub fn torus_knot_alexander(p: i64, q: i64) -> Result<LaurentPolyZ> {
    check_coprime(p, q)?;
    let (p, q) = (p.abs(), q.abs());
    let num = &LaurentPolyZ::t_pow_minus_one(p * q) * &LaurentPolyZ::t_pow_minus_one(1);
    let den = &LaurentPolyZ::t_pow_minus_one(p) * &LaurentPolyZ::t_pow_minus_one(q);
    num.div_exact(&den)?.symmetrize()
}

/// Staircase steps read off the gaps between consecutive exponents of an
/// Alexander polynomial whose nonzero coefficients alternate `+1, -1, …, +1`.
pub fn staircase_steps(delta: &LaurentPolyZ) -> Result<Vec<i64>> {
    let terms: Vec<(i64, i64)> = delta.terms().rev().collect();
    for (k, &(e, c)) in terms.iter().enumerate() {
        let expected = if k % 2 == 0 { 1 } else { -1 };
        if c != expected {
            return Err(Error::InvalidParameter(format!("coefficient {c} of t^{e} breaks the staircase pattern")));
        }
    }
    Ok(terms.windows(2).map(|w| w[0].0 - w[1].0).collect())
}

/// Staircase model of the positive torus knot `T(p, q)`.
pub fn torus_knot_complex(p: i64, q: i64) -> Result<BifilteredComplex> {
    if p < 2 || q < 2 {
        return Err(Error::InvalidParameter(format!("torus_knot_complex needs p, q >= 2, got ({p}, {q})")));
    }
    let delta = torus_knot_alexander(p, q)?;
    Ok(staircase(&staircase_steps(&delta)?)?.with_label(format!("T({p},{q})")))
}

/// Unit generator `e` plus one acyclic 1×1 box.
pub fn figure_eight_complex() -> BifilteredComplex {
    let generators = vec![
        Generator::new("e", 0, 0),
        Generator::new("a", 0, 0),
        Generator::new("b", 1, 1),
        Generator::new("c", -1, -1),
        Generator::new("d", 0, 0),
    ];
    let arrows = vec![
        Arrow { source: 1, target: 2, upower: 1 },
        Arrow { source: 1, target: 3, upower: 0 },
        Arrow { source: 2, target: 4, upower: 0 },
        Arrow { source: 3, target: 4, upower: 1 },
    ];
    BifilteredComplex::from_arrows(Some("figure8".into()), 0, generators, arrows).expect("static model")
}

/// `Δ_K(t^p) · Δ_{T(p,q)}(t)`, symmetrized.
pub fn cable_alexander(delta_k: &LaurentPolyZ, p: i64, q: i64) -> Result<LaurentPolyZ> {
    if p < 1 {
        return Err(Error::InvalidParameter(format!("cable parameter p must be positive, got {p}")));
    }
    if !delta_k.is_symmetric() {
        return Err(Error::InvalidParameter(format!("companion polynomial {delta_k} is not symmetric")));
    }
    (&delta_k.substitute_power(p) * &torus_knot_alexander(p, q)?).symmetrize()
}

/// Top exponent of a symmetric Alexander polynomial; equals the genus for fibered knots.
pub fn fibered_genus(delta: &LaurentPolyZ) -> Result<i64> {
    if delta.is_zero() {
        return Err(Error::InvalidParameter("the zero polynomial has no degree".into()));
    }
    Ok(delta.symmetrize()?.max_exp().expect("nonzero"))
}

/// Closed form of `Υ` for the `(2, 2n+1)`-cable of `T(2,-3)`: `-(n-1)t` on
/// `[0, 2/3]`, `2 - (n+2)t` on `[2/3, 1]`, mirrored across `t = 1`.
pub fn chen_cable_upsilon(n: i64) -> Result<PLFunction> {
    if n < 8 {
        return Err(Error::InvalidParameter(format!("the cable formula holds for n >= 8, got {n}")));
    }
    let two_thirds = Rational::new(2, 3);
    let knee = -(two_thirds * (n - 1));
    let bottom = Rational::from_int(2 - (n + 2));
    PLFunction::from_points(
        vec![Rational::ZERO, two_thirds, Rational::ONE, Rational::new(4, 3), Rational::TWO],
        vec![Rational::ZERO, knee, bottom, knee, Rational::ZERO],
    )
}

/// Externally asserted monodromy status; never computed here.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RightVeering {
    #[serde(rename = "true")]
    Yes,
    #[serde(rename = "false")]
    No,
    #[default]
    Unknown,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct KnotRecord {
    pub name: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub complex: Option<BifilteredComplex>,
    #[serde(default)]
    pub genus: Option<u32>,
    #[serde(default)]
    pub fibered: Option<bool>,
    #[serde(default)]
    pub monodromy_right_veering: RightVeering,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub upsilon_override: Option<PLFunction>,
}

impl KnotRecord {
    pub fn from_complex(name: impl Into<String>, complex: BifilteredComplex) -> Self {
        KnotRecord {
            name: name.into(),
            complex: Some(complex),
            genus: None,
            fibered: None,
            monodromy_right_veering: RightVeering::Unknown,
            upsilon_override: None,
        }
    }

    pub fn from_upsilon(name: impl Into<String>, upsilon: PLFunction) -> Self {
        KnotRecord {
            name: name.into(),
            complex: None,
            genus: None,
            fibered: None,
            monodromy_right_veering: RightVeering::Unknown,
            upsilon_override: Some(upsilon),
        }
    }

    pub fn with_genus(mut self, genus: u32) -> Self {
        self.genus = Some(genus);
        self
    }

    pub fn with_fibered(mut self, fibered: bool) -> Self {
        self.fibered = Some(fibered);
        self
    }

    pub fn with_right_veering(mut self, rv: RightVeering) -> Self {
        self.monodromy_right_veering = rv;
        self
    }

    /// Genus must match the top Alexander grading when both are present.
    pub fn check(&self) -> Result<()> {
        if let (Some(c), Some(g)) = (&self.complex, self.genus) {
            let top = c.max_alexander().unwrap_or(0);
            if top != i64::from(g) {
                return Err(Error::InvalidParameter(format!(
                    "record `{}`: genus {g} differs from top Alexander grading {top}",
                    self.name
                )));
            }
        }
        Ok(())
    }

    pub fn is_fibered(&self) -> bool {
        self.fibered == Some(true)
    }

    /// The override if present, otherwise computed from the complex.
    pub fn upsilon(&self) -> Result<PLFunction> {
        match (&self.upsilon_override, &self.complex) {
            (Some(u), _) => Ok(u.clone()),
            (None, Some(c)) => upsilon(c),
            (None, None) => {
                Err(Error::MissingData(format!("record `{}` has neither a complex nor an Upsilon function", self.name)))
            }
        }
    }

    pub fn mirror(&self) -> Result<KnotRecord> {
        Ok(KnotRecord {
            name: format!("mirror of {}", self.name),
            complex: self.complex.as_ref().map(dual).transpose()?,
            genus: self.genus,
            fibered: self.fibered,
            monodromy_right_veering: RightVeering::Unknown,
            upsilon_override: self.upsilon_override.as_ref().map(PLFunction::neg),
        })
    }
}

fn genus_of(c: &BifilteredComplex) -> u32 {
    c.max_alexander().unwrap_or(0).max(0) as u32
}

fn parse_ints(list: &str) -> Result<Vec<i64>> {
    list.split(',')
        .map(|s| s.trim().parse::<i64>().map_err(|_| Error::Parse(format!("bad integer `{s}` in `{list}`"))))
        .collect()
}

/// Resolves builtin names: `unknot`, `trefoil`, `trefoil-left`, `figure8`,
/// `torus:p,q`, `staircase:a,b,…`, `chen-cable:n`. Returns `None` when `name`
/// is not of builtin form.
pub fn builtin(name: &str) -> Option<Result<KnotRecord>> {
    let fibered_model = |name: &str, c: BifilteredComplex| {
        let g = genus_of(&c);
        KnotRecord::from_complex(name, c).with_genus(g).with_fibered(true)
    };
    let record = match name {
        "unknot" => Ok(fibered_model(name, unknot())),
        "trefoil" => torus_knot_complex(2, 3).map(|c| fibered_model(name, c.with_label("trefoil"))),
        "trefoil-left" => {
            torus_knot_complex(2, 3).and_then(|c| dual(&c.with_label("trefoil"))).map(|c| fibered_model(name, c))
        }
        "figure8" => Ok(fibered_model(name, figure_eight_complex())),
        _ => {
            let (kind, args) = name.split_once(':')?;
            match kind {
                "torus" => parse_ints(args).and_then(|v| match v.as_slice() {
                    &[p, q] => {
                        let c = torus_knot_complex(p.abs(), q.abs())?;
                        let c = if (p < 0) != (q < 0) { dual(&c)? } else { c };
                        Ok(fibered_model(name, c))
                    }
                    _ => Err(Error::Parse(format!("`{name}`: expected torus:p,q"))),
                }),
                "staircase" => parse_ints(args).and_then(|v| {
                    let c = staircase(&v)?;
                    let g = genus_of(&c);
                    Ok(KnotRecord::from_complex(name, c).with_genus(g))
                }),
                "chen-cable" => args
                    .trim()
                    .parse::<i64>()
                    .map_err(|_| Error::Parse(format!("`{name}`: expected chen-cable:n")))
                    .and_then(|n| {
                        let u = chen_cable_upsilon(n)?;
                        Ok(KnotRecord::from_upsilon(name, u).with_genus((n + 2) as u32).with_fibered(true))
                    }),
                _ => return None,
            }
        }
    };
    Some(record)
}

/// `8_20`'s Alexander polynomial `t² - 2t + 3 - 2t⁻¹ + t⁻²`.
pub fn alexander_8_20() -> LaurentPolyZ {
    LaurentPolyZ::from_terms([(2, 1), (1, -2), (0, 3), (-1, -2), (-2, 1)])
}

/// The `(p, 1)`-cable of the slice fibered knot `8_20`: `Υ ≡ 0` (slice) and
/// right-veering monodromy (positive fractional Dehn twist coefficient `1/p`).
/// There is no complex; the genus comes from the cabled Alexander polynomial.
pub fn eight_twenty_cable(p: i64) -> Result<KnotRecord> {
    let genus = fibered_genus(&cable_alexander(&alexander_8_20(), p, 1)?)?;
    Ok(KnotRecord::from_upsilon(format!("({p},1)-cable of 8_20"), PLFunction::zero())
        .with_genus(genus as u32)
        .with_fibered(true)
        .with_right_veering(RightVeering::Yes))
}
