//! Continuous piecewise-linear functions on `[0, 2]` with rational breakpoints
//! and integer slopes.
//!
//! Values are kept in canonical form: adjacent collinear segments are merged,
//! so two functions are equal as functions iff they are equal as values.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::Rational;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "PLFile")]
pub struct PLFunction {
    breakpoints: Vec<Rational>,
    values: Vec<Rational>,
    slopes: Vec<i64>,
}

/// A maximal linear piece `[start, end]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Segment {
    pub start: Rational,
    pub end: Rational,
    pub start_value: Rational,
    pub slope: i64,
}

impl PLFunction {
    /// Builds the function interpolating `(breakpoints[k], values[k])`.
    pub fn from_points(breakpoints: Vec<Rational>, values: Vec<Rational>) -> Result<Self> {
        if breakpoints.len() != values.len() {
            return Err(Error::InvalidPL(format!("{} breakpoints but {} values", breakpoints.len(), values.len())));
        }
        if breakpoints.len() < 2 {
            return Err(Error::InvalidPL("need at least the breakpoints 0 and 2".into()));
        }
        if breakpoints[0] != Rational::ZERO || *breakpoints.last().unwrap() != Rational::TWO {
            return Err(Error::InvalidPL("domain must be exactly [0, 2]".into()));
        }
        if let Some(w) = breakpoints.windows(2).find(|w| w[0] >= w[1]) {
            return Err(Error::InvalidPL(format!("breakpoints not strictly increasing at {} >= {}", w[0], w[1])));
        }

        let mut slopes = Vec::with_capacity(breakpoints.len() - 1);
        for k in 0..breakpoints.len() - 1 {
            let s = (values[k + 1] - values[k]) / (breakpoints[k + 1] - breakpoints[k]);
            let s = s.to_integer().ok_or_else(|| {
                Error::InvalidPL(format!("non-integer slope {s} on [{}, {}]", breakpoints[k], breakpoints[k + 1]))
            })?;
            slopes.push(s);
        }

        let mut bp = vec![breakpoints[0]];
        let mut vals = vec![values[0]];
        let mut sl: Vec<i64> = Vec::new();
        for k in 0..slopes.len() {
            if sl.last() == Some(&slopes[k]) {
                *bp.last_mut().unwrap() = breakpoints[k + 1];
                *vals.last_mut().unwrap() = values[k + 1];
            } else {
                sl.push(slopes[k]);
                bp.push(breakpoints[k + 1]);
                vals.push(values[k + 1]);
            }
        }
        Ok(PLFunction { breakpoints: bp, values: vals, slopes: sl })
    }

    pub fn zero() -> Self {
        PLFunction {
            breakpoints: vec![Rational::ZERO, Rational::TWO],
            values: vec![Rational::ZERO; 2],
            slopes: vec![0],
        }
    }

    pub fn breakpoints(&self) -> &[Rational] {
        &self.breakpoints
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn slopes(&self) -> &[i64] {
        &self.slopes
    }

    pub fn interior_breakpoints(&self) -> &[Rational] {
        &self.breakpoints[1..self.breakpoints.len() - 1]
    }

    pub fn segments(&self) -> impl Iterator<Item = Segment> + '_ {
        (0..self.slopes.len()).map(move |k| Segment {
            start: self.breakpoints[k],
            end: self.breakpoints[k + 1],
            start_value: self.values[k],
            slope: self.slopes[k],
        })
    }

    /// Right-hand slope at 0.
    pub fn initial_slope(&self) -> i64 {
        self.slopes[0]
    }

    pub fn max_abs_slope(&self) -> i64 {
        self.slopes.iter().map(|s| s.abs()).max().unwrap_or(0)
    }

    pub fn eval(&self, t: Rational) -> Result<Rational> {
        if t < Rational::ZERO || t > Rational::TWO {
            return Err(Error::ParameterOutOfRange(t));
        }
        let k = match self.breakpoints.binary_search(&t) {
            Ok(k) => return Ok(self.values[k]),
            Err(k) => k - 1,
        };
        Ok(self.values[k] + (t - self.breakpoints[k]) * self.slopes[k])
    }

    fn merged_breakpoints(&self, other: &PLFunction) -> Vec<Rational> {
        let mut ts: Vec<Rational> = self.breakpoints.iter().chain(&other.breakpoints).copied().collect();
        ts.sort();
        ts.dedup();
        ts
    }

    fn combine(&self, other: &PLFunction, op: impl Fn(Rational, Rational) -> Rational) -> PLFunction {
        let ts = self.merged_breakpoints(other);
        let vals = ts.iter().map(|&t| op(self.eval(t).unwrap(), other.eval(t).unwrap())).collect();
        PLFunction::from_points(ts, vals).expect("combination of integer-slope functions has integer slopes")
    }

    pub fn add(&self, other: &PLFunction) -> PLFunction {
        self.combine(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &PLFunction) -> PLFunction {
        self.combine(other, |a, b| a - b)
    }

    pub fn neg(&self) -> PLFunction {
        PLFunction {
            breakpoints: self.breakpoints.clone(),
            values: self.values.iter().map(|&v| -v).collect(),
            slopes: self.slopes.iter().map(|&s| -s).collect(),
        }
    }

    /// `t ↦ f(2 - t)`.
    pub fn reflect(&self) -> PLFunction {
        let breakpoints = self.breakpoints.iter().rev().map(|&t| Rational::TWO - t).collect();
        let values = self.values.iter().rev().copied().collect();
        let slopes = self.slopes.iter().rev().map(|&s| -s).collect();
        PLFunction { breakpoints, values, slopes }
    }

    /// Smallest breakpoint of either function where the two differ.
    pub fn first_difference(&self, other: &PLFunction) -> Option<Rational> {
        self.merged_breakpoints(other).into_iter().find(|&t| self.eval(t).unwrap() != other.eval(t).unwrap())
    }

    /// Samples `t = 0, step, 2·step, …` up to and including `t = 2`.
    pub fn sample(&self, step: Rational) -> Result<Vec<(Rational, Rational)>> {
        if step <= Rational::ZERO {
            return Err(Error::InvalidParameter(format!("sampling step must be positive, got {step}")));
        }
        let mut out = Vec::new();
        let mut t = Rational::ZERO;
        while t < Rational::TWO {
            out.push((t, self.eval(t)?));
            t = t + step;
        }
        out.push((Rational::TWO, self.eval(Rational::TWO)?));
        Ok(out)
    }

    pub fn to_csv(&self, step: Rational) -> Result<String> {
        let mut s = String::from("t,value\n");
        for (t, v) in self.sample(step)? {
            s.push_str(&format!("{t},{v}\n"));
        }
        Ok(s)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("PL serialization is infallible")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct PLFile {
    breakpoints: Vec<Rational>,
    values: Vec<Rational>,
    slopes: Vec<i64>,
}

impl TryFrom<PLFile> for PLFunction {
    type Error = Error;

    fn try_from(f: PLFile) -> Result<Self> {
        if f.slopes.len() + 1 != f.breakpoints.len() {
            return Err(Error::InvalidPL("expected one slope per segment".into()));
        }
        for (k, &s) in f.slopes.iter().enumerate() {
            if f.breakpoints.len() > k + 1 && f.values.len() > k + 1 {
                let actual = (f.values[k + 1] - f.values[k]) / (f.breakpoints[k + 1] - f.breakpoints[k]);
                if actual != Rational::from_int(s) {
                    return Err(Error::InvalidPL(format!("declared slope {s} disagrees with values (slope {actual})")));
                }
            }
        }
        PLFunction::from_points(f.breakpoints, f.values)
    }
}
