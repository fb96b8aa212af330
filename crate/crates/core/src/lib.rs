//! Exact computation of the `Υ` concordance invariant from finitely generated
//! bifiltered chain complexes over `F₂[U, U⁻¹]`, together with the certificates
//! it feeds.
//!
//! ```
//! use upsilon_core::{knots, upsilon, r};
//!
//! let f = upsilon(&knots::torus_knot_complex(2, 3).unwrap()).unwrap();
//! assert_eq!(f.eval(r!(1, 2)).unwrap(), r!(-1, 2));
//! ```

pub mod certificates;
pub mod complex;
pub mod engine;
pub mod error;
pub mod f2;
pub mod knots;
pub mod laurent;
pub mod pl;
pub mod rational;
pub mod validate;

pub use certificates::{
    certify_right_veering, classify_tightness, obstruct_concordance, ribbon_minimality_report, ConcordanceVerdict,
    RVCertificate, RibbonReport, Tightness,
};
pub use complex::{
    dual, grading_slice, tensor, vertical_complex, BifilteredComplex, DiffEntry, Generator, LatticePoint,
};
pub use engine::{
    brute_force_nu, check_symmetry, jump_report, nu_at, nu_at_halfplane, tau, upsilon, JumpCheck, NuCertificate,
};
pub use error::{Error, Result};
pub use knots::{KnotRecord, RightVeering};
pub use laurent::LaurentPolyZ;
pub use pl::PLFunction;
pub use rational::Rational;
pub use validate::{validate, verify_homology, ValidationReport};
