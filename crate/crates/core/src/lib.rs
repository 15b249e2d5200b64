//! Exact numerical screening of space curves as primitive set-theoretic
//! complete intersections.
//!
//! For a smooth curve of degree `d` and genus `g` in P^3, the crate lists
//! every tuple `(a, b, m, l)` compatible with a primitive multiple structure
//! of multiplicity `m`, of type `L` with `deg L = l`, that is the complete
//! intersection of surfaces of degrees `a <= b`
//! ([`enumerate::enumerate_candidates`]), and screens each tuple through
//! the necessary conditions coming from A_n^k singularities on the general
//! degree-`b` surface and the Miyaoka bound ([`screen::screen_candidate`]).
//!
//! All arithmetic is exact. Brute-force reference implementations live in
//! [`oracle`] and the full regression run in [`selftest`].

pub mod enumerate;
pub mod error;
pub mod invariants;
pub mod oracle;
pub mod rational;
pub mod reference;
pub mod report;
pub mod screen;
pub mod selftest;
pub mod types;
pub mod witness;

pub use enumerate::{enumerate_candidates, Diagnostic, Enumeration, EnumerationOptions};
pub use error::{Error, Result};
pub use rational::ExactRational;
pub use screen::{screen_candidate, ScreenMode, ScreenReport, Verdict};
pub use types::{
    validate_candidate, CandidatePolicy, CandidateTuple, CurveClass, SingularityProfile, Validity,
};
pub use witness::{castelnuovo_bound, witness_tuple, WitnessReport};
