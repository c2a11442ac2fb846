//! Exact computation of maximum loneliness for integer runner speeds.
//!
//! For speeds `v_1 < … < v_n` and a time `t`, the loneliness at `t` is the
//! minimum over runners of the distance from `t·v_i` to the nearest integer.
//! The maximum loneliness `ML(v_1, …, v_n)` is the maximum of that quantity
//! over all times; it is always attained at a rational time, so everything
//! here is computed in exact rational arithmetic — no floating point.
//!
//! The crate provides:
//!
//! - [`rational`]: an arbitrary-precision rational type and the
//!   distance-to-nearest-integer function,
//! - [`engine`]: the exact `ML` computation with witnesses, equality times,
//!   and per-time runner profiles,
//! - [`spectrum`]: classification of `ML` values against the conjectured
//!   spectrum `s/(ns+1)`, closed forms, constructions, surveys, and
//!   tight-set enumeration,
//! - [`fast_runner`]: admissible residues, the weighted-minimum selection,
//!   the closed-form prediction of `ML` when one runner is much faster than
//!   the rest, and the associated decision procedure.

pub mod enumerate;
pub mod engine;
pub mod error;
pub mod fast_runner;
pub mod rational;
pub mod spectrum;
pub mod speed_set;

pub use engine::{EqualityTimeProfile, LonelinessWitness, MaxLoneliness};
pub use error::Error;
pub use fast_runner::{
    AdmissibleResidue, ConditionCheck, ConditionReport, FastVerdict, MuKind, MuSelection,
};
pub use rational::Rational;
pub use spectrum::{SmallSpeedRegime, SmallSpeedReport, SpectrumClass, SurveyRecord};
pub use speed_set::SpeedSet;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
