//! Classification of maximum-loneliness values against the conjectured
//! spectrum, closed forms, constructions, surveys, and tight-set search.
//!
//! For `n` runners the conjectured picture is that every value below `1/n`
//! lies on the discrete ladder `s/(ns+1)`, `s = 1, 2, …`, whose first rung
//! is the tight value `1/(n+1)`.

use std::fmt;
use std::str::FromStr;

use num::bigint::BigInt;
use num::One;
use rayon::prelude::*;

use crate::engine::max_loneliness;
use crate::enumerate::IncreasingTuples;
use crate::error::Error;
use crate::rational::{gcd_list, Rational};
use crate::speed_set::SpeedSet;
use crate::Result;

/// Where a maximum-loneliness value sits relative to the spectrum for `n`
/// runners. Exactly one variant applies to every rational in `(0, 1/2]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SpectrumClass {
    /// `value = s/(ns+1)`; carries `s`. Implies `1/(n+1) <= value < 1/n`.
    DiscretePart(BigInt),
    /// `value >= 1/n`.
    LargeValue,
    /// `1/(n+1) < value < 1/n` but off the ladder.
    SpectrumGapViolation,
    /// `value < 1/(n+1)`: a counterexample to the classical conjecture.
    LonelyRunnerViolation,
}

impl SpectrumClass {
    pub fn discrete(s: u64) -> Self {
        SpectrumClass::DiscretePart(BigInt::from(s))
    }

    pub fn is_violation(&self) -> bool {
        matches!(
            self,
            SpectrumClass::SpectrumGapViolation | SpectrumClass::LonelyRunnerViolation
        )
    }
}

impl fmt::Display for SpectrumClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpectrumClass::DiscretePart(s) => write!(f, "discrete:{s}"),
            SpectrumClass::LargeValue => write!(f, "large"),
            SpectrumClass::SpectrumGapViolation => write!(f, "gap-violation"),
            SpectrumClass::LonelyRunnerViolation => write!(f, "lrc-violation"),
        }
    }
}

impl FromStr for SpectrumClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "large" => Ok(SpectrumClass::LargeValue),
            "gap-violation" => Ok(SpectrumClass::SpectrumGapViolation),
            "lrc-violation" => Ok(SpectrumClass::LonelyRunnerViolation),
            other => match other.strip_prefix("discrete:") {
                Some(num) => BigInt::from_str(num)
                    .map(SpectrumClass::DiscretePart)
                    .map_err(|_| Error::InvalidParameter(format!("bad class {s:?}"))),
                None => Err(Error::InvalidParameter(format!("bad class {s:?}"))),
            },
        }
    }
}

/// One surveyed speed set with its exact value and classification.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurveyRecord {
    pub speeds: SpeedSet,
    pub ml: Rational,
    pub class: SpectrumClass,
    pub witness_time: Rational,
}

/// Classifies `ml` for `n` runners. `ml` must lie in `(0, 1/2]`.
///
/// Membership on the ladder is decided without search: for reduced
/// `ml = p/q`, it holds exactly when `q = n·p + 1`, with `s = p`.
pub fn classify(n: usize, ml: &Rational) -> Result<SpectrumClass> {
    if n == 0 {
        return Err(Error::InvalidParameter("n must be positive".into()));
    }
    if !ml.is_positive() || *ml > Rational::one_half() {
        return Err(Error::InvalidParameter(format!(
            "value {ml} outside (0, 1/2]"
        )));
    }
    let n_big = BigInt::from(n);
    if ml >= &Rational::new(BigInt::one(), n_big.clone())? {
        return Ok(SpectrumClass::LargeValue);
    }
    if ml < &Rational::new(BigInt::one(), &n_big + BigInt::one())? {
        return Ok(SpectrumClass::LonelyRunnerViolation);
    }
    let p = ml.numerator().clone();
    let q = ml.denominator().clone();
    if q == &n_big * &p + BigInt::one() {
        Ok(SpectrumClass::DiscretePart(p))
    } else {
        Ok(SpectrumClass::SpectrumGapViolation)
    }
}

/// Closed form for two distinct runners: `1/2` when both reduced speeds are
/// odd, otherwise `s/(2s+1)` with `2s + 1` the sum of the reduced speeds.
pub fn two_runner_closed_form(v1: u64, v2: u64) -> Result<Rational> {
    if v1 == v2 {
        return Err(Error::DuplicateSpeed(v1));
    }
    if v1 == 0 || v2 == 0 {
        return Err(Error::ZeroSpeed);
    }
    let g = gcd_list(&[v1, v2])?;
    let (a, b) = (v1 / g, v2 / g);
    if a % 2 == 1 && b % 2 == 1 {
        return Ok(Rational::one_half());
    }
    // Coprime and not both odd, so the sum is odd: write it as 2s + 1.
    let sum = a + b;
    Rational::new((sum - 1) / 2, sum)
}

/// The explicit family `{1, 2, …, n-1, ns}` together with its known value
/// `s/(ns+1)`, realizing the whole discrete ladder.
pub fn construction_set(n: usize, s: u64) -> Result<(SpeedSet, Rational)> {
    if n < 2 {
        return Err(Error::InvalidParameter("n must be at least 2".into()));
    }
    if s == 0 {
        return Err(Error::InvalidParameter("s must be positive".into()));
    }
    let fast = (n as u64)
        .checked_mul(s)
        .ok_or_else(|| Error::InvalidParameter("n*s overflows".into()))?;
    let mut speeds: Vec<u64> = (1..n as u64).collect();
    speeds.push(fast);
    let set = SpeedSet::new(speeds)?;
    let expected = Rational::new(s, fast + 1)?;
    Ok((set, expected))
}

fn evaluate_tuple(n: usize, speeds: Vec<u64>) -> Result<SurveyRecord> {
    let set = SpeedSet::new(speeds)?;
    let ml = max_loneliness(&set);
    let class = classify(n, &ml.value)?;
    let witness_time = ml.witnesses[0].time.clone();
    Ok(SurveyRecord { speeds: set, ml: ml.value, class, witness_time })
}

/// Evaluates every strictly increasing `n`-tuple from `{1, …, max_speed}`
/// (only gcd-1 tuples when `primitive_only`), in lexicographic order.
///
/// Tuples are fanned out across the rayon pool; the output order is
/// independent of the parallelism.
pub fn survey(n: usize, max_speed: u64, primitive_only: bool) -> Result<Vec<SurveyRecord>> {
    if n < 2 {
        return Err(Error::InvalidParameter("n must be at least 2".into()));
    }
    if max_speed < n as u64 {
        return Err(Error::InvalidParameter(format!(
            "max_speed {max_speed} below n {n}"
        )));
    }
    let tuples: Vec<Vec<u64>> = IncreasingTuples::new(n, max_speed)
        .filter(|t| !primitive_only || gcd_list(t).unwrap() == 1)
        .collect();
    tuples
        .into_par_iter()
        .map(|t| evaluate_tuple(n, t))
        .collect()
}

/// All gcd-1 sets with the tight value `1/(n+1)` exactly, in lexicographic
/// order. Completeness is only relative to the searched bound.
pub fn tight_sets(n: usize, max_speed: u64) -> Result<Vec<SpeedSet>> {
    let target = Rational::new(1u64, n as u64 + 1)?;
    Ok(survey(n, max_speed, true)?
        .into_iter()
        .filter(|r| r.ml == target)
        .map(|r| r.speeds)
        .collect())
}

/// Which small-speed statement a bound factor falls under.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SmallSpeedRegime {
    /// Speeds at most `1.2n`: only `1/(n+1)`, `2/(2n+1)`, or `>= 1/n` occur.
    Tao,
    /// Speeds at most `1.5n + 1`: the ladder points `s <= 3`, values
    /// `>= 1/n`, or values below `1/(n+1)`.
    Extended,
    /// Beyond both bounds: nothing is asserted, the data is exploratory.
    Exploratory,
}

/// Survey of all `n`-subsets of `{1, …, floor(bound_factor·n)}` with the
/// applicable small-speed statement checked per record.
#[derive(Debug, Clone)]
pub struct SmallSpeedReport {
    pub n: usize,
    pub speed_bound: u64,
    pub regime: SmallSpeedRegime,
    pub records: Vec<SurveyRecord>,
    /// Records whose class falls outside the regime's allowed disjuncts.
    pub counterexamples: Vec<SurveyRecord>,
}

fn conforms(regime: SmallSpeedRegime, class: &SpectrumClass) -> bool {
    match regime {
        SmallSpeedRegime::Tao => match class {
            SpectrumClass::DiscretePart(s) => *s <= BigInt::from(2),
            SpectrumClass::LargeValue => true,
            _ => false,
        },
        SmallSpeedRegime::Extended => match class {
            SpectrumClass::DiscretePart(s) => *s <= BigInt::from(3),
            SpectrumClass::LargeValue | SpectrumClass::LonelyRunnerViolation => true,
            SpectrumClass::SpectrumGapViolation => false,
        },
        SmallSpeedRegime::Exploratory => true,
    }
}

/// Surveys every `n`-subset of `{1, …, floor(bound_factor·n)}` and checks
/// each against the disjunction the bound factor entitles us to.
pub fn small_speed_check(n: usize, bound_factor: &Rational) -> Result<SmallSpeedReport> {
    if n < 2 {
        return Err(Error::InvalidParameter("n must be at least 2".into()));
    }
    let bound_rational = bound_factor * &Rational::from(n as u64);
    let speed_bound = u64::try_from(bound_rational.floor().numerator().clone())
        .map_err(|_| Error::InvalidParameter("speed bound out of range".into()))?;
    if speed_bound < n as u64 {
        return Err(Error::InvalidParameter(format!(
            "bound factor {bound_factor} leaves fewer than {n} speeds"
        )));
    }

    let six_fifths = Rational::new(6u64, 5u64)?;
    let extended_limit = Rational::new(3u64, 2u64)? + Rational::new(1u64, n as u64)?;
    let regime = if *bound_factor <= six_fifths {
        SmallSpeedRegime::Tao
    } else if *bound_factor <= extended_limit {
        SmallSpeedRegime::Extended
    } else {
        SmallSpeedRegime::Exploratory
    };

    let tuples: Vec<Vec<u64>> = IncreasingTuples::new(n, speed_bound).collect();
    let records: Vec<SurveyRecord> = tuples
        .into_par_iter()
        .map(|t| evaluate_tuple(n, t))
        .collect::<Result<_>>()?;
    let counterexamples = records
        .iter()
        .filter(|r| !conforms(regime, &r.class))
        .cloned()
        .collect();
    Ok(SmallSpeedReport { n, speed_bound, regime, records, counterexamples })
}
