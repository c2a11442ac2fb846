//! Exact maximum loneliness, witnesses, equality times, and per-time runner
//! profiles.
//!
//! For gcd-1 speeds every local maximum of `f(t) = min_i ||t v_i||` occurs at
//! a time `m/(v_i + v_j)`, so the global maximum is found by scanning those
//! finitely many candidates. The scan runs on machine integers: the value at
//! `t = m/d` is `min_k min(r_k, d - r_k) / d` with `r_k = v_k·m mod d`, and
//! fractions are compared by cross-multiplication in 128 bits.

use std::collections::HashSet;

use num::integer::Integer;

use crate::error::Error;
use crate::rational::{lcm_list, norm_dist, Rational};
use crate::speed_set::SpeedSet;
use crate::Result;

/// A candidate time attaining the maximum loneliness, together with one
/// generating pair.
///
/// The time equals `m / (v_i + v_j)` for the speeds of `pair` in the
/// caller's coordinates. When several `(i, j, m)` generate the same time,
/// the lexicographically smallest triple is reported. For a single runner
/// the forced witness `t = 1/(2 v_1)` is reported with `pair = (0, 0)` and
/// `m = 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LonelinessWitness {
    pub time: Rational,
    pub value: Rational,
    pub pair: (usize, usize),
    pub m: u64,
}

/// Result of the exact maximum-loneliness computation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MaxLoneliness {
    pub value: Rational,
    /// Every distinct candidate time attaining `value`, sorted by time.
    pub witnesses: Vec<LonelinessWitness>,
}

/// Bookkeeping at one equality time `t`.
///
/// `rho` is the largest speed index whose position `frac(t·v)` is exactly
/// `L`, `lambda` the largest whose position is exactly `1 - L`; either may
/// be absent. `u` is the representative of `t·Q` modulo 1 in `(-1/2, 1/2]`
/// for the residue `Q` the profiles were built against.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EqualityTimeProfile {
    pub time: Rational,
    pub rho: Option<usize>,
    pub lambda: Option<usize>,
    pub u: Rational,
}

/// Loneliness of the speed set at time `t`: the minimum over runners of the
/// distance from `t·v` to the nearest integer.
pub fn loneliness_at(s: &SpeedSet, t: &Rational) -> Rational {
    s.speeds()
        .iter()
        .map(|&v| norm_dist(&(t * &Rational::from(v))))
        .min()
        .unwrap()
}

/// All candidate times `m/(v_i + v_j)` in `[0, 1)`, deduplicated and sorted.
///
/// Requires at least two runners and gcd 1; under those hypotheses every
/// local maximum of the loneliness function is among the returned times.
pub fn candidate_times(s: &SpeedSet) -> Result<Vec<Rational>> {
    if s.len() < 2 {
        return Err(Error::TooFewRunners { required: 2, got: s.len() });
    }
    let g = s.gcd();
    if g != 1 {
        return Err(Error::GcdNotOne(g));
    }
    let speeds = s.speeds();
    let mut seen = HashSet::new();
    let mut times = Vec::new();
    for i in 0..speeds.len() {
        for j in i + 1..speeds.len() {
            let d = speeds[i] + speeds[j];
            for m in 0..d {
                let g = m.gcd(&d);
                if seen.insert((m / g, d / g)) {
                    times.push(Rational::new(m, d).unwrap());
                }
            }
        }
    }
    times.sort();
    Ok(times)
}

/// Loneliness numerator at `t = m/d` over denominator `d`, on the given
/// speeds: `min_k min(r, d - r)` with `r = v_k·m mod d`.
fn value_numerator_at(speeds: &[u64], m: u64, d: u64) -> u64 {
    let mut best = u64::MAX;
    for &v in speeds {
        let r = ((v as u128 * m as u128) % d as u128) as u64;
        let dist = r.min(d - r);
        if dist < best {
            best = dist;
            if best == 0 {
                break;
            }
        }
    }
    best
}

fn fraction_less(a: (u64, u64), b: (u64, u64)) -> bool {
    (a.0 as u128) * (b.1 as u128) < (b.0 as u128) * (a.1 as u128)
}

/// Exact maximum loneliness with all witnesses.
///
/// The scan runs on the gcd-reduced speeds; witness times are reported in
/// the caller's coordinates (reduced time divided by the gcd), which keeps
/// `time = m/(v_i + v_j)` exact against the original speeds.
pub fn max_loneliness(s: &SpeedSet) -> MaxLoneliness {
    let speeds = s.speeds();
    if s.len() == 1 {
        let time = Rational::new(1u64, 2 * speeds[0]).unwrap();
        return MaxLoneliness {
            value: Rational::one_half(),
            witnesses: vec![LonelinessWitness {
                time,
                value: Rational::one_half(),
                pair: (0, 0),
                m: 1,
            }],
        };
    }

    let reduced = s.reduced();
    let rs = reduced.speeds();
    let n = rs.len();

    let mut best: Option<(u64, u64)> = None;
    let mut raw: Vec<(usize, usize, u64)> = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let d = rs[i] + rs[j];
            for m in 0..d {
                let a = value_numerator_at(rs, m, d);
                match best {
                    None => {
                        best = Some((a, d));
                        raw.push((i, j, m));
                    }
                    Some(b) => {
                        if fraction_less(b, (a, d)) {
                            best = Some((a, d));
                            raw.clear();
                            raw.push((i, j, m));
                        } else if !fraction_less((a, d), b) {
                            raw.push((i, j, m));
                        }
                    }
                }
            }
        }
    }

    let (num, den) = best.expect("at least one pair");
    let value = Rational::new(num, den).unwrap();

    // Deduplicate witnesses by the reduced time; pair iteration order makes
    // the first generating triple for each time the lexicographic minimum.
    let mut seen = HashSet::new();
    let mut witnesses = Vec::new();
    for (i, j, m) in raw {
        let d = rs[i] + rs[j];
        let g = m.gcd(&d);
        if seen.insert((m / g, d / g)) {
            let time = Rational::new(m, speeds[i] + speeds[j]).unwrap();
            witnesses.push(LonelinessWitness { time, value: value.clone(), pair: (i, j), m });
        }
    }
    witnesses.sort_by(|a, b| a.time.cmp(&b.time));
    MaxLoneliness { value, witnesses }
}

/// Maximum loneliness over times of the form `m/(v_i + v_j)` only, for one
/// fixed pair of indices, taking the minimum over all runners.
pub fn pair_restricted_max(s: &SpeedSet, i: usize, j: usize) -> Result<Rational> {
    let n = s.len();
    if i >= j || j >= n {
        return Err(Error::InvalidPair { i, j, n });
    }
    let speeds = s.speeds();
    let d = speeds[i] + speeds[j];
    let mut best = 0u64;
    for m in 0..d {
        best = best.max(value_numerator_at(speeds, m, d));
    }
    Ok(Rational::new(best, d).unwrap())
}

/// The times in `[0, 1)` at which the loneliness equals its maximum.
pub fn equality_times(s: &SpeedSet) -> Result<Vec<Rational>> {
    if s.len() < 2 {
        return Err(Error::TooFewRunners { required: 2, got: s.len() });
    }
    let g = s.gcd();
    if g != 1 {
        return Err(Error::GcdNotOne(g));
    }
    Ok(max_loneliness(s).witnesses.into_iter().map(|w| w.time).collect())
}

/// `D`: the least common multiple of the reduced denominators of the
/// equality times.
pub fn denominator_lcm(s: &SpeedSet) -> Result<u64> {
    let times = equality_times(s)?;
    let denominators: Vec<u64> = times
        .iter()
        .map(|t| {
            u64::try_from(t.denominator().clone())
                .map_err(|_| Error::LcmOverflow)
        })
        .collect::<Result<_>>()?;
    lcm_list(&denominators)
}

/// Representative of `x` modulo 1 in `(-1/2, 1/2]`.
pub(crate) fn centered_mod_one(x: &Rational) -> Rational {
    let f = x.frac();
    if f > Rational::one_half() {
        f - Rational::one()
    } else {
        f
    }
}

/// One profile per equality time, against the residue `Q`.
///
/// Rejects sets with maximum loneliness `1/2`, where the positions `L` and
/// `1 - L` coincide and the rho/lambda bookkeeping is meaningless.
pub fn equality_profiles(s: &SpeedSet, q: i64) -> Result<Vec<EqualityTimeProfile>> {
    let ml = max_loneliness(s);
    if ml.value == Rational::one_half() {
        return Err(Error::MaxLonelinessHalf);
    }
    let times = equality_times(s)?;
    let level = ml.value;
    let opposite = Rational::one() - level.clone();
    let speeds = s.speeds();
    let q_rational = Rational::from(q);

    let mut profiles = Vec::with_capacity(times.len());
    for t in times {
        let mut rho = None;
        let mut lambda = None;
        for (idx, &v) in speeds.iter().enumerate() {
            let position = (&t * &Rational::from(v)).frac();
            if position == level {
                rho = Some(idx);
            } else if position == opposite {
                lambda = Some(idx);
            }
        }
        let u = centered_mod_one(&(&t * &q_rational));
        profiles.push(EqualityTimeProfile { time: t, rho, lambda, u });
    }
    Ok(profiles)
}
