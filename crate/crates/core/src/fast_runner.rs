//! Adding one very fast runner: admissible residues, the weighted-minimum
//! selection, the closed-form value of the new maximum loneliness, and the
//! decision procedure for tight base sets.
//!
//! Fix base speeds with maximum loneliness `L < 1/2`, equality times `t_j`,
//! and `D` the lcm of their denominators. For a new speed `v_n ≡ Q (mod D)`
//! the fast runner sits at position `u_j ≡ t_j·Q (mod 1)` at every equality
//! time. A residue `Q` is admissible when `||t_j·Q|| < L` throughout, so the
//! fast runner spoils every equality time and the new maximum is found just
//! next to one of them:
//!
//! - just below `t_j` the binding slow runner is the fastest one at position
//!   `L` (index `rho_j`) and the best value is
//!   `L - v_rho·(L + u_j)/(v_rho + v_n)`;
//! - just above `t_j` it is the fastest at position `1 - L` (index
//!   `lambda_j`) and the best value is `L - v_lambda·(L - u_j)/(v_lambda + v_n)`.
//!
//! For large `v_n` the branch with the smallest weight `v·(L + u)` resp.
//! `v·(L - u)` wins, and among tied weights the larger speed wins for every
//! `v_n`, not just asymptotically.

use std::collections::HashMap;

use rayon::prelude::*;

use crate::engine::{equality_profiles, max_loneliness, EqualityTimeProfile};
use crate::error::Error;
use crate::rational::{lcm_list, norm_dist, Rational};
use crate::speed_set::SpeedSet;
use crate::Result;

/// Residue enumerations are bounded by this: the result has one entry per
/// residue class modulo `D`.
const MAX_RESIDUE_ENUMERATION: u64 = 10_000_000;

/// One residue class `Q` in `(-D/2, D/2]` with its admissibility flag.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdmissibleResidue {
    pub q: i64,
    pub modulus: u64,
    pub admissible: bool,
}

/// Whether the selected branch sits just below (`Rho`) or just above
/// (`Lambda`) its equality time.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MuKind {
    Rho,
    Lambda,
}

impl MuKind {
    pub fn as_str(self) -> &'static str {
        match self {
            MuKind::Rho => "rho",
            MuKind::Lambda => "lambda",
        }
    }
}

/// The weight-minimizing branch across all equality times.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MuSelection {
    /// Index of the selected equality time.
    pub time_index: usize,
    pub time: Rational,
    pub kind: MuKind,
    /// Index into the speed set of the selected runner.
    pub speed_index: usize,
    pub speed: u64,
    pub u: Rational,
    /// `v·(L + u)` for a rho branch, `v·(L - u)` for a lambda branch.
    pub weight: Rational,
}

/// Outcome of the two checks for one admissible residue.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConditionCheck {
    pub q: i64,
    pub mu: MuSelection,
    pub equality_holds: bool,
    pub integrality_holds: bool,
}

/// Full decision-procedure report for a tight base set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConditionReport {
    pub speeds: SpeedSet,
    pub n: usize,
    pub ml: Rational,
    pub denominator_lcm: u64,
    pub per_q: Vec<ConditionCheck>,
    pub overall: bool,
}

/// Per-set reports plus the combined verdict over a list of tight sets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FastVerdict {
    pub holds: bool,
    pub reports: Vec<ConditionReport>,
}

/// Everything about a base set and residue that the closed form needs,
/// computed once.
struct Analysis {
    level: Rational,
    modulus: u64,
    mu: MuSelection,
}

fn equality_data(s: &SpeedSet) -> Result<(Rational, Vec<Rational>, u64)> {
    let ml = max_loneliness(s);
    if ml.value == Rational::one_half() {
        return Err(Error::MaxLonelinessHalf);
    }
    if s.len() < 2 {
        return Err(Error::TooFewRunners { required: 2, got: s.len() });
    }
    let g = s.gcd();
    if g != 1 {
        return Err(Error::GcdNotOne(g));
    }
    let times: Vec<Rational> = ml.witnesses.iter().map(|w| w.time.clone()).collect();
    let denominators: Vec<u64> = times
        .iter()
        .map(|t| u64::try_from(t.denominator().clone()).map_err(|_| Error::LcmOverflow))
        .collect::<Result<_>>()?;
    let modulus = lcm_list(&denominators)?;
    Ok((ml.value, times, modulus))
}

fn is_admissible(times: &[Rational], level: &Rational, q: i64) -> bool {
    let q_rational = Rational::from(q);
    times
        .iter()
        .all(|t| norm_dist(&(t * &q_rational)) < *level)
}

/// All residues `Q` in `(-D/2, D/2]`, each flagged admissible when
/// `||t_j·Q|| < L` at every equality time.
pub fn admissible_residues(s: &SpeedSet) -> Result<Vec<AdmissibleResidue>> {
    let (level, times, modulus) = equality_data(s)?;
    if modulus > MAX_RESIDUE_ENUMERATION {
        return Err(Error::ResidueRangeTooLarge(modulus));
    }
    let hi = (modulus / 2) as i64;
    let lo = hi - modulus as i64 + 1;
    Ok((lo..=hi)
        .map(|q| AdmissibleResidue {
            q,
            modulus,
            admissible: is_admissible(&times, &level, q),
        })
        .collect())
}

/// Just the admissible values of `Q`, ascending.
pub fn admissible_values(s: &SpeedSet) -> Result<Vec<i64>> {
    Ok(admissible_residues(s)?
        .into_iter()
        .filter(|r| r.admissible)
        .map(|r| r.q)
        .collect())
}

fn branch_weight(kind: MuKind, speed: u64, level: &Rational, u: &Rational) -> Rational {
    let factor = match kind {
        MuKind::Rho => level + u,
        MuKind::Lambda => level - u,
    };
    &Rational::from(speed) * &factor
}

fn select_mu_from_profiles(
    s: &SpeedSet,
    level: &Rational,
    profiles: &[EqualityTimeProfile],
) -> Result<MuSelection> {
    let speeds = s.speeds();
    let mut best: Option<MuSelection> = None;
    for (time_index, profile) in profiles.iter().enumerate() {
        for kind in [MuKind::Rho, MuKind::Lambda] {
            let speed_index = match kind {
                MuKind::Rho => profile.rho,
                MuKind::Lambda => profile.lambda,
            };
            let side = match kind {
                MuKind::Rho => level.clone(),
                MuKind::Lambda => Rational::one() - level.clone(),
            };
            let Some(speed_index) = speed_index else {
                return Err(Error::MissingProfileSide {
                    time: profile.time.clone(),
                    side,
                });
            };
            let speed = speeds[speed_index];
            let weight = branch_weight(kind, speed, level, &profile.u);
            let candidate = MuSelection {
                time_index,
                time: profile.time.clone(),
                kind,
                speed_index,
                speed,
                u: profile.u.clone(),
                weight,
            };
            let better = match &best {
                None => true,
                // Smallest weight; among ties the larger speed gives the
                // strictly larger value for every v_n. The remaining ties
                // (same weight and speed give the same value) are broken by
                // time index, then rho before lambda, for reproducibility.
                Some(b) => match candidate.weight.cmp(&b.weight) {
                    std::cmp::Ordering::Less => true,
                    std::cmp::Ordering::Greater => false,
                    std::cmp::Ordering::Equal => candidate.speed > b.speed,
                },
            };
            if better {
                best = Some(candidate);
            }
        }
    }
    Ok(best.expect("at least one equality time"))
}

fn analyze(s: &SpeedSet, q: i64) -> Result<Analysis> {
    let (level, times, modulus) = equality_data(s)?;
    if modulus > MAX_RESIDUE_ENUMERATION {
        return Err(Error::ResidueRangeTooLarge(modulus));
    }
    let hi = (modulus / 2) as i64;
    let lo = hi - modulus as i64 + 1;
    if q < lo || q > hi || !is_admissible(&times, &level, q) {
        return Err(Error::ResidueNotAdmissible { q, modulus });
    }
    let profiles = equality_profiles(s, q)?;
    let mu = select_mu_from_profiles(s, &level, &profiles)?;
    Ok(Analysis { level, modulus, mu })
}

/// The branch minimizing the weight, for an admissible residue `Q`.
///
/// Fails when some equality time lacks a runner exactly at `L` or at
/// `1 - L`; the closed form needs both branches at every equality time.
pub fn select_mu(s: &SpeedSet, q: i64) -> Result<MuSelection> {
    Ok(analyze(s, q)?.mu)
}

fn predicted_from(analysis: &Analysis, v_n: u64) -> Rational {
    let mu = &analysis.mu;
    let v = Rational::from(mu.speed);
    let factor = match mu.kind {
        MuKind::Rho => &analysis.level + &mu.u,
        MuKind::Lambda => &analysis.level - &mu.u,
    };
    let denominator = &v + &Rational::from(v_n);
    &analysis.level - &(&(&v * &factor) / &denominator)
}

/// Closed-form maximum loneliness after appending `v_n ≡ Q (mod D)`,
/// valid once `v_n` is past the stabilization threshold.
///
/// For `Q = 0` this collapses to `v_n·L/(v_n + v_mu)`.
pub fn predicted_ml(s: &SpeedSet, q: i64, v_n: u64) -> Result<Rational> {
    let analysis = analyze(s, q)?;
    if v_n <= s.max_speed() {
        return Err(Error::FastSpeedNotLargest { vn: v_n, max: s.max_speed() });
    }
    let residue = q.rem_euclid(analysis.modulus as i64) as u64;
    if v_n % analysis.modulus != residue {
        return Err(Error::ResidueMismatch { vn: v_n, q, modulus: analysis.modulus });
    }
    Ok(predicted_from(&analysis, v_n))
}

/// Default search cap: the sufficient bound `4·v_{n-1}^3·v_1` when `Q = 0`,
/// and `4·v_{n-1}^4` otherwise.
fn default_cap(s: &SpeedSet, q: i64) -> Result<u64> {
    let last = s.max_speed() as u128;
    let first = s.speeds()[0] as u128;
    let cap = if q == 0 {
        4u128 * last * last * last * first
    } else {
        4u128 * last * last * last * last
    };
    u64::try_from(cap).map_err(|_| {
        Error::InvalidParameter("default stabilization cap exceeds 64 bits".into())
    })
}

/// Smallest `v_n ≡ Q (mod D)` above the base speeds at which the closed
/// form matches the exact engine for `run_length` consecutive residue-class
/// values, searched up to `cap` (defaulting per [`default_cap`]).
pub fn stabilization_threshold(
    s: &SpeedSet,
    q: i64,
    run_length: u64,
    cap: Option<u64>,
) -> Result<u64> {
    if run_length == 0 {
        return Err(Error::InvalidParameter("run_length must be positive".into()));
    }
    let analysis = analyze(s, q)?;
    let modulus = analysis.modulus;
    let cap = match cap {
        Some(c) => c,
        None => default_cap(s, q)?,
    };

    let residue = q.rem_euclid(modulus as i64) as u64;
    let max_speed = s.max_speed();
    let mut start = if residue > max_speed {
        residue
    } else {
        residue + modulus * ((max_speed - residue) / modulus + 1)
    };

    let mut exact_cache: HashMap<u64, Rational> = HashMap::new();
    let mut exact_at = |v: u64| -> Result<Rational> {
        if let Some(value) = exact_cache.get(&v) {
            return Ok(value.clone());
        }
        let value = max_loneliness(&s.with_speed(v)?).value;
        exact_cache.insert(v, value.clone());
        Ok(value)
    };

    let mut tried = 0u64;
    let mut last_mismatch: Option<(u64, Rational, Rational)> = None;
    while start <= cap {
        tried += 1;
        let mut all_match = true;
        for k in 0..run_length {
            let v = start
                .checked_add(k.checked_mul(modulus).ok_or_else(overflow)?)
                .ok_or_else(overflow)?;
            let predicted = predicted_from(&analysis, v);
            let exact = exact_at(v)?;
            if predicted != exact {
                last_mismatch = Some((v, predicted, exact));
                all_match = false;
                break;
            }
        }
        if all_match {
            return Ok(start);
        }
        match start.checked_add(modulus) {
            Some(next) => start = next,
            None => break,
        }
    }

    let (mismatch_vn, predicted, exact) = last_mismatch.unwrap_or((
        0,
        Rational::zero(),
        Rational::zero(),
    ));
    Err(Error::NoStabilization { cap, tried, mismatch_vn, predicted, exact })
}

fn overflow() -> Error {
    Error::InvalidParameter("stabilization run exceeds 64 bits".into())
}

/// Decision procedure for a tight base set of `n - 1` speeds.
///
/// Requires gcd 1 and `ML = 1/n` exactly. For each admissible residue the
/// selected branch must satisfy both
///
/// - the equality `Q = n·v·u` (rho branch) resp. `Q = -n·v·u` (lambda), and
/// - integrality of `D / (n·v·(1 + n·u))` resp. `D / (n·v·(1 - n·u))`,
///
/// which together say that the closed form lands on the ladder `s/(ns+1)`
/// for every sufficiently large `v_n` in the residue class.
pub fn check_condition_iib(s: &SpeedSet, n: usize) -> Result<ConditionReport> {
    if n != s.len() + 1 {
        return Err(Error::InvalidParameter(format!(
            "expected {} speeds for n = {n}, got {}",
            n - 1,
            s.len()
        )));
    }
    let g = s.gcd();
    if g != 1 {
        return Err(Error::GcdNotOne(g));
    }
    let ml = max_loneliness(s).value;
    let expected = Rational::new(1u64, n as u64)?;
    if ml != expected {
        return Err(Error::NotTight { ml, expected });
    }

    let residues = admissible_residues(s)?;
    let modulus = residues[0].modulus;
    let n_rational = Rational::from(n as u64);
    let d_rational = Rational::from(modulus);

    let mut per_q = Vec::new();
    let mut overall = true;
    for residue in residues.into_iter().filter(|r| r.admissible) {
        let mu = select_mu(s, residue.q)?;
        let v = Rational::from(mu.speed);
        let nu = &n_rational * &mu.u;
        let (required_q, integrand) = match mu.kind {
            MuKind::Rho => (
                &n_rational * &(&v * &mu.u),
                &d_rational / &(&n_rational * &(&v * &(Rational::one() + nu))),
            ),
            MuKind::Lambda => (
                -(&n_rational * &(&v * &mu.u)),
                &d_rational / &(&n_rational * &(&v * &(Rational::one() - nu))),
            ),
        };
        let equality_holds = Rational::from(residue.q) == required_q;
        let integrality_holds = integrand.is_integer();
        overall &= equality_holds && integrality_holds;
        per_q.push(ConditionCheck { q: residue.q, mu, equality_holds, integrality_holds });
    }

    Ok(ConditionReport {
        speeds: s.clone(),
        n,
        ml,
        denominator_lcm: modulus,
        per_q,
        overall,
    })
}

/// Runs the decision procedure over a list of tight sets for `n - 1`
/// runners. The verdict is only as complete as the supplied list.
pub fn conjecture_1fast_verdict(n: usize, tight_list: &[SpeedSet]) -> Result<FastVerdict> {
    let reports: Vec<ConditionReport> = tight_list
        .par_iter()
        .map(|s| check_condition_iib(s, n))
        .collect::<Result<_>>()?;
    let holds = reports.iter().all(|r| r.overall);
    Ok(FastVerdict { holds, reports })
}

/// True when `v_n >= ((L - eps)/eps)·v_{n-1}`, which guarantees the set
/// extended by `v_n` keeps a loneliness of at least `L - eps`.
///
/// Requires `0 < eps < L`; the claim `ML(s) >= L` is verified against the
/// engine rather than trusted.
pub fn perturb_guarantee(
    s: &SpeedSet,
    level: &Rational,
    eps: &Rational,
    v_n: u64,
) -> Result<bool> {
    if !(eps.is_positive() && eps < level) {
        return Err(Error::InvalidParameter(format!(
            "eps {eps} outside (0, {level})"
        )));
    }
    let ml = max_loneliness(s).value;
    if &ml < level {
        return Err(Error::InvalidParameter(format!(
            "base set has loneliness {ml}, below the claimed {level}"
        )));
    }
    let bound = &(&(level - eps) / eps) * &Rational::from(s.max_speed());
    Ok(Rational::from(v_n) >= bound)
}

/// True when `v_n >= v_{n-1}(2·v_{n-1} - 1)`, which for a base set with
/// `ML > 1/n` strictly guarantees `ML >= 1/n` after appending `v_n`.
pub fn lemma_1fast_guarantee(s: &SpeedSet, n: usize, v_n: u64) -> Result<bool> {
    if n != s.len() + 1 {
        return Err(Error::InvalidParameter(format!(
            "expected {} speeds for n = {n}, got {}",
            n - 1,
            s.len()
        )));
    }
    let ml = max_loneliness(s).value;
    let threshold = Rational::new(1u64, n as u64)?;
    if ml <= threshold {
        return Err(Error::InvalidParameter(format!(
            "requires base loneliness strictly above {threshold}, got {ml}"
        )));
    }
    let last = s.max_speed() as u128;
    Ok(v_n as u128 >= last * (2 * last - 1))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(speeds: &[u64]) -> SpeedSet {
        SpeedSet::new(speeds.to_vec()).unwrap()
    }

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d).unwrap()
    }

    #[test]
    fn only_zero_admissible_for_tight_sets() {
        for speeds in [&[1u64, 2, 3][..], &[1, 2, 3, 4, 5], &[1, 3, 4, 5, 9]] {
            let residues = admissible_residues(&set(speeds)).unwrap();
            let admissible: Vec<i64> =
                residues.iter().filter(|r| r.admissible).map(|r| r.q).collect();
            assert_eq!(admissible, vec![0], "speeds {speeds:?}");
        }
        let residues = admissible_residues(&set(&[1, 2, 3])).unwrap();
        assert_eq!(residues.len(), 4);
        assert_eq!(residues[0].q, -1);
        assert_eq!(residues[3].q, 2);
    }

    #[test]
    fn residue_range_covers_centered_interval() {
        // {2,3}: equality times 1/5 and 4/5, so D = 5 and the range is
        // -2..=2; the residues 0 and ±1 are admissible.
        assert_eq!(admissible_values(&set(&[2, 3])).unwrap(), vec![-1, 0, 1]);
    }

    #[test]
    fn admissibility_rejects_all_odd() {
        assert_eq!(
            admissible_residues(&set(&[1, 3])).unwrap_err(),
            Error::MaxLonelinessHalf
        );
    }

    #[test]
    fn select_mu_examples() {
        let mu = select_mu(&set(&[1, 2, 3]), 0).unwrap();
        assert_eq!(mu.kind, MuKind::Rho);
        assert_eq!(mu.speed, 1);
        assert_eq!(mu.weight, r(1, 4));
        assert_eq!(mu.time, r(1, 4));

        let mu = select_mu(&set(&[1, 2, 3, 4, 5]), 0).unwrap();
        assert_eq!(mu.speed, 1);

        let mu = select_mu(&set(&[1, 3, 4, 5, 9]), 0).unwrap();
        assert_eq!(mu.speed, 1);
    }

    #[test]
    fn select_mu_requires_admissible_residue() {
        assert!(matches!(
            select_mu(&set(&[1, 2, 3]), 1).unwrap_err(),
            Error::ResidueNotAdmissible { q: 1, modulus: 4 }
        ));
        assert!(matches!(
            select_mu(&set(&[1, 2, 3]), 7).unwrap_err(),
            Error::ResidueNotAdmissible { q: 7, modulus: 4 }
        ));
    }

    #[test]
    fn predicted_ml_examples() {
        assert_eq!(predicted_ml(&set(&[1, 2, 3]), 0, 8).unwrap(), r(2, 9));
        for s in [3u64, 4, 5] {
            assert_eq!(
                predicted_ml(&set(&[1, 2, 3]), 0, 4 * s).unwrap(),
                Rational::new(s, 4 * s + 1).unwrap()
            );
        }
        for s in [2u64, 5, 9] {
            assert_eq!(
                predicted_ml(&set(&[1, 2, 3, 4, 5]), 0, 6 * s).unwrap(),
                Rational::new(s, 6 * s + 1).unwrap()
            );
        }
    }

    #[test]
    fn predicted_ml_checks_residue_class() {
        assert!(matches!(
            predicted_ml(&set(&[1, 2, 3]), 0, 9).unwrap_err(),
            Error::ResidueMismatch { vn: 9, .. }
        ));
        assert!(matches!(
            predicted_ml(&set(&[1, 2, 3]), 0, 0).unwrap_err(),
            Error::FastSpeedNotLargest { .. }
        ));
    }

    #[test]
    fn nonzero_residue_prediction_matches_engine() {
        // {2,3} with Q = 1: at the equality time 1/5 the fast runner sits at
        // u = 1/5, and the winning branch is lambda with weight 3/5. For
        // v_3 = 101 the exact value is 41/104.
        let s = set(&[2, 3]);
        let mu = select_mu(&s, 1).unwrap();
        assert_eq!(mu.weight, r(3, 5));
        assert_eq!(mu.speed, 3);
        let predicted = predicted_ml(&s, 1, 101).unwrap();
        assert_eq!(predicted, r(41, 104));
        assert_eq!(max_loneliness(&s.with_speed(101).unwrap()).value, r(41, 104));
    }

    #[test]
    fn stabilization_for_consecutive_base() {
        let threshold = stabilization_threshold(&set(&[1, 2, 3]), 0, 5, None).unwrap();
        assert!(threshold <= 108);
        assert_eq!(threshold, 4);

        let threshold = stabilization_threshold(&set(&[1, 2]), 0, 5, None).unwrap();
        assert!(threshold <= 32);
        assert_eq!(threshold, 3);
    }

    #[test]
    fn stabilization_run_agrees_with_engine() {
        let s = set(&[1, 2, 3]);
        let threshold = stabilization_threshold(&s, 0, 3, None).unwrap();
        for v in (threshold..threshold + 12).step_by(4) {
            let predicted = predicted_ml(&s, 0, v).unwrap();
            let exact = max_loneliness(&s.with_speed(v).unwrap()).value;
            assert_eq!(predicted, exact);
        }
    }

    #[test]
    fn stabilization_honors_cap() {
        let err = stabilization_threshold(&set(&[1, 2, 3]), 0, 5, Some(3)).unwrap_err();
        assert!(matches!(err, Error::NoStabilization { cap: 3, .. }));
    }

    #[test]
    fn condition_passes_for_known_tight_sets() {
        for n in 4..=7usize {
            let speeds: Vec<u64> = (1..n as u64).collect();
            let report = check_condition_iib(&set(&speeds), n).unwrap();
            assert!(report.overall, "consecutive speeds up to {}", n - 1);
            assert_eq!(report.per_q.len(), 1);
            assert_eq!(report.per_q[0].q, 0);
        }
        assert!(check_condition_iib(&set(&[1, 3, 4, 5, 9]), 6).unwrap().overall);
        assert!(check_condition_iib(&set(&[1, 3, 4, 7]), 5).unwrap().overall);
    }

    #[test]
    fn condition_rejects_non_tight_sets() {
        assert!(matches!(
            check_condition_iib(&set(&[1, 2, 4]), 4).unwrap_err(),
            Error::NotTight { .. }
        ));
        assert!(matches!(
            check_condition_iib(&set(&[2, 4, 6]), 4).unwrap_err(),
            Error::GcdNotOne(2)
        ));
    }

    #[test]
    fn verdict_examples() {
        let verdict = conjecture_1fast_verdict(4, &[set(&[1, 2, 3])]).unwrap();
        assert!(verdict.holds);
        let verdict =
            conjecture_1fast_verdict(6, &[set(&[1, 2, 3, 4, 5]), set(&[1, 3, 4, 5, 9])])
                .unwrap();
        assert!(verdict.holds);
        let verdict =
            conjecture_1fast_verdict(5, &[set(&[1, 2, 3, 4]), set(&[1, 3, 4, 7])]).unwrap();
        assert!(verdict.holds);
        assert!(conjecture_1fast_verdict(4, &[set(&[1, 2, 4])]).is_err());
    }

    #[test]
    fn perturb_guarantee_examples() {
        let s = set(&[1, 2, 3]);
        assert!(perturb_guarantee(&s, &r(1, 4), &r(1, 8), 3).unwrap());
        assert!(!perturb_guarantee(&s, &r(1, 4), &r(1, 100), 3).unwrap());
        // eps = L/2 makes the bound exactly v_{n-1}.
        assert!(perturb_guarantee(&s, &r(1, 4), &r(1, 8), s.max_speed()).unwrap());
        assert!(perturb_guarantee(&s, &r(1, 4), &r(1, 2), 3).is_err());
        assert!(perturb_guarantee(&s, &r(1, 2), &r(1, 8), 100).is_err());
    }

    #[test]
    fn lemma_1fast_examples() {
        // ML(1,2) = 1/3 is not strictly above 1/3, so the guarantee does
        // not apply at all.
        assert!(lemma_1fast_guarantee(&set(&[1, 2]), 3, 6).is_err());

        let s = set(&[1, 3]);
        assert!(lemma_1fast_guarantee(&s, 3, 15).unwrap());
        assert!(!lemma_1fast_guarantee(&s, 3, 14).unwrap());
        let extended = max_loneliness(&s.with_speed(15).unwrap()).value;
        assert!(extended >= r(1, 3));
    }
}
