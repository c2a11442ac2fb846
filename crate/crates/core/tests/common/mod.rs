//! Shared helpers for the integration suites: an independent reference
//! oracle and seeded instance sampling.

use rand::Rng;

/// Self-contained gcd so the oracle shares no code with the library.
pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = b;
        b = a % b;
        a = t;
    }
    a
}

pub fn lcm_checked(a: u64, b: u64) -> Option<u64> {
    (a / gcd(a, b)).checked_mul(b)
}

/// Reference maximum loneliness on the full grid `{k/N : 0 <= k < N}` with
/// `N` the lcm of all pair sums. Every candidate time is a grid point, so
/// the grid maximum equals the true maximum. Returns `(numerator, N)`,
/// or `None` when `N` exceeds `grid_cap`.
pub fn grid_max_loneliness(speeds: &[u64], grid_cap: u64) -> Option<(u64, u64)> {
    let mut n_lcm: u64 = 1;
    for i in 0..speeds.len() {
        for j in i + 1..speeds.len() {
            n_lcm = lcm_checked(n_lcm, speeds[i] + speeds[j])?;
            if n_lcm > grid_cap {
                return None;
            }
        }
    }
    let mut best = 0u64;
    for k in 0..n_lcm {
        let mut closest = u64::MAX;
        for &v in speeds {
            let r = ((k as u128 * v as u128) % n_lcm as u128) as u64;
            closest = closest.min(r.min(n_lcm - r));
            if closest == 0 {
                break;
            }
        }
        best = best.max(closest);
    }
    Some((best, n_lcm))
}

/// Strictly increasing random speeds: `n` distinct values from `1..=max`.
pub fn random_speeds<R: Rng>(rng: &mut R, n: usize, max: u64) -> Vec<u64> {
    assert!(max >= n as u64);
    let mut speeds = Vec::with_capacity(n);
    while speeds.len() < n {
        let v = rng.random_range(1..=max);
        if !speeds.contains(&v) {
            speeds.push(v);
        }
    }
    speeds.sort_unstable();
    speeds
}

/// All strictly increasing `n`-tuples from `1..=max`, materialized. Written
/// from scratch here so the suites do not lean on the library's enumerator.
pub fn all_tuples(n: usize, max: u64) -> Vec<Vec<u64>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(n);
    fn recurse(out: &mut Vec<Vec<u64>>, current: &mut Vec<u64>, n: usize, max: u64, from: u64) {
        if current.len() == n {
            out.push(current.clone());
            return;
        }
        let remaining = (n - current.len()) as u64;
        for v in from..=(max + 1 - remaining) {
            current.push(v);
            recurse(out, current, n, max, v + 1);
            current.pop();
        }
    }
    recurse(&mut out, &mut current, n, max, 1);
    out
}
