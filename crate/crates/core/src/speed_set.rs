//! Runner speed sets: sorted, distinct, positive integer speeds.

use std::fmt;

use crate::error::Error;
use crate::rational::gcd_list;
use crate::Result;

/// Largest supported speed. Pair sums and the products formed in the
/// candidate scan then fit in 128 bits with room to spare.
pub const MAX_SPEED: u64 = 1 << 62;

/// A problem instance: strictly increasing positive integer speeds.
///
/// Construction sorts the input and rejects zeros, duplicates, and speeds
/// above [`MAX_SPEED`]. Duplicates are an error rather than being merged
/// silently; a repeated speed in the input is almost always a caller bug.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SpeedSet {
    speeds: Vec<u64>,
}

impl SpeedSet {
    pub fn new(mut speeds: Vec<u64>) -> Result<Self> {
        if speeds.is_empty() {
            return Err(Error::EmptySpeedSet);
        }
        speeds.sort_unstable();
        for window in speeds.windows(2) {
            if window[0] == window[1] {
                return Err(Error::DuplicateSpeed(window[0]));
            }
        }
        if speeds[0] == 0 {
            return Err(Error::ZeroSpeed);
        }
        let last = *speeds.last().unwrap();
        if last > MAX_SPEED {
            return Err(Error::SpeedTooLarge(last));
        }
        Ok(SpeedSet { speeds })
    }

    pub fn speeds(&self) -> &[u64] {
        &self.speeds
    }

    pub fn len(&self) -> usize {
        self.speeds.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn max_speed(&self) -> u64 {
        *self.speeds.last().unwrap()
    }

    pub fn gcd(&self) -> u64 {
        gcd_list(&self.speeds).unwrap()
    }

    /// The same set divided by the gcd of the speeds; maximum loneliness is
    /// invariant under this reduction.
    pub fn reduced(&self) -> SpeedSet {
        let g = self.gcd();
        if g == 1 {
            return self.clone();
        }
        SpeedSet {
            speeds: self.speeds.iter().map(|v| v / g).collect(),
        }
    }

    /// A new set with `v` appended. Fails if `v` collides with an existing
    /// speed.
    pub fn with_speed(&self, v: u64) -> Result<SpeedSet> {
        let mut speeds = self.speeds.clone();
        speeds.push(v);
        SpeedSet::new(speeds)
    }
}

impl fmt::Display for SpeedSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for v in &self.speeds {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
            first = false;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sorts_and_validates() {
        let s = SpeedSet::new(vec![4, 6, 3]).unwrap();
        assert_eq!(s.speeds(), &[3, 4, 6]);
        assert_eq!(SpeedSet::new(vec![]).unwrap_err(), Error::EmptySpeedSet);
        assert_eq!(SpeedSet::new(vec![0, 1]).unwrap_err(), Error::ZeroSpeed);
        assert_eq!(SpeedSet::new(vec![2, 2]).unwrap_err(), Error::DuplicateSpeed(2));
        assert_eq!(
            SpeedSet::new(vec![MAX_SPEED + 1]).unwrap_err(),
            Error::SpeedTooLarge(MAX_SPEED + 1)
        );
    }

    #[test]
    fn reduction_examples() {
        let s = SpeedSet::new(vec![2, 4, 6]).unwrap();
        assert_eq!(s.reduced().speeds(), &[1, 2, 3]);
        let s = SpeedSet::new(vec![1, 2, 3]).unwrap();
        assert_eq!(s.reduced().speeds(), &[1, 2, 3]);
        let s = SpeedSet::new(vec![6, 10]).unwrap();
        assert_eq!(s.reduced().speeds(), &[3, 5]);
    }

    #[test]
    fn display_is_comma_separated() {
        let s = SpeedSet::new(vec![1, 3, 4, 7]).unwrap();
        assert_eq!(s.to_string(), "1,3,4,7");
    }
}
