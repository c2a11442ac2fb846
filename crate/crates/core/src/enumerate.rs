//! Lexicographic enumeration of strictly increasing speed tuples.

/// Iterator over all strictly increasing `n`-tuples from `{1, …, max}` in
/// lexicographic order, with support for resuming after a given tuple.
#[derive(Debug, Clone)]
pub struct IncreasingTuples {
    next: Option<Vec<u64>>,
    max: u64,
}

impl IncreasingTuples {
    pub fn new(n: usize, max: u64) -> Self {
        let next = if n == 0 || (max as u128) < n as u128 {
            None
        } else {
            Some((1..=n as u64).collect())
        };
        IncreasingTuples { next, max }
    }

    /// Enumeration continuing strictly after `prev` (which need not itself
    /// be a valid tuple for the bound; only the ordering matters).
    pub fn resume_after(prev: &[u64], max: u64) -> Self {
        let mut tuple = prev.to_vec();
        let next = if advance(&mut tuple, max) { Some(tuple) } else { None };
        IncreasingTuples { next, max }
    }
}

impl Iterator for IncreasingTuples {
    type Item = Vec<u64>;

    fn next(&mut self) -> Option<Vec<u64>> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        if advance(&mut succ, self.max) {
            self.next = Some(succ);
        }
        Some(current)
    }
}

/// Advances `tuple` to its lexicographic successor among strictly increasing
/// tuples bounded by `max`. Returns false when `tuple` is the last one.
fn advance(tuple: &mut [u64], max: u64) -> bool {
    let n = tuple.len();
    for i in (0..n).rev() {
        // Position i can hold at most max - (n - 1 - i).
        let ceiling = max - (n - 1 - i) as u64;
        if tuple[i] < ceiling {
            tuple[i] += 1;
            for k in i + 1..n {
                tuple[k] = tuple[k - 1] + 1;
            }
            return true;
        }
    }
    false
}
