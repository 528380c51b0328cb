//! The Billey–Jockusch–Stanley bijection from Dyck paths to 321-avoiding
//! permutations.
//!
//! Every valley `(x, y)` of the path places a cross at `(x, y + 1)` of an
//! `n × n` grid; the remaining rows and columns are filled in increasing
//! order.  The permutation read off the grid is then reverse-complemented so
//! that the staircase path maps to the identity.

use std::fmt;

use super::BijectionError;
use crate::dyck::DyckPath;
use crate::kupisch::join;

/// A 321-avoiding permutation of `1..=n` in one-line notation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation321(Vec<usize>);

impl Permutation321 {
    /// Validates a one-line permutation of `1..=n` that avoids 321.
    pub fn new(values: Vec<usize>) -> Result<Self, BijectionError> {
        let n = values.len();
        let mut seen = vec![false; n + 1];
        for &v in &values {
            if v == 0 || v > n || std::mem::replace(&mut seen[v], true) {
                return Err(BijectionError::OutOfDomain(format!("not a permutation: {values:?}")));
            }
        }
        if !Self::avoids_321(&values) {
            return Err(BijectionError::OutOfDomain(format!("contains 321: {values:?}")));
        }
        Ok(Self(values))
    }

    /// Whether a sequence of distinct values has no decreasing subsequence of
    /// length three (a value smaller than the running maximum must exceed
    /// every earlier such value).
    pub fn avoids_321(values: &[usize]) -> bool {
        let mut max = 0;
        let mut low = 0;
        for &v in values {
            if v > max {
                max = v;
            } else if v < low {
                return false;
            } else {
                low = v;
            }
        }
        true
    }

    /// One-line values.
    pub fn values(&self) -> &[usize] {
        &self.0
    }

    /// Length `n`.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// Whether the permutation is empty.
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Fixed points `i` with `π(i) = i` (1-based).
    pub fn fixed_points(&self) -> Vec<usize> {
        (1..=self.len()).filter(|&i| self.0[i - 1] == i).collect()
    }

    /// Reverse-complement `i ↦ n + 1 − π(n + 1 − i)`.
    pub fn reverse_complement(&self) -> Self {
        let n = self.len();
        Self((1..=n).map(|i| n + 1 - self.0[n - i]).collect())
    }

    /// Inverse permutation.
    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.len()];
        for (i, &v) in self.0.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Self(inv)
    }
}

impl fmt::Display for Permutation321 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", join(&self.0, " "))
    }
}

/// The crosses of the grid before reverse-complementing: `σ(a) = b` for a
/// cross in row `a`, column `b` (both 1-based).
pub fn bjs_crosses(d: &DyckPath) -> Permutation321 {
    let n = d.semilength();
    let mut sigma = vec![0usize; n + 1];
    let mut used_col = vec![false; n + 2];
    for &(x, y) in &d.stats().valleys {
        let (x, col) = (x as usize, y as usize + 1);
        sigma[x] = col;
        used_col[col] = true;
    }
    let mut free_cols = (1..=n).filter(|&c| !used_col[c]);
    for slot in sigma.iter_mut().skip(1) {
        if *slot == 0 {
            *slot = free_cols.next().expect("as many free columns as free rows");
        }
    }
    Permutation321(sigma[1..].to_vec())
}

/// The bijection from Dyck paths of semilength `n` to 321-avoiding
/// permutations of `n`.
pub fn bjs(d: &DyckPath) -> Permutation321 {
    bjs_crosses(d).reverse_complement()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_peak_is_identity() {
        for n in 0..6 {
            let area: Vec<usize> = (1..=n + 1).rev().collect();
            let p = bjs(&DyckPath::from_area(area).unwrap());
            assert_eq!(p.values(), (1..=n).collect::<Vec<_>>().as_slice());
        }
    }

    #[test]
    fn example_permutation() {
        let d = DyckPath::from_area(vec![3, 2, 4, 3, 5, 5, 5, 4, 3, 3, 4, 3, 2, 2, 1]).unwrap();
        let p = bjs(&d);
        assert!(Permutation321::avoids_321(p.values()));
        assert_eq!(p.len(), 14);
    }

    #[test]
    fn avoidance() {
        assert!(Permutation321::avoids_321(&[2, 3, 1]));
        assert!(!Permutation321::avoids_321(&[3, 2, 1]));
        assert!(!Permutation321::avoids_321(&[4, 1, 3, 2]));
        assert!(Permutation321::new(vec![1, 1]).is_err());
    }
}
