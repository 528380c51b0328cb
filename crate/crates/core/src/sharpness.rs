//! Sharp upper bounds on the number of 2-regular simple modules, and hence
//! on the number of exact structures on the category of projectives.
//!
//! A linear algebra of rank `n` has at most `⌊(n−1)/2⌋` 2-regular simples
//! and a cyclic algebra of rank `n` at most `⌊n/2⌋`.  The check enumerates
//! all algebras of a rank, records the maximum and a witness attaining it,
//! and evaluates the standard alternating witnesses.

use rayon::prelude::*;
use serde::Serialize;

use crate::enumerate::{generate_cyclic, generate_linear};
use crate::homology::{ext_profile, is_regular_profile};
use crate::kupisch::{Kind, KupischSeries};

/// Outcome of a sharpness check at one rank.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SharpnessReport {
    /// Linear or cyclic.
    pub kind: Kind,
    /// Rank.
    pub rank: usize,
    /// Claimed upper bound on the number of 2-regular simples.
    pub bound: usize,
    /// Largest number found among the enumerated algebras.
    pub max_found: usize,
    /// First algebra (in enumeration order) attaining `max_found`.
    pub witness: Option<String>,
    /// The standard alternating witness, when one exists for this rank.
    pub standard_witness: Option<String>,
    /// Its number of 2-regular simples.
    pub standard_witness_count: Option<usize>,
    /// Number of algebras enumerated.
    pub checked: usize,
    /// Cyclic shifts scanned (`0..=max_shift`); zero for linear algebras.
    pub max_shift: usize,
}

impl SharpnessReport {
    /// The bound holds everywhere, is attained, and the standard witness
    /// (when defined) attains it.
    pub fn passed(&self) -> bool {
        self.max_found == self.bound && self.standard_witness_count.is_none_or(|c| c == self.bound)
    }
}

/// Number of 2-regular simples, computed from Ext dimensions.
pub fn count_reg2(k: &KupischSeries) -> usize {
    (0..k.rank())
        .filter(|&i| {
            let (p, e) = ext_profile(k, i);
            is_regular_profile(p, &e, 2)
        })
        .count()
}

/// The bound `⌊(n−1)/2⌋` (linear) or `⌊n/2⌋` (cyclic).
pub fn reg2_bound(kind: Kind, n: usize) -> usize {
    match kind {
        Kind::Linear => n.saturating_sub(1) / 2,
        Kind::Cyclic => n / 2,
    }
}

/// The alternating witness: `[2,3,…,2,3,2,2,1]` (linear, odd rank),
/// `[2,3,…,2,3,2,1]` (linear, even rank), `[2,3,…,2,3]` (cyclic, even rank).
/// There is no alternating witness for cyclic algebras of odd rank.
pub fn standard_witness(kind: Kind, n: usize) -> Option<KupischSeries> {
    match kind {
        Kind::Linear if n >= 2 => {
            let tail: &[usize] = if n % 2 == 1 { &[2, 2, 1] } else { &[2, 1] };
            if n < tail.len() {
                return None;
            }
            let mut e: Vec<usize> = (0..n - tail.len()).map(|i| if i % 2 == 0 { 2 } else { 3 }).collect();
            e.extend_from_slice(tail);
            KupischSeries::linear(e).ok()
        }
        Kind::Cyclic if n >= 2 && n.is_multiple_of(2) => {
            KupischSeries::cyclic((0..n).map(|i| if i % 2 == 0 { 2 } else { 3 }).collect()).ok()
        }
        _ => None,
    }
}

/// Enumerates all linear algebras of rank `n`, or all cyclic algebras of
/// rank `n` with shift in `0..=max_shift`, and checks the bound.
pub fn sharpness_check(n: usize, kind: Kind, max_shift: usize) -> SharpnessReport {
    let algebras: Vec<KupischSeries> = match kind {
        Kind::Linear => generate_linear(n),
        Kind::Cyclic => (0..=max_shift).flat_map(|s| generate_cyclic(n, s)).collect(),
    };
    let counts: Vec<usize> = algebras.par_iter().map(count_reg2).collect();
    let max_found = counts.iter().copied().max().unwrap_or(0);
    let witness = counts.iter().position(|&c| c == max_found).map(|i| algebras[i].to_string());
    let standard = standard_witness(kind, n);
    SharpnessReport {
        kind,
        rank: n,
        bound: reg2_bound(kind, n),
        max_found,
        witness,
        standard_witness_count: standard.as_ref().map(count_reg2),
        standard_witness: standard.map(|k| k.to_string()),
        checked: algebras.len(),
        max_shift: if kind == Kind::Cyclic { max_shift } else { 0 },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_witnesses() {
        assert_eq!(standard_witness(Kind::Linear, 5).unwrap().entries(), &[2, 3, 2, 2, 1]);
        assert_eq!(standard_witness(Kind::Linear, 4).unwrap().entries(), &[2, 3, 2, 1]);
        assert_eq!(standard_witness(Kind::Linear, 3).unwrap().entries(), &[2, 2, 1]);
        assert_eq!(standard_witness(Kind::Cyclic, 4).unwrap().entries(), &[2, 3, 2, 3]);
        assert!(standard_witness(Kind::Cyclic, 5).is_none());
    }

    #[test]
    fn small_ranks_are_sharp() {
        for n in 2..=7 {
            assert!(sharpness_check(n, Kind::Linear, 0).passed(), "linear {n}");
            assert!(sharpness_check(n, Kind::Cyclic, 2).passed(), "cyclic {n}");
        }
        assert_eq!(sharpness_check(4, Kind::Linear, 0).max_found, 1);
    }
}
