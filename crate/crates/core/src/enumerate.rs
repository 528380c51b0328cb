//! Exhaustive generators for linear and cyclic Nakayama algebras.
//!
//! Linear algebras of rank `n` are the area sequences of Dyck paths of
//! semilength `n − 1` and are produced in colexicographic order (compare the
//! last entries first).  Cyclic algebras are produced per global shift as
//! canonical necklaces in lexicographic order; a shift-`s` series is a
//! shift-0 series with `s` added to every entry.

use crate::dyck::{DyckPath, PeriodicDyckPath};
use crate::homology::is_quasi_hereditary;
use crate::kupisch::{canonical_necklace, KupischSeries};

/// All linear Kupisch series of the given rank, in colex order.
pub fn generate_linear(rank: usize) -> Vec<KupischSeries> {
    let mut out = Vec::new();
    if rank == 0 {
        return out;
    }
    let mut entries = vec![1usize; rank];
    fill_linear(&mut entries, rank - 1, &mut out);
    out
}

fn fill_linear(entries: &mut [usize], filled_from: usize, out: &mut Vec<KupischSeries>) {
    if filled_from == 0 {
        out.push(KupischSeries::linear(entries.to_vec()).expect("generated series is valid"));
        return;
    }
    let i = filled_from - 1;
    for c in 2..=entries[i + 1] + 1 {
        entries[i] = c;
        fill_linear(entries, i, out);
    }
}

/// All Dyck paths of the given semilength, in the colex order of their area
/// sequences.
pub fn dyck_paths(semilength: usize) -> Vec<DyckPath> {
    generate_linear(semilength + 1)
        .iter()
        .map(DyckPath::from_kupisch)
        .collect()
}

/// All canonical cyclic Kupisch series of rank `n` with minimal entry
/// `shift + 2`, in lexicographic order.
pub fn generate_cyclic(rank: usize, shift: usize) -> Vec<KupischSeries> {
    let mut out: Vec<Vec<usize>> = Vec::new();
    if rank == 0 {
        return Vec::new();
    }
    let mut entries = vec![2usize; rank];
    fill_cyclic(&mut entries, 1, &mut out);
    out.into_iter()
        .map(|e| {
            KupischSeries::cyclic(e.iter().map(|c| c + shift).collect()).expect("generated series is valid")
        })
        .collect()
}

/// Shift-0 sequences starting with 2: `c_{i+1} ≥ c_i − 1`, every entry at
/// least 2, and the wrap-around `c_{n−1} ≤ 3`.  An entry can exceed the
/// remaining descent budget only if it cannot return to 3 by the end.
fn fill_cyclic(entries: &mut [usize], pos: usize, out: &mut Vec<Vec<usize>>) {
    let n = entries.len();
    if pos == n {
        if entries[n - 1] <= entries[0] + 1 && canonical_necklace(entries) == entries {
            out.push(entries.to_vec());
        }
        return;
    }
    let low = entries[pos - 1].saturating_sub(1).max(2);
    let high = 3 + (n - 1 - pos);
    for c in low..=high {
        entries[pos] = c;
        fill_cyclic(entries, pos + 1, out);
    }
}

/// All canonical shift-0 periodic Dyck paths of period `n`.
pub fn periodic_paths(period: usize) -> Vec<PeriodicDyckPath> {
    generate_cyclic(period, 0)
        .iter()
        .map(PeriodicDyckPath::from_kupisch)
        .collect()
}

/// Every quasi-hereditary cyclic algebra of rank `n` has global shift at
/// most `n`; the generator scans shifts `0..=n`.
pub fn quasi_hereditary_cyclic(rank: usize) -> Vec<KupischSeries> {
    (0..=rank)
        .flat_map(|s| generate_cyclic(rank, s))
        .filter(is_quasi_hereditary)
        .collect()
}

/// Catalan number `C_n` as `u128` (exact for `n ≤ 60`).
pub fn catalan(n: usize) -> u128 {
    let mut c: u128 = 1;
    for k in 0..n as u128 {
        c = c * 2 * (2 * k + 1) / (k + 2);
    }
    c
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn linear_counts_are_catalan() {
        for rank in 1..=10 {
            let all = generate_linear(rank);
            assert_eq!(all.len() as u128, catalan(rank - 1));
            let distinct: HashSet<_> = all.iter().map(|k| k.entries().to_vec()).collect();
            assert_eq!(distinct.len(), all.len());
        }
        assert_eq!(generate_linear(12).len(), 58786);
        assert_eq!(generate_linear(1)[0].entries(), &[1]);
    }

    #[test]
    fn linear_order_is_colex() {
        let rank4: Vec<Vec<usize>> = generate_linear(4).iter().map(|k| k.entries().to_vec()).collect();
        assert_eq!(
            rank4,
            vec![vec![2, 2, 2, 1], vec![3, 2, 2, 1], vec![2, 3, 2, 1], vec![3, 3, 2, 1], vec![4, 3, 2, 1]]
        );
    }

    #[test]
    fn cyclic_generation_is_canonical_and_complete() {
        for n in 1..=7 {
            let all = generate_cyclic(n, 0);
            for k in &all {
                for r in 0..n {
                    assert_eq!(k.rotate(r).canonical().entries(), k.entries());
                }
            }
            // Brute force: every sequence over 2..=n+1 with min 2, reduced.
            let mut brute = HashSet::new();
            let total = n.pow(n as u32);
            for code in 0..total {
                let mut x = code;
                let e: Vec<usize> = (0..n)
                    .map(|_| {
                        let v = x % n + 2;
                        x /= n;
                        v
                    })
                    .collect();
                if e.iter().min() == Some(&2) {
                    if let Ok(k) = KupischSeries::cyclic(e) {
                        brute.insert(k.canonical().entries().to_vec());
                    }
                }
            }
            let got: HashSet<_> = all.iter().map(|k| k.entries().to_vec()).collect();
            assert_eq!(got, brute, "rank {n}");
        }
        assert_eq!(generate_cyclic(3, 0).len(), 4);
    }

    #[test]
    fn quasi_hereditary_small() {
        let rank3: Vec<Vec<usize>> =
            quasi_hereditary_cyclic(3).iter().map(|k| k.entries().to_vec()).collect();
        assert_eq!(rank3, vec![vec![2, 2, 3], vec![2, 4, 3], vec![3, 5, 4]]);
        for n in 1..=7 {
            for s in n + 1..n + 4 {
                assert!(generate_cyclic(n, s).iter().all(|k| !is_quasi_hereditary(k)));
            }
        }
    }
}
