//! Algebras of global dimension at most two as subsets.
//!
//! For a linear algebra of global dimension at most two, every simple of
//! projective dimension two at vertex `i` contributes the pair
//! `{i + 1, i + c_i}`; the union of these pairs is a subset of `{1, …, n}` of
//! even size, where `n + 1` is the rank.  Conversely a subset
//! `s_1 < s_2 < … < s_{2ℓ}` rebuilds the series from the bottom: `c_n = 1`,
//! `c_i = s_{2m} − i` when `i = s_{2m−1} − 1`, and `c_i = c_{i+1} + 1`
//! otherwise.

use super::BijectionError;
use crate::homology::{global_dimension, pdim_simple, Dim};
use crate::kupisch::KupischSeries;

fn pdim_two_simples(k: &KupischSeries) -> Result<Vec<usize>, BijectionError> {
    match global_dimension(k) {
        Dim::Finite(g) if g <= 2 => {}
        _ => return Err(BijectionError::NotGd2),
    }
    Ok((0..k.rank()).filter(|&i| pdim_simple(k, i) == Dim::Finite(2)).collect())
}

/// The subset of `{1, …, n}` attached to a linear algebra of global
/// dimension at most two.
pub fn gd2_to_subset(k: &KupischSeries) -> Result<Vec<usize>, BijectionError> {
    if k.is_cyclic() {
        return Err(BijectionError::OutOfDomain(format!("{k} is cyclic")));
    }
    let mut subset = Vec::new();
    for i in pdim_two_simples(k)? {
        subset.push(i + 1);
        subset.push(i + k.c(i as isize));
    }
    subset.sort_unstable();
    Ok(subset)
}

/// Rebuilds the linear algebra of rank `n + 1` from an even subset of
/// `{1, …, n}`.
pub fn subset_to_gd2(subset: &[usize], n: usize) -> Result<KupischSeries, BijectionError> {
    if !subset.len().is_multiple_of(2) {
        return Err(BijectionError::BadSubset("odd size".into()));
    }
    if subset.windows(2).any(|w| w[0] >= w[1]) || subset.iter().any(|&s| s == 0 || s > n) {
        return Err(BijectionError::BadSubset(format!("{subset:?} is not a subset of 1..={n}")));
    }
    let mut c = vec![1usize; n + 1];
    for i in (0..n).rev() {
        c[i] = match subset.chunks(2).find(|pair| pair[0] == i + 1) {
            Some(pair) => pair[1] - i,
            None => c[i + 1] + 1,
        };
    }
    KupischSeries::linear(c).map_err(|e| BijectionError::BadSubset(e.to_string()))
}

/// The pairs `(i + 1 mod n, i + c_i mod n)` of a cyclic algebra of global
/// dimension at most two, canonical under rotation of the labels.
pub fn gd2_cyclic_pairs(k: &KupischSeries) -> Result<Vec<(usize, usize)>, BijectionError> {
    if !k.is_cyclic() {
        return Err(BijectionError::OutOfDomain(format!("{k} is linear")));
    }
    let n = k.rank();
    let pairs: Vec<(usize, usize)> = pdim_two_simples(k)?
        .into_iter()
        .map(|i| ((i + 1) % n, (i + k.c(i as isize)) % n))
        .collect();
    let best = (0..n)
        .map(|r| {
            let mut rotated: Vec<(usize, usize)> =
                pairs.iter().map(|&(a, b)| ((a + r) % n, (b + r) % n)).collect();
            rotated.sort_unstable();
            rotated
        })
        .min()
        .unwrap_or_default();
    Ok(best)
}
