//! Syzygies, projective dimensions and `Ext^ℓ(S_i, A)` for Nakayama algebras.
//!
//! The minimal projective resolution of a simple module is computed by
//! iterating `Ω(b_{a,m}) = b_{a+m, c_a - m}`.  Extension groups against the
//! regular module are obtained as the cohomology of the dualised resolution:
//! `Hom(e_a A, A) ≅ A e_a` has dimension `d_a`, and the dual of left
//! multiplication by a path of length `k` from `a` to `b` is right
//! multiplication `A e_a → A e_b`, a monomial map whose rank is
//! `max(0, min(d_a, d_b − k))`.  Everything is field independent.

use crate::dyck::{DyckPath, PeriodicDyckPath};
use crate::kupisch::{IndModule, Kind, KupischSeries};
use num_bigint::BigUint;
use serde::{Deserialize, Serialize};
use std::fmt;
use thiserror::Error;

/// Default bound on the number of resolution stages computed for modules of
/// infinite projective dimension.
pub const DEFAULT_STAGE_BOUND: usize = 64;

/// A natural number or infinity.  Serialised as a JSON integer, or the
/// string `"inf"`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "DimRepr", try_from = "DimRepr")]
pub enum Dim {
    /// A finite value.
    Finite(usize),
    /// Infinity.
    Infinite,
}

impl Dim {
    /// The finite value, if any.
    pub fn finite(self) -> Option<usize> {
        match self {
            Dim::Finite(v) => Some(v),
            Dim::Infinite => None,
        }
    }
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum DimRepr {
    Finite(usize),
    Symbol(String),
}

impl From<Dim> for DimRepr {
    fn from(d: Dim) -> Self {
        match d {
            Dim::Finite(v) => DimRepr::Finite(v),
            Dim::Infinite => DimRepr::Symbol("inf".into()),
        }
    }
}

impl TryFrom<DimRepr> for Dim {
    type Error = String;

    fn try_from(r: DimRepr) -> Result<Self, Self::Error> {
        match r {
            DimRepr::Finite(v) => Ok(Dim::Finite(v)),
            DimRepr::Symbol(s) if s == "inf" => Ok(Dim::Infinite),
            DimRepr::Symbol(s) => Err(format!("expected an integer or \"inf\", got {s:?}")),
        }
    }
}

impl fmt::Display for Dim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Dim::Finite(v) => write!(f, "{v}"),
            Dim::Infinite => f.write_str("inf"),
        }
    }
}

/// Errors raised by the homological routines.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum HomologyError {
    /// The requested stage exceeds the configured bound.
    #[error("resolution stage {0} exceeds the stage bound")]
    StageBound(usize),
    /// The operation requires global dimension at most 2.
    #[error("global dimension exceeds 2")]
    NotGd2,
}

/// The syzygy of an indecomposable module; `None` for projective modules.
pub fn syzygy(k: &KupischSeries, m: IndModule) -> Option<IndModule> {
    let ca = k.entries()[m.vertex];
    if m.length >= ca {
        return None;
    }
    let top = k.vertex((m.vertex + m.length) as isize) as usize;
    Some(IndModule::new(top, ca - m.length))
}

/// The minimal projective resolution of a simple module, up to a stage bound.
///
/// Stage `ℓ` is the projective cover `e_{a_ℓ} A` of `Ω^ℓ(S_i) = b_{a_ℓ, k_ℓ}`;
/// the map from stage `ℓ+1` to stage `ℓ` is left multiplication by the path of
/// length `k_ℓ` from `a_ℓ` to `a_{ℓ+1} = a_ℓ + k_ℓ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjResolution {
    /// The syzygy modules `Ω^0(S_i), Ω^1(S_i), …` (tops and lengths).
    pub syzygies: Vec<IndModule>,
    /// Whether the resolution terminates (last syzygy projective).
    pub finite: bool,
}

impl ProjResolution {
    /// Computes the resolution of `S_i`; stops once a syzygy is projective,
    /// a state repeats, or `stages` syzygies have been produced.
    pub fn of_simple(k: &KupischSeries, i: usize, stages: usize) -> Self {
        let mut syzygies = vec![IndModule::simple(i)];
        loop {
            let last = *syzygies.last().expect("non-empty");
            if last.is_projective(k) {
                return Self { syzygies, finite: true };
            }
            if syzygies.len() >= stages {
                return Self { syzygies, finite: false };
            }
            syzygies.push(syzygy(k, last).expect("non-projective module has a syzygy"));
        }
    }

    /// Tops `a_ℓ` of the projective terms.
    pub fn tops(&self) -> Vec<usize> {
        self.syzygies.iter().map(|m| m.vertex).collect()
    }

    /// Connecting path lengths `k_ℓ`.
    pub fn lengths(&self) -> Vec<usize> {
        self.syzygies.iter().map(|m| m.length).collect()
    }
}

/// Projective dimension of `S_i`, detecting infinite dimension by a repeated
/// state of the syzygy orbit.
pub fn pdim_simple(k: &KupischSeries, i: usize) -> Dim {
    pdim_module(k, IndModule::simple(i))
}

/// Projective dimension of an indecomposable module.
pub fn pdim_module(k: &KupischSeries, m: IndModule) -> Dim {
    // Syzygies of a linear algebra strictly increase the top vertex, so the
    // orbit terminates; for cyclic algebras a repeated state means a cycle.
    let mut seen: Vec<IndModule> = Vec::new();
    let mut current = m;
    let mut steps = 0usize;
    loop {
        if current.is_projective(k) {
            return Dim::Finite(steps);
        }
        if k.is_cyclic() {
            if seen.contains(&current) {
                return Dim::Infinite;
            }
            seen.push(current);
        }
        current = syzygy(k, current).expect("non-projective module has a syzygy");
        steps += 1;
    }
}

/// Whether an indecomposable module is injective: `b_{i,m}` is injective iff
/// `c_{i-1} ≤ m` (with `c_{-1} = 0` for linear algebras).
pub fn is_injective(k: &KupischSeries, m: IndModule) -> bool {
    k.c(m.vertex as isize - 1) <= m.length
}

/// Rank of the dualised differential `A e_a → A e_b` given by right
/// multiplication with the path of length `len` from `a` to `b`.
fn dual_rank(k: &KupischSeries, a: usize, b: usize, len: usize) -> usize {
    k.d(a as isize).min(k.d(b as isize).saturating_sub(len))
}

/// Rank of the same map obtained by enumerating basis paths: a path of length
/// `t` ending at `a` starts at `a - t` and survives multiplication by a path
/// of length `len` iff `t + len < c_{a-t}`.  Used as an internal cross-check
/// of the closed form.
pub fn dual_rank_by_paths(k: &KupischSeries, a: usize, len: usize) -> usize {
    let a = a as isize;
    let mut rank = 0;
    let mut t = 0isize;
    // Basis of A e_a: paths of length t from a - t, nonzero iff t < c_{a-t}.
    while (t as usize) < k.c(a - t) {
        if (t as usize) + len < k.c(a - t) {
            rank += 1;
        }
        t += 1;
    }
    rank
}

/// `dim Ext^ℓ(S_i, A)`, computed from the dualised minimal projective
/// resolution.  Returns `0` beyond the projective dimension.
pub fn ext_dim(k: &KupischSeries, i: usize, l: usize) -> Result<usize, HomologyError> {
    ext_dim_with(k, i, l, DEFAULT_STAGE_BOUND, dual_rank_closed)
}

/// Same as [`ext_dim`] but computing ranks by basis-path enumeration.
pub fn ext_dim_by_paths(k: &KupischSeries, i: usize, l: usize) -> Result<usize, HomologyError> {
    ext_dim_with(k, i, l, DEFAULT_STAGE_BOUND, |k, a, _b, len| dual_rank_by_paths(k, a, len))
}

fn dual_rank_closed(k: &KupischSeries, a: usize, b: usize, len: usize) -> usize {
    dual_rank(k, a, b, len)
}

fn ext_dim_with(
    k: &KupischSeries,
    i: usize,
    l: usize,
    bound: usize,
    rank: impl Fn(&KupischSeries, usize, usize, usize) -> usize,
) -> Result<usize, HomologyError> {
    if l + 2 > bound {
        return Err(HomologyError::StageBound(l));
    }
    let res = ProjResolution::of_simple(k, i, l + 2);
    let syz = &res.syzygies;
    if l >= syz.len() {
        return Ok(0);
    }
    let term = |j: usize| k.d(syz[j].vertex as isize);
    // rank of Hom(P_j, A) → Hom(P_{j+1}, A); zero when P_{j+1} does not exist.
    let rank_at = |j: usize| -> usize {
        if j + 1 < syz.len() {
            rank(k, syz[j].vertex, syz[j + 1].vertex, syz[j].length)
        } else {
            0
        }
    };
    let incoming = if l == 0 { 0 } else { rank_at(l - 1) };
    Ok(term(l) - rank_at(l) - incoming)
}

/// Projective dimension of `S_i` together with `dim Ext^ℓ(S_i, A)` for
/// `0 ≤ ℓ ≤ pdim`, from a single pass over the resolution (empty when the
/// dimension is infinite).
pub fn ext_profile(k: &KupischSeries, i: usize) -> (Dim, Vec<usize>) {
    let pdim = pdim_simple(k, i);
    let p = match pdim {
        Dim::Finite(p) => p,
        Dim::Infinite => return (pdim, Vec::new()),
    };
    let syz = ProjResolution::of_simple(k, i, p + 1).syzygies;
    let rank_at = |j: usize| -> usize {
        if j + 1 < syz.len() {
            dual_rank(k, syz[j].vertex, syz[j + 1].vertex, syz[j].length)
        } else {
            0
        }
    };
    let dims = (0..=p)
        .map(|l| {
            let incoming = if l == 0 { 0 } else { rank_at(l - 1) };
            k.d(syz[l].vertex as isize) - rank_at(l) - incoming
        })
        .collect();
    (pdim, dims)
}

/// Regularity read off an [`ext_profile`]: projective dimension `deg`,
/// vanishing `Ext` below `deg` and one-dimensional `Ext^deg`.
pub fn is_regular_profile(pdim: Dim, ext: &[usize], deg: usize) -> bool {
    pdim == Dim::Finite(deg) && ext.len() == deg + 1 && ext[..deg].iter().all(|&e| e == 0) && ext[deg] == 1
}

/// `S_i` is `k`-regular: projective dimension `k`, `Ext^j(S_i, A) = 0` for
/// `j < k` and `dim Ext^k(S_i, A) = 1`.  Evaluated through the resolution.
pub fn regular_oracle(k: &KupischSeries, i: usize, deg: usize) -> bool {
    if pdim_simple(k, i) != Dim::Finite(deg) {
        return false;
    }
    (0..deg).all(|j| ext_dim(k, i, j) == Ok(0)) && ext_dim(k, i, deg) == Ok(1)
}

/// Signed entry helpers for the combinatorial criteria.
fn ci(k: &KupischSeries, i: isize) -> isize {
    k.c(i) as isize
}

fn di(k: &KupischSeries, i: isize) -> isize {
    k.d(i) as isize
}

fn in_range(k: &KupischSeries, i: isize) -> bool {
    k.is_cyclic() || (0..k.rank() as isize).contains(&i)
}

/// 1-regularity by the combinatorial criterion `c_i − c_{i+1} = d_{i+1} − d_i = 1`.
pub fn regular1(k: &KupischSeries, i: usize) -> bool {
    let i = i as isize;
    if k.simple_is_projective(i as usize) || !in_range(k, i + 1) {
        return false;
    }
    ci(k, i) - ci(k, i + 1) == 1 && di(k, i + 1) - di(k, i) == 1
}

/// 2-regularity by the combinatorial criterion
/// `c_i = d_{i+2} = 2` and `c_{i+1} − c_{i+2} = d_{i+1} − d_i = 1`.
pub fn regular2(k: &KupischSeries, i: usize) -> bool {
    let i = i as isize;
    if k.simple_is_projective(i as usize) || !in_range(k, i + 2) {
        return false;
    }
    ci(k, i) == 2
        && di(k, i + 2) == 2
        && ci(k, i + 1) - ci(k, i + 2) == 1
        && di(k, i + 1) - di(k, i) == 1
}

/// `k`-regularity: combinatorial for `k ∈ {1, 2}`, the resolution otherwise.
pub fn regular_k(k: &KupischSeries, i: usize, deg: usize) -> bool {
    match deg {
        1 => regular1(k, i),
        2 => regular2(k, i),
        _ => regular_oracle(k, i, deg),
    }
}

/// Projective dimension one, by `c_{i+1} + 1 = c_i`.
pub fn pdim1_criterion(k: &KupischSeries, i: usize) -> bool {
    let i = i as isize;
    !k.simple_is_projective(i as usize) && in_range(k, i + 1) && ci(k, i + 1) + 1 == ci(k, i)
}

/// Projective dimension two, by `c_{i+1} + 1 = c_{i+c_i} + c_i`.
pub fn pdim2_criterion(k: &KupischSeries, i: usize) -> bool {
    let i = i as isize;
    if k.simple_is_projective(i as usize) {
        return false;
    }
    let c = ci(k, i);
    in_range(k, i + c) && ci(k, i + 1) + 1 == ci(k, i + c) + c
}

/// `Hom(S_i, A) = 0` by `d_{i+1} = d_i + 1` (non-projective `S_i`).
pub fn hom_vanishes_criterion(k: &KupischSeries, i: usize) -> bool {
    let i = i as isize;
    di(k, i + 1) == di(k, i) + 1
}

/// `Ext^1(S_i, A) = 0` by `c_i < c_{i+1} + 1` (non-projective `S_i`).
pub fn ext1_vanishes_criterion(k: &KupischSeries, i: usize) -> bool {
    let i = i as isize;
    ci(k, i) < ci(k, i + 1) + 1
}

/// `dim Ext^2(S_i, A) = 1` by `d_{i+1} + 1 = d_i + d_{i+c_i}`, valid when
/// `Hom` and `Ext^1` vanish and the projective dimension is two.
pub fn ext2_one_criterion(k: &KupischSeries, i: usize) -> bool {
    let i = i as isize;
    di(k, i + 1) + 1 == di(k, i) + di(k, i + ci(k, i))
}

/// Global dimension: the maximal projective dimension of a simple module.
pub fn global_dimension(k: &KupischSeries) -> Dim {
    (0..k.rank())
        .map(|i| pdim_simple(k, i))
        .max()
        .unwrap_or(Dim::Finite(0))
}

/// Global dimension at most two, by the valley criterion: every
/// non-projective `S_i` has `c_{i+1} + 1 ∈ {c_i, c_{i+c_i} + c_i}`.
pub fn gd_at_most_2_criterion(k: &KupischSeries) -> bool {
    (0..k.rank())
        .filter(|&i| !k.simple_is_projective(i))
        .all(|i| pdim1_criterion(k, i) || pdim2_criterion(k, i))
}

/// Quasi-heredity: always for linear algebras; for cyclic algebras iff some
/// simple module has projective dimension exactly two.
pub fn is_quasi_hereditary(k: &KupischSeries) -> bool {
    match k.kind() {
        Kind::Linear => true,
        Kind::Cyclic => (0..k.rank()).any(|i| pdim_simple(k, i) == Dim::Finite(2)),
    }
}

/// Restricted Gorenstein condition for global dimension at most two, by the
/// path criterion: a bounce path whose interior parts are all at least 2
/// (linear), or a periodic bounce path without parts of size one (cyclic).
pub fn restricted_gorenstein_gd2(k: &KupischSeries) -> Result<bool, HomologyError> {
    match global_dimension(k) {
        Dim::Finite(g) if g <= 2 => {}
        _ => return Err(HomologyError::NotGd2),
    }
    Ok(match k.kind() {
        Kind::Linear => match DyckPath::from_kupisch(k).bounce_parts() {
            None => false,
            Some(parts) => {
                let len = parts.len();
                parts
                    .iter()
                    .enumerate()
                    .all(|(idx, &p)| p != 1 || idx == 0 || idx + 1 == len)
            }
        },
        Kind::Cyclic => {
            let st = PeriodicDyckPath::from_kupisch(k).stats();
            st.is_bounce && st.bounce_parts.iter().all(|&p| p >= 2)
        }
    })
}

/// Restricted Gorenstein condition evaluated homologically: with `g` the
/// global dimension, every simple right and left module of projective
/// dimension `g` is `g`-regular.
pub fn restricted_gorenstein_oracle(k: &KupischSeries) -> Result<bool, HomologyError> {
    let g = match global_dimension(k) {
        Dim::Finite(g) if g <= 2 => g,
        _ => return Err(HomologyError::NotGd2),
    };
    let side = |a: &KupischSeries| {
        (0..a.rank())
            .filter(|&i| pdim_simple(a, i) == Dim::Finite(g))
            .all(|i| regular_oracle(a, i, g))
    };
    Ok(side(k) && side(&k.opposite_labelled()))
}

/// Number of exact structures on the category of projective modules:
/// `2^m` with `m` the number of 2-regular simple modules.
pub fn exact_structure_count(k: &KupischSeries) -> BigUint {
    let m = (0..k.rank()).filter(|&i| regular2(k, i)).count();
    BigUint::from(1u8) << m
}

/// Per-simple homological data.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SimpleRecord {
    /// Vertex index.
    pub index: usize,
    /// Projective dimension.
    pub pdim: Dim,
    /// `dim Ext^ℓ(S_i, A)` for `0 ≤ ℓ ≤ pdim` (empty when infinite).
    pub ext_dims: Vec<usize>,
    /// 1-regular.
    pub regular1: bool,
    /// 2-regular.
    pub regular2: bool,
}

/// Homological profile of an algebra.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomProfile {
    /// Per-simple records.
    pub simples: Vec<SimpleRecord>,
    /// Global dimension.
    pub global_dimension: Dim,
    /// Quasi-heredity.
    pub quasi_hereditary: bool,
    /// Restricted Gorenstein condition; `None` when the global dimension
    /// exceeds two.
    pub restricted_gorenstein_gd2: Option<bool>,
    /// Number of exact structures (decimal string in JSON).
    #[serde(with = "biguint_string")]
    pub exact_structures: BigUint,
}

impl HomProfile {
    /// Computes the full profile.
    pub fn of(k: &KupischSeries) -> Self {
        let simples = (0..k.rank())
            .map(|i| {
                let pdim = pdim_simple(k, i);
                let ext_dims = match pdim {
                    Dim::Finite(p) => (0..=p).map(|l| ext_dim(k, i, l).unwrap_or(0)).collect(),
                    Dim::Infinite => Vec::new(),
                };
                SimpleRecord {
                    index: i,
                    pdim,
                    ext_dims,
                    regular1: regular1(k, i),
                    regular2: regular2(k, i),
                }
            })
            .collect();
        Self {
            simples,
            global_dimension: global_dimension(k),
            quasi_hereditary: is_quasi_hereditary(k),
            restricted_gorenstein_gd2: restricted_gorenstein_gd2(k).ok(),
            exact_structures: exact_structure_count(k),
        }
    }

    /// Indices of simples satisfying a predicate.
    pub fn indices(&self, pred: impl Fn(&SimpleRecord) -> bool) -> Vec<usize> {
        self.simples.iter().filter(|s| pred(s)).map(|s| s.index).collect()
    }

    /// 1-regular simples.
    pub fn reg1(&self) -> Vec<usize> {
        self.indices(|s| s.regular1)
    }

    /// 2-regular simples.
    pub fn reg2(&self) -> Vec<usize> {
        self.indices(|s| s.regular2)
    }

    /// Simples of projective dimension `p`.
    pub fn pdim_eq(&self, p: usize) -> Vec<usize> {
        self.indices(|s| s.pdim == Dim::Finite(p))
    }
}

mod biguint_string {
    use num_bigint::BigUint;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &BigUint, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&v.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigUint, D::Error> {
        let text = String::deserialize(d)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lin(v: &[usize]) -> KupischSeries {
        KupischSeries::linear(v.to_vec()).unwrap()
    }

    fn cyc(v: &[usize]) -> KupischSeries {
        KupischSeries::cyclic(v.to_vec()).unwrap()
    }

    #[test]
    fn syzygy_examples() {
        let k = lin(&[3, 2, 2, 1]);
        assert_eq!(syzygy(&k, IndModule::simple(1)), Some(IndModule::new(2, 1)));
        assert_eq!(syzygy(&k, IndModule::new(2, 1)), Some(IndModule::new(3, 1)));
        assert_eq!(pdim_simple(&k, 1), Dim::Finite(2));
        assert_eq!(syzygy(&k, IndModule::new(0, 3)), None);
        let s = cyc(&[2, 2]);
        assert_eq!(syzygy(&s, IndModule::simple(0)), Some(IndModule::new(1, 1)));
        assert_eq!(syzygy(&s, IndModule::simple(1)), Some(IndModule::new(0, 1)));
        assert_eq!(pdim_simple(&s, 0), Dim::Infinite);
    }

    #[test]
    fn pdim_examples() {
        let k = lin(&[2, 2, 2, 2, 1]);
        let p: Vec<Dim> = (0..4).map(|i| pdim_simple(&k, i)).collect();
        assert_eq!(p, vec![Dim::Finite(4), Dim::Finite(3), Dim::Finite(2), Dim::Finite(1)]);
        assert!((0..3).all(|i| pdim_simple(&cyc(&[2, 2, 2]), i) == Dim::Infinite));
        let c = cyc(&[3, 2]);
        assert_eq!(pdim_simple(&c, 0), Dim::Finite(1));
        assert_eq!(pdim_simple(&c, 1), Dim::Finite(2));
    }

    #[test]
    fn ext_examples() {
        let k = lin(&[4, 3, 2, 2, 1]);
        assert_eq!(ext_dim(&k, 2, 2), Ok(1));
        assert_eq!(ext_dim(&k, 0, 0), Ok(0));
        assert_eq!(ext_dim(&k, 0, 1), Ok(1));
        assert!(ext_dim(&k, 4, 0).unwrap() >= 1);
        assert!(regular1(&k, 0) && regular1(&k, 1) && regular2(&k, 2));
        assert!(!regular1(&k, 3) && pdim_simple(&k, 3) == Dim::Finite(1));
    }

    #[test]
    fn regularity_examples() {
        let k = lin(&[3, 2, 2, 1]);
        assert_eq!((0..4).filter(|&i| regular1(&k, i)).collect::<Vec<_>>(), vec![0]);
        assert_eq!((0..4).filter(|&i| regular2(&k, i)).collect::<Vec<_>>(), vec![1]);
        let k = lin(&[2, 3, 2, 2, 1]);
        assert_eq!((0..5).filter(|&i| regular2(&k, i)).collect::<Vec<_>>(), vec![0, 2]);
        let c = cyc(&[3, 2, 4, 3, 2]);
        assert_eq!((0..5).filter(|&i| regular2(&c, i)).collect::<Vec<_>>(), vec![1, 4]);
        assert_eq!(exact_structure_count(&c), BigUint::from(4u8));
    }

    #[test]
    fn global_dimension_examples() {
        let k = lin(&[5, 4, 10, 9, 8, 7, 6, 5, 4, 4, 3, 2, 1]);
        assert_eq!(global_dimension(&k), Dim::Finite(2));
        let p2: Vec<usize> = (0..13).filter(|&i| pdim_simple(&k, i) == Dim::Finite(2)).collect();
        assert_eq!(p2, vec![1, 8]);
        assert_eq!(global_dimension(&lin(&[4, 3, 2, 1])), Dim::Finite(1));
        assert_eq!(global_dimension(&cyc(&[2, 2, 3, 2])), Dim::Finite(4));
        assert_eq!(global_dimension(&lin(&[1])), Dim::Finite(0));
    }

    #[test]
    fn quasi_hereditary_examples() {
        assert!(is_quasi_hereditary(&cyc(&[2, 3, 2])));
        assert!(!is_quasi_hereditary(&cyc(&[2, 2])));
        assert!(is_quasi_hereditary(&cyc(&[5, 4, 3])));
    }

    #[test]
    fn restricted_gorenstein_examples() {
        assert_eq!(restricted_gorenstein_gd2(&lin(&[3, 2, 3, 2, 1])), Ok(true));
        assert_eq!(restricted_gorenstein_oracle(&lin(&[3, 2, 3, 2, 1])), Ok(true));
        // Parts (1,2,1): the singletons are the first and last part.
        assert_eq!(restricted_gorenstein_gd2(&lin(&[2, 3, 2, 2, 1])), Ok(true));
        assert_eq!(restricted_gorenstein_oracle(&lin(&[2, 3, 2, 2, 1])), Ok(true));
        assert_eq!(
            restricted_gorenstein_gd2(&lin(&[2, 2, 2, 1])),
            Err(HomologyError::NotGd2)
        );
    }
}
