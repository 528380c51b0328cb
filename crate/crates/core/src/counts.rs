//! Brute-force counting of algebras with homological restrictions, compared
//! with the closed formulas.
//!
//! Each count is obtained up to three ways: homologically (enumerating
//! algebras and resolving every simple module), through the corresponding
//! Dyck path statistic, and, for the cyclic corollaries, through the cycle
//! construction applied to a brute-force series of prime Dyck paths.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::One;
use rayon::prelude::*;
use serde::Serialize;

use crate::dyck::{DyckPath, PathStats};
use crate::enumerate::{dyck_paths, generate_cyclic, generate_linear, periodic_paths, quasi_hereditary_cyclic};
use crate::formulas::{count_closed, Formula, FormulaError};
use crate::homology::{ext_profile, is_regular_profile, restricted_gorenstein_oracle, Dim};
use crate::kupisch::KupischSeries;
use crate::series::{cycle_construction, TruncatedSeries};

/// Homological summary of one algebra, computed from the resolutions of its
/// simple modules.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AlgebraStats {
    /// Simples of projective dimension 1.
    pub pdim1: usize,
    /// Simples of projective dimension 2.
    pub pdim2: usize,
    /// 1-regular simples.
    pub reg1: usize,
    /// 2-regular simples.
    pub reg2: usize,
    /// Global dimension.
    pub gd: Dim,
    /// Restricted Gorenstein (two-sided regularity oracle) when `gd ≤ 2`.
    pub restricted_gorenstein: Option<bool>,
}

impl AlgebraStats {
    /// Computes the summary.
    pub fn of(k: &KupischSeries) -> Self {
        let profiles: Vec<(Dim, Vec<usize>)> = (0..k.rank()).map(|i| ext_profile(k, i)).collect();
        let gd = profiles.iter().map(|p| p.0).max().unwrap_or(Dim::Finite(0));
        Self {
            pdim1: profiles.iter().filter(|p| p.0 == Dim::Finite(1)).count(),
            pdim2: profiles.iter().filter(|p| p.0 == Dim::Finite(2)).count(),
            reg1: profiles.iter().filter(|(p, e)| is_regular_profile(*p, e, 1)).count(),
            reg2: profiles.iter().filter(|(p, e)| is_regular_profile(*p, e, 2)).count(),
            gd,
            restricted_gorenstein: restricted_gorenstein_oracle(k).ok(),
        }
    }

    fn gd_at_most(&self, g: usize) -> bool {
        matches!(self.gd, Dim::Finite(d) if d <= g)
    }
}

/// One line of a count comparison.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CountRow {
    /// Formula compared.
    pub formula: Formula,
    /// Size parameter (semilength for linear formulas, rank for cyclic).
    pub n: usize,
    /// Secondary parameter (0 when unused).
    pub ell: usize,
    /// Homological brute-force count.
    #[serde(serialize_with = "crate::counts::as_string")]
    pub brute: BigUint,
    /// Closed formula value, or the evaluation error.
    pub formula_value: Result<String, String>,
    /// Count through the path statistic, when there is one.
    #[serde(serialize_with = "crate::counts::opt_as_string")]
    pub path_count: Option<BigUint>,
    /// Count through the cycle construction, when there is one.
    #[serde(serialize_with = "crate::counts::opt_as_string")]
    pub cycle_count: Option<BigUint>,
}

impl CountRow {
    /// All available routes agree with the closed formula.
    pub fn matches(&self) -> bool {
        let f = match &self.formula_value {
            Ok(v) => v,
            Err(_) => return false,
        };
        let b = self.brute.to_string();
        &b == f
            && self.path_count.as_ref().is_none_or(|p| p.to_string() == b)
            && self.cycle_count.as_ref().is_none_or(|c| c.to_string() == b)
    }
}

pub(crate) fn as_string<S: serde::Serializer>(v: &BigUint, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

pub(crate) fn opt_as_string<S: serde::Serializer>(v: &Option<BigUint>, s: S) -> Result<S::Ok, S::Error> {
    match v {
        Some(v) => s.serialize_some(&v.to_string()),
        None => s.serialize_none(),
    }
}

/// Returns that are not the last step of a 1-hill.  `period` is `Some(n)`
/// for periodic paths, whose positions are reduced modulo `n`.
pub fn returns_not_one_hills(st: &PathStats, period: Option<usize>) -> usize {
    let hills = st.hills_of(1);
    st.returns
        .iter()
        .filter(|&&r| {
            let start = match period {
                Some(n) => (r + n - 1) % n,
                None => r - 1,
            };
            !hills.contains(&start)
        })
        .count()
}

fn count_where<T: Sync>(items: &[T], pred: impl Fn(&T) -> bool + Sync) -> BigUint {
    BigUint::from(items.par_iter().filter(|x| pred(x)).count())
}

/// Cached homological data for all algebras up to given sizes.
pub struct CountContext {
    linear: BTreeMap<usize, Vec<AlgebraStats>>,
    linear_paths: BTreeMap<usize, Vec<PathStats>>,
    qh: BTreeMap<usize, Vec<(KupischSeries, AlgebraStats)>>,
    periodic: BTreeMap<usize, Vec<(bool, PathStats)>>,
    primes: BTreeMap<usize, Vec<PathStats>>,
}

impl CountContext {
    /// Enumerates linear algebras of semilength `1..=max_linear` and cyclic
    /// algebras of rank `1..=max_cyclic`.
    pub fn new(max_linear: usize, max_cyclic: usize) -> Self {
        let mut linear = BTreeMap::new();
        let mut linear_paths = BTreeMap::new();
        for n in 1..=max_linear {
            let algebras = generate_linear(n + 1);
            linear.insert(n, algebras.par_iter().map(AlgebraStats::of).collect());
            linear_paths.insert(n, algebras.par_iter().map(|k| DyckPath::from_kupisch(k).stats()).collect());
        }
        let mut qh = BTreeMap::new();
        let mut periodic = BTreeMap::new();
        let mut primes = BTreeMap::new();
        for n in 1..=max_cyclic {
            let algebras = quasi_hereditary_cyclic(n);
            qh.insert(n, algebras.into_par_iter().map(|k| { let s = AlgebraStats::of(&k); (k, s) }).collect());
            periodic.insert(
                n,
                periodic_paths(n).par_iter().map(|p| (p.is_constant(), p.stats())).collect(),
            );
            primes.insert(
                n,
                dyck_paths(n)
                    .into_iter()
                    .map(|d| d.stats())
                    .filter(|st| st.returns == vec![n])
                    .collect(),
            );
        }
        Self { linear, linear_paths, qh, periodic, primes }
    }

    /// Largest linear semilength available.
    pub fn max_linear(&self) -> usize {
        self.linear.keys().next_back().copied().unwrap_or(0)
    }

    /// Largest cyclic rank available.
    pub fn max_cyclic(&self) -> usize {
        self.qh.keys().next_back().copied().unwrap_or(0)
    }

    fn prime_series(&self, weight: impl Fn(&PathStats) -> usize) -> TruncatedSeries<BigRational> {
        let deg = self.max_cyclic();
        let mut s = TruncatedSeries::zero([deg, deg, 0]);
        for (m, paths) in &self.primes {
            for st in paths {
                s.add_to([*m, weight(st), 0], BigRational::one());
            }
        }
        s
    }

    fn cycles(&self, weight: impl Fn(&PathStats) -> usize, n: usize, ell: usize) -> Option<BigUint> {
        cycle_construction(&self.prime_series(weight), n, ell).ok()
    }

    /// Compares one formula at one parameter pair.
    pub fn row(&self, f: Formula, n: usize, ell: usize) -> CountRow {
        let lin = || &self.linear[&n];
        let lp = || &self.linear_paths[&n];
        let qh = || &self.qh[&n];
        let per = || &self.periodic[&n];
        let (brute, path_count, cycle_count): (BigUint, Option<BigUint>, Option<BigUint>) = match f {
            Formula::Narayana => (
                count_where(lin(), |s| s.pdim1 == ell),
                Some(count_where(lp(), |st| st.peaks.len() == ell)),
                None,
            ),
            Formula::Pdim2Count => (
                count_where(lin(), |s| s.pdim2 == ell),
                Some(count_where(lp(), |st| returns_not_one_hills(st, None) == ell)),
                None,
            ),
            Formula::Riordan => (
                count_where(lin(), |s| s.reg1 == 0),
                Some(count_where(lp(), |st| st.one_rises.is_empty())),
                None,
            ),
            Formula::No2Hills => (
                count_where(lin(), |s| s.reg2 == 0),
                Some(count_where(lp(), |st| st.hills_of(2).is_empty())),
                None,
            ),
            Formula::BalancedNecklaces => {
                let counts: Vec<usize> = (0..=2).map(|s| generate_cyclic(n, s).len()).collect();
                let same = counts.iter().all(|&c| c == counts[0]);
                (BigUint::from(counts[0]), Some(BigUint::from(if same { counts[0] } else { usize::MAX })), None)
            }
            Formula::QuasiHereditary => (
                BigUint::from(qh().len()),
                Some(count_where(per(), |(constant, _)| !constant)),
                None,
            ),
            Formula::QhMin2 => (
                count_where(qh(), |(k, _)| k.shift() == Some(0)),
                Some(count_where(per(), |(constant, st)| !constant && !st.rectangles.is_empty())),
                None,
            ),
            Formula::CPdim1 => (
                count_where(qh(), |(_, s)| s.pdim1 == ell),
                Some(count_where(per(), |(_, st)| st.peaks.len() == ell)),
                self.cycles(|st| st.peaks.len(), n, ell),
            ),
            Formula::CPdim2 => (
                count_where(qh(), |(_, s)| s.pdim2 == ell),
                Some(count_where(per(), |(_, st)| returns_not_one_hills(st, Some(n)) == ell)),
                self.cycles(|st| returns_not_one_hills(st, None), n, ell),
            ),
            Formula::CNo1Reg => (
                count_where(qh(), |(_, s)| s.reg1 == 0),
                Some(count_where(per(), |(_, st)| st.one_rises.is_empty())),
                self.cycles(|st| st.one_rises.len(), n, 0),
            ),
            Formula::CNo2Reg => (
                count_where(qh(), |(_, s)| s.reg2 == 0),
                Some(count_where(per(), |(constant, st)| !constant && st.hills_of(2).is_empty())),
                self.cycles(|st| st.hills_of(2).len(), n, 0).map(|c| c - BigUint::one()),
            ),
            Formula::Gd2Linear => (
                count_where(lin(), |s| s.gd_at_most(2) && s.pdim2 == ell),
                Some(count_where(lp(), |st| st.height <= 2 && returns_not_one_hills(st, None) == ell)),
                None,
            ),
            Formula::Gd2Cyclic => (
                count_where(qh(), |(_, s)| s.gd == Dim::Finite(2) && s.pdim2 == ell),
                None,
                None,
            ),
            Formula::FibonacciRg => (
                count_where(lin(), |s| s.gd_at_most(2) && s.restricted_gorenstein == Some(true)),
                Some(count_where(lp(), |st| {
                    st.is_bounce && {
                        let parts = &st.bounce_parts;
                        let len = parts.len();
                        parts.iter().enumerate().all(|(i, &p)| p != 1 || i == 0 || i + 1 == len)
                    }
                })),
                None,
            ),
            Formula::CyclicCompRg => (
                count_where(qh(), |(_, s)| s.gd == Dim::Finite(2) && s.restricted_gorenstein == Some(true)),
                Some(count_where(per(), |(_, st)| st.is_bounce && st.bounce_parts.iter().all(|&p| p >= 2))),
                None,
            ),
        };
        CountRow {
            formula: f,
            n,
            ell,
            brute,
            formula_value: count_closed(f, n, ell).map(|v| v.to_string()).map_err(|e: FormulaError| e.to_string()),
            path_count,
            cycle_count,
        }
    }

    /// All rows for one formula within the cached sizes.
    pub fn rows(&self, f: Formula) -> Vec<CountRow> {
        let max = if f.is_cyclic() { self.max_cyclic() } else { self.max_linear() };
        f.parameters(max).into_iter().map(|(n, l)| self.row(f, n, l)).collect()
    }

    /// All rows for all formulas.
    pub fn table(&self) -> Vec<CountRow> {
        Formula::ALL.iter().flat_map(|&f| self.rows(f)).collect()
    }
}

/// Brute-force homological count for one formula at one parameter pair.
pub fn brute_count(f: Formula, n: usize, ell: usize) -> BigUint {
    let (lin, cyc) = if f.is_cyclic() { (0, n) } else { (n, 0) };
    CountContext::new(lin, cyc).row(f, n, ell).brute
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_table_matches() {
        let ctx = CountContext::new(6, 6);
        for row in ctx.table() {
            assert!(row.matches(), "{row:?}");
        }
    }
}
