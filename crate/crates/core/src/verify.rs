//! Verification suites: exhaustive cross-checks of the combinatorial
//! criteria, bijections, counting formulas, generating functions and
//! reference tables against homological computations.
//!
//! Every check enumerates all algebras (or paths) up to a size bound and
//! records the number of cases examined together with the first few
//! counterexamples.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use serde::Serialize;
use thiserror::Error;

use crate::bijections::{
    bjs, bjs_crosses, gd2_cyclic_pairs, gd2_to_subset, lk, lk_periodic, lk_periodic_anchored, lk_periodic_anchors, phi, subset_to_gd2,
    zeta, zeta_labelling, reflected_path, reflected_periodic_path, Permutation321,
};
use crate::counts::{returns_not_one_hills, CountContext};
use crate::dyck::{DyckPath, PeriodicDyckPath};
use crate::enumerate::{dyck_paths, generate_cyclic, generate_linear, quasi_hereditary_cyclic};
use crate::formulas::{binomial, count_closed, Formula};
use crate::homology::{
    ext1_vanishes_criterion, ext2_one_criterion, ext_dim, ext_dim_by_paths, ext_profile, gd_at_most_2_criterion,
    global_dimension,
    hom_vanishes_criterion, is_quasi_hereditary, is_regular_profile, pdim1_criterion, pdim2_criterion, regular1,
    regular2, restricted_gorenstein_gd2, restricted_gorenstein_oracle, Dim,
};
use crate::kupisch::{Kind, KupischSeries};
use crate::series::{gf_verify, GfIdentity};
use crate::sharpness::sharpness_check;
use crate::tables::verify_tables;

/// Number of counterexamples kept per check.
const MAX_FAILURES: usize = 5;

/// Verification suites.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    /// Combinatorial criteria against homological computation.
    Oracle,
    /// Bijections and statistic transport.
    Bijections,
    /// Counting formulas and sharp bounds.
    Counts,
    /// Generating-function identities.
    Gf,
    /// Reference tables of small algebras.
    Fig5,
}

impl Suite {
    /// Every suite in execution order.
    pub const ALL: [Suite; 5] = [Suite::Oracle, Suite::Bijections, Suite::Counts, Suite::Gf, Suite::Fig5];

    /// Command-line name.
    pub fn name(self) -> &'static str {
        match self {
            Suite::Oracle => "oracle",
            Suite::Bijections => "bijections",
            Suite::Counts => "counts",
            Suite::Gf => "gf",
            Suite::Fig5 => "fig5",
        }
    }

    /// Default size bound.
    pub fn default_max_n(self) -> usize {
        match self {
            Suite::Oracle | Suite::Bijections => 9,
            Suite::Counts => 10,
            Suite::Gf => 12,
            Suite::Fig5 => 5,
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Unknown suite name.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("unknown suite '{0}' (expected oracle, bijections, counts, gf, fig5 or all)")]
pub struct UnknownSuite(pub String);

/// Parses a suite selector; `all` selects every suite.
pub fn parse_suites(text: &str) -> Result<Vec<Suite>, UnknownSuite> {
    match text {
        "all" => Ok(Suite::ALL.to_vec()),
        other => Suite::from_str(other).map(|s| vec![s]),
    }
}

impl FromStr for Suite {
    type Err = UnknownSuite;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "oracle" => Ok(Suite::Oracle),
            "bijections" => Ok(Suite::Bijections),
            "counts" => Ok(Suite::Counts),
            "gf" => Ok(Suite::Gf),
            "fig5" | "tables" => Ok(Suite::Fig5),
            other => Err(UnknownSuite(other.to_string())),
        }
    }
}

/// Result of one check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    /// Name of the statement checked.
    pub name: String,
    /// Size bound used.
    pub max_n: usize,
    /// Number of cases examined.
    pub cases: usize,
    /// First counterexamples (empty on success).
    pub failures: Vec<String>,
    /// Total number of counterexamples.
    pub failure_count: usize,
    /// Wall-clock time in milliseconds.
    pub elapsed_ms: u128,
}

impl Check {
    /// No counterexample was found and at least one case was examined.
    pub fn passed(&self) -> bool {
        self.failure_count == 0 && self.cases > 0
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {} (n ≤ {}, {} cases, {} ms)",
            if self.passed() { "PASS" } else { "FAIL" },
            self.name,
            self.max_n,
            self.cases,
            self.elapsed_ms
        )?;
        for failure in &self.failures {
            write!(f, "\n    {failure}")?;
        }
        if self.failure_count > self.failures.len() {
            write!(f, "\n    … {} more", self.failure_count - self.failures.len())?;
        }
        Ok(())
    }
}

/// Accumulates cases and counterexamples while a check runs.
#[derive(Debug, Default)]
pub struct Tally {
    cases: usize,
    failures: Vec<String>,
    failure_count: usize,
}

impl Tally {
    /// Records one case with its outcome; `detail` is evaluated only on
    /// failure.
    pub fn case(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failure_count += 1;
            if self.failures.len() < MAX_FAILURES {
                self.failures.push(detail());
            }
        }
    }
}

/// Runs a check body with timing.
pub fn run_check(name: &str, max_n: usize, body: impl FnOnce(&mut Tally)) -> Check {
    let start = Instant::now();
    let mut tally = Tally::default();
    body(&mut tally);
    Check {
        name: name.to_string(),
        max_n,
        cases: tally.cases,
        failures: tally.failures,
        failure_count: tally.failure_count,
        elapsed_ms: start.elapsed().as_millis(),
    }
}

/// Report of one suite.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    /// Suite run.
    pub suite: Suite,
    /// Size bound.
    pub max_n: usize,
    /// Checks in execution order.
    pub checks: Vec<Check>,
}

impl SuiteReport {
    /// Every check passed.
    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }
}

/// Runs one suite with the given bound (`None` for the default).
pub fn run_suite(suite: Suite, max_n: Option<usize>) -> SuiteReport {
    let n = max_n.unwrap_or_else(|| suite.default_max_n());
    let checks = match suite {
        Suite::Oracle => vec![
            criteria_vs_oracle(n),
            ext_by_paths(n),
            hatted_path_regularity(n),
            gd2_criterion_vs_oracle(n),
            restricted_gorenstein_vs_oracle(n),
        ],
        Suite::Bijections => vec![
            lk_transport(n),
            lk_involution(n + 1),
            lk_periodic_transport(n),
            lk_periodic_classes(n.min(8)),
            phi_transport(n),
            bjs_properties(n.min(8)),
            bjs_fixed_points(n.min(8)),
            rectangle_return(n),
            gd2_height(n),
            zeta_transport(n),
            gd2_subsets(n + 1),
            gd2_cyclic_classes(n + 1),
            gd2_two_regular(n),
            cyclic_regular_classes(n),
        ],
        Suite::Counts => {
            vec![
                formula_counts(n),
                formula_spot_values(),
                restricted_gorenstein_counts(n + 2),
                sharp_bounds(n + 2, n),
            ]
        }
        Suite::Gf => vec![gf_identity(GfIdentity::Pdim, n), gf_identity(GfIdentity::Regularity, n)],
        Suite::Fig5 => vec![tables_golden()],
    };
    SuiteReport { suite, max_n: n, checks }
}

/// Every linear algebra of rank `1..=max_rank` and every shift-0 cyclic
/// algebra of rank `1..=max_rank`.
pub fn oracle_algebras(max_rank: usize) -> Vec<KupischSeries> {
    let mut v: Vec<KupischSeries> = (1..=max_rank).flat_map(generate_linear).collect();
    v.extend((1..=max_rank).flat_map(|n| generate_cyclic(n, 0)));
    v
}

fn profile_sets(k: &KupischSeries) -> (Vec<(Dim, Vec<usize>)>, BTreeSet<usize>, BTreeSet<usize>) {
    let profiles: Vec<(Dim, Vec<usize>)> = (0..k.rank()).map(|i| ext_profile(k, i)).collect();
    let reg = |deg| {
        profiles
            .iter()
            .enumerate()
            .filter(|(_, (p, e))| is_regular_profile(*p, e, deg))
            .map(|(i, _)| i)
            .collect()
    };
    let (r1, r2) = (reg(1), reg(2));
    (profiles, r1, r2)
}

fn set<I: IntoIterator<Item = usize>>(it: I) -> BTreeSet<usize> {
    it.into_iter().collect()
}

/// Projective-dimension, Hom/Ext and regularity criteria against the
/// resolution for every simple of every algebra of rank `≤ max_rank`.
pub fn criteria_vs_oracle(max_rank: usize) -> Check {
    run_check("criteria agree with homological computation", max_rank, |t| {
        for k in oracle_algebras(max_rank) {
            for i in 0..k.rank() {
                let (pdim, _) = ext_profile(&k, i);
                let e = |l| ext_dim(&k, i, l).unwrap_or(usize::MAX);
                let projective = k.simple_is_projective(i);
                let mut bad = Vec::new();
                if pdim1_criterion(&k, i) != (pdim == Dim::Finite(1)) {
                    bad.push("pdim 1");
                }
                if pdim2_criterion(&k, i) != (pdim == Dim::Finite(2)) {
                    bad.push("pdim 2");
                }
                if !projective {
                    if hom_vanishes_criterion(&k, i) != (e(0) == 0) {
                        bad.push("Hom vanishing");
                    }
                    if ext1_vanishes_criterion(&k, i) != (e(1) == 0) {
                        bad.push("Ext1 vanishing");
                    }
                    if e(0) == 0 && e(1) == 0 && pdim == Dim::Finite(2) && ext2_one_criterion(&k, i) != (e(2) == 1) {
                        bad.push("Ext2 one-dimensional");
                    }
                }
                let (p, ext) = ext_profile(&k, i);
                if regular1(&k, i) != is_regular_profile(p, &ext, 1) {
                    bad.push("1-regular");
                }
                if regular2(&k, i) != is_regular_profile(p, &ext, 2) {
                    bad.push("2-regular");
                }
                t.case(bad.is_empty(), || format!("{k} S_{i}: {}", bad.join(", ")));
            }
        }
    })
}

/// Ext dimensions from the closed-form dual ranks against basis-path
/// enumeration, degrees `0..=3`.
pub fn ext_by_paths(max_rank: usize) -> Check {
    run_check("Ext dimensions agree with basis-path ranks", max_rank, |t| {
        for k in oracle_algebras(max_rank) {
            for i in 0..k.rank() {
                for l in 0..=3 {
                    let (a, b) = (ext_dim(&k, i, l), ext_dim_by_paths(&k, i, l));
                    t.case(a == b, || format!("{k} S_{i} Ext^{l}: {a:?} vs {b:?}"));
                }
            }
        }
    })
}

/// `S_i` is 1-regular iff the hatted path has a double rise in column `i`
/// and a double fall in row `i+1` (linear algebras).
pub fn hatted_path_regularity(max_rank: usize) -> Check {
    run_check("1-regular iff hatted double rise and double fall", max_rank, |t| {
        for n in 1..=max_rank {
            for k in generate_linear(n) {
                let d = DyckPath::from_kupisch(&k);
                let (rises, falls) = d.hatted_rises_falls();
                let (_, r1, _) = profile_sets(&k);
                let predicted = set((0..k.rank()).filter(|&i| rises.contains(&i) && falls.contains(&(i + 1))));
                t.case(predicted == r1, || format!("{k}: path {predicted:?}, homology {r1:?}"));
            }
        }
    })
}

/// The valley criterion for global dimension at most two against the
/// resolution.
pub fn gd2_criterion_vs_oracle(max_rank: usize) -> Check {
    run_check("global dimension ≤ 2 criterion", max_rank, |t| {
        for k in oracle_algebras(max_rank) {
            let gd = (0..k.rank()).map(|i| ext_profile(&k, i).0).max().unwrap_or(Dim::Finite(0));
            let oracle = matches!(gd, Dim::Finite(g) if g <= 2);
            t.case(gd_at_most_2_criterion(&k) == oracle, || format!("{k}: gd {gd}"));
        }
    })
}

/// Linear gd ≤ 2 algebras of rank `≤ max_rank` and quasi-hereditary cyclic
/// algebras of global dimension 2 and rank `≤ max_rank`.
pub fn gd2_algebras(max_rank: usize) -> Vec<KupischSeries> {
    let mut v: Vec<KupischSeries> = (1..=max_rank)
        .flat_map(generate_linear)
        .filter(gd_at_most_2_criterion)
        .collect();
    v.extend(
        (1..=max_rank)
            .flat_map(quasi_hereditary_cyclic)
            .filter(gd_at_most_2_criterion),
    );
    v
}

/// The bounce-path criterion for the restricted Gorenstein condition
/// against the two-sided regularity oracle.
pub fn restricted_gorenstein_vs_oracle(max_rank: usize) -> Check {
    run_check("restricted Gorenstein: bounce criterion vs two-sided oracle", max_rank, |t| {
        for k in gd2_algebras(max_rank) {
            let (a, b) = (restricted_gorenstein_gd2(&k), restricted_gorenstein_oracle(&k));
            t.case(a == b && a.is_ok(), || format!("{k}: criterion {a:?}, oracle {b:?}"));
        }
    })
}

/// Regular simples of a linear algebra are the 1-cuts and 2-hills of the
/// image of its reflected path under the involution.
pub fn lk_transport(max_rank: usize) -> Check {
    run_check("regular simples = 1-cuts / 2-hills of the involution image", max_rank, |t| {
        for n in 1..=max_rank {
            for k in generate_linear(n) {
                let (_, r1, r2) = profile_sets(&k);
                let st = lk(&reflected_path(&k)).stats();
                let (c1, h2) = (set(st.one_cuts.clone()), set(st.hills_of(2)));
                t.case(c1 == r1 && h2 == r2, || format!("{k}: 1-cuts {c1:?} vs {r1:?}, 2-hills {h2:?} vs {r2:?}"));
            }
        }
    })
}

/// The involution law on Dyck paths of semilength `≤ max_semilength`.
pub fn lk_involution(max_semilength: usize) -> Check {
    run_check("involution law on Dyck paths", max_semilength, |t| {
        for n in 0..=max_semilength {
            for d in dyck_paths(n) {
                let e = lk(&d);
                t.case(lk(&e) == d && e.semilength() == n, || format!("{d}"));
            }
        }
    })
}

/// Cyclic algebras of rank `n` whose reflected paths lie in the domain of
/// the periodic involution (shift-0 non-constant paths and paths with a
/// rectangle), scanning shifts `0..=n`.
pub fn periodic_domain(n: usize) -> Vec<KupischSeries> {
    let mut v: Vec<KupischSeries> = generate_cyclic(n, 0);
    v.extend((1..=n).flat_map(|s| generate_cyclic(n, s)).filter(is_quasi_hereditary));
    v.into_iter()
        .filter(|k| {
            let p = reflected_periodic_path(k);
            p.in_dyck_p() || p.in_dyck_h()
        })
        .collect()
}

/// Regular simples of a cyclic algebra in the domain of the periodic map are
/// the 1-cuts and 2-hills of its image, independently of the anchor.
pub fn lk_periodic_transport(max_rank: usize) -> Check {
    run_check("periodic involution transports regular simples (every anchor)", max_rank, |t| {
        for n in 1..=max_rank {
            for k in periodic_domain(n) {
                let p = reflected_periodic_path(&k);
                let (_, r1, r2) = profile_sets(&k);
                let anchors = lk_periodic_anchors(&p);
                for a in anchors {
                    match lk_periodic_anchored(&p, a) {
                        Ok(img) => {
                            let st = img.stats();
                            let (c1, h2) = (set(st.one_cuts.clone()), set(st.hills_of(2)));
                            t.case(c1 == r1 && h2 == r2, || {
                                format!("{p} anchor {a}: 1-cuts {c1:?} vs {r1:?}, 2-hills {h2:?} vs {r2:?}")
                            });
                        }
                        Err(e) => t.case(false, || format!("{p} anchor {a}: {e}")),
                    }
                }
            }
        }
    })
}

/// The periodic map sends shift-0 non-constant paths to paths with a
/// rectangle and back, and is an involution.
pub fn lk_periodic_classes(max_period: usize) -> Check {
    run_check("periodic involution swaps the two classes and is an involution", max_period, |t| {
        for n in 1..=max_period {
            for p in periodic_domain(n).iter().map(reflected_periodic_path) {
                let outcome = lk_periodic(&p).and_then(|img| {
                    let back = lk_periodic(&img)?;
                    Ok((img, back))
                });
                match outcome {
                    Ok((img, back)) => {
                        let swap = (!p.in_dyck_p() || img.in_dyck_h()) && (!p.in_dyck_h() || img.in_dyck_p());
                        t.case(swap && back == p, || format!("{p} -> {img} -> {back}"));
                    }
                    Err(e) => t.case(false, || format!("{p}: {e}")),
                }
            }
        }
    })
}

/// Regular simples are the 1-rises and 2-hills of `φ` applied to the
/// reflected path, and `φ` is a bijection in each semilength.
pub fn phi_transport(max_rank: usize) -> Check {
    run_check("phi: 1-rises / 2-hills transport and bijectivity", max_rank, |t| {
        for n in 1..=max_rank {
            let mut images = BTreeSet::new();
            let algebras = generate_linear(n);
            for k in &algebras {
                let (_, r1, r2) = profile_sets(k);
                let img = phi(&reflected_path(k));
                let st = img.stats();
                let rises = set(st.one_rises.iter().map(|r| r.0 as usize));
                let hills = set(st.hills_of(2));
                t.case(rises == r1 && hills == r2, || {
                    format!("{k}: 1-rises {rises:?} vs {r1:?}, 2-hills {hills:?} vs {r2:?}")
                });
                images.insert(img.area().to_vec());
            }
            t.case(images.len() == algebras.len(), || format!("phi not injective in rank {n}"));
        }
    })
}

/// The permutation map is injective into 321-avoiding permutations, and the
/// crosses weakly below the diagonal (`σ(a) ≤ a`, before
/// reverse-complementing) are the peaks `(x, y)` of the involution image
/// placed in cell `(n − x, n − y + 1)` — the peaks seen in the reflected
/// picture.
pub fn bjs_properties(max_semilength: usize) -> Check {
    run_check("321-avoiding permutations: injectivity and peaks of the involution", max_semilength, |t| {
        for n in 1..=max_semilength {
            let mut seen = BTreeSet::new();
            let paths = dyck_paths(n);
            for d in &paths {
                let perm = bjs(d);
                let filled: BTreeSet<(usize, usize)> = bjs_crosses(d)
                    .values()
                    .iter()
                    .enumerate()
                    .map(|(a, &b)| (a + 1, b))
                    .filter(|&(a, b)| b <= a)
                    .collect();
                let peaks: BTreeSet<(usize, usize)> = lk(d)
                    .stats()
                    .peaks
                    .iter()
                    .map(|p| ((n as isize - p.0) as usize, (n as isize - p.1 + 1) as usize))
                    .collect();
                t.case(Permutation321::avoids_321(perm.values()) && filled == peaks, || {
                    format!("{d}: crosses {filled:?}, peaks {peaks:?}")
                });
                seen.insert(perm.values().to_vec());
            }
            t.case(seen.len() == paths.len(), || format!("not injective in semilength {n}"));
        }
    })
}

/// Primitive periodic area sequences (a single entry 2, placed last) have a
/// rectangle iff the permutation of the Dyck path with area `c_i − 1` has a
/// fixed point; the rectangle-free ones are counted by the Fine numbers.
pub fn bjs_fixed_points(max_period: usize) -> Check {
    run_check("fixed-point-free permutations ↔ rectangle-free primitive paths", max_period, |t| {
        let mut fine: Vec<u64> = vec![1, 0];
        for m in 2..=max_period {
            // Fine numbers: 2 F_m + F_{m-1} = C_m.
            let c = crate::enumerate::catalan(m) as u64;
            let prev = fine[m - 1];
            fine.push((c - prev) / 2);
        }
        for n in 2..=max_period + 1 {
            let mut rectangle_free = 0u64;
            for k in generate_cyclic(n, 0) {
                let e = k.entries();
                if e.iter().filter(|&&c| c == 2).count() != 1 {
                    continue;
                }
                let pos = e.iter().position(|&c| c == 2).unwrap_or(0);
                let prim = k.rotate((pos + 1) % n);
                let rect = PeriodicDyckPath::from_kupisch(&prim).stats().rectangles.len();
                let d = DyckPath::from_area(prim.entries().iter().map(|c| c - 1).collect());
                match d {
                    Ok(d) => {
                        let fixed = bjs(&d).fixed_points().len();
                        t.case((fixed == 0) == (rect == 0), || format!("{prim}: fixed {fixed}, rectangles {rect}"));
                    }
                    Err(e) => t.case(false, || format!("{prim}: {e}")),
                }
                if rect == 0 {
                    rectangle_free += 1;
                }
            }
            t.case(rectangle_free == fine[n - 1], || {
                format!("period {n}: {rectangle_free} rectangle-free, Fine number {}", fine[n - 1])
            });
        }
    })
}

/// A rectangle at `(i+1, j)` corresponds to a return of the involution image
/// of the reflected path at `j+1 = i + c_i` that does not end a 1-hill.
pub fn rectangle_return(max_rank: usize) -> Check {
    run_check("rectangles = returns of the image not ending a 1-hill", max_rank, |t| {
        for n in 1..=max_rank {
            for k in generate_linear(n) {
                let d = DyckPath::from_kupisch(&k);
                let rect = set(d.stats().rectangles.iter().map(|r| (r.1 + 1) as usize));
                let st = lk(&reflected_path(&k)).stats();
                let hills = st.hills_of(1);
                let returns = set(st.returns.iter().copied().filter(|&r| !hills.contains(&(r - 1))));
                t.case(rect == returns, || format!("{k}: rectangles {rect:?}, returns {returns:?}"));
                debug_assert_eq!(returns.len(), returns_not_one_hills(&st, None));
            }
        }
    })
}

/// Global dimension at most two iff the involution image has height at
/// most two.
pub fn gd2_height(max_rank: usize) -> Check {
    run_check("gd ≤ 2 iff the involution image has height ≤ 2", max_rank, |t| {
        for n in 1..=max_rank {
            for k in generate_linear(n) {
                let gd = (0..k.rank()).map(|i| ext_profile(&k, i).0).max().unwrap_or(Dim::Finite(0));
                let oracle = matches!(gd, Dim::Finite(g) if g <= 2);
                let h = lk(&DyckPath::from_kupisch(&k)).height();
                t.case(oracle == (h <= 2), || format!("{k}: gd {gd}, image height {h}"));
            }
        }
    })
}

/// For every Dyck path `D` of semilength `≤ max_semilength`: `D` has a peak
/// in column `j` iff `S_{k(j)}` of the algebra of `ζ(D)` has projective
/// dimension one, and a 1-rise in column `j` iff `S_{k(j)}` is 1-regular;
/// `ζ` is a bijection.
pub fn zeta_transport(max_semilength: usize) -> Check {
    run_check("zeta: peaks ↔ pdim 1, 1-rises ↔ 1-regular", max_semilength, |t| {
        for n in 1..=max_semilength {
            let paths = dyck_paths(n);
            let mut images = BTreeSet::new();
            for d in &paths {
                let e = zeta(d);
                let labels = zeta_labelling(d);
                let k = e.to_kupisch();
                let (profiles, r1, _) = profile_sets(&k);
                let st = d.stats();
                let peak_cols: BTreeSet<usize> = st.peaks.iter().map(|p| p.1 as usize).collect();
                let rise_cols: BTreeSet<usize> = st.one_rises.iter().map(|p| p.1 as usize).collect();
                let ok = (1..=n).all(|j| {
                    let s = labels[j - 1];
                    peak_cols.contains(&j) == (profiles[s].0 == Dim::Finite(1))
                        && rise_cols.contains(&j) == r1.contains(&s)
                });
                t.case(ok, || format!("{d}: labels {labels:?}"));
                images.insert(e.area().to_vec());
            }
            t.case(images.len() == paths.len(), || format!("zeta not injective in semilength {n}"));
        }
    })
}

/// The subset bijection round-trips on linear gd ≤ 2 algebras, covers every
/// even subset, and there are `C(n, 2ℓ)` algebras with `ℓ` simples of
/// projective dimension two.
pub fn gd2_subsets(max_rank: usize) -> Check {
    run_check("gd ≤ 2 subset bijection and binomial counts", max_rank, |t| {
        for rank in 1..=max_rank {
            let n = rank - 1;
            let mut by_ell = vec![0usize; n / 2 + 1];
            let mut subsets = BTreeSet::new();
            for k in generate_linear(rank).into_iter().filter(gd_at_most_2_criterion) {
                let profiles: Vec<Dim> = (0..rank).map(|i| ext_profile(&k, i).0).collect();
                let ell = profiles.iter().filter(|&&p| p == Dim::Finite(2)).count();
                match gd2_to_subset(&k) {
                    Ok(s) => {
                        let back = subset_to_gd2(&s, n);
                        t.case(back.as_ref() == Ok(&k) && s.len() == 2 * ell, || {
                            format!("{k}: subset {s:?}, back {back:?}")
                        });
                        subsets.insert(s);
                    }
                    Err(e) => t.case(false, || format!("{k}: {e}")),
                }
                by_ell[ell] += 1;
            }
            let even_subsets: usize = (0..=n / 2).map(|l| usize::try_from(binomial(n as i64, 2 * l as i64)).unwrap_or(0)).sum();
            t.case(subsets.len() == even_subsets, || format!("rank {rank}: {} subsets", subsets.len()));
            for (ell, &c) in by_ell.iter().enumerate() {
                let expected = count_closed(Formula::Gd2Linear, n, ell).map(|v| v.to_string());
                t.case(expected.as_deref() == Ok(c.to_string().as_str()), || {
                    format!("rank {rank}, ℓ = {ell}: {c} vs {expected:?}")
                });
            }
        }
    })
}

/// Cyclic algebras of global dimension two are determined by their
/// rotation class of pairs `(i + 1, i + c_i)` over the simples of projective
/// dimension two; the pairs use `2ℓ` distinct points and the counts follow
/// the rotation formula.
pub fn gd2_cyclic_classes(max_rank: usize) -> Check {
    run_check("cyclic gd 2: pair classes are injective and counted by the rotation formula", max_rank, |t| {
        for n in 1..=max_rank {
            let mut classes = BTreeSet::new();
            let mut by_ell = vec![0usize; n / 2 + 1];
            let algebras: Vec<KupischSeries> = quasi_hereditary_cyclic(n)
                .into_iter()
                .filter(|k| global_dimension(k) == Dim::Finite(2))
                .collect();
            for k in &algebras {
                match gd2_cyclic_pairs(k) {
                    Ok(pairs) => {
                        let points = set(pairs.iter().flat_map(|&(a, b)| [a, b]));
                        t.case(points.len() == 2 * pairs.len(), || format!("{k}: pairs {pairs:?}"));
                        if pairs.len() < by_ell.len() {
                            by_ell[pairs.len()] += 1;
                        }
                        classes.insert(pairs);
                    }
                    Err(e) => t.case(false, || format!("{k}: {e}")),
                }
            }
            t.case(classes.len() == algebras.len(), || format!("rank {n}: pair classes not injective"));
            for (ell, &c) in by_ell.iter().enumerate().skip(1) {
                let expected = count_closed(Formula::Gd2Cyclic, n, ell).map(|v| v.to_string());
                t.case(expected.as_deref() == Ok(c.to_string().as_str()), || {
                    format!("rank {n}, ℓ = {ell}: {c} vs {expected:?}")
                });
            }
        }
    })
}

/// On algebras of global dimension at most two, a cyclic `S_i` is
/// 2-regular iff `c_i = 2`; a linear `S_i` is 2-regular iff `i < n − 2` and
/// `c_i = 2` (the last two simples never are).
pub fn gd2_two_regular(max_rank: usize) -> Check {
    run_check("gd ≤ 2: S_i 2-regular iff c_i = 2", max_rank, |t| {
        for k in gd2_algebras(max_rank) {
            let (_, _, r2) = profile_sets(&k);
            let n = k.rank();
            let predicted = set((0..n).filter(|&i| k.c(i as isize) == 2 && (k.is_cyclic() || i + 2 < n)));
            t.case(predicted == r2, || format!("{k}: predicted {predicted:?}, homology {r2:?}"));
        }
    })
}

/// A cyclic algebra with a 2-regular simple lies in both periodic classes;
/// `[4,3]` has a 1-regular simple but lies in neither.
pub fn cyclic_regular_classes(max_rank: usize) -> Check {
    run_check("cyclic: 2-regular simple forces both periodic classes", max_rank, |t| {
        for n in 1..=max_rank {
            for s in 0..=2 {
                for k in generate_cyclic(n, s) {
                    let (_, _, r2) = profile_sets(&k);
                    if r2.is_empty() {
                        continue;
                    }
                    let p = reflected_periodic_path(&k);
                    t.case(p.in_dyck_p() && p.in_dyck_h(), || format!("{k}"));
                }
            }
        }
        let k = KupischSeries::cyclic(vec![4, 3]).expect("valid series");
        let (_, r1, _) = profile_sets(&k);
        let p = reflected_periodic_path(&k);
        t.case(!r1.is_empty() && !p.in_dyck_p() && !p.in_dyck_h(), || format!("[4,3]: 1-regular {r1:?}"));
    })
}

/// Every closed formula against brute force on every applicable parameter.
pub fn formula_counts(max_n: usize) -> Check {
    run_check("closed formulas = brute-force counts", max_n, |t| {
        let ctx = CountContext::new(max_n, max_n);
        for row in ctx.table() {
            t.case(row.matches(), || format!("{row:?}"));
        }
    })
}

/// Restricted Gorenstein algebras of global dimension at most two: linear
/// algebras of rank `n + 1` are counted by Fibonacci numbers and cyclic
/// algebras of rank `n` (global dimension two) by the cyclic-composition
/// formula, `1 ≤ n ≤ max_n`; evaluated with the two-sided oracle.
pub fn restricted_gorenstein_counts(max_n: usize) -> Check {
    run_check("restricted Gorenstein counts (Fibonacci, cyclic compositions)", max_n, |t| {
        for n in 1..=max_n {
            let linear = generate_linear(n + 1)
                .into_iter()
                .filter(|k| matches!(global_dimension(k), Dim::Finite(g) if g <= 2))
                .filter(|k| restricted_gorenstein_oracle(k) == Ok(true))
                .count();
            let expected = count_closed(Formula::FibonacciRg, n, 0).map(|v| v.to_string());
            t.case(expected.as_deref() == Ok(linear.to_string().as_str()), || {
                format!("linear n = {n}: {linear} vs {expected:?}")
            });
            let cyclic = quasi_hereditary_cyclic(n)
                .into_iter()
                .filter(|k| global_dimension(k) == Dim::Finite(2))
                .filter(|k| restricted_gorenstein_oracle(k) == Ok(true))
                .count();
            let expected = count_closed(Formula::CyclicCompRg, n, 0).map(|v| v.to_string());
            t.case(expected.as_deref() == Ok(cyclic.to_string().as_str()), || {
                format!("cyclic n = {n}: {cyclic} vs {expected:?}")
            });
        }
    })
}

/// Spot values of the counting formulas.
pub fn formula_spot_values() -> Check {
    run_check("formula spot values", 5, |t| {
        let spots = [
            (Formula::Narayana, 4, 2, 6u64),
            (Formula::Riordan, 4, 0, 3),
            (Formula::No2Hills, 4, 0, 10),
            (Formula::FibonacciRg, 4, 0, 5),
            (Formula::QuasiHereditary, 3, 0, 3),
        ];
        for (f, n, ell, expected) in spots {
            let value = count_closed(f, n, ell).map(|v| v.to_string());
            t.case(value.as_deref() == Ok(expected.to_string().as_str()), || format!("{f}({n},{ell}) = {value:?}"));
        }
    })
}

/// Sharp bounds on 2-regular simples, linear ranks `2..=max_linear` and
/// cyclic ranks `2..=max_cyclic` (shifts `0..=2`).
pub fn sharp_bounds(max_linear: usize, max_cyclic: usize) -> Check {
    run_check("sharp bounds on 2-regular simples", max_linear.max(max_cyclic), |t| {
        for n in 2..=max_linear {
            let r = sharpness_check(n, Kind::Linear, 0);
            t.case(r.passed(), || format!("{r:?}"));
        }
        for n in 2..=max_cyclic {
            let r = sharpness_check(n, Kind::Cyclic, 2);
            t.case(r.passed(), || format!("{r:?}"));
        }
    })
}

/// One generating-function identity through x-degree `degree`.
pub fn gf_identity(id: GfIdentity, degree: usize) -> Check {
    run_check(&format!("{} generating function identity", id.name()), degree, |t| {
        let r = gf_verify(id, degree);
        t.case(r.passed(), || format!("{r:?}"));
    })
}

/// Both reference tables against the golden files.
pub fn tables_golden() -> Check {
    run_check("reference tables match golden files", 5, |t| {
        let r = verify_tables();
        t.case(r.is_ok(), || format!("{r:?}"));
    })
}
