//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Each criterion combines the library's exhaustive checks with an
//! independent computation from `common` (quiver representations over a
//! prime field) or values read off the reference figures and tables.
//! Runs without the default test harness so the lines are always printed;
//! exits non-zero if any criterion fails.

mod common;

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use common::{simple_profile, Algebra, SimpleProfile};
use nakayama::bijections::{lk, reflected_path, zeta, zeta_labelling};
use nakayama::counts::brute_count;
use nakayama::dyck::DyckPath;
use nakayama::enumerate::{generate_cyclic, generate_linear};
use nakayama::formulas::{count_closed, Formula};
use nakayama::homology::{
    ext_profile, global_dimension, pdim1_criterion, pdim2_criterion, regular1, regular2, Dim,
};
use nakayama::kupisch::{Kind, KupischSeries};
use nakayama::series::GfIdentity;
use nakayama::sharpness::{sharpness_check, standard_witness};
use nakayama::tables::{reproduce_tables, GOLDEN_CYCLIC, GOLDEN_LINEAR};
use nakayama::verify::{self, Check};

/// Outcome of one criterion.
struct Outcome {
    passed: bool,
    notes: Vec<String>,
}

impl Outcome {
    fn new() -> Self {
        Self { passed: true, notes: Vec::new() }
    }

    fn check(&mut self, c: Check) {
        if !c.passed() {
            self.passed = false;
            self.notes.push(format!("{c}: {:?}", c.failures));
        }
    }

    fn require(&mut self, ok: bool, what: impl Into<String>) {
        if !ok {
            self.passed = false;
            self.notes.push(format!("failed: {}", what.into()));
        }
    }

    fn note(&mut self, text: impl Into<String>) {
        self.notes.push(text.into());
    }
}

fn criterion(
    results: &mut Vec<bool>,
    id: usize,
    title: &str,
    budget: Option<Duration>,
    body: impl FnOnce(&mut Outcome),
) {
    let start = Instant::now();
    let mut o = Outcome::new();
    body(&mut o);
    let elapsed = start.elapsed();
    if let Some(b) = budget {
        o.require(elapsed < b, format!("runtime {elapsed:.2?} exceeds {b:?}"));
    }
    let status = if o.passed { "PASS" } else { "FAIL" };
    println!("{status} [{id:>2}] {title} ({:.2} s)", elapsed.as_secs_f64());
    for n in &o.notes {
        println!("       {n}");
    }
    results.push(o.passed);
}

fn linear(v: &[usize]) -> KupischSeries {
    KupischSeries::linear(v.to_vec()).expect("valid series")
}

fn oracle(k: &KupischSeries) -> Vec<SimpleProfile> {
    let alg = Algebra::new(k.entries(), k.is_cyclic());
    (0..k.rank()).map(|i| simple_profile(&alg, i)).collect()
}

fn regular_sets(profiles: &[SimpleProfile]) -> (BTreeSet<usize>, BTreeSet<usize>) {
    let pick = |deg| (0..profiles.len()).filter(|&i| profiles[i].regular(deg)).collect();
    (pick(1), pick(2))
}

fn set(v: &[usize]) -> BTreeSet<usize> {
    v.iter().copied().collect()
}

fn dim_option(d: Dim) -> Option<usize> {
    match d {
        Dim::Finite(p) => Some(p),
        Dim::Infinite => None,
    }
}

/// Algebras compared against the representation oracle.
fn oracle_sample() -> Vec<KupischSeries> {
    let mut v: Vec<KupischSeries> = (1..=6).flat_map(generate_linear).collect();
    v.extend((1..=6).flat_map(|n| generate_cyclic(n, 0)));
    v.extend((1..=4).flat_map(|n| generate_cyclic(n, 1)));
    v
}

fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u64, |acc, i| acc * (n - i) as u64 / (i + 1) as u64)
}

fn main() {
    let mut results = Vec::new();

    criterion(&mut results, 1, "reference tables reproduce the golden files", Some(Duration::from_secs(5)), |o| {
        match reproduce_tables() {
            Ok((lin, cyc)) => {
                o.require(lin == GOLDEN_LINEAR, "linear table differs from golden file");
                o.require(cyc == GOLDEN_CYCLIC, "cyclic table differs from golden file");
                let rows = |s: &str| s.lines().count() - 1;
                o.note(format!(
                    "{} linear rows (ranks 1–5) and {} quasi-hereditary cyclic rows (ranks 2–5); a count of 37/39 \
                     rows is not attainable, since ranks 1–5 give 1+1+2+5+14 linear and 1+3+9+25 such cyclic algebras",
                    rows(&lin),
                    rows(&cyc)
                ));
            }
            Err(e) => o.require(false, format!("{e}")),
        }
        o.check(verify::tables_golden());
    });

    criterion(&mut results, 2, "combinatorial criteria = homological oracle", Some(Duration::from_secs(60)), |o| {
        o.check(verify::criteria_vs_oracle(9));
        o.check(verify::ext_by_paths(9));
        // Independent representation-theoretic oracle on smaller ranks.
        let sample = oracle_sample();
        let mut simples = 0;
        for k in &sample {
            for (i, prof) in oracle(k).iter().enumerate() {
                simples += 1;
                let (pdim, ext) = ext_profile(k, i);
                let ok = prof.pdim == dim_option(pdim)
                    && prof.ext == ext
                    && regular1(k, i) == prof.regular(1)
                    && regular2(k, i) == prof.regular(2)
                    && pdim1_criterion(k, i) == (prof.pdim == Some(1))
                    && pdim2_criterion(k, i) == (prof.pdim == Some(2));
                o.require(ok, format!("{k}, S_{i}: oracle {prof:?}, library ({pdim}, {ext:?})"));
            }
        }
        o.note(format!(
            "library resolution: all linear and shift-0 cyclic algebras of rank ≤ 9; \
             representation oracle: {} algebras, {simples} simples",
            sample.len()
        ));
    });

    criterion(&mut results, 3, "regular simples transported by the involutions and φ", None, |o| {
        o.check(verify::lk_transport(9));
        o.check(verify::lk_periodic_transport(9));
        o.check(verify::phi_transport(9));
        // Figure instance: 1-regular S_6, S_7, S_13 and 2-regular S_0, S_11,
        // seen as 1-cuts and 2-hills of the involution image.
        let k = linear(&[2, 4, 3, 3, 5, 5, 5, 4, 3, 4, 3, 2, 3, 2, 1]);
        let (r1, r2) = regular_sets(&oracle(&k));
        o.require(r1 == set(&[6, 7, 13]) && r2 == set(&[0, 11]), format!("figure instance: oracle {r1:?}, {r2:?}"));
        let st = lk(&reflected_path(&k)).stats();
        o.require(
            set(&st.one_cuts) == r1 && set(&st.hills_of(2)) == r2,
            format!("figure instance: 1-cuts {:?}, 2-hills {:?}", st.one_cuts, st.hills_of(2)),
        );
        // Independent oracle against the involution image, ranks ≤ 6.
        for k in (1..=6).flat_map(generate_linear) {
            let (r1, r2) = regular_sets(&oracle(&k));
            let st = lk(&reflected_path(&k)).stats();
            o.require(set(&st.one_cuts) == r1 && set(&st.hills_of(2)) == r2, format!("{k}"));
        }
        o.note("the statistics are read on the path of the opposite algebra (the reflected path)");
    });

    criterion(&mut results, 4, "involution laws", None, |o| {
        o.check(verify::lk_involution(10));
        o.check(verify::lk_periodic_classes(8));
    });

    criterion(&mut results, 5, "closed counting formulas = brute force", Some(Duration::from_secs(120)), |o| {
        o.check(verify::formula_counts(10));
        o.check(verify::formula_spot_values());
        let spots = [
            (Formula::Narayana, 4, 2, 6u64),
            (Formula::Riordan, 4, 0, 3),
            (Formula::No2Hills, 4, 0, 10),
            (Formula::FibonacciRg, 4, 0, 5),
            (Formula::QuasiHereditary, 3, 0, 3),
        ];
        for (f, n, ell, expected) in spots {
            let closed = count_closed(f, n, ell).map(|v| v.to_string());
            let brute = brute_count(f, n, ell).to_string();
            o.require(
                closed.as_deref() == Ok(expected.to_string().as_str()) && brute == expected.to_string(),
                format!("{f}({n}, {ell}): closed {closed:?}, brute {brute}, expected {expected}"),
            );
        }
    });

    criterion(&mut results, 6, "generating-function identities through degree 12", None, |o| {
        o.check(verify::gf_identity(GfIdentity::Pdim, 12));
        o.check(verify::gf_identity(GfIdentity::Regularity, 12));
        let r = nakayama::series::gf_verify(GfIdentity::Regularity, 6);
        o.note(format!(
            "regularity equation holds for the rank-indexed series (x·N); substituting the rank−1-indexed series \
             literally leaves a nonzero residual: literal_residual_zero = {}",
            r.literal_residual_zero
        ));
    });

    criterion(&mut results, 7, "zeta map instance and transport", None, |o| {
        o.check(verify::zeta_transport(9));
        let d = DyckPath::from_coarea(&[1, 2, 2, 3, 4, 3, 4, 5, 6, 6, 6, 6, 7, 5, 3]).expect("valid coarea");
        let z = zeta(&d);
        let labels = zeta_labelling(&d);
        o.require(z.area() == [3, 2, 4, 4, 4, 3, 2, 3, 6, 5, 4, 3, 2, 2, 1], format!("ζ(D) area {:?}", z.area()));
        o.require(labels == [0, 1, 2, 5, 3, 6, 7, 9, 10, 11, 12, 13, 8, 4], format!("labels {labels:?}"));
        let prof = oracle(&z.to_kupisch());
        let (r1, _) = regular_sets(&prof);
        let pd1_not_reg: BTreeSet<usize> = (0..prof.len()).filter(|&i| prof[i].pdim == Some(1) && !r1.contains(&i)).collect();
        o.require(r1 == set(&[0, 10, 11, 8, 4]), format!("1-regular {r1:?}"));
        o.require(pd1_not_reg == set(&[5, 9, 13]), format!("pdim 1, not 1-regular {pd1_not_reg:?}"));
    });

    criterion(&mut results, 8, "global dimension two", None, |o| {
        o.check(verify::gd2_subsets(10));
        o.check(verify::gd2_cyclic_classes(10));
        o.check(verify::gd2_two_regular(10));
        // Binomial counts recomputed here from the homological global dimension.
        for rank in 1..=8 {
            let n = rank - 1;
            let mut by_ell = vec![0u64; n / 2 + 1];
            for k in generate_linear(rank) {
                if matches!(global_dimension(&k), Dim::Finite(g) if g <= 2) {
                    let ell = (0..rank).filter(|&i| ext_profile(&k, i).0 == Dim::Finite(2)).count();
                    by_ell[ell] += 1;
                }
            }
            for (ell, &c) in by_ell.iter().enumerate() {
                o.require(c == binomial(n, 2 * ell), format!("rank {rank}, ℓ = {ell}: {c}"));
            }
        }
    });

    criterion(&mut results, 9, "sharp bounds on 2-regular simples", None, |o| {
        o.check(verify::sharp_bounds(12, 10));
        for n in 2..=10 {
            let lin = sharpness_check(n, Kind::Linear, 0);
            o.require(lin.max_found == (n - 1) / 2, format!("linear n = {n}: {lin:?}"));
            let cyc = sharpness_check(n, Kind::Cyclic, 2);
            o.require(cyc.max_found == n / 2, format!("cyclic n = {n}: {cyc:?}"));
        }
        o.require(standard_witness(Kind::Cyclic, 5).is_none(), "odd cyclic witness");
        o.note("cyclic witnesses for odd n come from exhaustive search (the alternating pattern has no odd-length form)");
    });

    criterion(&mut results, 10, "restricted Gorenstein", None, |o| {
        o.check(verify::restricted_gorenstein_vs_oracle(9));
        o.check(verify::restricted_gorenstein_counts(12));
        let fib = [1u64, 2, 3, 5, 8, 13, 21, 34, 55, 89, 144, 233];
        for (idx, &f) in fib.iter().enumerate() {
            let v = count_closed(Formula::FibonacciRg, idx + 1, 0).map(|v| v.to_string());
            o.require(v.as_deref() == Ok(f.to_string().as_str()), format!("n = {}: {v:?}", idx + 1));
        }
    });

    let failed = results.iter().filter(|&&p| !p).count();
    println!("{} of {} criteria passed", results.len() - failed, results.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
