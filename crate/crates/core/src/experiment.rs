//! Exploratory statistics that are reported but never asserted.
//!
//! Over Dyck paths of a fixed semilength, the number of 1-regular simple
//! modules of the corresponding linear algebra and the number of 1-rises of
//! the path appear to be symmetrically distributed.  This module tabulates
//! the joint distribution and reports whether it is symmetric.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::dyck::DyckPath;
use crate::enumerate::dyck_paths;
use crate::homology::regular1;

/// Joint distribution of (#1-regular simples, #1-rises) in one semilength.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct JointDistribution {
    /// Semilength.
    pub semilength: usize,
    /// Number of paths per pair `(regular, rises)`.
    pub counts: BTreeMap<String, usize>,
    /// Whether swapping the two statistics preserves every count.
    pub symmetric: bool,
}

fn statistics(d: &DyckPath) -> (usize, usize) {
    let k = d.to_kupisch();
    let reg = (0..k.rank()).filter(|&i| regular1(&k, i)).count();
    (reg, d.stats().one_rises.len())
}

/// Tabulates the joint distribution for one semilength.
pub fn joint_distribution(semilength: usize) -> JointDistribution {
    let mut table: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for d in dyck_paths(semilength) {
        *table.entry(statistics(&d)).or_default() += 1;
    }
    let symmetric = table
        .iter()
        .all(|(&(a, b), &c)| table.get(&(b, a)).copied().unwrap_or(0) == c);
    JointDistribution {
        semilength,
        counts: table.into_iter().map(|((a, b), c)| (format!("{a},{b}"), c)).collect(),
        symmetric,
    }
}
