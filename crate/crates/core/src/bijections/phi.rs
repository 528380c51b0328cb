//! The map φ sending 1-regular simples to 2-hills.
//!
//! The path is turned into a cycle diagram of its permutation grid: every
//! index `k` is classified by whether its row cross lies below the diagonal
//! and whether its column cross lies to the left of it.  Reading the indices
//! downwards, the "delimiter" points split the "counted" points into a
//! composition `α`.  The image is obtained by widening the peaks of the
//! Lalanne–Kreweras image according to `α`.

use serde::Serialize;

use super::{bjs_crosses, lk, BijectionError};
use crate::dyck::DyckPath;

/// Classification of an index of the cycle diagram.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PointClass {
    /// Both crosses on or above the diagonal: a fixed cut of the diagram.
    OneCut,
    /// Row cross above, column cross below the diagonal.
    Mixed,
    /// Row cross below, column cross above: separates the parts of `α`.
    Delimiter,
    /// Both crosses below the diagonal: contributes to a part of `α`.
    Counted,
}

/// The cycle diagram data of a path.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CycleDiagram {
    /// Class of each index `1..=n` (position `k - 1`).
    pub classes: Vec<PointClass>,
    /// Composition read from the top down, one part per delimiter.
    pub alpha: Vec<usize>,
    /// Number of fixed cuts.
    pub one_cuts: usize,
}

/// Computes the cycle diagram of a path.
pub fn cycle_diagram(d: &DyckPath) -> CycleDiagram {
    let sigma = bjs_crosses(d);
    let inv = sigma.inverse();
    let n = sigma.len();
    let classes: Vec<PointClass> = (1..=n)
        .map(|k| {
            let row_low = sigma.values()[k - 1] > k;
            let col_low = inv.values()[k - 1] < k;
            match (row_low, col_low) {
                (false, false) => PointClass::OneCut,
                (false, true) => PointClass::Mixed,
                (true, false) => PointClass::Delimiter,
                (true, true) => PointClass::Counted,
            }
        })
        .collect();
    let mut alpha = Vec::new();
    let mut acc = 0;
    for class in classes.iter().rev() {
        match class {
            PointClass::Counted => acc += 1,
            PointClass::Delimiter => {
                alpha.push(acc);
                acc = 0;
            }
            _ => {}
        }
    }
    debug_assert_eq!(acc, 0, "counted points below the last delimiter");
    let one_cuts = classes.iter().filter(|c| **c == PointClass::OneCut).count();
    CycleDiagram { classes, alpha, one_cuts }
}

/// The path with peaks in the same rows as `e`: peaks in 1-cut rows get a
/// single horizontal step, the remaining peaks (top to bottom) get `α_i + 2`
/// steps.
pub fn psi(e: &DyckPath, alpha: &[usize]) -> Result<DyckPath, BijectionError> {
    let st = e.stats();
    let cuts: std::collections::BTreeSet<usize> = st.one_cuts.iter().copied().collect();
    let mut parts = alpha.iter();
    let mut runs = Vec::with_capacity(st.peaks.len());
    for &(x, _) in &st.peaks {
        let x = x as usize;
        if cuts.contains(&x) {
            runs.push(1);
        } else {
            let a = parts
                .next()
                .ok_or_else(|| BijectionError::Internal("composition too short".into()))?;
            runs.push(a + 2);
        }
    }
    if parts.next().is_some() {
        return Err(BijectionError::Internal("composition too long".into()));
    }
    let n = e.semilength();
    let mut row_runs = vec![0usize; n + 1];
    for (&(x, _), run) in st.peaks.iter().zip(&runs) {
        row_runs[x as usize] = *run;
    }
    let mut end = 0;
    let mut area = Vec::with_capacity(n + 1);
    for (x, run) in row_runs.iter().enumerate() {
        end += run;
        if end + 1 < x {
            return Err(BijectionError::Internal(format!("row {x} below the diagonal")));
        }
        area.push(end + 1 - x);
    }
    DyckPath::from_area(area).map_err(|err| BijectionError::Internal(err.to_string()))
}

/// The map φ: the Lalanne–Kreweras image widened by the cycle composition.
pub fn phi(d: &DyckPath) -> DyckPath {
    let diagram = cycle_diagram(d);
    psi(&lk(d), &diagram.alpha).expect("the cycle composition matches the peaks of the image")
}
