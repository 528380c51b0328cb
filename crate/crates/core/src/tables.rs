//! Reference tables of small algebras: every linear algebra of rank at most
//! five and every quasi-hereditary cyclic algebra of rank at most five, with
//! their regular simples, simples of projective dimension one and two, and
//! global dimension.
//!
//! The tables are regenerated homologically and compared byte for byte with
//! the checked-in CSV files under `golden/`.

use serde::Serialize;
use thiserror::Error;

use crate::enumerate::{generate_linear, quasi_hereditary_cyclic};
use crate::homology::{ext_profile, is_regular_profile, Dim};
use crate::kupisch::KupischSeries;

/// Golden table of linear algebras.
pub const GOLDEN_LINEAR: &str = include_str!("../golden/small_linear.csv");
/// Golden table of quasi-hereditary cyclic algebras.
pub const GOLDEN_CYCLIC: &str = include_str!("../golden/small_cyclic.csv");
/// Largest rank listed in the reference tables.
pub const TABLE_MAX_RANK: usize = 5;

/// Errors raised when producing or comparing tables.
#[derive(Debug, Error)]
pub enum TableError {
    /// CSV serialisation failed.
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
    /// The CSV writer produced invalid UTF-8.
    #[error("csv output is not UTF-8")]
    Utf8,
    /// Generated and golden tables differ.
    #[error("line {line}: generated {generated:?}, golden {golden:?}")]
    Mismatch {
        /// One-based line number of the first difference.
        line: usize,
        /// Generated line (empty when missing).
        generated: String,
        /// Golden line (empty when missing).
        golden: String,
    },
}

/// One row of a reference table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableRow {
    /// Kupisch series in display rotation.
    pub kupisch: Vec<usize>,
    /// 1-regular simples.
    pub reg1: Vec<usize>,
    /// 2-regular simples.
    pub reg2: Vec<usize>,
    /// Simples of projective dimension 1.
    pub pdim1: Vec<usize>,
    /// Simples of projective dimension 2.
    pub pdim2: Vec<usize>,
    /// Global dimension.
    pub gdim: Dim,
}

impl TableRow {
    /// Computes the row homologically (regularity from Ext dimensions).
    pub fn of(k: &KupischSeries) -> Self {
        let profiles: Vec<(Dim, Vec<usize>)> = (0..k.rank()).map(|i| ext_profile(k, i)).collect();
        let select = |pred: &dyn Fn(&(Dim, Vec<usize>)) -> bool| -> Vec<usize> {
            profiles.iter().enumerate().filter(|(_, p)| pred(p)).map(|(i, _)| i).collect()
        };
        Self {
            kupisch: k.entries().to_vec(),
            reg1: select(&|(p, e)| is_regular_profile(*p, e, 1)),
            reg2: select(&|(p, e)| is_regular_profile(*p, e, 2)),
            pdim1: select(&|(p, _)| *p == Dim::Finite(1)),
            pdim2: select(&|(p, _)| *p == Dim::Finite(2)),
            gdim: profiles.iter().map(|p| p.0).max().unwrap_or(Dim::Finite(0)),
        }
    }

    fn record(&self) -> [String; 6] {
        let set = |v: &[usize]| {
            if v.is_empty() {
                "-".to_string()
            } else {
                v.iter().map(usize::to_string).collect::<Vec<_>>().join(",")
            }
        };
        let series = self.kupisch.iter().map(usize::to_string).collect::<Vec<_>>().join(", ");
        [
            format!("[{series}]"),
            set(&self.reg1),
            set(&self.reg2),
            set(&self.pdim1),
            set(&self.pdim2),
            self.gdim.to_string(),
        ]
    }
}

/// Display rotation of a cyclic series: among the rotations ending in the
/// minimal entry, the lexicographically smallest.  Linear series are
/// returned unchanged.
pub fn display_rotation(k: &KupischSeries) -> KupischSeries {
    if !k.is_cyclic() {
        return k.clone();
    }
    let n = k.rank();
    let min = k.entries().iter().copied().min().unwrap_or(0);
    (0..n)
        .map(|r| k.rotate(r))
        .filter(|r| r.entries()[n - 1] == min)
        .min_by(|a, b| a.entries().cmp(b.entries()))
        .expect("some rotation ends in the minimum")
}

/// Rows of the linear table: ranks `1..=max_rank`, each rank in
/// colexicographic order.
pub fn linear_rows(max_rank: usize) -> Vec<TableRow> {
    (1..=max_rank).flat_map(generate_linear).map(|k| TableRow::of(&k)).collect()
}

/// Rows of the cyclic table: quasi-hereditary algebras of rank
/// `2..=max_rank` in display rotation, ordered by rank, minimal entry, then
/// lexicographically.
pub fn cyclic_rows(max_rank: usize) -> Vec<TableRow> {
    let mut out = Vec::new();
    for n in 2..=max_rank {
        let mut algebras: Vec<KupischSeries> = quasi_hereditary_cyclic(n).iter().map(display_rotation).collect();
        algebras.sort_by_key(|k| (k.entries().iter().copied().min(), k.entries().to_vec()));
        out.extend(algebras.iter().map(TableRow::of));
    }
    out
}

/// Serialises rows with the header `kupisch,reg1,reg2,pdim1,pdim2,gdim`.
pub fn to_csv(rows: &[TableRow]) -> Result<String, TableError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["kupisch", "reg1", "reg2", "pdim1", "pdim2", "gdim"])?;
    for row in rows {
        w.write_record(row.record())?;
    }
    let bytes = w.into_inner().map_err(|e| TableError::Csv(e.into_error().into()))?;
    String::from_utf8(bytes).map_err(|_| TableError::Utf8)
}

/// Both tables as CSV text `(linear, cyclic)`.
pub fn reproduce_tables() -> Result<(String, String), TableError> {
    Ok((
        to_csv(&linear_rows(TABLE_MAX_RANK))?,
        to_csv(&cyclic_rows(TABLE_MAX_RANK))?,
    ))
}

/// Compares generated text with golden text, reporting the first differing
/// line.
pub fn compare(generated: &str, golden: &str) -> Result<(), TableError> {
    if generated == golden {
        return Ok(());
    }
    let g: Vec<&str> = generated.lines().collect();
    let r: Vec<&str> = golden.lines().collect();
    let line = (0..g.len().max(r.len()))
        .find(|&i| g.get(i) != r.get(i))
        .unwrap_or(g.len().min(r.len()));
    Err(TableError::Mismatch {
        line: line + 1,
        generated: g.get(line).unwrap_or(&"").to_string(),
        golden: r.get(line).unwrap_or(&"").to_string(),
    })
}

/// Regenerates both tables and compares them with the golden files.
pub fn verify_tables() -> Result<(), TableError> {
    let (linear, cyclic) = reproduce_tables()?;
    compare(&linear, GOLDEN_LINEAR)?;
    compare(&cyclic, GOLDEN_CYCLIC)
}
