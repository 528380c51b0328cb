//! Kupisch series, coKupisch series and the coordinate system of
//! indecomposable modules.
//!
//! A Nakayama algebra with `n` simple modules `S_0, …, S_{n-1}` is determined
//! up to isomorphism by the dimensions `c_i` of its indecomposable projective
//! modules `e_i A`.  For an algebra over a linearly oriented line the sequence
//! ends in `1`; for an algebra over an oriented cycle it is only defined up to
//! rotation.
//!
//! Indices are 0-based.  Cyclic indices are reduced modulo `n` at every
//! access; for linear series every index outside `0..n` reads as `0`, which is
//! exactly the convention under which the coKupisch formula and the
//! injectivity criterion need no special cases at the boundary.

use serde::{Deserialize, Serialize};
use std::fmt;
use thiserror::Error;

/// The shape of the underlying quiver.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    /// Linearly oriented `A_n` quiver.
    Linear,
    /// Oriented cycle with `n` vertices.
    Cyclic,
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Kind::Linear => f.write_str("linear"),
            Kind::Cyclic => f.write_str("cyclic"),
        }
    }
}

/// Reasons a sequence fails to be a Kupisch series.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum KupischError {
    /// The sequence is empty.
    #[error("a Kupisch series needs at least one entry")]
    Empty,
    /// `c_{i+1} + 1 < c_i` at the given index.
    #[error("relative condition c[i+1] + 1 >= c[i] fails at index {0}")]
    ViolatesRelative(usize),
    /// An interior entry is smaller than 2.
    #[error("entry at index {0} must be at least 2")]
    ViolatesInterior(usize),
    /// The last entry is not `1` (linear) or is smaller than `2` (cyclic).
    #[error("boundary condition fails: linear series end in 1, cyclic series have all entries >= 2")]
    BadBoundary,
}

/// A validated Kupisch series.
///
/// Cyclic series keep the rotation they were constructed with, because
/// vertex labels (and hence the positions reported for simple modules) refer
/// to that rotation.  Use [`KupischSeries::canonical`] for the isomorphism
/// class representative.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct KupischSeries {
    entries: Vec<usize>,
    kind: Kind,
    co: Vec<usize>,
}

impl KupischSeries {
    /// Validates `entries` as a Kupisch series of the given kind, keeping
    /// the given rotation.
    pub fn new(entries: Vec<usize>, kind: Kind) -> Result<Self, KupischError> {
        let n = entries.len();
        if n == 0 {
            return Err(KupischError::Empty);
        }
        for i in 0..n {
            if i + 1 < n && entries[i] < 2 {
                return Err(KupischError::ViolatesInterior(i));
            }
            let next = match (kind, i + 1 < n) {
                (_, true) => Some(entries[i + 1]),
                (Kind::Cyclic, false) => Some(entries[0]),
                (Kind::Linear, false) => None,
            };
            if let Some(next) = next {
                if next + 1 < entries[i] {
                    return Err(KupischError::ViolatesRelative(i));
                }
            }
        }
        let last = entries[n - 1];
        match kind {
            Kind::Linear if last != 1 => return Err(KupischError::BadBoundary),
            Kind::Cyclic if last < 2 => return Err(KupischError::BadBoundary),
            _ => {}
        }
        let co = compute_cokupisch(&entries, kind);
        Ok(Self { entries, kind, co })
    }

    /// Shorthand for a linear series.
    pub fn linear(entries: Vec<usize>) -> Result<Self, KupischError> {
        Self::new(entries, Kind::Linear)
    }

    /// Shorthand for a cyclic series (rotation preserved).
    pub fn cyclic(entries: Vec<usize>) -> Result<Self, KupischError> {
        Self::new(entries, Kind::Cyclic)
    }

    /// The entries `c_0, …, c_{n-1}` in stored rotation.
    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    /// Linear or cyclic.
    pub fn kind(&self) -> Kind {
        self.kind
    }

    /// Whether the quiver is an oriented cycle.
    pub fn is_cyclic(&self) -> bool {
        self.kind == Kind::Cyclic
    }

    /// Number of simple modules.
    pub fn rank(&self) -> usize {
        self.entries.len()
    }

    /// Entry `c_i` with cyclic reduction, or `0` outside `0..n` when linear.
    pub fn c(&self, i: isize) -> usize {
        let n = self.rank() as isize;
        match self.kind {
            Kind::Cyclic => self.entries[i.rem_euclid(n) as usize],
            Kind::Linear => {
                if (0..n).contains(&i) {
                    self.entries[i as usize]
                } else {
                    0
                }
            }
        }
    }

    /// Reduces a vertex index into `0..n` (cyclic) or returns it unchanged.
    pub fn vertex(&self, i: isize) -> isize {
        match self.kind {
            Kind::Cyclic => i.rem_euclid(self.rank() as isize),
            Kind::Linear => i,
        }
    }

    /// For cyclic series the global shift `min(c) - 2`; `None` when linear.
    pub fn shift(&self) -> Option<usize> {
        match self.kind {
            Kind::Cyclic => self.entries.iter().min().map(|m| m - 2),
            Kind::Linear => None,
        }
    }

    /// Whether `S_i` is projective, i.e. `c_i = 1`.
    pub fn simple_is_projective(&self, i: usize) -> bool {
        self.entries[i] == 1
    }

    /// The isomorphism-class representative: lexicographically smallest
    /// rotation for cyclic series, the series itself for linear ones.
    pub fn canonical(&self) -> Self {
        match self.kind {
            Kind::Linear => self.clone(),
            Kind::Cyclic => Self::new(canonical_necklace(&self.entries), Kind::Cyclic)
                .expect("rotation of a cyclic series is valid"),
        }
    }

    /// Rotates a cyclic series so that entry `r` becomes entry `0`.
    pub fn rotate(&self, r: usize) -> Self {
        let n = self.rank();
        let entries = (0..n).map(|i| self.entries[(i + r) % n]).collect();
        Self::new(entries, self.kind).expect("rotation of a cyclic series is valid")
    }

    /// The coKupisch series `d_i = min{k ≥ 1 : k ≥ c_{i-k}}`, the dimensions
    /// of the indecomposable injective modules.
    pub fn cokupisch(&self) -> CoKupischSeries {
        CoKupischSeries {
            entries: self.co.clone(),
            kind: self.kind,
        }
    }

    /// Entry `d_i` of the coKupisch series with the same index conventions
    /// as [`KupischSeries::c`].
    pub fn d(&self, i: isize) -> usize {
        let n = self.rank() as isize;
        match self.kind {
            Kind::Cyclic => self.co[i.rem_euclid(n) as usize],
            Kind::Linear => {
                if (0..n).contains(&i) {
                    self.co[i as usize]
                } else {
                    0
                }
            }
        }
    }

    /// The Kupisch series of the opposite algebra: the reversed coKupisch
    /// series (canonicalised when cyclic).
    pub fn opposite(&self) -> Self {
        let mut entries = self.cokupisch().entries;
        entries.reverse();
        let op = Self::new(entries, self.kind).expect("reversed coKupisch series is a Kupisch series");
        op.canonical()
    }

    /// The opposite algebra with vertex labels kept aligned: vertex `i` of the
    /// result is vertex `n-1-i` of `self`.
    pub fn opposite_labelled(&self) -> Self {
        let mut entries = self.cokupisch().entries;
        entries.reverse();
        Self::new(entries, self.kind).expect("reversed coKupisch series is a Kupisch series")
    }

    /// All indecomposable modules `b_{i,k}`, `1 ≤ k ≤ c_i`, ordered by vertex
    /// then length.
    pub fn indecomposables(&self) -> Vec<IndModule> {
        (0..self.rank())
            .flat_map(|i| (1..=self.entries[i]).map(move |k| IndModule::new(i, k)))
            .collect()
    }

    /// The indecomposable injective modules `b_{i+1-d_i, d_i}`.
    pub fn injectives(&self) -> Vec<IndModule> {
        let d = self.cokupisch();
        (0..self.rank() as isize)
            .map(|i| {
                let di = d.entries[i as usize];
                let top = self.vertex(i + 1 - di as isize);
                IndModule::new(top as usize, di)
            })
            .collect()
    }
}

impl fmt::Display for KupischSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&join(&self.entries, ","))?;
        if self.is_cyclic() {
            f.write_str("*")?;
        }
        Ok(())
    }
}

fn compute_cokupisch(entries: &[usize], kind: Kind) -> Vec<usize> {
    let n = entries.len() as isize;
    let c = |i: isize| match kind {
        Kind::Cyclic => entries[i.rem_euclid(n) as usize],
        Kind::Linear => {
            if (0..n).contains(&i) {
                entries[i as usize]
            } else {
                0
            }
        }
    };
    (0..n)
        .map(|i| {
            let mut k = 1usize;
            while k < c(i - k as isize) {
                k += 1;
            }
            k
        })
        .collect()
}

/// Validates a series and, when cyclic, returns its canonical rotation.
pub fn validate_kupisch(entries: Vec<usize>, kind: Kind) -> Result<KupischSeries, KupischError> {
    KupischSeries::new(entries, kind).map(|k| k.canonical())
}

/// Dimensions `d_0, …, d_{n-1}` of the indecomposable injective modules.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CoKupischSeries {
    entries: Vec<usize>,
    kind: Kind,
}

impl CoKupischSeries {
    /// The entries in the labelling of the originating Kupisch series.
    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    /// Entry `d_i` with cyclic reduction, or `0` outside `0..n` when linear.
    pub fn d(&self, i: isize) -> usize {
        let n = self.entries.len() as isize;
        match self.kind {
            Kind::Cyclic => self.entries[i.rem_euclid(n) as usize],
            Kind::Linear => {
                if (0..n).contains(&i) {
                    self.entries[i as usize]
                } else {
                    0
                }
            }
        }
    }
}

/// The indecomposable module `b_{i,k} = e_i A / e_i J^k` of length `k` with
/// top `S_i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct IndModule {
    /// Vertex of the top.
    pub vertex: usize,
    /// Composition length.
    pub length: usize,
}

impl IndModule {
    /// `b_{vertex,length}`.
    pub fn new(vertex: usize, length: usize) -> Self {
        Self { vertex, length }
    }

    /// The simple module `S_i = b_{i,1}`.
    pub fn simple(i: usize) -> Self {
        Self::new(i, 1)
    }

    /// Coordinates `(i, i+k-1)` in the Auslander–Reiten quiver.
    pub fn ar_coordinates(&self) -> (usize, usize) {
        (self.vertex, self.vertex + self.length - 1)
    }

    /// Whether the module is the projective cover `e_i A`.
    pub fn is_projective(&self, k: &KupischSeries) -> bool {
        self.length == k.entries()[self.vertex]
    }
}

impl fmt::Display for IndModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "b({},{})", self.vertex, self.length)
    }
}

/// Lexicographically smallest rotation of a sequence.
pub fn canonical_necklace<T: Ord + Clone>(entries: &[T]) -> Vec<T> {
    let n = entries.len();
    (0..n.max(1))
        .map(|r| (0..n).map(|i| entries[(i + r) % n].clone()).collect::<Vec<_>>())
        .min()
        .unwrap_or_default()
}

/// Comma-joins integers, used by the textual formats.
pub(crate) fn join(values: &[usize], sep: &str) -> String {
    values.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(sep)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lin(v: &[usize]) -> KupischSeries {
        KupischSeries::linear(v.to_vec()).unwrap()
    }

    #[test]
    fn validation_examples() {
        assert!(KupischSeries::linear(vec![3, 2, 2, 1]).is_ok());
        assert!(KupischSeries::linear(vec![1]).is_ok());
        assert_eq!(
            KupischSeries::linear(vec![4, 2, 1]),
            Err(KupischError::ViolatesRelative(0))
        );
        assert_eq!(
            KupischSeries::linear(vec![2, 1, 1]),
            Err(KupischError::ViolatesInterior(1))
        );
        assert_eq!(KupischSeries::linear(vec![2, 2]), Err(KupischError::BadBoundary));
        assert_eq!(KupischSeries::cyclic(vec![1]), Err(KupischError::BadBoundary));
        assert_eq!(
            KupischSeries::cyclic(vec![2, 4]),
            Err(KupischError::ViolatesRelative(1))
        );
        assert_eq!(KupischSeries::linear(vec![]), Err(KupischError::Empty));
    }

    #[test]
    fn cokupisch_examples() {
        assert_eq!(lin(&[4, 3, 2, 2, 1]).cokupisch().entries(), &[1, 2, 3, 4, 2]);
        assert_eq!(lin(&[4, 3, 2, 3, 2, 1]).cokupisch().entries(), &[1, 2, 3, 4, 2, 3]);
        let c = KupischSeries::cyclic(vec![3, 2]).unwrap();
        assert_eq!(c.cokupisch().entries(), &[3, 2]);
    }

    #[test]
    fn opposite_examples() {
        assert_eq!(lin(&[2, 2, 1]).opposite(), lin(&[2, 2, 1]));
        assert_eq!(lin(&[4, 3, 2, 1]).opposite(), lin(&[4, 3, 2, 1]));
        let c = KupischSeries::cyclic(vec![3, 2]).unwrap();
        assert_eq!(c.opposite().entries(), &[2, 3]);
    }

    #[test]
    fn necklace_examples() {
        assert_eq!(canonical_necklace(&[3, 2, 3]), vec![2, 3, 3]);
        assert_eq!(canonical_necklace(&[2, 2, 2]), vec![2, 2, 2]);
        assert_eq!(canonical_necklace(&[5, 4, 3]), vec![3, 5, 4]);
    }

    #[test]
    fn indecomposable_examples() {
        assert_eq!(lin(&[2, 1]).indecomposables().len(), 3);
        assert_eq!(lin(&[4, 3, 2, 3, 2, 1]).indecomposables().len(), 15);
        assert_eq!(lin(&[1]).indecomposables(), vec![IndModule::simple(0)]);
        let mut inj = lin(&[2, 1]).injectives();
        inj.sort();
        assert_eq!(inj, vec![IndModule::new(0, 1), IndModule::new(0, 2)]);
    }
}
