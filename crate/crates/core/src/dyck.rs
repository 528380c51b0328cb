//! Dyck paths and periodic Dyck paths together with their local statistics.
//!
//! Coordinates follow the algebra's conventions: `x` grows with vertical
//! steps and indexes rows, `y` grows with horizontal steps and indexes
//! columns, and paths stay in the region `y ≥ x` (shifted by the global shift
//! for periodic paths).  A path is stored through its area sequence: row `x`
//! of the path ends at column `M_x = x + c_x - 1`, so the step word is
//! `h^{M_0 - M_{-1}} v h^{M_1 - M_0} v …` with `M_{-1} = 0` for Dyck paths.

use crate::kupisch::{canonical_necklace, join, Kind, KupischError, KupischSeries};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;
use thiserror::Error;

/// A single lattice step.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Step {
    /// Horizontal step, increments `y`.
    H,
    /// Vertical step, increments `x`.
    V,
}

/// Errors from parsing or constructing paths.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum PathError {
    /// A character other than `h`, `v`, `1`, `0`.
    #[error("invalid step character {0:?}")]
    BadStep(char),
    /// Unequal numbers of horizontal and vertical steps.
    #[error("unbalanced step word")]
    Unbalanced,
    /// The path crosses below the diagonal at the given step index.
    #[error("path goes below the diagonal at step {0}")]
    BelowDiagonal(usize),
    /// The periodic word is empty.
    #[error("a periodic path needs at least one period step")]
    Empty,
    /// The area sequence is not a Kupisch series.
    #[error("invalid area sequence: {0}")]
    Area(#[from] KupischError),
}

/// Parses a step word over `{h,v}` or `{1,0}` (1 = h), ignoring commas and
/// whitespace.
pub fn parse_word(text: &str) -> Result<Vec<Step>, PathError> {
    text.chars()
        .filter(|c| !c.is_whitespace() && *c != ',')
        .map(|c| match c {
            'h' | 'H' | '1' => Ok(Step::H),
            'v' | 'V' | '0' => Ok(Step::V),
            other => Err(PathError::BadStep(other)),
        })
        .collect()
}

/// Renders a step word as a string over `{h,v}`.
pub fn word_to_string(word: &[Step]) -> String {
    word.iter()
        .map(|s| match s {
            Step::H => 'h',
            Step::V => 'v',
        })
        .collect()
}

/// A Dyck path of semilength `n`, stored by its area sequence `c_0, …, c_n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DyckPath {
    area: Vec<usize>,
}

impl DyckPath {
    /// Builds the path with the given area sequence (a linear Kupisch series).
    pub fn from_area(area: Vec<usize>) -> Result<Self, PathError> {
        KupischSeries::linear(area.clone())?;
        Ok(Self { area })
    }

    /// Builds the path of a linear Kupisch series.
    pub fn from_kupisch(k: &KupischSeries) -> Self {
        assert_eq!(k.kind(), Kind::Linear, "linear series expected");
        Self {
            area: k.entries().to_vec(),
        }
    }

    /// Builds a path from its step word.
    pub fn from_word(word: &[Step]) -> Result<Self, PathError> {
        let mut height = 0isize;
        for (idx, s) in word.iter().enumerate() {
            height += if *s == Step::H { 1 } else { -1 };
            if height < 0 {
                return Err(PathError::BelowDiagonal(idx));
            }
        }
        if height != 0 {
            return Err(PathError::Unbalanced);
        }
        let n = word.len() / 2;
        let mut ends = Vec::with_capacity(n + 1);
        let mut y = 0usize;
        for s in word {
            match s {
                Step::H => y += 1,
                Step::V => ends.push(y),
            }
        }
        ends.push(n);
        Ok(Self::from_row_ends(&ends))
    }

    /// Builds a path from the row ends `M_0 ≤ … ≤ M_n` (assumed valid).
    pub(crate) fn from_row_ends(ends: &[usize]) -> Self {
        let area = ends.iter().enumerate().map(|(x, m)| m + 1 - x).collect();
        Self { area }
    }

    /// Builds the path whose coarea sequence is `d_0, …, d_n`.
    pub fn from_coarea(coarea: &[usize]) -> Result<Self, PathError> {
        let n = coarea.len().checked_sub(1).ok_or(PathError::Empty)?;
        // First row reaching column j is m_j = j - d_j + 1; M_x = max{j : m_j ≤ x}.
        let mut first = Vec::with_capacity(n + 1);
        for (j, d) in coarea.iter().enumerate() {
            if *d == 0 || *d > j + 1 {
                return Err(PathError::BelowDiagonal(j));
            }
            first.push(j + 1 - d);
        }
        if first.windows(2).any(|w| w[0] > w[1]) {
            return Err(PathError::BelowDiagonal(0));
        }
        let ends: Vec<usize> = (0..=n)
            .map(|x| (0..=n).rev().find(|&j| first[j] <= x).unwrap_or(0))
            .collect();
        let path = Self::from_row_ends(&ends);
        KupischSeries::linear(path.area.clone())?;
        if path.coarea() != coarea {
            return Err(PathError::BelowDiagonal(0));
        }
        Ok(path)
    }

    /// Semilength `n`.
    pub fn semilength(&self) -> usize {
        self.area.len() - 1
    }

    /// Area sequence `c_0, …, c_n`.
    pub fn area(&self) -> &[usize] {
        &self.area
    }

    /// The linear Kupisch series with this area sequence.
    pub fn to_kupisch(&self) -> KupischSeries {
        KupischSeries::linear(self.area.clone()).expect("area sequence is valid")
    }

    /// Row ends `M_x = x + c_x - 1` for `x = 0..=n`.
    pub fn row_ends(&self) -> Vec<usize> {
        self.area.iter().enumerate().map(|(x, c)| x + c - 1).collect()
    }

    /// Coarea sequence: `d_j` counts lattice points of the region in column `j`.
    pub fn coarea(&self) -> Vec<usize> {
        let ends = self.row_ends();
        let n = self.semilength();
        (0..=n)
            .map(|j| {
                let first = ends.iter().position(|&m| m >= j).unwrap_or(0);
                j + 1 - first
            })
            .collect()
    }

    /// The step word.
    pub fn word(&self) -> Vec<Step> {
        let ends = self.row_ends();
        let mut word = Vec::with_capacity(2 * self.semilength());
        let mut prev = 0usize;
        for (x, &m) in ends.iter().enumerate() {
            if x > 0 {
                word.push(Step::V);
            }
            word.extend(std::iter::repeat_n(Step::H, m - prev));
            prev = m;
        }
        word
    }

    /// The reversed path with step letters exchanged (reflection in the
    /// antidiagonal).
    pub fn reverse_swap(&self) -> Self {
        let word: Vec<Step> = self
            .word()
            .iter()
            .rev()
            .map(|s| match s {
                Step::H => Step::V,
                Step::V => Step::H,
            })
            .collect();
        Self::from_word(&word).expect("reflection of a Dyck path is a Dyck path")
    }

    /// All statistics of the path.
    pub fn stats(&self) -> PathStats {
        let rows = Rows::linear(self);
        rows.stats()
    }

    /// Height: maximal area entry minus one.
    pub fn height(&self) -> usize {
        self.area.iter().max().copied().unwrap_or(1) - 1
    }

    /// Whether the path is a bounce path, and if so its parts.
    pub fn bounce_parts(&self) -> Option<Vec<usize>> {
        let st = self.stats();
        st.is_bounce.then_some(st.bounce_parts)
    }

    /// Row indices `x` at which the hatted path `h D v` has a double fall,
    /// and column indices `y` at which it has a double rise.  The hatted path
    /// keeps the coordinates of `D`, so the prepended step creates a double
    /// rise in column `0` and the appended step a double fall in row `n`.
    pub fn hatted_rises_falls(&self) -> (Vec<usize>, Vec<usize>) {
        let n = self.semilength();
        let st = self.stats();
        let mut rises: Vec<usize> = st.double_rises.iter().map(|p| p.1 as usize).collect();
        let mut falls: Vec<usize> = st.double_falls.iter().map(|p| p.0 as usize).collect();
        if n > 0 {
            rises.push(0);
            falls.push(n);
        }
        rises.sort_unstable();
        falls.sort_unstable();
        (rises, falls)
    }
}

impl fmt::Display for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&word_to_string(&self.word()))
    }
}

/// An `n`-periodic Dyck path, stored by its labelled area sequence
/// `c_0, …, c_{n-1}` (a cyclic Kupisch series in a fixed rotation).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PeriodicDyckPath {
    area: Vec<usize>,
}

impl PeriodicDyckPath {
    /// Builds the path with the given labelled area sequence.
    pub fn from_area(area: Vec<usize>) -> Result<Self, PathError> {
        KupischSeries::cyclic(area.clone())?;
        Ok(Self { area })
    }

    /// Builds the path of a cyclic Kupisch series (labels preserved).
    pub fn from_kupisch(k: &KupischSeries) -> Self {
        assert_eq!(k.kind(), Kind::Cyclic, "cyclic series expected");
        Self {
            area: k.entries().to_vec(),
        }
    }

    /// Builds a periodic path from one period of its step word and its
    /// global shift.  Row `0` is the row containing the first step.
    pub fn from_word(period: &[Step], shift: usize) -> Result<Self, PathError> {
        let n = period.iter().filter(|s| **s == Step::V).count();
        if n == 0 {
            return Err(PathError::Empty);
        }
        if 2 * n != period.len() {
            return Err(PathError::Unbalanced);
        }
        // Horizontal steps after the last vertical step wrap round to row 0.
        let trailing = period.iter().rev().take_while(|s| **s == Step::H).count();
        let mut counts = vec![0isize; n];
        counts[0] += trailing as isize;
        let mut row = 0;
        for s in &period[..period.len() - trailing] {
            match s {
                Step::H => counts[row] += 1,
                Step::V => row += 1,
            }
        }
        // c_x - c_{x-1} = h_x - 1; fix the additive constant by the shift.
        let mut rel = vec![0isize; n];
        for x in 1..n {
            rel[x] = rel[x - 1] + counts[x] - 1;
        }
        let min = *rel.iter().min().expect("non-empty");
        let area = rel
            .iter()
            .map(|r| (r - min) as usize + shift + 2)
            .collect();
        Self::from_area(area)
    }

    /// Period `n`.
    pub fn period(&self) -> usize {
        self.area.len()
    }

    /// Labelled area sequence.
    pub fn area(&self) -> &[usize] {
        &self.area
    }

    /// The cyclic Kupisch series with this labelled area sequence.
    pub fn to_kupisch(&self) -> KupischSeries {
        KupischSeries::cyclic(self.area.clone()).expect("area sequence is valid")
    }

    /// Global shift `min(c) - 2`.
    pub fn shift(&self) -> usize {
        self.area.iter().min().copied().unwrap_or(2) - 2
    }

    /// Row end `M_x = x + c_{x mod n} - 1` for any integer row `x`.
    pub fn row_end(&self, x: isize) -> isize {
        let n = self.period() as isize;
        x + self.area[x.rem_euclid(n) as usize] as isize - 1
    }

    /// Labelled coarea sequence: `d_j` counts lattice points in column `j`
    /// between the shifted diagonal and the path.
    pub fn coarea(&self) -> Vec<usize> {
        self.to_kupisch().cokupisch().entries().to_vec()
    }

    /// One period of the step word, starting with the horizontal run of row 0.
    pub fn word(&self) -> Vec<Step> {
        let n = self.period() as isize;
        let mut word = Vec::with_capacity(2 * self.period());
        for x in 0..n {
            let run = self.row_end(x) - self.row_end(x - 1);
            word.extend(std::iter::repeat_n(Step::H, run as usize));
            word.push(Step::V);
        }
        word
    }

    /// The balanced necklace of the path (lexicographically smallest rotation
    /// of the period word, `h < v`).
    pub fn necklace(&self) -> Vec<Step> {
        canonical_necklace(&self.word())
    }

    /// The path up to relabelling (canonical rotation of the area sequence).
    pub fn canonical(&self) -> Self {
        Self {
            area: canonical_necklace(&self.area),
        }
    }

    /// Reflection in the antidiagonal through the origin: the path of the
    /// opposite algebra, labelled so that row `x` of the result corresponds
    /// to column `-x` of `self`.  An involution.
    pub fn reverse_swap(&self) -> Self {
        let n = self.period();
        let op = self.to_kupisch().opposite_labelled().rotate(n - 1);
        Self::from_kupisch(&op)
    }

    /// All statistics of the path, positions reduced modulo the period.
    pub fn stats(&self) -> PathStats {
        Rows::periodic(self).stats()
    }

    /// Height: maximal area entry minus one.
    pub fn height(&self) -> usize {
        self.area.iter().max().copied().unwrap_or(1) - 1
    }

    /// Whether the path is constant (every row has one horizontal step).
    pub fn is_constant(&self) -> bool {
        self.area.iter().all(|&c| c == self.area[0])
    }

    /// Membership in the class of shift-0 paths with non-constant area.
    pub fn in_dyck_p(&self) -> bool {
        self.shift() == 0 && !self.is_constant()
    }

    /// Membership in the class of paths having a rectangle.
    pub fn in_dyck_h(&self) -> bool {
        !self.stats().rectangles.is_empty()
    }
}

impl fmt::Display for PeriodicDyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}*", join(&self.area, ","))
    }
}

/// Statistics of a (periodic) Dyck path.
///
/// Peaks, valleys, 1-rises, double rises and double falls are reported as
/// `(x, y)` lattice points (the peak/valley corner, the end of the rise, the
/// midpoints of double steps).  Returns, 1-cuts and hills are reported by
/// position.  For periodic paths rows are taken from one fundamental period
/// `0..n` and positions are reduced modulo `n`; column coordinates are left
/// unreduced.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathStats {
    /// Corners `(x, y)` between a horizontal and a following vertical step.
    pub peaks: Vec<(isize, isize)>,
    /// Corners `(x, y)` between a vertical and a following horizontal step.
    pub valleys: Vec<(isize, isize)>,
    /// Ends `(x, y)` of horizontal runs of length one.
    pub one_rises: Vec<(isize, isize)>,
    /// Midpoints `(x, y)` of two consecutive horizontal steps.
    pub double_rises: Vec<(isize, isize)>,
    /// Midpoints `(x, y)` of two consecutive vertical steps.
    pub double_falls: Vec<(isize, isize)>,
    /// Positions `i` at which a vertical step ends on the diagonal at `(i,i)`.
    pub returns: Vec<usize>,
    /// Positions `i` with a peak in row `i` and a peak in column `i+1`.
    pub one_cuts: Vec<usize>,
    /// For each `k`, positions `i` where `h^k v^k` starts at `(i,i)`.
    pub hills: BTreeMap<usize, Vec<usize>>,
    /// Rectangles `(i+1, j)`: valleys whose next valley lies strictly below row `j+1`.
    pub rectangles: Vec<(isize, isize)>,
    /// Maximal area entry minus one.
    pub height: usize,
    /// Whether every valley lies on the diagonal.
    pub is_bounce: bool,
    /// The parts `a_1, …, a_ℓ` when the path is a bounce path.
    pub bounce_parts: Vec<usize>,
}

impl PathStats {
    /// Positions of `k`-hills.
    pub fn hills_of(&self, k: usize) -> Vec<usize> {
        self.hills.get(&k).cloned().unwrap_or_default()
    }
}

/// Row-end view shared by Dyck and periodic paths.
struct Rows {
    n: usize,
    periodic: bool,
    area: Vec<usize>,
}

impl Rows {
    fn linear(d: &DyckPath) -> Self {
        Self {
            n: d.semilength(),
            periodic: false,
            area: d.area.clone(),
        }
    }

    fn periodic(p: &PeriodicDyckPath) -> Self {
        Self {
            n: p.period(),
            periodic: true,
            area: p.area.clone(),
        }
    }

    /// Row end `M_x`; for Dyck paths `M_{-1} = 0` and rows past `n` end at `n`.
    fn m(&self, x: isize) -> isize {
        let n = self.n as isize;
        if self.periodic {
            x + self.c(x) - 1
        } else if x < 0 {
            0
        } else if x > n {
            n
        } else {
            x + self.c(x) - 1
        }
    }

    fn c(&self, i: isize) -> isize {
        if self.periodic {
            self.area[i.rem_euclid(self.n as isize) as usize] as isize
        } else if (0..=self.n as isize).contains(&i) {
            self.area[i as usize] as isize
        } else {
            0
        }
    }

    /// Number of horizontal steps in row `x`.
    fn run(&self, x: isize) -> isize {
        self.m(x) - self.m(x - 1)
    }

    fn rows(&self) -> std::ops::Range<isize> {
        if self.periodic {
            0..self.n as isize
        } else {
            0..self.n as isize + 1
        }
    }

    fn position(&self, i: isize) -> usize {
        if self.periodic {
            i.rem_euclid(self.n as isize) as usize
        } else {
            i as usize
        }
    }

    /// Whether the lattice point `(i, i)` lies on the path.
    fn on_diagonal(&self, i: isize) -> bool {
        (!self.periodic && i == 0) || self.m(i - 1) == i
    }

    /// Whether some vertical step runs along column `y`.
    fn column_has_vertical(&self, y: isize) -> bool {
        if self.periodic {
            let n = self.n as isize;
            (0..n).any(|x| (self.m(x) - y).rem_euclid(n) == 0)
        } else {
            (0..self.n as isize).any(|x| self.m(x) == y)
        }
    }

    fn stats(&self) -> PathStats {
        let n = self.n as isize;
        let mut st = PathStats::default();
        if n == 0 {
            st.is_bounce = true;
            return st;
        }
        let first_row = if self.periodic { 0 } else { 1 };
        for x in self.rows() {
            let run = self.run(x);
            if run > 0 {
                st.peaks.push((x, self.m(x)));
                if x >= first_row {
                    st.valleys.push((x, self.m(x - 1)));
                }
                if run == 1 {
                    st.one_rises.push((x, self.m(x)));
                }
                for y in self.m(x - 1) + 1..self.m(x) {
                    st.double_rises.push((x, y));
                }
            } else if self.periodic || (x >= 1 && x < n) {
                st.double_falls.push((x, self.m(x)));
            }
        }
        let positions = if self.periodic { 0..n } else { 1..n + 1 };
        for i in positions {
            if self.m(i - 1) == i {
                st.returns.push(self.position(i));
            }
        }
        st.returns.sort_unstable();
        for i in 0..n {
            if self.run(i) > 0 && self.column_has_vertical(i + 1) {
                st.one_cuts.push(i as usize);
            }
            if self.on_diagonal(i) {
                let k = self.m(i) - i;
                if k >= 1 && self.m(i + k - 1) == i + k {
                    st.hills.entry(k as usize).or_default().push(i as usize);
                }
            }
        }
        // Rectangle (i+1, j): c_{i+1} + 1 = c_i + c_{i+c_i}, j = i + c_i - 1.
        for i in 0..n {
            let ci = self.c(i);
            if ci < 2 || (!self.periodic && i + ci > n) {
                continue;
            }
            if self.c(i + 1) + 1 == ci + self.c(i + ci) {
                st.rectangles.push((i + 1, i + ci - 1));
            }
        }
        st.height = self.area.iter().max().copied().unwrap_or(1) - 1;
        st.is_bounce = st.valleys.iter().all(|&(x, y)| x == y);
        if st.is_bounce {
            let mut marks: Vec<isize> = st.valleys.iter().map(|v| v.0).collect();
            if self.periodic {
                if let Some(&first) = marks.first() {
                    marks.push(first + n);
                }
            } else {
                marks.insert(0, 0);
                marks.push(n);
            }
            st.bounce_parts = marks.windows(2).map(|w| (w[1] - w[0]) as usize).collect();
        }
        st
    }
}

/// Rectangles detected geometrically: a valley `(x, y)` whose next valley
/// (cyclically for periodic paths; none counts as infinitely far) lies in a
/// row strictly greater than `y + 1`.  Reported as `(x, y)`.
pub fn rectangles_geometric(stats: &PathStats, period: Option<usize>) -> Vec<(isize, isize)> {
    let v = &stats.valleys;
    let mut out = Vec::new();
    for (idx, &(x, y)) in v.iter().enumerate() {
        let next_x = match (v.get(idx + 1), period) {
            (Some(&(nx, _)), _) => Some(nx),
            (None, Some(n)) => Some(v[0].0 + n as isize),
            (None, None) => None,
        };
        if next_x.is_none_or(|nx| nx > y + 1) {
            out.push((x, y));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(area: &[usize]) -> DyckPath {
        DyckPath::from_area(area.to_vec()).unwrap()
    }

    #[test]
    fn word_roundtrip_and_example_area() {
        let w = parse_word("1,1,0,0,1,1,1,0,0,1,1,1,0,1,0,1,0,0,0,1,0,1,1,0,0,0,1,0").unwrap();
        let d = DyckPath::from_word(&w).unwrap();
        assert_eq!(d.area(), &[3, 2, 4, 3, 5, 5, 5, 4, 3, 3, 4, 3, 2, 2, 1]);
        assert_eq!(d.word(), w);
        assert_eq!(path(&[2, 2, 1]).to_string(), "hvhv");
    }

    #[test]
    fn coarea_example() {
        let d = path(&[3, 2, 4, 3, 5, 5, 4, 5, 4, 5, 4, 3, 2, 2, 1]);
        assert_eq!(d.coarea(), vec![1, 2, 3, 2, 3, 4, 3, 4, 5, 5, 4, 5, 4, 5, 2]);
        assert_eq!(d.height(), 4);
        assert_eq!(DyckPath::from_coarea(&d.coarea()).unwrap(), d);
    }

    #[test]
    fn periodic_word_example() {
        let w = parse_word("hvvhvhhhvv").unwrap();
        let p = PeriodicDyckPath::from_word(&w, 1).unwrap();
        assert_eq!(p.area(), &[4, 3, 3, 5, 4]);
        assert_eq!(p.shift(), 1);
        let again = PeriodicDyckPath::from_word(&p.word(), 1).unwrap();
        assert_eq!(again, p);
    }

    #[test]
    fn rectangles_example() {
        let st = path(&[5, 4, 10, 9, 8, 7, 6, 5, 4, 4, 3, 2, 1]).stats();
        assert_eq!(st.rectangles, vec![(2, 4), (9, 11)]);
    }

    #[test]
    fn staircase_and_single_peak() {
        let n = 5;
        let mut area = vec![2; n];
        area.push(1);
        let st = path(&area).stats();
        assert_eq!(st.hills_of(1), (0..n).collect::<Vec<_>>());
        assert_eq!(st.returns, (1..=n).collect::<Vec<_>>());
        assert!(st.is_bounce);
        let peak: Vec<usize> = (1..=n + 1).rev().collect();
        let st = path(&peak).stats();
        assert_eq!(st.peaks, vec![(0, n as isize)]);
        assert!(st.valleys.is_empty());
        assert_eq!(st.height, n);
    }

    #[test]
    fn bounce_examples() {
        assert_eq!(path(&[3, 2, 3, 2, 1]).bounce_parts(), Some(vec![2, 2]));
        assert_eq!(path(&[2, 2, 2, 2, 1]).bounce_parts(), Some(vec![1, 1, 1, 1]));
        assert_eq!(path(&[3, 3, 2, 1]).bounce_parts(), None);
        let p = PeriodicDyckPath::from_area(vec![2, 2, 2]).unwrap();
        assert_eq!(p.height(), 1);
    }

    #[test]
    fn semilength_zero() {
        let d = path(&[1]);
        assert!(d.word().is_empty());
        assert_eq!(d.stats().peaks.len(), 0);
    }
}
