//! The Lalanne–Kreweras involution and its periodic generalisation.
//!
//! Given a path, collect the columns of its double-rise midpoints and the
//! rows of its double-fall midpoints (there are equally many).  Pairing the
//! `i`-th column with the `i`-th row in increasing order marks the valleys of
//! the image on the mirrored side of the diagonal; reflecting back in the
//! antidiagonal gives the valleys `(n − f_i, n − r_i)` of the image.
//!
//! For periodic paths the pairing starts at an anchor: the lines met after a
//! return of a shift-0 path, or after the column `j` of a rectangle `(i+1, j)`.

use super::BijectionError;
use crate::dyck::{DyckPath, PeriodicDyckPath};

/// Builds the Dyck path of semilength `n` whose valleys are the given points
/// (sorted by row).
pub fn path_from_valleys(n: usize, valleys: &[(usize, usize)]) -> Result<DyckPath, BijectionError> {
    let ends: Vec<usize> = (0..=n)
        .map(|x| valleys.iter().find(|v| v.0 > x).map_or(n, |v| v.1))
        .collect();
    if ends.windows(2).any(|w| w[0] > w[1]) || ends.iter().enumerate().any(|(x, &m)| m < x) {
        return Err(BijectionError::Internal(format!("valleys {valleys:?}")));
    }
    let area: Vec<usize> = ends.iter().enumerate().map(|(x, m)| m + 1 - x).collect();
    DyckPath::from_area(area).map_err(|e| BijectionError::Internal(e.to_string()))
}

/// The Lalanne–Kreweras involution.
pub fn lk(d: &DyckPath) -> DyckPath {
    let n = d.semilength() as isize;
    let st = d.stats();
    let mut rises: Vec<isize> = st.double_rises.iter().map(|p| p.1).collect();
    let mut falls: Vec<isize> = st.double_falls.iter().map(|p| p.0).collect();
    rises.sort_unstable();
    falls.sort_unstable();
    debug_assert_eq!(rises.len(), falls.len());
    let valleys: Vec<(usize, usize)> = rises
        .iter()
        .zip(&falls)
        .rev()
        .map(|(r, f)| ((n - f) as usize, (n - r) as usize))
        .collect();
    path_from_valleys(d.semilength(), &valleys).expect("the image of a Dyck path is a Dyck path")
}

/// Anchors from which the periodic pairing may start: one past every return
/// of a shift-0 non-constant path, and one past the column of every
/// rectangle.
pub fn lk_periodic_anchors(p: &PeriodicDyckPath) -> Vec<isize> {
    let st = p.stats();
    let mut anchors = Vec::new();
    if p.in_dyck_p() {
        anchors.extend(st.returns.iter().map(|&r| r as isize + 1));
    }
    anchors.extend(st.rectangles.iter().map(|&(_, j)| j + 1));
    anchors
}

/// The generalised Lalanne–Kreweras map on shift-0 non-constant paths and on
/// paths with a rectangle, using the smallest anchor of the applicable class.
pub fn lk_periodic(p: &PeriodicDyckPath) -> Result<PeriodicDyckPath, BijectionError> {
    let st = p.stats();
    let anchor = if p.in_dyck_p() {
        st.returns.iter().min().map(|&r| r as isize + 1)
    } else {
        st.rectangles.iter().map(|&(_, j)| j + 1).min()
    };
    match anchor {
        Some(a) => lk_periodic_anchored(p, a),
        None => Err(BijectionError::OutOfDomain(p.to_string())),
    }
}

/// The periodic map with an explicit anchor: lines are read in the window
/// `[anchor, anchor + n)` and paired in increasing order.
pub fn lk_periodic_anchored(
    p: &PeriodicDyckPath,
    anchor: isize,
) -> Result<PeriodicDyckPath, BijectionError> {
    let n = p.period() as isize;
    let st = p.stats();
    let lift = |v: isize| anchor + (v - anchor).rem_euclid(n);
    let mut rises: Vec<isize> = st.double_rises.iter().map(|q| lift(q.1)).collect();
    let mut falls: Vec<isize> = st.double_falls.iter().map(|q| lift(q.0)).collect();
    rises.sort_unstable();
    falls.sort_unstable();
    if rises.is_empty() || rises.len() != falls.len() {
        return Err(BijectionError::OutOfDomain(p.to_string()));
    }
    let mut valleys: Vec<(isize, isize)> = rises.iter().zip(&falls).map(|(r, f)| (-f, -r)).collect();
    valleys.sort_unstable();
    let m = valleys.len();
    let extended: Vec<(isize, isize)> = (-3..=3)
        .flat_map(|t| valleys.iter().map(move |&(x, y)| (x + t * n, y + t * n)))
        .collect();
    let mut sorted = extended;
    sorted.sort_unstable();
    if sorted.windows(2).any(|w| w[0].1 >= w[1].1 || w[0].0 >= w[1].0) || m == 0 {
        return Err(BijectionError::Internal(format!("unordered valleys {valleys:?}")));
    }
    let mut area = Vec::with_capacity(n as usize);
    for x in 0..n {
        let end = sorted
            .iter()
            .find(|v| v.0 > x)
            .map(|v| v.1)
            .ok_or_else(|| BijectionError::Internal("valley window".into()))?;
        let c = end - x + 1;
        if c < 2 {
            return Err(BijectionError::Internal(format!("row {x} below the diagonal")));
        }
        area.push(c as usize);
    }
    PeriodicDyckPath::from_area(area).map_err(|e| BijectionError::Internal(e.to_string()))
}

/// The alternative periodic extension that preserves the global shift:
/// subtract the shift, apply the shift-0 map, and add the shift back.  This
/// variant does not transport regular simples.
pub fn lk_periodic_shift_preserving(p: &PeriodicDyckPath) -> Result<PeriodicDyckPath, BijectionError> {
    let s = p.shift();
    let base = PeriodicDyckPath::from_area(p.area().iter().map(|c| c - s).collect())
        .map_err(|e| BijectionError::Internal(e.to_string()))?;
    let image = lk_periodic(&base)?;
    PeriodicDyckPath::from_area(image.area().iter().map(|c| c + s).collect())
        .map_err(|e| BijectionError::Internal(e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dyck::parse_word;

    fn path(area: &[usize]) -> DyckPath {
        DyckPath::from_area(area.to_vec()).unwrap()
    }

    fn per(area: &[usize]) -> PeriodicDyckPath {
        PeriodicDyckPath::from_area(area.to_vec()).unwrap()
    }

    #[test]
    fn example_image() {
        let d = path(&[3, 2, 4, 3, 5, 5, 5, 4, 3, 3, 4, 3, 2, 2, 1]);
        let e = lk(&d);
        let expected = parse_word("hhvvhhhhhvhvvvhhvhvvvvhhvvhv").unwrap();
        assert_eq!(e.word(), expected);
        let st = e.stats();
        assert_eq!(st.one_cuts, vec![6, 7, 13]);
        assert_eq!(st.hills_of(2), vec![0, 11]);
        assert_eq!(lk(&e), d);
    }

    #[test]
    fn staircase_and_peak_exchange() {
        for n in 1..7 {
            let mut stair = vec![2; n];
            stair.push(1);
            let peak: Vec<usize> = (1..=n + 1).rev().collect();
            assert_eq!(lk(&path(&stair)), path(&peak));
            assert_eq!(lk(&path(&peak)), path(&stair));
        }
        assert_eq!(lk(&path(&[2, 1])), path(&[2, 1]));
    }

    #[test]
    fn periodic_examples() {
        assert_eq!(lk_periodic(&per(&[3, 3, 2])).unwrap().canonical(), per(&[3, 5, 4]));
        assert_eq!(lk_periodic(&per(&[5, 4, 3])).unwrap().canonical(), per(&[2, 3, 3]));
        assert!(matches!(lk_periodic(&per(&[2, 2])), Err(BijectionError::OutOfDomain(_))));
        let alt = lk_periodic_shift_preserving(&per(&[5, 4, 3])).unwrap();
        assert_eq!(alt.canonical(), per(&[3, 3, 4]));
    }
}
