//! The zeta map, read off the coarea sequence.
//!
//! With `a_k` the number of columns of coarea `k`, the image starts with
//! `a_2` horizontal steps; then for `k = 1, 2, …` the coarea sequence is
//! scanned left to right, writing a vertical step for every entry `k + 1`
//! and a horizontal step for every entry `k + 2`.

use crate::dyck::{DyckPath, Step};

/// The zeta image of a path.
pub fn zeta(d: &DyckPath) -> DyckPath {
    let co = d.coarea();
    let max = co.iter().copied().max().unwrap_or(0);
    let mut word: Vec<Step> = co.iter().filter(|&&v| v == 2).map(|_| Step::H).collect();
    for k in 1..max {
        for &v in &co {
            if v == k + 1 {
                word.push(Step::V);
            } else if v == k + 2 {
                word.push(Step::H);
            }
        }
    }
    DyckPath::from_word(&word).expect("the zeta image is a Dyck path")
}

/// The relabelling `k(j)` for columns `j = 1..=n`: the number of columns
/// with smaller coarea, plus the earlier columns with equal coarea, minus
/// one.  Position `j - 1` of the result holds `k(j)`.
pub fn zeta_labelling(d: &DyckPath) -> Vec<usize> {
    let co = d.coarea();
    let n = d.semilength();
    (1..=n)
        .map(|j| {
            let smaller = co.iter().filter(|&&v| v < co[j]).count();
            let equal_before = co[..j].iter().filter(|&&v| v == co[j]).count();
            smaller + equal_before - 1
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn example_image_and_labels() {
        let d = DyckPath::from_coarea(&[1, 2, 2, 3, 4, 3, 4, 5, 6, 6, 6, 6, 7, 5, 3]).unwrap();
        let z = zeta(&d);
        // The figure draws paths mirrored in the antidiagonal.
        let drawn = crate::dyck::parse_word("1011111000010011101010001100").unwrap();
        let drawn = DyckPath::from_word(&drawn).unwrap().reverse_swap();
        assert_eq!(z, drawn);
        assert_eq!(z.area(), &[3, 2, 4, 4, 4, 3, 2, 3, 6, 5, 4, 3, 2, 2, 1]);
        assert_eq!(zeta_labelling(&d), vec![0, 1, 2, 5, 3, 6, 7, 9, 10, 11, 12, 13, 8, 4]);
    }
}
