//! Dyck paths as 321-avoiding permutations via valley crosses.

use nakayama::bijections::{bjs, lk};
use nakayama::enumerate::dyck_paths;

fn main() {
    for d in dyck_paths(3) {
        let perm = bjs(&d);
        println!("{d} -> {:?} (fixed points {:?}); involution image peaks {:?}", perm.values(), perm.fixed_points(), lk(&d).stats().peaks);
    }
}
