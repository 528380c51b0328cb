//! Restricted Gorenstein algebras of global dimension at most two: the
//! bounce-path criterion against the two-sided homological check.

use nakayama::enumerate::generate_linear;
use nakayama::homology::{gd_at_most_2_criterion, restricted_gorenstein_gd2, restricted_gorenstein_oracle};

fn main() {
    for rank in 2..=8 {
        let gd2: Vec<_> = generate_linear(rank).into_iter().filter(gd_at_most_2_criterion).collect();
        let by_paths = gd2.iter().filter(|k| restricted_gorenstein_gd2(k) == Ok(true)).count();
        let by_homology = gd2.iter().filter(|k| restricted_gorenstein_oracle(k) == Ok(true)).count();
        println!("rank {rank}: {by_paths} by paths, {by_homology} by homology");
    }
}
