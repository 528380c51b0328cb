//! Algebras of global dimension at most two as even subsets (linear) and as
//! rotation classes of pairs (cyclic).

use nakayama::bijections::{gd2_cyclic_pairs, gd2_to_subset, subset_to_gd2};
use nakayama::enumerate::{generate_linear, quasi_hereditary_cyclic};
use nakayama::homology::{gd_at_most_2_criterion, global_dimension, Dim};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for k in generate_linear(5).into_iter().filter(gd_at_most_2_criterion) {
        let s = gd2_to_subset(&k)?;
        println!("{k} <-> {s:?} (round trip {})", subset_to_gd2(&s, 4)? == k);
    }
    for k in quasi_hereditary_cyclic(4).into_iter().filter(|k| global_dimension(k) == Dim::Finite(2)) {
        println!("{k} <-> pairs {:?}", gd2_cyclic_pairs(&k)?);
    }
    Ok(())
}
