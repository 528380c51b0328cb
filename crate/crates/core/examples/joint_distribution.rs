//! Joint distribution of 1-regular simples and 1-rises (exploratory).

use nakayama::experiment::joint_distribution;

fn main() {
    for n in 1..=7 {
        let t = joint_distribution(n);
        println!("n={n} symmetric={} {:?}", t.symmetric, t.counts);
    }
}
