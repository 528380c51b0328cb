//! Maximal numbers of 2-regular simples and witnesses attaining them.

use nakayama::kupisch::Kind;
use nakayama::sharpness::sharpness_check;

fn main() {
    for n in 2..=9 {
        for (kind, shifts) in [(Kind::Linear, 0), (Kind::Cyclic, 2)] {
            let r = sharpness_check(n, kind, shifts);
            println!(
                "{kind} n={n}: bound {}, max {}, witness {:?}, standard {:?}",
                r.bound, r.max_found, r.witness, r.standard_witness
            );
        }
    }
}
