//! Trivariate counting series against their quadratic equations.

use nakayama::series::{gf_verify, GfIdentity};

fn main() {
    for id in [GfIdentity::Pdim, GfIdentity::Regularity] {
        let r = gf_verify(id, 8);
        println!(
            "{}: residual zero {}, displayed prefix matches {}, x offset {}, literal residual zero {}",
            id.name(),
            r.residual_zero,
            r.prefix_matches,
            r.x_offset,
            r.literal_residual_zero
        );
    }
}
