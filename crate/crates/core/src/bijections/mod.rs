//! Bijections on (periodic) Dyck paths that transport path statistics to
//! homological properties of the corresponding Nakayama algebras.

mod bjs;
mod gd2;
mod lk;
mod phi;
mod zeta;

pub use bjs::{bjs, bjs_crosses, Permutation321};
pub use gd2::{gd2_cyclic_pairs, gd2_to_subset, subset_to_gd2};
pub use lk::{
    lk, lk_periodic, lk_periodic_anchored, lk_periodic_anchors, lk_periodic_shift_preserving,
    path_from_valleys,
};
pub use phi::{cycle_diagram, phi, psi, CycleDiagram, PointClass};
pub use zeta::{zeta, zeta_labelling};

use thiserror::Error;

use crate::dyck::{DyckPath, PeriodicDyckPath};
use crate::kupisch::KupischSeries;

/// The reflected path of a linear algebra: the reverse-swap of its Dyck
/// path, i.e. the path of the opposite algebra.  Regular simples `S_i` are
/// read off the images of this path at position `i`.
pub fn reflected_path(k: &KupischSeries) -> DyckPath {
    DyckPath::from_kupisch(k).reverse_swap()
}

/// The reflected periodic path of a cyclic algebra (see
/// [`PeriodicDyckPath::reverse_swap`]).
pub fn reflected_periodic_path(k: &KupischSeries) -> PeriodicDyckPath {
    PeriodicDyckPath::from_kupisch(k).reverse_swap()
}

/// Errors raised by the bijections.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum BijectionError {
    /// The input lies outside the domain of the map.
    #[error("input outside the domain of the map: {0}")]
    OutOfDomain(String),
    /// The algebra has global dimension larger than two.
    #[error("global dimension exceeds 2")]
    NotGd2,
    /// A subset does not describe an algebra.
    #[error("invalid subset: {0}")]
    BadSubset(String),
    /// An internal construction produced an invalid path.
    #[error("construction produced an invalid path: {0}")]
    Internal(String),
}
