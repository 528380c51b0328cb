//! Nakayama algebras through Dyck path combinatorics.
//!
//! A Nakayama algebra is encoded by its Kupisch series; linear algebras
//! correspond to Dyck paths and cyclic ones to periodic Dyck paths.  The
//! crate computes homological invariants of simple modules (projective
//! dimension, Ext groups, regularity), transports them along explicit
//! bijections to path statistics, and enumerates algebras to check counting
//! formulas and generating functions.

pub mod bijections;
pub mod cli;
pub mod counts;
pub mod dyck;
pub mod enumerate;
pub mod experiment;
pub mod tables;
pub mod verify;
pub mod formulas;
pub mod homology;
pub mod kupisch;
pub mod series;
pub mod sharpness;

pub use dyck::{DyckPath, PathStats, PeriodicDyckPath, Step};
pub use homology::{Dim, HomProfile};
pub use kupisch::{IndModule, Kind, KupischSeries};
