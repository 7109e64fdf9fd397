//! Young wall realizations of the level-1 highest weight crystals for the
//! rank-3 affine types d4_3 and g2_1.
//!
//! The library builds the two perfect crystals, derives the energy function
//! three independent ways, affinizes to get the combinatorial R-matrix, and
//! realizes the highest weight crystals both as reduced Young walls and as
//! truncated ground-state paths so the two constructions can be checked
//! against each other.
//!
//! Verification sweeps and crystal generation run data-parallel via rayon
//! when the (default) `parallel` feature is enabled; every entry point also
//! accepts an explicit sequential mode.

pub mod cartan;
pub mod column;
pub mod crystal;
pub mod energy;
pub mod exec;
pub mod fixtures;
pub mod path_model;
pub mod perfect;
pub mod report;
pub mod verify;
pub mod wall;

pub use cartan::{AffineType, Weight};
pub use crystal::{CrystalGraph, ElementId};
pub use exec::Parallelism;
pub use path_model::PathModel;
pub use perfect::PerfectCrystal;
pub use wall::{WallModel, YoungWall};
