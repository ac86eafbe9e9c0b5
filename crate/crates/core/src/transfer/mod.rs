//! Transfer-matrix computation for products `G x P_n`.
//!
//! [`engine`] works for any small slice graph `G` by tracking, for the last
//! slice, its coloring together with which of its vertices are already joined
//! through earlier slices. [`classes`] builds the much smaller system for
//! complete slices `K_m`, where color classes only matter up to relabeling.

mod classes;
mod engine;

pub use classes::{color_classes, km_prism_gf, km_transfer_system, ColorClass, KmSystem};
pub use engine::{
    finalize, initial_states, prism_distribution, prism_distribution_with, prism_expected,
    prism_series, step, EngineConfig, Profile, StateWeights,
};
