//! Blow-ups of the plane at the origin and the trees of infinitely near
//! points they produce.

mod appendix;
mod chart;
mod render;
mod tree;

pub use appendix::{appendix_sequence, AppendixOutcome, AppendixSequence, AppendixStage};
pub use chart::{blow_up_chart, exceptional_points, total_transform};
pub use render::{joint_to_dot, tree_to_dot};
pub use tree::{
    joint_tree, resolve_tree, tracked_tree, Growth, InfNearNode, InfNearTree, JointNode, JointTree,
    Termination, Track,
};

use crate::exactfield::DEFAULT_SEED;

/// Resource bounds shared by all tree-building operations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Limits {
    /// Deepest neighborhood that may still be blown up.
    pub max_depth: usize,
    /// Seed for randomized factoring over finite fields.
    pub seed: u64,
    /// Cap on the absolute degree of field extensions created on the way.
    pub max_extension_degree: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { max_depth: 64, seed: DEFAULT_SEED, max_extension_degree: 64 }
    }
}
