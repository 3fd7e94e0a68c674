//! The sufficient condition for a curve to be adjoint at a point.

use serde::Serialize;

use crate::blowup::{tracked_tree, Growth, Limits};
use crate::error::{Error, Result};
use crate::polyring::elim::{is_squarefree, require_coprime};
use crate::polyring::{mult_at_origin, MultiPoly};

pub const ADJOINT_LABEL: &str = "virtual adjoint condition";

#[derive(Debug, Clone, Serialize)]
pub struct NodeMargin {
    pub depth: usize,
    pub r_c: u32,
    pub r_g: u32,
    /// `r_Q(G) − (r_Q(C) − 1)`.
    pub margin: i64,
}

#[derive(Debug, Clone, Serialize)]
pub struct AdjointReport {
    pub condition: &'static str,
    pub adjoint: bool,
    pub margins: Vec<NodeMargin>,
}

/// Checks `r_Q(G) ≥ r_Q(C) − 1` at every node of the resolution of `C` at
/// the origin. A `false` answer only means the sufficient condition fails.
pub fn adjoint_check(c: &MultiPoly, g: &MultiPoly, limits: &Limits) -> Result<AdjointReport> {
    require_coprime(c, g)?;
    if !is_squarefree(c) {
        return Err(Error::NotSquarefree);
    }
    if mult_at_origin(c)? == 0 {
        return Err(Error::Precondition(format!("{c} does not vanish at the origin")));
    }
    let tree = tracked_tree(&[c], &[g], Growth::Resolve, limits)?;
    if !tree.is_resolved() {
        return Err(Error::DepthCapExceeded(limits.max_depth));
    }
    let margins: Vec<NodeMargin> = tree
        .nodes()
        .iter()
        .map(|n| {
            let (r_c, r_g) = (n.r(0), n.r(1));
            NodeMargin { depth: n.depth, r_c, r_g, margin: i64::from(r_g) - (i64::from(r_c) - 1) }
        })
        .collect();
    let adjoint = margins.iter().all(|m| m.margin >= 0);
    Ok(AdjointReport { condition: ADJOINT_LABEL, adjoint, margins })
}
