//! Trees of infinitely near points.
//!
//! A single engine grows every tree in the crate. Each node carries, for a
//! list of tracked curves, the proper transform recentered at the node (or
//! `None` when that transform misses it). The first `driving` curves decide
//! where the tree branches; the remaining curves are carried along the same
//! charts so their multiplicities can be read off.

use serde::Serialize;

use super::chart::strict_transform;
use super::Limits;
use crate::error::{Error, Result};
use crate::exactfield::{splitting_field, uni_factor_seeded, Field, Scalar};
use crate::polyring::elim::{is_squarefree, require_coprime};
use crate::polyring::{
    dehomogenized_form, joint_shear, mult_at_origin, CoordChange, MultiPoly, Step, Vars,
};

/// How far a tracked tree grows.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Growth {
    /// Nodes lie on at least two driving curves; stop once they separate.
    Separate,
    /// Nodes lie on at least one driving curve; expand while the driving
    /// multiplicities sum to 2 or more (a singular point of one curve, or a
    /// point shared by two).
    Resolve,
}

impl Growth {
    fn keep(self, rs: &[u32]) -> bool {
        let passing = rs.iter().filter(|&&r| r > 0).count();
        match self {
            Growth::Separate => passing >= 2,
            Growth::Resolve => passing >= 1,
        }
    }

    fn expand(self, rs: &[u32]) -> bool {
        match self {
            Growth::Separate => self.keep(rs),
            Growth::Resolve => rs.iter().sum::<u32>() >= 2,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Termination {
    Resolved,
    DepthCapped,
}

/// A proper transform at a node.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Track {
    pub local_eq: MultiPoly,
    pub r: u32,
}

/// One infinitely near point of a single curve.
#[derive(Debug, Clone, Serialize)]
pub struct InfNearNode {
    pub id: usize,
    pub depth: usize,
    pub field: Field,
    pub local_eq: MultiPoly,
    pub r: u32,
    /// Root α of the parent's tangent polynomial that this node sits over.
    pub shift: Scalar,
    /// Substitutions applied in the parent's blown-up chart: the recentering
    /// translation, then the shear and tilt putting the node in normal form.
    pub coord_change: CoordChange,
    pub children: Vec<InfNearNode>,
}

#[derive(Debug, Clone, Serialize)]
pub struct InfNearTree {
    pub termination: Termination,
    pub root: InfNearNode,
}

/// A node shared by several tracked curves.
#[derive(Debug, Clone, Serialize)]
pub struct JointNode {
    pub id: usize,
    pub depth: usize,
    pub field: Field,
    pub shift: Scalar,
    pub coord_change: CoordChange,
    pub curves: Vec<Option<Track>>,
    pub children: Vec<JointNode>,
}

impl JointNode {
    /// Multiplicity of curve `i` here, 0 when its transform misses the node.
    pub fn r(&self, i: usize) -> u32 {
        self.curves.get(i).and_then(|t| t.as_ref()).map_or(0, |t| t.r)
    }

    pub fn rs(&self) -> Vec<u32> {
        (0..self.curves.len()).map(|i| self.r(i)).collect()
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct JointTree {
    pub termination: Termination,
    /// Number of leading curves that shape the tree; the rest are carried.
    pub driving: usize,
    pub root: JointNode,
}

fn preorder<N>(root: &N, children: fn(&N) -> &[N]) -> Vec<&N> {
    let mut out = Vec::new();
    let mut stack = vec![root];
    while let Some(n) = stack.pop() {
        out.push(n);
        stack.extend(children(n).iter().rev());
    }
    out
}

impl InfNearTree {
    pub fn is_resolved(&self) -> bool {
        self.termination == Termination::Resolved
    }

    /// All nodes in preorder.
    pub fn nodes(&self) -> Vec<&InfNearNode> {
        preorder(&self.root, |n| &n.children)
    }

    /// `(depth, r)` over the nodes with `r ≥ 2`, in preorder.
    pub fn multiplicity_sequence(&self) -> Vec<(usize, u32)> {
        self.nodes().into_iter().filter(|n| n.r >= 2).map(|n| (n.depth, n.r)).collect()
    }
}

impl JointTree {
    pub fn is_resolved(&self) -> bool {
        self.termination == Termination::Resolved
    }

    pub fn nodes(&self) -> Vec<&JointNode> {
        preorder(&self.root, |n| &n.children)
    }
}

struct RawNode {
    depth: usize,
    field: Field,
    shift: Scalar,
    change: CoordChange,
    tracks: Vec<Option<Track>>,
    children: Vec<RawNode>,
    capped: bool,
}

impl RawNode {
    fn any_capped(&self) -> bool {
        self.capped || self.children.iter().any(RawNode::any_capped)
    }
}

struct Engine<'a> {
    driving: usize,
    growth: Growth,
    limits: &'a Limits,
}

fn passing(curves: &[Option<MultiPoly>]) -> Result<Vec<u32>> {
    curves
        .iter()
        .map(|c| match c {
            Some(f) => mult_at_origin(f),
            None => Ok(0),
        })
        .collect()
}

fn lift_all(curves: &mut [Option<MultiPoly>], field: &Field) -> Result<()> {
    for f in curves.iter_mut().flatten() {
        *f = f.lift(field)?;
    }
    Ok(())
}

fn apply_all(curves: &mut [Option<MultiPoly>], step: &Step) {
    for f in curves.iter_mut().flatten() {
        *f = step.apply(f);
    }
}

impl Engine<'_> {
    fn grow(&self, mut curves: Vec<Option<MultiPoly>>, depth: usize, shift: Scalar, mut change: CoordChange) -> Result<RawNode> {
        let rs = passing(&curves)?;
        for (c, &r) in curves.iter_mut().zip(&rs) {
            if r == 0 {
                *c = None;
            }
        }
        let present: Vec<&MultiPoly> = curves.iter().flatten().collect();
        let lambda = joint_shear(&present)?;
        let mut field = lambda.field().clone();
        lift_all(&mut curves, &field)?;
        let shear = Step::Shear(lambda);
        apply_all(&mut curves, &shear);
        change.push(shear);

        let driving_rs = &rs[..self.driving];
        let expand = self.growth.expand(driving_rs);
        let capped = expand && depth >= self.limits.max_depth;
        let mut roots: Vec<Scalar> = Vec::new();
        if expand && !capped {
            let tangents: Vec<_> = curves[..self.driving]
                .iter()
                .zip(driving_rs)
                .filter_map(|(c, &r)| c.as_ref().map(|f| dehomogenized_form(&f.homogeneous_part(r))))
                .collect();
            field = splitting_field(&field, &tangents, self.limits.max_extension_degree, self.limits.seed)?;
            lift_all(&mut curves, &field)?;
            for t in &tangents {
                for (a, _) in uni_factor_seeded(&t.lift(&field)?, self.limits.seed)?.roots() {
                    if !roots.contains(&a) {
                        roots.push(a);
                    }
                }
            }
            roots.sort_by_cached_key(|a| a.to_string());
            if let [a] = roots.as_slice() {
                if !a.is_zero() {
                    // single shared tangent y = a·x: straighten it to y = 0
                    let tilt = Step::Tilt(a.clone());
                    apply_all(&mut curves, &tilt);
                    change.push(tilt);
                    roots = vec![Scalar::zero(&field)];
                }
            }
        }

        let tracks: Vec<Option<Track>> = curves
            .iter()
            .zip(&rs)
            .map(|(c, &r)| c.as_ref().map(|f| Track { local_eq: f.clone(), r }))
            .collect();
        let mut node = RawNode { depth, field: field.clone(), shift, change, tracks, children: Vec::new(), capped };
        if roots.is_empty() {
            return Ok(node);
        }

        let transforms: Vec<Option<MultiPoly>> = curves
            .iter()
            .zip(&rs)
            .map(|(c, &r)| c.as_ref().map(|f| strict_transform(f, r)))
            .collect();
        let zero = Scalar::zero(&field);
        for alpha in roots {
            let step = Step::Translate(zero.clone(), alpha.clone());
            let moved: Vec<Option<MultiPoly>> = transforms.iter().map(|c| c.as_ref().map(|f| step.apply(f))).collect();
            let child_rs = passing(&moved)?;
            if !self.growth.keep(&child_rs[..self.driving]) {
                continue;
            }
            node.children.push(self.grow(moved, depth + 1, alpha, CoordChange::single(step))?);
        }
        Ok(node)
    }
}

fn next_id(next: &mut usize) -> usize {
    *next += 1;
    *next - 1
}

fn to_joint(raw: &RawNode, next: &mut usize) -> JointNode {
    let id = next_id(next);
    JointNode {
        id,
        depth: raw.depth,
        field: raw.field.clone(),
        shift: raw.shift.clone(),
        coord_change: raw.change.clone(),
        curves: raw.tracks.clone(),
        children: raw.children.iter().map(|c| to_joint(c, next)).collect(),
    }
}

fn to_single(raw: &RawNode, next: &mut usize) -> InfNearNode {
    let id = next_id(next);
    let track = raw.tracks[0].clone().expect("kept nodes lie on the curve");
    InfNearNode {
        id,
        depth: raw.depth,
        field: raw.field.clone(),
        local_eq: track.local_eq,
        r: track.r,
        shift: raw.shift.clone(),
        coord_change: raw.change.clone(),
        children: raw.children.iter().map(|c| to_single(c, next)).collect(),
    }
}

fn require_affine(f: &MultiPoly) -> Result<()> {
    if f.vars() != Vars::Affine {
        return Err(Error::VariableMismatch("expected an affine polynomial in x, y".into()));
    }
    Ok(())
}

fn grow_raw(driving: &[&MultiPoly], carried: &[&MultiPoly], growth: Growth, limits: &Limits) -> Result<RawNode> {
    let all: Vec<&MultiPoly> = driving.iter().chain(carried).copied().collect();
    let mut field = all.first().map(|f| f.field().clone()).ok_or(Error::ZeroPolynomial)?;
    for f in &all {
        require_affine(f)?;
        if f.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        field = Field::common(&field, f.field())?;
    }
    let curves: Vec<Option<MultiPoly>> = all.iter().map(|f| f.lift(&field).map(Some)).collect::<Result<_>>()?;
    let rs = passing(&curves)?;
    if !growth.keep(&rs[..driving.len()]) {
        return Err(Error::Precondition("the curves do not meet at the origin".into()));
    }
    let engine = Engine { driving: driving.len(), growth, limits };
    engine.grow(curves, 0, Scalar::zero(&field), CoordChange::identity())
}

/// Resolves the singularity of `f` at the origin.
///
/// Every node with `r ≥ 2` is blown up; children sit over the distinct roots
/// of the node's tangent polynomial. Reaching `limits.max_depth` sets the
/// termination flag instead of failing.
pub fn resolve_tree(f: &MultiPoly, limits: &Limits) -> Result<InfNearTree> {
    require_affine(f)?;
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if !is_squarefree(f) {
        return Err(Error::NotSquarefree);
    }
    if mult_at_origin(f)? == 0 {
        return Err(Error::Precondition(format!("{f} does not vanish at the origin")));
    }
    let raw = grow_raw(&[f], &[], Growth::Resolve, limits)?;
    let termination = if raw.any_capped() { Termination::DepthCapped } else { Termination::Resolved };
    Ok(InfNearTree { termination, root: to_single(&raw, &mut 0) })
}

/// Shared tree of the points infinitely near the origin lying on at least two
/// of the given curves, grown until their proper transforms separate.
pub fn joint_tree(curves: &[&MultiPoly], limits: &Limits) -> Result<JointTree> {
    if !(2..=3).contains(&curves.len()) {
        return Err(Error::Precondition("a joint tree tracks two or three curves".into()));
    }
    for (i, f) in curves.iter().enumerate() {
        for g in &curves[i + 1..] {
            require_coprime(f, g)?;
        }
    }
    for f in curves {
        if mult_at_origin(f)? == 0 {
            return Err(Error::Precondition(format!("{f} does not vanish at the origin")));
        }
    }
    tracked_tree(curves, &[], Growth::Separate, limits)
}

/// General form behind [`resolve_tree`] and [`joint_tree`]: `driving` curves
/// shape the tree according to `growth`, `carried` curves ride along.
/// No coprimality or squarefreeness check is made here.
pub fn tracked_tree(driving: &[&MultiPoly], carried: &[&MultiPoly], growth: Growth, limits: &Limits) -> Result<JointTree> {
    if driving.is_empty() {
        return Err(Error::Precondition("no driving curve".into()));
    }
    let raw = grow_raw(driving, carried, growth, limits)?;
    let termination = if raw.any_capped() { Termination::DepthCapped } else { Termination::Resolved };
    Ok(JointTree { termination, driving: driving.len(), root: to_joint(&raw, &mut 0) })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::parse_poly;

    fn p(s: &str) -> MultiPoly {
        parse_poly(s, &Field::rationals()).unwrap()
    }

    fn chain(t: &InfNearTree) -> Vec<u32> {
        t.nodes().iter().map(|n| n.r).collect()
    }

    fn pairs(t: &JointTree) -> Vec<(usize, Vec<u32>)> {
        t.nodes().iter().map(|n| (n.depth, n.rs())).collect()
    }

    #[test]
    fn cusp_resolves_in_one_step() {
        let t = resolve_tree(&p("y^2 - x^3"), &Limits::default()).unwrap();
        assert!(t.is_resolved());
        assert_eq!(chain(&t), [2, 1]);
        assert_eq!(t.multiplicity_sequence(), [(0, 2)]);
    }

    #[test]
    fn tacnode_chain() {
        let t = resolve_tree(&p("y^2 - x^4"), &Limits::default()).unwrap();
        assert_eq!(t.multiplicity_sequence(), [(0, 2), (1, 2)]);
        assert_eq!(t.root.children[0].children.len(), 2);
    }

    #[test]
    fn tilted_a6_chain_is_straightened() {
        let t = resolve_tree(&p("y^2 + 2x^2y + x^4 + x^7"), &Limits::default()).unwrap();
        assert_eq!(t.multiplicity_sequence(), [(0, 2), (1, 2), (2, 2)]);
        let d1 = &t.root.children[0];
        let d2 = &d1.children[0];
        assert_eq!(d1.local_eq, p("y^2 + x^5"));
        assert_eq!(d1.coord_change.to_string(), "tilt(-1)");
        assert_eq!(d2.local_eq, p("y^2 + x^3"));
        assert!(d2.shift.is_zero());
    }

    #[test]
    fn ordinary_triple_point() {
        let t = resolve_tree(&p("y^3 - x^2*y + x^5"), &Limits::default()).unwrap();
        assert_eq!(t.multiplicity_sequence(), [(0, 3)]);
        assert_eq!(t.root.children.len(), 3);
    }

    #[test]
    fn preconditions() {
        let lim = Limits::default();
        assert_eq!(resolve_tree(&p("(y - x^2)^2"), &lim).unwrap_err(), Error::NotSquarefree);
        assert!(matches!(resolve_tree(&p("y - 1"), &lim), Err(Error::Precondition(_))));
        let capped = resolve_tree(&p("y^2 - x^9"), &Limits { max_depth: 2, ..lim.clone() }).unwrap();
        assert_eq!(capped.termination, Termination::DepthCapped);
    }

    #[test]
    fn joint_tree_examples() {
        let lim = Limits::default();
        let t = joint_tree(&[&p("y"), &p("x")], &lim).unwrap();
        assert_eq!(pairs(&t), [(0, vec![1, 1])]);
        let t = joint_tree(&[&p("y^2 - x^3"), &p("y")], &lim).unwrap();
        assert_eq!(pairs(&t), [(0, vec![2, 1]), (1, vec![1, 1])]);
        let t = joint_tree(&[&p("y^2 - x^3"), &p("y^2 + x^3")], &lim).unwrap();
        assert_eq!(pairs(&t), [(0, vec![2, 2]), (1, vec![1, 1]), (2, vec![1, 1])]);
        assert_eq!(joint_tree(&[&p("x*y"), &p("x")], &lim).unwrap_err(), Error::CommonComponent);
    }

    #[test]
    fn carried_curves_ride_along() {
        let c = p("y^2 - x^2");
        let g = p("y");
        let t = tracked_tree(&[&c], &[&g], Growth::Resolve, &Limits::default()).unwrap();
        assert_eq!(t.root.rs(), [2, 1]);
        let kids: Vec<Vec<u32>> = t.root.children.iter().map(|n| n.rs()).collect();
        assert_eq!(kids, [vec![1, 0], vec![1, 0]]);
    }

    #[test]
    fn extension_needed_over_f3() {
        let f3 = Field::prime(3).unwrap();
        let f = parse_poly("y^2 + x^2 + x^3", &f3).unwrap();
        let t = resolve_tree(&f, &Limits::default()).unwrap();
        assert_eq!(t.root.children.len(), 2);
        assert_eq!(t.root.field.absolute_degree(), 2);
    }
}
