//! Curves in the projective plane: common points, the local condition
//! `r_Q(H) ≥ r_Q(F) + r_Q(G) − 1`, exact solutions of `H = A·F + B·G`, and
//! Bézout totals.

mod linalg;
mod points;

pub use crate::polyring::ProjPoint;
pub use points::{find_common_points, find_singular_points};

use serde::Serialize;

use crate::blowup::{tracked_tree, Growth, Limits};
use crate::error::{Error, Result};
use crate::exactfield::{Field, Scalar};
use crate::invariants::{genus, intersection_multiplicity, GenusOptions, GenusReport, IntersectionReport};
use crate::polyring::elim::require_coprime;
use crate::polyring::{Chart, MultiPoly, Vars};
use points::require_projective;

#[derive(Debug, Clone, Serialize)]
pub struct NodeCheck {
    pub depth: usize,
    pub r_f: u32,
    pub r_g: u32,
    pub r_h: u32,
    /// `r_h − (r_f + r_g − 1)`.
    pub margin: i64,
}

#[derive(Debug, Clone, Serialize)]
pub struct PointCheck {
    pub point: ProjPoint,
    pub chart: Chart,
    pub nodes: Vec<NodeCheck>,
    pub passed: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct ConditionReport {
    pub passed: bool,
    pub points: Vec<PointCheck>,
}

impl ConditionReport {
    /// First common point and depth where the condition fails.
    pub fn first_failure(&self) -> Option<(ProjPoint, usize)> {
        self.points.iter().find_map(|p| {
            p.nodes.iter().find(|n| n.margin < 0).map(|n| (p.point.clone(), n.depth))
        })
    }
}

/// Checks the condition at every common point of `F` and `G` and at every
/// infinitely near point lying on `F` or `G` above it, with `H` carried
/// along the same charts.
pub fn check_condition(f: &MultiPoly, g: &MultiPoly, h: &MultiPoly, limits: &Limits) -> Result<ConditionReport> {
    for p in [f, g, h] {
        require_projective(p)?;
    }
    let points = find_common_points(f, g, limits)?;
    let mut checks = Vec::new();
    for pt in points {
        let (lf, chart) = pt.localize(f)?;
        let (lg, _) = pt.localize(g)?;
        let nodes = if h.is_zero() {
            // H = 0 lies in every ideal
            Vec::new()
        } else {
            let (lh, _) = pt.localize(h)?;
            let tree = tracked_tree(&[&lf, &lg], &[&lh], Growth::Resolve, limits)?;
            if !tree.is_resolved() {
                return Err(Error::DepthCapExceeded(limits.max_depth));
            }
            tree.nodes()
                .iter()
                .map(|n| {
                    let (r_f, r_g, r_h) = (n.r(0), n.r(1), n.r(2));
                    let margin = i64::from(r_h) - (i64::from(r_f) + i64::from(r_g) - 1);
                    NodeCheck { depth: n.depth, r_f, r_g, r_h, margin }
                })
                .collect()
        };
        let passed = nodes.iter().all(|n| n.margin >= 0);
        checks.push(PointCheck { point: pt, chart, nodes, passed });
    }
    Ok(ConditionReport { passed: checks.iter().all(|c| c.passed), points: checks })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
#[allow(clippy::large_enum_variant)]
pub enum CertStatus {
    Solved,
    HypothesisFailed { point: ProjPoint, depth: usize },
    NoSolution,
}

#[derive(Debug, Clone, Serialize)]
pub struct NoetherCertificate {
    pub status: CertStatus,
    /// Of degree `deg H − deg F`; `None` when unsolved.
    pub a: Option<MultiPoly>,
    pub b: Option<MultiPoly>,
    pub residual: MultiPoly,
    /// Dimension of the space of solutions `(A, B)` of the homogeneous system.
    pub kernel_dim: usize,
    pub condition: Option<ConditionReport>,
}

fn monomials(d: u32) -> Vec<[u32; 3]> {
    let mut out = Vec::new();
    for i in (0..=d).rev() {
        for j in (0..=d - i).rev() {
            out.push([i, j, d - i - j]);
        }
    }
    out
}

/// All solutions of `H = A·F + B·G` with `A`, `B` homogeneous of the right
/// degrees: one particular solution (free coordinates zero) and a basis of
/// the pairs with `A·F + B·G = 0`.
#[allow(clippy::type_complexity)]
pub fn af_bg_solutions(
    f: &MultiPoly,
    g: &MultiPoly,
    h: &MultiPoly,
) -> Result<Option<((MultiPoly, MultiPoly), Vec<(MultiPoly, MultiPoly)>)>> {
    for p in [f, g, h] {
        require_projective(p)?;
    }
    require_coprime(f, g)?;
    let field = Field::common(&Field::common(f.field(), g.field())?, h.field())?;
    let (f, g, h) = (f.lift(&field)?, g.lift(&field)?, h.lift(&field)?);
    let zero = MultiPoly::zero(Vars::Projective, &field);
    let Some(e) = h.total_degree() else {
        return Ok(Some(((zero.clone(), zero), Vec::new())));
    };
    let c = f.total_degree().expect("nonzero");
    let d = g.total_degree().expect("nonzero");
    let a_monos = if e >= c { monomials(e - c) } else { Vec::new() };
    let b_monos = if e >= d { monomials(e - d) } else { Vec::new() };
    let rows = monomials(e);
    let row_of = |m: &[u32; 3]| rows.iter().position(|r| r == m).expect("degree e");
    let cols = a_monos.len() + b_monos.len();
    let mut matrix = vec![vec![Scalar::zero(&field); cols]; rows.len()];
    let unknowns = a_monos.iter().map(|m| (&f, m)).chain(b_monos.iter().map(|m| (&g, m)));
    for (col, (base, m)) in unknowns.enumerate() {
        let prod = base * &MultiPoly::monomial(Vars::Projective, Scalar::one(&field), *m);
        for (mono, coeff) in prod.terms() {
            matrix[row_of(&mono.0)][col] = coeff.clone();
        }
    }
    let rhs: Vec<Scalar> = rows.iter().map(|m| h.coeff(*m)).collect();
    let Some(sol) = linalg::solve(matrix, rhs, cols, &field) else {
        return Ok(None);
    };
    let split = |v: &[Scalar]| {
        let build = |monos: &[[u32; 3]], vals: &[Scalar]| {
            MultiPoly::from_terms(Vars::Projective, &field, monos.iter().zip(vals).map(|(m, c)| (*m, c.clone())))
        };
        (build(&a_monos, &v[..a_monos.len()]), build(&b_monos, &v[a_monos.len()..]))
    };
    let kernel = sol.kernel.iter().map(|v| split(v)).collect();
    Ok(Some((split(&sol.particular), kernel)))
}

/// Solves `H = A·F + B·G` by exact linear algebra on coefficients.
pub fn solve_af_bg(f: &MultiPoly, g: &MultiPoly, h: &MultiPoly) -> Result<NoetherCertificate> {
    match af_bg_solutions(f, g, h)? {
        Some(((a, b), kernel)) => {
            let residual = &(h - &(&a * f)) - &(&b * g);
            let status = if residual.is_zero() { CertStatus::Solved } else { CertStatus::NoSolution };
            Ok(NoetherCertificate { status, a: Some(a), b: Some(b), residual, kernel_dim: kernel.len(), condition: None })
        }
        None => Ok(NoetherCertificate {
            status: CertStatus::NoSolution,
            a: None,
            b: None,
            residual: h.clone(),
            kernel_dim: 0,
            condition: None,
        }),
    }
}

/// Runs [`check_condition`] and [`solve_af_bg`] together. An unsolvable
/// system whose condition also fails is reported as `HypothesisFailed`.
pub fn certify(f: &MultiPoly, g: &MultiPoly, h: &MultiPoly, limits: &Limits) -> Result<NoetherCertificate> {
    let condition = check_condition(f, g, h, limits)?;
    let mut cert = solve_af_bg(f, g, h)?;
    if cert.status == CertStatus::NoSolution {
        if let Some((point, depth)) = condition.first_failure() {
            cert.status = CertStatus::HypothesisFailed { point, depth };
        }
    }
    cert.condition = Some(condition);
    Ok(cert)
}

/// Re-multiplies a certificate: `H − A·F − B·G = 0` with `A`, `B`
/// homogeneous of degrees `deg H − deg F` and `deg H − deg G` (or zero).
pub fn verify_certificate(f: &MultiPoly, g: &MultiPoly, h: &MultiPoly, cert: &NoetherCertificate) -> bool {
    let (Some(a), Some(b)) = (&cert.a, &cert.b) else { return false };
    let degree_ok = |p: &MultiPoly, base: &MultiPoly| match (p.total_degree(), h.total_degree(), base.total_degree()) {
        (None, _, _) => true,
        (Some(dp), Some(dh), Some(db)) => p.is_homogeneous() && dp + db == dh,
        _ => false,
    };
    let diff = &(h - &(a * f)) - &(b * g);
    diff.is_zero() && degree_ok(a, f) && degree_ok(b, g)
}

#[derive(Debug, Clone, Serialize)]
pub struct BezoutPoint {
    pub point: ProjPoint,
    pub chart: Chart,
    pub report: IntersectionReport,
}

#[derive(Debug, Clone, Serialize)]
pub struct BezoutReport {
    pub total: u64,
    pub expected: u64,
    pub holds: bool,
    pub points: Vec<BezoutPoint>,
}

/// Sums local intersection numbers over all common points and compares
/// with `deg F · deg G`.
pub fn bezout_check(f: &MultiPoly, g: &MultiPoly, limits: &Limits) -> Result<BezoutReport> {
    let points = find_common_points(f, g, limits)?;
    let mut out = Vec::new();
    for pt in points {
        let (lf, chart) = pt.localize(f)?;
        let (lg, _) = pt.localize(g)?;
        let report = intersection_multiplicity(&lf, &lg, limits)?;
        out.push(BezoutPoint { point: pt, chart, report });
    }
    let total = out.iter().map(|p| p.report.noether_sum).sum();
    let expected = u64::from(f.total_degree().unwrap_or(0)) * u64::from(g.total_degree().unwrap_or(0));
    Ok(BezoutReport { total, expected, holds: total == expected, points: out })
}

/// Genus of a projective curve, locating its singular points first.
pub fn curve_genus(f: &MultiPoly, opts: &GenusOptions) -> Result<GenusReport> {
    require_projective(f)?;
    let singular = find_singular_points(f, &opts.limits)?;
    genus(f, &singular, opts)
}
