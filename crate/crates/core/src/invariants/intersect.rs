//! Local intersection multiplicity at the origin, from the joint tree and
//! independently from a resultant.

use serde::Serialize;

use crate::blowup::{joint_tree, Limits};
use crate::error::{Error, Result};
use crate::exactfield::{Field, Scalar};
use crate::polyring::elim::{gcd, require_coprime, resultant_y};
use crate::polyring::{mult_at_origin, MultiPoly, Step, Vars};

#[derive(Debug, Clone, Serialize)]
pub struct IntersectionReport {
    pub noether_sum: u64,
    /// `(depth, r_Q(F), r_Q(G))` for every shared infinitely near point.
    pub contributions: Vec<(usize, u32, u32)>,
    pub oracle_value: u64,
    pub agreement: bool,
}

/// `I(0, F·G) = Σ r_Q(F)·r_Q(G)` over the joint tree, checked against
/// [`intersection_oracle`]. Zero when either curve misses the origin.
pub fn intersection_multiplicity(f: &MultiPoly, g: &MultiPoly, limits: &Limits) -> Result<IntersectionReport> {
    require_coprime(f, g)?;
    if mult_at_origin(f)? == 0 || mult_at_origin(g)? == 0 {
        return Ok(IntersectionReport { noether_sum: 0, contributions: Vec::new(), oracle_value: 0, agreement: true });
    }
    let tree = joint_tree(&[f, g], limits)?;
    if !tree.is_resolved() {
        return Err(Error::DepthCapExceeded(limits.max_depth));
    }
    let contributions: Vec<(usize, u32, u32)> = tree.nodes().iter().map(|n| (n.depth, n.r(0), n.r(1))).collect();
    let noether_sum = contributions.iter().map(|&(_, a, b)| u64::from(a) * u64::from(b)).sum();
    let oracle_value = intersection_oracle(f, g)?;
    Ok(IntersectionReport { noether_sum, contributions, oracle_value, agreement: noether_sum == oracle_value })
}

/// Leading coefficient in `y` is a nonzero constant.
fn monic_in_y(f: &MultiPoly) -> bool {
    let coeffs = f.y_coeffs();
    coeffs.last().is_some_and(|c| c.is_constant() && !c.is_zero())
}

/// The only common zero of `f` and `g` on the line `x = 0` is the origin.
fn fiber_isolated(f: &MultiPoly, g: &MultiPoly) -> bool {
    let field = f.field().clone();
    let zero = Scalar::zero(&field);
    let on_axis = |p: &MultiPoly| {
        let y = MultiPoly::var(Vars::Affine, &field, 1);
        p.compose(&[MultiPoly::constant(Vars::Affine, zero.clone()), y])
    };
    let h = gcd(&on_axis(f), &on_axis(g));
    // h is normalized; it must be a power of y
    h.num_terms() == 1 && h.terms().all(|(m, _)| m.0[0] == 0)
}

fn try_shear(f: &MultiPoly, g: &MultiPoly, l: &Scalar) -> Option<u64> {
    let step = Step::Shear(l.clone());
    let (fs, gs) = (step.apply(&f.lift(l.field()).ok()?), step.apply(&g.lift(l.field()).ok()?));
    if !monic_in_y(&fs) || !monic_in_y(&gs) || !fiber_isolated(&fs, &gs) {
        return None;
    }
    resultant_y(&fs, &gs).order().map(|k| k as u64)
}

/// `ord_x Res_y(F, G)` after a shear `x → x + λy` that makes both curves
/// monic in `y` and leaves the origin as their only common point on `x = 0`.
/// Each candidate λ is checked, never assumed.
pub fn intersection_oracle(f: &MultiPoly, g: &MultiPoly) -> Result<u64> {
    require_coprime(f, g)?;
    if mult_at_origin(f)? == 0 || mult_at_origin(g)? == 0 {
        return Ok(0);
    }
    let field = Field::common(f.field(), g.field())?;
    let (f, g) = (f.lift(&field)?, g.lift(&field)?);
    let (m, n) = (f.total_degree().unwrap_or(0) as usize, g.total_degree().unwrap_or(0) as usize);
    let budget = m * n + m + n + 2;
    for l in Scalar::small_integers(&field, budget) {
        if let Some(k) = try_shear(&f, &g, &l) {
            return Ok(k);
        }
    }
    if field.is_finite() {
        let mut candidates = field.elements(1 << 12).unwrap_or_default();
        let ext = field.with_degree(2)?;
        candidates.extend(ext.elements(1 << 12).unwrap_or_default());
        for l in candidates {
            if let Some(k) = try_shear(&f, &g, &l) {
                return Ok(k);
            }
        }
    }
    Err(Error::FiberNotIsolated)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::parse_poly;

    fn p(s: &str) -> MultiPoly {
        parse_poly(s, &Field::rationals()).unwrap()
    }

    fn both(a: &str, b: &str) -> (u64, u64) {
        let r = intersection_multiplicity(&p(a), &p(b), &Limits::default()).unwrap();
        (r.noether_sum, r.oracle_value)
    }

    #[test]
    fn examples() {
        assert_eq!(both("x", "y"), (1, 1));
        assert_eq!(both("y^2 - x^3", "y"), (3, 3));
        assert_eq!(both("y^2 - x^3", "y^2 + x^3"), (6, 6));
        assert_eq!(both("y - x^2", "y + x^2"), (2, 2));
        assert_eq!(both("y - x^2", "y + 1"), (0, 0));
    }

    #[test]
    fn oracle_needs_a_shear_for_vertical_lines() {
        // x = 0 contains a second common point of x and x^2 + y^2 - y when unsheared
        assert_eq!(intersection_oracle(&p("x"), &p("x^2 + y^2 - y")).unwrap(), 1);
        assert_eq!(intersection_oracle(&p("x*y + x^3"), &p("y - x^5")).unwrap(), 3);
        assert_eq!(both("x*y + x^3", "y - x^5"), (3, 3));
    }

    #[test]
    fn finite_field_pairs() {
        let f5 = Field::prime(5).unwrap();
        let f = parse_poly("y^2 + x^2", &f5).unwrap();
        let g = parse_poly("y", &f5).unwrap();
        let r = intersection_multiplicity(&f, &g, &Limits::default()).unwrap();
        assert!(r.agreement);
        assert_eq!(r.noether_sum, 2);
    }
}
