//! One blow-up of the origin, seen in the chart `y = x·t`.

use crate::error::{Error, Result};
use crate::exactfield::{splitting_field, uni_factor_seeded, Scalar};
use crate::polyring::{dehomogenized_form, is_suitable, mult_at_origin, MultiPoly, Vars};

use super::Limits;

/// Proper transform `F'(x, t)` with `F(x, x·t) = x^r · F'(x, t)`.
///
/// The result is written in the affine variables `x, y` with `y` playing the
/// role of `t`. `F'(0, t) = F_r(1, t)` has degree `r` because `F` is suitable.
pub fn blow_up_chart(f: &MultiPoly) -> Result<MultiPoly> {
    let r = mult_at_origin(f)?;
    if r == 0 {
        return Err(Error::Precondition("curve does not pass through the origin".into()));
    }
    if !is_suitable(f)? {
        return Err(Error::NotSuitable);
    }
    Ok(strict_transform(f, r))
}

/// `F(x, x·t) / x^r` without any precondition beyond `x^r` dividing.
pub(crate) fn strict_transform(f: &MultiPoly, r: u32) -> MultiPoly {
    f.map_monomials(Vars::Affine, |e| [e[0] + e[1] - r, e[1], 0])
}

/// `F(x, x·t)` as a polynomial, for checking the chart identity.
pub fn total_transform(f: &MultiPoly) -> MultiPoly {
    f.map_monomials(Vars::Affine, |e| [e[0] + e[1], e[1], 0])
}

/// Points of the proper transform on the exceptional divisor `x = 0`: the
/// roots of `F'(0, t)` with multiplicities, after extending a finite field
/// until they are all rational. Sorted by their printed form.
pub fn exceptional_points(fprime: &MultiPoly, limits: &Limits) -> Result<Vec<(Scalar, usize)>> {
    let on_divisor = MultiPoly::from_terms(
        Vars::Affine,
        fprime.field(),
        fprime.terms().filter(|(m, _)| m.0[0] == 0).map(|(m, c)| (m.0, c.clone())),
    );
    let poly = dehomogenized_form(&on_divisor);
    if poly.is_zero() {
        return Err(Error::Precondition("transform contains the exceptional divisor".into()));
    }
    let field = splitting_field(fprime.field(), std::slice::from_ref(&poly), limits.max_extension_degree, limits.seed)?;
    let fac = uni_factor_seeded(&poly.lift(&field)?, limits.seed)?;
    let mut roots = fac.roots();
    roots.sort_by_cached_key(|(a, _)| a.to_string());
    Ok(roots)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactfield::Field;
    use crate::polyring::parse_poly;

    fn p(s: &str) -> MultiPoly {
        parse_poly(s, &Field::rationals()).unwrap()
    }

    fn roots(f: &MultiPoly) -> Vec<(String, usize)> {
        exceptional_points(f, &Limits::default())
            .unwrap()
            .into_iter()
            .map(|(a, m)| (a.to_string(), m))
            .collect()
    }

    #[test]
    fn tilted_a6_chart() {
        let f = p("y^2 + 2x^2y + x^4 + x^7");
        let fp = blow_up_chart(&f).unwrap();
        assert_eq!(fp, p("(y + x)^2 + x^5"));
        let x2 = p("x^2");
        assert_eq!(total_transform(&f), &x2 * &fp);
    }

    #[test]
    fn cusp_and_node_charts() {
        assert_eq!(blow_up_chart(&p("y^2 - x^3")).unwrap(), p("y^2 - x"));
        assert_eq!(blow_up_chart(&p("y^2 - x^2")).unwrap(), p("y^2 - 1"));
    }

    #[test]
    fn chart_preconditions() {
        assert_eq!(blow_up_chart(&p("x^2 + y^3")), Err(Error::NotSuitable));
        assert_eq!(blow_up_chart(&p("0")), Err(Error::ZeroPolynomial));
        assert!(matches!(blow_up_chart(&p("y + 1")), Err(Error::Precondition(_))));
    }

    #[test]
    fn exceptional_point_examples() {
        assert_eq!(roots(&blow_up_chart(&p("y^2 - x^2")).unwrap()), [("-1".into(), 1), ("1".into(), 1)]);
        assert_eq!(roots(&blow_up_chart(&p("y^2 - x^3")).unwrap()), [("0".into(), 2)]);
        let f5 = Field::prime(5).unwrap();
        let f = parse_poly("y^2 + x^2", &f5).unwrap();
        let r: Vec<(String, usize)> = exceptional_points(&blow_up_chart(&f).unwrap(), &Limits::default())
            .unwrap()
            .into_iter()
            .map(|(a, m)| (a.to_string(), m))
            .collect();
        assert_eq!(r, [("2".into(), 1), ("3".into(), 1)]);
    }

    #[test]
    fn irrational_tangents_over_q() {
        let f = blow_up_chart(&p("y^2 - 2x^2")).unwrap();
        assert!(matches!(exceptional_points(&f, &Limits::default()), Err(Error::NonRationalPoint(_))));
        let f3 = Field::prime(3).unwrap();
        let g = blow_up_chart(&parse_poly("y^2 + x^2 + x^3", &f3).unwrap()).unwrap();
        let pts = exceptional_points(&g, &Limits::default()).unwrap();
        assert_eq!(pts.len(), 2);
        assert_eq!(pts[0].0.field().absolute_degree(), 2);
    }
}
