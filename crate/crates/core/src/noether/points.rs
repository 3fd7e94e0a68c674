//! Common zeros of two projective curves and singular points of one.

use crate::blowup::Limits;
use crate::error::{Error, Result};
use crate::exactfield::{splitting_field, uni_factor_seeded, Field, Scalar, UniPoly};
use crate::polyring::elim::{have_common_component, is_squarefree, require_coprime, resultant_y};
use crate::polyring::{dehomogenize, Chart, MultiPoly, ProjPoint, Vars};

pub(crate) fn require_projective(f: &MultiPoly) -> Result<()> {
    if f.vars() != Vars::Projective {
        return Err(Error::VariableMismatch("expected a homogeneous polynomial in X, Y, Z".into()));
    }
    if !f.is_homogeneous() {
        return Err(Error::NotHomogeneous);
    }
    Ok(())
}

/// `f(x0, y)` as a polynomial in `y`.
fn fiber_y(f: &MultiPoly, x0: &Scalar) -> UniPoly {
    let field = Field::common(f.field(), x0.field()).expect("tower");
    let coeffs: Vec<Scalar> = f.y_coeffs().iter().map(|c| c.lift(&field).expect("tower").eval(x0)).collect();
    UniPoly::new(&field, coeffs)
}

/// `F(1, t, 0)`.
fn at_infinity(f: &MultiPoly) -> UniPoly {
    let mut coeffs = Vec::new();
    for (m, c) in f.terms().filter(|(m, _)| m.0[2] == 0) {
        let j = m.0[1] as usize;
        if coeffs.len() <= j {
            coeffs.resize(j + 1, Scalar::zero(f.field()));
        }
        coeffs[j] = c.clone();
    }
    UniPoly::new(f.field(), coeffs)
}

struct Roots<'a> {
    field: Field,
    limits: &'a Limits,
}

impl Roots<'_> {
    /// Distinct roots of `p`, extending the working field as needed.
    fn of(&mut self, p: &UniPoly) -> Result<Vec<Scalar>> {
        if p.is_zero() || p.is_constant() {
            return Ok(Vec::new());
        }
        self.field = splitting_field(&self.field, std::slice::from_ref(p), self.limits.max_extension_degree, self.limits.seed)?;
        let fac = uni_factor_seeded(&p.lift(&self.field)?, self.limits.seed)?;
        Ok(fac.roots().into_iter().map(|(a, _)| a).collect())
    }
}

/// Common zeros in the affine plane of a system of polynomials. Candidate
/// `x` values are the roots of the gcd of the pairwise resultants in `y`.
fn affine_zeros(polys: &[MultiPoly], roots: &mut Roots) -> Result<Vec<(Scalar, Scalar)>> {
    let polys: Vec<&MultiPoly> = polys.iter().filter(|p| !p.is_zero()).collect();
    if polys.iter().any(|p| p.is_constant()) {
        return Ok(Vec::new());
    }
    let mut elim: Option<UniPoly> = None;
    for (i, p) in polys.iter().enumerate() {
        for q in &polys[i + 1..] {
            if have_common_component(p, q) {
                continue;
            }
            let r = resultant_y(p, q);
            elim = Some(match elim {
                Some(e) => e.gcd(&r.lift(e.field())?),
                None => r,
            });
        }
    }
    let elim = elim.ok_or_else(|| Error::Precondition("no coprime pair in the system".into()))?;
    let mut out = Vec::new();
    for x0 in roots.of(&elim)? {
        let mut h = UniPoly::zero(x0.field());
        for p in &polys {
            h = h.gcd(&fiber_y(p, &x0));
        }
        for y0 in roots.of(&h)? {
            out.push((x0.clone(), y0));
        }
    }
    Ok(out)
}

fn finish(points: Vec<ProjPoint>, field: &Field) -> Result<Vec<ProjPoint>> {
    let mut out: Vec<ProjPoint> = points.iter().map(|p| p.lift(field)).collect::<Result<_>>()?;
    out.sort_by_cached_key(|p| p.to_string());
    out.dedup();
    Ok(out)
}

/// All common zeros of `f` and `g` in the projective plane. Over a finite
/// field the coordinates may lie in an extension; over Q a non-rational
/// common point is an error.
pub fn find_common_points(f: &MultiPoly, g: &MultiPoly, limits: &Limits) -> Result<Vec<ProjPoint>> {
    require_projective(f)?;
    require_projective(g)?;
    require_coprime(f, g)?;
    let field = Field::common(f.field(), g.field())?;
    let (f, g) = (f.lift(&field)?, g.lift(&field)?);
    let mut roots = Roots { field: field.clone(), limits };
    let mut points = Vec::new();

    let affine = [dehomogenize(&f, Chart::Z)?, dehomogenize(&g, Chart::Z)?];
    for (x0, y0) in affine_zeros(&affine, &mut roots)? {
        points.push(ProjPoint::affine(x0, y0)?);
    }
    for t in roots.of(&at_infinity(&f).gcd(&at_infinity(&g)))? {
        points.push(ProjPoint::new([Scalar::one(t.field()), t, Scalar::zero(&field)])?);
    }
    let top = |p: &MultiPoly| p.coeff([0, p.total_degree().unwrap_or(0), 0]).is_zero();
    if top(&f) && top(&g) {
        points.push(ProjPoint::new([Scalar::zero(&field), Scalar::one(&field), Scalar::zero(&field)])?);
    }
    finish(points, &roots.field)
}

/// Singular points of a squarefree curve, found chart by chart: affine
/// points where `f`, `f_x`, `f_y` vanish, then the line `Z = 0`.
pub fn find_singular_points(f: &MultiPoly, limits: &Limits) -> Result<Vec<ProjPoint>> {
    require_projective(f)?;
    if f.total_degree().is_none() {
        return Err(Error::ZeroPolynomial);
    }
    if !is_squarefree(f) {
        return Err(Error::NotSquarefree);
    }
    let field = f.field().clone();
    let mut roots = Roots { field: field.clone(), limits };
    let with_partials = |p: MultiPoly| [p.partial_derivative(0), p.partial_derivative(1), p];
    let mut points = Vec::new();

    for (x0, y0) in affine_zeros(&with_partials(dehomogenize(f, Chart::Z)?), &mut roots)? {
        points.push(ProjPoint::affine(x0, y0)?);
    }
    // chart Y = 1 with affine (x, y) = (X, Z), restricted to Z = 0
    let mut h = UniPoly::zero(&field);
    for p in with_partials(dehomogenize(f, Chart::Y)?) {
        let c0 = p.y_coeffs().into_iter().next().unwrap_or_else(|| UniPoly::zero(&field));
        h = h.gcd(&c0);
    }
    for x0 in roots.of(&h)? {
        points.push(ProjPoint::new([x0.clone(), Scalar::one(x0.field()), Scalar::zero(x0.field())])?);
    }
    // chart X = 1 with affine (x, y) = (Y, Z), at the origin
    let local = dehomogenize(f, Chart::X)?;
    if [[0, 0, 0], [1, 0, 0], [0, 1, 0]].iter().all(|&m| local.coeff(m).is_zero()) {
        points.push(ProjPoint::new([Scalar::one(&field), Scalar::zero(&field), Scalar::zero(&field)])?);
    }
    finish(points, &roots.field)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::parse_poly;

    fn names(v: &[ProjPoint]) -> Vec<String> {
        v.iter().map(|p| p.to_string()).collect()
    }

    fn common(a: &str, b: &str, field: &Field) -> Vec<String> {
        let f = parse_poly(a, field).unwrap();
        let g = parse_poly(b, field).unwrap();
        names(&find_common_points(&f, &g, &Limits::default()).unwrap())
    }

    #[test]
    fn common_point_examples() {
        let q = Field::rationals();
        assert_eq!(common("X", "Y", &q), ["[0:0:1]"]);
        assert_eq!(common("X*Y", "Z", &q), ["[0:1:0]", "[1:0:0]"]);
        assert_eq!(common("Y*Z - X^2", "Y", &q), ["[0:0:1]"]);
        assert_eq!(common("Y*Z - X^2", "Y*Z + X^2", &q), ["[0:0:1]", "[0:1:0]"]);
        assert_eq!(common("X^2 - Z^2", "Y^2 - Z^2", &q).len(), 4);
    }

    #[test]
    fn extension_and_rationality() {
        let q = Field::rationals();
        let f = parse_poly("X^2 + Y^2 - Z^2", &q).unwrap();
        let g = parse_poly("X", &q).unwrap();
        assert_eq!(find_common_points(&f, &g, &Limits::default()).unwrap().len(), 2);
        let g2 = parse_poly("X^2 + Y^2 + Z^2", &q).unwrap();
        assert!(matches!(find_common_points(&f, &g2, &Limits::default()), Err(Error::NonRationalPoint(_))));
        assert!(matches!(find_common_points(&f, &f, &Limits::default()), Err(Error::CommonComponent)));
        let h = parse_poly("Y", &q).unwrap();
        let circle = parse_poly("X^2 + Y^2 + Z^2", &q).unwrap();
        assert!(matches!(find_common_points(&circle, &h, &Limits::default()), Err(Error::NonRationalPoint(_))));
        let f3 = Field::prime(3).unwrap();
        let pts = common("X^2 + Y^2 + Z^2", "Y", &f3);
        assert_eq!(pts.len(), 2);
    }

    #[test]
    fn singular_points_of_cubics() {
        let q = Field::rationals();
        let sing = |s: &str| names(&find_singular_points(&parse_poly(s, &q).unwrap(), &Limits::default()).unwrap());
        assert_eq!(sing("Y^2*Z - X^3 - X*Z^2"), Vec::<String>::new());
        assert_eq!(sing("Y^2*Z - X^2*(X+Z)"), ["[0:0:1]"]);
        assert_eq!(sing("Y^2*Z - X^3"), ["[0:0:1]"]);
        assert_eq!(sing("X*Y*Z"), ["[0:0:1]", "[0:1:0]", "[1:0:0]"]);
    }
}
