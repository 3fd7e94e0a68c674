//! Local apparatus at the origin of the affine plane: multiplicity, lowest
//! form, tangent directions and suitable coordinates, plus the passage
//! between affine and homogeneous coordinates.

use super::coords::{CoordChange, Step};
use super::{MultiPoly, Vars};
use crate::error::{Error, Result};
use crate::exactfield::{Field, Scalar, UniPoly};

fn require_affine(f: &MultiPoly) -> Result<()> {
    if f.vars() != Vars::Affine {
        return Err(Error::VariableMismatch("expected an affine polynomial in x, y".into()));
    }
    Ok(())
}

/// Order of `f` at the origin: the minimal total degree of its terms.
pub fn mult_at_origin(f: &MultiPoly) -> Result<u32> {
    require_affine(f)?;
    f.order().ok_or(Error::ZeroPolynomial)
}

/// The sum of all minimal-degree terms of `f`.
pub fn lowest_form(f: &MultiPoly) -> Result<MultiPoly> {
    let r = mult_at_origin(f)?;
    Ok(f.homogeneous_part(r))
}

/// `form(1, t)` for a binary form in `x, y`.
pub fn dehomogenized_form(form: &MultiPoly) -> UniPoly {
    let mut coeffs = Vec::new();
    for (m, c) in form.terms() {
        let j = m.0[1] as usize;
        if coeffs.len() <= j {
            coeffs.resize(j + 1, Scalar::zero(form.field()));
        }
        coeffs[j] = &coeffs[j] + c;
    }
    UniPoly::new(form.field(), coeffs)
}

/// True when the lowest form does not vanish at (0, 1), i.e. contains `y^r`.
pub fn is_suitable(f: &MultiPoly) -> Result<bool> {
    let r = mult_at_origin(f)?;
    Ok(!f.coeff([0, r, 0]).is_zero())
}

fn shear_ok(forms: &[MultiPoly], l: &Scalar) -> bool {
    forms.iter().all(|g| {
        let one = Scalar::one(g.field());
        !g.eval(&[l.clone(), one]).is_zero()
    })
}

/// First λ in the order 0, 1, -1, 2, … (then the remaining elements of a
/// finite field, then elements of a small extension) such that every
/// polynomial becomes suitable after `x -> x + λy`. Polynomials not passing
/// through the origin impose no condition.
pub fn joint_shear(polys: &[&MultiPoly]) -> Result<Scalar> {
    let mut field = polys.first().map(|p| p.field().clone()).ok_or(Error::ZeroPolynomial)?;
    for p in polys {
        field = Field::common(&field, p.field())?;
    }
    let mut forms = Vec::new();
    let mut total_degree = 0usize;
    for p in polys {
        let r = mult_at_origin(p)?;
        if r == 0 {
            continue;
        }
        total_degree += r as usize;
        forms.push(p.homogeneous_part(r).lift(&field)?);
    }
    for l in Scalar::small_integers(&field, total_degree + 2) {
        if shear_ok(&forms, &l) {
            return Ok(l);
        }
    }
    if field.is_rationals() {
        unreachable!("a nonzero form of degree d has at most d roots");
    }
    if let Some(all) = field.elements(1 << 12) {
        if let Some(l) = all.into_iter().find(|l| shear_ok(&forms, l)) {
            return Ok(l);
        }
    }
    // Every element of the field is a bad slope: extend until the field has
    // more elements than the product of the forms has roots.
    let q = field.cardinality().expect("finite");
    let mut k = 2usize;
    let mut qk = &q * &q;
    while qk <= num_bigint::BigUint::from(total_degree) {
        k += 1;
        qk *= &q;
    }
    let ext = field.with_degree(k)?;
    let forms: Vec<MultiPoly> = forms.iter().map(|g| g.lift(&ext)).collect::<Result<_>>()?;
    let mut cands = Vec::new();
    if let Some(g) = ext.generator() {
        cands.push(g);
    }
    cands.extend(ext.elements(1 << 16).unwrap_or_default());
    cands
        .into_iter()
        .find(|l| shear_ok(&forms, l))
        .ok_or(Error::NotSuitable)
}

/// Shears `f` so that its lowest form has a `y^r` term; identity when it
/// already does. The result may live in an extension of `f`'s field.
pub fn make_suitable(f: &MultiPoly) -> Result<(MultiPoly, CoordChange)> {
    let r = mult_at_origin(f)?;
    if r == 0 {
        return Err(Error::Precondition("curve does not pass through the origin".into()));
    }
    let l = joint_shear(&[f])?;
    let g = f.lift(l.field())?;
    let step = Step::Shear(l);
    let out = step.apply(&g);
    Ok((out, CoordChange::single(step)))
}

/// `f(x + a, y + b)`.
pub fn translate(f: &MultiPoly, a: &Scalar, b: &Scalar) -> Result<MultiPoly> {
    require_affine(f)?;
    let field = Field::common(&Field::common(f.field(), a.field())?, b.field())?;
    let g = f.lift(&field)?;
    Ok(Step::Translate(a.lift(&field)?, b.lift(&field)?).apply(&g))
}

/// Which homogeneous coordinate is set to 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub enum Chart {
    /// `Z = 1`; affine `(x, y) = (X, Y)`.
    Z,
    /// `Y = 1`; affine `(x, y) = (X, Z)`.
    Y,
    /// `X = 1`; affine `(x, y) = (Y, Z)`.
    X,
}

impl Chart {
    /// Index of the coordinate set to 1.
    pub fn index(self) -> usize {
        match self {
            Chart::X => 0,
            Chart::Y => 1,
            Chart::Z => 2,
        }
    }

    /// Homogeneous indices that become affine `x` and `y`.
    pub fn affine_indices(self) -> [usize; 2] {
        match self {
            Chart::Z => [0, 1],
            Chart::Y => [0, 2],
            Chart::X => [1, 2],
        }
    }
}

/// Sets the chart coordinate to 1 and renames the other two to `x, y`.
pub fn dehomogenize(f: &MultiPoly, chart: Chart) -> Result<MultiPoly> {
    if f.vars() != Vars::Projective {
        return Err(Error::VariableMismatch("expected a homogeneous polynomial in X, Y, Z".into()));
    }
    if !f.is_homogeneous() {
        return Err(Error::NotHomogeneous);
    }
    let [i, j] = chart.affine_indices();
    Ok(f.map_monomials(Vars::Affine, |e| [e[i], e[j], 0]))
}

/// Homogenizes with respect to `Z` to total degree `d`.
pub fn homogenize(f: &MultiPoly, d: u32) -> Result<MultiPoly> {
    homogenize_in(f, d, Chart::Z)
}

/// Inverse of [`dehomogenize`] for the given chart.
pub fn homogenize_in(f: &MultiPoly, d: u32, chart: Chart) -> Result<MultiPoly> {
    require_affine(f)?;
    if f.total_degree().unwrap_or(0) > d {
        return Err(Error::Precondition(format!("degree of {f} exceeds {d}")));
    }
    let [i, j] = chart.affine_indices();
    let k = chart.index();
    Ok(f.map_monomials(Vars::Projective, |e| {
        let mut out = [0; 3];
        out[i] = e[0];
        out[j] = e[1];
        out[k] = d - e[0] - e[1];
        out
    }))
}
