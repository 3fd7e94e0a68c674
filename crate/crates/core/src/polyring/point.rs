//! Points of the projective plane with coordinates in a (possibly extended)
//! field.

use std::fmt;

use super::local::{dehomogenize, translate, Chart};
use super::MultiPoly;
use crate::error::{Error, Result};
use crate::exactfield::{Field, Scalar};

/// `[X:Y:Z]`, scaled so the first nonzero coordinate is 1.
#[derive(Clone, PartialEq, Eq)]
pub struct ProjPoint {
    coords: [Scalar; 3],
}

impl ProjPoint {
    pub fn new(coords: [Scalar; 3]) -> Result<ProjPoint> {
        let field = Field::common(&Field::common(coords[0].field(), coords[1].field())?, coords[2].field())?;
        let lead = coords.iter().find(|c| !c.is_zero()).ok_or(Error::Precondition("[0:0:0] is not a point".into()))?;
        let inv = lead.lift(&field)?.inv()?;
        let mut out = coords.clone();
        for c in out.iter_mut() {
            *c = &c.lift(&field)? * &inv;
        }
        Ok(ProjPoint { coords: out })
    }

    /// The point `[x:y:1]`.
    pub fn affine(x: Scalar, y: Scalar) -> Result<ProjPoint> {
        let one = Scalar::one(x.field());
        ProjPoint::new([x, y, one])
    }

    pub fn coords(&self) -> &[Scalar; 3] {
        &self.coords
    }

    pub fn field(&self) -> &Field {
        self.coords[0].field()
    }

    pub fn lift(&self, field: &Field) -> Result<ProjPoint> {
        Ok(ProjPoint { coords: [self.coords[0].lift(field)?, self.coords[1].lift(field)?, self.coords[2].lift(field)?] })
    }

    /// Chart used to look at this point: `Z = 1` when possible, then `Y = 1`,
    /// then `X = 1`.
    pub fn chart(&self) -> Chart {
        if !self.coords[2].is_zero() {
            Chart::Z
        } else if !self.coords[1].is_zero() {
            Chart::Y
        } else {
            Chart::X
        }
    }

    /// Affine coordinates of the point in [`ProjPoint::chart`].
    pub fn affine_coords(&self) -> (Scalar, Scalar) {
        let chart = self.chart();
        let w = &self.coords[chart.index()];
        let [i, j] = chart.affine_indices();
        (&self.coords[i] / w, &self.coords[j] / w)
    }

    /// `f` in the chart of this point, translated so the point is the origin.
    pub fn localize(&self, f: &MultiPoly) -> Result<(MultiPoly, Chart)> {
        let chart = self.chart();
        let field = Field::common(f.field(), self.field())?;
        let local = dehomogenize(&f.lift(&field)?, chart)?;
        let (a, b) = self.affine_coords();
        Ok((translate(&local, &a, &b)?, chart))
    }
}

impl fmt::Display for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}:{}:{}]", self.coords[0], self.coords[1], self.coords[2])
    }
}

impl fmt::Debug for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl serde::Serialize for ProjPoint {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::parse_poly;

    #[test]
    fn normalization_and_localization() {
        let q = Field::rationals();
        let s = |n| Scalar::from_int(&q, n);
        let p = ProjPoint::new([s(0), s(2), s(4)]).unwrap();
        assert_eq!(p.to_string(), "[0:1:2]");
        assert_eq!(p.chart(), Chart::Z);
        assert_eq!(p.affine_coords(), (s(0), Scalar::from_rational(&q, &num_rational::BigRational::new(1.into(), 2.into())).unwrap()));
        let f = parse_poly("Y^2*Z - X^3", &q).unwrap();
        let inf = ProjPoint::new([s(0), s(1), s(0)]).unwrap();
        let (local, chart) = inf.localize(&f).unwrap();
        assert_eq!(chart, Chart::Y);
        assert_eq!(local, parse_poly("y - x^3", &q).unwrap());
        assert!(ProjPoint::new([s(0), s(0), s(0)]).is_err());
    }
}
