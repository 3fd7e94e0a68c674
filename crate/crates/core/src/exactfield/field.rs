//! Field descriptors: the rationals, prime fields and extension towers over a
//! prime field.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigUint;
use num_traits::One;

use super::arith::is_prime_u64;
use super::dense;
use super::factor::is_irreducible;
use super::{Scalar, UniPoly};
use crate::error::{Error, Result};

/// A field over which every computation is exact.
///
/// Cloning is cheap; descriptors are shared behind an [`Arc`]. Two descriptors
/// compare equal when they describe the same tower with the same moduli.
#[derive(Clone)]
pub struct Field(Arc<Kind>);

#[derive(PartialEq, Eq)]
pub(crate) enum Kind {
    Rationals,
    Prime(u64),
    Extension(Extension),
}

#[derive(PartialEq, Eq)]
pub(crate) struct Extension {
    pub(crate) base: Field,
    /// Monic modulus over `base`, lowest coefficient first.
    pub(crate) modulus: Vec<Scalar>,
    pub(crate) level: usize,
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || *self.0 == *other.0
    }
}

impl Eq for Field {}

impl Field {
    pub fn rationals() -> Field {
        Field(Arc::new(Kind::Rationals))
    }

    pub fn prime(p: u64) -> Result<Field> {
        if !is_prime_u64(p) || p >= 1 << 62 {
            return Err(Error::NotPrime(p));
        }
        Ok(Field(Arc::new(Kind::Prime(p))))
    }

    /// Adjoins a root of `minpoly` to `base`. The generator is named `z<level>`.
    pub fn extension(base: &Field, minpoly: &UniPoly) -> Result<Field> {
        if base.is_rationals() {
            return Err(Error::UnsupportedExtension(
                "number fields over Q are not supported".into(),
            ));
        }
        let m = minpoly.lift(base)?;
        let deg = m.degree().ok_or(Error::ZeroPolynomial)?;
        if deg < 2 {
            return Err(Error::UnsupportedExtension(format!(
                "minimal polynomial {m} has degree < 2"
            )));
        }
        let m = m.monic();
        if !is_irreducible(&m)? {
            return Err(Error::ReducibleMinPoly(m.to_string()));
        }
        Ok(Field(Arc::new(Kind::Extension(Extension {
            base: base.clone(),
            modulus: m.coeffs().to_vec(),
            level: base.level() + 1,
        }))))
    }

    /// Extension by a polynomial already known to be irreducible.
    pub(crate) fn extension_trusted(base: &Field, minpoly: &UniPoly) -> Field {
        let m = minpoly.monic();
        Field(Arc::new(Kind::Extension(Extension {
            base: base.clone(),
            modulus: m.coeffs().to_vec(),
            level: base.level() + 1,
        })))
    }

    pub(crate) fn kind(&self) -> &Kind {
        &self.0
    }

    pub fn is_rationals(&self) -> bool {
        matches!(*self.0, Kind::Rationals)
    }

    pub fn is_finite(&self) -> bool {
        !self.is_rationals()
    }

    /// 0 for the rationals, otherwise the prime p.
    pub fn characteristic(&self) -> u64 {
        match &*self.0 {
            Kind::Rationals => 0,
            Kind::Prime(p) => *p,
            Kind::Extension(e) => e.base.characteristic(),
        }
    }

    /// Height of the tower above its prime field (0 for Q and F_p).
    pub fn level(&self) -> usize {
        match &*self.0 {
            Kind::Extension(e) => e.level,
            _ => 0,
        }
    }

    pub fn base(&self) -> Option<&Field> {
        match &*self.0 {
            Kind::Extension(e) => Some(&e.base),
            _ => None,
        }
    }

    /// Degree of this level over its immediate base (1 for Q and F_p).
    pub fn relative_degree(&self) -> usize {
        match &*self.0 {
            Kind::Extension(e) => e.modulus.len() - 1,
            _ => 1,
        }
    }

    /// Degree over the prime field: product of the relative degrees of the tower.
    pub fn absolute_degree(&self) -> usize {
        match &*self.0 {
            Kind::Extension(e) => (e.modulus.len() - 1) * e.base.absolute_degree(),
            _ => 1,
        }
    }

    /// p^(absolute degree), or `None` for Q.
    pub fn cardinality(&self) -> Option<BigUint> {
        if self.is_rationals() {
            return None;
        }
        let p = BigUint::from(self.characteristic());
        let mut q = BigUint::one();
        for _ in 0..self.absolute_degree() {
            q *= &p;
        }
        Some(q)
    }

    pub fn prime_field(&self) -> Field {
        match &*self.0 {
            Kind::Extension(e) => e.base.prime_field(),
            _ => self.clone(),
        }
    }

    /// The monic modulus of the top level as a polynomial over the base.
    pub fn modulus(&self) -> Option<UniPoly> {
        match &*self.0 {
            Kind::Extension(e) => Some(UniPoly::new(&e.base, e.modulus.clone())),
            _ => None,
        }
    }

    /// The adjoined root of the top level.
    pub fn generator(&self) -> Option<Scalar> {
        match &*self.0 {
            Kind::Extension(e) => {
                let one = Scalar::one(&e.base);
                Some(Scalar::from_coeffs(self, vec![Scalar::zero(&e.base), one]))
            }
            _ => None,
        }
    }

    pub fn generator_name(&self) -> Option<String> {
        match &*self.0 {
            Kind::Extension(e) => Some(format!("z{}", e.level)),
            _ => None,
        }
    }

    /// Generator of tower level `level` (1-based), seen as an element of `self`.
    pub fn generator_at_level(&self, level: usize) -> Option<Scalar> {
        let mut f = self.clone();
        while f.level() > level {
            f = f.base().cloned()?;
        }
        if f.level() != level || level == 0 {
            return None;
        }
        f.generator()?.lift(self).ok()
    }

    /// True when `other` is `self` or one of the fields below it in the tower.
    pub fn contains(&self, other: &Field) -> bool {
        if self == other {
            return true;
        }
        match self.base() {
            Some(b) => b.contains(other),
            None => false,
        }
    }

    /// The smaller of two nested fields' common overfield.
    pub fn common(a: &Field, b: &Field) -> Result<Field> {
        if a.contains(b) {
            Ok(a.clone())
        } else if b.contains(a) {
            Ok(b.clone())
        } else {
            Err(Error::IncompatibleFields {
                left: a.to_string(),
                right: b.to_string(),
            })
        }
    }

    /// Every element of a finite field, or `None` when the field is infinite
    /// or has more than `limit` elements.
    pub fn elements(&self, limit: usize) -> Option<Vec<Scalar>> {
        let q = self.cardinality()?;
        if q > BigUint::from(limit) {
            return None;
        }
        match &*self.0 {
            Kind::Rationals => None,
            Kind::Prime(p) => Some((0..*p).map(|v| Scalar::residue(self, v)).collect()),
            Kind::Extension(e) => {
                let base_elems = e.base.elements(limit)?;
                let deg = e.modulus.len() - 1;
                let mut out = vec![Vec::new()];
                for _ in 0..deg {
                    let mut next = Vec::with_capacity(out.len() * base_elems.len());
                    for prefix in &out {
                        for b in &base_elems {
                            let mut v: Vec<Scalar> = prefix.clone();
                            v.push(b.clone());
                            next.push(v);
                        }
                    }
                    out = next;
                }
                Some(
                    out.into_iter()
                        .map(|c| Scalar::from_coeffs(self, c))
                        .collect(),
                )
            }
        }
    }

    /// Parses `q`, `p:<prime>` or `p:<prime>^<k>`. The degree-k field is built
    /// with the first irreducible polynomial found by [`Field::with_degree`].
    pub fn parse_descriptor(s: &str) -> Result<Field> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("q") {
            return Ok(Field::rationals());
        }
        let bad = || Error::Parse {
            pos: 0,
            msg: format!("unknown field descriptor '{s}' (expected q, p:<prime> or p:<prime>^<k>)"),
        };
        let rest = s.strip_prefix("p:").ok_or_else(bad)?;
        let (p, k) = match rest.split_once('^') {
            Some((p, k)) => (p, k.parse::<usize>().map_err(|_| bad())?),
            None => (rest, 1),
        };
        let p: u64 = p.parse().map_err(|_| bad())?;
        let fp = Field::prime(p)?;
        if k <= 1 {
            Ok(fp)
        } else {
            fp.with_degree(k)
        }
    }

    /// Extension of `self` of relative degree `k` by the first monic
    /// irreducible polynomial in enumeration order.
    pub fn with_degree(&self, k: usize) -> Result<Field> {
        let m = super::factor::find_irreducible(self, k)?;
        Field::extension(self, &m)
    }

    pub(crate) fn modulus_slice(&self) -> &[Scalar] {
        match &*self.0 {
            Kind::Extension(e) => &e.modulus,
            _ => &[],
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &*self.0 {
            Kind::Rationals => write!(f, "Q"),
            Kind::Prime(p) => write!(f, "F_{p}"),
            Kind::Extension(e) => {
                let name = format!("z{}", e.level);
                let m = dense::display(&e.modulus, &name);
                write!(f, "{}[{}]/({})", e.base, name, m)
            }
        }
    }
}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl serde::Serialize for Field {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}
