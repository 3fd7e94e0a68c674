//! Exact field elements.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::Rng;

use super::dense;
use super::field::Kind;
use super::Field;
use crate::error::{Error, Result};

/// An element of a [`Field`] in canonical form.
///
/// Rationals are kept in lowest terms, prime-field residues in `[0, p)`, and
/// extension elements as coefficient vectors over the base field reduced
/// modulo the minimal polynomial.
#[derive(Clone)]
pub struct Scalar {
    field: Field,
    value: Value,
}

#[derive(Clone, PartialEq, Eq)]
enum Value {
    Rational(BigRational),
    Residue(u64),
    Poly(Vec<Scalar>),
}

/// Binary operation selector for [`scalar_arith`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// Checked arithmetic with automatic embedding along a tower.
pub fn scalar_arith(a: &Scalar, b: &Scalar, op: ArithOp) -> Result<Scalar> {
    match op {
        ArithOp::Add => a.try_add(b),
        ArithOp::Sub => a.try_sub(b),
        ArithOp::Mul => a.try_mul(b),
        ArithOp::Div => a.try_div(b),
    }
}

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn powmod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    while e > 0 {
        if e & 1 == 1 {
            r = mulmod(r, a, p);
        }
        a = mulmod(a, a, p);
        e >>= 1;
    }
    r
}

impl Scalar {
    pub fn zero(field: &Field) -> Scalar {
        let value = match field.kind() {
            Kind::Rationals => Value::Rational(BigRational::zero()),
            Kind::Prime(_) => Value::Residue(0),
            Kind::Extension(_) => Value::Poly(Vec::new()),
        };
        Scalar { field: field.clone(), value }
    }

    pub fn one(field: &Field) -> Scalar {
        Scalar::from_int(field, 1)
    }

    pub fn from_int(field: &Field, n: i64) -> Scalar {
        Scalar::from_bigint(field, &BigInt::from(n))
    }

    pub fn from_bigint(field: &Field, n: &BigInt) -> Scalar {
        match field.kind() {
            Kind::Rationals => Scalar {
                field: field.clone(),
                value: Value::Rational(BigRational::from_integer(n.clone())),
            },
            Kind::Prime(p) => {
                let r = n.mod_floor(&BigInt::from(*p));
                Scalar::residue(field, r.to_u64().expect("reduced residue fits"))
            }
            Kind::Extension(e) => {
                let b = Scalar::from_bigint(&e.base, n);
                Scalar::from_coeffs(field, vec![b])
            }
        }
    }

    /// Maps a rational number into `field`; fails when the denominator
    /// vanishes in positive characteristic.
    pub fn from_rational(field: &Field, q: &BigRational) -> Result<Scalar> {
        let num = Scalar::from_bigint(field, q.numer());
        let den = Scalar::from_bigint(field, q.denom());
        num.try_div(&den)
    }

    pub(crate) fn residue(field: &Field, v: u64) -> Scalar {
        Scalar { field: field.clone(), value: Value::Residue(v) }
    }

    /// Extension element from coefficients over the immediate base (lowest
    /// first); reduces modulo the minimal polynomial.
    pub(crate) fn from_coeffs(field: &Field, mut coeffs: Vec<Scalar>) -> Scalar {
        let Kind::Extension(e) = field.kind() else {
            panic!("from_coeffs on a non-extension field");
        };
        dense::trim(&mut coeffs);
        if coeffs.len() >= e.modulus.len() {
            coeffs = dense::divrem(&e.base, &coeffs, &e.modulus).1;
        }
        Scalar { field: field.clone(), value: Value::Poly(coeffs) }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn is_zero(&self) -> bool {
        match &self.value {
            Value::Rational(q) => q.is_zero(),
            Value::Residue(v) => *v == 0,
            Value::Poly(c) => c.is_empty(),
        }
    }

    pub fn is_one(&self) -> bool {
        match &self.value {
            Value::Rational(q) => q.is_one(),
            Value::Residue(v) => *v == 1,
            Value::Poly(c) => c.len() == 1 && c[0].is_one(),
        }
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match &self.value {
            Value::Rational(q) => Some(q),
            _ => None,
        }
    }

    /// Coefficients over the immediate base for extension elements.
    pub fn coeffs(&self) -> Option<&[Scalar]> {
        match &self.value {
            Value::Poly(c) => Some(c),
            _ => None,
        }
    }

    /// Embeds `self` into `target`, which must contain `self`'s field.
    pub fn lift(&self, target: &Field) -> Result<Scalar> {
        if self.field == *target {
            return Ok(self.clone());
        }
        match target.kind() {
            Kind::Extension(e) => {
                let below = self.lift(&e.base)?;
                Ok(Scalar::from_coeffs(target, vec![below]))
            }
            _ => Err(Error::IncompatibleFields {
                left: self.field.to_string(),
                right: target.to_string(),
            }),
        }
    }

    /// Inverse of [`Scalar::lift`]: the element as a member of `target`, if it
    /// lies there.
    pub fn descend(&self, target: &Field) -> Option<Scalar> {
        if self.field == *target {
            return Some(self.clone());
        }
        match &self.value {
            Value::Poly(c) if c.len() <= 1 => {
                let base = self.field.base()?;
                let below = c.first().cloned().unwrap_or_else(|| Scalar::zero(base));
                below.descend(target)
            }
            _ => None,
        }
    }

    fn coerce(a: &Scalar, b: &Scalar) -> Result<(Scalar, Scalar)> {
        let f = Field::common(&a.field, &b.field)?;
        Ok((a.lift(&f)?, b.lift(&f)?))
    }

    pub fn try_add(&self, other: &Scalar) -> Result<Scalar> {
        if self.field != other.field {
            let (a, b) = Scalar::coerce(self, other)?;
            return a.try_add(&b);
        }
        let value = match (&self.value, &other.value) {
            (Value::Rational(a), Value::Rational(b)) => Value::Rational(a + b),
            (Value::Residue(a), Value::Residue(b)) => {
                let p = self.field.characteristic();
                Value::Residue(((*a as u128 + *b as u128) % p as u128) as u64)
            }
            (Value::Poly(a), Value::Poly(b)) => Value::Poly(dense::add(a, b)),
            _ => unreachable!("mismatched representations in one field"),
        };
        Ok(Scalar { field: self.field.clone(), value })
    }

    pub fn try_sub(&self, other: &Scalar) -> Result<Scalar> {
        self.try_add(&other.neg_ref())
    }

    pub fn try_mul(&self, other: &Scalar) -> Result<Scalar> {
        if self.field != other.field {
            let (a, b) = Scalar::coerce(self, other)?;
            return a.try_mul(&b);
        }
        let value = match (&self.value, &other.value) {
            (Value::Rational(a), Value::Rational(b)) => Value::Rational(a * b),
            (Value::Residue(a), Value::Residue(b)) => {
                Value::Residue(mulmod(*a, *b, self.field.characteristic()))
            }
            (Value::Poly(a), Value::Poly(b)) => {
                let base = self.field.base().expect("extension has a base");
                let prod = dense::mul(base, a, b);
                return Ok(Scalar::from_coeffs(&self.field, prod));
            }
            _ => unreachable!("mismatched representations in one field"),
        };
        Ok(Scalar { field: self.field.clone(), value })
    }

    pub fn try_div(&self, other: &Scalar) -> Result<Scalar> {
        self.try_mul(&other.inv()?)
    }

    pub fn inv(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let value = match &self.value {
            Value::Rational(a) => Value::Rational(a.recip()),
            Value::Residue(a) => {
                let p = self.field.characteristic();
                Value::Residue(powmod(*a, p - 2, p))
            }
            Value::Poly(a) => {
                let base = self.field.base().expect("extension has a base");
                let (g, s) = dense::gcd_with_cofactor(base, a, self.field.modulus_slice());
                debug_assert!(g.len() == 1, "modulus is irreducible");
                return Ok(Scalar::from_coeffs(&self.field, s));
            }
        };
        Ok(Scalar { field: self.field.clone(), value })
    }

    fn neg_ref(&self) -> Scalar {
        let value = match &self.value {
            Value::Rational(a) => Value::Rational(-a),
            Value::Residue(a) => {
                let p = self.field.characteristic();
                Value::Residue(if *a == 0 { 0 } else { p - a })
            }
            Value::Poly(a) => Value::Poly(dense::neg(a)),
        };
        Scalar { field: self.field.clone(), value }
    }

    pub fn pow(&self, e: u64) -> Scalar {
        self.pow_big(&BigUint::from(e))
    }

    pub fn pow_big(&self, e: &BigUint) -> Scalar {
        let mut result = Scalar::one(&self.field);
        let mut base = self.clone();
        let bits = e.bits();
        for i in 0..bits {
            if e.bit(i) {
                result = &result * &base;
            }
            if i + 1 < bits {
                base = &base * &base;
            }
        }
        result
    }

    /// The unique p-th root in a finite field (Frobenius is bijective).
    pub fn pth_root(&self) -> Scalar {
        match self.field.kind() {
            Kind::Rationals => panic!("p-th root in characteristic 0"),
            Kind::Prime(_) => self.clone(),
            Kind::Extension(_) => {
                let q = self.field.cardinality().expect("finite");
                let p = BigUint::from(self.field.characteristic());
                self.pow_big(&(q / p))
            }
        }
    }

    /// Uniformly random element of a finite field.
    pub fn random<R: Rng + ?Sized>(field: &Field, rng: &mut R) -> Scalar {
        match field.kind() {
            Kind::Rationals => Scalar::from_int(field, rng.gen_range(-20..=20)),
            Kind::Prime(p) => Scalar::residue(field, rng.gen_range(0..*p)),
            Kind::Extension(e) => {
                let deg = e.modulus.len() - 1;
                let coeffs = (0..deg).map(|_| Scalar::random(&e.base, rng)).collect();
                Scalar::from_coeffs(field, coeffs)
            }
        }
    }

    /// Sequence 0, 1, -1, 2, -2, … of integers mapped into the field; stops
    /// once the prime field is exhausted.
    pub fn small_integers(field: &Field, count: usize) -> Vec<Scalar> {
        let p = field.characteristic();
        let limit = if p == 0 { count } else { count.min(p as usize) };
        let mut out: Vec<Scalar> = Vec::with_capacity(limit);
        let mut k: i64 = 0;
        while out.len() < limit {
            for v in [k, -k] {
                if out.len() == limit {
                    break;
                }
                let s = Scalar::from_int(field, v);
                if !out.contains(&s) {
                    out.push(s);
                }
            }
            k += 1;
        }
        out
    }

    /// Integer value when the element is a rational integer.
    pub fn to_integer(&self) -> Option<BigInt> {
        match &self.value {
            Value::Rational(q) if q.is_integer() => Some(q.to_integer()),
            _ => None,
        }
    }

    pub fn is_negative(&self) -> bool {
        matches!(&self.value, Value::Rational(q) if q.is_negative())
    }
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Self) -> bool {
        if self.field == other.field {
            return self.value == other.value;
        }
        match Scalar::coerce(self, other) {
            Ok((a, b)) => a.value == b.value,
            Err(_) => false,
        }
    }
}

impl Eq for Scalar {}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.value {
            Value::Rational(q) => {
                if q.is_integer() {
                    write!(f, "{}", q.numer())
                } else {
                    write!(f, "{}/{}", q.numer(), q.denom())
                }
            }
            Value::Residue(v) => write!(f, "{v}"),
            Value::Poly(c) => {
                let name = self.field.generator_name().expect("extension");
                write!(f, "{}", dense::display(c, &name))
            }
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl serde::Serialize for Scalar {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

// Operator impls panic on incompatible fields; use the `try_*` methods or
// [`scalar_arith`] when fields are not known to nest.
macro_rules! binop {
    ($trait:ident, $method:ident, $try:ident) => {
        impl $trait<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                self.$try(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl $trait<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                (&self).$method(rhs)
            }
        }
        impl $trait<Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                self.$method(&rhs)
            }
        }
    };
}

binop!(Add, add, try_add);
binop!(Sub, sub, try_sub);
binop!(Mul, mul, try_mul);
binop!(Div, div, try_div);

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.neg_ref()
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.neg_ref()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Scalar {
        Scalar::from_rational(&Field::rationals(), &BigRational::new(n.into(), d.into())).unwrap()
    }

    #[test]
    fn rational_sum() {
        assert_eq!(q(1, 2) + q(1, 3), q(5, 6));
        assert_eq!((q(1, 2) + q(1, 3)).to_string(), "5/6");
    }

    #[test]
    fn prime_product() {
        let f5 = Field::prime(5).unwrap();
        let p = Scalar::from_int(&f5, 3) * Scalar::from_int(&f5, 4);
        assert_eq!(p, Scalar::from_int(&f5, 2));
        assert_eq!(p.to_string(), "2");
    }

    #[test]
    fn generator_squared_in_f9() {
        let f3 = Field::prime(3).unwrap();
        let m = crate::exactfield::UniPoly::from_ints(&f3, &[1, 0, 1]);
        let f9 = Field::extension(&f3, &m).unwrap();
        let z = f9.generator().unwrap();
        assert_eq!(&z * &z, Scalar::from_int(&f9, 2));
        assert_eq!((Scalar::from_int(&f9, 2) * &z + Scalar::one(&f9)).to_string(), "2*z1+1");
    }

    #[test]
    fn division_by_zero_is_reported() {
        let f7 = Field::prime(7).unwrap();
        let err = scalar_arith(&Scalar::one(&f7), &Scalar::zero(&f7), ArithOp::Div).unwrap_err();
        assert_eq!(err, Error::DivisionByZero);
    }

    #[test]
    fn unrelated_fields_do_not_mix() {
        let a = Scalar::one(&Field::prime(5).unwrap());
        let b = Scalar::one(&Field::prime(7).unwrap());
        assert!(matches!(a.try_add(&b), Err(Error::IncompatibleFields { .. })));
        let c = Scalar::one(&Field::rationals());
        assert!(matches!(scalar_arith(&a, &c, ArithOp::Mul), Err(Error::IncompatibleFields { .. })));
    }

    #[test]
    fn base_elements_embed_into_extension() {
        let f2 = Field::prime(2).unwrap();
        let f4 = f2.with_degree(2).unwrap();
        let z = f4.generator().unwrap();
        let one = Scalar::one(&f2);
        let s = &z + &one;
        assert_eq!(s.field(), &f4);
        assert_eq!(&s * &s, &(&z * &z) + &one);
        assert_eq!(one.lift(&f4).unwrap().descend(&f2).unwrap(), one);
    }

    #[test]
    fn small_integers_cover_prime_field_once() {
        let f5 = Field::prime(5).unwrap();
        let s: Vec<String> = Scalar::small_integers(&f5, 10).iter().map(|x| x.to_string()).collect();
        assert_eq!(s, ["0", "1", "4", "2", "3"]);
    }
}
