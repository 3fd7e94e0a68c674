//! Dense univariate polynomials over a [`Field`].

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigUint;

use super::dense;
use super::{Field, Scalar};
use crate::error::{Error, Result};

/// Dense univariate polynomial, lowest coefficient first, no trailing zeros.
/// The zero polynomial has no coefficients and degree `None`.
#[derive(Clone, PartialEq, Eq)]
pub struct UniPoly {
    field: Field,
    coeffs: Vec<Scalar>,
}

impl UniPoly {
    /// Builds a polynomial; coefficients from subfields are lifted into `field`.
    pub fn new(field: &Field, coeffs: Vec<Scalar>) -> UniPoly {
        let mut coeffs: Vec<Scalar> = coeffs
            .into_iter()
            .map(|c| c.lift(field).unwrap_or_else(|e| panic!("{e}")))
            .collect();
        dense::trim(&mut coeffs);
        UniPoly { field: field.clone(), coeffs }
    }

    pub fn from_ints(field: &Field, coeffs: &[i64]) -> UniPoly {
        UniPoly::new(field, coeffs.iter().map(|&c| Scalar::from_int(field, c)).collect())
    }

    pub fn zero(field: &Field) -> UniPoly {
        UniPoly { field: field.clone(), coeffs: Vec::new() }
    }

    pub fn one(field: &Field) -> UniPoly {
        UniPoly::constant(Scalar::one(field))
    }

    pub fn constant(c: Scalar) -> UniPoly {
        let field = c.field().clone();
        UniPoly::new(&field, vec![c])
    }

    /// The monomial t.
    pub fn t(field: &Field) -> UniPoly {
        UniPoly::new(field, vec![Scalar::zero(field), Scalar::one(field)])
    }

    /// t - a
    pub fn linear(a: &Scalar) -> UniPoly {
        let f = a.field().clone();
        UniPoly::new(&f, vec![-a, Scalar::one(&f)])
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Scalar {
        self.coeffs.get(i).cloned().unwrap_or_else(|| Scalar::zero(&self.field))
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Exponent of the lowest nonzero term, `None` for zero.
    pub fn order(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn leading(&self) -> Option<&Scalar> {
        self.coeffs.last()
    }

    pub fn lift(&self, field: &Field) -> Result<UniPoly> {
        let coeffs = self.coeffs.iter().map(|c| c.lift(field)).collect::<Result<Vec<_>>>()?;
        Ok(UniPoly { field: field.clone(), coeffs })
    }

    pub fn monic(&self) -> UniPoly {
        match self.leading() {
            Some(lc) if !lc.is_one() => self.scale(&lc.inv().expect("nonzero")),
            _ => self.clone(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> UniPoly {
        UniPoly { field: self.field.clone(), coeffs: dense::scale(&self.coeffs, c) }
    }

    pub fn eval(&self, x: &Scalar) -> Scalar {
        let mut acc = Scalar::zero(&Field::common(&self.field, x.field()).unwrap_or_else(|e| panic!("{e}")));
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    pub fn derivative(&self) -> UniPoly {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * &Scalar::from_int(&self.field, i as i64))
            .collect();
        UniPoly::new(&self.field, coeffs)
    }

    pub fn divrem(&self, other: &UniPoly) -> Result<(UniPoly, UniPoly)> {
        if other.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let f = Field::common(&self.field, &other.field)?;
        let a = self.lift(&f)?;
        let b = other.lift(&f)?;
        let (q, r) = dense::divrem(&f, &a.coeffs, &b.coeffs);
        Ok((UniPoly { field: f.clone(), coeffs: q }, UniPoly { field: f, coeffs: r }))
    }

    pub fn rem(&self, other: &UniPoly) -> UniPoly {
        self.divrem(other).unwrap_or_else(|e| panic!("{e}")).1
    }

    /// Quotient of an exact division; panics in debug builds if inexact.
    pub fn exact_div(&self, other: &UniPoly) -> UniPoly {
        let (q, r) = self.divrem(other).unwrap_or_else(|e| panic!("{e}"));
        debug_assert!(r.is_zero(), "inexact division {self} / {other}");
        q
    }

    /// Monic gcd (zero when both inputs are zero).
    pub fn gcd(&self, other: &UniPoly) -> UniPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// `self^e mod m`.
    pub fn powmod(&self, e: &BigUint, m: &UniPoly) -> UniPoly {
        let mut result = UniPoly::one(&self.field).rem(m);
        let mut base = self.rem(m);
        let bits = e.bits();
        for i in 0..bits {
            if e.bit(i) {
                result = (&result * &base).rem(m);
            }
            if i + 1 < bits {
                base = (&base * &base).rem(m);
            }
        }
        result
    }

    pub fn pow(&self, e: usize) -> UniPoly {
        let mut r = UniPoly::one(&self.field);
        for _ in 0..e {
            r = &r * self;
        }
        r
    }

    /// Formats with a chosen variable name.
    pub fn display_in(&self, var: &str) -> String {
        dense::display(&self.coeffs, var)
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_in("t"))
    }
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} over {}", self.field)
    }
}

impl Add for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        let f = Field::common(&self.field, &rhs.field).unwrap_or_else(|e| panic!("{e}"));
        UniPoly { coeffs: dense::add(&self.coeffs, &rhs.coeffs), field: f }
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        let f = Field::common(&self.field, &rhs.field).unwrap_or_else(|e| panic!("{e}"));
        UniPoly { coeffs: dense::sub(&self.coeffs, &rhs.coeffs), field: f }
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        let f = Field::common(&self.field, &rhs.field).unwrap_or_else(|e| panic!("{e}"));
        UniPoly { coeffs: dense::mul(&f, &self.coeffs, &rhs.coeffs), field: f }
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly { field: self.field.clone(), coeffs: dense::neg(&self.coeffs) }
    }
}
