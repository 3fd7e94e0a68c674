//! Sparse polynomials in affine (x, y) or homogeneous (X, Y, Z) coordinates.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::Result;
use crate::exactfield::{Field, Scalar, UniPoly};

/// Which coordinate system a polynomial lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize)]
pub enum Vars {
    /// Variables `x, y`.
    Affine,
    /// Variables `X, Y, Z`.
    Projective,
}

impl Vars {
    pub fn count(self) -> usize {
        match self {
            Vars::Affine => 2,
            Vars::Projective => 3,
        }
    }

    pub fn names(self) -> &'static [&'static str] {
        match self {
            Vars::Affine => &["x", "y"],
            Vars::Projective => &["X", "Y", "Z"],
        }
    }
}

/// Exponent vector. Unused trailing slots stay zero.
///
/// Ordered by total degree first, then by the exponent of the last variable,
/// then the one before it, descending; iteration order is the printing order
/// (`y^2 - x^3`, `Y^2*Z - X^3`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Monomial(pub [u32; 3]);

impl Monomial {
    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then(other.0[2].cmp(&self.0[2]))
            .then(other.0[1].cmp(&self.0[1]))
            .then(other.0[0].cmp(&self.0[0]))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A sparse polynomial with exact coefficients. No zero coefficient is ever
/// stored, so structural equality is polynomial equality.
#[derive(Clone, PartialEq, Eq)]
pub struct MultiPoly {
    vars: Vars,
    field: Field,
    terms: BTreeMap<Monomial, Scalar>,
}

impl MultiPoly {
    pub fn zero(vars: Vars, field: &Field) -> MultiPoly {
        MultiPoly { vars, field: field.clone(), terms: BTreeMap::new() }
    }

    pub fn constant(vars: Vars, c: Scalar) -> MultiPoly {
        MultiPoly::monomial(vars, c, [0, 0, 0])
    }

    pub fn one(vars: Vars, field: &Field) -> MultiPoly {
        MultiPoly::constant(vars, Scalar::one(field))
    }

    pub fn monomial(vars: Vars, c: Scalar, exps: [u32; 3]) -> MultiPoly {
        let field = c.field().clone();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial(exps), c);
        }
        MultiPoly { vars, field, terms }
    }

    /// The `i`-th coordinate function.
    pub fn var(vars: Vars, field: &Field, i: usize) -> MultiPoly {
        assert!(i < vars.count());
        let mut e = [0; 3];
        e[i] = 1;
        MultiPoly::monomial(vars, Scalar::one(field), e)
    }

    /// Sums the given terms; coefficients must lie in (a subfield of) `field`.
    pub fn from_terms<I>(vars: Vars, field: &Field, terms: I) -> MultiPoly
    where
        I: IntoIterator<Item = ([u32; 3], Scalar)>,
    {
        let mut map: BTreeMap<Monomial, Scalar> = BTreeMap::new();
        for (e, c) in terms {
            debug_assert!(e[vars.count()..].iter().all(|&k| k == 0));
            let c = c.lift(field).unwrap_or_else(|err| panic!("{err}"));
            accumulate(&mut map, Monomial(e), c);
        }
        MultiPoly { vars, field: field.clone(), terms: map }
    }

    pub fn vars(&self) -> Vars {
        self.vars
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Scalar)> + '_ {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.degree() == 0)
    }

    pub fn coeff(&self, exps: [u32; 3]) -> Scalar {
        self.terms.get(&Monomial(exps)).cloned().unwrap_or_else(|| Scalar::zero(&self.field))
    }

    /// Constant term.
    pub fn constant_term(&self) -> Scalar {
        self.coeff([0, 0, 0])
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(Monomial::degree)
    }

    /// Smallest total degree among the terms.
    pub fn order(&self) -> Option<u32> {
        self.terms.keys().next().map(Monomial::degree)
    }

    pub fn degree_in(&self, i: usize) -> Option<u32> {
        self.terms.keys().map(|m| m.0[i]).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.order() == self.total_degree()
    }

    /// Sum of the terms of total degree `d`.
    pub fn homogeneous_part(&self, d: u32) -> MultiPoly {
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.degree() == d)
            .map(|(m, c)| (*m, c.clone()))
            .collect();
        MultiPoly { vars: self.vars, field: self.field.clone(), terms }
    }

    pub fn lift(&self, field: &Field) -> Result<MultiPoly> {
        if self.field == *field {
            return Ok(self.clone());
        }
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| Ok((*m, c.lift(field)?)))
            .collect::<Result<_>>()?;
        Ok(MultiPoly { vars: self.vars, field: field.clone(), terms })
    }

    pub fn scale(&self, c: &Scalar) -> MultiPoly {
        let field = Field::common(&self.field, c.field()).unwrap_or_else(|e| panic!("{e}"));
        if c.is_zero() {
            return MultiPoly::zero(self.vars, &field);
        }
        let terms = self.terms.iter().map(|(m, a)| (*m, a * c)).collect();
        MultiPoly { vars: self.vars, field, terms }
    }

    pub fn pow(&self, mut e: u32) -> MultiPoly {
        let mut result = MultiPoly::one(self.vars, &self.field);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Formal partial derivative with respect to variable `i`; exponents
    /// divisible by the characteristic vanish.
    pub fn partial_derivative(&self, i: usize) -> MultiPoly {
        let mut map = BTreeMap::new();
        for (m, c) in &self.terms {
            if m.0[i] == 0 {
                continue;
            }
            let mut e = m.0;
            let k = e[i];
            e[i] -= 1;
            let c = c * &Scalar::from_int(&self.field, k as i64);
            accumulate(&mut map, Monomial(e), c);
        }
        MultiPoly { vars: self.vars, field: self.field.clone(), terms: map }
    }

    /// Value at a point (coordinates may lie in an extension).
    pub fn eval(&self, point: &[Scalar]) -> Scalar {
        assert_eq!(point.len(), self.vars.count());
        let mut field = self.field.clone();
        for p in point {
            field = Field::common(&field, p.field()).unwrap_or_else(|e| panic!("{e}"));
        }
        let mut acc = Scalar::zero(&field);
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, p) in point.iter().enumerate() {
                if m.0[i] > 0 {
                    t = &t * &p.pow(m.0[i] as u64);
                }
            }
            acc = &acc + &t;
        }
        acc
    }

    /// Substitutes `images[i]` for variable `i`. The result lives in the
    /// coordinate system of the images.
    pub fn compose(&self, images: &[MultiPoly]) -> MultiPoly {
        assert_eq!(images.len(), self.vars.count());
        let target = images[0].vars;
        let mut field = self.field.clone();
        for im in images {
            field = Field::common(&field, &im.field).unwrap_or_else(|e| panic!("{e}"));
        }
        let mut powers: Vec<Vec<MultiPoly>> = images
            .iter()
            .map(|im| vec![MultiPoly::one(target, &field), im.clone()])
            .collect();
        let mut acc = MultiPoly::zero(target, &field);
        for (m, c) in &self.terms {
            let mut t = MultiPoly::constant(target, c.lift(&field).expect("subfield"));
            for i in 0..images.len() {
                let e = m.0[i] as usize;
                while powers[i].len() <= e {
                    let next = &powers[i][powers[i].len() - 1] * &images[i];
                    powers[i].push(next);
                }
                if e > 0 {
                    t = &t * &powers[i][e];
                }
            }
            acc = &acc + &t;
        }
        acc
    }

    /// Applies `f` to every exponent vector; colliding images are summed.
    pub(crate) fn map_monomials(&self, vars: Vars, f: impl Fn([u32; 3]) -> [u32; 3]) -> MultiPoly {
        MultiPoly::from_terms(vars, &self.field, self.terms.iter().map(|(m, c)| (f(m.0), c.clone())))
    }

    /// Coefficients of powers of `y` as polynomials in `x` (affine only).
    pub fn y_coeffs(&self) -> Vec<UniPoly> {
        assert_eq!(self.vars, Vars::Affine);
        let deg = self.degree_in(1).map_or(0, |d| d as usize + 1);
        let mut rows: Vec<Vec<Scalar>> = vec![Vec::new(); deg];
        for (m, c) in &self.terms {
            let row = &mut rows[m.0[1] as usize];
            let i = m.0[0] as usize;
            if row.len() <= i {
                row.resize(i + 1, Scalar::zero(&self.field));
            }
            row[i] = c.clone();
        }
        rows.into_iter().map(|r| UniPoly::new(&self.field, r)).collect()
    }

    /// Inverse of [`MultiPoly::y_coeffs`].
    pub fn from_y_coeffs(field: &Field, coeffs: &[UniPoly]) -> MultiPoly {
        let terms = coeffs.iter().enumerate().flat_map(|(j, u)| {
            u.coeffs()
                .iter()
                .enumerate()
                .map(move |(i, c)| ([i as u32, j as u32, 0], c.clone()))
        });
        MultiPoly::from_terms(Vars::Affine, field, terms)
    }

    /// Univariate polynomial in the single variable `i` when all other
    /// exponents are zero.
    pub fn as_univariate(&self, i: usize) -> Option<UniPoly> {
        let mut coeffs = Vec::new();
        for (m, c) in &self.terms {
            if m.0.iter().enumerate().any(|(j, &e)| j != i && e > 0) {
                return None;
            }
            let k = m.0[i] as usize;
            if coeffs.len() <= k {
                coeffs.resize(k + 1, Scalar::zero(&self.field));
            }
            coeffs[k] = c.clone();
        }
        Some(UniPoly::new(&self.field, coeffs))
    }

    /// Builds `u(var_i)` from a univariate polynomial.
    pub fn from_univariate(vars: Vars, u: &UniPoly, i: usize) -> MultiPoly {
        let terms = u.coeffs().iter().enumerate().map(|(k, c)| {
            let mut e = [0; 3];
            e[i] = k as u32;
            (e, c.clone())
        });
        MultiPoly::from_terms(vars, u.field(), terms)
    }

    /// Divides by the leading coefficient of the last term in printing order.
    pub fn normalized(&self) -> MultiPoly {
        match self.terms.values().next_back() {
            Some(c) if !c.is_one() => self.scale(&c.inv().expect("nonzero")),
            _ => self.clone(),
        }
    }
}

fn accumulate(map: &mut BTreeMap<Monomial, Scalar>, m: Monomial, c: Scalar) {
    if c.is_zero() {
        return;
    }
    match map.get_mut(&m) {
        Some(existing) => {
            let s = &*existing + &c;
            if s.is_zero() {
                map.remove(&m);
            } else {
                *existing = s;
            }
        }
        None => {
            map.insert(m, c);
        }
    }
}

fn combine(a: &MultiPoly, b: &MultiPoly) -> (Field, Vars) {
    assert_eq!(a.vars, b.vars, "mixing affine and homogeneous polynomials");
    let f = Field::common(&a.field, &b.field).unwrap_or_else(|e| panic!("{e}"));
    (f, a.vars)
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        let (field, vars) = combine(self, rhs);
        let mut map = self.lift(&field).expect("common field").terms;
        for (m, c) in &rhs.terms {
            accumulate(&mut map, *m, c.lift(&field).expect("common field"));
        }
        MultiPoly { vars, field, terms: map }
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        self + &(-rhs)
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        let terms = self.terms.iter().map(|(m, c)| (*m, -c)).collect();
        MultiPoly { vars: self.vars, field: self.field.clone(), terms }
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        let (field, vars) = combine(self, rhs);
        let mut map = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                let e = [ma.0[0] + mb.0[0], ma.0[1] + mb.0[1], ma.0[2] + mb.0[2]];
                accumulate(&mut map, Monomial(e), ca * cb);
            }
        }
        MultiPoly { vars, field, terms: map }
    }
}

macro_rules! owned_ops {
    ($($trait:ident $method:ident),*) => {$(
        impl $trait for MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: MultiPoly) -> MultiPoly {
                (&self).$method(&rhs)
            }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul);

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let names = self.vars.names();
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let mut mono = Vec::new();
            for (i, name) in names.iter().enumerate() {
                match m.0[i] {
                    0 => {}
                    1 => mono.push(name.to_string()),
                    e => mono.push(format!("{name}^{e}")),
                }
            }
            let mono = mono.join("*");
            let negative = c.is_negative();
            let shown = if negative { -c } else { c.clone() };
            let cs = shown.to_string();
            let body = if mono.is_empty() {
                cs
            } else if shown.is_one() {
                mono
            } else if cs.contains('+') {
                format!("({cs})*{mono}")
            } else {
                format!("{cs}*{mono}")
            };
            match (k, negative) {
                (0, true) => write!(f, "-{body}")?,
                (0, false) => write!(f, "{body}")?,
                (_, true) => write!(f, " - {body}")?,
                (_, false) => write!(f, " + {body}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} over {}", self.field)
    }
}

impl serde::Serialize for MultiPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}
