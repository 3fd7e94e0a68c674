//! Elimination in two variables: resultants, gcds and squarefreeness, with
//! polynomials viewed in `k[x][y]`.

use super::local::{dehomogenize, Chart};
use super::{MultiPoly, Vars};
use crate::error::{Error, Result};
use crate::exactfield::{Field, UniPoly};

type YPoly = Vec<UniPoly>;

fn trim(p: &mut YPoly) {
    while p.last().is_some_and(UniPoly::is_zero) {
        p.pop();
    }
}

fn content(p: &YPoly) -> Option<UniPoly> {
    let mut it = p.iter().filter(|c| !c.is_zero());
    let first = it.next()?.monic();
    Some(it.fold(first, |acc, c| acc.gcd(c)))
}

fn divide_coeffs(p: &YPoly, d: &UniPoly) -> YPoly {
    p.iter().map(|c| c.exact_div(d)).collect()
}

fn primitive_part(p: &YPoly) -> YPoly {
    match content(p) {
        Some(c) => divide_coeffs(p, &c),
        None => p.clone(),
    }
}

/// Pseudo-remainder of `a` by `b` in `k[x][y]`.
fn prem(a: &YPoly, b: &YPoly) -> YPoly {
    let db = b.len() - 1;
    let lc = b[db].clone();
    let mut r = a.clone();
    while r.len() > db {
        let top = r.len() - 1;
        let shift = top - db;
        let lead = r[top].clone();
        for c in r.iter_mut() {
            *c = &*c * &lc;
        }
        for (j, bj) in b.iter().enumerate() {
            r[shift + j] = &r[shift + j] - &(&lead * bj);
        }
        trim(&mut r);
    }
    r
}

/// gcd in `k[x, y]` of two affine polynomials, normalized so the last term in
/// printing order has coefficient 1. Zero only when both inputs are zero.
pub fn gcd(f: &MultiPoly, g: &MultiPoly) -> MultiPoly {
    assert_eq!(f.vars(), Vars::Affine);
    let field = Field::common(f.field(), g.field()).unwrap_or_else(|e| panic!("{e}"));
    if f.is_zero() {
        return g.lift(&field).expect("subfield").normalized();
    }
    if g.is_zero() {
        return f.lift(&field).expect("subfield").normalized();
    }
    let mut a = f.lift(&field).expect("subfield").y_coeffs();
    let mut b = g.lift(&field).expect("subfield").y_coeffs();
    let c = content(&a).expect("nonzero").gcd(&content(&b).expect("nonzero"));
    a = primitive_part(&a);
    b = primitive_part(&b);
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_empty() {
        let r = prem(&a, &b);
        a = b;
        b = primitive_part(&r);
    }
    let g = if a.len() <= 1 {
        MultiPoly::one(Vars::Affine, &field)
    } else {
        MultiPoly::from_y_coeffs(&field, &a)
    };
    (&g * &MultiPoly::from_univariate(Vars::Affine, &c, 0)).normalized()
}

/// Exact quotient `f / g` in `k[x, y]`, or `None` when `g` does not divide `f`.
pub fn divide(f: &MultiPoly, g: &MultiPoly) -> Option<MultiPoly> {
    if g.is_zero() {
        return None;
    }
    let field = Field::common(f.field(), g.field()).ok()?;
    let mut r = f.lift(&field).ok()?;
    let lead = g.terms().next_back().map(|(m, c)| (*m, c.clone()))?;
    let mut q = MultiPoly::zero(f.vars(), &field);
    loop {
        let top = r.terms().next_back().map(|(m, c)| (*m, c.clone()));
        let Some((m, c)) = top else { break };
        // graded order: the top term of r must be divisible by the top of g
        let e: Vec<i64> = (0..3).map(|i| m.0[i] as i64 - lead.0 .0[i] as i64).collect();
        if e.iter().any(|&k| k < 0) {
            return None;
        }
        let t = MultiPoly::monomial(f.vars(), &c / &lead.1, [e[0] as u32, e[1] as u32, e[2] as u32]);
        r = &r - &(&t * g);
        q = &q + &t;
    }
    Some(q)
}

/// True when `f` and `g` share a non-constant factor.
pub fn have_common_component(f: &MultiPoly, g: &MultiPoly) -> bool {
    match f.vars() {
        Vars::Affine => !gcd(f, g).is_constant(),
        Vars::Projective => {
            let z_divides = |p: &MultiPoly| p.terms().all(|(m, _)| m.0[2] > 0);
            if z_divides(f) && z_divides(g) {
                return true;
            }
            let fa = dehomogenize(f, Chart::Z).expect("homogeneous");
            let ga = dehomogenize(g, Chart::Z).expect("homogeneous");
            !gcd(&fa, &ga).is_constant()
        }
    }
}

/// Fails with [`Error::CommonComponent`] when `f` and `g` share a factor.
pub fn require_coprime(f: &MultiPoly, g: &MultiPoly) -> Result<()> {
    if f.is_zero() || g.is_zero() || have_common_component(f, g) {
        return Err(Error::CommonComponent);
    }
    Ok(())
}

/// `f` has no repeated factor: `gcd(f, f_x, f_y)` is constant and the
/// partials do not both vanish (which would make `f` a p-th power).
pub fn is_squarefree(f: &MultiPoly) -> bool {
    if f.is_zero() {
        return false;
    }
    if f.is_constant() {
        return true;
    }
    match f.vars() {
        Vars::Affine => {
            let fx = f.partial_derivative(0);
            let fy = f.partial_derivative(1);
            if fx.is_zero() && fy.is_zero() {
                return false;
            }
            gcd(&gcd(f, &fx), &fy).is_constant()
        }
        Vars::Projective => {
            let z2 = f.terms().all(|(m, _)| m.0[2] >= 2);
            !z2 && is_squarefree(&dehomogenize(f, Chart::Z).expect("homogeneous"))
        }
    }
}

/// Fraction-free determinant over `k[x]`.
fn bareiss_det(mut m: Vec<Vec<UniPoly>>, field: &Field) -> UniPoly {
    let n = m.len();
    if n == 0 {
        return UniPoly::one(field);
    }
    let mut sign = false;
    let mut prev = UniPoly::one(field);
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    sign = !sign;
                }
                None => return UniPoly::zero(field),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&m[i][j] * &m[k][k]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = num.exact_div(&prev);
            }
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if sign {
        -&det
    } else {
        det
    }
}

/// `Res_y(f, g)` as a polynomial in `x`.
pub fn resultant_y(f: &MultiPoly, g: &MultiPoly) -> UniPoly {
    assert_eq!(f.vars(), Vars::Affine);
    let field = Field::common(f.field(), g.field()).unwrap_or_else(|e| panic!("{e}"));
    let a = f.lift(&field).expect("subfield").y_coeffs();
    let b = g.lift(&field).expect("subfield").y_coeffs();
    if a.is_empty() || b.is_empty() {
        return UniPoly::zero(&field);
    }
    let m = a.len() - 1;
    let n = b.len() - 1;
    if m == 0 {
        return a[0].pow(n);
    }
    if n == 0 {
        return b[0].pow(m);
    }
    let size = m + n;
    let mut rows = Vec::with_capacity(size);
    // rows hold coefficients from the highest power of y down
    for i in 0..n {
        let mut row = vec![UniPoly::zero(&field); size];
        for (k, c) in a.iter().rev().enumerate() {
            row[i + k] = c.clone();
        }
        rows.push(row);
    }
    for i in 0..m {
        let mut row = vec![UniPoly::zero(&field); size];
        for (k, c) in b.iter().rev().enumerate() {
            row[i + k] = c.clone();
        }
        rows.push(row);
    }
    bareiss_det(rows, &field)
}
