//! Dense coefficient-vector helpers shared by extension-field elements and
//! [`UniPoly`](super::UniPoly). Vectors hold the lowest coefficient first and
//! carry no trailing zeros.

use super::{Field, Scalar};

pub(crate) fn trim(v: &mut Vec<Scalar>) {
    while v.last().is_some_and(Scalar::is_zero) {
        v.pop();
    }
}

pub(crate) fn add(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    let n = a.len().max(b.len());
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        out.push(match (a.get(i), b.get(i)) {
            (Some(x), Some(y)) => x + y,
            (Some(x), None) => x.clone(),
            (None, Some(y)) => y.clone(),
            (None, None) => unreachable!(),
        });
    }
    trim(&mut out);
    out
}

pub(crate) fn neg(a: &[Scalar]) -> Vec<Scalar> {
    a.iter().map(|x| -x).collect()
}

pub(crate) fn sub(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    add(a, &neg(b))
}

pub(crate) fn scale(a: &[Scalar], c: &Scalar) -> Vec<Scalar> {
    if c.is_zero() {
        return Vec::new();
    }
    let mut out: Vec<Scalar> = a.iter().map(|x| x * c).collect();
    trim(&mut out);
    out
}

pub(crate) fn mul(field: &Field, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Scalar::zero(field); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] = &out[i + j] + &(x * y);
        }
    }
    trim(&mut out);
    out
}

/// Quotient and remainder; `b` must be nonzero.
pub(crate) fn divrem(field: &Field, a: &[Scalar], b: &[Scalar]) -> (Vec<Scalar>, Vec<Scalar>) {
    assert!(!b.is_empty(), "polynomial division by zero");
    let db = b.len() - 1;
    let mut r = a.to_vec();
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let lead_inv = b[db].inv().expect("nonzero leading coefficient");
    let mut q = vec![Scalar::zero(field); r.len() - db];
    while r.len() > db {
        let top = r.len() - 1;
        let c = &r[top] * &lead_inv;
        let shift = top - db;
        for (j, bj) in b.iter().enumerate() {
            r[shift + j] = &r[shift + j] - &(&c * bj);
        }
        q[shift] = c;
        trim(&mut r);
    }
    trim(&mut q);
    (q, r)
}

/// Extended Euclid: returns (g, s) with s·a ≡ g mod b, g monic.
pub(crate) fn gcd_with_cofactor(field: &Field, a: &[Scalar], b: &[Scalar]) -> (Vec<Scalar>, Vec<Scalar>) {
    let mut r0 = a.to_vec();
    let mut r1 = b.to_vec();
    let mut s0 = vec![Scalar::one(field)];
    let mut s1: Vec<Scalar> = Vec::new();
    while !r1.is_empty() {
        let (q, r) = divrem(field, &r0, &r1);
        let s = sub(&s0, &mul(field, &q, &s1));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s);
    }
    if let Some(lc) = r0.last().cloned() {
        let inv = lc.inv().expect("nonzero");
        r0 = scale(&r0, &inv);
        s0 = scale(&s0, &inv);
    }
    (r0, s0)
}

pub(crate) fn display(coeffs: &[Scalar], var: &str) -> String {
    if coeffs.is_empty() {
        return "0".to_string();
    }
    let mut parts = Vec::new();
    for (i, c) in coeffs.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let cs = c.to_string();
        let monomial = match i {
            0 => String::new(),
            1 => var.to_string(),
            _ => format!("{var}^{i}"),
        };
        let term = if i == 0 {
            cs
        } else if c.is_one() {
            monomial
        } else if cs.contains('+') || cs[1..].contains('-') {
            format!("({cs})*{monomial}")
        } else if cs == "-1" {
            format!("-{monomial}")
        } else {
            format!("{cs}*{monomial}")
        };
        parts.push(term);
    }
    let mut out = String::new();
    for (k, p) in parts.iter().enumerate() {
        if k > 0 && !p.starts_with('-') {
            out.push('+');
        }
        out.push_str(p);
    }
    out
}
