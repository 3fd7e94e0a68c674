//! Helpers shared by the integration tests: a second intersection algorithm
//! that never blows up, corpus loading and random polynomials.

#![allow(dead_code)]

use plane_curves::exactfield::{Field, Scalar};
use plane_curves::polyring::{mult_at_origin, parse_poly, MultiPoly, Vars};
use rand::Rng;

pub fn q() -> Field {
    Field::rationals()
}

pub fn field(desc: &str) -> Field {
    Field::parse_descriptor(desc).unwrap()
}

pub fn poly(text: &str, k: &Field) -> MultiPoly {
    parse_poly(text, k).unwrap_or_else(|e| panic!("{text}: {e}"))
}

fn restrict_y0(f: &MultiPoly) -> MultiPoly {
    MultiPoly::from_terms(
        Vars::Affine,
        f.field(),
        f.terms().filter(|(m, _)| m.0[1] == 0).map(|(m, c)| (m.0, c.clone())),
    )
}

fn div_y(f: &MultiPoly) -> MultiPoly {
    MultiPoly::from_terms(
        Vars::Affine,
        f.field(),
        f.terms().map(|(m, c)| ([m.0[0], m.0[1] - 1, 0], c.clone())),
    )
}

fn x_order(f: &MultiPoly) -> u64 {
    f.terms().map(|(m, _)| m.0[0] as u64).min().expect("nonzero")
}

/// Intersection number at the origin by repeated reduction along `y = 0`:
/// cancel leading terms of `F(x, 0)` and `G(x, 0)` until one of them
/// vanishes, then peel off a factor of `y`. Panics after `budget` steps,
/// which only happens for curves sharing a component through the origin.
pub fn reduction_oracle(f: &MultiPoly, g: &MultiPoly) -> u64 {
    let mut f = f.clone();
    let mut g = g.clone();
    let mut total = 0u64;
    for _ in 0..100_000 {
        if f.is_zero() || g.is_zero() {
            panic!("common component");
        }
        if mult_at_origin(&f).unwrap() == 0 || mult_at_origin(&g).unwrap() == 0 {
            return total;
        }
        let (f0, g0) = (restrict_y0(&f), restrict_y0(&g));
        if f0.is_zero() {
            total += if g0.is_zero() { panic!("common component") } else { x_order(&g0) };
            f = div_y(&f);
            continue;
        }
        if g0.is_zero() {
            total += x_order(&f0);
            g = div_y(&g);
            continue;
        }
        let (r, s) = (f0.total_degree().unwrap(), g0.total_degree().unwrap());
        if r > s {
            std::mem::swap(&mut f, &mut g);
            continue;
        }
        let lf = f0.coeff([r, 0, 0]);
        let lg = g0.coeff([s, 0, 0]);
        let t = MultiPoly::monomial(Vars::Affine, &lg / &lf, [s - r, 0, 0]);
        g = &g - &(&t * &f);
    }
    panic!("no termination");
}

/// One corpus curve: name, field descriptor, polynomial, expected
/// multiplicity sequence (r values in preorder) and delta.
#[derive(Debug, Clone)]
pub struct CurveCase {
    pub name: String,
    pub field: Field,
    pub poly: MultiPoly,
    pub sequence: Vec<u32>,
    pub delta: u64,
}

pub fn curves() -> Vec<CurveCase> {
    include_str!("../data/curves.txt")
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|l| {
            let parts: Vec<&str> = l.split(';').map(str::trim).collect();
            let k = field(parts[1]);
            let sequence = parts[3]
                .trim_matches(|c| c == '[' || c == ']')
                .split(',')
                .filter(|s| !s.trim().is_empty())
                .map(|s| s.trim().parse().unwrap())
                .collect();
            CurveCase {
                name: parts[0].to_string(),
                poly: poly(parts[2], &k),
                field: k,
                sequence,
                delta: parts[4].parse().unwrap(),
            }
        })
        .collect()
}

/// Lines `field; F; G; expected` from `pairs.txt` (affine, at the origin).
pub fn pairs() -> Vec<(Field, MultiPoly, MultiPoly, u64)> {
    table("pairs.txt")
        .into_iter()
        .map(|p| {
            let k = field(&p[0]);
            (k.clone(), poly(&p[1], &k), poly(&p[2], &k), p[3].parse().unwrap())
        })
        .collect()
}

/// Lines `field; F; G; H; expect` from `triples.txt`, `expect` being
/// `pass` or `fail`.
pub fn triples() -> Vec<(Field, [MultiPoly; 3], bool)> {
    table("triples.txt")
        .into_iter()
        .map(|p| {
            let k = field(&p[0]);
            let polys = [poly(&p[1], &k), poly(&p[2], &k), poly(&p[3], &k)];
            (k, polys, p[4] == "pass")
        })
        .collect()
}

/// Lines `field; F; G` from `projective.txt`.
pub fn projective_pairs() -> Vec<(Field, MultiPoly, MultiPoly)> {
    table("projective.txt")
        .into_iter()
        .map(|p| {
            let k = field(&p[0]);
            (k.clone(), poly(&p[1], &k), poly(&p[2], &k))
        })
        .collect()
}

fn table(name: &str) -> Vec<Vec<String>> {
    let text = match name {
        "pairs.txt" => include_str!("../data/pairs.txt"),
        "triples.txt" => include_str!("../data/triples.txt"),
        "projective.txt" => include_str!("../data/projective.txt"),
        _ => unreachable!(),
    };
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|l| l.split(';').map(|s| s.trim().to_string()).collect())
        .collect()
}

/// Random affine polynomial with terms of total degree in `lo..=hi`.
pub fn random_poly<R: Rng>(rng: &mut R, k: &Field, lo: u32, hi: u32, terms: usize) -> MultiPoly {
    let mut f = MultiPoly::zero(Vars::Affine, k);
    for _ in 0..terms {
        let d = rng.gen_range(lo..=hi);
        let i = rng.gen_range(0..=d);
        let c = Scalar::random(k, rng);
        f = &f + &MultiPoly::monomial(Vars::Affine, c, [i, d - i, 0]);
    }
    f
}

/// `F(x, x·t)` with `t` written as `y`, recomputed by substitution.
pub fn substitute_chart(f: &MultiPoly) -> MultiPoly {
    let k = f.field();
    let x = MultiPoly::var(Vars::Affine, k, 0);
    let y = MultiPoly::var(Vars::Affine, k, 1);
    f.compose(&[x.clone(), &x * &y])
}

pub fn x_pow(k: &Field, e: u32) -> MultiPoly {
    MultiPoly::monomial(Vars::Affine, Scalar::one(k), [e, 0, 0])
}
