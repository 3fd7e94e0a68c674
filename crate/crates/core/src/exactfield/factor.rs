//! Univariate factorization.
//!
//! Over finite fields (prime or towers) this is the classical pipeline:
//! squarefree decomposition, distinct-degree splitting and Cantor-Zassenhaus
//! equal-degree splitting driven by a seeded generator. Over Q only rational
//! roots are split off; whatever is left after removing linear factors is
//! returned unsplit.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::arith::divisors_u64;
use super::{Field, Scalar, UniPoly};
use crate::error::{Error, Result};

/// Seed used when callers do not pick one.
pub const DEFAULT_SEED: u64 = 0x00c0_ffee;

/// `unit * Π factor^multiplicity`, factors monic and sorted by degree then by
/// their printed form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    pub unit: Scalar,
    pub factors: Vec<(UniPoly, usize)>,
    pub seed: u64,
}

impl Factorization {
    /// Multiplies the factorization back out.
    pub fn expand(&self) -> UniPoly {
        let mut acc = UniPoly::constant(self.unit.clone());
        for (g, m) in &self.factors {
            acc = &acc * &g.pow(*m);
        }
        acc
    }

    /// Roots coming from linear factors, with multiplicities.
    pub fn roots(&self) -> Vec<(Scalar, usize)> {
        self.factors
            .iter()
            .filter(|(g, _)| g.degree() == Some(1))
            .map(|(g, m)| (-&g.coeff(0), *m))
            .collect()
    }

    /// True when every factor is linear.
    pub fn splits(&self) -> bool {
        self.factors.iter().all(|(g, _)| g.degree() == Some(1))
    }
}

pub fn uni_factor(f: &UniPoly) -> Result<Factorization> {
    uni_factor_seeded(f, DEFAULT_SEED)
}

pub fn uni_factor_seeded(f: &UniPoly, seed: u64) -> Result<Factorization> {
    let unit = f.leading().cloned().ok_or(Error::ZeroPolynomial)?;
    let monic = f.monic();
    let mut factors = Vec::new();
    if f.field().is_rationals() {
        for (part, mult) in yun(&monic) {
            let mut rest = part;
            for root in rational_roots(&rest)? {
                let lin = UniPoly::linear(&root);
                rest = rest.exact_div(&lin);
                factors.push((lin, mult));
            }
            if !rest.is_constant() {
                factors.push((rest, mult));
            }
        }
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for (part, mult) in squarefree_finite(&monic) {
            for (g, d) in distinct_degree(&part) {
                for h in equal_degree(&g, d, &mut rng) {
                    factors.push((h, mult));
                }
            }
        }
    }
    factors.sort_by_cached_key(|(g, m)| (g.degree(), g.to_string(), *m));
    Ok(Factorization { unit, factors, seed })
}

/// Roots of `f` lying in its own field, with multiplicities.
pub fn roots(f: &UniPoly) -> Result<Vec<(Scalar, usize)>> {
    Ok(uni_factor(f)?.roots())
}

/// Irreducibility over a finite field, or over Q up to degree 3.
pub fn is_irreducible(f: &UniPoly) -> Result<bool> {
    let deg = f.degree().ok_or(Error::ZeroPolynomial)?;
    if deg == 0 {
        return Ok(false);
    }
    if f.field().is_rationals() {
        if deg > 3 {
            return Err(Error::UnsupportedExtension(
                "irreducibility over Q is only decided up to degree 3".into(),
            ));
        }
        return Ok(deg == 1 || rational_roots(&f.monic())?.is_empty());
    }
    let m = f.monic();
    if !m.gcd(&m.derivative()).is_one() {
        return Ok(false);
    }
    let dd = distinct_degree(&m);
    Ok(dd.len() == 1 && dd[0].1 == deg)
}

/// First monic irreducible polynomial of degree `k` over a finite field, in
/// lexicographic enumeration of the lower coefficients.
pub fn find_irreducible(field: &Field, k: usize) -> Result<UniPoly> {
    if field.is_rationals() {
        return Err(Error::UnsupportedExtension("number fields over Q are not supported".into()));
    }
    if let Some(elems) = field.elements(1 << 12) {
        let n = elems.len();
        let total = n.checked_pow(k as u32).unwrap_or(usize::MAX);
        for idx in 0..total {
            let mut coeffs = Vec::with_capacity(k + 1);
            let mut rest = idx;
            for _ in 0..k {
                coeffs.push(elems[rest % n].clone());
                rest /= n;
            }
            coeffs.push(Scalar::one(field));
            let cand = UniPoly::new(field, coeffs);
            if is_irreducible(&cand)? {
                return Ok(cand);
            }
        }
        unreachable!("irreducible polynomials of every degree exist over finite fields");
    }
    let mut rng = ChaCha8Rng::seed_from_u64(DEFAULT_SEED);
    loop {
        let mut coeffs: Vec<Scalar> = (0..k).map(|_| Scalar::random(field, &mut rng)).collect();
        coeffs.push(Scalar::one(field));
        let cand = UniPoly::new(field, coeffs);
        if is_irreducible(&cand)? {
            return Ok(cand);
        }
    }
}

/// Smallest tower over `field`, built one irreducible factor at a time, in
/// which every polynomial of `polys` splits into linear factors.
pub fn splitting_field(field: &Field, polys: &[UniPoly], max_degree: usize, seed: u64) -> Result<Field> {
    let mut current = field.clone();
    'outer: loop {
        for p in polys {
            if p.is_zero() {
                continue;
            }
            let p = p.lift(&current)?;
            let fac = uni_factor_seeded(&p, seed)?;
            if let Some((g, _)) = fac.factors.iter().find(|(g, _)| g.degree() != Some(1)) {
                if current.is_rationals() {
                    return Err(Error::NonRationalPoint(format!(
                        "{} has the irreducible factor {} over Q",
                        p, g
                    )));
                }
                let deg = g.degree().expect("nonzero");
                if current.absolute_degree() * deg > max_degree {
                    return Err(Error::ExtensionTooLarge(max_degree));
                }
                current = Field::extension_trusted(&current, g);
                continue 'outer;
            }
        }
        return Ok(current);
    }
}

/// Yun's squarefree decomposition in characteristic 0; input monic.
fn yun(f: &UniPoly) -> Vec<(UniPoly, usize)> {
    let mut out = Vec::new();
    if f.is_constant() {
        return out;
    }
    let df = f.derivative();
    let a0 = f.gcd(&df);
    let mut b = f.exact_div(&a0);
    let mut c = df.exact_div(&a0);
    let mut d = &c - &b.derivative();
    let mut i = 1;
    while !b.is_constant() {
        let a = b.gcd(&d);
        b = b.exact_div(&a);
        c = d.exact_div(&a);
        d = &c - &b.derivative();
        if !a.is_constant() {
            out.push((a, i));
        }
        i += 1;
    }
    out
}

/// Squarefree decomposition over a finite field; input monic.
fn squarefree_finite(f: &UniPoly) -> Vec<(UniPoly, usize)> {
    let mut out = Vec::new();
    if f.is_constant() {
        return out;
    }
    let p = f.field().characteristic() as usize;
    let mut c = f.gcd(&f.derivative());
    let mut w = f.exact_div(&c);
    let mut i = 1;
    while !w.is_constant() {
        let y = w.gcd(&c);
        let fac = w.exact_div(&y);
        if !fac.is_constant() {
            out.push((fac, i));
        }
        w = y;
        c = c.exact_div(&w);
        i += 1;
    }
    if !c.is_constant() {
        let root = pth_root_poly(&c, p);
        for (g, m) in squarefree_finite(&root) {
            out.push((g, m * p));
        }
    }
    // merge equal parts produced by the two passes
    let mut merged: Vec<(UniPoly, usize)> = Vec::new();
    for (g, m) in out {
        if let Some(entry) = merged.iter_mut().find(|(h, _)| *h == g) {
            entry.1 += m;
        } else {
            merged.push((g, m));
        }
    }
    merged
}

fn pth_root_poly(f: &UniPoly, p: usize) -> UniPoly {
    let coeffs = f
        .coeffs()
        .iter()
        .step_by(p)
        .map(Scalar::pth_root)
        .collect();
    UniPoly::new(f.field(), coeffs)
}

/// Splits a monic squarefree polynomial into products of irreducibles of
/// equal degree: returns (product, degree) pairs.
fn distinct_degree(f: &UniPoly) -> Vec<(UniPoly, usize)> {
    let field = f.field().clone();
    let q = field.cardinality().expect("finite field");
    let t = UniPoly::t(&field);
    let mut out = Vec::new();
    let mut rest = f.clone();
    let mut h = t.clone();
    let mut i = 1;
    while rest.degree().unwrap_or(0) >= 2 * i {
        h = h.powmod(&q, &rest);
        let g = rest.gcd(&(&h - &t));
        if !g.is_one() {
            rest = rest.exact_div(&g);
            h = h.rem(&rest);
            out.push((g, i));
        }
        i += 1;
    }
    if !rest.is_constant() {
        let d = rest.degree().expect("nonzero");
        out.push((rest, d));
    }
    out
}

fn equal_degree(f: &UniPoly, d: usize, rng: &mut ChaCha8Rng) -> Vec<UniPoly> {
    let n = f.degree().expect("nonzero");
    if n == d {
        return vec![f.clone()];
    }
    let field = f.field().clone();
    let q = field.cardinality().expect("finite field");
    let odd = field.characteristic() != 2;
    let exponent = if odd {
        (q.pow(d as u32) - BigUint::one()) >> 1
    } else {
        BigUint::zero()
    };
    loop {
        let a = UniPoly::new(&field, (0..n).map(|_| Scalar::random(&field, rng)).collect());
        if a.is_constant() {
            continue;
        }
        let g = a.gcd(f);
        if !g.is_one() && g.degree() != f.degree() {
            return split_pair(f, &g, d, rng);
        }
        let b = if odd {
            &a.powmod(&exponent, f) - &UniPoly::one(&field)
        } else {
            let k = field.absolute_degree() * d;
            let mut acc = a.rem(f);
            let mut term = acc.clone();
            for _ in 1..k {
                term = (&term * &term).rem(f);
                acc = &acc + &term;
            }
            acc
        };
        let g = b.gcd(f);
        if !g.is_one() && g.degree() != f.degree() && !g.is_zero() {
            return split_pair(f, &g, d, rng);
        }
    }
}

fn split_pair(f: &UniPoly, g: &UniPoly, d: usize, rng: &mut ChaCha8Rng) -> Vec<UniPoly> {
    let h = f.exact_div(g);
    let mut out = equal_degree(g, d, rng);
    out.extend(equal_degree(&h, d, rng));
    out
}

fn integer_divisors(n: &BigInt) -> Result<Vec<BigInt>> {
    let m = n.abs().to_u64().ok_or_else(|| Error::CoefficientTooLarge(n.to_string()))?;
    Ok(divisors_u64(m).into_iter().map(BigInt::from).collect())
}

/// Distinct rational roots of a squarefree polynomial over Q, ascending.
fn rational_roots(f: &UniPoly) -> Result<Vec<Scalar>> {
    let field = f.field().clone();
    let mut roots = Vec::new();
    let mut coeffs: Vec<BigRational> = f
        .coeffs()
        .iter()
        .map(|c| c.as_rational().expect("rational coefficients").clone())
        .collect();
    if coeffs.is_empty() {
        return Ok(roots);
    }
    let low = coeffs.iter().position(|c| !c.is_zero()).expect("nonzero");
    if low > 0 {
        roots.push(Scalar::zero(&field));
        coeffs.drain(..low);
    }
    if coeffs.len() <= 1 {
        return Ok(roots);
    }
    let lcm = coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = coeffs.iter().map(|c| (c * BigRational::from_integer(lcm.clone())).to_integer()).collect();
    let nums = integer_divisors(&ints[0])?;
    let dens = integer_divisors(ints.last().expect("nonempty"))?;
    let poly = UniPoly::new(&field, coeffs.iter().map(|c| Scalar::from_rational(&field, c).expect("Q")).collect());
    let mut seen: Vec<BigRational> = Vec::new();
    for n in &nums {
        for d in &dens {
            for sign in [1, -1] {
                let cand = BigRational::new(n * sign, d.clone());
                if seen.contains(&cand) {
                    continue;
                }
                seen.push(cand.clone());
                let s = Scalar::from_rational(&field, &cand).expect("Q");
                if poly.eval(&s).is_zero() {
                    roots.push(s);
                }
            }
        }
    }
    roots.sort_by(|a, b| a.as_rational().cmp(&b.as_rational()));
    Ok(roots)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names(f: &Factorization) -> Vec<(String, usize)> {
        f.factors.iter().map(|(g, m)| (g.to_string(), *m)).collect()
    }

    #[test]
    fn difference_of_squares_over_q() {
        let q = Field::rationals();
        let f = UniPoly::from_ints(&q, &[-1, 0, 1]);
        let fac = uni_factor(&f).unwrap();
        assert_eq!(names(&fac), [("t+1".to_string(), 1), ("t-1".to_string(), 1)]);
        assert_eq!(fac.expand(), f);
    }

    // Brute-force root scans fix the expected splittings below.
    fn brute_roots(field: &Field, f: &UniPoly) -> Vec<String> {
        field
            .elements(1000)
            .unwrap()
            .into_iter()
            .filter(|a| f.eval(a).is_zero())
            .map(|a| a.to_string())
            .collect()
    }

    #[test]
    fn t2_plus_1_over_f5_and_f3() {
        let f5 = Field::prime(5).unwrap();
        let f = UniPoly::from_ints(&f5, &[1, 0, 1]);
        assert_eq!(brute_roots(&f5, &f), ["2", "3"]);
        let fac = uni_factor(&f).unwrap();
        assert_eq!(names(&fac), [("t+2".to_string(), 1), ("t+3".to_string(), 1)]);
        let r: Vec<String> = fac.roots().iter().map(|(a, _)| a.to_string()).collect();
        assert_eq!(r, ["3", "2"]);

        let f3 = Field::prime(3).unwrap();
        let g = UniPoly::from_ints(&f3, &[1, 0, 1]);
        assert!(brute_roots(&f3, &g).is_empty());
        assert_eq!(names(&uni_factor(&g).unwrap()), [("t^2+1".to_string(), 1)]);
    }

    #[test]
    fn inseparable_power_in_char_p() {
        let f3 = Field::prime(3).unwrap();
        // (t + 1)^3 (t^2 + 1) over F_3
        let f = &UniPoly::from_ints(&f3, &[1, 1]).pow(3) * &UniPoly::from_ints(&f3, &[1, 0, 1]);
        let fac = uni_factor(&f).unwrap();
        assert_eq!(names(&fac), [("t+1".to_string(), 3), ("t^2+1".to_string(), 1)]);
        assert_eq!(fac.expand(), f);
    }

    #[test]
    fn char_two_splitting() {
        let f2 = Field::prime(2).unwrap();
        let f4 = f2.with_degree(2).unwrap();
        // t^4 + t = t (t + 1)(t^2 + t + 1) splits completely over F_4
        let f = UniPoly::from_ints(&f4, &[0, 1, 0, 0, 1]);
        let fac = uni_factor(&f).unwrap();
        assert!(fac.splits());
        assert_eq!(fac.factors.len(), 4);
        assert_eq!(fac.expand(), f);
    }

    #[test]
    fn rational_residue_is_kept() {
        let q = Field::rationals();
        // (2t - 1)^2 (t^2 - 2)
        let f = &UniPoly::from_ints(&q, &[-1, 2]).pow(2) * &UniPoly::from_ints(&q, &[-2, 0, 1]);
        let fac = uni_factor(&f).unwrap();
        assert_eq!(names(&fac), [("t-1/2".to_string(), 2), ("t^2-2".to_string(), 1)]);
        assert_eq!(fac.expand(), f);
        assert!(!fac.splits());
    }

    #[test]
    fn splitting_field_of_quadratic_over_f3() {
        let f3 = Field::prime(3).unwrap();
        let f = UniPoly::from_ints(&f3, &[1, 0, 1]);
        let k = splitting_field(&f3, std::slice::from_ref(&f), 16, DEFAULT_SEED).unwrap();
        assert_eq!(k.absolute_degree(), 2);
        assert!(uni_factor(&f.lift(&k).unwrap()).unwrap().splits());
        let q = Field::rationals();
        let g = UniPoly::from_ints(&q, &[1, 0, 1]);
        assert!(matches!(splitting_field(&q, &[g], 16, DEFAULT_SEED), Err(Error::NonRationalPoint(_))));
    }

    #[test]
    fn extension_rejects_reducible_and_q() {
        let f5 = Field::prime(5).unwrap();
        let m = UniPoly::from_ints(&f5, &[1, 0, 1]);
        assert!(matches!(Field::extension(&f5, &m), Err(Error::ReducibleMinPoly(_))));
        let q = Field::rationals();
        let m = UniPoly::from_ints(&q, &[-2, 0, 1]);
        assert!(matches!(Field::extension(&q, &m), Err(Error::UnsupportedExtension(_))));
    }
}
