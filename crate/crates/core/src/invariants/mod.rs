//! Numbers read off trees of infinitely near points: delta invariants,
//! genus, adjoint conditions and local intersection multiplicities.

mod adjoint;
mod intersect;

pub use adjoint::{adjoint_check, AdjointReport, NodeMargin, ADJOINT_LABEL};
pub use intersect::{intersection_multiplicity, intersection_oracle, IntersectionReport};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::blowup::{resolve_tree, InfNearTree, Limits};
use crate::error::{Error, Result};
use crate::exactfield::{is_prime_u64, uni_factor_seeded, Field, Scalar, UniPoly};
use crate::polyring::elim::is_squarefree;
use crate::polyring::{dehomogenize, Chart, MultiPoly, ProjPoint, Vars};

#[derive(Debug, Clone, Serialize)]
pub struct SingularityReport {
    /// Filled in when the tree was built at a known projective point.
    pub point: Option<ProjPoint>,
    pub field: Field,
    /// `(depth, r)` for every node with `r ≥ 2`.
    pub multiplicity_sequence: Vec<(usize, u32)>,
    pub delta: u64,
    pub conductor_degree: u64,
}

/// `δ = Σ r(r−1)/2` over the nodes of a resolved tree.
pub fn delta_invariant(tree: &InfNearTree) -> Result<SingularityReport> {
    if !tree.is_resolved() {
        return Err(Error::UnresolvedTree);
    }
    let multiplicity_sequence = tree.multiplicity_sequence();
    let delta = multiplicity_sequence.iter().map(|&(_, r)| u64::from(r) * u64::from(r - 1) / 2).sum();
    Ok(SingularityReport {
        point: None,
        field: tree.root.field.clone(),
        multiplicity_sequence,
        delta,
        conductor_degree: 2 * delta,
    })
}

/// Options for [`genus`].
#[derive(Debug, Clone, Default)]
pub struct GenusOptions {
    /// Skip the partial irreducibility certificate.
    pub assume_irreducible: bool,
    pub limits: Limits,
}

#[derive(Debug, Clone, Serialize)]
pub struct GenusReport {
    pub degree: u32,
    pub arithmetic_genus: i64,
    pub singularities: Vec<SingularityReport>,
    pub total_delta: u64,
    pub genus: i64,
}

/// `F` restricted to the line `X = c·Z` (when `axis` is 0) or `Y = c·Z`,
/// as a polynomial in the remaining affine variable.
fn line_fiber(f: &MultiPoly, axis: usize, c: &Scalar) -> UniPoly {
    let affine = dehomogenize(f, Chart::Z).expect("homogeneous");
    let other = 1 - axis;
    let field = Field::common(affine.field(), c.field()).expect("tower");
    let mut coeffs = Vec::new();
    for (m, coeff) in affine.terms() {
        let k = m.0[other] as usize;
        if coeffs.len() <= k {
            coeffs.resize(k + 1, Scalar::zero(&field));
        }
        let v = coeff * &c.pow(u64::from(m.0[axis]));
        coeffs[k] = &coeffs[k] + &v;
    }
    UniPoly::new(&field, coeffs)
}

/// A rational polynomial whose reduction modulo some prime not dividing the
/// leading coefficient stays irreducible of the same degree is irreducible.
fn irreducible_mod_small_prime(u: &UniPoly, seed: u64) -> Result<bool> {
    let Some(n) = u.degree() else { return Ok(false) };
    let denominators = u.coeffs().iter().filter_map(|c| c.as_rational()).map(|q| q.denom().clone());
    let scale = denominators.fold(BigInt::one(), |acc, d| acc.lcm(&d));
    let ints: Vec<BigInt> = u
        .coeffs()
        .iter()
        .map(|c| (c.as_rational().expect("rational") * &scale).to_integer())
        .collect();
    for p in (3u64..100).filter(|&p| is_prime_u64(p)) {
        if (&ints[n] % BigInt::from(p)).is_zero() {
            continue;
        }
        let fp = Field::prime(p)?;
        let reduced = UniPoly::new(&fp, ints.iter().map(|c| Scalar::from_bigint(&fp, c)).collect());
        let fac = uni_factor_seeded(&reduced, seed)?;
        if fac.factors.len() == 1 && fac.factors[0].1 == 1 && fac.factors[0].0.degree() == Some(n) {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Partial irreducibility certificate: `F` is irreducible when some line
/// section `F|L` is an irreducible polynomial of full degree, since a
/// factorization of `F` restricts to one of `F|L`.
fn certify_irreducible(f: &MultiPoly, seed: u64) -> Result<bool> {
    let n = f.total_degree().unwrap_or(0) as usize;
    if n <= 1 {
        return Ok(true);
    }
    for c in Scalar::small_integers(f.field(), 2 * n + 6) {
        for axis in 0..2 {
            let fiber = line_fiber(f, axis, &c);
            if fiber.degree() != Some(n) {
                continue;
            }
            if f.field().is_rationals() && n > 3 {
                if irreducible_mod_small_prime(&fiber, seed)? {
                    return Ok(true);
                }
                continue;
            }
            let fac = uni_factor_seeded(&fiber, seed)?;
            if fac.factors.len() == 1 && fac.factors[0].1 == 1 {
                if f.field().is_rationals() && fac.factors[0].0.degree() != Some(n) {
                    continue;
                }
                return Ok(true);
            }
        }
    }
    Ok(false)
}

/// `g = (n−1)(n−2)/2 − Σ δ_P` for a curve of degree `n` whose singular
/// points are exactly `singular_points`.
pub fn genus(f: &MultiPoly, singular_points: &[ProjPoint], opts: &GenusOptions) -> Result<GenusReport> {
    if f.vars() != Vars::Projective {
        return Err(Error::VariableMismatch("genus expects a homogeneous polynomial in X, Y, Z".into()));
    }
    if !f.is_homogeneous() {
        return Err(Error::NotHomogeneous);
    }
    let degree = f.total_degree().ok_or(Error::ZeroPolynomial)?;
    if degree == 0 {
        return Err(Error::Precondition("a nonzero constant defines no curve".into()));
    }
    if !is_squarefree(f) {
        return Err(Error::Reducible(format!("{f} has a repeated factor")));
    }
    if !opts.assume_irreducible && !certify_irreducible(f, opts.limits.seed)? {
        return Err(Error::IrreducibilityUnverified);
    }
    let mut singularities = Vec::new();
    for p in singular_points {
        let (local, _) = p.localize(f)?;
        let tree = resolve_tree(&local, &opts.limits)?;
        let mut report = delta_invariant(&tree)?;
        report.point = Some(p.clone());
        singularities.push(report);
    }
    let n = i64::from(degree);
    let arithmetic_genus = (n - 1) * (n - 2) / 2;
    let total_delta: u64 = singularities.iter().map(|s| s.delta).sum();
    let genus = arithmetic_genus - total_delta as i64;
    if genus < 0 {
        return Err(Error::NegativeGenus(genus));
    }
    Ok(GenusReport { degree, arithmetic_genus, singularities, total_delta, genus })
}
