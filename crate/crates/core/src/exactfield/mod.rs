//! Exact arithmetic over Q, prime fields and finite extension towers, with
//! univariate factorization.

pub(crate) mod arith;
pub(crate) mod dense;
mod factor;
mod field;
mod scalar;
mod unipoly;

pub use arith::is_prime_u64;
pub use factor::{
    find_irreducible, is_irreducible, roots, splitting_field, uni_factor, uni_factor_seeded,
    Factorization, DEFAULT_SEED,
};
pub use field::Field;
pub use scalar::{scalar_arith, ArithOp, Scalar};
pub use unipoly::UniPoly;

/// Adjoins a root of the irreducible `m` to `base`.
pub fn extend_field(base: &Field, m: &UniPoly) -> crate::Result<Field> {
    Field::extension(base, m)
}
