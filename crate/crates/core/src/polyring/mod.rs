//! Sparse bivariate and ternary polynomials with the local tools used at a
//! point of a plane curve.

mod coords;
pub mod elim;
mod local;
mod multipoly;
mod parse;
mod point;

pub use coords::{CoordChange, Step};
pub use local::{
    dehomogenize, dehomogenized_form, homogenize, homogenize_in, is_suitable, joint_shear,
    lowest_form, make_suitable, mult_at_origin, translate, Chart,
};
pub use multipoly::{Monomial, MultiPoly, Vars};
pub use parse::{parse_in, parse_poly};
pub use point::ProjPoint;

/// Formal partial derivative with respect to variable `var` (0 = x or X).
pub fn partial_derivative(f: &MultiPoly, var: usize) -> MultiPoly {
    f.partial_derivative(var)
}
