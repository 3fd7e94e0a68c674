//! Invertible affine coordinate changes of the plane, recorded step by step.

use std::fmt;

use super::{MultiPoly, Vars};
use crate::exactfield::Scalar;

/// One substitution applied to a polynomial `F(x, y)`.
#[derive(Clone, PartialEq, Eq)]
pub enum Step {
    /// `F(x + a, y + b)`
    Translate(Scalar, Scalar),
    /// `F(x + λy, y)`
    Shear(Scalar),
    /// `F(x, y + a·x)`: turns a tangent `y = a·x` into `y = 0`.
    Tilt(Scalar),
    /// `F(y, x)`
    SwapXY,
}

impl Step {
    pub fn apply(&self, f: &MultiPoly) -> MultiPoly {
        assert_eq!(f.vars(), Vars::Affine);
        let field = f.field();
        let x = MultiPoly::var(Vars::Affine, field, 0);
        let y = MultiPoly::var(Vars::Affine, field, 1);
        let images = match self {
            Step::Translate(a, b) => {
                if a.is_zero() && b.is_zero() {
                    return f.clone();
                }
                [&x + &MultiPoly::constant(Vars::Affine, a.clone()), &y + &MultiPoly::constant(Vars::Affine, b.clone())]
            }
            Step::Shear(l) => {
                if l.is_zero() {
                    return f.clone();
                }
                [&x + &y.scale(l), y]
            }
            Step::Tilt(a) => {
                if a.is_zero() {
                    return f.clone();
                }
                [x.clone(), &y + &x.scale(a)]
            }
            Step::SwapXY => [y, x],
        };
        f.compose(&images)
    }

    pub fn inverse(&self) -> Step {
        match self {
            Step::Translate(a, b) => Step::Translate(-a, -b),
            Step::Shear(l) => Step::Shear(-l),
            Step::Tilt(a) => Step::Tilt(-a),
            Step::SwapXY => Step::SwapXY,
        }
    }

    fn is_identity(&self) -> bool {
        match self {
            Step::Translate(a, b) => a.is_zero() && b.is_zero(),
            Step::Shear(l) | Step::Tilt(l) => l.is_zero(),
            Step::SwapXY => false,
        }
    }
}

impl fmt::Display for Step {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Step::Translate(a, b) => write!(f, "translate({a},{b})"),
            Step::Shear(l) => write!(f, "shear({l})"),
            Step::Tilt(a) => write!(f, "tilt({a})"),
            Step::SwapXY => write!(f, "swap"),
        }
    }
}

impl fmt::Debug for Step {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// A composition of steps, applied left to right.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct CoordChange {
    steps: Vec<Step>,
}

impl CoordChange {
    pub fn identity() -> CoordChange {
        CoordChange::default()
    }

    pub fn single(step: Step) -> CoordChange {
        let mut c = CoordChange::identity();
        c.push(step);
        c
    }

    /// Appends a step; identity steps are dropped.
    pub fn push(&mut self, step: Step) {
        if !step.is_identity() {
            self.steps.push(step);
        }
    }

    pub fn then(mut self, other: &CoordChange) -> CoordChange {
        for s in &other.steps {
            self.push(s.clone());
        }
        self
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn is_identity(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn apply(&self, f: &MultiPoly) -> MultiPoly {
        self.steps.iter().fold(f.clone(), |acc, s| s.apply(&acc))
    }

    pub fn inverse(&self) -> CoordChange {
        CoordChange { steps: self.steps.iter().rev().map(Step::inverse).collect() }
    }
}

impl fmt::Display for CoordChange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.steps.is_empty() {
            return write!(f, "identity");
        }
        let parts: Vec<String> = self.steps.iter().map(|s| s.to_string()).collect();
        write!(f, "{}", parts.join(" ; "))
    }
}

impl fmt::Debug for CoordChange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl serde::Serialize for CoordChange {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeSeq;
        let mut seq = s.serialize_seq(Some(self.steps.len()))?;
        for st in &self.steps {
            seq.serialize_element(&st.to_string())?;
        }
        seq.end()
    }
}
