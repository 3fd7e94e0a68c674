//! The recursion for a curve whose lowest form is a pure power `c·y^r`:
//! blow up, read off the single tangent slope `a_i`, and straighten it, so
//! that `F⁽ⁱ⁻¹⁾(x, x·y) = x^r · F⁽ⁱ⁾(x, y − a_i·x)`.

use serde::Serialize;

use super::chart::strict_transform;
use crate::error::{Error, Result};
use crate::exactfield::{uni_factor, Scalar, UniPoly};
use crate::polyring::{dehomogenized_form, lowest_form, mult_at_origin, MultiPoly, Step};

#[derive(Debug, Clone, Serialize)]
pub struct AppendixStage {
    pub index: usize,
    pub poly: MultiPoly,
    /// `None` for the first stage.
    pub a: Option<Scalar>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum AppendixOutcome {
    /// All requested stages were produced.
    Completed,
    /// The curve is smooth at the origin (`r = 1`).
    Smooth,
    /// Stage `stage` no longer has a single point of multiplicity `r` with a
    /// single tangent.
    HypothesisFailed { stage: usize, reason: String },
}

#[derive(Debug, Clone, Serialize)]
pub struct AppendixSequence {
    pub r: u32,
    pub stages: Vec<AppendixStage>,
    pub outcome: AppendixOutcome,
}

impl AppendixSequence {
    /// `φ(x) = Σ a_i x^i` over the stages produced so far.
    pub fn phi(&self) -> UniPoly {
        let field = self.stages.last().expect("at least one stage").poly.field().clone();
        let mut coeffs = vec![Scalar::zero(&field); self.stages.len() + 1];
        for s in &self.stages {
            if let Some(a) = &s.a {
                coeffs[s.index] = a.lift(&field).expect("tower");
            }
        }
        UniPoly::new(&field, coeffs)
    }
}

fn single_tangent(g: &MultiPoly, r: u32) -> Result<Option<Scalar>> {
    let tangent = dehomogenized_form(&g.homogeneous_part(r));
    let fac = uni_factor(&tangent)?;
    Ok(match fac.factors.as_slice() {
        [(lin, m)] if *m == r as usize && lin.degree() == Some(1) => Some(-&lin.coeff(0)),
        _ => None,
    })
}

/// Stages `F⁽¹⁾ = F, …, F⁽ⁿ⁾`, stopping early when the hypothesis fails.
pub fn appendix_sequence(f: &MultiPoly, n: usize) -> Result<AppendixSequence> {
    let r = mult_at_origin(f)?;
    if r == 0 {
        return Err(Error::Precondition(format!("{f} does not vanish at the origin")));
    }
    let low = lowest_form(f)?;
    if low.num_terms() != 1 || low.coeff([0, r, 0]).is_zero() {
        return Err(Error::Precondition(format!("lowest form {low} is not a multiple of y^{r}")));
    }
    let mut stages = vec![AppendixStage { index: 1, poly: f.clone(), a: None }];
    if r == 1 {
        return Ok(AppendixSequence { r, stages, outcome: AppendixOutcome::Smooth });
    }
    for i in 2..=n {
        let prev = &stages.last().expect("nonempty").poly;
        let g = strict_transform(prev, r);
        let m = mult_at_origin(&g)?;
        let fail = |reason: String| AppendixOutcome::HypothesisFailed { stage: i, reason };
        if m != r {
            return Ok(AppendixSequence { r, stages, outcome: fail(format!("multiplicity drops to {m}")) });
        }
        let Some(a) = single_tangent(&g, r)? else {
            return Ok(AppendixSequence { r, stages, outcome: fail("tangent cone is not a single line".into()) });
        };
        let poly = Step::Tilt(a.clone()).apply(&g);
        stages.push(AppendixStage { index: i, poly, a: Some(a) });
    }
    Ok(AppendixSequence { r, stages, outcome: AppendixOutcome::Completed })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::blowup::chart::total_transform;
    use crate::exactfield::Field;
    use crate::polyring::parse_poly;

    fn p(s: &str) -> MultiPoly {
        parse_poly(s, &Field::rationals()).unwrap()
    }

    #[test]
    fn tilted_a6_stages() {
        let seq = appendix_sequence(&p("y^2 + 2x^2y + x^4 + x^7"), 3).unwrap();
        assert_eq!(seq.outcome, AppendixOutcome::Completed);
        assert_eq!(seq.stages[1].poly, p("y^2 + x^5"));
        assert_eq!(seq.stages[1].a.as_ref().unwrap().to_string(), "-1");
        assert_eq!(seq.stages[2].poly, p("y^2 + x^3"));
        assert!(seq.stages[2].a.as_ref().unwrap().is_zero());
        assert_eq!(seq.phi().to_string(), "-t^2");
    }

    #[test]
    fn recursion_identity_holds() {
        let seq = appendix_sequence(&p("y^2 + 2x^2y + x^4 + x^7"), 3).unwrap();
        let x2 = p("x^2");
        for w in seq.stages.windows(2) {
            let a = w[1].a.clone().unwrap();
            let back = Step::Tilt(-&a).apply(&w[1].poly);
            assert_eq!(total_transform(&w[0].poly), &x2 * &back);
        }
    }

    #[test]
    fn early_stops() {
        let seq = appendix_sequence(&p("y^2 + x^3"), 3).unwrap();
        assert!(matches!(seq.outcome, AppendixOutcome::HypothesisFailed { stage: 2, .. }));
        assert_eq!(seq.stages.len(), 1);
        let seq = appendix_sequence(&p("y - x^2"), 3).unwrap();
        assert_eq!(seq.outcome, AppendixOutcome::Smooth);
        assert!(matches!(appendix_sequence(&p("y^2 - x^2"), 3), Err(Error::Precondition(_))));
    }
}
