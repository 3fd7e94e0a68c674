//! Command-line front end. `main` only forwards `std::env::args` to
//! [`execute`]; everything else is testable here.

mod render;

use clap::{Args, Parser, Subcommand};

use crate::blowup::{appendix_sequence, resolve_tree, tree_to_dot, Limits};
use crate::error::{Error, Result};
use crate::exactfield::{Field, Scalar, DEFAULT_SEED};
use crate::invariants::{adjoint_check, delta_invariant, intersection_multiplicity, GenusOptions};
use crate::noether::{bezout_check, check_condition, curve_genus, solve_af_bg, CertStatus};
use crate::polyring::{homogenize, parse_poly, translate, MultiPoly, Vars};

#[derive(Debug, Parser)]
#[command(name = "plane-curves", version, about = "Resolve plane curve singularities and certify AF+BG")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Args)]
struct Global {
    /// Coefficient field: q, p:<prime> or p:<prime>^<k>
    #[arg(long, global = true, default_value = "q")]
    field: String,
    /// Deepest neighborhood that may be blown up
    #[arg(long, global = true, default_value_t = 64)]
    max_depth: usize,
    /// Seed for randomized factoring over finite fields
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Emit JSON instead of text
    #[arg(long, global = true)]
    json: bool,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Tree of infinitely near points of an affine curve
    Resolve {
        #[arg(allow_hyphen_values = true)]
        curve: String,
        /// Point to move to the origin first, as "a,b"
        #[arg(long)]
        at: Option<String>,
        /// Emit Graphviz instead of text
        #[arg(long)]
        dot: bool,
    },
    /// Delta invariant and multiplicity sequence
    Delta {
        #[arg(allow_hyphen_values = true)]
        curve: String,
        #[arg(long)]
        at: Option<String>,
    },
    /// Genus of a projective curve
    Genus {
        #[arg(allow_hyphen_values = true)]
        curve: String,
        #[arg(long)]
        assume_irreducible: bool,
    },
    /// Local intersection multiplicity, checked against a resultant
    Intersect {
        #[arg(allow_hyphen_values = true)]
        f: String,
        #[arg(allow_hyphen_values = true)]
        g: String,
        #[arg(long)]
        at: Option<String>,
    },
    /// Virtual adjoint condition of G along the resolution of C
    Adjoint {
        #[arg(allow_hyphen_values = true)]
        c: String,
        #[arg(allow_hyphen_values = true)]
        g: String,
        #[arg(long)]
        at: Option<String>,
    },
    /// Check r(H) >= r(F) + r(G) - 1 at all common and infinitely near points
    NoetherCheck {
        #[arg(allow_hyphen_values = true)]
        f: String,
        #[arg(allow_hyphen_values = true)]
        g: String,
        #[arg(allow_hyphen_values = true)]
        h: String,
    },
    /// Solve H = A*F + B*G exactly
    NoetherSolve {
        #[arg(allow_hyphen_values = true)]
        f: String,
        #[arg(allow_hyphen_values = true)]
        g: String,
        #[arg(allow_hyphen_values = true)]
        h: String,
    },
    /// Sum of local intersection numbers against deg F * deg G
    Bezout {
        #[arg(allow_hyphen_values = true)]
        f: String,
        #[arg(allow_hyphen_values = true)]
        g: String,
    },
    /// Stages of the tangent-straightening recursion
    Appendix {
        #[arg(allow_hyphen_values = true)]
        curve: String,
        stages: usize,
    },
}

/// A validated command line.
#[derive(Debug, Clone)]
pub struct Invocation {
    pub command: Command,
    pub field: Field,
    pub limits: Limits,
    pub json: bool,
}

/// Text for stdout and stderr plus the exit status.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

fn invocation(cli: Cli) -> Result<Invocation> {
    let field = Field::parse_descriptor(&cli.global.field)
        .map_err(|e| Error::Usage(format!("--field {}: {e}", cli.global.field)))?;
    let limits = Limits { max_depth: cli.global.max_depth, seed: cli.global.seed, ..Limits::default() };
    Ok(Invocation { command: cli.command, field, limits, json: cli.global.json })
}

/// Parses an argument vector (program name first).
pub fn parse_args<I, T>(argv: I) -> Result<Invocation>
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = Cli::try_parse_from(argv).map_err(|e| Error::Usage(e.to_string()))?;
    invocation(cli)
}

/// Parses and runs; never panics on bad input.
pub fn execute<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    use clap::error::ErrorKind;
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            return Outcome { stdout: e.to_string(), stderr: String::new(), code: 0 };
        }
        Err(e) => return Outcome { stdout: String::new(), stderr: e.to_string(), code: 1 },
    };
    match invocation(cli) {
        Ok(inv) => match dispatch(&inv) {
            Ok((stdout, code)) => Outcome { stdout, stderr: String::new(), code },
            Err(e) => Outcome { stdout: String::new(), stderr: format!("error: {e}\n"), code: e.exit_code() },
        },
        Err(e) => Outcome { stdout: String::new(), stderr: format!("error: {e}\n"), code: e.exit_code() },
    }
}

/// Runs a parsed command: rendered output and exit status.
pub fn run(inv: &Invocation) -> (String, i32) {
    match dispatch(inv) {
        Ok(out) => out,
        Err(e) => (format!("error: {e}\n"), e.exit_code()),
    }
}

fn json<T: serde::Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

/// Affine curve; `X, Y` without `Z` are read as `x, y`.
fn affine(text: &str, field: &Field) -> Result<MultiPoly> {
    let f = parse_poly(text, field)?;
    match f.vars() {
        Vars::Affine => Ok(f),
        Vars::Projective if f.degree_in(2).unwrap_or(0) == 0 => Ok(render::rename(&f, Vars::Affine)),
        Vars::Projective => Err(Error::VariableMismatch(format!("'{text}' uses Z; this command expects x, y"))),
    }
}

/// Projective curve; affine input is homogenized with respect to `Z`.
fn projective(text: &str, field: &Field) -> Result<MultiPoly> {
    let f = parse_poly(text, field)?;
    match f.vars() {
        Vars::Projective => Ok(f),
        Vars::Affine => homogenize(&f, f.total_degree().unwrap_or(0)),
    }
}

fn recenter(f: MultiPoly, at: &Option<String>, field: &Field) -> Result<MultiPoly> {
    let Some(spec) = at else { return Ok(f) };
    let parts: Vec<&str> = spec.split(',').collect();
    let [a, b] = parts.as_slice() else {
        return Err(Error::Usage(format!("--at expects \"a,b\", got '{spec}'")));
    };
    let scalar = |s: &str| -> Result<Scalar> {
        let p = parse_poly(s, field)?;
        if !p.is_constant() {
            return Err(Error::Usage(format!("--at coordinate '{s}' is not a constant")));
        }
        Ok(p.constant_term())
    };
    translate(&f, &scalar(a)?, &scalar(b)?)
}

fn dispatch(inv: &Invocation) -> Result<(String, i32)> {
    let k = &inv.field;
    let lim = &inv.limits;
    match &inv.command {
        Command::Resolve { curve, at, dot } => {
            let f = recenter(affine(curve, k)?, at, k)?;
            let tree = resolve_tree(&f, lim)?;
            let code = if tree.is_resolved() { 0 } else { 4 };
            let text = if *dot {
                tree_to_dot(&tree)
            } else if inv.json {
                json(&tree)
            } else {
                render::tree(&tree)
            };
            Ok((text, code))
        }
        Command::Delta { curve, at } => {
            let f = recenter(affine(curve, k)?, at, k)?;
            let report = delta_invariant(&resolve_tree(&f, lim)?)?;
            Ok((if inv.json { json(&report) } else { render::delta(&report) }, 0))
        }
        Command::Genus { curve, assume_irreducible } => {
            let f = projective(curve, k)?;
            let opts = GenusOptions { assume_irreducible: *assume_irreducible, limits: lim.clone() };
            let report = curve_genus(&f, &opts)?;
            Ok((if inv.json { json(&report) } else { render::genus(&report) }, 0))
        }
        Command::Intersect { f, g, at } => {
            let f = recenter(affine(f, k)?, at, k)?;
            let g = recenter(affine(g, k)?, at, k)?;
            let report = intersection_multiplicity(&f, &g, lim)?;
            let code = if report.agreement { 0 } else { 5 };
            Ok((if inv.json { json(&report) } else { render::intersection(&report) }, code))
        }
        Command::Adjoint { c, g, at } => {
            let c = recenter(affine(c, k)?, at, k)?;
            let g = recenter(affine(g, k)?, at, k)?;
            let report = adjoint_check(&c, &g, lim)?;
            let code = if report.adjoint { 0 } else { 2 };
            Ok((if inv.json { json(&report) } else { render::adjoint(&report) }, code))
        }
        Command::NoetherCheck { f, g, h } => {
            let (f, g, h) = (projective(f, k)?, projective(g, k)?, projective(h, k)?);
            let report = check_condition(&f, &g, &h, lim)?;
            let code = if report.passed { 0 } else { 2 };
            Ok((if inv.json { json(&report) } else { render::condition(&report) }, code))
        }
        Command::NoetherSolve { f, g, h } => {
            let (f, g, h) = (projective(f, k)?, projective(g, k)?, projective(h, k)?);
            let cert = solve_af_bg(&f, &g, &h)?;
            let code = if cert.status == CertStatus::Solved { 0 } else { 2 };
            Ok((if inv.json { json(&cert) } else { render::certificate(&cert) }, code))
        }
        Command::Bezout { f, g } => {
            let (f, g) = (projective(f, k)?, projective(g, k)?);
            let report = bezout_check(&f, &g, lim)?;
            let code = if report.holds { 0 } else { 5 };
            Ok((if inv.json { json(&report) } else { render::bezout(&report) }, code))
        }
        Command::Appendix { curve, stages } => {
            let f = affine(curve, k)?;
            let seq = appendix_sequence(&f, *stages)?;
            // an early stop is a normal answer, not a failure
            Ok((if inv.json { json(&seq) } else { render::appendix(&seq) }, 0))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> Outcome {
        execute(std::iter::once("plane-curves").chain(args.iter().copied()))
    }

    #[test]
    fn parse_examples() {
        let inv = parse_args(["plane-curves", "resolve", "--field", "q", "y^2 - x^3"]).unwrap();
        assert!(inv.field.is_rationals());
        let inv = parse_args(["plane-curves", "intersect", "--field", "p:5", "y^2+x^2", "y"]).unwrap();
        assert_eq!(inv.field.to_string(), "F_5");
        assert!(matches!(parse_args(["plane-curves", "delta"]), Err(Error::Usage(_))));
        assert!(matches!(parse_args(["plane-curves", "delta", "--field", "p:6", "x"]), Err(Error::Usage(_))));
    }

    #[test]
    fn command_outputs() {
        let out = call(&["delta", "y^2 - x^4"]);
        assert_eq!((out.stdout.trim(), out.code), ("delta = 2, sequence = [2,2]", 0));
        let out = call(&["genus", "Y^2*Z - X^2*(X+Z)"]);
        assert!(out.stdout.starts_with("genus = 0"));
        let out = call(&["noether-solve", "X", "Y", "Z^2"]);
        assert_eq!(out.code, 2);
        assert!(out.stdout.contains("no solution"));
    }

    #[test]
    fn exit_codes() {
        assert_eq!(call(&["delta", "y^2 - 2x^2"]).code, 3);
        assert_eq!(call(&["delta", "--max-depth", "1", "y^2 - x^9"]).code, 4);
        assert_eq!(call(&["resolve", "--max-depth", "1", "y^2 - x^9"]).code, 4);
        assert_eq!(call(&["delta", "x^"]).code, 1);
        assert_eq!(call(&["delta", "(y-x^2)^2"]).code, 5);
        assert_eq!(call(&["--help"]).code, 0);
    }
}
