//! Plain-text rendering of reports.

use std::fmt::Write;

use crate::blowup::{AppendixOutcome, AppendixSequence, InfNearNode, InfNearTree, Termination};
use crate::invariants::{AdjointReport, GenusReport, IntersectionReport, SingularityReport};
use crate::noether::{BezoutReport, CertStatus, ConditionReport, NoetherCertificate};
use crate::polyring::{MultiPoly, Vars};

/// Same exponents, other variable names (`x, y` <-> `X, Y`).
pub(crate) fn rename(f: &MultiPoly, vars: Vars) -> MultiPoly {
    f.map_monomials(vars, |e| e)
}

fn node(n: &InfNearNode, indent: usize, out: &mut String) {
    let change = if n.coord_change.is_identity() { String::new() } else { format!("  [{}]", n.coord_change) };
    writeln!(out, "{:indent$}- depth {} r={} shift {}: {}{}", "", n.depth, n.r, n.shift, n.local_eq, change, indent = indent)
        .unwrap();
    for c in &n.children {
        node(c, indent + 2, out);
    }
}

pub(crate) fn tree(t: &InfNearTree) -> String {
    let status = match t.termination {
        Termination::Resolved => "resolved",
        Termination::DepthCapped => "depth cap reached",
    };
    let mut out = format!("field {}, {}\n", t.root.field, status);
    node(&t.root, 0, &mut out);
    out
}

fn sequence(report: &SingularityReport) -> String {
    let rs: Vec<String> = report.multiplicity_sequence.iter().map(|(_, r)| r.to_string()).collect();
    format!("[{}]", rs.join(","))
}

pub(crate) fn delta(report: &SingularityReport) -> String {
    format!("delta = {}, sequence = {}\n", report.delta, sequence(report))
}

pub(crate) fn genus(report: &GenusReport) -> String {
    let mut out = format!("genus = {}\n", report.genus);
    writeln!(out, "degree {}, arithmetic genus {}, total delta {}", report.degree, report.arithmetic_genus, report.total_delta)
        .unwrap();
    for s in &report.singularities {
        let at = s.point.as_ref().map_or(String::new(), |p| p.to_string());
        writeln!(out, "  {}: delta = {}, sequence = {}", at, s.delta, sequence(s)).unwrap();
    }
    out
}

pub(crate) fn intersection(report: &IntersectionReport) -> String {
    let mut out = format!("I = {}\n", report.noether_sum);
    for (depth, a, b) in &report.contributions {
        writeln!(out, "  depth {depth}: {a} * {b}").unwrap();
    }
    let verdict = if report.agreement { "agrees" } else { "DISAGREES" };
    writeln!(out, "resultant oracle = {} ({verdict})", report.oracle_value).unwrap();
    out
}

pub(crate) fn adjoint(report: &AdjointReport) -> String {
    let verdict = if report.adjoint { "holds" } else { "fails" };
    let mut out = format!("{}: {}\n", report.condition, verdict);
    for m in &report.margins {
        writeln!(out, "  depth {}: r(C) = {}, r(G) = {}, margin {}", m.depth, m.r_c, m.r_g, m.margin).unwrap();
    }
    out
}

pub(crate) fn condition(report: &ConditionReport) -> String {
    let mut out = format!("condition {}\n", if report.passed { "holds" } else { "fails" });
    for p in &report.points {
        writeln!(out, "{} (chart {:?}): {}", p.point, p.chart, if p.passed { "ok" } else { "fails" }).unwrap();
        for n in &p.nodes {
            writeln!(out, "  depth {}: r(F) = {}, r(G) = {}, r(H) = {}, margin {}", n.depth, n.r_f, n.r_g, n.r_h, n.margin)
                .unwrap();
        }
    }
    out
}

pub(crate) fn certificate(cert: &NoetherCertificate) -> String {
    match (&cert.status, &cert.a, &cert.b) {
        (CertStatus::Solved, Some(a), Some(b)) => format!("A = {a}\nB = {b}\nresidual = {}\n", cert.residual),
        (CertStatus::HypothesisFailed { point, depth }, _, _) => {
            format!("no solution; condition fails at {point}, depth {depth}\n")
        }
        _ => "no solution\n".to_string(),
    }
}

pub(crate) fn bezout(report: &BezoutReport) -> String {
    let mut out = format!("total = {}, deg F * deg G = {}\n", report.total, report.expected);
    for p in &report.points {
        writeln!(out, "  {}: {}", p.point, p.report.noether_sum).unwrap();
    }
    out
}

pub(crate) fn appendix(seq: &AppendixSequence) -> String {
    let mut out = String::from("i  a_i  F^(i)\n");
    for s in &seq.stages {
        let a = s.a.as_ref().map_or("-".to_string(), |a| a.to_string());
        writeln!(out, "{}  {}  {}", s.index, a, rename(&s.poly, Vars::Projective)).unwrap();
    }
    let phi = seq.phi().display_in("X");
    writeln!(out, "phi = {phi}").unwrap();
    match &seq.outcome {
        AppendixOutcome::Completed => out.push_str("status: completed\n"),
        AppendixOutcome::Smooth => out.push_str("status: smooth point, r = 1\n"),
        AppendixOutcome::HypothesisFailed { stage, reason } => {
            writeln!(out, "status: hypothesis fails at stage {stage} ({reason})").unwrap();
        }
    }
    out
}
