mod common;

use common::*;
use plane_curves::blowup::resolve_tree;
use plane_curves::invariants::{delta_invariant, intersection_multiplicity, intersection_oracle};
use plane_curves::noether::{bezout_check, certify, check_condition, verify_certificate, CertStatus};
use plane_curves::Limits;

#[test]
fn curve_sequences_and_deltas() {
    for case in curves() {
        let tree = resolve_tree(&case.poly, &Limits::default()).unwrap_or_else(|e| panic!("{}: {e}", case.name));
        assert!(tree.is_resolved(), "{}", case.name);
        let report = delta_invariant(&tree).unwrap();
        let seq: Vec<u32> = report.multiplicity_sequence.iter().map(|&(_, r)| r).collect();
        assert_eq!(seq, case.sequence, "{}", case.name);
        assert_eq!(report.delta, case.delta, "{}", case.name);
        assert_eq!(report.conductor_degree, 2 * case.delta, "{}", case.name);
    }
}

#[test]
fn pair_intersections_match_both_oracles() {
    for (k, f, g, expected) in pairs() {
        let report = intersection_multiplicity(&f, &g, &Limits::default())
            .unwrap_or_else(|e| panic!("{f} / {g} over {k}: {e}"));
        assert_eq!(report.noether_sum, expected, "{f} / {g}");
        assert_eq!(report.oracle_value, expected, "{f} / {g}");
        assert_eq!(reduction_oracle(&f, &g), expected, "{f} / {g}");
        assert!(report.agreement);
    }
}

#[test]
fn oracle_is_symmetric() {
    for (_, f, g, expected) in pairs() {
        assert_eq!(intersection_oracle(&g, &f).unwrap(), expected, "{g} / {f}");
        assert_eq!(reduction_oracle(&g, &f), expected);
    }
}

#[test]
fn triples_condition_and_certificates() {
    let lim = Limits::default();
    for (k, [f, g, h], expect_pass) in triples() {
        let report = check_condition(&f, &g, &h, &lim).unwrap_or_else(|e| panic!("{f}, {g}, {h} over {k}: {e}"));
        assert_eq!(report.passed, expect_pass, "{f}, {g}, {h} over {k}");
        let cert = certify(&f, &g, &h, &lim).unwrap();
        if report.passed {
            assert_eq!(cert.status, CertStatus::Solved, "{f}, {g}, {h}");
        }
        if cert.status == CertStatus::Solved {
            assert!(verify_certificate(&f, &g, &h, &cert), "{f}, {g}, {h}");
            assert!(cert.residual.is_zero());
        }
    }
}

#[test]
fn projective_pairs_satisfy_bezout() {
    for (k, f, g) in projective_pairs() {
        let report = bezout_check(&f, &g, &Limits::default()).unwrap_or_else(|e| panic!("{f} / {g} over {k}: {e}"));
        assert!(report.holds, "{f} / {g} over {k}: {} vs {}", report.total, report.expected);
        for p in &report.points {
            assert!(p.report.agreement, "{f} / {g} at {}", p.point);
        }
    }
}
