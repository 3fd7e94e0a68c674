mod common;

use common::*;
use plane_curves::blowup::{blow_up_chart, resolve_tree, total_transform, InfNearNode};
use plane_curves::exactfield::{Field, Scalar};
use plane_curves::invariants::{delta_invariant, intersection_multiplicity};
use plane_curves::noether::af_bg_solutions;
use plane_curves::polyring::elim::{have_common_component, is_squarefree};
use plane_curves::polyring::{is_suitable, mult_at_origin, parse_poly, MultiPoly, Vars};
use plane_curves::Limits;
use proptest::prelude::*;

const FIELDS: [&str; 4] = ["q", "p:5", "p:7", "p:3^2"];

fn scalar(k: &Field, a: i64, b: i64) -> Scalar {
    let base = Scalar::from_int(k, a);
    match k.generator() {
        Some(z) => &base + &(&z * &Scalar::from_int(k, b)),
        None => base,
    }
}

fn build(k: &Field, terms: &[(u32, u32, i64, i64)]) -> MultiPoly {
    terms.iter().fold(MultiPoly::zero(Vars::Affine, k), |acc, &(i, j, a, b)| {
        &acc + &MultiPoly::monomial(Vars::Affine, scalar(k, a, b), [i, j, 0])
    })
}

/// Terms of total degree between 1 and `hi`, so the curve passes the origin.
fn terms(hi: u32, n: usize) -> impl Strategy<Value = Vec<(u32, u32, i64, i64)>> {
    prop::collection::vec(
        (1..=hi).prop_flat_map(|d| (0..=d).prop_map(move |i| (i, d - i))).prop_flat_map(|(i, j)| {
            (Just(i), Just(j), -4i64..=4, -2i64..=2)
        }),
        1..=n,
    )
}

fn field_index() -> impl Strategy<Value = usize> {
    0..FIELDS.len()
}

fn child_bound_holds(n: &InfNearNode) -> bool {
    n.children.iter().map(|c| c.r).sum::<u32>() <= n.r && n.children.iter().all(child_bound_holds)
}

/// `(x, y) -> (x + a·y, y + b·x)` with `1 - a·b` invertible.
fn linear_change(f: &MultiPoly, a: i64, b: i64) -> MultiPoly {
    let k = f.field();
    let x = MultiPoly::var(Vars::Affine, k, 0);
    let y = MultiPoly::var(Vars::Affine, k, 1);
    let ca = MultiPoly::constant(Vars::Affine, Scalar::from_int(k, a));
    let cb = MultiPoly::constant(Vars::Affine, Scalar::from_int(k, b));
    f.compose(&[&x + &(&ca * &y), &y + &(&cb * &x)])
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 96, ..ProptestConfig::default() })]

    #[test]
    fn chart_and_derivative_identities(fi in field_index(), t in terms(6, 8)) {
        let k = field(FIELDS[fi]);
        let f = build(&k, &t);
        prop_assume!(!f.is_zero() && is_suitable(&f).unwrap());
        let r = mult_at_origin(&f).unwrap();
        let fp = blow_up_chart(&f).unwrap();
        prop_assert_eq!(total_transform(&f), &x_pow(&k, r) * &fp);
        prop_assert_eq!(substitute_chart(&f), total_transform(&f));
        let lhs = substitute_chart(&f.partial_derivative(1));
        prop_assert_eq!(lhs, &x_pow(&k, r - 1) * &fp.partial_derivative(1));
    }

    #[test]
    fn print_parse_round_trip(fi in field_index(), t in terms(6, 8)) {
        let k = field(FIELDS[fi]);
        let f = build(&k, &t);
        prop_assert_eq!(parse_poly(&f.to_string(), &k).unwrap(), f);
    }

    #[test]
    fn children_never_exceed_parent(fi in 1usize..FIELDS.len(), t in terms(4, 6)) {
        let k = field(FIELDS[fi]);
        let f = build(&k, &t);
        prop_assume!(!f.is_zero() && is_squarefree(&f));
        let tree = resolve_tree(&f, &Limits::default()).unwrap();
        prop_assert!(tree.is_resolved());
        prop_assert!(child_bound_holds(&tree.root));
    }

    #[test]
    fn tree_sum_matches_reduction_oracle(fi in 1usize..FIELDS.len(), s in terms(3, 4), u in terms(3, 4)) {
        let k = field(FIELDS[fi]);
        let (f, g) = (build(&k, &s), build(&k, &u));
        prop_assume!(!f.is_zero() && !g.is_zero() && !have_common_component(&f, &g));
        let report = intersection_multiplicity(&f, &g, &Limits::default()).unwrap();
        prop_assert!(report.agreement);
        prop_assert_eq!(report.noether_sum, reduction_oracle(&f, &g));
        let (rf, rg) = (mult_at_origin(&f).unwrap() as u64, mult_at_origin(&g).unwrap() as u64);
        prop_assert!(report.noether_sum >= rf * rg);
        let shared_deeper = report.contributions.iter().any(|&(d, _, _)| d >= 1);
        prop_assert_eq!(report.noether_sum == rf * rg, !shared_deeper);
    }

    #[test]
    fn intersection_is_additive(fi in 1usize..FIELDS.len(), s in terms(3, 3), u in terms(2, 3), v in terms(2, 3)) {
        let k = field(FIELDS[fi]);
        let (c, d1, d2) = (build(&k, &s), build(&k, &u), build(&k, &v));
        prop_assume!(!c.is_zero() && !d1.is_zero() && !d2.is_zero());
        prop_assume!(!have_common_component(&c, &d1) && !have_common_component(&c, &d2));
        let lim = Limits::default();
        let i = |g: &MultiPoly| intersection_multiplicity(&c, g, &lim).unwrap().noether_sum;
        prop_assert_eq!(i(&(&d1 * &d2)), i(&d1) + i(&d2));
    }

    #[test]
    fn linear_changes_preserve_invariants(fi in 1usize..FIELDS.len(), s in terms(3, 4), u in terms(3, 4), a in -3i64..=3, b in -3i64..=3) {
        let k = field(FIELDS[fi]);
        prop_assume!(!Scalar::from_int(&k, 1 - a * b).is_zero());
        let (f, g) = (build(&k, &s), build(&k, &u));
        prop_assume!(!f.is_zero() && !g.is_zero() && !have_common_component(&f, &g));
        let lim = Limits::default();
        let before = intersection_multiplicity(&f, &g, &lim).unwrap().noether_sum;
        let (f2, g2) = (linear_change(&f, a, b), linear_change(&g, a, b));
        prop_assert_eq!(intersection_multiplicity(&f2, &g2, &lim).unwrap().noether_sum, before);
        if is_squarefree(&f) {
            let d = |p: &MultiPoly| delta_invariant(&resolve_tree(p, &lim).unwrap()).unwrap().delta;
            prop_assert_eq!(d(&f2), d(&f));
        }
    }

    #[test]
    fn unibranch_delta(a in 2u32..=5, b in 2u32..=9) {
        prop_assume!(num_gcd(a, b) == 1);
        let f = poly(&format!("y^{a} - x^{b}"), &q());
        let report = delta_invariant(&resolve_tree(&f, &Limits::default()).unwrap()).unwrap();
        prop_assert_eq!(report.delta, ((a - 1) * (b - 1) / 2) as u64);
    }
}

fn num_gcd(a: u32, b: u32) -> u32 {
    if b == 0 { a } else { num_gcd(b, a % b) }
}

fn homogeneous_terms(d: u32, n: usize) -> impl Strategy<Value = Vec<(u32, u32, i64)>> {
    prop::collection::vec(
        (0..=d).prop_flat_map(move |i| (Just(i), 0..=d - i, -3i64..=3)),
        1..=n,
    )
}

fn build_projective(k: &Field, d: u32, t: &[(u32, u32, i64)]) -> MultiPoly {
    t.iter().fold(MultiPoly::zero(Vars::Projective, k), |acc, &(i, j, c)| {
        &acc + &MultiPoly::monomial(Vars::Projective, Scalar::from_int(k, c), [i, j, d - i - j])
    })
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, ..ProptestConfig::default() })]

    #[test]
    fn solutions_differ_by_syzygies(
        p in prop::sample::select(vec![5u64, 7, 11]),
        ft in homogeneous_terms(2, 4),
        gt in homogeneous_terms(2, 4),
        at in homogeneous_terms(1, 3),
        bt in homogeneous_terms(1, 3),
    ) {
        let k = Field::prime(p).unwrap();
        let (f, g) = (build_projective(&k, 2, &ft), build_projective(&k, 2, &gt));
        prop_assume!(!f.is_zero() && !g.is_zero() && !have_common_component(&f, &g));
        let (a0, b0) = (build_projective(&k, 1, &at), build_projective(&k, 1, &bt));
        let h = &(&a0 * &f) + &(&b0 * &g);
        prop_assume!(!h.is_zero());
        let ((a, b), kernel) = af_bg_solutions(&f, &g, &h).unwrap().expect("h is in the ideal");
        prop_assert_eq!(&(&a * &f) + &(&b * &g), h.clone());
        let (da, db) = (&a - &a0, &b - &b0);
        prop_assert_eq!(&da * &f, -&(&db * &g));
        for (ka, kb) in &kernel {
            prop_assert!((&(ka * &f) + &(kb * &g)).is_zero());
        }
    }
}
