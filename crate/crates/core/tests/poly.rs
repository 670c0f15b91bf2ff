use std::sync::Arc;

use multiheight::poly::{parse_poly, CoeffDomain, GroupKind, MPoly, VarSpec};
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

fn xy() -> Arc<VarSpec> {
    VarSpec::build(&[("x", 1, GroupKind::Affine), ("y", 1, GroupKind::Affine)]).unwrap()
}

fn p1p1() -> Arc<VarSpec> {
    VarSpec::build(&[("x1", 2, GroupKind::Projective), ("x2", 2, GroupKind::Projective)]).unwrap()
}

fn p(s: &str, spec: &Arc<VarSpec>) -> MPoly {
    parse_poly(s, spec).unwrap()
}

fn int(n: i64) -> BigInt {
    BigInt::from(n)
}

#[test]
fn addition_cancels() {
    let s = xy();
    assert_eq!(&p("x + 1", &s) + &p("x - 1", &s), p("2*x", &s));
    let f = p("3*x^2*y", &s);
    let sum = &f + &p("-3*x^2*y", &s);
    assert!(sum.is_zero());
    assert_eq!(sum.nterms(), 0);
    assert_eq!(&f + &MPoly::zero(&s, CoeffDomain::Integer), f);
}

#[test]
fn products() {
    let s = xy();
    assert_eq!(&p("x + 1", &s) * &p("x - 1", &s), p("x^2 - 1", &s));
    assert_eq!(&p("2*x + 3", &s) * &p("5*x + 7", &s), p("10*x^2 + 29*x + 21", &s));
    let f = p("x*y - 4", &s);
    assert_eq!(&f * &MPoly::one(&s), f);
}

#[test]
fn partial_degrees_of_a_bidegree_curve() {
    let s = p1p1();
    let f = p("x1_0^2*x2_1 - x1_1^2*x2_0", &s);
    assert_eq!(f.partial_degree("x1").unwrap(), Some(2));
    assert_eq!(f.partial_degree("x2").unwrap(), Some(1));
    assert_eq!(p("5", &s).partial_degree("x1").unwrap(), Some(0));
    assert_eq!(MPoly::zero(&s, CoeffDomain::Integer).partial_degree("x1").unwrap(), None);
}

#[test]
fn multidegrees() {
    let s = p1p1();
    let md = p("x1_0*x2_0 + x1_1*x2_1", &s).is_multihomogeneous().unwrap();
    assert_eq!((md.degrees, md.zero), (vec![1, 1], false));
    assert!(p("x1_0 + x1_0^2", &s).is_multihomogeneous().is_none());
    let md = MPoly::zero(&s, CoeffDomain::Integer).is_multihomogeneous().unwrap();
    assert_eq!((md.degrees, md.zero), (vec![0, 0], true));
}

#[test]
fn substitution_examples() {
    let src = VarSpec::build(&[("y", 1, GroupKind::Affine)]).unwrap();
    let dst = VarSpec::build(&[("x", 1, GroupKind::Affine)]).unwrap();
    let f = p("y^2", &src);
    assert_eq!(f.substitute(&[(0, p("x + 1", &dst))], &dst).unwrap(), p("x^2 + 2*x + 1", &dst));
    let g = p("y^3 - 2*y", &src);
    assert_eq!(g.substitute(&[(0, p("y", &src))], &src).unwrap(), g);
}

#[test]
fn minimal_polynomial_vanishes_on_the_system() {
    let e_spec = VarSpec::build(&[("y", 2, GroupKind::Affine), ("z", 1, GroupKind::Affine)]).unwrap();
    let q_spec = VarSpec::build(&[("x", 1, GroupKind::Affine), ("z", 1, GroupKind::Affine)]).unwrap();
    let e = p("z^2 + (1 + y_1 - y_0)*z + (y_1 - 2*y_0)", &e_spec);
    let binds = vec![(0, p("z*x + x", &q_spec)), (1, p("z*(x - 1) + 2*x", &q_spec))];
    assert!(e.substitute(&binds, &q_spec).unwrap().is_zero());
}

#[test]
fn content_and_sign() {
    let s = xy();
    let (c, prim) = p("6*x + 4*y", &s).content_and_primitive().unwrap();
    assert_eq!((c, prim), (int(2), p("3*x + 2*y", &s)));
    let (c, prim) = p("-5", &s).content_and_primitive().unwrap();
    assert_eq!((c, prim), (int(5), p("1", &s)));
}

#[test]
fn coefficient_extraction() {
    let s = VarSpec::build(&[("u", 1, GroupKind::Auxiliary), ("x", 1, GroupKind::Affine), ("y", 1, GroupKind::Affine)])
        .unwrap();
    let f = p("u*x + u^2*y + 3", &s);
    // the extracted group is dropped from the variable spec
    assert_eq!(f.coefficient_extract("u", &[1]).unwrap().to_string(), "x");
    assert_eq!(f.coefficient_extract("u", &[0]).unwrap().to_string(), "3");
}

#[test]
fn parser_rejects_implicit_multiplication() {
    let s = xy();
    assert!(parse_poly("x y", &s).is_err());
    assert!(parse_poly("x^2 - 5", &s).is_ok());
    assert!(parse_poly("w + 1", &s).is_err());
}

fn arb_poly(spec: Arc<VarSpec>, coeff: i64) -> impl Strategy<Value = MPoly> {
    let n = spec.nvars();
    prop::collection::vec((prop::collection::vec(0u32..3, n), -coeff..=coeff), 0..6).prop_map(move |terms| {
        let terms: Vec<(Vec<u32>, BigRational)> = terms.into_iter().map(|(e, c)| (e, BigRational::from_integer(BigInt::from(c)))).collect();
        MPoly::from_terms(&spec, CoeffDomain::Integer, terms).unwrap()
    })
}

fn three() -> Arc<VarSpec> {
    VarSpec::build(&[("x", 2, GroupKind::Affine), ("t", 1, GroupKind::Parameter)]).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn ring_axioms(f in arb_poly(three(), 9), g in arb_poly(three(), 9), h in arb_poly(three(), 9)) {
        prop_assert_eq!(&(&f + &g) + &h, &f + &(&g + &h));
        prop_assert_eq!(&(&f * &g) * &h, &f * &(&g * &h));
        prop_assert_eq!(&f * &(&g + &h), &(&f * &g) + &(&f * &h));
        prop_assert_eq!(&f * &g, &g * &f);
        prop_assert_eq!(&f + &g, &g + &f);
        prop_assert!((&f - &f).is_zero());
    }

    #[test]
    fn group_degrees_add(f in arb_poly(three(), 9), g in arb_poly(three(), 9)) {
        prop_assume!(!f.is_zero() && !g.is_zero());
        let fg = &f * &g;
        for group in ["x", "t"] {
            let a = f.partial_degree(group).unwrap().unwrap();
            let b = g.partial_degree(group).unwrap().unwrap();
            prop_assert_eq!(fg.partial_degree(group).unwrap().unwrap(), a + b);
        }
    }

    #[test]
    fn gauss_content(f in arb_poly(three(), 20), g in arb_poly(three(), 20)) {
        prop_assume!(!f.is_zero() && !g.is_zero());
        let (cf, _) = f.content_and_primitive().unwrap();
        let (cg, _) = g.content_and_primitive().unwrap();
        let (cfg, _) = (&f * &g).content_and_primitive().unwrap();
        prop_assert_eq!(cfg, cf * cg);
    }

    #[test]
    fn print_parse_round_trip(f in arb_poly(three(), 50)) {
        let spec = three();
        let text = f.to_string();
        prop_assert_eq!(parse_poly(&text, &spec).unwrap(), f);
    }

    #[test]
    fn substitution_composes(
        f in arb_poly(xy(), 5),
        s1 in arb_poly(xy(), 3),
        s2 in arb_poly(xy(), 3),
        t1 in arb_poly(xy(), 3),
    ) {
        // σ: x ↦ s1, y ↦ s2 then τ: x ↦ t1
        let spec = xy();
        let sigma = vec![(0, s1.clone()), (1, s2.clone())];
        let tau = vec![(0, t1.clone())];
        let lhs = f.substitute(&sigma, &spec).unwrap().substitute(&tau, &spec).unwrap();
        let composed = vec![
            (0, s1.substitute(&tau, &spec).unwrap()),
            (1, s2.substitute(&tau, &spec).unwrap()),
        ];
        prop_assert_eq!(lhs, f.substitute(&composed, &spec).unwrap());
    }
}
