use std::sync::Arc;
use std::time::Instant;

use multiheight::elim::{self, groebner, MonomialOrder};
use multiheight::poly::{gcd, parse_poly, CoeffDomain, GroupKind, Ideal, MPoly, VarSpec};
use multiheight::resultants::{poisson_resultant, ZeroCycle};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Pow;
use proptest::prelude::*;

fn q(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

fn p(s: &str, spec: &Arc<VarSpec>) -> MPoly {
    parse_poly(s, spec).unwrap()
}

#[test]
fn lex_basis_of_two_curves() {
    let spec = VarSpec::build(&[("x", 1, GroupKind::Affine), ("y", 1, GroupKind::Affine)]).unwrap();
    let i = Ideal::new(&spec, vec![p("x^2 - 1", &spec), p("x*y - 1", &spec)]).unwrap();
    let gb = groebner(&i, &MonomialOrder::Lex).unwrap();
    let got: Vec<String> = gb.basis().iter().map(|g| g.to_string()).collect();
    assert_eq!(got, vec!["y^2 - 1", "x - y"]);
}

#[test]
fn elliptic_implicitization_timing() {
    let spec = VarSpec::build(&[("x", 2, GroupKind::Affine), ("t", 1, GroupKind::Parameter)]).unwrap();
    let v = Ideal::new(&spec, vec![p("(t+1)*x_0^3 + x_0^2 - x_1^2", &spec)]).unwrap();
    let qs = vec![p("x_0 + (t+1)*x_1 - 1", &spec), p("x_0*x_1 + (t-1)*x_1^2 + t", &spec)];
    let start = Instant::now();
    let e = elim::implicit_equation(&v, &qs).unwrap();
    eprintln!("elliptic: {} terms in {:?}", e.nterms(), start.elapsed());
    assert_eq!(e.nterms(), 138);
}

#[test]
fn eliminating_a_parameter() {
    let spec = VarSpec::build(&[("t", 1, GroupKind::Affine), ("x", 2, GroupKind::Affine)]).unwrap();
    let i = Ideal::new(&spec, vec![p("x_0 - t", &spec), p("x_1 - t^2", &spec)]).unwrap();
    let e = elim::eliminate(&i, &["t"]).unwrap();
    assert_eq!(e.gens().len(), 1);
    let g = &e.gens()[0];
    let want = parse_poly("x_1 - x_0^2", e.spec()).unwrap();
    assert!(g == &want || g == &-&want, "{g}");
    // dropping nothing keeps the ideal
    let same = elim::eliminate(&i, &[]).unwrap();
    let gb = groebner(&same, &MonomialOrder::Lex).unwrap();
    assert!(i.gens().iter().all(|f| gb.normal_form(f).is_zero()));
}

#[test]
fn parabola_by_elimination() {
    let spec = VarSpec::build(&[("x", 1, GroupKind::Affine), ("y", 1, GroupKind::Affine), ("z", 1, GroupKind::Affine)])
        .unwrap();
    let i = Ideal::new(&spec, vec![p("y - x", &spec), p("z - x^2", &spec)]).unwrap();
    let e = elim::eliminate(&i, &["x"]).unwrap();
    let gb = groebner(&e, &MonomialOrder::GradedLex).unwrap();
    assert!(gb.normal_form(&parse_poly("z - y^2", e.spec()).unwrap()).is_zero());
}

#[test]
fn normal_form_examples() {
    let spec = VarSpec::build(&[("x", 1, GroupKind::Affine)]).unwrap();
    let gb = groebner(&Ideal::new(&spec, vec![p("x - 1", &spec)]).unwrap(), &MonomialOrder::Lex).unwrap();
    assert_eq!(gb.basis(), &[p("x - 1", &spec).to_rational()]);
    assert_eq!(gb.normal_form(&p("x^2", &spec)).to_string(), "1");
}

#[test]
fn implicit_equation_of_graph() {
    let spec = VarSpec::build(&[("x", 1, GroupKind::Affine)]).unwrap();
    let e = elim::implicit_equation(&Ideal::zero(&spec), &[p("x", &spec), p("x^2", &spec)]).unwrap();
    let want = parse_poly("y_1 - y_0^2", e.spec()).unwrap();
    assert!(e == want || e == -&want, "{e}");
}

#[test]
fn implicit_equation_of_monomial_curves() {
    let spec = VarSpec::build(&[("x", 1, GroupKind::Affine)]).unwrap();
    for (d1, d2, h1, h2) in [(2u32, 3u32, 2i64, 3i64), (3, 4, 1, 5)] {
        let qs = [p(&format!("{h1}*x^{d1}"), &spec), p(&format!("{h2}*x^{d2}"), &spec)];
        let e = elim::implicit_equation(&Ideal::zero(&spec), &qs).unwrap();
        let c1 = BigInt::from(h2).pow(d1);
        let c2 = BigInt::from(h1).pow(d2);
        let want = parse_poly(&format!("{c1}*y_0^{d2} - {c2}*y_1^{d1}"), e.spec()).unwrap();
        assert!(e == want || e == -&want, "{e}");
    }
}

#[test]
fn implicit_equation_over_k_t() {
    // q_i = g_i x^{d_i} - 1 gives g2^d1 (y1+1)^d2 - g1^d2 (y2+1)^d1
    let spec = VarSpec::build(&[("x", 1, GroupKind::Affine), ("t", 1, GroupKind::Parameter)]).unwrap();
    let (g1, g2) = ("(t + 1)", "(t^2 - 2)");
    let qs = [p(&format!("{g1}*x^2 - 1"), &spec), p(&format!("{g2}*x^3 - 1"), &spec)];
    let e = elim::implicit_equation(&Ideal::zero(&spec), &qs).unwrap();
    let want = parse_poly(&format!("{g2}^2*(y_0 + 1)^3 - {g1}^3*(y_1 + 1)^2"), e.spec()).unwrap();
    assert!(e == want || e == -&want, "{e}");
}

#[test]
fn minimal_polynomial_worked_example() {
    let spec = VarSpec::build(&[("x", 1, GroupKind::Affine), ("z", 1, GroupKind::Auxiliary)]).unwrap();
    let qs = [p("z*x + x", &spec), p("z*(x - 1) + 2*x", &spec)];
    let e = elim::minimal_polynomial(&Ideal::zero(&spec), &qs, "z").unwrap();
    let want = parse_poly("z^2 + (1 + y_1 - y_0)*z + (y_1 - 2*y_0)", e.spec()).unwrap();
    assert_eq!(e, want);
}

#[test]
fn chow_form_of_the_line_is_a_determinant() {
    let spec = VarSpec::build(&[("x", 2, GroupKind::Projective)]).unwrap();
    let f = elim::chow_form(&Ideal::zero(&spec), 1).unwrap();
    let want = parse_poly("u0_0*u1_1 - u0_1*u1_0", f.spec()).unwrap();
    assert!(f == want || f == -&want, "{f}");
}

#[test]
fn chow_form_of_a_point() {
    let spec = VarSpec::build(&[("x", 3, GroupKind::Projective)]).unwrap();
    let i = Ideal::new(&spec, vec![p("x_1 - 2*x_0", &spec), p("x_2 + 3*x_0", &spec)]).unwrap();
    let f = elim::chow_form(&i, 0).unwrap();
    let want = parse_poly("u0_0 + 2*u0_1 - 3*u0_2", f.spec()).unwrap();
    assert!(f == want || f == -&want, "{f}");
}

#[test]
fn initial_forms() {
    let spec = VarSpec::build(&[("u", 2, GroupKind::Auxiliary)]).unwrap();
    let f = p("u_0^2 + 3*u_0*u_1 + u_1^3", &spec);
    // weight on u_1 keeps the u_1-free slice
    assert_eq!(elim::initial_form(&f, &[vec![0, 1]]).unwrap(), p("u_0^2", &spec));
    let free = p("u_0^3 - 2*u_0", &spec);
    assert_eq!(elim::initial_form(&free, &[vec![0, 1]]).unwrap(), free);
}

fn arb_dense(spec: Arc<VarSpec>) -> impl Strategy<Value = MPoly> {
    prop::collection::vec(((0u32..3, 0u32..3), -4i64..5), 1..5).prop_map(move |terms| {
        let mut acc = MPoly::zero(&spec, CoeffDomain::Integer);
        for ((a, b), c) in terms {
            acc = &acc + &parse_poly(&format!("{c}*u_0^{a}*u_1^{b}"), &spec).unwrap();
        }
        acc
    })
}

fn uu() -> Arc<VarSpec> {
    VarSpec::build(&[("u", 2, GroupKind::Auxiliary)]).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn initial_form_is_multiplicative(f in arb_dense(uu()), g in arb_dense(uu()), w0 in 0i64..3, w1 in 0i64..3) {
        prop_assume!(!f.is_zero() && !g.is_zero());
        let w = [vec![w0, w1], vec![1, 0]];
        let lhs = elim::initial_form(&(&f * &g), &w).unwrap();
        let rhs = &elim::initial_form(&f, &w).unwrap() * &elim::initial_form(&g, &w).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn normal_form_ignores_ideal_multiples(h in arb_dense(uu()), k in arb_dense(uu())) {
        let s = uu();
        let i = Ideal::new(&s, vec![parse_poly("u_0^2 - u_1", &s).unwrap(), parse_poly("u_0*u_1 - 1", &s).unwrap()]).unwrap();
        let gb = groebner(&i, &MonomialOrder::GradedLex).unwrap();
        let f = &(&i.gens()[0] * &k) + &(&i.gens()[1] * &h);
        prop_assert_eq!(gb.normal_form(&(&f + &h)), gb.normal_form(&h));
    }

    #[test]
    fn implicit_equation_vanishes_and_is_squarefree(a in 1i64..4, b in -3i64..4, d1 in 1u32..4, d2 in 1u32..4) {
        let spec = VarSpec::build(&[("x", 1, GroupKind::Affine)]).unwrap();
        let qs = [p(&format!("{a}*x^{d1} + x"), &spec), p(&format!("x^{d2} + ({b})"), &spec)];
        let e = elim::implicit_equation(&Ideal::zero(&spec), &qs).unwrap();
        let yg = e.spec().group_index("y").unwrap();
        let ys: Vec<usize> = e.spec().group_range(yg).collect();
        let binds: Vec<(usize, MPoly)> = ys.iter().zip(&qs).map(|(&v, q)| (v, q.clone())).collect();
        prop_assert!(e.substitute(&binds, &spec).unwrap().is_zero());
        for &v in &ys {
            let g = gcd(&e, &e.derivative(v));
            prop_assert!(g.is_constant(), "{}", g);
        }
    }

    #[test]
    fn chow_form_of_points_matches_poisson(pts in prop::collection::btree_set((-3i64..4, -3i64..4), 1..4)) {
        // points (1 : a : b) in P^2
        let spec = VarSpec::build(&[("x", 3, GroupKind::Projective)]).unwrap();
        let mut gens = vec![MPoly::one(&spec)];
        for &(a, b) in &pts {
            let lin = [p(&format!("x_1 - ({a})*x_0"), &spec), p(&format!("x_2 - ({b})*x_0"), &spec)];
            gens = gens.iter().flat_map(|g| lin.iter().map(move |l| g * l)).collect();
        }
        let v = Ideal::new(&spec, gens).unwrap();
        let f = elim::chow_form(&v, 0).unwrap();
        let cycle = ZeroCycle::new(
            &[2],
            pts.iter().map(|&(a, b)| (vec![vec![q(1), q(a), q(b)]], 1u32)).collect(),
        ).unwrap();
        let poisson = poisson_resultant(&cycle, &[1]).unwrap();
        // u_k of the general linear form is the coefficient of x_k
        let mut values = Vec::new();
        for (i, c) in [(2i64, 5i64, -1i64), (1, -2, 7), (3, 1, 4)].iter().enumerate() {
            let u = [q(c.0), q(c.1), q(c.2 + i as i64)];
            values.push((f.eval(&u), poisson.eval(&u)));
        }
        for (x, y) in &values[1..] {
            prop_assert_eq!(x * &values[0].1, y * &values[0].0);
        }
        prop_assert_eq!(f.total_degree(), Some(pts.len() as u32));
    }
}
