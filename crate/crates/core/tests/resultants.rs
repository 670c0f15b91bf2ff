use multiheight::poly::parse_poly;
use multiheight::resultants::*;
use multiheight::{GroupKind, Ideal, MPoly, VarSpec};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use proptest::prelude::*;
use std::sync::Arc;

fn q(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

#[test]
fn poisson_single_point() {
    let x = ZeroCycle::from_integers(&[1], &[(vec![vec![1, 2]], 1)]).unwrap();
    assert_eq!(poisson_resultant(&x, &[1]).unwrap().to_string(), "u_0 + 2*u_1");
}

#[test]
fn poisson_two_coordinate_points() {
    let x = ZeroCycle::from_integers(&[1], &[(vec![vec![1, 0]], 1), (vec![vec![0, 1]], 1)]).unwrap();
    assert_eq!(poisson_resultant(&x, &[1]).unwrap().to_string(), "u_0*u_1");
}

#[test]
fn poisson_degree_matches_cycle_degree() {
    let x = ZeroCycle::from_integers(
        &[1, 2],
        &[(vec![vec![1, 2], vec![3, 0, 1]], 2), (vec![vec![1, -1], vec![1, 1, 1]], 1)],
    )
    .unwrap();
    let r = poisson_resultant(&x, &[2, 1]).unwrap();
    assert_eq!(r.total_degree(), Some(3));
    assert!(r.is_homogeneous_in(&(0..r.spec().nvars()).collect::<Vec<_>>()).is_some());
    assert_eq!(r.content_and_primitive().unwrap().0, BigInt::from(1));
}

#[test]
fn zero_cycle_validation() {
    assert!(ZeroCycle::from_integers(&[1], &[(vec![vec![0, 0]], 1)]).is_err());
    assert!(ZeroCycle::from_integers(&[1], &[(vec![vec![1, 0]], 0)]).is_err());
    assert!(ZeroCycle::from_integers(&[2], &[(vec![vec![1, 0]], 1)]).is_err());
}

fn binary_spec() -> Arc<VarSpec> {
    VarSpec::build(&[("x", 2, GroupKind::Projective)]).unwrap()
}

#[test]
fn sylvester_of_linear_forms_symbolic() {
    let s = VarSpec::build(&[
        ("x", 2, GroupKind::Projective),
        ("a", 2, GroupKind::Auxiliary),
        ("b", 2, GroupKind::Auxiliary),
    ])
    .unwrap();
    let f = parse_poly("a_0*x_0 + a_1*x_1", &s).unwrap();
    let g = parse_poly("b_0*x_0 + b_1*x_1", &s).unwrap();
    let r = macaulay_resultant(&[f, g], 1).unwrap();
    assert_eq!(r.to_string(), "a_0*b_1 - a_1*b_0");
}

#[test]
fn coordinate_forms_have_unit_resultant() {
    let s = VarSpec::build(&[("x", 3, GroupKind::Projective)]).unwrap();
    let fs: Vec<MPoly> = ["x_0", "x_1", "x_2"].iter().map(|t| parse_poly(t, &s).unwrap()).collect();
    assert_eq!(macaulay_resultant_value(&fs, 0).unwrap(), q(1));
    let fs: Vec<MPoly> = ["x_0^2", "x_1^3", "x_2"].iter().map(|t| parse_poly(t, &s).unwrap()).collect();
    assert_eq!(macaulay_resultant_value(&fs, 0).unwrap(), q(1));
}

/// Sylvester determinant of two binary forms, computed independently.
fn sylvester(f: &[i64], g: &[i64]) -> BigRational {
    // coefficients by descending power of x_0
    let m = f.len() - 1;
    let n = g.len() - 1;
    let size = m + n;
    let mut mat = vec![vec![q(0); size]; size];
    for i in 0..n {
        for (j, &c) in f.iter().enumerate() {
            mat[i][i + j] = q(c);
        }
    }
    for i in 0..m {
        for (j, &c) in g.iter().enumerate() {
            mat[n + i][i + j] = q(c);
        }
    }
    det_rational(mat)
}

fn binary_form(s: &Arc<VarSpec>, c: &[i64]) -> MPoly {
    let d = c.len() - 1;
    let text: Vec<String> =
        c.iter().enumerate().map(|(k, v)| format!("({v})*x_0^{}*x_1^{}", d - k, k)).collect();
    parse_poly(&text.join(" + "), s).unwrap()
}

#[test]
fn singular_and_regular_plane_systems() {
    let s = VarSpec::build(&[("x", 3, GroupKind::Projective)]).unwrap();
    let p = |t: &str| parse_poly(t, &s).unwrap();
    // common zero (1:1:1)
    let sing = [p("x_0 - x_1"), p("x_1^2 - x_0*x_2"), p("x_2^2 - x_0*x_1 + x_1*x_2 - x_0^2")];
    assert_eq!(macaulay_resultant_value(&sing, 0).unwrap(), q(0));
    let reg = [p("x_0 + 2*x_1 + 3*x_2"), p("x_0^2 + x_1^2 - x_2^2"), p("x_0*x_1 - 5*x_2^2")];
    assert_ne!(macaulay_resultant_value(&reg, 0).unwrap(), q(0));
}

#[test]
fn linear_forms_in_plane_give_determinant() {
    let s = VarSpec::build(&[("x", 3, GroupKind::Projective)]).unwrap();
    let m = [[2, -1, 3], [1, 4, 0], [-2, 5, 7]];
    let fs: Vec<MPoly> = m
        .iter()
        .map(|r| parse_poly(&format!("{}*x_0 + {}*x_1 + {}*x_2", r[0], r[1], r[2]), &s).unwrap())
        .collect();
    let want = det_rational(m.iter().map(|r| r.iter().map(|&v| q(v)).collect()).collect());
    assert_eq!(macaulay_resultant_value(&fs, 0).unwrap(), want);
}

/// Brute force: does the system have a common zero in P² with small
/// integer coordinates?
fn has_small_zero(fs: &[MPoly]) -> bool {
    for a in -3i64..=3 {
        for b in -3i64..=3 {
            for c in -3i64..=3 {
                if a == 0 && b == 0 && c == 0 {
                    continue;
                }
                let pt = [q(a), q(b), q(c)];
                if fs.iter().all(|f| f.eval(&pt).is_zero()) {
                    return true;
                }
            }
        }
    }
    false
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn macaulay_matches_sylvester(f in prop::collection::vec(-6i64..7, 3..5), g in prop::collection::vec(-6i64..7, 2..4)) {
        prop_assume!(f[0] != 0 || *f.last().unwrap() != 0);
        prop_assume!(g[0] != 0 || *g.last().unwrap() != 0);
        let s = binary_spec();
        let r = macaulay_resultant_value(&[binary_form(&s, &f), binary_form(&s, &g)], 3).unwrap();
        prop_assert_eq!(r, sylvester(&f, &g));
    }

    #[test]
    fn macaulay_vanishes_on_forced_common_zero(
        a in prop::collection::vec(-3i64..4, 3), b in prop::collection::vec(-3i64..4, 3),
        pt in prop::collection::vec(-2i64..3, 3),
    ) {
        prop_assume!(pt.iter().any(|&v| v != 0));
        let s = VarSpec::build(&[("x", 3, GroupKind::Projective)]).unwrap();
        // forms through pt: f = l ∧ pt style combinations
        let cross = |u: &[i64]| -> String {
            let c = [u[1] * pt[2] - u[2] * pt[1], u[2] * pt[0] - u[0] * pt[2], u[0] * pt[1] - u[1] * pt[0]];
            format!("({})*x_0 + ({})*x_1 + ({})*x_2", c[0], c[1], c[2])
        };
        let f0 = parse_poly(&cross(&a), &s).unwrap();
        let f1 = parse_poly(&cross(&b), &s).unwrap();
        prop_assume!(!f0.is_zero() && !f1.is_zero());
        let f2 = &f0 * &f1 + parse_poly(&format!("({})*x_0 + ({})*x_1 + ({})*x_2", a[0], b[1], a[2]), &s).unwrap()
            * parse_poly(&cross(&[1, 2, 3]), &s).unwrap();
        prop_assume!(!f2.is_zero());
        let fs = [f0, f1, f2];
        prop_assert!(has_small_zero(&fs));
        prop_assert_eq!(macaulay_resultant_value(&fs, 5).unwrap(), q(0));
    }
}

#[test]
fn eliminant_of_bidegree_curve() {
    let s = VarSpec::build(&[("x", 2, GroupKind::Projective), ("y", 2, GroupKind::Projective)]).unwrap();
    let c = Ideal::new(&s, vec![parse_poly("x_0^2*y_1 - x_1^2*y_0", &s).unwrap()]).unwrap();
    let e = eliminant_with_multiplicity(&c, &[0, 2], 1).unwrap();
    assert_eq!(e.nu, 2);
    assert_eq!(normalize(&e.elim).to_string(), "u0_0*u1_1 - u0_1*u1_0");
    assert_eq!(e.res, e.elim.pow(2));
    assert_eq!(e.predicted_degrees, vec![BigInt::from(2), BigInt::from(2)]);
}

#[test]
fn eliminant_block_order_does_not_change_nu() {
    // the same curve with the groups swapped
    let s = VarSpec::build(&[("y", 2, GroupKind::Projective), ("x", 2, GroupKind::Projective)]).unwrap();
    let c = Ideal::new(&s, vec![parse_poly("x_0^2*y_1 - x_1^2*y_0", &s).unwrap()]).unwrap();
    assert_eq!(eliminant_with_multiplicity(&c, &[2, 0], 1).unwrap().nu, 2);
    let e = eliminant_with_multiplicity(&c, &[1, 1], 1).unwrap();
    let s2 = VarSpec::build(&[("x", 2, GroupKind::Projective), ("y", 2, GroupKind::Projective)]).unwrap();
    let c2 = Ideal::new(&s2, vec![parse_poly("x_0^2*y_1 - x_1^2*y_0", &s2).unwrap()]).unwrap();
    assert_eq!(eliminant_with_multiplicity(&c2, &[1, 1], 1).unwrap().nu, e.nu);
}

#[test]
fn projective_eliminants_are_reduced() {
    let s = VarSpec::build(&[("x", 3, GroupKind::Projective)]).unwrap();
    let conic = Ideal::new(&s, vec![parse_poly("x_0*x_2 - x_1^2 + x_0^2", &s).unwrap()]).unwrap();
    let e = eliminant_with_multiplicity(&conic, &[2], 4).unwrap();
    assert_eq!(e.nu, 1);
    let pt = Ideal::new(&s, vec![parse_poly("x_1 - 3*x_0", &s).unwrap(), parse_poly("x_2 + x_0", &s).unwrap()]).unwrap();
    let e = eliminant_with_multiplicity(&pt, &[1], 4).unwrap();
    assert_eq!(e.nu, 1);
    assert_eq!(normalize(&e.elim).to_string(), "u0_0 + 3*u0_1 - u0_2");
    assert!(matches!(
        eliminant_with_multiplicity(&pt, &[2], 4),
        Err(ResultantError::IndexLength { expected: 1, got: 2 })
    ));
}

#[test]
fn product_rule_for_points() {
    let a = ZeroCycle::from_integers(&[1], &[(vec![vec![1, 2]], 1)]).unwrap();
    let b = ZeroCycle::from_integers(&[1], &[(vec![vec![3, 5]], 1)]).unwrap();
    assert!(product_resultant_check(&a, &b, &[1], &[0], 0).unwrap());
    assert!(product_resultant_check(&a, &b, &[0], &[1], 0).unwrap());
    let two = ZeroCycle::from_integers(&[2], &[(vec![vec![1, 0, 2]], 1), (vec![vec![1, 1, 1]], 2)]).unwrap();
    assert!(product_resultant_check(&a, &two, &[1], &[0, 0].iter().map(|_| 0).collect::<Vec<_>>()[..1], 0).unwrap());
    assert!(product_resultant_check(&two, &a, &[1], &[0], 0).unwrap());
    // both blocks too long: the rule gives 1
    assert!(product_resultant_check(&a, &b, &[1], &[1], 0).unwrap());
}
