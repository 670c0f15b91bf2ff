use multiheight::measures::*;
use multiheight::poly::parse_poly;
use multiheight::{GroupKind, MPoly, VarSpec};
use num_bigint::BigInt;
use proptest::prelude::*;
use std::sync::Arc;

fn aff(names: &[&str]) -> Arc<VarSpec> {
    let g: Vec<(&str, usize, GroupKind)> = names.iter().map(|n| (*n, 1, GroupKind::Affine)).collect();
    VarSpec::build(&g).unwrap()
}

fn with_t() -> Arc<VarSpec> {
    VarSpec::build(&[("x", 3, GroupKind::Projective), ("t", 1, GroupKind::Parameter)]).unwrap()
}

fn p(s: &Arc<VarSpec>, text: &str) -> MPoly {
    parse_poly(text, s).unwrap()
}

const TOL: f64 = 1e-8;

#[test]
fn height_inf_examples() {
    let s = aff(&["x"]);
    assert!((height_inf(&p(&s, "3*x^2 - 5")).unwrap() - 5f64.ln()).abs() < 1e-15);
    assert_eq!(height_inf(&p(&s, "0")).unwrap(), 0.0);
    assert_eq!(height_inf(&p(&s, "x + 1")).unwrap(), 0.0);
    assert!(height_inf(&p(&s, "1/2*x")).is_err());
}

#[test]
fn height_t_examples() {
    let s = VarSpec::build(&[("x", 1, GroupKind::Affine), ("t", 1, GroupKind::Parameter)]).unwrap();
    assert_eq!(height_t(&p(&s, "(t^2+1)*x + t^3")).unwrap(), 3);
    assert_eq!(height_t(&p(&s, "x^4 + 7")).unwrap(), 0);
    let plain = aff(&["x"]);
    assert!(height_t(&p(&plain, "x")).is_err());
}

#[test]
fn norm_examples() {
    let s = VarSpec::build(&[("x", 1, GroupKind::Affine), ("y", 1, GroupKind::Affine)]).unwrap();
    assert!((l1_norm_log(&p(&s, "x - 2")) - 3f64.ln()).abs() < 1e-15);
    let sup = sup_norm_upper_log(&p(&s, "7*x^2*y"));
    assert!(sup.surrogate);
    assert!((sup.value - 7f64.ln()).abs() < 1e-15);
}

#[test]
fn mahler_univariate_examples() {
    let s = aff(&["x"]);
    let e = mahler_estimate(&p(&s, "x - 2"), MahlerMethod::Roots, TOL).unwrap();
    assert!((e.estimate - 2f64.ln()).abs() <= e.radius + 1e-12);
    let e = mahler_estimate(&p(&s, "x + 1"), MahlerMethod::Roots, TOL).unwrap();
    assert!(e.estimate.abs() <= e.radius + 1e-12);
    // repeated roots go through the squarefree split
    let e = mahler_estimate(&p(&s, "3*(x - 5)^3*(x + 1)^2*(2*x - 1)"), MahlerMethod::Roots, TOL).unwrap();
    let want = 3f64.ln() + 2f64.ln() + 3.0 * 5f64.ln();
    assert!((e.estimate - want).abs() < 1e-9, "{} vs {}", e.estimate, want);
    assert!(mahler_estimate(&p(&s, "0"), MahlerMethod::Roots, TOL).is_err());
}

#[test]
fn mahler_separable_bivariate() {
    let s = aff(&["x", "y"]);
    // m(f(x) g(y)) = m(f) + m(g)
    let f = p(&s, "(x - 3)*(y^2 + 5*y + 1)");
    let e = mahler_estimate(&f, MahlerMethod::TorusQuadrature, 1e-6).unwrap();
    let r = (5.0 + 21f64.sqrt()) / 2.0;
    let want = 3f64.ln() + r.ln();
    assert!((e.estimate - want).abs() <= e.radius + 1e-9, "{} vs {}", e.estimate, want);
}

#[test]
fn mahler_of_one_plus_x_plus_y() {
    let s = aff(&["x", "y"]);
    let e = mahler_estimate(&p(&s, "1 + x + y"), MahlerMethod::TorusQuadrature, 1e-5).unwrap();
    // classical closed form 3√3/(4π) L(χ₋₃, 2)
    assert!((e.estimate - 0.3230659472194505).abs() < 1e-5 + e.radius);
}

#[test]
fn mahler_rejects_many_variables() {
    let s = aff(&["a", "b", "c", "d"]);
    assert_eq!(
        mahler_estimate(&p(&s, "a + b + c + d"), MahlerMethod::TorusQuadrature, 1e-3),
        Err(MeasureError::TooManyVariables(4))
    );
}

#[test]
fn philippon_examples() {
    assert!((philippon_correction(&[1], &[1]) - 0.5).abs() < 1e-15);
    assert!((philippon_correction(&[2], &[1]) - 0.75).abs() < 1e-15);
    assert_eq!(philippon_correction(&[3, 2], &[0, 0]), 0.0);
}

#[test]
fn point_heights() {
    let b = |v: &[i64]| v.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>();
    let h = canonical_point_height(&PointCoords::Integer(vec![b(&[1, 2]), b(&[3, 5])])).unwrap();
    assert!((h[0].as_f64() - 2f64.ln()).abs() < 1e-15);
    assert!((h[1].as_f64() - 5f64.ln()).abs() < 1e-15);
    let h = canonical_point_height(&PointCoords::Integer(vec![b(&[2, 4])])).unwrap();
    assert!((h[0].as_f64() - 2f64.ln()).abs() < 1e-15);
    assert!(canonical_point_height(&PointCoords::Integer(vec![b(&[0, 0])])).is_err());
    let t = VarSpec::build(&[("t", 1, GroupKind::Parameter)]).unwrap();
    let h = canonical_point_height(&PointCoords::Polynomial(vec![vec![p(&t, "1"), p(&t, "t")]])).unwrap();
    assert_eq!(h[0], HeightScalar::Exact(BigInt::from(1)));
    let h = canonical_point_height(&PointCoords::Polynomial(vec![vec![p(&t, "t^2 - 1"), p(&t, "t^3 - t")]])).unwrap();
    assert_eq!(h[0], HeightScalar::Exact(BigInt::from(1)));
}

#[test]
fn divisor_heights() {
    let s = with_t();
    let f = p(&s, "(t+1)*x_1^3 + x_1^2*x_0 - x_2^2*x_0");
    let h = divisor_height(&f, DivisorMode::FunctionField, TOL).unwrap();
    assert_eq!(h.value, HeightScalar::Exact(BigInt::from(1)));
    let g = p(&s, "(t+1)*x_1 - (t+1)*x_0");
    assert!(matches!(divisor_height(&g, DivisorMode::FunctionField, TOL), Err(MeasureError::NotPrimitive(_))));

    let z = VarSpec::build(&[("x", 2, GroupKind::Projective)]).unwrap();
    let h = divisor_height(&p(&z, "x_0"), DivisorMode::CanonicalZ, TOL).unwrap();
    assert!(h.value.as_f64().abs() <= h.radius + 1e-12);
    let h = divisor_height(&p(&z, "x_1 - 2*x_0"), DivisorMode::CanonicalZ, TOL).unwrap();
    assert!((h.value.as_f64() - 2f64.ln()).abs() <= h.radius + 1e-12);
    assert!(divisor_height(&p(&z, "2*x_1 - 4*x_0"), DivisorMode::CanonicalZ, TOL).is_err());
}

fn poly_from(s: &Arc<VarSpec>, coeffs: &[(Vec<u32>, i64)]) -> MPoly {
    MPoly::from_terms(
        s,
        multiheight::CoeffDomain::Integer,
        coeffs.iter().map(|(e, c)| (e.clone(), num_rational::BigRational::from_integer(BigInt::from(*c)))).collect::<Vec<_>>(),
    )
    .unwrap()
}

fn arb_poly(nvars: usize, maxdeg: u32) -> impl Strategy<Value = Vec<(Vec<u32>, i64)>> {
    prop::collection::vec((prop::collection::vec(0..=maxdeg, nvars), -20i64..=20), 1..6)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn mahler_sandwich_univariate(terms in arb_poly(1, 6)) {
        let s = aff(&["x"]);
        let f = poly_from(&s, &terms);
        prop_assume!(!f.is_zero());
        let e = mahler_estimate(&f, MahlerMethod::TorusQuadrature, 1e-6).unwrap();
        let hinf = height_inf(&f).unwrap();
        let d = f.total_degree().unwrap() as f64;
        prop_assert!(approx_le(e.estimate - e.radius, sup_norm_upper_log(&f).value));
        prop_assert!(approx_le(hinf - 2f64.ln() * d, e.estimate + e.radius));
        prop_assert!(approx_le(e.estimate - e.radius, hinf + 2f64.ln() * d));
    }

    #[test]
    fn norm_chain(terms in arb_poly(3, 4)) {
        let s = aff(&["x", "y", "z"]);
        let f = poly_from(&s, &terms);
        prop_assume!(!f.is_zero());
        let hinf = height_inf(&f).unwrap();
        let sup = sup_norm_upper_log(&f).value;
        let bound: f64 = (0..3).map(|v| 2f64.ln() * f.deg_var(v).unwrap_or(0) as f64).sum();
        prop_assert!(approx_le(hinf, sup));
        prop_assert!(approx_le(sup, hinf + bound));
    }

    #[test]
    fn height_of_sums_and_products(a in arb_poly(2, 3), b in arb_poly(2, 3), c in arb_poly(2, 3)) {
        let s = aff(&["x", "y"]);
        let fs: Vec<MPoly> = [a, b, c].iter().map(|t| poly_from(&s, t)).collect();
        prop_assume!(fs.iter().all(|f| !f.is_zero()));
        let sum = fs.iter().fold(MPoly::zero(&s, multiheight::CoeffDomain::Integer), |acc, f| &acc + f);
        let hmax = fs.iter().map(|f| height_inf(f).unwrap()).fold(f64::MIN, f64::max);
        prop_assert!(approx_le(height_inf(&sum).unwrap(), hmax + 3f64.ln()));
        let prod = fs.iter().fold(MPoly::one(&s), |acc, f| &acc * f);
        let hsum: f64 = fs.iter().map(|f| height_inf(f).unwrap()).sum();
        let degs: f64 = fs[1..].iter().map(|f| f.total_degree().unwrap() as f64).sum();
        prop_assert!(approx_le(height_inf(&prod).unwrap(), hsum + 3f64.ln() * degs));
    }

    #[test]
    fn t_height_is_additive(a in arb_poly(2, 3), b in arb_poly(2, 3)) {
        let s = VarSpec::build(&[("x", 1, GroupKind::Affine), ("t", 1, GroupKind::Parameter)]).unwrap();
        let f = poly_from(&s, &a);
        let g = poly_from(&s, &b);
        prop_assume!(!f.is_zero() && !g.is_zero());
        prop_assert_eq!(height_t(&(&f * &g)).unwrap(), height_t(&f).unwrap() + height_t(&g).unwrap());
        prop_assert!(height_t(&(&f + &g)).unwrap() <= height_t(&f).unwrap().max(height_t(&g).unwrap()));
    }

    #[test]
    fn philippon_band(terms in arb_poly(1, 5)) {
        let s = aff(&["x"]);
        let f = poly_from(&s, &terms);
        prop_assume!(!f.is_constant());
        let d = f.total_degree().unwrap();
        let m = mahler_estimate(&f, MahlerMethod::Roots, 1e-6).unwrap().estimate;
        let ph = m + philippon_correction(&[1], &[d]);
        prop_assert!(m <= ph);
        prop_assert!(approx_le(ph - m, 2f64.ln() * d as f64));
    }
}
