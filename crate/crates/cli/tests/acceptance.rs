//! Acceptance suite. Each criterion prints one PASS/FAIL line with its
//! wall-clock time against the limit; the process exits nonzero if any fails.

use std::process::ExitCode;
use std::sync::Arc;
use std::time::{Duration, Instant};

use multiheight::bounds::{
    self, hull_equals_region, hull_vertices, newton_check, newton_points, perron_region, Invariants, PerronVariant,
};
use multiheight::chowring::{
    cc_mul, class_from_mixed_degrees, intersection_count, projection_compare, ChowClass, ScalarKind,
};
use multiheight::elim;
use multiheight::hilbert::{self, affine_invariants, hilbert_fit, pushforward_degrees};
use multiheight::measures::{
    height_inf, height_t, l1_norm_log, mahler_estimate, sup_norm_upper_log, MahlerMethod,
};
use multiheight::nullcert::{self, UMode, DEFAULT_RETRIES};
use multiheight::poly::{gcd, parse_poly};
use multiheight::resultants::{self, det_poly};
use multiheight::{CoeffDomain, GroupKind, Ideal, MPoly, VarSpec};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn poly(text: &str, spec: &Arc<VarSpec>) -> Result<MPoly, String> {
    parse_poly(text, spec).map_err(|e| format!("{text}: {e}"))
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn int_poly(spec: &Arc<VarSpec>, terms: &[(Vec<u32>, i64)]) -> MPoly {
    let terms: Vec<(Vec<u32>, BigRational)> =
        terms.iter().map(|(e, c)| (e.clone(), BigRational::from_integer(BigInt::from(*c)))).collect();
    MPoly::from_terms(spec, CoeffDomain::Integer, terms).expect("integer terms")
}

fn random_poly(rng: &mut ChaCha8Rng, spec: &Arc<VarSpec>, maxdeg: &[u32], nterms: usize, coeff: i64) -> MPoly {
    let terms: Vec<(Vec<u32>, i64)> = (0..nterms)
        .map(|_| (maxdeg.iter().map(|&d| rng.gen_range(0..=d)).collect(), rng.gen_range(-coeff..=coeff)))
        .collect();
    int_poly(spec, &terms)
}

/// Dense form of the given multidegree with random integer coefficients.
fn random_form(rng: &mut ChaCha8Rng, spec: &Arc<VarSpec>, degs: &[u32]) -> MPoly {
    fn monomials(sizes: &[usize], degs: &[u32]) -> Vec<Vec<u32>> {
        let mut out = vec![Vec::new()];
        for (&n, &d) in sizes.iter().zip(degs) {
            let mut group = Vec::new();
            compositions(n, d, &mut Vec::new(), &mut group);
            out = out.iter().flat_map(|pre| group.iter().map(move |g| [pre.clone(), g.clone()].concat())).collect();
        }
        out
    }
    fn compositions(n: usize, d: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() + 1 == n {
            cur.push(d);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for k in 0..=d {
            cur.push(k);
            compositions(n, d - k, cur, out);
            cur.pop();
        }
    }
    let sizes: Vec<usize> = spec.groups().iter().map(|g| g.size).collect();
    let terms: Vec<(Vec<u32>, i64)> = monomials(&sizes, degs)
        .into_iter()
        .map(|e| (e, rng.gen_range(-9..=9)))
        .collect();
    int_poly(spec, &terms)
}

// 1 -------------------------------------------------------------------------

fn eigenpairs() -> Outcome {
    for n in 2..=6usize {
        let dims = [1, n - 1];
        let c = ChowClass::theta(&dims, ScalarKind::Ff, 0).add(&ChowClass::theta(&dims, ScalarKind::Ff, 1)).map_err(err)?;
        let count = intersection_count(&vec![c; n]).map_err(err)?;
        ensure(count == BigInt::from(n), || format!("P1 x P{}: count {count}", n - 1))?;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let mut checked = 0;
    let mut resampled = 0;
    for n in 2..=4usize {
        for _ in 0..3 {
            let s = VarSpec::build(&[("l", 2, GroupKind::Projective), ("x", n, GroupKind::Projective)]).map_err(err)?;
            let (data, a) = loop {
                let a: Vec<Vec<i64>> = (0..n).map(|_| (0..n).map(|_| rng.gen_range(-5..=5)).collect()).collect();
                let gens = (0..n)
                    .map(|i| {
                        let row: Vec<String> = (0..n).map(|j| format!("({})*x_{j}", a[i][j])).collect();
                        poly(&format!("l_0*({}) - l_1*x_{i}", row.join(" + ")), &s)
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                let data = hilbert_fit(&Ideal::new(&s, gens).map_err(err)?).map_err(err)?;
                // a repeated eigenvalue with a larger eigenspace gives a positive-dimensional locus
                if data.dimension == Some(0) {
                    break (data, a);
                }
                resampled += 1;
            };
            let total: BigInt = data.mixed_degrees.values().sum();
            ensure(total == BigInt::from(n), || format!("{a:?}: {total} solutions"))?;
            // independent count: the characteristic form det(l_0 A - l_1 I) has degree n
            let ls = VarSpec::build(&[("l", 2, GroupKind::Projective)]).map_err(err)?;
            let m: Vec<Vec<MPoly>> = (0..n)
                .map(|i| {
                    (0..n)
                        .map(|j| {
                            let diag = if i == j { " - l_1" } else { "" };
                            poly(&format!("({})*l_0{diag}", a[i][j]), &ls)
                        })
                        .collect::<Result<Vec<_>, _>>()
                })
                .collect::<Result<_, _>>()?;
            let chi = det_poly(m, &ls);
            ensure(chi.is_homogeneous_in(&[0, 1]) == Some(n as u32), || format!("{a:?}: char form {chi}"))?;
            checked += 1;
        }
    }
    Ok(format!("classes n=2..6; {checked} random matrices ({resampled} resampled)"))
}

// 2 -------------------------------------------------------------------------

fn eliminant_multiplicity() -> Outcome {
    let s = VarSpec::build(&[("x", 2, GroupKind::Projective), ("y", 2, GroupKind::Projective)]).map_err(err)?;
    let c = Ideal::new(&s, vec![poly("x_0^2*y_1 - x_1^2*y_0", &s)?]).map_err(err)?;
    let data = resultants::eliminant_with_multiplicity(&c, &[0, 2], 0).map_err(err)?;
    let want = poly("u0_0*u1_1 - u0_1*u1_0", data.elim.spec())?;
    ensure(data.elim == want || data.elim == -&want, || format!("Elim = {}", data.elim))?;
    ensure(data.nu == 2, || format!("nu = {}", data.nu))?;
    Ok("Elim = u0_0*u1_1 - u0_1*u1_0, nu = 2".into())
}

// 3 -------------------------------------------------------------------------

fn parametric_goldens() -> Outcome {
    let s = VarSpec::build(&[("x", 1, GroupKind::Affine), ("t", 1, GroupKind::Parameter)]).map_err(err)?;
    let ts = VarSpec::build(&[("t", 1, GroupKind::Affine)]).map_err(err)?;
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut done = 0;
    for (d1, d2) in [(2u32, 3u32), (3, 4)] {
        for _ in 0..2 {
            let (g1, g2) = loop {
                let draw = |rng: &mut ChaCha8Rng| -> Vec<i64> {
                    let deg = rng.gen_range(0..=2usize);
                    let mut c: Vec<i64> = (0..=deg).map(|_| rng.gen_range(-4..=4)).collect();
                    if c[deg] == 0 {
                        c[deg] = 1;
                    }
                    c
                };
                let (a, b) = (draw(&mut rng), draw(&mut rng));
                let text = |c: &[i64]| {
                    c.iter().enumerate().map(|(k, v)| format!("({v})*t^{k}")).collect::<Vec<_>>().join(" + ")
                };
                let (g1, g2) = (text(&a), text(&b));
                let (p1, p2) = (poly(&g1, &ts)?, poly(&g2, &ts)?);
                // E is primitive over Z[t] exactly when g1, g2 are primitive and coprime
                let prim = |p: &MPoly| p.content_and_primitive().map(|(c, _)| c.abs() == BigInt::from(1)).unwrap_or(false);
                if prim(&p1) && prim(&p2) && gcd(&p1, &p2).is_constant() {
                    break (g1, g2);
                }
            };
            let qs = [poly(&format!("({g1})*x^{d1} - 1"), &s)?, poly(&format!("({g2})*x^{d2} - 1"), &s)?];
            let e = elim::implicit_equation(&Ideal::zero(&s), &qs).map_err(err)?;
            let want = poly(&format!("({g2})^{d1}*(y_0 + 1)^{d2} - ({g1})^{d2}*(y_1 + 1)^{d1}"), e.spec())?;
            ensure(e == want || e == -&want, || format!("g = ({g1}, {g2}), d = ({d1}, {d2}): E = {e}"))?;
            done += 1;
        }
    }

    let s = VarSpec::build(&[("x", 2, GroupKind::Affine), ("t", 1, GroupKind::Parameter)]).map_err(err)?;
    let v = Ideal::new(&s, vec![poly("(t+1)*x_0^3 + x_0^2 - x_1^2", &s)?]).map_err(err)?;
    let qs = [poly("x_0 + (t+1)*x_1 - 1", &s)?, poly("x_0*x_1 + (t-1)*x_1^2 + t", &s)?];
    let aff = affine_invariants(&v).map_err(err)?;
    let inv = Invariants {
        n: 2,
        r: 1,
        d: vec![1, 2],
        delta: vec![vec![1, 1]],
        deg_v: aff.degree.to_u64().ok_or("degree")?,
        h_v_t: vec![aff.ff_height.ok_or("no ff height")?.to_u64().ok_or("height")?],
        d0: 1,
        ..Default::default()
    };
    let e = elim::implicit_equation(&v, &qs).map_err(err)?;
    ensure(e.nterms() == 138, || format!("elliptic E has {} terms", e.nterms()))?;
    let reg = perron_region(&inv, PerronVariant::Param).map_err(err)?;
    let check = newton_check(&e, &reg, false).map_err(err)?;
    ensure(check.contained, || format!("violations {:?}", check.violations))?;
    let want: Vec<Vec<i64>> =
        vec![vec![0, 0, 0], vec![0, 0, 11], vec![0, 3, 0], vec![0, 3, 8], vec![6, 0, 0], vec![6, 0, 5]];
    let hull = hull_vertices(&newton_points(&e)).map_err(err)?;
    ensure(hull == want, || format!("hull {hull:?}"))?;
    ensure(hull_equals_region(&e, &reg).map_err(err)?, || "hull differs from region".into())?;
    Ok(format!("{done} coprime goldens; elliptic E: 138 terms, hull = region with 6 vertices"))
}

// 4 -------------------------------------------------------------------------

fn arithmetic_golden() -> Outcome {
    let (d1, d2, h1, h2) = (2u32, 3u32, 5i64, 7i64);
    let s = VarSpec::build(&[("x", 1, GroupKind::Affine)]).map_err(err)?;
    let qs = [poly(&format!("{h1}*x^{d1}"), &s)?, poly(&format!("{h2}*x^{d2}"), &s)?];
    let e = elim::implicit_equation(&Ideal::zero(&s), &qs).map_err(err)?;
    let want = poly(&format!("{h2}^{d1}*y_0^{d2} - {h1}^{d2}*y_1^{d1}"), e.spec())?;
    ensure(e == want || e == -&want, || format!("E = {e}"))?;
    let hs = [(h1 as f64).ln(), (h2 as f64).ln()];
    let inv = Invariants::affine_space(1, &[d1 as u64, d2 as u64], &hs);
    let reg = perron_region(&inv, PerronVariant::Z).map_err(err)?;
    let check = newton_check(&e, &reg, true).map_err(err)?;
    ensure(check.contained, || format!("extended check: {:?}", check.violations))?;
    let got = bounds::max_weighted_height(&e, &hs).map_err(err)?;
    let expected = d1 as f64 * hs[1] + d2 as f64 * hs[0];
    // oracle: the two terms by hand
    let by_hand = ((h2 as f64).powi(d1 as i32).ln()).max((h1 as f64).powi(d2 as i32).ln() + d1 as f64 * hs[1]);
    ensure((got - expected).abs() <= 1e-9, || format!("max weighted height {got} vs {expected}"))?;
    ensure((by_hand - expected).abs() <= 1e-9, || format!("hand computation {by_hand}"))?;
    Ok(format!("E = {e}; max weighted height {got:.12}"))
}

// 5 -------------------------------------------------------------------------

fn certificates() -> Outcome {
    let line = VarSpec::build(&[("x", 1, GroupKind::Affine)]).map_err(err)?;
    let fs = vec![poly("x", &line)?, poly("x - 1", &line)?];
    let c = nullcert::certify(&Ideal::zero(&line), &fs, &UMode::Specialized { seed: 0 }, DEFAULT_RETRIES).map_err(err)?;
    ensure(c.verified, || "A1 certificate not verified".into())?;
    let one = MPoly::one(c.alpha.spec());
    ensure(c.alpha == one || c.alpha == -&one, || format!("alpha = {}", c.alpha))?;
    let lhs = &(&c.gs[0] * &fs[0]) + &(&c.gs[1] * &fs[1]);
    ensure(lhs == c.alpha, || "identity fails on the line".into())?;

    let plane = VarSpec::build(&[("x", 2, GroupKind::Affine)]).map_err(err)?;
    let fs = vec![poly("x_0^2", &plane)?, poly("x_0*x_1 - 10", &plane)?];
    let c = nullcert::certify(&Ideal::zero(&plane), &fs, &UMode::Specialized { seed: 0 }, DEFAULT_RETRIES).map_err(err)?;
    let lhs = &(&c.gs[0] * &fs[0]) + &(&c.gs[1] * &fs[1]);
    ensure(c.verified && lhs == c.alpha, || "Masser identity fails".into())?;
    let m = nullcert::measure(&c).map_err(err)?;
    let masser_h = m.h_alpha;
    ensure(m.h_alpha >= 2.0 * 10f64.ln() - 1e-12, || format!("log alpha = {}", m.h_alpha))?;
    let inv = Invariants::affine_space(2, &[2, 2], &[0.0, 10f64.ln()]);
    let b = bounds::weak_z(&inv).map_err(err)?;
    // (4r+8) log(n+3) ∏d + Σ (∏d/d_l) h_l with r = n = 2
    let display = 16.0 * 5f64.ln() * 4.0 + 2.0 * 10f64.ln();
    ensure((b.ht - display).abs() <= 1e-12 * display, || format!("weak_Z height {} vs {display}", b.ht))?;
    ensure(m.deg_x_gf.iter().all(|&d| BigInt::from(d) <= b.deg), || format!("degrees {:?}", m.deg_x_gf))?;
    ensure(m.h_alpha <= b.ht, || "h(alpha) above bound".into())?;
    ensure(m.h_gf.iter().flatten().all(|&h| h <= b.ht), || format!("h(g)+h(f) {:?}", m.h_gf))?;
    // the example's own display: d_1 log H + (4n+7) log(n+2) d_1 d_2
    let example = 2.0 * 10f64.ln() + 15.0 * 4f64.ln() * 4.0;
    ensure(m.h_alpha <= example && m.h_gf.iter().flatten().all(|&h| h <= example), || {
        format!("above the example display {example}")
    })?;

    let pt = VarSpec::build(&[("x", 2, GroupKind::Affine), ("t", 1, GroupKind::Parameter)]).map_err(err)?;
    let h = 3u32;
    let fs = vec![poly("x_0^2", &pt)?, poly(&format!("x_0*x_1 - t^{h}"), &pt)?];
    let c = nullcert::certify(&Ideal::zero(&pt), &fs, &UMode::Specialized { seed: 0 }, DEFAULT_RETRIES).map_err(err)?;
    let lhs = &(&c.gs[0] * &fs[0]) + &(&c.gs[1] * &fs[1]);
    ensure(c.verified && lhs == c.alpha, || "parametric identity fails".into())?;
    let m = nullcert::measure(&c).map_err(err)?;
    ensure(m.deg_t_alpha == vec![2 * h], || format!("deg_t alpha = {:?}", m.deg_t_alpha))?;
    Ok(format!("alpha = 1; log alpha = {masser_h:.6} >= 2 log 10; deg_t alpha = {}", m.deg_t_alpha[0]))
}

// 6 -------------------------------------------------------------------------

fn strong_certificates() -> Outcome {
    let line = VarSpec::build(&[("x", 1, GroupKind::Affine)]).map_err(err)?;
    let v = Ideal::zero(&line);
    let mode = UMode::Specialized { seed: 0 };
    let fs = vec![poly("x", &line)?, poly("x - 1", &line)?];
    let c = nullcert::strong_certify(&v, &fs, &MPoly::one(&line), &mode, DEFAULT_RETRIES).map_err(err)?;
    let lhs = &(&c.gs[0] * &fs[0]) + &(&c.gs[1] * &fs[1]);
    ensure(c.verified && c.mu == 0 && lhs == c.alpha, || format!("unit: mu = {}", c.mu))?;
    ensure(c.mu <= 2, || "mu above 2 prod(d) deg V".into())?;

    let fs = vec![poly("x^2", &line)?];
    let g = poly("x", &line)?;
    let c = nullcert::strong_certify(&v, &fs, &g, &mode, DEFAULT_RETRIES).map_err(err)?;
    let lhs = &c.gs[0] * &fs[0];
    ensure(c.verified && lhs == &c.alpha * &g.pow(c.mu), || "square: identity fails".into())?;
    ensure(c.mu >= 1 && c.mu <= 4, || format!("square: mu = {}", c.mu))?;
    Ok(format!("mu = 0 for g = 1; mu = {} for g = x", c.mu))
}

// 7 -------------------------------------------------------------------------

fn hilbert_bezout() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let p2 = VarSpec::build(&[("x", 3, GroupKind::Projective)]).map_err(err)?;
    let p1p1 = VarSpec::build(&[("x", 2, GroupKind::Projective), ("y", 2, GroupKind::Projective)]).map_err(err)?;
    let mut done = 0;
    let mut k = 0u64;
    while done < 20 {
        k += 1;
        let (spec, dims, degs): (&Arc<VarSpec>, Vec<usize>, Vec<Vec<u32>>) = if k % 2 == 0 {
            (&p2, vec![2], (0..2).map(|_| vec![rng.gen_range(1..=3)]).collect())
        } else {
            (&p1p1, vec![1, 1], (0..2).map(|_| vec![rng.gen_range(0..=3), rng.gen_range(0..=3)]).collect())
        };
        if degs.iter().any(|d| d.iter().all(|&x| x == 0)) {
            continue;
        }
        let fs: Vec<MPoly> = degs.iter().map(|d| random_form(&mut rng, spec, d)).collect();
        let class = |d: &[u32]| -> Result<ChowClass, String> {
            let mut c = ChowClass::zero(&dims, ScalarKind::Ff);
            for (i, &e) in d.iter().enumerate() {
                c = c.add(&ChowClass::theta(&dims, ScalarKind::Ff, i).scaled(&BigInt::from(e))).map_err(err)?;
            }
            Ok(c)
        };
        let x = Ideal::new(spec, vec![fs[0].clone()]).map_err(err)?;
        let x_data = hilbert_fit(&x).map_err(|e| format!("{degs:?}: {e}"))?;
        ensure(class_from_mixed_degrees(&dims, ScalarKind::Ff, &x_data.mixed_degrees) == class(&degs[0])?, || {
            format!("divisor {degs:?}: {:?}", x_data.mixed_degrees)
        })?;
        let cut = Ideal::new(spec, fs.clone()).map_err(err)?;
        let data = hilbert_fit(&cut).map_err(|e| format!("{degs:?} {fs:?}: {e}"))?;
        let predicted = cc_mul(&class(&degs[0])?, &class(&degs[1])?).map_err(err)?;
        let measured = class_from_mixed_degrees(&dims, ScalarKind::Ff, &data.mixed_degrees);
        ensure(measured == predicted, || format!("{degs:?}: {:?} vs {:?}", measured, predicted))?;

        let l: Vec<usize> = if dims.len() == 1 { vec![1] } else { vec![1, 0] };
        let (src, img) = pushforward_degrees(&x, &l, k).map_err(err)?;
        ensure(src == x_data.mixed_degrees, || format!("{degs:?}: graph source degrees {src:?}"))?;
        let pi = class_from_mixed_degrees(&l, ScalarKind::Ff, &img);
        let xc = class_from_mixed_degrees(&dims, ScalarKind::Ff, &src);
        ensure(projection_compare(&pi, &xc).map_err(err)?, || format!("{degs:?}: projection {img:?} vs {src:?}"))?;
        done += 1;
    }
    Ok(format!("{done} complete intersections"))
}

// 8 -------------------------------------------------------------------------

fn function_field_heights() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let s = VarSpec::build(&[("x", 3, GroupKind::Projective), ("t", 1, GroupKind::Parameter)]).map_err(err)?;
    let xs = VarSpec::build(&[("x", 3, GroupKind::Projective)]).map_err(err)?;
    let mut heights = Vec::new();
    let mut done = 0;
    while done < 10 {
        let d = rng.gen_range(1..=3u32);
        let dt = rng.gen_range(0..=2usize);
        let skeleton = random_form(&mut rng, &xs, &[d]);
        let terms: Vec<String> = skeleton
            .terms()
            .map(|(e, _)| {
                let tc: Vec<String> = (0..=dt).map(|k| format!("({})*t^{k}", rng.gen_range(-3..=3))).collect();
                format!("({})*x_0^{}*x_1^{}*x_2^{}", tc.join(" + "), e[0], e[1], e[2])
            })
            .collect();
        let f = poly(&terms.join(" + "), &s)?;
        // keep curves that are primitive over k[t]
        let tg = s.group_index("t").map_err(err)?;
        if f.is_zero() || f.group_degree(0).unwrap_or(0) == 0 {
            continue;
        }
        let coeffs = f.split_by(&s.group_range(0).collect::<Vec<_>>());
        let content = coeffs.values().fold(MPoly::zero(&s, CoeffDomain::Integer), |acc, c| gcd(&acc, c));
        if content.group_degree(tg).unwrap_or(0) > 0 {
            continue;
        }
        let v = Ideal::new(&s, vec![f.clone()]).map_err(err)?;
        let chow = elim::chow_form(&v, 1).map_err(err)?;
        let ct = chow.spec().group_index("t").map_err(err)?;
        let deg_t = chow.group_degree(ct).unwrap_or(0);
        let model = hilbert::standard_model(&v).map_err(err)?;
        let data = hilbert_fit(&model).map_err(err)?;
        let r1 = data.dimension.ok_or("empty model")? as u32;
        let h = data.mixed_degree(&[0, r1]);
        ensure(BigInt::from(deg_t) == h, || format!("{f}: deg_t chow {deg_t} vs model {h}"))?;
        heights.push(deg_t);
        done += 1;
    }
    Ok(format!("heights {heights:?}"))
}

// 9 -------------------------------------------------------------------------

fn measures_suite() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let tol = 1e-9;
    let ln2 = 2f64.ln();
    let uni = VarSpec::build(&[("x", 1, GroupKind::Affine)]).map_err(err)?;
    let bi = VarSpec::build(&[("x", 1, GroupKind::Affine), ("y", 1, GroupKind::Affine)]).map_err(err)?;
    let tri = VarSpec::build(&[("x", 1, GroupKind::Affine), ("y", 1, GroupKind::Affine), ("z", 1, GroupKind::Affine)])
        .map_err(err)?;
    let kt = VarSpec::build(&[("x", 2, GroupKind::Affine), ("t", 1, GroupKind::Parameter)]).map_err(err)?;

    // Mahler sandwich: h(f) - log 2 Σ deg ≤ m(f) ≤ log ‖f‖_sup ≤ log ‖f‖₁, plus m(fg) = m(f) + m(g)
    for k in 0..1000 {
        let (f, method) = if k % 4 == 3 {
            (random_poly(&mut rng, &bi, &[3, 3], 4, 20), MahlerMethod::TorusQuadrature)
        } else {
            (random_poly(&mut rng, &uni, &[6], 5, 20), MahlerMethod::Roots)
        };
        if f.is_zero() {
            continue;
        }
        let e = mahler_estimate(&f, method, 1e-7).map_err(err)?;
        let slack = e.radius + tol;
        let degsum: f64 = (0..f.spec().nvars()).map(|v| f.deg_var(v).unwrap_or(0) as f64).sum();
        let hinf = height_inf(&f).map_err(err)?;
        let sup = sup_norm_upper_log(&f).value;
        ensure(e.estimate <= sup + slack, || format!("{f}: m = {} > log sup {sup}", e.estimate))?;
        ensure(hinf - ln2 * degsum <= e.estimate + slack, || format!("{f}: m = {} too small", e.estimate))?;
        if method == MahlerMethod::Roots {
            let g = random_poly(&mut rng, &uni, &[4], 4, 20);
            if !g.is_zero() {
                let mg = mahler_estimate(&g, method, 1e-7).map_err(err)?;
                let mfg = mahler_estimate(&(&f * &g), method, 1e-7).map_err(err)?;
                let r = e.radius + mg.radius + mfg.radius + tol * (1.0 + mfg.estimate.abs());
                ensure((mfg.estimate - e.estimate - mg.estimate).abs() <= r, || format!("m not additive on {f}, {g}"))?;
            }
        }
    }

    // norm chain: h(f) ≤ log ‖f‖₂ ≤ log ‖f‖₁ ≤ h(f) + log #terms
    for _ in 0..1000 {
        let f = random_poly(&mut rng, &tri, &[4, 4, 4], 6, 1000);
        if f.is_zero() {
            continue;
        }
        let hinf = height_inf(&f).map_err(err)?;
        let l2 = 0.5 * f.terms().map(|(_, c)| c.to_f64().unwrap().powi(2)).sum::<f64>().ln();
        let l1 = l1_norm_log(&f);
        let count = (f.nterms() as f64).ln();
        ensure(hinf <= l2 + tol && l2 <= l1 + tol && l1 <= hinf + count + tol, || format!("{f}: {hinf} {l2} {l1}"))?;
    }

    // Gauss: content(fg) = content(f) content(g), exactly
    for _ in 0..1000 {
        let f = random_poly(&mut rng, &bi, &[3, 3], 4, 30);
        let g = random_poly(&mut rng, &bi, &[3, 3], 4, 30);
        if f.is_zero() || g.is_zero() {
            continue;
        }
        let (cf, _) = f.content_and_primitive().map_err(err)?;
        let (cg, _) = g.content_and_primitive().map_err(err)?;
        let (cfg, _) = (&f * &g).content_and_primitive().map_err(err)?;
        ensure(cfg.abs() == (&cf * &cg).abs(), || format!("content of ({f})({g})"))?;
    }

    // k[t] heights add under products, exactly
    for _ in 0..1000 {
        let f = random_poly(&mut rng, &kt, &[2, 2, 3], 4, 9);
        let g = random_poly(&mut rng, &kt, &[2, 2, 3], 4, 9);
        if f.is_zero() || g.is_zero() {
            continue;
        }
        let (hf, hg, hfg) = (height_t(&f).map_err(err)?, height_t(&g).map_err(err)?, height_t(&(&f * &g)).map_err(err)?);
        ensure(hfg == hf + hg, || format!("h({f} * {g}) = {hfg} != {hf} + {hg}"))?;
    }
    Ok("4 x 1000 cases".into())
}

// 10 ------------------------------------------------------------------------

fn bound_displays() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    for _ in 0..100 {
        let n = rng.gen_range(1..=6usize);
        let ds: Vec<u64> = (0..=n).map(|_| rng.gen_range(1..=9)).collect();
        let hs: Vec<f64> = (0..=n).map(|_| rng.gen_range(0.0..30.0)).collect();
        let ts: Vec<u64> = (0..=n).map(|_| rng.gen_range(0..=12)).collect();
        let inv = Invariants::affine_space(n, &ds, &hs);
        let prod: f64 = ds.iter().map(|&d| d as f64).product();
        let mut display = (4 * n + 8) as f64 * (n as f64 + 3.0).ln() * prod;
        for l in 0..=n {
            display += prod / ds[l] as f64 * hs[l];
        }
        let got = bounds::weak_z(&inv).map_err(err)?;
        ensure((got.ht - display).abs() <= 1e-12 * display.abs().max(1.0), || format!("weak_Z {} vs {display}", got.ht))?;
        ensure(got.deg == BigInt::from(prod as u64), || format!("weak_Z degree {}", got.deg))?;

        let mut ff = inv.clone();
        ff.delta = vec![ts.clone()];
        let exact: u64 = (0..=n)
            .map(|l| ds.iter().enumerate().filter(|&(j, _)| j != l).map(|(_, &d)| d).product::<u64>() * ts[l])
            .sum();
        let got = bounds::weak_ff(&ff).map_err(err)?;
        ensure(got.t_deg[0] == BigInt::from(exact), || format!("weak_ff {} vs {exact}", got.t_deg[0]))?;
    }
    Ok("100 random tuples".into())
}

fn main() -> ExitCode {
    let criteria: [(&str, u64, fn() -> Outcome); 10] = [
        ("eigenpair count", 10, eigenpairs),
        ("eliminant multiplicity", 5, eliminant_multiplicity),
        ("parametric implicitization goldens", 60, parametric_goldens),
        ("arithmetic implicitization golden", 10, arithmetic_golden),
        ("certificates", 120, certificates),
        ("strong certificates", 30, strong_certificates),
        ("Hilbert/Bezout oracle", 120, hilbert_bezout),
        ("function-field height cross-oracle", 120, function_field_heights),
        ("measures suite", 30, measures_suite),
        ("bound-evaluator consistency", 5, bound_displays),
    ];
    let mut failures = 0;
    for (i, (name, limit, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let took = start.elapsed();
        let outcome = match outcome {
            Ok(msg) if took >= Duration::from_secs(*limit) => Err(format!("{msg}; too slow")),
            other => other,
        };
        let secs = took.as_secs_f64();
        match outcome {
            Ok(msg) => println!("PASS {:>2} {name} ({secs:.2} s < {limit} s): {msg}", i + 1),
            Err(msg) => {
                failures += 1;
                println!("FAIL {:>2} {name} ({secs:.2} s, limit {limit} s): {msg}", i + 1);
            }
        }
    }
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failures} criteria failed");
        ExitCode::FAILURE
    }
}
