//! Heights and measures of polynomials: norms, Mahler measure, the
//! Philippon correction term, t-degree heights and canonical heights of
//! points and divisors.

use std::fmt;

use num_bigint::{BigInt, Sign};
use num_complex::Complex64;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::poly::{gcd, GroupKind, MPoly, PolyError};

pub const REL_TOL: f64 = 1e-9;
pub const ABS_TOL: f64 = 1e-12;

/// Largest number of torus sample points used by the quadrature.
pub const QUADRATURE_CAP: usize = 1 << 20;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum MeasureError {
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("the Mahler measure of the zero polynomial is undefined")]
    ZeroPolynomial,
    #[error("tolerance {tol} not reached: estimate {estimate} ± {radius}")]
    Tolerance { tol: f64, estimate: f64, radius: f64 },
    #[error("{0} variables exceed the quadrature limit of 3")]
    TooManyVariables(usize),
    #[error("root finding is only available for univariate polynomials")]
    NotUnivariate,
    #[error("group {0} has only zero coordinates")]
    ZeroPoint(usize),
    #[error("polynomial is not primitive (content {0})")]
    NotPrimitive(String),
    #[error("polynomial is not multihomogeneous")]
    NotMultihomogeneous,
    #[error("no parameter group")]
    NoParameter,
}

/// A height value: exact t-degrees over k[t], natural-log reals over ℤ.
#[derive(Clone, Debug, PartialEq)]
pub enum HeightScalar {
    Exact(BigInt),
    Real(f64),
}

impl HeightScalar {
    pub fn as_f64(&self) -> f64 {
        match self {
            HeightScalar::Exact(n) => n.to_f64().unwrap_or(f64::INFINITY),
            HeightScalar::Real(x) => *x,
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, HeightScalar::Exact(_))
    }
}

impl fmt::Display for HeightScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HeightScalar::Exact(n) => write!(f, "{n}"),
            HeightScalar::Real(x) => write!(f, "{x:.15}"),
        }
    }
}

/// `a ≤ b` up to the default relative and absolute tolerances.
pub fn approx_le(a: f64, b: f64) -> bool {
    a <= b + ABS_TOL.max(REL_TOL * a.abs().max(b.abs()))
}

pub fn approx_eq(a: f64, b: f64) -> bool {
    approx_le(a, b) && approx_le(b, a)
}

/// Natural logarithm of a positive integer of any size.
pub fn log_bigint(n: &BigInt) -> f64 {
    assert!(n.sign() == Sign::Plus, "log of a non-positive integer");
    let bits = n.bits();
    if bits < 1000 {
        return n.to_f64().unwrap().ln();
    }
    let shift = bits - 64;
    let top: BigInt = n >> shift;
    top.to_f64().unwrap().ln() + shift as f64 * std::f64::consts::LN_2
}

pub fn log_rational(q: &BigRational) -> f64 {
    log_bigint(q.numer()) - log_bigint(q.denom())
}

/// `log ‖f‖_∞` over ℤ; 0 for the zero polynomial.
pub fn height_inf(f: &MPoly) -> Result<f64, MeasureError> {
    f.require_integer()?;
    if f.is_zero() {
        return Ok(0.0);
    }
    Ok(log_bigint(f.max_abs_coeff().numer()))
}

/// Maximal t-degree of the coefficients, `t` being the parameter variables.
pub fn height_t(f: &MPoly) -> Result<u32, MeasureError> {
    let spec = f.spec();
    let params = spec.groups_of_kind(GroupKind::Parameter);
    if params.is_empty() {
        return Err(MeasureError::NoParameter);
    }
    Ok(f.groups_degree(&params).unwrap_or(0))
}

/// Same as [`height_t`] for a named group.
pub fn height_in_group(f: &MPoly, group: &str) -> Result<u32, MeasureError> {
    Ok(f.partial_degree(group)?.unwrap_or(0))
}

/// `log ‖f‖₁`; `-∞` for the zero polynomial.
pub fn l1_norm_log(f: &MPoly) -> f64 {
    if f.is_zero() {
        return f64::NEG_INFINITY;
    }
    log_rational(&f.l1_norm())
}

/// Upper bound for `log ‖f‖_sup`, which is never computed exactly.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SupBound {
    pub value: f64,
    /// Always true: the value is `log ‖f‖₁`, an upper bound.
    pub surrogate: bool,
}

pub fn sup_norm_upper_log(f: &MPoly) -> SupBound {
    SupBound { value: l1_norm_log(f), surrogate: true }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MahlerMethod {
    Roots,
    TorusQuadrature,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MahlerEstimate {
    pub estimate: f64,
    pub radius: f64,
}

/// Estimate of the Mahler measure with an error radius. `Roots` requires a
/// univariate polynomial and uses Jensen's formula; `TorusQuadrature`
/// handles up to three variables: Jensen in one variable, trapezoid rule on
/// the remaining torus with step halving.
pub fn mahler_estimate(f: &MPoly, method: MahlerMethod, tol: f64) -> Result<MahlerEstimate, MeasureError> {
    if f.is_zero() {
        return Err(MeasureError::ZeroPolynomial);
    }
    let vars = f.used_vars();
    if vars.is_empty() {
        let c = f.constant_value().unwrap();
        return Ok(MahlerEstimate { estimate: log_rational(&c.abs()), radius: 0.0 });
    }
    match method {
        MahlerMethod::Roots => {
            if vars.len() != 1 {
                return Err(MeasureError::NotUnivariate);
            }
            let est = mahler_univariate_exact(f, vars[0]);
            if est.radius > tol {
                return Err(MeasureError::Tolerance { tol, estimate: est.estimate, radius: est.radius });
            }
            Ok(est)
        }
        MahlerMethod::TorusQuadrature => {
            if vars.len() == 1 {
                let est = mahler_univariate_exact(f, vars[0]);
                if est.radius > tol {
                    return Err(MeasureError::Tolerance { tol, estimate: est.estimate, radius: est.radius });
                }
                return Ok(est);
            }
            if vars.len() > 3 {
                return Err(MeasureError::TooManyVariables(vars.len()));
            }
            torus_quadrature(f, &vars, tol)
        }
    }
}

/// Squarefree factorization `f = c · ∏ gᵢ^i` of a univariate polynomial.
fn yun(f: &MPoly, v: usize) -> Vec<(MPoly, u32)> {
    let mut out = Vec::new();
    let df = f.derivative(v);
    let a0 = gcd(f, &df);
    let mut b = f.div_exact(&a0).expect("gcd divides");
    let mut c = df.div_exact(&a0).expect("gcd divides");
    let mut d = &c - &b.derivative(v);
    let mut i = 1;
    while !b.is_constant() {
        let a = gcd(&b, &d);
        if !a.is_constant() {
            out.push((a.clone(), i));
        }
        b = b.div_exact(&a).expect("gcd divides");
        c = d.div_exact(&a).expect("gcd divides");
        d = &c - &b.derivative(v);
        i += 1;
    }
    out
}

fn to_f64_ratio(c: &BigRational, lead: &BigRational) -> f64 {
    (c / lead).to_f64().unwrap_or(f64::NAN)
}

fn mahler_univariate_exact(f: &MPoly, v: usize) -> MahlerEstimate {
    let f = f.to_rational();
    let lead = f.univariate_coeffs(v).last().unwrap().constant_value().unwrap();
    let mut estimate = log_rational(&lead.abs());
    let mut radius = 0.0;
    for (g, mult) in yun(&f, v) {
        let coeffs: Vec<BigRational> =
            g.univariate_coeffs(v).iter().map(|c| c.constant_value().unwrap()).collect();
        let lg = coeffs.last().unwrap().clone();
        let cf: Vec<Complex64> =
            coeffs.iter().map(|c| Complex64::new(to_f64_ratio(c, &lg), 0.0)).collect();
        let (m, r) = jensen_roots(&cf);
        estimate += mult as f64 * m;
        radius += mult as f64 * r;
    }
    MahlerEstimate { estimate, radius }
}

fn eval_c(p: &[Complex64], z: Complex64) -> (Complex64, Complex64) {
    let mut v = Complex64::new(0.0, 0.0);
    let mut d = Complex64::new(0.0, 0.0);
    for c in p.iter().rev() {
        d = d * z + v;
        v = v * z + c;
    }
    (v, d)
}

/// Roots of a polynomial with ascending coefficients by the Aberth–Ehrlich
/// iteration.
pub fn polynomial_roots(p: &[Complex64]) -> Vec<Complex64> {
    let n = p.len() - 1;
    if n == 0 {
        return vec![];
    }
    let lead = p[n];
    let monic: Vec<Complex64> = p.iter().map(|c| c / lead).collect();
    // Cauchy bound for the initial circle
    let bound = 1.0 + monic[..n].iter().map(|c| c.norm()).fold(0.0, f64::max);
    let r0 = bound.min(1e6).max(0.5);
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| Complex64::from_polar(r0 * 0.9, 2.0 * std::f64::consts::PI * (k as f64 + 0.25) / n as f64 + 0.4))
        .collect();
    for _ in 0..500 {
        let mut moved = 0.0f64;
        for i in 0..n {
            let (v, d) = eval_c(&monic, z[i]);
            if v.norm() == 0.0 {
                continue;
            }
            let ratio = v / d;
            let s: Complex64 = (0..n).filter(|&j| j != i).map(|j| 1.0 / (z[i] - z[j])).sum();
            let w = ratio / (Complex64::new(1.0, 0.0) - ratio * s);
            if w.is_finite() {
                z[i] -= w;
                moved = moved.max(w.norm() / (1.0 + z[i].norm()));
            }
        }
        if moved < 1e-15 {
            break;
        }
    }
    z
}

fn log_plus(x: f64) -> f64 {
    if x > 1.0 {
        x.ln()
    } else {
        0.0
    }
}

/// `Σ log⁺|root|` with a radius from Newton inclusion disks.
fn jensen_roots(p: &[Complex64]) -> (f64, f64) {
    let n = p.len() - 1;
    let roots = polynomial_roots(p);
    let mut m = 0.0;
    let mut rad = 0.0;
    for z in roots {
        let (v, d) = eval_c(p, z);
        let rho = if d.norm() > 0.0 { n as f64 * (v / d).norm() } else { 1.0 };
        let rho = rho + 4.0 * f64::EPSILON * (1.0 + z.norm()) * n as f64;
        let a = z.norm();
        m += log_plus(a);
        rad += log_plus(a + rho) - log_plus((a - rho).max(0.0));
    }
    (m, rad)
}

fn torus_quadrature(f: &MPoly, vars: &[usize], tol: f64) -> Result<MahlerEstimate, MeasureError> {
    // inner variable: prefer a monomial leading coefficient, then high degree
    let inner = *vars
        .iter()
        .max_by_key(|&&v| {
            let cs = f.univariate_coeffs(v);
            (cs.last().map(|c| c.nterms() == 1).unwrap_or(false), cs.len())
        })
        .unwrap();
    let outer: Vec<usize> = vars.iter().copied().filter(|&v| v != inner).collect();
    let coeffs = f.univariate_coeffs(inner);
    let terms: Vec<Vec<(Vec<u32>, f64)>> = coeffs
        .iter()
        .map(|c| {
            c.terms()
                .map(|(e, q)| (outer.iter().map(|&v| e[v]).collect(), q.to_f64().unwrap_or(f64::NAN)))
                .collect()
        })
        .collect();
    let k = outer.len();
    let integrand = |angles: &[f64]| -> (f64, f64) {
        let mut p: Vec<Complex64> = terms
            .iter()
            .map(|ts| {
                ts.iter()
                    .map(|(e, c)| {
                        let phase: f64 = e.iter().zip(angles).map(|(&a, &t)| a as f64 * t).sum();
                        Complex64::from_polar(*c, phase)
                    })
                    .sum()
            })
            .collect();
        while p.len() > 1 && p.last().unwrap().norm() == 0.0 {
            p.pop();
        }
        let lead = p.last().unwrap().norm();
        if lead == 0.0 {
            return (f64::NEG_INFINITY, 0.0);
        }
        if p.len() == 1 {
            return (lead.ln(), 0.0);
        }
        let (m, r) = jensen_roots(&p);
        (lead.ln() + m, r)
    };
    let sample = |n: usize| -> (f64, f64) {
        let total = n.pow(k as u32);
        let h = 2.0 * std::f64::consts::PI / n as f64;
        let mut sum = 0.0;
        let mut rsum = 0.0;
        let mut idx = vec![0usize; k];
        for _ in 0..total {
            // offset avoids sampling symmetric singular points
            let angles: Vec<f64> = idx.iter().enumerate().map(|(j, &i)| (i as f64 + 0.5 / (j as f64 + 1.7)) * h).collect();
            let (v, r) = integrand(&angles);
            sum += v;
            rsum += r;
            for slot in idx.iter_mut() {
                *slot += 1;
                if *slot < n {
                    break;
                }
                *slot = 0;
            }
        }
        (sum / total as f64, rsum / total as f64)
    };
    let mut n = 8usize;
    let mut prev = sample(n);
    loop {
        n *= 2;
        if n.pow(k as u32) > QUADRATURE_CAP {
            return Err(MeasureError::Tolerance { tol, estimate: prev.0, radius: f64::INFINITY });
        }
        let cur = sample(n);
        if !cur.0.is_finite() {
            return Err(MeasureError::Tolerance { tol, estimate: cur.0, radius: f64::INFINITY });
        }
        let radius = (cur.0 - prev.0).abs() + cur.1;
        if radius <= tol {
            return Ok(MahlerEstimate { estimate: cur.0, radius });
        }
        prev = cur;
    }
}

/// `Σᵢ (Σ_{j=1}^{nᵢ} 1/(2j)) dᵢ`, the additive term of the Philippon measure.
pub fn philippon_correction(dims: &[usize], degrees: &[u32]) -> f64 {
    philippon_correction_exact(dims, degrees).to_f64().unwrap()
}

pub fn philippon_correction_exact(dims: &[usize], degrees: &[u32]) -> BigRational {
    let mut total = BigRational::zero();
    for (&n, &d) in dims.iter().zip(degrees) {
        let mut h = BigRational::zero();
        for j in 1..=n {
            h += BigRational::new(BigInt::one(), BigInt::from(2 * j));
        }
        total += h * BigRational::from_integer(BigInt::from(d));
    }
    total
}

/// Coordinates of a point in a product of projective spaces.
#[derive(Clone, Debug)]
pub enum PointCoords {
    Integer(Vec<Vec<BigInt>>),
    /// Coordinates in k[t] (each a polynomial in a single parameter group).
    Polynomial(Vec<Vec<MPoly>>),
}

/// Canonical height per group: log max |ξᵢⱼ| of coprime integer
/// representatives, or max deg_t of coprime polynomial representatives.
pub fn canonical_point_height(coords: &PointCoords) -> Result<Vec<HeightScalar>, MeasureError> {
    match coords {
        PointCoords::Integer(groups) => groups
            .iter()
            .enumerate()
            .map(|(i, g)| {
                let c = g.iter().fold(BigInt::zero(), |a, b| a.gcd(b));
                if c.is_zero() {
                    return Err(MeasureError::ZeroPoint(i));
                }
                let m = g.iter().map(|x| (x / &c).abs()).max().unwrap();
                Ok(HeightScalar::Real(log_bigint(&m)))
            })
            .collect(),
        PointCoords::Polynomial(groups) => groups
            .iter()
            .enumerate()
            .map(|(i, g)| {
                let nonzero: Vec<&MPoly> = g.iter().filter(|p| !p.is_zero()).collect();
                if nonzero.is_empty() {
                    return Err(MeasureError::ZeroPoint(i));
                }
                let mut c = nonzero[0].clone();
                for p in &nonzero[1..] {
                    c = gcd(&c, p);
                }
                let cd = c.total_degree().unwrap_or(0);
                let m = nonzero.iter().map(|p| p.total_degree().unwrap_or(0)).max().unwrap();
                Ok(HeightScalar::Exact(BigInt::from(m - cd)))
            })
            .collect(),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DivisorMode {
    CanonicalZ,
    FunctionField,
}

#[derive(Clone, Debug, PartialEq)]
pub struct DivisorHeight {
    pub value: HeightScalar,
    pub radius: f64,
}

/// Content of `f` as a polynomial in the non-parameter variables with
/// coefficients in ℚ[t].
pub fn content_over_t(f: &MPoly) -> MPoly {
    let spec = f.spec();
    let xvars: Vec<usize> = (0..spec.nvars())
        .filter(|&v| spec.group(spec.group_of_var(v)).kind != GroupKind::Parameter)
        .collect();
    let mut c: Option<MPoly> = None;
    for (_, coeff) in f.split_by(&xvars) {
        c = Some(match c {
            None => coeff,
            Some(acc) => gcd(&acc, &coeff),
        });
    }
    c.unwrap_or_else(|| MPoly::zero(spec, f.domain()))
}

/// Height of the divisor of a primitive multihomogeneous `f`: its Mahler
/// measure (canonical mode) or its t-degree (function-field mode).
pub fn divisor_height(f: &MPoly, mode: DivisorMode, tol: f64) -> Result<DivisorHeight, MeasureError> {
    if f.is_zero() {
        return Err(MeasureError::ZeroPolynomial);
    }
    let spec = f.spec();
    match mode {
        DivisorMode::CanonicalZ => {
            f.require_integer()?;
            let (content, _) = f.content_and_primitive()?;
            if !content.is_one() {
                return Err(MeasureError::NotPrimitive(content.to_string()));
            }
            if f.is_multihomogeneous().is_none() {
                return Err(MeasureError::NotMultihomogeneous);
            }
            // m is unchanged by dehomogenizing one variable per group
            let fixed: Vec<(usize, BigRational)> = spec
                .groups_of_kind(GroupKind::Projective)
                .iter()
                .map(|&g| (spec.group_range(g).start, BigRational::one()))
                .collect();
            let g = f.eval_partial(&fixed);
            let est = mahler_estimate(&g, MahlerMethod::TorusQuadrature, tol)?;
            Ok(DivisorHeight { value: HeightScalar::Real(est.estimate), radius: est.radius })
        }
        DivisorMode::FunctionField => {
            let c = content_over_t(f);
            if !c.is_constant() {
                return Err(MeasureError::NotPrimitive(c.to_string()));
            }
            // without a parameter group the divisor is defined over k
            let h = if spec.groups_of_kind(GroupKind::Parameter).is_empty() { 0 } else { height_t(f)? };
            Ok(DivisorHeight { value: HeightScalar::Exact(BigInt::from(h)), radius: 0.0 })
        }
    }
}
