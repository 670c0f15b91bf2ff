//! Closed-form degree and height bounds for Bézout identities and implicit
//! equations, Newton regions, and support containment and hull checks.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use thiserror::Error;

use crate::measures::{approx_le, height_inf, MeasureError};
use crate::poly::{GroupKind, MPoly};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum BoundError {
    #[error(transparent)]
    Measure(#[from] MeasureError),
    #[error("{s} inputs on a variety of dimension {r}: at most r+1 are allowed here")]
    TooManyInputs { s: usize, r: usize },
    #[error("no inputs")]
    NoInputs,
    #[error("field `{0}` has the wrong length")]
    Length(&'static str),
    #[error("degrees must be at least 1")]
    ZeroDegree,
    #[error("the zero polynomial has no support")]
    ZeroPolynomial,
    #[error("support points have dimension {got}, region has {expected}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("hull computations are limited to dimension 4, got {0}")]
    DimensionTooLarge(usize),
    #[error("the region has no exact description")]
    NotExact,
}

/// Inputs of the bounds. `delta[l][j]` is the degree of `f_j` in parameter
/// group `l`; `h_v_t[l]` the height of `V` over that group.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Invariants {
    pub n: usize,
    pub r: usize,
    pub d: Vec<u64>,
    pub h: Vec<f64>,
    pub delta: Vec<Vec<u64>>,
    pub supp: Vec<u64>,
    pub p: Vec<usize>,
    pub deg_v: u64,
    pub h_v: f64,
    pub h_v_t: Vec<u64>,
    pub d0: u64,
    pub h0: f64,
    pub h0_t: u64,
}

impl Invariants {
    /// `V = Aⁿ` with the given input degrees and heights.
    pub fn affine_space(n: usize, d: &[u64], h: &[f64]) -> Invariants {
        Invariants { n, r: n, d: d.to_vec(), h: h.to_vec(), deg_v: 1, d0: 1, ..Default::default() }
    }

    fn s(&self) -> usize {
        self.d.len()
    }

    fn check(&self, need_heights: bool) -> Result<(), BoundError> {
        if self.d.is_empty() {
            return Err(BoundError::NoInputs);
        }
        if self.d.contains(&0) {
            return Err(BoundError::ZeroDegree);
        }
        if need_heights && self.h.len() != self.s() {
            return Err(BoundError::Length("h"));
        }
        if self.delta.iter().any(|row| row.len() != self.s()) {
            return Err(BoundError::Length("delta"));
        }
        Ok(())
    }

    fn weak_pre(&self) -> Result<(), BoundError> {
        if self.s() > self.r + 1 {
            return Err(BoundError::TooManyInputs { s: self.s(), r: self.r });
        }
        Ok(())
    }

    fn group_height(&self, l: usize) -> u64 {
        self.h_v_t.get(l).copied().unwrap_or(0)
    }
}

/// Which bound produced a value, with the inputs it used.
#[derive(Clone, Debug, PartialEq)]
pub struct Provenance {
    pub bound: &'static str,
    pub inputs: String,
}

impl Provenance {
    fn new(bound: &'static str, inv: &Invariants) -> Provenance {
        let inputs = format!(
            "n={} r={} d={:?} h={:?} deg(V)={} h(V)={} delta={:?}",
            inv.n, inv.r, inv.d, inv.h, inv.deg_v, inv.h_v, inv.delta
        );
        Provenance { bound, inputs }
    }
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} [{}]", self.bound, self.inputs)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct WeakBound {
    pub deg: BigInt,
    pub ht: f64,
    pub provenance: Provenance,
}

#[derive(Clone, Debug, PartialEq)]
pub struct GroupsBound {
    pub deg: BigInt,
    pub t_deg: Vec<BigInt>,
    pub ht: f64,
    pub provenance: Provenance,
}

#[derive(Clone, Debug, PartialEq)]
pub struct StrongBound {
    pub mu: BigInt,
    pub deg: BigInt,
    pub ht: f64,
    pub provenance: Provenance,
}

#[derive(Clone, Debug, PartialEq)]
pub struct FfBound {
    pub deg: BigInt,
    pub t_deg: Vec<BigInt>,
    pub provenance: Provenance,
}

#[derive(Clone, Debug, PartialEq)]
pub struct StrongFfBound {
    pub mu: BigInt,
    pub deg: BigInt,
    pub t_deg: BigInt,
    pub provenance: Provenance,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HeightKind {
    Ff,
    Z,
}

#[derive(Clone, Debug, PartialEq)]
pub struct MixedBound {
    pub deg: BigInt,
    /// Exact for `Ff`.
    pub t_deg: Option<BigInt>,
    /// Present for `Z`.
    pub ht: Option<f64>,
    pub provenance: Provenance,
}

fn product(ds: &[u64]) -> BigInt {
    ds.iter().fold(BigInt::one(), |acc, &d| acc * BigInt::from(d))
}

fn product_f(ds: &[u64]) -> f64 {
    ds.iter().map(|&d| d as f64).product()
}

fn ln(x: f64) -> f64 {
    x.ln()
}

/// `Σ_ℓ c_ℓ ∏_{j≠ℓ} d_j`, exact.
fn cofactor_sum(d: &[u64], c: &[u64]) -> BigInt {
    (0..d.len())
        .map(|l| {
            let rest: Vec<u64> = d.iter().enumerate().filter(|&(j, _)| j != l).map(|(_, &v)| v).collect();
            product(&rest) * BigInt::from(c[l])
        })
        .sum()
}

/// Weak Nullstellensatz over ℤ, one group of variables and no parameters.
pub fn weak_z(inv: &Invariants) -> Result<WeakBound, BoundError> {
    inv.check(true)?;
    inv.weak_pre()?;
    let dv = inv.deg_v as f64;
    let sum: f64 = inv.h.iter().zip(&inv.d).map(|(h, &d)| h / d as f64).sum();
    let ht = product_f(&inv.d) * (inv.h_v + dv * (sum + (4 * inv.r + 8) as f64 * ln(inv.n as f64 + 3.0)));
    Ok(WeakBound { deg: product(&inv.d) * BigInt::from(inv.deg_v), ht, provenance: Provenance::new("weak_Z", inv) })
}

/// Weak Nullstellensatz over ℤ with groups of parameters and support sizes.
pub fn weak_z_groups(inv: &Invariants) -> Result<GroupsBound, BoundError> {
    inv.check(true)?;
    inv.weak_pre()?;
    if inv.supp.len() != inv.s() {
        return Err(BoundError::Length("supp"));
    }
    if inv.p.len() != inv.delta.len() {
        return Err(BoundError::Length("p"));
    }
    let deg = product(&inv.d) * BigInt::from(inv.deg_v);
    let t_deg = inv.delta.iter().map(|row| cofactor_sum(&inv.d, row) * BigInt::from(inv.deg_v)).collect();
    let dv = inv.deg_v as f64;
    let mut sum = (3 * inv.r + 7) as f64 * ln(inv.n as f64 + 3.0);
    for j in 0..inv.s() {
        let mut inner = inv.h[j] + ln(inv.supp[j] as f64);
        for (l, row) in inv.delta.iter().enumerate() {
            inner += 2.0 * row[j] as f64 * ln(inv.p[l] as f64 + 1.0);
        }
        sum += inner / inv.d[j] as f64;
    }
    let ht = product_f(&inv.d) * (inv.h_v + dv * sum);
    Ok(GroupsBound { deg, t_deg, ht, provenance: Provenance::new("weak_Z_groups", inv) })
}

fn sorted_desc(d: &[u64]) -> Vec<u64> {
    let mut v = d.to_vec();
    v.sort_unstable_by(|a, b| b.cmp(a));
    v
}

/// Strong Nullstellensatz over ℤ; `h` is taken as the largest input height.
pub fn strong_z(inv: &Invariants) -> Result<StrongBound, BoundError> {
    inv.check(true)?;
    let s = inv.s();
    let d = sorted_desc(&inv.d);
    let k = s.min(inv.r + 1);
    let big_d = product(&d[..k]);
    let big_df = product_f(&d[..k]);
    let d0 = inv.d0.max(1);
    let dv = inv.deg_v as f64;
    let h = inv.h.iter().cloned().fold(0.0, f64::max);
    let c = (6 * inv.r + 17) as f64 * ln(inv.n as f64 + 4.0)
        + 3.0 * (inv.r + 1) as f64 * ln(((s as f64) - inv.r as f64).max(1.0));
    let sum: f64 = d[..k].iter().map(|&dl| h / dl as f64).sum();
    let ht = 2.0 * d0 as f64 * big_df * (inv.h_v + dv * (3.0 * inv.h0 / (2.0 * d0 as f64) + sum + c));
    Ok(StrongBound {
        mu: BigInt::from(2u32) * &big_d * BigInt::from(inv.deg_v),
        deg: BigInt::from(4u32) * BigInt::from(d0) * big_d * BigInt::from(inv.deg_v),
        ht,
        provenance: Provenance::new("strong_Z", inv),
    })
}

/// Weak parametric Nullstellensatz, one parameter group (`delta[0]`).
pub fn weak_ff(inv: &Invariants) -> Result<FfBound, BoundError> {
    let mut b = weak_ff_groups(inv)?;
    b.t_deg.truncate(1);
    b.provenance.bound = "weak_ff";
    Ok(b)
}

/// Weak parametric Nullstellensatz, one bound per parameter group.
pub fn weak_ff_groups(inv: &Invariants) -> Result<FfBound, BoundError> {
    inv.check(false)?;
    inv.weak_pre()?;
    if inv.delta.is_empty() {
        return Err(BoundError::Length("delta"));
    }
    let pd = product(&inv.d);
    let deg = &pd * BigInt::from(inv.deg_v);
    let t_deg = inv
        .delta
        .iter()
        .enumerate()
        .map(|(l, row)| &pd * BigInt::from(inv.group_height(l)) + cofactor_sum(&inv.d, row) * BigInt::from(inv.deg_v))
        .collect();
    Ok(FfBound { deg, t_deg, provenance: Provenance::new("weak_ff_groups", inv) })
}

/// Strong parametric Nullstellensatz, one parameter group.
pub fn strong_ff(inv: &Invariants) -> Result<StrongFfBound, BoundError> {
    inv.check(false)?;
    if inv.delta.is_empty() {
        return Err(BoundError::Length("delta"));
    }
    let s = inv.s();
    let d = sorted_desc(&inv.d);
    let k = s.min(inv.r + 1);
    let big_d = product(&d[..k]);
    let d0 = BigInt::from(inv.d0.max(1));
    let dv = BigInt::from(inv.deg_v);
    let h = BigInt::from(*inv.delta[0].iter().max().unwrap_or(&0));
    // 2d₀D(h(V) + deg V(3h₀/2d₀ + Σ h/d_ℓ)) with every quotient exact
    let quotients: BigInt = d[..k].iter().map(|&dl| &big_d / BigInt::from(dl)).sum();
    let t_deg = BigInt::from(2u32) * &d0 * &big_d * BigInt::from(inv.group_height(0))
        + &dv * (BigInt::from(3u32) * BigInt::from(inv.h0_t) * &big_d + BigInt::from(2u32) * &d0 * h * quotients);
    Ok(StrongFfBound {
        mu: BigInt::from(2u32) * &big_d * &dv,
        deg: BigInt::from(4u32) * d0 * big_d * dv,
        t_deg,
        provenance: Provenance::new("strong_ff", inv),
    })
}

/// Arbitrarily many inputs, the last one distinguished. For `Ff` the
/// heights are read from `delta[0]`.
pub fn mixed_s(inv: &Invariants, kind: HeightKind) -> Result<MixedBound, BoundError> {
    inv.check(kind == HeightKind::Z)?;
    let s = inv.s();
    let head = sorted_desc(&inv.d[..s - 1]);
    let ds = inv.d[s - 1];
    let k = (s - 1).min(inv.r);
    let p = product(&head[..k]) * BigInt::from(ds);
    let deg = &p * BigInt::from(inv.deg_v);
    match kind {
        HeightKind::Ff => {
            if inv.delta.is_empty() {
                return Err(BoundError::Length("delta"));
            }
            let row = &inv.delta[0];
            let h = BigInt::from(*row[..s - 1].iter().max().unwrap_or(&0));
            let hs = BigInt::from(row[s - 1]);
            let quotients: BigInt = head[..k].iter().map(|&dl| &p / BigInt::from(dl)).sum();
            let t_deg = &p * BigInt::from(inv.group_height(0))
                + BigInt::from(inv.deg_v) * (hs * (&p / BigInt::from(ds)) + h * quotients);
            Ok(MixedBound { deg, t_deg: Some(t_deg), ht: None, provenance: Provenance::new("mixed_S_ff", inv) })
        }
        HeightKind::Z => {
            let h = inv.h[..s - 1].iter().cloned().fold(0.0, f64::max);
            let hs = inv.h[s - 1];
            let pf = p.to_f64().unwrap_or(f64::INFINITY);
            let sum: f64 = head[..k].iter().map(|&dl| h / dl as f64).sum();
            let c = (6 * inv.r + 9) as f64 * ln(inv.n as f64 + 3.0)
                + 3.0 * inv.r as f64 * ln(((s as f64) - inv.r as f64).max(1.0));
            let ht = pf * (inv.h_v + inv.deg_v as f64 * (hs / ds as f64 + sum + c));
            Ok(MixedBound { deg, t_deg: None, ht: Some(ht), provenance: Provenance::new("mixed_S_Z", inv) })
        }
    }
}

/// `⟨w, x⟩ ≤ β`. `exact` carries integer data when the bound is exact.
#[derive(Clone, Debug, PartialEq)]
pub struct HalfSpace {
    pub w: Vec<f64>,
    pub beta: f64,
    pub exact: Option<(Vec<BigInt>, BigInt)>,
    pub label: String,
}

impl HalfSpace {
    fn exact(w: Vec<BigInt>, beta: BigInt, label: impl Into<String>) -> HalfSpace {
        HalfSpace {
            w: w.iter().map(|v| v.to_f64().unwrap_or(f64::INFINITY)).collect(),
            beta: beta.to_f64().unwrap_or(f64::INFINITY),
            exact: Some((w, beta)),
            label: label.into(),
        }
    }

    fn real(w: Vec<f64>, beta: f64, label: impl Into<String>) -> HalfSpace {
        HalfSpace { w, beta, exact: None, label: label.into() }
    }
}

/// Intersection of the nonnegative orthant with finitely many half-spaces.
/// Coordinates are the exponents `a` followed by one coordinate per
/// parameter group (or the height ordinate `λ` in extended regions).
#[derive(Clone, Debug, PartialEq)]
pub struct NewtonRegion {
    pub dim: usize,
    pub halfspaces: Vec<HalfSpace>,
    pub extended: bool,
    /// Scalar bounds that are not half-spaces (rational variants).
    pub scalars: Vec<(String, f64)>,
    pub provenance: Provenance,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PerronVariant {
    Param,
    Z,
    ZNonFinite,
    RationalParam,
    RationalZ,
}

/// Newton region for an implicit equation of `r+1` polynomials `q_j` of
/// degrees `d` on `V`. `Param` reads t-degrees from `delta`; the ℤ variants
/// read heights from `h`.
pub fn perron_region(inv: &Invariants, variant: PerronVariant) -> Result<NewtonRegion, BoundError> {
    let needs_h = matches!(variant, PerronVariant::Z | PerronVariant::ZNonFinite | PerronVariant::RationalZ);
    inv.check(needs_h)?;
    let k = inv.s();
    let pd = product(&inv.d);
    let pdf = product_f(&inv.d);
    let dv = BigInt::from(inv.deg_v);
    let m = inv.delta.len();
    let degree_space = |dim: usize| {
        let mut w: Vec<BigInt> = inv.d.iter().map(|&d| BigInt::from(d)).collect();
        w.resize(dim, BigInt::zero());
        HalfSpace::exact(w, &pd * &dv, "<d,a> <= prod(d) deg V")
    };
    let axis_bounds = |dim: usize| -> Vec<HalfSpace> {
        (0..k)
            .map(|i| {
                let rest: Vec<u64> = inv.d.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, &v)| v).collect();
                let mut w = vec![BigInt::zero(); dim];
                w[i] = BigInt::one();
                HalfSpace::exact(w, product(&rest) * &dv, format!("deg_y{} E", i + 1))
            })
            .collect()
    };
    let t_bound = |l: usize| &pd * BigInt::from(inv.group_height(l)) + cofactor_sum(&inv.d, &inv.delta[l]) * &dv;
    let z_height = |constant: f64| {
        let sum: f64 = inv.h.iter().zip(&inv.d).map(|(h, &d)| h / d as f64).sum();
        pdf * (inv.h_v + inv.deg_v as f64 * (sum + constant))
    };
    let provenance = Provenance::new(
        match variant {
            PerronVariant::Param => "perron_param",
            PerronVariant::Z => "perron_Z",
            PerronVariant::ZNonFinite => "perron_Z_nonfinite",
            PerronVariant::RationalParam => "perron_rational_param",
            PerronVariant::RationalZ => "perron_rational_Z",
        },
        inv,
    );
    let region = match variant {
        PerronVariant::Param => {
            let dim = k + m;
            let mut hs = vec![degree_space(dim)];
            for l in 0..m {
                let mut w: Vec<BigInt> = inv.delta[l].iter().map(|&v| BigInt::from(v)).collect();
                w.resize(dim, BigInt::zero());
                w[k + l] = BigInt::one();
                hs.push(HalfSpace::exact(w, t_bound(l), format!("c{} + <h,a> <= t-bound", l + 1)));
            }
            NewtonRegion { dim, halfspaces: hs, extended: false, scalars: Vec::new(), provenance }
        }
        PerronVariant::Z | PerronVariant::ZNonFinite => {
            let dim = k + 1;
            let n = inv.n as f64;
            // with support sizes the sharper per-input form is used
            let constant = if inv.supp.len() == k && inv.p.len() == m {
                let extra = if variant == PerronVariant::Z { 2.0 } else { 3.0 };
                let mut c = ln((inv.r + 2) as f64);
                for j in 0..k {
                    let mut inner = ln(inv.supp[j] as f64 + extra);
                    if variant == PerronVariant::ZNonFinite {
                        inner += ln(2.0);
                    }
                    for l in 0..m {
                        inner += inv.delta[l][j] as f64 * ln(inv.p[l] as f64 + 1.0);
                    }
                    c += inner / inv.d[j] as f64;
                }
                c
            } else if variant == PerronVariant::Z {
                (inv.r + 2) as f64 * ln(n + 3.0)
            } else {
                (inv.r + 2) as f64 * ln(2.0 * n + 8.0)
            };
            let mut w = inv.h.clone();
            w.push(1.0);
            let hs = vec![degree_space(dim), HalfSpace::real(w, z_height(constant), "lambda + <h,a> <= height bound")];
            NewtonRegion { dim, halfspaces: hs, extended: true, scalars: Vec::new(), provenance }
        }
        PerronVariant::RationalParam => {
            let dim = k + m;
            let mut hs = axis_bounds(dim);
            let mut scalars = Vec::new();
            for l in 0..m {
                let b = t_bound(l);
                let mut w = vec![BigInt::zero(); dim];
                w[k + l] = BigInt::one();
                scalars.push((format!("deg_t{} E", l + 1), b.to_f64().unwrap_or(f64::INFINITY)));
                hs.push(HalfSpace::exact(w, b, format!("c{} <= deg_t bound", l + 1)));
            }
            NewtonRegion { dim, halfspaces: hs, extended: false, scalars, provenance }
        }
        PerronVariant::RationalZ => {
            let hs = axis_bounds(k);
            let scalars = vec![("m(E)".to_string(), z_height(0.0))];
            NewtonRegion { dim: k, halfspaces: hs, extended: false, scalars, provenance }
        }
    };
    Ok(region)
}

/// The implicit variables of `E`: every variable outside parameter groups.
fn exponent_vars(e: &MPoly) -> (Vec<usize>, Vec<Vec<usize>>) {
    let spec = e.spec();
    let mut a = Vec::new();
    let mut t = Vec::new();
    for g in 0..spec.ngroups() {
        if spec.group(g).kind == GroupKind::Parameter {
            t.push(spec.group_range(g).collect());
        } else {
            a.extend(spec.group_range(g));
        }
    }
    (a, t)
}

/// Support points `(a, ⟨1,c_1⟩, …, ⟨1,c_m⟩)` of `E`.
pub fn newton_points(e: &MPoly) -> Vec<Vec<i64>> {
    let (a, t) = exponent_vars(e);
    let set: BTreeSet<Vec<i64>> = e
        .terms()
        .map(|(x, _)| {
            let mut p: Vec<i64> = a.iter().map(|&v| x[v] as i64).collect();
            p.extend(t.iter().map(|g| g.iter().map(|&v| x[v] as i64).sum::<i64>()));
            p
        })
        .collect();
    set.into_iter().collect()
}

/// Extended points `(a, h(α_a))` of `E = Σ α_a y^a`.
pub fn extended_points(e: &MPoly) -> Result<Vec<Vec<f64>>, BoundError> {
    let (a, _) = exponent_vars(e);
    let mut out = Vec::new();
    for (key, coeff) in e.split_by(&a) {
        let mut p: Vec<f64> = key.iter().map(|&k| k as f64).collect();
        p.push(height_inf(&coeff)?);
        out.push(p);
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq)]
pub struct Violation {
    pub point: Vec<f64>,
    pub halfspace: usize,
    pub excess: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct NewtonCheck {
    pub contained: bool,
    pub violations: Vec<Violation>,
}

/// Checks that every support point of `E` satisfies every half-space:
/// exactly for integer data, within tolerance otherwise.
pub fn newton_check(e: &MPoly, region: &NewtonRegion, extended: bool) -> Result<NewtonCheck, BoundError> {
    if e.is_zero() {
        return Err(BoundError::ZeroPolynomial);
    }
    let mut violations = Vec::new();
    if extended {
        let pts = extended_points(e)?;
        for pt in &pts {
            if pt.len() != region.dim {
                return Err(BoundError::DimensionMismatch { expected: region.dim, got: pt.len() });
            }
            for (i, hs) in region.halfspaces.iter().enumerate() {
                let lhs: f64 = hs.w.iter().zip(pt).map(|(w, x)| w * x).sum();
                if !approx_le(lhs, hs.beta) {
                    violations.push(Violation { point: pt.clone(), halfspace: i, excess: lhs - hs.beta });
                }
            }
        }
    } else {
        for pt in newton_points(e) {
            if pt.len() != region.dim {
                return Err(BoundError::DimensionMismatch { expected: region.dim, got: pt.len() });
            }
            let ptf: Vec<f64> = pt.iter().map(|&x| x as f64).collect();
            for (i, hs) in region.halfspaces.iter().enumerate() {
                let ok = match &hs.exact {
                    Some((w, beta)) => {
                        let lhs: BigInt = w.iter().zip(&pt).map(|(w, &x)| w * BigInt::from(x)).sum();
                        lhs <= *beta
                    }
                    None => approx_le(hs.w.iter().zip(&ptf).map(|(w, x)| w * x).sum(), hs.beta),
                };
                if !ok {
                    let lhs: f64 = hs.w.iter().zip(&ptf).map(|(w, x)| w * x).sum();
                    violations.push(Violation { point: ptf.clone(), halfspace: i, excess: lhs - hs.beta });
                }
            }
        }
    }
    Ok(NewtonCheck { contained: violations.is_empty(), violations })
}

fn det_i128(m: &[Vec<i128>]) -> i128 {
    // Bareiss elimination; exact for integer matrices
    let n = m.len();
    if n == 0 {
        return 1;
    }
    let mut a: Vec<Vec<i128>> = m.to_vec();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if a[k][k] == 0 {
            match (k + 1..n).find(|&i| a[i][k] != 0) {
                Some(i) => {
                    a.swap(i, k);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    sign * a[n - 1][n - 1]
}

/// Pivot coordinates of the span of the difference vectors, found by
/// rational row reduction.
fn affine_pivots(points: &[Vec<i64>]) -> Vec<usize> {
    let dim = points[0].len();
    let mut rows: Vec<Vec<BigRational>> = points[1..]
        .iter()
        .map(|p| p.iter().zip(&points[0]).map(|(a, b)| BigRational::from_integer(BigInt::from(a - b))).collect())
        .collect();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..dim {
        let Some(pr) = (row..rows.len()).find(|&i| !rows[i][col].is_zero()) else { continue };
        rows.swap(row, pr);
        let pivot = rows[row][col].clone();
        for i in 0..rows.len() {
            if i != row && !rows[i][col].is_zero() {
                let factor = &rows[i][col] / &pivot;
                for j in col..dim {
                    let delta = &factor * &rows[row][j];
                    rows[i][j] -= delta;
                }
            }
        }
        pivots.push(col);
        row += 1;
        if row == rows.len() {
            break;
        }
    }
    pivots
}

/// Vertices of the convex hull of integer points, in dimension at most 4.
/// Lower-dimensional hulls are handled in an injective coordinate
/// projection of their affine span.
pub fn hull_vertices(points: &[Vec<i64>]) -> Result<Vec<Vec<i64>>, BoundError> {
    let pts: Vec<Vec<i64>> = points.iter().cloned().collect::<BTreeSet<_>>().into_iter().collect();
    if pts.len() <= 1 {
        return Ok(pts);
    }
    let dim = pts[0].len();
    if dim > 4 {
        return Err(BoundError::DimensionTooLarge(dim));
    }
    let pivots = affine_pivots(&pts);
    let k = pivots.len();
    let proj: Vec<Vec<i128>> = pts.iter().map(|p| pivots.iter().map(|&c| p[c] as i128).collect()).collect();
    let keep: Vec<bool> = if k == 1 {
        let min = proj.iter().map(|p| p[0]).min().unwrap();
        let max = proj.iter().map(|p| p[0]).max().unwrap();
        proj.iter().map(|p| p[0] == min || p[0] == max).collect()
    } else {
        full_dimensional_vertices(&proj, k)
    };
    Ok(pts.into_iter().zip(keep).filter(|(_, v)| *v).map(|(p, _)| p).collect())
}

/// Normal of the hyperplane through `k` points in `k` dimensions, by
/// cofactors of the difference vectors.
fn hyperplane_normal(base: &[i128], others: &[&Vec<i128>], k: usize) -> Vec<i128> {
    let diffs: Vec<Vec<i128>> = others.iter().map(|p| p.iter().zip(base).map(|(a, b)| a - b).collect()).collect();
    (0..k)
        .map(|c| {
            let minor: Vec<Vec<i128>> =
                diffs.iter().map(|row| row.iter().enumerate().filter(|&(j, _)| j != c).map(|(_, &v)| v).collect()).collect();
            let sign = if c % 2 == 0 { 1 } else { -1 };
            sign * det_i128(&minor)
        })
        .collect()
}

fn gcd_i128(a: i128, b: i128) -> i128 {
    if b == 0 {
        a.abs()
    } else {
        gcd_i128(b, a % b)
    }
}

fn full_dimensional_vertices(pts: &[Vec<i128>], k: usize) -> Vec<bool> {
    let n = pts.len();
    let mut facets: BTreeSet<(Vec<i128>, i128)> = BTreeSet::new();
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        let others: Vec<&Vec<i128>> = idx[1..].iter().map(|&i| &pts[i]).collect();
        let normal = hyperplane_normal(&pts[idx[0]], &others, k);
        if normal.iter().any(|&v| v != 0) {
            let g = normal.iter().fold(0, |acc, &v| gcd_i128(acc, v));
            let mut normal: Vec<i128> = normal.iter().map(|v| v / g).collect();
            let mut off: i128 = normal.iter().zip(&pts[idx[0]]).map(|(a, b)| a * b).sum();
            let mut above = false;
            let mut below = false;
            for p in pts {
                let v: i128 = normal.iter().zip(p).map(|(a, b)| a * b).sum();
                above |= v > off;
                below |= v < off;
                if above && below {
                    break;
                }
            }
            if !(above && below) {
                if above {
                    normal.iter_mut().for_each(|v| *v = -*v);
                    off = -off;
                }
                facets.insert((normal, off));
            }
        }
        // next k-subset
        let mut i = k;
        loop {
            if i == 0 {
                return vertices_from_facets(pts, &facets, k);
            }
            i -= 1;
            if idx[i] < n - k + i {
                idx[i] += 1;
                for j in i + 1..k {
                    idx[j] = idx[j - 1] + 1;
                }
                break;
            }
        }
    }
}

fn rank_i128(rows: &[Vec<i128>]) -> usize {
    let rat: Vec<Vec<BigRational>> =
        rows.iter().map(|r| r.iter().map(|&v| BigRational::from_integer(BigInt::from(v))).collect()).collect();
    rank_rational(rat)
}

fn rank_rational(mut rows: Vec<Vec<BigRational>>) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let cols = rows[0].len();
    let mut rank = 0;
    for col in 0..cols {
        let Some(pr) = (rank..rows.len()).find(|&i| !rows[i][col].is_zero()) else { continue };
        rows.swap(rank, pr);
        for i in rank + 1..rows.len() {
            if !rows[i][col].is_zero() {
                let factor = &rows[i][col] / &rows[rank][col];
                for j in col..cols {
                    let delta = &factor * &rows[rank][j];
                    rows[i][j] -= delta;
                }
            }
        }
        rank += 1;
    }
    rank
}

fn vertices_from_facets(pts: &[Vec<i128>], facets: &BTreeSet<(Vec<i128>, i128)>, k: usize) -> Vec<bool> {
    pts.iter()
        .map(|p| {
            let tight: Vec<Vec<i128>> = facets
                .iter()
                .filter(|(nrm, off)| nrm.iter().zip(p).map(|(a, b)| a * b).sum::<i128>() == *off)
                .map(|(nrm, _)| nrm.clone())
                .collect();
            tight.len() >= k && rank_i128(&tight) == k
        })
        .collect()
}

/// Vertices of an exact region (orthant plus half-spaces), dimension ≤ 4.
pub fn region_vertices(region: &NewtonRegion) -> Result<Vec<Vec<BigRational>>, BoundError> {
    let dim = region.dim;
    if dim > 4 {
        return Err(BoundError::DimensionTooLarge(dim));
    }
    let q = |v: &BigInt| BigRational::from_integer(v.clone());
    let mut cons: Vec<(Vec<BigRational>, BigRational)> = Vec::new();
    for hs in &region.halfspaces {
        let (w, beta) = hs.exact.as_ref().ok_or(BoundError::NotExact)?;
        cons.push((w.iter().map(q).collect(), q(beta)));
    }
    for i in 0..dim {
        let mut w = vec![BigRational::zero(); dim];
        w[i] = -BigRational::one();
        cons.push((w, BigRational::zero()));
    }
    let mut out: BTreeSet<Vec<BigRational>> = BTreeSet::new();
    let nc = cons.len();
    let mut idx: Vec<usize> = (0..dim).collect();
    if nc < dim {
        return Ok(Vec::new());
    }
    loop {
        if let Some(x) = solve_rational(idx.iter().map(|&i| cons[i].clone()).collect()) {
            let feasible = cons.iter().all(|(w, b)| {
                let lhs: BigRational = w.iter().zip(&x).map(|(a, b)| a * b).sum();
                lhs <= *b
            });
            if feasible {
                out.insert(x);
            }
        }
        let mut i = dim;
        loop {
            if i == 0 {
                return Ok(out.into_iter().collect());
            }
            i -= 1;
            if idx[i] < nc - dim + i {
                idx[i] += 1;
                for j in i + 1..dim {
                    idx[j] = idx[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// Unique solution of a square system `w·x = b`, if any.
fn solve_rational(rows: Vec<(Vec<BigRational>, BigRational)>) -> Option<Vec<BigRational>> {
    let n = rows.len();
    let mut m: Vec<Vec<BigRational>> = rows
        .into_iter()
        .map(|(mut w, b)| {
            w.push(b);
            w
        })
        .collect();
    for col in 0..n {
        let pr = (col..n).find(|&i| !m[i][col].is_zero())?;
        m.swap(col, pr);
        let pivot = m[col][col].clone();
        for j in col..=n {
            m[col][j] = &m[col][j] / &pivot;
        }
        for i in 0..n {
            if i != col && !m[i][col].is_zero() {
                let factor = m[i][col].clone();
                for j in col..=n {
                    let delta = &factor * &m[col][j];
                    m[i][j] -= delta;
                }
            }
        }
    }
    Some(m.into_iter().map(|row| row[n].clone()).collect())
}

/// Whether the Newton polytope of `E` equals the exact region.
pub fn hull_equals_region(e: &MPoly, region: &NewtonRegion) -> Result<bool, BoundError> {
    if e.is_zero() {
        return Err(BoundError::ZeroPolynomial);
    }
    let pts = newton_points(e);
    if pts[0].len() != region.dim {
        return Err(BoundError::DimensionMismatch { expected: region.dim, got: pts[0].len() });
    }
    let hull: BTreeSet<Vec<BigRational>> = hull_vertices(&pts)?
        .into_iter()
        .map(|p| p.into_iter().map(|v| BigRational::from_integer(BigInt::from(v))).collect())
        .collect();
    let reg: BTreeSet<Vec<BigRational>> = region_vertices(region)?.into_iter().collect();
    Ok(hull == reg)
}

/// Largest `h(α_a) + ⟨h, a⟩` over the support of `E`.
pub fn max_weighted_height(e: &MPoly, h: &[f64]) -> Result<f64, BoundError> {
    let pts = extended_points(e)?;
    let mut best = f64::NEG_INFINITY;
    for p in pts {
        let k = p.len() - 1;
        if h.len() != k {
            return Err(BoundError::DimensionMismatch { expected: k, got: h.len() });
        }
        let v = p[k] + p[..k].iter().zip(h).map(|(a, w)| a * w).sum::<f64>();
        best = best.max(v);
    }
    Ok(best)
}

