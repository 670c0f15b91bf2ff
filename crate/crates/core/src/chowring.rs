//! Classes in the Chow ring `ℤ[θ₁,…,θ_m]/(θᵢ^{nᵢ+1})` and in its extension
//! by a square-zero class `η` carrying heights.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::measures::{
    self, approx_le, canonical_point_height, DivisorMode, HeightScalar, MeasureError, PointCoords,
};
use crate::poly::{GroupKind, MPoly};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ChowError {
    #[error("dimension vectors differ: {0:?} vs {1:?}")]
    DimsMismatch(Vec<usize>, Vec<usize>),
    #[error("scalar kinds differ")]
    KindMismatch,
    #[error("expected {expected} classes, got {got}")]
    WrongCount { expected: usize, got: usize },
    #[error("class has a height part where only degrees are allowed")]
    NotPureDegree,
    #[error("dimension {r} exceeds ambient dimension {n}")]
    DimensionTooLarge { r: usize, n: usize },
    #[error("not a projective cycle summary")]
    NotSummary,
    #[error("polynomial is not multihomogeneous")]
    NotMultihomogeneous,
    #[error(transparent)]
    Measure(#[from] MeasureError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ScalarKind {
    /// Heights over ℤ, real numbers on the natural-log scale.
    Z,
    /// Heights over k[t], integers.
    Ff,
}

/// `Σ_a deg[a] θ^a + η Σ_a ht[a] θ^a`, keyed by θ-exponents `a ≤ n`.
#[derive(Clone, Debug, PartialEq)]
pub struct ChowClass {
    dims: Vec<usize>,
    kind: ScalarKind,
    deg: BTreeMap<Vec<u32>, BigInt>,
    ht: BTreeMap<Vec<u32>, HeightScalar>,
}

fn hs_zero(kind: ScalarKind) -> HeightScalar {
    match kind {
        ScalarKind::Z => HeightScalar::Real(0.0),
        ScalarKind::Ff => HeightScalar::Exact(BigInt::zero()),
    }
}

fn hs_add(a: &HeightScalar, b: &HeightScalar) -> HeightScalar {
    match (a, b) {
        (HeightScalar::Exact(x), HeightScalar::Exact(y)) => HeightScalar::Exact(x + y),
        _ => HeightScalar::Real(a.as_f64() + b.as_f64()),
    }
}

fn hs_scale(a: &HeightScalar, k: &BigInt) -> HeightScalar {
    match a {
        HeightScalar::Exact(x) => HeightScalar::Exact(x * k),
        HeightScalar::Real(x) => HeightScalar::Real(x * k.to_f64().unwrap_or(f64::NAN)),
    }
}

fn hs_is_zero(a: &HeightScalar) -> bool {
    match a {
        HeightScalar::Exact(x) => x.is_zero(),
        HeightScalar::Real(x) => *x == 0.0,
    }
}

fn hs_le(a: &HeightScalar, b: &HeightScalar) -> bool {
    match (a, b) {
        (HeightScalar::Exact(x), HeightScalar::Exact(y)) => x <= y,
        _ => approx_le(a.as_f64(), b.as_f64()),
    }
}

fn coerce(kind: ScalarKind, h: HeightScalar) -> HeightScalar {
    match (kind, h) {
        (ScalarKind::Z, HeightScalar::Exact(n)) => HeightScalar::Real(n.to_f64().unwrap_or(f64::NAN)),
        (_, h) => h,
    }
}

impl ChowClass {
    pub fn zero(dims: &[usize], kind: ScalarKind) -> ChowClass {
        ChowClass { dims: dims.to_vec(), kind, deg: BTreeMap::new(), ht: BTreeMap::new() }
    }

    /// The class of the whole space.
    pub fn one(dims: &[usize], kind: ScalarKind) -> ChowClass {
        let mut c = ChowClass::zero(dims, kind);
        c.deg.insert(vec![0; dims.len()], BigInt::from(1));
        c
    }

    pub fn theta(dims: &[usize], kind: ScalarKind, i: usize) -> ChowClass {
        let mut a = vec![0; dims.len()];
        a[i] = 1;
        ChowClass::zero(dims, kind).with_deg_term(a, BigInt::from(1))
    }

    pub fn eta(dims: &[usize], kind: ScalarKind) -> ChowClass {
        let h = match kind {
            ScalarKind::Z => HeightScalar::Real(1.0),
            ScalarKind::Ff => HeightScalar::Exact(BigInt::from(1)),
        };
        ChowClass::zero(dims, kind).with_ht_term(vec![0; dims.len()], h)
    }

    fn in_box(&self, a: &[u32]) -> bool {
        a.iter().zip(&self.dims).all(|(&x, &n)| x as usize <= n)
    }

    /// Adds `c θ^a`; terms outside the box vanish.
    pub fn with_deg_term(mut self, a: Vec<u32>, c: BigInt) -> ChowClass {
        if self.in_box(&a) && !c.is_zero() {
            let e = self.deg.entry(a.clone()).or_insert_with(BigInt::zero);
            *e += c;
            if e.is_zero() {
                self.deg.remove(&a);
            }
        }
        self
    }

    /// Adds `h η θ^a`.
    pub fn with_ht_term(mut self, a: Vec<u32>, h: HeightScalar) -> ChowClass {
        if self.in_box(&a) && !hs_is_zero(&h) {
            let h = coerce(self.kind, h);
            let kind = self.kind;
            let e = self.ht.entry(a.clone()).or_insert_with(|| hs_zero(kind));
            *e = hs_add(e, &h);
            if hs_is_zero(e) {
                self.ht.remove(&a);
            }
        }
        self
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn kind(&self) -> ScalarKind {
        self.kind
    }

    pub fn deg_terms(&self) -> &BTreeMap<Vec<u32>, BigInt> {
        &self.deg
    }

    pub fn ht_terms(&self) -> &BTreeMap<Vec<u32>, HeightScalar> {
        &self.ht
    }

    fn complement(&self, b: &[u32]) -> Option<Vec<u32>> {
        b.iter()
            .zip(&self.dims)
            .map(|(&x, &n)| (n as u32).checked_sub(x))
            .collect()
    }

    /// Coefficient of `θ^{n−b}`, the mixed degree of index `b`.
    pub fn deg_b(&self, b: &[u32]) -> BigInt {
        self.complement(b).and_then(|a| self.deg.get(&a).cloned()).unwrap_or_else(BigInt::zero)
    }

    /// Coefficient of `η θ^{n−c}`, the mixed height of index `c`.
    pub fn ht_c(&self, c: &[u32]) -> HeightScalar {
        self.complement(c)
            .and_then(|a| self.ht.get(&a).cloned())
            .unwrap_or_else(|| hs_zero(self.kind))
    }

    fn check(&self, other: &ChowClass) -> Result<(), ChowError> {
        if self.dims != other.dims {
            return Err(ChowError::DimsMismatch(self.dims.clone(), other.dims.clone()));
        }
        if self.kind != other.kind {
            return Err(ChowError::KindMismatch);
        }
        Ok(())
    }

    pub fn add(&self, other: &ChowClass) -> Result<ChowClass, ChowError> {
        self.check(other)?;
        let mut out = self.clone();
        for (a, c) in &other.deg {
            out = out.with_deg_term(a.clone(), c.clone());
        }
        for (a, h) in &other.ht {
            out = out.with_ht_term(a.clone(), h.clone());
        }
        Ok(out)
    }

    /// The class with its height part dropped.
    pub fn degree_part(&self) -> ChowClass {
        ChowClass { dims: self.dims.clone(), kind: self.kind, deg: self.deg.clone(), ht: BTreeMap::new() }
    }

    pub fn is_effective(&self) -> bool {
        self.deg.values().all(|c| !c.is_negative()) && self.ht.values().all(|h| h.as_f64() >= 0.0)
    }
}

impl fmt::Display for ChowClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mono = |a: &[u32]| -> String {
            let parts: Vec<String> = a
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| if e == 1 { format!("θ{}", i + 1) } else { format!("θ{}^{}", i + 1, e) })
                .collect();
            parts.join("*")
        };
        let mut parts = Vec::new();
        for (a, h) in self.ht.iter().rev() {
            let m = mono(a);
            parts.push(if m.is_empty() { format!("{h}*η") } else { format!("{h}*η*{m}") });
        }
        for (a, c) in self.deg.iter().rev() {
            let m = mono(a);
            parts.push(if m.is_empty() { c.to_string() } else { format!("{c}*{m}") });
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

fn add_exp(a: &[u32], b: &[u32]) -> Vec<u32> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

/// Product with `η² = 0` and `θᵢ^{nᵢ+1} = 0`.
pub fn cc_mul(a: &ChowClass, b: &ChowClass) -> Result<ChowClass, ChowError> {
    a.check(b)?;
    let mut out = ChowClass::zero(&a.dims, a.kind);
    for (ea, ca) in &a.deg {
        for (eb, cb) in &b.deg {
            out = out.with_deg_term(add_exp(ea, eb), ca * cb);
        }
        for (eb, hb) in &b.ht {
            out = out.with_ht_term(add_exp(ea, eb), hs_scale(hb, ca));
        }
    }
    for (ea, ha) in &a.ht {
        for (eb, cb) in &b.deg {
            out = out.with_ht_term(add_exp(ea, eb), hs_scale(ha, cb));
        }
    }
    Ok(out)
}

/// Coefficientwise comparison; real heights use the default tolerances.
pub fn cc_leq(a: &ChowClass, b: &ChowClass) -> Result<bool, ChowError> {
    a.check(b)?;
    let zero = BigInt::zero();
    for k in a.deg.keys().chain(b.deg.keys()) {
        if a.deg.get(k).unwrap_or(&zero) > b.deg.get(k).unwrap_or(&zero) {
            return Ok(false);
        }
    }
    let hz = hs_zero(a.kind);
    for k in a.ht.keys().chain(b.ht.keys()) {
        if !hs_le(a.ht.get(k).unwrap_or(&hz), b.ht.get(k).unwrap_or(&hz)) {
            return Ok(false);
        }
    }
    Ok(true)
}

fn projective_groups(f: &MPoly) -> (Vec<usize>, Vec<usize>) {
    let spec = f.spec();
    let gs = spec.groups_of_kind(GroupKind::Projective);
    let dims = gs.iter().map(|&g| spec.group(g).size - 1).collect();
    (gs, dims)
}

fn divisor_degree_part(f: &MPoly, kind: ScalarKind) -> Result<ChowClass, ChowError> {
    let (gs, dims) = projective_groups(f);
    let vars: Vec<Vec<usize>> = gs.iter().map(|&g| f.spec().group_range(g).collect()).collect();
    let mut c = ChowClass::zero(&dims, kind);
    for (i, vs) in vars.iter().enumerate() {
        let d = f.is_homogeneous_in(vs).ok_or(ChowError::NotMultihomogeneous)?;
        c = c.add(&ChowClass::theta(&dims, kind, i).scaled(&BigInt::from(d)))?;
    }
    Ok(c)
}

impl ChowClass {
    pub fn scaled(&self, k: &BigInt) -> ChowClass {
        let mut out = ChowClass::zero(&self.dims, self.kind);
        for (a, c) in &self.deg {
            out = out.with_deg_term(a.clone(), c * k);
        }
        for (a, h) in &self.ht {
            out = out.with_ht_term(a.clone(), hs_scale(h, k));
        }
        out
    }
}

/// `Σᵢ deg_{xᵢ}(f) θᵢ + h η`, with `h` the Mahler measure (ℤ) or the
/// t-degree (k[t]) of the primitive form `f`.
pub fn class_of_divisor(f: &MPoly, mode: DivisorMode, tol: f64) -> Result<ChowClass, ChowError> {
    let kind = match mode {
        DivisorMode::CanonicalZ => ScalarKind::Z,
        DivisorMode::FunctionField => ScalarKind::Ff,
    };
    let c = divisor_degree_part(f, kind)?;
    let h = measures::divisor_height(f, mode, tol)?;
    let zero = vec![0; c.dims.len()];
    Ok(c.with_ht_term(zero, h.value))
}

/// `log ‖f‖_sup η + Σ deg_{xᵢ}(f) θᵢ` with the ℓ¹ surrogate for the sup-norm.
pub fn class_sup(f: &MPoly) -> Result<ChowClass, ChowError> {
    let c = divisor_degree_part(f, ScalarKind::Z)?;
    let zero = vec![0; c.dims.len()];
    Ok(c.with_ht_term(zero, HeightScalar::Real(measures::sup_norm_upper_log(f).value)))
}

/// `Σᵢ ĥ(ξᵢ) η θ^{n−eᵢ} + θⁿ`.
pub fn class_of_point(coords: &PointCoords) -> Result<ChowClass, ChowError> {
    let (dims, kind) = match coords {
        PointCoords::Integer(g) => (g.iter().map(|x| x.len() - 1).collect::<Vec<_>>(), ScalarKind::Z),
        PointCoords::Polynomial(g) => (g.iter().map(|x| x.len() - 1).collect::<Vec<_>>(), ScalarKind::Ff),
    };
    let hs = canonical_point_height(coords)?;
    let top: Vec<u32> = dims.iter().map(|&n| n as u32).collect();
    let mut c = ChowClass::zero(&dims, kind).with_deg_term(top.clone(), BigInt::from(1));
    for (i, h) in hs.into_iter().enumerate() {
        let mut a = top.clone();
        a[i] -= 1;
        c = c.with_ht_term(a, h);
    }
    Ok(c)
}

/// `h η θ^{n−r−1} + deg θ^{n−r}` on `Pⁿ`.
pub fn class_of_cycle_summary(r: usize, deg: &BigInt, h: HeightScalar, n: usize) -> Result<ChowClass, ChowError> {
    if r > n {
        return Err(ChowError::DimensionTooLarge { r, n });
    }
    let kind = if h.is_exact() { ScalarKind::Ff } else { ScalarKind::Z };
    let mut c = ChowClass::zero(&[n], kind).with_deg_term(vec![(n - r) as u32], deg.clone());
    if r < n {
        c = c.with_ht_term(vec![(n - r - 1) as u32], h);
    }
    Ok(c)
}

/// Reads `(r, deg, h)` back from a projective summary.
pub fn summary_of_class(c: &ChowClass) -> Result<(usize, BigInt, HeightScalar), ChowError> {
    if c.dims.len() != 1 || c.deg.len() != 1 {
        return Err(ChowError::NotSummary);
    }
    let n = c.dims[0];
    let (a, d) = c.deg.iter().next().unwrap();
    let r = n - a[0] as usize;
    let h = if r == n { hs_zero(c.kind) } else { c.ht_c(&[r as u32 + 1]) };
    if c.ht.keys().any(|k| k[0] as usize + r + 1 != n) {
        return Err(ChowError::NotSummary);
    }
    Ok((r, d.clone(), h))
}

/// `x · ∏ fs`, an upper bound for the class of `X · div f₁ ⋯ div f_s`.
pub fn bezout_upper(x: &ChowClass, fs: &[ChowClass]) -> Result<ChowClass, ChowError> {
    fs.iter().try_fold(x.clone(), |acc, f| cc_mul(&acc, f))
}

/// Coefficient of `θⁿ` in the product of `|n|` pure degree classes.
pub fn intersection_count(classes: &[ChowClass]) -> Result<BigInt, ChowError> {
    let first = classes.first().ok_or(ChowError::WrongCount { expected: 1, got: 0 })?;
    let total: usize = first.dims.iter().sum();
    if classes.len() != total {
        return Err(ChowError::WrongCount { expected: total, got: classes.len() });
    }
    if classes.iter().any(|c| !c.ht.is_empty()) {
        return Err(ChowError::NotPureDegree);
    }
    let p = bezout_upper(&ChowClass::one(&first.dims, first.kind), classes)?;
    let top: Vec<u32> = first.dims.iter().map(|&n| n as u32).collect();
    Ok(p.deg.get(&top).cloned().unwrap_or_else(BigInt::zero))
}

/// Class of `X₁ × X₂` on the concatenated product space.
pub fn product_class(a: &ChowClass, b: &ChowClass) -> Result<ChowClass, ChowError> {
    if a.kind != b.kind {
        return Err(ChowError::KindMismatch);
    }
    let dims: Vec<usize> = a.dims.iter().chain(&b.dims).copied().collect();
    let cat = |x: &[u32], y: &[u32]| -> Vec<u32> { x.iter().chain(y).copied().collect() };
    let mut out = ChowClass::zero(&dims, a.kind);
    for (ea, ca) in &a.deg {
        for (eb, cb) in &b.deg {
            out = out.with_deg_term(cat(ea, eb), ca * cb);
        }
        for (eb, hb) in &b.ht {
            out = out.with_ht_term(cat(ea, eb), hs_scale(hb, ca));
        }
    }
    for (ea, ha) in &a.ht {
        for (eb, cb) in &b.deg {
            out = out.with_ht_term(cat(ea, eb), hs_scale(ha, cb));
        }
    }
    Ok(out)
}

/// Class of the ruled join on `P^{n₁+n₂+1}`: degrees multiply and
/// `h = deg₁ h₂ + deg₂ h₁`.
pub fn join_class(a: &ChowClass, b: &ChowClass) -> Result<ChowClass, ChowError> {
    if a.kind != b.kind {
        return Err(ChowError::KindMismatch);
    }
    let (r1, d1, h1) = summary_of_class(a)?;
    let (r2, d2, h2) = summary_of_class(b)?;
    let h = hs_add(&hs_scale(&h2, &d1), &hs_scale(&h1, &d2));
    let h = coerce(a.kind, h);
    class_of_cycle_summary(r1 + r2 + 1, &(&d1 * &d2), h, a.dims[0] + b.dims[0] + 1)
}

/// True iff `θ^{n−l} · pi_class ≤ x`.
pub fn projection_compare(pi_class: &ChowClass, x: &ChowClass) -> Result<bool, ChowError> {
    if pi_class.dims.len() != x.dims.len() || pi_class.dims.iter().zip(&x.dims).any(|(l, n)| l > n) {
        return Err(ChowError::DimsMismatch(pi_class.dims.clone(), x.dims.clone()));
    }
    if pi_class.kind != x.kind {
        return Err(ChowError::KindMismatch);
    }
    let shift: Vec<u32> = pi_class.dims.iter().zip(&x.dims).map(|(l, n)| (n - l) as u32).collect();
    let mut lifted = ChowClass::zero(&x.dims, x.kind);
    for (a, c) in &pi_class.deg {
        lifted = lifted.with_deg_term(add_exp(a, &shift), c.clone());
    }
    for (a, h) in &pi_class.ht {
        lifted = lifted.with_ht_term(add_exp(a, &shift), h.clone());
    }
    cc_leq(&lifted, x)
}

/// Degree part of the class of a cycle from its mixed degrees `deg_b`.
pub fn class_from_mixed_degrees(
    dims: &[usize],
    kind: ScalarKind,
    degrees: &BTreeMap<Vec<u32>, BigInt>,
) -> ChowClass {
    let mut c = ChowClass::zero(dims, kind);
    for (b, d) in degrees {
        let a: Vec<u32> = b.iter().zip(dims).map(|(&x, &n)| n as u32 - x).collect();
        c = c.with_deg_term(a, d.clone());
    }
    c
}
