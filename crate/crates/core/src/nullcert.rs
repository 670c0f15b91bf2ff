//! Bézout certificates `α = Σ gᵢfᵢ` on an affine variety, built from the
//! minimal polynomial of `z` under `(x, z) ↦ (z f_j + ℓ_j, ℓ_{s+1}, …)`, and
//! their strong form `α g^μ = Σ gᵢfᵢ`.

use std::collections::HashMap;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::elim::{groebner, minimal_polynomial, ElimError, GroebnerBasis, MonomialOrder};
use crate::measures::{height_inf, MeasureError};
use crate::poly::{GroupKind, Ideal, MPoly, PolyError, VarGroup, VarSpec};

pub const DEFAULT_RETRIES: usize = 5;
const SEED_STEP: u64 = 0x9e37_79b9_7f4a_7c15;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum NullError {
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Elim(#[from] ElimError),
    #[error(transparent)]
    Measure(#[from] MeasureError),
    #[error("the variety has no affine variables")]
    NoAffineVariables,
    #[error("the variety is empty")]
    EmptyVariety,
    #[error("input {0} is constant in x")]
    ConstantInput(usize),
    #[error("{s} inputs on a variety of dimension {r}: at most r+1 are allowed here")]
    TooManyInputs { s: usize, r: usize },
    #[error("all inputs must share the variety's spec")]
    SpecMismatch,
    #[error("expected {expected} linear forms of {n} coefficients")]
    BadLinearForms { expected: usize, n: usize },
    #[error("minimal polynomial degenerate after {0} attempts (the inputs may share a zero on V)")]
    Degenerate(usize),
    #[error("the identity does not hold modulo I(V): the inputs may share a zero on V")]
    Inconsistent,
    #[error("certificate is not verified")]
    Unverified,
}

/// How the coefficients of the linear forms `ℓ_i` are chosen.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum UMode {
    /// Indeterminate coefficients; a `u`-monomial coefficient is extracted.
    Symbolic,
    /// Integers drawn from `[−B, B]`, `B = 8(r+1)n`, with a seeded generator.
    Specialized { seed: u64 },
    /// Caller-chosen integers, one row per linear form.
    Fixed(Vec<Vec<BigInt>>),
}

/// The polynomials `q_1, …, q_{r+1}` in the variable spec of `V` extended by the
/// `u` groups (symbolic mode) and `z`.
#[derive(Clone, Debug)]
pub struct LinearSystem {
    pub spec: Arc<VarSpec>,
    pub qs: Vec<MPoly>,
    pub ells: Vec<MPoly>,
    pub fs: Vec<MPoly>,
    pub u_values: Option<Vec<Vec<BigInt>>>,
    pub u_vars: Vec<usize>,
    pub z_group: String,
    pub r: usize,
}

#[derive(Clone, Debug)]
pub struct BezoutCertificate {
    pub v: Ideal,
    pub fs: Vec<MPoly>,
    pub mode: UMode,
    pub u_values: Option<Vec<Vec<BigInt>>>,
    /// Integer combination used to bring `s > r+1` inputs down to `r+1`.
    pub combination: Option<Vec<Vec<BigInt>>>,
    pub e: MPoly,
    pub delta: u32,
    pub alpha: MPoly,
    pub gs: Vec<MPoly>,
    pub verified: bool,
    pub attempts: usize,
}

#[derive(Clone, Debug, PartialEq)]
pub struct CertMeasures {
    pub deg_x_gf: Vec<u32>,
    /// Per parameter group.
    pub deg_t_alpha: Vec<u32>,
    /// `[i][l]`: degree of `gᵢfᵢ` in parameter group `l`.
    pub deg_t_gf: Vec<Vec<u32>>,
    pub h_alpha: f64,
    /// `h(gᵢ) + h(fᵢ)`, absent when `gᵢ = 0`.
    pub h_gf: Vec<Option<f64>>,
}

#[derive(Clone, Debug)]
pub struct StrongCertificate {
    pub mu: u32,
    pub d0: u32,
    pub alpha: MPoly,
    pub gs: Vec<MPoly>,
    pub inner: BezoutCertificate,
    pub verified: bool,
}

fn affine_vars(spec: &VarSpec) -> Vec<usize> {
    (0..spec.ngroups())
        .filter(|&g| spec.group(g).kind == GroupKind::Affine)
        .flat_map(|g| spec.group_range(g))
        .collect()
}

/// Dimension over `k(t)` of the affine variety: the largest set of affine
/// variables free of every leading monomial of a basis with `x ≫ t`.
pub fn affine_dimension(v: &Ideal) -> Result<Option<usize>, NullError> {
    let xs = affine_vars(v.spec());
    if xs.is_empty() {
        return Err(NullError::NoAffineVariables);
    }
    let gb = groebner(v, &MonomialOrder::Blocks(vec![xs.clone()]))?;
    let mut leads: Vec<Vec<u32>> = Vec::new();
    for g in gb.basis() {
        let e = gb.leading_exponent(g).expect("nonzero basis element");
        let lx: Vec<u32> = xs.iter().map(|&x| e[x]).collect();
        if lx.iter().all(|&k| k == 0) {
            return Ok(None);
        }
        leads.push(lx);
    }
    let n = xs.len();
    let mut best = 0;
    for mask in 0u64..(1u64 << n) {
        let size = mask.count_ones() as usize;
        if size <= best {
            continue;
        }
        let inside = |l: &Vec<u32>| l.iter().enumerate().all(|(k, &e)| e == 0 || mask >> k & 1 == 1);
        if !leads.iter().any(inside) {
            best = size;
        }
    }
    Ok(Some(best))
}

fn check_inputs(v: &Ideal, fs: &[MPoly]) -> Result<(Vec<usize>, usize), NullError> {
    let spec = v.spec();
    if fs.iter().any(|f| f.spec() != spec) {
        return Err(NullError::SpecMismatch);
    }
    let xs = affine_vars(spec);
    if xs.is_empty() {
        return Err(NullError::NoAffineVariables);
    }
    for (i, f) in fs.iter().enumerate() {
        if f.degree_in_vars(&xs).unwrap_or(0) == 0 {
            return Err(NullError::ConstantInput(i));
        }
    }
    let r = affine_dimension(v)?.ok_or(NullError::EmptyVariety)?;
    Ok((xs, r))
}

fn coefficient_bound(r: usize, n: usize) -> i64 {
    8 * (r as i64 + 1) * n as i64
}

/// The system `q_j = z f_j + ℓ_j` (`j ≤ s`), `q_j = ℓ_j` (`j > s`).
pub fn build_system(v: &Ideal, fs: &[MPoly], mode: &UMode) -> Result<LinearSystem, NullError> {
    let (xs, r) = check_inputs(v, fs)?;
    build_with_dimension(v, fs, mode, &xs, r)
}

fn build_with_dimension(
    v: &Ideal,
    fs: &[MPoly],
    mode: &UMode,
    xs: &[usize],
    r: usize,
) -> Result<LinearSystem, NullError> {
    let spec = v.spec();
    let s = fs.len();
    if s > r + 1 {
        return Err(NullError::TooManyInputs { s, r });
    }
    let n = xs.len();
    let mut extra = Vec::new();
    let mut unames = Vec::new();
    if *mode == UMode::Symbolic {
        let mut probe = spec.clone();
        for i in 0..=r {
            let name = probe.fresh_name(&format!("u{}", i + 1));
            let g = VarGroup::new(name.clone(), n, GroupKind::Auxiliary);
            probe = probe.extend(std::slice::from_ref(&g))?;
            extra.push(g);
            unames.push(name);
        }
    }
    let zname = {
        let probe = spec.extend(&extra)?;
        probe.fresh_name("z")
    };
    extra.push(VarGroup::new(zname.clone(), 1, GroupKind::Auxiliary));
    let ext = spec.extend(&extra)?;
    let z = MPoly::var(&ext, ext.group_range(ext.group_index(&zname)?).start);
    let xe: Vec<MPoly> = xs
        .iter()
        .map(|&x| MPoly::var_named(&ext, &spec.var_name(x)))
        .collect::<Result<_, _>>()?;

    let (ells, u_values, u_vars) = match mode {
        UMode::Symbolic => {
            let mut ells = Vec::new();
            let mut u_vars = Vec::new();
            for name in &unames {
                let range = ext.group_range(ext.group_index(name)?);
                let mut l = MPoly::zero(&ext, crate::poly::CoeffDomain::Integer);
                for (k, u) in range.enumerate() {
                    l = &l + &(&MPoly::var(&ext, u) * &xe[k]);
                    u_vars.push(u);
                }
                ells.push(l);
            }
            (ells, None, u_vars)
        }
        UMode::Specialized { seed } => {
            let b = coefficient_bound(r, n);
            let mut rng = ChaCha8Rng::seed_from_u64(*seed);
            let vals: Vec<Vec<BigInt>> =
                (0..=r).map(|_| (0..n).map(|_| BigInt::from(rng.gen_range(-b..=b))).collect()).collect();
            (linear_forms(&ext, &xe, &vals), Some(vals), Vec::new())
        }
        UMode::Fixed(vals) => {
            if vals.len() != r + 1 || vals.iter().any(|row| row.len() != n) {
                return Err(NullError::BadLinearForms { expected: r + 1, n });
            }
            (linear_forms(&ext, &xe, vals), Some(vals.clone()), Vec::new())
        }
    };
    let fe: Vec<MPoly> = fs.iter().map(|f| f.embed(&ext)).collect::<Result<_, _>>()?;
    let qs = (0..=r)
        .map(|j| if j < s { &(&z * &fe[j]) + &ells[j] } else { ells[j].clone() })
        .collect();
    Ok(LinearSystem { spec: ext, qs, ells, fs: fe, u_values, u_vars, z_group: zname, r })
}

fn linear_forms(ext: &Arc<VarSpec>, xe: &[MPoly], vals: &[Vec<BigInt>]) -> Vec<MPoly> {
    vals.iter()
        .map(|row| {
            let mut l = MPoly::zero(ext, crate::poly::CoeffDomain::Integer);
            for (c, x) in row.iter().zip(xe) {
                l = &l + &x.scale_int(c);
            }
            l
        })
        .collect()
}

/// Moves `p` into `target` by variable name; variables of `p` missing from
/// `target` must not occur.
fn move_to(p: &MPoly, target: &Arc<VarSpec>) -> Result<MPoly, PolyError> {
    let spec = p.spec();
    let map: Vec<Option<usize>> = (0..spec.nvars()).map(|v| target.find_var(&spec.var_name(v))).collect();
    p.reindex(target, &map)
}

struct PowerCache<'a> {
    base: &'a [MPoly],
    cache: HashMap<(usize, u32), MPoly>,
}

impl PowerCache<'_> {
    fn pow(&mut self, k: usize, e: u32) -> MPoly {
        self.cache.entry((k, e)).or_insert_with(|| self.base[k].pow(e)).clone()
    }
}

fn binomial(n: u32, k: u32) -> BigInt {
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// `α₀,₀` and the cofactors `g̃ᵢ`, all in the system's spec. `None` when the
/// leading coefficient in `z` involves `y`.
fn jelonek_cofactors(e: &MPoly, sys: &LinearSystem) -> Result<Option<(MPoly, Vec<MPoly>, u32)>, NullError> {
    let es = e.spec();
    let zg = es.group_index(&sys.z_group)?;
    let zv = es.group_range(zg).start;
    let yname = sys.spec.fresh_name("y");
    let yv: Vec<usize> = es.group_range(es.group_index(&yname)?).collect();
    let delta = e.deg_var(zv).unwrap_or(0);
    if delta == 0 {
        return Ok(None);
    }
    let mut split_vars = yv.clone();
    split_vars.push(zv);
    let s = sys.fs.len();
    let r1 = sys.qs.len();
    let mut ell = PowerCache { base: &sys.ells, cache: HashMap::new() };
    let mut fpow = PowerCache { base: &sys.fs, cache: HashMap::new() };
    let mut alpha00 = None;
    let mut gs = vec![MPoly::zero(&sys.spec, crate::poly::CoeffDomain::Integer); s];
    for (key, coeff) in e.split_by(&split_vars) {
        let a = &key[..r1];
        let j = delta - key[r1];
        let c = move_to(&coeff, &sys.spec)?;
        if j == 0 {
            if a.iter().any(|&k| k != 0) {
                return Ok(None);
            }
            alpha00 = Some(c);
            continue;
        }
        for i in 0..s {
            let mut b = vec![0u32; r1];
            enumerate_b(a, i, j, 0, &mut b, &mut |b| {
                let mut term = c.clone();
                let mut scalar = BigInt::one();
                for k in 0..r1 {
                    scalar *= binomial(a[k], b[k]);
                    if a[k] > b[k] {
                        term = &term * &ell.pow(k, a[k] - b[k]);
                    }
                }
                for (k, &bk) in b.iter().enumerate().take(i) {
                    if bk > 0 {
                        term = &term * &fpow.pow(k, bk);
                    }
                }
                if b[i] > 1 {
                    term = &term * &fpow.pow(i, b[i] - 1);
                }
                gs[i] = &gs[i] - &term.scale_int(&scalar);
            });
        }
    }
    Ok(alpha00.map(|a| (a, gs, delta)))
}

/// Visits every `b` with `|b| = j`, `b_k ≤ a_k` for `k ≤ i`, `b_k = 0` for
/// `k > i` and `b_i ≥ 1`.
fn enumerate_b(a: &[u32], i: usize, left: u32, k: usize, b: &mut Vec<u32>, f: &mut dyn FnMut(&[u32])) {
    if k == i {
        if left >= 1 && left <= a[i] {
            b[i] = left;
            f(b);
            b[i] = 0;
        }
        return;
    }
    for bk in 0..=a[k].min(left) {
        b[k] = bk;
        enumerate_b(a, i, left - bk, k + 1, b, f);
    }
    b[k] = 0;
}

fn reduces_to_zero(gb: &GroebnerBasis, p: &MPoly) -> bool {
    gb.normal_form(p).is_zero()
}

fn identity_holds(gb: &GroebnerBasis, lhs: &MPoly, gs: &[MPoly], fs: &[MPoly]) -> bool {
    let mut acc = lhs.clone();
    for (g, f) in gs.iter().zip(fs) {
        acc = &acc - &(g * f);
    }
    reduces_to_zero(gb, &acc)
}

/// Divides `α` and the cofactors by their common integer content and makes
/// the leading coefficient of `α` positive.
fn normalize_identity(alpha: MPoly, gs: Vec<MPoly>) -> (MPoly, Vec<MPoly>) {
    let mut content = BigInt::zero();
    for p in std::iter::once(&alpha).chain(gs.iter()) {
        for c in p.integer_coeffs() {
            content = content.gcd(c);
        }
    }
    let negative = alpha.leading_term().map(|(_, c)| c.is_negative()).unwrap_or(false);
    if content.is_zero() {
        return (alpha, gs);
    }
    if negative {
        content = -content;
    }
    let inv = BigRational::new(BigInt::one(), content);
    let fix = |p: &MPoly| p.scale(&inv).to_integer().expect("exact division by the content");
    (fix(&alpha), gs.iter().map(fix).collect())
}

/// Builds and verifies a certificate. In specialized mode, `s > r+1` inputs
/// are first replaced by `f_j + Σ v_{j,i} f_{r+i}` (`j ≤ r`) and `f_s`.
pub fn certify(v: &Ideal, fs: &[MPoly], mode: &UMode, max_retries: usize) -> Result<BezoutCertificate, NullError> {
    let (xs, r) = check_inputs(v, fs)?;
    let s = fs.len();
    let base_seed = match mode {
        UMode::Specialized { seed } => *seed,
        _ => 0,
    };
    let gb = groebner(v, &MonomialOrder::GradedLex)?;
    let retryable = matches!(mode, UMode::Specialized { .. });
    let mut attempts = 0;
    for attempt in 0..=max_retries {
        attempts = attempt + 1;
        let seed = base_seed.wrapping_add((attempt as u64).wrapping_mul(SEED_STEP));
        let attempt_mode = match mode {
            UMode::Specialized { .. } => UMode::Specialized { seed },
            other => other.clone(),
        };
        let (work, combination) = if s > r + 1 {
            if *mode == UMode::Symbolic {
                return Err(NullError::TooManyInputs { s, r });
            }
            let (work, v) = combine(fs, r, coefficient_bound(r, xs.len()), seed ^ 0x5151);
            (work, Some(v))
        } else {
            (fs.to_vec(), None)
        };
        let sys = build_with_dimension(v, &work, &attempt_mode, &xs, r)?;
        let e = match minimal_polynomial(v, &sys.qs, &sys.z_group) {
            Ok(e) => e.primitive_integer(),
            Err(ElimError::ZeroDegree | ElimError::ZeroElimination | ElimError::NotPrincipal(_)) => {
                if retryable {
                    continue;
                }
                break;
            }
            Err(err) => return Err(err.into()),
        };
        let found = jelonek_cofactors(&e, &sys)?.filter(|(a, _, _)| !a.is_zero());
        let Some((alpha00, gtil, delta)) = found else {
            if retryable {
                continue;
            }
            break;
        };
        let (alpha, gbar) = if sys.u_vars.is_empty() {
            (alpha00, gtil)
        } else {
            let pattern = smallest_u_pattern(&alpha00, &sys.u_vars);
            let pick = |p: &MPoly| p.coefficient_of(&sys.u_vars, &pattern);
            (pick(&alpha00), gtil.iter().map(pick).collect())
        };
        let spec = v.spec();
        let alpha = move_to(&alpha, spec)?;
        let gbar: Vec<MPoly> = gbar.iter().map(|g| move_to(g, spec)).collect::<Result<_, _>>()?;
        let gs = match &combination {
            Some(vmat) => unfold(&gbar, vmat, r, s),
            None => gbar,
        };
        let (alpha, gs) = normalize_identity(alpha, gs);
        if !identity_holds(&gb, &alpha, &gs, fs) {
            return Err(NullError::Inconsistent);
        }
        return Ok(BezoutCertificate {
            v: v.clone(),
            fs: fs.to_vec(),
            mode: mode.clone(),
            u_values: sys.u_values,
            combination,
            e,
            delta,
            alpha,
            gs,
            verified: true,
            attempts,
        });
    }
    Err(NullError::Degenerate(attempts))
}

fn smallest_u_pattern(alpha: &MPoly, u_vars: &[usize]) -> Vec<u32> {
    alpha
        .terms()
        .map(|(e, _)| u_vars.iter().map(|&u| e[u]).collect::<Vec<u32>>())
        .min()
        .unwrap_or_else(|| vec![0; u_vars.len()])
}

/// `f̄_j = f_j + Σ_i v_{j,i} f_{r+i}` for `j < r` (0-based) and `f̄_r = f_s`.
fn combine(fs: &[MPoly], r: usize, bound: i64, seed: u64) -> (Vec<MPoly>, Vec<Vec<BigInt>>) {
    let s = fs.len();
    let extra = s - r - 1;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let vmat: Vec<Vec<BigInt>> =
        (0..r).map(|_| (0..extra).map(|_| BigInt::from(rng.gen_range(-bound..=bound))).collect()).collect();
    let mut out = Vec::with_capacity(r + 1);
    for (j, row) in vmat.iter().enumerate() {
        let mut f = fs[j].clone();
        for (i, c) in row.iter().enumerate() {
            f = &f + &fs[r + i].scale_int(c);
        }
        out.push(f);
    }
    out.push(fs[s - 1].clone());
    (out, vmat)
}

fn unfold(gbar: &[MPoly], vmat: &[Vec<BigInt>], r: usize, s: usize) -> Vec<MPoly> {
    let mut gs = Vec::with_capacity(s);
    gs.extend(gbar[..r].iter().cloned());
    for i in 0..s - r - 1 {
        let mut g = MPoly::zero(gbar[0].spec(), crate::poly::CoeffDomain::Integer);
        for (k, row) in vmat.iter().enumerate() {
            g = &g + &gbar[k].scale_int(&row[i]);
        }
        gs.push(g);
    }
    gs.push(gbar[r].clone());
    gs
}

fn param_groups(spec: &VarSpec) -> Vec<usize> {
    spec.groups_of_kind(GroupKind::Parameter)
}

/// Degrees and heights of a verified certificate.
pub fn measure(cert: &BezoutCertificate) -> Result<CertMeasures, NullError> {
    if !cert.verified {
        return Err(NullError::Unverified);
    }
    let spec = cert.v.spec();
    let xs = affine_vars(spec);
    let pg = param_groups(spec);
    let products: Vec<MPoly> = cert.gs.iter().zip(&cert.fs).map(|(g, f)| g * f).collect();
    let deg_x_gf = products.iter().map(|p| p.degree_in_vars(&xs).unwrap_or(0)).collect();
    let deg_t_alpha = pg.iter().map(|&g| cert.alpha.group_degree(g).unwrap_or(0)).collect();
    let deg_t_gf = products
        .iter()
        .map(|p| pg.iter().map(|&g| p.group_degree(g).unwrap_or(0)).collect())
        .collect();
    let h_alpha = height_inf(&cert.alpha)?;
    let mut h_gf = Vec::new();
    for (g, f) in cert.gs.iter().zip(&cert.fs) {
        h_gf.push(if g.is_zero() { None } else { Some(height_inf(g)? + height_inf(f)?) });
    }
    Ok(CertMeasures { deg_x_gf, deg_t_alpha, deg_t_gf, h_alpha, h_gf })
}

/// `α g^μ = Σ gᵢfᵢ` on `V`, through a certificate for
/// `(f_1, …, f_s, 1 − w^{d₀} g)` on `V × A¹`.
pub fn strong_certify(
    v: &Ideal,
    fs: &[MPoly],
    g: &MPoly,
    mode: &UMode,
    max_retries: usize,
) -> Result<StrongCertificate, NullError> {
    let spec = v.spec();
    if fs.iter().any(|f| f.spec() != spec) || g.spec() != spec {
        return Err(NullError::SpecMismatch);
    }
    let xs = affine_vars(spec);
    let d0 = g.degree_in_vars(&xs).unwrap_or(0).max(1);
    let wname = spec.fresh_name("w");
    let wspec = spec.extend(&[VarGroup::new(wname.clone(), 1, GroupKind::Affine)])?;
    let wv = wspec.nvars() - 1;
    let w = MPoly::var(&wspec, wv);
    let mut list: Vec<MPoly> = fs.iter().map(|f| f.embed(&wspec)).collect::<Result<_, _>>()?;
    let gw = g.embed(&wspec)?;
    list.push(&MPoly::one(&wspec) - &(&w.pow(d0) * &gw));
    let wideal = v.embed(&wspec)?;
    let inner = certify(&wideal, &list, mode, max_retries)?;

    // keep the part of each cofactor in k[x, w^{d₀}] and write it in ŵ = w^{d₀}
    let mut hats: Vec<Vec<MPoly>> = Vec::new();
    for gi in &inner.gs[..fs.len()] {
        let mut by_power: Vec<MPoly> = Vec::new();
        for (key, c) in gi.split_by(&[wv]) {
            if key[0] % d0 != 0 {
                continue;
            }
            let k = (key[0] / d0) as usize;
            if by_power.len() <= k {
                by_power.resize(k + 1, MPoly::zero(&wspec, crate::poly::CoeffDomain::Integer));
            }
            by_power[k] = &by_power[k] + &c;
        }
        hats.push(by_power.iter().map(|c| move_to(c, spec)).collect::<Result<_, _>>()?);
    }
    let mut mu = hats.iter().map(|h| h.len().saturating_sub(1)).max().unwrap_or(0) as u32;
    let alpha_w = move_to(&inner.alpha, spec)?;
    let mut gs = Vec::with_capacity(fs.len());
    for h in &hats {
        let mut acc = MPoly::zero(spec, crate::poly::CoeffDomain::Integer);
        for (k, c) in h.iter().enumerate() {
            if !c.is_zero() {
                acc = &acc + &(c * &g.pow(mu - k as u32));
            }
        }
        gs.push(acc);
    }
    let mut alpha = alpha_w;
    if let Some(c) = g.constant_value() {
        // g^μ is a scalar: fold it into α
        let cmu = MPoly::constant(spec, num_traits::pow(c, mu as usize));
        alpha = &alpha * &cmu;
        mu = 0;
    }
    let gb = groebner(v, &MonomialOrder::GradedLex)?;
    let lhs = &alpha * &g.pow(mu);
    if !identity_holds(&gb, &lhs, &gs, fs) {
        return Err(NullError::Inconsistent);
    }
    Ok(StrongCertificate { mu, d0, alpha, gs, inner, verified: true })
}
