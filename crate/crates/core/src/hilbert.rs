//! Hilbert–Samuel functions of multihomogeneous ideals, their polynomials,
//! mixed degrees, standard models over P¹ and function-field heights.

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use thiserror::Error;

use crate::elim::{self, groebner, ElimError, GroebnerBasis, MonomialOrder};
use crate::poly::{GroupKind, Ideal, MPoly, PolyError, VarGroup, VarSpec};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HilbertError {
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Elim(#[from] ElimError),
    #[error("generator {0} is not multihomogeneous")]
    NotMultihomogeneous(usize),
    #[error("the variable spec has no projective group")]
    NoProjectiveGroup,
    #[error("only projective groups are allowed here; found `{0}`")]
    ForeignGroup(String),
    #[error("Hilbert function did not stabilize within box side {0}")]
    NoStabilization(u32),
    #[error("mixed degree b!·coeff is not a nonnegative integer at {0:?}")]
    NonIntegralDegree(Vec<u32>),
    #[error("expected exactly one parameter group of size 1")]
    ParameterGroup,
}

/// A polynomial with rational coefficients in `m` formal degree variables.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct HilbertPolynomial {
    pub coeffs: BTreeMap<Vec<u32>, BigRational>,
}

impl HilbertPolynomial {
    pub fn eval(&self, delta: &[u32]) -> BigRational {
        self.coeffs
            .iter()
            .map(|(a, c)| {
                let mut t = c.clone();
                for (&ai, &di) in a.iter().zip(delta) {
                    t *= BigRational::from_integer(BigInt::from(di).pow(ai));
                }
                t
            })
            .fold(BigRational::zero(), |x, y| x + y)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<u32> {
        self.coeffs.keys().map(|a| a.iter().sum()).max()
    }

    pub fn coeff(&self, a: &[u32]) -> BigRational {
        self.coeffs.get(a).cloned().unwrap_or_else(BigRational::zero)
    }
}

#[derive(Clone, Debug)]
pub struct HilbertData {
    pub ideal: Ideal,
    /// Projective dimensions n_i.
    pub dims: Vec<usize>,
    /// Largest sampled degree per group.
    pub box_side: Vec<u32>,
    pub values: BTreeMap<Vec<u32>, u64>,
    pub poly: HilbertPolynomial,
    pub stabilized_from: Vec<u32>,
    /// Dimension r of the cycle, `None` for the empty variety.
    pub dimension: Option<usize>,
    pub mixed_degrees: BTreeMap<Vec<u32>, BigInt>,
}

impl HilbertData {
    pub fn mixed_degree(&self, b: &[u32]) -> BigInt {
        self.mixed_degrees.get(b).cloned().unwrap_or_else(BigInt::zero)
    }
}

fn projective_vars(spec: &VarSpec) -> Result<Vec<Vec<usize>>, HilbertError> {
    let mut out = Vec::new();
    for g in spec.groups() {
        if g.kind != GroupKind::Projective {
            return Err(HilbertError::ForeignGroup(g.name.clone()));
        }
    }
    for gi in 0..spec.ngroups() {
        out.push(spec.group_range(gi).collect());
    }
    if out.is_empty() {
        return Err(HilbertError::NoProjectiveGroup);
    }
    Ok(out)
}

fn check_homogeneous(ideal: &Ideal) -> Result<(), HilbertError> {
    for (i, g) in ideal.gens().iter().enumerate() {
        if !g.is_zero() && g.is_multihomogeneous().is_none() {
            return Err(HilbertError::NotMultihomogeneous(i));
        }
    }
    Ok(())
}

/// All exponent vectors on `vars` of total degree `d`.
pub(crate) fn monomials_of_degree(nv: usize, d: u32) -> Vec<Vec<u32>> {
    fn rec(i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if i + 1 == cur.len() {
            cur[i] = left;
            out.push(cur.clone());
            return;
        }
        for k in (0..=left).rev() {
            cur[i] = k;
            rec(i + 1, left - k, cur, out);
        }
    }
    let mut out = Vec::new();
    let mut cur = vec![0; nv];
    rec(0, d, &mut cur, &mut out);
    out
}

/// Exponent vectors (full length) of multidegree `delta`.
pub(crate) fn monomials_of_multidegree(groups: &[Vec<usize>], nvars: usize, delta: &[u32]) -> Vec<Vec<u32>> {
    let mut acc: Vec<Vec<u32>> = vec![vec![0; nvars]];
    for (g, &d) in groups.iter().zip(delta) {
        let local = monomials_of_degree(g.len(), d);
        let mut next = Vec::with_capacity(acc.len() * local.len());
        for a in &acc {
            for l in &local {
                let mut e = a.clone();
                for (k, &v) in g.iter().enumerate() {
                    e[v] = l[k];
                }
                next.push(e);
            }
        }
        acc = next;
    }
    acc
}

fn binom(n: u64, k: u64) -> BigInt {
    let mut r = BigInt::one();
    for i in 0..k {
        r = r * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    r
}

/// `dim (K[x]/I)_δ` by exact linear algebra: monomials of multidegree `δ`
/// minus the rank of all monomial multiples of the generators in degree `δ`.
pub fn graded_dim(ideal: &Ideal, delta: &[u32]) -> Result<u64, HilbertError> {
    check_homogeneous(ideal)?;
    let groups = projective_vars(ideal.spec())?;
    let nvars = ideal.spec().nvars();
    let cols = monomials_of_multidegree(&groups, nvars, delta);
    let col_index: HashMap<&Vec<u32>, usize> = cols.iter().enumerate().map(|(i, c)| (c, i)).collect();
    let mut rows: Vec<BTreeMap<usize, BigInt>> = Vec::new();
    for g in ideal.nonzero_gens() {
        let md = g.is_multihomogeneous().unwrap().degrees;
        if md.iter().zip(delta).any(|(a, b)| a > b) {
            continue;
        }
        let rest: Vec<u32> = delta.iter().zip(&md).map(|(a, b)| a - b).collect();
        let prim = g.primitive_integer();
        for m in monomials_of_multidegree(&groups, nvars, &rest) {
            let mut row = BTreeMap::new();
            for (e, c) in prim.terms() {
                let k: Vec<u32> = e.iter().zip(&m).map(|(a, b)| a + b).collect();
                row.insert(col_index[&k], c.numer().clone());
            }
            rows.push(row);
        }
    }
    let rank = sparse_rank(rows);
    Ok(cols.len() as u64 - rank as u64)
}

/// Rank by fraction-free elimination with first-nonzero pivoting.
fn sparse_rank(rows: Vec<BTreeMap<usize, BigInt>>) -> usize {
    let mut pivots: BTreeMap<usize, BTreeMap<usize, BigInt>> = BTreeMap::new();
    for mut row in rows {
        loop {
            let Some((&lead, _)) = row.iter().next() else { break };
            let Some(p) = pivots.get(&lead) else {
                let mut g = BigInt::zero();
                for c in row.values() {
                    g = g.gcd(c);
                }
                for c in row.values_mut() {
                    *c = &*c / &g;
                }
                pivots.insert(lead, row);
                break;
            };
            let a = p[&lead].clone();
            let b = row[&lead].clone();
            let g = a.gcd(&b);
            let (a, b) = (&a / &g, &b / &g);
            let mut next = BTreeMap::new();
            for (k, c) in &row {
                next.insert(*k, c * &a);
            }
            for (k, c) in p {
                let e = next.entry(*k).or_insert_with(BigInt::zero);
                *e -= c * &b;
            }
            next.retain(|_, c| !c.is_zero());
            row = next;
        }
    }
    pivots.len()
}

/// Hilbert function evaluator backed by one Gröbner basis.
pub struct HilbertCounter {
    groups: Vec<Vec<usize>>,
    nvars: usize,
    leads: Vec<Vec<u32>>,
}

impl HilbertCounter {
    pub fn new(ideal: &Ideal) -> Result<HilbertCounter, HilbertError> {
        check_homogeneous(ideal)?;
        let groups = projective_vars(ideal.spec())?;
        let gb: GroebnerBasis = groebner(ideal, &MonomialOrder::GradedLex)?;
        Ok(HilbertCounter { groups, nvars: ideal.spec().nvars(), leads: gb.leading_exponents() })
    }

    /// Number of standard monomials of multidegree `delta`.
    pub fn dim(&self, delta: &[u32]) -> u64 {
        let relevant: Vec<&Vec<u32>> = self
            .leads
            .iter()
            .filter(|l| {
                self.groups
                    .iter()
                    .zip(delta)
                    .all(|(g, &d)| g.iter().map(|&v| l[v]).sum::<u32>() <= d)
            })
            .collect();
        if relevant.is_empty() {
            return self
                .groups
                .iter()
                .zip(delta)
                .map(|(g, &d)| binom(g.len() as u64 - 1 + d as u64, g.len() as u64 - 1))
                .product::<BigInt>()
                .to_u64()
                .unwrap_or(u64::MAX);
        }
        monomials_of_multidegree(&self.groups, self.nvars, delta)
            .iter()
            .filter(|m| !relevant.iter().any(|l| l.iter().zip(m.iter()).all(|(a, b)| a <= b)))
            .count() as u64
    }
}

/// Coefficients (ascending) of the Lagrange basis polynomial for node `j`
/// among `base, base+1, …, base+n`.
fn lagrange_basis(base: u32, n: usize, j: usize) -> Vec<BigRational> {
    let mut poly = vec![BigRational::one()];
    let xj = BigRational::from_integer(BigInt::from(base as usize + j));
    for k in 0..=n {
        if k == j {
            continue;
        }
        let xk = BigRational::from_integer(BigInt::from(base as usize + k));
        let denom = &xj - &xk;
        let mut next = vec![BigRational::zero(); poly.len() + 1];
        for (i, c) in poly.iter().enumerate() {
            next[i + 1] += c / &denom;
            next[i] -= c * &xk / &denom;
        }
        poly = next;
    }
    poly
}

fn grid(base: &[u32], extent: &[usize]) -> Vec<Vec<u32>> {
    let mut acc: Vec<Vec<u32>> = vec![vec![]];
    for (b, &e) in base.iter().zip(extent) {
        let mut next = Vec::new();
        for a in &acc {
            for k in 0..=e {
                let mut v = a.clone();
                v.push(b + k as u32);
                next.push(v);
            }
        }
        acc = next;
    }
    acc
}

fn interpolate(base: &[u32], dims: &[usize], values: &BTreeMap<Vec<u32>, u64>) -> HilbertPolynomial {
    let bases: Vec<Vec<Vec<BigRational>>> = dims
        .iter()
        .zip(base)
        .map(|(&n, &b)| (0..=n).map(|j| lagrange_basis(b, n, j)).collect())
        .collect();
    let mut coeffs: BTreeMap<Vec<u32>, BigRational> = BTreeMap::new();
    for point in grid(&vec![0; dims.len()], dims) {
        let delta: Vec<u32> = point.iter().zip(base).map(|(j, b)| j + b).collect();
        let val = BigRational::from_integer(BigInt::from(values[&delta]));
        if val.is_zero() {
            continue;
        }
        // tensor product of the univariate basis polynomials
        let mut partial: Vec<(Vec<u32>, BigRational)> = vec![(vec![], val)];
        for (i, &j) in point.iter().enumerate() {
            let l = &bases[i][j as usize];
            let mut next = Vec::new();
            for (a, c) in &partial {
                for (k, lc) in l.iter().enumerate() {
                    if lc.is_zero() {
                        continue;
                    }
                    let mut a2 = a.clone();
                    a2.push(k as u32);
                    next.push((a2, c * lc));
                }
            }
            partial = next;
        }
        for (a, c) in partial {
            *coeffs.entry(a).or_insert_with(BigRational::zero) += c;
        }
    }
    coeffs.retain(|_, c| !c.is_zero());
    HilbertPolynomial { coeffs }
}

fn factorial(k: u32) -> BigInt {
    (1..=k).fold(BigInt::one(), |a, b| a * BigInt::from(b))
}

/// Fits the Hilbert–Samuel polynomial: interpolate on `δ₀ + [0, n]`, verify
/// on `δ₀ + [0, n+2+m]` (`m` the largest leading-monomial degree in the
/// group), with `δ₀ = (k, …, k)` for increasing `k`. A fit whose top-degree
/// coefficients are not mixed degrees is treated as premature.
pub fn hilbert_fit(ideal: &Ideal) -> Result<HilbertData, HilbertError> {
    let counter = HilbertCounter::new(ideal)?;
    let dims: Vec<usize> = counter.groups.iter().map(|g| g.len() - 1).collect();
    let total: usize = dims.iter().sum();
    // largest degree of a leading monomial in each group; the check box is
    // widened by it so a coincidental fit below the regularity is not accepted
    let lead_deg: Vec<u32> = counter
        .groups
        .iter()
        .map(|g| counter.leads.iter().map(|e| g.iter().map(|&v| e[v]).sum::<u32>()).max().unwrap_or(0))
        .collect();
    let widest = lead_deg.iter().copied().max().unwrap_or(0);
    let cap = 2 * total as u32 + 8 + 2 * widest;
    let mut values: BTreeMap<Vec<u32>, u64> = BTreeMap::new();
    let mut k = 0u32;
    loop {
        let side = k + dims.iter().max().copied().unwrap_or(0) as u32 + 2;
        if side > cap {
            return Err(HilbertError::NoStabilization(cap));
        }
        let base = vec![k; dims.len()];
        let check_extent: Vec<usize> = dims.iter().zip(&lead_deg).map(|(n, &m)| n + 2 + m as usize).collect();
        let pts: Vec<Vec<u32>> =
            grid(&base, &check_extent).into_iter().filter(|p| !values.contains_key(p)).collect();
        let computed: Vec<(Vec<u32>, u64)> = pts.into_par_iter().map(|p| {
            let d = counter.dim(&p);
            (p, d)
        }).collect();
        values.extend(computed);
        let poly = interpolate(&base, &dims, &values);
        let ok = grid(&base, &check_extent)
            .iter()
            .all(|p| poly.eval(p) == BigRational::from_integer(BigInt::from(values[p])));
        if ok {
            let dimension = poly.degree().map(|d| d as usize);
            let mut mixed = BTreeMap::new();
            let mut bad = None;
            if let Some(r) = dimension {
                for (a, c) in &poly.coeffs {
                    if a.iter().sum::<u32>() as usize != r {
                        continue;
                    }
                    let scale: BigInt = a.iter().map(|&ai| factorial(ai)).product();
                    let v = c * BigRational::from_integer(scale);
                    if !v.is_integer() || v.is_negative() || a.iter().zip(&dims).any(|(&ai, &ni)| ai as usize > ni) {
                        bad = Some(a.clone());
                        break;
                    }
                    mixed.insert(a.clone(), v.to_integer());
                }
            }
            if let Some(a) = bad {
                // not yet in the polynomial range; the last box is final
                if k + 1 + dims.iter().max().copied().unwrap_or(0) as u32 + 2 > cap {
                    return Err(HilbertError::NonIntegralDegree(a));
                }
                k += 1;
                continue;
            }
            let box_side: Vec<u32> = check_extent.iter().map(|&e| k + e as u32).collect();
            return Ok(HilbertData {
                ideal: ideal.clone(),
                dims,
                box_side,
                values,
                poly,
                stabilized_from: base,
                dimension,
                mixed_degrees: mixed,
            });
        }
        k += 1;
    }
}

/// Mixed degrees `deg_b` for `|b| = r`.
pub fn mixed_degrees(ideal: &Ideal) -> Result<BTreeMap<Vec<u32>, BigInt>, HilbertError> {
    Ok(hilbert_fit(ideal)?.mixed_degrees)
}

/// Standard model over P¹ of a variety over k(t). The input spec must
/// consist of projective groups plus one parameter group of size 1. The
/// result lives in `(s, x…)` with `s` a new projective group of size 2.
pub fn standard_model(ideal: &Ideal) -> Result<Ideal, HilbertError> {
    let spec = ideal.spec();
    let params = spec.groups_of_kind(GroupKind::Parameter);
    if params.len() != 1 || spec.group(params[0]).size != 1 {
        return Err(HilbertError::ParameterGroup);
    }
    let tg = params[0];
    let t = spec.group_range(tg).start;
    let xs: Vec<usize> = (0..spec.ngroups()).filter(|&g| g != tg).collect();
    for &g in &xs {
        if spec.group(g).kind != GroupKind::Projective {
            return Err(HilbertError::ForeignGroup(spec.group(g).name.clone()));
        }
    }
    // Remove components lying over finitely many values of t: saturate by the
    // product of the k[t]-leading coefficients of a basis with x ≫ t.
    let xnames: Vec<String> = xs.iter().map(|&g| spec.group(g).name.clone()).collect();
    let gb_x = groebner(ideal, &MonomialOrder::Block(xnames))?;
    let xvars: Vec<usize> = xs.iter().flat_map(|&g| spec.group_range(g)).collect();
    let mut h = MPoly::one(spec);
    for g in gb_x.basis() {
        let lead = gb_x.leading_exponent(g).expect("nonzero");
        let pattern: Vec<u32> = xvars.iter().map(|&v| lead[v]).collect();
        let lc = g.coefficient_of(&xvars, &pattern);
        if !lc.is_constant() {
            h = crate::poly::lcm(&h, &lc);
        }
    }
    let saturated = if h.is_constant() {
        Ideal::new(spec, gb_x.basis().to_vec())?
    } else {
        let wname = spec.fresh_name("w");
        let ext = spec.extend(&[VarGroup::new(wname.clone(), 1, GroupKind::Auxiliary)])?;
        let w = MPoly::var(&ext, ext.nvars() - 1);
        let mut gens: Vec<MPoly> = gb_x.basis().iter().map(|g| g.embed(&ext)).collect::<Result<_, _>>()?;
        gens.push(&(&w * &h.embed(&ext)?) - &MPoly::one(&ext));
        elim::eliminate(&Ideal::new(&ext, gens)?, &[wname.as_str()])?
    };
    // t-degree-compatible order, then homogenize each basis element in t
    let gb_t = groebner(&saturated, &MonomialOrder::Blocks(vec![vec![t]]))?;
    let sname = spec.fresh_name("s");
    let mut groups = vec![VarGroup::new(sname, 2, GroupKind::Projective)];
    groups.extend(xs.iter().map(|&g| spec.group(g).clone()));
    let target = VarSpec::new(groups)?;
    let mut gens = Vec::new();
    for g in gb_t.basis() {
        gens.push(homogenize_t(g, t, &target)?);
    }
    Ok(Ideal::new(&target, gens)?)
}

fn homogenize_t(g: &MPoly, t: usize, target: &Arc<VarSpec>) -> Result<MPoly, HilbertError> {
    let spec = g.spec();
    let dt = g.deg_var(t).unwrap_or(0);
    let mut terms = Vec::new();
    for (e, c) in g.terms() {
        let mut e2 = vec![0u32; target.nvars()];
        e2[0] = dt - e[t];
        e2[1] = e[t];
        for v in 0..spec.nvars() {
            if v == t {
                continue;
            }
            let name = spec.var_name(v);
            let w = target.find_var(&name).ok_or(PolyError::UnknownVariable(name))?;
            e2[w] = e[v];
        }
        terms.push((e2, c.clone()));
    }
    Ok(MPoly::from_terms(target, g.domain(), terms)?.primitive_integer())
}

/// Height over k[t] of the cycle: mixed degree `(0, r+1)` of the standard
/// model, read for a single projective group `x`.
pub fn ff_height(ideal: &Ideal) -> Result<BigInt, HilbertError> {
    let model = standard_model(ideal)?;
    let data = hilbert_fit(&model)?;
    let Some(r1) = data.dimension else { return Ok(BigInt::zero()) };
    if data.dims.len() != 2 {
        // multiprojective: sum is not meaningful; report index (0, …) entries
        return Err(HilbertError::ForeignGroup("multiple x groups".into()));
    }
    Ok(data.mixed_degree(&[0, r1 as u32]))
}

/// Mixed degrees of `X` and of its direct image under the linear projection
/// keeping the first `l_i + 1` coordinates of each group, both read off the
/// graph closure `W ⊂ Pⁿ × P^l`: `deg_b(X) = deg_{(b,0)}(W)` and
/// `deg_b(π_*X) = deg_{(0,b)}(W)`.
pub fn pushforward_degrees(
    ideal: &Ideal,
    l: &[usize],
    seed: u64,
) -> Result<(BTreeMap<Vec<u32>, BigInt>, BTreeMap<Vec<u32>, BigInt>), HilbertError> {
    let w = elim::projection_graph(ideal, l, seed)?;
    let data = hilbert_fit(&w)?;
    let m = l.len();
    let mut source = BTreeMap::new();
    let mut image = BTreeMap::new();
    for (b, d) in &data.mixed_degrees {
        if b[m..].iter().all(|&x| x == 0) {
            source.insert(b[..m].to_vec(), d.clone());
        }
        if b[..m].iter().all(|&x| x == 0) {
            image.insert(b[m..].to_vec(), d.clone());
        }
    }
    Ok((source, image))
}

/// Closure in Pⁿ of an affine variety whose coordinates are all the affine
/// variables of the variable spec. Parameter groups are kept in front; the new
/// projective group starts with the homogenizing coordinate.
pub fn projective_closure(v: &Ideal) -> Result<Ideal, HilbertError> {
    let spec = v.spec();
    let mut xvars = Vec::new();
    let mut params = Vec::new();
    for g in 0..spec.ngroups() {
        match spec.group(g).kind {
            GroupKind::Affine => xvars.extend(spec.group_range(g)),
            GroupKind::Parameter => params.push(spec.group(g).clone()),
            _ => return Err(HilbertError::ForeignGroup(spec.group(g).name.clone())),
        }
    }
    if xvars.is_empty() {
        return Err(HilbertError::NoProjectiveGroup);
    }
    let gb = groebner(v, &MonomialOrder::Blocks(vec![xvars.clone()]))?;
    let hname = spec.fresh_name("xh");
    let mut groups = params;
    groups.push(VarGroup::new(hname.clone(), xvars.len() + 1, GroupKind::Projective));
    let target = VarSpec::new(groups)?;
    let h0 = target.group_range(target.group_index(&hname)?).start;
    let mut map = vec![None; spec.nvars()];
    for (k, &x) in xvars.iter().enumerate() {
        map[x] = Some(h0 + 1 + k);
    }
    for g in 0..spec.ngroups() {
        if spec.group(g).kind == GroupKind::Parameter {
            let tg = target.group_index(&spec.group(g).name)?;
            for (a, b) in spec.group_range(g).zip(target.group_range(tg)) {
                map[a] = Some(b);
            }
        }
    }
    let mut gens = Vec::new();
    for g in gb.basis() {
        let d = g.degree_in_vars(&xvars).unwrap_or(0);
        let moved = g.reindex(&target, &map)?;
        let mut terms = Vec::new();
        for (e, c) in moved.terms() {
            let mut e2 = e.clone();
            let dx: u32 = (1..=xvars.len()).map(|k| e[h0 + k]).sum();
            e2[h0] = d - dx;
            terms.push((e2, c.clone()));
        }
        gens.push(MPoly::from_terms(&target, moved.domain(), terms)?);
    }
    Ok(Ideal::new(&target, gens)?)
}

/// Dimension, degree and (with one parameter of size 1) the k[t]-height of
/// an affine variety, through its projective closure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineInvariants {
    pub dimension: Option<usize>,
    pub degree: BigInt,
    pub ff_height: Option<BigInt>,
}

pub fn affine_invariants(v: &Ideal) -> Result<AffineInvariants, HilbertError> {
    let closure = projective_closure(v)?;
    let params = closure.spec().groups_of_kind(GroupKind::Parameter);
    if params.is_empty() {
        let data = hilbert_fit(&closure)?;
        let Some(r) = data.dimension else {
            return Ok(AffineInvariants { dimension: None, degree: BigInt::zero(), ff_height: None });
        };
        let degree = data.mixed_degree(&[r as u32]);
        return Ok(AffineInvariants { dimension: Some(r), degree, ff_height: None });
    }
    let model = standard_model(&closure)?;
    let data = hilbert_fit(&model)?;
    match data.dimension {
        Some(r1) if r1 >= 1 => {
            let r = r1 as u32 - 1;
            Ok(AffineInvariants {
                dimension: Some(r as usize),
                degree: data.mixed_degree(&[1, r]),
                ff_height: Some(data.mixed_degree(&[0, r + 1])),
            })
        }
        _ => Ok(AffineInvariants { dimension: None, degree: BigInt::zero(), ff_height: Some(BigInt::zero()) }),
    }
}
