//! Resultants at desk scale: Poisson products over 0-cycles, Macaulay
//! resultants, eliminants with their multiplicity, and the product rule.

use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::elim::{self, ElimError};
use crate::hilbert::{self, monomials_of_degree, monomials_of_multidegree, HilbertError};
use crate::poly::{CoeffDomain, GroupKind, Ideal, MPoly, PolyError, VarGroup, VarSpec};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ResultantError {
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Elim(#[from] ElimError),
    #[error(transparent)]
    Hilbert(#[from] HilbertError),
    #[error("point {0} has an all-zero coordinate group")]
    ZeroPoint(usize),
    #[error("point {0} does not match the ambient dimensions")]
    PointShape(usize),
    #[error("multiplicities must be at least 1")]
    ZeroMultiplicity,
    #[error("expected {expected} forms, got {got}")]
    WrongCount { expected: usize, got: usize },
    #[error("form {0} is not homogeneous in the variables")]
    NotHomogeneous(usize),
    #[error("Macaulay minor singular after {0} re-selections")]
    SingularMinor(usize),
    #[error("Macaulay resultants are limited to n ≤ 3")]
    TooLarge,
    #[error("index has length {got}, the cycle needs {expected}")]
    IndexLength { expected: usize, got: usize },
    #[error("the variety is empty")]
    EmptyVariety,
    #[error("inconsistent multiplicity: predicted {predicted}, eliminant degree {actual} in block {block}")]
    Inconsistent { block: usize, predicted: BigInt, actual: u32 },
}

/// A 0-cycle with rational points: coordinates per projective group and a
/// multiplicity per point.
#[derive(Clone, Debug, PartialEq)]
pub struct ZeroCycle {
    pub dims: Vec<usize>,
    pub points: Vec<(Vec<Vec<BigRational>>, u32)>,
}

impl ZeroCycle {
    pub fn new(dims: &[usize], points: Vec<(Vec<Vec<BigRational>>, u32)>) -> Result<ZeroCycle, ResultantError> {
        for (i, (p, m)) in points.iter().enumerate() {
            if *m == 0 {
                return Err(ResultantError::ZeroMultiplicity);
            }
            if p.len() != dims.len() || p.iter().zip(dims).any(|(g, &n)| g.len() != n + 1) {
                return Err(ResultantError::PointShape(i));
            }
            if p.iter().any(|g| g.iter().all(|c| c.is_zero())) {
                return Err(ResultantError::ZeroPoint(i));
            }
        }
        Ok(ZeroCycle { dims: dims.to_vec(), points })
    }

    /// Points with integer coordinates.
    pub fn from_integers(dims: &[usize], points: &[(Vec<Vec<i64>>, u32)]) -> Result<ZeroCycle, ResultantError> {
        let pts = points
            .iter()
            .map(|(p, m)| {
                let q = p
                    .iter()
                    .map(|g| g.iter().map(|&c| BigRational::from_integer(BigInt::from(c))).collect())
                    .collect();
                (q, *m)
            })
            .collect();
        ZeroCycle::new(dims, pts)
    }

    pub fn degree(&self) -> u64 {
        self.points.iter().map(|(_, m)| *m as u64).sum()
    }

    /// `X₁ × X₂`.
    pub fn product(&self, other: &ZeroCycle) -> ZeroCycle {
        let dims = self.dims.iter().chain(&other.dims).copied().collect();
        let mut points = Vec::new();
        for (p, m) in &self.points {
            for (q, k) in &other.points {
                points.push((p.iter().chain(q).cloned().collect(), m * k));
            }
        }
        ZeroCycle { dims, points }
    }

    /// Ideal of the support (ignoring multiplicities) in `spec`, whose
    /// projective groups must match `dims`.
    pub fn support_ideal(&self, spec: &Arc<VarSpec>) -> Result<Ideal, ResultantError> {
        let groups = spec.groups_of_kind(GroupKind::Projective);
        let mut acc: Option<Vec<MPoly>> = None;
        for (p, _) in &self.points {
            let mut gens = Vec::new();
            for (gi, coords) in groups.iter().zip(p) {
                let vars: Vec<usize> = spec.group_range(*gi).collect();
                for a in 0..vars.len() {
                    for b in a + 1..vars.len() {
                        let m = &MPoly::var(spec, vars[a]).scale(&coords[b])
                            - &MPoly::var(spec, vars[b]).scale(&coords[a]);
                        if !m.is_zero() {
                            gens.push(m.primitive_integer());
                        }
                    }
                }
            }
            acc = Some(match acc {
                None => gens,
                Some(prev) => {
                    let mut out = Vec::new();
                    for f in &prev {
                        for g in &gens {
                            out.push(f * g);
                        }
                    }
                    out
                }
            });
        }
        Ok(Ideal::new(spec, acc.unwrap_or_default())?)
    }
}

/// Spec holding the coefficients of a general form of multidegree `d` on
/// `dims`, one variable `u_k` per monomial in graded order.
pub fn general_form_spec(dims: &[usize], d: &[u32]) -> Result<(Arc<VarSpec>, Vec<Vec<u32>>), ResultantError> {
    let mut offset = 0;
    let mut groups = Vec::new();
    for &n in dims {
        groups.push((offset..offset + n + 1).collect::<Vec<usize>>());
        offset += n + 1;
    }
    let monos = monomials_of_multidegree(&groups, offset, d);
    let spec = VarSpec::new(vec![VarGroup::new("u", monos.len(), GroupKind::Auxiliary)])?;
    Ok((spec, monos))
}

/// The primitive integer polynomial proportional to `∏ F₀(ξ)^{m_ξ}`.
pub fn poisson_resultant(x: &ZeroCycle, d0: &[u32]) -> Result<MPoly, ResultantError> {
    let (spec, monos) = general_form_spec(&x.dims, d0)?;
    let mut acc = MPoly::one(&spec);
    for (p, m) in &x.points {
        let flat: Vec<&BigRational> = p.iter().flatten().collect();
        let mut form = MPoly::zero(&spec, CoeffDomain::Rational);
        for (k, e) in monos.iter().enumerate() {
            let mut c = BigRational::one();
            for (v, &ev) in e.iter().enumerate() {
                for _ in 0..ev {
                    c *= flat[v];
                }
            }
            form = &form + &MPoly::var(&spec, k).scale(&c);
        }
        acc = &acc * &form.pow(*m);
    }
    Ok(acc.primitive_integer())
}

/// Determinant of a square rational matrix.
pub fn det_rational(mut m: Vec<Vec<BigRational>>) -> BigRational {
    let n = m.len();
    let mut det = BigRational::one();
    for col in 0..n {
        let Some(piv) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return BigRational::zero();
        };
        if piv != col {
            m.swap(piv, col);
            det = -det;
        }
        let p = m[col][col].clone();
        det *= &p;
        for r in col + 1..n {
            if m[r][col].is_zero() {
                continue;
            }
            let f = &m[r][col] / &p;
            for c in col..n {
                let sub = &f * &m[col][c];
                m[r][c] -= sub;
            }
        }
    }
    det
}

/// Determinant of a square polynomial matrix by fraction-free elimination.
pub fn det_poly(mut m: Vec<Vec<MPoly>>, spec: &Arc<VarSpec>) -> MPoly {
    let n = m.len();
    if n == 0 {
        return MPoly::one(spec);
    }
    let mut sign = false;
    let mut prev = MPoly::one(spec);
    for k in 0..n - 1 {
        let Some(piv) = (k..n).find(|&r| !m[r][k].is_zero()) else {
            return MPoly::zero(spec, CoeffDomain::Integer);
        };
        if piv != k {
            m.swap(piv, k);
            sign = !sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&m[k][k] * &m[i][j]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = num.div_exact(&prev).expect("fraction-free step divides exactly");
            }
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if sign {
        -d
    } else {
        d
    }
}

/// Coefficients of `f` with respect to the projective group `x`.
fn coeffs_in(f: &MPoly, xvars: &[usize], coef_spec: &Arc<VarSpec>, map: &[Option<usize>]) -> Result<Vec<(Vec<u32>, MPoly)>, ResultantError> {
    let mut out = Vec::new();
    for (pat, c) in f.split_by(xvars) {
        out.push((pat, c.reindex(coef_spec, map)?));
    }
    Ok(out)
}

/// Macaulay's quotient `det M / det M'` for `n+1` homogeneous forms in the
/// single projective group of the variable spec. Other groups are treated as
/// symbolic coefficients; the result lives in the variable spec without the
/// projective group. Normalized by `Res(x₀^{d₀}, …, x_n^{d_n}) = 1`.
pub fn macaulay_resultant(fs: &[MPoly], seed: u64) -> Result<MPoly, ResultantError> {
    let spec = fs.first().ok_or(ResultantError::WrongCount { expected: 2, got: 0 })?.spec().clone();
    let proj = spec.groups_of_kind(GroupKind::Projective);
    if proj.len() != 1 {
        return Err(ResultantError::Poly(PolyError::InvalidSpec("need one projective group".into())));
    }
    let xvars: Vec<usize> = spec.group_range(proj[0]).collect();
    let n = xvars.len() - 1;
    if fs.len() != n + 1 {
        return Err(ResultantError::WrongCount { expected: n + 1, got: fs.len() });
    }
    if n > 3 {
        return Err(ResultantError::TooLarge);
    }
    let mut degs = Vec::new();
    for (i, f) in fs.iter().enumerate() {
        let d = f.is_homogeneous_in(&xvars).ok_or(ResultantError::NotHomogeneous(i))?;
        if f.is_zero() {
            return Err(ResultantError::NotHomogeneous(i));
        }
        degs.push(d);
    }
    let (coef_spec, map) = if spec.ngroups() > 1 {
        spec.remove_groups(&[proj[0]])?
    } else {
        let s = VarSpec::new(vec![VarGroup::new(spec.fresh_name("c"), 1, GroupKind::Auxiliary)])?;
        (s, vec![None; spec.nvars()])
    };
    let coeffs: Vec<Vec<(Vec<u32>, MPoly)>> =
        fs.iter().map(|f| coeffs_in(f, &xvars, &coef_spec, &map)).collect::<Result<_, _>>()?;
    let prod_deg: u64 = degs.iter().map(|&d| d as u64).product();
    let mut perm: Vec<usize> = (0..=n).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    const ATTEMPTS: usize = 5;
    for attempt in 0..=ATTEMPTS {
        if attempt > 0 {
            perm.shuffle(&mut rng);
        }
        // f∘σ: variable k of the permuted system reads variable perm[k]
        let permuted: Vec<Vec<(Vec<u32>, MPoly)>> = coeffs
            .iter()
            .map(|cs| {
                cs.iter()
                    .map(|(e, c)| ((0..=n).map(|k| e[perm[k]]).collect(), c.clone()))
                    .collect()
            })
            .collect();
        if let Some(r) = macaulay_quotient(&permuted, &degs, &coef_spec) {
            let flip = permutation_is_odd(&perm) && prod_deg % 2 == 1;
            let r = if flip { -r } else { r };
            return Ok(r);
        }
    }
    Err(ResultantError::SingularMinor(ATTEMPTS))
}

fn permutation_is_odd(p: &[usize]) -> bool {
    let mut inv = 0;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                inv += 1;
            }
        }
    }
    inv % 2 == 1
}

/// Value of the resultant for forms with rational coefficients.
pub fn macaulay_resultant_value(fs: &[MPoly], seed: u64) -> Result<BigRational, ResultantError> {
    let r = macaulay_resultant(fs, seed)?;
    Ok(r.constant_value().unwrap_or_else(BigRational::zero))
}

fn macaulay_quotient(coeffs: &[Vec<(Vec<u32>, MPoly)>], degs: &[u32], spec: &Arc<VarSpec>) -> Option<MPoly> {
    let n = degs.len() - 1;
    let big_d: u32 = degs.iter().map(|d| d - 1).sum::<u32>() + 1;
    let monos = monomials_of_degree(n + 1, big_d);
    let index: std::collections::HashMap<&Vec<u32>, usize> = monos.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let mut rows: Vec<Vec<MPoly>> = Vec::with_capacity(monos.len());
    let mut reduced = vec![false; monos.len()];
    for (k, a) in monos.iter().enumerate() {
        let divisible: Vec<usize> = (0..=n).filter(|&i| a[i] >= degs[i]).collect();
        let i = divisible[0];
        reduced[k] = divisible.len() == 1;
        let mut shift = a.clone();
        shift[i] -= degs[i];
        let mut row = vec![MPoly::zero(spec, CoeffDomain::Integer); monos.len()];
        for (e, c) in &coeffs[i] {
            let target: Vec<u32> = e.iter().zip(&shift).map(|(x, y)| x + y).collect();
            row[index[&target]] = &row[index[&target]] + c;
        }
        rows.push(row);
    }
    let keep: Vec<usize> = (0..monos.len()).filter(|&k| !reduced[k]).collect();
    let minor: Vec<Vec<MPoly>> = keep.iter().map(|&r| keep.iter().map(|&c| rows[r][c].clone()).collect()).collect();
    let all_constant = rows.iter().flatten().all(|p| p.is_constant());
    if all_constant {
        let to_q = |m: &Vec<Vec<MPoly>>| -> Vec<Vec<BigRational>> {
            m.iter()
                .map(|r| r.iter().map(|p| p.constant_value().unwrap_or_else(BigRational::zero)).collect())
                .collect()
        };
        let den = det_rational(to_q(&minor));
        if den.is_zero() {
            return None;
        }
        let num = det_rational(to_q(&rows));
        return Some(MPoly::constant(spec, num / den));
    }
    let den = det_poly(minor, spec);
    if den.is_zero() {
        return None;
    }
    let num = det_poly(rows, spec);
    Some(num.div_exact(&den).expect("Macaulay quotient is polynomial"))
}

#[derive(Clone, Debug)]
pub struct EliminantData {
    pub elim: MPoly,
    pub nu: u32,
    pub res: MPoly,
    /// Projective group owning each block of the index.
    pub owner: Vec<usize>,
    pub predicted_degrees: Vec<BigInt>,
}

/// `Res_{e(c)}(V) = Elim^ν`, with `ν` read off the predicted partial degrees
/// `deg_{c − e_{owner(i)}}(V)` of the resultant.
pub fn eliminant_with_multiplicity(v: &Ideal, c: &[usize], seed: u64) -> Result<EliminantData, ResultantError> {
    let data = hilbert::hilbert_fit(v)?;
    let r = data.dimension.ok_or(ResultantError::EmptyVariety)?;
    let total: usize = c.iter().sum();
    if total != r + 1 {
        return Err(ResultantError::IndexLength { expected: r + 1, got: total });
    }
    let (elim, owner) = elim::linear_eliminant(v, c, seed)?;
    let espec = elim.spec().clone();
    let base = espec.ngroups() - owner.len();
    let mut nu: Option<u32> = None;
    let mut predicted = Vec::new();
    for (i, &g) in owner.iter().enumerate() {
        let mut b: Vec<u32> = c.iter().map(|&x| x as u32).collect();
        b[g] -= 1;
        let want = data.mixed_degree(&b);
        let vars: Vec<usize> = espec.group_range(base + i).collect();
        let have = elim.degree_in_vars(&vars).unwrap_or(0);
        predicted.push(want.clone());
        if have == 0 {
            if !want.is_zero() {
                return Err(ResultantError::Inconsistent { block: i, predicted: want, actual: 0 });
            }
            continue;
        }
        let q = &want / BigInt::from(have);
        if &q * BigInt::from(have) != want || q.is_zero() {
            return Err(ResultantError::Inconsistent { block: i, predicted: want, actual: have });
        }
        let q = q.to_u32().unwrap();
        if nu.is_some_and(|k| k != q) {
            return Err(ResultantError::Inconsistent { block: i, predicted: want, actual: have });
        }
        nu = Some(q);
    }
    let nu = nu.unwrap_or(1);
    let res = elim.pow(nu);
    Ok(EliminantData { elim, nu, res, owner, predicted_degrees: predicted })
}

/// Normalized primitive form, for comparisons up to a rational scalar.
pub fn normalize(f: &MPoly) -> MPoly {
    if f.is_zero() {
        return f.clone();
    }
    let p = f.primitive_integer();
    let lead = p.leading_term().map(|(_, c)| c.is_negative()).unwrap_or(false);
    if lead {
        -p
    } else {
        p
    }
}

/// Product rule for resultants of `X₁ × X₂` with `X₁, X₂` zero-cycles.
/// Returns whether both sides agree up to a rational scalar.
pub fn product_resultant_check(
    x1: &ZeroCycle,
    x2: &ZeroCycle,
    c1: &[usize],
    c2: &[usize],
    seed: u64,
) -> Result<bool, ResultantError> {
    let l1: usize = c1.iter().sum();
    let l2: usize = c2.iter().sum();
    let d0: Vec<u32> = c1.iter().chain(c2).map(|&x| x as u32).collect();
    let prod = x1.product(x2);
    match (l1, l2) {
        (1, 0) => {
            let lhs = poisson_resultant(&prod, &d0)?;
            let rhs = poisson_resultant(x1, &c1.iter().map(|&x| x as u32).collect::<Vec<_>>())?
                .pow(x2.degree() as u32);
            Ok(normalize(&lhs).to_string() == normalize(&rhs).to_string())
        }
        (0, 1) => {
            let lhs = poisson_resultant(&prod, &d0)?;
            let rhs = poisson_resultant(x2, &c2.iter().map(|&x| x as u32).collect::<Vec<_>>())?
                .pow(x1.degree() as u32);
            Ok(normalize(&lhs).to_string() == normalize(&rhs).to_string())
        }
        _ => {
            // the rule predicts 1; the eliminant of the product must be trivial
            let mut groups = Vec::new();
            for (i, &n) in prod.dims.iter().enumerate() {
                groups.push(VarGroup::new(format!("x{i}"), n + 1, GroupKind::Projective));
            }
            let spec = VarSpec::new(groups)?;
            let ideal = prod.support_ideal(&spec)?;
            let counts: Vec<usize> = c1.iter().chain(c2).copied().collect();
            match elim::linear_eliminant(&ideal, &counts, seed) {
                Ok((e, _)) => Ok(e.is_constant()),
                Err(ElimError::NotPrincipal(_)) | Err(ElimError::ZeroElimination) => Ok(true),
                Err(e) => Err(e.into()),
            }
        }
    }
}
