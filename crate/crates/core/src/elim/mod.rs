//! Gröbner bases under block orders, elimination, implicit equations,
//! minimal polynomials, Chow forms and initial forms.

mod groebner;
mod order;

use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

pub use groebner::{groebner, groebner_with_cap, GroebnerBasis, PAIR_CAP};
pub use order::MonomialOrder;

use crate::poly::{squarefree_part, GroupKind, Ideal, MPoly, PolyError, VarGroup, VarSpec};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ElimError {
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("Buchberger pair cap of {0} exceeded")]
    PairCap(usize),
    #[error("elimination ideal is zero: the image is not a hypersurface")]
    ZeroElimination,
    #[error("elimination ideal is not principal ({0} generators)")]
    NotPrincipal(usize),
    #[error("minimal polynomial has degree 0 in the auxiliary variable")]
    ZeroDegree,
    #[error("expected {expected} polynomials, got {got}")]
    WrongCount { expected: usize, got: usize },
    #[error("{0}")]
    Invalid(String),
}

/// Eliminates the named groups. The result lives in the variable spec with those
/// groups removed.
pub fn eliminate(ideal: &Ideal, drop: &[&str]) -> Result<Ideal, ElimError> {
    let spec = ideal.spec();
    let idx = drop.iter().map(|n| spec.group_index(n)).collect::<Result<Vec<_>, _>>()?;
    eliminate_groups(ideal, &idx)
}

pub fn eliminate_groups(ideal: &Ideal, drop: &[usize]) -> Result<Ideal, ElimError> {
    let spec = ideal.spec();
    if drop.is_empty() {
        let gb = groebner(ideal, &MonomialOrder::GradedLex)?;
        return Ok(Ideal::new(spec, gb.basis().to_vec())?);
    }
    let names: Vec<String> = drop.iter().map(|&g| spec.group(g).name.clone()).collect();
    let gb = groebner(ideal, &MonomialOrder::Block(names))?;
    let vars: Vec<usize> = drop.iter().flat_map(|&g| spec.group_range(g)).collect();
    let kept = gb.free_of(&vars);
    let (target, map) = spec.remove_groups(drop)?;
    let gens = kept
        .iter()
        .map(|g| g.primitive_integer().reindex(&target, &map))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Ideal::new(&target, gens)?)
}

/// Groups of kind projective or affine: the "x" variables.
pub fn x_groups(spec: &VarSpec) -> Vec<usize> {
    (0..spec.ngroups())
        .filter(|&g| matches!(spec.group(g).kind, GroupKind::Projective | GroupKind::Affine))
        .collect()
}

/// Principal generator of an elimination ideal, squarefree and primitive.
fn principal_generator(ideal: &Ideal) -> Result<MPoly, ElimError> {
    match ideal.nonzero_gens().len() {
        0 => Err(ElimError::ZeroElimination),
        1 => Ok(squarefree_part(&ideal.nonzero_gens()[0])),
        k => Err(ElimError::NotPrincipal(k)),
    }
}

/// Adds a group `y` of size `qs.len()` and returns `I(V) + (y_j − q_j)` in
/// the extended spec together with that spec.
fn graph_ideal(v: &Ideal, qs: &[MPoly], yname: &str) -> Result<Ideal, ElimError> {
    let spec = qs.first().map(|q| q.spec().clone()).unwrap_or_else(|| v.spec().clone());
    let ext = spec.extend(&[VarGroup::new(yname, qs.len(), GroupKind::Auxiliary)])?;
    let yg = ext.group_index(yname)?;
    let yvars: Vec<usize> = ext.group_range(yg).collect();
    let mut gens = Vec::new();
    for g in v.gens() {
        gens.push(g.embed(&ext)?);
    }
    for (j, q) in qs.iter().enumerate() {
        let q = q.embed(&ext)?;
        gens.push(&MPoly::var(&ext, yvars[j]) - &q);
    }
    Ok(Ideal::new(&ext, gens)?)
}

/// Implicit equation of the image of `V` under `x ↦ (q_1, …, q_{r+1})`.
/// The result lives in the parameters (and any other non-x groups) plus a
/// new group `y`.
pub fn implicit_equation(v: &Ideal, qs: &[MPoly]) -> Result<MPoly, ElimError> {
    if qs.is_empty() {
        return Err(ElimError::WrongCount { expected: 1, got: 0 });
    }
    let spec = qs[0].spec().clone();
    if qs.iter().any(|q| q.spec() != &spec) {
        return Err(PolyError::SpecMismatch.into());
    }
    let yname = spec.fresh_name("y");
    let g = graph_ideal(v, qs, &yname)?;
    let drop = x_groups(g.spec());
    let elim = eliminate_groups(&g, &drop)?;
    principal_generator(&elim)
}

/// Minimal polynomial `E(y, z)` of `z` for the map `(x, z) ↦ q` on `V × A¹`;
/// `z` must be a group of the q's spec and is kept.
pub fn minimal_polynomial(v: &Ideal, qs: &[MPoly], z_group: &str) -> Result<MPoly, ElimError> {
    if qs.is_empty() {
        return Err(ElimError::WrongCount { expected: 1, got: 0 });
    }
    let spec = qs[0].spec().clone();
    if qs.iter().any(|q| q.spec() != &spec) {
        return Err(PolyError::SpecMismatch.into());
    }
    spec.group_index(z_group)?;
    let yname = spec.fresh_name("y");
    let g = graph_ideal(v, qs, &yname)?;
    let drop = x_groups(g.spec());
    let elim = eliminate_groups(&g, &drop)?;
    let e = principal_generator(&elim)?;
    let zg = e.spec().group_index(z_group)?;
    if e.group_degree(zg).unwrap_or(0) == 0 {
        return Err(ElimError::ZeroDegree);
    }
    Ok(e)
}

/// Random integer linear form in the given variables, nonzero coefficients.
pub(crate) fn random_linear_form(spec: &Arc<VarSpec>, vars: &[usize], rng: &mut ChaCha8Rng) -> MPoly {
    let mut f = MPoly::zero(spec, crate::poly::CoeffDomain::Integer);
    for &v in vars {
        let mut c: i64 = 0;
        while c == 0 {
            c = rng.gen_range(-99..=99);
        }
        f = &f + &MPoly::var(spec, v).scale_int(&BigInt::from(c));
    }
    f
}

/// Eliminant of `V ⊂ P^n` (projective groups of the variable spec) for general linear
/// forms: `counts[i]` forms in projective group `i`. Forms are numbered
/// group by group; form `j` gets a coefficient group `u{j}`. Each projective
/// group is dehomogenized by a seeded random chart `ℓ_i = 1` before the x
/// variables are eliminated. A constant result is retried with fresh charts,
/// since a chart can miss a point of `V`. Returns the polynomial and the
/// projective group owning each form.
pub fn linear_eliminant(v: &Ideal, counts: &[usize], seed: u64) -> Result<(MPoly, Vec<usize>), ElimError> {
    const CHART_ATTEMPTS: u64 = 4;
    let mut last = None;
    for attempt in 0..CHART_ATTEMPTS {
        let s = seed.wrapping_add(attempt.wrapping_mul(0x9e37_79b9_7f4a_7c15));
        let (e, owner) = linear_eliminant_chart(v, counts, s)?;
        if !e.is_constant() {
            return Ok((e, owner));
        }
        last = Some((e, owner));
    }
    Ok(last.expect("at least one attempt"))
}

fn linear_eliminant_chart(v: &Ideal, counts: &[usize], seed: u64) -> Result<(MPoly, Vec<usize>), ElimError> {
    let spec = v.spec();
    let proj = spec.groups_of_kind(GroupKind::Projective);
    if proj.len() != counts.len() {
        return Err(ElimError::WrongCount { expected: proj.len(), got: counts.len() });
    }
    let mut extra = Vec::new();
    let mut owner = Vec::new();
    let mut j = 0;
    for (i, &c) in counts.iter().enumerate() {
        for _ in 0..c {
            let name = spec.fresh_name(&format!("u{j}"));
            extra.push(VarGroup::new(name, spec.group(proj[i]).size, GroupKind::Auxiliary));
            owner.push(i);
            j += 1;
        }
    }
    let ext = spec.extend(&extra)?;
    let mut gens: Vec<MPoly> = v.gens().iter().map(|g| g.embed(&ext)).collect::<Result<_, _>>()?;
    let base = spec.ngroups();
    for (k, &i) in owner.iter().enumerate() {
        let xr: Vec<usize> = ext.group_range(proj[i]).collect();
        let ur: Vec<usize> = ext.group_range(base + k).collect();
        let mut form = MPoly::zero(&ext, crate::poly::CoeffDomain::Integer);
        for (a, b) in xr.iter().zip(&ur) {
            form = &form + &(&MPoly::var(&ext, *a) * &MPoly::var(&ext, *b));
        }
        gens.push(form);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for &g in &proj {
        let xr: Vec<usize> = ext.group_range(g).collect();
        let l = random_linear_form(&ext, &xr, &mut rng);
        gens.push(&l - &MPoly::one(&ext));
    }
    let ideal = Ideal::new(&ext, gens)?;
    let elim = eliminate_groups(&ideal, &x_groups(&ext))?;
    Ok((principal_generator(&elim)?, owner))
}

/// Chow form of an `r`-dimensional `V ⊂ P^n`: a polynomial in `u0, …, ur`.
pub fn chow_form(v: &Ideal, r: usize) -> Result<MPoly, ElimError> {
    let proj = v.spec().groups_of_kind(GroupKind::Projective);
    if proj.len() != 1 {
        return Err(ElimError::Invalid("Chow forms need exactly one projective group".into()));
    }
    Ok(linear_eliminant(v, &[r + 1], 0x5eed)?.0)
}

/// Terms of `f` minimal for the lexicographic sequence of weight vectors.
pub fn initial_form(f: &MPoly, weights: &[Vec<i64>]) -> Result<MPoly, ElimError> {
    if f.is_zero() {
        return Err(PolyError::ZeroPolynomial.into());
    }
    let n = f.spec().nvars();
    if weights.iter().any(|w| w.len() != n) {
        return Err(ElimError::Invalid("weight vector length mismatch".into()));
    }
    let wt = |e: &Vec<u32>| -> Vec<i64> {
        weights.iter().map(|w| w.iter().zip(e).map(|(a, &b)| a * b as i64).sum()).collect()
    };
    let min = f.terms().map(|(e, _)| wt(e)).min().unwrap();
    let terms: Vec<(Vec<u32>, BigRational)> =
        f.terms().filter(|(e, _)| wt(e) == min).map(|(e, c)| (e.clone(), c.clone())).collect();
    Ok(MPoly::from_terms(f.spec(), f.domain(), terms)?)
}

/// Ideal of the closure of the graph of the linear projection that keeps the
/// first `l_i + 1` coordinates of each projective group. The result lives in
/// the variable spec extended by groups `y{i}` of size `l_i + 1`.
pub fn projection_graph(v: &Ideal, l: &[usize], seed: u64) -> Result<Ideal, ElimError> {
    let spec = v.spec();
    let proj = spec.groups_of_kind(GroupKind::Projective);
    if proj.len() != l.len() {
        return Err(ElimError::WrongCount { expected: proj.len(), got: l.len() });
    }
    let mut extra = Vec::new();
    for (i, &li) in l.iter().enumerate() {
        if li >= spec.group(proj[i]).size {
            return Err(ElimError::Invalid("projection target larger than source".into()));
        }
        extra.push(VarGroup::new(spec.fresh_name(&format!("y{i}")), li + 1, GroupKind::Projective));
    }
    let wname = spec.fresh_name("w");
    extra.push(VarGroup::new(wname.clone(), 1, GroupKind::Auxiliary));
    let ext = spec.extend(&extra)?;
    let mut gens: Vec<MPoly> = v.gens().iter().map(|g| g.embed(&ext)).collect::<Result<_, _>>()?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let base = spec.ngroups();
    let mut sat = MPoly::one(&ext);
    for (i, &li) in l.iter().enumerate() {
        let xr: Vec<usize> = ext.group_range(proj[i]).collect();
        let yr: Vec<usize> = ext.group_range(base + i).collect();
        for j in 0..=li {
            for k in j + 1..=li {
                let m = &(&MPoly::var(&ext, xr[j]) * &MPoly::var(&ext, yr[k]))
                    - &(&MPoly::var(&ext, xr[k]) * &MPoly::var(&ext, yr[j]));
                gens.push(m);
            }
        }
        if li + 1 < xr.len() {
            sat = &sat * &random_linear_form(&ext, &xr[..=li], &mut rng);
        }
    }
    let w = MPoly::var(&ext, ext.nvars() - 1);
    gens.push(&(&w * &sat) - &MPoly::one(&ext));
    let ideal = Ideal::new(&ext, gens)?;
    let wg = ext.group_index(&wname)?;
    Ok(eliminate_groups(&ideal, &[wg])?)
}
