use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::collections::HashMap;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{PolyError, VarSpec};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CoeffDomain {
    Integer,
    Rational,
}

/// Multidegree of a multihomogeneous polynomial, one entry per projective group.
/// The zero polynomial reports the zero vector with `zero` set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Multidegree {
    pub degrees: Vec<u32>,
    pub zero: bool,
}

/// Graded-lex comparison on exponent vectors, variable 0 ranked highest.
pub fn grlex_cmp(a: &[u32], b: &[u32]) -> Ordering {
    let da: u64 = a.iter().map(|&e| e as u64).sum();
    let db: u64 = b.iter().map(|&e| e as u64).sum();
    da.cmp(&db).then_with(|| a.cmp(b))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MPoly {
    spec: Arc<VarSpec>,
    domain: CoeffDomain,
    terms: BTreeMap<Vec<u32>, BigRational>,
}

fn is_integral(c: &BigRational) -> bool {
    c.denom().is_one()
}

impl MPoly {
    pub fn zero(spec: &Arc<VarSpec>, domain: CoeffDomain) -> MPoly {
        MPoly { spec: spec.clone(), domain, terms: BTreeMap::new() }
    }

    pub fn constant(spec: &Arc<VarSpec>, c: BigRational) -> MPoly {
        let domain = if is_integral(&c) { CoeffDomain::Integer } else { CoeffDomain::Rational };
        let mut p = MPoly::zero(spec, domain);
        if !c.is_zero() {
            p.terms.insert(vec![0; spec.nvars()], c);
        }
        p
    }

    pub fn from_int(spec: &Arc<VarSpec>, c: impl Into<BigInt>) -> MPoly {
        MPoly::constant(spec, BigRational::from_integer(c.into()))
    }

    pub fn one(spec: &Arc<VarSpec>) -> MPoly {
        MPoly::from_int(spec, 1)
    }

    pub fn var(spec: &Arc<VarSpec>, v: usize) -> MPoly {
        assert!(v < spec.nvars(), "variable index out of range");
        let mut e = vec![0; spec.nvars()];
        e[v] = 1;
        MPoly::monomial(spec, e, BigRational::one())
    }

    /// Variable by printed name, e.g. `x_1` or `t`.
    pub fn var_named(spec: &Arc<VarSpec>, name: &str) -> Result<MPoly, PolyError> {
        spec.find_var(name)
            .map(|v| MPoly::var(spec, v))
            .ok_or_else(|| PolyError::UnknownVariable(name.to_string()))
    }

    pub fn monomial(spec: &Arc<VarSpec>, exps: Vec<u32>, c: BigRational) -> MPoly {
        assert_eq!(exps.len(), spec.nvars());
        let domain = if is_integral(&c) { CoeffDomain::Integer } else { CoeffDomain::Rational };
        let mut p = MPoly::zero(spec, domain);
        if !c.is_zero() {
            p.terms.insert(exps, c);
        }
        p
    }

    /// Builds from (exponents, coefficient) pairs, summing duplicates.
    pub fn from_terms(
        spec: &Arc<VarSpec>,
        domain: CoeffDomain,
        terms: impl IntoIterator<Item = (Vec<u32>, BigRational)>,
    ) -> Result<MPoly, PolyError> {
        let mut map: BTreeMap<Vec<u32>, BigRational> = BTreeMap::new();
        for (e, c) in terms {
            if e.len() != spec.nvars() {
                return Err(PolyError::ExponentLength { expected: spec.nvars(), got: e.len() });
            }
            if domain == CoeffDomain::Integer && !is_integral(&c) {
                return Err(PolyError::NonIntegral);
            }
            add_term(&mut map, e, c);
        }
        Ok(MPoly { spec: spec.clone(), domain, terms: map })
    }


    pub fn spec(&self) -> &Arc<VarSpec> {
        &self.spec
    }

    pub fn domain(&self) -> CoeffDomain {
        self.domain
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn nterms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &BigRational)> {
        self.terms.iter()
    }

    pub fn term_map(&self) -> &BTreeMap<Vec<u32>, BigRational> {
        &self.terms
    }

    pub fn coeff(&self, exps: &[u32]) -> BigRational {
        self.terms.get(exps).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|e| e.iter().all(|&x| x == 0))
    }

    pub fn constant_value(&self) -> Option<BigRational> {
        if !self.is_constant() {
            return None;
        }
        Some(self.terms.values().next().cloned().unwrap_or_else(BigRational::zero))
    }

    /// Terms sorted by graded-lex, largest first.
    pub fn sorted_terms(&self) -> Vec<(&Vec<u32>, &BigRational)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| grlex_cmp(b.0, a.0));
        v
    }

    pub fn leading_term(&self) -> Option<(&Vec<u32>, &BigRational)> {
        self.terms.iter().max_by(|a, b| grlex_cmp(a.0, b.0))
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn degree_in_vars(&self, vars: &[usize]) -> Option<u32> {
        self.terms.keys().map(|e| vars.iter().map(|&v| e[v]).sum()).max()
    }

    pub fn min_degree_in_vars(&self, vars: &[usize]) -> Option<u32> {
        self.terms.keys().map(|e| vars.iter().map(|&v| e[v]).sum()).min()
    }

    pub fn deg_var(&self, v: usize) -> Option<u32> {
        self.terms.keys().map(|e| e[v]).max()
    }

    pub fn group_vars(&self, gi: usize) -> Vec<usize> {
        self.spec.group_range(gi).collect()
    }

    /// `deg_{x_i}(f)`; `None` stands for the degree of the zero polynomial.
    pub fn partial_degree(&self, group: &str) -> Result<Option<u32>, PolyError> {
        let gi = self.spec.group_index(group)?;
        Ok(self.degree_in_vars(&self.group_vars(gi)))
    }

    pub fn group_degree(&self, gi: usize) -> Option<u32> {
        self.degree_in_vars(&self.group_vars(gi))
    }

    /// Degree over the union of several groups.
    pub fn groups_degree(&self, groups: &[usize]) -> Option<u32> {
        let vars: Vec<usize> = groups.iter().flat_map(|&g| self.spec.group_range(g)).collect();
        self.degree_in_vars(&vars)
    }

    pub fn is_homogeneous_in(&self, vars: &[usize]) -> Option<u32> {
        let mut d = None;
        for e in self.terms.keys() {
            let s: u32 = vars.iter().map(|&v| e[v]).sum();
            match d {
                None => d = Some(s),
                Some(x) if x != s => return None,
                _ => {}
            }
        }
        Some(d.unwrap_or(0))
    }

    /// Multidegree over the projective groups, or `None` when some group is inhomogeneous.
    pub fn is_multihomogeneous(&self) -> Option<Multidegree> {
        let proj = self.spec.groups_of_kind(super::GroupKind::Projective);
        if proj.is_empty() {
            return None;
        }
        let mut degrees = Vec::with_capacity(proj.len());
        for gi in proj {
            degrees.push(self.is_homogeneous_in(&self.group_vars(gi))?);
        }
        Some(Multidegree { degrees, zero: self.is_zero() })
    }

    pub fn to_rational(&self) -> MPoly {
        MPoly { spec: self.spec.clone(), domain: CoeffDomain::Rational, terms: self.terms.clone() }
    }

    pub fn to_integer(&self) -> Result<MPoly, PolyError> {
        if self.terms.values().all(is_integral) {
            Ok(MPoly { spec: self.spec.clone(), domain: CoeffDomain::Integer, terms: self.terms.clone() })
        } else {
            Err(PolyError::NonIntegral)
        }
    }

    pub fn has_integer_coeffs(&self) -> bool {
        self.terms.values().all(is_integral)
    }

    pub fn require_integer(&self) -> Result<(), PolyError> {
        if self.domain == CoeffDomain::Integer {
            Ok(())
        } else {
            Err(PolyError::DomainMismatch)
        }
    }

    pub fn integer_coeffs(&self) -> impl Iterator<Item = &BigInt> {
        self.terms.values().map(|c| c.numer())
    }

    fn check_compatible(&self, other: &MPoly) -> Result<(), PolyError> {
        if self.spec != other.spec {
            return Err(PolyError::SpecMismatch);
        }
        if self.domain != other.domain {
            return Err(PolyError::DomainMismatch);
        }
        Ok(())
    }

    fn joined_domain(&self, other: &MPoly) -> CoeffDomain {
        if self.domain == CoeffDomain::Integer && other.domain == CoeffDomain::Integer {
            CoeffDomain::Integer
        } else {
            CoeffDomain::Rational
        }
    }

    pub fn try_add(&self, other: &MPoly) -> Result<MPoly, PolyError> {
        self.check_compatible(other)?;
        Ok(self.add_unchecked(other))
    }

    pub fn try_mul(&self, other: &MPoly) -> Result<MPoly, PolyError> {
        self.check_compatible(other)?;
        Ok(self.mul_unchecked(other))
    }

    fn add_unchecked(&self, other: &MPoly) -> MPoly {
        let (big, small) = if self.terms.len() >= other.terms.len() { (self, other) } else { (other, self) };
        let mut terms = big.terms.clone();
        for (e, c) in &small.terms {
            add_term(&mut terms, e.clone(), c.clone());
        }
        MPoly { spec: self.spec.clone(), domain: self.joined_domain(other), terms }
    }

    fn mul_unchecked(&self, other: &MPoly) -> MPoly {
        let mut terms = BTreeMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                add_term(&mut terms, e, ca * cb);
            }
        }
        MPoly { spec: self.spec.clone(), domain: self.joined_domain(other), terms }
    }

    pub fn scale(&self, c: &BigRational) -> MPoly {
        if c.is_zero() {
            return MPoly::zero(&self.spec, self.domain);
        }
        let domain = if self.domain == CoeffDomain::Integer && is_integral(c) {
            CoeffDomain::Integer
        } else {
            CoeffDomain::Rational
        };
        let terms = self.terms.iter().map(|(e, x)| (e.clone(), x * c)).collect();
        MPoly { spec: self.spec.clone(), domain, terms }
    }

    pub fn scale_int(&self, c: &BigInt) -> MPoly {
        self.scale(&BigRational::from_integer(c.clone()))
    }

    pub fn mul_monomial(&self, exps: &[u32]) -> MPoly {
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| (e.iter().zip(exps).map(|(a, b)| a + b).collect(), c.clone()))
            .collect();
        MPoly { spec: self.spec.clone(), domain: self.domain, terms }
    }

    pub fn pow(&self, k: u32) -> MPoly {
        let mut result = MPoly::one(&self.spec);
        result.domain = self.domain;
        if k == 0 {
            return result;
        }
        let mut base = self.clone();
        let mut k = k;
        loop {
            if k & 1 == 1 {
                result = &result * &base;
            }
            k >>= 1;
            if k == 0 {
                break;
            }
            base = &base * &base;
        }
        result
    }

    pub fn derivative(&self, v: usize) -> MPoly {
        let mut terms = BTreeMap::new();
        for (e, c) in &self.terms {
            if e[v] > 0 {
                let mut e2 = e.clone();
                e2[v] -= 1;
                add_term(&mut terms, e2, c * BigRational::from_integer(BigInt::from(e[v])));
            }
        }
        MPoly { spec: self.spec.clone(), domain: self.domain, terms }
    }

    /// Evaluates at a full rational point.
    pub fn eval(&self, point: &[BigRational]) -> BigRational {
        assert_eq!(point.len(), self.spec.nvars());
        let mut cache: HashMap<(usize, u32), BigRational> = HashMap::new();
        let mut total = BigRational::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (v, &k) in e.iter().enumerate() {
                if k > 0 {
                    let pw = cache
                        .entry((v, k))
                        .or_insert_with(|| num_traits::pow(point[v].clone(), k as usize));
                    t *= &*pw;
                }
            }
            total += t;
        }
        total
    }

    /// Substitutes rational values for some variables, staying in the same spec.
    pub fn eval_partial(&self, values: &[(usize, BigRational)]) -> MPoly {
        let mut terms = BTreeMap::new();
        for (e, c) in &self.terms {
            let mut e2 = e.clone();
            let mut t = c.clone();
            for (v, val) in values {
                let k = e[*v];
                if k > 0 {
                    t *= num_traits::pow(val.clone(), k as usize);
                    e2[*v] = 0;
                }
            }
            add_term(&mut terms, e2, t);
        }
        let domain = if self.domain == CoeffDomain::Integer && terms.values().all(is_integral) {
            CoeffDomain::Integer
        } else {
            CoeffDomain::Rational
        };
        MPoly { spec: self.spec.clone(), domain, terms }
    }

    /// Composition: each bound variable is replaced by its polynomial; every
    /// unbound variable must exist (by printed name) in the target spec.
    pub fn substitute(&self, bindings: &[(usize, MPoly)], target: &Arc<VarSpec>) -> Result<MPoly, PolyError> {
        for (v, p) in bindings {
            if *v >= self.spec.nvars() {
                return Err(PolyError::UnknownVariable(format!("#{v}")));
            }
            if &p.spec != target {
                return Err(PolyError::SpecMismatch);
            }
        }
        let nv = self.spec.nvars();
        let mut image: Vec<Option<MPoly>> = vec![None; nv];
        for (v, p) in bindings {
            image[*v] = Some(p.clone());
        }
        for (v, slot) in image.iter_mut().enumerate() {
            if slot.is_none() {
                let name = self.spec.var_name(v);
                let tv = target
                    .find_var(&name)
                    .ok_or_else(|| PolyError::UnknownVariable(name.clone()))?;
                *slot = Some(MPoly::var(target, tv));
            }
        }
        let image: Vec<MPoly> = image.into_iter().map(Option::unwrap).collect();
        let mut powers: HashMap<(usize, u32), MPoly> = HashMap::new();
        let mut acc = MPoly::zero(target, self.domain);
        for (e, c) in &self.terms {
            let mut t = MPoly::constant(target, c.clone());
            for (v, &k) in e.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                let pw = powers.entry((v, k)).or_insert_with(|| image[v].pow(k));
                t = &t * &*pw;
            }
            acc = &acc + &t;
        }
        if self.domain == CoeffDomain::Rational || bindings.iter().any(|(_, p)| p.domain == CoeffDomain::Rational) {
            acc.domain = CoeffDomain::Rational;
        }
        Ok(acc)
    }

    /// Moves the polynomial into another spec by variable name.
    pub fn embed(&self, target: &Arc<VarSpec>) -> Result<MPoly, PolyError> {
        if &self.spec == target {
            return Ok(self.clone());
        }
        let mut map = Vec::with_capacity(self.spec.nvars());
        for v in 0..self.spec.nvars() {
            let name = self.spec.var_name(v);
            map.push(Some(target.find_var(&name).ok_or(PolyError::UnknownVariable(name))?));
        }
        self.reindex(target, &map)
    }

    /// Re-indexes variables with `map[old] = Some(new)`; variables mapped to
    /// `None` must not occur.
    pub fn reindex(&self, target: &Arc<VarSpec>, map: &[Option<usize>]) -> Result<MPoly, PolyError> {
        let mut terms = BTreeMap::new();
        for (e, c) in &self.terms {
            let mut e2 = vec![0; target.nvars()];
            for (v, &k) in e.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                match map[v] {
                    Some(w) => e2[w] += k,
                    None => return Err(PolyError::UnknownVariable(self.spec.var_name(v))),
                }
            }
            add_term(&mut terms, e2, c.clone());
        }
        Ok(MPoly { spec: target.clone(), domain: self.domain, terms })
    }

    /// Sum of the terms whose exponents on `vars` equal `pattern`, with those
    /// exponents cleared (same spec).
    pub fn coefficient_of(&self, vars: &[usize], pattern: &[u32]) -> MPoly {
        let mut terms = BTreeMap::new();
        for (e, c) in &self.terms {
            if vars.iter().zip(pattern).all(|(&v, &k)| e[v] == k) {
                let mut e2 = e.clone();
                for &v in vars {
                    e2[v] = 0;
                }
                terms.insert(e2, c.clone());
            }
        }
        MPoly { spec: self.spec.clone(), domain: self.domain, terms }
    }

    /// Coefficient of a monomial in one group, as a polynomial in the
    /// remaining variables (the group is removed from the variable spec).
    pub fn coefficient_extract(&self, group: &str, pattern: &[u32]) -> Result<MPoly, PolyError> {
        let gi = self.spec.group_index(group)?;
        let vars = self.group_vars(gi);
        if pattern.len() != vars.len() {
            return Err(PolyError::ExponentLength { expected: vars.len(), got: pattern.len() });
        }
        let c = self.coefficient_of(&vars, pattern);
        if self.spec.ngroups() == 1 {
            return Err(PolyError::InvalidSpec("cannot remove the only group".into()));
        }
        let (spec, map) = self.spec.remove_groups(&[gi])?;
        c.reindex(&spec, &map)
    }

    /// Coefficients as a polynomial in `v`: entry `k` is the coefficient of `v^k`.
    pub fn univariate_coeffs(&self, v: usize) -> Vec<MPoly> {
        let d = self.deg_var(v).unwrap_or(0) as usize;
        let mut out = vec![MPoly::zero(&self.spec, self.domain); d + 1];
        for (e, c) in &self.terms {
            let mut e2 = e.clone();
            let k = e2[v] as usize;
            e2[v] = 0;
            out[k].terms.insert(e2, c.clone());
        }
        out
    }

    /// Splits by the exponent pattern on `vars`.
    pub fn split_by(&self, vars: &[usize]) -> BTreeMap<Vec<u32>, MPoly> {
        let mut out: BTreeMap<Vec<u32>, MPoly> = BTreeMap::new();
        for (e, c) in &self.terms {
            let key: Vec<u32> = vars.iter().map(|&v| e[v]).collect();
            let mut e2 = e.clone();
            for &v in vars {
                e2[v] = 0;
            }
            out.entry(key)
                .or_insert_with(|| MPoly::zero(&self.spec, self.domain))
                .terms
                .insert(e2, c.clone());
        }
        out
    }

    /// (content, primitive part) over ℤ; the primitive part has a positive
    /// graded-lex leading coefficient.
    pub fn content_and_primitive(&self) -> Result<(BigInt, MPoly), PolyError> {
        self.require_integer()?;
        if self.is_zero() {
            return Err(PolyError::ZeroPolynomial);
        }
        let mut g = BigInt::zero();
        for c in self.terms.values() {
            g = g.gcd(c.numer());
            if g.is_one() {
                break;
            }
        }
        let lead_neg = self.leading_term().map(|(_, c)| c.is_negative()).unwrap_or(false);
        let div = if lead_neg { -g.clone() } else { g.clone() };
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| (e.clone(), BigRational::from_integer(c.numer() / &div)))
            .collect();
        Ok((g, MPoly { spec: self.spec.clone(), domain: CoeffDomain::Integer, terms }))
    }

    /// Integer-primitive, sign-normalized representative of `self` up to ℚ^×.
    /// Zero maps to zero.
    pub fn primitive_integer(&self) -> MPoly {
        if self.is_zero() {
            return MPoly::zero(&self.spec, CoeffDomain::Integer);
        }
        let mut l = BigInt::one();
        for c in self.terms.values() {
            l = l.lcm(c.denom());
        }
        let lr = BigRational::from_integer(l);
        let terms = self.terms.iter().map(|(e, c)| (e.clone(), c * &lr)).collect();
        let p = MPoly { spec: self.spec.clone(), domain: CoeffDomain::Integer, terms };
        p.content_and_primitive().expect("nonzero integer polynomial").1
    }

    /// Monic (graded-lex) representative over ℚ.
    pub fn monic(&self) -> MPoly {
        match self.leading_term() {
            None => self.to_rational(),
            Some((_, c)) => {
                let inv = c.recip();
                let mut p = self.scale(&inv);
                p.domain = CoeffDomain::Rational;
                p
            }
        }
    }

    /// Support restricted to `vars`.
    pub fn support_on(&self, vars: &[usize]) -> Vec<Vec<u32>> {
        let mut s: Vec<Vec<u32>> = self.terms.keys().map(|e| vars.iter().map(|&v| e[v]).collect()).collect();
        s.sort();
        s.dedup();
        s
    }

    /// Variables actually occurring.
    pub fn used_vars(&self) -> Vec<usize> {
        (0..self.spec.nvars()).filter(|&v| self.terms.keys().any(|e| e[v] > 0)).collect()
    }

    pub fn max_abs_coeff(&self) -> BigRational {
        self.terms.values().map(|c| c.abs()).max().unwrap_or_else(BigRational::zero)
    }

    pub fn l1_norm(&self) -> BigRational {
        self.terms.values().map(|c| c.abs()).fold(BigRational::zero(), |a, b| a + b)
    }

    pub(crate) fn with_domain(mut self, domain: CoeffDomain) -> MPoly {
        self.domain = domain;
        self
    }
}

pub(crate) fn add_term(map: &mut BTreeMap<Vec<u32>, BigRational>, e: Vec<u32>, c: BigRational) {
    if c.is_zero() {
        return;
    }
    use std::collections::btree_map::Entry;
    match map.entry(e) {
        Entry::Vacant(v) => {
            v.insert(c);
        }
        Entry::Occupied(mut o) => {
            *o.get_mut() += c;
            if o.get().is_zero() {
                o.remove();
            }
        }
    }
}

/// Fallible sum: specs and coefficient domains must agree.
pub fn mp_add(a: &MPoly, b: &MPoly) -> Result<MPoly, PolyError> {
    a.try_add(b)
}

/// Fallible product: specs and coefficient domains must agree.
pub fn mp_mul(a: &MPoly, b: &MPoly) -> Result<MPoly, PolyError> {
    a.try_mul(b)
}

// Operator forms panic on spec mismatch and promote Integer to Rational when
// the domains differ. Use `mp_add`/`mp_mul` for the checked contract.

impl<'a> Add<&'a MPoly> for &'a MPoly {
    type Output = MPoly;
    fn add(self, rhs: &MPoly) -> MPoly {
        assert!(self.spec == rhs.spec, "spec mismatch in polynomial addition");
        self.add_unchecked(rhs)
    }
}

impl<'a> Sub<&'a MPoly> for &'a MPoly {
    type Output = MPoly;
    fn sub(self, rhs: &MPoly) -> MPoly {
        assert!(self.spec == rhs.spec, "spec mismatch in polynomial subtraction");
        self.add_unchecked(&-rhs)
    }
}

impl<'a> Mul<&'a MPoly> for &'a MPoly {
    type Output = MPoly;
    fn mul(self, rhs: &MPoly) -> MPoly {
        assert!(self.spec == rhs.spec, "spec mismatch in polynomial multiplication");
        self.mul_unchecked(rhs)
    }
}

impl Neg for &MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        let terms = self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect();
        MPoly { spec: self.spec.clone(), domain: self.domain, terms }
    }
}

impl Neg for MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        -&self
    }
}

macro_rules! owned_binop {
    ($tr:ident, $m:ident) => {
        impl $tr<MPoly> for MPoly {
            type Output = MPoly;
            fn $m(self, rhs: MPoly) -> MPoly {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a MPoly> for MPoly {
            type Output = MPoly;
            fn $m(self, rhs: &MPoly) -> MPoly {
                (&self).$m(rhs)
            }
        }
        impl<'a> $tr<MPoly> for &'a MPoly {
            type Output = MPoly;
            fn $m(self, rhs: MPoly) -> MPoly {
                self.$m(&rhs)
            }
        }
    };
}

owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);
