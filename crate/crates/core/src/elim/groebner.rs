use std::cmp::Ordering;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::order::{divides, Layout, MonomialOrder};
use super::ElimError;
use crate::poly::{CoeffDomain, Ideal, MPoly, VarSpec};

/// Default bound on the number of S-pairs processed.
pub const PAIR_CAP: usize = 200_000;

type Mono = Vec<u32>;

#[derive(Clone, Debug)]
pub(crate) struct GPoly {
    /// Sorted by key, largest first.
    pub terms: Vec<(Mono, BigInt)>,
    pub sugar: u32,
}

fn mask(m: &[u32]) -> u64 {
    let mut x = 0u64;
    for (i, &e) in m.iter().enumerate() {
        if e > 0 {
            x |= 1 << (i % 64);
        }
    }
    x
}

fn content(terms: &[(Mono, BigInt)]) -> BigInt {
    let mut g = BigInt::zero();
    for (_, c) in terms {
        g = g.gcd(c);
        if g.is_one() {
            break;
        }
    }
    g
}

impl GPoly {
    pub fn from_mpoly(p: &MPoly, layout: &Layout) -> GPoly {
        let prim = p.primitive_integer();
        let mut terms: Vec<(Mono, BigInt)> =
            prim.terms().map(|(e, c)| (layout.key(e), c.numer().clone())).collect();
        terms.sort_by(|a, b| b.0.cmp(&a.0));
        let sugar = prim.total_degree().unwrap_or(0);
        GPoly { terms, sugar }
    }

    pub fn to_mpoly(&self, spec: &Arc<VarSpec>, layout: &Layout) -> MPoly {
        MPoly::from_terms(
            spec,
            CoeffDomain::Integer,
            self.terms.iter().map(|(k, c)| (layout.exps(k), BigRational::from_integer(c.clone()))),
        )
        .expect("consistent exponent length")
    }

    pub fn lt(&self) -> &Mono {
        &self.terms[0].0
    }

    pub fn lc(&self) -> &BigInt {
        &self.terms[0].1
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn make_primitive(&mut self) {
        if self.terms.is_empty() {
            return;
        }
        let mut g = content(&self.terms);
        if self.terms[0].1.is_negative() {
            g = -g;
        }
        if !g.is_one() {
            for t in &mut self.terms {
                t.1 = &t.1 / &g;
            }
        }
    }
}

/// `a·p − b·m·g` where the leading terms are known to cancel.
fn sub_mul(p: &[(Mono, BigInt)], a: &BigInt, b: &BigInt, m: &[u32], g: &[(Mono, BigInt)]) -> Vec<(Mono, BigInt)> {
    let mut out = Vec::with_capacity(p.len() + g.len());
    let a_one = a.is_one();
    let mut i = 1;
    let mut j = 1;
    let shift = |t: &Mono| -> Mono { t.iter().zip(m).map(|(x, y)| x + y).collect() };
    let mut gj: Option<Mono> = g.get(j).map(|t| shift(&t.0));
    while i < p.len() || gj.is_some() {
        let ord = match (&gj, p.get(i)) {
            (None, _) => Ordering::Greater,
            (Some(_), None) => Ordering::Less,
            (Some(mg), Some((mp, _))) => mp.cmp(mg),
        };
        match ord {
            Ordering::Greater => {
                let c = if a_one { p[i].1.clone() } else { a * &p[i].1 };
                out.push((p[i].0.clone(), c));
                i += 1;
            }
            Ordering::Less => {
                let c = -(b * &g[j].1);
                out.push((gj.take().unwrap(), c));
                j += 1;
                gj = g.get(j).map(|t| shift(&t.0));
            }
            Ordering::Equal => {
                let c = if a_one { p[i].1.clone() } else { a * &p[i].1 } - b * &g[j].1;
                if !c.is_zero() {
                    out.push((gj.take().unwrap(), c));
                }
                i += 1;
                j += 1;
                gj = g.get(j).map(|t| shift(&t.0));
            }
        }
    }
    out
}

fn quotient_mono(a: &[u32], b: &[u32]) -> Mono {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

/// Multipliers that cancel `lc_p·… − lc_g·…` with small integers.
fn cofactors(lp: &BigInt, lg: &BigInt) -> (BigInt, BigInt) {
    let g = lp.gcd(lg);
    let mut a = lg / &g;
    let mut b = lp / &g;
    if a.is_negative() {
        a = -a;
        b = -b;
    }
    (a, b)
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Mono,
    sugar: u32,
}

pub(crate) struct Engine<'a> {
    layout: &'a Layout,
    polys: Vec<GPoly>,
    masks: Vec<u64>,
    active: Vec<bool>,
    pairs: Vec<Pair>,
    cap: usize,
}

impl<'a> Engine<'a> {
    pub fn new(layout: &'a Layout, cap: usize) -> Self {
        Engine { layout, polys: Vec::new(), masks: Vec::new(), active: Vec::new(), pairs: Vec::new(), cap }
    }

    fn find_reducer(&self, m: &Mono, reducers: &[usize]) -> Option<usize> {
        let mm = mask(m);
        let mut best: Option<usize> = None;
        for &k in reducers {
            if self.masks[k] & !mm != 0 {
                continue;
            }
            if divides(self.polys[k].lt(), m) {
                match best {
                    Some(b) if self.polys[b].terms.len() <= self.polys[k].terms.len() => {}
                    _ => best = Some(k),
                }
            }
        }
        best
    }

    fn active_indices(&self) -> Vec<usize> {
        (0..self.polys.len()).filter(|&k| self.active[k]).collect()
    }

    /// Reduces until the leading term is irreducible.
    fn top_reduce(&self, mut p: GPoly, reducers: &[usize]) -> GPoly {
        let mut steps = 0usize;
        while !p.is_zero() {
            let Some(k) = self.find_reducer(p.lt(), reducers) else { break };
            let g = &self.polys[k];
            let m = quotient_mono(p.lt(), g.lt());
            let (a, b) = cofactors(p.lc(), g.lc());
            let msugar = self.layout.total_degree(&m) + g.sugar;
            p.terms = sub_mul(&p.terms, &a, &b, &m, &g.terms);
            p.sugar = p.sugar.max(msugar);
            steps += 1;
            if steps % 8 == 0 {
                p.make_primitive();
            }
        }
        p.make_primitive();
        p
    }

    /// Reduces every term; returns the reduced polynomial and the rational
    /// factor `λ` with `result ≡ λ·p` modulo the reducers.
    fn full_reduce(&self, p: &GPoly, reducers: &[usize]) -> (Vec<(Mono, BigInt)>, BigRational) {
        let mut done: Vec<(Mono, BigInt)> = Vec::new();
        let mut rest = p.terms.clone();
        let mut mult = BigRational::one();
        let mut steps = 0usize;
        while !rest.is_empty() {
            match self.find_reducer(&rest[0].0, reducers) {
                None => {
                    done.push(rest.remove(0));
                }
                Some(k) => {
                    let g = &self.polys[k];
                    let m = quotient_mono(&rest[0].0, g.lt());
                    let (a, b) = cofactors(&rest[0].1, g.lc());
                    rest = sub_mul(&rest, &a, &b, &m, &g.terms);
                    if !a.is_one() {
                        for t in &mut done {
                            t.1 *= &a;
                        }
                        mult *= BigRational::from_integer(a);
                    }
                    steps += 1;
                    if steps % 8 == 0 {
                        let mut c = content(&rest);
                        c = c.gcd(&content(&done));
                        if !c.is_zero() && !c.is_one() {
                            for t in rest.iter_mut().chain(done.iter_mut()) {
                                t.1 = &t.1 / &c;
                            }
                            mult /= BigRational::from_integer(c);
                        }
                    }
                }
            }
        }
        (done, mult)
    }

    fn update(&mut self, h: GPoly) {
        let hi = self.polys.len();
        let hm = mask(h.lt());
        let layout = self.layout;
        let hdeg = layout.total_degree(h.lt());
        let mut cands: Vec<(usize, Mono, bool)> = Vec::new();
        for g in 0..self.polys.len() {
            if !self.active[g] {
                continue;
            }
            let l = layout.lcm(h.lt(), self.polys[g].lt());
            let coprime = hm & self.masks[g] == 0 && {
                let lt_g = self.polys[g].lt();
                // disjoint support on actual variables
                layout.var_pos.iter().all(|&p| h.lt()[p] == 0 || lt_g[p] == 0)
            };
            cands.push((g, l, coprime));
        }
        let mut kept: Vec<(usize, Mono, bool)> = Vec::new();
        while let Some((g, l, coprime)) = cands.pop() {
            let dominated = !coprime
                && (cands.iter().any(|(_, l2, _)| divides(l2, &l))
                    || kept.iter().any(|(_, l2, _)| divides(l2, &l)));
            if !dominated {
                kept.push((g, l, coprime));
            }
        }
        let hlt = h.lt().clone();
        let polys = &self.polys;
        self.pairs.retain(|p| {
            !(divides(&hlt, &p.lcm)
                && layout.lcm(polys[p.i].lt(), &hlt) != p.lcm
                && layout.lcm(polys[p.j].lt(), &hlt) != p.lcm)
        });
        for (g, l, coprime) in kept {
            if coprime {
                continue;
            }
            let ldeg = layout.total_degree(&l);
            let gp = &self.polys[g];
            let sugar = (h.sugar + ldeg - hdeg).max(gp.sugar + ldeg - layout.total_degree(gp.lt()));
            self.pairs.push(Pair { i: g, j: hi, lcm: l, sugar });
        }
        for g in 0..self.polys.len() {
            if self.active[g] && hm & !self.masks[g] == 0 && divides(&hlt, self.polys[g].lt()) {
                self.active[g] = false;
            }
        }
        self.masks.push(hm);
        self.polys.push(h);
        self.active.push(true);
    }

    fn spoly(&self, p: &Pair) -> GPoly {
        let f = &self.polys[p.i];
        let g = &self.polys[p.j];
        let mf = quotient_mono(&p.lcm, f.lt());
        let mg = quotient_mono(&p.lcm, g.lt());
        let (a, b) = cofactors(f.lc(), g.lc());
        let fm: Vec<(Mono, BigInt)> =
            f.terms.iter().map(|(k, c)| (k.iter().zip(&mf).map(|(x, y)| x + y).collect(), c.clone())).collect();
        GPoly { terms: sub_mul(&fm, &a, &b, &mg, &g.terms), sugar: p.sugar }
    }

    pub fn run(&mut self, input: Vec<GPoly>) -> Result<(), ElimError> {
        let mut input: Vec<GPoly> = input.into_iter().filter(|p| !p.is_zero()).collect();
        input.sort_by(|a, b| a.lt().cmp(b.lt()));
        for p in input {
            let reducers = self.active_indices();
            let h = self.top_reduce(p, &reducers);
            if !h.is_zero() {
                self.update(h);
            }
        }
        let mut processed = 0usize;
        while !self.pairs.is_empty() {
            processed += 1;
            if processed > self.cap {
                return Err(ElimError::PairCap(self.cap));
            }
            let best = (0..self.pairs.len())
                .min_by(|&a, &b| {
                    let (pa, pb) = (&self.pairs[a], &self.pairs[b]);
                    pa.sugar.cmp(&pb.sugar).then_with(|| pa.lcm.cmp(&pb.lcm))
                })
                .unwrap();
            let pair = self.pairs.swap_remove(best);
            let s = self.spoly(&pair);
            let reducers = self.active_indices();
            let h = self.top_reduce(s, &reducers);
            if !h.is_zero() {
                if h.terms.len() == 1 && h.lt().iter().all(|&e| e == 0) {
                    // unit ideal
                    self.polys.push(h.clone());
                    self.masks.push(0);
                    self.active.iter_mut().for_each(|a| *a = false);
                    self.active.push(true);
                    self.pairs.clear();
                    break;
                }
                self.update(h);
            }
        }
        Ok(())
    }

    /// Reduced basis, sorted by leading term ascending.
    pub fn reduced(&self) -> Vec<GPoly> {
        let act = self.active_indices();
        let mut out = Vec::with_capacity(act.len());
        for &k in &act {
            let others: Vec<usize> = act.iter().copied().filter(|&o| o != k).collect();
            let p = &self.polys[k];
            let head = p.terms[0].clone();
            let tail = GPoly { terms: p.terms[1..].to_vec(), sugar: p.sugar };
            let (red, mult) = self.full_reduce(&tail, &others);
            // p = head + tail ≡ head + red/mult
            let (num, den) = (mult.numer().clone(), mult.denom().clone());
            let mut terms = vec![(head.0, head.1 * &num)];
            terms.extend(red.into_iter().map(|(m, c)| (m, c * &den)));
            let mut g = GPoly { terms, sugar: p.sugar };
            g.make_primitive();
            out.push(g);
        }
        out.sort_by(|a, b| a.lt().cmp(b.lt()));
        out
    }
}

/// Reduced Gröbner basis of an ideal for a fixed order.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    spec: Arc<VarSpec>,
    order: MonomialOrder,
    layout: Layout,
    internal: Vec<GPoly>,
    basis: Vec<MPoly>,
}

impl GroebnerBasis {
    pub fn spec(&self) -> &Arc<VarSpec> {
        &self.spec
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    /// Monic basis elements, ascending by leading monomial.
    pub fn basis(&self) -> &[MPoly] {
        &self.basis
    }

    pub fn is_unit(&self) -> bool {
        self.basis.len() == 1 && self.basis[0].is_constant()
    }

    /// Leading exponent vectors (in spec variable order).
    pub fn leading_exponents(&self) -> Vec<Vec<u32>> {
        self.internal.iter().map(|g| self.layout.exps(g.lt())).collect()
    }

    /// Leading monomial of `f` under this basis' order.
    pub fn leading_exponent(&self, f: &MPoly) -> Option<Vec<u32>> {
        f.terms().map(|(e, _)| self.layout.key(e)).max().map(|k| self.layout.exps(&k))
    }

    /// Exact normal form over ℚ.
    pub fn normal_form(&self, f: &MPoly) -> MPoly {
        if f.is_zero() {
            return f.to_rational();
        }
        let prim = f.primitive_integer();
        // f = s·prim
        let s = {
            let (e, c) = prim.leading_term().unwrap();
            f.coeff(e) / c
        };
        let g = GPoly::from_mpoly(&prim, &self.layout);
        let engine = Engine {
            layout: &self.layout,
            polys: self.internal.clone(),
            masks: self.internal.iter().map(|p| mask(p.lt())).collect(),
            active: vec![true; self.internal.len()],
            pairs: Vec::new(),
            cap: 0,
        };
        let reducers: Vec<usize> = (0..self.internal.len()).collect();
        let (red, mult) = engine.full_reduce(&g, &reducers);
        let r = GPoly { terms: red, sugar: 0 }.to_mpoly(&self.spec, &self.layout);
        r.scale(&(s / mult)).to_rational()
    }

    pub fn contains(&self, f: &MPoly) -> bool {
        self.normal_form(f).is_zero()
    }

    /// Basis elements involving none of `vars`.
    pub fn free_of(&self, vars: &[usize]) -> Vec<MPoly> {
        self.basis
            .iter()
            .filter(|g| g.terms().all(|(e, _)| vars.iter().all(|&v| e[v] == 0)))
            .cloned()
            .collect()
    }
}

pub fn groebner(ideal: &Ideal, order: &MonomialOrder) -> Result<GroebnerBasis, ElimError> {
    groebner_with_cap(ideal, order, PAIR_CAP)
}

pub fn groebner_with_cap(ideal: &Ideal, order: &MonomialOrder, cap: usize) -> Result<GroebnerBasis, ElimError> {
    let spec = ideal.spec().clone();
    let layout = Layout::new(&spec, order)?;
    let input: Vec<GPoly> = ideal.nonzero_gens().iter().map(|g| GPoly::from_mpoly(g, &layout)).collect();
    let mut engine = Engine::new(&layout, cap);
    engine.run(input)?;
    let internal = engine.reduced();
    let basis = internal.iter().map(|g| g.to_mpoly(&spec, &layout).monic()).collect();
    Ok(GroebnerBasis { spec, order: order.clone(), layout, internal, basis })
}
