//! Exact division, multivariate gcd over ℤ (recursive primitive PRS) and
//! squarefree parts in characteristic zero.

use super::mpoly::{grlex_cmp, CoeffDomain, MPoly};

impl MPoly {
    /// `Some(q)` with `self = q·d` over ℚ, or `None` when `d` does not divide.
    pub fn div_exact(&self, d: &MPoly) -> Option<MPoly> {
        assert!(self.spec() == d.spec());
        let (ld, lc) = d.leading_term()?;
        let (ld, lc) = (ld.clone(), lc.clone());
        let mut rem = self.clone();
        let mut quot = MPoly::zero(self.spec(), self.domain());
        while let Some((lr, cr)) = rem.leading_term() {
            if !lr.iter().zip(&ld).all(|(a, b)| a >= b) {
                return None;
            }
            let e: Vec<u32> = lr.iter().zip(&ld).map(|(a, b)| a - b).collect();
            let c = cr / &lc;
            let t = MPoly::monomial(self.spec(), e, c);
            rem = &rem - &(&t * d);
            quot = &quot + &t;
        }
        let dom = if self.domain() == CoeffDomain::Integer && quot.has_integer_coeffs() {
            CoeffDomain::Integer
        } else {
            CoeffDomain::Rational
        };
        Some(quot.with_domain(dom))
    }

    /// Content with respect to variable `v`: gcd of the coefficients of the
    /// powers of `v`, primitive over ℤ.
    pub fn content_in(&self, v: usize) -> MPoly {
        let mut g = MPoly::zero(self.spec(), CoeffDomain::Integer);
        for c in self.univariate_coeffs(v) {
            if c.is_zero() {
                continue;
            }
            g = gcd(&g, &c);
            if g.is_constant() {
                break;
            }
        }
        g
    }
}

/// Greatest common divisor over ℚ, returned as an integer-primitive
/// polynomial with positive leading coefficient. `gcd(0, 0) = 0`.
pub fn gcd(a: &MPoly, b: &MPoly) -> MPoly {
    assert!(a.spec() == b.spec());
    if a.is_zero() {
        return b.primitive_integer();
    }
    if b.is_zero() {
        return a.primitive_integer();
    }
    gcd_prim(&a.primitive_integer(), &b.primitive_integer())
}

fn gcd_prim(a: &MPoly, b: &MPoly) -> MPoly {
    if a.is_constant() || b.is_constant() {
        return MPoly::one(a.spec());
    }
    if a == b {
        return a.clone();
    }
    let ua = a.used_vars();
    let ub = b.used_vars();
    // choose a variable shared by both with the smallest combined degree
    let shared: Vec<usize> = ua.iter().copied().filter(|v| ub.contains(v)).collect();
    if shared.is_empty() {
        return MPoly::one(a.spec());
    }
    // eliminate variables occurring in only one input first
    if let Some(&v) = ua.iter().find(|v| !ub.contains(v)) {
        return gcd(&a.content_in(v), b);
    }
    if let Some(&v) = ub.iter().find(|v| !ua.contains(v)) {
        return gcd(a, &b.content_in(v));
    }
    let v = *shared
        .iter()
        .min_by_key(|&&v| a.deg_var(v).unwrap() + b.deg_var(v).unwrap())
        .unwrap();
    let ca = a.content_in(v);
    let cb = b.content_in(v);
    let c = gcd(&ca, &cb);
    if super::modp::coprime_in(a, b, v) {
        return c;
    }
    let pa = a.div_exact(&ca).expect("content divides").primitive_integer();
    let pb = b.div_exact(&cb).expect("content divides").primitive_integer();
    let g = prs(pa, pb, v);
    (&c * &g).primitive_integer()
}

fn lc_in(p: &MPoly, v: usize) -> MPoly {
    let k = p.deg_var(v).unwrap();
    let vars = [v];
    p.coefficient_of(&vars, &[k])
}

fn pseudo_rem(a: &MPoly, b: &MPoly, v: usize) -> MPoly {
    let db = b.deg_var(v).unwrap();
    let lb = lc_in(b, v);
    let mut r = a.clone();
    while !r.is_zero() {
        let dr = r.deg_var(v).unwrap();
        if dr < db {
            break;
        }
        let lr = lc_in(&r, v);
        let mut shift = vec![0; a.spec().nvars()];
        shift[v] = dr - db;
        r = &(&lb * &r) - &(&lr * &b.mul_monomial(&shift));
        r = r.primitive_integer();
    }
    r
}

fn primitive_in(p: &MPoly, v: usize) -> MPoly {
    let c = p.content_in(v);
    p.div_exact(&c).expect("content divides").primitive_integer()
}

fn prs(a: MPoly, b: MPoly, v: usize) -> MPoly {
    let (mut a, mut b) = if a.deg_var(v) >= b.deg_var(v) { (a, b) } else { (b, a) };
    loop {
        let r = pseudo_rem(&a, &b, v);
        if r.is_zero() {
            return primitive_in(&b, v);
        }
        if r.deg_var(v).unwrap() == 0 {
            return MPoly::one(a.spec());
        }
        a = b;
        b = primitive_in(&r, v);
    }
}

/// Squarefree part `f / gcd(f, ∂f/∂x_1, …)`, integer-primitive.
pub fn squarefree_part(f: &MPoly) -> MPoly {
    if f.is_zero() || f.is_constant() {
        return f.primitive_integer();
    }
    let vars = f.used_vars();
    if vars.iter().all(|&v| super::modp::coprime_in(f, &f.derivative(v), v)) {
        return f.primitive_integer();
    }
    let mut g = f.primitive_integer();
    for v in vars {
        if g.is_constant() {
            break;
        }
        g = gcd(&g, &f.derivative(v));
    }
    if g.is_constant() {
        return f.primitive_integer();
    }
    f.div_exact(&g).expect("gcd divides").primitive_integer()
}

/// Least common multiple over ℚ, integer-primitive.
pub fn lcm(a: &MPoly, b: &MPoly) -> MPoly {
    if a.is_zero() || b.is_zero() {
        return MPoly::zero(a.spec(), CoeffDomain::Integer);
    }
    let g = gcd(a, b);
    (a * &b.div_exact(&g).expect("gcd divides")).primitive_integer()
}

/// Sorts exponent vectors by graded-lex descending; shared by printers.
pub fn sort_grlex_desc(v: &mut [Vec<u32>]) {
    v.sort_by(|a, b| grlex_cmp(b, a));
}
