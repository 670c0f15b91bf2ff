//! Word-size modular images used as certifying fast paths: when the image
//! of a gcd in one variable has degree 0 (with the leading coefficients
//! surviving reduction), the exact gcd has degree 0 in that variable too.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::ToPrimitive;

use super::MPoly;

pub(crate) const P: u64 = (1 << 61) - 1;

fn mulm(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % P as u128) as u64
}

fn addm(a: u64, b: u64) -> u64 {
    let s = a + b;
    if s >= P {
        s - P
    } else {
        s
    }
}

fn subm(a: u64, b: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + P - b
    }
}

fn powm(mut a: u64, mut e: u64) -> u64 {
    let mut r = 1;
    while e > 0 {
        if e & 1 == 1 {
            r = mulm(r, a);
        }
        a = mulm(a, a);
        e >>= 1;
    }
    r
}

fn invm(a: u64) -> u64 {
    powm(a, P - 2)
}

fn int_mod(x: &BigInt) -> u64 {
    let r = x.mod_floor(&BigInt::from(P));
    r.to_u64().unwrap()
}

pub(crate) fn rat_mod(c: &BigRational) -> Option<u64> {
    let d = int_mod(c.denom());
    if d == 0 {
        return None;
    }
    Some(mulm(int_mod(c.numer()), invm(d)))
}

/// Univariate image in `v` after substituting `vals[w]` for every other variable.
pub(crate) fn image_in(f: &MPoly, v: usize, vals: &[u64]) -> Option<Vec<u64>> {
    let d = f.deg_var(v).unwrap_or(0) as usize;
    let mut out = vec![0u64; d + 1];
    for (e, c) in f.terms() {
        let mut t = rat_mod(c)?;
        for (w, &k) in e.iter().enumerate() {
            if w != v && k > 0 {
                t = mulm(t, powm(vals[w], k as u64));
            }
        }
        let i = e[v] as usize;
        out[i] = addm(out[i], t);
    }
    Some(out)
}

fn trim(p: &mut Vec<u64>) {
    while p.len() > 1 && *p.last().unwrap() == 0 {
        p.pop();
    }
}

fn degree(p: &[u64]) -> Option<usize> {
    p.iter().rposition(|&c| c != 0)
}

/// Degree of gcd of two dense univariate images (None when both vanish).
pub(crate) fn gcd_degree(a: &[u64], b: &[u64]) -> Option<usize> {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    trim(&mut a);
    trim(&mut b);
    if degree(&b).is_none() {
        return degree(&a);
    }
    loop {
        let db = degree(&b);
        let Some(db) = db else { return degree(&a) };
        if let Some(da) = degree(&a) {
            if da >= db {
                let inv = invm(b[db]);
                for k in (db..=da).rev() {
                    if a[k] == 0 {
                        continue;
                    }
                    let q = mulm(a[k], inv);
                    let s = k - db;
                    for i in 0..=db {
                        a[i + s] = subm(a[i + s], mulm(q, b[i]));
                    }
                }
                trim(&mut a);
            }
        }
        std::mem::swap(&mut a, &mut b);
        if degree(&b).is_none() {
            return degree(&a);
        }
    }
}

/// Deterministic pseudo-random evaluation points.
pub(crate) fn eval_points(n: usize, round: u64) -> Vec<u64> {
    let mut x: u64 = 0x9e37_79b9_7f4a_7c15 ^ round.wrapping_mul(0xbf58_476d_1ce4_e5b9);
    (0..n)
        .map(|_| {
            x ^= x >> 30;
            x = x.wrapping_mul(0xbf58_476d_1ce4_e5b9);
            x ^= x >> 27;
            x = x.wrapping_mul(0x94d0_49bb_1331_11eb);
            x ^= x >> 31;
            x % P
        })
        .collect()
}

/// True when `gcd(a, b)` certainly has degree 0 in `v`.
pub(crate) fn coprime_in(a: &MPoly, b: &MPoly, v: usize) -> bool {
    let da = a.deg_var(v).unwrap_or(0) as usize;
    let db = b.deg_var(v).unwrap_or(0) as usize;
    for round in 0..2 {
        let vals = eval_points(a.spec().nvars(), round);
        let (Some(ia), Some(ib)) = (image_in(a, v, &vals), image_in(b, v, &vals)) else { return false };
        if ia[da] == 0 || ib[db] == 0 {
            continue;
        }
        if gcd_degree(&ia, &ib) == Some(0) {
            return true;
        }
    }
    false
}
