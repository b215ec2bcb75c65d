//! Polynomial arithmetic over F_p and deterministic modulus selection.
//!
//! Field specs default to the Conway polynomial `C_{p,t}`: the first monic
//! primitive polynomial, in the standard twisted-lexicographic candidate
//! order, that is norm-compatible with the Conway polynomials of all proper
//! subfields. Computing it on demand reproduces the published tables exactly
//! and keeps coordinates identical across runs and machines. Above the
//! `p^t <= 2^16` range the (much weaker) fallback is the lexicographically
//! smallest monic irreducible.

use once_cell::sync::Lazy;
use std::collections::HashMap;
use std::sync::Mutex;

use crate::error::{Error, Result};

/// Trial-division primality test; inputs here are small.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Distinct prime factors by trial division.
pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

// Polynomials over F_p: coefficient vectors, constant term first, no
// trailing zeros (the zero polynomial is the empty vector).

pub fn poly_trim(mut a: Vec<u64>) -> Vec<u64> {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

pub fn poly_mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    poly_trim(out)
}

/// Remainder of `a` modulo the monic polynomial `f`.
pub fn poly_rem(a: &[u64], f: &[u64], p: u64) -> Vec<u64> {
    debug_assert_eq!(*f.last().unwrap(), 1, "modulus must be monic");
    let deg_f = f.len() - 1;
    let mut r: Vec<u64> = a.to_vec();
    while r.len() > deg_f {
        let c = *r.last().unwrap();
        let k = r.len() - 1 - deg_f;
        if c != 0 {
            for j in 0..deg_f {
                let sub = (c * f[j]) % p;
                r[k + j] = (r[k + j] + p - sub) % p;
            }
        }
        r.pop();
        r = poly_trim(r);
    }
    r
}

pub fn poly_mulmod(a: &[u64], b: &[u64], f: &[u64], p: u64) -> Vec<u64> {
    poly_rem(&poly_mul(a, b, p), f, p)
}

/// `base^e mod f` by square and multiply.
pub fn poly_powmod(base: &[u64], mut e: u64, f: &[u64], p: u64) -> Vec<u64> {
    let mut acc = vec![1u64];
    let mut b = poly_rem(base, f, p);
    while e > 0 {
        if e & 1 == 1 {
            acc = poly_mulmod(&acc, &b, f, p);
        }
        b = poly_mulmod(&b, &b, f, p);
        e >>= 1;
    }
    acc
}

fn mod_inv_u64(a: u64, p: u64) -> u64 {
    // p prime, a != 0 mod p
    let mut t: i128 = 0;
    let mut new_t: i128 = 1;
    let mut r: i128 = p as i128;
    let mut new_r: i128 = (a % p) as i128;
    while new_r != 0 {
        let q = r / new_r;
        t -= q * new_t;
        std::mem::swap(&mut t, &mut new_t);
        r -= q * new_r;
        std::mem::swap(&mut r, &mut new_r);
    }
    ((t % p as i128 + p as i128) % p as i128) as u64
}

pub fn poly_gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut a = poly_trim(a.to_vec());
    let mut b = poly_trim(b.to_vec());
    while !b.is_empty() {
        // reduce a mod b (b need not be monic)
        let lead_inv = mod_inv_u64(*b.last().unwrap(), p);
        let monic_b: Vec<u64> = b.iter().map(|&c| (c * lead_inv) % p).collect();
        let r = poly_rem(&a, &monic_b, p);
        a = b;
        b = r;
    }
    if let Some(&lead) = a.last() {
        let inv = mod_inv_u64(lead, p);
        a.iter().map(|&c| (c * inv) % p).collect()
    } else {
        a
    }
}

/// Irreducibility over F_p via the Frobenius criterion:
/// `x^(p^t) = x (mod f)` and `gcd(x^(p^(t/l)) - x, f) = 1` for primes `l | t`.
pub fn poly_is_irreducible(f: &[u64], p: u64) -> bool {
    let t = f.len() - 1;
    if t == 0 || *f.last().unwrap() != 1 {
        return false;
    }
    if t == 1 {
        return true;
    }
    let x = vec![0u64, 1];
    // frob[k] = x^(p^k) mod f, built by repeated p-th powers
    let mut frob = x.clone();
    let mut frob_at = vec![x.clone()];
    for _ in 0..t {
        frob = poly_powmod(&frob, p, f, p);
        frob_at.push(frob.clone());
    }
    if frob_at[t] != poly_rem(&x, f, p) {
        return false;
    }
    for l in prime_factors(t as u64) {
        let k = t / l as usize;
        // gcd(x^(p^k) - x, f) must be 1
        let mut diff = frob_at[k].clone();
        if diff.len() < 2 {
            diff.resize(2, 0);
        }
        diff[1] = (diff[1] + p - 1) % p;
        let g = poly_gcd(&poly_trim(diff), f, p);
        if g.len() != 1 {
            return false;
        }
    }
    true
}

/// Whether `x` generates the multiplicative group of `F_p[x]/(f)`,
/// for irreducible `f` of degree `t` with `q = p^t`.
fn x_is_primitive(f: &[u64], p: u64, q: u64) -> bool {
    let x = vec![0u64, 1];
    if poly_rem(&x, f, p).is_empty() {
        return false; // f = x, root 0
    }
    if poly_powmod(&x, q - 1, f, p) != vec![1] {
        return false;
    }
    for l in prime_factors(q - 1) {
        if poly_powmod(&x, (q - 1) / l, f, p) == vec![1] {
            return false;
        }
    }
    true
}

/// Evaluate the polynomial `g` at the residue class `arg` modulo `f`.
fn poly_eval_at(g: &[u64], arg: &[u64], f: &[u64], p: u64) -> Vec<u64> {
    let mut acc: Vec<u64> = Vec::new();
    for &c in g.iter().rev() {
        acc = poly_mulmod(&acc, arg, f, p);
        if c != 0 {
            if acc.is_empty() {
                acc = vec![c];
            } else {
                acc[0] = (acc[0] + c) % p;
                acc = poly_trim(acc);
            }
        }
    }
    acc
}

static CONWAY_CACHE: Lazy<Mutex<HashMap<(u64, u32), Vec<u64>>>> =
    Lazy::new(|| Mutex::new(HashMap::new()));

/// The Conway polynomial `C_{p,t}`, constant term first.
pub fn conway_polynomial(p: u64, t: u32) -> Result<Vec<u64>> {
    if !is_prime(p) {
        return Err(Error::InvalidSpec(format!("{p} is not prime")));
    }
    if t == 0 {
        return Err(Error::InvalidSpec("degree must be positive".into()));
    }
    let q = p
        .checked_pow(t)
        .filter(|&q| q <= 1 << 16)
        .ok_or_else(|| Error::InvalidSpec(format!("Conway polynomial lookup needs p^t <= 2^16, got {p}^{t}")))?;
    if let Some(hit) = CONWAY_CACHE.lock().unwrap().get(&(p, t)) {
        return Ok(hit.clone());
    }

    let mut subfield: Vec<(u64, Vec<u64>)> = Vec::new(); // (p^m - 1, C_{p,m})
    for m in 1..t {
        if t % m == 0 {
            subfield.push((p.pow(m) - 1, conway_polynomial(p, m)?));
        }
    }

    let td = t as usize;
    // Candidates in the standard order: compare (b_{t-1},...,b_0) with
    // b_i = (-1)^(t-i) a_i, smallest first.
    let mut b = vec![0u64; td]; // b[i] corresponds to degree-i coefficient
    let found = 'search: loop {
        let mut f = vec![0u64; td + 1];
        f[td] = 1;
        for i in 0..td {
            let flip = (td - i) % 2 == 1;
            f[i] = if flip { (p - b[i]) % p } else { b[i] };
        }
        let ok = poly_is_irreducible(&f, p)
            && x_is_primitive(&f, p, q)
            && subfield.iter().all(|(sub_order, cm)| {
                let e = (q - 1) / sub_order;
                let gamma = poly_powmod(&[0, 1], e, &f, p);
                poly_eval_at(cm, &gamma, &f, p).is_empty()
            });
        if ok {
            break 'search f;
        }
        // increment (b_{t-1},...,b_0) lexicographically: b_0 fastest
        let mut i = 0;
        loop {
            if i == td {
                // exhausted; cannot happen for valid p, t
                return Err(Error::InvalidSpec(format!("no Conway polynomial found for {p}^{t}")));
            }
            b[i] += 1;
            if b[i] < p {
                break;
            }
            b[i] = 0;
            i += 1;
        }
    };
    CONWAY_CACHE.lock().unwrap().insert((p, t), found.clone());
    Ok(found)
}

/// Fallback modulus for `p^t > 2^16`: the monic irreducible of degree `t`
/// with the smallest coefficient encoding `sum a_i p^i`.
pub fn smallest_irreducible(p: u64, t: u32) -> Result<Vec<u64>> {
    if !is_prime(p) {
        return Err(Error::InvalidSpec(format!("{p} is not prime")));
    }
    let td = t as usize;
    let mut a = vec![0u64; td];
    loop {
        let mut f = a.clone();
        f.push(1);
        if poly_is_irreducible(&f, p) {
            return Ok(f);
        }
        let mut i = 0;
        loop {
            if i == td {
                return Err(Error::InvalidSpec(format!("no irreducible of degree {t} over F_{p}")));
            }
            a[i] += 1;
            if a[i] < p {
                break;
            }
            a[i] = 0;
            i += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cw(p: u64, t: u32) -> Vec<u64> {
        conway_polynomial(p, t).unwrap()
    }

    #[test]
    fn conway_matches_published_tables() {
        // constant term first
        assert_eq!(cw(2, 1), vec![1, 1]); // x + 1
        assert_eq!(cw(2, 2), vec![1, 1, 1]); // x^2 + x + 1
        assert_eq!(cw(2, 3), vec![1, 1, 0, 1]); // x^3 + x + 1
        assert_eq!(cw(2, 4), vec![1, 1, 0, 0, 1]); // x^4 + x + 1
        assert_eq!(cw(2, 5), vec![1, 0, 1, 0, 0, 1]); // x^5 + x^2 + 1
        assert_eq!(cw(2, 6), vec![1, 1, 0, 1, 1, 0, 1]); // x^6 + x^4 + x^3 + x + 1
        assert_eq!(cw(2, 7), vec![1, 1, 0, 0, 0, 0, 0, 1]); // x^7 + x + 1
        assert_eq!(cw(3, 1), vec![1, 1]); // x - 2 = x + 1
        assert_eq!(cw(3, 2), vec![2, 2, 1]); // x^2 + 2x + 2
        assert_eq!(cw(3, 3), vec![1, 2, 0, 1]); // x^3 + 2x + 1
        assert_eq!(cw(3, 4), vec![2, 0, 0, 2, 1]); // x^4 + 2x^3 + 2
        assert_eq!(cw(5, 1), vec![3, 1]); // x - 2
        assert_eq!(cw(5, 2), vec![2, 4, 1]); // x^2 + 4x + 2
        assert_eq!(cw(7, 1), vec![4, 1]); // x - 3
        assert_eq!(cw(7, 2), vec![3, 6, 1]); // x^2 + 6x + 3
        assert_eq!(cw(11, 1), vec![9, 1]); // x - 2
        assert_eq!(cw(13, 1), vec![11, 1]); // x - 2
    }

    #[test]
    fn conway_is_irreducible_and_primitive() {
        for (p, t) in [(2, 8), (3, 5), (5, 3), (7, 2), (11, 2), (13, 2)] {
            let f = cw(p, t);
            assert!(poly_is_irreducible(&f, p));
            assert!(x_is_primitive(&f, p, p.pow(t)));
        }
    }

    #[test]
    fn irreducibility_test_agrees_with_counting() {
        // number of monic irreducible quadratics over F_p is p(p-1)/2
        for p in [2u64, 3, 5, 7] {
            let mut count = 0;
            for a0 in 0..p {
                for a1 in 0..p {
                    if poly_is_irreducible(&[a0, a1, 1], p) {
                        count += 1;
                    }
                }
            }
            assert_eq!(count, p * (p - 1) / 2);
        }
    }

    #[test]
    fn smallest_irreducible_is_irreducible() {
        for (p, t) in [(2, 17), (3, 11)] {
            let f = smallest_irreducible(p, t).unwrap();
            assert_eq!(f.len() as u32, t + 1);
            assert!(poly_is_irreducible(&f, p));
        }
    }

    #[test]
    fn gcd_and_powmod_sanity() {
        // gcd(x^2 - 1, x - 1) = x - 1 over F_5, normalized monic
        let g = poly_gcd(&[4, 0, 1], &[4, 1], 5);
        assert_eq!(g, vec![4, 1]);
        // x^6 mod x^2+x+1 over F_2: x^6 = (x^3)^2 = 1
        assert_eq!(poly_powmod(&[0, 1], 6, &[1, 1, 1], 2), vec![1]);
    }
}
