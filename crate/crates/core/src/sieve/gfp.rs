//! Univariate polynomial arithmetic over Z/p for root finding: gcd with
//! x^p - x to isolate linear factors, equal-degree splitting to extract
//! them, and Hensel lifting of the roots to prime-power moduli. Splitting
//! randomness comes from a generator seeded per prime, so runs are
//! reproducible.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn powmod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(acc, a, p);
        }
        a = mulmod(a, a, p);
        e >>= 1;
    }
    acc
}

fn invmod(a: u64, p: u64) -> u64 {
    powmod(a, p - 2, p)
}

/// Dense poly over Z/p, coefficients little-endian, no trailing zeros.
#[derive(Clone, Debug, PartialEq)]
struct Gfp {
    c: Vec<u64>,
    p: u64,
}

impl Gfp {
    fn new(mut c: Vec<u64>, p: u64) -> Gfp {
        for x in &mut c {
            *x %= p;
        }
        while c.last() == Some(&0) {
            c.pop();
        }
        Gfp { c, p }
    }

    fn zero(p: u64) -> Gfp {
        Gfp { c: vec![], p }
    }

    fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    fn deg(&self) -> usize {
        self.c.len().saturating_sub(1)
    }

    fn rem(&self, m: &Gfp) -> Gfp {
        let p = self.p;
        let mut r = self.c.clone();
        let dm = m.deg();
        let lead_inv = invmod(*m.c.last().unwrap(), p);
        while r.len() > dm {
            let k = r.len() - 1;
            let q = mulmod(r[k], lead_inv, p);
            if q != 0 {
                for (i, &mc) in m.c.iter().enumerate() {
                    let idx = k - dm + i;
                    r[idx] = (r[idx] + p - mulmod(q, mc, p)) % p;
                }
            }
            r.pop();
        }
        Gfp::new(r, p)
    }

    fn mul(&self, other: &Gfp) -> Gfp {
        if self.is_zero() || other.is_zero() {
            return Gfp::zero(self.p);
        }
        let mut out = vec![0u64; self.c.len() + other.c.len() - 1];
        for (i, &a) in self.c.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.c.iter().enumerate() {
                out[i + j] = (out[i + j] + mulmod(a, b, self.p)) % self.p;
            }
        }
        Gfp::new(out, self.p)
    }

    fn mulmod_poly(&self, other: &Gfp, m: &Gfp) -> Gfp {
        self.mul(other).rem(m)
    }

    fn gcd(&self, other: &Gfp) -> Gfp {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        if a.is_zero() {
            return a;
        }
        // monic
        let inv = invmod(*a.c.last().unwrap(), a.p);
        Gfp::new(a.c.iter().map(|&x| mulmod(x, inv, a.p)).collect(), a.p)
    }

    /// x^e mod self, by square and multiply.
    fn x_pow_mod(&self, e: u64) -> Gfp {
        let p = self.p;
        let x = Gfp::new(vec![0, 1], p);
        if self.deg() == 0 {
            return Gfp::zero(p);
        }
        let mut acc = Gfp::new(vec![1], p);
        let mut base = x.rem(self);
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mulmod_poly(&base, self);
            }
            base = base.mulmod_poly(&base, self);
            e >>= 1;
        }
        acc
    }

    fn pow_mod(&self, mut e: u64, m: &Gfp) -> Gfp {
        let mut acc = Gfp::new(vec![1], self.p);
        let mut base = self.rem(m);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mulmod_poly(&base, m);
            }
            base = base.mulmod_poly(&base, m);
            e >>= 1;
        }
        acc
    }

    fn sub(&self, other: &Gfp) -> Gfp {
        let p = self.p;
        let n = self.c.len().max(other.c.len());
        let mut out = vec![0u64; n];
        for i in 0..n {
            let a = self.c.get(i).copied().unwrap_or(0);
            let b = other.c.get(i).copied().unwrap_or(0);
            out[i] = (a + p - b) % p;
        }
        Gfp::new(out, p)
    }

    fn eval(&self, x: u64) -> u64 {
        let mut acc = 0u64;
        for &c in self.c.iter().rev() {
            acc = (mulmod(acc, x, self.p) + c) % self.p;
        }
        acc
    }
}

/// Roots of the polynomial with the given integer coefficients
/// (little-endian) modulo p. `None` means the reduction is identically
/// zero, so every residue is a root.
pub fn roots_mod_p(coeffs: &[i64], p: u64) -> Option<Vec<u64>> {
    let reduce = |v: i64| -> u64 { v.rem_euclid(p as i64) as u64 };
    let f = Gfp::new(coeffs.iter().map(|&v| reduce(v)).collect(), p);
    if f.is_zero() {
        return None;
    }
    if f.deg() == 0 {
        return Some(vec![]);
    }
    if p < 64 {
        let mut out = Vec::new();
        for r in 0..p {
            if f.eval(r) == 0 {
                out.push(r);
            }
        }
        return Some(out);
    }
    // g = gcd(x^p - x, f) splits into distinct linear factors.
    let xp = f.x_pow_mod(p);
    let x = Gfp::new(vec![0, 1], p).rem(&f);
    let g = xp.sub(&x).gcd(&f);
    let mut roots = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(p ^ 0x9e3779b97f4a7c15);
    extract_roots(&g, p, &mut rng, &mut roots);
    roots.sort_unstable();
    roots.dedup();
    Some(roots)
}

fn extract_roots(g: &Gfp, p: u64, rng: &mut ChaCha8Rng, out: &mut Vec<u64>) {
    match g.deg() {
        0 => {}
        1 => {
            // c0 + c1 x = 0  =>  x = -c0/c1
            let c0 = g.c[0];
            let c1 = g.c[1];
            out.push(mulmod((p - c0) % p, invmod(c1, p), p));
        }
        _ => {
            if g.c[0] == 0 {
                out.push(0);
                let shifted = Gfp::new(g.c[1..].to_vec(), p);
                extract_roots(&shifted, p, rng, out);
                return;
            }
            // Equal-degree splitting: gcd((x+a)^((p-1)/2) - 1, g).
            loop {
                let a = rng.gen_range(0..p);
                let xa = Gfp::new(vec![a, 1], p);
                let h = xa.pow_mod((p - 1) / 2, g).sub(&Gfp::new(vec![1], p));
                let w = h.gcd(g);
                if w.deg() > 0 && w.deg() < g.deg() {
                    let q = poly_div_exact(g, &w);
                    extract_roots(&w, p, rng, out);
                    extract_roots(&q, p, rng, out);
                    return;
                }
            }
        }
    }
}

fn poly_div_exact(a: &Gfp, b: &Gfp) -> Gfp {
    let p = a.p;
    let mut r = a.c.clone();
    let db = b.deg();
    let lead_inv = invmod(*b.c.last().unwrap(), p);
    let mut q = vec![0u64; r.len() - db];
    while r.len() > db {
        let k = r.len() - 1;
        let qc = mulmod(r[k], lead_inv, p);
        q[k - db] = qc;
        for (i, &bc) in b.c.iter().enumerate() {
            let idx = k - db + i;
            r[idx] = (r[idx] + p - mulmod(qc, bc, p)) % p;
        }
        r.pop();
    }
    Gfp::new(q, p)
}

/// Roots of an integer polynomial modulo p^k, by Hensel lifting the roots
/// mod p level by level. The coefficient slice is little-endian. `None`
/// means every residue mod p^k is a root (the polynomial vanishes mod p^k).
/// The list is capped by `budget`; exceeding it is a typed error.
pub fn roots_mod_pk(coeffs: &[i128], p: u64, k: u32, budget: usize) -> Result<Option<Vec<u64>>> {
    assert!(k >= 1);
    let pk = (p as u128).checked_pow(k).ok_or_else(|| {
        Error::Budget(format!("p^k overflow: {}^{}", p, k))
    })?;
    if pk > u64::MAX as u128 {
        return Err(Error::Budget(format!("modulus {}^{} too large", p, k)));
    }
    let coeffs_p: Vec<i64> = coeffs
        .iter()
        .map(|&c| (c.rem_euclid(p as i128)) as i64)
        .collect();
    let base = match roots_mod_p(&coeffs_p, p) {
        None => {
            // f == 0 mod p: divide by p and handle the lower levels by
            // enumeration when small, otherwise give up.
            if k == 1 {
                return Ok(None);
            }
            if pk as usize / p as usize <= budget * 64 {
                return enumerate_roots_pk(coeffs, p, k, budget);
            }
            return Err(Error::Budget("degenerate reduction in root lifting".into()));
        }
        Some(r) => r,
    };
    let mut level: Vec<u64> = base;
    let mut modulus: u64 = p;
    for _ in 1..k {
        let next_mod = modulus * p;
        let mut next = Vec::new();
        for &r in &level {
            // f(r + modulus*t) = f(r) + modulus * f'(r) * t (mod next_mod)
            let fr = eval_mod(coeffs, r, next_mod as u128) as u64;
            let fpr = eval_deriv_mod(coeffs, r, p as u128) as u64;
            debug_assert_eq!(fr % modulus, 0);
            let c = fr / modulus; // well-defined mod p
            if fpr % p != 0 {
                // simple root: unique lift
                let t = mulmod(
                    (p - c % p) % p,
                    invmod(fpr % p, p),
                    p,
                );
                next.push(r + modulus * t);
            } else if c % p == 0 {
                // every lift works
                for t in 0..p {
                    next.push(r + modulus * t);
                    if next.len() > budget {
                        return Err(Error::Budget("root lifting exceeded budget".into()));
                    }
                }
            }
            if next.len() > budget {
                return Err(Error::Budget("root lifting exceeded budget".into()));
            }
        }
        level = next;
        modulus = next_mod;
    }
    level.sort_unstable();
    Ok(Some(level))
}

fn enumerate_roots_pk(coeffs: &[i128], p: u64, k: u32, budget: usize) -> Result<Option<Vec<u64>>> {
    let pk = (p as u64).pow(k);
    if pk as usize > budget * 64 {
        return Err(Error::Budget("enumeration modulus exceeds budget".into()));
    }
    let mut out = Vec::new();
    let mut all = true;
    for r in 0..pk {
        if eval_mod(coeffs, r, pk as u128) == 0 {
            out.push(r);
            if out.len() > budget {
                return Err(Error::Budget("root enumeration exceeded budget".into()));
            }
        } else {
            all = false;
        }
    }
    if all {
        return Ok(None);
    }
    Ok(Some(out))
}

fn eval_mod(coeffs: &[i128], x: u64, m: u128) -> u128 {
    let xm = x as u128 % m;
    let mut acc: u128 = 0;
    for &c in coeffs.iter().rev() {
        acc = (acc * xm + c.rem_euclid(m as i128) as u128) % m;
    }
    acc
}

fn eval_deriv_mod(coeffs: &[i128], x: u64, m: u128) -> u128 {
    let xm = x as u128 % m;
    let mut acc: u128 = 0;
    for (i, &c) in coeffs.iter().enumerate().skip(1).rev() {
        let ci = (c.rem_euclid(m as i128) as u128) * (i as u128 % m) % m;
        acc = (acc * xm + ci) % m;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roots_of_quadratic_mod_p() {
        // x^2 - 1 mod 10007 has roots 1 and 10006.
        let r = roots_mod_p(&[-1, 0, 1], 10007).unwrap();
        assert_eq!(r, vec![1, 10006]);
    }

    #[test]
    fn no_roots_when_irreducible() {
        // x^2 + 1 mod 10007 (10007 = 3 mod 4, so -1 is not a square)
        let r = roots_mod_p(&[1, 0, 1], 10007).unwrap();
        assert!(r.is_empty());
    }

    #[test]
    fn lift_simple_roots() {
        // x^2 - 2 mod 7^3: 2 is a QR mod 7 (3^2 = 2), two lifted roots.
        let r = roots_mod_pk(&[-2, 0, 1], 7, 3, 1000).unwrap().unwrap();
        assert_eq!(r.len(), 2);
        for &root in &r {
            assert_eq!((root as u128 * root as u128 - 2) % 343, 0);
        }
    }

    #[test]
    fn lift_singular_roots() {
        // x^2 mod p^2: roots are multiples of p.
        let r = roots_mod_pk(&[0, 0, 1], 5, 2, 1000).unwrap().unwrap();
        assert_eq!(r, vec![0, 5, 10, 15, 20]);
    }

    #[test]
    fn brute_force_cross_check() {
        // random cubic mod 3^4, compare lifting against enumeration
        let coeffs: Vec<i128> = vec![7, -3, 11, 1];
        let pk = 81u64;
        let mut expect = Vec::new();
        for r in 0..pk {
            if eval_mod(&coeffs, r, pk as u128) == 0 {
                expect.push(r);
            }
        }
        let got = roots_mod_pk(&coeffs, 3, 4, 10_000).unwrap().unwrap();
        assert_eq!(got, expect);
    }
}
