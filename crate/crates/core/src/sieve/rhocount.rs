//! Counting zeros of F over (Z/m)^n and the Euler products
//! gamma_{k,F} = prod_p (1 - rho_F(p^k)/p^(nk)). Prime powers use smooth
//! Hensel counting where the reduction is nonsingular at each root and fall
//! back to bounded enumeration elsewhere.

use num_traits::ToPrimitive;
use rayon::prelude::*;

use super::gfp::roots_mod_pk;
use super::small_primes;
use crate::error::{Error, Result};
use crate::mpoly::MPoly;

/// Exact count of nu in (Z/m)^n with F(nu) = 0 mod m, by enumeration.
pub fn rho_count(f: &MPoly, m: u64, cap: u64) -> Result<u64> {
    if m < 2 {
        return Err(Error::Precondition("rho: modulus must be >= 2".into()));
    }
    let n = f.nvars() as u32;
    let size = (m as u128).checked_pow(n).filter(|&s| s <= cap as u128);
    let size = size.ok_or_else(|| Error::Budget(format!("m^n exceeds cap {}", cap)))?;
    let _ = size;
    // Reduced coefficient view: term list with mod-m coefficients.
    let terms: Vec<(Vec<u32>, u64)> = f
        .terms()
        .map(|(mon, c)| {
            let cm = c.mod_floor(&num_bigint::BigInt::from(m));
            (mon.0.clone(), cm.to_u64().expect("reduced"))
        })
        .collect();
    let nv = f.nvars();
    // Power tables per variable: pow[v][x][e] is too big; compute per-point
    // with cached powers of the current coordinates instead.
    let count = (0..m)
        .into_par_iter()
        .map(|first| {
            let mut point = vec![0u64; nv];
            point[0] = first;
            let mut cnt = 0u64;
            let mut idx = vec![0u64; nv.saturating_sub(1)];
            loop {
                for (j, &v) in idx.iter().enumerate() {
                    point[j + 1] = v;
                }
                if eval_terms_mod(&terms, &point, m) == 0 {
                    cnt += 1;
                }
                let mut j = idx.len();
                loop {
                    if j == 0 {
                        return cnt;
                    }
                    j -= 1;
                    if idx[j] + 1 < m {
                        idx[j] += 1;
                        for x in idx.iter_mut().skip(j + 1) {
                            *x = 0;
                        }
                        break;
                    }
                }
            }
        })
        .sum();
    Ok(count)
}

fn eval_terms_mod(terms: &[(Vec<u32>, u64)], point: &[u64], m: u64) -> u64 {
    let mut acc: u128 = 0;
    for (exps, c) in terms {
        let mut t = *c as u128;
        for (v, &e) in exps.iter().enumerate() {
            if e > 0 {
                let pv = powmod_u64(point[v], e as u64, m);
                t = t * pv as u128 % m as u128;
            }
        }
        acc = (acc + t) % m as u128;
    }
    acc as u64
}

fn powmod_u64(mut a: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1u64;
    a %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = (acc as u128 * a as u128 % m as u128) as u64;
        }
        a = (a as u128 * a as u128 % m as u128) as u64;
        e >>= 1;
    }
    acc
}

/// rho_F(p^k) with smooth-point lifting: a root of F mod p where some
/// partial derivative is a unit contributes p^((n-1)(k-1)) residues mod
/// p^k; singular roots are handled by enumeration within the cap.
pub fn rho_prime_power(f: &MPoly, p: u64, k: u32, cap: u64) -> Result<u64> {
    let n = f.nvars();
    if k == 1 || n == 1 {
        // Univariate: lift root lists directly.
        if n == 1 {
            let coeffs = coeffs_1d_i128(f);
            return match roots_mod_pk(&coeffs, p, k, cap as usize)? {
                None => Ok(p.pow(k)),
                Some(r) => Ok(r.len() as u64),
            };
        }
        return rho_count(f, p, cap);
    }
    // Multivariate: classify the roots mod p.
    let derivs: Vec<MPoly> = (0..n).map(|v| f.derivative(v)).collect();
    let pn = (p as u128).checked_pow(n as u32).filter(|&s| s <= cap as u128);
    if pn.is_none() {
        return Err(Error::Budget(format!("p^n = {}^{} exceeds cap", p, n)));
    }
    let terms = reduced_terms(f, p);
    let dterms: Vec<Vec<(Vec<u32>, u64)>> = derivs.iter().map(|d| reduced_terms(d, p)).collect();

    let mut smooth = 0u64;
    let mut singular: Vec<Vec<u64>> = Vec::new();
    let mut point = vec![0u64; n];
    loop {
        if eval_terms_mod(&terms, &point, p) == 0 {
            let is_smooth = dterms.iter().any(|dt| eval_terms_mod(dt, &point, p) != 0);
            if is_smooth {
                smooth += 1;
            } else {
                singular.push(point.clone());
                if singular.len() as u64 > cap {
                    return Err(Error::Budget("singular root list exceeds cap".into()));
                }
            }
        }
        let mut j = n;
        let done = loop {
            if j == 0 {
                break true;
            }
            j -= 1;
            if point[j] + 1 < p {
                point[j] += 1;
                for x in point.iter_mut().skip(j + 1) {
                    *x = 0;
                }
                break false;
            }
        };
        if done {
            break;
        }
    }
    let smooth_lifts = (p as u128).checked_pow((n as u32 - 1) * (k - 1));
    let smooth_total = smooth_lifts
        .and_then(|l| l.checked_mul(smooth as u128))
        .filter(|&v| v <= u64::MAX as u128)
        .ok_or_else(|| Error::Budget("smooth lift count overflows".into()))? as u64;

    // Singular roots: count lifts level by level with explicit residues.
    let mut singular_total = 0u64;
    if !singular.is_empty() {
        let mut level = singular;
        let mut modulus = p;
        for _ in 1..k {
            let next_mod = modulus.checked_mul(p).ok_or_else(|| {
                Error::Budget("modulus overflow in singular lifting".into())
            })?;
            let mut next: Vec<Vec<u64>> = Vec::new();
            for r in &level {
                // F(r + modulus * s) = F(r) + modulus * grad F(r) . s mod next
                let fr = eval_poly_mod(f, r, next_mod);
                debug_assert_eq!(fr % modulus, 0);
                let c = (fr / modulus) % p;
                let g: Vec<u64> = derivs.iter().map(|d| eval_poly_mod(d, r, p)).collect();
                if g.iter().all(|&gv| gv == 0) {
                    if c == 0 {
                        // all p^n extensions survive
                        extend_all(r, modulus, p, &mut next);
                    }
                } else {
                    // linear condition grad . s = -c mod p: p^(n-1) solutions
                    extend_linear(r, modulus, p, &g, c, &mut next);
                }
                if next.len() as u64 > cap {
                    return Err(Error::Budget("singular lifting exceeds cap".into()));
                }
            }
            level = next;
            modulus = next_mod;
        }
        singular_total = level.len() as u64;
    }
    Ok(smooth_total + singular_total)
}

fn reduced_terms(f: &MPoly, m: u64) -> Vec<(Vec<u32>, u64)> {
    f.terms()
        .filter_map(|(mon, c)| {
            let cm = c.mod_floor(&num_bigint::BigInt::from(m)).to_u64().expect("reduced");
            if cm == 0 {
                None
            } else {
                Some((mon.0.clone(), cm))
            }
        })
        .collect()
}

fn coeffs_1d_i128(f: &MPoly) -> Vec<i128> {
    let d = f.total_degree() as usize;
    let mut c = vec![0i128; d + 1];
    for (m, coeff) in f.terms() {
        c[m.0[0] as usize] = coeff.to_i128().unwrap_or_else(|| {
            // clamp through bigint mod later; coefficients this large do not
            // appear on the sieve paths
            panic!("coefficient exceeds i128 in univariate sieve")
        });
    }
    c
}

fn eval_poly_mod(f: &MPoly, point: &[u64], m: u64) -> u64 {
    let terms = reduced_terms(f, m);
    eval_terms_mod(&terms, point, m)
}

fn extend_all(r: &[u64], modulus: u64, p: u64, out: &mut Vec<Vec<u64>>) {
    let n = r.len();
    let mut s = vec![0u64; n];
    loop {
        let mut v = r.to_vec();
        for i in 0..n {
            v[i] += modulus * s[i];
        }
        out.push(v);
        let mut j = n;
        loop {
            if j == 0 {
                return;
            }
            j -= 1;
            if s[j] + 1 < p {
                s[j] += 1;
                for x in s.iter_mut().skip(j + 1) {
                    *x = 0;
                }
                break;
            }
        }
    }
}

fn extend_linear(r: &[u64], modulus: u64, p: u64, g: &[u64], c: u64, out: &mut Vec<Vec<u64>>) {
    // Solutions of g . s = -c mod p: pick a pivot with g[i] != 0.
    let n = r.len();
    let pivot = g.iter().position(|&x| x % p != 0).expect("nonzero gradient");
    let inv = powmod_u64(g[pivot] % p, p - 2, p);
    let mut s = vec![0u64; n - 1]; // free coordinates, skipping pivot
    loop {
        let mut dot: u128 = 0;
        let mut sk = 0usize;
        for i in 0..n {
            if i == pivot {
                continue;
            }
            dot = (dot + g[i] as u128 * s[sk] as u128) % p as u128;
            sk += 1;
        }
        // g[pivot] * s_pivot = -c - dot
        let rhs = ((p as u128 * 2 - c as u128 - dot) % p as u128) as u64;
        let sp = (rhs as u128 * inv as u128 % p as u128) as u64;
        let mut v = r.to_vec();
        let mut sk = 0usize;
        for i in 0..n {
            let si = if i == pivot { sp } else { s[sk] };
            if i != pivot {
                sk += 1;
            }
            v[i] += modulus * si;
        }
        out.push(v);
        if n == 1 {
            return;
        }
        let mut j = n - 1;
        loop {
            if j == 0 {
                return;
            }
            j -= 1;
            if s[j] + 1 < p {
                s[j] += 1;
                for x in s.iter_mut().skip(j + 1) {
                    *x = 0;
                }
                break;
            }
        }
    }
}

/// Partial Euler product over primes up to `p_max`, with a heuristic tail
/// estimate from the observed rho_F(p^k)/p^(nk-2) mass.
pub fn euler_product(f: &MPoly, k: u32, p_max: u64, cap: u64) -> Result<(f64, f64)> {
    if k < 2 {
        return Err(Error::Precondition("euler_product: k >= 2".into()));
    }
    let n = f.nvars() as u32;
    let primes: Vec<u64> = small_primes().iter().copied().take_while(|&p| p <= p_max).collect();
    let factors: Vec<Result<(f64, f64)>> = primes
        .par_iter()
        .map(|&p| {
            let rho = rho_prime_power(f, p, k, cap)? as f64;
            let pnk = (p as f64).powi((n * k) as i32);
            let factor = 1.0 - rho / pnk;
            // mass for the tail heuristic: rho(p^k)/p^(nk-2)
            let mass = rho / (p as f64).powi((n * k) as i32 - 2);
            Ok((factor, mass))
        })
        .collect();
    let mut partial = 1.0f64;
    let mut c_f: f64 = 0.0;
    for fr in factors {
        let (factor, mass) = fr?;
        partial *= factor;
        c_f = c_f.max(mass);
    }
    // sum_{p > P} c_F / p^2 ~ c_F / (P log P), flagged heuristic in reports.
    let tail = if p_max >= 2 {
        c_f / (p_max as f64 * (p_max as f64).ln())
    } else {
        f64::INFINITY
    };
    Ok((partial, tail))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mpoly::MPoly;

    #[test]
    fn rho_linear_is_one_per_prime() {
        let f = MPoly::var(1, 0);
        assert_eq!(rho_count(&f, 7, 1_000_000).unwrap(), 1);
        assert_eq!(rho_prime_power(&f, 7, 2, 1_000_000).unwrap(), 1);
    }

    #[test]
    fn rho_product_poly_mod_5() {
        // F = T1*T2 mod 5: 2*5 - 1 = 9 zeros.
        let f = MPoly::var(2, 0).mul(&MPoly::var(2, 1)).unwrap();
        assert_eq!(rho_count(&f, 5, 1_000_000).unwrap(), 9);
    }

    #[test]
    fn rho_multiplicative_crt() {
        let f = MPoly::var(2, 0)
            .pow(2)
            .add(&MPoly::var(2, 1).pow(3))
            .unwrap();
        let r6 = rho_count(&f, 6, 10_000_000).unwrap();
        let r2 = rho_count(&f, 2, 10_000_000).unwrap();
        let r3 = rho_count(&f, 3, 10_000_000).unwrap();
        assert_eq!(r6, r2 * r3);
    }

    #[test]
    fn rho_prime_power_matches_enumeration() {
        // smooth + singular mix: F = T1^2 - T2^2 mod 3^3
        let f = MPoly::var(2, 0).pow(2).sub(&MPoly::var(2, 1).pow(2)).unwrap();
        let direct = rho_count(&f, 27, 10_000_000).unwrap();
        let lifted = rho_prime_power(&f, 3, 3, 10_000_000).unwrap();
        assert_eq!(lifted, direct);
    }

    #[test]
    fn euler_product_linear_matches_zeta2() {
        // F = T1, k = 2: gamma = 1/zeta(2) = 6/pi^2.
        let f = MPoly::var(1, 0);
        let (partial, tail) = euler_product(&f, 2, 10_000, 10_000_000).unwrap();
        let target = 6.0 / std::f64::consts::PI.powi(2);
        assert!((partial - target).abs() < 1e-4, "partial {} target {}", partial, target);
        assert!(tail < 1e-3);
    }

    #[test]
    fn euler_partial_nonincreasing() {
        let f = MPoly::var(1, 0).pow(2).add(&MPoly::one(1)).unwrap();
        let (p1, _) = euler_product(&f, 2, 100, 1_000_000).unwrap();
        let (p2, _) = euler_product(&f, 2, 1000, 1_000_000).unwrap();
        assert!(p2 <= p1 + 1e-15);
        assert!(p1 > 0.0 && p1 <= 1.0);
    }
}
