//! k-free tests, power-free parts, and the count of parameter vectors whose
//! polynomial value is k-free. Values of zero count as k-free throughout.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;

use super::factorize::{factorize, factorize_u64, is_prime_u64, small_primes};
use super::gfp::roots_mod_pk;
use super::SieveReport;
use crate::error::{Error, Result};
use crate::mpoly::MPoly;

/// True iff no p^k divides m; 0 is k-free for every k >= 2 by convention.
pub fn is_kfree(m: &BigInt, k: u32) -> Result<bool> {
    if k < 2 {
        return Err(Error::Precondition("is_kfree: k must be at least 2".into()));
    }
    if m.is_zero() {
        return Ok(true);
    }
    if let Some(v) = m.abs().to_u64() {
        return is_kfree_u64(v, k);
    }
    let f = factorize(m)?;
    Ok(f.max_exponent() < k)
}

fn is_kfree_u64(mut n: u64, k: u32) -> Result<bool> {
    if n == 0 {
        return Ok(true);
    }
    for &p in small_primes() {
        if p > 10_000 || p * p > n {
            break;
        }
        if n % p == 0 {
            let mut e = 0u32;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            if e >= k {
                return Ok(false);
            }
        }
    }
    if n == 1 || n < 100_000_000 || is_prime_u64(n) {
        // No prime factor below 10^4 remains, so a cofactor below 10^8 is
        // prime; a prime cofactor has exponent 1 < k.
        return Ok(true);
    }
    // Composite cofactor, all factors > 10^4: exponents can reach k only
    // for k = 2 (p^2 q...) or tiny cofactors; factor it.
    if k >= 4 {
        // smallest possible p^4 > 10^16 > n only when n < 10^16
        if n < 10_000_000_000_000_000 {
            return Ok(true);
        }
    }
    let f = factorize_u64(n)?;
    Ok(f.values().copied().max().unwrap_or(0) < k)
}

/// N-th power-free part: the smallest positive integer l with |m|/l a
/// perfect N-th power.
pub fn pfr(m: &BigInt, n: u32) -> Result<BigInt> {
    if m.is_zero() {
        return Err(Error::ZeroInput("pfr"));
    }
    if n < 2 {
        return Err(Error::Precondition("pfr: N must be at least 2".into()));
    }
    let f = factorize(m)?;
    let mut acc = BigInt::one();
    for (p, e) in &f.factors {
        let r = e % n;
        if r > 0 {
            acc *= num_traits::pow(p.clone(), r as usize);
        }
    }
    Ok(acc)
}

/// Count of nu in [-B, B]^n with F(nu) k-free. Dimension one uses a
/// progression sieve over the roots of F mod p^k; higher dimensions test
/// values directly, parallel over the leading coordinate with a fixed
/// merge order.
pub fn count_kfree_values(f: &MPoly, big_b: u64, k: u32, cap: u64) -> Result<SieveReport> {
    if k < 2 {
        return Err(Error::Precondition("count_kfree_values: k >= 2".into()));
    }
    let n = f.nvars();
    let total = (2 * big_b + 1).checked_pow(n as u32).filter(|&t| t <= cap);
    let total = total.ok_or_else(|| {
        Error::Budget(format!("(2B+1)^n exceeds enumeration cap {}", cap))
    })?;
    let satisfying = if n == 1 {
        count_kfree_1d(f, big_b, k)?
    } else {
        count_kfree_nd(f, big_b, k)?
    };
    Ok(SieveReport {
        b: big_b,
        n,
        k: Some(k),
        m: None,
        n_param: None,
        p_max: None,
        total,
        satisfying,
        euler_partial: None,
        tail_estimate: None,
    })
}

fn value_bound_1d(f: &MPoly, big_b: u64) -> BigInt {
    // |F(nu)| <= sum |c_i| B^(deg_i) <= mass * B^d
    f.coeff_mass() * BigInt::from(big_b).pow(f.total_degree())
}

fn count_kfree_1d(f: &MPoly, big_b: u64, k: u32) -> Result<u64> {
    let max_val = value_bound_1d(f, big_b);
    let p_limit = max_val.nth_root(k).to_u64().unwrap_or(u64::MAX);
    let len = (2 * big_b + 1) as usize;
    // The prime table stops at 10^6; past that fall through to per-value tests.
    if p_limit <= 1_000_000 && len <= 200_000_000 {
        return sieve_kfree_1d(f, big_b, k, p_limit);
    }
    // Fallback: direct per-value testing.
    let coeffs = poly_to_coeffs_1d(f);
    let mut count = 0u64;
    for v in -(big_b as i64)..=(big_b as i64) {
        let val = eval_coeffs_i128(&coeffs, v)
            .map(BigInt::from)
            .unwrap_or_else(|| f.eval_int(&[BigInt::from(v)]).expect("nvars checked"));
        if is_kfree(&val, k)? {
            count += 1;
        }
    }
    Ok(count)
}

fn poly_to_coeffs_1d(f: &MPoly) -> Vec<BigInt> {
    let d = f.total_degree() as usize;
    let mut c = vec![BigInt::zero(); d + 1];
    for (m, coeff) in f.terms() {
        c[m.0[0] as usize] = coeff.clone();
    }
    c
}

fn eval_coeffs_i128(c: &[BigInt], x: i64) -> Option<i128> {
    let mut acc: i128 = 0;
    for ci in c.iter().rev() {
        let ci = ci.to_i128()?;
        acc = acc.checked_mul(x as i128)?.checked_add(ci)?;
    }
    Some(acc)
}

fn sieve_kfree_1d(f: &MPoly, big_b: u64, k: u32, p_limit: u64) -> Result<u64> {
    let len = (2 * big_b + 1) as usize;
    let mut bad = vec![false; len];
    let coeffs_i128: Vec<i128> = {
        let c = poly_to_coeffs_1d(f);
        let mut out = Vec::with_capacity(c.len());
        for v in &c {
            out.push(v.to_i128().ok_or_else(|| {
                Error::Budget("coefficients exceed the 1d sieve fast path".into())
            })?);
        }
        out
    };
    let offset = big_b as i64;
    for &p in small_primes() {
        if p > p_limit {
            break;
        }
        // p^k can overflow for tiny p with huge k only if p^k > max_val,
        // excluded by p <= p_limit.
        let pk = match (p as u128).checked_pow(k) {
            Some(v) if v <= u64::MAX as u128 => v as u64,
            _ => continue,
        };
        let roots = roots_mod_pk(&coeffs_i128, p, k, 1_000_000)?;
        match roots {
            None => {
                // F vanishes identically mod p^k: every value is divisible,
                // but zero values stay k-free; handled by the zero pass.
                for slot in bad.iter_mut() {
                    *slot = true;
                }
            }
            Some(rs) => {
                for r in rs {
                    // nu = r + t*pk within [-B, B]
                    let r = r as i64;
                    let pk = pk as i64;
                    let first = {
                        let lo = -offset;
                        let diff = lo - r;
                        r + diff.div_euclid(pk) * pk + if diff.rem_euclid(pk) != 0 { pk } else { 0 }
                    };
                    let mut nu = first;
                    while nu <= offset {
                        bad[(nu + offset) as usize] = true;
                        nu += pk;
                    }
                }
            }
        }
    }
    // Zero values are k-free by convention; unmark the integer roots of F.
    for r in integer_roots_in_range(f, big_b)? {
        bad[(r + offset) as usize] = false;
    }
    Ok(bad.iter().filter(|&&b| !b).count() as u64)
}

/// Integer roots of a univariate polynomial within [-B, B]: zero (by
/// stripping the monomial part) plus divisors of the constant term.
fn integer_roots_in_range(f: &MPoly, big_b: u64) -> Result<Vec<i64>> {
    let coeffs = poly_to_coeffs_1d(f);
    let mut lowest = 0usize;
    while coeffs[lowest].is_zero() {
        lowest += 1;
    }
    let mut roots = Vec::new();
    if lowest > 0 {
        roots.push(0i64);
    }
    let c0 = coeffs[lowest].abs();
    if coeffs.len() == lowest + 1 {
        return Ok(roots); // monomial: only root is 0
    }
    let fac = factorize(&c0)?;
    let mut divisors: Vec<BigInt> = vec![BigInt::one()];
    for (p, e) in &fac.factors {
        let mut next = Vec::new();
        for d in &divisors {
            let mut pe = BigInt::one();
            for _ in 0..=*e {
                next.push(d * &pe);
                pe *= p;
                if pe > BigInt::from(big_b) * p {
                    break;
                }
            }
        }
        next.sort();
        next.dedup();
        next.retain(|d| d <= &BigInt::from(big_b));
        divisors = next;
        if divisors.len() > 200_000 {
            return Err(Error::Budget("too many divisors in root search".into()));
        }
    }
    for d in divisors {
        for sign in [1i64, -1] {
            let cand = &d * BigInt::from(sign);
            if f.eval_int(&[cand.clone()]).expect("univariate").is_zero() {
                roots.push(cand.to_i64().expect("within B"));
            }
        }
    }
    roots.sort_unstable();
    roots.dedup();
    Ok(roots)
}

fn count_kfree_nd(f: &MPoly, big_b: u64, k: u32) -> Result<u64> {
    let n = f.nvars();
    let lo = -(big_b as i64);
    let hi = big_b as i64;
    let counts: Vec<Result<u64>> = (lo..=hi)
        .into_par_iter()
        .map(|first| {
            let mut point = vec![0i64; n];
            point[0] = first;
            let mut count = 0u64;
            let mut idx = vec![lo; n - 1];
            loop {
                for (j, &v) in idx.iter().enumerate() {
                    point[j + 1] = v;
                }
                let val = match f.eval_i128(&point) {
                    Some(v) => BigInt::from(v),
                    None => {
                        let bigs: Vec<BigInt> = point.iter().map(|&v| BigInt::from(v)).collect();
                        f.eval_int(&bigs).expect("nvars checked")
                    }
                };
                if is_kfree(&val, k)? {
                    count += 1;
                }
                // advance odometer
                let mut j = n - 1;
                loop {
                    if j == 0 {
                        return Ok(count);
                    }
                    j -= 1;
                    if idx[j] < hi {
                        idx[j] += 1;
                        for x in idx.iter_mut().skip(j + 1) {
                            *x = lo;
                        }
                        break;
                    }
                }
            }
        })
        .collect();
    let mut total = 0u64;
    for c in counts {
        total += c?;
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kfree_basics() {
        assert!(!is_kfree(&BigInt::from(12), 2).unwrap()); // 4 | 12
        assert!(is_kfree(&BigInt::from(12), 3).unwrap());
        assert!(is_kfree(&BigInt::from(0), 5).unwrap()); // convention
        assert!(is_kfree(&BigInt::from(-30), 2).unwrap());
        assert!(!is_kfree(&BigInt::from(-8), 3).unwrap());
    }

    #[test]
    fn pfr_values() {
        assert_eq!(pfr(&BigInt::from(12), 2).unwrap(), BigInt::from(3)); // 12 = 2^2*3
        assert_eq!(pfr(&BigInt::from(72), 3).unwrap(), BigInt::from(9)); // 72/9 = 8
        assert_eq!(pfr(&BigInt::from(-8), 3).unwrap(), BigInt::one());
        assert!(pfr(&BigInt::zero(), 2).is_err());
    }

    #[test]
    fn sqfr_and_cufr_are_pfr_2_and_3() {
        // sqfr(m) = Pfr_2(m), cufr(m) = Pfr_3(m)
        let m = BigInt::from(360); // 2^3 * 3^2 * 5
        assert_eq!(pfr(&m, 2).unwrap(), BigInt::from(10)); // 2*5
        assert_eq!(pfr(&m, 3).unwrap(), BigInt::from(45)); // 3^2 * 5
    }

    #[test]
    fn count_kfree_identity_poly_small() {
        // F = T1, B = 100, k = 2: count squarefree in [-100, 100] with 0.
        let f = MPoly::var(1, 0);
        let rep = count_kfree_values(&f, 100, 2, 10_000_000).unwrap();
        // 61 squarefree in 1..=100, doubled, plus zero.
        assert_eq!(rep.satisfying, 2 * 61 + 1);
        assert_eq!(rep.total, 201);
    }

    #[test]
    fn count_kfree_square_poly() {
        // F = T1^2: the value is 2-free only for nu in {0, 1, -1}.
        let t = MPoly::var(1, 0);
        let rep = count_kfree_values(&t.pow(2), 50, 2, 10_000_000).unwrap();
        assert_eq!(rep.satisfying, 3);
    }

    #[test]
    fn count_kfree_all_when_k_large() {
        // k exceeding any attainable exponent counts everything.
        let t = MPoly::var(1, 0);
        let rep = count_kfree_values(&t.pow(2), 20, 40, 10_000_000).unwrap();
        assert_eq!(rep.satisfying, rep.total);
    }

    #[test]
    fn two_dimensional_matches_direct() {
        // F = T1*T2 over [-B,B]^2 with k=2: cross-check against the naive count.
        let f = MPoly::var(2, 0).mul(&MPoly::var(2, 1)).unwrap();
        let rep = count_kfree_values(&f, 12, 2, 10_000_000).unwrap();
        let mut expect = 0u64;
        for a in -12i64..=12 {
            for b in -12i64..=12 {
                if is_kfree(&BigInt::from(a * b), 2).unwrap() {
                    expect += 1;
                }
            }
        }
        assert_eq!(rep.satisfying, expect);
    }
}
