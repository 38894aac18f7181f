//! Instance-level checkers for the polynomial identities
//! `P^k + Q^m = R^r` with `1/k + 1/m + 1/r <= 1`: such an identity forces
//! the three polynomials to be all constant or to share a factor, and when
//! `lcm(k,m) | r` the non-trivial solutions are scalar multiples of powers
//! of `R`.

use num_integer::Integer;
use num_rational::BigRational;
use num_traits::Zero;

use super::MPoly;
use crate::error::{Error, Result};

/// Classification of a `P^k + Q^m = R^r` instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MasonVerdict {
    /// Identity holds and P, Q, R are all constant.
    AllConstant,
    /// Identity holds and the three polynomials share a nonconstant factor
    /// (carried as witness).
    NotCoprime(MPoly),
    /// The identity itself fails; the residual `P^k + Q^m - R^r` is carried
    /// as witness.
    IdentityFails(MPoly),
    /// Identity holds for coprime, not-all-constant inputs. Impossible by
    /// the polynomial abc inequality; emitted only if that is violated.
    LemmaViolated,
}

fn check_exponents(k: u32, m: u32, r: u32) -> Result<()> {
    if k == 0 || m == 0 || r == 0 {
        return Err(Error::Precondition("mason: exponents must be positive".into()));
    }
    // 1/k + 1/m + 1/r <= 1, cleared of denominators.
    let (k, m, r) = (k as u64, m as u64, r as u64);
    if m * r + k * r + k * m > k * m * r {
        return Err(Error::Precondition(
            "mason: exponents must satisfy 1/k + 1/m + 1/r <= 1".into(),
        ));
    }
    Ok(())
}

/// Check the identity `P^k + Q^m = R^r` exactly and classify the instance.
pub fn verify_mason_instance(
    p: &MPoly,
    q: &MPoly,
    r_poly: &MPoly,
    k: u32,
    m: u32,
    r: u32,
) -> Result<MasonVerdict> {
    check_exponents(k, m, r)?;
    let lhs = p.pow(k).add(&q.pow(m))?;
    let residual = lhs.sub(&r_poly.pow(r))?;
    if !residual.is_zero() {
        return Ok(MasonVerdict::IdentityFails(residual));
    }
    if p.is_constant() && q.is_constant() && r_poly.is_constant() {
        return Ok(MasonVerdict::AllConstant);
    }
    // Under the identity, a common factor of any two of P, Q, R divides the
    // third, so the triple gcd detects any failure of coprimality.
    let nonzero: Vec<&MPoly> = [p, q, r_poly].into_iter().filter(|f| !f.is_zero()).collect();
    let mut g = nonzero[0].clone();
    for f in &nonzero[1..] {
        g = g.gcd_poly(f)?;
    }
    if !g.is_constant() {
        return Ok(MasonVerdict::NotCoprime(g));
    }
    Ok(MasonVerdict::LemmaViolated)
}

/// For an instance `P^k + Q^m = R^r` with `l = lcm(k,m)` dividing `r`,
/// recover the scalars `(a1, a2)` with `P = a1 * R^((m/g)(r/l))` and
/// `Q = a2 * R^((k/g)(r/l))`, when rational such scalars exist. Instances
/// whose scalars are irrational return `None`.
pub fn mason_co_decompose(
    p: &MPoly,
    q: &MPoly,
    r_poly: &MPoly,
    k: u32,
    m: u32,
    r: u32,
) -> Result<Option<(BigRational, BigRational)>> {
    check_exponents(k, m, r)?;
    if r_poly.is_zero() {
        return Err(Error::ZeroInput("mason_co_decompose: R"));
    }
    let l = (k as u64).lcm(&(m as u64)) as u32;
    let g = (k as u64).gcd(&(m as u64)) as u32;
    if r % l != 0 {
        return Err(Error::Precondition(format!(
            "mason_co_decompose: lcm(k,m) = {} must divide r = {}",
            l, r
        )));
    }
    let lhs = p.pow(k).add(&q.pow(m))?;
    if lhs != r_poly.pow(r) {
        return Err(Error::Precondition(
            "mason_co_decompose: identity P^k + Q^m = R^r does not hold".into(),
        ));
    }
    let ep = (m / g) * (r / l);
    let eq = (k / g) * (r / l);
    let a1 = match scalar_ratio(p, &r_poly.pow(ep)) {
        Some(a) => a,
        None => return Ok(None),
    };
    let a2 = match scalar_ratio(q, &r_poly.pow(eq)) {
        Some(a) => a,
        None => return Ok(None),
    };
    Ok(Some((a1, a2)))
}

/// Rational `a` with `f == a * g`, if one exists.
fn scalar_ratio(f: &MPoly, g: &MPoly) -> Option<BigRational> {
    if f.is_zero() {
        return Some(BigRational::zero());
    }
    let (fm, fc) = f.leading()?;
    let (gm, gc) = g.leading()?;
    if fm != gm {
        return None;
    }
    let a = BigRational::new(fc.clone(), gc.clone());
    // Cross-multiplied exact check: den(a)*f == num(a)*g.
    let lhs = f.mul_scalar(a.denom());
    let rhs = g.mul_scalar(a.numer());
    if lhs == rhs {
        Some(a)
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_traits::One;

    fn t1() -> MPoly {
        MPoly::var(1, 0)
    }

    #[test]
    fn all_constant_instance() {
        let one = MPoly::one(1);
        let zero = MPoly::zero(1);
        let v = verify_mason_instance(&one, &zero, &one, 3, 3, 3).unwrap();
        assert_eq!(v, MasonVerdict::AllConstant);
    }

    #[test]
    fn shared_factor_instance() {
        // 9R^6 - 8R^6 = R^6 with P = 3R^3, Q = -2R^2, R = T1+1, (k,m,r) = (2,3,6).
        let r = t1().add(&MPoly::one(1)).unwrap();
        let p = r.pow(3).mul_scalar(&BigInt::from(3));
        let q = r.pow(2).mul_scalar(&BigInt::from(-2));
        let v = verify_mason_instance(&p, &q, &r, 2, 3, 6).unwrap();
        assert_eq!(v, MasonVerdict::NotCoprime(r));
    }

    #[test]
    fn identity_failure_detected() {
        let p = t1();
        let q = t1().add(&MPoly::one(1)).unwrap();
        let r = t1().add(&MPoly::constant(1, 2)).unwrap();
        let v = verify_mason_instance(&p, &q, &r, 3, 3, 3).unwrap();
        assert!(matches!(v, MasonVerdict::IdentityFails(_)));
    }

    #[test]
    fn exponent_condition_enforced() {
        let p = MPoly::one(1);
        assert!(verify_mason_instance(&p, &p, &p, 2, 2, 2).is_err());
    }

    #[test]
    fn co_decompose_recovers_scalars() {
        let r = t1().add(&MPoly::one(1)).unwrap();
        let p = r.pow(3).mul_scalar(&BigInt::from(3));
        let q = r.pow(2).mul_scalar(&BigInt::from(-2));
        let (a1, a2) = mason_co_decompose(&p, &q, &r, 2, 3, 6).unwrap().unwrap();
        assert_eq!(a1, BigRational::from(BigInt::from(3)));
        assert_eq!(a2, BigRational::from(BigInt::from(-2)));
    }

    #[test]
    fn co_decompose_degenerate_zero_scalar() {
        // P = R^((m/g)(r/l)), Q = 0.
        let r = t1().add(&MPoly::constant(1, 2)).unwrap();
        let p = r.pow(3);
        let q = MPoly::zero(1);
        let (a1, a2) = mason_co_decompose(&p, &q, &r, 2, 3, 6).unwrap().unwrap();
        assert!(a1.is_one());
        assert!(a2.is_zero());
    }

    #[test]
    fn co_decompose_divisibility_enforced() {
        let r = t1();
        let p = MPoly::zero(1);
        let q = r.pow(2);
        // l = lcm(2,3) = 6 does not divide 7.
        assert!(mason_co_decompose(&p, &q, &r, 2, 3, 7).is_err());
    }
}
