//! Multivariate gcd over Z by recursive primitive pseudo-remainder
//! sequences, treating the polynomial as univariate in its last occurring
//! variable over the smaller polynomial ring. Degrees here are desk scale,
//! so no subresultant optimizations.


use super::MPoly;
use crate::error::{Error, Result};

impl MPoly {
    /// Primitive gcd with positive leading coefficient under the global
    /// order. Integer contents are discarded: `gcd_poly(f, 0)` is the
    /// primitive part of `f` (sign-normalized), and the gcd of two nonzero
    /// constants is 1.
    pub fn gcd_poly(&self, other: &MPoly) -> Result<MPoly> {
        self.check_nvars(other)?;
        if self.is_zero() && other.is_zero() {
            return Err(Error::ZeroInput("gcd_poly of two zero polynomials"));
        }
        Ok(gcd_inner(self, other))
    }
}

fn gcd_inner(a: &MPoly, b: &MPoly) -> MPoly {
    let nvars = a.nvars();
    if a.is_zero() {
        return b.primitive_part().expect("nonzero").with_positive_lc();
    }
    if b.is_zero() {
        return a.primitive_part().expect("nonzero").with_positive_lc();
    }
    let a = a.primitive_part().expect("nonzero").with_positive_lc();
    let b = b.primitive_part().expect("nonzero").with_positive_lc();

    // Main variable: the highest index occurring in either operand.
    let v = match (0..nvars).rev().find(|&v| a.degree_in(v) > 0 || b.degree_in(v) > 0) {
        Some(v) => v,
        None => return MPoly::one(nvars), // both primitive constants
    };

    let ca = content_in(&a, v);
    let cb = content_in(&b, v);
    let c = gcd_inner(&ca, &cb);
    let ppa = a.div_exact(&ca).expect("content divides");
    let ppb = b.div_exact(&cb).expect("content divides");

    if ppa.degree_in(v) == 0 || ppb.degree_in(v) == 0 {
        // One side is free of v after content removal, so the v-part of the
        // gcd is trivial.
        return c;
    }

    let (mut f, mut g) = if ppa.degree_in(v) >= ppb.degree_in(v) {
        (ppa, ppb)
    } else {
        (ppb, ppa)
    };
    let gcd_v = loop {
        let r = pseudo_rem(&f, &g, v);
        if r.is_zero() {
            break g;
        }
        if r.degree_in(v) == 0 {
            break MPoly::one(nvars);
        }
        let rc = content_in(&r, v);
        let r = r.div_exact(&rc).expect("content divides");
        f = g;
        g = r;
    };

    c.mul(&gcd_v)
        .expect("same nvars")
        .primitive_part()
        .expect("nonzero")
        .with_positive_lc()
}

/// Gcd of the coefficients of `f` viewed as a univariate polynomial in `v`.
fn content_in(f: &MPoly, v: usize) -> MPoly {
    let mut acc = MPoly::zero(f.nvars());
    for k in 0..=f.degree_in(v) {
        let c = f.coeff_of(v, k);
        if c.is_zero() {
            continue;
        }
        acc = if acc.is_zero() { c } else { gcd_inner(&acc, &c) };
        if acc.is_constant() && !acc.is_zero() {
            return MPoly::one(f.nvars());
        }
    }
    acc
}

/// Pseudo-remainder of `f` by `g` with respect to `v`:
/// `lc(g)^(deg f - deg g + 1) * f = q*g + r` with `deg_v r < deg_v g`.
fn pseudo_rem(f: &MPoly, g: &MPoly, v: usize) -> MPoly {
    let dg = g.degree_in(v);
    debug_assert!(dg > 0);
    let lcg = g.leading_coeff_in(v);
    let mut r = f.clone();
    while !r.is_zero() && r.degree_in(v) >= dg {
        let dr = r.degree_in(v);
        let lcr = r.leading_coeff_in(v);
        // r <- lc(g)*r - lc(r)*v^(dr-dg)*g
        let t = lcr.mul(g).expect("same nvars").shift_var(v, dr - dg);
        r = r.mul(&lcg).expect("same nvars").sub(&t).expect("same nvars");
        debug_assert!(r.is_zero() || r.degree_in(v) < dr);
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn s_t() -> (MPoly, MPoly) {
        (MPoly::var(2, 0), MPoly::var(2, 1))
    }

    #[test]
    fn gcd_factored_difference_of_squares() {
        let (s, t) = s_t();
        let a = s.pow(2).sub(&t.pow(2)).unwrap(); // T1^2 - T2^2
        let b = s.sub(&t).unwrap(); // T1 - T2
        let g = a.gcd_poly(&b).unwrap();
        assert_eq!(g, b);
    }

    #[test]
    fn gcd_with_zero_is_primitive_part() {
        let (s, _) = s_t();
        let f = s.pow(2).mul_scalar(&BigInt::from(-6));
        let g = f.gcd_poly(&MPoly::zero(2)).unwrap();
        assert_eq!(g, s.pow(2)); // content 6 dropped, sign normalized
    }

    #[test]
    fn gcd_of_coprime_is_constant() {
        let (s, t) = s_t();
        let a = s.pow(3).add(&t).unwrap();
        let b = s.add(&MPoly::one(2)).unwrap();
        let g = a.gcd_poly(&b).unwrap();
        assert!(g.is_constant());
    }

    #[test]
    fn gcd_common_factor_multiple_vars() {
        let (s, t) = s_t();
        let g0 = s.add(&t).unwrap(); // T1 + T2
        let a = g0.mul(&s.pow(2).add(&MPoly::one(2)).unwrap()).unwrap();
        let b = g0.mul(&t.sub(&MPoly::constant(2, 3)).unwrap()).unwrap();
        let g = a.gcd_poly(&b).unwrap();
        assert_eq!(g, g0);
    }
}
