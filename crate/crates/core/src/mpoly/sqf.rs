//! Squarefree decomposition over Q via Yun-style gcd chains on the
//! primitive part, using the gcd with all partial derivatives. Multiplicity
//! classes are all the downstream consumers need, so no irreducible
//! factorization happens anywhere.

use num_bigint::BigInt;

use num_traits::Signed;

use super::MPoly;
use crate::error::{Error, Result};

/// Decomposition `f = content * prod S_i^i` with each `S_i` squarefree,
/// primitive with positive leading coefficient, and pairwise coprime.
#[derive(Clone, Debug)]
pub struct SqfDecomp {
    pub content: BigInt,
    /// `(S_i, i)` sorted by increasing multiplicity; parts equal to 1 are
    /// omitted.
    pub parts: Vec<(MPoly, u32)>,
}

impl SqfDecomp {
    pub fn reconstruct(&self, nvars: usize) -> MPoly {
        let mut acc = MPoly::constant(nvars, self.content.clone());
        for (s, m) in &self.parts {
            acc = acc.mul(&s.pow(*m)).expect("same nvars");
        }
        acc
    }
}

impl MPoly {
    /// Squarefree decomposition of a nonzero polynomial.
    pub fn squarefree_decomposition(&self) -> Result<SqfDecomp> {
        if self.is_zero() {
            return Err(Error::ZeroInput("squarefree_decomposition"));
        }
        let nvars = self.nvars();
        let pp = self.primitive_part()?.with_positive_lc();
        if pp.is_constant() {
            return Ok(SqfDecomp {
                content: self.as_constant().expect("constant"),
                parts: vec![],
            });
        }

        // d = gcd(pp, all partials) = prod S_i^(i-1); w = prod S_i.
        let mut d = pp.clone();
        for v in 0..nvars {
            let dv = pp.derivative(v);
            if !dv.is_zero() {
                d = d.gcd_poly(&dv)?;
            }
        }
        let mut w = pp.div_exact(&d).expect("gcd divides");
        let mut parts = Vec::new();
        let mut mult = 1u32;
        while !w.is_constant() {
            let y = w.gcd_poly(&d)?; // prod of S_j with j > mult
            let s = w.div_exact(&y).expect("gcd divides");
            if !s.is_constant() {
                parts.push((s, mult));
            }
            d = d.div_exact(&y).expect("division by construction");
            w = y;
            mult += 1;
        }

        // Content carries whatever scalar (including sign) is left over.
        let mut prod = MPoly::one(nvars);
        for (s, m) in &parts {
            prod = prod.mul(&s.pow(*m)).expect("same nvars");
        }
        let content = self
            .div_exact(&prod)
            .and_then(|q| q.as_constant())
            .expect("decomposition reconstructs input");
        Ok(SqfDecomp { content, parts })
    }

    /// Product of the distinct squarefree parts, primitive with positive
    /// leading coefficient.
    pub fn sqfr_part(&self) -> Result<MPoly> {
        let d = self.squarefree_decomposition()?;
        let mut acc = MPoly::one(self.nvars());
        for (s, _) in &d.parts {
            acc = acc.mul(s).expect("same nvars");
        }
        Ok(acc)
    }

    /// `Some(g)` with `g^e == self` exactly, detected from squarefree
    /// multiplicities all divisible by `e` and the content being an e-th
    /// power; `None` otherwise.
    pub fn perfect_power_root(&self, e: u32) -> Option<MPoly> {
        if self.is_zero() || e == 0 {
            return None;
        }
        if e == 1 {
            return Some(self.clone());
        }
        let d = self.squarefree_decomposition().ok()?;
        if d.parts.iter().any(|(_, m)| m % e != 0) {
            return None;
        }
        let mag = d.content.abs();
        let root = mag.nth_root(e);
        if num_traits::pow(root.clone(), e as usize) != mag {
            return None;
        }
        let root = if d.content.is_negative() {
            if e % 2 == 0 {
                return None;
            }
            -root
        } else {
            root
        };
        let mut g = MPoly::constant(self.nvars(), root);
        for (s, m) in &d.parts {
            g = g.mul(&s.pow(m / e)).expect("same nvars");
        }
        if g.pow(e) == *self {
            Some(g)
        } else {
            None
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s_t() -> (MPoly, MPoly) {
        (MPoly::var(2, 0), MPoly::var(2, 1))
    }

    #[test]
    fn decompose_constructed_multiplicities() {
        // (T1-T2)^2 * (T1+1)
        let (s, t) = s_t();
        let a = s.sub(&t).unwrap();
        let b = s.add(&MPoly::one(2)).unwrap();
        let f = a.pow(2).mul(&b).unwrap();
        let d = f.squarefree_decomposition().unwrap();
        assert_eq!(d.content, 1.into());
        assert_eq!(d.parts.len(), 2);
        assert_eq!(d.parts[0], (b, 1));
        assert_eq!(d.parts[1], (a, 2));
        assert_eq!(d.reconstruct(2), f);
    }

    #[test]
    fn squarefree_input_single_part() {
        let (s, t) = s_t();
        let f = s.mul(&t).unwrap().add(&MPoly::constant(2, 5)).unwrap();
        let d = f.squarefree_decomposition().unwrap();
        assert_eq!(d.parts.len(), 1);
        assert_eq!(d.parts[0], (f.clone(), 1));
    }

    #[test]
    fn constant_input_decomposes_to_content() {
        let f = MPoly::constant(2, -42);
        let d = f.squarefree_decomposition().unwrap();
        assert_eq!(d.content, (-42).into());
        assert!(d.parts.is_empty());
    }

    #[test]
    fn perfect_power_sixth_to_cube_root() {
        let (s, t) = s_t();
        let f = s.add(&t).unwrap().pow(6);
        let g = f.perfect_power_root(3).unwrap();
        assert_eq!(g, s.add(&t).unwrap().pow(2));
    }

    #[test]
    fn non_power_rejected() {
        let (s, _) = s_t();
        let f = s.add(&MPoly::one(2)).unwrap();
        assert!(f.perfect_power_root(2).is_none());
    }

    #[test]
    fn non_power_content_rejected() {
        // 64 * (S+T)^12: 64 is not a 12th power, so no 12th root exists.
        let (s, t) = s_t();
        let f = s.add(&t).unwrap().pow(12).mul_scalar(&64.into());
        assert!(f.perfect_power_root(12).is_none());
        assert!(f.perfect_power_root(6).is_some()); // 64 = 2^6
    }
}
