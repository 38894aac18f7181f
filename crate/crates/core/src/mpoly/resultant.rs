//! Resultants and discriminants with respect to one variable, computed as
//! Sylvester-matrix determinants by fraction-free Bareiss elimination over
//! the polynomial ring.

use super::MPoly;
use crate::error::{Error, Result};

impl MPoly {
    /// Resultant of `self` and `other` with respect to `var`. Both inputs
    /// must have positive degree in `var`.
    pub fn resultant_wrt(&self, other: &MPoly, var: usize) -> Result<MPoly> {
        self.check_nvars(other)?;
        let m = self.degree_in(var);
        let n = other.degree_in(var);
        if m == 0 || n == 0 {
            return Err(Error::Precondition(
                "resultant_wrt: both operands must have positive degree in the variable".into(),
            ));
        }
        let nvars = self.nvars();
        let size = (m + n) as usize;
        // Row i (0 <= i < n): coefficients of x^(m+n-1-i-j) of self.
        let a_coeffs: Vec<MPoly> = (0..=m).rev().map(|k| self.coeff_of(var, k)).collect();
        let b_coeffs: Vec<MPoly> = (0..=n).rev().map(|k| other.coeff_of(var, k)).collect();
        let mut mat = vec![vec![MPoly::zero(nvars); size]; size];
        for i in 0..n as usize {
            for (j, c) in a_coeffs.iter().enumerate() {
                mat[i][i + j] = c.clone();
            }
        }
        for i in 0..m as usize {
            for (j, c) in b_coeffs.iter().enumerate() {
                mat[n as usize + i][i + j] = c.clone();
            }
        }
        bareiss_det(mat)
    }

    /// Discriminant with respect to `var`, via the resultant with the
    /// partial derivative and the usual leading-coefficient normalization:
    /// `disc = (-1)^(d(d-1)/2) * Res(f, f') / lc_var(f)`.
    pub fn discriminant_wrt(&self, var: usize) -> Result<MPoly> {
        let d = self.degree_in(var);
        if d < 2 {
            return Err(Error::Precondition(
                "discriminant_wrt: degree in the variable must be at least 2".into(),
            ));
        }
        let deriv = self.derivative(var);
        let res = self.resultant_wrt(&deriv, var)?;
        let lc = self.leading_coeff_in(var);
        let q = res.div_exact(&lc).expect("leading coefficient divides Res(f, f')");
        Ok(if (d as u64) * (d as u64 - 1) / 2 % 2 == 1 { q.neg() } else { q })
    }
}

/// Fraction-free determinant; exact divisions stay in the ring.
fn bareiss_det(mut m: Vec<Vec<MPoly>>) -> Result<MPoly> {
    let n = m.len();
    if n == 0 {
        return Ok(MPoly::one(0));
    }
    let nvars = m[0][0].nvars();
    let mut sign = false;
    let mut prev = MPoly::one(nvars);
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    sign = !sign;
                }
                None => return Ok(MPoly::zero(nvars)),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = m[i][j]
                    .mul(&m[k][k])
                    .expect("same nvars")
                    .sub(&m[i][k].mul(&m[k][j]).expect("same nvars"))
                    .expect("same nvars");
                m[i][j] = t.div_exact(&prev).expect("Bareiss division is exact");
            }
            m[i][k] = MPoly::zero(nvars);
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    Ok(if sign { det.neg() } else { det })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    #[test]
    fn resultant_monic_linear_substitution() {
        // Res_{T2}(T2^2 - T1, T2 - 1) = 1 - T1
        let t1 = MPoly::var(2, 0);
        let t2 = MPoly::var(2, 1);
        let f = t2.pow(2).sub(&t1).unwrap();
        let g = t2.sub(&MPoly::one(2)).unwrap();
        let r = f.resultant_wrt(&g, 1).unwrap();
        let expected = MPoly::one(2).sub(&t1).unwrap();
        assert_eq!(r, expected);
    }

    #[test]
    fn discriminant_of_quadratic() {
        // disc_T(T^2 + bT + c) = b^2 - 4c with vars (b, c, T)
        let b = MPoly::var(3, 0);
        let c = MPoly::var(3, 1);
        let t = MPoly::var(3, 2);
        let f = t.pow(2).add(&b.mul(&t).unwrap()).unwrap().add(&c).unwrap();
        let d = f.discriminant_wrt(2).unwrap();
        let expected = b.pow(2).sub(&c.mul_scalar(&BigInt::from(4))).unwrap();
        assert_eq!(d, expected);
    }

    #[test]
    fn discriminant_vanishes_on_repeated_factor() {
        // (T1 - 3)^2 * (T1 + 1) has zero discriminant in T1.
        let t1 = MPoly::var(1, 0);
        let f = t1
            .sub(&MPoly::constant(1, 3))
            .unwrap()
            .pow(2)
            .mul(&t1.add(&MPoly::one(1)).unwrap())
            .unwrap();
        let d = f.discriminant_wrt(0).unwrap();
        assert!(d.is_zero());
    }

    #[test]
    fn resultant_detects_common_factor() {
        let t1 = MPoly::var(1, 0);
        let common = t1.sub(&MPoly::constant(1, 2)).unwrap();
        let f = common.mul(&t1.add(&MPoly::one(1)).unwrap()).unwrap();
        let g = common.mul(&t1.sub(&MPoly::constant(1, 5)).unwrap()).unwrap();
        assert!(f.resultant_wrt(&g, 0).unwrap().is_zero());
    }
}
