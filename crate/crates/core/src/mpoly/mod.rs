//! Sparse multivariate polynomials over Z with arbitrary-precision
//! coefficients.
//!
//! Terms are kept in a `BTreeMap` keyed by exponent vectors under the
//! graded lexicographic order, so every polynomial has a unique canonical
//! form and structural equality is mathematical equality. All arithmetic
//! is exact; coefficient growth is unbounded by design.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

mod gcd;
mod mason;
mod resultant;
mod sqf;

pub use mason::{mason_co_decompose, verify_mason_instance, MasonVerdict};
pub use sqf::SqfDecomp;

/// Exponent vector ordered by total degree first, then lexicographically.
/// This is the global monomial order used for leading terms, sign
/// normalization and serialization.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn total_degree(&self) -> u32 {
        self.0.iter().sum()
    }

    fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    fn div(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse multivariate polynomial with `BigInt` coefficients.
///
/// Invariants: no stored coefficient is zero (the zero polynomial has an
/// empty term map) and every exponent vector has length `nvars`.
#[derive(Clone, PartialEq, Eq)]
pub struct MPoly {
    nvars: usize,
    terms: BTreeMap<Monomial, BigInt>,
}

impl MPoly {
    pub fn zero(nvars: usize) -> Self {
        MPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: impl Into<BigInt>) -> Self {
        let c = c.into();
        let mut p = MPoly::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(Monomial(vec![0; nvars]), c);
        }
        p
    }

    pub fn one(nvars: usize) -> Self {
        MPoly::constant(nvars, 1)
    }

    /// The monomial `T_i`.
    pub fn var(nvars: usize, i: usize) -> Self {
        assert!(i < nvars);
        let mut e = vec![0u32; nvars];
        e[i] = 1;
        MPoly::from_term(nvars, e, BigInt::one())
    }

    pub fn from_term(nvars: usize, exps: Vec<u32>, coeff: impl Into<BigInt>) -> Self {
        assert_eq!(exps.len(), nvars);
        let c = coeff.into();
        let mut p = MPoly::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(Monomial(exps), c);
        }
        p
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Vec<u32>, BigInt)>) -> Self {
        let mut p = MPoly::zero(nvars);
        for (e, c) in terms {
            assert_eq!(e.len(), nvars);
            p.add_term(Monomial(e), c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.total_degree() == 0)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Constant value; zero polynomial gives 0. None if nonconstant.
    pub fn as_constant(&self) -> Option<BigInt> {
        if self.is_zero() {
            return Some(BigInt::zero());
        }
        if self.is_constant() {
            return self.terms.values().next().cloned();
        }
        None
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|m| m.total_degree()).max().unwrap_or(0)
    }

    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms.keys().map(|m| m.0[var]).max().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    /// Terms in descending graded-lex order (leading term first).
    pub fn terms_desc(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter().rev()
    }

    /// Leading term under the global order.
    pub fn leading(&self) -> Option<(&Monomial, &BigInt)> {
        self.terms.iter().next_back()
    }

    pub fn leading_coeff(&self) -> BigInt {
        self.leading().map(|(_, c)| c.clone()).unwrap_or_else(BigInt::zero)
    }

    fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    fn check_nvars(&self, other: &MPoly) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::NVarsMismatch(self.nvars, other.nvars));
        }
        Ok(())
    }

    pub fn add(&self, other: &MPoly) -> Result<MPoly> {
        self.check_nvars(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &MPoly) -> Result<MPoly> {
        self.check_nvars(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn neg(&self) -> MPoly {
        let mut out = MPoly::zero(self.nvars);
        for (m, c) in &self.terms {
            out.terms.insert(m.clone(), -c.clone());
        }
        out
    }

    pub fn mul(&self, other: &MPoly) -> Result<MPoly> {
        self.check_nvars(other)?;
        let mut out = MPoly::zero(self.nvars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        Ok(out)
    }

    pub fn mul_scalar(&self, c: &BigInt) -> MPoly {
        if c.is_zero() {
            return MPoly::zero(self.nvars);
        }
        let mut out = MPoly::zero(self.nvars);
        for (m, a) in &self.terms {
            out.terms.insert(m.clone(), a * c);
        }
        out
    }

    pub fn pow(&self, e: u32) -> MPoly {
        let mut acc = MPoly::one(self.nvars);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).expect("same nvars");
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base).expect("same nvars");
            }
        }
        acc
    }

    /// Exact evaluation at a rational point.
    pub fn evaluate(&self, point: &[BigRational]) -> Result<BigRational> {
        if point.len() != self.nvars {
            return Err(Error::NVarsMismatch(self.nvars, point.len()));
        }
        let mut acc = BigRational::zero();
        for (m, c) in &self.terms {
            let mut t = BigRational::from(c.clone());
            for (v, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    t *= pow_rational(&point[v], e);
                }
            }
            acc += t;
        }
        Ok(acc)
    }

    /// Exact evaluation at an integer point.
    pub fn eval_int(&self, point: &[BigInt]) -> Result<BigInt> {
        if point.len() != self.nvars {
            return Err(Error::NVarsMismatch(self.nvars, point.len()));
        }
        let mut acc = BigInt::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (v, &e) in m.0.iter().enumerate() {
                for _ in 0..e {
                    t *= &point[v];
                }
            }
            acc += t;
        }
        Ok(acc)
    }

    /// Evaluation at an i64 point in i128, `None` on overflow.
    pub fn eval_i128(&self, point: &[i64]) -> Option<i128> {
        debug_assert_eq!(point.len(), self.nvars);
        let mut acc: i128 = 0;
        for (m, c) in &self.terms {
            let c: i128 = i128::try_from(c).ok()?;
            let mut t = c;
            for (v, &e) in m.0.iter().enumerate() {
                for _ in 0..e {
                    t = t.checked_mul(point[v] as i128)?;
                }
            }
            acc = acc.checked_add(t)?;
        }
        Some(acc)
    }

    /// Positive gcd of all coefficients; 0 for the zero polynomial.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in self.terms.values() {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// `self / content`, carrying the sign of `self`.
    pub fn primitive_part(&self) -> Result<MPoly> {
        if self.is_zero() {
            return Err(Error::ZeroInput("primitive_part"));
        }
        let c = self.content();
        Ok(self.div_scalar_exact(&c).expect("content divides"))
    }

    /// Flip sign so the leading coefficient is positive.
    pub fn with_positive_lc(&self) -> MPoly {
        if self.leading_coeff().is_negative() {
            self.neg()
        } else {
            self.clone()
        }
    }

    pub fn div_scalar_exact(&self, c: &BigInt) -> Option<MPoly> {
        if c.is_zero() {
            return None;
        }
        let mut out = MPoly::zero(self.nvars);
        for (m, a) in &self.terms {
            let (q, r) = a.div_rem(c);
            if !r.is_zero() {
                return None;
            }
            out.terms.insert(m.clone(), q);
        }
        Some(out)
    }

    /// Exact polynomial division: `Some(q)` with `q * d == self` when `d`
    /// divides `self`, else `None`. Leading-term cancellation under the
    /// graded-lex order; terminates because the leading monomial of the
    /// remainder strictly decreases.
    pub fn div_exact(&self, d: &MPoly) -> Option<MPoly> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(MPoly::zero(self.nvars));
        }
        if self.nvars != d.nvars {
            return None;
        }
        let (dm, dc) = d.leading().expect("nonzero");
        let dm = dm.clone();
        let dc = dc.clone();
        let mut r = self.clone();
        let mut q = MPoly::zero(self.nvars);
        while let Some((rm, rc)) = r.leading().map(|(m, c)| (m.clone(), c.clone())) {
            if !dm.divides(&rm) {
                return None;
            }
            let (qc, rem) = rc.div_rem(&dc);
            if !rem.is_zero() {
                return None;
            }
            let qm = rm.div(&dm);
            let t = MPoly::from_term(self.nvars, qm.0.clone(), qc);
            q.add_term(qm, t.leading_coeff());
            r = r.sub(&t.mul(d).expect("same nvars")).expect("same nvars");
        }
        Some(q)
    }

    pub fn derivative(&self, var: usize) -> MPoly {
        let mut out = MPoly::zero(self.nvars);
        for (m, c) in &self.terms {
            let e = m.0[var];
            if e > 0 {
                let mut me = m.0.clone();
                me[var] = e - 1;
                out.add_term(Monomial(me), c * BigInt::from(e));
            }
        }
        out
    }

    /// Coefficient of `var^k` as a polynomial in the same variable set
    /// (with the `var` exponent zeroed).
    pub fn coeff_of(&self, var: usize, k: u32) -> MPoly {
        let mut out = MPoly::zero(self.nvars);
        for (m, c) in &self.terms {
            if m.0[var] == k {
                let mut me = m.0.clone();
                me[var] = 0;
                out.terms.insert(Monomial(me), c.clone());
            }
        }
        out
    }

    /// Leading coefficient with respect to a single variable, as a
    /// polynomial in the remaining ones.
    pub fn leading_coeff_in(&self, var: usize) -> MPoly {
        self.coeff_of(var, self.degree_in(var))
    }

    /// Multiply by `var^k`.
    pub fn shift_var(&self, var: usize, k: u32) -> MPoly {
        let mut out = MPoly::zero(self.nvars);
        for (m, c) in &self.terms {
            let mut me = m.0.clone();
            me[var] += k;
            out.terms.insert(Monomial(me), c.clone());
        }
        out
    }

    /// Homogenize to total degree `target` by inserting a fresh variable at
    /// `new_var_index`; each monomial is padded with the new variable raised
    /// to the co-degree. Evaluating the result at 1 in the new variable
    /// recovers the input.
    pub fn homogenize(&self, target: u32, new_var_index: usize) -> Result<MPoly> {
        if self.total_degree() > target {
            return Err(Error::Precondition(format!(
                "homogenize: target degree {} below total degree {}",
                target,
                self.total_degree()
            )));
        }
        assert!(new_var_index <= self.nvars);
        let mut out = MPoly::zero(self.nvars + 1);
        for (m, c) in &self.terms {
            let mut e = Vec::with_capacity(self.nvars + 1);
            e.extend_from_slice(&m.0[..new_var_index]);
            e.push(target - m.total_degree());
            e.extend_from_slice(&m.0[new_var_index..]);
            out.terms.insert(Monomial(e), c.clone());
        }
        Ok(out)
    }

    /// Substitute 1 for variable `var` and drop it.
    pub fn dehomogenize(&self, var: usize) -> MPoly {
        let mut out = MPoly::zero(self.nvars - 1);
        for (m, c) in &self.terms {
            let mut e = m.0.clone();
            e.remove(var);
            out.add_term(Monomial(e), c.clone());
        }
        out
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|m| m.total_degree());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    /// Sum of absolute values of the coefficients.
    pub fn coeff_mass(&self) -> BigInt {
        self.terms.values().map(|c| c.abs()).sum()
    }

    /// Largest absolute coefficient.
    pub fn height_norm(&self) -> BigInt {
        self.terms.values().map(|c| c.abs()).max().unwrap_or_else(BigInt::zero)
    }
}

pub(crate) fn pow_rational(x: &BigRational, e: u32) -> BigRational {
    let mut acc = BigRational::one();
    let mut base = x.clone();
    let mut e = e;
    while e > 0 {
        if e & 1 == 1 {
            acc *= &base;
        }
        e >>= 1;
        if e > 0 {
            base = base.clone() * &base;
        }
    }
    acc
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms_desc() {
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let ac = c.abs();
            let has_vars = m.total_degree() > 0;
            if !ac.is_one() || !has_vars {
                write!(f, "{}", ac)?;
                if has_vars {
                    write!(f, "*")?;
                }
            }
            let mut sep = "";
            for (v, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    write!(f, "{}T{}", sep, v + 1)?;
                    if e > 1 {
                        write!(f, "^{}", e)?;
                    }
                    sep = "*";
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
