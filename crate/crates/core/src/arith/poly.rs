use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::rational::{binomial, Rational};
use crate::error::{Error, Result};

/// Univariate polynomial over Q, coefficients stored low degree first.
/// The zero polynomial has no coefficients; trailing zeros are never stored.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// The monomial `u`.
    pub fn x() -> Self {
        Self::from_coeffs(vec![Rational::zero(), Rational::one()])
    }

    /// `u - a`
    pub fn linear_root(a: &Rational) -> Self {
        Self::from_coeffs(vec![-a, Rational::one()])
    }

    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Poly { coeffs: self.coeffs.iter().map(|x| x * c).collect() }
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let l = self.leading().recip().expect("nonzero leading coefficient");
        self.scale(&l)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    pub fn div_rem(&self, d: &Poly) -> Result<(Poly, Poly)> {
        let dd = d.degree().ok_or(Error::DivisionByZero)?;
        let lead_inv = d.leading().recip()?;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Poly::zero(), self.clone()));
        }
        let mut quot = vec![Rational::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd] * &lead_inv;
            if !c.is_zero() {
                for (i, di) in d.coeffs.iter().enumerate() {
                    rem[k + i] -= &(&c * di);
                }
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        Ok((Poly::from_coeffs(quot), Poly::from_coeffs(rem)))
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd(a: &Poly, b: &Poly) -> Poly {
        let (mut a, mut b) = (a.clone(), b.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).expect("nonzero divisor").1;
            a = b;
            b = r.monic();
        }
        a.monic()
    }

    /// `p(u + c)`
    pub fn shift(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return self.clone();
        }
        let n = self.coeffs.len();
        let mut out = vec![Rational::zero(); n];
        let powers: Vec<Rational> = (0..n).map(|k| c.pow(k as u32)).collect();
        for (k, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, slot) in out.iter_mut().enumerate().take(k + 1) {
                let t = &(a * &binomial(k as u64, j as u64)) * &powers[k - j];
                *slot += &t;
            }
        }
        Poly::from_coeffs(out)
    }

    /// `p(c u)`
    pub fn scale_var(&self, c: &Rational) -> Poly {
        let mut pw = Rational::one();
        let mut out = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            out.push(a * &pw);
            pw = &pw * c;
        }
        Poly::from_coeffs(out)
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut acc = Poly::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, o: &Poly) -> Poly {
        let n = self.coeffs.len().max(o.coeffs.len());
        Poly::from_coeffs((0..n).map(|k| &self.coeff(k) + &o.coeff(k)).collect())
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, o: &Poly) -> Poly {
        let n = self.coeffs.len().max(o.coeffs.len());
        Poly::from_coeffs((0..n).map(|k| &self.coeff(k) - &o.coeff(k)).collect())
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, o: &Poly) -> Poly {
        if self.is_zero() || o.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] += &(a * b);
            }
        }
        Poly::from_coeffs(out)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})*u")?,
                _ => write!(f, "({c})*u^{k}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[i64]) -> Poly {
        Poly::from_coeffs(v.iter().map(|&x| Rational::from_int(x)).collect())
    }

    #[test]
    fn division_identity() {
        let a = p(&[1, -3, 0, 2, 5]);
        let b = p(&[2, 1, 1]);
        let (q, r) = a.div_rem(&b).unwrap();
        assert_eq!(&(&q * &b) + &r, a);
        assert!(r.degree().unwrap_or(0) < 2);
    }

    #[test]
    fn gcd_of_products() {
        let g = p(&[-1, 1]);
        let a = &g * &p(&[3, 0, 1]);
        let b = &g * &p(&[5, 7]);
        assert_eq!(Poly::gcd(&a, &b), g);
    }

    #[test]
    fn shift_and_scale() {
        let a = p(&[1, 2, 3]);
        let c = Rational::new(1, 2);
        let x = Rational::new(7, 3);
        assert_eq!(a.shift(&c).eval(&x), a.eval(&(&x + &c)));
        assert_eq!(a.scale_var(&c).eval(&x), a.eval(&(&x * &c)));
    }
}
