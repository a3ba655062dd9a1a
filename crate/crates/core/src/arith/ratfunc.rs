use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::poly::Poly;
use super::rational::Rational;
use crate::error::{Error, Result};

/// Reduced quotient `num/den` of polynomials in `u` with a monic denominator.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: Poly,
    den: Poly,
}

impl RationalFunction {
    pub fn zero() -> Self {
        RationalFunction { num: Poly::zero(), den: Poly::one() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        RationalFunction { num: Poly::constant(c), den: Poly::one() }
    }

    pub fn from_poly(p: Poly) -> Self {
        RationalFunction { num: p, den: Poly::one() }
    }

    /// `c / (u - a)`
    pub fn simple_pole(c: Rational, a: &Rational) -> Self {
        Self::new(Poly::constant(c), Poly::linear_root(a)).expect("nonzero denominator")
    }

    pub fn new(num: Poly, den: Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let g = Poly::gcd(&num, &den);
        let (num, den) = if g.degree() == Some(0) {
            (num, den)
        } else {
            (num.div_rem(&g)?.0, den.div_rem(&g)?.0)
        };
        let l = den.leading().recip()?;
        Ok(RationalFunction { num: num.scale(&l), den: den.scale(&l) })
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.den.degree() == Some(0) && self.num == Poly::one()
    }

    pub fn as_constant(&self) -> Option<Rational> {
        (self.den.degree() == Some(0) && self.num.degree().unwrap_or(0) == 0)
            .then(|| self.num.coeff(0))
    }

    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn checked_div(&self, o: &Self) -> Result<Self> {
        Ok(self * &o.recip()?)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        RationalFunction { num: self.num.scale(c), den: self.den.clone() }
    }

    /// Value at `u = x`; fails at a pole.
    pub fn eval(&self, x: &Rational) -> Result<Rational> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(&self.num.eval(x) * &d.recip()?)
    }

    /// `f(u + c)`
    pub fn substitute_shift(&self, c: &Rational) -> Self {
        Self::new(self.num.shift(c), self.den.shift(c)).expect("shift preserves nonzero")
    }

    /// `f(c u)` for nonzero `c`.
    pub fn substitute_scale(&self, c: &Rational) -> Result<Self> {
        if c.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Self::new(self.num.scale_var(c), self.den.scale_var(c))
    }

    /// Coefficients `c_0..=c_k` of the expansion `f = sum_r c_r u^{-r}`.
    /// Requires `deg num <= deg den`.
    pub fn expand_at_infinity(&self, k: usize) -> Result<Vec<Rational>> {
        let laurent = self.expand_laurent(k, 0)?;
        Ok(laurent)
    }

    /// Laurent coefficients of the powers `u^w, u^{w-1}, ..., u^{-k}`.
    /// Fails with [`Error::WindowViolation`] when `deg num > deg den + w`.
    pub fn expand_laurent(&self, k: usize, w: usize) -> Result<Vec<Rational>> {
        let dq = self.den.degree().expect("denominator is nonzero");
        let dp = match self.num.degree() {
            None => return Ok(vec![Rational::zero(); k + w + 1]),
            Some(d) => d,
        };
        if dp > dq + w {
            return Err(Error::WindowViolation { needed: dp - dq, allowed: w });
        }
        // In x = 1/u: u^{-w} f = (x^{dq+w} p(1/x)) / (x^{dq} q(1/x)).
        let len = k + w + 1;
        let top = dq + w;
        let a: Vec<Rational> =
            (0..len).map(|m| if m <= top { self.num.coeff(top - m) } else { Rational::zero() }).collect();
        let b: Vec<Rational> = (0..=dq).map(|m| self.den.coeff(dq - m)).collect();
        // b[0] is the leading coefficient of the monic denominator.
        let mut c = vec![Rational::zero(); len];
        for m in 0..len {
            let mut acc = a[m].clone();
            for j in 1..=m.min(dq) {
                acc -= &(&b[j] * &c[m - j]);
            }
            c[m] = acc;
        }
        Ok(c)
    }
}

impl Add for &RationalFunction {
    type Output = RationalFunction;
    fn add(self, o: &RationalFunction) -> RationalFunction {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        if self.den == o.den {
            return RationalFunction::new(&self.num + &o.num, self.den.clone()).expect("nonzero");
        }
        RationalFunction::new(&(&self.num * &o.den) + &(&o.num * &self.den), &self.den * &o.den)
            .expect("nonzero")
    }
}

impl Sub for &RationalFunction {
    type Output = RationalFunction;
    fn sub(self, o: &RationalFunction) -> RationalFunction {
        self + &(-o)
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction { num: -&self.num, den: self.den.clone() }
    }
}

impl Mul for &RationalFunction {
    type Output = RationalFunction;
    fn mul(self, o: &RationalFunction) -> RationalFunction {
        if self.is_zero() || o.is_zero() {
            return RationalFunction::zero();
        }
        if self.den.degree() == Some(0) && o.den.degree() == Some(0) {
            return RationalFunction { num: &self.num * &o.num, den: Poly::one() };
        }
        RationalFunction::new(&self.num * &o.num, &self.den * &o.den).expect("nonzero")
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.degree() == Some(0) {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn geometric_expansion() {
        // 1/(u - a) = sum_{r>=1} a^{r-1} u^{-r}
        let a = q(3, 2);
        let f = RationalFunction::simple_pole(Rational::one(), &a);
        let c = f.expand_at_infinity(5).unwrap();
        assert!(c[0].is_zero());
        for r in 1..=5 {
            assert_eq!(c[r], a.pow(r as u32 - 1));
        }
    }

    #[test]
    fn window_violation_reports_gap() {
        let f = RationalFunction::from_poly(Poly::x().pow(2));
        assert_eq!(
            f.expand_at_infinity(3),
            Err(Error::WindowViolation { needed: 2, allowed: 0 })
        );
        let c = f.expand_laurent(1, 2).unwrap();
        assert_eq!(c, vec![q(1, 1), q(0, 1), q(0, 1), q(0, 1)]);
    }

    #[test]
    fn canonical_form() {
        let x = Poly::x();
        let one = Poly::one();
        let f = RationalFunction::new(&x - &one, (&x - &one).scale(&q(2, 1)).pow(2)).unwrap();
        assert_eq!(f.den().leading(), Rational::one());
        assert_eq!(f.num().degree(), Some(0));
        assert_eq!(f.num().coeff(0), q(1, 4));
    }
}
