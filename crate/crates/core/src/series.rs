//! Truncated series in `u^{-1}` and bivariate series in `u^{-1}, v^{-1}`.
//!
//! A [`USeries`] stores the coefficients of `u^0 .. u^{-K}`; everything it
//! computes is exact modulo `u^{-K-1}`. A [`BiSeries`] records which
//! coefficients are known through a [`Window`], so that relation checks
//! compare exactly the coefficients the inputs determine.

use std::collections::BTreeMap;

use crate::arith::{binomial, Rational, RationalFunction};
use crate::error::{Error, Result};
use crate::ring::{mat_identity, MatrixRing, RationalFunctionField, Ring, RingMatrix};

/// `sum_{r=0}^{K} c_r u^{-r}`.
#[derive(Clone, Debug, PartialEq)]
pub struct USeries<E> {
    pub coeffs: Vec<E>,
}

impl<E: Clone> USeries<E> {
    pub fn new(coeffs: Vec<E>) -> Self {
        assert!(!coeffs.is_empty(), "a series keeps at least its constant term");
        USeries { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, r: usize) -> &E {
        &self.coeffs[r]
    }

    pub fn truncate(&self, k: usize) -> Self {
        USeries { coeffs: self.coeffs[..=k.min(self.order())].to_vec() }
    }

    /// Drop the `u^{-1}` coefficient; `u` times the result is
    /// `sum_{r >= 1} c_{r+1} u^{-r}`, known to one order less.
    pub fn tail(&self, zero: &E) -> Self {
        let mut c = self.coeffs.clone();
        if c.len() > 1 {
            c[1] = zero.clone();
        }
        USeries { coeffs: c }
    }
}

/// Rings of functions of `u` closed under shifts and rescalings of `u`.
pub trait FunctionRing: Ring {
    /// `X(u + c)`.
    fn shifted(&self, x: &Self::Elem, c: &Rational) -> Self::Elem;
    /// `X(c u)` for `c != 0`.
    fn scaled(&self, x: &Self::Elem, c: &Rational) -> Result<Self::Elem>;
}

/// Series over a coefficient ring, truncated at `order`.
#[derive(Clone, Debug)]
pub struct SeriesRing<R> {
    pub base: R,
    pub order: usize,
}

impl<R: Ring> SeriesRing<R> {
    pub fn new(base: R, order: usize) -> Self {
        SeriesRing { base, order }
    }

    pub fn constant(&self, c: R::Elem) -> USeries<R::Elem> {
        let mut v = vec![self.base.zero(); self.order + 1];
        v[0] = c;
        USeries::new(v)
    }

    /// `c0 + sum_r coeffs[r-1] u^{-r}`, padded with zeros up to the order.
    pub fn from_tail(&self, c0: R::Elem, coeffs: impl IntoIterator<Item = R::Elem>) -> USeries<R::Elem> {
        let mut v = vec![c0];
        v.extend(coeffs.into_iter().take(self.order));
        while v.len() <= self.order {
            v.push(self.base.zero());
        }
        USeries::new(v)
    }

    /// Series with `x` as the coefficient of `u^{-r}` and zero elsewhere.
    pub fn monomial(&self, x: R::Elem, r: usize) -> USeries<R::Elem> {
        let mut v = vec![self.base.zero(); self.order + 1];
        if r <= self.order {
            v[r] = x;
        }
        USeries::new(v)
    }

    fn zip(&self, a: &USeries<R::Elem>, b: &USeries<R::Elem>, f: impl Fn(&R::Elem, &R::Elem) -> R::Elem) -> USeries<R::Elem> {
        let k = a.order().min(b.order());
        USeries::new((0..=k).map(|r| f(&a.coeffs[r], &b.coeffs[r])).collect())
    }

    /// Coefficient-wise map.
    pub fn map(&self, a: &USeries<R::Elem>, f: impl Fn(&R::Elem) -> R::Elem) -> USeries<R::Elem> {
        USeries::new(a.coeffs.iter().map(f).collect())
    }

    /// Index of the first nonzero coefficient.
    pub fn first_nonzero(&self, a: &USeries<R::Elem>) -> Option<usize> {
        a.coeffs.iter().position(|x| !self.base.is_zero(x))
    }

    /// Describe `a` by its first nonzero coefficient.
    pub fn witness(&self, a: &USeries<R::Elem>) -> Option<String> {
        self.first_nonzero(a).map(|r| format!("coefficient of u^-{r}: {}", self.base.describe(&a.coeffs[r])))
    }

    /// Inverse of a matrix of series whose constant term is invertible:
    /// recast as a series of matrices and invert that.
    pub fn invert_series_matrix(&self, m: &RingMatrix<USeries<R::Elem>>) -> Result<RingMatrix<USeries<R::Elem>>>
    where
        R: Clone,
    {
        let (rows, cols) = (m.rows(), m.cols());
        if rows != cols {
            return Err(Error::DimensionMismatch(format!("{rows}x{cols} is not square")));
        }
        let k = m.entries().iter().map(|s| s.order()).min().unwrap_or(self.order);
        let coeff_mat = |r: usize| RingMatrix::from_fn(rows, cols, |i, j| m.get(i, j).coeffs[r].clone());
        let mats = MatrixRing::new(self.base.clone(), rows);
        let c0_inv = self.base.invert_matrix(&coeff_mat(0))?;
        let a: Vec<_> = (0..=k).map(coeff_mat).collect();
        let b = series_inverse_coeffs(&mats, &a, &c0_inv);
        Ok(RingMatrix::from_fn(rows, cols, |i, j| USeries::new(b.iter().map(|x| x.get(i, j).clone()).collect())))
    }
}

/// `b_0 = a_0^{-1}`, `b_m = -a_0^{-1} sum_{j=1}^{m} a_j b_{m-j}`: the
/// truncated geometric (Neumann) series for `(a_0 (1 + a_0^{-1} a'))^{-1}`
/// collected order by order.
fn series_inverse_coeffs<R: Ring>(ring: &R, a: &[R::Elem], a0_inv: &R::Elem) -> Vec<R::Elem> {
    let mut b: Vec<R::Elem> = vec![a0_inv.clone()];
    for m in 1..a.len() {
        let mut acc = ring.zero();
        for j in 1..=m {
            if ring.is_zero(&a[j]) || ring.is_zero(&b[m - j]) {
                continue;
            }
            ring.add_assign(&mut acc, &ring.mul(&a[j], &b[m - j]));
        }
        b.push(ring.neg(&ring.mul(a0_inv, &acc)));
    }
    b
}

impl<R: Ring + Clone> Ring for SeriesRing<R> {
    type Elem = USeries<R::Elem>;

    fn zero(&self) -> Self::Elem {
        USeries::new(vec![self.base.zero(); self.order + 1])
    }
    fn one(&self) -> Self::Elem {
        self.constant(self.base.one())
    }
    fn from_rational(&self, c: &Rational) -> Self::Elem {
        self.constant(self.base.from_rational(c))
    }
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.zip(a, b, |x, y| self.base.add(x, y))
    }
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.zip(a, b, |x, y| self.base.sub(x, y))
    }
    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        self.map(a, |x| self.base.neg(x))
    }
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let k = a.order().min(b.order());
        let mut out = vec![self.base.zero(); k + 1];
        for (p, x) in a.coeffs.iter().enumerate().take(k + 1) {
            if self.base.is_zero(x) {
                continue;
            }
            for (q, y) in b.coeffs.iter().enumerate().take(k + 1 - p) {
                if self.base.is_zero(y) {
                    continue;
                }
                self.base.add_assign(&mut out[p + q], &self.base.mul(x, y));
            }
        }
        USeries::new(out)
    }
    fn scale(&self, a: &Self::Elem, c: &Rational) -> Self::Elem {
        self.map(a, |x| self.base.scale(x, c))
    }
    fn is_zero(&self, a: &Self::Elem) -> bool {
        a.coeffs.iter().all(|x| self.base.is_zero(x))
    }
    fn try_inverse(&self, a: &Self::Elem) -> Result<Self::Elem> {
        let a0_inv = self
            .base
            .try_inverse(&a.coeffs[0])
            .map_err(|_| Error::NotInvertible("series with a non-invertible constant term".into()))?;
        Ok(USeries::new(series_inverse_coeffs(&self.base, &a.coeffs, &a0_inv)))
    }
    fn invert_matrix(&self, m: &RingMatrix<Self::Elem>) -> Result<RingMatrix<Self::Elem>> {
        if m.rows() == 0 {
            return Ok(mat_identity(self, 0));
        }
        self.invert_series_matrix(m)
    }
    fn describe(&self, a: &Self::Elem) -> String {
        self.witness(a).unwrap_or_else(|| "0".into())
    }
}

impl<R: Ring + Clone> FunctionRing for SeriesRing<R> {
    /// `u^{-a} -> sum_m binom(a-1+m, m) (-c)^m u^{-a-m}`.
    fn shifted(&self, x: &Self::Elem, c: &Rational) -> Self::Elem {
        if c.is_zero() {
            return x.clone();
        }
        let k = x.order();
        let mc = -c;
        let mut out = vec![self.base.zero(); k + 1];
        out[0] = x.coeffs[0].clone();
        for a in 1..=k {
            if self.base.is_zero(&x.coeffs[a]) {
                continue;
            }
            for m in 0..=(k - a) {
                let f = &binomial((a - 1 + m) as u64, m as u64) * &mc.pow(m as u32);
                self.base.add_assign(&mut out[a + m], &self.base.scale(&x.coeffs[a], &f));
            }
        }
        USeries::new(out)
    }

    fn scaled(&self, x: &Self::Elem, c: &Rational) -> Result<Self::Elem> {
        let ci = c.recip()?;
        Ok(USeries::new(x.coeffs.iter().enumerate().map(|(a, e)| self.base.scale(e, &ci.pow(a as u32))).collect()))
    }
}

impl FunctionRing for RationalFunctionField {
    fn shifted(&self, x: &RationalFunction, c: &Rational) -> RationalFunction {
        x.substitute_shift(c)
    }
    fn scaled(&self, x: &RationalFunction, c: &Rational) -> Result<RationalFunction> {
        x.substitute_scale(c)
    }
}

/// Matrix-valued rational functions, entrywise substitution.
impl<R: FunctionRing> FunctionRing for MatrixRing<R> {
    fn shifted(&self, x: &Self::Elem, c: &Rational) -> Self::Elem {
        x.map(|e| self.base.shifted(e, c))
    }
    fn scaled(&self, x: &Self::Elem, c: &Rational) -> Result<Self::Elem> {
        let entries: Result<Vec<_>> = x.entries().iter().map(|e| self.base.scaled(e, c)).collect();
        let entries = entries?;
        Ok(RingMatrix::from_fn(x.rows(), x.cols(), |i, j| entries[i * x.cols() + j].clone()))
    }
}

/// Effectively unbounded.
pub const UNBOUNDED: i32 = i32::MAX / 4;

/// Coefficients `u^{-a} v^{-b}` with `a <= a_max`, `b <= b_max` and
/// `a + b <= s_max` are known exactly. `a_min`, `b_min` bound the exponents
/// that can occur at all.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Window {
    pub a_min: i32,
    pub b_min: i32,
    pub a_max: i32,
    pub b_max: i32,
    pub s_max: i32,
}

impl Window {
    pub fn contains(&self, a: i32, b: i32) -> bool {
        a <= self.a_max && b <= self.b_max && a + b <= self.s_max
    }

    fn meet(&self, o: &Window) -> Window {
        Window {
            a_min: self.a_min.min(o.a_min),
            b_min: self.b_min.min(o.b_min),
            a_max: self.a_max.min(o.a_max),
            b_max: self.b_max.min(o.b_max),
            s_max: self.s_max.min(o.s_max),
        }
    }

    fn product(&self, o: &Window) -> Window {
        let add = |x: i32, y: i32| x.saturating_add(y).min(UNBOUNDED);
        Window {
            a_min: self.a_min + o.a_min,
            b_min: self.b_min + o.b_min,
            a_max: add(self.a_max, o.a_min).min(add(o.a_max, self.a_min)),
            b_max: add(self.b_max, o.b_min).min(add(o.b_max, self.b_min)),
            s_max: add(self.s_max, o.a_min + o.b_min).min(add(o.s_max, self.a_min + self.b_min)),
        }
    }

    pub fn describe(&self) -> String {
        let show = |x: i32| if x >= UNBOUNDED { "inf".to_string() } else { x.to_string() };
        format!("a<={}, b<={}, a+b<={}", show(self.a_max), show(self.b_max), show(self.s_max))
    }
}

/// `sum_{a,b} c_ab u^{-a} v^{-b}` with a validity window.
#[derive(Clone, Debug, PartialEq)]
pub struct BiSeries<E> {
    terms: BTreeMap<(i32, i32), E>,
    pub window: Window,
}

impl<E> BiSeries<E> {
    pub fn terms(&self) -> impl Iterator<Item = (&(i32, i32), &E)> {
        self.terms.iter()
    }

    pub fn get(&self, a: i32, b: i32) -> Option<&E> {
        self.terms.get(&(a, b))
    }
}

/// Bivariate series operations over a coefficient ring.
pub struct BiRing<'a, R> {
    pub base: &'a R,
}

impl<'a, R: Ring> BiRing<'a, R> {
    pub fn new(base: &'a R) -> Self {
        BiRing { base }
    }

    fn build(&self, window: Window, entries: impl IntoIterator<Item = ((i32, i32), R::Elem)>) -> BiSeries<R::Elem> {
        let mut terms = BTreeMap::new();
        for (k, x) in entries {
            if window.contains(k.0, k.1) && !self.base.is_zero(&x) {
                terms.insert(k, x);
            }
        }
        BiSeries { terms, window }
    }

    pub fn zero(&self) -> BiSeries<R::Elem> {
        let w = Window { a_min: 0, b_min: 0, a_max: UNBOUNDED, b_max: UNBOUNDED, s_max: UNBOUNDED };
        BiSeries { terms: BTreeMap::new(), window: w }
    }

    /// `X(u)`.
    pub fn in_u(&self, x: &USeries<R::Elem>) -> BiSeries<R::Elem> {
        let w = Window { a_min: 0, b_min: 0, a_max: x.order() as i32, b_max: UNBOUNDED, s_max: UNBOUNDED };
        self.build(w, x.coeffs.iter().enumerate().map(|(a, e)| ((a as i32, 0), e.clone())))
    }

    /// `X(v)`.
    pub fn in_v(&self, x: &USeries<R::Elem>) -> BiSeries<R::Elem> {
        let w = Window { a_min: 0, b_min: 0, a_max: UNBOUNDED, b_max: x.order() as i32, s_max: UNBOUNDED };
        self.build(w, x.coeffs.iter().enumerate().map(|(b, e)| ((0, b as i32), e.clone())))
    }

    /// `u X(u)` for a series without constant or `u^{-1}` term, such as a tail series.
    pub fn u_times_tail(&self, x: &USeries<R::Elem>) -> BiSeries<R::Elem> {
        let s = self.in_u(x);
        self.shift_exponents(&s, -1, 0)
    }

    /// `v X(v)` for a tail series.
    pub fn v_times_tail(&self, x: &USeries<R::Elem>) -> BiSeries<R::Elem> {
        let s = self.in_v(x);
        self.shift_exponents(&s, 0, -1)
    }

    /// Multiply by `u^{-da} v^{-db}`.
    pub fn shift_exponents(&self, x: &BiSeries<R::Elem>, da: i32, db: i32) -> BiSeries<R::Elem> {
        let bump = |m: i32, d: i32| if m >= UNBOUNDED { m } else { m + d };
        let w = x.window;
        let window = Window {
            a_min: w.a_min + da,
            b_min: w.b_min + db,
            a_max: bump(w.a_max, da),
            b_max: bump(w.b_max, db),
            s_max: bump(w.s_max, da + db),
        };
        self.build(window, x.terms.iter().map(|(&(a, b), e)| ((a + da, b + db), e.clone())))
    }

    /// The divided difference `(X(u) - X(v)) / (u - v)`, i.e.
    /// `-sum_{a,b >= 1} X^(a+b-1) u^{-a} v^{-b}`.
    pub fn divided_difference(&self, x: &USeries<R::Elem>) -> BiSeries<R::Elem> {
        let k = x.order() as i32;
        let w = Window { a_min: 1, b_min: 1, a_max: UNBOUNDED, b_max: UNBOUNDED, s_max: k + 1 };
        let mut entries = Vec::new();
        for s in 2..=k + 1 {
            let c = &x.coeffs[(s - 1) as usize];
            if self.base.is_zero(c) {
                continue;
            }
            let nc = self.base.neg(c);
            for a in 1..s {
                entries.push(((a, s - a), nc.clone()));
            }
        }
        self.build(w, entries)
    }

    /// `(X(u + c) - X(v)) / (u + c - v)`.
    pub fn shifted_divided_difference(&self, x: &USeries<R::Elem>, c: &Rational) -> Result<BiSeries<R::Elem>> {
        self.shift_u(&self.divided_difference(x), c)
    }

    /// Substitute `u -> u + c`; needs all `u`-exponents non-negative.
    pub fn shift_u(&self, x: &BiSeries<R::Elem>, c: &Rational) -> Result<BiSeries<R::Elem>> {
        if c.is_zero() {
            return Ok(x.clone());
        }
        if x.window.a_min < 0 {
            return Err(Error::WindowViolation { needed: (-x.window.a_min) as usize, allowed: 0 });
        }
        let w = x.window;
        if w.a_max >= UNBOUNDED && w.s_max >= UNBOUNDED {
            return Err(Error::WindowViolation { needed: UNBOUNDED as usize, allowed: w.a_max as usize });
        }
        let mc = -c;
        let mut acc: BTreeMap<(i32, i32), R::Elem> = BTreeMap::new();
        for (&(a, b), e) in &x.terms {
            if a == 0 {
                push(self.base, &mut acc, (0, b), e.clone());
                continue;
            }
            let mut m = 0;
            while w.contains(a + m, b) {
                let f = &binomial((a - 1 + m) as u64, m as u64) * &mc.pow(m as u32);
                push(self.base, &mut acc, (a + m, b), self.base.scale(e, &f));
                m += 1;
            }
        }
        Ok(self.build(w, acc))
    }

    pub fn add(&self, x: &BiSeries<R::Elem>, y: &BiSeries<R::Elem>) -> BiSeries<R::Elem> {
        let w = x.window.meet(&y.window);
        let mut acc = x.terms.clone();
        for (k, e) in &y.terms {
            push(self.base, &mut acc, *k, e.clone());
        }
        self.build(w, acc)
    }

    pub fn neg(&self, x: &BiSeries<R::Elem>) -> BiSeries<R::Elem> {
        self.build(x.window, x.terms.iter().map(|(k, e)| (*k, self.base.neg(e))))
    }

    pub fn sub(&self, x: &BiSeries<R::Elem>, y: &BiSeries<R::Elem>) -> BiSeries<R::Elem> {
        self.add(x, &self.neg(y))
    }

    pub fn scale(&self, x: &BiSeries<R::Elem>, c: &Rational) -> BiSeries<R::Elem> {
        self.build(x.window, x.terms.iter().map(|(k, e)| (*k, self.base.scale(e, c))))
    }

    pub fn mul(&self, x: &BiSeries<R::Elem>, y: &BiSeries<R::Elem>) -> BiSeries<R::Elem> {
        let w = x.window.product(&y.window);
        let mut acc: BTreeMap<(i32, i32), R::Elem> = BTreeMap::new();
        for (&(a1, b1), e1) in &x.terms {
            for (&(a2, b2), e2) in &y.terms {
                let (a, b) = (a1 + a2, b1 + b2);
                if !w.contains(a, b) {
                    continue;
                }
                push(self.base, &mut acc, (a, b), self.base.mul(e1, e2));
            }
        }
        self.build(w, acc)
    }

    /// `xy - yx`.
    pub fn commutator(&self, x: &BiSeries<R::Elem>, y: &BiSeries<R::Elem>) -> BiSeries<R::Elem> {
        self.sub(&self.mul(x, y), &self.mul(y, x))
    }

    /// `xy + yx`.
    pub fn anticommutator(&self, x: &BiSeries<R::Elem>, y: &BiSeries<R::Elem>) -> BiSeries<R::Elem> {
        self.add(&self.mul(x, y), &self.mul(y, x))
    }

    /// First coefficient (in exponent order) that is nonzero.
    pub fn first_nonzero<'b>(&self, x: &'b BiSeries<R::Elem>) -> Option<((i32, i32), &'b R::Elem)> {
        x.terms.iter().find(|(_, e)| !self.base.is_zero(e)).map(|(k, e)| (*k, e))
    }

    /// Number of known coefficients with both exponents positive, capped by `cap`.
    pub fn checked_count(&self, w: &Window, cap: i32) -> usize {
        let mut n = 0;
        for a in 1..=cap {
            for b in 1..=cap {
                if w.contains(a, b) {
                    n += 1;
                }
            }
        }
        n
    }
}

fn push<R: Ring>(ring: &R, acc: &mut BTreeMap<(i32, i32), R::Elem>, k: (i32, i32), e: R::Elem) {
    match acc.get_mut(&k) {
        Some(x) => ring.add_assign(x, &e),
        None => {
            acc.insert(k, e);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::RationalField;

    fn q(n: i64) -> Rational {
        Rational::from_int(n)
    }

    #[test]
    fn inverse_of_geometric_series() {
        let s = SeriesRing::new(RationalField, 5);
        let a = s.from_tail(q(1), [q(2)]);
        let inv = s.try_inverse(&a).unwrap();
        let want: Vec<Rational> = (0..=5).map(|r| q(-2).pow(r)).collect();
        assert_eq!(inv.coeffs, want);
        assert_eq!(s.mul(&a, &inv), s.one());
    }

    #[test]
    fn shift_of_inverse_power() {
        let s = SeriesRing::new(RationalField, 3);
        let x = s.monomial(q(1), 1);
        // 1/(u - 1/2) = u^-1 + (1/2) u^-2 + ...
        let y = s.shifted(&x, &Rational::new(-1, 2));
        assert_eq!(y.coeffs, vec![q(0), q(1), Rational::new(1, 2), Rational::new(1, 4)]);
        let back = s.shifted(&y, &Rational::new(1, 2));
        assert_eq!(back, x);
    }

    #[test]
    fn divided_difference_of_inverse() {
        let s = SeriesRing::new(RationalField, 4);
        let b = BiRing::new(&RationalField);
        let d = b.divided_difference(&s.monomial(q(1), 1));
        // (1/u - 1/v)/(u - v) = -1/(uv)
        let terms: Vec<_> = d.terms().map(|(k, e)| (*k, e.clone())).collect();
        assert_eq!(terms, vec![((1, 1), q(-1))]);
    }

    #[test]
    fn divided_difference_times_u_minus_v() {
        let s = SeriesRing::new(RationalField, 4);
        let b = BiRing::new(&RationalField);
        let x = s.from_tail(q(0), [q(3), q(-1), q(5), q(2)]);
        let d = b.divided_difference(&x);
        let uv = b.sub(&b.shift_exponents(&d, -1, 0), &b.shift_exponents(&d, 0, -1));
        let diff = b.sub(&b.sub(&b.in_u(&x), &b.in_v(&x)), &uv);
        assert!(b.first_nonzero(&diff).is_none(), "{diff:?}");
    }
}
