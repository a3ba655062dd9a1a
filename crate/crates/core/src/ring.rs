//! Ring objects and dense matrices over them.
//!
//! Operations that only need ring structure (series products, quasideterminants,
//! relation assembly) are written once against [`Ring`] and run unchanged on
//! the abstract algebra and on the evaluation backend.

use std::fmt::Debug;

use crate::arith::{Rational, RationalFunction};
use crate::error::{Error, Result};

pub trait Ring: Send + Sync {
    type Elem: Clone + PartialEq + Debug + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_rational(&self, c: &Rational) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn scale(&self, a: &Self::Elem, c: &Rational) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    fn add_assign(&self, a: &mut Self::Elem, b: &Self::Elem) {
        *a = self.add(a, b);
    }

    /// Two-sided inverse when one exists and can be computed.
    fn try_inverse(&self, a: &Self::Elem) -> Result<Self::Elem> {
        let _ = a;
        Err(Error::NotInvertible("ring has no inversion routine".into()))
    }

    /// Inverse of a square matrix over this ring.
    fn invert_matrix(&self, m: &RingMatrix<Self::Elem>) -> Result<RingMatrix<Self::Elem>> {
        gauss_jordan_inverse(self, m)
    }

    /// Short human-readable rendering used in failure witnesses.
    fn describe(&self, a: &Self::Elem) -> String {
        format!("{a:?}")
    }

    fn commutator(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.sub(&self.mul(a, b), &self.mul(b, a))
    }

    fn sum<'a, I>(&self, items: I) -> Self::Elem
    where
        I: IntoIterator<Item = &'a Self::Elem>,
        Self::Elem: 'a,
    {
        let mut acc = self.zero();
        for x in items {
            self.add_assign(&mut acc, x);
        }
        acc
    }

    fn product(&self, items: &[&Self::Elem]) -> Self::Elem {
        let mut acc = self.one();
        for x in items {
            acc = self.mul(&acc, x);
        }
        acc
    }
}

impl<R: Ring + ?Sized> Ring for &R {
    type Elem = R::Elem;

    fn zero(&self) -> Self::Elem {
        (**self).zero()
    }
    fn one(&self) -> Self::Elem {
        (**self).one()
    }
    fn from_rational(&self, c: &Rational) -> Self::Elem {
        (**self).from_rational(c)
    }
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        (**self).add(a, b)
    }
    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        (**self).neg(a)
    }
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        (**self).mul(a, b)
    }
    fn scale(&self, a: &Self::Elem, c: &Rational) -> Self::Elem {
        (**self).scale(a, c)
    }
    fn is_zero(&self, a: &Self::Elem) -> bool {
        (**self).is_zero(a)
    }
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        (**self).sub(a, b)
    }
    fn add_assign(&self, a: &mut Self::Elem, b: &Self::Elem) {
        (**self).add_assign(a, b)
    }
    fn try_inverse(&self, a: &Self::Elem) -> Result<Self::Elem> {
        (**self).try_inverse(a)
    }
    fn invert_matrix(&self, m: &RingMatrix<Self::Elem>) -> Result<RingMatrix<Self::Elem>> {
        (**self).invert_matrix(m)
    }
    fn describe(&self, a: &Self::Elem) -> String {
        (**self).describe(a)
    }
}

impl<R: Ring + ?Sized> Ring for std::sync::Arc<R> {
    type Elem = R::Elem;

    fn zero(&self) -> Self::Elem {
        (**self).zero()
    }
    fn one(&self) -> Self::Elem {
        (**self).one()
    }
    fn from_rational(&self, c: &Rational) -> Self::Elem {
        (**self).from_rational(c)
    }
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        (**self).add(a, b)
    }
    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        (**self).neg(a)
    }
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        (**self).mul(a, b)
    }
    fn scale(&self, a: &Self::Elem, c: &Rational) -> Self::Elem {
        (**self).scale(a, c)
    }
    fn is_zero(&self, a: &Self::Elem) -> bool {
        (**self).is_zero(a)
    }
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        (**self).sub(a, b)
    }
    fn add_assign(&self, a: &mut Self::Elem, b: &Self::Elem) {
        (**self).add_assign(a, b)
    }
    fn try_inverse(&self, a: &Self::Elem) -> Result<Self::Elem> {
        (**self).try_inverse(a)
    }
    fn invert_matrix(&self, m: &RingMatrix<Self::Elem>) -> Result<RingMatrix<Self::Elem>> {
        (**self).invert_matrix(m)
    }
    fn describe(&self, a: &Self::Elem) -> String {
        (**self).describe(a)
    }
}

/// The field Q.
#[derive(Clone, Copy, Debug, Default)]
pub struct RationalField;

impl Ring for RationalField {
    type Elem = Rational;
    fn zero(&self) -> Rational {
        Rational::zero()
    }
    fn one(&self) -> Rational {
        Rational::one()
    }
    fn from_rational(&self, c: &Rational) -> Rational {
        c.clone()
    }
    fn add(&self, a: &Rational, b: &Rational) -> Rational {
        a + b
    }
    fn neg(&self, a: &Rational) -> Rational {
        -a
    }
    fn mul(&self, a: &Rational, b: &Rational) -> Rational {
        a * b
    }
    fn scale(&self, a: &Rational, c: &Rational) -> Rational {
        a * c
    }
    fn is_zero(&self, a: &Rational) -> bool {
        a.is_zero()
    }
    fn try_inverse(&self, a: &Rational) -> Result<Rational> {
        a.recip()
    }
    fn describe(&self, a: &Rational) -> String {
        a.to_string()
    }
}

/// The field Q(u).
#[derive(Clone, Copy, Debug, Default)]
pub struct RationalFunctionField;

impl Ring for RationalFunctionField {
    type Elem = RationalFunction;
    fn zero(&self) -> RationalFunction {
        RationalFunction::zero()
    }
    fn one(&self) -> RationalFunction {
        RationalFunction::one()
    }
    fn from_rational(&self, c: &Rational) -> RationalFunction {
        RationalFunction::constant(c.clone())
    }
    fn add(&self, a: &RationalFunction, b: &RationalFunction) -> RationalFunction {
        a + b
    }
    fn neg(&self, a: &RationalFunction) -> RationalFunction {
        -a
    }
    fn mul(&self, a: &RationalFunction, b: &RationalFunction) -> RationalFunction {
        a * b
    }
    fn scale(&self, a: &RationalFunction, c: &Rational) -> RationalFunction {
        a.scale(c)
    }
    fn is_zero(&self, a: &RationalFunction) -> bool {
        a.is_zero()
    }
    fn try_inverse(&self, a: &RationalFunction) -> Result<RationalFunction> {
        a.recip()
    }
    fn describe(&self, a: &RationalFunction) -> String {
        a.to_string()
    }
}

/// Dense row-major matrix with entries in some ring.
#[derive(Clone, PartialEq, Debug)]
pub struct RingMatrix<E> {
    rows: usize,
    cols: usize,
    data: Vec<E>,
}

impl<E: Clone> RingMatrix<E> {
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> E) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        RingMatrix { rows, cols, data }
    }

    pub fn filled(rows: usize, cols: usize, e: E) -> Self {
        RingMatrix { rows, cols, data: vec![e; rows * cols] }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Entry at zero-based `(i, j)`.
    pub fn get(&self, i: usize, j: usize) -> &E {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, e: E) {
        self.data[i * self.cols + j] = e;
    }

    pub fn get_mut(&mut self, i: usize, j: usize) -> &mut E {
        &mut self.data[i * self.cols + j]
    }

    pub fn entries(&self) -> &[E] {
        &self.data
    }

    pub fn map<F, T: Clone>(&self, f: F) -> RingMatrix<T>
    where
        F: FnMut(&E) -> T,
    {
        RingMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    /// Submatrix on the given zero-based rows and columns, in the given order.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Self {
        RingMatrix::from_fn(rows.len(), cols.len(), |i, j| self.get(rows[i], cols[j]).clone())
    }

    pub fn transpose(&self) -> Self {
        RingMatrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

pub fn mat_identity<R: Ring + ?Sized>(ring: &R, n: usize) -> RingMatrix<R::Elem> {
    RingMatrix::from_fn(n, n, |i, j| if i == j { ring.one() } else { ring.zero() })
}

pub fn mat_zero<R: Ring + ?Sized>(ring: &R, rows: usize, cols: usize) -> RingMatrix<R::Elem> {
    RingMatrix::filled(rows, cols, ring.zero())
}

pub fn mat_add<R: Ring + ?Sized>(
    ring: &R,
    a: &RingMatrix<R::Elem>,
    b: &RingMatrix<R::Elem>,
) -> RingMatrix<R::Elem> {
    assert_eq!((a.rows, a.cols), (b.rows, b.cols), "matrix shapes differ");
    RingMatrix::from_fn(a.rows, a.cols, |i, j| ring.add(a.get(i, j), b.get(i, j)))
}

pub fn mat_sub<R: Ring + ?Sized>(
    ring: &R,
    a: &RingMatrix<R::Elem>,
    b: &RingMatrix<R::Elem>,
) -> RingMatrix<R::Elem> {
    assert_eq!((a.rows, a.cols), (b.rows, b.cols), "matrix shapes differ");
    RingMatrix::from_fn(a.rows, a.cols, |i, j| ring.sub(a.get(i, j), b.get(i, j)))
}

pub fn mat_scale<R: Ring + ?Sized>(
    ring: &R,
    a: &RingMatrix<R::Elem>,
    c: &Rational,
) -> RingMatrix<R::Elem> {
    a.map(|x| ring.scale(x, c))
}

pub fn mat_mul<R: Ring + ?Sized>(
    ring: &R,
    a: &RingMatrix<R::Elem>,
    b: &RingMatrix<R::Elem>,
) -> RingMatrix<R::Elem> {
    assert_eq!(a.cols, b.rows, "inner matrix dimensions differ");
    RingMatrix::from_fn(a.rows, b.cols, |i, j| {
        let mut acc = ring.zero();
        for k in 0..a.cols {
            let x = a.get(i, k);
            let y = b.get(k, j);
            if ring.is_zero(x) || ring.is_zero(y) {
                continue;
            }
            ring.add_assign(&mut acc, &ring.mul(x, y));
        }
        acc
    })
}

pub fn mat_is_zero<R: Ring + ?Sized>(ring: &R, a: &RingMatrix<R::Elem>) -> bool {
    a.data.iter().all(|x| ring.is_zero(x))
}

/// Gauss-Jordan inversion by left row operations. Each pivot must be
/// invertible in the ring; rows are swapped to find one.
pub fn gauss_jordan_inverse<R: Ring + ?Sized>(
    ring: &R,
    m: &RingMatrix<R::Elem>,
) -> Result<RingMatrix<R::Elem>> {
    if !m.is_square() {
        return Err(Error::DimensionMismatch(format!("{}x{} is not square", m.rows, m.cols)));
    }
    let n = m.rows;
    let mut a = m.clone();
    let mut inv = mat_identity(ring, n);
    for c in 0..n {
        let mut pivot = None;
        for r in c..n {
            if ring.is_zero(a.get(r, c)) {
                continue;
            }
            if let Ok(p) = ring.try_inverse(a.get(r, c)) {
                pivot = Some((r, p));
                break;
            }
        }
        let (r, p) = pivot.ok_or_else(|| Error::NotInvertible(format!("no invertible pivot in column {c}")))?;
        a.swap_rows(r, c);
        inv.swap_rows(r, c);
        for j in 0..n {
            let x = ring.mul(&p, a.get(c, j));
            a.set(c, j, x);
            let y = ring.mul(&p, inv.get(c, j));
            inv.set(c, j, y);
        }
        for r in 0..n {
            if r == c || ring.is_zero(a.get(r, c)) {
                continue;
            }
            let f = a.get(r, c).clone();
            for j in 0..n {
                let x = ring.sub(a.get(r, j), &ring.mul(&f, a.get(c, j)));
                a.set(r, j, x);
                let y = ring.sub(inv.get(r, j), &ring.mul(&f, inv.get(c, j)));
                inv.set(r, j, y);
            }
        }
    }
    Ok(inv)
}

/// Ring of `n x n` matrices over a base ring.
#[derive(Clone, Debug)]
pub struct MatrixRing<R> {
    pub base: R,
    pub n: usize,
}

impl<R: Ring> MatrixRing<R> {
    pub fn new(base: R, n: usize) -> Self {
        MatrixRing { base, n }
    }
}

impl<R: Ring> Ring for MatrixRing<R> {
    type Elem = RingMatrix<R::Elem>;

    fn zero(&self) -> Self::Elem {
        mat_zero(&self.base, self.n, self.n)
    }
    fn one(&self) -> Self::Elem {
        mat_identity(&self.base, self.n)
    }
    fn from_rational(&self, c: &Rational) -> Self::Elem {
        let z = self.base.zero();
        let d = self.base.from_rational(c);
        RingMatrix::from_fn(self.n, self.n, |i, j| if i == j { d.clone() } else { z.clone() })
    }
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        mat_add(&self.base, a, b)
    }
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        mat_sub(&self.base, a, b)
    }
    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        a.map(|x| self.base.neg(x))
    }
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        mat_mul(&self.base, a, b)
    }
    fn scale(&self, a: &Self::Elem, c: &Rational) -> Self::Elem {
        mat_scale(&self.base, a, c)
    }
    fn is_zero(&self, a: &Self::Elem) -> bool {
        mat_is_zero(&self.base, a)
    }
    fn try_inverse(&self, a: &Self::Elem) -> Result<Self::Elem> {
        self.base.invert_matrix(a)
    }
    fn invert_matrix(&self, m: &RingMatrix<Self::Elem>) -> Result<RingMatrix<Self::Elem>> {
        let flat = flatten_blocks(m, self.n);
        Ok(split_blocks(&self.base.invert_matrix(&flat)?, self.n))
    }
    fn describe(&self, a: &Self::Elem) -> String {
        let mut out = String::from("[");
        for i in 0..a.rows() {
            if i > 0 {
                out.push_str("; ");
            }
            let row: Vec<String> = (0..a.cols()).map(|j| self.base.describe(a.get(i, j))).collect();
            out.push_str(&row.join(", "));
        }
        out.push(']');
        out
    }
}

/// Flatten a block matrix (entries are `b x b` matrices) into one big matrix.
pub fn flatten_blocks<E: Clone>(m: &RingMatrix<RingMatrix<E>>, b: usize) -> RingMatrix<E> {
    RingMatrix::from_fn(m.rows() * b, m.cols() * b, |i, j| m.get(i / b, j / b).get(i % b, j % b).clone())
}

/// Inverse of [`flatten_blocks`].
pub fn split_blocks<E: Clone>(m: &RingMatrix<E>, b: usize) -> RingMatrix<RingMatrix<E>> {
    RingMatrix::from_fn(m.rows() / b, m.cols() / b, |bi, bj| {
        RingMatrix::from_fn(b, b, |i, j| m.get(bi * b + i, bj * b + j).clone())
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_matrix_inverse() {
        let q = RationalField;
        let m = RingMatrix::from_fn(3, 3, |i, j| Rational::from_int(((i * 3 + j) as i64 * 7) % 5 + (i == j) as i64));
        let inv = gauss_jordan_inverse(&q, &m).unwrap();
        assert_eq!(mat_mul(&q, &m, &inv), mat_identity(&q, 3));
        assert_eq!(mat_mul(&q, &inv, &m), mat_identity(&q, 3));
    }

    #[test]
    fn singular_matrix_is_rejected() {
        let q = RationalField;
        let m = RingMatrix::from_fn(2, 2, |_, _| Rational::one());
        assert!(matches!(gauss_jordan_inverse(&q, &m), Err(Error::NotInvertible(_))));
    }

    #[test]
    fn block_matrix_inverse_matches_flat() {
        let q = RationalField;
        let mr = MatrixRing::new(RationalField, 2);
        let flat = RingMatrix::from_fn(4, 4, |i, j| Rational::from_int(((i + 2 * j) % 3) as i64 + 2 * (i == j) as i64));
        let blocks = split_blocks(&flat, 2);
        let inv_blocks = mr.invert_matrix(&blocks).unwrap();
        assert_eq!(flatten_blocks(&inv_blocks, 2), gauss_jordan_inverse(&q, &flat).unwrap());
    }
}
