//! Quasideterminants, the Gauss decomposition `T(u) = F(u) H(u) E(u)` and
//! quantum minors, over any ring of functions of `u`.

use std::sync::OnceLock;

use crate::arith::Rational;
use crate::context::AlgebraContext;
use crate::error::{Error, Result};
use crate::ring::{mat_mul, Ring, RingMatrix};
use crate::series::FunctionRing;

/// `|A|_ij = a_ij - r_i^j (A^{ij})^{-1} c_j^i` (0-based box).
pub fn quasideterminant<S: Ring>(ring: &S, a: &RingMatrix<S::Elem>, i: usize, j: usize) -> Result<S::Elem> {
    let n = a.rows();
    if a.cols() != n || i >= n || j >= n {
        return Err(Error::DimensionMismatch(format!("box ({i},{j}) in a {}x{} matrix", n, a.cols())));
    }
    if n == 1 {
        return Ok(a.get(0, 0).clone());
    }
    let rows: Vec<usize> = (0..n).filter(|&x| x != i).collect();
    let cols: Vec<usize> = (0..n).filter(|&x| x != j).collect();
    let inv = ring.invert_matrix(&a.select(&rows, &cols))?;
    let mut acc = a.get(i, j).clone();
    // A^{ij} has rows `rows` and columns `cols`, so its inverse maps
    // row-space indexed by `cols` to column-space indexed by `rows`.
    for (p, &c) in cols.iter().enumerate() {
        let rc = a.get(i, c);
        if ring.is_zero(rc) {
            continue;
        }
        for (q, &r) in rows.iter().enumerate() {
            let x = inv.get(p, q);
            let y = a.get(r, j);
            if ring.is_zero(x) || ring.is_zero(y) {
                continue;
            }
            acc = ring.sub(&acc, &ring.mul(&ring.mul(rc, x), y));
        }
    }
    Ok(acc)
}

#[derive(Clone, Debug)]
struct GaussRow<E> {
    h: E,
    h_inv: E,
    /// `e_{i, j}` for `j = i+1 ..= N`.
    e: Vec<E>,
    /// `f_{j, i}` for `j = i+1 ..= N`.
    f: Vec<E>,
}

/// How the Gaussian generators are computed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GaussRoute {
    /// Quasideterminants of leading submatrices, computed row by row on demand.
    Quasideterminant,
    /// Successive Schur complements (LDU elimination), computed eagerly.
    Schur,
}

/// Gaussian generators `h_i`, `e_ij`, `f_ji` of a square matrix with
/// invertible leading principal quasideterminants. Indices are 1-based.
pub struct Gauss<S: Ring> {
    pub ring: S,
    pub ctx: AlgebraContext,
    t: RingMatrix<S::Elem>,
    rows: Vec<OnceLock<std::result::Result<GaussRow<S::Elem>, String>>>,
}

impl<S: Ring> Gauss<S> {
    pub fn new(ring: S, ctx: &AlgebraContext, t: RingMatrix<S::Elem>, route: GaussRoute) -> Result<Self> {
        if t.rows() != t.cols() {
            return Err(Error::DimensionMismatch("generator matrix is not square".into()));
        }
        let n = t.rows();
        let g = Gauss { ring, ctx: ctx.clone(), t, rows: (0..n).map(|_| OnceLock::new()).collect() };
        if route == GaussRoute::Schur {
            g.fill_by_schur()?;
        }
        Ok(g)
    }

    pub fn size(&self) -> usize {
        self.t.rows()
    }

    pub fn t_matrix(&self) -> &RingMatrix<S::Elem> {
        &self.t
    }

    pub fn t(&self, i: usize, j: usize) -> &S::Elem {
        self.t.get(i - 1, j - 1)
    }

    fn fill_by_schur(&self) -> Result<()> {
        let n = self.size();
        let r = &self.ring;
        let mut m = self.t.clone();
        for k in 0..n {
            let h = m.get(k, k).clone();
            let h_inv = r.try_inverse(&h)?;
            let e: Vec<_> = (k + 1..n).map(|j| r.mul(&h_inv, m.get(k, j))).collect();
            let f: Vec<_> = (k + 1..n).map(|j| r.mul(m.get(j, k), &h_inv)).collect();
            for a in k + 1..n {
                let left = r.mul(m.get(a, k), &h_inv);
                if r.is_zero(&left) {
                    continue;
                }
                for b in k + 1..n {
                    let x = r.sub(m.get(a, b), &r.mul(&left, m.get(k, b)));
                    m.set(a, b, x);
                }
            }
            let _ = self.rows[k].set(Ok(GaussRow { h, h_inv, e, f }));
        }
        Ok(())
    }

    fn compute_row(&self, i: usize) -> Result<GaussRow<S::Elem>> {
        let n = self.size();
        let r = &self.ring;
        let k = i - 1;
        // q(a, b) = t_ab - sum_{x, y < i} t_ax (B^{-1})_xy t_yb with B the leading block.
        let q: Box<dyn Fn(usize, usize) -> S::Elem + '_> = if k == 0 {
            Box::new(|a, b| self.t.get(a, b).clone())
        } else {
            let lead: Vec<usize> = (0..k).collect();
            let binv = r.invert_matrix(&self.t.select(&lead, &lead))?;
            let right_cols: Vec<usize> = (k..n).collect();
            let c = self.t.select(&lead, &right_cols);
            let w = mat_mul(r, &binv, &c);
            Box::new(move |a, b| {
                let mut acc = self.t.get(a, b).clone();
                if b >= k {
                    for x in 0..k {
                        let y = w.get(x, b - k);
                        if !r.is_zero(self.t.get(a, x)) && !r.is_zero(y) {
                            acc = r.sub(&acc, &r.mul(self.t.get(a, x), y));
                        }
                    }
                }
                acc
            })
        };
        let h = q(k, k);
        let h_inv = r.try_inverse(&h)?;
        let e = (i..n).map(|j| r.mul(&h_inv, &q(k, j))).collect();
        let f = (i..n).map(|j| r.mul(&q(j, k), &h_inv)).collect();
        Ok(GaussRow { h, h_inv, e, f })
    }

    fn row(&self, i: usize) -> Result<&GaussRow<S::Elem>> {
        if i == 0 || i > self.size() {
            return Err(Error::IndexOutOfRange(format!("Gauss row {i}")));
        }
        self.rows[i - 1]
            .get_or_init(|| self.compute_row(i).map_err(|e| e.to_string()))
            .as_ref()
            .map_err(|e| Error::NotInvertible(e.clone()))
    }

    pub fn h(&self, i: usize) -> Result<S::Elem> {
        Ok(self.row(i)?.h.clone())
    }

    pub fn h_inv(&self, i: usize) -> Result<S::Elem> {
        Ok(self.row(i)?.h_inv.clone())
    }

    /// `e_ij` for `i < j`.
    pub fn e(&self, i: usize, j: usize) -> Result<S::Elem> {
        if j <= i || j > self.size() {
            return Err(Error::IndexOutOfRange(format!("e_{i},{j}")));
        }
        Ok(self.row(i)?.e[j - i - 1].clone())
    }

    /// `f_ji` for `i < j`.
    pub fn f(&self, j: usize, i: usize) -> Result<S::Elem> {
        if j <= i || j > self.size() {
            return Err(Error::IndexOutOfRange(format!("f_{j},{i}")));
        }
        Ok(self.row(i)?.f[j - i - 1].clone())
    }

    /// `T^[m](u)`: entries `m+1 ..= N-m` of the matrix of boxed
    /// `(m+1) x (m+1)` quasideterminants with rows `1..m, i` and columns `1..m, j`.
    pub fn sub_t(&self, m: usize) -> Result<RingMatrix<S::Elem>> {
        let n = self.size();
        if 2 * m >= n {
            return Err(Error::InvalidContext(format!("cannot remove {m} index pairs from N = {n}")));
        }
        if m == 0 {
            return Ok(self.t.clone());
        }
        let r = &self.ring;
        let lead: Vec<usize> = (0..m).collect();
        let inner: Vec<usize> = (m..n - m).collect();
        let binv = r.invert_matrix(&self.t.select(&lead, &lead))?;
        let w = mat_mul(r, &binv, &self.t.select(&lead, &inner));
        let left = self.t.select(&inner, &lead);
        let corr = mat_mul(r, &left, &w);
        Ok(RingMatrix::from_fn(inner.len(), inner.len(), |a, b| r.sub(self.t.get(inner[a], inner[b]), corr.get(a, b))))
    }

    /// `F H E`, which must reproduce `T`.
    pub fn reconstruct(&self) -> Result<RingMatrix<S::Elem>> {
        let n = self.size();
        let r = &self.ring;
        let mut fm = RingMatrix::filled(n, n, r.zero());
        let mut hm = RingMatrix::filled(n, n, r.zero());
        let mut em = RingMatrix::filled(n, n, r.zero());
        for i in 1..=n {
            fm.set(i - 1, i - 1, r.one());
            em.set(i - 1, i - 1, r.one());
            hm.set(i - 1, i - 1, self.h(i)?);
            for j in i + 1..=n {
                em.set(i - 1, j - 1, self.e(i, j)?);
                fm.set(j - 1, i - 1, self.f(j, i)?);
            }
        }
        Ok(mat_mul(r, &mat_mul(r, &fm, &hm), &em))
    }
}

/// `t^{a_1..a_k}_{b_1..b_k}(u) = sum_p sgn(p) t_{a_p(1) b_1}(u) .. t_{a_p(k) b_k}(u-k+1)`
/// (1-based indices into `t`).
pub fn quantum_minor<S: FunctionRing>(ring: &S, t: &RingMatrix<S::Elem>, rows: &[usize], cols: &[usize]) -> Result<S::Elem> {
    let k = rows.len();
    if k != cols.len() || k == 0 {
        return Err(Error::DimensionMismatch("quantum minor needs equally many rows and columns".into()));
    }
    if k > 4 {
        return Err(Error::UnsupportedOperator(format!("quantum minors of size {k} are not supported")));
    }
    let shifted: Vec<Vec<S::Elem>> = (0..k)
        .map(|pos| {
            let c = Rational::from_int(-(pos as i64));
            rows.iter().map(|&a| ring.shifted(t.get(a - 1, cols[pos] - 1), &c)).collect()
        })
        .collect();
    let mut acc = ring.zero();
    for (perm, sign) in permutations(k) {
        let mut term = ring.one();
        for pos in 0..k {
            term = ring.mul(&term, &shifted[pos][perm[pos]]);
            if ring.is_zero(&term) {
                break;
            }
        }
        if sign < 0 {
            acc = ring.sub(&acc, &term);
        } else {
            acc = ring.add(&acc, &term);
        }
    }
    Ok(acc)
}

/// All permutations of `0..k` with their signs.
pub fn permutations(k: usize) -> Vec<(Vec<usize>, i64)> {
    fn rec(prefix: &mut Vec<usize>, left: &mut Vec<usize>, out: &mut Vec<(Vec<usize>, i64)>) {
        if left.is_empty() {
            let mut inv = 0;
            for a in 0..prefix.len() {
                for b in a + 1..prefix.len() {
                    if prefix[a] > prefix[b] {
                        inv += 1;
                    }
                }
            }
            out.push((prefix.clone(), if inv % 2 == 0 { 1 } else { -1 }));
            return;
        }
        for idx in 0..left.len() {
            let x = left.remove(idx);
            prefix.push(x);
            rec(prefix, left, out);
            prefix.pop();
            left.insert(idx, x);
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut (0..k).collect(), &mut out);
    out
}

/// Matrix elements `tau^{a1 a2}_{b1 b2}(u)` of `R_12(1) T_1(u) T_2(u-1)`.
///
/// `R(1)` has a pole when `kappa = 1`; the entries whose `Q` part would be
/// needed (`a2 = a1'`) are then undefined and reported as an error.
pub fn tau<S: FunctionRing>(ring: &S, ctx: &AlgebraContext, t: &RingMatrix<S::Elem>, a: (usize, usize), b: (usize, usize)) -> Result<S::Elem> {
    let (a1, a2) = a;
    let (b1, b2) = b;
    let n = ctx.size;
    let m1 = Rational::from_int(-1);
    let te = |i: usize, j: usize| t.get(i - 1, j - 1).clone();
    let tl = |i: usize, j: usize| ring.shifted(t.get(i - 1, j - 1), &m1);
    // identity and -P parts
    let mut acc = ring.sub(&ring.mul(&te(a1, b1), &tl(a2, b2)), &ring.mul(&te(a2, b1), &tl(a1, b2)));
    if ctx.has_q() && a2 == ctx.prime(a1) {
        let d = Rational::one() - &ctx.kappa;
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let w = d.recip()?;
        let mut q = ring.zero();
        for c in 1..=n {
            let th = Rational::from_int(ctx.theta(a1, c));
            q = ring.add(&q, &ring.scale(&ring.mul(&te(c, b1), &tl(ctx.prime(c), b2)), &th));
        }
        acc = ring.add(&acc, &ring.scale(&q, &w));
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::context::Kind;
    use crate::ring::{MatrixRing, RationalField};
    use crate::series::SeriesRing;

    #[test]
    fn two_by_two_quasideterminants() {
        let q = RationalField;
        let a = RingMatrix::from_fn(2, 2, |i, j| Rational::from_int([[2, 3], [5, 7]][i][j]));
        // |A|_11 = 2 - 3 * 7^{-1} * 5
        assert_eq!(quasideterminant(&q, &a, 0, 0).unwrap(), Rational::new(-1, 7));
        // |A|_12 = 3 - 2 * 5^{-1} * 7
        assert_eq!(quasideterminant(&q, &a, 0, 1).unwrap(), Rational::new(1, 5));
    }

    #[test]
    fn routes_agree_on_evaluation_series() {
        let ctx = AlgebraContext::new(Kind::C, 2, 3).unwrap();
        let ev = crate::oracle::EvalAssignment::new(&ctx, Rational::new(1, 3));
        let s = ev.series_ring(3);
        let g1 = Gauss::new(s.clone(), &ctx, ev.series_t(3), GaussRoute::Quasideterminant).unwrap();
        let g2 = Gauss::new(s.clone(), &ctx, ev.series_t(3), GaussRoute::Schur).unwrap();
        for i in 1..=4 {
            assert_eq!(g1.h(i).unwrap(), g2.h(i).unwrap());
            for j in i + 1..=4 {
                assert_eq!(g1.e(i, j).unwrap(), g2.e(i, j).unwrap());
                assert_eq!(g1.f(j, i).unwrap(), g2.f(j, i).unwrap());
            }
        }
        assert_eq!(g1.reconstruct().unwrap(), ev.series_t(3));
        let _ = MatrixRing::new(RationalField, 1);
        let _: &SeriesRing<_> = &s;
    }

    #[test]
    fn permutation_signs() {
        let p = permutations(3);
        assert_eq!(p.len(), 6);
        assert_eq!(p.iter().map(|x| x.1).sum::<i64>(), 0);
    }
}
