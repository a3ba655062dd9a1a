//! Sparse rational operators on tensor powers of `C^N` and index helpers.
//!
//! Basis vectors of `(C^N)^{⊗m}` are ordered leg-1-major: the tuple
//! `(i_1, .., i_m)` (0-based) sits at `((i_1 N + i_2) N + ..) + i_m`.

use std::fmt;

use rustc_hash::FxHashMap;

use crate::arith::Rational;
use crate::context::AlgebraContext;
use crate::error::{Error, Result};
use crate::ring::{Ring, RingMatrix};

/// Square sparse matrix over Q.
#[derive(Clone, PartialEq, Eq)]
pub struct SparseMat {
    dim: usize,
    rows: Vec<Vec<(usize, Rational)>>,
}

impl SparseMat {
    pub fn zero(dim: usize) -> Self {
        SparseMat { dim, rows: vec![Vec::new(); dim] }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zero(dim);
        for i in 0..dim {
            m.rows[i].push((i, Rational::one()));
        }
        m
    }

    pub fn from_entries(dim: usize, entries: impl IntoIterator<Item = (usize, usize, Rational)>) -> Self {
        let mut acc: Vec<FxHashMap<usize, Rational>> = vec![FxHashMap::default(); dim];
        for (i, j, c) in entries {
            *acc[i].entry(j).or_default() += &c;
        }
        Self::from_row_maps(dim, acc)
    }

    fn from_row_maps(dim: usize, acc: Vec<FxHashMap<usize, Rational>>) -> Self {
        let rows = acc
            .into_iter()
            .map(|r| {
                let mut v: Vec<(usize, Rational)> = r.into_iter().filter(|(_, c)| !c.is_zero()).collect();
                v.sort_by_key(|e| e.0);
                v
            })
            .collect();
        SparseMat { dim, rows }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> Rational {
        self.rows[i].iter().find(|e| e.0 == j).map(|e| e.1.clone()).unwrap_or_default()
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &Rational)> {
        self.rows.iter().enumerate().flat_map(|(i, r)| r.iter().map(move |(j, c)| (i, *j, c)))
    }

    pub fn nnz(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.dim);
        }
        SparseMat {
            dim: self.dim,
            rows: self.rows.iter().map(|r| r.iter().map(|(j, x)| (*j, x * c)).collect()).collect(),
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        assert_eq!(self.dim, o.dim);
        Self::from_entries(self.dim, self.entries().chain(o.entries()).map(|(i, j, c)| (i, j, c.clone())))
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.scale(&-Rational::one()))
    }

    pub fn mul(&self, o: &Self) -> Self {
        assert_eq!(self.dim, o.dim);
        let mut acc: Vec<FxHashMap<usize, Rational>> = vec![FxHashMap::default(); self.dim];
        for (i, row) in self.rows.iter().enumerate() {
            for (k, a) in row {
                for (j, b) in &o.rows[*k] {
                    *acc[i].entry(*j).or_default() += &(a * b);
                }
            }
        }
        Self::from_row_maps(self.dim, acc)
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(Vec::is_empty)
    }

    pub fn to_dense(&self) -> RingMatrix<Rational> {
        RingMatrix::from_fn(self.dim, self.dim, |i, j| self.get(i, j))
    }

    /// First entry where `self` and `o` differ, as `(row, col, self, o)`.
    pub fn first_difference(&self, o: &Self) -> Option<(usize, usize, Rational, Rational)> {
        let d = self.sub(o);
        let first = d.entries().next().map(|(i, j, _)| (i, j));
        first.map(|(i, j)| (i, j, self.get(i, j), o.get(i, j)))
    }
}

impl fmt::Debug for SparseMat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SparseMat({}x{}, {{", self.dim, self.dim)?;
        for (n, (i, j, c)) in self.entries().enumerate() {
            if n > 0 {
                write!(f, ", ")?;
            }
            write!(f, "({i},{j}): {c}")?;
        }
        write!(f, "}})")
    }
}

/// Operators that [`place_legs`] knows how to build.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TwoLegOp {
    P,
    Q,
}

/// `P = sum_ij e_ij ⊗ e_ji` on `C^N ⊗ C^N`.
pub fn op_p(ctx: &AlgebraContext) -> SparseMat {
    let n = ctx.size;
    SparseMat::from_entries(
        n * n,
        (0..n).flat_map(|i| (0..n).map(move |j| (i * n + j, j * n + i, Rational::one()))),
    )
}

/// `Q = sum_ij theta_ij e_ij ⊗ e_{i'j'}` on `C^N ⊗ C^N`.
pub fn op_q(ctx: &AlgebraContext) -> SparseMat {
    let n = ctx.size;
    let mut entries = Vec::with_capacity(n * n);
    for i in 1..=n {
        for j in 1..=n {
            let (ip, jp) = (ctx.prime(i), ctx.prime(j));
            let row = (i - 1) * n + (ip - 1);
            let col = (j - 1) * n + (jp - 1);
            entries.push((row, col, Rational::from_int(ctx.theta(i, j))));
        }
    }
    SparseMat::from_entries(n * n, entries)
}

pub fn two_leg_op(ctx: &AlgebraContext, op: TwoLegOp) -> Result<SparseMat> {
    match op {
        TwoLegOp::P => Ok(op_p(ctx)),
        TwoLegOp::Q if ctx.has_q() => Ok(op_q(ctx)),
        TwoLegOp::Q => Err(Error::UnsupportedOperator("Q has no type A analogue".into())),
    }
}

/// Embed a two-leg operator (acting on `C^N ⊗ C^N`) on legs `(a, b)` of
/// `(C^N)^{⊗m}`; legs are 1-based and the operator's first factor goes to `a`.
pub fn place_legs(op: &SparseMat, size: usize, a: usize, b: usize, m: usize) -> Result<SparseMat> {
    if op.dim() != size * size {
        return Err(Error::InvalidLegs(format!("operator of dimension {} is not on C^{size} ⊗ C^{size}", op.dim())));
    }
    if a == b || a == 0 || b == 0 || a > m || b > m {
        return Err(Error::InvalidLegs(format!("legs ({a}, {b}) in a {m}-fold tensor product")));
    }
    let dim = size.pow(m as u32);
    let stride = |leg: usize| size.pow((m - leg) as u32);
    let (sa, sb) = (stride(a), stride(b));
    let mut entries = Vec::new();
    for x in 0..dim {
        let xa = (x / sa) % size;
        let xb = (x / sb) % size;
        let rest = x - xa * sa - xb * sb;
        for (col, c) in &op.rows[xa * size + xb] {
            let (ya, yb) = (col / size, col % size);
            entries.push((x, rest + ya * sa + yb * sb, c.clone()));
        }
    }
    Ok(SparseMat::from_entries(dim, entries))
}

/// `(X')_ij = theta_ij X_{j'i'}` for an `N x N` matrix over any ring.
pub fn transpose_prime<R: Ring + ?Sized>(
    ring: &R,
    ctx: &AlgebraContext,
    x: &RingMatrix<R::Elem>,
) -> RingMatrix<R::Elem> {
    let n = ctx.size;
    RingMatrix::from_fn(n, n, |i, j| {
        let (i, j) = (i + 1, j + 1);
        let e = x.get(ctx.prime(j) - 1, ctx.prime(i) - 1);
        if ctx.theta(i, j) == 1 {
            e.clone()
        } else {
            ring.neg(e)
        }
    })
}

/// Lie algebra generator `F_ij = E_ij - theta_ij E_{j'i'}` as a sparse `N x N` matrix.
pub fn lie_generator(ctx: &AlgebraContext, i: usize, j: usize) -> SparseMat {
    let t = Rational::from_int(ctx.theta(i, j));
    SparseMat::from_entries(
        ctx.size,
        [(i - 1, j - 1, Rational::one()), (ctx.prime(j) - 1, ctx.prime(i) - 1, -t)],
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::context::Kind;

    fn ctxs() -> Vec<AlgebraContext> {
        vec![
            AlgebraContext::new(Kind::B, 1, 3).unwrap(),
            AlgebraContext::new(Kind::C, 2, 3).unwrap(),
            AlgebraContext::new(Kind::D, 2, 3).unwrap(),
        ]
    }

    #[test]
    fn p_and_q_algebra() {
        for ctx in ctxs() {
            let (p, q) = (op_p(&ctx), op_q(&ctx));
            let nn = ctx.size * ctx.size;
            assert_eq!(p.mul(&p), SparseMat::identity(nn));
            assert_eq!(q.mul(&q), q.scale(&Rational::from(ctx.size)));
            let s = Rational::from_int(ctx.pq_sign());
            assert_eq!(p.mul(&q), q.scale(&s));
            assert_eq!(q.mul(&p), q.scale(&s));
        }
    }

    #[test]
    fn placed_p_swaps_legs() {
        let ctx = AlgebraContext::new(Kind::B, 1, 3).unwrap();
        let p13 = place_legs(&op_p(&ctx), 3, 1, 3, 3).unwrap();
        // e_0 ⊗ e_1 ⊗ e_2 -> e_2 ⊗ e_1 ⊗ e_0
        assert_eq!(p13.get(2 * 9 + 3, 5), Rational::one());
        assert_eq!(p13.mul(&p13), SparseMat::identity(27));
        let p31 = place_legs(&op_p(&ctx), 3, 3, 1, 3).unwrap();
        assert_eq!(p13, p31);
    }

    #[test]
    fn bad_legs_rejected() {
        let ctx = AlgebraContext::new(Kind::B, 1, 3).unwrap();
        assert!(matches!(place_legs(&op_p(&ctx), 3, 2, 2, 3), Err(Error::InvalidLegs(_))));
        assert!(matches!(place_legs(&op_p(&ctx), 3, 1, 4, 3), Err(Error::InvalidLegs(_))));
    }
}
