//! Drinfeld-type series built from the Gaussian generators, the central
//! series `z(u)` and its product formulas.

use crate::arith::Rational;
use crate::context::{AlgebraContext, Kind};
use crate::error::{Error, Result};
use crate::gauss::Gauss;
use crate::report::Outcome;
use crate::ring::{Ring, RingMatrix};
use crate::series::FunctionRing;

fn half(k: i64) -> Rational {
    Rational::new(k, 2)
}

/// Number of simple-root series: `n` for B/C/D, `n - 1` for type A.
pub fn simple_count(ctx: &AlgebraContext) -> usize {
    if ctx.kind == Kind::A {
        ctx.n.saturating_sub(1)
    } else {
        ctx.n
    }
}

/// Row/column pair `(a, b)` with `e_i = e_ab`, `f_i = f_ba`.
pub fn simple_pair(ctx: &AlgebraContext, i: usize) -> Result<(usize, usize)> {
    if i == 0 || i > simple_count(ctx) {
        return Err(Error::IndexOutOfRange(format!("simple index {i} for {}", ctx.label())));
    }
    let n = ctx.n;
    Ok(if i < n || ctx.kind != Kind::D { (i, i + 1) } else { (n - 1, n + 1) })
}

/// `e_i(u)`.
pub fn simple_e<S: Ring>(g: &Gauss<S>, i: usize) -> Result<S::Elem> {
    let (a, b) = simple_pair(&g.ctx, i)?;
    g.e(a, b)
}

/// `f_i(u)`.
pub fn simple_f<S: Ring>(g: &Gauss<S>, i: usize) -> Result<S::Elem> {
    let (a, b) = simple_pair(&g.ctx, i)?;
    g.f(b, a)
}

/// `k_i(u) = h_a(u)^{-1} h_b(u)`, doubled for the last node in type C.
pub fn simple_k<S: Ring>(g: &Gauss<S>, i: usize) -> Result<S::Elem> {
    let (a, b) = simple_pair(&g.ctx, i)?;
    let k = g.ring.mul(&g.h_inv(a)?, &g.h(b)?);
    if g.ctx.kind == Kind::C && i == g.ctx.n {
        Ok(g.ring.scale(&k, &Rational::from_int(2)))
    } else {
        Ok(k)
    }
}

/// The shift `c_i` with `kappa_i(u) = (h_a^{-1} h_b)(u - c_i)`.
pub fn drinfeld_shift(ctx: &AlgebraContext, i: usize) -> Rational {
    let n = ctx.n as i64;
    if (i as i64) < n || ctx.kind == Kind::A {
        return half(i as i64 - 1);
    }
    match ctx.kind {
        Kind::B => half(n - 1),
        Kind::C => half(n),
        _ => half(n - 2),
    }
}

/// `kappa_i(u)`, `xi_i^+(u)`, `xi_i^-(u)` for `i = 1..n` (index `i - 1`).
#[derive(Clone, Debug)]
pub struct Drinfeld<E> {
    pub kappa: Vec<E>,
    pub xi_plus: Vec<E>,
    pub xi_minus: Vec<E>,
}

impl<E: Clone> Drinfeld<E> {
    pub fn kappa(&self, i: usize) -> &E {
        &self.kappa[i - 1]
    }
    pub fn xi(&self, plus: bool, i: usize) -> &E {
        if plus {
            &self.xi_plus[i - 1]
        } else {
            &self.xi_minus[i - 1]
        }
    }
}

pub fn build_drinfeld<S: FunctionRing>(g: &Gauss<S>) -> Result<Drinfeld<S::Elem>> {
    let r = &g.ring;
    let ctx = &g.ctx;
    let mut d = Drinfeld { kappa: Vec::new(), xi_plus: Vec::new(), xi_minus: Vec::new() };
    for i in 1..=simple_count(ctx) {
        let (a, b) = simple_pair(ctx, i)?;
        let c = -drinfeld_shift(ctx, i);
        d.kappa.push(r.shifted(&r.mul(&g.h_inv(a)?, &g.h(b)?), &c));
        d.xi_plus.push(r.shifted(&g.f(b, a)?, &c));
        let mut xm = r.shifted(&g.e(a, b)?, &c);
        if ctx.kind == Kind::C && i == ctx.n {
            xm = r.scale(&xm, &half(1));
        }
        d.xi_minus.push(xm);
    }
    Ok(d)
}

/// `T'(u + kappa) T(u)` for a matrix `t` of functions (the prime transpose
/// `(X')_ij = theta_ij X_{j'i'}`), with `kappa` and signs from `ctx`.
pub fn unitarity_product<S: FunctionRing>(ring: &S, ctx: &AlgebraContext, t: &RingMatrix<S::Elem>) -> RingMatrix<S::Elem> {
    let n = ctx.size;
    let shifted: Vec<S::Elem> = t.entries().iter().map(|x| ring.shifted(x, &ctx.kappa)).collect();
    RingMatrix::from_fn(n, n, |i, j| {
        let mut acc = ring.zero();
        for k in 0..n {
            let th = ctx.theta(i + 1, k + 1);
            let left = &shifted[(ctx.prime(k + 1) - 1) * n + (ctx.prime(i + 1) - 1)];
            let right = t.get(k, j);
            if ring.is_zero(left) || ring.is_zero(right) {
                continue;
            }
            let p = ring.mul(left, right);
            acc = if th > 0 { ring.add(&acc, &p) } else { ring.sub(&acc, &p) };
        }
        acc
    })
}

/// `z(u)` read off from the unitarity product, with a check that the
/// product is scalar.
pub fn compute_center<S: FunctionRing>(ring: &S, ctx: &AlgebraContext, t: &RingMatrix<S::Elem>) -> Result<(S::Elem, Outcome)> {
    let p = unitarity_product(ring, ctx, t);
    let z = p.get(0, 0).clone();
    for i in 0..ctx.size {
        for j in 0..ctx.size {
            let want = if i == j { z.clone() } else { ring.zero() };
            let diff = ring.sub(p.get(i, j), &want);
            if !ring.is_zero(&diff) {
                let w = format!("entry ({},{}) of T'(u+kappa)T(u): {}", i + 1, j + 1, ring.describe(&diff));
                return Ok((z, Outcome::fail(w)));
            }
        }
    }
    Ok((z, Outcome::pass()))
}

/// Product of the `h_i` series that should equal `z(u)`.
pub fn center_from_h<S: FunctionRing>(g: &Gauss<S>) -> Result<S::Elem> {
    let r = &g.ring;
    let ctx = &g.ctx;
    let n = ctx.n;
    let kap = &ctx.kappa;
    let inv_top = if ctx.kind == Kind::B { n } else { n - 1 };
    let mut acc = r.one();
    for i in 1..=inv_top {
        let c = kap - &Rational::from(i);
        acc = r.mul(&acc, &r.shifted(&g.h_inv(i)?, &c));
    }
    for i in 1..=n {
        let c = kap - &Rational::from(i) + Rational::one();
        acc = r.mul(&acc, &r.shifted(&g.h(i)?, &c));
    }
    let hn1 = g.h(n + 1)?;
    acc = r.mul(&acc, &hn1);
    if ctx.kind == Kind::B {
        acc = r.mul(&acc, &r.shifted(&hn1, &half(-1)));
    }
    Ok(acc)
}

/// `h_1(u + kappa - 1)^{-1} h_1(u + kappa)`, the factor relating `z(u)` to
/// the central series of `T^[1]`.
pub fn center_recursion_factor<S: FunctionRing>(g: &Gauss<S>) -> Result<S::Elem> {
    let r = &g.ring;
    let kap = &g.ctx.kappa;
    Ok(r.mul(&r.shifted(&g.h_inv(1)?, &(kap - &Rational::one())), &r.shifted(&g.h(1)?, kap)))
}

/// `h_1(u)^{-1} h_{n+1}(u)` written through shifted `kappa_i`.
pub fn telescoped_h1_hn1<S: FunctionRing>(ctx: &AlgebraContext, ring: &S, d: &Drinfeld<S::Elem>) -> S::Elem {
    let n = ctx.n;
    let mut acc = ring.one();
    for i in 1..=n {
        if ctx.kind == Kind::D && i == n - 1 {
            continue;
        }
        acc = ring.mul(&acc, &ring.shifted(d.kappa(i), &drinfeld_shift(ctx, i)));
    }
    acc
}

/// `h_1(u + kappa) h_{n+1}(u)` times the shifted `kappa_i` product that turns
/// it into `z(u)`.
pub fn center_from_kappa<S: FunctionRing>(g: &Gauss<S>, d: &Drinfeld<S::Elem>) -> Result<S::Elem> {
    let r = &g.ring;
    let ctx = &g.ctx;
    let n = ctx.n;
    let kap = &ctx.kappa;
    let mut acc = r.mul(&r.shifted(&g.h(1)?, kap), &g.h(n + 1)?);
    for i in 1..n {
        let c = kap - &half(i as i64 + 1);
        acc = r.mul(&acc, &r.shifted(d.kappa(i), &c));
    }
    if ctx.kind == Kind::B {
        acc = r.mul(&acc, &r.shifted(d.kappa(n), &half(n as i64 - 2)));
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gauss::GaussRoute;
    use crate::oracle::EvalAssignment;

    #[test]
    fn center_product_b1_oracle() {
        let ctx = AlgebraContext::new(Kind::B, 1, 4).unwrap();
        let ev = EvalAssignment::new(&ctx, Rational::zero());
        let ring = ev.exact_ring();
        let g = Gauss::new(ring.clone(), &ctx, ev.exact_t(), GaussRoute::Schur).unwrap();
        let (z, ok) = compute_center(&ring, &ctx, g.t_matrix()).unwrap();
        assert!(ok.is_pass(), "{ok:?}");
        assert_eq!(center_from_h(&g).unwrap(), z);
        let d = build_drinfeld(&g).unwrap();
        assert_eq!(center_from_kappa(&g, &d).unwrap(), z);
    }
}
