//! The rational R-matrix `R(u) = 1 - P/u + Q/(u - kappa)` and its identities.
//!
//! Identities between rational operator-valued functions are checked by
//! evaluation: after multiplying by a common denominator both sides are
//! polynomial of known degree in each variable, so agreement on a large
//! enough grid of non-pole points is a proof.

use crate::arith::Rational;
use crate::context::AlgebraContext;
use crate::error::{Error, Result};
use crate::report::Outcome;
use crate::tensor::{op_p, op_q, place_legs, SparseMat};

#[derive(Clone, Debug)]
pub struct RMatrix {
    pub ctx: AlgebraContext,
    p: SparseMat,
    q: Option<SparseMat>,
}

/// `P` and `Q` placed on a pair of legs of a three-fold tensor product.
#[derive(Clone, Debug)]
struct Legs3 {
    p: SparseMat,
    q: Option<SparseMat>,
}

impl RMatrix {
    pub fn new(ctx: &AlgebraContext) -> Self {
        RMatrix {
            ctx: ctx.clone(),
            p: op_p(ctx),
            q: ctx.has_q().then(|| op_q(ctx)),
        }
    }

    pub fn p(&self) -> &SparseMat {
        &self.p
    }

    pub fn q(&self) -> Option<&SparseMat> {
        self.q.as_ref()
    }

    fn dim2(&self) -> usize {
        self.ctx.size * self.ctx.size
    }

    /// Scalars `(a, b)` with `R(u) = 1 + a P + b Q`; fails at a pole.
    pub fn coefficients(&self, u: &Rational) -> Result<(Rational, Rational)> {
        if u.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let a = -u.recip()?;
        let b = if self.q.is_some() { (u - &self.ctx.kappa).recip()? } else { Rational::zero() };
        Ok((a, b))
    }

    /// `R(u)` on `C^N ⊗ C^N`.
    pub fn at(&self, u: &Rational) -> Result<SparseMat> {
        let (a, b) = self.coefficients(u)?;
        Ok(self.combine(&SparseMat::identity(self.dim2()), &self.p, self.q.as_ref(), &a, &b))
    }

    /// `(u - kappa) R(u)` at `u = 1`, i.e. `(1 - kappa)(1 - P) + Q`. This is a
    /// nonzero multiple of `R(1)` when `kappa != 1` and stays finite at `kappa = 1`.
    pub fn regularized_at_one(&self) -> SparseMat {
        let id = SparseMat::identity(self.dim2());
        match &self.q {
            None => id.sub(&self.p),
            Some(q) => {
                let c = Rational::one() - &self.ctx.kappa;
                id.sub(&self.p).scale(&c).add(q)
            }
        }
    }

    fn combine(&self, id: &SparseMat, p: &SparseMat, q: Option<&SparseMat>, a: &Rational, b: &Rational) -> SparseMat {
        let mut m = id.add(&p.scale(a));
        if let Some(q) = q {
            m = m.add(&q.scale(b));
        }
        m
    }

    fn legs3(&self, a: usize, b: usize) -> Result<Legs3> {
        let s = self.ctx.size;
        Ok(Legs3 {
            p: place_legs(&self.p, s, a, b, 3)?,
            q: match &self.q {
                Some(q) => Some(place_legs(q, s, a, b, 3)?),
                None => None,
            },
        })
    }

    fn at_legs(&self, legs: &Legs3, u: &Rational) -> Result<SparseMat> {
        let (a, b) = self.coefficients(u)?;
        let dim = self.ctx.size.pow(3);
        Ok(self.combine(&SparseMat::identity(dim), &legs.p, legs.q.as_ref(), &a, &b))
    }

    /// The two-leg operator `R(u)` placed on legs `(a, b)` of `(C^N)^{⊗3}`.
    pub fn at_on_legs(&self, u: &Rational, a: usize, b: usize) -> Result<SparseMat> {
        let legs = self.legs3(a, b)?;
        self.at_legs(&legs, u)
    }
}

/// Points with denominator 3 never hit the integer or half-integer poles.
fn grid(count: usize, base: i64, step: i64) -> Vec<Rational> {
    (0..count).map(|k| Rational::new(3 * (base + step * k as i64) + 1, 3)).collect()
}

fn describe_diff(label: &str, point: &str, lhs: &SparseMat, rhs: &SparseMat) -> Option<String> {
    lhs.first_difference(rhs).map(|(i, j, l, r)| format!("{label} at {point}: entry ({i},{j}) lhs={l} rhs={r}"))
}

/// `R12(u-v) R13(u) R23(v) = R23(v) R13(u) R12(u-v)`.
///
/// Cleared of the denominator `(u-v)(u-v-kappa) u(u-kappa) v(v-kappa)` each
/// side has degree at most 4 in `u` and in `v`, so a 5x5 grid decides it.
pub fn verify_ybe(ctx: &AlgebraContext) -> Result<Outcome> {
    let r = RMatrix::new(ctx);
    let (l12, l13, l23) = (r.legs3(1, 2)?, r.legs3(1, 3)?, r.legs3(2, 3)?);
    let us = grid(5, 100, 7);
    let vs = grid(5, 1, 2).into_iter().map(|v| &v - &Rational::new(2, 3)).collect::<Vec<_>>();
    for u in &us {
        for v in &vs {
            let w = u - v;
            let (a12, a13, a23) = (r.at_legs(&l12, &w)?, r.at_legs(&l13, u)?, r.at_legs(&l23, v)?);
            let lhs = a12.mul(&a13).mul(&a23);
            let rhs = a23.mul(&a13).mul(&a12);
            if let Some(w) = describe_diff("YBE", &format!("u={u}, v={v}"), &lhs, &rhs) {
                return Ok(Outcome::fail(w));
            }
        }
    }
    Ok(Outcome::pass())
}

/// `phi(u)` of the fusion identities, evaluated at a point.
fn fusion_phi(ctx: &AlgebraContext, u: &Rational) -> Result<Rational> {
    let one = Rational::one();
    if ctx.is_symplectic() {
        (u * &(u - &ctx.kappa - &one)).recip()
    } else {
        let c = &one - &Rational::new(4, ctx.size as i64);
        Ok(&c * &((u - &one) * (u - &ctx.kappa)).recip()?)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FusionSide {
    /// `R12(1) R13(u) R23(u-1) = R12(1) (..)`
    Direct,
    /// `R23(u-1) R13(u) R12(1) = (..) R12(1)`
    Opposite,
}

/// Both fusion identities for `v = u - 1`. `R12(1)` is replaced by
/// [`RMatrix::regularized_at_one`], which makes the identity meaningful for
/// `kappa = 1` as well; for other `kappa` it is a scalar multiple.
///
/// With denominator `u(u-1)(u-kappa)(u-kappa-1)` both sides are polynomials
/// of degree at most 4 in `u`; 7 points are used.
pub fn verify_fusion(ctx: &AlgebraContext, side: FusionSide) -> Result<Outcome> {
    if !ctx.has_q() {
        return Err(Error::UnsupportedOperator("fusion identities need the Q operator".into()));
    }
    let r = RMatrix::new(ctx);
    let s = ctx.size;
    let place = |m: &SparseMat, a, b| place_legs(m, s, a, b, 3);
    let (p, q) = (r.p().clone(), r.q().expect("has q").clone());
    let (p13, p23, q12, q13, q23) =
        (place(&p, 1, 3)?, place(&p, 2, 3)?, place(&q, 1, 2)?, place(&q, 1, 3)?, place(&q, 2, 3)?);
    let r12 = place(&r.regularized_at_one(), 1, 2)?;
    let (l13, l23) = (r.legs3(1, 3)?, r.legs3(2, 3)?);
    let id = SparseMat::identity(s * s * s);
    let one = Rational::one();
    let (pq_mixed, qp_mixed) = match side {
        FusionSide::Direct => (p23.mul(&q12), p13.mul(&q23)),
        FusionSide::Opposite => (q12.mul(&p23), q23.mul(&p13)),
    };
    for u in grid(7, 10, 5) {
        let um1 = &u - &one;
        let a = (&u - &one).recip()?;
        let b = (&u - &ctx.kappa).recip()?;
        let phi = fusion_phi(ctx, &u)?;
        let bracket = id
            .sub(&p13.add(&p23).scale(&a))
            .add(&q13.add(&q23).scale(&b))
            .sub(&pq_mixed.scale(&(&a * &b)))
            .sub(&qp_mixed.scale(&phi));
        let (r13, r23) = (r.at_legs(&l13, &u)?, r.at_legs(&l23, &um1)?);
        let (lhs, rhs) = match side {
            FusionSide::Direct => (r12.mul(&r13).mul(&r23), r12.mul(&bracket)),
            FusionSide::Opposite => (r23.mul(&r13).mul(&r12), bracket.mul(&r12)),
        };
        if let Some(w) = describe_diff("fusion", &format!("u={u}"), &lhs, &rhs) {
            return Ok(Outcome::fail(w));
        }
    }
    Ok(Outcome::pass())
}

/// `R12(1)` is fixed by left and right multiplication with
/// `(1-P)/2 + Q/N` (orthogonal) or `(1-P)/2` (symplectic).
pub fn verify_projector(ctx: &AlgebraContext) -> Result<Outcome> {
    if !ctx.has_q() {
        return Err(Error::UnsupportedOperator("projector identity needs the Q operator".into()));
    }
    let r = RMatrix::new(ctx);
    let nn = ctx.size * ctx.size;
    let half = Rational::new(1, 2);
    let mut proj = SparseMat::identity(nn).sub(r.p()).scale(&half);
    if !ctx.is_symplectic() {
        proj = proj.add(&r.q().expect("has q").scale(&Rational::new(1, ctx.size as i64)));
    }
    let r1 = r.regularized_at_one();
    if let Some(w) = describe_diff("left projector", "u=1", &proj.mul(&r1), &r1) {
        return Ok(Outcome::fail(w));
    }
    if let Some(w) = describe_diff("right projector", "u=1", &r1.mul(&proj), &r1) {
        return Ok(Outcome::fail(w));
    }
    Ok(Outcome::pass())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::context::Kind;

    #[test]
    fn poles_are_reported() {
        let ctx = AlgebraContext::new(Kind::C, 1, 3).unwrap();
        let r = RMatrix::new(&ctx);
        assert!(r.at(&Rational::zero()).is_err());
        assert!(r.at(&ctx.kappa).is_err());
        assert!(r.at(&Rational::new(1, 2)).is_ok());
    }

    #[test]
    fn small_ybe_and_fusion() {
        let ctx = AlgebraContext::new(Kind::B, 1, 3).unwrap();
        assert!(verify_ybe(&ctx).unwrap().is_pass());
        assert!(verify_fusion(&ctx, FusionSide::Direct).unwrap().is_pass());
        assert!(verify_fusion(&ctx, FusionSide::Opposite).unwrap().is_pass());
        assert!(verify_projector(&ctx).unwrap().is_pass());
    }

    #[test]
    fn wrong_sign_breaks_ybe() {
        // R(u) = 1 + P/u is not a solution once Q is present.
        let ctx = AlgebraContext::new(Kind::B, 1, 3).unwrap();
        let r = RMatrix::new(&ctx);
        let bad = |u: &Rational| -> SparseMat {
            let (_, b) = r.coefficients(u).unwrap();
            SparseMat::identity(9).add(&r.p().scale(&u.recip().unwrap())).add(&r.q().unwrap().scale(&b))
        };
        let (u, v) = (Rational::new(7, 3), Rational::new(2, 5));
        let s = 3;
        let pl = |m: SparseMat, a, b| place_legs(&m, s, a, b, 3).unwrap();
        let lhs = pl(bad(&(&u - &v)), 1, 2).mul(&pl(bad(&u), 1, 3)).mul(&pl(bad(&v), 2, 3));
        let rhs = pl(bad(&v), 2, 3).mul(&pl(bad(&u), 1, 3)).mul(&pl(bad(&(&u - &v)), 1, 2));
        assert_ne!(lhs, rhs);
    }
}
