//! Algebra maps on generator series: the automorphisms `mu_f` and `sigma`,
//! and the low-rank isomorphisms onto (tensor products of) `Y(gl_2)`.

use std::sync::Arc;

use crate::arith::Rational;
use crate::context::{AlgebraContext, Kind};
use crate::drinfeld::compute_center;
use crate::error::{Error, Result};
use crate::gauss::{Gauss, GaussRoute};
use crate::identities::{mu_f_invariance, rtt_series, same, sigma_matrix};
use crate::nc::{Gen, NcPoly, XAlgebra};
use crate::oracle::verify_rtt_exact;
use crate::report::Outcome;
use crate::ring::{Ring, RingMatrix};
use crate::series::{FunctionRing, SeriesRing, USeries};
use crate::workspace::{abstract_t, exact_gauss, AbstractWorkspace, Workspace};
use crate::{Poly, RationalFunction};

/// Image of `p` under the algebra map sending each generator `g` to `image(g)`.
pub fn substitute(alg: &XAlgebra, p: &NcPoly, image: &dyn Fn(Gen) -> Result<NcPoly>) -> Result<NcPoly> {
    let mut out = NcPoly::zero();
    for (w, c) in p.iter() {
        let mut acc = NcPoly::constant(c.clone());
        for g in w.iter() {
            acc = alg.mul(&acc, &image(*g)?);
        }
        out.add_scaled(&acc, &Rational::one());
    }
    Ok(out)
}

/// `sigma(sigma(t_ij^(r))) = t_ij^(r)` for all `i, j` and `r <= K`.
pub fn sigma_involution_abstract(ctx: &AlgebraContext) -> Result<Outcome> {
    let alg = Arc::new(XAlgebra::new(ctx));
    let ring = SeriesRing::new(alg.clone(), ctx.order);
    let t = abstract_t(&alg, 0)?;
    let s = sigma_matrix(&ring, &t)?;
    let image = |g: Gen| -> Result<NcPoly> {
        if g.is_central() || g.order() > ctx.order {
            return Err(Error::IndexOutOfRange(format!("no image for {g:?}")));
        }
        Ok(s.get(g.i() - 1, g.j() - 1).coeff(g.order()).clone())
    };
    for i in 1..=ctx.size {
        for j in 1..=ctx.size {
            let c0 = s.get(i - 1, j - 1).coeff(0);
            if *c0 != alg.from_rational(&Rational::from_int(i64::from(i == j))) {
                return Ok(Outcome::fail(format!("constant term of sigma(t_{i}{j}) is {}", alg.render(c0))));
            }
            for r in 1..=ctx.order {
                let twice = substitute(&alg, s.get(i - 1, j - 1).coeff(r), &image)?;
                let d = alg.sub(&twice, &alg.t(0, i, j, r)?);
                if !d.is_zero() {
                    return Ok(Outcome::fail(format!("sigma^2(t_{i}{j}^({r})) - t_{i}{j}^({r}) = {}", alg.render(&d))));
                }
            }
        }
    }
    Ok(Outcome::pass())
}

/// On the evaluation images: `sigma^2(T) = T` exactly, and `sigma(T)` again
/// satisfies the defining relations.
pub fn sigma_involution_oracle(ctx: &AlgebraContext) -> Result<Outcome> {
    let g = exact_gauss(ctx, Rational::zero())?;
    let s = sigma_matrix(&g.ring, g.t_matrix())?;
    let s2 = sigma_matrix(&g.ring, &s)?;
    for i in 0..ctx.size {
        for j in 0..ctx.size {
            let o = same(&g.ring, s2.get(i, j), g.t(i + 1, j + 1), &format!("sigma^2(t_{}{})", i + 1, j + 1));
            if !o.is_pass() {
                return Ok(o);
            }
        }
    }
    verify_rtt_exact(ctx, &s)
}

/// `mu_f` with `f(u) = 1 + f1 u^-1 + f2 u^-2`, `f1`, `f2` free central symbols.
pub fn mu_f_abstract(ctx: &AlgebraContext) -> Result<Outcome> {
    let alg = Arc::new(XAlgebra::builder().component(ctx).central("f1").central("f2").build()?);
    let ws = AbstractWorkspace::with_algebra(alg.clone(), 0)?;
    let mut c = vec![alg.one(), alg.central("f1")?, alg.central("f2")?];
    c.resize(ctx.order + 1, alg.zero());
    c.truncate(ctx.order + 1);
    mu_f_invariance(&ws.gauss, &USeries::new(c))
}

/// `mu_f` with `f(u) = (u + 2)(u - 1/3) / ((u - 1)(u + 1/2))` on the exact evaluation images.
pub fn mu_f_oracle(ctx: &AlgebraContext) -> Result<Outcome> {
    let g = exact_gauss(ctx, Rational::zero())?;
    let lin = |a: Rational| Poly::linear_root(&a);
    let num = &lin(Rational::from_int(-2)) * &lin(Rational::new(1, 3));
    let den = &lin(Rational::one()) * &lin(Rational::new(-1, 2));
    let f = RationalFunction::new(num, den)?;
    let n = ctx.size;
    let fm = RingMatrix::from_fn(n, n, |i, j| if i == j { f.clone() } else { RationalFunction::zero() });
    mu_f_invariance(&g, &fm)
}

/// The three low-rank isomorphisms of extended Yangians onto `Y(gl_2)` or
/// `Y(gl_2) ⊗ Y(gl_2)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LowRank {
    C1,
    B1,
    D2,
}

impl LowRank {
    pub const ALL: [LowRank; 3] = [LowRank::B1, LowRank::C1, LowRank::D2];

    pub fn key(self) -> &'static str {
        match self {
            LowRank::C1 => "c1",
            LowRank::B1 => "b1",
            LowRank::D2 => "d2",
        }
    }

    pub fn source(self, order: usize) -> Result<AlgebraContext> {
        match self {
            LowRank::C1 => AlgebraContext::new(Kind::C, 1, order),
            LowRank::B1 => AlgebraContext::new(Kind::B, 1, order),
            LowRank::D2 => AlgebraContext::new(Kind::D, 2, order),
        }
    }
}

/// Name of the adjoined square root of 2.
pub const SQRT2: &str = "s";

/// Gaussian generators `H_1, H_2, E_12, F_21` of one `Y(gl_2)` factor.
struct Gl2<E> {
    h1: E,
    h2: E,
    e: E,
    f: E,
}

fn gl2_factor(alg: &Arc<XAlgebra>, tag: u8) -> Result<Gl2<USeries<NcPoly>>> {
    let ctx = alg.component(tag).clone();
    let ring = SeriesRing::new(alg.clone(), ctx.order);
    let g = Gauss::new(ring, &ctx, abstract_t(alg, tag)?, GaussRoute::Quasideterminant)?;
    Ok(Gl2 { h1: g.h(1)?, h2: g.h(2)?, e: g.e(1, 2)?, f: g.f(2, 1)? })
}

/// `F H E` from lower, diagonal and upper Gauss factors (1-based maps).
fn compose_fhe<S: Ring>(ring: &S, n: usize, h: &[S::Elem], e: &dyn Fn(usize, usize) -> S::Elem, f: &dyn Fn(usize, usize) -> S::Elem) -> RingMatrix<S::Elem> {
    RingMatrix::from_fn(n, n, |i, j| {
        let (i, j) = (i + 1, j + 1);
        let mut acc = ring.zero();
        for k in 1..=i.min(j) {
            let mut x = h[k - 1].clone();
            if k < i {
                x = ring.mul(&f(i, k), &x);
            }
            if k < j {
                x = ring.mul(&x, &e(k, j));
            }
            acc = ring.add(&acc, &x);
        }
        acc
    })
}

/// Image of the generator matrix of the source algebra under the low-rank
/// map, as a workspace whose base ring is the target algebra.
pub fn lowrank_workspace(which: LowRank, order: usize) -> Result<Workspace<Arc<XAlgebra>>> {
    let src = which.source(order)?;
    let gl2 = AlgebraContext::new(Kind::A, 2, order)?;
    let mut b = XAlgebra::builder().component(&gl2);
    b = match which {
        LowRank::C1 => b,
        LowRank::B1 => b.square_root(SQRT2, Rational::from_int(2)),
        LowRank::D2 => b.component(&gl2),
    };
    let alg = Arc::new(b.build()?);
    let ring = SeriesRing::new(alg.clone(), order);
    let a = gl2_factor(&alg, 0)?;
    let n = src.size;
    let zero = ring.zero();
    let t = match which {
        LowRank::C1 => {
            let half = Rational::new(1, 2);
            let sc = |x: &USeries<NcPoly>| ring.scaled(x, &half);
            let h = [sc(&a.h1)?, sc(&a.h2)?];
            let (e, f) = (sc(&a.e)?, sc(&a.f)?);
            compose_fhe(&ring, n, &h, &|_, _| e.clone(), &|_, _| f.clone())
        }
        LowRank::B1 => {
            let two = Rational::from_int(2);
            let one = Rational::one();
            // X(2u) and X(2u+1)
            let at = |x: &USeries<NcPoly>| ring.scaled(x, &two);
            let at1 = |x: &USeries<NcPoly>| ring.scaled(&ring.shifted(x, &one), &two);
            let s = ring.constant(alg.central(SQRT2)?);
            let h = [
                ring.mul(&at(&a.h1)?, &at1(&a.h1)?),
                ring.mul(&at(&a.h1)?, &at1(&a.h2)?),
                ring.mul(&at(&a.h2)?, &at1(&a.h2)?),
            ];
            let (e0, e1) = (at(&a.e)?, at1(&a.e)?);
            let (f0, f1) = (at(&a.f)?, at1(&a.f)?);
            let e12 = ring.mul(&s, &e1);
            let e23 = ring.neg(&ring.mul(&s, &e0));
            let e13 = ring.neg(&ring.mul(&e1, &e1));
            let f21 = ring.mul(&s, &f1);
            let f32 = ring.neg(&ring.mul(&s, &f0));
            let f31 = ring.neg(&ring.mul(&f1, &f1));
            let e = move |i: usize, j: usize| match (i, j) {
                (1, 2) => e12.clone(),
                (2, 3) => e23.clone(),
                _ => e13.clone(),
            };
            let f = move |j: usize, i: usize| match (j, i) {
                (2, 1) => f21.clone(),
                (3, 2) => f32.clone(),
                _ => f31.clone(),
            };
            compose_fhe(&ring, n, &h, &e, &f)
        }
        LowRank::D2 => {
            let b2 = gl2_factor(&alg, 1)?;
            // indices 1, 2, 2' = 3, 1' = 4
            let h = [ring.mul(&a.h1, &b2.h1), ring.mul(&a.h1, &b2.h2), ring.mul(&a.h2, &b2.h1), ring.mul(&a.h2, &b2.h2)];
            let e = |i: usize, j: usize| match (i, j) {
                (1, 2) => b2.e.clone(),
                (1, 3) => a.e.clone(),
                (1, 4) => ring.neg(&ring.mul(&a.e, &b2.e)),
                (2, 4) => ring.neg(&a.e),
                (3, 4) => ring.neg(&b2.e),
                _ => zero.clone(),
            };
            let f = |j: usize, i: usize| match (j, i) {
                (2, 1) => b2.f.clone(),
                (3, 1) => a.f.clone(),
                (4, 1) => ring.neg(&ring.mul(&a.f, &b2.f)),
                (4, 2) => ring.neg(&a.f),
                (4, 3) => ring.neg(&b2.f),
                _ => zero.clone(),
            };
            compose_fhe(&ring, n, &h, &e, &f)
        }
    };
    Workspace::from_matrix(alg, &src, t)
}

/// The image of `T(u)` satisfies the defining relations of the source algebra.
pub fn lowrank_rtt(ws: &Workspace<Arc<XAlgebra>>) -> Result<Outcome> {
    rtt_series(ws.base(), &ws.ctx, ws.gauss.t_matrix(), ws.order())
}

fn odd_in(p: &NcPoly, s: Gen) -> bool {
    p.iter().any(|(w, _)| w.iter().filter(|g| **g == s).count() % 2 == 1)
}

/// No odd power of the adjoined square root survives in the images of
/// `h_i(u)` and of the central series `z(u)`.
pub fn sqrt2_parity(ws: &Workspace<Arc<XAlgebra>>) -> Result<Outcome> {
    let alg = ws.algebra();
    let Some(s) = alg.central_symbol(SQRT2) else {
        return Ok(Outcome::skip("no square root adjoined"));
    };
    let (z, ok) = compute_center(ws.ring(), &ws.ctx, ws.gauss.t_matrix())?;
    if !ok.is_pass() {
        return Ok(ok);
    }
    let mut series = vec![("z".to_string(), z)];
    for i in 1..=ws.ctx.size {
        series.push((format!("h_{i}"), ws.gauss.h(i)?));
    }
    for (name, x) in &series {
        for r in 0..=x.order() {
            if odd_in(x.coeff(r), s) {
                return Ok(Outcome::fail(format!("odd power of sqrt(2) in {name}^({r}): {}", alg.render(x.coeff(r)))));
            }
        }
    }
    Ok(Outcome::pass())
}


#[cfg(test)]
mod tests {
    use super::*;
    use crate::relations::{check_drinfeld, check_gauss, drinfeld_instances, gauss_instances, DRINFELD_FAMILIES, GAUSS_FAMILIES};

    #[test]
    fn sigma_is_an_involution() {
        for (k, n) in [(Kind::B, 1), (Kind::C, 1), (Kind::D, 2), (Kind::A, 2)] {
            let ctx = AlgebraContext::new(k, n, 3).unwrap();
            assert!(sigma_involution_abstract(&ctx).unwrap().is_pass(), "{}", ctx.label());
        }
        let ctx = AlgebraContext::new(Kind::C, 2, 3).unwrap();
        assert!(sigma_involution_oracle(&ctx).unwrap().is_pass());
    }

    #[test]
    fn mu_f_leaves_drinfeld_series() {
        let ctx = AlgebraContext::new(Kind::B, 1, 3).unwrap();
        assert!(mu_f_abstract(&ctx).unwrap().is_pass());
        let ctx = AlgebraContext::new(Kind::D, 3, 3).unwrap();
        assert!(mu_f_oracle(&ctx).unwrap().is_pass());
    }

    #[test]
    fn lowrank_maps_are_homomorphisms() {
        for which in LowRank::ALL {
            let ws = lowrank_workspace(which, 3).unwrap();
            let o = lowrank_rtt(&ws).unwrap();
            assert!(o.is_pass(), "{which:?}: {o:?}");
            assert!(sqrt2_parity(&ws).unwrap().status != crate::Status::Fail);
            for fam in GAUSS_FAMILIES {
                for idx in gauss_instances(&ws.ctx, fam).unwrap() {
                    let o = check_gauss(&ws, fam, &idx).unwrap();
                    assert!(o.is_pass() || o.status == crate::Status::Skip, "{which:?} {fam} {idx:?}: {o:?}");
                }
            }
            for fam in DRINFELD_FAMILIES {
                for idx in drinfeld_instances(&ws.ctx, fam).unwrap() {
                    let o = check_drinfeld(&ws, fam, &idx).unwrap();
                    assert!(o.is_pass() || o.status == crate::Status::Skip, "{which:?} {fam} {idx:?}: {o:?}");
                }
            }
        }
    }

    #[test]
    fn wrong_sign_breaks_b1() {
        // flipping the sign of e_23 is not a homomorphism
        let ws = lowrank_workspace(LowRank::B1, 3).unwrap();
        let ring = ws.ring();
        let mut t = ws.gauss.t_matrix().clone();
        let x = t.get(1, 2).clone();
        t.set(1, 2, ring.neg(&x));
        assert_eq!(rtt_series(ws.base(), &ws.ctx, &t, 3).unwrap().status, crate::Status::Fail);
    }
}
