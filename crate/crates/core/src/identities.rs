//! Univariate identities (center, symmetries, embeddings) over any ring of
//! functions of `u`, and the bivariate commutation checks that go with them.

use crate::arith::Rational;
use crate::context::{AlgebraContext, Kind};
use crate::drinfeld::{
    build_drinfeld, center_from_h, center_from_kappa, center_recursion_factor, compute_center, drinfeld_shift,
    simple_e, simple_f, telescoped_h1_hn1, Drinfeld,
};
use crate::error::{Error, Result};
use crate::gauss::{quantum_minor, tau, Gauss, GaussRoute};
use crate::relations::bi_outcome;
use crate::report::Outcome;
use crate::ring::{Ring, RingMatrix};
use crate::series::{BiRing, BiSeries, FunctionRing, USeries};

/// Pass iff `a == b`.
pub fn same<S: Ring>(ring: &S, a: &S::Elem, b: &S::Elem, label: &str) -> Outcome {
    let d = ring.sub(a, b);
    if ring.is_zero(&d) {
        Outcome::pass()
    } else {
        Outcome::fail(format!("{label}: difference {}", ring.describe(&d)))
    }
}

fn first_failure(items: impl IntoIterator<Item = Result<Outcome>>) -> Result<Outcome> {
    for o in items {
        let o = o?;
        if !o.is_pass() {
            return Ok(o);
        }
    }
    Ok(Outcome::pass())
}

pub fn center_scalar<S: FunctionRing>(g: &Gauss<S>) -> Result<Outcome> {
    Ok(compute_center(&g.ring, &g.ctx, g.t_matrix())?.1)
}

/// `[z^(r), t_ij^(s)] = 0` in the abstract algebra for `r + s <= max_total`.
pub fn center_central(ws: &crate::workspace::AbstractWorkspace, max_total: usize) -> Result<Outcome> {
    let alg = ws.algebra();
    let (z, ok) = compute_center(ws.ring(), &ws.ctx, ws.gauss.t_matrix())?;
    if !ok.is_pass() {
        return Ok(ok);
    }
    let n = ws.ctx.size;
    for r in 1..=z.order().min(max_total.saturating_sub(1)) {
        for s in 1..=max_total - r {
            for i in 1..=n {
                for j in 1..=n {
                    let c = alg.commutator(z.coeff(r), &alg.t(0, i, j, s)?);
                    if !c.is_zero() {
                        return Ok(Outcome::fail(format!("[z^({r}), t_{i}{j}^({s})] = {}", alg.render(&c))));
                    }
                }
            }
        }
    }
    Ok(Outcome::pass())
}

pub fn center_product<S: FunctionRing>(g: &Gauss<S>) -> Result<Outcome> {
    let (z, ok) = compute_center(&g.ring, &g.ctx, g.t_matrix())?;
    if !ok.is_pass() {
        return Ok(ok);
    }
    Ok(same(&g.ring, &z, &center_from_h(g)?, "z(u) against the product of shifted h_i"))
}

pub fn center_kappa<S: FunctionRing>(g: &Gauss<S>) -> Result<Outcome> {
    let (z, _) = compute_center(&g.ring, &g.ctx, g.t_matrix())?;
    let d = build_drinfeld(g)?;
    Ok(same(&g.ring, &z, &center_from_kappa(g, &d)?, "z(u) against h_1(u+kappa) h_{n+1}(u) times kappa factors"))
}

/// `z(u) = h_1(u+kappa-1)^{-1} h_1(u+kappa) z^[1](u)`, with `z^[1]` the central
/// series of `T^[1]` for the algebra two sizes down.
pub fn center_recursion<S: FunctionRing>(g: &Gauss<S>) -> Result<Outcome>
where
    S: Clone,
{
    let sub = g.ctx.sub_context(1)?;
    let (z, ok) = compute_center(&g.ring, &g.ctx, g.t_matrix())?;
    if !ok.is_pass() {
        return Ok(ok);
    }
    let (z1, ok1) = compute_center(&g.ring, &sub, &g.sub_t(1)?)?;
    if !ok1.is_pass() {
        return Ok(ok1);
    }
    let rhs = g.ring.mul(&center_recursion_factor(g)?, &z1);
    Ok(same(&g.ring, &z, &rhs, "z(u) against h_1(u+kappa-1)^-1 h_1(u+kappa) z^[1](u)"))
}

/// `h_1(u)^{-1} h_{n+1}(u)` (and in type D also `h_1^{-1} h_n`) through shifted `kappa_i`.
pub fn kappa_telescoping<S: FunctionRing>(g: &Gauss<S>) -> Result<Outcome> {
    let r = &g.ring;
    let ctx = &g.ctx;
    let n = ctx.n;
    let d = build_drinfeld(g)?;
    let lhs = r.mul(&g.h_inv(1)?, &g.h(n + 1)?);
    let o = same(r, &lhs, &telescoped_h1_hn1(ctx, r, &d), "h_1^-1 h_{n+1} against shifted kappa product");
    if !o.is_pass() || ctx.kind != Kind::D {
        return Ok(o);
    }
    let mut acc = r.one();
    for i in 1..n {
        acc = r.mul(&acc, &r.shifted(d.kappa(i), &drinfeld_shift(ctx, i)));
    }
    Ok(same(r, &r.mul(&g.h_inv(1)?, &g.h(n)?), &acc, "h_1^-1 h_n against shifted kappa product"))
}

/// Reflection symmetries of the Gaussian generators. For `i < n`:
/// `e_{(i+1)' i'}(u) = -e_i(u + kappa - i)`; for `i = n`, type B:
/// `e_{n+1, n+2}(u) = -e_n(u - 1/2)`, type D: `e_{n, (n-1)'}(u) = -e_n(u)`.
/// With `upper = false` the same for `f` with transposed indices.
pub fn reflection<S: FunctionRing>(g: &Gauss<S>, i: usize, upper: bool) -> Result<Outcome> {
    let ctx = &g.ctx;
    let n = ctx.n;
    let r = &g.ring;
    let (a, b, c) = if i < n {
        (ctx.prime(i + 1), ctx.prime(i), &ctx.kappa - &Rational::from(i))
    } else if i == n && ctx.kind == Kind::B {
        (n + 1, n + 2, Rational::new(-1, 2))
    } else if i == n && ctx.kind == Kind::D {
        (n, ctx.prime(n - 1), Rational::zero())
    } else {
        return Err(Error::IndexOutOfRange(format!("no reflection identity for i = {i} in {}", ctx.label())));
    };
    let (lhs, x) = if upper { (g.e(a, b)?, simple_e(g, i)?) } else { (g.f(b, a)?, simple_f(g, i)?) };
    let rhs = r.neg(&r.shifted(&x, &c));
    Ok(same(r, &lhs, &rhs, &format!("{}_{a}{b} reflection", if upper { "e" } else { "f" })))
}

/// `h_i(u) e_i(u) = e_i(u-1) h_i(u)` or `h_i(u) f_i(u-1) = f_i(u) h_i(u)`, `i < n`.
pub fn h_exchange<S: FunctionRing>(g: &Gauss<S>, i: usize, upper: bool) -> Result<Outcome> {
    if i >= g.ctx.n {
        return Err(Error::IndexOutOfRange(format!("exchange identity needs i < n, got {i}")));
    }
    let r = &g.ring;
    let h = g.h(i)?;
    let m1 = Rational::from_int(-1);
    if upper {
        let e = simple_e(g, i)?;
        Ok(same(r, &r.mul(&h, &e), &r.mul(&r.shifted(&e, &m1), &h), "h_i(u)e_i(u) against e_i(u-1)h_i(u)"))
    } else {
        let f = simple_f(g, i)?;
        Ok(same(r, &r.mul(&h, &r.shifted(&f, &m1)), &r.mul(&f, &h), "h_i(u)f_i(u-1) against f_i(u)h_i(u)"))
    }
}

/// Boxed `(m+1)`-quasideterminant against `t^{1..m}_{1..m}(u+m)^{-1} t^{1..m i}_{1..m j}(u+m)`.
pub fn quasidet_minor<S: FunctionRing>(g: &Gauss<S>, m: usize, i: usize, j: usize) -> Result<Outcome> {
    let r = &g.ring;
    let n = g.size();
    if m == 0 || i <= m || j <= m || i > n - m || j > n - m {
        return Err(Error::IndexOutOfRange(format!("quasideterminant ({i},{j}) with m = {m}")));
    }
    let lhs = g.sub_t(m)?.get(i - m - 1, j - m - 1).clone();
    let lead: Vec<usize> = (1..=m).collect();
    let mut rows = lead.clone();
    rows.push(i);
    let mut cols = lead.clone();
    cols.push(j);
    let c = Rational::from(m);
    let den = r.shifted(&quantum_minor(r, g.t_matrix(), &lead, &lead)?, &c);
    let num = r.shifted(&quantum_minor(r, g.t_matrix(), &rows, &cols)?, &c);
    let rhs = r.mul(&r.try_inverse(&den)?, &num);
    Ok(same(r, &lhs, &rhs, &format!("quasideterminant ({i},{j}), m = {m}")))
}

/// The Gauss data of `T^[m]` are the entries of the Gauss data of `T` with
/// indices `m+1..N-m`.
pub fn sub_gauss<S: FunctionRing + Clone>(g: &Gauss<S>, m: usize) -> Result<Outcome> {
    let sub = g.ctx.sub_context(m)?;
    let gs = Gauss::new(g.ring.clone(), &sub, g.sub_t(m)?, GaussRoute::Quasideterminant)?;
    let r = &g.ring;
    let k = sub.size;
    for a in 1..=k {
        let o = same(r, &gs.h(a)?, &g.h(a + m)?, &format!("h_{a} of T^[{m}]"));
        if !o.is_pass() {
            return Ok(o);
        }
        for b in a + 1..=k {
            let o = same(r, &gs.e(a, b)?, &g.e(a + m, b + m)?, &format!("e_{a}{b} of T^[{m}]"))
                .and(|| same(r, &gs.f(b, a).unwrap_or_else(|_| r.zero()), &g.f(b + m, a + m).unwrap_or_else(|_| r.zero()), &format!("f_{b}{a} of T^[{m}]")));
            if !o.is_pass() {
                return Ok(o);
            }
        }
    }
    Ok(Outcome::pass())
}

/// `(T^[l])^[m] = T^[l+m]`, entry by entry.
pub fn psi_consistency<S: FunctionRing + Clone>(g: &Gauss<S>, l: usize, m: usize) -> Result<Outcome> {
    let sub = g.ctx.sub_context(l)?;
    let inner = Gauss::new(g.ring.clone(), &sub, g.sub_t(l)?, GaussRoute::Quasideterminant)?;
    let lhs = inner.sub_t(m)?;
    let rhs = g.sub_t(l + m)?;
    for a in 0..lhs.rows() {
        for b in 0..lhs.cols() {
            let o = same(&g.ring, lhs.get(a, b), rhs.get(a, b), &format!("entry ({},{})", a + l + m + 1, b + l + m + 1));
            if !o.is_pass() {
                return Ok(o);
            }
        }
    }
    Ok(Outcome::pass())
}

fn tau_or_skip<S: FunctionRing>(g: &Gauss<S>, a: (usize, usize), b: (usize, usize)) -> Result<Option<S::Elem>> {
    match tau(&g.ring, &g.ctx, g.t_matrix(), a, b) {
        Ok(x) => Ok(Some(x)),
        Err(Error::DivisionByZero) => Ok(None),
        Err(e) => Err(e),
    }
}

/// Skew-symmetry of `tau^{a1 a2}_{b1 b2}` in the upper (`upper = true`) or
/// lower indices, over all index tuples allowed for the type (all tuples in
/// the symplectic case). Entries undefined because `R(1)` has a pole are skipped.
pub fn tau_skew<S: FunctionRing>(g: &Gauss<S>, upper: bool) -> Result<Outcome> {
    let ctx = &g.ctx;
    let n = ctx.size;
    let r = &g.ring;
    for a1 in 1..=n {
        for a2 in 1..=n {
            for b1 in 1..=n {
                for b2 in 1..=n {
                    let (x, y) = if upper { (a1, a2) } else { (b1, b2) };
                    if x >= y || (!ctx.is_symplectic() && x == ctx.prime(y)) {
                        continue;
                    }
                    let swapped = if upper { ((a2, a1), (b1, b2)) } else { ((a1, a2), (b2, b1)) };
                    let (Some(p), Some(q)) = (tau_or_skip(g, (a1, a2), (b1, b2))?, tau_or_skip(g, swapped.0, swapped.1)?) else {
                        continue;
                    };
                    let s = r.add(&p, &q);
                    if !r.is_zero(&s) {
                        return Ok(Outcome::fail(format!("tau^{a1}{a2}_{b1}{b2} + swapped: {}", r.describe(&s))));
                    }
                }
            }
        }
    }
    Ok(Outcome::pass())
}

/// `s_ij(u) = t_11(u+1)^{-1} tau^{1i}_{1j}(u+1)` for `2 <= i, j <= 2'`.
pub fn tau_quasidet<S: FunctionRing>(g: &Gauss<S>) -> Result<Outcome> {
    let r = &g.ring;
    let n = g.size();
    let s = g.sub_t(1)?;
    let one = Rational::one();
    let t11 = r.shifted(g.t(1, 1), &one);
    let t11_inv = r.try_inverse(&t11)?;
    first_failure((2..n).flat_map(|i| (2..n).map(move |j| (i, j))).map(|(i, j)| {
        let tij = tau(r, &g.ctx, g.t_matrix(), (1, i), (1, j))?;
        let rhs = r.mul(&t11_inv, &r.shifted(&tij, &one));
        Ok(same(r, s.get(i - 2, j - 2), &rhs, &format!("s_{i}{j}")))
    }))
}

/// `T(u) -> f(u) T(u)` leaves `kappa_i` and `xi_i^{+-}` unchanged and
/// multiplies `z(u)` by `f(u + kappa) f(u)`.
pub fn mu_f_invariance<S: FunctionRing + Clone>(g: &Gauss<S>, f: &S::Elem) -> Result<Outcome> {
    let r = &g.ring;
    let t = g.t_matrix();
    let scaled = t.map(|x| r.mul(f, x));
    let gf = Gauss::new(r.clone(), &g.ctx, scaled, GaussRoute::Quasideterminant)?;
    let (d, df): (Drinfeld<S::Elem>, Drinfeld<S::Elem>) = (build_drinfeld(g)?, build_drinfeld(&gf)?);
    for i in 0..d.kappa.len() {
        let o = same(r, &d.kappa[i], &df.kappa[i], &format!("kappa_{}", i + 1))
            .and(|| same(r, &d.xi_plus[i], &df.xi_plus[i], &format!("xi+_{}", i + 1)))
            .and(|| same(r, &d.xi_minus[i], &df.xi_minus[i], &format!("xi-_{}", i + 1)));
        if !o.is_pass() {
            return Ok(o);
        }
    }
    let (z, _) = compute_center(r, &g.ctx, t)?;
    let (zf, ok) = compute_center(r, &g.ctx, gf.t_matrix())?;
    if !ok.is_pass() {
        return Ok(ok);
    }
    let want = r.mul(&r.mul(&r.shifted(f, &g.ctx.kappa), f), &z);
    Ok(same(r, &zf, &want, "z(u) under mu_f"))
}

/// `T(-u)^{-1}`.
pub fn sigma_matrix<S: FunctionRing>(ring: &S, t: &RingMatrix<S::Elem>) -> Result<RingMatrix<S::Elem>> {
    let inv = ring.invert_matrix(t)?;
    let m1 = Rational::from_int(-1);
    let entries: Result<Vec<_>> = inv.entries().iter().map(|x| ring.scaled(x, &m1)).collect();
    let entries = entries?;
    Ok(RingMatrix::from_fn(t.rows(), t.cols(), |i, j| entries[i * t.cols() + j].clone()))
}

/// `(u - v - c) X`.
pub fn mul_linear<R: Ring>(bi: &BiRing<R>, x: &BiSeries<R::Elem>, c: &Rational) -> BiSeries<R::Elem> {
    let a = bi.sub(&bi.shift_exponents(x, -1, 0), &bi.shift_exponents(x, 0, -1));
    if c.is_zero() {
        a
    } else {
        bi.sub(&a, &bi.scale(x, c))
    }
}

/// The defining relations of `X(g)` for `aux`, multiplied out by
/// `(u - v)(u - v - kappa)`, for a generator matrix of series.
pub fn rtt_series<R: Ring>(base: &R, aux: &AlgebraContext, t: &RingMatrix<USeries<R::Elem>>, order: usize) -> Result<Outcome> {
    let n = aux.size;
    if t.rows() != n {
        return Err(Error::DimensionMismatch(format!("generator matrix of size {} for {}", t.rows(), aux.label())));
    }
    let bi = BiRing::new(base);
    let us: Vec<_> = t.entries().iter().map(|x| bi.in_u(x)).collect();
    let vs: Vec<_> = t.entries().iter().map(|x| bi.in_v(x)).collect();
    let tu = |i: usize, j: usize| &us[(i - 1) * n + j - 1];
    let tv = |i: usize, j: usize| &vs[(i - 1) * n + j - 1];
    let kap = &aux.kappa;
    for i in 1..=n {
        for j in 1..=n {
            for k in 1..=n {
                for l in 1..=n {
                    let comm = bi.commutator(tu(i, j), tv(k, l));
                    let lhs = mul_linear(&bi, &mul_linear(&bi, &comm, &Rational::zero()), kap);
                    let first = bi.sub(&bi.mul(tu(k, j), tv(i, l)), &bi.mul(tv(k, j), tu(i, l)));
                    let mut rhs = mul_linear(&bi, &first, kap);
                    if aux.has_q() {
                        let mut second = bi.zero();
                        if k == aux.prime(i) {
                            for p in 1..=n {
                                let x = bi.scale(&bi.mul(tu(p, j), tv(aux.prime(p), l)), &Rational::from_int(aux.theta(i, p)));
                                second = bi.add(&second, &x);
                            }
                        }
                        if l == aux.prime(j) {
                            for p in 1..=n {
                                let x = bi.scale(&bi.mul(tv(k, aux.prime(p)), tu(i, p)), &Rational::from_int(aux.theta(j, p)));
                                second = bi.sub(&second, &x);
                            }
                        }
                        rhs = bi.sub(&rhs, &mul_linear(&bi, &second, &Rational::zero()));
                    }
                    let o = bi_outcome(&bi, &bi.sub(&lhs, &rhs), order);
                    if !o.is_pass() {
                        return Ok(Outcome { witness: o.witness.map(|w| format!("[t_{i}{j}(u), t_{k}{l}(v)]: {w}")), ..o });
                    }
                }
            }
        }
    }
    Ok(Outcome::pass())
}

/// `[t_ab(u), psi_m(t_ij)(v)] = 0` for `a, b <= m`.
pub fn psi_commutes<R: Ring + Clone>(g: &Gauss<crate::series::SeriesRing<R>>, m: usize) -> Result<Outcome> {
    let bi = BiRing::new(&g.ring.base);
    let s = g.sub_t(m)?;
    let k = s.rows();
    for a in 1..=m {
        for b in 1..=m {
            let x = bi.in_u(g.t(a, b));
            for i in 0..k {
                for j in 0..k {
                    let o = bi_outcome(&bi, &bi.commutator(&x, &bi.in_v(s.get(i, j))), g.ctx.order);
                    if !o.is_pass() {
                        let w = format!("[t_{a}{b}(u), psi(t_{}{})(v)]: {}", i + m + 1, j + m + 1, o.witness.unwrap_or_default());
                        return Ok(Outcome { witness: Some(w), ..o });
                    }
                }
            }
        }
    }
    Ok(Outcome::pass())
}

/// `[t_11(u), tau^{1i}_{1j}(v)] = 0` for `2 <= i, j <= 2'`.
pub fn tau_commutes<R: Ring + Clone>(g: &Gauss<crate::series::SeriesRing<R>>) -> Result<Outcome> {
    let bi = BiRing::new(&g.ring.base);
    let n = g.size();
    let x = bi.in_u(g.t(1, 1));
    for i in 2..n {
        for j in 2..n {
            let tij = tau(&g.ring, &g.ctx, g.t_matrix(), (1, i), (1, j))?;
            let o = bi_outcome(&bi, &bi.commutator(&x, &bi.in_v(&tij)), g.ctx.order);
            if !o.is_pass() {
                return Ok(o);
            }
        }
    }
    Ok(Outcome::pass())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{verify_rtt_exact, EvalAssignment};
    use crate::workspace::{exact_gauss, AbstractWorkspace};

    fn exact(kind: Kind, n: usize) -> Gauss<crate::ring::MatrixRing<crate::ring::RationalFunctionField>> {
        exact_gauss(&AlgebraContext::new(kind, n, 4).unwrap(), Rational::zero()).unwrap()
    }

    #[test]
    fn oracle_exact_identities() {
        for (kind, n) in [(Kind::B, 1), (Kind::B, 2), (Kind::C, 2), (Kind::D, 2), (Kind::D, 3)] {
            let g = exact(kind, n);
            let label = g.ctx.label();
            assert!(center_product(&g).unwrap().is_pass(), "{label}");
            assert!(center_kappa(&g).unwrap().is_pass(), "{label}");
            assert!(center_recursion(&g).unwrap().is_pass(), "{label}");
            assert!(kappa_telescoping(&g).unwrap().is_pass(), "{label}");
            for i in 1..=n {
                if i < n || kind != Kind::C {
                    assert!(reflection(&g, i, true).unwrap().is_pass(), "{label} e {i}");
                    assert!(reflection(&g, i, false).unwrap().is_pass(), "{label} f {i}");
                }
                if i < n {
                    assert!(h_exchange(&g, i, true).unwrap().is_pass(), "{label} {i}");
                    assert!(h_exchange(&g, i, false).unwrap().is_pass(), "{label} {i}");
                }
            }
            assert!(tau_skew(&g, true).unwrap().is_pass(), "{label}");
            assert!(tau_skew(&g, false).unwrap().is_pass(), "{label}");
            assert!(tau_quasidet(&g).unwrap().is_pass(), "{label}");
            assert!(sub_gauss(&g, 1).unwrap().is_pass(), "{label}");
            let sub = g.ctx.sub_context(1).unwrap();
            let s = g.sub_t(1).unwrap();
            assert!(verify_rtt_exact(&sub, &s).unwrap().is_pass(), "{label}");
            for i in 2..g.size() {
                for j in 2..g.size() {
                    assert!(quasidet_minor(&g, 1, i, j).unwrap().is_pass(), "{label} {i} {j}");
                }
            }
        }
    }

    #[test]
    fn abstract_b2_identities() {
        let ctx = AlgebraContext::new(Kind::B, 2, 3).unwrap();
        let ws = AbstractWorkspace::new_abstract(&ctx).unwrap();
        let g = &ws.gauss;
        assert!(center_scalar(g).unwrap().is_pass());
        assert!(center_central(&ws, 4).unwrap().is_pass());
        assert!(center_product(g).unwrap().is_pass());
        assert!(center_recursion(g).unwrap().is_pass());
        assert!(kappa_telescoping(g).unwrap().is_pass());
        assert!(reflection(g, 1, true).unwrap().is_pass());
        assert!(reflection(g, 2, false).unwrap().is_pass());
        assert!(h_exchange(g, 1, true).unwrap().is_pass());
        assert!(tau_skew(g, true).unwrap().is_pass());
        assert!(tau_quasidet(g).unwrap().is_pass());
        assert!(psi_commutes(g, 1).unwrap().is_pass());
        assert!(tau_commutes(g).unwrap().is_pass());
        let sub = ctx.sub_context(1).unwrap();
        assert!(rtt_series(ws.base(), &sub, &g.sub_t(1).unwrap(), 3).unwrap().is_pass());
        assert!(rtt_series(ws.base(), &ctx, g.t_matrix(), 3).unwrap().is_pass());
        let ev = EvalAssignment::new(&ctx, Rational::zero());
        assert!(ev.verify_rtt().unwrap().is_pass());
    }
}
