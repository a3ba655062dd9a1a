//! The extended Yangian as a rewriting system on PBW-ordered words.
//!
//! Generators `t_ij^(r)` are not linearly independent in `X(g_N)`: the
//! unitarity relation `T'(u+kappa) T(u) = z(u)` expresses `t_kl^(r)` through
//! `t_{l'k'}^(r)` modulo lower filtration degree. Words are therefore written
//! in a reduced generator set (`i + j < N + 1` orthogonal, `i + j <= N + 1`
//! symplectic, plus `t_{1'1'}`), on which ordered monomials form a basis.
//! Normal forms are then unique, so two elements are equal iff their normal
//! forms are.

use std::sync::Arc;

use dashmap::DashMap;
use rustc_hash::FxBuildHasher;

use super::gen::Gen;
use super::poly::{Mono, NcPoly};
use crate::arith::{binomial, Rational};
use crate::context::{AlgebraContext, Kind};
use crate::error::{Error, Result};
use crate::ring::Ring;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CentralKind {
    /// No relation beyond centrality.
    Free,
    /// `s^2 = c`.
    SquareRoot(Rational),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CentralSymbol {
    pub name: String,
    pub kind: CentralKind,
}

type FxDashMap<K, V> = DashMap<K, V, FxBuildHasher>;

/// Tensor product of RTT algebras (one per tag) with extra central symbols.
pub struct XAlgebra {
    components: Vec<AlgebraContext>,
    centrals: Vec<CentralSymbol>,
    comm_cache: FxDashMap<(Gen, Gen), Arc<NcPoly>>,
    insert_cache: FxDashMap<(Mono, Gen), Arc<NcPoly>>,
    reduce_cache: FxDashMap<Gen, Arc<NcPoly>>,
}

impl std::fmt::Debug for XAlgebra {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("XAlgebra")
            .field("components", &self.components)
            .field("centrals", &self.centrals)
            .finish()
    }
}

#[derive(Default)]
pub struct XAlgebraBuilder {
    components: Vec<AlgebraContext>,
    centrals: Vec<CentralSymbol>,
}

impl XAlgebraBuilder {
    pub fn component(mut self, ctx: &AlgebraContext) -> Self {
        self.components.push(ctx.clone());
        self
    }

    pub fn central(mut self, name: &str) -> Self {
        self.centrals.push(CentralSymbol { name: name.into(), kind: CentralKind::Free });
        self
    }

    pub fn square_root(mut self, name: &str, square: Rational) -> Self {
        self.centrals.push(CentralSymbol { name: name.into(), kind: CentralKind::SquareRoot(square) });
        self
    }

    pub fn build(self) -> Result<XAlgebra> {
        if self.components.is_empty() || self.components.len() > Gen::MAX_TAG as usize + 1 {
            return Err(Error::InvalidContext(format!("{} tensor factors", self.components.len())));
        }
        if self.centrals.len() > 255 {
            return Err(Error::InvalidContext("too many central symbols".into()));
        }
        for c in &self.components {
            if c.size > Gen::MAX_INDEX {
                return Err(Error::InvalidContext(format!("matrix size {} too large", c.size)));
            }
        }
        Ok(XAlgebra {
            components: self.components,
            centrals: self.centrals,
            comm_cache: Default::default(),
            insert_cache: Default::default(),
            reduce_cache: Default::default(),
        })
    }
}

/// Statistics about the memo tables.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct CacheStats {
    pub commutators: usize,
    pub inserts: usize,
    pub reductions: usize,
}

impl XAlgebra {
    pub fn builder() -> XAlgebraBuilder {
        XAlgebraBuilder::default()
    }

    /// The algebra `X(g_N)` (or `Y(gl_n)` for type A) alone.
    pub fn new(ctx: &AlgebraContext) -> Self {
        Self::builder().component(ctx).build().expect("single component is valid")
    }

    pub fn ctx(&self) -> &AlgebraContext {
        &self.components[0]
    }

    pub fn component(&self, tag: u8) -> &AlgebraContext {
        &self.components[tag as usize]
    }

    pub fn components(&self) -> &[AlgebraContext] {
        &self.components
    }

    pub fn central_symbol(&self, name: &str) -> Option<Gen> {
        self.centrals.iter().position(|c| c.name == name).map(|i| Gen::central(i as u8))
    }

    pub fn cache_stats(&self) -> CacheStats {
        CacheStats {
            commutators: self.comm_cache.len(),
            inserts: self.insert_cache.len(),
            reductions: self.reduce_cache.len(),
        }
    }

    pub fn gen_name(&self, g: Gen) -> String {
        match g.central_id() {
            Some(id) => self.centrals.get(id as usize).map(|c| c.name.clone()).unwrap_or_else(|| format!("c{id}")),
            None => {
                let primes = "'".repeat(g.tag() as usize);
                let sep = if self.component(g.tag()).size > 9 { "," } else { "" };
                format!("t{primes}{}{sep}{}^({})", g.i(), g.j(), g.order())
            }
        }
    }

    pub fn render(&self, p: &NcPoly) -> String {
        p.render(&|g| self.gen_name(g), 8)
    }

    fn square_of(&self, g: Gen) -> Option<&Rational> {
        let id = g.central_id()?;
        match &self.centrals.get(id as usize)?.kind {
            CentralKind::SquareRoot(c) => Some(c),
            CentralKind::Free => None,
        }
    }

    fn check_gen(&self, tag: u8, i: usize, j: usize) -> Result<&AlgebraContext> {
        let ctx = self
            .components
            .get(tag as usize)
            .ok_or_else(|| Error::IndexOutOfRange(format!("tensor factor {tag}")))?;
        if !(1..=ctx.size).contains(&i) || !(1..=ctx.size).contains(&j) {
            return Err(Error::IndexOutOfRange(format!("t_{i}{j} with N = {}", ctx.size)));
        }
        Ok(ctx)
    }

    /// Whether `t_ij^(r)` belongs to the reduced generating set.
    pub fn is_reduced(&self, g: Gen) -> bool {
        if g.is_central() {
            return true;
        }
        let ctx = self.component(g.tag());
        let (i, j, n) = (g.i(), g.j(), ctx.size);
        match ctx.kind {
            Kind::A => true,
            Kind::B | Kind::D => i + j < n + 1 || (i == n && j == n),
            Kind::C => i + j <= n + 1 || (i == n && j == n),
        }
    }

    /// `t_ij^(r)` as a free polynomial; `t_ij^(0) = delta_ij`.
    fn free_t(&self, tag: u8, i: usize, j: usize, r: usize) -> NcPoly {
        if r == 0 {
            if i == j {
                NcPoly::one()
            } else {
                NcPoly::zero()
            }
        } else {
            NcPoly::gen(Gen::t(tag, i, j, r))
        }
    }

    /// Normal form of the generator `t_ij^(r)` of tensor factor `tag`.
    pub fn t(&self, tag: u8, i: usize, j: usize, r: usize) -> Result<NcPoly> {
        self.check_gen(tag, i, j)?;
        if r == 0 {
            return Ok(self.free_t(tag, i, j, 0));
        }
        if r > Gen::MAX_ORDER {
            return Err(Error::IndexOutOfRange(format!("order {r}")));
        }
        Ok((*self.reduce_gen(Gen::t(tag, i, j, r))).clone())
    }

    /// Normal form of a central symbol.
    pub fn central(&self, name: &str) -> Result<NcPoly> {
        self.central_symbol(name)
            .map(NcPoly::gen)
            .ok_or_else(|| Error::IndexOutOfRange(format!("no central symbol {name:?}")))
    }

    /// Coefficient of `u^{-r}` in `t_xy(u + kappa)`; order 0 gives `delta_xy`.
    fn free_shifted_t(&self, tag: u8, x: usize, y: usize, a: usize) -> NcPoly {
        if a == 0 {
            return self.free_t(tag, x, y, 0);
        }
        let ctx = self.component(tag);
        let mk = -&ctx.kappa;
        let mut out = NcPoly::zero();
        for c in 1..=a {
            let coef = &binomial((a - 1) as u64, (a - c) as u64) * &mk.pow((a - c) as u32);
            out.add_scaled(&self.free_t(tag, x, y, c), &coef);
        }
        out
    }

    /// Coefficient of `u^{-r}` in `(T'(u+kappa) T(u))_kl`, as a free polynomial.
    pub fn unitarity_coeff_free(&self, tag: u8, k: usize, l: usize, r: usize) -> NcPoly {
        let ctx = self.component(tag);
        let mut out = NcPoly::zero();
        for a in 0..=r {
            for p in 1..=ctx.size {
                let left = self.free_shifted_t(tag, ctx.prime(p), ctx.prime(k), a);
                if left.is_zero() {
                    continue;
                }
                let right = self.free_t(tag, p, l, r - a);
                if right.is_zero() {
                    continue;
                }
                out.add_scaled(&left.free_mul(&right), &Rational::from_int(ctx.theta(k, p)));
            }
        }
        out
    }

    fn reduce_gen(&self, g: Gen) -> Arc<NcPoly> {
        if self.is_reduced(g) {
            return Arc::new(NcPoly::gen(g));
        }
        if let Some(v) = self.reduce_cache.get(&g) {
            return v.clone();
        }
        let (tag, k, l, r) = (g.tag(), g.i(), g.j(), g.order());
        let s = self.unitarity_coeff_free(tag, k, l, r);
        let c = s.coeff(&[g]);
        assert!(!c.is_zero(), "generator {g:?} does not occur in its own unitarity relation");
        let mut rest = s;
        rest.add_term(Mono::from_slice(&[g]), -&c);
        // t_kl^(r) c + rest = delta_kl z^(r), with z^(r) the (1,1) entry.
        let mut rhs = rest.neg();
        if k == l {
            rhs = rhs.add(&self.unitarity_coeff_free(tag, 1, 1, r));
        }
        let expr = rhs.scale(&c.recip().expect("nonzero"));
        let nf = Arc::new(self.normal_order(&expr));
        self.reduce_cache.insert(g, nf.clone());
        nf
    }

    /// Coefficient of `u^{-r} v^{e}` on the right hand side of the defining
    /// relation for `[t_ij(u), t_kl(v)]`, as a free polynomial. For `e = -s`
    /// this is the commutator `[t_ij^(r), t_kl^(s)]`; for `e >= 0` it must
    /// vanish in the algebra.
    pub fn defrel_coeff_free(&self, tag: u8, (i, j): (usize, usize), (k, l): (usize, usize), r: usize, e: i64) -> NcPoly {
        let ctx = self.component(tag);
        let mut out = NcPoly::zero();
        let r_i = r as i64;
        for a in 0..r_i {
            let b = r_i - 1 - a - e;
            if b >= 0 {
                let x = self.free_t(tag, k, j, a as usize);
                let y = self.free_t(tag, i, l, b as usize);
                out.add_scaled(&x.free_mul(&y), &Rational::one());
            }
        }
        for b in 0..r_i {
            let a = r_i - 1 - b - e;
            if a >= 0 {
                let x = self.free_t(tag, k, j, a as usize);
                let y = self.free_t(tag, i, l, b as usize);
                out.add_scaled(&x.free_mul(&y), &-Rational::one());
            }
        }
        if !ctx.has_q() {
            return out;
        }
        let (ip, jp) = (ctx.prime(i), ctx.prime(j));
        if k != ip && l != jp {
            return out;
        }
        for a in 0..r_i {
            let top = r_i - 1 - a;
            for q in 0.max(e)..=top {
                let b = q - e;
                if b < 0 {
                    continue;
                }
                let coef = &binomial(top as u64, q as u64) * &ctx.kappa.pow((top - q) as u32);
                if coef.is_zero() {
                    continue;
                }
                let m = self.defrel_m_term(ctx, tag, (i, j), (k, l), a as usize, b as usize);
                out.add_scaled(&m, &-coef);
            }
        }
        out
    }

    /// `delta_{ki'} sum_p theta_ip t_pj^(a) t_{p'l}^(b) - delta_{lj'} sum_p theta_jp t_{kp'}^(b) t_ip^(a)`
    fn defrel_m_term(&self, ctx: &AlgebraContext, tag: u8, (i, j): (usize, usize), (k, l): (usize, usize), a: usize, b: usize) -> NcPoly {
        let mut out = NcPoly::zero();
        if k == ctx.prime(i) {
            for p in 1..=ctx.size {
                let x = self.free_t(tag, p, j, a);
                let y = self.free_t(tag, ctx.prime(p), l, b);
                out.add_scaled(&x.free_mul(&y), &Rational::from_int(ctx.theta(i, p)));
            }
        }
        if l == ctx.prime(j) {
            for p in 1..=ctx.size {
                let x = self.free_t(tag, k, ctx.prime(p), b);
                let y = self.free_t(tag, i, p, a);
                out.add_scaled(&x.free_mul(&y), &-Rational::from_int(ctx.theta(j, p)));
            }
        }
        out
    }

    /// `[t_ij^(r), t_kl^(s)]` in normal form.
    pub fn commutator_coeff(&self, tag: u8, (i, j): (usize, usize), r: usize, (k, l): (usize, usize), s: usize) -> Result<NcPoly> {
        self.check_gen(tag, i, j)?;
        self.check_gen(tag, k, l)?;
        if r == 0 || s == 0 {
            return Ok(NcPoly::zero());
        }
        Ok(self.normal_order(&self.defrel_coeff_free(tag, (i, j), (k, l), r, -(s as i64))))
    }

    /// Like [`Self::commutator_coeff`], additionally asserting that every
    /// coefficient of a non-negative power of `v` on the right hand side of
    /// the defining relation normal-orders to zero.
    pub fn commutator_coeff_checked(&self, tag: u8, ij: (usize, usize), r: usize, kl: (usize, usize), s: usize) -> Result<NcPoly> {
        let c = self.commutator_coeff(tag, ij, r, kl, s)?;
        for e in 0..r as i64 {
            let extra = self.normal_order(&self.defrel_coeff_free(tag, ij, kl, r, e));
            if !extra.is_zero() {
                return Err(Error::Internal(format!(
                    "coefficient of u^-{r} v^{e} in the defining relation for t{:?}, t{:?} is {}",
                    ij,
                    kl,
                    self.render(&extra)
                )));
            }
        }
        Ok(c)
    }

    /// `[a, b]` for reduced generators, in normal form.
    pub fn commutator_gens(&self, a: Gen, b: Gen) -> Arc<NcPoly> {
        if a == b || a.is_central() || b.is_central() || a.tag() != b.tag() {
            return Arc::new(NcPoly::zero());
        }
        if a < b {
            return Arc::new(self.commutator_gens(b, a).neg());
        }
        if let Some(v) = self.comm_cache.get(&(a, b)) {
            return v.clone();
        }
        let free = self.defrel_coeff_free(a.tag(), (a.i(), a.j()), (b.i(), b.j()), a.order(), -(b.order() as i64));
        let nf = Arc::new(self.normal_order(&free));
        self.comm_cache.insert((a, b), nf.clone());
        nf
    }

    /// Add `c * NF(m g)` to `out`, where `m` is a normal-ordered word and `g` reduced.
    fn insert_into(&self, m: &[Gen], g: Gen, c: &Rational, out: &mut NcPoly) {
        match m.last() {
            None => out.add_term(Mono::from_slice(&[g]), c.clone()),
            Some(&a) if a < g => {
                let mut w = Mono::from_slice(m);
                w.push(g);
                out.add_term(w, c.clone());
            }
            Some(&a) if a == g => match self.square_of(g) {
                Some(sq) => out.add_term(Mono::from_slice(&m[..m.len() - 1]), c * sq),
                None => {
                    let mut w = Mono::from_slice(m);
                    w.push(g);
                    out.add_term(w, c.clone());
                }
            },
            Some(_) => {
                let nf = self.insert_memo(m, g);
                out.add_scaled(&nf, c);
            }
        }
    }

    fn insert_memo(&self, m: &[Gen], g: Gen) -> Arc<NcPoly> {
        let key = (Mono::from_slice(m), g);
        if let Some(v) = self.insert_cache.get(&key) {
            return v.clone();
        }
        let a = *m.last().expect("nonempty");
        let prefix = &m[..m.len() - 1];
        // prefix a g = (prefix g) a + prefix [a, g]
        let mut step = NcPoly::zero();
        self.insert_into(prefix, g, &Rational::one(), &mut step);
        let mut res = NcPoly::zero();
        for (t, c) in step.iter() {
            self.insert_into(t, a, c, &mut res);
        }
        let comm = self.commutator_gens(a, g);
        for (w, c) in comm.iter() {
            self.mul_words_into(prefix, w, c, &mut res);
        }
        let res = Arc::new(res);
        self.insert_cache.insert(key, res.clone());
        res
    }

    /// Add `c * NF(left right)` for normal-ordered words.
    fn mul_words_into(&self, left: &[Gen], right: &[Gen], c: &Rational, out: &mut NcPoly) {
        if right.is_empty() {
            out.add_term(Mono::from_slice(left), c.clone());
            return;
        }
        if left.last().is_none_or(|l| *l < right[0]) {
            let mut w = Mono::from_slice(left);
            w.extend_from_slice(right);
            out.add_term(w, c.clone());
            return;
        }
        let mut cur = NcPoly::word(left, c.clone());
        for &g in right {
            let mut next = NcPoly::with_capacity(cur.len());
            for (t, x) in cur.iter() {
                self.insert_into(t, g, x, &mut next);
            }
            cur = next;
        }
        out.add_scaled(&cur, &Rational::one());
    }

    /// Product of two normal-ordered polynomials.
    pub fn mul(&self, p: &NcPoly, q: &NcPoly) -> NcPoly {
        let mut out = NcPoly::with_capacity(p.len() * q.len());
        for (m1, c1) in p.iter() {
            for (m2, c2) in q.iter() {
                self.mul_words_into(m1, m2, &(c1 * c2), &mut out);
            }
        }
        out
    }

    /// Normal form of an arbitrary polynomial in the generators.
    pub fn normal_order(&self, p: &NcPoly) -> NcPoly {
        let mut out = NcPoly::zero();
        for (w, c) in p.iter() {
            let mut cur = NcPoly::constant(c.clone());
            for &g in w.iter() {
                let red = self.reduce_gen(g);
                cur = self.mul(&cur, &red);
                if cur.is_zero() {
                    break;
                }
            }
            out.add_scaled(&cur, &Rational::one());
        }
        out
    }

    /// Whether every word is weakly increasing and uses reduced generators only.
    pub fn is_normal(&self, p: &NcPoly) -> bool {
        p.iter().all(|(w, _)| {
            w.windows(2).all(|x| x[0] < x[1] || (x[0] == x[1] && self.square_of(x[0]).is_none()))
                && w.iter().all(|g| self.is_reduced(*g))
        })
    }
}

impl Ring for XAlgebra {
    type Elem = NcPoly;

    fn zero(&self) -> NcPoly {
        NcPoly::zero()
    }
    fn one(&self) -> NcPoly {
        NcPoly::one()
    }
    fn from_rational(&self, c: &Rational) -> NcPoly {
        NcPoly::constant(c.clone())
    }
    fn add(&self, a: &NcPoly, b: &NcPoly) -> NcPoly {
        a.add(b)
    }
    fn add_assign(&self, a: &mut NcPoly, b: &NcPoly) {
        a.add_scaled(b, &Rational::one());
    }
    fn sub(&self, a: &NcPoly, b: &NcPoly) -> NcPoly {
        a.sub(b)
    }
    fn neg(&self, a: &NcPoly) -> NcPoly {
        a.neg()
    }
    fn mul(&self, a: &NcPoly, b: &NcPoly) -> NcPoly {
        XAlgebra::mul(self, a, b)
    }
    fn scale(&self, a: &NcPoly, c: &Rational) -> NcPoly {
        a.scale(c)
    }
    fn is_zero(&self, a: &NcPoly) -> bool {
        a.is_zero()
    }
    fn try_inverse(&self, a: &NcPoly) -> Result<NcPoly> {
        match a.as_constant() {
            Some(c) if !c.is_zero() => Ok(NcPoly::constant(c.recip()?)),
            _ => Err(Error::NotInvertible("only nonzero scalars are invertible".into())),
        }
    }
    fn describe(&self, a: &NcPoly) -> String {
        self.render(a)
    }
}
