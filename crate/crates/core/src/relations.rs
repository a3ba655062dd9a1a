//! Relations between Gaussian generators and between Drinfeld series,
//! checked as bivariate series identities (or coefficientwise for the Serre
//! relations) on either backend.

use crate::arith::Rational;
use crate::context::Kind;
use crate::drinfeld::{simple_count, simple_e, simple_f, simple_k};
use crate::error::{Error, Result};
use crate::gauss::permutations;
use crate::report::Outcome;
use crate::ring::Ring;
use crate::series::{BiRing, BiSeries, USeries};
use crate::workspace::Workspace;

type Bi<R> = BiSeries<<R as Ring>::Elem>;

/// Pass iff every coefficient of `diff` inside its window vanishes.
pub fn bi_outcome<R: Ring>(bi: &BiRing<R>, diff: &BiSeries<R::Elem>, order: usize) -> Outcome {
    if bi.checked_count(&diff.window, order as i32 + 1) == 0 {
        return Outcome::skip(format!("no coefficient is determined ({})", diff.window.describe()));
    }
    match bi.first_nonzero(diff) {
        None => Outcome::pass(),
        Some(((a, b), e)) => Outcome::fail(format!("coefficient of u^-{a} v^-{b}: {}", bi.base.describe(e))),
    }
}

/// `sum_p [x(u_p1), [.., [x(u_pm), y(v)]]] = 0` coefficientwise for all
/// orders `1..=max_order`.
pub fn serre_coefficients<R: Ring>(base: &R, x: &USeries<R::Elem>, y: &USeries<R::Elem>, m: usize, max_order: usize) -> Outcome {
    let max_order = max_order.min(x.order()).min(y.order());
    let perms = permutations(m);
    for rs in multisets(m, max_order) {
        for s in 1..=max_order {
            let mut total = base.zero();
            for (p, _) in &perms {
                let mut acc = y.coeff(s).clone();
                for k in (0..m).rev() {
                    acc = base.commutator(x.coeff(rs[p[k]]), &acc);
                }
                total = base.add(&total, &acc);
            }
            if !base.is_zero(&total) {
                return Outcome::fail(format!("orders {rs:?} against {s}: {}", base.describe(&total)));
            }
        }
    }
    Outcome::pass()
}

/// Non-decreasing sequences of length `m` over `1..=k`.
fn multisets(m: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(m);
    fn rec(m: usize, k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == m {
            out.push(cur.clone());
            return;
        }
        for r in start..=k {
            cur.push(r);
            rec(m, k, r, cur, out);
            cur.pop();
        }
    }
    rec(m, k, 1, &mut cur, &mut out);
    out
}

fn q(n: i64) -> Rational {
    Rational::from_int(n)
}

fn bad(family: &str, idx: &[usize]) -> Error {
    Error::IndexOutOfRange(format!("{family} has no instance {idx:?}"))
}

fn one_index(family: &str, idx: &[usize]) -> Result<usize> {
    match idx {
        [i] => Ok(*i),
        _ => Err(bad(family, idx)),
    }
}

fn two_indices(family: &str, idx: &[usize]) -> Result<(usize, usize)> {
    match idx {
        [i, j] => Ok((*i, *j)),
        _ => Err(bad(family, idx)),
    }
}

/// Relations among `h_i`, `e_i`, `f_i`, keyed by family name.
pub const GAUSS_FAMILIES: &[&str] = &[
    "hihj", "eifj", "hiej", "hifj", "hn1ej", "hn1fj", "eiei", "fifi", "eiej-zero", "fifj-zero", "eiej-tail", "fifj-tail",
    "serre-e", "serre-f", "b-en1-en",
];

/// Relations among `kappa_i`, `xi_i^+`, `xi_i^-`.
pub const DRINFELD_FAMILIES: &[&str] = &["kikj", "xpixmj", "kixpj", "xpixpj", "serre-xi"];

/// Index tuples of a Gauss family for `ctx`, in lexicographic order.
pub fn gauss_instances(ctx: &crate::context::AlgebraContext, family: &str) -> Result<Vec<Vec<usize>>> {
    let n = ctx.n;
    let rd = ctx.root_data();
    let pairs = |lo: usize, hi_i: usize, hi_j: usize| -> Vec<Vec<usize>> {
        (lo..=hi_i).flat_map(|i| (lo..=hi_j).map(move |j| vec![i, j])).collect()
    };
    Ok(match family {
        "hihj" => pairs(1, n + 1, n + 1),
        "eifj" | "hiej" | "hifj" => pairs(1, n, n),
        "hn1ej" | "hn1fj" => (1..=n).map(|j| vec![j]).collect(),
        "eiei" | "fifi" => (1..=n).map(|i| vec![i]).collect(),
        "eiej-zero" | "fifj-zero" => pairs(1, n, n).into_iter().filter(|p| p[0] < p[1] && rd.inner(p[0], p[1]) == 0).collect(),
        "eiej-tail" | "fifj-tail" => pairs(1, n, n).into_iter().filter(|p| p[0] != p[1]).collect(),
        "serre-e" | "serre-f" => pairs(1, n, n).into_iter().filter(|p| p[0] != p[1] && rd.cartan(p[0], p[1]) != 0).collect(),
        "b-en1-en" => {
            if ctx.kind == Kind::B && n >= 2 {
                vec![vec![]]
            } else {
                vec![]
            }
        }
        other => return Err(Error::UnknownFamily { name: other.into(), known: GAUSS_FAMILIES.join(", ") }),
    })
}

/// Index tuples of a Drinfeld family; `kixpj`, `xpixpj` and `serre-xi`
/// carry a trailing sign flag (1 for `+`, 0 for `-`).
pub fn drinfeld_instances(ctx: &crate::context::AlgebraContext, family: &str) -> Result<Vec<Vec<usize>>> {
    let n = simple_count(ctx);
    let rd = ctx.root_data();
    let mut out = Vec::new();
    for i in 1..=n {
        for j in 1..=n {
            match family {
                "kikj" | "xpixmj" => out.push(vec![i, j]),
                "kixpj" => {
                    out.push(vec![i, j, 0]);
                    out.push(vec![i, j, 1]);
                }
                "xpixpj" if i <= j => {
                    out.push(vec![i, j, 0]);
                    out.push(vec![i, j, 1]);
                }
                "serre-xi" if i != j && rd.cartan(i, j) != 0 => {
                    out.push(vec![i, j, 0]);
                    out.push(vec![i, j, 1]);
                }
                "xpixpj" | "serre-xi" => {}
                other => return Err(Error::UnknownFamily { name: other.into(), known: DRINFELD_FAMILIES.join(", ") }),
            }
        }
    }
    Ok(out)
}

/// Check one instance of a Gauss family.
pub fn check_gauss<R: Ring + Clone>(ws: &Workspace<R>, family: &str, idx: &[usize]) -> Result<Outcome> {
    let g = &ws.gauss;
    let ctx = &ws.ctx;
    let n = ctx.n;
    let rd = ctx.root_data();
    let bi = ws.bi();
    let k = ws.order();
    let zero = || bi.zero();
    let diff: Bi<R> = match family {
        "hihj" => {
            let (i, j) = two_indices(family, idx)?;
            bi.commutator(&bi.in_u(&g.h(i)?), &bi.in_v(&g.h(j)?))
        }
        "eifj" => {
            let (i, j) = two_indices(family, idx)?;
            let lhs = bi.commutator(&bi.in_u(&simple_e(g, i)?), &bi.in_v(&simple_f(g, j)?));
            let rhs = if i == j { bi.divided_difference(&simple_k(g, i)?) } else { zero() };
            bi.sub(&lhs, &rhs)
        }
        "hiej" | "hifj" => {
            let (i, j) = two_indices(family, idx)?;
            let c = q(rd.eps_alpha(i, j));
            let h = bi.in_u(&g.h(i)?);
            if family == "hiej" {
                let x = simple_e(g, j)?;
                let lhs = bi.commutator(&h, &bi.in_v(&x));
                let rhs = bi.scale(&bi.mul(&h, &bi.divided_difference(&x)), &-c);
                bi.sub(&lhs, &rhs)
            } else {
                let x = simple_f(g, j)?;
                let lhs = bi.commutator(&h, &bi.in_v(&x));
                let rhs = bi.scale(&bi.mul(&bi.divided_difference(&x), &h), &c);
                bi.sub(&lhs, &rhs)
            }
        }
        "hn1ej" | "hn1fj" => {
            let j = one_index(family, idx)?;
            let is_e = family == "hn1ej";
            let x = if is_e { simple_e(g, j)? } else { simple_f(g, j)? };
            let h = bi.in_u(&g.h(n + 1)?);
            let lhs = bi.commutator(&h, &bi.in_v(&x));
            let dd = bi.divided_difference(&x);
            let side = |d: &Bi<R>| if is_e { bi.mul(&h, d) } else { bi.mul(d, &h) };
            let sign = if is_e { q(1) } else { q(-1) };
            let rhs = if j == n {
                match ctx.kind {
                    Kind::B => {
                        // e: (1/2) h dd - (1/2) dd(u-1) h.
                        // f: the mirror image -(1/2) dd h + (1/2) h dd(u-1); with
                        // the h factors placed as in the e relation it fails.
                        let sh = bi.shifted_divided_difference(&x, &q(-1))?;
                        let a = if is_e {
                            bi.sub(&bi.mul(&h, &dd), &bi.mul(&sh, &h))
                        } else {
                            bi.sub(&bi.mul(&dd, &h), &bi.mul(&h, &sh))
                        };
                        bi.scale(&a, &(&sign * &Rational::new(1, 2)))
                    }
                    _ => bi.scale(&side(&dd), &(&sign * &q(rd.eps_alpha(n, n)))),
                }
            } else if j + 1 == n {
                match ctx.kind {
                    Kind::B => zero(),
                    // (x(v) - x(u+2)) / (u - v + 2) = -(shifted divided difference)
                    Kind::C => bi.scale(&side(&bi.shifted_divided_difference(&x, &q(2))?), &-sign),
                    _ => bi.scale(&side(&dd), &-sign),
                }
            } else {
                zero()
            };
            bi.sub(&lhs, &rhs)
        }
        "eiei" | "fifi" => {
            let i = one_index(family, idx)?;
            let is_e = family == "eiei";
            let x = if is_e { simple_e(g, i)? } else { simple_f(g, i)? };
            let c = Rational::new(rd.inner(i, i), 2);
            let c = if is_e { c } else { -c };
            let lhs = bi.commutator(&bi.in_u(&x), &bi.in_v(&x));
            let a = bi.sub(&bi.in_u(&x), &bi.in_v(&x));
            let rhs = bi.scale(&bi.mul(&a, &bi.divided_difference(&x)), &c);
            bi.sub(&lhs, &rhs)
        }
        "eiej-zero" | "fifj-zero" => {
            let (i, j) = two_indices(family, idx)?;
            if rd.inner(i, j) != 0 {
                return Err(bad(family, idx));
            }
            let (x, y) = if family == "eiej-zero" { (simple_e(g, i)?, simple_e(g, j)?) } else { (simple_f(g, i)?, simple_f(g, j)?) };
            bi.commutator(&bi.in_u(&x), &bi.in_v(&y))
        }
        "eiej-tail" | "fifj-tail" => {
            let (i, j) = two_indices(family, idx)?;
            let is_e = family == "eiej-tail";
            let (x, y) = if is_e { (simple_e(g, i)?, simple_e(g, j)?) } else { (simple_f(g, i)?, simple_f(g, j)?) };
            let zb = ws.base().zero();
            let xu = bi.in_u(&x);
            let yv = bi.in_v(&y);
            let lhs = bi.sub(
                &bi.commutator(&bi.u_times_tail(&x.tail(&zb)), &yv),
                &bi.commutator(&xu, &bi.v_times_tail(&y.tail(&zb))),
            );
            let c = q(rd.inner(i, j));
            // For i > j the displayed right-hand side only holds with the
            // factors in the opposite order (swap u and v in the i < j case).
            let rhs = match (is_e, i < j) {
                (true, true) => bi.scale(&bi.mul(&xu, &yv), &-c),
                (true, false) => bi.scale(&bi.mul(&yv, &xu), &-c),
                (false, true) => bi.scale(&bi.mul(&yv, &xu), &c),
                (false, false) => bi.scale(&bi.mul(&xu, &yv), &c),
            };
            bi.sub(&lhs, &rhs)
        }
        "serre-e" | "serre-f" => {
            let (i, j) = two_indices(family, idx)?;
            let m = rd.serre_degree(i, j);
            let (x, y) = if family == "serre-e" { (simple_e(g, i)?, simple_e(g, j)?) } else { (simple_f(g, i)?, simple_f(g, j)?) };
            return Ok(serre_coefficients(ws.base(), &x, &y, m, k.saturating_sub(1).max(1)));
        }
        "b-en1-en" => {
            if ctx.kind != Kind::B || n < 2 {
                return Err(bad(family, idx));
            }
            let e1 = simple_e(g, n - 1)?;
            let e2 = simple_e(g, n)?;
            let lhs = bi.commutator(&bi.in_u(&e1), &bi.in_v(&e2));
            let rhs = bi.sub(&bi.mul(&bi.divided_difference(&e1), &bi.in_v(&e2)), &bi.divided_difference(&g.e(n - 1, n + 1)?));
            bi.sub(&lhs, &rhs)
        }
        other => return Err(Error::UnknownFamily { name: other.into(), known: GAUSS_FAMILIES.join(", ") }),
    };
    Ok(bi_outcome(&bi, &diff, k))
}

/// Check one instance of a Drinfeld family.
pub fn check_drinfeld<R: Ring + Clone>(ws: &Workspace<R>, family: &str, idx: &[usize]) -> Result<Outcome> {
    let d = ws.drinfeld()?;
    let rd = ws.ctx.root_data();
    let bi = ws.bi();
    let k = ws.order();
    let (i, j) = match idx {
        [i, j, ..] => (*i, *j),
        _ => return Err(bad(family, idx)),
    };
    let plus = idx.get(2).copied() == Some(1);
    // the upper sign of the displayed relations belongs to xi^+
    let pm = if plus { q(1) } else { q(-1) };
    let half_inner = Rational::new(rd.inner(i, j), 2);
    let diff = match family {
        "kikj" => bi.commutator(&bi.in_u(d.kappa(i)), &bi.in_v(d.kappa(j))),
        "xpixmj" => {
            let lhs = bi.commutator(&bi.in_u(d.xi(true, i)), &bi.in_v(d.xi(false, j)));
            if i == j {
                bi.add(&lhs, &bi.divided_difference(d.kappa(i)))
            } else {
                lhs
            }
        }
        "kixpj" => {
            let x = d.xi(plus, j);
            let kap = bi.in_u(d.kappa(i));
            let lhs = bi.commutator(&kap, &bi.in_v(x));
            let rhs = bi.scale(&bi.anticommutator(&kap, &bi.divided_difference(x)), &-(&pm * &half_inner));
            bi.sub(&lhs, &rhs)
        }
        "xpixpj" => {
            let (xi, xj) = (d.xi(plus, i), d.xi(plus, j));
            let lhs = bi.add(&bi.commutator(&bi.in_u(xi), &bi.in_v(xj)), &bi.commutator(&bi.in_u(xj), &bi.in_v(xi)));
            let ai = bi.sub(&bi.in_u(xi), &bi.in_v(xi));
            let rhs = bi.scale(&bi.anticommutator(&ai, &bi.divided_difference(xj)), &-(&pm * &half_inner));
            bi.sub(&lhs, &rhs)
        }
        "serre-xi" => {
            let m = rd.serre_degree(i, j);
            return Ok(serre_coefficients(ws.base(), d.xi(plus, i), d.xi(plus, j), m, k.saturating_sub(1).max(1)));
        }
        other => return Err(Error::UnknownFamily { name: other.into(), known: DRINFELD_FAMILIES.join(", ") }),
    };
    Ok(bi_outcome(&bi, &diff, k))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::context::AlgebraContext;
    use crate::workspace::OracleWorkspace;

    #[test]
    fn b_hn1_fn_needs_mirrored_order() {
        let ctx = AlgebraContext::new(Kind::B, 1, 4).unwrap();
        let ws = OracleWorkspace::new_oracle(&ctx, Rational::zero()).unwrap();
        let bi = ws.bi();
        let x = simple_f(&ws.gauss, 1).unwrap();
        let h = bi.in_u(&ws.gauss.h(2).unwrap());
        let lhs = bi.commutator(&h, &bi.in_v(&x));
        let dd = bi.divided_difference(&x);
        let sh = bi.shifted_divided_difference(&x, &q(-1)).unwrap();
        let same_as_e = bi.scale(&bi.sub(&bi.mul(&h, &dd), &bi.mul(&sh, &h)), &Rational::new(-1, 2));
        assert_eq!(bi_outcome(&bi, &bi.sub(&lhs, &same_as_e), 4).status, crate::report::Status::Fail);
        assert!(check_gauss(&ws, "hn1fj", &[1]).unwrap().is_pass());
    }

    #[test]
    fn multiset_counts() {
        assert_eq!(multisets(3, 2).len(), 4);
        assert_eq!(multisets(2, 3).len(), 6);
    }

    #[test]
    fn oracle_catalog_small() {
        for (kind, n) in [(Kind::B, 1), (Kind::C, 2), (Kind::D, 2), (Kind::B, 2)] {
            let ctx = AlgebraContext::new(kind, n, 4).unwrap();
            let ws = OracleWorkspace::new_oracle(&ctx, Rational::zero()).unwrap();
            for fam in GAUSS_FAMILIES {
                for idx in gauss_instances(&ctx, fam).unwrap() {
                    let o = check_gauss(&ws, fam, &idx).unwrap();
                    assert!(o.is_pass(), "{} {fam} {idx:?}: {o:?}", ctx.label());
                }
            }
            for fam in DRINFELD_FAMILIES {
                for idx in drinfeld_instances(&ctx, fam).unwrap() {
                    let o = check_drinfeld(&ws, fam, &idx).unwrap();
                    assert!(o.is_pass(), "{} {fam} {idx:?}: {o:?}", ctx.label());
                }
            }
        }
    }
}
