use proptest::prelude::*;
use std::sync::Arc;

use yangian::catalog::{verify, Group, Selection};
use yangian::identities::rtt_series;
use yangian::nc::{NcPoly, XAlgebra};
use yangian::pbw::all_gens;
use yangian::ring::Ring;
use yangian::series::SeriesRing;
use yangian::workspace::abstract_t;
use yangian::{AlgebraContext, Kind, Poly, Rational, RationalFunction, Report, Status};

fn rat() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=5).prop_map(|(p, q)| Rational::new(p, q))
}

fn poly(deg: usize) -> impl Strategy<Value = Poly> {
    prop::collection::vec(rat(), 1..=deg + 1).prop_map(Poly::from_coeffs)
}

fn ratfunc() -> impl Strategy<Value = RationalFunction> {
    (poly(3), poly(3)).prop_filter_map("nonzero denominator", |(n, d)| RationalFunction::new(n, d).ok())
}

fn b1() -> &'static XAlgebra {
    static ALG: std::sync::OnceLock<XAlgebra> = std::sync::OnceLock::new();
    ALG.get_or_init(|| XAlgebra::new(&AlgebraContext::new(Kind::B, 1, 3).unwrap()))
}

// a random polynomial in the B1 generators of weight at most 2, as free words
fn nc_poly() -> impl Strategy<Value = NcPoly> {
    let gens = all_gens(b1().ctx(), 2);
    let n = gens.len();
    prop::collection::vec((prop::collection::vec(0..n, 0..=3), -3i64..=3), 1..=3).prop_map(move |terms| {
        let mut p = NcPoly::zero();
        for (w, c) in terms {
            let word: Vec<_> = w.iter().map(|&i| gens[i]).collect();
            p = p.add(&NcPoly::word(&word, Rational::from_int(c)));
        }
        p
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn shift_matches_evaluation(f in ratfunc(), c in rat(), x in rat()) {
        let g = f.substitute_shift(&c);
        if let (Ok(a), Ok(b)) = (g.eval(&x), f.eval(&(&x + &c))) {
            prop_assert_eq!(a, b);
        }
    }

    #[test]
    fn scale_matches_evaluation(f in ratfunc(), c in rat(), x in rat()) {
        prop_assume!(!c.is_zero());
        let g = f.substitute_scale(&c).unwrap();
        if let (Ok(a), Ok(b)) = (g.eval(&x), f.eval(&(&x * &c))) {
            prop_assert_eq!(a, b);
        }
    }

    #[test]
    fn field_operations_agree_with_evaluation(f in ratfunc(), g in ratfunc(), x in rat()) {
        if let (Ok(a), Ok(b), Ok(s), Ok(p)) = (f.eval(&x), g.eval(&x), (&f + &g).eval(&x), (&f * &g).eval(&x)) {
            prop_assert_eq!(s, &a + &b);
            prop_assert_eq!(p, &a * &b);
        }
    }

    #[test]
    fn normal_form_is_idempotent(p in nc_poly()) {
        let x = b1();
        let n = x.normal_order(&p);
        prop_assert!(x.is_normal(&n));
        prop_assert_eq!(x.normal_order(&n), n);
    }

    #[test]
    fn normal_form_is_linear(p in nc_poly(), q in nc_poly(), c in rat()) {
        let x = b1();
        let lhs = x.normal_order(&p.add(&q.scale(&c)));
        let rhs = x.normal_order(&p).add(&x.normal_order(&q).scale(&c));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn normal_product_is_associative(p in nc_poly(), q in nc_poly(), r in nc_poly()) {
        let x = b1();
        let (p, q, r) = (x.normal_order(&p), x.normal_order(&q), x.normal_order(&r));
        prop_assert_eq!(x.mul(&x.mul(&p, &q), &r), x.mul(&p, &x.mul(&q, &r)));
    }

    #[test]
    fn report_json_round_trips(seed in any::<u64>(), k in 1usize..6) {
        let rep = Report::new(yangian::RunInfo {
            ctx: "B2".into(), order: k, backend: "both".into(), seed, version: "0".into(),
        });
        let back = Report::from_json(&rep.to_json()).unwrap();
        prop_assert_eq!(back.to_json(), rep.to_json());
    }
}

#[test]
fn series_inverse_is_two_sided() {
    let alg = Arc::new(XAlgebra::new(&AlgebraContext::new(Kind::C, 1, 3).unwrap()));
    let t = abstract_t(&alg, 0).unwrap();
    let ring = SeriesRing::new(alg.clone(), 3);
    let inv = ring.invert_series_matrix(&t).unwrap();
    let n = t.rows();
    for i in 0..n {
        for j in 0..n {
            let mut acc = ring.zero();
            for k in 0..n {
                acc = ring.add(&acc, &ring.mul(t.get(i, k), inv.get(k, j)));
            }
            let want = if i == j { ring.one() } else { ring.zero() };
            assert!(ring.is_zero(&ring.sub(&acc, &want)), "entry ({i},{j})");
        }
    }
}

#[test]
fn generator_matrix_satisfies_defining_relation() {
    let alg = Arc::new(XAlgebra::new(&AlgebraContext::new(Kind::B, 1, 3).unwrap()));
    let t = abstract_t(&alg, 0).unwrap();
    let o = rtt_series(&alg, alg.ctx(), &t, 3).unwrap();
    assert!(o.is_pass(), "{o:?}");
}

#[test]
fn doubling_one_entry_breaks_defining_relation() {
    let alg = Arc::new(XAlgebra::new(&AlgebraContext::new(Kind::B, 1, 3).unwrap()));
    let ring = SeriesRing::new(alg.clone(), 3);
    let mut t = abstract_t(&alg, 0).unwrap();
    let x = t.get(0, 1).clone();
    t.set(0, 1, ring.add(&x, &x));
    assert_eq!(rtt_series(&alg, alg.ctx(), &t, 3).unwrap().status, Status::Fail);
}

#[test]
fn reports_do_not_depend_on_thread_count() {
    let mut sel = Selection::new(vec![Group::Center, Group::Relations]);
    sel.algebras = vec![(Kind::B, 1), (Kind::C, 2)];
    let mut one = verify(&sel, 1).unwrap();
    let mut two = verify(&sel, 2).unwrap();
    one.strip_timings();
    two.strip_timings();
    assert_eq!(one.to_json(), two.to_json());
    assert!(one.all_passed());
}
