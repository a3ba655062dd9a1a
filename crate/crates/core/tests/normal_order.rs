use yangian::nc::{Gen, NcPoly, XAlgebra};
use yangian::{AlgebraContext, Kind, Rational};

fn alg(kind: Kind, n: usize) -> XAlgebra {
    XAlgebra::new(&AlgebraContext::new(kind, n, 3).unwrap())
}

#[test]
fn gl2_degree_zero_commutators() {
    let y = alg(Kind::A, 2);
    // [t_12^(1), t_21^(1)] = t_11^(1) - t_22^(1)
    let c = y.commutator_coeff(0, (1, 2), 1, (2, 1), 1).unwrap();
    let want = y.t(0, 1, 1, 1).unwrap().sub(&y.t(0, 2, 2, 1).unwrap());
    assert_eq!(c, want);
}

#[test]
fn positive_powers_vanish() {
    for (kind, n) in [(Kind::B, 1), (Kind::C, 1), (Kind::D, 2), (Kind::B, 2)] {
        let x = alg(kind, n);
        let size = x.ctx().size;
        for i in 1..=size {
            for j in 1..=size {
                for k in 1..=size {
                    for l in 1..=size {
                        for r in 1..=3 {
                            x.commutator_coeff_checked(0, (i, j), r, (k, l), 1).unwrap();
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn jacobi_small() {
    let x = alg(Kind::B, 1);
    let gens: Vec<NcPoly> = (1..=3)
        .flat_map(|i| (1..=3).flat_map(move |j| (1..=2).map(move |r| (i, j, r))))
        .map(|(i, j, r)| x.t(0, i, j, r).unwrap())
        .collect();
    let br = |a: &NcPoly, b: &NcPoly| x.mul(a, b).sub(&x.mul(b, a));
    for a in &gens {
        for b in &gens {
            for c in &gens {
                let j = br(a, &br(b, c)).add(&br(b, &br(c, a))).add(&br(c, &br(a, b)));
                assert!(j.is_zero(), "{}", x.render(&j));
            }
        }
    }
    let _ = (Gen::central(0), Rational::one());
}
