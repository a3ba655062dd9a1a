//! Properties of the normal-ordering engine on random input.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::context::AlgebraContext;
use crate::error::Result;
use crate::nc::{Gen, NcPoly, XAlgebra};
use crate::report::Outcome;
use crate::ring::Ring;

/// Which engine property to test.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PbwProperty {
    Termination,
    Idempotence,
    Jacobi,
    DegreeDrop,
}

impl PbwProperty {
    pub const ALL: [PbwProperty; 4] = [PbwProperty::DegreeDrop, PbwProperty::Idempotence, PbwProperty::Jacobi, PbwProperty::Termination];

    pub fn key(self) -> &'static str {
        match self {
            PbwProperty::Termination => "termination",
            PbwProperty::Idempotence => "idempotence",
            PbwProperty::Jacobi => "jacobi",
            PbwProperty::DegreeDrop => "degree-drop",
        }
    }
}

/// All generators `t_ij^(r)` with `r <= order`, reduced or not.
pub fn all_gens(ctx: &AlgebraContext, order: usize) -> Vec<Gen> {
    let n = ctx.size;
    (1..=order).flat_map(|r| (1..=n).flat_map(move |i| (1..=n).map(move |j| Gen::t(0, i, j, r)))).collect()
}

/// Random word of `len` letters with total order at most `max_weight`.
fn random_word(rng: &mut ChaCha8Rng, gens: &[Gen], len: usize, max_weight: usize) -> NcPoly {
    loop {
        let w: Vec<Gen> = (0..len).map(|_| *gens.choose(rng).expect("nonempty")).collect();
        if w.iter().map(|g| g.order()).sum::<usize>() <= max_weight.max(len) {
            return NcPoly::word(&w, crate::Rational::one());
        }
    }
}

/// Number of random samples used by [`check_property`].
pub const SAMPLES: usize = 100;

pub fn check_property(ctx: &AlgebraContext, prop: PbwProperty, seed: u64) -> Result<Outcome> {
    let alg = XAlgebra::new(ctx);
    let k = ctx.order;
    let gens = all_gens(ctx, k);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    // longer words blow up to tens of thousands of terms
    let max_weight = k + 3;
    match prop {
        PbwProperty::Termination => {
            // words in all generators, reduced or not, of length up to 4
            for _ in 0..SAMPLES {
                let len = rng.gen_range(1..=4);
                let w = random_word(&mut rng, &gens, len, max_weight);
                let nf = alg.normal_order(&w);
                if !alg.is_normal(&nf) {
                    return Ok(Outcome::fail(format!("normal form of {} is not ordered", alg.render(&w))));
                }
            }
        }
        PbwProperty::Idempotence => {
            for _ in 0..SAMPLES {
                let w = random_word(&mut rng, &gens, 4, max_weight);
                let nf = alg.normal_order(&w);
                if alg.normal_order(&nf) != nf {
                    return Ok(Outcome::fail(format!("normal_order is not idempotent on {}", alg.render(&w))));
                }
            }
        }
        PbwProperty::Jacobi => {
            for _ in 0..SAMPLES {
                let t: Vec<NcPoly> = (0..3).map(|_| alg.normal_order(&random_word(&mut rng, &gens, 1, k))).collect();
                let br = |a: &NcPoly, b: &NcPoly| alg.commutator(a, b);
                let j = br(&t[0], &br(&t[1], &t[2])).add(&br(&t[1], &br(&t[2], &t[0]))).add(&br(&t[2], &br(&t[0], &t[1])));
                if !j.is_zero() {
                    return Ok(Outcome::fail(format!("Jacobi sum {}", alg.render(&j))));
                }
            }
        }
        PbwProperty::DegreeDrop => {
            // grading deg t_ij^(r) = r, for which the associated graded algebra is commutative
            let weight = |p: &NcPoly| p.iter().map(|(w, _)| w.iter().map(|g| g.order()).sum::<usize>()).max();
            let reduced: Vec<Gen> = gens.iter().copied().filter(|g| alg.is_reduced(*g)).collect();
            for g in &gens {
                let nf = alg.t(0, g.i(), g.j(), g.order())?;
                // in the grading deg t_ij^(r) = r - 1 the rewriting is linear in top degree
                let mut top = nf.iter().filter(|(w, _)| w.iter().map(|x| x.degree()).sum::<usize>() >= g.degree());
                if top.any(|(w, _)| w.len() != 1 || w[0].order() != g.order()) {
                    return Ok(Outcome::fail(format!("normal form of {} has nonlinear top-degree part", alg.gen_name(*g))));
                }
            }
            for (x, a) in reduced.iter().enumerate() {
                for b in &reduced[..x] {
                    let c = alg.commutator_gens(*a, *b);
                    if weight(&c).is_some_and(|d| d >= a.order() + b.order()) {
                        return Ok(Outcome::fail(format!("[{}, {}] has degree {:?}", alg.gen_name(*a), alg.gen_name(*b), weight(&c))));
                    }
                }
            }
        }
    }
    Ok(Outcome::pass())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::context::Kind;

    #[test]
    fn properties_hold_for_b1() {
        let ctx = AlgebraContext::new(Kind::B, 1, 3).unwrap();
        for p in PbwProperty::ALL {
            let o = check_property(&ctx, p, 7).unwrap();
            assert!(o.is_pass(), "{p:?} {o:?}");
        }
    }
}
