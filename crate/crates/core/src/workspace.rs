//! Per-algebra computation state for the two backends: the generator matrix
//! `T(u)` as truncated series, its Gauss data and the Drinfeld series.

use std::sync::{Arc, OnceLock};

use serde::{Deserialize, Serialize};

use crate::arith::Rational;
use crate::context::AlgebraContext;
use crate::drinfeld::{build_drinfeld, Drinfeld};
use crate::error::{Error, Result};
use crate::gauss::{Gauss, GaussRoute};
use crate::nc::XAlgebra;
use crate::oracle::EvalAssignment;
use crate::ring::{MatrixRing, RationalField, RationalFunctionField, Ring, RingMatrix};
use crate::series::{BiRing, SeriesRing, USeries};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Backend {
    /// Normal-ordered polynomials in the generators `t_ij^(r)`.
    Abstract,
    /// Images under the evaluation homomorphism into `N x N` matrices.
    Oracle,
}

impl std::fmt::Display for Backend {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Backend::Abstract => "abstract",
            Backend::Oracle => "oracle",
        })
    }
}

impl std::str::FromStr for Backend {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "abstract" => Ok(Backend::Abstract),
            "oracle" => Ok(Backend::Oracle),
            other => Err(Error::Parse(format!("unknown backend {other:?}"))),
        }
    }
}

/// `T(u)` over `SeriesRing<R>` with lazily computed Gauss and Drinfeld data.
pub struct Workspace<R: Ring + Clone> {
    pub ctx: AlgebraContext,
    pub gauss: Gauss<SeriesRing<R>>,
    drinfeld: OnceLock<std::result::Result<Drinfeld<USeries<R::Elem>>, String>>,
}

pub type AbstractWorkspace = Workspace<Arc<XAlgebra>>;
pub type OracleWorkspace = Workspace<MatrixRing<RationalField>>;

impl<R: Ring + Clone> Workspace<R> {
    pub fn from_matrix(base: R, ctx: &AlgebraContext, t: RingMatrix<USeries<R::Elem>>) -> Result<Self> {
        let ring = SeriesRing::new(base, ctx.order);
        let gauss = Gauss::new(ring, ctx, t, GaussRoute::Quasideterminant)?;
        Ok(Workspace { ctx: ctx.clone(), gauss, drinfeld: OnceLock::new() })
    }

    pub fn ring(&self) -> &SeriesRing<R> {
        &self.gauss.ring
    }

    pub fn base(&self) -> &R {
        &self.gauss.ring.base
    }

    pub fn bi(&self) -> BiRing<'_, R> {
        BiRing::new(self.base())
    }

    pub fn order(&self) -> usize {
        self.ctx.order
    }

    pub fn drinfeld(&self) -> Result<&Drinfeld<USeries<R::Elem>>> {
        self.drinfeld
            .get_or_init(|| build_drinfeld(&self.gauss).map_err(|e| e.to_string()))
            .as_ref()
            .map_err(|e| Error::Internal(e.clone()))
    }
}

impl AbstractWorkspace {
    pub fn new_abstract(ctx: &AlgebraContext) -> Result<Self> {
        let alg = Arc::new(XAlgebra::new(ctx));
        Self::with_algebra(alg, 0)
    }

    /// Workspace for component `tag` of an existing algebra.
    pub fn with_algebra(alg: Arc<XAlgebra>, tag: u8) -> Result<Self> {
        let ctx = alg.component(tag).clone();
        let t = abstract_t(&alg, tag)?;
        Self::from_matrix(alg, &ctx, t)
    }

    pub fn algebra(&self) -> &Arc<XAlgebra> {
        self.base()
    }
}

/// `T(u)` of component `tag` with coefficients `t_ij^(r)`, `r <= K`.
pub fn abstract_t(alg: &XAlgebra, tag: u8) -> Result<RingMatrix<USeries<crate::nc::NcPoly>>> {
    let ctx = alg.component(tag);
    let n = ctx.size;
    let mut entries = Vec::with_capacity(n * n);
    for i in 1..=n {
        for j in 1..=n {
            let mut c = Vec::with_capacity(ctx.order + 1);
            c.push(if i == j { alg.one() } else { alg.zero() });
            for r in 1..=ctx.order {
                c.push(alg.t(tag, i, j, r)?);
            }
            entries.push(USeries::new(c));
        }
    }
    Ok(RingMatrix::from_fn(n, n, |i, j| entries[i * n + j].clone()))
}

impl OracleWorkspace {
    pub fn new_oracle(ctx: &AlgebraContext, a: Rational) -> Result<Self> {
        let ev = EvalAssignment::new(ctx, a);
        Self::from_matrix(ev.matrices(), ctx, ev.series_t(ctx.order))
    }
}

/// Gauss data of the evaluation images as exact rational-function matrices,
/// computed by successive Schur complements.
pub fn exact_gauss(ctx: &AlgebraContext, a: Rational) -> Result<Gauss<MatrixRing<RationalFunctionField>>> {
    let ev = EvalAssignment::new(ctx, a);
    Gauss::new(ev.exact_ring(), ctx, ev.exact_t(), GaussRoute::Schur)
}
