//! The verification catalog: every checkable family keyed by a stable
//! string, enumeration of its instances, and a parallel driver producing
//! JSON reports.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};
use std::time::Instant;

use rayon::prelude::*;

use crate::arith::Rational;
use crate::context::{AlgebraContext, Kind};
use crate::error::{Error, Result};
use crate::gauss::Gauss;
use crate::identities as id;
use crate::morphisms::{self, LowRank};
use crate::oracle::{verify_rtt_exact, verify_soundness, EvalAssignment};
use crate::pbw::{check_property, PbwProperty};
use crate::relations::{check_drinfeld, check_gauss, drinfeld_instances, gauss_instances, DRINFELD_FAMILIES, GAUSS_FAMILIES};
use crate::report::{CaseReport, Outcome, Report, RunInfo, Status};
use crate::ring::{MatrixRing, RationalFunctionField, Ring};
use crate::rmatrix::{verify_fusion, verify_projector, verify_ybe, FusionSide};
use crate::series::FunctionRing;
use crate::workspace::{exact_gauss, AbstractWorkspace, Backend, OracleWorkspace, Workspace};

/// Groups of families, one per CLI subcommand.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Group {
    Ybe,
    Fusion,
    Rtt,
    Relations,
    Drinfeld,
    Center,
    Embeddings,
    Symmetries,
    Lowrank,
    Pbw,
}

impl Group {
    pub const ALL: [Group; 10] = [
        Group::Ybe,
        Group::Fusion,
        Group::Rtt,
        Group::Relations,
        Group::Drinfeld,
        Group::Center,
        Group::Embeddings,
        Group::Symmetries,
        Group::Lowrank,
        Group::Pbw,
    ];

    pub fn key(self) -> &'static str {
        match self {
            Group::Ybe => "ybe",
            Group::Fusion => "fusion",
            Group::Rtt => "rtt",
            Group::Relations => "relations",
            Group::Drinfeld => "drinfeld",
            Group::Center => "center",
            Group::Embeddings => "embeddings",
            Group::Symmetries => "symmetries",
            Group::Lowrank => "lowrank",
            Group::Pbw => "pbw",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        Group::ALL
            .into_iter()
            .find(|g| g.key() == s)
            .ok_or_else(|| Error::Parse(format!("unknown group {s:?}")))
    }

    /// Family keys of the group.
    pub fn families(self) -> Vec<String> {
        let pre = |p: &str, xs: &[&str]| xs.iter().map(|x| format!("{p}/{x}")).collect::<Vec<_>>();
        match self {
            Group::Ybe => pre("rmatrix", &["ybe"]),
            Group::Fusion => pre("rmatrix", &["fusion", "fusion-opp", "projector"]),
            Group::Rtt => pre("oracle", &["expansion", "rtt", "soundness"]),
            Group::Relations => pre("gauss", GAUSS_FAMILIES),
            Group::Drinfeld => pre("drinfeld", DRINFELD_FAMILIES),
            Group::Center => pre("center", &["central", "kappa-product", "product", "recursion", "scalar"]),
            Group::Embeddings => pre(
                "embed",
                &[
                    "psi-commutes",
                    "psi-consistency",
                    "quasidet-minor",
                    "sub-gauss",
                    "sub-rtt",
                    "sub-unitarity",
                    "tau-commutes",
                    "tau-lower-skew",
                    "tau-quasidet",
                    "tau-upper-skew",
                ],
            ),
            Group::Symmetries => pre(
                "sym",
                &["exchange-e", "exchange-f", "kappa-telescoping", "mu-f", "reflection-e", "reflection-f", "sigma"],
            ),
            Group::Lowrank => pre("lowrank", &["drinfeld", "gauss", "rtt", "sqrt2-parity"]),
            Group::Pbw => PbwProperty::ALL.iter().map(|p| format!("pbw/{}", p.key())).collect(),
        }
    }

    /// Algebras checked when none is given explicitly.
    pub fn default_algebras(self) -> Vec<(Kind, usize)> {
        match self {
            Group::Ybe | Group::Fusion | Group::Rtt => {
                let mut v = vec![(Kind::A, 2), (Kind::B, 1), (Kind::B, 2), (Kind::C, 1), (Kind::C, 2), (Kind::D, 2), (Kind::D, 3)];
                if self == Group::Fusion {
                    v.retain(|(k, _)| *k != Kind::A);
                }
                v
            }
            Group::Lowrank => vec![],
            _ => vec![(Kind::B, 1), (Kind::B, 2), (Kind::C, 2), (Kind::D, 2), (Kind::D, 3)],
        }
    }
}

/// All family keys of all groups.
pub fn all_families() -> Vec<String> {
    Group::ALL.iter().flat_map(|g| g.families()).collect()
}

/// One instance of one family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Case {
    pub family: String,
    /// `None` for families that do not depend on one algebra (low-rank maps).
    pub ctx: Option<AlgebraContext>,
    pub backend: Option<Backend>,
    pub idx: Vec<usize>,
    pub lowrank: Option<LowRank>,
    pub seed: Option<u64>,
}

impl Case {
    fn sort_key(&self) -> impl Ord + '_ {
        let c = self.ctx.as_ref().map(|c| (c.kind, c.n, c.order));
        (&self.family, c, self.lowrank, self.backend, &self.idx)
    }

    pub fn params(&self) -> BTreeMap<String, String> {
        let mut p = BTreeMap::new();
        if let Some(c) = &self.ctx {
            p.insert("type".into(), c.kind.to_string());
            p.insert("n".into(), c.n.to_string());
            p.insert("N".into(), c.size.to_string());
            p.insert("K".into(), c.order.to_string());
        }
        if let Some(b) = self.backend {
            p.insert("backend".into(), b.to_string());
        }
        if !self.idx.is_empty() {
            let s: Vec<String> = self.idx.iter().map(|i| i.to_string()).collect();
            p.insert("idx".into(), s.join(","));
        }
        if let Some(w) = self.lowrank {
            p.insert("map".into(), w.key().into());
        }
        if let Some(s) = self.seed {
            p.insert("seed".into(), s.to_string());
        }
        p
    }
}

/// What to enumerate.
#[derive(Clone, Debug)]
pub struct Selection {
    pub groups: Vec<Group>,
    /// Explicit algebras (kind, rank); empty means each group's defaults.
    pub algebras: Vec<(Kind, usize)>,
    pub backends: Vec<Backend>,
    /// Truncation order for both backends; `None` means 3 abstract, 4 oracle.
    pub order: Option<usize>,
    /// Family filter: full keys (`gauss/hihj`) or bare names (`hihj`); empty selects all.
    pub families: Vec<String>,
    pub seed: u64,
}

impl Selection {
    pub fn new(groups: Vec<Group>) -> Self {
        Selection {
            groups,
            algebras: vec![],
            backends: vec![Backend::Abstract, Backend::Oracle],
            order: None,
            families: vec![],
            seed: 0,
        }
    }

    pub fn order_for(&self, b: Backend) -> usize {
        self.order.unwrap_or(match b {
            Backend::Abstract => 3,
            Backend::Oracle => 4,
        })
    }

    /// Reject unknown family names, listing the known keys.
    pub fn validate(&self) -> Result<()> {
        let known = all_families();
        for f in &self.families {
            if !known.iter().any(|k| k == f || k.rsplit('/').next() == Some(f.as_str())) {
                return Err(Error::Parse(format!("unknown family {f:?}; known families: {}", known.join(", "))));
            }
        }
        Ok(())
    }

    fn wants(&self, family: &str) -> bool {
        self.families.is_empty()
            || self.families.iter().any(|f| f == family || family.rsplit('/').next() == Some(f.as_str()))
    }

    fn algebras_for(&self, g: Group) -> Vec<(Kind, usize)> {
        if self.algebras.is_empty() {
            g.default_algebras()
        } else {
            self.algebras.clone()
        }
    }
}

fn pairs(lo: usize, hi: usize) -> Vec<Vec<usize>> {
    (lo..=hi).flat_map(|i| (lo..=hi).map(move |j| vec![i, j])).collect()
}

/// Index tuples of a non-relation family for one algebra; empty if the
/// family does not apply.
fn identity_instances(family: &str, ctx: &AlgebraContext, backend: Backend) -> Vec<Vec<usize>> {
    let n = ctx.n;
    let orth_or_sympl = ctx.kind != Kind::A;
    let unit = vec![vec![]];
    let none = vec![];
    let sub_ok = |m: usize| ctx.sub_context(m).is_ok();
    match family {
        "center/central" => {
            if backend == Backend::Abstract && orth_or_sympl {
                unit
            } else {
                none
            }
        }
        "center/scalar" | "center/product" | "center/kappa-product" | "sym/kappa-telescoping" | "sym/mu-f" | "sym/sigma" => {
            if orth_or_sympl {
                unit
            } else {
                none
            }
        }
        "center/recursion" | "embed/tau-upper-skew" | "embed/tau-lower-skew" | "embed/tau-quasidet" | "embed/tau-commutes" => {
            if orth_or_sympl && sub_ok(1) {
                unit
            } else {
                none
            }
        }
        "embed/sub-gauss" | "embed/sub-rtt" | "embed/sub-unitarity" | "embed/psi-commutes" => {
            if orth_or_sympl && sub_ok(1) && ctx.sub_context(1).is_ok_and(|s| s.n > 0) {
                vec![vec![1]]
            } else {
                none
            }
        }
        "embed/psi-consistency" => {
            if orth_or_sympl && sub_ok(2) && ctx.sub_context(1).is_ok_and(|s| s.sub_context(1).is_ok()) {
                vec![vec![1, 1]]
            } else {
                none
            }
        }
        "embed/quasidet-minor" => {
            let mut v = vec![];
            for m in 1..=2 {
                if orth_or_sympl && sub_ok(m) && 2 * m < ctx.size {
                    for p in pairs(m + 1, ctx.size - m) {
                        v.push(vec![m, p[0], p[1]]);
                    }
                }
            }
            v
        }
        "sym/reflection-e" | "sym/reflection-f" => {
            if !orth_or_sympl {
                return none;
            }
            (1..=n).filter(|&i| i < n || ctx.kind != Kind::C).map(|i| vec![i]).collect()
        }
        "sym/exchange-e" | "sym/exchange-f" => {
            if !orth_or_sympl {
                return none;
            }
            (1..n).map(|i| vec![i]).collect()
        }
        _ => none,
    }
}

/// All cases of a selection, sorted lexicographically by family and parameters.
pub fn enumerate_catalog(sel: &Selection) -> Result<Vec<Case>> {
    sel.validate()?;
    let mut out = Vec::new();
    for &g in &sel.groups {
        for family in g.families() {
            if !sel.wants(&family) {
                continue;
            }
            let mk = |ctx: Option<AlgebraContext>, backend: Option<Backend>, idx: Vec<usize>| Case {
                family: family.clone(),
                ctx,
                backend,
                idx,
                lowrank: None,
                seed: None,
            };
            if g == Group::Lowrank {
                let k = sel.order.unwrap_or(4);
                for w in LowRank::ALL {
                    // only the orthogonal rank-one map adjoins a square root
                    if family == "lowrank/sqrt2-parity" && w != LowRank::B1 {
                        continue;
                    }
                    out.push(Case { lowrank: Some(w), ctx: Some(w.source(k)?), backend: Some(Backend::Abstract), ..mk(None, None, vec![]) });
                }
                continue;
            }
            let mut algebras = sel.algebras_for(g);
            if sel.algebras.is_empty() && family == "embed/psi-consistency" {
                algebras.push((Kind::B, 3));
            }
            for (kind, n) in algebras {
                let probe = AlgebraContext::new(kind, n, 1)?;
                match g {
                    Group::Ybe | Group::Fusion | Group::Rtt => {
                        if g == Group::Fusion && kind == Kind::A {
                            continue;
                        }
                        let k = sel.order_for(Backend::Oracle);
                        let ctx = probe.with_order(k);
                        let backend = (g == Group::Rtt).then_some(Backend::Oracle);
                        out.push(mk(Some(ctx), backend, vec![]));
                    }
                    Group::Pbw => {
                        let ctx = probe.with_order(sel.order_for(Backend::Abstract));
                        let seed = sel.seed.wrapping_mul(1_000_003).wrapping_add((kind as u64) * 101 + n as u64);
                        out.push(Case { seed: Some(seed), ..mk(Some(ctx), Some(Backend::Abstract), vec![]) });
                    }
                    _ => {
                        if kind == Kind::A {
                            continue;
                        }
                        for &b in &sel.backends {
                            let ctx = probe.with_order(sel.order_for(b));
                            let insts = match g {
                                Group::Relations => gauss_instances(&ctx, family.trim_start_matches("gauss/"))?,
                                Group::Drinfeld => drinfeld_instances(&ctx, family.trim_start_matches("drinfeld/"))?,
                                _ => identity_instances(&family, &ctx, b),
                            };
                            for idx in insts {
                                out.push(mk(Some(ctx.clone()), Some(b), idx));
                            }
                        }
                    }
                }
            }
        }
    }
    out.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));
    out.dedup();
    Ok(out)
}

type Slot<T> = Arc<OnceLock<std::result::Result<Arc<T>, String>>>;

/// Lazily built, shared per-algebra state.
#[derive(Default)]
pub struct Engines {
    abstract_ws: Mutex<HashMap<AlgebraContext, Slot<AbstractWorkspace>>>,
    oracle_ws: Mutex<HashMap<AlgebraContext, Slot<OracleWorkspace>>>,
    exact: Mutex<HashMap<AlgebraContext, Slot<Gauss<MatrixRing<RationalFunctionField>>>>>,
    lowrank: Mutex<HashMap<(LowRank, usize), Slot<AbstractWorkspace>>>,
}

fn cached<K: std::hash::Hash + Eq + Clone, T>(map: &Mutex<HashMap<K, Slot<T>>>, key: &K, build: impl FnOnce() -> Result<T>) -> Result<Arc<T>> {
    let slot = map.lock().expect("engine cache poisoned").entry(key.clone()).or_default().clone();
    slot.get_or_init(|| build().map(Arc::new).map_err(|e| e.to_string()))
        .clone()
        .map_err(Error::Internal)
}

impl Engines {
    pub fn abstract_ws(&self, ctx: &AlgebraContext) -> Result<Arc<AbstractWorkspace>> {
        cached(&self.abstract_ws, ctx, || AbstractWorkspace::new_abstract(ctx))
    }

    pub fn oracle_ws(&self, ctx: &AlgebraContext) -> Result<Arc<OracleWorkspace>> {
        cached(&self.oracle_ws, ctx, || OracleWorkspace::new_oracle(ctx, Rational::zero()))
    }

    pub fn exact(&self, ctx: &AlgebraContext) -> Result<Arc<Gauss<MatrixRing<RationalFunctionField>>>> {
        let key = ctx.with_order(1);
        cached(&self.exact, &key, || exact_gauss(&key, Rational::zero()))
    }

    pub fn lowrank(&self, w: LowRank, order: usize) -> Result<Arc<AbstractWorkspace>> {
        cached(&self.lowrank, &(w, order), || morphisms::lowrank_workspace(w, order))
    }
}

/// Univariate identity families, generic over the backend's function ring.
fn univariate<S: FunctionRing + Clone>(g: &Gauss<S>, family: &str, idx: &[usize]) -> Result<Outcome> {
    let first = || idx.first().copied().ok_or_else(|| Error::IndexOutOfRange(format!("{family} needs an index")));
    match family {
        "center/scalar" => id::center_scalar(g),
        "center/product" => id::center_product(g),
        "center/kappa-product" => id::center_kappa(g),
        "center/recursion" => id::center_recursion(g),
        "sym/kappa-telescoping" => id::kappa_telescoping(g),
        "sym/reflection-e" => id::reflection(g, first()?, true),
        "sym/reflection-f" => id::reflection(g, first()?, false),
        "sym/exchange-e" => id::h_exchange(g, first()?, true),
        "sym/exchange-f" => id::h_exchange(g, first()?, false),
        "embed/quasidet-minor" => match idx {
            [m, i, j] => id::quasidet_minor(g, *m, *i, *j),
            _ => Err(Error::IndexOutOfRange(format!("{family} needs (m, i, j)"))),
        },
        "embed/sub-gauss" => id::sub_gauss(g, first()?),
        "embed/sub-unitarity" => {
            let m = first()?;
            let sub = g.ctx.sub_context(m)?;
            Ok(crate::drinfeld::compute_center(&g.ring, &sub, &g.sub_t(m)?)?.1)
        }
        "embed/psi-consistency" => match idx {
            [l, m] => id::psi_consistency(g, *l, *m),
            _ => Err(Error::IndexOutOfRange(format!("{family} needs (l, m)"))),
        },
        "embed/tau-upper-skew" => id::tau_skew(g, true),
        "embed/tau-lower-skew" => id::tau_skew(g, false),
        "embed/tau-quasidet" => id::tau_quasidet(g),
        _ => Err(Error::UnsupportedOperator(format!("{family} is not a univariate identity"))),
    }
}

/// Bivariate families on a series workspace.
fn bivariate<R: Ring + Clone>(ws: &Workspace<R>, family: &str, idx: &[usize]) -> Result<Outcome> {
    if let Some(f) = family.strip_prefix("gauss/") {
        return check_gauss(ws, f, idx);
    }
    if let Some(f) = family.strip_prefix("drinfeld/") {
        return check_drinfeld(ws, f, idx);
    }
    match family {
        "embed/psi-commutes" => id::psi_commutes(&ws.gauss, idx.first().copied().unwrap_or(1)),
        "embed/tau-commutes" => id::tau_commutes(&ws.gauss),
        "embed/sub-rtt" => {
            let m = idx.first().copied().unwrap_or(1);
            id::rtt_series(ws.base(), &ws.ctx.sub_context(m)?, &ws.gauss.sub_t(m)?, ws.order())
        }
        _ => Err(Error::UnsupportedOperator(format!("{family} is not a bivariate relation"))),
    }
}

fn is_bivariate(family: &str) -> bool {
    family.starts_with("gauss/")
        || family.starts_with("drinfeld/")
        || matches!(family, "embed/psi-commutes" | "embed/tau-commutes")
}

fn run_lowrank(eng: &Engines, family: &str, w: LowRank, order: usize) -> Result<Outcome> {
    let ws = eng.lowrank(w, order)?;
    let all = |fams: &[&str], gauss: bool| -> Result<Outcome> {
        for f in fams {
            let insts = if gauss { gauss_instances(&ws.ctx, f)? } else { drinfeld_instances(&ws.ctx, f)? };
            for idx in insts {
                let o = if gauss { check_gauss(&ws, f, &idx)? } else { check_drinfeld(&ws, f, &idx)? };
                if matches!(o.status, Status::Fail | Status::Error) {
                    return Ok(Outcome { witness: o.witness.map(|x| format!("{f} {idx:?}: {x}")), ..o });
                }
            }
        }
        Ok(Outcome::pass())
    };
    match family {
        "lowrank/rtt" => morphisms::lowrank_rtt(&ws),
        "lowrank/sqrt2-parity" => morphisms::sqrt2_parity(&ws),
        "lowrank/gauss" => all(GAUSS_FAMILIES, true),
        "lowrank/drinfeld" => all(DRINFELD_FAMILIES, false),
        _ => Err(Error::UnsupportedOperator(family.into())),
    }
}

/// Run one case.
pub fn check_case(eng: &Engines, case: &Case) -> Result<Outcome> {
    let f = case.family.as_str();
    if let Some(w) = case.lowrank {
        let k = case.ctx.as_ref().map(|c| c.order).unwrap_or(4);
        return run_lowrank(eng, f, w, k);
    }
    let ctx = case.ctx.as_ref().ok_or_else(|| Error::Internal(format!("{f} needs an algebra")))?;
    let idx = &case.idx;
    match f {
        "rmatrix/ybe" => return verify_ybe(ctx),
        "rmatrix/fusion" => return verify_fusion(ctx, FusionSide::Direct),
        "rmatrix/fusion-opp" => return verify_fusion(ctx, FusionSide::Opposite),
        "rmatrix/projector" => return verify_projector(ctx),
        "oracle/rtt" => return EvalAssignment::new(ctx, Rational::zero()).verify_rtt(),
        "oracle/expansion" => return EvalAssignment::new(ctx, Rational::zero()).verify_expansion(ctx.order),
        "oracle/soundness" => return verify_soundness(ctx, ctx.order.min(3)),
        _ => {}
    }
    if let Some(p) = f.strip_prefix("pbw/") {
        let prop = PbwProperty::ALL
            .into_iter()
            .find(|x| x.key() == p)
            .ok_or_else(|| Error::Parse(format!("unknown property {p}")))?;
        return check_property(ctx, prop, case.seed.unwrap_or(0));
    }
    let backend = case.backend.unwrap_or(Backend::Abstract);
    match (f, backend) {
        ("center/central", _) => return id::center_central(&*eng.abstract_ws(ctx)?, 4),
        ("sym/mu-f", Backend::Abstract) => return morphisms::mu_f_abstract(ctx),
        ("sym/mu-f", Backend::Oracle) => return morphisms::mu_f_oracle(ctx),
        ("sym/sigma", Backend::Abstract) => return morphisms::sigma_involution_abstract(ctx),
        ("sym/sigma", Backend::Oracle) => return morphisms::sigma_involution_oracle(ctx),
        ("embed/sub-rtt", Backend::Oracle) => {
            let g = eng.exact(ctx)?;
            let m = idx.first().copied().unwrap_or(1);
            return verify_rtt_exact(&ctx.sub_context(m)?, &g.sub_t(m)?);
        }
        _ => {}
    }
    if is_bivariate(f) || f == "embed/sub-rtt" {
        return match backend {
            Backend::Abstract => bivariate(&*eng.abstract_ws(ctx)?, f, idx),
            Backend::Oracle => bivariate(&*eng.oracle_ws(ctx)?, f, idx),
        };
    }
    match backend {
        Backend::Abstract => univariate(&eng.abstract_ws(ctx)?.gauss, f, idx),
        Backend::Oracle => univariate(&*eng.exact(ctx)?, f, idx),
    }
}

/// Run `case`, timing it and turning errors into `ERROR` entries.
pub fn run_case(eng: &Engines, case: &Case) -> CaseReport {
    let t = Instant::now();
    let o = check_case(eng, case).unwrap_or_else(Outcome::from);
    CaseReport {
        id: case.family.clone(),
        params: case.params(),
        status: o.status,
        witness: o.witness,
        millis: t.elapsed().as_millis() as u64,
    }
}

/// Run all cases on `jobs` threads (`0` = rayon default); the report keeps
/// the catalog order.
pub fn run_catalog(cases: &[Case], jobs: usize, run: RunInfo) -> Result<Report> {
    let eng = Engines::default();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Error::Internal(e.to_string()))?;
    let results: Vec<CaseReport> = pool.install(|| cases.par_iter().map(|c| run_case(&eng, c)).collect());
    let mut rep = Report::new(run);
    for r in results {
        rep.push(r);
    }
    Ok(rep)
}

/// Run metadata for a selection.
pub fn run_info(sel: &Selection, cases: &[Case]) -> RunInfo {
    let mut labels: Vec<String> = cases.iter().filter_map(|c| c.ctx.as_ref().map(|x| x.label())).collect();
    labels.sort();
    labels.dedup();
    let backend = match sel.backends.as_slice() {
        [b] => b.to_string(),
        _ => "both".into(),
    };
    RunInfo {
        ctx: labels.join(","),
        order: sel.order.unwrap_or(sel.order_for(sel.backends.first().copied().unwrap_or(Backend::Abstract))),
        backend,
        seed: sel.seed,
        version: env!("CARGO_PKG_VERSION").into(),
    }
}

/// Enumerate and run a selection.
pub fn verify(sel: &Selection, jobs: usize) -> Result<Report> {
    let cases = enumerate_catalog(sel)?;
    run_catalog(&cases, jobs, run_info(sel, &cases))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_family_is_rejected() {
        let mut sel = Selection::new(vec![Group::Relations]);
        sel.families = vec!["nope".into()];
        let e = enumerate_catalog(&sel).unwrap_err().to_string();
        assert!(e.contains("gauss/hihj"));
    }

    #[test]
    fn catalog_is_sorted_and_filtered() {
        let mut sel = Selection::new(vec![Group::Relations]);
        sel.algebras = vec![(Kind::B, 2)];
        sel.families = vec!["hihj".into(), "drinfeld/kikj".into()];
        let cases = enumerate_catalog(&sel).unwrap();
        assert!(cases.iter().all(|c| c.family == "gauss/hihj"));
        assert_eq!(cases.len(), 2 * 9);
        let keys: Vec<_> = cases.iter().map(|c| c.sort_key()).collect();
        assert!(keys.windows(2).all(|w| w[0] <= w[1]));
    }

    #[test]
    fn small_run_passes() {
        let mut sel = Selection::new(vec![Group::Center, Group::Symmetries]);
        sel.algebras = vec![(Kind::B, 1)];
        let rep = verify(&sel, 2).unwrap();
        for c in &rep.cases {
            assert_eq!(c.status, Status::Pass, "{} {:?} {:?}", c.id, c.params, c.witness);
        }
        assert!(!rep.cases.is_empty());
    }
}
