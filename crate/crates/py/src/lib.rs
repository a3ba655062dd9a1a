//! Python bindings: run catalog groups, normal-order commutators.

use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use yangian::catalog::{verify as run_verify, Group, Selection};
use yangian::nc::XAlgebra;
use yangian::workspace::Backend;
use yangian::{AlgebraContext, Kind};

fn value_err(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn parse_kind(s: &str) -> PyResult<Kind> {
    s.parse().map_err(value_err)
}

/// Run a group of checks and return the JSON report.
#[pyfunction]
#[pyo3(signature = (group, kind=None, n=None, order=None, backend="both", families=None, seed=0, jobs=0))]
#[allow(clippy::too_many_arguments)]
fn verify(
    group: &str,
    kind: Option<&str>,
    n: Option<usize>,
    order: Option<usize>,
    backend: &str,
    families: Option<Vec<String>>,
    seed: u64,
    jobs: usize,
) -> PyResult<String> {
    let groups = if group == "all" { Group::ALL.to_vec() } else { vec![Group::parse(group).map_err(value_err)?] };
    let mut sel = Selection::new(groups);
    sel.order = order;
    sel.seed = seed;
    sel.families = families.unwrap_or_default();
    sel.backends = match backend {
        "both" => vec![Backend::Abstract, Backend::Oracle],
        b => vec![b.parse().map_err(value_err)?],
    };
    match (kind, n) {
        (Some(k), Some(n)) => {
            let k = parse_kind(k)?;
            AlgebraContext::new(k, n, 1).map_err(value_err)?;
            sel.algebras = vec![(k, n)];
        }
        (None, None) => {}
        _ => return Err(PyValueError::new_err("kind and n must be given together")),
    }
    let rep = run_verify(&sel, jobs).map_err(|e| PyRuntimeError::new_err(e.to_string()))?;
    Ok(rep.to_json())
}

/// Family keys of a group.
#[pyfunction]
fn families(group: &str) -> PyResult<Vec<String>> {
    if group == "all" {
        return Ok(yangian::catalog::all_families());
    }
    Ok(Group::parse(group).map_err(value_err)?.families())
}

/// Normal form of `[t_ij^(r), t_kl^(s)]` as a string.
#[pyfunction]
fn commutator(kind: &str, n: usize, a: (usize, usize, usize), b: (usize, usize, usize)) -> PyResult<String> {
    let ctx = AlgebraContext::new(parse_kind(kind)?, n, a.2.max(b.2).max(1)).map_err(value_err)?;
    let alg = XAlgebra::new(&ctx);
    let p = alg.commutator_coeff(0, (a.0, a.1), a.2, (b.0, b.1), b.2).map_err(value_err)?;
    Ok(alg.render(&p))
}

#[pymodule]
fn yangian_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    m.add_function(wrap_pyfunction!(families, m)?)?;
    m.add_function(wrap_pyfunction!(commutator, m)?)?;
    m.add("__version__", env!("CARGO_PKG_VERSION"))?;
    Ok(())
}
