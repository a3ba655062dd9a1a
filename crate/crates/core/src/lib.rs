//! Exact symbolic engine for extended Yangians `X(g_N)` of types B, C, D
//! (and `Y(gl_n)`) in the RTT presentation.

pub mod arith;
pub mod catalog;
pub mod context;
pub mod drinfeld;
pub mod nc;
pub mod oracle;
pub mod pbw;
pub mod error;
pub mod gauss;
pub mod identities;
pub mod morphisms;
pub mod relations;
pub mod report;
pub mod ring;
pub mod rmatrix;
pub mod series;
pub mod tensor;
pub mod workspace;

pub use arith::{Poly, Rational, RationalFunction};
pub use context::{AlgebraContext, Kind, RootData};
pub use error::{Error, Result};
pub use report::{CaseReport, Outcome, Report, RunInfo, Status};
