//! Noncommutative polynomials and the normal-ordering engine.

mod algebra;
mod gen;
mod poly;

pub use algebra::{CacheStats, CentralKind, CentralSymbol, XAlgebra, XAlgebraBuilder};
pub use gen::Gen;
pub use poly::{Mono, NcPoly};
