//! Algebra contexts, index conventions and root data.
//!
//! Indices are 1-based throughout the public API, matching the usual
//! `t_ij(u)` labelling; `prime(i) = N - i + 1`.

use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

use crate::arith::Rational;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Kind {
    /// `Y(gl_n)`, no `Q` term.
    A,
    /// `o_{2n+1}`
    B,
    /// `sp_{2n}`
    C,
    /// `o_{2n}`
    D,
}

impl Kind {
    pub fn is_orthogonal(self) -> bool {
        matches!(self, Kind::B | Kind::D)
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Kind::A => "A",
            Kind::B => "B",
            Kind::C => "C",
            Kind::D => "D",
        };
        f.write_str(s)
    }
}

impl FromStr for Kind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Ok(Kind::A),
            "B" => Ok(Kind::B),
            "C" => Ok(Kind::C),
            "D" => Ok(Kind::D),
            other => Err(Error::Parse(format!("unknown type {other:?} (expected A, B, C or D)"))),
        }
    }
}

/// Type, rank, matrix size, `kappa` and truncation order of one algebra.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AlgebraContext {
    pub kind: Kind,
    /// Rank `n`; for type A this is the size of `gl_n`.
    pub n: usize,
    /// Matrix size `N`.
    pub size: usize,
    pub kappa: Rational,
    /// Truncation order `K` for series in `u^{-1}`.
    pub order: usize,
}

impl AlgebraContext {
    pub fn new(kind: Kind, n: usize, order: usize) -> Result<Self> {
        let size = match kind {
            Kind::A => n,
            Kind::B => 2 * n + 1,
            Kind::C | Kind::D => 2 * n,
        };
        let min_rank = match kind {
            Kind::A | Kind::B | Kind::C => 1,
            Kind::D => 2,
        };
        if n < min_rank {
            return Err(Error::InvalidContext(format!("type {kind} needs rank >= {min_rank}, got {n}")));
        }
        if size > 100 {
            return Err(Error::InvalidContext(format!("matrix size {size} is too large")));
        }
        if order == 0 {
            return Err(Error::InvalidContext("truncation order must be positive".into()));
        }
        let kappa = match kind {
            Kind::A => Rational::zero(),
            Kind::B | Kind::D => Rational::new(size as i64, 2) - Rational::one(),
            Kind::C => Rational::new(size as i64, 2) + Rational::one(),
        };
        Ok(AlgebraContext { kind, n, size, kappa, order })
    }

    /// Context from the matrix size `N` instead of the rank.
    pub fn from_size(kind: Kind, size: usize, order: usize) -> Result<Self> {
        let n = match kind {
            Kind::A => size,
            Kind::B if size % 2 == 1 => size / 2,
            Kind::C | Kind::D if size % 2 == 0 => size / 2,
            _ => return Err(Error::InvalidContext(format!("type {kind} has no matrix size {size}"))),
        };
        Self::new(kind, n, order)
    }

    pub fn with_order(&self, order: usize) -> Self {
        AlgebraContext { order, ..self.clone() }
    }

    pub fn label(&self) -> String {
        format!("{}{}", self.kind, self.n)
    }

    pub fn has_q(&self) -> bool {
        self.kind != Kind::A
    }

    pub fn is_symplectic(&self) -> bool {
        self.kind == Kind::C
    }

    pub fn prime(&self, i: usize) -> usize {
        self.size + 1 - i
    }

    /// `epsilon_i`: `-1` on the second half in the symplectic case, else `+1`.
    pub fn eps(&self, i: usize) -> i64 {
        if self.is_symplectic() && i > self.n {
            -1
        } else {
            1
        }
    }

    /// `theta_ij`: `1` for orthogonal, `eps_i eps_j` for symplectic.
    pub fn theta(&self, i: usize, j: usize) -> i64 {
        self.eps(i) * self.eps(j)
    }

    /// Sign `s` in `PQ = QP = s Q`.
    pub fn pq_sign(&self) -> i64 {
        if self.is_symplectic() {
            -1
        } else {
            1
        }
    }

    /// Context of the subalgebra on indices `m+1..(m+1)'`, relabelled `1..N-2m`.
    pub fn sub_context(&self, m: usize) -> Result<Self> {
        if self.kind == Kind::A {
            return Err(Error::InvalidContext("no sub-context for type A".into()));
        }
        if 2 * m >= self.size {
            return Err(Error::InvalidContext(format!("cannot remove {m} outer index pairs from N = {}", self.size)));
        }
        let sub = self.size - 2 * m;
        let n = match self.kind {
            Kind::B => (sub - 1) / 2,
            _ => sub / 2,
        };
        // type B may go down to the one-dimensional case n = 0
        if n == 0 && self.kind != Kind::B {
            return Err(Error::InvalidContext(format!("sub-context of size {sub} is degenerate")));
        }
        let kappa = &self.kappa - &Rational::from(m);
        Ok(AlgebraContext { kind: self.kind, n, size: sub, kappa, order: self.order })
    }

    pub fn root_data(&self) -> RootData {
        RootData::new(self.kind, self.n)
    }
}

/// Simple roots in the orthonormal basis `eps_1..eps_n` (type A: `eps_1..eps_n`
/// of `gl_n`, with `n-1` simple roots).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootData {
    pub kind: Kind,
    pub n: usize,
    roots: Vec<Vec<i64>>,
}

impl RootData {
    pub fn new(kind: Kind, n: usize) -> Self {
        let dim = n;
        let count = if kind == Kind::A { n.saturating_sub(1) } else { n };
        let mut roots = Vec::with_capacity(count);
        for i in 1..=count {
            let mut v = vec![0i64; dim];
            if i < n {
                v[i - 1] = 1;
                v[i] = -1;
            } else {
                match kind {
                    Kind::B => v[n - 1] = 1,
                    Kind::C => v[n - 1] = 2,
                    Kind::D => {
                        v[n - 2] = 1;
                        v[n - 1] = 1;
                    }
                    Kind::A => unreachable!(),
                }
            }
            roots.push(v);
        }
        RootData { kind, n, roots }
    }

    pub fn rank(&self) -> usize {
        self.roots.len()
    }

    pub fn simple_root(&self, i: usize) -> &[i64] {
        &self.roots[i - 1]
    }

    /// `(alpha_i, alpha_j)`
    pub fn inner(&self, i: usize, j: usize) -> i64 {
        self.simple_root(i).iter().zip(self.simple_root(j)).map(|(a, b)| a * b).sum()
    }

    /// `(eps_k, alpha_j)` for `1 <= k <= n`.
    pub fn eps_alpha(&self, k: usize, j: usize) -> i64 {
        self.simple_root(j)[k - 1]
    }

    /// Cartan entry `a_ij = 2 (alpha_i, alpha_j) / (alpha_i, alpha_i)`.
    pub fn cartan(&self, i: usize, j: usize) -> i64 {
        2 * self.inner(i, j) / self.inner(i, i)
    }

    /// Number of nested `e_i` brackets in the Serre relation for `(i, j)`.
    pub fn serre_degree(&self, i: usize, j: usize) -> usize {
        (1 - self.cartan(i, j)) as usize
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kappa_values() {
        let b2 = AlgebraContext::new(Kind::B, 2, 3).unwrap();
        assert_eq!((b2.size, b2.kappa.clone()), (5, Rational::new(3, 2)));
        let c2 = AlgebraContext::new(Kind::C, 2, 3).unwrap();
        assert_eq!(c2.kappa, Rational::from_int(3));
        let d3 = AlgebraContext::new(Kind::D, 3, 3).unwrap();
        assert_eq!(d3.kappa, Rational::from_int(2));
    }

    #[test]
    fn cartan_matrices() {
        let b2 = RootData::new(Kind::B, 2);
        assert_eq!([b2.cartan(1, 2), b2.cartan(2, 1)], [-1, -2]);
        assert_eq!(b2.serre_degree(2, 1), 3);
        let c2 = RootData::new(Kind::C, 2);
        assert_eq!([c2.cartan(1, 2), c2.cartan(2, 1)], [-2, -1]);
        let d3 = RootData::new(Kind::D, 3);
        assert_eq!([d3.cartan(1, 3), d3.cartan(2, 3), d3.cartan(1, 2)], [-1, 0, -1]);
    }

    #[test]
    fn sub_context_shifts_kappa() {
        let c3 = AlgebraContext::new(Kind::C, 3, 3).unwrap();
        let s = c3.sub_context(1).unwrap();
        assert_eq!((s.size, s.n, s.kappa), (4, 2, Rational::from_int(3)));
    }
}
