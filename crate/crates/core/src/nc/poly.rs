use std::collections::hash_map::Entry;
use std::fmt;

use rustc_hash::FxHashMap;
use smallvec::SmallVec;

use super::gen::Gen;
use crate::arith::Rational;

/// A word in the generators.
pub type Mono = SmallVec<[Gen; 6]>;

/// Noncommutative polynomial: a map from words to nonzero rational coefficients.
///
/// Nothing here enforces normal form; [`crate::nc::XAlgebra`] produces and
/// consumes normal-ordered polynomials.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct NcPoly {
    terms: FxHashMap<Mono, Rational>,
}

impl NcPoly {
    pub fn zero() -> Self {
        NcPoly::default()
    }

    pub fn constant(c: Rational) -> Self {
        let mut p = Self::zero();
        p.add_term(Mono::new(), c);
        p
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn gen(g: Gen) -> Self {
        Self::word(&[g], Rational::one())
    }

    pub fn word(w: &[Gen], c: Rational) -> Self {
        let mut p = Self::zero();
        p.add_term(Mono::from_slice(w), c);
        p
    }

    pub fn with_capacity(n: usize) -> Self {
        NcPoly { terms: FxHashMap::with_capacity_and_hasher(n, Default::default()) }
    }

    pub fn add_term(&mut self, m: Mono, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Occupied(mut e) => {
                *e.get_mut() += &c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
            Entry::Vacant(e) => {
                e.insert(c);
            }
        }
    }

    pub fn add_scaled(&mut self, other: &NcPoly, c: &Rational) {
        if c.is_zero() {
            return;
        }
        for (m, x) in &other.terms {
            self.add_term(m.clone(), if c.is_one() { x.clone() } else { x * c });
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Mono, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &[Gen]) -> Rational {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    /// The value if this polynomial is a scalar.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&Mono::new()).cloned(),
            _ => None,
        }
    }

    pub fn add(&self, o: &NcPoly) -> NcPoly {
        let (big, small) = if self.len() >= o.len() { (self, o) } else { (o, self) };
        let mut out = big.clone();
        out.add_scaled(small, &Rational::one());
        out
    }

    pub fn sub(&self, o: &NcPoly) -> NcPoly {
        let mut out = self.clone();
        out.add_scaled(o, &-Rational::one());
        out
    }

    pub fn neg(&self) -> NcPoly {
        NcPoly { terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }

    pub fn scale(&self, c: &Rational) -> NcPoly {
        if c.is_zero() {
            return NcPoly::zero();
        }
        NcPoly { terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect() }
    }

    /// Product in the free algebra (concatenation of words).
    pub fn free_mul(&self, o: &NcPoly) -> NcPoly {
        let mut out = NcPoly::with_capacity(self.len() * o.len());
        for (a, x) in &self.terms {
            for (b, y) in &o.terms {
                let mut w = a.clone();
                w.extend_from_slice(b);
                out.add_term(w, x * y);
            }
        }
        out
    }

    /// Largest filtration degree among the words.
    pub fn max_degree(&self) -> Option<usize> {
        self.terms.keys().map(|m| m.iter().map(|g| g.degree()).sum()).max()
    }

    /// Terms sorted by word, for deterministic output.
    pub fn sorted_terms(&self) -> Vec<(&Mono, &Rational)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| a.0.len().cmp(&b.0.len()).then_with(|| a.0.cmp(b.0)));
        v
    }

    /// Render with a custom generator naming function, at most `limit` terms.
    pub fn render(&self, name: &dyn Fn(Gen) -> String, limit: usize) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let terms = self.sorted_terms();
        let mut parts = Vec::new();
        for (m, c) in terms.iter().take(limit) {
            let word: Vec<String> = m.iter().map(|g| name(*g)).collect();
            parts.push(match (m.is_empty(), c.is_one()) {
                (true, _) => c.to_string(),
                (false, true) => word.join("*"),
                (false, false) => format!("({c})*{}", word.join("*")),
            });
        }
        let mut s = parts.join(" + ");
        if terms.len() > limit {
            s.push_str(&format!(" + ... ({} terms)", terms.len()));
        }
        s
    }
}

impl fmt::Debug for NcPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(&|g| format!("{g:?}"), 12))
    }
}
