use std::fmt;

/// A generator symbol packed into 32 bits.
///
/// Central symbols occupy the codes below `2^8` and sort first. RTT
/// generators `t_ij^(r)` of tensor factor `tag` are ordered by
/// `(r, tag, i, j)`, which is the PBW order used by normal forms.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Gen(u32);

const T_FLAG: u32 = 1 << 31;

impl Gen {
    pub const MAX_INDEX: usize = 127;
    pub const MAX_ORDER: usize = (1 << 15) - 1;
    pub const MAX_TAG: u8 = 3;

    /// `t_ij^(r)` with 1-based indices and `r >= 1`.
    pub fn t(tag: u8, i: usize, j: usize, r: usize) -> Gen {
        assert!(tag <= Self::MAX_TAG, "tag {tag} out of range");
        assert!((1..=Self::MAX_INDEX).contains(&i) && (1..=Self::MAX_INDEX).contains(&j), "index out of range");
        assert!((1..=Self::MAX_ORDER).contains(&r), "order {r} out of range");
        Gen(T_FLAG | ((r as u32) << 16) | ((tag as u32) << 14) | ((i as u32) << 7) | j as u32)
    }

    pub fn central(id: u8) -> Gen {
        Gen(id as u32)
    }

    pub fn is_central(self) -> bool {
        self.0 & T_FLAG == 0
    }

    pub fn central_id(self) -> Option<u8> {
        self.is_central().then_some(self.0 as u8)
    }

    pub fn tag(self) -> u8 {
        ((self.0 >> 14) & 0b11) as u8
    }

    pub fn i(self) -> usize {
        ((self.0 >> 7) & 0x7f) as usize
    }

    pub fn j(self) -> usize {
        (self.0 & 0x7f) as usize
    }

    pub fn order(self) -> usize {
        ((self.0 >> 16) & 0x7fff) as usize
    }

    /// Filtration degree: `r - 1` for `t_ij^(r)`, zero for central symbols.
    pub fn degree(self) -> usize {
        if self.is_central() {
            0
        } else {
            self.order() - 1
        }
    }

    pub fn code(self) -> u32 {
        self.0
    }
}

impl fmt::Debug for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(id) = self.central_id() {
            return write!(f, "c{id}");
        }
        let primes = "'".repeat(self.tag() as usize);
        write!(f, "t{}[{},{}]^({})", primes, self.i(), self.j(), self.order())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn packing_roundtrip_and_order() {
        let g = Gen::t(1, 5, 7, 3);
        assert_eq!((g.tag(), g.i(), g.j(), g.order()), (1, 5, 7, 3));
        assert!(Gen::central(3) < Gen::t(0, 1, 1, 1));
        assert!(Gen::t(0, 9, 9, 1) < Gen::t(0, 1, 1, 2));
        assert!(Gen::t(0, 1, 2, 2) < Gen::t(0, 2, 1, 2));
    }
}
