//! Domain types: triples and the parameter pairs that index them.

use std::fmt;

use crate::arith::gcd;
use crate::error::{Error, Result};

/// A Pythagorean triple `(a, b, c)` with `a² + b² = c²`.
///
/// Legs are kept in the order they were given. Operations on the odd/even
/// lattice expect the odd leg in `a`; see [`Triple::canonicalize`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Triple {
    a: u64,
    b: u64,
    c: u64,
}

impl Triple {
    pub fn new(a: u64, b: u64, c: u64) -> Result<Self> {
        if a == 0 || b == 0 || c == 0 || !is_pythagorean(a, b, c) {
            return Err(Error::NotPythagorean { a, b, c });
        }
        Ok(Triple { a, b, c })
    }

    /// Builds a triple the caller has already proven Pythagorean.
    pub(crate) fn from_parts(a: u64, b: u64, c: u64) -> Self {
        debug_assert!(a > 0 && b > 0 && is_pythagorean(a, b, c));
        Triple { a, b, c }
    }

    pub fn a(&self) -> u64 {
        self.a
    }

    pub fn b(&self) -> u64 {
        self.b
    }

    pub fn c(&self) -> u64 {
        self.c
    }

    pub fn as_tuple(&self) -> (u64, u64, u64) {
        (self.a, self.b, self.c)
    }

    pub fn swap_legs(self) -> Self {
        Triple { a: self.b, b: self.a, c: self.c }
    }

    /// Swaps the legs when `a` is even and `b` is odd, so a triple with mixed
    /// leg parity ends up with the odd leg first. Other triples are unchanged.
    pub fn canonicalize(self) -> Self {
        if self.a % 2 == 0 && self.b % 2 == 1 {
            self.swap_legs()
        } else {
            self
        }
    }

    /// `gcd(a, b, c)`: the `k` with `(a, b, c) = k · primitive`.
    pub fn scale(&self) -> u64 {
        gcd(gcd(self.a, self.b), self.c)
    }

    pub fn is_primitive(&self) -> bool {
        self.scale() == 1
    }

    /// The primitive triple this one is a multiple of, legs in the same order.
    pub fn primitive_part(&self) -> Triple {
        let k = self.scale();
        Triple { a: self.a / k, b: self.b / k, c: self.c / k }
    }

    /// Odd `a`, even `b`, odd `c`: the parity pattern of the lattice class.
    pub fn has_class_c_parity(&self) -> bool {
        self.a % 2 == 1 && self.b % 2 == 0 && self.c % 2 == 1
    }

    /// Order-independent identity: `(c, smaller leg, larger leg)`.
    pub fn unordered_key(&self) -> (u64, u64, u64) {
        (self.c, self.a.min(self.b), self.a.max(self.b))
    }

    /// Canonical stream ordering key: hypotenuse first, then `a`.
    pub fn order_key(&self) -> (u64, u64, u64) {
        (self.c, self.a, self.b)
    }

    pub fn scaled(&self, k: u64) -> Result<Triple> {
        let mul = |x: u64| x.checked_mul(k).ok_or(Error::Overflow);
        if k == 0 {
            return Err(Error::InvalidParameter("scale factor must be positive"));
        }
        Ok(Triple { a: mul(self.a)?, b: mul(self.b)?, c: mul(self.c)? })
    }
}

impl fmt::Display for Triple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.a, self.b, self.c)
    }
}

/// Exact check of `a² + b² = c²` in 128-bit arithmetic.
pub fn is_pythagorean(a: u64, b: u64, c: u64) -> bool {
    let (a, b, c) = (a as u128, b as u128, c as u128);
    a * a + b * b == c * c
}

/// Lattice coordinates `(m, n)`: `c − b = (2m − 1)²` and `c − a = 2n²`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LatticeIndex {
    m: u64,
    n: u64,
}

impl LatticeIndex {
    pub fn new(m: u64, n: u64) -> Result<Self> {
        if m == 0 || n == 0 {
            return Err(Error::InvalidParameter("m and n must be at least 1"));
        }
        Ok(LatticeIndex { m, n })
    }

    pub fn m(&self) -> u64 {
        self.m
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    /// `μ = 2m − 1`.
    pub fn odd_parameter(&self) -> Result<u64> {
        self.m
            .checked_mul(2)
            .map(|s| s - 1)
            .ok_or(Error::Overflow)
    }

    /// The same point on the extended lattice.
    pub fn to_extended(&self) -> Result<ExtendedIndex> {
        ExtendedIndex::new(self.odd_parameter()?, self.n)
    }
}

impl fmt::Display for LatticeIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(m={}, n={})", self.m, self.n)
    }
}

/// Extended lattice coordinates `(μ, n)` where `μ` may be any positive
/// integer. Odd `μ = 2m − 1` recovers the ordinary lattice; even `μ` gives the
/// all-even triples.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExtendedIndex {
    mu: u64,
    n: u64,
}

impl ExtendedIndex {
    pub fn new(mu: u64, n: u64) -> Result<Self> {
        if mu == 0 || n == 0 {
            return Err(Error::InvalidParameter("mu and n must be at least 1"));
        }
        Ok(ExtendedIndex { mu, n })
    }

    pub fn mu(&self) -> u64 {
        self.mu
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    /// The ordinary lattice index, present only when `μ` is odd.
    pub fn to_lattice(&self) -> Option<LatticeIndex> {
        (self.mu % 2 == 1).then(|| LatticeIndex { m: self.mu.div_ceil(2), n: self.n })
    }
}

/// Euclid parameters `u > v ≥ 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EuclidParams {
    u: u64,
    v: u64,
}

impl EuclidParams {
    pub fn new(u: u64, v: u64) -> Result<Self> {
        if v == 0 || u <= v {
            return Err(Error::InvalidParameter("Euclid parameters require u > v >= 1"));
        }
        Ok(EuclidParams { u, v })
    }

    pub fn u(&self) -> u64 {
        self.u
    }

    pub fn v(&self) -> u64 {
        self.v
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_non_pythagorean() {
        assert_eq!(
            Triple::new(1, 1, 1),
            Err(Error::NotPythagorean { a: 1, b: 1, c: 1 })
        );
        assert!(Triple::new(0, 5, 5).is_err());
        assert!(Triple::new(5, 4, 3).is_err());
        assert!(Triple::new(3, 4, 5).is_ok());
        assert!(Triple::new(4, 3, 5).is_ok());
    }

    #[test]
    fn pythagorean_check_does_not_overflow() {
        // (2^32)^2 does not fit in u64.
        let k = 1u64 << 32;
        assert!(is_pythagorean(3 * k, 4 * k, 5 * k));
        assert!(!is_pythagorean(3 * k, 4 * k, 5 * k + 1));
    }

    #[test]
    fn canonicalize_swaps_only_reversed_parity() {
        let t = Triple::new(4, 3, 5).unwrap();
        assert_eq!(t.canonicalize().as_tuple(), (3, 4, 5));
        let t = Triple::new(3, 4, 5).unwrap();
        assert_eq!(t.canonicalize(), t);
        let t = Triple::new(8, 6, 10).unwrap();
        assert_eq!(t.canonicalize(), t);
    }

    #[test]
    fn scale_and_primitive_part() {
        let t = Triple::new(27, 36, 45).unwrap();
        assert_eq!(t.scale(), 9);
        assert_eq!(t.primitive_part().as_tuple(), (3, 4, 5));
        assert!(!t.is_primitive());
        assert!(Triple::new(5, 12, 13).unwrap().is_primitive());
    }

    #[test]
    fn index_validation() {
        assert!(LatticeIndex::new(0, 1).is_err());
        assert!(LatticeIndex::new(1, 0).is_err());
        assert!(ExtendedIndex::new(0, 1).is_err());
        assert!(EuclidParams::new(1, 1).is_err());
        assert!(EuclidParams::new(1, 2).is_err());
        assert!(EuclidParams::new(2, 0).is_err());
        assert!(EuclidParams::new(2, 1).is_ok());
    }

    #[test]
    fn extended_to_lattice() {
        let e = ExtendedIndex::new(5, 2).unwrap();
        assert_eq!(e.to_lattice(), Some(LatticeIndex::new(3, 2).unwrap()));
        assert_eq!(ExtendedIndex::new(4, 2).unwrap().to_lattice(), None);
        let l = LatticeIndex::new(3, 2).unwrap();
        assert_eq!(l.to_extended().unwrap(), e);
        assert_eq!(LatticeIndex::new(u64::MAX, 1).unwrap().odd_parameter(), Err(Error::Overflow));
    }
}
