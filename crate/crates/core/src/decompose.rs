//! The `(e, f, d)` decomposition of a class-C triple.
//!
//! With `d = c − b`, `e = c − a` and `f = a + b − c`:
//!
//! ```text
//! [a]   [0 1 1] [e]
//! [b] = [1 1 0] [f]
//! [c]   [1 1 1] [d]
//! ```
//!
//! and on the lattice `e = 2n²`, `f = 2n(2m − 1)`, `d = (2m − 1)²`.

use crate::arith::exact_sqrt;
use crate::error::{Error, Result};
use crate::lattice::lattice_from_triple;
use crate::triple::Triple;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Decomposition {
    pub e: u64,
    pub f: u64,
    pub d: u64,
}

/// Splits a class-C triple (odd leg first) into `(e, f, d)`.
pub fn decompose(t: Triple) -> Result<Decomposition> {
    lattice_from_triple(t)?;
    let (a, b, c) = t.as_tuple();
    Ok(Decomposition { e: c - a, f: a - (c - b), d: c - b })
}

/// Applies the matrix to `(e, f, d)` after checking that `e = 2n²`,
/// `d = (2m − 1)²` and `f = 2n(2m − 1)` for positive `m`, `n`.
pub fn compose_def(e: u64, f: u64, d: u64) -> Result<Triple> {
    if e == 0 || e % 2 != 0 {
        return Err(Error::InvalidDecomposition("e must be twice a positive square"));
    }
    let n = exact_sqrt(e / 2)
        .ok_or(Error::InvalidDecomposition("e must be twice a positive square"))?;
    let mu = exact_sqrt(d)
        .filter(|mu| mu % 2 == 1)
        .ok_or(Error::InvalidDecomposition("d must be an odd perfect square"))?;
    let expected_f = n
        .checked_mul(mu)
        .and_then(|x| x.checked_mul(2))
        .ok_or(Error::Overflow)?;
    if f != expected_f {
        return Err(Error::InvalidDecomposition("f must equal 2·√(e/2)·√d"));
    }
    let a = f.checked_add(d).ok_or(Error::Overflow)?;
    let b = e.checked_add(f).ok_or(Error::Overflow)?;
    let c = b.checked_add(d).ok_or(Error::Overflow)?;
    Ok(Triple::from_parts(a, b, c))
}

impl Decomposition {
    pub fn compose(&self) -> Result<Triple> {
        compose_def(self.e, self.f, self.d)
    }
}
