//! The `(m, n)` lattice over class C and its extension over `(μ, n)`.
//!
//! Every triple with odd `a`, even `b`, odd `c` generated by Euclid's formula
//! sits at exactly one lattice point, where `c − b = (2m − 1)²` and
//! `c − a = 2n²`. Column `m` is the odd series `odd(m)`, row `n` the even
//! series `even(n)`.

use num_integer::Integer;

use crate::arith::{exact_sqrt, square};
use crate::error::{ClassCFailure, Error, Result};
use crate::triple::{ExtendedIndex, LatticeIndex, Triple};

fn ovf<T>(x: Option<T>) -> Result<T> {
    x.ok_or(Error::Overflow)
}

/// `𝔓(m, n)`:
///
/// ```text
/// a = −2n + 4nm + 4m² − 4m + 1
/// b = 2n² − 2n + 4nm
/// c = 2n² − 2n + 4nm + 4m² − 4m + 1
/// ```
pub fn triple_from_lattice(idx: LatticeIndex) -> Result<Triple> {
    let (m, n) = (idx.m(), idx.n());
    let nm4 = ovf(n.checked_mul(m).and_then(|x| x.checked_mul(4)))?;
    // 4m² − 4m + 1 = (2m − 1)², and 4nm − 2n ≥ 0 because m ≥ 1.
    let odd_sq = ovf(idx.odd_parameter().ok().and_then(square))?;
    let a = ovf((nm4 - 2 * n).checked_add(odd_sq))?;
    let b = ovf(square(n)
        .and_then(|nn| nn.checked_mul(2))
        .map(|nn2| nn2 - 2 * n)
        .and_then(|x| x.checked_add(nm4)))?;
    let c = ovf(b.checked_add(odd_sq))?;
    Ok(Triple::from_parts(a, b, c))
}

/// Inverse of [`triple_from_lattice`]:
/// `m = (1 + √(c − b)) / 2`, `n = (a + b − c) / (2√(c − b))`.
///
/// The input is checked for full class-C membership; a Pythagorean triple
/// outside the class is rejected rather than mapped to a wrong index.
pub fn lattice_from_triple(t: Triple) -> Result<LatticeIndex> {
    let fail = |why| Err(Error::NotInClassC(why));
    let (a, b, c) = t.as_tuple();
    if a % 2 == 0 {
        return fail(ClassCFailure::FirstLegEven);
    }
    if b % 2 == 1 {
        return fail(ClassCFailure::SecondLegOdd);
    }
    if c % 2 == 0 {
        return fail(ClassCFailure::HypotenuseEven);
    }
    // c > b and a > c − b hold for any Pythagorean triple.
    let Some(mu) = exact_sqrt(c - b) else {
        return fail(ClassCFailure::OddDifferenceNotSquare);
    };
    let m = mu / 2 + 1;
    let (n, rem) = (a - (c - b)).div_rem(&(2 * mu));
    if rem != 0 || n == 0 {
        return fail(ClassCFailure::RowNotIntegral);
    }
    let idx = LatticeIndex::new(m, n)?;
    match triple_from_lattice(idx) {
        Ok(back) if back == t => Ok(idx),
        _ => fail(ClassCFailure::Mismatch),
    }
}

/// `𝔓(m, n)` is primitive iff `gcd(n, 2m − 1) = 1`.
///
/// `2m − 1` is odd, so a factor of two in `n` never matters.
pub fn is_primitive_lattice(idx: LatticeIndex) -> bool {
    let mu = 2 * idx.m() as u128 - 1;
    (idx.n() as u128).gcd(&mu) == 1
}

/// Triple at an extended lattice point:
/// `a = μ(2n + μ)`, `b = 2n(n + μ)`, `c = 2n² + μ(2n + μ)`.
///
/// Equal to Euclid's triple with `u = n + μ`, `v = n`.
pub fn extended_triple(idx: ExtendedIndex) -> Result<Triple> {
    let (mu, n) = (idx.mu(), idx.n());
    let a = ovf(n
        .checked_mul(2)
        .and_then(|x| x.checked_add(mu))
        .and_then(|x| x.checked_mul(mu)))?;
    let b = ovf(n
        .checked_add(mu)
        .and_then(|x| x.checked_mul(n))
        .and_then(|x| x.checked_mul(2)))?;
    let c = ovf(square(n)
        .and_then(|x| x.checked_mul(2))
        .and_then(|x| x.checked_add(a)))?;
    Ok(Triple::from_parts(a, b, c))
}

/// Inverse of [`extended_triple`]: `μ = √(c − b)`, `n = √((c − a) / 2)`.
pub fn extended_from_triple(t: Triple) -> Option<ExtendedIndex> {
    let (a, b, c) = t.as_tuple();
    let mu = exact_sqrt(c - b)?;
    let e = c - a;
    if e % 2 != 0 {
        return None;
    }
    let n = exact_sqrt(e / 2)?;
    let idx = ExtendedIndex::new(mu, n).ok()?;
    (extended_triple(idx).ok()? == t).then_some(idx)
}
