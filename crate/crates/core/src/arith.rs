//! Exact integer helpers. No floating point is used anywhere in the crate.

use num_integer::Integer;

/// Greatest common divisor.
pub fn gcd(x: u64, y: u64) -> u64 {
    x.gcd(&y)
}

/// Returns `Some(r)` when `x == r * r`.
pub fn exact_sqrt(x: u64) -> Option<u64> {
    let r = x.isqrt();
    (r * r == x).then_some(r)
}

pub fn is_perfect_square(x: u64) -> bool {
    exact_sqrt(x).is_some()
}

pub(crate) fn square(x: u64) -> Option<u64> {
    x.checked_mul(x)
}
