//! Euclid's formula and its inverse.

use crate::arith::{exact_sqrt, square};
use crate::error::{Error, Result};
use crate::triple::{EuclidParams, Triple};

/// `(u² − v², 2uv, u² + v²)`.
pub fn euclid_triple(p: EuclidParams) -> Result<Triple> {
    let (u, v) = (p.u(), p.v());
    let uu = square(u).ok_or(Error::Overflow)?;
    let vv = square(v).ok_or(Error::Overflow)?;
    let b = u
        .checked_mul(v)
        .and_then(|x| x.checked_mul(2))
        .ok_or(Error::Overflow)?;
    let c = uu.checked_add(vv).ok_or(Error::Overflow)?;
    Ok(Triple::from_parts(uu - vv, b, c))
}

/// Recovers `(u, v)` from a triple, trying both leg orders.
///
/// Returns `None` when no Euclid pair generates the triple, e.g. `(9, 12, 15)`.
pub fn euclid_params_from_triple(t: Triple) -> Option<EuclidParams> {
    oriented_params(t).or_else(|| oriented_params(t.swap_legs()))
}

/// Euclid parameters together with the leg order they generate.
pub fn euclid_orientation(t: Triple) -> Option<(EuclidParams, Triple)> {
    let p = euclid_params_from_triple(t)?;
    Some((p, euclid_triple(p).ok()?))
}

fn oriented_params(t: Triple) -> Option<EuclidParams> {
    let (a, b, c) = t.as_tuple();
    // u² = (c + a) / 2, v² = (c − a) / 2.
    if b % 2 != 0 || (c - a) % 2 != 0 {
        return None;
    }
    let u = exact_sqrt(a + (c - a) / 2)?;
    let v = exact_sqrt((c - a) / 2)?;
    let p = EuclidParams::new(u, v).ok()?;
    (euclid_triple(p).ok()? == t).then_some(p)
}
