//! Test-only reference computations, independent of the library's
//! generators and square-root helper.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap};

/// Every `(x, y, z)` with `x < y`, `x² + y² = z²`, `z ≤ c_max`, found by a
/// double loop over legs and a lookup table of squares.
pub fn all_triples(c_max: u64) -> Vec<(u64, u64, u64)> {
    let squares: HashMap<u64, u64> = (1..=c_max).map(|z| (z * z, z)).collect();
    let mut out = Vec::new();
    for x in 1..=c_max {
        for y in x + 1..=c_max {
            let s = x * x + y * y;
            if s > c_max * c_max {
                break;
            }
            if let Some(&z) = squares.get(&s) {
                out.push((x, y, z));
            }
        }
    }
    out
}

/// Some Euclid pair `(u, v)` with `(u² − v², 2uv, u² + v²) = (a, b, c)`, by search.
pub fn euclid_pair_by_search(a: u64, b: u64, c: u64) -> Option<(u64, u64)> {
    (1..)
        .take_while(|v| 2 * v * v < c)
        .flat_map(|v| (v + 1..).take_while(move |u| u * u + v * v <= c).map(move |u| (u, v)))
        .find(|&(u, v)| u * u - v * v == a && 2 * u * v == b && u * u + v * v == c)
}

/// Class C by definition: a Euclidean triple, odd leg first, odd hypotenuse.
pub fn class_c_reference(c_max: u64) -> BTreeSet<(u64, u64, u64)> {
    all_triples(c_max)
        .into_iter()
        .filter(|&(_, _, z)| z % 2 == 1)
        .map(|(x, y, z)| if x % 2 == 1 { (x, y, z) } else { (y, x, z) })
        .filter(|&(a, b, c)| euclid_pair_by_search(a, b, c).is_some())
        .collect()
}

/// `{euclid(u, v) : u > v ≥ 1, c ≤ c_max}` by direct substitution.
pub fn euclid_reference(c_max: u64) -> BTreeSet<(u64, u64, u64)> {
    let mut out = BTreeSet::new();
    for v in 1.. {
        if v * v + (v + 1) * (v + 1) > c_max {
            break;
        }
        for u in v + 1.. {
            let c = u * u + v * v;
            if c > c_max {
                break;
            }
            out.insert((u * u - v * v, 2 * u * v, c));
        }
    }
    out
}

pub fn gcd(mut x: u64, mut y: u64) -> u64 {
    while y != 0 {
        (x, y) = (y, x % y);
    }
    x
}

pub fn gcd3(a: u64, b: u64, c: u64) -> u64 {
    gcd(gcd(a, b), c)
}
