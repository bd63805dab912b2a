//! Pythagorean triples parameterised by odd and even series.
//!
//! The class C of Euclidean triples with odd `a`, even `b` and odd `c` is laid
//! out on a lattice of positive integer pairs `(m, n)`. Column `m` holds the
//! triples with `c − b = (2m − 1)²`, row `n` those with `c − a = 2n²`, and
//! each lattice point carries exactly one triple `𝔓(m, n)`. Letting the odd
//! parameter `μ = 2m − 1` range over all positive integers covers every
//! Euclidean triple.
//!
//! All arithmetic is exact and checked on `u64`; overflow is an error.

pub mod arith;
pub mod classify;
pub mod decompose;
pub mod enumerate;
pub mod error;
pub mod euclid;
pub mod lattice;
pub mod triple;

pub use arith::{exact_sqrt, gcd, is_perfect_square};
pub use classify::{
    brute_force_triples, classify, verify_chain, ChainReport, ClassReport, Discrepancy, Oracle,
};
pub use decompose::{compose_def, decompose, Decomposition};
pub use enumerate::{
    diagonal_multiples, even_series, extended_enumerate, lattice_enumerate, odd_series,
    platonic_family, pythagorean_family, series, EnumBound, SeriesId, SeriesKind,
    MIN_HYPOTENUSE,
};
pub use error::{ClassCFailure, Error, Result};
pub use euclid::{euclid_params_from_triple, euclid_triple};
pub use lattice::{
    extended_from_triple, extended_triple, is_primitive_lattice, lattice_from_triple,
    triple_from_lattice,
};
pub use triple::{is_pythagorean, EuclidParams, ExtendedIndex, LatticeIndex, Triple};
