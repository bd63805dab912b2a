use std::fmt;

use thiserror::Error;

/// Reason a candidate triple was rejected from the odd/even lattice class.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClassCFailure {
    /// `a² + b² ≠ c²`.
    NotPythagorean,
    /// The first leg is even; the lattice class stores the odd leg first.
    FirstLegEven,
    /// The second leg is odd.
    SecondLegOdd,
    /// The hypotenuse is even.
    HypotenuseEven,
    /// `c − b` is not a perfect square.
    OddDifferenceNotSquare,
    /// `a + b − c` is not a positive multiple of `2·√(c − b)`.
    RowNotIntegral,
    /// The recovered index does not regenerate the input.
    Mismatch,
}

impl fmt::Display for ClassCFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let msg = match self {
            ClassCFailure::NotPythagorean => "a² + b² ≠ c²",
            ClassCFailure::FirstLegEven => "a is even (expected the odd leg first)",
            ClassCFailure::SecondLegOdd => "b is odd (expected the even leg second)",
            ClassCFailure::HypotenuseEven => "c is even",
            ClassCFailure::OddDifferenceNotSquare => "c − b is not an odd perfect square",
            ClassCFailure::RowNotIntegral => "(a + b − c) / (2·√(c − b)) is not a positive integer",
            ClassCFailure::Mismatch => "recovered (m, n) does not regenerate the triple",
        };
        f.write_str(msg)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("arithmetic overflow in 64-bit unsigned integer")]
    Overflow,
    #[error("({a}, {b}, {c}) is not a Pythagorean triple")]
    NotPythagorean { a: u64, b: u64, c: u64 },
    #[error("invalid parameter: {0}")]
    InvalidParameter(&'static str),
    #[error("triple is not in class C: {0}")]
    NotInClassC(ClassCFailure),
    #[error("invalid decomposition: {0}")]
    InvalidDecomposition(&'static str),
    #[error("bound {c_max} is below the smallest hypotenuse {min}")]
    BoundTooSmall { c_max: u64, min: u64 },
    #[error("bound {c_max} exceeds the oracle ceiling {ceiling}")]
    BoundTooLarge { c_max: u64, ceiling: u64 },
}

pub type Result<T> = std::result::Result<T, Error>;
