//! Bounded, ordered streams over the lattice.
//!
//! Every stream stops at the first triple whose hypotenuse exceeds the
//! bound. Overflow is treated the same way, since an unrepresentable
//! hypotenuse is larger than any `u64` bound.
//!
//! Full-lattice streams are a k-way merge of column iterators. Columns are
//! activated lazily: column `k + 1` joins the heap only once its head could be
//! the next element out.

use std::cmp::{Ordering, Reverse};
use std::collections::BinaryHeap;
use std::fmt;

use crate::error::{Error, Result};
use crate::lattice::{extended_triple, triple_from_lattice};
use crate::triple::{ExtendedIndex, LatticeIndex, Triple};

/// The smallest hypotenuse of any Pythagorean triple.
pub const MIN_HYPOTENUSE: u64 = 5;

/// Inclusive hypotenuse bound.
///
/// Bounds below [`MIN_HYPOTENUSE`] are accepted and yield empty streams; use
/// [`EnumBound::checked`] where such a bound is an input error.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EnumBound {
    c_max: u64,
}

impl EnumBound {
    pub fn new(c_max: u64) -> Self {
        EnumBound { c_max }
    }

    pub fn checked(c_max: u64) -> Result<Self> {
        if c_max < MIN_HYPOTENUSE {
            return Err(Error::BoundTooSmall { c_max, min: MIN_HYPOTENUSE });
        }
        Ok(EnumBound { c_max })
    }

    pub fn c_max(&self) -> u64 {
        self.c_max
    }

    pub fn admits(&self, t: &Triple) -> bool {
        t.c() <= self.c_max
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SeriesKind {
    /// `odd(m)`: fixed `c − b = (2m − 1)²`.
    Odd,
    /// `even(n)`: fixed `c − a = 2n²`.
    Even,
}

impl fmt::Display for SeriesKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SeriesKind::Odd => "odd",
            SeriesKind::Even => "even",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SeriesId {
    kind: SeriesKind,
    index: u64,
}

impl SeriesId {
    pub fn new(kind: SeriesKind, index: u64) -> Result<Self> {
        if index == 0 {
            return Err(Error::InvalidParameter("series index must be at least 1"));
        }
        Ok(SeriesId { kind, index })
    }

    pub fn kind(&self) -> SeriesKind {
        self.kind
    }

    pub fn index(&self) -> u64 {
        self.index
    }

    /// Lattice point of the `k`-th element (1-based).
    pub fn point(&self, k: u64) -> Result<LatticeIndex> {
        match self.kind {
            SeriesKind::Odd => LatticeIndex::new(self.index, k),
            SeriesKind::Even => LatticeIndex::new(k, self.index),
        }
    }
}

/// Yields `generate(1), generate(2), …` while the hypotenuse stays in bound.
/// `generate` must be strictly increasing in `c`.
fn bounded<T>(
    bound: EnumBound,
    generate: impl Fn(u64) -> Result<(T, Triple)>,
) -> impl Iterator<Item = (T, Triple)> {
    (1u64..).map_while(move |k| generate(k).ok().filter(|(_, t)| bound.admits(t)))
}

fn lattice_point(m: u64, n: u64) -> Result<(LatticeIndex, Triple)> {
    let idx = LatticeIndex::new(m, n)?;
    Ok((idx, triple_from_lattice(idx)?))
}

fn extended_point(mu: u64, n: u64) -> Result<(ExtendedIndex, Triple)> {
    let idx = ExtendedIndex::new(mu, n)?;
    Ok((idx, extended_triple(idx)?))
}

/// Points of a series in ascending `c`.
pub fn series_points(
    id: SeriesId,
    bound: EnumBound,
) -> impl Iterator<Item = (LatticeIndex, Triple)> {
    bounded(bound, move |k| {
        let idx = id.point(k)?;
        Ok((idx, triple_from_lattice(idx)?))
    })
}

pub fn series(id: SeriesId, bound: EnumBound) -> impl Iterator<Item = Triple> {
    series_points(id, bound).map(|(_, t)| t)
}

/// `odd(m)`: `𝔓(m, 1), 𝔓(m, 2), …` while `c ≤ c_max`.
pub fn odd_series(m: u64, bound: EnumBound) -> impl Iterator<Item = Triple> {
    bounded(bound, move |n| lattice_point(m, n)).map(|(_, t)| t)
}

/// `even(n)`: `𝔓(1, n), 𝔓(2, n), …` while `c ≤ c_max`.
pub fn even_series(n: u64, bound: EnumBound) -> impl Iterator<Item = Triple> {
    bounded(bound, move |m| lattice_point(m, n)).map(|(_, t)| t)
}

/// `(2n + 1, 2n² + 2n, 2n² + 2n + 1) = 𝔓(1, n)`.
pub fn pythagorean_family(n: u64) -> Result<Triple> {
    if n == 0 {
        return Err(Error::InvalidParameter("n must be at least 1"));
    }
    let b = n
        .checked_mul(n)
        .and_then(|x| x.checked_add(n))
        .and_then(|x| x.checked_mul(2))
        .ok_or(Error::Overflow)?;
    let c = b.checked_add(1).ok_or(Error::Overflow)?;
    Ok(Triple::from_parts(2 * n + 1, b, c))
}

/// `(4m² − 1, 4m, 4m² + 1) = 𝔓(m, 1)`.
pub fn platonic_family(m: u64) -> Result<Triple> {
    if m == 0 {
        return Err(Error::InvalidParameter("m must be at least 1"));
    }
    let sq4 = m
        .checked_mul(m)
        .and_then(|x| x.checked_mul(4))
        .ok_or(Error::Overflow)?;
    let c = sq4.checked_add(1).ok_or(Error::Overflow)?;
    Ok(Triple::from_parts(sq4 - 1, 4 * m, c))
}

/// Points on the line `n = 2m − 1`; the `k`-th is `(2k − 1)²·(3, 4, 5)`.
pub fn diagonal_points(bound: EnumBound) -> impl Iterator<Item = (LatticeIndex, Triple)> {
    bounded(bound, |m| {
        let idx = LatticeIndex::new(m, 2 * m - 1)?;
        Ok((idx, triple_from_lattice(idx)?))
    })
}

pub fn diagonal_multiples(bound: EnumBound) -> impl Iterator<Item = Triple> {
    diagonal_points(bound).map(|(_, t)| t)
}

struct Head<I> {
    key: (u64, u64),
    column: u64,
    row: u64,
    index: I,
    triple: Triple,
}

impl<I> PartialEq for Head<I> {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl<I> Eq for Head<I> {}

impl<I> PartialOrd for Head<I> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<I> Ord for Head<I> {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.key, self.column).cmp(&(other.key, other.column))
    }
}

/// K-way merge over columns `1, 2, …` of a two-parameter family, emitting
/// in `(c, a)` order.
///
/// Within a column `c` must grow with the row, and column heads (row 1) must
/// grow with the column.
pub struct ColumnMerge<I, G> {
    generate: G,
    bound: EnumBound,
    heap: BinaryHeap<Reverse<Head<I>>>,
    pending: Option<Head<I>>,
}

impl<I, G> ColumnMerge<I, G>
where
    G: Fn(u64, u64) -> Result<(I, Triple)>,
{
    pub fn new(bound: EnumBound, generate: G) -> Self {
        let mut merge = ColumnMerge { generate, bound, heap: BinaryHeap::new(), pending: None };
        merge.pending = merge.head(1, 1);
        merge
    }

    fn head(&self, column: u64, row: u64) -> Option<Head<I>> {
        let (index, triple) = (self.generate)(column, row).ok()?;
        self.bound.admits(&triple).then(|| Head {
            key: (triple.c(), triple.a()),
            column,
            row,
            index,
            triple,
        })
    }

    fn activate_columns(&mut self) {
        while let Some(next) = self.pending.take() {
            let due = match self.heap.peek() {
                Some(Reverse(top)) => next.key <= top.key,
                None => true,
            };
            if !due {
                self.pending = Some(next);
                break;
            }
            self.pending = next.column.checked_add(1).and_then(|col| self.head(col, 1));
            self.heap.push(Reverse(next));
        }
    }
}

impl<I, G> Iterator for ColumnMerge<I, G>
where
    G: Fn(u64, u64) -> Result<(I, Triple)>,
{
    type Item = (I, Triple);

    fn next(&mut self) -> Option<Self::Item> {
        self.activate_columns();
        let Reverse(top) = self.heap.pop()?;
        if let Some(succ) = top.row.checked_add(1).and_then(|row| self.head(top.column, row)) {
            self.heap.push(Reverse(succ));
        }
        Some((top.index, top.triple))
    }
}

/// Every class-C triple with `c ≤ c_max`, with its lattice point.
pub fn lattice_points(
    bound: EnumBound,
) -> ColumnMerge<LatticeIndex, impl Fn(u64, u64) -> Result<(LatticeIndex, Triple)>> {
    ColumnMerge::new(bound, lattice_point)
}

/// Every class-C triple with `c ≤ c_max`, ordered by `(c, a)`.
pub fn lattice_enumerate(bound: EnumBound) -> impl Iterator<Item = Triple> {
    lattice_points(bound).map(|(_, t)| t)
}

/// Every Euclidean triple with `c ≤ c_max`, with its extended lattice point.
pub fn extended_points(
    bound: EnumBound,
) -> ColumnMerge<ExtendedIndex, impl Fn(u64, u64) -> Result<(ExtendedIndex, Triple)>> {
    ColumnMerge::new(bound, extended_point)
}

/// Every Euclidean triple with `c ≤ c_max`, ordered by `(c, a)`.
pub fn extended_enumerate(bound: EnumBound) -> impl Iterator<Item = Triple> {
    extended_points(bound).map(|(_, t)| t)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tuples(it: impl Iterator<Item = Triple>) -> Vec<(u64, u64, u64)> {
        it.map(|t| t.as_tuple()).collect()
    }

    fn b(c_max: u64) -> EnumBound {
        EnumBound::new(c_max)
    }

    #[test]
    fn odd_series_examples() {
        assert_eq!(tuples(odd_series(1, b(30))), [(3, 4, 5), (5, 12, 13), (7, 24, 25)]);
        assert_eq!(tuples(odd_series(2, b(50))), [(15, 8, 17), (21, 20, 29), (27, 36, 45)]);
        assert!(tuples(odd_series(1, b(4))).is_empty());
    }

    #[test]
    fn even_series_examples() {
        assert_eq!(tuples(even_series(1, b(40))), [(3, 4, 5), (15, 8, 17), (35, 12, 37)]);
        assert_eq!(tuples(even_series(2, b(60))), [(5, 12, 13), (21, 20, 29), (45, 28, 53)]);
        assert!(tuples(even_series(1, b(4))).is_empty());
    }

    #[test]
    fn series_id_dispatch() {
        let id = SeriesId::new(SeriesKind::Even, 9).unwrap();
        assert!(tuples(series(id, b(5))).is_empty());
        let id = SeriesId::new(SeriesKind::Odd, 1).unwrap();
        assert_eq!(tuples(series(id, b(30))), tuples(odd_series(1, b(30))));
        assert!(SeriesId::new(SeriesKind::Odd, 0).is_err());
    }

    #[test]
    fn lattice_enumerate_examples() {
        assert_eq!(tuples(lattice_enumerate(b(17))), [(3, 4, 5), (5, 12, 13), (15, 8, 17)]);
        assert_eq!(tuples(lattice_enumerate(b(5))), [(3, 4, 5)]);
        assert_eq!(
            tuples(lattice_enumerate(b(30))),
            [(3, 4, 5), (5, 12, 13), (15, 8, 17), (7, 24, 25), (21, 20, 29)]
        );
        assert!(tuples(lattice_enumerate(b(4))).is_empty());
    }

    #[test]
    fn equal_hypotenuse_ordered_by_a() {
        let at_65: Vec<_> = lattice_enumerate(b(65)).filter(|t| t.c() == 65).collect();
        assert_eq!(tuples(at_65.into_iter()), [(33, 56, 65), (63, 16, 65)]);
    }

    #[test]
    fn extended_enumerate_examples() {
        assert_eq!(tuples(extended_enumerate(b(13))), [(3, 4, 5), (8, 6, 10), (5, 12, 13)]);
        assert_eq!(tuples(extended_enumerate(b(5))), [(3, 4, 5)]);
        assert_eq!(
            tuples(extended_enumerate(b(20))),
            [(3, 4, 5), (8, 6, 10), (5, 12, 13), (15, 8, 17), (12, 16, 20)]
        );
    }

    #[test]
    fn family_examples() {
        let fam = |f: fn(u64) -> Result<Triple>, k| f(k).unwrap().as_tuple();
        assert_eq!(fam(pythagorean_family, 1), (3, 4, 5));
        assert_eq!(fam(pythagorean_family, 2), (5, 12, 13));
        assert_eq!(fam(pythagorean_family, 3), (7, 24, 25));
        assert_eq!(fam(platonic_family, 1), (3, 4, 5));
        assert_eq!(fam(platonic_family, 2), (15, 8, 17));
        assert_eq!(fam(platonic_family, 3), (35, 12, 37));
        assert!(pythagorean_family(0).is_err());
        assert_eq!(platonic_family(u64::MAX), Err(Error::Overflow));
    }

    #[test]
    fn diagonal_examples() {
        assert_eq!(tuples(diagonal_multiples(b(50))), [(3, 4, 5), (27, 36, 45)]);
        assert_eq!(
            tuples(diagonal_multiples(b(125))),
            [(3, 4, 5), (27, 36, 45), (75, 100, 125)]
        );
        assert!(tuples(diagonal_multiples(b(4))).is_empty());
    }

    #[test]
    fn huge_bound_stops_at_overflow() {
        // 𝔓(2^31, 1) has c = 2^64 + 1.
        assert_eq!(odd_series(1 << 31, b(u64::MAX)).count(), 0);
        let head: Vec<_> = odd_series((1 << 31) - 1, b(u64::MAX)).take(1).collect();
        assert_eq!(head.len(), 1);
        assert_eq!(
            tuples(lattice_enumerate(b(u64::MAX)).take(4)),
            [(3, 4, 5), (5, 12, 13), (15, 8, 17), (7, 24, 25)]
        );
    }

    #[test]
    fn bound_validation() {
        assert!(EnumBound::checked(4).is_err());
        assert_eq!(EnumBound::checked(5).unwrap().c_max(), 5);
    }
}
