//! Membership in the chain `P ⊃ E ⊃ C ⊃ P₀` and the brute-force oracle.
//!
//! - `P`: all Pythagorean triples
//! - `E`: triples produced by Euclid's formula
//! - `C`: Euclidean triples with exactly one odd leg and odd hypotenuse
//! - `P₀`: primitive triples

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fmt;

use crate::arith::exact_sqrt;
use crate::enumerate::{extended_enumerate, lattice_enumerate, EnumBound, MIN_HYPOTENUSE};
use crate::error::{Error, Result};
use crate::euclid::{euclid_orientation, euclid_params_from_triple};
use crate::lattice::{lattice_from_triple, triple_from_lattice};
use crate::triple::{is_pythagorean, EuclidParams, LatticeIndex, Triple};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClassReport {
    /// The input reordered: hypotenuse last, legs in Euclid order when in `E`,
    /// odd leg first when the leg parities differ, otherwise ascending.
    pub triple: (u64, u64, u64),
    pub in_p: bool,
    pub in_e: bool,
    pub in_c: bool,
    pub in_p0: bool,
    pub lattice: Option<LatticeIndex>,
    pub euclid: Option<EuclidParams>,
    /// `gcd(a, b, c)`, present for Pythagorean input.
    pub scale: Option<u64>,
}

fn orient_legs(x: u64, y: u64) -> (u64, u64) {
    match (x % 2, y % 2) {
        (0, 1) => (y, x),
        (1, 0) => (x, y),
        _ => (x.min(y), x.max(y)),
    }
}

/// Classifies three positive integers given in any order. The largest value
/// is taken as the hypotenuse.
pub fn classify(x: u64, y: u64, z: u64) -> Result<ClassReport> {
    if x == 0 || y == 0 || z == 0 {
        return Err(Error::InvalidParameter("components must be positive"));
    }
    let mut v = [x, y, z];
    v.sort_unstable();
    let (a, b) = orient_legs(v[0], v[1]);
    let c = v[2];

    let mut report = ClassReport {
        triple: (a, b, c),
        in_p: false,
        in_e: false,
        in_c: false,
        in_p0: false,
        lattice: None,
        euclid: None,
        scale: None,
    };
    if !is_pythagorean(a, b, c) {
        return Ok(report);
    }
    let t = Triple::new(a, b, c)?;
    report.in_p = true;
    report.scale = Some(t.scale());
    report.in_p0 = t.is_primitive();

    if let Some((params, oriented)) = euclid_orientation(t) {
        report.in_e = true;
        report.euclid = Some(params);
        report.triple = oriented.as_tuple();
        report.in_c = (oriented.a() + oriented.b()) % 2 == 1 && oriented.c() % 2 == 1;
        if report.in_c {
            report.lattice = lattice_from_triple(oriented).ok();
            debug_assert!(report.lattice.is_some());
        }
    }
    Ok(report)
}

/// Exhaustive double-loop enumeration of all triples under a bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Oracle {
    ceiling: u64,
}

impl Default for Oracle {
    fn default() -> Self {
        Oracle { ceiling: Self::DEFAULT_CEILING }
    }
}

impl Oracle {
    pub const DEFAULT_CEILING: u64 = 10_000;

    pub fn with_ceiling(ceiling: u64) -> Self {
        Oracle { ceiling }
    }

    pub fn ceiling(&self) -> u64 {
        self.ceiling
    }

    fn check(&self, bound: EnumBound) -> Result<u64> {
        let c_max = bound.c_max();
        if c_max < MIN_HYPOTENUSE {
            return Err(Error::BoundTooSmall { c_max, min: MIN_HYPOTENUSE });
        }
        if c_max > self.ceiling {
            return Err(Error::BoundTooLarge { c_max, ceiling: self.ceiling });
        }
        Ok(c_max)
    }

    /// All `(a, b, c)` with `a² + b² = c²` and `c ≤ c_max`. Legs are stored odd
    /// first when their parities differ, ascending otherwise.
    pub fn triples(&self, bound: EnumBound) -> Result<BTreeSet<Triple>> {
        let c_max = self.check(bound)?;
        let limit = c_max * c_max;
        let mut out = BTreeSet::new();
        for x in 1..c_max {
            for y in x + 1..c_max {
                let s = x * x + y * y;
                if s > limit {
                    break;
                }
                if let Some(z) = exact_sqrt(s) {
                    let (a, b) = orient_legs(x, y);
                    out.insert(Triple::new(a, b, z)?);
                }
            }
        }
        Ok(out)
    }
}

/// [`Oracle::triples`] with the default ceiling.
pub fn brute_force_triples(bound: EnumBound) -> Result<BTreeSet<Triple>> {
    Oracle::default().triples(bound)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Discrepancy {
    pub check: &'static str,
    pub triple: Triple,
}

impl fmt::Display for Discrepancy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.check, self.triple)
    }
}

/// Strict-inclusion witness: the first member of a set difference, and its size.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Witness {
    pub first: Option<Triple>,
    pub count: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainReport {
    pub c_max: u64,
    pub p_count: usize,
    pub e_count: usize,
    pub c_count: usize,
    pub p0_count: usize,
    /// `P ∖ E`
    pub p_not_e: Witness,
    /// `E ∖ C`
    pub e_not_c: Witness,
    /// `C ∖ P₀`
    pub c_not_p0: Witness,
    pub discrepancies: Vec<Discrepancy>,
}

impl ChainReport {
    pub fn is_consistent(&self) -> bool {
        self.discrepancies.is_empty()
    }
}

fn witness<'a>(it: impl Iterator<Item = &'a Triple>) -> Witness {
    let mut w = Witness { first: None, count: 0 };
    for t in it {
        w.first.get_or_insert(*t);
        w.count += 1;
    }
    w
}

fn check_order(name: &'static str, stream: &[Triple], out: &mut Vec<Discrepancy>) {
    for pair in stream.windows(2) {
        if pair[0].order_key() >= pair[1].order_key() {
            out.push(Discrepancy { check: name, triple: pair[1] });
        }
    }
}

/// Builds `P` and `P₀` from the oracle, `E` from the extended lattice and `C`
/// from the lattice, then cross-checks them.
pub fn verify_chain(bound: EnumBound, oracle: &Oracle) -> Result<ChainReport> {
    let p_set = oracle.triples(bound)?;
    // Ordered by (c, smaller leg, larger leg).
    let p: BTreeMap<_, Triple> = p_set.iter().map(|t| (t.unordered_key(), *t)).collect();
    let e_stream: Vec<Triple> = extended_enumerate(bound).collect();
    let c_stream: Vec<Triple> = lattice_enumerate(bound).collect();
    let e_keys: HashSet<_> = e_stream.iter().map(Triple::unordered_key).collect();
    let e_set: HashSet<Triple> = e_stream.iter().copied().collect();
    let c_set: HashSet<Triple> = c_stream.iter().copied().collect();
    let c_keys: HashSet<_> = c_stream.iter().map(Triple::unordered_key).collect();

    let mut bad = Vec::new();
    let mut flag = |check, t: &Triple| bad.push(Discrepancy { check, triple: *t });

    for t in &e_stream {
        if !p.contains_key(&t.unordered_key()) {
            flag("E member missing from P", t);
        }
        if t.has_class_c_parity() != c_set.contains(t) {
            flag("C differs from the odd-hypotenuse part of E", t);
        }
        if !t.has_class_c_parity() && (t.a() % 2 == 1 || t.b() % 2 == 1 || t.c() % 2 == 1) {
            flag("E ∖ C member is not all even", t);
        }
    }
    for t in &c_stream {
        if !e_set.contains(t) {
            flag("C member missing from E", t);
        }
        let back = lattice_from_triple(*t).and_then(triple_from_lattice);
        if back.as_ref() != Ok(t) {
            flag("lattice round trip failed", t);
        }
    }
    for t in p.values() {
        let key = t.unordered_key();
        if t.is_primitive() && !c_set.contains(t) {
            flag("P₀ member missing from C", t);
        }
        if euclid_params_from_triple(*t).is_some() != e_keys.contains(&key) {
            flag("Euclid reconstruction disagrees with E", t);
        }
        match classify(t.a(), t.b(), t.c()) {
            Ok(r) => {
                let expected = (true, e_keys.contains(&key), c_keys.contains(&key), t.is_primitive());
                if (r.in_p, r.in_e, r.in_c, r.in_p0) != expected {
                    flag("classify disagrees with set membership", t);
                }
                if r.lattice.is_some() != r.in_c || r.euclid.is_some() != r.in_e {
                    flag("classify parameters inconsistent with flags", t);
                }
            }
            Err(_) => flag("classify rejected an oracle triple", t),
        }
    }
    check_order("E stream out of order", &e_stream, &mut bad);
    check_order("C stream out of order", &c_stream, &mut bad);

    let mut c_ordered = c_stream.clone();
    c_ordered.sort_by_key(Triple::order_key);
    let mut e_ordered = e_stream.clone();
    e_ordered.sort_by_key(Triple::order_key);

    Ok(ChainReport {
        c_max: bound.c_max(),
        p_count: p.len(),
        e_count: e_stream.len(),
        c_count: c_stream.len(),
        p0_count: p.values().filter(|t| t.is_primitive()).count(),
        p_not_e: witness(p.values().filter(|t| !e_keys.contains(&t.unordered_key()))),
        e_not_c: witness(e_ordered.iter().filter(|t| !c_set.contains(t))),
        c_not_p0: witness(c_ordered.iter().filter(|t| !t.is_primitive())),
        discrepancies: bad,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn flags(x: u64, y: u64, z: u64) -> (bool, bool, bool, bool) {
        let r = classify(x, y, z).unwrap();
        (r.in_p, r.in_e, r.in_c, r.in_p0)
    }

    #[test]
    fn classify_examples() {
        assert_eq!(flags(9, 12, 15), (true, false, false, false));
        assert_eq!(flags(8, 6, 10), (true, true, false, false));
        assert_eq!(flags(3, 4, 5), (true, true, true, true));

        let r = classify(27, 36, 45).unwrap();
        assert_eq!((r.in_p, r.in_e, r.in_c, r.in_p0), (true, true, true, false));
        assert_eq!(r.lattice, Some(LatticeIndex::new(2, 3).unwrap()));
        assert_eq!(r.scale, Some(9));

        let r = classify(8, 6, 10).unwrap();
        assert_eq!(r.euclid, Some(EuclidParams::new(3, 1).unwrap()));
        assert_eq!(r.lattice, None);

        let r = classify(3, 4, 5).unwrap();
        assert_eq!(r.lattice, Some(LatticeIndex::new(1, 1).unwrap()));
    }

    #[test]
    fn classify_any_order() {
        assert_eq!(classify(5, 4, 3).unwrap().triple, (3, 4, 5));
        assert_eq!(classify(10, 6, 8).unwrap().triple, (8, 6, 10));
        assert_eq!(classify(15, 12, 9).unwrap().triple, (9, 12, 15));
    }

    #[test]
    fn classify_non_triple() {
        let r = classify(1, 1, 1).unwrap();
        assert_eq!((r.in_p, r.in_e, r.in_c, r.in_p0), (false, false, false, false));
        assert_eq!((r.lattice, r.euclid, r.scale), (None, None, None));
        assert!(classify(0, 4, 5).is_err());
    }

    #[test]
    fn oracle_examples() {
        let tuples = |c| -> Vec<_> {
            brute_force_triples(EnumBound::new(c)).unwrap().iter().map(|t| t.as_tuple()).collect()
        };
        assert_eq!(tuples(5), [(3, 4, 5)]);
        let mut got = tuples(15);
        got.sort_by_key(|t| t.2);
        assert_eq!(got, [(3, 4, 5), (6, 8, 10), (5, 12, 13), (9, 12, 15)]);
        assert!(tuples(17).contains(&(15, 8, 17)));
    }

    #[test]
    fn oracle_bounds() {
        assert_eq!(
            brute_force_triples(EnumBound::new(10_001)),
            Err(Error::BoundTooLarge { c_max: 10_001, ceiling: 10_000 })
        );
        assert!(brute_force_triples(EnumBound::new(4)).is_err());
        assert!(Oracle::with_ceiling(20).triples(EnumBound::new(20)).is_ok());
        assert!(Oracle::with_ceiling(20).triples(EnumBound::new(21)).is_err());
    }

    #[test]
    fn chain_at_fifty() {
        let r = verify_chain(EnumBound::new(50), &Oracle::default()).unwrap();
        assert!(r.is_consistent(), "{:?}", r.discrepancies);
        assert_eq!(r.p_not_e.first.map(|t| t.as_tuple()), Some((9, 12, 15)));
        assert_eq!(r.e_not_c.first.map(|t| t.as_tuple()), Some((8, 6, 10)));
        assert_eq!(r.c_not_p0.first.map(|t| t.as_tuple()), Some((27, 36, 45)));
    }

    #[test]
    fn chain_at_five() {
        let r = verify_chain(EnumBound::new(5), &Oracle::default()).unwrap();
        assert!(r.is_consistent());
        assert_eq!((r.p_count, r.e_count, r.c_count, r.p0_count), (1, 1, 1, 1));
        assert_eq!(r.p_not_e.first, None);
        assert_eq!(r.e_not_c.first, None);
        assert_eq!(r.c_not_p0.first, None);
    }
}
