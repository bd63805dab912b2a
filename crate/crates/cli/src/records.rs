//! Output records. Field names follow the lattice symbols and their order is
//! part of the machine interface.

use serde::Serialize;
use triple_lattice::{
    is_primitive_lattice, ChainReport, ClassReport, ExtendedIndex, LatticeIndex, Triple,
};

pub trait Record: Serialize {
    const FIELDS: &'static [&'static str];
}

/// A lattice point: `d = c − b = (2m − 1)²`, `e = c − a = 2n²`.
#[derive(Debug, Serialize)]
pub struct LatticeRecord {
    pub m: u64,
    pub n: u64,
    pub a: u64,
    pub b: u64,
    pub c: u64,
    pub primitive: bool,
    pub d: u64,
    pub e: u64,
}

impl Record for LatticeRecord {
    const FIELDS: &'static [&'static str] = &["m", "n", "a", "b", "c", "primitive", "d", "e"];
}

impl LatticeRecord {
    pub fn new(idx: LatticeIndex, t: Triple) -> Self {
        let (a, b, c) = t.as_tuple();
        LatticeRecord {
            m: idx.m(),
            n: idx.n(),
            a,
            b,
            c,
            primitive: is_primitive_lattice(idx),
            d: c - b,
            e: c - a,
        }
    }
}

/// An extended lattice point. `m` is present only for odd `μ`.
#[derive(Debug, Serialize)]
pub struct ExtendedRecord {
    pub m: Option<u64>,
    pub n: u64,
    pub mu: u64,
    pub a: u64,
    pub b: u64,
    pub c: u64,
    pub primitive: bool,
    pub d: u64,
    pub e: u64,
}

impl Record for ExtendedRecord {
    const FIELDS: &'static [&'static str] =
        &["m", "n", "mu", "a", "b", "c", "primitive", "d", "e"];
}

impl ExtendedRecord {
    pub fn new(idx: ExtendedIndex, t: Triple) -> Self {
        let (a, b, c) = t.as_tuple();
        ExtendedRecord {
            m: idx.to_lattice().map(|l| l.m()),
            n: idx.n(),
            mu: idx.mu(),
            a,
            b,
            c,
            primitive: t.is_primitive(),
            d: c - b,
            e: c - a,
        }
    }
}

#[derive(Debug, Serialize)]
pub struct IndexRecord {
    pub m: u64,
    pub n: u64,
}

impl Record for IndexRecord {
    const FIELDS: &'static [&'static str] = &["m", "n"];
}

#[derive(Debug, Serialize)]
pub struct ClassRecord {
    pub a: u64,
    pub b: u64,
    pub c: u64,
    #[serde(rename = "P")]
    pub in_p: bool,
    #[serde(rename = "E")]
    pub in_e: bool,
    #[serde(rename = "C")]
    pub in_c: bool,
    #[serde(rename = "P0")]
    pub in_p0: bool,
    pub m: Option<u64>,
    pub n: Option<u64>,
    pub u: Option<u64>,
    pub v: Option<u64>,
    pub scale: Option<u64>,
}

impl Record for ClassRecord {
    const FIELDS: &'static [&'static str] =
        &["a", "b", "c", "P", "E", "C", "P0", "m", "n", "u", "v", "scale"];
}

impl From<&ClassReport> for ClassRecord {
    fn from(r: &ClassReport) -> Self {
        let (a, b, c) = r.triple;
        ClassRecord {
            a,
            b,
            c,
            in_p: r.in_p,
            in_e: r.in_e,
            in_c: r.in_c,
            in_p0: r.in_p0,
            m: r.lattice.map(|l| l.m()),
            n: r.lattice.map(|l| l.n()),
            u: r.euclid.map(|p| p.u()),
            v: r.euclid.map(|p| p.v()),
            scale: r.scale,
        }
    }
}

/// Set sizes up to `c_max`, the first witness of each strict inclusion and
/// the number of discrepancies found.
#[derive(Debug, Serialize)]
pub struct VerifyRecord {
    pub c_max: u64,
    #[serde(rename = "P")]
    pub p: usize,
    #[serde(rename = "E")]
    pub e: usize,
    #[serde(rename = "C")]
    pub c: usize,
    #[serde(rename = "P0")]
    pub p0: usize,
    #[serde(rename = "P_not_E")]
    pub p_not_e: Option<String>,
    #[serde(rename = "E_not_C")]
    pub e_not_c: Option<String>,
    #[serde(rename = "C_not_P0")]
    pub c_not_p0: Option<String>,
    pub discrepancies: usize,
}

impl Record for VerifyRecord {
    const FIELDS: &'static [&'static str] =
        &["c_max", "P", "E", "C", "P0", "P_not_E", "E_not_C", "C_not_P0", "discrepancies"];
}

impl From<&ChainReport> for VerifyRecord {
    fn from(r: &ChainReport) -> Self {
        let show = |t: Option<Triple>| t.map(|t| t.to_string());
        VerifyRecord {
            c_max: r.c_max,
            p: r.p_count,
            e: r.e_count,
            c: r.c_count,
            p0: r.p0_count,
            p_not_e: show(r.p_not_e.first),
            e_not_c: show(r.e_not_c.first),
            c_not_p0: show(r.c_not_p0.first),
            discrepancies: r.discrepancies.len(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::Value;

    fn keys<R: Record>(rec: &R) -> Vec<String> {
        match serde_json::to_value(rec).unwrap() {
            Value::Object(map) => map.keys().cloned().collect(),
            _ => unreachable!(),
        }
    }

    #[test]
    fn field_lists_match_serialization() {
        let idx = LatticeIndex::new(2, 3).unwrap();
        let t = triple_lattice::triple_from_lattice(idx).unwrap();
        assert_eq!(keys(&LatticeRecord::new(idx, t)), LatticeRecord::FIELDS);
        let ext = ExtendedIndex::new(2, 1).unwrap();
        let t = triple_lattice::extended_triple(ext).unwrap();
        assert_eq!(keys(&ExtendedRecord::new(ext, t)), ExtendedRecord::FIELDS);
        assert_eq!(keys(&IndexRecord { m: 1, n: 1 }), IndexRecord::FIELDS);
        let r = triple_lattice::classify(3, 4, 5).unwrap();
        assert_eq!(keys(&ClassRecord::from(&r)), ClassRecord::FIELDS);
        let bound = triple_lattice::EnumBound::new(5);
        let r = triple_lattice::verify_chain(bound, &Default::default()).unwrap();
        assert_eq!(keys(&VerifyRecord::from(&r)), VerifyRecord::FIELDS);
    }

    #[test]
    fn gen_record_values() {
        let idx = LatticeIndex::new(2, 3).unwrap();
        let t = triple_lattice::triple_from_lattice(idx).unwrap();
        let line = serde_json::to_string(&LatticeRecord::new(idx, t)).unwrap();
        assert_eq!(
            line,
            r#"{"m":2,"n":3,"a":27,"b":36,"c":45,"primitive":false,"d":9,"e":18}"#
        );
    }
}
