//! Zero-sum triple systems: a valid 𝓛ᵏ_{d,m} induces 2m+1 triples
//! T_i = (x_i, y_i, z_i), i in [-m, m], that partition
//! [d, d+3m] ∪ [-d-3m, -d] ∪ {0} with every triple summing to zero.
//!
//! For i in [1, m] the triple is built from the pair positions of value
//! j = i+d-1: x_i = j, y_i = a_j + d + m - 1, z_i = -(b_j + d + m - 1);
//! T_{-i} = -T_i, and T_0 = (k+d+m-1, -(k+d+m-1), 0).

use std::collections::BTreeMap;
use std::fmt;

use serde_json::json;

use crate::error::{Error, Result};
use crate::langford::{validate_sequence, ExtendedLangfordSequence};

/// An ordered integer triple.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Triple {
    pub x: i64,
    pub y: i64,
    pub z: i64,
}

impl Triple {
    pub fn new(x: i64, y: i64, z: i64) -> Self {
        Triple { x, y, z }
    }

    pub fn sum(&self) -> i64 {
        self.x + self.y + self.z
    }

    pub fn negated(&self) -> Triple {
        Triple::new(-self.x, -self.y, -self.z)
    }

    pub fn members(&self) -> [i64; 3] {
        [self.x, self.y, self.z]
    }
}

impl fmt::Display for Triple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.x, self.y, self.z)
    }
}

/// The triples T_i keyed by signed index i in [-m, m].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZeroSumTripleSystem {
    d: i64,
    m: i64,
    k: usize,
    triples: BTreeMap<i64, Triple>,
}

impl ZeroSumTripleSystem {
    /// Assemble a system by hand; no validation beyond what
    /// [`validate_partition`] performs on demand.
    pub fn from_triples(d: i64, m: i64, k: usize, triples: BTreeMap<i64, Triple>) -> Self {
        ZeroSumTripleSystem { d, m, k, triples }
    }

    pub fn d(&self) -> i64 {
        self.d
    }

    pub fn m(&self) -> i64 {
        self.m
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn get(&self, i: i64) -> Option<Triple> {
        self.triples.get(&i).copied()
    }

    /// Iterate (i, T_i) in ascending index order.
    pub fn iter(&self) -> impl Iterator<Item = (i64, Triple)> + '_ {
        self.triples.iter().map(|(&i, &t)| (i, t))
    }

    /// Debug dump as `{"i": [x, y, z]}`.
    pub fn to_json(&self) -> serde_json::Value {
        let map: BTreeMap<String, [i64; 3]> = self
            .triples
            .iter()
            .map(|(i, t)| (i.to_string(), t.members()))
            .collect();
        json!(map)
    }
}

/// Build the triple system of a valid sequence.
pub fn build_triples(seq: &ExtendedLangfordSequence) -> Result<ZeroSumTripleSystem> {
    validate_sequence(seq).map_err(Error::InvalidSequence)?;
    let (d, m, k) = (seq.d(), seq.m(), seq.k());
    let shift = d + m - 1;
    let mut triples = BTreeMap::new();
    let center = k as i64 + shift;
    triples.insert(0, Triple::new(center, -center, 0));
    let pairs = seq.pair_positions().expect("valid sequence has all pairs");
    for (j, a, b) in pairs {
        let i = j - d + 1; // value j = i + d - 1
        let t = Triple::new(j, a as i64 + shift, -(b as i64 + shift));
        triples.insert(i, t);
        triples.insert(-i, t.negated());
    }
    Ok(ZeroSumTripleSystem { d, m, k, triples })
}

/// First rule broken by an invalid triple system.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PartitionViolation {
    MissingTriple { i: i64 },
    NonZeroSum { i: i64, sum: i64 },
    DuplicateMember { value: i64 },
    UnexpectedMember { value: i64 },
    MissingMember { value: i64 },
}

impl fmt::Display for PartitionViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PartitionViolation::MissingTriple { i } => write!(f, "triple T_{i} is missing"),
            PartitionViolation::NonZeroSum { i, sum } => {
                write!(f, "triple T_{i} sums to {sum}, not zero")
            }
            PartitionViolation::DuplicateMember { value } => {
                write!(f, "value {value} appears in more than one triple")
            }
            PartitionViolation::UnexpectedMember { value } => {
                write!(f, "value {value} lies outside the target set")
            }
            PartitionViolation::MissingMember { value } => {
                write!(f, "value {value} of the target set is not covered")
            }
        }
    }
}

/// Accept iff the triples exist for every index, each sums to zero, and
/// together they cover [d, d+3m] ∪ [-d-3m, -d] ∪ {0} exactly once.
pub fn validate_partition(
    ts: &ZeroSumTripleSystem,
) -> std::result::Result<(), PartitionViolation> {
    for i in -ts.m..=ts.m {
        match ts.get(i) {
            None => return Err(PartitionViolation::MissingTriple { i }),
            Some(t) if t.sum() != 0 => {
                return Err(PartitionViolation::NonZeroSum { i, sum: t.sum() })
            }
            Some(_) => {}
        }
    }
    let in_target = |v: i64| v == 0 || (ts.d..=ts.d + 3 * ts.m).contains(&v.abs());
    let mut seen = std::collections::BTreeSet::new();
    for (_, t) in ts.iter() {
        for v in t.members() {
            if !in_target(v) {
                return Err(PartitionViolation::UnexpectedMember { value: v });
            }
            if !seen.insert(v) {
                return Err(PartitionViolation::DuplicateMember { value: v });
            }
        }
    }
    for v in (ts.d..=ts.d + 3 * ts.m).flat_map(|v| [v, -v]).chain([0]) {
        if !seen.contains(&v) {
            return Err(PartitionViolation::MissingMember { value: v });
        }
    }
    Ok(())
}
