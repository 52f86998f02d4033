//! k-extended Langford sequences of defect `d` and length `m`, written
//! 𝓛ᵏ_{d,m}: a sequence of `2m+1` slots in which slot `k` is empty and every
//! value `j` in `[d, d+m-1]` occupies exactly two slots whose 1-based
//! positions differ by `j`.
//!
//! This module also derives the construction parameters of a square order
//! `n` and enumerates the hole positions admissible for defect 4.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result, SearchFailure};

/// Default node budget for [`search_sequence`].
pub const DEFAULT_SEARCH_BUDGET: u64 = 100_000_000;

/// Largest `m` accepted by [`enumerate_sequences`].
pub const ENUMERATION_LIMIT: i64 = 8;

/// Parameters of the order-`n` construction.
///
/// For n = 18u ± 3: λ = (n²-1)/2 is the entry bound, w = n/3 the block-grid
/// side, and m = (n²-171)/54 the Langford length. The defect is fixed at 4.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ConstructionParams {
    pub n: i64,
    pub u: i64,
    pub lambda: i64,
    pub w: i64,
    pub m: i64,
    pub d: i64,
}

/// Derive all construction parameters from the square order.
pub fn derive_parameters(n: i64) -> Result<ConstructionParams> {
    if n < 21 || (n % 18 != 3 && n % 18 != 15) {
        return Err(Error::UnsupportedOrder(n));
    }
    let u = if n % 18 == 3 { (n - 3) / 18 } else { (n + 3) / 18 };
    let params = ConstructionParams {
        n,
        u,
        lambda: (n * n - 1) / 2,
        w: n / 3,
        m: (n * n - 171) / 54,
        d: 4,
    };
    debug_assert_eq!(54 * params.m + 171, n * n);
    debug_assert_eq!(27 * (2 * params.m + 1), n * n - 144);
    debug_assert_eq!(params.w % 2, 1);
    debug_assert_eq!(params.m.rem_euclid(4), 1);
    debug_assert!(params.m >= 5);
    Ok(params)
}

/// A k-extended Langford sequence candidate. Construction does not validate;
/// see [`validate_sequence`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtendedLangfordSequence {
    d: i64,
    m: i64,
    k: usize,
    slots: Vec<Option<i64>>,
}

impl ExtendedLangfordSequence {
    pub fn from_slots(d: i64, m: i64, k: usize, slots: Vec<Option<i64>>) -> Self {
        ExtendedLangfordSequence { d, m, k, slots }
    }

    pub fn d(&self) -> i64 {
        self.d
    }

    pub fn m(&self) -> i64 {
        self.m
    }

    /// 1-based hole position.
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn slots(&self) -> &[Option<i64>] {
        &self.slots
    }

    /// The two 1-based positions of every value `j`, as `(j, a_j, b_j)` with
    /// `a_j < b_j`, for `j` in `[d, d+m-1]`. `None` if some value does not
    /// occur exactly twice.
    pub fn pair_positions(&self) -> Option<Vec<(i64, usize, usize)>> {
        let mut pairs = Vec::with_capacity(self.m.max(0) as usize);
        for j in self.d..self.d + self.m {
            let mut occ = self
                .slots
                .iter()
                .enumerate()
                .filter(|(_, v)| **v == Some(j))
                .map(|(idx, _)| idx + 1);
            let a = occ.next()?;
            let b = occ.next()?;
            if occ.next().is_some() {
                return None;
            }
            pairs.push((j, a, b));
        }
        Some(pairs)
    }

    /// Left-right mirror; the hole moves to `2m+2-k`.
    pub fn reversed(&self) -> Self {
        let mut slots = self.slots.clone();
        slots.reverse();
        ExtendedLangfordSequence {
            d: self.d,
            m: self.m,
            k: self.slots.len() + 1 - self.k,
            slots,
        }
    }

    /// Serialize in the sequence file format: a `d=.. m=.. k=..` header line
    /// followed by the slot line with `_` marking the hole.
    pub fn to_file_string(&self) -> String {
        format!("d={} m={} k={}\n{}\n", self.d, self.m, self.k, self)
    }

    /// Parse the sequence file format produced by [`Self::to_file_string`].
    pub fn from_file_string(text: &str) -> Result<Self> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let header = lines
            .next()
            .ok_or_else(|| Error::Parse("empty sequence file".into()))?;
        let mut d = None;
        let mut m = None;
        let mut k = None;
        for field in header.split_whitespace() {
            let (key, value) = field
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("bad header field `{field}`")))?;
            let value: i64 = value
                .parse()
                .map_err(|_| Error::Parse(format!("bad header value in `{field}`")))?;
            match key {
                "d" => d = Some(value),
                "m" => m = Some(value),
                "k" => k = Some(value),
                _ => return Err(Error::Parse(format!("unknown header key `{key}`"))),
            }
        }
        let (d, m, k) = match (d, m, k) {
            (Some(d), Some(m), Some(k)) if m >= 0 && k >= 1 => (d, m, k as usize),
            _ => return Err(Error::Parse("header must set d, m and k".into())),
        };
        let body = lines
            .next()
            .ok_or_else(|| Error::Parse("missing slot line".into()))?;
        let mut slots = Vec::new();
        for token in body.split_whitespace() {
            if token == "_" {
                slots.push(None);
            } else {
                let v: i64 = token
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad slot token `{token}`")))?;
                slots.push(Some(v));
            }
        }
        if slots.len() != 2 * m as usize + 1 {
            return Err(Error::Parse(format!(
                "expected {} slots, found {}",
                2 * m + 1,
                slots.len()
            )));
        }
        Ok(ExtendedLangfordSequence { d, m, k, slots })
    }
}

impl fmt::Display for ExtendedLangfordSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, slot) in self.slots.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            match slot {
                Some(v) => write!(f, "{v}")?,
                None => write!(f, "_")?,
            }
        }
        Ok(())
    }
}

/// First rule broken by an invalid sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SequenceViolation {
    WrongSlotCount { expected: usize, actual: usize },
    ValueOutOfRange { position: usize, value: i64 },
    WrongMultiplicity { value: i64, count: usize },
    WrongGap { value: i64, a: usize, b: usize },
    HoleMisplaced { expected: usize, actual: Option<usize> },
}

impl fmt::Display for SequenceViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SequenceViolation::WrongSlotCount { expected, actual } => {
                write!(f, "expected {expected} slots, found {actual}")
            }
            SequenceViolation::ValueOutOfRange { position, value } => {
                write!(f, "value {value} at position {position} is outside [d, d+m-1]")
            }
            SequenceViolation::WrongMultiplicity { value, count } => {
                write!(f, "value {value} occurs {count} times instead of twice")
            }
            SequenceViolation::WrongGap { value, a, b } => {
                write!(f, "value {value} sits at positions {a} and {b}, gap {} != {value}", b - a)
            }
            SequenceViolation::HoleMisplaced { expected, actual } => match actual {
                Some(pos) => write!(f, "hole found at position {pos}, expected {expected}"),
                None => write!(f, "no hole found, expected one at position {expected}"),
            },
        }
    }
}

/// Accept iff the sequence is a valid 𝓛ᵏ_{d,m}; otherwise name the first
/// violated rule.
pub fn validate_sequence(
    seq: &ExtendedLangfordSequence,
) -> std::result::Result<(), SequenceViolation> {
    let n_slots = 2 * seq.m.max(0) as usize + 1;
    if seq.slots.len() != n_slots {
        return Err(SequenceViolation::WrongSlotCount {
            expected: n_slots,
            actual: seq.slots.len(),
        });
    }
    for (idx, slot) in seq.slots.iter().enumerate() {
        if let Some(v) = slot {
            if *v < seq.d || *v >= seq.d + seq.m {
                return Err(SequenceViolation::ValueOutOfRange {
                    position: idx + 1,
                    value: *v,
                });
            }
        }
    }
    for j in seq.d..seq.d + seq.m {
        let positions: Vec<usize> = seq
            .slots
            .iter()
            .enumerate()
            .filter(|(_, v)| **v == Some(j))
            .map(|(idx, _)| idx + 1)
            .collect();
        if positions.len() != 2 {
            return Err(SequenceViolation::WrongMultiplicity {
                value: j,
                count: positions.len(),
            });
        }
        let (a, b) = (positions[0], positions[1]);
        if b - a != j as usize {
            return Err(SequenceViolation::WrongGap { value: j, a, b });
        }
    }
    let hole = seq.slots.iter().position(Option::is_none).map(|p| p + 1);
    if hole != Some(seq.k) {
        return Err(SequenceViolation::HoleMisplaced {
            expected: seq.k,
            actual: hole,
        });
    }
    Ok(())
}

/// Hole positions k for which an 𝓛ᵏ_{4,m} exists: k within
/// [m(7-m)/2 + 1, m(m-3)/2 + 1], with the parity forced by m mod 4,
/// intersected with the meaningful positions [1, 2m+1].
pub fn admissible_hole_positions(m: i64) -> BTreeSet<usize> {
    let mut out = BTreeSet::new();
    if m < 5 {
        return out;
    }
    // m(7-m) and m(m-3) are even for every m, so the division is exact.
    let lo = m * (7 - m) / 2 + 1;
    let hi = m * (m - 3) / 2 + 1;
    let k_odd = matches!(m.rem_euclid(4), 0 | 3);
    let lo = lo.max(1);
    let hi = hi.min(2 * m + 1);
    for k in lo..=hi {
        if (k % 2 == 1) == k_odd {
            out.insert(k as usize);
        }
    }
    out
}

struct Searcher {
    d: i64,
    m: i64,
    k: usize,
    n_slots: usize,
    occupied: Vec<bool>,
    slots: Vec<Option<i64>>,
    nodes: u64,
    budget: u64,
    /// When set, collect every solution instead of stopping at the first.
    solutions: Option<Vec<Vec<Option<i64>>>>,
}

enum SearchOutcome {
    Found,
    Exhausted,
    OverBudget,
}

impl Searcher {
    fn new(d: i64, m: i64, k: usize, budget: u64, collect_all: bool) -> Self {
        let n_slots = 2 * m.max(0) as usize + 1;
        let mut occupied = vec![false; n_slots + 1]; // 1-based
        occupied[k] = true;
        Searcher {
            d,
            m,
            k,
            n_slots,
            occupied,
            slots: vec![None; n_slots],
            nodes: 0,
            budget,
            solutions: collect_all.then(Vec::new),
        }
    }

    /// Place values largest-first, earliest feasible a_j first.
    fn place(&mut self, j: i64) -> SearchOutcome {
        if j < self.d {
            match &mut self.solutions {
                Some(all) => {
                    all.push(self.slots.clone());
                    return SearchOutcome::Exhausted; // keep backtracking
                }
                None => return SearchOutcome::Found,
            }
        }
        let gap = j as usize;
        for a in 1..=self.n_slots.saturating_sub(gap) {
            let b = a + gap;
            if self.occupied[a] || self.occupied[b] {
                continue;
            }
            if self.nodes >= self.budget {
                return SearchOutcome::OverBudget;
            }
            self.nodes += 1;
            self.occupied[a] = true;
            self.occupied[b] = true;
            self.slots[a - 1] = Some(j);
            self.slots[b - 1] = Some(j);
            let outcome = self.place(j - 1);
            match outcome {
                SearchOutcome::Found => return SearchOutcome::Found,
                SearchOutcome::OverBudget => return SearchOutcome::OverBudget,
                SearchOutcome::Exhausted => {
                    self.occupied[a] = false;
                    self.occupied[b] = false;
                    self.slots[a - 1] = None;
                    self.slots[b - 1] = None;
                }
            }
        }
        SearchOutcome::Exhausted
    }

    fn into_sequence(self) -> ExtendedLangfordSequence {
        ExtendedLangfordSequence {
            d: self.d,
            m: self.m,
            k: self.k,
            slots: self.slots,
        }
    }
}

/// Find an 𝓛ᵏ_{d,m} by deterministic backtracking.
///
/// Values are placed from `d+m-1` down to `d`, each at its earliest feasible
/// position. With `k` unset, admissible holes are tried in ascending order
/// (defect 4 only); the budget counts node expansions across the whole call.
pub fn search_sequence(
    d: i64,
    m: i64,
    k: Option<usize>,
    budget: u64,
) -> Result<ExtendedLangfordSequence> {
    let candidates: Vec<usize> = match k {
        Some(k) => {
            if k == 0 || k > 2 * m.max(0) as usize + 1 {
                return Err(Error::InadmissibleHole { m, k });
            }
            if d == 4 && !admissible_hole_positions(m).contains(&k) {
                return Err(Error::InadmissibleHole { m, k });
            }
            vec![k]
        }
        None => {
            if d != 4 {
                return Err(Error::Parse(
                    "hole position k is required for defects other than 4".into(),
                ));
            }
            admissible_hole_positions(m).into_iter().collect()
        }
    };
    if candidates.is_empty() {
        return Err(Error::SearchExhausted {
            nodes: 0,
            reason: SearchFailure::NoSolution,
        });
    }
    let mut nodes_spent = 0u64;
    for k in candidates {
        let mut searcher = Searcher::new(d, m, k, budget.saturating_sub(nodes_spent), false);
        let outcome = searcher.place(d + m - 1);
        nodes_spent += searcher.nodes;
        match outcome {
            SearchOutcome::Found => {
                let seq = searcher.into_sequence();
                debug_assert!(validate_sequence(&seq).is_ok());
                return Ok(seq);
            }
            SearchOutcome::Exhausted => {}
            SearchOutcome::OverBudget => {
                return Err(Error::SearchExhausted {
                    nodes: nodes_spent,
                    reason: SearchFailure::BudgetExceeded,
                })
            }
        }
    }
    Err(Error::SearchExhausted {
        nodes: nodes_spent,
        reason: SearchFailure::NoSolution,
    })
}

/// Every valid 𝓛ᵏ_{d,m}, in the DFS order of [`search_sequence`].
///
/// Exhaustive, so only small lengths are allowed (`m ≤ 8`).
pub fn enumerate_sequences(d: i64, m: i64, k: usize) -> Result<Vec<ExtendedLangfordSequence>> {
    if m > ENUMERATION_LIMIT {
        return Err(Error::OracleScaleExceeded {
            m,
            limit: ENUMERATION_LIMIT,
        });
    }
    if k == 0 || k > 2 * m.max(0) as usize + 1 {
        return Err(Error::InadmissibleHole { m, k });
    }
    let mut searcher = Searcher::new(d, m, k, u64::MAX, true);
    searcher.place(d + m - 1);
    let solutions = searcher.solutions.take().unwrap_or_default();
    Ok(solutions
        .into_iter()
        .map(|slots| ExtendedLangfordSequence { d, m, k, slots })
        .collect())
}

#[cfg(test)]
pub(crate) mod testing {
    use super::ExtendedLangfordSequence;

    /// The worked 𝓛⁶₄,₅ used throughout the tests: 8 6 4 7 5 _ 4 6 8 5 7.
    pub(crate) fn sample_sequence() -> ExtendedLangfordSequence {
        let slots = [8, 6, 4, 7, 5, 0, 4, 6, 8, 5, 7]
            .iter()
            .map(|&v| if v == 0 { None } else { Some(v) })
            .collect();
        ExtendedLangfordSequence::from_slots(4, 5, 6, slots)
    }
}

#[cfg(test)]
mod tests {
    use super::testing::sample_sequence;
    use super::*;

    #[test]
    fn derive_parameters_for_21() {
        let p = derive_parameters(21).unwrap();
        assert_eq!((p.u, p.lambda, p.w, p.m, p.d), (1, 220, 7, 5, 4));
    }

    #[test]
    fn derive_parameters_for_33() {
        let p = derive_parameters(33).unwrap();
        assert_eq!((p.u, p.lambda, p.w, p.m), (2, 544, 11, 17));
    }

    #[test]
    fn derive_parameters_rejects_bad_orders() {
        for n in [20, 15, 27, 9, -3, 24] {
            assert!(
                matches!(derive_parameters(n), Err(Error::UnsupportedOrder(_))),
                "n={n}"
            );
        }
        // every order of the supported residues from 21 up is accepted
        for n in (21..100).filter(|n| n % 18 == 3 || n % 18 == 15) {
            assert!(derive_parameters(n).is_ok(), "n={n}");
        }
    }

    #[test]
    fn admissible_holes_m5() {
        let ks = admissible_hole_positions(5);
        assert_eq!(ks.into_iter().collect::<Vec<_>>(), vec![6]);
    }

    #[test]
    fn admissible_holes_m17() {
        let ks = admissible_hole_positions(17);
        let expected: Vec<usize> = (1..=35).filter(|k| k % 2 == 0).collect();
        assert_eq!(ks.into_iter().collect::<Vec<_>>(), expected);
    }

    #[test]
    fn admissible_holes_below_minimum_length() {
        assert!(admissible_hole_positions(4).is_empty());
    }

    #[test]
    fn admissible_holes_parity_follows_m_mod_4() {
        for m in 5..=30 {
            let want_odd = matches!(m % 4, 0 | 3);
            for k in admissible_hole_positions(m) {
                assert_eq!(k % 2 == 1, want_odd, "m={m} k={k}");
            }
        }
    }

    #[test]
    fn validate_accepts_sample() {
        assert_eq!(validate_sequence(&sample_sequence()), Ok(()));
    }

    #[test]
    fn validate_rejects_bad_gap() {
        // the two 4s moved to positions 3 and 8: gap 5
        let slots = [8, 6, 4, 7, 5, 0, 0, 4, 8, 5, 7]
            .iter()
            .map(|&v| if v == 0 { None } else { Some(v) })
            .collect();
        let seq = ExtendedLangfordSequence::from_slots(4, 5, 6, slots);
        assert_eq!(
            validate_sequence(&seq),
            Err(SequenceViolation::WrongGap { value: 4, a: 3, b: 8 })
        );
    }

    #[test]
    fn validate_rejects_all_empty() {
        let seq = ExtendedLangfordSequence::from_slots(4, 5, 6, vec![None; 11]);
        assert_eq!(
            validate_sequence(&seq),
            Err(SequenceViolation::WrongMultiplicity { value: 4, count: 0 })
        );
    }

    #[test]
    fn validate_rejects_misplaced_hole() {
        // valid slot content but the declared hole is one off
        let seq = ExtendedLangfordSequence::from_slots(4, 5, 7, sample_sequence().slots().to_vec());
        assert_eq!(
            validate_sequence(&seq),
            Err(SequenceViolation::HoleMisplaced { expected: 7, actual: Some(6) })
        );
    }

    #[test]
    fn search_finds_valid_sequence_for_m5() {
        let seq = search_sequence(4, 5, Some(6), DEFAULT_SEARCH_BUDGET).unwrap();
        assert_eq!(validate_sequence(&seq), Ok(()));
        assert_eq!(seq.k(), 6);
    }

    #[test]
    fn search_resolves_hole_automatically() {
        let seq = search_sequence(4, 5, None, DEFAULT_SEARCH_BUDGET).unwrap();
        assert_eq!(seq.k(), 6);
        assert_eq!(validate_sequence(&seq), Ok(()));
    }

    #[test]
    fn search_rejects_inadmissible_hole() {
        assert!(matches!(
            search_sequence(4, 5, Some(3), DEFAULT_SEARCH_BUDGET),
            Err(Error::InadmissibleHole { m: 5, k: 3 })
        ));
    }

    #[test]
    fn search_reports_budget_exhaustion() {
        match search_sequence(4, 17, Some(2), 3) {
            Err(Error::SearchExhausted { reason, .. }) => {
                assert_eq!(reason, SearchFailure::BudgetExceeded)
            }
            other => panic!("expected SearchExhausted, got {other:?}"),
        }
    }

    #[test]
    fn enumeration_matches_frozen_count() {
        // regression constant: exhaustive enumeration of L^6_{4,5} finds 6
        let all = enumerate_sequences(4, 5, 6).unwrap();
        assert_eq!(all.len(), 6);
        assert!(all.contains(&sample_sequence()));
        for seq in &all {
            assert_eq!(validate_sequence(seq), Ok(()));
        }
    }

    #[test]
    fn enumeration_order_is_search_order() {
        let all = enumerate_sequences(4, 5, 6).unwrap();
        let first = search_sequence(4, 5, Some(6), DEFAULT_SEARCH_BUDGET).unwrap();
        assert_eq!(all[0], first);
    }

    #[test]
    fn enumeration_closed_under_reversal() {
        let all = enumerate_sequences(4, 5, 6).unwrap();
        for seq in &all {
            let rev = seq.reversed();
            assert_eq!(validate_sequence(&rev), Ok(()));
            assert!(all.contains(&rev));
        }
        assert!(all.contains(&sample_sequence().reversed()));
    }

    #[test]
    fn enumeration_rejects_large_m() {
        assert!(matches!(
            enumerate_sequences(4, 9, 2),
            Err(Error::OracleScaleExceeded { .. })
        ));
    }

    #[test]
    fn pair_positions_cover_slots() {
        let seq = sample_sequence();
        let pairs = seq.pair_positions().unwrap();
        let mut covered: Vec<usize> = pairs.iter().flat_map(|&(_, a, b)| [a, b]).collect();
        covered.sort_unstable();
        let expected: Vec<usize> = (1..=11).filter(|&p| p != 6).collect();
        assert_eq!(covered, expected);
    }

    #[test]
    fn file_format_round_trip() {
        let seq = sample_sequence();
        let text = seq.to_file_string();
        assert_eq!(text, "d=4 m=5 k=6\n8 6 4 7 5 _ 4 6 8 5 7\n");
        let parsed = ExtendedLangfordSequence::from_file_string(&text).unwrap();
        assert_eq!(parsed, seq);
    }

    #[test]
    fn file_format_rejects_short_slot_line() {
        let err = ExtendedLangfordSequence::from_file_string("d=4 m=5 k=6\n1 2 3\n");
        assert!(matches!(err, Err(Error::Parse(_))));
    }
}
