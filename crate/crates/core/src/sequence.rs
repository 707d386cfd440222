//! Canonical degree sequences and the sequence-level predicates.

use alloc::vec::Vec;
use core::fmt;

/// Degree sums at or above this bound are rejected.
pub const MAX_DEGREE_SUM: i128 = 1 << 62;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SequenceError {
    EmptyInput,
    /// 1-based position of the first negative entry.
    NegativeEntry(usize),
    /// Degree sum is at least `2^62`.
    Overflow,
    /// The Erdős–Gallai test is only defined for positive entries.
    ZeroDegreePresent,
}

impl fmt::Display for SequenceError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SequenceError::EmptyInput => write!(f, "degree sequence is empty"),
            SequenceError::NegativeEntry(i) => write!(f, "entry {i} is negative"),
            SequenceError::Overflow => write!(f, "degree sum must be below 2^62"),
            SequenceError::ZeroDegreePresent => {
                write!(f, "sequence contains a zero entry; strip zeros first")
            }
        }
    }
}

impl core::error::Error for SequenceError {}

/// A descending degree sequence plus the permutation back to input order.
///
/// `perm[p]` is the 1-based input position of the entry now at sorted
/// position `p` (0-based slice index).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DegreeSequence {
    degrees: Vec<i64>,
    perm: Vec<usize>,
}

impl DegreeSequence {
    pub fn degrees(&self) -> &[i64] {
        &self.degrees
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    pub fn len(&self) -> usize {
        self.degrees.len()
    }

    /// Always false; a sequence has at least one entry.
    pub fn is_empty(&self) -> bool {
        self.degrees.is_empty()
    }

    pub fn sum(&self) -> i64 {
        self.degrees.iter().sum()
    }

    /// Degrees in the caller's original order.
    pub fn original_order(&self) -> Vec<i64> {
        let mut out = alloc::vec![0; self.len()];
        for (d, &p) in self.degrees.iter().zip(&self.perm) {
            out[p - 1] = *d;
        }
        out
    }
}

/// Sorts `raw` descending (stable) and records where each entry came from.
pub fn canonicalize(raw: &[i64]) -> Result<DegreeSequence, SequenceError> {
    if raw.is_empty() {
        return Err(SequenceError::EmptyInput);
    }
    if let Some(i) = raw.iter().position(|&d| d < 0) {
        return Err(SequenceError::NegativeEntry(i + 1));
    }
    let total: i128 = raw.iter().map(|&d| d as i128).sum();
    if total >= MAX_DEGREE_SUM {
        return Err(SequenceError::Overflow);
    }
    let mut order: Vec<usize> = (0..raw.len()).collect();
    order.sort_by_key(|&i| core::cmp::Reverse(raw[i]));
    Ok(DegreeSequence {
        degrees: order.iter().map(|&i| raw[i]).collect(),
        perm: order.iter().map(|&i| i + 1).collect(),
    })
}

/// Drops zero entries, which correspond to isolated vertices.
pub fn strip_zeros(raw: &[i64]) -> Vec<i64> {
    raw.iter().copied().filter(|&d| d != 0).collect()
}

/// `D = d1 - d2 + d3 - ...`, the quantity that selects a construction.
pub fn alternating_sum(seq: &DegreeSequence) -> i64 {
    alternating_sum_of(seq.degrees())
}

pub(crate) fn alternating_sum_of(d: &[i64]) -> i64 {
    d.iter()
        .enumerate()
        .map(|(i, &x)| if i % 2 == 0 { x } else { -x })
        .sum()
}

/// Outcome of the sequence-level checks.
///
/// `failing_k` is set only when `erdos_gallai_ok == Some(false)`: it holds the
/// smallest violating `k`, or `0` when the even-sum bullet failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct ValidationReport {
    pub ordering_ok: bool,
    pub parity_ok: bool,
    pub d1_bound_ok: bool,
    pub min_degree_ok: bool,
    #[cfg_attr(
        feature = "serde",
        serde(default, skip_serializing_if = "Option::is_none")
    )]
    pub erdos_gallai_ok: Option<bool>,
    #[cfg_attr(
        feature = "serde",
        serde(default, skip_serializing_if = "Option::is_none")
    )]
    pub failing_k: Option<usize>,
}

impl ValidationReport {
    /// True when the three conditions for a triangular realization hold.
    pub fn triangular_ok(&self) -> bool {
        self.ordering_ok && self.parity_ok && self.d1_bound_ok && self.min_degree_ok
    }

    /// Names of the failed triangular conditions, in checking order.
    pub fn violations(&self) -> Vec<&'static str> {
        let mut out = Vec::new();
        if !self.ordering_ok {
            out.push("ordering");
        }
        if !self.min_degree_ok {
            out.push("min_degree");
        }
        if !self.parity_ok {
            out.push("parity");
        }
        if !self.d1_bound_ok {
            out.push("d1_bound");
        }
        out
    }
}

/// Evaluates the three realization conditions. The
/// Erdős–Gallai fields are left unset.
pub fn check_triangular_conditions(seq: &DegreeSequence) -> ValidationReport {
    let d = seq.degrees();
    let n = d.len();
    let sum: i64 = d.iter().sum();
    let rest: i64 = d[1..].iter().map(|&x| x - 1).sum();
    ValidationReport {
        ordering_ok: d.windows(2).all(|w| w[0] >= w[1]),
        parity_ok: sum % 2 == 0,
        d1_bound_ok: d[0] <= rest,
        min_degree_ok: n >= 3 && d[n - 1] >= 4,
        erdos_gallai_ok: None,
        failing_k: None,
    }
}

/// Erdős–Gallai test for graphical sequences, in `O(n log n)`.
///
/// Returns the triangular-condition report with the two Erdős–Gallai fields
/// filled in.
pub fn check_erdos_gallai(seq: &DegreeSequence) -> Result<ValidationReport, SequenceError> {
    let d = seq.degrees();
    if d.contains(&0) {
        return Err(SequenceError::ZeroDegreePresent);
    }
    let mut report = check_triangular_conditions(seq);
    let failing = erdos_gallai_witness(d);
    report.erdos_gallai_ok = Some(failing.is_none());
    report.failing_k = failing;
    Ok(report)
}

/// `None` if graphical, `Some(0)` for an odd sum, else the smallest bad `k`.
fn erdos_gallai_witness(d: &[i64]) -> Option<usize> {
    let n = d.len();
    if d.iter().sum::<i64>() % 2 != 0 {
        return Some(0);
    }
    // suffix[i] = d[i] + ... + d[n-1]
    let mut suffix = alloc::vec![0i64; n + 1];
    for i in (0..n).rev() {
        suffix[i] = suffix[i + 1] + d[i];
    }
    let mut prefix = 0i64;
    for k in 1..=n {
        prefix += d[k - 1];
        let kk = k as i64;
        // entries at 0-based index >= k; those >= kk contribute kk each
        let big_end = d.partition_point(|&x| x >= kk).max(k);
        let rhs = kk * (kk - 1) + kk * (big_end - k) as i64 + suffix[big_end];
        if prefix > rhs {
            return Some(k);
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(raw: &[i64]) -> DegreeSequence {
        canonicalize(raw).unwrap()
    }

    #[test]
    fn canonicalize_sorts_and_records_positions() {
        let s = seq(&[4, 6, 5]);
        assert_eq!(s.degrees(), &[6, 5, 4]);
        assert_eq!(s.perm(), &[2, 3, 1]);
        assert_eq!(s.original_order(), vec![4, 6, 5]);

        let s = seq(&[4, 4, 4]);
        assert_eq!(s.perm(), &[1, 2, 3]);
    }

    #[test]
    fn canonicalize_rejects_bad_input() {
        assert_eq!(canonicalize(&[]), Err(SequenceError::EmptyInput));
        assert_eq!(canonicalize(&[4, -1]), Err(SequenceError::NegativeEntry(2)));
        assert_eq!(
            canonicalize(&[1 << 61, 1 << 61]),
            Err(SequenceError::Overflow)
        );
        assert!(canonicalize(&[1 << 61, (1 << 61) - 1]).is_ok());
    }

    #[test]
    fn alternating_sum_examples() {
        assert_eq!(alternating_sum(&seq(&[4, 4, 4])), 4);
        assert_eq!(alternating_sum(&seq(&[4, 4, 4, 4])), 0);
        assert_eq!(alternating_sum(&seq(&[15, 5, 4, 4, 4, 4])), 10);
    }

    #[test]
    fn triangular_condition_examples() {
        let r = check_triangular_conditions(&seq(&[4, 4, 4]));
        assert!(r.triangular_ok());
        assert_eq!(r.erdos_gallai_ok, None);

        let r = check_triangular_conditions(&seq(&[13, 4, 4, 4]));
        assert!(!r.parity_ok);
        // 13 > 9 as well; parity is reported first
        assert!(!r.d1_bound_ok);
        assert_eq!(r.violations(), vec!["parity", "d1_bound"]);
        let r = check_triangular_conditions(&seq(&[7, 4, 4, 4]));
        assert_eq!(r.violations(), vec!["parity"]);

        let r = check_triangular_conditions(&seq(&[10, 4, 4, 4]));
        assert!(r.parity_ok);
        assert!(!r.d1_bound_ok);
        assert_eq!(r.violations(), vec!["d1_bound"]);

        let r = check_triangular_conditions(&seq(&[4, 4]));
        assert!(!r.min_degree_ok);
        let r = check_triangular_conditions(&seq(&[5, 5, 3]));
        assert!(!r.min_degree_ok);
    }

    #[test]
    fn erdos_gallai_examples() {
        let r = check_erdos_gallai(&seq(&[3, 3, 3, 3])).unwrap();
        assert_eq!((r.erdos_gallai_ok, r.failing_k), (Some(true), None));

        // brute force over the 64 labelled graphs on 4 vertices finds no
        // realization of (3,3,1,1); k = 2 is the first violated inequality
        let r = check_erdos_gallai(&seq(&[3, 3, 1, 1])).unwrap();
        assert_eq!((r.erdos_gallai_ok, r.failing_k), (Some(false), Some(2)));

        let r = check_erdos_gallai(&seq(&[4, 4, 4, 4, 4])).unwrap();
        assert_eq!(r.erdos_gallai_ok, Some(true));

        let r = check_erdos_gallai(&seq(&[3, 2, 2])).unwrap();
        assert_eq!((r.erdos_gallai_ok, r.failing_k), (Some(false), Some(0)));

        // a degree of n or more can never be simple
        let r = check_erdos_gallai(&seq(&[3, 1, 1, 1])).unwrap();
        assert_eq!(r.erdos_gallai_ok, Some(true));
        let r = check_erdos_gallai(&seq(&[4, 2, 1, 1])).unwrap();
        assert_eq!((r.erdos_gallai_ok, r.failing_k), (Some(false), Some(1)));

        assert_eq!(
            check_erdos_gallai(&seq(&[2, 2, 0])),
            Err(SequenceError::ZeroDegreePresent)
        );
    }

    #[test]
    fn strip_zeros_keeps_order() {
        assert_eq!(strip_zeros(&[0, 3, 0, 1]), vec![3, 1]);
    }

    fn naive_erdos_gallai(d: &[i64]) -> Option<usize> {
        if d.iter().sum::<i64>() % 2 != 0 {
            return Some(0);
        }
        let n = d.len();
        (1..=n).find(|&k| {
            let lhs: i64 = d[..k].iter().sum();
            let rhs = (k * (k - 1)) as i64 + d[k..].iter().map(|&x| x.min(k as i64)).sum::<i64>();
            lhs > rhs
        })
    }

    proptest::proptest! {
        #[test]
        fn alternating_sum_parity_and_sign(raw in proptest::collection::vec(0i64..60, 1..40)) {
            let s = seq(&raw);
            let d = alternating_sum(&s);
            proptest::prop_assert_eq!(d.rem_euclid(2), s.sum().rem_euclid(2));
            proptest::prop_assert!(d >= 0);
            if s.len() % 2 == 1 {
                proptest::prop_assert!(d >= *s.degrees().last().unwrap());
            }
        }

        #[test]
        fn fast_erdos_gallai_matches_direct_sum(raw in proptest::collection::vec(1i64..30, 1..30)) {
            let s = seq(&raw);
            proptest::prop_assert_eq!(erdos_gallai_witness(s.degrees()), naive_erdos_gallai(s.degrees()));
        }

        #[test]
        fn canonicalize_is_a_stable_sort(raw in proptest::collection::vec(0i64..10, 1..20)) {
            let s = seq(&raw);
            proptest::prop_assert!(s.degrees().windows(2).all(|w| w[0] >= w[1]));
            proptest::prop_assert_eq!(s.original_order(), raw.clone());
            for w in s.perm().windows(2).zip(s.degrees().windows(2)) {
                if w.1[0] == w.1[1] {
                    proptest::prop_assert!(w.0[0] < w.0[1]);
                }
            }
        }
    }
}
