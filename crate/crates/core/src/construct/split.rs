//! Intermediate range `6 <= D <= n - 3`: fan on the tail, cycle square on
//! the head, sharing `v1`.

use alloc::boxed::Box;
use alloc::vec::Vec;

use super::{
    construct_cycle_square, construct_fan, Branch, ConstructError, ConstructionCertificate,
    ConstructionParams, Precondition, SplitInfo,
};
use crate::multigraph::Multigraph;
use crate::sequence::{alternating_sum, check_triangular_conditions, DegreeSequence};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitSequences {
    /// Fan side, on `v1, v_tail_start, ..., v_n`.
    pub a: Vec<i64>,
    /// Cycle-square side, on `v1, ..., v_{tail_start - 1}`.
    pub b: Vec<i64>,
    /// `(D - 4) / 2`.
    pub k: usize,
    pub tail_start: usize,
}

/// Splits `d1` between a fan over the last `2k + 1` (odd `n`) or `2k + 2`
/// (even `n`) vertices and a cycle square over the rest, so that the fan
/// side has alternating sum `2k` and the cycle-square side has `4`.
pub fn split_sequences(seq: &DegreeSequence) -> Result<SplitSequences, ConstructError> {
    let report = check_triangular_conditions(seq);
    if !report.triangular_ok() {
        return Err(ConstructError::NotRealizable(report));
    }
    let d = seq.degrees();
    let n = d.len();
    let alt = alternating_sum(seq);
    if n < 5 || alt < 6 || alt > n as i64 - 3 {
        return Err(Precondition::AlternatingSum {
            value: alt,
            expected: "between 6 and n - 3",
        }
        .into());
    }
    let k = ((alt - 4) / 2) as usize;
    let tail_start = if n % 2 == 1 { n - 2 * k + 1 } else { n - 2 * k };
    // sum of (-1)^i d_i over 1-based i in range
    let signed = |from: usize, to: usize| -> i64 {
        (from..=to)
            .map(|i| if i % 2 == 0 { d[i - 1] } else { -d[i - 1] })
            .sum()
    };
    let mut a = Vec::with_capacity(n - tail_start + 2);
    a.push(2 * k as i64 + signed(tail_start, n));
    a.extend_from_slice(&d[tail_start - 1..]);
    let mut b = Vec::with_capacity(tail_start - 1);
    b.push(4 + signed(2, tail_start - 1));
    b.extend_from_slice(&d[1..tail_start - 1]);
    debug_assert_eq!(a[0] + b[0], d[0]);
    Ok(SplitSequences {
        a,
        b,
        k,
        tail_start,
    })
}

/// Unions the cycle-square graph on `1..tail_start` with the fan graph moved
/// onto `1, tail_start..=n`.
pub(super) fn assemble(
    n: usize,
    tail_start: usize,
    fan: &Multigraph,
    cycle_square: &Multigraph,
) -> Result<Multigraph, ConstructError> {
    let map: Vec<usize> = core::iter::once(1).chain(tail_start..=n).collect();
    Ok(Multigraph::union_on_shared_vertex(cycle_square, fan, &map)?)
}

pub(super) fn construct_split(
    seq: &DegreeSequence,
) -> Result<(Multigraph, ConstructionCertificate), ConstructError> {
    let parts = split_sequences(seq)?;
    let n = seq.len();
    let (fan_graph, fan_cert) = construct_fan(&parts.a)?;
    let (cs_graph, cs_cert) = construct_cycle_square(&parts.b)?;
    let g = assemble(n, parts.tail_start, &fan_graph, &cs_graph)?;
    let cert = ConstructionCertificate {
        branch: if n % 2 == 1 {
            Branch::SplitOdd
        } else {
            Branch::SplitEven
        },
        degrees: seq.degrees().to_vec(),
        params: ConstructionParams {
            alt_sum: alternating_sum(seq),
            k: Some(parts.k),
            ..ConstructionParams::default()
        },
        split: Some(Box::new(SplitInfo {
            a_sequence: parts.a,
            b_sequence: parts.b,
            shared_vertex: 1,
            tail_start: parts.tail_start,
            fan: fan_cert,
            cycle_square: cs_cert,
        })),
    };
    Ok((g, cert))
}
