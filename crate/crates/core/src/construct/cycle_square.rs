//! Square of the `n`-cycle with consecutive pairs weighted by suffix
//! alternating sums, plus the even-`n` patches for `D = 2` and `D = 4`.

use alloc::vec::Vec;

use super::{
    check_relaxed, Branch, ConstructError, ConstructionCertificate, ConstructionParams, EdgeSink,
    Precondition,
};
use crate::multigraph::Multigraph;
use crate::sequence::alternating_sum_of;

/// `D_i` for `i = 2..=n`, stored at index `i - 2`.
fn suffix_sums(dprime: &[i64]) -> Vec<i64> {
    let n = dprime.len();
    let mut out = alloc::vec![0i64; n - 1];
    let mut acc = 0i64;
    for i in (1..n).rev() {
        acc = dprime[i] - acc;
        out[i - 1] = acc;
    }
    out
}

fn branch_for(n: usize, alt: i64) -> Result<Branch, Precondition> {
    match (n % 2, alt) {
        (1, 4) => Ok(Branch::CycleSquareOdd),
        (1, _) => Err(Precondition::AlternatingSum {
            value: alt,
            expected: "4 (odd n)",
        }),
        (_, 0) => Ok(Branch::CycleSquareD0),
        (_, 2) => Ok(Branch::CycleSquareD2),
        (_, 4) => Ok(Branch::CycleSquareD4),
        _ => Err(Precondition::AlternatingSum {
            value: alt,
            expected: "0, 2 or 4 (even n)",
        }),
    }
}

pub(super) fn build(d: &[i64], branch: Branch) -> Result<Multigraph, ConstructError> {
    let n = d.len();
    if n < 5 {
        return Err(Precondition::TooFewVertices { min: 5, got: n }.into());
    }
    let dprime: Vec<i64> = d.iter().map(|&x| x - 4).collect();
    let suffix = suffix_sums(&dprime);
    let big_d = |i: usize| suffix[i - 2];
    let next = |i: usize, step: usize| (i - 1 + step) % n + 1;

    let mut g = EdgeSink::new(n);
    for i in 1..n {
        g.set(i, i + 1, 1 + big_d(i + 1))?;
    }
    g.set(n, 1, 1)?;
    for i in 1..=n {
        g.set(i, next(i, 2), 1)?;
    }
    match branch {
        Branch::CycleSquareOdd | Branch::CycleSquareD0 => {}
        Branch::CycleSquareD2 => {
            g.adjust(1, 2, 1)?;
            g.adjust(1, n, 1)?;
            g.adjust(2, n, -1)?;
        }
        Branch::CycleSquareD4 => {
            g.adjust(1, 2, 2)?;
            g.adjust(1, n, 1)?;
            g.adjust(1, 4, 1)?;
            g.adjust(2, n, -1)?;
            g.adjust(2, 4, -1)?;
        }
        _ => {
            return Err(super::ConstructError::Internal(
                super::InternalFault::ReplayMismatch,
            ))
        }
    }
    g.finish()
}

/// Cycle-square realization of `d`, where `d[0]` need not be the largest.
///
/// Requires `n >= 5`, `d2 >= ... >= dn >= 4`, `d1 >= 0`, and `D = 4` for
/// odd `n` or `D` in `{0, 2, 4}` for even `n`.
pub fn construct_cycle_square(
    d: &[i64],
) -> Result<(Multigraph, ConstructionCertificate), ConstructError> {
    check_relaxed(d, 5)?;
    let alt = alternating_sum_of(d);
    let branch = branch_for(d.len(), alt)?;
    let g = build(d, branch)?;
    let dprime: Vec<i64> = d.iter().map(|&x| x - 4).collect();
    let dsuffix = suffix_sums(&dprime);
    let cert = ConstructionCertificate {
        branch,
        degrees: d.to_vec(),
        params: ConstructionParams {
            alt_sum: alt,
            dprime: Some(dprime),
            dsuffix: Some(dsuffix),
            ..ConstructionParams::default()
        },
        split: None,
    };
    Ok((g, cert))
}
