//! Fan construction: `v1` is adjacent to every other vertex, the rim pairs
//! consecutive outer vertices.
//!
//! The outer vertices are grouped into blocks from the tail. Odd `n` uses
//! pairs `(v_{n-2i+1}, v_{n-2i+2})` for `i = 1..=(n-1)/2`. Even `n` uses
//! the triple `(v_{n-2}, v_{n-1}, v_n)` as block 1 and pairs
//! `(v_{n-2i}, v_{n-2i+1})` for `i = 2..=(n-2)/2`. Blocks before `k` route
//! almost all their degree to the hub, blocks after `k` almost none, and
//! block `k` absorbs the remainder `delta`.

use alloc::vec::Vec;

use super::{
    check_relaxed, Branch, ConstructError, ConstructionCertificate, ConstructionParams, EdgeSink,
    InternalFault, Precondition,
};
use crate::multigraph::Multigraph;
use crate::sequence::alternating_sum_of;

struct FanPlan {
    branch: Branch,
    k: usize,
    delta: i64,
    alpha: Option<i64>,
    beta: Option<i64>,
    dbar: Vec<i64>,
}

fn check_preconditions(d: &[i64]) -> Result<i64, Precondition> {
    check_relaxed(d, 3)?;
    let n = d.len() as i64;
    if d.iter().sum::<i64>() % 2 != 0 {
        return Err(Precondition::OddSum);
    }
    if d[0] > d[1..].iter().map(|&x| x - 1).sum::<i64>() {
        return Err(Precondition::D1Bound);
    }
    let alt = alternating_sum_of(d);
    if alt < n - 2 {
        return Err(Precondition::AlternatingSum {
            value: alt,
            expected: "at least n - 2",
        });
    }
    Ok(alt)
}

/// Smallest `k` (1-based) with `dbar[..k].sum() >= target`, and
/// `delta = target - dbar[..k-1].sum()`.
fn locate_block(dbar: &[i64], target: i64) -> Result<(usize, i64), ConstructError> {
    let mut before = 0i64;
    for (i, &b) in dbar.iter().enumerate() {
        if before + b >= target {
            return Ok((i + 1, target - before));
        }
        before += b;
    }
    Err(ConstructError::Internal(InternalFault::NoBlockForOffset))
}

fn plan(d: &[i64], alt: i64) -> Result<FanPlan, ConstructError> {
    let n = d.len();
    let dd = |i: usize| d[i - 1];
    if n % 2 == 1 {
        let dbar: Vec<i64> = (1..=(n - 1) / 2).map(|i| dd(n + 2 - 2 * i) - 2).collect();
        let (k, delta) = locate_block(&dbar, (alt - (n as i64 - 1)) / 2)?;
        Ok(FanPlan {
            branch: Branch::FanOdd,
            k,
            delta,
            alpha: None,
            beta: None,
            dbar,
        })
    } else {
        debug_assert!(d[0] <= d[1..].iter().sum::<i64>() - n as i64);
        let dbar: Vec<i64> = (1..=(n - 2) / 2)
            .map(|i| {
                if i == 1 {
                    dd(n - 1) - 3
                } else {
                    dd(n + 1 - 2 * i) - 2
                }
            })
            .collect();
        let (k, delta) = locate_block(&dbar, (alt - (n as i64 - 2)) / 2)?;
        if k == 1 {
            let alpha = delta.min(dd(n) - 3);
            Ok(FanPlan {
                branch: Branch::FanEvenK1,
                k,
                delta,
                alpha: Some(alpha),
                beta: Some(delta - alpha),
                dbar,
            })
        } else {
            Ok(FanPlan {
                branch: Branch::FanEvenKGt1,
                k,
                delta,
                alpha: None,
                beta: None,
                dbar,
            })
        }
    }
}

fn build_odd(d: &[i64], k: usize, delta: i64) -> Result<Multigraph, ConstructError> {
    let n = d.len();
    let dd = |i: usize| d[i - 1];
    let mut g = EdgeSink::new(n);
    for i in 1..=(n - 1) / 2 {
        let (lo, hi) = (n - 2 * i + 1, n - 2 * i + 2);
        if i < k {
            g.set(1, hi, dd(hi) - 1)?;
            g.set(1, lo, dd(lo) - 1)?;
            g.set(lo, hi, 1)?;
        } else if i > k {
            g.set(1, hi, 1)?;
            g.set(1, lo, 1 + dd(lo) - dd(hi))?;
            g.set(lo, hi, dd(hi) - 1)?;
        } else {
            g.set(1, hi, 1 + delta)?;
            g.set(1, lo, 1 + delta + dd(lo) - dd(hi))?;
            g.set(lo, hi, dd(hi) - 1 - delta)?;
        }
    }
    g.finish()
}

fn build_even(
    d: &[i64],
    k: usize,
    delta: i64,
    alpha_beta: Option<(i64, i64)>,
) -> Result<Multigraph, ConstructError> {
    let n = d.len();
    let dd = |i: usize| d[i - 1];
    let mut g = EdgeSink::new(n);
    // block 1: the triple v_{n-2}, v_{n-1}, v_n
    if k == 1 {
        let (alpha, beta) =
            alpha_beta.ok_or(ConstructError::Internal(InternalFault::ReplayMismatch))?;
        g.set(1, n, 2 + alpha)?;
        g.set(1, n - 1, 1 + alpha + beta)?;
        g.set(1, n - 2, dd(n - 2) - dd(n - 1) + dd(n) - 1 + beta)?;
        g.set(n, n - 1, dd(n) - 2 - alpha)?;
        g.set(n - 1, n - 2, dd(n - 1) - dd(n) + 1 - beta)?;
    } else {
        g.set(1, n, dd(n) - 1)?;
        g.set(1, n - 1, dd(n - 1) - 2)?;
        g.set(1, n - 2, dd(n - 2) - 1)?;
        g.set(n, n - 1, 1)?;
        g.set(n - 1, n - 2, 1)?;
    }
    for i in 2..=(n - 2) / 2 {
        let (lo, hi) = (n - 2 * i, n - 2 * i + 1);
        if i < k {
            g.set(1, hi, dd(hi) - 1)?;
            g.set(1, lo, dd(lo) - 1)?;
            g.set(lo, hi, 1)?;
        } else if i > k {
            g.set(1, hi, 1)?;
            g.set(1, lo, 1 + dd(lo) - dd(hi))?;
            g.set(lo, hi, dd(hi) - 1)?;
        } else {
            g.set(1, hi, 1 + delta)?;
            g.set(1, lo, 1 + delta + dd(lo) - dd(hi))?;
            g.set(lo, hi, dd(hi) - 1 - delta)?;
        }
    }
    g.finish()
}

pub(super) fn replay(d: &[i64], p: &ConstructionParams) -> Result<Multigraph, ConstructError> {
    let missing = ConstructError::Internal(InternalFault::ReplayMismatch);
    let k = p.k.ok_or(missing.clone())?;
    let delta = p.delta.ok_or(missing)?;
    if d.len() < 3 || k == 0 {
        return Err(ConstructError::Internal(InternalFault::ReplayMismatch));
    }
    if d.len() % 2 == 1 {
        build_odd(d, k, delta)
    } else {
        build_even(d, k, delta, p.alpha.zip(p.beta))
    }
}

/// Fan realization of `d`, where `d[0]` need not be the largest entry.
///
/// Requires `n >= 3`, `d2 >= ... >= dn >= 4`, `d1 >= 0`, an even sum,
/// `d1 <= sum_{i>=2} (di - 1)` and `D >= n - 2`.
pub fn construct_fan(d: &[i64]) -> Result<(Multigraph, ConstructionCertificate), ConstructError> {
    let alt = check_preconditions(d)?;
    let p = plan(d, alt)?;
    let g = if d.len() % 2 == 1 {
        build_odd(d, p.k, p.delta)?
    } else {
        build_even(d, p.k, p.delta, p.alpha.zip(p.beta))?
    };
    let cert = ConstructionCertificate {
        branch: p.branch,
        degrees: d.to_vec(),
        params: ConstructionParams {
            alt_sum: alt,
            k: Some(p.k),
            delta: Some(p.delta),
            alpha: p.alpha,
            beta: p.beta,
            dbar: p.dbar,
            dprime: None,
            dsuffix: None,
        },
        split: None,
    };
    Ok((g, cert))
}
