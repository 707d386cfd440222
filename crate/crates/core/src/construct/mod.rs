//! Explicit triangular realizations.
//!
//! Four constructions cover every realizable sequence:
//!
//! * [`construct_fan`]: `v1` is the hub of a fan whose rim pairs up the
//!   remaining vertices. Needs `D >= n - 2`.
//! * [`construct_cycle_square`]: the square of the `n`-cycle with adjusted
//!   consecutive multiplicities, plus a local patch when `n` is even and
//!   `D` is 2 or 4. Needs `D = 4` (odd `n`) or `D` in `{0, 2, 4}` (even `n`).
//! * [`construct_small_n`]: `n` in `{3, 4}`.
//! * the split used by [`realize`] for `6 <= D <= n - 3`: a fan on `v1` and
//!   the last `2k + 1` (odd `n`) or `2k + 2` (even `n`) vertices glued at
//!   `v1` to a cycle square on the rest, with `k = (D - 4) / 2`.
//!
//! Here `D = d1 - d2 + d3 - ...`. The fan and cycle-square constructions
//! do not require `d1` to be the largest entry; only `d2 >= ... >= dn >= 4`.
//!
//! Every construction returns a [`ConstructionCertificate`], and
//! [`replay`] rebuilds the identical graph from it.

mod cycle_square;
mod fan;
mod small_n;
mod split;

use alloc::boxed::Box;
use alloc::vec::Vec;
use core::fmt;

use crate::multigraph::{GraphError, Multigraph, MultigraphBuilder};
use crate::sequence::{
    alternating_sum_of, check_triangular_conditions, DegreeSequence, ValidationReport,
};

pub use cycle_square::construct_cycle_square;
pub use fan::construct_fan;
pub use small_n::construct_small_n;
pub use split::{split_sequences, SplitSequences};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum Branch {
    FanOdd,
    FanEvenK1,
    FanEvenKGt1,
    CycleSquareOdd,
    CycleSquareD0,
    CycleSquareD2,
    CycleSquareD4,
    SmallN3,
    SmallN4D0,
    SplitOdd,
    SplitEven,
}

impl Branch {
    pub const ALL: [Branch; 11] = [
        Branch::FanOdd,
        Branch::FanEvenK1,
        Branch::FanEvenKGt1,
        Branch::CycleSquareOdd,
        Branch::CycleSquareD0,
        Branch::CycleSquareD2,
        Branch::CycleSquareD4,
        Branch::SmallN3,
        Branch::SmallN4D0,
        Branch::SplitOdd,
        Branch::SplitEven,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Branch::FanOdd => "FanOdd",
            Branch::FanEvenK1 => "FanEvenK1",
            Branch::FanEvenKGt1 => "FanEvenKGt1",
            Branch::CycleSquareOdd => "CycleSquareOdd",
            Branch::CycleSquareD0 => "CycleSquareD0",
            Branch::CycleSquareD2 => "CycleSquareD2",
            Branch::CycleSquareD4 => "CycleSquareD4",
            Branch::SmallN3 => "SmallN3",
            Branch::SmallN4D0 => "SmallN4D0",
            Branch::SplitOdd => "SplitOdd",
            Branch::SplitEven => "SplitEven",
        }
    }

    pub fn is_fan(self) -> bool {
        matches!(
            self,
            Branch::FanOdd | Branch::FanEvenK1 | Branch::FanEvenKGt1 | Branch::SmallN3
        )
    }
}

impl fmt::Display for Branch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Parameters a construction chose.
///
/// Fan branches set `k`, `delta` and `dbar` (the block values `k` is located
/// in, outermost block first); `FanEvenK1` also sets `alpha` and `beta`.
/// Cycle-square branches set `dprime` (`di - 4` for every `i`) and `dsuffix`
/// (`D_i = d'_i - d'_{i+1} + ...` for `i = 2..=n`). Split branches set `k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct ConstructionParams {
    #[cfg_attr(feature = "serde", serde(rename = "D"))]
    pub alt_sum: i64,
    #[cfg_attr(
        feature = "serde",
        serde(default, skip_serializing_if = "Option::is_none")
    )]
    pub k: Option<usize>,
    #[cfg_attr(
        feature = "serde",
        serde(default, skip_serializing_if = "Option::is_none")
    )]
    pub delta: Option<i64>,
    #[cfg_attr(
        feature = "serde",
        serde(default, skip_serializing_if = "Option::is_none")
    )]
    pub alpha: Option<i64>,
    #[cfg_attr(
        feature = "serde",
        serde(default, skip_serializing_if = "Option::is_none")
    )]
    pub beta: Option<i64>,
    #[cfg_attr(
        feature = "serde",
        serde(default, skip_serializing_if = "Vec::is_empty")
    )]
    pub dbar: Vec<i64>,
    #[cfg_attr(
        feature = "serde",
        serde(default, skip_serializing_if = "Option::is_none")
    )]
    pub dprime: Option<Vec<i64>>,
    #[cfg_attr(
        feature = "serde",
        serde(default, rename = "Dsuffix", skip_serializing_if = "Option::is_none")
    )]
    pub dsuffix: Option<Vec<i64>>,
}

/// Which construction produced a graph, on which sequence, with which
/// parameters. `degrees` is the sequence in the construction's own vertex
/// order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct ConstructionCertificate {
    pub branch: Branch,
    pub degrees: Vec<i64>,
    pub params: ConstructionParams,
    #[cfg_attr(
        feature = "serde",
        serde(default, skip_serializing_if = "Option::is_none")
    )]
    pub split: Option<Box<SplitInfo>>,
}

/// The two halves of a split construction. The fan half lives on `v1` and
/// `v_tail_start..=v_n`; the cycle-square half on `v1..v_{tail_start-1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct SplitInfo {
    pub a_sequence: Vec<i64>,
    pub b_sequence: Vec<i64>,
    pub shared_vertex: usize,
    pub tail_start: usize,
    pub fan: ConstructionCertificate,
    pub cycle_square: ConstructionCertificate,
}

/// A precondition of one of the constructions that the input fails.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Precondition {
    TooFewVertices {
        min: usize,
        got: usize,
    },
    WrongVertexCount {
        allowed: &'static [usize],
        got: usize,
    },
    NegativeFirst,
    /// `d_i < d_{i+1}` at this 1-based `i` (position 1 exempt where allowed).
    NotDescending(usize),
    /// The 1-based position of an entry below 4.
    DegreeBelowFour(usize),
    OddSum,
    D1Bound,
    AlternatingSum {
        value: i64,
        expected: &'static str,
    },
}

impl fmt::Display for Precondition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Precondition::TooFewVertices { min, got } => {
                write!(f, "needs at least {min} vertices, got {got}")
            }
            Precondition::WrongVertexCount { allowed, got } => {
                write!(f, "vertex count must be one of {allowed:?}, got {got}")
            }
            Precondition::NegativeFirst => write!(f, "d1 is negative"),
            Precondition::NotDescending(i) => write!(f, "d{} < d{}", i, i + 1),
            Precondition::DegreeBelowFour(i) => write!(f, "d{i} is below 4"),
            Precondition::OddSum => write!(f, "degree sum is odd"),
            Precondition::D1Bound => write!(f, "d1 exceeds sum of (di - 1) over i >= 2"),
            Precondition::AlternatingSum { value, expected } => {
                write!(f, "alternating sum {value} is not {expected}")
            }
        }
    }
}

/// A constructed graph failed its own verification.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum InternalFault {
    NonPositiveMultiplicity {
        u: usize,
        v: usize,
        value: i64,
    },
    DegreeMismatch {
        vertex: usize,
        expected: i64,
        got: i64,
    },
    NotTriangular(usize, usize),
    NoBlockForOffset,
    ReplayMismatch,
    Graph(GraphError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ConstructError {
    PreconditionViolated(Precondition),
    /// The sequence fails a necessary condition; the report says which.
    NotRealizable(ValidationReport),
    /// A construction produced an invalid graph. This is a bug.
    Internal(InternalFault),
}

impl fmt::Display for ConstructError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConstructError::PreconditionViolated(p) => write!(f, "precondition violated: {p}"),
            ConstructError::NotRealizable(r) => {
                write!(f, "not realizable, failed: ")?;
                for (i, v) in r.violations().iter().enumerate() {
                    if i > 0 {
                        f.write_str(", ")?;
                    }
                    f.write_str(v)?;
                }
                Ok(())
            }
            ConstructError::Internal(fault) => write!(f, "internal construction fault: {fault:?}"),
        }
    }
}

impl core::error::Error for ConstructError {}

impl From<Precondition> for ConstructError {
    fn from(p: Precondition) -> Self {
        ConstructError::PreconditionViolated(p)
    }
}

impl From<GraphError> for ConstructError {
    fn from(e: GraphError) -> Self {
        ConstructError::Internal(InternalFault::Graph(e))
    }
}

/// Builder wrapper that refuses multiplicities below 1.
pub(crate) struct EdgeSink(MultigraphBuilder);

impl EdgeSink {
    pub(crate) fn new(n: usize) -> Self {
        EdgeSink(MultigraphBuilder::with_capacity(n, 2 * n + 2))
    }

    pub(crate) fn set(&mut self, u: usize, v: usize, m: i64) -> Result<(), ConstructError> {
        if m < 1 {
            return Err(ConstructError::Internal(
                InternalFault::NonPositiveMultiplicity { u, v, value: m },
            ));
        }
        self.0.add(u, v, m)?;
        Ok(())
    }

    /// Signed adjustment, used by the cycle-square patches.
    pub(crate) fn adjust(&mut self, u: usize, v: usize, delta: i64) -> Result<(), ConstructError> {
        self.0.add(u, v, delta)?;
        Ok(())
    }

    pub(crate) fn finish(self) -> Result<Multigraph, ConstructError> {
        Ok(self.0.build()?)
    }
}

/// Shared checks for the constructions that exempt position 1 from ordering:
/// `n >= min_n`, `d1 >= 0`, `d2 >= ... >= dn >= 4`.
pub(crate) fn check_relaxed(d: &[i64], min_n: usize) -> Result<(), Precondition> {
    let n = d.len();
    if n < min_n {
        return Err(Precondition::TooFewVertices { min: min_n, got: n });
    }
    if d[0] < 0 {
        return Err(Precondition::NegativeFirst);
    }
    if let Some(i) = (1..n - 1).find(|&i| d[i] < d[i + 1]) {
        return Err(Precondition::NotDescending(i + 1));
    }
    if d[n - 1] < 4 {
        return Err(Precondition::DegreeBelowFour(n));
    }
    Ok(())
}

/// Degree and triangularity check against `expected` (vertex order).
pub(crate) fn verify(g: &Multigraph, expected: &[i64]) -> Result<(), ConstructError> {
    let got = g.degree_sequence();
    if got.len() != expected.len() {
        return Err(ConstructError::Internal(InternalFault::DegreeMismatch {
            vertex: got.len().min(expected.len()) + 1,
            expected: 0,
            got: 0,
        }));
    }
    if let Some(i) = (0..got.len()).find(|&i| got[i] != expected[i]) {
        return Err(ConstructError::Internal(InternalFault::DegreeMismatch {
            vertex: i + 1,
            expected: expected[i],
            got: got[i],
        }));
    }
    if let Some((u, v)) = g.check_triangular().uncovered_edge {
        return Err(ConstructError::Internal(InternalFault::NotTriangular(u, v)));
    }
    Ok(())
}

/// A verified realization of a [`DegreeSequence`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Realization {
    /// The graph with vertices in the caller's original order.
    pub graph: Multigraph,
    /// Certificate in sorted (descending) vertex order.
    pub certificate: ConstructionCertificate,
    pub sequence: DegreeSequence,
}

impl Realization {
    /// The graph with vertex `i` carrying the `i`-th largest degree.
    pub fn sorted_graph(&self) -> Multigraph {
        let perm = self.sequence.perm();
        let mut inverse = alloc::vec![0usize; perm.len()];
        for (sorted, &orig) in perm.iter().enumerate() {
            inverse[orig - 1] = sorted + 1;
        }
        self.graph
            .relabel(&inverse, perm.len())
            .expect("inverse of a permutation is a permutation")
    }
}

/// Builds a triangular multigraph with the given degree sequence.
///
/// Dispatch: `n` in `{3, 4}` goes to [`construct_small_n`]; otherwise
/// `D >= n - 2` uses the fan, `D <= 4` the cycle square, and anything in
/// between the split. The result is checked for degrees, triangularity and
/// certificate replay before it is returned.
pub fn realize(seq: &DegreeSequence) -> Result<Realization, ConstructError> {
    let report = check_triangular_conditions(seq);
    if !report.triangular_ok() {
        return Err(ConstructError::NotRealizable(report));
    }
    let d = seq.degrees();
    let (graph, certificate) = realize_sorted(seq)?;
    verify(&graph, d)?;
    if replay(&certificate)? != graph {
        return Err(ConstructError::Internal(InternalFault::ReplayMismatch));
    }
    debug_assert!(graph.edge_count() <= 2 * d.len() + 1);
    let graph = graph.relabel(seq.perm(), d.len())?;
    Ok(Realization {
        graph,
        certificate,
        sequence: seq.clone(),
    })
}

fn realize_sorted(
    seq: &DegreeSequence,
) -> Result<(Multigraph, ConstructionCertificate), ConstructError> {
    let d = seq.degrees();
    let n = d.len() as i64;
    let alt = alternating_sum_of(d);
    if n <= 4 {
        construct_small_n(seq)
    } else if alt >= n - 2 {
        construct_fan(d)
    } else if alt <= 4 {
        construct_cycle_square(d)
    } else {
        split::construct_split(seq)
    }
}

/// Rebuilds the graph a certificate describes, without re-deriving any
/// parameter.
pub fn replay(cert: &ConstructionCertificate) -> Result<Multigraph, ConstructError> {
    let d = &cert.degrees;
    match cert.branch {
        Branch::FanOdd | Branch::FanEvenK1 | Branch::FanEvenKGt1 | Branch::SmallN3 => {
            fan::replay(d, &cert.params)
        }
        Branch::CycleSquareOdd
        | Branch::CycleSquareD0
        | Branch::CycleSquareD2
        | Branch::CycleSquareD4 => cycle_square::build(d, cert.branch),
        Branch::SmallN4D0 => small_n::build_n4_d0(d),
        Branch::SplitOdd | Branch::SplitEven => {
            let info = cert
                .split
                .as_deref()
                .ok_or(ConstructError::Internal(InternalFault::ReplayMismatch))?;
            split::assemble(
                d.len(),
                info.tail_start,
                &replay(&info.fan)?,
                &replay(&info.cycle_square)?,
            )
        }
    }
}
