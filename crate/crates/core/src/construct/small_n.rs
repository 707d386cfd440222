//! Sequences on three or four vertices.

use super::{
    construct_fan, Branch, ConstructError, ConstructionCertificate, ConstructionParams, EdgeSink,
    Precondition,
};
use crate::multigraph::Multigraph;
use crate::sequence::{alternating_sum, check_triangular_conditions, DegreeSequence};

/// `d1 = d2`, `d3 = d4`: a doubled `v1v2` and `v3v4` joined by the four
/// unit cross edges.
pub(super) fn build_n4_d0(d: &[i64]) -> Result<Multigraph, ConstructError> {
    if d.len() != 4 {
        return Err(Precondition::WrongVertexCount {
            allowed: &[4],
            got: d.len(),
        }
        .into());
    }
    let mut g = EdgeSink::new(4);
    g.set(1, 2, d[0] - 2)?;
    g.set(3, 4, d[2] - 2)?;
    for (u, v) in [(1, 3), (1, 4), (2, 3), (2, 4)] {
        g.set(u, v, 1)?;
    }
    g.finish()
}

/// Realization for `n` in `{3, 4}`.
///
/// `n = 3` always has `D >= 4` and uses the fan (reported as `SmallN3`);
/// `n = 4` uses the fan when `D >= 2`, and the `SmallN4D0` graph otherwise.
pub fn construct_small_n(
    seq: &DegreeSequence,
) -> Result<(Multigraph, ConstructionCertificate), ConstructError> {
    let n = seq.len();
    if n != 3 && n != 4 {
        return Err(Precondition::WrongVertexCount {
            allowed: &[3, 4],
            got: n,
        }
        .into());
    }
    let report = check_triangular_conditions(seq);
    if !report.triangular_ok() {
        return Err(ConstructError::NotRealizable(report));
    }
    let d = seq.degrees();
    let alt = alternating_sum(seq);
    if n == 3 {
        let (g, mut cert) = construct_fan(d)?;
        cert.branch = Branch::SmallN3;
        return Ok((g, cert));
    }
    if alt >= 2 {
        return construct_fan(d);
    }
    let g = build_n4_d0(d)?;
    let cert = ConstructionCertificate {
        branch: Branch::SmallN4D0,
        degrees: d.to_vec(),
        params: ConstructionParams {
            alt_sum: alt,
            ..ConstructionParams::default()
        },
        split: None,
    };
    Ok((g, cert))
}
