//! Exhaustive search for realizations on a handful of vertices.
//!
//! The search assigns a multiplicity to every vertex pair in lexicographic
//! order, bounded by the smaller residual degree of its endpoints (no
//! realization can exceed `min(du, dv)` on a pair, so exhaustion is
//! genuine). Branches are cut when some vertex can no longer reach its
//! degree through its unassigned pairs, and, in triangular mode, as soon as
//! a fully decided edge has no common neighbor.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::multigraph::Multigraph;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleLimits {
    pub max_n: usize,
    pub max_degree_sum: i64,
}

impl OracleLimits {
    /// Largest `n` any oracle entry point accepts.
    pub const HARD_MAX_N: usize = 8;
}

impl Default for OracleLimits {
    fn default() -> Self {
        OracleLimits {
            max_n: 6,
            max_degree_sum: 40,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OracleError {
    LimitExceeded {
        what: &'static str,
        value: i64,
        limit: i64,
    },
    /// 1-based position of a non-positive (triangular) or negative (simple)
    /// degree.
    InvalidDegree(usize),
    Cancelled,
    /// A witness failed re-verification. This is a bug.
    SelfCheckFailed,
}

impl fmt::Display for OracleError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OracleError::LimitExceeded { what, value, limit } => {
                write!(f, "{what} = {value} exceeds oracle limit {limit}")
            }
            OracleError::InvalidDegree(i) => write!(f, "degree at position {i} is not allowed"),
            OracleError::Cancelled => write!(f, "search cancelled"),
            OracleError::SelfCheckFailed => write!(f, "oracle witness failed verification"),
        }
    }
}

impl core::error::Error for OracleError {}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleResult {
    pub exists: bool,
    /// Present iff `exists`; vertex `i` has degree `degrees[i - 1]`.
    pub witness: Option<Multigraph>,
    pub nodes_explored: u64,
    /// Largest per-pair multiplicity the search was allowed to try.
    pub bound_used: i64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CensusRow {
    pub n: usize,
    pub exists: bool,
    pub nodes_explored: u64,
}

struct Search<'a> {
    n: usize,
    pairs: Vec<(usize, usize)>,
    residual: Vec<i64>,
    mult: Vec<i64>,
    cap: i64,
    triangular: bool,
    nodes: u64,
    cancel: &'a mut dyn FnMut() -> bool,
}

impl Search<'_> {
    fn m(&self, u: usize, v: usize) -> i64 {
        let (a, b) = if u < v { (u, v) } else { (v, u) };
        // index of (a, b) in lexicographic order of pairs over 0..n
        let idx = a * (2 * self.n - a - 1) / 2 + (b - a - 1);
        self.mult[idx]
    }

    /// Every vertex must still be able to reach its degree through the
    /// pairs from `next` on.
    fn feasible(&self, next: usize) -> bool {
        let mut reach = vec![0i64; self.n];
        for &(u, v) in &self.pairs[next..] {
            let c = self.residual[u].min(self.residual[v]).min(self.cap);
            reach[u] += c;
            reach[v] += c;
        }
        (0..self.n).all(|x| self.residual[x] <= reach[x])
    }

    /// Edges `(u, row)` are final once `row`'s pairs are all assigned.
    fn row_covered(&self, row: usize) -> bool {
        (0..row).all(|u| {
            self.m(u, row) == 0
                || (0..self.n).any(|w| w != u && w != row && self.m(u, w) > 0 && self.m(row, w) > 0)
        })
    }

    fn dfs(&mut self, p: usize) -> Result<bool, OracleError> {
        self.nodes += 1;
        if (self.cancel)() {
            return Err(OracleError::Cancelled);
        }
        if self.triangular && p > 0 {
            let prev_row = self.pairs[p - 1].0;
            if p == self.pairs.len() || self.pairs[p].0 != prev_row {
                // the row's own vertex is now decided, and so is the last one
                // when the final row closes
                if !self.row_covered(prev_row) {
                    return Ok(false);
                }
                if p == self.pairs.len() && !self.row_covered(self.n - 1) {
                    return Ok(false);
                }
            }
        }
        if p == self.pairs.len() {
            return Ok(self.residual.iter().all(|&r| r == 0));
        }
        if !self.feasible(p) {
            return Ok(false);
        }
        let (u, v) = self.pairs[p];
        let hi = self.residual[u].min(self.residual[v]).min(self.cap);
        for m in 0..=hi {
            self.mult[p] = m;
            self.residual[u] -= m;
            self.residual[v] -= m;
            let found = self.dfs(p + 1)?;
            self.residual[u] += m;
            self.residual[v] += m;
            if found {
                return Ok(true);
            }
        }
        self.mult[p] = 0;
        Ok(false)
    }
}

fn search(
    degrees: &[i64],
    triangular: bool,
    cancel: &mut dyn FnMut() -> bool,
) -> Result<OracleResult, OracleError> {
    let n = degrees.len();
    let mut sorted = degrees.to_vec();
    sorted.sort_unstable_by(|a, b| b.cmp(a));
    let bound = if triangular {
        sorted.get(1).copied().unwrap_or(0)
    } else {
        1
    };
    let mut pairs = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for u in 0..n {
        for v in u + 1..n {
            pairs.push((u, v));
        }
    }
    let mut s = Search {
        n,
        mult: vec![0; pairs.len()],
        pairs,
        residual: degrees.to_vec(),
        cap: bound,
        triangular,
        nodes: 0,
        cancel,
    };
    let exists = degrees.iter().sum::<i64>() % 2 == 0 && s.dfs(0)?;
    let witness = if exists {
        let g = Multigraph::from_edges(
            n,
            s.pairs
                .iter()
                .zip(&s.mult)
                .map(|(&(u, v), &m)| (u + 1, v + 1, m as u64)),
        )
        .map_err(|_| OracleError::SelfCheckFailed)?;
        if g.degree_sequence() != degrees || (triangular && !g.check_triangular().is_triangular) {
            return Err(OracleError::SelfCheckFailed);
        }
        Some(g)
    } else {
        None
    };
    Ok(OracleResult {
        exists,
        witness,
        nodes_explored: s.nodes,
        bound_used: bound,
    })
}

/// Decides by exhaustive search whether a triangular multigraph has
/// exactly these degrees (in vertex order), within `limits`. `cancel` is
/// polled once per search node.
pub fn exists_triangular_realization_with(
    degrees: &[i64],
    limits: &OracleLimits,
    cancel: &mut dyn FnMut() -> bool,
) -> Result<OracleResult, OracleError> {
    let n = degrees.len();
    let max_n = limits.max_n.min(OracleLimits::HARD_MAX_N);
    if n > max_n {
        return Err(OracleError::LimitExceeded {
            what: "n",
            value: n as i64,
            limit: max_n as i64,
        });
    }
    if let Some(i) = degrees.iter().position(|&d| d < 1) {
        return Err(OracleError::InvalidDegree(i + 1));
    }
    let sum: i64 = degrees.iter().sum();
    if sum > limits.max_degree_sum {
        return Err(OracleError::LimitExceeded {
            what: "degree sum",
            value: sum,
            limit: limits.max_degree_sum,
        });
    }
    search(degrees, true, cancel)
}

/// [`exists_triangular_realization_with`] under default limits (`n <= 6`,
/// degree sum `<= 40`), never cancelled.
pub fn exists_triangular_realization(degrees: &[i64]) -> Result<OracleResult, OracleError> {
    exists_triangular_realization_with(degrees, &OracleLimits::default(), &mut || false)
}

/// Decides by exhaustive search over 0/1 multiplicities whether a simple
/// graph has exactly these degrees. Accepts `n <= 8`.
pub fn exists_simple_realization(degrees: &[i64]) -> Result<OracleResult, OracleError> {
    exists_simple_realization_with(degrees, &mut || false)
}

pub fn exists_simple_realization_with(
    degrees: &[i64],
    cancel: &mut dyn FnMut() -> bool,
) -> Result<OracleResult, OracleError> {
    if degrees.len() > OracleLimits::HARD_MAX_N {
        return Err(OracleError::LimitExceeded {
            what: "n",
            value: degrees.len() as i64,
            limit: OracleLimits::HARD_MAX_N as i64,
        });
    }
    if let Some(i) = degrees.iter().position(|&d| d < 0) {
        return Err(OracleError::InvalidDegree(i + 1));
    }
    search(degrees, false, cancel)
}

/// For each `3 <= n <= n_max`, whether the all-3 sequence of length `n`
/// has a triangular realization. Odd `n` is settled by parity without a
/// search. Accepts `n_max <= 8`.
pub fn proposition_census(n_max: usize) -> Result<Vec<CensusRow>, OracleError> {
    proposition_census_with(n_max, &mut || false)
}

pub fn proposition_census_with(
    n_max: usize,
    cancel: &mut dyn FnMut() -> bool,
) -> Result<Vec<CensusRow>, OracleError> {
    if n_max > OracleLimits::HARD_MAX_N {
        return Err(OracleError::LimitExceeded {
            what: "n",
            value: n_max as i64,
            limit: OracleLimits::HARD_MAX_N as i64,
        });
    }
    let limits = OracleLimits {
        max_n: OracleLimits::HARD_MAX_N,
        max_degree_sum: 3 * OracleLimits::HARD_MAX_N as i64,
    };
    let mut rows = Vec::new();
    for n in 3..=n_max {
        if (3 * n) % 2 == 1 {
            rows.push(CensusRow {
                n,
                exists: false,
                nodes_explored: 0,
            });
            continue;
        }
        let r = exists_triangular_realization_with(&vec![3; n], &limits, cancel)?;
        rows.push(CensusRow {
            n,
            exists: r.exists,
            nodes_explored: r.nodes_explored,
        });
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k4_is_the_witness_for_four_threes() {
        let r = exists_triangular_realization(&[3, 3, 3, 3]).unwrap();
        assert!(r.exists);
        let w = r.witness.unwrap();
        assert_eq!(w.edge_count(), 6);
        assert!(w.edges().iter().all(|e| e.2 == 1));
    }

    #[test]
    fn six_threes_have_no_triangular_realization() {
        let r = exists_triangular_realization(&[3, 3, 3, 3, 3, 3]).unwrap();
        assert!(!r.exists);
        assert!(r.witness.is_none());
        assert!(r.nodes_explored > 1);
    }

    #[test]
    fn doubled_triangle() {
        let r = exists_triangular_realization(&[4, 4, 4]).unwrap();
        assert!(r.exists);
        assert_eq!(
            r.witness.unwrap().edges(),
            &[(1, 2, 2), (1, 3, 2), (2, 3, 2)]
        );
        assert_eq!(r.bound_used, 4);
    }

    #[test]
    fn necessary_conditions_rule_out() {
        // d1 bound fails: 10 > 9
        assert!(
            !exists_triangular_realization(&[10, 4, 4, 4])
                .unwrap()
                .exists
        );
        // odd sum
        let r = exists_triangular_realization(&[5, 4, 4]).unwrap();
        assert!(!r.exists);
        assert_eq!(r.nodes_explored, 0);
        // a realizable multigraph exists but no triangular one: a single
        // edge of multiplicity 5
        assert!(!exists_triangular_realization(&[5, 5]).unwrap().exists);
    }

    #[test]
    fn simple_oracle_examples() {
        assert!(!exists_simple_realization(&[3, 3, 1, 1]).unwrap().exists);
        assert!(exists_simple_realization(&[2, 2, 2]).unwrap().exists);
        let r = exists_simple_realization(&[3, 3, 3, 3]).unwrap();
        assert!(r.exists);
        assert_eq!(r.bound_used, 1);
        assert!(exists_simple_realization(&[0, 1, 1]).unwrap().exists);
    }

    #[test]
    fn limits_are_enforced() {
        assert!(matches!(
            exists_triangular_realization(&[4; 10]),
            Err(OracleError::LimitExceeded { what: "n", .. })
        ));
        assert!(matches!(
            exists_triangular_realization(&[20, 20, 4]),
            Err(OracleError::LimitExceeded {
                what: "degree sum",
                ..
            })
        ));
        assert_eq!(
            exists_triangular_realization(&[4, 0, 4]),
            Err(OracleError::InvalidDegree(2))
        );
        assert!(exists_simple_realization(&[1; 9]).is_err());
        assert!(proposition_census(9).is_err());
    }

    #[test]
    fn cancellation_is_cooperative() {
        let mut polls = 0;
        let res = exists_triangular_realization_with(
            &[3, 3, 3, 3, 3, 3],
            &OracleLimits::default(),
            &mut || {
                polls += 1;
                polls > 5
            },
        );
        assert_eq!(res, Err(OracleError::Cancelled));
    }

    #[test]
    fn census_small() {
        let rows = proposition_census(6).unwrap();
        let pattern: Vec<(usize, bool)> = rows.iter().map(|r| (r.n, r.exists)).collect();
        assert_eq!(pattern, vec![(3, false), (4, true), (5, false), (6, false)]);
    }

    #[test]
    fn search_is_deterministic() {
        let a = exists_triangular_realization(&[5, 5, 4, 4, 4]).unwrap();
        let b = exists_triangular_realization(&[5, 5, 4, 4, 4]).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn pair_index_matches_enumeration() {
        let mut cancel = || false;
        let n = 6;
        let mut pairs = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                pairs.push((u, v));
            }
        }
        let s = Search {
            n,
            mult: (0..pairs.len() as i64).collect(),
            pairs: pairs.clone(),
            residual: vec![0; n],
            cap: 0,
            triangular: true,
            nodes: 0,
            cancel: &mut cancel,
        };
        for (i, &(u, v)) in pairs.iter().enumerate() {
            assert_eq!(s.m(u, v), i as i64);
            assert_eq!(s.m(v, u), i as i64);
        }
    }
}
