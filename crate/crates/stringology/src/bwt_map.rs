//! Correspondence between BWT run boundaries and maximal pairs.
//!
//! Two adjacent rows of the sorted rotation matrix of `S$` that end a run
//! (their last symbols differ) start with suffixes whose common prefix
//! length `L` is exactly the longest common extension of the two suffix
//! start positions. When `L >= 1` the triple `(n, m, L)` formed by the two
//! start positions is a maximal pair: the differing last symbols are the
//! differing left contexts, and the symbols right after the common prefix
//! differ because `L` is the full extension. The checks here verify the
//! two structural facts this mapping rests on: it is injective on the
//! `L >= 1` boundaries, and the periodic extensions of the induced pairs
//! are one-sided small for every period of the body.

use std::collections::HashMap;

use serde::Serialize;

use crate::lce::LceIndex;
use crate::periodicity::{border_array, maximal_periodic_extension};
use crate::repeats::MaximalPair;
use crate::text::Text;

/// One run boundary of the BWT of `S$` and the maximal pair it maps to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct RunBoundaryPair {
    /// Row index `i >= 2` with `BWT[i-1] != BWT[i]` (rows are 1-based).
    pub boundary_index: usize,
    /// 1-based suffix start position of row `i-1`.
    pub prev_position: usize,
    /// 1-based suffix start position of row `i`.
    pub next_position: usize,
    /// Common prefix length of the two rows.
    pub lcp: usize,
    /// The induced maximal pair `(prev_position, next_position, lcp)`;
    /// absent when the rows share no prefix.
    pub pair: Option<MaximalPair>,
}

/// All run boundaries of the BWT of `S$`, in row order.
pub fn run_boundary_pairs(t: &Text, index: &LceIndex) -> Vec<RunBoundaryPair> {
    let sa = index.suffix_order();
    let lcp = index.lcp_array();
    let mut out = Vec::new();
    for i in 1..sa.len() {
        if t.sym(sa[i - 1]) == t.sym(sa[i]) {
            continue;
        }
        let (n, m, l) = (sa[i - 1] + 1, sa[i] + 1, lcp[i]);
        out.push(RunBoundaryPair {
            boundary_index: i + 1,
            prev_position: n,
            next_position: m,
            lcp: l,
            pair: (l >= 1).then_some(MaximalPair { n, m, l }),
        });
    }
    out
}

/// Outcome of the injectivity check over one text's run boundaries.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct InjectivityReport {
    pub boundary_count: usize,
    /// Boundaries carrying a pair (`L >= 1`).
    pub paired_count: usize,
    pub zero_lcp_count: usize,
    /// Bound on `zero_lcp_count`: the alphabet size of `S`.
    pub zero_lcp_cap: usize,
    /// No two boundaries map to the same pair (up to orientation).
    pub injective: bool,
    pub zero_lcp_within_cap: bool,
    /// Row indices of the first colliding boundary pair, if any.
    pub collision: Option<(usize, usize)>,
}

impl InjectivityReport {
    pub fn ok(&self) -> bool {
        self.injective && self.zero_lcp_within_cap
    }
}

pub fn check_injectivity(t: &Text, boundaries: &[RunBoundaryPair]) -> InjectivityReport {
    let mut seen: HashMap<MaximalPair, usize> = HashMap::new();
    let mut collision = None;
    let mut paired_count = 0usize;
    for b in boundaries {
        if let Some(p) = b.pair {
            paired_count += 1;
            if let Some(&prev) = seen.get(&p.canonical()) {
                collision.get_or_insert((prev, b.boundary_index));
            } else {
                seen.insert(p.canonical(), b.boundary_index);
            }
        }
    }
    let zero_lcp_count = boundaries.len() - paired_count;
    let zero_lcp_cap = t.alphabet().len();
    InjectivityReport {
        boundary_count: boundaries.len(),
        paired_count,
        zero_lcp_count,
        zero_lcp_cap,
        injective: collision.is_none(),
        zero_lcp_within_cap: zero_lcp_count <= zero_lcp_cap,
        collision,
    }
}

/// A counterexample to the one-sided smallness of periodic extensions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct NonextendabilityViolation {
    pub boundary_index: usize,
    pub pair: MaximalPair,
    /// The offending period of the body.
    pub period: usize,
    /// Symbols added around the first occurrence by its extension.
    pub added_n: usize,
    /// Symbols added around the second occurrence.
    pub added_m: usize,
}

/// One period of an induced pair's body together with the extension sizes
/// around the two occurrences.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PeriodCertificate {
    pub period: usize,
    pub added_n: usize,
    pub added_m: usize,
    /// At least one side added at most `period` symbols.
    pub ok: bool,
}

/// The certificates for every period of the pair's body, smallest period
/// first. The periods of the body are `l - b` over its border chain.
pub fn period_certificates(t: &Text, pair: MaximalPair) -> Vec<PeriodCertificate> {
    let (n, m, l) = (pair.n, pair.m, pair.l);
    let border = border_array(t.slice(n, n + l - 1));
    let mut out = Vec::new();
    let mut bord = border[l];
    loop {
        let period = l - bord;
        let en =
            maximal_periodic_extension(t, n, n + l - 1, Some(period)).expect("body periodic");
        let em =
            maximal_periodic_extension(t, m, m + l - 1, Some(period)).expect("body periodic");
        let added_n = en.added_around(n, n + l - 1);
        let added_m = em.added_around(m, m + l - 1);
        out.push(PeriodCertificate {
            period,
            added_n,
            added_m,
            ok: added_n <= period || added_m <= period,
        });
        if bord == 0 {
            break;
        }
        bord = border[bord];
    }
    out
}

/// Checks, for every induced pair and every period `p` of its body, that
/// the maximal `p`-periodic extension of at least one occurrence adds at
/// most `p` symbols around it. Returns all counterexamples (expected
/// none).
pub fn check_nonextendability(
    t: &Text,
    boundaries: &[RunBoundaryPair],
) -> Vec<NonextendabilityViolation> {
    let mut out = Vec::new();
    for b in boundaries {
        let Some(pair) = b.pair else { continue };
        for c in period_certificates(t, pair) {
            if !c.ok {
                out.push(NonextendabilityViolation {
                    boundary_index: b.boundary_index,
                    pair,
                    period: c.period,
                    added_n: c.added_n,
                    added_m: c.added_m,
                });
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bwt;
    use crate::oracle;
    use crate::repeats::{enumerate_maximal_pairs, ENUMERATION_CAP};

    fn t(s: &str) -> Text {
        Text::new(s.as_bytes().to_vec()).unwrap()
    }

    fn boundaries(s: &str) -> (Text, Vec<RunBoundaryPair>) {
        let x = t(s);
        let index = LceIndex::new(&x);
        let bs = run_boundary_pairs(&x, &index);
        (x, bs)
    }

    #[test]
    fn aaa_has_one_boundary_with_pair() {
        let (_, bs) = boundaries("aaa");
        assert_eq!(bs.len(), 1);
        assert_eq!(bs[0].boundary_index, 4);
        assert_eq!(bs[0].pair, Some(MaximalPair { n: 2, m: 1, l: 2 }));
    }

    #[test]
    fn aa_boundary_pair() {
        let (_, bs) = boundaries("aa");
        assert_eq!(bs.len(), 1);
        assert_eq!(bs[0].pair, Some(MaximalPair { n: 2, m: 1, l: 1 }));
    }

    #[test]
    fn ab_boundaries_are_all_zero_lcp() {
        let (x, bs) = boundaries("ab");
        assert_eq!(bs.len(), 2);
        assert!(bs.iter().all(|b| b.pair.is_none()));
        let report = check_injectivity(&x, &bs);
        assert_eq!(report.zero_lcp_count, 2);
        assert_eq!(report.zero_lcp_cap, 2);
        assert!(report.ok());
    }

    #[test]
    fn boundary_count_is_runs_minus_one() {
        oracle::for_each_string(3, 8, |s| {
            let x = Text::new(s.to_vec()).unwrap();
            let index = LceIndex::new(&x);
            let bs = run_boundary_pairs(&x, &index);
            assert_eq!(bs.len() + 1, bwt::bwt(&x).r);
        });
    }

    #[test]
    fn induced_pairs_are_maximal_pairs() {
        oracle::for_each_string(3, 8, |s| {
            let x = Text::new(s.to_vec()).unwrap();
            let index = LceIndex::new(&x);
            let all = enumerate_maximal_pairs(&x, ENUMERATION_CAP).unwrap();
            for b in run_boundary_pairs(&x, &index) {
                if let Some(p) = b.pair {
                    assert!(all.contains(&p.canonical()), "{:?} {p:?}", s);
                }
            }
        });
    }

    #[test]
    fn injectivity_and_zero_lcp_cap_exhaustive() {
        oracle::for_each_string(3, 9, |s| {
            let x = Text::new(s.to_vec()).unwrap();
            let index = LceIndex::new(&x);
            let bs = run_boundary_pairs(&x, &index);
            let report = check_injectivity(&x, &bs);
            assert!(report.ok(), "{:?} {report:?}", s);
        });
    }

    #[test]
    fn nonextendability_exhaustive() {
        oracle::for_each_string(3, 9, |s| {
            let x = Text::new(s.to_vec()).unwrap();
            let index = LceIndex::new(&x);
            let bs = run_boundary_pairs(&x, &index);
            let violations = check_nonextendability(&x, &bs);
            assert!(violations.is_empty(), "{:?} {violations:?}", s);
        });
    }
}
