//! Classification of maximal pairs relative to index pairs `(i, j)` —
//! by default the LZ77 factor starts — and the machinery around padded
//! maximal periodic extensions of fourth powers.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::lce::LceIndex;
use crate::lz77::Lz77Parse;
use crate::periodicity::{
    exponent, fourth_power_runs, maximal_periodic_extension, min_period, PaddedExtension,
};
use crate::repeats::{copy_classes, for_each_maximal_pair, MaximalPair};
use crate::text::Text;
use crate::Exponent;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Label {
    /// The longer of the two parts around the split index has exponent < q.
    Lemma3Eligible,
    /// The longer part has exponent >= 3 with minimal period `delta` and
    /// the body is not `delta`-periodic.
    Thm5Eligible,
    /// The body has exponent < 6.
    NotSixthPower,
    /// The body has exponent >= 4.
    FourthPowerBoth,
    /// Fourth power whose maximal periodic extension adds at most one
    /// period length of symbols around at least one occurrence.
    NonextendableOneSide,
    /// Both occurrence intervals contain an LZ77 factor start.
    BoundaryCrossing,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct Labels {
    pub lemma3_eligible: bool,
    pub thm5_eligible: bool,
    pub not_sixth_power: bool,
    pub fourth_power_both: bool,
    pub nonextendable_one_side: bool,
    pub boundary_crossing: bool,
}

impl Labels {
    pub fn has(&self, label: Label) -> bool {
        match label {
            Label::Lemma3Eligible => self.lemma3_eligible,
            Label::Thm5Eligible => self.thm5_eligible,
            Label::NotSixthPower => self.not_sixth_power,
            Label::FourthPowerBoth => self.fourth_power_both,
            Label::NonextendableOneSide => self.nonextendable_one_side,
            Label::BoundaryCrossing => self.boundary_crossing,
        }
    }
}

/// The classification of one maximal pair at a split index `i` in
/// `[n, n+l]` and a witness index `j` in `[m, m+l]`.
#[derive(Debug, Clone, Serialize)]
pub struct PairClassification {
    pub pair: MaximalPair,
    pub split_index: usize,
    pub witness_index: usize,
    /// `|S[n..i-1]|`
    pub left_part_len: usize,
    /// `|S[i..n+l-1]|`
    pub right_part_len: usize,
    /// Exponent of the longer part (left wins ties); `None` when empty.
    pub longer_part_exponent: Option<Exponent>,
    pub body_exponent: Exponent,
    pub labels: Labels,
}

/// Added symbols of the maximal `delta`-periodic extensions around the
/// two occurrences, `(left + right)` per occurrence.
fn extension_added(t: &Text, pair: MaximalPair, delta: usize) -> (usize, usize) {
    let (n, m, l) = (pair.n, pair.m, pair.l);
    let en = maximal_periodic_extension(t, n, n + l - 1, Some(delta)).expect("body periodic");
    let em = maximal_periodic_extension(t, m, m + l - 1, Some(delta)).expect("body periodic");
    (en.added_around(n, n + l - 1), em.added_around(m, m + l - 1))
}

pub fn classify(
    t: &Text,
    pair: MaximalPair,
    i: usize,
    j: usize,
    q: u32,
    parse: &Lz77Parse,
) -> Result<PairClassification> {
    let (n, m, l) = (pair.n, pair.m, pair.l);
    if i < n || i > n + l {
        return Err(Error::Classification(format!(
            "split index {i} outside [{n}, {}]",
            n + l
        )));
    }
    if j < m || j > m + l {
        return Err(Error::Classification(format!(
            "witness index {j} outside [{m}, {}]",
            m + l
        )));
    }
    let q = q as u64;
    let left_len = i - n;
    let right_len = n + l - i;
    // The longer part; ties route to the left part.
    let longer = if left_len >= right_len {
        (n, left_len)
    } else {
        (i, right_len)
    };
    let longer_slice =
        (longer.1 > 0).then(|| t.slice(longer.0, longer.0 + longer.1 - 1));
    let longer_part_exponent = longer_slice.map(exponent);

    let lemma3_eligible = match longer_part_exponent {
        None => true, // the empty part is never a q-th power
        Some(e) => e < Exponent::from(q),
    };

    let thm5_eligible = match longer_slice {
        Some(w) => {
            let e = exponent(w);
            if e >= Exponent::from(3) {
                let delta = min_period(w);
                // body not delta-periodic
                !(n..=n + l - 1 - delta).all(|k| t.sym(k) == t.sym(k + delta))
            } else {
                false
            }
        }
        None => false,
    };

    let body = t.slice(n, n + l - 1);
    let body_exponent = exponent(body);
    let not_sixth_power = body_exponent < Exponent::from(6);
    let fourth_power_both = body_exponent >= Exponent::from(4);

    let nonextendable_one_side = fourth_power_both && {
        let delta = min_period(body);
        let (an, am) = extension_added(t, pair, delta);
        an <= delta || am <= delta
    };

    let boundary_crossing = parse.has_start_in(n, n + l) && parse.has_start_in(m, m + l);

    Ok(PairClassification {
        pair,
        split_index: i,
        witness_index: j,
        left_part_len: left_len,
        right_part_len: right_len,
        longer_part_exponent,
        body_exponent,
        labels: Labels {
            lemma3_eligible,
            thm5_eligible,
            not_sixth_power,
            fourth_power_both,
            nonextendable_one_side,
            boundary_crossing,
        },
    })
}

/// Strict variant of the non-extendability reading: at most one period
/// length added on the wider of the two sides, instead of in total.
pub fn nonextendable_one_side_strict(t: &Text, pair: MaximalPair) -> bool {
    let body = t.slice(pair.n, pair.n + pair.l - 1);
    if exponent(body) < Exponent::from(4) {
        return false;
    }
    let delta = min_period(body);
    let (n, m, l) = (pair.n, pair.m, pair.l);
    let en = maximal_periodic_extension(t, n, n + l - 1, Some(delta)).expect("body periodic");
    let em = maximal_periodic_extension(t, m, m + l - 1, Some(delta)).expect("body periodic");
    let wide_n = (n - en.core.0).max(en.core.1 - (n + l - 1));
    let wide_m = (m - em.core.0).max(em.core.1 - (m + l - 1));
    wide_n <= delta || wide_m <= delta
}

/// Extra predicate used by the factor-boundary refinement: given that the
/// split index is the factor start `s_i`, the next start `s_{i+1}` must
/// not also lie in `[n, n+l]`.
pub fn next_start_outside(parse: &Lz77Parse, split_start: usize, pair: MaximalPair) -> bool {
    let starts = parse.factor_starts();
    match starts.iter().position(|&s| s == split_start) {
        Some(idx) => match starts.get(idx + 1) {
            Some(&next) => !(pair.n <= next && next <= pair.n + pair.l),
            None => true,
        },
        None => true,
    }
}

/// Number of copy classes of `pairs` having at least one member (in either
/// orientation) classifiable at `(i, j)` and carrying `label`.
pub fn count_per_index_pair(
    t: &Text,
    pairs: &[MaximalPair],
    i: usize,
    j: usize,
    label: Label,
    q: u32,
    parse: &Lz77Parse,
) -> usize {
    let classes = copy_classes(t, pairs);
    classes
        .iter()
        .filter(|group| {
            group.iter().any(|&idx| {
                let p = pairs[idx];
                [p, MaximalPair { n: p.m, m: p.n, l: p.l }].iter().any(|&o| {
                    if i < o.n || i > o.n + o.l || j < o.m || j > o.m + o.l {
                        return false;
                    }
                    classify(t, o, i, j, q, parse)
                        .map(|c| c.labels.has(label))
                        .unwrap_or(false)
                })
            })
        })
        .count()
}

/// Substantially different padded maximal periodic extensions of fourth
/// powers whose padded interval `(l'-1, r'+1)` satisfies `l'-1 < i <= r'+1`.
pub fn crossing_extensions(t: &Text, i: usize) -> Result<Vec<PaddedExtension>> {
    if i < 1 || i > t.len() + 1 {
        return Err(Error::IndexOutOfRange { index: i, max: t.len() + 1 });
    }
    let mut seen = std::collections::HashSet::new();
    Ok(fourth_power_runs(t)
        .into_iter()
        .filter(|e| e.padded.0 < i && i <= e.padded.1)
        .filter(|e| seen.insert(e.content_key.clone()))
        .collect())
}

/// True iff `a` is a cyclic rotation of `b`.
fn is_rotation(a: &[u8], b: &[u8]) -> bool {
    a.len() == b.len() && [b, b].concat().windows(a.len()).any(|w| w == a)
}

/// The subset of [`crossing_extensions`] whose core extends an occurrence
/// of a cyclic rotation of the fourth power `p`.
pub fn cyclic_class_extensions(
    t: &Text,
    i: usize,
    p: &[u8],
) -> Result<Vec<PaddedExtension>> {
    if p.is_empty() || exponent(p) < Exponent::from(4) {
        return Err(Error::InvalidParameter(
            "reference string must be at least a fourth power".into(),
        ));
    }
    let delta = min_period(p);
    Ok(crossing_extensions(t, i)?
        .into_iter()
        .filter(|e| {
            e.delta == delta
                && e.core.1 - e.core.0 + 1 >= p.len()
                && is_rotation(e.root(t), &p[..delta])
        })
        .collect())
}

/// All maximal pairs carrying `FourthPowerBoth` and `NonextendableOneSide`
/// with one occurrence (context included) a prefix of one padded interval
/// and the other a suffix of the other padded interval. Occurrences placed
/// strictly inside both runs cannot form a maximal pair: their neighbour
/// symbols are forced by the periods and coincide. The extensions must be
/// rotation-compatible fourth powers with the same period.
pub fn pairs_from_extension_pair(
    t: &Text,
    index: &LceIndex,
    e1: &PaddedExtension,
    e2: &PaddedExtension,
) -> Result<Vec<MaximalPair>> {
    if e1.delta != e2.delta {
        return Err(Error::IncompatibleExtensions(format!(
            "periods differ: {} vs {}",
            e1.delta, e2.delta
        )));
    }
    for e in [e1, e2] {
        if e.core.1 - e.core.0 + 1 < 4 * e.delta {
            return Err(Error::IncompatibleExtensions(
                "core is not at least a fourth power".into(),
            ));
        }
    }
    if !is_rotation(e1.root(t), e2.root(t)) {
        return Err(Error::IncompatibleExtensions(
            "cores are not identical up to cyclic rotation".into(),
        ));
    }
    let prefix = |a: usize, l: usize, e: &PaddedExtension| {
        e.padded.0 == a - 1 && a + l <= e.padded.1
    };
    let suffix = |a: usize, l: usize, e: &PaddedExtension| {
        e.padded.1 == a + l && e.padded.0 <= a - 1
    };
    let mut out = Vec::new();
    for_each_maximal_pair(t, index, |pair| {
        let (n, m, l) = (pair.n, pair.m, pair.l);
        let placed = (prefix(n, l, e1) && suffix(m, l, e2))
            || (prefix(m, l, e1) && suffix(n, l, e2))
            || (prefix(n, l, e2) && suffix(m, l, e1))
            || (prefix(m, l, e2) && suffix(n, l, e1));
        if !placed {
            return;
        }
        let body = t.slice(n, n + l - 1);
        if exponent(body) < Exponent::from(4) {
            return;
        }
        let delta = min_period(body);
        let (an, am) = extension_added(t, pair, delta);
        if an <= delta || am <= delta {
            out.push(pair);
        }
    });
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lz77::lz77;
    use crate::oracle;
    use crate::repeats::enumerate_maximal_pairs;

    fn t(s: &str) -> Text {
        Text::new(s.as_bytes().to_vec()).unwrap()
    }

    #[test]
    fn classify_abab_example() {
        let x = t("abab");
        let parse = lz77(&x).unwrap();
        let pair = MaximalPair { n: 1, m: 3, l: 2 };
        let c = classify(&x, pair, 1, 3, 2, &parse).unwrap();
        assert_eq!(c.left_part_len, 0);
        assert_eq!(c.right_part_len, 2);
        assert_eq!(c.longer_part_exponent, Some(Exponent::from(1)));
        assert!(c.labels.lemma3_eligible);
        assert!(!c.labels.fourth_power_both);
        assert!(c.labels.not_sixth_power);
    }

    #[test]
    fn classify_interval_endpoints_are_legal() {
        let x = t("abab");
        let parse = lz77(&x).unwrap();
        let pair = MaximalPair { n: 1, m: 3, l: 2 };
        let c = classify(&x, pair, 1, 3, 2, &parse).unwrap();
        assert_eq!(c.left_part_len, 0);
        let c = classify(&x, pair, 3, 5, 2, &parse).unwrap();
        assert_eq!(c.right_part_len, 0);
        assert!(classify(&x, pair, 4, 3, 2, &parse).is_err());
        assert!(classify(&x, pair, 1, 2, 2, &parse).is_err());
    }

    #[test]
    fn fourth_power_label() {
        // body a^4 occurs with differing contexts
        let x = t("baaaacdaaaae");
        let parse = lz77(&x).unwrap();
        let pairs = enumerate_maximal_pairs(&x, 4096).unwrap();
        let pair = *pairs
            .iter()
            .find(|p| x.slice(p.n, p.n + p.l - 1) == b"aaaa")
            .expect("a^4 pair");
        let c = classify(&x, pair, pair.n, pair.m, 2, &parse).unwrap();
        assert!(c.labels.fourth_power_both);
        assert!(c.labels.nonextendable_one_side);
    }

    #[test]
    fn count_per_index_pair_examples() {
        let x = t("aa");
        let parse = lz77(&x).unwrap();
        let pairs = enumerate_maximal_pairs(&x, 4096).unwrap();
        assert_eq!(
            count_per_index_pair(&x, &pairs, 1, 2, Label::Lemma3Eligible, 2, &parse),
            1
        );
        assert_eq!(
            count_per_index_pair(&x, &[], 1, 2, Label::Lemma3Eligible, 2, &parse),
            0
        );
    }

    #[test]
    fn crossing_extension_examples() {
        let runs = crossing_extensions(&t("baaaab"), 3).unwrap();
        assert_eq!(runs.len(), 1);
        assert_eq!(runs[0].padded, (1, 6));

        let x = t("ab");
        for i in 1..=3 {
            assert!(crossing_extensions(&x, i).unwrap().is_empty());
        }
        assert!(crossing_extensions(&x, 9).is_err());
    }

    #[test]
    fn cyclic_class_examples() {
        let x = t("aaaa");
        let exts = cyclic_class_extensions(&x, 2, b"aaaa").unwrap();
        assert_eq!(exts.len(), 1);

        let exts = cyclic_class_extensions(&t("bbbbbbbb"), 2, b"aaaa").unwrap();
        assert!(exts.is_empty());

        assert!(cyclic_class_extensions(&x, 1, b"ab").is_err());
    }

    #[test]
    fn extension_pair_incompatible_periods() {
        let x = t("aaaaabababab");
        let index = LceIndex::new(&x);
        let runs = fourth_power_runs(&x);
        let a = runs.iter().find(|e| e.delta == 1).unwrap();
        let b = runs.iter().find(|e| e.delta == 2).unwrap();
        assert!(pairs_from_extension_pair(&x, &index, a, b).is_err());
    }

    #[test]
    fn extension_pair_unary_run() {
        let x = t("aaaaaaaa");
        let index = LceIndex::new(&x);
        let runs = fourth_power_runs(&x);
        assert_eq!(runs.len(), 1);
        let pairs = pairs_from_extension_pair(&x, &index, &runs[0], &runs[0]).unwrap();
        assert!(pairs.len() <= 4, "{pairs:?}");
    }

    #[test]
    fn production_bound_exhaustive_small() {
        oracle::for_each_string(2, 9, |s| {
            let x = Text::new(s.to_vec()).unwrap();
            let index = LceIndex::new(&x);
            let runs = fourth_power_runs(&x);
            for e1 in &runs {
                for e2 in &runs {
                    if let Ok(pairs) = pairs_from_extension_pair(&x, &index, e1, e2) {
                        assert!(pairs.len() <= 4, "{:?} {e1:?} {e2:?}", s);
                    }
                }
            }
        });
    }

    #[test]
    fn crossing_bound_exhaustive_small() {
        oracle::for_each_string(2, 10, |s| {
            let x = Text::new(s.to_vec()).unwrap();
            let cap = 4 * (usize::BITS - 1 - x.len().leading_zeros()) as usize;
            for i in 1..=x.len() + 1 {
                assert!(crossing_extensions(&x, i).unwrap().len() <= cap);
            }
        });
    }

    #[test]
    fn cyclic_class_bound_exhaustive_small() {
        oracle::for_each_string(2, 9, |s| {
            let x = Text::new(s.to_vec()).unwrap();
            let n = x.len();
            for a in 1..=n {
                for b in a..=n {
                    let p = x.slice(a, b);
                    if exponent(p) < Exponent::from(4) {
                        continue;
                    }
                    for i in 1..=n + 1 {
                        let exts = cyclic_class_extensions(&x, i, p).unwrap();
                        assert!(exts.len() <= 2, "{:?} P={:?} i={}", s, p, i);
                    }
                }
            }
        });
    }

    #[test]
    fn every_class_has_a_boundary_crossing_member() {
        oracle::for_each_string(2, 9, |s| {
            let x = Text::new(s.to_vec()).unwrap();
            let parse = lz77(&x).unwrap();
            let pairs = enumerate_maximal_pairs(&x, 4096).unwrap();
            for group in copy_classes(&x, &pairs) {
                let crossing = group.iter().any(|&idx| {
                    let p = pairs[idx];
                    parse.has_start_in(p.n, p.n + p.l) && parse.has_start_in(p.m, p.m + p.l)
                });
                assert!(crossing, "class without crossing member in {:?}", s);
            }
        });
    }
}
