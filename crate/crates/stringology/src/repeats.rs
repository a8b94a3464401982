//! Maximal pairs, copy classes, maximal repeats and CDAWG counts.
//!
//! A maximal pair is `(n, m, l)` with equal bodies `S[n..n+l-1] =
//! S[m..m+l-1]` and differing characters on both sides. Since `l` is
//! forced to be the full common extension, enumeration walks all position
//! pairs with differing left characters and takes `l = lce(n, m)`; the
//! definitional triple-by-triple check lives in [`crate::oracle`].
//!
//! Maximal repeats are read off the suffix-tree topology of `S$`: the
//! branching LCP intervals are the right-maximal substrings, and the ones
//! whose occurrences carry at least two distinct preceding characters are
//! the maximal repeats. CDAWG arc counts follow from the bijection between
//! arcs out of internal nodes and right extensions of maximal repeats; no
//! navigable automaton is built.

use std::collections::HashMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::lce::LceIndex;
use crate::text::Text;

/// Default cap for the quadratic enumerations.
pub const ENUMERATION_CAP: usize = 4096;

/// A maximal pair `(n, m, l)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct MaximalPair {
    pub n: usize,
    pub m: usize,
    pub l: usize,
}

impl MaximalPair {
    /// The same pair with `n < m`.
    pub fn canonical(self) -> Self {
        if self.n <= self.m {
            self
        } else {
            MaximalPair { n: self.m, m: self.n, l: self.l }
        }
    }

    /// The unordered pair of sentinel-padded context strings
    /// `{S[n-1..n+l], S[m-1..m+l]}`, sorted; two pairs are copies exactly
    /// when their keys are equal.
    pub fn copy_key(&self, t: &Text) -> (Vec<u8>, Vec<u8>) {
        let a = t.substring(self.n - 1, self.n + self.l).expect("in range");
        let b = t.substring(self.m - 1, self.m + self.l).expect("in range");
        if a <= b {
            (a, b)
        } else {
            (b, a)
        }
    }
}

/// Invokes `f` for every maximal pair, in canonical `(n, m)` order.
pub fn for_each_maximal_pair(t: &Text, index: &LceIndex, mut f: impl FnMut(MaximalPair)) {
    let len = t.len();
    for n in 1..=len {
        let left_n = t.sym(n - 1);
        for m in n + 1..=len {
            if left_n == t.sym(m - 1) {
                continue;
            }
            let l = index.lce(n, m);
            if l >= 1 {
                f(MaximalPair { n, m, l });
            }
        }
    }
}

/// All maximal pairs, sorted by `(n, m)`.
pub fn enumerate_maximal_pairs(t: &Text, cap: usize) -> Result<Vec<MaximalPair>> {
    check_cap(t, cap)?;
    let index = LceIndex::new(t);
    let mut out = Vec::new();
    for_each_maximal_pair(t, &index, |p| out.push(p));
    Ok(out)
}

fn check_cap(t: &Text, cap: usize) -> Result<()> {
    if t.len() > cap {
        return Err(Error::SizeCapExceeded {
            stage: "enumerate",
            len: t.len(),
            cap,
            flag: "--cap",
        });
    }
    Ok(())
}

/// Groups pairs into copy classes. Returns the partition as lists of
/// indices into `pairs`, in order of first appearance.
pub fn copy_classes(t: &Text, pairs: &[MaximalPair]) -> Vec<Vec<usize>> {
    let mut by_key: HashMap<(Vec<u8>, Vec<u8>), usize> = HashMap::new();
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for (i, p) in pairs.iter().enumerate() {
        let key = p.copy_key(t);
        let id = *by_key.entry(key).or_insert_with(|| {
            classes.push(Vec::new());
            classes.len() - 1
        });
        classes[id].push(i);
    }
    classes
}

/// Incremental copy-class registry with constant-time keys.
///
/// Pairs are bucketed by `(l, fingerprint-pair)`; on a bucket hit the
/// contexts are compared byte for byte against the stored representative,
/// so the class identity is exact even under fingerprint collisions.
pub struct ClassTable<'a> {
    text: &'a Text,
    index: &'a LceIndex,
    buckets: HashMap<(usize, (u64, u64), (u64, u64)), Vec<u32>>,
    reps: Vec<MaximalPair>,
}

impl<'a> ClassTable<'a> {
    pub fn new(text: &'a Text, index: &'a LceIndex) -> Self {
        ClassTable { text, index, buckets: HashMap::new(), reps: Vec::new() }
    }

    /// The class id of `pair`, registering a new class if needed.
    pub fn class_of(&mut self, pair: MaximalPair) -> u32 {
        let fp_n = self.index.fingerprint(pair.n - 1, pair.n + pair.l);
        let fp_m = self.index.fingerprint(pair.m - 1, pair.m + pair.l);
        let key = if fp_n <= fp_m {
            (pair.l, fp_n, fp_m)
        } else {
            (pair.l, fp_m, fp_n)
        };
        let candidates = self.buckets.entry(key).or_default();
        for &id in candidates.iter() {
            let rep = self.reps[id as usize];
            // Constant-time exact context comparison: the bodies are equal
            // iff the extension runs at least l, and the boundary symbols
            // pin down the contexts.
            let l = pair.l;
            let eq = |a: usize, b: usize| {
                a == b
                    || (self.text.sym(a - 1) == self.text.sym(b - 1)
                        && self.text.sym(a + l) == self.text.sym(b + l)
                        && self.index.lce(a, b) >= l)
            };
            if (eq(pair.n, rep.n) && eq(pair.m, rep.m))
                || (eq(pair.n, rep.m) && eq(pair.m, rep.n))
            {
                return id;
            }
        }
        let id = self.reps.len() as u32;
        self.reps.push(pair);
        candidates.push(id);
        id
    }

    /// Number of substantially different pairs seen so far.
    pub fn class_count(&self) -> usize {
        self.reps.len()
    }

    pub fn representatives(&self) -> &[MaximalPair] {
        &self.reps
    }
}

/// A maximal repeat with its occurrence count and extension alphabets
/// (sentinel contexts included).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct MaximalRepeat {
    pub content: Vec<u8>,
    pub occurrence_count: usize,
    pub left_extensions: Vec<u8>,
    pub right_extensions: Vec<u8>,
}

/// All maximal repeats, sorted by content.
pub fn enumerate_maximal_repeats(t: &Text, cap: usize) -> Result<Vec<MaximalRepeat>> {
    check_cap(t, cap)?;
    let index = LceIndex::new(t);
    Ok(enumerate_maximal_repeats_from(t, &index))
}

pub fn enumerate_maximal_repeats_from(t: &Text, index: &LceIndex) -> Vec<MaximalRepeat> {
    let s = t.with_sentinel();
    let sa = index.suffix_order();
    let n = sa.len();
    let lcp = index.lcp_array();

    let mut out = Vec::new();
    // Branching LCP intervals via the usual stack sweep; a virtual 0 entry
    // at the end flushes the stack.
    let mut stack: Vec<(usize, usize)> = vec![(0, 0)]; // (depth, left bound)
    for i in 1..=n {
        let depth = if i < n { lcp[i] } else { 0 };
        let mut lb = i - 1;
        while stack.last().map_or(false, |&(d, _)| d > depth) {
            let (d, l) = stack.pop().unwrap();
            let rb = i - 1;
            if d >= 1 {
                if let Some(rep) = node_to_repeat(t, s, sa, d, l, rb) {
                    out.push(rep);
                }
            }
            lb = l;
        }
        if stack.last().map_or(true, |&(d, _)| d < depth) {
            stack.push((depth, lb));
        }
    }
    out.sort();
    out
}

/// Checks left-maximality of the node `(depth, lb..=rb)` and collects its
/// statistics; right-maximality is inherent to branching intervals.
fn node_to_repeat(
    t: &Text,
    s: &[u8],
    sa: &[usize],
    depth: usize,
    lb: usize,
    rb: usize,
) -> Option<MaximalRepeat> {
    let mut left_seen = [false; 256];
    let mut right_seen = [false; 256];
    for &offset in &sa[lb..=rb] {
        left_seen[t.sym(offset) as usize] = true; // S[pos-1] for pos = offset+1
        right_seen[s[offset + depth] as usize] = true;
    }
    let lefts: Vec<u8> = (0..=255u8).filter(|&c| left_seen[c as usize]).collect();
    if lefts.len() < 2 {
        return None;
    }
    let rights: Vec<u8> = (0..=255u8).filter(|&c| right_seen[c as usize]).collect();
    Some(MaximalRepeat {
        content: s[sa[lb]..sa[lb] + depth].to_vec(),
        occurrence_count: rb - lb + 1,
        left_extensions: lefts,
        right_extensions: rights,
    })
}

/// CDAWG size counts derived from the maximal repeats.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CdawgStats {
    /// Internal nodes.
    pub maximal_repeat_count: usize,
    /// Arcs leaving internal nodes.
    pub right_extension_total: usize,
    /// Arcs leaving the root: distinct symbols of `S$`.
    pub root_arcs: usize,
    pub arc_total: usize,
}

pub fn cdawg_stats(t: &Text, cap: usize) -> Result<CdawgStats> {
    check_cap(t, cap)?;
    let index = LceIndex::new(t);
    Ok(cdawg_stats_from(t, &index))
}

pub fn cdawg_stats_from(t: &Text, index: &LceIndex) -> CdawgStats {
    let repeats = enumerate_maximal_repeats_from(t, index);
    let right_extension_total = repeats.iter().map(|r| r.right_extensions.len()).sum();
    let root_arcs = t.alphabet().len() + 1; // the sentinel
    CdawgStats {
        maximal_repeat_count: repeats.len(),
        right_extension_total,
        root_arcs,
        arc_total: right_extension_total + root_arcs,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle;

    fn t(s: &str) -> Text {
        Text::new(s.as_bytes().to_vec()).unwrap()
    }

    fn pairs_of(s: &str) -> Vec<(usize, usize, usize)> {
        enumerate_maximal_pairs(&t(s), ENUMERATION_CAP)
            .unwrap()
            .into_iter()
            .map(|p| (p.n, p.m, p.l))
            .collect()
    }

    #[test]
    fn pair_examples() {
        assert_eq!(pairs_of("aa"), vec![(1, 2, 1)]);
        assert_eq!(pairs_of("abab"), vec![(1, 3, 2)]);
        assert_eq!(pairs_of("aaa"), vec![(1, 2, 2), (1, 3, 1)]);
    }

    #[test]
    fn pairs_match_oracle_exhaustively() {
        oracle::for_each_string(2, 10, |s| {
            let x = Text::new(s.to_vec()).unwrap();
            let got = enumerate_maximal_pairs(&x, ENUMERATION_CAP).unwrap();
            let got: Vec<_> = got.into_iter().map(|p| (p.n, p.m, p.l)).collect();
            let mut expect = oracle::maximal_pairs(&x);
            expect.sort();
            assert_eq!(got, expect);
        });
    }

    #[test]
    fn pair_cap_is_enforced() {
        let err = enumerate_maximal_pairs(&t("abcd"), 3).unwrap_err();
        assert!(matches!(err, Error::SizeCapExceeded { stage: "enumerate", .. }));
    }

    #[test]
    fn copy_class_examples() {
        let x = t("aaa");
        let pairs = enumerate_maximal_pairs(&x, ENUMERATION_CAP).unwrap();
        assert_eq!(copy_classes(&x, &pairs).len(), 2);

        let x = t("abcabc");
        let pairs = enumerate_maximal_pairs(&x, ENUMERATION_CAP).unwrap();
        assert_eq!(pairs, vec![MaximalPair { n: 1, m: 4, l: 3 }]);
        assert_eq!(copy_classes(&x, &pairs).len(), 1);
    }

    #[test]
    fn swapped_pair_is_a_copy() {
        let x = t("abab");
        let p = MaximalPair { n: 1, m: 3, l: 2 };
        let q = MaximalPair { n: 3, m: 1, l: 2 };
        assert_eq!(p.copy_key(&x), q.copy_key(&x));
    }

    #[test]
    fn class_table_agrees_with_copy_classes() {
        oracle::for_each_string(3, 7, |s| {
            let x = Text::new(s.to_vec()).unwrap();
            let index = LceIndex::new(&x);
            let pairs = enumerate_maximal_pairs(&x, ENUMERATION_CAP).unwrap();
            let mut table = ClassTable::new(&x, &index);
            let ids: Vec<u32> = pairs.iter().map(|&p| table.class_of(p)).collect();
            let partition = copy_classes(&x, &pairs);
            assert_eq!(table.class_count(), partition.len());
            for group in partition {
                let first = ids[group[0]];
                assert!(group.iter().all(|&i| ids[i] == first));
            }
        });
    }

    #[test]
    fn repeat_examples() {
        let reps = enumerate_maximal_repeats(&t("aaa"), ENUMERATION_CAP).unwrap();
        assert_eq!(reps.len(), 2);
        assert_eq!(reps[0].content, b"a");
        assert_eq!(reps[0].occurrence_count, 3);
        assert_eq!(reps[1].content, b"aa");
        assert_eq!(reps[1].occurrence_count, 2);

        let reps = enumerate_maximal_repeats(&t("abab"), ENUMERATION_CAP).unwrap();
        assert_eq!(reps.len(), 1);
        assert_eq!(reps[0].content, b"ab");

        assert!(enumerate_maximal_repeats(&t("ab"), ENUMERATION_CAP).unwrap().is_empty());
    }

    #[test]
    fn repeats_match_oracle_exhaustively() {
        oracle::for_each_string(2, 10, |s| {
            let x = Text::new(s.to_vec()).unwrap();
            let got = enumerate_maximal_repeats(&x, ENUMERATION_CAP).unwrap();
            let expect = oracle::maximal_repeats(&x);
            assert_eq!(got.len(), expect.len(), "{:?}", String::from_utf8_lossy(s));
            for (g, e) in got.iter().zip(&expect) {
                assert_eq!(g.content, e.content);
                assert_eq!(g.occurrence_count, e.occurrence_count);
                assert_eq!(g.left_extensions, e.left_extensions);
                assert_eq!(g.right_extensions, e.right_extensions);
            }
        });
    }

    #[test]
    fn cdawg_examples() {
        let s = cdawg_stats(&t("aaa"), ENUMERATION_CAP).unwrap();
        assert_eq!(s.right_extension_total, 4);
        assert_eq!(s.root_arcs, 2);
        assert_eq!(s.arc_total, 6);

        let s = cdawg_stats(&t("ab"), ENUMERATION_CAP).unwrap();
        assert_eq!(s.right_extension_total, 0);
        assert_eq!(s.root_arcs, 3);
        assert_eq!(s.arc_total, 3);

        let s = cdawg_stats(&t("abab"), ENUMERATION_CAP).unwrap();
        assert_eq!(s.arc_total, 5);
    }

    #[test]
    fn every_pair_body_is_a_repeat_and_back() {
        oracle::for_each_string(3, 8, |s| {
            let x = Text::new(s.to_vec()).unwrap();
            let pairs = enumerate_maximal_pairs(&x, ENUMERATION_CAP).unwrap();
            let reps = enumerate_maximal_repeats(&x, ENUMERATION_CAP).unwrap();
            let contents: std::collections::BTreeSet<Vec<u8>> =
                reps.iter().map(|r| r.content.clone()).collect();
            for p in &pairs {
                assert!(contents.contains(x.slice(p.n, p.n + p.l - 1)));
            }
            for c in &contents {
                assert!(
                    pairs.iter().any(|p| x.slice(p.n, p.n + p.l - 1) == c.as_slice()),
                    "repeat without pair in {:?}",
                    String::from_utf8_lossy(s)
                );
            }
        });
    }

    #[test]
    fn identical_bodies_can_be_substantially_different() {
        // Some small string must witness two non-copy pairs sharing a body.
        let mut found = false;
        oracle::for_each_string(2, 8, |s| {
            if found {
                return;
            }
            let x = Text::new(s.to_vec()).unwrap();
            let pairs = enumerate_maximal_pairs(&x, ENUMERATION_CAP).unwrap();
            for a in 0..pairs.len() {
                for b in a + 1..pairs.len() {
                    let (p, q) = (pairs[a], pairs[b]);
                    if x.slice(p.n, p.n + p.l - 1) == x.slice(q.n, q.n + q.l - 1)
                        && p.copy_key(&x) != q.copy_key(&x)
                    {
                        found = true;
                    }
                }
            }
        });
        assert!(found);
    }
}
