//! Greedy self-referential LZ77 factorization.
//!
//! Each factor is either a fresh symbol that has not occurred before, or
//! the longest prefix of the remaining text that occurs at least twice in
//! the text up to and including the factor itself. The second condition
//! counts the factor's own occurrence, so overlapping previous occurrences
//! qualify; this is what makes `z(a^n) = 2`.
//!
//! A factor starting at `p` therefore has length `max_{p' < p} lce(p', p)`
//! (or 1 if that maximum is 0, the fresh-symbol case): an earlier
//! occurrence at `p'` of length `l` lies fully inside `S[1..p+l-1]` and
//! any extension past the maximum no longer has a second occurrence.

use serde::Serialize;

use crate::error::Result;
use crate::lce::LceIndex;
use crate::text::Text;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum FactorKind {
    /// A single symbol that does not occur earlier in `S`.
    FreshSymbol,
    /// Longest prefix occurring at least twice up to and including itself.
    RepeatedPrefix,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Factor {
    /// 1-based start position in `S`.
    pub start: usize,
    pub length: usize,
    pub kind: FactorKind,
}

/// The LZ77 decomposition of `S`, plus the factor starts of `S$`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lz77Parse {
    pub factors: Vec<Factor>,
    /// Factor count of `S` (the sentinel factor of `S$` not included).
    pub z: usize,
    /// `s_1..s_{z+1}`: factor start positions in `S$`, ending with the
    /// sentinel factor start `|S|+1`.
    starts: Vec<usize>,
}

impl Lz77Parse {
    /// `s_1..s_{z+1}` including the sentinel factor start `|S|+1`.
    pub fn factor_starts(&self) -> &[usize] {
        &self.starts
    }

    /// True iff some factor start lies in the inclusive interval `[lo, hi]`.
    pub fn has_start_in(&self, lo: usize, hi: usize) -> bool {
        let i = self.starts.partition_point(|&s| s < lo);
        i < self.starts.len() && self.starts[i] <= hi
    }
}

/// Computes the parse with an index built internally.
pub fn lz77(t: &Text) -> Result<Lz77Parse> {
    Ok(lz77_from(t, &LceIndex::new(t)))
}

/// Computes the parse reusing an existing LCE index.
pub fn lz77_from(t: &Text, index: &LceIndex) -> Lz77Parse {
    let n = t.len();
    let mut factors = Vec::new();
    let mut starts = Vec::new();
    let mut p = 1usize;
    while p <= n {
        let mut best = 0usize;
        for q in 1..p {
            best = best.max(index.lce(q, p));
        }
        let (length, kind) = if best == 0 {
            (1, FactorKind::FreshSymbol)
        } else {
            (best, FactorKind::RepeatedPrefix)
        };
        factors.push(Factor { start: p, length, kind });
        starts.push(p);
        p += length;
    }
    starts.push(n + 1);
    let z = factors.len();
    Lz77Parse { factors, z, starts }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle;

    fn t(s: &str) -> Text {
        Text::new(s.as_bytes().to_vec()).unwrap()
    }

    fn contents(t: &Text, parse: &Lz77Parse) -> Vec<Vec<u8>> {
        parse
            .factors
            .iter()
            .map(|f| t.slice(f.start, f.start + f.length - 1).to_vec())
            .collect()
    }

    #[test]
    fn unary_self_reference() {
        let x = t("aaaa");
        let p = lz77(&x).unwrap();
        assert_eq!(contents(&x, &p), vec![b"a".to_vec(), b"aaa".to_vec()]);
        assert_eq!(p.z, 2);
        assert_eq!(p.factor_starts(), &[1, 2, 5]);
    }

    #[test]
    fn abab() {
        let x = t("abab");
        let p = lz77(&x).unwrap();
        assert_eq!(contents(&x, &p), vec![b"a".to_vec(), b"b".to_vec(), b"ab".to_vec()]);
        assert_eq!(p.z, 3);
        assert_eq!(p.factor_starts(), &[1, 2, 3, 5]);
    }

    #[test]
    fn single_symbol() {
        let x = t("a");
        let p = lz77(&x).unwrap();
        assert_eq!(p.z, 1);
        assert_eq!(p.factors[0].kind, FactorKind::FreshSymbol);
        assert_eq!(p.factor_starts(), &[1, 2]);
    }

    #[test]
    fn paper_style_runs_string() {
        // b a^10 b a^20 b
        let mut s = vec![b'b'];
        s.extend(std::iter::repeat(b'a').take(10));
        s.push(b'b');
        s.extend(std::iter::repeat(b'a').take(20));
        s.push(b'b');
        let x = Text::new(s).unwrap();
        let p = lz77(&x).unwrap();
        let expect: Vec<Vec<u8>> = vec![
            b"b".to_vec(),
            b"a".to_vec(),
            b"aaaaaaaaa".to_vec(),
            b"baaaaaaaaaa".to_vec(),
            b"aaaaaaaaaab".to_vec(),
        ];
        assert_eq!(contents(&x, &p), expect);
        assert_eq!(p.z, 5);
    }

    #[test]
    fn matches_oracle_on_samples() {
        for s in ["mississippi", "abracadabra", "aabbaabb", "abcabcabc", "banana"] {
            let x = t(s);
            let p = lz77(&x).unwrap();
            let got: Vec<(usize, usize)> = p.factors.iter().map(|f| (f.start, f.length)).collect();
            assert_eq!(got, oracle::lz77(&x), "{s}");
        }
    }

    #[test]
    fn factor_tiling() {
        for s in ["a", "ab", "aaaa", "abaababa", "mississippi"] {
            let x = t(s);
            let p = lz77(&x).unwrap();
            let mut pos = 1;
            for f in &p.factors {
                assert_eq!(f.start, pos);
                assert!(f.length >= 1);
                pos += f.length;
            }
            assert_eq!(pos, x.len() + 1);
            assert_eq!(*p.factor_starts().last().unwrap(), x.len() + 1);
        }
    }

    #[test]
    fn fresh_symbols_are_new() {
        for s in ["abcabc", "mississippi", "zyxzyx"] {
            let x = t(s);
            let p = lz77(&x).unwrap();
            for f in &p.factors {
                if f.kind == FactorKind::FreshSymbol {
                    let c = x.sym(f.start);
                    assert!((1..f.start).all(|q| x.sym(q) != c));
                }
            }
        }
    }

    #[test]
    fn has_start_in_lookup() {
        let x = t("abab");
        let p = lz77(&x).unwrap();
        assert!(p.has_start_in(1, 1));
        assert!(p.has_start_in(4, 5));
        assert!(!p.has_start_in(4, 4));
    }
}
