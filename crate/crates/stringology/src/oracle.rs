//! Definitional brute-force implementations.
//!
//! Everything in this module is written directly from the definitions with
//! no shared machinery with the efficient implementations: rotations are
//! materialized and sorted, substrings are compared character by character,
//! occurrence counts are obtained by scanning. These functions are the
//! arbiters of correctness for the rest of the crate and are exercised by
//! the test suite over exhaustively enumerated small strings. They are
//! intentionally quadratic to quartic and must only be used on small
//! inputs.

use crate::text::Text;

/// Rotation order of `S$` by materializing and sorting all acyclic
/// permutations. Entry `i` is `pi_{i+1}`.
pub fn rotation_order(t: &Text) -> Vec<usize> {
    let n = t.len();
    let mut rots: Vec<(Vec<u8>, usize)> = (0..=n)
        .map(|p| {
            // S[p+1..|S|+1] S[1..p]
            let mut r = Vec::with_capacity(n + 1);
            for i in p + 1..=n + 1 {
                r.push(t.sym(i));
            }
            for i in 1..=p {
                r.push(t.sym(i));
            }
            (r, p)
        })
        .collect();
    rots.sort();
    rots.into_iter().map(|(_, p)| p).collect()
}

/// BWT of `S$` from the naive rotation sort.
pub fn bwt(t: &Text) -> Vec<u8> {
    rotation_order(t).iter().map(|&p| t.sym(p)).collect()
}

/// Sentinel-free BWT: sorts the `|S|` cyclic rotations of `S` itself,
/// breaking ties between equal rotations by start position ascending.
pub fn cyclic_bwt(t: &Text) -> Vec<u8> {
    let s = t.bytes();
    let n = s.len();
    let mut rots: Vec<(Vec<u8>, usize)> = (0..n)
        .map(|p| {
            let mut r = Vec::with_capacity(n);
            r.extend_from_slice(&s[p..]);
            r.extend_from_slice(&s[..p]);
            (r, p)
        })
        .collect();
    rots.sort();
    rots.into_iter().map(|(_, p)| s[(p + n - 1) % n]).collect()
}

/// Counts occurrences of `w` in `s` (overlapping).
fn occurrences(s: &[u8], w: &[u8]) -> usize {
    if w.is_empty() || w.len() > s.len() {
        return 0;
    }
    (0..=s.len() - w.len()).filter(|&i| &s[i..i + w.len()] == w).count()
}

/// Greedy self-referential LZ77 factors of `S` as `(start, length)` pairs
/// (1-based), testing every candidate length by substring search.
pub fn lz77(t: &Text) -> Vec<(usize, usize)> {
    let s = t.bytes();
    let n = s.len();
    let mut factors = Vec::new();
    let mut p = 0usize; // 0-based start of the next factor
    while p < n {
        let mut best = 0usize;
        for len in 1..=n - p {
            // The factor must occur at least twice in F_1..F_i = s[..p+len].
            if occurrences(&s[..p + len], &s[p..p + len]) >= 2 {
                best = len;
            }
        }
        let len = if best == 0 { 1 } else { best };
        factors.push((p + 1, len));
        p += len;
    }
    factors
}

/// All maximal pairs `(n, m, l)` with `n < m`, checked triple by triple
/// against the three defining conditions.
pub fn maximal_pairs(t: &Text) -> Vec<(usize, usize, usize)> {
    let len = t.len();
    let mut out = Vec::new();
    for n in 1..=len {
        for m in n + 1..=len {
            for l in 1..=len {
                if n + l > len + 1 || m + l > len + 1 {
                    break;
                }
                let equal = (0..l).all(|i| t.sym(n + i) == t.sym(m + i));
                if equal && t.sym(n - 1) != t.sym(m - 1) && t.sym(n + l) != t.sym(m + l)
                {
                    out.push((n, m, l));
                }
            }
        }
    }
    out
}

/// A maximal repeat together with its statistics, from the definitional
/// occurrence-count check.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct NaiveRepeat {
    pub content: Vec<u8>,
    pub occurrence_count: usize,
    /// Distinct symbols `c` with `c . content` at some occurrence in `$S$`.
    pub left_extensions: Vec<u8>,
    /// Distinct symbols `c` with `content . c` at some occurrence in `S$`.
    pub right_extensions: Vec<u8>,
}

/// All maximal repeats: substrings occurring at least twice whose every
/// one-symbol extension within `S` occurs strictly fewer times.
pub fn maximal_repeats(t: &Text) -> Vec<NaiveRepeat> {
    let s = t.bytes();
    let n = s.len();
    let alphabet = t.alphabet();
    let mut seen = std::collections::BTreeSet::new();
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..=n {
            let w = &s[i..j];
            if !seen.insert(w.to_vec()) {
                continue;
            }
            let occ = occurrences(s, w);
            if occ < 2 {
                continue;
            }
            let extension_fewer = alphabet.iter().all(|&c| {
                let mut left = Vec::with_capacity(w.len() + 1);
                left.push(c);
                left.extend_from_slice(w);
                let mut right = w.to_vec();
                right.push(c);
                occurrences(s, &left) < occ && occurrences(s, &right) < occ
            });
            if !extension_fewer {
                continue;
            }
            let mut lefts = std::collections::BTreeSet::new();
            let mut rights = std::collections::BTreeSet::new();
            for p in 1..=n + 1 - w.len() {
                if t.slice(p, p + w.len() - 1) == w {
                    lefts.insert(t.sym(p - 1));
                    rights.insert(t.sym(p + w.len()));
                }
            }
            out.push(NaiveRepeat {
                content: w.to_vec(),
                occurrence_count: occ,
                left_extensions: lefts.into_iter().collect(),
                right_extensions: rights.into_iter().collect(),
            });
        }
    }
    out.sort();
    out
}

/// Smallest period of `w` by the quadratic definitional scan.
pub fn min_period(w: &[u8]) -> usize {
    for d in 1..w.len() {
        if (0..w.len() - d).all(|k| w[k] == w[k + d]) {
            return d;
        }
    }
    w.len().max(1)
}

/// Maximal `delta`-periodic extension of the occurrence `S[l..r]` by
/// direct scanning with the definitional periodicity check.
pub fn periodic_extension(t: &Text, l: usize, r: usize, delta: usize) -> (usize, usize) {
    let is_periodic = |a: usize, b: usize| -> bool {
        // positions a..=b must be within 1..=|S| and delta-periodic
        if a == 0 || b > t.len() {
            return false;
        }
        (a..=b - delta).all(|k| t.sym(k) == t.sym(k + delta))
    };
    let mut lo = l;
    let mut hi = r;
    while lo > 1 && is_periodic(lo - 1, hi) {
        lo -= 1;
    }
    while hi < t.len() && is_periodic(lo, hi + 1) {
        hi += 1;
    }
    (lo, hi)
}

/// Maximum fractional-power exponent over all substrings, as `(len, period)`
/// of a witness substring attaining it.
pub fn max_exponent_witness(t: &Text) -> (usize, usize) {
    let s = t.bytes();
    let n = s.len();
    let mut best = (1usize, 1usize); // exponent 1
    for i in 0..n {
        for j in i + 1..=n {
            let w = &s[i..j];
            let p = min_period(w);
            // compare w.len()/p > best.0/best.1 in integers
            if w.len() * best.1 > best.0 * p {
                best = (w.len(), p);
            }
        }
    }
    best
}

/// Enumerates all strings over the first `alphabet` lowercase letters with
/// lengths `1..=max_len`, invoking `f` on each.
pub fn for_each_string(alphabet: usize, max_len: usize, mut f: impl FnMut(&[u8])) {
    let mut buf = vec![0u8; max_len];
    for len in 1..=max_len {
        let total = (alphabet as u64).pow(len as u32);
        for mut code in 0..total {
            for slot in buf[..len].iter_mut() {
                *slot = b'a' + (code % alphabet as u64) as u8;
                code /= alphabet as u64;
            }
            f(&buf[..len]);
        }
    }
}
