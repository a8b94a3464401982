//! Suffix array, LCP array and range-minimum structure over `S$`,
//! providing constant-time longest-common-extension queries and
//! constant-time context fingerprints.
//!
//! Because the sentinel is unique and lexicographically smallest, the
//! suffix order of `S$` equals the rotation order of `S$`; the same array
//! therefore also backs the Burrows-Wheeler transform (see
//! [`crate::bwt`]).

use crate::text::Text;

const HASH_MOD: u64 = (1 << 61) - 1;
const HASH_BASE_A: u64 = 1_000_003;
const HASH_BASE_B: u64 = 998_244_353;

#[inline]
fn mulmod(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % HASH_MOD as u128) as u64
}

/// Constant-time LCE queries on the suffixes of `S$`.
pub struct LceIndex {
    /// |S|
    n: usize,
    /// Suffix array of `S$` as 0-based offsets; `sa[0] = |S|` (the `$` suffix).
    sa: Vec<usize>,
    /// Inverse of `sa`.
    rank: Vec<usize>,
    /// `lcp[i]` = common prefix length of suffixes `sa[i-1]` and `sa[i]`.
    lcp: Vec<usize>,
    /// Sparse table over `lcp` for min queries.
    table: Vec<Vec<usize>>,
    log2: Vec<u32>,
    /// Polynomial prefix hashes of the padded text `$S$` (two moduli bases).
    hash_a: Vec<u64>,
    hash_b: Vec<u64>,
    pow_a: Vec<u64>,
    pow_b: Vec<u64>,
}

impl LceIndex {
    pub fn new(text: &Text) -> Self {
        let s = text.with_sentinel();
        let n = text.len();
        let sa = suffix_array(s);
        let mut rank = vec![0usize; s.len()];
        for (i, &p) in sa.iter().enumerate() {
            rank[p] = i;
        }
        let lcp = kasai_lcp(s, &sa, &rank);
        let (table, log2) = build_sparse(&lcp);

        let padded_len = n + 2;
        let mut hash_a = vec![0u64; padded_len + 1];
        let mut hash_b = vec![0u64; padded_len + 1];
        let mut pow_a = vec![1u64; padded_len + 1];
        let mut pow_b = vec![1u64; padded_len + 1];
        for i in 0..padded_len {
            let v = if i == 0 || i == padded_len - 1 {
                1u64 // sentinel maps to 1
            } else {
                s[i - 1] as u64 + 1
            };
            hash_a[i + 1] = (mulmod(hash_a[i], HASH_BASE_A) + v) % HASH_MOD;
            hash_b[i + 1] = (mulmod(hash_b[i], HASH_BASE_B) + v) % HASH_MOD;
            pow_a[i + 1] = mulmod(pow_a[i], HASH_BASE_A);
            pow_b[i + 1] = mulmod(pow_b[i], HASH_BASE_B);
        }

        LceIndex { n, sa, rank, lcp, table, log2, hash_a, hash_b, pow_a, pow_b }
    }

    /// |S|
    pub fn text_len(&self) -> usize {
        self.n
    }

    /// Suffix order of `S$` as 0-based offsets. Entry `i` is the start
    /// offset of the rank-`i` suffix; offset `k` corresponds to the
    /// 1-based text position `k+1`.
    pub fn suffix_order(&self) -> &[usize] {
        &self.sa
    }

    /// `lcp[i]` = common prefix length of the rank-`(i-1)` and rank-`i`
    /// suffixes of `S$`; `lcp[0] = 0`.
    pub fn lcp_array(&self) -> &[usize] {
        &self.lcp
    }

    /// Longest common extension of the suffixes of `S$` starting at the
    /// 1-based positions `a` and `b`, both in `1..=|S|+1`.
    #[inline]
    pub fn lce(&self, a: usize, b: usize) -> usize {
        debug_assert!(a >= 1 && a <= self.n + 1 && b >= 1 && b <= self.n + 1);
        if a == b {
            return self.n + 1 - a + 1;
        }
        let (mut ra, mut rb) = (self.rank[a - 1], self.rank[b - 1]);
        if ra > rb {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.range_min(ra + 1, rb)
    }

    /// Minimum of `lcp[lo..=hi]`.
    #[inline]
    fn range_min(&self, lo: usize, hi: usize) -> usize {
        let k = self.log2[hi - lo + 1] as usize;
        self.table[k][lo].min(self.table[k][hi + 1 - (1 << k)])
    }

    /// Fingerprint of `S[i..=j]` over the padded range `0 <= i <= j <= |S|+1`.
    #[inline]
    pub fn fingerprint(&self, i: usize, j: usize) -> (u64, u64) {
        debug_assert!(i <= j && j <= self.n + 1);
        let len = j - i + 1;
        let a = (self.hash_a[j + 1] + HASH_MOD
            - mulmod(self.hash_a[i], self.pow_a[len]) % HASH_MOD)
            % HASH_MOD;
        let b = (self.hash_b[j + 1] + HASH_MOD
            - mulmod(self.hash_b[i], self.pow_b[len]) % HASH_MOD)
            % HASH_MOD;
        (a, b)
    }
}

/// Suffix array by prefix doubling, O(n log^2 n).
fn suffix_array(s: &[u8]) -> Vec<usize> {
    let n = s.len();
    let mut sa: Vec<usize> = (0..n).collect();
    let mut rank: Vec<i64> = s.iter().map(|&b| b as i64).collect();
    let mut tmp = vec![0i64; n];
    let mut k = 1;
    while k < n {
        let key = |i: usize| -> (i64, i64) {
            (rank[i], if i + k < n { rank[i + k] } else { -1 })
        };
        sa.sort_unstable_by_key(|&i| key(i));
        tmp[sa[0]] = 0;
        for w in 1..n {
            tmp[sa[w]] = tmp[sa[w - 1]] + if key(sa[w - 1]) == key(sa[w]) { 0 } else { 1 };
        }
        rank.copy_from_slice(&tmp);
        if rank[sa[n - 1]] as usize == n - 1 {
            break;
        }
        k <<= 1;
    }
    sa
}

fn kasai_lcp(s: &[u8], sa: &[usize], rank: &[usize]) -> Vec<usize> {
    let n = s.len();
    let mut lcp = vec![0usize; n];
    let mut h = 0usize;
    for i in 0..n {
        let r = rank[i];
        if r == 0 {
            h = 0;
            continue;
        }
        let j = sa[r - 1];
        while i + h < n && j + h < n && s[i + h] == s[j + h] {
            h += 1;
        }
        lcp[r] = h;
        h = h.saturating_sub(1);
    }
    lcp
}

fn build_sparse(lcp: &[usize]) -> (Vec<Vec<usize>>, Vec<u32>) {
    let n = lcp.len();
    let mut log2 = vec![0u32; n + 1];
    for i in 2..=n {
        log2[i] = log2[i / 2] + 1;
    }
    let levels = log2[n.max(1)] as usize + 1;
    let mut table = Vec::with_capacity(levels);
    table.push(lcp.to_vec());
    for k in 1..levels {
        let half = 1usize << (k - 1);
        let prev = &table[k - 1];
        let width = n.saturating_sub((1 << k) - 1);
        let mut row = vec![usize::MAX; n];
        for i in 0..width {
            row[i] = prev[i].min(prev[i + half]);
        }
        table.push(row);
    }
    (table, log2)
}
