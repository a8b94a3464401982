//! Burrows-Wheeler transform of `S$` via the sorted acyclic permutations,
//! its run decomposition, and the sentinel-free cyclic variant.
//!
//! Because the sentinel is unique and smallest, the rotation order of `S$`
//! equals the suffix order of `S$`; the efficient construction therefore
//! reuses the suffix array from [`crate::lce`]. The naive rotation sort
//! lives in [`crate::oracle`] and defines correctness.

use serde::Serialize;

use crate::lce::LceIndex;
use crate::text::{Text, SENTINEL};

/// The sorted order of the acyclic permutations of `S$`.
///
/// `pi()[i-1]` is `pi_i`: the rotation `S[pi_i+1..|S|+1]S[1..pi_i]` has
/// lexicographic rank `i` among all `|S|+1` rotations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RotationOrder {
    pi: Vec<usize>,
}

impl RotationOrder {
    pub fn pi(&self) -> &[usize] {
        &self.pi
    }

    pub fn len(&self) -> usize {
        self.pi.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pi.is_empty()
    }
}

/// One maximal block of equal symbols in a BWT.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Run {
    pub symbol: u8,
    /// 1-based index in the BWT where the run starts.
    pub start: usize,
    pub length: usize,
}

/// A BWT together with its run decomposition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunProfile {
    pub bwt: Vec<u8>,
    pub runs: Vec<Run>,
    /// Run count.
    pub r: usize,
}

impl RunProfile {
    fn from_bwt(bwt: Vec<u8>) -> Self {
        let mut runs: Vec<Run> = Vec::new();
        for (i, &sym) in bwt.iter().enumerate() {
            match runs.last_mut() {
                Some(run) if run.symbol == sym => run.length += 1,
                _ => runs.push(Run { symbol: sym, start: i + 1, length: 1 }),
            }
        }
        let r = runs.len();
        RunProfile { bwt, runs, r }
    }
}

/// Sorted rotation order of `S$`, from the suffix array.
pub fn rotation_order(t: &Text) -> RotationOrder {
    rotation_order_from(&LceIndex::new(t))
}

/// Rotation order from an already-built index: the suffix at offset `o`
/// starts the rotation with `pi = o`.
pub fn rotation_order_from(index: &LceIndex) -> RotationOrder {
    RotationOrder { pi: index.suffix_order().to_vec() }
}

/// BWT of `S$`: entry `i` is `S[pi_i]`, so the sentinel appears exactly
/// once, at the rank of the rotation starting at position 1.
pub fn bwt(t: &Text) -> RunProfile {
    bwt_from(t, &rotation_order(t))
}

pub fn bwt_from(t: &Text, order: &RotationOrder) -> RunProfile {
    RunProfile::from_bwt(order.pi.iter().map(|&p| t.sym(p)).collect())
}

/// Sentinel-free BWT: sorts the `|S|` cyclic rotations of `S` itself,
/// ties between equal rotations broken by rotation start ascending.
pub fn cyclic_bwt(t: &Text) -> RunProfile {
    let s = t.bytes();
    let n = s.len();
    let mut doubled = Vec::with_capacity(2 * n);
    doubled.extend_from_slice(s);
    doubled.extend_from_slice(s);
    let mut starts: Vec<usize> = (0..n).collect();
    starts.sort_by(|&a, &b| doubled[a..a + n].cmp(&doubled[b..b + n]).then(a.cmp(&b)));
    RunProfile::from_bwt(starts.iter().map(|&p| s[(p + n - 1) % n]).collect())
}

/// Inverts a sentinel BWT (one `SENTINEL` byte, smallest symbol) back to
/// `S` via the LF relation.
pub fn invert_bwt(bwt: &[u8]) -> Vec<u8> {
    let n = bwt.len();
    // first column = sorted BWT; LF maps the k-th occurrence of symbol c in
    // the last column to the k-th occurrence of c in the first column.
    let mut counts = [0usize; 256];
    for &b in bwt {
        counts[b as usize] += 1;
    }
    let mut first_index = [0usize; 256];
    let mut acc = 0usize;
    for c in 0..256 {
        first_index[c] = acc;
        acc += counts[c];
    }
    let mut occ_before = [0usize; 256];
    let mut lf = vec![0usize; n];
    for (i, &b) in bwt.iter().enumerate() {
        lf[i] = first_index[b as usize] + occ_before[b as usize];
        occ_before[b as usize] += 1;
    }
    // Walk backwards from the row whose last character is the sentinel
    // (the rotation starting at position 1).
    let mut row = bwt.iter().position(|&b| b == SENTINEL).expect("sentinel present");
    let mut out = vec![0u8; n - 1];
    for slot in out.iter_mut().rev() {
        // the character preceding the current rotation is bwt[row]
        row = lf[row];
        *slot = bwt[row];
    }
    // first step landed on the sentinel row; characters collected are S reversed
    out
}
