//! Periods, fractional-power exponents, power-freeness and (padded)
//! maximal periodic extensions.
//!
//! Exponents are exact rationals `|w| / min_period(w)`; every comparison
//! against a threshold is exact integer arithmetic.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::text::Text;
use crate::Exponent;

/// Border (failure-function) array: `border[k]` is the longest proper
/// border length of `w[..k]`.
pub fn border_array(w: &[u8]) -> Vec<usize> {
    let mut border = vec![0usize; w.len() + 1];
    let mut b = 0usize;
    for k in 1..w.len() {
        while b > 0 && w[k] != w[b] {
            b = border[b];
        }
        if w[k] == w[b] {
            b += 1;
        }
        border[k + 1] = b;
    }
    border
}

/// Smallest period of `w`: `|w|` minus its longest proper border.
pub fn min_period(w: &[u8]) -> usize {
    assert!(!w.is_empty());
    w.len() - border_array(w)[w.len()]
}

/// The exact fractional-power exponent `|w| / min_period(w)`.
pub fn exponent(w: &[u8]) -> Exponent {
    Exponent::new(w.len() as u64, min_period(w) as u64)
}

/// True iff `w` is not an integer power `u^k` with `k >= 2`.
pub fn is_primitive(w: &[u8]) -> bool {
    let p = min_period(w);
    !(p < w.len() && w.len() % p == 0)
}

/// Minimal period, exponent and primitivity of one word.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PeriodView {
    pub min_period: usize,
    pub exponent: Exponent,
    pub primitive: bool,
}

pub fn period_view(w: &[u8]) -> PeriodView {
    let p = min_period(w);
    PeriodView {
        min_period: p,
        exponent: Exponent::new(w.len() as u64, p as u64),
        primitive: !(p < w.len() && w.len() % p == 0),
    }
}

/// A substring attaining the maximum exponent.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ExponentWitness {
    /// 1-based start of the witness substring.
    pub start: usize,
    pub length: usize,
    pub period: usize,
}

/// Default length cap for the quadratic [`max_exponent`] scan.
pub const MAX_EXPONENT_CAP: usize = 65_536;

/// Maximum exponent over all substrings, by the quadratic scan with one
/// incremental border function per start position.
pub fn max_exponent(t: &Text, cap: usize) -> Result<(Exponent, ExponentWitness)> {
    let n = t.len();
    if n > cap {
        return Err(Error::SizeCapExceeded {
            stage: "max-exponent",
            len: n,
            cap,
            flag: "--max-exponent-cap",
        });
    }
    let s = t.bytes();
    // best = (length, period) maximizing length/period
    let mut best = (1usize, 1usize);
    let mut witness = ExponentWitness { start: 1, length: 1, period: 1 };
    let mut border = vec![0usize; n + 1];
    for i in 0..n {
        let w = &s[i..];
        border[1] = 0;
        let mut b = 0usize;
        for k in 1..w.len() {
            while b > 0 && w[k] != w[b] {
                b = border[b];
            }
            if w[k] == w[b] {
                b += 1;
            }
            border[k + 1] = b;
            let len = k + 1;
            let per = len - b;
            if (len * best.1) as u64 > (best.0 * per) as u64 {
                best = (len, per);
                witness = ExponentWitness { start: i + 1, length: len, period: per };
            }
        }
    }
    Ok((Exponent::new(best.0 as u64, best.1 as u64), witness))
}

/// Smallest integer `q >= 2` such that `S` contains no substring of
/// exponent `>= q`, together with the maximum exponent itself.
pub fn q_free_witness(t: &Text, cap: usize) -> Result<(u32, Exponent)> {
    let (max_exp, _) = max_exponent(t, cap)?;
    let q = (max_exp.to_integer() + 1).max(2) as u32;
    Ok((q, max_exp))
}

/// A maximal `delta`-periodic extension and its padded form.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PaddedExtension {
    pub delta: usize,
    /// `(l', r')`: the maximal delta-periodic extension.
    pub core: (usize, usize),
    /// `(l'-1, r'+1)`; the endpoints may be `0` or `|S|+1`.
    pub padded: (usize, usize),
    /// `S[l'-1..r'+1]` with sentinel bytes at out-of-text endpoints.
    pub content_key: Vec<u8>,
}

impl PaddedExtension {
    /// Number of symbols the core adds around the occurrence `[l, r]`.
    pub fn added_around(&self, l: usize, r: usize) -> usize {
        (l - self.core.0) + (self.core.1 - r)
    }

    /// The first period of the core, `S[l'..l'+delta-1]`.
    pub fn root<'a>(&self, t: &'a Text) -> &'a [u8] {
        t.slice(self.core.0, self.core.0 + self.delta - 1)
    }
}

/// The unique maximal `delta`-periodic extension of the occurrence
/// `S[l..r]`. When `delta` is `None` it defaults to the minimal period of
/// `S[l..r]`.
pub fn maximal_periodic_extension(
    t: &Text,
    l: usize,
    r: usize,
    delta: Option<usize>,
) -> Result<PaddedExtension> {
    let n = t.len();
    if l == 0 || r > n || l > r {
        return Err(Error::InvalidOccurrence(format!(
            "occurrence [{l}, {r}] outside [1, {n}]"
        )));
    }
    let delta = delta.unwrap_or_else(|| min_period(t.slice(l, r)));
    if delta == 0 || delta > r - l + 1 {
        return Err(Error::InvalidOccurrence(format!(
            "period {delta} longer than occurrence [{l}, {r}]"
        )));
    }
    if !(l..=r - delta).all(|k| t.sym(k) == t.sym(k + delta)) {
        return Err(Error::InvalidOccurrence(format!(
            "S[{l}..{r}] is not {delta}-periodic"
        )));
    }
    let mut lo = l;
    let mut hi = r;
    // The sentinel never equals an alphabet symbol, so the scans stop at
    // the text ends on their own; the explicit guards keep indices valid.
    while lo > 1 && t.sym(lo - 1) == t.sym(lo - 1 + delta) {
        lo -= 1;
    }
    while hi < n && t.sym(hi + 1) == t.sym(hi + 1 - delta) {
        hi += 1;
    }
    Ok(PaddedExtension {
        delta,
        core: (lo, hi),
        padded: (lo - 1, hi + 1),
        content_key: t.substring(lo - 1, hi + 1)?,
    })
}

/// All lengths `2d` such that `S[i-2d..i-1] = uu` with `u` primitive.
pub fn primitive_square_suffixes(t: &Text, i: usize) -> Result<Vec<usize>> {
    let n = t.len();
    if i < 2 || i > n + 1 {
        return Err(Error::IndexOutOfRange { index: i, max: n + 1 });
    }
    let mut out = Vec::new();
    for d in 1..=(i - 1) / 2 {
        let a = i - 2 * d;
        if a == 0 {
            break;
        }
        let u = t.slice(a, a + d - 1);
        if u == t.slice(a + d, i - 1) && is_primitive(u) {
            out.push(2 * d);
        }
    }
    Ok(out)
}

/// All maximal periodic extensions of fourth powers: maximal
/// `delta`-periodic intervals whose content has minimal period exactly
/// `delta` and length at least `4 * delta`. Quadratic sweep per period
/// length.
pub fn fourth_power_runs(t: &Text) -> Vec<PaddedExtension> {
    let n = t.len();
    let mut out = Vec::new();
    for delta in 1..=n / 4 {
        let mut k = 1;
        while k + delta <= n {
            if t.sym(k) != t.sym(k + delta) {
                k += 1;
                continue;
            }
            let start = k;
            while k + delta <= n && t.sym(k) == t.sym(k + delta) {
                k += 1;
            }
            // positions start..k-1 matched: interval [start, k-1+delta]
            let (lo, hi) = (start, k - 1 + delta);
            if hi - lo + 1 >= 4 * delta && min_period(t.slice(lo, hi)) == delta {
                out.push(PaddedExtension {
                    delta,
                    core: (lo, hi),
                    padded: (lo - 1, hi + 1),
                    content_key: t.substring(lo - 1, hi + 1).expect("in range"),
                });
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle;

    fn t(s: &str) -> Text {
        Text::new(s.as_bytes().to_vec()).unwrap()
    }

    fn ratio(a: u64, b: u64) -> Exponent {
        Exponent::new(a, b)
    }

    #[test]
    fn min_period_examples() {
        assert_eq!(min_period(b"abab"), 2);
        assert_eq!(min_period(b"aaa"), 1);
        assert_eq!(min_period(b"abc"), 3);
    }

    #[test]
    fn min_period_matches_oracle_exhaustively() {
        oracle::for_each_string(2, 14, |s| {
            assert_eq!(min_period(s), oracle::min_period(s));
        });
    }

    #[test]
    fn exponent_examples() {
        assert_eq!(exponent(b"abab"), ratio(2, 1));
        assert_eq!(exponent(b"aabaa"), ratio(5, 3));
        assert_eq!(exponent(b"a"), ratio(1, 1));
    }

    #[test]
    fn primitivity() {
        assert!(is_primitive(b"ab"));
        assert!(is_primitive(b"aab"));
        assert!(!is_primitive(b"abab"));
        assert!(!is_primitive(b"aaaa"));
        assert!(is_primitive(b"aabaa")); // period 3 does not divide 5
    }

    #[test]
    fn max_exponent_examples() {
        let (e, w) = max_exponent(&t("aaa"), MAX_EXPONENT_CAP).unwrap();
        assert_eq!(e, ratio(3, 1));
        assert_eq!((w.length, w.period), (3, 1));
        assert_eq!(q_free_witness(&t("aaa"), MAX_EXPONENT_CAP).unwrap().0, 4);

        let (e, _) = max_exponent(&t("ab"), MAX_EXPONENT_CAP).unwrap();
        assert_eq!(e, ratio(1, 1));
        assert_eq!(q_free_witness(&t("ab"), MAX_EXPONENT_CAP).unwrap().0, 2);
    }

    #[test]
    fn max_exponent_matches_oracle() {
        oracle::for_each_string(2, 10, |s| {
            let x = Text::new(s.to_vec()).unwrap();
            let (e, _) = max_exponent(&x, MAX_EXPONENT_CAP).unwrap();
            let (len, per) = oracle::max_exponent_witness(&x);
            assert_eq!(e, ratio(len as u64, per as u64));
        });
    }

    #[test]
    fn max_exponent_cap_enforced() {
        let err = max_exponent(&t("abcd"), 2).unwrap_err();
        assert!(matches!(err, Error::SizeCapExceeded { stage: "max-exponent", .. }));
    }

    #[test]
    fn extension_examples() {
        let e = maximal_periodic_extension(&t("baaaab"), 2, 3, Some(1)).unwrap();
        assert_eq!(e.core, (2, 5));
        assert_eq!(e.padded, (1, 6));

        let e = maximal_periodic_extension(&t("abababc"), 2, 5, Some(2)).unwrap();
        assert_eq!(e.core, (1, 6));
        assert_eq!(e.padded, (0, 7));

        let e = maximal_periodic_extension(&t("aaa"), 1, 3, Some(1)).unwrap();
        assert_eq!(e.core, (1, 3));
        assert_eq!(e.padded, (0, 4));
        assert_eq!(e.content_key, vec![0, b'a', b'a', b'a', 0]);
    }

    #[test]
    fn extension_idempotent_and_matches_oracle() {
        oracle::for_each_string(2, 9, |s| {
            let x = Text::new(s.to_vec()).unwrap();
            let n = x.len();
            for l in 1..=n {
                for r in l..=n {
                    let delta = min_period(x.slice(l, r));
                    let e = maximal_periodic_extension(&x, l, r, Some(delta)).unwrap();
                    assert_eq!(e.core, oracle::periodic_extension(&x, l, r, delta));
                    let again =
                        maximal_periodic_extension(&x, e.core.0, e.core.1, Some(delta)).unwrap();
                    assert_eq!(again.core, e.core);
                    assert!(e.padded.1 <= n + 1);
                }
            }
        });
    }

    #[test]
    fn extension_rejects_bad_occurrence() {
        assert!(maximal_periodic_extension(&t("abc"), 1, 3, Some(1)).is_err());
        assert!(maximal_periodic_extension(&t("abc"), 2, 1, None).is_err());
        assert!(maximal_periodic_extension(&t("abc"), 1, 2, Some(3)).is_err());
    }

    #[test]
    fn square_suffix_examples() {
        assert_eq!(primitive_square_suffixes(&t("aabab"), 6).unwrap(), vec![4]);
        assert_eq!(primitive_square_suffixes(&t("aaaa"), 5).unwrap(), vec![2]);
        assert!(primitive_square_suffixes(&t("abc"), 4).unwrap().is_empty());
    }

    #[test]
    fn fourth_power_runs_examples() {
        let runs = fourth_power_runs(&t("baaaab"));
        assert_eq!(runs.len(), 1);
        assert_eq!(runs[0].core, (2, 5));
        assert_eq!(runs[0].delta, 1);

        assert!(fourth_power_runs(&t("ab")).is_empty());

        // (ab)^4: one period-2 run; the period-1 candidates are too short.
        let runs = fourth_power_runs(&t("abababab"));
        assert_eq!(runs.len(), 1);
        assert_eq!(runs[0].core, (1, 8));
        assert_eq!(runs[0].delta, 2);
    }
}
