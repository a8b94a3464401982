//! The subject string with its virtual sentinels.
//!
//! A [`Text`] owns the symbols `S[1..|S|]` and answers `S[0] = S[|S|+1] = $`
//! for the two virtual sentinel positions. The sentinel is represented by
//! the byte `0x00`, which is rejected on ingestion, and it compares
//! lexicographically smaller than every alphabet symbol.

use std::io::Read;

use crate::error::{Error, Result};

/// Internal representation of the sentinel symbol `$`.
pub const SENTINEL: u8 = 0;

/// An immutable subject string, 1-indexed, with sentinels at `0` and `|S|+1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Text {
    /// `padded[0] = padded[|S|+1] = SENTINEL`, `padded[i] = S[i]` otherwise.
    padded: Vec<u8>,
}

/// The one-symbol contexts around a positioned substring: `S[n-1]`,
/// `S[n..n+l-1]` and `S[n+l]`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Context {
    pub left: u8,
    pub body: Vec<u8>,
    pub right: u8,
}

impl Text {
    /// Ingests raw bytes. Rejects empty input and the reserved byte `0x00`.
    pub fn new(bytes: impl Into<Vec<u8>>) -> Result<Self> {
        let data: Vec<u8> = bytes.into();
        if data.is_empty() {
            return Err(Error::EmptyText);
        }
        if let Some(offset) = data.iter().position(|&b| b == SENTINEL) {
            return Err(Error::ReservedByte { offset });
        }
        let mut padded = Vec::with_capacity(data.len() + 2);
        padded.push(SENTINEL);
        padded.extend_from_slice(&data);
        padded.push(SENTINEL);
        Ok(Text { padded })
    }

    /// Reads the whole reader as raw bytes, optionally stripping one
    /// trailing newline (`\n` or `\r\n`).
    pub fn from_reader(mut reader: impl Read, strip_newline: bool) -> Result<Self> {
        let mut data = Vec::new();
        reader.read_to_end(&mut data)?;
        if strip_newline {
            if data.last() == Some(&b'\n') {
                data.pop();
            }
            if data.last() == Some(&b'\r') {
                data.pop();
            }
        }
        Text::new(data)
    }

    pub fn from_path(path: &std::path::Path, strip_newline: bool) -> Result<Self> {
        let file = std::fs::File::open(path)?;
        Text::from_reader(file, strip_newline)
    }

    /// Number of symbols `|S|` (sentinels excluded).
    pub fn len(&self) -> usize {
        self.padded.len() - 2
    }

    pub fn is_empty(&self) -> bool {
        false // |S| >= 1 by construction
    }

    /// `S[i]` for `0 <= i <= |S|+1`; the sentinel exactly at the ends.
    pub fn char_at(&self, i: usize) -> Result<u8> {
        self.padded
            .get(i)
            .copied()
            .ok_or(Error::IndexOutOfRange { index: i, max: self.len() + 1 })
    }

    /// Unchecked `S[i]`; callers guarantee `0 <= i <= |S|+1`.
    #[inline]
    pub fn sym(&self, i: usize) -> u8 {
        self.padded[i]
    }

    /// The symbols of `S` without sentinels.
    pub fn bytes(&self) -> &[u8] {
        &self.padded[1..self.padded.len() - 1]
    }

    /// `S$`: the symbols of `S` followed by one sentinel byte.
    pub fn with_sentinel(&self) -> &[u8] {
        &self.padded[1..]
    }

    /// Distinct alphabet symbols of `S` (sentinel excluded).
    pub fn alphabet(&self) -> Vec<u8> {
        let mut seen = [false; 256];
        for &b in self.bytes() {
            seen[b as usize] = true;
        }
        (0u8..=255).filter(|&b| seen[b as usize]).collect()
    }

    /// `S[i..j]`; empty when `i > j`. Sentinel positions are included as
    /// sentinel bytes.
    pub fn substring(&self, i: usize, j: usize) -> Result<Vec<u8>> {
        let max = self.len() + 1;
        if i > j {
            // i > j is the empty string, but i may be at most |S|+2.
            if i <= max + 1 && j <= max {
                return Ok(Vec::new());
            }
            return Err(Error::IndexOutOfRange { index: i.max(j), max });
        }
        if j > max {
            return Err(Error::IndexOutOfRange { index: j, max });
        }
        Ok(self.padded[i..=j].to_vec())
    }

    /// Borrowed `S[i..j]` for `1 <= i <= j <= |S|` (interior only).
    pub fn slice(&self, i: usize, j: usize) -> &[u8] {
        &self.padded[i..=j]
    }

    /// Longest common extension of the suffixes starting at `n` and `m`,
    /// comparing against the sentinel past the end. Character-by-character;
    /// see [`crate::LceIndex`] for the constant-time version.
    pub fn lce(&self, n: usize, m: usize) -> Result<usize> {
        let len = self.len();
        if n == 0 || n > len || m == 0 || m > len {
            return Err(Error::IndexOutOfRange { index: n.max(m), max: len });
        }
        if n == m {
            // All comparable positions trivially agree.
            return Ok(len + 2 - n);
        }
        let mut l = 0;
        while n + l <= len + 1 && m + l <= len + 1 && self.padded[n + l] == self.padded[m + l] {
            l += 1;
        }
        Ok(l)
    }

    /// The context of the positioned substring `S[n..n+l-1]`.
    pub fn context(&self, n: usize, l: usize) -> Result<Context> {
        let len = self.len();
        if n == 0 || n + l > len + 2 || n > len + 1 {
            return Err(Error::IndexOutOfRange { index: n, max: len });
        }
        Ok(Context {
            left: self.padded[n - 1],
            body: self.padded[n..n + l].to_vec(),
            right: self.padded[n + l],
        })
    }
}

/// Renders bytes for human output: the sentinel becomes `$`, printable
/// ASCII is kept, everything else is hex-escaped.
pub fn render_human(bytes: &[u8]) -> String {
    let mut out = String::new();
    for &b in bytes {
        match b {
            SENTINEL => out.push('$'),
            0x20..=0x7e => out.push(b as char),
            _ => out.push_str(&format!("\\x{b:02x}")),
        }
    }
    out
}

/// Renders bytes for JSON output: the sentinel becomes the literal text
/// `\x00`, as do all non-printable bytes.
pub fn render_escaped(bytes: &[u8]) -> String {
    let mut out = String::new();
    for &b in bytes {
        match b {
            0x20..=0x7e if b != b'\\' => out.push(b as char),
            _ => out.push_str(&format!("\\x{b:02x}")),
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> Text {
        Text::new(s.as_bytes().to_vec()).unwrap()
    }

    #[test]
    fn char_at_sentinels_and_interior() {
        let x = t("aba");
        assert_eq!(x.char_at(0).unwrap(), SENTINEL);
        assert_eq!(x.char_at(2).unwrap(), b'b');
        assert_eq!(x.char_at(4).unwrap(), SENTINEL);
        assert!(x.char_at(5).is_err());
    }

    #[test]
    fn substring_rules() {
        let x = t("abc");
        assert_eq!(x.substring(2, 3).unwrap(), b"bc");
        assert_eq!(x.substring(3, 2).unwrap(), b"");
        assert_eq!(x.substring(0, 4).unwrap(), vec![0, b'a', b'b', b'c', 0]);
        assert_eq!(x.substring(5, 4).unwrap(), b""); // i = |S|+2 allowed when i > j
        assert!(x.substring(2, 5).is_err());
    }

    #[test]
    fn substring_length_identity() {
        let x = t("abcd");
        for i in 0..=6 {
            for j in 0..=5 {
                if let Ok(s) = x.substring(i, j) {
                    assert_eq!(s.len(), (j + 1).saturating_sub(i));
                }
            }
        }
    }

    #[test]
    fn lce_examples() {
        assert_eq!(t("abab").lce(1, 3).unwrap(), 2);
        assert_eq!(t("aaa").lce(1, 2).unwrap(), 2);
        assert_eq!(t("ab").lce(1, 2).unwrap(), 0);
    }

    #[test]
    fn lce_symmetry_and_mismatch() {
        let x = t("abaababa");
        let n = x.len();
        for a in 1..=n {
            for b in 1..=n {
                if a == b {
                    continue;
                }
                let l = x.lce(a, b).unwrap();
                assert_eq!(l, x.lce(b, a).unwrap());
                // The first position past the extension is a real mismatch.
                assert_ne!(x.sym(a + l), x.sym(b + l));
            }
        }
    }

    #[test]
    fn rejects_reserved_byte_and_empty() {
        assert!(matches!(Text::new(vec![b'a', 0, b'b']), Err(Error::ReservedByte { offset: 1 })));
        assert!(matches!(Text::new(Vec::new()), Err(Error::EmptyText)));
    }

    #[test]
    fn newline_stripping() {
        let x = Text::from_reader(&b"abc\r\n"[..], true).unwrap();
        assert_eq!(x.bytes(), b"abc");
        let y = Text::from_reader(&b"abc\n"[..], false);
        assert_eq!(y.unwrap().bytes(), b"abc\n");
    }

    #[test]
    fn rendering() {
        let x = t("ab");
        assert_eq!(render_human(&x.substring(0, 3).unwrap()), "$ab$");
        assert_eq!(render_escaped(&x.substring(0, 3).unwrap()), "\\x00ab\\x00");
    }
}
