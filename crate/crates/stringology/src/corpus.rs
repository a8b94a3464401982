//! Deterministic string generators for tests and corpus runs.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::text::Text;

/// Maximum length of a generated random string.
pub const RANDOM_LEN_CAP: usize = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    Fibonacci,
    ThueMorse,
    UnaryPower,
    PaperExample,
    Random,
}

/// A deterministic generator request. The same spec always produces the
/// same bytes; the random family uses ChaCha8 with the given seed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct GeneratorSpec {
    pub family: Family,
    /// Fibonacci: index `n`; Thue-Morse: prefix length; unary power: the
    /// power; random: the length. Ignored for the worked example.
    pub parameter: usize,
    pub seed: u64,
    /// Alphabet size for the random family (symbols `a`, `b`, ...).
    pub alphabet: usize,
}

/// Fibonacci strings with `F_1 = "b"`, `F_2 = "a"`, `F_n = F_{n-1} F_{n-2}`.
///
/// This base-case convention is fixed so that the cyclic BWT of `F_n` is
/// `b^{f_{n-2}} a^{f_{n-1}}` (conventions differ across the literature).
pub fn fibonacci(n: usize) -> Vec<u8> {
    assert!(n >= 1);
    let mut prev: Vec<u8> = b"b".to_vec(); // F_1
    let mut cur: Vec<u8> = b"a".to_vec(); // F_2
    if n == 1 {
        return prev;
    }
    for _ in 3..=n {
        let next = [cur.as_slice(), prev.as_slice()].concat();
        prev = cur;
        cur = next;
    }
    cur
}

/// Length-`len` prefix of the fixed point of `a -> ab`, `b -> ba`.
pub fn thue_morse(len: usize) -> Vec<u8> {
    (0..len)
        .map(|i: usize| if i.count_ones() % 2 == 0 { b'a' } else { b'b' })
        .collect()
}

pub fn unary_power(len: usize) -> Vec<u8> {
    vec![b'a'; len]
}

/// The worked 33-symbol example `b a^10 b a^20 b`.
pub fn paper_example() -> Vec<u8> {
    let mut s = vec![b'b'];
    s.extend(std::iter::repeat(b'a').take(10));
    s.push(b'b');
    s.extend(std::iter::repeat(b'a').take(20));
    s.push(b'b');
    s
}

/// Uniform random string of the given length over symbols `a..`.
pub fn random(len: usize, alphabet: usize, seed: u64) -> Vec<u8> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..len).map(|_| b'a' + rng.gen_range(0..alphabet) as u8).collect()
}

pub fn generate(spec: &GeneratorSpec) -> Result<Text> {
    if spec.parameter == 0 && spec.family != Family::PaperExample {
        return Err(Error::InvalidParameter("parameter must be >= 1".into()));
    }
    let bytes = match spec.family {
        Family::Fibonacci => fibonacci(spec.parameter),
        Family::ThueMorse => thue_morse(spec.parameter),
        Family::UnaryPower => unary_power(spec.parameter),
        Family::PaperExample => paper_example(),
        Family::Random => {
            if spec.parameter > RANDOM_LEN_CAP {
                return Err(Error::InvalidParameter(format!(
                    "random length {} exceeds {}",
                    spec.parameter, RANDOM_LEN_CAP
                )));
            }
            if spec.alphabet == 0 || spec.alphabet > 26 {
                return Err(Error::InvalidParameter(format!(
                    "random alphabet size {} outside 1..=26",
                    spec.alphabet
                )));
            }
            random(spec.parameter, spec.alphabet, spec.seed)
        }
    };
    Text::new(bytes)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::periodicity;

    #[test]
    fn fibonacci_convention() {
        assert_eq!(fibonacci(1), b"b");
        assert_eq!(fibonacci(2), b"a");
        assert_eq!(fibonacci(3), b"ab");
        assert_eq!(fibonacci(5), b"abaab");
        assert_eq!(fibonacci(7), b"abaababaabaab");
    }

    #[test]
    fn fibonacci_lengths() {
        let (mut a, mut b) = (1usize, 1usize);
        for n in 3..=20 {
            let len = a + b;
            assert_eq!(fibonacci(n).len(), len);
            a = b;
            b = len;
        }
    }

    #[test]
    fn thue_morse_prefix() {
        assert_eq!(thue_morse(8), b"abbabaab");
    }

    #[test]
    fn thue_morse_is_cube_free() {
        let x = Text::new(thue_morse(64)).unwrap();
        let (e, _) = periodicity::max_exponent(&x, 4096).unwrap();
        assert_eq!(e, crate::Exponent::new(2, 1));
        assert_eq!(periodicity::q_free_witness(&x, 4096).unwrap().0, 3);
    }

    #[test]
    fn paper_example_shape() {
        let s = paper_example();
        assert_eq!(s.len(), 33);
        assert_eq!(s, b"baaaaaaaaaabaaaaaaaaaaaaaaaaaaaab".to_vec());
    }

    #[test]
    fn random_is_reproducible() {
        let a = random(100, 3, 42);
        let b = random(100, 3, 42);
        assert_eq!(a, b);
        assert!(a.iter().all(|&c| (b'a'..b'a' + 3).contains(&c)));
        assert_ne!(random(100, 3, 43), a);
    }

    #[test]
    fn generate_validates() {
        let bad = GeneratorSpec {
            family: Family::UnaryPower,
            parameter: 0,
            seed: 0,
            alphabet: 2,
        };
        assert!(generate(&bad).is_err());
    }
}
