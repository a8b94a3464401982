//! Randomized structural invariants over arbitrary short texts.

use proptest::prelude::*;

use stringology::bwt;
use stringology::lce::LceIndex;
use stringology::lz77::lz77;
use stringology::periodicity::{exponent, min_period};
use stringology::text::Text;

fn text_strategy() -> impl Strategy<Value = Text> {
    proptest::collection::vec(1u8..=5, 1..60)
        .prop_map(|v| Text::new(v.iter().map(|c| b'a' + c - 1).collect::<Vec<u8>>()).unwrap())
}

proptest! {
    #[test]
    fn lce_is_symmetric_and_bounded(t in text_strategy(), a in 1usize..60, b in 1usize..60) {
        let n = t.len();
        let (a, b) = (a.min(n), b.min(n));
        let index = LceIndex::new(&t);
        let l = index.lce(a, b);
        prop_assert_eq!(l, index.lce(b, a));
        if a == b {
            // Equal positions match through the trailing sentinel.
            prop_assert_eq!(l, n + 2 - a);
        } else {
            prop_assert!(l <= n + 1 - a.max(b));
            prop_assert_eq!(t.slice(a, a + l - 1), t.slice(b, b + l - 1));
            // Maximality: the next symbols differ (sentinel included).
            prop_assert!(t.sym(a + l) != t.sym(b + l));
        }
    }

    #[test]
    fn bwt_round_trips(t in text_strategy()) {
        let profile = bwt::bwt(&t);
        prop_assert_eq!(bwt::invert_bwt(&profile.bwt), t.bytes().to_vec());
        // Runs tile the transform with adjacent runs differing.
        let total: usize = profile.runs.iter().map(|r| r.length).sum();
        prop_assert_eq!(total, t.len() + 1);
        prop_assert_eq!(profile.runs.len(), profile.r);
        for w in profile.runs.windows(2) {
            prop_assert_eq!(w[1].start, w[0].start + w[0].length);
            prop_assert_ne!(w[0].symbol, w[1].symbol);
        }
    }

    #[test]
    fn lz77_factors_tile_the_text(t in text_strategy()) {
        let parse = lz77(&t).unwrap();
        prop_assert_eq!(parse.z, parse.factors.len());
        let mut next = 1usize;
        for f in &parse.factors {
            prop_assert_eq!(f.start, next);
            prop_assert!(f.length >= 1);
            next += f.length;
        }
        prop_assert_eq!(next, t.len() + 1);
    }

    #[test]
    fn minimal_period_divides_content(t in text_strategy()) {
        let w = t.bytes();
        let p = min_period(w);
        prop_assert!(1 <= p && p <= w.len());
        for i in 0..w.len() - p {
            prop_assert_eq!(w[i], w[i + p]);
        }
        prop_assert_eq!(exponent(w), stringology::Exponent::new(w.len() as u64, p as u64));
    }

    #[test]
    fn substring_has_requested_length(t in text_strategy(), i in 1usize..60, j in 1usize..60) {
        let n = t.len();
        let (i, j) = (i.min(n), j.min(n));
        let (i, j) = (i.min(j), i.max(j));
        let s = t.substring(i, j).unwrap();
        prop_assert_eq!(s.len(), j - i + 1);
        prop_assert_eq!(&s[..], t.slice(i, j));
    }
}
