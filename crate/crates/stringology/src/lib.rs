//! Repetitiveness measures for strings.
//!
//! This crate computes, for a subject string `S` over a byte alphabet:
//!
//! * the Burrows-Wheeler transform of `S$` (via the sorted acyclic
//!   permutations) and its run decomposition ([`bwt`]),
//! * the self-referential LZ77 factorization ([`lz77`]),
//! * maximal pairs, maximal repeats, their copy classes and the derived
//!   CDAWG node/arc counts ([`repeats`]),
//! * minimal periods, fractional-power exponents and (padded) maximal
//!   periodic extensions ([`periodicity`]),
//! * a taxonomy of maximal pairs relative to LZ77 factor boundaries
//!   ([`taxonomy`]),
//! * the map from RLBWT run boundaries to maximal pairs ([`bwt_map`]), and
//! * a verifier that evaluates every known upper bound tying these
//!   quantities together and reports measured-vs-bound verdicts
//!   ([`bounds`]).
//!
//! All positions are 1-based; position `0` and position `|S|+1` hold a
//! virtual sentinel that is distinct from (and smaller than) every
//! alphabet symbol. Every nontrivial computation has a brute-force
//! counterpart in [`oracle`] that defines correctness and is exercised by
//! the test suite over exhaustively enumerated small strings.
//!
//! See the `examples/` directory for one runnable example per capability.

pub mod bounds;
pub mod bwt;
pub mod bwt_map;
pub mod corpus;
pub mod error;
pub mod lce;
pub mod lz77;
pub mod oracle;
pub mod periodicity;
pub mod repeats;
pub mod taxonomy;
pub mod text;

pub use error::{Error, Result};
pub use lce::LceIndex;
pub use text::{Context, Text, SENTINEL};

/// Exact rational used for fractional-power exponents.
pub type Exponent = num_rational::Ratio<u64>;
