//! Exact sl(2)-character computations for representations of sl(n).
//!
//! The crate restricts irreducible sl(n)-representations to the principal
//! sl(2)-subalgebra (and to arbitrary sl(2)-subalgebras given by a
//! composition of n), decomposes the resulting characters into irreducible
//! sl(2)-types, and checks the lowest-type bound `min_dim(λ) ≤ n` over
//! exhaustive ranges of highest weights.
//!
//! Everything is exact: coefficients are arbitrary-precision integers.
//!
//! | module         | contents                                                     |
//! |----------------|--------------------------------------------------------------|
//! | [`laurent`]    | Laurent polynomials in `q`, `χ_d`, symmetric/exterior powers |
//! | [`sl2`]        | decompositions, `S^m(F_d)`, `Λ^k(F_d)`, lowest types `ℓ(m,d)` |
//! | [`partitions`] | Young diagrams, Pieri strips, even-row/column completions    |
//! | [`branching`]  | principal specialization, `min_dim`, bound verification      |
//! | [`embeddings`] | non-principal embeddings via compositions of `n`            |
//!
//! With the default `parallel` feature the sweeps in [`branching`],
//! [`embeddings`] and [`sl2`] fan out over a rayon pool; without it they run
//! sequentially. Output is identical either way.

pub mod branching;
pub mod embeddings;
mod error;
pub mod laurent;
pub mod par;
pub mod partitions;
pub mod sl2;

pub use branching::BoundReport;
pub use embeddings::EmbeddingSpec;
pub use error::{Error, Result};
pub use laurent::LaurentPoly;
pub use par::Execution;
pub use partitions::Partition;
pub use sl2::Sl2Decomposition;
