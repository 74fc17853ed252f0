//! Core algorithms for IR-based bug localization.
//!
//! This crate is `no_std` + `alloc`: it contains only pure computation and is
//! free of file, network, and clock access. The companion `brain` crate adds
//! corpus ingestion, index persistence, the HTTP relevance oracle, the
//! evaluation harness, and the CLI.
//!
//! The pipeline stages, in order:
//!
//! 1. [`text`] — shared preprocessing (camel-case splitting, lowercasing,
//!    stop-word and keyword removal) applied to documents and queries alike.
//! 2. [`index`] — an inverted index with Okapi BM25 scoring, system/version
//!    filtering, and top-K retrieval.
//! 3. [`segment`] — a tolerant Java scanner that extracts member-level code
//!    segments and declaration signatures.
//! 4. [`feedback`] — prompt construction and verdict parsing for the binary
//!    relevance oracle, with document-level aggregation.
//! 5. [`graph`] — a co-occurrence term graph over signature phrases, PageRank
//!    term weighting, and query expansion.
//! 6. [`rank`] — candidate reranking with the expanded query, softmax
//!    normalization, relevance gating, and the final ordering contract.
//! 7. [`metrics`] — AP@K, reciprocal rank, and HIT@K.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod feedback;
pub mod graph;
pub mod index;
pub mod metrics;
pub mod rank;
pub mod segment;
pub mod text;
pub mod types;

pub use index::{Bm25Params, InvertedIndex, Query, SearchHit};
pub use rank::{Mode, RankedResult, ScoredDocument};
pub use text::TokenStream;
pub use types::{BugReport, SourceDocument};
