//! Viewpoint-based extractive summarization of term descriptions.
//!
//! Many ranked paragraph descriptions of one term are reduced to a short
//! list of sentences, one or more per viewpoint (definition, abbreviation,
//! history, ...). The pipeline has four steps:
//!
//! 1. [`segmenter`] cuts paragraphs into simple sentences.
//! 2. [`classifier`] groups them by viewpoint: patterns first, then Dice
//!    similarity to already-classified sentences, then a miscellaneous
//!    fallback.
//! 3. [`selector`] scores sentences inside each group and picks
//!    representatives, plus mutually dissimilar miscellaneous sentences.
//! 4. [`summarizer`] assembles the score-ordered summary.
//!
//! [`evaluation`] holds the compression and coverage metrics and the
//! lead-baseline experiment. The crate is `no_std` and needs only `alloc`.
#![no_std]

extern crate alloc;

pub mod classifier;
pub mod corpus;
mod error;
pub mod evaluation;
pub mod patterns;
pub mod segmenter;
pub mod selector;
pub mod summarizer;

pub use error::{Error, Result};
