//! Field similarity scoring with the modified moving contracting window
//! pattern algorithm (MMCWPA).
//!
//! A window starts at the length of the shorter field and slides over the
//! first field looking for an exact occurrence in the second. Every match
//! contributes `(2 * length)^2` to the SSNC accumulator and turns the matched
//! units into boundaries that later windows cannot cross. Once no pattern of
//! the current length matches, the window contracts by one unit. The final
//! score is `sqrt(SSNC) / (n + m)`.
//!
//! ```
//! use fieldsim::{similarity_str, Mode};
//!
//! let result = similarity_str("Austria", "Australia", Mode::Mmcwpa);
//! assert_eq!(result.score.to_string(), "0.6731");
//! assert_eq!(result.ssnc, 116);
//! ```
//!
//! The uncorrected variant, where windows may span already matched units, is
//! available as [`Mode::McwpaLegacy`], and a Levenshtein ratio is provided as
//! a baseline.

pub mod baselines;
pub mod cli;
pub mod corpusgen;
mod error;
mod field;
mod fingerprint;
pub mod output;
pub mod ranking;
mod score;
mod similarity;
pub mod table;
mod window;

pub use baselines::{levenshtein, EditDistanceResult};
pub use error::{Error, Result};
pub use field::Field;
pub use score::Score;
pub use similarity::{compute_ssnc, similarity, similarity_str, Mode, SimilarityResult};
pub use window::{enumerate_patterns, find_match, SubfieldList, WindowMatch};
