//! Batch scoring: rank candidates against a query, or list near-duplicate
//! pairs within a set of records.
//!
//! Scoring runs in parallel; output order depends only on scores and input
//! positions.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::score::Score;
use crate::similarity::{similarity, Mode};

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RankedCandidate {
    /// Position in the input.
    pub index: usize,
    pub text: String,
    #[serde(serialize_with = "crate::output::serialize_score")]
    pub score: Score,
    /// 1-based.
    pub rank: usize,
}

/// Scores every candidate as `similarity(query, candidate)` and sorts by
/// descending score, ties by input position.
pub fn rank<S>(
    query: &str,
    candidates: &[S],
    mode: Mode,
    top_k: Option<usize>,
) -> Result<Vec<RankedCandidate>>
where
    S: AsRef<str> + Sync,
{
    if top_k == Some(0) {
        return Err(Error::ZeroTopK);
    }
    let query = Field::new(query);
    let mut scored: Vec<(usize, Score)> = candidates
        .par_iter()
        .enumerate()
        .map(|(index, text)| {
            (
                index,
                similarity(&query, &Field::new(text.as_ref()), mode).score,
            )
        })
        .collect();
    scored.sort_by(|a, b| b.1.cmp(&a.1).then(a.0.cmp(&b.0)));
    scored.truncate(top_k.unwrap_or(usize::MAX));

    Ok(scored
        .into_iter()
        .enumerate()
        .map(|(position, (index, score))| RankedCandidate {
            index,
            text: candidates[index].as_ref().to_owned(),
            score,
            rank: position + 1,
        })
        .collect())
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct DuplicatePair {
    pub i: usize,
    pub j: usize,
    #[serde(serialize_with = "crate::output::serialize_score")]
    pub score: Score,
}

/// All pairs `i < j` with `similarity(records[i], records[j]) >= threshold`,
/// by descending score, then `(i, j)`.
pub fn dedup_pairs<S>(records: &[S], mode: Mode, threshold: f64) -> Result<Vec<DuplicatePair>>
where
    S: AsRef<str> + Sync,
{
    if !(0.0..=1.0).contains(&threshold) {
        return Err(Error::ThresholdOutOfRange(threshold));
    }
    let fields: Vec<Field> = records.iter().map(|r| Field::new(r.as_ref())).collect();
    let mut pairs: Vec<DuplicatePair> = (0..fields.len())
        .into_par_iter()
        .flat_map_iter(|i| {
            let fields = &fields;
            (i + 1..fields.len()).filter_map(move |j| {
                let score = similarity(&fields[i], &fields[j], mode).score;
                (score.value() >= threshold).then_some(DuplicatePair { i, j, score })
            })
        })
        .collect();
    pairs.sort_by(|a, b| b.score.cmp(&a.score).then((a.i, a.j).cmp(&(b.i, b.j))));
    Ok(pairs)
}
