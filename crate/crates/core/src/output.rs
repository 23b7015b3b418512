//! Record encodings for command output: tab-separated text or JSON lines.
//!
//! Scores are always written with exactly four decimals, in both encodings.

use std::io::{self, Write};

use serde::{Serialize, Serializer};
use serde_json::value::RawValue;

use crate::score::Score;
use crate::window::WindowMatch;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Tsv,
    Json,
}

/// Writes a score as a bare JSON number with four decimals.
pub fn serialize_score<S: Serializer>(score: &Score, serializer: S) -> Result<S::Ok, S::Error> {
    let raw = RawValue::from_string(score.to_string()).map_err(serde::ser::Error::custom)?;
    raw.serialize(serializer)
}

pub trait Record: Serialize {
    fn tsv(&self) -> String;

    fn write(&self, format: Format, out: &mut dyn Write) -> io::Result<()> {
        match format {
            Format::Tsv => writeln!(out, "{}", self.tsv()),
            Format::Json => {
                serde_json::to_writer(&mut *out, self)?;
                writeln!(out)
            }
        }
    }
}

#[derive(Debug, Serialize)]
pub struct TraceRecord {
    pub length: usize,
    pub x_subfield: usize,
    pub x_offset: usize,
    pub y_subfield: usize,
    pub y_offset: usize,
    pub contribution: u64,
    pub pattern: String,
}

impl From<&WindowMatch> for TraceRecord {
    fn from(m: &WindowMatch) -> Self {
        TraceRecord {
            length: m.pattern_length,
            x_subfield: m.x_subfield_index,
            x_offset: m.x_offset,
            y_subfield: m.y_subfield_index,
            y_offset: m.y_offset,
            contribution: m.ssnc_contribution,
            pattern: m.pattern.clone(),
        }
    }
}

impl Record for TraceRecord {
    fn tsv(&self) -> String {
        format!(
            "match\t{}\t{}:{}\t{}:{}\t{}\t{}",
            self.length,
            self.x_subfield,
            self.x_offset,
            self.y_subfield,
            self.y_offset,
            self.contribution,
            self.pattern
        )
    }
}

/// `compare` output. In TSV the trace follows the score, one match per line.
#[derive(Debug, Serialize)]
pub struct CompareRecord {
    #[serde(serialize_with = "serialize_score")]
    pub score: Score,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trace: Option<Vec<TraceRecord>>,
}

impl Record for CompareRecord {
    fn tsv(&self) -> String {
        let mut lines = vec![self.score.to_string()];
        lines.extend(self.trace.iter().flatten().map(Record::tsv));
        lines.join("\n")
    }
}

#[derive(Debug, Serialize)]
pub struct RankRecord {
    pub rank: usize,
    pub index: usize,
    #[serde(serialize_with = "serialize_score")]
    pub score: Score,
    pub text: String,
}

impl Record for RankRecord {
    fn tsv(&self) -> String {
        format!(
            "{}\t{}\t{}\t{}",
            self.rank, self.index, self.score, self.text
        )
    }
}

#[derive(Debug, Serialize)]
pub struct PairRecord {
    pub i: usize,
    pub j: usize,
    #[serde(serialize_with = "serialize_score")]
    pub score: Score,
}

impl Record for PairRecord {
    fn tsv(&self) -> String {
        format!("{}\t{}\t{}", self.i, self.j, self.score)
    }
}

#[derive(Debug, Serialize)]
pub struct TableRecord {
    pub fx: String,
    pub fy: String,
    #[serde(serialize_with = "serialize_score")]
    pub expected: Score,
    #[serde(serialize_with = "serialize_score")]
    pub computed: Score,
    pub status: String,
}

impl Record for TableRecord {
    fn tsv(&self) -> String {
        format!(
            "{}\t{}\t{}\t{}\t{}",
            self.fx, self.fy, self.expected, self.computed, self.status
        )
    }
}

#[derive(Debug, Serialize)]
pub struct GenRecord {
    pub index: usize,
    pub text: String,
}

impl Record for GenRecord {
    fn tsv(&self) -> String {
        self.text.clone()
    }
}

#[derive(Debug, Serialize)]
pub struct TimingRecord {
    pub n: usize,
    pub mean_seconds: f64,
}

impl Record for TimingRecord {
    fn tsv(&self) -> String {
        format!("{}\t{:.6e}", self.n, self.mean_seconds)
    }
}
