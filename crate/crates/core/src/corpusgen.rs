//! Weighted random corpora and a timing probe for the scorer.
//!
//! # Sampling procedure
//!
//! The generator is ChaCha8 (`rand_chacha::ChaCha8Rng`) seeded with
//! `seed_from_u64(seed)`; its output stream is fixed across platforms and
//! crate versions. Weights are normalized to probabilities `p_i = w_i / Σw`
//! in table order and accumulated into `c_i = p_0 + … + p_i`. Each token is
//! drawn by taking one `u64` from the generator, forming
//! `u = (x >> 11) * 2^-53` in `[0, 1)`, and choosing the first entry with
//! `u < c_i` (the last entry if rounding leaves `u` above every `c_i`).
//! Tokens are appended until the output has at least `target_length` units,
//! then the output is truncated to exactly `target_length` units.
//!
//! Consecutive outputs from one [`CorpusGenerator`] continue the same stream.

use std::fs;
use std::path::Path;
use std::time::{Duration, Instant};

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use crate::error::{Error, Result};
use crate::field::Field;
use crate::similarity::{similarity, Mode};

pub const MAX_TOKEN_UNITS: usize = 8;

#[derive(Clone, Debug, PartialEq)]
pub struct WeightTable {
    tokens: Vec<String>,
    probabilities: Vec<f64>,
    cumulative: Vec<f64>,
}

impl WeightTable {
    /// Tokens must be 1 to 8 units long and distinct; weights finite and
    /// positive. Entry order is kept.
    pub fn new<S: Into<String>>(entries: impl IntoIterator<Item = (S, f64)>) -> Result<Self> {
        let mut tokens: Vec<String> = Vec::new();
        let mut weights = Vec::new();
        for (token, weight) in entries {
            let token = token.into();
            let invalid = |reason: &str| Error::InvalidWeightEntry {
                token: token.clone(),
                reason: reason.to_owned(),
            };
            let units = token.chars().count();
            if units == 0 || units > MAX_TOKEN_UNITS {
                return Err(invalid("token must be 1 to 8 units long"));
            }
            if !(weight.is_finite() && weight > 0.0) {
                return Err(invalid("weight must be a positive number"));
            }
            if tokens.contains(&token) {
                return Err(invalid("duplicate token"));
            }
            tokens.push(token);
            weights.push(weight);
        }
        if tokens.is_empty() {
            return Err(Error::EmptyWeightTable);
        }
        let total: f64 = weights.iter().sum();
        let probabilities: Vec<f64> = weights.iter().map(|w| w / total).collect();
        let cumulative = probabilities
            .iter()
            .scan(0.0, |acc, p| {
                *acc += p;
                Some(*acc)
            })
            .collect();
        Ok(WeightTable {
            tokens,
            probabilities,
            cumulative,
        })
    }

    /// Parses `TOKEN<TAB>WEIGHT` lines. Blank lines and lines starting with
    /// `#` are skipped.
    pub fn parse(text: &str) -> Result<Self> {
        let mut entries = Vec::new();
        for (number, line) in text.lines().enumerate() {
            let line_no = number + 1;
            let trimmed = line.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            let malformed = |reason: String| Error::MalformedWeightLine {
                line: line_no,
                reason,
            };
            let (token, weight) = line
                .split_once('\t')
                .ok_or_else(|| malformed("expected TOKEN<TAB>WEIGHT".into()))?;
            let weight: f64 = weight
                .trim()
                .parse()
                .map_err(|_| malformed(format!("invalid weight {:?}", weight.trim())))?;
            if token.is_empty() || token.chars().count() > MAX_TOKEN_UNITS {
                return Err(malformed(format!(
                    "token {token:?} must be 1 to 8 units long"
                )));
            }
            if !(weight.is_finite() && weight > 0.0) {
                return Err(malformed(format!("weight {weight} must be positive")));
            }
            if entries.iter().any(|(t, _): &(&str, f64)| *t == token) {
                return Err(malformed(format!("duplicate token {token:?}")));
            }
            entries.push((token, weight));
        }
        WeightTable::new(entries)
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = fs::read_to_string(path).map_err(|source| Error::Io {
            path: path.to_owned(),
            source,
        })?;
        Self::parse(&text)
    }

    /// The 64 codons with equal weight.
    pub fn uniform_codons() -> Self {
        const BASES: [char; 4] = ['A', 'C', 'G', 'T'];
        let codons = BASES.iter().flat_map(|&a| {
            BASES.iter().flat_map(move |&b| {
                BASES
                    .iter()
                    .map(move |&c| (String::from_iter([a, b, c]), 1.0))
            })
        });
        WeightTable::new(codons).expect("codon table is valid")
    }

    pub fn tokens(&self) -> &[String] {
        &self.tokens
    }

    /// Normalized weights, in table order.
    pub fn probabilities(&self) -> &[f64] {
        &self.probabilities
    }

    fn pick(&self, u: f64) -> usize {
        self.cumulative
            .iter()
            .position(|&c| u < c)
            .unwrap_or(self.tokens.len() - 1)
    }
}

pub struct CorpusGenerator<'a> {
    table: &'a WeightTable,
    rng: ChaCha8Rng,
}

impl<'a> CorpusGenerator<'a> {
    pub fn new(table: &'a WeightTable, seed: u64) -> Self {
        CorpusGenerator {
            table,
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    /// Index of the next sampled token.
    pub fn next_index(&mut self) -> usize {
        let u = (self.rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64);
        self.table.pick(u)
    }

    pub fn generate(&mut self, target_length: usize) -> String {
        let mut units: Vec<char> = Vec::with_capacity(target_length + MAX_TOKEN_UNITS);
        while units.len() < target_length {
            let token = &self.table.tokens[self.next_index()];
            units.extend(token.chars());
        }
        units.truncate(target_length);
        units.into_iter().collect()
    }
}

/// One string of exactly `target_length` units.
pub fn generate(table: &WeightTable, target_length: usize, seed: u64) -> String {
    CorpusGenerator::new(table, seed).generate(target_length)
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TimingRow {
    pub n: usize,
    pub mean: Duration,
}

/// Mean wall-clock time of an MMCWPA comparison between two random fields
/// of length `n`, for each `n`. Fields are drawn from
/// [`WeightTable::uniform_codons`], one fresh pair per trial.
pub fn time_compare(n_values: &[usize], trials: usize, seed: u64) -> Result<Vec<TimingRow>> {
    if trials == 0 {
        return Err(Error::ZeroTrials);
    }
    let table = WeightTable::uniform_codons();
    let mut generator = CorpusGenerator::new(&table, seed);
    Ok(n_values
        .iter()
        .map(|&n| {
            let mut total = Duration::ZERO;
            for _ in 0..trials {
                let x = Field::new(&generator.generate(n));
                let y = Field::new(&generator.generate(n));
                let start = Instant::now();
                let result = similarity(&x, &y, Mode::Mmcwpa);
                total += start.elapsed();
                std::hint::black_box(result);
            }
            TimingRow {
                n,
                mean: total / trials as u32,
            }
        })
        .collect())
}
