//! Published reference scores and a runner that checks them.
//!
//! Reference values are quoted truncated to four decimals, so a row passes
//! when the computed score, truncated the same way, is equal to within
//! `TOLERANCE`.

use std::fmt;

use crate::score::Score;
use crate::similarity::{similarity_str, Mode};

pub const TOLERANCE: f64 = 5e-5;

#[derive(Clone, Copy, Debug)]
pub struct Fixture {
    pub fx: &'static str,
    pub fy: &'static str,
    /// Published score, in ten-thousandths.
    pub expected: u32,
    /// Set when the published score cannot be reproduced; holds the value
    /// the algorithm actually produces, in ten-thousandths.
    pub algorithmic: Option<u32>,
}

const fn row(fx: &'static str, fy: &'static str, expected: u32) -> Fixture {
    Fixture {
        fx,
        fy,
        expected,
        algorithmic: None,
    }
}

pub const FIXTURES: [Fixture; 16] = [
    row("abc", "def", 0),
    row("abcdef", "abcdef", 10_000),
    row("Austria", "Australia", 6731),
    row("Python", "python", 8333),
    // ssnc = 36 + 4 + 4 under any scan that respects subfield boundaries;
    // 0.6982 would need ssnc = 48.75.
    Fixture {
        fx: "a123b",
        fy: "ab123",
        expected: 6982,
        algorithmic: Some(6633),
    },
    row("129 Industry Park", "129 Indisttry Park", 6101),
    row("abc de", "abc k de", 6388),
    row("de abc", "de abc", 10_000),
    row("abc de", "de abc", 6236),
    row("Fu Hui", "Mr Fu Hui", 8000),
    row("Fu Hui", "Fu Mr Hui", 5962),
    row("abcdefgh ijklmnpo", "abcdefgh ijklmnwo", 8843),
    row("akabc axyz mo", "aabc axyz muo", 7768),
    row("abcdefagha", "aijklamabc", 3316),
    row("Gao Hua Ming", "Gao Ming Hua", 5892),
    row("zeng zeng", "zeng hong", 5983),
];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    /// Published value differs, but the score equals the known algorithmic
    /// value.
    KnownDiff,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::KnownDiff => "KNOWN-DIFF",
        })
    }
}

#[derive(Clone, Debug)]
pub struct RowResult {
    pub fixture: Fixture,
    pub computed: Score,
    pub status: Status,
}

impl RowResult {
    pub fn expected(&self) -> Score {
        Score::ratio(self.fixture.expected as u64, 10_000)
    }
}

fn agrees(computed: &Score, ten_thousandths: u32) -> bool {
    let shown = computed.ten_thousandths() as f64 / 10_000.0;
    (shown - ten_thousandths as f64 / 10_000.0).abs() <= TOLERANCE
}

pub fn run_table(mode: Mode) -> Vec<RowResult> {
    FIXTURES
        .iter()
        .map(|&fixture| {
            let computed = similarity_str(fixture.fx, fixture.fy, mode).score;
            let status = match fixture.algorithmic {
                _ if agrees(&computed, fixture.expected) => Status::Pass,
                Some(value) if agrees(&computed, value) => Status::KnownDiff,
                _ => Status::Fail,
            };
            RowResult {
                fixture,
                computed,
                status,
            }
        })
        .collect()
}

pub fn all_pass(rows: &[RowResult]) -> bool {
    rows.iter().all(|r| r.status != Status::Fail)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fifteen_pass_one_known_diff() {
        let rows = run_table(Mode::Mmcwpa);
        let count = |s| rows.iter().filter(|r| r.status == s).count();
        assert_eq!(count(Status::Pass), 15);
        assert_eq!(count(Status::KnownDiff), 1);
        assert!(all_pass(&rows));
        let diff = rows.iter().find(|r| r.status == Status::KnownDiff).unwrap();
        assert_eq!(diff.fixture.fx, "a123b");
        assert_eq!(diff.computed.to_string(), "0.6633");
    }

    #[test]
    fn legacy_mode_fails_multi_token_row() {
        let rows = run_table(Mode::McwpaLegacy);
        let gao = rows
            .iter()
            .find(|r| r.fixture.fx == "Gao Hua Ming")
            .unwrap();
        assert_eq!(gao.status, Status::Fail);
        assert!(!all_pass(&rows));
    }
}
