use std::cmp::Ordering;
use std::fmt;

/// A similarity score in `[0, 1]`, kept in exact form so that ordering and
/// the four-decimal display never suffer from floating-point drift.
///
/// Display truncates toward zero at four decimals, which is the convention
/// of the published reference scores (`sqrt(80/196) = 0.638877…` is listed
/// as `0.6388`).
#[derive(Clone, Copy, Debug)]
pub enum Score {
    /// `sqrt(ssnc) / total`.
    Root { ssnc: u64, total: u64 },
    /// `numerator / denominator`.
    Ratio { numerator: u64, denominator: u64 },
}

impl Score {
    pub const ZERO: Score = Score::Ratio {
        numerator: 0,
        denominator: 1,
    };
    pub const ONE: Score = Score::Ratio {
        numerator: 1,
        denominator: 1,
    };

    pub fn root(ssnc: u64, total: u64) -> Self {
        assert!(total > 0, "score denominator must be positive");
        Score::Root { ssnc, total }
    }

    pub fn ratio(numerator: u64, denominator: u64) -> Self {
        assert!(denominator > 0, "score denominator must be positive");
        Score::Ratio {
            numerator,
            denominator,
        }
    }

    pub fn value(&self) -> f64 {
        match *self {
            Score::Root { ssnc, total } => (ssnc as f64).sqrt() / total as f64,
            Score::Ratio {
                numerator,
                denominator,
            } => numerator as f64 / denominator as f64,
        }
    }

    // The score squared as an exact fraction.
    fn squared(&self) -> (u128, u128) {
        match *self {
            Score::Root { ssnc, total } => (ssnc as u128, total as u128 * total as u128),
            Score::Ratio {
                numerator,
                denominator,
            } => (
                numerator as u128 * numerator as u128,
                denominator as u128 * denominator as u128,
            ),
        }
    }

    /// `floor(score * 10^4)`, computed exactly.
    pub fn ten_thousandths(&self) -> u32 {
        let (num, den) = self.squared();
        (num * 100_000_000 / den).isqrt() as u32
    }
}

impl PartialEq for Score {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Score {}

impl PartialOrd for Score {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Score {
    fn cmp(&self, other: &Self) -> Ordering {
        let (a, b) = self.squared();
        let (c, d) = other.squared();
        (a * d).cmp(&(c * b))
    }
}

impl fmt::Display for Score {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let t = self.ten_thousandths();
        write!(f, "{}.{:04}", t / 10_000, t % 10_000)
    }
}
