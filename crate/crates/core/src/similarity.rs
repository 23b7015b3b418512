use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::baselines::levenshtein;
use crate::field::Field;
use crate::score::Score;
use crate::window::{locate, SubfieldList, WindowMatch};

/// Scoring algorithm.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    /// Matched units become boundaries between subfields.
    Mmcwpa,
    /// Windows may span units separated by earlier matches.
    #[value(alias = "mcwpa_legacy")]
    McwpaLegacy,
    /// Levenshtein ratio, `1 - distance / max(n, m)`.
    Levenshtein,
}

impl Mode {
    pub fn name(self) -> &'static str {
        match self {
            Mode::Mmcwpa => "mmcwpa",
            Mode::McwpaLegacy => "mcwpa-legacy",
            Mode::Levenshtein => "levenshtein",
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Mode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "mmcwpa" => Ok(Mode::Mmcwpa),
            "mcwpa-legacy" | "mcwpa_legacy" => Ok(Mode::McwpaLegacy),
            "levenshtein" => Ok(Mode::Levenshtein),
            other => Err(format!("unknown mode {other:?}")),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SimilarityResult {
    #[serde(serialize_with = "crate::output::serialize_score")]
    pub score: Score,
    pub ssnc: u64,
    pub n: usize,
    pub m: usize,
    pub mode: Mode,
    pub trace: Vec<WindowMatch>,
    /// Set in [`Mode::Levenshtein`] only.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub edit_distance: Option<usize>,
}

/// Accumulates SSNC over contracting windows.
///
/// The window starts at `min(n, m)`. At each length the first match is taken
/// (see [`crate::find_match`]), both subfield lists are split around it and
/// the scan restarts at the head of the X list; once nothing matches, the
/// window shrinks by one. In [`Mode::McwpaLegacy`] the lists are
/// concatenated before every scan, so matches can straddle old boundaries.
///
/// [`Mode::Levenshtein`] has no window trace and yields `(0, [])`.
pub fn compute_ssnc(x: &Field, y: &Field, mode: Mode) -> (u64, Vec<WindowMatch>) {
    let legacy = match mode {
        Mode::Mmcwpa => false,
        Mode::McwpaLegacy => true,
        Mode::Levenshtein => return (0, Vec::new()),
    };
    let mut xs = SubfieldList::from_field(x);
    let mut ys = SubfieldList::from_field(y);
    let mut ssnc = 0;
    let mut trace = Vec::new();

    for window in (1..=x.len().min(y.len())).rev() {
        loop {
            if legacy {
                xs = xs.concatenated();
                ys = ys.concatenated();
            }
            let Some((xi, xo, yi, yo)) = locate(&xs, &ys, window) else {
                break;
            };
            let found = WindowMatch::new(xi, xo, yi, yo, &xs.subfields()[xi][xo..xo + window]);
            ssnc += found.ssnc_contribution;
            trace.push(found);
            xs.split_in_place(xi, xo, window)
                .expect("located match lies inside its X subfield");
            ys.split_in_place(yi, yo, window)
                .expect("located match lies inside its Y subfield");
        }
        if xs.is_empty() || ys.is_empty() {
            break;
        }
    }
    (ssnc, trace)
}

/// Scores `x` against `y`. Patterns are drawn from `x`; the result is not
/// guaranteed to be symmetric.
///
/// Two empty fields score 1, one empty field scores 0.
pub fn similarity(x: &Field, y: &Field, mode: Mode) -> SimilarityResult {
    let (n, m) = (x.len(), y.len());
    if mode == Mode::Levenshtein {
        let edit = levenshtein(x, y);
        return SimilarityResult {
            score: edit.ratio,
            ssnc: 0,
            n,
            m,
            mode,
            trace: Vec::new(),
            edit_distance: Some(edit.distance),
        };
    }
    let (ssnc, trace) = compute_ssnc(x, y, mode);
    let score = match (n, m) {
        (0, 0) => Score::ONE,
        (0, _) | (_, 0) => Score::ZERO,
        _ => Score::root(ssnc, (n + m) as u64),
    };
    SimilarityResult {
        score,
        ssnc,
        n,
        m,
        mode,
        trace,
        edit_distance: None,
    }
}

pub fn similarity_str(x: &str, y: &str, mode: Mode) -> SimilarityResult {
    similarity(&Field::new(x), &Field::new(y), mode)
}
