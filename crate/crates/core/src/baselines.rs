//! Levenshtein distance, the edit-distance baseline.

use serde::Serialize;

use crate::field::Field;
use crate::score::Score;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct EditDistanceResult {
    pub distance: usize,
    /// `1 - distance / max(n, m)`, or 1 when both fields are empty.
    #[serde(serialize_with = "crate::output::serialize_score")]
    pub ratio: Score,
}

/// Unit-cost insertions, deletions and substitutions, two-row dynamic
/// programming.
pub fn levenshtein(x: &Field, y: &Field) -> EditDistanceResult {
    let (a, b) = (x.units(), y.units());
    let mut previous: Vec<usize> = (0..=b.len()).collect();
    let mut current = vec![0; b.len() + 1];
    for (i, &ca) in a.iter().enumerate() {
        current[0] = i + 1;
        for (j, &cb) in b.iter().enumerate() {
            let substitute = previous[j] + usize::from(ca != cb);
            current[j + 1] = substitute.min(previous[j + 1] + 1).min(current[j] + 1);
        }
        std::mem::swap(&mut previous, &mut current);
    }
    let distance = previous[b.len()];
    let longest = a.len().max(b.len());
    let ratio = if longest == 0 {
        Score::ONE
    } else {
        Score::ratio((longest - distance) as u64, longest as u64)
    };
    EditDistanceResult { distance, ratio }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lev(a: &str, b: &str) -> EditDistanceResult {
        levenshtein(&Field::new(a), &Field::new(b))
    }

    #[test]
    fn identity() {
        let r = lev("abc", "abc");
        assert_eq!(r.distance, 0);
        assert_eq!(r.ratio, Score::ONE);
    }

    #[test]
    fn full_deletion() {
        let r = lev("abc", "");
        assert_eq!(r.distance, 3);
        assert_eq!(r.ratio, Score::ZERO);
    }

    #[test]
    fn both_empty() {
        let r = lev("", "");
        assert_eq!(r.distance, 0);
        assert_eq!(r.ratio, Score::ONE);
    }

    #[test]
    fn austria_australia() {
        assert_eq!(lev("Austria", "Australia").distance, 2);
        assert_eq!(lev("kitten", "sitting").distance, 3);
    }

    #[test]
    fn counts_scalar_values() {
        assert_eq!(lev("café", "cafe").distance, 1);
    }
}
