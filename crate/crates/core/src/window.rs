use std::fmt;
use std::slice::Windows;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::fingerprint::{OccurrenceIndex, RollingWindows};

/// All contiguous patterns of `window` units in `subfield`, left to right.
///
/// ```
/// let units: Vec<char> = "abcde".chars().collect();
/// let patterns: Vec<String> = fieldsim::enumerate_patterns(&units, 3)
///     .unwrap()
///     .map(|p| p.iter().collect())
///     .collect();
/// assert_eq!(patterns, ["abc", "bcd", "cde"]);
/// ```
pub fn enumerate_patterns(subfield: &[char], window: usize) -> Result<Windows<'_, char>> {
    if window == 0 {
        return Err(Error::ZeroWindow);
    }
    Ok(subfield.windows(window))
}

/// One matched pattern, located by subfield index and offset in the lists as
/// they stood when the match was found.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WindowMatch {
    pub pattern_length: usize,
    pub x_subfield_index: usize,
    pub x_offset: usize,
    pub y_subfield_index: usize,
    pub y_offset: usize,
    /// `(2 * pattern_length)^2`.
    pub ssnc_contribution: u64,
    pub pattern: String,
}

impl WindowMatch {
    pub(crate) fn new(
        x_sub: usize,
        x_off: usize,
        y_sub: usize,
        y_off: usize,
        units: &[char],
    ) -> Self {
        let length = units.len();
        WindowMatch {
            pattern_length: length,
            x_subfield_index: x_sub,
            x_offset: x_off,
            y_subfield_index: y_sub,
            y_offset: y_off,
            ssnc_contribution: contribution(length),
            pattern: units.iter().collect(),
        }
    }
}

pub(crate) fn contribution(length: usize) -> u64 {
    let doubled = 2 * length as u64;
    doubled * doubled
}

/// The still-unmatched factors of a field, in original order.
///
/// Empty factors are never stored. Units in different subfields are never
/// contiguous as far as pattern matching is concerned.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SubfieldList {
    subfields: Vec<Vec<char>>,
    consumed: usize,
}

impl SubfieldList {
    pub fn from_field(field: &Field) -> Self {
        Self::from_parts(vec![field.units().to_vec()], 0)
    }

    /// Builds a list from explicit factors, dropping empty ones.
    pub fn from_parts(subfields: Vec<Vec<char>>, consumed: usize) -> Self {
        SubfieldList {
            subfields: subfields.into_iter().filter(|s| !s.is_empty()).collect(),
            consumed,
        }
    }

    pub fn subfields(&self) -> &[Vec<char>] {
        &self.subfields
    }

    /// Units already removed by matches.
    pub fn consumed(&self) -> usize {
        self.consumed
    }

    /// Units still available for matching.
    pub fn remaining(&self) -> usize {
        self.subfields.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.subfields.is_empty()
    }

    fn longest(&self) -> usize {
        self.subfields.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Replaces the indexed subfield by the units before and after the match.
    pub fn split_on_match(&self, index: usize, offset: usize, length: usize) -> Result<Self> {
        let mut next = self.clone();
        next.split_in_place(index, offset, length)?;
        Ok(next)
    }

    pub(crate) fn split_in_place(
        &mut self,
        index: usize,
        offset: usize,
        length: usize,
    ) -> Result<()> {
        let fits = self
            .subfields
            .get(index)
            .is_some_and(|s| length > 0 && offset + length <= s.len());
        if !fits {
            return Err(Error::MatchOutOfRange {
                index,
                offset,
                length,
            });
        }
        let mut prefix = std::mem::take(&mut self.subfields[index]);
        let suffix = prefix.split_off(offset + length);
        prefix.truncate(offset);
        let replacement = [prefix, suffix].into_iter().filter(|s| !s.is_empty());
        self.subfields.splice(index..=index, replacement);
        self.consumed += length;
        Ok(())
    }

    /// Joins every subfield into one, erasing the boundaries left by earlier
    /// matches. This is how the uncorrected algorithm sees the field.
    pub fn concatenated(&self) -> Self {
        Self::from_parts(vec![self.subfields.concat()], self.consumed)
    }
}

impl fmt::Display for SubfieldList {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, sub) in self.subfields.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{:?}", sub.iter().collect::<String>())?;
        }
        f.write_str("]")
    }
}

/// Finds the first pattern of `window` units from `x` that occurs in `y`.
///
/// X subfields are scanned in order and, within each, pattern offsets left to
/// right. The first pattern present anywhere in `y` wins, located at its
/// leftmost occurrence in the first Y subfield that contains it.
pub fn find_match(
    x: &SubfieldList,
    y: &SubfieldList,
    window: usize,
) -> Result<Option<WindowMatch>> {
    if window == 0 {
        return Err(Error::ZeroWindow);
    }
    Ok(locate(x, y, window).map(|(xi, xo, yi, yo)| {
        WindowMatch::new(xi, xo, yi, yo, &x.subfields[xi][xo..xo + window])
    }))
}

pub(crate) fn locate(
    x: &SubfieldList,
    y: &SubfieldList,
    window: usize,
) -> Option<(usize, usize, usize, usize)> {
    if x.longest() < window || y.longest() < window {
        return None;
    }
    let index = OccurrenceIndex::build(&y.subfields, window);
    x.subfields.iter().enumerate().find_map(|(xi, sub)| {
        RollingWindows::new(sub, window).find_map(|(xo, hash)| {
            index
                .find(&sub[xo..xo + window], hash)
                .map(|(yi, yo)| (xi, xo, yi, yo))
        })
    })
}

// Plain scan; reference for the indexed path.
#[cfg(test)]
fn locate_naive(
    x: &SubfieldList,
    y: &SubfieldList,
    window: usize,
) -> Option<(usize, usize, usize, usize)> {
    for (xi, sub) in x.subfields.iter().enumerate() {
        for (xo, pattern) in sub.windows(window).enumerate() {
            for (yi, ysub) in y.subfields.iter().enumerate() {
                if let Some(yo) = ysub.windows(window).position(|w| w == pattern) {
                    return Some((xi, xo, yi, yo));
                }
            }
        }
    }
    None
}
