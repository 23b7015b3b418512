use std::fmt;

/// A string viewed as a sequence of Unicode scalar values.
///
/// Comparisons are exact: no case folding or normalization is applied.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Field {
    units: Vec<char>,
}

impl Field {
    pub fn new(text: &str) -> Self {
        Field {
            units: text.chars().collect(),
        }
    }

    pub fn from_units(units: Vec<char>) -> Self {
        Field { units }
    }

    pub fn units(&self) -> &[char] {
        &self.units
    }

    /// Number of units (not bytes).
    pub fn len(&self) -> usize {
        self.units.len()
    }

    pub fn is_empty(&self) -> bool {
        self.units.is_empty()
    }
}

impl From<&str> for Field {
    fn from(text: &str) -> Self {
        Field::new(text)
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.units.iter().try_for_each(|c| write!(f, "{c}"))
    }
}
