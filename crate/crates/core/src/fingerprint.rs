//! Polynomial rolling fingerprints over unit sequences, modulo the Mersenne
//! prime 2^61 - 1. Fingerprints only narrow candidates; equality is always
//! confirmed unit by unit.

use std::collections::HashMap;

const MODULUS: u64 = (1 << 61) - 1;
const BASE: u64 = 0x1f35_a7bd_c3e1_2b69 % MODULUS;

#[inline]
fn mul_mod(a: u64, b: u64) -> u64 {
    let product = a as u128 * b as u128;
    let folded = (product as u64 & MODULUS) + (product >> 61) as u64;
    if folded >= MODULUS {
        folded - MODULUS
    } else {
        folded
    }
}

#[inline]
fn add_mod(a: u64, b: u64) -> u64 {
    let sum = a + b;
    if sum >= MODULUS {
        sum - MODULUS
    } else {
        sum
    }
}

#[inline]
fn unit_value(unit: char) -> u64 {
    u64::from(unit) + 1
}

pub(crate) fn fingerprint(units: &[char]) -> u64 {
    units
        .iter()
        .fold(0, |acc, &u| add_mod(mul_mod(acc, BASE), unit_value(u)))
}

/// Yields `(offset, fingerprint)` for every window of `width` units, left to
/// right.
pub(crate) struct RollingWindows<'a> {
    units: &'a [char],
    width: usize,
    next: usize,
    hash: u64,
    // BASE^(width - 1), used to drop the leading unit.
    lead_weight: u64,
}

impl<'a> RollingWindows<'a> {
    pub(crate) fn new(units: &'a [char], width: usize) -> Self {
        debug_assert!(width > 0);
        let mut lead_weight = 1;
        for _ in 1..width {
            lead_weight = mul_mod(lead_weight, BASE);
        }
        let hash = if units.len() >= width {
            fingerprint(&units[..width])
        } else {
            0
        };
        RollingWindows {
            units,
            width,
            next: 0,
            hash,
            lead_weight,
        }
    }
}

impl Iterator for RollingWindows<'_> {
    type Item = (usize, u64);

    fn next(&mut self) -> Option<Self::Item> {
        if self.next + self.width > self.units.len() {
            return None;
        }
        let offset = self.next;
        let current = self.hash;
        self.next += 1;
        if let Some(&incoming) = self.units.get(offset + self.width) {
            let outgoing = mul_mod(unit_value(self.units[offset]), self.lead_weight);
            let dropped = add_mod(current, MODULUS - outgoing);
            self.hash = add_mod(mul_mod(dropped, BASE), unit_value(incoming));
        }
        Some((offset, current))
    }
}

/// First occurrence of every distinct window of a fixed width across an
/// ordered list of subfields. "First" means the earliest subfield containing
/// the window, leftmost offset within it.
pub(crate) struct OccurrenceIndex<'a> {
    subfields: &'a [Vec<char>],
    width: usize,
    first: HashMap<u64, Vec<(usize, usize)>>,
}

impl<'a> OccurrenceIndex<'a> {
    pub(crate) fn build(subfields: &'a [Vec<char>], width: usize) -> Self {
        let mut first: HashMap<u64, Vec<(usize, usize)>> = HashMap::new();
        for (index, subfield) in subfields.iter().enumerate() {
            for (offset, hash) in RollingWindows::new(subfield, width) {
                let window = &subfield[offset..offset + width];
                let slot = first.entry(hash).or_default();
                let seen = slot
                    .iter()
                    .any(|&(i, o)| subfields[i][o..o + width] == *window);
                if !seen {
                    slot.push((index, offset));
                }
            }
        }
        OccurrenceIndex {
            subfields,
            width,
            first,
        }
    }

    pub(crate) fn find(&self, pattern: &[char], hash: u64) -> Option<(usize, usize)> {
        debug_assert_eq!(pattern.len(), self.width);
        self.first
            .get(&hash)?
            .iter()
            .copied()
            .find(|&(i, o)| self.subfields[i][o..o + self.width] == *pattern)
    }
}
