//! Reference implementations used only by the test suites. They share no
//! code with the library.
#![allow(dead_code)]

use fieldsim::{Field, SubfieldList, WindowMatch};

/// SSNC and matched patterns, computed over masked copies of both fields in
/// their original coordinates. A unit is available until matched.
///
/// Corrected mode: a window is a run of `w` available units that are
/// adjacent in the original string, scanned leftmost-first in X; its partner
/// is the leftmost such run in Y with equal content. Legacy mode: windows
/// range over the available units with the matched ones squeezed out.
pub fn window_oracle(x: &str, y: &str, legacy: bool) -> (u64, Vec<String>) {
    let xs: Vec<char> = x.chars().collect();
    let ys: Vec<char> = y.chars().collect();
    let mut x_free = vec![true; xs.len()];
    let mut y_free = vec![true; ys.len()];
    let mut ssnc = 0u64;
    let mut patterns = Vec::new();

    let mut w = xs.len().min(ys.len());
    while w >= 1 {
        let x_windows = candidate_windows(&x_free, w, legacy);
        let y_windows = candidate_windows(&y_free, w, legacy);
        let mut found = None;
        'scan: for xw in &x_windows {
            for yw in &y_windows {
                if xw.iter().zip(yw).all(|(&i, &j)| xs[i] == ys[j]) {
                    found = Some((xw.clone(), yw.clone()));
                    break 'scan;
                }
            }
        }
        match found {
            Some((xw, yw)) => {
                for &i in &xw {
                    x_free[i] = false;
                }
                for &j in &yw {
                    y_free[j] = false;
                }
                ssnc += (2 * w as u64).pow(2);
                patterns.push(xw.iter().map(|&i| xs[i]).collect());
            }
            None => w -= 1,
        }
    }
    (ssnc, patterns)
}

// Original positions of every window of `w` available units, in scan order.
fn candidate_windows(free: &[bool], w: usize, legacy: bool) -> Vec<Vec<usize>> {
    if legacy {
        let available: Vec<usize> = (0..free.len()).filter(|&i| free[i]).collect();
        if available.len() < w {
            return Vec::new();
        }
        (0..=available.len() - w)
            .map(|s| available[s..s + w].to_vec())
            .collect()
    } else {
        if free.len() < w {
            return Vec::new();
        }
        (0..=free.len() - w)
            .filter(|&s| free[s..s + w].iter().all(|&f| f))
            .map(|s| (s..s + w).collect())
            .collect()
    }
}

/// Exponential recursion, no memoization.
pub fn levenshtein_oracle(a: &[char], b: &[char]) -> usize {
    match (a.split_last(), b.split_last()) {
        (None, _) => b.len(),
        (_, None) => a.len(),
        (Some((ca, ra)), Some((cb, rb))) => {
            let substitute = levenshtein_oracle(ra, rb) + usize::from(ca != cb);
            let delete = levenshtein_oracle(ra, b) + 1;
            let insert = levenshtein_oracle(a, rb) + 1;
            substitute.min(delete).min(insert)
        }
    }
}

/// Every string over `alphabet` with length `0..=max_len`.
pub fn all_strings(alphabet: &[char], max_len: usize) -> Vec<String> {
    let mut out = vec![String::new()];
    let mut frontier = vec![String::new()];
    for _ in 0..max_len {
        frontier = frontier
            .iter()
            .flat_map(|s| {
                alphabet.iter().map(move |c| {
                    let mut next = s.clone();
                    next.push(*c);
                    next
                })
            })
            .collect();
        out.extend(frontier.iter().cloned());
    }
    out
}

/// Original positions of one match in X and in Y.
pub type MatchedPositions = (Vec<usize>, Vec<usize>);

/// Replays a trace, tracking where each unit came from in the original
/// field. Returns the original positions of each match, per side, or an
/// error describing the first inconsistency.
pub fn replay(
    x: &str,
    y: &str,
    trace: &[WindowMatch],
    legacy: bool,
) -> Result<Vec<MatchedPositions>, String> {
    let tag = |s: &str| -> Vec<Vec<(char, usize)>> {
        let units: Vec<(char, usize)> = s.chars().zip(0..).collect();
        if units.is_empty() {
            vec![]
        } else {
            vec![units]
        }
    };
    let (mut xt, mut yt) = (tag(x), tag(y));
    let mut xs = SubfieldList::from_field(&Field::new(x));
    let mut ys = SubfieldList::from_field(&Field::new(y));
    let mut positions = Vec::new();

    for m in trace {
        if legacy {
            xt = join(xt);
            yt = join(yt);
            xs = xs.concatenated();
            ys = ys.concatenated();
        }
        let xp = cut(&mut xt, m.x_subfield_index, m.x_offset, m.pattern_length)?;
        let yp = cut(&mut yt, m.y_subfield_index, m.y_offset, m.pattern_length)?;
        let xtext: String = xp.iter().map(|u| u.0).collect();
        let ytext: String = yp.iter().map(|u| u.0).collect();
        if xtext != m.pattern || ytext != m.pattern {
            return Err(format!("pattern {:?} vs {xtext:?}/{ytext:?}", m.pattern));
        }
        xs = xs
            .split_on_match(m.x_subfield_index, m.x_offset, m.pattern_length)
            .map_err(|e| e.to_string())?;
        ys = ys
            .split_on_match(m.y_subfield_index, m.y_offset, m.pattern_length)
            .map_err(|e| e.to_string())?;
        positions.push((
            xp.iter().map(|u| u.1).collect(),
            yp.iter().map(|u| u.1).collect(),
        ));
    }
    Ok(positions)
}

fn join(parts: Vec<Vec<(char, usize)>>) -> Vec<Vec<(char, usize)>> {
    let all: Vec<_> = parts.into_iter().flatten().collect();
    if all.is_empty() {
        vec![]
    } else {
        vec![all]
    }
}

fn cut(
    parts: &mut Vec<Vec<(char, usize)>>,
    index: usize,
    offset: usize,
    len: usize,
) -> Result<Vec<(char, usize)>, String> {
    let sub = parts.get(index).ok_or("subfield index out of range")?;
    if offset + len > sub.len() {
        return Err("match overruns its subfield".into());
    }
    let before = sub[..offset].to_vec();
    let matched = sub[offset..offset + len].to_vec();
    let after = sub[offset + len..].to_vec();
    parts.splice(
        index..=index,
        [before, after].into_iter().filter(|p| !p.is_empty()),
    );
    Ok(matched)
}

pub fn contiguous(positions: &[usize]) -> bool {
    positions.windows(2).all(|w| w[1] == w[0] + 1)
}
