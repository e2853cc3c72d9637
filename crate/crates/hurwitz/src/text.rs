//! Textual grammar for permutations, tuples, cycle types and profiles.
//!
//! Permutations are written in 1-based cycle notation: `id`, `(1 2 3 4)` or
//! `(1 2)(3 4)`, with points separated by spaces or commas and unlisted
//! points fixed. Cycle types list parts separated by commas (`3,1`; parts of
//! size 1 may be omitted and are inferred from the degree). Profiles join
//! four cycle types with `|`, tuples join four permutations with `;`.

use crate::covers::{MonodromyTuple, RamificationProfile};
use crate::error::{Error, Result};
use crate::perm::{CycleType, Permutation};

fn parse_err(position: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        position,
        message: message.into(),
    }
}

/// Parse cycle notation into a permutation of the given degree.
pub fn parse_permutation(input: &str, degree: usize) -> Result<Permutation> {
    let bytes = input.as_bytes();
    let mut pos = 0usize;
    let skip_ws = |pos: &mut usize| {
        while *pos < bytes.len() && (bytes[*pos] == b' ' || bytes[*pos] == b'\t') {
            *pos += 1;
        }
    };
    skip_ws(&mut pos);
    if input[pos..].starts_with("id") {
        if !input[pos + 2..].trim().is_empty() {
            return Err(parse_err(pos + 2, "unexpected input after `id`"));
        }
        return Permutation::from_images((1..=degree).collect())
            .map_err(|e| parse_err(0, e.to_string()));
    }

    let mut cycles: Vec<Vec<usize>> = Vec::new();
    let mut seen = vec![false; degree.max(1)];
    while pos < bytes.len() {
        skip_ws(&mut pos);
        if pos == bytes.len() {
            break;
        }
        if bytes[pos] != b'(' {
            return Err(parse_err(pos, "expected `(`"));
        }
        pos += 1;
        let mut cycle = Vec::new();
        loop {
            skip_ws(&mut pos);
            if pos < bytes.len() && bytes[pos] == b',' {
                pos += 1;
                skip_ws(&mut pos);
            }
            if pos == bytes.len() {
                return Err(parse_err(pos, "unclosed cycle"));
            }
            if bytes[pos] == b')' {
                pos += 1;
                break;
            }
            let start = pos;
            while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                pos += 1;
            }
            if pos == start {
                return Err(parse_err(pos, "expected a point"));
            }
            let point: usize = input[start..pos]
                .parse()
                .map_err(|_| parse_err(start, "point out of range"))?;
            if point == 0 || point > degree {
                return Err(parse_err(
                    start,
                    format!("point {point} out of range 1..={degree}"),
                ));
            }
            if seen[point - 1] {
                return Err(parse_err(start, format!("point {point} repeated")));
            }
            seen[point - 1] = true;
            cycle.push(point);
        }
        if cycle.is_empty() {
            return Err(parse_err(pos, "empty cycle"));
        }
        cycles.push(cycle);
    }
    if cycles.is_empty() {
        return Err(parse_err(0, "expected `id` or at least one cycle"));
    }
    Permutation::from_cycles(degree, &cycles).map_err(|e| parse_err(0, e.to_string()))
}

/// Parse a comma-separated cycle type; missing parts of size 1 are inferred
/// from the degree.
pub fn parse_cycle_type(input: &str, degree: usize) -> Result<CycleType> {
    let mut parts = Vec::new();
    let mut offset = 0usize;
    for piece in input.split(',') {
        let trimmed = piece.trim();
        if trimmed.is_empty() {
            return Err(parse_err(offset, "empty part"));
        }
        let part: usize = trimmed
            .parse()
            .map_err(|_| parse_err(offset, format!("invalid part `{trimmed}`")))?;
        if part == 0 {
            return Err(parse_err(offset, "parts must be positive"));
        }
        parts.push(part);
        offset += piece.len() + 1;
    }
    let sum: usize = parts.iter().sum();
    if sum > degree {
        return Err(parse_err(
            0,
            format!("parts sum to {sum}, which exceeds the degree {degree}"),
        ));
    }
    parts.extend(std::iter::repeat_n(1, degree - sum));
    CycleType::new(parts).map_err(|e| parse_err(0, e.to_string()))
}

/// Parse a `|`-separated list of four cycle types into a profile.
pub fn parse_profile(input: &str, degree: usize) -> Result<RamificationProfile> {
    let pieces: Vec<&str> = input.split('|').collect();
    if pieces.len() != 4 {
        return Err(parse_err(
            0,
            format!(
                "expected 4 classes separated by `|`, found {}",
                pieces.len()
            ),
        ));
    }
    let mut classes = Vec::with_capacity(4);
    for piece in pieces {
        classes.push(parse_cycle_type(piece, degree)?);
    }
    let classes: [CycleType; 4] = classes.try_into().expect("length checked");
    RamificationProfile::new(classes)
}

/// Parse a `;`-separated list of four permutations into a monodromy tuple.
pub fn parse_monodromy_tuple(input: &str, degree: usize) -> Result<MonodromyTuple> {
    let pieces: Vec<&str> = input.split(';').collect();
    if pieces.len() != 4 {
        return Err(parse_err(
            0,
            format!(
                "expected 4 permutations separated by `;`, found {}",
                pieces.len()
            ),
        ));
    }
    let mut entries = Vec::with_capacity(4);
    for piece in pieces {
        entries.push(parse_permutation(piece, degree)?);
    }
    let entries: [Permutation; 4] = entries.try_into().expect("length checked");
    MonodromyTuple::new(entries)
}

/// Cycle-notation form; inverse of [`parse_permutation`].
pub fn format_permutation(p: &Permutation) -> String {
    p.to_string()
}

/// `;`-separated tuple form; inverse of [`parse_monodromy_tuple`].
pub fn format_tuple(t: &MonodromyTuple) -> String {
    t.entries()
        .iter()
        .map(Permutation::to_string)
        .collect::<Vec<_>>()
        .join(";")
}

/// `|`-separated profile form; inverse of [`parse_profile`].
pub fn format_profile(profile: &RamificationProfile) -> String {
    profile
        .classes()
        .iter()
        .map(CycleType::to_string)
        .collect::<Vec<_>>()
        .join("|")
}
