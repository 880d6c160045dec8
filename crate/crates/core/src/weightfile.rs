//! Line-oriented weight files.
//!
//! ```text
//! # comment
//! n 3
//! D 001 4          # alpha_{3} = 4, position j is '1' iff j is in the set
//! T 1 2 2.5        # a_{12} = 2.5
//! ```
//!
//! The `n` header comes first. Repeated `T` pairs or `D` sets are summed.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::constructions::WitnessSpec;
use crate::error::{Error, Result};
use crate::group::{build_weight_element, check_n, GroupRingElement, SubsetMask};

#[derive(Debug, Clone, PartialEq)]
pub struct WeightFile {
    pub n: usize,
    pub transpositions: BTreeMap<(usize, usize), f64>,
    pub diagonals: BTreeMap<SubsetMask, f64>,
}

fn parse_error(line: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, message: message.into() }
}

fn parse_weight(token: &str, line: usize) -> Result<f64> {
    let w: f64 = token.parse().map_err(|_| parse_error(line, format!("invalid weight `{token}`")))?;
    if !w.is_finite() {
        return Err(parse_error(line, format!("invalid weight `{token}`")));
    }
    if w < 0.0 {
        return Err(parse_error(line, format!("negative weight {token}")));
    }
    Ok(w)
}

fn parse_index(token: &str, n: usize, line: usize) -> Result<usize> {
    match token.parse::<usize>() {
        Ok(i) if (1..=n).contains(&i) => Ok(i),
        _ => Err(parse_error(line, format!("index `{token}` not in 1..={n}"))),
    }
}

impl WeightFile {
    pub fn parse(text: &str) -> Result<Self> {
        let mut file: Option<WeightFile> = None;
        for (k, raw) in text.lines().enumerate() {
            let line = k + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let tokens: Vec<&str> = content.split_whitespace().collect();
            let Some(f) = file.as_mut() else {
                match tokens.as_slice() {
                    ["n", value] => {
                        let n = value
                            .parse::<usize>()
                            .map_err(|_| parse_error(line, format!("invalid n `{value}`")))?;
                        check_n(n).map_err(|e| parse_error(line, e.to_string()))?;
                        file = Some(WeightFile { n, transpositions: BTreeMap::new(), diagonals: BTreeMap::new() });
                        continue;
                    }
                    _ => return Err(parse_error(line, "expected header `n <int>`")),
                }
            };
            match tokens.as_slice() {
                ["T", i, j, w] => {
                    let i = parse_index(i, f.n, line)?;
                    let j = parse_index(j, f.n, line)?;
                    if i >= j {
                        return Err(parse_error(line, format!("transposition needs i < j, got {i} {j}")));
                    }
                    *f.transpositions.entry((i, j)).or_insert(0.0) += parse_weight(w, line)?;
                }
                ["D", bits, w] => {
                    if bits.chars().count() != f.n {
                        return Err(parse_error(line, "bitstring length mismatch"));
                    }
                    let set = SubsetMask::from_bitstring(bits).map_err(|e| parse_error(line, e.to_string()))?;
                    *f.diagonals.entry(set).or_insert(0.0) += parse_weight(w, line)?;
                }
                ["n", ..] => return Err(parse_error(line, "repeated header")),
                _ => return Err(parse_error(line, format!("malformed line `{content}`"))),
            }
        }
        file.ok_or_else(|| parse_error(text.lines().count().max(1), "missing header `n <int>`"))
    }

    /// Header, then `D` lines by ascending mask, then `T` lines in
    /// lexicographic order. Weights use the shortest decimal that parses back
    /// to the same value.
    pub fn emit(&self) -> String {
        let mut out = format!("n {}\n", self.n);
        for (set, w) in &self.diagonals {
            writeln!(out, "D {} {}", set.to_bitstring(), w).expect("string write");
        }
        for ((i, j), w) in &self.transpositions {
            writeln!(out, "T {i} {j} {w}").expect("string write");
        }
        out
    }

    pub fn to_element(&self) -> Result<GroupRingElement> {
        build_weight_element(
            self.n,
            self.transpositions.iter().map(|(&k, &v)| (k, v)),
            self.diagonals.iter().map(|(&k, &v)| (k, v)),
        )
    }
}

impl From<&WitnessSpec> for WeightFile {
    fn from(spec: &WitnessSpec) -> Self {
        WeightFile {
            n: spec.n,
            transpositions: spec.transposition_weights.clone(),
            diagonals: spec.diagonal_weights.clone(),
        }
    }
}

pub fn parse_weight_file(text: &str) -> Result<WeightFile> {
    WeightFile::parse(text)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::witness_vnk;

    #[test]
    fn single_transposition() {
        let f = parse_weight_file("n 2\nT 1 2 1.0").unwrap();
        assert_eq!(f.transpositions, BTreeMap::from([((1, 2), 1.0)]));
        assert!(f.diagonals.is_empty());
    }

    #[test]
    fn witness_text_matches() {
        let text = "n 3\nD 001 4\nD 111 4\nT 1 2 2.6666666666666665\nT 1 3 2.6666666666666665\nT 2 3 2.6666666666666665\n";
        let spec = witness_vnk(3, 2).unwrap();
        let f = WeightFile::from(&spec);
        assert_eq!(f.emit(), text);
        assert_eq!(parse_weight_file(text).unwrap(), f);
    }

    #[test]
    fn errors_carry_line_numbers() {
        let e = parse_weight_file("n 3\nD 0010 1").unwrap_err();
        assert_eq!(e.to_string(), "bitstring length mismatch at line 2");
        let e = parse_weight_file("# c\n\nn 3\nT 2 1 1").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 4, .. }));
        assert!(matches!(parse_weight_file("n 3\nT 1 2 -1"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_weight_file("T 1 2 1"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_weight_file("n 3\nX"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_weight_file("n 3\nT 1 4 1"), Err(Error::Parse { line: 2, .. })));
        assert!(parse_weight_file("").is_err());
    }

    #[test]
    fn duplicates_sum_and_comments_skip() {
        let f = parse_weight_file("n 3 # header\nT 1 2 1\n\nT 1 2 0.5\nD 100 1\nD 100 2 # again\n").unwrap();
        assert_eq!(f.transpositions[&(1, 2)], 1.5);
        assert_eq!(f.diagonals[&SubsetMask::from_elements(3, &[1]).unwrap()], 3.0);
    }
}
