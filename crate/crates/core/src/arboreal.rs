//! Arboreal sequences: `n >= 2` positive integers summing to `2(n - 1)`,
//! exactly the degree vectors of labelled trees on `n` vertices.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::prufer;
use crate::tree::DegreeTree;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArborealError {
    #[error("sequence has {0} entries; at least 2 are required")]
    TooShort(usize),
    #[error("entry {index} is {value}; every degree must be at least 1")]
    NonPositive { index: usize, value: i64 },
    #[error("sum is {sum}, expected 2(n - 1) = {expected}")]
    WrongSum { sum: i64, expected: i64 },
    #[error("malformed sequence literal {0:?}")]
    Malformed(String),
}

impl ArborealError {
    /// Stable numeric code per failure kind.
    pub fn code(&self) -> u8 {
        match self {
            ArborealError::TooShort(_) => 1,
            ArborealError::NonPositive { .. } => 2,
            ArborealError::WrongSum { .. } => 3,
            ArborealError::Malformed(_) => 4,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<usize>")]
pub struct ArborealSequence {
    degrees: Vec<usize>,
}

impl ArborealSequence {
    pub fn new(degrees: &[i64]) -> Result<Self, ArborealError> {
        validate_arboreal(degrees)
    }

    pub fn n(&self) -> usize {
        self.degrees.len()
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    pub fn degree(&self, v: usize) -> usize {
        self.degrees[v]
    }

    /// The largest entry, the `r` of the threshold.
    pub fn max_degree(&self) -> usize {
        self.degrees.iter().copied().max().unwrap_or(0)
    }

    /// The ascending Prüfer word: vertex `i` repeated `d_i - 1` times.
    pub fn canonical_word(&self) -> Vec<usize> {
        self.degrees
            .iter()
            .enumerate()
            .flat_map(|(v, &d)| std::iter::repeat_n(v, d - 1))
            .collect()
    }

    pub fn to_literal(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for ArborealSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for d in &self.degrees {
            if !first {
                f.write_str(",")?;
            }
            first = false;
            write!(f, "{d}")?;
        }
        Ok(())
    }
}

impl FromStr for ArborealSequence {
    type Err = ArborealError;

    /// Parses a comma-separated literal such as `3,1,1,1`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let values = s
            .trim()
            .split(',')
            .map(|part| part.trim().parse::<i64>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| ArborealError::Malformed(s.to_string()))?;
        validate_arboreal(&values)
    }
}

impl TryFrom<Vec<i64>> for ArborealSequence {
    type Error = ArborealError;

    fn try_from(value: Vec<i64>) -> Result<Self, Self::Error> {
        validate_arboreal(&value)
    }
}

impl From<ArborealSequence> for Vec<usize> {
    fn from(seq: ArborealSequence) -> Self {
        seq.degrees
    }
}

pub fn validate_arboreal(degrees: &[i64]) -> Result<ArborealSequence, ArborealError> {
    let n = degrees.len();
    if n < 2 {
        return Err(ArborealError::TooShort(n));
    }
    if let Some((index, &value)) = degrees.iter().enumerate().find(|(_, &d)| d < 1) {
        return Err(ArborealError::NonPositive { index, value });
    }
    let sum = degrees.iter().try_fold(0i64, |acc, &d| acc.checked_add(d));
    let expected = 2 * (n as i64 - 1);
    match sum {
        Some(sum) if sum == expected => Ok(ArborealSequence {
            degrees: degrees.iter().map(|&d| d as usize).collect(),
        }),
        Some(sum) => Err(ArborealError::WrongSum { sum, expected }),
        None => Err(ArborealError::WrongSum {
            sum: i64::MAX,
            expected,
        }),
    }
}

/// Deterministic tree with degree vector `seq`: decodes the canonical word.
pub fn realize_tree(seq: &ArborealSequence) -> DegreeTree {
    prufer::decode(&seq.canonical_word(), seq.n()).expect("canonical word of a valid sequence")
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn validation() {
        assert!(validate_arboreal(&[2, 2, 1, 1]).is_ok());
        assert_eq!(validate_arboreal(&[3, 1, 1, 1]).unwrap().max_degree(), 3);
        assert_eq!(
            validate_arboreal(&[3, 3, 1, 1]),
            Err(ArborealError::WrongSum { sum: 8, expected: 6 })
        );
        assert_eq!(
            validate_arboreal(&[2, 0, 2, 2]),
            Err(ArborealError::NonPositive { index: 1, value: 0 })
        );
        assert_eq!(validate_arboreal(&[0]), Err(ArborealError::TooShort(1)));
        assert_eq!(validate_arboreal(&[]), Err(ArborealError::TooShort(0)));
    }

    #[test]
    fn error_codes_are_distinct() {
        let codes = [
            ArborealError::TooShort(1).code(),
            ArborealError::NonPositive { index: 0, value: 0 }.code(),
            ArborealError::WrongSum { sum: 0, expected: 2 }.code(),
            ArborealError::Malformed(String::new()).code(),
        ];
        let mut sorted = codes.to_vec();
        sorted.dedup();
        assert_eq!(sorted.len(), codes.len());
    }

    #[test]
    fn literal_roundtrip() {
        let seq: ArborealSequence = "3, 1,1,1".parse().unwrap();
        assert_eq!(seq.to_literal(), "3,1,1,1");
        assert!(matches!("3,a".parse::<ArborealSequence>(), Err(ArborealError::Malformed(_))));
    }

    #[test]
    fn realize_star() {
        let seq = validate_arboreal(&[3, 1, 1, 1]).unwrap();
        assert_eq!(seq.canonical_word(), vec![0, 0]);
        assert_eq!(realize_tree(&seq).edges(), vec![(0, 1), (0, 2), (0, 3)]);
    }

    #[test]
    fn realize_path() {
        let seq = validate_arboreal(&[2, 2, 1, 1]).unwrap();
        let t = realize_tree(&seq);
        assert!(t.is_tree());
        assert_eq!(t.degrees(), vec![2, 2, 1, 1]);
        assert!(t.has_edge(0, 1));
    }

    #[test]
    fn realize_mixed_n8() {
        let seq = validate_arboreal(&[3, 3, 2, 1, 1, 1, 1, 2]).unwrap();
        let t = realize_tree(&seq);
        assert!(t.is_tree());
        assert_eq!(t.degrees(), vec![3, 3, 2, 1, 1, 1, 1, 2]);
    }

    #[test]
    fn n2_is_single_edge() {
        let t = realize_tree(&validate_arboreal(&[1, 1]).unwrap());
        assert_eq!(t.edges(), vec![(0, 1)]);
    }

    fn arboreal_strategy() -> impl Strategy<Value = Vec<i64>> {
        (2usize..30).prop_flat_map(|n| {
            prop::collection::vec(0..n, n - 2).prop_map(move |word| {
                let mut d = vec![1i64; n];
                for v in word {
                    d[v] += 1;
                }
                d
            })
        })
    }

    proptest! {
        #[test]
        fn realized_degrees_match(degrees in arboreal_strategy()) {
            let seq = validate_arboreal(&degrees).unwrap();
            let t = realize_tree(&seq);
            prop_assert!(t.is_tree());
            let expected: Vec<usize> = degrees.iter().map(|&d| d as usize).collect();
            prop_assert_eq!(t.degrees(), expected);
        }

        #[test]
        fn validation_is_exactly_the_sum_and_positivity_rule(
            degrees in prop::collection::vec(-1i64..5, 0..10)
        ) {
            let n = degrees.len() as i64;
            let expected = n >= 2
                && degrees.iter().all(|&d| d >= 1)
                && degrees.iter().sum::<i64>() == 2 * (n - 1);
            prop_assert_eq!(validate_arboreal(&degrees).is_ok(), expected);
        }
    }
}
