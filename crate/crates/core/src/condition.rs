//! Ore-type degree-sum thresholds and whole-graph condition checks.
//!
//! The threshold for max degree `r` on `n` vertices is
//! `((2r - 3)n - (2r - 5)) / (r - 1)`, which is `(3n - 1) / 2` for `r = 3`.
//! Comparisons are exact; the margins that matter are `1 / (r - 1)`.

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::FromPrimitive;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::graph::{LabelledGraph, Vertex};
use crate::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConditionError {
    #[error("max degree parameter r = {0} must be at least 2")]
    RTooSmall(usize),
    #[error("graph order n = {n} must be at least r + 1 = {}", r + 1)]
    OrderTooSmall { n: usize, r: usize },
    #[error("value does not fit the chosen integer type")]
    Overflow,
}

/// Exact degree-sum threshold over any integer type.
pub fn threshold<T>(n: usize, r: usize) -> Result<Ratio<T>, ConditionError>
where
    T: Integer + Clone + FromPrimitive,
{
    if r < 2 {
        return Err(ConditionError::RTooSmall(r));
    }
    if n < r + 1 {
        return Err(ConditionError::OrderTooSmall { n, r });
    }
    let lift = |x: usize| T::from_usize(x).ok_or(ConditionError::Overflow);
    let (n, r) = (lift(n)?, lift(r)?);
    let one = T::one();
    let two = one.clone() + one.clone();
    let three = two.clone() + one.clone();
    let five = three.clone() + two.clone();
    let slope = two.clone() * r.clone() - three;
    // 2r - 5 is negative for r = 2; keep the subtraction in order.
    let numer = slope * n + five - two * r.clone();
    Ok(Ratio::new(numer, r - one))
}

/// Whether a degree sum meets the threshold, compared exactly.
pub fn meets_threshold<T>(sum: usize, bound: &Ratio<T>) -> bool
where
    T: Integer + Clone + FromPrimitive,
{
    match T::from_usize(sum) {
        Some(s) => Ratio::from_integer(s) >= *bound,
        None => true,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct WorstPair {
    pub u: Vertex,
    pub v: Vertex,
    pub sum: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConditionReport {
    pub n: usize,
    pub r: usize,
    #[serde(serialize_with = "ser_ratio", deserialize_with = "de_ratio")]
    pub threshold: Rational,
    pub satisfied: bool,
    pub worst_pair: Option<WorstPair>,
}

/// Formats a rational as `p/q`, always with an explicit denominator.
pub fn ratio_literal(q: &Rational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

/// Parses `p/q` or a bare integer.
pub fn parse_ratio(text: &str) -> Option<Rational> {
    let text = text.trim();
    match text.split_once('/') {
        Some((p, q)) => {
            let q: i64 = q.trim().parse().ok()?;
            if q == 0 {
                return None;
            }
            Some(Rational::new(p.trim().parse().ok()?, q))
        }
        None => Some(Rational::from_integer(text.parse().ok()?)),
    }
}

fn ser_ratio<S: Serializer>(q: &Rational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&ratio_literal(q))
}

fn de_ratio<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
    let text = String::deserialize(d)?;
    parse_ratio(&text).ok_or_else(|| serde::de::Error::custom(format!("bad rational {text:?}")))
}

/// Checks every non-adjacent pair of `g` against the threshold for `r`.
/// Complete graphs are satisfied vacuously.
pub fn check_condition(g: &LabelledGraph, r: usize) -> Result<ConditionReport, ConditionError> {
    let bound = threshold::<i64>(g.n(), r)?;
    let worst_pair = g
        .min_nonadjacent_degree_sum()
        .map(|(u, v, sum)| WorstPair { u, v, sum });
    let satisfied = worst_pair.is_none_or(|p| meets_threshold(p.sum, &bound));
    Ok(ConditionReport {
        n: g.n(),
        r,
        threshold: bound,
        satisfied,
        worst_pair,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extremal::build_extremal;
    use crate::BigRational;
    use num_bigint::BigInt;

    #[test]
    fn threshold_values() {
        assert_eq!(threshold::<i64>(10, 3), Ok(Rational::new(29, 2)));
        assert_eq!(threshold::<i64>(4, 2), Ok(Rational::from_integer(5)));
        assert_eq!(threshold::<i64>(10, 4), Ok(Rational::new(47, 3)));
    }

    #[test]
    fn threshold_is_generic_over_integer_width() {
        let small = threshold::<i32>(10, 4).unwrap();
        let big: BigRational = threshold::<BigInt>(10, 4).unwrap();
        assert_eq!(*small.numer(), 47);
        assert_eq!(big, BigRational::new(47.into(), 3.into()));
    }

    #[test]
    fn threshold_domain_errors() {
        assert_eq!(threshold::<i64>(10, 1), Err(ConditionError::RTooSmall(1)));
        assert_eq!(
            threshold::<i64>(3, 3),
            Err(ConditionError::OrderTooSmall { n: 3, r: 3 })
        );
        assert_eq!(threshold::<i8>(200, 3), Err(ConditionError::Overflow));
    }

    #[test]
    fn r3_matches_three_n_minus_one_over_two() {
        for n in (4..=1_000_000usize).step_by(997).chain([4, 5, 6, 1_000_000]) {
            let expected = Rational::new(3 * n as i64 - 1, 2);
            assert_eq!(threshold::<i64>(n, 3).unwrap() - expected, Rational::from_integer(0));
        }
    }

    #[test]
    fn complete_graph_is_vacuously_satisfied() {
        let report = check_condition(&LabelledGraph::complete(5), 3).unwrap();
        assert!(report.satisfied);
        assert_eq!(report.worst_pair, None);
    }

    #[test]
    fn extremal_g1_fails_by_half() {
        let (g, _) = build_extremal(1, 3).unwrap();
        let report = check_condition(&g, 3).unwrap();
        assert_eq!(report.threshold, Rational::new(17, 2));
        assert_eq!(report.worst_pair.unwrap().sum, 8);
        assert!(!report.satisfied);
    }

    #[test]
    fn path_fails() {
        let g = LabelledGraph::from_edges(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        let report = check_condition(&g, 3).unwrap();
        assert_eq!(report.worst_pair.unwrap().sum, 2);
        assert_eq!(report.threshold, Rational::new(11, 2));
        assert!(!report.satisfied);
    }

    #[test]
    fn r2_threshold_is_n_plus_one() {
        assert!(check_condition(&LabelledGraph::complete(4), 2).unwrap().satisfied);
        // n = 4: non-adjacent sums are at most 2(n - 2) = 4 < 5.
        let k4_minus = LabelledGraph::from_edges(4, LabelledGraph::complete(4).edges().skip(1)).unwrap();
        assert!(!check_condition(&k4_minus, 2).unwrap().satisfied);
        // n = 5: 2(n - 2) = 6 reaches n + 1, so K_5 minus an edge passes.
        let k5_minus = LabelledGraph::from_edges(5, LabelledGraph::complete(5).edges().skip(1)).unwrap();
        assert!(check_condition(&k5_minus, 2).unwrap().satisfied);
        let k5_minus_two = LabelledGraph::from_edges(5, LabelledGraph::complete(5).edges().skip(2)).unwrap();
        assert!(!check_condition(&k5_minus_two, 2).unwrap().satisfied);
    }

    #[test]
    fn report_json_uses_p_over_q() {
        let report = check_condition(&LabelledGraph::complete(4), 2).unwrap();
        let json = serde_json::to_value(&report).unwrap();
        assert_eq!(json["threshold"], "5/1");
        assert!(json["worst_pair"].is_null());
        let back: ConditionReport = serde_json::from_value(json).unwrap();
        assert_eq!(back, report);
    }

    #[test]
    fn ratio_literal_parsing() {
        assert_eq!(parse_ratio("29/2"), Some(Rational::new(29, 2)));
        assert_eq!(parse_ratio("7"), Some(Rational::from_integer(7)));
        assert_eq!(parse_ratio("1/0"), None);
    }
}
