//! Exhaustive search over pairs of horizontal class transpositions.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::io::Write;
use std::str::FromStr;

use num_integer::Integer;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::order::{Method, OrderStatus};
use crate::perm::horizontal_product_perm;
use crate::transposition::{horizontal_with_modulus, ClassTransposition};

/// Every order a product of two horizontal class transpositions can have.
pub const HORIZONTAL_ORDERS: [u64; 6] = [1, 2, 3, 4, 6, 12];

/// Published witness pairs and the orders listed for them. The pair listed
/// with order 2 actually has order 4; [`search_horizontal`] reports it as a
/// discrepancy instead of matching it.
pub const PUBLISHED_WITNESSES: [(&str, &str, u64); 5] = [
    ("0(2),1(2)", "0(4),2(4)", 2),
    ("0(3),1(3)", "0(3),2(3)", 3),
    ("0(2),1(2)", "0(3),1(3)", 4),
    ("0(2),1(2)", "0(3),2(3)", 6),
    ("0(3),1(3)", "0(4),2(4)", 12),
];

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SearchRecord {
    pub t1: ClassTransposition,
    pub t2: ClassTransposition,
    pub order: Option<u64>,
    pub status: OrderStatus,
    pub method: Method,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Csv,
    Json,
}

impl FromStr for OutputFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "csv" => Ok(OutputFormat::Csv),
            "json" => Ok(OutputFormat::Json),
            _ => Err(Error::Parse {
                what: "output format",
                input: s.to_string(),
            }),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub t1: ClassTransposition,
    pub t2: ClassTransposition,
    pub order: u64,
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "|τ_{{{}}} · τ_{{{}}}| = {}", self.t1, self.t2, self.order)
    }
}

/// Comparison of a published witness with the computed order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WitnessCheck {
    pub t1: ClassTransposition,
    pub t2: ClassTransposition,
    pub listed: u64,
    pub computed: u64,
    pub matches: bool,
    /// For a mismatch: the least pair with disjoint supports realizing the
    /// listed order, or failing that the least pair realizing it at all.
    pub replacement: Option<Witness>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SearchSummary {
    pub max_modulus: i64,
    pub transpositions: usize,
    pub pairs: usize,
    pub realized_orders: Vec<u64>,
    /// Least pair per order, ordered by (larger modulus, smaller modulus, t1, t2).
    pub witnesses: Vec<Witness>,
    /// Pairs whose order falls outside [`HORIZONTAL_ORDERS`].
    pub violations: Vec<Witness>,
    pub published: Vec<WitnessCheck>,
}

impl SearchSummary {
    pub fn has_violations(&self) -> bool {
        !self.violations.is_empty()
    }
}

/// All horizontal transpositions with modulus in `2..=max_modulus`, ordered
/// by `(modulus, r1, r2)`.
pub fn horizontal_transpositions(max_modulus: i64) -> Vec<ClassTransposition> {
    (2..=max_modulus).flat_map(horizontal_with_modulus).collect()
}

fn modulus(t: &ClassTransposition) -> i64 {
    t.cell_a().modulus()
}

fn sort_key(t: &ClassTransposition) -> (i64, i64, i64) {
    (modulus(t), t.cell_a().residue(), t.cell_b().residue())
}

fn witness_key(t1: &ClassTransposition, t2: &ClassTransposition) -> impl Ord {
    let (m1, m2) = (modulus(t1), modulus(t2));
    (m1.max(m2), m1.min(m2), sort_key(t1), sort_key(t2))
}

/// Whether no integer is moved by both; checked over one period.
pub fn supports_disjoint(t1: &ClassTransposition, t2: &ClassTransposition) -> bool {
    let period = modulus(t1).lcm(&modulus(t2));
    (0..period).all(|x| !(t1.moves(x) && t2.moves(x)))
}

fn horizontal_order(t1: &ClassTransposition, t2: &ClassTransposition) -> Result<u64> {
    let order = horizontal_product_perm(&[*t1, *t2])?.order();
    u64::try_from(&order).map_err(|_| Error::Overflow("product order".into()))
}

/// Exact orders of `t1·t2` for all ordered pairs of horizontal transpositions
/// with moduli at most `max_modulus`, in `(t1, t2)` order.
pub fn horizontal_records(max_modulus: i64, parallel: bool) -> Result<Vec<SearchRecord>> {
    let ts = horizontal_transpositions(max_modulus);
    let row = |t1: &ClassTransposition| -> Result<Vec<SearchRecord>> {
        ts.iter()
            .map(|t2| {
                Ok(SearchRecord {
                    t1: *t1,
                    t2: *t2,
                    order: Some(horizontal_order(t1, t2)?),
                    status: OrderStatus::Exact,
                    method: Method::Finite,
                })
            })
            .collect()
    };
    let rows: Vec<Vec<SearchRecord>> = if parallel {
        ts.par_iter().map(row).collect::<Result<_>>()?
    } else {
        ts.iter().map(row).collect::<Result<_>>()?
    };
    Ok(rows.into_iter().flatten().collect())
}

pub fn summarize(max_modulus: i64, records: &[SearchRecord]) -> Result<SearchSummary> {
    let mut least: BTreeMap<u64, &SearchRecord> = BTreeMap::new();
    let mut least_disjoint: BTreeMap<u64, &SearchRecord> = BTreeMap::new();
    let mut violations = Vec::new();
    let key = |r: &SearchRecord| witness_key(&r.t1, &r.t2);
    for r in records {
        let Some(order) = r.order else { continue };
        let entry = least.entry(order).or_insert(r);
        if key(r) < key(entry) {
            *entry = r;
        }
        if supports_disjoint(&r.t1, &r.t2) {
            let entry = least_disjoint.entry(order).or_insert(r);
            if key(r) < key(entry) {
                *entry = r;
            }
        }
        if !HORIZONTAL_ORDERS.contains(&order) {
            violations.push(witness(r, order));
        }
    }

    let mut published = Vec::new();
    for (a, b, listed) in PUBLISHED_WITNESSES {
        let (t1, t2): (ClassTransposition, ClassTransposition) = (a.parse()?, b.parse()?);
        let computed = horizontal_order(&t1, &t2)?;
        let matches = computed == listed;
        let replacement = (!matches)
            .then(|| least_disjoint.get(&listed).or(least.get(&listed)))
            .flatten()
            .map(|r| witness(r, listed));
        published.push(WitnessCheck {
            t1,
            t2,
            listed,
            computed,
            matches,
            replacement,
        });
    }

    let ts = horizontal_transpositions(max_modulus);
    Ok(SearchSummary {
        max_modulus,
        transpositions: ts.len(),
        pairs: records.len(),
        realized_orders: least.keys().copied().collect::<BTreeSet<_>>().into_iter().collect(),
        witnesses: least.iter().map(|(&o, r)| witness(r, o)).collect(),
        violations,
        published,
    })
}

fn witness(r: &SearchRecord, order: u64) -> Witness {
    Witness {
        t1: r.t1,
        t2: r.t2,
        order,
    }
}

pub fn search_horizontal(max_modulus: i64, parallel: bool) -> Result<(Vec<SearchRecord>, SearchSummary)> {
    if max_modulus < 2 {
        return Err(Error::InvalidArgument(format!(
            "max modulus must be at least 2, got {max_modulus}"
        )));
    }
    let records = horizontal_records(max_modulus, parallel)?;
    let summary = summarize(max_modulus, &records)?;
    Ok((records, summary))
}

/// CSV with header `t1,t2,order,status,method`; transpositions are quoted
/// because the grammar contains a comma.
pub fn write_csv<W: Write>(out: &mut W, records: &[SearchRecord]) -> std::io::Result<()> {
    writeln!(out, "t1,t2,order,status,method")?;
    for r in records {
        let order = r.order.map(|o| o.to_string()).unwrap_or_default();
        writeln!(out, "\"{}\",\"{}\",{},{},{}", r.t1, r.t2, order, r.status, r.method)?;
    }
    Ok(())
}

#[derive(Serialize)]
struct JsonOutput<'a> {
    summary: &'a SearchSummary,
    records: &'a [SearchRecord],
}

pub fn write_json<W: Write>(out: &mut W, records: &[SearchRecord], summary: &SearchSummary) -> std::io::Result<()> {
    serde_json::to_writer_pretty(&mut *out, &JsonOutput { summary, records })?;
    writeln!(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ct(text: &str) -> ClassTransposition {
        text.parse().unwrap()
    }

    #[test]
    fn transposition_count_is_sum_of_binomials() {
        for m in 2..=12 {
            let expected: i64 = (2..=m).map(|n| n * (n - 1) / 2).sum();
            assert_eq!(horizontal_transpositions(m).len() as i64, expected);
        }
        assert_eq!(horizontal_transpositions(12).len(), 286);
    }

    #[test]
    fn small_search() {
        let (records, summary) = search_horizontal(4, false).unwrap();
        assert_eq!(records.len(), 10 * 10);
        for o in [1, 2, 3, 4] {
            assert!(summary.realized_orders.contains(&o));
        }
        assert!(!summary.has_violations());
        let disputed = &summary.published[0];
        assert_eq!((disputed.listed, disputed.computed, disputed.matches), (2, 4, false));
        let replacement = disputed.replacement.as_ref().unwrap();
        assert_eq!((replacement.t1, replacement.t2), (ct("0(4),1(4)"), ct("2(4),3(4)")));
        assert!(search_horizontal(1, false).is_err());
    }

    #[test]
    fn parallel_matches_sequential() {
        let a = horizontal_records(6, false).unwrap();
        let b = horizontal_records(6, true).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn disjointness_of_supports() {
        assert!(supports_disjoint(&ct("0(4),1(4)"), &ct("2(4),3(4)")));
        assert!(!supports_disjoint(&ct("0(2),1(2)"), &ct("0(4),1(4)")));
    }

    #[test]
    fn csv_is_stable() {
        let records = horizontal_records(3, false).unwrap();
        let mut first = Vec::new();
        write_csv(&mut first, &records).unwrap();
        let mut second = Vec::new();
        write_csv(&mut second, &horizontal_records(3, true).unwrap()).unwrap();
        assert_eq!(first, second);
        let text = String::from_utf8(first).unwrap();
        let mut lines = text.lines();
        assert_eq!(lines.next(), Some("t1,t2,order,status,method"));
        assert_eq!(lines.next(), Some("\"0(2),1(2)\",\"0(2),1(2)\",1,exact,finite"));
        assert_eq!(text.lines().count(), 1 + 16);
    }
}
