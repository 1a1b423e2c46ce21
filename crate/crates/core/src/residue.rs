use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The residue class `r(m) = { r + k*m : k in Z }` with `0 <= r < m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct ResidueClass {
    residue: i64,
    modulus: i64,
}

impl ResidueClass {
    pub fn new(residue: i64, modulus: i64) -> Result<Self> {
        if modulus < 1 || residue < 0 || residue >= modulus {
            return Err(Error::Range { residue, modulus });
        }
        Ok(ResidueClass { residue, modulus })
    }

    pub fn residue(&self) -> i64 {
        self.residue
    }

    pub fn modulus(&self) -> i64 {
        self.modulus
    }

    pub fn contains(&self, n: i64) -> bool {
        n.rem_euclid(self.modulus) == self.residue
    }

    /// The index `k` with `n = r + m*k`, if `n` lies in the class.
    pub fn index_of(&self, n: i64) -> Option<i64> {
        let (k, rem) = (n - self.residue).div_mod_floor(&self.modulus);
        (rem == 0).then_some(k)
    }

    /// The element `r + m*k`.
    pub fn element(&self, k: i64) -> Option<i64> {
        self.modulus.checked_mul(k)?.checked_add(self.residue)
    }

    /// Two classes are disjoint iff `gcd(m1, m2)` does not divide `r1 - r2`.
    pub fn is_disjoint(&self, other: &ResidueClass) -> bool {
        (self.residue - other.residue) % self.modulus.gcd(&other.modulus) != 0
    }
}

impl fmt::Display for ResidueClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({})", self.residue, self.modulus)
    }
}

impl FromStr for ResidueClass {
    type Err = Error;

    /// Grammar: `INT "(" INT ")"`, whitespace-insensitive.
    fn from_str(text: &str) -> Result<Self> {
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let bad = || Error::Parse {
            what: "residue class",
            input: text.to_string(),
        };
        let body = compact.strip_suffix(')').ok_or_else(bad)?;
        let (residue, modulus) = body.split_once('(').ok_or_else(bad)?;
        let residue = parse_int(residue).ok_or_else(bad)?;
        let modulus = parse_int(modulus).ok_or_else(bad)?;
        ResidueClass::new(residue, modulus)
    }
}

fn parse_int(text: &str) -> Option<i64> {
    let digits = text.strip_prefix(['-', '+']).unwrap_or(text);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    text.parse().ok()
}

pub fn parse_class(text: &str) -> Result<ResidueClass> {
    text.parse()
}

pub fn classes_disjoint(c1: &ResidueClass, c2: &ResidueClass) -> bool {
    c1.is_disjoint(c2)
}

impl TryFrom<String> for ResidueClass {
    type Error = Error;

    fn try_from(value: String) -> Result<Self> {
        value.parse()
    }
}

impl From<ResidueClass> for String {
    fn from(value: ResidueClass) -> Self {
        value.to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rc(r: i64, m: i64) -> ResidueClass {
        ResidueClass::new(r, m).unwrap()
    }

    #[test]
    fn parses_grammar() {
        assert_eq!(parse_class("1(2)").unwrap(), rc(1, 2));
        assert_eq!(parse_class("0(4)").unwrap(), rc(0, 4));
        assert_eq!(parse_class(" 3 ( 7 ) ").unwrap(), rc(3, 7));
        assert_eq!(parse_class("0(1)").unwrap(), rc(0, 1));
    }

    #[test]
    fn rejects_out_of_range() {
        assert!(matches!(parse_class("4(3)"), Err(Error::Range { .. })));
        assert!(matches!(parse_class("3(3)"), Err(Error::Range { .. })));
        assert!(matches!(parse_class("-1(3)"), Err(Error::Range { .. })));
        assert!(matches!(parse_class("0(0)"), Err(Error::Range { .. })));
        assert!(matches!(parse_class("0(-2)"), Err(Error::Range { .. })));
    }

    #[test]
    fn rejects_bad_syntax() {
        for text in ["", "1", "1(2", "(2)", "1()", "a(2)", "1(2)x", "1(2)(3)", "1.0(2)", "1(+)"] {
            assert!(
                matches!(parse_class(text), Err(Error::Parse { .. })),
                "{text:?} should be a syntax error"
            );
        }
    }

    #[test]
    fn disjointness_examples() {
        assert!(classes_disjoint(&rc(0, 2), &rc(1, 2)));
        assert!(!classes_disjoint(&rc(3, 5), &rc(3, 5)));
        // scan of [0, 8): 1(2) holds odd numbers, 0(4) holds 0 and 4
        assert!(classes_disjoint(&rc(1, 2), &rc(0, 4)));
        assert!(!classes_disjoint(&rc(0, 2), &rc(0, 4)));
    }

    #[test]
    fn membership_handles_negatives() {
        let c = rc(2, 5);
        assert!(c.contains(-3));
        assert!(c.contains(-8));
        assert!(!c.contains(-2));
        assert_eq!(c.index_of(-3), Some(-1));
        assert_eq!(c.index_of(12), Some(2));
        assert_eq!(c.index_of(13), None);
    }

    #[test]
    fn disjointness_matches_window_scan() {
        for m1 in 1..=12 {
            for m2 in 1..=12 {
                for r1 in 0..m1 {
                    for r2 in 0..m2 {
                        let (a, b) = (rc(r1, m1), rc(r2, m2));
                        let scan = (0..m1 * m2).all(|n| !(a.contains(n) && b.contains(n)));
                        assert_eq!(a.is_disjoint(&b), scan, "{a} vs {b}");
                    }
                }
            }
        }
    }
}
