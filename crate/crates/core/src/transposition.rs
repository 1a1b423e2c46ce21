use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::residue::ResidueClass;

/// Geometric type of a class transposition. Vertical ones (equal residues)
/// never describe disjoint classes, so they have no variant.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Orientation {
    Horizontal,
    Oblique,
}

/// The involution of Z swapping `r1 + m1*k` with `r2 + m2*k` for every `k`.
///
/// Cells are stored in canonical order (lexicographic by residue, then
/// modulus), so two values compare equal iff they are the same permutation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct ClassTransposition {
    cells: [ResidueClass; 2],
}

impl ClassTransposition {
    pub fn new(c1: ResidueClass, c2: ResidueClass) -> Result<Self> {
        if !c1.is_disjoint(&c2) {
            let difference = (c1.residue() - c2.residue()).abs();
            return Err(Error::NotDisjoint {
                first: c1.to_string(),
                second: c2.to_string(),
                gcd: c1.modulus().gcd(&c2.modulus()),
                difference,
            });
        }
        let cells = if c1 <= c2 { [c1, c2] } else { [c2, c1] };
        Ok(ClassTransposition { cells })
    }

    /// Shorthand for `τ_{r1(m1), r2(m2)}` from raw integers.
    pub fn from_parts(r1: i64, m1: i64, r2: i64, m2: i64) -> Result<Self> {
        Self::new(ResidueClass::new(r1, m1)?, ResidueClass::new(r2, m2)?)
    }

    pub fn cell_a(&self) -> ResidueClass {
        self.cells[0]
    }

    pub fn cell_b(&self) -> ResidueClass {
        self.cells[1]
    }

    pub fn cells(&self) -> [ResidueClass; 2] {
        self.cells
    }

    pub fn orientation(&self) -> Orientation {
        if self.cells[0].modulus() == self.cells[1].modulus() {
            Orientation::Horizontal
        } else {
            Orientation::Oblique
        }
    }

    pub fn is_horizontal(&self) -> bool {
        self.orientation() == Orientation::Horizontal
    }

    /// Common modulus of a horizontal transposition.
    pub fn horizontal_modulus(&self) -> Result<i64> {
        if self.is_horizontal() {
            Ok(self.cells[0].modulus())
        } else {
            Err(Error::NotHorizontal(self.to_string()))
        }
    }

    /// Whether `n` is moved.
    pub fn moves(&self, n: i64) -> bool {
        self.cells[0].contains(n) || self.cells[1].contains(n)
    }

    pub fn checked_apply(&self, n: i64) -> Option<i64> {
        let [a, b] = self.cells;
        if let Some(k) = a.index_of(n) {
            b.element(k)
        } else if let Some(k) = b.index_of(n) {
            a.element(k)
        } else {
            Some(n)
        }
    }

    /// Image of `n`. Panics if the image does not fit in an `i64`, which can
    /// only happen for oblique transpositions and `|n|` near `i64::MAX`.
    pub fn apply(&self, n: i64) -> i64 {
        self.checked_apply(n)
            .unwrap_or_else(|| panic!("image of {n} under {self} overflows i64"))
    }

    /// Splits the transposition into `n` transpositions with `n`-fold moduli
    /// whose supports partition the original support.
    pub fn refine(&self, n: i64) -> Result<Vec<ClassTransposition>> {
        if n < 1 {
            return Err(Error::InvalidArgument(format!(
                "refinement factor must be at least 1, got {n}"
            )));
        }
        let [a, b] = self.cells;
        let (ma, mb) = (
            checked_mul(a.modulus(), n, "refined modulus")?,
            checked_mul(b.modulus(), n, "refined modulus")?,
        );
        (0..n)
            .map(|k| {
                let ra = k * a.modulus() + a.residue();
                let rb = k * b.modulus() + b.residue();
                ClassTransposition::new(ResidueClass::new(ra, ma)?, ResidueClass::new(rb, mb)?)
            })
            .collect()
    }
}

fn checked_mul(x: i64, y: i64, what: &str) -> Result<i64> {
    x.checked_mul(y).ok_or_else(|| Error::Overflow(what.to_string()))
}

pub fn make_transposition(c1: ResidueClass, c2: ResidueClass) -> Result<ClassTransposition> {
    ClassTransposition::new(c1, c2)
}

pub fn classify(t: &ClassTransposition) -> Orientation {
    t.orientation()
}

pub fn parse_transposition(text: &str) -> Result<ClassTransposition> {
    text.parse()
}

impl fmt::Display for ClassTransposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{}", self.cells[0], self.cells[1])
    }
}

impl FromStr for ClassTransposition {
    type Err = Error;

    /// Grammar: `class "," class`.
    fn from_str(text: &str) -> Result<Self> {
        let (first, second) = text.split_once(',').ok_or_else(|| Error::Parse {
            what: "class transposition",
            input: text.to_string(),
        })?;
        ClassTransposition::new(first.parse()?, second.parse()?)
    }
}

impl TryFrom<String> for ClassTransposition {
    type Error = Error;

    fn try_from(value: String) -> Result<Self> {
        value.parse()
    }
}

impl From<ClassTransposition> for String {
    fn from(value: ClassTransposition) -> Self {
        value.to_string()
    }
}

/// All horizontal class transpositions with the given modulus, ordered by
/// `(r1, r2)`.
pub fn horizontal_with_modulus(modulus: i64) -> impl Iterator<Item = ClassTransposition> {
    (0..modulus).flat_map(move |r1| {
        (r1 + 1..modulus).map(move |r2| {
            ClassTransposition::from_parts(r1, modulus, r2, modulus)
                .expect("distinct residues of one modulus are disjoint")
        })
    })
}
