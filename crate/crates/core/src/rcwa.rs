use std::fmt;

use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::transposition::ClassTransposition;

/// The affine map `n ↦ (a*n + b) / c`, normalized so that `gcd(a, b, c) = 1`
/// and `c > 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct AffinePiece {
    pub a: i64,
    pub b: i64,
    pub c: i64,
}

impl AffinePiece {
    pub const IDENTITY: AffinePiece = AffinePiece { a: 1, b: 0, c: 1 };

    pub fn new(a: i64, b: i64, c: i64) -> Result<Self> {
        if c == 0 {
            return Err(Error::InvalidArgument("affine piece with zero divisor".into()));
        }
        let g = a.gcd(&b).gcd(&c);
        let sign = c.signum();
        Ok(AffinePiece {
            a: sign * a / g,
            b: sign * b / g,
            c: sign * c / g,
        })
    }

    pub fn apply(&self, n: i64) -> Option<i64> {
        let numerator = i128::from(self.a) * i128::from(n) + i128::from(self.b);
        let (q, rem) = numerator.div_rem(&i128::from(self.c));
        if rem != 0 {
            return None;
        }
        i64::try_from(q).ok()
    }
}

impl fmt::Display for AffinePiece {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let numerator = match (self.a, self.b) {
            (1, 0) => "n".to_string(),
            (a, 0) => format!("{a}n"),
            (1, b) if b < 0 => format!("n - {}", -b),
            (1, b) => format!("n + {b}"),
            (a, b) if b < 0 => format!("{a}n - {}", -b),
            (a, b) => format!("{a}n + {b}"),
        };
        if self.c == 1 {
            f.write_str(&numerator)
        } else {
            write!(f, "({numerator})/{}", self.c)
        }
    }
}

/// A residue-class-wise affine mapping of Z: one affine piece per residue
/// class modulo `modulus`. The modulus is always reduced to the least one
/// describing the same map.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct RcwaMapping {
    modulus: i64,
    pieces: Vec<AffinePiece>,
}

impl RcwaMapping {
    /// Builds the mapping whose piece on `r(M)` is `pieces[r]`, `M = pieces.len()`.
    /// Fails unless every piece maps its class into Z.
    pub fn new(pieces: Vec<AffinePiece>) -> Result<Self> {
        if pieces.is_empty() {
            return Err(Error::InvalidArgument("rcwa mapping needs at least one piece".into()));
        }
        let modulus = i64::try_from(pieces.len())
            .map_err(|_| Error::Overflow("rcwa modulus".into()))?;
        for (r, piece) in pieces.iter().enumerate() {
            // c | a*(r + M*k) + b for all k  ⟺  c | a*r + b  and  c | a*M
            let r = r as i64;
            let well_defined = (i128::from(piece.a) * i128::from(r) + i128::from(piece.b))
                % i128::from(piece.c)
                == 0
                && (i128::from(piece.a) * i128::from(modulus)) % i128::from(piece.c) == 0;
            if !well_defined {
                return Err(Error::InvalidArgument(format!(
                    "piece {piece} does not map {r}({modulus}) into the integers"
                )));
            }
        }
        Ok(RcwaMapping { modulus, pieces }.reduced())
    }

    pub fn identity() -> Self {
        RcwaMapping {
            modulus: 1,
            pieces: vec![AffinePiece::IDENTITY],
        }
    }

    fn reduced(self) -> Self {
        let m = self.pieces.len();
        let least = (1..=m)
            .filter(|d| m.is_multiple_of(*d))
            .find(|&d| (0..m).all(|r| self.pieces[r] == self.pieces[r % d]))
            .unwrap_or(m);
        let mut pieces = self.pieces;
        pieces.truncate(least);
        RcwaMapping {
            modulus: least as i64,
            pieces,
        }
    }

    /// Representation of a class transposition. On the classes inside
    /// `r1(m1)` the map is `n ↦ (m2*n + r2*m1 - r1*m2) / m1`, symmetrically on
    /// `r2(m2)`, and the identity elsewhere.
    pub fn from_transposition(t: &ClassTransposition) -> Self {
        let [a, b] = t.cells();
        let (r1, m1, r2, m2) = (a.residue(), a.modulus(), b.residue(), b.modulus());
        let modulus = m1.lcm(&m2);
        let forward = AffinePiece::new(m2, r2 * m1 - r1 * m2, m1).expect("nonzero modulus");
        let backward = AffinePiece::new(m1, r1 * m2 - r2 * m1, m2).expect("nonzero modulus");
        let pieces = (0..modulus)
            .map(|r| {
                if a.contains(r) {
                    forward
                } else if b.contains(r) {
                    backward
                } else {
                    AffinePiece::IDENTITY
                }
            })
            .collect();
        RcwaMapping::new(pieces).expect("class transposition pieces are integral on their classes")
    }

    pub fn modulus(&self) -> i64 {
        self.modulus
    }

    pub fn pieces(&self) -> &[AffinePiece] {
        &self.pieces
    }

    pub fn piece_for(&self, n: i64) -> AffinePiece {
        self.pieces[n.rem_euclid(self.modulus) as usize]
    }

    /// lcm of the `a` coefficients (in absolute value).
    pub fn multiplier(&self) -> i64 {
        self.pieces.iter().fold(1, |acc, p| acc.lcm(&p.a))
    }

    /// lcm of the `c` coefficients.
    pub fn divisor(&self) -> i64 {
        self.pieces.iter().fold(1, |acc, p| acc.lcm(&p.c))
    }

    pub fn is_integral(&self) -> bool {
        self.divisor() == 1
    }

    pub fn checked_apply(&self, n: i64) -> Option<i64> {
        self.piece_for(n).apply(n)
    }

    pub fn apply(&self, n: i64) -> i64 {
        self.checked_apply(n)
            .unwrap_or_else(|| panic!("rcwa image of {n} overflows i64"))
    }
}

impl fmt::Display for RcwaMapping {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (r, piece) in self.pieces.iter().enumerate() {
            if r > 0 {
                f.write_str("\n")?;
            }
            write!(f, "{r}({}): n ↦ {piece}", self.modulus)?;
        }
        Ok(())
    }
}

pub fn to_rcwa(t: &ClassTransposition) -> RcwaMapping {
    RcwaMapping::from_transposition(t)
}

/// Integrality decided twice: through the divisor of the affine form and
/// through the geometric type. The two always agree.
pub fn is_integral(t: &ClassTransposition) -> bool {
    let by_divisor = to_rcwa(t).is_integral();
    let by_orientation = t.is_horizontal();
    assert_eq!(
        by_divisor, by_orientation,
        "integrality of {t} disagrees between divisor and orientation"
    );
    by_divisor
}
