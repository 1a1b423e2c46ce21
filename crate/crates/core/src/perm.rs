use std::fmt;
use std::ops::Mul;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rcwa::{AffinePiece, RcwaMapping};
use crate::transposition::ClassTransposition;

/// A bijection of `{0, ..., N-1}` stored as its image table.
///
/// Products compose left to right: `(p * q)(x) = q(p(x))`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FinitePermutation {
    images: Vec<usize>,
}

impl FinitePermutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        if n == 0 {
            return Err(Error::InvalidArgument("permutation degree must be at least 1".into()));
        }
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n || std::mem::replace(&mut seen[x], true) {
                return Err(Error::InvalidArgument(format!(
                    "image table {images:?} is not a bijection of 0..{n}"
                )));
            }
        }
        Ok(FinitePermutation { images })
    }

    pub fn identity(degree: usize) -> Self {
        FinitePermutation {
            images: (0..degree).collect(),
        }
    }

    /// Builds a permutation from disjoint cycles. Singleton cycles are allowed.
    pub fn from_cycles<C: AsRef<[usize]>>(degree: usize, cycles: &[C]) -> Result<Self> {
        if degree == 0 {
            return Err(Error::InvalidArgument("permutation degree must be at least 1".into()));
        }
        let mut images: Vec<usize> = (0..degree).collect();
        let mut used = vec![false; degree];
        for cycle in cycles {
            let cycle = cycle.as_ref();
            for (i, &x) in cycle.iter().enumerate() {
                if x >= degree || std::mem::replace(&mut used[x], true) {
                    return Err(Error::InvalidArgument(format!(
                        "cycle {cycle:?} repeats a point or leaves 0..{degree}"
                    )));
                }
                images[x] = cycle[(i + 1) % cycle.len()];
            }
        }
        Ok(FinitePermutation { images })
    }

    /// Parses cycle notation such as `(0,1)(2,3)`; `()` is the identity.
    pub fn parse_cycles(text: &str, degree: usize) -> Result<Self> {
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let bad = || Error::Parse {
            what: "cycle notation",
            input: text.to_string(),
        };
        let inner = compact
            .strip_prefix('(')
            .and_then(|s| s.strip_suffix(')'))
            .ok_or_else(bad)?;
        let mut cycles = Vec::new();
        for group in inner.split(")(") {
            if group.is_empty() {
                continue;
            }
            let cycle = group
                .split(',')
                .map(|p| p.parse::<usize>().map_err(|_| bad()))
                .collect::<Result<Vec<_>>>()?;
            cycles.push(cycle);
        }
        Self::from_cycles(degree, &cycles)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn image(&self, x: usize) -> usize {
        self.images[x]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// Applies `self` first, then `other`.
    pub fn then(&self, other: &FinitePermutation) -> Result<FinitePermutation> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch {
                expected: self.degree(),
                actual: other.degree(),
            });
        }
        Ok(self.compose_unchecked(other))
    }

    pub(crate) fn compose_unchecked(&self, other: &FinitePermutation) -> FinitePermutation {
        FinitePermutation {
            images: self.images.iter().map(|&x| other.images[x]).collect(),
        }
    }

    pub fn inverse(&self) -> FinitePermutation {
        let mut images = vec![0; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x] = i;
        }
        FinitePermutation { images }
    }

    pub fn cycle_structure(&self) -> CycleStructure {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut cycles = Vec::new();
        let mut fixed = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.images[start];
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.images[x];
            }
            if cycle.len() == 1 {
                fixed.push(start);
            } else {
                cycles.push(cycle);
            }
        }
        CycleStructure {
            degree: n,
            cycles,
            fixed,
        }
    }

    pub fn order(&self) -> BigUint {
        self.cycle_structure().order()
    }

    pub fn fixed_points(&self) -> Vec<usize> {
        (0..self.degree()).filter(|&i| self.images[i] == i).collect()
    }
}

impl Mul for &FinitePermutation {
    type Output = FinitePermutation;

    /// Left-to-right product. Panics on a degree mismatch.
    fn mul(self, rhs: &FinitePermutation) -> FinitePermutation {
        self.then(rhs).expect("permutation degrees differ")
    }
}

impl fmt::Display for FinitePermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycle_structure().cycles;
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for cycle in cycles {
            f.write_str("(")?;
            for (i, x) in cycle.iter().enumerate() {
                if i > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{x}")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

/// Disjoint cycle decomposition. Each cycle starts at its least point and
/// cycles are sorted by that point; fixed points are listed separately.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CycleStructure {
    pub degree: usize,
    pub cycles: Vec<Vec<usize>>,
    pub fixed: Vec<usize>,
}

impl CycleStructure {
    pub fn order(&self) -> BigUint {
        self.cycles
            .iter()
            .fold(BigUint::one(), |acc, c| acc.lcm(&BigUint::from(c.len())))
    }

    /// Renders the Z-action `x + N*s` of each cycle, e.g.
    /// `(6s)(1+6s)(2+6s,4+6s,5+6s,3+6s)`. Cycles and fixed points appear in
    /// the order of their least point.
    pub fn lift(&self) -> String {
        let n = self.degree;
        let term = |x: usize| {
            if x == 0 {
                format!("{n}s")
            } else {
                format!("{x}+{n}s")
            }
        };
        let mut families: Vec<(usize, Vec<usize>)> = self
            .cycles
            .iter()
            .map(|c| (c[0], c.clone()))
            .chain(self.fixed.iter().map(|&f| (f, vec![f])))
            .collect();
        families.sort();
        families
            .into_iter()
            .map(|(_, c)| {
                let body: Vec<String> = c.into_iter().map(term).collect();
                format!("({})", body.join(","))
            })
            .collect()
    }

    /// Inverse of [`CycleStructure::lift`]: reads the families at `s = 0`.
    pub fn parse_lifted(text: &str, degree: usize) -> Result<CycleStructure> {
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let bad = || Error::Parse {
            what: "lifted cycle family",
            input: text.to_string(),
        };
        let suffix = format!("{degree}s");
        let inner = compact
            .strip_prefix('(')
            .and_then(|s| s.strip_suffix(')'))
            .ok_or_else(bad)?;
        let mut cycles = Vec::new();
        for group in inner.split(")(") {
            let cycle = group
                .split(',')
                .map(|term| {
                    if term == suffix {
                        return Ok(0);
                    }
                    let offset = term
                        .strip_suffix(suffix.as_str())
                        .and_then(|t| t.strip_suffix('+'))
                        .ok_or_else(bad)?;
                    offset.parse::<usize>().map_err(|_| bad())
                })
                .collect::<Result<Vec<_>>>()?;
            cycles.push(cycle);
        }
        let perm = FinitePermutation::from_cycles(degree, &cycles)?;
        let covered: usize = cycles.iter().map(Vec::len).sum();
        if covered != degree {
            return Err(bad());
        }
        Ok(perm.cycle_structure())
    }

    pub fn report(&self) -> CycleReport {
        CycleReport {
            degree: self.degree,
            cycles: self.cycles.clone(),
            fixed: self.fixed.clone(),
            order: self.order().to_string(),
        }
    }
}

/// JSON form of a cycle structure; the order is a decimal string.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleReport {
    pub degree: usize,
    pub cycles: Vec<Vec<usize>>,
    pub fixed: Vec<usize>,
    pub order: String,
}

/// Image of a horizontal transposition with modulus dividing `degree` on the
/// residues modulo `degree`, i.e. `∏_k (n*k + r, n*k + r')`.
pub fn reduce_mod(t: &ClassTransposition, degree: usize) -> Result<FinitePermutation> {
    let modulus = t.horizontal_modulus()?;
    let n = i64::try_from(degree).map_err(|_| Error::Overflow("degree".into()))?;
    if n == 0 || n % modulus != 0 {
        return Err(Error::InvalidArgument(format!(
            "modulus {modulus} of {t} does not divide {degree}"
        )));
    }
    let images = (0..n).map(|x| t.apply(x).rem_euclid(n) as usize).collect();
    FinitePermutation::new(images)
}

/// The permutation of residues modulo `N = lcm of the moduli` induced by the
/// left-to-right product of horizontal transpositions.
pub fn horizontal_product_perm(ts: &[ClassTransposition]) -> Result<FinitePermutation> {
    if ts.is_empty() {
        return Err(Error::InvalidArgument("empty product".into()));
    }
    let mut degree = 1i64;
    for t in ts {
        degree = degree.lcm(&t.horizontal_modulus()?);
    }
    let degree = degree as usize;
    ts.iter().try_fold(FinitePermutation::identity(degree), |acc, t| {
        Ok(acc.compose_unchecked(&reduce_mod(t, degree)?))
    })
}

pub fn cycle_decomposition(p: &FinitePermutation) -> CycleStructure {
    p.cycle_structure()
}

pub fn perm_order(p: &FinitePermutation) -> BigUint {
    p.order()
}

pub fn lift_cycles(p: &FinitePermutation, degree: usize) -> Result<String> {
    if p.degree() != degree {
        return Err(Error::DegreeMismatch {
            expected: degree,
            actual: p.degree(),
        });
    }
    Ok(p.cycle_structure().lift())
}

/// The monomorphism `S_m → Sym(Z)`, `n ↦ n - (n mod m) + σ(n mod m)`.
pub fn embed_phi(m: usize, sigma: &FinitePermutation) -> Result<RcwaMapping> {
    if sigma.degree() != m {
        return Err(Error::DegreeMismatch {
            expected: m,
            actual: sigma.degree(),
        });
    }
    let pieces = (0..m)
        .map(|r| AffinePiece::new(1, sigma.image(r) as i64 - r as i64, 1))
        .collect::<Result<Vec<_>>>()?;
    RcwaMapping::new(pieces)
}
