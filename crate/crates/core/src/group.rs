//! Permutation groups on `{0, ..., N-1}` via a deterministic Schreier–Sims
//! stabilizer chain, and the groups generated by the images of `CT_k`.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::{reduce_mod, FinitePermutation};
use crate::transposition::ClassTransposition;

/// Generators of a permutation group together with where each came from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorSet {
    degree: usize,
    generators: Vec<FinitePermutation>,
    labels: Vec<String>,
}

impl GeneratorSet {
    pub fn new(degree: usize, generators: Vec<FinitePermutation>) -> Result<Self> {
        let labels = (0..generators.len()).map(|i| format!("g{i}")).collect();
        Self::with_labels(degree, generators, labels)
    }

    pub fn with_labels(
        degree: usize,
        generators: Vec<FinitePermutation>,
        labels: Vec<String>,
    ) -> Result<Self> {
        if degree == 0 {
            return Err(Error::InvalidArgument("degree must be at least 1".into()));
        }
        if labels.len() != generators.len() {
            return Err(Error::InvalidArgument("one label per generator required".into()));
        }
        if let Some(g) = generators.iter().find(|g| g.degree() != degree) {
            return Err(Error::DegreeMismatch {
                expected: degree,
                actual: g.degree(),
            });
        }
        Ok(GeneratorSet {
            degree,
            generators,
            labels,
        })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[FinitePermutation] {
        &self.generators
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    /// Points fixed by every generator.
    pub fn fixed_points(&self) -> Vec<usize> {
        (0..self.degree)
            .filter(|&x| self.generators.iter().all(|g| g.image(x) == x))
            .collect()
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let file: GeneratorsFile = serde_json::from_str(text).map_err(|e| Error::Parse {
            what: "generators file",
            input: e.to_string(),
        })?;
        let generators = file
            .generators
            .iter()
            .map(|g| FinitePermutation::from_cycles(file.degree, &g.cycles))
            .collect::<Result<Vec<_>>>()?;
        Self::new(file.degree, generators)
    }

    pub fn to_json(&self) -> String {
        let file = GeneratorsFile {
            degree: self.degree,
            generators: self
                .generators
                .iter()
                .map(|g| GeneratorEntry {
                    cycles: g.cycle_structure().cycles,
                })
                .collect(),
        };
        serde_json::to_string_pretty(&file).expect("plain data serializes")
    }
}

/// On-disk form: `{"degree": N, "generators": [{"cycles": [[...], ...]}, ...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorsFile {
    pub degree: usize,
    pub generators: Vec<GeneratorEntry>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorEntry {
    pub cycles: Vec<Vec<usize>>,
}

/// `lcm` of the given moduli.
pub fn ctk_degree(ks: &[usize]) -> usize {
    ks.iter().fold(1, |acc, k| acc.lcm(k))
}

fn ctk_generators_from(
    ks: &[usize],
    degree: usize,
    pairs: impl Fn(usize) -> Vec<(usize, usize)>,
) -> Result<GeneratorSet> {
    let mut generators = Vec::new();
    let mut labels = Vec::new();
    for &k in ks {
        if k < 1 || !degree.is_multiple_of(k) {
            return Err(Error::InvalidArgument(format!("{k} does not divide {degree}")));
        }
        for (r1, r2) in pairs(k) {
            let t = ClassTransposition::from_parts(r1 as i64, k as i64, r2 as i64, k as i64)?;
            generators.push(reduce_mod(&t, degree)?);
            labels.push(format!("CT_{k} τ_{{{t}}} mod {degree}"));
        }
    }
    GeneratorSet::with_labels(degree, generators, labels)
}

/// Images in `S_degree` of the adjacent transpositions `τ_{i(k),(i+1)(k)}`
/// for each `k`; these generate the image of `CT_k ≅ S_k`.
pub fn ctk_generators(ks: &[usize], degree: usize) -> Result<GeneratorSet> {
    ctk_generators_from(ks, degree, |k| (1..k).map(|i| (i - 1, i)).collect())
}

/// Like [`ctk_generators`] but with all `C(k, 2)` transpositions of each
/// modulus.
pub fn ctk_generators_full(ks: &[usize], degree: usize) -> Result<GeneratorSet> {
    ctk_generators_from(ks, degree, |k| {
        (0..k)
            .flat_map(|i| (i + 1..k).map(move |j| (i, j)))
            .collect()
    })
}

#[derive(Debug, Clone)]
struct Level {
    base_point: usize,
    /// Indices into the strong generating set of the generators fixing all
    /// earlier base points.
    generators: Vec<usize>,
    /// Orbit of the base point in discovery order.
    orbit: Vec<usize>,
    /// For each orbit point β: `u_β` with `base_point ↦ β`, and its inverse.
    transversal: Vec<Option<(FinitePermutation, FinitePermutation)>>,
}

impl Level {
    fn new(base_point: usize, degree: usize) -> Self {
        Level {
            base_point,
            generators: Vec::new(),
            orbit: Vec::new(),
            transversal: vec![None; degree],
        }
    }

    fn rebuild_orbit(&mut self, strong: &[FinitePermutation]) {
        let degree = self.transversal.len();
        self.transversal = vec![None; degree];
        let id = FinitePermutation::identity(degree);
        self.transversal[self.base_point] = Some((id.clone(), id));
        self.orbit = vec![self.base_point];
        let mut next = 0;
        while next < self.orbit.len() {
            let beta = self.orbit[next];
            next += 1;
            for &gi in &self.generators {
                let g = &strong[gi];
                let image = g.image(beta);
                if self.transversal[image].is_none() {
                    let (u, _) = self.transversal[beta].as_ref().expect("orbit point has a representative");
                    let rep = u.compose_unchecked(g);
                    let inv = rep.inverse();
                    self.transversal[image] = Some((rep, inv));
                    self.orbit.push(image);
                }
            }
        }
    }
}

/// Base and strong generating set with one transversal per base point.
#[derive(Debug, Clone)]
pub struct StabilizerChain {
    degree: usize,
    strong: Vec<FinitePermutation>,
    levels: Vec<Level>,
}

impl StabilizerChain {
    /// Deterministic Schreier–Sims. Base points are chosen as the least point
    /// moved by the generator that needs a new level.
    pub fn build(gens: &GeneratorSet) -> Self {
        let degree = gens.degree();
        let mut chain = StabilizerChain {
            degree,
            strong: Vec::new(),
            levels: Vec::new(),
        };
        for g in gens.generators() {
            if g.is_identity() || chain.strong.contains(g) {
                continue;
            }
            if chain.levels.iter().all(|l| g.image(l.base_point) == l.base_point) {
                let point = first_moved(g);
                chain.levels.push(Level::new(point, degree));
            }
            chain.strong.push(g.clone());
        }
        for i in 0..chain.levels.len() {
            chain.levels[i].generators = chain.fixing_prefix(i);
            let strong = &chain.strong;
            chain.levels[i].rebuild_orbit(strong);
        }

        let mut level = chain.levels.len();
        while level > 0 {
            let i = level - 1;
            match chain.find_missing_generator(i) {
                Some((h, j)) => {
                    if j == chain.levels.len() {
                        chain.levels.push(Level::new(first_moved(&h), degree));
                    }
                    chain.strong.push(h);
                    let idx = chain.strong.len() - 1;
                    for l in i + 1..=j {
                        chain.levels[l].generators.push(idx);
                        let strong = &chain.strong;
                        chain.levels[l].rebuild_orbit(strong);
                    }
                    level = j + 1;
                }
                None => level -= 1,
            }
        }
        chain
    }

    fn fixing_prefix(&self, level: usize) -> Vec<usize> {
        (0..self.strong.len())
            .filter(|&gi| {
                self.levels[..level]
                    .iter()
                    .all(|l| self.strong[gi].image(l.base_point) == l.base_point)
            })
            .collect()
    }

    /// Sifts every Schreier generator of level `i` through the levels below.
    /// Returns the first nontrivial residue and the level where sifting stopped.
    fn find_missing_generator(&self, i: usize) -> Option<(FinitePermutation, usize)> {
        let level = &self.levels[i];
        for &beta in &level.orbit {
            let (u_beta, _) = level.transversal[beta].as_ref().expect("orbit point");
            for &gi in &level.generators {
                let g = &self.strong[gi];
                let ug = u_beta.compose_unchecked(g);
                let (u_image, u_image_inv) =
                    level.transversal[g.image(beta)].as_ref().expect("orbit closed under generators");
                if &ug == u_image {
                    continue;
                }
                let schreier = ug.compose_unchecked(u_image_inv);
                let (residue, j) = self.strip(schreier, i + 1);
                if j < self.levels.len() || !residue.is_identity() {
                    return Some((residue, j));
                }
            }
        }
        None
    }

    /// Divides `g` by transversal elements from level `from` down. Returns the
    /// residue and the index of the level where the image of the base point
    /// fell outside the orbit (or the chain length if every level passed).
    fn strip(&self, mut g: FinitePermutation, from: usize) -> (FinitePermutation, usize) {
        for (j, level) in self.levels.iter().enumerate().skip(from) {
            let beta = g.image(level.base_point);
            match &level.transversal[beta] {
                Some((_, inv)) => g = g.compose_unchecked(inv),
                None => return (g, j),
            }
        }
        let len = self.levels.len();
        (g, len)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.base_point).collect()
    }

    pub fn strong_generators(&self) -> &[FinitePermutation] {
        &self.strong
    }

    /// Orbit sizes of the successive stabilizers.
    pub fn orbit_sizes(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    pub fn order(&self) -> BigUint {
        self.levels
            .iter()
            .fold(BigUint::one(), |acc, l| acc * BigUint::from(l.orbit.len()))
    }

    pub fn contains(&self, p: &FinitePermutation) -> Result<bool> {
        if p.degree() != self.degree {
            return Err(Error::DegreeMismatch {
                expected: self.degree,
                actual: p.degree(),
            });
        }
        let (residue, j) = self.strip(p.clone(), 0);
        Ok(j == self.levels.len() && residue.is_identity())
    }
}

fn first_moved(g: &FinitePermutation) -> usize {
    (0..g.degree())
        .find(|&x| g.image(x) != x)
        .expect("non-identity permutation moves a point")
}

pub fn bsgs_build(g: &GeneratorSet) -> StabilizerChain {
    StabilizerChain::build(g)
}

pub fn group_order(chain: &StabilizerChain) -> BigUint {
    chain.order()
}

pub fn contains(chain: &StabilizerChain, p: &FinitePermutation) -> Result<bool> {
    chain.contains(p)
}

pub fn fixed_points(g: &GeneratorSet) -> Vec<usize> {
    g.fixed_points()
}

pub fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, i| acc * BigUint::from(i))
}

/// Degree above which [`conjecture_check`] refuses to build a chain.
pub const DEFAULT_MAX_DEGREE: usize = 120;

fn serialize_big<S: serde::Serializer>(v: &BigUint, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConjectureReport {
    pub k: usize,
    #[serde(rename = "N")]
    pub degree: usize,
    #[serde(serialize_with = "serialize_big")]
    pub order: BigUint,
    #[serde(serialize_with = "serialize_big")]
    pub n_factorial: BigUint,
    pub equal: bool,
}

/// Builds `⟨CT_2, ..., CT_k⟩` inside `S_N`, `N = lcm(2, ..., k)`, and compares
/// its order with `N!`.
pub fn conjecture_check(k: usize, max_degree: usize) -> Result<ConjectureReport> {
    if k < 2 {
        return Err(Error::InvalidArgument(format!("k must be at least 2, got {k}")));
    }
    let ks: Vec<usize> = (2..=k).collect();
    let degree = ctk_degree(&ks);
    if degree > max_degree {
        return Err(Error::ResourceLimit {
            degree,
            limit: max_degree,
        });
    }
    let chain = bsgs_build(&ctk_generators(&ks, degree)?);
    let order = chain.order();
    let n_factorial = factorial(degree);
    Ok(ConjectureReport {
        k,
        degree,
        equal: order == n_factorial,
        order,
        n_factorial,
    })
}

/// Reference orders of `⟨CT_k : k in ks⟩`, each the factorial of the listed
/// number.
pub const REFERENCE_ORDERS: [(&[usize], usize); 6] = [
    (&[2, 3], 5),
    (&[2, 3, 4], 12),
    (&[3, 4], 12),
    (&[2, 5], 10),
    (&[3, 5], 15),
    (&[2, 3, 5], 30),
];

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableLine {
    pub ks: Vec<usize>,
    pub degree: usize,
    pub expected_factorial_of: usize,
    #[serde(serialize_with = "serialize_big")]
    pub expected: BigUint,
    #[serde(serialize_with = "serialize_big")]
    pub computed: BigUint,
    pub pass: bool,
}

pub fn verify_reference_orders() -> Result<Vec<TableLine>> {
    REFERENCE_ORDERS
        .iter()
        .map(|&(ks, m)| {
            let degree = ctk_degree(ks);
            let computed = bsgs_build(&ctk_generators(ks, degree)?).order();
            let expected = factorial(m);
            Ok(TableLine {
                ks: ks.to_vec(),
                degree,
                expected_factorial_of: m,
                pass: computed == expected,
                expected,
                computed,
            })
        })
        .collect()
}
