//! The product graph of a pair of class transpositions.
//!
//! Vertices `a_k, b_k` (side V1) label the two cells of `t1`, vertices
//! `c_l, d_l` (side V2) the cells of `t2`; `μ` sends a vertex to the integer
//! it stands for. Type-2 edges join `a_k–b_k` and `c_l–d_l`; type-1 edges
//! join vertices on opposite sides with equal `μ`. Every vertex has exactly
//! one type-2 edge and at most one type-1 edge, so components are paths or
//! cycles. A finite component maps to the cycles of the product `t1·t2` on
//! its `μ`-values: a cycle with `4l` vertices gives two `l`-cycles, a path
//! with `n` vertices and `t` type-1 edges gives one `(n - t)`-cycle.
//!
//! The graph is never materialized; neighbors come from modular arithmetic.

use std::collections::{BTreeMap, HashSet};
use std::fmt;

use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::residue::ResidueClass;
use crate::transposition::ClassTransposition;

/// Default number of vertices explored per direction.
pub const DEFAULT_BUDGET: usize = 10_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Side {
    V1,
    V2,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Letter {
    A,
    B,
    C,
    D,
}

impl Letter {
    pub const ALL: [Letter; 4] = [Letter::A, Letter::B, Letter::C, Letter::D];

    pub fn side(self) -> Side {
        match self {
            Letter::A | Letter::B => Side::V1,
            Letter::C | Letter::D => Side::V2,
        }
    }

    /// The letter across the type-2 edge.
    pub fn partner(self) -> Letter {
        match self {
            Letter::A => Letter::B,
            Letter::B => Letter::A,
            Letter::C => Letter::D,
            Letter::D => Letter::C,
        }
    }

    fn as_char(self) -> char {
        match self {
            Letter::A => 'a',
            Letter::B => 'b',
            Letter::C => 'c',
            Letter::D => 'd',
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Vertex {
    pub letter: Letter,
    pub index: i64,
}

impl Vertex {
    pub fn new(letter: Letter, index: i64) -> Self {
        Vertex { letter, index }
    }

    pub fn side(&self) -> Side {
        self.letter.side()
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.letter.as_char(), self.index)
    }
}

/// Adjacency of one vertex: the type-2 partner always exists, the type-1
/// partner only when `μ(v)` is moved by the other transposition.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Adjacency {
    pub type2: Vertex,
    pub type1: Option<Vertex>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ComponentKind {
    /// Finite, every vertex 2-valent.
    Cycle,
    /// Finite with two 1-valent endpoints.
    Path,
    /// Infinite in both directions.
    BiInfinite,
    /// Infinite with one 1-valent endpoint.
    OneSidedInfinite,
    /// Exploration hit the budget (or left the i64 range) before closing.
    Truncated,
}

impl fmt::Display for ComponentKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ComponentKind::Cycle => "cycle",
            ComponentKind::Path => "path",
            ComponentKind::BiInfinite => "bi-infinite",
            ComponentKind::OneSidedInfinite => "one-sided-infinite",
            ComponentKind::Truncated => "truncated",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(untagged)]
pub enum CycleLength {
    Finite(u64),
    #[serde(serialize_with = "serialize_infinite")]
    Infinite,
}

fn serialize_infinite<S: serde::Serializer>(s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str("infinite")
}

impl fmt::Display for CycleLength {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CycleLength::Finite(n) => write!(f, "{n}"),
            CycleLength::Infinite => f.write_str("∞"),
        }
    }
}

/// A connected component, listed in walk order. Paths run from the endpoint
/// with the smaller `μ` to the larger one; cycles start at their least
/// `(μ, letter)` vertex and leave it along its type-2 edge.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GraphComponent {
    pub kind: ComponentKind,
    pub vertices: Vec<Vertex>,
    pub mu: Vec<i64>,
    pub type1_edges: usize,
}

impl GraphComponent {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn mu_min(&self) -> i64 {
        *self.mu.iter().min().expect("components are nonempty")
    }

    /// Distinct `μ`-values, sorted. These form the support of the product
    /// cycles the component stands for.
    pub fn support(&self) -> Vec<i64> {
        let mut values = self.mu.clone();
        values.sort_unstable();
        values.dedup();
        values
    }

    pub fn letters(&self) -> String {
        self.vertices.iter().map(|v| v.letter.as_char()).collect()
    }

    pub fn cycle_lengths(&self) -> Result<Vec<CycleLength>> {
        component_cycle_lengths(self)
    }

    /// One-line textual dump: `kind [a0=0 b0=1 ...] type-1 edges t`.
    pub fn dump(&self) -> String {
        let body: Vec<String> = self
            .vertices
            .iter()
            .zip(&self.mu)
            .map(|(v, m)| format!("{v}={m}"))
            .collect();
        format!(
            "{:?} [{}] type-1 edges {}",
            self.kind,
            body.join(" "),
            self.type1_edges
        )
    }
}

pub fn component_cycle_lengths(c: &GraphComponent) -> Result<Vec<CycleLength>> {
    match c.kind {
        ComponentKind::Cycle => {
            let l = (c.len() / 4) as u64;
            Ok(vec![CycleLength::Finite(l); 2])
        }
        ComponentKind::Path => Ok(vec![CycleLength::Finite((c.len() - c.type1_edges) as u64)]),
        ComponentKind::BiInfinite => Ok(vec![CycleLength::Infinite; 2]),
        ComponentKind::OneSidedInfinite => Ok(vec![CycleLength::Infinite]),
        ComponentKind::Truncated => Err(Error::NotClassified),
    }
}

/// The implicit graph of the pair `(t1, t2)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ProductGraph {
    t1: ClassTransposition,
    t2: ClassTransposition,
}

impl ProductGraph {
    pub fn new(t1: ClassTransposition, t2: ClassTransposition) -> Self {
        ProductGraph { t1, t2 }
    }

    pub fn t1(&self) -> ClassTransposition {
        self.t1
    }

    pub fn t2(&self) -> ClassTransposition {
        self.t2
    }

    pub fn cell(&self, letter: Letter) -> ResidueClass {
        match letter {
            Letter::A => self.t1.cell_a(),
            Letter::B => self.t1.cell_b(),
            Letter::C => self.t2.cell_a(),
            Letter::D => self.t2.cell_b(),
        }
    }

    pub fn checked_mu(&self, v: Vertex) -> Option<i64> {
        self.cell(v.letter).element(v.index)
    }

    pub fn mu(&self, v: Vertex) -> i64 {
        self.checked_mu(v)
            .unwrap_or_else(|| panic!("μ({v}) overflows i64"))
    }

    /// The vertex with letter `letter` and value `value`, if `value` lies in
    /// that cell.
    pub fn vertex_at(&self, letter: Letter, value: i64) -> Option<Vertex> {
        self.cell(letter)
            .index_of(value)
            .map(|index| Vertex::new(letter, index))
    }

    /// Type-1 partner: the opposite-side vertex with the same `μ`.
    fn across(&self, v: Vertex, value: i64) -> Option<Vertex> {
        let candidates = match v.side() {
            Side::V1 => [Letter::C, Letter::D],
            Side::V2 => [Letter::A, Letter::B],
        };
        candidates
            .into_iter()
            .find_map(|letter| self.vertex_at(letter, value))
    }

    pub fn adjacency(&self, v: Vertex) -> Option<Adjacency> {
        let value = self.checked_mu(v)?;
        let type2 = Vertex::new(v.letter.partner(), v.index);
        self.checked_mu(type2)?;
        Some(Adjacency {
            type2,
            type1: self.across(v, value),
        })
    }

    /// Neighbors of `v`: the type-2 partner first, then the type-1 partner
    /// if it exists.
    pub fn neighbors(&self, v: Vertex) -> Vec<Vertex> {
        let adj = self
            .adjacency(v)
            .unwrap_or_else(|| panic!("μ near {v} overflows i64"));
        std::iter::once(adj.type2).chain(adj.type1).collect()
    }

    /// Walks the component of `start` in both directions, at most `budget`
    /// vertices each way.
    pub fn explore(&self, start: Vertex, budget: usize) -> GraphComponent {
        let budget = budget.max(1);
        // Forward: leave `start` along its type-2 edge and alternate.
        let mut forward = vec![start];
        let mut current = start;
        let mut via_type2 = true;
        let mut closed = false;
        let mut forward_open = false;
        loop {
            let Some(adj) = self.adjacency(current) else {
                forward_open = true;
                break;
            };
            let next = if via_type2 { Some(adj.type2) } else { adj.type1 };
            let Some(next) = next else { break };
            if next == start {
                closed = true;
                break;
            }
            if forward.len() >= budget {
                forward_open = true;
                break;
            }
            forward.push(next);
            current = next;
            via_type2 = !via_type2;
        }

        if closed {
            return self.finish(ComponentKind::Cycle, forward);
        }

        // Backward: leave `start` along its type-1 edge, if any.
        let mut backward = Vec::new();
        let mut backward_open = false;
        current = start;
        via_type2 = false;
        loop {
            let Some(adj) = self.adjacency(current) else {
                backward_open = true;
                break;
            };
            let next = if via_type2 { Some(adj.type2) } else { adj.type1 };
            let Some(next) = next else { break };
            if backward.len() >= budget {
                backward_open = true;
                break;
            }
            backward.push(next);
            current = next;
            via_type2 = !via_type2;
        }

        backward.reverse();
        backward.extend(forward);
        let kind = if forward_open || backward_open {
            ComponentKind::Truncated
        } else {
            ComponentKind::Path
        };
        self.finish(kind, backward)
    }

    fn finish(&self, kind: ComponentKind, mut vertices: Vec<Vertex>) -> GraphComponent {
        let mut mu: Vec<i64> = vertices.iter().filter_map(|&v| self.checked_mu(v)).collect();
        // a vertex whose μ overflows can only sit at a truncated end
        if mu.len() < vertices.len() {
            vertices.retain(|&v| self.checked_mu(v).is_some());
        }
        match kind {
            ComponentKind::Path => {
                if mu.first() > mu.last() {
                    vertices.reverse();
                    mu.reverse();
                }
            }
            ComponentKind::Cycle => {
                let start = (0..vertices.len())
                    .min_by_key(|&i| (mu[i], vertices[i].letter))
                    .expect("nonempty");
                vertices.rotate_left(start);
                mu.rotate_left(start);
                // walk must leave the first vertex along its type-2 edge
                if vertices.len() > 1 && vertices[1].side() != vertices[0].side() {
                    vertices[1..].reverse();
                    mu[1..].reverse();
                }
            }
            _ => {}
        }
        let mut type1_edges = vertices
            .windows(2)
            .filter(|w| w[0].side() != w[1].side())
            .count();
        if kind == ComponentKind::Cycle
            && vertices.first().map(Vertex::side) != vertices.last().map(Vertex::side)
        {
            type1_edges += 1;
        }
        GraphComponent {
            kind,
            vertices,
            mu,
            type1_edges,
        }
    }


    /// `lcm` of the two moduli of a horizontal pair: the translation period
    /// of the graph.
    pub fn period(&self) -> Result<i64> {
        Ok(self.t1.horizontal_modulus()?.lcm(&self.t2.horizontal_modulus()?))
    }

    /// Shifts every vertex by `periods * N` in `μ`.
    fn translate(&self, c: &GraphComponent, period: i64, periods: i64) -> GraphComponent {
        let shift = period * periods;
        let vertices = c
            .vertices
            .iter()
            .map(|v| Vertex::new(v.letter, v.index + shift / self.cell(v.letter).modulus()))
            .collect();
        GraphComponent {
            kind: c.kind,
            vertices,
            mu: c.mu.iter().map(|m| m + shift).collect(),
            type1_edges: c.type1_edges,
        }
    }

    /// One representative per translation class of components of a horizontal
    /// pair, each shifted so its least `μ` lies in `[0, N)`, sorted by that
    /// `μ`.
    pub fn horizontal_components(&self) -> Result<Vec<GraphComponent>> {
        if !self.t1.is_horizontal() {
            return Err(Error::NotHorizontal(self.t1.to_string()));
        }
        if !self.t2.is_horizontal() {
            return Err(Error::NotHorizontal(self.t2.to_string()));
        }
        let period = self.period()?;
        // horizontal components have at most 10 vertices; the slack only
        // matters if that bound were ever violated
        let budget = 4 * period as usize + 16;
        let mut covered = HashSet::new();
        let mut found = BTreeMap::new();
        for letter in Letter::ALL {
            let per_period = period / self.cell(letter).modulus();
            for index in 0..per_period {
                if covered.contains(&(letter, index)) {
                    continue;
                }
                let component = self.explore(Vertex::new(letter, index), budget);
                if component.kind == ComponentKind::Truncated {
                    return Err(Error::ShapeViolation(format!(
                        "horizontal pair ({}, {}) has a component exceeding {budget} vertices: {}",
                        self.t1,
                        self.t2,
                        component.dump()
                    )));
                }
                for v in &component.vertices {
                    let m = period / self.cell(v.letter).modulus();
                    covered.insert((v.letter, v.index.rem_euclid(m)));
                }
                let mu_min = component.mu_min();
                let rep = self.translate(&component, period, -Integer::div_floor(&mu_min, &period));
                let key = rep
                    .vertices
                    .iter()
                    .zip(&rep.mu)
                    .map(|(v, &m)| (m, v.letter))
                    .min()
                    .expect("nonempty");
                found.entry(key).or_insert(rep);
            }
        }
        Ok(found.into_values().collect())
    }
}

pub fn neighbors(t1: &ClassTransposition, t2: &ClassTransposition, v: Vertex) -> Vec<Vertex> {
    ProductGraph::new(*t1, *t2).neighbors(v)
}

pub fn explore_component(
    t1: &ClassTransposition,
    t2: &ClassTransposition,
    start: Vertex,
    budget: usize,
) -> GraphComponent {
    ProductGraph::new(*t1, *t2).explore(start, budget)
}

pub fn enumerate_components_horizontal(
    t1: &ClassTransposition,
    t2: &ClassTransposition,
) -> Result<Vec<GraphComponent>> {
    ProductGraph::new(*t1, *t2).horizontal_components()
}

/// Result of matching a component of a horizontal pair against the shape
/// catalogue.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct ShapeMatch {
    pub shape: u8,
    /// Whether a reflection (side swap and/or left-right mirror) was needed.
    pub reflected: bool,
}

impl ShapeMatch {
    /// Shapes 1-7 form the published catalogue; 8 is the staircase.
    pub fn is_catalogued(&self) -> bool {
        self.shape <= 7
    }
}

/// Id of the three-step staircase `a < b = c < d = a' < b'`. It occurs for
/// horizontal pairs (the 4-cycle of `τ_{0(2),1(2)}·τ_{0(3),1(3)}` is one) but
/// is missing from the seven drawn shapes.
pub const STAIRCASE_SHAPE: u8 = 8;

/// Path shapes as letter sequences along the path; shape 4 is the 4-vertex
/// cycle `a b d c`.
const PATH_SHAPES: [(u8, &str); 7] = [
    (1, "ab"),
    (2, "bacd"),
    (3, "cdab"),
    (5, "bacdab"),
    (6, "bacdba"),
    (7, "bacdabcdba"),
    (STAIRCASE_SHAPE, "abcdab"),
];

/// Letter maps for the reflections: identity, side swap (a↔c, b↔d),
/// mirror (a↔b, c↔d), and both.
const REFLECTIONS: [[char; 4]; 4] = [
    ['a', 'b', 'c', 'd'],
    ['c', 'd', 'a', 'b'],
    ['b', 'a', 'd', 'c'],
    ['d', 'c', 'b', 'a'],
];

fn reflect(letters: &str, map: &[char; 4]) -> String {
    letters
        .chars()
        .map(|ch| map[(ch as u8 - b'a') as usize])
        .collect()
}

/// All spellings of `letters` under reflections and reversal of the reading
/// direction, tagged with whether a reflection was used.
fn symmetric_spellings(letters: &str) -> Vec<(String, bool)> {
    let reversed: String = letters.chars().rev().collect();
    REFLECTIONS
        .iter()
        .enumerate()
        .flat_map(|(i, map)| {
            [(reflect(letters, map), i != 0), (reflect(&reversed, map), i != 0)]
        })
        .collect()
}

pub fn shape_match_horizontal(c: &GraphComponent) -> Result<ShapeMatch> {
    let violation = || Error::ShapeViolation(c.dump());
    match c.kind {
        ComponentKind::Cycle => {
            let mut letters: Vec<Letter> = c.vertices.iter().map(|v| v.letter).collect();
            letters.sort();
            if letters == Letter::ALL {
                Ok(ShapeMatch {
                    shape: 4,
                    reflected: false,
                })
            } else {
                Err(violation())
            }
        }
        ComponentKind::Path => {
            let letters = c.letters();
            let mut best: Option<ShapeMatch> = None;
            for (shape, pattern) in PATH_SHAPES {
                if pattern.len() != letters.len() {
                    continue;
                }
                for (spelling, reflected) in symmetric_spellings(pattern) {
                    if spelling == letters {
                        let candidate = ShapeMatch { shape, reflected };
                        best = Some(match best {
                            Some(b) if b.shape != shape => return Err(violation()),
                            Some(b) if !b.reflected => b,
                            _ => candidate,
                        });
                    }
                }
            }
            best.ok_or_else(violation)
        }
        _ => Err(violation()),
    }
}

/// Whether the walk contains the staircase `a b c d a b c d` (or a
/// reflection of it) as a contiguous run.
pub fn contains_staircase(c: &GraphComponent) -> bool {
    let letters = c.letters();
    let cyclic = if c.kind == ComponentKind::Cycle {
        format!("{letters}{letters}")
    } else {
        letters
    };
    symmetric_spellings("abcdabcd")
        .iter()
        .any(|(pattern, _)| cyclic.contains(pattern.as_str()))
}
