//! Orders of products `t1·t2` by three independent routes.
//!
//! * `finite`: reduce a horizontal pair to residues modulo `lcm(m1, m2)`.
//! * `graph`: cycle lengths read off the components of the product graph.
//! * `trace`: iterate the product on a window of integers.
//!
//! Only horizontal pairs (and equal pairs) get status `exact`. Oblique pairs
//! get `window-exact` when every orbit through the window closes within the
//! budget, `unknown` otherwise. Infinite order is never certified.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::One;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::{
    shape_match_horizontal, ComponentKind, CycleLength, GraphComponent, Letter, ProductGraph,
    Vertex,
};
use crate::perm::horizontal_product_perm;
use crate::trace::trace_range;
use crate::transposition::ClassTransposition;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum OrderStatus {
    Exact,
    WindowExact,
    Unknown,
}

impl fmt::Display for OrderStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OrderStatus::Exact => "exact",
            OrderStatus::WindowExact => "window-exact",
            OrderStatus::Unknown => "unknown",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Finite,
    Graph,
    Trace,
}

impl Method {
    pub const ALL: [Method; 3] = [Method::Finite, Method::Graph, Method::Trace];
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Finite => "finite",
            Method::Graph => "graph",
            Method::Trace => "trace",
        })
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "finite" => Ok(Method::Finite),
            "graph" => Ok(Method::Graph),
            "trace" => Ok(Method::Trace),
            _ => Err(Error::Parse {
                what: "method",
                input: s.to_string(),
            }),
        }
    }
}

/// Summary line for one component in an [`OrderReport`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComponentSummary {
    pub kind: ComponentKind,
    pub shape: Option<u8>,
    pub vertices: usize,
    pub type1_edges: usize,
    pub mu_min: i64,
}

impl ComponentSummary {
    fn of(c: &GraphComponent, shape: Option<u8>) -> Self {
        ComponentSummary {
            kind: c.kind,
            shape,
            vertices: c.len(),
            type1_edges: c.type1_edges,
            mu_min: c.mu_min(),
        }
    }
}

fn serialize_opt_big<S: Serializer>(v: &Option<BigUint>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match v {
        Some(n) => s.serialize_str(&n.to_string()),
        None => s.serialize_none(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrderReport {
    pub t1: ClassTransposition,
    pub t2: ClassTransposition,
    pub method: Method,
    pub status: OrderStatus,
    #[serde(serialize_with = "serialize_opt_big")]
    pub order: Option<BigUint>,
    /// lcm of the cycle lengths certified so far; a divisor of the order
    /// whenever the order is finite. Equals `order` unless status is unknown.
    #[serde(serialize_with = "serialize_opt_big")]
    pub partial_order: Option<BigUint>,
    /// Sorted distinct cycle lengths found.
    pub cycle_lengths: Vec<u64>,
    pub components: Vec<ComponentSummary>,
    pub budget: usize,
    /// Half-width `W` of the seeding window `[-W, W]`; `None` for the exact
    /// horizontal route.
    pub window: Option<i64>,
}

impl OrderReport {
    fn new(t1: ClassTransposition, t2: ClassTransposition, method: Method, budget: usize) -> Self {
        OrderReport {
            t1,
            t2,
            method,
            status: OrderStatus::Exact,
            order: Some(BigUint::one()),
            partial_order: Some(BigUint::one()),
            cycle_lengths: Vec::new(),
            components: Vec::new(),
            budget,
            window: None,
        }
    }

    fn set_lengths(&mut self, lengths: impl IntoIterator<Item = u64>) {
        let mut lengths: Vec<u64> = lengths.into_iter().collect();
        lengths.sort_unstable();
        lengths.dedup();
        let lcm = lengths
            .iter()
            .fold(BigUint::one(), |acc, &n| acc.lcm(&BigUint::from(n)));
        self.cycle_lengths = lengths;
        self.partial_order = Some(lcm.clone());
        self.order = (self.status != OrderStatus::Unknown).then_some(lcm);
    }
}

/// Default half-width of the seeding window for a budget.
pub fn default_window(budget: usize) -> i64 {
    (budget / 10).max(1) as i64
}

fn is_horizontal_pair(t1: &ClassTransposition, t2: &ClassTransposition) -> bool {
    t1.is_horizontal() && t2.is_horizontal()
}

/// Order through the reduction to residues modulo `lcm(m1, m2)`.
pub fn product_order_finite(t1: &ClassTransposition, t2: &ClassTransposition) -> Result<OrderReport> {
    let perm = horizontal_product_perm(&[*t1, *t2])?;
    let cs = perm.cycle_structure();
    let mut report = OrderReport::new(*t1, *t2, Method::Finite, 0);
    report.set_lengths(cs.cycles.iter().map(|c| c.len() as u64).chain(
        (!cs.fixed.is_empty()).then_some(1),
    ));
    Ok(report)
}

/// Order through product-graph components, with the default window.
pub fn product_order_graph(t1: &ClassTransposition, t2: &ClassTransposition, budget: usize) -> Result<OrderReport> {
    product_order_graph_window(t1, t2, budget, default_window(budget))
}

/// Horizontal pairs: exact order from one representative per translation
/// class of components, every component checked against the shape
/// catalogue. Other pairs: components seeded from all vertices with
/// `|μ| ≤ window`.
pub fn product_order_graph_window(
    t1: &ClassTransposition,
    t2: &ClassTransposition,
    budget: usize,
    window: i64,
) -> Result<OrderReport> {
    let graph = ProductGraph::new(*t1, *t2);
    let mut report = OrderReport::new(*t1, *t2, Method::Graph, budget);

    if is_horizontal_pair(t1, t2) {
        let components = graph.horizontal_components()?;
        let mut lengths = Vec::new();
        for c in &components {
            let shape = shape_match_horizontal(c)?;
            lengths.extend(finite_lengths(c)?);
            report.components.push(ComponentSummary::of(c, Some(shape.shape)));
        }
        report.set_lengths(lengths);
        return Ok(report);
    }

    report.window = Some(window);
    if t1 == t2 {
        // identical involutions: every component is a full square
        report.set_lengths([1]);
        return Ok(report);
    }

    report.status = OrderStatus::WindowExact;
    let (components, complete) = window_components(&graph, budget, window);
    let mut lengths = Vec::new();
    for c in &components {
        report.components.push(ComponentSummary::of(c, None));
        if c.kind != ComponentKind::Truncated {
            lengths.extend(finite_lengths(c)?);
        }
    }
    if !complete {
        report.status = OrderStatus::Unknown;
    }
    report.set_lengths(lengths);
    Ok(report)
}

/// Components through all vertices with `|μ| ≤ window`, each explored once,
/// in seeding order (letters a, b, c, d; increasing index). Stops after the
/// first truncated component; the flag tells whether every one closed.
pub fn window_components(graph: &ProductGraph, budget: usize, window: i64) -> (Vec<GraphComponent>, bool) {
    let mut visited: HashSet<Vertex> = HashSet::new();
    let mut components = Vec::new();
    for letter in Letter::ALL {
        let cell = graph.cell(letter);
        let (r, m) = (cell.residue(), cell.modulus());
        let lo = Integer::div_ceil(&(-window - r), &m);
        let hi = Integer::div_floor(&(window - r), &m);
        for index in lo..=hi {
            let seed = Vertex::new(letter, index);
            if visited.contains(&seed) {
                continue;
            }
            let c = graph.explore(seed, budget);
            visited.extend(c.vertices.iter().copied());
            let truncated = c.kind == ComponentKind::Truncated;
            components.push(c);
            if truncated {
                return (components, false);
            }
        }
    }
    (components, true)
}

fn finite_lengths(c: &GraphComponent) -> Result<Vec<u64>> {
    c.cycle_lengths()?
        .into_iter()
        .map(|l| match l {
            CycleLength::Finite(n) => Ok(n),
            CycleLength::Infinite => Err(Error::NotClassified),
        })
        .collect()
}

/// Order by iterating the product: over one period for horizontal pairs,
/// over `[-window, window]` otherwise, each orbit capped at `budget` steps.
pub fn product_order_trace(
    t1: &ClassTransposition,
    t2: &ClassTransposition,
    budget: usize,
    window: i64,
) -> Result<OrderReport> {
    let mut report = OrderReport::new(*t1, *t2, Method::Trace, budget);
    let (lo, hi) = if is_horizontal_pair(t1, t2) {
        let period = t1.cell_a().modulus().lcm(&t2.cell_a().modulus());
        (0, period - 1)
    } else {
        report.window = Some(window);
        if t1 != t2 {
            report.status = OrderStatus::WindowExact;
        }
        (-window, window)
    };
    let summary = trace_range(t1, t2, lo, hi, budget as u64);
    if summary.open_at.is_some() {
        report.status = OrderStatus::Unknown;
    }
    report.set_lengths(summary.lengths);
    Ok(report)
}

pub fn product_order(
    t1: &ClassTransposition,
    t2: &ClassTransposition,
    method: Method,
    budget: usize,
) -> Result<OrderReport> {
    match method {
        Method::Finite => product_order_finite(t1, t2),
        Method::Graph => product_order_graph(t1, t2, budget),
        Method::Trace => product_order_trace(t1, t2, budget, default_window(budget)),
    }
}

/// Methods that can be run on the pair.
pub fn applicable_methods(t1: &ClassTransposition, t2: &ClassTransposition) -> Vec<Method> {
    if is_horizontal_pair(t1, t2) {
        Method::ALL.to_vec()
    } else {
        vec![Method::Graph, Method::Trace]
    }
}

/// Two reports disagree when both certify an order and the orders differ.
pub fn reports_disagree(a: &OrderReport, b: &OrderReport) -> bool {
    match (&a.order, &b.order) {
        (Some(x), Some(y)) => x != y,
        _ => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ct(text: &str) -> ClassTransposition {
        text.parse().unwrap()
    }

    fn order_of(report: &OrderReport) -> u64 {
        report.order.as_ref().unwrap().try_into().unwrap()
    }

    #[test]
    fn published_witnesses() {
        for (t1, t2, expected) in [
            ("0(3),1(3)", "0(3),2(3)", 3),
            ("0(2),1(2)", "0(3),1(3)", 4),
            ("0(2),1(2)", "0(3),2(3)", 6),
            ("0(3),1(3)", "0(4),2(4)", 12),
            ("0(2),1(2)", "0(4),2(4)", 4),
            ("0(4),1(4)", "2(4),3(4)", 2),
        ] {
            for method in Method::ALL {
                let r = product_order(&ct(t1), &ct(t2), method, 10_000).unwrap();
                assert_eq!(r.status, OrderStatus::Exact);
                assert_eq!(order_of(&r), expected, "{t1} · {t2} via {method}");
            }
        }
    }

    #[test]
    fn equal_pairs_have_order_one() {
        for t in [ct("0(2),1(2)"), ct("1(2),0(4)"), ct("1(4),2(6)")] {
            let r = product_order_graph(&t, &t, 1000).unwrap();
            assert_eq!(r.status, OrderStatus::Exact);
            assert_eq!(order_of(&r), 1);
            let r = product_order_trace(&t, &t, 1000, 100).unwrap();
            assert_eq!(r.status, OrderStatus::Exact);
            assert_eq!(order_of(&r), 1);
        }
    }

    #[test]
    fn finite_method_rejects_oblique() {
        assert!(matches!(
            product_order_finite(&ct("1(2),0(4)"), &ct("0(3),1(3)")),
            Err(Error::NotHorizontal(_))
        ));
    }

    #[test]
    fn oblique_window_matches_trace() {
        let (t1, t2) = (ct("1(2),0(4)"), ct("0(3),1(3)"));
        let g = product_order_graph_window(&t1, &t2, 10_000, 200).unwrap();
        let t = product_order_trace(&t1, &t2, 10_000, 200).unwrap();
        assert_eq!(g.status, t.status);
        if g.status == OrderStatus::WindowExact {
            assert_eq!(g.order, t.order);
            assert_eq!(g.cycle_lengths, t.cycle_lengths);
        }
        assert_eq!(g.window, Some(200));
    }

    #[test]
    fn unknown_status_has_no_order() {
        // a component escaping to infinity cannot be closed within a tiny budget
        let (t1, t2) = (ct("1(2),0(4)"), ct("0(2),1(4)"));
        let r = product_order_graph_window(&t1, &t2, 3, 50).unwrap();
        assert_eq!(r.status, OrderStatus::Unknown);
        assert!(r.order.is_none());
        assert!(r.partial_order.is_some());
        let json = serde_json::to_value(&r).unwrap();
        assert!(json["order"].is_null());
    }

    #[test]
    fn report_json_shape() {
        let r = product_order_graph(&ct("0(2),1(2)"), &ct("0(3),2(3)"), 10_000).unwrap();
        let json = serde_json::to_value(&r).unwrap();
        assert_eq!(json["t1"], "0(2),1(2)");
        assert_eq!(json["status"], "exact");
        assert_eq!(json["order"], "6");
        assert_eq!(json["budget"], 10_000);
        assert!(json["window"].is_null());
        let first = &json["components"][0];
        for key in ["kind", "shape", "vertices", "type1_edges", "mu_min"] {
            assert!(first.get(key).is_some(), "missing {key}");
        }
    }
}
