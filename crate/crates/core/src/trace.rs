//! Direct iteration of `x ↦ t2(t1(x))`.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::One;

use crate::transposition::ClassTransposition;

/// Outcome of following one point under the product.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Orbit {
    /// The point returned after this many steps.
    Closed(u64),
    /// No return within the step cap, or the values left the i64 range.
    Open { steps: u64 },
}

pub fn product_step(t1: &ClassTransposition, t2: &ClassTransposition, x: i64) -> Option<i64> {
    t2.checked_apply(t1.checked_apply(x)?)
}

/// Follows `x` until it returns or `cap` steps have been taken.
pub fn orbit_length(t1: &ClassTransposition, t2: &ClassTransposition, x: i64, cap: u64) -> Orbit {
    let mut y = x;
    for step in 1..=cap {
        match product_step(t1, t2, y) {
            Some(next) if next == x => return Orbit::Closed(step),
            Some(next) => y = next,
            None => return Orbit::Open { steps: step },
        }
    }
    Orbit::Open { steps: cap }
}

/// The first `steps` points of the trajectory of `x`, starting with `x`.
/// Stops early if a value would overflow.
pub fn trajectory(t1: &ClassTransposition, t2: &ClassTransposition, x: i64, steps: usize) -> Vec<i64> {
    let mut points = Vec::with_capacity(steps + 1);
    let mut y = Some(x);
    while let Some(value) = y {
        points.push(value);
        if points.len() > steps {
            break;
        }
        y = product_step(t1, t2, value);
    }
    points
}

/// Cycle-length data collected over a range of starting points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceSummary {
    /// lcm of all closed orbit lengths.
    pub lcm: BigUint,
    /// Sorted distinct closed orbit lengths.
    pub lengths: Vec<u64>,
    /// First starting point whose orbit did not close, if any.
    pub open_at: Option<i64>,
}

/// Traces every `x` in `lo..=hi`. Stops at the first open orbit.
pub fn trace_range(
    t1: &ClassTransposition,
    t2: &ClassTransposition,
    lo: i64,
    hi: i64,
    cap: u64,
) -> TraceSummary {
    let mut lcm = BigUint::one();
    let mut lengths = Vec::new();
    for x in lo..=hi {
        match orbit_length(t1, t2, x, cap) {
            Orbit::Closed(n) => {
                if !lengths.contains(&n) {
                    lengths.push(n);
                    lcm = lcm.lcm(&BigUint::from(n));
                }
            }
            Orbit::Open { .. } => {
                lengths.sort_unstable();
                return TraceSummary {
                    lcm,
                    lengths,
                    open_at: Some(x),
                };
            }
        }
    }
    lengths.sort_unstable();
    TraceSummary {
        lcm,
        lengths,
        open_at: None,
    }
}
