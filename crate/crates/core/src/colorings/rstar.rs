use serde::Serialize;

use super::search::Engine;
use super::{EdgeColoring, StarColoring};
use crate::error::{Error, Result};
use crate::graph::complete;

pub const RSTAR_MAX_N: usize = 12;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RStarResult {
    /// Largest order shown feasible.
    pub n: usize,
    pub witness: StarColoring,
    /// `true` when order `n + 1` was shown infeasible; `false` when the node
    /// budget ran out or the order cap was reached first.
    pub complete: bool,
    pub nodes: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum StarFeasibility {
    Feasible,
    Infeasible,
    Incomplete,
}

/// Non-decreasing vertex colourings of `n` vertices over `k` colours.
fn for_each_vertex_coloring(n: usize, k: usize, f: &mut impl FnMut(&[usize]) -> bool) -> bool {
    fn rec(pos: usize, min: usize, k: usize, cur: &mut Vec<usize>, n: usize, f: &mut impl FnMut(&[usize]) -> bool) -> bool {
        if pos == n {
            return f(cur);
        }
        for c in min..k {
            cur.push(c);
            if rec(pos + 1, c, k, cur, n, f) {
                return true;
            }
            cur.pop();
        }
        false
    }
    rec(0, 0, k, &mut Vec::with_capacity(n), n, f)
}

/// Searches for a vertex+edge colouring of `K_n` with no edge-monochromatic
/// `K_{sizes[i]}` in colour `i` and no edge coloured like either endpoint.
/// Vertices of `K_n` are interchangeable, so vertex colours are enumerated as
/// non-decreasing sequences.
pub fn star_coloring_search(n: usize, sizes: &[usize], budget: &mut u64) -> (StarFeasibility, Option<StarColoring>, u64) {
    let k = sizes.len();
    let kn = complete(n);
    let mut nodes = 0;
    let mut witness = None;
    let mut aborted = false;
    for_each_vertex_coloring(n, k, &mut |vc| {
        let allowed = kn
            .edges()
            .map(|(u, v)| {
                let mut m = (1u32 << k) - 1;
                m &= !(1 << vc[u]);
                m &= !(1 << vc[v]);
                m
            })
            .collect();
        let mut engine = Engine::new(&kn, sizes, allowed, false, *budget);
        let found = engine.run(0);
        nodes += engine.nodes;
        *budget = budget.saturating_sub(engine.nodes);
        if found {
            witness = Some(StarColoring {
                vertex_color: vc.to_vec(),
                edges: engine.coloring(),
            });
            return true;
        }
        if engine.aborted {
            aborted = true;
            return true;
        }
        false
    });
    let verdict = match (&witness, aborted) {
        (Some(_), _) => StarFeasibility::Feasible,
        (None, true) => StarFeasibility::Incomplete,
        (None, false) => StarFeasibility::Infeasible,
    };
    (verdict, witness, nodes)
}

/// `r*(K_{a_1},..,K_{a_k})` for orders up to [`RSTAR_MAX_N`].
pub fn r_star_search(sizes: &[usize], budget: Option<u64>) -> Result<RStarResult> {
    let k = sizes.len();
    if !(2..=16).contains(&k) {
        return Err(Error::InvalidParameter(format!("need 2 <= k <= 16 colours, got {k}")));
    }
    if let Some(a) = sizes.iter().find(|&&a| a < 2) {
        return Err(Error::InvalidParameter(format!("clique size {a} < 2")));
    }
    let mut budget = budget.unwrap_or(u64::MAX);
    let mut best = StarColoring {
        vertex_color: vec![],
        edges: EdgeColoring::new(0, k),
    };
    let mut total = 0;
    for n in 1..=RSTAR_MAX_N {
        let (verdict, witness, nodes) = star_coloring_search(n, sizes, &mut budget);
        total += nodes;
        match verdict {
            StarFeasibility::Feasible => best = witness.expect("feasible verdict carries a witness"),
            StarFeasibility::Infeasible => {
                return Ok(RStarResult {
                    n: n - 1,
                    witness: best,
                    complete: true,
                    nodes: total,
                })
            }
            StarFeasibility::Incomplete => break,
        }
    }
    Ok(RStarResult {
        n: best.n(),
        witness: best,
        complete: false,
        nodes: total,
    })
}
