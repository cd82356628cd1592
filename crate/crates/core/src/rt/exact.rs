use std::collections::BTreeSet;
use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};

use rayon::prelude::*;
use serde::Serialize;

use super::canon::{Small, MAX_SMALL};
use crate::colorings::{freeness_search, EdgeColoring, FreenessSpec, SearchOutcome};
use crate::error::{Error, Result};
use crate::graph::Graph;

pub const RT_EXACT_MAX_N: usize = 10;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RtQuery {
    pub n: usize,
    pub spec: FreenessSpec,
    /// Independence cap.
    pub m: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RtStatus {
    Exact,
    Infeasible,
    Incomplete,
}

#[derive(Clone, Debug)]
pub struct RtResult {
    pub status: RtStatus,
    /// Best edge count found; exact when `status` is `Exact`.
    pub edges: Option<usize>,
    pub witness: Option<(Graph, EdgeColoring)>,
    /// Isomorphism classes kept at each order `1..=n`.
    pub classes_per_level: Vec<usize>,
    pub nodes: u64,
}

/// Whether a candidate survives, and the search nodes spent deciding it.
enum Verdict {
    Keep(u64),
    Drop(u64),
    Undecided(u64),
}

/// Orderly generation by vertex augmentation: every class on `k + 1`
/// vertices that passes `accept` arises by extending some accepted class on
/// `k` vertices, as long as `accept` is hereditary for induced subgraphs.
fn generate(
    n: usize,
    budget: u64,
    accept: impl Fn(&Small, u64) -> Verdict + Sync,
) -> (Vec<BTreeSet<u64>>, u64, bool) {
    let spent = AtomicU64::new(0);
    let aborted = AtomicBool::new(false);
    let mut levels: Vec<BTreeSet<u64>> = Vec::new();
    let mut current: BTreeSet<u64> = BTreeSet::new();
    current.insert(0);
    if let Verdict::Drop(_) = accept(&Small::from_code(1, 0), budget) {
        current.clear();
    }
    levels.push(current.clone());
    for k in 1..n {
        let parents: Vec<u64> = current.iter().copied().collect();
        let children: Vec<Vec<u64>> = parents
            .par_iter()
            .map(|&code| {
                let g = Small::from_code(k, code);
                let mut out = Vec::new();
                for mask in 0u16..(1 << k) {
                    if aborted.load(Ordering::Relaxed) {
                        break;
                    }
                    let h = g.extend(mask);
                    let left = budget.saturating_sub(spent.load(Ordering::Relaxed));
                    match accept(&h, left) {
                        Verdict::Keep(used) => {
                            spent.fetch_add(used + 1, Ordering::Relaxed);
                            out.push(h.canonical_code());
                        }
                        Verdict::Drop(used) => {
                            spent.fetch_add(used + 1, Ordering::Relaxed);
                        }
                        Verdict::Undecided(used) => {
                            spent.fetch_add(used + 1, Ordering::Relaxed);
                            aborted.store(true, Ordering::Relaxed);
                        }
                    }
                    if spent.load(Ordering::Relaxed) > budget {
                        aborted.store(true, Ordering::Relaxed);
                    }
                }
                out
            })
            .collect();
        current = children.into_iter().flatten().collect();
        levels.push(current.clone());
        if aborted.load(Ordering::Relaxed) {
            return (levels, spent.into_inner(), true);
        }
    }
    (levels, spent.into_inner(), false)
}

/// Maximum edge count of an `n`-vertex graph with `α ≤ m` that has an edge
/// colouring free for `spec`. Both conditions pass to induced subgraphs, so
/// they prune every level of the generation.
pub fn rt_exact(q: &RtQuery, budget: Option<u64>) -> Result<RtResult> {
    if q.n == 0 || q.m == 0 {
        return Err(Error::InvalidParameter("rt query needs n ≥ 1 and m ≥ 1".into()));
    }
    if q.n > RT_EXACT_MAX_N {
        return Err(Error::InvalidParameter(format!("n = {} exceeds {RT_EXACT_MAX_N}", q.n)));
    }
    debug_assert!(q.n <= MAX_SMALL);
    let budget = budget.unwrap_or(u64::MAX);
    let (levels, nodes, aborted) = generate(q.n, budget, |h, left| {
        if h.alpha() > q.m {
            return Verdict::Drop(0);
        }
        let r = freeness_search(&h.to_graph(), &q.spec, Some(left));
        match r.outcome {
            SearchOutcome::Found(_) => Verdict::Keep(r.nodes),
            SearchOutcome::NoneExists => Verdict::Drop(r.nodes),
            SearchOutcome::Incomplete => Verdict::Undecided(r.nodes),
        }
    });
    let classes_per_level: Vec<usize> = levels.iter().map(BTreeSet::len).collect();
    let last = if levels.len() == q.n { levels.last() } else { None };
    // Most edges first, then the smallest canonical code.
    let best = last.and_then(|set| {
        set.iter()
            .map(|&code| (Small::from_code(q.n, code), code))
            .max_by(|(a, ca), (b, cb)| a.edge_count().cmp(&b.edge_count()).then(cb.cmp(ca)))
    });
    let witness = match &best {
        Some((s, _)) => {
            let g = s.to_graph();
            let c = freeness_search(&g, &q.spec, None)
                .coloring()
                .cloned()
                .ok_or_else(|| Error::Construction("kept graph lost its colouring".into()))?;
            Some((g, c))
        }
        None => None,
    };
    let status = match (aborted, &best) {
        (true, _) => RtStatus::Incomplete,
        (false, Some(_)) => RtStatus::Exact,
        (false, None) => RtStatus::Infeasible,
    };
    Ok(RtResult {
        status,
        edges: best.map(|(s, _)| s.edge_count()),
        witness,
        classes_per_level,
        nodes,
    })
}
