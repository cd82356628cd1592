//! Dense regular triangle-free graphs standing in for `F(n, d)`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::{andrasfai, blow_up, circulant, cycle, Graph};
use crate::solvers::{alpha, SetCertificate, SolveOptions};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FndSource {
    C5Blowup,
    AndrasfaiBlowup,
    Annealed,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FndStrategy {
    C5Blowup,
    AndrasfaiBlowup,
    /// Degree-preserving edge swaps from a circulant start, minimising the
    /// triangle count.
    Annealed { seed: u64, budget: u64 },
}

#[derive(Clone, Debug)]
pub struct FndGraph {
    pub graph: Graph,
    pub d: usize,
    pub alpha: SetCertificate,
    pub source: FndSource,
}

const ALPHA_BUDGET: u64 = 20_000_000;

fn certify(graph: Graph, d: usize, source: FndSource) -> Result<FndGraph> {
    debug_assert!(graph.is_triangle_free());
    debug_assert_eq!(graph.regular_degree(), Some(d));
    let opts = SolveOptions::exact().with_budget(ALPHA_BUDGET);
    let alpha = alpha(&graph, &opts)?;
    Ok(FndGraph {
        graph,
        d,
        alpha,
        source,
    })
}

/// A `d`-regular triangle-free graph on `n` vertices with certified `α`.
pub fn fnd_provider(n: usize, d: usize, strategy: FndStrategy) -> Result<FndGraph> {
    match strategy {
        FndStrategy::C5Blowup => {
            if !n.is_multiple_of(5) || d != 2 * n / 5 {
                return Err(Error::InvalidParameter(format!(
                    "c5_blowup needs 5 | n and d = 2n/5 (n={n}, d={d})"
                )));
            }
            certify(blow_up(&cycle(5), n / 5), d, FndSource::C5Blowup)
        }
        FndStrategy::AndrasfaiBlowup => {
            let k = (1..=n.div_ceil(3) + 1)
                .find(|&k| n.is_multiple_of(3 * k - 1) && k * (n / (3 * k - 1)) == d)
                .ok_or_else(|| {
                    Error::InvalidParameter(format!("no And(k) blow-up on n={n} vertices is {d}-regular"))
                })?;
            certify(blow_up(&andrasfai(k), n / (3 * k - 1)), d, FndSource::AndrasfaiBlowup)
        }
        FndStrategy::Annealed { seed, budget } => {
            let g = anneal(n, d, seed, budget)?;
            certify(g, d, FndSource::Annealed)
        }
    }
}

fn regular_start(n: usize, d: usize) -> Result<Graph> {
    if d >= n || (n * d) % 2 == 1 {
        return Err(Error::InvalidParameter(format!("no {d}-regular graph on {n} vertices")));
    }
    let mut jumps: Vec<usize> = (1..=d / 2).collect();
    if d % 2 == 1 {
        jumps.push(n / 2);
    }
    Ok(circulant(n, &jumps))
}

fn triangles_through(adj: &[VertexSet], u: usize, v: usize) -> usize {
    adj[u].intersection_len(&adj[v])
}

/// Double-edge swaps `ab, cd -> ac, bd` accepted when the triangle count does
/// not increase (or, with small probability, increases by one).
fn anneal(n: usize, d: usize, seed: u64, budget: u64) -> Result<Graph> {
    if 2 * d > n {
        return Err(Error::InvalidParameter(format!(
            "triangle-free {d}-regular graphs need n >= 2d (n={n})"
        )));
    }
    let start = regular_start(n, d)?;
    let mut adj: Vec<VertexSet> = start.rows().to_vec();
    let mut edges: Vec<(usize, usize)> = start.edges().collect();
    let mut tri = start.triangle_count() as i64;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut steps = 0;
    while tri > 0 {
        if steps >= budget {
            return Err(Error::CapExceeded(format!(
                "annealing left {tri} triangles after {budget} swaps"
            )));
        }
        steps += 1;
        if edges.len() < 2 {
            break;
        }
        let i = rng.gen_range(0..edges.len());
        let j = rng.gen_range(0..edges.len());
        let (mut a, mut b) = edges[i];
        let (mut c, mut d2) = edges[j];
        if rng.gen_bool(0.5) {
            std::mem::swap(&mut a, &mut b);
        }
        if rng.gen_bool(0.5) {
            std::mem::swap(&mut c, &mut d2);
        }
        if swap_ok(&adj, a, b, c, d2) {
            apply(&mut adj, &mut edges, &mut tri, &mut rng, i, j, (a, b, c, d2));
        }
    }
    Graph::from_rows(adj)
}

fn swap_ok(adj: &[VertexSet], a: usize, b: usize, c: usize, d: usize) -> bool {
    let distinct = a != c && a != d && b != c && b != d;
    distinct && !adj[a].contains(c) && !adj[b].contains(d)
}

fn set(adj: &mut [VertexSet], u: usize, v: usize, on: bool) {
    if on {
        adj[u].insert(v);
        adj[v].insert(u);
    } else {
        adj[u].remove(v);
        adj[v].remove(u);
    }
}

/// Replaces `ab, cd` with `ac, bd`, keeping the change only if it does not
/// add triangles (one extra triangle is tolerated with probability 1/20).
fn apply(
    adj: &mut [VertexSet],
    edges: &mut [(usize, usize)],
    tri: &mut i64,
    rng: &mut ChaCha8Rng,
    i: usize,
    j: usize,
    (a, b, c, d): (usize, usize, usize, usize),
) {
    let before = *tri;
    let mut t = before;
    t -= triangles_through(adj, a, b) as i64;
    set(adj, a, b, false);
    t -= triangles_through(adj, c, d) as i64;
    set(adj, c, d, false);
    t += triangles_through(adj, a, c) as i64;
    set(adj, a, c, true);
    t += triangles_through(adj, b, d) as i64;
    set(adj, b, d, true);
    if t <= before || (t == before + 1 && rng.gen_ratio(1, 20)) {
        *tri = t;
        edges[i] = (a.min(c), a.max(c));
        edges[j] = (b.min(d), b.max(d));
    } else {
        set(adj, b, d, false);
        set(adj, a, c, false);
        set(adj, c, d, true);
        set(adj, a, b, true);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn c5_family() {
        let f = fnd_provider(5, 2, FndStrategy::C5Blowup).unwrap();
        assert_eq!(f.alpha.value, 2);
        let f = fnd_provider(15, 6, FndStrategy::C5Blowup).unwrap();
        assert_eq!(f.alpha.value, 6);
        assert!(f.alpha.is_exact());
        assert!(fnd_provider(15, 5, FndStrategy::C5Blowup).is_err());
    }

    #[test]
    fn andrasfai_family() {
        let f = fnd_provider(22, 8, FndStrategy::AndrasfaiBlowup).unwrap();
        assert_eq!(f.graph.regular_degree(), Some(8));
        assert!(f.graph.is_triangle_free());
        assert_eq!(f.alpha.value, 8);
        assert!(fnd_provider(22, 7, FndStrategy::AndrasfaiBlowup).is_err());
    }

    #[test]
    fn annealed_family() {
        let f = fnd_provider(16, 3, FndStrategy::Annealed { seed: 3, budget: 200_000 }).unwrap();
        assert_eq!(f.graph.regular_degree(), Some(3));
        assert!(f.graph.is_triangle_free());
        assert!(f.alpha.value >= 3);
        assert!(fnd_provider(7, 3, FndStrategy::Annealed { seed: 0, budget: 10 }).is_err());
    }
}
