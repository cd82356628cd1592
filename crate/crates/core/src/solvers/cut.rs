//! Max-cut `p`-partitions and distance to complete `p`-partite graphs.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::graph::{Graph, Partition};

/// Exhaustive search is limited to this many vertices.
pub const EXACT_CUT_MAX_N: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "mode")]
pub enum CutMode {
    /// Round-robin start, first-improvement moves in vertex order; each extra
    /// restart begins from a random labeling drawn from `seed`.
    Local { restarts: usize, seed: u64 },
    Exact,
}

impl CutMode {
    pub fn local() -> Self {
        CutMode::Local { restarts: 0, seed: 0 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CutResult {
    pub partition: Partition,
    pub crossing: usize,
    pub mode: CutMode,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PPartiteDistance {
    pub best_partition: Partition,
    /// `inside + missing`.
    pub distance: usize,
    pub inside: usize,
    pub missing: usize,
    pub mode: CutMode,
}

fn block_counts(g: &Graph, labels: &[usize], v: usize, p: usize) -> Vec<usize> {
    let mut d = vec![0; p];
    for w in g.neighbors(v).iter() {
        d[labels[w]] += 1;
    }
    d
}

/// First-improvement local search for max-cut starting from `labels`.
/// Terminates because every move strictly increases the crossing count.
pub fn max_cut_local_from(g: &Graph, p: usize, labels: &mut [usize]) -> usize {
    assert!(p >= 1);
    loop {
        let mut moved = false;
        for v in 0..g.n() {
            let d = block_counts(g, labels, v, p);
            let own = labels[v];
            if let Some(j) = (0..p).find(|&j| j != own && d[j] < d[own]) {
                labels[v] = j;
                moved = true;
            }
        }
        if !moved {
            break;
        }
    }
    crossing(g, labels)
}

fn crossing(g: &Graph, labels: &[usize]) -> usize {
    g.edges().filter(|&(u, v)| labels[u] != labels[v]).count()
}

fn round_robin(n: usize, p: usize) -> Vec<usize> {
    (0..n).map(|v| v % p).collect()
}

fn restarts<F>(n: usize, p: usize, restarts: usize, seed: u64, mut run: F) -> Vec<usize>
where
    F: FnMut(&mut [usize]) -> i64,
{
    let mut best = round_robin(n, p);
    let mut best_score = run(&mut best);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..restarts {
        let mut labels: Vec<usize> = (0..n).map(|_| rng.gen_range(0..p)).collect();
        let score = run(&mut labels);
        if score > best_score {
            best_score = score;
            best = labels;
        }
    }
    best
}

struct ExactCut<'a> {
    g: &'a Graph,
    p: usize,
    labels: Vec<usize>,
    best: Vec<usize>,
    best_score: i64,
    minimize_distance: bool,
}

impl ExactCut<'_> {
    /// Score to maximise: crossing edges, or minus the distance.
    fn dfs(&mut self, v: usize, used: usize, score: i64, assigned_edges: usize) {
        let n = self.g.n();
        let remaining = (self.g.edge_count() - assigned_edges) as i64;
        let optimistic = if self.minimize_distance { score } else { score + remaining };
        if optimistic <= self.best_score {
            return;
        }
        if v == n {
            self.best_score = score;
            self.best = self.labels.clone();
            return;
        }
        let mut d = vec![0usize; self.p];
        let mut back = 0;
        let mut sizes = vec![0usize; self.p];
        for w in 0..v {
            sizes[self.labels[w]] += 1;
            if self.g.has_edge(v, w) {
                d[self.labels[w]] += 1;
                back += 1;
            }
        }
        let top = (used + 1).min(self.p);
        for b in 0..top {
            let delta = if self.minimize_distance {
                let cross_pairs = v - sizes[b];
                let cross_edges = back - d[b];
                -((d[b] + cross_pairs - cross_edges) as i64)
            } else {
                (back - d[b]) as i64
            };
            self.labels[v] = b;
            self.dfs(v + 1, used.max(b + 1), score + delta, assigned_edges + back);
        }
    }
}

fn exact_search(g: &Graph, p: usize, minimize_distance: bool, start: Vec<usize>, start_score: i64) -> Vec<usize> {
    assert!(
        g.n() <= EXACT_CUT_MAX_N,
        "exact partition search supports n <= {EXACT_CUT_MAX_N}"
    );
    let mut s = ExactCut {
        g,
        p,
        labels: vec![0; g.n()],
        best: start,
        best_score: start_score - 1,
        minimize_distance,
    };
    s.dfs(0, 0, 0, 0);
    s.best
}

pub fn max_cut_partition(g: &Graph, p: usize, mode: CutMode) -> CutResult {
    assert!(p >= 1, "need at least one part");
    let n = g.n();
    let local = |restarts_n: usize, seed: u64| {
        restarts(n, p, restarts_n, seed, |labels| max_cut_local_from(g, p, labels) as i64)
    };
    let labels = match mode {
        CutMode::Local { restarts, seed } => local(restarts, seed),
        CutMode::Exact => {
            let start = local(0, 0);
            let score = crossing(g, &start) as i64;
            exact_search(g, p, false, start, score)
        }
    };
    CutResult {
        crossing: crossing(g, &labels),
        partition: Partition::from_labels(&labels, p),
        mode,
    }
}

fn distance_parts(g: &Graph, labels: &[usize], p: usize) -> (usize, usize) {
    let part = Partition::from_labels(labels, p);
    let inside = part.inner_edges(g);
    let cross_edges = g.edge_count() - inside;
    (inside, part.crossing_pairs() - cross_edges)
}

fn distance_local_from(g: &Graph, p: usize, labels: &mut [usize]) -> usize {
    let mut sizes = vec![0i64; p];
    for &l in labels.iter() {
        sizes[l] += 1;
    }
    loop {
        let mut moved = false;
        for v in 0..g.n() {
            let d = block_counts(g, labels, v, p);
            let own = labels[v];
            // Cost share of v in block X (v excluded): 2 d(v,X) - |X|, up to a constant.
            let here = 2 * d[own] as i64 - (sizes[own] - 1);
            if let Some(j) = (0..p).find(|&j| j != own && 2 * d[j] as i64 - sizes[j] < here) {
                labels[v] = j;
                sizes[own] -= 1;
                sizes[j] += 1;
                moved = true;
            }
        }
        if !moved {
            break;
        }
    }
    let (i, m) = distance_parts(g, labels, p);
    i + m
}

/// `min |G △ K_{V_1..V_p}|` over `p`-partitions (empty blocks allowed).
pub fn p_partite_distance(g: &Graph, p: usize, mode: CutMode) -> PPartiteDistance {
    assert!(p >= 1, "need at least one part");
    let n = g.n();
    let local = |restarts_n: usize, seed: u64| {
        restarts(n, p, restarts_n, seed, |labels| -(distance_local_from(g, p, labels) as i64))
    };
    let labels = match mode {
        CutMode::Local { restarts, seed } => local(restarts, seed),
        CutMode::Exact => {
            let start = local(0, 0);
            let (i, m) = distance_parts(g, &start, p);
            exact_search(g, p, true, start, -((i + m) as i64))
        }
    };
    let (inside, missing) = distance_parts(g, &labels, p);
    PPartiteDistance {
        best_partition: Partition::from_labels(&labels, p),
        distance: inside + missing,
        inside,
        missing,
        mode,
    }
}

/// No single-vertex move increases the crossing count.
pub fn is_cut_local_optimum(g: &Graph, part: &Partition) -> bool {
    let labels = part.labels();
    let p = part.len();
    (0..g.n()).all(|v| {
        let d = block_counts(g, &labels, v, p);
        (0..p).all(|j| d[j] >= d[labels[v]])
    })
}
