//! Exponential reference implementations shared by the integration tests.
#![allow(dead_code)]

use rand::Rng;
use rt_forge::colorings::EdgeColoring;
use rt_forge::structure::WeightedReducedGraph;
use rt_forge::Graph;

pub fn random_graph(n: usize, p: f64, rng: &mut impl Rng) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

fn masks(g: &Graph) -> Vec<u32> {
    (0..g.n())
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, w| m | 1 << w))
        .collect()
}

fn is_independent_mask(adj: &[u32], set: u32) -> bool {
    (0..adj.len()).all(|v| set >> v & 1 == 0 || adj[v] & set == 0)
}

/// Largest independent set by enumerating all `2^n` subsets.
pub fn naive_alpha(g: &Graph) -> usize {
    let adj = masks(g);
    (0u32..1 << g.n())
        .filter(|&s| is_independent_mask(&adj, s))
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

pub fn naive_clique(g: &Graph) -> usize {
    let adj = masks(g);
    (0u32..1 << g.n())
        .filter(|&s| (0..g.n()).all(|v| s >> v & 1 == 0 || (s & !(1 << v)) & !adj[v] == 0))
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

/// Maximum edge-disjoint triangle packing by plain branch and bound. Branches
/// on the live edge in the fewest live triangles: one of those triangles is
/// taken or the edge is discarded. The bound counts edges and half-degrees
/// over edges that still lie in a live triangle.
pub fn naive_packing(g: &Graph) -> usize {
    let n = g.n();
    assert!(n <= 16, "edge mask holds at most 120 edges");
    let mut id = vec![vec![usize::MAX; n]; n];
    let mut ends = Vec::new();
    for (k, (u, v)) in g.edges().enumerate() {
        id[u][v] = k;
        id[v][u] = k;
        ends.push((u, v));
    }
    let mut tris: Vec<u128> = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                if g.has_edge(a, b) && g.has_edge(a, c) && g.has_edge(b, c) {
                    tris.push(1 << id[a][b] | 1 << id[a][c] | 1 << id[b][c]);
                }
            }
        }
    }
    struct Search<'a> {
        ends: &'a [(usize, usize)],
        n: usize,
        best: usize,
    }
    impl Search<'_> {
        fn rec(&mut self, tris: &[u128], found: usize) {
            let covered = tris.iter().fold(0u128, |m, &t| m | t);
            let mut half = vec![0usize; self.n];
            let mut bits = covered;
            while bits != 0 {
                let (u, v) = self.ends[bits.trailing_zeros() as usize];
                half[u] += 1;
                half[v] += 1;
                bits &= bits - 1;
            }
            let by_degree = half.iter().map(|d| d / 2).sum::<usize>() / 3;
            let bound = (covered.count_ones() as usize / 3).min(by_degree);
            if found + bound <= self.best {
                return;
            }
            if tris.is_empty() {
                self.best = found;
                return;
            }
            let mut e = 0;
            let mut fewest = usize::MAX;
            let mut bits = covered;
            while bits != 0 {
                let k = bits.trailing_zeros();
                let c = tris.iter().filter(|&&t| t >> k & 1 == 1).count();
                if c < fewest {
                    fewest = c;
                    e = k;
                }
                bits &= bits - 1;
            }
            let bit = 1u128 << e;
            for &t in tris.iter().filter(|&&t| t & bit != 0) {
                let rest: Vec<u128> = tris.iter().copied().filter(|&s| s & t == 0).collect();
                self.rec(&rest, found + 1);
            }
            let rest: Vec<u128> = tris.iter().copied().filter(|&s| s & bit == 0).collect();
            self.rec(&rest, found);
        }
    }
    let mut s = Search { ends: &ends, n, best: 0 };
    s.rec(&tris, 0);
    s.best
}

/// Calls `f` on every labelling in `[p]^n`.
fn for_each_labelling(n: usize, p: usize, mut f: impl FnMut(&[usize])) {
    let mut labels = vec![0; n];
    loop {
        f(&labels);
        let mut i = 0;
        loop {
            if i == n {
                return;
            }
            labels[i] += 1;
            if labels[i] < p {
                break;
            }
            labels[i] = 0;
            i += 1;
        }
    }
}

pub fn naive_max_cut(g: &Graph, p: usize) -> usize {
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let mut best = 0;
    for_each_labelling(g.n(), p, |l| {
        best = best.max(edges.iter().filter(|&&(u, v)| l[u] != l[v]).count());
    });
    best
}

/// `min` over labellings of edges inside blocks plus non-edges across blocks.
pub fn naive_p_distance(g: &Graph, p: usize) -> usize {
    let n = g.n();
    let mut best = usize::MAX;
    for_each_labelling(n, p, |l| {
        let mut d = 0;
        for u in 0..n {
            for v in u + 1..n {
                let same = l[u] == l[v];
                if same == g.has_edge(u, v) {
                    d += 1;
                }
            }
        }
        best = best.min(d);
    });
    best
}

/// Whether some colour class of `c` contains `K_{sizes[i]}`, by checking every
/// vertex subset of the right size.
pub fn naive_has_mono_clique(g: &Graph, c: &EdgeColoring, sizes: &[usize]) -> bool {
    let n = g.n();
    (0u32..1 << n).any(|s| {
        let vs: Vec<usize> = (0..n).filter(|&v| s >> v & 1 == 1).collect();
        sizes.iter().enumerate().any(|(col, &k)| {
            vs.len() == k
                && vs.iter().enumerate().all(|(i, &u)| vs[i + 1..].iter().all(|&v| c.get(u, v) == Some(col)))
        })
    })
}

/// Whether any of the `k^e` colourings avoids every forbidden clique.
pub fn naive_colorable(g: &Graph, sizes: &[usize]) -> bool {
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let k = sizes.len();
    let total = (k as u64).pow(edges.len() as u32);
    (0..total).any(|mut code| {
        let mut c = EdgeColoring::new(g.n(), k);
        for &(u, v) in &edges {
            c.set(u, v, (code % k as u64) as usize);
            code /= k as u64;
        }
        !naive_has_mono_clique(g, &c, sizes)
    })
}

/// Least `(X, Y)` by brute force over all subset pairs.
pub fn naive_generalized_clique(
    r: &WeightedReducedGraph,
    t: usize,
    gamma: f64,
    color: usize,
) -> Option<(Vec<usize>, Vec<usize>)> {
    let m = r.m();
    let mut best: Option<(Vec<usize>, Vec<usize>)> = None;
    for xs in 1u32..1 << m {
        let x: Vec<usize> = (0..m).filter(|&v| xs >> v & 1 == 1).collect();
        let clique = x
            .iter()
            .enumerate()
            .all(|(i, &u)| x[i + 1..].iter().all(|&v| r.edge(u, v).is_some_and(|(c, _)| c == color)));
        if !clique || x.len() > t || 2 * x.len() < t {
            continue;
        }
        let mut ys = xs;
        loop {
            let y: Vec<usize> = (0..m).filter(|&v| ys >> v & 1 == 1).collect();
            let ok = x.len() + y.len() == t
                && y.iter().all(|&v| r.vertex_color(v) == color)
                && y.iter().enumerate().all(|(i, &u)| {
                    y[i + 1..].iter().all(|&v| r.edge(u, v).is_some_and(|(_, w)| w > 0.5 + gamma))
                });
            if ok {
                let cand = (x.clone(), y);
                if best.as_ref().is_none_or(|b| cand < *b) {
                    best = Some(cand);
                }
            }
            if ys == 0 {
                break;
            }
            ys = (ys - 1) & xs;
        }
    }
    best
}

/// Random K4-free graph with at least `n²/4` edges: a complete tripartite
/// graph with random part sizes, thinned across parts and then topped up
/// inside parts wherever no K4 appears.
pub fn dense_k4_free(n: usize, rng: &mut impl Rng) -> Graph {
    loop {
        let labels: Vec<usize> = (0..n).map(|_| rng.gen_range(0..3)).collect();
        let keep = rng.gen_range(0.75..1.0);
        let mut adj = vec![vec![false; n]; n];
        for u in 0..n {
            for v in u + 1..n {
                if labels[u] != labels[v] && rng.gen_bool(keep) {
                    adj[u][v] = true;
                    adj[v][u] = true;
                }
            }
        }
        let mut pairs: Vec<(usize, usize)> =
            (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(|&(u, v)| !adj[u][v]).collect();
        for i in (1..pairs.len()).rev() {
            pairs.swap(i, rng.gen_range(0..=i));
        }
        let extra = rng.gen_range(0..=n);
        for &(u, v) in pairs.iter().take(extra) {
            let common: Vec<usize> = (0..n).filter(|&w| adj[u][w] && adj[v][w]).collect();
            let closes_k4 = common
                .iter()
                .enumerate()
                .any(|(i, &a)| common[i + 1..].iter().any(|&b| adj[a][b]));
            if !closes_k4 {
                adj[u][v] = true;
                adj[v][u] = true;
            }
        }
        let edges: Vec<(usize, usize)> =
            (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(|&(u, v)| adj[u][v]).collect();
        if 4 * edges.len() >= n * n {
            return Graph::from_edges(n, &edges).unwrap();
        }
    }
}

pub fn has_k4(g: &Graph) -> bool {
    naive_clique(g) >= 4
}

/// Compares every exact solver with the enumerations above on `count` random
/// graphs (`n <= 12`, varied density). Returns the first disagreement.
pub fn oracle_suite(count: usize, seed: u64) -> Result<(), String> {
    use rand::SeedableRng;
    use rt_forge::solvers::{
        alpha, max_clique, max_cut_partition, p_partite_distance, triangle_packing, CutMode, PackingOptions,
        SolveOptions,
    };
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    for i in 0..count {
        let n = rng.gen_range(1..=12);
        let p = [0.15, 0.3, 0.5, 0.7, 0.85][i % 5];
        let g = random_graph(n, p, &mut rng);
        let ctx = |what: &str, got: usize, want: usize| {
            format!("graph #{i} (n={n}, {}): {what} = {got}, enumeration gives {want}", rt_forge::graph::to_graph6(&g))
        };
        let a = alpha(&g, &SolveOptions::exact()).map_err(|e| e.to_string())?;
        let want = naive_alpha(&g);
        if a.value != want || !g.is_independent(&g.set_of(&a.witness)) || a.witness.len() != a.value {
            return Err(ctx("alpha", a.value, want));
        }
        let c = max_clique(&g, &SolveOptions::exact()).map_err(|e| e.to_string())?;
        let want = naive_clique(&g);
        if c.value != want || !g.is_clique(&c.witness) {
            return Err(ctx("clique", c.value, want));
        }
        let co = alpha(&g.complement(), &SolveOptions::exact()).map_err(|e| e.to_string())?;
        if co.value != want {
            return Err(ctx("alpha(complement)", co.value, want));
        }
        let pk = triangle_packing(&g, &PackingOptions::exact()).map_err(|e| e.to_string())?;
        let want = naive_packing(&g);
        if pk.len() != want || !pk.optimal || !pk.is_valid_for(&g) {
            return Err(ctx("packing", pk.len(), want));
        }
        for parts in [2, 3] {
            let cut = max_cut_partition(&g, parts, CutMode::Exact);
            let want = naive_max_cut(&g, parts);
            if cut.crossing != want || cut.partition.crossing_edges(&g) != want {
                return Err(ctx(&format!("max-cut p={parts}"), cut.crossing, want));
            }
            let d = p_partite_distance(&g, parts, CutMode::Exact);
            let want = naive_p_distance(&g, parts);
            if d.distance != want || d.inside + d.missing != want {
                return Err(ctx(&format!("distance p={parts}"), d.distance, want));
            }
        }
    }
    Ok(())
}
