use num_rational::Ratio;

use super::{ConstructionKind, ConstructionReport};
use crate::colorings::{freeness_search, EdgeColoring, FreenessSpec};
use crate::error::{Error, Result};
use crate::graph::{clone_vertices, complete, Graph, GraphBuilder, Partition};

/// `R(3, s)` for `s <= 5`.
pub fn ramsey_r3(s: usize) -> Option<usize> {
    match s {
        1 => Some(1),
        2 => Some(3),
        3 => Some(6),
        4 => Some(9),
        5 => Some(14),
        _ => None,
    }
}

/// `T_p(n)` with `parts[i]` embedded in the `i`-th block of consecutive vertices.
fn turan_with_parts(parts: &[&Graph]) -> (Graph, Partition) {
    let sizes: Vec<usize> = parts.iter().map(|g| g.n()).collect();
    let partition = Partition::consecutive(&sizes);
    let mut b = GraphBuilder::new(partition.universe());
    for (i, g) in parts.iter().enumerate() {
        b.embed(g, partition.block(i));
        for j in i + 1..parts.len() {
            b.join(partition.block(i), partition.block(j));
        }
    }
    (b.build(), partition)
}

fn delta_of(d: usize, n: usize) -> Option<Ratio<i64>> {
    (n > 0).then(|| Ratio::new(d as i64, n as i64))
}

#[allow(clippy::too_many_arguments)]
fn report(
    kind: ConstructionKind,
    graph: Graph,
    partition: Partition,
    coloring: EdgeColoring,
    spec: &[usize],
    predicted_edges: usize,
    delta: Option<Ratio<i64>>,
    notes: Vec<String>,
) -> ConstructionReport {
    ConstructionReport {
        kind,
        actual_edges: graph.edge_count(),
        graph,
        coloring,
        partition,
        spec: FreenessSpec::new(spec.to_vec()).expect("static spec"),
        predicted_edges,
        delta,
        alpha: None,
        freeness: None,
        notes,
    }
}

fn same_order(parts: &[&Graph]) -> Result<usize> {
    let m = parts.first().map_or(0, |g| g.n());
    if let Some(g) = parts.iter().find(|g| g.n() != m) {
        return Err(Error::SizeMismatch(format!("part orders differ: {m} vs {}", g.n())));
    }
    Ok(m)
}

fn check_independent(g: &Graph, set: &[usize]) -> Result<()> {
    for (i, &u) in set.iter().enumerate() {
        if u >= g.n() {
            return Err(Error::InvalidParameter(format!("vertex {u} outside 0..{}", g.n())));
        }
        for &v in &set[i + 1..] {
            if u == v {
                return Err(Error::InvalidParameter(format!("vertex {u} listed twice")));
            }
            if g.has_edge(u, v) {
                return Err(Error::NotIndependent(u.min(v), u.max(v)));
            }
        }
    }
    Ok(())
}

/// `T_2(n)` with `left`, `right` inside the parts. Inner edges colour 0,
/// cross edges colour 1.
pub fn build_k3k3(left: &Graph, right: &Graph) -> Result<ConstructionReport> {
    let m = same_order(&[left, right])?;
    let (graph, partition) = turan_with_parts(&[left, right]);
    let labels = partition.labels();
    let coloring = EdgeColoring::from_fn(&graph, 2, |u, v| usize::from(labels[u] != labels[v]));
    let predicted = m * m + left.edge_count() + right.edge_count();
    let d = left.max_degree().max(right.max_degree());
    Ok(report(
        ConstructionKind::K3K3,
        graph,
        partition,
        coloring,
        &[3, 3],
        predicted,
        delta_of(d, 2 * m),
        vec![],
    ))
}

/// `T_5(n)` with `parts[i]` inside `X_i`. Inner edges and pentagon-adjacent
/// pairs `(X_i, X_{i+1})` colour 1, pentagon diagonals colour 0.
pub fn build_k3k5(parts: &[Graph]) -> Result<ConstructionReport> {
    if parts.len() != 5 {
        return Err(Error::SizeMismatch(format!("need 5 parts, got {}", parts.len())));
    }
    let refs: Vec<&Graph> = parts.iter().collect();
    let m = same_order(&refs)?;
    let (graph, partition) = turan_with_parts(&refs);
    let labels = partition.labels();
    let coloring = EdgeColoring::from_fn(&graph, 2, |u, v| {
        let gap = (labels[v] + 5 - labels[u]) % 5;
        usize::from(gap == 0 || gap == 1 || gap == 4)
    });
    let predicted = 10 * m * m + parts.iter().map(Graph::edge_count).sum::<usize>();
    let d = parts.iter().map(Graph::max_degree).max().unwrap_or(0);
    Ok(report(
        ConstructionKind::K3K5,
        graph,
        partition,
        coloring,
        &[3, 5],
        predicted,
        delta_of(d, 5 * m),
        vec![],
    ))
}

/// `X_1` hosts `F`: `f2`, then a clone set `A` of `b`, then `δn − |B|`
/// isolated vertices, plus all `[A, B]` edges. `X_2`, `X_3` host `f1`.
///
/// Colour 0: `[A, X_2]`, `[B, X_3]`, `[X_2, X_3]` and `X_1`-inner edges other
/// than `[A, B]`. Everything else colour 1.
pub fn build_k3k4(f1: &Graph, f2: &Graph, b: &[usize], delta_n: usize) -> Result<ConstructionReport> {
    let m = f1.n();
    if f2.n() + delta_n != m {
        return Err(Error::SizeMismatch(format!(
            "f2 must have n/3 − δn = {} vertices, has {}",
            m as isize - delta_n as isize,
            f2.n()
        )));
    }
    check_independent(f2, b)?;
    if b.len() > delta_n {
        return Err(Error::InvalidParameter(format!("|B| = {} exceeds δn = {delta_n}", b.len())));
    }
    let mut bset: Vec<usize> = b.to_vec();
    bset.sort_unstable();
    let cloned = clone_vertices(f2, &bset)?;
    let a_ids = cloned.clone_ids();
    let mut fb = GraphBuilder::from_graph(&cloned.graph, m);
    fb.join(&a_ids, &bset);
    let f = fb.build();

    let (graph, partition) = turan_with_parts(&[&f, f1, f1]);
    let mut in_a = vec![false; 3 * m];
    let mut in_b = vec![false; 3 * m];
    for &a in &a_ids {
        in_a[a] = true;
    }
    for &x in &bset {
        in_b[x] = true;
    }
    let part = partition.labels();
    let coloring = EdgeColoring::from_fn(&graph, 2, |u, v| {
        let colour0 = match (part[u], part[v]) {
            (0, 0) => !((in_a[u] && in_b[v]) || (in_b[u] && in_a[v])),
            (0, 1) => in_a[u],
            (0, 2) => in_b[u],
            (1, 2) => true,
            _ => false,
        };
        usize::from(!colour0)
    });
    let clone_edges: usize = bset.iter().map(|&x| f2.degree(x)).sum();
    let predicted =
        3 * m * m + 2 * f1.edge_count() + f2.edge_count() + clone_edges + bset.len() * bset.len();
    let notes = vec![format!("B = {bset:?}"), format!("A = {a_ids:?}")];
    Ok(report(
        ConstructionKind::K3K4,
        graph,
        partition,
        coloring,
        &[3, 4],
        predicted,
        delta_of(delta_n, 3 * m),
        notes,
    ))
}

/// `X_0..X_4` host `f1`; `X_5` hosts `F`: `f2`, then three clone sets
/// `I_2, I_3, I_4` of `I_0` (first half of `i_set`; `I_1` is the second half),
/// then `3(δn − |I|)/2` isolated vertices, plus all `[I_j, I_{j+2}]` edges.
///
/// Colour 0: `[X_j, X_{j+2}]`, `[I_j, X_j ∪ X_{j+1}]` and `X_5`-inner edges not
/// inside `∪I_j` (indices mod 5). Everything else colour 1.
pub fn build_k3k6(f1: &Graph, f2: &Graph, i_set: &[usize], delta_n: usize) -> Result<ConstructionReport> {
    let m = f1.n();
    let d2 = i_set.len();
    if d2 % 2 == 1 {
        return Err(Error::InvalidParameter(format!("|I| = {d2} must be even")));
    }
    if 3 * delta_n % 2 == 1 || f2.n() + 3 * delta_n / 2 != m {
        return Err(Error::SizeMismatch(format!(
            "f2 must have n/6 − 3δn/2 vertices (n/6 = {m}, δn = {delta_n}), has {}",
            f2.n()
        )));
    }
    if d2 > delta_n || (delta_n - d2) % 2 == 1 {
        return Err(Error::InvalidParameter(format!(
            "need |I| <= δn with δn − |I| even (|I| = {d2}, δn = {delta_n})"
        )));
    }
    check_independent(f2, i_set)?;
    let mut iv: Vec<usize> = i_set.to_vec();
    iv.sort_unstable();
    let half = d2 / 2;
    let i0 = iv[..half].to_vec();
    let i1 = iv[half..].to_vec();
    let triple: Vec<usize> = i0.iter().chain(&i0).chain(&i0).copied().collect();
    let cloned = clone_vertices(f2, &triple)?;
    let ids = cloned.clone_ids();
    let blocks: [Vec<usize>; 5] = [
        i0.clone(),
        i1,
        ids[..half].to_vec(),
        ids[half..2 * half].to_vec(),
        ids[2 * half..].to_vec(),
    ];
    let mut fb = GraphBuilder::from_graph(&cloned.graph, m);
    for j in 0..5 {
        fb.join(&blocks[j], &blocks[(j + 2) % 5]);
    }
    let f = fb.build();

    let (graph, partition) = turan_with_parts(&[f1, f1, f1, f1, f1, &f]);
    let part = partition.labels();
    let base = 5 * m;
    let mut iblock = vec![usize::MAX; 6 * m];
    for (j, blk) in blocks.iter().enumerate() {
        for &x in blk {
            iblock[base + x] = j;
        }
    }
    let coloring = EdgeColoring::from_fn(&graph, 2, |u, v| {
        let colour0 = match (part[u], part[v]) {
            (5, 5) => !(iblock[u] != usize::MAX && iblock[v] != usize::MAX),
            (pu, 5) => iblock[v] != usize::MAX && (pu == iblock[v] || pu == (iblock[v] + 1) % 5),
            (pu, pv) if pu != pv => {
                let gap = (pv + 5 - pu) % 5;
                gap == 2 || gap == 3
            }
            _ => false,
        };
        usize::from(!colour0)
    });
    let clone_edges: usize = i0.iter().map(|&x| f2.degree(x)).sum();
    let predicted = 15 * m * m + 5 * f1.edge_count() + f2.edge_count() + 3 * clone_edges + 5 * half * half;
    let notes = vec![format!("I_0 = {i0:?}"), format!("I = {iv:?}")];
    Ok(report(
        ConstructionKind::K3K6,
        graph,
        partition,
        coloring,
        &[3, 6],
        predicted,
        delta_of(delta_n, 6 * m),
        notes,
    ))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Parity {
    /// `t = R(3,s) − 1` parts, target `(3, 2s−1)`.
    Odd,
    /// `t = R(3,s)` parts, target `(3, 2s)`.
    Even,
}

#[derive(Clone, Debug)]
pub enum HProvider {
    /// Part `i` receives a triangle-free process graph seeded with `seed + i`.
    Process { seed: u64 },
    Fixed(Graph),
}

impl HProvider {
    fn part(&self, m: usize, i: usize) -> Result<Graph> {
        match self {
            Self::Process { seed } => Ok(crate::structure::triangle_free_process(m, seed + i as u64)),
            Self::Fixed(g) if g.n() == m => Ok(g.clone()),
            Self::Fixed(g) => Err(Error::SizeMismatch(format!("H has {} vertices, parts need {m}", g.n()))),
        }
    }
}

/// `T_t(n)` with a triangle-free `H` in every part. Inner edges colour 1 and
/// cross pairs follow a `(K_3, K_s)`-free colouring of `K_t` (odd case). In the
/// even case that colouring covers the first `t − 1` parts, the last part's
/// inner edges are colour 0 and its cross edges colour 1.
pub fn build_thm12_lower(
    n: usize,
    s: usize,
    parity: Parity,
    h: &HProvider,
    budget: Option<u64>,
) -> Result<ConstructionReport> {
    let r = ramsey_r3(s).ok_or_else(|| Error::InvalidParameter(format!("R(3,{s}) is not tabulated")))?;
    let (t, base, kind, target) = match parity {
        Parity::Odd => (r - 1, r - 1, ConstructionKind::Thm12Odd { s }, 2 * s - 1),
        Parity::Even => (r, r - 1, ConstructionKind::Thm12Even { s }, 2 * s),
    };
    if t == 0 || !n.is_multiple_of(t) {
        return Err(Error::InvalidParameter(format!("need t | n with t = {t}, n = {n}")));
    }
    let spec = FreenessSpec::new(vec![3, s])?;
    let phi = freeness_search(&complete(base), &spec, budget);
    let phi = phi.coloring().cloned().ok_or_else(|| {
        Error::Construction(format!("no (K3,K{s})-free colouring of K{base} found"))
    })?;
    let m = n / t;
    let parts = (0..t).map(|i| h.part(m, i)).collect::<Result<Vec<_>>>()?;
    let refs: Vec<&Graph> = parts.iter().collect();
    let (graph, partition) = turan_with_parts(&refs);
    let label = partition.labels();
    let last = t - 1;
    let coloring = EdgeColoring::from_fn(&graph, 2, |u, v| {
        let (pu, pv) = (label[u], label[v]);
        match parity {
            Parity::Even if pu == last && pv == last => 0,
            Parity::Even if pu == last || pv == last => 1,
            _ if pu == pv => 1,
            _ => phi.get(pu, pv).expect("K_t colouring covers all pairs"),
        }
    });
    let predicted = partition.crossing_pairs() + parts.iter().map(Graph::edge_count).sum::<usize>();
    let notes = vec![format!("t = {t}"), format!("phi = {}", phi.to_text().replace('\n', ";"))];
    Ok(report(kind, graph, partition, coloring, &[3, target], predicted, None, notes))
}
