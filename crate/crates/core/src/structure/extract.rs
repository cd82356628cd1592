use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, Partition};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MinDegreeExtract {
    /// Surviving vertices (ascending); `subgraph` is induced on them.
    pub kept: Vec<usize>,
    /// Deleted vertices in deletion order.
    pub deleted: Vec<usize>,
    #[serde(skip)]
    pub subgraph: Graph,
}

/// While some vertex has degree at most `d` times the current order, delete
/// the lowest-indexed such vertex.
pub fn min_degree_extract(g: &Graph, d: f64) -> Result<MinDegreeExtract> {
    if !(d > 0.0 && d <= 1.0) {
        return Err(Error::InvalidParameter(format!("d = {d} outside (0,1]")));
    }
    let mut alive = g.vertex_set();
    let mut deg: Vec<usize> = (0..g.n()).map(|v| g.degree(v)).collect();
    let mut deleted = Vec::new();
    loop {
        let cur = alive.len() as f64;
        let Some(v) = alive.iter().find(|&v| deg[v] as f64 <= d * cur) else {
            break;
        };
        alive.remove(v);
        for w in g.neighbors(v).iter() {
            deg[w] -= 1;
        }
        deleted.push(v);
    }
    let kept = alive.to_vec();
    Ok(MinDegreeExtract {
        subgraph: g.induced(&kept),
        kept,
        deleted,
    })
}

/// Guarantees of min-degree extraction on a graph with
/// `e(G) >= (d + ε) n²/2`: `n′ >= √ε n / 2` and
/// `e(G′) >= (d n′² + ε n² − d (n − n′)) / 2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ExtractChecks {
    pub precondition: bool,
    pub min_degree: bool,
    pub size: bool,
    pub edges: bool,
}

pub fn check_extract(g: &Graph, d: f64, eps: f64, out: &MinDegreeExtract) -> ExtractChecks {
    let n = g.n() as f64;
    let n1 = out.kept.len() as f64;
    let sub = &out.subgraph;
    ExtractChecks {
        precondition: g.edge_count() as f64 >= (d + eps) * n * n / 2.0,
        min_degree: (0..sub.n()).all(|v| sub.degree(v) as f64 >= d * n1),
        size: n1 >= eps.sqrt() * n / 2.0,
        edges: sub.edge_count() as f64 >= (d * n1 * n1 + eps * n * n - d * (n - n1)) / 2.0,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Move {
    pub vertex: usize,
    pub from: usize,
    pub to: usize,
    pub inner_before: usize,
    pub inner_after: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RefineOutcome {
    pub partition: Partition,
    pub moves: Vec<Move>,
    /// `false` when the move cap tripped.
    pub complete: bool,
    pub cap: usize,
    pub min_crossing_degree: Option<usize>,
    pub all_moves_decreased: bool,
}

/// Moves the first vertex (in vertex order) that has at most `threshold · n`
/// neighbours in some other block into the lowest such block, until no vertex
/// qualifies or `cap` moves (default `10n`) have been made.
pub fn refine_partition(g: &Graph, p: &Partition, threshold: f64, cap: Option<usize>) -> Result<RefineOutcome> {
    if p.len() < 2 {
        return Err(Error::InvalidParameter("refinement needs at least two blocks".into()));
    }
    if p.universe() != g.n() {
        return Err(Error::SizeMismatch(format!("partition over {} vertices, graph has {}", p.universe(), g.n())));
    }
    let n = g.n();
    let k = p.len();
    let cap = cap.unwrap_or(10 * n);
    let limit = threshold * n as f64;
    let mut labels = p.labels();
    let mut counts = vec![vec![0usize; k]; n];
    for (v, row) in counts.iter_mut().enumerate() {
        for w in g.neighbors(v).iter() {
            row[labels[w]] += 1;
        }
    }
    let mut inner = p.inner_edges(g);
    let mut moves = Vec::new();
    let complete = loop {
        let found = (0..n).find_map(|v| {
            (0..k)
                .find(|&j| j != labels[v] && counts[v][j] as f64 <= limit)
                .map(|j| (v, j))
        });
        let Some((v, j)) = found else {
            break true;
        };
        if moves.len() >= cap {
            break false;
        }
        let from = labels[v];
        let after = inner - counts[v][from] + counts[v][j];
        for w in g.neighbors(v).iter() {
            counts[w][from] -= 1;
            counts[w][j] += 1;
        }
        labels[v] = j;
        moves.push(Move {
            vertex: v,
            from,
            to: j,
            inner_before: inner,
            inner_after: after,
        });
        inner = after;
    };
    let partition = Partition::from_labels(&labels, k);
    Ok(RefineOutcome {
        min_crossing_degree: partition.min_crossing_degree(g),
        all_moves_decreased: moves.iter().all(|m| m.inner_after < m.inner_before),
        partition,
        moves,
        complete,
        cap,
    })
}
