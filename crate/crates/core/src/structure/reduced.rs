use serde::Serialize;

use crate::colorings::EdgeColoring;
use crate::error::{Error, Result};
use crate::graph::{Graph, Partition};

/// Block-density graph with vertex colours, edge colours and weights in `(0, 1]`.
/// Densities are exact; no regularity of the pairs is certified.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct WeightedReducedGraph {
    m: usize,
    vertex_color: Vec<usize>,
    /// Row-major `m × m`; `None` for non-edges and the diagonal.
    cells: Vec<Option<(usize, f64)>>,
}

impl WeightedReducedGraph {
    pub fn new(vertex_color: Vec<usize>) -> Self {
        let m = vertex_color.len();
        Self {
            m,
            vertex_color,
            cells: vec![None; m * m],
        }
    }

    pub fn set_edge(&mut self, p: usize, q: usize, color: usize, weight: f64) {
        assert!(p != q && weight > 0.0 && weight <= 1.0, "weight {weight} outside (0,1]");
        self.cells[p * self.m + q] = Some((color, weight));
        self.cells[q * self.m + p] = Some((color, weight));
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn vertex_color(&self, p: usize) -> usize {
        self.vertex_color[p]
    }

    /// `(colour, weight)` of `pq`.
    pub fn edge(&self, p: usize, q: usize) -> Option<(usize, f64)> {
        self.cells[p * self.m + q]
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, usize, f64)> + '_ {
        (0..self.m).flat_map(move |p| (p + 1..self.m).filter_map(move |q| self.edge(p, q).map(|(c, w)| (p, q, c, w))))
    }
}

/// Reduced graph over the blocks of `part`. Pair `pq` is an edge when either
/// class density reaches `γ`; colour 0 takes priority, and the weight is the
/// density of the chosen class.
pub fn reduced_coloring(
    g: &Graph,
    c: &EdgeColoring,
    part: &Partition,
    gamma: f64,
    vertex_tags: &[usize],
) -> Result<WeightedReducedGraph> {
    if c.k() != 2 {
        return Err(Error::InvalidParameter(format!("reduced colouring needs 2 colours, got {}", c.k())));
    }
    c.check_covers(g)?;
    if gamma.is_nan() || gamma <= 0.0 {
        return Err(Error::InvalidParameter(format!("γ = {gamma} must be positive")));
    }
    let m = part.len();
    if vertex_tags.len() != m {
        return Err(Error::SizeMismatch(format!("{} tags for {m} blocks", vertex_tags.len())));
    }
    if let Some(i) = part.blocks().iter().position(Vec::is_empty) {
        return Err(Error::InvalidParameter(format!("block {i} is empty")));
    }
    let classes = [c.class_graph(0), c.class_graph(1)];
    let sets = part.block_sets();
    let mut r = WeightedReducedGraph::new(vertex_tags.to_vec());
    for p in 0..m {
        for q in p + 1..m {
            let pairs = (sets[p].len() * sets[q].len()) as f64;
            let d = [0, 1].map(|i| classes[i].edges_between(&sets[p], &sets[q]) as f64 / pairs);
            if d[0] >= gamma {
                r.set_edge(p, q, 0, d[0]);
            } else if d[1] >= gamma {
                r.set_edge(p, q, 1, d[1]);
            }
        }
    }
    Ok(r)
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct GeneralizedCliqueQuery {
    pub t: usize,
    pub gamma: f64,
    pub color: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GeneralizedClique {
    pub x: Vec<usize>,
    pub y: Vec<usize>,
}

/// Least `(X, Y)` (lexicographic on the vertex lists) with `Y ⊆ X`,
/// `|X| + |Y| = t`, `X` a clique of the query colour, every vertex of `Y` of
/// the query colour, and every edge inside `Y` heavier than `½ + γ`.
pub fn find_generalized_clique(r: &WeightedReducedGraph, query: &GeneralizedCliqueQuery) -> Result<Option<GeneralizedClique>> {
    if query.t < 2 {
        return Err(Error::InvalidParameter(format!("order t = {} < 2", query.t)));
    }
    if !(query.gamma > 0.0 && query.gamma < 0.5) {
        return Err(Error::InvalidParameter(format!("γ = {} outside (0, 1/2)", query.gamma)));
    }
    let mut x = Vec::new();
    Ok(search_x(r, query, 0, &mut x))
}

fn search_x(r: &WeightedReducedGraph, q: &GeneralizedCliqueQuery, from: usize, x: &mut Vec<usize>) -> Option<GeneralizedClique> {
    // Lexicographic order on vectors visits X before any of its extensions.
    if !x.is_empty() && 2 * x.len() >= q.t && x.len() <= q.t {
        let need = q.t - x.len();
        let mut y = Vec::new();
        if let Some(y) = search_y(r, q, x, 0, need, &mut y) {
            return Some(GeneralizedClique { x: x.clone(), y });
        }
    }
    if x.len() >= q.t {
        return None;
    }
    for v in from..r.m() {
        if x.iter().all(|&u| r.edge(u, v).is_some_and(|(c, _)| c == q.color)) {
            x.push(v);
            if let Some(w) = search_x(r, q, v + 1, x) {
                return Some(w);
            }
            x.pop();
        }
    }
    None
}

fn search_y(r: &WeightedReducedGraph, q: &GeneralizedCliqueQuery, x: &[usize], from: usize, need: usize, y: &mut Vec<usize>) -> Option<Vec<usize>> {
    if y.len() == need {
        return Some(y.clone());
    }
    for i in from..x.len() {
        let v = x[i];
        let heavy = y.iter().all(|&u| r.edge(u, v).is_some_and(|(_, w)| w > 0.5 + q.gamma));
        if r.vertex_color(v) == q.color && heavy {
            y.push(v);
            if let Some(found) = search_y(r, q, x, i + 1, need, y) {
                return Some(found);
            }
            y.pop();
        }
    }
    None
}
