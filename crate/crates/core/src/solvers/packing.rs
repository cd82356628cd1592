//! Edge-disjoint triangle packings.

use serde::Serialize;

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::Graph;

pub const DEFAULT_TRIANGLE_CAP: usize = 20_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PackingMode {
    Greedy,
    Exact,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TrianglePacking {
    pub triangles: Vec<[usize; 3]>,
    /// `true` only when the exact search completed.
    pub optimal: bool,
}

impl TrianglePacking {
    pub fn len(&self) -> usize {
        self.triangles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.triangles.is_empty()
    }

    /// Every triple is a triangle of `g` and no edge is used twice.
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        let mut used = std::collections::HashSet::new();
        self.triangles.iter().all(|&[a, b, c]| {
            g.has_edge(a, b)
                && g.has_edge(a, c)
                && g.has_edge(b, c)
                && [(a, b), (a, c), (b, c)]
                    .into_iter()
                    .all(|(x, y)| used.insert((x.min(y), x.max(y))))
        })
    }
}

#[derive(Clone, Copy, Debug)]
pub struct PackingOptions {
    pub mode: PackingMode,
    pub triangle_cap: usize,
    pub budget: Option<u64>,
}

impl PackingOptions {
    pub fn greedy() -> Self {
        Self {
            mode: PackingMode::Greedy,
            triangle_cap: DEFAULT_TRIANGLE_CAP,
            budget: None,
        }
    }

    pub fn exact() -> Self {
        Self {
            mode: PackingMode::Exact,
            ..Self::greedy()
        }
    }
}

fn greedy(g: &Graph) -> Vec<[usize; 3]> {
    let mut avail: Vec<VertexSet> = g.rows().to_vec();
    let mut out = Vec::new();
    for [a, b, c] in g.triangles() {
        if avail[a].contains(b) && avail[a].contains(c) && avail[b].contains(c) {
            for (x, y) in [(a, b), (a, c), (b, c)] {
                avail[x].remove(y);
                avail[y].remove(x);
            }
            out.push([a, b, c]);
        }
    }
    out
}

struct Exact {
    avail: Vec<VertexSet>,
    current: Vec<[usize; 3]>,
    best: Vec<[usize; 3]>,
    nodes: u64,
    budget: u64,
    aborted: bool,
}

impl Exact {
    fn set_edge(&mut self, u: usize, v: usize, on: bool) {
        if on {
            self.avail[u].insert(v);
            self.avail[v].insert(u);
        } else {
            self.avail[u].remove(v);
            self.avail[v].remove(u);
        }
    }

    /// Lowest edge still lying in an available triangle, and
    /// `⌊Σ_v ⌊d'(v)/2⌋ / 3⌋` over such edges.
    fn pivot_and_bound(&self) -> (Option<(usize, usize)>, usize) {
        let n = self.avail.len();
        let mut useful_deg = vec![0usize; n];
        let mut pivot = None;
        for u in 0..n {
            for v in self.avail[u].iter().filter(|&v| v > u) {
                if self.avail[u].intersects(&self.avail[v]) {
                    useful_deg[u] += 1;
                    useful_deg[v] += 1;
                    pivot.get_or_insert((u, v));
                }
            }
        }
        let halves: usize = useful_deg.iter().map(|d| d / 2).sum();
        (pivot, halves / 3)
    }

    fn run(&mut self) {
        self.nodes += 1;
        if self.nodes > self.budget {
            self.aborted = true;
            return;
        }
        let (pivot, bound) = self.pivot_and_bound();
        if self.current.len() + bound <= self.best.len() {
            return;
        }
        let Some((u, v)) = pivot else {
            if self.current.len() > self.best.len() {
                self.best = self.current.clone();
            }
            return;
        };
        let common = self.avail[u].intersection(&self.avail[v]);
        for w in common.iter() {
            self.set_edge(u, v, false);
            self.set_edge(u, w, false);
            self.set_edge(v, w, false);
            let mut t = [u, v, w];
            t.sort_unstable();
            self.current.push(t);
            self.run();
            self.current.pop();
            self.set_edge(u, v, true);
            self.set_edge(u, w, true);
            self.set_edge(v, w, true);
            if self.aborted {
                return;
            }
        }
        self.set_edge(u, v, false);
        self.run();
        self.set_edge(u, v, true);
    }
}

/// Greedy mode gives a maximal packing in lexicographic triangle order. Exact
/// mode branches on the lowest usable edge (use it in one of its triangles, or
/// discard it). If the node budget runs out the best packing found is returned
/// with `optimal = false`.
pub fn triangle_packing(g: &Graph, opts: &PackingOptions) -> Result<TrianglePacking> {
    let start = greedy(g);
    if opts.mode == PackingMode::Greedy {
        return Ok(TrianglePacking {
            triangles: start,
            optimal: false,
        });
    }
    let count = g.triangle_count();
    if count > opts.triangle_cap {
        return Err(Error::CapExceeded(format!(
            "{count} triangles exceed the exact packing cap {}",
            opts.triangle_cap
        )));
    }
    let mut s = Exact {
        avail: g.rows().to_vec(),
        current: Vec::new(),
        best: start,
        nodes: 0,
        budget: opts.budget.unwrap_or(u64::MAX),
        aborted: false,
    };
    s.run();
    let mut triangles = s.best;
    triangles.sort_unstable();
    Ok(TrianglePacking {
        triangles,
        optimal: !s.aborted,
    })
}

pub fn max_triangle_packing(g: &Graph) -> usize {
    let opts = PackingOptions {
        triangle_cap: usize::MAX,
        ..PackingOptions::exact()
    };
    triangle_packing(g, &opts).expect("uncapped").len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{blow_up, complete, complete_multipartite, cycle};

    #[test]
    fn examples() {
        assert_eq!(max_triangle_packing(&blow_up(&cycle(5), 2)), 0);
        let bowtie = Graph::from_edges(5, &[(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)]).unwrap();
        assert_eq!(max_triangle_packing(&bowtie), 2);
        let oct = complete_multipartite(&[2, 2, 2]).0;
        let p = triangle_packing(&oct, &PackingOptions::exact()).unwrap();
        assert_eq!(p.len(), 4);
        assert!(p.optimal && p.is_valid_for(&oct));
        assert_eq!(max_triangle_packing(&complete(7)), 7);
    }

    #[test]
    fn greedy_is_valid() {
        let g = complete(6);
        let p = triangle_packing(&g, &PackingOptions::greedy()).unwrap();
        assert!(p.is_valid_for(&g) && !p.optimal);
    }

    #[test]
    fn cap_exceeded() {
        let opts = PackingOptions {
            triangle_cap: 3,
            ..PackingOptions::exact()
        };
        assert!(triangle_packing(&complete(5), &opts).is_err());
    }
}
