//! Canonical codes for graphs on at most 11 vertices, by
//! individualisation-refinement with twin pruning.

use crate::graph::Graph;

/// Adjacency as neighbourhood masks.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub(crate) struct Small {
    pub adj: Vec<u16>,
}

pub(crate) const MAX_SMALL: usize = 11;

fn pair_bit(a: usize, b: usize) -> u64 {
    let (a, b) = if a < b { (a, b) } else { (b, a) };
    1u64 << (b * (b - 1) / 2 + a)
}

impl Small {
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|m| m.count_ones() as usize).sum::<usize>() / 2
    }

    /// Appends a vertex adjacent to the vertices in `mask`.
    pub fn extend(&self, mask: u16) -> Small {
        let v = self.n();
        let mut adj = self.adj.clone();
        for (u, row) in adj.iter_mut().enumerate() {
            if mask >> u & 1 == 1 {
                *row |= 1 << v;
            }
        }
        adj.push(mask);
        Small { adj }
    }

    pub fn from_code(n: usize, code: u64) -> Small {
        let mut adj = vec![0u16; n];
        for b in 1..n {
            for a in 0..b {
                if code & pair_bit(a, b) != 0 {
                    adj[a] |= 1 << b;
                    adj[b] |= 1 << a;
                }
            }
        }
        Small { adj }
    }

    pub fn to_graph(&self) -> Graph {
        let edges: Vec<(usize, usize)> = (0..self.n())
            .flat_map(|u| (u + 1..self.n()).filter(move |&v| self.adj[u] >> v & 1 == 1).map(move |v| (u, v)))
            .collect();
        Graph::from_edges(self.n(), &edges).expect("valid small graph")
    }

    /// Independence number of the subgraph induced on `cand`.
    pub fn alpha_within(&self, cand: u16) -> usize {
        if cand == 0 {
            return 0;
        }
        let v = cand.trailing_zeros() as usize;
        let rest = cand & !(1 << v);
        let with = 1 + self.alpha_within(rest & !self.adj[v]);
        if self.adj[v] & rest == 0 {
            return with;
        }
        with.max(self.alpha_within(rest))
    }

    pub fn alpha(&self) -> usize {
        let all = if self.n() == 16 { u16::MAX } else { (1u16 << self.n()) - 1 };
        self.alpha_within(all)
    }

    fn code_under(&self, label: &[usize]) -> u64 {
        let mut code = 0;
        for u in 0..self.n() {
            for v in u + 1..self.n() {
                if self.adj[u] >> v & 1 == 1 {
                    code |= pair_bit(label[u], label[v]);
                }
            }
        }
        code
    }

    /// Maximum code over the leaves of the refinement tree. Isomorphic graphs
    /// get equal codes.
    pub fn canonical_code(&self) -> u64 {
        assert!(self.n() <= MAX_SMALL);
        let cells = self.refine(vec![(0..self.n()).collect()]);
        let mut best = None;
        self.search(cells, &mut best);
        best.unwrap_or(0)
    }

    fn search(&self, cells: Vec<Vec<usize>>, best: &mut Option<u64>) {
        let Some(target) = cells.iter().position(|c| c.len() > 1) else {
            let mut label = vec![0; self.n()];
            for (i, c) in cells.iter().enumerate() {
                label[c[0]] = i;
            }
            let code = self.code_under(&label);
            if best.is_none_or(|b| code > b) {
                *best = Some(code);
            }
            return;
        };
        let mut tried: Vec<usize> = Vec::new();
        for &v in &cells[target] {
            // Swapping twins in one cell is an automorphism that fixes the
            // partition, so their subtrees give the same codes.
            if tried.iter().any(|&u| self.twins(u, v)) {
                continue;
            }
            tried.push(v);
            let mut next = cells.clone();
            let rest: Vec<usize> = next[target].iter().copied().filter(|&w| w != v).collect();
            next[target] = vec![v];
            next.insert(target + 1, rest);
            self.search(self.refine(next), best);
        }
    }

    fn twins(&self, u: usize, v: usize) -> bool {
        let strip = !((1u16 << u) | (1u16 << v));
        self.adj[u] & strip == self.adj[v] & strip
    }

    /// Equitable refinement of an ordered partition; sub-cells are ordered by
    /// their neighbour counts, so the result is isomorphism-invariant.
    fn refine(&self, mut cells: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
        loop {
            let masks: Vec<u16> = cells.iter().map(|c| c.iter().fold(0, |m, &v| m | 1 << v)).collect();
            let mut next = Vec::with_capacity(cells.len());
            for cell in &cells {
                let mut keyed: Vec<(Vec<u32>, usize)> = cell
                    .iter()
                    .map(|&v| (masks.iter().map(|m| (self.adj[v] & m).count_ones()).collect(), v))
                    .collect();
                keyed.sort();
                let mut start = 0;
                for i in 1..=keyed.len() {
                    if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                        next.push(keyed[start..i].iter().map(|k| k.1).collect());
                        start = i;
                    }
                }
            }
            if next.len() == cells.len() {
                return next;
            }
            cells = next;
        }
    }
}
