use serde::{Deserialize, Serialize};

use super::Graph;
use crate::bitset::VertexSet;
use crate::error::{Error, Result};

/// Ordered list of disjoint vertex blocks covering `0..universe`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Partition {
    blocks: Vec<Vec<usize>>,
    universe: usize,
}

impl Partition {
    /// Validates disjointness and coverage. Blocks are kept in the given order,
    /// each block sorted ascending.
    pub fn new(universe: usize, mut blocks: Vec<Vec<usize>>) -> Result<Self> {
        let mut seen = vec![false; universe];
        for block in blocks.iter_mut() {
            block.sort_unstable();
            for &v in block.iter() {
                if v >= universe {
                    return Err(Error::InvalidParameter(format!("vertex {v} outside 0..{universe}")));
                }
                if seen[v] {
                    return Err(Error::InvalidParameter(format!("vertex {v} appears in two blocks")));
                }
                seen[v] = true;
            }
        }
        if let Some(v) = seen.iter().position(|&s| !s) {
            return Err(Error::InvalidParameter(format!("vertex {v} is not covered")));
        }
        Ok(Self { blocks, universe })
    }

    /// `labels[v]` is the block of `v`; produces exactly `parts` blocks (some may be empty).
    pub fn from_labels(labels: &[usize], parts: usize) -> Self {
        let mut blocks = vec![Vec::new(); parts];
        for (v, &b) in labels.iter().enumerate() {
            blocks[b].push(v);
        }
        Self {
            blocks,
            universe: labels.len(),
        }
    }

    /// Consecutive blocks of the given sizes: `0..s0`, `s0..s0+s1`, ...
    pub fn consecutive(sizes: &[usize]) -> Self {
        let mut start = 0;
        let blocks = sizes
            .iter()
            .map(|&s| {
                let b = (start..start + s).collect::<Vec<_>>();
                start += s;
                b
            })
            .collect();
        Self { blocks, universe: start }
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn block(&self, i: usize) -> &[usize] {
        &self.blocks[i]
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.blocks.iter().map(Vec::len).collect()
    }

    pub fn labels(&self) -> Vec<usize> {
        let mut labels = vec![0; self.universe];
        for (i, b) in self.blocks.iter().enumerate() {
            for &v in b {
                labels[v] = i;
            }
        }
        labels
    }

    pub fn block_sets(&self) -> Vec<VertexSet> {
        self.blocks
            .iter()
            .map(|b| VertexSet::from_iter(self.universe, b.iter().copied()))
            .collect()
    }

    /// Edges with both endpoints in one block.
    pub fn inner_edges(&self, g: &Graph) -> usize {
        self.block_sets().iter().map(|s| g.edges_inside(s)).sum()
    }

    /// `e(G[V_1, .., V_p])`.
    pub fn crossing_edges(&self, g: &Graph) -> usize {
        g.edge_count() - self.inner_edges(g)
    }

    /// Number of vertex pairs in distinct blocks.
    pub fn crossing_pairs(&self) -> usize {
        let sizes = self.sizes();
        let total: usize = sizes.iter().sum();
        let same: usize = sizes.iter().map(|s| s * s).sum();
        (total * total - same) / 2
    }

    /// `δ^cr`: least degree of a vertex into another block. `None` with fewer than two blocks.
    pub fn min_crossing_degree(&self, g: &Graph) -> Option<usize> {
        if self.blocks.len() < 2 {
            return None;
        }
        let sets = self.block_sets();
        let mut best: Option<usize> = None;
        for (i, block) in self.blocks.iter().enumerate() {
            for &v in block {
                for (j, set) in sets.iter().enumerate() {
                    if i != j {
                        let d = g.degree_in(v, set);
                        best = Some(best.map_or(d, |b| b.min(d)));
                    }
                }
            }
        }
        best
    }
}
