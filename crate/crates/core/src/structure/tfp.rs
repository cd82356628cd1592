use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::bitset::VertexSet;
use crate::graph::Graph;

/// Random triangle-free process: scan all pairs in a uniformly random order
/// and add each pair with no common neighbour. Since a pair that would close a
/// triangle stays blocked forever, this matches picking a uniform admissible
/// pair at every step. The result is maximal triangle-free.
pub fn triangle_free_process(n: usize, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pairs: Vec<(u32, u32)> = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for u in 0..n as u32 {
        for v in u + 1..n as u32 {
            pairs.push((u, v));
        }
    }
    pairs.shuffle(&mut rng);
    let mut adj: Vec<VertexSet> = (0..n).map(|_| VertexSet::new(n)).collect();
    for (u, v) in pairs {
        let (u, v) = (u as usize, v as usize);
        if !adj[u].intersects(&adj[v]) {
            adj[u].insert(v);
            adj[v].insert(u);
        }
    }
    Graph::from_rows(adj).expect("symmetric by construction")
}

/// Every non-edge closes a triangle.
pub fn is_maximal_triangle_free(g: &Graph) -> bool {
    let n = g.n();
    g.is_triangle_free()
        && (0..n).all(|u| (u + 1..n).all(|v| g.has_edge(u, v) || g.neighbors(u).intersects(g.neighbors(v))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{cycle, star};

    #[test]
    fn tiny_orders() {
        assert_eq!(triangle_free_process(1, 0).edge_count(), 0);
        assert_eq!(triangle_free_process(2, 9).edge_count(), 1);
    }

    #[test]
    fn four_vertices_give_c4_or_star() {
        for seed in 0..50 {
            let g = triangle_free_process(4, seed);
            assert!(is_maximal_triangle_free(&g));
            let degs: Vec<usize> = {
                let mut d: Vec<usize> = (0..4).map(|v| g.degree(v)).collect();
                d.sort_unstable();
                d
            };
            assert!(degs == vec![2, 2, 2, 2] || degs == vec![1, 1, 1, 3], "{g:?}");
        }
        assert!(is_maximal_triangle_free(&cycle(4)));
        assert!(is_maximal_triangle_free(&star(3)));
        assert!(!is_maximal_triangle_free(&crate::graph::path(4)));
    }

    #[test]
    fn deterministic_per_seed() {
        assert_eq!(triangle_free_process(40, 5), triangle_free_process(40, 5));
    }
}
