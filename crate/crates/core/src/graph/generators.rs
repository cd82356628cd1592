use serde::{Deserialize, Serialize};

use super::{Graph, GraphBuilder, Partition};
use crate::error::{Error, Result};

pub fn complete(n: usize) -> Graph {
    let mut b = GraphBuilder::new(n);
    for u in 0..n {
        for v in u + 1..n {
            b.add_edge(u, v);
        }
    }
    b.build()
}

pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "cycle needs at least 3 vertices");
    let mut b = GraphBuilder::new(n);
    for v in 0..n {
        b.add_edge(v, (v + 1) % n);
    }
    b.build()
}

pub fn path(n: usize) -> Graph {
    let mut b = GraphBuilder::new(n);
    for v in 1..n {
        b.add_edge(v - 1, v);
    }
    b.build()
}

/// `K_{1,k}` with centre 0.
pub fn star(k: usize) -> Graph {
    let mut b = GraphBuilder::new(k + 1);
    for v in 1..=k {
        b.add_edge(0, v);
    }
    b.build()
}

/// Cayley graph on `Z_n` with connection set `±jumps`.
pub fn circulant(n: usize, jumps: &[usize]) -> Graph {
    let mut b = GraphBuilder::new(n);
    for v in 0..n {
        for &j in jumps {
            let w = (v + j) % n;
            if w != v {
                b.add_edge(v, w);
            }
        }
    }
    b.build()
}

/// Outer 5-cycle `0..5`, spokes `i ~ i+5`, inner pentagram on `5..10`.
pub fn petersen() -> Graph {
    let mut b = GraphBuilder::new(10);
    for i in 0..5 {
        b.add_edge(i, (i + 1) % 5);
        b.add_edge(i, i + 5);
        b.add_edge(5 + i, 5 + (i + 2) % 5);
    }
    b.build()
}

/// Andrásfai graph `And(k)`: Cayley graph on `Z_{3k-1}` whose connection set
/// is the residues congruent to 1 mod 3. It is `k`-regular, triangle-free, with
/// independence number `k`.
pub fn andrasfai(k: usize) -> Graph {
    assert!(k >= 1);
    let n = 3 * k - 1;
    let jumps: Vec<usize> = (0..n).filter(|j| j % 3 == 1).collect();
    circulant(n, &jumps)
}

/// Complete multipartite graph with consecutive parts of the given sizes.
pub fn complete_multipartite(sizes: &[usize]) -> (Graph, Partition) {
    let part = Partition::consecutive(sizes);
    let mut b = GraphBuilder::new(part.universe());
    for i in 0..sizes.len() {
        for j in i + 1..sizes.len() {
            b.join(part.block(i), part.block(j));
        }
    }
    (b.build(), part)
}

/// Balanced part sizes: the first `n mod p` parts get `⌈n/p⌉` vertices.
pub fn balanced_sizes(n: usize, p: usize) -> Vec<usize> {
    (0..p).map(|i| n / p + usize::from(i < n % p)).collect()
}

/// Turán graph `T_p(n)` and its part partition.
pub fn turan_graph(n: usize, p: usize) -> Result<(Graph, Partition)> {
    if p == 0 || p > n {
        return Err(Error::InvalidParameter(format!("Turán graph needs 1 <= p <= n, got p={p}, n={n}")));
    }
    Ok(complete_multipartite(&balanced_sizes(n, p)))
}

/// `e(T_p(n))` by the closed form `Σ_{i<j} |P_i||P_j|`.
pub fn turan_edge_count(n: usize, p: usize) -> usize {
    let sizes = balanced_sizes(n, p);
    let same: usize = sizes.iter().map(|s| s * s).sum();
    (n * n - same) / 2
}

/// `R(t)`: each vertex `v` becomes the independent block `v*t .. (v+1)*t`.
pub fn blow_up(g: &Graph, t: usize) -> Graph {
    assert!(t >= 1, "blow-up factor must be positive");
    let mut b = GraphBuilder::new(g.n() * t);
    for (u, v) in g.edges() {
        for i in 0..t {
            for j in 0..t {
                b.add_edge(u * t + i, v * t + j);
            }
        }
    }
    b.build()
}

/// Result of [`clone_vertices`]: vertex `g.n() + i` is a clone of `originals[i]`.
#[derive(Clone, Debug)]
pub struct Cloned {
    pub graph: Graph,
    pub originals: Vec<usize>,
}

impl Cloned {
    pub fn clone_ids(&self) -> Vec<usize> {
        let base = self.graph.n() - self.originals.len();
        (base..self.graph.n()).collect()
    }
}

/// Appends one clone per vertex of `set` (in the given order). A clone copies
/// the original's neighbourhood; clones are pairwise non-adjacent and not
/// adjacent to their originals.
pub fn clone_vertices(g: &Graph, set: &[usize]) -> Result<Cloned> {
    let n = g.n();
    if let Some(&v) = set.iter().find(|&&v| v >= n) {
        return Err(Error::InvalidParameter(format!("vertex {v} outside 0..{n}")));
    }
    let mut b = GraphBuilder::from_graph(g, n + set.len());
    for (i, &orig) in set.iter().enumerate() {
        for w in g.neighbors(orig).iter() {
            b.add_edge(n + i, w);
        }
    }
    Ok(Cloned {
        graph: b.build(),
        originals: set.to_vec(),
    })
}

/// Tagged generator parameters for the base families.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum GraphFamilyParams {
    Turan { n: usize, p: usize },
    /// `C_len` blown up by `factor`.
    CycleBlowup { len: usize, factor: usize },
    /// `And(k)` blown up by `factor`.
    Andrasfai { k: usize, factor: usize },
    Custom { graph6: String },
}

impl GraphFamilyParams {
    pub fn validate(&self) -> Result<()> {
        match self {
            Self::Turan { n, p } if *p == 0 || p > n => {
                Err(Error::InvalidParameter(format!("turan: need 1 <= p <= n (p={p}, n={n})")))
            }
            Self::CycleBlowup { len, factor } if *len < 3 || *factor == 0 => Err(Error::InvalidParameter(
                format!("cycle_blowup: need len >= 3 and factor >= 1 (len={len}, factor={factor})"),
            )),
            Self::Andrasfai { k, factor } if *k == 0 || *factor == 0 => Err(Error::InvalidParameter(
                format!("andrasfai: need k >= 1 and factor >= 1 (k={k}, factor={factor})"),
            )),
            _ => Ok(()),
        }
    }

    pub fn build(&self) -> Result<Graph> {
        self.validate()?;
        Ok(match self {
            Self::Turan { n, p } => turan_graph(*n, *p)?.0,
            Self::CycleBlowup { len, factor } => blow_up(&cycle(*len), *factor),
            Self::Andrasfai { k, factor } => blow_up(&andrasfai(*k), *factor),
            Self::Custom { graph6 } => super::from_graph6(graph6)?,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn turan_examples() {
        let (k22, p) = turan_graph(4, 2).unwrap();
        assert_eq!(k22.edge_count(), 4);
        assert_eq!(p.sizes(), vec![2, 2]);

        let (t, p) = turan_graph(10, 3).unwrap();
        assert_eq!(p.sizes(), vec![4, 3, 3]);
        assert_eq!(t.edge_count(), 33);
        assert_eq!(turan_edge_count(10, 3), 33);

        assert_eq!(turan_graph(9, 3).unwrap().0.edge_count(), 27);
        assert!(turan_graph(3, 4).is_err());
        assert!(turan_graph(3, 0).is_err());
    }

    #[test]
    fn blow_up_examples() {
        let c5 = cycle(5);
        assert_eq!(blow_up(&c5, 1), c5);
        let b = blow_up(&c5, 3);
        assert_eq!(b.n(), 15);
        assert_eq!(b.regular_degree(), Some(6));
        assert!(b.is_triangle_free());
        let k44 = blow_up(&complete(2), 4);
        assert_eq!(k44, complete_multipartite(&[4, 4]).0);
    }

    #[test]
    fn blow_up_labels_block_by_block() {
        let b = blow_up(&path(2), 2);
        assert!(b.has_edge(0, 2) && b.has_edge(0, 3) && b.has_edge(1, 2) && b.has_edge(1, 3));
        assert!(!b.has_edge(0, 1));
    }

    #[test]
    fn clone_examples() {
        let k2 = complete(2);
        let c = clone_vertices(&k2, &[0]).unwrap();
        assert_eq!(c.graph.n(), 3);
        assert_eq!(c.graph.edge_count(), 2);
        assert!(c.graph.has_edge(2, 1) && !c.graph.has_edge(2, 0));

        let c5 = clone_vertices(&cycle(5), &[0]).unwrap();
        assert_eq!(c5.graph.n(), 6);
        assert_eq!(c5.graph.edge_count(), 7);
        assert!(c5.graph.is_triangle_free());
        assert_eq!(c5.clone_ids(), vec![5]);
        assert!(clone_vertices(&cycle(5), &[5]).is_err());
    }

    #[test]
    fn andrasfai_properties() {
        let a4 = andrasfai(4);
        assert_eq!(a4.n(), 11);
        assert_eq!(a4.regular_degree(), Some(4));
        assert!(a4.is_triangle_free());
        assert_eq!(andrasfai(2), cycle(5));
    }

    #[test]
    fn family_params_validate() {
        assert!(GraphFamilyParams::Turan { n: 3, p: 4 }.validate().is_err());
        assert!(GraphFamilyParams::CycleBlowup { len: 2, factor: 1 }.build().is_err());
        let g = GraphFamilyParams::Andrasfai { k: 4, factor: 2 }.build().unwrap();
        assert_eq!(g.n(), 22);
        assert_eq!(g.regular_degree(), Some(8));
    }
}
