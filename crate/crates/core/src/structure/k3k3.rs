use serde::Serialize;

use crate::bitset::VertexSet;
use crate::colorings::{mono_clique, EdgeColoring, FreenessSpec};
use crate::error::{Error, Result};
use crate::graph::{Graph, Partition};
use crate::solvers::{alpha_exact, max_cut_local_from};

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct K3K3Diagnostics {
    /// Colour labels were swapped so that `G₁` is the larger class.
    pub swapped: bool,
    pub x: Option<usize>,
    pub big_x: Vec<usize>,
    pub y: Option<usize>,
    pub big_y: Vec<usize>,
    pub z: Vec<usize>,
    pub x_prime: Option<usize>,
    pub big_x_prime: Vec<usize>,
    pub y_prime: Option<usize>,
    pub big_y_prime: Vec<usize>,
    pub alpha_hat: f64,
    pub beta_hat: f64,
    pub a_size: usize,
    pub b_size: usize,
    /// Minimum degree of the bipartite graph `G₁[A, B]`.
    pub min_cross_degree: usize,
    pub e_g1: usize,
    pub e_g2: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct K3K3Extract {
    /// Block 0 is `A`, the side holding vertex 0.
    pub partition: Partition,
    pub diagnostics: K3K3Diagnostics,
}

fn argmax_degree(g: &Graph, among: &VertexSet, within: &VertexSet) -> Option<usize> {
    // Ties go to the lowest index.
    among.iter().fold(None, |best: Option<(usize, usize)>, v| {
        let d = g.degree_in(v, within);
        match best {
            Some((_, bd)) if bd >= d => best,
            _ => Some((v, d)),
        }
    })
    .map(|(v, _)| v)
}

/// Degree-driven bipartition for a (K₃,K₃)-free 2-colouring: pick `x, y`
/// from the larger class `G₁`, `x′, y′` from `G₂` inside
/// `Z = V ∖ (X ∪ Y)`, then run max-cut on `G₁` starting from `(V ∖ X, X)`.
pub fn k3k3_extract(g: &Graph, c: &EdgeColoring) -> Result<K3K3Extract> {
    if c.k() != 2 {
        return Err(Error::InvalidParameter(format!("extractor needs 2 colours, got {}", c.k())));
    }
    c.check_covers(g)?;
    let spec = FreenessSpec::new(vec![3, 3])?;
    if let Some(w) = mono_clique(g, c, &spec)? {
        return Err(Error::Precondition(format!(
            "colour {} contains the triangle {:?}",
            w.color, w.vertices
        )));
    }
    let n = g.n();
    let classes = [c.class_graph(0), c.class_graph(1)];
    let e = [classes[0].edge_count(), classes[1].edge_count()];
    let swapped = e[1] > e[0] || (e[1] == e[0] && {
        let l0: Vec<_> = classes[0].edges().collect();
        let l1: Vec<_> = classes[1].edges().collect();
        l1 < l0
    });
    let (g1, g2) = if swapped {
        (&classes[1], &classes[0])
    } else {
        (&classes[0], &classes[1])
    };

    let all = g.vertex_set();
    let x = argmax_degree(g1, &all, &all);
    let big_x = x.map_or_else(|| VertexSet::new(n), |x| g1.neighbors(x).clone());
    let y = argmax_degree(g1, &big_x, &all);
    let big_y = y.map_or_else(|| VertexSet::new(n), |y| g1.neighbors(y).clone());
    let z = all.difference(&big_x.union(&big_y));
    let x_prime = argmax_degree(g2, &z, &z);
    let big_x_prime = x_prime.map_or_else(|| VertexSet::new(n), |v| g2.neighbors(v).intersection(&z));
    let y_prime = argmax_degree(g2, &big_x_prime, &z);
    let big_y_prime = y_prime.map_or_else(|| VertexSet::new(n), |v| g2.neighbors(v).intersection(&z));

    let mut labels: Vec<usize> = (0..n).map(|v| usize::from(big_x.contains(v))).collect();
    max_cut_local_from(g1, 2, &mut labels);
    if n > 0 && labels[0] == 1 {
        labels.iter_mut().for_each(|l| *l = 1 - *l);
    }
    let partition = Partition::from_labels(&labels, 2);
    let sets = partition.block_sets();
    let min_cross_degree = (0..n)
        .map(|v| g1.degree_in(v, &sets[1 - labels[v]]))
        .min()
        .unwrap_or(0);
    let nf = n.max(1) as f64;
    let diagnostics = K3K3Diagnostics {
        swapped,
        x,
        big_x: big_x.to_vec(),
        y,
        big_y: big_y.to_vec(),
        alpha_hat: z.len() as f64 / nf,
        beta_hat: big_x_prime.len() as f64 / nf,
        z: z.to_vec(),
        x_prime,
        big_x_prime: big_x_prime.to_vec(),
        y_prime,
        big_y_prime: big_y_prime.to_vec(),
        a_size: sets[0].len(),
        b_size: sets[1].len(),
        min_cross_degree,
        e_g1: g1.edge_count(),
        e_g2: g2.edge_count(),
    };
    Ok(K3K3Extract { partition, diagnostics })
}

/// Largest `|N_{G₁}(u) ∩ N_{G₂}(v)|` over all ordered pairs, with `α(G)`.
/// The intersection is independent in `G`, so the first never exceeds the second.
pub fn cross_neighborhood_check(g: &Graph, c: &EdgeColoring) -> (usize, usize) {
    let n = g.n();
    let worst = (0..n)
        .flat_map(|u| (0..n).map(move |v| (u, v)))
        .map(|(u, v)| c.class_neighbors(u, 0).intersection_len(&c.class_neighbors(v, 1)))
        .max()
        .unwrap_or(0);
    (worst, alpha_exact(g))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_multipartite, cycle};

    #[test]
    fn bipartite_cross_class() {
        let (g, p) = complete_multipartite(&[4, 4]);
        let c = EdgeColoring::from_fn(&g, 2, |_, _| 1);
        let out = k3k3_extract(&g, &c).unwrap();
        assert_eq!(out.partition, p);
        assert!(out.diagnostics.swapped);
        assert_eq!(out.diagnostics.e_g2, 0);
        assert_eq!(out.diagnostics.min_cross_degree, 4);
    }

    #[test]
    fn relabel_equivariant() {
        let g = cycle(5);
        let c = EdgeColoring::from_fn(&g, 2, |u, v| usize::from(u + v == 4));
        let a = k3k3_extract(&g, &c).unwrap();
        let b = k3k3_extract(&g, &c.permute_colors(&[1, 0])).unwrap();
        assert_eq!(a.partition, b.partition);
        assert_ne!(a.diagnostics.swapped, b.diagnostics.swapped);
    }

    #[test]
    fn rejects_monochromatic_triangle() {
        let g = crate::graph::complete(3);
        let c = EdgeColoring::from_fn(&g, 2, |_, _| 0);
        assert!(matches!(k3k3_extract(&g, &c), Err(Error::Precondition(_))));
    }

    #[test]
    fn pentagon_cross_check() {
        let (g, c) = crate::colorings::pentagon_coloring();
        let (worst, a) = cross_neighborhood_check(&g, &c);
        assert!(worst <= a);
        assert!(k3k3_extract(&g, &c).is_ok());
    }
}
