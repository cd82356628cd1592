use serde::Serialize;

use super::EdgeColoring;
use crate::error::{Error, Result};
use crate::graph::{Graph, Partition};
use crate::solvers::alpha_exact;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SplitOutcome {
    /// Blocks `V_1*`, `V_2*`.
    pub partition: Partition,
    /// `α(G_1[V_1*])`, `α(G_2[V_2*])`, computed exactly.
    pub alphas: [usize; 2],
    pub target: usize,
    pub met: bool,
}

fn evaluate(classes: &[Graph; 2], side: &[bool]) -> [usize; 2] {
    let mut out = [0; 2];
    for (i, class) in classes.iter().enumerate() {
        let verts: Vec<usize> = (0..side.len()).filter(|&v| side[v] == (i == 1)).collect();
        out[i] = alpha_exact(&class.induced(&verts));
    }
    out
}

fn key(a: [usize; 2]) -> (usize, usize) {
    (a[0].max(a[1]), a[0] + a[1])
}

/// Local search for a split `V = V_1* ∪ V_2*` minimising
/// `max(α(G_1[V_1*]), α(G_2[V_2*]))` (ties by the sum). Starts from all of `V`
/// in each block and from the alternating split; single-vertex moves are taken
/// in vertex order while they improve. `false` side means block 1.
pub fn split_partition(g: &Graph, c: &EdgeColoring, target: usize) -> Result<SplitOutcome> {
    if c.k() != 2 {
        return Err(Error::InvalidParameter(format!("split partition needs 2 colours, got {}", c.k())));
    }
    c.check_covers(g)?;
    let n = g.n();
    let classes = [c.class_graph(0), c.class_graph(1)];
    let starts = [vec![false; n], vec![true; n], (0..n).map(|v| v % 2 == 1).collect()];
    let mut best: Option<(Vec<bool>, [usize; 2])> = None;
    for mut side in starts {
        let mut cur = evaluate(&classes, &side);
        loop {
            let mut improved = false;
            for v in 0..n {
                side[v] = !side[v];
                let next = evaluate(&classes, &side);
                if key(next) < key(cur) {
                    cur = next;
                    improved = true;
                } else {
                    side[v] = !side[v];
                }
            }
            if !improved || key(cur).0 <= target {
                break;
            }
        }
        if best.as_ref().is_none_or(|(_, b)| key(cur) < key(*b)) {
            best = Some((side, cur));
        }
    }
    let (side, alphas) = best.expect("at least one start");
    let labels: Vec<usize> = side.iter().map(|&s| usize::from(s)).collect();
    Ok(SplitOutcome {
        partition: Partition::from_labels(&labels, 2),
        alphas,
        target,
        met: alphas[0].max(alphas[1]) <= target,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::cycle;

    #[test]
    fn single_colour_keeps_everything_in_block_one() {
        let g = cycle(5);
        let c = EdgeColoring::from_fn(&g, 2, |_, _| 0);
        let out = split_partition(&g, &c, 2).unwrap();
        assert!(out.met);
        assert_eq!(out.alphas[0], 2);
    }

    #[test]
    fn edgeless_graph_alphas_are_block_sizes() {
        let g = Graph::empty(4);
        let c = EdgeColoring::new(4, 2);
        let out = split_partition(&g, &c, 4).unwrap();
        assert_eq!(out.alphas[0] + out.alphas[1], 4);
        assert_eq!(out.partition.sizes(), vec![out.alphas[0], out.alphas[1]]);
    }

    #[test]
    fn two_triangle_free_halves_meet_the_lemma_target() {
        // α(G) = c²n gives the target ⌊cn⌋.
        let f = crate::graph::blow_up(&cycle(5), 2);
        let r = crate::constructions::build_k3k3(&f, &f).unwrap();
        let n = r.graph.n();
        let a = alpha_exact(&r.graph);
        let target = ((a * n) as f64).sqrt().floor() as usize;
        let out = split_partition(&r.graph, &r.coloring, target).unwrap();
        assert_eq!((a, target), (4, 8));
        assert!(out.met, "{:?}", out.alphas);
        assert!(out.alphas.iter().all(|&x| x <= target));
    }

    #[test]
    fn wrong_arity() {
        let g = cycle(5);
        let c = EdgeColoring::from_fn(&g, 3, |_, _| 0);
        assert!(split_partition(&g, &c, 2).is_err());
    }
}
