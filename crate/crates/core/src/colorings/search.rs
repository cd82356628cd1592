use serde::Serialize;

use super::{EdgeColoring, FreenessSpec};
use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::solvers::{max_clique, SolveOptions};

/// A monochromatic `K_{s_color}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MonoClique {
    pub color: usize,
    pub vertices: Vec<usize>,
}

/// Looks for a colour `i` whose class contains `K_{s_i}`, checking colours in
/// order with an exact clique search per class.
pub fn mono_clique(g: &Graph, c: &EdgeColoring, spec: &FreenessSpec) -> Result<Option<MonoClique>> {
    if c.k() != spec.k() {
        return Err(Error::ArityMismatch {
            coloring: c.k(),
            spec: spec.k(),
        });
    }
    c.check_covers(g)?;
    let opts = SolveOptions {
        cap: usize::MAX,
        ..SolveOptions::exact()
    };
    for color in 0..c.k() {
        let class = c.class_graph(color);
        let cert = max_clique(&class, &opts)?;
        let s = spec.size(color);
        if cert.value >= s {
            return Ok(Some(MonoClique {
                color,
                vertices: cert.witness[..s].to_vec(),
            }));
        }
    }
    Ok(None)
}

/// `true` when `c` colours `g` and has no forbidden monochromatic clique.
pub fn is_free(g: &Graph, c: &EdgeColoring, spec: &FreenessSpec) -> Result<bool> {
    Ok(mono_clique(g, c, spec)?.is_none())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchOutcome {
    Found(EdgeColoring),
    /// The search space was exhausted.
    NoneExists,
    Incomplete,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreenessResult {
    pub outcome: SearchOutcome,
    pub nodes: u64,
}

impl FreenessResult {
    pub fn coloring(&self) -> Option<&EdgeColoring> {
        match &self.outcome {
            SearchOutcome::Found(c) => Some(c),
            _ => None,
        }
    }
}

fn contains_clique(adj: &[VertexSet], cand: &VertexSet, s: usize) -> bool {
    if s == 0 {
        return true;
    }
    if cand.len() < s {
        return false;
    }
    if s == 1 {
        return true;
    }
    let mut rest = cand.clone();
    while let Some(v) = rest.first() {
        rest.remove(v);
        if rest.len() + 1 < s {
            return false;
        }
        if contains_clique(adj, &rest.intersection(&adj[v]), s - 1) {
            return true;
        }
    }
    false
}

/// Backtracking colourer shared by the freeness and vertex+edge searches.
pub(crate) struct Engine<'a> {
    n: usize,
    sizes: &'a [usize],
    edges: Vec<(usize, usize)>,
    index: Vec<usize>,
    allowed: Vec<u32>,
    /// For each colour, the previous colour with the same clique size.
    prev_twin: Vec<Option<usize>>,
    symmetry: bool,
    used: Vec<usize>,
    class: Vec<Vec<VertexSet>>,
    assignment: Vec<u8>,
    pub nodes: u64,
    budget: u64,
    pub aborted: bool,
}

impl<'a> Engine<'a> {
    /// `allowed[e]` masks the colours permitted on the `e`-th edge of `g`
    /// in lexicographic order.
    pub fn new(g: &Graph, sizes: &'a [usize], allowed: Vec<u32>, symmetry: bool, budget: u64) -> Self {
        let n = g.n();
        let k = sizes.len();
        let edges: Vec<_> = g.edges().collect();
        let mut index = vec![usize::MAX; n * n];
        for (i, &(u, v)) in edges.iter().enumerate() {
            index[u * n + v] = i;
            index[v * n + u] = i;
        }
        let prev_twin = (0..k).map(|c| (0..c).rev().find(|&d| sizes[d] == sizes[c])).collect();
        Self {
            n,
            sizes,
            assignment: vec![u8::MAX; edges.len()],
            edges,
            index,
            allowed,
            prev_twin,
            symmetry,
            used: vec![0; k],
            class: vec![vec![VertexSet::new(n); n]; k],
            nodes: 0,
            budget,
            aborted: false,
        }
    }

    fn feasible(&self, u: usize, v: usize, c: usize) -> bool {
        let s = self.sizes[c];
        if s <= 2 {
            return false;
        }
        let common = self.class[c][u].intersection(&self.class[c][v]);
        !contains_clique(&self.class[c], &common, s - 2)
    }

    fn has_option(&self, e: usize) -> bool {
        let (u, v) = self.edges[e];
        (0..self.sizes.len()).any(|c| self.allowed[e] >> c & 1 == 1 && self.feasible(u, v, c))
    }

    /// Uncoloured edges at `u` or `v` must keep at least one feasible colour.
    fn forward_ok(&self, u: usize, v: usize) -> bool {
        (0..self.n).all(|w| {
            [u, v].iter().all(|&x| {
                let e = if w == x { usize::MAX } else { self.index[x * self.n + w] };
                e == usize::MAX || self.assignment[e] != u8::MAX || self.has_option(e)
            })
        })
    }

    fn place(&mut self, e: usize, c: usize, on: bool) {
        let (u, v) = self.edges[e];
        if on {
            self.class[c][u].insert(v);
            self.class[c][v].insert(u);
            self.assignment[e] = c as u8;
            self.used[c] += 1;
        } else {
            self.class[c][u].remove(v);
            self.class[c][v].remove(u);
            self.assignment[e] = u8::MAX;
            self.used[c] -= 1;
        }
    }

    pub fn run(&mut self, e: usize) -> bool {
        self.nodes += 1;
        if self.nodes > self.budget {
            self.aborted = true;
            return false;
        }
        if e == self.edges.len() {
            return true;
        }
        let (u, v) = self.edges[e];
        for c in 0..self.sizes.len() {
            if self.allowed[e] >> c & 1 == 0 {
                continue;
            }
            if self.symmetry {
                if let Some(p) = self.prev_twin[c] {
                    if self.used[p] == 0 {
                        continue;
                    }
                }
            }
            if !self.feasible(u, v, c) {
                continue;
            }
            self.place(e, c, true);
            if self.forward_ok(u, v) && self.run(e + 1) {
                return true;
            }
            self.place(e, c, false);
            if self.aborted {
                return false;
            }
        }
        false
    }

    pub fn coloring(&self) -> EdgeColoring {
        let mut c = EdgeColoring::new(self.n, self.sizes.len());
        for (e, &(u, v)) in self.edges.iter().enumerate() {
            c.set(u, v, self.assignment[e] as usize);
        }
        c
    }
}

/// Complete backtracking over edge colourings of `g` in lexicographic edge
/// order. A colour is excluded for `uv` when it would close a forbidden clique;
/// colours with equal clique size are introduced in increasing order.
pub fn freeness_search(g: &Graph, spec: &FreenessSpec, budget: Option<u64>) -> FreenessResult {
    let k = spec.k();
    assert!(k <= 32, "at most 32 colours");
    let full = if k == 32 { u32::MAX } else { (1u32 << k) - 1 };
    let mut engine = Engine::new(
        g,
        spec.sizes(),
        vec![full; g.edge_count()],
        true,
        budget.unwrap_or(u64::MAX),
    );
    let found = engine.run(0);
    let outcome = if found {
        SearchOutcome::Found(engine.coloring())
    } else if engine.aborted {
        SearchOutcome::Incomplete
    } else {
        SearchOutcome::NoneExists
    };
    FreenessResult {
        outcome,
        nodes: engine.nodes,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::colorings::pentagon_coloring;
    use crate::graph::complete;

    fn spec(s: &[usize]) -> FreenessSpec {
        FreenessSpec::new(s.to_vec()).unwrap()
    }

    #[test]
    fn mono_examples() {
        let (k5, c) = pentagon_coloring();
        assert_eq!(mono_clique(&k5, &c, &spec(&[3, 3])).unwrap(), None);
        let k3 = complete(3);
        let all0 = EdgeColoring::from_fn(&k3, 2, |_, _| 0);
        let w = mono_clique(&k3, &all0, &spec(&[3, 3])).unwrap().unwrap();
        assert_eq!(w, MonoClique { color: 0, vertices: vec![0, 1, 2] });
        assert!(matches!(
            mono_clique(&k3, &all0, &spec(&[3])),
            Err(Error::ArityMismatch { .. })
        ));
    }

    #[test]
    fn ramsey_3_3() {
        for n in 1..=5 {
            let r = freeness_search(&complete(n), &spec(&[3, 3]), None);
            let c = r.coloring().expect("K_n with n <= 5 is (3,3)-colourable");
            assert!(is_free(&complete(n), c, &spec(&[3, 3])).unwrap());
        }
        assert_eq!(freeness_search(&complete(6), &spec(&[3, 3]), None).outcome, SearchOutcome::NoneExists);
    }

    #[test]
    fn size_two_forbids_colour() {
        let r = freeness_search(&complete(3), &spec(&[2, 3]), None);
        assert_eq!(r.outcome, SearchOutcome::NoneExists);
        let r = freeness_search(&crate::graph::cycle(5), &spec(&[2, 3]), None);
        assert_eq!(r.coloring().unwrap().class_sizes(), vec![0, 5]);
    }

    #[test]
    fn budget_is_reported() {
        let r = freeness_search(&complete(6), &spec(&[3, 3]), Some(5));
        assert_eq!(r.outcome, SearchOutcome::Incomplete);
    }
}
