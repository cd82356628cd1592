//! Maximum clique and independence number by branch-and-bound with greedy
//! colouring bounds over bitsets.

use serde::Serialize;

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Exact mode refuses graphs above this order unless a node budget is given.
pub const DEFAULT_EXACT_CAP: usize = 120;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    /// Search completed; `value` is optimal.
    Exact,
    /// Heuristic witness plus a valid upper bound; never claimed optimal.
    Bound,
    /// Node budget ran out before the search completed.
    Incomplete,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SolveMode {
    Exact,
    Bound,
}

#[derive(Clone, Copy, Debug)]
pub struct SolveOptions {
    pub mode: SolveMode,
    /// Maximum number of search nodes; `None` means unlimited (subject to the cap).
    pub budget: Option<u64>,
    pub cap: usize,
}

impl Default for SolveOptions {
    fn default() -> Self {
        Self {
            mode: SolveMode::Exact,
            budget: None,
            cap: DEFAULT_EXACT_CAP,
        }
    }
}

impl SolveOptions {
    pub fn exact() -> Self {
        Self::default()
    }

    pub fn bound() -> Self {
        Self {
            mode: SolveMode::Bound,
            ..Self::default()
        }
    }

    pub fn with_budget(mut self, budget: u64) -> Self {
        self.budget = Some(budget);
        self
    }
}

/// Witness vertex set with its size, an upper bound and the search status.
/// Used for both cliques and independent sets.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SetCertificate {
    pub value: usize,
    pub witness: Vec<usize>,
    pub upper_bound: usize,
    pub status: Status,
    pub nodes: u64,
}

impl SetCertificate {
    pub fn is_exact(&self) -> bool {
        self.status == Status::Exact
    }
}

pub type AlphaCertificate = SetCertificate;
pub type CliqueCertificate = SetCertificate;

/// Graph relabelled so that position `i` holds `order[i]`; branching order is
/// non-increasing degree with ties broken by lower original index.
struct Ordered {
    order: Vec<usize>,
    adj: Vec<VertexSet>,
}

impl Ordered {
    fn new(g: &Graph) -> Self {
        let n = g.n();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
        let mut pos = vec![0; n];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        let adj = order
            .iter()
            .map(|&v| VertexSet::from_iter(n, g.neighbors(v).iter().map(|w| pos[w])))
            .collect();
        Self { order, adj }
    }
}

/// Greedy sequential colouring of `p`: returns vertices in colour-class order
/// together with the running colour number of each.
fn color_sort(adj: &[VertexSet], p: &VertexSet, verts: &mut Vec<usize>, colors: &mut Vec<usize>) {
    verts.clear();
    colors.clear();
    let mut uncolored = p.clone();
    let mut k = 0;
    while !uncolored.is_empty() {
        k += 1;
        let mut q = uncolored.clone();
        while let Some(v) = q.first() {
            q.remove(v);
            q.difference_with(&adj[v]);
            uncolored.remove(v);
            verts.push(v);
            colors.push(k);
        }
    }
}

struct Search<'a> {
    adj: &'a [VertexSet],
    best: Vec<usize>,
    current: Vec<usize>,
    nodes: u64,
    budget: u64,
    aborted: bool,
}

impl Search<'_> {
    fn expand(&mut self, p: VertexSet) {
        self.nodes += 1;
        if self.nodes > self.budget {
            self.aborted = true;
            return;
        }
        let mut verts = Vec::new();
        let mut colors = Vec::new();
        color_sort(self.adj, &p, &mut verts, &mut colors);
        let mut p = p;
        for i in (0..verts.len()).rev() {
            if self.current.len() + colors[i] <= self.best.len() {
                return;
            }
            let v = verts[i];
            self.current.push(v);
            let np = p.intersection(&self.adj[v]);
            if np.is_empty() {
                if self.current.len() > self.best.len() {
                    self.best = self.current.clone();
                }
            } else {
                self.expand(np);
            }
            self.current.pop();
            if self.aborted {
                return;
            }
            p.remove(v);
        }
    }
}

fn color_bound(adj: &[VertexSet], n: usize) -> usize {
    let mut verts = Vec::new();
    let mut colors = Vec::new();
    color_sort(adj, &VertexSet::full(n), &mut verts, &mut colors);
    colors.last().copied().unwrap_or(0)
}

/// Greedy clique: repeatedly take the candidate with most candidate neighbours.
fn greedy_clique(g: &Graph) -> Vec<usize> {
    let mut cand = g.vertex_set();
    let mut clique = Vec::new();
    while !cand.is_empty() {
        let v = cand
            .iter()
            .max_by_key(|&v| (g.degree_in(v, &cand), std::cmp::Reverse(v)))
            .unwrap();
        clique.push(v);
        cand.intersect_with(g.neighbors(v));
    }
    clique.sort_unstable();
    clique
}

/// Maximum clique with witness (sorted ascending).
pub fn max_clique(g: &Graph, opts: &SolveOptions) -> Result<CliqueCertificate> {
    let n = g.n();
    let ord = Ordered::new(g);
    let upper = color_bound(&ord.adj, n);
    if opts.mode == SolveMode::Bound {
        let witness = greedy_clique(g);
        return Ok(SetCertificate {
            value: witness.len(),
            witness,
            upper_bound: upper,
            status: Status::Bound,
            nodes: 0,
        });
    }
    if n > opts.cap && opts.budget.is_none() {
        return Err(Error::Precondition(format!(
            "exact clique search on n={n} exceeds cap {} without a budget",
            opts.cap
        )));
    }
    let mut s = Search {
        adj: &ord.adj,
        best: Vec::new(),
        current: Vec::new(),
        nodes: 0,
        budget: opts.budget.unwrap_or(u64::MAX),
        aborted: false,
    };
    if n > 0 {
        s.expand(VertexSet::full(n));
    }
    let mut witness: Vec<usize> = s.best.iter().map(|&i| ord.order[i]).collect();
    witness.sort_unstable();
    if s.aborted {
        let greedy = greedy_clique(g);
        if greedy.len() > witness.len() {
            witness = greedy;
        }
    }
    let status = if s.aborted { Status::Incomplete } else { Status::Exact };
    Ok(SetCertificate {
        value: witness.len(),
        upper_bound: if s.aborted { upper } else { witness.len() },
        witness,
        status,
        nodes: s.nodes,
    })
}

/// Greedy minimum-degree independent set followed by (1,2)-swap local search.
pub fn greedy_independent_set(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut free = g.vertex_set();
    let mut set = VertexSet::new(n);
    while !free.is_empty() {
        let v = free
            .iter()
            .min_by_key(|&v| (g.degree_in(v, &free), v))
            .unwrap();
        set.insert(v);
        free.remove(v);
        free.difference_with(g.neighbors(v));
    }
    improve_by_swaps(g, &mut set);
    set.to_vec()
}

/// Replace one solution vertex by two non-adjacent 1-tight neighbours while
/// possible, then absorb any free vertex.
fn improve_by_swaps(g: &Graph, set: &mut VertexSet) {
    let n = g.n();
    loop {
        let mut tight1 = VertexSet::new(n);
        for v in 0..n {
            if !set.contains(v) && g.degree_in(v, set) == 1 {
                tight1.insert(v);
            }
        }
        let mut improved = false;
        'outer: for x in set.to_vec() {
            let cand = g.neighbors(x).intersection(&tight1);
            for u in cand.iter() {
                let rest = cand.difference(g.neighbors(u));
                if let Some(w) = rest.iter().find(|&w| w > u) {
                    set.remove(x);
                    set.insert(u);
                    set.insert(w);
                    improved = true;
                    break 'outer;
                }
            }
        }
        for v in 0..n {
            if !set.contains(v) && !g.neighbors(v).intersects(set) {
                set.insert(v);
                improved = true;
            }
        }
        if !improved {
            return;
        }
    }
}

/// `α(G)` as the clique number of the complement. Bound mode returns a local
/// search witness and the clique-cover bound.
pub fn alpha(g: &Graph, opts: &SolveOptions) -> Result<AlphaCertificate> {
    let comp = g.complement();
    if opts.mode == SolveMode::Bound {
        let witness = greedy_independent_set(g);
        let upper = color_bound(&Ordered::new(&comp).adj, g.n());
        return Ok(SetCertificate {
            value: witness.len(),
            witness,
            upper_bound: upper,
            status: Status::Bound,
            nodes: 0,
        });
    }
    let mut cert = max_clique(&comp, opts)?;
    if cert.status == Status::Incomplete {
        let greedy = greedy_independent_set(g);
        if greedy.len() > cert.value {
            cert.value = greedy.len();
            cert.witness = greedy;
        }
    }
    Ok(cert)
}

/// Exact `α(G)` without a budget, panicking on incomplete search. For tests and
/// small verified instances.
pub fn alpha_exact(g: &Graph) -> usize {
    let opts = SolveOptions {
        cap: usize::MAX,
        ..SolveOptions::exact()
    };
    alpha(g, &opts).expect("uncapped exact search").value
}

pub fn clique_number(g: &Graph) -> usize {
    let opts = SolveOptions {
        cap: usize::MAX,
        ..SolveOptions::exact()
    };
    max_clique(g, &opts).expect("uncapped exact search").value
}
