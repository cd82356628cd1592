//! Dependent random choice on a tripartite host.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::Graph;

pub const DRC_RETRIES: usize = 64;

/// A graph with three equal blocks `Z_1, Z_2, Z_3` and a density floor `γ`.
#[derive(Clone, Debug)]
pub struct TripartiteHost {
    graph: Graph,
    z: [Vec<usize>; 3],
    zsets: [VertexSet; 3],
    gamma: f64,
}

impl TripartiteHost {
    pub fn new(graph: Graph, z: [Vec<usize>; 3], gamma: f64) -> Result<Self> {
        if !(gamma > 0.0 && gamma < 1.0) {
            return Err(Error::InvalidParameter(format!("γ = {gamma} outside (0,1)")));
        }
        let n = graph.n();
        let mut seen = vec![false; n];
        for v in z.iter().flatten() {
            if *v >= n || seen[*v] {
                return Err(Error::InvalidParameter(format!("vertex {v} repeated or outside 0..{n}")));
            }
            seen[*v] = true;
        }
        if seen.contains(&false) {
            return Err(Error::InvalidParameter("blocks do not cover V".into()));
        }
        if z[0].len() != z[1].len() || z[1].len() != z[2].len() || z[0].is_empty() {
            return Err(Error::InvalidParameter("blocks must be non-empty and of equal size".into()));
        }
        let zsets = [0, 1, 2].map(|i| VertexSet::from_iter(n, z[i].iter().copied()));
        let mut z = z;
        for b in z.iter_mut() {
            b.sort_unstable();
        }
        Ok(Self { graph, z, zsets, gamma })
    }

    /// Blocks `0..m`, `m..2m`, `2m..3m`.
    pub fn consecutive(graph: Graph, gamma: f64) -> Result<Self> {
        let m = graph.n() / 3;
        if 3 * m != graph.n() {
            return Err(Error::InvalidParameter(format!("{} vertices do not split into 3 blocks", graph.n())));
        }
        let z = [0, 1, 2].map(|i| (i * m..(i + 1) * m).collect());
        Self::new(graph, z, gamma)
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn block(&self, i: usize) -> &[usize] {
        &self.z[i]
    }

    /// Common block size `n`.
    pub fn part_size(&self) -> usize {
        self.z[0].len()
    }

    pub fn gamma(&self) -> f64 {
        self.gamma
    }

    /// `q = ⌈ln n / (6 ln(1/γ))⌉`, at least 1.
    pub fn q(&self) -> usize {
        drc_q(self.part_size(), self.gamma)
    }

    /// `min_{v ∈ Z_1, i ∈ {2,3}} d(v, Z_i)/|Z_i|`.
    pub fn min_degree_ratio(&self) -> f64 {
        let n = self.part_size() as f64;
        self.z[0]
            .iter()
            .flat_map(|&v| [1, 2].map(|i| self.graph.degree_in(v, &self.zsets[i]) as f64 / n))
            .fold(f64::INFINITY, f64::min)
    }

    fn check_precondition(&self) -> Result<()> {
        let floor = self.gamma * self.part_size() as f64;
        for &v in &self.z[0] {
            for i in [1, 2] {
                let d = self.graph.degree_in(v, &self.zsets[i]);
                if (d as f64) < floor {
                    return Err(Error::Precondition(format!(
                        "d({v}, Z_{}) = {d} < γ|Z| = {floor}",
                        i + 1
                    )));
                }
            }
        }
        Ok(())
    }

    /// `|N(P, Z_i)| >= γ⁹ |Z_i|` for both `i ∈ {2,3}`.
    pub fn pair_is_good(&self, u: usize, v: usize) -> bool {
        let floor = self.gamma.powi(9) * self.part_size() as f64;
        let (nu, nv) = (self.graph.neighbors(u), self.graph.neighbors(v));
        [1, 2].iter().all(|&i| nu.intersection3_len(nv, &self.zsets[i]) as f64 >= floor)
    }

    /// Exhaustive pair check over `S × S`.
    pub fn all_pairs_good(&self, s: &[usize]) -> bool {
        s.iter()
            .enumerate()
            .all(|(i, &u)| s[i + 1..].iter().all(|&v| self.pair_is_good(u, v)))
    }

    fn sample(&self, rng: &mut ChaCha8Rng, q: usize) -> (Vec<usize>, Vec<usize>) {
        let draw = |rng: &mut ChaCha8Rng, i: usize| -> Vec<usize> {
            (0..q).map(|_| self.z[i][rng.gen_range(0..self.part_size())]).collect()
        };
        let q2 = draw(rng, 1);
        let q3 = draw(rng, 2);
        (q2, q3)
    }

    fn common_neighborhood(&self, samples: impl Iterator<Item = usize>) -> VertexSet {
        let mut s = self.zsets[0].clone();
        for w in samples {
            s.intersect_with(self.graph.neighbors(w));
        }
        s
    }

    fn bad_pairs_in(&self, s: &[usize]) -> usize {
        s.iter()
            .enumerate()
            .map(|(i, &u)| s[i + 1..].iter().filter(|&&v| !self.pair_is_good(u, v)).count())
            .sum()
    }
}

pub fn drc_q(n: usize, gamma: f64) -> usize {
    let raw = (n as f64).ln() / (6.0 * (1.0 / gamma).ln());
    ((raw - 1e-9).ceil() as usize).max(1)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DrcOutcome {
    pub q: usize,
    pub q2: Vec<usize>,
    pub q3: Vec<usize>,
    pub s_prime: Vec<usize>,
    /// Bad pairs inside `S′`.
    pub bad_pairs: usize,
    pub s: Vec<usize>,
    /// `½ n^{2/3}`.
    pub target: f64,
    pub success: bool,
    pub attempts: usize,
}

/// Samples `Q_2`, `Q_3`, takes `S′ = Z_1 ∩ N(Q_2 ∪ Q_3)`, then scans pairs of
/// `S′` lexicographically and deletes the higher endpoint of each bad pair.
/// Retries up to [`DRC_RETRIES`] times; returns the first success or else the
/// attempt with the largest `S`.
pub fn drc_sample(host: &TripartiteHost, seed: u64) -> Result<DrcOutcome> {
    host.check_precondition()?;
    let q = host.q();
    let n = host.part_size();
    let target = 0.5 * (n as f64).powf(2.0 / 3.0);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut best: Option<DrcOutcome> = None;
    for attempt in 1..=DRC_RETRIES {
        let (q2, q3) = host.sample(&mut rng, q);
        let sp = host.common_neighborhood(q2.iter().chain(&q3).copied());
        let s_prime = sp.to_vec();
        let bad_pairs = host.bad_pairs_in(&s_prime);
        let mut alive = sp.clone();
        for (i, &u) in s_prime.iter().enumerate() {
            if !alive.contains(u) {
                continue;
            }
            for &v in &s_prime[i + 1..] {
                if alive.contains(v) && !host.pair_is_good(u, v) {
                    alive.remove(v);
                }
            }
        }
        let s = alive.to_vec();
        let success = s.len() as f64 >= target;
        let out = DrcOutcome {
            q,
            q2,
            q3,
            s_prime,
            bad_pairs,
            s,
            target,
            success,
            attempts: attempt,
        };
        if success {
            return Ok(out);
        }
        if best.as_ref().is_none_or(|b| out.s.len() > b.s.len()) {
            best = Some(out);
        }
    }
    let mut best = best.expect("at least one attempt");
    best.attempts = DRC_RETRIES;
    Ok(best)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DrcEstimates {
    pub q: usize,
    pub replicas: usize,
    /// `Σ_{v ∈ Z_1} Π_i (d(v,Z_i)/|Z_i|)^q`.
    pub exact_s_prime: f64,
    pub mean_s_prime: f64,
    pub se_s_prime: f64,
    /// Expected number of bad pairs in `S′`, summed exactly over bad pairs of `Z_1`.
    pub exact_bad_pairs: f64,
    pub mean_bad_pairs: f64,
    pub se_bad_pairs: f64,
    /// `n γ̂^{2q}` with `γ̂` the minimum degree ratio.
    pub lower_bound: f64,
    /// `mean_s_prime >= lower_bound − 3 SE`.
    pub lower_bound_holds: bool,
    /// `|C(Z_1, 2)| γ^{18q}` upper bound on the expected bad pairs.
    pub bad_pair_bound: f64,
}

impl DrcEstimates {
    /// `|estimate − exact| <= 3 SE` for `|S′|` (with a tiny absolute slack).
    pub fn s_prime_within_3se(&self) -> bool {
        (self.mean_s_prime - self.exact_s_prime).abs() <= 3.0 * self.se_s_prime + 1e-9
    }

    pub fn bad_pairs_within_3se(&self) -> bool {
        (self.mean_bad_pairs - self.exact_bad_pairs).abs() <= 3.0 * self.se_bad_pairs + 1e-9
    }
}

fn mean_se(xs: &[f64]) -> (f64, f64) {
    let r = xs.len() as f64;
    let mean = xs.iter().sum::<f64>() / r;
    if xs.len() < 2 {
        return (mean, 0.0);
    }
    let var = xs.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / (r - 1.0);
    (mean, (var / r).sqrt())
}

/// Monte Carlo estimates of `E|S′|` and `E[X]`; replica `r` uses seed `seed + r`.
pub fn drc_expectation_mc(host: &TripartiteHost, replicas: usize, seed: u64) -> Result<DrcEstimates> {
    host.check_precondition()?;
    if replicas == 0 {
        return Err(Error::InvalidParameter("need at least one replica".into()));
    }
    let q = host.q();
    let n = host.part_size();
    let nf = n as f64;
    let g = host.graph();

    let exact_s_prime: f64 = host.z[0]
        .iter()
        .map(|&v| {
            [1, 2]
                .iter()
                .map(|&i| (g.degree_in(v, &host.zsets[i]) as f64 / nf).powi(q as i32))
                .product::<f64>()
        })
        .sum();
    let z1 = &host.z[0];
    let exact_bad_pairs: f64 = (0..z1.len())
        .into_par_iter()
        .map(|a| {
            let u = z1[a];
            z1[a + 1..]
                .iter()
                .filter(|&&v| !host.pair_is_good(u, v))
                .map(|&v| {
                    [1, 2]
                        .iter()
                        .map(|&i| {
                            let c = g.neighbors(u).intersection3_len(g.neighbors(v), &host.zsets[i]);
                            (c as f64 / nf).powi(q as i32)
                        })
                        .product::<f64>()
                })
                .fold(0.0, |acc, x| acc + x)
        })
        .collect::<Vec<_>>()
        .into_iter()
        .fold(0.0, |acc, x| acc + x);

    let samples: Vec<(f64, f64)> = (0..replicas)
        .into_par_iter()
        .map(|r| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(r as u64));
            let (q2, q3) = host.sample(&mut rng, q);
            let sp = host.common_neighborhood(q2.iter().chain(&q3).copied()).to_vec();
            (sp.len() as f64, host.bad_pairs_in(&sp) as f64)
        })
        .collect();
    let sizes: Vec<f64> = samples.iter().map(|s| s.0).collect();
    let bads: Vec<f64> = samples.iter().map(|s| s.1).collect();
    let (mean_s_prime, se_s_prime) = mean_se(&sizes);
    let (mean_bad_pairs, se_bad_pairs) = mean_se(&bads);
    let gamma_hat = host.min_degree_ratio();
    let lower_bound = nf * gamma_hat.powi(2 * q as i32);
    Ok(DrcEstimates {
        q,
        replicas,
        exact_s_prime,
        mean_s_prime,
        se_s_prime,
        exact_bad_pairs,
        mean_bad_pairs,
        se_bad_pairs,
        lower_bound,
        lower_bound_holds: mean_s_prime >= lower_bound - 3.0 * se_s_prime,
        bad_pair_bound: nf * (nf - 1.0) / 2.0 * host.gamma.powi(18 * q as i32),
    })
}

/// Complete tripartite `K_{m,m,m}` host.
pub fn complete_tripartite_host(m: usize, gamma: f64) -> Result<TripartiteHost> {
    let (g, _) = crate::graph::complete_multipartite(&[m, m, m]);
    TripartiteHost::consecutive(g, gamma)
}

/// Random tripartite host: each cross pair is an edge with probability `p`,
/// no edges inside blocks.
pub fn random_tripartite_host(m: usize, p: f64, gamma: f64, seed: u64) -> Result<TripartiteHost> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut b = crate::graph::GraphBuilder::new(3 * m);
    for u in 0..3 * m {
        for v in u + 1..3 * m {
            if u / m != v / m && rng.gen_bool(p) {
                b.add_edge(u, v);
            }
        }
    }
    TripartiteHost::consecutive(b.build(), gamma)
}
