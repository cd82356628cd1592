//! Lower-bound constructions with their colourings and exact edge ledgers.

mod builders;
mod fnd;

pub use builders::*;
pub use fnd::*;

use num_rational::Ratio;
use serde::Serialize;

use crate::colorings::{mono_clique, EdgeColoring, FreenessSpec, MonoClique};
use crate::error::Result;
use crate::graph::{Graph, Partition};
use crate::solvers::{alpha, SetCertificate, SolveOptions, Status};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ConstructionKind {
    K3K3,
    K3K4,
    K3K5,
    K3K6,
    Thm12Odd { s: usize },
    Thm12Even { s: usize },
}

impl ConstructionKind {
    pub fn name(&self) -> String {
        match self {
            Self::K3K3 => "k3k3".into(),
            Self::K3K4 => "k3k4".into(),
            Self::K3K5 => "k3k5".into(),
            Self::K3K6 => "k3k6".into(),
            Self::Thm12Odd { s } => format!("k3k{}_odd", 2 * s - 1),
            Self::Thm12Even { s } => format!("k3k{}_even", 2 * s),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "verdict")]
pub enum FreenessVerdict {
    /// Exhaustive per-colour clique search found no forbidden clique.
    NoneFound,
    Violated(MonoClique),
}

#[derive(Clone, Debug)]
pub struct ConstructionReport {
    pub kind: ConstructionKind,
    pub graph: Graph,
    pub coloring: EdgeColoring,
    pub partition: Partition,
    pub spec: FreenessSpec,
    pub predicted_edges: usize,
    pub actual_edges: usize,
    /// `δ = d/n` (or `δn/n` for the padded families); `None` where the
    /// construction has no density parameter.
    pub delta: Option<Ratio<i64>>,
    pub alpha: Option<SetCertificate>,
    pub freeness: Option<FreenessVerdict>,
    pub notes: Vec<String>,
}

#[derive(Clone, Copy, Debug)]
pub struct VerifyOptions {
    pub alpha: bool,
    pub alpha_budget: u64,
    pub freeness: bool,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self {
            alpha: true,
            alpha_budget: 50_000_000,
            freeness: true,
        }
    }
}

impl ConstructionReport {
    pub fn n(&self) -> usize {
        self.graph.n()
    }

    pub fn ledger_matches(&self) -> bool {
        self.predicted_edges == self.actual_edges
    }

    /// `e / n²` as an exact rational.
    pub fn density(&self) -> Ratio<i64> {
        Ratio::new(self.actual_edges as i64, (self.n() * self.n()) as i64)
    }

    pub fn is_free(&self) -> Option<bool> {
        self.freeness.as_ref().map(|f| *f == FreenessVerdict::NoneFound)
    }

    pub fn alpha_exact(&self) -> Option<usize> {
        self.alpha.as_ref().filter(|a| a.status == Status::Exact).map(|a| a.value)
    }

    pub fn verify(&mut self, opts: &VerifyOptions) -> Result<()> {
        if opts.freeness {
            self.freeness = Some(match mono_clique(&self.graph, &self.coloring, &self.spec)? {
                None => FreenessVerdict::NoneFound,
                Some(w) => FreenessVerdict::Violated(w),
            });
        }
        if opts.alpha {
            let so = SolveOptions::exact().with_budget(opts.alpha_budget);
            self.alpha = Some(alpha(&self.graph, &so)?);
        }
        Ok(())
    }

    /// Largest exact `α` over the parts' induced graphs.
    pub fn max_part_alpha(&self) -> Result<usize> {
        let mut best = 0;
        for block in self.partition.blocks() {
            let so = SolveOptions::exact().with_budget(u64::MAX);
            best = best.max(alpha(&self.graph.induced(block), &so)?.value);
        }
        Ok(best)
    }
}
