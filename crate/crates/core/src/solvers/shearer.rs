use serde::Serialize;

use super::clique::{alpha, SolveOptions, Status};
use crate::graph::Graph;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "verdict")]
pub enum ShearerVerdict {
    /// The input contains this triangle.
    Inapplicable { triangle: [usize; 3] },
    Checked {
        n: usize,
        k: usize,
        alpha: usize,
        alpha_exact: bool,
        holds: bool,
    },
}

/// Largest `k` with `2k²/ln k <= n` (natural log). `k = 1` is always admissible.
pub fn shearer_k(n: usize) -> usize {
    let mut k = 1;
    while 2.0 * ((k + 1) as f64).powi(2) / ((k + 1) as f64).ln() <= n as f64 {
        k += 1;
    }
    k
}

/// Asserts `α(G) >= k` for triangle-free `G`. When the exact search runs out of
/// budget the local-search witness is used, so `holds` is still a proof when true.
pub fn shearer_check(g: &Graph, budget: Option<u64>) -> ShearerVerdict {
    if let Some(triangle) = g.find_triangle() {
        return ShearerVerdict::Inapplicable { triangle };
    }
    let k = shearer_k(g.n());
    let opts = SolveOptions {
        budget: Some(budget.unwrap_or(5_000_000)),
        ..SolveOptions::exact()
    };
    let cert = alpha(g, &opts).expect("budgeted search never hits the cap");
    ShearerVerdict::Checked {
        n: g.n(),
        k,
        alpha: cert.value,
        alpha_exact: cert.status == Status::Exact,
        holds: cert.value >= k,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{blow_up, complete, cycle};

    #[test]
    fn thresholds() {
        assert_eq!(shearer_k(5), 1);
        assert_eq!(shearer_k(11), 1);
        assert_eq!(shearer_k(12), 2);
        assert_eq!(shearer_k(20), 3);
        assert_eq!(shearer_k(23), 3);
    }

    #[test]
    fn verdicts() {
        assert!(matches!(shearer_check(&complete(3), None), ShearerVerdict::Inapplicable { .. }));
        assert!(matches!(shearer_check(&cycle(5), None), ShearerVerdict::Checked { k: 1, holds: true, .. }));
        let g = blow_up(&cycle(5), 4);
        assert!(matches!(
            shearer_check(&g, None),
            ShearerVerdict::Checked { k: 3, alpha: 8, holds: true, .. }
        ));
    }
}
