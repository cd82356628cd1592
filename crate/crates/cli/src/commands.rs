use std::time::Instant;

use anyhow::{anyhow, bail, Context, Result};
use serde_json::json;

use rt_forge::colorings::{freeness_search, is_free, mono_clique, r_star_search, FreenessSpec, SearchOutcome};
use rt_forge::constructions::{
    build_k3k3, build_k3k4, build_k3k5, build_k3k6, build_thm12_lower, ConstructionReport, HProvider, Parity,
    VerifyOptions,
};
use rt_forge::graph::to_graph6;
use rt_forge::rt::{compare_report, eval_formula, eval_gs, rt_exact, FormulaId, Omega, RtQuery};
use rt_forge::solvers::{alpha, max_clique, SolveOptions};
use rt_forge::structure::{
    check_extract, complete_tripartite_host, drc_expectation_mc, drc_sample, find_generalized_clique,
    is_maximal_triangle_free, k3k3_extract, min_degree_extract, random_tripartite_host, reduced_coloring,
    refine_partition, triangle_free_process, GeneralizedCliqueQuery,
};
use rt_forge::Graph;

use crate::input::{parse_list, parse_partition, read_coloring, read_graph};
use crate::output::Records;
use crate::{Command, ConstructArgs, ExtractMethod, Global, HostKind, Kind, SolveModeArg};

const DEFAULT_ALPHA_BUDGET: u64 = 50_000_000;

fn spec(s: &str) -> Result<FreenessSpec> {
    s.parse::<FreenessSpec>().with_context(|| format!("bad spec {s:?}"))
}

fn solve_options(mode: SolveModeArg, budget: Option<u64>) -> SolveOptions {
    let o = match mode {
        SolveModeArg::Exact => SolveOptions::exact(),
        SolveModeArg::Bound => SolveOptions::bound(),
    };
    match budget {
        Some(b) => o.with_budget(b),
        None => o,
    }
}

fn millis(t: Instant) -> f64 {
    t.elapsed().as_secs_f64() * 1e3
}

pub fn run(cmd: &Command, g: &Global) -> Result<Records> {
    match cmd {
        Command::Construct(args) => construct(args, g),
        Command::Verify { graph, coloring, spec: s, alpha: with_alpha } => {
            let gr = read_graph(graph, g.seed)?;
            let c = read_coloring(coloring)?;
            let sp = spec(s)?;
            let covers = c.check_covers(&gr);
            let witness = if covers.is_ok() { mono_clique(&gr, &c, &sp)? } else { None };
            let a = if *with_alpha {
                Some(alpha(&gr, &solve_options(SolveModeArg::Exact, Some(g.budget.unwrap_or(DEFAULT_ALPHA_BUDGET))))?)
            } else {
                None
            };
            Records::one(json!({
                "n": gr.n(),
                "edges": gr.edge_count(),
                "covers": covers.is_ok(),
                "cover_error": covers.err().map(|e| e.to_string()),
                "free": covers_free(&gr, &c, &sp)?,
                "violation_color": witness.as_ref().map(|w| w.color),
                "violation": witness.map(|w| w.vertices),
                "alpha": a.as_ref().map(|a| a.value),
                "alpha_status": a.map(|a| a.status),
            }))
        }
        Command::Alpha { graph, mode } => {
            let gr = read_graph(graph, g.seed)?;
            Records::one(alpha(&gr, &solve_options(*mode, g.budget))?)
        }
        Command::Clique { graph, mode } => {
            let gr = read_graph(graph, g.seed)?;
            Records::one(max_clique(&gr, &solve_options(*mode, g.budget))?)
        }
        Command::Freeness { graph, spec: s, coloring_out } => {
            let gr = read_graph(graph, g.seed)?;
            let r = freeness_search(&gr, &spec(s)?, g.budget);
            let outcome = match &r.outcome {
                SearchOutcome::Found(_) => "found",
                SearchOutcome::NoneExists => "none",
                SearchOutcome::Incomplete => "incomplete",
            };
            if let (Some(path), Some(c)) = (coloring_out, r.coloring()) {
                std::fs::write(path, c.to_text())?;
            }
            Records::one(json!({
                "n": gr.n(),
                "edges": gr.edge_count(),
                "outcome": outcome,
                "nodes": r.nodes,
                "class_sizes": r.coloring().map(|c| c.class_sizes()),
            }))
        }
        Command::Rstar { spec: s } => {
            let sp = spec(s)?;
            let r = r_star_search(sp.sizes(), g.budget)?;
            let triangles = sp.sizes().iter().all(|&a| a == 3);
            Records::one(json!({
                "spec": sp.sizes(),
                "r_star": r.n,
                "complete": r.complete,
                "nodes": r.nodes,
                "vertex_colors": r.witness.vertex_color,
                "rho": (triangles && r.n > 0)
                    .then(|| eval_formula(&FormulaId::TrianglesViaRStar { r_star: r.n }).map(|v| v.value))
                    .transpose()?,
            }))
        }
        Command::RtExact { n, spec: s, m } => {
            let q = RtQuery { n: *n, spec: spec(s)?, m: *m };
            let t = Instant::now();
            let r = rt_exact(&q, g.budget)?;
            Records::one(json!({
                "n": n,
                "spec": q.spec.sizes(),
                "m": m,
                "status": r.status,
                "edges": r.edges,
                "classes_per_level": r.classes_per_level,
                "nodes": r.nodes,
                "witness_graph6": r.witness.as_ref().map(|(w, _)| to_graph6(w)),
                "witness_coloring": r.witness.as_ref().map(|(_, c)| c.to_text()),
                "runtime_ms": millis(t),
            }))
        }
        Command::Drc { host, m, gamma, p, seeds, replicas } => {
            let mut out = Records::default();
            for seed in g.seed..g.seed + seeds {
                let h = match host {
                    HostKind::Complete => complete_tripartite_host(*m, *gamma)?,
                    HostKind::Random => random_tripartite_host(*m, *p, *gamma, seed)?,
                };
                let t = Instant::now();
                match replicas {
                    Some(r) => {
                        let est = drc_expectation_mc(&h, *r, seed)?;
                        let mut rec = serde_json::to_value(&est)?;
                        let obj = rec.as_object_mut().expect("struct");
                        obj.insert("seed".into(), json!(seed));
                        obj.insert("s_prime_within_3se".into(), json!(est.s_prime_within_3se()));
                        obj.insert("bad_pairs_within_3se".into(), json!(est.bad_pairs_within_3se()));
                        obj.insert("runtime_ms".into(), json!(millis(t)));
                        out.push(rec)?;
                    }
                    None => {
                        let o = drc_sample(&h, seed)?;
                        out.push(json!({
                            "seed": seed,
                            "n": m,
                            "gamma": gamma,
                            "q": o.q,
                            "s_prime": o.s_prime.len(),
                            "bad_pairs": o.bad_pairs,
                            "s": o.s.len(),
                            "target": o.target,
                            "success": o.success,
                            "attempts": o.attempts,
                            "runtime_ms": millis(t),
                        }))?;
                    }
                }
            }
            Ok(out)
        }
        Command::Tfp { n, seeds, graph6 } => {
            let mut out = Records::default();
            for seed in g.seed..g.seed + seeds {
                let t = Instant::now();
                let gr = triangle_free_process(*n, seed);
                let runtime = millis(t);
                let a = alpha(&gr, &SolveOptions::bound())?;
                let nf = *n as f64;
                out.push(json!({
                    "seed": seed,
                    "n": n,
                    "edges": gr.edge_count(),
                    "triangle_free": gr.is_triangle_free(),
                    "maximal": is_maximal_triangle_free(&gr),
                    "alpha_lower": a.value,
                    "alpha_upper": a.upper_bound,
                    "ratio": a.value as f64 / (nf * nf.ln()).sqrt(),
                    "runtime_ms": runtime,
                    "graph6": graph6.then(|| to_graph6(&gr)),
                }))?;
            }
            Ok(out)
        }
        Command::Extract { graph, method, d, eps, coloring } => {
            let gr = read_graph(graph, g.seed)?;
            match method {
                ExtractMethod::MinDegree => {
                    let o = min_degree_extract(&gr, *d)?;
                    let checks = eps.map(|e| check_extract(&gr, *d, e, &o));
                    Records::one(json!({
                        "n": gr.n(),
                        "kept": o.kept.len(),
                        "deleted": o.deleted,
                        "edges": o.subgraph.edge_count(),
                        "min_degree": (o.subgraph.n() > 0).then(|| o.subgraph.min_degree()),
                        "checks": checks,
                    }))
                }
                ExtractMethod::K3k3 => {
                    let path = coloring.as_deref().ok_or_else(|| anyhow!("--coloring is required for k3k3"))?;
                    let c = read_coloring(path)?;
                    let o = k3k3_extract(&gr, &c)?;
                    let mut rec = serde_json::to_value(&o.diagnostics)?;
                    let obj = rec.as_object_mut().expect("struct");
                    obj.insert("a".into(), json!(o.partition.block(0)));
                    obj.insert("b".into(), json!(o.partition.block(1)));
                    Records::one(rec)
                }
            }
        }
        Command::Reduce { graph, coloring, parts, gamma, tags, t, color } => {
            let gr = read_graph(graph, g.seed)?;
            let c = read_coloring(coloring)?;
            let p = parse_partition(parts, gr.n())?;
            let tags = match tags {
                Some(s) => parse_list(s)?,
                None => vec![0; p.len()],
            };
            let r = reduced_coloring(&gr, &c, &p, *gamma, &tags)?;
            let mut out = Records::default();
            for (p, q, col, w) in r.edges() {
                out.push(json!({"p": p, "q": q, "color": col, "weight": w}))?;
            }
            if let Some(t) = t {
                let query = GeneralizedCliqueQuery { t: *t, gamma: *gamma, color: *color };
                let found = find_generalized_clique(&r, &query)?;
                out.push(json!({
                    "t": t,
                    "found": found.is_some(),
                    "x": found.as_ref().map(|f| &f.x),
                    "y": found.as_ref().map(|f| &f.y),
                }))?;
            }
            Ok(out)
        }
        Command::Refine { graph, parts, threshold, cap } => {
            let gr = read_graph(graph, g.seed)?;
            let p = parse_partition(parts, gr.n())?;
            let o = refine_partition(&gr, &p, *threshold, *cap)?;
            Records::one(json!({
                "moves": o.moves.len(),
                "complete": o.complete,
                "cap": o.cap,
                "min_crossing_degree": o.min_crossing_degree,
                "all_moves_decreased": o.all_moves_decreased,
                "sizes": o.partition.sizes(),
                "labels": o.partition.labels(),
            }))
        }
        Command::Formulas { ids, gs_n, s, omega } => {
            let mut out = Records::default();
            if let Some(n) = gs_n {
                let w: Omega = omega.parse()?;
                let v = eval_gs(*n, *s, w)?;
                out.push(json!({"n": n, "s": s, "omega": omega, "g": v, "g_over_n": v / n}))?;
                return Ok(out);
            }
            let defaults = [
                "k3k3:1/100", "k3k4:1/100", "k3k5:1/100", "k3k6:1/100", "odd:2", "odd:3", "odd:4", "odd:5",
                "even:2", "even:3", "even:4", "even:5", "rstar:2", "rstar:5",
            ];
            let ids: Vec<&str> = if ids.is_empty() { defaults.to_vec() } else { ids.iter().map(String::as_str).collect() };
            for id in ids {
                out.push(eval_formula(&id.parse::<FormulaId>()?)?)?;
            }
            Ok(out)
        }
        Command::Report { verify } => {
            let mut reports = Vec::new();
            for (kind, n, s) in [
                (Kind::K3k3, None, None),
                (Kind::K3k4, None, None),
                (Kind::K3k5, None, None),
                (Kind::K3k6, None, None),
                (Kind::Odd, Some(100), Some(3)),
                (Kind::Even, Some(120), Some(3)),
            ] {
                let args = ConstructArgs {
                    kind,
                    f1: None,
                    f2: None,
                    set: None,
                    set_size: None,
                    delta_n: None,
                    n,
                    s,
                    h: None,
                    no_verify: !verify,
                    no_alpha: !verify,
                    graph_out: None,
                    coloring_out: None,
                };
                reports.push(assemble(&args, g)?);
            }
            let mut out = Records::default();
            for row in compare_report(&reports)? {
                out.push(row)?;
            }
            Ok(out)
        }
    }
}

fn covers_free(g: &Graph, c: &rt_forge::colorings::EdgeColoring, sp: &FreenessSpec) -> Result<Option<bool>> {
    if c.check_covers(g).is_err() {
        return Ok(None);
    }
    Ok(Some(is_free(g, c, sp)?))
}

/// First `size` vertices of a maximum independent set of `f`.
fn default_independent(f: &Graph, size: usize, budget: Option<u64>) -> Result<Vec<usize>> {
    let a = alpha(f, &solve_options(SolveModeArg::Exact, Some(budget.unwrap_or(DEFAULT_ALPHA_BUDGET))))?;
    if a.witness.len() < size {
        bail!("independent set of size {size} requested, found only {}", a.witness.len());
    }
    let mut w = a.witness;
    w.sort_unstable();
    w.truncate(size);
    Ok(w)
}

fn assemble(a: &ConstructArgs, g: &Global) -> Result<ConstructionReport> {
    let graph_or = |arg: &Option<String>, default: &str| read_graph(arg.as_deref().unwrap_or(default), g.seed);
    let mut report = match a.kind {
        Kind::K3k3 => {
            let f = graph_or(&a.f1, "c5:12")?;
            build_k3k3(&f, &f)?
        }
        Kind::K3k5 => {
            let f = graph_or(&a.f1, "c5:6")?;
            build_k3k5(&vec![f; 5])?
        }
        Kind::K3k4 => {
            let f1 = graph_or(&a.f1, "c5:6")?;
            let f2 = graph_or(&a.f2, "c5:4")?;
            let delta_n = a.delta_n.unwrap_or(f1.n().saturating_sub(f2.n()));
            let b = match &a.set {
                Some(s) => parse_list(s)?,
                None => default_independent(&f2, a.set_size.unwrap_or(f2.max_degree()), g.budget)?,
            };
            build_k3k4(&f1, &f2, &b, delta_n)?
        }
        Kind::K3k6 => {
            let f1 = graph_or(&a.f1, "and:4:1")?;
            let f2 = graph_or(&a.f2, "c5:1")?;
            let delta_n = a.delta_n.unwrap_or(2 * f1.n().saturating_sub(f2.n()) / 3);
            let i = match &a.set {
                Some(s) => parse_list(s)?,
                None => default_independent(&f2, a.set_size.unwrap_or(f2.max_degree()), g.budget)?,
            };
            build_k3k6(&f1, &f2, &i, delta_n)?
        }
        Kind::Odd | Kind::Even => {
            let n = a.n.ok_or_else(|| anyhow!("--n is required"))?;
            let s = a.s.ok_or_else(|| anyhow!("--s is required"))?;
            let parity = if a.kind == Kind::Odd { Parity::Odd } else { Parity::Even };
            let h = match &a.h {
                Some(h) => HProvider::Fixed(read_graph(h, g.seed)?),
                None => HProvider::Process { seed: g.seed },
            };
            build_thm12_lower(n, s, parity, &h, g.budget)?
        }
    };
    if !a.no_verify {
        report.verify(&VerifyOptions {
            alpha: !a.no_alpha,
            alpha_budget: g.budget.unwrap_or(DEFAULT_ALPHA_BUDGET),
            freeness: true,
        })?;
    }
    Ok(report)
}

fn construct(a: &ConstructArgs, g: &Global) -> Result<Records> {
    let r = assemble(a, g)?;
    if let Some(path) = &a.graph_out {
        std::fs::write(path, to_graph6(&r.graph) + "\n")?;
    }
    if let Some(path) = &a.coloring_out {
        std::fs::write(path, r.coloring.to_text())?;
    }
    Records::one(json!({
        "kind": r.kind.name(),
        "n": r.n(),
        "edges": r.actual_edges,
        "predicted_edges": r.predicted_edges,
        "ledger_matches": r.ledger_matches(),
        "delta": r.delta.map(|d| d.to_string()),
        "density": r.actual_edges as f64 / (r.n() * r.n()).max(1) as f64,
        "spec": r.spec.sizes(),
        "free": r.is_free(),
        "alpha": r.alpha.as_ref().map(|a| a.value),
        "alpha_status": r.alpha.as_ref().map(|a| a.status),
        "alpha_upper": r.alpha.as_ref().map(|a| a.upper_bound),
        "part_sizes": r.partition.sizes(),
        "notes": r.notes,
    }))
}
