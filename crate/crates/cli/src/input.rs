use std::path::Path;

use anyhow::{anyhow, bail, Context, Result};
use rt_forge::colorings::EdgeColoring;
use rt_forge::graph::{
    andrasfai, blow_up, complete, cycle, from_adjacency_dump, from_graph6, path, petersen, turan_graph,
};
use rt_forge::structure::triangle_free_process;
use rt_forge::{Graph, Partition};

pub fn read_text(arg: &str) -> Result<String> {
    if arg == "-" {
        return std::io::read_to_string(std::io::stdin()).context("reading stdin");
    }
    std::fs::read_to_string(arg).with_context(|| format!("reading {arg}"))
}

fn usize_at(parts: &[&str], i: usize, spec: &str) -> Result<usize> {
    parts
        .get(i)
        .ok_or_else(|| anyhow!("{spec}: missing parameter {i}"))?
        .parse()
        .with_context(|| format!("{spec}: parameter {i} is not an integer"))
}

/// A file path, `-` for stdin, a family such as `c5:12`, or a graph6 literal.
/// Files holding `v: n1 n2` lines are read as adjacency dumps.
pub fn read_graph(arg: &str, seed: u64) -> Result<Graph> {
    if arg == "-" || Path::new(arg).is_file() {
        let text = read_text(arg)?;
        let body = text.trim();
        return if body.lines().any(|l| l.contains(':') && !l.starts_with(">>")) {
            Ok(from_adjacency_dump(body)?)
        } else {
            Ok(from_graph6(body)?)
        };
    }
    if arg.contains(':') || arg == "petersen" {
        return family(arg, seed);
    }
    from_graph6(arg).with_context(|| format!("{arg:?} is neither a file, a family nor graph6"))
}

/// `c5:t`, `and:k:t`, `cycle:n`, `path:n`, `complete:n`, `empty:n`,
/// `turan:n:p`, `tfp:n`, `petersen`.
pub fn family(spec: &str, seed: u64) -> Result<Graph> {
    let parts: Vec<&str> = spec.split(':').collect();
    let p = |i| usize_at(&parts, i, spec);
    Ok(match parts[0] {
        "c5" => blow_up(&cycle(5), p(1)?),
        "and" => blow_up(&andrasfai(p(1)?), p(2)?),
        "cycle" => cycle(p(1)?),
        "path" => path(p(1)?),
        "complete" => complete(p(1)?),
        "empty" => Graph::empty(p(1)?),
        "turan" => turan_graph(p(1)?, p(2)?)?.0,
        "tfp" => triangle_free_process(p(1)?, seed),
        "petersen" => petersen(),
        other => bail!("unknown graph family {other:?}"),
    })
}

pub fn read_coloring(arg: &str) -> Result<EdgeColoring> {
    Ok(EdgeColoring::from_text(&read_text(arg)?)?)
}

pub fn parse_list(s: &str) -> Result<Vec<usize>> {
    s.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<usize>().with_context(|| format!("bad integer {t:?}")))
        .collect()
}

/// `equal:p` for `p` consecutive near-equal blocks, or a label per vertex.
pub fn parse_partition(s: &str, n: usize) -> Result<Partition> {
    if let Some(p) = s.strip_prefix("equal:") {
        let p: usize = p.parse().context("equal:<p> needs an integer")?;
        if p == 0 || p > n {
            bail!("cannot split {n} vertices into {p} blocks");
        }
        return Ok(Partition::consecutive(&rt_forge::graph::balanced_sizes(n, p)));
    }
    let text = if Path::new(s).is_file() { read_text(s)? } else { s.to_string() };
    let labels = parse_list(&text)?;
    if labels.len() != n {
        bail!("{} labels for {n} vertices", labels.len());
    }
    let parts = labels.iter().max().map_or(0, |m| m + 1);
    Ok(Partition::from_labels(&labels, parts))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn families_and_literals() {
        assert_eq!(read_graph("c5:2", 0).unwrap().n(), 10);
        assert_eq!(read_graph("and:4:1", 0).unwrap().regular_degree(), Some(4));
        assert_eq!(read_graph("Dhc", 0).unwrap().edge_count(), 5);
        assert!(read_graph("nosuch:3", 0).is_err());
        assert_eq!(parse_partition("equal:3", 7).unwrap().sizes(), vec![3, 2, 2]);
        assert_eq!(parse_partition("0,1,1", 3).unwrap().sizes(), vec![1, 2]);
        assert!(parse_partition("0,1", 3).is_err());
    }
}
