//! Edge colourings, monochromatic clique detection, clique-free colouring
//! search, split partitions and vertex+edge colourings.

mod rstar;
mod search;
mod split;

pub use rstar::*;
pub use search::*;
pub use split::*;

use serde::{Deserialize, Serialize};

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::{Graph, GraphBuilder};

const NONE: u8 = u8::MAX;

/// Colours `0..k` on the edges of a host graph on `n` vertices. Colours are
/// 0-based throughout, including the text format.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct EdgeColoring {
    n: usize,
    k: usize,
    cell: Vec<u8>,
}

impl std::fmt::Debug for EdgeColoring {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("EdgeColoring")
            .field("n", &self.n)
            .field("k", &self.k)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

impl EdgeColoring {
    pub fn new(n: usize, k: usize) -> Self {
        assert!((1..255).contains(&k), "colour count must be in 1..255");
        Self {
            n,
            k,
            cell: vec![NONE; n * n],
        }
    }

    /// Colours every edge of `g` by `f(u, v)` with `u < v`.
    pub fn from_fn(g: &Graph, k: usize, mut f: impl FnMut(usize, usize) -> usize) -> Self {
        let mut c = Self::new(g.n(), k);
        for (u, v) in g.edges() {
            c.set(u, v, f(u, v));
        }
        c
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn set(&mut self, u: usize, v: usize, color: usize) {
        assert!(color < self.k, "colour {color} outside 0..{}", self.k);
        assert!(u != v);
        self.cell[u * self.n + v] = color as u8;
        self.cell[v * self.n + u] = color as u8;
    }

    pub fn unset(&mut self, u: usize, v: usize) {
        self.cell[u * self.n + v] = NONE;
        self.cell[v * self.n + u] = NONE;
    }

    #[inline]
    pub fn get(&self, u: usize, v: usize) -> Option<usize> {
        match self.cell[u * self.n + v] {
            NONE => None,
            c => Some(c as usize),
        }
    }

    /// Coloured pairs `(u, v, c)` with `u < v`, lexicographic.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| (u + 1..self.n).filter_map(move |v| self.get(u, v).map(|c| (u, v, c))))
    }

    pub fn len(&self) -> usize {
        self.edges().count()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Spanning subgraph `G_c` of colour `c`.
    pub fn class_graph(&self, c: usize) -> Graph {
        let mut b = GraphBuilder::new(self.n);
        for (u, v, col) in self.edges() {
            if col == c {
                b.add_edge(u, v);
            }
        }
        b.build()
    }

    pub fn class_sizes(&self) -> Vec<usize> {
        let mut s = vec![0; self.k];
        for (_, _, c) in self.edges() {
            s[c] += 1;
        }
        s
    }

    /// Colour-`c` neighbourhood of `v`.
    pub fn class_neighbors(&self, v: usize, c: usize) -> VertexSet {
        VertexSet::from_iter(self.n, (0..self.n).filter(|&w| w != v && self.get(v, w) == Some(c)))
    }

    /// Exactly the edges of `g` are coloured.
    pub fn check_covers(&self, g: &Graph) -> Result<()> {
        if g.n() != self.n {
            return Err(Error::SizeMismatch(format!("graph has {} vertices, coloring {}", g.n(), self.n)));
        }
        for u in 0..self.n {
            for v in u + 1..self.n {
                match (g.has_edge(u, v), self.get(u, v)) {
                    (true, None) => return Err(Error::UncoloredEdge(u, v)),
                    (false, Some(_)) => {
                        return Err(Error::InvalidParameter(format!("non-edge {u}-{v} carries a colour")))
                    }
                    _ => {}
                }
            }
        }
        Ok(())
    }

    /// The host graph: all coloured pairs.
    pub fn support(&self) -> Graph {
        let mut b = GraphBuilder::new(self.n);
        for (u, v, _) in self.edges() {
            b.add_edge(u, v);
        }
        b.build()
    }

    /// Colour `c` becomes `perm[c]`.
    pub fn permute_colors(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.k);
        let mut out = Self::new(self.n, self.k);
        for (u, v, c) in self.edges() {
            out.set(u, v, perm[c]);
        }
        out
    }

    /// Header `n k`, then one `u v c` line per edge.
    pub fn to_text(&self) -> String {
        let mut s = format!("{} {}\n", self.n, self.k);
        for (u, v, c) in self.edges() {
            s.push_str(&format!("{u} {v} {c}\n"));
        }
        s
    }

    pub fn from_text(text: &str) -> Result<Self> {
        let (n, k, vertex_lines, edge_lines) = parse_colored_text(text)?;
        if let Some((line, _, _)) = vertex_lines.first() {
            return Err(Error::ColoringFormat {
                line: *line,
                msg: "vertex colour line in an edge colouring".into(),
            });
        }
        build_edges(n, k, &edge_lines)
    }
}

type Lines2 = Vec<(usize, usize, usize)>;
type Lines3 = Vec<(usize, [usize; 3])>;

fn parse_colored_text(text: &str) -> Result<(usize, usize, Lines2, Lines3)> {
    let mut header = None;
    let mut vertex_lines = Vec::new();
    let mut edge_lines = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let t = raw.split('#').next().unwrap_or("").trim();
        if t.is_empty() {
            continue;
        }
        let nums = t
            .split_whitespace()
            .map(|x| {
                x.parse::<usize>().map_err(|_| Error::ColoringFormat {
                    line,
                    msg: format!("not an integer: {x:?}"),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        match (header, nums.len()) {
            (None, 2) => header = Some((nums[0], nums[1])),
            (None, _) => {
                return Err(Error::ColoringFormat {
                    line,
                    msg: "expected header `n k`".into(),
                })
            }
            (Some(_), 2) => vertex_lines.push((line, nums[0], nums[1])),
            (Some(_), 3) => edge_lines.push((line, [nums[0], nums[1], nums[2]])),
            (Some(_), m) => {
                return Err(Error::ColoringFormat {
                    line,
                    msg: format!("expected 2 or 3 fields, found {m}"),
                })
            }
        }
    }
    let (n, k) = header.ok_or(Error::ColoringFormat {
        line: 0,
        msg: "missing header".into(),
    })?;
    if k == 0 || k >= 255 {
        return Err(Error::ColoringFormat {
            line: 1,
            msg: format!("colour count {k} outside 1..255"),
        });
    }
    Ok((n, k, vertex_lines, edge_lines))
}

fn build_edges(n: usize, k: usize, lines: &Lines3) -> Result<EdgeColoring> {
    let mut c = EdgeColoring::new(n, k);
    for &(line, [u, v, col]) in lines {
        let bad = |msg: String| Error::ColoringFormat { line, msg };
        if u >= n || v >= n || u == v {
            return Err(bad(format!("bad edge {u}-{v}")));
        }
        if col >= k {
            return Err(bad(format!("colour {col} outside 0..{k}")));
        }
        if c.get(u, v).is_some() {
            return Err(bad(format!("edge {u}-{v} coloured twice")));
        }
        c.set(u, v, col);
    }
    Ok(c)
}

/// `(s_0, .., s_{k-1})`: no monochromatic `K_{s_i}` in colour `i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FreenessSpec {
    sizes: Vec<usize>,
}

impl FreenessSpec {
    pub fn new(sizes: Vec<usize>) -> Result<Self> {
        if sizes.is_empty() {
            return Err(Error::InvalidParameter("freeness spec needs at least one colour".into()));
        }
        if let Some(s) = sizes.iter().find(|&&s| s < 2) {
            return Err(Error::InvalidParameter(format!("clique size {s} < 2")));
        }
        Ok(Self { sizes })
    }

    pub fn k(&self) -> usize {
        self.sizes.len()
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    pub fn size(&self, color: usize) -> usize {
        self.sizes[color]
    }
}

impl std::str::FromStr for FreenessSpec {
    type Err = Error;

    /// Accepts `3,4`, `(3,4)` or `3 4`.
    fn from_str(s: &str) -> Result<Self> {
        let sizes = s
            .trim_matches(|c| c == '(' || c == ')')
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<usize>().map_err(|_| Error::InvalidParameter(format!("bad size {t:?}"))))
            .collect::<Result<Vec<_>>>()?;
        Self::new(sizes)
    }
}

/// Vertex and edge colouring of `K_n` in which no edge shares a colour with
/// either endpoint.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StarColoring {
    pub vertex_color: Vec<usize>,
    pub edges: EdgeColoring,
}

impl StarColoring {
    pub fn n(&self) -> usize {
        self.vertex_color.len()
    }

    /// `φ(ij) ∉ {φ(i), φ(j)}` for every pair, and every pair is coloured.
    pub fn satisfies_star(&self) -> bool {
        let n = self.n();
        (0..n).all(|i| {
            (i + 1..n).all(|j| match self.edges.get(i, j) {
                Some(c) => c != self.vertex_color[i] && c != self.vertex_color[j],
                None => false,
            })
        })
    }

    /// The edge-colour header, a `v c` line per vertex, then `u v c` edge lines.
    pub fn to_text(&self) -> String {
        let mut s = format!("{} {}\n", self.n(), self.edges.k());
        for (v, c) in self.vertex_color.iter().enumerate() {
            s.push_str(&format!("{v} {c}\n"));
        }
        for (u, v, c) in self.edges.edges() {
            s.push_str(&format!("{u} {v} {c}\n"));
        }
        s
    }

    pub fn from_text(text: &str) -> Result<Self> {
        let (n, k, vertex_lines, edge_lines) = parse_colored_text(text)?;
        let mut vertex_color = vec![None; n];
        for &(line, v, c) in &vertex_lines {
            if v >= n || c >= k || vertex_color[v].is_some() {
                return Err(Error::ColoringFormat {
                    line,
                    msg: format!("bad vertex colour line `{v} {c}`"),
                });
            }
            vertex_color[v] = Some(c);
        }
        let vertex_color = vertex_color
            .into_iter()
            .enumerate()
            .map(|(v, c)| {
                c.ok_or(Error::ColoringFormat {
                    line: 0,
                    msg: format!("vertex {v} has no colour"),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            vertex_color,
            edges: build_edges(n, k, &edge_lines)?,
        })
    }
}

/// Two-colouring of `K_5`: pentagon edges colour 0, pentagram edges colour 1.
pub fn pentagon_coloring() -> (Graph, EdgeColoring) {
    let k5 = crate::graph::complete(5);
    let c = EdgeColoring::from_fn(&k5, 2, |u, v| usize::from((v - u) % 5 != 1 && (v - u) % 5 != 4));
    (k5, c)
}
