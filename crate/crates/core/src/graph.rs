//! Multigraphs with stable edge identifiers.
//!
//! Vertices are `0..vertex_count`, edges are `(tail, head)` pairs and an edge's
//! identifier is its position in the edge list. Loops and parallel edges are
//! allowed everywhere. The tail-to-head direction of each edge is the ground
//! orientation used by every flow and tension computation in this crate.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest edge count accepted by the exhaustive enumeration paths.
pub const MAX_ENUM_EDGES: usize = 24;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MultiGraph {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
}

/// Component count `k`, rank `r = |V| - k` and nullity `n = |E| - r`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct RankProfile {
    pub k: usize,
    pub r: usize,
    pub n: usize,
}

#[derive(Serialize, Deserialize)]
struct JsonGraph {
    edges: Vec<[usize; 2]>,
    n: usize,
}

impl MultiGraph {
    pub fn new(vertex_count: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        for (id, &(u, v)) in edges.iter().enumerate() {
            if u >= vertex_count || v >= vertex_count {
                return Err(Error::Precondition(format!(
                    "edge {id} = ({u},{v}) has an endpoint >= vertex count {vertex_count}"
                )));
            }
        }
        Ok(MultiGraph { vertex_count, edges })
    }

    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        MultiGraph { vertex_count: n, edges: Vec::new() }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge(&self, e: usize) -> (usize, usize) {
        self.edges[e]
    }

    pub fn is_loop(&self, e: usize) -> bool {
        let (u, v) = self.edges[e];
        u == v
    }

    pub fn loop_count(&self) -> usize {
        self.edges.iter().filter(|(u, v)| u == v).count()
    }

    /// Degree of every vertex; a loop adds 2 to its vertex.
    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.vertex_count];
        for &(u, v) in &self.edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        deg
    }

    pub fn is_regular(&self, d: usize) -> bool {
        self.degrees().iter().all(|&x| x == d)
    }

    /// All vertex degrees even.
    pub fn is_eulerian(&self) -> bool {
        self.degrees().iter().all(|d| d % 2 == 0)
    }

    /// Component label per vertex, labels numbered by first appearance.
    pub fn component_labels(&self) -> (usize, Vec<usize>) {
        let mut dsu = Dsu::new(self.vertex_count);
        for &(u, v) in &self.edges {
            dsu.union(u, v);
        }
        let mut label = vec![usize::MAX; self.vertex_count];
        let mut root_label = vec![usize::MAX; self.vertex_count];
        let mut k = 0;
        for v in 0..self.vertex_count {
            let root = dsu.find(v);
            if root_label[root] == usize::MAX {
                root_label[root] = k;
                k += 1;
            }
            label[v] = root_label[root];
        }
        (k, label)
    }

    pub fn rank_profile(&self) -> RankProfile {
        let (k, _) = self.component_labels();
        let r = self.vertex_count - k;
        RankProfile { k, r, n: self.edges.len() - r }
    }

    /// `G \ e`: removes exactly edge `e`; later edge ids shift down by one.
    pub fn delete(&self, e: usize) -> Result<MultiGraph> {
        self.check_edge(e)?;
        let mut edges = self.edges.clone();
        edges.remove(e);
        Ok(MultiGraph { vertex_count: self.vertex_count, edges })
    }

    /// `G / e` for a non-loop `e`: the head is merged into the tail and vertices
    /// above the head shift down. Returns the contracted graph together with
    /// the old-to-new edge id map (`None` for `e` itself).
    pub fn contract(&self, e: usize) -> Result<(MultiGraph, Vec<Option<usize>>)> {
        self.check_edge(e)?;
        let (u, v) = self.edges[e];
        if u == v {
            return Err(Error::Precondition(format!("cannot contract loop {e}")));
        }
        let remap = |w: usize| -> usize {
            let w = if w == v { u } else { w };
            if w > v {
                w - 1
            } else {
                w
            }
        };
        let mut edges = Vec::with_capacity(self.edges.len() - 1);
        let mut map = Vec::with_capacity(self.edges.len());
        for (id, &(a, b)) in self.edges.iter().enumerate() {
            if id == e {
                map.push(None);
            } else {
                map.push(Some(edges.len()));
                edges.push((remap(a), remap(b)));
            }
        }
        Ok((MultiGraph { vertex_count: self.vertex_count - 1, edges }, map))
    }

    /// Inserts `edge` at position `at`, shifting later ids up.
    pub fn insert_edge(&self, at: usize, edge: (usize, usize)) -> Result<MultiGraph> {
        if at > self.edges.len() {
            return Err(Error::Precondition(format!("insert position {at} out of range")));
        }
        let mut edges = self.edges.clone();
        edges.insert(at, edge);
        MultiGraph::new(self.vertex_count, edges)
    }

    /// Vertex-disjoint union; `other`'s vertices and edges come after `self`'s.
    pub fn disjoint_union(&self, other: &MultiGraph) -> MultiGraph {
        let shift = self.vertex_count;
        let mut edges = self.edges.clone();
        edges.extend(other.edges.iter().map(|&(a, b)| (a + shift, b + shift)));
        MultiGraph { vertex_count: self.vertex_count + other.vertex_count, edges }
    }

    /// Refuses graphs too large for exhaustive enumeration.
    pub fn ensure_enumerable(&self, what: &str) -> Result<()> {
        if self.edges.len() > MAX_ENUM_EDGES {
            return Err(Error::size(
                format!("{what}: graph has {} edges", self.edges.len()),
                MAX_ENUM_EDGES as u64,
            ));
        }
        Ok(())
    }

    fn check_edge(&self, e: usize) -> Result<()> {
        if e >= self.edges.len() {
            return Err(Error::Precondition(format!(
                "edge id {e} out of range (|E| = {})",
                self.edges.len()
            )));
        }
        Ok(())
    }

    /// Compact JSON `{"edges":[[u,v],...],"n":N}` with keys in sorted order.
    pub fn to_json(&self) -> String {
        let g = JsonGraph {
            edges: self.edges.iter().map(|&(a, b)| [a, b]).collect(),
            n: self.vertex_count,
        };
        serde_json::to_string(&g).expect("graph serialization cannot fail")
    }

    pub fn from_json(text: &str) -> Result<MultiGraph> {
        let g: JsonGraph = serde_json::from_str(text).map_err(|e| Error::parse(e.line(), e.to_string()))?;
        MultiGraph::new(g.n, g.edges.into_iter().map(|[a, b]| (a, b)).collect())
    }

    /// Accepts either the JSON form or the edge-list text form.
    pub fn parse_auto(text: &str) -> Result<MultiGraph> {
        if text.trim_start().starts_with('{') {
            MultiGraph::from_json(text)
        } else {
            parse_edge_list(text)
        }
    }

    /// Edge-list text form, the inverse of [`parse_edge_list`].
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{} {}\n", self.vertex_count, self.edges.len());
        for &(u, v) in &self.edges {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }
}

/// Parses `"n m"` followed by `m` lines `"u v"` (0-based). Blank lines are skipped.
pub fn parse_edge_list(text: &str) -> Result<MultiGraph> {
    let lines: Vec<&str> = text.lines().collect();
    let (graph, next) = parse_edge_list_prefix(&lines)?;
    if let Some(i) = (next..lines.len()).find(|&i| !lines[i].trim().is_empty()) {
        return Err(Error::parse(i + 1, "edge count mismatch: more edge lines than declared"));
    }
    Ok(graph)
}

/// Parses the edge-list header and edges from the start of `lines`, returning
/// the graph and the index of the first unconsumed line.
pub(crate) fn parse_edge_list_prefix(lines: &[&str]) -> Result<(MultiGraph, usize)> {
    let mut i = 0;
    let next_content = |i: &mut usize| -> Option<(usize, &str)> {
        while *i < lines.len() {
            let line = lines[*i].trim();
            *i += 1;
            if !line.is_empty() {
                return Some((*i, line));
            }
        }
        None
    };
    let (hline, header) = next_content(&mut i).ok_or_else(|| Error::parse(1, "missing header \"n m\""))?;
    let [n, m] = parse_pair(header, hline)?;
    let mut edges = Vec::with_capacity(m);
    for _ in 0..m {
        let (lno, line) = next_content(&mut i).ok_or_else(|| {
            Error::parse(lines.len().max(1), format!("edge count mismatch: expected {m} edges, found {}", edges.len()))
        })?;
        let [u, v] = parse_pair(line, lno)?;
        if u >= n || v >= n {
            return Err(Error::parse(lno, format!("vertex index out of range in \"{line}\" (n = {n})")));
        }
        edges.push((u, v));
    }
    Ok((MultiGraph { vertex_count: n, edges }, i))
}

fn parse_pair(line: &str, lno: usize) -> Result<[usize; 2]> {
    let fields: Vec<&str> = line.split_whitespace().collect();
    if fields.len() != 2 {
        return Err(Error::parse(lno, format!("expected two integers, got \"{line}\"")));
    }
    let parse = |s: &str| s.parse::<usize>().map_err(|_| Error::parse(lno, format!("not a non-negative integer: \"{s}\"")));
    Ok([parse(fields[0])?, parse(fields[1])?])
}

/// Union-find with path halving.
#[derive(Debug, Clone)]
pub(crate) struct Dsu {
    parent: Vec<usize>,
}

impl Dsu {
    pub(crate) fn new(n: usize) -> Self {
        Dsu { parent: (0..n).collect() }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns false when `a` and `b` were already joined.
    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[rb] = ra;
        true
    }
}
