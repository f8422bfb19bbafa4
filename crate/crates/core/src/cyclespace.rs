//! GF(2) edge space: eulerian subgraphs (the cycle space), cutsets (the
//! cocycle space), coset transversals and per-coset weight counts.
//!
//! Enumeration paths work on `u64` masks (bit `e` = edge `e`) and require
//! `|E| <= MAX_ENUM_EDGES`.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{MultiGraph, MAX_ENUM_EDGES};

/// A subset of edges as a bit vector of length `|E|`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EdgeSubset {
    len: usize,
    words: Vec<u64>,
}

impl EdgeSubset {
    pub fn empty(len: usize) -> Self {
        EdgeSubset { len, words: vec![0; len.div_ceil(64)] }
    }

    pub fn full(len: usize) -> Self {
        let mut s = Self::empty(len);
        for e in 0..len {
            s.insert(e);
        }
        s
    }

    pub fn from_edges(len: usize, edges: &[usize]) -> Self {
        let mut s = Self::empty(len);
        for &e in edges {
            s.insert(e);
        }
        s
    }

    pub fn from_mask(len: usize, mask: u64) -> Self {
        assert!(len <= 64 && (len == 64 || mask >> len == 0), "mask wider than edge set");
        let mut s = Self::empty(len);
        if len > 0 {
            s.words[0] = mask;
        }
        s
    }

    /// The subset as a single word; `None` when `|E| > 64`.
    pub fn to_mask(&self) -> Option<u64> {
        match self.words.len() {
            0 => Some(0),
            1 => Some(self.words[0]),
            _ => None,
        }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn contains(&self, e: usize) -> bool {
        self.words[e / 64] >> (e % 64) & 1 == 1
    }

    pub fn insert(&mut self, e: usize) {
        assert!(e < self.len, "edge {e} out of range");
        self.words[e / 64] |= 1 << (e % 64);
    }

    pub fn toggle(&mut self, e: usize) {
        assert!(e < self.len, "edge {e} out of range");
        self.words[e / 64] ^= 1 << (e % 64);
    }

    /// `|A|`.
    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Symmetric difference.
    pub fn xor(&self, other: &EdgeSubset) -> EdgeSubset {
        assert_eq!(self.len, other.len);
        EdgeSubset { len: self.len, words: self.words.iter().zip(&other.words).map(|(a, b)| a ^ b).collect() }
    }

    pub fn and(&self, other: &EdgeSubset) -> EdgeSubset {
        assert_eq!(self.len, other.len);
        EdgeSubset { len: self.len, words: self.words.iter().zip(&other.words).map(|(a, b)| a & b).collect() }
    }

    pub fn or(&self, other: &EdgeSubset) -> EdgeSubset {
        assert_eq!(self.len, other.len);
        EdgeSubset { len: self.len, words: self.words.iter().zip(&other.words).map(|(a, b)| a | b).collect() }
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len).filter(move |&e| self.contains(e))
    }
}

impl fmt::Display for EdgeSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ids: Vec<String> = self.iter().map(|e| e.to_string()).collect();
        write!(f, "{{{}}}", ids.join(","))
    }
}

/// Fundamental-cycle basis of the cycle space from a depth-first spanning forest.
#[derive(Debug, Clone)]
pub struct CycleSpace {
    pub graph: MultiGraph,
    pub basis: Vec<EdgeSubset>,
    pub forest_edges: Vec<usize>,
}

/// DFS spanning forest: per vertex its parent edge, plus visit order.
pub(crate) struct Forest {
    pub(crate) parent_edge: Vec<Option<usize>>,
    pub(crate) depth: Vec<usize>,
    pub(crate) tree_edges: Vec<usize>,
}

fn incidence(g: &MultiGraph) -> Vec<Vec<(usize, usize)>> {
    let mut inc = vec![Vec::new(); g.vertex_count()];
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        if u == v {
            continue;
        }
        inc[u].push((e, v));
        inc[v].push((e, u));
    }
    inc
}

pub(crate) fn dfs_forest(g: &MultiGraph) -> Forest {
    let n = g.vertex_count();
    let inc = incidence(g);
    let mut parent_edge = vec![None; n];
    let mut depth = vec![0; n];
    let mut seen = vec![false; n];
    let mut tree_edges = Vec::new();
    for root in 0..n {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        let mut stack = vec![(root, 0usize)];
        while let Some(&mut (v, ref mut next)) = stack.last_mut() {
            if *next == inc[v].len() {
                stack.pop();
                continue;
            }
            let (e, w) = inc[v][*next];
            *next += 1;
            if !seen[w] {
                seen[w] = true;
                parent_edge[w] = Some(e);
                depth[w] = depth[v] + 1;
                tree_edges.push(e);
                stack.push((w, 0));
            }
        }
    }
    tree_edges.sort_unstable();
    Forest { parent_edge, depth, tree_edges }
}

pub fn cycle_basis(g: &MultiGraph) -> CycleSpace {
    let forest = dfs_forest(g);
    let m = g.edge_count();
    let mut in_forest = vec![false; m];
    for &e in &forest.tree_edges {
        in_forest[e] = true;
    }
    let other_end = |e: usize, v: usize| {
        let (a, b) = g.edge(e);
        if a == v {
            b
        } else {
            a
        }
    };
    let mut basis = Vec::new();
    for e in 0..m {
        if in_forest[e] {
            continue;
        }
        let mut cyc = EdgeSubset::empty(m);
        cyc.insert(e);
        let (mut a, mut b) = g.edge(e);
        while a != b {
            if forest.depth[a] < forest.depth[b] {
                std::mem::swap(&mut a, &mut b);
            }
            let pe = forest.parent_edge[a].expect("non-root vertex has a parent edge");
            cyc.toggle(pe);
            a = other_end(pe, a);
        }
        basis.push(cyc);
    }
    CycleSpace { graph: g.clone(), basis, forest_edges: forest.tree_edges }
}

/// Stars of every non-root vertex of each component; loops cancel out of stars.
pub fn cocycle_basis(g: &MultiGraph) -> Vec<EdgeSubset> {
    let (k, label) = g.component_labels();
    let mut root_taken = vec![false; k];
    let mut out = Vec::new();
    for v in 0..g.vertex_count() {
        if !root_taken[label[v]] {
            root_taken[label[v]] = true;
            continue;
        }
        let mut star = EdgeSubset::empty(g.edge_count());
        for (e, &(a, b)) in g.edges().iter().enumerate() {
            if a != b && (a == v || b == v) {
                star.toggle(e);
            }
        }
        out.push(star);
    }
    out
}

/// Every vertex of `(V, A)` has even degree.
pub fn is_eulerian(g: &MultiGraph, a: &EdgeSubset) -> bool {
    let mut parity = vec![false; g.vertex_count()];
    for e in a.iter() {
        let (u, v) = g.edge(e);
        parity[u] ^= true;
        parity[v] ^= true;
    }
    parity.iter().all(|p| !p)
}

/// Per-vertex incidence masks (loops omitted) for fast eulerian tests on masks.
pub fn vertex_masks(g: &MultiGraph) -> Vec<u64> {
    let mut masks = vec![0u64; g.vertex_count()];
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        if u != v {
            masks[u] |= 1 << e;
            masks[v] |= 1 << e;
        }
    }
    masks
}

pub fn is_eulerian_mask(vmasks: &[u64], a: u64) -> bool {
    vmasks.iter().all(|&m| (m & a).count_ones().is_multiple_of(2))
}

/// Rank over GF(2) of a list of subsets of equal length.
pub fn gf2_rank(rows: &[EdgeSubset]) -> usize {
    let mut basis: Vec<EdgeSubset> = Vec::new();
    let mut pivots: Vec<usize> = Vec::new();
    for row in rows {
        let mut r = row.clone();
        for (b, &p) in basis.iter().zip(&pivots) {
            if r.contains(p) {
                r = r.xor(b);
            }
        }
        let first = r.iter().next();
        if let Some(p) = first {
            // keep the reduced basis so later rows reduce against every pivot
            for (b, _) in basis.iter_mut().zip(&pivots) {
                if b.contains(p) {
                    *b = b.xor(&r);
                }
            }
            basis.push(r);
            pivots.push(p);
        }
    }
    basis.len()
}

/// `dim(C ∩ C⊥) = |E| - rank(cycle basis ∪ cocycle basis)`.
pub fn bicycle_dimension(g: &MultiGraph) -> usize {
    let cs = cycle_basis(g);
    let mut rows = cs.basis.clone();
    rows.extend(cocycle_basis(g));
    g.edge_count() - gf2_rank(&rows)
}

impl CycleSpace {
    pub fn nullity(&self) -> usize {
        self.basis.len()
    }

    pub fn rank(&self) -> usize {
        self.forest_edges.len()
    }

    pub fn edge_count(&self) -> usize {
        self.graph.edge_count()
    }

    fn ensure(&self, what: &str) -> Result<()> {
        self.graph.ensure_enumerable(what)
    }

    /// Basis as masks; requires `|E| <= MAX_ENUM_EDGES`.
    pub fn basis_masks(&self) -> Result<Vec<u64>> {
        self.ensure("cycle-space enumeration")?;
        Ok(self.basis.iter().map(|b| b.to_mask().expect("|E| bounded")).collect())
    }

    /// Calls `f` on every element of `C + z` in Gray-code order.
    pub fn for_each_in_coset(&self, z: u64, mut f: impl FnMut(u64)) -> Result<()> {
        let basis = self.basis_masks()?;
        let mut x = z;
        f(x);
        for i in 1u64..(1u64 << basis.len()) {
            x ^= basis[i.trailing_zeros() as usize];
            f(x);
        }
        Ok(())
    }

    /// All eulerian subgraphs as masks, in Gray-code order.
    pub fn elements(&self) -> Result<Vec<u64>> {
        let mut out = Vec::with_capacity(1 << self.nullity());
        self.for_each_in_coset(0, |x| out.push(x))?;
        Ok(out)
    }

    /// The `i`-th transversal representative: bit `j` of `i` selects forest edge `j`.
    pub fn transversal_element(&self, i: u64) -> u64 {
        let mut z = 0u64;
        for (j, &e) in self.forest_edges.iter().enumerate() {
            if i >> j & 1 == 1 {
                z |= 1 << e;
            }
        }
        z
    }

    /// Subsets of the forest edges in Gray-code order, one per coset.
    pub fn coset_transversal(&self) -> Result<Vec<EdgeSubset>> {
        self.ensure("coset transversal")?;
        let m = self.edge_count();
        let mut out = Vec::with_capacity(1 << self.rank());
        let mut z = 0u64;
        out.push(EdgeSubset::from_mask(m, z));
        for i in 1u64..(1u64 << self.rank()) {
            z ^= 1 << self.forest_edges[i.trailing_zeros() as usize];
            out.push(EdgeSubset::from_mask(m, z));
        }
        Ok(out)
    }

    /// Histogram `h[d] = #{x in C + z : |E| - |x| = d}`.
    pub fn coset_histogram(&self, z: u64) -> Result<Vec<u64>> {
        let m = self.edge_count();
        let mut h = vec![0u64; m + 1];
        self.for_each_in_coset(z, |x| h[m - x.count_ones() as usize] += 1)?;
        Ok(h)
    }

    /// `p_l = #{x in C + z : |E| - |x| ≡ l (mod q)}`.
    pub fn weight_class_counts(&self, z: &EdgeSubset, q: usize) -> Result<Vec<u64>> {
        check_modulus(q)?;
        let z = z.to_mask().ok_or_else(|| Error::size("edge subset wider than 64", 64))?;
        Ok(fold_mod(&self.coset_histogram(z)?, q))
    }

    /// Distinct coset histograms with the number of cosets sharing each,
    /// in sorted order. Covers all `2^r` cosets.
    pub fn coset_histogram_classes(&self) -> Result<Vec<(Vec<u64>, u64)>> {
        self.ensure("coset enumeration")?;
        let basis = self.basis_masks()?;
        let m = self.edge_count();
        let r = self.rank();
        let classes = (0u64..1 << r)
            .into_par_iter()
            .fold(BTreeMap::new, |mut acc: BTreeMap<Vec<u64>, u64>, i| {
                let mut h = vec![0u64; m + 1];
                let mut x = self.transversal_element(i);
                h[m - x.count_ones() as usize] += 1;
                for j in 1u64..(1u64 << basis.len()) {
                    x ^= basis[j.trailing_zeros() as usize];
                    h[m - x.count_ones() as usize] += 1;
                }
                *acc.entry(h).or_insert(0) += 1;
                acc
            })
            .reduce(BTreeMap::new, |mut a, b| {
                for (k, v) in b {
                    *a.entry(k).or_insert(0) += v;
                }
                a
            });
        Ok(classes.into_iter().collect())
    }
}

/// Reduces a zero-count histogram to residues mod `q`.
pub fn fold_mod(h: &[u64], q: usize) -> Vec<u64> {
    let mut p = vec![0u64; q];
    for (d, &c) in h.iter().enumerate() {
        p[d % q] += c;
    }
    p
}

pub(crate) fn check_modulus(q: usize) -> Result<()> {
    if matches!(q, 2 | 3 | 4 | 6) {
        Ok(())
    } else {
        Err(Error::Domain(format!("modulus {q} not in {{2,3,4,6}}")))
    }
}

pub fn cycle_space_checked(g: &MultiGraph) -> Result<CycleSpace> {
    if g.edge_count() > MAX_ENUM_EDGES {
        return Err(Error::size(format!("graph has {} edges", g.edge_count()), MAX_ENUM_EDGES as u64));
    }
    Ok(cycle_basis(g))
}
