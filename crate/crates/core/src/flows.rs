//! Flows and tensions over `Z₃`, `Z₄` and `F₄`, the Möbius parity criterion
//! for proper colourings, and the tripartition form of the `F₄` criterion.
//!
//! Edge `e = (u, v)` is oriented `u → v`. A flow assigns `x_e` to the arc
//! `u → v`; a tension is `y_e = z_u - z_v` for vertex potentials `z`.
//! Assignments are packed two bits per edge (edge `e` at bits `2e, 2e+1`),
//! so enumeration is limited to `MAX_ENUM_EDGES` edges.

use std::fmt;

use num::{BigInt, One};
use rayon::prelude::*;
use serde::Serialize;

use crate::cyclespace::{dfs_forest, EdgeSubset};
use crate::cyclotomic::{int, Rational, Scalar};
use crate::error::{Error, Result};
use crate::graph::MultiGraph;
use crate::report::Check;

/// Largest span enumerated.
pub const SPAN_MAX: u64 = 100_000_000;
/// Largest span materialized as a list.
pub const SPAN_LIST_MAX: u64 = 1 << 22;
/// Budget for `#y × #flows` in the Möbius searches.
pub const MOBIUS_BUDGET: u64 = 2_000_000_000;

/// Coefficient structure. `F₄` elements are `0, 1, ω = 2, ω̄ = 3` with
/// addition as XOR of the two bits.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Modulus {
    Z3,
    Z4,
    F4,
}

const F4_LOG: [u8; 4] = [0, 0, 1, 2];
const F4_EXP: [u8; 3] = [1, 2, 3];

impl Modulus {
    pub fn order(self) -> u8 {
        match self {
            Modulus::Z3 => 3,
            _ => 4,
        }
    }

    pub fn add(self, a: u8, b: u8) -> u8 {
        match self {
            Modulus::F4 => a ^ b,
            _ => (a + b) % self.order(),
        }
    }

    pub fn neg(self, a: u8) -> u8 {
        match self {
            Modulus::F4 => a,
            _ => (self.order() - a) % self.order(),
        }
    }

    pub fn mul(self, a: u8, b: u8) -> u8 {
        match self {
            Modulus::F4 if a == 0 || b == 0 => 0,
            Modulus::F4 => F4_EXP[((F4_LOG[a as usize] + F4_LOG[b as usize]) % 3) as usize],
            _ => (a * b) % self.order(),
        }
    }

    /// Image of `+1` or `-1`.
    pub fn from_sign(self, positive: bool) -> u8 {
        if positive {
            1
        } else {
            self.neg(1)
        }
    }

    /// Nonzero elements in witness-search order.
    pub fn nonzero(self) -> &'static [u8] {
        match self {
            Modulus::Z3 => &[1, 2],
            _ => &[1, 2, 3],
        }
    }

    pub fn parse(s: &str) -> Result<Modulus> {
        match s.to_ascii_uppercase().as_str() {
            "Z3" | "3" => Ok(Modulus::Z3),
            "Z4" | "4" => Ok(Modulus::Z4),
            "F4" | "GF4" => Ok(Modulus::F4),
            _ => Err(Error::Domain(format!("unknown modulus '{s}' (expected Z3, Z4 or F4)"))),
        }
    }

    pub fn symbol(self, a: u8) -> &'static str {
        match (self, a) {
            (Modulus::F4, 2) => "w",
            (Modulus::F4, 3) => "w2",
            (_, 0) => "0",
            (_, 1) => "1",
            (_, 2) => "2",
            _ => "3",
        }
    }
}

impl fmt::Display for Modulus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Modulus::Z3 => "Z3",
            Modulus::Z4 => "Z4",
            Modulus::F4 => "F4",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QAssignment {
    pub modulus: Modulus,
    pub values: Vec<u8>,
}

impl QAssignment {
    pub fn new(modulus: Modulus, values: Vec<u8>) -> Result<Self> {
        if let Some(v) = values.iter().find(|&&v| v >= modulus.order()) {
            return Err(Error::Domain(format!("value {v} is not an element of {modulus}")));
        }
        Ok(QAssignment { modulus, values })
    }

    /// Parses `"1,w,w2"` or `"1 2 3"`.
    pub fn parse(modulus: Modulus, s: &str) -> Result<Self> {
        let values = s
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| match (modulus, t) {
                (Modulus::F4, "w") => Ok(2),
                (Modulus::F4, "w2") => Ok(3),
                _ => t.parse::<u8>().map_err(|_| Error::Domain(format!("bad entry '{t}'"))),
            })
            .collect::<Result<Vec<u8>>>()?;
        QAssignment::new(modulus, values)
    }

    pub fn weight(&self) -> usize {
        self.values.iter().filter(|&&v| v != 0).count()
    }

    pub fn is_nowhere_zero(&self) -> bool {
        self.values.iter().all(|&v| v != 0)
    }

    /// `self ≤ y`: every entry is `0` or equals `y`'s.
    pub fn leq(&self, y: &QAssignment) -> bool {
        self.values.iter().zip(&y.values).all(|(&a, &b)| a == 0 || a == b)
    }

    pub fn dot(&self, other: &QAssignment) -> u8 {
        let m = self.modulus;
        self.values.iter().zip(&other.values).fold(0, |acc, (&a, &b)| m.add(acc, m.mul(a, b)))
    }

    pub fn packed(&self) -> u64 {
        pack(&self.values)
    }
}

impl fmt::Display for QAssignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<&str> = self.values.iter().map(|&v| self.modulus.symbol(v)).collect();
        write!(f, "({})", parts.join(","))
    }
}

pub fn pack(values: &[u8]) -> u64 {
    values.iter().enumerate().fold(0, |acc, (e, &v)| acc | (u64::from(v) << (2 * e)))
}

pub fn unpack(x: u64, m: usize) -> Vec<u8> {
    (0..m).map(|e| ((x >> (2 * e)) & 3) as u8).collect()
}

/// Two set bits per nonzero entry.
fn support2(x: u64) -> u64 {
    let lo = 0x5555_5555_5555_5555u64;
    let nz = (x | (x >> 1)) & lo;
    nz | (nz << 1)
}

pub(crate) fn weight_packed(x: u64) -> u32 {
    (support2(x) & 0x5555_5555_5555_5555).count_ones()
}

pub(crate) fn add_packed(md: Modulus, a: u64, b: u64, m: usize) -> u64 {
    if md == Modulus::F4 {
        return a ^ b;
    }
    let mut out = 0;
    for e in 0..m {
        let s = md.add(((a >> (2 * e)) & 3) as u8, ((b >> (2 * e)) & 3) as u8);
        out |= u64::from(s) << (2 * e);
    }
    out
}

/// Signed fundamental cycles of a DFS forest, one per non-tree edge.
pub fn flow_basis(g: &MultiGraph, md: Modulus) -> Vec<QAssignment> {
    let forest = dfs_forest(g);
    let m = g.edge_count();
    let mut in_tree = vec![false; m];
    for &e in &forest.tree_edges {
        in_tree[e] = true;
    }
    let up = |v: usize| {
        let pe = forest.parent_edge[v].expect("non-root vertex has a parent edge");
        let (a, b) = g.edge(pe);
        (pe, if a == v { b } else { a })
    };
    let mut out = Vec::new();
    for e in (0..m).filter(|&e| !in_tree[e]) {
        let mut x = vec![0u8; m];
        x[e] = 1;
        // the cycle runs u -> v along e, then back from v to u in the tree
        let (u, v) = g.edge(e);
        let (mut a, mut b) = (v, u);
        while a != b {
            if forest.depth[a] >= forest.depth[b] {
                let (pe, p) = up(a);
                x[pe] = md.from_sign(g.edge(pe).0 == a);
                a = p;
            } else {
                let (pe, p) = up(b);
                x[pe] = md.from_sign(g.edge(pe).0 == p);
                b = p;
            }
        }
        out.push(QAssignment { modulus: md, values: x });
    }
    out
}

/// Vertex stars `y_e = [tail = v] - [head = v]` for every non-root vertex.
pub fn tension_basis(g: &MultiGraph, md: Modulus) -> Vec<QAssignment> {
    let (k, label) = g.component_labels();
    let mut root_taken = vec![false; k];
    let mut out = Vec::new();
    for v in 0..g.vertex_count() {
        if !root_taken[label[v]] {
            root_taken[label[v]] = true;
            continue;
        }
        let values = g
            .edges()
            .iter()
            .map(|&(a, b)| match (a == v, b == v) {
                (true, false) => md.from_sign(true),
                (false, true) => md.from_sign(false),
                _ => 0,
            })
            .collect();
        out.push(QAssignment { modulus: md, values });
    }
    out
}

/// Additive generators with their orders; over `F₄` each basis vector `b`
/// contributes `b` and `ωb`.
fn generators(basis: &[QAssignment], md: Modulus) -> Vec<(u64, u8)> {
    match md {
        Modulus::F4 => basis
            .iter()
            .flat_map(|b| {
                let w: Vec<u8> = b.values.iter().map(|&v| md.mul(2, v)).collect();
                [(pack(&b.values), 2), (pack(&w), 2)]
            })
            .collect(),
        _ => basis.iter().map(|b| (pack(&b.values), md.order())).collect(),
    }
}

fn span_size(basis: &[QAssignment], md: Modulus) -> Option<u64> {
    (md.order() as u64).checked_pow(basis.len() as u32)
}

/// Calls `f` on every element of the span (packed), odometer order.
pub fn for_each_in_span(g: &MultiGraph, basis: &[QAssignment], md: Modulus, mut f: impl FnMut(u64)) -> Result<()> {
    g.ensure_enumerable("span enumeration")?;
    match span_size(basis, md) {
        Some(s) if s <= SPAN_MAX => {}
        _ => return Err(Error::size(format!("span of {} generators over {md}", basis.len()), SPAN_MAX)),
    }
    let gens = generators(basis, md);
    let m = g.edge_count();
    let mut digits = vec![0u8; gens.len()];
    let mut cur = 0u64;
    loop {
        f(cur);
        let mut i = 0;
        loop {
            if i == gens.len() {
                return Ok(());
            }
            // order · generator = 0, so a wrapping digit also just adds it
            cur = add_packed(md, cur, gens[i].0, m);
            digits[i] += 1;
            if digits[i] == gens[i].1 {
                digits[i] = 0;
                i += 1;
            } else {
                break;
            }
        }
    }
}

pub fn span_packed(g: &MultiGraph, basis: &[QAssignment], md: Modulus) -> Result<Vec<u64>> {
    if span_size(basis, md).is_none_or(|s| s > SPAN_LIST_MAX) {
        return Err(Error::size("materialized span", SPAN_LIST_MAX));
    }
    let mut out = Vec::new();
    for_each_in_span(g, basis, md, |x| out.push(x))?;
    Ok(out)
}

pub fn flows_packed(g: &MultiGraph, md: Modulus) -> Result<Vec<u64>> {
    span_packed(g, &flow_basis(g, md), md)
}

pub fn tensions_packed(g: &MultiGraph, md: Modulus) -> Result<Vec<u64>> {
    span_packed(g, &tension_basis(g, md), md)
}

fn count_nz(g: &MultiGraph, basis: &[QAssignment], md: Modulus) -> Result<u64> {
    let full = g.edge_count() as u32;
    let mut count = 0;
    for_each_in_span(g, basis, md, |x| {
        if weight_packed(x) == full {
            count += 1
        }
    })?;
    Ok(count)
}

pub fn count_nowhere_zero_flows(g: &MultiGraph, md: Modulus) -> Result<u64> {
    count_nz(g, &flow_basis(g, md), md)
}

pub fn count_nowhere_zero_tensions(g: &MultiGraph, md: Modulus) -> Result<u64> {
    count_nz(g, &tension_basis(g, md), md)
}

/// Flows with their supports and signs, for repeated `Σ_{x ≤ y} (-1)^{|x|}`.
pub struct MobiusTable {
    md: Modulus,
    m: usize,
    flows: Vec<(u64, u64, i64)>,
}

impl MobiusTable {
    pub fn new(g: &MultiGraph, md: Modulus) -> Result<Self> {
        let flows = flows_packed(g, md)?
            .into_iter()
            .map(|x| (x, support2(x), if weight_packed(x).is_multiple_of(2) { 1 } else { -1 }))
            .collect();
        Ok(MobiusTable { md, m: g.edge_count(), flows })
    }

    pub fn flow_count(&self) -> usize {
        self.flows.len()
    }

    /// `Σ_{x ≤ y, x a flow} (-1)^{|x|}`.
    pub fn sum(&self, y: u64) -> i64 {
        self.flows.iter().filter(|(x, s, _)| (x ^ y) & s == 0).map(|f| f.2).sum()
    }

    /// `#{x ≤ y : x a flow}`.
    pub fn count_below(&self, y: u64) -> u64 {
        self.flows.iter().filter(|(x, s, _)| (x ^ y) & s == 0).count() as u64
    }

    fn nowhere_zero_count(&self) -> u64 {
        (self.md.nonzero().len() as u64).pow(self.m as u32)
    }

    /// The `i`-th nowhere-zero vector, lexicographic with edge 0 most significant.
    pub fn nowhere_zero(&self, mut i: u64) -> u64 {
        let nz = self.md.nonzero();
        let base = nz.len() as u64;
        let mut values = vec![0u8; self.m];
        for e in (0..self.m).rev() {
            values[e] = nz[(i % base) as usize];
            i /= base;
        }
        pack(&values)
    }

    fn check_budget(&self) -> Result<()> {
        let work = self.nowhere_zero_count().saturating_mul(self.flows.len() as u64);
        if work > MOBIUS_BUDGET {
            return Err(Error::size(format!("Möbius search over {work} vector pairs"), MOBIUS_BUDGET));
        }
        Ok(())
    }
}

pub fn mobius_flow_sum(g: &MultiGraph, md: Modulus, y: &QAssignment) -> Result<i64> {
    if y.modulus != md || y.values.len() != g.edge_count() {
        return Err(Error::Precondition(format!("y must be a {md}-vector of length {}", g.edge_count())));
    }
    Ok(MobiusTable::new(g, md)?.sum(y.packed()))
}

/// The lexicographically first nowhere-zero `y` with a nonzero Möbius sum.
pub fn onn_criterion(g: &MultiGraph, md: Modulus) -> Result<Option<QAssignment>> {
    let table = MobiusTable::new(g, md)?;
    table.check_budget()?;
    let hit = (0..table.nowhere_zero_count()).into_par_iter().find_first(|&i| table.sum(table.nowhere_zero(i)) != 0);
    Ok(hit.map(|i| QAssignment { modulus: md, values: unpack(table.nowhere_zero(i), g.edge_count()) }))
}

/// `Σ_{y nowhere-zero} μ1_C(y) = (-1)^{|E|} |C| · #(nowhere-zero tensions)`,
/// with `μ1_C(y) = (-1)^{|E|} Σ_{x ≤ y} (-1)^{|x|}`.
pub fn mobius_aggregate_check(g: &MultiGraph, md: Modulus) -> Result<Check> {
    let table = MobiusTable::new(g, md)?;
    table.check_budget()?;
    let raw: i64 = (0..table.nowhere_zero_count()).into_par_iter().map(|i| table.sum(table.nowhere_zero(i))).sum();
    let sign = if g.edge_count().is_multiple_of(2) { 1 } else { -1 };
    let lhs = sign * raw;
    let rhs = sign * table.flow_count() as i64 * count_nowhere_zero_tensions(g, md)? as i64;
    Ok(Check::integer("mobius aggregate", format!("{md}"), lhs, rhs))
}

/// A partition of the edges into three labelled, possibly empty, parts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tripartition {
    pub x: EdgeSubset,
    pub y: EdgeSubset,
    pub z: EdgeSubset,
}

impl Tripartition {
    pub fn new(x: EdgeSubset, y: EdgeSubset, z: EdgeSubset) -> Result<Self> {
        let m = x.len();
        if y.len() != m || z.len() != m {
            return Err(Error::Precondition("parts must be subsets of the same edge set".into()));
        }
        if x.count() + y.count() + z.count() != m || x.or(&y).or(&z).count() != m {
            return Err(Error::Precondition("X, Y, Z must be disjoint and cover E".into()));
        }
        Ok(Tripartition { x, y, z })
    }

    /// `X → 1`, `Y → ω`, `Z → ω̄`.
    pub fn encode(&self) -> QAssignment {
        let values = (0..self.x.len())
            .map(|e| if self.x.contains(e) { 1 } else if self.y.contains(e) { 2 } else { 3 })
            .collect();
        QAssignment { modulus: Modulus::F4, values }
    }

    pub fn decode(z: &QAssignment) -> Result<Self> {
        let m = z.values.len();
        let part = |v: u8| EdgeSubset::from_edges(m, &(0..m).filter(|&e| z.values[e] == v).collect::<Vec<_>>());
        Tripartition::new(part(1), part(2), part(3))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TripartitionValue {
    /// `P(Σ ∩ Γ) - P(Σ̄ ∩ Γ)`
    #[serde(serialize_with = "crate::report::ser_rational")]
    pub signed: Rational,
    #[serde(serialize_with = "crate::report::ser_rational")]
    pub p_gamma: Rational,
    #[serde(serialize_with = "crate::report::ser_opt_rational")]
    pub bias: Option<Rational>,
}

fn tripart_value(m: usize, signed: i64, count: u64) -> TripartitionValue {
    let denom = Scalar::pow(&int(2), m as u32);
    let signed = Rational::new(BigInt::from(signed), BigInt::one()) / &denom;
    let p_gamma = Rational::from_integer(BigInt::from(count)) / &denom;
    let bias = (count > 0).then(|| &signed / &p_gamma);
    TripartitionValue { signed, p_gamma, bias }
}

/// `A ⊆ X, B ⊆ Y, C ⊆ Z` uniform, `Σ = {|A|+|B|+|C| even}`,
/// `Γ = {A ∪ C, C ∪ B eulerian}`; computed as `2^{-|E|} Σ_{d ≤ z} (-1)^{|d|}`
/// over `F₄`-flows `d`, with `z` the encoded partition.
pub fn tripartition_bias(g: &MultiGraph, part: &Tripartition) -> Result<TripartitionValue> {
    if part.x.len() != g.edge_count() {
        return Err(Error::Precondition("partition length differs from |E|".into()));
    }
    let table = MobiusTable::new(g, Modulus::F4)?;
    let z = part.encode().packed();
    Ok(tripart_value(g.edge_count(), table.sum(z), table.count_below(z)))
}

/// The same quantity by enumerating all `(A, B, C)`.
pub fn tripartition_bias_direct(g: &MultiGraph, part: &Tripartition) -> Result<TripartitionValue> {
    g.ensure_enumerable("tripartition enumeration")?;
    let m = g.edge_count();
    let vm = crate::cyclespace::vertex_masks(g);
    let (x, y, z) = (part.x.to_mask().unwrap_or(0), part.y.to_mask().unwrap_or(0), part.z.to_mask().unwrap_or(0));
    let (mut signed, mut count) = (0i64, 0u64);
    for s in 0u64..(1u64 << m) {
        let (a, b, c) = (s & x, s & y, s & z);
        if crate::cyclespace::is_eulerian_mask(&vm, a | c) && crate::cyclespace::is_eulerian_mask(&vm, c | b) {
            count += 1;
            signed += if s.count_ones() % 2 == 0 { 1 } else { -1 };
        }
    }
    Ok(tripart_value(m, signed, count))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TripartitionScan {
    pub partitions: u64,
    pub nonzero: u64,
    pub first_nonzero: Option<String>,
}

/// Runs over all `3^{|E|}` tripartitions.
pub fn tripartition_scan(g: &MultiGraph) -> Result<TripartitionScan> {
    let table = MobiusTable::new(g, Modulus::F4)?;
    table.check_budget()?;
    let total = table.nowhere_zero_count();
    let nonzero = (0..total).into_par_iter().filter(|&i| table.sum(table.nowhere_zero(i)) != 0).count() as u64;
    let first = (0..total).into_par_iter().find_first(|&i| table.sum(table.nowhere_zero(i)) != 0);
    let first_nonzero = first.map(|i| {
        let z = QAssignment { modulus: Modulus::F4, values: unpack(table.nowhere_zero(i), g.edge_count()) };
        let p = Tripartition::decode(&z).expect("nowhere-zero vectors encode partitions");
        format!("X={} Y={} Z={}", p.x, p.y, p.z)
    });
    Ok(TripartitionScan { partitions: total, nonzero, first_nonzero })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::by_name;
    use crate::tutte::{chromatic_value, flow_value};

    fn g(name: &str) -> MultiGraph {
        by_name(name).unwrap()
    }

    #[test]
    fn f4_arithmetic() {
        let f = Modulus::F4;
        assert_eq!(f.mul(2, 2), 3);
        assert_eq!(f.mul(2, 3), 1);
        assert_eq!(f.mul(3, 3), 2);
        assert_eq!(f.add(2, 3), 1);
        assert_eq!(f.add(1, 2), 3);
    }

    #[test]
    fn bases() {
        let k3 = g("K3");
        let b = flow_basis(&k3, Modulus::Z3);
        assert_eq!(b.len(), 1);
        assert_eq!(b[0].values, vec![1, 1, 1]);
        assert!(flow_basis(&g("path3"), Modulus::Z4).is_empty());
        let lp = flow_basis(&g("loop"), Modulus::Z4);
        assert_eq!(lp[0].values, vec![1]);
        for name in ["K4", "K3+K2", "prism", "C4x2"] {
            let gr = g(name);
            for md in [Modulus::Z3, Modulus::Z4, Modulus::F4] {
                for x in flow_basis(&gr, md) {
                    for y in tension_basis(&gr, md) {
                        assert_eq!(x.dot(&y), 0, "{name} {md}");
                    }
                }
            }
        }
    }

    #[test]
    fn nowhere_zero_counts() {
        assert_eq!(count_nowhere_zero_flows(&g("K3"), Modulus::F4).unwrap(), 3);
        assert_eq!(count_nowhere_zero_tensions(&g("K3"), Modulus::Z4).unwrap(), 6);
        assert_eq!(count_nowhere_zero_tensions(&g("K5"), Modulus::F4).unwrap(), 0);
        for name in ["K4", "C5", "K23", "prism", "loop", "K3+K2"] {
            let gr = g(name);
            let k = gr.rank_profile().k as u32;
            for (md, q) in [(Modulus::Z3, 3), (Modulus::Z4, 4), (Modulus::F4, 4)] {
                assert_eq!(int(count_nowhere_zero_flows(&gr, md).unwrap() as i64), flow_value(&gr, q).unwrap(), "{name} {md}");
                let t = count_nowhere_zero_tensions(&gr, md).unwrap() as i64 * q.pow(k);
                assert_eq!(int(t), chromatic_value(&gr, q).unwrap(), "{name} {md}");
            }
        }
    }

    #[test]
    fn mobius_examples() {
        let k3 = g("K3");
        let y = QAssignment::parse(Modulus::F4, "1,1,1").unwrap();
        assert_eq!(mobius_flow_sum(&k3, Modulus::F4, &y).unwrap(), 0);
        let y = QAssignment::parse(Modulus::F4, "1,w,w2").unwrap();
        assert_eq!(mobius_flow_sum(&k3, Modulus::F4, &y).unwrap(), 1);
        let y = QAssignment::parse(Modulus::Z3, "1,1,1").unwrap();
        assert_eq!(mobius_flow_sum(&k3, Modulus::Z3, &y).unwrap(), 0);
    }

    #[test]
    fn onn_examples() {
        let w = onn_criterion(&g("K3"), Modulus::F4).unwrap().unwrap();
        assert_ne!(w.values, vec![1, 1, 1]);
        assert!(onn_criterion(&g("K3"), Modulus::Z3).unwrap().is_some());
        assert!(onn_criterion(&g("C4"), Modulus::Z4).unwrap().is_some());
    }

    #[test]
    fn aggregate_examples() {
        let c = mobius_aggregate_check(&g("K3"), Modulus::F4).unwrap();
        assert!(c.pass && c.lhs == "-24", "{c}");
        let c = mobius_aggregate_check(&g("loop"), Modulus::Z3).unwrap();
        assert!(c.pass && c.lhs == "0", "{c}");
        let c = mobius_aggregate_check(&g("edge"), Modulus::Z3).unwrap();
        assert!(c.pass && c.lhs == "-2", "{c}");
    }

    #[test]
    fn tripartition_routes_agree() {
        let k3 = g("K3");
        let m = 3;
        for i in 0..27u32 {
            let mut v = Vec::new();
            let mut r = i;
            for _ in 0..m {
                v.push((r % 3) as u8 + 1);
                r /= 3;
            }
            let p = Tripartition::decode(&QAssignment::new(Modulus::F4, v).unwrap()).unwrap();
            assert_eq!(tripartition_bias(&k3, &p).unwrap(), tripartition_bias_direct(&k3, &p).unwrap());
        }
        let all_x = Tripartition::new(EdgeSubset::full(3), EdgeSubset::empty(3), EdgeSubset::empty(3)).unwrap();
        assert_eq!(tripartition_bias(&k3, &all_x).unwrap().signed, int(0));
        assert!(Tripartition::new(EdgeSubset::full(3), EdgeSubset::full(3), EdgeSubset::empty(3)).is_err());
    }
}
