//! Eulerian orientations of 4-regular graphs through `F₃`-flows.
//!
//! A vector `x ∈ F₃^E` in the frame of an orientation `γ` directs `e` along
//! `γ` when `x_e = 1`, against it when `x_e = -1`, and leaves it undirected
//! when `x_e = 0`. Nowhere-zero flows are exactly the eulerian orientations.

use std::collections::HashMap;
use std::fmt;

use num::{BigInt, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::cyclespace::dfs_forest;
use crate::cyclotomic::{int, Rational, Scalar};
use crate::error::{Error, Result};
use crate::flows::{add_packed, flow_basis, for_each_in_span, pack, weight_packed, Modulus};
use crate::graph::MultiGraph;
use crate::report::{ser_opt_rational, ser_rational, Check};
use crate::tutte::Tutte;

/// Largest `3^{|E|}` for the coset route.
pub const COSET_ROUTE_MAX: u64 = 3u64.pow(16);
/// Largest edge count for the syndrome route (`2^{|E|}` orientations).
pub const SYNDROME_MAX_EDGES: usize = 26;
/// Largest edge count for the direct route over `4^{|E|}` orientation pairs.
pub const DIRECT_MAX_EDGES: usize = 13;

const LO: u64 = 0x5555_5555_5555_5555;

/// Signs `±1` per edge relative to the edge-list orientation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Orientation {
    signs: Vec<i8>,
}

impl Orientation {
    pub fn new(signs: Vec<i8>) -> Result<Self> {
        if signs.iter().any(|&s| s != 1 && s != -1) {
            return Err(Error::Domain("orientation signs must be +1 or -1".into()));
        }
        Ok(Orientation { signs })
    }

    pub fn ground(m: usize) -> Self {
        Orientation { signs: vec![1; m] }
    }

    /// A string of `+` and `-`, one per edge.
    pub fn parse(s: &str) -> Result<Self> {
        let signs = s
            .trim()
            .chars()
            .map(|c| match c {
                '+' => Ok(1),
                '-' => Ok(-1),
                _ => Err(Error::Domain(format!("orientation must be a string of '+' and '-', found '{c}'"))),
            })
            .collect::<Result<Vec<i8>>>()?;
        Orientation::new(signs)
    }

    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    pub fn len(&self) -> usize {
        self.signs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.signs.is_empty()
    }
}

impl fmt::Display for Orientation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &s in &self.signs {
            f.write_str(if s > 0 { "+" } else { "-" })?;
        }
        Ok(())
    }
}

fn require_four_regular(g: &MultiGraph) -> Result<()> {
    if g.edge_count() == 0 || !g.is_regular(4) {
        return Err(Error::Precondition("graph must be 4-regular".into()));
    }
    g.ensure_enumerable("F3 flow enumeration")
}

/// Number of `-1` entries of a packed `Z₃` vector.
fn minus_ones(x: u64) -> u32 {
    ((x >> 1) & !x & LO).count_ones()
}

fn parity_sign(k: u32) -> i64 {
    if k.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct PenroseReport {
    /// `F(G;3)` counted by enumeration.
    pub eulerian_orientations: u64,
    /// `Σ (-1)^{#(x_e = 1)}` over nowhere-zero flows in γ's frame.
    pub signed_sum: i64,
    #[serde(serialize_with = "ser_rational")]
    pub bias: Rational,
    /// `P(G;3)/F(G;3)`, present only for a plane medial graph with its γ.
    #[serde(serialize_with = "ser_opt_rational")]
    pub expected: Option<Rational>,
    pub checks: Vec<Check>,
}

/// `Bias(Σ | Γ)` for one uniformly random orientation, `Σ` = agreement with
/// `gamma` on an even number of edges, `Γ` = eulerian.
pub fn penrose_bias(g: &MultiGraph, gamma: &Orientation) -> Result<Rational> {
    let (count, signed) = penrose_sums(g, gamma)?;
    if count == 0 {
        return Err(Error::Domain("F(G;3) = 0: no eulerian orientation".into()));
    }
    Ok(rat_of(signed, count))
}

fn rat_of(num: i64, den: u64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

fn penrose_sums(g: &MultiGraph, gamma: &Orientation) -> Result<(u64, i64)> {
    require_four_regular(g)?;
    if gamma.len() != g.edge_count() {
        return Err(Error::Precondition(format!("orientation has {} signs for {} edges", gamma.len(), g.edge_count())));
    }
    let m = g.edge_count() as u32;
    // flipping the edges where γ reverses the ground orientation
    let flip = pack(&gamma.signs.iter().map(|&s| if s < 0 { 3 } else { 0 }).collect::<Vec<_>>());
    let (mut count, mut signed) = (0u64, 0i64);
    for_each_in_span(g, &flow_basis(g, Modulus::Z3), Modulus::Z3, |x| {
        if weight_packed(x) == m {
            let agree = m - minus_ones(x ^ flip);
            count += 1;
            signed += parity_sign(agree);
        }
    })?;
    Ok((count, signed))
}

/// Bias with `F(G;3)` cross-checked against the Tutte polynomial, and the
/// equality with `P(G;3)/F(G;3)` asserted when `plane_medial` is set.
pub fn penrose_report(g: &MultiGraph, gamma: &Orientation, plane_medial: bool) -> Result<PenroseReport> {
    let (count, signed) = penrose_sums(g, gamma)?;
    if count == 0 {
        return Err(Error::Domain("F(G;3) = 0: no eulerian orientation".into()));
    }
    let bias = rat_of(signed, count);
    let tutte = Tutte::of(g);
    let f3 = tutte.flow(3)?;
    let mut checks = vec![Check::rational("eulerian orientations = F(G;3)", "", &int(count as i64), &f3)];
    let expected = if plane_medial {
        let e = tutte.chromatic(3)? / &f3;
        checks.push(Check::rational("penrose bias = P(G;3)/F(G;3)", "", &bias, &e));
        Some(e)
    } else {
        None
    };
    Ok(PenroseReport { eulerian_orientations: count, signed_sum: signed, bias, expected, checks })
}

/// Coset sums `Σ_z N_z²` and `Σ_z S_z²`, where `N_z` counts nowhere-zero
/// vectors of `C₃ + z` and `S_z` is their signed count `Σ (-1)^{#(x_e = -1)}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CosetSums {
    pub count_squares: u64,
    pub signed_squares: u64,
}

/// How coset representatives are chosen.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Transversal {
    /// Vectors supported on spanning-forest edges.
    Forest,
    /// The forest representatives, each shifted by a flow depending on it.
    Shifted,
}

fn coset_sums_by_transversal(g: &MultiGraph, transversal: Transversal) -> Result<CosetSums> {
    let m = g.edge_count();
    if 3u64.checked_pow(m as u32).is_none_or(|w| w > COSET_ROUTE_MAX) {
        return Err(Error::size("coset route 3^|E|", COSET_ROUTE_MAX));
    }
    let basis = flow_basis(g, Modulus::Z3);
    let mut flows = Vec::new();
    for_each_in_span(g, &basis, Modulus::Z3, |x| flows.push(x))?;
    let tree = dfs_forest(g).tree_edges;
    let reps = 3u64.pow(tree.len() as u32);
    let shift = basis.first().map(|b| b.packed());
    let (count_squares, signed_squares) = (0..reps)
        .into_par_iter()
        .map(|mut i| {
            let mut z = 0u64;
            let mut digit_sum = 0u64;
            for &e in &tree {
                z |= (i % 3) << (2 * e);
                digit_sum += i % 3;
                i /= 3;
            }
            if let (Transversal::Shifted, Some(b)) = (transversal, shift) {
                for _ in 0..digit_sum % 3 {
                    z = add_packed(Modulus::Z3, z, b, m);
                }
            }
            let (mut n, mut s) = (0i64, 0i64);
            for &c in &flows {
                let x = add_packed(Modulus::Z3, z, c, m);
                if weight_packed(x) == m as u32 {
                    n += 1;
                    s += parity_sign(minus_ones(x));
                }
            }
            ((n * n) as u64, (s * s) as u64)
        })
        .reduce(|| (0, 0), |a, b| (a.0 + b.0, a.1 + b.1));
    Ok(CosetSums { count_squares, signed_squares })
}

/// Coset sums with nowhere-zero vectors bucketed by their boundary in `F₃^V`.
fn coset_sums_by_syndrome(g: &MultiGraph) -> Result<CosetSums> {
    let m = g.edge_count();
    if m > SYNDROME_MAX_EDGES {
        return Err(Error::size("syndrome route edge count", SYNDROME_MAX_EDGES as u64));
    }
    let n = g.vertex_count();
    let mut buckets: HashMap<Vec<u8>, (i64, i64)> = HashMap::new();
    for signs in 0u64..(1 << m) {
        let mut boundary = vec![0u8; n];
        let mut negatives = 0;
        for (e, &(u, v)) in g.edges().iter().enumerate() {
            // x_e = 1 when the bit is set, else -1 ≡ 2
            let x = if signs >> e & 1 == 1 { 1 } else { 2 };
            negatives += u32::from(x == 2);
            boundary[u] = (boundary[u] + x) % 3;
            boundary[v] = (boundary[v] + 3 - x) % 3;
        }
        let slot = buckets.entry(boundary).or_default();
        slot.0 += 1;
        slot.1 += parity_sign(negatives);
    }
    let count_squares = buckets.values().map(|&(c, _)| (c * c) as u64).sum();
    let signed_squares = buckets.values().map(|&(_, s)| (s * s) as u64).sum();
    Ok(CosetSums { count_squares, signed_squares })
}

/// Tallies over all `4^{|E|}` orientation pairs, read from the definitions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DirectPairCounts {
    /// Pairs whose agreement set satisfies the `F₃`-flow condition at every vertex.
    pub gamma_f3: u64,
    /// `#(Σ ∩ Γ) - #(Σ̄ ∩ Γ)` for that reading of `Γ`.
    pub signed_f3: i64,
    /// Pairs whose agreement set has in-degree equal to out-degree everywhere.
    pub gamma_balanced: u64,
    pub signed_balanced: i64,
    /// Pairs violating "`|α+γ| ≡ |β+γ|` iff `|α+β|` even" (zero when `|E|` is even).
    pub parity_remark_failures: u64,
}

fn direct_pair_counts(g: &MultiGraph) -> Result<DirectPairCounts> {
    let m = g.edge_count();
    if m > DIRECT_MAX_EDGES {
        return Err(Error::size("direct pair route edge count", DIRECT_MAX_EDGES as u64));
    }
    let full = (1u64 << m) - 1;
    let n = g.vertex_count();
    let mut tail = vec![0u64; n];
    let mut head = vec![0u64; n];
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        tail[u] |= 1 << e;
        head[v] |= 1 << e;
    }
    // bit e of an orientation is set when it agrees with the edge-list direction
    let zero = DirectPairCounts { gamma_f3: 0, signed_f3: 0, gamma_balanced: 0, signed_balanced: 0, parity_remark_failures: 0 };
    let merge = |a: DirectPairCounts, b: DirectPairCounts| DirectPairCounts {
        gamma_f3: a.gamma_f3 + b.gamma_f3,
        signed_f3: a.signed_f3 + b.signed_f3,
        gamma_balanced: a.gamma_balanced + b.gamma_balanced,
        signed_balanced: a.signed_balanced + b.signed_balanced,
        parity_remark_failures: a.parity_remark_failures + b.parity_remark_failures,
    };
    let counts = (0..=full)
        .into_par_iter()
        .map(|alpha| {
            let mut acc = zero;
            for beta in 0..=full {
                let agree = !(alpha ^ beta) & full;
                let (mut f3, mut balanced) = (true, true);
                for v in 0..n {
                    let fwd = agree & alpha;
                    let rev = agree & !alpha;
                    let out = (fwd & tail[v]).count_ones() + (rev & head[v]).count_ones();
                    let inn = (fwd & head[v]).count_ones() + (rev & tail[v]).count_ones();
                    balanced &= out == inn;
                    f3 &= (out as i64 - inn as i64).rem_euclid(3) == 0;
                }
                let sigma = agree.count_ones().is_multiple_of(2);
                let s = if sigma { 1 } else { -1 };
                if f3 {
                    acc.gamma_f3 += 1;
                    acc.signed_f3 += s;
                }
                if balanced {
                    acc.gamma_balanced += 1;
                    acc.signed_balanced += s;
                }
                let same_parity = alpha.count_ones() % 2 == beta.count_ones() % 2;
                if same_parity != sigma {
                    acc.parity_remark_failures += 1;
                }
            }
            acc
        })
        .reduce(|| zero, merge);
    Ok(counts)
}

#[derive(Debug, Clone, Serialize)]
pub struct PairStats {
    /// `P(Γ)` from the coset route.
    #[serde(serialize_with = "ser_rational")]
    pub p_gamma: Rational,
    /// `Bias(Σ | Γ)` from the coset route.
    #[serde(serialize_with = "ser_rational")]
    pub bias: Rational,
    #[serde(serialize_with = "ser_rational")]
    pub p_gamma_tutte: Rational,
    #[serde(serialize_with = "ser_rational")]
    pub bias_tutte: Rational,
    pub cosets: CosetSums,
    pub direct: Option<DirectPairCounts>,
    /// `P(Γ)` when `Γ` demands in-degree = out-degree rather than the `F₃` condition.
    #[serde(serialize_with = "ser_opt_rational")]
    pub p_gamma_balanced: Option<Rational>,
    pub checks: Vec<Check>,
}

/// `P(Γ)` and `Bias(Σ | Γ)` for two independent uniform orientations, with
/// `Σ = {|α+β| even}` and `Γ = {α+β eulerian}`.
pub fn orientation_pair_stats(g: &MultiGraph) -> Result<PairStats> {
    require_four_regular(g)?;
    let m = g.edge_count();
    let v = g.vertex_count();
    let cosets = coset_sums_by_transversal(g, Transversal::Forest)?;
    let four_m = Scalar::pow(&int(4), m as u32);
    let p_gamma = int(cosets.count_squares as i64) / &four_m;
    if cosets.count_squares == 0 {
        return Err(Error::Internal("no pair of orientations satisfies Γ".into()));
    }
    let bias = rat_of(cosets.signed_squares as i64, cosets.count_squares);

    let tutte = Tutte::of(g);
    let t24 = tutte.eval(&int(2), &int(4));
    if t24.is_zero() {
        return Err(Error::Internal("T(G;2,4) = 0".into()));
    }
    let p_gamma_tutte = &t24 / &four_m;
    let bias_tutte = Scalar::pow(&int(3), (m - v) as u32) * tutte.chromatic(3)? / &t24;

    let mut checks = vec![
        Check::rational("P(Γ) = 4^-|E| T(G;2,4)", "coset route", &p_gamma, &p_gamma_tutte),
        Check::rational("Bias(Σ|Γ) = 3^(|E|-|V|) P(G;3)/T(G;2,4)", "coset route", &bias, &bias_tutte),
    ];
    let shifted = coset_sums_by_transversal(g, Transversal::Shifted)?;
    checks.push(Check::holds("transversal invariance", "forest vs shifted", shifted == cosets));
    if m <= SYNDROME_MAX_EDGES {
        let syn = coset_sums_by_syndrome(g)?;
        checks.push(Check::holds("syndrome route = coset route", "", syn == cosets));
    }
    let (direct, p_gamma_balanced) = if m <= DIRECT_MAX_EDGES {
        let d = direct_pair_counts(g)?;
        checks.push(Check::integer("direct pairs: #Γ", "F3 condition", d.gamma_f3, cosets.count_squares));
        checks.push(Check::integer(
            "direct pairs: #(Σ∩Γ) - #(Σ̄∩Γ)",
            "F3 condition",
            d.signed_f3,
            cosets.signed_squares as i64,
        ));
        checks.push(Check::integer("parity remark", "violations", d.parity_remark_failures, 0));
        (Some(d), Some(int(d.gamma_balanced as i64) / &four_m))
    } else {
        (None, None)
    };
    Ok(PairStats { p_gamma, bias, p_gamma_tutte, bias_tutte, cosets, direct, p_gamma_balanced, checks })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::{by_name, plane_coordinates};
    use crate::embedding::{medial, RotationSystem};
    use crate::report::all_pass;

    #[test]
    fn penrose_on_plane_medials() {
        for name in ["K4", "prism"] {
            let h = by_name(name).unwrap();
            let rot = RotationSystem::from_coordinates(&h, &plane_coordinates(name).unwrap()).unwrap();
            let md = medial(&h, &rot).unwrap();
            let r = penrose_report(&md.graph, &md.gamma, md.plane).unwrap();
            assert!(all_pass(&r.checks), "{name}: {:?}", r.checks);
        }
    }

    #[test]
    fn penrose_reversal_invariant() {
        let oct = by_name("octahedron").unwrap();
        let g1 = Orientation::ground(12);
        let g2 = Orientation::new(vec![-1; 12]).unwrap();
        assert_eq!(penrose_bias(&oct, &g1).unwrap(), penrose_bias(&oct, &g2).unwrap());
        assert!(penrose_bias(&by_name("K4").unwrap(), &Orientation::ground(6)).is_err());
    }

    #[test]
    fn pair_stats_small() {
        for name in ["C4x2", "2K3x2"] {
            let s = orientation_pair_stats(&by_name(name).unwrap()).unwrap();
            assert!(all_pass(&s.checks), "{name}: {:?}", s.checks);
        }
    }

    #[test]
    fn orientation_parse() {
        let o = Orientation::parse("+-+").unwrap();
        assert_eq!(o.signs(), &[1, -1, 1]);
        assert_eq!(o.to_string(), "+-+");
        assert!(Orientation::parse("+x").is_err());
    }
}
