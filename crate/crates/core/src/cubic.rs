//! The character `ψ` on `F₄` and the identities it gives between `F₄`-flows
//! and `F₄`-tensions, with the triangle-double-cover reading as a bias.
//!
//! `ψ(0) = 0`, `ψ(1) = 1`, `ψ(ω) = ζ₃`, `ψ(ω̄) = ζ₃²`. Products over a
//! nowhere-zero vector are `ζ₃` to the sum of discrete logs, so every sum
//! reduces to three class counts.

use num::{BigInt, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::bias::{pow2, unconditional_bias, Combiner, EventSpec};
use crate::cyclotomic::{int, root_of_unity, Cyc12, Rational, Scalar};
use crate::embedding::TriangleCover;
use crate::enumerators::{cutset_masks, eulerian_masks};
use crate::error::{Error, Result};
use crate::flows::{flow_basis, for_each_in_span, tension_basis, weight_packed, Modulus, QAssignment};
use crate::graph::MultiGraph;
use crate::report::{ser_rational, Check};
use crate::tutte::Tutte;

/// Largest number of subset pairs examined by the pair enumerations.
pub const PAIR_MAX: u64 = 1 << 30;

const LO: u64 = 0x5555_5555_5555_5555;

/// Counts of nowhere-zero vectors by discrete log of their product, mod 3.
fn log_classes(g: &MultiGraph, basis: &[QAssignment]) -> Result<[u64; 3]> {
    let m = g.edge_count() as u32;
    let mut classes = [0u64; 3];
    for_each_in_span(g, basis, Modulus::F4, |x| {
        if weight_packed(x) == m {
            let omegas = ((x >> 1) & !x & LO).count_ones();
            let omega_bars = (x & (x >> 1) & LO).count_ones();
            classes[((omegas + 2 * omega_bars) % 3) as usize] += 1;
        }
    })?;
    Ok(classes)
}

fn character_sum(classes: &[u64; 3], conjugate: bool) -> Result<Cyc12> {
    let w = root_of_unity(3, if conjugate { -1 } else { 1 })?;
    let mut acc = Cyc12::zero();
    for (j, &c) in classes.iter().enumerate() {
        acc += Scalar::pow(&w, j as u32).scale(&int(c as i64));
    }
    Ok(acc)
}

fn integer_value(x: &Cyc12, what: &str) -> Result<BigInt> {
    let r = x.to_rational().map_err(|_| Error::Internal(format!("{what} is not rational")))?;
    if !r.is_integer() {
        return Err(Error::Internal(format!("{what} = {r} is not an integer")));
    }
    Ok(r.to_integer())
}

/// Pairs `A, B` from `family` with `A ∪ B = E`, counted by `|A| - |B| mod 3`.
fn covering_pair_classes(family: &[u64], m: usize) -> Result<[u64; 3]> {
    let pairs = (family.len() as u64).saturating_mul(family.len() as u64);
    if pairs > PAIR_MAX {
        return Err(Error::size("subset pair enumeration", PAIR_MAX));
    }
    let full = if m == 64 { u64::MAX } else { (1u64 << m) - 1 };
    Ok(family
        .par_iter()
        .map(|&a| {
            let mut c = [0u64; 3];
            for &b in family {
                if a | b == full {
                    let d = a.count_ones() as i64 - b.count_ones() as i64;
                    c[d.rem_euclid(3) as usize] += 1;
                }
            }
            c
        })
        .reduce(|| [0; 3], |x, y| [x[0] + y[0], x[1] + y[1], x[2] + y[2]]))
}

fn omega_sum(classes: &[u64; 3]) -> Result<Cyc12> {
    character_sum(classes, false)
}

#[derive(Debug, Clone, Serialize)]
pub struct PsiReport {
    /// `Σ_{z ∈ C₄} Π ψ(z_e)`.
    #[serde(serialize_with = "ser_display")]
    pub flow_sum: BigInt,
    /// `Σ_{z ∈ C₄^⊥} Π ψ(z_e)`.
    #[serde(serialize_with = "ser_display")]
    pub tension_sum: BigInt,
    pub checks: Vec<Check>,
    /// Set when the cubic identity was not applicable.
    pub notice: Option<String>,
}

pub fn psi_sums(g: &MultiGraph) -> Result<PsiReport> {
    g.ensure_enumerable("F4 flow enumeration")?;
    let m = g.edge_count();
    let p = g.rank_profile();
    let flow_classes = log_classes(g, &flow_basis(g, Modulus::F4))?;
    let tension_classes = log_classes(g, &tension_basis(g, Modulus::F4))?;
    let flow_cyc = character_sum(&flow_classes, false)?;
    let tension_cyc = character_sum(&tension_classes, false)?;
    let flow_sum = integer_value(&flow_cyc, "flow character sum")?;
    let tension_sum = integer_value(&tension_cyc, "tension character sum")?;

    let two = int(2);
    let scale = if p.n >= p.r {
        Scalar::pow(&two, (p.n - p.r) as u32)
    } else {
        int(1) / Scalar::pow(&two, (p.r - p.n) as u32)
    };
    let fs = Rational::from(flow_sum.clone());
    let ts = Rational::from(tension_sum.clone());
    let mut checks = vec![
        Check::rational("first psi: flow sum = 2^(n-r) tension sum", "", &fs, &(&scale * &ts)),
        Check::cyc(
            "conjugate character gives the same flow sum",
            "",
            &character_sum(&flow_classes, true)?,
            &flow_cyc,
        ),
        Check::cyc(
            "conjugate character gives the same tension sum",
            "",
            &character_sum(&tension_classes, true)?,
            &tension_cyc,
        ),
    ];

    let eulerian_pairs = omega_sum(&covering_pair_classes(&eulerian_masks(g)?, m)?)?;
    let cutset_pairs = omega_sum(&covering_pair_classes(&cutset_masks(g)?, m)?)?;
    checks.push(Check::cyc("second omega: eulerian pairs = flow sum", "", &eulerian_pairs, &flow_cyc));
    checks.push(Check::cyc("second omega: cutset pairs = tension sum", "", &cutset_pairs, &tension_cyc));
    checks.push(Check::cyc(
        "second omega: eulerian pairs = 2^(n-r) cutset pairs",
        "",
        &eulerian_pairs,
        &cutset_pairs.scale(&scale),
    ));

    let notice = if g.is_regular(3) {
        let f4 = Tutte::of(g).flow(4)?;
        let lhs = f4 / &scale;
        let half_rest = Rational::new(BigInt::from(tension_classes[1] + tension_classes[2]), BigInt::from(2));
        let rhs = int(tension_classes[0] as i64) - half_rest;
        checks.push(Check::rational("third cubic: 2^(r-n) F(G;4)", "", &lhs, &rhs));
        None
    } else {
        Some("graph is not cubic; third cubic identity skipped".to_string())
    };
    Ok(PsiReport { flow_sum, tension_sum, checks, notice })
}

#[derive(Debug, Clone, Serialize)]
pub struct TriangulationReport {
    /// `#{A, B eulerian, A ∪ B = E, |A| - |B| ≡ c}` for `c = 0, 1, 2`.
    pub class_counts: [u64; 3],
    /// `Bias(|A| ≡ |B| + c (mod 3) | Γ)` for `c = 0, 1, 2`.
    #[serde(serialize_with = "ser_rationals")]
    pub conditional: Vec<Rational>,
    #[serde(serialize_with = "ser_rational")]
    pub ratio: Rational,
    #[serde(serialize_with = "ser_rational")]
    pub expected: Rational,
    pub checks: Vec<Check>,
}

fn ser_display<S: serde::Serializer>(x: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(x)
}

fn ser_rationals<S: serde::Serializer>(xs: &[Rational], s: S) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(xs.len()))?;
    for x in xs {
        seq.serialize_element(&crate::cyclotomic::fmt_rational(x))?;
    }
    seq.end()
}

/// Conditional biases of `|A| - |B| mod 3` given that `A, B` are eulerian
/// and cover `E`, for a graph with a double cover by triangles.
pub fn triangulation_bias(g: &MultiGraph, cover: &TriangleCover) -> Result<TriangulationReport> {
    cover.validate(g, 2)?;
    let m = g.edge_count();
    let counts = covering_pair_classes(&eulerian_masks(g)?, m)?;
    let total: u64 = counts.iter().sum();
    if total == 0 {
        return Err(Error::Domain("P(Γ) = 0".into()));
    }
    let conditional: Vec<Rational> =
        counts.iter().map(|&c| Rational::new(BigInt::from(2 * c), BigInt::from(total)) - int(1)).collect();

    let uncond = |r: u32| -> Result<Rational> {
        unconditional_bias(m, &EventSpec::new(2, Combiner::Difference, 3, &[r])?)
    };
    let denom = uncond(0)? - uncond(1)?;
    let ratio = (&conditional[0] - &conditional[1]) / &denom;

    let tutte = Tutte::of(g);
    let f4 = tutte.flow(4)?;
    let p4 = tutte.chromatic(4)?;
    let big_e = m as i64;
    let big_v = g.vertex_count() as i64;
    let expected = pow2(3 * big_e - 2 * big_v) * &p4 / &f4;

    let tension_classes = log_classes(g, &tension_basis(g, Modulus::F4))?;
    let tension_sum = integer_value(&character_sum(&tension_classes, false)?, "tension character sum")?;
    let k = g.rank_profile().k as i64;
    let checks = vec![
        Check::integer("P(Γ) 2^(2|E|) = F(G;4)", "", int(total as i64), f4.clone()),
        Check::rational("equal biases for shifts 1 and 2", "", &conditional[1], &conditional[2]),
        Check::rational("unconditional difference = 2^(1-2|E|)", "", &denom, &pow2(1 - 2 * big_e)),
        Check::rational("tension character sum = 4^-k P(G;4)", "", &Rational::from(tension_sum), &(p4 * pow2(-2 * k))),
        Check::rational("ratio = 2^(3|E|-2|V|) P(G;4)/F(G;4)", "", &ratio, &expected),
    ];
    Ok(TriangulationReport { class_counts: counts, conditional, ratio, expected, checks })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::{by_name, plane_coordinates};
    use crate::embedding::{facial_triangles, RotationSystem};
    use crate::report::all_pass;

    #[test]
    fn k3_flow_sum_is_three() {
        let r = psi_sums(&by_name("K3").unwrap()).unwrap();
        assert_eq!(r.flow_sum, BigInt::from(3));
        assert!(r.notice.is_some());
        assert!(all_pass(&r.checks), "{:?}", r.checks);
    }

    #[test]
    fn cubic_identities() {
        for name in ["K4", "prism", "petersen"] {
            let r = psi_sums(&by_name(name).unwrap()).unwrap();
            assert!(r.notice.is_none());
            assert!(all_pass(&r.checks), "{name}: {:?}", r.checks);
        }
    }

    #[test]
    fn triangulations() {
        for name in ["K4", "octahedron"] {
            let g = by_name(name).unwrap();
            let rot = RotationSystem::from_coordinates(&g, &plane_coordinates(name).unwrap()).unwrap();
            let cover = facial_triangles(&g, &rot).unwrap();
            let r = triangulation_bias(&g, &cover).unwrap();
            assert!(all_pass(&r.checks), "{name}: {:?}", r.checks);
        }
        let k4 = by_name("K4").unwrap();
        let r = triangulation_bias(&k4, &facial_triangles(&k4, &RotationSystem::from_coordinates(&k4, &plane_coordinates("K4").unwrap()).unwrap()).unwrap()).unwrap();
        assert_eq!(r.ratio, int(4096));
    }
}
