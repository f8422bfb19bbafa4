//! The verification suites behind `verify`.

use eulerpar::bias::{
    bias_from_tutte_with, conditional_bias, equidistribution_check, in_unit_interval, unconditional_bias,
    unconditional_bias_by_counts, verify_named_theorems, Combiner, EventSpec,
};
use eulerpar::cubic::{psi_sums, triangulation_bias};
use eulerpar::cyclotomic::{int, rat, root_of_unity, Cyc12, Scalar};
use eulerpar::embedding::{medial, RotationSystem, TriangleCover};
use eulerpar::enumerators::{
    verify_eulerian_reciprocal, verify_flow_hwe, verify_fourth_power, verify_macwilliams, verify_real_sums,
    verify_sum_cubes,
};
use eulerpar::flows::{
    count_nowhere_zero_flows, count_nowhere_zero_tensions, flow_basis, mobius_aggregate_check, onn_criterion,
    tension_basis, tripartition_scan, Modulus,
};
use eulerpar::orientations::{orientation_pair_stats, penrose_report};
use eulerpar::tutte::{tutte_subset_expansion, Tutte};
use eulerpar::{Check, Error, MultiGraph, Result};

use crate::output::Suite;

pub const SUITES: &[&str] = &[
    "tutte",
    "hwe",
    "sum-cubes",
    "real-sums",
    "fourth-power",
    "reciprocal",
    "named-theorems",
    "bias-oracle",
    "equidistribution",
    "flows",
    "mobius",
    "onn",
    "tripart",
    "psi",
    "triang",
    "medial",
    "orient-pairs",
];

/// Largest edge count for which every residue set is tried in `bias-oracle`.
const ALL_RESIDUE_SETS_MAX_EDGES: usize = 10;
/// Largest edge count for the exhaustive tripartition scan.
const TRIPART_SCAN_MAX_EDGES: usize = 10;
const FOURTH_POWER_MAX_EDGES: usize = 10;

pub struct Context<'a> {
    pub graph: &'a MultiGraph,
    pub tutte: &'a Tutte,
    pub rotation: Option<&'a RotationSystem>,
    pub cover: Option<&'a TriangleCover>,
    pub timing: bool,
}

pub fn run(name: &str, cx: &Context) -> Suite {
    let g = cx.graph;
    let tt = cx.tutte;
    let timing = cx.timing;
    match name {
        "tutte" => Suite::run(name, timing, || {
            let mut out = vec![Check::rational(
                "T(2,2) = 2^|E|",
                "",
                &tt.eval(&int(2), &int(2)),
                &Scalar::pow(&int(2), g.edge_count() as u32),
            )];
            let sub = tutte_subset_expansion(g)?;
            out.push(Check::holds("deletion-contraction = subset expansion", "", sub == tt.poly));
            Ok(out)
        }),
        "hwe" => Suite::run(name, timing, || {
            let mut out = Vec::new();
            for q in [2, 4] {
                for t in [int(2), int(3)] {
                    out.push(verify_flow_hwe(g, q, &t)?);
                    out.extend(verify_macwilliams(g, q, &t)?);
                }
            }
            Ok(out)
        }),
        "sum-cubes" => Suite::run(name, timing, || {
            let mut out = Vec::new();
            for t in [int(-2), int(2), int(3), rat(1, 2)] {
                out.extend(verify_sum_cubes(g, &Cyc12::from_rational(t))?);
            }
            for q in [2, 3, 4, 6] {
                out.extend(verify_sum_cubes(g, &root_of_unity(q, 1)?)?);
            }
            Ok(out)
        }),
        "real-sums" => Suite::run(name, timing, || {
            let mut out = Vec::new();
            for q in [2, 3, 4, 6] {
                for k in 1..q as i64 {
                    out.extend(verify_real_sums(g, q, k)?);
                }
            }
            Ok(out)
        }),
        "fourth-power" => Suite::run(name, timing, || {
            if g.edge_count() > FOURTH_POWER_MAX_EDGES {
                return Err(Error::Size {
                    what: "fourth-power suite edge count".into(),
                    limit: FOURTH_POWER_MAX_EDGES as u64,
                });
            }
            [int(2), int(3)].iter().map(|t| verify_fourth_power(g, t)).collect()
        }),
        "reciprocal" => {
            Suite::run(name, timing, || [int(2), int(3), rat(1, 2)].iter().map(|t| verify_eulerian_reciprocal(g, t)).collect())
        }
        "named-theorems" => Suite::run(name, timing, || verify_named_theorems(g)),
        "bias-oracle" => Suite::run(name, timing, || bias_oracle(g, tt)),
        "equidistribution" => Suite::run(name, timing, || {
            let m = g.edge_count().max(1);
            [2u32, 3, 4, 6]
                .iter()
                .map(|&q| {
                    let uniform = equidistribution_check(m, q)?;
                    Ok(Check::integer("|A|-|B| uniform mod q iff q = 2", format!("m={m} q={q}"), uniform, q == 2))
                })
                .collect()
        }),
        "flows" => Suite::run(name, timing, || {
            let mut out = Vec::new();
            let k = tt.profile.k as u32;
            for (md, q) in [(Modulus::Z3, 3i64), (Modulus::Z4, 4), (Modulus::F4, 4)] {
                let fb = flow_basis(g, md);
                let tb = tension_basis(g, md);
                let orth = fb.iter().all(|x| tb.iter().all(|y| x.dot(y) == 0));
                out.push(Check::holds("flow basis orthogonal to tension basis", format!("{md}"), orth));
                let nzf = int(count_nowhere_zero_flows(g, md)? as i64);
                out.push(Check::rational("nowhere-zero flows = F(G;q)", format!("{md}"), &nzf, &tt.flow(q)?));
                let nzt = int(count_nowhere_zero_tensions(g, md)? as i64) * Scalar::pow(&int(q), k);
                out.push(Check::rational("q^k nowhere-zero tensions = P(G;q)", format!("{md}"), &nzt, &tt.chromatic(q)?));
            }
            Ok(out)
        }),
        "mobius" => {
            let mut notes = Vec::new();
            let suite = Suite::run(name, timing, || {
                let mut out = Vec::new();
                for md in [Modulus::Z3, Modulus::Z4, Modulus::F4] {
                    if let Some(c) = unless_too_big(&mut notes, md, mobius_aggregate_check(g, md))? {
                        out.push(c);
                    }
                }
                Ok(out)
            });
            suite.with_notice(joined(notes))
        }
        "onn" => {
            let mut notes = Vec::new();
            let suite = Suite::run(name, timing, || {
                let mut out = Vec::new();
                for (md, q) in [(Modulus::Z3, 3i64), (Modulus::Z4, 4), (Modulus::F4, 4)] {
                    let Some(witness) = unless_too_big(&mut notes, md, onn_criterion(g, md))? else {
                        continue;
                    };
                    let colourable = tt.chromatic(q)? != int(0);
                    let params = match &witness {
                        Some(w) => format!("{md} witness={w}"),
                        None => format!("{md} no witness"),
                    };
                    out.push(Check::integer("witness exists iff P(G;q) != 0", params, witness.is_some(), colourable));
                }
                Ok(out)
            });
            suite.with_notice(joined(notes))
        }
        "tripart" => Suite::run(name, timing, || {
            if g.edge_count() > TRIPART_SCAN_MAX_EDGES {
                return Err(Error::Size {
                    what: "tripartition scan edge count".into(),
                    limit: TRIPART_SCAN_MAX_EDGES as u64,
                });
            }
            let scan = tripartition_scan(g)?;
            let params = scan.first_nonzero.clone().unwrap_or_else(|| "no nonzero partition".into());
            Ok(vec![Check::integer("some tripartition bias nonzero iff P(G;4) != 0", params, scan.nonzero > 0, tt.chromatic(4)? != int(0))])
        }),
        "psi" => {
            let mut notice = None;
            let suite = Suite::run(name, timing, || {
                let r = psi_sums(g)?;
                notice = r.notice.clone();
                Ok(r.checks)
            });
            suite.with_notice(notice)
        }
        "triang" => match cx.cover {
            None => Suite::skipped(name, "no triangle cover: pass --tri, or --rot with a triangulated embedding"),
            Some(cover) => Suite::run(name, timing, || Ok(triangulation_bias(g, cover)?.checks)),
        },
        "medial" => match cx.rotation {
            _ if !g.is_regular(3) => Suite::skipped(name, "graph is not cubic"),
            None => Suite::skipped(name, "no rotation system: pass --rot"),
            Some(rot) => Suite::run(name, timing, || {
                let m = medial(g, rot)?;
                let mg = &m.graph;
                let mut out = vec![
                    Check::holds("medial graph is 4-regular", "", mg.is_regular(4)),
                    Check::integer("|V(M)| = |E(H)|", "", mg.vertex_count(), g.edge_count()),
                    Check::integer("|E(M)| = 2|E(H)|", "", mg.edge_count(), 2 * g.edge_count()),
                    Check::integer("black triangles = |V(H)|", "", m.black.triangles.len(), g.vertex_count()),
                ];
                out.extend(penrose_report(mg, &m.gamma, m.plane)?.checks);
                Ok(out)
            }),
        },
        "orient-pairs" => {
            if !g.is_regular(4) {
                Suite::skipped(name, "graph is not 4-regular")
            } else {
                Suite::run(name, timing, || Ok(orientation_pair_stats(g)?.checks))
            }
        }
        other => Suite::skipped(other, "unknown suite"),
    }
}

/// Turns a size-limit error into a note so the other moduli still run.
fn unless_too_big<T>(notes: &mut Vec<String>, md: Modulus, r: Result<T>) -> Result<Option<T>> {
    match r {
        Ok(v) => Ok(Some(v)),
        Err(e @ Error::Size { .. }) => {
            notes.push(format!("{md} skipped: {e}"));
            Ok(None)
        }
        Err(e) => Err(e),
    }
}

fn joined(notes: Vec<String>) -> Option<String> {
    (!notes.is_empty()).then(|| notes.join("; "))
}

fn events() -> Vec<(u8, Combiner)> {
    vec![(2, Combiner::Difference), (2, Combiner::Sum), (3, Combiner::Sum)]
}

fn residue_sets(q: u32, all: bool) -> Vec<Vec<u32>> {
    if !all {
        return vec![vec![0]];
    }
    (1u32..(1 << q) - 1).map(|mask| (0..q).filter(|r| mask >> r & 1 == 1).collect()).collect()
}

/// Enumerated conditional bias against the Tutte route, and the unconditional
/// closed form against binomial counts.
fn bias_oracle(g: &MultiGraph, tt: &Tutte) -> Result<Vec<Check>> {
    let all = g.edge_count() <= ALL_RESIDUE_SETS_MAX_EDGES;
    let mut out = Vec::new();
    for q in [2u32, 3, 4, 6] {
        for (arity, comb) in events() {
            let mut agree = true;
            let mut bounded = true;
            let mut first_bad = String::new();
            let sets = residue_sets(q, all);
            for s in &sets {
                let ev = EventSpec::new(arity, comb, q, s)?;
                let c = conditional_bias(g, &ev)?;
                let t = bias_from_tutte_with(tt, &ev)?;
                bounded &= in_unit_interval(&c);
                if c != t && agree {
                    agree = false;
                    first_bad = format!(" first mismatch S={s:?}: {c} vs {t}");
                }
                let u1 = unconditional_bias(g.edge_count(), &ev)?;
                let u2 = unconditional_bias_by_counts(g.edge_count(), &ev);
                if u1 != u2 && agree {
                    agree = false;
                    first_bad = format!(" unconditional mismatch S={s:?}");
                }
            }
            let params = format!("q={q} arity={arity} {comb:?} over {} residue sets{first_bad}", sets.len());
            out.push(Check::holds("enumerated bias = Tutte bias", params.clone(), agree));
            out.push(Check::holds("conditional bias in [-1, 1]", params, bounded));
        }
    }
    Ok(out)
}
