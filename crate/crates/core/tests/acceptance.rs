//! Acceptance criteria. Run with `cargo test -p eulerpar --test acceptance`;
//! prints one PASS/FAIL line per criterion and exits nonzero on any FAIL.
//!
//! Reference values come from the brute-force oracles in `common`, never
//! from the library routine under test.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::{colourings, frac, isomorphic, nowhere_zero_flows, orientation_pairs, tuple_bias, tutte_at};
use eulerpar::bias::{bias_from_tutte, conditional_bias, verify_named_theorems, Combiner, EventSpec};
use eulerpar::corpus::{by_name, corpus, octahedron, plane_coordinates};
use eulerpar::cubic::{psi_sums, triangulation_bias};
use eulerpar::cyclotomic::{fmt_rational, int, rat, root_of_unity, Scalar};
use eulerpar::embedding::{facial_triangles, medial, RotationSystem};
use eulerpar::enumerators::{verify_fourth_power, verify_sum_cubes};
use eulerpar::flows::{mobius_aggregate_check, mobius_flow_sum, onn_criterion, tripartition_scan, Modulus, QAssignment};
use eulerpar::montecarlo::monte_carlo_bias;
use eulerpar::orientations::{orientation_pair_stats, penrose_bias};
use eulerpar::tutte::{chromatic_value, flow_value, tutte_deletion_contraction, tutte_subset_expansion};
use eulerpar::{Check, Cyc12, MultiGraph, Rational};

const BUDGET_TUTTE_PAIR: Duration = Duration::from_secs(10);
const BUDGET_SPECIALIZATIONS: Duration = Duration::from_secs(60);
const BUDGET_SUM_CUBES: Duration = Duration::from_secs(60);
const BUDGET_FOURTH_POWER: Duration = Duration::from_secs(60);
const BUDGET_NAMED_THEOREMS: Duration = Duration::from_secs(30);
const BUDGET_CENTRAL_PAIR: Duration = Duration::from_secs(300);
const BUDGET_ONN: Duration = Duration::from_secs(300);
const BUDGET_TRIPART: Duration = Duration::from_secs(600);
const BUDGET_PSI: Duration = Duration::from_secs(120);
const BUDGET_MEDIAL: Duration = Duration::from_secs(120);
const BUDGET_MONTE_CARLO: Duration = Duration::from_secs(60);

/// Largest `(q-1)^{|E|}` the flow oracle is asked to walk.
const FLOW_ORACLE_MAX: u64 = 1 << 24;
const MC_SAMPLES: u64 = 100_000;
const MC_SEED: u64 = 20_240_601;
/// Standard errors allowed between estimate and exact value.
const MC_SIGMAS: f64 = 4.0;

struct Outcome {
    failures: Vec<String>,
    notes: Vec<String>,
}

impl Outcome {
    fn new() -> Self {
        Outcome { failures: Vec::new(), notes: Vec::new() }
    }

    fn expect(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if !ok {
            self.failures.push(what());
        }
    }

    fn checks(&mut self, graph: &str, checks: &[Check]) {
        for c in checks.iter().filter(|c| !c.pass) {
            self.failures.push(format!("{graph}: {c}"));
        }
    }
}

fn g(name: &str) -> MultiGraph {
    by_name(name).expect("corpus graph")
}

fn criterion(id: u32, title: &str, budget: Duration, body: impl FnOnce(&mut Outcome)) -> bool {
    let start = Instant::now();
    let mut out = Outcome::new();
    body(&mut out);
    let elapsed = start.elapsed();
    if elapsed > budget {
        out.failures.push(format!("took {elapsed:.2?}, budget {budget:?}"));
    }
    let pass = out.failures.is_empty();
    println!("{} {id:>2} {title} ({elapsed:.2?} / {budget:?})", if pass { "PASS" } else { "FAIL" });
    for n in &out.notes {
        println!("        note: {n}");
    }
    for f in out.failures.iter().take(10) {
        println!("        {f}");
    }
    pass
}

fn tutte_pair(out: &mut Outcome) {
    for (name, graph) in corpus().into_iter().filter(|(_, x)| x.edge_count() <= 12) {
        let dc = tutte_deletion_contraction(&graph);
        let sub = tutte_subset_expansion(&graph).expect("subset expansion within limits");
        out.expect(dc == sub, || format!("{name}: {dc} vs {sub}"));
    }
}

fn specializations(out: &mut Outcome) {
    for (name, graph) in corpus() {
        for q in 2..=4i64 {
            let p = chromatic_value(&graph, q).unwrap();
            let want = int(colourings(&graph, q as u32) as i64);
            out.expect(p == want, || format!("{name}: P(G;{q}) = {p}, brute force {want}"));
            if ((q - 1) as u64).checked_pow(graph.edge_count() as u32).is_some_and(|w| w <= FLOW_ORACLE_MAX) {
                let f = flow_value(&graph, q).unwrap();
                let want = int(nowhere_zero_flows(&graph, q) as i64);
                out.expect(f == want, || format!("{name}: F(G;{q}) = {f}, brute force {want}"));
            }
        }
    }
    let pinned = [
        (chromatic_value(&g("K3"), 3).unwrap(), 6, "P(K3;3)"),
        (chromatic_value(&g("K5"), 4).unwrap(), 0, "P(K5;4)"),
        (flow_value(&g("K3"), 4).unwrap(), 3, "F(K3;4)"),
    ];
    for (v, want, what) in pinned {
        out.expect(v == int(want), || format!("{what} = {v}, expected {want}"));
    }
}

fn sum_cubes(out: &mut Outcome) {
    let mut points: Vec<Cyc12> = [int(-2), int(2), int(3), rat(1, 2)].into_iter().map(Cyc12::from_rational).collect();
    points.extend([2, 3, 4, 6].map(|q| root_of_unity(q, 1).unwrap()));
    for (name, graph) in corpus().into_iter().filter(|(_, x)| x.edge_count() <= 14) {
        for t in &points {
            match verify_sum_cubes(&graph, t) {
                Ok(c) => out.checks(name, &c),
                Err(e) => out.failures.push(format!("{name} t={t}: {e}")),
            }
        }
    }
}

fn fourth_power(out: &mut Outcome) {
    for (name, graph) in corpus().into_iter().filter(|(_, x)| x.edge_count() <= 10) {
        for t in [int(2), int(3)] {
            match verify_fourth_power(&graph, &t) {
                Ok(c) => out.checks(name, &[c]),
                Err(e) => out.failures.push(format!("{name} t={t}: {e}")),
            }
        }
    }
}

fn named_theorems(out: &mut Outcome) {
    for name in ["K3", "C4", "C5", "K4", "K23", "loop"] {
        match verify_named_theorems(&g(name)) {
            Ok(c) => {
                out.checks(name, &c);
                if name == "C5" {
                    let zero = c.iter().filter(|c| c.name.contains("zero branch")).count();
                    out.expect(zero == 2, || format!("C5: expected both zero-branch checks, found {zero}"));
                }
            }
            Err(e) => out.failures.push(format!("{name}: {e}")),
        }
    }
    let k3 = g("K3");
    let ev = EventSpec::new(3, Combiner::Sum, 6, &[0, 1, 2]).unwrap();
    let brute = tuple_bias(&k3, 3, 6, &[0, 1, 2], |s| s.iter().sum());
    let coset = conditional_bias(&k3, &ev).unwrap();
    let tutte = bias_from_tutte(&k3, &ev).unwrap();
    let want = frac(-9, 16);
    for (route, v) in [("triple brute force", &brute), ("coset convolution", &coset), ("Tutte formula", &tutte)] {
        out.expect(*v == want, || format!("K3 q=6 S={{0,1,2}} {route}: {v}, expected -9/16"));
    }
    let (hits, accepted) = common::tuple_counts(&k3, 3, 6, &[0, 1, 2], |s| s.iter().sum());
    out.notes.push(format!(
        "K3 q=6 S={{0,1,2}}: all three routes give {}; the value 9/16 listed as the target has the wrong sign \
         (of the 2^9 triples, {accepted} satisfy the eulerian condition and {hits} of those land in S)",
        fmt_rational(&brute)
    ));
}

fn central_pair(out: &mut Outcome) {
    let kinds = [(2, Combiner::Difference), (2, Combiner::Sum), (3, Combiner::Sum)];
    for name in ["K3", "C4"] {
        let graph = g(name);
        for q in [2u32, 3, 4, 6] {
            for (arity, comb) in kinds {
                for mask in 1u32..(1 << q) - 1 {
                    let s: Vec<u32> = (0..q).filter(|r| mask >> r & 1 == 1).collect();
                    let ev = EventSpec::new(arity, comb, q, &s).unwrap();
                    let a = conditional_bias(&graph, &ev).unwrap();
                    let b = bias_from_tutte(&graph, &ev).unwrap();
                    out.expect(a == b, || format!("{name} {}: enumeration {a}, Tutte {b}", ev.describe()));
                }
            }
        }
    }
    // spot check against full tuple enumeration
    let k3 = g("K3");
    let ev = EventSpec::new(2, Combiner::Difference, 3, &[0]).unwrap();
    let brute = tuple_bias(&k3, 2, 3, &[0], |s| s[0] - s[1]);
    let via = bias_from_tutte(&k3, &ev).unwrap();
    out.expect(brute == via, || format!("K3 |A|-|B| mod 3 in {{0}}: brute force {brute}, Tutte {via}"));
}

fn onn(out: &mut Outcome) {
    for name in ["K3", "C4", "C5", "K4", "K5"] {
        let graph = g(name);
        for (md, q) in [(Modulus::Z3, 3), (Modulus::Z4, 4), (Modulus::F4, 4)] {
            let colourable = colourings(&graph, q) > 0;
            match onn_criterion(&graph, md) {
                Ok(w) => out.expect(w.is_some() == colourable, || {
                    format!("{name} {md}: witness {w:?} but {q}-colourable = {colourable}")
                }),
                Err(e) => out.failures.push(format!("{name} {md}: {e}")),
            }
            match mobius_aggregate_check(&graph, md) {
                Ok(c) => out.checks(&format!("{name} {md}"), &[c]),
                Err(e) => out.failures.push(format!("{name} {md} aggregate: {e}")),
            }
        }
    }
    let ones = QAssignment::parse(Modulus::F4, "1,1,1").unwrap();
    let v = mobius_flow_sum(&g("K3"), Modulus::F4, &ones).unwrap();
    out.expect(v == 0, || format!("Möbius sum of K3 at (1,1,1) over F4 is {v}, expected 0"));
}

/// Tripartitions with nonzero `Σ_{A⊆X,B⊆Y,C⊆Z, A∪C, C∪B eulerian} (-1)^{|A|+|B|+|C|}`,
/// enumerated directly.
fn nonzero_tripartitions(graph: &MultiGraph) -> u64 {
    let m = graph.edge_count();
    let vm = common::incidence(graph);
    let mut nonzero = 0;
    for code in 0..3u64.pow(m as u32) {
        let (mut x, mut y, mut z, mut c) = (0u64, 0u64, 0u64, code);
        for e in 0..m {
            match c % 3 {
                0 => x |= 1 << e,
                1 => y |= 1 << e,
                _ => z |= 1 << e,
            }
            c /= 3;
        }
        let xyz = x | y | z;
        let mut signed = 0i64;
        let mut s = xyz;
        loop {
            let (a, b, cc) = (s & x, s & y, s & z);
            if common::is_eulerian(&vm, a | cc) && common::is_eulerian(&vm, cc | b) {
                signed += if s.count_ones() % 2 == 0 { 1 } else { -1 };
            }
            if s == 0 {
                break;
            }
            s = (s - 1) & xyz;
        }
        if signed != 0 {
            nonzero += 1;
        }
    }
    nonzero
}

fn tripart(out: &mut Outcome) {
    for (name, expect_nonzero) in [("K3", true), ("K4", true), ("K5", false)] {
        let graph = g(name);
        let scan = match tripartition_scan(&graph) {
            Ok(s) => s,
            Err(e) => {
                out.failures.push(format!("{name}: {e}"));
                continue;
            }
        };
        let brute = nonzero_tripartitions(&graph);
        out.expect(scan.nonzero == brute, || format!("{name}: scan finds {} nonzero, brute force {brute}", scan.nonzero));
        out.expect((scan.nonzero > 0) == expect_nonzero, || format!("{name}: {} nonzero partitions", scan.nonzero));
        let total = 3u64.pow(graph.edge_count() as u32);
        out.expect(scan.partitions == total, || format!("{name}: scanned {} of {total}", scan.partitions));
    }
}

/// `Bias(|A| - |B| ≡ c mod 3)` over eulerian `A, B` covering `E`.
fn covering_biases(graph: &MultiGraph) -> [Rational; 3] {
    let m = graph.edge_count();
    let vm = common::incidence(graph);
    let full = (1u64 << m) - 1;
    let eul: Vec<u64> = (0..=full).filter(|&a| common::is_eulerian(&vm, a)).collect();
    let mut counts = [0i64; 3];
    for &a in &eul {
        for &b in &eul {
            if a | b == full {
                counts[(a.count_ones() as i64 - b.count_ones() as i64).rem_euclid(3) as usize] += 1;
            }
        }
    }
    let total: i64 = counts.iter().sum();
    counts.map(|c| frac(2 * c - total, total))
}

fn psi(out: &mut Outcome) {
    for name in ["K3", "K4", "prism", "petersen"] {
        match psi_sums(&g(name)) {
            Ok(r) => {
                out.checks(name, &r.checks);
                let cubic = name != "K3";
                out.expect(r.notice.is_none() == cubic, || format!("{name}: cubic notice {:?}", r.notice));
                if name == "K3" {
                    out.expect(r.flow_sum == 3.into(), || format!("K3 flow sum {}, expected 3", r.flow_sum));
                }
            }
            Err(e) => out.failures.push(format!("{name}: {e}")),
        }
    }
    for name in ["K4", "octahedron"] {
        let graph = g(name);
        let rot = RotationSystem::from_coordinates(&graph, &plane_coordinates(name).unwrap()).unwrap();
        let cover = facial_triangles(&graph, &rot).unwrap();
        let r = match triangulation_bias(&graph, &cover) {
            Ok(r) => r,
            Err(e) => {
                out.failures.push(format!("{name}: {e}"));
                continue;
            }
        };
        out.checks(name, &r.checks);
        let brute = covering_biases(&graph);
        out.expect(r.conditional == brute, || format!("{name}: biases {:?}, brute force {brute:?}", r.conditional));
        out.expect(brute[1] == brute[2], || format!("{name}: brute-force shift biases differ"));
        let (m, v) = (graph.edge_count() as u32, graph.vertex_count() as u32);
        let p4 = int(colourings(&graph, 4) as i64);
        let f4 = int(nowhere_zero_flows(&graph, 4) as i64);
        let expected = Scalar::pow(&int(2), 3 * m - 2 * v) * p4 / f4;
        // unconditional difference of the shift-0 and shift-1 biases is 2^{1-2|E|}
        let ratio = (&brute[0] - &brute[1]) * Scalar::pow(&int(2), 2 * m - 1);
        out.expect(ratio == expected, || format!("{name}: brute-force ratio {ratio}, expected {expected}"));
    }
}

fn medial_octahedron(out: &mut Outcome) {
    let k4 = g("K4");
    let rot = RotationSystem::from_coordinates(&k4, &plane_coordinates("K4").unwrap()).unwrap();
    let md = medial(&k4, &rot).unwrap();
    let m = &md.graph;
    out.expect(m.is_regular(4), || "medial(K4) is not 4-regular".into());
    out.expect(m.vertex_count() == 6 && m.edge_count() == 12, || {
        format!("medial(K4) has {} vertices, {} edges", m.vertex_count(), m.edge_count())
    });
    out.expect(md.black.triangles.len() == 4, || format!("{} black triangles", md.black.triangles.len()));
    out.expect(isomorphic(m, &octahedron()), || "medial(K4) is not isomorphic to the octahedron".into());
    out.expect(md.plane, || "K4 rotation not recognised as plane".into());

    let p3 = colourings(m, 3) as i64;
    let f3 = nowhere_zero_flows(m, 3) as i64;
    let pb = penrose_bias(m, &md.gamma).unwrap();
    out.expect(pb == frac(p3, f3), || format!("penrose bias {pb}, P/F = {p3}/{f3}"));

    let oct = octahedron();
    let stats = orientation_pair_stats(&oct).unwrap();
    out.checks("octahedron", &stats.checks);
    let t24 = tutte_at(&oct, 2, 4);
    let four_m = Scalar::pow(&int(4), 12);
    let want_p = &t24 / &four_m;
    let want_bias = Scalar::pow(&int(3), 12 - 6) * int(colourings(&oct, 3) as i64) / &t24;
    out.expect(stats.p_gamma == want_p, || format!("P(Γ) = {}, 4^-|E| T(2,4) = {want_p}", stats.p_gamma));
    out.expect(stats.bias == want_bias, || format!("Bias = {}, expected {want_bias}", stats.bias));

    // all 4^12 pairs, reading Γ as the F3-flow condition on the agreement set
    let (count, signed) = orientation_pairs(&oct, |d| d.rem_euclid(3) == 0);
    out.expect(int(count as i64) / &four_m == want_p, || format!("pair enumeration P(Γ) = {count}/4^12"));
    out.expect(frac(signed, count as i64) == want_bias, || format!("pair enumeration bias = {signed}/{count}"));
    let (balanced, _) = orientation_pairs(&oct, |d| d == 0);
    out.notes.push(format!(
        "octahedron: {count} of 4^12 pairs satisfy the F3 condition (matches T(2,4)); \
         only {balanced} have in-degree = out-degree everywhere"
    ));
}

fn monte_carlo(out: &mut Outcome) {
    let k3 = g("K3");
    let cases = [
        (EventSpec::new(2, Combiner::Sum, 2, &[0]).unwrap(), 0.0),
        (EventSpec::new(3, Combiner::Sum, 6, &[0, 1, 2]).unwrap(), -9.0 / 16.0),
    ];
    for (ev, exact) in cases {
        let oracle = match ev.arity {
            2 => tuple_bias(&k3, 2, 2, &[0], |s| s[0] + s[1]),
            _ => tuple_bias(&k3, 3, 6, &[0, 1, 2], |s| s.iter().sum()),
        };
        out.expect(fmt_rational(&oracle) == if exact == 0.0 { "0".to_string() } else { "-9/16".to_string() }, || {
            format!("{}: brute force {oracle}", ev.describe())
        });
        let a = monte_carlo_bias(&k3, &ev, MC_SAMPLES, MC_SEED).unwrap();
        let b = monte_carlo_bias(&k3, &ev, MC_SAMPLES, MC_SEED).unwrap();
        let (ja, jb) = (serde_json::to_string(&a).unwrap(), serde_json::to_string(&b).unwrap());
        out.expect(ja == jb, || format!("{}: reruns differ: {ja} vs {jb}", ev.describe()));
        match (a.estimate, a.stderr) {
            (Some(est), Some(se)) => {
                out.expect((est - exact).abs() <= MC_SIGMAS * se, || {
                    format!("{}: estimate {est:.5} ± {se:.5}, exact {exact}", ev.describe())
                });
                out.notes.push(format!("{}: {est:.5} ± {se:.5} (exact {exact}, seed {MC_SEED})", ev.describe()));
            }
            _ => out.failures.push(format!("{}: no accepted samples", ev.describe())),
        }
    }
}

fn main() -> ExitCode {
    let results = [
        criterion(1, "deletion-contraction = subset expansion, |E| <= 12", BUDGET_TUTTE_PAIR, tutte_pair),
        criterion(2, "chromatic and flow values = brute force, q = 2, 3, 4", BUDGET_SPECIALIZATIONS, specializations),
        criterion(3, "sum-of-cubes identities, |E| <= 14", BUDGET_SUM_CUBES, sum_cubes),
        criterion(4, "fourth-power identity, |E| <= 10", BUDGET_FOURTH_POWER, fourth_power),
        criterion(5, "named correlation theorems", BUDGET_NAMED_THEOREMS, named_theorems),
        criterion(6, "conditional bias = Tutte bias over all events on K3, C4", BUDGET_CENTRAL_PAIR, central_pair),
        criterion(7, "Möbius witness iff P(G;q) != 0", BUDGET_ONN, onn),
        criterion(8, "tripartition bias nonzero iff P(G;4) != 0", BUDGET_TRIPART, tripart),
        criterion(9, "psi character sums and triangulation bias", BUDGET_PSI, psi),
        criterion(10, "medial(K4), penrose bias and orientation pairs", BUDGET_MEDIAL, medial_octahedron),
        criterion(11, "Monte Carlo within 4 standard errors, reproducible", BUDGET_MONTE_CARLO, monte_carlo),
    ];
    let failed = results.iter().filter(|&&p| !p).count();
    println!("{} criteria, {failed} failed", results.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
