//! `eulerpar`: exact Tutte evaluations, parity biases and flow identities
//! from the command line.
//!
//! Exit status: 0 when every check passes, 1 when a check fails, 2 on a
//! usage or domain error.

mod input;
mod output;
mod suites;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use eulerpar::bias::{bias_from_tutte_with, bias_report, Combiner, EventSpec};
use eulerpar::corpus::{by_name, EXTRA_NAMES, NAMES};
use eulerpar::cubic::{psi_sums, triangulation_bias};
use eulerpar::cyclotomic::{fmt_rational, int, parse_rational};
use eulerpar::embedding::{facial_triangles, medial};
use eulerpar::flows::{
    count_nowhere_zero_flows, count_nowhere_zero_tensions, flow_basis, mobius_aggregate_check, onn_criterion,
    tension_basis, tripartition_bias, tripartition_bias_direct, tripartition_scan, Modulus, Tripartition,
};
use eulerpar::montecarlo::monte_carlo_bias;
use eulerpar::orientations::{orientation_pair_stats, penrose_report, Orientation};
use eulerpar::tutte::Tutte;
use eulerpar::{Check, EdgeSubset, Error, MultiGraph, Result};
use serde_json::json;

use input::GraphArgs;
use output::{graph_summary, render_json, render_text, Outcome, Suite};

#[derive(Parser, Debug)]
#[command(name = "eulerpar", version, about = "Exact parity and eulerian-subgraph statistics of multigraphs")]
struct Cli {
    /// Emit a JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Omit timings so identical invocations give identical output.
    #[arg(long, global = true)]
    no_timing: bool,
    /// Worker thread cap.
    #[arg(long, global = true, value_name = "N")]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Tutte polynomial and its colouring/flow specializations.
    Tutte(GraphArgs),
    /// T(G; x, y) at rational x, y.
    Eval {
        #[command(flatten)]
        g: GraphArgs,
        #[arg(long, allow_hyphen_values = true)]
        x: String,
        #[arg(long, allow_hyphen_values = true)]
        y: String,
    },
    /// Bias of a residue event given the eulerian condition.
    Bias(BiasArgs),
    /// Run verification suites.
    Verify {
        #[command(flatten)]
        g: GraphArgs,
        /// Every applicable suite (the default when no --suite is given).
        #[arg(long)]
        all: bool,
        /// A single suite; repeatable.
        #[arg(long, value_name = "NAME")]
        suite: Vec<String>,
    },
    /// Flow and tension bases and nowhere-zero counts.
    Flows {
        #[command(flatten)]
        g: GraphArgs,
        #[arg(long, value_enum)]
        modulus: Option<ModulusArg>,
    },
    /// Möbius-sum colourability witness.
    Onn {
        #[command(flatten)]
        g: GraphArgs,
        #[arg(long, value_parser = ["3", "4"])]
        q: String,
        /// Coefficient structure for q = 4.
        #[arg(long, value_enum)]
        modulus: Option<ModulusArg>,
    },
    /// Tripartition bias, for one partition or all of them.
    Tripart {
        #[command(flatten)]
        g: GraphArgs,
        #[arg(long, value_name = "EDGES", allow_hyphen_values = true)]
        x: Option<String>,
        #[arg(long, value_name = "EDGES")]
        y: Option<String>,
        #[arg(long, value_name = "EDGES")]
        z: Option<String>,
        /// Scan every tripartition.
        #[arg(long, conflicts_with_all = ["x", "y", "z"])]
        scan: bool,
    },
    /// Character sums over F4-flows and F4-tensions.
    Psi(GraphArgs),
    /// Biases of |A|-|B| mod 3 over eulerian covers, for a triangle double cover.
    Triang(GraphArgs),
    /// Medial graph of an embedded cubic graph.
    Medial(GraphArgs),
    /// Parity of agreement with a reference orientation among eulerian orientations.
    Penrose {
        #[command(flatten)]
        g: GraphArgs,
        /// `+`/`-` per edge of a 4-regular graph; defaults to the edge-list orientation.
        #[arg(long, allow_hyphen_values = true)]
        gamma: Option<String>,
    },
    /// Agreement statistics for pairs of orientations of a 4-regular graph.
    OrientPairs(GraphArgs),
    /// List corpus graphs, or print one.
    Corpus {
        name: Option<String>,
        /// Print the rotation system of the plane drawing instead of the edge list.
        #[arg(long, requires = "name")]
        rot: bool,
        /// Print the facial triangles of the plane drawing.
        #[arg(long, requires = "name", conflicts_with = "rot")]
        tri: bool,
    },
}

#[derive(Args, Debug)]
struct BiasArgs {
    #[command(flatten)]
    g: GraphArgs,
    #[arg(long, default_value_t = 2)]
    arity: u8,
    #[arg(long, value_enum, default_value = "difference")]
    combiner: CombinerArg,
    #[arg(long = "mod", value_name = "Q")]
    q: u32,
    /// Residues, comma separated.
    #[arg(long, value_name = "R,R,...")]
    set: String,
    #[arg(long, conflicts_with = "mc")]
    exact: bool,
    /// Monte Carlo estimate instead of exact enumeration.
    #[arg(long)]
    mc: bool,
    #[arg(long, default_value_t = 100_000)]
    samples: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(ValueEnum, Debug, Clone, Copy)]
enum CombinerArg {
    #[value(alias = "diff")]
    Difference,
    Sum,
}

#[derive(ValueEnum, Debug, Clone, Copy)]
enum ModulusArg {
    Z3,
    Z4,
    F4,
}

impl From<ModulusArg> for Modulus {
    fn from(m: ModulusArg) -> Self {
        match m {
            ModulusArg::Z3 => Modulus::Z3,
            ModulusArg::Z4 => Modulus::Z4,
            ModulusArg::F4 => Modulus::F4,
        }
    }
}

fn parse_list(s: &str) -> Result<Vec<u32>> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| t.parse().map_err(|_| Error::Domain(format!("not a non-negative integer: \"{t}\""))))
        .collect()
}

fn edge_set(m: usize, s: Option<&str>) -> Result<EdgeSubset> {
    let ids = parse_list(s.unwrap_or(""))?;
    if let Some(&e) = ids.iter().find(|&&e| e as usize >= m) {
        return Err(Error::Domain(format!("edge {e} out of range (|E| = {m})")));
    }
    Ok(EdgeSubset::from_edges(m, &ids.iter().map(|&e| e as usize).collect::<Vec<_>>()))
}

fn checks_suite(name: &str, checks: Vec<Check>) -> Suite {
    Suite { name: name.into(), notice: None, elapsed_ms: None, checks }
}

fn run(cmd: &Command, timing: bool) -> Result<(Option<MultiGraph>, Outcome)> {
    let mut out = Outcome::default();
    let graph = match cmd {
        Command::Tutte(ga) => {
            let g = ga.graph()?;
            let tt = Tutte::of(&g);
            let mut values = serde_json::Map::new();
            out.lines.push(format!("T(x,y) = {}", tt.poly));
            for q in 1..=4 {
                let p = fmt_rational(&tt.chromatic(q)?);
                let f = fmt_rational(&tt.flow(q)?);
                out.lines.push(format!("P(G;{q}) = {p}  F(G;{q}) = {f}"));
                values.insert(format!("P{q}"), json!(p));
                values.insert(format!("F{q}"), json!(f));
            }
            let terms: Vec<_> = tt.poly.terms().map(|(&(i, j), c)| json!([i, j, c.to_string()])).collect();
            out.result = json!({"terms": terms, "polynomial": tt.poly.to_string(), "values": values});
            g
        }
        Command::Eval { g: ga, x, y } => {
            let g = ga.graph()?;
            let (x, y) = (parse_rational(x)?, parse_rational(y)?);
            let v = fmt_rational(&Tutte::of(&g).eval(&x, &y));
            out.lines.push(v.clone());
            out.result = json!({"x": fmt_rational(&x), "y": fmt_rational(&y), "value": v});
            g
        }
        Command::Bias(b) => {
            let g = b.g.graph()?;
            let comb = match b.combiner {
                CombinerArg::Difference => Combiner::Difference,
                CombinerArg::Sum => Combiner::Sum,
            };
            let ev = EventSpec::new(b.arity, comb, b.q, &parse_list(&b.set)?)?;
            out.lines.push(format!("event: {}", ev.describe()));
            if b.mc {
                let est = monte_carlo_bias(&g, &ev, b.samples, b.seed)?;
                match (est.estimate, est.stderr) {
                    (Some(e), Some(s)) => out.lines.push(format!("estimate: {e:.6} stderr: {s:.6}")),
                    _ => out.lines.push("estimate: none (no sample satisfied the eulerian condition)".into()),
                }
                out.lines.push(format!("accepted: {} of {} samples, seed {}", est.accepted, est.samples, b.seed));
                out.result = json!({"event": ev, "monte_carlo": est, "seed": b.seed});
            } else {
                let r = bias_report(&g, &ev).map_err(|e| match e {
                    Error::Size { .. } => Error::Precondition(format!("{e}; exact enumeration is out of range, use --mc")),
                    other => other,
                })?;
                let tutte = bias_from_tutte_with(&Tutte::of(&g), &ev)?;
                out.lines.push(format!("unconditional bias: {}", fmt_rational(&r.bias_unconditional)));
                out.lines.push(format!("conditional bias: {}", fmt_rational(&r.bias_conditional)));
                out.lines.push(format!("correlation: {}", fmt_rational(&r.correlation)));
                if let Some(ratio) = &r.ratio {
                    out.lines.push(format!("ratio: {}", fmt_rational(ratio)));
                }
                out.suites.push(checks_suite(
                    "bias",
                    vec![Check::rational("enumerated bias = Tutte bias", ev.describe(), &r.bias_conditional, &tutte)],
                ));
                out.result = serde_json::to_value(&r).expect("serializable");
            }
            g
        }
        Command::Verify { g: ga, all: _, suite } => {
            let g = ga.graph()?;
            let tt = Tutte::of(&g);
            let rotation = if g.edge_count() > 0 { ga.rotation(&g).ok().flatten() } else { None };
            let cover = ga.cover(&g).ok().flatten();
            let names: Vec<&str> = if suite.is_empty() {
                suites::SUITES.to_vec()
            } else {
                for s in suite {
                    if !suites::SUITES.contains(&s.as_str()) {
                        return Err(Error::Domain(format!("unknown suite \"{s}\"; known: {}", suites::SUITES.join(", "))));
                    }
                }
                suite.iter().map(String::as_str).collect()
            };
            let cx = suites::Context { graph: &g, tutte: &tt, rotation: rotation.as_ref(), cover: cover.as_ref(), timing };
            out.suites = names.iter().map(|n| suites::run(n, &cx)).collect();
            out.result = json!({"suites_run": names});
            g
        }
        Command::Flows { g: ga, modulus } => {
            let g = ga.graph()?;
            let tt = Tutte::of(&g);
            let k = tt.profile.k as u32;
            let mods: Vec<Modulus> = match modulus {
                Some(m) => vec![(*m).into()],
                None => vec![Modulus::Z3, Modulus::Z4, Modulus::F4],
            };
            let mut checks = Vec::new();
            let mut result = Vec::new();
            for md in mods {
                let q = i64::from(md.order());
                let fb = flow_basis(&g, md);
                let tb = tension_basis(&g, md);
                let nzf = count_nowhere_zero_flows(&g, md)?;
                let nzt = count_nowhere_zero_tensions(&g, md)?;
                out.lines.push(format!("{md}: flow basis {}", fb.iter().map(|x| format!("({x})")).collect::<Vec<_>>().join(" ")));
                out.lines.push(format!("{md}: tension basis {}", tb.iter().map(|x| format!("({x})")).collect::<Vec<_>>().join(" ")));
                out.lines.push(format!("{md}: nowhere-zero flows {nzf}, nowhere-zero tensions {nzt}"));
                let orth = fb.iter().all(|x| tb.iter().all(|y| x.dot(y) == 0));
                checks.push(Check::holds("flow basis orthogonal to tension basis", md.to_string(), orth));
                checks.push(Check::rational("nowhere-zero flows = F(G;q)", md.to_string(), &int(nzf as i64), &tt.flow(q)?));
                let scaled = int(nzt as i64) * eulerpar::cyclotomic::Scalar::pow(&int(q), k);
                checks.push(Check::rational("q^k nowhere-zero tensions = P(G;q)", md.to_string(), &scaled, &tt.chromatic(q)?));
                result.push(json!({
                    "modulus": md,
                    "flow_basis": fb.iter().map(|x| x.to_string()).collect::<Vec<_>>(),
                    "tension_basis": tb.iter().map(|x| x.to_string()).collect::<Vec<_>>(),
                    "nowhere_zero_flows": nzf,
                    "nowhere_zero_tensions": nzt,
                }));
            }
            out.suites.push(checks_suite("flows", checks));
            out.result = json!(result);
            g
        }
        Command::Onn { g: ga, q, modulus } => {
            let g = ga.graph()?;
            let md: Modulus = match (q.as_str(), modulus) {
                ("3", None | Some(ModulusArg::Z3)) => Modulus::Z3,
                ("3", Some(_)) => return Err(Error::Domain("q = 3 uses Z3".into())),
                (_, Some(ModulusArg::Z3)) => return Err(Error::Domain("q = 4 uses Z4 or F4".into())),
                (_, Some(m)) => (*m).into(),
                (_, None) => Modulus::F4,
            };
            let qv = i64::from(md.order());
            let witness = onn_criterion(&g, md)?;
            let p = Tutte::of(&g).chromatic(qv)?;
            match &witness {
                Some(w) => out.lines.push(format!("witness: {w}")),
                None => out.lines.push("witness: none".into()),
            }
            out.lines.push(format!("P(G;{qv}) = {}", fmt_rational(&p)));
            let checks = vec![
                Check::integer("witness exists iff P(G;q) != 0", md.to_string(), witness.is_some(), p != int(0)),
                mobius_aggregate_check(&g, md)?,
            ];
            out.suites.push(checks_suite("onn", checks));
            out.result = json!({"modulus": md, "witness": witness.map(|w| w.to_string()), "chromatic": fmt_rational(&p)});
            g
        }
        Command::Tripart { g: ga, x, y, z, scan } => {
            let g = ga.graph()?;
            let p4 = Tutte::of(&g).chromatic(4)?;
            if *scan {
                let s = tripartition_scan(&g)?;
                out.lines.push(format!("partitions: {}, nonzero: {}", s.partitions, s.nonzero));
                if let Some(f) = &s.first_nonzero {
                    out.lines.push(format!("first nonzero: {f}"));
                }
                out.suites.push(checks_suite(
                    "tripart",
                    vec![Check::integer("some tripartition bias nonzero iff P(G;4) != 0", "", s.nonzero > 0, p4 != int(0))],
                ));
                out.result = serde_json::to_value(&s).expect("serializable");
            } else {
                let m = g.edge_count();
                let part = Tripartition::new(edge_set(m, x.as_deref())?, edge_set(m, y.as_deref())?, edge_set(m, z.as_deref())?)?;
                let v = tripartition_bias(&g, &part)?;
                let d = tripartition_bias_direct(&g, &part)?;
                out.lines.push(format!("signed: {}", fmt_rational(&v.signed)));
                out.lines.push(format!("P(Γ): {}", fmt_rational(&v.p_gamma)));
                out.lines.push(format!("bias: {}", v.bias.as_ref().map(fmt_rational).unwrap_or_else(|| "undefined".into())));
                out.suites.push(checks_suite(
                    "tripart",
                    vec![
                        Check::rational("Möbius route = direct route", "signed", &v.signed, &d.signed),
                        Check::rational("Möbius route = direct route", "P(Γ)", &v.p_gamma, &d.p_gamma),
                    ],
                ));
                out.result = serde_json::to_value(&v).expect("serializable");
            }
            g
        }
        Command::Psi(ga) => {
            let g = ga.graph()?;
            let r = psi_sums(&g)?;
            out.lines.push(format!("flow sum: {}", r.flow_sum));
            out.lines.push(format!("tension sum: {}", r.tension_sum));
            out.suites.push(checks_suite("psi", r.checks.clone()).with_notice(r.notice.clone()));
            out.result = json!({"flow_sum": r.flow_sum.to_string(), "tension_sum": r.tension_sum.to_string()});
            g
        }
        Command::Triang(ga) => {
            let g = ga.graph()?;
            let cover = ga
                .cover(&g)?
                .ok_or_else(|| Error::Precondition("a triangle cover is required: pass --tri FILE or a triangulated --rot".into()))?;
            let r = triangulation_bias(&g, &cover)?;
            for (c, b) in r.conditional.iter().enumerate() {
                out.lines.push(format!("Bias(|A| = |B| + {c} mod 3 | Γ) = {}", fmt_rational(b)));
            }
            out.lines.push(format!("ratio: {}", fmt_rational(&r.ratio)));
            out.suites.push(checks_suite("triang", r.checks.clone()));
            out.result = serde_json::to_value(&r).expect("serializable");
            g
        }
        Command::Medial(ga) => {
            let h = ga.graph()?;
            let rot = ga.rotation(&h)?.ok_or_else(|| Error::Precondition("a rotation system is required: pass --rot FILE".into()))?;
            let m = medial(&h, &rot)?;
            out.lines.push(m.graph.to_edge_list().trim_end().to_string());
            out.lines.push(format!("gamma {}", m.gamma));
            out.lines.push(m.black.format().trim_end().to_string());
            let checks = vec![
                Check::holds("medial graph is 4-regular", "", m.graph.is_regular(4)),
                Check::integer("|V(M)| = |E(H)|", "", m.graph.vertex_count(), h.edge_count()),
                Check::integer("|E(M)| = 2|E(H)|", "", m.graph.edge_count(), 2 * h.edge_count()),
                Check::integer("black triangles = |V(H)|", "", m.black.triangles.len(), h.vertex_count()),
            ];
            out.suites.push(checks_suite("medial", checks));
            out.result = json!({
                "medial": graph_summary(&m.graph),
                "edges": m.graph.edges(),
                "gamma": m.gamma.to_string(),
                "black": m.black.triangles,
                "plane": m.plane,
            });
            h
        }
        Command::Penrose { g: ga, gamma } => {
            let g = ga.graph()?;
            let (target, gamma, plane, from_medial) = if g.is_regular(3) {
                if gamma.is_some() {
                    return Err(Error::Domain("--gamma applies to a 4-regular graph, not a cubic one".into()));
                }
                let rot = ga.rotation(&g)?.ok_or_else(|| Error::Precondition("a cubic graph needs --rot to build its medial graph".into()))?;
                let m = medial(&g, &rot)?;
                (m.graph, m.gamma, m.plane, true)
            } else {
                let gm = match gamma {
                    Some(s) => Orientation::parse(s)?,
                    None => Orientation::ground(g.edge_count()),
                };
                (g.clone(), gm, false, false)
            };
            let r = penrose_report(&target, &gamma, plane)?;
            out.lines.push(format!("eulerian orientations: {}", r.eulerian_orientations));
            out.lines.push(format!("bias: {}", fmt_rational(&r.bias)));
            if let Some(e) = &r.expected {
                out.lines.push(format!("P(G;3)/F(G;3): {}", fmt_rational(e)));
            }
            out.suites.push(checks_suite("penrose", r.checks.clone()));
            let mut v = serde_json::to_value(&r).expect("serializable");
            v["from_medial"] = json!(from_medial);
            v["gamma"] = json!(gamma.to_string());
            out.result = v;
            target
        }
        Command::OrientPairs(ga) => {
            let g = ga.graph()?;
            let s = orientation_pair_stats(&g)?;
            out.lines.push(format!("P(Γ): {}", fmt_rational(&s.p_gamma)));
            out.lines.push(format!("Bias(Σ|Γ): {}", fmt_rational(&s.bias)));
            if let Some(b) = &s.p_gamma_balanced {
                out.lines.push(format!("P(Γ) with in-degree = out-degree: {}", fmt_rational(b)));
            }
            out.suites.push(checks_suite("orient-pairs", s.checks.clone()));
            out.result = serde_json::to_value(&s).expect("serializable");
            g
        }
        Command::Corpus { name, rot, tri } => {
            match name {
                Some(n) => {
                    let g = by_name(n).ok_or_else(|| Error::Domain(format!("unknown corpus graph \"{n}\"")))?;
                    let text = if *rot || *tri {
                        let ga = GraphArgs { corpus: Some(n.clone()), ..GraphArgs::default() };
                        let rs = ga
                            .rotation(&g)?
                            .ok_or_else(|| Error::Domain(format!("no plane drawing stored for \"{n}\"")))?;
                        if *rot {
                            rs.format(&g)
                        } else {
                            facial_triangles(&g, &rs)?.format()
                        }
                    } else {
                        g.to_edge_list()
                    };
                    out.lines.push(text.trim_end().to_string());
                    out.result = json!({"name": n, "edges": g.edges(), "text": text});
                    return Ok((Some(g), out));
                }
                None => {
                    let mut list = Vec::new();
                    for &n in NAMES.iter().chain(EXTRA_NAMES) {
                        let g = by_name(n).expect("listed name");
                        let p = g.rank_profile();
                        out.lines.push(format!(
                            "{n:<11} |V|={:<3} |E|={:<3} k={} r={} n={}",
                            g.vertex_count(),
                            g.edge_count(),
                            p.k,
                            p.r,
                            p.n
                        ));
                        list.push(json!({"name": n, "graph": graph_summary(&g)}));
                    }
                    out.result = json!(list);
                }
            }
            return Ok((None, out));
        }
    };
    Ok((Some(graph), out))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("error: cannot configure {n} threads: {e}");
            return ExitCode::from(2);
        }
    }
    let command: Vec<String> = std::env::args().skip(1).collect();
    let command = command.join(" ");
    match run(&cli.command, !cli.no_timing) {
        Ok((graph, out)) => {
            if cli.json {
                println!("{}", render_json(&command, graph.as_ref(), &out));
            } else {
                print!("{}", render_text(&out));
            }
            if out.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
