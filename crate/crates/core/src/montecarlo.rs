//! Seeded Monte Carlo estimate of `Bias(Σ | Δ)` by rejection sampling.
//!
//! The sample budget is split over a fixed number of streams. Stream `i`
//! uses `ChaCha8Rng` seeded with `seed` and switched to stream `i`, so the
//! result depends only on `(seed, samples)` and not on the thread count.

use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::bias::{EventKind, EventSpec};
use crate::cyclespace::{is_eulerian_mask, vertex_masks};
use crate::error::{Error, Result};
use crate::graph::MultiGraph;

pub const STREAMS: u64 = 64;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct McEstimate {
    pub samples: u64,
    pub accepted: u64,
    /// `None` when no sample satisfied `Δ`.
    pub estimate: Option<f64>,
    pub stderr: Option<f64>,
}

#[derive(Default, Clone, Copy)]
struct Tally {
    accepted: u64,
    hits: u64,
}

fn draw(rng: &mut ChaCha8Rng, m: usize) -> u64 {
    let x = rng.next_u64();
    if m == 64 {
        x
    } else {
        x & ((1u64 << m) - 1)
    }
}

fn run_stream(g: &MultiGraph, vm: &[u64], ev: &EventSpec, seed: u64, stream: u64, count: u64) -> Tally {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    let m = g.edge_count();
    let q = ev.q as i64;
    let mut tally = Tally::default();
    for _ in 0..count {
        let a = draw(&mut rng, m);
        let b = draw(&mut rng, m);
        let c = if ev.arity == 3 { draw(&mut rng, m) } else { 0 };
        if !is_eulerian_mask(vm, a ^ b) || (ev.arity == 3 && !is_eulerian_mask(vm, b ^ c)) {
            continue;
        }
        tally.accepted += 1;
        let (na, nb, nc) = (a.count_ones() as i64, b.count_ones() as i64, c.count_ones() as i64);
        let v = match ev.kind() {
            EventKind::Difference => na - nb,
            EventKind::Sum => na + nb,
            EventKind::Triple => na + nb + nc,
        };
        if ev.residues.contains(&(v.rem_euclid(q) as u32)) {
            tally.hits += 1;
        }
    }
    tally
}

/// Estimate with binomial standard error `sqrt((1 - est²)/accepted)`.
pub fn monte_carlo_bias(g: &MultiGraph, ev: &EventSpec, samples: u64, seed: u64) -> Result<McEstimate> {
    if samples == 0 {
        return Err(Error::Precondition("sample count must be positive".into()));
    }
    if g.edge_count() > 64 {
        return Err(Error::size("Monte Carlo edge count", 64));
    }
    let vm = vertex_masks(g);
    let per = samples / STREAMS;
    let extra = samples % STREAMS;
    let tallies: Vec<Tally> = (0..STREAMS)
        .into_par_iter()
        .map(|s| run_stream(g, &vm, ev, seed, s, per + u64::from(s < extra)))
        .collect();
    let (accepted, hits) = tallies.iter().fold((0u64, 0u64), |(a, h), t| (a + t.accepted, h + t.hits));
    if accepted == 0 {
        return Ok(McEstimate { samples, accepted, estimate: None, stderr: None });
    }
    let est = 2.0 * hits as f64 / accepted as f64 - 1.0;
    let stderr = ((1.0 - est * est).max(0.0) / accepted as f64).sqrt();
    Ok(McEstimate { samples, accepted, estimate: Some(est), stderr: Some(stderr) })
}
