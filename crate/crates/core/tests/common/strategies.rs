//! Random small multigraphs for the property tests.

use eulerpar::embedding::{EdgeEnd, RotationSystem};
use eulerpar::MultiGraph;
use proptest::prelude::*;

/// Any multigraph, loops and parallel edges allowed.
pub fn graph(max_vertices: usize, max_edges: usize) -> impl Strategy<Value = MultiGraph> {
    (1..=max_vertices).prop_flat_map(move |n| {
        prop::collection::vec((0..n, 0..n), 0..=max_edges).prop_map(move |edges| MultiGraph::new(n, edges).unwrap())
    })
}

/// A closed walk, so every degree is even.
pub fn eulerian_graph(max_vertices: usize, max_edges: usize) -> impl Strategy<Value = MultiGraph> {
    (1..=max_vertices).prop_flat_map(move |n| {
        prop::collection::vec(0..n, 1..=max_edges).prop_map(move |walk| {
            let edges = (0..walk.len()).map(|i| (walk[i], walk[(i + 1) % walk.len()])).collect();
            MultiGraph::new(n, edges).unwrap()
        })
    })
}

/// Union of two Hamiltonian cycles on 3 to `max_vertices` vertices.
pub fn four_regular(max_vertices: usize) -> impl Strategy<Value = MultiGraph> {
    (3..=max_vertices).prop_flat_map(|n| {
        let perm = || Just((0..n).collect::<Vec<usize>>()).prop_shuffle();
        (perm(), perm()).prop_map(move |(a, b)| {
            let mut edges = Vec::new();
            for p in [a, b] {
                for i in 0..n {
                    edges.push((p[i], p[(i + 1) % n]));
                }
            }
            MultiGraph::new(n, edges).unwrap()
        })
    })
}

/// Loopless cubic multigraph from a random pairing of half-edges, with a
/// random rotation at every vertex.
pub fn cubic_with_rotation(max_vertices: usize) -> impl Strategy<Value = (MultiGraph, RotationSystem)> {
    (1..=max_vertices / 2)
        .prop_flat_map(|half| {
            let n = 2 * half;
            let slots = Just((0..3 * n).map(|s| s / 3).collect::<Vec<usize>>()).prop_shuffle();
            (Just(n), slots, prop::collection::vec(any::<bool>(), n))
        })
        .prop_filter("loopless", |(_, slots, _)| slots.chunks(2).all(|p| p[0] != p[1]))
        .prop_map(|(n, slots, flips)| {
            let edges: Vec<(usize, usize)> = slots.chunks(2).map(|p| (p[0], p[1])).collect();
            let g = MultiGraph::new(n, edges).unwrap();
            let mut rot = vec![Vec::new(); n];
            for (e, &(u, v)) in g.edges().iter().enumerate() {
                rot[u].push(EdgeEnd { edge: e, head: false });
                rot[v].push(EdgeEnd { edge: e, head: true });
            }
            // two cyclic orders on three ends
            for (ends, flip) in rot.iter_mut().zip(flips) {
                if flip {
                    ends.swap(1, 2);
                }
            }
            let rs = RotationSystem::new(&g, rot).unwrap();
            (g, rs)
        })
}
