//! Brute-force oracles shared by the integration tests. Nothing here calls
//! into the library beyond reading a graph's vertices and edges.

#![allow(dead_code)]

pub mod strategies;

use eulerpar::cyclotomic::int;
use eulerpar::{MultiGraph, Rational};
use num::BigInt;

/// Proper `q`-colourings, by depth-first assignment of vertices.
pub fn colourings(g: &MultiGraph, q: u32) -> u64 {
    let n = g.vertex_count();
    if g.loop_count() > 0 {
        return 0;
    }
    // neighbours of v with a smaller index
    let mut back = vec![Vec::new(); n];
    for &(u, v) in g.edges() {
        let (a, b) = if u < v { (u, v) } else { (v, u) };
        back[b].push(a);
    }
    fn go(v: usize, n: usize, q: u32, back: &[Vec<usize>], col: &mut Vec<u32>) -> u64 {
        if v == n {
            return 1;
        }
        let mut total = 0;
        for c in 0..q {
            if back[v].iter().all(|&u| col[u] != c) {
                col[v] = c;
                total += go(v + 1, n, q, back, col);
            }
        }
        total
    }
    go(0, n, q, &back, &mut vec![0; n])
}

/// Nowhere-zero `Z_q`-flows. Edges are assigned in order; a vertex's balance
/// is checked once its last incident edge has a value.
pub fn nowhere_zero_flows(g: &MultiGraph, q: i64) -> u64 {
    let m = g.edge_count();
    let n = g.vertex_count();
    let mut last = vec![None; n];
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        last[u] = Some(e);
        last[v] = Some(e);
    }
    let closes: Vec<Vec<usize>> =
        (0..m).map(|e| (0..n).filter(|&v| last[v] == Some(e)).collect()).collect();
    fn go(e: usize, g: &MultiGraph, q: i64, closes: &[Vec<usize>], net: &mut Vec<i64>) -> u64 {
        if e == g.edge_count() {
            return 1;
        }
        let (u, v) = g.edge(e);
        let mut total = 0;
        for x in 1..q {
            net[u] += x;
            net[v] -= x;
            if closes[e].iter().all(|&w| net[w].rem_euclid(q) == 0) {
                total += go(e + 1, g, q, closes, net);
            }
            net[u] -= x;
            net[v] += x;
        }
        total
    }
    go(0, g, q, &closes, &mut vec![0; n])
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

/// Rank `|V| - k` of the spanning subgraph with edge set `mask`.
pub fn rank(g: &MultiGraph, mask: u64) -> usize {
    let mut parent: Vec<usize> = (0..g.vertex_count()).collect();
    let mut r = 0;
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        if mask >> e & 1 == 1 {
            let (a, b) = (find(&mut parent, u), find(&mut parent, v));
            if a != b {
                parent[a] = b;
                r += 1;
            }
        }
    }
    r
}

/// `T(G; x, y)` from the rank-nullity subset expansion, at integers.
pub fn tutte_at(g: &MultiGraph, x: i64, y: i64) -> Rational {
    let m = g.edge_count();
    assert!(m <= 24, "subset oracle limited to 24 edges");
    let full = (1u64 << m) - 1;
    let rank_e = rank(g, full);
    let mut total = BigInt::from(0);
    for a in 0..=full {
        let ra = rank(g, a);
        let size = a.count_ones() as usize;
        total += num::pow(BigInt::from(x - 1), rank_e - ra) * num::pow(BigInt::from(y - 1), size - ra);
    }
    Rational::from_integer(total)
}

/// Bit `v` of entry `e` marks the endpoints of `e`; used for even-degree tests.
pub fn incidence(g: &MultiGraph) -> Vec<u64> {
    let mut vm = vec![0u64; g.vertex_count()];
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        if u != v {
            vm[u] ^= 1 << e;
            vm[v] ^= 1 << e;
        }
    }
    vm
}

pub fn is_eulerian(vm: &[u64], a: u64) -> bool {
    vm.iter().all(|&m| (m & a).count_ones().is_multiple_of(2))
}

/// `Bias(Σ | Δ)` by enumerating all tuples of subsets: `values` maps the
/// subset sizes to the combined count, `Δ` asks consecutive symmetric
/// differences to be eulerian.
pub fn tuple_bias(g: &MultiGraph, arity: usize, q: i64, set: &[i64], combine: impl Fn(&[i64]) -> i64) -> Rational {
    let (hits, accepted) = tuple_counts(g, arity, q, set, combine);
    Rational::new(BigInt::from(2 * hits - accepted), BigInt::from(accepted))
}

/// `(#Σ∩Δ, #Δ)` behind [`tuple_bias`].
pub fn tuple_counts(g: &MultiGraph, arity: usize, q: i64, set: &[i64], combine: impl Fn(&[i64]) -> i64) -> (i64, i64) {
    let m = g.edge_count();
    assert!(m * arity <= 24, "tuple oracle limited to 2^24 tuples");
    let vm = incidence(g);
    let full = (1u64 << m) - 1;
    let (mut hits, mut accepted) = (0i64, 0i64);
    for code in 0u64..(1u64 << (m * arity)) {
        let sets: Vec<u64> = (0..arity).map(|i| code >> (i * m) & full).collect();
        if !sets.windows(2).all(|w| is_eulerian(&vm, w[0] ^ w[1])) {
            continue;
        }
        accepted += 1;
        let sizes: Vec<i64> = sets.iter().map(|s| s.count_ones() as i64).collect();
        if set.contains(&combine(&sizes).rem_euclid(q)) {
            hits += 1;
        }
    }
    (hits, accepted)
}

/// Whether two multigraphs on at most 8 vertices are isomorphic, by trying
/// every vertex bijection.
pub fn isomorphic(a: &MultiGraph, b: &MultiGraph) -> bool {
    let n = a.vertex_count();
    if n != b.vertex_count() || a.edge_count() != b.edge_count() || n > 8 {
        return false;
    }
    let adj = |g: &MultiGraph| {
        let mut m = vec![vec![0u32; n]; n];
        for &(u, v) in g.edges() {
            m[u][v] += 1;
            if u != v {
                m[v][u] += 1;
            }
        }
        m
    };
    let (ma, mb) = (adj(a), adj(b));
    fn extend(k: usize, perm: &mut Vec<usize>, used: &mut Vec<bool>, ma: &[Vec<u32>], mb: &[Vec<u32>]) -> bool {
        let n = ma.len();
        if k == n {
            return true;
        }
        for t in 0..n {
            if used[t] {
                continue;
            }
            if (0..k).all(|i| ma[i][k] == mb[perm[i]][t]) && ma[k][k] == mb[t][t] {
                perm.push(t);
                used[t] = true;
                if extend(k + 1, perm, used, ma, mb) {
                    return true;
                }
                used[t] = false;
                perm.pop();
            }
        }
        false
    }
    extend(0, &mut Vec::new(), &mut vec![false; n], &ma, &mb)
}

/// Orientation-pair tallies over all `4^{|E|}` pairs. Bit `e` of an
/// orientation is set when it follows the edge-list direction. Returns
/// `(#Γ, #(Σ∩Γ) - #(Σ̄∩Γ))` with `Γ` read through `balanced`, which gets
/// out-degree minus in-degree of the agreement set at each vertex.
pub fn orientation_pairs(g: &MultiGraph, balanced: impl Fn(i64) -> bool + Sync) -> (u64, i64) {
    let m = g.edge_count();
    assert!(m <= 13, "pair oracle limited to 4^13 pairs");
    let full = (1u64 << m) - 1;
    let n = g.vertex_count();
    let (mut tail, mut head) = (vec![0u64; n], vec![0u64; n]);
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        tail[u] |= 1 << e;
        head[v] |= 1 << e;
    }
    let (mut count, mut signed) = (0u64, 0i64);
    for alpha in 0..=full {
        for beta in 0..=full {
            let agree = !(alpha ^ beta) & full;
            let fwd = agree & alpha;
            let rev = agree & !alpha;
            let ok = (0..n).all(|v| {
                let out = (fwd & tail[v]).count_ones() + (rev & head[v]).count_ones();
                let inn = (fwd & head[v]).count_ones() + (rev & tail[v]).count_ones();
                balanced(out as i64 - inn as i64)
            });
            if ok {
                count += 1;
                signed += if agree.count_ones().is_multiple_of(2) { 1 } else { -1 };
            }
        }
    }
    (count, signed)
}

pub fn frac(n: i64, d: i64) -> Rational {
    int(n) / int(d)
}
