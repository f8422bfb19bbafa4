//! Deterministic named test graphs.
//!
//! Edge orders are fixed and documented per generator; every downstream
//! golden value depends on them.

use crate::graph::MultiGraph;

/// Names accepted by [`by_name`], in the order [`corpus`] returns them.
pub const NAMES: &[&str] = &[
    "K3",
    "K4",
    "K5",
    "C4",
    "C5",
    "K23",
    "K33",
    "prism",
    "octahedron",
    "petersen",
    "loop",
    "edge",
    "K3+K2",
];

/// Extra multigraphs used by the orientation code; reachable via [`by_name`]
/// but not part of [`corpus`].
pub const EXTRA_NAMES: &[&str] = &["path3", "C4x2", "2K3x2"];

fn g(n: usize, edges: &[(usize, usize)]) -> MultiGraph {
    MultiGraph::new(n, edges.to_vec()).expect("corpus graph endpoints are in range")
}

/// Complete graph; edges `(i,j)`, `i<j`, in lexicographic order.
pub fn complete(n: usize) -> MultiGraph {
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            edges.push((i, j));
        }
    }
    g(n, &edges)
}

/// Cycle `0-1-...-(n-1)-0`; edge `i` is `(i, i+1 mod n)`.
pub fn cycle(n: usize) -> MultiGraph {
    g(n, &(0..n).map(|i| (i, (i + 1) % n)).collect::<Vec<_>>())
}

/// Path `0-1-...-(n-1)`.
pub fn path(n: usize) -> MultiGraph {
    g(n, &(1..n).map(|i| (i - 1, i)).collect::<Vec<_>>())
}

/// Complete bipartite graph with parts `0..a` and `a..a+b`, lexicographic edges.
pub fn complete_bipartite(a: usize, b: usize) -> MultiGraph {
    let mut edges = Vec::new();
    for i in 0..a {
        for j in a..a + b {
            edges.push((i, j));
        }
    }
    g(a + b, &edges)
}

/// Triangles `0-1-2` and `3-4-5` (edges 0..6) then rungs `i - i+3` (edges 6..9).
pub fn prism() -> MultiGraph {
    g(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)])
}

/// Antipodal pairs are `{0,1}, {2,3}, {4,5}`; edges are all other pairs in
/// lexicographic order.
pub fn octahedron() -> MultiGraph {
    let mut edges = Vec::new();
    for i in 0..6 {
        for j in i + 1..6 {
            if j != (i ^ 1) {
                edges.push((i, j));
            }
        }
    }
    g(6, &edges)
}

/// Outer 5-cycle `i - i+1` (edges 0..5), spokes `i - i+5` (edges 5..10),
/// inner pentagram `5+i - 5+(i+2 mod 5)` (edges 10..15).
pub fn petersen() -> MultiGraph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
    }
    for i in 0..5 {
        edges.push((i, i + 5));
    }
    for i in 0..5 {
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    g(10, &edges)
}

/// Every edge of `h` repeated `times` times consecutively.
pub fn multiply_edges(h: &MultiGraph, times: usize) -> MultiGraph {
    let mut edges = Vec::new();
    for &e in h.edges() {
        for _ in 0..times {
            edges.push(e);
        }
    }
    g(h.vertex_count(), &edges)
}

pub fn by_name(name: &str) -> Option<MultiGraph> {
    Some(match name {
        "K3" => cycle(3),
        "K4" => complete(4),
        "K5" => complete(5),
        "C4" => cycle(4),
        "C5" => cycle(5),
        "K23" => complete_bipartite(2, 3),
        "K33" => complete_bipartite(3, 3),
        "prism" => prism(),
        "octahedron" => octahedron(),
        "petersen" => petersen(),
        "loop" => g(1, &[(0, 0)]),
        "edge" => g(2, &[(0, 1)]),
        "K3+K2" => complete(3).disjoint_union(&g(2, &[(0, 1)])),
        "path3" => path(3),
        "C4x2" => multiply_edges(&cycle(4), 2),
        "2K3x2" => {
            let t = multiply_edges(&complete(3), 2);
            t.disjoint_union(&t)
        }
        _ => return None,
    })
}

/// The named corpus in [`NAMES`] order.
pub fn corpus() -> Vec<(&'static str, MultiGraph)> {
    NAMES.iter().map(|&n| (n, by_name(n).expect("listed name"))).collect()
}

/// Straight-line plane drawings for the plane corpus graphs. Rotations are
/// derived from these by sorting edge ends by angle.
pub fn plane_coordinates(name: &str) -> Option<Vec<(f64, f64)>> {
    let polar = |r: f64, deg: f64| {
        let t = deg.to_radians();
        (r * t.cos(), r * t.sin())
    };
    Some(match name {
        "K3" => vec![polar(1.0, 90.0), polar(1.0, 210.0), polar(1.0, 330.0)],
        "K4" => vec![(0.0, 0.0), polar(1.0, 90.0), polar(1.0, 210.0), polar(1.0, 330.0)],
        "prism" => vec![
            polar(1.0, 90.0),
            polar(1.0, 210.0),
            polar(1.0, 330.0),
            polar(2.0, 90.0),
            polar(2.0, 210.0),
            polar(2.0, 330.0),
        ],
        "octahedron" => vec![
            polar(0.5, 90.0),
            polar(2.0, 270.0),
            polar(0.5, 210.0),
            polar(2.0, 30.0),
            polar(0.5, 330.0),
            polar(2.0, 150.0),
        ],
        "C4" => vec![(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0)],
        "C5" => (0..5).map(|i| polar(1.0, 72.0 * i as f64)).collect(),
        _ => return None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::RankProfile;

    #[test]
    fn sizes_match_documentation() {
        let k4 = by_name("K4").unwrap();
        assert_eq!((k4.vertex_count(), k4.edge_count()), (4, 6));
        let oct = by_name("octahedron").unwrap();
        assert_eq!((oct.vertex_count(), oct.edge_count()), (6, 12));
        assert!(oct.is_regular(4));
        let pet = by_name("petersen").unwrap();
        assert_eq!((pet.vertex_count(), pet.edge_count()), (10, 15));
        assert!(pet.is_regular(3));
        assert!(by_name("prism").unwrap().is_regular(3));
        assert!(by_name("K33").unwrap().is_regular(3));
        assert!(by_name("C4x2").unwrap().is_regular(4));
        let two = by_name("2K3x2").unwrap();
        assert!(two.is_regular(4));
        assert_eq!(two.rank_profile().k, 2);
        assert_eq!(by_name("K3+K2").unwrap().rank_profile(), RankProfile { k: 2, r: 3, n: 1 });
    }

    #[test]
    fn profiles_are_consistent() {
        for (name, g) in corpus() {
            let p = g.rank_profile();
            assert_eq!(p.r + p.n, g.edge_count(), "{name}");
            assert_eq!(p.r + p.k, g.vertex_count(), "{name}");
        }
    }
}
