//! Rotation systems, face tracing, triangle covers and medial graphs.
//!
//! An edge end is written `e:t` (the tail `u` of `e = (u, v)`) or `e:h`.
//! Faces are the orbits of "cross the edge, then step to the next end in
//! the rotation at the far vertex".

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{parse_edge_list_prefix, MultiGraph};
use crate::orientations::Orientation;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct EdgeEnd {
    pub edge: usize,
    pub head: bool,
}

impl EdgeEnd {
    fn index(self) -> usize {
        2 * self.edge + usize::from(self.head)
    }

    fn opposite(self) -> EdgeEnd {
        EdgeEnd { edge: self.edge, head: !self.head }
    }

    fn vertex(self, g: &MultiGraph) -> usize {
        let (u, v) = g.edge(self.edge);
        if self.head {
            v
        } else {
            u
        }
    }

    fn parse(s: &str, line: usize) -> Result<EdgeEnd> {
        let (e, side) = s.split_once(':').ok_or_else(|| Error::parse(line, format!("bad edge end \"{s}\"")))?;
        let edge = e.parse().map_err(|_| Error::parse(line, format!("bad edge id in \"{s}\"")))?;
        let head = match side {
            "h" => true,
            "t" => false,
            _ => return Err(Error::parse(line, format!("edge end must be e:h or e:t, got \"{s}\""))),
        };
        Ok(EdgeEnd { edge, head })
    }
}

impl fmt::Display for EdgeEnd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.edge, if self.head { "h" } else { "t" })
    }
}

/// Per-vertex cyclic order of incident edge ends.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RotationSystem {
    rotations: Vec<Vec<EdgeEnd>>,
}

impl RotationSystem {
    pub fn new(g: &MultiGraph, rotations: Vec<Vec<EdgeEnd>>) -> Result<Self> {
        if rotations.len() != g.vertex_count() {
            return Err(Error::Embedding(format!(
                "{} vertex rotations for {} vertices",
                rotations.len(),
                g.vertex_count()
            )));
        }
        let mut seen = vec![false; 2 * g.edge_count()];
        for (v, rot) in rotations.iter().enumerate() {
            for &d in rot {
                if d.edge >= g.edge_count() {
                    return Err(Error::Embedding(format!("edge {} out of range at vertex {v}", d.edge)));
                }
                if d.vertex(g) != v {
                    return Err(Error::Embedding(format!("end {d} is not incident with vertex {v}")));
                }
                if std::mem::replace(&mut seen[d.index()], true) {
                    return Err(Error::Embedding(format!("end {d} appears twice")));
                }
            }
        }
        if let Some(i) = seen.iter().position(|&s| !s) {
            let d = EdgeEnd { edge: i / 2, head: i % 2 == 1 };
            return Err(Error::Embedding(format!("end {d} missing from every rotation")));
        }
        Ok(RotationSystem { rotations })
    }

    pub fn rotation(&self, v: usize) -> &[EdgeEnd] {
        &self.rotations[v]
    }

    /// Counterclockwise order of ends around each vertex of a straight-line
    /// drawing. Loops and coincident directions are rejected.
    pub fn from_coordinates(g: &MultiGraph, coords: &[(f64, f64)]) -> Result<Self> {
        if coords.len() != g.vertex_count() {
            return Err(Error::Embedding("one coordinate pair per vertex required".into()));
        }
        let mut rotations = vec![Vec::new(); g.vertex_count()];
        for (e, &(u, v)) in g.edges().iter().enumerate() {
            if u == v {
                return Err(Error::Embedding(format!("loop {e} has no straight-line drawing")));
            }
            rotations[u].push(EdgeEnd { edge: e, head: false });
            rotations[v].push(EdgeEnd { edge: e, head: true });
        }
        for (v, rot) in rotations.iter_mut().enumerate() {
            let angle = |d: &EdgeEnd| {
                let w = d.opposite().vertex(g);
                (coords[w].1 - coords[v].1).atan2(coords[w].0 - coords[v].0)
            };
            rot.sort_by(|a, b| angle(a).total_cmp(&angle(b)));
            for pair in rot.windows(2) {
                if (angle(&pair[0]) - angle(&pair[1])).abs() < 1e-12 {
                    return Err(Error::Embedding(format!("edges leave vertex {v} in the same direction")));
                }
            }
        }
        RotationSystem::new(g, rotations)
    }

    /// Faces as cyclic sequences of ends, each end leaving its vertex.
    pub fn faces(&self, g: &MultiGraph) -> Vec<Vec<EdgeEnd>> {
        let mut next = vec![EdgeEnd { edge: 0, head: false }; 2 * g.edge_count()];
        for rot in &self.rotations {
            for (i, &d) in rot.iter().enumerate() {
                next[d.index()] = rot[(i + 1) % rot.len()];
            }
        }
        let mut done = vec![false; next.len()];
        let mut faces = Vec::new();
        for start in 0..next.len() {
            if done[start] {
                continue;
            }
            let mut face = Vec::new();
            let mut d = EdgeEnd { edge: start / 2, head: start % 2 == 1 };
            while !done[d.index()] {
                done[d.index()] = true;
                face.push(d);
                d = next[d.opposite().index()];
            }
            faces.push(face);
        }
        faces
    }

    /// Euler characteristic per component equals 2.
    pub fn is_plane(&self, g: &MultiGraph) -> bool {
        let (k, _) = g.component_labels();
        let isolated = g.degrees().iter().filter(|&&d| d == 0).count();
        let f = self.faces(g).len() + isolated;
        g.vertex_count() + f == g.edge_count() + 2 * k
    }

    /// Edge list followed by one `rot` line per vertex.
    pub fn format(&self, g: &MultiGraph) -> String {
        let mut out = g.to_edge_list();
        for (v, rot) in self.rotations.iter().enumerate() {
            out.push_str(&format!("rot {v}:"));
            for d in rot {
                out.push_str(&format!(" {d}"));
            }
            out.push('\n');
        }
        out
    }
}

/// Parses an edge list followed by `rot v: e:h e:t ...` lines.
pub fn parse_rotation_file(text: &str) -> Result<(MultiGraph, RotationSystem)> {
    let lines: Vec<&str> = text.lines().collect();
    let (g, next) = parse_edge_list_prefix(&lines)?;
    let mut rotations: Vec<Option<Vec<EdgeEnd>>> = vec![None; g.vertex_count()];
    for (i, raw) in lines.iter().enumerate().skip(next) {
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        let lno = i + 1;
        let rest = line
            .strip_prefix("rot")
            .ok_or_else(|| Error::parse(lno, format!("expected \"rot v: ...\", got \"{line}\"")))?;
        let (v, ends) = rest.split_once(':').ok_or_else(|| Error::parse(lno, "missing ':' after vertex"))?;
        let v: usize = v.trim().parse().map_err(|_| Error::parse(lno, "bad vertex index"))?;
        if v >= g.vertex_count() {
            return Err(Error::parse(lno, format!("vertex {v} out of range")));
        }
        let ends = ends.split_whitespace().map(|s| EdgeEnd::parse(s, lno)).collect::<Result<Vec<_>>>()?;
        if rotations[v].replace(ends).is_some() {
            return Err(Error::parse(lno, format!("second rotation for vertex {v}")));
        }
    }
    let rotations = rotations.into_iter().map(Option::unwrap_or_default).collect();
    let rot = RotationSystem::new(&g, rotations)?;
    Ok((g, rot))
}

/// Unordered edge-id triples.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TriangleCover {
    pub triangles: Vec<[usize; 3]>,
}

impl TriangleCover {
    /// Each triple is a 3-cycle of `g` and each edge lies in exactly
    /// `multiplicity` triples.
    pub fn validate(&self, g: &MultiGraph, multiplicity: usize) -> Result<()> {
        let mut count = vec![0usize; g.edge_count()];
        for t in &self.triangles {
            check_triangle(g, t)?;
            for &e in t {
                count[e] += 1;
            }
        }
        if let Some(e) = count.iter().position(|&c| c != multiplicity) {
            return Err(Error::Embedding(format!(
                "edge {e} lies in {} triangles, expected {multiplicity}",
                count[e]
            )));
        }
        Ok(())
    }

    pub fn format(&self) -> String {
        self.triangles.iter().map(|[a, b, c]| format!("tri {a} {b} {c}\n")).collect()
    }
}

fn check_triangle(g: &MultiGraph, t: &[usize; 3]) -> Result<()> {
    let bad = |why: &str| Error::Embedding(format!("{t:?} is not a triangle: {why}"));
    if let Some(&e) = t.iter().find(|&&e| e >= g.edge_count()) {
        return Err(bad(&format!("edge {e} out of range")));
    }
    if t[0] == t[1] || t[1] == t[2] || t[0] == t[2] {
        return Err(bad("repeated edge"));
    }
    if t.iter().any(|&e| g.is_loop(e)) {
        return Err(bad("contains a loop"));
    }
    let mut ends: Vec<usize> = t.iter().flat_map(|&e| [g.edge(e).0, g.edge(e).1]).collect();
    ends.sort_unstable();
    if !(ends[0] == ends[1] && ends[2] == ends[3] && ends[4] == ends[5] && ends[1] != ends[2] && ends[3] != ends[4]) {
        return Err(bad("edges do not close a 3-cycle"));
    }
    Ok(())
}

/// Parses `tri e f g` lines.
pub fn parse_triangle_cover(text: &str) -> Result<TriangleCover> {
    let mut triangles = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() != 4 || fields[0] != "tri" {
            return Err(Error::parse(i + 1, format!("expected \"tri e f g\", got \"{line}\"")));
        }
        let mut t = [0usize; 3];
        for (slot, s) in t.iter_mut().zip(&fields[1..]) {
            *slot = s.parse().map_err(|_| Error::parse(i + 1, format!("bad edge id \"{s}\"")))?;
        }
        triangles.push(t);
    }
    Ok(TriangleCover { triangles })
}

/// The faces of a triangulated embedding as a cover; any longer face is an error.
pub fn facial_triangles(g: &MultiGraph, rot: &RotationSystem) -> Result<TriangleCover> {
    let mut triangles = Vec::new();
    for face in rot.faces(g) {
        if face.len() != 3 {
            return Err(Error::Embedding(format!("face of length {} is not a triangle", face.len())));
        }
        triangles.push([face[0].edge, face[1].edge, face[2].edge]);
    }
    let cover = TriangleCover { triangles };
    cover.validate(g, 2)?;
    Ok(cover)
}

#[derive(Debug, Clone)]
pub struct Medial {
    pub graph: MultiGraph,
    /// Each black triangle directed along the vertex rotation it surrounds.
    pub gamma: Orientation,
    /// One per vertex of the cubic graph; each medial edge lies in exactly one.
    pub black: TriangleCover,
    /// Whether the rotation system of the cubic graph is a plane embedding.
    pub plane: bool,
}

/// Vertices of the medial graph are the edges of `h`. For a vertex with
/// rotation `(e₀, e₁, e₂)` the black triangle is `e₀ → e₁ → e₂ → e₀`.
pub fn medial(h: &MultiGraph, rot: &RotationSystem) -> Result<Medial> {
    if !h.is_regular(3) {
        return Err(Error::Precondition("medial graph needs a cubic graph".into()));
    }
    if h.loop_count() > 0 {
        return Err(Error::Precondition("medial graph of a cubic graph with loops is not supported".into()));
    }
    let mut edges = Vec::with_capacity(2 * h.edge_count());
    let mut black = Vec::with_capacity(h.vertex_count());
    for v in 0..h.vertex_count() {
        let r = rot.rotation(v);
        let base = edges.len();
        for i in 0..3 {
            edges.push((r[i].edge, r[(i + 1) % 3].edge));
        }
        black.push([base, base + 1, base + 2]);
    }
    let graph = MultiGraph::new(h.edge_count(), edges)?;
    let black = TriangleCover { triangles: black };
    black.validate(&graph, 1)?;
    let gamma = Orientation::ground(graph.edge_count());
    Ok(Medial { graph, gamma, black, plane: rot.is_plane(h) })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::{by_name, plane_coordinates};

    fn plane(name: &str) -> (MultiGraph, RotationSystem) {
        let g = by_name(name).unwrap();
        let rot = RotationSystem::from_coordinates(&g, &plane_coordinates(name).unwrap()).unwrap();
        (g, rot)
    }

    #[test]
    fn plane_drawings_give_plane_rotations() {
        for name in ["K3", "K4", "prism", "octahedron", "C4", "C5"] {
            let (g, rot) = plane(name);
            assert!(rot.is_plane(&g), "{name}");
            let (g2, rot2) = parse_rotation_file(&rot.format(&g)).unwrap();
            assert_eq!((g2, rot2), (g, rot));
        }
    }

    #[test]
    fn facial_covers() {
        let (k4, rot) = plane("K4");
        assert_eq!(facial_triangles(&k4, &rot).unwrap().triangles.len(), 4);
        let (oct, rot) = plane("octahedron");
        assert_eq!(facial_triangles(&oct, &rot).unwrap().triangles.len(), 8);
        let (prism, rot) = plane("prism");
        assert!(facial_triangles(&prism, &rot).is_err());
    }

    #[test]
    fn corrupted_cover_rejected() {
        let (k4, rot) = plane("K4");
        let mut cover = facial_triangles(&k4, &rot).unwrap();
        cover.triangles.push(cover.triangles[0]);
        assert!(cover.validate(&k4, 2).is_err());
        let parsed = parse_triangle_cover(&cover.format()).unwrap();
        assert_eq!(parsed, cover);
        assert!(TriangleCover { triangles: vec![[0, 1, 5]] }.validate(&k4, 1).is_err());
    }

    #[test]
    fn medial_shapes() {
        let (k4, rot) = plane("K4");
        let m = medial(&k4, &rot).unwrap();
        assert_eq!((m.graph.vertex_count(), m.graph.edge_count()), (6, 12));
        assert!(m.graph.is_regular(4) && m.plane);
        assert_eq!(m.black.triangles.len(), 4);
        let (prism, rot) = plane("prism");
        let m = medial(&prism, &rot).unwrap();
        assert_eq!((m.graph.vertex_count(), m.graph.edge_count()), (9, 18));
        assert!(m.graph.is_regular(4));
        let p = crate::corpus::path(4);
        let rot = RotationSystem::from_coordinates(&p, &[(0.0, 0.0), (1.0, 0.0), (2.0, 0.0), (3.0, 0.0)]).unwrap();
        assert!(medial(&p, &rot).is_err());
    }

    #[test]
    fn invalid_rotations() {
        let k3 = by_name("K3").unwrap();
        let text = format!("{}rot 0: 0:t 2:h\nrot 1: 0:h 1:t\nrot 2: 1:h 1:h\n", k3.to_edge_list());
        assert!(parse_rotation_file(&text).is_err());
        let text = format!("{}rot 0: 0:t 2:h\nrot 1: 0:h 1:t\n", k3.to_edge_list());
        assert!(parse_rotation_file(&text).is_err());
    }
}
