//! Resolving `--graph`, `--corpus`, `--rot` and `--tri` into library values.

use std::fs;

use clap::Args;
use eulerpar::corpus::{by_name, plane_coordinates};
use eulerpar::embedding::{facial_triangles, parse_rotation_file, parse_triangle_cover, RotationSystem, TriangleCover};
use eulerpar::{Error, MultiGraph, Result};

#[derive(Args, Debug, Clone, Default)]
pub struct GraphArgs {
    /// Edge-list or JSON graph file (a corpus name is accepted when no such file exists).
    #[arg(long, value_name = "FILE")]
    pub graph: Option<String>,
    /// Named corpus graph.
    #[arg(long, value_name = "NAME", conflicts_with = "graph")]
    pub corpus: Option<String>,
    /// Edge list followed by `rot v: e:h e:t ...` lines.
    #[arg(long, value_name = "FILE")]
    pub rot: Option<String>,
    /// `tri e f g` lines.
    #[arg(long, value_name = "FILE")]
    pub tri: Option<String>,
}

fn read(path: &str) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::Precondition(format!("cannot read {path}: {e}")))
}

fn corpus_graph(name: &str) -> Result<MultiGraph> {
    by_name(name).ok_or_else(|| Error::Precondition(format!("unknown corpus graph \"{name}\"")))
}

impl GraphArgs {
    fn corpus_name(&self) -> Option<&str> {
        match (&self.corpus, &self.graph) {
            (Some(n), _) => Some(n),
            (None, Some(g)) if !std::path::Path::new(g).exists() && by_name(g).is_some() => Some(g),
            _ => None,
        }
    }

    pub fn graph(&self) -> Result<MultiGraph> {
        if let Some(name) = self.corpus_name() {
            return corpus_graph(name);
        }
        if let Some(path) = &self.graph {
            return MultiGraph::parse_auto(&read(path)?);
        }
        if let Some(path) = &self.rot {
            return Ok(parse_rotation_file(&read(path)?)?.0);
        }
        Err(Error::Precondition("a graph is required: pass --graph FILE, --corpus NAME or --rot FILE".into()))
    }

    /// The rotation from `--rot`, else one derived from the corpus drawing.
    pub fn rotation(&self, g: &MultiGraph) -> Result<Option<RotationSystem>> {
        if let Some(path) = &self.rot {
            let (h, rot) = parse_rotation_file(&read(path)?)?;
            if &h != g {
                return Err(Error::Precondition("the rotation file describes a different graph".into()));
            }
            return Ok(Some(rot));
        }
        match self.corpus_name().and_then(plane_coordinates) {
            Some(coords) => Ok(Some(RotationSystem::from_coordinates(g, &coords)?)),
            None => Ok(None),
        }
    }

    /// The cover from `--tri`, else the facial triangles of the rotation, if any.
    pub fn cover(&self, g: &MultiGraph) -> Result<Option<TriangleCover>> {
        if let Some(path) = &self.tri {
            return parse_triangle_cover(&read(path)?).map(Some);
        }
        match self.rotation(g)? {
            Some(rot) if rot.faces(g).iter().all(|f| f.len() == 3) => facial_triangles(g, &rot).map(Some),
            _ => Ok(None),
        }
    }
}
