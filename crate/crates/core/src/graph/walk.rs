use super::{DartId, PlanarEmbeddedGraph, VertexId};
use crate::error::{Error, Result};

/// A sequence of head-to-origin incident darts. A walk with no darts sits at
/// `start`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Walk {
    pub start: VertexId,
    pub darts: Vec<DartId>,
}

impl Walk {
    pub fn empty(start: VertexId) -> Self {
        Walk {
            start,
            darts: Vec::new(),
        }
    }

    /// Walk through consecutive vertices; each consecutive pair must be an edge.
    pub fn from_vertices(g: &PlanarEmbeddedGraph, vertices: &[VertexId]) -> Result<Self> {
        let start = *vertices.first().ok_or(Error::EmptySource)?;
        g.check_vertex(start)?;
        let mut darts = Vec::with_capacity(vertices.len().saturating_sub(1));
        for (i, pair) in vertices.windows(2).enumerate() {
            let d = g.dart(pair[0], pair[1]).ok_or_else(|| Error::InvalidGraph {
                at: format!("walk[{i}]"),
                msg: format!("{} -> {} is not an edge", pair[0], pair[1]),
            })?;
            darts.push(d);
        }
        Ok(Walk { start, darts })
    }

    pub fn len(&self) -> usize {
        self.darts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.darts.is_empty()
    }

    pub fn end(&self, g: &PlanarEmbeddedGraph) -> VertexId {
        self.darts.last().map_or(self.start, |&d| g.head(d))
    }

    pub fn is_closed(&self, g: &PlanarEmbeddedGraph) -> bool {
        self.end(g) == self.start
    }

    /// Checks incidence of consecutive darts.
    pub fn is_valid(&self, g: &PlanarEmbeddedGraph) -> bool {
        let mut at = self.start;
        for &d in &self.darts {
            if g.origin(d) != at {
                return false;
            }
            at = g.head(d);
        }
        true
    }

    /// Vertices visited, `len() + 1` entries.
    pub fn vertices(&self, g: &PlanarEmbeddedGraph) -> Vec<VertexId> {
        let mut out = Vec::with_capacity(self.darts.len() + 1);
        out.push(self.start);
        out.extend(self.darts.iter().map(|&d| g.head(d)));
        out
    }

    /// Appends `other`, which must start where `self` ends.
    pub fn extend(&mut self, g: &PlanarEmbeddedGraph, other: &Walk) -> Result<()> {
        if self.end(g) != other.start {
            return Err(Error::InvalidGraph {
                at: "walk".into(),
                msg: format!("cannot join walk ending at {} to walk starting at {}", self.end(g), other.start),
            });
        }
        self.darts.extend_from_slice(&other.darts);
        Ok(())
    }

    pub fn reversed(&self, g: &PlanarEmbeddedGraph) -> Walk {
        Walk {
            start: self.end(g),
            darts: self.darts.iter().rev().map(|&d| g.twin(d)).collect(),
        }
    }
}
