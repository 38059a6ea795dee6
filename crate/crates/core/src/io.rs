//! JSON graph files.
//!
//! ```json
//! {"vertices": [0, 1, 2],
//!  "rotations": {"0": [1, 2], "1": [2, 0], "2": [0, 1]},
//!  "outer_face_dart": [0, 2]}
//! ```
//!
//! Vertex ids must be exactly `0..n`. Rotations list neighbors in
//! counterclockwise order. An optional `"coords": {"id": [x, y]}` object
//! carries a drawing used only for rendering. Output is canonical: keys in
//! numeric order, one compact line.

use std::collections::BTreeMap;
use std::io::{Read, Write};

use serde::ser::{SerializeMap, Serializer};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::PlanarEmbeddedGraph;

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct GraphFileIn {
    vertices: Vec<u64>,
    rotations: BTreeMap<String, Vec<u64>>,
    outer_face_dart: [u64; 2],
    #[serde(default)]
    coords: Option<BTreeMap<String, [f64; 2]>>,
}

struct NumericMap<'a, T>(&'a [T]);

impl<T: Serialize> Serialize for NumericMap<'_, T> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut m = s.serialize_map(Some(self.0.len()))?;
        for (i, v) in self.0.iter().enumerate() {
            m.serialize_entry(&i.to_string(), v)?;
        }
        m.end()
    }
}

#[derive(Serialize)]
struct GraphFileOut<'a> {
    vertices: Vec<u32>,
    rotations: NumericMap<'a, Vec<u32>>,
    outer_face_dart: [u32; 2],
    #[serde(skip_serializing_if = "Option::is_none")]
    coords: Option<NumericMap<'a, [f64; 2]>>,
}

fn invalid(at: impl Into<String>, msg: impl Into<String>) -> Error {
    Error::InvalidGraph {
        at: at.into(),
        msg: msg.into(),
    }
}

fn parse_key(section: &str, key: &str, n: usize) -> Result<usize> {
    let id: usize = key
        .parse()
        .map_err(|_| invalid(format!("{section}.{key}"), "key is not a vertex id"))?;
    if id >= n {
        return Err(invalid(format!("{section}.{key}"), "unknown vertex"));
    }
    Ok(id)
}

pub fn parse_graph(text: &str) -> Result<PlanarEmbeddedGraph> {
    let raw: GraphFileIn = serde_json::from_str(text).map_err(|e| Error::Parse {
        line: e.line(),
        column: e.column(),
        msg: e.to_string(),
    })?;
    let n = raw.vertices.len();
    let mut seen = vec![false; n];
    for (i, &v) in raw.vertices.iter().enumerate() {
        if v as usize >= n || seen[v as usize] {
            return Err(invalid(format!("vertices[{i}]"), format!("ids must be exactly 0..{n}, found {v}")));
        }
        seen[v as usize] = true;
    }
    let mut rotations = vec![None; n];
    for (key, list) in &raw.rotations {
        let v = parse_key("rotations", key, n)?;
        let mut out = Vec::with_capacity(list.len());
        for (i, &w) in list.iter().enumerate() {
            if w as usize >= n {
                return Err(invalid(format!("rotations.{key}[{i}]"), format!("unknown neighbor {w}")));
            }
            out.push(w as u32);
        }
        rotations[v] = Some(out);
    }
    let rotations: Vec<Vec<u32>> = rotations
        .into_iter()
        .enumerate()
        .map(|(v, r)| r.ok_or_else(|| invalid(format!("rotations.{v}"), "missing rotation")))
        .collect::<Result<_>>()?;
    let [o, h] = raw.outer_face_dart;
    if o as usize >= n || h as usize >= n {
        return Err(invalid("outer_face_dart", "unknown vertex"));
    }
    let g = PlanarEmbeddedGraph::from_rotations(rotations, (o as u32, h as u32))?;
    match raw.coords {
        None => Ok(g),
        Some(map) => {
            let mut coords = vec![None; n];
            for (key, xy) in map {
                coords[parse_key("coords", &key, n)?] = Some(xy);
            }
            let coords = coords
                .into_iter()
                .enumerate()
                .map(|(v, c)| c.ok_or_else(|| invalid(format!("coords.{v}"), "missing coordinate")))
                .collect::<Result<Vec<_>>>()?;
            g.with_coords(coords)
        }
    }
}

pub fn read_graph<R: Read>(mut source: R) -> Result<PlanarEmbeddedGraph> {
    let mut text = String::new();
    source.read_to_string(&mut text)?;
    parse_graph(&text)
}

/// Canonical serialization, terminated by a newline.
pub fn graph_to_string(g: &PlanarEmbeddedGraph) -> String {
    let rotations = g.rotations();
    let d = g.outer_dart();
    let out = GraphFileOut {
        vertices: (0..g.num_vertices() as u32).collect(),
        rotations: NumericMap(&rotations),
        outer_face_dart: [g.origin(d).0, g.head(d).0],
        coords: g.coords().map(NumericMap),
    };
    let mut s = serde_json::to_string(&out).expect("graph serializes");
    s.push('\n');
    s
}

pub fn write_graph<W: Write>(g: &PlanarEmbeddedGraph, mut sink: W) -> Result<()> {
    sink.write_all(graph_to_string(g).as_bytes())?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::grid;

    #[test]
    fn grid_roundtrip_is_byte_stable() {
        let g = grid(5, 5).unwrap();
        let a = graph_to_string(&g);
        let h = parse_graph(&a).unwrap();
        assert_eq!(graph_to_string(&h), a);
        assert_eq!(h.outer_face(), g.outer_face());
    }

    #[test]
    fn neighbor_that_is_not_an_edge_is_rejected() {
        let text = r#"{"vertices":[0,1,2],"rotations":{"0":[1,2],"1":[0],"2":[0,1]},"outer_face_dart":[0,1]}"#;
        let err = parse_graph(text).unwrap_err();
        assert!(matches!(err, Error::InvalidGraph { .. }), "{err}");
    }

    #[test]
    fn syntax_errors_carry_a_position() {
        let err = parse_graph("{\"vertices\": [0, 1],\n \"rotations\": {").unwrap_err();
        match err {
            Error::Parse { line, .. } => assert_eq!(line, 2),
            other => panic!("unexpected {other}"),
        }
    }

    #[test]
    fn sparse_ids_are_rejected() {
        let text = r#"{"vertices":[0,5],"rotations":{"0":[5],"5":[0]},"outer_face_dart":[0,5]}"#;
        assert!(parse_graph(text).is_err());
    }

    #[test]
    fn k5_is_rejected_by_euler() {
        let mut rot = String::new();
        for v in 0..5 {
            let nb: Vec<String> = (0..5).filter(|&w| w != v).map(|w| w.to_string()).collect();
            rot.push_str(&format!("{}\"{v}\":[{}]", if v > 0 { "," } else { "" }, nb.join(",")));
        }
        let text = format!(r#"{{"vertices":[0,1,2,3,4],"rotations":{{{rot}}},"outer_face_dart":[0,1]}}"#);
        let err = parse_graph(&text).unwrap_err();
        assert!(err.to_string().contains("Euler"), "{err}");
    }
}
