//! Rotation-system planar embeddings.
//!
//! A graph is stored as a rotation system: for each vertex, the cyclic
//! clockwise order of its neighbors. Faces are derived by dart tracing
//! with a fixed convention: the successor of the dart `u -> v` is the dart
//! `v -> w` where `w` immediately follows `u` in the clockwise rotation at
//! `v`. Every structural query (face degrees, weak/semi-weak neighbors,
//! the E/S classifications) is answered from this data alone.

mod classify;
mod generate;
pub mod solids;

pub use classify::{classify_neighbor, NeighborClass, SpecialClass};
pub use generate::{generate_planar, generate_planar_sparse};

use std::collections::HashMap;
use std::fmt::Write as _;

/// Errors raised by parsing, construction, and structural queries.
#[derive(Debug, thiserror::Error)]
pub enum GraphError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("vertex {u} lists {v} but {v} does not list {u}")]
    Asymmetric { u: u32, v: u32 },
    #[error("duplicate neighbor {v} in the rotation of {u}")]
    DuplicateNeighbor { u: u32, v: u32 },
    #[error("self-loop at vertex {0}")]
    SelfLoop(u32),
    #[error("rotation of {u} mentions unknown vertex {v}")]
    UnknownVertex { u: u32, v: u32 },
    #[error("duplicate vertex id {0}")]
    DuplicateVertex(u32),
    #[error("unknown vertex id {0}")]
    NoSuchVertex(u32),
    #[error("({0}, {1}) is not an edge")]
    NotAnEdge(u32, u32),
    #[error("graph is empty")]
    Empty,
    #[error("graph is disconnected")]
    Disconnected,
    #[error("Euler check failed: |V|={v} |E|={e} |F|={f}")]
    EulerViolation { v: usize, e: usize, f: usize },
    #[error("generator could not satisfy the constraints: {0}")]
    Unsatisfiable(String),
}

/// A face, recorded as the cyclic sequence of darts traced around it.
///
/// The face degree is the walk length; a vertex appearing twice on the
/// walk counts twice (this multiplicity matters for the discharging
/// rules R1/R2).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Face {
    /// Darts `(u, v)` as internal indices, in trace order.
    pub walk: Vec<(usize, usize)>,
}

impl Face {
    pub fn degree(&self) -> usize {
        self.walk.len()
    }

    /// Source vertices of the walk darts (with multiplicity).
    pub fn vertices(&self) -> impl Iterator<Item = usize> + '_ {
        self.walk.iter().map(|&(u, _)| u)
    }
}

/// A planar embedding given by clockwise rotations.
#[derive(Debug, Clone)]
pub struct EmbeddedGraph {
    ids: Vec<u32>,
    index: HashMap<u32, usize>,
    rotation: Vec<Vec<usize>>,
    faces: Vec<Face>,
    face_of: HashMap<(usize, usize), usize>,
}

impl EmbeddedGraph {
    /// Build from `(vertex id, clockwise neighbor ids)` rows.
    ///
    /// Validates ids, symmetry of the adjacency relation, and the absence
    /// of loops and repeated neighbors, then traces all faces.
    pub fn from_rotations(rows: Vec<(u32, Vec<u32>)>) -> Result<Self, GraphError> {
        if rows.is_empty() {
            return Err(GraphError::Empty);
        }
        let mut ids = Vec::with_capacity(rows.len());
        let mut index = HashMap::new();
        for (id, _) in &rows {
            if index.insert(*id, ids.len()).is_some() {
                return Err(GraphError::DuplicateVertex(*id));
            }
            ids.push(*id);
        }
        let mut rotation = Vec::with_capacity(rows.len());
        for (id, nbrs) in &rows {
            let mut row = Vec::with_capacity(nbrs.len());
            for &n in nbrs {
                if n == *id {
                    return Err(GraphError::SelfLoop(*id));
                }
                let j = *index
                    .get(&n)
                    .ok_or(GraphError::UnknownVertex { u: *id, v: n })?;
                if row.contains(&j) {
                    return Err(GraphError::DuplicateNeighbor { u: *id, v: n });
                }
                row.push(j);
            }
            rotation.push(row);
        }
        // Symmetry: u lists v iff v lists u.
        for (u, row) in rotation.iter().enumerate() {
            for &v in row {
                if !rotation[v].contains(&u) {
                    return Err(GraphError::Asymmetric {
                        u: ids[u],
                        v: ids[v],
                    });
                }
            }
        }
        let (faces, face_of) = trace_faces(&rotation);
        Ok(EmbeddedGraph {
            ids,
            index,
            rotation,
            faces,
            face_of,
        })
    }

    /// Parse the text format: one line per vertex,
    /// `<id>: <n1> <n2> ... <nk>` with neighbors in clockwise order.
    /// `#` starts a comment; blank lines are ignored.
    pub fn parse(text: &str) -> Result<Self, GraphError> {
        let mut rows: Vec<(u32, Vec<u32>)> = Vec::new();
        let mut lines: HashMap<u32, usize> = HashMap::new();
        for (lineno, raw) in text.lines().enumerate() {
            let lineno = lineno + 1;
            let line = match raw.find('#') {
                Some(i) => &raw[..i],
                None => raw,
            }
            .trim();
            if line.is_empty() {
                continue;
            }
            let (head, tail) = line.split_once(':').ok_or_else(|| GraphError::Parse {
                line: lineno,
                msg: "expected `<id>: <neighbors>`".into(),
            })?;
            let id: u32 = head.trim().parse().map_err(|_| GraphError::Parse {
                line: lineno,
                msg: format!("invalid vertex id `{}`", head.trim()),
            })?;
            if id == 0 {
                return Err(GraphError::Parse {
                    line: lineno,
                    msg: "vertex ids are positive integers".into(),
                });
            }
            let mut nbrs = Vec::new();
            for tok in tail.split_whitespace() {
                let n: u32 = tok.parse().map_err(|_| GraphError::Parse {
                    line: lineno,
                    msg: format!("invalid neighbor id `{tok}`"),
                })?;
                nbrs.push(n);
            }
            if lines.insert(id, lineno).is_some() {
                return Err(GraphError::Parse {
                    line: lineno,
                    msg: format!("duplicate vertex id {id}"),
                });
            }
            rows.push((id, nbrs));
        }
        Self::from_rotations(rows).map_err(|e| match &e {
            GraphError::Asymmetric { u, .. }
            | GraphError::DuplicateNeighbor { u, .. }
            | GraphError::SelfLoop(u)
            | GraphError::UnknownVertex { u, .. } => GraphError::Parse {
                line: lines.get(u).copied().unwrap_or(0),
                msg: e.to_string(),
            },
            _ => e,
        })
    }

    /// Serialize back to the text format, reproducing the rotation order
    /// (and the vertex line order) bit-exactly.
    pub fn serialize(&self) -> String {
        let mut out = String::new();
        for (i, &id) in self.ids.iter().enumerate() {
            let _ = write!(out, "{id}:");
            for &j in &self.rotation[i] {
                let _ = write!(out, " {}", self.ids[j]);
            }
            out.push('\n');
        }
        out
    }

    pub fn vertex_count(&self) -> usize {
        self.ids.len()
    }

    pub fn edge_count(&self) -> usize {
        self.rotation.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    /// External id of an internal index.
    pub fn id(&self, v: usize) -> u32 {
        self.ids[v]
    }

    /// Internal index of an external id.
    pub fn index_of(&self, id: u32) -> Result<usize, GraphError> {
        self.index.get(&id).copied().ok_or(GraphError::NoSuchVertex(id))
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rotation[v].len()
    }

    /// Clockwise rotation at `v` (internal indices).
    pub fn rotation(&self, v: usize) -> &[usize] {
        &self.rotation[v]
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.rotation[u].contains(&v)
    }

    /// Undirected edges as internal index pairs `(u, v)` with `u < v`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (u, row) in self.rotation.iter().enumerate() {
            for &v in row {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    /// Index of the face traced through the dart `u -> v`.
    pub fn face_of_dart(&self, u: usize, v: usize) -> Result<usize, GraphError> {
        self.face_of
            .get(&(u, v))
            .copied()
            .ok_or_else(|| GraphError::NotAnEdge(self.ids[u], self.ids[v]))
    }

    /// The two faces incident to the undirected edge `(u, v)`.
    pub fn edge_faces(&self, u: usize, v: usize) -> Result<(usize, usize), GraphError> {
        Ok((self.face_of_dart(u, v)?, self.face_of_dart(v, u)?))
    }

    /// Third vertex of the triangle traced through `u -> v`, if that face
    /// is a triangle.
    pub fn triangle_apex(&self, u: usize, v: usize) -> Result<Option<usize>, GraphError> {
        let f = &self.faces[self.face_of_dart(u, v)?];
        if f.degree() != 3 {
            return Ok(None);
        }
        Ok(f.vertices().find(|&w| w != u && w != v))
    }

    /// Vertex that immediately follows `u` in the clockwise rotation at `v`.
    pub fn next_in_rotation(&self, v: usize, u: usize) -> Result<usize, GraphError> {
        let row = &self.rotation[v];
        let pos = row
            .iter()
            .position(|&x| x == u)
            .ok_or_else(|| GraphError::NotAnEdge(self.ids[u], self.ids[v]))?;
        Ok(row[(pos + 1) % row.len()])
    }

    /// Vertex that immediately precedes `u` in the clockwise rotation at `v`.
    pub fn prev_in_rotation(&self, v: usize, u: usize) -> Result<usize, GraphError> {
        let row = &self.rotation[v];
        let pos = row
            .iter()
            .position(|&x| x == u)
            .ok_or_else(|| GraphError::NotAnEdge(self.ids[u], self.ids[v]))?;
        Ok(row[(pos + row.len() - 1) % row.len()])
    }

    pub fn is_connected(&self) -> bool {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut cnt = 1;
        while let Some(u) = stack.pop() {
            for &v in &self.rotation[u] {
                if !seen[v] {
                    seen[v] = true;
                    cnt += 1;
                    stack.push(v);
                }
            }
        }
        cnt == n
    }

    /// Check Euler's formula `|V| - |E| + |F| = 2` (connected graphs).
    pub fn euler_check(&self) -> Result<(), GraphError> {
        if !self.is_connected() {
            return Err(GraphError::Disconnected);
        }
        let (v, e, f) = (self.vertex_count(), self.edge_count(), self.face_count());
        if v + f != e + 2 {
            return Err(GraphError::EulerViolation { v, e, f });
        }
        Ok(())
    }

    /// The mirror embedding: every rotation reversed. Faces correspond
    /// one-to-one (traced in the opposite direction).
    pub fn mirror(&self) -> EmbeddedGraph {
        let rows = self
            .ids
            .iter()
            .enumerate()
            .map(|(i, &id)| {
                (
                    id,
                    self.rotation[i]
                        .iter()
                        .rev()
                        .map(|&j| self.ids[j])
                        .collect(),
                )
            })
            .collect();
        EmbeddedGraph::from_rotations(rows).expect("mirror of a valid embedding is valid")
    }

    /// BFS distances from a set of source vertices (internal indices).
    pub fn distances_from(&self, sources: &[usize]) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.vertex_count()];
        let mut queue = std::collections::VecDeque::new();
        for &s in sources {
            if dist[s] == usize::MAX {
                dist[s] = 0;
                queue.push_back(s);
            }
        }
        while let Some(u) = queue.pop_front() {
            for &v in &self.rotation[u] {
                if dist[v] == usize::MAX {
                    dist[v] = dist[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        dist
    }
}

/// Trace all faces of a rotation system.
///
/// Successor of dart `(u, v)`: `(v, w)` with `w` the clockwise successor
/// of `u` at `v`.
fn trace_faces(rotation: &[Vec<usize>]) -> (Vec<Face>, HashMap<(usize, usize), usize>) {
    let mut faces = Vec::new();
    let mut face_of = HashMap::new();
    for u in 0..rotation.len() {
        for &v in &rotation[u] {
            if face_of.contains_key(&(u, v)) {
                continue;
            }
            let mut walk = Vec::new();
            let (mut a, mut b) = (u, v);
            loop {
                walk.push((a, b));
                face_of.insert((a, b), faces.len());
                let pos = rotation[b].iter().position(|&x| x == a).unwrap();
                let w = rotation[b][(pos + 1) % rotation[b].len()];
                a = b;
                b = w;
                if (a, b) == (u, v) {
                    break;
                }
            }
            faces.push(Face { walk });
        }
    }
    (faces, face_of)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn tetrahedron_faces() {
        let g = solids::tetrahedron();
        assert_eq!(g.vertex_count(), 4);
        assert_eq!(g.edge_count(), 6);
        assert_eq!(g.face_count(), 4);
        assert!(g.faces().iter().all(|f| f.degree() == 3));
        g.euler_check().unwrap();
    }

    #[test]
    fn four_cycle_two_quadrilateral_faces() {
        let g = EmbeddedGraph::parse("1: 2 4\n2: 3 1\n3: 4 2\n4: 1 3\n").unwrap();
        assert_eq!(g.face_count(), 2);
        assert!(g.faces().iter().all(|f| f.degree() == 4));
        g.euler_check().unwrap();
    }

    #[test]
    fn octahedron_eight_triangles() {
        let g = solids::octahedron();
        assert_eq!(g.face_count(), 8);
        assert!(g.faces().iter().all(|f| f.degree() == 3));
        g.euler_check().unwrap();
    }

    #[test]
    fn all_platonic_solids_pass_euler() {
        for g in [
            solids::tetrahedron(),
            solids::cube(),
            solids::octahedron(),
            solids::dodecahedron(),
            solids::icosahedron(),
        ] {
            g.euler_check().unwrap();
        }
        assert_eq!(solids::dodecahedron().face_count(), 12);
        assert_eq!(solids::icosahedron().face_count(), 20);
        assert!(solids::cube().faces().iter().all(|f| f.degree() == 4));
    }

    #[test]
    fn parse_rejects_asymmetric_lists() {
        let err = EmbeddedGraph::parse("1: 2\n2:\n").unwrap_err();
        assert!(matches!(err, GraphError::Parse { line: 1, .. }), "{err}");
    }

    #[test]
    fn parse_rejects_bad_tokens_with_line_numbers() {
        let err = EmbeddedGraph::parse("1: 2\nbogus\n").unwrap_err();
        assert!(matches!(err, GraphError::Parse { line: 2, .. }));
        let err = EmbeddedGraph::parse("1: 1\n").unwrap_err();
        assert!(matches!(err, GraphError::Parse { line: 1, .. }));
        let err = EmbeddedGraph::parse("0: 2\n2: 0\n").unwrap_err();
        assert!(matches!(err, GraphError::Parse { line: 1, .. }));
    }

    #[test]
    fn serialize_round_trip_is_bit_exact() {
        let text = "7: 2 9 4\n2: 7 4 9\n9: 4 2 7\n4: 9 7 2\n";
        let g = EmbeddedGraph::parse(text).unwrap();
        assert_eq!(g.serialize(), text);
        let h = EmbeddedGraph::parse(&g.serialize()).unwrap();
        assert_eq!(h.serialize(), text);
    }

    #[test]
    fn mirror_preserves_face_degree_multiset() {
        let g = solids::dodecahedron();
        let m = g.mirror();
        let mut a: Vec<_> = g.faces().iter().map(Face::degree).collect();
        let mut b: Vec<_> = m.faces().iter().map(Face::degree).collect();
        a.sort_unstable();
        b.sort_unstable();
        assert_eq!(a, b);
    }

    proptest! {
        #[test]
        fn generator_respects_invariants(seed in 0u64..500, n in 4usize..40) {
            let g = generate_planar(seed, n, 8).unwrap();
            prop_assert_eq!(g.vertex_count(), n);
            prop_assert!((0..n).all(|v| g.degree(v) <= 8));
            g.euler_check().unwrap();
            // Determinism: same seed, same graph.
            let h = generate_planar(seed, n, 8).unwrap();
            prop_assert_eq!(g.serialize(), h.serialize());
        }

        #[test]
        fn sparse_generator_stays_connected(seed in 0u64..200, n in 4usize..40) {
            let g = generate_planar_sparse(seed, n, 8, 0.2).unwrap();
            prop_assert!(g.is_connected());
            g.euler_check().unwrap();
            prop_assert!((0..g.vertex_count()).all(|v| g.degree(v) <= 8));
        }

        #[test]
        fn mirror_of_generated_graph_keeps_faces(seed in 0u64..100) {
            let g = generate_planar_sparse(seed, 20, 8, 0.15).unwrap();
            let m = g.mirror();
            let mut a: Vec<_> = g.faces().iter().map(Face::degree).collect();
            let mut b: Vec<_> = m.faces().iter().map(Face::degree).collect();
            a.sort_unstable();
            b.sort_unstable();
            prop_assert_eq!(a, b);
        }
    }
}
