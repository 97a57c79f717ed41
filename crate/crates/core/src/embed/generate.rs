//! Seeded random planar graph generator.
//!
//! Grows a random planar triangulation by repeatedly inserting a new
//! vertex into a uniformly chosen triangular face (only faces whose three
//! corners stay under the degree cap are eligible), mixing with random
//! edge flips between insertions. `generate_planar_sparse` then deletes a
//! random subset of edges, keeping the graph connected, which produces
//! faces of higher degree and more varied degree sequences.
//!
//! All randomness comes from a ChaCha stream seeded by the caller, so a
//! given `(seed, n, max_deg)` always yields the same graph.

use super::{EmbeddedGraph, GraphError};
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

/// Rotation-only scratch representation used while growing.
struct Rot {
    rows: Vec<Vec<usize>>,
}

impl Rot {
    fn tetrahedron() -> Rot {
        // A valid oriented tetrahedron (checked by the Euler property
        // test): faces (0,1,2), (0,2,3), (0,3,1), (1,3,2).
        Rot {
            rows: vec![
                vec![1, 2, 3],
                vec![0, 3, 2],
                vec![0, 1, 3],
                vec![0, 2, 1],
            ],
        }
    }

    fn deg(&self, v: usize) -> usize {
        self.rows[v].len()
    }

    fn pos(&self, v: usize, u: usize) -> usize {
        self.rows[v].iter().position(|&x| x == u).unwrap()
    }

    fn succ(&self, v: usize, u: usize) -> usize {
        let p = self.pos(v, u);
        self.rows[v][(p + 1) % self.rows[v].len()]
    }

    fn adjacent(&self, u: usize, v: usize) -> bool {
        self.rows[u].contains(&v)
    }

    /// Insert `x` after `after` in the rotation of `v`.
    fn insert_after(&mut self, v: usize, after: usize, x: usize) {
        let p = self.pos(v, after);
        self.rows[v].insert(p + 1, x);
    }

    /// All triangular faces, each reported once as an oriented corner
    /// list in trace order.
    fn triangles(&self) -> Vec<[usize; 3]> {
        let mut out = Vec::new();
        for a in 0..self.rows.len() {
            for &b in &self.rows[a] {
                // Trace the face of dart (a, b); keep it if it is a
                // triangle reported at its minimal corner.
                let c = self.succ(b, a);
                if c == a || c == b {
                    continue;
                }
                if self.succ(c, b) != a {
                    continue;
                }
                if a < b && a < c {
                    out.push([a, b, c]);
                }
            }
        }
        out
    }

    /// Subdivide the triangular face traced (a,b,c) with a new vertex.
    fn insert_vertex(&mut self, tri: [usize; 3]) {
        let [a, b, c] = tri;
        let x = self.rows.len();
        // Face trace (a,b,c) means: at a, b follows c; at b, c follows a;
        // at c, a follows b. The new vertex is wired so each of the three
        // sub-faces is again a triangle.
        self.rows.push(vec![a, c, b]);
        self.insert_after(a, c, x);
        self.insert_after(b, a, x);
        self.insert_after(c, b, x);
    }

    /// Flip the edge (u, v) if legal under the degree cap; returns true
    /// on success.
    fn flip(&mut self, u: usize, v: usize, max_deg: usize) -> bool {
        if !self.adjacent(u, v) || self.deg(u) <= 3 || self.deg(v) <= 3 {
            return false;
        }
        // Apexes of the two faces at (u, v); both faces must be triangles.
        let a = self.succ(v, u);
        let b = self.succ(u, v);
        if a == b || a == u || b == v {
            return false;
        }
        if self.succ(a, v) != u || self.succ(b, u) != v {
            return false;
        }
        if self.adjacent(a, b) || self.deg(a) >= max_deg || self.deg(b) >= max_deg {
            return false;
        }
        let pu = self.pos(u, v);
        self.rows[u].remove(pu);
        let pv = self.pos(v, u);
        self.rows[v].remove(pv);
        self.insert_after(a, v, b);
        self.insert_after(b, u, a);
        true
    }
}

/// Generate a random planar triangulation on `n` vertices with maximum
/// degree at most `max_deg`. Requires `n >= 4` and `max_deg >= 6`.
pub fn generate_planar(seed: u64, n: usize, max_deg: usize) -> Result<EmbeddedGraph, GraphError> {
    generate_planar_sparse(seed, n, max_deg, 0.0)
}

/// Like [`generate_planar`], then delete each edge independently with
/// probability `delete_prob`, skipping deletions that would disconnect
/// the graph.
pub fn generate_planar_sparse(
    seed: u64,
    n: usize,
    max_deg: usize,
    delete_prob: f64,
) -> Result<EmbeddedGraph, GraphError> {
    if n < 4 {
        return Err(GraphError::Unsatisfiable(format!(
            "need at least 4 vertices, got {n}"
        )));
    }
    if max_deg < 6 {
        return Err(GraphError::Unsatisfiable(format!(
            "triangulations need max degree >= 6, got {max_deg}"
        )));
    }
    if !(0.0..1.0).contains(&delete_prob) {
        return Err(GraphError::Unsatisfiable(format!(
            "delete probability {delete_prob} out of range"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut rot = Rot::tetrahedron();
    let mut stuck = 0usize;
    while rot.rows.len() < n {
        let tris = rot.triangles();
        let eligible: Vec<_> = tris
            .iter()
            .filter(|t| t.iter().all(|&c| rot.deg(c) < max_deg))
            .collect();
        if eligible.is_empty() {
            // Mix with random flips to free up low-degree corners.
            stuck += 1;
            if stuck > 200 {
                return Err(GraphError::Unsatisfiable(format!(
                    "could not reach {n} vertices under degree cap {max_deg}"
                )));
            }
            for _ in 0..20 {
                let u = rng.gen_range(0..rot.rows.len());
                if rot.rows[u].is_empty() {
                    continue;
                }
                let v = rot.rows[u][rng.gen_range(0..rot.rows[u].len())];
                rot.flip(u, v, max_deg);
            }
            continue;
        }
        stuck = 0;
        let tri = *eligible[rng.gen_range(0..eligible.len())];
        rot.insert_vertex(tri);
        // A couple of flips per insertion keeps the distribution from
        // degenerating into stacked triangles.
        for _ in 0..3 {
            let u = rng.gen_range(0..rot.rows.len());
            let v = rot.rows[u][rng.gen_range(0..rot.rows[u].len())];
            rot.flip(u, v, max_deg);
        }
    }
    if delete_prob > 0.0 {
        let mut edges: Vec<(usize, usize)> = Vec::new();
        for u in 0..rot.rows.len() {
            for &v in &rot.rows[u] {
                if u < v {
                    edges.push((u, v));
                }
            }
        }
        for (u, v) in edges {
            if rng.gen_bool(delete_prob) && connected_without(&rot, u, v) {
                let p = rot.pos(u, v);
                rot.rows[u].remove(p);
                let p = rot.pos(v, u);
                rot.rows[v].remove(p);
            }
        }
    }
    let rows = rot
        .rows
        .iter()
        .enumerate()
        .map(|(i, row)| {
            (
                (i + 1) as u32,
                row.iter().map(|&j| (j + 1) as u32).collect(),
            )
        })
        .collect();
    EmbeddedGraph::from_rotations(rows)
}

/// Is the graph still connected after removing edge (u, v)?
fn connected_without(rot: &Rot, u: usize, v: usize) -> bool {
    let n = rot.rows.len();
    let mut seen = vec![false; n];
    let mut stack = vec![u];
    seen[u] = true;
    while let Some(a) = stack.pop() {
        for &b in &rot.rows[a] {
            if (a, b) == (u, v) || (a, b) == (v, u) {
                continue;
            }
            if !seen[b] {
                seen[b] = true;
                stack.push(b);
            }
        }
    }
    seen[v] && seen.iter().all(|&s| s)
}
