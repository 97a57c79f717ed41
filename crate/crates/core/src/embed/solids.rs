//! The five Platonic solids as rotation systems.
//!
//! Built from 3D coordinates: edges join vertex pairs at minimal
//! distance, and the clockwise rotation at each vertex is obtained by
//! angle-sorting its neighbors in the tangent plane of the outward
//! normal. Used as known-good fixtures throughout the test suite (known
//! vertex/edge/face counts, known charge totals).

use super::EmbeddedGraph;

fn build(coords: &[[f64; 3]]) -> EmbeddedGraph {
    let n = coords.len();
    let d2 = |a: &[f64; 3], b: &[f64; 3]| -> f64 {
        (a[0] - b[0]).powi(2) + (a[1] - b[1]).powi(2) + (a[2] - b[2]).powi(2)
    };
    let mut min = f64::MAX;
    for i in 0..n {
        for j in i + 1..n {
            min = min.min(d2(&coords[i], &coords[j]));
        }
    }
    let mut rows = Vec::with_capacity(n);
    for i in 0..n {
        let mut nbrs: Vec<usize> = (0..n)
            .filter(|&j| j != i && d2(&coords[i], &coords[j]) < min * 1.001)
            .collect();
        // Tangent-plane basis at coords[i] (solids are centered at the
        // origin, so the vertex position is the outward normal).
        let p = coords[i];
        let norm = (p[0] * p[0] + p[1] * p[1] + p[2] * p[2]).sqrt();
        let nrm = [p[0] / norm, p[1] / norm, p[2] / norm];
        let seed = if nrm[0].abs() < 0.9 {
            [1.0, 0.0, 0.0]
        } else {
            [0.0, 1.0, 0.0]
        };
        let cross = |a: [f64; 3], b: [f64; 3]| {
            [
                a[1] * b[2] - a[2] * b[1],
                a[2] * b[0] - a[0] * b[2],
                a[0] * b[1] - a[1] * b[0],
            ]
        };
        let e1 = cross(nrm, seed);
        let l1 = (e1[0] * e1[0] + e1[1] * e1[1] + e1[2] * e1[2]).sqrt();
        let e1 = [e1[0] / l1, e1[1] / l1, e1[2] / l1];
        let e2 = cross(nrm, e1);
        nbrs.sort_by(|&a, &b| {
            let ang = |j: usize| {
                let v = [
                    coords[j][0] - p[0],
                    coords[j][1] - p[1],
                    coords[j][2] - p[2],
                ];
                let x = v[0] * e1[0] + v[1] * e1[1] + v[2] * e1[2];
                let y = v[0] * e2[0] + v[1] * e2[1] + v[2] * e2[2];
                y.atan2(x)
            };
            ang(a).partial_cmp(&ang(b)).unwrap()
        });
        rows.push((
            (i + 1) as u32,
            nbrs.into_iter().map(|j| (j + 1) as u32).collect(),
        ));
    }
    EmbeddedGraph::from_rotations(rows).expect("platonic solid is a valid embedding")
}

pub fn tetrahedron() -> EmbeddedGraph {
    build(&[
        [1.0, 1.0, 1.0],
        [1.0, -1.0, -1.0],
        [-1.0, 1.0, -1.0],
        [-1.0, -1.0, 1.0],
    ])
}

pub fn cube() -> EmbeddedGraph {
    let mut c = Vec::new();
    for &x in &[-1.0, 1.0] {
        for &y in &[-1.0, 1.0] {
            for &z in &[-1.0, 1.0] {
                c.push([x, y, z]);
            }
        }
    }
    build(&c)
}

pub fn octahedron() -> EmbeddedGraph {
    build(&[
        [1.0, 0.0, 0.0],
        [-1.0, 0.0, 0.0],
        [0.0, 1.0, 0.0],
        [0.0, -1.0, 0.0],
        [0.0, 0.0, 1.0],
        [0.0, 0.0, -1.0],
    ])
}

pub fn icosahedron() -> EmbeddedGraph {
    let p = (1.0 + 5.0f64.sqrt()) / 2.0;
    let mut c = Vec::new();
    for &a in &[-1.0, 1.0] {
        for &b in &[-p, p] {
            c.push([0.0, a, b]);
            c.push([a, b, 0.0]);
            c.push([b, 0.0, a]);
        }
    }
    build(&c)
}

pub fn dodecahedron() -> EmbeddedGraph {
    let p = (1.0 + 5.0f64.sqrt()) / 2.0;
    let q = 1.0 / p;
    let mut c = Vec::new();
    for &x in &[-1.0, 1.0] {
        for &y in &[-1.0, 1.0] {
            for &z in &[-1.0, 1.0] {
                c.push([x, y, z]);
            }
        }
    }
    for &a in &[-q, q] {
        for &b in &[-p, p] {
            c.push([0.0, a, b]);
            c.push([a, b, 0.0]);
            c.push([b, 0.0, a]);
        }
    }
    build(&c)
}
