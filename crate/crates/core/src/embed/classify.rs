//! Neighbor classification.
//!
//! For an edge `(u, v)`, the base class of `v` as a neighbor of `u` is
//! read off the two faces incident to the edge:
//!
//! - weak: both faces are triangles;
//! - semi-weak: one face is a triangle and the other has degree 4;
//! - other: anything else.
//!
//! On top of that, a weak neighbor `v` of degree 5 gets a refined class
//! driven by the degrees of nearby vertices: E2/E3/E4 when `d(u) = 8`,
//! and S2/S3/S4 (or none) when `d(u) = 7`. These refinements feed the
//! discharging rules R6-R11 and the configuration predicates for C7 and
//! C10. Both classes are invariant under mirroring the embedding: every
//! clause below quantifies symmetrically over the two faces at `(u, v)`.

use super::{EmbeddedGraph, GraphError};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NeighborClass {
    Weak,
    SemiWeak,
    Other,
}

/// Refined class of a weak degree-5 neighbor (`None` when no clause
/// applies, which can happen for `d(u) = 7`).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpecialClass {
    E2,
    E3,
    E4,
    S2,
    S3,
    S4,
}

/// Full classification of `v` as a neighbor of `u`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Classification {
    pub base: NeighborClass,
    pub special: Option<SpecialClass>,
}

/// Classify `v` as a neighbor of `u` (internal indices).
pub fn classify_neighbor(
    g: &EmbeddedGraph,
    u: usize,
    v: usize,
) -> Result<Classification, GraphError> {
    if !g.adjacent(u, v) {
        return Err(GraphError::NotAnEdge(g.id(u), g.id(v)));
    }
    let (f1, f2) = g.edge_faces(u, v)?;
    let d1 = g.faces()[f1].degree();
    let d2 = g.faces()[f2].degree();
    let base = if d1 == 3 && d2 == 3 {
        NeighborClass::Weak
    } else if (d1 == 3 && d2 == 4) || (d1 == 4 && d2 == 3) {
        NeighborClass::SemiWeak
    } else {
        NeighborClass::Other
    };
    let special = if base == NeighborClass::Weak && g.degree(v) == 5 {
        match g.degree(u) {
            8 => Some(classify_e(g, u, v)?),
            7 => classify_s(g, u, v)?,
            _ => None,
        }
    } else {
        None
    };
    Ok(Classification { base, special })
}

/// Third vertices of the two triangles at a weak edge `(u, v)`.
fn apexes(g: &EmbeddedGraph, u: usize, v: usize) -> Result<(usize, usize), GraphError> {
    let t1 = g.triangle_apex(u, v)?.expect("weak edge face is a triangle");
    let t2 = g.triangle_apex(v, u)?.expect("weak edge face is a triangle");
    Ok((t1, t2))
}

/// E2/E3/E4 for a weak degree-5 neighbor `v` of a degree-8 vertex `u`.
///
/// E2 holds when either
///  (a) some apex `w1` of the edge has degree 6 and the triangle
///      `(v, w1, w2)` on the far side of `(v, w1)` has `d(w2) = 6`, or
///  (b) some apex `w1` has degree 6, the far triangle at `(v, w1)` has
///      apex `w2` of degree 7, and the *other* apex `w3` of `(u, v)` has
///      degree 6.
/// E3: not E2, and some apex of `(u, v)` has degree at most 7.
/// E4: both apexes have degree 8.
fn classify_e(g: &EmbeddedGraph, u: usize, v: usize) -> Result<SpecialClass, GraphError> {
    let (t1, t2) = apexes(g, u, v)?;
    for (w1, w3) in [(t1, t2), (t2, t1)] {
        if g.degree(w1) != 6 {
            continue;
        }
        // The face at (v, w1) not containing u.
        for (a, b) in [(v, w1), (w1, v)] {
            if let Some(w2) = g.triangle_apex(a, b)? {
                if w2 == u {
                    continue;
                }
                if g.degree(w2) == 6 {
                    return Ok(SpecialClass::E2);
                }
                if g.degree(w2) == 7 && g.degree(w3) == 6 {
                    return Ok(SpecialClass::E2);
                }
            }
        }
    }
    if g.degree(t1) <= 7 || g.degree(t2) <= 7 {
        return Ok(SpecialClass::E3);
    }
    Ok(SpecialClass::E4)
}

/// S2/S3/S4 for a weak degree-5 neighbor `v` of a degree-7 vertex `u`.
///
/// With `w1, w4` the apexes of `(u, v)` and `w2, w3` the remaining two
/// neighbors of `v`:
///
/// - S2: both apexes have degree 6;
/// - S3: not S2, and either (i) all five faces at `v` are triangles,
///   both apexes have degree 7 and both middle neighbors have degree 6,
///   or (ii) some apex has degree 6, some middle neighbor has degree 6,
///   and the other apex has degree 7 or the other middle neighbor does
///   (no constraint on the embedding order of the middle pair);
/// - S4: neither, and either some apex has degree at most 7, or `v` is
///   adjacent to vertices of degree 6 and of degree 7 distinct from `u`.
fn classify_s(
    g: &EmbeddedGraph,
    u: usize,
    v: usize,
) -> Result<Option<SpecialClass>, GraphError> {
    let (t1, t2) = apexes(g, u, v)?;
    if g.degree(t1) == 6 && g.degree(t2) == 6 {
        return Ok(Some(SpecialClass::S2));
    }
    // d(v) = 5: the rotation at v is [u, a, m1, m2, b] cyclically, where
    // a = successor apex, b = predecessor apex.
    let a = g.next_in_rotation(v, u)?;
    let b = g.prev_in_rotation(v, u)?;
    let m1 = g.next_in_rotation(v, a)?;
    let m2 = g.prev_in_rotation(v, b)?;
    debug_assert!({
        let mut s = [a, m1, m2, b];
        s.sort_unstable();
        let mut t = g.rotation(v).iter().copied().filter(|&x| x != u).collect::<Vec<_>>();
        t.sort_unstable();
        s.to_vec() == t
    });
    // S3 branch (i): fan of triangles around v with degree pattern 7,6,6,7.
    let fan = g.rotation(v).iter().all(|&w| {
        g.triangle_apex(v, w).map(|t| t.is_some()).unwrap_or(false)
    });
    if fan && g.degree(a) == 7 && g.degree(b) == 7 && g.degree(m1) == 6 && g.degree(m2) == 6 {
        return Ok(Some(SpecialClass::S3));
    }
    // S3 branch (ii): w4 an apex of degree 6, w2 a middle of degree 6,
    // and degree 7 on the other apex or the other middle.
    for (w4, w1) in [(t1, t2), (t2, t1)] {
        for (w2, w3) in [(m1, m2), (m2, m1)] {
            if g.degree(w4) == 6
                && g.degree(w2) == 6
                && (g.degree(w1) == 7 || g.degree(w3) == 7)
            {
                return Ok(Some(SpecialClass::S3));
            }
        }
    }
    // S4.
    if g.degree(t1) <= 7 || g.degree(t2) <= 7 {
        return Ok(Some(SpecialClass::S4));
    }
    let has6 = g.rotation(v).iter().any(|&w| w != u && g.degree(w) == 6);
    let has7 = g.rotation(v).iter().any(|&w| w != u && g.degree(w) == 7);
    if has6 && has7 {
        return Ok(Some(SpecialClass::S4));
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embed::solids;

    #[test]
    fn octahedron_neighbors_are_weak_without_special_class() {
        let g = solids::octahedron();
        for (u, v) in g.edges() {
            let c = classify_neighbor(&g, u, v).unwrap();
            assert_eq!(c.base, NeighborClass::Weak);
            assert_eq!(c.special, None); // degrees are 4, not 5
        }
    }

    #[test]
    fn cube_neighbors_are_other() {
        let g = solids::cube();
        for (u, v) in g.edges() {
            let c = classify_neighbor(&g, u, v).unwrap();
            assert_eq!(c.base, NeighborClass::Other);
        }
    }

    #[test]
    fn classification_rejects_non_edges() {
        let g = solids::cube();
        // Cube vertices 1 and 8 are antipodal, hence non-adjacent.
        let u = g.index_of(1).unwrap();
        let v = g.index_of(8).unwrap();
        assert!(!g.adjacent(u, v));
        assert!(classify_neighbor(&g, u, v).is_err());
    }

    /// A wheel-like patch: v of degree 5 inside a triangulated disc,
    /// u of degree 8 on its boundary. Degrees of the other ring vertices
    /// are controlled by pendant stubs so each E-clause can be exercised.
    fn wheel_patch(extra: &[(u32, usize)]) -> EmbeddedGraph {
        // v=1 center; ring 2..=6 clockwise: u=2, then 3,4,5,6.
        // Faces (v,x,y) for consecutive ring pairs; outer face closes the
        // disc. Pendants raise ring degrees as requested: extra[(id, k)]
        // attaches k fresh leaves to vertex id, inserted in its rotation
        // outside the disc.
        let mut rows: Vec<(u32, Vec<u32>)> = vec![
            (1, vec![2, 3, 4, 5, 6]),
            (2, vec![3, 1, 6]),
            (3, vec![4, 1, 2]),
            (4, vec![5, 1, 3]),
            (5, vec![6, 1, 4]),
            (6, vec![2, 1, 5]),
        ];
        let mut next = 7u32;
        for &(id, k) in extra {
            for _ in 0..k {
                let row = rows.iter_mut().find(|(i, _)| *i == id).unwrap();
                row.1.push(next);
                rows.push((next, vec![id]));
                next += 1;
            }
        }
        EmbeddedGraph::from_rotations(rows).unwrap()
    }

    #[test]
    fn wheel_patch_center_is_weak() {
        // Ring pendants keep the ring faces triangular: check weakness of
        // the center as a neighbor of u regardless of stub counts.
        let g = wheel_patch(&[(2, 5), (3, 3), (4, 3), (5, 3), (6, 3)]);
        let v = g.index_of(1).unwrap();
        let u = g.index_of(2).unwrap();
        let c = classify_neighbor(&g, u, v).unwrap();
        assert_eq!(c.base, NeighborClass::Weak);
        assert_eq!(g.degree(u), 8);
        // Apexes 3 and 6 have degree 6; far triangle (1,3,4) apex 4 has
        // degree 6: E2 clause (a).
        assert_eq!(c.special, Some(SpecialClass::E2));
    }

    #[test]
    fn e3_when_apexes_low_but_not_e2() {
        // Apex 3 degree 7, apex 6 degree 7: no degree-6 apex, so not E2,
        // but some apex has degree <= 7: E3.
        let g = wheel_patch(&[(2, 5), (3, 4), (4, 5), (5, 5), (6, 4)]);
        let v = g.index_of(1).unwrap();
        let u = g.index_of(2).unwrap();
        let c = classify_neighbor(&g, u, v).unwrap();
        assert_eq!(c.special, Some(SpecialClass::E3));
    }

    #[test]
    fn e4_when_both_apexes_degree_8() {
        let g = wheel_patch(&[(2, 5), (3, 5), (4, 5), (5, 5), (6, 5)]);
        let v = g.index_of(1).unwrap();
        let u = g.index_of(2).unwrap();
        let c = classify_neighbor(&g, u, v).unwrap();
        assert_eq!(c.special, Some(SpecialClass::E4));
    }

    #[test]
    fn s2_when_both_apexes_degree_6() {
        // u = 2 with 4 stubs -> degree 7; apexes 3, 6 with 3 stubs -> 6.
        let g = wheel_patch(&[(2, 4), (3, 3), (4, 5), (5, 5), (6, 3)]);
        let v = g.index_of(1).unwrap();
        let u = g.index_of(2).unwrap();
        let c = classify_neighbor(&g, u, v).unwrap();
        assert_eq!(c.special, Some(SpecialClass::S2));
    }

    #[test]
    fn s3_fan_branch() {
        // Apexes 3, 6 at degree 7; middles 4, 5 at degree 6; all faces at
        // the center are triangles.
        let g = wheel_patch(&[(2, 4), (3, 4), (4, 3), (5, 3), (6, 4)]);
        let v = g.index_of(1).unwrap();
        let u = g.index_of(2).unwrap();
        let c = classify_neighbor(&g, u, v).unwrap();
        assert_eq!(c.special, Some(SpecialClass::S3));
    }

    #[test]
    fn s4_when_apex_low_but_no_s2_s3() {
        // Apex 3 degree 7, apex 6 degree 8, middles 4, 5 at degree 8:
        // not S2 (no degree-6 apex), not S3, but an apex is <= 7.
        let g = wheel_patch(&[(2, 4), (3, 4), (4, 5), (5, 5), (6, 5)]);
        let v = g.index_of(1).unwrap();
        let u = g.index_of(2).unwrap();
        let c = classify_neighbor(&g, u, v).unwrap();
        assert_eq!(c.special, Some(SpecialClass::S4));
    }

    #[test]
    fn none_when_everything_around_is_degree_8() {
        let g = wheel_patch(&[(2, 4), (3, 5), (4, 5), (5, 5), (6, 5)]);
        let v = g.index_of(1).unwrap();
        let u = g.index_of(2).unwrap();
        let c = classify_neighbor(&g, u, v).unwrap();
        assert_eq!(c.base, NeighborClass::Weak);
        assert_eq!(c.special, None);
    }

    #[test]
    fn classification_is_mirror_invariant() {
        for extra in [
            vec![(2u32, 5usize), (3, 3), (4, 3), (5, 3), (6, 3)],
            vec![(2, 4), (3, 4), (4, 3), (5, 3), (6, 4)],
            vec![(2, 4), (3, 4), (4, 5), (5, 5), (6, 5)],
            vec![(2, 5), (3, 4), (4, 5), (5, 5), (6, 4)],
        ] {
            let g = wheel_patch(&extra);
            let m = g.mirror();
            let (v, u) = (g.index_of(1).unwrap(), g.index_of(2).unwrap());
            let (vm, um) = (m.index_of(1).unwrap(), m.index_of(2).unwrap());
            assert_eq!(
                classify_neighbor(&g, u, v).unwrap(),
                classify_neighbor(&m, um, vm).unwrap()
            );
        }
    }
}
