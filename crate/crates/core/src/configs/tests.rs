use super::*;
use crate::embed::{solids, EmbeddedGraph};
use std::collections::BTreeMap;

/// Wheel W8: center 1 (degree 8), triangulated rim 2..=9 (degree 3).
fn wheel8() -> EmbeddedGraph {
    let mut rows = vec![(1u32, (2..=9).collect::<Vec<u32>>())];
    for r in 2..=9u32 {
        let prev = if r == 2 { 9 } else { r - 1 };
        let next = if r == 9 { 2 } else { r + 1 };
        rows.push((r, vec![1, prev, next]));
    }
    EmbeddedGraph::from_rotations(rows).unwrap()
}

/// Wheel W8 with rim edge (2, 3) subdivided by vertex 10: the spokes to
/// 2 and 3 become semi-weak (triangle + 4-face).
fn wheel8_subdivided() -> EmbeddedGraph {
    let mut rows = vec![(1u32, (2..=9).collect::<Vec<u32>>())];
    for r in 2..=9u32 {
        let prev = if r == 2 { 9 } else { r - 1 };
        let next = if r == 9 { 2 } else { r + 1 };
        let rot: Vec<u32> = [1, prev, next]
            .into_iter()
            .map(|x| match (r, x) {
                (2, 3) => 10,
                (3, 2) => 10,
                _ => x,
            })
            .collect();
        rows.push((r, rot));
    }
    rows.push((10, vec![2, 3]));
    EmbeddedGraph::from_rotations(rows).unwrap()
}

/// Bipyramid over a k-gon: poles 1 and 2 of degree k, equator 3..k+2 of
/// degree 4, every face a triangle. With `detach` the edge from pole 2
/// to equator vertex 3 is removed, turning 3 into a weak degree-3
/// neighbor of pole 1.
fn bipyramid(k: u32, detach: bool) -> EmbeddedGraph {
    let eq: Vec<u32> = (3..3 + k).collect();
    let mut rows = vec![
        (1u32, eq.clone()),
        (2u32, eq.iter().rev().copied().collect::<Vec<u32>>()),
    ];
    for i in 0..k as usize {
        let r = eq[i];
        let prev = eq[(i + k as usize - 1) % k as usize];
        let next = eq[(i + 1) % k as usize];
        rows.push((r, vec![1, prev, 2, next]));
    }
    if detach {
        rows[1].1.retain(|&x| x != 3);
        rows[2].1.retain(|&x| x != 2);
    }
    EmbeddedGraph::from_rotations(rows).unwrap()
}

/// Exhaustive matcher oracle: try every injective assignment of host
/// vertices to the configuration's roles, keep those accepted by
/// `verify_match`, and canonicalize by the configuration's symmetries.
fn brute_matches(g: &EmbeddedGraph, id: ConfigId) -> Vec<ConfigMatch> {
    let roles: &[&'static str] = match id {
        ConfigId::C1 => &["u", "v"],
        ConfigId::C2 | ConfigId::C11 => &["u", "v", "w", "x"],
        ConfigId::C3 | ConfigId::C9 | ConfigId::C10 => &["u", "v1", "v2", "v3"],
        ConfigId::C4 | ConfigId::C5 | ConfigId::C7 => &["u", "v1", "v2", "v3", "v4"],
        ConfigId::C6 => &["u", "v1", "v2", "v3", "v4", "v5"],
        ConfigId::C8 => &["u", "v", "w", "x", "y"],
    };
    let n = g.vertex_count();
    let mut out = Vec::new();
    let mut tuple = vec![0usize; roles.len()];
    fn rec(
        g: &EmbeddedGraph,
        id: ConfigId,
        roles: &[&'static str],
        tuple: &mut Vec<usize>,
        pos: usize,
        n: usize,
        out: &mut Vec<ConfigMatch>,
    ) {
        if pos == roles.len() {
            let m = ConfigMatch {
                config: id,
                binding: roles
                    .iter()
                    .zip(tuple.iter())
                    .map(|(&r, &v)| (r, g.id(v)))
                    .collect(),
            };
            if verify_match(g, &m).unwrap() {
                out.push(canonicalize(g, m));
            }
            return;
        }
        for v in 0..n {
            if tuple[..pos].contains(&v) {
                continue;
            }
            tuple[pos] = v;
            rec(g, id, roles, tuple, pos + 1, n, out);
        }
    }
    rec(g, id, roles, &mut tuple, 0, n, &mut out);
    out.sort();
    out.dedup();
    out
}

/// Quotient a raw binding by the configuration's internal symmetries.
fn canonicalize(g: &EmbeddedGraph, mut m: ConfigMatch) -> ConfigMatch {
    let sort_group = |b: &mut BTreeMap<&'static str, u32>, keys: &[&'static str]| {
        let mut ids: Vec<u32> = keys.iter().map(|k| b[k]).collect();
        ids.sort_unstable();
        for (k, id) in keys.iter().zip(ids) {
            b.insert(k, id);
        }
    };
    match m.config {
        ConfigId::C1 => sort_group(&mut m.binding, &["u", "v"]),
        ConfigId::C2 => {
            sort_group(&mut m.binding, &["u", "w"]);
            sort_group(&mut m.binding, &["v", "x"]);
        }
        ConfigId::C3 => sort_group(&mut m.binding, &["v1", "v2"]),
        ConfigId::C4 | ConfigId::C6 | ConfigId::C7 => sort_group(&mut m.binding, &["v3", "v4"]),
        ConfigId::C5 => sort_group(&mut m.binding, &["v2", "v3"]),
        ConfigId::C8 | ConfigId::C10 => {}
        ConfigId::C9 => {
            let v3 = g.index_of(m.binding["v3"]).unwrap();
            if g.degree(v3) == 4 {
                sort_group(&mut m.binding, &["v1", "v2", "v3"]);
            } else {
                sort_group(&mut m.binding, &["v1", "v2"]);
            }
        }
        ConfigId::C11 => sort_group(&mut m.binding, &["v", "x"]),
    }
    m
}

fn cross_check(g: &EmbeddedGraph, id: ConfigId) {
    let fast = match_config(g, id).unwrap();
    let brute = brute_matches(g, id);
    assert_eq!(fast, brute, "matcher disagrees with oracle on {id}");
    for m in &fast {
        assert!(verify_match(g, m).unwrap());
    }
}

#[test]
fn icosahedron_c1_count() {
    let g = solids::icosahedron();
    assert_eq!(match_config(&g, ConfigId::C1).unwrap().len(), 30);
}

#[test]
fn octahedron_c1_count() {
    let g = solids::octahedron();
    assert_eq!(match_config(&g, ConfigId::C1).unwrap().len(), 12);
}

#[test]
fn cube_c2_matches_oracle() {
    let g = solids::cube();
    cross_check(&g, ConfigId::C2);
    assert_eq!(match_config(&g, ConfigId::C2).unwrap().len(), 12);
}

#[test]
fn wheel_c3_counts() {
    let g = wheel8();
    // 28 unordered pairs of weak rim vertices, 6 choices for the third.
    assert_eq!(match_config(&g, ConfigId::C3).unwrap().len(), 168);
    cross_check(&g, ConfigId::C1);
    cross_check(&g, ConfigId::C2);
    cross_check(&g, ConfigId::C3);
}

#[test]
fn subdivided_wheel_c4() {
    let g = wheel8_subdivided();
    g.euler_check().unwrap();
    let ms = match_config(&g, ConfigId::C4).unwrap();
    assert!(!ms.is_empty());
    cross_check(&g, ConfigId::C3);
    cross_check(&g, ConfigId::C4);
}

#[test]
fn bipyramid_c5_c6() {
    let g = bipyramid(8, true);
    g.euler_check().unwrap();
    assert_eq!(g.degree(g.index_of(1).unwrap()), 8);
    assert_eq!(g.degree(g.index_of(3).unwrap()), 3);
    let c5 = match_config(&g, ConfigId::C5).unwrap();
    assert!(!c5.is_empty());
    cross_check(&g, ConfigId::C5);
    assert!(!match_config(&g, ConfigId::C6).unwrap().is_empty());
    cross_check(&g, ConfigId::C6);
}

#[test]
fn bipyramid7_c9() {
    let g = bipyramid(7, false);
    g.euler_check().unwrap();
    let ms = match_config(&g, ConfigId::C9).unwrap();
    // Both poles have degree 7 and see the seven weak degree-4 equator
    // vertices: 2 * C(7,3) unordered triples.
    assert_eq!(ms.len(), 70);
    cross_check(&g, ConfigId::C9);
    cross_check(&g, ConfigId::C10);
}

#[test]
fn solids_all_configs_match_oracle() {
    for g in [solids::tetrahedron(), solids::octahedron(), solids::cube()] {
        for id in ALL_CONFIGS {
            cross_check(&g, id);
        }
    }
}

#[test]
fn generated_graphs_match_oracle_small_configs() {
    use crate::embed::generate_planar;
    for seed in 0..4u64 {
        let g = generate_planar(seed, 14, 8).unwrap();
        for id in [ConfigId::C1, ConfigId::C2, ConfigId::C3, ConfigId::C9, ConfigId::C10] {
            cross_check(&g, id);
        }
    }
}

#[test]
fn report_is_deterministic_and_lists_faces() {
    let g = wheel8();
    let ms = match_config(&g, ConfigId::C3).unwrap();
    let r1 = serde_json::to_string(&report(&g, &ms[0]).unwrap()).unwrap();
    let r2 = serde_json::to_string(&report(&g, &ms[0]).unwrap()).unwrap();
    assert_eq!(r1, r2);
    let rep = report(&g, &ms[0]).unwrap();
    // Two weak spokes, two triangular faces each, possibly shared.
    assert!(!rep.witness_faces.is_empty());
    for f in &rep.witness_faces {
        assert_eq!(f.len(), 3);
    }
}

#[test]
fn config_id_round_trip() {
    for id in ALL_CONFIGS {
        assert_eq!(id.to_string().parse::<ConfigId>().unwrap(), id);
    }
    assert!("C12".parse::<ConfigId>().is_err());
    assert!("x".parse::<ConfigId>().is_err());
}

#[test]
fn verify_rejects_corrupted_binding() {
    let g = solids::icosahedron();
    let ms = match_config(&g, ConfigId::C1).unwrap();
    let mut bad = ms[0].clone();
    let u = bad.binding["u"];
    bad.binding.insert("v", u);
    assert!(!verify_match(&g, &bad).unwrap());
}
