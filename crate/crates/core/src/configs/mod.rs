//! The eleven unavoidable configurations C1-C11.
//!
//! Each matcher enumerates bindings of the configuration's named
//! vertices into a host graph, quotienting by the configuration's
//! internal symmetries (documented per matcher). All bound vertices are
//! pairwise distinct. [`verify_match`] re-checks a reported binding
//! clause by clause, independently of the matcher's search order.

use crate::embed::{classify_neighbor, EmbeddedGraph, GraphError, NeighborClass, SpecialClass};
use serde::Serialize;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ConfigId {
    C1,
    C2,
    C3,
    C4,
    C5,
    C6,
    C7,
    C8,
    C9,
    C10,
    C11,
}

pub const ALL_CONFIGS: [ConfigId; 11] = [
    ConfigId::C1,
    ConfigId::C2,
    ConfigId::C3,
    ConfigId::C4,
    ConfigId::C5,
    ConfigId::C6,
    ConfigId::C7,
    ConfigId::C8,
    ConfigId::C9,
    ConfigId::C10,
    ConfigId::C11,
];

impl fmt::Display for ConfigId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "C{}", *self as usize + 1)
    }
}

impl FromStr for ConfigId {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let k: usize = s
            .strip_prefix('C')
            .or_else(|| s.strip_prefix('c'))
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| format!("unknown configuration `{s}`"))?;
        ALL_CONFIGS
            .get(k.wrapping_sub(1))
            .copied()
            .ok_or_else(|| format!("unknown configuration `{s}`"))
    }
}

/// A matched configuration: role name -> external vertex id.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct ConfigMatch {
    pub config: ConfigId,
    pub binding: BTreeMap<&'static str, u32>,
}

/// JSON form of a match: `{config, binding, witnessFaces}` with stable
/// field and key order.
#[derive(Debug, Clone, Serialize)]
pub struct MatchReport {
    pub config: String,
    pub binding: BTreeMap<&'static str, u32>,
    #[serde(rename = "witnessFaces")]
    pub witness_faces: Vec<Vec<u32>>,
}

fn is_weak(g: &EmbeddedGraph, u: usize, v: usize) -> Result<bool, GraphError> {
    Ok(classify_neighbor(g, u, v)?.base == NeighborClass::Weak)
}

fn is_semiweak(g: &EmbeddedGraph, u: usize, v: usize) -> Result<bool, GraphError> {
    Ok(classify_neighbor(g, u, v)?.base == NeighborClass::SemiWeak)
}

fn special(g: &EmbeddedGraph, u: usize, v: usize) -> Result<Option<SpecialClass>, GraphError> {
    Ok(classify_neighbor(g, u, v)?.special)
}

fn bind(config: ConfigId, pairs: &[(&'static str, usize)], g: &EmbeddedGraph) -> ConfigMatch {
    ConfigMatch {
        config,
        binding: pairs.iter().map(|&(k, v)| (k, g.id(v))).collect(),
    }
}

fn distinct(xs: &[usize]) -> bool {
    xs.iter()
        .all(|x| xs.iter().filter(|&&y| y == *x).count() == 1)
}

/// Find all matches of one configuration. Deterministic: results are
/// sorted by their binding.
pub fn match_config(g: &EmbeddedGraph, id: ConfigId) -> Result<Vec<ConfigMatch>, GraphError> {
    let mut out = match id {
        ConfigId::C1 => match_c1(g)?,
        ConfigId::C2 => match_c2(g)?,
        ConfigId::C3 => match_c3(g)?,
        ConfigId::C4 => match_c4(g)?,
        ConfigId::C5 => match_c5(g)?,
        ConfigId::C6 => match_c6(g)?,
        ConfigId::C7 => match_c7(g)?,
        ConfigId::C8 => match_c8(g)?,
        ConfigId::C9 => match_c9(g)?,
        ConfigId::C10 => match_c10(g)?,
        ConfigId::C11 => match_c11(g)?,
    };
    out.sort();
    out.dedup();
    Ok(out)
}

/// Matches of every configuration, in configuration order.
pub fn match_all(g: &EmbeddedGraph) -> Result<Vec<ConfigMatch>, GraphError> {
    let mut out = Vec::new();
    for id in ALL_CONFIGS {
        out.extend(match_config(g, id)?);
    }
    Ok(out)
}

/// C1: an edge (u, v) with d(u) + d(v) <= 10.
/// Symmetry: u <-> v; canonical binding has id(u) < id(v).
fn match_c1(g: &EmbeddedGraph) -> Result<Vec<ConfigMatch>, GraphError> {
    let mut out = Vec::new();
    for (a, b) in g.edges() {
        if g.degree(a) + g.degree(b) <= 10 {
            let (u, v) = if g.id(a) < g.id(b) { (a, b) } else { (b, a) };
            out.push(bind(ConfigId::C1, &[("u", u), ("v", v)], g));
        }
    }
    Ok(out)
}

/// C2: a cycle (u, v, w, x) with d(u) = d(w) = 3 (a graph cycle; it need
/// not bound a face). Symmetries: u <-> w and v <-> x; canonical binding
/// has id(u) < id(w) and id(v) < id(x).
fn match_c2(g: &EmbeddedGraph) -> Result<Vec<ConfigMatch>, GraphError> {
    let n = g.vertex_count();
    let mut out = Vec::new();
    for u in 0..n {
        if g.degree(u) != 3 {
            continue;
        }
        for w in u + 1..n {
            if g.degree(w) != 3 || g.id(u) >= g.id(w) {
                continue;
            }
            let common: Vec<usize> = g
                .rotation(u)
                .iter()
                .copied()
                .filter(|&x| x != w && g.adjacent(w, x))
                .collect();
            for i in 0..common.len() {
                for j in i + 1..common.len() {
                    let (mut v, mut x) = (common[i], common[j]);
                    if g.id(v) > g.id(x) {
                        std::mem::swap(&mut v, &mut x);
                    }
                    if distinct(&[u, v, w, x]) {
                        out.push(bind(
                            ConfigId::C2,
                            &[("u", u), ("v", v), ("w", w), ("x", x)],
                            g,
                        ));
                    }
                }
            }
        }
    }
    Ok(out)
}

/// C3: d(u) = 8 with weak neighbors v1, v2 of degree 3 and a neighbor v3
/// of degree <= 5. Symmetry: v1 <-> v2 (canonical id(v1) < id(v2)).
fn match_c3(g: &EmbeddedGraph) -> Result<Vec<ConfigMatch>, GraphError> {
    let mut out = Vec::new();
    for u in 0..g.vertex_count() {
        if g.degree(u) != 8 {
            continue;
        }
        let mut weak3 = Vec::new();
        for &v in g.rotation(u) {
            if g.degree(v) == 3 && is_weak(g, u, v)? {
                weak3.push(v);
            }
        }
        for i in 0..weak3.len() {
            for j in i + 1..weak3.len() {
                let (mut v1, mut v2) = (weak3[i], weak3[j]);
                if g.id(v1) > g.id(v2) {
                    std::mem::swap(&mut v1, &mut v2);
                }
                for &v3 in g.rotation(u) {
                    if g.degree(v3) <= 5 && distinct(&[u, v1, v2, v3]) {
                        out.push(bind(
                            ConfigId::C3,
                            &[("u", u), ("v1", v1), ("v2", v2), ("v3", v3)],
                            g,
                        ));
                    }
                }
            }
        }
    }
    Ok(out)
}

/// C4: d(u) = 8 with a weak degree-3 neighbor v1, a semi-weak degree-3
/// neighbor v2, and neighbors v3, v4 of degree <= 5.
/// Symmetry: v3 <-> v4 (canonical id(v3) < id(v4)).
fn match_c4(g: &EmbeddedGraph) -> Result<Vec<ConfigMatch>, GraphError> {
    let mut out = Vec::new();
    for u in 0..g.vertex_count() {
        if g.degree(u) != 8 {
            continue;
        }
        for &v1 in g.rotation(u) {
            if g.degree(v1) != 3 || !is_weak(g, u, v1)? {
                continue;
            }
            for &v2 in g.rotation(u) {
                if g.degree(v2) != 3 || v2 == v1 || !is_semiweak(g, u, v2)? {
                    continue;
                }
                let lows: Vec<usize> = g
                    .rotation(u)
                    .iter()
                    .copied()
                    .filter(|&x| g.degree(x) <= 5 && x != v1 && x != v2)
                    .collect();
                for i in 0..lows.len() {
                    for j in i + 1..lows.len() {
                        let (mut v3, mut v4) = (lows[i], lows[j]);
                        if g.id(v3) > g.id(v4) {
                            std::mem::swap(&mut v3, &mut v4);
                        }
                        out.push(bind(
                            ConfigId::C4,
                            &[("u", u), ("v1", v1), ("v2", v2), ("v3", v3), ("v4", v4)],
                            g,
                        ));
                    }
                }
            }
        }
    }
    Ok(out)
}

/// C5: d(u) = 8 with four weak neighbors: d(v1) = 3, d(v2) = d(v3) = 4,
/// d(v4) <= 5. Symmetry: v2 <-> v3 (canonical id(v2) < id(v3)).
fn match_c5(g: &EmbeddedGraph) -> Result<Vec<ConfigMatch>, GraphError> {
    let mut out = Vec::new();
    for u in 0..g.vertex_count() {
        if g.degree(u) != 8 {
            continue;
        }
        let mut weak: Vec<usize> = Vec::new();
        for &v in g.rotation(u) {
            if is_weak(g, u, v)? {
                weak.push(v);
            }
        }
        for &v1 in &weak {
            if g.degree(v1) != 3 {
                continue;
            }
            let fours: Vec<usize> = weak
                .iter()
                .copied()
                .filter(|&x| g.degree(x) == 4 && x != v1)
                .collect();
            for i in 0..fours.len() {
                for j in i + 1..fours.len() {
                    let (mut v2, mut v3) = (fours[i], fours[j]);
                    if g.id(v2) > g.id(v3) {
                        std::mem::swap(&mut v2, &mut v3);
                    }
                    for &v4 in &weak {
                        if g.degree(v4) <= 5 && distinct(&[u, v1, v2, v3, v4]) {
                            out.push(bind(
                                ConfigId::C5,
                                &[("u", u), ("v1", v1), ("v2", v2), ("v3", v3), ("v4", v4)],
                                g,
                            ));
                        }
                    }
                }
            }
        }
    }
    Ok(out)
}

/// C6: d(u) = 8 with a weak degree-3 neighbor v1 and neighbors v2 of
/// degree 4, v3 and v4 of degree <= 5, v5 of degree <= 7.
/// Symmetry: v3 <-> v4 (canonical id(v3) < id(v4)).
fn match_c6(g: &EmbeddedGraph) -> Result<Vec<ConfigMatch>, GraphError> {
    let mut out = Vec::new();
    for u in 0..g.vertex_count() {
        if g.degree(u) != 8 {
            continue;
        }
        for &v1 in g.rotation(u) {
            if g.degree(v1) != 3 || !is_weak(g, u, v1)? {
                continue;
            }
            for &v2 in g.rotation(u) {
                if g.degree(v2) != 4 || v2 == v1 {
                    continue;
                }
                let lows: Vec<usize> = g
                    .rotation(u)
                    .iter()
                    .copied()
                    .filter(|&x| g.degree(x) <= 5 && x != v1 && x != v2)
                    .collect();
                for i in 0..lows.len() {
                    for j in i + 1..lows.len() {
                        let (mut v3, mut v4) = (lows[i], lows[j]);
                        if g.id(v3) > g.id(v4) {
                            std::mem::swap(&mut v3, &mut v4);
                        }
                        for &v5 in g.rotation(u) {
                            if g.degree(v5) <= 7 && distinct(&[u, v1, v2, v3, v4, v5]) {
                                out.push(bind(
                                    ConfigId::C6,
                                    &[
                                        ("u", u),
                                        ("v1", v1),
                                        ("v2", v2),
                                        ("v3", v3),
                                        ("v4", v4),
                                        ("v5", v5),
                                    ],
                                    g,
                                ));
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(out)
}

/// C7: d(u) = 8 with four weak neighbors: d(v1) = 3, v2 an E2-neighbor
/// of u, d(v3) <= 5, d(v4) <= 5.
/// Symmetry: v3 <-> v4 (canonical id(v3) < id(v4)).
fn match_c7(g: &EmbeddedGraph) -> Result<Vec<ConfigMatch>, GraphError> {
    let mut out = Vec::new();
    for u in 0..g.vertex_count() {
        if g.degree(u) != 8 {
            continue;
        }
        let mut weak: Vec<usize> = Vec::new();
        for &v in g.rotation(u) {
            if is_weak(g, u, v)? {
                weak.push(v);
            }
        }
        for &v1 in &weak {
            if g.degree(v1) != 3 {
                continue;
            }
            for &v2 in &weak {
                if v2 == v1 || special(g, u, v2)? != Some(SpecialClass::E2) {
                    continue;
                }
                let lows: Vec<usize> = weak
                    .iter()
                    .copied()
                    .filter(|&x| g.degree(x) <= 5 && x != v1 && x != v2)
                    .collect();
                for i in 0..lows.len() {
                    for j in i + 1..lows.len() {
                        let (mut v3, mut v4) = (lows[i], lows[j]);
                        if g.id(v3) > g.id(v4) {
                            std::mem::swap(&mut v3, &mut v4);
                        }
                        out.push(bind(
                            ConfigId::C7,
                            &[("u", u), ("v1", v1), ("v2", v2), ("v3", v3), ("v4", v4)],
                            g,
                        ));
                    }
                }
            }
        }
    }
    Ok(out)
}

/// C8: d(u) = 7 with neighbors v, w, x where w is adjacent to v and x,
/// d(w) = 6, d(v) = d(x) = 5, plus a degree-6 vertex y distinct from w
/// and adjacent to x. No non-trivial symmetry (y attaches to x).
fn match_c8(g: &EmbeddedGraph) -> Result<Vec<ConfigMatch>, GraphError> {
    let mut out = Vec::new();
    for u in 0..g.vertex_count() {
        if g.degree(u) != 7 {
            continue;
        }
        for &w in g.rotation(u) {
            if g.degree(w) != 6 {
                continue;
            }
            for &v in g.rotation(u) {
                if g.degree(v) != 5 || v == w || !g.adjacent(w, v) {
                    continue;
                }
                for &x in g.rotation(u) {
                    if g.degree(x) != 5 || x == v || x == w || !g.adjacent(w, x) {
                        continue;
                    }
                    for y in 0..g.vertex_count() {
                        if g.degree(y) == 6
                            && y != w
                            && g.adjacent(y, x)
                            && distinct(&[u, v, w, x, y])
                        {
                            out.push(bind(
                                ConfigId::C8,
                                &[("u", u), ("v", v), ("w", w), ("x", x), ("y", y)],
                                g,
                            ));
                        }
                    }
                }
            }
        }
    }
    Ok(out)
}

/// C9: d(u) = 7 with weak neighbors v1, v2, v3 where d(v1) = d(v2) = 4
/// and either v3 is an S2-, S3- or S4-neighbor of u, or d(v3) = 4.
/// Symmetries: v1 <-> v2 always; all three interchangeable when
/// d(v3) = 4 (canonical: ids ascending within each symmetric group).
fn match_c9(g: &EmbeddedGraph) -> Result<Vec<ConfigMatch>, GraphError> {
    let mut out = Vec::new();
    for u in 0..g.vertex_count() {
        if g.degree(u) != 7 {
            continue;
        }
        let mut weak4 = Vec::new();
        let mut weak_s = Vec::new();
        for &v in g.rotation(u) {
            if !is_weak(g, u, v)? {
                continue;
            }
            if g.degree(v) == 4 {
                weak4.push(v);
            } else if matches!(
                special(g, u, v)?,
                Some(SpecialClass::S2) | Some(SpecialClass::S3) | Some(SpecialClass::S4)
            ) {
                weak_s.push(v);
            }
        }
        weak4.sort_by_key(|&v| g.id(v));
        for i in 0..weak4.len() {
            for j in i + 1..weak4.len() {
                let (v1, v2) = (weak4[i], weak4[j]);
                // Branch 1: v3 a third weak degree-4 neighbor (fully
                // symmetric, so take ids ascending).
                for &v3 in weak4.iter().skip(j + 1) {
                    out.push(bind(
                        ConfigId::C9,
                        &[("u", u), ("v1", v1), ("v2", v2), ("v3", v3)],
                        g,
                    ));
                }
                // Branch 2: v3 an S-classified weak neighbor.
                for &v3 in &weak_s {
                    if distinct(&[u, v1, v2, v3]) {
                        out.push(bind(
                            ConfigId::C9,
                            &[("u", u), ("v1", v1), ("v2", v2), ("v3", v3)],
                            g,
                        ));
                    }
                }
            }
        }
    }
    Ok(out)
}

/// C10: d(u) = 7 with a degree-4 neighbor v1, an S3-neighbor v2, and a
/// neighbor v3 of degree <= 5. No non-trivial symmetry.
fn match_c10(g: &EmbeddedGraph) -> Result<Vec<ConfigMatch>, GraphError> {
    let mut out = Vec::new();
    for u in 0..g.vertex_count() {
        if g.degree(u) != 7 {
            continue;
        }
        for &v2 in g.rotation(u) {
            if special(g, u, v2)? != Some(SpecialClass::S3) {
                continue;
            }
            for &v1 in g.rotation(u) {
                if g.degree(v1) != 4 || v1 == v2 {
                    continue;
                }
                for &v3 in g.rotation(u) {
                    if g.degree(v3) <= 5 && distinct(&[u, v1, v2, v3]) {
                        out.push(bind(
                            ConfigId::C10,
                            &[("u", u), ("v1", v1), ("v2", v2), ("v3", v3)],
                            g,
                        ));
                    }
                }
            }
        }
    }
    Ok(out)
}

/// C11: d(u) = 5 with neighbors v, w, x where w is adjacent to v and x
/// and d(v) = d(w) = d(x) = 6. Symmetry: v <-> x (canonical
/// id(v) < id(x)).
fn match_c11(g: &EmbeddedGraph) -> Result<Vec<ConfigMatch>, GraphError> {
    let mut out = Vec::new();
    for u in 0..g.vertex_count() {
        if g.degree(u) != 5 {
            continue;
        }
        for &w in g.rotation(u) {
            if g.degree(w) != 6 {
                continue;
            }
            let arms: Vec<usize> = g
                .rotation(u)
                .iter()
                .copied()
                .filter(|&x| x != w && g.degree(x) == 6 && g.adjacent(w, x))
                .collect();
            for i in 0..arms.len() {
                for j in i + 1..arms.len() {
                    let (mut v, mut x) = (arms[i], arms[j]);
                    if g.id(v) > g.id(x) {
                        std::mem::swap(&mut v, &mut x);
                    }
                    out.push(bind(
                        ConfigId::C11,
                        &[("u", u), ("v", v), ("w", w), ("x", x)],
                        g,
                    ));
                }
            }
        }
    }
    Ok(out)
}

/// Re-check a reported match clause by clause. Returns `Ok(false)` when
/// some clause does not hold in the host graph.
pub fn verify_match(g: &EmbeddedGraph, m: &ConfigMatch) -> Result<bool, GraphError> {
    let keys: &[&str] = match m.config {
        ConfigId::C1 => &["u", "v"],
        ConfigId::C2 | ConfigId::C11 => &["u", "v", "w", "x"],
        ConfigId::C3 | ConfigId::C9 | ConfigId::C10 => &["u", "v1", "v2", "v3"],
        ConfigId::C4 | ConfigId::C5 | ConfigId::C7 => &["u", "v1", "v2", "v3", "v4"],
        ConfigId::C6 => &["u", "v1", "v2", "v3", "v4", "v5"],
        ConfigId::C8 => &["u", "v", "w", "x", "y"],
    };
    if keys.iter().any(|k| !m.binding.contains_key(k)) {
        return Ok(false);
    }
    let get = |k: &str| -> Result<usize, GraphError> { g.index_of(m.binding[k]) };
    let vals: Vec<u32> = m.binding.values().copied().collect();
    let mut dedup = vals.clone();
    dedup.sort_unstable();
    dedup.dedup();
    if dedup.len() != vals.len() {
        return Ok(false);
    }
    let ok = match m.config {
        ConfigId::C1 => {
            let (u, v) = (get("u")?, get("v")?);
            g.adjacent(u, v) && g.degree(u) + g.degree(v) <= 10
        }
        ConfigId::C2 => {
            let (u, v, w, x) = (get("u")?, get("v")?, get("w")?, get("x")?);
            g.degree(u) == 3
                && g.degree(w) == 3
                && g.adjacent(u, v)
                && g.adjacent(v, w)
                && g.adjacent(w, x)
                && g.adjacent(x, u)
        }
        ConfigId::C3 => {
            let (u, v1, v2, v3) = (get("u")?, get("v1")?, get("v2")?, get("v3")?);
            g.degree(u) == 8
                && [v1, v2].iter().all(|&v| g.adjacent(u, v))
                && g.adjacent(u, v3)
                && g.degree(v1) == 3
                && g.degree(v2) == 3
                && is_weak(g, u, v1)?
                && is_weak(g, u, v2)?
                && g.degree(v3) <= 5
        }
        ConfigId::C4 => {
            let (u, v1, v2) = (get("u")?, get("v1")?, get("v2")?);
            let (v3, v4) = (get("v3")?, get("v4")?);
            g.degree(u) == 8
                && [v1, v2, v3, v4].iter().all(|&v| g.adjacent(u, v))
                && g.degree(v1) == 3
                && is_weak(g, u, v1)?
                && g.degree(v2) == 3
                && is_semiweak(g, u, v2)?
                && g.degree(v3) <= 5
                && g.degree(v4) <= 5
        }
        ConfigId::C5 => {
            let (u, v1, v2) = (get("u")?, get("v1")?, get("v2")?);
            let (v3, v4) = (get("v3")?, get("v4")?);
            let mut ok = g.degree(u) == 8
                && g.degree(v1) == 3
                && g.degree(v2) == 4
                && g.degree(v3) == 4
                && g.degree(v4) <= 5;
            for v in [v1, v2, v3, v4] {
                ok = ok && g.adjacent(u, v) && is_weak(g, u, v)?;
            }
            ok
        }
        ConfigId::C6 => {
            let (u, v1, v2) = (get("u")?, get("v1")?, get("v2")?);
            let (v3, v4, v5) = (get("v3")?, get("v4")?, get("v5")?);
            g.degree(u) == 8
                && [v1, v2, v3, v4, v5].iter().all(|&v| g.adjacent(u, v))
                && g.degree(v1) == 3
                && is_weak(g, u, v1)?
                && g.degree(v2) == 4
                && g.degree(v3) <= 5
                && g.degree(v4) <= 5
                && g.degree(v5) <= 7
        }
        ConfigId::C7 => {
            let (u, v1, v2) = (get("u")?, get("v1")?, get("v2")?);
            let (v3, v4) = (get("v3")?, get("v4")?);
            let mut ok = g.degree(u) == 8
                && g.degree(v1) == 3
                && g.degree(v3) <= 5
                && g.degree(v4) <= 5
                && special(g, u, v2)? == Some(SpecialClass::E2);
            for v in [v1, v2, v3, v4] {
                ok = ok && g.adjacent(u, v) && is_weak(g, u, v)?;
            }
            ok
        }
        ConfigId::C8 => {
            let (u, v, w, x, y) = (get("u")?, get("v")?, get("w")?, get("x")?, get("y")?);
            g.degree(u) == 7
                && [v, w, x].iter().all(|&z| g.adjacent(u, z))
                && g.adjacent(w, v)
                && g.adjacent(w, x)
                && g.degree(w) == 6
                && g.degree(v) == 5
                && g.degree(x) == 5
                && g.degree(y) == 6
                && g.adjacent(y, x)
        }
        ConfigId::C9 => {
            let (u, v1, v2, v3) = (get("u")?, get("v1")?, get("v2")?, get("v3")?);
            let mut ok = g.degree(u) == 7 && g.degree(v1) == 4 && g.degree(v2) == 4;
            for v in [v1, v2, v3] {
                ok = ok && g.adjacent(u, v) && is_weak(g, u, v)?;
            }
            ok && (g.degree(v3) == 4
                || matches!(
                    special(g, u, v3)?,
                    Some(SpecialClass::S2) | Some(SpecialClass::S3) | Some(SpecialClass::S4)
                ))
        }
        ConfigId::C10 => {
            let (u, v1, v2, v3) = (get("u")?, get("v1")?, get("v2")?, get("v3")?);
            g.degree(u) == 7
                && [v1, v2, v3].iter().all(|&v| g.adjacent(u, v))
                && g.degree(v1) == 4
                && special(g, u, v2)? == Some(SpecialClass::S3)
                && g.degree(v3) <= 5
        }
        ConfigId::C11 => {
            let (u, v, w, x) = (get("u")?, get("v")?, get("w")?, get("x")?);
            g.degree(u) == 5
                && [v, w, x].iter().all(|&z| g.adjacent(u, z))
                && g.adjacent(w, v)
                && g.adjacent(w, x)
                && g.degree(v) == 6
                && g.degree(w) == 6
                && g.degree(x) == 6
        }
    };
    Ok(ok)
}

/// Build the JSON report for a match: the witness faces are the faces
/// incident to the classified (weak / semi-weak / E / S) edges of the
/// binding, as vertex walks.
pub fn report(g: &EmbeddedGraph, m: &ConfigMatch) -> Result<MatchReport, GraphError> {
    let classified: &[(&str, &str)] = match m.config {
        ConfigId::C1 | ConfigId::C2 | ConfigId::C8 | ConfigId::C11 => &[],
        ConfigId::C3 => &[("u", "v1"), ("u", "v2")],
        ConfigId::C4 => &[("u", "v1"), ("u", "v2")],
        ConfigId::C5 | ConfigId::C7 => &[("u", "v1"), ("u", "v2"), ("u", "v3"), ("u", "v4")],
        ConfigId::C6 => &[("u", "v1")],
        ConfigId::C9 => &[("u", "v1"), ("u", "v2"), ("u", "v3")],
        ConfigId::C10 => &[("u", "v2")],
    };
    let mut face_ids = Vec::new();
    for &(a, b) in classified {
        let u = g.index_of(m.binding[a])?;
        let v = g.index_of(m.binding[b])?;
        let (f1, f2) = g.edge_faces(u, v)?;
        for f in [f1, f2] {
            if !face_ids.contains(&f) {
                face_ids.push(f);
            }
        }
    }
    face_ids.sort_unstable();
    let witness_faces = face_ids
        .iter()
        .map(|&f| g.faces()[f].vertices().map(|v| g.id(v)).collect())
        .collect();
    Ok(MatchReport {
        config: m.config.to_string(),
        binding: m.binding.clone(),
        witness_faces,
    })
}

#[cfg(test)]
mod tests;
