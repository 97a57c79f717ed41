//! Reducibility gadgets and their verification.
//!
//! Each configuration C1-C11 comes with one or more local gadgets: a
//! set of named vertices carrying their worst-case host degrees and a
//! set of uncolored edges. The residual list size of an uncolored edge
//! (x, y) is `9 - ((d(x)-1) + (d(y)-1) - k)`, where `k` counts the
//! other uncolored edges sharing x or y; every gadget's computed sizes
//! must reproduce its quoted worst-case profile exactly.
//!
//! Small gadgets are checked exhaustively over all canonical list
//! assignments; the larger ones are checked on uniform canonical
//! samples with the exact solver. A few gadgets are *not* plainly
//! choosable at their worst-case profile: the surrounding argument
//! first recolors the already-colored context whenever the lists fall
//! into a specific degenerate pattern. Those gadgets carry an escape
//! predicate recognizing exactly that pattern; escaped samples are
//! counted and reported, and the recoloring step itself is verified by
//! [`check_recoloring_claims`].

use crate::configs::ConfigId;
use crate::listcolor::enumerate::{
    choosable_exhaustive, format_assignment, sample_assignment, ChooseStatus,
};
use crate::listcolor::recolor::{brute_force_recolor, recolor_rotate_or_cascade, RecolorInstance};
use crate::listcolor::{color_edges, residual_size, ColorSet, EdgeInstance};
use rand::seq::SliceRandom;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Tier {
    Exhaustive,
    Sampled,
}

/// A proof-figure local subgraph with designated uncolored edges.
#[derive(Debug, Clone)]
pub struct Gadget {
    pub config: ConfigId,
    pub variant: &'static str,
    pub tier: Tier,
    /// Named vertices with their worst-case host degrees.
    pub vertices: Vec<(&'static str, usize)>,
    /// Uncolored edges: label, endpoints (indices into `vertices`).
    pub edges: Vec<(&'static str, usize, usize)>,
    /// Quoted worst-case residual sizes, parallel to `edges`.
    pub profile: Vec<usize>,
    /// Degenerate-list pattern removed by the recoloring step, if any.
    pub escape: Option<fn(&[ColorSet]) -> bool>,
}

impl Gadget {
    /// The uncolored edges as an abstract instance (conflict iff the
    /// edges share an endpoint).
    pub fn instance(&self) -> EdgeInstance {
        EdgeInstance::new(
            self.edges
                .iter()
                .map(|&(_, a, b)| (a as u32, b as u32))
                .collect(),
        )
    }

    /// Residual list sizes computed from host degrees and uncolored
    /// conflicts, labeled edge by labeled edge.
    pub fn residual_sizes(&self) -> Vec<(&'static str, i64)> {
        self.edges
            .iter()
            .enumerate()
            .map(|(i, &(label, a, b))| {
                let k = self
                    .edges
                    .iter()
                    .enumerate()
                    .filter(|&(j, &(_, c, d))| {
                        j != i && (c == a || c == b || d == a || d == b)
                    })
                    .count();
                let size = residual_size(self.vertices[a].1, self.vertices[b].1, k);
                (label, size)
            })
            .collect()
    }

    /// True when the computed sizes equal the quoted profile.
    pub fn profile_ok(&self) -> bool {
        self.residual_sizes()
            .iter()
            .zip(self.profile.iter())
            .all(|(&(_, got), &want)| got == want as i64)
    }

    pub fn name(&self) -> String {
        if self.variant.is_empty() {
            self.config.to_string()
        } else {
            format!("{}-{}", self.config, self.variant)
        }
    }
}

fn escape_pair_equal(lists: &[ColorSet]) -> bool {
    // Order: a1, b1, c1, a2, b2, c2 — both pendant pairs identical.
    lists[0] == lists[1] && lists[3] == lists[4]
}

fn escape_all_equal(lists: &[ColorSet]) -> bool {
    lists[0] == lists[1] && lists[1] == lists[2]
}

fn make(
    config: ConfigId,
    variant: &'static str,
    tier: Tier,
    vertices: &[(&'static str, usize)],
    edges: &[(&'static str, &'static str, &'static str)],
    profile: &[usize],
    escape: Option<fn(&[ColorSet]) -> bool>,
) -> Gadget {
    let idx = |n: &str| {
        vertices
            .iter()
            .position(|&(v, _)| v == n)
            .unwrap_or_else(|| panic!("unknown vertex {n}"))
    };
    Gadget {
        config,
        variant,
        tier,
        vertices: vertices.to_vec(),
        edges: edges.iter().map(|&(l, a, b)| (l, idx(a), idx(b))).collect(),
        profile: profile.to_vec(),
        escape,
    }
}

/// All gadgets, in configuration order.
pub fn catalog() -> Vec<Gadget> {
    use ConfigId::*;
    use Tier::*;
    vec![
        make(
            C1,
            "",
            Exhaustive,
            &[("u", 5), ("v", 5)],
            &[("a", "u", "v")],
            &[1],
            None,
        ),
        make(
            C2,
            "",
            Exhaustive,
            &[("u", 3), ("v", 8), ("w", 3), ("x", 8)],
            &[("a", "u", "v"), ("b", "v", "w"), ("c", "w", "x"), ("d", "x", "u")],
            &[2, 2, 2, 2],
            None,
        ),
        make(
            C3,
            "",
            Sampled,
            &[
                ("u", 8),
                ("v1", 3),
                ("w1", 8),
                ("x1", 8),
                ("v2", 3),
                ("w2", 8),
                ("x2", 8),
            ],
            &[
                ("a1", "v1", "w1"),
                ("b1", "x1", "v1"),
                ("c1", "u", "v1"),
                ("a2", "w2", "v2"),
                ("b2", "v2", "x2"),
                ("c2", "u", "v2"),
            ],
            &[2, 2, 3, 2, 2, 3],
            Some(escape_pair_equal),
        ),
        make(
            C4,
            "",
            Sampled,
            &[
                ("u", 8),
                ("v1", 3),
                ("w1", 8),
                ("x1", 8),
                ("v2", 3),
                ("w2", 8),
                ("w3", 8),
            ],
            &[
                ("a1", "v1", "w1"),
                ("b1", "x1", "v1"),
                ("c1", "u", "v1"),
                ("a2", "v2", "w2"),
                ("b2", "w3", "v2"),
                ("c2", "u", "v2"),
            ],
            &[2, 2, 3, 2, 2, 3],
            Some(escape_pair_equal),
        ),
        make(
            C5,
            "consecutive",
            Sampled,
            &[
                ("u", 8),
                ("v1", 3),
                ("w1", 8),
                ("v2", 4),
                ("w2", 8),
                ("v3", 4),
                ("w3", 8),
                ("v4", 5),
                ("w4", 8),
                ("x2", 8),
                ("x3", 8),
            ],
            &[
                ("a", "u", "v1"),
                ("b", "u", "w1"),
                ("c", "u", "v2"),
                ("d", "u", "w2"),
                ("e", "u", "v3"),
                ("f", "u", "w3"),
                ("g", "u", "v4"),
                ("h", "u", "w4"),
                ("i", "w4", "v1"),
                ("j", "v1", "w1"),
                ("k", "w1", "v2"),
                ("l", "x2", "v2"),
                ("m", "v2", "w2"),
                ("n", "w2", "v3"),
                ("o", "x3", "v3"),
                ("p", "v3", "w3"),
                ("q", "w3", "v4"),
                ("r", "v4", "w4"),
            ],
            &[9, 4, 9, 4, 9, 4, 7, 4, 4, 4, 4, 2, 4, 4, 2, 4, 2, 2],
            None,
        ),
        make(
            C5,
            "split",
            Sampled,
            &[
                ("u", 8),
                ("v1", 3),
                ("w1", 8),
                ("v2", 4),
                ("w2", 8),
                ("v4", 5),
                ("w3", 8),
                ("v3", 4),
                ("w4", 8),
                ("x2", 8),
                ("x3", 8),
            ],
            &[
                ("a", "u", "v1"),
                ("b", "u", "w1"),
                ("c", "u", "v2"),
                ("d", "u", "w2"),
                ("e", "u", "v4"),
                ("f", "u", "w3"),
                ("g", "u", "v3"),
                ("h", "u", "w4"),
                ("i", "w4", "v1"),
                ("j", "v1", "w1"),
                ("k", "w1", "v2"),
                ("l", "x2", "v2"),
                ("m", "v2", "w2"),
                ("n", "w2", "v4"),
                ("o", "v4", "w3"),
                ("p", "w3", "v3"),
                ("q", "v3", "x3"),
                ("r", "v3", "w4"),
            ],
            &[9, 4, 9, 4, 7, 4, 9, 4, 4, 4, 4, 2, 4, 2, 2, 4, 2, 4],
            None,
        ),
        make(
            C6,
            "",
            Sampled,
            &[("u", 8), ("v1", 3), ("w1", 8), ("w4", 8)],
            &[("a", "w4", "v1"), ("b", "v1", "w1"), ("c", "u", "v1")],
            &[2, 2, 2],
            Some(escape_all_equal),
        ),
        make(
            C7,
            "a",
            Sampled,
            &[
                ("u", 8),
                ("v1", 3),
                ("x1", 8),
                ("v2", 5),
                ("x2", 6),
                ("v3", 5),
                ("x3", 8),
                ("v4", 5),
                ("x4", 8),
                ("y", 6),
                ("z", 8),
            ],
            &[
                ("a", "u", "v1"),
                ("b", "u", "x1"),
                ("c", "u", "v2"),
                ("d", "u", "x2"),
                ("e", "u", "v3"),
                ("f", "u", "x3"),
                ("g", "u", "v4"),
                ("h", "u", "x4"),
                ("i", "x4", "v1"),
                ("j", "v1", "x1"),
                ("k", "x1", "v2"),
                ("l", "v2", "x2"),
                ("m", "x2", "v3"),
                ("n", "v3", "x3"),
                ("o", "x3", "v4"),
                ("p", "v4", "x4"),
                ("q", "v2", "z"),
                ("r", "v2", "y"),
                ("s", "y", "x2"),
            ],
            &[9, 4, 9, 7, 7, 4, 7, 4, 4, 4, 4, 7, 5, 2, 2, 2, 2, 5, 3],
            None,
        ),
        make(
            C7,
            "b",
            Sampled,
            &[
                ("u", 8),
                ("v1", 3),
                ("x1", 8),
                ("v3", 5),
                ("x2", 6),
                ("v2", 5),
                ("x3", 6),
                ("v4", 5),
                ("x4", 8),
                ("y", 7),
                ("z", 8),
            ],
            &[
                ("a", "u", "v1"),
                ("b", "u", "x1"),
                ("c", "u", "v3"),
                ("d", "u", "x2"),
                ("e", "u", "v2"),
                ("f", "u", "x3"),
                ("g", "u", "v4"),
                ("h", "u", "x4"),
                ("i", "x4", "v1"),
                ("j", "v1", "x1"),
                ("k", "x1", "v3"),
                ("l", "v3", "x2"),
                ("m", "x2", "v2"),
                ("n", "v2", "x3"),
                ("o", "x3", "v4"),
                ("p", "v4", "x4"),
                ("q", "v2", "z"),
                ("r", "v2", "y"),
                ("s", "y", "x3"),
            ],
            &[9, 4, 7, 6, 9, 7, 7, 4, 4, 4, 2, 4, 6, 7, 5, 2, 2, 4, 2],
            None,
        ),
        make(
            C7,
            "c",
            Sampled,
            &[
                ("u", 8),
                ("v1", 3),
                ("x1", 8),
                ("v3", 5),
                ("x2", 8),
                ("v2", 5),
                ("x3", 6),
                ("v4", 5),
                ("x4", 8),
                ("y", 6),
                ("z", 8),
            ],
            &[
                ("a", "u", "v1"),
                ("b", "u", "x1"),
                ("c", "u", "v3"),
                ("d", "u", "x2"),
                ("e", "u", "v2"),
                ("f", "u", "x3"),
                ("g", "u", "v4"),
                ("h", "u", "x4"),
                ("i", "x4", "v1"),
                ("j", "v1", "x1"),
                ("k", "x1", "v3"),
                ("l", "v3", "x2"),
                ("m", "x2", "v2"),
                ("n", "v2", "x3"),
                ("o", "x3", "v4"),
                ("p", "v4", "x4"),
                ("q", "v2", "z"),
                ("r", "v2", "y"),
                ("s", "y", "x3"),
            ],
            &[9, 4, 7, 4, 9, 7, 7, 4, 4, 4, 2, 2, 4, 7, 5, 2, 2, 5, 3],
            None,
        ),
        make(
            C8,
            "",
            Exhaustive,
            &[("u", 7), ("v", 5), ("w", 6), ("x", 5), ("y", 6)],
            &[
                ("a", "x", "y"),
                ("b", "w", "x"),
                ("c", "v", "w"),
                ("d", "u", "v"),
                ("e", "x", "u"),
                ("f", "u", "w"),
            ],
            &[2, 4, 3, 2, 3, 2],
            None,
        ),
        make(
            C9,
            "a",
            Sampled,
            &[
                ("u", 7),
                ("y1", 8),
                ("v1", 4),
                ("x", 8),
                ("v2", 4),
                ("y2", 8),
                ("v3", 5),
                ("z", 7),
                ("w1", 8),
                ("w2", 8),
            ],
            &[
                ("a", "u", "y1"),
                ("b", "u", "v1"),
                ("c", "u", "x"),
                ("d", "u", "v2"),
                ("e", "u", "y2"),
                ("f", "u", "v3"),
                ("g", "u", "z"),
                ("h", "y1", "v1"),
                ("i", "v1", "w1"),
                ("j", "v1", "x"),
                ("k", "x", "v2"),
                ("l", "v2", "w2"),
                ("m", "v2", "y2"),
                ("n", "y2", "v3"),
                ("o", "v3", "z"),
            ],
            &[3, 9, 4, 9, 4, 7, 4, 3, 2, 4, 4, 2, 4, 2, 2],
            None,
        ),
        make(
            C9,
            "b",
            Sampled,
            &[
                ("u", 7),
                ("y1", 8),
                ("v1", 4),
                ("x", 8),
                ("v2", 4),
                ("y2", 7),
                ("v3", 5),
                ("z", 8),
                ("w1", 8),
                ("w2", 8),
            ],
            &[
                ("a", "u", "y1"),
                ("b", "u", "v1"),
                ("c", "u", "x"),
                ("d", "u", "v2"),
                ("e", "u", "y2"),
                ("f", "u", "v3"),
                ("g", "u", "z"),
                ("h", "y1", "v1"),
                ("i", "v1", "w1"),
                ("j", "v1", "x"),
                ("k", "x", "v2"),
                ("l", "v2", "w2"),
                ("m", "v2", "y2"),
            ],
            &[3, 9, 4, 9, 4, 5, 2, 3, 2, 4, 4, 2, 4],
            None,
        ),
        make(
            C9,
            "c",
            Sampled,
            &[
                ("u", 7),
                ("y1", 8),
                ("v1", 4),
                ("x", 8),
                ("v2", 4),
                ("y2", 8),
                ("v3", 5),
                ("z", 8),
                ("w1", 8),
                ("w2", 8),
                ("wp", 8),
                ("w6", 6),
            ],
            &[
                ("a", "u", "y1"),
                ("b", "u", "v1"),
                ("c", "u", "x"),
                ("d", "u", "v2"),
                ("e", "u", "y2"),
                ("f", "u", "v3"),
                ("g", "u", "z"),
                ("h", "y1", "v1"),
                ("i", "v1", "w1"),
                ("j", "v1", "x"),
                ("k", "x", "v2"),
                ("l", "v2", "w2"),
                ("m", "v2", "y2"),
                ("n", "y2", "v3"),
                ("o", "v3", "z"),
                ("p", "v3", "wp"),
                ("q", "v3", "w6"),
            ],
            &[3, 9, 4, 9, 4, 9, 3, 3, 2, 4, 4, 2, 4, 4, 3, 2, 4],
            None,
        ),
        make(
            C9,
            "d",
            Sampled,
            &[
                ("u", 7),
                ("y1", 8),
                ("v1", 4),
                ("y2", 7),
                ("v3", 5),
                ("y3", 8),
                ("v2", 4),
                ("y4", 8),
                ("w1", 8),
                ("w2", 8),
            ],
            &[
                ("a", "u", "y1"),
                ("b", "u", "v1"),
                ("c", "u", "y2"),
                ("d", "u", "v3"),
                ("e", "u", "y3"),
                ("f", "u", "v2"),
                ("g", "u", "y4"),
                ("h", "y1", "v1"),
                ("i", "v1", "w1"),
                ("j", "v1", "y2"),
                ("k", "y2", "v3"),
                ("l", "v3", "y3"),
                ("m", "y3", "v2"),
                ("n", "v2", "w2"),
                ("o", "v2", "y4"),
            ],
            &[3, 9, 5, 7, 4, 9, 3, 3, 2, 5, 3, 2, 4, 2, 3],
            None,
        ),
        make(
            C9,
            "e",
            Sampled,
            &[
                ("u", 7),
                ("y1", 8),
                ("v1", 4),
                ("y2", 8),
                ("v3", 5),
                ("y3", 8),
                ("v2", 4),
                ("y4", 8),
                ("w1", 8),
                ("w2", 8),
                ("w6", 6),
                ("w7", 7),
            ],
            &[
                ("a", "u", "y1"),
                ("b", "u", "v1"),
                ("c", "u", "y2"),
                ("d", "u", "v3"),
                ("e", "u", "y3"),
                ("f", "u", "v2"),
                ("g", "u", "y4"),
                ("h", "y1", "v1"),
                ("i", "v1", "w1"),
                ("j", "v1", "y2"),
                ("k", "y2", "v3"),
                ("l", "v3", "y3"),
                ("m", "y3", "v2"),
                ("n", "v2", "w2"),
                ("o", "v2", "y4"),
                ("p", "v3", "w6"),
                ("q", "v3", "w7"),
            ],
            &[3, 9, 4, 9, 4, 9, 3, 3, 2, 4, 4, 4, 4, 2, 3, 4, 3],
            None,
        ),
        make(
            C10,
            "a",
            Sampled,
            &[
                ("u", 7),
                ("v2", 5),
                ("y", 6),
                ("v1", 4),
                ("v3", 5),
                ("w4", 8),
                ("w3", 7),
                ("w2", 6),
            ],
            &[
                ("a", "u", "v2"),
                ("b1", "u", "v3"),
                ("b2", "u", "v1"),
                ("c1", "v2", "w4"),
                ("c2", "v2", "w3"),
                ("c3", "v2", "w2"),
                ("d", "v2", "y"),
                ("e", "y", "u"),
            ],
            &[6, 2, 3, 2, 3, 4, 5, 2],
            None,
        ),
        make(
            C10,
            "b",
            Sampled,
            &[
                ("u", 7),
                ("v2", 5),
                ("y1", 7),
                ("y2", 7),
                ("z1", 6),
                ("z2", 6),
                ("v1", 4),
            ],
            &[
                ("a", "v2", "u"),
                ("b", "v2", "y1"),
                ("c", "v2", "z1"),
                ("d", "v2", "z2"),
                ("e", "v2", "y2"),
                ("f", "y2", "u"),
                ("g", "u", "y1"),
                ("h", "y1", "z1"),
                ("i", "z1", "z2"),
                ("j", "z2", "y2"),
                ("k", "u", "v1"),
            ],
            &[6, 5, 6, 6, 5, 2, 2, 2, 3, 2, 3],
            None,
        ),
        make(
            C11,
            "",
            Exhaustive,
            &[("u", 5), ("v", 6), ("w", 6), ("x", 6)],
            &[
                ("a", "u", "v"),
                ("b", "u", "w"),
                ("c", "x", "u"),
                ("d", "v", "w"),
                ("e", "w", "x"),
            ],
            &[3, 4, 3, 2, 2],
            None,
        ),
    ]
}

/// Look up a gadget by configuration and variant tag ("" for the
/// default variant).
pub fn build_gadget(config: ConfigId, variant: &str) -> Option<Gadget> {
    catalog()
        .into_iter()
        .find(|g| g.config == config && g.variant == variant)
}

/// One claim's verification outcome, serialized with stable field
/// order.
#[derive(Debug, Clone, Serialize)]
pub struct Verdict {
    pub claim: String,
    pub variant: String,
    pub tier: String,
    pub status: ChooseStatus,
    pub instances: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub escaped: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl Verdict {
    pub fn passed(&self) -> bool {
        self.status == ChooseStatus::Pass
    }
}

/// Exhaustive reducibility: every canonical assignment at the worst
/// profile is colorable.
pub fn check_reducible_exhaustive(g: &Gadget) -> Verdict {
    assert!(g.profile_ok(), "{}: profile mismatch", g.name());
    let sizes: Vec<u32> = g.profile.iter().map(|&s| s as u32).collect();
    let v = choosable_exhaustive(&g.instance(), &sizes, 8, 20);
    Verdict {
        claim: g.config.to_string(),
        variant: g.variant.to_string(),
        tier: "exhaustive".to_string(),
        status: v.status,
        instances: v.instances.to_string(),
        escaped: None,
        witness: v.witness.as_deref().map(format_assignment),
    }
}

/// Sampled reducibility: `samples` canonical assignments drawn
/// uniformly at the worst profile; each must be colorable unless the
/// gadget's escape predicate marks it as handled by the recoloring
/// step. A failure is final and carries the witness.
pub fn check_reducible_sampled(g: &Gadget, samples: u64, seed: u64) -> Verdict {
    assert!(g.profile_ok(), "{}: profile mismatch", g.name());
    let sizes: Vec<u32> = g.profile.iter().map(|&s| s as u32).collect();
    let palette: u32 = sizes.iter().sum();
    let inst = g.instance();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut escaped = 0u64;
    let fixed = vec![None; inst.len()];
    for _ in 0..samples {
        let lists = sample_assignment(&sizes, palette, &mut rng);
        if let Some(esc) = g.escape {
            if esc(&lists) {
                escaped += 1;
                continue;
            }
        }
        if color_edges(&inst, &lists, &fixed).is_none() {
            return Verdict {
                claim: g.config.to_string(),
                variant: g.variant.to_string(),
                tier: "sampled".to_string(),
                status: ChooseStatus::Fail,
                instances: samples.to_string(),
                escaped: Some(escaped),
                witness: Some(format_assignment(&lists)),
            };
        }
    }
    Verdict {
        claim: g.config.to_string(),
        variant: g.variant.to_string(),
        tier: "sampled".to_string(),
        status: ChooseStatus::Pass,
        instances: samples.to_string(),
        escaped: Some(escaped),
        witness: None,
    }
}

/// The three recoloring bound families used by the escape arguments.
/// Each instance is a star (all edges at one vertex, so all conflicts),
/// with the listed allowed-set sizes and targets.
pub const RECOLOR_FAMILIES: [(&str, &[u32], &[bool]); 3] = [
    (
        "two-pendant-pairs",
        &[2, 2, 2, 2, 4],
        &[true, true, true, true, false],
    ),
    (
        "pair-and-single",
        &[2, 2, 2, 4, 4],
        &[true, true, true, false, false],
    ),
    (
        "fan",
        &[2, 2, 5, 4, 4, 2],
        &[true, true, false, false, false, false],
    ),
];

fn random_star_instance(
    sizes: &[u32],
    targets: &[bool],
    palette: u32,
    rng: &mut ChaCha8Rng,
) -> RecolorInstance {
    let n = sizes.len();
    let mut colors: Vec<u32> = (0..palette).collect();
    colors.shuffle(rng);
    let current: Vec<u32> = colors[..n].to_vec();
    let allowed: Vec<ColorSet> = (0..n)
        .map(|i| {
            let mut set: ColorSet = 1u128 << current[i];
            while set.count_ones() < sizes[i] {
                set |= 1u128 << rng.gen_range(0..palette);
            }
            set
        })
        .collect();
    RecolorInstance {
        edges: (0..n as u32).map(|i| (0, i + 1)).collect(),
        current,
        allowed,
        targets: targets.to_vec(),
        relaxed: false,
    }
}

/// For each bound family, draw random star instances at exactly the
/// stated sizes and require the rotate-or-cascade procedure to succeed
/// (cross-checked against the brute-force oracle).
pub fn check_recoloring_claims(samples: u64, seed: u64) -> Vec<Verdict> {
    let mut out = Vec::new();
    for (idx, &(name, sizes, targets)) in RECOLOR_FAMILIES.iter().enumerate() {
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (idx as u64) << 32);
        let palette = sizes.iter().sum::<u32>() + 2;
        let mut status = ChooseStatus::Pass;
        let mut witness = None;
        for _ in 0..samples {
            let inst = random_star_instance(sizes, targets, palette, &mut rng);
            let got = recolor_rotate_or_cascade(&inst).expect("well-formed instance");
            let oracle = brute_force_recolor(&inst);
            if got.is_none() || oracle.is_none() {
                status = ChooseStatus::Fail;
                witness = Some(format!(
                    "current={:?} allowed={}",
                    inst.current,
                    format_assignment(&inst.allowed)
                ));
                break;
            }
        }
        out.push(Verdict {
            claim: "recolor".to_string(),
            variant: name.to_string(),
            tier: "sampled".to_string(),
            status,
            instances: samples.to_string(),
            escaped: None,
            witness,
        });
    }
    out
}

/// Agreement between the rotate-or-cascade procedure and the
/// brute-force oracle on random star instances (the procedure is
/// complete exactly on stars, where every pair of edges conflicts).
pub fn check_recolor_agreement(trials: u64, seed: u64) -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut status = ChooseStatus::Pass;
    let mut witness = None;
    for _ in 0..trials {
        let n = rng.gen_range(2..=6usize);
        let palette = rng.gen_range(n as u32 + 1..=n as u32 + 4);
        let sizes: Vec<u32> = (0..n).map(|_| rng.gen_range(1..=3u32)).collect();
        let mut targets: Vec<bool> = (0..n).map(|_| rng.gen_bool(0.4)).collect();
        if !targets.iter().any(|&t| t) {
            targets[0] = true;
        }
        let inst = random_star_instance(&sizes, &targets, palette, &mut rng);
        let got = recolor_rotate_or_cascade(&inst).expect("well-formed instance");
        let oracle = brute_force_recolor(&inst);
        if got.is_some() != oracle.is_some() {
            status = ChooseStatus::Fail;
            witness = Some(format!(
                "current={:?} allowed={} targets={:?} procedure={} oracle={}",
                inst.current,
                format_assignment(&inst.allowed),
                inst.targets,
                got.is_some(),
                oracle.is_some()
            ));
            break;
        }
    }
    Verdict {
        claim: "recolor".to_string(),
        variant: "oracle-agreement".to_string(),
        tier: "sampled".to_string(),
        status,
        instances: trials.to_string(),
        escaped: None,
        witness,
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct RunReport {
    pub pass: bool,
    pub claims: Vec<Verdict>,
}

fn lemma_verdict(name: &str, outcome: crate::listcolor::enumerate::LemmaOutcome) -> Verdict {
    Verdict {
        claim: name.to_string(),
        variant: String::new(),
        tier: "exhaustive".to_string(),
        status: if outcome.pass {
            ChooseStatus::Pass
        } else {
            ChooseStatus::Fail
        },
        instances: outcome.detail.len().to_string(),
        escaped: None,
        witness: if outcome.pass {
            None
        } else {
            Some(outcome.detail.join("; "))
        },
    }
}

/// Run every claim at the requested tier(s). `pass` is true only if
/// nothing failed.
pub fn run_all(tier: Option<Tier>, samples: u64, seed: u64) -> RunReport {
    use crate::listcolor::enumerate::{verify_even_cycle, verify_l2322, verify_star3};
    let mut claims = Vec::new();
    let want = |t: Tier| tier.is_none() || tier == Some(t);
    if want(Tier::Exhaustive) {
        claims.push(lemma_verdict("evencycle", verify_even_cycle(8)));
        claims.push(lemma_verdict("l2322", verify_l2322()));
        claims.push(lemma_verdict("star3", verify_star3()));
    }
    for g in catalog() {
        match g.tier {
            Tier::Exhaustive if want(Tier::Exhaustive) => {
                claims.push(check_reducible_exhaustive(&g))
            }
            Tier::Sampled if want(Tier::Sampled) => {
                claims.push(check_reducible_sampled(&g, samples, seed))
            }
            _ => {}
        }
    }
    if want(Tier::Sampled) {
        claims.extend(check_recoloring_claims(samples.min(2000), seed));
        claims.push(check_recolor_agreement(samples.min(2000), seed));
    }
    let pass = claims.iter().all(|c| c.passed());
    RunReport { pass, claims }
}
