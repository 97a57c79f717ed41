//! The directed recoloring procedure.
//!
//! Given a set of already-colored edges that may be recolored (each with
//! an allowed color set) and a subset of *target* edges, build the
//! digraph D on the recolorable edges with an arc `x -> y` whenever the
//! current color of `x` belongs to the allowed set of `y`. Then:
//!
//! - if D has a directed cycle through a target, rotating the colors
//!   along it recolors every cycle edge (each takes its predecessor's
//!   color);
//! - otherwise, shift colors along a directed path into a target whose
//!   start can pick a fresh color (a path of length zero is just
//!   recoloring an in-degree-0 target).
//!
//! Every candidate move is validated before being returned (the result
//! must be proper, inside the allowed sets, and must change at least one
//! target), so the procedure never returns an improper coloring; it
//! reports failure when no rotation or shift works.

use super::ColorSet;

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum RecolorError {
    #[error("current coloring is improper")]
    ImproperCurrent,
    #[error("edge {0} has a current color outside its allowed set")]
    CurrentNotAllowed(usize),
    #[error("instance has no target edges")]
    NoTargets,
    #[error("malformed instance: {0}")]
    Malformed(String),
}

/// A recoloring instance over abstract edges.
#[derive(Debug, Clone)]
pub struct RecolorInstance {
    /// Edge endpoints; two edges conflict iff they share an endpoint.
    pub edges: Vec<(u32, u32)>,
    /// Current (proper) colors.
    pub current: Vec<u32>,
    /// Allowed colors per edge.
    pub allowed: Vec<ColorSet>,
    /// Targets: at least one of these must end up recolored.
    pub targets: Vec<bool>,
    /// When set, an edge's current color need not lie in its allowed set
    /// (the allowed set then only constrains its *new* color).
    pub relaxed: bool,
}

impl RecolorInstance {
    fn conflicts(&self, i: usize, j: usize) -> bool {
        let (a, b) = self.edges[i];
        let (c, d) = self.edges[j];
        a == c || a == d || b == c || b == d
    }

    fn validate(&self) -> Result<(), RecolorError> {
        let n = self.edges.len();
        if self.current.len() != n || self.allowed.len() != n || self.targets.len() != n {
            return Err(RecolorError::Malformed("length mismatch".into()));
        }
        if !self.targets.iter().any(|&t| t) {
            return Err(RecolorError::NoTargets);
        }
        for i in 0..n {
            for j in i + 1..n {
                if self.conflicts(i, j) && self.current[i] == self.current[j] {
                    return Err(RecolorError::ImproperCurrent);
                }
            }
        }
        if !self.relaxed {
            for i in 0..n {
                if self.allowed[i] >> self.current[i] & 1 == 0 {
                    return Err(RecolorError::CurrentNotAllowed(i));
                }
            }
        }
        Ok(())
    }

    fn is_valid_result(&self, new: &[u32]) -> bool {
        let n = self.edges.len();
        for i in 0..n {
            if new[i] != self.current[i] && self.allowed[i] >> new[i] & 1 == 0 {
                return false;
            }
            for j in i + 1..n {
                if self.conflicts(i, j) && new[i] == new[j] {
                    return false;
                }
            }
        }
        (0..n).any(|i| self.targets[i] && new[i] != self.current[i])
    }
}

/// Run the rotate-or-cascade procedure. `Ok(Some(colors))` is a valid
/// recoloring; `Ok(None)` means no rotation or shift applies.
pub fn recolor_rotate_or_cascade(
    inst: &RecolorInstance,
) -> Result<Option<Vec<u32>>, RecolorError> {
    inst.validate()?;
    let n = inst.edges.len();
    // Arcs x -> y iff current[x] is allowed for y.
    let arcs: Vec<Vec<usize>> = (0..n)
        .map(|x| {
            (0..n)
                .filter(|&y| y != x && inst.allowed[y] >> inst.current[x] & 1 == 1)
                .collect()
        })
        .collect();

    // 1. Directed cycles containing at least one target, shortest first.
    for len in 2..=n {
        let mut cycle = Vec::new();
        if let Some(res) = find_cycle(inst, &arcs, len, &mut cycle) {
            return Ok(Some(res));
        }
    }
    // 2. Directed paths ending at a target whose start takes a fresh
    //    color, shortest first (length 0 = recolor a single target).
    for len in 0..n {
        let mut path = Vec::new();
        if let Some(res) = find_path(inst, &arcs, len, &mut path) {
            return Ok(Some(res));
        }
    }
    Ok(None)
}

fn find_cycle(
    inst: &RecolorInstance,
    arcs: &[Vec<usize>],
    len: usize,
    cycle: &mut Vec<usize>,
) -> Option<Vec<u32>> {
    let n = inst.edges.len();
    if cycle.len() == len {
        let start = cycle[0];
        if !arcs[*cycle.last().unwrap()].contains(&start) {
            return None;
        }
        if !cycle.iter().any(|&x| inst.targets[x]) {
            return None;
        }
        // Rotate: each edge takes its predecessor's color.
        let mut new = inst.current.clone();
        for k in 0..len {
            let prev = cycle[(k + len - 1) % len];
            new[cycle[k]] = inst.current[prev];
        }
        return inst.is_valid_result(&new).then_some(new);
    }
    let candidates: Vec<usize> = if cycle.is_empty() {
        (0..n).collect()
    } else {
        arcs[*cycle.last().unwrap()].clone()
    };
    for x in candidates {
        if cycle.contains(&x) {
            continue;
        }
        // Canonical cycle representative: smallest vertex first.
        if !cycle.is_empty() && x < cycle[0] {
            continue;
        }
        cycle.push(x);
        if let Some(res) = find_cycle(inst, arcs, len, cycle) {
            return Some(res);
        }
        cycle.pop();
    }
    None
}

fn find_path(
    inst: &RecolorInstance,
    arcs: &[Vec<usize>],
    len: usize,
    path: &mut Vec<usize>,
) -> Option<Vec<u32>> {
    let n = inst.edges.len();
    if path.len() == len + 1 {
        if !inst.targets[*path.last().unwrap()] {
            return None;
        }
        // Shift: path[k+1] takes path[k]'s color; path[0] takes a fresh
        // color (one not on any conflicting edge).
        let start = path[0];
        let mut fresh = inst.allowed[start] & !(1u128 << inst.current[start]);
        for y in 0..n {
            if y != start && inst.conflicts(start, y) {
                fresh &= !(1u128 << inst.current[y]);
            }
        }
        let mut s = fresh;
        while s != 0 {
            let c = s.trailing_zeros();
            s &= s - 1;
            let mut new = inst.current.clone();
            new[start] = c;
            for k in 1..path.len() {
                new[path[k]] = inst.current[path[k - 1]];
            }
            if inst.is_valid_result(&new) {
                return Some(new);
            }
        }
        return None;
    }
    let candidates: Vec<usize> = if path.is_empty() {
        (0..n).collect()
    } else {
        arcs[*path.last().unwrap()].clone()
    };
    for x in candidates {
        if path.contains(&x) {
            continue;
        }
        path.push(x);
        if let Some(res) = find_path(inst, arcs, len, path) {
            return Some(res);
        }
        path.pop();
    }
    None
}

/// Brute-force oracle: search every assignment of allowed colors for a
/// proper recoloring that changes at least one target. Independent of
/// the procedure above; used to validate it.
pub fn brute_force_recolor(inst: &RecolorInstance) -> Option<Vec<u32>> {
    // An edge may always keep its current color, even when (in relaxed
    // mode) that color lies outside its allowed set.
    let mut new = Vec::new();
    if rec_keep(inst, &mut new) {
        Some(new)
    } else {
        None
    }
}

fn rec_keep(inst: &RecolorInstance, new: &mut Vec<u32>) -> bool {
    let i = new.len();
    if i == inst.edges.len() {
        return (0..i).any(|k| inst.targets[k] && new[k] != inst.current[k]);
    }
    let s = inst.allowed[i] | (1u128 << inst.current[i]);
    let mut s = s;
    while s != 0 {
        let c = s.trailing_zeros();
        s &= s - 1;
        if c != inst.current[i] && inst.allowed[i] >> c & 1 == 0 {
            continue;
        }
        if (0..i).all(|j| !(inst.conflicts(i, j) && new[j] == c)) {
            new.push(c);
            if rec_keep(inst, new) {
                return true;
            }
            new.pop();
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::listcolor::set_of;

    /// k edges all sharing one endpoint: pairwise conflicting.
    fn clique(k: usize) -> Vec<(u32, u32)> {
        (0..k as u32).map(|i| (100, i)).collect()
    }

    #[test]
    fn two_cycle_rotation_swaps_colors() {
        // Two edges at a vertex, colors 0 and 1; each allows the other's
        // color: the rotation swaps them.
        let inst = RecolorInstance {
            edges: clique(2),
            current: vec![0, 1],
            allowed: vec![set_of(&[0, 1]), set_of(&[0, 1])],
            targets: vec![true, false],
            relaxed: false,
        };
        let got = recolor_rotate_or_cascade(&inst).unwrap().unwrap();
        assert_eq!(got, vec![1, 0]);
    }

    #[test]
    fn in_degree_zero_target_recolors_alone() {
        let inst = RecolorInstance {
            edges: clique(3),
            current: vec![0, 1, 2],
            allowed: vec![set_of(&[0, 5]), set_of(&[1]), set_of(&[2])],
            targets: vec![true, false, false],
            relaxed: false,
        };
        let got = recolor_rotate_or_cascade(&inst).unwrap().unwrap();
        assert_eq!(got, vec![5, 1, 2]);
    }

    #[test]
    fn cascade_through_a_helper_edge() {
        // Target 0 can only take color 1 (current color of edge 1);
        // edge 1 must first move to a fresh color.
        let inst = RecolorInstance {
            edges: clique(2),
            current: vec![0, 1],
            allowed: vec![set_of(&[0, 1]), set_of(&[1, 7])],
            targets: vec![true, false],
            relaxed: false,
        };
        let got = recolor_rotate_or_cascade(&inst).unwrap().unwrap();
        assert_eq!(got, vec![1, 7]);
    }

    #[test]
    fn reports_failure_when_stuck() {
        let inst = RecolorInstance {
            edges: clique(2),
            current: vec![0, 1],
            allowed: vec![set_of(&[0]), set_of(&[1])],
            targets: vec![true, true],
            relaxed: false,
        };
        assert_eq!(recolor_rotate_or_cascade(&inst).unwrap(), None);
        assert_eq!(brute_force_recolor(&inst), None);
    }

    #[test]
    fn rejects_improper_current() {
        let inst = RecolorInstance {
            edges: clique(2),
            current: vec![3, 3],
            allowed: vec![set_of(&[3]), set_of(&[3])],
            targets: vec![true, false],
            relaxed: false,
        };
        assert_eq!(
            recolor_rotate_or_cascade(&inst).unwrap_err(),
            RecolorError::ImproperCurrent
        );
    }

    #[test]
    fn result_never_breaks_properness() {
        // Non-clique instance: a path of edges where a naive rotation
        // would collide; whatever is returned must validate.
        let inst = RecolorInstance {
            edges: vec![(0, 1), (2, 3), (3, 4)],
            current: vec![0, 0, 1],
            allowed: vec![set_of(&[0, 1]), set_of(&[0, 1]), set_of(&[0, 1])],
            targets: vec![false, false, true],
            relaxed: false,
        };
        if let Some(got) = recolor_rotate_or_cascade(&inst).unwrap() {
            assert!(inst.is_valid_result(&got));
        }
    }
}
