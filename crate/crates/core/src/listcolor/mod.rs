//! Exact list-edge-coloring kernel.
//!
//! Instances are abstract edge sets: an edge is a pair of vertex ids,
//! and two edges conflict iff they share an endpoint. Color lists are
//! bitmasks over a palette of at most 128 colors.
//!
//! [`color_edges`] is an exact backtracking solver preceded by the
//! classical degeneracy reduction: an edge whose list is strictly larger
//! than its number of uncolored conflicting edges can always be colored
//! last, so it is deleted up front and greedily colored after the main
//! search. The reduction never changes satisfiability.

pub mod enumerate;
pub mod recolor;

pub use enumerate::{
    canonical_count, choosable_exhaustive, sample_assignment, verify_even_cycle, verify_l2322,
    verify_star3, ChooseStatus, ChooseVerdict,
};
pub use recolor::{brute_force_recolor, recolor_rotate_or_cascade, RecolorError, RecolorInstance};

/// A set of colors, one bit per color (palette size <= 128).
pub type ColorSet = u128;

pub fn set_of(colors: &[u32]) -> ColorSet {
    colors.iter().fold(0, |s, &c| s | (1u128 << c))
}

pub fn set_to_vec(s: ColorSet) -> Vec<u32> {
    (0..128).filter(|&c| s >> c & 1 == 1).collect()
}

/// An edge-coloring instance: edges with abstract endpoints.
#[derive(Debug, Clone)]
pub struct EdgeInstance {
    edges: Vec<(u32, u32)>,
    incident: Vec<Vec<usize>>,
}

impl EdgeInstance {
    pub fn new(edges: Vec<(u32, u32)>) -> EdgeInstance {
        let incident = edges
            .iter()
            .enumerate()
            .map(|(i, &(a, b))| {
                edges
                    .iter()
                    .enumerate()
                    .filter(|&(j, &(c, d))| j != i && (a == c || a == d || b == c || b == d))
                    .map(|(j, _)| j)
                    .collect()
            })
            .collect();
        EdgeInstance { edges, incident }
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn edges(&self) -> &[(u32, u32)] {
        &self.edges
    }

    pub fn incident(&self, i: usize) -> &[usize] {
        &self.incident[i]
    }

    /// Is `coloring` a proper coloring (incident edges get distinct
    /// colors)?
    pub fn is_proper(&self, coloring: &[u32]) -> bool {
        (0..self.len()).all(|i| self.incident[i].iter().all(|&j| coloring[i] != coloring[j]))
    }
}

/// Exact solver. `fixed[i] = Some(c)` pins edge `i` to color `c`
/// (its list is ignored); the remaining edges must be colored from
/// their lists. Returns a full proper coloring or `None` (exactly when
/// no proper coloring exists).
///
/// Deterministic: the search always expands the lowest-index edge with
/// the smallest residual list, trying colors in ascending order.
pub fn color_edges(
    inst: &EdgeInstance,
    lists: &[ColorSet],
    fixed: &[Option<u32>],
) -> Option<Vec<u32>> {
    solve(inst, lists, fixed, true)
}

/// The solver without the degeneracy reduction; used to validate the
/// reduction in tests.
pub fn color_edges_raw(
    inst: &EdgeInstance,
    lists: &[ColorSet],
    fixed: &[Option<u32>],
) -> Option<Vec<u32>> {
    solve(inst, lists, fixed, false)
}

fn solve(
    inst: &EdgeInstance,
    lists: &[ColorSet],
    fixed: &[Option<u32>],
    reduce: bool,
) -> Option<Vec<u32>> {
    let n = inst.len();
    assert_eq!(lists.len(), n);
    assert_eq!(fixed.len(), n);
    let mut avail: Vec<ColorSet> = lists.to_vec();
    let mut color: Vec<Option<u32>> = fixed.to_vec();
    // Remove pinned colors from the lists of conflicting edges.
    for i in 0..n {
        if let Some(c) = fixed[i] {
            for &j in &inst.incident[i] {
                if fixed[j].is_none() {
                    avail[j] &= !(1u128 << c);
                }
                if fixed[j] == Some(c) {
                    return None; // pinned coloring is already improper
                }
            }
        }
    }
    // Degeneracy reduction: peel edges with more colors than uncolored
    // conflicts; they are colored greedily afterwards, in reverse order.
    let mut peeled: Vec<usize> = Vec::new();
    let mut active: Vec<bool> = color.iter().map(Option::is_none).collect();
    if reduce {
        loop {
            let mut cnt = vec![0usize; n];
            for i in 0..n {
                if active[i] {
                    cnt[i] = inst.incident[i].iter().filter(|&&j| active[j]).count();
                }
            }
            match (0..n).find(|&i| active[i] && (avail[i].count_ones() as usize) > cnt[i]) {
                Some(i) => {
                    active[i] = false;
                    peeled.push(i);
                }
                None => break,
            }
        }
    }
    // Backtracking over the remaining active edges.
    if !backtrack(inst, &mut avail, &mut color, &active) {
        return None;
    }
    // Color the peeled edges in reverse peel order; by construction a
    // free color always remains.
    for &i in peeled.iter().rev() {
        let mut s = avail[i];
        for &j in &inst.incident[i] {
            if let Some(c) = color[j] {
                s &= !(1u128 << c);
            }
        }
        let c = s.trailing_zeros();
        debug_assert!(s != 0, "degeneracy reduction invariant violated");
        color[i] = Some(c);
    }
    Some(color.into_iter().map(Option::unwrap).collect())
}

fn backtrack(
    inst: &EdgeInstance,
    avail: &mut [ColorSet],
    color: &mut [Option<u32>],
    active: &[bool],
) -> bool {
    // Pick the active uncolored edge with the fewest remaining colors.
    let mut best: Option<(usize, u32)> = None;
    for i in 0..inst.len() {
        if active[i] && color[i].is_none() {
            let k = avail[i].count_ones();
            if best.is_none_or(|(_, bk)| k < bk) {
                best = Some((i, k));
                if k == 0 {
                    break;
                }
            }
        }
    }
    let (i, k) = match best {
        None => return true,
        Some(b) => b,
    };
    if k == 0 {
        return false;
    }
    let mut s = avail[i];
    while s != 0 {
        let c = s.trailing_zeros();
        s &= s - 1;
        color[i] = Some(c);
        let bit = 1u128 << c;
        let mut touched = Vec::new();
        for &j in &inst.incident[i] {
            if color[j].is_none() && avail[j] & bit != 0 {
                avail[j] &= !bit;
                touched.push(j);
            }
        }
        if backtrack(inst, avail, color, active) {
            return true;
        }
        for j in touched {
            avail[j] |= bit;
        }
        color[i] = None;
    }
    false
}

/// Residual list sizes for the uncolored edges of a gadget sitting in a
/// host where endpoint `x` has degree `d(x)`: with 9 colors available,
/// edge `e = (x, y)` keeps at least
/// `9 - ((d(x)-1) + (d(y)-1) - (# uncolored edges != e conflicting with e))`
/// colors after the colored host edges are accounted for.
pub fn residual_size(
    deg_x: usize,
    deg_y: usize,
    uncolored_conflicts: usize,
) -> i64 {
    9 - ((deg_x as i64 - 1) + (deg_y as i64 - 1) - uncolored_conflicts as i64)
}
