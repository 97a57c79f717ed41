//! Exact-arithmetic discharging.
//!
//! Every vertex starts with charge d(v) - 6 and every face with
//! 2 d(f) - 6; the total over a connected plane graph is exactly -12.
//! Rules R1-R11 move charge from big faces and degree >= 7 vertices to
//! small vertices. All amounts are integer counts of twelfths, so the
//! ledger is exact; the rules are a single simultaneous pass evaluated
//! against the pristine graph structure.

use crate::configs::{match_all, ConfigMatch};
use crate::embed::{classify_neighbor, EmbeddedGraph, GraphError, NeighborClass, SpecialClass};
use serde::Serialize;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Neg, Sub, SubAssign};

/// An exact charge, stored as an integer number of twelfths.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Charge(pub i64);

impl Charge {
    pub const ZERO: Charge = Charge(0);

    /// Whole units (e.g. `Charge::units(2)` is a charge of 2).
    pub fn units(n: i64) -> Charge {
        Charge(12 * n)
    }

    pub fn is_negative(self) -> bool {
        self.0 < 0
    }
}

impl fmt::Display for Charge {
    /// Renders as a reduced fraction: `-3`, `1/2`, `7/12`, `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn gcd(a: i64, b: i64) -> i64 {
            if b == 0 {
                a
            } else {
                gcd(b, a % b)
            }
        }
        if self.0 == 0 {
            return write!(f, "0");
        }
        let g = gcd(self.0.abs(), 12);
        let (num, den) = (self.0 / g, 12 / g);
        if den == 1 {
            write!(f, "{num}")
        } else {
            write!(f, "{num}/{den}")
        }
    }
}

impl Add for Charge {
    type Output = Charge;
    fn add(self, rhs: Charge) -> Charge {
        Charge(self.0 + rhs.0)
    }
}
impl Sub for Charge {
    type Output = Charge;
    fn sub(self, rhs: Charge) -> Charge {
        Charge(self.0 - rhs.0)
    }
}
impl Neg for Charge {
    type Output = Charge;
    fn neg(self) -> Charge {
        Charge(-self.0)
    }
}
impl AddAssign for Charge {
    fn add_assign(&mut self, rhs: Charge) {
        self.0 += rhs.0;
    }
}
impl SubAssign for Charge {
    fn sub_assign(&mut self, rhs: Charge) {
        self.0 -= rhs.0;
    }
}

/// A chargeable element: a vertex (by external id) or a face (by index).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Element {
    Vertex(u32),
    Face(usize),
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Element::Vertex(id) => write!(f, "v{id}"),
            Element::Face(i) => write!(f, "f{i}"),
        }
    }
}

/// One logged rule application. `amount` is the per-application amount;
/// the charge moved is `amount` times `multiplicity`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Transfer {
    pub from: Element,
    pub to: Element,
    pub amount: Charge,
    pub rule: u8,
    pub multiplicity: u32,
}

impl Transfer {
    pub fn moved(&self) -> Charge {
        Charge(self.amount.0 * self.multiplicity as i64)
    }
}

#[derive(Debug, thiserror::Error)]
pub enum DischargeError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("rules were already applied to this ledger")]
    AlreadyDischarged,
}

/// Charges per vertex (internal index) and per face (index), plus the
/// transfer log.
#[derive(Debug, Clone)]
pub struct ChargeLedger {
    pub vertex: Vec<Charge>,
    pub face: Vec<Charge>,
    pub log: Vec<Transfer>,
    rules_applied: bool,
}

impl ChargeLedger {
    pub fn total(&self) -> Charge {
        let mut t = Charge::ZERO;
        for &c in self.vertex.iter().chain(self.face.iter()) {
            t += c;
        }
        t
    }

    pub fn charge_of(&self, g: &EmbeddedGraph, x: Element) -> Result<Charge, GraphError> {
        match x {
            Element::Vertex(id) => Ok(self.vertex[g.index_of(id)?]),
            Element::Face(i) => self.face.get(i).copied().ok_or(GraphError::Parse {
                line: 0,
                msg: format!("no face {i}"),
            }),
        }
    }

    /// Elements with negative charge: vertices in id order, then faces
    /// in index order.
    pub fn negatives(&self, g: &EmbeddedGraph) -> Vec<(Element, Charge)> {
        let mut out = Vec::new();
        let mut verts: Vec<(u32, Charge)> = (0..g.vertex_count())
            .filter(|&v| self.vertex[v].is_negative())
            .map(|v| (g.id(v), self.vertex[v]))
            .collect();
        verts.sort_unstable();
        out.extend(verts.into_iter().map(|(id, c)| (Element::Vertex(id), c)));
        for (i, &c) in self.face.iter().enumerate() {
            if c.is_negative() {
                out.push((Element::Face(i), c));
            }
        }
        out
    }
}

/// Initial charges: d(v) - 6 per vertex, 2 d(f) - 6 per face.
pub fn initial_charges(g: &EmbeddedGraph) -> Result<ChargeLedger, GraphError> {
    if !g.is_connected() {
        return Err(GraphError::Disconnected);
    }
    Ok(ChargeLedger {
        vertex: (0..g.vertex_count())
            .map(|v| Charge::units(g.degree(v) as i64 - 6))
            .collect(),
        face: g
            .faces()
            .iter()
            .map(|f| Charge::units(2 * f.degree() as i64 - 6))
            .collect(),
        log: Vec::new(),
        rules_applied: false,
    })
}

/// Rule amount in twelfths, per single application.
fn rule_amount(rule: u8) -> Charge {
    match rule {
        1 | 3 => Charge(12),
        2 => Charge(24),
        4 | 5 | 6 | 9 => Charge(6),
        7 | 10 => Charge(4),
        8 | 11 => Charge(3),
        _ => unreachable!(),
    }
}

/// Enumerate the rule instances that fire on `g`, in deterministic
/// order: face rules by face index (targets in first-appearance order
/// on the walk, with multiplicity), then vertex rules by giver index
/// (targets in rotation order).
fn rule_instances(g: &EmbeddedGraph) -> Result<Vec<Transfer>, GraphError> {
    let mut out = Vec::new();
    for (fi, face) in g.faces().iter().enumerate() {
        let d = face.degree();
        if d < 4 {
            continue;
        }
        let rule = if d == 4 { 1 } else { 2 };
        let mut seen: Vec<(usize, u32)> = Vec::new();
        for v in face.vertices() {
            if g.degree(v) > 5 {
                continue;
            }
            match seen.iter_mut().find(|(w, _)| *w == v) {
                Some((_, m)) => *m += 1,
                None => seen.push((v, 1)),
            }
        }
        for (v, mult) in seen {
            out.push(Transfer {
                from: Element::Face(fi),
                to: Element::Vertex(g.id(v)),
                amount: rule_amount(rule),
                rule,
                multiplicity: mult,
            });
        }
    }
    for u in 0..g.vertex_count() {
        let du = g.degree(u);
        if du < 7 {
            continue;
        }
        for &v in g.rotation(u) {
            let cls = classify_neighbor(g, u, v)?;
            let rule = match (cls.base, g.degree(v)) {
                (NeighborClass::Weak, 3) => Some(3),
                (NeighborClass::SemiWeak, 3) => Some(4),
                (NeighborClass::Weak, 4) => Some(5),
                _ => None,
            }
            .or(match (du, cls.special) {
                (8, Some(SpecialClass::E2)) => Some(6),
                (8, Some(SpecialClass::E3)) => Some(7),
                (8, Some(SpecialClass::E4)) => Some(8),
                (7, Some(SpecialClass::S2)) => Some(9),
                (7, Some(SpecialClass::S3)) => Some(10),
                (7, Some(SpecialClass::S4)) => Some(11),
                _ => None,
            });
            if let Some(rule) = rule {
                out.push(Transfer {
                    from: Element::Vertex(g.id(u)),
                    to: Element::Vertex(g.id(v)),
                    amount: rule_amount(rule),
                    rule,
                    multiplicity: 1,
                });
            }
        }
    }
    Ok(out)
}

/// Apply all rule instances simultaneously. Errors if the ledger was
/// already discharged.
pub fn apply_rules(g: &EmbeddedGraph, mut ledger: ChargeLedger) -> Result<ChargeLedger, DischargeError> {
    if ledger.rules_applied {
        return Err(DischargeError::AlreadyDischarged);
    }
    for t in rule_instances(g)? {
        let moved = t.moved();
        match t.from {
            Element::Vertex(id) => ledger.vertex[g.index_of(id)?] -= moved,
            Element::Face(i) => ledger.face[i] -= moved,
        }
        match t.to {
            Element::Vertex(id) => ledger.vertex[g.index_of(id)?] += moved,
            Element::Face(i) => ledger.face[i] += moved,
        }
        ledger.log.push(t);
    }
    ledger.rules_applied = true;
    Ok(ledger)
}

#[derive(Debug, Clone, Serialize)]
pub struct NegativeEntry {
    pub element: String,
    pub charge: String,
}

/// The audit report, serialized with stable field order.
#[derive(Debug, Clone, Serialize)]
pub struct AuditReport {
    #[serde(rename = "initialTotal")]
    pub initial_total: String,
    #[serde(rename = "finalTotal")]
    pub final_total: String,
    pub negatives: Vec<NegativeEntry>,
    #[serde(rename = "configsFound")]
    pub configs_found: BTreeMap<String, usize>,
    #[serde(rename = "contradictionFlag")]
    pub contradiction_flag: bool,
}

/// Run the whole pipeline: initial charges, rules, conservation check,
/// negative elements, configuration census, contradiction flag.
pub fn audit(g: &EmbeddedGraph) -> Result<AuditReport, DischargeError> {
    let initial = initial_charges(g)?;
    let initial_total = initial.total();
    let final_ledger = apply_rules(g, initial)?;
    let final_total = final_ledger.total();
    let negatives = final_ledger
        .negatives(g)
        .into_iter()
        .map(|(e, c)| NegativeEntry {
            element: e.to_string(),
            charge: c.to_string(),
        })
        .collect();
    let mut configs_found = BTreeMap::new();
    let matches = match_all(g)?;
    for m in &matches {
        *configs_found.entry(m.config.to_string()).or_insert(0) += 1;
    }
    let max_deg = (0..g.vertex_count()).map(|v| g.degree(v)).max().unwrap_or(0);
    let contradiction_flag = g.edge_count() >= 1 && max_deg <= 8 && matches.is_empty();
    Ok(AuditReport {
        initial_total: initial_total.to_string(),
        final_total: final_total.to_string(),
        negatives,
        configs_found,
        contradiction_flag,
    })
}

/// All log entries touching `x`, with a case-branch label describing
/// the element's role under the rules.
pub fn explain_element(
    g: &EmbeddedGraph,
    x: Element,
) -> Result<(Vec<Transfer>, String), DischargeError> {
    let ledger = apply_rules(g, initial_charges(g)?)?;
    let transfers: Vec<Transfer> = ledger
        .log
        .iter()
        .filter(|t| t.from == x || t.to == x)
        .cloned()
        .collect();
    let label = match x {
        Element::Face(i) => {
            let d = g
                .faces()
                .get(i)
                .ok_or(GraphError::Parse {
                    line: 0,
                    msg: format!("no face {i}"),
                })?
                .degree();
            match d {
                3 => "face, d=3, gives and receives nothing".to_string(),
                4 => "face, d=4, gives 1 to incident vertices of degree at most 5".to_string(),
                _ => format!("face, d={d}, gives 2 to incident vertices of degree at most 5"),
            }
        }
        Element::Vertex(id) => {
            let u = g.index_of(id)?;
            let d = g.degree(u);
            if d == 6 {
                "vertex, d=6, gives and receives nothing".to_string()
            } else if d <= 5 {
                let mut tri = 0usize;
                let mut quad = 0usize;
                let mut big = 0usize;
                for &v in g.rotation(u) {
                    match g.faces()[g.face_of_dart(u, v)?].degree() {
                        3 => tri += 1,
                        4 => quad += 1,
                        _ => big += 1,
                    }
                }
                format!(
                    "vertex, d={d}, incident faces: {tri} triangles, {quad} squares, {big} larger"
                )
            } else {
                let mut weak3 = 0usize;
                let mut semi3 = 0usize;
                let mut weak4 = 0usize;
                let mut specials: Vec<String> = Vec::new();
                for &v in g.rotation(u) {
                    let cls = classify_neighbor(g, u, v)?;
                    match (cls.base, g.degree(v)) {
                        (NeighborClass::Weak, 3) => weak3 += 1,
                        (NeighborClass::SemiWeak, 3) => semi3 += 1,
                        (NeighborClass::Weak, 4) => weak4 += 1,
                        _ => {}
                    }
                    if let Some(s) = cls.special {
                        specials.push(format!("{s:?}"));
                    }
                }
                specials.sort();
                format!(
                    "vertex, d={d}, weak degree-3: {weak3}, semi-weak degree-3: {semi3}, \
                     weak degree-4: {weak4}, special neighbors: [{}]",
                    specials.join(", ")
                )
            }
        }
    };
    Ok((transfers, label))
}

/// For every element with negative final charge, look for a
/// configuration match whose binding lies entirely within graph
/// distance `radius` of the element's incident vertices. Returns the
/// elements for which no such match exists.
pub fn localized_violations(
    g: &EmbeddedGraph,
    radius: usize,
) -> Result<Vec<(Element, Charge)>, DischargeError> {
    let ledger = apply_rules(g, initial_charges(g)?)?;
    let matches = match_all(g)?;
    let mut out = Vec::new();
    for (elem, charge) in ledger.negatives(g) {
        let sources: Vec<usize> = match elem {
            Element::Vertex(id) => vec![g.index_of(id)?],
            Element::Face(i) => {
                let mut vs: Vec<usize> = g.faces()[i].vertices().collect();
                vs.sort_unstable();
                vs.dedup();
                vs
            }
        };
        let dist = g.distances_from(&sources);
        let covered = matches.iter().any(|m: &ConfigMatch| {
            m.binding.values().all(|&id| {
                g.index_of(id)
                    .map(|v| dist[v] <= radius)
                    .unwrap_or(false)
            })
        });
        if !covered {
            out.push((elem, charge));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests;
