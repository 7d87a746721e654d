use std::collections::VecDeque;
use std::fmt;

use super::{SetFamily, StateSet, Universe};

/// Which axiom or derived property a violation refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Check {
    L1,
    L2,
    Union,
    WellGraded,
    AccessExt,
    U1,
    U2,
    U3,
    Orientation,
    Dominance,
}

impl Check {
    pub fn id(self) -> &'static str {
        match self {
            Check::L1 => "L1",
            Check::L2 => "L2",
            Check::Union => "UNION",
            Check::WellGraded => "WG",
            Check::AccessExt => "ACCESS-EXT",
            Check::U1 => "U1",
            Check::U2 => "U2",
            Check::U3 => "U3",
            Check::Orientation => "ORIENT",
            Check::Dominance => "DOMINANCE",
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    States(Vec<StateSet>),
    Vertices(Vec<usize>),
    Edges(Vec<usize>),
    Face(usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub check: Check,
    pub witness: Witness,
    pub detail: String,
}

impl Violation {
    pub fn new(check: Check, witness: Witness) -> Self {
        Violation {
            check,
            witness,
            detail: String::new(),
        }
    }

    pub fn with_detail(mut self, detail: impl Into<String>) -> Self {
        self.detail = detail.into();
        self
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn push(&mut self, v: Violation) {
        self.violations.push(v);
    }

    pub fn extend(&mut self, other: ValidationReport) {
        self.violations.extend(other.violations);
    }

    pub fn count(&self, check: Check) -> usize {
        self.violations.iter().filter(|v| v.check == check).count()
    }

    /// One line per violation. `vertices` maps vertex indices to states when
    /// the report came from a drawing check; pass an empty slice otherwise.
    pub fn render(&self, universe: &Universe, vertices: &[StateSet]) -> String {
        let mut out = String::new();
        for v in &self.violations {
            let witness = match &v.witness {
                Witness::States(states) => states
                    .iter()
                    .map(|&s| universe.format_state(s))
                    .collect::<Vec<_>>()
                    .join(" "),
                Witness::Vertices(vs) => vs
                    .iter()
                    .map(|&i| match vertices.get(i) {
                        Some(&s) => universe.format_state(s),
                        None => format!("v{i}"),
                    })
                    .collect::<Vec<_>>()
                    .join(" "),
                Witness::Edges(es) => es
                    .iter()
                    .map(|e| format!("e{e}"))
                    .collect::<Vec<_>>()
                    .join(" "),
                Witness::Face(i) => format!("face {i}"),
            };
            out.push_str(v.check.id());
            out.push_str(": ");
            out.push_str(&witness);
            if !v.detail.is_empty() {
                out.push_str(" (");
                out.push_str(&v.detail);
                out.push(')');
            }
            out.push('\n');
        }
        out
    }
}

/// Checks the two learning-space axioms.
///
/// L1: every nonempty state has an element whose removal stays in the family;
/// a missing empty set is reported as an L1 violation with witness `{}`.
/// L2: whenever `S`, `S+x` and `S+y` are states, so is `S+x+y`.
pub fn validate_family(family: &SetFamily) -> ValidationReport {
    let members = family.member_set();
    let full = family.universe().full();
    let mut report = ValidationReport::new();

    if !members.contains(&StateSet::EMPTY) {
        report.push(
            Violation::new(Check::L1, Witness::States(vec![StateSet::EMPTY]))
                .with_detail("empty set missing"),
        );
    }
    for &s in family.states() {
        if s.is_empty() {
            continue;
        }
        if !s.elements().any(|x| members.contains(&s.without(x))) {
            report.push(Violation::new(Check::L1, Witness::States(vec![s])));
        }
    }
    for &s in family.states() {
        let ext: Vec<usize> = full
            .difference(s)
            .elements()
            .filter(|&x| members.contains(&s.with(x)))
            .collect();
        for (i, &x) in ext.iter().enumerate() {
            for &y in &ext[i + 1..] {
                if !members.contains(&s.with(x).with(y)) {
                    report.push(Violation::new(
                        Check::L2,
                        Witness::States(vec![s, s.with(x), s.with(y)]),
                    ));
                }
            }
        }
    }
    report
}

pub fn check_union_closed(family: &SetFamily) -> ValidationReport {
    let members = family.member_set();
    let states = family.states();
    let mut report = ValidationReport::new();
    for (i, &s) in states.iter().enumerate() {
        for &t in &states[i + 1..] {
            if !members.contains(&s.union(t)) {
                report.push(Violation::new(Check::Union, Witness::States(vec![s, t])));
            }
        }
    }
    report
}

/// Every pair of states must be joined by single-element steps inside the
/// family, with path length equal to the size of their symmetric difference.
/// Breadth-first search from each state over the family's one-step graph.
pub fn check_well_graded(family: &SetFamily) -> ValidationReport {
    let states = family.states();
    let n = family.universe().len();
    let adjacency: Vec<Vec<usize>> = states
        .iter()
        .map(|&s| {
            (0..n)
                .filter_map(|e| family.index_of(StateSet(s.bits() ^ (1 << e))))
                .collect()
        })
        .collect();

    let mut report = ValidationReport::new();
    let mut dist = vec![usize::MAX; states.len()];
    let mut queue = VecDeque::new();
    for src in 0..states.len() {
        dist.fill(usize::MAX);
        dist[src] = 0;
        queue.push_back(src);
        while let Some(u) = queue.pop_front() {
            for &v in &adjacency[u] {
                if dist[v] == usize::MAX {
                    dist[v] = dist[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        for dst in src + 1..states.len() {
            let want = states[src].symmetric_difference(states[dst]).len();
            if dist[dst] != want {
                let got = if dist[dst] == usize::MAX {
                    "unreachable".to_string()
                } else {
                    format!("distance {}", dist[dst])
                };
                report.push(
                    Violation::new(
                        Check::WellGraded,
                        Witness::States(vec![states[src], states[dst]]),
                    )
                    .with_detail(format!("{got}, symmetric difference {want}")),
                );
            }
        }
    }
    report
}

/// For `K ⊂ L` in the family with `K+q` a state and `q ∉ L`, `L+q` must be a
/// state. Witness order is `K, L, K+q`.
pub fn verify_accessibility_extension(family: &SetFamily) -> ValidationReport {
    let members = family.member_set();
    let full = family.universe().full();
    let mut report = ValidationReport::new();
    for &k in family.states() {
        for q in full.difference(k).elements() {
            if !members.contains(&k.with(q)) {
                continue;
            }
            for &l in family.states() {
                if l != k && k.is_subset(l) && !l.contains(q) && !members.contains(&l.with(q)) {
                    report.push(
                        Violation::new(Check::AccessExt, Witness::States(vec![k, l, k.with(q)]))
                            .with_detail(format!("q={}", family.universe().name(q))),
                    );
                }
            }
        }
    }
    report
}
