//! Finite set families over a small named universe.
//!
//! States are single-word bitmasks, so a universe holds at most 64 elements.
//! Families keep their states deduplicated and sorted by `(popcount, mask)`;
//! every other module relies on that order when it indexes vertices.

mod chain;
mod graph;
mod validate;

use std::collections::{HashMap, HashSet};
use std::fmt;

pub use chain::chain_between;
pub use graph::{build_graph, Edge, LearningGraph};
pub use validate::{
    check_union_closed, check_well_graded, validate_family, verify_accessibility_extension, Check,
    ValidationReport, Violation, Witness,
};

use crate::error::{Error, Result};

pub const MAX_ELEMENTS: usize = 64;

/// Ordered list of distinct element names.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Universe {
    names: Vec<String>,
    index: HashMap<String, usize>,
}

impl Universe {
    pub fn new<I, S>(names: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.len() > MAX_ELEMENTS {
            return Err(Error::UniverseTooLarge(names.len()));
        }
        let mut index = HashMap::with_capacity(names.len());
        for (i, name) in names.iter().enumerate() {
            if name.is_empty() {
                return Err(Error::EmptyElementName(i));
            }
            if index.insert(name.clone(), i).is_some() {
                return Err(Error::DuplicateElement(name.clone()));
            }
        }
        Ok(Universe { names, index })
    }

    /// Single-letter names `a`, `b`, ... (falling back to `e26`, `e27`, ...).
    pub fn letters(n: usize) -> Result<Self> {
        Self::new((0..n).map(|i| {
            if i < 26 {
                ((b'a' + i as u8) as char).to_string()
            } else {
                format!("e{i}")
            }
        }))
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, element: usize) -> &str {
        &self.names[element]
    }

    pub fn position(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    pub fn full(&self) -> StateSet {
        StateSet::full(self.len())
    }

    pub fn state_of<S: AsRef<str>>(&self, names: &[S]) -> Result<StateSet> {
        let mut bits = 0u64;
        for name in names {
            let name = name.as_ref();
            let e = self
                .position(name)
                .ok_or_else(|| Error::UnknownElement(name.to_string()))?;
            bits |= 1 << e;
        }
        Ok(StateSet(bits))
    }

    /// Renders a state as `{a,b}` using element names in universe order.
    pub fn format_state(&self, state: StateSet) -> String {
        let parts: Vec<&str> = state.elements().map(|e| self.name(e)).collect();
        format!("{{{}}}", parts.join(","))
    }
}

/// A subset of the universe as a bitmask.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StateSet(pub u64);

impl StateSet {
    pub const EMPTY: StateSet = StateSet(0);

    pub fn full(n: usize) -> Self {
        if n >= 64 {
            StateSet(u64::MAX)
        } else {
            StateSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(e: usize) -> Self {
        StateSet(1 << e)
    }

    pub fn from_elements<I: IntoIterator<Item = usize>>(elements: I) -> Self {
        StateSet(elements.into_iter().fold(0, |acc, e| acc | (1 << e)))
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, e: usize) -> bool {
        self.0 >> e & 1 == 1
    }

    pub fn with(self, e: usize) -> Self {
        StateSet(self.0 | 1 << e)
    }

    pub fn without(self, e: usize) -> Self {
        StateSet(self.0 & !(1 << e))
    }

    pub fn union(self, other: Self) -> Self {
        StateSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        StateSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        StateSet(self.0 & !other.0)
    }

    pub fn symmetric_difference(self, other: Self) -> Self {
        StateSet(self.0 ^ other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    /// Element indices in increasing order.
    pub fn elements(self) -> impl Iterator<Item = usize> {
        let mut rest = self.0;
        std::iter::from_fn(move || {
            if rest == 0 {
                None
            } else {
                let e = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(e)
            }
        })
    }

    /// Sort key of the canonical vertex order.
    pub fn canonical_key(self) -> (u32, u64) {
        (self.0.count_ones(), self.0)
    }
}

impl fmt::Display for StateSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.elements().map(|e| e.to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// Deduplicated, canonically sorted family of states.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SetFamily {
    universe: Universe,
    states: Vec<StateSet>,
}

impl SetFamily {
    /// Builds a family, rejecting duplicates and out-of-universe bits.
    pub fn new(universe: Universe, states: Vec<StateSet>) -> Result<Self> {
        let full = universe.full();
        let mut seen = HashSet::with_capacity(states.len());
        for &s in &states {
            if !s.is_subset(full) {
                return Err(Error::StateOutOfUniverse(s.bits()));
            }
            if !seen.insert(s) {
                return Err(Error::DuplicateState(universe.format_state(s)));
            }
        }
        Ok(Self::from_distinct(universe, states))
    }

    /// Builds a family, silently merging duplicate states.
    pub fn from_states<I: IntoIterator<Item = StateSet>>(
        universe: Universe,
        states: I,
    ) -> Result<Self> {
        let full = universe.full();
        let mut states: Vec<StateSet> = states.into_iter().collect();
        if let Some(s) = states.iter().find(|s| !s.is_subset(full)) {
            return Err(Error::StateOutOfUniverse(s.bits()));
        }
        states.sort_by_key(|s| s.canonical_key());
        states.dedup();
        Ok(SetFamily { universe, states })
    }

    fn from_distinct(universe: Universe, mut states: Vec<StateSet>) -> Self {
        states.sort_by_key(|s| s.canonical_key());
        SetFamily { universe, states }
    }

    pub fn from_named<S: AsRef<str>>(universe: Universe, states: &[Vec<S>]) -> Result<Self> {
        let states = states
            .iter()
            .map(|s| universe.state_of(s))
            .collect::<Result<Vec<_>>>()?;
        Self::new(universe, states)
    }

    /// All subsets of the universe.
    pub fn power_set(universe: Universe) -> Result<Self> {
        let n = universe.len();
        if n > 20 {
            return Err(Error::TooLarge {
                what: "power set",
                max: 20,
                got: n,
            });
        }
        let states = (0..1u64 << n).map(StateSet).collect();
        Ok(Self::from_distinct(universe, states))
    }

    /// The chain `∅ ⊂ {u0} ⊂ {u0,u1} ⊂ ...` following universe order.
    pub fn chain(universe: Universe) -> Self {
        let states = (0..=universe.len()).map(StateSet::full).collect();
        Self::from_distinct(universe, states)
    }

    /// Unions of a prefix and a suffix of the universe order.
    pub fn prefix_suffix(universe: Universe) -> Self {
        let n = universe.len();
        let full = universe.full();
        let states = (0..=n).flat_map(|i| {
            (0..=n).map(move |j| {
                let prefix = StateSet::full(i);
                let suffix = full.difference(StateSet::full(n - j));
                prefix.union(suffix)
            })
        });
        let mut states: Vec<StateSet> = states.collect();
        states.sort_by_key(|s| s.canonical_key());
        states.dedup();
        SetFamily { universe, states }
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn states(&self) -> &[StateSet] {
        &self.states
    }

    pub fn len(&self) -> usize {
        self.states.len()
    }

    pub fn is_empty(&self) -> bool {
        self.states.is_empty()
    }

    pub fn contains(&self, s: StateSet) -> bool {
        self.index_of(s).is_some()
    }

    /// Position of `s` in canonical order.
    pub fn index_of(&self, s: StateSet) -> Option<usize> {
        self.states
            .binary_search_by_key(&s.canonical_key(), |t| t.canonical_key())
            .ok()
    }

    /// Union of all states.
    pub fn union_all(&self) -> StateSet {
        self.states
            .iter()
            .fold(StateSet::EMPTY, |acc, &s| acc.union(s))
    }

    pub(crate) fn member_set(&self) -> HashSet<StateSet> {
        self.states.iter().copied().collect()
    }

    pub fn format_state(&self, s: StateSet) -> String {
        self.universe.format_state(s)
    }
}
