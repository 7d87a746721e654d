use std::collections::{HashMap, HashSet};
use std::fmt::Write as _;

use rayon::prelude::*;

use crate::arrangement::{sampled_states, Permutation};
use crate::error::{Error, Result};
use crate::family::{SetFamily, StateSet};

pub const MAX_CENSUS_N: usize = 6;
const MAX_CANONICAL_N: usize = 8;

/// Isomorphism-invariant form of a family: the lexicographically smallest
/// sorted mask list over all relabelings of the universe.
pub fn canonical_form(family: &SetFamily) -> Result<Vec<u64>> {
    let n = family.universe().len();
    if n > MAX_CANONICAL_N {
        return Err(Error::TooLarge {
            what: "canonical form",
            max: MAX_CANONICAL_N,
            got: n,
        });
    }
    Ok(canonical_masks(family.states(), n))
}

fn canonical_masks(states: &[StateSet], n: usize) -> Vec<u64> {
    let mut best: Option<Vec<u64>> = None;
    let mut buf = Vec::with_capacity(states.len());
    for sigma in Permutation::all(n) {
        buf.clear();
        buf.extend(states.iter().map(|&s| relabel(s, sigma.as_slice()).bits()));
        buf.sort_unstable();
        if best.as_ref().is_none_or(|b| buf < *b) {
            best = Some(buf.clone());
        }
    }
    best.unwrap_or_default()
}

fn relabel(s: StateSet, map: &[usize]) -> StateSet {
    StateSet::from_elements(s.elements().map(|e| map[e]))
}

/// Region families of every permutation of `n` elements, where element `i`
/// is the one with x-rank `i`.
#[derive(Clone, Debug)]
pub struct CensusReport {
    pub n: usize,
    pub permutations: usize,
    /// Distinct families as labeled set systems.
    pub labeled_classes: usize,
    /// Permutations up to identifying each with its inverse.
    pub reflection_classes: usize,
    /// Distinct families up to relabeling the elements.
    pub unlabeled_classes: usize,
    pub max_family_size: usize,
    /// `1 + (n+1)n/2`
    pub state_bound: usize,
    /// `n!`
    pub class_bound: usize,
    /// `family(pi^-1)` equals `family(pi)` relabeled along the diagonal
    /// reflection, for every `pi`.
    pub reflection_identity: bool,
    /// `family(pi)` and `family(pi^-1)` share a canonical form for every `pi`.
    pub inverse_isomorphic: bool,
    pub families: Vec<(Permutation, Vec<StateSet>)>,
}

impl CensusReport {
    pub const HEADER: &'static str =
        "n\tpermutations\tlabeled\treflection\tunlabeled\tmax_states\tstate_bound\tclass_bound";

    pub fn row(&self) -> String {
        format!(
            "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
            self.n,
            self.permutations,
            self.labeled_classes,
            self.reflection_classes,
            self.unlabeled_classes,
            self.max_family_size,
            self.state_bound,
            self.class_bound
        )
    }

    pub fn table(&self) -> String {
        let mut out = String::new();
        writeln!(out, "{}", Self::HEADER).unwrap();
        writeln!(out, "{}", self.row()).unwrap();
        writeln!(
            out,
            "# reflection identity: {}",
            if self.reflection_identity {
                "holds"
            } else {
                "FAILS"
            }
        )
        .unwrap();
        writeln!(
            out,
            "# inverse permutations isomorphic: {}",
            if self.inverse_isomorphic {
                "holds"
            } else {
                "FAILS"
            }
        )
        .unwrap();
        out
    }
}

struct Entry {
    perm: Permutation,
    states: Vec<StateSet>,
    reflection_ok: bool,
    canonical: Vec<u64>,
}

pub fn census(n: usize) -> Result<CensusReport> {
    if n > MAX_CENSUS_N {
        return Err(Error::TooLarge {
            what: "census",
            max: MAX_CENSUS_N,
            got: n,
        });
    }
    let perms: Vec<Permutation> = Permutation::all(n).collect();
    let identity: Vec<usize> = (0..n).collect();
    let entries: Vec<Entry> = perms
        .par_iter()
        .map(|pi| {
            let states = sampled_states(&identity, pi.as_slice(), 1);
            let inv = pi.inverse();
            let mut inverse_states = sampled_states(&identity, inv.as_slice(), 1);
            inverse_states.sort_unstable_by_key(|s| s.bits());
            let mut reflected: Vec<StateSet> =
                states.iter().map(|&s| relabel(s, pi.as_slice())).collect();
            reflected.sort_unstable_by_key(|s| s.bits());
            Entry {
                perm: pi.clone(),
                reflection_ok: reflected == inverse_states,
                canonical: canonical_masks(&states, n),
                states,
            }
        })
        .collect();

    let position: HashMap<&Permutation, usize> = entries
        .iter()
        .enumerate()
        .map(|(i, e)| (&e.perm, i))
        .collect();
    let inverse_isomorphic = entries
        .iter()
        .all(|e| entries[position[&e.perm.inverse()]].canonical == e.canonical);
    let labeled: HashSet<&Vec<StateSet>> = entries.iter().map(|e| &e.states).collect();
    let unlabeled: HashSet<&Vec<u64>> = entries.iter().map(|e| &e.canonical).collect();

    Ok(CensusReport {
        n,
        permutations: entries.len(),
        labeled_classes: labeled.len(),
        reflection_classes: entries
            .iter()
            .filter(|e| e.perm <= e.perm.inverse())
            .count(),
        unlabeled_classes: unlabeled.len(),
        max_family_size: entries.iter().map(|e| e.states.len()).max().unwrap_or(0),
        state_bound: 1 + (n + 1) * n / 2,
        class_bound: (1..=n).product(),
        reflection_identity: entries.iter().all(|e| e.reflection_ok),
        inverse_isomorphic,
        families: entries.into_iter().map(|e| (e.perm, e.states)).collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::Universe;

    #[test]
    fn small_censuses() {
        let c = census(1).unwrap();
        assert_eq!((c.labeled_classes, c.unlabeled_classes), (1, 1));
        let c = census(2).unwrap();
        assert_eq!(c.labeled_classes, 2);
        assert_eq!(c.unlabeled_classes, 2);
        assert!(c.reflection_identity && c.inverse_isomorphic);
        let c = census(0).unwrap();
        assert_eq!(c.permutations, 1);
        assert_eq!(c.families[0].1, vec![StateSet::EMPTY]);
    }

    #[test]
    fn census_size_cap() {
        assert!(matches!(census(7), Err(Error::TooLarge { .. })));
    }

    #[test]
    fn canonical_form_ignores_labels() {
        let u = Universe::letters(3).unwrap();
        let chain = SetFamily::chain(u.clone());
        let other =
            SetFamily::new(u, vec![StateSet(0), StateSet(4), StateSet(6), StateSet(7)]).unwrap();
        assert_ne!(chain, other);
        assert_eq!(
            canonical_form(&chain).unwrap(),
            canonical_form(&other).unwrap()
        );
        let ps = SetFamily::prefix_suffix(Universe::letters(3).unwrap());
        assert_ne!(
            canonical_form(&chain).unwrap(),
            canonical_form(&ps).unwrap()
        );
    }

    #[test]
    fn table_has_header_and_row() {
        let t = census(3).unwrap().table();
        let lines: Vec<&str> = t.lines().collect();
        assert_eq!(lines[0], CensusReport::HEADER);
        assert!(lines[1].starts_with("3\t6\t"));
    }
}
