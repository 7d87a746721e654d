//! Deciding whether a learning space is st-planar.
//!
//! A learning space is st-planar exactly when it is the region family of
//! some quadrant arrangement, so recognition searches for the arrangement's
//! two boundary orders: the labels along the right exterior path (`x_order`)
//! and along the left exterior path (`y_order`).
//!
//! The search enumerates candidate `x_order`s as linear extensions of the
//! implication poset whose every prefix is a state, derives the unique
//! compatible `y_order`, and accepts only when the induced region family
//! equals the input. Worst case is exponential (a power set has `n!`
//! maximal chains), which is fine at the sizes this crate targets.

mod census;

use std::collections::HashSet;

pub use census::{canonical_form, census, CensusReport, MAX_CENSUS_N};

use crate::arrangement::{sampled_states, Permutation, QuadrantArrangement};
use crate::error::{Error, Result};
use crate::family::{validate_family, SetFamily, StateSet, Universe};

pub const MAX_BRUTE_FORCE_N: usize = 8;

/// `e ⪯ f` iff every state containing `f` also contains `e`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ImplicationPoset {
    universe: Universe,
    below: Vec<StateSet>,
}

impl ImplicationPoset {
    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn leq(&self, e: usize, f: usize) -> bool {
        self.below[f].contains(e)
    }

    pub fn comparable(&self, e: usize, f: usize) -> bool {
        self.leq(e, f) || self.leq(f, e)
    }

    /// All elements `e ⪯ f`, including `f`.
    pub fn down_set(&self, f: usize) -> StateSet {
        self.below[f]
    }

    pub fn is_linear_extension(&self, order: &[usize]) -> bool {
        let mut seen = StateSet::EMPTY;
        for &f in order {
            if !self.below[f].without(f).is_subset(seen) {
                return false;
            }
            seen = seen.with(f);
        }
        seen == self.universe.full() && order.len() == self.universe.len()
    }
}

pub fn implication_poset(family: &SetFamily) -> Result<ImplicationPoset> {
    let report = validate_family(family);
    if !report.is_ok() {
        return Err(Error::InvalidFamily(report));
    }
    Ok(poset_unchecked(family))
}

fn poset_unchecked(family: &SetFamily) -> ImplicationPoset {
    let n = family.universe().len();
    let full = family.universe().full();
    let below = (0..n)
        .map(|f| {
            family
                .states()
                .iter()
                .filter(|s| s.contains(f))
                .fold(full, |acc, &s| acc.intersection(s))
        })
        .collect();
    ImplicationPoset {
        universe: family.universe().clone(),
        below,
    }
}

/// Element labels along the right (`x_order`) and left (`y_order`) exterior
/// paths, from bottom to top.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundaryOrders {
    pub x_order: Vec<usize>,
    pub y_order: Vec<usize>,
}

impl BoundaryOrders {
    /// Ranks of each element in the two orders, or `None` if either order is
    /// not a permutation of `0..n`.
    pub fn ranks(&self, n: usize) -> Option<(Vec<usize>, Vec<usize>)> {
        Some((rank_of(&self.x_order, n)?, rank_of(&self.y_order, n)?))
    }

    /// The arrangement with corner `(x-rank, y-rank)` for each element.
    pub fn arrangement(&self, universe: &Universe) -> Result<QuadrantArrangement> {
        let (xr, yr) = self.ranks(universe.len()).ok_or_else(|| {
            Error::InconsistentOrders("orders are not permutations of the universe".into())
        })?;
        Ok(QuadrantArrangement::from_ranks(universe.clone(), &xr, &yr))
    }

    /// Permutation taking x-ranks to y-ranks.
    pub fn permutation(&self, n: usize) -> Option<Permutation> {
        let (_, yr) = self.ranks(n)?;
        Permutation::new(self.x_order.iter().map(|&e| yr[e]).collect()).ok()
    }

    pub fn flipped(&self) -> BoundaryOrders {
        BoundaryOrders {
            x_order: self.y_order.clone(),
            y_order: self.x_order.clone(),
        }
    }
}

fn rank_of(order: &[usize], n: usize) -> Option<Vec<usize>> {
    if order.len() != n {
        return None;
    }
    let mut rank = vec![usize::MAX; n];
    for (i, &e) in order.iter().enumerate() {
        if e >= n || rank[e] != usize::MAX {
            return None;
        }
        rank[e] = i;
    }
    Some(rank)
}

/// Boundary orders realizing `family` as a region family, or `None` if the
/// family is a learning space that is not st-planar. The lexicographically
/// smallest accepting `x_order` is returned.
pub fn recognize(family: &SetFamily) -> Result<Option<BoundaryOrders>> {
    let poset = implication_poset(family)?;
    let n = family.universe().len();
    if family.union_all() != family.universe().full() {
        return Ok(None);
    }
    let members = family.member_set();
    let mut search = Search {
        family,
        members: &members,
        poset: &poset,
        n,
        order: Vec::with_capacity(n),
    };
    Ok(search.extend(StateSet::EMPTY))
}

struct Search<'a> {
    family: &'a SetFamily,
    members: &'a HashSet<StateSet>,
    poset: &'a ImplicationPoset,
    n: usize,
    order: Vec<usize>,
}

impl Search<'_> {
    fn extend(&mut self, prefix: StateSet) -> Option<BoundaryOrders> {
        if self.order.len() == self.n {
            return self.accept();
        }
        for e in 0..self.n {
            if prefix.contains(e) {
                continue;
            }
            let next = prefix.with(e);
            if !self.poset.down_set(e).is_subset(next) || !self.members.contains(&next) {
                continue;
            }
            self.order.push(e);
            if let Some(found) = self.extend(next) {
                return Some(found);
            }
            self.order.pop();
        }
        None
    }

    fn accept(&self) -> Option<BoundaryOrders> {
        let y_order = forced_y_order(self.poset, &self.order)?;
        let orders = BoundaryOrders {
            x_order: self.order.clone(),
            y_order,
        };
        let (xr, yr) = orders.ranks(self.n)?;
        let states = sampled_states(&xr, &yr, 1);
        (states == self.family.states()).then_some(orders)
    }
}

/// The only left-path order compatible with `x_order`: comparable pairs keep
/// their poset order, incomparable pairs are reversed. `None` when those
/// constraints are not a total order.
fn forced_y_order(poset: &ImplicationPoset, x_order: &[usize]) -> Option<Vec<usize>> {
    let n = x_order.len();
    let mut x_rank = vec![0; n];
    for (i, &e) in x_order.iter().enumerate() {
        x_rank[e] = i;
    }
    let before = |e: usize, f: usize| -> bool {
        if poset.leq(e, f) {
            true
        } else if poset.leq(f, e) {
            false
        } else {
            x_rank[f] < x_rank[e]
        }
    };
    let mut slot = vec![usize::MAX; n];
    for e in 0..n {
        let rank = (0..n).filter(|&f| f != e && before(f, e)).count();
        if slot[rank] != usize::MAX {
            return None;
        }
        slot[rank] = e;
    }
    // Distinct in-counts make `slot` a permutation; check transitivity.
    for i in 0..n {
        for j in i + 1..n {
            if !before(slot[i], slot[j]) {
                return None;
            }
        }
    }
    Some(slot)
}

/// Factorial oracle: every x order against every permutation, comparing the
/// sampled region family with `family` directly.
pub fn brute_force_recognize(family: &SetFamily) -> Result<Option<BoundaryOrders>> {
    let n = family.universe().len();
    if n > MAX_BRUTE_FORCE_N {
        return Err(Error::TooLarge {
            what: "brute-force recognition",
            max: MAX_BRUTE_FORCE_N,
            got: n,
        });
    }
    let members = family.member_set();
    for sigma in Permutation::all(n) {
        for pi in Permutation::all(n) {
            let x_order = sigma.as_slice();
            // element sigma[i] has x-rank i and y-rank pi[i]
            let mut prefix_x = vec![0u64; n + 1];
            let mut prefix_y = vec![0u64; n + 1];
            let mut by_y = vec![0usize; n];
            for i in 0..n {
                by_y[pi.get(i)] = x_order[i];
            }
            for i in 0..n {
                prefix_x[i + 1] = prefix_x[i] | 1 << x_order[i];
                prefix_y[i + 1] = prefix_y[i] | 1 << by_y[i];
            }
            let mut found = HashSet::new();
            let all_members = prefix_x.iter().all(|&xm| {
                prefix_y.iter().all(|&ym| {
                    let s = StateSet(xm | ym);
                    found.insert(s);
                    members.contains(&s)
                })
            });
            if all_members && found.len() == family.len() {
                return Ok(Some(BoundaryOrders {
                    x_order: x_order.to_vec(),
                    y_order: by_y,
                }));
            }
        }
    }
    Ok(None)
}
