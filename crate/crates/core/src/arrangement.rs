//! Arrangements of translated negative quadrants and their region families.
//!
//! Only the relative order of corner coordinates matters, so every
//! arrangement can be normalized to integer ranks: element `e` sits at
//! `(x-rank, y-rank)` and the arrangement is described by the permutation
//! taking x-ranks to y-ranks.

use std::fmt;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::family::{build_graph, LearningGraph, SetFamily, StateSet, Universe};

/// A bijection on `0..n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(mapping: Vec<usize>) -> Result<Self> {
        let n = mapping.len();
        let mut seen = vec![false; n];
        for &v in &mapping {
            if v >= n || std::mem::replace(&mut seen[v], true) {
                return Err(Error::NotPermutation(n, mapping));
            }
        }
        Ok(Permutation(mapping))
    }

    pub fn identity(n: usize) -> Self {
        Permutation((0..n).collect())
    }

    pub fn reverse(n: usize) -> Self {
        Permutation((0..n).rev().collect())
    }

    /// All permutations of `0..n` in lexicographic order.
    pub fn all(n: usize) -> impl Iterator<Item = Permutation> {
        (0..n).permutations(n).map(Permutation)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn get(&self, i: usize) -> usize {
        self.0[i]
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.0.len()];
        for (i, &v) in self.0.iter().enumerate() {
            inv[v] = i;
        }
        Permutation(inv)
    }

    /// Number of pairs `i < j` with `p(i) > p(j)`.
    pub fn inversions(&self) -> usize {
        let p = &self.0;
        (0..p.len())
            .map(|i| p[i + 1..].iter().filter(|&&v| v < p[i]).count())
            .sum()
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.0.iter().join(","))
    }
}

/// One negative quadrant `{(x, y) | x <= cx, y <= cy}` per universe element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadrantArrangement {
    universe: Universe,
    corners: Vec<(i64, i64)>,
}

impl QuadrantArrangement {
    /// Corners indexed by element; x and y coordinates must each be pairwise
    /// distinct.
    pub fn from_corners(universe: Universe, corners: Vec<(i64, i64)>) -> Result<Self> {
        if corners.len() != universe.len() {
            return Err(Error::LengthMismatch {
                what: "corner list",
                got: corners.len(),
                expected: universe.len(),
            });
        }
        for (axis, key) in [('x', 0), ('y', 1)] {
            let mut values: Vec<i64> = corners
                .iter()
                .map(|c| if key == 0 { c.0 } else { c.1 })
                .collect();
            values.sort_unstable();
            if values.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::CoincidentCoordinates(axis));
            }
        }
        Ok(QuadrantArrangement { universe, corners })
    }

    /// Element `i` of `universe` gets corner `(i, pi(i))`.
    pub fn from_permutation(universe: Universe, pi: &Permutation) -> Result<Self> {
        if pi.len() != universe.len() {
            return Err(Error::LengthMismatch {
                what: "permutation",
                got: pi.len(),
                expected: universe.len(),
            });
        }
        let corners = pi
            .as_slice()
            .iter()
            .enumerate()
            .map(|(i, &y)| (i as i64, y as i64))
            .collect();
        Ok(QuadrantArrangement { universe, corners })
    }

    /// Same as [`from_permutation`](Self::from_permutation) with names given
    /// in x-rank order.
    pub fn from_names<S: Into<String>>(names: Vec<S>, pi: &Permutation) -> Result<Self> {
        Self::from_permutation(Universe::new(names)?, pi)
    }

    /// Corners given as `(x-rank, y-rank)` for each element, as produced by
    /// boundary orders.
    pub(crate) fn from_ranks(universe: Universe, x_rank: &[usize], y_rank: &[usize]) -> Self {
        let corners = x_rank
            .iter()
            .zip(y_rank)
            .map(|(&x, &y)| (x as i64, y as i64))
            .collect();
        QuadrantArrangement { universe, corners }
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn corners(&self) -> &[(i64, i64)] {
        &self.corners
    }

    pub fn len(&self) -> usize {
        self.corners.len()
    }

    pub fn is_empty(&self) -> bool {
        self.corners.is_empty()
    }

    /// Rank of each element's corner among the x coordinates.
    pub fn x_ranks(&self) -> Vec<usize> {
        ranks(self.corners.iter().map(|c| c.0))
    }

    pub fn y_ranks(&self) -> Vec<usize> {
        ranks(self.corners.iter().map(|c| c.1))
    }

    /// Elements sorted by corner x coordinate.
    pub fn x_order(&self) -> Vec<usize> {
        invert(&self.x_ranks())
    }

    pub fn y_order(&self) -> Vec<usize> {
        invert(&self.y_ranks())
    }

    /// Permutation taking x-ranks to y-ranks.
    pub fn permutation(&self) -> Permutation {
        let xr = self.x_ranks();
        let yr = self.y_ranks();
        let mut pi = vec![0; self.len()];
        for e in 0..self.len() {
            pi[xr[e]] = yr[e];
        }
        Permutation(pi)
    }

    /// Equivalent arrangement with rank coordinates and elements renamed so
    /// that universe order is x order.
    pub fn canonical(&self) -> QuadrantArrangement {
        let order = self.x_order();
        let names: Vec<String> = order
            .iter()
            .map(|&e| self.universe.name(e).to_string())
            .collect();
        let universe = Universe::new(names).expect("reordering keeps names distinct");
        Self::from_permutation(universe, &self.permutation()).expect("lengths agree")
    }

    /// Whether the corners already are `(i, pi(i))` for element `i`.
    pub fn is_canonical(&self) -> bool {
        self.corners
            .iter()
            .enumerate()
            .all(|(i, c)| c.0 == i as i64 && c.1 >= 0 && (c.1 as usize) < self.len())
    }
}

fn ranks(values: impl Iterator<Item = i64>) -> Vec<usize> {
    let values: Vec<i64> = values.collect();
    let mut order: Vec<usize> = (0..values.len()).collect();
    order.sort_by_key(|&e| values[e]);
    invert(&order)
}

fn invert(order: &[usize]) -> Vec<usize> {
    let mut rank = vec![0; order.len()];
    for (i, &e) in order.iter().enumerate() {
        rank[e] = i;
    }
    rank
}

/// Distinct states `{e : x_e < px or y_e < py}` over all grid cells, in
/// element bitmask terms. Sample points sit at odd coordinates in a grid
/// where corners occupy multiples of `2 * resolution`.
pub(crate) fn sampled_states(
    x_rank: &[usize],
    y_rank: &[usize],
    resolution: usize,
) -> Vec<StateSet> {
    let n = x_rank.len();
    let scale = 2 * resolution.max(1) as i64;
    let top = scale * n.saturating_sub(1) as i64 + 1;
    let masks = |rank: &[usize]| -> Vec<u64> {
        (-1..=top)
            .step_by(2)
            .map(|p| {
                (0..n)
                    .filter(|&e| scale * (rank[e] as i64) < p)
                    .fold(0u64, |m, e| m | 1 << e)
            })
            .collect()
    };
    let xs = masks(x_rank);
    let ys = masks(y_rank);
    let mut states: Vec<StateSet> = xs
        .iter()
        .flat_map(|&xm| ys.iter().map(move |&ym| StateSet(xm | ym)))
        .collect();
    states.sort_by_key(|s| s.canonical_key());
    states.dedup();
    states
}

/// Region family at a chosen sampling resolution; resolution 1 samples one
/// point per cell of the `(n+1) x (n+1)` grid refinement.
pub fn region_family_at(arrangement: &QuadrantArrangement, resolution: usize) -> SetFamily {
    let states = sampled_states(&arrangement.x_ranks(), &arrangement.y_ranks(), resolution);
    SetFamily::from_states(arrangement.universe.clone(), states).expect("states lie in universe")
}

/// Family of sets of quadrants not containing each region.
pub fn region_family(arrangement: &QuadrantArrangement) -> SetFamily {
    region_family_at(arrangement, 1)
}

pub fn region_graph(arrangement: &QuadrantArrangement) -> Result<LearningGraph> {
    build_graph(&region_family(arrangement))
}

/// Closed form `1 + n + inv(pi)`.
pub fn count_regions(arrangement: &QuadrantArrangement) -> usize {
    1 + arrangement.len() + arrangement.permutation().inversions()
}
