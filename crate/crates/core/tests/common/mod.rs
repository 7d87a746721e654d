#![allow(dead_code)]

use std::collections::BTreeSet;

use uquad::arrangement::{region_family, Permutation, QuadrantArrangement};
use uquad::family::{SetFamily, StateSet, Universe};

/// All permutations of 1..=5 elements, in the order the sweep visits them.
pub fn sweep_permutations() -> Vec<Permutation> {
    (1..=5).flat_map(Permutation::all).collect()
}

pub fn arrangement(pi: &Permutation) -> QuadrantArrangement {
    QuadrantArrangement::from_permutation(Universe::letters(pi.len()).unwrap(), pi).unwrap()
}

pub fn family_of(pi: &Permutation) -> SetFamily {
    region_family(&arrangement(pi))
}

/// States of the cells of the arrangement with element `i` at `(i, pi[i])`,
/// found by scanning a grid four times finer than the corners.
pub fn fine_sampled_states(pi: &[usize]) -> BTreeSet<u64> {
    let n = pi.len() as i64;
    let corners: Vec<(i64, i64)> = pi
        .iter()
        .enumerate()
        .map(|(i, &p)| (4 * i as i64, 4 * p as i64))
        .collect();
    let mut out = BTreeSet::new();
    for px in -2..=4 * n {
        for py in -2..=4 * n {
            if px % 4 == 0 || py % 4 == 0 {
                continue;
            }
            let mut mask = 0u64;
            for (e, &(x, y)) in corners.iter().enumerate() {
                if x < px || y < py {
                    mask |= 1 << e;
                }
            }
            out.insert(mask);
        }
    }
    out
}

/// Every union of an x-prefix and a y-prefix.
pub fn prefix_unions(pi: &[usize]) -> BTreeSet<u64> {
    let n = pi.len();
    let mut y_order = vec![0; n];
    for (e, &r) in pi.iter().enumerate() {
        y_order[r] = e;
    }
    let mut out = BTreeSet::new();
    for i in 0..=n {
        let x: u64 = (0..i).map(|e| 1u64 << e).sum();
        for j in 0..=n {
            let y: u64 = y_order[..j].iter().map(|&e| 1u64 << e).sum();
            out.insert(x | y);
        }
    }
    out
}

pub fn inversions(pi: &[usize]) -> usize {
    let mut count = 0;
    for i in 0..pi.len() {
        for j in i + 1..pi.len() {
            if pi[i] > pi[j] {
                count += 1;
            }
        }
    }
    count
}

pub fn masks(f: &SetFamily) -> BTreeSet<u64> {
    f.states().iter().map(|s| s.bits()).collect()
}

/// All-pairs shortest paths over single-element steps inside the family.
pub fn floyd_warshall_well_graded(states: &[StateSet]) -> bool {
    let k = states.len();
    const INF: usize = usize::MAX / 4;
    let mut dist = vec![vec![INF; k]; k];
    for i in 0..k {
        dist[i][i] = 0;
        for j in 0..k {
            if states[i].symmetric_difference(states[j]).len() == 1 {
                dist[i][j] = 1;
            }
        }
    }
    for m in 0..k {
        for i in 0..k {
            for j in 0..k {
                if dist[i][m] + dist[m][j] < dist[i][j] {
                    dist[i][j] = dist[i][m] + dist[m][j];
                }
            }
        }
    }
    (0..k).all(|i| (0..k).all(|j| dist[i][j] == states[i].symmetric_difference(states[j]).len()))
}

pub fn union_closed(states: &[StateSet]) -> bool {
    states
        .iter()
        .all(|&a| states.iter().all(|&b| states.contains(&a.union(b))))
}

/// Family on `n` letters whose states are the set bits of `selector`
/// interpreted over all `2^n` subsets.
pub fn family_from_selector(n: usize, selector: u64) -> SetFamily {
    let states = (0..1u64 << n)
        .filter(|m| selector >> m & 1 == 1)
        .map(StateSet);
    SetFamily::from_states(Universe::letters(n).unwrap(), states).unwrap()
}
