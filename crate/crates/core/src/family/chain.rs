use super::{SetFamily, StateSet};
use crate::error::{Error, Result};

/// A chain `K = K0 ⊂ K1 ⊂ ... ⊂ Km = L` of family members, each step adding
/// one element. At every step the smallest admissible element index is taken.
pub fn chain_between(
    family: &SetFamily,
    lower: StateSet,
    upper: StateSet,
) -> Result<Vec<StateSet>> {
    for s in [lower, upper] {
        if !family.contains(s) {
            return Err(Error::MissingState(family.format_state(s)));
        }
    }
    if !lower.is_subset(upper) {
        return Err(Error::NotSubset(
            family.format_state(lower),
            family.format_state(upper),
        ));
    }
    let mut chain = Vec::with_capacity(upper.len() - lower.len() + 1);
    let mut current = lower;
    chain.push(current);
    while current != upper {
        let next = upper
            .difference(current)
            .elements()
            .map(|e| current.with(e))
            .find(|&s| family.contains(s))
            .ok_or_else(|| {
                Error::NoChain(family.format_state(current), family.format_state(upper))
            })?;
        chain.push(next);
        current = next;
    }
    Ok(chain)
}
