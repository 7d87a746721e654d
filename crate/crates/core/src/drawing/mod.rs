//! Upright-quad grid drawings: construction from boundary orders,
//! compaction, geometric validation, zones, and conversion back to quadrant
//! arrangements.

mod check;
mod compact;
mod convert;
mod faces;
pub mod geometry;
mod svg;
mod zones;

pub use check::{check_dominance, validate_upright_quad};
pub use compact::compact;
pub use convert::drawing_to_arrangement;
pub use faces::{extract_faces, FaceKind, FaceWalk, QuadRoles};
pub use svg::{render_svg, SvgOptions};
pub use zones::{exterior_paths, extract_zones, ExteriorPaths, Zone};

use crate::error::{Error, Result};
use crate::family::{SetFamily, StateSet};
use crate::recognize::BoundaryOrders;
use geometry::Point;

/// Integer position of every vertex, indexed like the vertices of the
/// corresponding [`LearningGraph`](crate::family::LearningGraph).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GridDrawing {
    coords: Vec<Point>,
}

impl GridDrawing {
    pub fn new(coords: Vec<Point>) -> Self {
        GridDrawing { coords }
    }

    pub fn coords(&self) -> &[Point] {
        &self.coords
    }

    pub fn get(&self, v: usize) -> Point {
        self.coords[v]
    }

    pub fn set(&mut self, v: usize, p: Point) {
        self.coords[v] = p;
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    /// `(min_x, min_y, max_x, max_y)`, all zero for an empty drawing.
    pub fn bounds(&self) -> (i64, i64, i64, i64) {
        if self.coords.is_empty() {
            return (0, 0, 0, 0);
        }
        let min_x = self.coords.iter().map(|p| p.0).min().unwrap();
        let min_y = self.coords.iter().map(|p| p.1).min().unwrap();
        let max_x = self.coords.iter().map(|p| p.0).max().unwrap();
        let max_y = self.coords.iter().map(|p| p.1).max().unwrap();
        (min_x, min_y, max_x, max_y)
    }

    pub fn x_span(&self) -> i64 {
        let (a, _, b, _) = self.bounds();
        b - a
    }

    pub fn y_span(&self) -> i64 {
        let (_, a, _, b) = self.bounds();
        b - a
    }
}

/// Places each state `v` at `(min{i : x_i ∉ v}, min{i : y_i ∉ v})` and the
/// full state at `(n, n)`. Output indices follow the family's canonical
/// order, matching [`build_graph`](crate::family::build_graph).
pub fn assign_coordinates(family: &SetFamily, orders: &BoundaryOrders) -> Result<GridDrawing> {
    let n = family.universe().len();
    if orders.ranks(n).is_none() {
        return Err(Error::InconsistentOrders(
            "orders are not permutations of the universe".into(),
        ));
    }
    for (name, order) in [("x", &orders.x_order), ("y", &orders.y_order)] {
        let mut prefix = StateSet::EMPTY;
        for &e in order.iter() {
            prefix = prefix.with(e);
            if !family.contains(prefix) {
                return Err(Error::InconsistentOrders(format!(
                    "{name}-order prefix {} is not a state",
                    family.format_state(prefix)
                )));
            }
        }
    }
    let full = family.universe().full();
    let first_missing = |order: &[usize], v: StateSet| -> i64 {
        order.iter().position(|&e| !v.contains(e)).unwrap_or(n) as i64
    };
    let coords = family
        .states()
        .iter()
        .map(|&v| {
            if v == full {
                (n as i64, n as i64)
            } else {
                (
                    first_missing(&orders.x_order, v),
                    first_missing(&orders.y_order, v),
                )
            }
        })
        .collect();
    Ok(GridDrawing::new(coords))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{build_graph, Universe};
    use crate::recognize::recognize;

    fn orders(x: &[usize], y: &[usize]) -> BoundaryOrders {
        BoundaryOrders {
            x_order: x.to_vec(),
            y_order: y.to_vec(),
        }
    }

    #[test]
    fn square_coordinates() {
        let f = SetFamily::power_set(Universe::letters(2).unwrap()).unwrap();
        let d = assign_coordinates(&f, &orders(&[0, 1], &[1, 0])).unwrap();
        // canonical order: {}, {a}, {b}, {a,b}
        assert_eq!(d.coords(), &[(0, 0), (1, 0), (0, 1), (2, 2)]);
    }

    #[test]
    fn chain_is_diagonal() {
        let f = SetFamily::chain(Universe::letters(3).unwrap());
        let d = assign_coordinates(&f, &orders(&[0, 1, 2], &[0, 1, 2])).unwrap();
        assert_eq!(d.coords(), &[(0, 0), (1, 1), (2, 2), (3, 3)]);
    }

    #[test]
    fn prefix_suffix_fits_grid() {
        let f = SetFamily::prefix_suffix(Universe::letters(3).unwrap());
        let o = recognize(&f).unwrap().unwrap();
        let d = assign_coordinates(&f, &o).unwrap();
        let (x0, y0, x1, y1) = d.bounds();
        assert!(x0 >= 0 && y0 >= 0 && x1 <= 3 && y1 <= 3);
        let g = build_graph(&f).unwrap();
        assert!(validate_upright_quad(&d, &g).is_ok());
    }

    #[test]
    fn inconsistent_orders_rejected() {
        let f = SetFamily::chain(Universe::letters(2).unwrap());
        let err = assign_coordinates(&f, &orders(&[1, 0], &[0, 1])).unwrap_err();
        assert!(matches!(err, Error::InconsistentOrders(ref m) if m.contains("x-order")));
        assert!(assign_coordinates(&f, &orders(&[0], &[0, 1])).is_err());
        assert!(assign_coordinates(&f, &orders(&[0, 0], &[0, 1])).is_err());
    }

    #[test]
    fn empty_universe_single_vertex() {
        let f = SetFamily::chain(Universe::letters(0).unwrap());
        let d = assign_coordinates(&f, &orders(&[], &[])).unwrap();
        assert_eq!(d.coords(), &[(0, 0)]);
        let g = build_graph(&f).unwrap();
        assert!(validate_upright_quad(&d, &g).is_ok());
        assert!(check_dominance(&d, &g).is_ok());
    }
}
