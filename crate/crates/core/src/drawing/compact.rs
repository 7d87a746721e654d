use super::{check_dominance, validate_upright_quad, GridDrawing};
use crate::error::{Error, Result};
use crate::family::LearningGraph;

#[derive(Clone, Copy)]
enum Axis {
    X,
    Y,
}

impl Axis {
    fn get(self, p: (i64, i64)) -> i64 {
        match self {
            Axis::X => p.0,
            Axis::Y => p.1,
        }
    }

    fn put(self, p: &mut (i64, i64), value: i64) {
        match self {
            Axis::X => p.0 = value,
            Axis::Y => p.1 = value,
        }
    }
}

fn acceptable(drawing: &GridDrawing, graph: &LearningGraph) -> bool {
    validate_upright_quad(drawing, graph).is_ok() && check_dominance(drawing, graph).is_ok()
}

/// Greedily merges neighbouring occupied coordinate values, X axis then Y,
/// left to right, keeping a merge only when the result still passes the
/// upright-quad and dominance checks. Repeats until nothing merges.
///
/// No attempt is made at minimum area.
pub fn compact(drawing: &GridDrawing, graph: &LearningGraph) -> Result<GridDrawing> {
    let report = validate_upright_quad(drawing, graph);
    if !report.is_ok() {
        return Err(Error::InvalidDrawing(
            report
                .render(graph.universe(), graph.vertices())
                .trim_end()
                .replace('\n', "; "),
        ));
    }
    let mut current = drawing.clone();
    loop {
        let mut changed = false;
        for axis in [Axis::X, Axis::Y] {
            let mut i = 0;
            loop {
                let mut values: Vec<i64> = current.coords().iter().map(|&p| axis.get(p)).collect();
                values.sort_unstable();
                values.dedup();
                if i + 1 >= values.len() {
                    break;
                }
                let (low, high) = (values[i], values[i + 1]);
                let mut candidate = current.clone();
                for v in 0..candidate.len() {
                    let mut p = candidate.get(v);
                    let c = axis.get(p);
                    if c >= high {
                        axis.put(&mut p, c - (high - low));
                        candidate.set(v, p);
                    }
                }
                if acceptable(&candidate, graph) {
                    current = candidate;
                    changed = true;
                } else {
                    i += 1;
                }
            }
        }
        if !changed {
            return Ok(current);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::drawing::assign_coordinates;
    use crate::family::{build_graph, SetFamily, Universe};
    use crate::recognize::recognize;

    fn drawn(f: &SetFamily) -> (GridDrawing, LearningGraph) {
        let o = recognize(f).unwrap().unwrap();
        (assign_coordinates(f, &o).unwrap(), build_graph(f).unwrap())
    }

    #[test]
    fn chain_collapses_to_a_column() {
        // vertical edges keep weak dominance, so every x-merge is accepted
        let (d, g) = drawn(&SetFamily::chain(Universe::letters(3).unwrap()));
        let c = compact(&d, &g).unwrap();
        assert_eq!(c.coords(), &[(0, 0), (0, 1), (0, 2), (0, 3)]);
        assert!(validate_upright_quad(&c, &g).is_ok());
        assert!(check_dominance(&c, &g).is_ok());
    }

    #[test]
    fn square_is_already_minimal() {
        let u = Universe::letters(2).unwrap();
        let f = SetFamily::power_set(u).unwrap();
        let g = build_graph(&f).unwrap();
        let d = GridDrawing::new(vec![(0, 0), (1, 0), (0, 1), (1, 1)]);
        assert_eq!(compact(&d, &g).unwrap(), d);
    }

    #[test]
    fn prefix_suffix_shrinks() {
        let (d, g) = drawn(&SetFamily::prefix_suffix(Universe::letters(3).unwrap()));
        let c = compact(&d, &g).unwrap();
        assert!(validate_upright_quad(&c, &g).is_ok());
        assert!(check_dominance(&c, &g).is_ok());
        assert!(c.x_span() <= d.x_span() && c.y_span() <= d.y_span());
        assert!(c.x_span() * c.y_span() < d.x_span() * d.y_span());
    }

    #[test]
    fn invalid_input_rejected() {
        let f = SetFamily::power_set(Universe::letters(2).unwrap()).unwrap();
        let g = build_graph(&f).unwrap();
        let d = GridDrawing::new(vec![(0, 0), (1, 1), (0, 1), (2, 2)]);
        assert!(matches!(compact(&d, &g), Err(Error::InvalidDrawing(_))));
    }
}
