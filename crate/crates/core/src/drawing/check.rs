use std::collections::VecDeque;

use super::faces::{extract_faces, FaceKind};
use super::geometry::{dominates, on_segment, orient, overlap_from_shared, segments_intersect};
use super::GridDrawing;
use crate::family::{Check, LearningGraph, ValidationReport, Violation, Witness};

/// U1 only: vertex count, distinct positions, and no two edges meeting
/// anywhere but a shared endpoint.
pub(crate) fn planarity_report(drawing: &GridDrawing, graph: &LearningGraph) -> ValidationReport {
    let mut report = ValidationReport::new();
    let coords = drawing.coords();
    if coords.len() != graph.vertex_count() {
        report.push(
            Violation::new(Check::U1, Witness::Vertices(vec![])).with_detail(format!(
                "{} coordinates for {} vertices",
                coords.len(),
                graph.vertex_count()
            )),
        );
        return report;
    }

    let mut by_position: Vec<usize> = (0..coords.len()).collect();
    by_position.sort_by_key(|&v| coords[v]);
    for w in by_position.windows(2) {
        if coords[w[0]] == coords[w[1]] {
            report.push(
                Violation::new(Check::U1, Witness::Vertices(vec![w[0], w[1]]))
                    .with_detail("coincident vertices"),
            );
        }
    }

    let edges = graph.edges();
    for (i, e) in edges.iter().enumerate() {
        let (a, b) = (coords[e.from], coords[e.to]);
        for (w, &p) in coords.iter().enumerate() {
            if w != e.from && w != e.to && p != a && p != b && on_segment(p, a, b) {
                report.push(
                    Violation::new(Check::U1, Witness::Vertices(vec![w]))
                        .with_detail(format!("vertex lies on edge e{i}")),
                );
            }
        }
        for (j, f) in edges.iter().enumerate().skip(i + 1) {
            let (c, d) = (coords[f.from], coords[f.to]);
            let shared = [e.from, e.to]
                .into_iter()
                .find(|&v| v == f.from || v == f.to);
            let bad = match shared {
                Some(v) => {
                    let p = coords[v];
                    let q1 = if v == e.from { b } else { a };
                    let q2 = if v == f.from { d } else { c };
                    overlap_from_shared(p, q1, q2)
                }
                None => segments_intersect(a, b, c, d),
            };
            if bad {
                report.push(
                    Violation::new(Check::U1, Witness::Edges(vec![i, j]))
                        .with_detail("edges cross"),
                );
            }
        }
    }
    report
}

/// Edges oriented from the dominated endpoint to the dominating one; `None`
/// for edges whose endpoints are incomparable.
pub(crate) fn oriented_edges(
    drawing: &GridDrawing,
    graph: &LearningGraph,
) -> Vec<Option<(usize, usize)>> {
    let coords = drawing.coords();
    graph
        .edges()
        .iter()
        .map(|e| {
            let (a, b) = (coords[e.from], coords[e.to]);
            if dominates(a, b) {
                Some((e.from, e.to))
            } else if dominates(b, a) {
                Some((e.to, e.from))
            } else {
                None
            }
        })
        .collect()
}

/// Checks U1 (planar straight-line drawing), edge orientability, U2 (unique
/// local minimum and maximum) and U3 (every interior face an upright
/// quadrilateral). Graphs with a single vertex pass vacuously.
pub fn validate_upright_quad(drawing: &GridDrawing, graph: &LearningGraph) -> ValidationReport {
    let mut report = planarity_report(drawing, graph);
    if drawing.len() != graph.vertex_count() {
        return report;
    }
    let planar = report.is_ok();

    let oriented = oriented_edges(drawing, graph);
    let n = graph.vertex_count();
    let mut indegree = vec![0usize; n];
    let mut outdegree = vec![0usize; n];
    for (i, o) in oriented.iter().enumerate() {
        match o {
            Some((u, v)) => {
                outdegree[*u] += 1;
                indegree[*v] += 1;
            }
            None => report.push(
                Violation::new(Check::Orientation, Witness::Edges(vec![i]))
                    .with_detail("endpoints are incomparable"),
            ),
        }
    }
    let sources: Vec<usize> = (0..n).filter(|&v| indegree[v] == 0).collect();
    let sinks: Vec<usize> = (0..n).filter(|&v| outdegree[v] == 0).collect();
    if sources.len() != 1 {
        report.push(
            Violation::new(Check::U2, Witness::Vertices(sources.clone()))
                .with_detail(format!("{} local minima", sources.len())),
        );
    }
    if sinks.len() != 1 {
        report.push(
            Violation::new(Check::U2, Witness::Vertices(sinks.clone()))
                .with_detail(format!("{} local maxima", sinks.len())),
        );
    }

    if !planar {
        return report;
    }
    let faces = match extract_faces(drawing, graph) {
        Ok(f) => f,
        Err(err) => {
            report.push(
                Violation::new(Check::U3, Witness::Vertices(vec![])).with_detail(err.to_string()),
            );
            return report;
        }
    };
    let coords = drawing.coords();
    for (i, face) in faces.iter().enumerate() {
        if face.kind != FaceKind::Interior {
            continue;
        }
        if face.len() != 4 {
            report.push(
                Violation::new(Check::U3, Witness::Face(i))
                    .with_detail(format!("face has {} sides", face.len())),
            );
        } else if face.roles.is_none() {
            report.push(
                Violation::new(Check::U3, Witness::Face(i))
                    .with_detail("not an upright quadrilateral"),
            );
        } else {
            let convex = (0..4).all(|k| {
                let p = |j: usize| coords[face.vertices[(k + j) % 4]];
                orient(p(0), p(1), p(2)) > 0
            });
            if !convex {
                report.push(Violation::new(Check::U3, Witness::Face(i)).with_detail("not convex"));
            }
        }
    }
    report
}

/// Dominance in the plane must coincide with reachability along oriented
/// edges, for every ordered pair of distinct vertices.
pub fn check_dominance(drawing: &GridDrawing, graph: &LearningGraph) -> ValidationReport {
    let mut report = ValidationReport::new();
    let n = graph.vertex_count();
    if drawing.len() != n {
        report.push(
            Violation::new(Check::Dominance, Witness::Vertices(vec![]))
                .with_detail("drawing and graph sizes differ"),
        );
        return report;
    }
    let mut out: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (u, v) in oriented_edges(drawing, graph).into_iter().flatten() {
        out[u].push(v);
    }
    let coords = drawing.coords();
    let mut reached = vec![false; n];
    let mut queue = VecDeque::new();
    for u in 0..n {
        reached.fill(false);
        reached[u] = true;
        queue.push_back(u);
        while let Some(w) = queue.pop_front() {
            for &x in &out[w] {
                if !reached[x] {
                    reached[x] = true;
                    queue.push_back(x);
                }
            }
        }
        for v in 0..n {
            if v == u {
                continue;
            }
            let dom = dominates(coords[u], coords[v]);
            if dom != reached[v] {
                let detail = if dom {
                    "dominates but unreachable"
                } else {
                    "reachable but not dominating"
                };
                report.push(
                    Violation::new(Check::Dominance, Witness::Vertices(vec![u, v]))
                        .with_detail(detail),
                );
            }
        }
    }
    report
}
