use std::cmp::Ordering;
use std::collections::BTreeMap;

use super::check::oriented_edges;
use super::faces::{extract_faces, FaceKind, FaceWalk};
use super::geometry::angle_cmp;
use super::GridDrawing;
use crate::error::{Error, Result};
use crate::family::LearningGraph;

/// Edge sequences of the two exterior paths from the bottom vertex to the
/// top vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExteriorPaths {
    pub left: Vec<usize>,
    pub right: Vec<usize>,
}

/// Follows the most clockwise (right) or most counterclockwise (left)
/// outgoing edge from the unique local minimum until the local maximum.
pub fn exterior_paths(drawing: &GridDrawing, graph: &LearningGraph) -> Result<ExteriorPaths> {
    let n = graph.vertex_count();
    if drawing.len() != n {
        return Err(Error::DrawingSize {
            got: drawing.len(),
            expected: n,
        });
    }
    let coords = drawing.coords();
    let mut out: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
    let mut indegree = vec![0usize; n];
    for (i, o) in oriented_edges(drawing, graph).into_iter().enumerate() {
        let (u, v) =
            o.ok_or_else(|| Error::InvalidDrawing(format!("edge e{i} cannot be oriented")))?;
        out[u].push((v, i));
        indegree[v] += 1;
    }
    let sources: Vec<usize> = (0..n).filter(|&v| indegree[v] == 0).collect();
    if sources.len() != 1 {
        return Err(Error::InvalidDrawing(format!(
            "{} local minima",
            sources.len()
        )));
    }
    let dir = |u: usize, v: usize| (coords[v].0 - coords[u].0, coords[v].1 - coords[u].1);
    let walk = |pick: Ordering| -> Vec<usize> {
        let mut path = Vec::new();
        let mut v = sources[0];
        while let Some(&(next, e)) = out[v].iter().reduce(|best, cand| {
            if angle_cmp(dir(v, cand.0), dir(v, best.0)) == pick {
                cand
            } else {
                best
            }
        }) {
            path.push(e);
            v = next;
        }
        path
    };
    Ok(ExteriorPaths {
        right: walk(Ordering::Less),
        left: walk(Ordering::Greater),
    })
}

/// Edges chained across opposite sides of interior quadrilaterals, with the
/// faces they cross.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Zone {
    /// Indices into [`extract_faces`] output, starting from the face on the
    /// left exterior path.
    pub faces: Vec<usize>,
    /// Sorted edge indices.
    pub edges: Vec<usize>,
    pub left_exterior: Option<usize>,
    pub right_exterior: Option<usize>,
    /// Shared element label of all edges, if they agree.
    pub label: Option<usize>,
}

impl Zone {
    pub fn is_bridge(&self) -> bool {
        self.faces.is_empty()
    }
}

struct DisjointSets(Vec<usize>);

impl DisjointSets {
    fn find(&mut self, mut x: usize) -> usize {
        while self.0[x] != x {
            self.0[x] = self.0[self.0[x]];
            x = self.0[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[ra.max(rb)] = ra.min(rb);
        }
    }
}

/// Zones of a valid drawing, ordered by where they meet the right exterior
/// path. Bridges form singleton zones.
pub fn extract_zones(drawing: &GridDrawing, graph: &LearningGraph) -> Result<Vec<Zone>> {
    let faces = extract_faces(drawing, graph)?;
    let paths = exterior_paths(drawing, graph)?;
    zones_from_faces(graph, &faces, &paths)
}

pub(crate) fn zones_from_faces(
    graph: &LearningGraph,
    faces: &[FaceWalk],
    paths: &ExteriorPaths,
) -> Result<Vec<Zone>> {
    let m = graph.edge_count();
    let mut sets = DisjointSets((0..m).collect());
    let mut faces_of_edge: Vec<Vec<usize>> = vec![Vec::new(); m];
    for (i, face) in faces.iter().enumerate() {
        if face.kind != FaceKind::Interior {
            continue;
        }
        let roles = face.roles.ok_or_else(|| {
            Error::MalformedZone(format!("face {i} is not an upright quadrilateral"))
        })?;
        sets.union(roles.bottom_edge, roles.top_edge);
        sets.union(roles.left_edge, roles.right_edge);
        for &e in &face.edges {
            faces_of_edge[e].push(i);
        }
    }

    let mut classes: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for e in 0..m {
        classes.entry(sets.find(e)).or_default().push(e);
    }
    let position = |path: &[usize], e: usize| path.iter().position(|&p| p == e);

    let mut zones = Vec::with_capacity(classes.len());
    for edges in classes.into_values() {
        let on_path = |path: &[usize]| -> Result<Option<usize>> {
            let hits: Vec<usize> = edges
                .iter()
                .copied()
                .filter(|&e| position(path, e).is_some())
                .collect();
            match hits.len() {
                0 => Ok(None),
                1 => Ok(Some(hits[0])),
                k => Err(Error::MalformedZone(format!(
                    "zone meets an exterior path {k} times"
                ))),
            }
        };
        let left_exterior = on_path(&paths.left)?;
        let right_exterior = on_path(&paths.right)?;

        let mut zone_faces: Vec<usize> = edges
            .iter()
            .flat_map(|&e| faces_of_edge[e].iter().copied())
            .collect();
        zone_faces.sort_unstable();
        zone_faces.dedup();

        let start = left_exterior.or(right_exterior).ok_or_else(|| {
            Error::MalformedZone(format!(
                "zone of edge e{} never reaches the exterior",
                edges[0]
            ))
        })?;
        let mut sequence = Vec::with_capacity(zone_faces.len());
        let mut edge = start;
        while let Some(&f) = faces_of_edge[edge].iter().find(|f| !sequence.contains(*f)) {
            sequence.push(f);
            edge = faces[f]
                .roles
                .and_then(|r| r.opposite(edge))
                .ok_or_else(|| {
                    Error::MalformedZone(format!("edge e{edge} is not a side of face {f}"))
                })?;
        }
        if sequence.len() != zone_faces.len() {
            return Err(Error::MalformedZone(format!(
                "zone faces do not form a single sequence ({} of {} reached)",
                sequence.len(),
                zone_faces.len()
            )));
        }
        let end_ok = match (left_exterior, right_exterior) {
            (Some(_), Some(r)) => edge == r,
            _ => true,
        };
        if !end_ok {
            return Err(Error::MalformedZone(format!(
                "zone starting at e{start} ends at e{edge}, not on the right exterior path"
            )));
        }

        let label = graph.edges()[edges[0]].label;
        let uniform = edges.iter().all(|&e| graph.edges()[e].label == label);
        zones.push(Zone {
            faces: sequence,
            edges,
            left_exterior,
            right_exterior,
            label: uniform.then_some(label),
        });
    }
    zones.sort_by_key(|z| {
        (
            z.right_exterior
                .and_then(|e| position(&paths.right, e))
                .unwrap_or(usize::MAX),
            z.edges[0],
        )
    });
    Ok(zones)
}
