use super::check::planarity_report;
use super::geometry::{angle_cmp, signed_area2, Point};
use super::GridDrawing;
use crate::error::{Error, Result};
use crate::family::LearningGraph;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FaceKind {
    Interior,
    Outer,
}

/// Vertex and edge roles of an upright quadrilateral. `bottom` is the
/// minimal vertex, `right` ends the horizontal bottom edge, `left` ends the
/// vertical left edge and `top` is the maximal vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct QuadRoles {
    pub bottom: usize,
    pub right: usize,
    pub top: usize,
    pub left: usize,
    pub bottom_edge: usize,
    pub right_edge: usize,
    pub top_edge: usize,
    pub left_edge: usize,
}

impl QuadRoles {
    /// The side across the face from `edge`, if `edge` is a side.
    pub fn opposite(&self, edge: usize) -> Option<usize> {
        if edge == self.bottom_edge {
            Some(self.top_edge)
        } else if edge == self.top_edge {
            Some(self.bottom_edge)
        } else if edge == self.left_edge {
            Some(self.right_edge)
        } else if edge == self.right_edge {
            Some(self.left_edge)
        } else {
            None
        }
    }
}

/// A closed boundary walk. `edges[i]` joins `vertices[i]` and
/// `vertices[(i + 1) % len]`; interior faces run counterclockwise.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceWalk {
    pub vertices: Vec<usize>,
    pub edges: Vec<usize>,
    pub kind: FaceKind,
    pub roles: Option<QuadRoles>,
}

impl FaceWalk {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }
}

/// Traces every face of a planar straight-line drawing from its rotation
/// system. Interior faces come first in discovery order; the outer face is
/// last. A drawing with no edges has a single empty outer face.
pub fn extract_faces(drawing: &GridDrawing, graph: &LearningGraph) -> Result<Vec<FaceWalk>> {
    let planarity = planarity_report(drawing, graph);
    if !planarity.is_ok() {
        return Err(Error::NotPlanar(
            planarity
                .render(graph.universe(), graph.vertices())
                .trim_end()
                .replace('\n', "; "),
        ));
    }
    let coords = drawing.coords();
    let edges = graph.edges();

    // half-edge 2e runs from -> to, 2e+1 runs to -> from
    let head = |h: usize| {
        if h.is_multiple_of(2) {
            edges[h / 2].to
        } else {
            edges[h / 2].from
        }
    };
    let tail = |h: usize| {
        if h.is_multiple_of(2) {
            edges[h / 2].from
        } else {
            edges[h / 2].to
        }
    };

    let mut around: Vec<Vec<usize>> = vec![Vec::new(); graph.vertex_count()];
    for h in 0..2 * edges.len() {
        around[tail(h)].push(h);
    }
    let mut slot = vec![0usize; 2 * edges.len()];
    for (v, list) in around.iter_mut().enumerate() {
        let origin = coords[v];
        list.sort_by(|&a, &b| {
            angle_cmp(
                delta(origin, coords[head(a)]),
                delta(origin, coords[head(b)]),
            )
        });
        for (i, &h) in list.iter().enumerate() {
            slot[h] = i;
        }
    }
    // Arriving along u -> v, leave along the edge just clockwise of v -> u.
    let next = |h: usize| -> usize {
        let twin = h ^ 1;
        let list = &around[head(h)];
        list[(slot[twin] + list.len() - 1) % list.len()]
    };

    let mut seen = vec![false; 2 * edges.len()];
    let mut walks = Vec::new();
    for start in 0..2 * edges.len() {
        if seen[start] {
            continue;
        }
        let mut vertices = Vec::new();
        let mut walk_edges = Vec::new();
        let mut h = start;
        loop {
            seen[h] = true;
            vertices.push(tail(h));
            walk_edges.push(h / 2);
            h = next(h);
            if h == start {
                break;
            }
        }
        let points: Vec<Point> = vertices.iter().map(|&v| coords[v]).collect();
        walks.push((signed_area2(&points), vertices, walk_edges));
    }

    if walks.is_empty() {
        return Ok(vec![FaceWalk {
            vertices: vec![],
            edges: vec![],
            kind: FaceKind::Outer,
            roles: None,
        }]);
    }
    let outer = if walks.len() == 1 {
        0
    } else {
        let negative: Vec<usize> = (0..walks.len()).filter(|&i| walks[i].0 < 0).collect();
        if negative.len() != 1 {
            return Err(Error::InvalidDrawing(format!(
                "expected one outer face, found {} clockwise walks",
                negative.len()
            )));
        }
        negative[0]
    };

    let mut faces = Vec::with_capacity(walks.len());
    let mut outer_face = None;
    for (i, (_, vertices, edges)) in walks.into_iter().enumerate() {
        if i == outer {
            outer_face = Some(FaceWalk {
                vertices,
                edges,
                kind: FaceKind::Outer,
                roles: None,
            });
        } else {
            let roles = quad_roles(coords, &vertices, &edges);
            faces.push(FaceWalk {
                vertices,
                edges,
                kind: FaceKind::Interior,
                roles,
            });
        }
    }
    faces.extend(outer_face);
    Ok(faces)
}

fn delta(from: Point, to: Point) -> Point {
    (to.0 - from.0, to.1 - from.1)
}

/// Matches a counterclockwise 4-walk against `x0=x1<x2<=x3`, `y0=y2<y1<=y3`
/// (0 bottom, 1 left, 2 right, 3 top).
fn quad_roles(coords: &[Point], vertices: &[usize], edges: &[usize]) -> Option<QuadRoles> {
    if vertices.len() != 4 {
        return None;
    }
    let mut distinct = vertices.to_vec();
    distinct.sort_unstable();
    distinct.dedup();
    if distinct.len() != 4 {
        return None;
    }
    let min_x = vertices.iter().map(|&v| coords[v].0).min()?;
    let min_y = vertices.iter().map(|&v| coords[v].1).min()?;
    let i = (0..4).find(|&i| coords[vertices[i]] == (min_x, min_y))?;
    let at = |k: usize| vertices[(i + k) % 4];
    let (b, r, t, l) = (coords[at(0)], coords[at(1)], coords[at(2)], coords[at(3)]);
    let pattern = b.0 == l.0 && l.0 < r.0 && r.0 <= t.0 && b.1 == r.1 && r.1 < l.1 && l.1 <= t.1;
    pattern.then(|| QuadRoles {
        bottom: at(0),
        right: at(1),
        top: at(2),
        left: at(3),
        bottom_edge: edges[i],
        right_edge: edges[(i + 1) % 4],
        top_edge: edges[(i + 2) % 4],
        left_edge: edges[(i + 3) % 4],
    })
}
