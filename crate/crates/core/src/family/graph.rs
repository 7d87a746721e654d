use super::{validate_family, SetFamily, StateSet, Universe};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Edge {
    pub from: usize,
    pub to: usize,
    /// Element added along the edge.
    pub label: usize,
}

/// DAG with one vertex per state and an edge `S -> S+x` for every pair of
/// states differing by one added element. Vertices follow canonical order,
/// edges are sorted by `(from, label)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LearningGraph {
    universe: Universe,
    vertices: Vec<StateSet>,
    edges: Vec<Edge>,
    source: usize,
    sink: usize,
}

impl LearningGraph {
    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn vertices(&self) -> &[StateSet] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn source(&self) -> usize {
        self.source
    }

    pub fn sink(&self) -> usize {
        self.sink
    }

    pub fn vertex_of(&self, state: StateSet) -> Option<usize> {
        self.vertices
            .binary_search_by_key(&state.canonical_key(), |s| s.canonical_key())
            .ok()
    }

    /// Undirected adjacency as `(neighbor, edge index)` lists.
    pub fn adjacency(&self) -> Vec<Vec<(usize, usize)>> {
        let mut adj = vec![Vec::new(); self.vertices.len()];
        for (i, e) in self.edges.iter().enumerate() {
            adj[e.from].push((e.to, i));
            adj[e.to].push((e.from, i));
        }
        adj
    }

    /// Recovers the family the graph was built from.
    pub fn family(&self) -> SetFamily {
        SetFamily::from_states(self.universe.clone(), self.vertices.iter().copied())
            .expect("graph vertices lie inside the universe")
    }
}

pub fn build_graph(family: &SetFamily) -> Result<LearningGraph> {
    let report = validate_family(family);
    if !report.is_ok() {
        return Err(Error::InvalidFamily(report));
    }
    let full = family.universe().full();
    let vertices = family.states().to_vec();
    let mut edges = Vec::new();
    for (from, &s) in vertices.iter().enumerate() {
        for x in full.difference(s).elements() {
            if let Some(to) = family.index_of(s.with(x)) {
                edges.push(Edge { from, to, label: x });
            }
        }
    }
    let sink = family
        .index_of(family.union_all())
        .expect("a valid family contains the union of its states");
    Ok(LearningGraph {
        universe: family.universe().clone(),
        vertices,
        edges,
        source: 0,
        sink,
    })
}
