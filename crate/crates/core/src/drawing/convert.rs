use super::faces::extract_faces;
use super::zones::{exterior_paths, zones_from_faces};
use super::GridDrawing;
use crate::arrangement::QuadrantArrangement;
use crate::error::{Error, Result};
use crate::family::LearningGraph;

/// One quadrant per zone: its x-rank is where the zone meets the right
/// exterior path and its y-rank where it meets the left one. Each zone must
/// carry a single element label, and labels must cover the universe once.
pub fn drawing_to_arrangement(
    drawing: &GridDrawing,
    graph: &LearningGraph,
) -> Result<QuadrantArrangement> {
    let faces = extract_faces(drawing, graph)?;
    let paths = exterior_paths(drawing, graph)?;
    let zones = zones_from_faces(graph, &faces, &paths)?;
    let n = graph.universe().len();
    if zones.len() != n {
        return Err(Error::MalformedZone(format!(
            "{} zones for {} elements",
            zones.len(),
            n
        )));
    }
    let mut corners = vec![None; n];
    for zone in &zones {
        let label = zone.label.ok_or_else(|| {
            Error::MalformedZone(format!("zone of edge e{} mixes labels", zone.edges[0]))
        })?;
        let (Some(right), Some(left)) = (zone.right_exterior, zone.left_exterior) else {
            return Err(Error::MalformedZone(format!(
                "zone of element {} misses an exterior path",
                graph.universe().name(label)
            )));
        };
        let x = paths
            .right
            .iter()
            .position(|&e| e == right)
            .expect("exterior edge lies on its path");
        let y = paths
            .left
            .iter()
            .position(|&e| e == left)
            .expect("exterior edge lies on its path");
        if corners[label].replace((x as i64, y as i64)).is_some() {
            return Err(Error::MalformedZone(format!(
                "element {} labels two zones",
                graph.universe().name(label)
            )));
        }
    }
    let corners: Vec<(i64, i64)> = corners
        .into_iter()
        .map(|c| c.expect("n zones with distinct labels"))
        .collect();
    let raw = QuadrantArrangement::from_corners(graph.universe().clone(), corners)?;
    let (xr, yr) = (raw.x_ranks(), raw.y_ranks());
    QuadrantArrangement::from_corners(
        graph.universe().clone(),
        xr.into_iter()
            .zip(yr)
            .map(|(x, y)| (x as i64, y as i64))
            .collect(),
    )
}
