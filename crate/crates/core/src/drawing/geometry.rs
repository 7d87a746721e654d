//! Exact integer predicates. Coordinates are `i64`; products go through
//! `i128` so no input in range can overflow.

use std::cmp::Ordering;

pub type Point = (i64, i64);

/// Twice the signed area of triangle `abc`; positive for a left turn.
pub fn orient(a: Point, b: Point, c: Point) -> i128 {
    let (abx, aby) = ((b.0 - a.0) as i128, (b.1 - a.1) as i128);
    let (acx, acy) = ((c.0 - a.0) as i128, (c.1 - a.1) as i128);
    abx * acy - aby * acx
}

fn within_box(p: Point, a: Point, b: Point) -> bool {
    a.0.min(b.0) <= p.0 && p.0 <= a.0.max(b.0) && a.1.min(b.1) <= p.1 && p.1 <= a.1.max(b.1)
}

/// Whether `p` lies on the closed segment `ab`.
pub fn on_segment(p: Point, a: Point, b: Point) -> bool {
    orient(a, b, p) == 0 && within_box(p, a, b)
}

/// Whether closed segments `ab` and `cd` share at least one point.
pub fn segments_intersect(a: Point, b: Point, c: Point, d: Point) -> bool {
    let d1 = orient(c, d, a);
    let d2 = orient(c, d, b);
    let d3 = orient(a, b, c);
    let d4 = orient(a, b, d);
    if ((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) && ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0)) {
        return true;
    }
    (d1 == 0 && within_box(a, c, d))
        || (d2 == 0 && within_box(b, c, d))
        || (d3 == 0 && within_box(c, a, b))
        || (d4 == 0 && within_box(d, a, b))
}

/// Two segments from a shared endpoint `p` overlap beyond `p` when they
/// point the same way.
pub fn overlap_from_shared(p: Point, q1: Point, q2: Point) -> bool {
    if orient(p, q1, q2) != 0 {
        return false;
    }
    let dot =
        (q1.0 - p.0) as i128 * (q2.0 - p.0) as i128 + (q1.1 - p.1) as i128 * (q2.1 - p.1) as i128;
    dot > 0
}

/// Counterclockwise angular order of nonzero direction vectors starting at
/// the positive x axis.
pub fn angle_cmp(u: Point, v: Point) -> Ordering {
    let half = |p: Point| -> u8 {
        if p.1 > 0 || (p.1 == 0 && p.0 > 0) {
            0
        } else {
            1
        }
    };
    half(u)
        .cmp(&half(v))
        .then_with(|| 0.cmp(&orient((0, 0), u, v)))
}

/// Twice the signed area of a closed polygon.
pub fn signed_area2(points: &[Point]) -> i128 {
    let n = points.len();
    (0..n)
        .map(|i| {
            let (a, b) = (points[i], points[(i + 1) % n]);
            a.0 as i128 * b.1 as i128 - b.0 as i128 * a.1 as i128
        })
        .sum()
}

/// Componentwise `a <= b`.
pub fn dominates(a: Point, b: Point) -> bool {
    a.0 <= b.0 && a.1 <= b.1
}
