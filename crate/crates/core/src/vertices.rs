//! Vertex classes of the quotient of a polygon under its edge gluings.
//!
//! Corner `i` is the polygon vertex between side `i - 1` and side `i`
//! (cyclically). Side `i` runs from its tail corner `i` to its head corner
//! `i + 1`.

use crate::scheme::Scheme;

/// One end of a side.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum End {
    Tail,
    Head,
}

impl End {
    pub fn opposite(self) -> End {
        match self {
            End::Tail => End::Head,
            End::Head => End::Tail,
        }
    }
}

/// Corner index of one end of side `side` on an `m`-gon.
pub fn corner_of(side: usize, end: End, m: usize) -> usize {
    match end {
        End::Tail => side,
        End::Head => (side + 1) % m,
    }
}

/// The end of the partner side that `end` of `side` is identified with.
///
/// Opposite exponents identify tail with head; equal exponents identify tail
/// with tail and head with head. Returns `None` for a free side.
pub fn glued_end(scheme: &Scheme, partners: &[Option<usize>], side: usize, end: End) -> Option<(usize, End)> {
    let other = partners[side]?;
    let sides = scheme.sides();
    if sides[side].exponent == sides[other].exponent {
        Some((other, end))
    } else {
        Some((other, end.opposite()))
    }
}

/// Assignment of every corner to a vertex class of the quotient.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexLabeling {
    /// Class of each corner, numbered `0..class_count` in order of first corner.
    pub classes: Vec<usize>,
    pub class_count: usize,
}

impl VertexLabeling {
    /// Class letters per corner: `A`, `B`, ..., `Z`, `A1`, ...
    pub fn letters(&self) -> Vec<String> {
        self.classes.iter().map(|&c| class_letter(c)).collect()
    }
}

pub fn class_letter(class: usize) -> String {
    let c = (b'A' + (class % 26) as u8) as char;
    match class / 26 {
        0 => c.to_string(),
        round => format!("{c}{round}"),
    }
}

/// Vertex classes of `scheme`.
///
/// Each unlabeled corner seeds a closure: both sides adjacent to a corner
/// are followed through their gluing to the corresponding corner of the
/// partner side, until no new corner turns up. Uses an explicit work list.
pub fn vertex_labeling(scheme: &Scheme) -> VertexLabeling {
    let m = scheme.len();
    let partners = scheme.partners();
    let mut classes: Vec<Option<usize>> = vec![None; m];
    let mut class_count = 0;
    let mut pending = Vec::new();
    for start in 0..m {
        if classes[start].is_some() {
            continue;
        }
        let class = class_count;
        class_count += 1;
        classes[start] = Some(class);
        pending.push(start);
        while let Some(corner) = pending.pop() {
            // corner is the head of side corner-1 and the tail of side corner
            let adjacent = [((corner + m - 1) % m, End::Head), (corner, End::Tail)];
            for (side, end) in adjacent {
                if let Some((other, other_end)) = glued_end(scheme, &partners, side, end) {
                    let next = corner_of(other, other_end, m);
                    if classes[next].is_none() {
                        classes[next] = Some(class);
                        pending.push(next);
                    }
                }
            }
        }
    }
    VertexLabeling {
        classes: classes.into_iter().map(|c| c.expect("every corner labeled")).collect(),
        class_count,
    }
}
