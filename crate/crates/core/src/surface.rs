//! Topological invariants of the surface a scheme defines, and surface names.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::scheme::{Scheme, Side};
use crate::vertices::{corner_of, glued_end, vertex_labeling, End};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SurfaceError {
    #[error("invariants (euler {euler}, orientable {orientable}, boundary {boundary}) fit no compact surface")]
    Inconsistent {
        euler: i64,
        orientable: bool,
        boundary: usize,
    },
    #[error("genus {genus} does not match euler {euler}")]
    GenusMismatch { euler: i64, genus: usize },
    #[error("surfaces with boundary have no standard closed scheme")]
    NotClosed,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ComplexError {
    #[error("face count must be at least 1")]
    NoFaces,
    #[error("{faces} faces need {expected} chords, got {actual}")]
    ChordCount {
        faces: usize,
        expected: usize,
        actual: usize,
    },
    #[error("{faces} quadrilaterals need a {expected}-gon, got {actual} sides")]
    PolygonSize {
        faces: usize,
        expected: usize,
        actual: usize,
    },
    #[error("chord ({0}, {1}) must join two distinct corners of the polygon")]
    BadChord(usize, usize),
    #[error("chord ({0}, {1}) appears twice")]
    DuplicateChord(usize, usize),
}

/// An internal edge between two polygon corners, stored with `low < high`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Chord {
    pub low: usize,
    pub high: usize,
}

impl Chord {
    pub fn new(a: usize, b: usize) -> Self {
        Chord {
            low: a.min(b),
            high: a.max(b),
        }
    }
}

impl fmt::Display for Chord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.low, self.high)
    }
}

/// A glued polygon: its boundary word plus the chords along which the
/// quadrilateral faces were joined.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GluedComplex {
    scheme: Scheme,
    chords: Vec<Chord>,
    face_count: usize,
}

impl GluedComplex {
    /// A single face with no chords. Any polygon size is accepted.
    pub fn chordless(scheme: Scheme) -> Self {
        GluedComplex {
            scheme,
            chords: Vec::new(),
            face_count: 1,
        }
    }

    /// `face_count` quadrilaterals joined along `chords` into a
    /// `(2 * face_count + 2)`-gon whose boundary word is `scheme`.
    pub fn new(scheme: Scheme, chords: Vec<Chord>, face_count: usize) -> Result<Self, ComplexError> {
        if face_count == 0 {
            return Err(ComplexError::NoFaces);
        }
        if chords.len() != face_count - 1 {
            return Err(ComplexError::ChordCount {
                faces: face_count,
                expected: face_count - 1,
                actual: chords.len(),
            });
        }
        if face_count > 1 && scheme.len() != 2 * face_count + 2 {
            return Err(ComplexError::PolygonSize {
                faces: face_count,
                expected: 2 * face_count + 2,
                actual: scheme.len(),
            });
        }
        let mut sorted = chords.clone();
        sorted.sort();
        for (i, c) in sorted.iter().enumerate() {
            if c.low == c.high || c.high >= scheme.len() {
                return Err(ComplexError::BadChord(c.low, c.high));
            }
            if i > 0 && sorted[i - 1] == *c {
                return Err(ComplexError::DuplicateChord(c.low, c.high));
            }
        }
        Ok(GluedComplex {
            scheme,
            chords,
            face_count,
        })
    }

    pub fn scheme(&self) -> &Scheme {
        &self.scheme
    }

    pub fn chords(&self) -> &[Chord] {
        &self.chords
    }

    pub fn face_count(&self) -> usize {
        self.face_count
    }

    /// Edge count of the embedded graph: one per letter plus one per chord.
    pub fn edge_count(&self) -> usize {
        self.scheme.letter_count() + self.chords.len()
    }

    /// Whether the embedded graph (vertex classes joined by letters and
    /// chords) is connected.
    pub fn is_connected(&self) -> bool {
        let labeling = vertex_labeling(&self.scheme);
        let m = self.scheme.len();
        let mut adjacency = vec![Vec::new(); labeling.class_count];
        let mut link = |a: usize, b: usize| {
            let (ca, cb) = (labeling.classes[a], labeling.classes[b]);
            adjacency[ca].push(cb);
            adjacency[cb].push(ca);
        };
        for side in 0..m {
            link(side, (side + 1) % m);
        }
        for chord in &self.chords {
            link(chord.low, chord.high);
        }
        let mut seen = vec![false; labeling.class_count];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for &u in &adjacency[v] {
                if !seen[u] {
                    seen[u] = true;
                    stack.push(u);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }
}

/// Euler characteristic, orientability, boundary count and (demi)genus.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "SurfaceFields")]
pub struct SurfaceType {
    euler: i64,
    orientable: bool,
    boundary: usize,
    genus: usize,
}

#[derive(Deserialize)]
struct SurfaceFields {
    euler: i64,
    orientable: bool,
    boundary: usize,
    genus: usize,
}

impl TryFrom<SurfaceFields> for SurfaceType {
    type Error = SurfaceError;

    fn try_from(f: SurfaceFields) -> Result<Self, Self::Error> {
        let t = SurfaceType::new(f.euler, f.orientable, f.boundary)?;
        if t.genus != f.genus {
            return Err(SurfaceError::GenusMismatch {
                euler: f.euler,
                genus: f.genus,
            });
        }
        Ok(t)
    }
}

impl SurfaceType {
    /// Derives the genus from `χ = 2 - 2G - B` (orientable) or
    /// `χ = 2 - G - B` with `G ≥ 1` (non-orientable).
    pub fn new(euler: i64, orientable: bool, boundary: usize) -> Result<Self, SurfaceError> {
        let inconsistent = SurfaceError::Inconsistent {
            euler,
            orientable,
            boundary,
        };
        let deficit = 2 - euler - boundary as i64;
        let genus = if orientable {
            if deficit < 0 || deficit % 2 != 0 {
                return Err(inconsistent);
            }
            deficit / 2
        } else {
            if deficit < 1 {
                return Err(inconsistent);
            }
            deficit
        };
        Ok(SurfaceType {
            euler,
            orientable,
            boundary,
            genus: genus as usize,
        })
    }

    /// Closed orientable surface with `genus` handles.
    pub fn orientable_closed(genus: usize) -> Self {
        SurfaceType::new(2 - 2 * genus as i64, true, 0).expect("valid genus")
    }

    /// Closed non-orientable surface with `crosscaps ≥ 1`.
    pub fn nonorientable_closed(crosscaps: usize) -> Result<Self, SurfaceError> {
        SurfaceType::new(2 - crosscaps as i64, false, 0)
    }

    pub fn euler(&self) -> i64 {
        self.euler
    }

    pub fn orientable(&self) -> bool {
        self.orientable
    }

    pub fn boundary(&self) -> usize {
        self.boundary
    }

    /// Genus if orientable, demigenus otherwise.
    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn is_closed(&self) -> bool {
        self.boundary == 0
    }

    pub fn name(&self) -> String {
        let (g, b) = (self.genus, self.boundary);
        let base = match (self.orientable, g, b) {
            (true, 0, 1) => return "disc".to_string(),
            (true, 0, 2) => return "annulus".to_string(),
            (false, 1, 1) => return "Möbius band".to_string(),
            (true, 0, _) => "sphere".to_string(),
            (true, 1, _) => "torus".to_string(),
            (true, _, _) => format!("connected sum of {g} tori"),
            (false, 1, _) => "projective plane".to_string(),
            (false, _, _) => format!("connected sum of {g} projective planes"),
        };
        match b {
            0 => base,
            1 => format!("{base} with 1 boundary component"),
            _ => format!("{base} with {b} boundary components"),
        }
    }

    /// Sort key: euler descending, orientable first, then boundary ascending.
    pub fn report_order(&self) -> (i64, bool, usize) {
        (-self.euler, !self.orientable, self.boundary)
    }
}

impl fmt::Display for SurfaceType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

/// Name of the surface with the given invariants.
pub fn surface_name(euler: i64, orientable: bool, boundary: usize) -> Result<String, SurfaceError> {
    Ok(SurfaceType::new(euler, orientable, boundary)?.name())
}

pub fn euler_characteristic(complex: &GluedComplex) -> i64 {
    let v = vertex_labeling(complex.scheme()).class_count as i64;
    v - complex.edge_count() as i64 + complex.face_count() as i64
}

/// False iff some letter occurs twice with the same exponent.
pub fn is_orientable(scheme: &Scheme) -> bool {
    let sides = scheme.sides();
    scheme
        .partners()
        .iter()
        .enumerate()
        .all(|(i, p)| p.is_none_or(|j| sides[i].exponent != sides[j].exponent))
}

/// Number of boundary circles formed by the free sides.
///
/// From the head of each free side, walk around its vertex: step across
/// the wedge at the current corner onto the adjacent side, and while that
/// side is glued, jump to the identified end of its partner and cross the
/// next wedge. The first free side reached follows the starting one on the
/// same boundary circle. Circles are the connected components of this
/// successor relation.
pub fn boundary_components(scheme: &Scheme) -> usize {
    let m = scheme.len();
    let partners = scheme.partners();
    let free: Vec<usize> = (0..m).filter(|&i| partners[i].is_none()).collect();
    if free.is_empty() {
        return 0;
    }
    let mut parent: Vec<usize> = (0..m).collect();
    fn root(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for &start in &free {
        // leave the head of `start` through the wedge at corner start+1
        let (mut side, mut end) = ((start + 1) % m, End::Tail);
        let mut steps = 0;
        while let Some((other, other_end)) = glued_end(scheme, &partners, side, end) {
            let corner = corner_of(other, other_end, m);
            (side, end) = match other_end {
                End::Tail => ((corner + m - 1) % m, End::Head),
                End::Head => (corner, End::Tail),
            };
            steps += 1;
            debug_assert!(steps <= 2 * m, "corner walk did not terminate");
        }
        let (a, b) = (root(&mut parent, start), root(&mut parent, side));
        parent[a] = b;
    }
    let mut roots: Vec<usize> = free.iter().map(|&f| root(&mut parent, f)).collect();
    roots.sort_unstable();
    roots.dedup();
    roots.len()
}

pub fn classify(complex: &GluedComplex) -> Result<SurfaceType, SurfaceError> {
    let euler = euler_characteristic(complex);
    let orientable = is_orientable(complex.scheme());
    let boundary = boundary_components(complex.scheme());
    SurfaceType::new(euler, orientable, boundary)
}

pub fn classify_scheme(scheme: &Scheme) -> Result<SurfaceType, SurfaceError> {
    classify(&GluedComplex::chordless(scheme.clone()))
}

/// Standard word of a closed surface: `a a^-1` for the sphere, products of
/// commutators for orientable surfaces, squares for non-orientable ones.
pub fn standard_scheme(surface: &SurfaceType) -> Result<Scheme, SurfaceError> {
    if !surface.is_closed() {
        return Err(SurfaceError::NotClosed);
    }
    let g = surface.genus() as u32;
    let sides = if surface.orientable() {
        if g == 0 {
            vec![Side::plus(0), Side::minus(0)]
        } else {
            (0..g)
                .flat_map(|k| {
                    let (a, b) = (2 * k, 2 * k + 1);
                    [Side::plus(a), Side::plus(b), Side::minus(a), Side::minus(b)]
                })
                .collect()
        }
    } else {
        (0..g).flat_map(|k| [Side::plus(k), Side::plus(k)]).collect()
    };
    Ok(Scheme::new(sides).expect("standard words are valid schemes"))
}
