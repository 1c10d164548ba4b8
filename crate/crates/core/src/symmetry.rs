//! Dihedral action on labeling schemes and canonical representatives.

use std::fmt;

use crate::scheme::{Scheme, SchemeError};

/// A dihedral symmetry of an `m`-gon acting on side positions.
///
/// Applied to a scheme `w` it yields `permute(w, rotation)` when not
/// reflected and `permute(flip(w), rotation)` when reflected.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Symmetry {
    pub rotation: usize,
    pub reflected: bool,
}

impl Symmetry {
    pub const IDENTITY: Symmetry = Symmetry {
        rotation: 0,
        reflected: false,
    };

    pub fn rotation(rotation: usize) -> Self {
        Symmetry {
            rotation,
            reflected: false,
        }
    }

    pub fn reflection(rotation: usize) -> Self {
        Symmetry {
            rotation,
            reflected: true,
        }
    }

    /// The symmetry equal to applying `self` and then `next` on an `m`-gon.
    pub fn then(self, next: Symmetry, m: usize) -> Symmetry {
        let (r1, r2) = (self.rotation % m, next.rotation % m);
        match (self.reflected, next.reflected) {
            (false, false) => Symmetry::rotation((r1 + r2) % m),
            (false, true) => Symmetry::reflection((m + r2 - r1) % m),
            (true, false) => Symmetry::reflection((r1 + r2) % m),
            (true, true) => Symmetry::rotation((m + r2 - r1) % m),
        }
    }

    pub fn inverse(self, m: usize) -> Symmetry {
        if self.reflected {
            self
        } else {
            Symmetry::rotation((m - self.rotation % m) % m)
        }
    }

    /// Where corner `corner` of an `m`-gon lands. Corner `i` sits between
    /// sides `i - 1` and `i`.
    pub fn map_corner(self, corner: usize, m: usize) -> usize {
        let c = corner % m;
        let r = self.rotation % m;
        if self.reflected {
            (2 * m - r - c) % m
        } else {
            (m + c - r) % m
        }
    }

    /// Source position of the side that ends up at `position`.
    pub fn source_position(self, position: usize, m: usize) -> usize {
        let r = self.rotation % m;
        if self.reflected {
            m - 1 - (position + r) % m
        } else {
            (position + r) % m
        }
    }
}

impl fmt::Display for Symmetry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.reflected {
            write!(f, "reflect+rot{}", self.rotation)
        } else {
            write!(f, "rot{}", self.rotation)
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GroupError {
    #[error("polygon size must be positive")]
    ZeroSize,
    #[error("symmetry {0} has rotation out of range for a {1}-gon")]
    OutOfRange(Symmetry, usize),
    #[error("symmetry set lacks the identity")]
    MissingIdentity,
    #[error("symmetry set is not closed: {0} then {1} is missing")]
    NotClosed(Symmetry, Symmetry),
}

/// A subgroup of the dihedral group of order `2m` acting on an `m`-gon.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymmetryGroup {
    polygon_size: usize,
    elements: Vec<Symmetry>,
}

impl SymmetryGroup {
    /// Validates identity, range and closure. Elements are stored sorted.
    pub fn new(polygon_size: usize, elements: Vec<Symmetry>) -> Result<Self, GroupError> {
        if polygon_size == 0 {
            return Err(GroupError::ZeroSize);
        }
        let mut elements = elements;
        elements.sort();
        elements.dedup();
        if let Some(&bad) = elements.iter().find(|g| g.rotation >= polygon_size) {
            return Err(GroupError::OutOfRange(bad, polygon_size));
        }
        if !elements.contains(&Symmetry::IDENTITY) {
            return Err(GroupError::MissingIdentity);
        }
        for &a in &elements {
            for &b in &elements {
                if elements.binary_search(&a.then(b, polygon_size)).is_err() {
                    return Err(GroupError::NotClosed(a, b));
                }
            }
        }
        Ok(SymmetryGroup {
            polygon_size,
            elements,
        })
    }

    /// All `2m` rotations and reflections.
    pub fn dihedral(polygon_size: usize) -> Self {
        let elements = [false, true]
            .into_iter()
            .flat_map(|reflected| {
                (0..polygon_size).map(move |rotation| Symmetry {
                    rotation,
                    reflected,
                })
            })
            .collect();
        SymmetryGroup::new(polygon_size, elements).expect("dihedral group is a group")
    }

    pub fn trivial(polygon_size: usize) -> Self {
        SymmetryGroup {
            polygon_size,
            elements: vec![Symmetry::IDENTITY],
        }
    }

    pub fn polygon_size(&self) -> usize {
        self.polygon_size
    }

    pub fn elements(&self) -> &[Symmetry] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, g: Symmetry) -> bool {
        self.elements.binary_search(&g).is_ok()
    }

    fn check_size(&self, scheme: &Scheme) -> Result<(), SchemeError> {
        if scheme.len() != self.polygon_size {
            return Err(SchemeError::SizeMismatch {
                scheme: scheme.len(),
                group: self.polygon_size,
            });
        }
        Ok(())
    }

    /// Canonical representative of the orbit of `scheme` under this group
    /// combined with relabeling: the smallest relabeled image, comparing
    /// sides left to right.
    pub fn canonical_form(&self, scheme: &Scheme) -> Result<Scheme, SchemeError> {
        self.check_size(scheme)?;
        Ok(self
            .elements
            .iter()
            .map(|&g| apply_unchecked(scheme, g).relabel())
            .min()
            .expect("group contains the identity"))
    }

    /// Every relabeled image of `scheme`, deduplicated and sorted.
    pub fn orbit(&self, scheme: &Scheme) -> Result<Vec<Scheme>, SchemeError> {
        self.check_size(scheme)?;
        let mut images: Vec<Scheme> = self
            .elements
            .iter()
            .map(|&g| apply_unchecked(scheme, g).relabel())
            .collect();
        images.sort();
        images.dedup();
        Ok(images)
    }
}

fn apply_unchecked(scheme: &Scheme, g: Symmetry) -> Scheme {
    if g == Symmetry::IDENTITY {
        return scheme.clone();
    }
    let m = scheme.len();
    let sides = scheme.sides();
    let image = (0..m)
        .map(|i| {
            let side = sides[g.source_position(i, m)];
            if g.reflected {
                side.inverse()
            } else {
                side
            }
        })
        .collect();
    Scheme::from_valid_sides(image)
}

/// Apply `g` to `scheme`. `g` must act on polygons of the scheme's length.
pub fn apply_symmetry(scheme: &Scheme, g: Symmetry, group: &SymmetryGroup) -> Result<Scheme, SchemeError> {
    group.check_size(scheme)?;
    if g.rotation >= scheme.len() {
        return Err(SchemeError::RotationOutOfRange {
            rotation: g.rotation,
            len: scheme.len(),
        });
    }
    Ok(apply_unchecked(scheme, g))
}

pub fn canonical_form(scheme: &Scheme, group: &SymmetryGroup) -> Result<Scheme, SchemeError> {
    group.canonical_form(scheme)
}

pub fn schemes_equivalent(a: &Scheme, b: &Scheme, group: &SymmetryGroup) -> Result<bool, SchemeError> {
    Ok(group.canonical_form(a)? == group.canonical_form(b)?)
}
