//! Exhaustive enumeration of edge gluings of polygons assembled from
//! quadrilaterals.
//!
//! `n` quadrilaterals joined along `n - 1` chords form a `(2n + 2)`-gon.
//! Chord sets are generated up to the full dihedral group; gluings of one
//! configuration are then identified only by the stabilizer of its chords,
//! together with relabeling.

use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;
use thiserror::Error;

use crate::scheme::{Exponent, Scheme, Side};
use crate::surface::{classify, classify_scheme, Chord, ComplexError, GluedComplex, SurfaceError, SurfaceType};
use crate::symmetry::{Symmetry, SymmetryGroup};

/// Largest supported quadrilateral count.
pub const MAX_QUADS: usize = 6;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumerationError {
    #[error("quadrilateral count {0} out of range 1..={MAX_QUADS}")]
    QuadCountOutOfRange(usize),
    #[error("chords do not split the polygon into quadrilaterals: {0}")]
    NotQuadrangulation(String),
    #[error(transparent)]
    Complex(#[from] ComplexError),
    #[error(transparent)]
    Surface(#[from] SurfaceError),
}

fn check_quads(n: usize) -> Result<(), EnumerationError> {
    if (1..=MAX_QUADS).contains(&n) {
        Ok(())
    } else {
        Err(EnumerationError::QuadCountOutOfRange(n))
    }
}

fn crosses(a: Chord, b: Chord) -> bool {
    let inside = |x: usize| a.low < x && x < a.high;
    let shares = a.low == b.low || a.low == b.high || a.high == b.low || a.high == b.high;
    !shares && inside(b.low) != inside(b.high)
}

/// Faces of a convex `m`-gon cut by non-crossing chords, each given as its
/// corner list in boundary order.
pub fn faces(m: usize, chords: &[Chord]) -> Result<Vec<Vec<usize>>, EnumerationError> {
    let bad = |why: String| EnumerationError::NotQuadrangulation(why);
    for (i, &a) in chords.iter().enumerate() {
        if a.low == a.high || a.high >= m {
            return Err(bad(format!("chord {a} outside the {m}-gon")));
        }
        if a.high - a.low == 1 || (a.low == 0 && a.high == m - 1) {
            return Err(bad(format!("chord {a} is a polygon side")));
        }
        for &b in &chords[i + 1..] {
            if a == b {
                return Err(bad(format!("chord {a} repeated")));
            }
            if crosses(a, b) {
                return Err(bad(format!("chords {a} and {b} cross")));
            }
        }
    }
    let mut out = Vec::new();
    let mut stack = vec![((0..m).collect::<Vec<_>>(), chords.to_vec())];
    while let Some((corners, mut inner)) = stack.pop() {
        let Some(cut) = inner.pop() else {
            out.push(corners);
            continue;
        };
        // split the face along `cut` and hand every other chord to the side containing it
        let p = corners.iter().position(|&c| c == cut.low).expect("chord inside face");
        let q = corners.iter().position(|&c| c == cut.high).expect("chord inside face");
        let (lo, hi) = (p.min(q), p.max(q));
        let first: Vec<usize> = corners[lo..=hi].to_vec();
        let second: Vec<usize> = corners[hi..].iter().chain(&corners[..=lo]).copied().collect();
        let (mut left, mut right) = (Vec::new(), Vec::new());
        for c in inner.drain(..) {
            if first.contains(&c.low) && first.contains(&c.high) {
                left.push(c);
            } else {
                right.push(c);
            }
        }
        stack.push((second, right));
        stack.push((first, left));
    }
    out.sort();
    Ok(out)
}

fn canonical_chords(chords: &[Chord], m: usize) -> Vec<Chord> {
    SymmetryGroup::dihedral(m)
        .elements()
        .iter()
        .map(|&g| image_of(chords, g, m))
        .min()
        .expect("dihedral group is non-empty")
}

fn image_of(chords: &[Chord], g: Symmetry, m: usize) -> Vec<Chord> {
    let mut image: Vec<Chord> = chords
        .iter()
        .map(|c| Chord::new(g.map_corner(c.low, m), g.map_corner(c.high, m)))
        .collect();
    image.sort();
    image
}

/// Dihedral elements of the `m`-gon that map `chords` onto itself.
pub fn stabilizer(chords: &[Chord], m: usize) -> SymmetryGroup {
    let mut own = chords.to_vec();
    own.sort();
    let elements = SymmetryGroup::dihedral(m)
        .elements()
        .iter()
        .copied()
        .filter(|&g| image_of(&own, g, m) == own)
        .collect();
    SymmetryGroup::new(m, elements).expect("a stabilizer is a subgroup")
}

/// A way of assembling `quad_count` quadrilaterals into a polygon.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Configuration {
    quad_count: usize,
    chords: Vec<Chord>,
    symmetries: SymmetryGroup,
}

impl Configuration {
    /// Checks that `chords` cut the `(2n + 2)`-gon into `n` quadrilaterals
    /// and computes their stabilizer.
    pub fn new(quad_count: usize, chords: Vec<Chord>) -> Result<Self, EnumerationError> {
        check_quads(quad_count)?;
        let m = 2 * quad_count + 2;
        let mut chords = chords;
        chords.sort();
        if chords.len() != quad_count - 1 {
            return Err(EnumerationError::NotQuadrangulation(format!(
                "{} chords for {quad_count} quadrilaterals",
                chords.len()
            )));
        }
        let faces = faces(m, &chords)?;
        if let Some(face) = faces.iter().find(|f| f.len() != 4) {
            return Err(EnumerationError::NotQuadrangulation(format!(
                "face {face:?} has {} sides",
                face.len()
            )));
        }
        let symmetries = stabilizer(&chords, m);
        Ok(Configuration {
            quad_count,
            chords,
            symmetries,
        })
    }

    pub fn quad_count(&self) -> usize {
        self.quad_count
    }

    pub fn polygon_size(&self) -> usize {
        2 * self.quad_count + 2
    }

    pub fn chords(&self) -> &[Chord] {
        &self.chords
    }

    pub fn symmetries(&self) -> &SymmetryGroup {
        &self.symmetries
    }

    pub fn faces(&self) -> Vec<Vec<usize>> {
        faces(self.polygon_size(), &self.chords).expect("validated at construction")
    }

    /// The complex with this configuration's chords and boundary word `scheme`.
    pub fn complex(&self, scheme: Scheme) -> Result<GluedComplex, ComplexError> {
        GluedComplex::new(scheme, self.chords.clone(), self.quad_count)
    }
}

/// Every quadrangulation of the polygon with the given corners, as chord lists.
fn quadrangulations(corners: &[usize]) -> Vec<Vec<Chord>> {
    let len = corners.len();
    if len == 2 || len == 4 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    // the face on side (corners[0], corners[1]) is (0, 1, i, j) in local indices
    for i in (2..len).step_by(2) {
        for j in (i + 1..len).step_by(2) {
            let mut own = Vec::new();
            if i > 2 {
                own.push(Chord::new(corners[1], corners[i]));
            }
            if j - i > 1 {
                own.push(Chord::new(corners[i], corners[j]));
            }
            if j < len - 1 {
                own.push(Chord::new(corners[j], corners[0]));
            }
            let right: Vec<usize> = corners[j..].iter().chain(&corners[..1]).copied().collect();
            let parts = [
                quadrangulations(&corners[1..=i]),
                quadrangulations(&corners[i..=j]),
                quadrangulations(&right),
            ];
            for a in &parts[0] {
                for b in &parts[1] {
                    for c in &parts[2] {
                        let mut chords = own.clone();
                        chords.extend(a.iter().chain(b).chain(c));
                        chords.sort();
                        out.push(chords);
                    }
                }
            }
        }
    }
    out
}

/// All ways of assembling `n` quadrilaterals into a `(2n + 2)`-gon, up to
/// rotation and reflection, in increasing order of their canonical chord lists.
pub fn generate_configurations(n: usize) -> Result<Vec<Configuration>, EnumerationError> {
    check_quads(n)?;
    let m = 2 * n + 2;
    let corners: Vec<usize> = (0..m).collect();
    let distinct: BTreeSet<Vec<Chord>> = quadrangulations(&corners)
        .iter()
        .map(|chords| canonical_chords(chords, m))
        .collect();
    distinct.into_iter().map(|chords| Configuration::new(n, chords)).collect()
}

/// One glued pair of boundary positions. `orientable` selects the
/// orientation-reversing relation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GluedPair {
    pub first: usize,
    pub second: usize,
    pub orientable: bool,
}

/// A raw gluing before deduplication.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RawGluing {
    pub pairs: Vec<GluedPair>,
    pub scheme: Scheme,
}

#[derive(Clone)]
struct Partial {
    next: usize,
    pairs: Vec<GluedPair>,
    used: Vec<bool>,
    scheme: Scheme,
}

impl Partial {
    fn start(m: usize) -> Self {
        Partial {
            next: 0,
            pairs: Vec::new(),
            used: vec![false; m],
            scheme: Scheme::free(m).expect("m >= 1"),
        }
    }

    /// Choices for the lowest undecided position: leave it free, or pair it
    /// with a later free position under either relation.
    fn children(&self) -> Vec<Partial> {
        let m = self.used.len();
        let mut pos = self.next;
        while pos < m && self.used[pos] {
            pos += 1;
        }
        if pos >= m {
            return Vec::new();
        }
        let mut out = Vec::new();
        let mut skip = self.clone();
        skip.next = pos + 1;
        skip.used[pos] = true;
        out.push(skip);
        for other in pos + 1..m {
            if self.used[other] {
                continue;
            }
            for orientable in [true, false] {
                let mut child = self.clone();
                child.next = pos + 1;
                child.used[pos] = true;
                child.used[other] = true;
                child.pairs.push(GluedPair {
                    first: pos,
                    second: other,
                    orientable,
                });
                child.scheme = self
                    .scheme
                    .glue(pos, other, orientable)
                    .expect("both positions still free");
                out.push(child);
            }
        }
        out
    }

    fn is_done(&self) -> bool {
        (self.next..self.used.len()).all(|p| self.used[p])
    }

    fn visit(&self, f: &mut impl FnMut(&[GluedPair], &Scheme)) {
        if self.is_done() {
            if !self.pairs.is_empty() {
                f(&self.pairs, &self.scheme);
            }
            return;
        }
        for child in self.children() {
            child.visit(f);
        }
    }
}

/// Visit every gluing of an `m`-gon with at least one glued pair, built by
/// repeated [`Scheme::glue`] from the all-free word.
pub fn for_each_raw_gluing(m: usize, mut f: impl FnMut(&[GluedPair], &Scheme)) {
    Partial::start(m).visit(&mut f);
}

pub fn raw_gluings(m: usize) -> Vec<RawGluing> {
    let mut out = Vec::new();
    for_each_raw_gluing(m, |pairs, scheme| {
        out.push(RawGluing {
            pairs: pairs.to_vec(),
            scheme: scheme.clone(),
        })
    });
    out
}

/// Disjoint slices of the raw stream for parallel processing.
fn work_slices(m: usize, depth: usize) -> Vec<Partial> {
    let mut frontier = vec![Partial::start(m)];
    for _ in 0..depth {
        let mut next = Vec::new();
        for p in frontier {
            if p.is_done() {
                next.push(p);
            } else {
                next.extend(p.children());
            }
        }
        frontier = next;
    }
    frontier
}

/// Bits per side in a packed word: five for the letter, one for the exponent.
const PACKED_BITS: usize = 6;
const PACKED_MAX_LEN: usize = 128 / PACKED_BITS;

/// Decides whether a raw gluing represents its orbit: its relabeling must
/// be the smallest relabeled image under the group.
///
/// Raw gluings are distinct after relabeling and the group permutes them,
/// so exactly one member of every orbit passes.
enum Canonicity<'g> {
    /// Images compared as fixed-width integers whose numeric order equals
    /// the side-by-side order of the relabeled words.
    Packed {
        identity: Vec<usize>,
        sources: Vec<(Vec<usize>, bool)>,
    },
    Generic(&'g SymmetryGroup),
}

impl<'g> Canonicity<'g> {
    fn new(group: &'g SymmetryGroup) -> Self {
        let m = group.polygon_size();
        if m > PACKED_MAX_LEN {
            return Canonicity::Generic(group);
        }
        let sources = group
            .elements()
            .iter()
            .filter(|&&g| g != Symmetry::IDENTITY)
            .map(|&g| ((0..m).map(|i| g.source_position(i, m)).collect(), g.reflected))
            .collect();
        Canonicity::Packed {
            identity: (0..m).collect(),
            sources,
        }
    }

    fn packed(sides: &[Side], source: &[usize], reflected: bool) -> u128 {
        // per source letter: assigned letter and the exponent of its first occurrence
        let mut assigned = [(u8::MAX, Exponent::Plus); 32];
        let mut next = 0u8;
        let mut key = 0u128;
        for &p in source {
            let side = if reflected { sides[p].inverse() } else { sides[p] };
            let slot = &mut assigned[side.letter.index()];
            let code = if slot.0 == u8::MAX {
                *slot = (next, side.exponent);
                next += 1;
                (slot.0 as u128) << 1
            } else {
                ((slot.0 as u128) << 1) | (side.exponent != slot.1) as u128
            };
            key = (key << PACKED_BITS) | code;
        }
        key
    }

    fn is_canonical(&self, scheme: &Scheme) -> bool {
        match self {
            Canonicity::Packed { identity, sources } => {
                let sides = scheme.sides();
                let own = Self::packed(sides, identity, false);
                sources
                    .iter()
                    .all(|(source, reflected)| Self::packed(sides, source, *reflected) >= own)
            }
            Canonicity::Generic(group) => group.canonical_form(scheme).expect("sizes agree") == scheme.relabel(),
        }
    }
}

/// Visit the canonical form of every orbit of raw gluings of an `m`-gon
/// under `group` once, in raw stream order.
pub fn for_each_canonical_form(group: &SymmetryGroup, mut f: impl FnMut(Scheme)) {
    let check = Canonicity::new(group);
    for_each_raw_gluing(group.polygon_size(), |_, scheme| {
        if check.is_canonical(scheme) {
            f(scheme.relabel());
        }
    });
}

/// Canonical forms of every raw gluing of an `m`-gon under `group`.
pub fn canonical_forms(group: &SymmetryGroup) -> BTreeSet<Scheme> {
    let mut out = BTreeSet::new();
    for_each_canonical_form(group, |s| {
        out.insert(s);
    });
    out
}

/// Which dihedral elements identify gluings of one configuration.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Equivalence {
    /// The stabilizer of the chord set.
    #[default]
    Stabilizer,
    /// Every rotation and reflection, ignoring the chords.
    FullDihedral,
}

impl Equivalence {
    pub fn group(self, configuration: &Configuration) -> SymmetryGroup {
        match self {
            Equivalence::Stabilizer => configuration.symmetries().clone(),
            Equivalence::FullDihedral => SymmetryGroup::dihedral(configuration.polygon_size()),
        }
    }
}

/// A distinct gluing of a configuration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GluingClass<'a> {
    pub representative: Scheme,
    pub configuration: &'a Configuration,
    pub surface: SurfaceType,
}

pub fn enumerate_gluings(configuration: &Configuration) -> Result<Vec<GluingClass<'_>>, EnumerationError> {
    enumerate_gluings_under(configuration, Equivalence::Stabilizer)
}

/// Visit every distinct gluing of `configuration` with its surface, in raw
/// stream order.
pub fn for_each_gluing_class(
    configuration: &Configuration,
    equivalence: Equivalence,
    mut f: impl FnMut(Scheme, SurfaceType),
) -> Result<(), EnumerationError> {
    let group = equivalence.group(configuration);
    let mut failure = None;
    for_each_canonical_form(&group, |representative| {
        if failure.is_some() {
            return;
        }
        let surface = configuration
            .complex(representative.clone())
            .map_err(EnumerationError::from)
            .and_then(|complex| Ok(classify(&complex)?));
        match surface {
            Ok(surface) => f(representative, surface),
            Err(e) => failure = Some(e),
        }
    });
    failure.map_or(Ok(()), Err)
}

/// Distinct gluings in increasing order of representative.
pub fn enumerate_gluings_under(
    configuration: &Configuration,
    equivalence: Equivalence,
) -> Result<Vec<GluingClass<'_>>, EnumerationError> {
    let mut out = Vec::new();
    for_each_gluing_class(configuration, equivalence, |representative, surface| {
        out.push(GluingClass {
            representative,
            configuration,
            surface,
        })
    })?;
    out.sort_by(|a, b| a.representative.cmp(&b.representative));
    Ok(out)
}

pub fn count_distinct(configuration: &Configuration) -> usize {
    let mut count = 0;
    for_each_canonical_form(configuration.symmetries(), |_| count += 1);
    count
}

/// A class representative together with the index of its configuration.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Representative {
    pub configuration: usize,
    pub scheme: Scheme,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReportRow {
    pub surface: SurfaceType,
    pub count: usize,
    pub representatives: Vec<Representative>,
}

/// Class counts per surface type for one quadrilateral count.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnumerationReport {
    pub quad_count: usize,
    pub equivalence: Equivalence,
    pub configurations: Vec<Configuration>,
    pub rows: Vec<ReportRow>,
    pub total: usize,
}

impl EnumerationReport {
    pub fn count_of(&self, euler: i64, orientable: bool, boundary: usize) -> usize {
        self.rows
            .iter()
            .find(|r| (r.surface.euler(), r.surface.orientable(), r.surface.boundary()) == (euler, orientable, boundary))
            .map_or(0, |r| r.count)
    }
}

pub fn tabulate(n: usize) -> Result<EnumerationReport, EnumerationError> {
    tabulate_under(n, Equivalence::Stabilizer)
}

pub fn tabulate_under(n: usize, equivalence: Equivalence) -> Result<EnumerationReport, EnumerationError> {
    tabulate_with(n, equivalence, true)
}

type Rows = BTreeMap<(i64, bool, usize), ReportRow>;

fn merge_rows(mut a: Rows, b: Rows) -> Rows {
    for (key, row) in b {
        match a.entry(key) {
            std::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(row);
            }
            std::collections::btree_map::Entry::Occupied(mut slot) => {
                let into = slot.get_mut();
                into.count += row.count;
                into.representatives.extend(row.representatives);
            }
        }
    }
    a
}

/// Rows sorted by euler descending, orientable first, boundary ascending.
/// Without `representatives` the rows only carry counts.
///
/// All configurations share one pass over the raw stream, split into slices
/// that are tallied independently and merged.
pub fn tabulate_with(
    n: usize,
    equivalence: Equivalence,
    representatives: bool,
) -> Result<EnumerationReport, EnumerationError> {
    let configurations = generate_configurations(n)?;
    let m = 2 * n + 2;
    let groups: Vec<SymmetryGroup> = configurations.iter().map(|c| equivalence.group(c)).collect();
    let checks: Vec<Canonicity> = groups.iter().map(Canonicity::new).collect();
    let tally = |slice: Partial| -> Result<Rows, EnumerationError> {
        let mut rows = Rows::new();
        let mut failure = None;
        slice.visit(&mut |_, scheme| {
            if failure.is_some() {
                return;
            }
            let mut surface = None;
            for (index, check) in checks.iter().enumerate() {
                if !check.is_canonical(scheme) {
                    continue;
                }
                // chords add as many edges as faces, so the chordless type is the same
                let surface = match surface {
                    Some(s) => s,
                    None => match classify_scheme(scheme) {
                        Ok(s) => *surface.insert(s),
                        Err(e) => {
                            failure = Some(e.into());
                            return;
                        }
                    },
                };
                let row = rows.entry(surface.report_order()).or_insert_with(|| ReportRow {
                    surface,
                    count: 0,
                    representatives: Vec::new(),
                });
                row.count += 1;
                if representatives {
                    row.representatives.push(Representative {
                        configuration: index,
                        scheme: scheme.relabel(),
                    });
                }
            }
        });
        failure.map_or(Ok(rows), Err)
    };
    let rows = work_slices(m, 2)
        .into_par_iter()
        .map(tally)
        .try_reduce(Rows::new, |a, b| Ok(merge_rows(a, b)))?;
    let mut rows: Vec<ReportRow> = rows.into_values().collect();
    for row in &mut rows {
        row.representatives.sort();
    }
    let total = rows.iter().map(|r| r.count).sum();
    Ok(EnumerationReport {
        quad_count: n,
        equivalence,
        configurations,
        rows,
        total,
    })
}
