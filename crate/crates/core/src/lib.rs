//! Fundamental-polygon labeling schemes, classification of the surfaces they
//! define, and exhaustive enumeration of gluings of polygons assembled from
//! quadrilaterals.
//!
//! ```
//! use quadglue::{classify_scheme, Scheme};
//!
//! let torus: Scheme = "a b a^-1 b^-1".parse().unwrap();
//! assert_eq!(classify_scheme(&torus).unwrap().name(), "torus");
//! ```

pub mod cli;
pub mod enumerate;
pub mod reference;
pub mod report;
pub mod scheme;
pub mod surface;
pub mod symmetry;
pub mod vertices;

pub use enumerate::{
    count_distinct, enumerate_gluings, for_each_canonical_form, for_each_gluing_class, enumerate_gluings_under, for_each_raw_gluing, generate_configurations,
    raw_gluings, tabulate, tabulate_under, tabulate_with, Configuration, EnumerationError, EnumerationReport, Equivalence,
    GluingClass, MAX_QUADS,
};
pub use scheme::{format_scheme, parse_scheme, Exponent, Letter, Scheme, SchemeError, Side};
pub use surface::{
    boundary_components, classify, classify_scheme, euler_characteristic, is_orientable, standard_scheme,
    surface_name, Chord, GluedComplex, SurfaceError, SurfaceType,
};
pub use symmetry::{apply_symmetry, canonical_form, schemes_equivalent, Symmetry, SymmetryGroup};
pub use vertices::{vertex_labeling, VertexLabeling};
