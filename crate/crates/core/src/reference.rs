//! Published class counts for one, two and three quadrilaterals, and a
//! per-surface comparison against computed counts.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::enumerate::{tabulate_under, EnumerationError, EnumerationReport, Equivalence};
use crate::report::{align, csv_field, to_json_text};
use crate::surface::SurfaceType;

/// `(euler, orientable, boundary, count)` in the column order they were printed.
const ONE_QUAD: [(i64, bool, usize, usize); 7] = [
    (2, true, 0, 1),
    (0, true, 0, 1),
    (1, true, 1, 1),
    (0, true, 2, 1),
    (1, false, 0, 2),
    (0, false, 0, 2),
    (0, false, 1, 2),
];

const TWO_QUADS: [(i64, bool, usize, usize); 11] = [
    (0, true, 0, 5),
    (1, true, 1, 9),
    (1, false, 0, 10),
    (-1, false, 1, 15),
    (2, true, 0, 3),
    (-1, true, 1, 5),
    (-1, false, 2, 7),
    (0, false, 1, 22),
    (0, false, 0, 14),
    (-1, false, 0, 8),
    (0, true, 2, 10),
];

const THREE_QUADS: [(i64, bool, usize, usize); 17] = [
    (-1, true, 3, 19),
    (1, false, 0, 59),
    (0, false, 0, 145),
    (-1, false, 2, 219),
    (1, true, 1, 65),
    (0, true, 2, 113),
    (0, true, 0, 43),
    (-1, false, 0, 197),
    (-2, false, 0, 47),
    (-1, true, 1, 122),
    (-2, false, 2, 95),
    (2, true, 0, 16),
    (-1, false, 1, 451),
    (-2, false, 1, 256),
    (0, false, 1, 263),
    (-2, true, 0, 4),
    (-2, true, 2, 25),
];

/// Published counts for `n` quadrilaterals, if any.
pub fn reference_counts(n: usize) -> Option<Vec<(SurfaceType, usize)>> {
    let table: &[(i64, bool, usize, usize)] = match n {
        1 => &ONE_QUAD,
        2 => &TWO_QUADS,
        3 => &THREE_QUADS,
        _ => return None,
    };
    Some(
        table
            .iter()
            .map(|&(euler, orientable, boundary, count)| {
                (
                    SurfaceType::new(euler, orientable, boundary).expect("published types are consistent"),
                    count,
                )
            })
            .collect(),
    )
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComparisonRow {
    pub euler: i64,
    pub orientable: bool,
    pub boundary: usize,
    pub genus: usize,
    pub name: String,
    pub reference: usize,
    pub computed: usize,
    pub full_dihedral: usize,
    pub representatives: Vec<String>,
}

/// Reference counts beside counts computed under the stabilizer
/// equivalence and under the full dihedral group.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComparisonReport {
    pub quads: usize,
    pub matches: bool,
    pub reference_total: usize,
    pub computed_total: usize,
    pub full_dihedral_total: usize,
    pub rows: Vec<ComparisonRow>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ComparisonError {
    #[error("no reference table for {0} quadrilaterals (available: 1, 2, 3)")]
    NoReference(usize),
    #[error(transparent)]
    Enumeration(#[from] EnumerationError),
}

impl ComparisonReport {
    pub fn build(n: usize) -> Result<Self, ComparisonError> {
        let reference = reference_counts(n).ok_or(ComparisonError::NoReference(n))?;
        let computed = tabulate_under(n, Equivalence::Stabilizer)?;
        let full = tabulate_under(n, Equivalence::FullDihedral)?;
        Ok(ComparisonReport::from_parts(n, &reference, &computed, &full))
    }

    pub fn from_parts(
        n: usize,
        reference: &[(SurfaceType, usize)],
        computed: &EnumerationReport,
        full: &EnumerationReport,
    ) -> Self {
        let mut types: BTreeMap<(i64, bool, usize), SurfaceType> = BTreeMap::new();
        for t in reference
            .iter()
            .map(|(t, _)| *t)
            .chain(computed.rows.iter().map(|r| r.surface))
            .chain(full.rows.iter().map(|r| r.surface))
        {
            types.insert(t.report_order(), t);
        }
        let several = computed.configurations.len() > 1;
        let rows: Vec<ComparisonRow> = types
            .values()
            .map(|t| {
                let key = (t.euler(), t.orientable(), t.boundary());
                let reference = reference
                    .iter()
                    .find(|(r, _)| r == t)
                    .map_or(0, |(_, c)| *c);
                let representatives = computed
                    .rows
                    .iter()
                    .find(|r| r.surface == *t)
                    .map(|r| {
                        r.representatives
                            .iter()
                            .map(|rep| {
                                if several {
                                    format!("{}:{}", rep.configuration + 1, rep.scheme)
                                } else {
                                    rep.scheme.to_string()
                                }
                            })
                            .collect()
                    })
                    .unwrap_or_default();
                ComparisonRow {
                    euler: t.euler(),
                    orientable: t.orientable(),
                    boundary: t.boundary(),
                    genus: t.genus(),
                    name: t.name(),
                    reference,
                    computed: computed.count_of(key.0, key.1, key.2),
                    full_dihedral: full.count_of(key.0, key.1, key.2),
                    representatives,
                }
            })
            .collect();
        ComparisonReport {
            quads: n,
            matches: rows.iter().all(|r| r.reference == r.computed),
            reference_total: reference.iter().map(|(_, c)| c).sum(),
            computed_total: computed.total,
            full_dihedral_total: full.total,
            rows,
        }
    }

    pub fn to_json(&self) -> String {
        to_json_text(self)
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("euler,orientable,boundary,genus,name,reference,computed,full_dihedral,representatives\n");
        for r in &self.rows {
            let fields = [
                r.euler.to_string(),
                r.orientable.to_string(),
                r.boundary.to_string(),
                r.genus.to_string(),
                csv_field(&r.name),
                r.reference.to_string(),
                r.computed.to_string(),
                r.full_dihedral.to_string(),
                csv_field(&r.representatives.join(";")),
            ];
            out.push_str(&fields.join(","));
            out.push('\n');
        }
        out
    }

    pub fn to_table(&self) -> String {
        let mut rows = vec![[
            "euler",
            "orientable",
            "boundary",
            "genus",
            "name",
            "reference",
            "computed",
            "full_dihedral",
        ]
        .map(String::from)
        .to_vec()];
        for r in &self.rows {
            rows.push(vec![
                r.euler.to_string(),
                r.orientable.to_string(),
                r.boundary.to_string(),
                r.genus.to_string(),
                r.name.clone(),
                r.reference.to_string(),
                r.computed.to_string(),
                r.full_dihedral.to_string(),
            ]);
        }
        rows.push(vec![
            "total".into(),
            String::new(),
            String::new(),
            String::new(),
            String::new(),
            self.reference_total.to_string(),
            self.computed_total.to_string(),
            self.full_dihedral_total.to_string(),
        ]);
        let verdict = if self.matches { "match" } else { "MISMATCH" };
        format!("{} quadrilateral(s): {verdict}\n{}", self.quads, align(&rows))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reference_totals() {
        let total = |n| reference_counts(n).unwrap().iter().map(|(_, c)| c).sum::<usize>();
        assert_eq!(total(1), 10);
        assert_eq!(total(2), 108);
        assert_eq!(total(3), 2139);
        assert_eq!(reference_counts(2).unwrap().len(), 11);
        assert_eq!(reference_counts(3).unwrap().len(), 17);
        assert!(reference_counts(4).is_none());
    }

    #[test]
    fn square_matches_reference() {
        let report = ComparisonReport::build(1).unwrap();
        assert!(report.matches);
        assert_eq!(report.computed_total, 10);
        assert_eq!(report.rows.len(), 7);
        assert!(report.rows.iter().all(|r| !r.representatives.is_empty()));
    }

    #[test]
    fn missing_reference() {
        assert_eq!(ComparisonReport::build(4), Err(ComparisonError::NoReference(4)));
    }
}
