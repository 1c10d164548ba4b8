//! Serializable records and text renderings (aligned table, CSV, JSON).

use serde::{Deserialize, Serialize};

use crate::enumerate::{EnumerationReport, Equivalence};
use crate::scheme::Scheme;
use crate::surface::{classify, GluedComplex, SurfaceError};
use crate::symmetry::SymmetryGroup;
use crate::vertices::vertex_labeling;

pub const CSV_HEADER: &str = "euler,orientable,boundary,genus,name,count";

/// Everything the classifier derives from one scheme.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationRecord {
    pub scheme: String,
    pub canonical_scheme: String,
    pub vertex_classes: Vec<String>,
    #[serde(rename = "V")]
    pub vertices: usize,
    #[serde(rename = "E")]
    pub edges: usize,
    #[serde(rename = "F")]
    pub faces: usize,
    pub euler: i64,
    pub orientable: bool,
    pub boundary: usize,
    pub genus: usize,
    pub name: String,
}

impl ClassificationRecord {
    /// Record for `complex`; the canonical scheme is taken under the full
    /// dihedral group of the boundary word.
    pub fn new(complex: &GluedComplex) -> Result<Self, SurfaceError> {
        let scheme = complex.scheme();
        let labeling = vertex_labeling(scheme);
        let surface = classify(complex)?;
        let canonical = SymmetryGroup::dihedral(scheme.len())
            .canonical_form(scheme)
            .expect("group built for this length");
        Ok(ClassificationRecord {
            scheme: scheme.to_string(),
            canonical_scheme: canonical.to_string(),
            vertex_classes: labeling.letters(),
            vertices: labeling.class_count,
            edges: complex.edge_count(),
            faces: complex.face_count(),
            euler: surface.euler(),
            orientable: surface.orientable(),
            boundary: surface.boundary(),
            genus: surface.genus(),
            name: surface.name(),
        })
    }

    pub fn for_scheme(scheme: &Scheme) -> Result<Self, SurfaceError> {
        ClassificationRecord::new(&GluedComplex::chordless(scheme.clone()))
    }

    fn fields(&self) -> Vec<(&'static str, String)> {
        vec![
            ("scheme", self.scheme.clone()),
            ("canonical_scheme", self.canonical_scheme.clone()),
            ("vertex_classes", self.vertex_classes.join(" ")),
            ("V", self.vertices.to_string()),
            ("E", self.edges.to_string()),
            ("F", self.faces.to_string()),
            ("euler", self.euler.to_string()),
            ("orientable", self.orientable.to_string()),
            ("boundary", self.boundary.to_string()),
            ("genus", self.genus.to_string()),
            ("name", self.name.clone()),
        ]
    }

    pub fn to_table(&self) -> String {
        let fields = self.fields();
        let width = fields.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
        fields
            .iter()
            .map(|(k, v)| format!("{k:<width$}  {v}\n"))
            .collect()
    }

    pub fn to_csv(&self) -> String {
        let fields = self.fields();
        let header: Vec<&str> = fields.iter().map(|(k, _)| *k).collect();
        let values: Vec<String> = fields.iter().map(|(_, v)| csv_field(v)).collect();
        format!("{}\n{}\n", header.join(","), values.join(","))
    }

    pub fn to_json(&self) -> String {
        to_json_text(self)
    }
}

pub(crate) fn to_json_text<T: Serialize>(value: &T) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("records serialize");
    text.push('\n');
    text
}

pub(crate) fn csv_field(value: &str) -> String {
    if value.contains([',', '"', '\n']) {
        format!("\"{}\"", value.replace('"', "\"\""))
    } else {
        value.to_string()
    }
}

/// Render rows as left-aligned columns separated by two spaces.
pub(crate) fn align(rows: &[Vec<String>]) -> String {
    let columns = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..columns)
        .map(|c| {
            rows.iter()
                .filter_map(|r| r.get(c))
                .map(|v| v.chars().count())
                .max()
                .unwrap_or(0)
        })
        .collect();
    let mut out = String::new();
    for row in rows {
        let line: Vec<String> = row
            .iter()
            .enumerate()
            .map(|(c, v)| format!("{v:<w$}", w = widths[c]))
            .collect();
        out.push_str(line.join("  ").trim_end());
        out.push('\n');
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConfigurationRecord {
    pub chords: Vec<[usize; 2]>,
    pub symmetries: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RowRecord {
    pub euler: i64,
    pub orientable: bool,
    pub boundary: usize,
    pub genus: usize,
    pub name: String,
    pub count: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub representatives: Option<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportRecord {
    pub quads: usize,
    pub equivalence: String,
    pub configurations: Vec<ConfigurationRecord>,
    pub total: usize,
    pub rows: Vec<RowRecord>,
}

pub fn equivalence_name(e: Equivalence) -> &'static str {
    match e {
        Equivalence::Stabilizer => "stabilizer",
        Equivalence::FullDihedral => "full-dihedral",
    }
}

/// Representative schemes, prefixed with their configuration index when the
/// report spans several configurations.
fn representative_strings(report: &EnumerationReport, row: usize) -> Vec<String> {
    let several = report.configurations.len() > 1;
    report.rows[row]
        .representatives
        .iter()
        .map(|r| {
            if several {
                format!("{}:{}", r.configuration + 1, r.scheme)
            } else {
                r.scheme.to_string()
            }
        })
        .collect()
}

impl ReportRecord {
    pub fn new(report: &EnumerationReport, list: bool) -> Self {
        ReportRecord {
            quads: report.quad_count,
            equivalence: equivalence_name(report.equivalence).to_string(),
            configurations: report
                .configurations
                .iter()
                .map(|c| ConfigurationRecord {
                    chords: c.chords().iter().map(|ch| [ch.low, ch.high]).collect(),
                    symmetries: c.symmetries().order(),
                })
                .collect(),
            total: report.total,
            rows: report
                .rows
                .iter()
                .enumerate()
                .map(|(i, row)| RowRecord {
                    euler: row.surface.euler(),
                    orientable: row.surface.orientable(),
                    boundary: row.surface.boundary(),
                    genus: row.surface.genus(),
                    name: row.surface.name(),
                    count: row.count,
                    representatives: list.then(|| representative_strings(report, i)),
                })
                .collect(),
        }
    }

    pub fn to_json(&self) -> String {
        to_json_text(self)
    }

    pub fn to_csv(&self) -> String {
        let list = self.rows.iter().any(|r| r.representatives.is_some());
        let mut out = String::from(CSV_HEADER);
        if list {
            out.push_str(",representatives");
        }
        out.push('\n');
        for row in &self.rows {
            let mut fields = vec![
                row.euler.to_string(),
                row.orientable.to_string(),
                row.boundary.to_string(),
                row.genus.to_string(),
                csv_field(&row.name),
                row.count.to_string(),
            ];
            if let Some(reps) = &row.representatives {
                fields.push(csv_field(&reps.join(";")));
            }
            out.push_str(&fields.join(","));
            out.push('\n');
        }
        out
    }

    pub fn to_table(&self) -> String {
        let list = self.rows.iter().any(|r| r.representatives.is_some());
        let mut header: Vec<String> = ["euler", "orientable", "boundary", "genus", "name", "count"]
            .map(String::from)
            .to_vec();
        if list {
            header.push("representatives".into());
        }
        let mut rows = vec![header];
        for row in &self.rows {
            let mut line = vec![
                row.euler.to_string(),
                row.orientable.to_string(),
                row.boundary.to_string(),
                row.genus.to_string(),
                row.name.clone(),
                row.count.to_string(),
            ];
            if let Some(reps) = &row.representatives {
                line.push(reps.join("; "));
            }
            rows.push(line);
        }
        rows.push(vec![
            "total".into(),
            String::new(),
            String::new(),
            String::new(),
            String::new(),
            self.total.to_string(),
        ]);
        let mut out = format!(
            "{} quadrilateral(s), {} configuration(s), {} equivalence\n",
            self.quads,
            self.configurations.len(),
            self.equivalence
        );
        out.push_str(&align(&rows));
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::tabulate;

    #[test]
    fn torus_record() {
        let record = ClassificationRecord::for_scheme(&"a b a^-1 b^-1".parse().unwrap()).unwrap();
        assert_eq!(record.name, "torus");
        assert_eq!((record.vertices, record.edges, record.faces), (1, 2, 1));
        assert_eq!(record.vertex_classes, vec!["A"; 4]);
        let json = record.to_json();
        assert!(json.contains("\"V\": 1"));
        let back: ClassificationRecord = serde_json::from_str(&json).unwrap();
        assert_eq!(back, record);
    }

    #[test]
    fn square_csv() {
        let report = tabulate(1).unwrap();
        let csv = ReportRecord::new(&report, false).to_csv();
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines[0], CSV_HEADER);
        assert_eq!(lines.len(), 8);
        assert_eq!(lines[1], "2,true,0,0,sphere,1");
        let listed = ReportRecord::new(&report, true).to_csv();
        assert!(listed.starts_with("euler,orientable,boundary,genus,name,count,representatives\n"));
        assert!(listed.contains("2,true,0,0,sphere,1,a a^-1 b b^-1\n"));
    }

    #[test]
    fn csv_quoting() {
        assert_eq!(csv_field("plain"), "plain");
        assert_eq!(csv_field("a,b"), "\"a,b\"");
        assert_eq!(csv_field("say \"hi\""), "\"say \"\"hi\"\"\"");
    }

    #[test]
    fn table_is_aligned() {
        let text = ReportRecord::new(&tabulate(1).unwrap(), false).to_table();
        let lines: Vec<&str> = text.lines().collect();
        assert!(lines[1].starts_with("euler  orientable  boundary  genus  name"));
        let count_col = lines[1].find("count").unwrap();
        for line in &lines[2..] {
            assert!(line.len() >= count_col, "{line}");
        }
        assert!(lines.last().unwrap().starts_with("total"));
        assert!(lines.last().unwrap().ends_with("10"));
    }
}
