//! Rendering of enumeration and classification results as JSON, CSV and
//! plain text.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use serde_json::{json, Value};

use crate::classify::{ClassificationRecord, IsoClass};
use crate::complex::TwoTermCategory;
use crate::module_cat::ArQuiver;
use crate::silting::SiltingObject;

/// The `∘`/`•` picture of `obj` on the two-term AR grid, `•` marking summands.
pub fn silting_grid(ar: &ArQuiver, obj: &SiltingObject) -> String {
    let marked: BTreeSet<usize> = obj.summands().iter().filter_map(|id| ar.index_of(id)).collect();
    ar.to_ascii(Some(&marked))
}

/// Enumeration output: one JSON object per silting object.
pub fn objects_json(cat: &TwoTermCategory, objects: &[SiltingObject]) -> Value {
    Value::Array(
        objects
            .iter()
            .map(|t| {
                let mut v = t.to_json(cat.quiver());
                v["summands"] = json!(t.display(cat));
                v["tilting"] = json!(t.is_tilting());
                v
            })
            .collect(),
    )
}

/// `index,summands,I,tilting` with one line per object.
pub fn objects_csv(cat: &TwoTermCategory, objects: &[SiltingObject]) -> String {
    let q = cat.quiver();
    let mut s = String::from("index,summands,I,tilting\n");
    for (k, t) in objects.iter().enumerate() {
        let shifted: Vec<String> = t.shifted.iter().map(|&i| q.label(i).to_string()).collect();
        let _ = writeln!(s, "{},{},{},{}", k + 1, csv_field(&t.display(cat)), csv_field(&shifted.join(" ")), t.is_tilting());
    }
    s
}

/// Numbered list of objects, each followed by its grid.
pub fn objects_ascii(cat: &TwoTermCategory, ar: &ArQuiver, objects: &[SiltingObject]) -> String {
    let mut s = String::new();
    for (k, t) in objects.iter().enumerate() {
        let _ = writeln!(s, "({}) {}", k + 1, t.display(cat));
        s.push_str(&silting_grid(ar, t));
        s.push('\n');
    }
    s
}

fn class_of(classes: &[IsoClass], n: usize) -> Vec<usize> {
    let mut out = vec![0; n];
    for (c, class) in classes.iter().enumerate() {
        for &m in &class.members {
            out[m] = c;
        }
    }
    out
}

/// Full classification output, records in input order.
pub fn records_json(cat: &TwoTermCategory, records: &[ClassificationRecord], classes: &[IsoClass]) -> Value {
    let class = class_of(classes, records.len());
    let q = cat.quiver();
    Value::Array(
        records
            .iter()
            .enumerate()
            .map(|(k, r)| {
                let blocks: Vec<Value> = r
                    .blocks
                    .iter()
                    .map(|b| {
                        json!({
                            "vertices": b.vertices.iter().map(|v| v + 1).collect::<Vec<_>>(),
                            "global_dimension": b.global_dimension,
                            "verdict": b.verdict.to_string(),
                            "coxeter_polynomial": b.coxeter_polynomial,
                        })
                    })
                    .collect();
                json!({
                    "object": r.object.to_json(q),
                    "summands": r.object.display(cat),
                    "class": class[k] + 1,
                    "label": r.label(),
                    "global_dimension": r.global_dimension(),
                    "algebra": r.algebra.to_json(),
                    "relations": r.algebra.relation_strings(),
                    "blocks": blocks,
                })
            })
            .collect(),
    )
}

/// One line of the summary table: an isomorphism class with its members.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SummaryRow {
    pub class: usize,
    pub objects: Vec<String>,
    pub quiver: String,
    pub relations: Vec<String>,
    pub label: String,
}

pub fn summary_rows(cat: &TwoTermCategory, records: &[ClassificationRecord], classes: &[IsoClass]) -> Vec<SummaryRow> {
    classes
        .iter()
        .enumerate()
        .map(|(c, class)| {
            let rep = &records[class.members[0]];
            SummaryRow {
                class: c + 1,
                objects: class.members.iter().map(|&m| records[m].object.display(cat)).collect(),
                quiver: rep.algebra.gabriel_quiver().sketch(),
                relations: rep.algebra.relation_strings(),
                label: class.label.clone(),
            }
        })
        .collect()
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// `class,silting complexes,quiver,relations,type`; members are separated by `; `.
pub fn summary_csv(rows: &[SummaryRow]) -> String {
    let mut s = String::from("class,silting complexes,quiver,relations,type\n");
    for r in rows {
        let _ = writeln!(
            s,
            "{},{},{},{},{}",
            r.class,
            csv_field(&r.objects.join("; ")),
            csv_field(&r.quiver),
            csv_field(&r.relations.join("; ")),
            csv_field(&r.label)
        );
    }
    s
}

/// Aligned text table followed by per-family counts.
pub fn summary_text(rows: &[SummaryRow]) -> String {
    let quiver_w = rows.iter().map(|r| r.quiver.chars().count()).max().unwrap_or(0).max(6);
    let rel_w = rows.iter().map(|r| r.relations.join(", ").chars().count()).max().unwrap_or(0).max(9);
    let label_w = rows.iter().map(|r| r.label.chars().count()).max().unwrap_or(0).max(4);
    let pad = |s: &str, w: usize| format!("{s}{}", " ".repeat(w.saturating_sub(s.chars().count())));
    let mut s = String::new();
    let _ = writeln!(
        s,
        "{:>3}  {}  {}  {}  silting complexes",
        "#",
        pad("quiver", quiver_w),
        pad("relations", rel_w),
        pad("type", label_w)
    );
    for r in rows {
        let _ = writeln!(
            s,
            "{:>3}  {}  {}  {}  {}",
            r.class,
            pad(&r.quiver, quiver_w),
            pad(&r.relations.join(", "), rel_w),
            pad(&r.label, label_w),
            r.objects.join("; ")
        );
    }
    let mut counts = std::collections::BTreeMap::new();
    for r in rows {
        *counts.entry(r.label.as_str()).or_insert(0usize) += 1;
    }
    let _ = writeln!(s, "\n{} isomorphism classes", rows.len());
    for (label, n) in counts {
        let _ = writeln!(s, "  {label}: {n}");
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::{classify_all, dedupe};
    use crate::quiver::parse_quiver;
    use crate::silting::enumerate_silting;

    #[test]
    fn a2_outputs() {
        let q = parse_quiver("vertices 1 2; arrows a:1->2").unwrap();
        let cat = TwoTermCategory::new(&q).unwrap();
        let ar = ArQuiver::two_term(cat.module_category()).unwrap();
        let objects = enumerate_silting(&q).unwrap();
        let last = objects.last().unwrap();
        assert_eq!(last.display(&cat), "10 ⊕ 11");
        assert_eq!(silting_grid(&ar, last), "  •   ∘\n∘   •   ∘\n");
        let csv = objects_csv(&cat, &objects);
        assert_eq!(csv.lines().count(), 6);

        let records = classify_all(&cat, &objects).unwrap();
        let classes = dedupe(&records);
        let rows = summary_rows(&cat, &records, &classes);
        assert_eq!(rows.len(), 2);
        assert_eq!(summary_csv(&rows).lines().count(), 3);
        assert!(summary_text(&rows).contains("2 isomorphism classes"));
        let json = records_json(&cat, &records, &classes);
        assert_eq!(json.as_array().unwrap().len(), 5);
    }

    #[test]
    fn csv_quoting() {
        assert_eq!(csv_field("a,b"), "\"a,b\"");
        assert_eq!(csv_field("ab"), "ab");
    }
}
