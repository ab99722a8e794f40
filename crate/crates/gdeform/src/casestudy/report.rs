//! Structured study reports with pass/fail verdicts and a field-wise diff.
//!
//! Reports are deterministic: fixed field order, sorted maps, no timestamps;
//! identical inputs produce byte-identical JSON.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::Result;

/// Where an expected value comes from.
#[derive(Serialize, Deserialize, Clone, Copy, Debug, PartialEq, Eq)]
#[serde(rename_all = "snake_case")]
pub enum Provenance {
    /// Stated in the source literature for this construction.
    Literature,
    /// Computed by an independent oracle (enumeration, closed form).
    Oracle,
    /// Immediate from definitions.
    Definition,
}

impl std::fmt::Display for Provenance {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Provenance::Literature => "literature",
            Provenance::Oracle => "oracle",
            Provenance::Definition => "definition",
        };
        write!(f, "{}", s)
    }
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq)]
pub struct Verdict {
    pub name: String,
    pub expected: String,
    pub actual: String,
    pub source: Provenance,
    pub pass: bool,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq)]
pub struct Row {
    pub key: String,
    pub value: String,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq)]
pub struct Section {
    pub title: String,
    pub rows: Vec<Row>,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq)]
pub struct Report {
    pub schema: String, // "report-v1"
    pub study: String,
    pub meta: BTreeMap<String, String>,
    pub sections: Vec<Section>,
    pub verdicts: Vec<Verdict>,
}

impl Report {
    pub fn new(study: impl Into<String>) -> Self {
        Report {
            schema: "report-v1".into(),
            study: study.into(),
            meta: BTreeMap::new(),
            sections: Vec::new(),
            verdicts: Vec::new(),
        }
    }

    pub fn meta(&mut self, key: impl Into<String>, value: impl Into<String>) {
        self.meta.insert(key.into(), value.into());
    }

    pub fn section(&mut self, title: impl Into<String>) -> &mut Section {
        self.sections.push(Section {
            title: title.into(),
            rows: Vec::new(),
        });
        self.sections.last_mut().unwrap()
    }

    pub fn verdict<E: std::fmt::Display, A: std::fmt::Display>(
        &mut self,
        name: impl Into<String>,
        expected: E,
        actual: A,
        source: Provenance,
        pass: bool,
    ) {
        self.verdicts.push(Verdict {
            name: name.into(),
            expected: format!("{}", expected),
            actual: format!("{}", actual),
            source,
            pass,
        });
    }

    /// Verdict where pass = (expected string == actual string).
    pub fn verdict_eq<E: std::fmt::Display, A: std::fmt::Display>(
        &mut self,
        name: impl Into<String>,
        expected: E,
        actual: A,
        source: Provenance,
    ) {
        let e = format!("{}", expected);
        let a = format!("{}", actual);
        let pass = e == a;
        self.verdicts.push(Verdict {
            name: name.into(),
            expected: e,
            actual: a,
            source,
            pass,
        });
    }

    pub fn passed(&self) -> bool {
        self.verdicts.iter().all(|v| v.pass)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "study: {}", self.study);
        for (k, v) in &self.meta {
            let _ = writeln!(out, "  {}: {}", k, v);
        }
        for section in &self.sections {
            let _ = writeln!(out, "\n[{}]", section.title);
            for row in &section.rows {
                let _ = writeln!(out, "  {:<28} {}", row.key, row.value);
            }
        }
        let _ = writeln!(out, "\n[verdicts]");
        for v in &self.verdicts {
            let _ = writeln!(
                out,
                "  {} {:<44} expected {} [{}], got {}",
                if v.pass { "PASS" } else { "FAIL" },
                v.name,
                v.expected,
                v.source,
                v.actual
            );
        }
        let _ = writeln!(
            out,
            "\nresult: {}",
            if self.passed() { "all verdicts pass" } else { "FAILURES PRESENT" }
        );
        out
    }
}

impl Section {
    pub fn row(&mut self, key: impl Into<String>, value: impl std::fmt::Display) {
        self.rows.push(Row {
            key: key.into(),
            value: format!("{}", value),
        });
    }
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq)]
pub struct DiffEntry {
    pub path: String,
    pub left: String,
    pub right: String,
}

/// Field-wise diff of two reports of the same study. Sections are matched by
/// title and verdicts by name; a section or verdict present on only one side
/// is itself a diff entry. Different studies are a shape mismatch.
pub fn report_diff(a: &Report, b: &Report) -> Result<Vec<DiffEntry>> {
    if a.study != b.study {
        return Err(Error::ReportShape(format!(
            "study {} vs {}",
            a.study, b.study
        )));
    }

    let mut out = Vec::new();
    let keys: std::collections::BTreeSet<&String> = a.meta.keys().chain(b.meta.keys()).collect();
    for k in keys {
        let left = a.meta.get(k).cloned().unwrap_or_default();
        let right = b.meta.get(k).cloned().unwrap_or_default();
        if left != right {
            out.push(DiffEntry {
                path: format!("meta.{}", k),
                left,
                right,
            });
        }
    }

    let mut titles: Vec<&String> = a.sections.iter().map(|s| &s.title).collect();
    for t in b.sections.iter().map(|s| &s.title) {
        if !titles.contains(&t) {
            titles.push(t);
        }
    }
    for title in titles {
        let sa = a.sections.iter().find(|s| &s.title == title);
        let sb = b.sections.iter().find(|s| &s.title == title);
        match (sa, sb) {
            (Some(sa), Some(sb)) => {
                let mut keys: Vec<&String> = sa.rows.iter().map(|r| &r.key).collect();
                for k in sb.rows.iter().map(|r| &r.key) {
                    if !keys.contains(&k) {
                        keys.push(k);
                    }
                }
                for key in keys {
                    let left = sa.rows.iter().find(|r| &r.key == key).map(|r| r.value.clone());
                    let right = sb.rows.iter().find(|r| &r.key == key).map(|r| r.value.clone());
                    if left != right {
                        out.push(DiffEntry {
                            path: format!("section.{}.{}", title, key),
                            left: left.unwrap_or_else(|| "(missing)".into()),
                            right: right.unwrap_or_else(|| "(missing)".into()),
                        });
                    }
                }
            }
            (Some(_), None) | (None, Some(_)) => out.push(DiffEntry {
                path: format!("section.{}", title),
                left: if sa.is_some() { "present".into() } else { "(missing)".into() },
                right: if sb.is_some() { "present".into() } else { "(missing)".into() },
            }),
            (None, None) => unreachable!(),
        }
    }

    let mut names: Vec<&String> = a.verdicts.iter().map(|v| &v.name).collect();
    for n in b.verdicts.iter().map(|v| &v.name) {
        if !names.contains(&n) {
            names.push(n);
        }
    }
    for name in names {
        let va = a.verdicts.iter().find(|v| &v.name == name);
        let vb = b.verdicts.iter().find(|v| &v.name == name);
        match (va, vb) {
            (Some(va), Some(vb)) if va == vb => {}
            _ => out.push(DiffEntry {
                path: format!("verdict.{}", name),
                left: va
                    .map(|v| format!("{} (pass={})", v.actual, v.pass))
                    .unwrap_or_else(|| "(missing)".into()),
                right: vb
                    .map(|v| format!("{} (pass={})", v.actual, v.pass))
                    .unwrap_or_else(|| "(missing)".into()),
            }),
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample(hilbert: &str) -> Report {
        let mut r = Report::new("demo");
        r.meta("n", "2");
        let s = r.section("hilbert");
        s.row("series", hilbert);
        r.verdict_eq("series_matches", "1,2,3", hilbert, Provenance::Oracle);
        r
    }

    #[test]
    fn identical_reports_have_empty_diff() {
        let a = sample("1,2,3");
        let b = sample("1,2,3");
        assert!(report_diff(&a, &b).unwrap().is_empty());
        assert!(a.passed());
    }

    #[test]
    fn differing_rows_are_reported() {
        let a = sample("1,2,3");
        let b = sample("1,2,4");
        let d = report_diff(&a, &b).unwrap();
        assert_eq!(d.len(), 2); // section row and the verdict
        assert_eq!(d[0].path, "section.hilbert.series");
        assert!(!b.passed());
    }

    #[test]
    fn shape_mismatch_is_an_error() {
        let a = sample("1,2,3");
        let mut b = sample("1,2,3");
        b.study = "other".into();
        assert!(report_diff(&a, &b).is_err());
    }

    #[test]
    fn json_is_deterministic() {
        let a = sample("1,2,3");
        let b = sample("1,2,3");
        assert_eq!(a.to_json(), b.to_json());
    }
}
