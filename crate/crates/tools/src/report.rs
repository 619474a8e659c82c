//! JSON forms of classification reports, theorem reports and the catalogue.

use std::collections::BTreeMap;

use hitomezashi_core::classify::{Axis, CatalogueEntry, ClassificationReport};
use hitomezashi_core::theorems::{Finding, TheoremReport};
use hitomezashi_core::Isometry;
use serde::{Deserialize, Serialize};

/// An isometry as `{su, sv, sz, shift}` plus a description.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IsometryRecord {
    pub su: i8,
    pub sv: i8,
    pub sz: i8,
    /// Translation (when `su = +1`) or mirror/rotation anchor column (when `su = -1`).
    pub shift: f64,
    pub description: String,
}

impl From<&Isometry> for IsometryRecord {
    fn from(g: &Isometry) -> Self {
        Self {
            su: g.su.value() as i8,
            sv: g.sv.value() as i8,
            sz: g.sz.value() as i8,
            shift: g.shift(),
            description: g.describe().to_string(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SignatureRecord {
    pub axis_a: Vec<String>,
    pub axis_b: Vec<String>,
    pub axis_c: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClassificationRecord {
    pub x: String,
    pub y: String,
    pub label: String,
    pub period: usize,
    pub signature: SignatureRecord,
    /// Keyed `<axis>:<symbol>`, e.g. `a:m`.
    pub anchors: BTreeMap<String, IsometryRecord>,
}

impl From<&ClassificationReport> for ClassificationRecord {
    fn from(r: &ClassificationReport) -> Self {
        let names = |axis| {
            r.signature
                .axis(axis)
                .iter()
                .map(|s| s.as_str().to_owned())
                .collect()
        };
        Self {
            x: r.pattern.x().to_string(),
            y: r.pattern.y().to_string(),
            label: r.label.to_string(),
            period: r.period,
            signature: SignatureRecord {
                axis_a: names(Axis::A),
                axis_b: names(Axis::B),
                axis_c: names(Axis::C),
            },
            anchors: r
                .signature
                .anchors
                .iter()
                .map(|((axis, symbol), g)| (format!("{axis}:{symbol}"), g.into()))
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bounds {
    pub max_x: usize,
    pub max_y: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ViolationRecord {
    pub x: String,
    pub y: String,
    pub label: Option<String>,
    /// `theorem 1`, `theorem 2`, `theorem 3` or `unclassified`.
    pub finding: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremRecord {
    pub bounds: Bounds,
    pub patterns_checked: u64,
    pub observed_labels: Vec<String>,
    pub violations: Vec<ViolationRecord>,
    pub clean: bool,
}

impl From<&TheoremReport> for TheoremRecord {
    fn from(r: &TheoremReport) -> Self {
        Self {
            bounds: Bounds { max_x: r.max_x, max_y: r.max_y },
            patterns_checked: r.patterns_checked,
            observed_labels: r.observed_labels.iter().map(|l| l.to_string()).collect(),
            violations: r
                .violations
                .iter()
                .map(|v| ViolationRecord {
                    x: v.x.to_string(),
                    y: v.y.to_string(),
                    label: v.label.map(|l| l.to_string()),
                    finding: match v.finding {
                        Finding::Theorem(t) => t.to_string(),
                        Finding::Unclassified => "unclassified".to_owned(),
                    },
                })
                .collect(),
            clean: r.is_clean(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogueRecord {
    pub label: String,
    pub hitomezashi_realizable: bool,
    pub celtic_realizable: bool,
    pub realization_class: String,
    pub excluded_by: Vec<u8>,
}

impl From<&CatalogueEntry> for CatalogueRecord {
    fn from(e: &CatalogueEntry) -> Self {
        Self {
            label: e.label.to_string(),
            hitomezashi_realizable: e.hitomezashi_realizable,
            celtic_realizable: e.celtic_realizable,
            realization_class: e.realization_class.to_string(),
            excluded_by: e.excluded_by.iter().map(|t| t.number()).collect(),
        }
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("records serialise");
    text.push('\n');
    text
}

pub fn classification_json(r: &ClassificationReport) -> String {
    to_json(&ClassificationRecord::from(r))
}

pub fn theorem_json(r: &TheoremReport) -> String {
    to_json(&TheoremRecord::from(r))
}

pub fn catalogue_json(entries: &[CatalogueEntry]) -> String {
    to_json(&entries.iter().map(CatalogueRecord::from).collect::<Vec<_>>())
}

/// One line per entry: label, realisation class, and either `compatible` or
/// the excluding theorems.
pub fn catalogue_text(entries: &[CatalogueEntry]) -> String {
    let mut out = String::new();
    for e in entries {
        let status = if e.excluded_by.is_empty() {
            "compatible".to_owned()
        } else {
            let numbers: Vec<String> = e.excluded_by.iter().map(|t| t.number().to_string()).collect();
            format!("excluded by theorem {}", numbers.join(", "))
        };
        out.push_str(&format!("{:<10} {:<16} {status}\n", e.label.as_str(), e.realization_class.as_str()));
    }
    out
}

/// Plain summary of a theorem report.
pub fn theorem_text(r: &TheoremReport) -> String {
    let mut out = format!(
        "checked {} patterns with |x| <= {}, |y| <= {}\n",
        r.patterns_checked, r.max_x, r.max_y
    );
    let labels: Vec<String> = r.observed_labels.iter().map(|l| l.to_string()).collect();
    out.push_str(&format!("observed {} labels: {}\n", labels.len(), labels.join(" ")));
    out.push_str(&format!("violations: {}\n", r.violations.len()));
    for v in &r.violations {
        let label = v.label.map(|l| l.to_string()).unwrap_or_else(|| "-".to_owned());
        let finding = match v.finding {
            Finding::Theorem(t) => t.to_string(),
            Finding::Unclassified => "unclassified".to_owned(),
        };
        out.push_str(&format!("  x={} y={} {label} {finding}\n", v.x, v.y));
    }
    out.push_str(if r.is_clean() { "verified\n" } else { "FAILED\n" });
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use hitomezashi_core::{catalogue, classify, FriezePattern};

    #[test]
    fn classification_record_fields() {
        let p = FriezePattern::parse("011", "010").unwrap();
        let record = ClassificationRecord::from(&classify(&p).unwrap());
        assert_eq!(record.label, "p[2'm]11");
        assert_eq!(record.period, 6);
        assert_eq!(record.signature.axis_a, ["2'", "m"]);
        assert_eq!(record.signature.axis_c, ["~2"]);
        let mirror = &record.anchors["a:m"];
        assert_eq!((mirror.su, mirror.sv, mirror.sz), (-1, 1, 1));
        assert!(mirror.description.starts_with("mirror ⊥ a at column"));

        let json: serde_json::Value =
            serde_json::from_str(&classification_json(&classify(&p).unwrap())).unwrap();
        for key in ["x", "y", "label", "period", "signature", "anchors"] {
            assert!(json.get(key).is_some(), "{key}");
        }
    }

    #[test]
    fn catalogue_json_round_trips() {
        let entries = catalogue();
        let parsed: Vec<CatalogueRecord> =
            serde_json::from_str(&catalogue_json(&entries)).unwrap();
        assert_eq!(parsed.len(), 31);
        let p2mm = parsed.iter().find(|r| r.label == "p2mm").unwrap();
        assert_eq!(p2mm.excluded_by, [1, 2]);
        assert_eq!(p2mm.realization_class, "Neither");
        assert_eq!(catalogue_text(&entries).lines().count(), 31);
    }
}
