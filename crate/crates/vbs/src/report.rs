//! Evaluation report output: TSV for scripts, an aligned table for people.

use std::fmt::Write;

use vbs_core::evaluation::{per_viewpoint_coverage, EvalReport};

const CELLS: [&str; 4] = ["vbs_12", "lead_12", "vbs_28", "lead_28"];

fn cells(report: &EvalReport, row: &vbs_core::evaluation::ReportRow) -> Vec<String> {
    let mut out = vec![
        row.reps.to_string(),
        format!("{:.0}", row.chars),
        format!("{:.2}", row.compression_pct),
    ];
    for a in &report.annotators {
        let c = row.coverage.get(a).copied().unwrap_or_default();
        for v in [c.vbs_12, c.lead_12, c.vbs_28, c.lead_28] {
            out.push(format!("{v:.1}"));
        }
    }
    out
}

/// One row per reps value; coverage columns are repeated per annotator.
pub fn to_tsv(report: &EvalReport) -> String {
    let mut header = vec!["reps".to_string(), "chars".into(), "compression_pct".into()];
    for a in &report.annotators {
        header.extend(CELLS.iter().map(|c| format!("{a}_{c}")));
    }
    let mut out = header.join("\t");
    out.push('\n');
    for row in &report.rows {
        out.push_str(&cells(report, row).join("\t"));
        out.push('\n');
    }
    out
}

/// The same numbers as [`to_tsv`], right-aligned under a two-line header
/// that groups columns by annotator.
pub fn to_table(report: &EvalReport) -> String {
    let mut top = vec![String::new(); 3];
    let mut header = vec![
        "#Reps".to_string(),
        "#Chars".into(),
        "Compression(%)".into(),
    ];
    for a in &report.annotators {
        top.push(format!("Annotator {a}"));
        top.extend([String::new(), String::new(), String::new()]);
        header.extend(["VBS/12", "Lead/12", "VBS/28", "Lead/28"].map(String::from));
    }
    let body: Vec<Vec<String>> = report.rows.iter().map(|r| cells(report, r)).collect();
    let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for row in &body {
        for (w, c) in widths.iter_mut().zip(row) {
            *w = (*w).max(c.chars().count());
        }
    }
    let mut out = String::new();
    let line = |out: &mut String, row: &[String], left: bool| {
        let parts: Vec<String> = row
            .iter()
            .zip(&widths)
            .map(|(c, w)| {
                if left {
                    format!("{c:<w$}")
                } else {
                    format!("{c:>w$}")
                }
            })
            .collect();
        out.push_str(parts.join("  ").trim_end());
        out.push('\n');
    };
    line(&mut out, &top, true);
    line(&mut out, &header, false);
    let rule: Vec<String> = widths.iter().map(|w| "-".repeat(*w)).collect();
    line(&mut out, &rule, false);
    for row in &body {
        line(&mut out, row, false);
    }
    out
}

/// Per term and reps value, with each annotator's four coverage cells.
pub fn per_term_tsv(report: &EvalReport) -> String {
    let mut out = String::from("term\treps\tvbs_chars\tlead_chars\tsource_chars\tcompression_pct");
    for a in &report.annotators {
        for c in CELLS {
            write!(out, "\t{a}_{c}").unwrap();
        }
    }
    out.push('\n');
    for r in &report.per_term {
        write!(
            out,
            "{}\t{}\t{}\t{}\t{}\t{:.2}",
            r.term, r.reps, r.vbs_chars, r.lead_chars, r.source_chars, r.compression_pct
        )
        .unwrap();
        for a in &report.annotators {
            let c = r.coverage.get(a).copied().unwrap_or_default();
            for v in [c.vbs_12, c.lead_12, c.vbs_28, c.lead_28] {
                write!(out, "\t{v:.1}").unwrap();
            }
        }
        out.push('\n');
    }
    out
}

/// For each annotator and label, the share of terms showing the label whose
/// VBS summary also shows it.
pub fn breakdown_tsv(report: &EvalReport, reps: usize) -> String {
    let mut out = String::from("annotator\tlabel\tcoverage_pct\n");
    for (a, labels) in per_viewpoint_coverage(report, reps) {
        for (label, pct) in labels {
            writeln!(out, "{a}\t{label}\t{pct:.1}").unwrap();
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeMap;
    use vbs_core::evaluation::{CoverageCells, ReportRow};

    fn report() -> EvalReport {
        let cells = CoverageCells {
            vbs_12: 90.0,
            lead_12: 45.5,
            vbs_28: 71.0,
            lead_28: 40.0,
        };
        EvalReport {
            annotators: vec!["A".into(), "B".into()],
            rows: vec![ReportRow {
                reps: 1,
                chars: 616.4,
                compression_pct: 5.97,
                coverage: BTreeMap::from([("A".into(), cells), ("B".into(), cells)]),
            }],
            per_term: vec![],
        }
    }

    #[test]
    fn tsv_layout() {
        let tsv = to_tsv(&report());
        let lines: Vec<&str> = tsv.lines().collect();
        assert_eq!(lines.len(), 2);
        assert_eq!(lines[0].split('\t').count(), 11);
        assert!(lines[0].starts_with("reps\tchars\tcompression_pct\tA_vbs_12\tA_lead_12"));
        assert_eq!(
            lines[1],
            "1\t616\t5.97\t90.0\t45.5\t71.0\t40.0\t90.0\t45.5\t71.0\t40.0"
        );
    }

    #[test]
    fn table_is_aligned() {
        let table = to_table(&report());
        let lines: Vec<&str> = table.lines().collect();
        assert_eq!(lines.len(), 4);
        assert!(lines[0].contains("Annotator A") && lines[0].contains("Annotator B"));
        assert_eq!(lines[1].len(), lines[2].len());
        assert_eq!(lines[2].len(), lines[3].len());
    }
}
