use std::fmt::Write as _;

use super::report::{Report, ShapeReport};
use super::OutputFormat;
use crate::error::{Error, Result};

pub fn emit(report: &Report, format: OutputFormat) -> Result<String> {
    match format {
        OutputFormat::Json => emit_json(report),
        OutputFormat::Csv => emit_csv(report),
        OutputFormat::Latex => Ok(emit_latex(report)),
    }
}

/// Pretty-printed JSON with a trailing newline.
pub fn emit_json(report: &Report) -> Result<String> {
    let mut s = serde_json::to_string_pretty(report)
        .map_err(|e| Error::InvalidInput(format!("json encoding failed: {e}")))?;
    s.push('\n');
    Ok(s)
}

fn graded_string(s: &ShapeReport) -> String {
    s.graded_dim
        .as_ref()
        .map(|g| g.iter().map(|(d, m)| format!("{d}:{m}")).collect::<Vec<_>>().join(" "))
        .unwrap_or_default()
}

fn opt<T: ToString>(x: Option<T>) -> String {
    x.map(|v| v.to_string()).unwrap_or_default()
}

/// CSV sections separated by blank lines: a summary row, the shape table,
/// then the decomposition matrix, Gram matrices and official words when
/// present.
pub fn emit_csv(report: &Report) -> Result<String> {
    let csv_err = |e: csv::Error| Error::InvalidInput(format!("csv encoding failed: {e}"));
    let mut sections: Vec<Vec<Vec<String>>> = Vec::new();

    let mut summary = vec![vec!["command".into(), "n".into(), "r".into(), "e".into(), "weight".into()]];
    summary.push(vec![
        report.command.clone(),
        report.n.to_string(),
        report.r.to_string(),
        report.e.to_string(),
        report
            .weight
            .as_ref()
            .map(|w| w.iter().map(ToString::to_string).collect::<Vec<_>>().join(" "))
            .unwrap_or_default(),
    ]);
    if let Some(total) = report.total_dimension {
        summary[0].push("totalDimension".into());
        summary[1].push(total.to_string());
    }
    if let Some(ss) = report.semisimple {
        summary[0].push("semisimple".into());
        summary[1].push(ss.to_string());
    }
    if let Some(p) = &report.semisimple_params {
        summary[0].push("semisimpleParams".into());
        summary[1].push(p.semisimple.to_string());
    }
    if let Some(o) = &report.oracle {
        summary[0].extend(["oracleDimension".into(), "expectedDimension".into(), "agrees".into()]);
        summary[1].extend([o.dimension.to_string(), o.expected_dimension.to_string(), o.agrees.to_string()]);
    }
    sections.push(summary);

    if !report.shapes.is_empty() {
        let mut table = vec![vec![
            "shape".into(),
            "heights".into(),
            "dimCell".into(),
            "dimSimple".into(),
            "gradedDim".into(),
        ]];
        for s in &report.shapes {
            table.push(vec![
                s.label.clone(),
                s.heights.iter().map(ToString::to_string).collect::<Vec<_>>().join(" "),
                s.dim_cell.to_string(),
                opt(s.dim_simple),
                graded_string(s),
            ]);
        }
        sections.push(table);
    }

    if let Some(poset) = &report.poset {
        let mut table = vec![vec!["lower".to_string(), "upper".to_string()]];
        for [a, b] in &poset.covers {
            table.push(vec![poset.elements[*a].clone(), poset.elements[*b].clone()]);
        }
        sections.push(table);
    }

    if let (Some(labels), Some(matrix)) = (&report.labels, &report.decomposition) {
        let mut table =
            vec![std::iter::once("decomposition".to_string()).chain(labels.iter().cloned()).collect()];
        for (label, row) in labels.iter().zip(matrix) {
            table.push(std::iter::once(label.clone()).chain(row.iter().map(ToString::to_string)).collect());
        }
        sections.push(table);
    }

    for s in &report.shapes {
        if let Some(gram) = &s.gram {
            let mut table = vec![vec![format!("gram {}", s.label)]];
            table.extend(gram.iter().map(|row| row.iter().map(ToString::to_string).collect()));
            sections.push(table);
        }
        if let Some(words) = &s.words {
            let mut table = vec![vec![format!("words {}", s.label)]];
            table.extend(
                words.iter().map(|w| vec![w.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")]),
            );
            sections.push(table);
        }
    }

    let mut out = String::new();
    for (i, section) in sections.iter().enumerate() {
        if i > 0 {
            out.push('\n');
        }
        let mut writer = csv::WriterBuilder::new().flexible(true).from_writer(Vec::new());
        for record in section {
            writer.write_record(record).map_err(csv_err)?;
        }
        let bytes = writer.into_inner().map_err(|e| Error::InvalidInput(e.to_string()))?;
        out.push_str(&String::from_utf8(bytes).expect("csv output is utf-8"));
    }
    Ok(out)
}

fn tabular(out: &mut String, header: &[String], rows: &[Vec<String>]) {
    let cols = "l".to_string() + &"c".repeat(header.len().saturating_sub(1));
    let _ = writeln!(out, "\\begin{{tabular}}{{{cols}}}");
    out.push_str("\\hline\n");
    let _ = writeln!(out, "{} \\\\", header.join(" & "));
    out.push_str("\\hline\n");
    for row in rows {
        let _ = writeln!(out, "{} \\\\", row.join(" & "));
    }
    out.push_str("\\hline\n\\end{tabular}\n");
}

fn math(label: &str) -> String {
    format!("${label}$")
}

/// Plain `tabular` blocks labelled by height vectors such as `(1^3|1)`.
pub fn emit_latex(report: &Report) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "% {} n={} r={} e={}", report.command, report.n, report.r, report.e);
    if let Some(total) = report.total_dimension {
        let _ = writeln!(out, "% total dimension {total}");
    }
    if let Some(ss) = report.semisimple {
        let _ = writeln!(out, "% semisimple: {ss}");
    }
    if let Some(p) = &report.semisimple_params {
        let _ = writeln!(out, "% semisimple for parameters: {}", p.semisimple);
    }
    if let Some(o) = &report.oracle {
        let _ = writeln!(
            out,
            "% oracle dimension {} expected {} agrees: {}",
            o.dimension, o.expected_dimension, o.agrees
        );
    }
    if !report.shapes.is_empty() {
        let header: Vec<String> =
            ["shape", "$\\dim W$", "$\\dim L$", "degrees"].iter().map(|s| s.to_string()).collect();
        let rows: Vec<Vec<String>> = report
            .shapes
            .iter()
            .map(|s| vec![math(&s.label), s.dim_cell.to_string(), opt(s.dim_simple), graded_string(s)])
            .collect();
        tabular(&mut out, &header, &rows);
    }
    if let Some(poset) = &report.poset {
        let rows: Vec<Vec<String>> = poset
            .covers
            .iter()
            .map(|[a, b]| vec![math(&poset.elements[*a]), math(&poset.elements[*b])])
            .collect();
        tabular(&mut out, &["lower".into(), "upper".into()], &rows);
    }
    if let (Some(labels), Some(matrix)) = (&report.labels, &report.decomposition) {
        let header: Vec<String> =
            std::iter::once(String::new()).chain(labels.iter().map(|l| math(l))).collect();
        let rows: Vec<Vec<String>> = labels
            .iter()
            .zip(matrix)
            .map(|(l, row)| std::iter::once(math(l)).chain(row.iter().map(ToString::to_string)).collect())
            .collect();
        tabular(&mut out, &header, &rows);
    }
    for s in &report.shapes {
        if let Some(gram) = &s.gram {
            let _ = writeln!(out, "% Gram matrix of {}", s.label);
            let header: Vec<String> =
                std::iter::once(math(&s.label)).chain((1..=gram.len()).map(|i| i.to_string())).collect();
            let rows: Vec<Vec<String>> = gram
                .iter()
                .enumerate()
                .map(|(i, row)| {
                    std::iter::once((i + 1).to_string()).chain(row.iter().map(ToString::to_string)).collect()
                })
                .collect();
            tabular(&mut out, &header, &rows);
        }
    }
    out
}
