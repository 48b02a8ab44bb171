use std::fmt::Write;

use symbolic_powers::format::IdealDocument;
use symbolic_powers::MonomialIdeal;

use crate::OutputFormat;

/// Left-aligned text table with a header row.
pub fn table(headers: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = headers.iter().map(|h| h.chars().count()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let mut out = String::new();
    let mut line = |cells: Vec<&str>| {
        let padded: Vec<String> = cells
            .iter()
            .zip(&widths)
            .map(|(c, &w)| format!("{c:<w$}"))
            .collect();
        writeln!(out, "{}", padded.join("  ").trim_end()).unwrap();
    };
    line(headers.to_vec());
    line(
        widths
            .iter()
            .map(|&w| "-".repeat(w))
            .collect::<Vec<_>>()
            .iter()
            .map(String::as_str)
            .collect(),
    );
    for row in rows {
        line(row.iter().map(String::as_str).collect());
    }
    out
}

pub fn csv(headers: &[&str], rows: &[Vec<String>]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(headers).expect("in-memory csv");
    for row in rows {
        w.write_record(row).expect("in-memory csv");
    }
    String::from_utf8(w.into_inner().expect("in-memory csv")).expect("utf-8")
}

pub fn json(value: &serde_json::Value) -> String {
    let mut s = serde_json::to_string(value).expect("json value");
    s.push('\n');
    s
}

pub fn rows(
    headers: &[&str],
    rows: &[Vec<String>],
    format: OutputFormat,
    json_value: impl FnOnce() -> serde_json::Value,
) -> String {
    match format {
        OutputFormat::Table => table(headers, rows),
        OutputFormat::Csv => csv(headers, rows),
        OutputFormat::Json => json(&json_value()),
    }
}

pub fn ideal(ideal: &MonomialIdeal, format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => {
            json(&serde_json::to_value(IdealDocument::from_ideal(ideal)).expect("ideal"))
        }
        OutputFormat::Csv => {
            let gens: Vec<Vec<String>> = ideal
                .generators()
                .iter()
                .map(|g| vec![g.display(ideal.context()).to_string()])
                .collect();
            csv(&["generator"], &gens)
        }
        OutputFormat::Table => {
            let mut out = String::new();
            writeln!(out, "vars: {}", ideal.context().var_names().join(", ")).unwrap();
            writeln!(out, "generators: {}", ideal.num_generators()).unwrap();
            for g in ideal.generators() {
                writeln!(out, "  {}", g.display(ideal.context())).unwrap();
            }
            out
        }
    }
}
