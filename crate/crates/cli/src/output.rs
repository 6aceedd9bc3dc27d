//! JSON lines, aligned tables and CSV.

use std::io::Write;
use std::path::Path;

use serde_json::Value;

use crate::{CliError, Format};

fn cell(v: &Value) -> String {
    match v {
        Value::Null => String::new(),
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

/// Column names in first-seen order across all records.
fn columns(records: &[Value]) -> Vec<String> {
    let mut cols: Vec<String> = Vec::new();
    for r in records {
        if let Value::Object(map) = r {
            for k in map.keys() {
                if !cols.contains(k) {
                    cols.push(k.clone());
                }
            }
        }
    }
    cols
}

fn rows(records: &[Value], cols: &[String]) -> Vec<Vec<String>> {
    records.iter().map(|r| cols.iter().map(|c| r.get(c).map(cell).unwrap_or_default()).collect()).collect()
}

pub fn write(out: &mut dyn Write, format: Format, records: &[Value]) -> Result<(), CliError> {
    match format {
        Format::Json => {
            for r in records {
                writeln!(out, "{r}")?;
            }
        }
        Format::Table => {
            let cols = columns(records);
            let body = rows(records, &cols);
            let widths: Vec<usize> = cols
                .iter()
                .enumerate()
                .map(|(i, c)| body.iter().map(|r| r[i].chars().count()).chain([c.len()]).max().unwrap_or(0))
                .collect();
            let line = |cells: &[String]| {
                let padded: Vec<String> = cells.iter().zip(&widths).map(|(c, w)| format!("{c:<w$}")).collect();
                padded.join("  ").trim_end().to_string()
            };
            writeln!(out, "{}", line(&cols))?;
            for r in &body {
                writeln!(out, "{}", line(r))?;
            }
        }
    }
    Ok(())
}

pub fn write_csv(path: &Path, records: &[Value]) -> Result<(), CliError> {
    let cols = columns(records);
    let mut w = csv::Writer::from_path(path)?;
    w.write_record(&cols)?;
    for r in rows(records, &cols) {
        w.write_record(&r)?;
    }
    w.flush()?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn table_aligns_columns() {
        let recs = vec![json!({"a": 1, "bb": "x"}), json!({"a": 100, "bb": null})];
        let mut buf = Vec::new();
        write(&mut buf, Format::Table, &recs).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(text, "a    bb\n1    x\n100\n");
    }
}
