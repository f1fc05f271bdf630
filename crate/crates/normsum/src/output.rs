use std::fmt::Write as _;

use clap::ValueEnum;
use serde_json::Value;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum OutputFormat {
    #[default]
    Json,
    Csv,
    Table,
}

/// Something the CLI can print in every format.
pub trait Render {
    fn to_json(&self) -> Value;
    fn headers(&self) -> Vec<&'static str>;
    fn rows(&self) -> Vec<Vec<String>>;
}

pub fn render(item: &dyn Render, format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => {
            let mut s = item.to_json().to_string();
            s.push('\n');
            s
        }
        OutputFormat::Csv => to_csv(&item.headers(), &item.rows()),
        OutputFormat::Table => to_table(&item.headers(), &item.rows()),
    }
}

pub fn to_csv(headers: &[&str], rows: &[Vec<String>]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(headers).expect("write to memory");
    for row in rows {
        w.write_record(row).expect("write to memory");
    }
    String::from_utf8(w.into_inner().expect("flush to memory")).expect("csv is utf-8")
}

/// Left-aligned columns separated by two spaces.
pub fn to_table(headers: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = headers.iter().map(|h| h.chars().count()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let mut out = String::new();
    let mut line = |cells: &mut dyn Iterator<Item = &str>| {
        let mut s = String::new();
        for (i, cell) in cells.enumerate() {
            if i > 0 {
                s.push_str("  ");
            }
            let pad = widths[i].saturating_sub(cell.chars().count());
            s.push_str(cell);
            s.extend(std::iter::repeat_n(' ', pad));
        }
        let _ = writeln!(out, "{}", s.trim_end());
    };
    line(&mut headers.iter().copied());
    for row in rows {
        line(&mut row.iter().map(String::as_str));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_alignment() {
        let rows = vec![
            vec!["5".to_string(), "yes".to_string()],
            vec!["403".to_string(), "no".to_string()],
        ];
        assert_eq!(
            to_table(&["d", "ok"], &rows),
            "d    ok\n5    yes\n403  no\n"
        );
    }

    #[test]
    fn csv_quotes_separators() {
        let rows = vec![vec!["2|(a+b)".to_string(), "x,y".to_string()]];
        assert_eq!(to_csv(&["c", "v"], &rows), "c,v\n2|(a+b),\"x,y\"\n");
    }
}
