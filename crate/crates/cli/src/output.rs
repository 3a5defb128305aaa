//! Text renderers shared by the subcommands.

use std::fmt::Display;

use serde_json::Value;

/// `n a(n)` lines, `n` from `first` upwards, as in an OEIS b-file.
pub fn bfile<T: Display>(first: usize, values: &[T]) -> String {
    let mut out = String::new();
    for (i, v) in values.iter().enumerate() {
        out.push_str(&format!("{} {v}\n", first + i));
    }
    out
}

pub fn space_separated<T: Display>(values: &[T]) -> String {
    let parts: Vec<String> = values.iter().map(|v| v.to_string()).collect();
    format!("{}\n", parts.join(" "))
}

/// CSV with a header row. Cells here never contain commas or quotes.
pub fn csv(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut out = header.join(",");
    out.push('\n');
    for row in rows {
        out.push_str(&row.join(","));
        out.push('\n');
    }
    out
}

/// Pretty JSON with sorted keys and a trailing newline, so that parsing and
/// re-emitting gives back the same bytes.
pub fn json(value: &Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("json values always serialize");
    s.push('\n');
    s
}

/// Left-aligned columns separated by two spaces.
pub fn aligned(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.len());
        }
    }
    let line = |cells: Vec<&str>| {
        let padded: Vec<String> = cells
            .iter()
            .zip(&widths)
            .map(|(c, w)| format!("{c:<w$}"))
            .collect();
        format!("{}\n", padded.join("  ").trim_end())
    };
    let mut out = line(header.to_vec());
    for row in rows {
        out.push_str(&line(row.iter().map(String::as_str).collect()));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn bfile_lines() {
        assert_eq!(bfile(1, &[3, 9, 54]), "1 3\n2 9\n3 54\n");
        assert_eq!(bfile(1, &Vec::<u8>::new()), "");
    }

    #[test]
    fn json_round_trips() {
        let v = json!({"z": ["1", "2"], "a": {"k": 3}});
        let s = json(&v);
        let back: Value = serde_json::from_str(&s).unwrap();
        assert_eq!(json(&back), s);
    }

    #[test]
    fn aligned_columns() {
        let out = aligned(&["n", "value"], &[vec!["10".into(), "1".into()]]);
        assert_eq!(out, "n   value\n10  1\n");
    }
}
