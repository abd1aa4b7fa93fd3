//! Text format for matrices:
//!
//! ```text
//! fpmat p=<p> rows=<r> cols=<c>
//! <c whitespace-separated digits>   (r lines)
//! ```

use super::field::PrimeField;
use super::matrix::FpMatrix;
use crate::{Error, Result};

/// Parses `key=value` pairs from a header line after the leading keyword.
pub(crate) fn header_fields<'a>(
    line: &'a str,
    keyword: &str,
    file: &str,
    lineno: usize,
) -> Result<Vec<(&'a str, &'a str)>> {
    let mut parts = line.split_whitespace();
    if parts.next() != Some(keyword) {
        return Err(Error::Parse {
            file: file.to_string(),
            line: lineno,
            msg: format!("expected header starting with `{keyword}`"),
        });
    }
    parts
        .map(|kv| {
            kv.split_once('=').ok_or_else(|| Error::Parse {
                file: file.to_string(),
                line: lineno,
                msg: format!("malformed header field `{kv}`"),
            })
        })
        .collect()
}

pub(crate) fn header_usize(
    fields: &[(&str, &str)],
    key: &str,
    file: &str,
    lineno: usize,
) -> Result<usize> {
    let v = fields
        .iter()
        .find(|(k, _)| *k == key)
        .ok_or_else(|| Error::Parse {
            file: file.to_string(),
            line: lineno,
            msg: format!("missing header field `{key}`"),
        })?
        .1;
    v.parse().map_err(|_| Error::Parse {
        file: file.to_string(),
        line: lineno,
        msg: format!("bad value `{v}` for `{key}`"),
    })
}

/// Line cursor that tracks 1-based line numbers and skips blank lines.
pub(crate) struct Lines<'a> {
    inner: std::iter::Enumerate<std::str::Lines<'a>>,
    pub file: String,
    pub last: usize,
}

impl<'a> Lines<'a> {
    pub fn new(text: &'a str, file: &str) -> Self {
        Self {
            inner: text.lines().enumerate(),
            file: file.to_string(),
            last: 0,
        }
    }

    pub fn next_line(&mut self) -> Option<(usize, &'a str)> {
        for (i, l) in self.inner.by_ref() {
            let t = l.trim();
            if !t.is_empty() {
                self.last = i + 1;
                return Some((i + 1, t));
            }
        }
        None
    }

    pub fn expect_line(&mut self, what: &str) -> Result<(usize, &'a str)> {
        let last = self.last;
        self.next_line().ok_or_else(|| Error::Parse {
            file: self.file.clone(),
            line: last + 1,
            msg: format!("unexpected end of file, expected {what}"),
        })
    }

    pub fn err(&self, line: usize, msg: impl Into<String>) -> Error {
        Error::Parse {
            file: self.file.clone(),
            line,
            msg: msg.into(),
        }
    }
}

pub(crate) fn read_matrix_block(lines: &mut Lines<'_>) -> Result<FpMatrix> {
    let (ln, header) = lines.expect_line("fpmat header")?;
    let fields = header_fields(header, "fpmat", &lines.file, ln)?;
    let p = header_usize(&fields, "p", &lines.file, ln)?;
    let rows = header_usize(&fields, "rows", &lines.file, ln)?;
    let cols = header_usize(&fields, "cols", &lines.file, ln)?;
    let field = PrimeField::new(p as u32).map_err(|e| lines.err(ln, e.to_string()))?;
    let mut data = Vec::with_capacity(rows * cols);
    for _ in 0..rows {
        let (ln, line) = lines.expect_line("matrix row")?;
        let before = data.len();
        for tok in line.split_whitespace() {
            let v: u32 = tok
                .parse()
                .map_err(|_| lines.err(ln, format!("bad entry `{tok}`")))?;
            if v >= p as u32 {
                return Err(lines.err(ln, format!("entry {v} not in [0,{p})")));
            }
            data.push(v as i64);
        }
        if data.len() - before != cols {
            return Err(lines.err(
                ln,
                format!("expected {cols} entries, found {}", data.len() - before),
            ));
        }
    }
    FpMatrix::from_vec(field, rows, cols, data)
}

/// Parses a single matrix in the `fpmat` format.
pub fn parse_matrix(text: &str, file: &str) -> Result<FpMatrix> {
    let mut lines = Lines::new(text, file);
    read_matrix_block(&mut lines)
}

pub fn write_matrix(m: &FpMatrix) -> String {
    let mut out = format!("fpmat p={} rows={} cols={}\n", m.p(), m.rows(), m.cols());
    for i in 0..m.rows() {
        let row: Vec<String> = m.row(i).iter().map(|x| x.to_string()).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}
