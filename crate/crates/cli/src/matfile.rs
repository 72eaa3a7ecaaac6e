//! The matrix file format.
//!
//! ```text
//! # comment
//! vars: x y z
//! rows: 2
//! cols: 2
//! [1,1] = x^2 - 1/2
//! [2,2] = y*z
//! ```
//!
//! Entries are 1-indexed and default to zero. Headers must precede entries.

use std::collections::BTreeSet;

use polysmith::polyring::parse_polynomial_at;
use polysmith::{PolyMatrix, Polynomial, VarSet};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("line {line}, column {column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

fn error(line: usize, column: usize, message: impl Into<String>) -> ParseError {
    ParseError {
        line,
        column,
        message: message.into(),
    }
}

impl From<polysmith::Error> for ParseError {
    fn from(e: polysmith::Error) -> Self {
        match e {
            polysmith::Error::Parse {
                line,
                column,
                message,
            } => error(line, column, message),
            other => error(1, 1, other.to_string()),
        }
    }
}

/// 1-based character column of byte offset `at` in `line`.
fn column_of(line: &str, at: usize) -> usize {
    line[..at].chars().count() + 1
}

fn header<'a>(line: &'a str, key: &str) -> Option<&'a str> {
    let rest = line.trim_start().strip_prefix(key)?;
    rest.trim_start().strip_prefix(':')
}

fn parse_count(value: &str, line_no: usize, line: &str) -> Result<usize, ParseError> {
    let at = line.len() - value.trim_start().len();
    value
        .trim()
        .parse()
        .map_err(|_| error(line_no, column_of(line, at), format!("expected a count, found `{}`", value.trim())))
}

/// `(i, j, offset of the expression)` for an entry line `[i,j] = expr`.
fn entry_head(line: &str, line_no: usize) -> Result<(usize, usize, usize), ParseError> {
    let open = line.find('[').expect("entry lines start with `[`");
    let close = line
        .find(']')
        .ok_or_else(|| error(line_no, column_of(line, open), "unclosed `[`"))?;
    let inside = &line[open + 1..close];
    let bad = || error(line_no, column_of(line, open), format!("expected `[row,col]`, found `[{inside}]`"));
    let (i, j) = inside.split_once(',').ok_or_else(bad)?;
    let i: usize = i.trim().parse().map_err(|_| bad())?;
    let j: usize = j.trim().parse().map_err(|_| bad())?;
    let after = &line[close + 1..];
    let eq = after
        .find('=')
        .filter(|&k| after[..k].trim().is_empty())
        .ok_or_else(|| error(line_no, column_of(line, close + 1), "expected `=` after the index"))?;
    Ok((i, j, close + 1 + eq + 1))
}

/// Parse a matrix file.
pub fn parse_matrix(text: &str) -> Result<PolyMatrix, ParseError> {
    let mut vars: Option<VarSet> = None;
    let mut rows: Option<usize> = None;
    let mut cols: Option<usize> = None;
    let mut entries: Vec<(usize, usize, Polynomial)> = Vec::new();
    let mut seen = BTreeSet::new();
    let mut last_line = 1;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        last_line = line_no;
        let line = raw.split('#').next().unwrap_or("");
        if line.trim().is_empty() {
            continue;
        }
        let start = column_of(line, line.len() - line.trim_start().len());
        if let Some(v) = header(line, "vars") {
            if vars.is_some() {
                return Err(error(line_no, start, "duplicate `vars:` header"));
            }
            let names: Vec<&str> = v.split_whitespace().collect();
            if names.is_empty() {
                return Err(error(line_no, start, "`vars:` needs at least one variable"));
            }
            vars = Some(VarSet::new(names).map_err(|e| error(line_no, start, e.to_string()))?);
        } else if let Some(v) = header(line, "rows") {
            if rows.is_some() {
                return Err(error(line_no, start, "duplicate `rows:` header"));
            }
            rows = Some(parse_count(v, line_no, line)?);
        } else if let Some(v) = header(line, "cols") {
            if cols.is_some() {
                return Err(error(line_no, start, "duplicate `cols:` header"));
            }
            cols = Some(parse_count(v, line_no, line)?);
        } else if line.trim_start().starts_with('[') {
            let (Some(vs), Some(r), Some(c)) = (&vars, rows, cols) else {
                return Err(error(line_no, start, "entries must follow the `vars:`, `rows:` and `cols:` headers"));
            };
            let (i, j, at) = entry_head(line, line_no)?;
            if i == 0 || j == 0 || i > r || j > c {
                return Err(error(
                    line_no,
                    start,
                    format!("entry [{i},{j}] is outside a {r}x{c} matrix"),
                ));
            }
            if !seen.insert((i, j)) {
                return Err(error(line_no, start, format!("entry [{i},{j}] is given twice")));
            }
            let expr = &line[at..];
            let p = parse_polynomial_at(expr, vs, line_no, column_of(line, at))?;
            entries.push((i - 1, j - 1, p));
        } else {
            return Err(error(line_no, start, format!("unrecognised line `{}`", line.trim())));
        }
    }
    let missing = |what: &str| error(last_line, 1, format!("missing `{what}:` header"));
    let vars = vars.ok_or_else(|| missing("vars"))?;
    let rows = rows.ok_or_else(|| missing("rows"))?;
    let cols = cols.ok_or_else(|| missing("cols"))?;
    let mut m = PolyMatrix::zeros(&vars, rows, cols);
    for (i, j, p) in entries {
        m.set(i, j, p);
    }
    Ok(m)
}

/// Render a matrix in the file format, omitting zero entries.
pub fn render_matrix(m: &PolyMatrix) -> String {
    let mut out = format!(
        "vars: {}\nrows: {}\ncols: {}\n",
        m.vars().names().join(" "),
        m.rows(),
        m.cols()
    );
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            let p = m.get(i, j);
            if !p.is_zero() {
                out.push_str(&format!("[{},{}] = {p}\n", i + 1, j + 1));
            }
        }
    }
    out
}
