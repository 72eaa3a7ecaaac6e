//! Report documents and their two renderings.
//!
//! The JSON rendering is the serde form of [`ReportDocument`]. The human
//! rendering is one `key: value` line per field in a fixed order, with
//! backslash and newline escaped in values. Both parse back to the same
//! document.

use serde::{Deserialize, Serialize};

pub const FORMAT_VERSION: u32 = 1;

/// Rows of entries in the polynomial text grammar.
pub type MatrixDoc = Vec<Vec<String>>;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub format_version: u32,
    #[serde(flatten)]
    pub report: Report,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "report", rename_all = "kebab-case")]
pub enum Report {
    Equivalence(EquivalenceDoc),
    Form(FormDoc),
    Reduction(ReductionDoc),
    Verification(VerificationDoc),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EquivalenceDoc {
    pub vars: Vec<String>,
    pub rows: usize,
    pub cols: usize,
    pub rank: usize,
    pub shape: String,
    pub shape_detail: String,
    pub classified: String,
    /// `d_k` for `k = 1..=rank`.
    pub dk: Vec<String>,
    /// Whether `J_k` is the unit ideal, for `k = 1..=rank`.
    pub jk: Vec<bool>,
    pub theorem: String,
    pub verdict: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness_u: Option<MatrixDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness_v: Option<MatrixDoc>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FormDoc {
    pub vars: Vec<String>,
    pub rows: usize,
    pub cols: usize,
    pub rank: usize,
    pub invariant_factors: Vec<String>,
    pub smith: MatrixDoc,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NamedMatrix {
    pub name: String,
    pub matrix: MatrixDoc,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StepDoc {
    pub description: String,
    pub left: MatrixDoc,
    pub right: MatrixDoc,
    pub state: MatrixDoc,
    pub aux: Vec<NamedMatrix>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReductionDoc {
    pub vars: Vec<String>,
    pub rows: usize,
    pub cols: usize,
    pub verdict: String,
    pub shape: String,
    pub degree_bound: u32,
    pub input: MatrixDoc,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub conjugation: Option<Vec<String>>,
    pub steps: Vec<StepDoc>,
    /// `success`, or the failure class.
    pub outcome: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub failure_detail: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub u: Option<MatrixDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub v: Option<MatrixDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub s: Option<MatrixDoc>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationDoc {
    pub vars: Vec<String>,
    /// `reduced` for `U F V = S`, `factored` for `F = U S V`.
    pub orientation: String,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ReportError {
    #[error("line {line}: {message}")]
    Human { line: usize, message: String },
    #[error("json: {0}")]
    Json(String),
}

impl ReportDocument {
    pub fn new(report: Report) -> Self {
        ReportDocument {
            format_version: FORMAT_VERSION,
            report,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    pub fn from_json(text: &str) -> Result<Self, ReportError> {
        serde_json::from_str(text).map_err(|e| ReportError::Json(e.to_string()))
    }

    pub fn to_human(&self) -> String {
        let mut w = Writer::default();
        w.put("format-version", self.format_version.to_string());
        match &self.report {
            Report::Equivalence(d) => {
                w.put("report", "equivalence");
                w.put("vars", d.vars.join(" "));
                w.put("size", format!("{}x{}", d.rows, d.cols));
                w.put("rank", d.rank.to_string());
                w.put("shape", &d.shape);
                w.put("shape-detail", &d.shape_detail);
                w.put("classified", &d.classified);
                for (k, (dk, jk)) in d.dk.iter().zip(&d.jk).enumerate() {
                    w.put(&format!("d_{}", k + 1), dk);
                    w.put(&format!("J_{}", k + 1), if *jk { "unit" } else { "proper" });
                }
                w.put("theorem", &d.theorem);
                w.put("verdict", &d.verdict);
                if let Some(u) = &d.witness_u {
                    w.put("U", matrix_text(u));
                }
                if let Some(v) = &d.witness_v {
                    w.put("V", matrix_text(v));
                }
            }
            Report::Form(d) => {
                w.put("report", "form");
                w.put("vars", d.vars.join(" "));
                w.put("size", format!("{}x{}", d.rows, d.cols));
                w.put("rank", d.rank.to_string());
                for (k, p) in d.invariant_factors.iter().enumerate() {
                    w.put(&format!("phi_{}", k + 1), p);
                }
                w.put("S", matrix_text(&d.smith));
            }
            Report::Reduction(d) => {
                w.put("report", "reduction");
                w.put("vars", d.vars.join(" "));
                w.put("size", format!("{}x{}", d.rows, d.cols));
                w.put("verdict", &d.verdict);
                w.put("shape", &d.shape);
                w.put("degree-bound", d.degree_bound.to_string());
                w.put("input", matrix_text(&d.input));
                if let Some(c) = &d.conjugation {
                    w.put("conjugation", c.join("; "));
                }
                for (i, s) in d.steps.iter().enumerate() {
                    let n = i + 1;
                    w.put(&format!("step {n}"), &s.description);
                    w.put(&format!("step {n} left"), matrix_text(&s.left));
                    w.put(&format!("step {n} right"), matrix_text(&s.right));
                    w.put(&format!("step {n} state"), matrix_text(&s.state));
                    for a in &s.aux {
                        w.put(&format!("step {n} aux {}", a.name), matrix_text(&a.matrix));
                    }
                }
                w.put("outcome", &d.outcome);
                if let Some(x) = &d.failure_detail {
                    w.put("failure-detail", x);
                }
                for (key, m) in [("U", &d.u), ("V", &d.v), ("S", &d.s)] {
                    if let Some(m) = m {
                        w.put(key, matrix_text(m));
                    }
                }
            }
            Report::Verification(d) => {
                w.put("report", "verification");
                w.put("vars", d.vars.join(" "));
                w.put("orientation", &d.orientation);
                w.put("holds", d.holds.to_string());
            }
        }
        w.out
    }

    pub fn from_human(text: &str) -> Result<Self, ReportError> {
        let mut r = Reader::new(text)?;
        let format_version = r.parse("format-version")?;
        let kind = r.take("report")?;
        let report = match kind.as_str() {
            "equivalence" => {
                let vars = r.vars()?;
                let (rows, cols) = r.size()?;
                let rank = r.parse("rank")?;
                let shape = r.take("shape")?;
                let shape_detail = r.take("shape-detail")?;
                let classified = r.take("classified")?;
                let (mut dk, mut jk) = (Vec::new(), Vec::new());
                while let Some(p) = r.optional(&format!("d_{}", dk.len() + 1)) {
                    dk.push(p);
                    let key = format!("J_{}", jk.len() + 1);
                    jk.push(match r.take(&key)?.as_str() {
                        "unit" => true,
                        "proper" => false,
                        other => return Err(r.error(format!("`{key}` must be unit or proper, found `{other}`"))),
                    });
                }
                let theorem = r.take("theorem")?;
                let verdict = r.take("verdict")?;
                let witness_u = r.optional_matrix("U")?;
                let witness_v = r.optional_matrix("V")?;
                Report::Equivalence(EquivalenceDoc {
                    vars,
                    rows,
                    cols,
                    rank,
                    shape,
                    shape_detail,
                    classified,
                    dk,
                    jk,
                    theorem,
                    verdict,
                    witness_u,
                    witness_v,
                })
            }
            "form" => {
                let vars = r.vars()?;
                let (rows, cols) = r.size()?;
                let rank = r.parse("rank")?;
                let mut invariant_factors = Vec::new();
                while let Some(p) = r.optional(&format!("phi_{}", invariant_factors.len() + 1)) {
                    invariant_factors.push(p);
                }
                let smith = r.matrix("S")?;
                Report::Form(FormDoc {
                    vars,
                    rows,
                    cols,
                    rank,
                    invariant_factors,
                    smith,
                })
            }
            "reduction" => {
                let vars = r.vars()?;
                let (rows, cols) = r.size()?;
                let verdict = r.take("verdict")?;
                let shape = r.take("shape")?;
                let degree_bound = r.parse("degree-bound")?;
                let input = r.matrix("input")?;
                let conjugation = r
                    .optional("conjugation")
                    .map(|c| c.split("; ").map(str::to_string).collect());
                let mut steps = Vec::new();
                while let Some(description) = r.optional(&format!("step {}", steps.len() + 1)) {
                    let n = steps.len() + 1;
                    let left = r.matrix(&format!("step {n} left"))?;
                    let right = r.matrix(&format!("step {n} right"))?;
                    let state = r.matrix(&format!("step {n} state"))?;
                    let prefix = format!("step {n} aux ");
                    let mut aux = Vec::new();
                    while let Some(name) = r.peek_key().and_then(|k| k.strip_prefix(&prefix)).map(str::to_string) {
                        let matrix = r.matrix(&format!("{prefix}{name}"))?;
                        aux.push(NamedMatrix { name, matrix });
                    }
                    steps.push(StepDoc {
                        description,
                        left,
                        right,
                        state,
                        aux,
                    });
                }
                let outcome = r.take("outcome")?;
                let failure_detail = r.optional("failure-detail");
                let u = r.optional_matrix("U")?;
                let v = r.optional_matrix("V")?;
                let s = r.optional_matrix("S")?;
                Report::Reduction(ReductionDoc {
                    vars,
                    rows,
                    cols,
                    verdict,
                    shape,
                    degree_bound,
                    input,
                    conjugation,
                    steps,
                    outcome,
                    failure_detail,
                    u,
                    v,
                    s,
                })
            }
            "verification" => {
                let vars = r.vars()?;
                let orientation = r.take("orientation")?;
                let holds = r.parse("holds")?;
                Report::Verification(VerificationDoc {
                    vars,
                    orientation,
                    holds,
                })
            }
            other => return Err(r.error(format!("unknown report kind `{other}`"))),
        };
        r.finish()?;
        Ok(ReportDocument {
            format_version,
            report,
        })
    }
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('\n', "\\n")
}

fn unescape(s: &str) -> String {
    let mut out = String::with_capacity(s.len());
    let mut chars = s.chars();
    while let Some(c) = chars.next() {
        if c == '\\' {
            match chars.next() {
                Some('n') => out.push('\n'),
                Some(other) => out.push(other),
                None => out.push('\\'),
            }
        } else {
            out.push(c);
        }
    }
    out
}

/// `[[a, b], [c, d]]`. Entries never contain brackets or commas.
pub fn matrix_text(m: &MatrixDoc) -> String {
    let rows: Vec<String> = m.iter().map(|r| format!("[{}]", r.join(", "))).collect();
    format!("[{}]", rows.join(", "))
}

pub fn parse_matrix_text(s: &str) -> Option<MatrixDoc> {
    let inner = s.trim().strip_prefix('[')?.strip_suffix(']')?.trim();
    let mut rows = Vec::new();
    let mut rest = inner;
    while !rest.is_empty() {
        let body = rest.strip_prefix('[')?;
        let close = body.find(']')?;
        let row = &body[..close];
        rows.push(if row.trim().is_empty() {
            Vec::new()
        } else {
            row.split(',').map(|e| e.trim().to_string()).collect()
        });
        rest = body[close + 1..].trim_start();
        if let Some(r) = rest.strip_prefix(',') {
            rest = r.trim_start();
        } else if !rest.is_empty() {
            return None;
        }
    }
    Some(rows)
}

#[derive(Default)]
struct Writer {
    out: String,
}

impl Writer {
    fn put(&mut self, key: &str, value: impl AsRef<str>) {
        self.out.push_str(key);
        self.out.push_str(": ");
        self.out.push_str(&escape(value.as_ref()));
        self.out.push('\n');
    }
}

struct Reader {
    fields: Vec<(usize, String, String)>,
    pos: usize,
}

impl Reader {
    fn new(text: &str) -> Result<Self, ReportError> {
        let mut fields = Vec::new();
        for (i, line) in text.lines().enumerate() {
            if line.trim().is_empty() {
                continue;
            }
            let (k, v) = line.split_once(": ").or_else(|| line.strip_suffix(':').map(|k| (k, ""))).ok_or(
                ReportError::Human {
                    line: i + 1,
                    message: "expected `key: value`".into(),
                },
            )?;
            fields.push((i + 1, k.to_string(), unescape(v)));
        }
        Ok(Reader { fields, pos: 0 })
    }

    fn error(&self, message: String) -> ReportError {
        let line = self
            .fields
            .get(self.pos)
            .or(self.fields.last())
            .map_or(1, |f| f.0);
        ReportError::Human { line, message }
    }

    fn peek_key(&self) -> Option<&str> {
        self.fields.get(self.pos).map(|f| f.1.as_str())
    }

    fn optional(&mut self, key: &str) -> Option<String> {
        if self.peek_key() == Some(key) {
            self.pos += 1;
            Some(self.fields[self.pos - 1].2.clone())
        } else {
            None
        }
    }

    fn take(&mut self, key: &str) -> Result<String, ReportError> {
        self.optional(key)
            .ok_or_else(|| self.error(format!("expected `{key}`")))
    }

    fn parse<T: std::str::FromStr>(&mut self, key: &str) -> Result<T, ReportError> {
        let v = self.take(key)?;
        v.parse()
            .map_err(|_| self.error(format!("bad value `{v}` for `{key}`")))
    }

    fn vars(&mut self) -> Result<Vec<String>, ReportError> {
        Ok(self
            .take("vars")?
            .split_whitespace()
            .map(str::to_string)
            .collect())
    }

    fn size(&mut self) -> Result<(usize, usize), ReportError> {
        let v = self.take("size")?;
        v.split_once('x')
            .and_then(|(r, c)| Some((r.parse().ok()?, c.parse().ok()?)))
            .ok_or_else(|| self.error(format!("bad size `{v}`")))
    }

    fn matrix(&mut self, key: &str) -> Result<MatrixDoc, ReportError> {
        let v = self.take(key)?;
        parse_matrix_text(&v).ok_or_else(|| self.error(format!("bad matrix for `{key}`")))
    }

    fn optional_matrix(&mut self, key: &str) -> Result<Option<MatrixDoc>, ReportError> {
        match self.peek_key() {
            Some(k) if k == key => self.matrix(key).map(Some),
            _ => Ok(None),
        }
    }

    fn finish(&self) -> Result<(), ReportError> {
        match self.fields.get(self.pos) {
            None => Ok(()),
            Some((_, k, _)) => Err(self.error(format!("unexpected field `{k}`"))),
        }
    }
}
