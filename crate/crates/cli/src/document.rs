//! Input documents: bivariate polynomials and linear operators as JSON with
//! exact rational coefficients written as strings.
//!
//! ```text
//! {"kind":"bivariate","terms":[{"i":1,"j":1,"c":"1"},{"i":0,"j":0,"c":"-1/2"}]}
//! {"kind":"operator","n":2,"m":1,"matrix":[["0","1","0"],["0","0","2"]]}
//! ```
//!
//! In an operator document `matrix[r][k]` is the coefficient of `x^r` in the
//! image of `x^k`.

use std::collections::HashMap;
use std::fmt;

use realstable::operators::PolyOperator;
use realstable::rat::{self, Rat};
use realstable::BiPoly;
use serde::Serialize;
use serde_json::{Map, Value};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InputDocument {
    Bivariate { terms: Vec<(usize, usize, Rat)> },
    Operator { n: usize, m: usize, matrix: Vec<Vec<Rat>> },
}

/// A parse or validation failure, located by JSON path or source position.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DocError {
    pub location: String,
    pub message: String,
}

impl fmt::Display for DocError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.location, self.message)
    }
}

impl std::error::Error for DocError {}

fn err(location: impl Into<String>, message: impl Into<String>) -> DocError {
    DocError {
        location: location.into(),
        message: message.into(),
    }
}

fn object<'a>(v: &'a Value, path: &str, allowed: &[&str]) -> Result<&'a Map<String, Value>, DocError> {
    let obj = v
        .as_object()
        .ok_or_else(|| err(path, "expected an object"))?;
    if let Some(k) = obj.keys().find(|k| !allowed.contains(&k.as_str())) {
        return Err(err(join(path, k), "unknown field"));
    }
    Ok(obj)
}

fn join(path: &str, key: &str) -> String {
    if path.is_empty() {
        key.to_string()
    } else {
        format!("{path}.{key}")
    }
}

fn field<'a>(obj: &'a Map<String, Value>, path: &str, key: &str) -> Result<&'a Value, DocError> {
    obj.get(key).ok_or_else(|| err(join(path, key), "missing field"))
}

fn index(v: &Value, path: &str) -> Result<usize, DocError> {
    v.as_u64()
        .and_then(|x| usize::try_from(x).ok())
        .ok_or_else(|| err(path, "expected a nonnegative integer"))
}

fn array<'a>(v: &'a Value, path: &str) -> Result<&'a Vec<Value>, DocError> {
    v.as_array().ok_or_else(|| err(path, "expected an array"))
}

fn rational(v: &Value, path: &str) -> Result<Rat, DocError> {
    let s = v
        .as_str()
        .ok_or_else(|| err(path, "expected a rational number as a string, e.g. \"-3/4\""))?;
    rat::parse(s).map_err(|e| err(path, format!("invalid rational {s:?}: {e}")))
}

impl InputDocument {
    pub fn parse(text: &str) -> Result<Self, DocError> {
        let v: Value = serde_json::from_str(text).map_err(|e| {
            err(
                format!("line {}, column {}", e.line(), e.column()),
                format!("malformed JSON: {e}"),
            )
        })?;
        let top = v.as_object().ok_or_else(|| err("document", "expected an object"))?;
        match field(top, "", "kind")?.as_str() {
            Some("bivariate") => Self::parse_bivariate(&v),
            Some("operator") => Self::parse_operator(&v),
            _ => Err(err("kind", "expected \"bivariate\" or \"operator\"")),
        }
    }

    fn parse_bivariate(v: &Value) -> Result<Self, DocError> {
        let top = object(v, "", &["kind", "terms"])?;
        let raw = array(field(top, "", "terms")?, "terms")?;
        let mut seen: HashMap<(usize, usize), usize> = HashMap::new();
        let mut terms = Vec::with_capacity(raw.len());
        for (n, t) in raw.iter().enumerate() {
            let path = format!("terms[{n}]");
            let obj = object(t, &path, &["i", "j", "c"])?;
            let i = index(field(obj, &path, "i")?, &join(&path, "i"))?;
            let j = index(field(obj, &path, "j")?, &join(&path, "j"))?;
            let c = rational(field(obj, &path, "c")?, &join(&path, "c"))?;
            if let Some(first) = seen.insert((i, j), n) {
                return Err(err(
                    path,
                    format!("duplicate term for x^{i} y^{j} (first given at terms[{first}])"),
                ));
            }
            terms.push((i, j, c));
        }
        Ok(InputDocument::Bivariate { terms })
    }

    fn parse_operator(v: &Value) -> Result<Self, DocError> {
        let top = object(v, "", &["kind", "n", "m", "matrix"])?;
        let n = index(field(top, "", "n")?, "n")?;
        let m = index(field(top, "", "m")?, "m")?;
        let rows = array(field(top, "", "matrix")?, "matrix")?;
        if rows.len() != m + 1 {
            return Err(err(
                "matrix",
                format!("expected m + 1 = {} rows, found {}", m + 1, rows.len()),
            ));
        }
        let mut matrix = Vec::with_capacity(rows.len());
        for (r, row) in rows.iter().enumerate() {
            let path = format!("matrix[{r}]");
            let cells = array(row, &path)?;
            if cells.len() != n + 1 {
                return Err(err(
                    path,
                    format!("expected n + 1 = {} entries, found {}", n + 1, cells.len()),
                ));
            }
            let parsed = cells
                .iter()
                .enumerate()
                .map(|(k, c)| rational(c, &format!("{path}[{k}]")))
                .collect::<Result<Vec<_>, _>>()?;
            matrix.push(parsed);
        }
        Ok(InputDocument::Operator { n, m, matrix })
    }

    /// A bivariate document listing the terms of `p` by descending total
    /// degree, then descending power of `x`.
    pub fn from_bipoly(p: &BiPoly) -> Self {
        let mut terms: Vec<(usize, usize, Rat)> = p.terms().map(|(i, j, c)| (i, j, c.clone())).collect();
        terms.sort_by(|a, b| (b.0 + b.1, b.0).cmp(&(a.0 + a.1, a.0)));
        InputDocument::Bivariate { terms }
    }

    pub fn from_operator(t: &PolyOperator) -> Self {
        InputDocument::Operator {
            n: t.n(),
            m: t.m(),
            matrix: t.matrix().to_vec(),
        }
    }

    /// Single-line JSON; `parse(print(doc)) == doc`.
    pub fn print(&self) -> String {
        #[derive(Serialize)]
        #[serde(tag = "kind", rename_all = "lowercase")]
        enum Out {
            Bivariate { terms: Vec<TermJson> },
            Operator { n: usize, m: usize, matrix: Vec<Vec<String>> },
        }
        let out = match self {
            InputDocument::Bivariate { terms } => Out::Bivariate {
                terms: terms.iter().map(|(i, j, c)| TermJson::new(*i, *j, c)).collect(),
            },
            InputDocument::Operator { n, m, matrix } => Out::Operator {
                n: *n,
                m: *m,
                matrix: matrix
                    .iter()
                    .map(|r| r.iter().map(ToString::to_string).collect())
                    .collect(),
            },
        };
        serde_json::to_string(&out).expect("serializable")
    }
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct TermJson {
    pub i: usize,
    pub j: usize,
    pub c: String,
}

impl TermJson {
    pub fn new(i: usize, j: usize, c: &Rat) -> Self {
        TermJson { i, j, c: c.to_string() }
    }
}

/// Terms of `p` in the printing order used by documents.
pub fn term_list(p: &BiPoly) -> Vec<TermJson> {
    match InputDocument::from_bipoly(p) {
        InputDocument::Bivariate { terms } => {
            terms.iter().map(|(i, j, c)| TermJson::new(*i, *j, c)).collect()
        }
        InputDocument::Operator { .. } => unreachable!(),
    }
}
