//! JSON algebra files.
//!
//! ```json
//! {"basis": ["e1", "e2"], "matrix": [[1, -1], ["1", "-1/2"]], "description": "optional"}
//! ```
//!
//! Row `j`, column `i` of `matrix` is the coefficient of `e_j` in `e_i^2`.
//! Entries are JSON integers or strings holding an integer or `p/q`;
//! floating-point literals are rejected.

use serde::Serialize;
use serde_json::Value;

use crate::algebra::EvolutionAlgebra;
use crate::error::{Error, Result};
use crate::exactla::{format_rat, parse_rat, Mat, Rat};

/// A parsed file: the algebra plus its optional description.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraFile {
    pub algebra: EvolutionAlgebra,
    pub description: Option<String>,
}

/// Serialized form, with every entry rendered as a string.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AlgebraJson {
    pub basis: Vec<String>,
    pub matrix: Vec<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub description: Option<String>,
}

impl AlgebraJson {
    pub fn new(a: &EvolutionAlgebra, description: Option<String>) -> Self {
        let m = a.structure_matrix();
        AlgebraJson {
            basis: a.labels().to_vec(),
            matrix: (0..m.rows())
                .map(|r| m.row(r).iter().map(format_rat).collect())
                .collect(),
            description,
        }
    }
}

fn parse_error(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

fn parse_entry(v: &Value, r: usize, c: usize) -> Result<Rat> {
    let at = format!("matrix[{r}][{c}]");
    match v {
        Value::Number(num) => {
            if let Some(i) = num.as_i64() {
                Ok(Rat::from_integer(i.into()))
            } else if let Some(u) = num.as_u64() {
                Ok(Rat::from_integer(u.into()))
            } else {
                Err(parse_error(format!(
                    "{at}: floating-point literal {num} is not allowed; write it as a \"p/q\" string"
                )))
            }
        }
        Value::String(s) => parse_rat(s).ok_or_else(|| parse_error(format!("{at}: {s:?} is not a rational literal"))),
        other => Err(parse_error(format!(
            "{at}: expected an integer or a rational string, found {}",
            kind(other)
        ))),
    }
}

fn kind(v: &Value) -> &'static str {
    match v {
        Value::Null => "null",
        Value::Bool(_) => "a boolean",
        Value::Number(_) => "a number",
        Value::String(_) => "a string",
        Value::Array(_) => "an array",
        Value::Object(_) => "an object",
    }
}

/// Parses and validates an algebra file.
pub fn parse_algebra(text: &str) -> Result<AlgebraFile> {
    let root: Value = serde_json::from_str(text).map_err(|e| parse_error(format!("malformed JSON: {e}")))?;
    let obj = root
        .as_object()
        .ok_or_else(|| parse_error(format!("top level: expected an object, found {}", kind(&root))))?;
    if let Some(key) = obj
        .keys()
        .find(|k| !matches!(k.as_str(), "basis" | "matrix" | "description"))
    {
        return Err(parse_error(format!("unknown field {key:?}")));
    }
    let basis = obj
        .get("basis")
        .ok_or_else(|| parse_error("missing field \"basis\""))?
        .as_array()
        .ok_or_else(|| parse_error("basis: expected an array of labels"))?
        .iter()
        .enumerate()
        .map(|(i, v)| {
            v.as_str()
                .map(str::to_string)
                .ok_or_else(|| parse_error(format!("basis[{i}]: expected a string, found {}", kind(v))))
        })
        .collect::<Result<Vec<String>>>()?;
    let rows = obj
        .get("matrix")
        .ok_or_else(|| parse_error("missing field \"matrix\""))?
        .as_array()
        .ok_or_else(|| parse_error("matrix: expected an array of rows"))?;
    let n = rows.len();
    let mut data = Vec::with_capacity(n * n);
    for (r, row) in rows.iter().enumerate() {
        let row = row
            .as_array()
            .ok_or_else(|| parse_error(format!("matrix[{r}]: expected an array, found {}", kind(row))))?;
        if row.len() != n {
            return Err(parse_error(format!(
                "matrix is non-square: row {r} has {} entries but there are {n} rows",
                row.len()
            )));
        }
        for (c, v) in row.iter().enumerate() {
            data.push(parse_entry(v, r, c)?);
        }
    }
    if basis.len() != n {
        return Err(parse_error(format!(
            "basis has {} labels but the matrix has {n} rows",
            basis.len()
        )));
    }
    if let Some((i, l)) = basis.iter().enumerate().find(|(i, l)| basis[..*i].contains(l)) {
        return Err(parse_error(format!("basis[{i}]: duplicate label {l:?}")));
    }
    let description = match obj.get("description") {
        None | Some(Value::Null) => None,
        Some(Value::String(s)) => Some(s.clone()),
        Some(v) => {
            return Err(parse_error(format!(
                "description: expected a string, found {}",
                kind(v)
            )))
        }
    };
    let matrix = Mat::from_vec(n, n, data)?;
    Ok(AlgebraFile {
        algebra: EvolutionAlgebra::new(basis, matrix)?,
        description,
    })
}

/// Pretty JSON text for an algebra, ending in a newline.
pub fn render_algebra(a: &EvolutionAlgebra, description: Option<&str>) -> String {
    let json = AlgebraJson::new(a, description.map(str::to_string));
    let mut s = serde_json::to_string_pretty(&json).expect("plain data serializes");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::rat;

    #[test]
    fn counterexample_file() {
        let f = parse_algebra(r#"{"basis":["e1","e2"],"matrix":[[1,-1],[1,-1]]}"#).unwrap();
        assert_eq!(f.algebra, EvolutionAlgebra::from_ints(&[[1, -1], [1, -1]]));
        assert_eq!(f.description, None);
    }

    #[test]
    fn rational_strings() {
        let f = parse_algebra(r#"{"basis":["a"],"matrix":[["1/2"]],"description":"half"}"#).unwrap();
        assert_eq!(f.algebra.structure_matrix()[(0, 0)], rat(1, 2));
        assert_eq!(f.description.as_deref(), Some("half"));
    }

    #[test]
    fn diagnostics() {
        let err = |t: &str| parse_algebra(t).unwrap_err().to_string();
        assert!(err(r#"{"basis":["a","b"],"matrix":[[1],[2]]}"#).contains("non-square"));
        assert!(err(r#"{"basis":["a"],"matrix":[[0.5]]}"#).contains("matrix[0][0]"));
        assert!(err(r#"{"basis":["a","b"],"matrix":[[1,"x"],[0,1]]}"#).contains("matrix[0][1]"));
        assert!(err(r#"{"basis":["a","a"],"matrix":[[1,0],[0,1]]}"#).contains("duplicate"));
        assert!(err(r#"{"basis":["a"],"matrix":[[1]"#).contains("line 1"));
        assert!(err(r#"{"basis":["a"],"matrix":[["1/0"]]}"#).contains("matrix[0][0]"));
        assert!(err(r#"{"basis":["a"]}"#).contains("matrix"));
    }

    #[test]
    fn round_trip() {
        let text = r#"{"basis":["x","y"],"matrix":[["-3/4",2],[0,"5/7"]],"description":"d"}"#;
        let f = parse_algebra(text).unwrap();
        let back = parse_algebra(&render_algebra(&f.algebra, f.description.as_deref())).unwrap();
        assert_eq!(back, f);
    }
}
