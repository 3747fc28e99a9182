//! Result records and their JSON / CSV encodings.
//!
//! JSON layout:
//!
//! ```text
//! {
//!   "experiment": "<name>",
//!   "scenario":   { ...echo of the parsed config... },
//!   "runs": [ { "params": {..}, "outputs": {..}, "table": { "columns": [..], "rows": [[..]] } } ],
//!   "notes":      { "<key>": "<text>" },
//!   "metadata":   { "seed": u64 | null, "version": "x.y.z", "wall_time_s": f64 }
//! }
//! ```
//!
//! Complex numbers are `{"re": .., "im": ..}` objects. Everything outside
//! `metadata.wall_time_s` is a pure function of the scenario.
//!
//! CSV has a header row and one record per sweep point (or per table row
//! when the experiment produces a table). The leading columns are `seed` and
//! `version`; complex values take two columns, `<name>_re` and `<name>_im`.

use serde_json::{json, Map, Value as Json};
use tsvf_core::C64;

use crate::error::{CliError, Result};

#[derive(Debug, Clone, PartialEq)]
pub enum Value {
    Int(i64),
    Real(f64),
    Complex(C64),
    Text(String),
    Bool(bool),
}

impl Value {
    fn to_json(&self) -> Json {
        match self {
            Value::Int(i) => json!(i),
            Value::Real(x) => json!(x),
            Value::Complex(c) => json!({ "re": c.re, "im": c.im }),
            Value::Text(s) => json!(s),
            Value::Bool(b) => json!(b),
        }
    }

    fn csv_cells(&self) -> Vec<String> {
        match self {
            Value::Int(i) => vec![i.to_string()],
            Value::Real(x) => vec![format!("{x:?}")],
            Value::Complex(c) => vec![format!("{:?}", c.re), format!("{:?}", c.im)],
            Value::Text(s) => vec![s.clone()],
            Value::Bool(b) => vec![b.to_string()],
        }
    }

    fn csv_headers(&self, name: &str) -> Vec<String> {
        match self {
            Value::Complex(_) => vec![format!("{name}_re"), format!("{name}_im")],
            _ => vec![name.to_string()],
        }
    }
}

impl From<f64> for Value {
    fn from(x: f64) -> Self {
        Value::Real(x)
    }
}

impl From<C64> for Value {
    fn from(c: C64) -> Self {
        Value::Complex(c)
    }
}

impl From<usize> for Value {
    fn from(i: usize) -> Self {
        Value::Int(i as i64)
    }
}

impl From<&str> for Value {
    fn from(s: &str) -> Self {
        Value::Text(s.to_string())
    }
}

impl From<String> for Value {
    fn from(s: String) -> Self {
        Value::Text(s)
    }
}

impl From<bool> for Value {
    fn from(b: bool) -> Self {
        Value::Bool(b)
    }
}

pub type Fields = Vec<(String, Value)>;

/// Builds a field list from `(name, value)` pairs.
#[macro_export]
macro_rules! fields {
    ($($name:expr => $value:expr),* $(,)?) => {
        vec![$(($name.to_string(), $crate::output::Value::from($value))),*]
    };
}

#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Value>>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Run {
    pub params: Fields,
    pub outputs: Fields,
    pub table: Option<Table>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ResultRecord {
    pub experiment: String,
    pub scenario: Json,
    pub runs: Vec<Run>,
    pub notes: Vec<(String, String)>,
    pub seed: Option<u64>,
    pub version: String,
    pub wall_time_s: f64,
}

fn object(fields: &Fields) -> Json {
    Json::Object(
        fields
            .iter()
            .map(|(k, v)| (k.clone(), v.to_json()))
            .collect::<Map<_, _>>(),
    )
}

impl ResultRecord {
    pub fn to_json(&self) -> Json {
        let runs: Vec<Json> = self
            .runs
            .iter()
            .map(|r| {
                let mut m = Map::new();
                m.insert("params".into(), object(&r.params));
                m.insert("outputs".into(), object(&r.outputs));
                if let Some(t) = &r.table {
                    let rows: Vec<Json> = t
                        .rows
                        .iter()
                        .map(|row| Json::Array(row.iter().map(Value::to_json).collect()))
                        .collect();
                    m.insert(
                        "table".into(),
                        json!({ "columns": t.columns, "rows": rows }),
                    );
                }
                Json::Object(m)
            })
            .collect();
        let notes: Map<String, Json> = self
            .notes
            .iter()
            .map(|(k, v)| (k.clone(), json!(v)))
            .collect();
        json!({
            "experiment": self.experiment,
            "scenario": self.scenario,
            "runs": runs,
            "notes": notes,
            "metadata": {
                "seed": self.seed,
                "version": self.version,
                "wall_time_s": self.wall_time_s,
            },
        })
    }

    pub fn to_json_string(&self) -> Result<String> {
        let mut s = serde_json::to_string_pretty(&self.to_json())
            .map_err(|e| CliError::Output(e.to_string()))?;
        s.push('\n');
        Ok(s)
    }

    pub fn to_csv_string(&self) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        let seed = self.seed.map(|s| s.to_string()).unwrap_or_default();
        let mut header_written = false;
        for run in &self.runs {
            let lead: Vec<&Value> = run
                .params
                .iter()
                .chain(&run.outputs)
                .map(|(_, v)| v)
                .collect();
            let rows: Vec<Vec<&Value>> = match &run.table {
                Some(t) => t
                    .rows
                    .iter()
                    .map(|row| lead.iter().copied().chain(row.iter()).collect())
                    .collect(),
                None => vec![lead.clone()],
            };
            if !header_written {
                let names: Vec<&str> = run
                    .params
                    .iter()
                    .chain(&run.outputs)
                    .map(|(k, _)| k.as_str())
                    .chain(
                        run.table
                            .iter()
                            .flat_map(|t| t.columns.iter().map(String::as_str)),
                    )
                    .collect();
                let mut header = vec!["seed".to_string(), "version".to_string()];
                if let Some(first) = rows.first() {
                    for (name, v) in names.iter().zip(first) {
                        header.extend(v.csv_headers(name));
                    }
                } else {
                    header.extend(names.iter().map(|s| s.to_string()));
                }
                w.write_record(&header)
                    .map_err(|e| CliError::Output(e.to_string()))?;
                header_written = true;
            }
            for row in rows {
                let mut cells = vec![seed.clone(), self.version.clone()];
                cells.extend(row.iter().flat_map(|v| v.csv_cells()));
                w.write_record(&cells)
                    .map_err(|e| CliError::Output(e.to_string()))?;
            }
        }
        let bytes = w
            .into_inner()
            .map_err(|e| CliError::Output(e.to_string()))?;
        String::from_utf8(bytes).map_err(|e| CliError::Output(e.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn record() -> ResultRecord {
        ResultRecord {
            experiment: "cpt".into(),
            scenario: json!({}),
            runs: vec![Run {
                params: fields!["a" => C64::new(1.0, 0.0)],
                outputs: fields!["asymmetry" => 0.002],
                table: None,
            }],
            notes: vec![],
            seed: Some(7),
            version: "0.1.0".into(),
            wall_time_s: 0.5,
        }
    }

    #[test]
    fn csv_splits_complex_columns() {
        let csv = record().to_csv_string().unwrap();
        let mut lines = csv.lines();
        assert_eq!(lines.next().unwrap(), "seed,version,a_re,a_im,asymmetry");
        assert_eq!(lines.next().unwrap(), "7,0.1.0,1.0,0.0,0.002");
    }

    #[test]
    fn json_has_metadata_and_complex_objects() {
        let j = record().to_json();
        assert_eq!(j["metadata"]["seed"], 7);
        assert_eq!(j["runs"][0]["params"]["a"]["re"], 1.0);
        assert_eq!(j["runs"][0]["outputs"]["asymmetry"], 0.002);
    }

    #[test]
    fn csv_table_rows_repeat_run_fields() {
        let mut r = record();
        r.runs[0].table = Some(Table {
            columns: vec!["k".into(), "p".into()],
            rows: vec![
                vec![Value::Int(0), Value::Real(0.25)],
                vec![Value::Int(1), Value::Real(0.75)],
            ],
        });
        let csv = r.to_csv_string().unwrap();
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines[0], "seed,version,a_re,a_im,asymmetry,k,p");
        assert_eq!(lines.len(), 3);
        assert!(lines[2].ends_with(",1,0.75"));
    }
}
