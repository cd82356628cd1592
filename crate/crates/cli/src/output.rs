use anyhow::Result;
use clap::ValueEnum;
use serde::Serialize;
use serde_json::{Map, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Csv,
    Json,
}

/// Flat records rendered uniformly in every output format.
#[derive(Default)]
pub struct Records(pub Vec<Map<String, Value>>);

impl Records {
    pub fn push(&mut self, record: impl Serialize) -> Result<()> {
        match serde_json::to_value(record)? {
            Value::Object(map) => self.0.push(map),
            other => {
                let mut map = Map::new();
                map.insert("value".into(), other);
                self.0.push(map);
            }
        }
        Ok(())
    }

    pub fn one(record: impl Serialize) -> Result<Self> {
        let mut r = Self::default();
        r.push(record)?;
        Ok(r)
    }

    pub fn render(&self, format: Format) -> Result<String> {
        Ok(match format {
            Format::Json => {
                let v = match self.0.as_slice() {
                    [single] => Value::Object(single.clone()),
                    many => Value::Array(many.iter().cloned().map(Value::Object).collect()),
                };
                serde_json::to_string_pretty(&v)? + "\n"
            }
            Format::Csv => self.csv(),
            Format::Text => self.text(),
        })
    }

    fn header(&self) -> Vec<String> {
        let mut keys: Vec<String> = Vec::new();
        for rec in &self.0 {
            for k in rec.keys() {
                if !keys.contains(k) {
                    keys.push(k.clone());
                }
            }
        }
        keys
    }

    fn csv(&self) -> String {
        let keys = self.header();
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(&keys).expect("in-memory csv");
        for rec in &self.0 {
            w.write_record(keys.iter().map(|k| scalar(rec.get(k).unwrap_or(&Value::Null))))
                .expect("in-memory csv");
        }
        String::from_utf8(w.into_inner().expect("in-memory csv")).expect("utf8")
    }

    fn text(&self) -> String {
        let blocks: Vec<String> = self
            .0
            .iter()
            .map(|rec| {
                let width = rec.keys().map(String::len).max().unwrap_or(0);
                rec.iter()
                    .map(|(k, v)| format!("{k:<width$}  {}\n", scalar(v)))
                    .collect::<String>()
            })
            .collect();
        blocks.join("\n")
    }
}

/// Scalars print bare; arrays of scalars are space-separated; anything else
/// is compact JSON.
fn scalar(v: &Value) -> String {
    match v {
        Value::Null => String::new(),
        Value::String(s) => s.clone(),
        Value::Bool(_) | Value::Number(_) => v.to_string(),
        Value::Array(items) if items.iter().all(|i| !i.is_array() && !i.is_object()) => {
            items.iter().map(scalar).collect::<Vec<_>>().join(" ")
        }
        other => other.to_string(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn renders_all_formats() {
        let mut r = Records::default();
        r.push(json!({"a": 1, "b": [1, 2], "c": "x,y"})).unwrap();
        r.push(json!({"a": 2, "d": null})).unwrap();
        assert_eq!(r.render(Format::Csv).unwrap(), "a,b,c,d\n1,1 2,\"x,y\",\n2,,,\n");
        assert!(r.render(Format::Text).unwrap().starts_with("a  1\nb  1 2\n"));
        let one = Records::one(json!({"k": true})).unwrap();
        assert_eq!(one.render(Format::Json).unwrap(), "{\n  \"k\": true\n}\n");
    }
}
