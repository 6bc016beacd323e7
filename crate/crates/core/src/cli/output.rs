//! Result records and their JSON / CSV renderings.

use serde_json::{Map, Number, Value};

use super::config::ExperimentConfig;

#[derive(Debug, Clone, PartialEq)]
pub enum Field {
    Real(f64),
    Count(u64),
    Flag(bool),
    Series(Vec<f64>),
}

/// One command's output: the resolved config plus named results in a fixed
/// order.
#[derive(Debug, Clone, PartialEq)]
pub struct ResultRecord {
    pub command: &'static str,
    pub config: ExperimentConfig,
    pub fields: Vec<(String, Field)>,
}

impl ResultRecord {
    pub fn new(command: &'static str, config: ExperimentConfig) -> Self {
        Self {
            command,
            config,
            fields: Vec::new(),
        }
    }

    pub fn real(&mut self, name: &str, v: f64) -> &mut Self {
        self.fields.push((name.into(), Field::Real(v)));
        self
    }

    pub fn count(&mut self, name: &str, v: u64) -> &mut Self {
        self.fields.push((name.into(), Field::Count(v)));
        self
    }

    pub fn flag(&mut self, name: &str, v: bool) -> &mut Self {
        self.fields.push((name.into(), Field::Flag(v)));
        self
    }

    pub fn series(&mut self, name: &str, v: Vec<f64>) -> &mut Self {
        self.fields.push((name.into(), Field::Series(v)));
        self
    }

    pub fn get(&self, name: &str) -> Option<&Field> {
        self.fields.iter().find(|(k, _)| k == name).map(|(_, v)| v)
    }

    pub fn get_real(&self, name: &str) -> Option<f64> {
        match self.get(name)? {
            Field::Real(v) => Some(*v),
            Field::Count(v) => Some(*v as f64),
            _ => None,
        }
    }

    pub fn to_json(&self) -> String {
        let mut result = Map::new();
        for (k, v) in &self.fields {
            let v = match v {
                Field::Real(x) => real_json(*x),
                Field::Count(x) => Value::from(*x),
                Field::Flag(b) => Value::from(*b),
                Field::Series(xs) => Value::Array(xs.iter().map(|&x| real_json(x)).collect()),
            };
            result.insert(k.clone(), v);
        }
        let doc = serde_json::json!({
            "command": self.command,
            "config": self.config,
            "result": result,
        });
        let mut s = serde_json::to_string_pretty(&doc).expect("records always serialize");
        s.push('\n');
        s
    }

    /// Header plus one row. A series `f` becomes columns `f_0 … f_k`.
    pub fn to_csv(&self) -> String {
        let mut header = vec![
            "command".to_string(),
            "seed".into(),
            "n".into(),
            "trials".into(),
        ];
        let mut row = vec![
            self.command.to_string(),
            self.config.seed.to_string(),
            self.config.n.to_string(),
            self.config.trials.to_string(),
        ];
        for (k, v) in &self.fields {
            match v {
                Field::Real(x) => {
                    header.push(k.clone());
                    row.push(real_csv(*x));
                }
                Field::Count(x) => {
                    header.push(k.clone());
                    row.push(x.to_string());
                }
                Field::Flag(b) => {
                    header.push(k.clone());
                    row.push(b.to_string());
                }
                Field::Series(xs) => {
                    for (i, x) in xs.iter().enumerate() {
                        header.push(format!("{k}_{i}"));
                        row.push(real_csv(*x));
                    }
                }
            }
        }
        format!("{}\n{}\n", header.join(","), row.join(","))
    }
}

fn non_finite(x: f64) -> &'static str {
    if x.is_nan() {
        "nan"
    } else if x > 0.0 {
        "inf"
    } else {
        "-inf"
    }
}

fn real_json(x: f64) -> Value {
    match Number::from_f64(x) {
        Some(n) => Value::Number(n),
        None => Value::from(non_finite(x)),
    }
}

/// 17 significant digits, enough to round-trip any `f64`.
fn real_csv(x: f64) -> String {
    if x.is_finite() {
        format!("{x:.16e}")
    } else {
        non_finite(x).into()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn renders_json_and_csv() {
        let mut r = ResultRecord::new("rate", ExperimentConfig::default());
        r.real("rate", 0.1)
            .real("target", f64::INFINITY)
            .count("symbols", 7)
            .flag("ok", true);
        r.series("f", vec![0.5, 1.0]);
        let csv = r.to_csv();
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(
            lines[0],
            "command,seed,n,trials,rate,target,symbols,ok,f_0,f_1"
        );
        assert_eq!(
            lines[1],
            "rate,0,16,32,1.0000000000000001e-1,inf,7,true,5.0000000000000000e-1,1.0000000000000000e0"
        );
        let v: Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(v["result"]["target"], "inf");
        assert_eq!(v["result"]["rate"].as_f64(), Some(0.1));
        assert_eq!(v["result"]["f"][1].as_f64(), Some(1.0));
    }
}
