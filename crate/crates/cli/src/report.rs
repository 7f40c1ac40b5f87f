//! Report assembly: aligned text for standard output and a machine-readable
//! JSON document behind `--json`. Identical inputs must produce
//! byte-identical reports, so every collection is ordered.

use lck_core::lck::{CheckRecord, CheckStatus, LckCertificate, MetricMatrix};
use lck_core::rational::format_rational;
use lck_core::{KForm, LieAlgebra, Vector};
use serde_json::{json, Map, Value};

pub struct Report {
    pub command: String,
    pub source: String,
    pub inputs: Value,
    pub checks: Vec<CheckRecord>,
    pub data: Map<String, Value>,
    pub notes: Vec<String>,
}

impl Report {
    pub fn new(command: &str, source: &str, algebra: &LieAlgebra) -> Self {
        let inputs = json!({
            "source": source,
            "dim": algebra.dim(),
            "basis": algebra.basis_names(),
        });
        Report {
            command: command.to_string(),
            source: source.to_string(),
            inputs,
            checks: Vec::new(),
            data: Map::new(),
            notes: Vec::new(),
        }
    }

    pub fn set_input(&mut self, key: &str, value: Value) {
        self.inputs
            .as_object_mut()
            .expect("inputs object")
            .insert(key.to_string(), value);
    }

    pub fn push(&mut self, check: CheckRecord) {
        self.checks.push(check);
    }

    pub fn extend(&mut self, checks: impl IntoIterator<Item = CheckRecord>) {
        self.checks.extend(checks);
    }

    pub fn note(&mut self, note: impl Into<String>) {
        self.notes.push(note.into());
    }

    /// Exit code 0 iff every non-informational check passed.
    pub fn exit_code(&self) -> i32 {
        if self
            .checks
            .iter()
            .any(|c| c.status == CheckStatus::Fail)
        {
            1
        } else {
            0
        }
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("lck {} — {}\n", self.command, self.source));
        let name_w = self
            .checks
            .iter()
            .map(|c| c.name.len())
            .max()
            .unwrap_or(0)
            .max(12);
        let stmt_w = self
            .checks
            .iter()
            .map(|c| c.statement.chars().count())
            .max()
            .unwrap_or(0)
            .min(64);
        for c in &self.checks {
            let stmt: String = c.statement.chars().take(64).collect();
            out.push_str(&format!(
                "  [{}] {:<nw$}  {:<sw$}",
                c.status.label(),
                c.name,
                stmt,
                nw = name_w,
                sw = stmt_w,
            ));
            if !c.detail.is_empty() {
                out.push_str(&format!("  {}", c.detail));
            }
            out.push('\n');
        }
        for n in &self.notes {
            out.push_str(&format!("  note: {n}\n"));
        }
        out.push_str(&format!("exit {}\n", self.exit_code()));
        out
    }

    pub fn to_json(&self) -> Value {
        let checks: Vec<Value> = self
            .checks
            .iter()
            .map(|c| {
                json!({
                    "name": c.name,
                    "statement": c.statement,
                    "verdict": match c.status {
                        CheckStatus::Pass => "pass",
                        CheckStatus::Fail => "fail",
                        CheckStatus::Info => "info",
                        CheckStatus::NotApplicable => "not-applicable",
                    },
                    "witnesses": c.detail,
                })
            })
            .collect();
        json!({
            "command": self.command,
            "inputs": self.inputs,
            "checks": checks,
            "data": Value::Object(self.data.clone()),
            "notes": self.notes,
            "exit_code": self.exit_code(),
        })
    }
}

pub fn form_to_json(f: &KForm, names: &[String]) -> Value {
    let terms: Vec<Value> = f
        .terms()
        .map(|(tuple, coeff)| {
            json!({
                "indices": tuple.iter().map(|&i| names[i].to_lowercase()).collect::<Vec<_>>(),
                "coeff": format_rational(coeff),
            })
        })
        .collect();
    json!({
        "degree": f.degree(),
        "terms": terms,
        "text": f.render(names),
    })
}

pub fn vector_to_json(v: &Vector, names: &[String]) -> Value {
    json!({
        "coords": v.coords.iter().map(format_rational).collect::<Vec<_>>(),
        "text": v.render(names),
    })
}

pub fn matrix_to_json(m: &lck_core::linalg::Mat<lck_core::Rational>) -> Value {
    let rows: Vec<Vec<String>> = (0..m.nrows())
        .map(|i| (0..m.ncols()).map(|j| format_rational(m.get(i, j))).collect())
        .collect();
    json!(rows)
}

pub fn metric_to_json(m: &MetricMatrix, names: &[String]) -> Value {
    json!({
        "entries": matrix_to_json(&m.entries),
        "basis": m.basis.iter().map(|b| b.render(names)).collect::<Vec<_>>(),
    })
}

pub fn certificate_to_json(cert: &LckCertificate, names: &[String]) -> Value {
    json!({
        "omega": form_to_json(&cert.omega, names),
        "theta": form_to_json(&cert.theta, names),
        "J": matrix_to_json(&cert.j.matrix),
        "metric": metric_to_json(&cert.metric, names),
        "lee_field": vector_to_json(&cert.lee_field, names),
        "lee_square": format_rational(&cert.lee_square),
        "reeb_field": vector_to_json(&cert.reeb_field, names),
        "reeb_form": form_to_json(&cert.reeb_form, names),
        "vaisman": cert.vaisman,
        "vaisman_witness": cert.vaisman_witness.as_ref().map(|w| json!({
            "pair": [names[w.i], names[w.j]],
            "residual": format_rational(&w.residual),
        })),
    })
}
