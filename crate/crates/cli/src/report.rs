use std::fmt::Write as _;

use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Pass,
    Fail,
    Match,
    Diverge,
    Info,
}

impl Status {
    pub fn label(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Match => "MATCH",
            Status::Diverge => "DIVERGE",
            Status::Info => "INFO",
        }
    }

    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Line {
    pub status: Status,
    pub check: String,
    pub detail: String,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub expansion: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Table {
    pub title: String,
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RunReport {
    pub command: String,
    pub fixtures: Vec<String>,
    pub lines: Vec<Line>,
    pub tables: Vec<Table>,
    /// Conventions and pinned choices, as key/value pairs.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub ledger: Vec<(String, String)>,
    pub exit_status: i32,
}

impl RunReport {
    pub fn new(command: impl Into<String>, fixtures: Vec<String>) -> Self {
        RunReport {
            command: command.into(),
            fixtures,
            lines: vec![],
            tables: vec![],
            ledger: vec![],
            exit_status: 0,
        }
    }

    pub fn push(&mut self, status: Status, check: impl Into<String>, detail: impl Into<String>) -> &mut Line {
        self.lines.push(Line {
            status,
            check: check.into(),
            detail: detail.into(),
            expansion: vec![],
        });
        if status == Status::Fail {
            self.exit_status = 1;
        }
        self.lines.last_mut().expect("just pushed")
    }

    pub fn table(&mut self, title: impl Into<String>, header: &[&str], rows: Vec<Vec<String>>) {
        self.tables.push(Table {
            title: title.into(),
            header: header.iter().map(|h| h.to_string()).collect(),
            rows,
        });
    }

    pub fn note(&mut self, key: impl Into<String>, value: impl Into<String>) {
        self.ledger.push((key.into(), value.into()));
    }

    pub fn count(&self, status: Status) -> usize {
        self.lines.iter().filter(|l| l.status == status).count()
    }

    pub fn line(&self, check: &str) -> Option<&Line> {
        self.lines.iter().find(|l| l.check == check)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        writeln!(out, "$ homleib {}", self.command).unwrap();
        if !self.fixtures.is_empty() {
            writeln!(out, "fixtures: {}", self.fixtures.join(", ")).unwrap();
        }
        for line in &self.lines {
            if line.detail.is_empty() {
                writeln!(out, "{:<7} {}", line.status.label(), line.check).unwrap();
            } else {
                writeln!(out, "{:<7} {}: {}", line.status.label(), line.check, line.detail).unwrap();
            }
            for e in &line.expansion {
                writeln!(out, "          {e}").unwrap();
            }
        }
        for table in &self.tables {
            writeln!(out, "\n{}", table.title).unwrap();
            let mut widths: Vec<usize> = table.header.iter().map(String::len).collect();
            for row in &table.rows {
                for (w, cell) in widths.iter_mut().zip(row) {
                    *w = (*w).max(cell.len());
                }
            }
            let fmt_row = |cells: &[String]| {
                cells
                    .iter()
                    .zip(&widths)
                    .map(|(c, w)| format!("{c:<w$}"))
                    .collect::<Vec<_>>()
                    .join("  ")
                    .trim_end()
                    .to_string()
            };
            writeln!(out, "  {}", fmt_row(&table.header)).unwrap();
            if table.rows.is_empty() {
                writeln!(out, "  (empty)").unwrap();
            }
            for row in &table.rows {
                writeln!(out, "  {}", fmt_row(row)).unwrap();
            }
        }
        if !self.ledger.is_empty() {
            writeln!(out, "\nledger").unwrap();
            for (k, v) in &self.ledger {
                writeln!(out, "  {k}: {v}").unwrap();
            }
        }
        writeln!(out, "\nexit status: {}", self.exit_status).unwrap();
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fail_sets_exit_status_and_diverge_does_not() {
        let mut r = RunReport::new("x", vec![]);
        r.push(Status::Diverge, "a", "");
        r.push(Status::Match, "b", "");
        assert_eq!(r.exit_status, 0);
        r.push(Status::Fail, "c", "");
        assert_eq!(r.exit_status, 1);
        assert_eq!(r.count(Status::Diverge), 1);
    }

    #[test]
    fn json_mirrors_lines() {
        let mut r = RunReport::new("x", vec!["paper_L".into()]);
        r.push(Status::Pass, "check", "ok").expansion.push("step".into());
        r.table("t", &["n", "dim"], vec![vec!["1".into(), "2".into()]]);
        let v: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(v["lines"][0]["status"], "PASS");
        assert_eq!(v["lines"][0]["expansion"][0], "step");
        assert_eq!(v["tables"][0]["rows"][0][1], "2");
        let text = r.to_text();
        assert!(text.contains("PASS    check: ok"));
        assert!(text.contains("exit status: 0"));
    }
}
