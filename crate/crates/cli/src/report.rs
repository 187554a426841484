//! Uniform command reports.
//!
//! Every subcommand produces a `Report`: an echo of the invocation, an
//! ordered list of named pass/fail checks (failures carry a witness), and an
//! ordered list of informational name/value pairs (dimensions, flags). The
//! same report renders as aligned text (`--format human`) or JSON
//! (`--format machine`); both renderings are deterministic, so identical
//! inputs give byte-identical output.

use serde::Serialize;
use std::fmt::Display;
use std::fmt::Write as _;

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Info {
    pub name: String,
    pub value: String,
}

#[derive(Debug, Clone)]
pub struct Report {
    pub command: String,
    pub checks: Vec<Check>,
    pub info: Vec<Info>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RenderFormat {
    Human,
    Machine,
}

impl Report {
    pub fn new(command: impl Into<String>) -> Report {
        Report {
            command: command.into(),
            checks: Vec::new(),
            info: Vec::new(),
        }
    }

    /// Records one check; `witness` explains a failure and is ignored by
    /// convention when `pass` is true.
    pub fn check(&mut self, name: impl Into<String>, pass: bool, witness: Option<String>) {
        self.checks.push(Check {
            name: name.into(),
            pass,
            witness: if pass { None } else { witness },
        });
    }

    /// Records a check whose failure witness is a debug rendering of `w`.
    pub fn check_wit(&mut self, name: impl Into<String>, pass: bool, w: impl Display) {
        let name = name.into();
        if pass {
            self.check(name, true, None);
        } else {
            self.check(name, false, Some(w.to_string()));
        }
    }

    pub fn info(&mut self, name: impl Into<String>, value: impl Display) {
        self.info.push(Info {
            name: name.into(),
            value: value.to_string(),
        });
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn exit_code(&self) -> i32 {
        if self.passed() {
            0
        } else {
            1
        }
    }

    pub fn render(&self, format: RenderFormat) -> String {
        match format {
            RenderFormat::Human => self.render_human(),
            RenderFormat::Machine => self.render_machine(),
        }
    }

    fn render_human(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "# homleib {}", self.command);
        let width = self
            .checks
            .iter()
            .map(|c| c.name.len())
            .chain(self.info.iter().map(|i| i.name.len()))
            .max()
            .unwrap_or(0);
        for c in &self.checks {
            let verdict = if c.pass { "PASS" } else { "FAIL" };
            let _ = writeln!(out, "check {:width$}  {verdict}", c.name);
            if let Some(w) = &c.witness {
                let _ = writeln!(out, "      {:width$}  witness: {w}", "");
            }
        }
        for i in &self.info {
            let _ = writeln!(out, "info  {:width$}  {}", i.name, i.value);
        }
        let (passed, total) = (
            self.checks.iter().filter(|c| c.pass).count(),
            self.checks.len(),
        );
        let verdict = if self.passed() { "PASS" } else { "FAIL" };
        let _ = writeln!(out, "status {verdict} ({passed}/{total} checks)");
        out
    }

    fn render_machine(&self) -> String {
        let value = serde_json::json!({
            "command": self.command,
            "checks": self.checks,
            "info": self.info,
            "status": if self.passed() { "pass" } else { "fail" },
        });
        // Keys serialize in sorted order; output is deterministic.
        let mut s = serde_json::to_string_pretty(&value).expect("report serialization");
        s.push('\n');
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rendering_is_deterministic_and_exit_codes_follow_checks() {
        let mut r = Report::new("validate x.toml");
        r.check("alpha", true, None);
        r.check_wit("beta", false, "first bad pair (0, 1)");
        r.info("dim", 3);
        assert!(!r.passed());
        assert_eq!(r.exit_code(), 1);
        assert_eq!(r.render(RenderFormat::Human), r.render(RenderFormat::Human));
        assert_eq!(
            r.render(RenderFormat::Machine),
            r.render(RenderFormat::Machine)
        );
        let human = r.render(RenderFormat::Human);
        assert!(human.contains("beta   FAIL"));
        assert!(human.contains("witness: first bad pair (0, 1)"));
        let machine = r.render(RenderFormat::Machine);
        let parsed: serde_json::Value = serde_json::from_str(&machine).unwrap();
        assert_eq!(parsed["status"], "fail");
        assert_eq!(parsed["checks"][0]["pass"], true);
        assert_eq!(parsed["checks"][1]["witness"], "first bad pair (0, 1)");

        let mut ok = Report::new("validate y.toml");
        ok.check("alpha", true, None);
        assert_eq!(ok.exit_code(), 0);
    }
}
