//! Run reports: the machine-readable result of one command.

use std::collections::BTreeMap;
use std::fmt::Display;
use std::time::Instant;

use serde::Serialize;

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

/// What was asked, what was checked, what was counted. Serializes
/// deterministically except for `elapsed_ms`.
#[derive(Debug, Clone, Serialize)]
pub struct RunReport {
    pub command: String,
    pub parameters: BTreeMap<String, String>,
    pub checks: Vec<Check>,
    pub counters: BTreeMap<String, u64>,
    pub elapsed_ms: u128,
    pub version: String,
}

impl RunReport {
    pub fn new(command: &str) -> Self {
        Self {
            command: command.to_string(),
            parameters: BTreeMap::new(),
            checks: Vec::new(),
            counters: BTreeMap::new(),
            elapsed_ms: 0,
            version: env!("CARGO_PKG_VERSION").to_string(),
        }
    }

    pub fn param(&mut self, name: &str, value: impl Display) {
        self.parameters.insert(name.to_string(), value.to_string());
    }

    pub fn check(&mut self, name: &str, pass: bool, detail: impl Into<String>) {
        self.checks.push(Check {
            name: name.to_string(),
            pass,
            detail: detail.into(),
        });
    }

    pub fn counter(&mut self, name: &str, value: u64) {
        self.counters.insert(name.to_string(), value);
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    /// 0 when every check passed, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.all_passed() {
            0
        } else {
            1
        }
    }

    pub fn stop_clock(&mut self, started: Instant) {
        self.elapsed_ms = started.elapsed().as_millis();
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&self.command);
        out.push('\n');
        for (k, v) in &self.parameters {
            out.push_str(&format!("  {k} = {v}\n"));
        }
        for c in &self.checks {
            let verdict = if c.pass { "pass" } else { "FAIL" };
            out.push_str(&format!("check {}: {} ({})\n", c.name, verdict, c.detail));
        }
        for (k, v) in &self.counters {
            out.push_str(&format!("counter {k} = {v}\n"));
        }
        out.push_str(&format!("elapsed_ms = {}\n", self.elapsed_ms));
        out.push_str(&format!(
            "result: {}\n",
            if self.all_passed() { "pass" } else { "FAIL" }
        ));
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_shape_and_exit_codes() {
        let mut r = RunReport::new("demo");
        r.param("seed", 7);
        r.check("first", true, "fine");
        r.counter("things", 3);
        assert_eq!(r.exit_code(), 0);
        let v: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(v["command"], "demo");
        assert_eq!(v["parameters"]["seed"], "7");
        assert_eq!(v["checks"][0]["pass"], true);
        assert_eq!(v["counters"]["things"], 3);
        r.check("second", false, "broken");
        assert_eq!(r.exit_code(), 1);
        assert!(r.render_text().contains("check second: FAIL (broken)"));
        assert!(r.render_text().ends_with("result: FAIL\n"));
    }
}
