use grid_core::{Signal, StructuringFunction, Window};
use serde::Serialize;

/// One check that came out wrong: what was run, what should have held,
/// and what held instead.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct Failure {
    pub case: String,
    pub expected: String,
    pub actual: String,
}

/// The outcome of one verification suite.  `verdict` is "pass" exactly
/// when `failures` is empty; `wall_ms` is the only field that varies
/// between runs with identical inputs.
#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub schema: u32,
    pub suite: String,
    pub seed: u64,
    pub trials: u64,
    pub failures: Vec<Failure>,
    pub notes: Vec<String>,
    pub wall_ms: f64,
    pub verdict: String,
}

impl SuiteReport {
    pub fn new(
        suite: &str,
        seed: u64,
        trials: u64,
        mut failures: Vec<Failure>,
        notes: Vec<String>,
        wall_ms: f64,
    ) -> SuiteReport {
        failures.sort_by(|a, b| a.case.cmp(&b.case));
        let verdict = if failures.is_empty() { "pass" } else { "fail" };
        SuiteReport {
            schema: 1,
            suite: suite.to_string(),
            seed,
            trials,
            failures,
            notes,
            wall_ms,
            verdict: verdict.to_string(),
        }
    }

    pub fn passed(&self) -> bool {
        self.verdict == "pass"
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report fields serialise")
    }
}

fn show_f64(v: f64) -> String {
    format!("{v}")
}

pub fn show_signal(f: &Signal) -> String {
    let samples: Vec<String> = f.samples().iter().map(|v| show_f64(v.to_f64())).collect();
    if f.dims() == 2 {
        format!("{}x{}[{}]", f.extents()[0], f.extents()[1], samples.join(", "))
    } else {
        format!("[{}]", samples.join(", "))
    }
}

pub fn show_structuring(b: &StructuringFunction) -> String {
    let pairs: Vec<String> = b
        .iter()
        .map(|(p, w)| format!("{}:{}", p[0], show_f64(w)))
        .collect();
    format!("{{{}}}", pairs.join(", "))
}

pub fn show_window(w: &Window) -> String {
    let offsets: Vec<String> = w.iter().map(|p| p[0].to_string()).collect();
    format!("{{{}}}", offsets.join(", "))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn failure(case: &str) -> Failure {
        Failure {
            case: case.to_string(),
            expected: "x".to_string(),
            actual: "y".to_string(),
        }
    }

    #[test]
    fn the_verdict_mirrors_the_failure_list() {
        let clean = SuiteReport::new("s", 1, 10, vec![], vec![], 0.5);
        assert!(clean.passed());
        assert_eq!(clean.verdict, "pass");
        let dirty = SuiteReport::new("s", 1, 10, vec![failure("a")], vec![], 0.5);
        assert!(!dirty.passed());
        assert_eq!(dirty.verdict, "fail");
    }

    #[test]
    fn failures_are_sorted_by_case_description() {
        let report =
            SuiteReport::new("s", 1, 2, vec![failure("b"), failure("a")], vec![], 0.0);
        let cases: Vec<&str> = report.failures.iter().map(|f| f.case.as_str()).collect();
        assert_eq!(cases, vec!["a", "b"]);
    }

    #[test]
    fn reports_serialise_with_the_schema_marker() {
        let report = SuiteReport::new("s", 3, 4, vec![], vec!["note".to_string()], 1.0);
        let value: serde_json::Value = serde_json::from_str(&report.to_json()).unwrap();
        assert_eq!(value["schema"], 1);
        assert_eq!(value["suite"], "s");
        assert_eq!(value["verdict"], "pass");
        assert_eq!(value["notes"][0], "note");
    }

    #[test]
    fn display_helpers_render_integers_without_trailing_digits() {
        let f = Signal::from_f64_1d(&[1.0, -3.0, 0.5]);
        assert_eq!(show_signal(&f), "[1, -3, 0.5]");
        let b = StructuringFunction::from_pairs_1d(&[(-1, 0.0), (0, 2.0)]);
        assert_eq!(show_structuring(&b), "{-1:0, 0:2}");
        assert_eq!(show_window(&Window::new_1d(&[0, 1])), "{0, 1}");
    }
}
