//! Suite reports and the violation collector.

use std::time::Instant;

use serde::Serialize;
use serde_json::{Map, Value};

/// How many violations a report keeps; the smallest ones survive.
pub const MAX_KEPT: usize = 20;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub lhs: String,
    pub rhs: String,
    pub clause: String,
    #[serde(skip)]
    pub size: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub params: Map<String, Value>,
    pub seed: u64,
    pub pairs: u64,
    pub violations: Vec<Violation>,
    pub millis: u128,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn to_jsonl(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }

    /// One JSON object per violation, for line-oriented tools.
    pub fn violations_jsonl(&self) -> String {
        self.violations.iter().map(|v| serde_json::to_string(v).expect("violation serializes") + "\n").collect()
    }
}

/// Counts checked pairs and keeps the smallest counterexamples, ordered by
/// combined height and then by printed form.
pub struct Collector {
    suite: String,
    params: Map<String, Value>,
    seed: u64,
    pairs: u64,
    violations: Vec<Violation>,
    total_violations: u64,
    started: Instant,
}

impl Collector {
    pub fn new(suite: &str, seed: u64) -> Self {
        Collector { suite: suite.to_string(), params: Map::new(), seed, pairs: 0, violations: Vec::new(), total_violations: 0, started: Instant::now() }
    }

    pub fn param(&mut self, key: &str, value: impl Into<Value>) -> &mut Self {
        self.params.insert(key.to_string(), value.into());
        self
    }

    pub fn count(&mut self, pairs: u64) {
        self.pairs += pairs;
    }

    pub fn pairs(&self) -> u64 {
        self.pairs
    }

    /// Records a failed check. `lhs`/`rhs` are only rendered on failure.
    pub fn violation(&mut self, size: usize, lhs: impl FnOnce() -> String, rhs: impl FnOnce() -> String, clause: &str) {
        self.total_violations += 1;
        if self.violations.len() >= MAX_KEPT {
            let worst = self.violations.last().expect("full list");
            if size > worst.size {
                return;
            }
        }
        let v = Violation { lhs: lhs(), rhs: rhs(), clause: clause.to_string(), size };
        let key = |w: &Violation| (w.size, w.lhs.clone(), w.rhs.clone(), w.clause.clone());
        let at = self.violations.partition_point(|w| key(w) < key(&v));
        // Random suites can hit the same counterexample repeatedly.
        if self.violations.get(at).is_some_and(|w| key(w) == key(&v)) {
            return;
        }
        self.violations.insert(at, v);
        self.violations.truncate(MAX_KEPT);
    }

    /// `check` failing records a violation.
    pub fn expect(&mut self, check: bool, size: usize, lhs: impl FnOnce() -> String, rhs: impl FnOnce() -> String, clause: &str) {
        self.pairs += 1;
        if !check {
            self.violation(size, lhs, rhs, clause);
        }
    }

    pub fn total_violations(&self) -> u64 {
        self.total_violations
    }

    pub fn finish(mut self) -> SuiteReport {
        if self.total_violations > self.violations.len() as u64 {
            self.params.insert("violations_total".into(), self.total_violations.into());
        }
        SuiteReport {
            suite: self.suite,
            params: self.params,
            seed: self.seed,
            pairs: self.pairs,
            violations: self.violations,
            millis: self.started.elapsed().as_millis(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn keeps_smallest_violations_in_order() {
        let mut c = Collector::new("demo", 7);
        for k in (0..30).rev() {
            c.violation(k, || format!("l{k:02}"), || "r".into(), "clause");
        }
        let r = c.finish();
        assert_eq!(r.violations.len(), MAX_KEPT);
        assert_eq!(r.violations[0].lhs, "l00");
        assert_eq!(r.params["violations_total"], 30);
        let line = r.to_jsonl();
        let v: Value = serde_json::from_str(&line).unwrap();
        for key in ["suite", "params", "seed", "pairs", "violations", "millis"] {
            assert!(v.get(key).is_some(), "{key}");
        }
        assert_eq!(r.violations_jsonl().lines().count(), MAX_KEPT);
    }
}
