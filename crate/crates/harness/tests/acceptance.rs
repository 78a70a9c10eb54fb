//! Acceptance run: one line per criterion, non-zero exit if any fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use ordgap::report::SuiteReport;
use ordgap::suites::{run_suite, Params};

/// One suite run with the bounds a criterion asks for.
struct Run {
    suite: &'static str,
    params: Params,
    /// Wall-clock limit for this suite alone.
    limit: Option<Duration>,
    /// Minimum number of random samples the report must record.
    min_samples: Option<u64>,
}

impl Run {
    fn new(suite: &'static str, params: Params) -> Self {
        Run { suite, params, limit: None, min_samples: None }
    }

    fn within(mut self, secs: u64) -> Self {
        self.limit = Some(Duration::from_secs(secs));
        self
    }

    fn samples(mut self, k: u64) -> Self {
        self.min_samples = Some(k);
        self
    }
}

struct Criterion {
    number: u32,
    title: &'static str,
    runs: Vec<Run>,
}

fn p() -> Params {
    Params::new(2024)
}

fn criteria() -> Vec<Criterion> {
    vec![
        Criterion {
            number: 1,
            title: "linearity of T_n(X), OT_n and syntactic fixed points",
            runs: vec![
                Run::new("lin-order", p().with_n(3).with_x(3).with_h(4)).within(60),
                Run::new("ot-order", p().with_n(2).with_h(4)).within(60),
                Run::new("bh-order", p().with_n(2).with_h(3)).within(60),
            ],
        },
        Criterion { number: 2, title: "gap order is a partial order with monotone k", runs: vec![Run::new("gap-order", p().with_n(3).with_h(5).with_x(2))] },
        Criterion {
            number: 3,
            title: "gap comparator agrees with the embeddability oracle",
            runs: vec![Run::new("gap-oracle", p().with_n(3).with_h(6)).within(300)],
        },
        Criterion {
            number: 4,
            title: "index shifts are isomorphisms",
            runs: vec![Run::new("lin-sigma", p().with_n(2).with_h(3)), Run::new("gap-sigma", p().with_n(2).with_h(3))],
        },
        Criterion {
            number: 5,
            title: "derivative and Kruskal fixed-point laws",
            runs: vec![
                Run::new("lin-derivative", p().with_n(2).with_h(3)),
                Run::new("ot-derivative", p().with_n(2).with_h(4)),
                Run::new("gap-kruskal", p().with_n(2).with_h(3)),
                Run::new("wn-kruskal", p().with_n(2).with_h(3)),
            ],
        },
        Criterion {
            number: 6,
            title: "initial embeddings are isomorphisms",
            runs: vec![Run::new("bh-initial", p().with_n(2).with_h(3)), Run::new("bh-unique", p().with_n(2).with_h(3))],
        },
        Criterion {
            number: 7,
            title: "linearizations agree, reflect the order and are onto",
            runs: vec![Run::new("linearization", p().with_n(3).with_h(4)), Run::new("nu-identity", p().with_n(3).with_h(5))],
        },
        Criterion { number: 8, title: "binary tree outside the lifted image", runs: vec![Run::new("btree-witness", p()).within(1)] },
        Criterion {
            number: 9,
            title: "support condition along random quasi embeddings",
            runs: vec![Run::new("flatness", p().with_n(3).with_h(4).with_samples(1000)).samples(1000), Run::new("gap-functor", p().with_samples(200))],
        },
        Criterion {
            number: 10,
            title: "order types and the explicit collapse",
            runs: vec![
                Run::new("order-type", p().with_samples(10_000)).within(120).samples(10_000),
                Run::new("collapse-axioms", p().with_samples(10_000)).within(120).samples(10_000),
            ],
        },
    ]
}

/// Problems with one run, empty when it passed.
fn judge(run: &Run, report: &SuiteReport, elapsed: Duration) -> Vec<String> {
    let mut problems = Vec::new();
    if !report.passed() {
        let first = &report.violations[0];
        problems.push(format!("{} violations, first: {} / {} [{}]", report.violations.len(), first.lhs, first.rhs, first.clause));
    }
    if report.pairs == 0 {
        problems.push("checked nothing".into());
    }
    if let Some(limit) = run.limit {
        if elapsed > limit {
            problems.push(format!("took {:.2}s, limit {}s", elapsed.as_secs_f64(), limit.as_secs()));
        }
    }
    if let Some(k) = run.min_samples {
        let got = report.params.get("samples").and_then(|v| v.as_u64()).unwrap_or(0);
        if got < k {
            problems.push(format!("{got} samples, need {k}"));
        }
    }
    problems
}

fn main() -> ExitCode {
    let mut all_passed = true;
    for c in criteria() {
        let mut problems = Vec::new();
        let mut summary = Vec::new();
        for run in &c.runs {
            let started = Instant::now();
            let report = run_suite(run.suite, &run.params).expect("registered suite");
            let elapsed = started.elapsed();
            summary.push(format!("{} {} pairs {:.2}s", run.suite, report.pairs, elapsed.as_secs_f64()));
            problems.extend(judge(run, &report, elapsed).into_iter().map(|m| format!("{}: {m}", run.suite)));
        }
        let verdict = if problems.is_empty() { "PASS" } else { "FAIL" };
        println!("criterion {}: {verdict} {} ({})", c.number, c.title, summary.join("; "));
        for m in &problems {
            println!("    {m}");
        }
        all_passed &= problems.is_empty();
    }
    if all_passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
