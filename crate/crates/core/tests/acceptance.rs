//! End-to-end acceptance: every shipped suite passes under the default
//! configuration, with the extra conditions each criterion carries. One line
//! of output per criterion; the test fails at the end if any line failed.

use std::fmt::Write as _;
use std::time::Instant;

use fbplab_core::suite::{run_suite, CheckStatus, SuiteConfig, SuiteReport};

type Extra = fn(&SuiteReport) -> Result<(), String>;

struct Criterion {
    number: usize,
    suite: &'static str,
    summary: &'static str,
    extra: Option<Extra>,
}

fn bounded_labels_everywhere(report: &SuiteReport) -> Result<(), String> {
    for check in &report.checks {
        if check.status != CheckStatus::BoundedPass {
            return Err(format!(
                "{} reports {} instead of a bounded pass",
                check.check_id, check.status
            ));
        }
    }
    Ok(())
}

fn sampled_and_exhaustive_mix(report: &SuiteReport) -> Result<(), String> {
    let sampled = report
        .checks
        .iter()
        .filter(|c| c.status == CheckStatus::BoundedPass)
        .count();
    if sampled == 0 {
        return Err("expected at least one sampled check with a bounded label".into());
    }
    Ok(())
}

fn stretch_included(report: &SuiteReport) -> Result<(), String> {
    if report
        .checks
        .iter()
        .any(|c| c.status == CheckStatus::Skipped)
    {
        return Err("stretch check was skipped under the default configuration".into());
    }
    Ok(())
}

fn no_skips(report: &SuiteReport) -> Result<(), String> {
    if let Some(c) = report
        .checks
        .iter()
        .find(|c| c.status == CheckStatus::Skipped)
    {
        return Err(format!("{} was skipped", c.check_id));
    }
    Ok(())
}

const CRITERIA: [Criterion; 12] = [
    Criterion {
        number: 1,
        suite: "cardinalities",
        summary: "family sizes match the closed forms",
        extra: None,
    },
    Criterion {
        number: 2,
        suite: "bijection",
        summary: "completion and restriction are inverse bijections",
        extra: None,
    },
    Criterion {
        number: 3,
        suite: "jm-oracle",
        summary: "chain-map identities equal scattered-subword equality",
        extra: None,
    },
    Criterion {
        number: 4,
        suite: "um-oracle",
        summary: "partial-injection identities equal unambiguous-subword equality",
        extra: None,
    },
    Criterion {
        number: 5,
        suite: "inclusions",
        summary: "refinement, base agreement, and the power-swap witness",
        extra: None,
    },
    Criterion {
        number: 6,
        suite: "word-machinery",
        summary: "chain words, certificates, and absorption checks",
        extra: Some(sampled_and_exhaustive_mix),
    },
    Criterion {
        number: 7,
        suite: "isoterms",
        summary: "bounded isoterm search with bounded-pass labels",
        extra: Some(bounded_labels_everywhere),
    },
    Criterion {
        number: 8,
        suite: "free-tree",
        summary: "tree monoid sizes, quotients, and right-triviality",
        extra: Some(stretch_included),
    },
    Criterion {
        number: 9,
        suite: "hecke-lee",
        summary: "braid monoid sizes, two build routes, and the bridge maps",
        extra: Some(no_skips),
    },
    Criterion {
        number: 10,
        suite: "unitary",
        summary: "subset monoid sizes and triviality",
        extra: None,
    },
    Criterion {
        number: 11,
        suite: "bands-digraphs",
        summary: "band deletion, the mirrored word, and pendant spines",
        extra: None,
    },
    Criterion {
        number: 12,
        suite: "determinism",
        summary: "repeated runs serialize byte for byte",
        extra: Some(no_skips),
    },
];

#[test]
fn acceptance() {
    let config = SuiteConfig::default();
    let mut failures = Vec::new();
    for criterion in CRITERIA {
        let started = Instant::now();
        let mut line = format!(
            "criterion {:>2} ({}): ",
            criterion.number, criterion.summary
        );
        let report = run_suite(criterion.suite, &config)
            .unwrap_or_else(|e| panic!("suite {} failed to run: {e}", criterion.suite));
        let mut problems = Vec::new();
        for check in &report.checks {
            if check.status == CheckStatus::Fail {
                problems.push(format!(
                    "{}: expected {}, got {}",
                    check.check_id, check.expected, check.actual
                ));
            }
        }
        if let Some(extra) = criterion.extra {
            if let Err(msg) = extra(&report) {
                problems.push(msg);
            }
        }
        let (pass, fail, bounded, skipped) = report.counts();
        if problems.is_empty() {
            write!(
                line,
                "pass ({pass} exact, {bounded} bounded, {skipped} skipped, {:.1}s)",
                started.elapsed().as_secs_f64()
            )
            .unwrap();
        } else {
            write!(line, "FAIL ({fail} failing) {}", problems.join("; ")).unwrap();
            failures.push(criterion.number);
        }
        println!("{line}");
    }
    assert!(
        failures.is_empty(),
        "criteria {failures:?} failed; see the lines above"
    );
}
