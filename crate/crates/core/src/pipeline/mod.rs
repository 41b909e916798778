//! The verification pipeline: steps S1 to S12, each producing exact checks
//! that are collected into a [`Report`].
//!
//! Steps are isolated. An error inside a step is recorded as a failed check
//! for that step and the remaining steps still run. For a characteristic
//! other than 3, the steps that assert facts specific to characteristic 3
//! are reported as skipped; the construction, invariance and cross-check
//! steps (S1, S11, S12) run for every prime.

mod context;
mod steps_a;
mod steps_generic;
mod steps_h;

use std::fmt::Display;
use std::path::PathBuf;

use serde::Serialize;

use crate::exactlin::{LinError, PrimeField};

use context::Ctx;

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl Display for Status {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped => "skipped",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub id: String,
    pub claim: String,
    pub expected: String,
    pub actual: String,
    pub status: Status,
    pub field_of_verification: String,
}

impl CheckResult {
    /// A check that passes exactly when the rendered values agree.
    pub fn compare(
        id: impl Into<String>,
        claim: impl Into<String>,
        expected: impl Display,
        actual: impl Display,
        field: impl Into<String>,
    ) -> Self {
        let (expected, actual) = (expected.to_string(), actual.to_string());
        let status = if expected == actual { Status::Pass } else { Status::Fail };
        CheckResult {
            id: id.into(),
            claim: claim.into(),
            expected,
            actual,
            status,
            field_of_verification: field.into(),
        }
    }

    pub fn skipped(id: impl Into<String>, claim: impl Into<String>, reason: impl Into<String>, field: impl Into<String>) -> Self {
        CheckResult {
            id: id.into(),
            claim: claim.into(),
            expected: "-".into(),
            actual: reason.into(),
            status: Status::Skipped,
            field_of_verification: field.into(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub version: String,
    pub p: u32,
    pub checks: Vec<CheckResult>,
    pub overall: Status,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.overall == Status::Pass
    }

    pub fn check(&self, id: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.id == id)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialises")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("blockalg {} verification report, p = {}\n", self.version, self.p));
        out.push_str(
            "All checks are exact equalities over the prime field GF(p). The structure constants \
             involved lie in GF(p), and dimensions of centres, radical powers, socles and Higman \
             ideals are unchanged by extension of scalars, so they hold over the algebraic closure \
             as well. Searches over elements (isomorphisms, split surjections) are exhaustive over \
             the field named in the last column only.\n\n",
        );
        let w_id = self.checks.iter().map(|c| c.id.len()).max().unwrap_or(2).max(2);
        for c in &self.checks {
            out.push_str(&format!(
                "{:<w_id$}  {:<7}  expected {}  actual {}  [{}]  {}\n",
                c.id, c.status, c.expected, c.actual, c.field_of_verification, c.claim
            ));
        }
        let counted = self.checks.iter().filter(|c| c.status != Status::Skipped);
        let passed = counted.clone().filter(|c| c.status == Status::Pass).count();
        out.push_str(&format!(
            "\n{} of {} checks passed, {} skipped; overall {}\n",
            passed,
            counted.count(),
            self.checks.iter().filter(|c| c.status == Status::Skipped).count(),
            self.overall
        ));
        out
    }
}

#[derive(Clone, Debug)]
pub struct PipelineConfig {
    /// Characteristic; overrides the `field` line of every input file.
    pub p: u32,
    /// Directory with `algebra_A.quiver`, `stable_centre_A.comm`,
    /// `truncated_xy.comm` and `truncated_u.comm`; the bundled copies are
    /// used when unset.
    pub specs_dir: Option<PathBuf>,
}

impl Default for PipelineConfig {
    fn default() -> Self {
        PipelineConfig { p: 3, specs_dir: None }
    }
}

/// Error carried out of a step; recorded as a failed check.
#[derive(Debug)]
pub(crate) struct StepError(pub String);

impl<E: std::error::Error> From<E> for StepError {
    fn from(e: E) -> Self {
        StepError(e.to_string())
    }
}

pub(crate) type StepResult = Result<(), StepError>;

/// Collects the checks of one step.
pub(crate) struct Recorder<'a> {
    step: &'static str,
    field: String,
    out: &'a mut Vec<CheckResult>,
}

impl Recorder<'_> {
    pub fn check(&mut self, name: &str, claim: &str, expected: impl Display, actual: impl Display) {
        let id = format!("{}.{}", self.step, name);
        let field = self.field.clone();
        self.out.push(CheckResult::compare(id, claim, expected, actual, field));
    }

    /// Same as [`Recorder::check`] but with an explicit field of verification.
    pub fn check_over(&mut self, name: &str, claim: &str, field: &str, expected: impl Display, actual: impl Display) {
        let id = format!("{}.{}", self.step, name);
        self.out.push(CheckResult::compare(id, claim, expected, actual, field));
    }

    pub fn skip(&mut self, name: &str, claim: &str, reason: &str) {
        let id = format!("{}.{}", self.step, name);
        let field = self.field.clone();
        self.out.push(CheckResult::skipped(id, claim, reason, field));
    }
}

type StepFn = fn(&Ctx, &mut Recorder) -> StepResult;

struct Step {
    id: &'static str,
    title: &'static str,
    char_3_only: bool,
    run: StepFn,
}

const STEPS: &[Step] = &[
    Step { id: "S1", title: "build and validate A", char_3_only: false, run: steps_a::s1 },
    Step { id: "S2", title: "symmetrising form and dual basis of A", char_3_only: true, run: steps_a::s2 },
    Step { id: "S3", title: "Cartan matrix, elementary divisors, decomposition matrix", char_3_only: true, run: steps_a::s3 },
    Step { id: "S4", title: "Higman ideal and stable centre of A", char_3_only: true, run: steps_a::s4 },
    Step { id: "S5", title: "Frobenius group H and its stable centre", char_3_only: true, run: steps_h::s5 },
    Step { id: "S6", title: "fixed points of E on kP", char_3_only: true, run: steps_h::s6 },
    Step { id: "S7", title: "stable centres of A and kH differ", char_3_only: true, run: steps_h::s7 },
    Step { id: "S8", title: "orbit counts of inertial quotient candidates", char_3_only: true, run: steps_h::s8 },
    Step { id: "S9", title: "fixed points of D8 on kP", char_3_only: true, run: steps_h::s9 },
    Step { id: "S10", title: "surjections onto k[u]/(u^3)", char_3_only: true, run: steps_h::s10 },
    Step { id: "S11", title: "invariance under change of basis", char_3_only: false, run: steps_generic::s11 },
    Step { id: "S12", title: "trace identity and Burnside recount", char_3_only: false, run: steps_generic::s12 },
];

/// Runs every step and assembles the report in step order.
pub fn run_pipeline(config: &PipelineConfig) -> Result<Report, LinError> {
    let field = PrimeField::new(config.p)?;
    let ctx = Ctx::new(field, config.specs_dir.clone());
    let field_label = format!("GF({})", config.p);
    let mut checks = Vec::new();
    for step in STEPS {
        let mut rec = Recorder {
            step: step.id,
            field: field_label.clone(),
            out: &mut checks,
        };
        if step.char_3_only && config.p != 3 {
            rec.skip("all", step.title, "skipped: asserted for p=3 only");
            continue;
        }
        let outcome = std::panic::catch_unwind(std::panic::AssertUnwindSafe(|| (step.run)(&ctx, &mut rec)));
        let error = match outcome {
            Ok(Ok(())) => None,
            Ok(Err(e)) => Some(e.0),
            Err(panic) => Some(
                panic
                    .downcast_ref::<String>()
                    .cloned()
                    .or_else(|| panic.downcast_ref::<&str>().map(|s| s.to_string()))
                    .unwrap_or_else(|| "panic".into()),
            ),
        };
        if let Some(message) = error {
            rec.check("error", &format!("{} completes", step.title), "ok", format!("error: {message}"));
        }
    }
    let overall = if checks.iter().all(|c| c.status != Status::Fail) {
        Status::Pass
    } else {
        Status::Fail
    };
    Ok(Report {
        version: VERSION.to_string(),
        p: config.p,
        checks,
        overall,
    })
}
