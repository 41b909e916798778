use std::fs;
use std::path::Path;

use blockalg::pipeline::{run_pipeline, PipelineConfig, Status};

const SPECS: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/../../specs");

fn copy_specs(to: &Path) {
    for entry in fs::read_dir(SPECS).unwrap() {
        let entry = entry.unwrap();
        fs::copy(entry.path(), to.join(entry.file_name())).unwrap();
    }
}

#[test]
fn default_run_passes_and_reports_the_obstruction() {
    let report = run_pipeline(&PipelineConfig::default()).unwrap();
    assert!(report.passed(), "{}", report.to_text());
    assert_eq!(report.check("S7.J2_A").unwrap().actual, "2");
    assert_eq!(report.check("S7.J2_kH").unwrap().actual, "1");
    assert!(report.checks.iter().all(|c| c.status == Status::Pass));
}

#[test]
fn reports_are_deterministic() {
    let a = run_pipeline(&PipelineConfig::default()).unwrap().to_json();
    let b = run_pipeline(&PipelineConfig::default()).unwrap().to_json();
    assert_eq!(a, b);
}

#[test]
fn check_ids_are_unique_and_in_step_order() {
    let report = run_pipeline(&PipelineConfig::default()).unwrap();
    let mut seen = std::collections::BTreeSet::new();
    let mut last_step = 0;
    for c in &report.checks {
        assert!(seen.insert(c.id.clone()), "duplicate {}", c.id);
        let step: u32 = c.id[1..c.id.find('.').unwrap()].parse().unwrap();
        assert!(step >= last_step);
        last_step = step;
        assert_eq!(c.status == Status::Pass, c.expected == c.actual);
    }
    assert_eq!(last_step, 12);
}

#[test]
fn bundled_and_on_disk_specs_agree() {
    let bundled = run_pipeline(&PipelineConfig::default()).unwrap();
    let on_disk = run_pipeline(&PipelineConfig {
        p: 3,
        specs_dir: Some(SPECS.into()),
    })
    .unwrap();
    assert_eq!(bundled, on_disk);
}

#[test]
fn other_primes_skip_the_characteristic_3_steps() {
    for p in [2, 5, 7] {
        let report = run_pipeline(&PipelineConfig { p, specs_dir: None }).unwrap();
        assert!(report.passed(), "{}", report.to_text());
        for step in 2..=10 {
            let c = report.check(&format!("S{step}.all")).unwrap();
            assert_eq!(c.status, Status::Skipped);
            assert_eq!(c.actual, "skipped: asserted for p=3 only");
        }
        for id in ["S1.centre_dim", "S11.basis_change_values", "S12.trace_identity"] {
            assert_eq!(report.check(id).unwrap().status, Status::Pass, "{id} at p={p}");
        }
    }
}

#[test]
fn corrupted_relation_fails_s1_and_the_report_is_still_emitted() {
    let dir = tempfile::tempdir().unwrap();
    copy_specs(dir.path());
    let quiver = dir.path().join("algebra_A.quiver");
    let text = fs::read_to_string(&quiver).unwrap();
    assert!(text.contains("relation beta.gamma"));
    fs::write(&quiver, text.replace("relation beta.gamma\n", "")).unwrap();

    let report = run_pipeline(&PipelineConfig {
        p: 3,
        specs_dir: Some(dir.path().into()),
    })
    .unwrap();
    assert_eq!(report.overall, Status::Fail);
    assert_eq!(report.check("S1.dim_A").unwrap().status, Status::Fail);
    // Later steps still ran.
    assert!(report.check("S12.trace_identity").is_some());
    assert_eq!(report.check("S8.orbits.D8").unwrap().status, Status::Pass);
}

#[test]
fn unreadable_input_becomes_a_failed_check() {
    let dir = tempfile::tempdir().unwrap();
    copy_specs(dir.path());
    fs::write(dir.path().join("stable_centre_A.comm"), "field 3\ngenerators x\nrelation x^^2\n").unwrap();
    let report = run_pipeline(&PipelineConfig {
        p: 3,
        specs_dir: Some(dir.path().into()),
    })
    .unwrap();
    assert_eq!(report.overall, Status::Fail);
    assert_eq!(report.check("S4.error").unwrap().status, Status::Fail);
    assert_eq!(report.check("S1.dim_A").unwrap().status, Status::Pass);
    assert_eq!(report.check("S5.Zbar_dim").unwrap().status, Status::Pass);
}
