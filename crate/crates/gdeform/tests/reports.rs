//! Report pipeline checks across whole case studies: determinism and the
//! field-wise diff.

use gdeform::casestudy::{cmd_casestudy, report_diff, CaseStudyConfig, Stratum, Study};
use gdeform::exact::CycScalar;

fn config(study: Study) -> CaseStudyConfig {
    CaseStudyConfig {
        study,
        n: 2,
        stratum: Stratum::Differential,
        params: vec![CycScalar::one()],
        cutoff: 3,
        samples: 10,
    }
}

#[test]
fn identical_runs_have_identical_reports_and_empty_diff() {
    let a = cmd_casestudy(&config(Study::Quantum)).unwrap();
    let b = cmd_casestudy(&config(Study::Quantum)).unwrap();
    assert_eq!(a.to_json(), b.to_json());
    assert!(report_diff(&a, &b).unwrap().is_empty());
}

#[test]
fn clifford_parameters_differ_in_the_hilbert_row() {
    let mut left_config = config(Study::Clifford);
    left_config.params = vec![CycScalar::one(), CycScalar::one()]; // degenerate point
    let right_config = CaseStudyConfig {
        params: vec![CycScalar::from_int(2), CycScalar::one()],
        ..config(Study::Clifford)
    };
    let left = cmd_casestudy(&left_config).unwrap();
    let right = cmd_casestudy(&right_config).unwrap();
    let diff = report_diff(&left, &right).unwrap();
    assert!(!diff.is_empty());
    assert!(
        diff.iter().any(|e| e.path.starts_with("section.hilbert")),
        "expected a hilbert difference, got {:?}",
        diff
    );
}

#[test]
fn skew_and_differential_strata_differ_in_the_point_scheme() {
    let skew = cmd_casestudy(&CaseStudyConfig {
        stratum: Stratum::Skew,
        params: vec![CycScalar::from_int(2)],
        ..config(Study::Snp1)
    })
    .unwrap();
    let diff_stratum = cmd_casestudy(&CaseStudyConfig {
        stratum: Stratum::Differential,
        ..config(Study::Snp1)
    })
    .unwrap();
    let diff = report_diff(&skew, &diff_stratum).unwrap();
    assert!(!diff.is_empty());
    // the skew report carries the projective-space verdict, the differential
    // report the line sections
    assert!(diff
        .iter()
        .any(|e| e.path.contains("point_scheme") || e.path.contains("lines")));
    // different studies refuse to diff
    let quantum = cmd_casestudy(&config(Study::Quantum)).unwrap();
    assert!(report_diff(&skew, &quantum).is_err());
}
