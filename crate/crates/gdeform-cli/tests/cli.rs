//! End-to-end checks of the binary: determinism, exit codes, file I/O.

use std::path::PathBuf;
use std::process::Command;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_gdeform"))
}

fn tmp(name: &str) -> PathBuf {
    let mut p = std::env::temp_dir();
    p.push(format!("gdeform-cli-test-{}-{}", std::process::id(), name));
    p
}

#[test]
fn quantum_study_is_deterministic_and_exits_zero() {
    let out1 = tmp("q1.json");
    let out2 = tmp("q2.json");
    for out in [&out1, &out2] {
        let status = bin()
            .args([
                "casestudy",
                "--study",
                "quantum",
                "--params",
                "2,3",
                "--cutoff",
                "3",
                "--format",
                "json",
                "--out",
            ])
            .arg(out)
            .status()
            .unwrap();
        assert!(status.success());
    }
    let a = std::fs::read(&out1).unwrap();
    let b = std::fs::read(&out2).unwrap();
    assert_eq!(a, b, "identical inputs must produce byte-identical reports");
    let _ = std::fs::remove_file(&out1);
    let _ = std::fs::remove_file(&out2);
}

#[test]
fn diff_exit_codes() {
    let same = tmp("same.json");
    let other = tmp("other.json");
    bin()
        .args([
            "casestudy", "--study", "quantum", "--params", "1,1", "--cutoff", "3", "--format",
            "json", "--out",
        ])
        .arg(&same)
        .status()
        .unwrap();
    bin()
        .args([
            "casestudy", "--study", "quantum", "--params", "5,1", "--cutoff", "3", "--format",
            "json", "--out",
        ])
        .arg(&other)
        .status()
        .unwrap();

    let identical = bin().arg("diff").arg(&same).arg(&same).output().unwrap();
    assert!(identical.status.success());
    assert!(String::from_utf8_lossy(&identical.stdout).contains("identical"));

    let different = bin().arg("diff").arg(&same).arg(&other).status().unwrap();
    assert_eq!(different.code(), Some(1));
    let _ = std::fs::remove_file(&same);
    let _ = std::fs::remove_file(&other);
}

#[test]
fn decompose_builtin_symmetric_group() {
    let output = bin()
        .args(["decompose", "--group", "sym:4", "--degree", "2"])
        .output()
        .unwrap();
    assert!(output.status.success());
    let text = String::from_utf8_lossy(&output.stdout);
    assert!(text.contains("multiplicities"));
    assert!(text.contains("[2,2]"));
}

#[test]
fn hilbert_and_pointscheme_from_presentation_file() {
    // the commutative plane as a JSON presentation
    let file = tmp("plane.json");
    let body = serde_json::json!({
        "schema": "presentation-v1",
        "generators": ["x", "y"],
        "conductor": 1,
        "cutoff": 4,
        "relations": [
            { "degree": 2, "vectors": [["0", "1", "-1", "0"]] }
        ]
    });
    std::fs::write(&file, serde_json::to_string_pretty(&body).unwrap()).unwrap();

    let hilbert = bin()
        .args(["hilbert", "--presentation"])
        .arg(&file)
        .args(["--cutoff", "4"])
        .output()
        .unwrap();
    assert!(hilbert.status.success());
    assert!(String::from_utf8_lossy(&hilbert.stdout).contains("[1, 2, 3, 4, 5]"));

    let ps = bin()
        .args(["pointscheme", "--presentation"])
        .arg(&file)
        .output()
        .unwrap();
    assert!(ps.status.success());
    assert!(String::from_utf8_lossy(&ps.stdout).contains("all of P^1"));
    let _ = std::fs::remove_file(&file);
}

#[test]
fn deform_command_reports_the_canonical_point() {
    // commutative relations on three generators, under sym:3
    let file = tmp("poly3.json");
    let dim = 3usize;
    let mut vectors = Vec::new();
    for i in 0..dim {
        for j in (i + 1)..dim {
            let mut v = vec!["0".to_string(); dim * dim];
            v[i * dim + j] = "1".into();
            v[j * dim + i] = "-1".into();
            vectors.push(v);
        }
    }
    let body = serde_json::json!({
        "schema": "presentation-v1",
        "generators": ["x0", "x1", "x2"],
        "conductor": 1,
        "cutoff": 4,
        "relations": [ { "degree": 2, "vectors": vectors } ]
    });
    std::fs::write(&file, serde_json::to_string_pretty(&body).unwrap()).unwrap();
    let output = bin()
        .args(["deform", "--group", "sym:3", "--presentation"])
        .arg(&file)
        .output()
        .unwrap();
    assert!(output.status.success(), "{}", String::from_utf8_lossy(&output.stderr));
    let text = String::from_utf8_lossy(&output.stdout);
    assert!(text.contains("Grass(1,1)"));
    assert!(text.contains("Grass(1,3)"));
    assert!(text.contains("PASS presentation_is_stable"));
    let _ = std::fs::remove_file(&file);
}

#[test]
fn bad_study_name_exits_with_error_code() {
    let status = bin()
        .args(["casestudy", "--study", "nonsense"])
        .status()
        .unwrap();
    assert_eq!(status.code(), Some(2));
}

#[test]
fn column_cap_env_var_is_honored() {
    let file = tmp("cap.json");
    let body = serde_json::json!({
        "schema": "presentation-v1",
        "generators": ["x", "y", "z"],
        "conductor": 1,
        "cutoff": 5,
        "relations": []
    });
    std::fs::write(&file, serde_json::to_string_pretty(&body).unwrap()).unwrap();
    let output = bin()
        .env("G_DEFORM_MAX_COLS", "10")
        .args(["hilbert", "--presentation"])
        .arg(&file)
        .args(["--cutoff", "5"])
        .output()
        .unwrap();
    assert_eq!(output.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&output.stderr).contains("column cap"));
    let _ = std::fs::remove_file(&file);
}
