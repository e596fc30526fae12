use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn itqft(args: &[&str], cache: Option<&Path>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_itqft"));
    cmd.args(args).env_remove("ITQFT_CACHE_DIR");
    if let Some(dir) = cache {
        cmd.env("ITQFT_CACHE_DIR", dir);
    }
    cmd.output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn verify_a1_at_5_passes() {
    let o = itqft(&["verify", "--type", "A1", "--r", "5"], None);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("all checks passed"));
}

#[test]
fn inadmissible_pairs_exit_with_usage_error() {
    let o = itqft(&["verify", "--type", "A1", "--r", "4"], None);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("not prime"));
    let o = itqft(&["verify", "--type", "B2", "--r", "3"], None);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("m(B2) = 4"));
    let o = itqft(&["verify", "--type", "G2", "--r", "13"], None);
    assert_eq!(o.status.code(), Some(2));
    let o = itqft(&["frobnicate"], None);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn tables_for_a2_at_7() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("tables");
    let o = itqft(&["tables", "--type", "A2", "--r", "7", "--out", out.to_str().unwrap()], None);
    assert_eq!(o.status.code(), Some(0));
    let s: serde_json::Value = serde_json::from_slice(&fs::read(out.join("smatrix.json")).unwrap()).unwrap();
    assert_eq!(s["labels"].as_array().unwrap().len(), 5);
    assert_eq!(s["s"].as_array().unwrap().len(), 5);
    let f: serde_json::Value = serde_json::from_slice(&fs::read(out.join("fusion.json")).unwrap()).unwrap();
    assert_eq!(f["labels"].as_array().unwrap().len(), 5);
    assert!(out.join("modular.json").exists());
}

#[test]
fn invariant_of_s1_x_s2_is_one() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("s1s2.json");
    fs::write(&file, r#"{"lie_type":"A","rank":1,"r":7,"weight":0,"pieces":[{"unknot":0}]}"#).unwrap();
    let o = itqft(&["invariant", file.to_str().unwrap(), "--json"], None);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["rpow"], 0);
    let text = itqft(&["invariant", file.to_str().unwrap()], None);
    assert!(stdout(&text).starts_with("[M] = 1\n"));
}

#[test]
fn malformed_presentation_reports_position() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("bad.json");
    fs::write(&file, "{\"lie_type\":\"A\",\"rank\":1,\n\"r\":5,\"weight\":0,\"pieces\":[{\"hopf\":[1]}]}").unwrap();
    let o = itqft(&["invariant", file.to_str().unwrap()], None);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2 column"));
}

#[test]
fn lens_sweep_csv() {
    let o = itqft(&["sweep-lens", "--type", "A1", "--r", "5", "--pmax", "12", "--csv"], None);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.starts_with("pieces,weight,even,"));
    assert_eq!(out.lines().count(), 1 + 24);
}

#[test]
fn outputs_are_deterministic_and_cache_hits_match_cold_runs() {
    let dir = tempfile::tempdir().unwrap();
    let args = ["smatrix", "--type", "B2", "--r", "7", "--json"];
    let cold = itqft(&args, None);
    let first = itqft(&args, Some(dir.path()));
    let cached = itqft(&args, Some(dir.path()));
    assert_eq!(cold.status.code(), Some(0));
    assert_eq!(cold.stdout, first.stdout);
    assert_eq!(cold.stdout, cached.stdout);
    let fusion = ["fusion", "--type", "B2", "--r", "7", "--json"];
    assert_eq!(itqft(&fusion, None).stdout, itqft(&fusion, Some(dir.path())).stdout);
}

#[test]
fn tampered_cache_is_recomputed() {
    let dir = tempfile::tempdir().unwrap();
    let args = ["fusion", "--type", "A1", "--r", "7", "--json"];
    let cold = itqft(&args, Some(dir.path()));
    let entry = dir.path().join("A1_r7").join("fusion.json");
    let body = fs::read_to_string(&entry).unwrap();
    let tampered = body.replacen("\"n\":1", "\"n\":2", 1);
    assert_ne!(body, tampered);
    fs::write(&entry, tampered).unwrap();
    let warm = itqft(&args, Some(dir.path()));
    assert_eq!(warm.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&warm.stderr).contains("integrity check"));
    assert_eq!(cold.stdout, warm.stdout);
    // the entry was rewritten
    assert_eq!(fs::read_to_string(&entry).unwrap(), body);
}

#[test]
fn cache_entry_with_valid_digest_but_wrong_rules_is_rejected() {
    use sha2::{Digest, Sha256};
    let dir = tempfile::tempdir().unwrap();
    let args = ["fusion", "--type", "A1", "--r", "7", "--json"];
    let cold = itqft(&args, Some(dir.path()));
    let entry = dir.path().join("A1_r7");
    let body = fs::read_to_string(entry.join("fusion.json")).unwrap();
    let tampered = body.replacen("\"n\":1", "\"n\":2", 1);
    fs::write(entry.join("fusion.json"), &tampered).unwrap();
    fs::write(entry.join("fusion.sha256"), hex::encode(Sha256::digest(tampered.as_bytes()))).unwrap();
    let warm = itqft(&args, Some(dir.path()));
    assert_eq!(warm.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&warm.stderr).contains("rejected"));
    assert_eq!(cold.stdout, warm.stdout);
}
