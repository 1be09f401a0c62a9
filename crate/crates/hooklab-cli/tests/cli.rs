//! End-to-end runs of the `hooklab` binary.

use std::process::{Command, Output};

use serde_json::Value;

fn hooklab(args: &[&str], threads: Option<&str>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_hooklab"));
    cmd.args(args);
    match threads {
        Some(t) => cmd.env("HOOKLAB_THREADS", t),
        None => cmd.env_remove("HOOKLAB_THREADS"),
    };
    cmd.output().expect("spawn hooklab")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("json output")
}

#[test]
fn verify_khlf_embeds_closed_form() {
    let out = hooklab(&["verify", "khlf", "--shape", "2,2", "--d", "2", "--mode", "exact-beta"], None);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    let r = &v["reports"][0];
    assert_eq!(r["pass"], true);
    assert_eq!(r["rhs"], "(12*beta^4 + 14*beta^3 + 73/12*beta^2 + 7/6*beta + 1/12)/(beta^4)");
}

#[test]
fn enumerate_generalized_excited() {
    let out = hooklab(&["enumerate", "--family", "gexcited", "--shape", "3,3,2/2,1"], None);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["count"], 11);
    assert_eq!(v["diagrams"].as_array().unwrap().len(), 11);
    let d = &v["diagrams"][0];
    assert_eq!(d["ambient"], "3,3,2");
    assert!(d["cells"][0]["r"].is_u64() && d["cells"][0]["c"].is_u64());
    assert!(d["peaks"].is_array());
}

#[test]
fn enumerate_tableaux_schema() {
    let out = hooklab(&["enumerate", "--family", "sit", "--shape", "4,4,2/2,1", "--format", "json"], None);
    let v = json(&out);
    assert_eq!(v["shape"], "4,4,2/2,1");
    assert_eq!(v["family"], "sit");
    let ts = v["tableaux"].as_array().unwrap();
    assert_eq!(v["count"].as_u64().unwrap() as usize, ts.len());
    let cell = &ts[0]["cells"][0];
    assert!(cell["r"].is_u64() && cell["c"].is_u64() && cell["entry"].is_u64());

    let out = hooklab(&["enumerate", "--family", "ssvt", "--shape", "1", "--d", "2"], None);
    let v = json(&out);
    assert_eq!(v["count"], 3);
    assert!(v["tableaux"][0]["cells"][0]["entries"].is_array());
}

#[test]
fn excited_diagrams_carry_peaks() {
    let v = json(&hooklab(&["enumerate", "--family", "excited", "--shape", "3,3,2/2,1"], None));
    assert_eq!(v["count"], 5);
    let peaks: usize = v["diagrams"].as_array().unwrap().iter().map(|d| d["peaks"].as_array().unwrap().len()).sum();
    // Σ 2^{|π(D)|} = 11 over the five excited diagrams needs some peaks.
    assert!(peaks > 0);
}

#[test]
fn sweep_output_is_identical_across_thread_counts() {
    let args = ["sweep", "--max-size", "3", "--identities", "all", "--seed", "7", "--trials", "3"];
    let one = hooklab(&args, Some("1"));
    let four = hooklab(&args, Some("4"));
    assert_eq!(one.status.code(), Some(0), "{}", String::from_utf8_lossy(&one.stdout));
    assert_eq!(one.stdout, four.stdout);
    let flag = hooklab(&[&args[..], &["--threads", "2"]].concat(), None);
    assert_eq!(one.stdout, flag.stdout);
    let v = json(&one);
    assert_eq!(v["failed"], 0);
    assert!(v["total"].as_u64().unwrap() > 100);
}

#[test]
fn stated_forms_fail_with_exit_one() {
    let out = hooklab(&["verify", "bsyt", "--shape", "1", "--d", "1"], None);
    assert_eq!(out.status.code(), Some(1));
    let r = &json(&out)["reports"][0];
    assert_eq!(r["lhs"], "0");
    assert_eq!(r["rhs"], "-1/2");
}

#[test]
fn argument_errors_exit_two() {
    assert_eq!(hooklab(&["verify", "no-such-identity", "--shape", "1"], None).status.code(), Some(2));
    assert_eq!(hooklab(&["verify", "hlf", "--shape", "1,2"], None).status.code(), Some(2));
    assert_eq!(hooklab(&["verify", "hlf", "--shape", "2,1", "--mode", "exact-q"], None).status.code(), Some(2));
    assert_eq!(hooklab(&["verify", "khlf", "--shape", "2,1", "--d", "1"], None).status.code(), Some(2));
    assert_eq!(hooklab(&["enumerate", "--family", "rpp", "--shape", "2"], None).status.code(), Some(2));
}

#[test]
fn csv_carries_flags_only() {
    let out = hooklab(&["verify", "khlf", "--shape", "2,1", "--format", "csv"], None);
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text, "identity,shape,d,mode,pass\nkhlf,\"2,1\",2,exact-beta,true\n");
}

#[test]
fn config_file_supplies_defaults() {
    let dir = std::env::temp_dir().join(format!("hooklab-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("run.conf");
    std::fs::write(&path, "# defaults\nshape = 3,3,2/2,1\nfamily = pleasant\nformat = csv\n").unwrap();
    let out = hooklab(&["enumerate", "--config", path.to_str().unwrap()], None);
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "shape,family,count\n\"3,3,2/2,1\",pleasant,88\n");
    let out = hooklab(&["enumerate", "--config", path.to_str().unwrap(), "--family", "excited"], None);
    assert!(String::from_utf8(out.stdout).unwrap().contains("excited,5"));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn groth_expansions() {
    let v = json(&hooklab(&["groth", "--perm", "1432", "--mode", "principal"], None));
    assert_eq!(v["value"], "beta^2 + 5*beta + 5");
    let v = json(&hooklab(&["groth", "--perm", "1432", "--mode", "principal", "--beta", "-1/2"], None));
    assert_eq!(v["value"], "11/4");
    let v = json(&hooklab(&["groth", "--perm", "1432", "--mode", "double", "--drop-y"], None));
    let value = v["value"].as_str().unwrap();
    assert_eq!(value.split(" + ").count(), 9);
    assert!(value.contains("beta^2*x1^2*x2^2*x3"));
}

#[test]
fn pair_and_permutation_subjects() {
    let out = hooklab(&["verify", "thick-zigzag", "--pair", "3,2"], None);
    assert_eq!(out.status.code(), Some(0));
    let out = hooklab(&["verify", "gamma-det-bound", "--perm", "1432"], None);
    assert_eq!(out.status.code(), Some(0));
}
