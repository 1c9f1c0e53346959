use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cluster-nc"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn roots_listing() {
    let o = run(&["roots", "--system", "A2", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let rho: Vec<u64> = v["positiveRoots"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["rho"].as_u64().unwrap())
        .collect();
    assert_eq!(rho, vec![1, 2, 3]);
    let a1 = run(&["roots", "--system", "a1", "--format", "csv"]);
    assert_eq!(stdout(&a1), "rho,coords\n1,1\n");
    assert_eq!(run(&["roots", "--system", "Q9"]).status.code(), Some(2));
    assert_eq!(run(&["roots", "--system", "E9"]).status.code(), Some(2));
}

#[test]
fn verify_fm_exit_codes() {
    let o = run(&["verify-fm", "--system", "A2", "--m", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("identity holds"));
    let o = run(&["verify-fm", "--system", "A1xA1", "--m", "1", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["holds"], true);
    assert_eq!(v["lhs"], v["rhs"]);
    // (1 + x + y)^2
    assert_eq!(v["lhs"].as_array().unwrap().len(), 6);
    assert_eq!(run(&["verify-fm", "--system", "A2", "--m", "0"]).status.code(), Some(2));
    assert_eq!(run(&["verify-fm"]).status.code(), Some(2));
    assert_eq!(run(&["no-such-command"]).status.code(), Some(2));
}

#[test]
fn check_face() {
    let o = run(&["check-face", "--system", "A2", "--m", "2", "--face", "+3@2,+2@1", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["criterion"], true);
    assert_eq!(v["pairwise"], true);
    assert_eq!(v["tuple"], serde_json::json!([[3], [2]]));
    let o = run(&["check-face", "--system", "A2", "--m", "2", "--face", "+2@1,+2@2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("criterion false\npairwise false"));
    let o = run(&["check-face", "--system", "A2", "--m", "2", "--face", ""]);
    assert!(stdout(&o).contains("criterion true"));
    let o = run(&["check-face", "--system", "A2", "--face", "-1,+3@1"]);
    assert!(stdout(&o).contains("criterion true"));
    assert_eq!(
        run(&["check-face", "--system", "A2", "--face", "+9@1"]).status.code(),
        Some(2)
    );
    assert_eq!(
        run(&["check-face", "--system", "A2", "--face", "+1@2"]).status.code(),
        Some(2)
    );
}

#[test]
fn wrappers() {
    let o = run(&["m-triangle", "--system", "A1", "--m", "1"]);
    assert!(stdout(&o).starts_with("M(x,y) = 1 - x + xy\n"));
    assert_eq!(stdout(&run(&["ncm", "--system", "A2", "--m", "2", "--count"])), "12\n");
    let o = run(&["f-triangle", "--system", "A2", "--format", "csv"]);
    assert!(stdout(&o).starts_with("polynomial,xdeg,ydeg,coeff\n"));
    let o = run(&["nc", "--system", "A2"]);
    assert!(stdout(&o).contains("rank profile 1 3 1"));
    let o = run(&["ncm", "--system", "A2", "--m", "2", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["elements"].as_array().unwrap().len(), 12);
    let o = run(&["falling-chains", "--system", "A2", "--m", "2", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["count"], 7);
}

#[test]
fn output_is_byte_stable() {
    for args in [
        ["ncm", "--system", "B2", "--m", "2", "--format", "json"],
        ["falling-chains", "--system", "A3", "--m", "2", "--format", "text"],
        ["f-triangle", "--system", "G2", "--m", "2", "--format", "json"],
    ] {
        assert_eq!(run(&args).stdout, run(&args).stdout);
    }
}
