use std::process::Command;

use serde_json::Value;

fn run(args: &[&str]) -> (i32, String) {
    let o = Command::new(env!("CARGO_BIN_EXE_contagrid"))
        .args(args)
        .output()
        .unwrap();
    (
        o.status.code().unwrap(),
        String::from_utf8(o.stdout).unwrap(),
    )
}

#[test]
fn scenario_file_round_trips() {
    let dir = std::env::temp_dir().join(format!("contagrid-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("s.json");
    let original = r#"{"n":4,"m":5,"seeds":[[1,1],[2,3],[4,5]]}"#;
    std::fs::write(&path, original).unwrap();

    let (code, out) = run(&["simulate", "--scenario", path.to_str().unwrap(), "--json"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["full"], true);
    let back = serde_json::json!({"n": v["n"], "m": v["m"], "seeds": v["seeds"]});
    assert_eq!(back, serde_json::from_str::<Value>(original).unwrap());
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn exit_codes() {
    assert_eq!(
        run(&["simulate", "--dims", "3x3", "--seeds", "1,1;3,3"]),
        (0, "FULL\n".into())
    );
    assert_eq!(run(&["simulate", "--dims", "2x4", "--seeds", "1,1"]).0, 2);
    assert_eq!(run(&["gamma", "--dims", "0x3"]).0, 64);
    assert_eq!(run(&["nonsense"]).0, 64);
}

#[test]
fn outputs_are_byte_stable() {
    for args in [
        &["table", "alpha", "--max", "4", "--format", "csv"][..],
        &["table", "gamma", "--max", "6", "--format", "json"],
        &["beta", "--dims", "3x3", "--format", "csv", "--witnesses"],
    ] {
        let first = run(args);
        assert_eq!(first.0, 0);
        for jobs in ["1", "3"] {
            let mut a = args.to_vec();
            a.extend(["--jobs", jobs]);
            assert_eq!(run(&a), first, "{args:?}");
        }
    }
}

#[test]
fn small_values() {
    assert_eq!(run(&["gamma", "--dims", "2x7"]).1, "5\n");
    assert_eq!(run(&["alpha", "--dims", "3x4"]).1, "20\n");
    assert_eq!(run(&["beta", "--dims", "1x5"]).1, "5\n");
    let (_, csv) = run(&["table", "gamma", "--max", "2"]);
    assert_eq!(csv, "n,m,gamma\n1,1,1\n1,2,2\n2,2,2\n");
}
