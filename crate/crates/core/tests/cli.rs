use std::path::PathBuf;
use std::process::Command;

use fusionburnside::cli::{run, Format, InputSource, RunConfig, Subcommand};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_fusionburnside"))
}

fn scratch(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("fusionburnside-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

fn cfg(sub: Subcommand, catalog: &str, format: Format) -> RunConfig {
    RunConfig {
        format,
        ..RunConfig::new(sub).catalog(catalog)
    }
}

#[test]
fn demo_reports_the_restrictions() {
    let out = run(&RunConfig::new(Subcommand::Demo));
    assert_eq!(out.status, 0, "{}", out.stdout);
    assert!(out.stdout.contains("5·[D8/1]"));
    assert!(out.stdout.contains("3·[D8/1]"));
    assert!(out.stdout.contains("15·[D8/1]"));
    assert!(!out.stdout.contains("MISMATCH"));
}

#[test]
fn classes_of_d8_has_eight_rows() {
    let out = run(&cfg(Subcommand::Classes, "D8", Format::Csv));
    assert_eq!(out.status, 0);
    let lines: Vec<&str> = out.stdout.lines().collect();
    assert_eq!(
        lines[0],
        "label,order,class_size,normalizer_order,weyl_order"
    );
    assert_eq!(lines.len(), 9);
    assert_eq!(lines[1], "8:0,8,1,8,1");
    assert_eq!(lines[8], "1:0,1,1,8,8");
}

#[test]
fn verify_c2_passes() {
    let out = run(&cfg(Subcommand::Verify, "C2", Format::Text));
    assert_eq!(out.status, 0, "{}", out.stdout);
    assert_eq!(out.stdout.matches("PASS").count(), 8);
    assert!(!out.stdout.contains("FAIL"));
}

#[test]
fn csv_output_is_deterministic() {
    for sub in [
        Subcommand::Marks,
        Subcommand::Classes,
        Subcommand::Fusion,
        Subcommand::Alpha,
        Subcommand::Verify,
    ] {
        for name in ["D8", "S5", "Q8"] {
            let a = run(&cfg(sub, name, Format::Csv));
            let b = run(&cfg(sub, name, Format::Csv));
            assert_eq!(a.status, 0, "{:?} {}: {}", sub, name, a.stderr);
            assert_eq!(a, b);
        }
    }
    let a = bin()
        .args(["alpha", "--catalog", "S4", "--format", "csv"])
        .output()
        .unwrap();
    let b = bin()
        .args(["alpha", "--catalog", "S4", "--format", "csv"])
        .output()
        .unwrap();
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn json_is_keyed_by_label() {
    let out = run(&cfg(Subcommand::Marks, "C2", Format::Json));
    let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["1:0"]["2:0"], 1);
    assert_eq!(v["1:0"]["1:0"], 2);
    assert_eq!(v["2:0"]["1:0"], 0);
    let out = run(&cfg(Subcommand::Alpha, "S5", Format::Json));
    let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v.as_object().unwrap().len(), 7);
    let out = run(&cfg(Subcommand::Verify, "D8", Format::Json));
    let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["group"]["passed"], true);
    assert_eq!(v["fusion"]["obstruction_order"], 1024);
}

#[test]
fn group_file_input() {
    let path = scratch(
        "d8.txt",
        "# dihedral of order 8\ndegree 4\n(1 2 3 4)\n\n(1 3)\n",
    );
    let mut c = RunConfig::new(Subcommand::Classes);
    c.input = Some(InputSource::File(path.clone()));
    c.format = Format::Csv;
    let from_file = run(&c);
    assert_eq!(from_file.status, 0, "{}", from_file.stderr);
    assert_eq!(
        from_file.stdout,
        run(&cfg(Subcommand::Classes, "D8", Format::Csv)).stdout
    );

    let out = bin()
        .args(["fusion", "--group"])
        .arg(&path)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn malformed_input_exits_2() {
    let bad = scratch("bad.txt", "degree 4\n(1 5)\n");
    let out = bin()
        .args(["classes", "--group"])
        .arg(&bad)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));

    let out = bin()
        .args(["classes", "--catalog", "Nope"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("D8"));

    let out = bin()
        .args(["classes", "--catalog", "S4", "--prime", "4"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));

    let out = bin().args(["classes"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));

    let six = scratch("s3.txt", "degree 3\n(1 2)\n(1 2 3)\n");
    let out = bin()
        .args(["classes", "--group"])
        .arg(&six)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2), "no prime for a non p-group");
    let out = bin()
        .args(["classes", "--prime", "3", "--group"])
        .arg(&six)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));

    let out = bin()
        .args(["decompose", "--catalog", "D8"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn decompose_element_files() {
    let classes = run(&cfg(Subcommand::Classes, "S5", Format::Csv)).stdout;
    let labels: Vec<String> = classes
        .lines()
        .skip(1)
        .map(|l| l.split(',').next().unwrap().to_string())
        .collect();
    let row = |f: &dyn Fn(&str) -> i64| -> String {
        format!(
            "{}\n{}\n",
            labels.join(","),
            labels
                .iter()
                .map(|l| f(l).to_string())
                .collect::<Vec<_>>()
                .join(",")
        )
    };
    // 3·[S5/H] restricted to D8 is 15 free orbits
    let free = scratch("free.csv", &row(&|l| if l == "1:0" { 15 } else { 0 }));
    let out = bin()
        .args([
            "decompose",
            "--catalog",
            "S5",
            "--format",
            "csv",
            "--element",
        ])
        .arg(&free)
        .output()
        .unwrap();
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    let header: Vec<&str> = lines.next().unwrap().split(',').collect();
    let values: Vec<&str> = lines.next().unwrap().split(',').collect();
    assert_eq!(header.len(), 7);
    for (h, v) in header.iter().zip(&values) {
        assert_eq!(*v, if *h == "[1:0]_F" { "15" } else { "0" }, "{}", h);
    }

    let fused = run(&cfg(Subcommand::Fusion, "S5", Format::Csv));
    let fused_row = fused
        .stdout
        .lines()
        .find(|l| l.contains(' '))
        .unwrap()
        .to_string();
    let rep = fused_row.rsplit(',').next().unwrap();
    let unstable = scratch("unstable.csv", &row(&|l| (l == rep) as i64));
    let out = bin()
        .args(["decompose", "--catalog", "S5", "--element"])
        .arg(&unstable)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(
        err.contains("not F-stable") && err.contains(&format!("[{}]_F", rep)),
        "{}",
        err
    );

    let garbage = scratch("garbage.csv", "1:0,9:9\n1,2\n");
    let out = bin()
        .args(["decompose", "--catalog", "S5", "--element"])
        .arg(&garbage)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verbose_lists_representatives() {
    let mut c = cfg(Subcommand::Classes, "C2", Format::Text);
    c.verbose = true;
    let out = run(&c);
    assert!(out.stdout.contains("(1 2)"));
    let plain = run(&cfg(Subcommand::Classes, "C2", Format::Text));
    assert!(!plain.stdout.contains("(1 2)"));
}
