mod common;

use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use msfractal::classify::ClassificationReport;
use msfractal::synthetic::{gaussian_classes, texture, TextureKind};
use msfractal::texture_io::{save_pgm, GrayImage};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_msfractal"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn p(path: &Path) -> &str {
    path.to_str().unwrap()
}

fn csv_width(path: &Path) -> Vec<usize> {
    fs::read_to_string(path)
        .unwrap()
        .lines()
        .map(|l| l.split(',').count() - 2)
        .collect()
}

#[test]
fn describe_constant_image() {
    let tmp = tempfile::tempdir().unwrap();
    let img = tmp.path().join("flat.pgm");
    save_pgm(&GrayImage::constant(64, 64, 33).unwrap(), &img).unwrap();
    let out = tmp.path().join("out");
    let o = run(&["describe", p(&img), "--out", p(&out)]);
    assert!(o.status.success(), "{}", stderr(&o));
    let text = stdout(&o);
    assert!(text.contains("descriptors: 51"), "{text}");
    let dim: f64 = text
        .lines()
        .find_map(|l| l.strip_prefix("dimension: "))
        .unwrap()
        .parse()
        .unwrap();
    assert!((1.85..=2.15).contains(&dim), "{dim}");
    assert_eq!(csv_width(&out.join("descriptors.csv")), vec![51, 51]);
    let curve = fs::read_to_string(out.join("volume_curve.csv")).unwrap();
    assert!(curve.starts_with("radius,sq_radius,volume\n0.000000,0,4096\n"));
    assert_eq!(curve.lines().count(), 87);
}

#[test]
fn describe_raw_mode_keeps_full_curve() {
    let tmp = tempfile::tempdir().unwrap();
    let img = tmp.path().join("n.pgm");
    save_pgm(&texture(TextureKind::Noise { lo: 0, hi: 40 }, 24, 24, 1).unwrap(), &img).unwrap();
    let out = tmp.path().join("out");
    let o = run(&[
        "describe",
        p(&img),
        "--out",
        p(&out),
        "--set",
        "descriptor_mode=raw-minkowski",
    ]);
    assert!(o.status.success(), "{}", stderr(&o));
    let curve_len = fs::read_to_string(out.join("volume_curve.csv")).unwrap().lines().count() - 2;
    assert_eq!(csv_width(&out.join("descriptors.csv"))[1], curve_len);
    assert_eq!(curve_len, 85);
}

#[test]
fn describe_missing_file() {
    let tmp = tempfile::tempdir().unwrap();
    let o = run(&["describe", "/definitely/missing.pgm", "--out", p(tmp.path())]);
    assert_eq!(o.status.code(), Some(2));
    let err = stderr(&o);
    assert!(err.starts_with("error[FileNotFound]"), "{err}");
    assert_eq!(err.lines().count(), 1);
}

#[test]
fn dataset_rows_and_determinism() {
    let tmp = tempfile::tempdir().unwrap();
    let root = tmp.path().join("data");
    common::write_class_tree(
        &root,
        &[
            ("flat", TextureKind::Constant(10)),
            ("rough", TextureKind::Noise { lo: 0, hi: 60 }),
        ],
        2,
        32,
        32,
    );
    let args = |out: &Path| {
        run(&[
            "dataset",
            p(&root),
            "--out",
            p(out),
            "--set",
            "window_rows=2",
            "--set",
            "window_cols=2",
            "--jobs",
            "3",
        ])
    };
    let (a, b) = (tmp.path().join("a"), tmp.path().join("b"));
    let o = args(&a);
    assert!(o.status.success(), "{}", stderr(&o));
    assert!(stdout(&o).contains("rows: 16"));
    assert!(stderr(&o).contains("class 2/2 'rough': 8 windows"));
    assert!(args(&b).status.success());
    let fa = fs::read(a.join("features.csv")).unwrap();
    assert_eq!(fa, fs::read(b.join("features.csv")).unwrap());
    let text = String::from_utf8(fa).unwrap();
    let keys: Vec<&str> = text.lines().skip(1).map(|l| &l[..l.find(',').unwrap() + 2]).collect();
    assert_eq!(keys.len(), 16);
    assert!(keys[..8].iter().all(|k| k.starts_with("0,")));
}

#[test]
fn dataset_errors() {
    let tmp = tempfile::tempdir().unwrap();
    let root = tmp.path().join("data");
    common::write_class_tree(&root, &[("a", TextureKind::Constant(1))], 2, 8, 8);
    common::write_class_tree(&root, &[("b", TextureKind::Constant(2))], 3, 8, 8);
    let out = tmp.path().join("out");
    let o = run(&["dataset", p(&root), "--out", p(&out)]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).starts_with("error[RaggedDataset]"));
    assert!(!out.join("features.csv").exists());

    let empty = tmp.path().join("empty");
    fs::create_dir_all(&empty).unwrap();
    let o = run(&["pipeline", p(&empty), "--out", p(&out)]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).starts_with("error[EmptyDataset]"));
}

#[test]
fn classify_separable_features() {
    let tmp = tempfile::tempdir().unwrap();
    let features = tmp.path().join("f.csv");
    fs::write(&features, gaussian_classes(3, 10, 6, 12.0, 4).unwrap().to_csv()).unwrap();
    let (a, b) = (tmp.path().join("a"), tmp.path().join("b"));
    for out in [&a, &b] {
        let o = run(&["classify", p(&features), "--out", p(out), "--seed", "9"]);
        assert!(o.status.success(), "{}", stderr(&o));
        assert_eq!(stdout(&o).trim(), "Proposed        100.0000  1.0000     6");
    }
    assert_eq!(fs::read(a.join("report.json")).unwrap(), fs::read(b.join("report.json")).unwrap());
    let report: ClassificationReport =
        serde_json::from_str(&fs::read_to_string(a.join("report.json")).unwrap()).unwrap();
    assert_eq!(report.kappa, 1.0);
    assert_eq!(report.total(), 15);
    let grid = fs::read_to_string(a.join("confusion.csv")).unwrap();
    assert_eq!(grid, "5,0,0\n0,5,0\n0,0,5\n");
}

#[test]
fn classify_rejects_non_finite() {
    let tmp = tempfile::tempdir().unwrap();
    let features = tmp.path().join("f.csv");
    fs::write(&features, "class_id,sample_index,d_1\n0,0,1.0\n0,1,NaN\n1,0,3\n1,1,4\n").unwrap();
    let out = tmp.path().join("out");
    let o = run(&["classify", p(&features), "--out", p(&out)]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).starts_with("error[InvalidFeature]"));
    assert!(!out.join("report.json").exists());
    assert!(!out.join("confusion.csv").exists());
}

#[test]
fn chained_commands_match_pipeline() {
    let tmp = tempfile::tempdir().unwrap();
    let root = tmp.path().join("data");
    common::write_class_tree(
        &root,
        &[
            ("flat", TextureKind::Constant(200)),
            ("grainy", TextureKind::Noise { lo: 0, hi: 255 }),
            ("smooth", TextureKind::Noise { lo: 100, hi: 110 }),
        ],
        4,
        20,
        20,
    );
    let cfg = tmp.path().join("exp.cfg");
    fs::write(&cfg, "# test run\nseed = 3\nwindow_rows = 1\nwindow_cols = 2\n").unwrap();
    let (chain, whole) = (tmp.path().join("chain"), tmp.path().join("whole"));
    let c = p(&cfg);

    assert!(run(&["dataset", p(&root), "--config", c, "--out", p(&chain)]).status.success());
    let o = run(&["classify", p(&chain.join("features.csv")), "--config", c, "--out", p(&chain)]);
    assert!(o.status.success(), "{}", stderr(&o));
    let o2 = run(&["pipeline", p(&root), "--config", c, "--out", p(&whole)]);
    assert!(o2.status.success(), "{}", stderr(&o2));
    assert_eq!(stdout(&o), stdout(&o2));
    for f in ["report.json", "confusion.csv", "features.csv"] {
        assert_eq!(fs::read(chain.join(f)).unwrap(), fs::read(whole.join(f)).unwrap(), "{f}");
    }
}

#[test]
fn pipeline_modes_and_separation() {
    let tmp = tempfile::tempdir().unwrap();
    let root = tmp.path().join("data");
    common::write_class_tree(
        &root,
        &[
            ("constant", TextureKind::Constant(90)),
            ("noise", TextureKind::Noise { lo: 0, hi: 255 }),
        ],
        1,
        80,
        32,
    );
    let grid = ["--set", "window_rows=2", "--set", "window_cols=5"];
    let ms = tmp.path().join("ms");
    let mut args = vec!["pipeline", p(&root), "--out", p(&ms)];
    args.extend(grid);
    let o = run(&args);
    assert!(o.status.success(), "{}", stderr(&o));
    assert!(stdout(&o).starts_with("Proposed        100.0000  1.0000    51"), "{}", stdout(&o));

    let raw = tmp.path().join("raw");
    let mut args = vec!["pipeline", p(&root), "--out", p(&raw), "--set", "descriptor_mode=raw-minkowski"];
    args.extend(grid);
    let o = run(&args);
    assert!(o.status.success(), "{}", stderr(&o));
    assert!(stdout(&o).starts_with("Minkowski"));
    assert!(stdout(&o).trim_end().ends_with(" 85"), "{}", stdout(&o));
}

#[test]
fn config_errors_and_precedence() {
    let tmp = tempfile::tempdir().unwrap();
    let cfg = tmp.path().join("bad.cfg");
    fs::write(&cfg, "colour = red\n").unwrap();
    let o = run(&["describe", "x.pgm", "--config", p(&cfg)]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).starts_with("error[InvalidConfig]"));

    let o = run(&["describe", "x.pgm", "--set", "scale_a=-1"]);
    assert!(stderr(&o).starts_with("error[InvalidConfig]"));

    let features = tmp.path().join("f.csv");
    fs::write(&features, gaussian_classes(2, 10, 3, 0.7, 1).unwrap().to_csv()).unwrap();
    let good = tmp.path().join("good.cfg");
    fs::write(&good, "seed = 1\n").unwrap();
    let from_file = run(&["classify", p(&features), "--config", p(&good), "--out", p(&tmp.path().join("x"))]);
    let flag = run(&["classify", p(&features), "--config", p(&good), "--seed", "1", "--out", p(&tmp.path().join("y"))]);
    assert_eq!(stdout(&from_file), stdout(&flag));
    let differs = (2..12).any(|s| {
        let o = run(&["classify", p(&features), "--config", p(&good), "--seed", &s.to_string(), "--out", p(&tmp.path().join("z"))]);
        stdout(&o) != stdout(&from_file)
    });
    assert!(differs, "--seed has no effect");
}
