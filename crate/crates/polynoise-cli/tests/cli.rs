//! End-to-end tests of the `polynoise` binary: flag handling, exit codes,
//! image output and the JSON reports.

use std::path::PathBuf;
use std::process::{Command, Output};

fn polynoise(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_polynoise"))
        .args(args)
        .output()
        .expect("spawn polynoise")
}

fn tmp(name: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

fn stdout_json(args: &[&str]) -> serde_json::Value {
    let out = polynoise(args);
    assert!(
        out.status.success(),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("valid JSON on stdout")
}

#[test]
fn render_writes_a_valid_pgm() {
    let path = tmp("render.pgm");
    let out = polynoise(&[
        "render",
        "--noise",
        "classic2",
        "--size",
        "7x5",
        "--scale",
        "0.3",
        "--origin",
        "1.5,-2.5",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let bytes = std::fs::read(&path).unwrap();
    let header = b"P5\n7 5\n255\n";
    assert_eq!(&bytes[..header.len()], header);
    assert_eq!(bytes.len(), header.len() + 7 * 5);
}

#[cfg(feature = "png")]
#[test]
fn png_and_pgm_renders_carry_the_same_pixels() {
    let pgm_path = tmp("same.pgm");
    let png_path = tmp("same.png");
    let common = [
        "render", "--noise", "simplex3", "--size", "24x16", "--scale", "0.11", "--slice", "0.7",
    ];
    let run = |format: &str, path: &PathBuf| {
        let mut args: Vec<&str> = common.to_vec();
        args.extend_from_slice(&["--format", format, "--out", path.to_str().unwrap()]);
        assert!(polynoise(&args).status.success());
    };
    run("pgm", &pgm_path);
    run("png", &png_path);

    let pgm = std::fs::read(&pgm_path).unwrap();
    let pgm_pixels = &pgm[b"P5\n24 16\n255\n".len()..];
    let png = image::open(&png_path).unwrap().into_luma8();
    assert_eq!(png.as_raw().as_slice(), pgm_pixels);
}

#[test]
fn sphere_renders_a_black_background() {
    let path = tmp("sphere.pgm");
    let out = polynoise(&[
        "sphere",
        "--noise",
        "simplex3",
        "--size",
        "32x32",
        "--scale",
        "2.0",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let bytes = std::fs::read(&path).unwrap();
    let pixels = &bytes[b"P5\n32 32\n255\n".len()..];
    assert_eq!(pixels[0], 0, "corner outside the disc must be black");
    assert_ne!(pixels[32 * 16 + 16], 0, "disc center must be sampled");
}

#[test]
fn usage_errors_exit_with_code_2() {
    let cases: &[&[&str]] = &[
        &["render", "--noise", "nonsense", "--out", "/tmp/x.pgm"],
        &[
            "render",
            "--noise",
            "simplex2",
            "--size",
            "banana",
            "--out",
            "/tmp/x.pgm",
        ],
        &["stats", "--noise", "periodic2", "--samples", "10"],
        &[
            "stats",
            "--noise",
            "simplex2",
            "--period",
            "5,5",
            "--samples",
            "10",
        ],
        &[
            "stats",
            "--noise",
            "periodic3",
            "--period",
            "5,5",
            "--samples",
            "10",
        ],
        &[
            "stats",
            "--noise",
            "periodic2",
            "--period",
            "289,5",
            "--samples",
            "10",
        ],
        &["sphere", "--noise", "classic2", "--out", "/tmp/x.pgm"],
        &["stats", "--samples", "0"],
        &["stats", "--domain", "3,-3", "--samples", "10"],
        &["bench", "--duration", "-1"],
        &["export-glsl", "--noise", "simplex5"],
        &["frobnicate"],
    ];
    for args in cases {
        let out = polynoise(args);
        assert_eq!(
            out.status.code(),
            Some(2),
            "args {args:?} should be a usage error"
        );
        assert!(
            !out.stderr.is_empty(),
            "args {args:?} should explain themselves"
        );
    }
}

#[test]
fn unwritable_output_exits_with_code_3() {
    let out = polynoise(&[
        "render",
        "--noise",
        "simplex2",
        "--size",
        "4x4",
        "--out",
        "/nonexistent-dir/deep/x.pgm",
    ]);
    assert_eq!(out.status.code(), Some(3));
    let msg = String::from_utf8_lossy(&out.stderr);
    assert!(
        msg.contains("nonexistent-dir"),
        "stderr names the path: {msg}"
    );
}

#[test]
fn help_and_version_exit_cleanly() {
    for args in [
        &["--help"][..],
        &["--version"][..],
        &["render", "--help"][..],
    ] {
        let out = polynoise(args);
        assert_eq!(out.status.code(), Some(0), "args {args:?}");
        assert!(!out.stdout.is_empty());
    }
}

#[test]
fn stats_reports_the_documented_schema() {
    let v = stdout_json(&[
        "stats",
        "--noise",
        "simplex2",
        "--samples",
        "5000",
        "--seed",
        "42",
        "--threads",
        "2",
    ]);
    let obj = v.as_object().unwrap();
    for key in [
        "variant",
        "samples",
        "mean",
        "stddev",
        "min",
        "max",
        "histogram",
        "seconds",
        "msamples_per_sec",
    ] {
        assert!(obj.contains_key(key), "missing {key}");
    }
    assert_eq!(obj.len(), 9, "no undocumented keys");
    assert_eq!(v["variant"], "simplex2");
    assert_eq!(v["samples"], 5000);
    let hist = v["histogram"].as_array().unwrap();
    assert_eq!(hist.len(), 64);
    let total: u64 = hist.iter().map(|b| b.as_u64().unwrap()).sum();
    assert_eq!(total, 5000);
}

#[test]
fn stats_is_reproducible_for_a_fixed_seed() {
    let args = [
        "stats",
        "--noise",
        "classic3",
        "--samples",
        "2000",
        "--seed",
        "9",
    ];
    let a = stdout_json(&args);
    let b = stdout_json(&args);
    assert_eq!(a["min"], b["min"]);
    assert_eq!(a["max"], b["max"]);
    assert_eq!(a["histogram"], b["histogram"]);
    // A different seed samples different points.
    let c = stdout_json(&[
        "stats",
        "--noise",
        "classic3",
        "--samples",
        "2000",
        "--seed",
        "10",
    ]);
    assert_ne!(a["histogram"], c["histogram"]);
}

#[test]
fn bench_reports_the_documented_schema() {
    let v = stdout_json(&["bench", "--noise", "classic2", "--duration", "0.05"]);
    let obj = v.as_object().unwrap();
    for key in [
        "variant",
        "threads",
        "samples",
        "seconds",
        "msamples_per_sec",
        "checksum",
    ] {
        assert!(obj.contains_key(key), "missing {key}");
    }
    assert_eq!(obj.len(), 6);
    assert_eq!(v["variant"], "classic2");
    assert!(v["checksum"].as_u64().unwrap() != 0);
    assert_eq!(v["samples"].as_u64().unwrap() % (1 << 18), 0);
}

#[test]
fn export_glsl_round_trips_through_the_library() {
    for kind in polynoise::list_shader_kinds() {
        let out = polynoise(&["export-glsl", "--noise", kind.name()]);
        assert!(out.status.success());
        assert_eq!(
            String::from_utf8(out.stdout).unwrap(),
            polynoise::emit_shader_source(kind),
            "variant {kind}"
        );
    }
}

#[test]
fn export_glsl_bare_strips_the_version_directive() {
    let out = polynoise(&["export-glsl", "--noise", "classic4", "--bare"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(!text.contains("#version"));
    assert!(text.contains("float cnoise(vec4 p)"));
}

#[test]
fn export_glsl_writes_files_too() {
    let path = tmp("exported.glsl");
    let out = polynoise(&[
        "export-glsl",
        "--noise",
        "simplex2",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    assert_eq!(
        std::fs::read_to_string(&path).unwrap(),
        polynoise::emit_shader_source(polynoise::ShaderKind::Simplex2)
    );
}

#[test]
fn periodic_render_tiles_exactly() {
    // Two renders one period apart must be byte-identical.
    let a_path = tmp("tile-a.pgm");
    let b_path = tmp("tile-b.pgm");
    let common = [
        "render",
        "--noise",
        "periodic2",
        "--period",
        "7,5",
        "--size",
        "70x50",
        "--scale",
        "0.1",
    ];
    let run = |origin: &str, path: &PathBuf| {
        let mut args: Vec<&str> = common.to_vec();
        args.extend_from_slice(&["--origin", origin, "--out", path.to_str().unwrap()]);
        assert!(polynoise(&args).status.success());
    };
    run("0,0", &a_path);
    run("7,5", &b_path); // exactly one period along each axis
    assert_eq!(
        std::fs::read(&a_path).unwrap(),
        std::fs::read(&b_path).unwrap()
    );
}

#[test]
fn fbm_flags_change_the_image() {
    let base = tmp("fbm-base.pgm");
    let fractal = tmp("fbm-4oct.pgm");
    let common = [
        "render", "--noise", "simplex2", "--size", "32x32", "--scale", "0.08",
    ];
    let mut args: Vec<&str> = common.to_vec();
    args.extend_from_slice(&["--out", base.to_str().unwrap()]);
    assert!(polynoise(&args).status.success());
    let mut args: Vec<&str> = common.to_vec();
    args.extend_from_slice(&["--octaves", "4", "--out", fractal.to_str().unwrap()]);
    assert!(polynoise(&args).status.success());
    assert_ne!(
        std::fs::read(&base).unwrap(),
        std::fs::read(&fractal).unwrap()
    );
}
