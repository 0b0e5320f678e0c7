use std::path::Path;
use std::process::{Command, Output};

use cpkin_cli::verify::{run_verify, run_verify_with, VerifyOptions};
use cpkin::bobillier::{bobillier_residual, BobillierConfig};
use cpkin::trig::sinp;

fn cpkin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cpkin")).args(args).output().expect("run cpkin")
}

fn write(dir: &Path, name: &str, body: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, body).unwrap();
    p.to_str().unwrap().to_string()
}

const CYCLOID: &str = r#"{"p": -1, "theta": [0, 1], "tx": [0, 1], "ty": [0]}"#;

#[test]
fn circle_outputs() {
    let dir = tempfile::tempdir().unwrap();
    for p in ["-1", "0", "2"] {
        let out = dir.path().join(format!("c{p}.svg"));
        let o = cpkin(&["circle", "--p", p, "--out", out.to_str().unwrap()]);
        assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
        let svg = std::fs::read_to_string(&out).unwrap();
        assert!(svg.contains("<!-- cpkin"));
        let pv: f64 = p.parse().unwrap();
        let mut rd = csv::Reader::from_path(out.with_extension("csv")).unwrap();
        for rec in rd.records() {
            let rec = rec.unwrap();
            let (x, y): (f64, f64) = (rec[2].parse().unwrap(), rec[3].parse().unwrap());
            assert!(((x * x - pv * y * y).abs() - 1.0).abs() <= 1e-9);
            if pv == 0.0 {
                assert_eq!(x.abs(), 1.0);
            }
        }
        if pv == 2.0 {
            assert!(svg.contains("data-asymptote-slope=\"+-7.0710678118654"));
        }
    }
    let o = cpkin(&["circle", "--p", "1", "--out", dir.path().join("x.svg").to_str().unwrap(), "--samples", "8"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn inflection_figure_files() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write(dir.path(), "cyc.json", CYCLOID);
    let out = dir.path().join("cyc.svg");
    let o = cpkin(&["inflection", "--config", &cfg, "--out", out.to_str().unwrap()]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let csv = std::fs::read_to_string(out.with_extension("csv")).unwrap();
    assert!(csv.starts_with("kind,index,x,y,cx,cy\nh,0,1.0000000000000"));
    // the inflection circle touches the rolling line at the pole and reaches the wheel centre
    let mut rd = csv::Reader::from_reader(csv.as_bytes());
    let pole = rd.records().map(|r| r.unwrap()).find(|r| &r[0] == "pole").unwrap();
    assert_eq!((&pole[2], &pole[3]), ("0.0000000000000000e0", "1.0000000000000000e0"));
}

#[test]
fn input_and_geometry_errors() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write(dir.path(), "bad.json", "{\n  \"p\": -1,\n  \"theta\": [0, 1,\n}");
    let o = cpkin(&["inflection", "--config", &bad, "--out", dir.path().join("o.svg").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 4, column 1"));

    let rot = write(dir.path(), "rot.json", r#"{"p": -1, "theta": [0, 1], "tx": [0], "ty": [0]}"#);
    let o = cpkin(&["inflection", "--config", &rot, "--out", dir.path().join("o.svg").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(3));

    let o = cpkin(&["bobillier", "--config", dir.path().join("missing.json").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    let o = cpkin(&["verify", "--cases", "0"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn bobillier_modes() {
    let dir = tempfile::tempdir().unwrap();
    let th: [f64; 3] = [0.1, 0.5, 1.2];
    let rho = th.map(|t| 2.0 * t.sinh());
    let raw = format!(
        r#"{{"p": 1, "mode": "raw", "raw": {{"rho_star": [{}, {}, {}], "theta": [{}, {}, {}]}}}}"#,
        rho[0], rho[1], rho[2], th[0], th[1], th[2]
    );
    let o = cpkin(&["bobillier", "--config", &write(dir.path(), "raw.json", &raw)]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!(v["geometric_residual"].as_f64().unwrap().abs() < 1e-12);
    assert!(v["kinematic_residual"].as_f64().unwrap().abs() < 1e-12);
    assert!(v["specialized_residual"].as_f64().unwrap().abs() < 1e-12);

    let motion = format!(r#"{{"p": -1, "mode": "motion", "motion": {{"spec": {CYCLOID}, "t": 0, "angles": [0.5235987755982988, 1.0471975511965976, 2.0943951023931953]}}}}"#);
    let o = cpkin(&["bobillier", "--config", &write(dir.path(), "m.json", &motion)]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!(v["difference"].as_f64().unwrap().abs() <= 1e-10);
    assert!((v["h"].as_f64().unwrap() - 1.0).abs() <= 1e-12);

    let o = cpkin(&["bobillier", "--config", &write(dir.path(), "bad.json", "{\"p\": 1, \"mode\": \"raw\" \"raw\": {}}")]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 1, column"));
}

#[test]
fn verify_single_case_and_exit_codes() {
    let o = cpkin(&["verify", "--cases", "1", "--p", "-1,0,1"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["cases_run"], 1);
    assert_eq!(v["p_values"].as_array().unwrap().len(), 3);
    let text = String::from_utf8(o.stdout).unwrap();
    let order = ["p_values", "seed", "cases_run", "tolerance", "max_abs_residual", "failures", "timing_ms"];
    let pos: Vec<_> = order.iter().map(|k| text.find(&format!("\"{k}\"")).expect(k)).collect();
    assert!(pos.windows(2).all(|w| w[0] < w[1]));
    let o = cpkin(&["verify", "--cases", "4", "--tol", "1e-30"]);
    assert_eq!(o.status.code(), Some(1));
}

fn flipped(cfg: &BobillierConfig<f64>) -> f64 {
    let r = cfg.rho_star();
    let s = cfg.pairwise.map(|a| sinp(a, cfg.p));
    -r[0] * s[0] + r[1] * s[1] + r[2] * s[2]
}

#[test]
fn battery_catches_a_sign_flip() {
    let cfg = BobillierConfig::from_raw(cpkin::PlaneParam::new(1.0).unwrap(), [0.4, 1.0, 2.4], [0.2, 0.5, 1.0]).unwrap();
    let gap = flipped(&cfg) - bobillier_residual(&cfg);
    assert!((gap + 2.0 * 0.4 * sinp(0.5, cfg.p)).abs() < 1e-15);

    let opts = VerifyOptions { cases: 50, ..Default::default() };
    assert!(run_verify(&opts).passed());
    let bad = run_verify_with(&opts, flipped);
    assert!(!bad.passed());
    assert!(bad.failures.iter().all(|f| f.check == "bobillier_circle"));
    // |2 rho*_1 sinp th23| / h is at most 2 sinp(th)^2 over the sampled sector
    assert!(bad.max_abs_residual > 1e-3 && bad.max_abs_residual < 2.0 * 64.0);
}
