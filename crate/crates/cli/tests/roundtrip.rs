use std::process::Command;

use hydrent::output::{read_csv, read_json, write_csv, write_json};
use hydrent::sweep::{run_sweep, MethodSel, Row, SpaceSel, SweepConfig};

fn sample_rows() -> Vec<Row> {
    let mut cfg = SweepConfig::new("n=2 l=1 mu=1x*,0x1".parse().unwrap(), vec![5, 12, 40], vec![0.6, 2.0, 3.0]);
    cfg.space = SpaceSel::Momentum;
    let mut rows = run_sweep(&cfg).unwrap();
    // awkward values: subnormal, negative zero, NaN
    rows[0].err_est = 5e-324;
    rows[1].gap = -0.0;
    rows[2].radial = f64::NAN;
    rows
}

fn same_bits(a: &[Row], b: &[Row]) {
    assert_eq!(a.len(), b.len());
    for (x, y) in a.iter().zip(b) {
        assert_eq!((x.dim, x.space, x.method), (y.dim, y.space, y.method));
        let fx = [x.q, x.value, x.radial, x.angular, x.gap, x.err_est, x.wall_ms];
        let fy = [y.q, y.value, y.radial, y.angular, y.gap, y.err_est, y.wall_ms];
        for (u, v) in fx.iter().zip(&fy) {
            assert!(u.to_bits() == v.to_bits() || (u.is_nan() && v.is_nan()), "{u:e} vs {v:e}");
        }
    }
}

#[test]
fn csv_round_trip_is_bit_exact() {
    let rows = sample_rows();
    let mut buf = Vec::new();
    write_csv(&rows, &mut buf).unwrap();
    let text = String::from_utf8(buf.clone()).unwrap();
    assert!(text.starts_with("D,q,space,method,value,radial,angular,gap,err_est,wall_ms\n"));
    same_bits(&rows, &read_csv(buf.as_slice()).unwrap());
}

#[test]
fn json_round_trip_is_bit_exact() {
    let mut rows = sample_rows();
    rows[1].failure = Some(hydrent::sweep::Failure {
        convergence: true,
        message: "stalled".into(),
    });
    let mut buf = Vec::new();
    write_json(&rows, &mut buf).unwrap();
    let back = read_json(buf.as_slice()).unwrap();
    same_bits(&rows, &back);
    assert_eq!(back[1].failure, rows[1].failure);
}

#[test]
fn thread_count_does_not_change_results() {
    let base = SweepConfig::new("n=3 l=1 mu=1x2,0x*".parse().unwrap(), vec![60, 7, 300, 20], vec![3.0, 0.7, 1.5]);
    let run = |jobs| {
        let mut cfg = base.clone();
        cfg.jobs = jobs;
        cfg.timing = false;
        run_sweep(&cfg).unwrap()
    };
    let one = run(1);
    assert_eq!(one.iter().map(|r| r.dim).collect::<Vec<_>>(), [7, 7, 7, 20, 20, 20, 60, 60, 60, 300, 300, 300]);
    for jobs in [2, 4, 8] {
        same_bits(&one, &run(jobs));
    }
}

fn hydrent(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_hydrent")).args(args).output().unwrap();
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8_lossy(&out.stdout).into_owned(),
        String::from_utf8_lossy(&out.stderr).into_owned(),
    )
}

#[test]
fn cli_exit_codes_and_config() {
    let dir = tempfile::tempdir().unwrap();
    let (code, out, _) = hydrent(&["entropy", "--state", "D=10 n=1", "--q", "2", "--format", "csv", "--no-timing"]);
    assert_eq!(code, 0);
    let rows = read_csv(out.as_bytes()).unwrap();
    assert_eq!(rows.len(), 1);
    assert_eq!(rows[0].method, MethodSel::Both);

    assert_eq!(hydrent(&["sweep", "--D", "10", "--q", ""]).0, 2);
    assert_eq!(hydrent(&["entropy", "--D", "10", "--n", "2", "--l", "2"]).0, 2);
    assert_eq!(hydrent(&["sweep", "--D", "10", "--q", "2", "--space", "sideways"]).0, 2);
    assert_eq!(hydrent(&["--help"]).0, 0);

    let cfg = dir.path().join("run.cfg");
    std::fs::write(&cfg, "# defaults\nq = 3\nspace = momentum\nformat = csv\nno-timing = true\n").unwrap();
    let c = cfg.to_str().unwrap();
    let (code, out, _) = hydrent(&["--config", c, "sweep", "--D", "10", "--q", "2"]);
    assert_eq!(code, 0);
    let rows = read_csv(out.as_bytes()).unwrap();
    assert_eq!((rows[0].q, rows[0].space, rows[0].wall_ms), (2.0, SpaceSel::Momentum, 0.0));
}

#[test]
fn strict_mode_reports_stalled_rows() {
    // two-node panels with no refinement cannot reach 1e-14
    let args = ["sweep", "--D", "30", "--n", "4", "--l", "1", "--q", "2.5", "--tol", "1e-14", "--nodes", "2", "--max-levels", "0"];
    let (code, out, err) = hydrent(&args);
    assert_eq!(code, 0, "without --strict the failure stays in its row");
    assert!(out.contains("converge") && err.contains("converge"), "{out}{err}");
    let strict: Vec<&str> = args.iter().copied().chain(["--strict"]).collect();
    assert_eq!(hydrent(&strict).0, 3);
}

#[test]
fn sweep_then_fit() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("gaps.json");
    let p = path.to_str().unwrap();
    let (code, _, err) = hydrent(&["sweep", "--n", "1", "--D", "100:800:2", "--q", "2", "--out", p]);
    assert_eq!(code, 0, "{err}");
    let (code, out, _) = hydrent(&["fit", "--input", p, "--model", "inverse-d"]);
    assert_eq!(code, 0);
    assert!(out.contains("yes"), "{out}");
}
