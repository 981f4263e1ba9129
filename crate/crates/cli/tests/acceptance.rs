//! Acceptance checks, one PASS/FAIL line each. Exits non-zero if any fails.

use std::f64::consts::PI;
use std::process::ExitCode;
use std::time::Instant;

use hydrent::fit::{fit_convergence, least_squares, Model};
use hydrent::saturation::{check_saturation, Engine, SaturationConfig};
use hydrent::sweep::{run_sweep, MethodSel, PartSel, SweepConfig};
use hydrent::theorem::{j1_grid, j2_grid, j2_quadrature, rel_error};
use hydrent_core::asymptotics::{
    j2_asymptotic, shannon_conjecture, uncertainty_sum_limit, J2Params, Part, SeriesOptions, CLAIMED_SHANNON_SUM,
};
use hydrent_core::entropic::{
    angular_factor_exact, entropic_moment, entropic_moment_direct, momentum_radial_renyi_exact, renyi_entropy,
    shannon_exact, tsallis_and_disequilibrium, Space,
};
use hydrent_core::hydrogenic::{MuChain, QuantumState};
use hydrent_core::logspace::{log_gamma, sum};
use hydrent_core::orthopoly::{eval_gegenbauer, eval_laguerre, gauss_rule, Norm, PolynomialSpec, Weight};
use hydrent_core::quadrature::QuadratureSpec;

// tolerances as stated for each criterion
const GROUND_REL_TOL: f64 = 1e-9;
const GROUND_SECONDS: f64 = 5.0;
const J1_ORDER1_RATIO: (f64, f64) = (3.0, 5.0);
const THEOREM_SECONDS: f64 = 60.0;
const J2_HALVING_SLACK: f64 = 0.3;
const LARGE_D_EXPONENT: (f64, f64) = (0.8, 1.2);
const LARGE_D_TOL: f64 = 1e-8;
const LARGE_D_SECONDS: f64 = 600.0;
const LOG_D_REL: f64 = 0.10;
const SATURATION_D: u32 = 10_000;
const Q2_CONSTANT: f64 = 2.099547;
const Q2_TOL: f64 = 1e-5;
const NORM_TOL: f64 = 1e-8;
const SCALING_TOL: f64 = 1e-9;
const ANGULAR_TOL: f64 = 1e-10;
const TSALLIS_TOL: f64 = 1e-10;
const ORTHO_TOL: f64 = 1e-9;
const MONOMIAL_TOL: f64 = 1e-4;
const GAMMA_REC_TOL: f64 = 1e-13;

struct Outcome {
    pass: bool,
    notes: Vec<String>,
}

impl Outcome {
    fn new() -> Self {
        Self {
            pass: true,
            notes: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, note: String) {
        self.pass &= ok;
        self.notes.push(format!("{} {note}", if ok { "ok  " } else { "FAIL" }));
    }

    fn info(&mut self, note: String) {
        self.notes.push(format!("     {note}"));
    }
}

fn lgamma(x: f64) -> f64 {
    libm::lgamma(x)
}

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs().max(1e-300)
}

fn ground_position() -> Outcome {
    let mut o = Outcome::new();
    let t = Instant::now();
    let mut worst: f64 = 0.0;
    for dim in [10u32, 50, 100, 200] {
        for z in [1.0, 2.0] {
            for q in [0.5f64, 2.0, 3.0] {
                let d = dim as f64;
                let lambda = (d - 1.0) / (4.0 * z);
                let closed = d * lambda.ln() + d * q.ln() / (q - 1.0) + lgamma(d)
                    + (2.0f64.ln() + 0.5 * d * PI.ln() - lgamma(0.5 * d));
                let s = QuantumState::ground(dim, z).unwrap();
                let got = renyi_entropy(&s, q, Space::Position, &QuadratureSpec::default()).unwrap().value;
                worst = worst.max(rel(got, closed));
            }
        }
    }
    let secs = t.elapsed().as_secs_f64();
    o.check(worst <= GROUND_REL_TOL, format!("worst relative error {worst:.2e} (≤ {GROUND_REL_TOL:e})"));
    o.check(secs < GROUND_SECONDS, format!("runtime {secs:.2} s (< {GROUND_SECONDS} s)"));
    let radial = 10.0 * (9.0f64 / 4.0).ln() + 10.0 * 2f64.ln() + lgamma(10.0);
    o.info(format!("D=10 Z=1 q=2 radial closed form = {radial:.6}"));
    o
}

fn ground_momentum() -> Outcome {
    let mut o = Outcome::new();
    let t = Instant::now();
    let mut worst: f64 = 0.0;
    for dim in [10u32, 50, 100, 200] {
        for z in [1.0f64, 2.0] {
            for q in [2.0f64, 3.0] {
                let d = dim as f64;
                let eta = (d - 1.0) / 2.0;
                let big_l = (d - 3.0) / 2.0;
                let ln_k2 = -d * z.ln() + (4.0 * big_l + 6.0) * 2f64.ln() - (2.0 * PI).ln() - lgamma(d - 1.0)
                    + 2.0 * lgamma(big_l + 1.0)
                    + (d + 1.0) * eta.ln();
                let (a, b) = (0.5 * d, (d + 1.0) * q - 0.5 * d);
                let ln_w = q * ln_k2 + d * (z / eta).ln() - 2f64.ln() + lgamma(a) + lgamma(b) - lgamma(a + b);
                let s = QuantumState::ground(dim, z).unwrap();
                let got = momentum_radial_renyi_exact(&s, q, &QuadratureSpec::default()).unwrap().0;
                worst = worst.max(rel(got, ln_w / (1.0 - q)));
            }
        }
    }
    let secs = t.elapsed().as_secs_f64();
    o.check(worst <= GROUND_REL_TOL, format!("worst relative error {worst:.2e} (≤ {GROUND_REL_TOL:e})"));
    o.check(secs < GROUND_SECONDS, format!("runtime {secs:.2} s (< {GROUND_SECONDS} s)"));
    o
}

fn theorem_j1() -> Outcome {
    let mut o = Outcome::new();
    let t = Instant::now();
    let alphas = [50.0, 100.0, 200.0, 400.0];
    let rows = j1_grid(&alphas).unwrap();
    let mut over = Vec::new();
    for r in &rows {
        let p = r.params;
        let bound = (1.0 + 10.0 * p.m as f64) / (2.0 * p.alpha);
        if r.err0 > bound {
            over.push(format!(
                "σ={} λ={} κ={} m={} α={}: {:.3e} > {:.3e}",
                p.sigma, p.lambda, p.kappa, p.m, p.alpha, r.err0, bound
            ));
        }
    }
    o.check(
        over.is_empty(),
        format!("order-0 error ≤ (1+10m)/(2α): {} of {} cases exceed", over.len(), rows.len()),
    );
    for line in over.iter().take(6) {
        o.info(line.clone());
    }
    if over.len() > 6 {
        o.info(format!("... and {} more", over.len() - 6));
    }
    let mut bad = Vec::new();
    let (mut lo, mut hi) = (f64::INFINITY, f64::NEG_INFINITY);
    for w in rows.windows(2) {
        let (a, b) = (&w[0], &w[1]);
        if a.params.sigma == b.params.sigma
            && a.params.lambda == b.params.lambda
            && a.params.kappa == b.params.kappa
            && a.params.m == b.params.m
            && b.params.alpha == 2.0 * a.params.alpha
        {
            let ratio = a.err1 / b.err1;
            lo = lo.min(ratio);
            hi = hi.max(ratio);
            if !(J1_ORDER1_RATIO.0..=J1_ORDER1_RATIO.1).contains(&ratio) {
                bad.push(format!(
                    "σ={} λ={} κ={} m={} α={}: ratio {ratio:.3}",
                    a.params.sigma, a.params.lambda, a.params.kappa, a.params.m, a.params.alpha
                ));
            }
        }
    }
    o.check(
        bad.is_empty(),
        format!("order-1 error ratio α→2α in [{}, {}]: observed [{lo:.3}, {hi:.3}]", J1_ORDER1_RATIO.0, J1_ORDER1_RATIO.1),
    );
    for line in bad.iter().take(6) {
        o.info(line.clone());
    }
    let secs = t.elapsed().as_secs_f64();
    o.check(secs < THEOREM_SECONDS, format!("runtime {secs:.2} s (< {THEOREM_SECONDS} s)"));
    o
}

fn theorem_j2() -> Outcome {
    let mut o = Outcome::new();
    let t = Instant::now();
    let alphas = [100.0, 200.0, 400.0];
    let rows = j2_grid(&alphas).unwrap();
    let (rmin, rmax) = (2.0 / (1.0 + J2_HALVING_SLACK), 2.0 / (1.0 - J2_HALVING_SLACK));
    let mut bad = Vec::new();
    let mut c_range = (f64::INFINITY, 0.0f64);
    for case in rows.chunks(alphas.len()) {
        for r in case {
            c_range = (c_range.0.min(r.err * r.params.alpha), c_range.1.max(r.err * r.params.alpha));
        }
        for w in case.windows(2) {
            let ratio = w[0].err / w[1].err;
            if !(rmin..=rmax).contains(&ratio) {
                let p = w[0].params;
                bad.push(format!(
                    "a={} b={} c={} d={} κ={} m={} α={}: ratio {ratio:.3}",
                    p.a, p.b, p.c, p.d, p.kappa, p.m, p.alpha
                ));
            }
        }
    }
    o.check(
        bad.is_empty(),
        format!(
            "error halves within 30% as α doubles (ratio in [{rmin:.3}, {rmax:.3}]) over {} cases",
            rows.len() / alphas.len()
        ),
    );
    for line in bad.iter().take(6) {
        o.info(line.clone());
    }
    o.info(format!("empirical C = error·α ranges over [{:.3}, {:.3}]", c_range.0, c_range.1));
    // c = d against ∫(1−x²)^α dx = √π Γ(α+1)/Γ(α+3/2)
    let mut wallis_ok = true;
    let mut prev = f64::INFINITY;
    for &alpha in &alphas {
        let p = J2Params {
            a: 0.0,
            b: 0.0,
            c: 1.0,
            d: 1.0,
            kappa: 2.0,
            m: 0,
            alpha,
        };
        let exact = 0.5 * PI.ln() + lgamma(alpha + 1.0) - lgamma(alpha + 1.5);
        let e = rel_error(exact, j2_asymptotic(&p).unwrap().logmag());
        wallis_ok &= e <= 1.0 / alpha && e < prev;
        prev = e;
    }
    o.check(wallis_ok, "c = d branch against the Wallis closed form".into());
    let (mut swap_worst, mut swap_err): (f64, f64) = (0.0, 0.0);
    for (m, c, d) in [(0u32, 2.0, 1.0), (1, 3.0, 1.0), (2, 2.0, 1.0)] {
        let p = J2Params {
            a: 1.5,
            b: -0.5,
            c,
            d,
            kappa: 3.0,
            m,
            alpha: 150.0,
        };
        let s = p.swapped();
        swap_worst = swap_worst.max((j2_asymptotic(&p).unwrap().logmag() - j2_asymptotic(&s).unwrap().logmag()).abs());
        swap_worst = swap_worst.max((j2_quadrature(&p).unwrap() - j2_quadrature(&s).unwrap()).abs());
        // the swapped branch against the mirrored integral
        swap_err = swap_err.max(rel_error(j2_quadrature(&s).unwrap(), j2_asymptotic(&p).unwrap().logmag()));
    }
    o.check(swap_worst < 1e-11, format!("swap identity, largest log difference {swap_worst:.1e}"));
    o.check(
        swap_err * 150.0 <= c_range.1,
        format!("swapped branch against mirrored quadrature at α = 150, error {swap_err:.2e}"),
    );
    let secs = t.elapsed().as_secs_f64();
    o.check(secs < THEOREM_SECONDS, format!("runtime {secs:.2} s (< {THEOREM_SECONDS} s)"));
    o
}

fn large_d_position() -> Outcome {
    let mut o = Outcome::new();
    let t = Instant::now();
    let dims = vec![200u32, 400, 800];
    for state in ["n=1 mu=ns", "n=2 mu=ns", "n=2 l=1 mu=circular", "n=3 l=2 mu=circular"] {
        for q in [1.5, 2.0] {
            let mut cfg = SweepConfig::new(state.parse().unwrap(), dims.clone(), vec![q]);
            cfg.quadrature.rel_tol = LARGE_D_TOL;
            cfg.timing = false;
            let rows = run_sweep(&cfg).unwrap();
            let gaps: Vec<f64> = rows.iter().map(|r| r.gap).collect();
            let shrinking = gaps.windows(2).all(|w| w[1].abs() < w[0].abs());
            o.check(shrinking, format!("{state} q={q}: gaps {:.3e} {:.3e} {:.3e}", gaps[0], gaps[1], gaps[2]));
            if state == "n=1 mu=ns" {
                let fit = fit_convergence(&rows, Model::InverseD).unwrap();
                o.check(
                    (LARGE_D_EXPONENT.0..=LARGE_D_EXPONENT.1).contains(&fit.exponent),
                    format!("ground state q={q}: fitted exponent {:.4}", fit.exponent),
                );
            }
        }
    }
    let secs = t.elapsed().as_secs_f64();
    o.check(secs < LARGE_D_SECONDS, format!("runtime {secs:.1} s (< {LARGE_D_SECONDS} s)"));
    o
}

fn log_d_coefficient() -> Outcome {
    let mut o = Outcome::new();
    let (n, l, q) = (2.0, 0.0, 2.0);
    let target = (q * (n - l - 0.5) - 0.5) / (1.0 - q);
    let mut cfg = SweepConfig::new("n=2 mu=ns".parse().unwrap(), vec![200, 400, 800, 1600], vec![q]);
    cfg.method = MethodSel::Exact;
    cfg.part = PartSel::Radial;
    cfg.timing = false;
    let rows = run_sweep(&cfg).unwrap();
    let design: Vec<Vec<f64>> = rows
        .iter()
        .map(|r| {
            let d = r.dim as f64;
            vec![d * d.ln(), d, d.ln(), 1.0]
        })
        .collect();
    let y: Vec<f64> = rows.iter().map(|r| r.value).collect();
    let c = least_squares(&design, &y).unwrap();
    o.check(
        rel(c[2], target) <= LOG_D_REL,
        format!("fitted log D coefficient {:.4} vs {target} (within {}%)", c[2], LOG_D_REL * 100.0),
    );
    o.info(format!("other coefficients: D log D {:.6}, D {:.6}, constant {:.4}", c[0], c[1], c[3]));
    o
}

fn saturation() -> Outcome {
    let mut o = Outcome::new();
    let base = |dims: Vec<u32>, engines: Vec<Engine>, template: &str| SaturationConfig {
        template: template.parse().unwrap(),
        dims,
        engines,
        exact_max_dim: 200,
        quadrature: QuadratureSpec::default(),
        series: SeriesOptions::default(),
    };
    for q in [1.25, 2.0, 3.0] {
        for template in ["n=1", "n=2 l=1 mu=circular"] {
            let r = check_saturation(q, &base(vec![SATURATION_D], vec![Engine::Asymptotic], template)).unwrap();
            let row = &r.rows[0];
            o.check(
                row.deviation.abs() <= row.bound,
                format!(
                    "{template} q={q} p={:.4}: |sum/D − {:.7}| = {:.2e} ≤ {:.2e}",
                    r.p,
                    r.limit,
                    row.deviation.abs(),
                    row.bound
                ),
            );
        }
        let r = check_saturation(q, &base(vec![50, 100, 200], vec![Engine::Exact], "n=1")).unwrap();
        let devs: Vec<String> = r.rows.iter().map(|x| format!("{:.3e}", x.deviation)).collect();
        o.check(r.monotone(Engine::Exact), format!("exact ground state q={q}: deviations {}", devs.join(" ")));
    }
    let c2 = uncertainty_sum_limit(2.0).unwrap();
    let closed = (4.0 * PI * 0.75f64.powf(1.5)).ln();
    o.check((c2 - closed).abs() < 1e-14, format!("q=2 constant {c2:.10} equals ln(4π(3/4)^(3/2))"));
    o.check(
        (c2 - Q2_CONSTANT).abs() <= Q2_TOL,
        format!("q=2 constant {c2:.7} vs {Q2_CONSTANT} ± {Q2_TOL:e}"),
    );
    o
}

fn shannon() -> Outcome {
    let mut o = Outcome::new();
    let s = QuantumState::ground(1000, 1.0).unwrap();
    let pos = shannon_conjecture(&s, Space::Position, Part::Total);
    let mom = shannon_conjecture(&s, Space::Momentum, Part::Total);
    let per_dim = pos.linear + mom.linear;
    o.check(
        pos.d_log_d + mom.d_log_d == 0.0,
        format!("D log D terms cancel ({} + {})", pos.d_log_d, mom.d_log_d),
    );
    o.check(
        (per_dim - CLAIMED_SHANNON_SUM).abs() < 1e-12,
        format!("conjectured sum per dimension {per_dim:.7} vs ln(2πe) = {CLAIMED_SHANNON_SUM:.7}"),
    );
    let spec = QuadratureSpec::default();
    let mut sums = Vec::new();
    for dim in [50u32, 100, 200] {
        let s = QuantumState::ground(dim, 1.0).unwrap();
        let v = shannon_exact(&s, Space::Position, &spec).unwrap().value + shannon_exact(&s, Space::Momentum, &spec).unwrap().value;
        sums.push(v / dim as f64);
    }
    let gaps: Vec<f64> = sums.iter().map(|v| v - CLAIMED_SHANNON_SUM).collect();
    let from_above = gaps.iter().all(|&g| g > 0.0) && gaps.windows(2).all(|w| w[1] < w[0]);
    o.check(
        from_above,
        format!("exact ground-state sums per D (50, 100, 200) minus ln(2πe): {:.4} {:.4} {:.4}", gaps[0], gaps[1], gaps[2]),
    );
    let limit = uncertainty_sum_limit(1.0).unwrap();
    let g: Vec<f64> = sums.iter().map(|v| v - limit).collect();
    o.info(format!(
        "against the computed limit 1 + ln π = {limit:.7}: {:.4e} {:.4e} {:.4e}",
        g[0], g[1], g[2]
    ));
    o
}

fn grid_states(dim: u32, z: f64) -> Vec<QuantumState> {
    let mut out = Vec::new();
    for n in 1..=4u32 {
        for l in 0..n {
            let (li, len) = (l as i64, dim - 1);
            let mu = if len >= 3 {
                let below = (li - 1).max(0);
                MuChain::from_runs([(li, len / 2), (below, len - len / 2 - 1), (-below, 1)])
            } else {
                MuChain::constant(li, len)
            };
            out.push(QuantumState::new(dim, z, n, l, mu).unwrap());
        }
    }
    out
}

fn invariants() -> Outcome {
    let mut o = Outcome::new();
    let spec = QuadratureSpec::default();

    let mut worst: f64 = 0.0;
    for dim in [3u32, 10, 50, 200] {
        for z in [1.0, 3.7] {
            for s in grid_states(dim, z) {
                for space in [Space::Position, Space::Momentum] {
                    worst = worst.max(entropic_moment(&s, 1.0, space, &spec).unwrap().value.logmag().abs());
                }
            }
        }
    }
    o.check(worst <= NORM_TOL, format!("normalization, worst |ln W₁| = {worst:.1e}"));

    let qs = [0.5, 0.8, 1.2, 2.0, 3.0];
    let (mut mono, mut zs, mut tsallis): (bool, f64, f64) = (true, 0.0, 0.0);
    for dim in [3u32, 10, 50] {
        for s in grid_states(dim, 1.0) {
            let s5 = s.with_charge(5.0).unwrap();
            let d = dim as f64;
            for space in [Space::Position, Space::Momentum] {
                let vals: Vec<f64> = qs.iter().map(|&q| renyi_entropy(&s, q, space, &spec).unwrap().value).collect();
                mono &= vals.windows(2).all(|w| w[1] <= w[0]);
                let sign = if space == Space::Position { -1.0 } else { 1.0 };
                for (&q, &v) in qs.iter().zip(&vals) {
                    let v5 = renyi_entropy(&s5, q, space, &spec).unwrap().value;
                    zs = zs.max((v5 - v - sign * d * 5f64.ln()).abs() / v.abs().max(1.0));
                }
                for q in [0.6, 2.0, 3.0] {
                    let (t, _) = tsallis_and_disequilibrium(&s, q, space, &spec).unwrap();
                    let w = entropic_moment_direct(&s, q, space, &spec).unwrap().value.to_f64();
                    tsallis = tsallis.max((t - (1.0 - w) / (q - 1.0)).abs() / t.abs().max(1.0));
                }
            }
        }
    }
    o.check(mono, "Rényi entropies non-increasing in q".into());
    o.check(zs <= SCALING_TOL, format!("Z-scaling, worst deviation {zs:.1e}"));
    o.check(tsallis <= TSALLIS_TOL, format!("Tsallis identity between routes, worst {tsallis:.1e}"));

    let mut ang: f64 = 0.0;
    for dim in [2u32, 3, 40, 333, 2000] {
        for q in [0.5, 2.0] {
            let d = dim as f64;
            let expect = (1.0 - q) * (2f64.ln() + 0.5 * d * PI.ln() - lgamma(0.5 * d));
            let got = angular_factor_exact(&QuantumState::ground(dim, 1.0).unwrap(), q, &spec).unwrap().logmag();
            ang = ang.max((got - expect).abs() / expect.abs().max(1.0));
        }
    }
    o.check(ang <= ANGULAR_TOL, format!("l = 0 angular factor up to D = 2000, worst {ang:.1e}"));

    let mut quad: f64 = 0.0;
    for alpha in [0.0, 2.5, 40.0] {
        let rule = gauss_rule(Weight::Laguerre { alpha, scale: 1.0 }, 20).unwrap();
        for k in 0..40 {
            let v = sum(rule.nodes.iter().zip(&rule.weights).map(|(&x, &w)| w.scale_exp(k as f64 * x.ln())).collect::<Vec<_>>());
            let exact = lgamma(alpha + k as f64 + 1.0);
            quad = quad.max((v.logmag() - exact).abs() / exact.abs().max(1.0));
        }
    }
    o.check(quad <= 1e-12, format!("Gauss-Laguerre exact to degree 2n−1, worst {quad:.1e}"));

    let mut ortho: f64 = 0.0;
    for alpha in [0.5, 10.0, 500.0] {
        let lag = gauss_rule(Weight::Laguerre { alpha, scale: 1.0 }, 10).unwrap();
        let geg = gauss_rule(Weight::Jacobi { a: alpha - 0.5, b: alpha - 0.5 }, 10).unwrap();
        for i in 0..=6usize {
            for j in 0..=6usize {
                let want = if i == j { 1.0 } else { 0.0 };
                let (li, lj) = (PolynomialSpec::laguerre(i, alpha).unwrap(), PolynomialSpec::laguerre(j, alpha).unwrap());
                let g = sum(lag.nodes.iter().zip(&lag.weights).map(|(&x, &w)| {
                    w * eval_laguerre(&li, x, Norm::Orthonormal).unwrap() * eval_laguerre(&lj, x, Norm::Orthonormal).unwrap()
                }).collect::<Vec<_>>());
                ortho = ortho.max((g.to_f64() - want).abs());
                let (gi, gj) = (PolynomialSpec::gegenbauer(i, alpha).unwrap(), PolynomialSpec::gegenbauer(j, alpha).unwrap());
                let g = sum(geg.nodes.iter().zip(&geg.weights).map(|(&x, &w)| {
                    w * eval_gegenbauer(&gi, x, Norm::Orthonormal).unwrap() * eval_gegenbauer(&gj, x, Norm::Orthonormal).unwrap()
                }).collect::<Vec<_>>());
                ortho = ortho.max((g.to_f64() - want).abs());
            }
        }
    }
    o.check(ortho <= ORTHO_TOL, format!("orthonormality for α ∈ {{0.5, 10, 500}}, worst {ortho:.1e}"));

    let mut mono_lim: f64 = 0.0;
    for m in 0..=4usize {
        let spec = PolynomialSpec::gegenbauer(m, 1e6).unwrap();
        for x in [-0.9, -0.5, -0.25, 0.25, 0.6, 0.95] {
            let c = eval_gegenbauer(&spec, x, Norm::Standard).unwrap();
            let ln_mono = m as f64 * (2e6 * f64::abs(x)).ln() - lgamma(m as f64 + 1.0);
            mono_lim = mono_lim.max((c.logmag() - ln_mono).exp_m1().abs());
        }
    }
    o.check(mono_lim <= MONOMIAL_TOL, format!("Gegenbauer monomial limit at α = 1e6, |x| ≥ 0.25, worst {mono_lim:.1e}"));

    // literal recurrence on the full stated range; f64 rounding of ln Γ dominates for large x
    let mut rec: f64 = 0.0;
    let mut x = 0.5;
    while x <= 1e6 {
        let d = log_gamma(x + 1.0).unwrap() - log_gamma(x).unwrap();
        rec = rec.max((d - x.ln()).abs() / x.ln().abs().max(1.0));
        x *= 1.37;
    }
    o.check(rec <= GAMMA_REC_TOL, format!("ln Γ recurrence on [0.5, 1e6], worst {rec:.1e} (≤ {GAMMA_REC_TOL:e})"));
    o
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 9] = [
        ("ground-state position oracle", ground_position),
        ("ground-state momentum oracle", ground_momentum),
        ("J1 expansion", theorem_j1),
        ("J2 expansion", theorem_j2),
        ("large-D position entropy", large_d_position),
        ("log D coefficient", log_d_coefficient),
        ("uncertainty saturation", saturation),
        ("Shannon conjecture consistency", shannon),
        ("module invariants", invariants),
    ];
    let start = Instant::now();
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let out = run();
        println!(
            "criterion {}: {} {name} ({:.2} s)",
            i + 1,
            if out.pass { "PASS" } else { "FAIL" },
            t.elapsed().as_secs_f64()
        );
        for note in &out.notes {
            println!("    {note}");
        }
        failed += usize::from(!out.pass);
    }
    println!(
        "acceptance: {} of {} criteria pass ({:.1} s)",
        criteria.len() - failed,
        criteria.len(),
        start.elapsed().as_secs_f64()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
