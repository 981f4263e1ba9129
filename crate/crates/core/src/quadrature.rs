//! Adaptive panel quadrature for integrands returned in log form.
//!
//! The line is cut at caller-supplied knots (endpoints, polynomial roots),
//! each carrying the local power-law exponent of the integrand there. A panel
//! touching a knot with a non-integer exponent is integrated with the
//! matching Gauss–Jacobi rule, so `|x − r|^{2q}` and `x^{β}` factors cost
//! nothing; everything else uses Gauss–Legendre. Panels are bisected until
//! the coarse and refined estimates agree. Open ends are marched out until
//! the integrand has dropped far below its peak, and the remainder is picked
//! up by a Gauss–Laguerre rule fitted to the local decay rate.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::logspace::{self, SignedLogReal};
use crate::orthopoly::gauss::{canonical_rule, Weight};

/// Knot exponents at or above this are treated as smooth.
const SMOOTH_EXPONENT: f64 = 20.0;
/// How far below the running peak (in nats) an open end is cut.
const TAIL_DROP: f64 = 50.0;
const TAIL_NODES: usize = 32;
const MAX_MARCH: usize = 5000;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct QuadratureSpec {
    /// Gauss nodes per panel.
    pub nodes: usize,
    /// Bisection levels allowed below the initial panels.
    pub max_levels: usize,
    pub rel_tol: f64,
    /// Cut panels at the zeros of the polynomial factor.
    pub split_at_roots: bool,
}

impl Default for QuadratureSpec {
    fn default() -> Self {
        Self {
            nodes: 64,
            max_levels: 10,
            rel_tol: 1e-10,
            split_at_roots: true,
        }
    }
}

impl QuadratureSpec {
    pub fn validate(&self) -> Result<()> {
        if !(self.rel_tol > 0.0) || !self.rel_tol.is_finite() {
            return Err(Error::domain("quadrature tolerance must be positive"));
        }
        if self.nodes < 2 || self.nodes > crate::orthopoly::MAX_DEGREE * 4 {
            return Err(Error::domain("quadrature node count must lie in [2, 256]"));
        }
        Ok(())
    }

    /// Tolerance actually used at dimension `dim`: relaxed to `1e-8` above
    /// `D = 500`, where the prefactors are too ill-conditioned for more.
    pub fn for_dimension(&self, dim: u32) -> Self {
        let mut s = *self;
        if dim > 500 && s.rel_tol < 1e-8 {
            s.rel_tol = 1e-8;
        }
        s
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Knot {
    pub x: f64,
    /// Local behaviour `|x − knot|^exponent` of the integrand.
    pub exponent: f64,
}

impl Knot {
    pub fn new(x: f64, exponent: f64) -> Self {
        Self { x, exponent }
    }

    pub fn regular(x: f64) -> Self {
        Self { x, exponent: 0.0 }
    }
}

#[derive(Clone, Debug)]
pub struct Line {
    /// Ascending knots; at least one.
    pub knots: Vec<Knot>,
    pub open_below: bool,
    pub open_above: bool,
    /// Typical feature width, used as the first step when marching out.
    pub step: f64,
    /// Initial panels per knot interval.
    pub min_panels: usize,
}

impl Line {
    pub fn closed(knots: Vec<Knot>) -> Self {
        Self {
            knots,
            open_below: false,
            open_above: false,
            step: 1.0,
            min_panels: 4,
        }
    }

    pub fn half_open(knots: Vec<Knot>, step: f64) -> Self {
        Self {
            knots,
            open_below: false,
            open_above: true,
            step,
            min_panels: 4,
        }
    }

    pub fn open(knots: Vec<Knot>, step: f64) -> Self {
        Self {
            knots,
            open_below: true,
            open_above: true,
            step,
            min_panels: 4,
        }
    }

    pub fn with_min_panels(mut self, n: usize) -> Self {
        self.min_panels = n.max(1);
        self
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Integral {
    pub value: SignedLogReal,
    /// Estimated error relative to `|value|`.
    pub rel_error: f64,
    pub evaluations: usize,
}

#[derive(Clone, Copy)]
struct Panel {
    lo: f64,
    hi: f64,
    ea: f64,
    eb: f64,
    depth: usize,
    value: SignedLogReal,
    abs: SignedLogReal,
}

fn singular(e: f64) -> bool {
    e != 0.0 && e < SMOOTH_EXPONENT && libm::trunc(e) != e
}

struct Engine<'a, F> {
    f: &'a F,
    spec: &'a QuadratureSpec,
    evals: usize,
    peak: f64,
}

impl<F: Fn(f64) -> SignedLogReal> Engine<'_, F> {
    fn eval(&mut self, x: f64) -> SignedLogReal {
        self.evals += 1;
        let v = (self.f)(x);
        let lm = v.logmag();
        if lm > self.peak {
            self.peak = lm;
        }
        v
    }

    fn panel(&mut self, lo: f64, hi: f64, ea: f64, eb: f64, depth: usize) -> Result<Panel> {
        // Jacobi weight (1−t)^a (1+t)^b: t = +1 is the upper end.
        let a = if singular(eb) { eb } else { 0.0 };
        let b = if singular(ea) { ea } else { 0.0 };
        let rule = canonical_rule(Weight::Jacobi { a, b }, self.spec.nodes)?;
        let half = 0.5 * (hi - lo);
        let mut terms = Vec::with_capacity(rule.nodes.len());
        for (&t, w) in rule.nodes.iter().zip(&rule.weights) {
            let x = if t <= 0.0 {
                lo + half * (1.0 + t)
            } else {
                hi - half * (1.0 - t)
            };
            let fx = self.eval(x);
            if fx.is_zero() {
                continue;
            }
            let mut lg = fx.logmag() + w.logmag();
            if a != 0.0 {
                lg -= a * libm::log(1.0 - t);
            }
            if b != 0.0 {
                lg -= b * libm::log(1.0 + t);
            }
            terms.push(SignedLogReal::new(fx.sign(), lg));
        }
        let scale = libm::log(half);
        let value = logspace::sum(terms.iter().copied()).scale_exp(scale);
        let abs = logspace::sum(terms.iter().map(|t| t.abs())).scale_exp(scale);
        Ok(Panel {
            lo,
            hi,
            ea,
            eb,
            depth,
            value,
            abs,
        })
    }

    /// Marches away from `start` in direction `dir` until the integrand is far
    /// below the running peak and falling. Returns the visited abscissae.
    fn march(&mut self, start: Knot, dir: f64, step0: f64) -> Result<Vec<f64>> {
        let mut pts = Vec::new();
        let mut x = start.x;
        let mut h = step0;
        // from a zero of the integrand the first steps climb
        let mut prev = if start.exponent > 0.0 {
            f64::NEG_INFINITY
        } else {
            f64::INFINITY
        };
        for _ in 0..MAX_MARCH {
            x += dir * h;
            let v = self.eval(x).logmag();
            pts.push(x);
            if v == f64::NEG_INFINITY && self.peak == f64::NEG_INFINITY && pts.len() > 64 {
                return Ok(pts);
            }
            if v < self.peak - TAIL_DROP && v <= prev {
                return Ok(pts);
            }
            prev = v;
            h *= 1.25;
            if !x.is_finite() {
                break;
            }
        }
        Err(Error::domain(
            "integrand does not decay on an open integration range",
        ))
    }

    /// `∫` from `x0` to infinity in direction `dir`, assuming locally
    /// exponential decay beyond `x0`.
    fn tail(&mut self, x0: f64, dir: f64, h: f64) -> Result<SignedLogReal> {
        let v0 = self.eval(x0).logmag();
        let v1 = self.eval(x0 + dir * h).logmag();
        if v0 == f64::NEG_INFINITY {
            return Ok(SignedLogReal::ZERO);
        }
        let kappa = (v0 - v1) / h;
        if !(kappa > 0.0) {
            return Err(Error::domain("integrand is not decaying at the truncation point"));
        }
        let rule = canonical_rule(
            Weight::Laguerre {
                alpha: 0.0,
                scale: 1.0,
            },
            TAIL_NODES,
        )?;
        let mut terms = Vec::with_capacity(TAIL_NODES);
        for (&t, w) in rule.nodes.iter().zip(&rule.weights) {
            let fx = self.eval(x0 + dir * t / kappa);
            if !fx.is_zero() {
                terms.push(SignedLogReal::new(fx.sign(), fx.logmag() + w.logmag() + t));
            }
        }
        Ok(logspace::sum(terms).scale_exp(-libm::log(kappa)))
    }
}

fn push_segment(out: &mut Vec<(f64, f64, f64, f64)>, lo: f64, hi: f64, ea: f64, eb: f64, pieces: usize) {
    let pieces = pieces.max(1);
    let w = (hi - lo) / pieces as f64;
    for i in 0..pieces {
        let a = if i == 0 { lo } else { lo + w * i as f64 };
        let b = if i + 1 == pieces { hi } else { lo + w * (i + 1) as f64 };
        let e0 = if i == 0 { ea } else { 0.0 };
        let e1 = if i + 1 == pieces { eb } else { 0.0 };
        out.push((a, b, e0, e1));
    }
}

/// Integrates `f` over `line`.
pub fn integrate<F>(f: F, line: &Line, spec: &QuadratureSpec) -> Result<Integral>
where
    F: Fn(f64) -> SignedLogReal,
{
    spec.validate()?;
    if line.knots.is_empty() {
        return Err(Error::domain("integration line needs at least one knot"));
    }
    if line.knots.windows(2).any(|w| !(w[0].x < w[1].x)) {
        return Err(Error::domain("integration knots must be strictly increasing"));
    }
    let mut eng = Engine {
        f: &f,
        spec,
        evals: 0,
        peak: f64::NEG_INFINITY,
    };

    let mut segs: Vec<(f64, f64, f64, f64)> = Vec::new();
    for w in line.knots.windows(2) {
        push_segment(&mut segs, w[0].x, w[1].x, w[0].exponent, w[1].exponent, line.min_panels);
    }
    let mut first: Vec<Panel> = Vec::with_capacity(segs.len());
    for &(lo, hi, ea, eb) in &segs {
        first.push(eng.panel(lo, hi, ea, eb, 0)?);
    }

    let mut tails = Vec::new();
    let step = if line.step > 0.0 { line.step } else { 1.0 };
    if line.open_above {
        let k = *line.knots.last().unwrap();
        let pts = eng.march(k, 1.0, step)?;
        let mut prev = k.x;
        for (i, &x) in pts.iter().enumerate() {
            let ea = if i == 0 { k.exponent } else { 0.0 };
            first.push(eng.panel(prev, x, ea, 0.0, 0)?);
            prev = x;
        }
        let h = (pts[pts.len() - 1] - if pts.len() > 1 { pts[pts.len() - 2] } else { k.x }) * 0.05;
        tails.push(eng.tail(prev, 1.0, h)?);
    }
    if line.open_below {
        let k = line.knots[0];
        let pts = eng.march(k, -1.0, step)?;
        let mut prev = k.x;
        for (i, &x) in pts.iter().enumerate() {
            let eb = if i == 0 { k.exponent } else { 0.0 };
            first.push(eng.panel(x, prev, 0.0, eb, 0)?);
            prev = x;
        }
        let h = ((if pts.len() > 1 { pts[pts.len() - 2] } else { k.x }) - pts[pts.len() - 1]) * 0.05;
        tails.push(eng.tail(prev, -1.0, h)?);
    }

    let total_width: f64 = first.iter().map(|p| p.hi - p.lo).sum();
    let abs_total = logspace::sum(first.iter().map(|p| p.abs).chain(tails.iter().map(|t| t.abs())));
    let tol = spec.rel_tol;

    let mut accepted: Vec<SignedLogReal> = tails.clone();
    let mut err_terms: Vec<SignedLogReal> = Vec::new();
    let mut forced = false;
    let mut stack: Vec<Panel> = first.into_iter().rev().collect();
    while let Some(p) = stack.pop() {
        let mid = 0.5 * (p.lo + p.hi);
        let left = eng.panel(p.lo, mid, p.ea, 0.0, p.depth + 1)?;
        let right = eng.panel(mid, p.hi, 0.0, p.eb, p.depth + 1)?;
        let refined = left.value + right.value;
        let diff = (p.value - refined).abs();
        let local = left.abs + right.abs;
        let share = abs_total.scale_exp(libm::log((p.hi - p.lo) / total_width));
        let budget = if local.cmp_abs(share).is_gt() { local } else { share };
        let ok = diff.is_zero() || diff.logmag() <= libm::log(tol) + budget.logmag();
        if ok || p.depth >= spec.max_levels {
            if !ok {
                forced = true;
            }
            accepted.push(refined);
            err_terms.push(diff);
        } else {
            stack.push(right);
            stack.push(left);
        }
    }

    let value = logspace::sum(accepted.iter().copied());
    let err = logspace::sum(err_terms.iter().copied());
    let rel_error = if value.is_zero() {
        if err.is_zero() { 0.0 } else { f64::INFINITY }
    } else {
        libm::exp(err.logmag() - value.logmag())
    };
    if forced && rel_error > tol {
        return Err(Error::Convergence {
            estimate: value,
            rel_error,
        });
    }
    Ok(Integral {
        value,
        rel_error,
        evaluations: eng.evals,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn ln(x: f64) -> f64 {
        libm::log(x)
    }

    #[test]
    fn gamma_integral_half_line() {
        // ∫_0^∞ x^{s} e^{-x} dx = Γ(s+1)
        for &s in &[0.0, 0.5, 2.7, 19.5, 150.3, 2000.0] {
            let line = Line::half_open(vec![Knot::new(0.0, s)], libm::sqrt(s + 1.0));
            let r = integrate(
                |x: f64| SignedLogReal::from_log(s * ln(x) - x),
                &line,
                &QuadratureSpec::default(),
            )
            .unwrap();
            let exact = libm::lgamma(s + 1.0);
            assert!(
                (r.value.logmag() - exact).abs() < 1e-11 * exact.abs().max(1.0),
                "s={s}: {} vs {exact}",
                r.value.logmag()
            );
        }
    }

    #[test]
    fn beta_integral_with_singular_ends() {
        // ∫_{-1}^{1} (1-x)^a (1+x)^b dx = 2^{a+b+1} B(a+1, b+1)
        for &(a, b) in &[(-0.5, -0.5), (0.3, 7.25), (-0.9, 2.0), (30.5, 0.5)] {
            let line = Line::closed(vec![Knot::new(-1.0, b), Knot::new(1.0, a)]);
            let r = integrate(
                |x: f64| SignedLogReal::from_log(a * libm::log1p(-x) + b * libm::log1p(x)),
                &line,
                &QuadratureSpec::default(),
            )
            .unwrap();
            let exact = (a + b + 1.0) * core::f64::consts::LN_2
                + logspace::log_beta(a + 1.0, b + 1.0).unwrap();
            assert!((r.value.logmag() - exact).abs() < 1e-11, "{a} {b}");
        }
    }

    #[test]
    fn signed_integrand_and_interior_knot() {
        // ∫_0^2 |x-1|^{0.5} sign(x-1) x dx = ∫_0^1 u^{0.5}(1+u) du - ∫_0^1 u^{0.5}(1-u) du = 2·(2/5)
        let line = Line::closed(vec![
            Knot::regular(0.0),
            Knot::new(1.0, 0.5),
            Knot::regular(2.0),
        ]);
        let r = integrate(
            |x: f64| {
                let d = x - 1.0;
                SignedLogReal::from_f64(libm::copysign(libm::sqrt(d.abs()), d) * x)
            },
            &line,
            &QuadratureSpec::default(),
        )
        .unwrap();
        assert!((r.value.to_f64() - 0.8).abs() < 1e-12);
    }

    #[test]
    fn doubly_open_line() {
        // ∫ exp(-x²/2) over R = √(2π), centred far from the knot
        let line = Line::open(vec![Knot::regular(3.0)], 1.0);
        let r = integrate(
            |x: f64| SignedLogReal::from_log(-0.5 * (x - 10.0) * (x - 10.0)),
            &line,
            &QuadratureSpec::default(),
        )
        .unwrap();
        let exact = 0.5 * ln(2.0 * core::f64::consts::PI);
        assert!((r.value.logmag() - exact).abs() < 1e-12);
    }

    #[test]
    fn convergence_failure_reports_estimate() {
        let spec = QuadratureSpec {
            nodes: 2,
            max_levels: 1,
            rel_tol: 1e-14,
            split_at_roots: true,
        };
        let line = Line::closed(vec![Knot::regular(0.0), Knot::regular(50.0)]).with_min_panels(1);
        let e = integrate(|x: f64| SignedLogReal::from_f64(libm::sin(x) + 1.5), &line, &spec)
            .unwrap_err();
        assert!(matches!(e, Error::Convergence { rel_error, .. } if rel_error > 1e-14));
    }

    #[test]
    fn spec_validation() {
        let bad = QuadratureSpec {
            rel_tol: 0.0,
            ..Default::default()
        };
        assert!(bad.validate().is_err());
        let bad = QuadratureSpec {
            nodes: 1,
            ..Default::default()
        };
        assert!(bad.validate().is_err());
        assert_eq!(QuadratureSpec::default().for_dimension(1000).rel_tol, 1e-8);
        assert_eq!(QuadratureSpec::default().for_dimension(100).rel_tol, 1e-10);
    }
}
