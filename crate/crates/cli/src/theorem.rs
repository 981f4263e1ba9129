//! Oracle suites for the `J₁` and `J₂` expansions.

use hydrent_core::asymptotics::{j1_asymptotic, j2_asymptotic, J1Params, J2Params};
use hydrent_core::logspace::{log_beta, SignedLogReal};
use hydrent_core::orthopoly::{eval_gegenbauer, eval_laguerre, roots, Norm, PolynomialSpec};
use hydrent_core::quadrature::{integrate, Knot, Line, QuadratureSpec};

use crate::error::Result;

fn tight() -> QuadratureSpec {
    QuadratureSpec {
        rel_tol: 1e-13,
        max_levels: 14,
        ..Default::default()
    }
}

/// `ln J₁` by root-split quadrature.
pub fn j1_quadrature(p: &J1Params) -> Result<f64> {
    let poly = PolynomialSpec::laguerre(p.m as usize, p.alpha)?;
    let e0 = p.alpha + p.sigma - 1.0;
    let mut knots = vec![Knot::new(0.0, e0)];
    knots.extend(roots(&poly)?.into_iter().map(|r| Knot::new(r, p.kappa)));
    let line = Line::half_open(knots, (e0 + 1.0).abs().sqrt() / p.lambda).with_min_panels(8);
    let r = integrate(
        |x| match eval_laguerre(&poly, x, Norm::Standard) {
            Ok(v) => v.pow_abs(p.kappa).scale_exp(e0 * x.ln() - p.lambda * x),
            Err(_) => SignedLogReal::ZERO,
        },
        &line,
        &tight(),
    )?;
    Ok(r.value.logmag())
}

/// `ln J₂` by root-split quadrature.
pub fn j2_quadrature(p: &J2Params) -> Result<f64> {
    let poly = PolynomialSpec::gegenbauer(p.m as usize, p.alpha)?;
    let (ep, em) = (p.c * p.alpha + p.a, p.d * p.alpha + p.b);
    let mut knots = vec![Knot::new(-1.0, em)];
    knots.extend(roots(&poly)?.into_iter().map(|r| Knot::new(r, p.kappa)));
    knots.push(Knot::new(1.0, ep));
    let line = Line::closed(knots).with_min_panels(8);
    let r = integrate(
        |x| match eval_gegenbauer(&poly, x, Norm::Standard) {
            Ok(v) => v.pow_abs(p.kappa).scale_exp(ep * (-x).ln_1p() + em * x.ln_1p()),
            Err(_) => SignedLogReal::ZERO,
        },
        &line,
        &tight(),
    )?;
    Ok(r.value.logmag())
}

/// `ln J₂` for `m = 0`: `2^{x+y−1} B(x, y)` with `x = cα+a+1`, `y = dα+b+1`.
pub fn j2_beta(p: &J2Params) -> Result<f64> {
    let (x, y) = (p.c * p.alpha + p.a + 1.0, p.d * p.alpha + p.b + 1.0);
    Ok((x + y - 1.0) * core::f64::consts::LN_2 + log_beta(x, y)?)
}

/// `|asymptotic/exact − 1|` from logs.
pub fn rel_error(ln_exact: f64, ln_asym: f64) -> f64 {
    (ln_asym - ln_exact).exp_m1().abs()
}

#[derive(Clone, Debug, PartialEq)]
pub struct J1Row {
    pub params: J1Params,
    pub ln_exact: f64,
    pub err0: f64,
    pub err1: f64,
}

pub fn j1_row(sigma: f64, lambda: f64, kappa: f64, m: u32, alpha: f64) -> Result<J1Row> {
    let mut params = J1Params {
        sigma,
        lambda,
        kappa,
        m,
        alpha,
        order: 0,
    };
    let ln_exact = j1_quadrature(&params)?;
    let err0 = rel_error(ln_exact, j1_asymptotic(&params)?.logmag());
    params.order = 1;
    let err1 = rel_error(ln_exact, j1_asymptotic(&params)?.logmag());
    params.order = 0;
    Ok(J1Row {
        params,
        ln_exact,
        err0,
        err1,
    })
}

#[derive(Clone, Debug, PartialEq)]
pub struct J2Row {
    pub params: J2Params,
    pub ln_exact: f64,
    pub err: f64,
}

/// Beta oracle for `m = 0`, quadrature otherwise.
pub fn j2_row(params: J2Params) -> Result<J2Row> {
    let ln_exact = if params.m == 0 { j2_beta(&params)? } else { j2_quadrature(&params)? };
    let err = rel_error(ln_exact, j2_asymptotic(&params)?.logmag());
    Ok(J2Row { params, ln_exact, err })
}

/// The default `J₁` grid: σ ∈ {1, 2.5}, λ ∈ {0.5, 2}, κ ∈ {2, 4}, m ≤ 2.
pub fn j1_grid(alphas: &[f64]) -> Result<Vec<J1Row>> {
    let mut out = Vec::new();
    for sigma in [1.0, 2.5] {
        for lambda in [0.5, 2.0] {
            for kappa in [2.0, 4.0] {
                for m in 0..=2 {
                    for &alpha in alphas {
                        out.push(j1_row(sigma, lambda, kappa, m, alpha)?);
                    }
                }
            }
        }
    }
    Ok(out)
}

/// The default `J₂` grid: Beta cases `(a, b) ∈ {0, 1.5}²`, `(c, d) ∈ {(1,2), (1,3)}`,
/// and quadrature cases with `m ∈ {1, 2}`, κ ∈ {2, 4}.
pub fn j2_grid(alphas: &[f64]) -> Result<Vec<J2Row>> {
    let mut out = Vec::new();
    for (c, d) in [(1.0, 2.0), (1.0, 3.0)] {
        for a in [0.0, 1.5] {
            for b in [0.0, 1.5] {
                for &alpha in alphas {
                    out.push(j2_row(J2Params { a, b, c, d, kappa: 2.0, m: 0, alpha })?);
                }
            }
        }
    }
    for (c, d) in [(1.0, 2.0), (1.0, 3.0), (2.0, 1.0)] {
        for m in 1..=2 {
            for kappa in [2.0, 4.0] {
                for &alpha in alphas {
                    out.push(j2_row(J2Params {
                        a: -0.5,
                        b: 1.5,
                        c,
                        d,
                        kappa,
                        m,
                        alpha,
                    })?);
                }
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quadrature_agrees_with_beta() {
        let p = J2Params {
            a: 1.5,
            b: 0.0,
            c: 1.0,
            d: 3.0,
            kappa: 3.0,
            m: 0,
            alpha: 120.0,
        };
        assert!((j2_quadrature(&p).unwrap() - j2_beta(&p).unwrap()).abs() < 1e-11);
    }

    #[test]
    fn j1_row_m0_matches_stirling_defect() {
        let r = j1_row(1.0, 2.0, 2.0, 0, 100.0).unwrap();
        assert!((r.err0 - 1.0 / 1200.0).abs() < 1e-5);
        assert!(r.err1 < 3e-4);
    }
}
