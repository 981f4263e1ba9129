//! Gauss rules from the Jacobi matrix of the weight's orthogonal family.
//!
//! Nodes are eigenvalues of the symmetric Jacobi matrix, polished by one
//! Newton step on the orthonormal polynomial. Weights come from the
//! Christoffel function `μ0 / Σ_k q_k(x)²`, accumulated in log scale so that
//! weights far in the tail keep full relative accuracy.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::sync::Arc;
use alloc::vec::Vec;

use spin::{Mutex, Once};

use super::tridiag::symmetric_eigenvalues;
use crate::error::{Error, Result};
use crate::logspace::{log_gamma, SignedLogReal};

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Weight {
    /// `x^α e^{−λx}` on `(0, ∞)`.
    Laguerre { alpha: f64, scale: f64 },
    /// `(1−x)^a (1+x)^b` on `(−1, 1)`.
    Jacobi { a: f64, b: f64 },
    /// Unit weight on `(lo, hi)`.
    Legendre { lo: f64, hi: f64 },
}

#[derive(Clone, Debug, PartialEq)]
pub struct GaussRule {
    pub nodes: Vec<f64>,
    pub weights: Vec<SignedLogReal>,
    pub exactness: usize,
}

impl GaussRule {
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }
}

struct JacobiMatrix {
    diag: Vec<f64>,
    // off2[k] = b_{k+1}, the squared coupling between rows k and k+1; one
    // extra entry so the degree-n polynomial can be evaluated.
    off2: Vec<f64>,
    ln_mu0: f64,
}

fn laguerre_matrix(alpha: f64, n: usize) -> Result<JacobiMatrix> {
    let diag = (0..n).map(|k| 2.0 * k as f64 + alpha + 1.0).collect();
    let off2 = (1..=n)
        .map(|k| {
            let k = k as f64;
            k * (k + alpha)
        })
        .collect();
    Ok(JacobiMatrix {
        diag,
        off2,
        ln_mu0: log_gamma(alpha + 1.0)?,
    })
}

fn jacobi_matrix(a: f64, b: f64, n: usize) -> Result<JacobiMatrix> {
    let ab = a + b;
    let mut diag = Vec::with_capacity(n);
    for k in 0..n {
        let kf = k as f64;
        let v = if k == 0 {
            (b - a) / (ab + 2.0)
        } else if a == b {
            0.0
        } else {
            (b * b - a * a) / ((2.0 * kf + ab) * (2.0 * kf + ab + 2.0))
        };
        diag.push(v);
    }
    let mut off2 = Vec::with_capacity(n);
    for k in 1..=n {
        let kf = k as f64;
        let v = if k == 1 {
            4.0 * (1.0 + a) * (1.0 + b) / ((2.0 + ab) * (2.0 + ab) * (3.0 + ab))
        } else {
            let s = 2.0 * kf + ab;
            4.0 * kf * (kf + a) * (kf + b) * (kf + ab) / (s * s * (s + 1.0) * (s - 1.0))
        };
        off2.push(v);
    }
    let ln_mu0 = (ab + 1.0) * core::f64::consts::LN_2 + log_gamma(a + 1.0)? + log_gamma(b + 1.0)?
        - log_gamma(ab + 2.0)?;
    Ok(JacobiMatrix { diag, off2, ln_mu0 })
}

/// Orthonormal recurrence at `x`: returns `(ln Σ_{k<n} q_k², q_n, q_n')`
/// where `q_n` and `q_n'` share an arbitrary common scale.
fn christoffel(jm: &JacobiMatrix, n: usize, x: f64) -> (f64, f64, f64) {
    let (mut q_prev, mut q) = (0.0_f64, 1.0_f64);
    let (mut d_prev, mut d) = (0.0_f64, 0.0_f64);
    let mut sum = 0.0_f64;
    let mut ln_scale = 0.0_f64;
    for k in 0..n {
        sum += q * q;
        let sb_next = libm::sqrt(jm.off2[k]);
        let sb = if k == 0 { 0.0 } else { libm::sqrt(jm.off2[k - 1]) };
        let q_next = ((x - jm.diag[k]) * q - sb * q_prev) / sb_next;
        let d_next = (q + (x - jm.diag[k]) * d - sb * d_prev) / sb_next;
        q_prev = q;
        q = q_next;
        d_prev = d;
        d = d_next;
        let big = q.abs().max(q_prev.abs());
        if big > 1e100 {
            q /= big;
            q_prev /= big;
            d /= big;
            d_prev /= big;
            sum /= big * big;
            ln_scale += libm::log(big);
        }
    }
    (libm::log(sum) + 2.0 * ln_scale, q, d)
}

fn build(jm: &JacobiMatrix, n: usize, lo: f64, hi: f64) -> Result<GaussRule> {
    let off: Vec<f64> = jm.off2[..n - 1].iter().map(|&b| libm::sqrt(b)).collect();
    let mut nodes = symmetric_eigenvalues(&jm.diag[..n], &off)?;
    for i in 0..n {
        let (_, q, dq) = christoffel(jm, n, nodes[i]);
        if dq != 0.0 && q.is_finite() && dq.is_finite() {
            let step = q / dq;
            let left = if i > 0 { nodes[i - 1] } else { lo };
            let right = if i + 1 < n { nodes[i + 1] } else { hi };
            let cand = nodes[i] - step;
            let gap = (nodes[i] - left).min(right - nodes[i]);
            if step.abs() < 0.5 * gap && cand > lo && cand < hi {
                nodes[i] = cand;
            }
        }
    }
    let weights = nodes
        .iter()
        .map(|&x| SignedLogReal::from_log(jm.ln_mu0 - christoffel(jm, n, x).0))
        .collect();
    Ok(GaussRule {
        nodes,
        weights,
        exactness: 2 * n - 1,
    })
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum Key {
    Laguerre { alpha: u64, n: usize },
    Jacobi { a: u64, b: u64, n: usize },
}

type Slot = Arc<Once<Result<GaussRule>>>;

static CACHE: Mutex<BTreeMap<Key, Slot>> = Mutex::new(BTreeMap::new());

fn cached(key: Key, make: impl FnOnce() -> Result<GaussRule>) -> Result<Arc<Once<Result<GaussRule>>>> {
    let slot = {
        let mut map = CACHE.lock();
        map.entry(key).or_insert_with(|| Arc::new(Once::new())).clone()
    };
    slot.call_once(make);
    Ok(slot)
}

/// Drops every cached rule.
pub fn clear_cache() {
    CACHE.lock().clear();
}

fn validate(weight: Weight, count: usize) -> Result<()> {
    if count == 0 {
        return Err(Error::domain("a Gauss rule needs at least one node"));
    }
    let ok = match weight {
        Weight::Laguerre { alpha, scale } => alpha > -1.0 && scale > 0.0 && scale.is_finite(),
        Weight::Jacobi { a, b } => a > -1.0 && b > -1.0 && a.is_finite() && b.is_finite(),
        Weight::Legendre { lo, hi } => lo < hi && lo.is_finite() && hi.is_finite(),
    };
    if ok {
        Ok(())
    } else {
        Err(Error::domain(format!("invalid Gauss weight {weight:?}")))
    }
}

/// Rule on the reference support (`(0,∞)` with unit scale, or `(−1,1)`),
/// shared through the process-wide cache.
pub(crate) fn canonical_rule(weight: Weight, count: usize) -> Result<CanonicalRule> {
    validate(weight, count)?;
    let slot = match weight {
        Weight::Laguerre { alpha, .. } => cached(
            Key::Laguerre {
                alpha: alpha.to_bits(),
                n: count,
            },
            || build(&laguerre_matrix(alpha, count)?, count, 0.0, f64::INFINITY),
        )?,
        Weight::Jacobi { a, b } => cached(
            Key::Jacobi {
                a: a.to_bits(),
                b: b.to_bits(),
                n: count,
            },
            || build(&jacobi_matrix(a, b, count)?, count, -1.0, 1.0),
        )?,
        Weight::Legendre { .. } => cached(
            Key::Jacobi {
                a: 0.0f64.to_bits(),
                b: 0.0f64.to_bits(),
                n: count,
            },
            || build(&jacobi_matrix(0.0, 0.0, count)?, count, -1.0, 1.0),
        )?,
    };
    match slot.get() {
        Some(Ok(_)) => Ok(CanonicalRule(slot)),
        Some(Err(e)) => Err(e.clone()),
        None => unreachable!("Once completed above"),
    }
}

/// Handle to a cached reference rule.
#[derive(Clone)]
pub(crate) struct CanonicalRule(Slot);

impl core::ops::Deref for CanonicalRule {
    type Target = GaussRule;
    fn deref(&self) -> &GaussRule {
        match self.0.get() {
            Some(Ok(rule)) => rule,
            _ => unreachable!("only successful rules are handed out"),
        }
    }
}

/// Gauss rule for `weight` with `count` nodes, mapped to the weight's support.
pub fn gauss_rule(weight: Weight, count: usize) -> Result<GaussRule> {
    let base = canonical_rule(weight, count)?;
    let mut rule = (*base).clone();
    match weight {
        Weight::Laguerre { alpha, scale } => {
            let shift = -(alpha + 1.0) * libm::log(scale);
            for x in &mut rule.nodes {
                *x /= scale;
            }
            for w in &mut rule.weights {
                *w = w.scale_exp(shift);
            }
        }
        Weight::Jacobi { .. } => {}
        Weight::Legendre { lo, hi } => {
            let half = 0.5 * (hi - lo);
            let mid = 0.5 * (hi + lo);
            for x in &mut rule.nodes {
                *x = mid + half * *x;
            }
            let shift = libm::log(half);
            for w in &mut rule.weights {
                *w = w.scale_exp(shift);
            }
        }
    }
    Ok(rule)
}
